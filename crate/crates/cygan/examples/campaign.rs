//! Run the seeded verification campaigns in-process and print the JSON
//! report. The same campaigns back the `cygan campaign` subcommand.
//!
//! Run with: `cargo run --example campaign`

use cygan::harness::report::reports_to_json;
use cygan::harness::{run_campaign, CampaignConfig, Suite};

fn main() {
    let cfg = CampaignConfig {
        seed: 42,
        samples: 2_000,
        tolerance: 1e-9,
        suite: Suite::All,
        coordinate_scale: 10.0,
        collect_rows: false,
    };
    let outputs = run_campaign(&cfg).expect("valid configuration");
    for o in &outputs {
        println!(
            "suite {:<11} {:>7} samples  {:>2} violations  {:>5} rejections  \
             min_slack {:+.3e}  max_slack {:+.3e}",
            o.report.suite,
            o.report.samples,
            o.report.violations.len(),
            o.report.rejections,
            o.report.min_slack,
            o.report.max_slack,
        );
    }
    let reports: Vec<_> = outputs.into_iter().map(|o| o.report).collect();
    println!("\n{}", reports_to_json(&reports));
}
