//! R-circles and Ptolemaeus' theorem: on a circle, the separation pattern
//! of four points decides which of the three equalities X1 - X2 = 1,
//! X2 - X1 = 1, X1 + X2 = 1 holds; off a circle none does.
//!
//! Run with: `cargo run --example rcircles`

use cygan::rcircle::{
    circle_point, ptolemaeus_case, quadruple_on_circle, CircleParam, RCircle, CASE_TOLERANCE,
};
use cygan::transform::{Generator, GeneratorWord};
use cygan::{ClosurePoint, Quadruple};

fn classify(circle: &RCircle, label: &str, ts: [CircleParam; 4]) {
    let (q, pattern) = quadruple_on_circle(circle, ts[0], ts[1], ts[2], ts[3]).unwrap();
    match ptolemaeus_case(&q, pattern, CASE_TOLERANCE) {
        Ok(rep) => println!(
            "{label}: separation {pattern} -> case {} (X1={:.6}, X2={:.6}, matches: {})",
            rep.case, rep.x1, rep.x2, rep.matches_pattern
        ),
        Err(e) => println!("{label}: {e}"),
    }
}

fn main() {
    let fin = CircleParam::Finite;

    // the standard circle of height zero: the real axis plus infinity
    let standard = RCircle::standard(0.0);
    classify(
        &standard,
        "separated   ",
        [CircleParam::Infinity, fin(2.0), fin(1.0), fin(0.0)],
    );
    classify(
        &standard,
        "nested      ",
        [CircleParam::Infinity, fin(1.0), fin(2.0), fin(0.0)],
    );
    classify(
        &standard,
        "straddling  ",
        [CircleParam::Infinity, fin(2.0), fin(-1.0), fin(0.0)],
    );

    // a finite circle: translate off the axis, then invert inside the
    // horosphere; its points close up through the height-u origin
    let word = GeneratorWord::new(vec![
        Generator::translation(0.0, 1.0, 0.0),
        Generator::InversionHoro,
    ]);
    let finite_circle = RCircle::new(1.5, word).unwrap();
    println!("\na finite circle of height 1.5, sampled:");
    for k in -3..=3 {
        let p = circle_point(&finite_circle, fin(k as f64)).unwrap();
        println!("    t = {k:2}: {p}");
    }
    classify(
        &finite_circle,
        "finite circle",
        [fin(-2.0), fin(-0.5), fin(0.5), fin(2.0)],
    );

    // four points not on any circle satisfy no equality
    let off = Quadruple::new(
        ClosurePoint::origin(),
        ClosurePoint::from_coords(1.0, 0.0, 0.0, 0.0),
        ClosurePoint::from_coords(0.0, 1.0, 0.0, 0.0),
        ClosurePoint::infinity(),
    )
    .unwrap();
    let err = ptolemaeus_case(
        &off,
        cygan::rcircle::SeparationPattern::OneThree,
        CASE_TOLERANCE,
    );
    println!("\noff-circle quadruple: {}", err.unwrap_err());
}
