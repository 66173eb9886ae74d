//! The five verification suites.
//!
//! Per-suite slack statistics:
//! - `inequality`: `min_slack` is the minimum of `x1 + x2 - 1`, `max_slack`
//!   the maximum of `|x1 - x2| - 1` over all samples.
//! - `equality`: `max_slack` is the largest residual of the predicted
//!   equality case, `min_slack` the smallest margin by which the two other
//!   cases fail.
//! - `triangle`: `min_slack` is the smallest triangle slack (random triples
//!   and perturbed equality configurations), `max_slack` the largest
//!   residual of a constructed equality configuration.
//! - `invariance`: `min_slack`/`max_slack` bound the observed cross-ratio
//!   drifts and inversion-identity deviations.
//! - `oracle`: `max_slack` is the worst relative deviation between the two
//!   distance routes, `min_slack` the smallest interior-interior mismatch
//!   (which must stay above tolerance).

use std::time::Instant;

use rand::Rng;

use crate::cross_ratio::x1_x2;
use crate::error::{Error, Result};
use crate::harness::report::{CampaignReport, SampleRow, ViolationRecord};
use crate::harness::sampler::{
    is_well_conditioned, pair_well_conditioned, sample_circle_word, sample_common_height_quadruple,
    sample_diagonal_word, sample_inversion_safe_quadruple, sample_point, sample_quadruple,
    substream, Region, MIN_SEPARATION,
};
use crate::harness::CampaignConfig;
use crate::heisenberg::{d_heis, d_heis_via_lift, koranyi_gauge};
use crate::metric::{hermitian_pairing_modulus, rho_finite};
use crate::point::ClosurePoint;
use crate::quadruple::Quadruple;
use crate::rcircle::{ptolemaeus_case, separation_pattern, CircleParam, RCircle};
use crate::transform::{apply_generator, Generator, GeneratorWord};

/// Tolerance of the oracle suite, pinned independently of the campaign
/// tolerance flag.
pub const ORACLE_TOLERANCE: f64 = 1e-12;

const SALT_INEQUALITY: u64 = 0x01;
const SALT_EQUALITY: u64 = 0x02;
const SALT_EQUALITY_CONTROL: u64 = 0x12;
const SALT_TRIANGLE: u64 = 0x03;
const SALT_TRIANGLE_EQ: u64 = 0x13;
const SALT_INVARIANCE_WORDS: u64 = 0x04;
const SALT_INVARIANCE_INV: u64 = 0x14;
const SALT_INVARIANCE_SPHERE: u64 = 0x24;
const SALT_ORACLE_BOUNDARY: u64 = 0x05;
const SALT_ORACLE_MIXED: u64 = 0x15;
const SALT_ORACLE_INTERIOR: u64 = 0x25;

/// A suite's report plus optional per-sample rows for CSV output.
#[derive(Debug, Clone)]
pub struct CampaignOutput {
    pub report: CampaignReport,
    pub rows: Vec<SampleRow>,
}

/// Outcome of the two cross-ratio bounds on one quadruple.
#[derive(Debug, Clone, Copy)]
pub struct InequalityCheck {
    pub x1: f64,
    pub x2: f64,
    /// `x1 + x2 - 1`; nonnegative up to tolerance.
    pub sum_slack: f64,
    /// `|x1 - x2| - 1`; nonpositive up to tolerance.
    pub diff_slack: f64,
    pub pass: bool,
}

pub fn check_ptolemaean_inequality(q: &Quadruple, tol: f64) -> Result<InequalityCheck> {
    let (x1, x2) = x1_x2(q)?.as_f64();
    let sum_slack = x1 + x2 - 1.0;
    let diff_slack = (x1 - x2).abs() - 1.0;
    Ok(InequalityCheck {
        x1,
        x2,
        sum_slack,
        diff_slack,
        pass: sum_slack >= -tol && diff_slack <= tol,
    })
}

/// The six-distance product form of the inequality, evaluated for all three
/// pairings. Not applicable to quadruples containing infinity.
#[derive(Debug, Clone, Copy)]
pub struct ProductFormCheck {
    pub pass: bool,
    /// Smallest of the three product slacks `(sum of two) - (third)`.
    pub min_slack: f64,
}

pub fn check_equivalent_ptolemaean_form(q: &Quadruple, tol: f64) -> Option<ProductFormCheck> {
    let p = q.points();
    if p.iter().any(ClosurePoint::is_infinity) {
        return None;
    }
    let d = |i: usize, j: usize| rho_finite(&p[i], &p[j]);
    let e1 = d(0, 1) * d(2, 3);
    let e2 = d(0, 2) * d(1, 3);
    let e3 = d(0, 3) * d(1, 2);
    let scale = e1.max(e2).max(e3).max(1.0);
    let min_slack = (e1 + e3 - e2).min(e2 + e3 - e1).min(e1 + e2 - e3);
    Some(ProductFormCheck {
        pass: min_slack >= -tol * scale,
        min_slack,
    })
}

fn violation(
    points: &[ClosurePoint],
    word: Option<&GeneratorWord>,
    values: Vec<f64>,
    slack: f64,
) -> ViolationRecord {
    let mut inputs: Vec<String> = points.iter().map(|p| p.to_string()).collect();
    if let Some(w) = word {
        inputs.push(format!("word:{w}"));
    }
    ViolationRecord {
        inputs,
        values,
        slack,
    }
}

struct Stats {
    violations: Vec<ViolationRecord>,
    rows: Vec<SampleRow>,
    rejections: usize,
    max_slack: f64,
    min_slack: f64,
}

impl Stats {
    fn new() -> Self {
        Self {
            violations: Vec::new(),
            rows: Vec::new(),
            rejections: 0,
            max_slack: f64::NEG_INFINITY,
            min_slack: f64::INFINITY,
        }
    }

    fn finish(
        self,
        suite: &str,
        cfg: &CampaignConfig,
        samples: usize,
        tolerance: f64,
        start: Instant,
    ) -> CampaignOutput {
        // keep the report JSON-clean if a bound was never updated
        let max_slack = if self.max_slack.is_finite() {
            self.max_slack
        } else {
            0.0
        };
        let min_slack = if self.min_slack.is_finite() {
            self.min_slack
        } else {
            0.0
        };
        CampaignOutput {
            report: CampaignReport {
                suite: suite.to_string(),
                seed: cfg.seed,
                samples,
                tolerance,
                violations: self.violations,
                max_slack,
                min_slack,
                rejections: self.rejections,
                elapsed_ms: start.elapsed().as_millis() as u64,
            },
            rows: self.rows,
        }
    }
}

/// Theorem suite for the two cross-ratio bounds over random closure
/// quadruples, with the six-distance product form cross-checked on every
/// all-finite draw.
pub fn check_inequality_suite(cfg: &CampaignConfig) -> CampaignOutput {
    let start = Instant::now();
    let mut st = Stats::new();
    for i in 0..cfg.samples {
        let mut rng = substream(cfg.seed, SALT_INEQUALITY, i as u64);
        let q = sample_quadruple(
            &mut rng,
            cfg.coordinate_scale,
            Region::ClosureWithInfinity,
            &mut st.rejections,
        );
        match check_ptolemaean_inequality(&q, cfg.tolerance) {
            Ok(chk) => {
                st.min_slack = st.min_slack.min(chk.sum_slack);
                st.max_slack = st.max_slack.max(chk.diff_slack);
                let slack = chk.sum_slack.min(-chk.diff_slack);
                if !chk.pass {
                    st.violations
                        .push(violation(q.points(), None, vec![chk.x1, chk.x2], slack));
                }
                if let Some(pf) = check_equivalent_ptolemaean_form(&q, cfg.tolerance) {
                    if pf.pass != chk.pass {
                        st.violations.push(violation(
                            q.points(),
                            None,
                            vec![chk.x1, chk.x2, pf.min_slack],
                            pf.min_slack,
                        ));
                    }
                }
                if cfg.collect_rows {
                    st.rows.push(SampleRow {
                        suite: "inequality",
                        index: i,
                        x1: chk.x1,
                        x2: chk.x2,
                        slack,
                    });
                }
            }
            Err(_) => st
                .violations
                .push(violation(q.points(), None, vec![], -1.0)),
        }
    }
    st.finish("inequality", cfg, cfg.samples, cfg.tolerance, start)
}

fn sample_finite_point(rng: &mut impl Rng, scale: f64, boundary_share: f64) -> ClosurePoint {
    if rng.gen::<f64>() < boundary_share {
        sample_point(rng, scale, Region::Boundary)
    } else {
        sample_point(rng, scale, Region::Interior)
    }
}

/// Triangle inequality on random finite triples plus the constructed
/// equality locus and its four strictness-restoring perturbations.
pub fn check_triangle_suite(cfg: &CampaignConfig) -> CampaignOutput {
    let start = Instant::now();
    let mut st = Stats::new();
    let scale = cfg.coordinate_scale;

    for i in 0..cfg.samples {
        let mut rng = substream(cfg.seed, SALT_TRIANGLE, i as u64);
        let p1 = sample_finite_point(&mut rng, scale, 0.3);
        let p2 = sample_finite_point(&mut rng, scale, 0.3);
        let p3 = sample_finite_point(&mut rng, scale, 0.3);
        let a = rho_finite(&p1, &p2);
        let b = rho_finite(&p1, &p3);
        let c = rho_finite(&p3, &p2);
        let side_scale = a.max(b).max(c).max(1.0);
        let slack = (b + c - a).min(a + c - b).min(a + b - c);
        st.min_slack = st.min_slack.min(slack);
        if slack < -cfg.tolerance * side_scale {
            st.violations
                .push(violation(&[p1, p2, p3], None, vec![a, b, c], slack));
        }
        if cfg.collect_rows {
            st.rows.push(SampleRow {
                suite: "triangle",
                index: i,
                x1: a,
                x2: b + c,
                slack,
            });
        }
    }

    // constructed equality configurations: opposite-sign real zeta at a
    // common height, with the third point on the vertical axis
    let n_cfg = (cfg.samples / 100).max(1);
    for j in 0..n_cfg {
        let mut rng = substream(cfg.seed, SALT_TRIANGLE_EQ, j as u64);
        let u = rng.gen_range(0.0..=scale);
        let a = rng.gen_range(0.3..=2.3);
        let b = rng.gen_range(0.3..=2.3);
        let p1 = ClosurePoint::from_coords(a, 0.0, 0.0, u);
        let p2 = ClosurePoint::from_coords(-b, 0.0, 0.0, u);
        let p3 = ClosurePoint::from_coords(0.0, 0.0, 0.0, u);
        let residual = (rho_finite(&p1, &p2) - rho_finite(&p1, &p3) - rho_finite(&p3, &p2)).abs();
        st.max_slack = st.max_slack.max(residual);
        if residual > 1e-10 {
            st.violations
                .push(violation(&[p1, p2, p3], None, vec![residual], residual));
        }

        // each perturbation must restore a strictly positive slack
        let eps = rng.gen_range(1e-3..=1e-2);
        let perturbed = [
            ClosurePoint::from_coords(a, 0.0, eps, u), // nonzero v
            ClosurePoint::from_coords(a, 0.0, 0.0, u + eps), // unequal heights
            ClosurePoint::from_coords(a, eps, 0.0, u), // nonreal zeta
        ];
        for (k, p1p) in perturbed.iter().enumerate() {
            let margin = rho_finite(p1p, &p3) + rho_finite(&p3, &p2) - rho_finite(p1p, &p2);
            st.min_slack = st.min_slack.min(margin);
            if margin <= 0.0 {
                st.violations.push(violation(
                    &[*p1p, p2, p3],
                    None,
                    vec![k as f64, margin],
                    margin,
                ));
            }
        }
        // same-sign zeta
        let p2p = ClosurePoint::from_coords(b, 0.0, 0.0, u);
        let margin = rho_finite(&p1, &p3) + rho_finite(&p3, &p2p) - rho_finite(&p1, &p2p);
        st.min_slack = st.min_slack.min(margin);
        if margin <= 0.0 {
            st.violations
                .push(violation(&[p1, p2p, p3], None, vec![3.0, margin], margin));
        }
    }

    st.finish("triangle", cfg, cfg.samples + n_cfg, cfg.tolerance, start)
}

/// Stage-walk a word with conditioning guards: coordinates stay under the
/// cap and the horospherical inversion is never applied near its excluded
/// point. `None` marks a draw to reject, not an error.
fn apply_word_guarded(w: &GeneratorWord, p: &ClosurePoint, coord_cap: f64) -> Option<ClosurePoint> {
    let mut cur = *p;
    for g in &w.generators {
        if matches!(g, Generator::InversionHoro) {
            if let ClosurePoint::Finite { zeta, v, u } = cur {
                let gauge = koranyi_gauge(&crate::point::HeisenbergPoint::new(zeta, v));
                if u > 0.0 && gauge < MIN_SEPARATION {
                    return None;
                }
                if u == 0.0 && gauge > 0.0 && gauge < MIN_SEPARATION {
                    return None;
                }
            }
        }
        cur = apply_generator(g, &cur).ok()?;
        if let ClosurePoint::Finite { zeta, v, u } = cur {
            if zeta.re.abs().max(zeta.im.abs()).max(v.abs()).max(u) > coord_cap {
                return None;
            }
        }
    }
    Some(cur)
}

fn map_quadruple_guarded(w: &GeneratorWord, q: &Quadruple, coord_cap: f64) -> Option<Quadruple> {
    let mut images = [ClosurePoint::Infinity; 4];
    for (i, p) in q.points().iter().enumerate() {
        images[i] = apply_word_guarded(w, p, coord_cap)?;
    }
    if !is_well_conditioned(&images) {
        return None;
    }
    Quadruple::from_array(images).ok()
}

fn rel_drift(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.max(b)
}

/// Invariance of the cross-ratio pair under diagonal words, the closure
/// inversion distance identities, and the fixing of the unit Cygan sphere.
pub fn check_invariance_suite(cfg: &CampaignConfig) -> CampaignOutput {
    let start = Instant::now();
    let mut st = Stats::new();
    let scale = cfg.coordinate_scale;
    let o = ClosurePoint::origin();

    // diagonal action of random words. Three flavors, each paired with the
    // domain on which the invariance is an identity of the metric:
    // similarity words act on arbitrary closure quadruples; words with the
    // closure inversion act on quadruples with at most one interior point;
    // words with the horospherical inversion act on common-height
    // quadruples.
    for i in 0..cfg.samples {
        let mut rng = substream(cfg.seed, SALT_INVARIANCE_WORDS, i as u64);
        let mut done = false;
        for _ in 0..1_000 {
            let flavor = rng.gen_range(0..3u8);
            let (word, q) = match flavor {
                0 => {
                    let mut w = sample_diagonal_word(&mut rng, 5);
                    w.generators
                        .retain(|g| !matches!(g, Generator::InversionClosure));
                    let q = sample_quadruple(
                        &mut rng,
                        scale,
                        Region::ClosureWithInfinity,
                        &mut st.rejections,
                    );
                    (w, q)
                }
                1 => {
                    let w = sample_diagonal_word(&mut rng, 5);
                    let q = sample_inversion_safe_quadruple(&mut rng, scale, &mut st.rejections);
                    (w, q)
                }
                _ => {
                    let w = sample_circle_word(&mut rng, 4, true);
                    let u = scale * (1.0 - rng.gen::<f64>());
                    let q = sample_common_height_quadruple(&mut rng, scale, u, &mut st.rejections);
                    (w, q)
                }
            };
            let mapped = match map_quadruple_guarded(&word, &q, 1e4) {
                Some(m) => m,
                None => {
                    st.rejections += 1;
                    continue;
                }
            };
            let (x1, x2) = x1_x2(&q).expect("valid quadruple").as_f64();
            let (y1, y2) = x1_x2(&mapped).expect("valid quadruple").as_f64();
            let drift = rel_drift(x1, y1).max(rel_drift(x2, y2));
            st.max_slack = st.max_slack.max(drift);
            st.min_slack = st.min_slack.min(drift);
            if drift > cfg.tolerance {
                st.violations.push(violation(
                    q.points(),
                    Some(&word),
                    vec![x1, x2, y1, y2],
                    drift,
                ));
            }
            if cfg.collect_rows {
                st.rows.push(SampleRow {
                    suite: "invariance",
                    index: i,
                    x1: y1,
                    x2: y2,
                    slack: drift,
                });
            }
            done = true;
            break;
        }
        assert!(done, "invariance sampling exhausted its rejection budget");
    }

    // closure inversion distance identities. The one-point identity holds
    // on the whole closure; the two-point identity holds exactly when at
    // least one point of the pair is on the boundary, so one draw is
    // always a boundary point.
    for i in 0..cfg.samples {
        let mut rng = substream(cfg.seed, SALT_INVARIANCE_INV, i as u64);
        let (p, q) = loop {
            let b = sample_point(&mut rng, scale, Region::Boundary);
            let other = sample_finite_point(&mut rng, scale, 0.3);
            let (p, q) = if rng.gen_bool(0.5) {
                (b, other)
            } else {
                (other, b)
            };
            if is_well_conditioned(&[p, q, o]) {
                break (p, q);
            }
            st.rejections += 1;
        };
        let inv = Generator::InversionClosure;
        let ip = apply_generator(&inv, &p).expect("total");
        let iq = apply_generator(&inv, &q).expect("total");
        let e1 = (rho_finite(&ip, &o) * rho_finite(&p, &o) - 1.0).abs();
        let rpq = rho_finite(&p, &q);
        let e2 = (rho_finite(&ip, &iq) * rho_finite(&p, &o) * rho_finite(&o, &q) - rpq).abs()
            / rpq.max(1.0);
        st.max_slack = st.max_slack.max(e1.max(e2));
        if e1 > cfg.tolerance || e2 > cfg.tolerance {
            st.violations
                .push(violation(&[p, q], None, vec![e1, e2], e1.max(e2)));
        }
    }

    // the unit Cygan sphere is fixed pointwise in distance from o
    let n_sphere = (cfg.samples / 10).max(1);
    for i in 0..n_sphere {
        let mut rng = substream(cfg.seed, SALT_INVARIANCE_SPHERE, i as u64);
        let p = loop {
            let p = sample_finite_point(&mut rng, scale, 0.3);
            if rho_finite(&p, &o) >= MIN_SEPARATION {
                break p;
            }
            st.rejections += 1;
        };
        let delta = 1.0 / rho_finite(&p, &o);
        let s = apply_generator(&Generator::Dilation { delta }, &p).expect("total");
        let on_sphere = (rho_finite(&s, &o) - 1.0).abs();
        let img = apply_generator(&Generator::InversionClosure, &s).expect("total");
        let fixed = (rho_finite(&img, &o) - 1.0).abs();
        st.max_slack = st.max_slack.max(fixed);
        if on_sphere > 1e-12 || fixed > 1e-12 {
            st.violations
                .push(violation(&[s], None, vec![on_sphere, fixed], fixed));
        }
    }

    st.finish(
        "invariance",
        cfg,
        cfg.samples * 2 + n_sphere,
        cfg.tolerance,
        start,
    )
}

/// The three equality cases on random R-circles, plus off-circle negative
/// controls that must satisfy none of them.
pub fn check_ptolemaeus_suite(cfg: &CampaignConfig) -> CampaignOutput {
    let start = Instant::now();
    let mut st = Stats::new();
    let scale = cfg.coordinate_scale;

    for i in 0..cfg.samples {
        let mut rng = substream(cfg.seed, SALT_EQUALITY, i as u64);
        let mut done = false;
        'attempt: for _ in 0..1_000 {
            let height = if rng.gen::<f64>() < 0.25 {
                0.0
            } else {
                scale * (1.0 - rng.gen::<f64>())
            };
            let force_horo = rng.gen_bool(0.5);
            let word = sample_circle_word(&mut rng, 4, force_horo);
            let circle = RCircle::new(height, word).expect("no closure inversion");
            let allow_inf = !circle.word().contains_horo_inversion() || circle.base_height() == 0.0;
            let inf_slot = if allow_inf && rng.gen::<f64>() < 0.15 {
                Some(rng.gen_range(0..4usize))
            } else {
                None
            };
            let mut params = [CircleParam::Infinity; 4];
            for (k, t) in params.iter_mut().enumerate() {
                if Some(k) == inf_slot {
                    continue;
                }
                *t = CircleParam::Finite(rng.gen_range(-scale..=scale));
            }
            for a in 0..4 {
                for b in (a + 1)..4 {
                    if let (CircleParam::Finite(x), CircleParam::Finite(y)) = (params[a], params[b])
                    {
                        if (x - y).abs() < 0.05 {
                            st.rejections += 1;
                            continue 'attempt;
                        }
                    }
                }
            }
            let mut images = [ClosurePoint::Infinity; 4];
            for (k, t) in params.iter().enumerate() {
                let standard = crate::rcircle::standard_point(circle.base_height(), *t);
                match apply_word_guarded(circle.word(), &standard, 1e4) {
                    Some(p) => images[k] = p,
                    None => {
                        st.rejections += 1;
                        continue 'attempt;
                    }
                }
            }
            if !is_well_conditioned(&images) {
                st.rejections += 1;
                continue 'attempt;
            }
            let q = match Quadruple::from_array(images) {
                Ok(q) => q,
                Err(_) => {
                    st.rejections += 1;
                    continue 'attempt;
                }
            };
            let pattern = separation_pattern(params[0], params[1], params[2], params[3])
                .expect("distinct parameters");
            match ptolemaeus_case(&q, pattern, cfg.tolerance) {
                Err(Error::NoEqualityHolds { r1, r2, r3 }) => {
                    st.violations.push(violation(
                        q.points(),
                        Some(circle.word()),
                        vec![r1, r2, r3],
                        -r1.min(r2).min(r3),
                    ));
                }
                Err(_) => {
                    st.violations
                        .push(violation(q.points(), Some(circle.word()), vec![], -1.0));
                }
                Ok(rep) => {
                    let case_scale = rep.x1.max(rep.x2).max(1.0);
                    st.max_slack = st.max_slack.max(rep.residual());
                    st.min_slack = st.min_slack.min(rep.margin());
                    if !rep.matches_pattern {
                        st.violations.push(violation(
                            q.points(),
                            Some(circle.word()),
                            vec![rep.x1, rep.x2],
                            rep.residual(),
                        ));
                    } else if rep.margin() <= cfg.tolerance * case_scale {
                        st.violations.push(violation(
                            q.points(),
                            Some(circle.word()),
                            vec![rep.x1, rep.x2, rep.margin()],
                            rep.margin(),
                        ));
                    }
                    if cfg.collect_rows {
                        st.rows.push(SampleRow {
                            suite: "equality",
                            index: i,
                            x1: rep.x1,
                            x2: rep.x2,
                            slack: rep.residual(),
                        });
                    }
                }
            }
            done = true;
            break;
        }
        assert!(done, "circle sampling exhausted its rejection budget");
    }

    // negative controls: bend the second point off the circle
    let n_ctrl = (cfg.samples / 10).max(1);
    for j in 0..n_ctrl {
        let mut rng = substream(cfg.seed, SALT_EQUALITY_CONTROL, j as u64);
        let u = rng.gen_range(0.0..=scale);
        let x3 = rng.gen_range(0.5..=2.0);
        let x2 = x3 + rng.gen_range(0.5..=2.0);
        let y = rng.gen_range(0.1..=1.0);
        let q = Quadruple::new(
            ClosurePoint::Infinity,
            ClosurePoint::from_coords(x2, y, 0.0, u),
            ClosurePoint::from_coords(x3, 0.0, 0.0, u),
            ClosurePoint::from_coords(0.0, 0.0, 0.0, u),
        )
        .expect("distinct by construction");
        let pattern = separation_pattern(
            CircleParam::Infinity,
            CircleParam::Finite(x2),
            CircleParam::Finite(x3),
            CircleParam::Finite(0.0),
        )
        .expect("distinct parameters");
        match ptolemaeus_case(&q, pattern, cfg.tolerance) {
            Err(Error::NoEqualityHolds { .. }) => {}
            Err(_) => st
                .violations
                .push(violation(q.points(), None, vec![], -1.0)),
            Ok(rep) => st.violations.push(violation(
                q.points(),
                None,
                vec![rep.x1, rep.x2],
                rep.residual(),
            )),
        }
    }

    st.finish("equality", cfg, cfg.samples + n_ctrl, cfg.tolerance, start)
}

/// Agreement of the gauge and Hermitian-form distance routes, and the
/// strictness of the pairing identity away from the boundary.
pub fn check_oracle_suite(cfg: &CampaignConfig) -> CampaignOutput {
    let start = Instant::now();
    let mut st = Stats::new();
    let scale = cfg.coordinate_scale;

    // boundary pairs: gauge form against lift form
    for i in 0..cfg.samples {
        let mut rng = substream(cfg.seed, SALT_ORACLE_BOUNDARY, i as u64);
        let (p, q) = loop {
            let p = sample_point(&mut rng, scale, Region::Boundary);
            let q = sample_point(&mut rng, scale, Region::Boundary);
            if pair_well_conditioned(&p, &q, 1e-2) {
                break (p, q);
            }
            st.rejections += 1;
        };
        let hp = p.heisenberg_part().unwrap();
        let hq = q.heisenberg_part().unwrap();
        let a = d_heis(&hp, &hq);
        let b = d_heis_via_lift(&hp, &hq);
        let rel = (a - b).abs() / a.max(b).max(f64::MIN_POSITIVE);
        st.max_slack = st.max_slack.max(rel);
        if rel > ORACLE_TOLERANCE {
            st.violations
                .push(violation(&[p, q], None, vec![a, b], rel));
        }
        if cfg.collect_rows {
            st.rows.push(SampleRow {
                suite: "oracle",
                index: i,
                x1: a,
                x2: b,
                slack: rel,
            });
        }
    }

    // pairs with at least one boundary point: rho^2 equals the pairing
    for i in 0..cfg.samples {
        let mut rng = substream(cfg.seed, SALT_ORACLE_MIXED, i as u64);
        let (p, q) = loop {
            let b = sample_point(&mut rng, scale, Region::Boundary);
            let other = if rng.gen_bool(0.5) {
                sample_point(&mut rng, scale, Region::Interior)
            } else {
                sample_point(&mut rng, scale, Region::Boundary)
            };
            let (p, q) = if rng.gen_bool(0.5) {
                (b, other)
            } else {
                (other, b)
            };
            if pair_well_conditioned(&p, &q, 1e-2) {
                break (p, q);
            }
            st.rejections += 1;
        };
        let r2 = rho_finite(&p, &q).powi(2);
        let h = hermitian_pairing_modulus(&p, &q).unwrap();
        let dev = (r2 - h).abs() / h.max(1.0);
        st.max_slack = st.max_slack.max(dev);
        if dev > ORACLE_TOLERANCE {
            st.violations
                .push(violation(&[p, q], None, vec![r2, h], dev));
        }
    }

    // interior-interior pairs: the pairing must disagree
    for i in 0..cfg.samples {
        let mut rng = substream(cfg.seed, SALT_ORACLE_INTERIOR, i as u64);
        let (p, q) = loop {
            let p = sample_point(&mut rng, scale, Region::Interior);
            let q = sample_point(&mut rng, scale, Region::Interior);
            let high_enough =
                p.height().unwrap() >= 1e-3 * scale && q.height().unwrap() >= 1e-3 * scale;
            if high_enough && pair_well_conditioned(&p, &q, 1e-2) {
                break (p, q);
            }
            st.rejections += 1;
        };
        let r2 = rho_finite(&p, &q).powi(2);
        let h = hermitian_pairing_modulus(&p, &q).unwrap();
        let dev = (r2 - h).abs() / h.max(1.0);
        st.min_slack = st.min_slack.min(dev);
        if dev <= ORACLE_TOLERANCE {
            st.violations
                .push(violation(&[p, q], None, vec![r2, h], dev));
        }
    }

    st.finish("oracle", cfg, cfg.samples * 3, ORACLE_TOLERANCE, start)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::Suite;

    fn small_cfg(suite: Suite, samples: usize) -> CampaignConfig {
        let mut cfg = CampaignConfig::new(suite);
        cfg.seed = 1;
        cfg.samples = samples;
        cfg
    }

    #[test]
    fn inequality_check_on_the_axis_quadruple() {
        let q = Quadruple::new(
            ClosurePoint::Infinity,
            ClosurePoint::from_coords(2.0, 0.0, 0.0, 0.0),
            ClosurePoint::from_coords(1.0, 0.0, 0.0, 0.0),
            ClosurePoint::origin(),
        )
        .unwrap();
        let chk = check_ptolemaean_inequality(&q, 1e-9).unwrap();
        assert!(chk.pass);
        assert!((chk.x1 + chk.x2 - 3.0).abs() <= 1e-12);
        assert!(chk.diff_slack.abs() <= 1e-12); // |x1 - x2| = 1, tight
    }

    #[test]
    fn product_form_skips_infinity_and_agrees_on_finite_input() {
        let q = Quadruple::new(
            ClosurePoint::Infinity,
            ClosurePoint::from_coords(2.0, 0.0, 0.0, 0.0),
            ClosurePoint::from_coords(1.0, 0.0, 0.0, 0.0),
            ClosurePoint::origin(),
        )
        .unwrap();
        assert!(check_equivalent_ptolemaean_form(&q, 1e-9).is_none());

        let q = Quadruple::new(
            ClosurePoint::from_coords(0.0, 0.0, 0.0, 1.0),
            ClosurePoint::from_coords(1.0, 0.0, 0.0, 1.0),
            ClosurePoint::from_coords(0.0, 1.0, 0.0, 2.0),
            ClosurePoint::from_coords(-1.0, 0.5, 0.0, 1.0),
        )
        .unwrap();
        let pf = check_equivalent_ptolemaean_form(&q, 1e-9).unwrap();
        let cr = check_ptolemaean_inequality(&q, 1e-9).unwrap();
        assert_eq!(pf.pass, cr.pass);
        assert!(pf.pass);
    }

    #[test]
    fn product_form_is_tight_on_a_collinear_equality_configuration() {
        // the triangle-equality locus extended by a fourth collinear point
        // lies on an R-circle, so exactly one product pairing is tight
        let q = Quadruple::new(
            ClosurePoint::from_coords(2.0, 0.0, 0.0, 1.0),
            ClosurePoint::from_coords(-1.0, 0.0, 0.0, 1.0),
            ClosurePoint::from_coords(0.0, 0.0, 0.0, 1.0),
            ClosurePoint::from_coords(5.0, 0.0, 0.0, 1.0),
        )
        .unwrap();
        let pf = check_equivalent_ptolemaean_form(&q, 1e-9).unwrap();
        assert!(pf.pass);
        assert!(
            pf.min_slack.abs() <= 1e-10,
            "one pairing is an equality, slack {}",
            pf.min_slack
        );
    }

    #[test]
    fn suites_pass_at_smoke_scale() {
        let out = check_inequality_suite(&small_cfg(Suite::Inequality, 300));
        assert!(out.report.passed(), "{:?}", out.report.violations.first());
        let out = check_triangle_suite(&small_cfg(Suite::Triangle, 300));
        assert!(out.report.passed(), "{:?}", out.report.violations.first());
        let out = check_invariance_suite(&small_cfg(Suite::Invariance, 100));
        assert!(out.report.passed(), "{:?}", out.report.violations.first());
        let out = check_ptolemaeus_suite(&small_cfg(Suite::Equality, 100));
        assert!(out.report.passed(), "{:?}", out.report.violations.first());
        let out = check_oracle_suite(&small_cfg(Suite::Oracle, 300));
        assert!(out.report.passed(), "{:?}", out.report.violations.first());
    }

    #[test]
    fn violations_are_replayable() {
        // an impossible tolerance forces violations; replaying the recorded
        // inputs reproduces the failure
        let mut cfg = small_cfg(Suite::Inequality, 50);
        cfg.tolerance = -0.5; // demands x1 + x2 >= 1.5
        let out = check_inequality_suite(&cfg);
        assert!(!out.report.passed());
        // a two-value record is a bound violation (three-value records note
        // cross-form disagreements)
        let rec = out
            .report
            .violations
            .iter()
            .find(|r| r.values.len() == 2)
            .expect("some sample violates the tightened bound");
        let pts: Vec<ClosurePoint> = rec.inputs[..4].iter().map(|s| s.parse().unwrap()).collect();
        let q = Quadruple::new(pts[0], pts[1], pts[2], pts[3]).unwrap();
        let chk = check_ptolemaean_inequality(&q, cfg.tolerance).unwrap();
        assert!(!chk.pass);
        assert_eq!([chk.x1, chk.x2], rec.values[..2]);
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = small_cfg(Suite::Equality, 60);
        let a = check_ptolemaeus_suite(&cfg);
        let b = check_ptolemaeus_suite(&cfg);
        let mut ra = a.report.clone();
        let mut rb = b.report.clone();
        ra.elapsed_ms = 0;
        rb.elapsed_ms = 0;
        assert_eq!(
            serde_json::to_string(&ra).unwrap(),
            serde_json::to_string(&rb).unwrap()
        );
    }
}
