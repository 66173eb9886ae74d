//! Seeded, splittable sampling of points, quadruples and generator words.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ext_real::ExtReal;
use crate::metric::{rho, rho_finite};
use crate::point::{ClosurePoint, ComplexScalar};
use crate::quadruple::Quadruple;
use crate::transform::{Generator, GeneratorWord};

/// Floor on distances from distinguished points (the origin, the
/// horospherical inversion's excluded point) in sampled configurations.
pub const MIN_SEPARATION: f64 = 1e-3;

/// Threshold under which a user-supplied quadruple is flagged as
/// near-degenerate (accepted, but warned about).
pub const NEAR_DEGENERATE: f64 = 1e-8;

/// Independent RNG substream for sample `index` of the campaign stream
/// identified by `salt`. Serial and parallel evaluation orders agree.
pub fn substream(seed: u64, salt: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    rng.set_stream(index);
    rng
}

/// Sampling region for closure points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    /// Height strictly positive.
    Interior,
    /// Height zero.
    Boundary,
    /// Infinity with probability 1/10, otherwise boundary (3/10) or
    /// interior (6/10).
    ClosureWithInfinity,
}

pub fn sample_point(rng: &mut impl Rng, scale: f64, region: Region) -> ClosurePoint {
    let finite = |rng: &mut dyn rand::RngCore, u: f64| {
        ClosurePoint::finite(
            ComplexScalar::new(rng.gen_range(-scale..=scale), rng.gen_range(-scale..=scale)),
            rng.gen_range(-scale..=scale),
            u,
        )
    };
    match region {
        Region::Boundary => finite(rng, 0.0),
        Region::Interior => {
            // (0, scale]: 1 - r with r in [0, 1)
            let u = scale * (1.0 - rng.gen::<f64>());
            finite(rng, u)
        }
        Region::ClosureWithInfinity => {
            let r = rng.gen::<f64>();
            if r < 0.1 {
                ClosurePoint::Infinity
            } else if r < 0.4 {
                finite(rng, 0.0)
            } else {
                let u = scale * (1.0 - rng.gen::<f64>());
                finite(rng, u)
            }
        }
    }
}

/// Magnitude scale governing the floating-point error of the distance of a
/// finite pair: the cancelling terms of the Cygan formula are bounded by
/// the coordinate products below.
fn pair_scale(p: &ClosurePoint, q: &ClosurePoint) -> f64 {
    match (p, q) {
        (
            ClosurePoint::Finite {
                zeta: z1,
                v: v1,
                u: u1,
            },
            ClosurePoint::Finite {
                zeta: z2,
                v: v2,
                u: u2,
            },
        ) => (z1.norm() * z2.norm())
            .max(v1.abs())
            .max(v2.abs())
            .max(*u1)
            .max(*u2)
            .max(1.0),
        _ => 1.0,
    }
}

/// Conditioning guard for a finite pair: `rho^2 >= factor * pair_scale`
/// keeps the relative error of the computed distance near
/// `1e-15 / factor`.
pub fn pair_well_conditioned(p: &ClosurePoint, q: &ClosurePoint, factor: f64) -> bool {
    match rho(p, q) {
        ExtReal::Finite(r) => r * r >= factor * pair_scale(p, q),
        ExtReal::PosInfinity => true,
    }
}

/// Every finite pair of the set passes [`pair_well_conditioned`] with the
/// default budget; computed distances are then accurate to about 2.5e-11
/// relative, two orders of magnitude under the default 1e-9 tolerance.
pub fn is_well_conditioned(points: &[ClosurePoint]) -> bool {
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            if !pair_well_conditioned(&points[i], &points[j], 4e-5) {
                return false;
            }
        }
    }
    true
}

/// Minimum pairwise Cygan distance over the finite pairs of a point set.
pub fn min_pairwise_distance(points: &[ClosurePoint]) -> f64 {
    let mut min = f64::INFINITY;
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            if let ExtReal::Finite(d) = rho(&points[i], &points[j]) {
                min = min.min(d);
            }
        }
    }
    min
}

/// Draw a well-conditioned quadruple, rejecting and recounting until one
/// is found.
pub fn sample_quadruple(
    rng: &mut impl Rng,
    scale: f64,
    region: Region,
    rejections: &mut usize,
) -> Quadruple {
    for _ in 0..10_000 {
        let pts = [
            sample_point(rng, scale, region),
            sample_point(rng, scale, region),
            sample_point(rng, scale, region),
            sample_point(rng, scale, region),
        ];
        if !is_well_conditioned(&pts) {
            *rejections += 1;
            continue;
        }
        match Quadruple::from_array(pts) {
            Ok(q) => return q,
            Err(_) => {
                *rejections += 1;
                continue;
            }
        }
    }
    unreachable!("quadruple sampling exhausted its rejection budget")
}

/// A quadruple with at most one interior point (the rest boundary or
/// infinity). On this domain every distance pair entering the cross-ratio
/// components involves a boundary point, which is exactly where the closure
/// inversion transforms the extended metric multiplicatively; diagonal
/// words containing the closure inversion are cross-ratio invariant here.
pub fn sample_inversion_safe_quadruple(
    rng: &mut impl Rng,
    scale: f64,
    rejections: &mut usize,
) -> Quadruple {
    for _ in 0..10_000 {
        let mut pts = [ClosurePoint::Infinity; 4];
        for slot in pts.iter_mut() {
            *slot = if rng.gen::<f64>() < 0.15 {
                ClosurePoint::Infinity
            } else {
                sample_point(rng, scale, Region::Boundary)
            };
        }
        if rng.gen_bool(0.5) {
            let at = rng.gen_range(0..4usize);
            pts[at] = sample_point(rng, scale, Region::Interior);
        }
        if !is_well_conditioned(&pts) {
            *rejections += 1;
            continue;
        }
        match Quadruple::from_array(pts) {
            Ok(q) => return q,
            Err(_) => *rejections += 1,
        }
    }
    unreachable!("inversion-safe sampling exhausted its rejection budget")
}

/// Four points on a common horosphere of height `u`, all separated from
/// the height-`u` origin; the configuration GeneratorWords with the
/// horospherical inversion act on.
pub fn sample_common_height_quadruple(
    rng: &mut impl Rng,
    scale: f64,
    u: f64,
    rejections: &mut usize,
) -> Quadruple {
    for _ in 0..10_000 {
        let mut pts = [ClosurePoint::Infinity; 4];
        let mut ok = true;
        for slot in pts.iter_mut() {
            let p = ClosurePoint::finite(
                ComplexScalar::new(rng.gen_range(-scale..=scale), rng.gen_range(-scale..=scale)),
                rng.gen_range(-scale..=scale),
                u,
            );
            if rho_finite(
                &p,
                &ClosurePoint::finite(ComplexScalar::new(0.0, 0.0), 0.0, u),
            ) < MIN_SEPARATION
            {
                ok = false;
                break;
            }
            *slot = p;
        }
        if !ok || !is_well_conditioned(&pts) {
            *rejections += 1;
            continue;
        }
        match Quadruple::from_array(pts) {
            Ok(q) => return q,
            Err(_) => *rejections += 1,
        }
    }
    unreachable!("common-height sampling exhausted its rejection budget")
}

/// A random word over the generators whose diagonal action preserves the
/// cross-ratio pair of every quadruple: translation, rotation, dilation,
/// conjugation and the closure inversion.
pub fn sample_diagonal_word(rng: &mut impl Rng, max_len: usize) -> GeneratorWord {
    let len = rng.gen_range(0..=max_len);
    let generators = (0..len).map(|_| sample_generator(rng, false)).collect();
    GeneratorWord::new(generators)
}

/// A random horosphere-compatible word (no closure inversion), length
/// `0..=max_len`; with `force_horo` an inversion is inserted when missing.
pub fn sample_circle_word(rng: &mut impl Rng, max_len: usize, force_horo: bool) -> GeneratorWord {
    let len = rng.gen_range(0..=max_len);
    let mut generators: Vec<Generator> = (0..len).map(|_| sample_generator(rng, true)).collect();
    if force_horo
        && !generators
            .iter()
            .any(|g| matches!(g, Generator::InversionHoro))
    {
        let at = rng.gen_range(0..=generators.len());
        generators.insert(at, Generator::InversionHoro);
    }
    GeneratorWord::new(generators)
}

fn sample_generator(rng: &mut impl Rng, horo_instead_of_closure: bool) -> Generator {
    match rng.gen_range(0..5) {
        0 => Generator::translation(
            rng.gen_range(-2.0..=2.0),
            rng.gen_range(-2.0..=2.0),
            rng.gen_range(-2.0..=2.0),
        ),
        1 => Generator::Rotation {
            theta: rng.gen_range(0.0..std::f64::consts::TAU),
        },
        2 => Generator::Dilation {
            delta: rng.gen_range(0.5..=2.0),
        },
        3 => Generator::Conjugation,
        _ if horo_instead_of_closure => Generator::InversionHoro,
        _ => Generator::InversionClosure,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regions_control_heights() {
        let mut rng = substream(7, 0, 0);
        for _ in 0..100 {
            assert!(sample_point(&mut rng, 10.0, Region::Boundary).is_boundary());
            assert!(sample_point(&mut rng, 10.0, Region::Interior).is_interior());
        }
        let mut saw_infinity = false;
        let mut saw_boundary = false;
        let mut saw_interior = false;
        for _ in 0..300 {
            let p = sample_point(&mut rng, 10.0, Region::ClosureWithInfinity);
            saw_infinity |= p.is_infinity();
            saw_boundary |= p.is_boundary();
            saw_interior |= p.is_interior();
        }
        assert!(saw_infinity && saw_boundary && saw_interior);
    }

    #[test]
    fn golden_first_interior_draw() {
        // frozen at first implementation; a change here means the sampling
        // stream moved and seeded reports are no longer comparable
        let mut rng = substream(42, 0, 0);
        let p = sample_point(&mut rng, 10.0, Region::Interior);
        assert_eq!(
            p.to_string(),
            "9.005508153449682,-1.449671942869605,2.547210423946808,3.1810380769332856"
        );
    }

    #[test]
    fn substreams_are_reproducible_and_distinct() {
        let a: Vec<f64> = {
            let mut rng = substream(42, 1, 0);
            (0..4).map(|_| rng.gen::<f64>()).collect()
        };
        let b: Vec<f64> = {
            let mut rng = substream(42, 1, 0);
            (0..4).map(|_| rng.gen::<f64>()).collect()
        };
        assert_eq!(a, b);
        let c: Vec<f64> = {
            let mut rng = substream(42, 1, 1);
            (0..4).map(|_| rng.gen::<f64>()).collect()
        };
        assert_ne!(a, c);
    }

    #[test]
    fn sampled_quadruples_are_well_conditioned() {
        let mut rejections = 0;
        for i in 0..50 {
            let mut rng = substream(3, 9, i);
            let q = sample_quadruple(&mut rng, 10.0, Region::ClosureWithInfinity, &mut rejections);
            assert!(is_well_conditioned(q.points()));
        }
    }

    #[test]
    fn circle_words_never_contain_the_closure_inversion() {
        for i in 0..100 {
            let mut rng = substream(11, 13, i);
            let w = sample_circle_word(&mut rng, 4, true);
            assert!(!w.contains_closure_inversion());
            assert!(w.contains_horo_inversion());
        }
    }
}
