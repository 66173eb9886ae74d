//! The extended Cygan metric on the compactified plane.
//!
//! For finite points the distance is
//! `rho(p1, p2) = | |z1 - z2|^2 + |u1 - u2| - i v1 + i v2 - 2i Im(z1 conj(z2)) |^(1/2)`,
//! evaluated as one complex modulus with no rearrangement. The extension to
//! the full closure sets `rho(p, inf) = +inf` for finite `p` and
//! `rho(inf, inf) = 0`. Restricted to a horosphere the metric coincides with
//! the Heisenberg metric of the underlying group.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::ext_real::ExtReal;
use crate::heisenberg::{d_heis, hermitian_form, standard_lift_finite};
use crate::point::ClosurePoint;

/// Cygan distance between two closure points.
pub fn rho(p: &ClosurePoint, q: &ClosurePoint) -> ExtReal {
    use ClosurePoint::*;
    match (p, q) {
        (Infinity, Infinity) => ExtReal::finite(0.0),
        (Infinity, _) | (_, Infinity) => ExtReal::PosInfinity,
        (
            Finite {
                zeta: z1,
                v: v1,
                u: u1,
            },
            Finite {
                zeta: z2,
                v: v2,
                u: u2,
            },
        ) => {
            let w = Complex64::new(
                (z1 - z2).norm_sqr() + (u1 - u2).abs(),
                v2 - v1 - 2.0 * (z1 * z2.conj()).im,
            );
            ExtReal::finite(w.norm().sqrt())
        }
    }
}

/// Cygan distance of two finite points as a plain float.
///
/// Panics on an infinite argument; callers that may see `inf` use [`rho`].
pub fn rho_finite(p: &ClosurePoint, q: &ClosurePoint) -> f64 {
    rho(p, q).expect_finite()
}

/// Modulus of the Hermitian pairing of the standard lifts of two finite
/// points. Equals `rho^2` exactly when at least one point lies on the
/// boundary; generic interior-interior pairs disagree.
pub fn hermitian_pairing_modulus(p: &ClosurePoint, q: &ClosurePoint) -> Option<f64> {
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
        ) => {
            let lp = standard_lift_finite(*z1, *v1, *u1);
            let lq = standard_lift_finite(*z2, *v2, *u2);
            Some(hermitian_form(&lp, &lq).norm())
        }
        _ => None,
    }
}

/// Diagnostic: on a common horosphere the Cygan distance equals the
/// Heisenberg distance of the `(zeta, v)` parts.
pub fn rho_matches_d_heis(p: &ClosurePoint, q: &ClosurePoint) -> Result<bool> {
    let (up, uq) = match (p.height(), q.height()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::HeightMismatch(f64::INFINITY, f64::INFINITY)),
    };
    if up != uq {
        return Err(Error::HeightMismatch(up, uq));
    }
    let r = rho_finite(p, q);
    let d = d_heis(&p.heisenberg_part().unwrap(), &q.heisenberg_part().unwrap());
    Ok((r - d).abs() <= 1e-12 * r.max(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pt(zre: f64, zim: f64, v: f64, u: f64) -> ClosurePoint {
        ClosurePoint::from_coords(zre, zim, v, u)
    }

    #[test]
    fn values_on_the_axis_and_at_infinity() {
        assert_eq!(
            rho(&pt(0.0, 0.0, 0.0, 0.0), &pt(0.0, 0.0, 0.0, 4.0)),
            ExtReal::finite(2.0)
        );
        assert_eq!(
            rho(&pt(1.0, 0.0, 0.0, 0.0), &ClosurePoint::Infinity),
            ExtReal::PosInfinity
        );
        assert_eq!(
            rho(&ClosurePoint::Infinity, &ClosurePoint::Infinity),
            ExtReal::finite(0.0)
        );
        // equal heights reduce to the Heisenberg distance
        assert_eq!(
            rho(&pt(2.0, 0.0, 0.0, 1.0), &pt(0.0, 0.0, 0.0, 1.0)),
            ExtReal::finite(2.0)
        );
    }

    #[test]
    fn no_overflow_at_the_parse_bound() {
        // the formula is evaluated through hypot, so coordinates at the
        // 1e100 magnitude bound stay finite under squaring
        let p = pt(1e100, 0.0, 0.0, 0.0);
        let q = pt(-1e100, 0.0, 0.0, 0.0);
        assert_eq!(rho(&p, &q), ExtReal::finite(2e100));
        let r = pt(1e100, 1e100, 1e100, 1e100);
        assert!(rho(&r, &ClosurePoint::origin()).expect_finite().is_finite());
    }

    #[test]
    fn zero_iff_equal() {
        let p = pt(1.0, -2.0, 3.0, 0.5);
        assert!(rho(&p, &p).is_zero());
        assert!(!rho(&p, &pt(1.0, -2.0, 3.0, 0.5 + 1e-14)).is_zero());
    }

    #[test]
    fn horosphere_restriction_matches_heisenberg_metric() {
        let p = pt(1.0, 2.0, -0.5, 3.0);
        let q = pt(-0.3, 0.7, 1.1, 3.0);
        assert!(rho_matches_d_heis(&p, &q).unwrap());
        let b1 = pt(0.4, 0.0, 2.0, 0.0);
        let b2 = pt(-1.0, 0.2, 0.0, 0.0);
        assert!(rho_matches_d_heis(&b1, &b2).unwrap());
        let err = rho_matches_d_heis(&pt(0.0, 0.0, 0.0, 1.0), &pt(0.0, 0.0, 0.0, 2.0));
        assert_eq!(err, Err(Error::HeightMismatch(1.0, 2.0)));
    }

    #[test]
    fn pairing_agrees_only_with_a_boundary_point() {
        let b = pt(0.5, -1.0, 2.0, 0.0);
        let q = pt(-0.2, 0.3, 1.0, 1.5);
        let r2 = rho_finite(&b, &q).powi(2);
        let h = hermitian_pairing_modulus(&b, &q).unwrap();
        assert!((r2 - h).abs() <= 1e-12 * h.max(1.0));

        let p = pt(1.0, 0.0, 0.0, 1.0);
        let r2 = rho_finite(&p, &q).powi(2);
        let h = hermitian_pairing_modulus(&p, &q).unwrap();
        assert!(
            (r2 - h).abs() > 1e-6,
            "interior pair must disagree: {r2} vs {h}"
        );
    }

    #[test]
    fn triangle_equality_configuration() {
        // opposite-sign real zeta at a common height: 3 = 1 + 2 exactly
        let p1 = pt(1.0, 0.0, 0.0, 1.0);
        let p2 = pt(-2.0, 0.0, 0.0, 1.0);
        let p3 = pt(0.0, 0.0, 0.0, 1.0);
        let lhs = rho_finite(&p1, &p2);
        let rhs = rho_finite(&p1, &p3) + rho_finite(&p3, &p2);
        assert_eq!(lhs, 3.0);
        assert!((lhs - rhs).abs() <= 1e-10);
    }

    #[test]
    fn triangle_equality_breaks_under_each_perturbation() {
        let base = [
            pt(1.0, 0.0, 0.0, 1.0),
            pt(-2.0, 0.0, 0.0, 1.0),
            pt(0.0, 0.0, 0.0, 1.0),
        ];
        let strict = |ps: &[ClosurePoint; 3]| {
            rho_finite(&ps[0], &ps[2]) + rho_finite(&ps[2], &ps[1]) - rho_finite(&ps[0], &ps[1])
        };
        assert!(strict(&base).abs() <= 1e-12);

        let mut with_v = base;
        with_v[0] = pt(1.0, 0.0, 0.1, 1.0);
        assert!(strict(&with_v) > 1e-6);

        let mut with_height = base;
        with_height[0] = pt(1.0, 0.0, 0.0, 1.01);
        assert!(strict(&with_height) > 1e-6);

        let mut nonreal = base;
        nonreal[0] = pt(1.0, 0.01, 0.0, 1.0);
        assert!(strict(&nonreal) > 1e-9);

        let mut same_sign = base;
        same_sign[1] = pt(2.0, 0.0, 0.0, 1.0);
        assert!(strict(&same_sign) > 1e-3);
    }

    fn arb_finite(scale: f64) -> impl Strategy<Value = ClosurePoint> {
        (-scale..scale, -scale..scale, -scale..scale, 0.0..scale)
            .prop_map(|(a, b, v, u)| pt(a, b, v, u))
    }

    proptest! {
        #[test]
        fn symmetry_is_exact(p in arb_finite(10.0), q in arb_finite(10.0)) {
            prop_assert_eq!(rho(&p, &q), rho(&q, &p));
        }

        #[test]
        fn triangle_inequality(p in arb_finite(10.0), q in arb_finite(10.0), r in arb_finite(10.0)) {
            let pq = rho_finite(&p, &q);
            let pr = rho_finite(&p, &r);
            let rq = rho_finite(&r, &q);
            prop_assert!(pq <= pr + rq + 1e-12);
        }

        #[test]
        fn positivity(p in arb_finite(10.0), q in arb_finite(10.0)) {
            prop_assume!(p != q);
            prop_assert!(rho_finite(&p, &q) > 0.0);
        }

        #[test]
        fn boundary_pairing_is_rho_squared(
            a in -10.0f64..10.0, b in -10.0f64..10.0, v in -10.0f64..10.0,
            q in arb_finite(10.0),
        ) {
            let p = pt(a, b, v, 0.0);
            let r2 = rho_finite(&p, &q).powi(2);
            let h = hermitian_pairing_modulus(&p, &q).unwrap();
            prop_assert!((r2 - h).abs() <= 1e-12 * h.max(1.0));
        }
    }
}
