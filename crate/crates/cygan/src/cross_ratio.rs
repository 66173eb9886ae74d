//! The metric cross-ratio on quadruples of pairwise distinct points:
//!
//! `X(p1, p2, p3, p4) = [rho(p2, p4) / rho(p2, p3)] * [rho(p1, p3) / rho(p1, p4)]`
//!
//! with the convention `(+inf) : (+inf) = 1`. The convention is implemented
//! as symbolic cancellation: each point sits in exactly one numerator and
//! one denominator factor, so a single point at infinity contributes one
//! infinite factor to each side and both are cancelled before any floating
//! division happens.

use crate::error::{Error, Result};
use crate::ext_real::ExtReal;
use crate::metric::rho;
use crate::point::ClosurePoint;
use crate::quadruple::Quadruple;

/// The pair `(X1, X2)` attached to a quadruple; both components are finite
/// and positive for every valid quadruple.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossRatioPair {
    pub x1: ExtReal,
    pub x2: ExtReal,
}

impl CrossRatioPair {
    /// Both components as plain floats.
    pub fn as_f64(&self) -> (f64, f64) {
        (self.x1.expect_finite(), self.x2.expect_finite())
    }
}

fn accumulate(d: ExtReal, product: &mut f64, infinities: &mut u32) {
    match d {
        ExtReal::Finite(x) => *product *= x,
        ExtReal::PosInfinity => *infinities += 1,
    }
}

/// Metric cross-ratio of four pairwise distinct points.
pub fn cross_ratio(
    p1: &ClosurePoint,
    p2: &ClosurePoint,
    p3: &ClosurePoint,
    p4: &ClosurePoint,
) -> Result<ExtReal> {
    let pts = [p1, p2, p3, p4];
    for i in 0..4 {
        for j in (i + 1)..4 {
            if pts[i] == pts[j] {
                return Err(Error::DegenerateQuadruple(i + 1, j + 1));
            }
        }
    }

    let mut num = 1.0;
    let mut num_inf = 0;
    accumulate(rho(p2, p4), &mut num, &mut num_inf);
    accumulate(rho(p1, p3), &mut num, &mut num_inf);

    let mut den = 1.0;
    let mut den_inf = 0;
    accumulate(rho(p2, p3), &mut den, &mut den_inf);
    accumulate(rho(p1, p4), &mut den, &mut den_inf);

    // At most one point is infinite, and it appears in exactly one factor
    // on each side; the counts therefore cancel completely.
    debug_assert_eq!(num_inf, den_inf);
    let value = num / den;
    if !value.is_finite() || value <= 0.0 {
        return Err(Error::CrossRatioRange(value));
    }
    Ok(ExtReal::finite(value))
}

/// `X1 = X(p1, p2, p3, p4)` and `X2 = X(p1, p3, p2, p4)`.
pub fn x1_x2(q: &Quadruple) -> Result<CrossRatioPair> {
    let p = q.points();
    Ok(CrossRatioPair {
        x1: cross_ratio(&p[0], &p[1], &p[2], &p[3])?,
        x2: cross_ratio(&p[0], &p[2], &p[1], &p[3])?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::rho_finite;
    use proptest::prelude::*;

    fn pt(zre: f64, zim: f64, v: f64, u: f64) -> ClosurePoint {
        ClosurePoint::from_coords(zre, zim, v, u)
    }

    fn rel_eq(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
    }

    #[test]
    fn infinite_first_point_cancels() {
        let x = cross_ratio(
            &ClosurePoint::infinity(),
            &pt(2.0, 0.0, 0.0, 0.0),
            &pt(1.0, 0.0, 0.0, 0.0),
            &ClosurePoint::origin(),
        )
        .unwrap();
        assert_eq!(x, ExtReal::finite(2.0));
    }

    #[test]
    fn pair_for_the_separated_axis_quadruple() {
        let q = Quadruple::new(
            ClosurePoint::infinity(),
            pt(2.0, 0.0, 0.0, 0.0),
            pt(1.0, 0.0, 0.0, 0.0),
            ClosurePoint::origin(),
        )
        .unwrap();
        let pair = x1_x2(&q).unwrap();
        assert_eq!(pair.as_f64(), (2.0, 1.0));
    }

    #[test]
    fn infinity_in_last_slot() {
        let q = Quadruple::new(
            ClosurePoint::origin(),
            pt(1.0, 0.0, 0.0, 0.0),
            pt(-1.0, 0.0, 0.0, 0.0),
            ClosurePoint::infinity(),
        )
        .unwrap();
        let (x1, x2) = x1_x2(&q).unwrap().as_f64();
        assert!(rel_eq(x1, 0.5, 1e-15));
        assert!(rel_eq(x2, 0.5, 1e-15));
    }

    #[test]
    fn matches_explicit_six_distance_evaluation() {
        // four points at height 1 on the real axis
        let p = [
            pt(0.0, 0.0, 0.0, 1.0),
            pt(1.0, 0.0, 0.0, 1.0),
            pt(2.0, 0.0, 0.0, 1.0),
            pt(3.0, 0.0, 0.0, 1.0),
        ];
        let expected = (rho_finite(&p[1], &p[3]) / rho_finite(&p[1], &p[2]))
            * (rho_finite(&p[0], &p[2]) / rho_finite(&p[0], &p[3]));
        let x = cross_ratio(&p[0], &p[1], &p[2], &p[3])
            .unwrap()
            .expect_finite();
        assert!(rel_eq(x, expected, 1e-15));
        assert!(rel_eq(x, 4.0 / 3.0, 1e-15));
    }

    #[test]
    fn degenerate_input_is_rejected() {
        let p = pt(1.0, 0.0, 0.0, 0.0);
        let err = cross_ratio(&p, &p, &pt(2.0, 0.0, 0.0, 0.0), &ClosurePoint::origin());
        assert_eq!(err, Err(Error::DegenerateQuadruple(1, 2)));
    }

    fn arb_point() -> impl Strategy<Value = ClosurePoint> {
        prop_oneof![
            9 => (-10.0f64..10.0, -10.0f64..10.0, -10.0f64..10.0, 0.0f64..10.0)
                .prop_map(|(a, b, v, u)| pt(a, b, v, u)),
            1 => Just(ClosurePoint::infinity()),
        ]
    }

    fn arb_quadruple() -> impl Strategy<Value = Quadruple> {
        (arb_point(), arb_point(), arb_point(), arb_point())
            .prop_filter_map("distinct", |(a, b, c, d)| Quadruple::new(a, b, c, d).ok())
    }

    fn x(q: &Quadruple, i: usize, j: usize, k: usize, l: usize) -> f64 {
        let p = q.points();
        cross_ratio(&p[i], &p[j], &p[k], &p[l])
            .unwrap()
            .expect_finite()
    }

    proptest! {
        #[test]
        fn symmetry_s1(q in arb_quadruple()) {
            let base = x(&q, 0, 1, 2, 3);
            prop_assert!(rel_eq(base, x(&q, 1, 0, 3, 2), 1e-12));
            prop_assert!(rel_eq(base, x(&q, 2, 3, 0, 1), 1e-12));
            prop_assert!(rel_eq(base, x(&q, 3, 2, 1, 0), 1e-12));
        }

        #[test]
        fn symmetry_s2(q in arb_quadruple()) {
            let prod = x(&q, 0, 1, 2, 3) * x(&q, 0, 1, 3, 2);
            prop_assert!(rel_eq(prod, 1.0, 1e-12));
        }

        #[test]
        fn symmetry_s3(q in arb_quadruple()) {
            let lhs = x(&q, 0, 1, 2, 3) * x(&q, 0, 3, 1, 2);
            let rhs = x(&q, 0, 2, 1, 3);
            prop_assert!(rel_eq(lhs, rhs, 1e-12));
        }

        #[test]
        fn components_are_positive_and_finite(q in arb_quadruple()) {
            let pair = x1_x2(&q).unwrap();
            let (x1, x2) = pair.as_f64();
            prop_assert!(x1 > 0.0 && x2 > 0.0);
        }
    }
}
