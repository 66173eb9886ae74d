//! The Heisenberg group, the Koranyi gauge and the Heisenberg metric.
//!
//! The group is C x R with the product
//! `(zeta, v) * (zeta', v') = (zeta + zeta', v + v' + 2 Im(conj(zeta') zeta))`.
//! The gauge is `|(zeta, v)| = (|zeta|^4 + v^2)^(1/4)`, evaluated as the
//! square root of a complex modulus so coordinates near the parser bound
//! cannot overflow. The metric in gauge form is `|p^-1 * q|`; the module
//! also carries the Hermitian-form route through standard lifts, which the
//! test suites use as an independent oracle for the gauge form.

use num_complex::Complex64;

use crate::point::{ClosurePoint, ComplexScalar, HeisenbergPoint};

/// Group product.
pub fn h_mul(p: &HeisenbergPoint, q: &HeisenbergPoint) -> HeisenbergPoint {
    HeisenbergPoint::new(
        p.zeta + q.zeta,
        p.v + q.v + 2.0 * (q.zeta.conj() * p.zeta).im,
    )
}

/// Group inverse `(-zeta, -v)`.
pub fn h_inverse(p: &HeisenbergPoint) -> HeisenbergPoint {
    HeisenbergPoint::new(-p.zeta, -p.v)
}

/// Koranyi gauge `(|zeta|^4 + v^2)^(1/4) = |(-|zeta|^2 + iv)|^(1/2)`.
pub fn koranyi_gauge(p: &HeisenbergPoint) -> f64 {
    Complex64::new(-p.zeta.norm_sqr(), p.v).norm().sqrt()
}

/// Heisenberg distance in gauge form: `|p^-1 * q|`.
pub fn d_heis(p: &HeisenbergPoint, q: &HeisenbergPoint) -> f64 {
    koranyi_gauge(&h_mul(&h_inverse(p), q))
}

/// A vector of C^{2,1} in non-homogeneous coordinates; standard lifts of
/// finite points have `c3 = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LiftVector {
    pub c1: ComplexScalar,
    pub c2: ComplexScalar,
    pub c3: ComplexScalar,
}

/// Standard lift of a boundary point: `(-|zeta|^2 + iv, sqrt(2) zeta, 1)`.
pub fn standard_lift_boundary(p: &HeisenbergPoint) -> LiftVector {
    LiftVector {
        c1: ComplexScalar::new(-p.zeta.norm_sqr(), p.v),
        c2: std::f64::consts::SQRT_2 * p.zeta,
        c3: ComplexScalar::new(1.0, 0.0),
    }
}

/// Standard lift of a finite closure point at height `u`:
/// `(-|zeta|^2 - u + iv, sqrt(2) zeta, 1)`. At `u = 0` this is the boundary
/// lift; boundary lifts are exactly the null vectors of the Hermitian form.
pub fn standard_lift_finite(zeta: ComplexScalar, v: f64, u: f64) -> LiftVector {
    LiftVector {
        c1: ComplexScalar::new(-zeta.norm_sqr() - u, v),
        c2: std::f64::consts::SQRT_2 * zeta,
        c3: ComplexScalar::new(1.0, 0.0),
    }
}

/// The signature (2,1) Hermitian form
/// `<z, w> = conj(w3) z1 + conj(w2) z2 + conj(w1) z3`.
pub fn hermitian_form(z: &LiftVector, w: &LiftVector) -> ComplexScalar {
    w.c3.conj() * z.c1 + w.c2.conj() * z.c2 + w.c1.conj() * z.c3
}

/// Heisenberg distance through the Hermitian form:
/// `|<lift(p), lift(q)>|^(1/2)`. Independent oracle for [`d_heis`].
pub fn d_heis_via_lift(p: &HeisenbergPoint, q: &HeisenbergPoint) -> f64 {
    hermitian_form(&standard_lift_boundary(p), &standard_lift_boundary(q))
        .norm()
        .sqrt()
}

/// Boundary inversion
/// `I(zeta, v) = (zeta / (-|zeta|^2 + iv), -v |(-|zeta|^2 + iv)|^-2)`,
/// with `I(o) = inf`. An involution of the boundary satisfying
/// `d(I(p), o) = 1 / d(p, o)`.
pub fn boundary_inversion(p: &HeisenbergPoint) -> ClosurePoint {
    if p.is_origin() {
        return ClosurePoint::Infinity;
    }
    let d = Complex64::new(-p.zeta.norm_sqr(), p.v);
    let n = d.norm();
    ClosurePoint::finite(p.zeta / d, (-p.v / n) / n, 0.0)
}
