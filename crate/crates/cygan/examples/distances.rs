//! Distances on the compactified plane: the extended Cygan metric, its
//! restriction to horospheres, and the two independent routes to the
//! Heisenberg metric.
//!
//! Run with: `cargo run --example distances`

use cygan::heisenberg::{d_heis, d_heis_via_lift, koranyi_gauge};
use cygan::metric::{hermitian_pairing_modulus, rho, rho_finite};
use cygan::{ClosurePoint, ComplexScalar, HeisenbergPoint};

fn main() {
    // the vertical axis: distance scales like the square root of height
    let o = ClosurePoint::origin();
    let high = ClosurePoint::from_coords(0.0, 0.0, 0.0, 4.0);
    println!("rho(o, (0,0,0,4))      = {}", rho(&o, &high));

    // infinity is at infinite distance from every finite point
    println!(
        "rho(o, inf)            = {}",
        rho(&o, &ClosurePoint::infinity())
    );
    println!(
        "rho(inf, inf)          = {}",
        rho(&ClosurePoint::infinity(), &ClosurePoint::infinity())
    );

    // on a common horosphere the Cygan distance is the Heisenberg distance
    // of the (zeta, v) parts
    let p = ClosurePoint::from_coords(1.0, 2.0, -0.5, 3.0);
    let q = ClosurePoint::from_coords(-0.3, 0.7, 1.1, 3.0);
    let hp = p.heisenberg_part().unwrap();
    let hq = q.heisenberg_part().unwrap();
    println!("\nsame horosphere (u = 3):");
    println!("  rho                  = {}", rho_finite(&p, &q));
    println!("  d_heis of parts      = {}", d_heis(&hp, &hq));

    // the gauge route and the Hermitian-form route agree
    let a = HeisenbergPoint::new(ComplexScalar::new(1.0, 0.0), 0.0);
    let b = HeisenbergPoint::new(ComplexScalar::new(0.0, 1.0), 0.0);
    println!("\ntwo routes to the same number:");
    println!("  gauge form           = {}", d_heis(&a, &b));
    println!("  Hermitian lift form  = {}", d_heis_via_lift(&a, &b));
    println!("  koranyi gauge of a   = {}", koranyi_gauge(&a));

    // rho^2 equals the pairing modulus exactly when a boundary point is
    // involved; interior pairs disagree
    let boundary = ClosurePoint::from_coords(0.5, -1.0, 2.0, 0.0);
    let interior = ClosurePoint::from_coords(-0.2, 0.3, 1.0, 1.5);
    let r2 = rho_finite(&boundary, &interior).powi(2);
    let h = hermitian_pairing_modulus(&boundary, &interior).unwrap();
    println!("\nboundary-interior pair: rho^2 = {r2}, |<z1,z2>| = {h}");
    let p2 = ClosurePoint::from_coords(1.0, 0.0, 0.0, 1.0);
    let r2 = rho_finite(&p2, &interior).powi(2);
    let h = hermitian_pairing_modulus(&p2, &interior).unwrap();
    println!("interior-interior pair: rho^2 = {r2}, |<z1,z2>| = {h} (differs)");
}
