//! Metric cross-ratios: the pair (X1, X2), its symmetries, and the two
//! Ptolemaean bounds X1 + X2 >= 1 and |X1 - X2| <= 1.
//!
//! Run with: `cargo run --example cross_ratios`

use cygan::cross_ratio::{cross_ratio, x1_x2};
use cygan::{ClosurePoint, Quadruple};

fn main() {
    // the separated configuration on the real axis: (inf, 2, 1, 0)
    let q = Quadruple::new(
        ClosurePoint::infinity(),
        ClosurePoint::from_coords(2.0, 0.0, 0.0, 0.0),
        ClosurePoint::from_coords(1.0, 0.0, 0.0, 0.0),
        ClosurePoint::origin(),
    )
    .unwrap();
    let (x1, x2) = x1_x2(&q).unwrap().as_f64();
    println!("axis quadruple: X1 = {x1}, X2 = {x2}");
    println!("  X1 + X2 = {} (>= 1)", x1 + x2);
    println!("  X1 - X2 = {} (tight at the upper bound)", x1 - x2);

    // a generic quadruple keeps both bounds slack
    let q = Quadruple::new(
        ClosurePoint::from_coords(0.3, -0.2, 0.5, 2.0),
        ClosurePoint::from_coords(1.0, 0.4, -0.3, 1.5),
        ClosurePoint::from_coords(-0.7, 0.1, 0.2, 3.0),
        ClosurePoint::from_coords(0.2, 0.9, -1.0, 2.5),
    )
    .unwrap();
    let (x1, x2) = x1_x2(&q).unwrap().as_f64();
    println!("\ninterior quadruple: X1 = {x1}, X2 = {x2}");
    println!("  X1 + X2 - 1 = {} (positive)", x1 + x2 - 1.0);
    println!("  1 - |X1 - X2| = {} (positive)", 1.0 - (x1 - x2).abs());

    // the symmetry relations
    let p = q.points();
    let x = |i: usize, j: usize, k: usize, l: usize| {
        cross_ratio(&p[i], &p[j], &p[k], &p[l])
            .unwrap()
            .expect_finite()
    };
    println!("\nsymmetries:");
    println!("  X(1,2,3,4)              = {}", x(0, 1, 2, 3));
    println!("  X(2,1,4,3)              = {}", x(1, 0, 3, 2));
    println!("  X(3,4,1,2)              = {}", x(2, 3, 0, 1));
    println!(
        "  X(1,2,3,4) * X(1,2,4,3) = {}",
        x(0, 1, 2, 3) * x(0, 1, 3, 2)
    );
    println!(
        "  X(1,2,3,4) * X(1,4,2,3) = {}  vs  X(1,3,2,4) = {}",
        x(0, 1, 2, 3) * x(0, 3, 1, 2),
        x(0, 2, 1, 3)
    );
}
