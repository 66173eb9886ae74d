//! The transformation calculus: similarity words scale the metric by a
//! known factor, the closure inversion satisfies multiplicative distance
//! identities through the origin, and the unit Cygan sphere is fixed.
//!
//! Run with: `cargo run --example transformations`

use cygan::metric::rho_finite;
use cygan::transform::{apply_generator, apply_word, is_similarity};
use cygan::{ClosurePoint, Generator, GeneratorWord};

fn main() {
    let p = ClosurePoint::from_coords(1.0, 0.5, -0.3, 2.0);
    let q = ClosurePoint::from_coords(-0.7, 0.2, 1.4, 0.5);
    let o = ClosurePoint::origin();

    // a similarity word: translation, rotation, two dilations, conjugation
    let word: GeneratorWord = "T:1,-0.5,2;R:0.7853981633974483;D:2;J;D:1.5"
        .parse()
        .expect("well-formed word");
    let factor = is_similarity(&word).expect("no inversions in this word");
    let ip = apply_word(&word, &p).unwrap();
    let iq = apply_word(&word, &q).unwrap();
    println!("similarity factor        = {factor}");
    println!("rho before               = {}", rho_finite(&p, &q));
    println!(
        "rho after / factor       = {}",
        rho_finite(&ip, &iq) / factor
    );

    // the closure inversion swaps o and infinity and inverts distance to o
    let inv = Generator::InversionClosure;
    println!(
        "\nI(o)                     = {}",
        apply_generator(&inv, &o).unwrap()
    );
    println!(
        "I(inf)                   = {}",
        apply_generator(&inv, &ClosurePoint::infinity()).unwrap()
    );
    let ip = apply_generator(&inv, &p).unwrap();
    println!(
        "rho(I p, o) * rho(p, o)  = {}",
        rho_finite(&ip, &o) * rho_finite(&p, &o)
    );

    // the two-point identity transports through boundary points
    let b = ClosurePoint::from_coords(2.0, -1.0, 0.5, 0.0);
    let ib = apply_generator(&inv, &b).unwrap();
    let lhs = rho_finite(&ib, &ip) * rho_finite(&b, &o) * rho_finite(&o, &p);
    println!(
        "identity through a boundary point: {lhs} = {}",
        rho_finite(&b, &p)
    );

    // points of the unit Cygan sphere stay at distance one from o
    let on_sphere = {
        let delta = 1.0 / rho_finite(&p, &o);
        apply_generator(&Generator::Dilation { delta }, &p).unwrap()
    };
    let fixed = apply_generator(&inv, &on_sphere).unwrap();
    println!(
        "\nrho(sphere point, o)     = {}",
        rho_finite(&on_sphere, &o)
    );
    println!("rho(I(sphere point), o)  = {}", rho_finite(&fixed, &o));

    // a word stage with no image reports its index
    let bad = GeneratorWord::new(vec![
        Generator::translation(1.0, 0.0, 0.0),
        Generator::InversionHoro,
    ]);
    let err = apply_word(&bad, &ClosurePoint::from_coords(-1.0, 0.0, 0.0, 2.0));
    println!("\nundefined stage          : {err:?}");
}
