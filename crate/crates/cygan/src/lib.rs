//! Numerical geometry of the compactified complex hyperbolic plane under
//! the Cygan metric.
//!
//! The crate models points in horospherical coordinates `(zeta, v, u)`
//! together with a single point at infinity, and builds up from the
//! Heisenberg group ([`heisenberg`]) through the extended Cygan metric
//! ([`metric`]), its similarity and inversion calculus ([`transform`]),
//! metric cross-ratios ([`cross_ratio`]), the reduction of quadruples to an
//! infinity-based normal form ([`normalize`]) and R-circles with their
//! separation combinatorics ([`rcircle`]). The [`harness`] module runs
//! seeded verification campaigns for the Ptolemaean inequality, the
//! equality cases on R-circles, the triangle inequality and its equality
//! locus, cross-ratio invariance, and the Hermitian-form distance oracles.
//!
//! Every runnable capability has an example under `examples/`; the `cygan`
//! binary exposes the same operations as subcommands.
//!
//! ```
//! use cygan::{ClosurePoint, Quadruple};
//!
//! let q = Quadruple::new(
//!     ClosurePoint::infinity(),
//!     ClosurePoint::from_coords(2.0, 0.0, 0.0, 0.0),
//!     ClosurePoint::from_coords(1.0, 0.0, 0.0, 0.0),
//!     ClosurePoint::origin(),
//! )?;
//! let (x1, x2) = cygan::cross_ratio::x1_x2(&q)?.as_f64();
//! assert_eq!((x1, x2), (2.0, 1.0));
//! assert!(x1 + x2 >= 1.0 && (x1 - x2).abs() <= 1.0);
//! # Ok::<(), cygan::Error>(())
//! ```

pub mod cli;
pub mod cross_ratio;
pub mod error;
pub mod ext_real;
pub mod harness;
pub mod heisenberg;
pub mod metric;
pub mod normalize;
pub mod point;
pub mod quadruple;
pub mod rcircle;
pub mod transform;

pub use cross_ratio::{cross_ratio, x1_x2, CrossRatioPair};
pub use error::{Error, Result};
pub use ext_real::ExtReal;
pub use metric::rho;
pub use point::{points_equal, ClosurePoint, ComplexScalar, HeisenbergPoint};
pub use quadruple::Quadruple;
pub use transform::{apply_generator, apply_word, Generator, GeneratorWord};
