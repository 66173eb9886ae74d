//! Transformations of the compactified plane: Heisenberg translations,
//! rotations, dilations, conjugation, the closure inversion and the
//! per-horosphere inversion, together with finite words over them.
//!
//! Translations, rotations and conjugation are isometries; dilation by
//! `delta` scales the metric by `delta`. The closure inversion swaps `o`
//! and `inf`, fixes the unit Cygan sphere centred at `o`, satisfies
//! `rho(I(p), o) = 1 / rho(p, o)` everywhere, and transforms distances
//! multiplicatively, `rho(I(p), I(q)) = rho(p, q) / (rho(p, o) rho(o, q))`,
//! whenever at least one of `p`, `q` lies on the boundary (where the
//! extended metric agrees with the Hermitian pairing). The horospherical
//! inversion applies the boundary inversion to `(zeta, v)` at constant
//! height; at the height-`u` origin with `u > 0` it has no image.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::heisenberg::h_mul;
use crate::point::{ClosurePoint, ComplexScalar, HeisenbergPoint};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Generator {
    /// Left Heisenberg translation by `(zeta, v)`; fixes `inf`, preserves height.
    Translation { zeta: ComplexScalar, v: f64 },
    /// `zeta -> e^(i theta) zeta` about the vertical axis.
    Rotation { theta: f64 },
    /// `(zeta, v, u) -> (delta zeta, delta^2 v, delta^2 u)` with `delta > 0`.
    Dilation { delta: f64 },
    /// `(zeta, v, u) -> (conj(zeta), -v, u)`.
    Conjugation,
    /// Inversion of the closure; swaps `o` and `inf`.
    InversionClosure,
    /// Per-horosphere inversion `(zeta, v, u) -> (I(zeta, v), u)`.
    InversionHoro,
}

impl Generator {
    pub fn translation(zre: f64, zim: f64, v: f64) -> Self {
        Self::Translation {
            zeta: ComplexScalar::new(zre, zim),
            v,
        }
    }

    pub fn is_inversion(&self) -> bool {
        matches!(self, Self::InversionClosure | Self::InversionHoro)
    }
}

/// Apply one generator. The only undefined image is the horospherical
/// inversion at `(0, 0, u)` with `u > 0`.
pub fn apply_generator(g: &Generator, p: &ClosurePoint) -> Result<ClosurePoint> {
    use ClosurePoint::*;
    let out = match (g, p) {
        (Generator::Translation { zeta, v }, Finite { zeta: z, v: pv, u }) => {
            let t = h_mul(
                &HeisenbergPoint::new(*zeta, *v),
                &HeisenbergPoint::new(*z, *pv),
            );
            ClosurePoint::finite(t.zeta, t.v, *u)
        }
        (Generator::Translation { .. }, Infinity) => Infinity,

        (Generator::Rotation { theta }, Finite { zeta, v, u }) => {
            ClosurePoint::finite(Complex64::cis(*theta) * zeta, *v, *u)
        }
        (Generator::Rotation { .. }, Infinity) => Infinity,

        (Generator::Dilation { delta }, Finite { zeta, v, u }) => {
            debug_assert!(*delta > 0.0, "dilation factor must be positive");
            ClosurePoint::finite(delta * zeta, delta * delta * v, delta * delta * u)
        }
        (Generator::Dilation { .. }, Infinity) => Infinity,

        (Generator::Conjugation, Finite { zeta, v, u }) => {
            ClosurePoint::finite(zeta.conj(), -v, *u)
        }
        (Generator::Conjugation, Infinity) => Infinity,

        (Generator::InversionClosure, Infinity) => ClosurePoint::origin(),
        (Generator::InversionClosure, p @ Finite { zeta, v, u }) => {
            if p.is_origin() {
                return Ok(Infinity);
            }
            let d = Complex64::new(-zeta.norm_sqr() - u, *v);
            let n = d.norm();
            ClosurePoint::finite(zeta / d, (-v / n) / n, (u / n) / n)
        }

        // At height zero the horospherical inversion is the boundary
        // inversion, which sends inf to o.
        (Generator::InversionHoro, Infinity) => ClosurePoint::origin(),
        (Generator::InversionHoro, Finite { zeta, v, u }) => {
            if zeta.re == 0.0 && zeta.im == 0.0 && *v == 0.0 {
                if *u == 0.0 {
                    return Ok(Infinity);
                }
                return Err(Error::UndefinedImage { stage: 0 });
            }
            let d = Complex64::new(-zeta.norm_sqr(), *v);
            let n = d.norm();
            ClosurePoint::finite(zeta / d, (-v / n) / n, *u)
        }
    };
    Ok(out)
}

/// A finite composition of generators, applied left to right.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct GeneratorWord {
    pub generators: Vec<Generator>,
}

impl GeneratorWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn new(generators: Vec<Generator>) -> Self {
        Self { generators }
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains_closure_inversion(&self) -> bool {
        self.generators
            .iter()
            .any(|g| matches!(g, Generator::InversionClosure))
    }

    pub fn contains_horo_inversion(&self) -> bool {
        self.generators
            .iter()
            .any(|g| matches!(g, Generator::InversionHoro))
    }

    /// Product of the dilation factors, ignoring every other generator.
    pub fn dilation_product(&self) -> f64 {
        self.generators
            .iter()
            .map(|g| match g {
                Generator::Dilation { delta } => *delta,
                _ => 1.0,
            })
            .product()
    }

    /// Similarity factor of the word: the product of its dilation factors
    /// when the word contains no inversion, absent otherwise.
    pub fn similarity_factor(&self) -> Option<f64> {
        if self.generators.iter().any(Generator::is_inversion) {
            None
        } else {
            Some(self.dilation_product())
        }
    }
}

/// See [`GeneratorWord::similarity_factor`].
pub fn is_similarity(w: &GeneratorWord) -> Option<f64> {
    w.similarity_factor()
}

/// Apply a word stage by stage; an undefined stage reports its index.
pub fn apply_word(w: &GeneratorWord, p: &ClosurePoint) -> Result<ClosurePoint> {
    let mut cur = *p;
    for (stage, g) in w.generators.iter().enumerate() {
        cur = apply_generator(g, &cur).map_err(|e| match e {
            Error::UndefinedImage { .. } => Error::UndefinedImage { stage },
            other => other,
        })?;
    }
    Ok(cur)
}

impl std::fmt::Display for Generator {
    /// Text form: `T:re,im,v` | `R:theta` | `D:delta` | `J` | `I` | `Iu`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Translation { zeta, v } => write!(f, "T:{},{},{}", zeta.re, zeta.im, v),
            Self::Rotation { theta } => write!(f, "R:{theta}"),
            Self::Dilation { delta } => write!(f, "D:{delta}"),
            Self::Conjugation => write!(f, "J"),
            Self::InversionClosure => write!(f, "I"),
            Self::InversionHoro => write!(f, "Iu"),
        }
    }
}

impl std::fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let items: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", items.join(";"))
    }
}

fn parse_param(s: &str, what: &str) -> Result<f64> {
    let x: f64 = s
        .parse()
        .map_err(|_| Error::Parse(format!("invalid {what} `{s}`")))?;
    if !x.is_finite() || x.abs() > crate::point::MAX_COORD {
        return Err(Error::Parse(format!("{what} `{s}` out of range")));
    }
    Ok(x)
}

impl std::str::FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "J" => return Ok(Self::Conjugation),
            "I" => return Ok(Self::InversionClosure),
            "Iu" => return Ok(Self::InversionHoro),
            _ => {}
        }
        let (kind, args) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("unknown generator `{s}`")))?;
        match kind {
            "T" => {
                let parts: Vec<&str> = args.split(',').collect();
                if parts.len() != 3 {
                    return Err(Error::Parse(format!(
                        "translation takes `re,im,v`, got `{args}`"
                    )));
                }
                Ok(Self::translation(
                    parse_param(parts[0], "translation coordinate")?,
                    parse_param(parts[1], "translation coordinate")?,
                    parse_param(parts[2], "translation coordinate")?,
                ))
            }
            "R" => Ok(Self::Rotation {
                theta: parse_param(args, "rotation angle")?,
            }),
            "D" => {
                let delta = parse_param(args, "dilation factor")?;
                if delta <= 0.0 {
                    return Err(Error::Parse(format!(
                        "dilation factor `{args}` must be positive"
                    )));
                }
                Ok(Self::Dilation { delta })
            }
            _ => Err(Error::Parse(format!("unknown generator `{s}`"))),
        }
    }
}

impl std::str::FromStr for GeneratorWord {
    type Err = Error;

    /// Semicolon-separated generators; the empty string is the identity.
    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Ok(Self::identity());
        }
        let generators = s
            .split(';')
            .map(str::parse)
            .collect::<Result<Vec<Generator>>>()?;
        Ok(Self { generators })
    }
}
