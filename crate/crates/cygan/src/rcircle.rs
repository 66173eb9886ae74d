//! R-circles: images of the standard circle `{(x, 0, u)} ∪ {inf}` under
//! horosphere-compatible words, the separation predicate on the parameter
//! circle, and the classification of the three Ptolemaean equality cases.
//!
//! A circle is stored generatively as a final height plus a word over the
//! height-preserving generators (translation, rotation, conjugation,
//! horospherical inversion) and dilations, which rescale the height. The
//! base height of the standard circle is chosen so that the word's dilation
//! factors land on the stored height. Words act bijectively on the circle,
//! so separation decided on the standard parameters transports to the image
//! quadruple.

use crate::cross_ratio::x1_x2;
use crate::error::{Error, Result};
use crate::point::{parse_coord, ClosurePoint, ComplexScalar};
use crate::quadruple::Quadruple;
use crate::transform::{apply_word, Generator, GeneratorWord};

/// Default relative tolerance for deciding that an equality case holds.
pub const CASE_TOLERANCE: f64 = 1e-9;

/// A parameter on the circle `R ∪ {inf}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CircleParam {
    Finite(f64),
    Infinity,
}

impl CircleParam {
    pub fn is_infinity(&self) -> bool {
        matches!(self, Self::Infinity)
    }
}

impl std::fmt::Display for CircleParam {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Finite(x) => write!(f, "{x}"),
            Self::Infinity => write!(f, "inf"),
        }
    }
}

impl std::str::FromStr for CircleParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "inf" {
            return Ok(Self::Infinity);
        }
        Ok(Self::Finite(parse_coord(s, "circle parameter")?))
    }
}

/// Point of the standard R-circle of height `u` at parameter `t`.
pub fn standard_point(u: f64, t: CircleParam) -> ClosurePoint {
    match t {
        CircleParam::Finite(x) => ClosurePoint::finite(ComplexScalar::new(x, 0.0), 0.0, u),
        CircleParam::Infinity => ClosurePoint::Infinity,
    }
}

/// An R-circle of a given height, generated from the standard circle by a
/// word without the closure inversion.
#[derive(Debug, Clone, PartialEq)]
pub struct RCircle {
    height: f64,
    word: GeneratorWord,
}

impl RCircle {
    pub fn new(height: f64, word: GeneratorWord) -> Result<Self> {
        if !height.is_finite() || height < 0.0 {
            return Err(Error::Parse(format!("invalid circle height {height}")));
        }
        if word.contains_closure_inversion() {
            return Err(Error::ForbiddenGenerator);
        }
        Ok(Self { height, word })
    }

    /// The standard circle of a height: empty word.
    pub fn standard(height: f64) -> Self {
        Self {
            height,
            word: GeneratorWord::identity(),
        }
    }

    pub fn height(&self) -> f64 {
        self.height
    }

    pub fn word(&self) -> &GeneratorWord {
        &self.word
    }

    /// Height of the standard circle the word is applied to; dilations in
    /// the word scale it onto the stored height.
    pub fn base_height(&self) -> f64 {
        let s = self.word.dilation_product();
        self.height / (s * s)
    }
}

/// Image of parameter `t` under the circle's word.
///
/// For a circle of positive base height whose word contains the
/// horospherical inversion, the parameter `inf` has no pointwise image
/// inside the horosphere and is rejected.
pub fn circle_point(c: &RCircle, t: CircleParam) -> Result<ClosurePoint> {
    let u0 = c.base_height();
    if t.is_infinity() && u0 > 0.0 && c.word.contains_horo_inversion() {
        let stage = c
            .word
            .generators
            .iter()
            .position(|g| matches!(g, Generator::InversionHoro))
            .unwrap();
        return Err(Error::UndefinedImage { stage });
    }
    apply_word(&c.word, &standard_point(u0, t))
}

fn sign(x: f64) -> i32 {
    if x > 0.0 {
        1
    } else {
        -1
    }
}

/// True iff `b` and `d` lie in different components of `(R ∪ {inf}) \ {a, c}`.
///
/// Decided through the sign of the real projective cross-ratio
/// `((b-a)(d-c)) / ((d-a)(b-c))`; an infinite parameter drops the two
/// factors containing it (one from each side).
pub fn separates(a: CircleParam, c: CircleParam, b: CircleParam, d: CircleParam) -> Result<bool> {
    let args = [a, c, b, d];
    for i in 0..4 {
        for j in (i + 1)..4 {
            if args[i] == args[j] {
                return Err(Error::DegenerateParams(i + 1, j + 1));
            }
        }
    }
    use CircleParam::*;
    let s = match (a, c, b, d) {
        (Finite(a), Finite(c), Finite(b), Finite(d)) => {
            sign(b - a) * sign(d - c) * sign(d - a) * sign(b - c)
        }
        (Infinity, Finite(c), Finite(b), Finite(d)) => sign(d - c) * sign(b - c),
        (Finite(a), Infinity, Finite(b), Finite(d)) => sign(b - a) * sign(d - a),
        (Finite(a), Finite(c), Infinity, Finite(d)) => sign(d - c) * sign(d - a),
        (Finite(a), Finite(c), Finite(b), Infinity) => sign(b - a) * sign(b - c),
        _ => unreachable!("at most one parameter is infinite"),
    };
    Ok(s < 0)
}

/// Which pair of slots separates the other two.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeparationPattern {
    /// `p1, p3` separate `p2, p4`; predicts `X1 - X2 = 1`.
    OneThree,
    /// `p1, p2` separate `p3, p4`; predicts `X2 - X1 = 1`.
    OneTwo,
    /// `p1, p4` separate `p2, p3`; predicts `X1 + X2 = 1`.
    OneFour,
}

impl std::fmt::Display for SeparationPattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::OneThree => write!(f, "p1,p3 | p2,p4"),
            Self::OneTwo => write!(f, "p1,p2 | p3,p4"),
            Self::OneFour => write!(f, "p1,p4 | p2,p3"),
        }
    }
}

/// Separation pattern of four pairwise distinct parameters; exactly one of
/// the three pairings separates on a circle.
pub fn separation_pattern(
    t1: CircleParam,
    t2: CircleParam,
    t3: CircleParam,
    t4: CircleParam,
) -> Result<SeparationPattern> {
    if separates(t1, t3, t2, t4)? {
        Ok(SeparationPattern::OneThree)
    } else if separates(t1, t2, t3, t4)? {
        Ok(SeparationPattern::OneTwo)
    } else if separates(t1, t4, t2, t3)? {
        Ok(SeparationPattern::OneFour)
    } else {
        unreachable!("one of the three pairings must separate")
    }
}

/// Image of four distinct parameters on a circle, together with the
/// separation pattern computed on the standard-circle parameters.
pub fn quadruple_on_circle(
    c: &RCircle,
    t1: CircleParam,
    t2: CircleParam,
    t3: CircleParam,
    t4: CircleParam,
) -> Result<(Quadruple, SeparationPattern)> {
    let pattern = separation_pattern(t1, t2, t3, t4)?;
    let q = Quadruple::new(
        circle_point(c, t1)?,
        circle_point(c, t2)?,
        circle_point(c, t3)?,
        circle_point(c, t4)?,
    )?;
    Ok((q, pattern))
}

/// The three equality cases of Ptolemaeus' theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EqualityCase {
    /// `X1 - X2 = 1`
    X1MinusX2,
    /// `X2 - X1 = 1`
    X2MinusX1,
    /// `X1 + X2 = 1`
    X1PlusX2,
}

impl EqualityCase {
    /// The case a separation pattern predicts.
    pub fn predicted_by(pattern: SeparationPattern) -> Self {
        match pattern {
            SeparationPattern::OneThree => Self::X1MinusX2,
            SeparationPattern::OneTwo => Self::X2MinusX1,
            SeparationPattern::OneFour => Self::X1PlusX2,
        }
    }
}

impl std::fmt::Display for EqualityCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::X1MinusX2 => write!(f, "X1-X2=1"),
            Self::X2MinusX1 => write!(f, "X2-X1=1"),
            Self::X1PlusX2 => write!(f, "X1+X2=1"),
        }
    }
}

/// Outcome of the equality-case classification of a quadruple.
#[derive(Debug, Clone, Copy)]
pub struct CaseReport {
    pub case: EqualityCase,
    /// Whether the held case is the one the separation pattern predicts.
    pub matches_pattern: bool,
    pub x1: f64,
    pub x2: f64,
    /// Residuals of the equalities, ordered (X1-X2=1, X2-X1=1, X1+X2=1).
    pub residuals: [f64; 3],
}

impl CaseReport {
    /// Residual of the case that holds.
    pub fn residual(&self) -> f64 {
        match self.case {
            EqualityCase::X1MinusX2 => self.residuals[0],
            EqualityCase::X2MinusX1 => self.residuals[1],
            EqualityCase::X1PlusX2 => self.residuals[2],
        }
    }

    /// Smallest residual among the two cases that do not hold.
    pub fn margin(&self) -> f64 {
        let mut others: Vec<f64> = match self.case {
            EqualityCase::X1MinusX2 => vec![self.residuals[1], self.residuals[2]],
            EqualityCase::X2MinusX1 => vec![self.residuals[0], self.residuals[2]],
            EqualityCase::X1PlusX2 => vec![self.residuals[0], self.residuals[1]],
        };
        others.sort_by(|a, b| a.partial_cmp(b).unwrap());
        others[0]
    }
}

/// Decide which of the three equalities a quadruple satisfies, relative to
/// `tol * max(x1, x2, 1)`, and whether it matches the predicted case.
pub fn ptolemaeus_case(q: &Quadruple, pattern: SeparationPattern, tol: f64) -> Result<CaseReport> {
    let (x1, x2) = x1_x2(q)?.as_f64();
    let scale = x1.max(x2).max(1.0);
    let residuals = [
        (x1 - x2 - 1.0).abs(),
        (x2 - x1 - 1.0).abs(),
        (x1 + x2 - 1.0).abs(),
    ];
    let mut held: Option<EqualityCase> = None;
    let mut best = f64::INFINITY;
    for (i, case) in [
        EqualityCase::X1MinusX2,
        EqualityCase::X2MinusX1,
        EqualityCase::X1PlusX2,
    ]
    .iter()
    .enumerate()
    {
        if residuals[i] <= tol * scale && residuals[i] < best {
            best = residuals[i];
            held = Some(*case);
        }
    }
    match held {
        None => Err(Error::NoEqualityHolds {
            r1: residuals[0],
            r2: residuals[1],
            r3: residuals[2],
        }),
        Some(case) => Ok(CaseReport {
            case,
            matches_pattern: case == EqualityCase::predicted_by(pattern),
            x1,
            x2,
            residuals,
        }),
    }
}
