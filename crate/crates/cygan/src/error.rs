use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Two of the four points coincide (1-based positions).
    #[error("degenerate quadruple: points {0} and {1} coincide")]
    DegenerateQuadruple(usize, usize),

    /// A transformation has no image at the given point. `stage` is the
    /// 0-based index of the failing generator inside the word (0 for a
    /// standalone generator).
    #[error(
        "undefined image at word stage {stage}: the horospherical inversion has no image there"
    )]
    UndefinedImage { stage: usize },

    /// A point required to be interior has height zero or is infinite
    /// (1-based position).
    #[error("point {0} is not an interior point")]
    NotInterior(usize),

    /// The fourth point of the quadruple is not the origin.
    #[error("fourth point of the quadruple is not the origin")]
    BadBasePoint,

    /// Two points expected on a common horosphere have different heights.
    #[error("height mismatch: {0} != {1}")]
    HeightMismatch(f64, f64),

    /// Two circle parameters coincide (1-based positions in argument order).
    #[error("degenerate circle parameters: parameters {0} and {1} coincide")]
    DegenerateParams(usize, usize),

    /// Closure inversion is not a horosphere-compatible generator.
    #[error("closure inversion cannot appear in a circle word")]
    ForbiddenGenerator,

    /// None of the three Ptolemaean equality cases holds within tolerance.
    #[error("no equality case holds within tolerance (residuals {r1:e}, {r2:e}, {r3:e})")]
    NoEqualityHolds { r1: f64, r2: f64, r3: f64 },

    /// A cross-ratio escaped (0, +inf); signals catastrophic underflow or
    /// overflow, never a valid quadruple.
    #[error("cross-ratio escaped (0, +inf): {0}")]
    CrossRatioRange(f64),

    /// Malformed text input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
