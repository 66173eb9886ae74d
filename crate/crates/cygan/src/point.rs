//! Points of the Heisenberg group and of the compactified plane.
//!
//! A finite point carries horospherical coordinates `(zeta, v, u)` with
//! `zeta` complex, `v` real and height `u >= 0`; `u = 0` is the finite
//! boundary and `u > 0` the interior. The single point at infinity
//! compactifies the space.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex scalar backing every `zeta` coordinate.
pub type ComplexScalar = Complex64;

/// Largest coordinate magnitude accepted by the text parser. The metric
/// squares and fourth-powers coordinates, so this keeps all intermediate
/// values inside f64 range.
pub const MAX_COORD: f64 = 1e100;

/// A point `(zeta, v)` of the Heisenberg group.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeisenbergPoint {
    pub zeta: ComplexScalar,
    pub v: f64,
}

impl HeisenbergPoint {
    pub fn new(zeta: ComplexScalar, v: f64) -> Self {
        // +0.0 collapses signed zeros so printing is canonical.
        Self {
            zeta: ComplexScalar::new(zeta.re + 0.0, zeta.im + 0.0),
            v: v + 0.0,
        }
    }

    /// The group identity (0, 0).
    pub fn origin() -> Self {
        Self::new(ComplexScalar::new(0.0, 0.0), 0.0)
    }

    pub fn is_origin(&self) -> bool {
        self.zeta.re == 0.0 && self.zeta.im == 0.0 && self.v == 0.0
    }
}

/// A point of the compactified plane: finite horospherical coordinates or
/// the distinguished point at infinity.
///
/// Equality is exact coordinate equality; there is no tolerance anywhere in
/// the point types.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClosurePoint {
    Finite { zeta: ComplexScalar, v: f64, u: f64 },
    Infinity,
}

impl ClosurePoint {
    /// A finite point `(zeta, v, u)`. Height must be nonnegative and all
    /// coordinates finite.
    pub fn finite(zeta: ComplexScalar, v: f64, u: f64) -> Self {
        debug_assert!(zeta.re.is_finite() && zeta.im.is_finite() && v.is_finite());
        debug_assert!(u.is_finite() && u >= 0.0);
        Self::Finite {
            zeta: ComplexScalar::new(zeta.re + 0.0, zeta.im + 0.0),
            v: v + 0.0,
            u: u + 0.0,
        }
    }

    pub fn from_coords(zre: f64, zim: f64, v: f64, u: f64) -> Self {
        Self::finite(ComplexScalar::new(zre, zim), v, u)
    }

    /// A boundary point (height zero).
    pub fn boundary(p: HeisenbergPoint) -> Self {
        Self::finite(p.zeta, p.v, 0.0)
    }

    /// The base point `o = (0, 0, 0)`.
    pub fn origin() -> Self {
        Self::from_coords(0.0, 0.0, 0.0, 0.0)
    }

    pub fn infinity() -> Self {
        Self::Infinity
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Self::Infinity)
    }

    pub fn is_boundary(&self) -> bool {
        matches!(self, Self::Finite { u, .. } if *u == 0.0)
    }

    pub fn is_interior(&self) -> bool {
        matches!(self, Self::Finite { u, .. } if *u > 0.0)
    }

    pub fn is_origin(&self) -> bool {
        *self == Self::origin()
    }

    /// Height of a finite point.
    pub fn height(&self) -> Option<f64> {
        match self {
            Self::Finite { u, .. } => Some(*u),
            Self::Infinity => None,
        }
    }

    /// The Heisenberg part `(zeta, v)` of a finite point.
    pub fn heisenberg_part(&self) -> Option<HeisenbergPoint> {
        match self {
            Self::Finite { zeta, v, .. } => Some(HeisenbergPoint::new(*zeta, *v)),
            Self::Infinity => None,
        }
    }
}

/// Exact point equality: both infinite, or coordinates equal bit-for-bit
/// (up to IEEE signed-zero identification).
pub fn points_equal(p: &ClosurePoint, q: &ClosurePoint) -> bool {
    p == q
}

impl std::fmt::Display for ClosurePoint {
    /// Text form used by the CLI: `inf`, or `zre,zim,v,u` with
    /// shortest-round-trip decimal coordinates.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Infinity => write!(f, "inf"),
            Self::Finite { zeta, v, u } => write!(f, "{},{},{},{}", zeta.re, zeta.im, v, u),
        }
    }
}

pub(crate) fn parse_coord(s: &str, what: &str) -> Result<f64> {
    let x: f64 = s
        .parse()
        .map_err(|_| Error::Parse(format!("invalid {what} `{s}`")))?;
    if !x.is_finite() {
        return Err(Error::Parse(format!("{what} `{s}` is not finite")));
    }
    if x.abs() > MAX_COORD {
        return Err(Error::Parse(format!(
            "{what} `{s}` exceeds the magnitude bound 1e100"
        )));
    }
    Ok(x)
}

impl std::str::FromStr for ClosurePoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "inf" {
            return Ok(Self::Infinity);
        }
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 4 {
            return Err(Error::Parse(format!(
                "expected `inf` or `zre,zim,v,u`, got `{s}`"
            )));
        }
        let zre = parse_coord(parts[0], "coordinate")?;
        let zim = parse_coord(parts[1], "coordinate")?;
        let v = parse_coord(parts[2], "coordinate")?;
        let u = parse_coord(parts[3], "height")?;
        if u < 0.0 {
            return Err(Error::Parse(format!("height `{}` is negative", parts[3])));
        }
        Ok(Self::from_coords(zre, zim, v, u))
    }
}
