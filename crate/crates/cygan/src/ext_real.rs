//! Nonnegative reals extended with `+inf`, the codomain of the extended
//! Cygan metric. NaN is excluded by construction.

use std::cmp::Ordering;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtReal {
    Finite(f64),
    PosInfinity,
}

impl ExtReal {
    /// Wrap a finite nonnegative value.
    pub fn finite(x: f64) -> Self {
        debug_assert!(
            x.is_finite() && x >= 0.0,
            "ExtReal requires finite x >= 0, got {x}"
        );
        Self::Finite(x)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Self::Finite(_))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Self::PosInfinity)
    }

    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Self::Finite(x) => Some(*x),
            Self::PosInfinity => None,
        }
    }

    /// Finite value or panic; for quantities proven finite by construction.
    pub fn expect_finite(&self) -> f64 {
        self.as_f64().expect("value is infinite")
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Self::Finite(x) if *x == 0.0)
    }
}

impl Eq for ExtReal {}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtReal {
    /// Total order: finite values by magnitude, `+inf` above everything.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Self::Finite(a), Self::Finite(b)) => a.partial_cmp(b).expect("ExtReal holds no NaN"),
            (Self::Finite(_), Self::PosInfinity) => Ordering::Less,
            (Self::PosInfinity, Self::Finite(_)) => Ordering::Greater,
            (Self::PosInfinity, Self::PosInfinity) => Ordering::Equal,
        }
    }
}

impl std::fmt::Display for ExtReal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Finite(x) => write!(f, "{x}"),
            Self::PosInfinity => write!(f, "inf"),
        }
    }
}
