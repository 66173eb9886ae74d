//! Quadruples of pairwise distinct closure points, the argument of
//! cross-ratios.

use crate::error::{Error, Result};
use crate::point::ClosurePoint;

/// Four pairwise distinct points. Distinctness is exact coordinate
/// inequality; construction rejects exactly the inputs with a coincident
/// pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadruple {
    points: [ClosurePoint; 4],
}

impl Quadruple {
    pub fn new(
        p1: ClosurePoint,
        p2: ClosurePoint,
        p3: ClosurePoint,
        p4: ClosurePoint,
    ) -> Result<Self> {
        let points = [p1, p2, p3, p4];
        for i in 0..4 {
            for j in (i + 1)..4 {
                if points[i] == points[j] {
                    return Err(Error::DegenerateQuadruple(i + 1, j + 1));
                }
            }
        }
        Ok(Self { points })
    }

    pub fn from_array(points: [ClosurePoint; 4]) -> Result<Self> {
        Self::new(points[0], points[1], points[2], points[3])
    }

    pub fn points(&self) -> &[ClosurePoint; 4] {
        &self.points
    }

    /// 0-based access.
    pub fn get(&self, i: usize) -> ClosurePoint {
        self.points[i]
    }

    /// Relabel: slot `i` of the result holds `points[perm[i]]`. Distinctness
    /// is preserved, so no re-validation happens.
    pub fn permuted(&self, perm: [usize; 4]) -> Self {
        Self {
            points: [
                self.points[perm[0]],
                self.points[perm[1]],
                self.points[perm[2]],
                self.points[perm[3]],
            ],
        }
    }

    /// Position (0-based) of the point at infinity, if present.
    pub fn infinity_position(&self) -> Option<usize> {
        self.points.iter().position(ClosurePoint::is_infinity)
    }
}
