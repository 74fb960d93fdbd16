//! Integer slopes, splitting frames and the edge-count inequalities built on them.
//!
//! A slope with respect to a basis `(f1, f2)` is a broken line whose edge
//! vectors `a_i = a_i1·f1 + a_i2·f2` all point right and down
//! (`a_i1 > 0`, `a_i2 < 0`) and turn counter-clockwise
//! (`a_i1·a_{i+1,2} − a_{i+1,1}·a_i2 > 0`). A frame `(o; f1, f2)` splits a
//! slope when one endpoint is in the open second quadrant, the other in the
//! open fourth, and the slope passes through the open first quadrant.

mod checks;
mod maximal;
mod profile;

use alloc::vec::Vec;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::lattice::{IntMat2, IntVec};

pub use checks::{check_lemma_ledger, check_pr_slp, check_th3_6, check_th3_8, SlpHint};
pub use maximal::{check_step_bounds, frame_splits_maximal, maximal_slopes, MaximalSlopes};
pub use profile::{slope_profile, SlopeProfile};

/// An origin and a unimodular basis `(f1, f2)` of `ℤ²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Frame {
    pub origin: IntVec,
    pub f1: IntVec,
    pub f2: IntVec,
}

impl Frame {
    pub fn new(origin: IntVec, f1: IntVec, f2: IntVec) -> Result<Self> {
        let m = IntMat2::from_columns(f1, f2);
        if !m.is_unimodular() {
            return Err(Error::NotUnimodular(m.det()));
        }
        Ok(Frame { origin, f1, f2 })
    }

    /// `(o; e1, e2)`.
    pub fn standard(origin: IntVec) -> Self {
        Frame {
            origin,
            f1: IntVec::E1,
            f2: IntVec::E2,
        }
    }

    /// `(o; f2, f1)`.
    pub fn swapped(&self) -> Frame {
        Frame {
            origin: self.origin,
            f1: self.f2,
            f2: self.f1,
        }
    }

    /// Coordinates `(c1, c2)` with `p = o + c1·f1 + c2·f2`.
    pub fn coords(&self, p: IntVec) -> Result<IntVec> {
        IntMat2::from_columns(self.f1, self.f2)
            .inverse()?
            .apply(p.checked_sub(self.origin)?)
    }
}

/// A validated integer slope. `N = vertices.len() − 1` edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Slope {
    vertices: Vec<IntVec>,
    f1: IntVec,
    f2: IntVec,
}

impl Slope {
    pub fn vertices(&self) -> &[IntVec] {
        &self.vertices
    }

    pub fn basis(&self) -> (IntVec, IntVec) {
        (self.f1, self.f2)
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Edge vectors in basis coordinates.
    pub fn edge_vectors(&self) -> Vec<IntVec> {
        basis_edges(&self.vertices, self.f1, self.f2).expect("validated slope")
    }

    /// The same broken line read as a slope for the basis `(f2, f1)`.
    pub fn swapped(&self) -> Slope {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Slope {
            vertices,
            f1: self.f2,
            f2: self.f1,
        }
    }
}

fn basis_edges(vertices: &[IntVec], f1: IntVec, f2: IntVec) -> Result<Vec<IntVec>> {
    let inv = IntMat2::from_columns(f1, f2).inverse()?;
    vertices
        .windows(2)
        .map(|w| inv.apply(w[1].checked_sub(w[0])?))
        .collect()
}

/// Checks the sign and turning conditions; edge indices in errors start at 1.
pub fn validate_slope(vertices: Vec<IntVec>, f1: IntVec, f2: IntVec) -> Result<Slope> {
    if vertices.is_empty() {
        return Err(Error::Precondition("a slope needs at least one vertex"));
    }
    let edges = basis_edges(&vertices, f1, f2)?;
    for (i, a) in edges.iter().enumerate() {
        if a.x1 <= 0 || a.x2 >= 0 {
            return Err(Error::InvalidSlope {
                edge: i + 1,
                condition: "a_i1 > 0 and a_i2 < 0",
            });
        }
    }
    for (i, w) in edges.windows(2).enumerate() {
        if w[0].cross(w[1]) <= 0 {
            return Err(Error::InvalidSlope {
                edge: i + 1,
                condition: "positive determinant with the next edge",
            });
        }
    }
    Ok(Slope { vertices, f1, f2 })
}

/// Vertex coordinates in the frame, ordered so the frame reads them as a slope.
///
/// The frame basis must be the slope basis or its swap; in the second case
/// the traversal is reversed.
pub(crate) fn framed(frame: &Frame, q: &Slope) -> Result<Vec<IntVec>> {
    let mut pts = q
        .vertices
        .iter()
        .map(|&v| frame.coords(v))
        .collect::<Result<Vec<_>>>()?;
    if (frame.f1, frame.f2) == (q.f1, q.f2) {
        Ok(pts)
    } else if (frame.f1, frame.f2) == (q.f2, q.f1) {
        pts.reverse();
        Ok(pts)
    } else {
        Err(Error::Precondition(
            "frame basis must be the slope basis or its swap",
        ))
    }
}

type Q128 = Ratio<i128>;

/// Whether some point of the segment `p → q` has both coordinates strictly positive.
fn segment_meets_open_quadrant(p: IntVec, q: IntVec) -> bool {
    if p.x1 > 0 && p.x2 > 0 || q.x1 > 0 && q.x2 > 0 {
        return true;
    }
    let d = q - p;
    let mut lo = Q128::from_integer(0);
    let mut hi = Q128::from_integer(1);
    for (pj, dj) in [(p.x1 as i128, d.x1 as i128), (p.x2 as i128, d.x2 as i128)] {
        match dj.signum() {
            0 if pj <= 0 => return false,
            0 => {}
            1 => lo = lo.max(Q128::new(-pj, dj)),
            _ => hi = hi.min(Q128::new(-pj, dj)),
        }
    }
    lo < hi
}

pub(crate) fn splits_framed(pts: &[IntVec]) -> bool {
    let (Some(&v), Some(&w)) = (pts.first(), pts.last()) else {
        return false;
    };
    pts.len() >= 2
        && v.x1 < 0
        && v.x2 > 0
        && w.x1 > 0
        && w.x2 < 0
        && pts
            .windows(2)
            .any(|e| segment_meets_open_quadrant(e[0], e[1]))
}

/// Whether `frame` splits `q`.
pub fn frame_splits(frame: &Frame, q: &Slope) -> Result<bool> {
    Ok(splits_framed(&framed(frame, q)?))
}

/// Whether a splitting frame forms small angle with `q`, via `α ≥ 1`.
pub fn forms_small_angle(frame: &Frame, q: &Slope) -> Result<bool> {
    Ok(slope_profile(frame, q)?.small_angle())
}
