//! The four maximal slopes of a convex polygon and the statements tying them
//! to the bounding box.

use alloc::vec::Vec;

use super::{frame_splits, validate_slope, Frame, Slope};
use crate::error::{Error, Result};
use crate::lattice::{steps, IntVec, Sublattice};
use crate::polygon::Polygon;
use crate::report::{Relation, Report};

const E1: IntVec = IntVec::E1;
const E2: IntVec = IntVec::E2;
const NE1: IntVec = IntVec::new(-1, 0);
const NE2: IntVec = IntVec::new(0, -1);

/// `Q1..Q4` (stored at indices 0..3), their edge counts `N_k`, and the
/// flags `M_k` marking a nondegenerate axis-parallel side.
///
/// `Q4` runs counter-clockwise from `(W, W−)` to `(S−, S)` in basis `(e1, e2)`,
/// `Q1` from `(S+, S)` to `(E, E−)` in `(e2, −e1)`, `Q2` from `(E, E+)` to
/// `(N+, N)` in `(−e1, −e2)`, and `Q3` from `(N−, N)` to `(W, W+)` in `(−e2, e1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalSlopes {
    pub slopes: [Slope; 4],
    pub edge_counts: [usize; 4],
    pub m: [u8; 4],
}

impl MaximalSlopes {
    pub fn get(&self, k: usize) -> &Slope {
        &self.slopes[k - 1]
    }

    /// `ΣN_k + ΣM_k`.
    pub fn edge_total(&self) -> usize {
        self.edge_counts.iter().sum::<usize>() + self.m.iter().map(|&m| m as usize).sum::<usize>()
    }
}

pub fn maximal_slopes(p: &Polygon) -> Result<MaximalSlopes> {
    let vs = p.vertices();
    let st = p.bounding_stats();
    let idx = |x: i64, y: i64| {
        vs.iter()
            .position(|&v| v == IntVec::new(x, y))
            .ok_or(Error::Contradiction(
                "bounding-box extreme point is not a vertex",
            ))
    };
    let walk = |from: usize, to: usize| -> Vec<IntVec> {
        let mut out = alloc::vec![vs[from]];
        let mut i = from;
        while i != to {
            i = (i + 1) % vs.len();
            out.push(vs[i]);
        }
        out
    };
    let q1 = validate_slope(
        walk(idx(st.south_plus, st.south)?, idx(st.east, st.east_minus)?),
        E2,
        NE1,
    )?;
    let q2 = validate_slope(
        walk(idx(st.east, st.east_plus)?, idx(st.north_plus, st.north)?),
        NE1,
        NE2,
    )?;
    let q3 = validate_slope(
        walk(idx(st.north_minus, st.north)?, idx(st.west, st.west_plus)?),
        NE2,
        E1,
    )?;
    let q4 = validate_slope(
        walk(idx(st.west, st.west_minus)?, idx(st.south_minus, st.south)?),
        E1,
        E2,
    )?;
    let m = [
        (st.south_minus != st.south_plus) as u8,
        (st.east_minus != st.east_plus) as u8,
        (st.north_minus != st.north_plus) as u8,
        (st.west_minus != st.west_plus) as u8,
    ];
    let slopes = [q1, q2, q3, q4];
    let edge_counts = [0, 1, 2, 3].map(|k| slopes[k].edge_count());
    Ok(MaximalSlopes {
        slopes,
        edge_counts,
        m,
    })
}

/// The maximal slope a frame with axis directions is guaranteed to split.
///
/// Returns `None` when the basis is not a pair of axis directions, the origin
/// lies in `P`, or one of the rays `o + λ·f_j` (`λ ≥ 0`) does not split `P`.
pub fn frame_splits_maximal(p: &Polygon, frame: &Frame) -> Result<Option<usize>> {
    let k = match (frame.f1, frame.f2) {
        (NE1, E2) | (E2, NE1) => 1,
        (NE2, NE1) | (NE1, NE2) => 2,
        (E1, NE2) | (NE2, E1) => 3,
        (E2, E1) | (E1, E2) => 4,
        _ => return Ok(None),
    };
    if p.contains(frame.origin)
        || !p.ray_splits(frame.origin, frame.f1)
        || !p.ray_splits(frame.origin, frame.f2)
    {
        return Ok(None);
    }
    let slopes = maximal_slopes(p)?;
    if !frame_splits(frame, slopes.get(k))? {
        return Err(Error::Contradiction(
            "axis frame does not split the matching maximal slope",
        ));
    }
    Ok(Some(k))
}

/// Axis-parallel sides against the large steps of a lattice holding the vertices.
pub fn check_step_bounds(p: &Polygon, lattice: &Sublattice) -> Result<Report> {
    if !p.vertices().iter().all(|&v| lattice.contains(v)) {
        return Err(Error::Precondition(
            "polygon vertices are not in the lattice",
        ));
    }
    let st = steps(lattice, E1, E2)?;
    let (s1, s2) = (st.large_f1 as i128, st.large_f2 as i128);
    let b = p.bounding_stats();
    let m = maximal_slopes(p)?.m.map(i128::from);
    let mut r = Report::new("axis sides against large steps");
    r.witness("S1", s1);
    r.witness("S2", s2);
    r.check(
        "S+ - S- >= S1 M1",
        b.south_plus - b.south_minus,
        Relation::Ge,
        s1 * m[0],
    );
    r.check(
        "E+ - E- >= S2 M2",
        b.east_plus - b.east_minus,
        Relation::Ge,
        s2 * m[1],
    );
    r.check(
        "N+ - N- >= S1 M3",
        b.north_plus - b.north_minus,
        Relation::Ge,
        s1 * m[2],
    );
    r.check(
        "W+ - W- >= S2 M4",
        b.west_plus - b.west_minus,
        Relation::Ge,
        s2 * m[3],
    );
    Ok(r)
}
