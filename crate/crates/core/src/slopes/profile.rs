use alloc::vec::Vec;

use num_integer::Integer;
use num_rational::Ratio;

use super::{framed, splits_framed, Frame, Slope};
use crate::error::{Error, Result};
use crate::lattice::IntVec;

/// Quantities attached to a slope split by a frame.
///
/// Indices follow the slope's traversal in the frame: vertices `v_0..v_N`,
/// edges `ε_1..ε_N`. `E1 = {ε_1..ε_k}`, `E2 = {ε_{k+1}..ε_N}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeProfile {
    /// Frame coordinates of the vertices, in traversal order.
    pub points: Vec<IntVec>,
    /// Edge vectors in frame coordinates.
    pub edges: Vec<IntVec>,
    /// First vertex index with negative second coordinate.
    pub k: usize,
    /// `a_k1 / (−a_k2)`.
    pub alpha: Ratio<i64>,
    /// `⌈α⌉ − 1`
    pub t: i64,
    /// Edges `ε_i`, `i < k`, with `a_i2 = −1`.
    pub s_edges: Vec<usize>,
    pub s: i64,
    /// Set when `v_{k−1,2} > 0` and `α` is an integer.
    pub delta_flag: bool,
    pub pi1_e: i64,
    pub pi2_e: i64,
    pub pihat_e: i64,
    pub pihat_e1: i64,
    pub pihat_e2: i64,
}

impl SlopeProfile {
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn v(&self) -> IntVec {
        self.points[0]
    }

    pub fn w(&self) -> IntVec {
        *self.points.last().expect("split slopes have edges")
    }

    pub fn small_angle(&self) -> bool {
        self.alpha >= Ratio::from_integer(1)
    }

    /// `π̂(ε_i)` for `i` in `1..=N`.
    pub fn pihat_edge(&self, i: usize) -> i64 {
        pi1(&self.points, i) + pi2(&self.points, i) - 2
    }
}

fn pos(x: i64) -> i64 {
    x.max(0)
}

fn pi1(pts: &[IntVec], i: usize) -> i64 {
    pos(pts[i].x1) - pos(pts[i - 1].x1)
}

fn pi2(pts: &[IntVec], i: usize) -> i64 {
    pos(pts[i - 1].x2) - pos(pts[i].x2)
}

/// Builds the profile; the frame must split the slope.
pub fn slope_profile(frame: &Frame, q: &Slope) -> Result<SlopeProfile> {
    let points = framed(frame, q)?;
    if !splits_framed(&points) {
        return Err(Error::Precondition("frame does not split the slope"));
    }
    let n = points.len() - 1;
    let edges: Vec<IntVec> = points.windows(2).map(|w| w[1] - w[0]).collect();
    let k = points
        .iter()
        .position(|p| p.x2 < 0)
        .expect("last endpoint is below the axis");
    let ak = edges[k - 1];
    let alpha = Ratio::new(ak.x1, -ak.x2);
    let t = Integer::div_ceil(&ak.x1, &-ak.x2) - 1;
    let s_edges: Vec<usize> = (1..k).filter(|&i| edges[i - 1].x2 == -1).collect();
    let delta_flag = points[k - 1].x2 > 0 && alpha.is_integer();
    let pi1_e: i64 = (1..=n).map(|i| pi1(&points, i)).sum();
    let pi2_e: i64 = (1..=n).map(|i| pi2(&points, i)).sum();
    let pihat = |i: usize| pi1(&points, i) + pi2(&points, i) - 2;
    let pihat_e1: i64 = (1..=k).map(pihat).sum();
    let pihat_e2: i64 = (k + 1..=n).map(pihat).sum();
    Ok(SlopeProfile {
        k,
        alpha,
        t,
        s: s_edges.len() as i64,
        s_edges,
        delta_flag,
        pi1_e,
        pi2_e,
        pihat_e: pi1_e + pi2_e - 2 * n as i64,
        pihat_e1,
        pihat_e2,
        points,
        edges,
    })
}
