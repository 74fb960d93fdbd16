#![allow(dead_code)]

use proptest::prelude::*;
use sublattice_core::polygon::convex_hull;
use sublattice_core::{IntMat2, IntVec, Polygon, Sublattice};

pub fn v(x1: i64, x2: i64) -> IntVec {
    IntVec::new(x1, x2)
}

pub fn hull(pts: &[(i64, i64)]) -> Polygon {
    convex_hull(&pts.iter().map(|&p| p.into()).collect::<Vec<_>>()).unwrap()
}

/// Hull of 3..=max random points in `[−r, r]²`, skipping degenerate samples.
pub fn polygon(r: i64, max: usize) -> impl Strategy<Value = Polygon> {
    prop::collection::vec((-r..=r, -r..=r), 3..=max).prop_filter_map("degenerate hull", |pts| {
        convex_hull(&pts.into_iter().map(IntVec::from).collect::<Vec<_>>()).ok()
    })
}

pub fn nonsingular(r: i64) -> impl Strategy<Value = IntMat2> {
    (-r..=r, -r..=r, -r..=r, -r..=r)
        .prop_map(|(a, b, c, d)| IntMat2::new(a, b, c, d))
        .prop_filter("singular", |m| m.det() != 0)
}

/// Products of elementary unimodular matrices.
pub fn unimodular() -> impl Strategy<Value = IntMat2> {
    prop::collection::vec((0..4u8, -3i64..=3), 0..5).prop_map(|ops| {
        ops.into_iter().fold(IntMat2::IDENTITY, |m, (kind, k)| {
            let e = match kind {
                0 => IntMat2::new(1, k, 0, 1),
                1 => IntMat2::new(1, 0, k, 1),
                2 => IntMat2::new(0, 1, 1, 0),
                _ => IntMat2::new(-1, 0, 0, 1),
            };
            m.compose(&e).unwrap()
        })
    })
}

pub fn proper_lattice() -> impl Strategy<Value = Sublattice> {
    nonsingular(4).prop_filter_map("improper", |m| {
        Sublattice::new(m).ok().filter(|l| l.is_proper())
    })
}
