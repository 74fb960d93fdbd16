//! Seeded generators for the randomized suites.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sublattice_core::polygon::convex_hull;
use sublattice_core::slopes::{frame_splits, validate_slope, Frame, Slope};
use sublattice_core::{IntMat2, IntVec, Polygon, Sublattice};

pub const DEFAULT_SEED: u64 = 0x5eed_1a77;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The hull of `points` uniform samples in `[−r, r]²`, retried until two-dimensional.
pub fn random_polygon<R: Rng>(rng: &mut R, r: i64, points: usize) -> Polygon {
    loop {
        let pts: Vec<IntVec> = (0..points.max(3))
            .map(|_| IntVec::new(rng.random_range(-r..=r), rng.random_range(-r..=r)))
            .collect();
        if let Ok(p) = convex_hull(&pts) {
            return p;
        }
    }
}

/// A product of a few elementary unimodular matrices.
pub fn random_unimodular<R: Rng>(rng: &mut R) -> IntMat2 {
    let mut m = IntMat2::IDENTITY;
    for _ in 0..rng.random_range(0..=3) {
        let k = rng.random_range(-2..=2);
        let e = match rng.random_range(0..4) {
            0 => IntMat2::new(1, k, 0, 1),
            1 => IntMat2::new(1, 0, k, 1),
            2 => IntMat2::new(0, 1, 1, 0),
            _ => IntMat2::new(-1, 0, 0, 1),
        };
        m = m.compose(&e).expect("small entries");
    }
    m
}

/// Edge vectors with `a1 ∈ [1,6]`, `a2 ∈ [−6,−1]`, sorted counter-clockwise
/// and with parallel duplicates dropped.
pub fn random_edges<R: Rng>(rng: &mut R, max_edges: usize) -> Vec<IntVec> {
    let count = rng.random_range(1..=max_edges.max(1));
    let mut edges: Vec<IntVec> = (0..count)
        .map(|_| IntVec::new(rng.random_range(1..=6), rng.random_range(-6..=-1)))
        .collect();
    edges.sort_by(|&a, &b| b.cross(a).cmp(&0));
    edges.dedup_by(|b, a| a.cross(*b) == 0);
    edges
}

/// A slope, a frame splitting it, and, when requested, a proper lattice
/// holding every vertex.
#[derive(Debug, Clone)]
pub struct SlopeInstance {
    pub frame: Frame,
    pub slope: Slope,
    pub lattice: Option<Sublattice>,
}

/// Vertex lattices used for the proper-sublattice instances, as
/// `(d1, d2)` for `d1ℤ × d2ℤ` before the random change of basis.
pub const LATTICE_SCALES: [(i64, i64); 4] = [(2, 2), (1, 2), (2, 1), (3, 3)];

/// Rejection-samples a splitting frame for a random slope. With `scale`
/// the vertices lie in `F·(d1ℤ × d2ℤ)`, where `F` is the random basis.
pub fn random_slope_instance<R: Rng>(
    rng: &mut R,
    max_edges: usize,
    scale: Option<(i64, i64)>,
) -> SlopeInstance {
    let (d1, d2) = scale.unwrap_or((1, 1));
    loop {
        let edges = random_edges(rng, max_edges);
        let mut u = IntVec::new(d1 * rng.random_range(-4..=4), d2 * rng.random_range(-4..=4));
        let mut coords = vec![u];
        for a in &edges {
            u = u + IntVec::new(d1 * a.x1, d2 * a.x2);
            coords.push(u);
        }
        let f = random_unimodular(rng);
        let (f1, f2) = (f.col1(), f.col2());
        let world: Vec<IntVec> = coords
            .iter()
            .map(|&c| f.apply(c).expect("small coordinates"))
            .collect();
        let Ok(slope) = validate_slope(world, f1, f2) else {
            continue;
        };
        let (lo1, hi1) = (coords[0].x1, coords.last().unwrap().x1);
        let (lo2, hi2) = (coords.last().unwrap().x2, coords[0].x2);
        for _ in 0..40 {
            let o = IntVec::new(rng.random_range(lo1..=hi1), rng.random_range(lo2..=hi2));
            let mut frame =
                Frame::new(f.apply(o).expect("small coordinates"), f1, f2).expect("unimodular");
            if rng.random_bool(0.25) {
                frame = frame.swapped();
            }
            if frame_splits(&frame, &slope).unwrap_or(false) {
                let lattice = scale.map(|_| {
                    Sublattice::new(f.compose(&IntMat2::diag(d1, d2)).expect("small entries"))
                        .expect("nonsingular")
                });
                return SlopeInstance {
                    frame,
                    slope,
                    lattice,
                };
            }
        }
    }
}

/// Mixes plain instances with proper-sublattice ones.
pub fn random_mixed_instance<R: Rng>(rng: &mut R, max_edges: usize) -> SlopeInstance {
    if rng.random_bool(0.5) {
        random_slope_instance(rng, max_edges, None)
    } else {
        let s = *LATTICE_SCALES.choose(rng).expect("nonempty");
        random_slope_instance(rng, max_edges, Some(s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instances_split_and_respect_the_lattice() {
        let mut r = rng(7);
        for _ in 0..200 {
            let inst = random_mixed_instance(&mut r, 6);
            assert!(frame_splits(&inst.frame, &inst.slope).unwrap());
            if let Some(l) = inst.lattice {
                assert!(l.is_proper());
                assert!(inst.slope.vertices().iter().all(|&v| l.contains(v)));
            }
        }
    }

    #[test]
    fn seeds_are_reproducible() {
        let a = random_polygon(&mut rng(3), 6, 8);
        let b = random_polygon(&mut rng(3), 6, 8);
        assert_eq!(a, b);
    }
}
