//! Exhaustive search for convex polygons free of a sublattice on a box.
//!
//! Every polygon is generated once, from its lexicographically smallest vertex
//! `p0`: the remaining vertices are taken in angular order around `p0`, and a
//! chain `p0, q1, .., qk` is a valid polygon exactly when consecutive turns are
//! strict left turns and every fan triangle `(p0, q_i, q_{i+1})` avoids the
//! sublattice. Freeness of the fan triangles is tabulated per anchor, so a
//! failing triangle prunes the whole subtree. The search is exponential in the
//! number of candidate points; boxes beyond roughly 9×9 get slow.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::time::Duration;

use super::extremal::nu;
use crate::error::{Error, Result};
use crate::lattice::{IntVec, Sublattice};
use crate::polygon::Polygon;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SearchBox {
    pub x1_min: i64,
    pub x1_max: i64,
    pub x2_min: i64,
    pub x2_max: i64,
}

impl SearchBox {
    pub fn new(x1_min: i64, x1_max: i64, x2_min: i64, x2_max: i64) -> Result<Self> {
        if x1_min > x1_max || x2_min > x2_max {
            return Err(Error::Precondition("search box is empty"));
        }
        Ok(SearchBox {
            x1_min,
            x1_max,
            x2_min,
            x2_max,
        })
    }

    pub fn square(lo: i64, hi: i64) -> Result<Self> {
        SearchBox::new(lo, hi, lo, hi)
    }

    /// `[−n+1, 2n−1]²`.
    pub fn default_for(n: i64) -> Self {
        SearchBox {
            x1_min: 1 - n,
            x1_max: 2 * n - 1,
            x2_min: 1 - n,
            x2_max: 2 * n - 1,
        }
    }

    pub fn contains(&self, p: IntVec) -> bool {
        (self.x1_min..=self.x1_max).contains(&p.x1) && (self.x2_min..=self.x2_max).contains(&p.x2)
    }

    pub fn point_count(&self) -> i128 {
        (self.x1_max - self.x1_min + 1) as i128 * (self.x2_max - self.x2_min + 1) as i128
    }

    pub fn contains_polygon(&self, p: &Polygon) -> bool {
        p.vertices().iter().all(|&v| self.contains(v))
    }
}

/// One unit of work: the polygons with a given lex-min vertex and a given
/// second vertex in counter-clockwise order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SearchTask {
    pub anchor: usize,
    pub first: usize,
}

/// What a task found. `best` is the first polygon of maximal vertex count in
/// search order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TaskOutcome {
    pub instances: u64,
    pub best_count: usize,
    pub best: Option<Polygon>,
}

impl TaskOutcome {
    /// Folds outcomes given in task order; ties keep the earlier witness.
    pub fn merge(outcomes: impl IntoIterator<Item = TaskOutcome>) -> TaskOutcome {
        let mut acc = TaskOutcome::default();
        for o in outcomes {
            acc.instances += o.instances;
            if o.best_count > acc.best_count {
                acc.best_count = o.best_count;
                acc.best = o.best;
            }
        }
        acc
    }
}

#[derive(Debug, Clone)]
struct AnchorTable {
    anchor: IntVec,
    order: Vec<IntVec>,
    /// `ok[i·m + j]`: `q_j` lies strictly counter-clockwise of `q_i` around the
    /// anchor and the closed triangle `(anchor, q_i, q_j)` avoids the lattice.
    ok: Vec<bool>,
}

impl AnchorTable {
    fn ok(&self, i: usize, j: usize) -> bool {
        self.ok[i * self.order.len() + j]
    }
}

#[derive(Debug, Clone)]
pub struct FreePolygonSearch {
    lattice: Sublattice,
    search_box: SearchBox,
    candidates: Vec<IntVec>,
    tables: Vec<AnchorTable>,
}

fn orient(a: IntVec, b: IntVec, c: IntVec) -> i128 {
    (b - a).cross(c - a)
}

fn in_closed_triangle(a: IntVec, b: IntVec, c: IntVec, p: IntVec) -> bool {
    orient(a, b, p) >= 0 && orient(b, c, p) >= 0 && orient(c, a, p) >= 0
}

impl FreePolygonSearch {
    pub fn new(lattice: &Sublattice, search_box: SearchBox) -> Self {
        Self::build(lattice, search_box, None)
    }

    /// Restricts vertices to a second lattice `Γ`.
    pub fn with_vertex_lattice(
        lattice: &Sublattice,
        search_box: SearchBox,
        vertex_lattice: &Sublattice,
    ) -> Self {
        Self::build(lattice, search_box, Some(vertex_lattice))
    }

    fn build(lattice: &Sublattice, b: SearchBox, gamma: Option<&Sublattice>) -> Self {
        let blockers = lattice.points_in_box(b.x1_min, b.x1_max, b.x2_min, b.x2_max);
        let mut candidates = Vec::new();
        for x1 in b.x1_min..=b.x1_max {
            for x2 in b.x2_min..=b.x2_max {
                let p = IntVec::new(x1, x2);
                if !lattice.contains(p) && gamma.map_or(true, |g| g.contains(p)) {
                    candidates.push(p);
                }
            }
        }
        let tables = candidates
            .iter()
            .enumerate()
            .map(|(a, &p0)| anchor_table(p0, &candidates[a + 1..], &blockers))
            .collect();
        FreePolygonSearch {
            lattice: *lattice,
            search_box: b,
            candidates,
            tables,
        }
    }

    pub fn lattice(&self) -> &Sublattice {
        &self.lattice
    }

    pub fn search_box(&self) -> SearchBox {
        self.search_box
    }

    /// Admissible vertices, in lexicographic order.
    pub fn candidates(&self) -> &[IntVec] {
        &self.candidates
    }

    /// All tasks, in the order that defines the canonical witness.
    pub fn tasks(&self) -> Vec<SearchTask> {
        self.tables
            .iter()
            .enumerate()
            .flat_map(|(anchor, t)| {
                (0..t.order.len()).map(move |first| SearchTask { anchor, first })
            })
            .collect()
    }

    /// Visits every polygon of the task with at least `min_vertices` vertices.
    pub fn run_task<F: FnMut(&[IntVec])>(
        &self,
        task: SearchTask,
        min_vertices: usize,
        mut visit: F,
    ) -> TaskOutcome {
        let t = &self.tables[task.anchor];
        let mut out = TaskOutcome::default();
        let mut chain = alloc::vec![t.anchor, t.order[task.first]];
        let mut idx = alloc::vec![task.first];
        dfs(
            t,
            &mut chain,
            &mut idx,
            min_vertices.max(3),
            &mut out,
            &mut visit,
        );
        out
    }

    /// Visits every free polygon with at least `min_vertices` vertices, sequentially.
    pub fn for_each<F: FnMut(&[IntVec])>(&self, min_vertices: usize, mut visit: F) -> TaskOutcome {
        TaskOutcome::merge(
            self.tasks()
                .into_iter()
                .map(|t| self.run_task(t, min_vertices, &mut visit)),
        )
    }

    pub fn collect(&self, min_vertices: usize) -> Vec<Polygon> {
        let mut out = Vec::new();
        self.for_each(min_vertices, |vs| {
            out.push(Polygon::from_canonical(vs.to_vec()))
        });
        out
    }
}

fn anchor_table(p0: IntVec, later: &[IntVec], blockers: &[IntVec]) -> AnchorTable {
    let mut order = later.to_vec();
    // Every point is lex-greater than p0, so all directions lie in a half-plane
    // and the cross product is a total angular order; ties by distance.
    order.sort_by(|&a, &b| match orient(p0, b, a).cmp(&0) {
        Ordering::Equal => (a - p0).dot(a - p0).cmp(&(b - p0).dot(b - p0)),
        o => o,
    });
    let m = order.len();
    let near: Vec<IntVec> = blockers.iter().copied().filter(|&z| z >= p0).collect();
    let mut ok = alloc::vec![false; m * m];
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = (order[i], order[j]);
            if orient(p0, a, b) <= 0 {
                continue;
            }
            let (lo1, hi1) = (p0.x1.min(a.x1).min(b.x1), p0.x1.max(a.x1).max(b.x1));
            let (lo2, hi2) = (p0.x2.min(a.x2).min(b.x2), p0.x2.max(a.x2).max(b.x2));
            ok[i * m + j] = !near.iter().any(|&z| {
                (lo1..=hi1).contains(&z.x1)
                    && (lo2..=hi2).contains(&z.x2)
                    && in_closed_triangle(p0, a, b, z)
            });
        }
    }
    AnchorTable {
        anchor: p0,
        order,
        ok,
    }
}

fn dfs<F: FnMut(&[IntVec])>(
    t: &AnchorTable,
    chain: &mut Vec<IntVec>,
    idx: &mut Vec<usize>,
    min_vertices: usize,
    out: &mut TaskOutcome,
    visit: &mut F,
) {
    let c = *idx.last().expect("chain has a vertex after the anchor");
    let (prev, cur) = (chain[chain.len() - 2], chain[chain.len() - 1]);
    for j in c + 1..t.order.len() {
        let q = t.order[j];
        if !t.ok(c, j) || orient(prev, cur, q) <= 0 {
            continue;
        }
        chain.push(q);
        idx.push(j);
        if chain.len() >= min_vertices {
            out.instances += 1;
            if chain.len() > out.best_count {
                out.best_count = chain.len();
                out.best = Some(Polygon::from_canonical(chain.clone()));
            }
            visit(chain);
        }
        dfs(t, chain, idx, min_vertices, out, visit);
        chain.pop();
        idx.pop();
    }
}

/// Outcome of an exhaustive search on a box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub lattice: Sublattice,
    pub search_box: SearchBox,
    pub max_vertices_found: usize,
    pub witness: Option<Polygon>,
    pub nu: i64,
    /// `max_vertices_found ≤ ν − 1`.
    pub consistent: bool,
    pub instances_checked: u64,
    pub elapsed: Option<Duration>,
}

impl VerificationReport {
    pub fn from_outcome(
        search: &FreePolygonSearch,
        outcome: TaskOutcome,
        elapsed: Option<Duration>,
    ) -> Result<Self> {
        let (delta, n) = search.lattice.invariant_factors();
        let nu = nu(delta, n)?;
        let max = outcome.best_count;
        Ok(VerificationReport {
            lattice: search.lattice,
            search_box: search.search_box,
            max_vertices_found: max,
            witness: outcome.best,
            nu,
            consistent: (max as i64) < nu,
            instances_checked: outcome.instances,
            elapsed,
        })
    }
}

/// Sequential exhaustive check of the vertex threshold on one box.
pub fn verify_main_theorem(
    lattice: &Sublattice,
    search_box: SearchBox,
) -> Result<VerificationReport> {
    if !lattice.is_proper() {
        return Err(Error::Precondition("lattice must be a proper sublattice"));
    }
    let search = FreePolygonSearch::new(lattice, search_box);
    let outcome = search.for_each(3, |_| {});
    VerificationReport::from_outcome(&search, outcome, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::convex_hull;

    #[test]
    fn diamond_in_small_box() {
        let l = Sublattice::scaled(2).unwrap();
        let found = FreePolygonSearch::new(&l, SearchBox::square(0, 2).unwrap()).collect(4);
        let d = convex_hull(&[(1, 0), (2, 1), (1, 2), (0, 1)].map(IntVec::from)).unwrap();
        assert!(found.contains(&d));
    }

    #[test]
    fn no_pentagon_for_even_lattice() {
        let r = verify_main_theorem(
            &Sublattice::scaled(2).unwrap(),
            SearchBox::square(-1, 3).unwrap(),
        )
        .unwrap();
        assert_eq!((r.max_vertices_found, r.nu, r.consistent), (4, 5, true));
    }

    #[test]
    fn even_ordinate_lattice_blocks_everything() {
        let l = Sublattice::diagonal(1, 2).unwrap();
        let r = verify_main_theorem(&l, SearchBox::square(0, 4).unwrap()).unwrap();
        assert_eq!((r.max_vertices_found, r.nu, r.instances_checked), (0, 3, 0));
        assert!(r.witness.is_none());
    }

    #[test]
    fn search_matches_brute_force_on_tiny_box() {
        let l = Sublattice::scaled(2).unwrap();
        let b = SearchBox::square(0, 2).unwrap();
        let s = FreePolygonSearch::new(&l, b);
        let mut found = s.collect(3);
        found.sort_by(|a, b| a.vertices().cmp(b.vertices()));
        let c = s.candidates().to_vec();
        let mut brute = Vec::new();
        for mask in 1u32..(1 << c.len()) {
            let pts: Vec<IntVec> = (0..c.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| c[i])
                .collect();
            if pts.len() < 3 {
                continue;
            }
            if let Ok(p) = convex_hull(&pts) {
                if p.vertex_count() == pts.len() && p.is_free_of(&l) {
                    brute.push(p);
                }
            }
        }
        brute.sort_by(|a, b| a.vertices().cmp(b.vertices()));
        assert_eq!(found, brute);
    }
}
