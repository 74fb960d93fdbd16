//! Edge-count bounds for classified polygons, evaluated instance by instance.

use alloc::format;

use crate::error::{Error, Result};
use crate::lattice::{steps, IntVec, Sublattice};
use crate::polygon::{Polygon, Segment};
use crate::reduction::{satisfies_type, PolygonType, TypeTag};
use crate::report::{Relation, Report};
use crate::slopes::{
    check_step_bounds, check_th3_6, check_th3_8, frame_splits_maximal, maximal_slopes, Frame,
};

/// `b ∈ {0, 1, 2}` for a vertex lattice with invariant factors `(1, 1)`,
/// `(1, n/2)` or `(1, n)`.
pub fn vertex_lattice_rank(gamma: &Sublattice, n: i64) -> Result<u8> {
    match gamma.invariant_factors() {
        (1, 1) => Ok(0),
        (1, m) if m == n => Ok(2),
        (1, m) if 2 * m == n => Ok(1),
        _ => Err(Error::Precondition(
            "vertex lattice must be a (1,1)-, (1,n/2)- or (1,n)-lattice",
        )),
    }
}

fn require_vertices_in(p: &Polygon, gamma: &Sublattice) -> Result<()> {
    if p.vertices().iter().all(|&v| gamma.contains(v)) {
        Ok(())
    } else {
        Err(Error::Precondition(
            "polygon vertices are not in the vertex lattice",
        ))
    }
}

/// `N ≤ 2n + 2 − 2b` for a polygon of the tagged type.
pub fn check_subtheorem_c(p: &Polygon, tag: TypeTag, gamma: &Sublattice) -> Result<Report> {
    let n = tag.n;
    if n < 3 {
        return Err(Error::Precondition("n must be at least 3"));
    }
    if !satisfies_type(p, tag.kind, n) {
        return Err(Error::Precondition(
            "polygon does not satisfy its type clause",
        ));
    }
    require_vertices_in(p, gamma)?;
    let b = vertex_lattice_rank(gamma, n)? as i128;
    let mut r = Report::new(format!("vertex bound for type {}", tag.kind));
    r.witness("b", b);
    r.check(
        "N <= 2n + 2 - 2b",
        p.vertex_count() as i128,
        Relation::Le,
        2 * n as i128 + 2 - 2 * b,
    );
    Ok(r)
}

const E1: IntVec = IntVec::E1;
const E2: IntVec = IntVec::E2;
const NE1: IntVec = IntVec::new(-1, 0);
const NE2: IntVec = IntVec::new(0, -1);

/// Runs the type-II argument on one polygon: frame splits, a per-slope bound
/// for each maximal slope, the axis-side step bounds, and the summed chain
/// ending in `N ≤ 2n + 2 − 2b`.
pub fn type_ii_bound_pipeline(p: &Polygon, n: i64, gamma: &Sublattice) -> Result<Report> {
    if n < 3 {
        return Err(Error::Precondition("n must be at least 3"));
    }
    if !satisfies_type(p, PolygonType::II, n) {
        return Err(Error::Precondition("polygon is not of type II"));
    }
    require_vertices_in(p, gamma)?;
    let b = vertex_lattice_rank(gamma, n)? as i128;
    let n128 = n as i128;
    let mut r = Report::new("type II pipeline");
    r.witness("b", b);

    let frames = [
        Frame::new(IntVec::new(n, 0), E2, NE1)?,
        Frame::new(IntVec::new(n, n), NE1, NE2)?,
        Frame::new(IntVec::new(0, n), NE2, E1)?,
        Frame::new(IntVec::ZERO, E1, E2)?,
    ];
    for (k, f) in frames.iter().enumerate() {
        r.require(
            format!("frame {} splits Q{}", k + 1, k + 1),
            frame_splits_maximal(p, f)? == Some(k + 1),
        );
    }

    let ms = maximal_slopes(p)?;
    let st = p.bounding_stats();
    let s = |x: i64| x as i128;
    let stats = [
        s(st.east_minus) + n128 - s(st.south_plus),
        2 * n128 - s(st.east_plus) - s(st.north_plus),
        n128 - s(st.west_plus) + s(st.north_minus),
        s(st.south_minus) + s(st.west_minus),
    ];
    let gaps = [
        s(st.south_plus - st.south_minus),
        s(st.east_plus - st.east_minus),
        s(st.north_plus - st.north_minus),
        s(st.west_plus - st.west_minus),
    ];
    let m = ms.m.map(i128::from);
    let nk = ms.edge_counts.map(|c| c as i128);

    // (b² − 3b)/2 is 0 for b = 0 and −1 otherwise.
    let corr = (b * b - 3 * b) / 2;
    let mut per_slope_sum = 0;
    for k in 0..4 {
        let q = ms.get(k + 1);
        let prof = crate::slopes::slope_profile(&frames[k], q)?;
        let vw = prof.v().x2 as i128 + prof.w().x1 as i128;
        r.check(
            format!("Q{}: v2 + w1 matches the bounding box", k + 1),
            vw,
            Relation::Eq,
            stats[k],
        );
        let mut inner = if b == 0 {
            check_th3_6(&frames[k], q)?
        } else {
            check_th3_8(&frames[k], q, gamma)?
        };
        inner.subject = format!("Q{}: {}", k + 1, inner.subject);
        r.absorb(inner);
        r.check(
            format!("Q{}: 2N <= v2 + w1 + (b^2 - 3b)/2", k + 1),
            2 * nk[k],
            Relation::Le,
            stats[k] + corr,
        );
        per_slope_sum += stats[k] + corr;
    }

    let c = (b * b - b + 2) / 2;
    let large = steps(gamma, E1, E2)?;
    r.witness("S1", large.large_f1);
    r.witness("S2", large.large_f2);
    if b == 2 {
        r.check("large f1-step >= 2", large.large_f1, Relation::Ge, 2);
        r.check("large f2-step >= 2", large.large_f2, Relation::Ge, 2);
    }
    r.check("S1 >= (b^2 - b + 2)/2", large.large_f1, Relation::Ge, c);
    r.check("S2 >= (b^2 - b + 2)/2", large.large_f2, Relation::Ge, c);
    r.absorb(check_step_bounds(p, gamma)?);
    for k in 0..4 {
        r.check(
            format!("gap{} >= (b^2 - b + 2)/2 M{}", k + 1, k + 1),
            gaps[k],
            Relation::Ge,
            c * m[k],
        );
    }

    let big_n = p.vertex_count() as i128;
    let sum_m: i128 = m.iter().sum();
    let sum_nk: i128 = nk.iter().sum();
    r.check("N == sum Nk + sum Mk", big_n, Relation::Eq, sum_nk + sum_m);
    let direct = per_slope_sum + 2 * sum_m;
    r.check(
        "2N <= sum of per-slope bounds + 2 sum Mk",
        2 * big_n,
        Relation::Le,
        direct,
    );
    let slack: i128 = (0..4).map(|k| c * m[k] - gaps[k]).sum();
    let tail = (-b * b + b + 2) / 2;
    let chain1 = 4 * n128 + 2 * b * b - 6 * b + slack + tail * sum_m;
    r.check(
        "rewritten sum == sum of per-slope bounds + 2 sum Mk",
        chain1,
        Relation::Eq,
        direct,
    );
    let chain2 = 4 * n128 + 2 * b * b - 6 * b + tail * sum_m;
    r.check("drop the step slack", chain1, Relation::Le, chain2);
    r.check("sum Mk <= 4", chain2, Relation::Le, 4 * n128 + 4 - 4 * b);
    r.check(
        "2N <= 4n + 4 - 4b",
        2 * big_n,
        Relation::Le,
        4 * n128 + 4 - 4 * b,
    );
    r.check(
        "N <= 2n + 2 - 2b",
        big_n,
        Relation::Le,
        2 * n128 + 2 - 2 * b,
    );
    Ok(r)
}

/// Two vertices of a pentagon agree mod `2ℤ²`, so the segment between them
/// has an integer midpoint.
pub fn check_parity_argument(p: &Polygon) -> Result<Report> {
    let vs = p.vertices();
    if vs.len() != 5 {
        return Err(Error::Precondition("parity argument needs a pentagon"));
    }
    let mut r = Report::new("parity pigeonhole");
    let pair = (0..5)
        .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
        .find(|&(i, j)| (vs[i].x1 - vs[j].x1) % 2 == 0 && (vs[i].x2 - vs[j].x2) % 2 == 0);
    r.require("two vertices agree mod 2", pair.is_some());
    if let Some((i, j)) = pair {
        r.witness("i", i as i128);
        r.witness("j", j as i128);
        let seg = Segment::new(vs[i], vs[j])?;
        r.check(
            "integer points on the segment",
            seg.lattice_count(),
            Relation::Ge,
            3,
        );
    }
    Ok(r)
}
