//! Executable forms of the edge-count inequalities for slopes.
//!
//! Each check evaluates the inequalities with explicit witnesses and returns
//! a [`Report`]; a failing check is a counterexample, not an error.


use num_integer::Integer;

use super::profile::{slope_profile, SlopeProfile};
use super::{Frame, Slope};
use crate::error::{Error, Result};
use crate::lattice::{steps, IntVec, Sublattice};
use crate::report::{Relation, Report};

/// Optional knowledge about the lattice holding a slope's vertices.
#[derive(Debug, Clone, Copy, Default)]
pub struct SlpHint {
    /// A lattice containing every vertex.
    pub lattice: Option<Sublattice>,
    /// `(a, m)`: the vertices lie in the lattice with basis `(f1 − a·f2, m·f2)`.
    pub coset: Option<(i64, i64)>,
}

fn require_vertices_in(q: &Slope, lattice: &Sublattice) -> Result<()> {
    if q.vertices().iter().all(|&v| lattice.contains(v)) {
        Ok(())
    } else {
        Err(Error::Precondition("slope vertices are not in the lattice"))
    }
}

/// Edge count against the width and height of a slope.
pub fn check_pr_slp(q: &Slope, hint: &SlpHint) -> Result<Report> {
    let n = q.edge_count() as i128;
    if n == 0 {
        return Err(Error::Precondition("slope has no edges"));
    }
    let edges = q.edge_vectors();
    let b1: i128 = edges.iter().map(|a| a.x1 as i128).sum();
    let b2: i128 = edges.iter().map(|a| a.x2 as i128).sum();
    let s = edges.iter().filter(|a| a.x1 == 1).count() as i128;
    let mut r = Report::new("edge count against width and height");
    r.witness("s", s);
    r.witness("b1", b1);
    r.witness("b2", b2);
    r.check("2N <= |b1| + s", 2 * n, Relation::Le, b1.abs() + s);
    r.check("2|b2| >= s(s+1)", 2 * b2.abs(), Relation::Ge, s * (s + 1));
    r.check("0 <= s", s, Relation::Ge, 0);
    r.check("s <= N", s, Relation::Le, n);
    let (f1, f2) = q.basis();
    if let Some(lattice) = &hint.lattice {
        require_vertices_in(q, lattice)?;
        let small = steps(lattice, f1, f2)?.small_f1;
        r.witness("small f1-step", small);
        if small > 1 {
            r.check("s == 0", s, Relation::Eq, 0);
            r.check("2N <= |b1|", 2 * n, Relation::Le, b1.abs());
        }
    }
    if let Some((a, m)) = hint.coset {
        if !(1 <= a && a <= m) {
            return Err(Error::Precondition("coset parameters need 1 <= a <= m"));
        }
        let g1 = f1.checked_sub(f2.checked_scale(a)?)?;
        let lattice = Sublattice::new(crate::lattice::IntMat2::from_columns(
            g1,
            f2.checked_scale(m)?,
        ))?;
        require_vertices_in(q, &lattice)?;
        let (a, m) = (a as i128, m as i128);
        r.check(
            "2|b2| >= (2a + (s-1)m)s",
            2 * b2.abs(),
            Relation::Ge,
            (2 * a + (s - 1) * m) * s,
        );
    }
    Ok(r)
}

fn ceil_half(x: i128) -> i128 {
    Integer::div_ceil(&x, &2)
}

/// Edge count against the positive projections, with explicit witnesses `(s, t)`.
pub fn check_th3_6(frame: &Frame, q: &Slope) -> Result<Report> {
    let p = slope_profile(frame, q)?;
    let small = p.small_angle();
    let (s, t) = if small {
        (p.s as i128, p.t as i128)
    } else {
        (0, 0)
    };
    let n = p.edge_count() as i128;
    let (v, w) = (p.v(), p.w());
    let (v1, v2, w1, w2) = (v.x1 as i128, v.x2 as i128, w.x1 as i128, w.x2 as i128);
    let mut r = Report::new("edge count against positive projections");
    r.witness("s", s);
    r.witness("t", t);
    r.witness("small angle", small as i128);
    r.check("0 <= s", s, Relation::Ge, 0);
    r.check("s <= t", s, Relation::Le, t);
    r.check("v2 - s >= 0", v2 - s, Relation::Ge, 0);
    r.check(
        "-2 v1 < 2ts - (s^2 - s) + 2(v2 - s)(t + 1)",
        -2 * v1,
        Relation::Lt,
        2 * t * s - (s * s - s) + 2 * (v2 - s) * (t + 1),
    );
    r.check(
        "2N <= v2 + w1 - t + s",
        2 * n,
        Relation::Le,
        v2 + w1 - t + s,
    );
    r.check("2N <= v2 + w1", 2 * n, Relation::Le, v2 + w1);
    if small {
        let c = ceil_half(-w2);
        r.check(
            "2N <= v2 + w1 - t + s - ceil(-w2/2) + 1",
            2 * n,
            Relation::Le,
            v2 + w1 - t + s - c + 1,
        );
        r.check(
            "2N <= v2 + w1 - ceil(-w2/2) + 1",
            2 * n,
            Relation::Le,
            v2 + w1 - c + 1,
        );
    }
    Ok(r)
}

/// The sharper bound for slopes whose vertices lie in a proper sublattice.
pub fn check_th3_8(frame: &Frame, q: &Slope, lattice: &Sublattice) -> Result<Report> {
    if !lattice.is_proper() {
        return Err(Error::Precondition("lattice must be a proper sublattice"));
    }
    require_vertices_in(q, lattice)?;
    let p = slope_profile(frame, q)?;
    let n = p.edge_count() as i128;
    let mut r = Report::new("edge count on a proper sublattice");
    r.check(
        "2N <= v2 + w1 - 1",
        2 * n,
        Relation::Le,
        p.v().x2 as i128 + p.w().x1 as i128 - 1,
    );
    Ok(r)
}

/// The intermediate inequalities on `s`, `t` and `π̂` that the projection bounds rest on.
pub fn check_lemma_ledger(
    frame: &Frame,
    q: &Slope,
    lattice: Option<&Sublattice>,
) -> Result<Report> {
    let p = slope_profile(frame, q)?;
    let mut r = Report::new("slope profile ledger");
    ledger(&p, &mut r);
    if let Some(lattice) = lattice {
        if !lattice.is_proper() {
            return Err(Error::Precondition("lattice must be a proper sublattice"));
        }
        require_vertices_in(q, lattice)?;
        r.check("pihat(E) >= 1", p.pihat_e, Relation::Ge, 1);
        if p.s == p.t {
            r.check("s = t forces s <= 1", p.s, Relation::Le, 1);
            if p.s == 1 {
                let a = p.edges[p.s_edges[0] - 1];
                r.require("the edge in S is f1 - f2", a == IntVec::new(1, -1));
            }
        }
    }
    Ok(r)
}

fn ledger(p: &SlopeProfile, r: &mut Report) {
    let n = p.edge_count() as i128;
    let (s, t) = (p.s as i128, p.t as i128);
    let (v, w) = (p.v(), p.w());
    r.witness("k", p.k as i128);
    r.witness("s", s);
    r.witness("t", t);
    r.witness("pihat(E)", p.pihat_e);
    r.check(
        "pihat(E) == pi1(E) + pi2(E) - 2N",
        p.pihat_e,
        Relation::Eq,
        (p.pi1_e + p.pi2_e) as i128 - 2 * n,
    );
    r.check(
        "pihat(E) == pihat(E1) + pihat(E2)",
        p.pihat_e,
        Relation::Eq,
        p.pihat_e1 + p.pihat_e2,
    );
    r.check(
        "pi1(E) == |w1+ - v1+|",
        p.pi1_e,
        Relation::Eq,
        (w.x1.max(0) - v.x1.max(0)).abs(),
    );
    r.check(
        "pi2(E) == |v2+ - w2+|",
        p.pi2_e,
        Relation::Eq,
        (v.x2.max(0) - w.x2.max(0)).abs(),
    );

    r.check("s <= t", s, Relation::Le, t);
    let sum_s: i128 = p.s_edges.iter().map(|&i| p.edges[i - 1].x1 as i128).sum();
    r.check(
        "2 sum_S a_i1 <= 2(t-s)s + s(s+1)",
        2 * sum_s,
        Relation::Le,
        2 * (t - s) * s + s * (s + 1),
    );

    let vk1 = p.points[p.k - 1];
    let vk = p.points[p.k];
    let ak = p.edges[p.k - 1];
    // ⌊(−v_k2 − 1)·α⌋ with α = a_k1 / (−a_k2)
    let fl = Integer::div_floor(&((-vk.x2 as i128 - 1) * ak.x1 as i128), &(-ak.x2 as i128));
    let rhs = (vk1.x1.max(0) as i128 + vk1.x2 as i128 - 1) + p.delta_flag as i128 + (t - s) + fl;
    r.check(
        "pihat(E1) >= (v(k-1)1+ + v(k-1)2 - 1) + delta + (t - s) + floor((-vk2 - 1) alpha)",
        p.pihat_e1,
        Relation::Ge,
        rhs,
    );
    if p.small_angle() {
        r.check(
            "2 pihat(E2) >= vk2 - w2 - 1",
            2 * p.pihat_e2 as i128,
            Relation::Ge,
            (vk.x2 - w.x2 - 1) as i128,
        );
    }
}
