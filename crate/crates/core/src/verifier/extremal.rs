use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lattice::IntVec;
use crate::polygon::Polygon;

/// `2n + 2·min(δ, 3) − 3` for a proper `(δ, n)` pair.
pub fn nu(delta: i64, n: i64) -> Result<i64> {
    if delta < 1 || n < 1 || n % delta != 0 || delta * n < 2 {
        return Err(Error::InvalidFactors { delta, n });
    }
    Ok(2 * n + 2 * delta.min(3) - 3)
}

/// A convex polygon with `ν(δ, n) − 1` vertices free of `δℤ × nℤ`.
///
/// Rows `x2 = j` carry a left vertex at `x1 = l − m(w − m)` and a right one at
/// `x1 = r + m(w − m)`, `m = j − j0`, where `w` is the number of row gaps:
///
/// - `δ ≥ 3`: rows `0..=n`, `l = 1`, `r = 2`, giving `2n + 2` vertices;
/// - `δ = 2`: rows `0..=n`, `l = r = 1`, so the first and last rows hold a
///   single (odd) vertex, giving `2n`;
/// - `δ = 1`: rows `1..=n−1` only, `l = 0`, `r = 1`, giving `2n − 2`.
pub fn construct_extremal(delta: i64, n: i64) -> Result<Polygon> {
    let nu = nu(delta, n)?;
    if nu <= 3 {
        return Err(Error::NoExtremalPolygon(nu));
    }
    let (j0, j1, l, r) = match delta {
        1 => (1, n - 1, 0, 1),
        2 => (0, n, 1, 1),
        _ => (0, n, 1, 2),
    };
    let w = j1 - j0;
    let bulge = |j: i64| (j - j0) * (w - (j - j0));
    let mut right: Vec<IntVec> = Vec::new();
    let mut left: Vec<IntVec> = Vec::new();
    for j in j0..=j1 {
        right.push(IntVec::new(r + bulge(j), j));
        left.push(IntVec::new(l - bulge(j), j));
    }
    // Counter-clockwise: bottom-left, up the right chain, back down the left one.
    let mut vs: Vec<IntVec> = Vec::with_capacity(2 * right.len());
    vs.push(left[0]);
    vs.extend(right.iter().copied());
    vs.extend(left.iter().rev().copied());
    vs.dedup();
    if vs.first() == vs.last() {
        vs.pop();
    }
    let p = Polygon::new(vs)?;
    if p.vertex_count() as i64 != nu - 1 {
        return Err(Error::Contradiction(
            "extremal construction has the wrong vertex count",
        ));
    }
    Ok(p)
}
