//! Lattice diameter, slab normalization and the six-type classification of
//! polygons free of `nℤ²`.
//!
//! A polygon free of `nℤ²` can be moved by an affine automorphism of `nℤ²`
//! into the slab `−n+1 ≤ x1 ≤ 2n−1`, with a longest lattice segment on a
//! vertical line `x1 = c`, `0 ≤ c < n`, and with its chords on `x1 = 0` and
//! `x1 = n` inside `[0, n]`. From there, which of the segments
//! `I1..I3` (on `x2 = 0`) and `J1..J3` (on `x2 = n`) split it decides its type.

use core::fmt;
use core::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::lattice::{primitive_to, AffineMap, IntMat2, IntVec, Sublattice};
use crate::polygon::{Line, Polygon, Segment};
use crate::report::Report;

/// A longest lattice segment in a polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiameterWitness {
    /// Number of primitive steps along the segment, `ℓ(P)`.
    pub length: i64,
    pub segment: Segment,
}

/// `ℓ(P)`: the most integer points on a line, minus one.
///
/// Scans all pairs of lattice points of `P`, so it costs `O(m²)` for
/// `m = |P ∩ ℤ²|`. Ties go to the lexicographically first pair.
pub fn lattice_diameter(p: &Polygon) -> DiameterWitness {
    let pts = p.lattice_points();
    let mut best = (0i64, pts[0], pts[1]);
    for (i, &a) in pts.iter().enumerate() {
        for &b in &pts[i + 1..] {
            let g = (b - a).content();
            if g > best.0 {
                best = (g, a, b);
            }
        }
    }
    DiameterWitness {
        length: best.0,
        segment: Segment {
            a: best.1,
            b: best.2,
        },
    }
}

/// A unimodular affine map sending the diameter witness to `[(0,0), (0,ℓ)]`.
pub fn diameter_frame(p: &Polygon) -> Result<AffineMap> {
    let w = lattice_diameter(p);
    let d = w.segment.b - w.segment.a;
    let f = IntVec::new(d.x1 / w.length, d.x2 / w.length);
    let rot = primitive_to(f, IntVec::E2)?;
    let a = rot.apply(w.segment.a)?;
    Ok(AffineMap::new(rot, IntVec::ZERO.checked_sub(a)?))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizationResult {
    /// An affine automorphism of `nℤ²`.
    pub map: AffineMap,
    pub image: Polygon,
    /// The image holds `diameter + 1` integer points on `x1 = diameter_line_c`.
    pub diameter_line_c: i64,
    pub diameter: i64,
}

fn require_free(p: &Polygon, n: i64) -> Result<Sublattice> {
    if n < 2 {
        return Err(Error::Precondition("n must be at least 2"));
    }
    let lattice = Sublattice::scaled(n)?;
    if !p.is_free_of(&lattice) {
        return Err(Error::NotLatticeFree);
    }
    Ok(lattice)
}

/// The `u` with `P ∩ {x1 = x} ⊂ [(x, u·n), (x, u·n + n)]`, or 0 if they do not meet.
fn chord_slot(p: &Polygon, x: i64, n: i64) -> i64 {
    match p.chord(&Line::Vertical(x)) {
        Some((lo, _)) => Integer::div_floor(lo.numer(), &(lo.denom() * n as i128)) as i64,
        None => 0,
    }
}

/// Moves an `nℤ²`-free polygon into normal position (see the module docs).
pub fn slab_normalize(p: &Polygon, n: i64) -> Result<NormalizationResult> {
    require_free(p, n)?;
    let w = lattice_diameter(p);
    let d = w.segment.b - w.segment.a;
    let f = IntVec::new(d.x1 / w.length, d.x2 / w.length);
    let rot = AffineMap::linear(primitive_to(f, IntVec::E2)?);
    let a = rot.apply(w.segment.a)?;
    let (q, c) = (a.x1.div_euclid(n), a.x1.rem_euclid(n));
    let shift = AffineMap::translation(IntVec::new(q.checked_mul(-n).ok_or(Error::Overflow)?, 0));
    let placed = rot.then(&shift)?;
    let staged = p.apply_affine(&placed)?;
    let u1 = chord_slot(&staged, 0, n);
    let u2 = chord_slot(&staged, n, n);
    let shear = AffineMap::new(
        IntMat2::new(1, 0, u1 - u2, 1),
        IntVec::new(0, u1.checked_mul(-n).ok_or(Error::Overflow)?),
    );
    let map = placed.then(&shear)?;
    let image = p.apply_affine(&map)?;
    Ok(NormalizationResult {
        map,
        image,
        diameter_line_c: c,
        diameter: w.length,
    })
}

/// Re-checks every postcondition of [`slab_normalize`] from scratch.
pub fn check_normalization(p: &Polygon, n: i64, r: &NormalizationResult) -> Report {
    let mut rep = Report::new("slab normalization");
    let lattice = Sublattice::scaled(n).expect("n checked by caller");
    rep.require(
        "map is an affine automorphism of nZ^2",
        r.map.is_automorphism_of(&lattice),
    );
    rep.require(
        "image is the mapped polygon",
        p.apply_affine(&r.map).as_ref() == Ok(&r.image),
    );
    let (lo, hi) = r.image.x1_range();
    rep.check("min x1", lo, crate::Relation::Ge, 1 - n as i128);
    rep.check("max x1", hi, crate::Relation::Le, 2 * n as i128 - 1);
    rep.check("diameter line c", r.diameter_line_c, crate::Relation::Ge, 0);
    rep.check(
        "diameter line c",
        r.diameter_line_c,
        crate::Relation::Le,
        n - 1,
    );
    let count = r
        .image
        .column_range(r.diameter_line_c)
        .map_or(0, |(a, b)| b - a + 1);
    rep.check(
        "integer points on the diameter line",
        count,
        crate::Relation::Eq,
        r.diameter + 1,
    );
    rep.check(
        "diameter preserved",
        lattice_diameter(&r.image).length,
        crate::Relation::Eq,
        r.diameter,
    );
    for x in [0, n] {
        if let Some((a, b)) = r.image.chord(&Line::Vertical(x)) {
            let label = alloc::format!("chord on x1 = {x} within [0, n]");
            rep.require(label, a >= 0.into() && b <= (n as i128).into());
        }
    }
    rep
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PolygonType {
    I,
    II,
    III,
    IV,
    V,
    VI,
}

impl PolygonType {
    pub const ALL: [PolygonType; 6] = [
        PolygonType::I,
        PolygonType::II,
        PolygonType::III,
        PolygonType::IV,
        PolygonType::V,
        PolygonType::VI,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PolygonType::I => "I",
            PolygonType::II => "II",
            PolygonType::III => "III",
            PolygonType::IV => "IV",
            PolygonType::V => "V",
            PolygonType::VI => "VI",
        }
    }
}

impl fmt::Display for PolygonType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PolygonType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        PolygonType::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or(Error::Precondition("unknown polygon type"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TypeTag {
    pub kind: PolygonType,
    pub n: i64,
}

fn seg(a: (i64, i64), b: (i64, i64)) -> Segment {
    Segment {
        a: a.into(),
        b: b.into(),
    }
}

/// Whether `p` satisfies the defining clause of `kind` for this `n`.
pub fn satisfies_type(p: &Polygon, kind: PolygonType, n: i64) -> bool {
    let splits = |a, b| p.segment_splits(&seg(a, b));
    let line = |l| p.line_splits(&l);
    let misses = |x| p.chord(&Line::Vertical(x)).is_none();
    match kind {
        PolygonType::I => {
            let (a, b) = p.x1_range();
            let (c, d) = p.x2_range();
            let in_slab = |lo: i64, hi: i64| hi <= (Integer::div_floor(&lo, &n) + 1) * n;
            in_slab(a, b) || in_slab(c, d)
        }
        PolygonType::II => {
            splits((0, 0), (n, 0))
                && splits((n, 0), (n, n))
                && splits((0, n), (n, n))
                && splits((0, 0), (0, n))
        }
        PolygonType::III => {
            splits((0, 0), (n, 0))
                && splits((n, 0), (n, n))
                && splits((n, n), (0, n))
                && !line(Line::Vertical(0))
        }
        PolygonType::IV => {
            splits((0, 0), (0, n))
                && splits((0, 0), (n, 0))
                && splits((n, 0), (n, n))
                && splits((n, n), (2 * n, n))
                && misses(-n)
                && misses(2 * n)
        }
        PolygonType::V => {
            splits((0, 0), (-n, 0))
                && splits((0, 0), (0, n))
                && !line(Line::Vertical(-n))
                && !line(Line::Horizontal(n))
        }
        PolygonType::VI => {
            splits((0, 0), (-n, 0))
                && splits((0, 0), (0, n))
                && splits((0, n), (n, n))
                && !line(Line::Vertical(-n))
                && !line(Line::Vertical(n))
        }
    }
}

/// Automorphisms of `nℤ²` used by the classification table, written as `x ↦ ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Move {
    Identity,
    /// `(−x1, x2)`
    MirrorOrigin,
    /// `(n − x1, x2)`
    MirrorHalf,
    /// `(2n − x1, x2)`
    MirrorFull,
    /// `(x1, n − x2)`
    FlipHalf,
    /// `(−x1, n − x2)`
    PointFlip,
    /// `(n − x1, n − x2)`
    HalfTurn,
    /// `(x1 + n, x2)`
    ShiftRight,
    /// `(n − x2, x1)`
    QuarterTurn,
    /// `(x2, n − x1)`
    QuarterTurnBack,
}

impl Move {
    fn map(self, n: i64) -> AffineMap {
        let (m, t) = match self {
            Move::Identity => (IntMat2::IDENTITY, (0, 0)),
            Move::MirrorOrigin => (IntMat2::diag(-1, 1), (0, 0)),
            Move::MirrorHalf => (IntMat2::diag(-1, 1), (n, 0)),
            Move::MirrorFull => (IntMat2::diag(-1, 1), (2 * n, 0)),
            Move::FlipHalf => (IntMat2::diag(1, -1), (0, n)),
            Move::PointFlip => (IntMat2::diag(-1, -1), (0, n)),
            Move::HalfTurn => (IntMat2::diag(-1, -1), (n, n)),
            Move::ShiftRight => (IntMat2::IDENTITY, (n, 0)),
            Move::QuarterTurn => (IntMat2::new(0, -1, 1, 0), (n, 0)),
            Move::QuarterTurnBack => (IntMat2::new(0, 1, -1, 0), (0, n)),
        };
        AffineMap::new(m, t.into())
    }
}

/// Rows for a polygon split by `x1 = 0` only, keyed by which `I` and `J`
/// segment splits it (0 = none).
fn one_line_row(i: u8, j: u8) -> Option<(PolygonType, Move)> {
    use PolygonType::*;
    Some(match (i, j) {
        (0, 0) => (I, Move::Identity),
        (1, 0) => (V, Move::Identity),
        (2, 0) => (V, Move::MirrorOrigin),
        (0, 1) => (V, Move::FlipHalf),
        (0, 2) => (V, Move::PointFlip),
        (1, 1) => (III, Move::ShiftRight),
        (2, 2) => (III, Move::MirrorHalf),
        (1, 2) => (VI, Move::Identity),
        (2, 1) => (VI, Move::MirrorOrigin),
        _ => return None,
    })
}

/// Rows for a polygon split by both `x1 = 0` and `x1 = n`.
fn two_line_row(i: u8, j: u8) -> Option<(PolygonType, Move)> {
    use PolygonType::*;
    Some(match (i, j) {
        (0, 0) => (I, Move::Identity),
        (2, 2) => (II, Move::Identity),
        (2, 0) => (III, Move::QuarterTurn),
        (0, 2) => (III, Move::QuarterTurnBack),
        (1, 1) => (III, Move::ShiftRight),
        (3, 3) => (III, Move::MirrorFull),
        (1, 0) => (V, Move::Identity),
        (3, 0) => (V, Move::MirrorHalf),
        (0, 1) => (V, Move::FlipHalf),
        (0, 3) => (V, Move::HalfTurn),
        (2, 3) => (IV, Move::Identity),
        (1, 2) => (IV, Move::HalfTurn),
        (2, 1) => (IV, Move::MirrorHalf),
        (3, 2) => (IV, Move::FlipHalf),
        _ => return None,
    })
}

/// Index (1..=3) of the one segment among `[(−n,h),(0,h)]`, `[(0,h),(n,h)]`,
/// `[(n,h),(2n,h)]` that splits `p`, or 0.
fn splitting_segment(p: &Polygon, h: i64, n: i64) -> Result<u8> {
    let mut found = 0;
    for (k, x) in [-n, 0, n].into_iter().enumerate() {
        if p.segment_splits(&seg((x, h), (x + n, h))) {
            if found != 0 {
                return Err(Error::ClassificationFailure(
                    "two collinear segments split the polygon",
                ));
            }
            found = k as u8 + 1;
        }
    }
    Ok(found)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub map: AffineMap,
    pub tag: TypeTag,
    pub image: Polygon,
}

/// Finds an affine automorphism of `nℤ²` taking `p` to one of the six types.
pub fn classify_type(p: &Polygon, n: i64) -> Result<Classification> {
    let lattice = require_free(p, n)?;
    let norm = slab_normalize(p, n)?;
    let q = &norm.image;
    let left = q.line_splits(&Line::Vertical(0));
    let right = q.line_splits(&Line::Vertical(n));
    let (kind, pre, row) = match (left, right) {
        (false, false) => (PolygonType::I, Move::Identity, Move::Identity),
        (true, true) => {
            let (i, j) = (splitting_segment(q, 0, n)?, splitting_segment(q, n, n)?);
            let (kind, row) = two_line_row(i, j).ok_or(Error::ClassificationFailure(
                "both forbidden splitting configurations occur",
            ))?;
            (kind, Move::Identity, row)
        }
        _ => {
            let pre = if right {
                Move::MirrorHalf
            } else {
                Move::Identity
            };
            let q = q.apply_affine(&pre.map(n))?;
            let (i, j) = (splitting_segment(&q, 0, n)?, splitting_segment(&q, n, n)?);
            let (kind, row) = one_line_row(i, j).ok_or(Error::ClassificationFailure(
                "a segment beyond x1 = n splits the polygon",
            ))?;
            (kind, pre, row)
        }
    };
    let map = norm.map.then(&pre.map(n))?.then(&row.map(n))?;
    let image = p.apply_affine(&map)?;
    if !map.is_automorphism_of(&lattice) || !satisfies_type(&image, kind, n) {
        return Err(Error::ClassificationFailure(
            "image does not satisfy its type clause",
        ));
    }
    Ok(Classification {
        map,
        tag: TypeTag { kind, n },
        image,
    })
}

/// Whether `P ⊂ {|x1| ≤ ℓ+2}` with no integer point of `P` on `x1 = ±(ℓ+1)`,
/// for `P` containing `(0,0)` and `(0,ℓ)`.
pub fn check_slab_lemma(p: &Polygon) -> Result<bool> {
    let l = lattice_diameter(p).length;
    if !p.contains(IntVec::ZERO) || !p.contains(IntVec::new(0, l)) {
        return Err(Error::Precondition("polygon must contain (0,0) and (0,l)"));
    }
    let (lo, hi) = p.x1_range();
    let bound = l + 2;
    Ok(lo >= -bound
        && hi <= bound
        && p.column_range(l + 1).is_none()
        && p.column_range(-l - 1).is_none())
}

/// Whether neither forbidden pair of segments splits `p` simultaneously.
///
/// Requires `p` free of `nℤ²` with a longest lattice segment on some `x1 = c`, `0 ≤ c ≤ n`.
pub fn check_imposs(p: &Polygon, n: i64) -> Result<bool> {
    require_free(p, n)?;
    let l = lattice_diameter(p).length;
    let placed = (0..=n).any(|c| p.column_range(c).is_some_and(|(a, b)| b - a == l));
    if !placed {
        return Err(Error::Precondition(
            "no longest lattice segment on a line x1 = c with 0 <= c <= n",
        ));
    }
    let splits = |a, b| p.segment_splits(&seg(a, b));
    let first = splits((0, n), (-n, n)) && splits((n, 0), (2 * n, 0));
    let second = splits((0, 0), (-n, 0)) && splits((n, n), (2 * n, n));
    Ok(!first && !second)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn poly(pts: &[(i64, i64)]) -> Polygon {
        let p = crate::polygon::convex_hull(&pts.iter().map(|&p| p.into()).collect::<Vec<_>>())
            .unwrap();
        assert_eq!(p.vertex_count(), pts.len());
        p
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(lattice_diameter(&poly(&[(0, 0), (1, 0), (0, 1)])).length, 1);
        let w = lattice_diameter(&poly(&[(0, 0), (3, 0), (0, 1)]));
        assert_eq!(w.length, 3);
        assert_eq!(w.segment, seg((0, 0), (3, 0)));
        assert_eq!(
            lattice_diameter(&poly(&[(0, 0), (2, 0), (2, 2), (0, 2)])).length,
            2
        );
    }

    #[test]
    fn octagon_normalizes_and_is_type_one() {
        let oct = poly(&[
            (1, 0),
            (2, 0),
            (4, 1),
            (4, 2),
            (2, 3),
            (1, 3),
            (-1, 2),
            (-1, 1),
        ]);
        let r = slab_normalize(&oct, 3).unwrap();
        assert!(check_normalization(&oct, 3, &r).is_ok());
        let c = classify_type(&oct, 3).unwrap();
        assert_eq!(c.tag.kind, PolygonType::I);
        assert!(satisfies_type(&oct, PolygonType::I, 3));
        // The longest segment is horizontal until normalized.
        assert!(check_imposs(&oct, 3).is_err());
        assert_eq!(check_imposs(&r.image, 3), Ok(true));
    }

    #[test]
    fn quad_is_type_two() {
        let q = poly(&[(1, -1), (4, 1), (2, 4), (-1, 2)]);
        assert!(satisfies_type(&q, PolygonType::II, 3));
        let c = classify_type(&q, 3).unwrap();
        assert!(satisfies_type(&c.image, c.tag.kind, 3));
    }

    #[test]
    fn refuses_polygons_with_lattice_points() {
        let sq = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        assert_eq!(slab_normalize(&sq, 2), Err(Error::NotLatticeFree));
        assert_eq!(classify_type(&sq, 2).unwrap_err(), Error::NotLatticeFree);
    }

    #[test]
    fn every_move_is_an_automorphism() {
        for n in 2..6 {
            let lattice = Sublattice::scaled(n).unwrap();
            let rows: Vec<_> = (0..4u8)
                .flat_map(|i| (0..4u8).map(move |j| (i, j)))
                .flat_map(|(i, j)| [one_line_row(i, j), two_line_row(i, j)])
                .flatten()
                .collect();
            assert_eq!(rows.len(), 9 + 14);
            for (_, mv) in rows {
                assert!(mv.map(n).is_automorphism_of(&lattice), "{mv:?}");
            }
        }
    }

    #[test]
    fn slab_lemma_examples() {
        assert_eq!(check_slab_lemma(&poly(&[(0, 0), (1, 0), (0, 1)])), Ok(true));
        let tri = poly(&[(0, 0), (0, 1), (3, 0)]);
        assert!(check_slab_lemma(&tri).is_err());
        let placed = tri.apply_affine(&diameter_frame(&tri).unwrap()).unwrap();
        assert_eq!(check_slab_lemma(&placed), Ok(true));
    }
}
