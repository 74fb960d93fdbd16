//! Convex lattice polygons: hull, exact point enumeration, Pick data,
//! bounding statistics and the splitting predicates for lines and segments.
//!
//! A [`Polygon`] is always strictly convex, counter-clockwise, and starts at
//! its lexicographically smallest vertex, so two polygons are equal exactly
//! when their vertex lists are.

use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::lattice::{AffineMap, IntMat2, IntVec, Sublattice};

pub type Rational = Ratio<i128>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polygon {
    vertices: Vec<IntVec>,
}

fn turn(a: IntVec, b: IntVec, c: IntVec) -> i128 {
    (b - a).cross(c - b)
}

/// Convex hull by monotone chain, dropping collinear points.
pub fn convex_hull(points: &[IntVec]) -> Result<Polygon> {
    let mut pts: Vec<IntVec> = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() < 3 {
        return Err(Error::DegenerateHull);
    }
    let mut hull: Vec<IntVec> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: &mut dyn Iterator<Item = &IntVec> = if pass == 0 {
            &mut pts.iter()
        } else {
            &mut pts.iter().rev()
        };
        for &p in iter {
            while hull.len() >= start + 2
                && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0
            {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    if hull.len() < 3 {
        return Err(Error::DegenerateHull);
    }
    Ok(Polygon { vertices: hull })
}

fn rotate_to_min(vertices: &mut [IntVec]) {
    if let Some((i, _)) = vertices.iter().enumerate().min_by_key(|&(_, v)| *v) {
        vertices.rotate_left(i);
    }
}

impl Polygon {
    /// Accepts a strictly convex counter-clockwise vertex cycle in any rotation.
    pub fn new(mut vertices: Vec<IntVec>) -> Result<Self> {
        let m = vertices.len();
        if m < 3 {
            return Err(Error::InvalidPolygon("fewer than three vertices"));
        }
        for i in 0..m {
            if turn(vertices[i], vertices[(i + 1) % m], vertices[(i + 2) % m]) <= 0 {
                return Err(Error::InvalidPolygon(
                    "not strictly convex counter-clockwise",
                ));
            }
        }
        rotate_to_min(&mut vertices);
        // Left turns everywhere still allow a cycle that winds more than once.
        let hull = convex_hull(&vertices)?;
        if hull.vertices != vertices {
            return Err(Error::InvalidPolygon("vertex cycle is not simple"));
        }
        Ok(Polygon { vertices })
    }

    /// For callers that built a valid canonical cycle by construction.
    pub(crate) fn from_canonical(vertices: Vec<IntVec>) -> Self {
        debug_assert!(Polygon::new(vertices.clone())
            .map(|p| p.vertices == vertices)
            .unwrap_or(false));
        Polygon { vertices }
    }

    pub fn vertices(&self) -> &[IntVec] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Edges `(v_i, v_{i+1})` in counter-clockwise order.
    pub fn edges(&self) -> impl Iterator<Item = (IntVec, IntVec)> + '_ {
        let m = self.vertices.len();
        (0..m).map(move |i| (self.vertices[i], self.vertices[(i + 1) % m]))
    }

    /// Twice the area, by the shoelace formula.
    pub fn area2(&self) -> i128 {
        self.edges().map(|(a, b)| a.cross(b)).sum()
    }

    /// Number of lattice points on the boundary.
    pub fn boundary_count(&self) -> i64 {
        self.edges().map(|(a, b)| (b - a).content()).sum()
    }

    /// Closed containment.
    pub fn contains(&self, p: IntVec) -> bool {
        self.edges().all(|(a, b)| (b - a).cross(p - a) >= 0)
    }

    /// Whether `p` lies in the interior.
    pub fn contains_strictly(&self, p: IntVec) -> bool {
        self.edges().all(|(a, b)| (b - a).cross(p - a) > 0)
    }

    pub fn x1_range(&self) -> (i64, i64) {
        let it = self.vertices.iter().map(|v| v.x1);
        (it.clone().min().unwrap_or(0), it.max().unwrap_or(0))
    }

    pub fn x2_range(&self) -> (i64, i64) {
        let it = self.vertices.iter().map(|v| v.x2);
        (it.clone().min().unwrap_or(0), it.max().unwrap_or(0))
    }

    /// Integer `x2` values with `(c, x2) ∈ P`, as an inclusive range.
    pub fn column_range(&self, c: i64) -> Option<(i64, i64)> {
        let mut lo = i128::MIN;
        let mut hi = i128::MAX;
        for (a, b) in self.edges() {
            let e = b - a;
            // e1·y ≥ e1·a2 + e2·(c − a1)
            let r = e.x1 as i128 * a.x2 as i128 + e.x2 as i128 * (c as i128 - a.x1 as i128);
            let e1 = e.x1 as i128;
            match e1.signum() {
                1 => lo = lo.max(Integer::div_ceil(&r, &e1)),
                -1 => hi = hi.min(Integer::div_floor(&r, &e1)),
                _ => {
                    if r > 0 {
                        return None;
                    }
                }
            }
        }
        if lo > hi {
            return None;
        }
        Some((i64::try_from(lo).ok()?, i64::try_from(hi).ok()?))
    }

    /// All lattice points of the closed polygon in lexicographic order.
    pub fn lattice_points(&self) -> Vec<IntVec> {
        let (x_lo, x_hi) = self.x1_range();
        let mut out = Vec::new();
        for c in x_lo..=x_hi {
            if let Some((lo, hi)) = self.column_range(c) {
                out.extend((lo..=hi).map(|y| IntVec::new(c, y)));
            }
        }
        out
    }

    pub fn lattice_point_count(&self) -> i64 {
        let (x_lo, x_hi) = self.x1_range();
        (x_lo..=x_hi)
            .filter_map(|c| self.column_range(c))
            .map(|(lo, hi)| hi - lo + 1)
            .sum()
    }

    /// Area, boundary and interior counts for Pick's identity.
    pub fn pick_data(&self) -> PickData {
        let boundary = self.boundary_count();
        let total = self.lattice_point_count();
        PickData {
            area2: self.area2(),
            boundary,
            interior: total - boundary,
        }
    }

    /// Whether no point of `lattice` lies in the closed polygon.
    pub fn is_free_of(&self, lattice: &Sublattice) -> bool {
        self.lattice_points_of(lattice).is_empty()
    }

    /// Points of `lattice` in the closed polygon.
    pub fn lattice_points_of(&self, lattice: &Sublattice) -> Vec<IntVec> {
        let (a, b) = self.x1_range();
        let (c, d) = self.x2_range();
        lattice
            .points_in_box(a, b, c, d)
            .into_iter()
            .filter(|&p| self.contains(p))
            .collect()
    }

    pub fn bounding_stats(&self) -> BoundingStats {
        let (west, east) = self.x1_range();
        let (south, north) = self.x2_range();
        let span = |pred: &dyn Fn(&IntVec) -> bool, key: fn(&IntVec) -> i64| {
            let it = self.vertices.iter().filter(|v| pred(v)).map(key);
            (it.clone().min().unwrap_or(0), it.max().unwrap_or(0))
        };
        let (north_minus, north_plus) = span(&|v| v.x2 == north, |v| v.x1);
        let (south_minus, south_plus) = span(&|v| v.x2 == south, |v| v.x1);
        let (west_minus, west_plus) = span(&|v| v.x1 == west, |v| v.x2);
        let (east_minus, east_plus) = span(&|v| v.x1 == east, |v| v.x2);
        BoundingStats {
            north,
            north_minus,
            north_plus,
            south,
            south_minus,
            south_plus,
            west,
            west_minus,
            west_plus,
            east,
            east_minus,
            east_plus,
        }
    }

    /// Parameter interval `{λ : a + λ·d ∈ P}` for the line's parametrisation.
    pub fn chord(&self, line: &Line) -> Option<(Rational, Rational)> {
        let (a, d) = line.parametrisation();
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        for (p, q) in self.edges() {
            let e = q - p;
            let c0 = e.cross(a - p);
            let c1 = e.cross(d);
            if c1 == 0 {
                if c0 < 0 {
                    return None;
                }
                continue;
            }
            let bound = Rational::new(-c0, c1);
            if c1 > 0 {
                lo = Some(lo.map_or(bound, |l| l.max(bound)));
            } else {
                hi = Some(hi.map_or(bound, |h| h.min(bound)));
            }
        }
        match (lo, hi) {
            (Some(l), Some(h)) if l <= h => Some((l, h)),
            _ => None,
        }
    }

    /// A line splits `P` when vertices lie strictly on both of its sides.
    pub fn line_splits(&self, line: &Line) -> bool {
        let (a, d) = line.parametrisation();
        let mut pos = false;
        let mut neg = false;
        for &v in &self.vertices {
            match d.cross(v - a).signum() {
                1 => pos = true,
                -1 => neg = true,
                _ => {}
            }
        }
        pos && neg
    }

    /// A segment splits `P` when its line does and `P` meets the line only inside the segment.
    pub fn segment_splits(&self, s: &Segment) -> bool {
        let line = s.line();
        self.line_splits(&line)
            && self.chord(&line).is_some_and(|(lo, hi)| {
                lo >= Rational::from_integer(0) && hi <= Rational::from_integer(1)
            })
    }

    /// Same as [`segment_splits`](Self::segment_splits) for the ray `{o + λ·d : λ ≥ 0}`.
    pub fn ray_splits(&self, origin: IntVec, direction: IntVec) -> bool {
        let line = Line::Through(origin, origin + direction);
        self.line_splits(&line)
            && self
                .chord(&line)
                .is_some_and(|(lo, _)| lo >= Rational::from_integer(0))
    }

    /// Image under a unimodular affine map.
    pub fn apply_affine(&self, map: &AffineMap) -> Result<Polygon> {
        if !map.is_unimodular() {
            return Err(Error::NotUnimodular(map.linear.det()));
        }
        self.transform(map)
    }

    /// Image under any nonsingular integer affine map.
    pub fn transform(&self, map: &AffineMap) -> Result<Polygon> {
        let det = map.linear.det();
        if det == 0 {
            return Err(Error::DegenerateLattice);
        }
        let mut vs = self
            .vertices
            .iter()
            .map(|&v| map.apply(v))
            .collect::<Result<Vec<_>>>()?;
        if det < 0 {
            vs.reverse();
        }
        rotate_to_min(&mut vs);
        Ok(Polygon { vertices: vs })
    }

    /// Image under a nonsingular linear map.
    pub fn transform_linear(&self, m: &IntMat2) -> Result<Polygon> {
        self.transform(&AffineMap::linear(*m))
    }

    pub fn translate(&self, t: IntVec) -> Result<Polygon> {
        self.transform(&AffineMap::translation(t))
    }
}

impl fmt::Display for Polygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Twice the area and the boundary and interior lattice point counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PickData {
    pub area2: i128,
    pub boundary: i64,
    pub interior: i64,
}

impl PickData {
    /// `2·area = 2·interior + boundary − 2`.
    pub fn identity_holds(&self) -> bool {
        self.area2 == 2 * self.interior as i128 + self.boundary as i128 - 2
    }
}

/// Extreme coordinates of a polygon and where they are attained.
///
/// `north` is the largest `x2`; the top side spans `x1 ∈ [north_minus, north_plus]`.
/// The other three sides follow the same pattern (`west`/`east` span `x2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoundingStats {
    pub north: i64,
    pub north_minus: i64,
    pub north_plus: i64,
    pub south: i64,
    pub south_minus: i64,
    pub south_plus: i64,
    pub west: i64,
    pub west_minus: i64,
    pub west_plus: i64,
    pub east: i64,
    pub east_minus: i64,
    pub east_plus: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Line {
    /// `x1 = c`
    Vertical(i64),
    /// `x2 = c`
    Horizontal(i64),
    /// The line through two distinct points.
    Through(IntVec, IntVec),
}

impl Line {
    /// A base point and direction; vertical lines are parametrised by `x2`,
    /// horizontal ones by `x1`.
    pub fn parametrisation(&self) -> (IntVec, IntVec) {
        match *self {
            Line::Vertical(c) => (IntVec::new(c, 0), IntVec::E2),
            Line::Horizontal(c) => (IntVec::new(0, c), IntVec::E1),
            Line::Through(a, b) => (a, b - a),
        }
    }
}

/// A closed segment between two distinct lattice points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Segment {
    pub a: IntVec,
    pub b: IntVec,
}

impl Segment {
    pub fn new(a: IntVec, b: IntVec) -> Result<Self> {
        if a == b {
            return Err(Error::InvalidPolygon("segment endpoints coincide"));
        }
        Ok(Segment { a, b })
    }

    /// The supporting line, parametrised so that `λ ∈ [0, 1]` is the segment.
    pub fn line(&self) -> Line {
        Line::Through(self.a, self.b)
    }

    /// Number of lattice points on the closed segment.
    pub fn lattice_count(&self) -> i64 {
        (self.b - self.a).content() + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn v(x1: i64, x2: i64) -> IntVec {
        IntVec::new(x1, x2)
    }

    #[test]
    fn hull_drops_interior_and_collinear() {
        let p = convex_hull(&[v(0, 0), v(1, 0), v(2, 0), v(2, 2), v(0, 2), v(1, 1)]).unwrap();
        assert_eq!(p.vertices(), &[v(0, 0), v(2, 0), v(2, 2), v(0, 2)]);
        assert_eq!(
            convex_hull(&[v(0, 0), v(1, 1), v(2, 2)]),
            Err(Error::DegenerateHull)
        );
    }

    #[test]
    fn new_rejects_bad_cycles() {
        assert!(Polygon::new(vec![v(0, 0), v(0, 1), v(1, 0)]).is_err());
        let star = vec![v(2, 0), v(-2, 1), v(1, -2), v(1, 2), v(-2, -1)];
        assert!(Polygon::new(star).is_err());
        let p = Polygon::new(vec![v(1, 0), v(0, 1), v(0, 0)]).unwrap();
        assert_eq!(p.vertices()[0], v(0, 0));
    }

    #[test]
    fn unit_square_counts() {
        let p = Polygon::new(vec![v(0, 0), v(1, 0), v(1, 1), v(0, 1)]).unwrap();
        assert_eq!(p.lattice_points(), vec![v(0, 0), v(0, 1), v(1, 0), v(1, 1)]);
        assert_eq!(
            p.pick_data(),
            PickData {
                area2: 2,
                boundary: 4,
                interior: 0
            }
        );
    }

    #[test]
    fn triangle_three_by_three() {
        let p = Polygon::new(vec![v(0, 0), v(3, 0), v(0, 3)]).unwrap();
        let d = p.pick_data();
        assert_eq!((d.boundary, d.interior), (9, 1));
        assert!(d.identity_holds());
    }

    #[test]
    fn splitting_predicates() {
        let p = Polygon::new(vec![v(-1, -1), v(1, -1), v(1, 1), v(-1, 1)]).unwrap();
        assert!(p.line_splits(&Line::Vertical(0)));
        assert!(!p.line_splits(&Line::Vertical(1)));
        assert!(p.segment_splits(&Segment::new(v(0, -1), v(0, 1)).unwrap()));
        assert!(!p.segment_splits(&Segment::new(v(0, -1), v(0, 0)).unwrap()));
        assert!(p.ray_splits(v(0, -5), IntVec::E2));
        assert!(!p.ray_splits(v(0, 0), IntVec::E2));
    }

    #[test]
    fn bounding_stats_of_trapezoid() {
        let p = Polygon::new(vec![v(0, 0), v(4, 0), v(3, 2), v(1, 2)]).unwrap();
        let s = p.bounding_stats();
        assert_eq!((s.south, s.south_minus, s.south_plus), (0, 0, 4));
        assert_eq!((s.north, s.north_minus, s.north_plus), (2, 1, 3));
        assert_eq!((s.west, s.west_minus, s.west_plus), (0, 0, 0));
        assert_eq!((s.east, s.east_minus, s.east_plus), (4, 0, 0));
    }

    #[test]
    fn reflection_keeps_orientation_canonical() {
        let p = Polygon::new(vec![v(0, 0), v(2, 0), v(0, 1)]).unwrap();
        let q = p
            .apply_affine(&AffineMap::linear(IntMat2::diag(-1, 1)))
            .unwrap();
        assert_eq!(q.vertices(), &[v(-2, 0), v(0, 0), v(0, 1)]);
        assert!(p
            .apply_affine(&AffineMap::linear(IntMat2::diag(2, 1)))
            .is_err());
    }
}
