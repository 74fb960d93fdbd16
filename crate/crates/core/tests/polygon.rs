mod common;

use common::*;
use proptest::prelude::*;
use sublattice_core::polygon::{convex_hull, Line, Segment};
use sublattice_core::{AffineMap, Error, IntMat2, IntVec, Polygon, Sublattice};

fn pts(p: &Polygon) -> Vec<(i64, i64)> {
    p.vertices().iter().map(|v| (v.x1, v.x2)).collect()
}

fn square() -> Polygon {
    hull(&[(0, 0), (2, 0), (2, 2), (0, 2)])
}

fn quad() -> Polygon {
    hull(&[(1, -1), (4, 1), (2, 4), (-1, 2)])
}

#[test]
fn hull_examples() {
    assert_eq!(
        pts(&hull(&[(0, 0), (2, 0), (2, 2), (0, 2), (1, 1)])),
        [(0, 0), (2, 0), (2, 2), (0, 2)]
    );
    assert_eq!(
        convex_hull(&[v(0, 0), v(1, 0), v(2, 0)]),
        Err(Error::DegenerateHull)
    );
    assert!(Polygon::new(vec![v(0, 0), v(0, 1), v(1, 0)]).is_err());
}

#[test]
fn point_and_pick_examples() {
    let unit = hull(&[(0, 0), (1, 0), (0, 1)]);
    assert_eq!(unit.lattice_points(), [v(0, 0), v(0, 1), v(1, 0)]);
    let d = unit.pick_data();
    assert_eq!((d.area2, d.interior, d.boundary), (1, 0, 3));
    assert_eq!(square().lattice_point_count(), 9);
    let d = square().pick_data();
    assert_eq!((d.area2, d.interior, d.boundary), (8, 1, 8));
    let t = hull(&[(0, 0), (4, 0), (0, 4)]);
    assert_eq!(t.lattice_point_count(), 15);
    let d = t.pick_data();
    assert_eq!((d.area2, d.interior, d.boundary), (16, 3, 12));
    assert!(d.identity_holds());
}

#[test]
fn freeness_examples() {
    let two = Sublattice::scaled(2).unwrap();
    assert!(!hull(&[(0, 0), (1, 0), (1, 1), (0, 1)]).is_free_of(&two));
    assert!(hull(&[(1, 0), (2, 1), (1, 2), (0, 1)]).is_free_of(&two));
}

#[test]
fn bounding_examples() {
    let s = square().bounding_stats();
    assert_eq!((s.north, s.north_minus, s.north_plus), (2, 0, 2));
    assert_eq!((s.south, s.south_minus, s.south_plus), (0, 0, 2));
    assert_eq!((s.west, s.west_minus, s.west_plus), (0, 0, 2));
    assert_eq!((s.east, s.east_minus, s.east_plus), (2, 0, 2));
    let d = hull(&[(1, 0), (2, 1), (1, 2), (0, 1)]).bounding_stats();
    assert_eq!(
        (d.north, d.north_minus, d.north_plus, d.south, d.south_minus),
        (2, 1, 1, 0, 1)
    );
    assert_eq!(
        (d.west, d.west_minus, d.west_plus, d.east, d.east_minus),
        (0, 1, 1, 2, 1)
    );
    let q = quad().bounding_stats();
    assert_eq!((q.north, q.north_minus, q.north_plus), (4, 2, 2));
    assert_eq!((q.south, q.south_minus, q.south_plus), (-1, 1, 1));
    assert_eq!((q.west, q.west_minus, q.west_plus), (-1, 2, 2));
    assert_eq!((q.east, q.east_minus, q.east_plus), (4, 1, 1));
}

#[test]
fn splitting_examples() {
    assert!(square().line_splits(&Line::Vertical(1)));
    assert!(!square().line_splits(&Line::Vertical(0)));
    assert!(quad().line_splits(&Line::Horizontal(0)));
    assert!(square().segment_splits(&Segment::new(v(1, 0), v(1, 2)).unwrap()));
    assert!(!square().segment_splits(&Segment::new(v(1, 0), v(1, 1)).unwrap()));
    assert!(quad().segment_splits(&Segment::new(v(0, 0), v(3, 0)).unwrap()));
}

#[test]
fn affine_examples() {
    let unit = hull(&[(0, 0), (1, 0), (0, 1)]);
    assert_eq!(unit.apply_affine(&AffineMap::IDENTITY).unwrap(), unit);
    let sheared = unit
        .apply_affine(&AffineMap::linear(IntMat2::new(1, 0, 1, 1)))
        .unwrap();
    assert_eq!(sheared, hull(&[(0, 0), (1, 1), (0, 1)]));
    assert!(unit
        .apply_affine(&AffineMap::linear(IntMat2::diag(2, 1)))
        .is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn pick_identity(p in polygon(15, 12)) {
        prop_assert!(p.pick_data().identity_holds());
    }
}

proptest! {
    #[test]
    fn hull_contains_inputs_and_vertices_are_extreme(raw in prop::collection::vec((-10i64..=10, -10i64..=10), 3..50)) {
        let pts: Vec<IntVec> = raw.into_iter().map(IntVec::from).collect();
        let Ok(h) = convex_hull(&pts) else { return Ok(()) };
        for &p in &pts {
            prop_assert!(h.contains(p));
        }
        let vs = h.vertices();
        for i in 0..vs.len() {
            let (a, b, c) = (vs[i], vs[(i + 1) % vs.len()], vs[(i + 2) % vs.len()]);
            prop_assert!((b - a).cross(c - b) > 0);
        }
        prop_assert_eq!(convex_hull(vs).unwrap(), h.clone());
        prop_assert_eq!(vs[0], *vs.iter().min().unwrap());
    }

    #[test]
    fn lattice_points_match_scan(p in polygon(8, 8)) {
        let (a, b) = p.x1_range();
        let (c, d) = p.x2_range();
        let mut brute = Vec::new();
        for x1 in a..=b {
            for x2 in c..=d {
                if p.contains(v(x1, x2)) {
                    brute.push(v(x1, x2));
                }
            }
        }
        prop_assert_eq!(p.lattice_points(), brute);
    }

    #[test]
    fn bounding_points_are_vertices(p in polygon(10, 10)) {
        let s = p.bounding_stats();
        let vs = p.vertices();
        for q in [
            (s.north_minus, s.north), (s.north_plus, s.north), (s.south_minus, s.south), (s.south_plus, s.south),
            (s.west, s.west_minus), (s.west, s.west_plus), (s.east, s.east_minus), (s.east, s.east_plus),
        ] {
            prop_assert!(vs.contains(&q.into()));
        }
        prop_assert!(vs.iter().all(|w| (s.west..=s.east).contains(&w.x1) && (s.south..=s.north).contains(&w.x2)));
    }

    #[test]
    fn unimodular_images_keep_counts(p in polygon(8, 8), m in unimodular(), t in (-5i64..=5, -5i64..=5)) {
        let map = AffineMap::new(m, t.into());
        let q = p.apply_affine(&map).unwrap();
        prop_assert_eq!(q.vertex_count(), p.vertex_count());
        prop_assert_eq!(q.pick_data(), p.pick_data());
    }

    #[test]
    fn freeness_is_invariant_under_automorphisms(
        p in polygon(6, 8), l in proper_lattice(), m in unimodular(), k in (-2i64..=2, -2i64..=2),
    ) {
        let linear = l.basis().compose(&m).unwrap().compose(&l.basis().adjugate().unwrap()).unwrap();
        // `B·M·adj(B)` is `det B` times an automorphism of `L`; skip the rest.
        let det = l.basis().det() as i64;
        prop_assume!([linear.a11, linear.a12, linear.a21, linear.a22].iter().all(|x| x % det == 0));
        let a = IntMat2::new(linear.a11 / det, linear.a12 / det, linear.a21 / det, linear.a22 / det);
        let t = l.basis().apply(k.into()).unwrap();
        let map = AffineMap::new(a, t);
        prop_assert!(map.is_automorphism_of(&l));
        prop_assert_eq!(p.apply_affine(&map).unwrap().is_free_of(&l), p.is_free_of(&l));
    }

    #[test]
    fn segment_splits_implies_line_splits(p in polygon(6, 8), a in (-7i64..=7, -7i64..=7), b in (-7i64..=7, -7i64..=7)) {
        prop_assume!(a != b);
        let s = Segment::new(a.into(), b.into()).unwrap();
        if p.segment_splits(&s) {
            prop_assert!(p.line_splits(&s.line()));
        }
    }
}
