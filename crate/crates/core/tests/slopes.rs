mod common;

use common::*;
use proptest::prelude::*;
use sublattice_core::slopes::{
    check_lemma_ledger, check_pr_slp, check_step_bounds, check_th3_6, check_th3_8,
    forms_small_angle, frame_splits, frame_splits_maximal, maximal_slopes, slope_profile,
    validate_slope, Frame, Slope, SlpHint,
};
use sublattice_core::{Error, IntMat2, IntVec, Sublattice};

fn slope(pts: &[(i64, i64)]) -> Slope {
    validate_slope(
        pts.iter().map(|&p| p.into()).collect(),
        IntVec::E1,
        IntVec::E2,
    )
    .unwrap()
}

#[test]
fn validation_examples() {
    assert_eq!(slope(&[(-1, 3), (2, -1)]).edge_count(), 1);
    assert_eq!(slope(&[(0, 0)]).edge_count(), 0);
    assert_eq!(slope(&[(0, 0), (1, -3), (2, -5), (3, -6)]).edge_count(), 3);
    let bad = validate_slope(
        vec![v(0, 0), v(1, -1), v(2, -3), v(3, -6)],
        IntVec::E1,
        IntVec::E2,
    );
    assert!(matches!(bad, Err(Error::InvalidSlope { edge: 1, .. })));
    let bad = validate_slope(vec![v(0, 0), v(1, 1)], IntVec::E1, IntVec::E2);
    assert!(matches!(bad, Err(Error::InvalidSlope { edge: 1, .. })));
}

#[test]
fn splitting_examples() {
    let o = Frame::standard(IntVec::ZERO);
    assert_eq!(frame_splits(&o, &slope(&[(-1, 3), (2, -1)])), Ok(true));
    assert_eq!(frame_splits(&o, &slope(&[(-1, 1), (1, -1)])), Ok(false));
    assert_eq!(frame_splits(&o, &slope(&[(0, 0)])), Ok(false));
    assert_eq!(
        forms_small_angle(&o, &slope(&[(-1, 3), (2, -1)])),
        Ok(false)
    );
    assert_eq!(forms_small_angle(&o, &slope(&[(-1, 2), (3, -1)])), Ok(true));
}

#[test]
fn sublattice_bound_on_a_skew_lattice() {
    let l = Sublattice::new(IntMat2::from_columns(v(1, 1), v(0, 2))).unwrap();
    let o = Frame::standard(IntVec::ZERO);
    assert!(check_th3_8(&o, &slope(&[(-1, 3), (2, -2)]), &l)
        .unwrap()
        .is_ok());
    assert!(check_th3_8(&o, &slope(&[(-1, 2), (1, -1)]), &l).is_err());
    let r = check_th3_8(
        &o,
        &slope(&[(-1, 3), (2, -2)]),
        &Sublattice::integer_lattice(),
    );
    assert!(r.is_err());
    let q = slope(&[(-1, 3), (3, -1)]);
    let r = check_th3_8(&o, &q, &l).unwrap();
    assert!(r.is_ok(), "{r}");
}

#[test]
fn maximal_slope_examples() {
    let q = hull(&[(1, -1), (4, 1), (2, 4), (-1, 2)]);
    assert_eq!(
        frame_splits_maximal(&q, &Frame::standard(IntVec::ZERO)),
        Ok(Some(4))
    );
    assert_eq!(
        frame_splits_maximal(&q, &Frame::new(v(3, 0), v(-1, 0), v(0, 1)).unwrap()),
        Ok(Some(1))
    );
    let sq = hull(&[(0, 0), (2, 0), (2, 2), (0, 2)]);
    let r = check_step_bounds(&sq, &Sublattice::scaled(2).unwrap()).unwrap();
    assert!(r.is_ok());
}

/// A random slope in frame coordinates `d1ℤ × d2ℤ`, moved by a random basis,
/// with the first integer origin in its bounding box that splits it.
fn instance(scale: (i64, i64)) -> impl Strategy<Value = (Frame, Slope, Sublattice)> {
    (
        prop::collection::vec((1i64..=6, -6i64..=-1), 1..=7),
        (-4i64..=4, -4i64..=4),
        unimodular(),
        any::<prop::sample::Index>(),
        any::<bool>(),
    )
        .prop_filter_map("no splitting origin", move |(raw, start, f, pick, swap)| {
            let (d1, d2) = scale;
            let mut edges: Vec<IntVec> = raw.into_iter().map(IntVec::from).collect();
            edges.sort_by(|&a, &b| b.cross(a).cmp(&0));
            edges.dedup_by(|b, a| a.cross(*b) == 0);
            let mut u = v(d1 * start.0, d2 * start.1);
            let mut coords = vec![u];
            for a in &edges {
                u = u + v(d1 * a.x1, d2 * a.x2);
                coords.push(u);
            }
            let world = coords.iter().map(|&c| f.apply(c).unwrap()).collect();
            let q = validate_slope(world, f.col1(), f.col2()).ok()?;
            let (a, b) = (coords[0], *coords.last().unwrap());
            let origins: Vec<IntVec> = (a.x1..=b.x1)
                .flat_map(|x| (b.x2..=a.x2).map(move |y| v(x, y)))
                .collect();
            let k = pick.index(origins.len());
            let frames = origins[k..].iter().chain(&origins[..k]).map(|&o| {
                let fr = Frame::new(f.apply(o).unwrap(), f.col1(), f.col2()).unwrap();
                if swap {
                    fr.swapped()
                } else {
                    fr
                }
            });
            let frame = frames
                .into_iter()
                .find(|fr| frame_splits(fr, &q).unwrap())?;
            let l = Sublattice::new(f.compose(&IntMat2::diag(d1, d2)).unwrap()).unwrap();
            Some((frame, q, l))
        })
}

fn any_instance() -> impl Strategy<Value = (Frame, Slope, Sublattice)> {
    prop_oneof![
        3 => instance((1, 1)),
        1 => instance((2, 2)),
        1 => instance((1, 2)),
        1 => instance((2, 1)),
        1 => instance((3, 3)),
        1 => instance((1, 3)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn slope_inequalities_hold((frame, q, l) in any_instance()) {
        let proper = l.is_proper().then_some(l);
        let r = check_pr_slp(&q, &SlpHint { lattice: Some(l), coset: None }).unwrap();
        prop_assert!(r.is_ok(), "{}", r);
        let r = check_th3_6(&frame, &q).unwrap();
        prop_assert!(r.is_ok(), "{}", r);
        let r = check_lemma_ledger(&frame, &q, proper.as_ref()).unwrap();
        prop_assert!(r.is_ok(), "{}", r);
        if let Some(l) = proper {
            let r = check_th3_8(&frame, &q, &l).unwrap();
            prop_assert!(r.is_ok(), "{}", r);
        }
    }

    #[test]
    fn swapped_frame_splits_and_one_has_small_angle((frame, q, _l) in any_instance()) {
        let other = frame.swapped();
        prop_assert!(frame_splits(&other, &q).unwrap());
        prop_assert!(forms_small_angle(&frame, &q).unwrap() || forms_small_angle(&other, &q).unwrap());
    }

    #[test]
    fn profile_is_consistent((frame, q, _l) in any_instance()) {
        let p = slope_profile(&frame, &q).unwrap();
        prop_assert_eq!(p.pihat_e, p.pihat_e1 + p.pihat_e2);
        prop_assert_eq!(p.pi1_e, (p.w().x1.max(0) - p.v().x1.max(0)).abs());
        prop_assert_eq!(p.pi2_e, (p.v().x2.max(0) - p.w().x2.max(0)).abs());
        prop_assert!(p.points[p.k].x2 < 0 && p.points[..p.k].iter().all(|x| x.x2 >= 0));
        prop_assert_eq!(p.t, num_integer::Integer::div_ceil(p.alpha.numer(), p.alpha.denom()) - 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn boundary_decomposition(p in polygon(15, 12)) {
        let m = maximal_slopes(&p).unwrap();
        prop_assert_eq!(m.edge_total(), p.vertex_count());
    }

    #[test]
    fn swap_symmetry_of_validation(raw in prop::collection::vec((-6i64..=6, -6i64..=6), 1..6), f in unimodular()) {
        let vs: Vec<IntVec> = raw.into_iter().map(IntVec::from).collect();
        let mut rev = vs.clone();
        rev.reverse();
        let a = validate_slope(vs, f.col1(), f.col2()).is_ok();
        let b = validate_slope(rev, f.col2(), f.col1()).is_ok();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn maximal_slopes_under_axis_frames(p in polygon(8, 10), o in (-9i64..=9, -9i64..=9), dirs in 0usize..4) {
        let axes = [(v(1, 0), v(0, 1)), (v(0, 1), v(-1, 0)), (v(-1, 0), v(0, -1)), (v(0, -1), v(1, 0))];
        let (f1, f2) = axes[dirs];
        let frame = Frame::new(o.into(), f1, f2).unwrap();
        if let Some(k) = frame_splits_maximal(&p, &frame).unwrap() {
            let q = maximal_slopes(&p).unwrap().get(k).clone();
            let r = check_th3_6(&frame, &q).unwrap();
            prop_assert!(r.is_ok(), "{}", r);
        }
    }

    #[test]
    fn step_bounds_on_lattice_polygons(p in polygon(4, 8), l in proper_lattice()) {
        let q = p.transform_linear(&l.basis()).unwrap();
        let r = check_step_bounds(&q, &l).unwrap();
        prop_assert!(r.is_ok(), "{}", r);
    }
}
