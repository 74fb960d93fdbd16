mod common;

use common::*;
use proptest::prelude::*;
use sublattice_core::lattice::{
    invariant_factors, lattice_contains, primitive_to, smith_normal_form, steps, IntMat2, IntVec,
    Sublattice,
};

fn brute_steps(l: &Sublattice, f1: IntVec, f2: IntVec) -> (i64, i64) {
    let det = l.index() as i64;
    let large = (1..=det).find(|&u| l.contains(u * f1)).unwrap();
    let small = (1..=det)
        .find(|&u| (0..det).any(|w| l.contains(u * f1 + w * f2)))
        .unwrap();
    (small, large)
}

#[test]
fn smith_examples() {
    let a = IntMat2::new(2, 1, 0, 3);
    let s = smith_normal_form(&a).unwrap();
    assert_eq!(s.d, IntMat2::diag(1, 6));
    assert_eq!(s.u.compose(&a).unwrap().compose(&s.v).unwrap(), s.d);
    assert_eq!(
        smith_normal_form(&IntMat2::new(0, 3, 3, 0)).unwrap().d,
        IntMat2::diag(3, 3)
    );
    assert_eq!(
        smith_normal_form(&IntMat2::IDENTITY).unwrap().d,
        IntMat2::IDENTITY
    );
}

#[test]
fn invariant_factor_examples() {
    assert_eq!(invariant_factors(&IntMat2::new(2, 4, 0, 6)), Ok((2, 6)));
    assert_eq!(invariant_factors(&IntMat2::diag(2, 3)), Ok((1, 6)));
    assert!(invariant_factors(&IntMat2::new(1, 2, 2, 4)).is_err());
}

#[test]
fn membership_examples() {
    let two = Sublattice::scaled(2).unwrap();
    assert!(two.contains(v(4, 6)));
    assert!(!two.contains(v(3, 6)));
    let l = Sublattice::new(IntMat2::from_columns(v(1, 1), v(0, 3))).unwrap();
    assert!(l.contains(v(1, 1)));
}

#[test]
fn primitive_to_examples() {
    assert_eq!(primitive_to(v(0, 1), v(0, 1)), Ok(IntMat2::IDENTITY));
    let m = primitive_to(v(1, 0), v(0, 1)).unwrap();
    assert_eq!(m.apply(v(1, 0)), Ok(v(0, 1)));
    assert!(m.is_unimodular());
    let m = primitive_to(v(3, 5), v(0, 1)).unwrap();
    assert_eq!(m.apply(v(3, 5)), Ok(v(0, 1)));
    assert_eq!(m.det(), 1);
    assert!(primitive_to(v(2, 4), v(0, 1)).is_err());
}

#[test]
fn step_examples() {
    let s = steps(&Sublattice::scaled(2).unwrap(), IntVec::E1, IntVec::E2).unwrap();
    assert_eq!((s.small_f1, s.large_f2, s.small_f1 * s.large_f2), (2, 2, 4));
    let s = steps(&Sublattice::integer_lattice(), v(2, 1), v(1, 1)).unwrap();
    assert_eq!(
        (s.small_f1, s.large_f1, s.small_f2, s.large_f2),
        (1, 1, 1, 1)
    );
    let l = Sublattice::new(IntMat2::from_columns(v(1, 1), v(0, 2))).unwrap();
    let s = steps(&l, IntVec::E1, IntVec::E2).unwrap();
    assert_eq!((s.small_f1, s.large_f2), (1, 2));
    assert!(steps(&l, v(1, 0), v(1, 2)).is_err());
}

proptest! {
    #[test]
    fn smith_form_is_exact(a in nonsingular(12)) {
        let s = smith_normal_form(&a).unwrap();
        prop_assert!(s.u.is_unimodular() && s.v.is_unimodular());
        prop_assert_eq!(s.u.compose(&a).unwrap().compose(&s.v).unwrap(), s.d);
        let (delta, n) = invariant_factors(&a).unwrap();
        prop_assert_eq!((s.d.a11, s.d.a22, s.d.a12, s.d.a21), (delta, n, 0, 0));
        prop_assert_eq!(n % delta, 0);
        prop_assert_eq!(delta as i128 * n as i128, a.det().abs());
    }

    #[test]
    fn membership_matches_brute_force(a in nonsingular(5), x1 in -20i64..=20, x2 in -20i64..=20) {
        let l = Sublattice::new(a).unwrap();
        let p = v(x1, x2);
        // Cramer: |coefficients| <= |adj(a)|·|p| / |det a|.
        let b = (a.a11.abs() + a.a12.abs() + a.a21.abs() + a.a22.abs()) * 20;
        let brute = (-b..=b).any(|u| (-b..=b).any(|w| u * a.col1() + w * a.col2() == p));
        prop_assert_eq!(lattice_contains(&a, p), brute);
        prop_assert_eq!(l.contains(p), brute);
    }

    #[test]
    fn primitive_to_composes(f in (-9i64..=9, -9i64..=9), g in (-9i64..=9, -9i64..=9), h in (-9i64..=9, -9i64..=9)) {
        let (f, g, h) = (IntVec::from(f), IntVec::from(g), IntVec::from(h));
        prop_assume!(f.is_primitive() && g.is_primitive() && h.is_primitive());
        let a = primitive_to(f, g).unwrap();
        let b = primitive_to(g, h).unwrap();
        prop_assert_eq!(a.apply(f).unwrap(), g);
        prop_assert!(a.is_unimodular());
        prop_assert_eq!(b.compose(&a).unwrap().apply(f).unwrap(), h);
    }

    #[test]
    fn steps_match_brute_force(a in nonsingular(4), basis in unimodular()) {
        let l = Sublattice::new(a).unwrap();
        let (f1, f2) = (basis.col1(), basis.col2());
        let s = steps(&l, f1, f2).unwrap();
        prop_assert_eq!((s.small_f1, s.large_f1), brute_steps(&l, f1, f2));
        prop_assert_eq!((s.small_f2, s.large_f2), brute_steps(&l, f2, f1));
        prop_assert!(s.small_f1 <= s.large_f1 && s.small_f2 <= s.large_f2);
        prop_assert_eq!(s.small_f1 as i128 * s.large_f2 as i128, l.index());
        prop_assert_eq!(s.small_f2 as i128 * s.large_f1 as i128, l.index());
    }

    #[test]
    fn hermite_box_points_match_filter(a in nonsingular(5), lo in -6i64..=0, w in 0i64..=8) {
        let l = Sublattice::new(a).unwrap();
        let mut brute = Vec::new();
        for x1 in lo..=lo + w {
            for x2 in lo..=lo + w + 1 {
                if l.contains(v(x1, x2)) {
                    brute.push(v(x1, x2));
                }
            }
        }
        prop_assert_eq!(l.points_in_box(lo, lo + w, lo, lo + w + 1), brute);
    }

    #[test]
    fn invariants_survive_change_of_basis(a in nonsingular(6), u in unimodular()) {
        let l = Sublattice::new(a).unwrap();
        let m = Sublattice::new(a.compose(&u).unwrap()).unwrap();
        prop_assert_eq!(l.invariant_factors(), m.invariant_factors());
        prop_assert_eq!(l.hermite(), m.hermite());
    }
}
