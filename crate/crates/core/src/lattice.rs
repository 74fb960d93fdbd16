//! Integer vectors, 2×2 integer matrices, affine maps and sublattices of `ℤ²`.
//!
//! Matrices act on column vectors: `M·x = (a11·x1 + a12·x2, a21·x1 + a22·x2)`.
//! A sublattice is stored by a basis matrix whose columns generate it.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;

use crate::error::{Error, Result};

pub(crate) fn narrow(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntVec {
    pub x1: i64,
    pub x2: i64,
}

impl IntVec {
    pub const ZERO: IntVec = IntVec { x1: 0, x2: 0 };
    pub const E1: IntVec = IntVec { x1: 1, x2: 0 };
    pub const E2: IntVec = IntVec { x1: 0, x2: 1 };

    pub const fn new(x1: i64, x2: i64) -> Self {
        IntVec { x1, x2 }
    }

    /// `det[self, other]`, the z-component of the cross product.
    pub fn cross(self, other: IntVec) -> i128 {
        self.x1 as i128 * other.x2 as i128 - self.x2 as i128 * other.x1 as i128
    }

    pub fn dot(self, other: IntVec) -> i128 {
        self.x1 as i128 * other.x1 as i128 + self.x2 as i128 * other.x2 as i128
    }

    /// Greatest common divisor of the coordinates (0 for the zero vector).
    pub fn content(self) -> i64 {
        self.x1.gcd(&self.x2)
    }

    pub fn is_primitive(self) -> bool {
        self.content() == 1
    }

    pub fn checked_add(self, o: IntVec) -> Result<IntVec> {
        Ok(IntVec::new(
            self.x1.checked_add(o.x1).ok_or(Error::Overflow)?,
            self.x2.checked_add(o.x2).ok_or(Error::Overflow)?,
        ))
    }

    pub fn checked_sub(self, o: IntVec) -> Result<IntVec> {
        Ok(IntVec::new(
            self.x1.checked_sub(o.x1).ok_or(Error::Overflow)?,
            self.x2.checked_sub(o.x2).ok_or(Error::Overflow)?,
        ))
    }

    pub fn checked_scale(self, k: i64) -> Result<IntVec> {
        Ok(IntVec::new(
            self.x1.checked_mul(k).ok_or(Error::Overflow)?,
            self.x2.checked_mul(k).ok_or(Error::Overflow)?,
        ))
    }
}

impl fmt::Display for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x1, self.x2)
    }
}

impl From<(i64, i64)> for IntVec {
    fn from((x1, x2): (i64, i64)) -> Self {
        IntVec::new(x1, x2)
    }
}

impl Add for IntVec {
    type Output = IntVec;
    fn add(self, o: IntVec) -> IntVec {
        self.checked_add(o).expect("coordinate overflow")
    }
}

impl Sub for IntVec {
    type Output = IntVec;
    fn sub(self, o: IntVec) -> IntVec {
        self.checked_sub(o).expect("coordinate overflow")
    }
}

impl Neg for IntVec {
    type Output = IntVec;
    fn neg(self) -> IntVec {
        IntVec::ZERO - self
    }
}

impl Mul<IntVec> for i64 {
    type Output = IntVec;
    fn mul(self, v: IntVec) -> IntVec {
        v.checked_scale(self).expect("coordinate overflow")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntMat2 {
    pub a11: i64,
    pub a12: i64,
    pub a21: i64,
    pub a22: i64,
}

impl IntMat2 {
    pub const IDENTITY: IntMat2 = IntMat2::new(1, 0, 0, 1);

    pub const fn new(a11: i64, a12: i64, a21: i64, a22: i64) -> Self {
        IntMat2 { a11, a12, a21, a22 }
    }

    pub const fn from_columns(c1: IntVec, c2: IntVec) -> Self {
        IntMat2::new(c1.x1, c2.x1, c1.x2, c2.x2)
    }

    pub const fn diag(d1: i64, d2: i64) -> Self {
        IntMat2::new(d1, 0, 0, d2)
    }

    pub const fn col1(&self) -> IntVec {
        IntVec::new(self.a11, self.a21)
    }

    pub const fn col2(&self) -> IntVec {
        IntVec::new(self.a12, self.a22)
    }

    pub fn det(&self) -> i128 {
        self.a11 as i128 * self.a22 as i128 - self.a12 as i128 * self.a21 as i128
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs() == 1
    }

    pub fn apply(&self, v: IntVec) -> Result<IntVec> {
        let x1 = self.a11 as i128 * v.x1 as i128 + self.a12 as i128 * v.x2 as i128;
        let x2 = self.a21 as i128 * v.x1 as i128 + self.a22 as i128 * v.x2 as i128;
        Ok(IntVec::new(narrow(x1)?, narrow(x2)?))
    }

    /// `self · other`.
    pub fn compose(&self, o: &IntMat2) -> Result<IntMat2> {
        let m =
            |a: i64, b: i64, c: i64, d: i64| narrow(a as i128 * b as i128 + c as i128 * d as i128);
        Ok(IntMat2::new(
            m(self.a11, o.a11, self.a12, o.a21)?,
            m(self.a11, o.a12, self.a12, o.a22)?,
            m(self.a21, o.a11, self.a22, o.a21)?,
            m(self.a21, o.a12, self.a22, o.a22)?,
        ))
    }

    /// The adjugate, so that `self · adj = det · I`.
    pub fn adjugate(&self) -> Result<IntMat2> {
        let neg = |x: i64| x.checked_neg().ok_or(Error::Overflow);
        Ok(IntMat2::new(
            self.a22,
            neg(self.a12)?,
            neg(self.a21)?,
            self.a11,
        ))
    }

    /// Exact inverse of a unimodular matrix.
    pub fn inverse(&self) -> Result<IntMat2> {
        match self.det() {
            1 => self.adjugate(),
            -1 => {
                let a = self.adjugate()?;
                let neg = |x: i64| x.checked_neg().ok_or(Error::Overflow);
                Ok(IntMat2::new(
                    neg(a.a11)?,
                    neg(a.a12)?,
                    neg(a.a21)?,
                    neg(a.a22)?,
                ))
            }
            d => Err(Error::NotUnimodular(d)),
        }
    }
}

impl fmt::Display for IntMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.a11, self.a12, self.a21, self.a22
        )
    }
}

/// `x ↦ linear·x + translation`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AffineMap {
    pub linear: IntMat2,
    pub translation: IntVec,
}

impl AffineMap {
    pub const IDENTITY: AffineMap = AffineMap {
        linear: IntMat2::IDENTITY,
        translation: IntVec::ZERO,
    };

    pub const fn new(linear: IntMat2, translation: IntVec) -> Self {
        AffineMap {
            linear,
            translation,
        }
    }

    pub const fn linear(linear: IntMat2) -> Self {
        AffineMap {
            linear,
            translation: IntVec::ZERO,
        }
    }

    pub const fn translation(t: IntVec) -> Self {
        AffineMap {
            linear: IntMat2::IDENTITY,
            translation: t,
        }
    }

    pub fn apply(&self, p: IntVec) -> Result<IntVec> {
        self.linear.apply(p)?.checked_add(self.translation)
    }

    /// The map `x ↦ next(self(x))`.
    pub fn then(&self, next: &AffineMap) -> Result<AffineMap> {
        Ok(AffineMap {
            linear: next.linear.compose(&self.linear)?,
            translation: next.apply(self.translation)?,
        })
    }

    pub fn is_unimodular(&self) -> bool {
        self.linear.is_unimodular()
    }

    /// Whether the map is a bijection of `ℤ²` that maps `lattice` onto itself.
    pub fn is_automorphism_of(&self, lattice: &Sublattice) -> bool {
        if !self.is_unimodular() || !lattice.contains(self.translation) {
            return false;
        }
        // A unimodular map sends L into L exactly when it sends L onto L,
        // because both have the same index in ℤ².
        [lattice.basis.col1(), lattice.basis.col2()]
            .into_iter()
            .all(|b| {
                self.linear
                    .apply(b)
                    .map(|v| lattice.contains(v))
                    .unwrap_or(false)
            })
    }
}

/// A full-rank sublattice of `ℤ²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Sublattice {
    basis: IntMat2,
    delta: i64,
    n: i64,
    hermite: Hermite,
}

/// Lower-triangular generators: `L = { u·(h11, h21) + v·(0, h22) }`
/// with `h11, h22 > 0` and `0 ≤ h21 < h22`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Hermite {
    pub h11: i64,
    pub h21: i64,
    pub h22: i64,
}

impl Sublattice {
    pub fn new(basis: IntMat2) -> Result<Self> {
        let (delta, n) = invariant_factors(&basis)?;
        let hermite = hermite_form(&basis)?;
        Ok(Sublattice {
            basis,
            delta,
            n,
            hermite,
        })
    }

    /// `δℤ × nℤ`.
    pub fn diagonal(delta: i64, n: i64) -> Result<Self> {
        Sublattice::new(IntMat2::diag(delta, n))
    }

    /// `kℤ²`.
    pub fn scaled(k: i64) -> Result<Self> {
        Sublattice::diagonal(k, k)
    }

    pub fn integer_lattice() -> Self {
        Sublattice::scaled(1).expect("identity basis is valid")
    }

    /// The sublattice `δℤ × nℤ` with the given invariant factors.
    pub fn from_invariants(delta: i64, n: i64) -> Result<Self> {
        if delta < 1 || n < 1 || n % delta != 0 {
            return Err(Error::InvalidFactors { delta, n });
        }
        Sublattice::diagonal(delta, n)
    }

    pub fn basis(&self) -> IntMat2 {
        self.basis
    }

    pub fn hermite(&self) -> Hermite {
        self.hermite
    }

    /// Invariant factors `(δ, n)` with `δ | n`.
    pub fn invariant_factors(&self) -> (i64, i64) {
        (self.delta, self.n)
    }

    pub fn index(&self) -> i128 {
        self.delta as i128 * self.n as i128
    }

    pub fn is_proper(&self) -> bool {
        self.index() > 1
    }

    pub fn contains(&self, p: IntVec) -> bool {
        lattice_contains(&self.basis, p)
    }

    /// Points of the lattice in `[x1_min, x1_max] × [x2_min, x2_max]`, sorted lexicographically.
    pub fn points_in_box(
        &self,
        x1_min: i64,
        x1_max: i64,
        x2_min: i64,
        x2_max: i64,
    ) -> alloc::vec::Vec<IntVec> {
        let Hermite { h11, h21, h22 } = self.hermite;
        let mut out = alloc::vec::Vec::new();
        if x1_min > x1_max || x2_min > x2_max {
            return out;
        }
        let mut u = Integer::div_ceil(&x1_min, &h11);
        while let Some(x1) = u.checked_mul(h11).filter(|&x| x <= x1_max) {
            // x2 = h21·u + h22·v, so x2 ≡ h21·u (mod h22).
            let r = (h21 as i128 * u as i128).rem_euclid(h22 as i128) as i64;
            let mut x2 = x2_min + (r - x2_min).rem_euclid(h22);
            while x2 <= x2_max {
                out.push(IntVec::new(x1, x2));
                x2 += h22;
            }
            u += 1;
        }
        out
    }
}

impl fmt::Display for Sublattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "L(basis = {}, delta = {}, n = {})",
            self.basis, self.delta, self.n
        )
    }
}

/// Invariant factors `(δ, n)` of the lattice generated by the columns of `basis`:
/// `δ` is the gcd of the entries and `n = |det| / δ`.
pub fn invariant_factors(basis: &IntMat2) -> Result<(i64, i64)> {
    let det = basis.det();
    if det == 0 {
        return Err(Error::DegenerateLattice);
    }
    let delta = basis.a11.gcd(&basis.a12).gcd(&basis.a21).gcd(&basis.a22) as i128;
    Ok((narrow(delta)?, narrow(det.abs() / delta)?))
}

/// Smith normal form: unimodular `U`, `V` with `U·A·V = diag(δ, n)`, `δ | n`, `δ, n > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntMat2,
    pub d: IntMat2,
    pub v: IntMat2,
}

pub fn smith_normal_form(a: &IntMat2) -> Result<SmithForm> {
    if a.det() == 0 {
        return Err(Error::DegenerateLattice);
    }
    let mut d = [
        [a.a11 as i128, a.a12 as i128],
        [a.a21 as i128, a.a22 as i128],
    ];
    let mut u = [[1i128, 0], [0, 1]];
    let mut v = [[1i128, 0], [0, 1]];
    const LIMIT: i128 = 1 << 100;

    fn swap_rows(m: &mut [[i128; 2]; 2]) {
        m.swap(0, 1);
    }
    fn swap_cols(m: &mut [[i128; 2]; 2]) {
        for row in m.iter_mut() {
            row.swap(0, 1);
        }
    }
    // row[dst] -= q·row[src]
    fn row_op(m: &mut [[i128; 2]; 2], dst: usize, src: usize, q: i128) {
        let s = m[src];
        for (x, y) in m[dst].iter_mut().zip(s) {
            *x -= q * y;
        }
    }
    // col[dst] -= q·col[src]
    fn col_op(m: &mut [[i128; 2]; 2], dst: usize, src: usize, q: i128) {
        for row in m.iter_mut() {
            row[dst] -= q * row[src];
        }
    }

    loop {
        // Move an entry of least nonzero magnitude to the pivot.
        let (mut bi, mut bj) = (0, 0);
        let mut best = i128::MAX;
        for (i, row) in d.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if x != 0 && x.abs() < best {
                    best = x.abs();
                    (bi, bj) = (i, j);
                }
            }
        }
        if bi == 1 {
            swap_rows(&mut d);
            swap_rows(&mut u);
        }
        if bj == 1 {
            swap_cols(&mut d);
            swap_cols(&mut v);
        }
        let q = d[1][0] / d[0][0];
        row_op(&mut d, 1, 0, q);
        row_op(&mut u, 1, 0, q);
        let q = d[0][1] / d[0][0];
        col_op(&mut d, 1, 0, q);
        col_op(&mut v, 1, 0, q);
        if u.iter().chain(v.iter()).flatten().any(|x| x.abs() > LIMIT) {
            return Err(Error::Overflow);
        }
        if d[1][0] != 0 || d[0][1] != 0 {
            continue;
        }
        if d[1][1] % d[0][0] != 0 {
            // Fold the second row into the first; the next pass shrinks the pivot.
            row_op(&mut d, 0, 1, -1);
            row_op(&mut u, 0, 1, -1);
            continue;
        }
        break;
    }
    for i in 0..2 {
        if d[i][i] < 0 {
            for c in 0..2 {
                d[i][c] = -d[i][c];
                u[i][c] = -u[i][c];
            }
        }
    }
    let mat = |m: [[i128; 2]; 2]| -> Result<IntMat2> {
        Ok(IntMat2::new(
            narrow(m[0][0])?,
            narrow(m[0][1])?,
            narrow(m[1][0])?,
            narrow(m[1][1])?,
        ))
    };
    Ok(SmithForm {
        u: mat(u)?,
        d: mat(d)?,
        v: mat(v)?,
    })
}

/// Whether `p` lies in the lattice generated by the columns of `basis`,
/// by solving `basis · c = p` exactly with Cramer's rule.
pub fn lattice_contains(basis: &IntMat2, p: IntVec) -> bool {
    let det = basis.det();
    if det == 0 {
        return false;
    }
    let c1 = p.x1 as i128 * basis.a22 as i128 - basis.a12 as i128 * p.x2 as i128;
    let c2 = basis.a11 as i128 * p.x2 as i128 - p.x1 as i128 * basis.a21 as i128;
    c1 % det == 0 && c2 % det == 0
}

fn hermite_form(basis: &IntMat2) -> Result<Hermite> {
    let (mut c1, mut c2) = (
        [basis.a11 as i128, basis.a21 as i128],
        [basis.a12 as i128, basis.a22 as i128],
    );
    // Column Euclid on the first row.
    while c2[0] != 0 {
        let q = c1[0].div_euclid(c2[0]);
        c1 = [c1[0] - q * c2[0], c1[1] - q * c2[1]];
        core::mem::swap(&mut c1, &mut c2);
    }
    if c1[0] < 0 {
        c1 = [-c1[0], -c1[1]];
    }
    if c2[1] < 0 {
        c2[1] = -c2[1];
    }
    if c1[0] == 0 || c2[1] == 0 {
        return Err(Error::DegenerateLattice);
    }
    let h21 = c1[1].rem_euclid(c2[1]);
    Ok(Hermite {
        h11: narrow(c1[0])?,
        h21: narrow(h21)?,
        h22: narrow(c2[1])?,
    })
}

/// A unimodular `T` with `T·f = e2` (rows `(f2, −f1)` and a Bezout row `(p, q)`).
fn to_e2(f: IntVec) -> Result<IntMat2> {
    let eg = f.x1.extended_gcd(&f.x2);
    let (mut p, mut q) = (eg.x, eg.y);
    if eg.gcd == -1 {
        (p, q) = (-p, -q);
    } else if eg.gcd != 1 {
        return Err(Error::NotPrimitive(f.x1, f.x2));
    }
    if f.x2 == 0 {
        (p, q) = (f.x1, 0);
    } else {
        // Canonical Bezout pair: 0 ≤ p < |f2|.
        let p2 = p.rem_euclid(f.x2.abs());
        let k = (p2 - p) / f.x2;
        q -= k * f.x1;
        p = p2;
    }
    let neg = f.x1.checked_neg().ok_or(Error::Overflow)?;
    Ok(IntMat2::new(f.x2, neg, p, q))
}

/// A determinant-one matrix `M` with `M·f = g` for primitive `f`, `g`.
pub fn primitive_to(f: IntVec, g: IntVec) -> Result<IntMat2> {
    if !f.is_primitive() {
        return Err(Error::NotPrimitive(f.x1, f.x2));
    }
    if !g.is_primitive() {
        return Err(Error::NotPrimitive(g.x1, g.x2));
    }
    let tf = to_e2(f)?;
    let tg = to_e2(g)?;
    tg.adjugate()?.compose(&tf)
}

/// Small and large steps of a lattice with respect to a basis `(f1, f2)` of `ℤ²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Steps {
    pub small_f1: i64,
    pub large_f1: i64,
    pub small_f2: i64,
    pub large_f2: i64,
}

/// Steps of `lattice` along `(f1, f2)`.
///
/// With `x = a1·f1 + a2·f2`, the small `f1`-step is the least positive `|a1|`
/// over lattice points and the large `f1`-step the least positive `a1` over
/// lattice points with `a2 = 0`.
pub fn steps(lattice: &Sublattice, f1: IntVec, f2: IntVec) -> Result<Steps> {
    let frame = IntMat2::from_columns(f1, f2);
    let inv = frame.inverse()?;
    let b = inv.compose(&lattice.basis())?;
    let small_f1 = b.a11.gcd(&b.a12);
    let small_f2 = b.a21.gcd(&b.a22);
    Ok(Steps {
        small_f1,
        large_f1: axis_generator(&b, 1)?,
        small_f2,
        large_f2: axis_generator(&b, 0)?,
    })
}

/// Column-reduces `m` until one column vanishes in row `zero_row`, then
/// returns the absolute value of that column's other entry.
fn axis_generator(m: &IntMat2, zero_row: usize) -> Result<i64> {
    let mut c1 = [m.a11 as i128, m.a21 as i128];
    let mut c2 = [m.a12 as i128, m.a22 as i128];
    let other = 1 - zero_row;
    while c2[zero_row] != 0 {
        let q = c1[zero_row].div_euclid(c2[zero_row]);
        c1 = [c1[0] - q * c2[0], c1[1] - q * c2[1]];
        core::mem::swap(&mut c1, &mut c2);
    }
    narrow(c2[other].abs())
}
