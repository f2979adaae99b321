//! Integer lattice engine for rank-4 homology lattices of abelian surfaces.
//!
//! Matrices act on row vectors: a lattice is the row span of its basis
//! matrix. All arithmetic is checked; overflow surfaces as
//! [`Error::Overflow`].

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numbers::{abs, add, mul, neg, sub, Rational};

pub type Vec4 = [i64; 4];
pub type RatVec4 = [Rational; 4];

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<Vec<i64>>", try_from = "Vec<Vec<i64>>")]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<i64>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{rows}x{cols} matrix with {} entries",
                entries.len()
            )));
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        if rows.iter().any(|r| r.as_ref().len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let entries = rows.iter().flat_map(|r| r.as_ref().iter().copied()).collect();
        IntMatrix::new(rows.len(), cols, entries)
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn diagonal(d: &[i64]) -> Self {
        let mut m = IntMatrix::zeros(d.len(), d.len());
        for (i, &x) in d.iter().enumerate() {
            m[(i, i)] = x;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Row `i` as a 4-vector. Panics if the matrix does not have 4 columns.
    pub fn row4(&self, i: usize) -> Vec4 {
        self.row(i).try_into().expect("matrix has 4 columns")
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn checked_mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = 0i64;
                for k in 0..self.cols {
                    acc = add(acc, mul(self[(i, k)], other[(k, j)])?)?;
                }
                out[(i, j)] = acc;
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, x: &[i64]) -> Result<Vec<i64>> {
        if x.len() != self.rows {
            return Err(Error::Shape("vector length does not match rows".into()));
        }
        let mut out = vec![0i64; self.cols];
        for (j, o) in out.iter_mut().enumerate() {
            for (i, &xi) in x.iter().enumerate() {
                *o = add(*o, mul(xi, self[(i, j)])?)?;
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.entries.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] -= q * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, q: i64) -> Result<()> {
        if q == 0 {
            return Ok(());
        }
        for j in 0..self.cols {
            let v = sub(self[(dst, j)], mul(q, self[(src, j)])?)?;
            self[(dst, j)] = v;
        }
        Ok(())
    }

    /// col[dst] -= q * col[src]
    fn col_axpy(&mut self, dst: usize, src: usize, q: i64) -> Result<()> {
        if q == 0 {
            return Ok(());
        }
        for i in 0..self.rows {
            let v = sub(self[(i, dst)], mul(q, self[(i, src)])?)?;
            self[(i, dst)] = v;
        }
        Ok(())
    }

    fn negate_row(&mut self, i: usize) -> Result<()> {
        for j in 0..self.cols {
            self[(i, j)] = neg(self[(i, j)])?;
        }
        Ok(())
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<i64> {
        if !self.is_square() {
            return Err(Error::Shape("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut sign = 1i64;
        let mut prev = 1i64;
        for k in 0..n {
            if a[(k, k)] == 0 {
                let Some(p) = (k + 1..n).find(|&i| a[(i, k)] != 0) else {
                    return Ok(0);
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = sub(mul(a[(i, j)], a[(k, k)])?, mul(a[(i, k)], a[(k, j)])?)?;
                    a[(i, j)] = num / prev;
                }
                a[(i, k)] = 0;
            }
            prev = a[(k, k)];
        }
        mul(sign, a[(n - 1, n - 1)])
    }

    /// Transposed cofactor matrix: `self * adj = det * I`.
    pub fn adjugate(&self) -> Result<IntMatrix> {
        if !self.is_square() {
            return Err(Error::Shape("adjugate of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 1 {
            return Ok(IntMatrix::identity(1));
        }
        let mut adj = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let minor: Vec<i64> = (0..n)
                    .filter(|&r| r != i)
                    .flat_map(|r| (0..n).filter(move |&c| c != j).map(move |c| (r, c)))
                    .map(|(r, c)| self[(r, c)])
                    .collect();
                let d = IntMatrix::new(n - 1, n - 1, minor)?.det()?;
                adj[(j, i)] = if (i + j) % 2 == 0 { d } else { neg(d)? };
            }
        }
        Ok(adj)
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(snf_diagonal(self)?.iter().filter(|&&d| d != 0).count())
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;

    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.entries[i * self.cols + j]
    }
}

impl From<IntMatrix> for Vec<Vec<i64>> {
    fn from(m: IntMatrix) -> Self {
        m.row_vectors()
    }
}

impl TryFrom<Vec<Vec<i64>>> for IntMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self> {
        IntMatrix::from_rows(&rows)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.row_vectors()).finish()
    }
}

/// Row Hermite normal form. Pivots are positive, entries above a pivot lie
/// in `[0, pivot)`, and zero rows are moved to the bottom so the shape is
/// unchanged.
pub fn hnf(m: &IntMatrix) -> Result<IntMatrix> {
    let mut a = m.clone();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        loop {
            let pivot = (r..a.rows)
                .filter(|&i| a[(i, c)] != 0)
                .min_by_key(|&i| a[(i, c)].unsigned_abs());
            let Some(pivot) = pivot else { break };
            a.swap_rows(r, pivot);
            let mut clear = true;
            for i in r + 1..a.rows {
                let q = a[(i, c)] / a[(r, c)];
                a.row_axpy(i, r, q)?;
                clear &= a[(i, c)] == 0;
            }
            if clear {
                break;
            }
        }
        if a[(r, c)] == 0 {
            continue;
        }
        if a[(r, c)] < 0 {
            a.negate_row(r)?;
        }
        for i in 0..r {
            let q = Integer::div_floor(&a[(i, c)], &a[(r, c)]);
            a.row_axpy(i, r, q)?;
        }
        r += 1;
    }
    Ok(a)
}

/// Smith decomposition `u * m * v = d` with `u`, `v` unimodular and `d`
/// diagonal, `d[0] | d[1] | ...`, all non-negative.
#[derive(Debug, Clone)]
pub struct Smith {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl Smith {
    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.d.rows.min(self.d.cols)).map(|i| self.d[(i, i)]).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|&&x| x != 0).count()
    }
}

pub fn smith(m: &IntMatrix) -> Result<Smith> {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| a[(i, j)] != 0)
                .min_by_key(|&(i, j)| a[(i, j)].unsigned_abs());
            let Some((pi, pj)) = pivot else {
                return Ok(Smith { u, d: a, v });
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                let q = a[(i, t)] / a[(t, t)];
                a.row_axpy(i, t, q)?;
                u.row_axpy(i, t, q)?;
                clean &= a[(i, t)] == 0;
            }
            for j in t + 1..cols {
                let q = a[(t, j)] / a[(t, t)];
                a.col_axpy(j, t, q)?;
                v.col_axpy(j, t, q)?;
                clean &= a[(t, j)] == 0;
            }
            if !clean {
                continue;
            }
            let p = a[(t, t)];
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| a[(i, j)] % p != 0));
            match offender {
                Some(i) => {
                    a.row_axpy(t, i, -1)?;
                    u.row_axpy(t, i, -1)?;
                }
                None => break,
            }
        }
        if a[(t, t)] < 0 {
            a.negate_row(t)?;
            u.negate_row(t)?;
        }
    }
    Ok(Smith { u, d: a, v })
}

/// Invariant factors `d₁ | d₂ | …` (length `min(rows, cols)`).
pub fn snf_diagonal(m: &IntMatrix) -> Result<Vec<i64>> {
    Ok(smith(m)?.diagonal())
}

/// Basis (as rows) of the integer left kernel `{y : y m = 0}`.
pub fn left_kernel(m: &IntMatrix) -> Result<Vec<Vec<i64>>> {
    let s = smith(m)?;
    let r = s.rank();
    Ok((r..m.rows).map(|i| s.u.row(i).to_vec()).collect())
}

/// A rank-2 sublattice of Z⁴, stored as the two nonzero rows of its
/// Hermite normal form.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[Vec4; 2]", try_from = "[Vec4; 2]")]
pub struct Plane {
    basis: [Vec4; 2],
}

impl Plane {
    pub fn new(u: Vec4, v: Vec4) -> Result<Self> {
        let h = hnf(&IntMatrix::from_rows(&[u, v])?)?;
        if h.row(1).iter().all(|&x| x == 0) {
            return Err(Error::DegeneratePlane);
        }
        Ok(Plane { basis: [h.row4(0), h.row4(1)] })
    }

    pub fn basis(&self) -> [Vec4; 2] {
        self.basis
    }

    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.basis).expect("2x4")
    }

    /// True when the plane is saturated: `span_Q(P) ∩ Z⁴ = P`.
    pub fn is_primitive(&self) -> Result<bool> {
        Ok(snf_diagonal(&self.matrix())? == [1, 1])
    }

    pub fn contains(&self, x: &Vec4) -> Result<bool> {
        let [u, v] = self.basis;
        let m = IntMatrix::from_rows(&[u, v, *x])?;
        if m.rank()? != 2 {
            return Ok(false);
        }
        // same rank; membership iff adding x does not change the lattice
        let h = hnf(&m)?;
        Ok([h.row4(0), h.row4(1)] == self.basis)
    }

    /// Stacks both bases into a 4×4 matrix (rows `p.u, p.v, q.u, q.v`).
    pub fn stack(&self, other: &Plane) -> IntMatrix {
        let [a, b] = self.basis;
        let [c, d] = other.basis;
        IntMatrix::from_rows(&[a, b, c, d]).expect("4x4")
    }

    pub fn is_transverse_to(&self, other: &Plane) -> Result<bool> {
        Ok(self.stack(other).det()? != 0)
    }
}

impl From<Plane> for [Vec4; 2] {
    fn from(p: Plane) -> Self {
        p.basis
    }
}

impl TryFrom<[Vec4; 2]> for Plane {
    type Error = Error;

    fn try_from([u, v]: [Vec4; 2]) -> Result<Self> {
        Plane::new(u, v)
    }
}

impl fmt::Debug for Plane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{:?}, {:?}>", self.basis[0], self.basis[1])
    }
}

fn reduce_mod_one(x: &RatVec4) -> RatVec4 {
    x.map(|c| c.fract())
}

/// A point of R⁴/Z⁴ with rational coordinates in `[0, 1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "RatVec4", from = "RatVec4")]
pub struct TorusPoint {
    coords: RatVec4,
}

impl TorusPoint {
    pub fn new(coords: RatVec4) -> Self {
        TorusPoint { coords: reduce_mod_one(&coords) }
    }

    pub fn origin() -> Self {
        TorusPoint { coords: [Rational::ZERO; 4] }
    }

    pub fn coords(&self) -> &RatVec4 {
        &self.coords
    }
}

impl From<TorusPoint> for RatVec4 {
    fn from(p: TorusPoint) -> Self {
        p.coords
    }
}

impl From<RatVec4> for TorusPoint {
    fn from(c: RatVec4) -> Self {
        TorusPoint::new(c)
    }
}

impl fmt::Display for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.coords;
        write!(f, "({a}, {b}, {c}, {d})")
    }
}

impl fmt::Debug for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The real subtorus `offset + span_R(plane)` of R⁴/Z⁴.
///
/// The plane must be primitive: it is the first homology of the embedded
/// subtorus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSubtorus")]
pub struct TranslatedSubtorus {
    plane: Plane,
    offset: RatVec4,
}

#[derive(Deserialize)]
struct RawSubtorus {
    plane: Plane,
    offset: RatVec4,
}

impl TryFrom<RawSubtorus> for TranslatedSubtorus {
    type Error = Error;

    fn try_from(raw: RawSubtorus) -> Result<Self> {
        TranslatedSubtorus::new(raw.plane, raw.offset)
    }
}

impl TranslatedSubtorus {
    pub fn new(plane: Plane, offset: RatVec4) -> Result<Self> {
        if !plane.is_primitive()? {
            return Err(Error::NotPrimitive);
        }
        Ok(TranslatedSubtorus { plane, offset: reduce_mod_one(&offset) })
    }

    pub fn through_origin(plane: Plane) -> Result<Self> {
        TranslatedSubtorus::new(plane, [Rational::ZERO; 4])
    }

    pub fn plane(&self) -> &Plane {
        &self.plane
    }

    pub fn offset(&self) -> &RatVec4 {
        &self.offset
    }

    /// Whether two subtori with the same plane are the same subset.
    pub fn coincides_with(&self, other: &TranslatedSubtorus) -> Result<bool> {
        if self.plane != other.plane {
            return Ok(false);
        }
        // δ ∈ span_R(P) + Z⁴  iff  the last two coordinates of δ·V are integral,
        // where U·P·V = [I | 0].
        let s = smith(&self.plane.matrix())?;
        let delta = sub_rat(&other.offset, &self.offset)?;
        for j in 2..4 {
            let mut acc = Rational::ZERO;
            for (i, d) in delta.iter().enumerate() {
                acc = acc.checked_add(d.checked_mul_int(s.v[(i, j)])?)?;
            }
            if !acc.is_integer() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn contains(&self, point: &TorusPoint) -> Result<bool> {
        let probe = TranslatedSubtorus { plane: self.plane, offset: *point.coords() };
        self.coincides_with(&probe)
    }
}

fn sub_rat(a: &RatVec4, b: &RatVec4) -> Result<RatVec4> {
    let mut out = [Rational::ZERO; 4];
    for i in 0..4 {
        out[i] = a[i].checked_sub(b[i])?;
    }
    Ok(out)
}

/// `|det|` of the stacked bases: the intersection number of the two
/// subtori through the origin, equal to the index `[Z⁴ : P + Q]`.
pub fn transverse_index(p: &Plane, q: &Plane) -> Result<i64> {
    match abs(p.stack(q).det()?)? {
        0 => Err(Error::NotTransverse),
        d => Ok(d),
    }
}

/// All points of `a ∩ b`, sorted and duplicate-free.
///
/// Solves `offset_a + s·P ≡ offset_b + t·Q (mod Z⁴)` through the Smith form
/// of the 4×4 matrix whose columns are the four basis vectors.
pub fn intersection_points(
    a: &TranslatedSubtorus,
    b: &TranslatedSubtorus,
) -> Result<Vec<TorusPoint>> {
    transverse_index(&a.plane, &b.plane)?;
    let m = a.plane.stack(&b.plane).transpose();
    let s = smith(&m)?;
    let delta = sub_rat(&b.offset, &a.offset)?;

    // rhs = U δ
    let mut rhs = [Rational::ZERO; 4];
    for (i, r) in rhs.iter_mut().enumerate() {
        for (k, d) in delta.iter().enumerate() {
            *r = r.checked_add(d.checked_mul_int(s.u[(i, k)])?)?;
        }
    }
    let diag = s.diagonal();

    let mut points = BTreeSet::new();
    let mut ks = [0i64; 4];
    loop {
        // w_i = (rhs_i + k_i) / d_i, y = V w
        let mut w = [Rational::ZERO; 4];
        for i in 0..4 {
            w[i] = rhs[i]
                .checked_add(Rational::integer(ks[i]))?
                .checked_mul(Rational::new(1, diag[i])?)?;
        }
        let mut y = [Rational::ZERO; 4];
        for (r, yr) in y.iter_mut().enumerate() {
            for (c, wc) in w.iter().enumerate() {
                *yr = yr.checked_add(wc.checked_mul_int(s.v[(r, c)])?)?;
            }
        }
        let [u, v] = a.plane.basis();
        let mut x = a.offset;
        for i in 0..4 {
            x[i] = x[i]
                .checked_add(y[0].checked_mul_int(u[i])?)?
                .checked_add(y[1].checked_mul_int(v[i])?)?;
        }
        points.insert(TorusPoint::new(x));

        // odometer over k_i in 0..d_i
        let mut i = 0;
        while i < 4 {
            ks[i] += 1;
            if ks[i] < diag[i] {
                break;
            }
            ks[i] = 0;
            i += 1;
        }
        if i == 4 {
            break;
        }
    }
    Ok(points.into_iter().collect())
}

/// Basis (HNF rows) of `{x ∈ Z⁴ : φ·x ≡ 0 (mod n)}`.
pub fn kernel_lattice(phi: &Vec4, n: i64) -> Result<IntMatrix> {
    if n < 2 {
        return Err(Error::BadModulus(n));
    }
    let mut column = phi.map(|c| c.mod_floor(&n)).to_vec();
    column.push(neg(n)?);
    let m = IntMatrix::new(5, 1, column)?;
    let rows: Vec<Vec<i64>> = left_kernel(&m)?.into_iter().map(|y| y[..4].to_vec()).collect();
    hnf(&IntMatrix::from_rows(&rows)?)
}

/// `|det|` of a full-rank 4×4 basis: the index of its lattice in Z⁴.
pub fn lattice_index(k: &IntMatrix) -> Result<i64> {
    match abs(k.det()?)? {
        0 => Err(Error::NotFullRank),
        d => Ok(d),
    }
}

/// `K ∩ P` for a full-rank lattice `K` (rows of `k`) and a plane `P`.
pub fn lattice_intersection(k: &IntMatrix, p: &Plane) -> Result<Plane> {
    if k.rows() != 4 || k.cols() != 4 {
        return Err(Error::Shape("lattice basis must be 4x4".into()));
    }
    let det = k.det()?;
    if det == 0 {
        return Err(Error::NotFullRank);
    }
    // x ∈ K  iff  x·adj(K) ≡ 0 (mod det)
    let adj = k.adjugate()?;
    let w = p.matrix().checked_mul(&adj)?;
    let d = abs(det)?;
    let mut rows = w.row_vectors();
    for i in 0..4 {
        let mut r = vec![0; 4];
        r[i] = d;
        rows.push(r);
    }
    let kernel = left_kernel(&IntMatrix::from_rows(&rows)?)?;
    let [u, v] = p.basis();
    let vectors: Vec<Vec4> = kernel
        .iter()
        .map(|y| {
            let mut x = [0i64; 4];
            for i in 0..4 {
                x[i] = add(mul(y[0], u[i])?, mul(y[1], v[i])?)?;
            }
            Ok(x)
        })
        .collect::<Result<_>>()?;
    match vectors.as_slice() {
        [a, b] => Plane::new(*a, *b),
        _ => Err(Error::Verification(format!(
            "K ∩ P has {} generators, expected 2",
            vectors.len()
        ))),
    }
}

/// Coordinates identifying a full-rank sublattice `K ⊂ Z⁴` with Z⁴.
///
/// `from_standard(c) = c·B` and `to_standard(x) = x·B⁻¹` where `B` is the
/// HNF basis of `K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rebase {
    basis: IntMatrix,
    adjugate: IntMatrix,
    det: i64,
}

pub fn rebase(k: &IntMatrix) -> Result<Rebase> {
    if k.rows() != 4 || k.cols() != 4 {
        return Err(Error::Shape("lattice basis must be 4x4".into()));
    }
    let basis = hnf(k)?;
    let det = basis.det()?;
    if det == 0 {
        return Err(Error::NotFullRank);
    }
    let adjugate = basis.adjugate()?;
    Ok(Rebase { basis, adjugate, det })
}

impl Rebase {
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn index(&self) -> i64 {
        self.det.abs()
    }

    pub fn from_standard(&self, c: &Vec4) -> Result<Vec4> {
        let x = self.basis.left_apply(c)?;
        Ok(x.try_into().expect("4 columns"))
    }

    pub fn to_standard(&self, x: &Vec4) -> Result<Vec4> {
        let y = self.adjugate.left_apply(x)?;
        let mut out = [0i64; 4];
        for (o, yi) in out.iter_mut().zip(y) {
            if yi % self.det != 0 {
                return Err(Error::NotInLattice);
            }
            *o = yi / self.det;
        }
        Ok(out)
    }

    pub fn to_standard_rational(&self, x: &RatVec4) -> Result<RatVec4> {
        let inv_det = Rational::new(1, self.det)?;
        let mut out = [Rational::ZERO; 4];
        for (j, o) in out.iter_mut().enumerate() {
            for (i, xi) in x.iter().enumerate() {
                *o = o.checked_add(xi.checked_mul_int(self.adjugate[(i, j)])?)?;
            }
            *o = o.checked_mul(inv_det)?;
        }
        Ok(out)
    }

    pub fn plane_to_standard(&self, p: &Plane) -> Result<Plane> {
        let [u, v] = p.basis();
        Plane::new(self.to_standard(&u)?, self.to_standard(&v)?)
    }
}
