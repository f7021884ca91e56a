//! Exact rational linear algebra: square matrices, incremental reduced row
//! echelon forms, kernels, linear solves and matrix subspaces.
//!
//! Everything here is exact. There are no tolerances.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses "p/q" or "p".
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Q::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

pub fn format_q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Incrementally maintained reduced row echelon form of a set of vectors
/// in `Q^width`. Rows are kept sorted by pivot column, each pivot entry is 1
/// and every pivot column is zero in all other rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    width: usize,
    rows: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Self { width, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_rows<I: IntoIterator<Item = Vec<Q>>>(width: usize, rows: I) -> Self {
        let mut e = Self::new(width);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Q>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtracts the row-space component that is visible on the pivots.
    /// Afterwards `v` vanishes on every pivot column.
    pub fn reduce(&self, v: &mut [Q]) {
        debug_assert_eq!(v.len(), self.width);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for j in p..self.width {
                if !row[j].is_zero() {
                    v[j] -= &c * &row[j];
                }
            }
        }
    }

    /// Adds `v` to the spanning set. Returns true if the rank grew.
    pub fn insert(&mut self, mut v: Vec<Q>) -> bool {
        if self.rows.len() == self.width {
            return false;
        }
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut().skip(p) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for row in &mut self.rows {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for j in p..self.width {
                if !v[j].is_zero() {
                    row[j] -= &c * &v[j];
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Zero::is_zero)
    }

    /// Coefficients of `v` with respect to the echelon rows, if `v` lies in
    /// the row space.
    pub fn coordinates(&self, v: &[Q]) -> Option<Vec<Q>> {
        let coords: Vec<Q> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Zero::is_zero).then_some(coords)
    }

    /// Basis of `{x : row · x = 0 for every row}`.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let mut is_pivot = vec![false; self.width];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.width)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = vec![Q::zero(); self.width];
                x[f] = Q::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if !row[f].is_zero() {
                        x[p] = -row[f].clone();
                    }
                }
                x
            })
            .collect()
    }
}

/// Kernel of the linear map `Q^k -> Q^m` whose `i`-th column is `columns[i]`.
pub fn kernel_of_columns(columns: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let k = columns.len();
    if k == 0 {
        return Vec::new();
    }
    let m = columns[0].len();
    let mut ech = Echelon::new(k);
    for r in 0..m {
        if columns.iter().all(|c| c[r].is_zero()) {
            continue;
        }
        ech.insert(columns.iter().map(|c| c[r].clone()).collect());
        if ech.rank() == k {
            break;
        }
    }
    ech.nullspace()
}

/// One solution of `sum_i x_i columns[i] = target`, or `None` when the
/// system is inconsistent. Free variables are set to zero.
pub fn solve_columns(columns: &[Vec<Q>], target: &[Q]) -> Option<Vec<Q>> {
    let k = columns.len();
    let mut ech = Echelon::new(k + 1);
    for r in 0..target.len() {
        if target[r].is_zero() && columns.iter().all(|c| c[r].is_zero()) {
            continue;
        }
        let mut row: Vec<Q> = columns.iter().map(|c| c[r].clone()).collect();
        row.push(target[r].clone());
        ech.insert(row);
    }
    if ech.pivots().last() == Some(&k) {
        return None;
    }
    let mut x = vec![Q::zero(); k];
    for (row, &p) in ech.rows().iter().zip(ech.pivots()) {
        x[p] = row[k].clone();
    }
    Some(x)
}

/// Square matrix with exact rational entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    n: usize,
    data: Vec<Q>,
}

impl RationalMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![Q::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    /// Matrix unit `E_{ij}` (zero-based indices).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n);
        m[(i, j)] = Q::one();
        m
    }

    pub fn diag(entries: &[Q]) -> Self {
        let mut m = Self::zeros(entries.len());
        for (i, x) in entries.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn from_flat(n: usize, data: Vec<Q>) -> Self {
        assert_eq!(data.len(), n * n, "flat data has wrong length");
        Self { n, data }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), n, "matrix must be square");
            for (j, &x) in r.iter().enumerate() {
                m[(i, j)] = q(x);
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn as_flat(&self) -> &[Q] {
        &self.data
    }

    pub fn into_flat(self) -> Vec<Q> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Self { n: self.n, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Self { n: self.n, data }
    }

    pub fn scale(&self, c: &Q) -> Self {
        let data = self.data.iter().map(|a| a * c).collect();
        Self { n: self.n, data }
    }

    pub fn add_scaled(&mut self, c: &Q, other: &Self) {
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.data[k * n + j];
                    if !b.is_zero() {
                        out.data[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// The commutator `[self, other] = self·other − other·self`.
    pub fn bracket(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j].clone();
            }
        }
        out
    }

    pub fn trace(&self) -> Q {
        (0..self.n).map(|i| self.data[i * self.n + i].clone()).sum()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::identity(self.n);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn rank(&self) -> usize {
        let n = self.n;
        let ech = Echelon::from_rows(n, (0..n).map(|i| self.data[i * n..(i + 1) * n].to_vec()));
        ech.rank()
    }

    /// `tr(self · other)` without forming the product.
    pub fn trace_product(&self, other: &Self) -> Q {
        let n = self.n;
        let mut t = Q::zero();
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                let b = &other.data[k * n + i];
                if !a.is_zero() && !b.is_zero() {
                    t += a * b;
                }
            }
        }
        t
    }

    pub fn kronecker(&self, other: &Self) -> Self {
        let (a, b) = (self.n, other.n);
        let mut out = Self::zeros(a * b);
        for i in 0..a {
            for j in 0..a {
                let x = &self[(i, j)];
                if x.is_zero() {
                    continue;
                }
                for k in 0..b {
                    for l in 0..b {
                        out[(i * b + k, j * b + l)] = x * &other[(k, l)];
                    }
                }
            }
        }
        out
    }

    /// Embeds `self` into an `n × n` matrix, sending local index `i` to
    /// `positions[i]`.
    pub fn embed(&self, n: usize, positions: &[usize]) -> Self {
        assert_eq!(positions.len(), self.n);
        let mut out = Self::zeros(n);
        for (i, &pi) in positions.iter().enumerate() {
            for (j, &pj) in positions.iter().enumerate() {
                out[(pi, pj)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Gauss–Jordan inverse.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let mut ech = Echelon::new(2 * n);
        for i in 0..n {
            let mut row = self.data[i * n..(i + 1) * n].to_vec();
            row.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            ech.insert(row);
        }
        if ech.rank() < n || ech.pivots()[n - 1] != n - 1 {
            return None;
        }
        let mut out = Self::zeros(n);
        for (i, row) in ech.rows().iter().enumerate() {
            for j in 0..n {
                out[(i, j)] = row[n + j].clone();
            }
        }
        Some(out)
    }

    /// Gershgorin-type bound on the absolute value of every eigenvalue.
    pub fn spectral_bound(&self) -> Q {
        let n = self.n;
        (0..n)
            .map(|i| self.data[i * n..(i + 1) * n].iter().map(|x| x.abs()).sum::<Q>())
            .max()
            .unwrap_or_else(Q::zero)
    }

    /// Partition given by the Jordan type of a nilpotent matrix, or `None`
    /// if the matrix is not nilpotent.
    pub fn jordan_type(&self) -> Option<Vec<usize>> {
        let n = self.n;
        let mut ranks = vec![n];
        let mut p = self.clone();
        for _ in 0..n {
            let r = p.rank();
            ranks.push(r);
            if r == 0 {
                break;
            }
            p = p.mul(self);
        }
        if *ranks.last().unwrap() != 0 {
            return None;
        }
        // number of blocks of size >= k is rank(A^{k-1}) - rank(A^k)
        let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
        let mut parts = Vec::new();
        for k in 0..at_least.len() {
            let next = at_least.get(k + 1).copied().unwrap_or(0);
            for _ in 0..(at_least[k] - next) {
                parts.push(k + 1);
            }
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Some(parts)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.n as u32).is_zero()
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Q;
    fn index(&self, (i, j): (usize, usize)) -> &Q {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        &mut self.data[i * self.n + j]
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for RationalMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| format_q(&self[(i, j)])).collect())
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows: Vec<Vec<String>> = Vec::deserialize(d)?;
        let n = rows.len();
        let mut m = RationalMatrix::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(D::Error::custom("matrix must be square"));
            }
            for (j, s) in row.iter().enumerate() {
                m[(i, j)] = parse_q(s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}")))?;
            }
        }
        Ok(m)
    }
}

/// A linear subspace of `gl_n`, stored as a reduced echelon basis of the
/// flattened matrices. The echelon form is canonical, so equality of two
/// subspaces is equality of the stored forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    n: usize,
    ech: Echelon,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Self { n, ech: Echelon::new(n * n) }
    }

    pub fn span<'a, I>(n: usize, mats: I) -> Self
    where
        I: IntoIterator<Item = &'a RationalMatrix>,
    {
        let mut s = Self::zero(n);
        for m in mats {
            s.insert(m);
        }
        s
    }

    pub fn from_vectors<I: IntoIterator<Item = Vec<Q>>>(n: usize, vecs: I) -> Self {
        Self { n, ech: Echelon::from_rows(n * n, vecs) }
    }

    pub fn insert(&mut self, m: &RationalMatrix) -> bool {
        assert_eq!(m.size(), self.n);
        self.ech.insert(m.as_flat().to_vec())
    }

    pub fn matrix_size(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.ech.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> Vec<RationalMatrix> {
        self.ech.rows().iter().map(|r| RationalMatrix::from_flat(self.n, r.clone())).collect()
    }

    pub fn contains(&self, m: &RationalMatrix) -> bool {
        self.ech.contains(m.as_flat())
    }

    /// Coordinates of `m` in the canonical basis returned by [`basis`](Self::basis).
    pub fn coordinates(&self, m: &RationalMatrix) -> Option<Vec<Q>> {
        self.ech.coordinates(m.as_flat())
    }

    pub fn combination(&self, coeffs: &[Q]) -> RationalMatrix {
        assert_eq!(coeffs.len(), self.dim());
        let mut out = vec![Q::zero(); self.n * self.n];
        for (c, row) in coeffs.iter().zip(self.ech.rows()) {
            if c.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o += c * r;
                }
            }
        }
        RationalMatrix::from_flat(self.n, out)
    }

    /// Component of `m` left over after removing what the basis sees on its
    /// pivot positions; zero exactly when `m` is in the subspace.
    pub fn residual(&self, m: &RationalMatrix) -> Vec<Q> {
        let mut v = m.as_flat().to_vec();
        self.ech.reduce(&mut v);
        v
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ech.rows().iter().all(|r| other.ech.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut out = self.clone();
        for r in other.ech.rows() {
            out.ech.insert(r.clone());
        }
        out
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.n);
        }
        let cols: Vec<Vec<Q>> = self.basis().iter().map(|b| other.residual(b)).collect();
        let kernel = kernel_of_columns(&cols);
        Subspace::span(self.n, kernel.iter().map(|c| self.combination(c)).collect::<Vec<_>>().iter())
    }

    /// Image of the subspace under a linear map on matrices.
    pub fn map<F: Fn(&RationalMatrix) -> RationalMatrix>(&self, f: F) -> Subspace {
        let images: Vec<RationalMatrix> = self.basis().iter().map(f).collect();
        Subspace::span(self.n, images.iter())
    }
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.basis().serialize(s)
    }
}

/// Polynomial with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(pub Vec<Q>);

impl Poly {
    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.iter().rposition(|c| !c.is_zero())
    }

    pub fn derivative(&self) -> Poly {
        Poly(self.0.iter().enumerate().skip(1).map(|(i, c)| c * q(i as i64)).collect()).trim()
    }

    fn rem(&self, d: &Poly) -> Poly {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.0[dd].clone();
        let mut r = self.clone().trim();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = &r.0[rd] / &lead;
            for i in 0..=dd {
                let t = &c * &d.0[i];
                r.0[rd - dd + i] -= t;
            }
            r = r.trim();
        }
        r
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone().trim();
        let mut b = other.clone().trim();
        while b.degree().is_some() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if let Some(d) = a.degree() {
            let lead = a.0[d].clone();
            a.0.iter_mut().for_each(|c| *c /= &lead);
        }
        a
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }
}

/// Dense square matrix acting on column vectors, given row-major as `rows`.
fn apply(rows: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    rows.iter()
        .map(|r| {
            r.iter().zip(v).filter(|(a, b)| !a.is_zero() && !b.is_zero()).map(|(a, b)| a * b).sum()
        })
        .collect()
}

/// Minimal polynomial of `v` under the matrix `a` (monic up to scaling).
pub fn local_minimal_polynomial(a: &[Vec<Q>], v: &[Q]) -> Poly {
    let d = v.len();
    let width = 2 * d + 1;
    let mut ech = Echelon::new(width);
    let mut w = v.to_vec();
    for k in 0..=d {
        let mut aug = w.clone();
        aug.extend((0..=d).map(|i| if i == k { Q::one() } else { Q::zero() }));
        let mut probe = aug.clone();
        ech.reduce(&mut probe);
        if probe[..d].iter().all(Zero::is_zero) {
            return Poly(probe[d..d + k + 1].to_vec()).trim();
        }
        ech.insert(aug);
        w = apply(a, &w);
    }
    unreachable!("Krylov sequence longer than the dimension")
}

/// A matrix is diagonalizable over the algebraic closure iff its minimal
/// polynomial is squarefree, iff every local minimal polynomial of a basis
/// vector is squarefree.
pub fn is_diagonalizable(a: &[Vec<Q>]) -> bool {
    let d = a.len();
    (0..d).all(|j| {
        let e: Vec<Q> = (0..d).map(|i| if i == j { Q::one() } else { Q::zero() }).collect();
        local_minimal_polynomial(a, &e).is_squarefree()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn echelon_rank_and_nullspace() {
        let e = Echelon::from_rows(3, vec![v(&[1, 2, 3]), v(&[2, 4, 6]), v(&[0, 1, 1])]);
        assert_eq!(e.rank(), 2);
        let ns = e.nullspace();
        assert_eq!(ns.len(), 1);
        for r in e.rows() {
            let dot: Q = r.iter().zip(&ns[0]).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn solve_and_inconsistent() {
        let cols = vec![v(&[1, 0]), v(&[1, 1])];
        let x = solve_columns(&cols, &v(&[3, 1])).unwrap();
        assert_eq!(x, v(&[2, 1]));
        let cols = vec![v(&[1, 1])];
        assert!(solve_columns(&cols, &v(&[1, 0])).is_none());
    }

    #[test]
    fn jordan_type_of_blocks() {
        let mut m = RationalMatrix::zeros(5);
        m[(0, 1)] = q(1);
        m[(1, 2)] = q(1);
        m[(3, 4)] = q(1);
        assert_eq!(m.jordan_type(), Some(vec![3, 2]));
        assert_eq!(RationalMatrix::identity(2).jordan_type(), None);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = RationalMatrix::from_i64_rows(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), RationalMatrix::identity(2));
        assert!(RationalMatrix::from_i64_rows(&[&[1, 1], &[1, 1]]).inverse().is_none());
    }

    #[test]
    fn subspace_intersection() {
        let a = Subspace::span(2, [RationalMatrix::unit(2, 0, 0), RationalMatrix::unit(2, 0, 1)].iter());
        let b = Subspace::span(2, [RationalMatrix::unit(2, 0, 1), RationalMatrix::unit(2, 1, 1)].iter());
        let c = a.intersection(&b);
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&RationalMatrix::unit(2, 0, 1)));
    }

    #[test]
    fn squarefree_minimal_polynomials() {
        let diag = vec![v(&[1, 0]), v(&[0, 2])];
        assert!(is_diagonalizable(&diag));
        let jordan = vec![v(&[1, 1]), v(&[0, 1])];
        assert!(!is_diagonalizable(&jordan));
        // rotation: x^2 + 1, squarefree over Q-bar
        let rot = vec![v(&[0, -1]), v(&[1, 0])];
        assert!(is_diagonalizable(&rot));
    }

    #[test]
    fn matrix_json_uses_fraction_strings() {
        let m = RationalMatrix::diag(&[qr(1, 2), q(-3)]);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"[["1/2","0/1"],["0/1","-3/1"]]"#);
        let back: RationalMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
    }
}
