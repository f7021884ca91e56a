//! Matrix models of `sl_N`, `so_N` and `sp_N` over the rationals, with
//! centralizers, sl2-triples, gradings, e-limits and subalgebra diagnostics.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::linalg::{is_diagonalizable, kernel_of_columns, q, solve_columns, RationalMatrix, Subspace, Q};
use crate::partition::{validate_partition, ClassicalFamily, Family, Partition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("element is not in the algebra")]
    ElementNotInAlgebra,
    #[error("element is not nilpotent")]
    NotNilpotent,
    #[error("invalid partition {0} for this algebra")]
    InvalidPartition(Partition),
    #[error("spectrum is not contained in a half-integer coset")]
    NonHalfIntegerSpectrum,
    #[error("subspace is not closed under the bracket")]
    NotClosedUnderBracket,
    #[error("element is not in the subalgebra")]
    NotInSubalgebra,
    #[error("subalgebra is not reductive")]
    NotReductive,
    #[error("no sl2-triple through this element inside the given subalgebra")]
    NoTriple,
    #[error("elements do not commute")]
    NotCommuting,
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
}

pub type Result<T> = std::result::Result<T, LieError>;

/// Antidiagonal form on `Q^n`: symmetric with all entries 1, or skew with
/// `J_{i,n+1-i} = 1` for `i ≤ n/2` and `-1` otherwise.
pub fn antidiagonal_form(n: usize, skew: bool) -> RationalMatrix {
    let mut j = RationalMatrix::zeros(n);
    for i in 0..n {
        j[(i, n - 1 - i)] = if skew && i >= n / 2 { q(-1) } else { q(1) };
    }
    j
}

/// A classical Lie algebra realized inside `gl_n`.
#[derive(Clone, Debug)]
pub struct LieAlgebraModel {
    family: ClassicalFamily,
    form: Option<RationalMatrix>,
    algebra: Subspace,
    seed: u64,
}

pub const DEFAULT_SEED: u64 = 0x5eed_2025;

impl LieAlgebraModel {
    pub fn new(family: ClassicalFamily) -> Self {
        let n = family.size;
        let mut mats = Vec::new();
        let form = match family.family {
            Family::SL => {
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            mats.push(RationalMatrix::unit(n, i, j));
                        }
                    }
                }
                for i in 1..n {
                    mats.push(RationalMatrix::unit(n, i - 1, i - 1).sub(&RationalMatrix::unit(n, i, i)));
                }
                None
            }
            Family::SO | Family::SP => {
                let skew = family.family == Family::SP;
                let j = antidiagonal_form(n, skew);
                let jinv = j.inverse().expect("form is nondegenerate");
                for a in 0..n {
                    for b in a..n {
                        if !skew && a == b {
                            continue;
                        }
                        // X = J^{-1} S with S antisymmetric (so) or symmetric (sp)
                        let mut s = RationalMatrix::unit(n, a, b);
                        let t = RationalMatrix::unit(n, b, a);
                        s = if skew { if a == b { s } else { s.add(&t) } } else { s.sub(&t) };
                        mats.push(jinv.mul(&s));
                    }
                }
                Some(j)
            }
        };
        let algebra = Subspace::span(n, mats.iter());
        debug_assert_eq!(algebra.dim(), family.dim());
        Self { family, form, algebra, seed: DEFAULT_SEED }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn family(&self) -> ClassicalFamily {
        self.family
    }

    pub fn size(&self) -> usize {
        self.family.size
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn rank(&self) -> usize {
        self.family.rank()
    }

    pub fn form(&self) -> Option<&RationalMatrix> {
        self.form.as_ref()
    }

    pub fn algebra(&self) -> &Subspace {
        &self.algebra
    }

    pub fn basis(&self) -> Vec<RationalMatrix> {
        self.algebra.basis()
    }

    pub fn contains(&self, x: &RationalMatrix) -> bool {
        x.size() == self.size() && self.algebra.contains(x)
    }

    fn check_in(&self, xs: &[&RationalMatrix]) -> Result<()> {
        if xs.iter().all(|x| self.contains(x)) {
            Ok(())
        } else {
            Err(LieError::ElementNotInAlgebra)
        }
    }

    pub fn zero(&self) -> Subspace {
        Subspace::zero(self.size())
    }

    pub fn span(&self, xs: &[RationalMatrix]) -> Subspace {
        Subspace::span(self.size(), xs.iter())
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }

    /// Elements of `space` commuting with every element of `elements`.
    pub fn centralizer_in(&self, space: &Subspace, elements: &[RationalMatrix]) -> Subspace {
        if elements.iter().all(RationalMatrix::is_zero) || space.is_zero() {
            return space.clone();
        }
        let basis = space.basis();
        let cols: Vec<Vec<Q>> = basis
            .iter()
            .map(|b| elements.iter().flat_map(|s| b.bracket(s).into_flat()).collect())
            .collect();
        let kernel = kernel_of_columns(&cols);
        let mats: Vec<RationalMatrix> = kernel.iter().map(|c| space.combination_of(&basis, c)).collect();
        Subspace::span(self.size(), mats.iter())
    }

    /// `z_𝔤(elements)`.
    pub fn centralizer(&self, elements: &[RationalMatrix]) -> Result<Subspace> {
        self.check_in(&elements.iter().collect::<Vec<_>>())?;
        Ok(self.centralizer_in(&self.algebra, elements))
    }

    /// `z_𝔤(M)` for a subspace `M`.
    pub fn centralizer_of_subspace(&self, m: &Subspace) -> Result<Subspace> {
        self.centralizer(&m.basis())
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let b = s.basis();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                if !s.contains(&b[i].bracket(&b[j])) {
                    return false;
                }
            }
        }
        true
    }

    fn check_subalgebra(&self, s: &Subspace) -> Result<()> {
        if self.is_subalgebra(s) {
            Ok(())
        } else {
            Err(LieError::NotClosedUnderBracket)
        }
    }

    /// `[A, B]` as a subspace.
    pub fn bracket_spaces(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let (ab, bb) = (a.basis(), b.basis());
        let mut out = self.zero();
        for x in &ab {
            for y in &bb {
                out.insert(&x.bracket(y));
            }
        }
        out
    }

    pub fn derived(&self, a: &Subspace) -> Subspace {
        self.bracket_spaces(a, a)
    }

    pub fn center(&self, a: &Subspace) -> Subspace {
        self.centralizer_in(a, &a.basis())
    }

    /// Gram matrix of the trace form `tr(xy)` of the natural representation
    /// on a basis of `a`, and its rank.
    fn trace_form_rank(&self, a: &Subspace) -> usize {
        let b = a.basis();
        let k = b.len();
        let cols: Vec<Vec<Q>> = (0..k).map(|i| (0..k).map(|j| b[i].trace_product(&b[j])).collect()).collect();
        k - kernel_of_columns(&cols).len()
    }

    /// Reductive in `gl_n`: the trace form of the natural representation is
    /// nondegenerate on `a`.
    pub fn is_reductive(&self, a: &Subspace) -> Result<bool> {
        self.check_subalgebra(a)?;
        Ok(self.trace_form_rank(a) == a.dim())
    }

    /// Semisimple: reductive in `gl_n`, perfect and with trivial center.
    pub fn is_semisimple(&self, a: &Subspace) -> Result<bool> {
        self.check_subalgebra(a)?;
        if a.is_zero() {
            return Ok(true);
        }
        Ok(self.trace_form_rank(a) == a.dim() && self.center(a).is_zero() && self.derived(a) == *a)
    }

    fn random_element(&self, a: &Subspace, basis: &[RationalMatrix], rng: &mut ChaCha8Rng) -> RationalMatrix {
        let coeffs: Vec<Q> = (0..a.dim())
            .map(|_| {
                let mut c = 0i64;
                while c == 0 {
                    c = rng.gen_range(-4..=4);
                }
                q(c)
            })
            .collect();
        a.combination_of(basis, &coeffs)
    }

    /// Minimum of `dim z_𝔞(x)` over seeded pseudo-random `x ∈ 𝔞`: at least
    /// 8 samples, stopping once the minimum has held for the last 4.
    pub fn rank_of_subalgebra(&self, a: &Subspace) -> Result<usize> {
        self.check_subalgebra(a)?;
        if a.is_zero() {
            return Ok(0);
        }
        let basis = a.basis();
        let mut rng = self.rng(a.dim() as u64);
        let mut best = usize::MAX;
        let mut since = 0;
        for sample in 0..64 {
            let x = self.random_element(a, &basis, &mut rng);
            let d = self.centralizer_in(a, &[x]).dim();
            if d < best {
                best = d;
                since = 0;
            } else {
                since += 1;
            }
            if sample + 1 >= 8 && since >= 4 {
                break;
            }
        }
        Ok(best)
    }

    pub fn is_nilpotent(&self, x: &RationalMatrix) -> bool {
        x.is_nilpotent()
    }

    /// Every element of a basis of `s` is nilpotent.
    pub fn consists_of_nilpotents_on_basis(&self, s: &Subspace) -> bool {
        s.basis().iter().all(RationalMatrix::is_nilpotent)
    }

    /// Matrix of `ad x` restricted to an `ad x`-stable subspace, in the
    /// canonical basis of the subspace.
    pub fn ad_restricted(&self, x: &RationalMatrix, s: &Subspace) -> Option<Vec<Vec<Q>>> {
        let basis = s.basis();
        let d = basis.len();
        let mut rows = vec![vec![Q::zero(); d]; d];
        for (j, b) in basis.iter().enumerate() {
            let c = s.coordinates(&x.bracket(b))?;
            for i in 0..d {
                rows[i][j] = c[i].clone();
            }
        }
        Some(rows)
    }

    /// `ad x` acts semisimply on the stable subspace `s`.
    pub fn is_semisimple_on(&self, x: &RationalMatrix, s: &Subspace) -> bool {
        match self.ad_restricted(x, s) {
            Some(m) => is_diagonalizable(&m),
            None => false,
        }
    }

    /// A semisimple element of a classical algebra is a diagonalizable matrix.
    pub fn is_semisimple_element(&self, x: &RationalMatrix) -> bool {
        let n = x.size();
        let rows: Vec<Vec<Q>> = (0..n).map(|i| (0..n).map(|j| x[(i, j)].clone()).collect()).collect();
        is_diagonalizable(&rows)
    }

    /// Completes `e` to an sl2-triple inside the subalgebra `a`.
    pub fn jacobson_morozov_in(&self, a: &Subspace, e: &RationalMatrix) -> Result<Sl2Triple> {
        if !e.is_nilpotent() {
            return Err(LieError::NotNilpotent);
        }
        if !a.contains(e) {
            return Err(LieError::NotInSubalgebra);
        }
        if e.is_zero() {
            let z = RationalMatrix::zeros(self.size());
            return Ok(Sl2Triple { e: z.clone(), h: z.clone(), f: z });
        }
        let basis = a.basis();
        // [[e, x], e] = 2e
        let cols: Vec<Vec<Q>> = basis.iter().map(|b| e.bracket(b).bracket(e).into_flat()).collect();
        let target: Vec<Q> = e.scale(&q(2)).into_flat();
        let x = solve_columns(&cols, &target).ok_or(LieError::NoTriple)?;
        let h = e.bracket(&a.combination_of(&basis, &x));
        let f = self.complete_with_h(a, &basis, e, &h)?;
        Ok(Sl2Triple { e: e.clone(), h, f })
    }

    /// Finds `f ∈ a` with `[e,f] = h` and `[h,f] = -2f`.
    fn complete_with_h(&self, a: &Subspace, basis: &[RationalMatrix], e: &RationalMatrix, h: &RationalMatrix) -> Result<RationalMatrix> {
        let two = q(2);
        let cols: Vec<Vec<Q>> = basis
            .iter()
            .map(|b| {
                let mut v = e.bracket(b).into_flat();
                v.extend(h.bracket(b).add(&b.scale(&two)).into_flat());
                v
            })
            .collect();
        let mut target = h.as_flat().to_vec();
        target.extend(std::iter::repeat_n(Q::zero(), h.size() * h.size()));
        let c = solve_columns(&cols, &target).ok_or(LieError::NoTriple)?;
        Ok(a.combination_of(basis, &c))
    }

    pub fn jacobson_morozov(&self, e: &RationalMatrix) -> Result<Sl2Triple> {
        self.check_in(&[e])?;
        self.jacobson_morozov_in(&self.algebra, e)
    }

    /// Completes `(e, h)` to a triple when `h` is already a characteristic.
    pub fn triple_with_characteristic(&self, e: &RationalMatrix, h: &RationalMatrix) -> Result<Sl2Triple> {
        self.check_in(&[e, h])?;
        let basis = self.basis();
        let f = self.complete_with_h(&self.algebra, &basis, e, h)?;
        Ok(Sl2Triple { e: e.clone(), h: h.clone(), f })
    }

    /// `𝔤(k) = {x : [h, x] = k x}` for a diagonal `h`.
    fn diagonal_eigenspace(&self, h: &[Q], k: &Q) -> Subspace {
        let n = self.size();
        let coord: Vec<RationalMatrix> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| &(&h[i] - &h[j]) == k)
            .map(|(i, j)| RationalMatrix::unit(n, i, j))
            .collect();
        Subspace::span(n, coord.iter()).intersection(&self.algebra)
    }

    /// A nilpotent element with Jordan type `p`, together with an sl2-triple.
    /// The characteristic is the diagonal matrix of the weights of `p`; `e`
    /// is a pseudo-random element of the 2-eigenspace of `ad h`.
    pub fn triple_from_partition(&self, p: &Partition) -> Result<Sl2Triple> {
        if !validate_partition(self.family, p) {
            return Err(LieError::InvalidPartition(p.clone()));
        }
        let hdiag: Vec<Q> = p.weights().into_iter().map(q).collect();
        let h = RationalMatrix::diag(&hdiag);
        let g2 = self.diagonal_eigenspace(&hdiag, &q(2));
        let basis = g2.basis();
        let mut rng = self.rng(0x6e69_6c70 ^ p.size() as u64);
        for _ in 0..64 {
            let e = if basis.is_empty() {
                RationalMatrix::zeros(self.size())
            } else {
                self.random_element(&g2, &basis, &mut rng)
            };
            if e.jordan_type().as_deref() != Some(p.parts()) {
                continue;
            }
            if p.is_zero_orbit() {
                return Ok(Sl2Triple { e: e.clone(), h: e.clone(), f: e });
            }
            let triple = self.triple_with_characteristic(&e, &h)?;
            let dz = self.centralizer_in(&self.algebra, &[e]).dim();
            if dz != centralizer_dim_formula(self.family, p) {
                return Err(LieError::ConstructionFailed(format!("centralizer dimension {dz} for {p}")));
            }
            return Ok(triple);
        }
        Err(LieError::ConstructionFailed(format!("no element of type {p} found")))
    }

    pub fn nilpotent_from_partition(&self, p: &Partition) -> Result<RationalMatrix> {
        Ok(self.triple_from_partition(p)?.e)
    }

    /// `{x ∈ M : (ad e)^{i+1} x = 0}`.
    pub fn e_filtration(&self, e: &RationalMatrix, m: &Subspace, i: usize) -> Result<Subspace> {
        if !e.is_nilpotent() {
            return Err(LieError::NotNilpotent);
        }
        let basis = m.basis();
        let cols: Vec<Vec<Q>> = basis.iter().map(|b| ad_power(e, b, i + 1).into_flat()).collect();
        let kernel = kernel_of_columns(&cols);
        let mats: Vec<RationalMatrix> = kernel.iter().map(|c| m.combination_of(&basis, c)).collect();
        Ok(Subspace::span(self.size(), mats.iter()))
    }

    /// `lim_e M = Σ_i (ad e)^i M(i,*)`.
    pub fn e_limit(&self, e: &RationalMatrix, m: &Subspace) -> Result<Subspace> {
        if !e.is_nilpotent() {
            return Err(LieError::NotNilpotent);
        }
        let mut out = self.zero();
        for i in 0..2 * self.size() {
            let piece = self.e_filtration(e, m, i)?;
            for b in piece.basis() {
                out.insert(&ad_power(e, &b, i));
            }
            // (ad e)^{i+1} kills M, so later terms vanish
            if piece == *m {
                break;
            }
        }
        Ok(out)
    }

    /// `lim_𝐞 M = Σ_{i,j} (ad e1)^i (ad e2)^j M(i,j)` with
    /// `M(i,j) = M(i,*) ∩ M(*,j)`.
    pub fn double_limit(&self, e1: &RationalMatrix, e2: &RationalMatrix, m: &Subspace) -> Result<Subspace> {
        if !e1.is_nilpotent() || !e2.is_nilpotent() {
            return Err(LieError::NotNilpotent);
        }
        let top = 2 * self.size();
        let f1: Vec<Subspace> = (0..top).map(|i| self.e_filtration(e1, m, i)).collect::<Result<_>>()?;
        let f2: Vec<Subspace> = (0..top).map(|j| self.e_filtration(e2, m, j)).collect::<Result<_>>()?;
        let mut out = self.zero();
        for (i, a) in f1.iter().enumerate() {
            for (j, b) in f2.iter().enumerate() {
                for x in a.intersection(b).basis() {
                    out.insert(&ad_power(e1, &ad_power(e2, &x, j), i));
                }
            }
        }
        Ok(out)
    }

    /// `e` is regular in the reductive subalgebra `a`.
    pub fn is_regular_nilpotent_in(&self, a: &Subspace, e: &RationalMatrix) -> Result<bool> {
        if !a.contains(e) {
            return Err(LieError::NotInSubalgebra);
        }
        if !e.is_nilpotent() {
            return Err(LieError::NotNilpotent);
        }
        if !self.is_reductive(a)? {
            return Err(LieError::NotReductive);
        }
        Ok(self.centralizer_in(a, std::slice::from_ref(e)).dim() == self.rank_of_subalgebra(a)?)
    }

    /// `z_𝔞(e, h, f) ⊆ z(𝔞)` for a triple completed inside `a`.
    pub fn is_distinguished_in(&self, a: &Subspace, e: &RationalMatrix) -> Result<bool> {
        if !a.contains(e) {
            return Err(LieError::NotInSubalgebra);
        }
        if !self.is_reductive(a)? {
            return Err(LieError::NotReductive);
        }
        let t = self.jacobson_morozov_in(a, e)?;
        let k = self.centralizer_in(a, &[t.e, t.h, t.f]);
        Ok(k.is_subspace_of(&self.center(a)))
    }

    pub fn bigrading(&self, h1: &RationalMatrix, h2: &RationalMatrix) -> Result<BiGrading> {
        BiGrading::new(self, h1, h2)
    }
}

pub fn build_model(fam: ClassicalFamily) -> LieAlgebraModel {
    LieAlgebraModel::new(fam)
}

fn ad_power(e: &RationalMatrix, x: &RationalMatrix, k: usize) -> RationalMatrix {
    let mut y = x.clone();
    for _ in 0..k {
        if y.is_zero() {
            break;
        }
        y = e.bracket(&y);
    }
    y
}

/// Closed-form `dim z_𝔤(e)` for the orbit of partition `p`.
pub fn centralizer_dim_formula(fam: ClassicalFamily, p: &Partition) -> usize {
    let t = crate::partition::transpose(p);
    let sq: usize = t.parts().iter().map(|x| x * x).sum();
    let odd = p.parts().iter().filter(|&&d| d % 2 == 1).count();
    match fam.family {
        Family::SL => sq - 1,
        Family::SP => (sq + odd) / 2,
        Family::SO => (sq - odd) / 2,
    }
}

/// `check` the defining relations `[h_i, e_j] = δ_ij e_j`, `[e1,e2] = 0`,
/// `[h1,h2] = 0`.
pub fn check_quadruple(
    model: &LieAlgebraModel,
    e1: &RationalMatrix,
    e2: &RationalMatrix,
    h1: &RationalMatrix,
    h2: &RationalMatrix,
) -> bool {
    if ![e1, e2, h1, h2].iter().all(|x| model.contains(x)) {
        return false;
    }
    let z = |m: RationalMatrix| m.is_zero();
    z(e1.bracket(e2))
        && z(h1.bracket(h2))
        && h1.bracket(e1) == *e1
        && h2.bracket(e2) == *e2
        && z(h1.bracket(e2))
        && z(h2.bracket(e1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sl2Triple {
    pub e: RationalMatrix,
    pub h: RationalMatrix,
    pub f: RationalMatrix,
}

impl Sl2Triple {
    pub fn is_valid(&self) -> bool {
        let two = q(2);
        self.h.bracket(&self.e) == self.e.scale(&two)
            && self.h.bracket(&self.f) == self.f.scale(&(-two))
            && self.e.bracket(&self.f) == self.h
    }

    pub fn elements(&self) -> [RationalMatrix; 3] {
        [self.e.clone(), self.h.clone(), self.f.clone()]
    }
}

pub type Weight = (Q, Q);

/// Simultaneous eigenspace decomposition of `𝔤` under `ad h1` and `ad h2`.
#[derive(Clone, Debug)]
pub struct BiGrading {
    n: usize,
    p: RationalMatrix,
    p_inv: RationalMatrix,
    w1: Vec<Q>,
    w2: Vec<Q>,
    components: BTreeMap<Weight, Subspace>,
}

/// Eigenvalues and eigenvector bases of a matrix whose eigenvalues are
/// congruent modulo `½ℤ`.
fn half_integral_eigen(h: &RationalMatrix) -> Result<Vec<(Q, Vec<Vec<Q>>)>> {
    let n = h.size();
    let is_diag = (0..n).all(|i| (0..n).all(|j| i == j || h[(i, j)].is_zero()));
    let mut out: Vec<(Q, Vec<Vec<Q>>)> = Vec::new();
    if is_diag {
        let mut vals: Vec<Q> = (0..n).map(|i| h[(i, i)].clone()).collect();
        vals.sort();
        vals.dedup();
        for v in vals {
            let vecs = (0..n)
                .filter(|&i| h[(i, i)] == v)
                .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
                .collect();
            out.push((v, vecs));
        }
    } else {
        let nq = q(n as i64);
        let base = h.trace() / &nq;
        let step = Q::one() / (q(2) * &nq);
        let bound = h.spectral_bound();
        let kmax = ((&bound + base.abs()) / &step).ceil().to_integer();
        let kmax: i64 = kmax.try_into().map_err(|_| LieError::NonHalfIntegerSpectrum)?;
        let mut found = 0;
        for k in -kmax..=kmax {
            let mu = &base + &step * q(k);
            let shifted = h.sub(&RationalMatrix::identity(n).scale(&mu));
            let cols: Vec<Vec<Q>> = (0..n).map(|j| (0..n).map(|i| shifted[(i, j)].clone()).collect()).collect();
            let ker = kernel_of_columns(&cols);
            if !ker.is_empty() {
                found += ker.len();
                out.push((mu, ker));
            }
            if found == n {
                break;
            }
        }
        if found != n {
            return Err(LieError::NonHalfIntegerSpectrum);
        }
    }
    let half = q(2);
    for (a, _) in &out {
        let d = (a - &out[0].0) * &half;
        if !d.is_integer() {
            return Err(LieError::NonHalfIntegerSpectrum);
        }
    }
    Ok(out)
}

impl BiGrading {
    pub fn new(model: &LieAlgebraModel, h1: &RationalMatrix, h2: &RationalMatrix) -> Result<Self> {
        model.check_in(&[h1, h2])?;
        if !h1.bracket(h2).is_zero() {
            return Err(LieError::NotCommuting);
        }
        let n = model.size();
        let e1 = half_integral_eigen(h1)?;
        let e2 = half_integral_eigen(h2)?;
        let mut columns: Vec<Vec<Q>> = Vec::new();
        let (mut w1, mut w2) = (Vec::new(), Vec::new());
        for (a, _) in &e1 {
            for (b, _) in &e2 {
                let s1 = h1.sub(&RationalMatrix::identity(n).scale(a));
                let s2 = h2.sub(&RationalMatrix::identity(n).scale(b));
                let cols: Vec<Vec<Q>> = (0..n)
                    .map(|j| (0..n).map(|i| s1[(i, j)].clone()).chain((0..n).map(|i| s2[(i, j)].clone())).collect())
                    .collect();
                for v in kernel_of_columns(&cols) {
                    columns.push(v);
                    w1.push(a.clone());
                    w2.push(b.clone());
                }
            }
        }
        if columns.len() != n {
            return Err(LieError::NonHalfIntegerSpectrum);
        }
        let mut p = RationalMatrix::zeros(n);
        for (j, c) in columns.iter().enumerate() {
            for i in 0..n {
                p[(i, j)] = c[i].clone();
            }
        }
        let p_inv = p.inverse().ok_or(LieError::NonHalfIntegerSpectrum)?;
        let mut g = Self { n, p, p_inv, w1, w2, components: BTreeMap::new() };
        g.components = g.grade(model.algebra());
        Ok(g)
    }

    fn weight_of(&self, i: usize, j: usize) -> Weight {
        (&self.w1[i] - &self.w1[j], &self.w2[i] - &self.w2[j])
    }

    /// Splits `x` into its weight components.
    pub fn decompose(&self, x: &RationalMatrix) -> BTreeMap<Weight, RationalMatrix> {
        let n = self.n;
        let y = self.p_inv.mul(x).mul(&self.p);
        let mut parts: BTreeMap<Weight, RationalMatrix> = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                if y[(i, j)].is_zero() {
                    continue;
                }
                let m = parts.entry(self.weight_of(i, j)).or_insert_with(|| RationalMatrix::zeros(n));
                m[(i, j)] = y[(i, j)].clone();
            }
        }
        parts.into_iter().map(|(k, m)| (k, self.p.mul(&m).mul(&self.p_inv))).collect()
    }

    /// Graded pieces of a subspace stable under both `ad h_i`.
    pub fn grade(&self, s: &Subspace) -> BTreeMap<Weight, Subspace> {
        let mut out: BTreeMap<Weight, Subspace> = BTreeMap::new();
        for b in s.basis() {
            for (k, m) in self.decompose(&b) {
                out.entry(k).or_insert_with(|| Subspace::zero(self.n)).insert(&m);
            }
        }
        out
    }

    /// Weight multiset of a stable subspace as `(weight, dim)` pairs.
    pub fn weights_of(&self, s: &Subspace) -> Vec<(Weight, usize)> {
        self.grade(s).into_iter().map(|(k, v)| (k, v.dim())).collect()
    }

    pub fn components(&self) -> &BTreeMap<Weight, Subspace> {
        &self.components
    }

    pub fn component(&self, k: &Weight) -> Subspace {
        self.components.get(k).cloned().unwrap_or_else(|| Subspace::zero(self.n))
    }

    /// Sum of the components whose weight satisfies `pred`.
    pub fn sum_where<F: Fn(&Weight) -> bool>(&self, pred: F) -> Subspace {
        let mut out = Subspace::zero(self.n);
        for (k, v) in &self.components {
            if pred(k) {
                out = out.sum(v);
            }
        }
        out
    }

    pub fn total_dim(&self) -> usize {
        self.components.values().map(Subspace::dim).sum()
    }

    /// `(q1, q2, dim)` triples in lexicographic order.
    pub fn dump(&self) -> Vec<(String, String, usize)> {
        self.components.iter().map(|((a, b), s)| (a.to_string(), b.to_string(), s.dim())).collect()
    }
}

impl Subspace {
    /// `Σ c_i basis_i` for a basis obtained from [`Subspace::basis`].
    pub fn combination_of(&self, basis: &[RationalMatrix], coeffs: &[Q]) -> RationalMatrix {
        let n = self.matrix_size();
        let mut out = RationalMatrix::zeros(n);
        for (c, b) in coeffs.iter().zip(basis) {
            out.add_scaled(c, b);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qr;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn model_dimensions_and_membership() {
        assert_eq!(build_model(ClassicalFamily::sl(3)).dim(), 8);
        assert_eq!(build_model(ClassicalFamily::sp(4)).dim(), 10);
        assert_eq!(build_model(ClassicalFamily::so(7)).dim(), 21);
        for fam in [ClassicalFamily::so(5), ClassicalFamily::sp(6)] {
            let m = build_model(fam);
            let j = m.form().unwrap().clone();
            for x in m.basis() {
                assert!(x.transpose().mul(&j).add(&j.mul(&x)).is_zero());
            }
        }
    }

    #[test]
    fn centralizer_examples() {
        let sl2 = build_model(ClassicalFamily::sl(2));
        let e = RationalMatrix::unit(2, 0, 1);
        assert_eq!(sl2.centralizer(&[e]).unwrap().dim(), 1);
        let sl4 = build_model(ClassicalFamily::sl(4));
        let e = sl4.nilpotent_from_partition(&p("2,2")).unwrap();
        assert_eq!(sl4.centralizer(&[e]).unwrap().dim(), 7);
        assert_eq!(sl4.centralizer(&[RationalMatrix::identity(4)]), Err(LieError::ElementNotInAlgebra));
    }

    #[test]
    fn partition_triples() {
        let cases = [
            (ClassicalFamily::sl(3), "3", 2),
            (ClassicalFamily::sp(4), "2,2", 4),
            (ClassicalFamily::so(8), "2,2,2,2", 16),
            (ClassicalFamily::so(7), "3,3,1", 7),
        ];
        for (fam, part, dz) in cases {
            let m = build_model(fam);
            let t = m.triple_from_partition(&p(part)).unwrap();
            assert!(t.is_valid());
            assert_eq!(t.e.jordan_type().unwrap(), p(part).parts());
            assert_eq!(m.centralizer(&[t.e]).unwrap().dim(), dz, "{fam} {part}");
        }
    }

    #[test]
    fn jacobson_morozov_examples() {
        let sl2 = build_model(ClassicalFamily::sl(2));
        let t = sl2.jacobson_morozov(&RationalMatrix::unit(2, 0, 1)).unwrap();
        assert_eq!(t.h, RationalMatrix::diag(&[q(1), q(-1)]));
        let sl4 = build_model(ClassicalFamily::sl(4));
        let e = sl4.nilpotent_from_partition(&p("2,2")).unwrap();
        let t = sl4.jacobson_morozov(&e).unwrap();
        assert!(t.is_valid());
        let g = sl4.bigrading(&t.h, &RationalMatrix::zeros(4)).unwrap();
        assert_eq!(g.total_dim(), 15);
        assert_eq!(sl4.jacobson_morozov(&RationalMatrix::diag(&[q(1), q(-1), q(0), q(0)])), Err(LieError::NotNilpotent));
    }

    #[test]
    fn bigrading_nondiagonal() {
        let sl3 = build_model(ClassicalFamily::sl(3));
        let h = RationalMatrix::diag(&[qr(2, 3), qr(-1, 3), qr(-1, 3)]);
        let s = RationalMatrix::from_i64_rows(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
        let conj = s.mul(&h).mul(&s.inverse().unwrap());
        let g = sl3.bigrading(&conj, &RationalMatrix::zeros(3)).unwrap();
        assert_eq!(g.total_dim(), 8);
        assert_eq!(g.component(&(q(1), q(0))).dim(), 2);
        let bad = RationalMatrix::diag(&[qr(1, 3), qr(-1, 3), q(0)]);
        assert_eq!(sl3.bigrading(&bad, &RationalMatrix::zeros(3)).err(), Some(LieError::NonHalfIntegerSpectrum));
    }

    #[test]
    fn rank_and_semisimplicity() {
        let sl3 = build_model(ClassicalFamily::sl(3));
        assert_eq!(sl3.rank_of_subalgebra(sl3.algebra()).unwrap(), 2);
        assert!(sl3.is_semisimple(sl3.algebra()).unwrap());
        let e = RationalMatrix::unit(3, 0, 2);
        let line = sl3.span(std::slice::from_ref(&e));
        assert_eq!(sl3.rank_of_subalgebra(&line).unwrap(), 1);
        assert!(!sl3.is_semisimple(&line).unwrap());
        let h1 = RationalMatrix::diag(&[qr(2, 3), qr(-1, 3), qr(-1, 3)]);
        let borel = sl3.span(&[e.clone(), h1]);
        assert_eq!(sl3.rank_of_subalgebra(&borel).unwrap(), 1);
        assert!(!sl3.is_semisimple(&borel).unwrap());
        let not_closed = sl3.span(&[RationalMatrix::unit(3, 0, 1), RationalMatrix::unit(3, 1, 0)]);
        assert_eq!(sl3.rank_of_subalgebra(&not_closed), Err(LieError::NotClosedUnderBracket));
    }

    #[test]
    fn regular_and_distinguished() {
        let sl3 = build_model(ClassicalFamily::sl(3));
        let e = sl3.nilpotent_from_partition(&p("3")).unwrap();
        assert!(sl3.is_regular_nilpotent_in(sl3.algebra(), &e).unwrap());
        let sl4 = build_model(ClassicalFamily::sl(4));
        let e = sl4.nilpotent_from_partition(&p("2,2")).unwrap();
        assert!(!sl4.is_distinguished_in(sl4.algebra(), &e).unwrap());
        let e = sl4.nilpotent_from_partition(&p("4")).unwrap();
        assert!(sl4.is_distinguished_in(sl4.algebra(), &e).unwrap());
    }

    #[test]
    fn limits() {
        let sl3 = build_model(ClassicalFamily::sl(3));
        let e = sl3.nilpotent_from_partition(&p("3")).unwrap();
        let line = sl3.span(std::slice::from_ref(&e));
        assert_eq!(sl3.e_limit(&e, &line).unwrap(), line);
        // the limit of a Cartan subalgebra along a regular nilpotent is z(e)
        let cartan = sl3.span(&[RationalMatrix::diag(&[q(1), q(-1), q(0)]), RationalMatrix::diag(&[q(0), q(1), q(-1)])]);
        let lim = sl3.e_limit(&e, &cartan).unwrap();
        assert_eq!(lim, sl3.centralizer(&[e]).unwrap());
    }

    #[test]
    fn element_semisimplicity() {
        let sl2 = build_model(ClassicalFamily::sl(2));
        assert!(sl2.is_semisimple_element(&RationalMatrix::from_i64_rows(&[&[0, 1], &[1, 0]])));
        assert!(!sl2.is_semisimple_element(&RationalMatrix::unit(2, 0, 1)));
    }
}
