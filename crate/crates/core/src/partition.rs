//! Partition combinatorics for nilpotent orbits in classical Lie algebras,
//! together with the closed-form Levi, centralizer and double-centralizer
//! formulas used to decide excellence.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::roots::{CartanKind, CartanType, SemisimpleType};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("partition {partition} is not valid for {family}")]
    InvalidPartition { family: ClassicalFamily, partition: Partition },
    #[error("partition {0} is not even")]
    NotEven(Partition),
    #[error("unsupported: part {part} has multiplicity 2 in an orthogonal factor")]
    Unsupported { part: usize },
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("cannot parse {0:?}")]
    Parse(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    SL,
    SO,
    SP,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::SL => "sl",
            Family::SO => "so",
            Family::SP => "sp",
        }
    }
}

impl FromStr for Family {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "sl" | "a" => Ok(Family::SL),
            "so" => Ok(Family::SO),
            "sp" => Ok(Family::SP),
            _ => Err(PartitionError::Parse(s.to_string())),
        }
    }
}

/// A classical simple algebra `sl_N`, `so_N` or `sp_N` (with `N` even).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassicalFamily {
    pub family: Family,
    pub size: usize,
}

impl ClassicalFamily {
    pub fn new(family: Family, size: usize) -> Result<Self, PartitionError> {
        let ok = size >= 1 && (family != Family::SP || size.is_multiple_of(2));
        if !ok {
            return Err(PartitionError::Parse(format!("{}{}", family.name(), size)));
        }
        Ok(Self { family, size })
    }

    pub fn sl(n: usize) -> Self {
        Self::new(Family::SL, n).expect("valid sl size")
    }

    pub fn so(n: usize) -> Self {
        Self::new(Family::SO, n).expect("valid so size")
    }

    pub fn sp(n: usize) -> Self {
        Self::new(Family::SP, n).expect("valid sp size")
    }

    pub fn dim(&self) -> usize {
        let n = self.size;
        match self.family {
            Family::SL => n * n - 1,
            Family::SO => n * (n - 1) / 2,
            Family::SP => n * (n + 1) / 2,
        }
    }

    pub fn rank(&self) -> usize {
        match self.family {
            Family::SL => self.size - 1,
            Family::SO | Family::SP => self.size / 2,
        }
    }
}

impl fmt::Display for ClassicalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.name(), self.size)
    }
}

impl FromStr for ClassicalFamily {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let split = s.find(|c: char| c.is_ascii_digit()).ok_or_else(|| PartitionError::Parse(s.into()))?;
        let family: Family = s[..split].parse()?;
        let size: usize = s[split..].parse().map_err(|_| PartitionError::Parse(s.into()))?;
        Self::new(family, size)
    }
}

/// Weakly decreasing list of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::Parse(format!("{parts:?}")));
        }
        Ok(Self { parts })
    }

    /// Sorts the parts into decreasing order and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Distinct parts with multiplicities `(d_i, r_i)`, `d_1 > d_2 > ...`.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((d, r)) if *d == p => *r += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// The eigenvalues of the characteristic: `d-1, d-3, ..., 1-d` for every
    /// part `d`, in decreasing order.
    pub fn weights(&self) -> Vec<i64> {
        let mut w: Vec<i64> = self
            .parts
            .iter()
            .flat_map(|&d| (0..d).map(move |k| d as i64 - 1 - 2 * k as i64))
            .collect();
        w.sort_unstable_by(|a, b| b.cmp(a));
        w
    }

    pub fn is_zero_orbit(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| PartitionError::Parse(s.into())))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = PartitionError;
    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `fam.size` that label nilpotent orbits of `fam`.
pub fn valid_partitions(fam: ClassicalFamily) -> Vec<Partition> {
    partitions_of(fam.size).into_iter().filter(|p| validate_partition(fam, p)).collect()
}

pub fn validate_partition(fam: ClassicalFamily, p: &Partition) -> bool {
    if p.size() != fam.size {
        return false;
    }
    let mults = p.multiplicities();
    match fam.family {
        Family::SL => true,
        Family::SP => mults.iter().all(|&(d, r)| d % 2 == 0 || r % 2 == 0),
        Family::SO => mults.iter().all(|&(d, r)| d % 2 == 1 || r % 2 == 0),
    }
}

fn check(fam: ClassicalFamily, p: &Partition) -> Result<(), PartitionError> {
    if validate_partition(fam, p) {
        Ok(())
    } else {
        Err(PartitionError::InvalidPartition { family: fam, partition: p.clone() })
    }
}

pub fn transpose(p: &Partition) -> Partition {
    let first = p.parts.first().copied().unwrap_or(0);
    let parts = (1..=first).map(|k| p.parts.iter().filter(|&&x| x >= k).count()).collect();
    Partition { parts }
}

pub fn is_even_orbit(p: &Partition) -> bool {
    p.parts.windows(2).all(|w| (w[0] - w[1]) % 2 == 0)
}

/// Dominance order: `p ⊴ q` iff every partial sum of `p` is at most the
/// corresponding partial sum of `q`.
pub fn dominance_leq(p: &Partition, q: &Partition) -> Result<bool, PartitionError> {
    if p.size() != q.size() {
        return Err(PartitionError::SizeMismatch(p.size(), q.size()));
    }
    let (mut sp, mut sq) = (0, 0);
    for i in 0..p.len().max(q.len()) {
        sp += p.parts.get(i).copied().unwrap_or(0);
        sq += q.parts.get(i).copied().unwrap_or(0);
        if sp > sq {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Duality on nilpotent orbits of `sl_N`.
pub fn spaltenstein_dual_a(p: &Partition) -> Partition {
    transpose(p)
}

/// Family of a simple factor in an [`AlgebraDescriptor`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FactorFamily {
    Sl,
    So,
    Sp,
    /// `gl_d`; only produced internally for multiplicity-2 orthogonal blocks.
    Gl,
    E6,
    E7,
    E8,
    F4,
    G2,
}

/// A reductive Lie algebra written as a sum of literal classical factors
/// (`sl_n`, `so_n`, `sp_n`), exceptional factors and an abelian part.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraDescriptor {
    factors: BTreeMap<(FactorFamily, usize), usize>,
    pub abelian_rank: usize,
}

impl AlgebraDescriptor {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn abelian(k: usize) -> Self {
        Self { factors: BTreeMap::new(), abelian_rank: k }
    }

    /// Adds `count` copies of a factor. Zero-dimensional factors (`sl_1`,
    /// `so_1`, size 0) are dropped.
    pub fn add(&mut self, family: FactorFamily, param: usize, count: usize) -> &mut Self {
        let trivial = match family {
            FactorFamily::Sl | FactorFamily::So => param <= 1,
            FactorFamily::Sp | FactorFamily::Gl => param == 0,
            _ => false,
        };
        if !trivial && count > 0 {
            *self.factors.entry((family, param)).or_insert(0) += count;
        }
        self
    }

    pub fn with(mut self, family: FactorFamily, param: usize, count: usize) -> Self {
        self.add(family, param, count);
        self
    }

    pub fn factors(&self) -> impl Iterator<Item = ((FactorFamily, usize), usize)> + '_ {
        self.factors.iter().map(|(&k, &v)| (k, v))
    }

    pub fn rank(&self) -> usize {
        self.factors().map(|((f, p), c)| c * factor_rank(f, p)).sum::<usize>() + self.abelian_rank
    }

    pub fn dim(&self) -> usize {
        self.factors().map(|((f, p), c)| c * factor_dim(f, p)).sum::<usize>() + self.abelian_rank
    }

    /// Dimension of the center: abelian part plus one per `so_2` or `gl`.
    pub fn center_dim(&self) -> usize {
        self.abelian_rank
            + self
                .factors()
                .filter(|((f, p), _)| (*f == FactorFamily::So && *p == 2) || *f == FactorFamily::Gl)
                .map(|(_, c)| c)
                .sum::<usize>()
    }

    pub fn is_semisimple(&self) -> bool {
        self.center_dim() == 0
    }

    /// Isomorphism class of the derived algebra, plus the center dimension.
    pub fn normalize(&self) -> (SemisimpleType, usize) {
        let mut types = Vec::new();
        for ((f, p), c) in self.factors() {
            for _ in 0..c {
                types.extend(factor_cartan(f, p));
            }
        }
        (SemisimpleType::new(types), self.center_dim())
    }

    /// Compares isomorphism classes, identifying e.g. `so3`, `sp2` and `sl2`.
    pub fn isomorphic(&self, other: &Self) -> bool {
        self.normalize() == other.normalize()
    }
}

fn factor_rank(f: FactorFamily, p: usize) -> usize {
    match f {
        FactorFamily::Sl => p - 1,
        FactorFamily::So | FactorFamily::Sp => p / 2,
        FactorFamily::Gl => p,
        FactorFamily::E6 => 6,
        FactorFamily::E7 => 7,
        FactorFamily::E8 => 8,
        FactorFamily::F4 => 4,
        FactorFamily::G2 => 2,
    }
}

fn factor_dim(f: FactorFamily, p: usize) -> usize {
    match f {
        FactorFamily::Sl => p * p - 1,
        FactorFamily::So => p * (p - 1) / 2,
        FactorFamily::Sp => p * (p + 1) / 2,
        FactorFamily::Gl => p * p,
        FactorFamily::E6 => 78,
        FactorFamily::E7 => 133,
        FactorFamily::E8 => 248,
        FactorFamily::F4 => 52,
        FactorFamily::G2 => 14,
    }
}

fn factor_cartan(f: FactorFamily, p: usize) -> Vec<CartanType> {
    use CartanKind::*;
    let t = |k, r| vec![CartanType::new(k, r)];
    match f {
        FactorFamily::Sl => t(A, p - 1),
        FactorFamily::Gl => {
            if p >= 2 {
                t(A, p - 1)
            } else {
                vec![]
            }
        }
        FactorFamily::So => match p {
            0..=2 => vec![],
            3 => t(A, 1),
            4 => vec![CartanType::new(A, 1), CartanType::new(A, 1)],
            5 => t(B, 2),
            6 => t(A, 3),
            _ if p % 2 == 1 => t(B, p / 2),
            _ => t(D, p / 2),
        },
        FactorFamily::Sp => match p / 2 {
            0 => vec![],
            1 => t(A, 1),
            2 => t(B, 2),
            r => t(C, r),
        },
        FactorFamily::E6 => t(E, 6),
        FactorFamily::E7 => t(E, 7),
        FactorFamily::E8 => t(E, 8),
        FactorFamily::F4 => t(F, 4),
        FactorFamily::G2 => t(G, 2),
    }
}

impl fmt::Display for AlgebraDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items: Vec<String> = self
            .factors()
            .map(|((fam, p), c)| {
                let base = match fam {
                    FactorFamily::Sl => format!("sl{p}"),
                    FactorFamily::So => format!("so{p}"),
                    FactorFamily::Sp => format!("sp{p}"),
                    FactorFamily::Gl => format!("gl{p}"),
                    FactorFamily::E6 => "E6".into(),
                    FactorFamily::E7 => "E7".into(),
                    FactorFamily::E8 => "E8".into(),
                    FactorFamily::F4 => "F4".into(),
                    FactorFamily::G2 => "G2".into(),
                };
                if c > 1 {
                    format!("{base}^{c}")
                } else {
                    base
                }
            })
            .collect();
        if self.abelian_rank > 0 {
            items.push(format!("ab{}", self.abelian_rank));
        }
        if items.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", items.join("+"))
        }
    }
}

impl FromStr for AlgebraDescriptor {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut d = AlgebraDescriptor::new();
        let s = s.trim();
        if s == "0" || s.is_empty() {
            return Ok(d);
        }
        let err = || PartitionError::Parse(s.to_string());
        for tok in s.split('+') {
            let (base, count) = match tok.split_once('^') {
                Some((b, c)) => (b, c.parse::<usize>().map_err(|_| err())?),
                None => (tok, 1),
            };
            let split = base.find(|c: char| c.is_ascii_digit()).ok_or_else(err)?;
            let (name, num) = base.split_at(split);
            let num: usize = num.parse().map_err(|_| err())?;
            let fam = match (name, num) {
                ("ab", _) => {
                    d.abelian_rank += num * count;
                    continue;
                }
                ("sl", _) => FactorFamily::Sl,
                ("so", _) => FactorFamily::So,
                ("sp", _) => FactorFamily::Sp,
                ("gl", _) => FactorFamily::Gl,
                ("E", 6) => FactorFamily::E6,
                ("E", 7) => FactorFamily::E7,
                ("E", 8) => FactorFamily::E8,
                ("F", 4) => FactorFamily::F4,
                ("G", 2) => FactorFamily::G2,
                _ => return Err(err()),
            };
            d.add(fam, num, count);
        }
        Ok(d)
    }
}

fn classical_factor(fam: Family) -> FactorFamily {
    match fam {
        Family::SL => FactorFamily::Sl,
        Family::SO => FactorFamily::So,
        Family::SP => FactorFamily::Sp,
    }
}

/// Multiplicity of each eigenvalue of the characteristic.
fn weight_multiplicities(p: &Partition) -> BTreeMap<i64, usize> {
    let mut m = BTreeMap::new();
    for w in p.weights() {
        *m.entry(w).or_insert(0) += 1;
    }
    m
}

/// Centralizer of the characteristic: `ℓ = z(h̃)`. This is a Levi
/// subalgebra for any orbit; it is the Levi of the Jacobson–Morozov
/// parabolic.
fn levi_any(fam: ClassicalFamily, p: &Partition) -> AlgebraDescriptor {
    let mults = weight_multiplicities(p);
    let mut d = AlgebraDescriptor::new();
    match fam.family {
        Family::SL => {
            for &r in mults.values() {
                d.add(FactorFamily::Sl, r, 1);
            }
            d.abelian_rank = mults.len() - 1;
        }
        Family::SO | Family::SP => {
            let mut positive = 0;
            for (&w, &r) in &mults {
                if w > 0 {
                    d.add(FactorFamily::Sl, r, 1);
                    positive += 1;
                } else if w == 0 {
                    d.add(classical_factor(fam.family), r, 1);
                }
            }
            d.abelian_rank = positive;
        }
    }
    d
}

/// The Levi subalgebra `z(h̃)` of an even orbit.
pub fn levi_of_even_orbit(fam: ClassicalFamily, p: &Partition) -> Result<AlgebraDescriptor, PartitionError> {
    check(fam, p)?;
    if !is_even_orbit(p) {
        return Err(PartitionError::NotEven(p.clone()));
    }
    Ok(levi_any(fam, p))
}

/// Dimension of the center of `z(h̃)`, valid for every orbit.
pub fn center_dim_of_levi(fam: ClassicalFamily, p: &Partition) -> Result<usize, PartitionError> {
    check(fam, p)?;
    Ok(levi_any(fam, p).center_dim())
}

/// `𝔨 = z(e, h̃, f)`, the reductive part of the centralizer.
pub fn reductive_centralizer(fam: ClassicalFamily, p: &Partition) -> Result<AlgebraDescriptor, PartitionError> {
    check(fam, p)?;
    let mults = p.multiplicities();
    let mut d = AlgebraDescriptor::new();
    for &(di, ri) in &mults {
        let f = match (fam.family, di % 2 == 1) {
            (Family::SL, _) => FactorFamily::Sl,
            (Family::SP, true) | (Family::SO, false) => FactorFamily::Sp,
            (Family::SP, false) | (Family::SO, true) => FactorFamily::So,
        };
        d.add(f, ri, 1);
    }
    if fam.family == Family::SL {
        d.abelian_rank = mults.len() - 1;
    }
    Ok(d)
}

/// `z(𝔨)` with multiplicity-2 orthogonal blocks contributing `gl_{d_i}`.
fn double_centralizer_any(fam: ClassicalFamily, p: &Partition) -> AlgebraDescriptor {
    let mults = p.multiplicities();
    let mut d = AlgebraDescriptor::new();
    match fam.family {
        Family::SL => {
            for &(di, _) in &mults {
                d.add(FactorFamily::Sl, di, 1);
            }
            d.abelian_rank = mults.len() - 1;
        }
        Family::SP | Family::SO => {
            let own = classical_factor(fam.family);
            let other = if own == FactorFamily::Sp { FactorFamily::So } else { FactorFamily::Sp };
            // parts whose multiplicity space carries a symplectic form
            let symplectic_mult = |di: usize| (fam.family == Family::SP) == (di % 2 == 1);
            let mut merged = 0;
            for &(di, ri) in &mults {
                if symplectic_mult(di) {
                    d.add(other, di, 1);
                } else if ri == 1 {
                    merged += di;
                } else if ri == 2 {
                    d.add(FactorFamily::Gl, di, 1);
                } else {
                    d.add(own, di, 1);
                }
            }
            d.add(own, merged, 1);
        }
    }
    d
}

/// `𝔨∨ = z(𝔨)`. Refuses when an orthogonal multiplicity space has
/// dimension 2.
pub fn double_centralizer(fam: ClassicalFamily, p: &Partition) -> Result<AlgebraDescriptor, PartitionError> {
    check(fam, p)?;
    let d = double_centralizer_any(fam, p);
    if let Some(((_, part), _)) = d.factors().find(|((f, _), _)| *f == FactorFamily::Gl) {
        return Err(PartitionError::Unsupported { part });
    }
    Ok(d)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcellenceCertificate {
    pub is_even: bool,
    pub dim_center_levi: usize,
    pub rank_double_centralizer: usize,
    pub verdict: bool,
    pub anomaly_flag: bool,
    /// `dim 𝔠 = rk 𝔨∨` without the evenness requirement.
    pub quasi_excellent: bool,
}

impl ExcellenceCertificate {
    pub fn from_parts(is_even: bool, dim_center_levi: usize, rank_double_centralizer: usize, anomaly_flag: bool) -> Self {
        let quasi = dim_center_levi == rank_double_centralizer;
        Self {
            is_even,
            dim_center_levi,
            rank_double_centralizer,
            verdict: is_even && quasi,
            anomaly_flag,
            quasi_excellent: quasi,
        }
    }

    /// Equality ignoring the anomaly flag, which only the partition level
    /// can set.
    pub fn same_invariants(&self, other: &Self) -> bool {
        self.is_even == other.is_even
            && self.dim_center_levi == other.dim_center_levi
            && self.rank_double_centralizer == other.rank_double_centralizer
            && self.verdict == other.verdict
    }
}

pub fn is_excellent(fam: ClassicalFamily, p: &Partition) -> Result<ExcellenceCertificate, PartitionError> {
    check(fam, p)?;
    let dim_c = levi_any(fam, p).center_dim();
    let rk = double_centralizer_any(fam, p).rank();
    let m = p.multiplicities();
    let anomaly = fam.family == Family::SO && m.len() == 2 && m[0].1 == 1 && m[1] == (1, 1) && m[0].0 % 2 == 1;
    Ok(ExcellenceCertificate::from_parts(is_even_orbit(p), dim_c, rk, anomaly))
}

/// The closed-form excellence rules, stated directly on `(d_i, r_i)`.
pub fn excellent_by_rules(fam: ClassicalFamily, p: &Partition) -> bool {
    let m = p.multiplicities();
    let odd = p.parts()[0] % 2 == 1;
    if !is_even_orbit(p) {
        return false;
    }
    match (fam.family, odd) {
        (Family::SL, _) => m.len() == 1,
        (Family::SP, true) => m.len() == 1 || (m.len() == 2 && m[1].0 == 1),
        (Family::SP, false) => m.len() == 1 && m[0].1 != 2,
        (Family::SO, false) => m.len() == 1,
        (Family::SO, true) => {
            (m.len() == 1 && m[0].1 != 2)
                || (m.len() == 2 && m[1].0 == 1 && m.iter().all(|&(_, r)| r != 2))
                || (m.len() == 2 && m[0].1 == 1 && m[1] == (1, 1))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcellentOrbit {
    pub algebra: ClassicalFamily,
    pub partition: Partition,
    pub certificate: ExcellenceCertificate,
}

/// Nonzero excellent orbits of every algebra of `family` with defining
/// size in `2..=max_size`. For `sp`, `max_size` bounds `2N`.
pub fn enumerate_excellent(family: Family, max_size: usize) -> Vec<ExcellentOrbit> {
    let sizes: Vec<usize> = match family {
        Family::SL => (2..=max_size).collect(),
        Family::SP => (2..=max_size).filter(|n| n % 2 == 0).collect(),
        Family::SO => (3..=max_size).collect(),
    };
    let mut out = Vec::new();
    for n in sizes {
        let fam = ClassicalFamily { family, size: n };
        for p in valid_partitions(fam) {
            if p.is_zero_orbit() {
                continue;
            }
            let cert = is_excellent(fam, &p).expect("valid partition");
            if cert.verdict {
                out.push(ExcellentOrbit { algebra: fam, partition: p, certificate: cert });
            }
        }
    }
    out
}

/// Weighted Dynkin diagram in Bourbaki order. Type D uses the labels of
/// `D_n`; `so_{2n+1}` uses `B_n`; `sp_{2n}` uses `C_n`.
pub fn weighted_diagram_from_partition(fam: ClassicalFamily, p: &Partition) -> Result<Vec<u8>, PartitionError> {
    check(fam, p)?;
    let w = p.weights();
    let label = |x: i64| u8::try_from(x).expect("labels are 0, 1 or 2");
    let labels = match fam.family {
        Family::SL => w.windows(2).map(|x| label(x[0] - x[1])).collect(),
        Family::SO | Family::SP => {
            let r = fam.rank();
            let h: Vec<i64> = w[..r].to_vec();
            let mut out: Vec<u8> = h.windows(2).map(|x| label(x[0] - x[1])).collect();
            if r >= 1 {
                let last = match (fam.family, fam.size % 2) {
                    (Family::SP, _) => 2 * h[r - 1],
                    (Family::SO, 1) => h[r - 1],
                    _ if r >= 2 => h[r - 2] + h[r - 1],
                    _ => 0,
                };
                out.push(label(last));
            }
            if fam.family == Family::SO && fam.size.is_multiple_of(2) && r == 1 {
                out.clear();
            }
            out
        }
    };
    Ok(labels)
}

/// Rank of the semisimple part plus the abelian rank; used to check that
/// a descriptor is a Levi subalgebra.
pub fn descriptor_rank(d: &AlgebraDescriptor) -> usize {
    d.rank()
}

pub fn cartan_type_of(fam: ClassicalFamily) -> Option<CartanType> {
    let r = fam.rank();
    match fam.family {
        Family::SL if r >= 1 => Some(CartanType::new(CartanKind::A, r)),
        Family::SO if fam.size % 2 == 1 && r >= 1 => Some(CartanType::new(CartanKind::B, r)),
        Family::SO if r >= 2 => Some(CartanType::new(CartanKind::D, r)),
        Family::SP if r >= 1 => Some(CartanType::new(CartanKind::C, r)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn validation_examples() {
        assert!(validate_partition(ClassicalFamily::sp(10), &p("3,3,1,1,1,1")));
        assert!(!validate_partition(ClassicalFamily::sp(4), &p("3,1")));
        assert!(validate_partition(ClassicalFamily::so(10), &p("3,3,3,1")));
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(transpose(&p("3")), p("1,1,1"));
        assert_eq!(transpose(&p("2,2")), p("2,2"));
        assert_eq!(transpose(&p("4,2,1")), p("3,2,1,1"));
    }

    #[test]
    fn evenness() {
        assert!(is_even_orbit(&p("3,3,1,1,1,1")));
        assert!(is_even_orbit(&p("2,2,2")));
        assert!(!is_even_orbit(&p("3,2")));
    }

    #[test]
    fn levi_examples() {
        let l = levi_of_even_orbit(ClassicalFamily::sl(6), &p("2,2,2")).unwrap();
        assert_eq!(l.to_string(), "sl3^2+ab1");
        let l = levi_of_even_orbit(ClassicalFamily::sp(10), &p("3,3,1,1,1,1")).unwrap();
        assert_eq!(l.to_string(), "sl2+sp6+ab1");
        let l = levi_of_even_orbit(ClassicalFamily::so(8), &p("2,2,2,2")).unwrap();
        assert_eq!(l.to_string(), "sl4+ab1");
        assert!(levi_of_even_orbit(ClassicalFamily::sl(5), &p("3,2")).is_err());
    }

    #[test]
    fn k_and_double_centralizer_examples() {
        let sp10 = ClassicalFamily::sp(10);
        assert_eq!(reductive_centralizer(sp10, &p("3,3,1,1,1,1")).unwrap().to_string(), "sp2+sp4");
        assert_eq!(reductive_centralizer(ClassicalFamily::sp(6), &p("2,2,2")).unwrap().to_string(), "so3");
        assert_eq!(reductive_centralizer(ClassicalFamily::sl(6), &p("2,2,2")).unwrap().to_string(), "sl3");
        assert_eq!(double_centralizer(sp10, &p("3,3,1,1,1,1")).unwrap().to_string(), "so3");
        assert_eq!(double_centralizer(ClassicalFamily::so(10), &p("3,3,3,1")).unwrap().to_string(), "so3");
        assert_eq!(double_centralizer(ClassicalFamily::sl(6), &p("2,2,2")).unwrap().to_string(), "sl2");
        assert_eq!(
            double_centralizer(ClassicalFamily::sp(4), &p("2,2")),
            Err(PartitionError::Unsupported { part: 2 })
        );
    }

    #[test]
    fn excellence_examples() {
        let c = is_excellent(ClassicalFamily::sp(10), &p("3,3,1,1,1,1")).unwrap();
        assert!(c.verdict);
        assert_eq!((c.dim_center_levi, c.rank_double_centralizer), (1, 1));
        assert!(!is_excellent(ClassicalFamily::sl(6), &p("3,2,1")).unwrap().verdict);
        let c = is_excellent(ClassicalFamily::so(10), &p("9,1")).unwrap();
        assert!(c.verdict && c.anomaly_flag);
    }

    #[test]
    fn generic_certificate_matches_rules() {
        for fam in (2..=12).map(ClassicalFamily::sl).chain((1..=8).map(|n| ClassicalFamily::sp(2 * n))).chain((3..=14).map(ClassicalFamily::so)) {
            for part in valid_partitions(fam) {
                let cert = is_excellent(fam, &part).unwrap();
                assert_eq!(cert.verdict, excellent_by_rules(fam, &part), "{fam} {part}");
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        let sl4: Vec<String> = enumerate_excellent(Family::SL, 4)
            .into_iter()
            .filter(|o| o.algebra.size == 4)
            .map(|o| o.partition.to_string())
            .collect();
        assert_eq!(sl4, vec!["(4)", "(2,2)"]);
        let sp4: Vec<String> = enumerate_excellent(Family::SP, 4)
            .into_iter()
            .filter(|o| o.algebra.size == 4)
            .map(|o| o.partition.to_string())
            .collect();
        assert_eq!(sp4, vec!["(4)"]);
        let so7: Vec<String> = enumerate_excellent(Family::SO, 7)
            .into_iter()
            .filter(|o| o.algebra.size == 7)
            .map(|o| o.partition.to_string())
            .collect();
        assert_eq!(so7, vec!["(7)", "(3,1,1,1,1)"]);
    }

    #[test]
    fn diagrams() {
        assert_eq!(weighted_diagram_from_partition(ClassicalFamily::sl(3), &p("3")).unwrap(), vec![2, 2]);
        assert_eq!(weighted_diagram_from_partition(ClassicalFamily::sl(4), &p("2,2")).unwrap(), vec![0, 2, 0]);
        assert_eq!(weighted_diagram_from_partition(ClassicalFamily::sp(4), &p("2,2")).unwrap(), vec![0, 2]);
        assert_eq!(weighted_diagram_from_partition(ClassicalFamily::so(8), &p("7,1")).unwrap(), vec![2, 2, 2, 2]);
        assert_eq!(weighted_diagram_from_partition(ClassicalFamily::so(7), &p("7")).unwrap(), vec![2, 2, 2]);
    }

    #[test]
    fn dominance() {
        assert!(dominance_leq(&p("2,2"), &p("3,1")).unwrap());
        assert!(!dominance_leq(&p("3,1"), &p("2,2")).unwrap());
        assert_eq!(spaltenstein_dual_a(&p("4,2")), p("2,2,1,1"));
        assert!(dominance_leq(&p("2"), &p("1")).is_err());
    }

    #[test]
    fn descriptor_text_roundtrip() {
        for s in ["sp2+sp4", "sl3^2+ab1", "so2+sp6", "0", "sl2+G2"] {
            let d: AlgebraDescriptor = s.parse().unwrap();
            assert_eq!(d.to_string(), s);
        }
        let so3: AlgebraDescriptor = "so3".parse().unwrap();
        let sl2: AlgebraDescriptor = "sl2".parse().unwrap();
        assert_ne!(so3, sl2);
        assert!(so3.isomorphic(&sl2));
    }
}
