//! Root systems of all simple types in the simple-root basis, and the
//! zero-weight subsystems cut out by weighted Dynkin diagrams.
//!
//! Nodes are numbered in Bourbaki order throughout.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("unknown Cartan type {0}")]
    UnknownType(String),
    #[error("diagram has {got} labels but rank is {rank}")]
    BadLength { got: usize, rank: usize },
    #[error("diagram label {0} is not in {{0,1,2}}")]
    BadLabel(u8),
    #[error("diagram is not even")]
    NotEven,
    #[error("cannot parse {0:?}")]
    Parse(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanKind {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    pub kind: CartanKind,
    pub rank: usize,
}

impl CartanType {
    pub fn new(kind: CartanKind, rank: usize) -> Self {
        Self { kind, rank }
    }

    pub fn is_valid(&self) -> bool {
        use CartanKind::*;
        match self.kind {
            A => self.rank >= 1,
            B | C => self.rank >= 2,
            D => self.rank >= 4,
            E => (6..=8).contains(&self.rank),
            F => self.rank == 4,
            G => self.rank == 2,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.kind, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = RootError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let kind = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => CartanKind::A,
            Some('B') => CartanKind::B,
            Some('C') => CartanKind::C,
            Some('D') => CartanKind::D,
            Some('E') => CartanKind::E,
            Some('F') => CartanKind::F,
            Some('G') => CartanKind::G,
            _ => return Err(RootError::UnknownType(s.into())),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| RootError::UnknownType(s.into()))?;
        let t = CartanType::new(kind, rank);
        if t.is_valid() {
            Ok(t)
        } else {
            Err(RootError::UnknownType(s.into()))
        }
    }
}

/// Isomorphism class of a semisimple Lie algebra: a multiset of simple
/// types kept in canonical order (rank descending).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SemisimpleType(Vec<CartanType>);

impl SemisimpleType {
    pub fn new(mut types: Vec<CartanType>) -> Self {
        types.sort_by(|a, b| b.rank.cmp(&a.rank).then(a.kind.cmp(&b.kind)));
        Self(types)
    }

    pub fn components(&self) -> &[CartanType] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.iter().map(|t| t.rank).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for SemisimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut items = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let t = self.0[i];
            let count = self.0[i..].iter().take_while(|&&u| u == t).count();
            items.push(if count > 1 { format!("{count}{t}") } else { t.to_string() });
            i += count;
        }
        write!(f, "{}", items.join("+"))
    }
}

impl FromStr for SemisimpleType {
    type Err = RootError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Self::default());
        }
        let mut types = Vec::new();
        for tok in s.split('+') {
            let tok = tok.trim();
            let digits = tok.chars().take_while(char::is_ascii_digit).count();
            let count = if digits == 0 { 1 } else { tok[..digits].parse().unwrap() };
            let t: CartanType = tok[digits..].parse()?;
            types.extend(std::iter::repeat_n(t, count));
        }
        Ok(Self::new(types))
    }
}

/// Labels of a weighted Dynkin diagram, one per simple root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedDiagram {
    pub cartan_type: CartanType,
    pub labels: Vec<u8>,
}

impl WeightedDiagram {
    pub fn new(cartan_type: CartanType, labels: Vec<u8>) -> Result<Self, RootError> {
        if labels.len() != cartan_type.rank {
            return Err(RootError::BadLength { got: labels.len(), rank: cartan_type.rank });
        }
        if let Some(&l) = labels.iter().find(|&&l| l > 2) {
            return Err(RootError::BadLabel(l));
        }
        Ok(Self { cartan_type, labels })
    }

    pub fn is_even(&self) -> bool {
        self.labels.iter().all(|l| l % 2 == 0)
    }

    pub fn label_string(&self) -> String {
        self.labels.iter().map(|l| char::from(b'0' + l)).collect()
    }
}

impl fmt::Display for WeightedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.cartan_type, self.label_string())
    }
}

impl FromStr for WeightedDiagram {
    type Err = RootError;
    /// Parses strings like `E7:0100000`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (t, l) = s.split_once(':').ok_or_else(|| RootError::Parse(s.into()))?;
        let t: CartanType = t.parse()?;
        let labels = l
            .trim()
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(|| RootError::Parse(s.into())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(t, labels)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RootSystem {
    pub cartan_type: CartanType,
    /// Symmetric integer Gram matrix of the simple roots.
    pub gram: Vec<Vec<i64>>,
    /// `a_ij = 2 (α_i, α_j) / (α_j, α_j)`.
    pub cartan_matrix: Vec<Vec<i64>>,
    /// Positive roots sorted by height, then lexicographically.
    pub positive_roots: Vec<Vec<i64>>,
}

fn gram_matrix(t: CartanType) -> Vec<Vec<i64>> {
    use CartanKind::*;
    let n = t.rank;
    let mut g = vec![vec![0i64; n]; n];
    let mut link = |i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    let chain = |link: &mut dyn FnMut(usize, usize, i64), upto: usize| {
        for i in 1..upto {
            link(i - 1, i, -1);
        }
    };
    match t.kind {
        A => chain(&mut link, n),
        B | C => chain(&mut link, n - 1),
        D => {
            chain(&mut link, n - 1);
            link(n - 3, n - 1, -1);
        }
        E => {
            // 1-3-4-5-6-7-8 with 2 attached to 4
            link(0, 2, -1);
            link(1, 3, -1);
            for i in 2..n - 1 {
                link(i, i + 1, -1);
            }
        }
        F => {
            link(0, 1, -2);
            link(1, 2, -2);
            link(2, 3, -1);
        }
        G => link(0, 1, -3),
    }
    let lengths: Vec<i64> = match t.kind {
        A | D | E => vec![2; n],
        B => (0..n).map(|i| if i + 1 == n { 1 } else { 2 }).collect(),
        C => (0..n).map(|i| if i + 1 == n { 4 } else { 2 }).collect(),
        F => vec![4, 4, 2, 2],
        G => vec![2, 6],
    };
    if t.kind == B && n >= 2 {
        g[n - 2][n - 1] = -1;
        g[n - 1][n - 2] = -1;
    }
    if t.kind == C && n >= 2 {
        g[n - 2][n - 1] = -2;
        g[n - 1][n - 2] = -2;
    }
    for (i, l) in lengths.into_iter().enumerate() {
        g[i][i] = l;
    }
    g
}

fn inner(g: &[Vec<i64>], a: &[i64], b: &[i64]) -> i64 {
    let mut s = 0;
    for i in 0..a.len() {
        if a[i] == 0 {
            continue;
        }
        for j in 0..b.len() {
            s += a[i] * g[i][j] * b[j];
        }
    }
    s
}

impl RootSystem {
    pub fn build(cartan_type: CartanType) -> Result<Self, RootError> {
        if !cartan_type.is_valid() {
            return Err(RootError::UnknownType(cartan_type.to_string()));
        }
        let n = cartan_type.rank;
        let gram = gram_matrix(cartan_type);
        let cartan_matrix: Vec<Vec<i64>> =
            (0..n).map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[j][j]).collect()).collect();
        let simple: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        let mut known: HashSet<Vec<i64>> = simple.iter().cloned().collect();
        let mut roots = simple.clone();
        let mut layer = simple;
        while !layer.is_empty() {
            let mut next = Vec::new();
            for beta in &layer {
                for i in 0..n {
                    // length p of the string β, β−α_i, β−2α_i, ...
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if known.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing = 2 * inner(&gram, beta, &(0..n).map(|j| i64::from(j == i)).collect::<Vec<_>>()) / gram[i][i];
                    if p - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if known.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            roots.extend(next.iter().cloned());
            layer = next;
        }
        roots.sort_by(|a, b| a.iter().sum::<i64>().cmp(&b.iter().sum::<i64>()).then(a.cmp(b)));
        Ok(Self { cartan_type, gram, cartan_matrix, positive_roots: roots })
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    /// All roots, positive ones first, then their negatives.
    pub fn roots(&self) -> Vec<Vec<i64>> {
        let mut all = self.positive_roots.clone();
        all.extend(self.positive_roots.iter().map(|r| r.iter().map(|x| -x).collect()));
        all
    }

    pub fn num_roots(&self) -> usize {
        2 * self.positive_roots.len()
    }

    pub fn dim(&self) -> usize {
        self.num_roots() + self.rank()
    }

    pub fn highest_root(&self) -> &[i64] {
        self.positive_roots.last().expect("nonempty")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    fn check_diagram(&self, wd: &WeightedDiagram) -> Result<(), RootError> {
        if wd.labels.len() != self.rank() {
            return Err(RootError::BadLength { got: wd.labels.len(), rank: self.rank() });
        }
        Ok(())
    }

    fn zero_weight_positive(&self, wd: &WeightedDiagram) -> Vec<Vec<i64>> {
        self.positive_roots
            .iter()
            .filter(|r| r.iter().zip(&wd.labels).all(|(c, &l)| *c == 0 || l == 0))
            .cloned()
            .collect()
    }

    /// Type of the root subsystem `{α : ⟨α, h⟩ = 0}` and the dimension of
    /// the center of the corresponding Levi subalgebra.
    pub fn zero_weight_levi(&self, wd: &WeightedDiagram) -> Result<(SemisimpleType, usize), RootError> {
        self.check_diagram(wd)?;
        let pos = self.zero_weight_positive(wd);
        let set: BTreeSet<&Vec<i64>> = pos.iter().collect();
        let simple: Vec<&Vec<i64>> = pos
            .iter()
            .filter(|r| {
                !pos.iter().any(|a| {
                    let b: Vec<i64> = r.iter().zip(a.iter()).map(|(x, y)| x - y).collect();
                    set.contains(&b)
                })
            })
            .collect();
        let k = simple.len();
        let g: Vec<Vec<i64>> =
            (0..k).map(|i| (0..k).map(|j| inner(&self.gram, simple[i], simple[j])).collect()).collect();
        let types = identify_components(&g);
        let ss = SemisimpleType::new(types);
        let center = self.rank() - ss.rank();
        Ok((ss, center))
    }

    /// `dim 𝔤 − dim 𝔤(0)` for an even diagram.
    pub fn orbit_dim_from_diagram(&self, wd: &WeightedDiagram) -> Result<usize, RootError> {
        self.check_diagram(wd)?;
        if !wd.is_even() {
            return Err(RootError::NotEven);
        }
        let zero = 2 * self.zero_weight_positive(wd).len();
        Ok(self.dim() - (self.rank() + zero))
    }
}

pub fn build_root_system(t: CartanType) -> Result<RootSystem, RootError> {
    RootSystem::build(t)
}

/// Splits a Gram matrix of a simple system into connected components and
/// identifies each one.
fn identify_components(g: &[Vec<i64>]) -> Vec<CartanType> {
    let k = g.len();
    let mut seen = vec![false; k];
    let mut out = Vec::new();
    for start in 0..k {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < comp.len() {
            let a = comp[i];
            for b in 0..k {
                if !seen[b] && g[a][b] != 0 {
                    seen[b] = true;
                    comp.push(b);
                }
            }
            i += 1;
        }
        let sub: Vec<Vec<i64>> = comp.iter().map(|&a| comp.iter().map(|&b| g[a][b]).collect()).collect();
        out.push(identify_connected(&sub));
    }
    out
}

fn identify_connected(g: &[Vec<i64>]) -> CartanType {
    use CartanKind::*;
    let k = g.len();
    if k == 1 {
        return CartanType::new(A, 1);
    }
    let lengths: Vec<i64> = (0..k).map(|i| g[i][i]).collect();
    let long = *lengths.iter().max().unwrap();
    let short = *lengths.iter().min().unwrap();
    if long == short {
        let degree: Vec<usize> = (0..k).map(|i| (0..k).filter(|&j| j != i && g[i][j] != 0).count()).collect();
        let Some(branch) = degree.iter().position(|&d| d == 3) else {
            return CartanType::new(A, k);
        };
        // arm lengths from the branch node
        let mut arms: Vec<usize> = (0..k)
            .filter(|&j| j != branch && g[branch][j] != 0)
            .map(|first| {
                let (mut prev, mut cur, mut len) = (branch, first, 1);
                loop {
                    let next = (0..k).find(|&j| j != prev && j != cur && g[cur][j] != 0);
                    match next {
                        Some(nx) => {
                            prev = cur;
                            cur = nx;
                            len += 1;
                        }
                        None => break len,
                    }
                }
            })
            .collect();
        arms.sort_unstable();
        if arms[0] == 1 && arms[1] == 1 {
            CartanType::new(D, k)
        } else {
            CartanType::new(E, k)
        }
    } else if long == 3 * short {
        CartanType::new(G, 2)
    } else {
        let n_long = lengths.iter().filter(|&&l| l == long).count();
        let n_short = k - n_long;
        match (k, n_long, n_short) {
            (2, _, _) => CartanType::new(B, 2),
            (4, 2, 2) => CartanType::new(F, 4),
            (_, _, 1) => CartanType::new(B, k),
            _ => CartanType::new(C, k),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> CartanType {
        s.parse().unwrap()
    }

    #[test]
    fn root_counts() {
        for (name, n) in [("G2", 12), ("F4", 48), ("E6", 72), ("E7", 126), ("E8", 240), ("A4", 20), ("B3", 18), ("C3", 18), ("D4", 24)] {
            assert_eq!(RootSystem::build(t(name)).unwrap().num_roots(), n, "{name}");
        }
    }

    #[test]
    fn cartan_matrices() {
        let g2 = RootSystem::build(t("G2")).unwrap();
        assert_eq!(g2.cartan_matrix, vec![vec![2, -1], vec![-3, 2]]);
        let b2 = RootSystem::build(t("B2")).unwrap();
        assert_eq!(b2.cartan_matrix, vec![vec![2, -2], vec![-1, 2]]);
        let f4 = RootSystem::build(t("F4")).unwrap();
        assert_eq!(f4.highest_root(), &[2, 3, 4, 2]);
        let e8 = RootSystem::build(t("E8")).unwrap();
        assert_eq!(e8.highest_root(), &[2, 3, 4, 6, 5, 4, 3, 2]);
    }

    #[test]
    fn levi_examples() {
        let e7 = RootSystem::build(t("E7")).unwrap();
        let (ss, c) = e7.zero_weight_levi(&"E7:0000010".parse().unwrap()).unwrap();
        assert_eq!(ss, "D5+A1".parse().unwrap());
        assert_eq!(c, 1);
        let f4 = RootSystem::build(t("F4")).unwrap();
        let wd: WeightedDiagram = "F4:2000".parse().unwrap();
        let (ss, c) = f4.zero_weight_levi(&wd).unwrap();
        assert_eq!(ss.to_string(), "C3");
        assert_eq!(c, 1);
        let wd: WeightedDiagram = "F4:0002".parse().unwrap();
        assert_eq!(f4.zero_weight_levi(&wd).unwrap().0.to_string(), "B3");
        assert_eq!(f4.orbit_dim_from_diagram(&wd).unwrap(), 30);
        let a2 = RootSystem::build(t("A2")).unwrap();
        let (ss, c) = a2.zero_weight_levi(&"A2:22".parse().unwrap()).unwrap();
        assert!(ss.is_empty());
        assert_eq!(c, 2);
        assert_eq!(a2.orbit_dim_from_diagram(&"A2:22".parse().unwrap()).unwrap(), 6);
        let a3 = RootSystem::build(t("A3")).unwrap();
        assert_eq!(a3.orbit_dim_from_diagram(&"A3:020".parse().unwrap()).unwrap(), 8);
        assert_eq!(a3.orbit_dim_from_diagram(&"A3:101".parse().unwrap()), Err(RootError::NotEven));
    }

    #[test]
    fn semisimple_type_text() {
        let s: SemisimpleType = "A2+3A1".parse().unwrap();
        assert_eq!(s.rank(), 5);
        assert_eq!(s.to_string(), "A2+3A1");
        assert_eq!("2G2".parse::<SemisimpleType>().unwrap().rank(), 4);
    }
}
