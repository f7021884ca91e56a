//! Embedded tables of excellent orbits: exceptional rows given by weighted
//! diagrams and classical rows given as parametric families of partitions.
//! Every recomputable column is checked at load.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::pairs::{Check, Report};
use crate::partition::{
    center_dim_of_levi, levi_of_even_orbit, reductive_centralizer, validate_partition, AlgebraDescriptor,
    ClassicalFamily, Family, FactorFamily, Partition,
};
use crate::roots::{CartanType, RootSystem, SemisimpleType, WeightedDiagram};

const TABLES: &str = include_str!("../data/tables.jsonl");
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("data corruption in record {id}: {reason}")]
    DataCorruption { id: String, reason: String },
    #[error("no record for {algebra} {orbit}")]
    NotFound { algebra: String, orbit: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DimA {
    Value(usize),
    Formula(String),
}

impl fmt::Display for DimA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimA::Value(v) => write!(f, "{v}"),
            DimA::Formula(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRecord {
    pub schema: u32,
    pub id: String,
    pub algebra: String,
    pub orbit_label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagram: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<String>,
    pub levi_ss: String,
    pub k: String,
    pub dim_a: DimA,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conditions: Option<String>,
    pub pn_pair_partner: Option<String>,
    pub nonspecial_flag: Option<bool>,
    pub note: Option<String>,
}

impl OrbitRecord {
    pub fn is_exceptional(&self) -> bool {
        self.diagram.is_some()
    }

    pub fn weighted_diagram(&self) -> Option<WeightedDiagram> {
        self.diagram.as_ref().and_then(|d| d.parse().ok())
    }
}

/// Orbit label with decorations removed, read as a semisimple type.
pub fn label_type(label: &str) -> Option<SemisimpleType> {
    let cleaned: String = label.replace("''", "").chars().filter(|c| !matches!(c, '~' | '[' | ']')).collect();
    cleaned.parse().ok()
}

fn corrupt(id: &str, reason: impl Into<String>) -> CatalogError {
    CatalogError::DataCorruption { id: id.into(), reason: reason.into() }
}

pub fn parse_tables(text: &str) -> Result<Vec<OrbitRecord>, CatalogError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let rec: OrbitRecord = serde_json::from_str(line).map_err(|e| corrupt(&format!("line {}", i + 1), e.to_string()))?;
        if rec.schema != SCHEMA_VERSION {
            return Err(corrupt(&rec.id, format!("schema {}", rec.schema)));
        }
        out.push(rec);
    }
    Ok(out)
}

/// Parses `text` and fails on the first failed consistency check.
pub fn load_tables_from(text: &str) -> Result<Vec<OrbitRecord>, CatalogError> {
    let recs = parse_tables(text)?;
    let rep = consistency_report_for(&recs);
    if let Some(c) = rep.checks.iter().find(|c| !c.pass) {
        let id = c.name.split(':').next().unwrap_or("?").to_string();
        return Err(corrupt(&id, c.claim.clone()));
    }
    Ok(recs)
}

pub fn load_tables() -> Result<Vec<OrbitRecord>, CatalogError> {
    load_tables_from(TABLES)
}

// ---------------------------------------------------------------------------
// Classical families

/// The five parametric classical rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassicalRow {
    /// `sl_{nm}`, `(n^m)`, `n ≥ 2`.
    SlRect,
    /// `sp_{2nm}`, `((2n)^m)`, `m ≠ 2`.
    SpEven,
    /// `sp_{2(nm+l)}`, `(m^{2n}, 1^{2l})`, `m` odd.
    SpOdd,
    /// `so_{nm}`, `(m^n)`, `m, n` even.
    SoEven,
    /// `so_{nm+l}`, `(m^n, 1^l)`, `m` odd, `n ≠ 2`, `l ≠ 2`.
    SoOdd,
}

impl ClassicalRow {
    pub const ALL: [ClassicalRow; 5] = [Self::SlRect, Self::SpEven, Self::SpOdd, Self::SoEven, Self::SoOdd];

    pub fn id(self) -> &'static str {
        match self {
            Self::SlRect => "C1",
            Self::SpEven => "C2",
            Self::SpOdd => "C3",
            Self::SoEven => "C4",
            Self::SoOdd => "C5",
        }
    }

    pub fn family(self) -> Family {
        match self {
            Self::SlRect => Family::SL,
            Self::SpEven | Self::SpOdd => Family::SP,
            Self::SoEven | Self::SoOdd => Family::SO,
        }
    }

    /// Whether `(n, m, l)` satisfies the side conditions of the row.
    pub fn admits(self, n: usize, m: usize, l: usize) -> bool {
        if n == 0 || m == 0 {
            return false;
        }
        match self {
            Self::SlRect => n >= 2 && l == 0,
            Self::SpEven => m != 2 && l == 0,
            Self::SpOdd => m % 2 == 1 && m >= 3,
            Self::SoEven => m.is_multiple_of(2) && n.is_multiple_of(2) && l == 0,
            Self::SoOdd => m % 2 == 1 && m >= 3 && n != 2 && l != 2,
        }
    }

    /// The orbit for `(n, m, l)` ignoring the side conditions.
    pub fn orbit(self, n: usize, m: usize, l: usize) -> (ClassicalFamily, Partition) {
        let rep = |d: usize, r: usize| std::iter::repeat_n(d, r);
        let (fam, parts): (ClassicalFamily, Vec<usize>) = match self {
            Self::SlRect => (ClassicalFamily::sl(n * m), rep(n, m).collect()),
            Self::SpEven => (ClassicalFamily::sp(2 * n * m), rep(2 * n, m).collect()),
            Self::SpOdd => (ClassicalFamily::sp(2 * (n * m + l)), rep(m, 2 * n).chain(rep(1, 2 * l)).collect()),
            Self::SoEven => (ClassicalFamily::so(n * m), rep(m, n).collect()),
            Self::SoOdd => (ClassicalFamily::so(n * m + l), rep(m, n).chain(rep(1, l)).collect()),
        };
        (fam, Partition::from_unsorted(parts))
    }

    /// Tabulated `𝔨`.
    pub fn k(self, n: usize, m: usize, l: usize) -> AlgebraDescriptor {
        let d = AlgebraDescriptor::new();
        match self {
            Self::SlRect => d.with(FactorFamily::Sl, m, 1),
            Self::SpEven => d.with(FactorFamily::So, m, 1),
            Self::SpOdd => d.with(FactorFamily::Sp, 2 * n, 1).with(FactorFamily::Sp, 2 * l, 1),
            Self::SoEven => d.with(FactorFamily::Sp, n, 1),
            Self::SoOdd => d.with(FactorFamily::So, n, 1).with(FactorFamily::So, l, 1),
        }
    }

    /// Tabulated `[ℓ, ℓ]`.
    pub fn levi_ss(self, n: usize, m: usize, l: usize) -> AlgebraDescriptor {
        let d = AlgebraDescriptor::new();
        match self {
            Self::SlRect => d.with(FactorFamily::Sl, m, n),
            Self::SpEven => d.with(FactorFamily::Sl, m, n),
            Self::SpOdd => d.with(FactorFamily::Sl, 2 * n, (m - 1) / 2).with(FactorFamily::Sp, 2 * (n + l), 1),
            Self::SoEven => d.with(FactorFamily::Sl, n, m / 2),
            Self::SoOdd => d.with(FactorFamily::Sl, n, (m - 1) / 2).with(FactorFamily::So, n + l, 1),
        }
    }

    /// Tabulated `dim 𝒜`, corrected at the regular orbit `(m, 1)` of
    /// `so_{m+1}` where the center of the Levi gains an `so_2`.
    pub fn dim_a(self, n: usize, m: usize, l: usize) -> usize {
        match self {
            Self::SlRect => n - 1,
            Self::SpEven => n,
            Self::SpOdd => (m - 1) / 2,
            Self::SoEven => m / 2,
            Self::SoOdd if n == 1 && l == 1 => m.div_ceil(2),
            Self::SoOdd => (m - 1) / 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassicalInstance {
    pub row: ClassicalRow,
    pub params: (usize, usize, usize),
    pub algebra: ClassicalFamily,
    pub partition: Partition,
    pub k: AlgebraDescriptor,
    pub levi_ss: AlgebraDescriptor,
    pub dim_a: usize,
}

fn size_in_range(fam: ClassicalFamily, max_size: usize) -> bool {
    let min = if fam.family == Family::SO { 3 } else { 2 };
    fam.size >= min && fam.size <= max_size
}

/// All instances of `row` with algebra size at most `max_size` and a
/// nonzero orbit; `admissible` selects whether the side conditions hold.
pub fn row_instances(row: ClassicalRow, max_size: usize, admissible: bool) -> Vec<ClassicalInstance> {
    let mut out = Vec::new();
    for n in 1..=max_size {
        for m in 1..=max_size {
            for l in 0..=max_size {
                if row.admits(n, m, l) != admissible {
                    continue;
                }
                // rows without an l parameter only use l = 0
                if l > 0 && matches!(row, ClassicalRow::SlRect | ClassicalRow::SpEven | ClassicalRow::SoEven) {
                    continue;
                }
                let (fam, p) = row.orbit(n, m, l);
                if !size_in_range(fam, max_size) || p.is_zero_orbit() || !validate_partition(fam, &p) {
                    continue;
                }
                let inst = ClassicalInstance {
                    row,
                    params: (n, m, l),
                    algebra: fam,
                    partition: p,
                    k: row.k(n, m, l),
                    levi_ss: row.levi_ss(n, m, l),
                    dim_a: if admissible { row.dim_a(n, m, l) } else { 0 },
                };
                if !out.contains(&inst) {
                    out.push(inst);
                }
            }
        }
    }
    out
}

/// Every orbit of `family` covered by the classical rows, up to size
/// `max_size`.
pub fn classical_orbits(family: Family, max_size: usize) -> BTreeMap<(usize, Partition), ClassicalInstance> {
    let mut out = BTreeMap::new();
    for row in ClassicalRow::ALL.into_iter().filter(|r| r.family() == family) {
        for inst in row_instances(row, max_size, true) {
            out.entry((inst.algebra.size, inst.partition.clone())).or_insert(inst);
        }
    }
    out
}

/// Compares one instance with the partition formulas.
pub fn check_instance(inst: &ClassicalInstance) -> Vec<Check> {
    let (fam, p) = (inst.algebra, &inst.partition);
    let tag = format!("{}:{}{}", inst.row.id(), fam, p);
    let k_ok = reductive_centralizer(fam, p).map(|k| k.isomorphic(&inst.k)).unwrap_or(false);
    let levi_ok = levi_of_even_orbit(fam, p).map(|l| l.normalize().0 == inst.levi_ss.normalize().0).unwrap_or(false);
    let dim_ok = center_dim_of_levi(fam, p).map(|c| c == inst.dim_a).unwrap_or(false);
    vec![
        Check::new(&format!("{tag}:k"), &format!("k = {}", inst.k), k_ok),
        Check::new(&format!("{tag}:levi"), &format!("[l,l] = {}", inst.levi_ss), levi_ok),
        Check::new(&format!("{tag}:dim_a"), &format!("dim A = {}", inst.dim_a), dim_ok),
    ]
}

fn exceptional_checks(rec: &OrbitRecord, by_id: &BTreeMap<&str, &OrbitRecord>, rep: &mut Report) {
    let id = rec.id.as_str();
    let push = |rep: &mut Report, what: &str, claim: String, pass: bool| {
        rep.push(Check::new(&format!("{id}:{what}"), &claim, pass));
    };
    let Some(wd) = rec.weighted_diagram() else {
        push(rep, "diagram", format!("diagram {:?} parses", rec.diagram), false);
        return;
    };
    let ty: Option<CartanType> = rec.algebra.parse().ok();
    push(rep, "algebra", format!("diagram type matches {}", rec.algebra), ty == Some(wd.cartan_type));
    push(rep, "even", format!("{wd} has labels in {{0,2}}"), wd.is_even());
    let levi: Option<SemisimpleType> = rec.levi_ss.parse().ok();
    let k: Option<SemisimpleType> = rec.k.parse().ok();
    push(rep, "parse", "[l,l] and k parse as semisimple types".into(), levi.is_some() && k.is_some());
    let DimA::Value(dim_a) = rec.dim_a else {
        push(rep, "dim_a", "dim A is an integer".into(), false);
        return;
    };
    let Ok(rs) = RootSystem::build(wd.cartan_type) else {
        push(rep, "root_system", "root system builds".into(), false);
        return;
    };
    let computed = rs.zero_weight_levi(&wd).ok();
    let ok = matches!((&computed, &levi), (Some((s, _)), Some(l)) if s == l);
    let shown = computed.as_ref().map(|(s, c)| format!("{s} with center {c}")).unwrap_or_default();
    push(rep, "levi", format!("zero-weight Levi of {wd} is {} (computed {shown})", rec.levi_ss), ok);
    let center_ok = matches!(&computed, Some((_, c)) if *c == dim_a);
    push(rep, "center", format!("dim A = {dim_a} equals the center of the Levi"), center_ok);
    let parity = rs.orbit_dim_from_diagram(&wd).map(|d| d % 2 == 0).unwrap_or(false);
    push(rep, "orbit_dim", "orbit dimension is even".into(), parity);
    if let Some(pid) = &rec.pn_pair_partner {
        let Some(partner) = by_id.get(pid.as_str()) else {
            push(rep, "partner", format!("partner {pid} exists"), false);
            return;
        };
        let back = partner.pn_pair_partner.as_deref() == Some(id) && partner.algebra == rec.algebra;
        push(rep, "partner", format!("partner {pid} points back"), back);
        let pk: Option<SemisimpleType> = partner.k.parse().ok();
        let rank_ok = pk.map(|t| t.rank() == dim_a).unwrap_or(false);
        push(rep, "partner_rank", format!("dim A = {dim_a} equals rk k of {pid} ({})", partner.k), rank_ok);
        let pl: Option<SemisimpleType> = partner.levi_ss.parse().ok();
        let dual = label_type(&rec.orbit_label).is_some() && label_type(&rec.orbit_label) == pl;
        push(rep, "duality", format!("label {} equals [l,l] of {pid} ({})", rec.orbit_label, partner.levi_ss), dual);
    }
}

pub fn consistency_report_for(recs: &[OrbitRecord]) -> Report {
    let mut rep = Report::new("tables");
    let by_id: BTreeMap<&str, &OrbitRecord> = recs.iter().map(|r| (r.id.as_str(), r)).collect();
    rep.push(Check::new("ids", "record ids are unique", by_id.len() == recs.len()));
    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    for rec in recs.iter().filter(|r| r.is_exceptional()) {
        *counts.entry(rec.algebra.as_str()).or_default() += 1;
        exceptional_checks(rec, &by_id, &mut rep);
    }
    let expected = [("E6", 2), ("E7", 9), ("E8", 6), ("F4", 2)];
    let ok = expected.iter().all(|(a, c)| counts.get(a) == Some(c)) && counts.len() == 4;
    rep.push(Check::new("counts", "non-regular excellent orbits number 2, 2, 9, 6 in F4, E6, E7, E8", ok));

    for row in ClassicalRow::ALL {
        let present = by_id.contains_key(row.id());
        rep.push(Check::new(&format!("{}:present", row.id()), "classical row is present", present));
        // three small parameter choices per row
        for inst in row_instances(row, 12, true).into_iter().take(3) {
            for c in check_instance(&inst) {
                rep.push(c);
            }
        }
    }
    rep
}

/// Runs every recomputable column of the shipped tables.
pub fn consistency_report() -> Report {
    match parse_tables(TABLES) {
        Ok(recs) => consistency_report_for(&recs),
        Err(e) => {
            let mut rep = Report::new("tables");
            rep.push(Check::new("parse", &e.to_string(), false));
            rep
        }
    }
}

/// Finds an exceptional row by label or diagram labels, or a classical
/// orbit by partition, returned with concrete values.
pub fn lookup(algebra: &str, orbit: &str) -> Result<OrbitRecord, CatalogError> {
    let not_found = || CatalogError::NotFound { algebra: algebra.into(), orbit: orbit.into() };
    let recs = load_tables()?;
    if let Ok(ty) = algebra.parse::<CartanType>() {
        let ty = ty.to_string();
        return recs
            .into_iter()
            .filter(|r| r.is_exceptional() && r.algebra == ty)
            .find(|r| {
                r.orbit_label == orbit || r.weighted_diagram().map(|d| d.label_string() == orbit || d.to_string() == orbit).unwrap_or(false)
            })
            .ok_or_else(not_found);
    }
    let fam: ClassicalFamily = algebra.parse().map_err(|_| not_found())?;
    let p: Partition = orbit.parse().map_err(|_| not_found())?;
    let inst = classical_orbits(fam.family, fam.size).remove(&(fam.size, p)).ok_or_else(not_found)?;
    let template = recs.into_iter().find(|r| r.id == inst.row.id()).ok_or_else(not_found)?;
    let (n, m, l) = inst.params;
    Ok(OrbitRecord {
        id: format!("{}[n={n},m={m},l={l}]", template.id),
        algebra: fam.to_string(),
        partition: Some(inst.partition.to_string()),
        levi_ss: inst.levi_ss.to_string(),
        k: inst.k.to_string(),
        dim_a: DimA::Value(inst.dim_a),
        ..template
    })
}

/// Aligned text rendering of the tables.
pub fn render_text(recs: &[OrbitRecord]) -> String {
    let header = ["id", "algebra", "orbit", "label", "[l,l]", "k", "dim A"];
    let rows: Vec<[String; 7]> = recs
        .iter()
        .map(|r| {
            [
                r.id.clone(),
                r.algebra.clone(),
                r.diagram.clone().or_else(|| r.partition.clone()).unwrap_or_default(),
                r.orbit_label.clone(),
                r.levi_ss.clone(),
                r.k.clone(),
                r.dim_a.to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(|h| h.chars().count());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        cells.iter().zip(widths).map(|(c, w)| format!("{c:<w$}")).collect::<Vec<_>>().join("  ").trim_end().to_string()
    };
    let mut out = vec![line(header.to_vec())];
    out.extend(rows.iter().map(|r| line(r.iter().map(String::as_str).collect())));
    out.join("\n") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_tables_load() {
        let recs = load_tables().unwrap();
        assert_eq!(recs.iter().filter(|r| r.is_exceptional()).count(), 19);
        assert_eq!(recs.len(), 24);
    }

    #[test]
    fn labels_strip_decorations() {
        assert_eq!(label_type("[3A1]''"), "3A1".parse().ok());
        assert_eq!(label_type("A2~"), "A2".parse().ok());
    }

    #[test]
    fn corrupted_levi_is_rejected() {
        let bad = TABLES.replacen("\"levi_ss\":\"B3\"", "\"levi_ss\":\"C3\"", 1);
        assert!(matches!(load_tables_from(&bad), Err(CatalogError::DataCorruption { .. })));
    }
}
