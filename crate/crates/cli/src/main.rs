use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use nilpairs::catalog::{self, consistency_report, load_tables, lookup, render_text};
use nilpairs::lie::{centralizer_dim_formula, LieAlgebraModel};
use nilpairs::pairs::{
    classify_pair, construct_rect_apn_sp, construct_rect_pn_sl, construct_sl3_pair, construct_sp4_examples,
    construct_sp4n_series, construct_spr_sp, dual_pair_check, excellent_check_triple, richardson_check, sheet_section,
    theta_involution, verify_spr, verify_structure, AlmostSubtype, Check, Quadruple, Report,
};
use nilpairs::partition::{
    center_dim_of_levi, double_centralizer, dominance_leq, enumerate_excellent, is_excellent, is_even_orbit,
    levi_of_even_orbit, partitions_of, reductive_centralizer, transpose, validate_partition,
    weighted_diagram_from_partition, ClassicalFamily, Family, Partition,
};
use nilpairs::roots::{CartanType, RootSystem, WeightedDiagram};

#[derive(Parser)]
#[command(name = "nilpairs", version, about = "Nilpotent pairs, dual pairs and excellent sheets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for generic-rank sampling.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants and excellence of a nilpotent orbit.
    Classify {
        #[arg(long)]
        algebra: String,
        /// Comma separated parts, for classical algebras.
        #[arg(long)]
        partition: Option<String>,
        /// Weighted diagram labels, for exceptional algebras.
        #[arg(long)]
        diagram: Option<String>,
        /// Recompute excellence with matrices and compare.
        #[arg(long)]
        check: bool,
    },
    /// Excellent orbits of a classical family up to a size.
    Enumerate {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 8)]
        max: usize,
        /// Confirm every orbit with the matrix engine.
        #[arg(long)]
        check: bool,
    },
    /// Structural checks for a fixture pair.
    Verify(FixtureArgs),
    /// Dual pair report for a fixture pair.
    DualPair(FixtureArgs),
    /// Section of the sheet through an excellent orbit.
    Section {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        partition: String,
    },
    /// Dump the embedded tables.
    Tables {
        /// Run the full consistency report.
        #[arg(long)]
        check: bool,
    },
    /// Transpose of partitions and its order reversal under dominance.
    Duality {
        #[arg(long)]
        partition: Option<String>,
        /// Check all partitions of every N up to this bound.
        #[arg(long)]
        max: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Sl,
    Sp,
    So,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Sl => Family::SL,
            FamilyArg::Sp => Family::SP,
            FamilyArg::So => Family::SO,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Fixture {
    Sp4n,
    Sp4Z,
    Sp4Nonz,
    Sl3,
    RectPnSl,
    RectApnSp,
    Spr,
}

#[derive(clap::Args)]
struct FixtureArgs {
    #[arg(long, value_enum)]
    fixture: Fixture,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Tail partition for the spr fixture.
    #[arg(long)]
    tail: Option<String>,
}

enum CliError {
    Usage(String),
    Failed(Vec<String>),
}

type CliResult = Result<Output, CliError>;

struct Output {
    text: String,
    json: Value,
    failed: Vec<String>,
}

impl Output {
    fn new(text: String, json: Value) -> Self {
        Self { text, json, failed: Vec::new() }
    }

    fn with_report(mut self, rep: &Report) -> Self {
        self.failed.extend(rep.failed().into_iter().map(String::from));
        self
    }
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn parse_partition(s: &str) -> Result<Partition, CliError> {
    s.parse().map_err(usage)
}

fn model_for(fam: ClassicalFamily, seed: Option<u64>) -> LieAlgebraModel {
    let m = LieAlgebraModel::new(fam);
    match seed {
        Some(s) => m.with_seed(s),
        None => m,
    }
}

fn render_checks(rep: &Report) -> String {
    rep.checks
        .iter()
        .map(|c| format!("  [{}] {}: {}", if c.pass { "pass" } else { "FAIL" }, c.name, c.claim))
        .collect::<Vec<_>>()
        .join("\n")
}

fn classify_classical(fam: ClassicalFamily, p: &Partition, check: bool, seed: Option<u64>) -> CliResult {
    if !validate_partition(fam, p) {
        return Err(CliError::Usage(format!("{p} is not a valid partition for {fam}")));
    }
    let even = is_even_orbit(p);
    let diagram = weighted_diagram_from_partition(fam, p).map_err(usage)?;
    let k = reductive_centralizer(fam, p).map_err(usage)?;
    let cert = is_excellent(fam, p).map_err(usage)?;
    let orbit_dim = fam.dim() - centralizer_dim_formula(fam, p);
    let levi = levi_of_even_orbit(fam, p).ok();
    let center = center_dim_of_levi(fam, p).ok();
    let kdual = double_centralizer(fam, p).ok();
    let dim_a = cert.verdict.then_some(cert.dim_center_levi);
    let row = lookup(&fam.to_string(), &p.to_string()).ok().map(|r| r.id);
    let mut json = json!({
        "algebra": fam.to_string(),
        "partition": p,
        "even": even,
        "diagram": diagram,
        "orbit_dim": orbit_dim,
        "levi": levi.as_ref().map(|d| d.to_string()),
        "levi_center_dim": center,
        "k": k.to_string(),
        "double_centralizer": kdual.as_ref().map(|d| d.to_string()),
        "excellent": cert.verdict,
        "dim_a": dim_a,
        "certificate": cert,
        "table_row": row,
    });
    let mut lines = vec![
        format!("algebra: {fam}"),
        format!("partition: {p}"),
        format!("even: {even}"),
        format!("diagram: {}", diagram.iter().map(u8::to_string).collect::<String>()),
        format!("orbit dim: {orbit_dim}"),
        format!("k = {k}"),
    ];
    if let Some(l) = &levi {
        lines.push(format!("levi = {l}"));
    }
    if let Some(d) = &kdual {
        lines.push(format!("z(k) = {d}"));
    }
    lines.push(format!(
        "dim c = {}, rank z(k) = {}, quasi-excellent = {}",
        cert.dim_center_levi, cert.rank_double_centralizer, cert.quasi_excellent
    ));
    lines.push(format!("excellent = {}", cert.verdict));
    if let Some(d) = dim_a {
        lines.push(format!("dim A = {d}"));
    }
    let mut failed = Vec::new();
    if check {
        let model = model_for(fam, seed);
        let t = model.triple_from_partition(p).map_err(usage)?;
        let ex = excellent_check_triple(&model, &t).map_err(usage)?;
        let agrees = ex.certificate.same_invariants(&cert);
        if !agrees {
            failed.push("matrix_agreement".to_string());
        }
        failed.extend(ex.report.failed().into_iter().map(String::from));
        lines.push(format!("matrix engine agrees: {agrees}"));
        if !ex.report.checks.is_empty() {
            lines.push(render_checks(&ex.report));
        }
        json["matrix"] = json!({ "certificate": ex.certificate, "agrees": agrees, "checks": ex.report.checks });
    }
    Ok(Output { text: lines.join("\n"), json, failed })
}

fn classify_exceptional(ty: CartanType, diagram: &str) -> CliResult {
    let wd: WeightedDiagram = format!("{ty}:{diagram}").parse().map_err(usage)?;
    let rs = RootSystem::build(ty).map_err(usage)?;
    let (levi, center) = rs.zero_weight_levi(&wd).map_err(usage)?;
    let orbit_dim = rs.orbit_dim_from_diagram(&wd).ok();
    let rec = lookup(&ty.to_string(), &wd.label_string()).ok();
    let json = json!({
        "algebra": ty.to_string(),
        "diagram": wd.label_string(),
        "even": wd.is_even(),
        "levi_ss": levi.to_string(),
        "levi_center_dim": center,
        "orbit_dim": orbit_dim,
        "table_row": rec,
    });
    let mut lines = vec![
        format!("algebra: {ty}"),
        format!("diagram: {}", wd.label_string()),
        format!("even: {}", wd.is_even()),
        format!("[l,l] = {levi}, center dim {center}"),
    ];
    if let Some(d) = orbit_dim {
        lines.push(format!("orbit dim: {d}"));
    }
    match &rec {
        Some(r) => lines.push(format!("excellent: {} ({}), k = {}, dim A = {}", r.orbit_label, r.id, r.k, r.dim_a)),
        None => lines.push("not among the tabulated non-regular excellent orbits".into()),
    }
    Ok(Output::new(lines.join("\n"), json))
}

fn classify(algebra: &str, partition: Option<&str>, diagram: Option<&str>, check: bool, seed: Option<u64>) -> CliResult {
    if let Ok(fam) = algebra.parse::<ClassicalFamily>() {
        let p = partition.ok_or_else(|| CliError::Usage("--partition is required for classical algebras".into()))?;
        return classify_classical(fam, &parse_partition(p)?, check, seed);
    }
    let ty: CartanType = algebra.parse().map_err(usage)?;
    let d = diagram.ok_or_else(|| CliError::Usage("--diagram is required for exceptional algebras".into()))?;
    classify_exceptional(ty, d)
}

fn enumerate(family: Family, max: usize, check: bool, seed: Option<u64>) -> CliResult {
    let orbits = enumerate_excellent(family, max);
    let agreement: Vec<Option<bool>> = if check {
        orbits
            .par_iter()
            .map(|o| {
                let model = model_for(o.algebra, seed);
                let t = model.triple_from_partition(&o.partition).ok()?;
                let ex = excellent_check_triple(&model, &t).ok()?;
                Some(ex.certificate.same_invariants(&o.certificate) && ex.report.all_pass())
            })
            .collect()
    } else {
        vec![None; orbits.len()]
    };
    let mut lines = Vec::new();
    let mut current: Option<ClassicalFamily> = None;
    for (o, a) in orbits.iter().zip(&agreement) {
        if current != Some(o.algebra) {
            lines.push(format!("{}:", o.algebra));
            current = Some(o.algebra);
        }
        let mark = match a {
            Some(true) => "  [matrix ok]",
            Some(false) => "  [matrix MISMATCH]",
            None => "",
        };
        lines.push(format!("  {}  dim A = {}{mark}", o.partition, o.certificate.dim_center_levi));
    }
    let failed: Vec<String> = orbits
        .iter()
        .zip(&agreement)
        .filter(|(_, a)| **a == Some(false))
        .map(|(o, _)| format!("{} {}", o.algebra, o.partition))
        .collect();
    let items: Vec<Value> = orbits
        .iter()
        .zip(&agreement)
        .map(|(o, a)| json!({ "algebra": o.algebra.to_string(), "partition": o.partition, "certificate": o.certificate, "matrix_agrees": a }))
        .collect();
    Ok(Output { text: lines.join("\n"), json: json!({ "family": family.name(), "max": max, "orbits": items }), failed })
}

fn build_fixture(args: &FixtureArgs, seed: Option<u64>) -> Result<Quadruple, CliError> {
    let need = |v: Option<usize>, name: &str| v.ok_or_else(|| CliError::Usage(format!("--{name} is required for this fixture")));
    let mut quad = match args.fixture {
        Fixture::Sp4n => construct_sp4n_series(need(args.n, "n")?).map_err(usage)?.quadruple,
        Fixture::Sp4Z => construct_sp4_examples().0,
        Fixture::Sp4Nonz => construct_sp4_examples().1,
        Fixture::Sl3 => construct_sl3_pair(),
        Fixture::RectPnSl => construct_rect_pn_sl(need(args.n, "n")?, need(args.m, "m")?).map_err(usage)?,
        Fixture::RectApnSp => construct_rect_apn_sp(need(args.k, "k")?, need(args.n, "n")?).map_err(usage)?,
        Fixture::Spr => {
            let tail = args.tail.as_deref().map(parse_partition).transpose()?;
            construct_spr_sp(need(args.m, "m")?, need(args.n, "n")?, args.l.unwrap_or(0), tail)
                .map_err(usage)?
                .quadruple()
                .map_err(usage)?
        }
    };
    if let Some(s) = seed {
        quad.model = quad.model.with_seed(s);
    }
    Ok(quad)
}

fn verify(args: &FixtureArgs, seed: Option<u64>) -> CliResult {
    if let Fixture::Spr = args.fixture {
        let tail = args.tail.as_deref().map(parse_partition).transpose()?;
        let need = |v: Option<usize>, name: &str| v.ok_or_else(|| CliError::Usage(format!("--{name} is required for this fixture")));
        let mut pair = construct_spr_sp(need(args.m, "m")?, need(args.n, "n")?, args.l.unwrap_or(0), tail).map_err(usage)?;
        if let Some(s) = seed {
            pair.model = pair.model.with_seed(s);
        }
        let rep = verify_spr(&pair).map_err(usage)?;
        let text = format!("fixture: {}\n{}", rep.fixture, render_checks(&rep));
        return Ok(Output::new(text, to_json(&rep)).with_report(&rep));
    }
    let quad = build_fixture(args, seed)?;
    let cls = classify_pair(&quad).map_err(|e| CliError::Failed(vec![format!("classification: {e}")]))?;
    let mut rep = verify_structure(&quad).map_err(|e| CliError::Failed(vec![e.to_string()]))?;
    let mut extra = json!({});
    if cls.subtype == Some(AlmostSubtype::NonZType) {
        let th = theta_involution(&quad).map_err(|e| CliError::Failed(vec![e.to_string()]))?;
        rep.push(Check::new("theta_fixed", "fixed algebra of the involution is semisimple of full rank with e principal", th.semisimple && th.principal));
        extra["theta_fixed_dim"] = json!(th.dim);
    }
    let rich = [1, 2].map(|i| richardson_check(&quad, i).ok());
    let mut text = format!(
        "fixture: {}\nkind: {:?}{}\ndim z(e1,e2) = {} (rank {})\n",
        quad.fixture,
        cls.kind,
        cls.subtype.map(|s| format!(" ({s:?})")).unwrap_or_default(),
        cls.dim_z,
        cls.rank
    );
    if let Some((a, b)) = &cls.extra_biweight {
        text.push_str(&format!("extra weight: ({a}, {b})\n"));
    }
    let weights: Vec<String> = cls.biweights.iter().map(|((a, b), d)| format!("({a},{b})x{d}")).collect();
    text.push_str(&format!("weights: {}\n", weights.join(" ")));
    text.push_str(&format!("richardson: e1 {:?}, e2 {:?}\n", rich[0], rich[1]));
    text.push_str(&render_checks(&rep));
    let json = json!({
        "fixture": rep.fixture,
        "classification": cls,
        "richardson": rich,
        "extra": extra,
        "checks": rep.checks,
    });
    Ok(Output::new(text, json).with_report(&rep))
}

fn dual_pair(args: &FixtureArgs, seed: Option<u64>) -> CliResult {
    let quad = build_fixture(args, seed)?;
    let rep = dual_pair_check(&quad).map_err(|e| CliError::Failed(vec![e.to_string()]))?;
    let mut checks = Report::new(quad.fixture.clone());
    checks.push(Check::new("commute", "[k1, k2] = 0", rep.commute));
    checks.push(Check::new("mutual", "k1 and k2 are mutual centralizers", rep.mutual));
    let summary = json!({
        "fixture": quad.fixture,
        "dim_k1": rep.dim_k1,
        "dim_k2": rep.dim_k2,
        "commute": rep.commute,
        "mutual": rep.mutual,
        "reductive": rep.reductive,
        "rectangular": rep.rectangular,
        "graded_surjective": rep.graded_surjective,
        "integral": rep.integral,
        "checks": checks.checks,
    });
    let text = format!(
        "fixture: {}\ndim k1 = {}, dim k2 = {}\ncommute = {}, mutual = {}, reductive = {}\nrectangular: {:?}\ngraded surjective = {}, integral = {}\n{}",
        quad.fixture,
        rep.dim_k1,
        rep.dim_k2,
        rep.commute,
        rep.mutual,
        rep.reductive,
        rep.rectangular,
        rep.graded_surjective,
        rep.integral,
        render_checks(&checks)
    );
    Ok(Output::new(text, summary).with_report(&checks))
}

fn section(algebra: &str, partition: &str, seed: Option<u64>) -> CliResult {
    let fam: ClassicalFamily = algebra.parse().map_err(usage)?;
    let p = parse_partition(partition)?;
    if !validate_partition(fam, &p) {
        return Err(CliError::Usage(format!("{p} is not a valid partition for {fam}")));
    }
    let model = model_for(fam, seed);
    let t = model.triple_from_partition(&p).map_err(usage)?;
    let s = sheet_section(&model, &t).map_err(|e| CliError::Failed(vec![e.to_string()]))?;
    let mut rep = Report::new(format!("{fam} {p}"));
    rep.push(Check::new("dimension", "dim A equals dim of the center of the Levi", s.dim == s.dim_center));
    rep.push(Check::new("orbit_dim", "sampled points have the orbit dimension of e", s.constant_orbit_dim()));
    rep.push(Check::new("semisimple", "sampled points act semisimply on z(k)", s.all_semisimple()));
    let text = format!(
        "{fam} {p}\ndim A = {}\norbit dim of e = {}\nsample orbit dims = {:?}\n{}",
        s.dim,
        s.expected_orbit_dim,
        s.sample_orbit_dims,
        render_checks(&rep)
    );
    let json = json!({
        "fixture": rep.fixture,
        "dim_a": s.dim,
        "dim_center": s.dim_center,
        "expected_orbit_dim": s.expected_orbit_dim,
        "sample_orbit_dims": s.sample_orbit_dims,
        "directions": s.directions,
        "base_point": s.base_point,
        "checks": rep.checks,
    });
    Ok(Output::new(text, json).with_report(&rep))
}

fn tables(check: bool) -> CliResult {
    if check {
        let rep = consistency_report();
        let text = format!("{} checks\n{}", rep.checks.len(), render_checks(&rep));
        return Ok(Output::new(text, to_json(&rep)).with_report(&rep));
    }
    let recs = load_tables().map_err(|e| CliError::Failed(vec![e.to_string()]))?;
    let (exceptional, classical): (Vec<_>, Vec<_>) = recs.iter().cloned().partition(|r| r.is_exceptional());
    let text = format!("{}\n{}", render_text(&exceptional), render_text(&classical));
    Ok(Output::new(text, json!({ "schema": catalog::SCHEMA_VERSION, "records": recs })))
}

fn duality(partition: Option<&str>, max: Option<usize>) -> CliResult {
    let mut lines = Vec::new();
    let mut json = json!({});
    let mut failed = Vec::new();
    if let Some(p) = partition {
        let p = parse_partition(p)?;
        let t = transpose(&p);
        lines.push(format!("{p} -> {t}"));
        json["partition"] = to_json(&p);
        json["transpose"] = to_json(&t);
    }
    let bound = max.or(if partition.is_none() { Some(8) } else { None });
    if let Some(max) = bound {
        let mut pairs = 0usize;
        for n in 1..=max {
            let ps = partitions_of(n);
            for p in &ps {
                if transpose(&transpose(p)) != *p {
                    failed.push(format!("involution {p}"));
                }
                for q in &ps {
                    let a = dominance_leq(p, q).map_err(usage)?;
                    let b = dominance_leq(&transpose(q), &transpose(p)).map_err(usage)?;
                    if a != b {
                        failed.push(format!("order {p} {q}"));
                    }
                    pairs += 1;
                }
            }
        }
        lines.push(format!("transpose is an order-reversing involution on {pairs} pairs up to N = {max}: {}", failed.is_empty()));
        json["max"] = json!(max);
        json["pairs"] = json!(pairs);
        json["pass"] = json!(failed.is_empty());
    }
    Ok(Output { text: lines.join("\n"), json, failed })
}

fn run(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Classify { algebra, partition, diagram, check } => {
            classify(algebra, partition.as_deref(), diagram.as_deref(), *check, cli.seed)
        }
        Command::Enumerate { family, max, check } => enumerate((*family).into(), *max, *check, cli.seed),
        Command::Verify(args) => verify(args, cli.seed),
        Command::DualPair(args) => dual_pair(args, cli.seed),
        Command::Section { algebra, partition } => section(algebra, partition, cli.seed),
        Command::Tables { check } => tables(*check),
        Command::Duality { partition, max } => duality(partition.as_deref(), *max),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            let body = match cli.format {
                Format::Text => out.text.trim_end().to_string(),
                Format::Json => serde_json::to_string_pretty(&out.json).expect("json"),
            };
            // a closed pipe is not an error for a batch report
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            if out.failed.is_empty() {
                ExitCode::SUCCESS
            } else {
                eprintln!("failed checks: {}", out.failed.join(", "));
                ExitCode::from(1)
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failed(names)) => {
            eprintln!("failed: {}", names.join(", "));
            ExitCode::from(1)
        }
    }
}
