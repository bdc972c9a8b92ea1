//! Command drivers for the `ambitoric` binary.

pub mod report;
pub mod specfile;

use std::fmt;
use std::path::{Path, PathBuf};
use std::time::Instant;

use ambitoric::algebra::ExactScalar;
use ambitoric::binary_forms::BinaryForm;
use ambitoric::builder::{build, build_pd, AmbitoricSpec, FormType, PdParams};
use ambitoric::classifier::{calabi_classify, classify, csc_em_check, csc_table_conditions};
use ambitoric::experiment::table_experiment;
use ambitoric::tensor::{bach, curvature, weyl_split, ChartTensor, Metric};
use ambitoric::Error;

use report::{Format, Report};
use specfile::{parse_list, parse_spec, to_spec_text, ParseError};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VERDICT: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Malformed(_) | Error::UnknownVariable(_) => EXIT_PARSE,
            Error::DegenerateInput(_) | Error::DegenerateMetric | Error::NotOrthogonal(_) | Error::Pole { .. } => {
                EXIT_DEGENERATE
            }
            Error::Resource { .. } => EXIT_RESOURCE,
            _ => EXIT_VERDICT,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError { code: EXIT_PARSE, message: format!("parse error: {e}") }
    }
}

/// Rendered output and exit code of a successful run.
#[derive(Debug)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

/// Criteria that are identities of the construction and must always hold.
const IDENTITIES: [&str; 8] = [
    "build",
    "kahler+",
    "kahler-",
    "scalar-curvature",
    "einstein",
    "bachflat-volume",
    "einstein-maxwell",
    "killing-tensor-barycentric",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    Extremal,
    BachFlat,
    Csc,
    Einstein,
}

impl Expectation {
    pub fn criterion(self) -> &'static str {
        match self {
            Expectation::Extremal => "extremal",
            Expectation::BachFlat => "bachflat",
            Expectation::Csc => "csc",
            Expectation::Einstein => "einstein",
        }
    }
}

pub fn read_spec(path: &Path) -> Result<(AmbitoricSpec, String), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError { code: EXIT_PARSE, message: format!("cannot read {}: {e}", path.display()) })?;
    let spec = parse_spec(&text)?;
    Ok((spec, text))
}

fn classification_report(spec: &AmbitoricSpec) -> Result<Report, CliError> {
    let c = classify(spec)?;
    Ok(Report::from_classification(to_spec_text(spec), &c))
}

/// `classify FILE`: the full report; fails only if an identity fails.
pub fn run_classify(path: &Path, format: Format) -> Result<Outcome, CliError> {
    let (spec, _) = read_spec(path)?;
    let report = classification_report(&spec)?;
    let ok = report.sections.iter().filter(|s| IDENTITIES.contains(&s.name.as_str())).all(|s| s.holds);
    Ok(Outcome { output: report.emit(format), code: if ok { EXIT_PASS } else { EXIT_VERDICT } })
}

/// `check FILE`: like `classify`, and additionally every expected criterion
/// must be present and hold.
pub fn run_check(path: &Path, expect: &[Expectation], format: Format) -> Result<Outcome, CliError> {
    let (spec, _) = read_spec(path)?;
    let mut report = classification_report(&spec)?;
    let mut ok = report.sections.iter().filter(|s| IDENTITIES.contains(&s.name.as_str())).all(|s| s.holds);
    for e in expect {
        match report.section(e.criterion()) {
            Some(s) => ok &= s.holds,
            None => {
                ok = false;
                report.notes.push(format!("expected `{}` but it does not apply", e.criterion()));
            }
        }
    }
    Ok(Outcome { output: report.emit(format), code: if ok { EXIT_PASS } else { EXIT_VERDICT } })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensorKind {
    Ricci,
    Scalar,
    Weyl,
    Bach,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    Plus,
    Minus,
    Barycentric,
}

fn list_components(out: &mut String, label: &str, t: &ChartTensor) {
    let names = t.chart().var_names();
    let n = t.dim();
    let rank = t.valence().0 + t.valence().1;
    let mut any = false;
    for k in 0..n.pow(rank as u32) {
        let idx: Vec<usize> = (0..rank).rev().map(|r| (k / n.pow(r as u32)) % n).collect();
        let c = t.get(&idx);
        if c.is_zero() {
            continue;
        }
        // only one representative of each symmetry class for rank 2 and 4
        if (rank == 2 && idx[0] > idx[1])
            || (rank == 4 && (idx[0] >= idx[1] || idx[2] >= idx[3] || (idx[0], idx[1]) > (idx[2], idx[3])))
        {
            continue;
        }
        any = true;
        let sub: Vec<&str> = idx.iter().map(|&i| t.chart().name(i)).collect();
        out.push_str(&format!("{label}[{}] = {}\n", sub.join(","), c.display_with(&names)));
    }
    if !any {
        out.push_str(&format!("{label} = 0\n"));
    }
}

/// `curvature FILE --tensor T`: nonzero components of a curvature tensor.
pub fn run_curvature(path: &Path, kind: TensorKind, which: Which) -> Result<Outcome, CliError> {
    let (spec, _) = read_spec(path)?;
    let model = build(&spec)?;
    let g: &Metric = match which {
        Which::Plus => &model.gplus,
        Which::Minus => &model.gminus,
        Which::Barycentric => &model.g0,
    };
    let mut out = String::new();
    match kind {
        TensorKind::Ricci => list_components(&mut out, "Ric", &curvature(g)?.ricci),
        TensorKind::Scalar => {
            let s = curvature(g)?.scalar;
            out.push_str(&format!("s = {}\n", s.display_with(&g.chart().var_names())));
        }
        TensorKind::Weyl => {
            let w = weyl_split(g)?;
            list_components(&mut out, "W+", &w.wplus);
            list_components(&mut out, "W-", &w.wminus);
        }
        TensorKind::Bach => list_components(&mut out, "B", &bach(g)?),
    }
    Ok(Outcome { output: out, code: EXIT_PASS })
}

/// `table --type T --trials N --seed S`. A failing instance is written to
/// `witness_dir` as a spec file.
pub fn run_table(form_type: FormType, trials: usize, seed: u64, witness_dir: &Path) -> Result<Outcome, CliError> {
    if trials == 0 {
        return Err(CliError { code: EXIT_PARSE, message: "--trials must be at least 1".into() });
    }
    let t = Instant::now();
    let outcome = table_experiment(form_type, trials, seed)?;
    let mut out = format!("type {form_type}, trials {trials}, seed {seed}\n");
    let n = outcome.records.len();
    out.push_str(&format!("instances {n}\n"));
    out.push_str(&format!(
        "extremal {} / non-extremal {}\n",
        outcome.count(|r| r.extremal),
        outcome.count(|r| !r.extremal)
    ));
    out.push_str(&format!(
        "bach-flat {} / not bach-flat {}\n",
        outcome.count(|r| r.bach_flat == Some(true)),
        outcome.count(|r| r.bach_flat == Some(false))
    ));
    let code = match &outcome.failure {
        None => {
            out.push_str("all biconditionals hold\n");
            EXIT_PASS
        }
        Some((spec, why)) => {
            let file: PathBuf = witness_dir.join(format!("witness-{form_type}-seed{seed}.spec"));
            let body = format!("# {why}\n{}", to_spec_text(spec));
            std::fs::write(&file, body)
                .map_err(|e| CliError { code: EXIT_VERDICT, message: format!("cannot write witness: {e}") })?;
            out.push_str(&format!("FAILED: {why}\nwitness written to {}\n", file.display()));
            EXIT_VERDICT
        }
    };
    out.push_str(&format!("elapsed {} ms\n", t.elapsed().as_millis()));
    Ok(Outcome { output: out, code })
}

/// `pd --params h,kappa,sigma,delta,gamma,epsilon,lambda`.
pub fn run_pd(params: &str, format: Format) -> Result<Outcome, CliError> {
    let values = parse_list(params, 7)?;
    let pd = PdParams::from_slice(&values)?;
    let spec = build_pd(&pd);
    let model = build(&spec)?;
    let p = spec.p.clone().expect("pd spec carries p");
    let mut report = Report { spec: to_spec_text(&spec), ..Default::default() };
    let t = Instant::now();
    let conds = csc_table_conditions(&spec)?;
    let bad: Vec<String> = conds.iter().filter(|c| !c.holds()).map(|c| c.to_string()).collect();
    report.push("csc-conditions", bad.is_empty(), if bad.is_empty() { "zero".into() } else { bad.join(", ") }, t.elapsed().as_millis());
    let t = Instant::now();
    let csc = csc_em_check(&model, &p)?;
    report.push("csc", csc.holds, csc.witness.clone(), t.elapsed().as_millis());
    if csc.holds {
        report.push("einstein-maxwell", csc.em_residual_zero, if csc.em_residual_zero { "zero" } else { "nonzero" }, 0);
        if let Some(c) = &csc.c {
            report.notes.push(format!("Einstein-Maxwell constant c = {c}"));
        }
    }
    let ok = report.sections.iter().all(|s| s.holds);
    Ok(Outcome { output: report.emit(format), code: if ok { EXIT_PASS } else { EXIT_VERDICT } })
}

/// `calabi --V v0,v1,v2,v3,v4 --k K` with `V = v0 z^4 + ... + v4`.
pub fn run_calabi(v: &str, k: &str, format: Format) -> Result<Outcome, CliError> {
    let vs = parse_list(v, 5)?;
    let k: ExactScalar = parse_list(k, 1)?.remove(0);
    let poly = BinaryForm::quartic([vs[0].clone(), vs[1].clone(), vs[2].clone(), vs[3].clone(), vs[4].clone()]);
    let t = Instant::now();
    let r = calabi_classify(&poly, &k)?;
    let ms = t.elapsed().as_millis();
    let mut report = Report {
        spec: format!("V: {}\nk: {k}", vs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")),
        ..Default::default()
    };
    let pairs = [
        ("extremal", r.flags.extremal, r.oracle.extremal),
        ("bachflat", r.flags.bach_flat, r.oracle.bach_flat),
        ("csc", r.flags.csc, r.oracle.csc),
        ("kahler-einstein", r.flags.kahler_einstein, r.oracle.kahler_einstein),
    ];
    let mut agree = true;
    for (name, flag, oracle) in pairs {
        agree &= flag == oracle;
        let digest = if flag == oracle { "oracle agrees".to_string() } else { format!("oracle says {oracle}") };
        report.push(name, flag, digest, ms);
    }
    if let Some(res) = &r.einstein_residual {
        agree &= res.is_zero();
        report.push("einstein", res.is_zero(), res.digest(), 0);
    }
    report.notes.push(format!("s = {}", r.scalar.display_with(&["z", "u", "v"])));
    Ok(Outcome { output: report.emit(format), code: if agree { EXIT_PASS } else { EXIT_VERDICT } })
}
