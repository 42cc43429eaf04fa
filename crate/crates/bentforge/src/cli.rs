//! Command-line interface. Exit codes: 0 success, 1 mathematical
//! inconsistency, 2 usage error.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use bentforge_core::functions::{build_fq, build_q, build_q_with_beta, gray_map};
use bentforge_core::poly::c_from_set;
use bentforge_core::qbf::{
    admissible_specs, candidate_sets, enumerate_all, is_qbf_set, FamilyId, FamilySpec,
};
use bentforge_core::spectra::{classify, fourier_fwht, is_quaternary_bent, BinaryClass};
use bentforge_core::verify::{
    predicted_fq_class, predicted_gray_class, verify_with, Checks, DEFAULT_MAX_SPECTRAL_N,
};
use bentforge_core::{CoeffSet, FieldCtx, Params, RingCtx, TeichElem};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::formats::{
    enum_row, family_list, histogram_map, spectrum_pairs, write_csv, ExperimentalJson,
    FamilyRow, FunctionTable, ParamsJson, VerdictJson,
};
use crate::selftest::{self, MAX_SELFTEST_N};

/// Largest `n` accepted by `dump-tables`.
pub const MAX_DUMP_N: u32 = 16;

#[derive(Debug, Parser)]
#[command(name = "bentforge", version, about = "Quaternary bent functions from quadratic forms over GR(4,n)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build Q and report the gcd, rank and spectral verdicts.
    Check(CheckArgs),
    /// List QBF-sets for (m, k), or test a closed-form family.
    Enumerate(EnumerateArgs),
    /// Build the binary function f_Q and classify it.
    DeriveBinary(FunctionArgs),
    /// Build the Gray image of Q and classify it.
    Gray(FunctionArgs),
    /// Run the built-in randomized and exhaustive checks.
    Selftest(SelftestArgs),
    /// Print the field and ring tables for one n.
    DumpTables(DumpArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Gcd,
    Rank,
    Spectrum,
    All,
}

impl Method {
    fn checks(self) -> Checks {
        match self {
            Method::Gcd => Checks::GCD,
            Method::Rank => Checks::RANK,
            Method::Spectrum => Checks::SPECTRUM,
            Method::All => Checks::ALL,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub e: u32,
    #[arg(long)]
    pub k: u32,
    /// Comma-separated indices i with c_i = 1; "" is the empty set.
    #[arg(long, value_parser = parse_coeffs, allow_hyphen_values = false)]
    pub coeffs: CoeffSet,
    /// α = ξ^alpha_exp; must lie in T_e^*.
    #[arg(long, default_value_t = 0)]
    pub alpha_exp: u32,
}

impl ParamArgs {
    fn params(&self) -> Result<Params, CliError> {
        Ok(Params::new(self.n, self.e, self.k, self.coeffs.clone(), self.alpha_exp)?)
    }
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, value_enum, default_value_t = Method::All)]
    pub method: Method,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the spectrum of Q as a JSON array of [re, im] pairs.
    #[arg(long)]
    pub dump: Option<PathBuf>,
    /// Use β = ξ^b instead of α². Output is labeled experimental.
    #[arg(long)]
    pub experimental_beta_exp: Option<u32>,
    /// Skip spectral checks above this n.
    #[arg(long, env = "BENTFORGE_MAX_N", default_value_t = DEFAULT_MAX_SPECTRAL_N)]
    pub max_spectral_n: u32,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub k: u32,
    /// Family name such as prop1_4 or prop2.
    #[arg(long)]
    pub family: Option<FamilyId>,
    #[arg(long, requires = "family")]
    pub t: Option<u32>,
    #[arg(long, requires = "family")]
    pub s: Option<u32>,
    /// Include candidate sets that are not QBF-sets.
    #[arg(long)]
    pub all: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct FunctionArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the function table as JSON {n, values}.
    #[arg(long)]
    pub dump: Option<PathBuf>,
    /// Skip classification above this n.
    #[arg(long, env = "BENTFORGE_MAX_N", default_value_t = DEFAULT_MAX_SPECTRAL_N)]
    pub max_spectral_n: u32,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    #[arg(long, default_value_t = 12)]
    pub max_n: u32,
    #[arg(long, default_value_t = 0x5eed)]
    pub seed: u64,
    /// Random instances per property suite.
    #[arg(long, default_value_t = 10_000)]
    pub cases: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct DumpArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// Parses `"1,3,4"` into a set; the empty string is `∅`.
pub fn parse_coeffs(s: &str) -> Result<CoeffSet, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(CoeffSet::empty());
    }
    s.split(',')
        .map(|tok| tok.trim().parse::<u32>().map_err(|_| format!("invalid index {tok:?}")))
        .collect()
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        2
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<bentforge_core::Error> for CliError {
    fn from(e: bentforge_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

type CliResult = Result<u8, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn dump_json<T: Serialize>(path: &PathBuf, value: &T) -> Result<(), CliError> {
    std::fs::write(path, serde_json::to_string(value)? + "\n")?;
    Ok(())
}

fn opt<T: fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "skipped".to_owned(), |v| v.to_string())
}

/// Runs a parsed command, writing results to `out`.
pub fn run(cli: Cli, out: &mut dyn Write) -> CliResult {
    match cli.command {
        Command::Check(a) => check(a, out),
        Command::Enumerate(a) => enumerate(a, out),
        Command::DeriveBinary(a) => derive_binary(a, out),
        Command::Gray(a) => gray(a, out),
        Command::Selftest(a) => selftest_cmd(a, out),
        Command::DumpTables(a) => dump_tables(a, out),
    }
}

#[derive(Serialize)]
struct VerdictRow {
    n: u32,
    e: u32,
    m: u32,
    k: u32,
    coeffs: String,
    alpha_exp: u32,
    gcd_ok: Option<bool>,
    rank_full: Option<bool>,
    spectrum_bent: Option<bool>,
    fq_class: Option<String>,
    gray_class: Option<String>,
    consistent: bool,
}

fn check(a: CheckArgs, out: &mut dyn Write) -> CliResult {
    let params = a.params.params()?;
    let ring = RingCtx::new(params.n())?;
    if let Some(b) = a.experimental_beta_exp {
        return check_experimental(&a, &ring, &params, b, out);
    }
    let spectral = a.method.checks().spectrum && params.n() <= a.max_spectral_n;
    let spectrum = if spectral { Some(fourier_fwht(ring.field(), &build_q(&ring, &params)?)?) } else { None };
    if let (Some(path), Some(s)) = (&a.dump, &spectrum) {
        dump_json(path, &spectrum_pairs(s))?;
    } else if a.dump.is_some() {
        return Err(usage("--dump needs a spectral method and n within the spectral cap"));
    }
    let v = verify_with(&ring, &params, a.method.checks(), a.max_spectral_n)?;
    match a.format {
        Format::Json => write_json(out, &VerdictJson::from(&v))?,
        Format::Csv => {
            let j = VerdictJson::from(&v);
            let row = VerdictRow {
                n: j.params.n,
                e: j.params.e,
                m: j.params.m,
                k: j.params.k,
                coeffs: params.coeffs().to_string(),
                alpha_exp: j.params.alpha_exp,
                gcd_ok: j.gcd_ok,
                rank_full: j.rank_full,
                spectrum_bent: j.spectrum_bent,
                fq_class: j.fq_class,
                gray_class: j.gray_class,
                consistent: j.consistent,
            };
            write_csv(&mut *out, &[row])?;
        }
        Format::Text => {
            writeln!(
                out,
                "params: n={} e={} m={} k={} C={{{}}} alpha=xi^{}",
                params.n(),
                params.e(),
                params.m(),
                params.k(),
                params.coeffs().iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","),
                params.alpha_exp()
            )?;
            if a.method.checks().gcd {
                writeln!(out, "gcd criterion: {}", opt(v.gcd_ok))?;
            }
            if a.method.checks().rank {
                writeln!(out, "full rank: {}", opt(v.rank_full))?;
            }
            if a.method.checks().spectrum {
                writeln!(out, "quaternary bent: {}", opt(v.spectrum_bent))?;
                writeln!(out, "f_Q class: {}", opt(v.fq_class))?;
                writeln!(out, "Gray image class: {}", opt(v.gray_class))?;
            }
            if let Some(s) = &spectrum {
                let hist: Vec<String> = s.histogram().iter().map(|(k, c)| format!("{k}:{c}")).collect();
                writeln!(out, "squared magnitudes: {}", hist.join(" "))?;
            }
            writeln!(out, "consistent: {}", v.consistent)?;
        }
    }
    Ok(if v.consistent { 0 } else { 1 })
}

fn check_experimental(a: &CheckArgs, ring: &RingCtx, params: &Params, beta_exp: u32, out: &mut dyn Write) -> CliResult {
    if params.n() > a.max_spectral_n {
        return Err(usage(format!("n={} exceeds the spectral cap {}", params.n(), a.max_spectral_n)));
    }
    let q = build_q_with_beta(ring, params, Some(beta_exp))?;
    let s = fourier_fwht(ring.field(), &q)?;
    if let Some(path) = &a.dump {
        dump_json(path, &spectrum_pairs(&s))?;
    }
    let report = ExperimentalJson {
        experimental: true,
        params: ParamsJson::from(params),
        beta_exp,
        spectrum_bent: s.is_bent(),
        histogram: histogram_map(&s.histogram()),
    };
    match a.format {
        Format::Json => write_json(out, &report)?,
        _ => {
            writeln!(out, "EXPERIMENTAL: beta = xi^{beta_exp}; no claim is made for beta != alpha^2")?;
            writeln!(out, "quaternary bent: {}", report.spectrum_bent)?;
            let hist: Vec<String> = report.histogram.iter().map(|(k, c)| format!("{k}:{c}")).collect();
            writeln!(out, "squared magnitudes: {}", hist.join(" "))?;
        }
    }
    Ok(0)
}

fn enumerate(a: EnumerateArgs, out: &mut dyn Write) -> CliResult {
    if a.k == 0 {
        return Err(usage("--k must be positive"));
    }
    let (m, k) = (a.m, a.k);
    let specs = admissible_specs(m, k);
    let with_sets: Vec<(FamilySpec, CoeffSet)> =
        specs.iter().map(|s| (*s, s.coeff_set().expect("admissible"))).collect();
    let matched = |c: &CoeffSet| -> Vec<FamilySpec> {
        with_sets.iter().filter(|(_, set)| set == c).map(|(s, _)| *s).collect()
    };
    let Some(family) = a.family else {
        let sets = if a.all { candidate_sets(m)? } else { enumerate_all(m, k)? };
        let mut rows = Vec::with_capacity(sets.len());
        for c in &sets {
            let qbf = if a.all { is_qbf_set(c, m, k)? } else { true };
            rows.push(enum_row(c, m, k, &c_from_set(c, m)?, qbf, &matched(c)));
        }
        match a.format {
            Format::Csv => write_csv(&mut *out, &rows)?,
            Format::Json => write_json(out, &rows)?,
            Format::Text => {
                for r in &rows {
                    writeln!(out, "{{{}}} c={} qbf={} families={}", r.set, r.c_poly_hex, r.is_qbf, r.matched_families)?;
                }
            }
        }
        return Ok(0);
    };
    let chosen: Vec<FamilySpec> = if a.t.is_some() || a.s.is_some() || (!family.uses_t() && !family.uses_s()) {
        let spec = FamilySpec::new(family, m, k, a.t, a.s);
        spec.coeff_set()?;
        vec![spec]
    } else {
        specs.iter().copied().filter(|s| s.family == family).collect()
    };
    let mut rows = Vec::with_capacity(chosen.len());
    for spec in &chosen {
        let c = spec.coeff_set()?;
        let qbf = is_qbf_set(&c, m, k)?;
        let predicted = spec.predicate()?;
        let base = enum_row(&c, m, k, &c_from_set(&c, m)?, qbf, &matched(&c));
        rows.push(FamilyRow {
            m,
            k,
            set: base.set,
            c_poly_hex: base.c_poly_hex,
            is_qbf: base.is_qbf,
            matched_families: base.matched_families,
            family: family_list(&[*spec]),
            predicted: predicted as u8,
            agreement: (predicted == qbf) as u8,
        });
    }
    match a.format {
        Format::Csv => write_csv(&mut *out, &rows)?,
        Format::Json => write_json(out, &rows)?,
        Format::Text => {
            for r in &rows {
                writeln!(out, "{} {{{}}} qbf={} predicted={} agreement={}", r.family, r.set, r.is_qbf, r.predicted, r.agreement)?;
            }
        }
    }
    Ok(if rows.iter().all(|r| r.agreement == 1) { 0 } else { 1 })
}

#[derive(Serialize)]
struct ClassReport {
    function: FunctionTable,
    class: Option<String>,
    expected: Option<String>,
}

fn emit_function(a: &FunctionArgs, report: ClassReport, label: &str, out: &mut dyn Write) -> CliResult {
    if let Some(path) = &a.dump {
        dump_json(path, &report.function)?;
    }
    let consistent = match (&report.class, &report.expected) {
        (Some(c), Some(e)) => c == e,
        _ => true,
    };
    match a.format {
        Format::Json => write_json(out, &report)?,
        Format::Csv => return Err(usage("csv output is not available for this command")),
        Format::Text => {
            writeln!(out, "{label} on {} variables", report.function.n)?;
            writeln!(out, "class: {}", report.class.as_deref().unwrap_or("skipped"))?;
            writeln!(out, "expected: {}", report.expected.as_deref().unwrap_or("no claim"))?;
            let bits: String = report.function.values.iter().map(|v| char::from(b'0' + v)).collect();
            writeln!(out, "values: {bits}")?;
        }
    }
    Ok(if consistent { 0 } else { 1 })
}

fn derive_binary(a: FunctionArgs, out: &mut dyn Write) -> CliResult {
    let params = a.params.params()?;
    let field = FieldCtx::new(params.n())?;
    let fq = build_fq(&field, &params)?;
    let gcd = is_qbf_set(params.coeffs(), params.m(), params.k())?;
    let class = (params.n() <= a.max_spectral_n).then(|| classify(&fq));
    // Without the gcd criterion, only "not the predicted class" is claimed.
    let expected = if gcd { Some(predicted_fq_class(params.n())) } else { None };
    let consistent_negative = gcd || class != Some(predicted_fq_class(params.n()));
    let report = ClassReport {
        function: FunctionTable::from(&fq),
        class: class.map(|c| c.as_str().to_owned()),
        expected: expected.map(|c| c.as_str().to_owned()),
    };
    let code = emit_function(&a, report, "f_Q", out)?;
    Ok(if consistent_negative { code } else { 1 })
}

fn gray(a: FunctionArgs, out: &mut dyn Write) -> CliResult {
    let params = a.params.params()?;
    let ring = RingCtx::new(params.n())?;
    let q = build_q(&ring, &params)?;
    let g = gray_map(&q);
    let spectral = params.n() <= a.max_spectral_n;
    let class = spectral.then(|| classify(&g));
    let bent = spectral && is_quaternary_bent(&q);
    let expected: Option<BinaryClass> = bent.then(|| predicted_gray_class(params.n()));
    let report = ClassReport {
        function: FunctionTable::from(&g),
        class: class.map(|c| c.as_str().to_owned()),
        expected: expected.map(|c| c.as_str().to_owned()),
    };
    emit_function(&a, report, "Gray image", out)
}

#[derive(Serialize)]
struct SuiteJson {
    name: &'static str,
    cases: u64,
    failures: u64,
    passed: bool,
}

fn selftest_cmd(a: SelftestArgs, out: &mut dyn Write) -> CliResult {
    if a.max_n == 0 || a.max_n > MAX_SELFTEST_N {
        return Err(usage(format!("--max-n must be in 1..={MAX_SELFTEST_N}")));
    }
    let reports = selftest::run_all(a.max_n, a.seed, a.cases)?;
    match a.format {
        Format::Json => {
            let rows: Vec<SuiteJson> = reports
                .iter()
                .map(|r| SuiteJson { name: r.name, cases: r.cases, failures: r.failures, passed: r.passed() })
                .collect();
            write_json(out, &rows)?;
        }
        _ => {
            for r in &reports {
                let tag = if r.passed() { "PASS" } else { "FAIL" };
                writeln!(out, "{tag} {} ({} cases, {} failures)", r.name, r.cases, r.failures)?;
            }
        }
    }
    Ok(if reports.iter().all(|r| r.passed()) { 0 } else { 1 })
}

#[derive(Serialize)]
struct Tables {
    n: u32,
    primitive_poly: String,
    basic_irreducible: Vec<u8>,
    dual_basis: Vec<u32>,
    antilog: Vec<u32>,
    log: BTreeMap<u32, u32>,
    teichmuller: Vec<Vec<u8>>,
}

fn dump_tables(a: DumpArgs, out: &mut dyn Write) -> CliResult {
    if a.n == 0 || a.n > MAX_DUMP_N {
        return Err(usage(format!("--n must be in 1..={MAX_DUMP_N}")));
    }
    let ring = RingCtx::new(a.n)?;
    let field = ring.field();
    let tables = Tables {
        n: a.n,
        primitive_poly: field.prim_poly().to_hex(),
        basic_irreducible: ring.basic_irr().coeffs().to_vec(),
        dual_basis: field.dual_basis().iter().map(|d| d.index()).collect(),
        antilog: field.antilog_table().to_vec(),
        log: field.elements().filter_map(|x| field.log(x).map(|l| (x.index(), l))).collect(),
        teichmuller: (0..ring.order()).map(|i| ring.teich(TeichElem::Pow(i)).coeffs(a.n)).collect(),
    };
    match a.format {
        Format::Json => write_json(out, &tables)?,
        Format::Csv => return Err(usage("csv output is not available for dump-tables")),
        Format::Text => {
            writeln!(out, "n: {}", tables.n)?;
            writeln!(out, "primitive polynomial: {} ({})", field.prim_poly(), tables.primitive_poly)?;
            writeln!(out, "basic irreducible (low to high): {:?}", tables.basic_irreducible)?;
            writeln!(out, "dual basis: {:?}", tables.dual_basis)?;
            writeln!(out, "i  g^i  xi^i")?;
            for (i, (a, t)) in tables.antilog.iter().zip(&tables.teichmuller).enumerate() {
                let t: String = t.iter().map(|c| char::from(b'0' + c)).collect();
                writeln!(out, "{i} {a} {t}")?;
            }
        }
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (u8, String) {
        let cli = Cli::try_parse_from(std::iter::once("bentforge").chain(args.iter().copied())).unwrap();
        let mut buf = Vec::new();
        let code = match run(cli, &mut buf) {
            Ok(c) => c,
            Err(e) => e.exit_code(),
        };
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn coeff_parsing() {
        assert_eq!(parse_coeffs("").unwrap(), CoeffSet::empty());
        assert_eq!(parse_coeffs("3, 1").unwrap(), CoeffSet::new([1, 3]));
        assert!(parse_coeffs("1,x").is_err());
    }

    #[test]
    fn check_variants() {
        let (code, text) = run_args(&["check", "--n", "3", "--e", "1", "--k", "1", "--coeffs", "1", "--method", "gcd"]);
        assert_eq!(code, 0);
        assert!(text.contains("gcd criterion: false"));
        let (code, text) = run_args(&["check", "--n", "4", "--e", "2", "--k", "1", "--coeffs", "", "--format", "csv"]);
        assert_eq!(code, 0);
        assert!(text.starts_with("n,e,m,k,coeffs,alpha_exp,gcd_ok"));
        let (code, _) = run_args(&["check", "--n", "4", "--e", "2", "--k", "1", "--coeffs", "", "--alpha-exp", "1"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn experimental_is_labeled() {
        let (code, text) = run_args(&[
            "check", "--n", "5", "--e", "1", "--k", "1", "--coeffs", "1", "--experimental-beta-exp", "3",
        ]);
        assert_eq!(code, 0);
        assert!(text.starts_with("EXPERIMENTAL"));
    }

    #[test]
    fn dump_tables_small() {
        let (code, text) = run_args(&["dump-tables", "--n", "2", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["basic_irreducible"], serde_json::json!([1, 1, 1]));
        assert_eq!(v["teichmuller"].as_array().unwrap().len(), 3);
        assert_eq!(run_args(&["dump-tables", "--n", "17"]).0, 2);
    }
}
