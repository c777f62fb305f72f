//! Command-line front end. `run` parses arguments, dispatches, and returns an exit code:
//! 0 success, 1 verification failure, 2 usage or input error, 3 guard exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bits;
use crate::complex::{SimplicialComplex, SquareFreeDegree};
use crate::error::{Error, Result};
use crate::homology::reduced_homology;
use crate::koszul::{
    betti_table, build_W, chen_ranks, hilbert_series_combinatorial, specialize_single, BettiTable,
};
use crate::resonance::{annihilator, jump_resonance, support_resonance, CoordinateSubspaceArrangement};
use crate::verify::{self, VerificationReport};

#[derive(Parser, Debug)]
#[command(name = "koszul", version, about = "Higher Koszul modules of simplicial complexes")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Worker threads (0 = all cores).
    #[arg(long, env = "KOSZUL_JOBS", default_value_t = 0, global = true)]
    pub jobs: usize,
    /// Largest vertex count accepted by commands that enumerate all subsets.
    #[arg(long, default_value_t = 16, global = true)]
    pub max_n: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduced homology of the complex or of induced subcomplexes.
    Homology(HomologyArgs),
    /// Hilbert series and Betti numbers of W_i.
    Koszul(KoszulArgs),
    /// Jump and support resonance, optionally with the annihilator.
    Resonance(ResonanceArgs),
    /// Graded Betti numbers, regularity and projective dimension of W_i.
    Betti(BettiArgs),
    /// Chen ranks of a graph.
    Chen(ChenArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// List or print the built-in example complexes.
    Examples(ExamplesArgs),
}

#[derive(Args, Debug)]
pub struct ComplexArg {
    /// Complex file (text or JSON), or `builtin:NAME`.
    #[arg(long)]
    pub complex: String,
}

#[derive(Args, Debug)]
pub struct HomologyArgs {
    #[command(flatten)]
    pub input: ComplexArg,
    /// Induced subcomplex on these vertices, e.g. `1,3,4`; repeatable.
    #[arg(long = "sub", value_delimiter = ';')]
    pub subs: Vec<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum HilbertKind {
    Multi,
    Single,
}

#[derive(Args, Debug)]
pub struct KoszulArgs {
    #[command(flatten)]
    pub input: ComplexArg,
    #[arg(long)]
    pub i: usize,
    #[arg(long, value_enum)]
    pub hilbert: Option<HilbertKind>,
    #[arg(long)]
    pub betti: bool,
    #[arg(long, default_value_t = 10)]
    pub max_degree: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ResonanceKind {
    Jump,
    Support,
    Both,
}

#[derive(Args, Debug)]
pub struct ResonanceArgs {
    #[command(flatten)]
    pub input: ComplexArg,
    #[arg(long)]
    pub i: usize,
    #[arg(long, value_enum, default_value_t = ResonanceKind::Support)]
    pub kind: ResonanceKind,
    #[arg(long)]
    pub annihilator: bool,
}

#[derive(Args, Debug)]
pub struct BettiArgs {
    #[command(flatten)]
    pub input: ComplexArg,
    #[arg(long)]
    pub i: usize,
    /// Report the regularity of the module shifted by this amount as well.
    #[arg(long)]
    pub shift: Option<i64>,
}

#[derive(Args, Debug)]
pub struct ChenArgs {
    #[command(flatten)]
    pub input: ComplexArg,
    #[arg(long, default_value_t = 10)]
    pub max_degree: usize,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// examples, fitting-path4, duality, hilbert, hochster, module, bounds, presentation, resonance, or all.
    #[arg(default_value = "examples")]
    pub suite: String,
    #[arg(long, default_value_t = 2024)]
    pub seed: u64,
    /// Number of random complexes.
    #[arg(long, default_value_t = 200)]
    pub count: usize,
    /// Largest vertex count of random complexes.
    #[arg(long, default_value_t = 7)]
    pub random_n: usize,
}

#[derive(Args, Debug)]
pub struct ExamplesArgs {
    /// Print this example instead of listing all names.
    pub name: Option<String>,
}

/// Runs the CLI against the process's stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{rendered}") } else { write!(out, "{rendered}") };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let mut buffer = Vec::new();
    let result = pool.install(|| dispatch(&cli, &mut buffer));
    let _ = out.write_all(&buffer);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::GuardExceeded { .. } => 3,
        Error::Oracle(_) => 1,
        _ => 2,
    }
}

/// Loads `builtin:NAME` or a file in the text or JSON complex format.
pub fn load_complex(spec: &str) -> Result<SimplicialComplex> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        return verify::named_example(name)
            .ok_or_else(|| Error::Precondition(format!("unknown built-in complex `{name}`")));
    }
    let text = std::fs::read_to_string(PathBuf::from(spec))
        .map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{spec}: {e}"))))?;
    SimplicialComplex::parse(&text)
}

fn load_guarded(input: &ComplexArg, max_n: usize) -> Result<SimplicialComplex> {
    let complex = load_complex(&input.complex)?;
    if complex.n() > max_n {
        return Err(Error::GuardExceeded { n: complex.n(), limit: max_n });
    }
    Ok(complex)
}

fn emit(out: &mut dyn Write, format: Format, value: &Value, text: &str) -> Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(value)?)?,
        Format::Text => write!(out, "{}", text)?,
    }
    Ok(())
}

fn to_value<T: Serialize>(v: &T) -> Result<Value> {
    Ok(serde_json::to_value(v)?)
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Homology(a) => homology_cmd(cli, a, out),
        Command::Koszul(a) => koszul_cmd(cli, a, out),
        Command::Resonance(a) => resonance_cmd(cli, a, out),
        Command::Betti(a) => betti_cmd(cli, a, out),
        Command::Chen(a) => chen_cmd(cli, a, out),
        Command::Verify(a) => verify_cmd(cli, a, out),
        Command::Examples(a) => examples_cmd(cli, a, out),
    }
    .map(|code| code.unwrap_or(0))
}

fn parse_vertex_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|e| Error::Precondition(format!("bad vertex `{t}`: {e}"))))
        .collect()
}

fn homology_cmd(cli: &Cli, a: &HomologyArgs, out: &mut dyn Write) -> Result<Option<i32>> {
    let complex = load_guarded(&a.input, cli.max_n)?;
    let n = complex.n();
    let subs: Vec<u64> = if a.subs.is_empty() {
        vec![bits::full_mask(n)]
    } else {
        a.subs
            .iter()
            .map(|s| Ok(SquareFreeDegree::from_vertices(n, &parse_vertex_list(s)?)?.mask()))
            .collect::<Result<_>>()?
    };
    let mut rows = Vec::new();
    let mut text = String::new();
    for mask in subs {
        let restricted = complex.restriction(SquareFreeDegree::new(n, mask)?);
        let profile = reduced_homology(&restricted);
        let dims: Vec<Value> = profile.nonzero().iter().map(|(i, d)| json!({"i": i, "dim": d})).collect();
        rows.push(json!({"vertices": bits::to_vertices(mask), "reduced_homology": dims}));
        let listed: Vec<String> = profile.nonzero().iter().map(|(i, d)| format!("h~_{i} = {d}")).collect();
        let listed = if listed.is_empty() { "acyclic".to_string() } else { listed.join(", ") };
        text.push_str(&format!("{{{}}}: {listed}\n", crate::complex::join_vertices(mask)));
    }
    emit(out, cli.format, &json!({ "subcomplexes": rows }), &text)?;
    Ok(None)
}

fn koszul_cmd(cli: &Cli, a: &KoszulArgs, out: &mut dyn Write) -> Result<Option<i32>> {
    let complex = load_guarded(&a.input, cli.max_n)?;
    let hilbert = match (a.hilbert, a.betti) {
        (None, false) => Some(HilbertKind::Multi),
        (h, _) => h,
    };
    let mut parts: Vec<(&str, Value, String)> = Vec::new();
    if let Some(kind) = hilbert {
        let series = hilbert_series_combinatorial(&complex, a.i)?;
        match kind {
            HilbertKind::Multi => parts.push(("hilbert", to_value(&series.to_json())?, format!("{series}\n"))),
            HilbertKind::Single => {
                let coeffs = specialize_single(&series, a.max_degree)?;
                let text: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
                parts.push(("hilbert", to_value(&coeffs)?, format!("{}\n", text.join(" "))));
            }
        }
    }
    if a.betti {
        let table = betti_table(&build_W(&complex, a.i)?);
        parts.push(("betti", to_value(&table.to_json())?, format!("{table}\n")));
    }
    if parts.len() == 1 {
        let (_, value, text) = &parts[0];
        emit(out, cli.format, value, text)?;
    } else {
        let mut obj = serde_json::Map::new();
        let mut text = String::new();
        for (key, value, t) in parts {
            text.push_str(&format!("[{key}]\n{t}"));
            obj.insert(key.to_string(), value);
        }
        emit(out, cli.format, &Value::Object(obj), &text)?;
    }
    Ok(None)
}

fn arrangement_json(kind: &str, arr: &CoordinateSubspaceArrangement) -> serde_json::Map<String, Value> {
    let components = if arr.is_empty() || arr.is_origin() {
        Value::String(arr.kind_label().to_string())
    } else {
        json!(arr.component_vertices())
    };
    let mut obj = serde_json::Map::new();
    obj.insert("kind".into(), Value::String(kind.into()));
    obj.insert("components".into(), components);
    obj
}

fn resonance_cmd(cli: &Cli, a: &ResonanceArgs, out: &mut dyn Write) -> Result<Option<i32>> {
    let complex = load_guarded(&a.input, cli.max_n)?;
    let mut reports = Vec::new();
    let mut text = String::new();
    if matches!(a.kind, ResonanceKind::Support | ResonanceKind::Both) {
        let arr = support_resonance(&complex, a.i)?;
        let mut obj = arrangement_json("support", &arr);
        text.push_str(&format!("support R_{}: {arr}\n", a.i));
        if a.annihilator {
            let ann = annihilator(&complex, a.i)?.ideal;
            obj.insert("annihilator".into(), to_value(&ann.to_json())?);
            text.push_str(&format!("Ann W_{}: {ann}\n", a.i));
        }
        reports.push(Value::Object(obj));
    }
    if matches!(a.kind, ResonanceKind::Jump | ResonanceKind::Both) {
        let arr = jump_resonance(&complex, a.i)?;
        reports.push(Value::Object(arrangement_json("jump", &arr)));
        text.push_str(&format!("jump R^{}: {arr}\n", a.i));
    }
    let value = if reports.len() == 1 { reports.remove(0) } else { Value::Array(reports) };
    emit(out, cli.format, &value, &text)?;
    Ok(None)
}

fn betti_cmd(cli: &Cli, a: &BettiArgs, out: &mut dyn Write) -> Result<Option<i32>> {
    let complex = load_guarded(&a.input, cli.max_n)?;
    let table: BettiTable = betti_table(&build_W(&complex, a.i)?);
    let mut value = to_value(&table.to_json())?;
    let mut text = format!("{table}\n");
    if let Some(shift) = a.shift {
        let shifted = match table.regularity_shifted(shift) {
            Some(r) => json!(r),
            None => json!("-inf"),
        };
        text.push_str(&format!("reg after shift {shift}: {}\n", shifted.to_string().trim_matches('"')));
        if let Value::Object(obj) = &mut value {
            obj.insert("reg_shifted".into(), shifted);
        }
    }
    emit(out, cli.format, &value, &text)?;
    Ok(None)
}

fn chen_cmd(cli: &Cli, a: &ChenArgs, out: &mut dyn Write) -> Result<Option<i32>> {
    let graph = load_guarded(&a.input, cli.max_n)?;
    let chen = chen_ranks(&graph, a.max_degree)?;
    let value = json!({"q": chen.q, "q_poly": chen.q_string(), "ranks": chen.shifted_hilbert});
    let ranks: Vec<String> = chen.shifted_hilbert.iter().map(|c| c.to_string()).collect();
    let text = format!("Q = {}\nranks: {}\n", chen.q_string(), ranks.join(" "));
    emit(out, cli.format, &value, &text)?;
    Ok(None)
}

fn verify_cmd(cli: &Cli, a: &VerifyArgs, out: &mut dyn Write) -> Result<Option<i32>> {
    let reports: Vec<VerificationReport> = match a.suite.as_str() {
        "examples" => vec![verify::examples_suite()],
        "fitting-path4" => vec![verify::fitting_path4_suite()],
        "all" => {
            let mut all = vec![verify::examples_suite()];
            for name in verify::RANDOMIZED_SUITES {
                all.push(verify::randomized_suite(name, a.seed, a.count, a.random_n)?);
            }
            all
        }
        name => vec![verify::randomized_suite(name, a.seed, a.count, a.random_n)?],
    };
    let passed = reports.iter().all(|r| r.passed());
    let value = if reports.len() == 1 { to_value(&reports[0])? } else { to_value(&reports)? };
    let mut text = String::new();
    for r in &reports {
        text.push_str(&format!("{}\n", r.summary()));
        for c in &r.cases {
            text.push_str(&format!("  [{}] {}: {}\n", status_word(c.status), c.id, c.details));
        }
    }
    emit(out, cli.format, &value, &text)?;
    Ok(Some(if passed { 0 } else { 1 }))
}

fn status_word(s: verify::CheckStatus) -> &'static str {
    match s {
        verify::CheckStatus::Pass => "pass",
        verify::CheckStatus::Fail => "FAIL",
        verify::CheckStatus::SkippedHypothesis => "skip",
    }
}

fn examples_cmd(cli: &Cli, a: &ExamplesArgs, out: &mut dyn Write) -> Result<Option<i32>> {
    match &a.name {
        None => {
            let text: String = verify::EXAMPLE_NAMES.iter().map(|n| format!("{n}\n")).collect();
            emit(out, cli.format, &json!(verify::EXAMPLE_NAMES), &text)?;
        }
        Some(name) => {
            let complex = verify::named_example(name)
                .ok_or_else(|| Error::Precondition(format!("unknown built-in complex `{name}`")))?;
            emit(out, cli.format, &to_value(&complex.to_json_value())?, &complex.to_text())?;
        }
    }
    Ok(None)
}
