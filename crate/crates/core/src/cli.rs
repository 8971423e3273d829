//! The `matdecomp` command line.
//!
//! Every subcommand prints one document to stdout (JSON by default) and
//! reports its outcome through the exit code:
//!
//! | code | meaning                                          |
//! |------|--------------------------------------------------|
//! | 0    | valid, found, or a plain report                  |
//! | 10   | refuted, nonexistent, or not `k`-colorable        |
//! | 20   | budget exhausted or input too large to decide    |
//! | 2    | malformed input or usage error                   |
//!
//! Output depends only on the arguments: worker count changes speed, not
//! bytes.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::{color, coloring_number_density, coloring_number_density_flats, optimal_coloring, Coloring};
use crate::decomp::{
    binary_coloring_number, covering_capacity, covering_report_with_budget, flat_coloring_number, flat_witness_scan,
    pair_capacity, search_decomposition, theorem_threshold, verify_decomposition_with_budget, Partition, PartitionFile,
    SearchOutcome, Threshold, Verdict, DEFAULT_SEARCH_BUDGET, DEFAULT_TRANSVERSAL_BUDGET,
};
use crate::error::{Error, Result};
use crate::flats::{count_flats_exact, flat_count_lower_bound, flat_shards, Flat, DEFAULT_FLAT_BUDGET};
use crate::matroid::{binary_matroid, restrict, Matroid, MatroidSpec, EXHAUSTIVE_LIMIT};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 10;
pub const EXIT_EXHAUSTED: i32 = 20;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "matdecomp",
    version,
    about = "Matroid coloring and (b,c)-decomposition toolkit"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads for sharded commands (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    /// Seed for randomized sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Work cap: transversals, flats, or search nodes depending on the command.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    budget: Option<u64>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Table,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coloring number and an optimal coloring of a matroid.
    Color(MatroidArgs),
    /// List or sample the rank-d flats of binary(n).
    Flats {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        /// Draw this many flats uniformly (by --seed) and color each one.
        #[arg(long)]
        sample: Option<usize>,
    },
    /// Exact and bounded flat counts, cross-checked by enumeration.
    Census {
        /// Dimensions, `A`, `A..B` or `A..=B`.
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<u32>,
        /// Ranks, `A`, `A..B` or `A..=B`.
        #[arg(long, value_parser = parse_range)]
        d: RangeInclusive<u32>,
    },
    /// Decide whether a partition is a (b,c)-decomposition.
    Verify {
        #[command(flatten)]
        input: PartitionArgs,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        c: usize,
    },
    /// Look for an uncovered flat that refutes a partition.
    Witness {
        #[command(flatten)]
        input: PartitionArgs,
        #[arg(long)]
        b: usize,
        /// Largest flat rank to scan; defaults to n.
        #[arg(long)]
        dmax: Option<u32>,
    },
    /// Covered-flat counts against the counting-argument capacities.
    Covering {
        #[command(flatten)]
        input: PartitionArgs,
        /// Flat ranks, `A`, `A..B` or `A..=B`; defaults to 2..=n.
        #[arg(long, value_parser = parse_range)]
        d: Option<RangeInclusive<u32>>,
        #[arg(long, default_value_t = 1)]
        c: u64,
    },
    /// Exhaustive search for a (b,c)-decomposition.
    Search {
        #[command(flatten)]
        matroid: MatroidArgs,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        c: usize,
    },
    /// Dimension thresholds past which binary(n) has no decomposition.
    Bounds {
        #[arg(long, value_parser = parse_range)]
        b: RangeInclusive<u32>,
        #[arg(long, value_parser = parse_range)]
        c: RangeInclusive<u32>,
    },
}

#[derive(Args, Debug)]
struct MatroidArgs {
    /// Matroid spec file (`-` for stdin).
    #[arg(long, conflicts_with = "n", required_unless_present = "n")]
    input: Option<PathBuf>,
    /// Shorthand for `{"kind":"binary","n":N}`.
    #[arg(long)]
    n: Option<u32>,
    /// Also ask for a coloring with exactly this many colors.
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Args, Debug)]
struct PartitionArgs {
    /// Partition file (`-` for stdin).
    #[arg(long)]
    input: PathBuf,
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<u32>, String> {
    let num = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("`{t}`: {e}"));
    let range = if let Some((a, b)) = s.split_once("..=") {
        num(a)?..=num(b)?
    } else if let Some((a, b)) = s.split_once("..") {
        let b = num(b)?;
        let b = b.checked_sub(1).ok_or("empty range")?;
        num(a)?..=b
    } else {
        let a = num(s)?;
        a..=a
    };
    if range.is_empty() {
        return Err(format!("empty range `{s}`"));
    }
    Ok(range)
}

/// What a command produced: the document and the exit code it implies.
struct Output {
    text: String,
    code: i32,
}

enum Failure {
    Usage(String),
    Refused(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_refusal() {
            Failure::Refused(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

type CmdResult = std::result::Result<Output, Failure>;

/// Runs the CLI on `args`, writing the document to `out` and diagnostics
/// to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(rendered.as_bytes());
            } else {
                let _ = err.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.global.workers).build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker pool: {e}");
            return EXIT_USAGE;
        }
    };
    match pool.install(|| dispatch(&cli)) {
        Ok(o) => {
            let _ = out.write_all(o.text.as_bytes());
            if !o.text.ends_with('\n') {
                let _ = out.write_all(b"\n");
            }
            o.code
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Refused(msg)) => {
            let _ = writeln!(err, "refused: {msg}");
            EXIT_EXHAUSTED
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn dispatch(cli: &Cli) -> CmdResult {
    let g = &cli.global;
    match &cli.command {
        Command::Color(args) => cmd_color(g, args),
        Command::Flats { n, d, sample } => cmd_flats(g, *n, *d, *sample),
        Command::Census { n, d } => cmd_census(g, n.clone(), d.clone()),
        Command::Verify { input, b, c } => cmd_verify(g, input, *b, *c),
        Command::Witness { input, b, dmax } => cmd_witness(g, input, *b, *dmax),
        Command::Covering { input, d, c } => cmd_covering(g, input, d.clone(), *c),
        Command::Search { matroid, b, c } => cmd_search(g, matroid, *b, *c),
        Command::Bounds { b, c } => cmd_bounds(g, b.clone(), c.clone()),
    }
}

fn read_input(path: &Path) -> std::result::Result<String, Failure> {
    let mut text = String::new();
    let res = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn parse_json<T: serde::de::DeserializeOwned>(path: &Path, text: &str) -> std::result::Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_matroid(args: &MatroidArgs) -> std::result::Result<Matroid, Failure> {
    match (&args.input, args.n) {
        (_, Some(n)) => Ok(binary_matroid(n)?),
        (Some(path), None) => {
            let spec: MatroidSpec = parse_json(path, &read_input(path)?)?;
            Ok(spec.build()?)
        }
        (None, None) => Err(Failure::Usage("either --input or --n is required".into())),
    }
}

fn load_partition(args: &PartitionArgs) -> std::result::Result<Partition, Failure> {
    let file: PartitionFile = parse_json(&args.input, &read_input(&args.input)?)?;
    Ok(file.build()?)
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn no_csv(command: &str) -> Failure {
    Failure::Usage(format!("csv output is not available for `{command}`"))
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn hex_rows(f: &Flat) -> Vec<String> {
    f.basis().rows().iter().map(|r| format!("{r:#x}")).collect()
}

/// A flat with its elements spelled out.
#[derive(Serialize)]
struct FlatView {
    #[serde(flatten)]
    flat: Flat,
    elements: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coloring_number: Option<usize>,
}

impl FlatView {
    fn new(flat: Flat) -> Result<Self> {
        Ok(Self {
            elements: flat.elements()?,
            flat,
            coloring_number: None,
        })
    }
}

#[derive(Serialize)]
struct ColorReport {
    matroid: MatroidSpec,
    ground_size: u64,
    rank: usize,
    coloring_number: usize,
    coloring: Option<Coloring>,
    /// Density maximum, computed independently when the ground set allows.
    density: Option<usize>,
    /// `⌈2^n/n⌉` for binary matroids.
    prediction: Option<String>,
    #[serde(rename = "match")]
    matches: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    query: Option<KQuery>,
}

#[derive(Serialize)]
struct KQuery {
    k: usize,
    colorable: bool,
    coloring: Option<Coloring>,
}

fn density_check(m: &Matroid) -> Result<Option<usize>> {
    let attempt = if m.ground_len() <= EXHAUSTIVE_LIMIT as u64 {
        coloring_number_density(m)
    } else {
        coloring_number_density_flats(m)
    };
    match attempt {
        Ok(k) => Ok(Some(k)),
        Err(e) if e.is_refusal() => Ok(None),
        Err(e) => Err(e),
    }
}

fn cmd_color(g: &Global, args: &MatroidArgs) -> CmdResult {
    let m = load_matroid(args)?;
    let coloring = optimal_coloring(&m)?;
    let k = coloring.as_ref().map_or(0, |c| c.k);
    let density = density_check(&m)?;
    let prediction = m.binary_dimension().map(binary_coloring_number);
    let matches = prediction.as_ref().map(|p| *p == BigUint::from(k));
    let query = match args.k {
        Some(q) => {
            let c = color(&m, q)?;
            Some(KQuery {
                k: q,
                colorable: c.is_some(),
                coloring: c,
            })
        }
        None => None,
    };
    let consistent = density.is_none_or(|d| d == k) && matches != Some(false);
    let code = if !consistent || query.as_ref().is_some_and(|q| !q.colorable) {
        EXIT_REFUTED
    } else {
        EXIT_OK
    };
    let report = ColorReport {
        matroid: m.spec().clone(),
        ground_size: m.ground_len(),
        rank: m.ground_rank()?,
        coloring_number: k,
        coloring,
        density,
        prediction: prediction.map(|p| p.to_string()),
        matches,
        query,
    };
    let text = match g.format.unwrap_or(Format::Json) {
        Format::Json => json(&report),
        Format::Csv => return Err(no_csv("color")),
        Format::Table => {
            let mut t = String::new();
            let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
            let _ = writeln!(t, "ground size      {}", report.ground_size);
            let _ = writeln!(t, "rank             {}", report.rank);
            let _ = writeln!(t, "coloring number  {}", report.coloring_number);
            let _ = writeln!(t, "density check    {}", opt(report.density.map(|d| d.to_string())));
            let _ = writeln!(t, "prediction       {}", opt(report.prediction.clone()));
            let _ = writeln!(t, "match            {}", opt(report.matches.map(|b| b.to_string())));
            if let Some(c) = &report.coloring {
                for (i, class) in c.classes.iter().enumerate() {
                    let _ = writeln!(t, "class {i:<3}        {}", join(class, " "));
                }
            }
            if let Some(q) = &report.query {
                let _ = writeln!(t, "{}-colorable     {}", q.k, q.colorable);
            }
            t
        }
    };
    Ok(Output { text, code })
}

#[derive(Serialize)]
struct FlatsReport {
    n: u32,
    d: u32,
    count: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    /// `⌈(2^d-1)/d⌉`, reported with samples.
    #[serde(skip_serializing_if = "Option::is_none")]
    prediction: Option<String>,
    flats: Vec<FlatView>,
}

/// Positions `0..total` chosen uniformly without replacement, increasing.
/// `total` is already bounded by the flat budget.
fn sample_positions(total: u64, want: usize, seed: u64) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let total = total as usize;
    let mut picks: Vec<u64> = rand::seq::index::sample(&mut rng, total, want.min(total))
        .into_iter()
        .map(|i| i as u64)
        .collect();
    picks.sort_unstable();
    picks
}

fn cmd_flats(g: &Global, n: u32, d: u32, sample: Option<usize>) -> CmdResult {
    let budget = g.budget.unwrap_or(DEFAULT_FLAT_BUDGET);
    let count = count_flats_exact(n, d);
    let shards = flat_shards(n, d, budget)?;
    let flats: Vec<Flat> = match sample {
        None => shards.into_iter().flatten().collect(),
        Some(s) => {
            let total: u64 = shards.iter().map(|sh| sh.len()).sum();
            let mut picks = sample_positions(total, s, g.seed).into_iter().peekable();
            let mut out = Vec::new();
            let mut base = 0u64;
            for shard in shards {
                let len = shard.len();
                let mut it = shard;
                let mut at = 0u64;
                while let Some(&p) = picks.peek() {
                    if p >= base + len {
                        break;
                    }
                    let skip = p - base - at;
                    out.push(it.nth(skip as usize).expect("position inside shard"));
                    at += skip + 1;
                    picks.next();
                }
                base += len;
            }
            out
        }
    };
    let mut views = flats.into_iter().map(FlatView::new).collect::<Result<Vec<_>>>()?;
    let mut code = EXIT_OK;
    let prediction = sample.map(|_| flat_coloring_number(d));
    if let Some(pred) = &prediction {
        let m = binary_matroid(n)?;
        let ks: Vec<usize> = views
            .par_iter()
            .map(|v| Ok(optimal_coloring(&restrict(&m, &v.elements)?)?.map_or(0, |c| c.k)))
            .collect::<Result<_>>()?;
        for (v, k) in views.iter_mut().zip(ks) {
            if BigUint::from(k) != *pred {
                code = EXIT_REFUTED;
            }
            v.coloring_number = Some(k);
        }
    }
    let report = FlatsReport {
        n,
        d,
        count: count.to_string(),
        seed: sample.map(|_| g.seed),
        prediction: prediction.map(|p| p.to_string()),
        flats: views,
    };
    let rows = || {
        report.flats.iter().map(|v| {
            (
                hex_rows(&v.flat).join(" "),
                join(&v.elements, " "),
                v.coloring_number.map_or(String::new(), |k| k.to_string()),
            )
        })
    };
    let text = match g.format.unwrap_or(Format::Json) {
        Format::Json => json(&report),
        Format::Csv => {
            let mut t = String::from("basis,elements,coloring_number\n");
            for (basis, elements, k) in rows() {
                let _ = writeln!(t, "{basis},{elements},{k}");
            }
            t
        }
        Format::Table => {
            let mut t = format!("rank-{d} flats of binary({n}): {}\n", report.count);
            if let Some(p) = &report.prediction {
                let _ = writeln!(t, "predicted coloring number {p}");
            }
            for (basis, elements, k) in rows() {
                let _ = writeln!(t, "[{basis}]  {{{elements}}}  {k}");
            }
            t
        }
    };
    Ok(Output { text, code })
}

#[derive(Serialize)]
struct CensusRow {
    n: u32,
    d: u32,
    exact: String,
    /// Empty when `2d > n`, where the bound is not claimed.
    lower_bound: Option<String>,
    /// Enumerated count, or `None` when over budget.
    enumerated: Option<String>,
}

fn cmd_census(g: &Global, ns: RangeInclusive<u32>, ds: RangeInclusive<u32>) -> CmdResult {
    let budget = g.budget.unwrap_or(DEFAULT_FLAT_BUDGET);
    let mut rows = Vec::new();
    let mut code = EXIT_OK;
    for n in ns {
        for d in ds.clone().filter(|&d| d >= 1 && d <= n) {
            let exact = count_flats_exact(n, d);
            let enumerated = match flat_shards(n, d, budget) {
                Ok(shards) => Some(shards.into_par_iter().map(|s| s.count() as u64).sum::<u64>()),
                Err(e) if e.is_refusal() => None,
                Err(e) => return Err(e.into()),
            };
            if enumerated.is_some_and(|e| BigUint::from(e) != exact) {
                code = EXIT_REFUTED;
            }
            rows.push(CensusRow {
                n,
                d,
                exact: exact.to_string(),
                lower_bound: flat_count_lower_bound(n, d).ok().map(|b| b.to_string()),
                enumerated: enumerated.map(|e| e.to_string()),
            });
        }
    }
    let cell = |v: &Option<String>| v.clone().unwrap_or_default();
    let text = match g.format.unwrap_or(Format::Csv) {
        Format::Json => json(&rows),
        Format::Csv => {
            let mut t = String::from("n,d,exact,lower_bound,enumerated\n");
            for r in &rows {
                let _ = writeln!(
                    t,
                    "{},{},{},{},{}",
                    r.n,
                    r.d,
                    r.exact,
                    cell(&r.lower_bound),
                    cell(&r.enumerated)
                );
            }
            t
        }
        Format::Table => {
            let mut t = format!(
                "{:>3} {:>3} {:>24} {:>24} {:>12}\n",
                "n", "d", "exact", "lower bound", "enumerated"
            );
            for r in &rows {
                let _ = writeln!(
                    t,
                    "{:>3} {:>3} {:>24} {:>24} {:>12}",
                    r.n,
                    r.d,
                    r.exact,
                    r.lower_bound.as_deref().unwrap_or("-"),
                    r.enumerated.as_deref().unwrap_or("over budget")
                );
            }
            t
        }
    };
    Ok(Output { text, code })
}

fn cmd_verify(g: &Global, input: &PartitionArgs, b: usize, c: usize) -> CmdResult {
    let p = load_partition(input)?;
    let budget = g.budget.unwrap_or(DEFAULT_TRANSVERSAL_BUDGET);
    let report = verify_decomposition_with_budget(&p, b, c, budget)?;
    let code = if report.verdict.is_valid() {
        EXIT_OK
    } else {
        EXIT_REFUTED
    };
    let text = match g.format.unwrap_or(Format::Json) {
        Format::Json => json(&report),
        Format::Csv => return Err(no_csv("verify")),
        Format::Table => {
            let mut t = format!(
                "b = {}, c = {}, k = {}, part limit {}\n",
                b,
                c,
                report.params.k,
                report.params.part_limit()
            );
            let line = match &report.verdict {
                Verdict::Valid => "valid".to_string(),
                Verdict::SizeViolation { part, size, limit } => {
                    format!("part {part} has {size} elements, limit {limit}")
                }
                Verdict::WitnessTransversal { transversal } => {
                    format!("transversal {{{}}} is not {b}-colorable", join(transversal, " "))
                }
                Verdict::WitnessFlat { flat } => format!("flat [{}] is uncovered", hex_rows(flat).join(" ")),
            };
            let _ = writeln!(t, "{line}");
            let _ = writeln!(t, "transversals checked {}", report.stats.transversals_checked);
            t
        }
    };
    Ok(Output { text, code })
}

#[derive(Serialize)]
struct WitnessReport {
    b: usize,
    d_max: u32,
    /// Ranks scanned: those whose flats need more than `b` colors.
    ranks: Vec<u32>,
    witness: Option<FlatView>,
    flats_scanned: u64,
}

fn cmd_witness(g: &Global, input: &PartitionArgs, b: usize, dmax: Option<u32>) -> CmdResult {
    let p = load_partition(input)?;
    let n = p
        .matroid()
        .binary_dimension()
        .ok_or_else(|| Failure::Usage("witness search needs a binary matroid".into()))?;
    if b == 0 {
        return Err(Failure::Usage("b must be at least 1".into()));
    }
    let d_max = dmax.unwrap_or(n);
    let budget = g.budget.unwrap_or(DEFAULT_FLAT_BUDGET);
    let scan = flat_witness_scan(&p, b, d_max, budget)?;
    let report = WitnessReport {
        b,
        d_max,
        ranks: crate::decomp::uncolorable_ranks(b, d_max),
        witness: scan.witness.map(FlatView::new).transpose()?,
        flats_scanned: scan.flats_scanned,
    };
    let code = if report.witness.is_some() {
        EXIT_REFUTED
    } else {
        EXIT_OK
    };
    let text = match g.format.unwrap_or(Format::Json) {
        Format::Json => json(&report),
        Format::Csv => return Err(no_csv("witness")),
        Format::Table => {
            let mut t = format!("ranks scanned {}\n", join(&report.ranks, " "));
            match &report.witness {
                Some(w) => {
                    let _ = writeln!(
                        t,
                        "uncovered rank-{} flat [{}] {{{}}}",
                        w.flat.d(),
                        hex_rows(&w.flat).join(" "),
                        join(&w.elements, " ")
                    );
                }
                None => t.push_str("no uncovered flat\n"),
            }
            let _ = writeln!(t, "flats scanned {}", report.flats_scanned);
            t
        }
    };
    Ok(Output { text, code })
}

#[derive(Serialize)]
struct CoveringRow {
    d: u32,
    total: String,
    covered: u64,
    uncovered_count: u64,
    /// `Σ C(|X_i|,2)` times the flats through one pair.
    pair_capacity: String,
    /// `ℓ·C(ck,2)·C(2^n,d-2)`.
    capacity: String,
    /// Same with `ℓ = n`.
    capacity_ell_n: String,
    /// `4c²·2^(nd)/n`.
    relaxed: String,
    within_capacity: bool,
    uncovered: Vec<FlatView>,
}

#[derive(Serialize)]
struct CoveringOutput {
    n: u32,
    c: u64,
    k: u64,
    ell: u64,
    part_sizes: Vec<usize>,
    rows: Vec<CoveringRow>,
}

fn cmd_covering(g: &Global, input: &PartitionArgs, ds: Option<RangeInclusive<u32>>, c: u64) -> CmdResult {
    let p = load_partition(input)?;
    let n = p
        .matroid()
        .binary_dimension()
        .ok_or_else(|| Failure::Usage("covering needs a binary matroid".into()))?;
    if c == 0 {
        return Err(Failure::Usage("c must be at least 1".into()));
    }
    let budget = g.budget.unwrap_or(DEFAULT_FLAT_BUDGET);
    let ds = ds.unwrap_or(2.min(n)..=n);
    let mut rows = Vec::new();
    let (mut k, mut ell) = (0, p.len() as u64);
    for d in ds {
        let cov = covering_report_with_budget(n, d, &p, budget)?;
        let cap = covering_capacity(n, d, &p, c)?;
        k = cap.k;
        ell = cap.ell;
        let pair = pair_capacity(n, d, &p);
        rows.push(CoveringRow {
            d,
            total: cov.total().to_string(),
            covered: cov.covered,
            uncovered_count: cov.uncovered.len() as u64,
            within_capacity: BigUint::from(cov.covered) <= pair && pair <= cap.capacity,
            pair_capacity: pair.to_string(),
            capacity: cap.capacity.to_string(),
            capacity_ell_n: cap.capacity_ell_n.to_string(),
            relaxed: cap.relaxed,
            uncovered: cov.uncovered.into_iter().map(FlatView::new).collect::<Result<_>>()?,
        });
    }
    let out = CoveringOutput {
        n,
        c,
        k,
        ell,
        part_sizes: p.parts().iter().map(Vec::len).collect(),
        rows,
    };
    let text = match g.format.unwrap_or(Format::Json) {
        Format::Json => json(&out),
        Format::Csv => {
            let mut t = String::from("d,total,covered,uncovered,pair_capacity,capacity,capacity_ell_n,relaxed\n");
            for r in &out.rows {
                let _ = writeln!(
                    t,
                    "{},{},{},{},{},{},{},{}",
                    r.d,
                    r.total,
                    r.covered,
                    r.uncovered_count,
                    r.pair_capacity,
                    r.capacity,
                    r.capacity_ell_n,
                    r.relaxed
                );
            }
            t
        }
        Format::Table => {
            let mut t = format!("binary({n}), {ell} parts, c = {c}, k = {k}\n");
            let _ = writeln!(
                t,
                "{:>3} {:>10} {:>10} {:>10} {:>14} {:>14} {:>14}",
                "d", "total", "covered", "uncovered", "pair cap", "capacity", "cap (l = n)"
            );
            for r in &out.rows {
                let _ = writeln!(
                    t,
                    "{:>3} {:>10} {:>10} {:>10} {:>14} {:>14} {:>14}",
                    r.d, r.total, r.covered, r.uncovered_count, r.pair_capacity, r.capacity, r.capacity_ell_n
                );
            }
            t
        }
    };
    Ok(Output { text, code: EXIT_OK })
}

fn cmd_search(g: &Global, args: &MatroidArgs, b: usize, c: usize) -> CmdResult {
    let m = load_matroid(args)?;
    let budget = g.budget.unwrap_or(DEFAULT_SEARCH_BUDGET);
    let report = search_decomposition(&m, b, c, budget)?;
    let code = match report.outcome {
        SearchOutcome::Found { .. } => EXIT_OK,
        SearchOutcome::Nonexistent => EXIT_REFUTED,
        SearchOutcome::Exhausted => EXIT_EXHAUSTED,
    };
    let text = match g.format.unwrap_or(Format::Json) {
        Format::Json => json(&report),
        Format::Csv => return Err(no_csv("search")),
        Format::Table => {
            let mut t = format!("b = {b}, c = {c}, k = {}\n", report.params.k);
            match &report.outcome {
                SearchOutcome::Found { parts } => {
                    t.push_str("found\n");
                    for (i, part) in parts.iter().enumerate() {
                        let _ = writeln!(t, "part {i:<3} {}", join(part, " "));
                    }
                }
                SearchOutcome::Nonexistent => t.push_str("no decomposition exists\n"),
                SearchOutcome::Exhausted => t.push_str("budget exhausted, existence undecided\n"),
            }
            let _ = writeln!(t, "nodes {}", report.nodes);
            t
        }
    };
    Ok(Output { text, code })
}

#[derive(Serialize)]
struct BoundRow {
    #[serde(flatten)]
    threshold: Threshold,
    statement: String,
}

fn cmd_bounds(g: &Global, bs: RangeInclusive<u32>, cs: RangeInclusive<u32>) -> CmdResult {
    let mut rows = Vec::new();
    for b in bs {
        for c in cs.clone() {
            let t = theorem_threshold(u64::from(b), u64::from(c))?;
            let statement = format!("no ({b},{c})-decomposition exists for n > {}", t.n_max);
            rows.push(BoundRow {
                threshold: t,
                statement,
            });
        }
    }
    let text = match g.format.unwrap_or(Format::Table) {
        Format::Json => json(&rows),
        Format::Csv => {
            let mut t = String::from("b,c,d,n_max\n");
            for r in &rows {
                let th = &r.threshold;
                let _ = writeln!(t, "{},{},{},{}", th.b, th.c, th.d, th.n_max);
            }
            t
        }
        Format::Table => {
            let mut t = format!("{:>4} {:>4} {:>4} {:>24}\n", "b", "c", "d", "n_max");
            for r in &rows {
                let th = &r.threshold;
                let _ = writeln!(
                    t,
                    "{:>4} {:>4} {:>4} {:>24}  {}",
                    th.b, th.c, th.d, th.n_max, r.statement
                );
            }
            t
        }
    };
    Ok(Output { text, code: EXIT_OK })
}
