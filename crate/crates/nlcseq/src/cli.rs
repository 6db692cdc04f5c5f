//! Command-line frontend: analysis, generation, verification and
//! benchmarking with deterministic machine-readable output.
//!
//! Conventions:
//!
//! * stdout carries data, stderr carries diagnostics (including all timing);
//! * output is byte-identical across runs and worker counts — wall-clock
//!   values appear in JSON only behind `--timing` and are `null` otherwise;
//! * sequences print index-0 leftmost;
//! * exit code 0 on success, 1 on verification failure, 2 on usage errors
//!   (unknown flags, malformed bit strings, range-guard violations).
//!
//! The `NLCSEQ_WORKERS` environment variable sets the default worker count
//! for the parallel library calls; the CLI itself is single-threaded
//! orchestration.

use std::error::Error;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bitseq::BitSeq;
use crate::complexity::{self, Direction};
use crate::gen_debruijn;
use crate::gen_large;
use crate::gen_small::{self, ShiftClass};
use crate::oracle;
use crate::structure;

/// Entry point: parses `argv`, dispatches, and returns the process exit code.
pub fn run<I>(argv: I) -> i32
where
    I: IntoIterator<Item = String>,
{
    init_workers();
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

/// Builds the global worker pool from `NLCSEQ_WORKERS` when set.
fn init_workers() {
    if let Ok(value) = std::env::var("NLCSEQ_WORKERS") {
        if let Ok(workers) = value.parse::<usize>() {
            if workers > 0 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(workers)
                    .build_global();
            }
        }
    }
}

#[derive(Parser)]
#[command(
    name = "nlcseq",
    version,
    about = "Nonlinear-complexity analysis and generation for periodic binary sequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Nonlinear complexity of a bit string (finite, or of its periodic
    /// extension with --periodic).
    Nlc {
        /// Sequence as a string of '0'/'1', index 0 leftmost.
        bits: String,
        /// Compute the complexity of the periodic extension instead.
        #[arg(long)]
        periodic: bool,
    },
    /// Finite complexity of every rotation, as one space-separated line.
    Profile {
        bits: String,
        /// Profile over left rotations (default).
        #[arg(long, conflicts_with = "right")]
        left: bool,
        /// Profile over right rotations.
        #[arg(long)]
        right: bool,
    },
    /// All structural decompositions of a sequence, one `c=.. d=.. q=.. r=..
    /// add=..` line per spacing.
    Decompose { bits: String },
    /// Generate all shift classes of n-periodic sequences with the given
    /// complexity.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        omega: usize,
        /// Generation route; defaults to `small` when omega <= n/2 and
        /// `large` otherwise.
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
        #[arg(long, value_enum, default_value_t = Format::Lines)]
        format: Format,
        /// With `--format lines`: print every member of every class instead
        /// of the witness set.
        #[arg(long)]
        expand: bool,
        /// Print only the class count.
        #[arg(long)]
        count_only: bool,
        /// Include elapsed seconds in JSON output (breaks byte-for-byte
        /// determinism; off by default).
        #[arg(long)]
        timing: bool,
    },
    /// Generate all shift-inequivalent de Bruijn sequences of order m.
    Debruijn {
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = Format::Lines)]
        format: Format,
        #[arg(long)]
        expand: bool,
        /// Print `classes=<k> prefilter=<size>` only.
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        timing: bool,
    },
    /// Cross-check the structural generators against the exhaustive oracle
    /// and the structural laws for one length.
    Verify {
        #[arg(long)]
        n: usize,
    },
    /// Scan representatives for the open question about the maximal rotated
    /// complexity when the added terms exceed n-c-d.
    ScanOpenProblem {
        #[arg(long, default_value_t = 16)]
        max_n: usize,
    },
    /// Compare the structured generator's operation counter against the
    /// exhaustive baseline.
    Bench {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        omega: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Small,
    Large,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Lines,
    Json,
    Csv,
}

/// Machine-readable generation result (`schema: 1`).
#[derive(Serialize)]
struct GenerationReport {
    schema: u32,
    n: usize,
    omega: usize,
    method: String,
    class_count: usize,
    sequence_count: usize,
    classes: Vec<ClassRecord>,
    /// Elapsed seconds; `null` unless `--timing` was given, so that output
    /// stays byte-identical across runs.
    elapsed: Option<f64>,
    operation_counter: u64,
}

#[derive(Serialize)]
struct ClassRecord {
    canonical: String,
    witness: Option<String>,
    spacing: Option<usize>,
    add: Option<usize>,
}

impl ClassRecord {
    fn from_class(class: &ShiftClass) -> Self {
        ClassRecord {
            canonical: class.canonical.to_string(),
            witness: class.witness.map(|w| w.seq.to_string()),
            spacing: class.witness.map(|w| w.form.d),
            add: class.witness.map(|w| w.add),
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, Box<dyn Error>> {
    match cli.command {
        Command::Nlc { bits, periodic } => {
            let s: BitSeq = bits.parse()?;
            let value = if periodic {
                complexity::nlc_periodic(&s)
            } else {
                complexity::nlc_finite(&s)
            };
            println!("{value}");
            Ok(0)
        }
        Command::Profile { bits, right, .. } => {
            let s: BitSeq = bits.parse()?;
            let direction = if right { Direction::Right } else { Direction::Left };
            let profile = complexity::shift_profile(&s, direction);
            let line: Vec<String> = profile.values.iter().map(ToString::to_string).collect();
            println!("{}", line.join(" "));
            Ok(0)
        }
        Command::Decompose { bits } => {
            let s: BitSeq = bits.parse()?;
            for form in structure::decompose(&s) {
                let add = structure::add_count(&s, &form)?;
                println!(
                    "c={} d={} q={} r={} add={}",
                    form.c, form.d, form.q, form.r, add
                );
            }
            Ok(0)
        }
        Command::Gen { n, omega, method, format, expand, count_only, timing } => {
            let method = method.unwrap_or(if omega <= n / 2 {
                MethodArg::Small
            } else {
                MethodArg::Large
            });
            let started = Instant::now();
            let mut ops = 0u64;
            let (classes, witnesses, method_name) = match method {
                MethodArg::Small => {
                    let witness_set = gen_small::gen_s_small_counted(n, omega, &mut ops)?;
                    let witnesses: Vec<BitSeq> = witness_set.iter().copied().collect();
                    let classes = gen_small::classes_from_witnesses(omega, &witness_set);
                    (classes, witnesses, "small")
                }
                MethodArg::Large => {
                    let classes = gen_large::gen_p_large_counted(n, omega, &mut ops)?;
                    let mut witnesses: Vec<BitSeq> = classes
                        .iter()
                        .filter_map(|class| class.witness.map(|w| w.seq))
                        .collect();
                    witnesses.sort();
                    (classes, witnesses, "large")
                }
            };
            emit_generation(
                n,
                omega,
                method_name,
                &classes,
                &witnesses,
                format,
                expand,
                count_only,
                timing.then(|| started.elapsed().as_secs_f64()),
                ops,
            );
            Ok(0)
        }
        Command::Debruijn { m, format, expand, count_only, timing } => {
            let n = 1usize << m;
            let started = Instant::now();
            let mut ops = 0u64;
            let classes = gen_debruijn::gen_debruijn_counted(m, &mut ops)?;
            if count_only {
                let prefilter = gen_debruijn::gen_b0_tilde(m)?.len();
                println!("classes={} prefilter={}", classes.len(), prefilter);
                return Ok(0);
            }
            let mut witnesses: Vec<BitSeq> = classes
                .iter()
                .filter_map(|class| class.witness.map(|w| w.seq))
                .collect();
            witnesses.sort();
            emit_generation(
                n,
                m,
                "debruijn",
                &classes,
                &witnesses,
                format,
                expand,
                false,
                timing.then(|| started.elapsed().as_secs_f64()),
                ops,
            );
            Ok(0)
        }
        Command::Verify { n } => verify(n),
        Command::ScanOpenProblem { max_n } => {
            let findings = oracle::scan_open_problem(max_n)?;
            for f in &findings {
                println!(
                    "n={} seq={} d={} add={} max_rotated={} bound_violated={}",
                    f.n, f.seq, f.d, f.add, f.max_rotated, f.bound_violated
                );
            }
            println!("findings={}", findings.len());
            Ok(if findings.is_empty() { 0 } else { 1 })
        }
        Command::Bench { n, omega } => bench(n, omega),
    }
}

/// Prints a generation result in the requested format.
#[allow(clippy::too_many_arguments)]
fn emit_generation(
    n: usize,
    omega: usize,
    method: &str,
    classes: &[ShiftClass],
    witnesses: &[BitSeq],
    format: Format,
    expand: bool,
    count_only: bool,
    elapsed: Option<f64>,
    ops: u64,
) {
    if count_only {
        println!("classes={}", classes.len());
        return;
    }
    match format {
        Format::Lines => {
            if expand {
                let mut members: Vec<BitSeq> = classes
                    .iter()
                    .flat_map(|class| (0..n).map(move |k| class.canonical.rotate_left(k)))
                    .collect();
                members.sort();
                members.dedup();
                for s in members {
                    println!("{s}");
                }
            } else {
                for s in witnesses {
                    println!("{s}");
                }
            }
        }
        Format::Json => {
            let report = GenerationReport {
                schema: 1,
                n,
                omega,
                method: method.to_string(),
                class_count: classes.len(),
                // Every class is an aperiodic necklace, so each orbit has
                // exactly n members.
                sequence_count: classes.len() * n,
                classes: classes.iter().map(ClassRecord::from_class).collect(),
                elapsed,
                operation_counter: ops,
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("report serializes")
            );
        }
        Format::Csv => {
            println!("canonical,omega,add,spacing");
            for class in classes {
                let add = class
                    .witness
                    .map(|w| w.add.to_string())
                    .unwrap_or_default();
                let spacing = class
                    .witness
                    .map(|w| w.form.d.to_string())
                    .unwrap_or_default();
                println!("{},{},{},{}", class.canonical, class.omega, add, spacing);
            }
        }
    }
}

/// Runs the oracle cross-checks for one length; exit 1 on any failure.
fn verify(n: usize) -> Result<i32, Box<dyn Error>> {
    let mut failed = false;

    if n <= 16 {
        for c in structure::ceil_log2(n)..=n / 2 + 1 {
            let ok = oracle::verify_theorem1(n, c)?;
            failed |= !ok;
            println!("closure c={c}: {}", pass_str(ok));
        }
        let report = oracle::verify_theorem2(n)?;
        let ok = report.violations.is_empty();
        failed |= !ok;
        println!(
            "representative-law: {} (representatives={})",
            pass_str(ok),
            report.checked
        );
    } else {
        eprintln!("skipping theorem checks: n={n} exceeds guard 16");
    }

    if n <= 14 {
        for check in oracle::verify_generation(n)? {
            failed |= !check.pass;
            println!(
                "generation omega={}: {} (classes={})",
                check.omega,
                pass_str(check.pass),
                check.class_count
            );
        }
    } else {
        eprintln!("skipping generation check: n={n} exceeds guard 14");
    }

    Ok(if failed { 1 } else { 0 })
}

fn pass_str(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

/// Reports the structured generator's operation counter next to the
/// exhaustive baseline's. Wall times go to stderr so stdout stays
/// deterministic.
fn bench(n: usize, omega: usize) -> Result<i32, Box<dyn Error>> {
    let started = Instant::now();
    let mut structured_ops = 0u64;
    let class_count = if omega <= n / 2 {
        gen_small::gen_p_small_counted(n, omega, &mut structured_ops)?.len()
    } else {
        gen_large::gen_p_large_counted(n, omega, &mut structured_ops)?.len()
    };
    let structured_time = started.elapsed();

    let started = Instant::now();
    let catalog = oracle::oracle_catalog(n, oracle::DEFAULT_MAX_N)?;
    let oracle_time = started.elapsed();

    let advantage = catalog.ops as f64 / structured_ops.max(1) as f64;
    println!("classes={class_count}");
    println!("structured_ops={structured_ops}");
    println!("oracle_ops={}", catalog.ops);
    println!("advantage={advantage:.1}");
    eprintln!(
        "structured: {:.3}s, oracle: {:.3}s",
        structured_time.as_secs_f64(),
        oracle_time.as_secs_f64()
    );
    Ok(0)
}
