//! Command-line surface for the exact dilation-operator toolkit.
//!
//! Exit codes: 0 success, 2 input validation, 3 verification failure
//! (engine disagreement), 4 point budget exceeded.

mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;

use vlab_core::diagnostics::{self, Predicate};
use vlab_core::ehrhart::{self, LatticePolytope};
use vlab_core::error::Error;
use vlab_core::hecke::{self, UnMethod};
use vlab_core::roots;
use vlab_core::series::HVector;
use vlab_core::tables;

#[derive(Parser)]
#[command(name = "vlab", version, about = "Exact analysis of the dilation operator U_n on series numerators")]
struct Cli {
    /// Worker threads for sweeps and point counts. Capped by VLAB_THREADS.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Definition,
    Convolution,
    Eulerian,
}

impl From<MethodArg> for UnMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Definition => UnMethod::Definition,
            MethodArg::Convolution => UnMethod::Convolution,
            MethodArg::Eulerian => UnMethod::Eulerian,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PredicateArg {
    RealRooted,
    LogConcave,
    Unimodal,
    Chain,
    HibiStrict,
}

impl From<PredicateArg> for Predicate {
    fn from(p: PredicateArg) -> Self {
        match p {
            PredicateArg::RealRooted => Predicate::RealRooted,
            PredicateArg::LogConcave => Predicate::LogConcave,
            PredicateArg::Unimodal => Predicate::Unimodal,
            PredicateArg::Chain => Predicate::Chain,
            PredicateArg::HibiStrict => Predicate::HibiStrict,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Apply U_n to an h-vector.
    Transform(TransformArgs),
    /// Full report: decomposition, inequality suites, root certificates and
    /// the interlacing chain.
    Analyze(AnalyzeArgs),
    /// Scan a coefficient grid for minimal stable predicate thresholds.
    Sweep(SweepArgs),
    /// Dump exact combinatorial tables.
    Tables(TablesArgs),
}

#[derive(Args)]
struct TransformArgs {
    /// Comma-separated coefficients h_0,h_1,...
    #[arg(long = "h")]
    h: String,
    #[arg(long)]
    d: usize,
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value = "definition")]
    method: MethodArg,
    /// Run all three engines and fail on disagreement.
    #[arg(long)]
    verify: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Comma-separated coefficients h_0,h_1,... (exclusive with --polytope).
    #[arg(long = "h", conflicts_with = "polytope")]
    h: Option<String>,
    #[arg(long, requires = "h")]
    d: Option<usize>,
    /// Polytope JSON file {"vertices": [[..], ..]}; its delta-vector is
    /// analyzed.
    #[arg(long)]
    polytope: Option<String>,
    #[arg(long, default_value = "1")]
    n: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Root isolation width 2^-BITS.
    #[arg(long, default_value = "20")]
    isolation_bits: u32,
    /// Candidate budget for lattice point scans.
    #[arg(long, default_value_t = ehrhart::DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    d: usize,
    /// Grid bound: h_i ranges over 0..=coeff-max with h_0 = 1.
    #[arg(long)]
    coeff_max: i64,
    /// Scan window "lo:hi".
    #[arg(long)]
    n_range: String,
    #[arg(long, value_enum)]
    predicate: PredicateArg,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct TableSelect {
    /// Eulerian numbers A(d, 1..=d).
    #[arg(long)]
    eulerian: Option<usize>,
    /// Stirling numbers of the first kind S_0(d)..S_d(d).
    #[arg(long)]
    stirling: Option<usize>,
    /// Isolating intervals for the Eulerian polynomial roots.
    #[arg(long)]
    eulerian_roots: Option<usize>,
}

#[derive(Args)]
struct TablesArgs {
    #[command(flatten)]
    select: TableSelect,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn main() -> ExitCode {
    // Die quietly on closed pipes instead of panicking mid-write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    init_threads(cli.jobs);
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

/// Thread cap: the smaller of --jobs and VLAB_THREADS, when given.
fn init_threads(jobs: Option<usize>) {
    let cap = std::env::var("VLAB_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&v| v >= 1);
    let requested = jobs.filter(|&v| v >= 1);
    let threads = match (requested, cap) {
        (Some(r), Some(c)) => Some(r.min(c)),
        (Some(r), None) => Some(r),
        (None, Some(c)) => Some(c),
        (None, None) => None,
    };
    if let Some(t) = threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::EngineDisagreement { .. }) => 3,
        Some(Error::BudgetExceeded { .. }) => 4,
        _ => 2,
    }
}

fn run(command: Command) -> anyhow::Result<()> {
    match command {
        Command::Transform(args) => cmd_transform(args),
        Command::Analyze(args) => cmd_analyze(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Tables(args) => cmd_tables(args),
    }
}

fn parse_hvector(text: &str, d: usize) -> anyhow::Result<HVector> {
    let coeffs: Vec<i64> = text
        .split(',')
        .map(|s| s.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|e| Error::InvalidInput(format!("h-vector: {e}")))?;
    Ok(HVector::from_i64(d, &coeffs)?)
}

fn cmd_transform(args: TransformArgs) -> anyhow::Result<()> {
    let h = parse_hvector(&args.h, args.d)?;
    if h.coeff(0) != BigInt::one() {
        return Err(Error::PreconditionFailed {
            reason: "h_0 must equal 1".into(),
            witness: Some(0),
        }
        .into());
    }
    let result = if args.verify {
        hecke::un_verified(&h, args.n)?
    } else {
        hecke::un_by(&h, args.n, args.method.into())?
    };
    match args.format {
        Format::Text => println!("{result}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(&render::un_json(&result))?),
        Format::Csv => {
            println!("h;d;n;method;result");
            println!("{};{};{};{};{}", h, h.d(), args.n, result.method, result);
        }
    }
    Ok(())
}

fn cmd_analyze(args: AnalyzeArgs) -> anyhow::Result<()> {
    if args.format == Format::Csv {
        return Err(Error::InvalidInput("analyze supports text or json output".into()).into());
    }
    let width = BigRational::new(BigInt::one(), BigInt::one() << args.isolation_bits);

    let mut polytope_info: Option<(LatticePolytope, serde_json::Value)> = None;
    let h = if let Some(path) = &args.polytope {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("{path}: {e}")))?;
        let p = LatticePolytope::from_json(&text)?;
        let delta = ehrhart::delta_vector_with_budget(&p, args.budget)?;
        let h = delta.to_hvector()?;
        let mut info = serde_json::Map::new();
        info.insert("file".into(), path.clone().into());
        info.insert("dim".into(), p.dim().into());
        info.insert("vertices".into(), p.vertices().len().into());
        info.insert("facets".into(), p.facets().len().into());
        info.insert("delta".into(), render::bigint_list(delta.coeffs()));
        info.insert(
            "normalized_volume".into(),
            delta.normalized_volume().to_string().into(),
        );
        if p.dim() == 2 {
            info.insert(
                "boundary_identity".into(),
                ehrhart::boundary_identity_d2(&p, args.n)?.into(),
            );
        }
        polytope_info = Some((p, serde_json::Value::Object(info)));
        h
    } else {
        let text = args
            .h
            .as_deref()
            .ok_or_else(|| Error::InvalidInput("one of --h or --polytope is required".into()))?;
        let d = args
            .d
            .ok_or_else(|| Error::InvalidInput("--d is required with --h".into()))?;
        parse_hvector(text, d)?
    };

    // All three engines; a mismatch is a verification failure (exit 3).
    let un = hecke::un_verified(&h, args.n)?;
    let report = render::AnalysisReport::build(&h, &un, &width)?;

    match args.format {
        Format::Text => {
            if let Some((_, info)) = &polytope_info {
                println!("polytope: {}", serde_json::to_string(info)?);
            }
            print!("{}", report.render_text());
        }
        Format::Json => {
            let mut value = report.render_json();
            if let Some((_, info)) = polytope_info {
                value["polytope"] = info;
            }
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
        Format::Csv => unreachable!(),
    }
    Ok(())
}

fn parse_range(text: &str) -> anyhow::Result<(u32, u32)> {
    let parts: Vec<&str> = text.split(':').collect();
    let err = || Error::InvalidInput(format!("n-range must be lo:hi, got {text}"));
    if parts.len() != 2 {
        return Err(err().into());
    }
    let lo: u32 = parts[0].parse().map_err(|_| err())?;
    let hi: u32 = parts[1].parse().map_err(|_| err())?;
    if lo < 1 || hi < lo {
        return Err(err().into());
    }
    Ok((lo, hi))
}

fn cmd_sweep(args: SweepArgs) -> anyhow::Result<()> {
    let (lo, hi) = parse_range(&args.n_range)?;
    if args.coeff_max < 0 {
        return Err(Error::InvalidInput("coeff-max must be nonnegative".into()).into());
    }
    let predicate: Predicate = args.predicate.into();

    let mut grid: Vec<HVector> = Vec::new();
    let mut coeffs = vec![0i64; args.d + 1];
    coeffs[0] = 1;
    loop {
        grid.push(HVector::from_i64(args.d, &coeffs)?);
        let mut k = 1;
        while k <= args.d && coeffs[k] == args.coeff_max {
            coeffs[k] = 0;
            k += 1;
        }
        if k > args.d {
            break;
        }
        coeffs[k] += 1;
    }

    // Fan out per instance; aggregation stays in grid order.
    let rows: Vec<(String, Option<u32>, bool)> = grid
        .par_iter()
        .map(|h| {
            let flags: Vec<bool> = (lo..=hi)
                .map(|n| diagnostics::predicate_holds(h, predicate, n).unwrap())
                .collect();
            let first_hold = flags.iter().position(|&b| b).map(|i| lo + i as u32);
            let threshold = if *flags.last().unwrap() {
                let mut start = hi;
                for (i, &f) in flags.iter().enumerate().rev().skip(1) {
                    if f {
                        start = lo + i as u32;
                    } else {
                        break;
                    }
                }
                Some(start)
            } else {
                None
            };
            let stable = match (first_hold, threshold) {
                (Some(f), Some(t)) => f == t,
                (None, None) => true,
                _ => false,
            };
            (h.to_string(), threshold, stable)
        })
        .collect();

    let window = format!("{lo}:{hi}");
    let max_threshold = rows.iter().filter_map(|r| r.1).max();
    let all_have_threshold = rows.iter().all(|r| r.1.is_some());
    let all_stable = rows.iter().all(|r| r.2);

    match args.format {
        Format::Csv | Format::Text => {
            println!("h;d;n;predicate;threshold;stable");
            for (h, threshold, stable) in &rows {
                println!(
                    "{h};{};{window};{predicate};{};{stable}",
                    args.d,
                    threshold.map_or(String::from("-"), |t| t.to_string()),
                );
            }
            println!(
                "summary;{};{window};{predicate};{};{}",
                args.d,
                if all_have_threshold {
                    max_threshold.map_or(String::from("-"), |t| t.to_string())
                } else {
                    String::from("-")
                },
                all_stable,
            );
        }
        Format::Json => {
            let value = serde_json::json!({
                "d": args.d,
                "predicate": predicate.to_string(),
                "window": window,
                "rows": rows.iter().map(|(h, t, s)| serde_json::json!({
                    "h": h,
                    "threshold": t,
                    "stable": s,
                })).collect::<Vec<_>>(),
                "summary": {
                    "max_threshold": if all_have_threshold { max_threshold } else { None },
                    "all_stable": all_stable,
                },
            });
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
    }
    Ok(())
}

fn cmd_tables(args: TablesArgs) -> anyhow::Result<()> {
    const MAX_D: usize = 20;
    let check = |d: usize| -> anyhow::Result<()> {
        if d < 1 || d > MAX_D {
            Err(Error::InvalidInput(format!("d must be in 1..={MAX_D}")).into())
        } else {
            Ok(())
        }
    };
    if let Some(d) = args.select.eulerian {
        check(d)?;
        let table = tables::EulerianTable::new(d);
        let row: Vec<String> = table.row(d).iter().map(|v| v.to_string()).collect();
        match args.format {
            Format::Text | Format::Csv => println!("{}", row.join(",")),
            Format::Json => println!(
                "{}",
                serde_json::to_string_pretty(&serde_json::json!({"eulerian": {"d": d, "row": row}}))?
            ),
        }
    } else if let Some(d) = args.select.stirling {
        check(d)?;
        let table = tables::stirling_first(d);
        let row: Vec<String> = table.coeffs().iter().map(|v| v.to_string()).collect();
        match args.format {
            Format::Text | Format::Csv => println!("{}", row.join(",")),
            Format::Json => println!(
                "{}",
                serde_json::to_string_pretty(&serde_json::json!({"stirling": {"d": d, "coeffs": row}}))?
            ),
        }
    } else if let Some(d) = args.select.eulerian_roots {
        check(d)?;
        let roots = roots::eulerian_roots(d);
        match args.format {
            Format::Text | Format::Csv => {
                for iv in &roots.intervals {
                    println!("{iv}");
                }
            }
            Format::Json => {
                let list: Vec<serde_json::Value> = roots
                    .intervals
                    .iter()
                    .map(|iv| {
                        serde_json::json!({
                            "lo": iv.lo.to_string(),
                            "hi": iv.hi.to_string(),
                            "exact": iv.is_point(),
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(
                        &serde_json::json!({"eulerian_roots": {"d": d, "intervals": list}})
                    )?
                );
            }
        }
    }
    Ok(())
}
