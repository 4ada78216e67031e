//! Command line for certified approximate Tverberg points: dataset
//! generation, computation, certificate verification, and benchmarking.
//!
//! Exit codes: 0 success, 1 verification failure (or internal error),
//! 2 parse error, 3 cap exceeded.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tverberg::{
    better_tverberg, better_tverberg_auto, bootstrap_tverberg, brute_force_tverberg, generate,
    io::{certificate_from_json, certificate_to_json, format_points, parse_points, CertificateMeta},
    ms_tverberg, simple_tverberg, verify_certificate, Certificate64, Distribution, Error,
    PointSet64, SmallSolver, DEFAULT_BRUTE_CAP,
};

#[derive(Parser)]
#[command(name = "tverberg", version, about = "Certified approximate Tverberg points")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a dataset (deterministic in distribution, d, n, seed).
    Generate(GenerateArgs),
    /// Compute a Tverberg certificate for a points file.
    Compute(ComputeArgs),
    /// Verify a certificate against its points file.
    Verify(VerifyArgs),
    /// Run a depth/time benchmark matrix and emit CSV rows.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DistArg {
    Cube,
    Gauss,
    Grid,
}

impl From<DistArg> for Distribution {
    fn from(d: DistArg) -> Self {
        match d {
            DistArg::Cube => Distribution::UnitCube,
            DistArg::Gauss => Distribution::Gaussian,
            DistArg::Grid => Distribution::Grid,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AlgoArg {
    Simple,
    Better,
    Ms,
    Bootstrap,
    Brute,
}

impl AlgoArg {
    fn name(self) -> &'static str {
        match self {
            AlgoArg::Simple => "simple",
            AlgoArg::Better => "better",
            AlgoArg::Ms => "ms",
            AlgoArg::Bootstrap => "bootstrap",
            AlgoArg::Brute => "brute",
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SolverArg {
    Brute,
    Ms,
}

#[derive(Args)]
struct GenerateArgs {
    /// Distribution: cube (uniform [0,1]^d), gauss, or grid.
    #[arg(long)]
    dist: DistArg,
    /// Ambient dimension.
    #[arg(long)]
    d: usize,
    /// Number of points.
    #[arg(long)]
    n: usize,
    /// PRNG seed (ignored by grid).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ComputeArgs {
    /// Points file (one comma-separated point per line, '#' comments).
    #[arg(long)]
    input: PathBuf,
    /// Algorithm to run.
    #[arg(long)]
    algo: AlgoArg,
    /// Certificate output file.
    #[arg(long, default_value = "certificate.json")]
    out: PathBuf,
    /// Desired depth for the brute-force algorithm
    /// (default ceil(n/(d+1))).
    #[arg(long)]
    r: Option<usize>,
    /// Small-instance solver for `better` (default: automatic).
    #[arg(long)]
    small_solver: Option<SolverArg>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Points file the certificate refers to.
    #[arg(long)]
    points: PathBuf,
    /// Certificate file.
    #[arg(long)]
    cert: PathBuf,
    /// Validation tolerance (relative to coordinate scale for residuals).
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated dimensions, e.g. 1,2,3.
    #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
    dims: Vec<usize>,
    /// Comma-separated point counts.
    #[arg(long, value_delimiter = ',', default_value = "64,512")]
    sizes: Vec<usize>,
    /// Number of seeds per cell (seeds 0..count).
    #[arg(long, default_value_t = 3)]
    seeds: u64,
    /// Comma-separated algorithms.
    #[arg(long, value_delimiter = ',', default_value = "simple,ms,bootstrap")]
    algos: Vec<AlgoArg>,
    /// Input distribution.
    #[arg(long, default_value = "cube")]
    dist: DistArg,
    /// Output CSV file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

fn brute_cap() -> usize {
    std::env::var("TVERBERG_BRUTE_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_BRUTE_CAP)
}

/// Guaranteed depth of an algorithm on an (n, d) instance. For `better` the
/// bound depends on the small solver: the exhaustive one gives
/// `⌈n/2(d+1)^2⌉`, the doubling one `⌈n/4(d+1)^3⌉`; automatic selection uses
/// the exhaustive solver only for d <= 2.
fn guarantee(algo: AlgoArg, n: usize, d: usize, brute_r: Option<usize>, solver: Option<SolverArg>) -> usize {
    let div_ceil = |a: usize, b: usize| a.div_ceil(b);
    match algo {
        AlgoArg::Simple => {
            let denom = 1usize.checked_shl(d as u32).unwrap_or(usize::MAX);
            div_ceil(n, denom).max(1)
        }
        AlgoArg::Better => {
            let brute_mode = match solver {
                Some(SolverArg::Brute) => true,
                Some(SolverArg::Ms) => false,
                None => d <= 2,
            };
            if brute_mode {
                div_ceil(n, 2 * (d + 1) * (d + 1))
            } else {
                div_ceil(n, 4 * (d + 1) * (d + 1) * (d + 1))
            }
        }
        AlgoArg::Ms => div_ceil(n, 2 * (d + 1) * (d + 1)),
        AlgoArg::Bootstrap => div_ceil(n, 4 * (d + 1) * (d + 1) * (d + 1)),
        AlgoArg::Brute => brute_r.unwrap_or_else(|| div_ceil(n, d + 1)),
    }
}

fn run_algorithm(
    algo: AlgoArg,
    ps: &PointSet64,
    r: Option<usize>,
    solver: Option<SolverArg>,
) -> Result<Certificate64, Error> {
    let cap = brute_cap();
    match algo {
        AlgoArg::Simple => simple_tverberg(ps),
        AlgoArg::Ms => ms_tverberg(ps),
        AlgoArg::Bootstrap => bootstrap_tverberg(ps),
        AlgoArg::Brute => {
            let r = r.unwrap_or_else(|| ps.len().div_ceil(ps.dim() + 1));
            brute_force_tverberg(ps, r, cap)
        }
        AlgoArg::Better => match solver {
            Some(SolverArg::Brute) => better_tverberg(ps, SmallSolver::Brute, cap),
            Some(SolverArg::Ms) => better_tverberg(ps, SmallSolver::RadonDoubling, cap),
            None => better_tverberg_auto(ps, cap),
        },
    }
}

fn read_to_string(path: &PathBuf) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Parse(_) => 2,
        Error::CapExceeded { .. } => 3,
        _ => 1,
    }
}

fn cmd_generate(args: GenerateArgs) -> Result<(), Error> {
    let ps = generate(args.dist.into(), args.d, args.n, args.seed)
        .map_err(|e| Error::Parse(e.to_string()))?;
    let text = format_points(&ps);
    match args.out {
        Some(path) => fs::write(&path, text)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_compute(args: ComputeArgs) -> Result<(), Error> {
    let text = read_to_string(&args.input)?;
    let ps = parse_points(&text)?;
    let started = Instant::now();
    let cert = run_algorithm(args.algo, &ps, args.r, args.small_solver)?;
    let wall_ms = started.elapsed().as_secs_f64() * 1e3;

    let meta = CertificateMeta {
        algorithm: args.algo.name().to_string(),
        n: ps.len(),
        dimension: ps.dim(),
    };
    fs::write(&args.out, certificate_to_json(&cert, &meta))
        .map_err(|e| Error::Parse(format!("{}: {e}", args.out.display())))?;

    let g = guarantee(args.algo, ps.len(), ps.dim(), args.r, args.small_solver);
    println!(
        "n={} d={} algorithm={} depth={} guarantee={} wall_ms={:.3}",
        ps.len(),
        ps.dim(),
        args.algo.name(),
        cert.depth(),
        g,
        wall_ms
    );
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<bool, Error> {
    let ps = parse_points(&read_to_string(&args.points)?)?;
    let (cert, meta) = certificate_from_json(&read_to_string(&args.cert)?)?;
    if meta.dimension != ps.dim() || meta.n != ps.len() {
        println!(
            "certificate metadata (n={}, d={}) does not match points (n={}, d={})",
            meta.n,
            meta.dimension,
            ps.len(),
            ps.dim()
        );
        return Ok(false);
    }
    let report = verify_certificate(&ps, &cert, args.tol);
    println!("{report}");
    Ok(report.valid)
}

/// algorithm, d, n, seed, depth, guarantee, ratio, wall_ms
type BenchRow = (String, usize, usize, u64, usize, usize, f64, f64);

fn cmd_bench(args: BenchArgs) -> Result<(), Error> {
    let mut rows: Vec<BenchRow> = Vec::new();
    for &algo in &args.algos {
        for &d in &args.dims {
            for &n in &args.sizes {
                for seed in 0..args.seeds {
                    let ps = generate(args.dist.into(), d, n, seed)
                        .map_err(|e| Error::Parse(e.to_string()))?;
                    let started = Instant::now();
                    let cert = match run_algorithm(algo, &ps, None, None) {
                        Ok(cert) => cert,
                        Err(err) => {
                            eprintln!("skipping {} d={d} n={n} seed={seed}: {err}", algo.name());
                            continue;
                        }
                    };
                    let wall_ms = started.elapsed().as_secs_f64() * 1e3;
                    let g = guarantee(algo, n, d, None, None);
                    let ratio = cert.depth() as f64 / g as f64;
                    rows.push((algo.name().to_string(), d, n, seed, cert.depth(), g, ratio, wall_ms));
                }
            }
        }
    }
    rows.sort_by(|a, b| {
        (&a.0, a.1, a.2, a.3).cmp(&(&b.0, b.1, b.2, b.3))
    });

    let mut csv = String::from("algorithm,d,n,seed,depth,guarantee,ratio,wall_ms\n");
    for (algo, d, n, seed, depth, g, ratio, wall_ms) in rows {
        csv.push_str(&format!("{algo},{d},{n},{seed},{depth},{g},{ratio:.4},{wall_ms:.3}\n"));
    }
    match args.out {
        Some(path) => fs::write(&path, csv)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?,
        None => print!("{csv}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome: Result<bool, Error> = match cli.cmd {
        Cmd::Generate(args) => cmd_generate(args).map(|()| true),
        Cmd::Compute(args) => cmd_compute(args).map(|()| true),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Bench(args) => cmd_bench(args).map(|()| true),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
