//! `rcm`: exact cluster-model partition functions, growth-rate reports,
//! phase sweeps, root-circle diagnostics, and the built-in verification
//! suites, with JSON/CSV output suitable for scripting.

mod par;
mod param;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use param::Param;
use rcm_core::bethe;
use rcm_core::config::{Caps, Tolerances};
use rcm_core::error::Error as CoreError;
use rcm_core::graphs::{self, Graph};
use rcm_core::partition::{self, RcParams};
use rcm_core::rank2::SpinModel2;
use rcm_core::roots;
use rcm_core::verify;
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "rcm",
    version,
    about = "Exact random-cluster computations and growth-rate analysis on small regular graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact partition function with rank-1/rank-2 approximants and the
    /// Tutte-polynomial cross-check
    Partition(PartitionArgs),
    /// Growth-rate report for one (q, w, d) point
    Phi(PhiArgs),
    /// Phase sweep over a parameter grid (CSV)
    Sweep(SweepArgs),
    /// Built-in verification suites over the bundled corpus
    Verify(VerifyArgs),
    /// Per-vertex convergence table over seeded random regular graphs (CSV)
    Converge(ConvergeArgs),
    /// Root-circle diagnostics for one graph and parameter point
    Roots(RootsArgs),
}

#[derive(Args)]
struct GraphSource {
    /// Named graph: k4, k5, triangle, complete:N, cycle:N, petersen,
    /// octahedron, circulant:N:s1,s2,...
    #[arg(long)]
    graph: Option<String>,
    /// Edge-list file: first line "n m", then m lines "u v" (0-based)
    #[arg(long)]
    graph_file: Option<PathBuf>,
}

impl GraphSource {
    fn load(&self) -> Result<(String, Graph), CliError> {
        match (&self.graph, &self.graph_file) {
            (Some(_), Some(_)) => Err(CliError::Usage(
                "--graph and --graph-file are mutually exclusive".into(),
            )),
            (Some(name), None) => Ok((name.clone(), graphs::named_graph(name)?)),
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
                Ok((path.display().to_string(), graphs::load_graph(&text)?))
            }
            (None, None) => Err(CliError::Usage(
                "one of --graph or --graph-file is required".into(),
            )),
        }
    }
}

#[derive(Args)]
struct CapArgs {
    /// Cap on edges for 2^m subset enumeration
    #[arg(long)]
    edge_cap: Option<u32>,
    /// Cap on edges for deletion-contraction
    #[arg(long)]
    tutte_cap: Option<u32>,
    /// Cap on vertices for 2^n vertex-subset sums
    #[arg(long)]
    vertex_cap: Option<u32>,
    /// Cap on spin configurations r^n
    #[arg(long)]
    spin_cap: Option<u128>,
}

impl CapArgs {
    fn caps(&self) -> Caps {
        let mut caps = Caps::default();
        if let Some(c) = self.edge_cap {
            caps.edge_subsets = c;
        }
        if let Some(c) = self.tutte_cap {
            caps.tutte_edges = c;
        }
        if let Some(c) = self.vertex_cap {
            caps.vertex_subsets = c;
        }
        if let Some(c) = self.spin_cap {
            caps.spin_configs = c;
        }
        caps
    }
}

#[derive(Args)]
struct OutArg {
    /// Write output to this path instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TolArgs {
    /// Half-width of the w-band classified as critical
    #[arg(long)]
    critical_band: Option<f64>,
    /// Grid points scanned for stationary angles
    #[arg(long)]
    t_scan: Option<usize>,
    /// Grid points scanned for recursion fixed points
    #[arg(long)]
    fp_scan: Option<usize>,
}

impl TolArgs {
    fn tolerances(&self) -> Tolerances {
        let mut tol = Tolerances::default();
        if let Some(b) = self.critical_band {
            tol.critical_band = b;
        }
        if let Some(n) = self.t_scan {
            tol.t_scan_points = n;
        }
        if let Some(n) = self.fp_scan {
            tol.fp_scan_points = n;
        }
        tol
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct PartitionArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long)]
    q: Param,
    #[arg(long)]
    w: Param,
    #[command(flatten)]
    caps: CapArgs,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Args)]
struct PhiArgs {
    #[arg(long)]
    q: Param,
    #[arg(long)]
    w: Param,
    #[arg(long)]
    d: u32,
    #[command(flatten)]
    tol: TolArgs,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    d: u32,
    #[arg(long)]
    q: Option<Param>,
    #[arg(long)]
    w: Option<Param>,
    #[arg(long)]
    q_from: Option<f64>,
    #[arg(long)]
    q_to: Option<f64>,
    #[arg(long)]
    q_steps: Option<usize>,
    #[arg(long)]
    w_from: Option<f64>,
    #[arg(long)]
    w_to: Option<f64>,
    #[arg(long)]
    w_steps: Option<usize>,
    #[command(flatten)]
    tol: TolArgs,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run only checks whose tag or name contains this string
    #[arg(long)]
    only: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Args)]
struct ConvergeArgs {
    #[arg(long)]
    d: u32,
    #[arg(long)]
    q: Param,
    #[arg(long)]
    w: Param,
    /// Comma-separated list of graph sizes
    #[arg(long, value_delimiter = ',')]
    n: Vec<usize>,
    /// Comma-separated list of sampler seeds
    #[arg(long, value_delimiter = ',')]
    seeds: Vec<u64>,
    #[command(flatten)]
    caps: CapArgs,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Args)]
struct RootsArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long)]
    q: Param,
    #[arg(long)]
    w: Param,
    #[arg(long)]
    d: u32,
    #[command(flatten)]
    caps: CapArgs,
    #[command(flatten)]
    tol: TolArgs,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Core(CoreError),
    Io(std::io::Error),
    VerificationFailed(usize),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    /// 0 success, 1 verification failure, 2 usage error, 3 cap or domain
    /// error.
    fn code(&self) -> u8 {
        match self {
            CliError::VerificationFailed(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Core(e) => match e {
                CoreError::Parse(_)
                | CoreError::UnknownGraph(_)
                | CoreError::InvalidParameter(_) => 2,
                _ => 3,
            },
            CliError::Io(_) => 3,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) => format!("usage error: {m}"),
            CliError::Core(e) => e.to_string(),
            CliError::Io(e) => format!("io error: {e}"),
            CliError::VerificationFailed(n) => format!("{n} verification check(s) failed"),
        }
    }
}

fn emit(out: &OutArg, content: String) -> Result<(), CliError> {
    match &out.out {
        Some(path) => std::fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

#[derive(Serialize)]
struct Inequality {
    relation: &'static str,
    holds: bool,
    slack: f64,
}

#[derive(Serialize)]
struct PartitionReport {
    graph: String,
    n: usize,
    m: usize,
    q: f64,
    w: f64,
    z_rc: f64,
    z1: f64,
    z2: Option<f64>,
    z_via_tutte: Option<f64>,
    notes: Vec<String>,
    inequalities: Vec<Inequality>,
}

fn cmd_partition(args: &PartitionArgs) -> Result<(), CliError> {
    let (name, g) = args.source.load()?;
    let caps = args.caps.caps();
    let p = RcParams::new(args.q.value, args.w.value)?;
    let z_rc = partition::z_rc(&g, p, &caps)?;
    let z1 = partition::z1(&g, p);
    let mut notes = Vec::new();
    let z2 = if p.q > 1.0 {
        Some(partition::z2(&g, p, &caps)?)
    } else {
        notes.push("z2 skipped: needs q > 1".to_string());
        None
    };
    let z_via_tutte = if p.q == 0.0 || p.w == 0.0 {
        notes.push("z_via_tutte skipped: change of variables is singular at q = 0 or w = 0".into());
        None
    } else {
        let exact = match (&args.q.exact, &args.w.exact) {
            (Some(q), Some(w)) => Some(
                partition::z_rc_via_tutte_exact(&g, q, w, &caps)
                    .map(|z: BigRational| z.to_f64().unwrap_or(f64::NAN)),
            ),
            _ => None,
        };
        let computed = match exact {
            Some(r) => r,
            None => partition::z_rc_via_tutte(&g, p, &caps),
        };
        match computed {
            Ok(z) => Some(z),
            Err(CoreError::CapExceeded(msg)) => {
                notes.push(format!("z_via_tutte skipped: {msg}"));
                None
            }
            Err(e) => return Err(e.into()),
        }
    };
    let mut inequalities = Vec::new();
    let slack1 = (z_rc - z1) / z_rc.abs().max(f64::MIN_POSITIVE);
    inequalities.push(if p.q >= 1.0 {
        Inequality {
            relation: "z_rc >= z1 (q >= 1)",
            holds: slack1 >= -1e-9,
            slack: slack1,
        }
    } else {
        Inequality {
            relation: "z_rc <= z1 (q <= 1)",
            holds: -slack1 >= -1e-9,
            slack: -slack1,
        }
    });
    if let Some(z2v) = z2 {
        let slack2 = (z_rc - z2v) / z_rc.abs().max(f64::MIN_POSITIVE);
        inequalities.push(if p.q >= 2.0 {
            Inequality {
                relation: "z_rc >= z2 (q >= 2)",
                holds: slack2 >= -1e-9,
                slack: slack2,
            }
        } else {
            Inequality {
                relation: "z_rc <= z2 (1 < q <= 2)",
                holds: -slack2 >= -1e-9,
                slack: -slack2,
            }
        });
    }
    let report = PartitionReport {
        graph: name,
        n: g.n(),
        m: g.m(),
        q: p.q,
        w: p.w,
        z_rc,
        z1,
        z2,
        z_via_tutte,
        notes,
        inequalities,
    };
    emit(&args.out, format!("{}\n", serde_json::to_string_pretty(&report).unwrap()))
}

fn cmd_phi(args: &PhiArgs) -> Result<(), CliError> {
    let tol = args.tol.tolerances();
    let report = bethe::phase_report(args.q.value, args.w.value, args.d, &tol)?;
    emit(&args.out, format!("{}\n", serde_json::to_string_pretty(&report).unwrap()))
}

fn grid_axis(
    fixed: &Option<Param>,
    from: Option<f64>,
    to: Option<f64>,
    steps: Option<usize>,
    name: &str,
) -> Result<Option<Vec<f64>>, CliError> {
    match (fixed, from, to, steps) {
        (Some(p), None, None, None) => Ok(Some(vec![p.value])),
        (None, Some(a), Some(b), Some(k)) => {
            if k == 0 {
                return Err(CliError::Usage(format!("empty grid: --{name}-steps 0")));
            }
            if k == 1 {
                return Ok(Some(vec![a]));
            }
            Ok(Some(
                (0..k)
                    .map(|i| a + (b - a) * i as f64 / (k - 1) as f64)
                    .collect(),
            ))
        }
        (None, None, None, None) => Ok(None),
        _ => Err(CliError::Usage(format!(
            "specify --{name} or the full --{name}-from/--{name}-to/--{name}-steps triple"
        ))),
    }
}

fn csv_num(v: f64) -> String {
    format!("{v}")
}

fn cmd_sweep(args: &SweepArgs) -> Result<(), CliError> {
    let q_axis = grid_axis(&args.q, args.q_from, args.q_to, args.q_steps, "q")?;
    let w_axis = grid_axis(&args.w, args.w_from, args.w_to, args.w_steps, "w")?;
    let (qs, ws) = match (q_axis, w_axis) {
        (Some(qs), Some(ws)) => (qs, ws),
        _ => {
            return Err(CliError::Usage(
                "both a q specification and a w specification are required".into(),
            ))
        }
    };
    if qs.len() > 1 && ws.len() > 1 {
        return Err(CliError::Usage(
            "sweep one axis at a time: give a range for q or for w, not both".into(),
        ));
    }
    let points: Vec<(f64, f64)> = qs
        .iter()
        .flat_map(|&q| ws.iter().map(move |&w| (q, w)))
        .collect();
    let d = args.d;
    let tol = args.tol.tolerances();
    let rows: Vec<Result<String, CliError>> = par::par_map(points.len(), |i| {
        let (q, w) = points[i];
        let report = bethe::phase_report(q, w, d, &tol)?;
        let w_c = report.w_c.map(csv_num).unwrap_or_default();
        let regime = report
            .regime
            .map(|r| r.as_str().to_string())
            .unwrap_or_default();
        let r_c = report
            .r_c
            .map(csv_num)
            .unwrap_or_else(|| "inf".to_string());
        Ok(format!(
            "{},{},{},{},{},{},{},{},{}",
            csv_num(q),
            csv_num(w),
            d,
            w_c,
            csv_num(report.phi),
            csv_num(report.phi_rank1),
            regime,
            csv_num(report.t0),
            r_c
        ))
    });
    let mut csv = String::from("q,w,d,w_c,phi,phi_rank1,regime,t0,r_c\n");
    for row in rows {
        csv.push_str(&row?);
        csv.push('\n');
    }
    emit(&args.out, csv)
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), CliError> {
    let caps = Caps::default();
    let tol = Tolerances::default();
    let checks: Vec<_> = verify::all_checks()
        .into_iter()
        .filter(|c| match &args.only {
            Some(f) => c.tag.contains(f.as_str()) || c.name.contains(f.as_str()),
            None => true,
        })
        .collect();
    if checks.is_empty() {
        return Err(CliError::Usage(format!(
            "no checks match '{}'",
            args.only.as_deref().unwrap_or("")
        )));
    }
    let results = par::par_map(checks.len(), |i| verify::run_check(&checks[i], &caps, &tol));
    let failures = results.iter().filter(|r| !r.passed).count();
    let content = match args.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                name: &'a str,
                tag: &'a str,
                passed: bool,
                worst: f64,
                detail: &'a str,
            }
            let rows: Vec<Row> = results
                .iter()
                .map(|r| Row {
                    name: r.name,
                    tag: r.tag,
                    passed: r.passed,
                    worst: r.worst,
                    detail: &r.detail,
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&rows).unwrap())
        }
        Format::Text => {
            let mut s = String::new();
            for r in &results {
                let status = if r.passed { "PASS" } else { "FAIL" };
                s.push_str(&format!(
                    "{status} {:<28} [{}] worst={:.3e} {}\n",
                    r.name, r.tag, r.worst, r.detail
                ));
            }
            s.push_str(&format!(
                "{} checks, {} failed\n",
                results.len(),
                failures
            ));
            s
        }
    };
    emit(&args.out, content)?;
    if failures > 0 {
        return Err(CliError::VerificationFailed(failures));
    }
    Ok(())
}

fn cmd_converge(args: &ConvergeArgs) -> Result<(), CliError> {
    if args.n.is_empty() || args.seeds.is_empty() {
        return Err(CliError::Usage("--n and --seeds must be non-empty".into()));
    }
    let caps = args.caps.caps();
    let tol = Tolerances::default();
    let phi = bethe::phi(args.q.value, args.w.value, args.d, &tol)?;
    let ln_phi = phi.ln();
    let p = RcParams::new(args.q.value, args.w.value)?;
    let jobs: Vec<(usize, u64)> = args
        .n
        .iter()
        .flat_map(|&n| args.seeds.iter().map(move |&s| (n, s)))
        .collect();
    let d = args.d as usize;
    let rows = par::par_map(jobs.len(), |i| {
        let (n, seed) = jobs[i];
        let result = graphs::random_regular(n, d, seed)
            .and_then(|g| partition::z2(&g, p, &caps));
        match result {
            Ok(z2) => {
                let per_vertex = z2.ln() / n as f64;
                let gap = (per_vertex - ln_phi).abs();
                format!(
                    "{n},{seed},{},{},{}",
                    csv_num(per_vertex),
                    csv_num(ln_phi),
                    csv_num(gap)
                )
            }
            Err(_) => format!("{n},{seed},ERR,ERR,ERR"),
        }
    });
    let mut csv = String::from("n,seed,log_z2_per_vertex,log_phi,gap\n");
    for row in rows {
        csv.push_str(&row);
        csv.push('\n');
    }
    emit(&args.out, csv)
}

#[derive(Serialize)]
struct RootsReport {
    graph: String,
    d: u32,
    q: f64,
    w: f64,
    degree: usize,
    target_radius: f64,
    max_radial_deviation: f64,
    residual_max: f64,
    roots: Vec<[f64; 2]>,
}

fn cmd_roots(args: &RootsArgs) -> Result<(), CliError> {
    let (name, g) = args.source.load()?;
    let caps = args.caps.caps();
    let tol = args.tol.tolerances();
    let m = SpinModel2::rc(args.q.value, args.w.value)?;
    let report = roots::circle_check(&g, &m, args.d, &caps, &tol)?;
    let out = RootsReport {
        graph: name,
        d: args.d,
        q: args.q.value,
        w: args.w.value,
        degree: report.roots.len(),
        target_radius: report.target_radius,
        max_radial_deviation: report.max_radial_deviation,
        residual_max: report.residual_max,
        roots: report.roots.iter().map(|z| [z.re, z.im]).collect(),
    };
    emit(&args.out, format!("{}\n", serde_json::to_string_pretty(&out).unwrap()))
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Partition(a) => cmd_partition(a),
        Command::Phi(a) => cmd_phi(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Converge(a) => cmd_converge(a),
        Command::Roots(a) => cmd_roots(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.message());
            ExitCode::from(e.code())
        }
    }
}
