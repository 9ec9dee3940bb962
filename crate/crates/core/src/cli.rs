//! Command-line front end: argument parsing, the four subcommands and
//! their text, JSON and SVG renderings.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::cyclotomic::FLOAT_TOLERANCE;
use crate::error::Error;
use crate::gelfand_cetlin::{codim1_faces, expected_face_count, potential_pair, verify_pullback};
use crate::mirror::{
    branes_summary_with_tolerance, chart_report, critical_points, member_via_alternants,
    plucker_minor, positive_critical_point, verify_equivariance, BranesSummary, DihedralElement,
};
use crate::quantum::{pieri_matrix, qh_sign, spectral_decomposition_with_tolerance, verify_schur_eigenvector, SpectralSummary};
use crate::symmetric::{alternant, schur_jacobi_trudi, schur_ssyt, vandermonde, RootSet};
use crate::young::{enumerate_diagrams, GridShape};

#[derive(Parser, Debug)]
#[command(name = "grassmirror", version, about = "Quantum cohomology and mirror data of Grassmannians Gr(k,n)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Eigenvalues of c1 acting on quantum cohomology.
    Flower(CommonArgs),
    /// Spectral summands reached by critical points in the rectangular chart.
    Branes(CommonArgs),
    /// Run every consistency check for one grid.
    Verify(CommonArgs),
    /// Disk potential, chart potential and the substitution between them.
    Potential(CommonArgs),
}

#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads; defaults to the number of available cores.
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long, default_value_t = FLOAT_TOLERANCE)]
    pub tol: f64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Flower,
    Branes,
    Verify,
    Potential,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub grid: GridShape,
    pub command: CommandKind,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub jobs: usize,
    pub tol: f64,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("verification failed: {0}")]
    Failed(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) | CliError::Io(_) => 1,
            CliError::Failed(_) => 2,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::SpectralInvariant(_) => CliError::Failed(e.to_string()),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

impl RunConfig {
    pub fn from_command(command: &Command) -> Result<RunConfig, CliError> {
        let (kind, args) = match command {
            Command::Flower(a) => (CommandKind::Flower, a),
            Command::Branes(a) => (CommandKind::Branes, a),
            Command::Verify(a) => (CommandKind::Verify, a),
            Command::Potential(a) => (CommandKind::Potential, a),
        };
        let grid = GridShape::new(args.k, args.n).map_err(|e| CliError::Invalid(e.to_string()))?;
        if args.format == Format::Svg && !matches!(kind, CommandKind::Flower | CommandKind::Branes) {
            return Err(CliError::Invalid("svg output is only available for flower and branes".into()));
        }
        if !(args.tol > 0.0 && args.tol.is_finite()) {
            return Err(CliError::Invalid(format!("tolerance must be positive, got {}", args.tol)));
        }
        let jobs = match args.jobs {
            Some(0) => return Err(CliError::Invalid("--jobs must be at least 1".into())),
            Some(j) => j,
            None => std::thread::available_parallelism().map_or(1, |n| n.get()),
        };
        Ok(RunConfig {
            grid,
            command: kind,
            format: args.format,
            out: args.out.clone(),
            jobs,
            tol: args.tol,
        })
    }
}

/// Rendered output plus whether a verification step failed.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub output: String,
    pub failed: bool,
}

/// Runs a command on a dedicated thread pool of `config.jobs` workers.
pub fn run(config: &RunConfig) -> Result<Outcome, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| CliError::Invalid(e.to_string()))?;
    pool.install(|| match config.command {
        CommandKind::Flower => cmd_flower(config),
        CommandKind::Branes => cmd_branes(config),
        CommandKind::Verify => cmd_verify(config),
        CommandKind::Potential => cmd_potential(config),
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

fn fmt_complex(re: f64, im: f64) -> String {
    format!("{re:+.9} {im:+.9}i")
}

fn fmt_sets(sets: &[RootSet]) -> String {
    sets.iter()
        .map(|r| {
            let e: Vec<String> = r.exponents().iter().map(u32::to_string).collect();
            format!("{{{}}}", e.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn cmd_flower(config: &RunConfig) -> Result<Outcome, CliError> {
    let summary = spectral_decomposition_with_tolerance(config.grid, config.tol)?;
    let output = match config.format {
        Format::Json => to_json(&summary),
        Format::Svg => render_svg(&summary, None),
        Format::Text => {
            let mut s = String::new();
            let grid = config.grid;
            let _ = writeln!(
                s,
                "{grid}: {} eigenvalues of c1, {} distinct, {} of maximal modulus",
                summary.total_multiplicity(),
                summary.groups.len(),
                summary.max_modulus_count()
            );
            let _ = writeln!(s, "roots of x^{} = {}, exponents mod {}", grid.n(), qh_sign(grid.k()), 2 * grid.n());
            for g in &summary.groups {
                let _ = writeln!(
                    s,
                    "{}  |λ|={:.9}  mult={}{}  J: {}",
                    fmt_complex(g.value.re, g.value.im),
                    g.modulus,
                    g.multiplicity,
                    if g.max_modulus { "  max" } else { "" },
                    fmt_sets(&g.root_sets)
                );
            }
            s
        }
    };
    Ok(Outcome { output, failed: false })
}

pub fn cmd_branes(config: &RunConfig) -> Result<Outcome, CliError> {
    let branes = branes_summary_with_tolerance(config.grid, config.tol)?;
    let output = match config.format {
        Format::Json => to_json(&branes),
        Format::Svg => render_svg(&branes.spectrum, Some(&branes.occupied)),
        Format::Text => {
            let mut s = String::new();
            let grid = config.grid;
            let occupied = branes.occupied.iter().filter(|&&o| o).count();
            let _ = writeln!(
                s,
                "{grid}: {occupied} of {} summands occupied; critical values match eigenvalues: {}",
                branes.occupied.len(),
                if branes.values_match { "yes" } else { "no" }
            );
            for ((g, &occ), w) in branes.spectrum.groups.iter().zip(&branes.occupied).zip(&branes.witnesses) {
                let _ = writeln!(
                    s,
                    "{}  mult={}  {}  I: {}",
                    fmt_complex(g.value.re, g.value.im),
                    g.multiplicity,
                    if occ { "occupied" } else { "empty" },
                    fmt_sets(w)
                );
            }
            s
        }
    };
    Ok(Outcome {
        output,
        failed: !branes.values_match,
    })
}

pub fn cmd_potential(config: &RunConfig) -> Result<Outcome, CliError> {
    let pair = potential_pair(config.grid)?;
    let output = match config.format {
        Format::Json => to_json(&pair),
        _ => {
            let mut s = String::new();
            let _ = writeln!(s, "{}: {} codimension-one faces", config.grid, pair.faces.len());
            let _ = writeln!(s, "disk:  {}", pair.disk);
            let _ = writeln!(s, "chart: {}", pair.chart);
            let _ = writeln!(s, "pullback equals chart potential: {}", if pair.pullback_matches { "yes" } else { "no" });
            let _ = writeln!(s, "substitution:");
            for (x, image) in &pair.substitution {
                let _ = writeln!(s, "  {x} -> {image}");
            }
            s
        }
    };
    Ok(Outcome {
        output,
        failed: !pair.pullback_matches,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub witnesses: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub k: usize,
    pub n: usize,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

fn check(name: &'static str, detail: String, witnesses: Vec<String>) -> CheckResult {
    CheckResult {
        name,
        passed: witnesses.is_empty(),
        detail,
        witnesses,
    }
}

/// Root sets used by the checks that are exponential in the number of
/// variables: all of them up to 64, otherwise the first 64.
const SAMPLE: usize = 64;

pub fn verify_report(grid: GridShape, tol: f64) -> Result<VerifyReport, CliError> {
    let mut checks = Vec::new();
    let (k, n) = (grid.k(), grid.n());
    let diagrams = enumerate_diagrams(grid);

    let matrix = pieri_matrix(grid);
    let qh_sets = RootSet::enumerate(n, k, qh_sign(k));
    let bad: Vec<String> = qh_sets
        .par_iter()
        .filter(|j| !verify_schur_eigenvector(&matrix, j).unwrap_or(false))
        .map(|j| j.to_string())
        .collect();
    checks.push(check("schur eigenvectors", format!("{} root sets", qh_sets.len()), bad));

    let spectrum: Option<SpectralSummary> = match spectral_decomposition_with_tolerance(grid, tol) {
        Ok(s) => {
            checks.push(check(
                "spectrum structure",
                format!("{} distinct eigenvalues, {} of maximal modulus", s.groups.len(), s.max_modulus_count()),
                vec![],
            ));
            Some(s)
        }
        Err(e) => {
            checks.push(check("spectrum structure", String::new(), vec![e.to_string()]));
            None
        }
    };

    // three routes on the quantum side (|J| = k) and on the mirror side (|I| = n-k, transposed diagrams)
    let mirror_sets = critical_points(grid);
    let mut bad = Vec::new();
    let mut cases = 0usize;
    for (sets, transpose) in [(&qh_sets, false), (&mirror_sets, true)] {
        let found: Vec<(usize, Vec<String>)> = sets
            .par_iter()
            .take(SAMPLE)
            .map(|roots| {
                let mut bad = Vec::new();
                let vdm = vandermonde(roots);
                for d in &diagrams {
                    let lam = if transpose { d.transpose() } else { d.clone() };
                    let ssyt = schur_ssyt(lam.rows(), roots).expect("fits");
                    let jt = schur_jacobi_trudi(lam.rows(), roots).expect("fits");
                    let alt = alternant(lam.rows(), roots).expect("fits");
                    if ssyt != jt || alt != &vdm * &ssyt {
                        bad.push(format!("{lam} at {roots}"));
                    }
                }
                (diagrams.len(), bad)
            })
            .collect();
        for (c, b) in found {
            cases += c;
            bad.extend(b);
        }
    }
    checks.push(check("three-route schur agreement", format!("{cases} evaluations"), bad));

    let bad: Vec<String> = mirror_sets
        .par_iter()
        .take(SAMPLE)
        .flat_map_iter(|roots| {
            let vdm = vandermonde(roots);
            diagrams
                .iter()
                .filter(|d| {
                    let lhs = plucker_minor(grid, roots, d).expect("valid root set");
                    let s = schur_ssyt(d.transpose().rows(), roots).expect("fits");
                    lhs != &vdm * &s
                })
                .map(|d| format!("{d} at {roots}"))
                .collect::<Vec<_>>()
        })
        .collect();
    checks.push(check("plucker minors", "minor = vandermonde · schur".into(), bad));

    let bad: Vec<String> = mirror_sets
        .par_iter()
        .take(SAMPLE)
        .filter(|roots| {
            let via_table = chart_report(grid, roots).map(|r| r.member).ok();
            via_table != member_via_alternants(grid, roots).ok()
        })
        .map(|r| r.to_string())
        .collect();
    checks.push(check("membership via alternants", "table and alternant routes agree".into(), bad));

    let pullback_ok = verify_pullback(grid)?;
    checks.push(check(
        "pullback identity",
        "disk potential pulled back equals chart potential".into(),
        if pullback_ok { vec![] } else { vec![grid.to_string()] },
    ));

    let faces = codim1_faces(grid).len();
    let expected = expected_face_count(grid);
    checks.push(check(
        "face count",
        format!("{faces} faces, expected {expected}"),
        if faces == expected { vec![] } else { vec![faces.to_string()] },
    ));

    let eq = verify_equivariance(grid)?;
    checks.push(check(
        "dihedral equivariance",
        format!("{} (I, g) pairs", eq.pairs_checked),
        eq.violations
            .iter()
            .map(|v| format!("{:?} {} {}", v.roots, v.element, v.check))
            .collect(),
    ));

    if let Some(spectrum) = spectrum {
        let branes: BranesSummary = branes_summary_with_tolerance(grid, tol)?;
        checks.push(check(
            "critical values match eigenvalues",
            "as multisets".into(),
            if branes.values_match { vec![] } else { vec![grid.to_string()] },
        ));
        checks.push(check(
            "occupancy closed under dihedral action",
            "rotation and conjugation of eigenvalues".into(),
            if branes.occupancy_is_dihedral() { vec![] } else { vec![grid.to_string()] },
        ));

        let i0 = positive_critical_point(grid);
        let orbit: Vec<RootSet> = (0..n as i64)
            .map(|t| DihedralElement::new(n, t, false).act(&i0))
            .collect();
        let mut bad = Vec::new();
        for (idx, g) in spectrum.groups.iter().enumerate().filter(|(_, g)| g.max_modulus) {
            let w = &branes.witnesses[idx];
            if !branes.occupied[idx] || w.len() != 1 || !orbit.contains(&w[0]) {
                bad.push(format!("{:+.6}{:+.6}i", g.value.re, g.value.im));
            }
        }
        checks.push(check(
            "maximal modulus summands",
            format!("occupied by the rotations of I0 = {i0}"),
            bad,
        ));

        if is_prime(n) {
            let mut bad: Vec<String> = branes
                .reports
                .iter()
                .filter(|r| !r.member)
                .map(|r| r.roots.to_string())
                .collect();
            if branes.occupied.iter().any(|o| !o) {
                bad.push("unoccupied summand".into());
            }
            checks.push(check("prime n: all points in chart", format!("{} points", branes.reports.len()), bad));
        }
    }

    let passed = checks.iter().all(|c| c.passed);
    Ok(VerifyReport { k, n, passed, checks })
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

pub fn cmd_verify(config: &RunConfig) -> Result<Outcome, CliError> {
    let report = verify_report(config.grid, config.tol)?;
    let output = match config.format {
        Format::Json => to_json(&report),
        _ => {
            let mut s = String::new();
            for c in &report.checks {
                let _ = writeln!(s, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
                for w in &c.witnesses {
                    let _ = writeln!(s, "    {w}");
                }
            }
            let _ = writeln!(s, "{}: {}", config.grid, if report.passed { "all checks passed" } else { "FAILED" });
            s
        }
    };
    Ok(Outcome {
        output,
        failed: !report.passed,
    })
}

const SIZE: f64 = 600.0;
const CENTER: f64 = 300.0;
const RADIUS: f64 = 250.0;
const DOT: f64 = 5.0;

/// Eigenvalues in the plane, scaled so the maximal modulus sits on a circle
/// of radius 250 around the center of a 600×600 view box. A point of
/// multiplicity `m` carries `m-1` extra rings. With `occupied` given,
/// unoccupied points are drawn hollow.
pub fn render_svg(summary: &SpectralSummary, occupied: Option<&[bool]>) -> String {
    let max = summary.groups.iter().map(|g| g.modulus).fold(0.0, f64::max);
    let scale = if max > 0.0 { RADIUS / max } else { 1.0 };
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(s, "<title>{}</title>", summary.grid);
    let _ = writeln!(s, r#"<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r##"<line x1="0" y1="{CENTER}" x2="{SIZE}" y2="{CENTER}" stroke="#999" stroke-width="1"/>"##
    );
    let _ = writeln!(
        s,
        r##"<line x1="{CENTER}" y1="0" x2="{CENTER}" y2="{SIZE}" stroke="#999" stroke-width="1"/>"##
    );
    let _ = writeln!(
        s,
        r##"<circle cx="{CENTER}" cy="{CENTER}" r="{RADIUS}" fill="none" stroke="#ccc" stroke-dasharray="4 4"/>"##
    );
    for (idx, g) in summary.groups.iter().enumerate() {
        let x = CENTER + scale * g.value.re;
        let y = CENTER - scale * g.value.im;
        let filled = occupied.is_none_or(|o| o[idx]);
        let fill = if filled { "black" } else { "white" };
        let _ = writeln!(
            s,
            r#"<circle cx="{x:.3}" cy="{y:.3}" r="{DOT}" fill="{fill}" stroke="black" stroke-width="1.5"/>"#
        );
        for ring in 1..g.multiplicity {
            let r = DOT + 4.0 * ring as f64;
            let _ = writeln!(
                s,
                r#"<circle cx="{x:.3}" cy="{y:.3}" r="{r}" fill="none" stroke="black" stroke-width="1"/>"#
            );
        }
    }
    s.push_str("</svg>\n");
    s
}

/// Parses, runs and writes output; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = RunConfig::from_command(&cli.command).and_then(|config| {
        let outcome = run(&config)?;
        match &config.out {
            Some(path) => std::fs::write(path, &outcome.output)?,
            None => print!("{}", outcome.output),
        }
        Ok(outcome)
    });
    match result {
        Ok(outcome) if outcome.failed => 2,
        Ok(_) => 0,
        Err(e) => {
            eprintln!("grassmirror: {e}");
            e.exit_code()
        }
    }
}

