//! `orlicz` — command-line front end for the Young-function toolkit.
//!
//! Exit codes: 0 success, 1 domain/validation errors, 2 parse errors.

mod report;
mod spec_text;

use clap::{Parser, Subcommand};
use orlicz_core::analysis::{
    self, default_mult_grid, equivalence_scan, inclusion_report, multiplicativity_scan,
};
use orlicz_core::constructors::{
    construct_epsilon_tight, construct_target_exponents, construct_widened, default_tight_exponent,
};
use orlicz_core::exponents::{
    exponent_report, lebesgue_exponents, limit_exponents_r, Delta2Verdict,
};
use orlicz_core::gallery;
use orlicz_core::integrand::Integrand;
use orlicz_core::mixed::mixed_norm;
use orlicz_core::norms::{luxemburg_norm, modular, power_sum_norm_closed_form};
use orlicz_core::yf::{CatalogForm, Form, YoungFunction};
use orlicz_core::GridSpec;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "orlicz",
    about = "Young functions at your fingertips: exponents, Luxemburg norms, splices, mixed norms",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Evaluation grid as lo:hi:points (log-spaced), e.g. 1e-8:1e8:512.
    /// The ORLICZ_GRID_DENSITY environment variable overrides the default
    /// point count when this flag is absent.
    #[arg(long, global = true)]
    grid: Option<String>,

    /// Write machine-readable CSV next to the textual report.
    #[arg(long, global = true)]
    csv: Option<PathBuf>,

    /// Seed for the randomized property suites.
    #[arg(long, global = true, default_value_t = 0x0412_aa5e)]
    seed: u64,

    /// Relative tolerance for the Luxemburg-norm solver.
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Load named Young-function definitions (name = fn per line); --phi
    /// and --psi may then refer to entries by name.
    #[arg(long, global = true, value_name = "PATH")]
    spec_file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Lebesgue exponents, limit exponents, and the Δ₂ verdict.
    Exponents {
        #[arg(long)]
        phi: String,
    },
    /// Luxemburg norm of an integrand (or of prescribed moments).
    Norm {
        #[arg(long)]
        phi: String,
        #[arg(long)]
        integrand: Option<String>,
        /// Prescribed moments "q:a, p:b" realized as a two-block simple
        /// function.
        #[arg(long)]
        moments: Option<String>,
    },
    /// Modular ρ_Φ(f).
    Modular {
        #[arg(long)]
        phi: String,
        #[arg(long)]
        integrand: String,
    },
    /// Trace-type mixed norm with inner-profile CSV export.
    MixedNorm {
        #[arg(long)]
        phi: String,
        #[arg(long)]
        integrand: String,
    },
    /// Build a splice with prescribed exponents.
    Construct {
        #[command(subcommand)]
        which: ConstructCmd,
    },
    /// Equivalence scan between two Young functions.
    Compare {
        #[arg(long)]
        phi: String,
        #[arg(long)]
        psi: String,
    },
    /// Lebesgue-space inclusion ranges.
    Inclusions {
        #[arg(long)]
        phi: String,
    },
    /// Sub/supermultiplicativity constants and pure-power detection.
    Multiplicativity {
        #[arg(long)]
        phi: String,
    },
    /// Run every numbered example with PASS/FAIL per value.
    Gallery,
    /// Check the Young-function axioms and knot matching.
    Validate {
        #[arg(long)]
        phi: String,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Φ with L^Φ = L^p, q_Φ = p1, p_Φ = p2 (needs 1 < r1 < p1 < p < p2 < r2).
    Target {
        #[arg(long)]
        p1: f64,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        p2: f64,
        #[arg(long)]
        r1: f64,
        #[arg(long)]
        r2: f64,
    },
    /// Ψ equivalent to a base with q_Ψ < p1 and p_Ψ > p2.
    Widened {
        #[arg(long)]
        base: String,
        #[arg(long)]
        p1: f64,
        #[arg(long)]
        p2: f64,
        #[arg(long)]
        r1: f64,
        #[arg(long)]
        r2: f64,
    },
    /// The ε-tight family around a prescribed exponent r ∈ [q, p].
    Tight {
        #[arg(long)]
        base: String,
        #[arg(long)]
        r: Option<f64>,
        #[arg(long)]
        n: f64,
    },
}

enum CliError {
    Parse(String),
    Domain(String),
}

impl From<spec_text::SpecError> for CliError {
    fn from(e: spec_text::SpecError) -> Self {
        match e {
            spec_text::SpecError::Syntax(_) => CliError::Parse(e.to_string()),
            spec_text::SpecError::Validation(_) => CliError::Domain(e.to_string()),
        }
    }
}

impl From<orlicz_core::Error> for CliError {
    fn from(e: orlicz_core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(CliError::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(CliError::Parse(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

fn grid_from(cli: &Cli) -> Result<GridSpec, CliError> {
    if let Some(text) = &cli.grid {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            return Err(CliError::Parse(format!(
                "--grid wants lo:hi:points, got '{text}'"
            )));
        }
        let lo: f64 = parts[0]
            .parse()
            .map_err(|_| CliError::Parse(format!("bad grid lo '{}'", parts[0])))?;
        let hi: f64 = parts[1]
            .parse()
            .map_err(|_| CliError::Parse(format!("bad grid hi '{}'", parts[1])))?;
        let n: usize = parts[2]
            .parse()
            .map_err(|_| CliError::Parse(format!("bad grid points '{}'", parts[2])))?;
        if !(lo > 0.0 && hi > lo && n >= 16) {
            return Err(CliError::Domain(format!(
                "grid range must be positive and increasing with at least 16 points, got {text}"
            )));
        }
        return Ok(GridSpec::new(lo, hi, n));
    }
    let mut grid = GridSpec::default();
    if let Ok(text) = std::env::var("ORLICZ_GRID_DENSITY") {
        let n: usize = text.parse().map_err(|_| {
            CliError::Parse(format!(
                "ORLICZ_GRID_DENSITY must be an integer, got '{text}'"
            ))
        })?;
        grid.points = n.max(16);
    }
    Ok(grid)
}

fn load_young(cli: &Cli, text: &str) -> Result<YoungFunction, CliError> {
    if let Some(path) = &cli.spec_file {
        let src = std::fs::read_to_string(path)
            .map_err(|e| CliError::Domain(format!("cannot read {}: {e}", path.display())))?;
        let entries = spec_text::parse_spec_file(&src)?;
        if let Some((_, phi)) = entries.iter().find(|(name, _)| name == text.trim()) {
            return Ok(phi.clone());
        }
    }
    Ok(spec_text::parse_young(text)?)
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    let grid = grid_from(cli)?;
    match &cli.command {
        Command::Exponents { phi } => {
            let phi = load_young(cli, phi)?;
            let rep = exponent_report(&phi, &grid)?;
            println!("function: {phi}");
            println!("q = {}", report::sig(rep.q_phi));
            println!("p = {}", report::sig(rep.p_phi));
            println!(
                "g-limits: p0 = {}, p_inf = {}",
                rep.p0.map_or("absent".into(), report::sig),
                rep.p_inf.map_or("absent".into(), report::sig)
            );
            println!(
                "r-limits: r0 = {}, r_inf = {}",
                rep.r0.map_or("absent".into(), report::sig),
                rep.r_inf.map_or("absent".into(), report::sig)
            );
            match rep.delta2 {
                Delta2Verdict::Holds { constant, .. } => {
                    println!("Δ₂: holds with C = {}", report::sig(constant))
                }
                Delta2Verdict::Fails {
                    counterexample_t,
                    ratio,
                } => println!(
                    "Δ₂: fails (Φ(2t)/Φ(t) = {} at t = {})",
                    report::sig(ratio),
                    report::sig(counterexample_t)
                ),
            }
            println!(
                "window: [{}, {}]",
                report::sig(rep.window.0),
                report::sig(rep.window.1)
            );
            if let Some(path) = &cli.csv {
                report::write_curve_csv(path, &phi, &grid)?;
                println!("g-curve written to {}", path.display());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Norm {
            phi,
            integrand,
            moments,
        } => {
            let phi = load_young(cli, phi)?;
            let f = match (integrand, moments) {
                (Some(spec), _) => spec_text::parse_integrand(spec)?,
                (None, Some(m)) => {
                    let ms = spec_text::parse_moments(m)?;
                    if ms.len() != 2 {
                        return Err(CliError::Domain(
                            "--moments wants exactly two entries q:a, p:b".into(),
                        ));
                    }
                    let ((q, a), (p, b)) = (ms[0], ms[1]);
                    if let Form::Catalog(CatalogForm::PowerSum { q: fq, p: fp }) = phi.form() {
                        if (fq - q).abs() < 1e-12 && (fp - p).abs() < 1e-12 {
                            let lam = power_sum_norm_closed_form(a, b, q, p)?;
                            println!("closed form: norm = {}", report::sig(lam));
                        }
                    }
                    Integrand::simple_with_moments(q, a, p, b)?
                }
                (None, None) => {
                    return Err(CliError::Domain(
                        "norm needs --integrand or --moments".into(),
                    ))
                }
            };
            let r = match cli.tol {
                Some(tol) => orlicz_core::norms::luxemburg_norm_with_tol(&f, &phi, tol)?,
                None => luxemburg_norm(&f, &phi)?,
            };
            println!("integrand: {}", f.name());
            println!("modular = {}", report::sig(r.modular));
            println!("norm = {}", report::sig(r.norm));
            println!(
                "bracket = [{}, {}], bisections = {}, quadrature error ≈ {:.2e}",
                report::sig(r.bracket.0),
                report::sig(r.bracket.1),
                r.bisection_iters,
                r.quad_error
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Modular { phi, integrand } => {
            let phi = load_young(cli, phi)?;
            let f = spec_text::parse_integrand(integrand)?;
            let m = modular(&f, &phi)?;
            if m.is_divergent() {
                println!("modular = inf (divergence verdict)");
            } else {
                println!(
                    "modular = {} (error ≈ {:.2e})",
                    report::sig(m.value),
                    m.error
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::MixedNorm { phi, integrand } => {
            let phi = load_young(cli, phi)?;
            let f = spec_text::parse_integrand(integrand)?;
            let r = mixed_norm(&f, &phi, &grid)?;
            println!("mixed norm = {}", report::sig(r.outer_norm));
            if let (Some(l11), Some(l21)) = (r.l11, r.l21) {
                println!(
                    "decomposition: L11 = {}, L21 = {}",
                    report::sig(l11),
                    report::sig(l21)
                );
            }
            println!("inner norms evaluated at {} points", r.inner_evaluations);
            if let Some(path) = &cli.csv {
                report::write_profile_csv(path, &r.inner_profile)?;
                println!("inner profile written to {}", path.display());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct { which } => {
            let (psi, params, extra) = match which {
                ConstructCmd::Target { p1, p, p2, r1, r2 } => {
                    let (psi, params) = construct_target_exponents(*p1, *p, *p2, *r1, *r2)?;
                    (psi, params, None)
                }
                ConstructCmd::Widened {
                    base,
                    p1,
                    p2,
                    r1,
                    r2,
                } => {
                    let base = load_young(cli, base)?;
                    let (psi, params) = construct_widened(&base, *p1, *p2, *r1, *r2)?;
                    (psi, params, None)
                }
                ConstructCmd::Tight { base, r, n } => {
                    let base = load_young(cli, base)?;
                    let r = match r {
                        Some(r) => *r,
                        None => default_tight_exponent(&base)?,
                    };
                    let t = construct_epsilon_tight(&base, r, *n)?;
                    (t.psi, t.params, Some(t.gap_bound))
                }
            };
            let e = lebesgue_exponents(&psi, &grid)?;
            println!("constructed: {psi}");
            println!(
                "measured exponents: q = {}, p = {}",
                report::sig(e.q),
                report::sig(e.p)
            );
            println!(
                "knots: alpha = {}, beta = {}",
                report::sig(params.alpha),
                report::sig(params.beta)
            );
            println!(
                "coefficients: c = [{}, {}, {}], d = [{}, {}, {}]",
                report::sig(params.c[0]),
                report::sig(params.c[1]),
                report::sig(params.c[2]),
                report::sig(params.d[0]),
                report::sig(params.d[1]),
                report::sig(params.d[2])
            );
            print!(
                "ratios: k = {}, l_alpha = {}",
                report::sig(params.k),
                report::sig(params.l_alpha)
            );
            match params.m_alpha_beta {
                Some(m) => println!(", m_alpha_beta = {}", report::sig(m)),
                None => println!(),
            }
            if let Some(gap) = extra {
                println!("certified exponent gap ≤ {}", report::sig(gap));
            }
            match spec_text::render_young(&psi) {
                Ok(text) => println!("spec: {text}"),
                Err(m) => println!("spec: ({m})"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Compare { phi, psi } => {
            let phi = load_young(cli, phi)?;
            let psi = load_young(cli, psi)?;
            let rep = equivalence_scan(&phi, &psi, &grid);
            println!("c_scan = {}", report::sig(rep.c_scan));
            match rep.bounded {
                analysis::BoundedVerdict::Finite => {
                    println!("scan verdict: finite (equivalent at grid scale)")
                }
                analysis::BoundedVerdict::Diverging {
                    at_zero,
                    at_infinity,
                } => println!(
                    "scan verdict: diverging{}{}",
                    if at_zero { " at 0" } else { "" },
                    if at_infinity { " at inf" } else { "" }
                ),
            }
            if let Some(c1) = rep.c1_derivative {
                println!("derivative equivalence constant C1 = {}", report::sig(c1));
            }
            if rep.is_finite() {
                let ra = limit_exponents_r(&phi, &grid);
                let rb = limit_exponents_r(&psi, &grid);
                if let (Ok(ra), Ok(rb)) = (ra, rb) {
                    println!(
                        "r-limits: ({}, {}) vs ({}, {})",
                        report::sig(ra.r0),
                        report::sig(ra.r_inf),
                        report::sig(rb.r0),
                        report::sig(rb.r_inf)
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Inclusions { phi } => {
            let phi = load_young(cli, phi)?;
            let rep = inclusion_report(&phi, &grid)?;
            println!(
                "baseline: L^p ∩ L^q ⊆ L^Φ ⊆ L^p + L^q for (q, p) = ({}, {})",
                report::sig(rep.baseline.0),
                report::sig(rep.baseline.1)
            );
            match rep.class_exponents {
                Some((pc, qc)) => println!(
                    "class ranges: p ∈ ({}, inf), q ∈ (1, {})",
                    report::sig(pc),
                    report::sig(qc)
                ),
                None => println!("class ranges: unavailable (a g-limit is absent)"),
            }
            println!(
                "r-based ranges: p > {}, q < {}{}",
                report::sig(rep.r_ranges.0),
                report::sig(rep.r_ranges.1),
                if rep.q_range_empty {
                    " (q-range empty)"
                } else {
                    ""
                }
            );
            if let Some(path) = &cli.csv {
                report::write_inclusions_csv(path, &rep)?;
                println!("ranges written to {}", path.display());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Multiplicativity { phi } => {
            let phi = load_young(cli, phi)?;
            let rep = multiplicativity_scan(&phi, &default_mult_grid());
            println!(
                "submultiplicative constant: {}",
                rep.sub_c.map_or("absent (unbounded)".into(), report::sig)
            );
            println!(
                "supermultiplicative constant: {}",
                rep.super_c
                    .map_or("absent (not bounded below)".into(), report::sig)
            );
            println!("pure power: {}", rep.is_pure_power);
            if let Some(p) = rep.detected_p {
                println!("detected exponent: {}", report::sig(p));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gallery => {
            let outcomes = gallery::run_all(cli.seed);
            let mut all = true;
            for out in &outcomes {
                println!(
                    "criterion {}: {} [{:.2}s / budget {:.0}s]",
                    out.id,
                    out.title,
                    out.elapsed.as_secs_f64(),
                    out.budget.as_secs_f64()
                );
                for c in &out.checks {
                    println!(
                        "  [{}] {} (expected {}, actual {})",
                        if c.passed { "PASS" } else { "FAIL" },
                        c.name,
                        c.expected,
                        c.actual
                    );
                }
                all &= out.passed();
            }
            if let Some(path) = &cli.csv {
                report::write_gallery_csv(path, &outcomes)?;
                println!("gallery table written to {}", path.display());
            }
            println!(
                "gallery: {}",
                if all { "ALL PASS" } else { "FAILURES PRESENT" }
            );
            Ok(if all {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Validate { phi } => {
            // parse without the axiom gate so the report can show failures
            let phi = spec_text::parse_young_unchecked(phi)?;
            let rep = phi.validate(&grid);
            println!(
                "checked {} grid points: {} monotonicity, {} convexity, {} knot mismatches",
                rep.points_checked,
                rep.monotonicity_violations.len(),
                rep.convexity_violations.len(),
                rep.knot_mismatches.len()
            );
            for m in rep.knot_mismatches.iter().take(8) {
                println!(
                    "  {:?} mismatch at knot {}: left {} vs right {}",
                    m.kind,
                    report::sig(m.knot),
                    report::sig(m.left),
                    report::sig(m.right)
                );
            }
            if rep.is_valid() {
                println!("verdict: valid Young function");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("verdict: NOT a valid Young function");
                Ok(ExitCode::from(1))
            }
        }
    }
}
