//! Command-line front end: matrix file I/O, command dispatch, human-readable
//! and JSON reports.
//!
//! Exit codes: 0 = all non-vacuous checks passed; 1 = at least one violation
//! (or a failed range-containment test in `douglas`); 2 = input or usage
//! error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use opineq::douglas::douglas_factorization;
use opineq::ensemble::{kind_by_name, EnsembleSpec, KIND_REGISTRY};
use opineq::error::Error;
use opineq::matfile::{serialize_matrix, write_matrix_file};
use opineq::matrix::Matrix;
use opineq::pinv::pseudo_inverse;
use opineq::profile::profile;
use opineq::report::{digest_bytes, ReportDocument};
use opineq::suite::{
    default_sweep_items, fmt_complex, sweep, theorem_by_name, verify_theorem, InequalityParams,
    InequalityReport, Mode, Summary, SweepItem, ALL_THEOREMS,
};
use opineq::tol::Tolerances;

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "opineq",
    version,
    about = "Operator analysis for dense complex matrices: (alpha,beta)-normality \
             certificates, numerical radii, pseudo-inverses, factorizations, and an \
             inequality verification suite"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the certified profile of one operator
    Analyze {
        /// Matrix file (header "rows cols", then "re im" entry pairs)
        matrix: PathBuf,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        tol: TolArgs,
    },
    /// Check one inequality on one operator
    Verify {
        matrix: PathBuf,
        /// Check name, e.g. buzano-radius (see --help for the full list)
        #[arg(long, value_parser = parse_theorem_name)]
        theorem: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Both)]
        mode: ModeArg,
        /// Radius-style parameter; defaults to ||lambda T* - T|| for the
        /// conditional reverse Schwarz checks
        #[arg(long, allow_hyphen_values = true)]
        r: Option<f64>,
        /// Complex scalar, e.g. "1", "i", "1+2i", "-0.5i"
        #[arg(long, value_parser = parse_complex_arg, allow_hyphen_values = true)]
        lambda: Option<Complex64>,
        #[arg(long, value_parser = parse_complex_arg, allow_hyphen_values = true)]
        mu: Option<Complex64>,
        #[arg(long, allow_hyphen_values = true)]
        p: Option<f64>,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        tol: TolArgs,
    },
    /// Run checks over a seeded random-matrix ensemble
    Sweep {
        /// Ensemble kind: gaussian, normal, unitary, invertible,
        /// rank-deficient, diagonal
        #[arg(long)]
        kind: String,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
        /// "all" or a comma-separated list of check names
        #[arg(long, default_value = "all")]
        theorems: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Corrected)]
        mode: ModeArg,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        tol: TolArgs,
    },
    /// Factor T = S R after the range-containment test
    Douglas {
        /// Matrix file for T
        t: PathBuf,
        /// Matrix file for S
        s: PathBuf,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        tol: TolArgs,
    },
    /// Write the Moore-Penrose pseudo-inverse as a matrix file
    Pinv {
        matrix: PathBuf,
        /// Output path; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        tol: TolArgs,
    },
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum ModeArg {
    Printed,
    Corrected,
    Both,
}

impl ModeArg {
    fn modes(self) -> Vec<Mode> {
        match self {
            ModeArg::Printed => vec![Mode::Printed],
            ModeArg::Corrected => vec![Mode::Corrected],
            ModeArg::Both => vec![Mode::Printed, Mode::Corrected],
        }
    }

    fn describe(self) -> &'static str {
        match self {
            ModeArg::Printed => "printed",
            ModeArg::Corrected => "corrected",
            ModeArg::Both => "both",
        }
    }
}

#[derive(Args)]
struct TolArgs {
    #[arg(long, default_value_t = 1e-12)]
    tol_eig: f64,
    #[arg(long, default_value_t = 1e-10)]
    tol_psd: f64,
    #[arg(long, default_value_t = 1e-8)]
    tol_slack: f64,
}

impl TolArgs {
    fn tolerances(&self) -> Result<Tolerances, CliError> {
        let tol = Tolerances {
            tol_eig: self.tol_eig,
            tol_psd: self.tol_psd,
            tol_slack: self.tol_slack,
            ..Tolerances::default()
        };
        tol.validate().map_err(CliError::from)?;
        Ok(tol)
    }
}

fn parse_theorem_name(s: &str) -> Result<String, String> {
    if theorem_by_name(s).is_some() {
        Ok(s.to_string())
    } else {
        Err(format!(
            "unknown check '{}'; known checks: {}",
            s,
            ALL_THEOREMS.map(|t| t.name()).join(", ")
        ))
    }
}

/// Parses complex literals such as "1", "-2.5", "i", "-i", "2i", "1+2i",
/// "1.5-0.5i", "1e-3+2e4i".
fn parse_complex_arg(s: &str) -> Result<Complex64, String> {
    let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() {
        return Err("empty complex literal".into());
    }
    let parse_re = |t: &str| -> Result<f64, String> {
        t.parse().map_err(|_| format!("invalid real part '{t}'"))
    };
    let parse_im = |t: &str| -> Result<f64, String> {
        match t {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => t.parse().map_err(|_| format!("invalid imaginary part '{t}'")),
        }
    };
    if let Some(body) = text.strip_suffix(['i', 'I']) {
        // Split at the last +/- that is not a leading sign or an exponent sign.
        let bytes = body.as_bytes();
        let mut split = None;
        for k in (1..bytes.len()).rev() {
            let c = bytes[k] as char;
            if (c == '+' || c == '-') && !matches!(bytes[k - 1] as char, 'e' | 'E') {
                split = Some(k);
                break;
            }
        }
        match split {
            Some(k) => Ok(Complex64::new(
                parse_re(&body[..k])?,
                parse_im(&body[k..])?,
            )),
            None => Ok(Complex64::new(0.0, parse_im(body)?)),
        }
    } else {
        Ok(Complex64::new(parse_re(&text)?, 0.0))
    }
}

#[derive(Debug)]
enum CliError {
    /// Input or usage problem: exit 2.
    Input(String),
    /// Range containment failed in `douglas`: exit 1.
    NotMajorized,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NotMajorized => CliError::NotMajorized,
            other => CliError::Input(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_VIOLATION),
        Err(CliError::NotMajorized) => {
            eprintln!("opineq: range containment fails: T is not majorized by S");
            ExitCode::from(EXIT_VIOLATION)
        }
        Err(CliError::Input(msg)) => {
            eprintln!("opineq: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

/// Returns Ok(true) when no non-vacuous check failed.
fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Analyze { matrix, json, tol } => cmd_analyze(&matrix, json, &tol.tolerances()?),
        Command::Verify {
            matrix,
            theorem,
            mode,
            r,
            lambda,
            mu,
            p,
            json,
            tol,
        } => {
            let params = InequalityParams { r, lambda, mu, p };
            cmd_verify(&matrix, &theorem, mode, params, json, &tol.tolerances()?)
        }
        Command::Sweep {
            kind,
            dim,
            count,
            seed,
            scale,
            theorems,
            mode,
            json,
            tol,
        } => cmd_sweep(
            &kind,
            dim,
            count,
            seed,
            scale,
            &theorems,
            mode,
            json,
            &tol.tolerances()?,
        ),
        Command::Douglas { t, s, json, tol } => cmd_douglas(&t, &s, json, &tol.tolerances()?),
        Command::Pinv { matrix, out, tol } => cmd_pinv(&matrix, out.as_deref(), &tol.tolerances()?),
    }
}

fn read_with_digest(path: &Path) -> Result<(Matrix, String), CliError> {
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8_lossy(&bytes);
    let matrix = opineq::matfile::parse_matrix(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok((matrix, digest_bytes(&bytes)))
}

fn cmd_analyze(path: &Path, json: bool, tol: &Tolerances) -> Result<bool, CliError> {
    let (matrix, digest) = read_with_digest(path)?;
    let prof = profile(&matrix, tol)?;
    let mut doc = ReportDocument::new(digest, Vec::new());
    doc.profile = Some(prof);
    if json {
        println!("{}", doc.to_json());
    } else {
        let p = doc.profile.as_ref().expect("set above");
        println!("operator {}x{}  [{}]", matrix.rows(), matrix.cols(), doc.input_digest);
        println!("  op_norm              {:.17}", p.op_norm);
        println!("  numerical_radius     {:.17}", p.numerical_radius);
        println!("  w(T^2)               {:.17}", p.numerical_radius_of_square);
        println!("  kernel_dim           {}", p.kernel_dim);
        println!("  kernels_equal        {}", p.kernels_equal);
        println!("  ab_normal            {}", p.is_ab_normal);
        match (p.alpha_sq, p.beta_sq) {
            (Some(a), Some(b)) => {
                println!("  alpha_sq             {a:.17}");
                println!("  beta_sq              {b:.17}");
                println!("  alpha                {:.17}", a.max(0.0).sqrt());
                println!("  beta                 {:.17}", b.max(0.0).sqrt());
            }
            _ => println!("  alpha/beta           undefined (no finite certificate)"),
        }
    }
    Ok(true)
}

fn cmd_verify(
    path: &Path,
    theorem_name: &str,
    mode: ModeArg,
    params: InequalityParams,
    json: bool,
    tol: &Tolerances,
) -> Result<bool, CliError> {
    let (matrix, digest) = read_with_digest(path)?;
    let verifier = theorem_by_name(theorem_name).expect("validated by clap");
    let explicit = params.r.is_some()
        || params.lambda.is_some()
        || params.mu.is_some()
        || params.p.is_some();
    let grid = if explicit {
        vec![params]
    } else {
        verifier.default_grid()
    };

    let mut reports = Vec::new();
    for item_params in &grid {
        for m in mode.modes() {
            reports.push(verify_theorem(verifier.id(), &matrix, item_params, m, tol)?);
        }
    }
    let mut doc = ReportDocument::new(digest, reports);
    doc.profile = Some(profile(&matrix, tol)?);
    emit_reports(&doc, json);
    Ok(!doc.summary.has_violation())
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    kind_name: &str,
    dim: usize,
    count: usize,
    seed: u64,
    scale: f64,
    theorems: &str,
    mode: ModeArg,
    json: bool,
    tol: &Tolerances,
) -> Result<bool, CliError> {
    let kind = kind_by_name(kind_name).ok_or_else(|| {
        CliError::Input(format!(
            "unknown ensemble kind '{kind_name}'; known kinds: {}",
            KIND_REGISTRY.map(|k| k.name()).join(", ")
        ))
    })?;
    let ids = if theorems.trim() == "all" {
        ALL_THEOREMS.to_vec()
    } else {
        theorems
            .split(',')
            .map(|name| {
                theorem_by_name(name.trim())
                    .map(|v| v.id())
                    .ok_or_else(|| CliError::Input(format!("unknown check '{}'", name.trim())))
            })
            .collect::<Result<Vec<_>, _>>()?
    };
    let spec = EnsembleSpec {
        kind,
        dim,
        count,
        seed,
        scale,
    };
    let items: Vec<SweepItem> = mode
        .modes()
        .into_iter()
        .flat_map(|m| default_sweep_items(&ids, m))
        .collect();

    let canonical = format!(
        "sweep kind={} dim={} count={} seed={} scale={:e} theorems={} mode={} tol_eig={:e} tol_psd={:e} tol_slack={:e}",
        kind.name(),
        dim,
        count,
        seed,
        scale,
        ids.iter().map(|t| t.name()).collect::<Vec<_>>().join(","),
        mode.describe(),
        tol.tol_eig,
        tol.tol_psd,
        tol.tol_slack,
    );
    let reports = sweep(&spec, &items, tol)?;
    let mut doc = ReportDocument::new(digest_bytes(canonical.as_bytes()), reports);
    doc.ensemble = Some(spec);
    emit_reports(&doc, json);
    Ok(!doc.summary.has_violation())
}

fn cmd_douglas(
    path_t: &Path,
    path_s: &Path,
    json: bool,
    tol: &Tolerances,
) -> Result<bool, CliError> {
    let bytes_t = std::fs::read(path_t)
        .map_err(|e| CliError::Input(format!("{}: {e}", path_t.display())))?;
    let bytes_s = std::fs::read(path_s)
        .map_err(|e| CliError::Input(format!("{}: {e}", path_s.display())))?;
    let t = opineq::matfile::parse_matrix(&String::from_utf8_lossy(&bytes_t))
        .map_err(|e| CliError::Input(format!("{}: {e}", path_t.display())))?;
    let s = opineq::matfile::parse_matrix(&String::from_utf8_lossy(&bytes_s))
        .map_err(|e| CliError::Input(format!("{}: {e}", path_s.display())))?;

    let mut digest_input = bytes_t.clone();
    digest_input.extend_from_slice(&bytes_s);
    let result = douglas_factorization(&t, &s, tol)?;

    let mut doc = ReportDocument::new(digest_bytes(&digest_input), Vec::new());
    doc.factorizations.push(result);
    if json {
        println!("{}", doc.to_json());
    } else {
        let f = &doc.factorizations[0];
        println!("douglas factor R with T = S R  [{}]", doc.input_digest);
        println!("  residual ||S R - T||   {:.3e}", f.residual);
        println!("  ||R||                  {:.17}", f.factor_norm);
        println!("  ||R||^2                {:.17}", f.factor_norm_sq);
        println!("  inf{{mu: TT* <= mu SS*}} {:.17}", f.certified_infimum);
        println!("  ker(R) = ker(T)        {}", f.kernel_match);
        println!("  ran(R) in ran(S*)      {}", f.range_containment);
        print!("{}", serialize_matrix(&f.factor));
    }
    Ok(true)
}

fn cmd_pinv(path: &Path, out: Option<&Path>, tol: &Tolerances) -> Result<bool, CliError> {
    let (matrix, _) = read_with_digest(path)?;
    let p = pseudo_inverse(&matrix, tol)?;
    match out {
        Some(out_path) => {
            write_matrix_file(out_path, &p)
                .map_err(|e| CliError::Input(format!("{}: {e}", out_path.display())))?;
        }
        None => print!("{}", serialize_matrix(&p)),
    }
    Ok(true)
}

fn emit_reports(doc: &ReportDocument, json: bool) {
    if json {
        println!("{}", doc.to_json());
        return;
    }
    println!(
        "{:<22} {:<10} {:<28} {:>14} {:>14} {:>11}  {}",
        "check", "mode", "params", "lhs", "rhs", "slack", "status"
    );
    for rep in &doc.reports {
        print_report_line(rep);
    }
    let Summary {
        passed,
        failed,
        vacuous,
    } = doc.summary;
    println!("summary: {passed} passed, {failed} failed, {vacuous} vacuous");
}


fn print_report_line(rep: &InequalityReport) {
    let id = match rep.id {
        opineq::suite::CheckId::Theorem(t) => t.name(),
        opineq::suite::CheckId::Lemma(l) => l.name(),
    };
    let status = if rep.is_vacuous() {
        "VACUOUS"
    } else if rep.passed {
        "PASS"
    } else {
        "FAIL"
    };
    let op_idx = rep
        .operator_index
        .map(|i| format!(" #{i}"))
        .unwrap_or_default();
    println!(
        "{:<22} {:<10} {:<28} {:>14.6e} {:>14.6e} {:>11.3e}  {}{}",
        id,
        rep.mode.to_string(),
        rep.params.describe(),
        rep.lhs,
        rep.rhs,
        rep.slack,
        status,
        op_idx
    );
    if let Some(note) = &rep.note {
        println!("    note: {note}");
    }
    if let Some(witness) = &rep.witness {
        let entries: Vec<String> = witness.0.iter().map(|z| fmt_complex(*z)).collect();
        println!("    witness: [{}]", entries.join(", "));
    }
}
