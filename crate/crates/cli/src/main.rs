//! `qck`: command-line surface for the quantum-state constraint toolkit.
//!
//! Subcommands: validate, ggm, bloch (to/from), spin1-sample, sector,
//! optimize. Exit codes: 0 success, 1 I/O or file-parse error, 2 domain or
//! validation error. All output is deterministic for fixed flags and seeds;
//! the environment variable QCK_DEFAULT_TOL overrides the default 1e-10
//! constraint tolerance.

mod formats;

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::Path;
use std::process::ExitCode;

use qck_core::bloch::{from_bloch, to_bloch};
use qck_core::density::{validate, DensityMatrix};
use qck_core::eigen::hermitian_eigenvalues;
use qck_core::ggm::GgmBasis;
use qck_core::sectors::{full_report, LatticeModel};
use qck_core::spin1::sample_physical;
use qck_core::vopt::{optimize, random_insphere_tau, Objective, OptConfig};
use qck_core::DEFAULT_TOL;

use formats::{
    from_json, sector_states_csv, spin1_samples_csv, to_json, trajectory_csv, BasisDocument,
    BlochDocument, MatrixDocument, SectorReportDocument, ValidationDocument,
};

/// Errors with their exit-code class.
#[derive(Debug)]
pub enum CliError {
    /// Unreadable or unwritable files: exit 1.
    Io(String),
    /// Malformed documents: exit 1.
    Parse(String),
    /// Well-formed input that violates a contract: exit 2.
    Domain(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) | CliError::Parse(_) => 1,
            CliError::Domain(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(msg) => write!(out, "{msg}"),
            CliError::Parse(msg) => write!(out, "{msg}"),
            CliError::Domain(msg) => write!(out, "{msg}"),
        }
    }
}

impl From<qck_core::Error> for CliError {
    fn from(e: qck_core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(args: &[String]) -> Result<(), CliError> {
    let Some(command) = args.first() else {
        print!("{USAGE}");
        return Ok(());
    };
    let rest = &args[1..];
    match command.as_str() {
        "validate" => cmd_validate(rest),
        "ggm" => cmd_ggm(rest),
        "bloch" => cmd_bloch(rest),
        "spin1-sample" => cmd_spin1_sample(rest),
        "sector" => cmd_sector(rest),
        "optimize" => cmd_optimize(rest),
        "help" | "--help" | "-h" => {
            print!("{USAGE}");
            Ok(())
        }
        other => Err(CliError::Domain(format!(
            "unknown command '{other}'; run 'qck help'"
        ))),
    }
}

const USAGE: &str = "\
qck: constraint geometry of quantum state space

USAGE:
    qck <command> [flags]

COMMANDS:
    validate <matrix.json> [--tol T]
        Check the density-matrix constraints and print the report.
        Exit 0 if valid, 2 if well-formed but invalid, 1 on parse error.
    ggm --d D --out PATH
        Write the ordered generalized Gell-Mann basis for dimension D.
    bloch to --in rho.json --out tau.json [--tol T]
        Convert a density matrix to Bloch coordinates.
    bloch from --in tau.json --out rho.json
        Reconstruct the matrix of a Bloch vector (positivity not implied).
    spin1-sample --count N --seed S --out samples.csv
        Rejection-sample the three-level physical region to CSV.
    sector --sites N [--csv PREFIX]
        Enumerate, Gauss-filter, and decompose a periodic chain; print the
        report and optionally write per-sector state CSVs.
    optimize --d D --hamiltonian H.json --out traj.csv
             [--step X] [--iters N] [--seed S]
        Projected gradient descent on Tr(rho H); writes the trajectory CSV
        and prints the final objective next to the smallest eigenvalue.

ENVIRONMENT:
    QCK_DEFAULT_TOL    overrides the default constraint tolerance (1e-10)
";

/// Parsed `--flag value` pairs plus positional arguments.
struct Flags {
    named: BTreeMap<String, String>,
    positional: Vec<String>,
}

impl Flags {
    fn parse(args: &[String]) -> Result<Self, CliError> {
        let mut named = BTreeMap::new();
        let mut positional = Vec::new();
        let mut iter = args.iter();
        while let Some(arg) = iter.next() {
            if let Some(name) = arg.strip_prefix("--") {
                let value = iter
                    .next()
                    .ok_or_else(|| CliError::Domain(format!("flag --{name} needs a value")))?;
                named.insert(name.to_string(), value.clone());
            } else {
                positional.push(arg.clone());
            }
        }
        Ok(Self { named, positional })
    }

    fn required(&self, name: &str) -> Result<&str, CliError> {
        self.named
            .get(name)
            .map(String::as_str)
            .ok_or_else(|| CliError::Domain(format!("missing required flag --{name}")))
    }

    fn optional(&self, name: &str) -> Option<&str> {
        self.named.get(name).map(String::as_str)
    }

    fn parse_value<T: std::str::FromStr>(name: &str, raw: &str) -> Result<T, CliError> {
        raw.parse()
            .map_err(|_| CliError::Domain(format!("flag --{name}: cannot parse '{raw}'")))
    }

    fn required_parsed<T: std::str::FromStr>(&self, name: &str) -> Result<T, CliError> {
        Self::parse_value(name, self.required(name)?)
    }

    fn optional_parsed<T: std::str::FromStr>(&self, name: &str, default: T) -> Result<T, CliError> {
        match self.optional(name) {
            Some(raw) => Self::parse_value(name, raw),
            None => Ok(default),
        }
    }
}

/// Default tolerance, honoring QCK_DEFAULT_TOL.
fn default_tol() -> Result<f64, CliError> {
    match std::env::var("QCK_DEFAULT_TOL") {
        Ok(raw) => raw.parse().map_err(|_| {
            CliError::Domain(format!("QCK_DEFAULT_TOL: cannot parse '{raw}' as a real"))
        }),
        Err(_) => Ok(DEFAULT_TOL),
    }
}

fn read_text(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("cannot read {path}: {e}")))
}

fn write_text(path: &str, text: &str) -> Result<(), CliError> {
    if let Some(parent) = Path::new(path).parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent)
                .map_err(|e| CliError::Io(format!("cannot create {}: {e}", parent.display())))?;
        }
    }
    fs::write(path, text).map_err(|e| CliError::Io(format!("cannot write {path}: {e}")))
}

fn cmd_validate(args: &[String]) -> Result<(), CliError> {
    let flags = Flags::parse(args)?;
    let [input] = flags.positional.as_slice() else {
        return Err(CliError::Domain(
            "usage: qck validate <matrix.json> [--tol T]".to_string(),
        ));
    };
    let tol = flags.optional_parsed("tol", default_tol()?)?;

    let doc: MatrixDocument = from_json(&read_text(input)?)?;
    let matrix = doc.to_matrix()?;
    let report = validate(&matrix, tol)?;
    print!("{}", to_json(&ValidationDocument::from_report(&report))?);

    if report.is_valid() {
        Ok(())
    } else {
        Err(CliError::Domain(format!(
            "not a valid density matrix: {}",
            report.violations.join("; ")
        )))
    }
}

fn cmd_ggm(args: &[String]) -> Result<(), CliError> {
    let flags = Flags::parse(args)?;
    let d: usize = flags.required_parsed("d")?;
    let out = flags.required("out")?;
    let basis = GgmBasis::new(d)?;
    write_text(out, &to_json(&BasisDocument::from_basis(&basis))?)
}

fn cmd_bloch(args: &[String]) -> Result<(), CliError> {
    let Some(direction) = args.first() else {
        return Err(CliError::Domain(
            "usage: qck bloch <to|from> --in PATH --out PATH".to_string(),
        ));
    };
    let flags = Flags::parse(&args[1..])?;
    let input = flags.required("in")?;
    let out = flags.required("out")?;

    match direction.as_str() {
        "to" => {
            let tol = flags.optional_parsed("tol", default_tol()?)?;
            let doc: MatrixDocument = from_json(&read_text(input)?)?;
            let rho = DensityMatrix::new(doc.to_matrix()?, tol)?;
            let basis = GgmBasis::new(rho.dim())?;
            let tau = to_bloch(&rho, &basis)?;
            write_text(out, &to_json(&BlochDocument::from_vector(&tau))?)
        }
        "from" => {
            let doc: BlochDocument = from_json(&read_text(input)?)?;
            let tau = doc.to_vector()?;
            let basis = GgmBasis::new(tau.d)?;
            let matrix = from_bloch(&tau, &basis)?;
            write_text(out, &to_json(&MatrixDocument::from_matrix(&matrix))?)
        }
        other => Err(CliError::Domain(format!(
            "bloch direction must be 'to' or 'from', got '{other}'"
        ))),
    }
}

fn cmd_spin1_sample(args: &[String]) -> Result<(), CliError> {
    let flags = Flags::parse(args)?;
    let count: usize = flags.required_parsed("count")?;
    let seed: u64 = flags.required_parsed("seed")?;
    let out = flags.required("out")?;

    let result = sample_physical(count, seed)?;
    write_text(out, &spin1_samples_csv(&result))?;
    println!("accepted: {}", result.states.len());
    println!("attempts: {}", result.attempts);
    println!("acceptance_rate: {}", result.acceptance_rate);
    Ok(())
}

fn cmd_sector(args: &[String]) -> Result<(), CliError> {
    let flags = Flags::parse(args)?;
    let sites: usize = flags.required_parsed("sites")?;
    if sites < 2 {
        return Err(CliError::Domain(format!(
            "--sites must be at least 2, got {sites}"
        )));
    }
    let model = LatticeModel::periodic(sites)?;
    let report = full_report(&model)?;
    let doc = SectorReportDocument::from_report(&report);
    print!("{}", to_json(&doc)?);

    if let Some(prefix) = flags.optional("csv") {
        for sector in &doc.sectors {
            let path = format!("{prefix}_Q{}.csv", sector.charge);
            write_text(&path, &sector_states_csv(&sector.states))?;
        }
    }
    Ok(())
}

fn cmd_optimize(args: &[String]) -> Result<(), CliError> {
    let flags = Flags::parse(args)?;
    let d: usize = flags.required_parsed("d")?;
    let hamiltonian_path = flags.required("hamiltonian")?;
    let out = flags.required("out")?;
    let step: f64 = flags.optional_parsed("step", 0.05)?;
    let iters: usize = flags.optional_parsed("iters", 20_000)?;
    let seed: u64 = flags.optional_parsed("seed", 0)?;
    let tol = flags.optional_parsed("tol", default_tol()?)?;

    let doc: MatrixDocument = from_json(&read_text(hamiltonian_path)?)?;
    let observable = doc.to_matrix()?;
    if observable.dim() != d {
        return Err(CliError::Domain(format!(
            "--d is {d} but the observable is {0}x{0}",
            observable.dim()
        )));
    }
    let smallest = hermitian_eigenvalues(&observable)[0];
    let objective = Objective::linear(observable, tol)?;

    let basis = GgmBasis::new(d)?;
    let start = random_insphere_tau(d, seed);
    let cfg = OptConfig {
        step_size: step,
        max_iters: iters,
        grad_tol: 1e-10,
        fd_step: 1e-5,
        seed,
    };
    let trajectory = optimize(&objective, &start, &cfg, &basis)?;
    write_text(out, &trajectory_csv(&trajectory))?;

    println!("iterations: {}", trajectory.iterates.len());
    println!("converged: {}", trajectory.converged);
    println!(
        "final_objective: {}",
        trajectory.final_iterate().objective_value
    );
    println!("min_eigenvalue: {smallest}");
    Ok(())
}
