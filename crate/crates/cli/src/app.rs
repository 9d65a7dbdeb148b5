//! Command-line surface and dispatch.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use subcode::{
    analyze, automorphism_group, cyclic_conjugate, desarguesian_spread, is_spread, isometric, lift,
    orbit_code, rational_canonical_form, AutMode, AutStrategy, FieldSpec, IsometryMode,
    IsometryOutcome, NonIsometry, PolyGF, SubspaceCode,
};
use thiserror::Error;

use crate::format::{
    self, parse_code, parse_generators, parse_rank_code, serialize_code, FormatError,
};
use crate::harness;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    InFile { path: PathBuf, source: FormatError },
    #[error(transparent)]
    Core(#[from] subcode::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
}

/// Exact-arithmetic toolkit for subspace codes over finite fields.
#[derive(Parser, Debug)]
#[command(name = "subcode", version, about)]
pub struct Cli {
    /// Ceiling for exhaustive search sizes; larger groups are refused.
    #[arg(long, global = true, default_value_t = subcode::DEFAULT_CAP)]
    pub cap: u64,
    /// Worker threads for parallel scans (default: all cores). Output is
    /// identical for every value.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a code and print it (or write it with -o).
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Report cardinality, dimension and distance distributions of a code
    /// file (.sc or .rm, detected from the magic line).
    Analyze { file: PathBuf },
    /// Compute the automorphism group of a subspace code.
    Aut {
        file: PathBuf,
        /// Stabilizer in the full semilinear group instead of GL(n, q).
        #[arg(long)]
        semilinear: bool,
        #[arg(long, value_enum, default_value_t = Strategy::Brute)]
        strategy: Strategy,
        /// Generator file for the verify strategy.
        #[arg(long)]
        gens: Option<PathBuf>,
    },
    /// Decide whether two codes are (semi)linearly isometric.
    Isometric {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        semilinear: bool,
    },
    /// Rational canonical form of the first matrix in a generator file.
    Rcf {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Conjugacy in GL(n, q) of the cyclic groups generated by the first
    /// matrices of two generator files.
    Conjugate { g1: PathBuf, g2: PathBuf },
    /// Re-derive the published reference values from built-in fixtures.
    VerifyPaper,
}

#[derive(Subcommand, Debug)]
pub enum Construct {
    /// Desarguesian spread of k-dimensional subspaces of F_q^n.
    Spread {
        /// Field characteristic.
        #[arg(long)]
        p: u32,
        /// Field extension degree.
        #[arg(long, default_value_t = 1)]
        m: u32,
        /// Field modulus c_0,...,c_{m-1} (default: lex-smallest irreducible).
        #[arg(long, value_delimiter = ',')]
        modulus: Option<Vec<u16>>,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Spread polynomial c_0,...,c_{k-1}, constant term first; the x^k
        /// coefficient is an implicit 1.
        #[arg(long, value_delimiter = ',', required = true)]
        poly: Vec<u32>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Orbit of one codeword of a code file under a generator set.
    Orbit {
        /// Code file supplying the starting subspace.
        #[arg(long)]
        start: PathBuf,
        /// Index of the starting word in canonical order.
        #[arg(long, default_value_t = 0)]
        word: usize,
        #[arg(long)]
        gens: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Lift a rank-metric code to a constant dimension code.
    Lift {
        /// Rank-metric code file.
        #[arg(long)]
        rank: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Brute,
    Verify,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_code(path: &Path) -> Result<SubspaceCode, CliError> {
    parse_code(&read(path)?).map_err(|source| CliError::InFile {
        path: path.to_path_buf(),
        source,
    })
}

fn load_generators(path: &Path) -> Result<format::GeneratorSet, CliError> {
    parse_generators(&read(path)?).map_err(|source| CliError::InFile {
        path: path.to_path_buf(),
        source,
    })
}

fn emit_code(
    code: &SubspaceCode,
    output: &Option<PathBuf>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let text = serialize_code(code);
    match output {
        Some(path) => {
            std::fs::write(path, &text)?;
            writeln!(out, "wrote {} ({} words)", path.display(), code.len())?;
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn distribution_line(dist: &std::collections::BTreeMap<usize, u64>) -> String {
    if dist.is_empty() {
        return "-".into();
    }
    dist.iter()
        .map(|(k, v)| format!("{k}:{v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn min_line(min: Option<usize>) -> String {
    match min {
        Some(d) => d.to_string(),
        None => "undefined (fewer than two words)".into(),
    }
}

/// Dispatches one parsed invocation; returns the process exit code
/// (0 success / positive decision, 1 negative decision).
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Construct { what } => {
            run_construct(what, out)?;
            Ok(0)
        }
        Command::Analyze { file } => run_analyze(file, out),
        Command::Aut {
            file,
            semilinear,
            strategy,
            gens,
        } => run_aut(cli.cap, file, *semilinear, *strategy, gens, out),
        Command::Isometric { a, b, semilinear } => run_isometric(cli.cap, a, b, *semilinear, out),
        Command::Rcf { matrix } => run_rcf(matrix, out),
        Command::Conjugate { g1, g2 } => run_conjugate(g1, g2, out),
        Command::VerifyPaper => {
            let ok = harness::verify(cli.cap, out)?;
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn run_construct(what: &Construct, out: &mut dyn Write) -> Result<(), CliError> {
    match what {
        Construct::Spread {
            p,
            m,
            modulus,
            k,
            n,
            poly,
            output,
        } => {
            let spec = FieldSpec::make(*p, *m, modulus.as_deref())?;
            // The x^k coefficient is an implicit 1.
            let mut coeffs = poly.clone();
            coeffs.push(1);
            let poly = PolyGF::from_indices(&spec, &coeffs)?;
            let code = desarguesian_spread(&spec, *k, *n, &poly)?;
            emit_code(&code, output, out)
        }
        Construct::Orbit {
            start,
            word,
            gens,
            output,
        } => {
            let code = load_code(start)?;
            let start_word = code
                .words()
                .get(*word)
                .ok_or_else(|| {
                    CliError::Usage(format!(
                        "--word {word} out of range: the code has {} words",
                        code.len()
                    ))
                })?
                .clone();
            let gens = load_generators(gens)?;
            let orbit = orbit_code(&start_word, &gens.generators)?;
            emit_code(&orbit, output, out)
        }
        Construct::Lift { rank, output } => {
            let text = read(rank)?;
            let rank_code = parse_rank_code(&text).map_err(|source| CliError::InFile {
                path: rank.clone(),
                source,
            })?;
            let lifted = lift(&rank_code)?;
            emit_code(&lifted, output, out)
        }
    }
}

fn run_analyze(file: &Path, out: &mut dyn Write) -> Result<i32, CliError> {
    let text = read(file)?;
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    if first == format::RM_MAGIC {
        let code = parse_rank_code(&text).map_err(|source| CliError::InFile {
            path: file.to_path_buf(),
            source,
        })?;
        let (k, m) = code.shape();
        writeln!(out, "format: rank-metric code")?;
        writeln!(out, "field: {}", code.spec())?;
        writeln!(out, "shape: {k} {m}")?;
        writeln!(out, "cardinality: {}", code.len())?;
        let min = match code.min_rank_distance() {
            Ok(d) => d.to_string(),
            Err(_) => "undefined (fewer than two words)".into(),
        };
        writeln!(out, "min rank distance: {min}")?;
        return Ok(0);
    }
    let code = parse_code(&text).map_err(|source| CliError::InFile {
        path: file.to_path_buf(),
        source,
    })?;
    let report = analyze(&code)?;
    writeln!(out, "format: subspace code")?;
    writeln!(out, "field: {}", code.spec())?;
    writeln!(out, "ambient: {}", report.ambient)?;
    writeln!(out, "cardinality: {}", report.cardinality)?;
    writeln!(
        out,
        "dimension distribution: {}",
        distribution_line(&report.dimensions)
    )?;
    writeln!(
        out,
        "subspace distance: min {}, distribution {}",
        min_line(report.subspace_distance.min),
        distribution_line(&report.subspace_distance.distribution)
    )?;
    writeln!(
        out,
        "injection distance: min {}, distribution {}",
        min_line(report.injection_distance.min),
        distribution_line(&report.injection_distance.distribution)
    )?;
    writeln!(
        out,
        "spread: {}",
        if is_spread(&code)? { "yes" } else { "no" }
    )?;
    Ok(0)
}

fn run_aut(
    cap: u64,
    file: &Path,
    semilinear: bool,
    strategy: Strategy,
    gens: &Option<PathBuf>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let code = load_code(file)?;
    let mode = if semilinear {
        AutMode::Semilinear
    } else {
        AutMode::Linear
    };
    let strategy = match strategy {
        Strategy::Brute => AutStrategy::Brute,
        Strategy::Verify => {
            let path = gens
                .as_ref()
                .ok_or_else(|| CliError::Usage("--strategy verify requires --gens FILE".into()))?;
            AutStrategy::VerifyClosure(load_generators(path)?.generators)
        }
    };
    let report = automorphism_group(&code, mode, &strategy, cap)?;
    writeln!(
        out,
        "mode: {}",
        if semilinear { "semilinear" } else { "linear" }
    )?;
    writeln!(out, "automorphism group order: {}", report.group.order())?;
    writeln!(
        out,
        "maximality: {}",
        if report.certified_maximal {
            "certified (exhaustive search)"
        } else {
            "not certified (verified generator closure)"
        }
    )?;
    Ok(0)
}

fn run_isometric(
    cap: u64,
    a: &Path,
    b: &Path,
    semilinear: bool,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let code_a = load_code(a)?;
    let code_b = load_code(b)?;
    let mode = if semilinear {
        IsometryMode::Semilinear
    } else {
        IsometryMode::Linear
    };
    match isometric(&code_a, &code_b, mode, cap)? {
        IsometryOutcome::Isometric(witness) => {
            writeln!(out, "isometric: yes")?;
            writeln!(out, "witness frob {}", witness.frobenius().exponent())?;
            for i in 0..witness.matrix().rows() {
                let row: Vec<String> = witness
                    .matrix()
                    .row(i)
                    .iter()
                    .map(|e| e.index().to_string())
                    .collect();
                writeln!(out, "{}", row.join(" "))?;
            }
            Ok(0)
        }
        IsometryOutcome::NotIsometric(evidence) => {
            let reason = match evidence {
                NonIsometry::FingerprintMismatch { component } => {
                    format!("fingerprint mismatch ({component})")
                }
                NonIsometry::ExhaustiveSearchCompleted => "exhaustive search completed".into(),
            };
            writeln!(out, "isometric: no ({reason})")?;
            Ok(1)
        }
    }
}

fn run_rcf(matrix: &Path, out: &mut dyn Write) -> Result<i32, CliError> {
    let gens = load_generators(matrix)?;
    let first = gens
        .generators
        .first()
        .ok_or_else(|| CliError::Usage(format!("{}: no matrices", matrix.display())))?;
    let report = rational_canonical_form(first.matrix())?;
    let factors: Vec<String> = report
        .invariant_factors
        .iter()
        .map(|f| f.to_string())
        .collect();
    writeln!(out, "invariant factors: {}", factors.join("; "))?;
    let divisors: Vec<String> = report
        .elementary_divisors
        .iter()
        .map(|(f, e)| format!("({f})^{e}"))
        .collect();
    writeln!(out, "elementary divisors: {}", divisors.join("; "))?;
    writeln!(out, "rational canonical form:")?;
    for i in 0..report.rcf.rows() {
        let row: Vec<String> = report
            .rcf
            .row(i)
            .iter()
            .map(|e| e.index().to_string())
            .collect();
        writeln!(out, "{}", row.join(" "))?;
    }
    Ok(0)
}

fn run_conjugate(g1: &Path, g2: &Path, out: &mut dyn Write) -> Result<i32, CliError> {
    let a = load_generators(g1)?;
    let b = load_generators(g2)?;
    let ma = a
        .generators
        .first()
        .ok_or_else(|| CliError::Usage(format!("{}: no matrices", g1.display())))?;
    let mb = b
        .generators
        .first()
        .ok_or_else(|| CliError::Usage(format!("{}: no matrices", g2.display())))?;
    if cyclic_conjugate(ma.matrix(), mb.matrix())? {
        writeln!(out, "conjugate: yes")?;
        Ok(0)
    } else {
        writeln!(out, "conjugate: no")?;
        Ok(1)
    }
}
