//! Command-line front-end: symmetry checks, protocol simulation, capacity
//! search and state construction, with a single JSON report on stdout.
//!
//! Exit codes: 0 success (symmetric where that applies), 1 invalid input,
//! 2 internal numerical failure, 3 asymmetric gate or unavailable protocol.
//! Message and operation indices are 1-based on the command line and in
//! reports, matching the usual physics convention.

mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use orthogate::capacity::max_reverse_messages;
use orthogate::error::Error;
use orthogate::gate::{self, verify_orthogonal, CatalogParams, ControlledGate};
use orthogate::generate::{random_symmetric_gate, random_unitary};
use orthogate::io::{load_gate, save_gate};
use orthogate::matrix::gram;
use orthogate::protocol::{check_distinguishability, run_forward, run_reverse, ProtocolTranscript};
use orthogate::symmetry::{analyze, construct_states, eigenstates_from_basis, SymmetryReport};
use orthogate::{ComplexMatrix, DEFAULT_TOL};

use report::Json;

#[derive(Parser)]
#[command(
    name = "orthogate",
    version,
    about = "Symmetry analysis, protocol simulation and reverse capacity of controlled quantum gates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a gate is a symmetric orthogonal gate
    Check(GateArgs),
    /// Simulate the forward or reverse classical-communication protocol
    Simulate(SimulateArgs),
    /// Compute the maximum zero-error reverse message count
    Capacity(GateArgs),
    /// Build the reference state, basis and eigenstates of a symmetric gate,
    /// or generate a random symmetric gate
    Construct(ConstructArgs),
    /// List the built-in gate catalog
    Catalog,
}

#[derive(Args)]
struct GateArgs {
    /// Catalog gate name (see `orthogate catalog`)
    #[arg(long, conflicts_with = "file")]
    gate: Option<String>,

    /// Gate-spec JSON file
    #[arg(long)]
    file: Option<PathBuf>,

    /// Cardinality for shift / shifted-u / --random-symmetric
    #[arg(long)]
    n: Option<usize>,

    /// Seed for shifted-u's fixed unitary and --random-symmetric
    #[arg(long)]
    seed: Option<u64>,

    /// Phase alpha of the controlled-u gate
    #[arg(long)]
    alpha: Option<f64>,

    /// Phase of the unimodular amplitude b of the controlled-u gate
    #[arg(long)]
    b_phase: Option<f64>,

    /// Numerical tolerance (fallback: ORTHOGATE_TOL env var, then 1e-9)
    #[arg(long)]
    tol: Option<f64>,

    /// Print a human-readable summary to stderr
    #[arg(long)]
    verbose: bool,
}

#[derive(Args)]
struct SimulateArgs {
    #[command(flatten)]
    gate: GateArgs,

    /// Forward protocol: Alice encodes, Bob decodes
    #[arg(long, conflicts_with = "reverse")]
    forward: bool,

    /// Reverse protocol: Bob encodes, Alice decodes (symmetric gates only)
    #[arg(long)]
    reverse: bool,

    /// Message index, 1-based
    #[arg(short = 'm', long = "message", conflicts_with = "all")]
    m: Option<usize>,

    /// Run every message and append the Gram check
    #[arg(long)]
    all: bool,

    /// Alice's phases for the reverse protocol, comma separated
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    eta: Option<Vec<f64>>,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(flatten)]
    gate: GateArgs,

    /// Generate a random symmetric orthogonal gate (requires --n, --seed)
    #[arg(long)]
    random_symmetric: bool,

    /// Gamma phases of the construction, comma separated (default zeros)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    gamma: Option<Vec<f64>>,

    /// Write the gate-spec document to this path
    #[arg(long)]
    out: Option<PathBuf>,
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Dimension(_) | Error::NonUnitary(_) | Error::Parse(_) | Error::Validation(_) => 1,
        Error::Numerical(_) | Error::Inconsistency(_) => 2,
        Error::Commutation { .. } | Error::ProtocolUnavailable(_) => 3,
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Check(args) => cmd_check(args),
        Command::Simulate(args) => cmd_simulate(args),
        Command::Capacity(args) => cmd_capacity(args),
        Command::Construct(args) => cmd_construct(args),
        Command::Catalog => cmd_catalog(),
    }
}

fn resolve_tol(args: &GateArgs) -> Result<f64, Error> {
    if let Some(t) = args.tol {
        return Ok(t);
    }
    match std::env::var("ORTHOGATE_TOL") {
        Ok(raw) => raw
            .parse::<f64>()
            .map_err(|_| Error::Validation(format!("ORTHOGATE_TOL is not a number: {raw}"))),
        Err(_) => Ok(DEFAULT_TOL),
    }
}

fn resolve_gate(args: &GateArgs, tol: f64) -> Result<ControlledGate, Error> {
    if let Some(path) = &args.file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Validation(format!("cannot read {}: {e}", path.display())))?;
        return load_gate(&text, tol);
    }
    let name = args.gate.as_deref().ok_or_else(|| {
        Error::Validation("no gate given; use --gate NAME or --file PATH".into())
    })?;
    let t = if name == "shifted-u" {
        let n = args.n.ok_or_else(|| {
            Error::Validation("shifted-u requires --n".into())
        })?;
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed.unwrap_or(0));
        Some(random_unitary(n, &mut rng))
    } else {
        None
    };
    let params = CatalogParams {
        n: args.n,
        alpha: args.alpha.unwrap_or(0.0),
        b: Some(Complex64::from_polar(1.0, args.b_phase.unwrap_or(0.0))),
        basis: None,
        t,
    };
    gate::catalog(name, &params)
}

fn analysis_json(report: &SymmetryReport) -> Json {
    match &report.analysis {
        Some(a) => Json::Object(vec![
            ("eigenbasis", report::matrix(&a.eigenbasis)),
            ("phase_table", report::real_table(&a.phase_table)),
            ("t", report::matrix(&a.t)),
            (
                "c",
                Json::Array(a.c.iter().map(report::matrix).collect()),
            ),
            ("gauge", report::reals(&a.gauge)),
        ]),
        None => Json::Null,
    }
}

fn witness_json(report: &SymmetryReport) -> Json {
    match &report.witness {
        Some(w) => {
            let (n, m, p, q) = w.indices;
            Json::Object(vec![
                ("indices", report::indices_one_based(&[n, m, p, q])),
                ("commutator_norm", Json::Real(w.norm)),
            ])
        }
        None => Json::Null,
    }
}

fn cmd_check(args: GateArgs) -> Result<i32, Error> {
    let tol = resolve_tol(&args)?;
    let gate = resolve_gate(&args, tol)?;
    let orthogonality = match gate.reference() {
        Some(r) => {
            let rep = verify_orthogonal(gate.unitaries(), r, tol)?;
            Json::Object(vec![
                ("holds", Json::Bool(rep.holds)),
                ("worst_overlap_error", Json::Real(rep.worst_overlap_error)),
                ("basis", report::states(&rep.basis)),
            ])
        }
        None => Json::Null,
    };
    let sym = analyze(&gate, tol)?;

    let mut fields = report::head("check", tol, Some(gate.label()), Some(gate.cardinality()));
    fields.push(("orthogonality", orthogonality));
    fields.push((
        "commuting",
        Json::Object(vec![
            ("holds", Json::Bool(sym.symmetric)),
            ("witness", witness_json(&sym)),
        ]),
    ));
    fields.push(("symmetric", Json::Bool(sym.symmetric)));
    fields.push(("analysis", analysis_json(&sym)));
    println!("{}", Json::Object(fields).render());

    if args.verbose {
        if sym.symmetric {
            eprintln!("{}: symmetric orthogonal gate of cardinality {}", gate.label(), gate.cardinality());
        } else if let Some(w) = &sym.witness {
            let (n, m, p, q) = w.indices;
            eprintln!(
                "{}: asymmetric; products ({},{}) and ({},{}) do not commute (norm {:.3e})",
                gate.label(), n + 1, m + 1, p + 1, q + 1, w.norm
            );
        }
    }
    Ok(if sym.symmetric { 0 } else { 3 })
}

fn transcripts_json(transcripts: &[ProtocolTranscript]) -> Json {
    Json::Array(transcripts.iter().map(report::transcript).collect())
}

fn cmd_simulate(args: SimulateArgs) -> Result<i32, Error> {
    let tol = resolve_tol(&args.gate)?;
    let gate = resolve_gate(&args.gate, tol)?;
    let n = gate.cardinality();
    if !args.forward && !args.reverse {
        return Err(Error::Validation(
            "choose a direction: --forward or --reverse".into(),
        ));
    }
    let messages: Vec<usize> = if args.all {
        (0..n).collect()
    } else {
        let m = args.m.ok_or_else(|| {
            Error::Validation("give a message index with -m, or use --all".into())
        })?;
        if m == 0 || m > n {
            return Err(Error::Validation(format!(
                "message index {m} out of range 1..={n}"
            )));
        }
        vec![m - 1]
    };

    let mut transcripts = Vec::new();
    let mut eta_used: Option<Vec<f64>> = None;
    if args.forward {
        for &m in &messages {
            transcripts.push(run_forward(&gate, m, tol)?);
        }
    } else {
        let sym = analyze(&gate, tol)?;
        let eta = match &args.eta {
            Some(e) => {
                if e.len() != n {
                    return Err(Error::Dimension(format!(
                        "--eta needs {} comma-separated values",
                        n
                    )));
                }
                e.clone()
            }
            None => vec![0.0; n],
        };
        eta_used = Some(eta.clone());
        for &r in &messages {
            transcripts.push(run_reverse(&gate, &sym, r, &eta)?);
        }
    }

    // With --all, append the Gram check over the output family.
    let (gram_json, distinguishable) = if args.all {
        if args.forward {
            let outputs: Vec<_> = transcripts
                .iter()
                .map(|t| t.bob_output.clone().expect("forward outputs factorize"))
                .collect();
            let g = gram(&outputs)?;
            let ok = g.max_abs_diff(&ComplexMatrix::identity(n)) <= tol;
            (report::matrix(&g), Json::Bool(ok))
        } else {
            let (g, ok) = check_distinguishability(&transcripts, tol)?;
            (report::matrix(&g), Json::Bool(ok))
        }
    } else {
        (Json::Null, Json::Null)
    };

    let mut fields = report::head("simulate", tol, Some(gate.label()), Some(n));
    fields.push((
        "direction",
        Json::Str(if args.forward { "forward" } else { "reverse" }.into()),
    ));
    fields.push((
        "eta",
        match &eta_used {
            Some(e) => report::reals(e),
            None => Json::Null,
        },
    ));
    fields.push(("transcripts", transcripts_json(&transcripts)));
    fields.push(("gram", gram_json));
    fields.push(("distinguishable", distinguishable));
    println!("{}", Json::Object(fields).render());

    if args.gate.verbose {
        for t in &transcripts {
            eprintln!(
                "message {} decoded as {}",
                t.message + 1,
                t.decoded.map_or("ambiguous".into(), |d| (d + 1).to_string())
            );
        }
    }
    Ok(0)
}

fn cmd_capacity(args: GateArgs) -> Result<i32, Error> {
    let tol = resolve_tol(&args)?;
    let gate = resolve_gate(&args, tol)?;
    let result = max_reverse_messages(&gate, tol)?;

    let mut fields = report::head("capacity", tol, Some(gate.label()), Some(gate.cardinality()));
    fields.push(("n_b", Json::Int(result.n_b as i64)));
    fields.push(("subset_r", report::indices_one_based(&result.subset_r)));
    fields.push(("weights", report::reals(&result.weights)));
    fields.push(("xi_table", report::real_table(&result.xi_table)));
    fields.push(("shared_states", report::states(&result.shared_states)));
    fields.push(("certificate", transcripts_json(&result.certificate)));
    fields.push(("scope", Json::Str(result.scope.into())));
    println!("{}", Json::Object(fields).render());

    if args.verbose {
        eprintln!(
            "{}: N_B = {} of cardinality {}",
            gate.label(),
            result.n_b,
            gate.cardinality()
        );
    }
    Ok(0)
}

fn cmd_construct(args: ConstructArgs) -> Result<i32, Error> {
    let tol = resolve_tol(&args.gate)?;
    let gate = if args.random_symmetric {
        let n = args.gate.n.ok_or_else(|| {
            Error::Validation("--random-symmetric requires --n".into())
        })?;
        let seed = args.gate.seed.ok_or_else(|| {
            Error::Validation("--random-symmetric requires --seed".into())
        })?;
        random_symmetric_gate(n, seed)?
    } else {
        resolve_gate(&args.gate, tol)?
    };
    let n = gate.cardinality();
    let sym = analyze(&gate, tol)?;
    let gamma = match &args.gamma {
        Some(g) => {
            if g.len() != n {
                return Err(Error::Dimension(format!(
                    "--gamma needs {} comma-separated values",
                    n
                )));
            }
            g.clone()
        }
        None => vec![0.0; n],
    };
    let states = construct_states(&sym, &gamma)?;
    let eigenstates = eigenstates_from_basis(&sym, &states.basis, &gamma)?;

    let written = match &args.out {
        Some(path) => {
            let with_ref = gate.with_reference(states.reference.clone(), tol)?;
            std::fs::write(path, save_gate(&with_ref))
                .map_err(|e| Error::Validation(format!("cannot write {}: {e}", path.display())))?;
            Json::Str(path.display().to_string())
        }
        None => Json::Null,
    };

    let mut fields = report::head("construct", tol, Some(gate.label()), Some(n));
    fields.push(("gamma", report::reals(&gamma)));
    fields.push(("reference", report::state(&states.reference)));
    fields.push(("basis", report::states(&states.basis)));
    fields.push(("eigenstates", report::states(&eigenstates)));
    fields.push((
        "gate_spec",
        if args.random_symmetric {
            Json::Object(vec![
                ("label", Json::Str(gate.label().into())),
                ("N", Json::Int(n as i64)),
                (
                    "unitaries",
                    Json::Array(gate.unitaries().iter().map(report::matrix).collect()),
                ),
                ("reference", report::opt_state(&gate.reference().cloned())),
            ])
        } else {
            Json::Null
        },
    ));
    fields.push(("written_to", written));
    println!("{}", Json::Object(fields).render());

    if args.gate.verbose {
        eprintln!("{}: constructed reference and {} basis states", gate.label(), n);
    }
    Ok(0)
}

fn cmd_catalog() -> Result<i32, Error> {
    let entries = [
        ("cnot", "controlled-NOT, cardinality 2, reference |0>"),
        (
            "controlled-u",
            "cardinality-2 family anticommuting with sigma_z; --alpha, --b-phase",
        ),
        (
            "controlled-pauli",
            "identity plus the three Pauli operators on Bob's first qubit, Bell reference",
        ),
        ("cprime", "symmetric cardinality-4 sign-pattern gate"),
        ("shift", "cyclic shift family; --n sets the cardinality"),
        (
            "shifted-u",
            "T times the shift family for a seeded random unitary T; --n, --seed",
        ),
    ];
    let mut fields = report::head("catalog", DEFAULT_TOL, None, None);
    fields.push((
        "gates",
        Json::Array(
            entries
                .iter()
                .map(|(name, description)| {
                    Json::Object(vec![
                        ("name", Json::Str((*name).into())),
                        ("description", Json::Str((*description).into())),
                    ])
                })
                .collect(),
        ),
    ));
    println!("{}", Json::Object(fields).render());
    Ok(0)
}
