//! Command-line driver: reads polytope and poset JSON files, runs the fan
//! and hull routes, and emits reports, refined-fan JSON, and DOT diagrams.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check fails,
//! 2 for malformed input, 3 when a hypothesis (placed / appropriate) is
//! violated.

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use orbitope::error::Error as CoreError;
use orbitope::ffan::FundamentalFan;
use orbitope::kernel::rat::Rat;
use orbitope::kernel::spaces::WVector;
use orbitope::polytope::{f_vector, Polytope, PolytopeDoc};
use orbitope::posets::{poset_iso, IsoOutcome, Poset, PosetDoc, DEFAULT_ISO_BUDGET};
use orbitope::realize::realize_pipeline;
use orbitope::symmetrize::{fvector_from_refined, symmetrization_oracle, verify_all};
use orbitope::typea::TypeA;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const SCHEMA: &str = "orbitope/1";

#[derive(Parser)]
#[command(
    name = "orbitope",
    about = "Exact symmetrization of polytopes under the symmetric group",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the fundamental fan and its refined decomposition.
    Ffan(FfanArgs),
    /// Symmetrize by both routes and compare f-vectors.
    Symmetrize(SymmetrizeArgs),
    /// Print the f-vector of the symmetrization.
    Fvector(FvectorArgs),
    /// Run the whole verification battery on one input.
    Verify(VerifyArgs),
    /// Run the realization pipeline for decorated ordered set partitions.
    Realize(RealizeArgs),
    /// Decide whether two poset files are isomorphic.
    PosetIso(PosetIsoArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Polytope JSON file.
    #[arg(long)]
    input: PathBuf,
    /// Expected ambient dimension; checked against the input when given.
    #[arg(long)]
    d: Option<usize>,
}

#[derive(Args)]
struct FfanArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Write the fan poset as a Graphviz file.
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Write the refined fan JSON here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the fan face poset as a poset JSON file.
    #[arg(long)]
    poset_out: Option<PathBuf>,
}

#[derive(Args)]
struct SymmetrizeArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Which route to run.
    #[arg(long, default_value = "both", value_parser = ["on", "off", "both"])]
    oracle: String,
    /// Prepend the empty-face count to f-vectors.
    #[arg(long)]
    include_empty: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FvectorArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long)]
    include_empty: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Seed for the randomized probe suites.
    #[arg(long, default_value_t = 17)]
    seed: u64,
    /// Write the symmetrized poset as a Graphviz file.
    #[arg(long)]
    dot: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RealizeArgs {
    #[arg(long)]
    d: usize,
    /// Write the per-stage report JSON here.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct PosetIsoArgs {
    a: PathBuf,
    b: PathBuf,
    /// Node budget for the isomorphism search.
    #[arg(long, default_value_t = DEFAULT_ISO_BUDGET)]
    budget: u64,
}

/// Envelope stored in every file the tool reads or writes.
#[derive(Serialize, Deserialize)]
struct Envelope<T> {
    schema: String,
    kind: String,
    #[serde(flatten)]
    body: T,
}

#[derive(Serialize)]
struct ConeDoc {
    dim: usize,
    rays: Vec<Vec<Rat>>,
    lineality: Vec<Vec<Rat>>,
    source_face: Vec<usize>,
}

#[derive(Serialize)]
struct RefinedFanDoc {
    d: usize,
    witness: Vec<Rat>,
    cone_count: usize,
    cells: BTreeMap<String, Vec<ConeDoc>>,
}

#[derive(Serialize)]
struct SymmetrizeDoc {
    d: usize,
    orbit_vertices: Option<usize>,
    fvector_oracle: Option<Vec<u64>>,
    fvector_refined: Option<Vec<u64>>,
    agree: Option<bool>,
}

#[derive(Serialize)]
struct CheckDoc {
    name: String,
    pass: bool,
    detail: String,
}

#[derive(Serialize)]
struct VerifyDoc {
    d: usize,
    all_pass: bool,
    checks: Vec<CheckDoc>,
    fvector_oracle: Vec<u64>,
    fvector_refined: Vec<u64>,
    symmetrized_poset: PosetDoc,
}

#[derive(Serialize)]
struct StageDoc {
    name: String,
    pass: bool,
    detail: String,
}

#[derive(Serialize)]
struct RealizeDoc {
    d: usize,
    all_pass: bool,
    target_size: usize,
    symmetrized_size: Option<u64>,
    fvector: Option<Vec<u64>>,
    stages: Vec<StageDoc>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            // Hypothesis violations get their own exit code.
            let code = if err.chain().any(|c| {
                matches!(
                    c.downcast_ref::<CoreError>(),
                    Some(CoreError::NotPlaced | CoreError::NotAppropriate { .. })
                )
            }) {
                3
            } else {
                2
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Ffan(args) => cmd_ffan(args),
        Command::Symmetrize(args) => cmd_symmetrize(args),
        Command::Fvector(args) => cmd_fvector(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Realize(args) => cmd_realize(args),
        Command::PosetIso(args) => cmd_poset_iso(args),
    }
}

fn load_polytope(args: &InputArgs) -> Result<(Polytope, TypeA)> {
    let text = fs::read_to_string(&args.input)
        .with_context(|| format!("reading {}", args.input.display()))?;
    let envelope: Envelope<PolytopeDoc> =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", args.input.display()))?;
    if envelope.schema != SCHEMA {
        anyhow::bail!(
            "unsupported schema {:?}, expected {SCHEMA:?}",
            envelope.schema
        );
    }
    if envelope.kind != "polytope" {
        anyhow::bail!("expected a polytope file, found kind {:?}", envelope.kind);
    }
    let p = Polytope::try_from(&envelope.body).context("building the polytope")?;
    if let Some(d) = args.d {
        if d != p.d() {
            anyhow::bail!("--d {} does not match the input dimension {}", d, p.d());
        }
    }
    let group = TypeA::new(p.d()).context("building the reflection group")?;
    Ok((p, group))
}

fn write_or_print(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => println!("{text}"),
    }
    Ok(())
}

fn emit<T: Serialize>(out: &Option<PathBuf>, kind: &str, body: T) -> Result<()> {
    let envelope = Envelope {
        schema: SCHEMA.to_string(),
        kind: kind.to_string(),
        body,
    };
    write_or_print(out, &serde_json::to_string_pretty(&envelope)?)
}

fn canonical_w(reduced: &[Rat]) -> Vec<Rat> {
    WVector::from_reduced(reduced).coords().to_vec()
}

fn dot_out(path: &Option<PathBuf>, poset: &Poset, name: &str) -> Result<()> {
    if let Some(path) = path {
        fs::write(path, poset.to_dot(name))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn cmd_ffan(args: FfanArgs) -> Result<ExitCode> {
    let (p, group) = load_polytope(&args.input)?;
    let ff = FundamentalFan::build(&p, &group)?;
    let mut cells: BTreeMap<String, Vec<ConeDoc>> = BTreeMap::new();
    for (phi, cell) in ff.refined() {
        let key = group.face(phi).osp.label();
        let cones = cell
            .iter()
            .map(|&i| {
                let c = &ff.cones[i];
                ConeDoc {
                    dim: c.cone.dim(),
                    rays: c.cone.rays().iter().map(|r| canonical_w(r)).collect(),
                    lineality: c.cone.lineality().iter().map(|l| canonical_w(l)).collect(),
                    source_face: ff.lattice.faces[c.source].verts.clone(),
                }
            })
            .collect();
        cells.insert(key, cones);
    }
    let doc = RefinedFanDoc {
        d: group.d(),
        witness: ff.witness.coords().to_vec(),
        cone_count: ff.cones.len(),
        cells,
    };
    let z = ff.zposet(&group);
    dot_out(&args.dot, &z.poset, "fundamental-fan")?;
    if args.poset_out.is_some() {
        emit(&args.poset_out, "poset", PosetDoc::from(&z.poset))?;
    }
    emit(&args.out, "refined-fan", doc)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_symmetrize(args: SymmetrizeArgs) -> Result<ExitCode> {
    let (p, group) = load_polytope(&args.input)?;
    let oracle = match args.oracle.as_str() {
        "off" => None,
        _ => {
            let (hull, lattice) = symmetrization_oracle(&p, &group)?;
            Some((hull, lattice))
        }
    };
    let refined = if args.oracle == "on" {
        None
    } else {
        let ff = FundamentalFan::build(&p, &group)?;
        Some(fvector_from_refined(&ff, &group, args.include_empty))
    };
    let fvector_oracle = oracle
        .as_ref()
        .map(|(_, lattice)| f_vector(lattice, args.include_empty).entries());
    let fvector_refined = refined.as_ref().map(|fv| fv.entries());
    let agree = match (&fvector_oracle, &fvector_refined) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    let doc = SymmetrizeDoc {
        d: group.d(),
        orbit_vertices: oracle.as_ref().map(|(hull, _)| hull.vertices().len()),
        fvector_oracle,
        fvector_refined,
        agree,
    };
    let pass = doc.agree.unwrap_or(true);
    emit(&args.out, "symmetrization", doc)?;
    Ok(if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_fvector(args: FvectorArgs) -> Result<ExitCode> {
    let (p, group) = load_polytope(&args.input)?;
    let (_, lattice) = symmetrization_oracle(&p, &group)?;
    let fv = f_vector(&lattice, args.include_empty);
    let entries: Vec<String> = fv.entries().iter().map(|c| c.to_string()).collect();
    println!("({})", entries.join(","));
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let (p, group) = load_polytope(&args.input)?;
    let report = verify_all(&p, &group, args.seed)?;
    for c in &report.checks {
        println!(
            "{} {}: {}",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            c.detail
        );
    }
    let doc = VerifyDoc {
        d: group.d(),
        all_pass: report.all_pass(),
        checks: report
            .checks
            .iter()
            .map(|c| CheckDoc {
                name: c.name.to_string(),
                pass: c.pass,
                detail: c.detail.clone(),
            })
            .collect(),
        fvector_oracle: report.oracle_fvector.entries(),
        fvector_refined: report.refined_fvector.entries(),
        symmetrized_poset: PosetDoc::from(&report.symmetrized.poset),
    };
    dot_out(&args.dot, &report.symmetrized.poset, "symmetrized")?;
    if args.out.is_some() {
        emit(&args.out, "verify-report", &doc)?;
    }
    println!(
        "{}: {} checks, symmetrized poset with {} elements",
        if doc.all_pass { "ok" } else { "FAILED" },
        doc.checks.len(),
        doc.symmetrized_poset.elements.len()
    );
    Ok(if doc.all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_realize(args: RealizeArgs) -> Result<ExitCode> {
    let report = realize_pipeline(args.d)?;
    for s in &report.stages {
        println!(
            "{} {}: {}",
            if s.pass { "PASS" } else { "FAIL" },
            s.name,
            s.detail
        );
    }
    let doc = RealizeDoc {
        d: report.d,
        all_pass: report.all_pass(),
        target_size: report.target_size,
        symmetrized_size: report.symmetrized_size,
        fvector: report.fvector.as_ref().map(|f| f.entries()),
        stages: report
            .stages
            .iter()
            .map(|s| StageDoc {
                name: s.name.to_string(),
                pass: s.pass,
                detail: s.detail.clone(),
            })
            .collect(),
    };
    if args.report.is_some() {
        emit(&args.report, "realize-report", &doc)?;
    }
    Ok(if doc.all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn load_poset(path: &Path) -> Result<Poset> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let envelope: Envelope<PosetDoc> =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    if envelope.kind != "poset" {
        anyhow::bail!("expected a poset file, found kind {:?}", envelope.kind);
    }
    Poset::try_from(&envelope.body).context("building the poset")
}

fn cmd_poset_iso(args: PosetIsoArgs) -> Result<ExitCode> {
    let a = load_poset(&args.a)?;
    let b = load_poset(&args.b)?;
    match poset_iso(&a, &b, args.budget) {
        IsoOutcome::Iso(_) => {
            println!("isomorphic=true");
            Ok(ExitCode::SUCCESS)
        }
        IsoOutcome::NonIso => {
            println!("isomorphic=false");
            Ok(ExitCode::from(1))
        }
        IsoOutcome::BudgetExceeded => {
            println!("isomorphic=unknown (budget exceeded)");
            Ok(ExitCode::from(4))
        }
    }
}
