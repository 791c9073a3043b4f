use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hodgecheck::pvhs::{sym_tangent, DomainFamily, SchurModel};
use hodgecheck::repchar::{Characters, IrrepLabel};
use hodgecheck::rootsys::{Family, RootSystem, WeightVector};
use hodgecheck::Error;
use hodgecheck_cli::{domain, run, Group, Selection};
use serde_json::json;

/// Exact checks of the Hodge-theoretic data attached to irreducible bounded
/// symmetric domains.
#[derive(Parser)]
#[command(name = "hodgecheck", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Weight system of an irreducible representation.
    Weights(WeightsArgs),
    /// Run verification checks; with no group flags, runs all of them.
    Verify(VerifyArgs),
    /// Decompose S^k of the tangent representation of a domain.
    Decompose(DecomposeArgs),
}

#[derive(Args)]
struct WeightsArgs {
    /// Cartan type: A, B, C, D, E6 or E7.
    #[arg(long)]
    algebra: String,
    /// Rank; implied for E6 and E7.
    #[arg(long)]
    rank: Option<usize>,
    /// Use the fundamental weight of this node (1-based, Bourbaki order).
    #[arg(long, conflicts_with = "label")]
    fundamental: Option<usize>,
    /// Highest weight in fundamental-weight coordinates, e.g. 0,1,0.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    label: Option<Vec<i64>>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// E6/E7 weight tables against Freudenthal.
    #[arg(long)]
    tables: bool,
    /// Coroot pairings of the representation's weights against the strongly orthogonal roots stay within 1.
    #[arg(long)]
    bound: bool,
    /// The kernel ideal is generated in degree 2.
    #[arg(long)]
    generating: bool,
    /// Random-matrix oracle: iterated Higgs rank against matrix rank.
    #[arg(long)]
    higgs: bool,
    /// Rank strata dimensions from the Jacobian of minors.
    #[arg(long)]
    strata: bool,
    /// Closed-form and tabulated decompositions of S^k(T).
    #[arg(long)]
    lemmas: bool,
    /// Schur route against the character route for S^k(T).
    #[arg(long)]
    cross: bool,
    /// Exactness, nilpotency and dimension identities.
    #[arg(long)]
    invariants: bool,
    #[command(flatten)]
    domain: DomainArgs,
    #[arg(long)]
    k: Option<usize>,
    /// Random matrices per shape for the Higgs oracle.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Read the E6/E7 weight tables from this file instead of the embedded copy.
    #[arg(long)]
    golden: Option<PathBuf>,
    #[arg(long)]
    json: bool,
    /// Report 0 ms for every check so that repeated runs are byte-identical.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
struct DomainArgs {
    /// Domain family: I, II, III, IV, V or VI.
    #[arg(long)]
    family: Option<DomainFamily>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args)]
struct DecomposeArgs {
    #[command(flatten)]
    domain: DomainArgs,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    json: bool,
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Writes to stdout, treating a closed pipe (`| head`) as a normal exit.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn usage(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(EXIT_USAGE)
}

fn cmd_weights(args: WeightsArgs) -> Result<(), Error> {
    let family: Family = args.algebra.parse()?;
    let rank = match (family, args.rank) {
        (Family::E6, None) => 6,
        (Family::E7, None) => 7,
        (_, Some(r)) => r,
        (_, None) => return Err(Error::InvalidRootSystem {
            family: family.to_string(),
            rank: 0,
            reason: "--rank is required".into(),
        }),
    };
    let rs = RootSystem::simple(family, rank)?;
    let label = match (args.fundamental, args.label) {
        (Some(i), None) => IrrepLabel::from_weight(WeightVector::fundamental(rank, i)?)?,
        (None, Some(coords)) => IrrepLabel::new(coords, 0)?,
        _ => IrrepLabel::trivial(rank),
    };
    if label.rank() != rank {
        return Err(Error::RankMismatch { expected: rank, got: label.rank() });
    }
    let ws = Characters::new(&rs).weight_system(&label)?;
    let mut buf = String::new();
    let rows = ws.sorted();
    if args.json {
        let weights: Vec<_> =
            rows.iter().map(|(w, m)| json!({ "weight": w.coords, "multiplicity": m })).collect();
        let out = json!({
            "algebra": if matches!(family, Family::E6 | Family::E7) { family.to_string() } else { format!("{family}{rank}") },
            "label": label.coords(),
            "dimension": ws.mass(),
            "weights": weights,
        });
        emit(&format!("{}\n", serde_json::to_string_pretty(&out).expect("json")));
    } else {
        let algebra = if matches!(family, Family::E6 | Family::E7) { family.to_string() } else { format!("{family}{rank}") };
        let _ = writeln!(buf, "# {algebra} highest weight {}: {} weights, dimension {}", label, rows.len(), ws.mass());
        for (w, m) in rows {
            let _ = writeln!(buf, "{w}\t{m}");
        }
    }
    emit(&buf);
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    let flags = [
        (args.tables, Group::Tables),
        (args.bound, Group::Bound),
        (args.generating, Group::Generating),
        (args.higgs, Group::Higgs),
        (args.strata, Group::Strata),
        (args.lemmas, Group::Lemmas),
        (args.cross, Group::Cross),
        (args.invariants, Group::Invariants),
    ];
    let mut groups: Vec<Group> = flags.iter().filter(|(on, _)| *on).map(|(_, g)| *g).collect();
    if groups.is_empty() {
        groups = Group::ALL.to_vec();
    }
    let sel = Selection {
        groups,
        family: args.domain.family,
        p: args.domain.p,
        q: args.domain.q,
        n: args.domain.n,
        k: args.k,
        samples: args.samples,
        seed: args.seed,
        golden: args.golden,
        timing: !args.no_timing,
    };
    let result = match run(&sel) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    let report = &result.report;
    if args.json {
        emit(&format!("{}\n", report.to_json()));
    } else {
        let mut buf = String::new();
        for c in &report.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            let ms = if sel.timing { format!(" ({} ms)", c.ms) } else { String::new() };
            let _ = writeln!(buf, "{status}  {}  {}{ms}", c.id, c.computed);
            if !c.pass {
                let _ = writeln!(buf, "      expected: {}", c.expected);
            }
        }
        for f in &report.findings {
            let _ = writeln!(buf, "NOTE  {f}");
        }
        let passed = report.checks.iter().filter(|c| c.pass).count();
        let _ = writeln!(buf, "{passed}/{} checks passed", report.checks.len());
        emit(&buf);
    }
    for (id, e) in &result.errors {
        eprintln!("error in {id}: {e}");
    }
    if result.errors.iter().any(|(_, e)| matches!(e, Error::GuardExceeded(_))) {
        ExitCode::from(EXIT_USAGE)
    } else if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn cmd_decompose(args: DecomposeArgs) -> Result<(), Error> {
    let family = args
        .domain
        .family
        .ok_or_else(|| Error::InvalidDomain("--family is required".into()))?;
    let spec = domain(family, args.domain.p, args.domain.q, args.domain.n)?;
    let k = args.k;
    let d = sym_tangent(&spec, k)?;
    // partition names for the classical families, keyed by label
    let names: Vec<(IrrepLabel, String)> = spec
        .sym_tangent_partitions(k)
        .unwrap_or_default()
        .into_iter()
        .filter_map(|l| {
            let name = match spec.schur {
                Some(SchurModel::Paired { .. }) => format!("{l}⊗{l}"),
                _ => l.to_string(),
            };
            spec.schur_label(&l).map(|label| (label, name))
        })
        .collect();
    let name_of = |label: &IrrepLabel| names.iter().find(|(l, _)| l == label).map(|(_, n)| n.clone());
    if args.json {
        let summands: Vec<_> = d
            .iter()
            .map(|(label, m)| {
                json!({
                    "label": label.to_string(),
                    "charge": label.charge(),
                    "coords": label.coords(),
                    "multiplicity": m,
                    "partition": name_of(label),
                })
            })
            .collect();
        let out = json!({ "domain": spec.name(), "k": k, "summands": summands });
        emit(&format!("{}\n", serde_json::to_string_pretty(&out).expect("json")));
    } else {
        let mut buf = String::new();
        let _ = writeln!(buf, "# S^{k}(T) for {}: {} summands", spec.name(), d.len());
        for (label, m) in d.iter() {
            let mult = if m == 1 { String::new() } else { format!("{m}·") };
            let _ = match name_of(label) {
                Some(n) => writeln!(buf, "{mult}{label}\t{n}"),
                None => writeln!(buf, "{mult}{label}"),
            };
        }
        emit(&buf);
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Weights(a) => cmd_weights(a).map_or_else(usage, |()| ExitCode::SUCCESS),
        Command::Verify(a) => cmd_verify(a),
        Command::Decompose(a) => cmd_decompose(a).map_or_else(usage, |()| ExitCode::SUCCESS),
    }
}
