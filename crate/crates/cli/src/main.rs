use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use diagramdeg::actions::{
    check_action_law, check_faithful_full, check_faithful_minpairs, check_monogenic, LawMode,
};
use diagramdeg::degrees::{big_sequences, degree_table, degree_table_csv, degree_table_json};
use diagramdeg::families::{expected_size, projections};
use diagramdeg::oracle::{LATTICE_CAP, MINIMAL_CAP};
use diagramdeg::{
    ActionTable, BigCount, Budget, DegreeReport, Diagram, EnumeratedMonoid, Error, Family,
    TableMonoid,
};
use serde_json::json;

/// Pairs checked by the sampled action-law test.
const LAW_SAMPLES: usize = 2_000;
/// Largest monoid on which the action law is checked on all pairs.
const FULL_LAW_LIMIT: usize = 1_000;
/// Largest `|monoid| × |states|` for which the full kernel is computed by default.
const FULL_KERNEL_WORK: usize = 20_000_000;

#[derive(Parser)]
#[command(
    name = "diagramdeg",
    version,
    about = "Diagram monoids and their minimum transformation degrees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Product of two diagrams.
    Mul {
        #[arg(long)]
        n: usize,
        a: String,
        b: String,
    },
    /// The involution `a ↦ a*`.
    Star {
        #[arg(long)]
        n: usize,
        a: String,
    },
    /// Statistics, planarity and family membership of a diagram.
    Info {
        #[arg(long)]
        n: usize,
        a: String,
    },
    /// List or count the elements of a family.
    Enum {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        count: bool,
        /// Only projections of this rank.
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Minimum transformation degree.
    Degree {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Mode::Formula)]
        mode: Mode,
    },
    /// The degree table for `n = 0..=max_n`.
    Table {
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Build or verify the minimum-degree action.
    Action {
        #[arg(value_enum)]
        op: ActionOp,
        #[command(flatten)]
        target: Target,
        /// Faithfulness by comparing every element.
        #[arg(long, conflicts_with = "minpairs")]
        full: bool,
        /// Faithfulness by separating the minimal pairs only.
        #[arg(long)]
        minpairs: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Brute force over the multiplication table.
    Oracle {
        #[arg(value_enum)]
        op: OracleOp,
        #[command(flatten)]
        target: Target,
        /// Largest monoid the search may run on.
        #[arg(long)]
        cap: Option<usize>,
    },
}

#[derive(Args)]
struct Target {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    n: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Formula,
    Construct,
    Verify,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ActionOp {
    Build,
    Verify,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleOp {
    RcLattice,
    MinimalCongruences,
    Degrc,
}

enum Failure {
    Lib(Error),
    /// A check ran and failed; the message carries the witness.
    Verify(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<(), Failure>;

fn parse(text: &str, n: usize) -> Result<Diagram, Error> {
    Diagram::parse(text, n)
}

fn write_out(out: Option<&PathBuf>, text: &str) -> Outcome {
    match out {
        Some(path) => fs::write(path, format!("{text}\n"))
            .map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn info(n: usize, a: &str) -> Outcome {
    let d = parse(a, n)?;
    let s = d.stats();
    let families: Vec<&str> = Family::ALL
        .iter()
        .filter(|&&f| f != Family::TLM && d.in_family(f))
        .map(|f| f.name())
        .collect();
    let v = json!({
        "diagram": d.to_string(),
        "n": n,
        "blocks": d.num_blocks(),
        "rank": s.rank,
        "dom": s.dom,
        "codom": s.codom,
        "ker": s.ker.to_string(),
        "coker": s.coker.to_string(),
        "planar": d.is_planar(),
        "projection": d.is_projection(),
        "families": families,
    });
    println!("{}", serde_json::to_string_pretty(&v).expect("json"));
    Ok(())
}

fn enumerate(t: &Target, count: bool, rank: Option<usize>) -> Outcome {
    let (f, n) = (t.family, t.n);
    let elements = match rank {
        Some(r) => projections(f, n, r)?,
        None if count => {
            println!("{}", expected_size(f, n)?);
            return Ok(());
        }
        None => EnumeratedMonoid::new(f, n, Budget::from_env())?
            .elements()
            .to_vec(),
    };
    if count {
        println!("{}", elements.len());
    } else {
        for d in elements {
            println!("{d}");
        }
    }
    Ok(())
}

fn report_line(r: &DegreeReport<BigCount>) -> String {
    let q = r
        .q_size
        .as_ref()
        .map_or("-".to_string(), ToString::to_string);
    let rc = r
        .degrc
        .as_ref()
        .map_or("-".to_string(), ToString::to_string);
    format!(
        "family={} n={} q_size={q} deg_prime={} deg={} degrc={rc}",
        r.family, r.n, r.deg_prime, r.deg
    )
}

/// Faithfulness strategy: every element when the monoid fits the budget and
/// the work stays moderate, the minimal pairs otherwise.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Strategy {
    Full,
    MinPairs,
}

fn choose(t: &ActionTable, forced: Option<Strategy>) -> Result<Strategy, Error> {
    if let Some(s) = forced {
        return Ok(s);
    }
    let size = expected_size(t.family(), t.degree())?;
    let fits = size <= BigCount::from(Budget::from_env().max_elements)
        && size * BigCount::from(t.len()) <= BigCount::from(FULL_KERNEL_WORK);
    Ok(if fits {
        Strategy::Full
    } else {
        Strategy::MinPairs
    })
}

struct Certificate {
    lines: Vec<String>,
    faithful: bool,
    monogenic: Option<bool>,
    law: bool,
    degree_ok: bool,
    witness: Option<String>,
}

fn certify(t: &ActionTable, strategy: Strategy) -> Result<Certificate, Error> {
    let (f, n) = (t.family(), t.degree());
    let mut lines = Vec::new();
    let mut witness = None;
    let monoid = match strategy {
        Strategy::Full => Some(EnumeratedMonoid::new(f, n, Budget::from_env())?),
        Strategy::MinPairs => None,
    };
    let faithful = match &monoid {
        Some(m) => {
            let found = check_faithful_full(t, m)?;
            lines.push(format!(
                "faithfulness: full kernel over {} elements",
                m.len()
            ));
            found
        }
        None => {
            let found = check_faithful_minpairs(t)?;
            lines.push("faithfulness: minimal pairs separated".to_string());
            found
        }
    };
    if let Some((a, b)) = &faithful {
        witness = Some(format!("{a} and {b} induce the same transformation"));
    }
    let law_mode = match &monoid {
        Some(m) if m.len() <= FULL_LAW_LIMIT => LawMode::Full,
        _ => LawMode::Sampled {
            samples: LAW_SAMPLES,
            max_len: 3 * n + 4,
            seed: 0,
        },
    };
    let violation = check_action_law(t, monoid.as_ref(), law_mode)?;
    lines.push(match law_mode {
        LawMode::Full => "action law: all pairs".to_string(),
        LawMode::Sampled { samples, .. } => format!("action law: {samples} sampled pairs"),
    });
    if let Some(v) = &violation {
        witness.get_or_insert(format!(
            "state {} sent to {} by ({})({}) but to {} by their product",
            t.states()[v.state],
            t.states()[v.left],
            v.a,
            v.b,
            t.states()[v.right]
        ));
    }
    let monogenic = match t.seed() {
        Ok(_) => {
            lines.push("monogenic: orbit of the seed under the generators".to_string());
            Some(check_monogenic(t)?)
        }
        Err(_) => None,
    };
    let sink = t.sink_index();
    lines.push(format!(
        "states: {} with {}",
        t.len(),
        if sink.is_some() {
            "a global fixed point"
        } else {
            "no fixed point"
        }
    ));
    let report = DegreeReport::compute(big_sequences(), f, n)?;
    let degree_ok = BigCount::from(t.partial_degree()) == report.deg_prime;
    lines.push(format!(
        "degree: {} states against formula deg = {}",
        t.len(),
        report.deg
    ));
    Ok(Certificate {
        lines,
        faithful: faithful.is_none(),
        monogenic,
        law: violation.is_none(),
        degree_ok,
        witness,
    })
}

impl Certificate {
    fn passed(&self) -> bool {
        self.faithful && self.law && self.degree_ok && self.monogenic != Some(false)
    }

    fn print(&self) {
        for l in &self.lines {
            println!("certificate: {l}");
        }
        if let Some(w) = &self.witness {
            println!("witness: {w}");
        }
    }
}

fn monogenic_text(m: Option<bool>) -> String {
    m.map_or("n/a".to_string(), |b| b.to_string())
}

fn degree(t: &Target, mode: Mode) -> Outcome {
    let (f, n) = (t.family, t.n);
    let report = DegreeReport::checked(big_sequences(), f, n)?;
    match mode {
        Mode::Formula => println!("{}", report_line(&report)),
        Mode::Construct => {
            let a = ActionTable::standard(f, n)?;
            println!(
                "construction={} states={} sink={} deg_prime={} deg={}",
                a.construction(),
                a.len(),
                a.sink_index().map_or("-".to_string(), |s| s.to_string()),
                a.partial_degree(),
                a.len()
            );
        }
        Mode::Verify => {
            let a = ActionTable::standard(f, n)?;
            let c = certify(&a, choose(&a, None)?)?;
            println!(
                "deg={} deg_prime={} faithful={} monogenic={}",
                a.len(),
                a.partial_degree(),
                c.faithful,
                monogenic_text(c.monogenic)
            );
            c.print();
            if !c.passed() {
                return Err(Failure::Verify(format!("{f}{n} failed verification")));
            }
        }
    }
    Ok(())
}

fn action(op: ActionOp, t: &Target, forced: Option<Strategy>, out: Option<&PathBuf>) -> Outcome {
    let a = ActionTable::standard(t.family, t.n)?;
    match op {
        ActionOp::Build => write_out(out, &a.to_json()?),
        ActionOp::Verify => {
            let c = certify(&a, choose(&a, forced)?)?;
            let summary = json!({
                "family": t.family.name(),
                "n": t.n,
                "construction": a.construction().to_string(),
                "states": a.len(),
                "faithful": c.faithful,
                "action_law": c.law,
                "monogenic": c.monogenic,
                "degree_matches_formula": c.degree_ok,
                "checks": c.lines,
                "witness": c.witness,
            });
            write_out(out, &serde_json::to_string_pretty(&summary).expect("json"))?;
            if c.passed() {
                Ok(())
            } else {
                Err(Failure::Verify(
                    c.witness.unwrap_or_else(|| "verification failed".into()),
                ))
            }
        }
    }
}

fn oracle(op: OracleOp, t: &Target, cap: Option<usize>) -> Outcome {
    let m = EnumeratedMonoid::new(t.family, t.n, Budget::from_env())?;
    let tm = TableMonoid::from_enumerated(&m)?;
    match op {
        OracleOp::RcLattice => {
            let all = tm.all_right_congruences(cap.unwrap_or(LATTICE_CAP))?;
            println!("right_congruences={}", all.len());
            for c in all {
                let labels: Vec<String> = c.labels().iter().map(ToString::to_string).collect();
                println!("{} {}", c.num_classes(), labels.join(","));
            }
        }
        OracleOp::MinimalCongruences => {
            let mins = tm.minimal_congruences(cap.unwrap_or(MINIMAL_CAP))?;
            println!("minimal_congruences={}", mins.len());
            for c in mins {
                let classes: Vec<String> = c
                    .classes()
                    .into_iter()
                    .filter(|k| k.len() > 1)
                    .map(|k| {
                        k.iter()
                            .map(|&i| m.get(i).to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    })
                    .collect();
                println!("{}", classes.join(" | "));
            }
        }
        OracleOp::Degrc => {
            let d = tm.degrc_bruteforce(cap.unwrap_or(LATTICE_CAP))?;
            println!("degrc={d}");
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Mul { n, a, b } => {
            println!("{}", parse(&a, n)?.multiply(&parse(&b, n)?)?);
            Ok(())
        }
        Command::Star { n, a } => {
            println!("{}", parse(&a, n)?.star());
            Ok(())
        }
        Command::Info { n, a } => info(n, &a),
        Command::Enum {
            target,
            count,
            rank,
        } => enumerate(&target, count, rank),
        Command::Degree { target, mode } => degree(&target, mode),
        Command::Table { max_n, format } => {
            let entries = degree_table(big_sequences(), max_n)?;
            match format {
                Format::Csv => print!("{}", degree_table_csv(&entries)),
                Format::Json => print!("{}", degree_table_json(&entries)),
            }
            Ok(())
        }
        Command::Action {
            op,
            target,
            full,
            minpairs,
            out,
        } => {
            let forced = match (full, minpairs) {
                (true, _) => Some(Strategy::Full),
                (_, true) => Some(Strategy::MinPairs),
                _ => None,
            };
            action(op, &target, forced, out.as_ref())
        }
        Command::Oracle { op, target, cap } => oracle(op, &target, cap),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e @ Error::BudgetExceeded { .. })) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(Failure::Lib(e @ (Error::InvalidTable(_) | Error::Overflow(_)))) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
