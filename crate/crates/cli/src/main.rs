use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qtcodes::analysis::{classify_constacyclic, summarize, CodeSummary};
use qtcodes::construct::{EnumGuard, Family};
use qtcodes::published::{verify_all, VerifyReport};
use qtcodes::search::{search, SearchReport, SearchSpec, DEFAULT_MAX_CANDIDATES};
use qtcodes::{Error, RPoly, Recipe};

#[derive(Parser)]
#[command(name = "qtcodes", version, about = "One-generator (1+u)-quasi-twisted codes over F2+uF2")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a code from a JSON recipe and report its parameters.
    Construct {
        recipe: PathBuf,
        #[arg(long)]
        json: bool,
        /// Enumerate even when the code exceeds the size guard.
        #[arg(long)]
        force_enum: bool,
    },
    /// Recompute the bundled reference constructions against their published parameters.
    VerifyPaper {
        #[arg(long)]
        json: bool,
    },
    /// Search generator polynomials for the best distance at each dimension.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        family: Family,
        #[arg(long)]
        max_deg: usize,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_MAX_CANDIDATES)]
        max_candidates: usize,
    },
    /// Identify the shape of the constacyclic code generated by one element of S_n.
    Classify {
        #[arg(long)]
        n: usize,
        /// Element as "a(x) + u*(b(x))".
        #[arg(long)]
        gen: String,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Lib(Error),
    Io(String),
    Guard,
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::EnumerationGuard { .. } | Error::OracleGuard { .. } => 3,
        Error::EmptySearchSpace => 4,
        Error::Parse { .. } | Error::Recipe(_) => 5,
        _ => 2,
    }
}

fn print_json<T: serde::Serialize>(v: &T) {
    println!("{}", serde_json::to_string_pretty(v).expect("report types serialize"));
}

fn or_na<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "n/a".to_string(), |x| x.to_string())
}

fn print_summary(s: &CodeSummary) {
    println!("family    {}", s.family);
    println!("n, l      {}, {}", s.n, s.l);
    println!("|C|       2^{}", s.k);
    match s.gray_params() {
        Some(p) => {
            println!("d_Lee     {}", s.d_lee.expect("complete"));
            println!("gray      {p}");
        }
        None => {
            println!("d_Lee     not enumerated (2^{} codewords exceed the guard; rerun with --force-enum)", s.k);
            println!("gray      [{},{},?]", s.gray.0, s.gray.1);
        }
    }
    if let Some(b) = s.projection_bound {
        println!("bound     d_Lee >= {b}");
    }
}

fn construct(path: &PathBuf, json: bool, force: bool) -> Result<(), Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    let gen = Recipe::from_json(&text)?.generator()?;
    let guard = if force { EnumGuard::forced() } else { EnumGuard::default() };
    let s = summarize(&gen, guard)?;
    if json {
        print_json(&s);
    } else {
        print_summary(&s);
    }
    if s.is_complete() {
        Ok(())
    } else {
        Err(Failure::Guard)
    }
}

fn print_verify(r: &VerifyReport) {
    println!(
        "{:<18} {:<10} {:<12} {:<12} {:<8} {:<17} {:<8}",
        "id", "family", "claimed", "computed", "verdict", "table", "oracle"
    );
    for row in &r.rows {
        let claimed = format!("[{}, {}, {}]", row.claimed[0], row.claimed[1], row.claimed[2]);
        let oracle = match row.oracle_agrees {
            Some(true) => "agrees",
            Some(false) => "DIFFERS",
            None => "n/a",
        };
        let verdict = if row.audited { format!("{}*", row.verdict) } else { row.verdict.to_string() };
        println!(
            "{:<18} {:<10} {:<12} {:<12} {:<8} {:<17} {:<8}",
            row.id,
            row.family.to_string(),
            claimed,
            or_na(row.computed),
            verdict,
            row.table_optimality.to_string(),
            oracle
        );
        if let (Some(cl), Some(d)) = (row.claimed_lee, row.d_lee) {
            println!("    Lee distance: claimed {cl}, computed {d}");
        }
        if let Some(cb) = row.claimed_bound {
            println!("    distance bound: claimed {cb}, computed {}", or_na(row.bound));
        }
        for note in &row.notes {
            println!("    note: {note}");
        }
    }
    println!("* audited: reproduced with a documented completion, not required to match");
    println!("all non-audited rows match: {}", if r.all_match { "yes" } else { "no" });
}

fn print_search(r: &SearchReport) {
    println!("candidates {}  feasible {}", r.candidates, r.feasible);
    println!("{:>4} {:>6} {:<14} {:<6} recipe", "k", "d_Lee", "gray", "pareto");
    for row in &r.rows {
        println!(
            "{:>4} {:>6} {:<14} {:<6} {}",
            row.k,
            row.d_lee,
            row.gray.to_string(),
            if row.pareto { "yes" } else { "" },
            row.recipe.to_json()
        );
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Construct { recipe, json, force_enum } => construct(&recipe, json, force_enum),
        Cmd::VerifyPaper { json } => {
            let r = verify_all()?;
            if json {
                print_json(&r);
            } else {
                print_verify(&r);
            }
            if r.all_match {
                Ok(())
            } else {
                Err(Failure::Mismatch)
            }
        }
        Cmd::Search { n, l, family, max_deg, json, workers, max_candidates } => {
            let mut spec = SearchSpec::new(n, l, family, max_deg);
            spec.workers = workers;
            spec.max_candidates = max_candidates;
            let r = search(&spec)?;
            if json {
                print_json(&r);
            } else {
                print_search(&r);
            }
            Ok(())
        }
        Cmd::Classify { n, gen, json } => {
            let elem = gen.parse::<RPoly>()?.reduce(n)?;
            let t = classify_constacyclic(&elem)?;
            if json {
                print_json(&t);
            } else {
                println!("{t}");
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Guard) => ExitCode::from(3),
        Err(Failure::Mismatch) => ExitCode::from(1),
    }
}
