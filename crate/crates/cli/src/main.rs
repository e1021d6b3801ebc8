//! `lrc`: construct, analyze, and verify binary locally repairable codes
//! with availability.
//!
//! Machine-readable payloads (JSON/CSV) go to standard output; diagnostics
//! go to standard error. Exit codes: 0 success, 1 a verification assertion
//! failed, 2 usage or input error.

use clap::{Args, Parser, Subcommand};
use lrc_core::availability::{availability_profile, verify_availability};
use lrc_core::bounds::{find_crossing, sweep, BoundName, BoundParams, SweepVariable};
use lrc_core::code::{weight_enumerator, CodeJson, LinearCode};
use lrc_core::constructions::{
    complete_graph_code, fano_covering_system, graph_code, hamming_code, platonic, polyhedron_code,
    simplex_code, PlatonicSolid, SimpleGraph,
};
use lrc_core::search::{verify_rate_optimal_unique, Rate};
use lrc_core::verification::{run_all, run_criterion, CRITERION_COUNT};
use lrc_core::{Error, Guards};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "lrc",
    version,
    about = "Workbench for binary LRCs with availability"
)]
struct Cli {
    /// Cap the number of worker threads.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code family and print it as JSON.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Check (r,t)-availability of a code read from a JSON file.
    Analyze(AnalyzeArgs),
    /// Evaluate rate bounds: sweep tables as CSV, or a crossing point.
    Bounds(BoundsArgs),
    /// Reproduce the Platonic-solid code table with verified parameters.
    Table1,
    /// Exhaustively enumerate exact covering systems and report the
    /// rate-optimal ones.
    Search(SearchArgs),
    /// Run the verification suite (all criteria, or one).
    Verify {
        /// Criterion number (1-10); all when omitted.
        #[arg(long)]
        criterion: Option<usize>,
    },
}

#[derive(Subcommand)]
enum Family {
    /// One of: tetrahedron, cube, octahedron, dodecahedron, icosahedron.
    Platonic {
        name: String,
        #[command(flatten)]
        opts: ConstructOpts,
    },
    /// Cycle-space code of a graph given as an edge-list file ("u v" lines).
    Graph {
        file: PathBuf,
        #[command(flatten)]
        opts: ConstructOpts,
    },
    /// Cycle-space code of the complete graph K_q.
    Complete {
        q: usize,
        #[command(flatten)]
        opts: ConstructOpts,
    },
    /// The [2^m - 1, m] Simplex code.
    Simplex {
        m: usize,
        #[command(flatten)]
        opts: ConstructOpts,
    },
    /// The [2^m - 1, 2^m - 1 - m] Hamming code.
    Hamming {
        m: usize,
        #[command(flatten)]
        opts: ConstructOpts,
    },
    /// The code whose parity checks are the Fano plane's lines.
    Fano {
        #[command(flatten)]
        opts: ConstructOpts,
    },
}

#[derive(Args)]
struct ConstructOpts {
    /// Append the weight enumerator to the JSON output.
    #[arg(long)]
    with_enumerator: bool,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Code JSON file (as produced by `construct`).
    code_file: PathBuf,
    /// Locality bound r.
    #[arg(long)]
    r: usize,
    /// Availability target t; exit 1 unless every bit is certified.
    #[arg(long, conflicts_with = "profile")]
    t: Option<usize>,
    /// Report the per-bit maximum t at locality r instead.
    #[arg(long)]
    profile: bool,
}

#[derive(Args)]
struct BoundsArgs {
    /// Bound names, comma separated (e.g. thm3_entropy,tbf1).
    #[arg(long, value_delimiter = ',')]
    names: Vec<String>,
    /// Sweep variable: r or t.
    #[arg(long)]
    sweep: String,
    /// Inclusive integer range "a:b".
    #[arg(long)]
    range: String,
    /// Fixed parameters, e.g. --fix r=2 (repeatable; r, t, or n).
    #[arg(long = "fix")]
    fix: Vec<String>,
    /// Print the first parameter where the first bound falls strictly below
    /// the second, instead of the table.
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    crossing: Option<Vec<String>>,
    /// Emit the table as JSON instead of CSV.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SearchArgs {
    n: usize,
    r: usize,
    t: usize,
    /// Expected maximum dual rate as "p/q"; exit 1 on mismatch.
    #[arg(long)]
    expect_rate: Option<String>,
    /// Expected construction every maximizer must match, e.g. "complete:4"
    /// or "fano"; exit 1 on mismatch.
    #[arg(long)]
    expect: Option<String>,
}

/// Exit 1: the computation succeeded but a verification assertion failed.
const EXIT_VERIFICATION_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("lrc: cannot configure {jobs} workers: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let guards = Guards::from_env();
    match run(cli.command, &guards) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("lrc: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(command: Command, guards: &Guards) -> Result<ExitCode, Error> {
    match command {
        Command::Construct { family } => construct(family, guards),
        Command::Analyze(args) => analyze(args, guards),
        Command::Bounds(args) => bounds(args),
        Command::Table1 => table1(guards),
        Command::Search(args) => search(args, guards),
        Command::Verify { criterion } => verify(criterion, guards),
    }
}

fn construct(family: Family, guards: &Guards) -> Result<ExitCode, Error> {
    let (code, opts) = match family {
        Family::Platonic { name, opts } => {
            let solid = PlatonicSolid::from_str(&name)?;
            (polyhedron_code(&platonic(solid)).0, opts)
        }
        Family::Graph { file, opts } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Error::Parse(format!("{}: {e}", file.display())))?;
            (graph_code(&SimpleGraph::parse_edge_list(&text)?), opts)
        }
        Family::Complete { q, opts } => (complete_graph_code(q)?, opts),
        Family::Simplex { m, opts } => (simplex_code(m)?, opts),
        Family::Hamming { m, opts } => (hamming_code(m)?, opts),
        Family::Fano { opts } => (
            LinearCode::from_parity(&fano_covering_system().to_matrix())?,
            opts,
        ),
    };
    let mut payload = serde_json::to_value(code.to_json()).expect("code serializes");
    if opts.with_enumerator {
        let we = weight_enumerator(&code, guards)?;
        payload["weight_enumerator"] = serde_json::json!({
            "counts": we.counts,
            "polynomial": we.polynomial(),
        });
    }
    println!("{}", serde_json::to_string_pretty(&payload).expect("json"));
    Ok(ExitCode::SUCCESS)
}

fn analyze(args: AnalyzeArgs, guards: &Guards) -> Result<ExitCode, Error> {
    let text = std::fs::read_to_string(&args.code_file)
        .map_err(|e| Error::Parse(format!("{}: {e}", args.code_file.display())))?;
    let json: CodeJson =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("code JSON: {e}")))?;
    let code = LinearCode::from_json(&json)?;

    if args.profile {
        let profile = availability_profile(&code, args.r, guards)?;
        let payload = serde_json::json!({
            "n": code.n(),
            "k": code.k(),
            "r": args.r,
            "profile": profile.iter().enumerate().map(|(i, &t)| {
                serde_json::json!({ "bit": i + 1, "max_t": t })
            }).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&payload).expect("json"));
        return Ok(ExitCode::SUCCESS);
    }

    let t = args.t.ok_or(Error::MissingParameter("t"))?;
    let report = verify_availability(&code, args.r, t, guards)?;
    let payload = serde_json::json!({
        "n": code.n(),
        "k": code.k(),
        "r": args.r,
        "t": t,
        "all_available": report.all_available,
        "bits": report.bits.iter().enumerate().map(|(i, cert)| match cert {
            Some(c) => serde_json::json!({
                "bit": i + 1,
                "certified": true,
                "locality": c.locality(),
                "groups": c.groups.iter().map(|g| g.members.clone()).collect::<Vec<_>>(),
            }),
            None => serde_json::json!({ "bit": i + 1, "certified": false }),
        }).collect::<Vec<_>>(),
    });
    println!("{}", serde_json::to_string_pretty(&payload).expect("json"));
    if report.all_available {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!(
            "lrc: ({}, {t})-availability not certified on every bit",
            args.r
        );
        Ok(ExitCode::from(EXIT_VERIFICATION_FAILED))
    }
}

fn bounds(args: BoundsArgs) -> Result<ExitCode, Error> {
    let variable = SweepVariable::from_str(&args.sweep)?;
    let (lo, hi) = args
        .range
        .split_once(':')
        .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
        .ok_or_else(|| Error::Parse(format!("range {:?} is not \"a:b\"", args.range)))?;
    let mut fixed = BoundParams::default();
    for pair in &args.fix {
        let (key, value) = pair
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("--fix {pair:?} is not key=value")))?;
        let value: usize = value
            .parse()
            .map_err(|_| Error::Parse(format!("--fix {pair:?} has a bad value")))?;
        match key {
            "r" => fixed.r = Some(value),
            "t" => fixed.t = Some(value),
            "n" => fixed.n = Some(value),
            other => return Err(Error::UnknownName(other.into())),
        }
    }

    if let Some(pair) = &args.crossing {
        let a = BoundName::from_str(&pair[0])?;
        let b = BoundName::from_str(&pair[1])?;
        match find_crossing(a, b, variable, lo..=hi, &fixed)? {
            Some(param) => println!("{param}"),
            None => println!("none"),
        }
        return Ok(ExitCode::SUCCESS);
    }

    if args.names.is_empty() {
        return Err(Error::MissingParameter("names"));
    }
    let names = args
        .names
        .iter()
        .map(|s| BoundName::from_str(s))
        .collect::<Result<Vec<_>, _>>()?;
    let table = sweep(&names, variable, lo..=hi, &fixed)?;
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&table.to_json()).expect("json")
        );
    } else {
        print!("{}", table.to_csv());
    }
    Ok(ExitCode::SUCCESS)
}

fn table1(guards: &Guards) -> Result<ExitCode, Error> {
    let printed_rows = lrc_core::verification::printed_table_rows();
    let availability: [(PlatonicSolid, usize, usize); 5] = [
        (PlatonicSolid::Tetrahedron, 2, 2),
        (PlatonicSolid::Cube, 2, 2),
        (PlatonicSolid::Octahedron, 3, 2),
        (PlatonicSolid::Dodecahedron, 2, 2),
        (PlatonicSolid::Icosahedron, 4, 2),
    ];
    let mut rows = Vec::new();
    for (solid, r, t) in availability {
        let (code, _) = polyhedron_code(&platonic(solid));
        let verified = verify_availability(&code, r, t, guards)?.all_available;
        let we = weight_enumerator(&code, guards)?;
        let matches: Vec<&str> = printed_rows
            .iter()
            .filter(|(_, pairs)| {
                pairs.len() == we.counts.iter().filter(|&&c| c != 0).count()
                    && pairs.iter().all(|&(w, c)| we.counts.get(w) == Some(&c))
            })
            .map(|(name, _)| *name)
            .collect();
        rows.push(serde_json::json!({
            "solid": solid.name(),
            "n": code.n(),
            "k": code.k(),
            "availability": { "r": r, "t": t, "verified": verified },
            "weight_enumerator": we.polynomial(),
            "matches_printed_row": matches,
        }));
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&serde_json::json!({ "rows": rows })).expect("json")
    );
    Ok(ExitCode::SUCCESS)
}

fn search(args: SearchArgs, guards: &Guards) -> Result<ExitCode, Error> {
    let report = verify_rate_optimal_unique(args.n, args.r, args.t, guards)?;
    println!(
        "{}",
        serde_json::to_string_pretty(&report.to_json()).expect("json")
    );
    let mut ok = true;
    if let Some(expected) = &args.expect_rate {
        let (p, q) = expected
            .split_once('/')
            .and_then(|(p, q)| Some((p.parse().ok()?, q.parse().ok()?)))
            .ok_or_else(|| Error::Parse(format!("--expect-rate {expected:?} is not \"p/q\"")))?;
        let expected_rate = Rate::new(p, q);
        if report.max_dual_rate != Some(expected_rate) {
            eprintln!(
                "lrc: max dual rate {:?} differs from expected {expected}",
                report.max_dual_rate
            );
            ok = false;
        }
    }
    if let Some(expected) = &args.expect {
        let all_match = !report.optima.is_empty()
            && report
                .optima
                .iter()
                .all(|m| m.isomorphic_to.as_deref() == Some(expected.as_str()));
        if !all_match {
            eprintln!("lrc: not every maximizer is isomorphic to {expected}");
            ok = false;
        }
    }
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFICATION_FAILED)
    })
}

fn verify(criterion: Option<usize>, guards: &Guards) -> Result<ExitCode, Error> {
    let results = match criterion {
        Some(id) => {
            if !(1..=CRITERION_COUNT).contains(&id) {
                return Err(Error::InvalidParameter(format!(
                    "criterion {id} out of range 1..={CRITERION_COUNT}"
                )));
            }
            vec![run_criterion(id, guards)]
        }
        None => run_all(guards),
    };
    for result in &results {
        println!("{}", result.summary_line());
        for line in &result.details {
            eprintln!("{line}");
        }
    }
    if results.iter().all(|r| r.passed) {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(EXIT_VERIFICATION_FAILED))
    }
}
