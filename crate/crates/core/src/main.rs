use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use welldom::fixtures::{builtin_fixtures, run_fixture};
use welldom::generate::GeneratorConfig;
use welldom::linalg::ratio_text;
use welldom::oracle::{enumerate_maximal_independent_sets, enumerate_minimal_dominating_sets, DominationNumbers};
use welldom::report::{analyze, AnalysisOptions, AnalysisReport};
use welldom::suite::run_suite;
use welldom::{parse_graph, Budget, Error, Format, Graph, SubspaceBasis};

#[derive(Parser)]
#[command(name = "welldom", version, about = "Well-covered and well-dominated graph analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Graph file, or `-` for standard input.
    file: PathBuf,
    /// Input format; inferred from the extension (`.g6` is graph6) when omitted.
    #[arg(long, value_parser = parse_format)]
    format: Option<Format>,
    /// Vertex limit for enumeration (overrides WELLDOM_BUDGET).
    #[arg(long)]
    budget: Option<usize>,
    /// Emit JSON on standard output.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Full structural, characterization and oracle analysis.
    Analyze(Input),
    /// Basis of the weighted well-covered space.
    Wcw(Input),
    /// Basis of the weighted well-dominated space.
    Wwd(Input),
    /// Exhaustive enumeration results only.
    Oracle(Input),
    /// List the builtin fixtures, or check their expectations with --run.
    Fixtures {
        #[arg(long)]
        run: bool,
        #[arg(long)]
        json: bool,
    },
    /// Oracle-backed property checks on seeded random graphs.
    Proptest {
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated forbidden cycle lengths, e.g. `4,5,6`.
        #[arg(long, value_delimiter = ',')]
        forbid: Vec<usize>,
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn read_graph(input: &Input) -> Result<Graph, Error> {
    let text = if input.file == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Parse { location: "stdin".into(), message: e.to_string() })?;
        s
    } else {
        fs::read_to_string(&input.file).map_err(|e| Error::Parse {
            location: input.file.display().to_string(),
            message: e.to_string(),
        })?
    };
    let format = input.format.unwrap_or_else(|| {
        match input.file.extension().and_then(|e| e.to_str()) {
            Some("g6") | Some("graph6") => Format::Graph6,
            _ => Format::EdgeList,
        }
    });
    parse_graph(&text, format)
}

fn print_json<T: Serialize>(value: &T) {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    let _ = writeln!(io::stdout().lock(), "{text}");
}

fn print_basis(label: &str, basis: &SubspaceBasis) {
    println!("{label}: dimension {}", basis.dim());
    for v in basis.basis() {
        let row: Vec<String> = v.iter().map(ratio_text).collect();
        println!("  [{}]", row.join(", "));
    }
}

fn opt<T: std::fmt::Display>(x: Option<T>) -> String {
    x.map_or_else(|| "n/a".to_string(), |x| x.to_string())
}

fn print_report(r: &AnalysisReport) {
    println!("vertices {}, edges {}, connected {}", r.n, r.edge_count, r.connected);
    let cycles: Vec<String> = r.cycles.iter().map(|(k, c)| format!("C{k}:{}", if *c { "yes" } else { "no" })).collect();
    println!("cycles {}", cycles.join(" "));
    println!("L = {}, L* = {}", r.structure.l, r.structure.lstar);
    println!(
        "well-covered {}, well-dominated {} (from {})",
        opt(r.summary.well_covered),
        opt(r.summary.well_dominated),
        r.summary.source
    );
    println!("dim WCW {}, dim WWD {}", opt(r.summary.wcw_dim), opt(r.summary.wwd_dim));
    for note in &r.characterization.notes {
        println!("note: {note}");
    }
    match (&r.oracle, &r.oracle_skipped) {
        (Some(o), _) => println!(
            "oracle: gamma {}, Gamma {}, i {}, alpha {}",
            o.numbers.gamma, o.numbers.upper_gamma, o.numbers.independent_domination, o.numbers.alpha
        ),
        (None, Some(why)) => println!("oracle skipped: {why}"),
        _ => {}
    }
    println!("cross-checks {}", if r.cross_checks.all_pass() { "pass" } else { "FAIL" });
}

fn space_command(input: &Input, dominating: bool) -> Result<u8, Error> {
    let g = read_graph(input)?;
    let budget = Budget::resolve(input.budget)?;
    let report = analyze(&g, &AnalysisOptions { budget, skip_oracle: false })?;
    let (outcome, oracle) = if dominating {
        (&report.characterization.wwd, report.oracle.as_ref().map(|o| &o.wwd))
    } else {
        (&report.characterization.wcw, report.oracle.as_ref().map(|o| &o.wcw))
    };
    let (source, basis) = match (&outcome.basis, oracle) {
        (Some(b), _) => ("characterization", b),
        (None, Some(b)) => ("oracle", b),
        (None, None) => {
            return Err(Error::Resource {
                what: format!("no applicable characterization and oracle skipped ({})", opt(report.oracle_skipped.clone())),
                limit: budget.max_dominating_vertices,
            })
        }
    };
    let agrees = if dominating { report.cross_checks.wwd_agrees } else { report.cross_checks.wcw_agrees };
    if input.json {
        #[derive(Serialize)]
        struct Out<'a> {
            schema_version: u32,
            space: &'static str,
            source: &'static str,
            agrees_with_oracle: Option<bool>,
            basis: &'a SubspaceBasis,
        }
        print_json(&Out {
            schema_version: welldom::report::SCHEMA_VERSION,
            space: if dominating { "wwd" } else { "wcw" },
            source,
            agrees_with_oracle: agrees,
            basis,
        });
    } else {
        print_basis(if dominating { "WWD" } else { "WCW" }, basis);
        println!("source: {source}");
    }
    Ok(if agrees == Some(false) { 1 } else { 0 })
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Analyze(input) => {
            let g = read_graph(&input)?;
            let budget = Budget::resolve(input.budget)?;
            let report = analyze(&g, &AnalysisOptions { budget, skip_oracle: false })?;
            if input.json {
                print_json(&report);
            } else {
                print_report(&report);
            }
            Ok(if report.cross_checks.all_pass() { 0 } else { 1 })
        }
        Command::Wcw(input) => space_command(&input, false),
        Command::Wwd(input) => space_command(&input, true),
        Command::Oracle(input) => {
            let g = read_graph(&input)?;
            let budget = Budget::resolve(input.budget)?;
            let independent = enumerate_maximal_independent_sets(&g, &budget)?;
            let dominating = enumerate_minimal_dominating_sets(&g, &budget)?;
            let numbers = DominationNumbers::from_families(&independent, &dominating);
            if input.json {
                #[derive(Serialize)]
                struct Out<'a> {
                    schema_version: u32,
                    numbers: DominationNumbers,
                    well_covered: bool,
                    well_dominated: bool,
                    maximal_independent_sets: &'a welldom::oracle::SetFamily,
                    minimal_dominating_sets: &'a welldom::oracle::SetFamily,
                }
                print_json(&Out {
                    schema_version: welldom::report::SCHEMA_VERSION,
                    numbers,
                    well_covered: numbers.well_covered(),
                    well_dominated: numbers.well_dominated(),
                    maximal_independent_sets: &independent,
                    minimal_dominating_sets: &dominating,
                });
            } else {
                println!(
                    "gamma {}, Gamma {}, i {}, alpha {}",
                    numbers.gamma, numbers.upper_gamma, numbers.independent_domination, numbers.alpha
                );
                println!("well-covered {}, well-dominated {}", numbers.well_covered(), numbers.well_dominated());
                println!("{} maximal independent sets, {} minimal dominating sets", independent.len(), dominating.len());
            }
            Ok(0)
        }
        Command::Fixtures { run, json } => {
            let budget = Budget::default();
            let mut failed = 0usize;
            let mut rows = Vec::new();
            for f in builtin_fixtures() {
                let outcomes = if run { run_fixture(&f, &budget)? } else { Vec::new() };
                let bad = outcomes.iter().filter(|o| !o.passed).count();
                failed += bad;
                if !json {
                    if run {
                        println!("{:<16} {:>2} checks  {}", f.name, outcomes.len(), if bad == 0 { "ok" } else { "FAIL" });
                        for o in outcomes.iter().filter(|o| !o.passed) {
                            eprintln!("  {} {:?}: {}", f.name, o.check, o.detail);
                        }
                    } else {
                        println!("{:<16} n={:<3} {}", f.name, f.graph.n(), f.description);
                    }
                }
                rows.push(serde_json::json!({
                    "name": f.name,
                    "description": f.description,
                    "n": f.graph.n(),
                    "graph6": welldom::format::to_graph6(&f.graph),
                    "expected": f.expected,
                    "outcomes": outcomes,
                }));
            }
            if json {
                print_json(&serde_json::json!({ "schema_version": 1, "fixtures": rows }));
            }
            Ok(if failed == 0 { 0 } else { 1 })
        }
        Command::Proptest { count, max_n, seed, forbid, budget, json } => {
            let budget = Budget::resolve(budget)?;
            let cfg = GeneratorConfig::new(max_n, &forbid, seed, count);
            let report = run_suite(cfg, &budget)?;
            if json {
                print_json(&report);
            } else {
                println!(
                    "{} graphs ({} connected): {} equivalence checks, {} basis checks, {} failures",
                    report.graphs,
                    report.connected,
                    report.equivalence_checked,
                    report.bases_checked,
                    report.failures.len()
                );
                for f in &report.failures {
                    eprintln!("  {}: {}", f.graph6, f.property);
                }
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
