//! `ackkit` command-line tool: construct and export the catalog and family
//! graphs, verify the row-space witness property, classify against the
//! necessary conditions, and batch-process directories of graph files.
//!
//! Exit codes are stable: 0 success / witness found, 2 input error,
//! 3 exhaustive search found no witness, 4 search aborted by the size limit.
//! Exit 1 is reserved for internal-consistency failures (the search and the
//! oracle disagreeing).

use ackkit::ack::{
    ack_brute_oracle, ack_witness, AckError, AckStatus, DEFAULT_ORACLE_LIMIT, DEFAULT_SEARCH_LIMIT,
};
use ackkit::constructions::{catalog, satellite, CatalogName, ConstructionResult};
use ackkit::graph::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, Graph};
use ackkit_cli::report::{
    ack_info, base_report, render_human, status_string, to_json, AckInfo, InputInfo, OracleInfo,
    Report, Timings,
};
use clap::{Parser, Subcommand, ValueEnum};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

const EXIT_INTERNAL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_NO_WITNESS: u8 = 3;
const EXIT_ABORTED: u8 = 4;

/// Environment variable overriding the default subset-search limit.
const LIMIT_ENV: &str = "ACKKIT_LIMIT_N";

#[derive(Parser)]
#[command(
    name = "ackkit",
    version,
    about = "Exact adjacency-kernel toolkit and witness search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family graph or a catalog entry and write it to a file.
    Construct {
        /// Family to build: "satellite" or "catalog".
        family: String,
        /// Cycle size for the satellite family (graph order is 2k+1).
        #[arg(long)]
        k: Option<usize>,
        /// Catalog entry name (PRISM6, NUT7, E8, E10, E12, G14, G18, H5, H8).
        #[arg(long)]
        name: Option<String>,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
    /// Run the full verification pipeline on one graph.
    Verify {
        /// A file path or "catalog:NAME".
        target: String,
        /// Additionally run the brute-force oracle and require agreement.
        #[arg(long)]
        oracle: bool,
        /// Subset-search limit (overrides ACKKIT_LIMIT_N and the default).
        #[arg(long)]
        limit_n: Option<usize>,
        /// Emit the JSON report instead of the text rendering.
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the eight necessary conditions on one graph.
    Classify {
        /// A file path or "catalog:NAME".
        target: String,
        #[arg(long)]
        json: bool,
    },
    /// Verify every .g6/.edges file in a directory.
    Batch {
        dir: PathBuf,
        /// Worker threads; never changes any report content.
        #[arg(long, default_value_t = 1)]
        parallel: usize,
        /// Write one JSON report per input into this directory.
        #[arg(long)]
        json_out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edgelist,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Construct {
            family,
            k,
            name,
            out,
            format,
        } => cmd_construct(&family, k, name.as_deref(), out.as_deref(), format),
        Command::Verify {
            target,
            oracle,
            limit_n,
            json,
        } => cmd_verify(&target, oracle, limit_n, json),
        Command::Classify { target, json } => cmd_classify(&target, json),
        Command::Batch {
            dir,
            parallel,
            json_out,
        } => cmd_batch(&dir, parallel, json_out.as_deref()),
    };
    ExitCode::from(code)
}

fn input_error(msg: impl std::fmt::Display) -> u8 {
    eprintln!("error: {msg}");
    EXIT_INPUT
}

/// Resolves "catalog:NAME" or a file path into a graph plus input metadata.
fn load_target(target: &str) -> Result<(Graph, InputInfo), String> {
    if let Some(name) = target.strip_prefix("catalog:") {
        let name: CatalogName = name.parse()?;
        return Ok((
            catalog(name).graph,
            InputInfo {
                kind: "catalog".into(),
                name: name.to_string(),
            },
        ));
    }
    let path = Path::new(target);
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let graph = parse_file(path, &text)?;
    Ok((
        graph,
        InputInfo {
            kind: "file".into(),
            name: target.to_string(),
        },
    ))
}

fn parse_file(path: &Path, text: &str) -> Result<Graph, String> {
    match path.extension().and_then(|e| e.to_str()) {
        Some("g6") => parse_graph6(text).map_err(|e| format!("{}: {e}", path.display())),
        Some("edges") => parse_edge_list(text).map_err(|e| format!("{}: {e}", path.display())),
        _ => Err(format!(
            "{}: unknown extension (expected .g6 or .edges)",
            path.display()
        )),
    }
}

fn search_limit(flag: Option<usize>) -> Result<usize, String> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var(LIMIT_ENV) {
        Ok(value) => value
            .parse()
            .map_err(|_| format!("{LIMIT_ENV} must be a nonnegative integer, got `{value}`")),
        Err(_) => Ok(DEFAULT_SEARCH_LIMIT),
    }
}

fn cmd_construct(
    family: &str,
    k: Option<usize>,
    name: Option<&str>,
    out: Option<&Path>,
    format: GraphFormat,
) -> u8 {
    let (graph, summary) = match family {
        "satellite" => {
            let Some(k) = k else {
                return input_error("construct satellite requires --k");
            };
            match satellite(k) {
                Ok(result) => {
                    let summary = construction_summary(&result, &format!("satellite k={k}"));
                    (result.graph, summary)
                }
                Err(e) => return input_error(e),
            }
        }
        "catalog" => {
            let Some(name) = name else {
                return input_error("construct catalog requires --name");
            };
            let parsed: CatalogName = match name.parse() {
                Ok(p) => p,
                Err(e) => return input_error(e),
            };
            let entry = catalog(parsed);
            let summary = format!(
                "catalog {}: n={} edges={} nullity={} ({} certified kernel vector(s))\n{}",
                entry.name,
                entry.graph.n(),
                entry.graph.edge_count(),
                entry.expected_nullity,
                entry.expected_kernel.len(),
                entry.notes
            );
            (entry.graph, summary)
        }
        other => return input_error(format!("unknown family `{other}` (satellite or catalog)")),
    };

    let text = match format {
        GraphFormat::Graph6 => {
            let mut s = emit_graph6(&graph);
            s.push('\n');
            s
        }
        GraphFormat::Edgelist => emit_edge_list(&graph),
    };
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                return input_error(format!("{}: {e}", path.display()));
            }
            println!("wrote {}", path.display());
            println!("{summary}");
        }
        None => {
            print!("{text}");
            eprintln!("{summary}");
        }
    }
    0
}

fn construction_summary(result: &ConstructionResult, label: &str) -> String {
    let checks: Vec<String> = result
        .hypothesis_report
        .checks()
        .iter()
        .map(|(name, ok)| format!("{name}={}", if *ok { "yes" } else { "no" }))
        .collect();
    format!(
        "{label}: n={} edges={} certified_kernel_vectors={} checks[{}]",
        result.graph.n(),
        result.graph.edge_count(),
        result.certified_kernel_vectors.len(),
        checks.join(" ")
    )
}

/// Builds the full verification report. `parse_ms` carries the caller's
/// input-decoding time; `None` suppresses timings entirely so batch output
/// stays byte-identical across runs and worker counts.
fn verify_report(
    graph: &Graph,
    input: InputInfo,
    limit_n: usize,
    with_oracle: bool,
    parse_ms: Option<u64>,
) -> Result<Report, String> {
    let started = Instant::now();
    let mut report = base_report(input, graph);
    let classify_ms = started.elapsed().as_millis() as u64;

    let search_start = Instant::now();
    let ack = match ack_witness(graph, limit_n) {
        Ok(r) => r,
        Err(AckError::EdgelessGraph) => {
            return Err("the conjecture requires at least one edge".into())
        }
        Err(e) => return Err(e.to_string()),
    };
    if with_oracle {
        let oracle = ack_brute_oracle(graph, limit_n.min(DEFAULT_ORACLE_LIMIT))
            .expect("edgeless inputs were rejected above");
        let agrees = match oracle.status {
            AckStatus::AbortedTooLarge => None,
            _ => Some(oracle.status == ack.status && oracle.witness == ack.witness),
        };
        report.oracle = Some(OracleInfo {
            status: status_string(oracle.status),
            witness: oracle.witness.as_ref().map(|s| s.iter().copied().collect()),
            agrees,
        });
    }
    let search_ms = search_start.elapsed().as_millis() as u64;
    report.ack = Some(ack_info(&ack));
    if let Some(parse_ms) = parse_ms {
        report.timings = Some(Timings {
            parse_ms,
            classify_ms,
            search_ms,
            total_ms: parse_ms + started.elapsed().as_millis() as u64,
        });
    }
    Ok(report)
}

fn ack_exit_code(ack: &AckInfo) -> u8 {
    match ack.status.as_str() {
        "WITNESS_FOUND" => 0,
        "NO_WITNESS" => EXIT_NO_WITNESS,
        _ => EXIT_ABORTED,
    }
}

fn cmd_verify(target: &str, oracle: bool, limit_flag: Option<usize>, json: bool) -> u8 {
    let limit_n = match search_limit(limit_flag) {
        Ok(n) => n,
        Err(e) => return input_error(e),
    };
    let parse_start = Instant::now();
    let (graph, input) = match load_target(target) {
        Ok(x) => x,
        Err(e) => return input_error(e),
    };
    let parse_ms = parse_start.elapsed().as_millis() as u64;
    let report = match verify_report(&graph, input, limit_n, oracle, Some(parse_ms)) {
        Ok(r) => r,
        Err(e) => return input_error(e),
    };
    if json {
        println!("{}", to_json(&report));
    } else {
        print!("{}", render_human(&report));
    }
    if let Some(o) = &report.oracle {
        if o.agrees == Some(false) {
            eprintln!("error: witness search and brute oracle disagree — this is a bug");
            return EXIT_INTERNAL;
        }
    }
    ack_exit_code(report.ack.as_ref().expect("verify always runs the search"))
}

fn cmd_classify(target: &str, json: bool) -> u8 {
    let (graph, input) = match load_target(target) {
        Ok(x) => x,
        Err(e) => return input_error(e),
    };
    let report = base_report(input, &graph);
    if json {
        println!("{}", to_json(&report));
    } else {
        print!("{}", render_human(&report));
    }
    0
}

fn cmd_batch(dir: &Path, parallel: usize, json_out: Option<&Path>) -> u8 {
    let entries = match std::fs::read_dir(dir) {
        Ok(rd) => rd,
        Err(e) => return input_error(format!("{}: {e}", dir.display())),
    };
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            matches!(
                p.extension().and_then(|e| e.to_str()),
                Some("g6") | Some("edges")
            )
        })
        .collect();
    files.sort();
    if files.is_empty() {
        return input_error(format!("{}: no .g6 or .edges files", dir.display()));
    }
    if parallel == 0 {
        return input_error("--parallel must be at least 1");
    }
    let limit_n = match search_limit(None) {
        Ok(n) => n,
        Err(e) => return input_error(e),
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallel)
        .build()
        .expect("worker pool construction cannot fail");
    let results: Vec<Result<Report, String>> = pool.install(|| {
        use rayon::prelude::*;
        files
            .par_iter()
            .map(|path| {
                let text = std::fs::read_to_string(path).map_err(|e| format!("{}", e))?;
                let graph = parse_file(path, &text)?;
                let input = InputInfo {
                    kind: "file".into(),
                    name: path
                        .file_name()
                        .map(|f| f.to_string_lossy().into_owned())
                        .unwrap_or_default(),
                };
                // No timings: batch output must be byte-identical across runs.
                verify_report(&graph, input, limit_n, false, None)
            })
            .collect()
    });

    if let Some(out_dir) = json_out {
        if let Err(e) = std::fs::create_dir_all(out_dir) {
            return input_error(format!("{}: {e}", out_dir.display()));
        }
        for (path, result) in files.iter().zip(&results) {
            if let Ok(report) = result {
                let file_name = format!(
                    "{}.json",
                    path.file_name()
                        .map(|f| f.to_string_lossy())
                        .unwrap_or_default()
                );
                if let Err(e) = std::fs::write(out_dir.join(&file_name), to_json(report)) {
                    return input_error(format!("{file_name}: {e}"));
                }
            }
        }
    }

    let mut failures = 0usize;
    println!("{:<24} {:<18} {:<16} witness", "file", "status", "n/edges");
    for (path, result) in files.iter().zip(&results) {
        let name = path
            .file_name()
            .map(|f| f.to_string_lossy())
            .unwrap_or_default();
        match result {
            Ok(report) => {
                let ack = report.ack.as_ref().expect("batch reports carry the search");
                let witness = ack
                    .witness
                    .as_ref()
                    .map(|w| format!("{w:?}"))
                    .unwrap_or_else(|| "-".into());
                println!(
                    "{:<24} {:<18} {:<16} {}",
                    name,
                    ack.status,
                    format!("{}/{}", report.graph_summary.n, report.graph_summary.edges),
                    witness
                );
            }
            Err(e) => {
                failures += 1;
                println!("{:<24} {:<18} {:<16} -", name, "ERROR", "-");
                eprintln!("{name}: {e}");
            }
        }
    }
    println!(
        "{} file(s), {} ok, {} failed",
        files.len(),
        files.len() - failures,
        failures
    );
    0
}
