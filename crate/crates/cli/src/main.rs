use clap::{Parser, Subcommand, ValueEnum};
use igt_core::catalog::{
    default_negative_corpus, match_family, parse_corpus_json, verify_theorem,
};
use igt_core::igraph::build_intersection_graph;
use igt_core::lattice::enumerate_subgroups;
use igt_core::{find_clique, find_complete_bipartite, Error, FiniteGroup, Limits};
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

/// Build finite groups, enumerate their subgroup lattices, export
/// intersection graphs, and hunt for complete bipartite or complete
/// subgraphs.
#[derive(Parser)]
#[command(name = "igt", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Largest group order that may be built.
    #[arg(long, global = true, default_value_t = 5000)]
    order_bound: usize,

    /// Largest subgroup count a lattice enumeration may produce.
    #[arg(long, global = true, default_value_t = 20000)]
    subgroup_bound: usize,

    /// Largest order accepted by isomorphism matching.
    #[arg(long, global = true, default_value_t = 512)]
    iso_bound: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Build a group and emit its multiplication table as JSON.
    Build {
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print per-order subgroup counts (or the full lattice as JSON).
    Lattice {
        spec: String,
        #[arg(long, value_enum, default_value_t = LatticeFormat::Text)]
        format: LatticeFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export the intersection graph.
    Graph {
        spec: String,
        #[arg(long, value_enum)]
        format: GraphFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search the intersection graph for a pattern such as K3,3 or K5.
    Check {
        spec: String,
        /// K3,3 | K5 | K<k> | K<m>,<n>
        #[arg(long)]
        pattern: String,
    },
    /// Classify every catalog instance up to an order bound and run the
    /// corpus of groups expected to contain K3,3.
    Verify {
        #[arg(long, default_value_t = 100)]
        max_order: u64,
        /// JSON file of corpus entries replacing the built-in corpus.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Worker threads for independent corpus entries.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Also run the two instances beyond the default order window
        /// (orders 136 and 2601).
        #[arg(long)]
        extended: bool,
        /// Write the versioned JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Match a group against the catalog families by isomorphism.
    Match { spec: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum LatticeFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

const EXIT_MISMATCH: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_GUARD: u8 = 3;

enum CliError {
    Core(Error),
    File(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = Limits {
        max_group_order: cli.order_bound,
        max_subgroups: cli.subgroup_bound,
        max_iso_order: cli.iso_bound,
    };
    match run(cli.command, &limits) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Core(e)) => {
            eprintln!("error: {e}");
            if e.is_resource_guard() {
                ExitCode::from(EXIT_GUARD)
            } else {
                ExitCode::from(EXIT_INPUT)
            }
        }
        Err(CliError::File(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(command: Command, limits: &Limits) -> Result<u8, CliError> {
    match command {
        Command::Build { spec, out } => {
            let group = build_group(&spec, limits)?;
            emit(out, &group_json(&group))?;
            Ok(0)
        }
        Command::Lattice { spec, format, out } => {
            let group = build_group(&spec, limits)?;
            let lattice = enumerate_subgroups(group, limits)?;
            let doc = match format {
                LatticeFormat::Text => lattice.export_text(),
                LatticeFormat::Json => lattice.export_json(),
            };
            emit(out, &doc)?;
            Ok(0)
        }
        Command::Graph { spec, format, out } => {
            let group = build_group(&spec, limits)?;
            let lattice = enumerate_subgroups(group, limits)?;
            let graph = build_intersection_graph(&lattice);
            let doc = match format {
                GraphFormat::Dot => graph.export_dot(),
                GraphFormat::Json => graph.export_json(),
            };
            emit(out, &doc)?;
            Ok(0)
        }
        Command::Check { spec, pattern } => {
            let (m, n) = parse_pattern(&pattern)?;
            let group = build_group(&spec, limits)?;
            let lattice = enumerate_subgroups(group, limits)?;
            let graph = build_intersection_graph(&lattice);
            let witness = match n {
                Some(n) => find_complete_bipartite(&graph, m, n),
                None => find_clique(&graph, m),
            };
            match witness {
                Some(w) => {
                    println!("{}: {} found", spec, w.pattern());
                    println!("{}", w.to_json());
                }
                None => {
                    let name = match n {
                        Some(n) => format!("K{m},{n}"),
                        None => format!("K{m}"),
                    };
                    println!("{spec}: no {name} subgraph");
                }
            }
            Ok(0)
        }
        Command::Verify {
            max_order,
            corpus,
            jobs,
            extended,
            report,
        } => {
            let corpus_entries = match corpus {
                Some(path) => {
                    let text = fs::read_to_string(&path)
                        .map_err(|e| CliError::File(format!("{}: {e}", path.display())))?;
                    parse_corpus_json(&text)?
                }
                None => default_negative_corpus(),
            };
            let report_doc = verify_theorem(max_order, &corpus_entries, extended, jobs, limits);
            print!("{}", report_doc.summary());
            if let Some(path) = report {
                fs::write(&path, report_doc.to_json())
                    .map_err(|e| CliError::File(format!("{}: {e}", path.display())))?;
            }
            Ok(if report_doc.pass {
                0
            } else if report_doc.has_guard_errors() {
                EXIT_GUARD
            } else {
                EXIT_MISMATCH
            })
        }
        Command::Match { spec } => {
            let group = build_group(&spec, limits)?;
            match match_family(&group, limits)? {
                Some(item) => println!("{spec}: item {item}"),
                None => println!("{spec}: none"),
            }
            Ok(0)
        }
    }
}

fn build_group(spec: &str, limits: &Limits) -> Result<FiniteGroup, Error> {
    igt_core::spec::parse(spec)?.build(limits)
}

/// `K3,3`, `K5`, `K<k>`, or `K<m>,<n>`; bipartite sides are normalized so the
/// smaller side comes first.
fn parse_pattern(text: &str) -> Result<(usize, Option<usize>), Error> {
    let bad = || Error::InvalidParameter(format!("pattern {text:?} is not K<k> or K<m>,<n>"));
    let rest = text.trim().strip_prefix('K').ok_or_else(bad)?;
    let parts: Vec<&str> = rest.split(',').collect();
    let parse_part = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    match parts.as_slice() {
        [k] => {
            let k = parse_part(k)?;
            if k == 0 {
                return Err(bad());
            }
            Ok((k, None))
        }
        [m, n] => {
            let (m, n) = (parse_part(m)?, parse_part(n)?);
            if m == 0 || n == 0 {
                return Err(bad());
            }
            Ok((m.min(n), Some(m.max(n))))
        }
        _ => Err(bad()),
    }
}

fn group_json(group: &FiniteGroup) -> String {
    let order = group.order();
    let mul: Vec<Vec<usize>> = (0..order)
        .map(|a| (0..order).map(|b| group.mul(a, b)).collect())
        .collect();
    let inv: Vec<usize> = (0..order).map(|x| group.inv(x)).collect();
    let doc = serde_json::json!({
        "spec": group.spec_text(),
        "order": order,
        "identity": 0,
        "labels": group.labels(),
        "mul": mul,
        "inv": inv,
    });
    serde_json::to_string_pretty(&doc).expect("group document serializes")
}

fn emit(out: Option<PathBuf>, doc: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(&path, doc)
            .map_err(|e| CliError::File(format!("{}: {e}", path.display()))),
        None => {
            println!("{doc}");
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_grammar() {
        assert_eq!(parse_pattern("K3,3").unwrap(), (3, Some(3)));
        assert_eq!(parse_pattern("K5").unwrap(), (5, None));
        assert_eq!(parse_pattern("K2,4").unwrap(), (2, Some(4)));
        assert_eq!(parse_pattern("K4,2").unwrap(), (2, Some(4)));
        assert!(parse_pattern("Q5").is_err());
        assert!(parse_pattern("K0").is_err());
        assert!(parse_pattern("K1,2,3").is_err());
    }
}
