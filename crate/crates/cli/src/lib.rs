//! The `cocomp` command-line tool.
//!
//! [`run`] parses arguments and writes data to `out`, diagnostics to `err`.
//! Exit codes: 0 success, 1 usage or input error, 2 failed precondition
//! (with a witness where one exists), 3 internal consistency error.

pub mod bench;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path as FsPath, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use cocomp_core::format::{
    format_cover, format_ordering, format_path, parse_graph, parse_ordering, parse_sequence, write_graph,
};
use cocomp_core::generators::{generate, Family, GenSpec};
use cocomp_core::graph::check_path;
use cocomp_core::longest_path::{longest_path, DpOptions, DEFAULT_MAX_N, MAX_N_ENV};
use cocomp_core::oracle::{brute_is_maximal_path, brute_longest_path, brute_min_path_cover, OracleLimits};
use cocomp_core::ordering::{find_bad_triple, find_i_violation, find_umbrella};
use cocomp_core::search::{ldfs, ldfs_plus, min_path_cover, rmn};
use cocomp_core::{Error, Graph, Path, PathCover};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_PRECONDITION: u8 = 2;
pub const EXIT_INTERNAL: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "cocomp", version, about = "Longest paths and path covers on cocomparability graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a random instance and its certifying ordering.
    Gen {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out_graph: PathBuf,
        #[arg(long)]
        out_ordering: PathBuf,
    },
    /// Check an ordering against a characterization; prints a witness on failure.
    CheckOrdering {
        #[arg(long, value_enum)]
        kind: OrderingKind,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        ordering: PathBuf,
    },
    /// Generic LDFS from a start vertex (connected graphs only).
    Ldfs {
        #[arg(long)]
        graph: PathBuf,
        /// Vertex label.
        #[arg(long)]
        start: String,
    },
    /// LDFS with ties broken rightmost in `--pi`.
    LdfsPlus {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        pi: PathBuf,
    },
    /// Rightmost-neighbor sweep: prints the ordering, then one path per line.
    Rmn {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        sigma: PathBuf,
    },
    MinPathCover {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        pi: PathBuf,
    },
    LongestPath {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        pi: PathBuf,
        /// Skip the umbrella-free and LDFS verification of the orderings.
        #[arg(long)]
        skip_checks: bool,
        /// Write `position,vertex,length` rows for every end vertex of G.
        #[arg(long, value_name = "FILE")]
        emit_table: Option<PathBuf>,
        /// Size guard for the table; defaults to $COCOMP_DP_MAX_N or 400.
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Brute-force reference answers for small graphs.
    Oracle {
        #[arg(value_enum)]
        query: OracleQuery,
        #[arg(long)]
        graph: PathBuf,
        /// Path to test, required for `maximal`.
        #[arg(long)]
        path: Option<PathBuf>,
    },
    /// Time the table over generated instances and print CSV records.
    Bench {
        #[arg(long, default_value = "cocomparability")]
        family: Family,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        /// Number of seeds per size.
        #[arg(long)]
        seeds: u64,
        #[arg(long, default_value_t = 0)]
        base_seed: u64,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Verify orderings inside the timed region.
        #[arg(long)]
        checks: bool,
        /// Run instances on a worker pool.
        #[arg(long)]
        parallel: bool,
        #[arg(long)]
        max_n: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OrderingKind {
    Interval,
    Umbrella,
    Ldfs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OracleQuery {
    Longest,
    Cover,
    Maximal,
}

/// A failure carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn internal(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INTERNAL,
            message: message.into(),
        }
    }

    /// Classifies a core error; witnesses are printed with the graph's labels.
    pub fn from_core(e: Error, g: Option<&Graph>) -> Self {
        let code = match e {
            Error::Precondition(_) | Error::Disconnected => EXIT_PRECONDITION,
            Error::Internal(_) => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        };
        let message = match (&e, g) {
            (Error::Precondition(w), Some(g)) => format!("precondition failed: {}", w.describe(g)),
            _ => e.to_string(),
        };
        Failure { code, message }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::from_core(e, None)
    }
}

type CliResult<T = ()> = Result<T, Failure>;

/// Entry point shared by the binary and the tests.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{text}");
            return EXIT_OK;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn read(path: &FsPath) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &FsPath, text: &str) -> CliResult {
    fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load_graph(path: &FsPath) -> CliResult<Graph> {
    parse_graph(&read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load_ordering(g: &Graph, path: &FsPath) -> CliResult<cocomp_core::VertexOrdering> {
    parse_ordering(g, &read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, text: &str) -> CliResult {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::usage(format!("writing output: {e}")))
}

fn verified_path(g: &Graph, p: &Path) -> CliResult {
    check_path(g, p.vertices()).map_err(|v| Failure::internal(format!("refusing to print an invalid path: {v}")))
}

fn verified_cover(g: &Graph, c: &PathCover) -> CliResult {
    c.check(g)
        .map_err(|v| Failure::internal(format!("refusing to print an invalid cover: {v}")))
}

/// `--max-n`, else the environment override, else the default.
fn resolve_max_n(flag: Option<usize>) -> CliResult<usize> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var(MAX_N_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("{MAX_N_ENV}={v} is not a vertex count"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> CliResult {
    match cmd {
        Command::Gen {
            family,
            n,
            p,
            seed,
            out_graph,
            out_ordering,
        } => {
            let (g, o) = generate(&GenSpec::new(family, n, p, seed))?;
            write_file(&out_graph, &write_graph(&g))?;
            write_file(&out_ordering, &format!("{}\n", format_ordering(&g, &o)))?;
            emit(out, &format!("n {} m {}\n", g.n(), g.edge_count()))
        }
        Command::CheckOrdering { kind, graph, ordering } => {
            let g = load_graph(&graph)?;
            let o = load_ordering(&g, &ordering)?;
            let found = match kind {
                OrderingKind::Interval => find_i_violation(&g, &o)?,
                OrderingKind::Umbrella => find_umbrella(&g, &o)?,
                OrderingKind::Ldfs => find_bad_triple(&g, &o)?,
            };
            match found {
                None => emit(out, "ok\n"),
                Some(w) => {
                    emit(out, &format!("violation {}\n", w.describe(&g)))?;
                    Err(Failure {
                        code: EXIT_PRECONDITION,
                        message: "ordering fails the check".into(),
                    })
                }
            }
        }
        Command::Ldfs { graph, start } => {
            let g = load_graph(&graph)?;
            let s = g
                .vertex_by_label(&start)
                .ok_or_else(|| Failure::usage(format!("unknown vertex label `{start}`")))?;
            let sigma = ldfs(&g, s).map_err(|e| Failure::from_core(e, Some(&g)))?;
            emit(out, &format!("{}\n", format_ordering(&g, &sigma)))
        }
        Command::LdfsPlus { graph, pi } => {
            let g = load_graph(&graph)?;
            let pi = load_ordering(&g, &pi)?;
            let sigma = ldfs_plus(&g, &pi)?;
            emit(out, &format!("{}\n", format_ordering(&g, &sigma)))
        }
        Command::Rmn { graph, sigma } => {
            let g = load_graph(&graph)?;
            let sigma = load_ordering(&g, &sigma)?;
            let r = rmn(&g, &sigma)?;
            verified_cover(&g, &r.cover)?;
            emit(out, &format!("{}\n{}", format_ordering(&g, &r.ordering), format_cover(&g, &r.cover)))
        }
        Command::MinPathCover { graph, pi } => {
            let g = load_graph(&graph)?;
            let pi = load_ordering(&g, &pi)?;
            let cover = min_path_cover(&g, &pi).map_err(|e| Failure::from_core(e, Some(&g)))?;
            verified_cover(&g, &cover)?;
            emit(out, &format!("{}paths {}\n", format_cover(&g, &cover), cover.len()))
        }
        Command::LongestPath {
            graph,
            pi,
            skip_checks,
            emit_table,
            max_n,
        } => {
            let g = load_graph(&graph)?;
            let pi = load_ordering(&g, &pi)?;
            let opts = DpOptions {
                verify: !skip_checks,
                max_n: resolve_max_n(max_n)?,
            };
            let r = longest_path(&g, &pi, &opts).map_err(|e| Failure::from_core(e, Some(&g)))?;
            verified_path(&g, &r.path)?;
            if let Some(file) = emit_table {
                let mut csv = String::from("position,vertex,length\n");
                for (p, len) in r.table.final_lengths().into_iter().enumerate() {
                    let v = r.sigma.vertex_at(p);
                    if len > 0 {
                        csv.push_str(&format!("{},{},{len}\n", p + 1, g.label(v)));
                    }
                }
                write_file(&file, &csv)?;
            }
            emit(out, &format!("{}\nlength {}\n", format_path(&g, &r.path), r.path.len()))
        }
        Command::Oracle { query, graph, path } => {
            let g = load_graph(&graph)?;
            let limits = OracleLimits::default();
            match query {
                OracleQuery::Longest => {
                    let p = brute_longest_path(&g, &limits)?;
                    verified_path(&g, &p)?;
                    emit(out, &format!("{}\nlength {}\n", format_path(&g, &p), p.len()))
                }
                OracleQuery::Cover => {
                    let c = brute_min_path_cover(&g, &limits)?;
                    verified_cover(&g, &c)?;
                    emit(out, &format!("{}paths {}\n", format_cover(&g, &c), c.len()))
                }
                OracleQuery::Maximal => {
                    let file = path.ok_or_else(|| Failure::usage("`oracle maximal` needs --path"))?;
                    let seq = parse_sequence(&g, &read(&file)?)?;
                    if let Err(v) = check_path(&g, &seq) {
                        return Err(Failure::usage(format!("{}: not a path: {v}", file.display())));
                    }
                    let yes = brute_is_maximal_path(&g, &seq, &limits)?;
                    emit(out, if yes { "maximal\n" } else { "not maximal\n" })
                }
            }
        }
        Command::Bench {
            family,
            sizes,
            seeds,
            base_seed,
            p,
            checks,
            parallel,
            max_n,
        } => {
            let config = bench::BenchConfig {
                family,
                sizes,
                seeds: base_seed..base_seed.saturating_add(seeds),
                p,
                checks,
                parallel,
                max_n: resolve_max_n(max_n)?,
            };
            let records = bench::run_bench(&config)?;
            let mut text = bench::to_csv(&records).map_err(|e| Failure::internal(e.to_string()))?;
            for line in bench::summary(&records) {
                text.push_str(&format!("# {line}\n"));
            }
            emit(out, &text)
        }
    }
}
