//! The `ordmotif` command line.
//!
//! Exit codes: 0 success, 1 negative verdict or nothing found, 2 usage, input
//! or parse error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use ordmotif::io::{export_dot, parse_context, parse_map, render_report, write_csv, write_cxt};
use ordmotif::motif::{basic_meaning, with_thread_limit};
use ordmotif::reductions::{reduce_isi, reduce_si};
use ordmotif::{
    census, enumerate_crown_motifs, enumerate_motifs, is_full_scale_measure, is_local_scale_measure, maximal_motifs,
    CensusOptions, EmptyExtent, FormalContext, ObjectSet, ScaleFamily, SimpleGraph,
};

pub const THREADS_VAR: &str = "ORDMOTIF_THREADS";

#[derive(Parser, Debug)]
#[command(name = "ordmotif", version, about = "Find ordinal motifs in formal contexts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List all extents in lectic order
    Extents { file: PathBuf },
    /// Print the dual context (objects and attributes swapped)
    Dual {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Cxt)]
        format: Format,
    },
    /// Check whether a map is a (full) scale-measure
    Verify {
        context: PathBuf,
        scale: PathBuf,
        /// JSON file `{ "map": { "<object>": "<scale object>" } }`
        #[arg(long)]
        map: PathBuf,
        /// `lenient` counts ∅ as an extent on both sides
        #[arg(long, default_value = "strict")]
        empty_extent: EmptyExtent,
    },
    /// List the motifs of one scale family
    Find {
        #[arg(long)]
        family: ScaleFamily,
        #[arg(long)]
        min_size: Option<usize>,
        #[arg(long, default_value = "lenient")]
        empty_extent: EmptyExtent,
        /// Only motifs not contained in a larger one
        #[arg(long)]
        maximal: bool,
        file: PathBuf,
    },
    /// Motif census over all five scale families
    Report {
        /// Run on the dual context
        #[arg(long)]
        dual: bool,
        /// Minimum domain size for every family (crown stays at least 3)
        #[arg(long)]
        min_size: Option<usize>,
        #[arg(long, default_value = "lenient")]
        empty_extent: EmptyExtent,
        #[arg(long, value_enum, default_value_t = ReportFormat::Markdown)]
        format: ReportFormat,
        file: PathBuf,
    },
    /// Encode a graph as a context
    Reduce {
        #[arg(long, value_enum)]
        mode: Mode,
        graph: PathBuf,
    },
    /// Hasse diagram of the extents in DOT
    Dot {
        /// Comma-separated object labels to set in bold
        #[arg(long, value_delimiter = ',')]
        highlight: Vec<String>,
        file: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Cxt,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Markdown,
    Tsv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Si,
    Isi,
}

/// Failure that maps to exit code 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

/// Runs the CLI on stdout/stderr and returns the exit code.
pub fn cli_main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI with explicit output streams.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let threads = match std::env::var(THREADS_VAR) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) => n,
            Err(_) => {
                let _ = writeln!(err, "error: {THREADS_VAR} must be a non-negative integer, got `{v}`");
                return 2;
            }
        },
        Err(_) => 0,
    };
    match execute(cli.command, threads) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(Failure(message)) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load_context(path: &Path) -> Result<FormalContext, Failure> {
    parse_context(&read(path)?).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn set_label(k: &FormalContext, set: &ObjectSet) -> String {
    let names: Vec<&str> = set.iter().map(|g| k.objects()[g].as_str()).collect();
    format!("{{{}}}", names.join(", "))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn execute(command: Command, threads: usize) -> Result<(String, i32), Failure> {
    let mut out = String::new();
    match command {
        Command::Extents { file } => {
            let k = load_context(&file)?;
            for extent in &k.all_extents() {
                let _ = writeln!(out, "{}", set_label(&k, extent));
            }
            Ok((out, 0))
        }
        Command::Dual { file, format } => {
            let dual = load_context(&file)?.dual();
            let text = match format {
                Format::Cxt => write_cxt(&dual),
                Format::Csv => write_csv(&dual),
            };
            Ok((text, 0))
        }
        Command::Verify {
            context,
            scale,
            map,
            empty_extent,
        } => {
            let mut k = load_context(&context)?;
            let mut s = load_context(&scale)?;
            let sigma = parse_map(&read(&map)?, &k, &s).map_err(|e| Failure(format!("{}: {e}", map.display())))?;
            if empty_extent == EmptyExtent::Lenient {
                k = k.with_empty_attribute();
                s = s.with_empty_attribute();
            }
            let verdict = if sigma.is_total() {
                is_full_scale_measure(&k, &s, &sigma)?
            } else {
                let _ = writeln!(out, "domain: {}", set_label(&k, &sigma.domain()));
                is_local_scale_measure(&k, &s, &sigma, true)?
            };
            let _ = writeln!(out, "scale-measure: {}", yes_no(verdict.is_scale_measure));
            let _ = writeln!(out, "full scale-measure: {}", yes_no(verdict.is_full));
            let _ = writeln!(out, "surjective: {}", yes_no(verdict.is_surjective));
            if let Some(w) = &verdict.witness {
                let _ = writeln!(out, "witness: {}", set_label(&k, w));
            }
            Ok((out, if verdict.is_scale_measure { 0 } else { 1 }))
        }
        Command::Find {
            family,
            min_size,
            empty_extent,
            maximal,
            file,
        } => {
            let k = load_context(&file)?;
            let defaults = CensusOptions::default();
            let min = min_size.unwrap_or(defaults.min_size_of(family));
            let mut motifs = with_thread_limit(threads, || {
                if family == ScaleFamily::Crown {
                    enumerate_crown_motifs(&k, min, empty_extent)
                } else {
                    enumerate_motifs(&k, family, min, empty_extent)
                }
            })?;
            if maximal {
                motifs = maximal_motifs(&motifs);
            }
            for motif in &motifs {
                let images: Vec<String> = motif
                    .domain
                    .iter()
                    .map(|g| format!("{}→{}", k.objects()[g], motif.map.get(g).map_or(0, |t| t + 1)))
                    .collect();
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}",
                    set_label(&k, &motif.domain),
                    images.join(" "),
                    basic_meaning(&k, motif)
                );
            }
            Ok((out, if motifs.is_empty() { 1 } else { 0 }))
        }
        Command::Report {
            dual,
            min_size,
            empty_extent,
            format,
            file,
        } => {
            let mut k = load_context(&file)?;
            if dual {
                k = k.dual();
            }
            let mut opts = CensusOptions {
                empty_extent,
                threads,
                ..CensusOptions::default()
            };
            if let Some(min) = min_size {
                opts = opts.with_min_size(min);
            }
            let result = census(&k, &opts)?;
            let doc = render_report(&k, &result, &opts);
            let text = match format {
                ReportFormat::Markdown => doc.markdown,
                ReportFormat::Tsv => doc.tsv,
            };
            Ok((text, 0))
        }
        Command::Reduce { mode, graph } => {
            let g = SimpleGraph::parse(&read(&graph)?).map_err(|e| Failure(format!("{}: {e}", graph.display())))?;
            let k = match mode {
                Mode::Si => reduce_si(&g)?,
                Mode::Isi => reduce_isi(&g)?,
            };
            Ok((write_cxt(&k), 0))
        }
        Command::Dot { highlight, file } => {
            let k = load_context(&file)?;
            let mut set = ObjectSet::empty(k.object_count());
            for label in highlight.iter().map(|l| l.trim()).filter(|l| !l.is_empty()) {
                let g = k
                    .object_index(label)
                    .ok_or_else(|| Failure(format!("unknown object `{label}`")))?;
                set.insert(g);
            }
            Ok((export_dot(&k, Some(&set)), 0))
        }
    }
}
