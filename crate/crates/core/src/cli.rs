//! Command-line front end. `run` is the whole program minus process exit, so
//! tests can drive it with in-memory streams.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::arrangement::{build_arrangement, FieldConfig};
use crate::formula::{table_for_graph, FormulaSource};
use crate::graph::{generate_family, graph_stats, validate_assumption, Attachment, FamilySpec, Graph};
use crate::harness::{self, compare_with, graph_id, json_lines, Verdict};
use crate::oracle::{build_model, oracle_for_graph, resolve_method, strand_shapes, Method, OracleOptions};
use crate::table::BettiTable;

/// Oracle runs on curves in `P^n` with `n` at least this need `--slow`.
pub const SLOW_AMBIENT: usize = 11;

pub const PRIME_ENV: &str = "GRAPHCURVE_PRIME";

#[derive(Debug, Parser)]
#[command(name = "graphcurve", version, about = "Betti tables of graph curves")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the standing assumptions on a graph
    Validate(Common),
    /// Vertex/edge counts, genus, ambient dimension, degree histogram
    Stats(Common),
    /// Betti table from the closed-form formulas
    Table(Common),
    /// Betti table computed exactly over F_p
    Oracle {
        #[command(flatten)]
        common: Common,
        /// Print the matrix shapes of the direct strand maps instead
        #[arg(long)]
        dump_shapes: bool,
    },
    /// Formula vs oracle for one graph
    Compare(Common),
    /// Conjecture scan over all valid graphs up to --d-max vertices, or one graph
    Scan {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 8)]
        d_max: usize,
        /// Exit 1 if an applicable conjecture fails
        #[arg(long)]
        strict: bool,
    },
    /// Print a family member, or every valid graph up to --enumerate vertices
    Gen {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        enumerate: Option<usize>,
    },
    /// Build a line arrangement and print it as JSON
    ExportArrangement {
        #[command(flatten)]
        common: Common,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Path,
    Cycle,
    TreeOfCycles,
    GluedChain,
    Extension,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Direct,
    Reduced,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Graph file: JSON {"vertices", "edges"} or one "u v" pair per line
    #[arg(long, conflicts_with = "family")]
    pub file: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    /// Vertex count for path, cycle and the extension base
    #[arg(long)]
    pub n: Option<usize>,
    /// Cycle lengths of a chain-shaped tree of cycles
    #[arg(long, value_delimiter = ',')]
    pub cycles: Vec<usize>,
    /// Edge counts of the paths joining consecutive cycles
    #[arg(long, value_delimiter = ',')]
    pub bridges: Vec<usize>,
    #[arg(long)]
    pub cycle_len: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Base family of an extension
    #[arg(long, value_enum)]
    pub base: Option<Family>,
    /// Pendant paths "vertex:count", comma separated
    #[arg(long, value_delimiter = ',')]
    pub attach: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Field characteristic (default 32003, or $GRAPHCURVE_PRIME)
    #[arg(long)]
    pub prime: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 5)]
    pub retries: u32,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,
    /// Allow oracle runs on large curves
    #[arg(long)]
    pub slow: bool,
}

/// Failure with its exit code.
struct Exit(i32, String);

fn usage(msg: impl Into<String>) -> Exit {
    Exit(2, msg.into())
}

impl Common {
    fn field_config(&self) -> Result<FieldConfig, Exit> {
        let p = match self.prime {
            Some(p) => p,
            None => match std::env::var(PRIME_ENV) {
                Ok(v) => v.trim().parse().map_err(|_| usage(format!("{PRIME_ENV}={v:?} is not an integer")))?,
                Err(_) => FieldConfig::default().p,
            },
        };
        Ok(FieldConfig {
            p,
            seed: self.seed,
            max_retries: self.retries,
        })
    }

    fn oracle_options(&self) -> OracleOptions {
        OracleOptions {
            method: match self.method {
                MethodArg::Auto => Method::Auto,
                MethodArg::Direct => Method::Direct,
                MethodArg::Reduced => Method::Reduced,
            },
            check_regularity: false,
            seed: self.seed,
        }
    }

    fn has_input(&self) -> bool {
        self.file.is_some() || self.family.is_some()
    }

    fn graph(&self) -> Result<Graph, Exit> {
        if let Some(path) = &self.file {
            return Graph::read(path).map_err(|e| usage(e.to_string()));
        }
        let family = self.family.ok_or_else(|| usage("an input is required: --file PATH or --family NAME"))?;
        let spec = self.family_spec(family)?;
        generate_family(&spec).map_err(|e| usage(e.to_string()))
    }

    fn family_spec(&self, family: Family) -> Result<FamilySpec, Exit> {
        let name = family.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
        let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| usage(format!("--family {name} needs --{flag}")));
        Ok(match family {
            Family::Path => FamilySpec::Path(need(self.n, "n")?),
            Family::Cycle => FamilySpec::Cycle(need(self.n, "n")?),
            Family::TreeOfCycles => {
                FamilySpec::cycle_chain(&self.cycles, &self.bridges).map_err(|e| usage(e.to_string()))?
            }
            Family::GluedChain => FamilySpec::GluedChain {
                cycle_len: need(self.cycle_len, "cycle-len")?,
                k: need(self.k, "k")?,
            },
            Family::Extension => {
                let base = match self.base {
                    Some(Family::Path) => FamilySpec::Path(need(self.n, "n")?),
                    Some(Family::Cycle) => FamilySpec::Cycle(need(self.n, "n")?),
                    _ => return Err(usage("--family extension needs --base path or --base cycle")),
                };
                let attachments = self
                    .attach
                    .iter()
                    .map(|s| parse_attachment(s))
                    .collect::<Result<Vec<_>, _>>()?;
                FamilySpec::Extension {
                    base: Box::new(base),
                    attachments,
                }
            }
        })
    }
}

fn parse_attachment(s: &str) -> Result<Attachment, Exit> {
    let bad = || usage(format!("bad --attach entry {s:?}, expected vertex:count"));
    let (v, c) = s.split_once(':').ok_or_else(bad)?;
    Ok(Attachment {
        vertex: v.trim().parse().map_err(|_| bad())?,
        count: c.trim().parse().map_err(|_| bad())?,
    })
}

fn render(t: &BettiTable, format: Format) -> String {
    match format {
        Format::Text => t.render_text(),
        Format::Csv => t.render_csv(),
        Format::Json => t.to_json() + "\n",
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializes") + "\n"
}

fn check_slow(c: &Common, g: &Graph) -> Result<(), Exit> {
    let stats = graph_stats(g).map_err(|e| usage(e.to_string()))?;
    if stats.n as usize >= SLOW_AMBIENT && !c.slow {
        return Err(usage(format!(
            "oracle on a curve in P^{} is a slow run; pass --slow to allow it",
            stats.n
        )));
    }
    Ok(())
}

fn require_valid(g: &Graph) -> Result<(), Exit> {
    let report = validate_assumption(g);
    if report.passes() {
        Ok(())
    } else {
        Err(usage(format!("invalid graph: {}", report.failures().join("; "))))
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli.command, out, err) {
        Ok(code) => code,
        Err(Exit(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn execute(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Exit> {
    let mut emit = |s: &str| out.write_all(s.as_bytes()).map_err(|e| Exit(2, e.to_string()));
    match cmd {
        Command::Validate(c) => {
            let g = c.graph()?;
            let report = validate_assumption(&g);
            match c.format {
                Format::Json => emit(&to_json(&report))?,
                _ => {
                    if report.passes() {
                        emit("valid\n")?;
                    } else {
                        emit("invalid\n")?;
                        for f in report.failures() {
                            emit(&format!("{f}\n"))?;
                        }
                    }
                }
            }
            if !report.criteria_agree() {
                let _ = writeln!(err, "warning: subgraph bound and degree criterion disagree");
            }
            Ok(if report.passes() { 0 } else { 1 })
        }
        Command::Stats(c) => {
            let g = c.graph()?;
            let s = graph_stats(&g).map_err(|e| usage(e.to_string()))?;
            match c.format {
                Format::Json => emit(&to_json(&s))?,
                Format::Csv => {
                    emit("d,m,g,n\n")?;
                    emit(&format!("{},{},{},{}\n", s.d, s.m, s.g, s.n))?;
                }
                Format::Text => {
                    emit(&format!("d = {}\nm = {}\ng = {}\nn = {}\n", s.d, s.m, s.g, s.n))?;
                    for (deg, count) in &s.degree_histogram {
                        emit(&format!("x_{deg} = {count}\n"))?;
                    }
                }
            }
            Ok(0)
        }
        Command::Table(c) => {
            let g = c.graph()?;
            let (t, source) = table_for_graph(&g, None).map_err(|e| usage(format!("{e}; the oracle subcommand covers such graphs")))?;
            let _ = writeln!(err, "formula: {}", source_name(source));
            emit(&render(&t, c.format))?;
            Ok(0)
        }
        Command::Oracle { common: c, dump_shapes } => {
            let g = c.graph()?;
            require_valid(&g)?;
            check_slow(c, &g)?;
            let cfg = c.field_config()?;
            if *dump_shapes {
                let arr = build_arrangement(&g, &cfg).map_err(|e| usage(e.to_string()))?;
                let model = build_model(&arr, 3).map_err(|e| usage(e.to_string()))?;
                for s in strand_shapes(&model) {
                    emit(&format!("i={} a={} rows={} cols={}\n", s.i, s.a, s.rows, s.cols))?;
                }
                return Ok(0);
            }
            let opts = c.oracle_options();
            let (arr, t) = oracle_for_graph(&g, &cfg, &opts).map_err(|e| usage(e.to_string()))?;
            let _ = writeln!(err, "method: {:?}, p = {}", resolve_method(&arr, &opts), arr.p);
            emit(&render(&t, c.format))?;
            Ok(0)
        }
        Command::Compare(c) => {
            let g = c.graph()?;
            require_valid(&g)?;
            check_slow(c, &g)?;
            let cfg = c.field_config()?;
            let r = compare_with(&graph_id(&g), &g, &cfg, &c.oracle_options()).map_err(|e| usage(e.to_string()))?;
            match c.format {
                Format::Json => emit(&to_json(&r))?,
                Format::Csv => {
                    emit("i,j,formula,oracle\n")?;
                    for d in &r.diffs {
                        emit(&format!("{},{},{},{}\n", d.i, d.j, d.left, d.right))?;
                    }
                }
                Format::Text => {
                    let source = r.source.map_or("none", source_name);
                    emit(&format!("graph {} (d={}, g={}, n={}), formula: {}\n", r.graph_id, r.d, r.genus, r.n, source))?;
                    emit(&r.oracle.render_text())?;
                    for d in &r.diffs {
                        emit(&format!("b({},{}): formula {} oracle {}\n", d.i, d.j, d.left, d.right))?;
                    }
                    emit(match r.verdict {
                        Verdict::Match => "match\n",
                        Verdict::Mismatch => "mismatch\n",
                    })?;
                }
            }
            if !r.corollaries.all_hold() || !r.euler_ok {
                let _ = writeln!(err, "warning: structural check failed: {:?}, euler {}", r.corollaries, r.euler_ok);
            }
            Ok(match r.verdict {
                Verdict::Match => 0,
                Verdict::Mismatch => 1,
            })
        }
        Command::Scan { common: c, d_max, strict } => {
            let cfg = c.field_config()?;
            let graphs: Vec<(String, Graph)> = if c.has_input() {
                let g = c.graph()?;
                require_valid(&g)?;
                check_slow(c, &g)?;
                vec![(graph_id(&g), g)]
            } else {
                if *d_max > 10 {
                    return Err(usage("--d-max is limited to 10"));
                }
                harness::enumerate_graphs(*d_max).into_iter().map(|g| (graph_id(&g), g)).collect()
            };
            let reports = harness::scan_graphs(&graphs, &cfg, &c.oracle_options()).map_err(|e| usage(e.to_string()))?;
            match c.format {
                Format::Json => emit(&json_lines(&reports))?,
                Format::Csv => {
                    emit("graph,d,genus,n,conj41,conj42,conj43_written,conj43_shifted,conj43_square\n")?;
                    let cell = |v: Option<bool>| v.map_or(String::new(), |b| b.to_string());
                    for r in &reports {
                        emit(&format!(
                            "{},{},{},{},{},{},{},{},{}\n",
                            r.graph_id,
                            r.d,
                            r.genus,
                            r.n,
                            cell(r.conj41.holds),
                            r.conj42.holds,
                            cell(r.conj43.holds_as_written),
                            cell(r.conj43.holds_shifted),
                            cell(r.conj43.square)
                        ))?;
                    }
                }
                Format::Text => emit(&harness::conjecture_summary(&reports))?,
            }
            let proved = reports.iter().filter(|r| r.proved_violation()).count();
            if proved > 0 {
                let _ = writeln!(err, "error: {proved} graphs violate a proved statement");
                return Ok(1);
            }
            let open = reports.iter().filter(|r| r.conjecture_violation()).count();
            if open > 0 {
                let _ = writeln!(err, "{open} graphs are counterexamples to an applicable conjecture");
            }
            Ok(if *strict && open > 0 { 1 } else { 0 })
        }
        Command::Gen { common: c, enumerate } => {
            let graphs = match enumerate {
                Some(d) if *d <= 10 => harness::enumerate_graphs(*d),
                Some(_) => return Err(usage("--enumerate is limited to 10 vertices")),
                None => vec![c.graph()?],
            };
            for g in &graphs {
                match c.format {
                    Format::Text if enumerate.is_none() => emit(&g.to_edge_list())?,
                    Format::Csv => {
                        let pairs: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
                        emit(&format!("{},{},{}\n", graph_id(g), g.vertex_count(), pairs.join(" ")))?;
                    }
                    _ => emit(&(g.to_json() + "\n"))?,
                }
            }
            Ok(0)
        }
        Command::ExportArrangement { common: c, output } => {
            let g = c.graph()?;
            let cfg = c.field_config()?;
            let arr = build_arrangement(&g, &cfg).map_err(|e| usage(e.to_string()))?;
            let json = arr.to_json() + "\n";
            match output {
                Some(path) => std::fs::write(path, json).map_err(|e| usage(format!("{}: {e}", path.display())))?,
                None => emit(&json)?,
            }
            Ok(0)
        }
    }
}

fn source_name(s: FormulaSource) -> &'static str {
    match s {
        FormulaSource::GenusZero => "genus zero",
        FormulaSource::GenusOne => "genus one",
        FormulaSource::TreeOfCycles => "tree of cycles",
        FormulaSource::FromCubic => "quadratic strand from oracle cubic strand",
    }
}
