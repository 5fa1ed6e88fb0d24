//! The `strongcolor` command line.
//!
//! Exit codes: 0 success, 1 bad input or rejected hypotheses, 2 a coloring
//! was produced but not certified, 3 an internal consistency alarm.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{error::ErrorKind, Parser, Subcommand, ValueEnum};

use crate::coloring::{check_lists, verify_strong, ColorLists};
use crate::density::mad;
use crate::discharge::{audit, class_label, Element};
use crate::error::{Error, Result};
use crate::generate::{generate, random_lists, Family, GenSpec};
use crate::io::{parse_coloring, parse_instance, parse_lists, serialize_coloring, serialize_instance, Instance};
use crate::oracle::{strong_chromatic_index_exact, Budget};
use crate::solver::{solve_girth7, solve_mad3, Pipeline, SolveOptions, SolveReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_UNCERTIFIED: i32 = 2;
pub const EXIT_ALARM: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "strongcolor", version, about = "List strong edge coloring of sparse and planar graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Mad3,
    Girth7,
}

impl From<Mode> for Pipeline {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Mad3 => Pipeline::Mad3,
            Mode::Girth7 => Pipeline::Girth7,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Color an instance with the reduction solver.
    Color {
        #[arg(long, value_enum)]
        mode: Mode,
        /// Degree cap for girth7 mode (default: the file's `p cap`, else max(4, Δ)).
        #[arg(long)]
        delta: Option<usize>,
        /// File of `l U V : C...` records overriding the instance's lists.
        #[arg(long)]
        lists: Option<PathBuf>,
        input: PathBuf,
    },
    /// Check a coloring file against an instance.
    Verify { input: PathBuf, coloring: PathBuf },
    /// Exact strong chromatic index of a small instance.
    Exact {
        input: PathBuf,
        /// Largest edge count to accept.
        #[arg(long, default_value_t = Budget::default().max_edges)]
        cap: usize,
        /// Search node budget.
        #[arg(long, default_value_t = Budget::default().max_nodes)]
        budget: u64,
    },
    /// Exact maximum average degree.
    Mad { input: PathBuf },
    /// Length of a shortest cycle, or "inf".
    Girth { input: PathBuf },
    /// Charge ledger of one rule set.
    Audit {
        #[arg(long, value_enum)]
        which: Mode,
        #[arg(long)]
        delta: Option<usize>,
        input: PathBuf,
    },
    /// Write a generated instance to standard output.
    Gen {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        delta: usize,
        /// Also draw random lists of this size.
        #[arg(long)]
        list_size: Option<usize>,
        /// Color pool for random lists.
        #[arg(long, default_value_t = 40)]
        pool: u32,
    },
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Instance> {
    parse_instance(&read(path)?)
}

/// Output and exit code of one command.
struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: EXIT_OK }
    }
}

fn solve_report(inst: &Instance, report: &SolveReport) -> String {
    let mut out = serialize_coloring(&inst.graph, &report.coloring);
    let _ = writeln!(out, "# pipeline {}", report.pipeline);
    let _ = writeln!(out, "# list_bound {}", report.list_bound);
    let _ = writeln!(out, "# colors_used {}", report.colors_used);
    let _ = writeln!(out, "# certified {}", report.certified);
    let claims: Vec<String> = report.claims.iter().map(|(c, k)| format!("{c}={k}")).collect();
    let _ = writeln!(out, "# reductions {}", claims.join(" "));
    let _ = writeln!(
        out,
        "# steps {} bound_violations {}",
        report.steps.len(),
        report.bound_violations()
    );
    let _ = writeln!(out, "# max_depth {}", report.max_depth);
    if let Some(f) = &report.fallback {
        let _ = writeln!(out, "# fallback {f}");
    }
    out
}

fn execute(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Color {
            mode,
            delta,
            lists,
            input,
        } => {
            let inst = load(&input)?;
            let g = &inst.graph;
            let cap = delta.or(inst.delta_cap).unwrap_or(g.max_degree().max(4));
            let size = match mode {
                Mode::Mad3 => 3 * g.max_degree() + 1,
                Mode::Girth7 => 3 * cap,
            };
            let lists = match lists {
                Some(path) => parse_lists(&read(&path)?, g)?,
                None => inst.lists.clone().unwrap_or_else(|| ColorLists::uniform(g.edge_count(), size)),
            };
            let report = match mode {
                Mode::Mad3 => solve_mad3(g, &lists)?,
                Mode::Girth7 => solve_girth7(g, &lists, cap, &SolveOptions::default())?,
            };
            Ok(Outcome {
                text: solve_report(&inst, &report),
                code: if report.certified { EXIT_OK } else { EXIT_UNCERTIFIED },
            })
        }
        Command::Verify { input, coloring } => {
            let inst = load(&input)?;
            let c = parse_coloring(&read(&coloring)?, &inst.graph)?;
            let mut violations = verify_strong(&inst.graph, &c, true);
            if let Some(lists) = &inst.lists {
                violations.extend(check_lists(&c, lists));
            }
            let mut text = String::new();
            for v in &violations {
                let _ = writeln!(text, "violation {v}");
            }
            if violations.is_empty() {
                let _ = writeln!(text, "ok {} edges, {} colors", inst.graph.edge_count(), c.colors_used());
            } else {
                let _ = writeln!(text, "{} violations", violations.len());
            }
            Ok(Outcome {
                text,
                code: if violations.is_empty() { EXIT_OK } else { EXIT_ERROR },
            })
        }
        Command::Exact { input, cap, budget } => {
            let inst = load(&input)?;
            let budget = Budget {
                max_edges: cap,
                max_nodes: budget,
            };
            let r = strong_chromatic_index_exact(&inst.graph, &budget)?;
            let mut text = format!("chi_s {}\nclique_lower_bound {}\n", r.chi_s, r.lower_bound_clique);
            text += &serialize_coloring(&inst.graph, &r.witness);
            Ok(Outcome::ok(text))
        }
        Command::Mad { input } => {
            let inst = load(&input)?;
            let w = mad(&inst.graph)?;
            let vs: Vec<String> = w.vertices.iter().map(|v| v.to_string()).collect();
            Ok(Outcome::ok(format!("mad {}\nwitness {}\n", w.density, vs.join(" "))))
        }
        Command::Girth { input } => Ok(Outcome::ok(format!("{}\n", load(&input)?.graph.girth()))),
        Command::Audit { which, delta, input } => {
            let inst = load(&input)?;
            let cap = delta.or(inst.delta_cap);
            let rep = audit(&inst.graph, inst.embedding.as_ref(), which.into(), cap)?;
            Ok(Outcome::ok(audit_text(&inst, &rep)))
        }
        Command::Gen {
            family,
            seed,
            n,
            delta,
            list_size,
            pool,
        } => {
            let mut inst = generate(&GenSpec::new(family, n, delta, seed))?;
            if let Some(size) = list_size {
                inst.lists = Some(random_lists(inst.graph.edge_count(), size, pool, seed)?);
            }
            Ok(Outcome::ok(serialize_instance(&inst)))
        }
    }
}

fn audit_text(inst: &Instance, rep: &crate::discharge::AuditReport) -> String {
    let g = &inst.graph;
    let l = &rep.ledger;
    let mut out = format!("# audit {}\n", rep.pipeline);
    for v in g.vertices() {
        let _ = writeln!(
            out,
            "vertex {v} class {} initial {} final {}",
            class_label(g, v),
            l.vertex_initial[v],
            l.vertex_final[v]
        );
    }
    if let Some(emb) = &inst.embedding {
        for (i, f) in emb.faces().iter().enumerate().take(l.face_initial.len()) {
            let _ = writeln!(
                out,
                "face {i} degree {} initial {} final {}",
                f.degree(),
                l.face_initial[i],
                l.face_final[i]
            );
        }
    }
    for t in &l.transfers {
        let _ = writeln!(out, "transfer {} {} -> {} amount {}", t.rule, t.from, t.to, t.amount);
    }
    for n in &rep.negative {
        let plan = n.plan.map_or("none".to_string(), |c| c.to_string());
        let _ = writeln!(out, "negative {} charge {} plan {plan}", n.element, n.charge);
    }
    for (u, plan) in &rep.uncovered {
        let plan = plan.map_or("none".to_string(), |c| c.to_string());
        let _ = writeln!(
            out,
            "uncovered {} profile {} excluded_by {plan}",
            Element::Vertex(u.vertex),
            u.profile
        );
    }
    for note in &rep.notes {
        let _ = writeln!(out, "note {note}");
    }
    let detected = rep.detected.map_or("none".to_string(), |c| c.to_string());
    let _ = writeln!(out, "detected {detected}");
    let _ = writeln!(out, "total_initial {}", l.total_initial());
    let _ = writeln!(out, "total_final {}", l.total_final());
    let _ = writeln!(out, "conserved {}", l.is_conserved());
    if let Some(id) = rep.identity {
        let _ = writeln!(out, "identity {id}");
    }
    out
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let help = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let sink: &mut dyn Write = if help { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return if help { EXIT_OK } else { EXIT_ERROR };
        }
    };
    match execute(cli.command) {
        Ok(o) => {
            let _ = out.write_all(o.text.as_bytes());
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_alarm() {
                EXIT_ALARM
            } else {
                EXIT_ERROR
            }
        }
    }
}
