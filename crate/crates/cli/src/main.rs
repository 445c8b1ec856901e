use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use rst_core::degree::{build_degree_aux_graph, relaxed_small_degree_sequence, LargeDegreeSolver};
use rst_core::diameter::{build_center_aux_graph, SmallDiameterSolver};
use rst_core::io;
use rst_core::oracle::{oracle_decide, DEFAULT_CAP};
use rst_core::reductions::{hampath_to_rst, ncl_to_rst, HamPathInstance};
use rst_core::sequence::validate_sequence;
use rst_core::{Constraint, Graph, ReconfSequence, SpanningTree};

#[derive(Parser)]
#[command(name = "rst", version, about = "Spanning tree reconfiguration under degree and diameter constraints")]
struct Cli {
    /// Worker threads for auxiliary graph construction (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print YES or NO for reachability under a constraint.
    Decide(Instance),
    /// Write a reconfiguration sequence as JSON.
    Sequence {
        #[command(flatten)]
        inst: Instance,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a sequence file against a graph and its constraint.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        seq: PathBuf,
        /// Required first tree.
        #[arg(long)]
        from: Option<PathBuf>,
        /// Required last tree.
        #[arg(long)]
        to: Option<PathBuf>,
    },
    /// Brute-force answers for small graphs.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Build a bounded-degree instance from an NCL graph and two orientations.
    GenNcl {
        #[arg(long)]
        ncl: PathBuf,
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
        #[arg(long, default_value_t = 3)]
        d: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Build a large-diameter instance from a Hamiltonian path question.
    GenHam {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Export the auxiliary graph for max-deg-ge or diam-le.
    Auxgraph {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        constraint: ConstraintKind,
        #[arg(long)]
        d: usize,
        /// Write DOT here.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Flip-graph search; `--out` receives a shortest sequence.
    Decide {
        #[command(flatten)]
        inst: Instance,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Instance {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    from: PathBuf,
    #[arg(long)]
    to: PathBuf,
    #[arg(long, value_enum)]
    constraint: ConstraintKind,
    #[arg(long)]
    d: usize,
    /// Allow max-deg-le when one tree already has maximum degree below d.
    #[arg(long)]
    relaxed: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstraintKind {
    MaxDegGe,
    MaxDegLe,
    DiamLe,
    DiamGe,
}

impl ConstraintKind {
    fn with(self, d: usize) -> Constraint {
        match self {
            ConstraintKind::MaxDegGe => Constraint::MaxDegGe(d),
            ConstraintKind::MaxDegLe => Constraint::MaxDegLe(d),
            ConstraintKind::DiamLe => Constraint::DiamLe(d),
            ConstraintKind::DiamGe => Constraint::DiamGe(d),
        }
    }
}

struct Loaded {
    g: Graph,
    from: SpanningTree,
    to: SpanningTree,
    c: Constraint,
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> anyhow::Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn load_graph(path: &Path) -> anyhow::Result<Graph> {
    io::parse_graph(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn load_tree(g: &Graph, path: &Path) -> anyhow::Result<SpanningTree> {
    io::parse_tree(g, &read(path)?).with_context(|| format!("parsing {}", path.display()))
}

impl Instance {
    fn load(&self) -> anyhow::Result<Loaded> {
        let g = load_graph(&self.graph)?;
        let from = load_tree(&g, &self.from)?;
        let to = load_tree(&g, &self.to)?;
        let c = self.constraint.with(self.d);
        for (name, t) in [("initial", &from), ("target", &to)] {
            if !c.satisfied(&g, t) {
                bail!("the {name} tree violates {c}");
            }
        }
        Ok(Loaded { g, from, to, c })
    }
}

/// Runs the polynomial solver matching the constraint.
fn solve(inst: &Instance, want_sequence: bool) -> anyhow::Result<(bool, Option<ReconfSequence>)> {
    let Loaded { g, from, to, c } = inst.load()?;
    let d = inst.d;
    match c {
        Constraint::MaxDegGe(_) => {
            let solver = LargeDegreeSolver::new(&g, d)?;
            if want_sequence {
                let seq = solver.sequence(&from, &to)?;
                Ok((seq.is_some(), seq))
            } else {
                Ok((solver.decide(&from, &to)?, None))
            }
        }
        Constraint::DiamLe(_) => {
            let solver = SmallDiameterSolver::new(&g, d)?;
            if want_sequence {
                let seq = solver.sequence(&from, &to)?;
                Ok((seq.is_some(), seq))
            } else {
                Ok((solver.decide(&from, &to)?, None))
            }
        }
        Constraint::MaxDegLe(_) => {
            if !inst.relaxed {
                bail!("max-deg-le is only solved with --relaxed; use `rst oracle decide` for small graphs");
            }
            if from.max_degree(&g).min(to.max_degree(&g)) + 1 > d {
                bail!("--relaxed needs one tree with maximum degree at most {}", d.saturating_sub(1));
            }
            let seq = relaxed_small_degree_sequence(&g, d, &from, &to)?;
            Ok((true, Some(seq)))
        }
        _ => bail!("no polynomial solver for {c}; use `rst oracle decide` for small graphs"),
    }
}

fn answer(yes: bool) -> ExitCode {
    println!("{}", if yes { "YES" } else { "NO" });
    ExitCode::from(if yes { 0 } else { 1 })
}

fn emit_sequence(seq: &ReconfSequence, out: Option<&Path>) -> anyhow::Result<()> {
    let text = io::format_sequence(seq);
    match out {
        Some(path) => write(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn bundle_json(c: Constraint, provenance: serde_json::Value) -> String {
    let bundle = json!({
        "graph": "graph.txt",
        "from": "ini.tree",
        "to": "tar.tree",
        "constraint": c,
        "provenance": provenance,
    });
    serde_json::to_string_pretty(&bundle).expect("bundle serializes") + "\n"
}

fn write_bundle(
    out: &Path,
    g: &Graph,
    t_ini: &SpanningTree,
    t_tar: &SpanningTree,
    c: Constraint,
    provenance: serde_json::Value,
) -> anyhow::Result<()> {
    fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
    write(&out.join("graph.txt"), &io::format_graph(g))?;
    write(&out.join("ini.tree"), &io::format_tree(t_ini))?;
    write(&out.join("tar.tree"), &io::format_tree(t_tar))?;
    write(&out.join("instance.json"), &bundle_json(c, provenance))
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.cmd {
        Command::Decide(inst) => {
            let (yes, _) = solve(&inst, false)?;
            Ok(answer(yes))
        }
        Command::Sequence { inst, out } => {
            let (yes, seq) = solve(&inst, true)?;
            if let Some(seq) = seq {
                emit_sequence(&seq, out.as_deref())?;
            } else {
                println!("NO");
            }
            Ok(ExitCode::from(if yes { 0 } else { 1 }))
        }
        Command::Verify { graph, seq, from, to } => {
            let g = load_graph(&graph)?;
            let seq = io::parse_sequence(&g, &read(&seq)?)?;
            if let Err(v) = validate_sequence(&g, &seq) {
                println!("INVALID: {v}");
                return Ok(ExitCode::from(1));
            }
            for (path, tree, end) in [(from, seq.first(), "first"), (to, seq.last(), "last")] {
                if let Some(path) = path {
                    if &load_tree(&g, &path)? != tree {
                        println!("INVALID: the {end} tree differs from {}", path.display());
                        return Ok(ExitCode::from(1));
                    }
                }
            }
            println!("VALID: {} steps under {}", seq.len(), seq.constraint());
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle(OracleCommand::Decide { inst, cap, out }) => {
            let Loaded { g, from, to, c } = inst.load()?;
            let (yes, seq) = oracle_decide(&g, c, &from, &to, cap)?;
            if let (Some(seq), Some(path)) = (seq, out.as_deref()) {
                emit_sequence(&seq, Some(path))?;
            }
            Ok(answer(yes))
        }
        Command::GenNcl { ncl, from, to, d, out } => {
            let h = io::parse_ncl(&read(&ncl)?)?;
            let s_ini = io::parse_orientation(&h, &read(&from)?)?;
            let s_tar = io::parse_orientation(&h, &read(&to)?)?;
            let red = ncl_to_rst(&h, &s_ini, &s_tar, d)?;
            let provenance = json!({
                "kind": "ncl",
                "ncl": red.ncl,
                "orientations": [s_ini, s_tar],
                "layout": red.layout,
            });
            write_bundle(&out, &red.g, &red.t_ini, &red.t_tar, red.constraint(), provenance)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::GenHam { graph, s, t, out } => {
            let g = load_graph(&graph)?;
            let red = hampath_to_rst(&HamPathInstance { g, s, t })?;
            let provenance = json!({
                "kind": "hampath",
                "source": io::format_graph(&red.source.g),
                "s": s,
                "t": t,
                "layout": red.layout,
            });
            write_bundle(&out, &red.g, &red.t_ini, &red.t_tar, red.constraint(), provenance)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Auxgraph { graph, constraint, d, dot, out } => {
            let g = load_graph(&graph)?;
            let (dot_text, json_value) = match constraint {
                ConstraintKind::MaxDegGe => {
                    g.require_connected()?;
                    let aux = build_degree_aux_graph(&g, d);
                    let edges = aux.edges();
                    let mut text = String::from("graph hubs {\n");
                    for v in 0..g.n() {
                        text.push_str(&format!("  {v};\n"));
                    }
                    for (u, v) in &edges {
                        text.push_str(&format!("  {u} -- {v};\n"));
                    }
                    text.push_str("}\n");
                    (text, json!({ "vertices": g.n(), "edges": edges }))
                }
                ConstraintKind::DiamLe => {
                    let aux = build_center_aux_graph(&g, d)?;
                    (aux.to_dot(), aux.to_json())
                }
                _ => bail!("auxiliary graphs exist only for max-deg-ge and diam-le"),
            };
            if let Some(path) = &dot {
                write(path, &dot_text)?;
            }
            let json_text = serde_json::to_string_pretty(&json_value)? + "\n";
            match &out {
                Some(path) => write(path, &json_text)?,
                None if dot.is_none() => print!("{dot_text}"),
                None => {}
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
