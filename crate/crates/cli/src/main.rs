use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use onep::codec::{decode_auto, to_dot, to_graph6};
use onep::crossing::crossing_number;
use onep::families::{chorded_cycle, cycle_square, ladder_family, named, FamilyInstance};
use onep::graph::Graph;
use onep::join::decide_join;
use onep::solver::{is_one_planar, is_outer_one_planar, Answer, SearchBudget};
use onep::verify::{self, Profile, RunOptions};

/// Exact 1-planarity, join 1-planarity and small crossing numbers.
#[derive(Parser)]
#[command(name = "onep", version)]
struct Cli {
    /// Budget profile supplying default node caps.
    #[arg(long, global = true, env = "ONEP_PROFILE", default_value = "quick")]
    profile: ProfileArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
}

impl From<ProfileArg> for Profile {
    fn from(p: ProfileArg) -> Self {
        match p {
            ProfileArg::Quick => Profile::Quick,
            ProfileArg::Full => Profile::Full,
        }
    }
}

#[derive(Args, Clone, Copy)]
struct BudgetArgs {
    /// Search node cap (default from the profile).
    #[arg(long)]
    max_nodes: Option<u64>,
    /// Wall-clock cap in seconds; makes results machine-dependent.
    #[arg(long)]
    max_seconds: Option<f64>,
}

impl BudgetArgs {
    fn budget(self, default_nodes: u64) -> SearchBudget {
        SearchBudget {
            max_nodes: self.max_nodes.unwrap_or(default_nodes),
            max_seconds: self.max_seconds.unwrap_or(f64::INFINITY),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph (graph6 or edge-JSON file) is 1-planar.
    Test {
        input: PathBuf,
        /// Decide outer-1-planarity instead.
        #[arg(long)]
        outer: bool,
        /// Also write <input>.dot with crossings drawn as square vertices.
        #[arg(long)]
        dot: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Decide whether the join G + H is 1-planar.
    Join {
        g: PathBuf,
        h: PathBuf,
        /// Run the solver for a drawing when the answer is positive.
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Exact crossing number up to a cap.
    Cr {
        input: PathBuf,
        /// Largest crossing count searched.
        #[arg(long = "max", default_value_t = 6)]
        max_k: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Write a family member as graph6 plus expected-property JSON.
    Gen {
        family: Family,
        /// Size for generated families, registry name for `named`.
        param: String,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Run the claim suite and emit a report.
    VerifyPaper {
        /// Shorthand for `--budget quick`.
        #[arg(long, conflicts_with = "budget")]
        quick: bool,
        /// Budget profile (defaults to --profile).
        #[arg(long)]
        budget: Option<ProfileArg>,
        /// Claim id prefixes to run.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        only: Vec<String>,
        /// Worker threads (0 = all CPUs).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Write <out>.json and <out>.md.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Record wall-clock times (reports stop being reproducible).
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Ladder,
    CycleSquare,
    ChordedCycle,
    Named,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    decode_auto(&text).with_context(|| format!("parsing {}", path.display()))
}

fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let mut name = path.as_os_str().to_owned();
    name.push(suffix);
    PathBuf::from(name)
}

/// Writes to stdout; a closed pipe (`onep ... | head`) is not an error.
fn emit(text: &str) -> Result<()> {
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn print_json(value: &impl serde::Serialize) -> Result<()> {
    emit(&(serde_json::to_string_pretty(value)? + "\n"))
}

fn exit_for(answer: Answer) -> u8 {
    match answer {
        Answer::Inconclusive => 2,
        _ => 0,
    }
}

fn run(cli: Cli) -> Result<u8> {
    let profile = Profile::from(cli.profile);
    match cli.command {
        Command::Test {
            input,
            outer,
            dot,
            budget,
        } => {
            let g = read_graph(&input)?;
            let budget = budget.budget(profile.solver_nodes());
            let v = if outer {
                is_outer_one_planar(&g, budget)
            } else {
                is_one_planar(&g, budget)
            };
            if let Some(w) = &v.witness {
                let path = sibling(&input, ".witness.json");
                fs::write(&path, serde_json::to_string_pretty(w)?)
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            if dot {
                let path = sibling(&input, ".dot");
                fs::write(&path, to_dot(&g, v.witness.as_ref()))
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            print_json(&v)?;
            Ok(exit_for(v.answer))
        }
        Command::Join {
            g,
            h,
            witness,
            budget,
        } => {
            let (gg, hh) = (read_graph(&g)?, read_graph(&h)?);
            let d = decide_join(&gg, &hh, budget.budget(profile.solver_nodes()), witness);
            if let Some(w) = &d.witness {
                let stem = h.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
                let path = sibling(&g, &format!(".join-{stem}.witness.json"));
                fs::write(&path, serde_json::to_string_pretty(w)?)
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            print_json(&d)?;
            Ok(exit_for(d.answer))
        }
        Command::Cr { input, max_k, budget } => {
            let g = read_graph(&input)?;
            let r = crossing_number(&g, max_k, budget.budget(profile.cr_nodes()));
            print_json(&r)?;
            Ok(if r.value.is_some() { 0 } else { 2 })
        }
        Command::Gen {
            family,
            param,
            out_dir,
        } => {
            let size = || param.parse::<usize>().with_context(|| format!("bad size {param:?}"));
            let instance = match family {
                Family::Ladder => ladder_family(size()?)?,
                Family::CycleSquare => cycle_square(size()?)?,
                Family::ChordedCycle => chorded_cycle(size()?)?,
                Family::Named => named(&param)?,
            };
            let written = write_instance(&instance, &out_dir)?;
            print_json(&json!({ "name": instance.name, "files": written }))?;
            Ok(0)
        }
        Command::VerifyPaper {
            quick,
            budget,
            only,
            jobs,
            out,
            timings,
        } => {
            let profile = if quick {
                Profile::Quick
            } else {
                budget.map_or(profile, Profile::from)
            };
            let claims = verify::select(profile, &only)?;
            let report = verify::run(
                &claims,
                RunOptions {
                    profile,
                    jobs,
                    timings,
                },
            );
            let markdown = report.to_markdown();
            if let Some(out) = out {
                for (ext, body) in [(".json", report.to_json()), (".md", markdown.clone())] {
                    let path = sibling(&out, ext);
                    fs::write(&path, body).with_context(|| format!("writing {}", path.display()))?;
                }
            }
            emit(&markdown)?;
            Ok(if report.succeeded() { 0 } else { 1 })
        }
    }
}

fn file_stem(name: &str) -> String {
    let parts: Vec<&str> = name
        .split(|c: char| !(c.is_ascii_alphanumeric() || c == '-'))
        .filter(|p| !p.is_empty())
        .collect();
    if parts.is_empty() {
        "graph".to_string()
    } else {
        parts.join("_")
    }
}

fn write_instance(instance: &FamilyInstance, dir: &Path) -> Result<Vec<String>> {
    if instance.graph.vertex_count() == 0 {
        bail!("{} has no vertices", instance.name);
    }
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let stem = dir.join(file_stem(&instance.name));
    let mut files = vec![
        (sibling(&stem, ".g6"), to_graph6(&instance.graph) + "\n"),
        (sibling(&stem, ".json"), serde_json::to_string_pretty(instance)?),
    ];
    if let Some(w) = &instance.witness {
        files.push((sibling(&stem, ".witness.json"), serde_json::to_string_pretty(w)?));
    }
    let mut written = Vec::new();
    for (path, body) in files {
        fs::write(&path, body).with_context(|| format!("writing {}", path.display()))?;
        written.push(path.display().to_string());
    }
    Ok(written)
}
