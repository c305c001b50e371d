//! Command-line front end. Every subcommand is a thin wrapper over one
//! library operation; mathematical verdicts (non-membership, inadmissible
//! closures) are successful executions, so scripts can branch on output
//! rather than exit codes.
//!
//! Exit codes: 0 on success, 1 on input errors, 2 when a self-verification
//! of produced output fails.

use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::action::{act, full_coloring, ou_matrix, ColorVector};
use crate::braid::BraidWord;
use crate::oracle::{reachable_set, SearchSpec};
use crate::orbit::{membership, OrbitFlavor, World};
use crate::render::render_svg;
use crate::witness::{
    closure_admits, permutation_braid, torus, weaving, witness_classical, witness_classical_pure,
    witness_virtual,
};
use crate::{Error, Permutation, Result};

#[derive(Parser)]
#[command(
    name = "updown",
    version,
    about = "Edge-labelling actions of braid diagram words on integer tuples"
)]
struct Cli {
    /// Emit structured JSON instead of line-oriented text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct WordArgs {
    /// Number of strands; inferred from the word when omitted.
    #[arg(long)]
    degree: Option<usize>,
    /// Word such as "s1 S2 v1" (s = positive, S = negative, v = virtual).
    #[arg(long)]
    word: String,
}

impl WordArgs {
    fn parse(&self) -> Result<BraidWord> {
        BraidWord::parse(&self.word, self.degree)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Apply a word to a tuple.
    Act {
        #[command(flatten)]
        word: WordArgs,
        /// Comma-separated integers, e.g. "0,0".
        #[arg(long)]
        input: String,
    },
    /// Label every edge of a diagram.
    Color {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long)]
        input: String,
    },
    /// Over/under count matrix with row and column sums.
    Ou {
        #[command(flatten)]
        word: WordArgs,
    },
    /// Structural facts: degree, permutation, purity, irreducibility, bigons.
    Check {
        #[command(flatten)]
        word: WordArgs,
    },
    /// Decide whether two tuples lie in the same orbit.
    OrbitCheck {
        /// classical | virtual, optionally with -pure and/or -irreducible.
        #[arg(long)]
        flavor: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Construct a verified word carrying one tuple to another.
    Witness {
        #[arg(long)]
        flavor: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Decide whether the closure of a diagram admits a consistent labelling.
    ClosureCheck {
        #[command(flatten)]
        word: WordArgs,
    },
    /// Generate words from the built-in families.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Exhaustive search over bounded words.
    Oracle {
        #[command(subcommand)]
        task: OracleTask,
    },
    /// Draw a diagram as SVG.
    Render {
        #[command(flatten)]
        word: WordArgs,
        /// Output file path.
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    /// Torus word: q repetitions of the positive sweep on p strands.
    Torus {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
    /// Weaving word: q repetitions of the alternating sweep on p strands.
    Weaving {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
    /// Positive word realizing a permutation, one crossing per inversion.
    Permbraid {
        /// 1-based image list, e.g. "3,1,2" sends 1 to 3.
        #[arg(long)]
        image: String,
    },
}

#[derive(Subcommand)]
enum OracleTask {
    /// Enumerate all tuples reachable from a start by bounded words.
    Reachable {
        #[arg(long)]
        degree: usize,
        /// classical | virtual.
        #[arg(long)]
        world: String,
        #[arg(long)]
        max_len: usize,
        /// Start tuple, e.g. "0,0".
        #[arg(long)]
        from: String,
        /// Restrict to pure words.
        #[arg(long)]
        pure: bool,
        /// Restrict to irreducible words.
        #[arg(long)]
        irreducible: bool,
        /// Drop tuples with entries beyond this bound.
        #[arg(long)]
        box_bound: Option<i64>,
    },
}

/// Runs the command line, returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli.command, cli.json) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            1
        }
    }
}

fn word_json(w: &BraidWord) -> serde_json::Value {
    json!({ "degree": w.degree(), "word": w.to_string() })
}

fn permutation_images(p: &Permutation) -> Vec<usize> {
    p.images_one_based()
}

fn dispatch(command: Command, json_mode: bool) -> Result<i32> {
    match command {
        Command::Act { word, input } => {
            let w = word.parse()?;
            let x = ColorVector::parse(&input)?;
            let y = act(&x, &w)?;
            if json_mode {
                let mut value = word_json(&w);
                value["input"] = json!(x.0);
                value["output"] = json!(y.0);
                value["permutation"] = json!(permutation_images(&w.permutation()));
                println!("{value}");
            } else {
                println!("output: {y}");
            }
            Ok(0)
        }
        Command::Color { word, input } => {
            let w = word.parse()?;
            let x = ColorVector::parse(&input)?;
            let coloring = full_coloring(&x, &w)?;
            let y = act(&x, &w)?;
            if json_mode {
                let mut value = word_json(&w);
                value["input"] = json!(x.0);
                value["strands"] = json!(coloring.strands);
                value["output"] = json!(y.0);
                println!("{value}");
            } else {
                for (i, labels) in coloring.strands.iter().enumerate() {
                    let text: Vec<String> = labels.iter().map(|v| v.to_string()).collect();
                    println!("strand {}: {}", i + 1, text.join(" "));
                }
                println!("output: {y}");
            }
            Ok(0)
        }
        Command::Ou { word } => {
            let w = word.parse()?;
            let m = ou_matrix(&w);
            if json_mode {
                let mut value = word_json(&w);
                value["matrix"] = json!(m.rows());
                value["row_sums"] = json!(m.row_sums());
                value["col_sums"] = json!(m.col_sums());
                println!("{value}");
            } else {
                for row in m.rows() {
                    let text: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                    println!("{}", text.join(" "));
                }
                let rows: Vec<String> = m.row_sums().iter().map(|v| v.to_string()).collect();
                let cols: Vec<String> = m.col_sums().iter().map(|v| v.to_string()).collect();
                println!("row sums: {}", rows.join(","));
                println!("col sums: {}", cols.join(","));
            }
            Ok(0)
        }
        Command::Check { word } => {
            let w = word.parse()?;
            let bigons = w.bigons();
            if json_mode {
                let mut value = word_json(&w);
                value["permutation"] = json!(permutation_images(&w.permutation()));
                value["pure"] = json!(w.is_pure());
                value["irreducible"] = json!(w.is_irreducible());
                value["classical"] = json!(w.is_classical());
                value["bigons"] = json!(bigons
                    .iter()
                    .map(|b| json!({ "first": b.first, "second": b.second, "index": b.index }))
                    .collect::<Vec<_>>());
                println!("{value}");
            } else {
                println!("degree: {}", w.degree());
                let images: Vec<String> = permutation_images(&w.permutation())
                    .iter()
                    .map(|v| v.to_string())
                    .collect();
                println!("permutation: {}", images.join(","));
                println!("pure: {}", w.is_pure());
                println!("irreducible: {}", w.is_irreducible());
                println!("classical: {}", w.is_classical());
                let text: Vec<String> = bigons
                    .iter()
                    .map(|b| format!("({},{},index {})", b.first, b.second, b.index))
                    .collect();
                println!("bigons: {}", text.join(" "));
            }
            Ok(0)
        }
        Command::OrbitCheck { flavor, x, y } => {
            let flavor: OrbitFlavor = flavor.parse()?;
            let x = ColorVector::parse(&x)?;
            let y = ColorVector::parse(&y)?;
            let verdict = membership(&x, &y, flavor)?;
            if json_mode {
                println!(
                    "{}",
                    json!({ "member": verdict.is_member(), "reason": verdict.reason() })
                );
            } else {
                println!("member: {}", verdict.is_member());
                println!("reason: {}", verdict.reason());
            }
            Ok(0)
        }
        Command::Witness { flavor, x, y } => {
            let flavor: OrbitFlavor = flavor.parse()?;
            let x = ColorVector::parse(&x)?;
            let y = ColorVector::parse(&y)?;
            let w = match (flavor.world, flavor.pure) {
                (World::Virtual, _) => witness_virtual(&x, &y)?,
                (World::Classical, false) => witness_classical(&x, &y, flavor.irreducible)?,
                (World::Classical, true) => {
                    witness_classical_pure(&x, &y, flavor.irreducible)?
                }
            };
            let verified = act(&x, &w)? == y
                && (!flavor.pure || w.is_pure())
                && (!flavor.irreducible || w.is_irreducible());
            let irreducible = w.is_irreducible();
            let pure = w.is_pure();
            if json_mode {
                let mut value = word_json(&w);
                value["verified"] = json!(verified);
                value["irreducible"] = json!(irreducible);
                value["pure"] = json!(pure);
                println!("{value}");
            } else {
                println!("word: {w}");
                println!("verified: {verified}");
                println!("irreducible: {irreducible}");
                println!("pure: {pure}");
            }
            if verified {
                Ok(0)
            } else {
                eprintln!("error: witness failed self-verification");
                Ok(2)
            }
        }
        Command::ClosureCheck { word } => {
            let w = word.parse()?;
            let verdict = closure_admits(&w);
            if json_mode {
                let cycles: Vec<_> = verdict
                    .cycle_report
                    .iter()
                    .map(|c| json!({ "positions": c.positions, "sum": c.sum }))
                    .collect();
                println!(
                    "{}",
                    json!({
                        "admits": verdict.admits,
                        "witness": verdict.witness.as_ref().map(|v| v.0.clone()),
                        "cycles": cycles,
                    })
                );
            } else {
                println!("admits: {}", verdict.admits);
                if let Some(fixed) = &verdict.witness {
                    println!("witness: {fixed}");
                }
                for c in &verdict.cycle_report {
                    let positions: Vec<String> =
                        c.positions.iter().map(|p| p.to_string()).collect();
                    println!("cycle {}: sum {}", positions.join(","), c.sum);
                }
            }
            Ok(0)
        }
        Command::Gen { family } => {
            let w = match family {
                GenFamily::Torus { p, q } => torus(p, q)?,
                GenFamily::Weaving { p, q } => weaving(p, q)?,
                GenFamily::Permbraid { image } => {
                    let images: Vec<usize> = image
                        .split(',')
                        .map(|part| {
                            part.trim().parse::<usize>().map_err(|_| {
                                Error::InvalidArgument(format!("bad position `{part}`"))
                            })
                        })
                        .collect::<Result<_>>()?;
                    permutation_braid(&Permutation::from_images_one_based(&images)?)
                }
            };
            if json_mode {
                println!("{}", word_json(&w));
            } else {
                println!("degree: {}", w.degree());
                println!("word: {w}");
            }
            Ok(0)
        }
        Command::Oracle { task } => {
            let OracleTask::Reachable {
                degree,
                world,
                max_len,
                from,
                pure,
                irreducible,
                box_bound,
            } = task;
            let world: World = world.parse()?;
            let mut spec = SearchSpec::new(degree, world, max_len);
            spec.require_pure = pure;
            spec.require_irreducible = irreducible;
            spec.box_bound = box_bound;
            let x = ColorVector::parse(&from)?;
            let set = reachable_set(&x, &spec)?;
            if json_mode {
                let vectors: Vec<_> = set.iter().map(|v| v.0.clone()).collect();
                println!("{}", json!({ "count": set.len(), "vectors": vectors }));
            } else {
                for v in &set {
                    println!("{v}");
                }
            }
            Ok(0)
        }
        Command::Render { word, out } => {
            let w = word.parse()?;
            let svg = render_svg(&w);
            std::fs::write(&out, svg)
                .map_err(|e| Error::InvalidArgument(format!("cannot write {out:?}: {e}")))?;
            if json_mode {
                println!("{}", json!({ "written": out }));
            } else {
                println!("written: {}", out.display());
            }
            Ok(0)
        }
    }
}
