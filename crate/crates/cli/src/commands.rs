//! Subcommand dispatch and structured output documents.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use orbitgames_core::catalog::{fixture, fixture_names};
use orbitgames_core::{
    becker_arena, becker_embeddable, becker_digraph, cli_obstruction_check, hjorth_arena,
    hjorth_graph, hjorth_isomorphic, local_orbit, relation_at_rank, solve_closed_game,
    turbulence_report, GroupAction, IdxSet, Player,
};

use crate::doc::{doc_from_action, InstanceDoc};
use crate::dot::emit_dot;
use orbitgames_core::sweeps;
use crate::CliError;

#[derive(Parser)]
#[command(
    name = "orbitgames",
    about = "Solve Becker and Hjorth games on finite instances",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Becker,
    Hjorth,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Structured,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Spaces,
    Logic,
    Sequences,
    Diag,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GameArg {
    Becker,
    Hjorth,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    #[value(name = "I", alias = "i")]
    I,
    #[value(name = "II", alias = "ii")]
    II,
}

#[derive(Subcommand)]
pub enum Command {
    /// Check every invariant of the sections in an instance document.
    Validate { input: PathBuf },
    /// Print the orbit partition of the action.
    Orbits { input: PathBuf },
    /// Solve the Becker embedding game for one ordered pair or all pairs.
    Becker {
        input: PathBuf,
        #[arg(num_args = 0..=2)]
        pair: Vec<usize>,
        #[arg(long, conflicts_with = "pair")]
        all: bool,
    },
    /// Solve the Hjorth isomorphism game for one pair or all pairs.
    Hjorth {
        input: PathBuf,
        #[arg(num_args = 0..=2)]
        pair: Vec<usize>,
        #[arg(long, conflicts_with = "pair")]
        all: bool,
    },
    /// Compute the local orbit of X inside the window U under steps from V.
    LocalOrbit {
        input: PathBuf,
        x: usize,
        /// Comma-separated point indices.
        u: String,
        /// Comma-separated group element indices.
        v: String,
    },
    /// Per-point turbulence analysis.
    Turbulence { input: PathBuf },
    /// Emit the orbit-quotient graph.
    Graphs {
        input: PathBuf,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_enum, default_value = "structured")]
        format: FormatArg,
    },
    /// Run the obstruction criterion over the invariant dense sets.
    Obstruction { input: PathBuf },
    /// Rank hierarchy of one pair's game.
    Ranks {
        input: PathBuf,
        x: usize,
        y: usize,
        #[arg(long, value_enum, default_value = "hjorth")]
        game: GameArg,
    },
    /// Sweep a model family against its brute-force oracle.
    OracleDiff {
        #[arg(long, value_enum)]
        family: FamilyArg,
    },
    /// Emit a bundled instance ("list" prints the available names).
    Gen {
        #[arg(long)]
        catalog: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Play one game interactively against the solved strategy.
    Play {
        input: PathBuf,
        x: usize,
        y: usize,
        #[arg(long = "as", value_enum)]
        side: SideArg,
        #[arg(long, value_enum, default_value = "becker")]
        game: GameArg,
    },
}

#[derive(Serialize)]
struct ViolationOut {
    scope: String,
    rule: String,
    witness: String,
}

#[derive(Serialize)]
struct ValidateOut {
    valid: bool,
    violations: Vec<ViolationOut>,
}

#[derive(Serialize)]
struct OrbitsOut {
    orbits: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct BeckerOut {
    x: usize,
    y: usize,
    ii_wins: bool,
    witness: Option<usize>,
}

#[derive(Serialize)]
struct HjorthOut {
    x: usize,
    y: usize,
    ii_wins: bool,
}

#[derive(Serialize)]
struct PairsOut<T: Serialize> {
    pairs: Vec<T>,
}

#[derive(Serialize)]
struct LocalOrbitOut {
    x: usize,
    u: Vec<usize>,
    v: Vec<usize>,
    local_orbit: Vec<usize>,
}

#[derive(Serialize)]
struct WitnessFailureOut {
    u: Vec<usize>,
    v: Vec<usize>,
}

#[derive(Serialize)]
struct PointTurbulenceOut {
    point: usize,
    dense_orbit: bool,
    turbulent: bool,
    meager_orbit: bool,
    witness_failures: Vec<WitnessFailureOut>,
}

#[derive(Serialize)]
struct TurbulenceOut {
    points: Vec<PointTurbulenceOut>,
    preturbulent: bool,
    turbulent_action: bool,
}

#[derive(Serialize)]
struct GraphOut {
    kind: String,
    vertices: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct ObstructionCaseOut {
    orbits: Vec<usize>,
    points: Vec<usize>,
    witness: Option<(usize, usize)>,
}

#[derive(Serialize)]
struct ObstructionOut {
    verdict: bool,
    cases: Vec<ObstructionCaseOut>,
}

#[derive(Serialize)]
struct RanksOut {
    x: usize,
    y: usize,
    game: String,
    ii_wins: bool,
    rank: Option<u32>,
    n_positions: usize,
    related_at: Vec<bool>,
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("output serializes"));
}

fn read_doc(path: &Path) -> Result<InstanceDoc, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    InstanceDoc::parse(&text)
}

/// Loads the action sections and refuses to analyze an invalid instance.
fn load_valid_action(path: &Path) -> Result<GroupAction, CliError> {
    let doc = read_doc(path)?;
    let action = doc.to_action()?;
    let report = action.validate();
    if !report.is_valid() {
        return Err(CliError::Semantic(format!(
            "instance fails validation:\n{report}"
        )));
    }
    Ok(action)
}

fn parse_index_list(text: &str, carrier: usize, what: &str) -> Result<IdxSet, CliError> {
    let mut set = IdxSet::EMPTY;
    for part in text.split(',').filter(|p| !p.is_empty()) {
        let i: usize = part
            .trim()
            .parse()
            .map_err(|_| CliError::Semantic(format!("{what}: bad index {part:?}")))?;
        if i >= carrier {
            return Err(CliError::Semantic(format!(
                "{what}: index {i} out of range 0..{carrier}"
            )));
        }
        set.insert(i);
    }
    Ok(set)
}

fn check_point(action: &GroupAction, p: usize) -> Result<(), CliError> {
    if p >= action.space().n_points() {
        return Err(CliError::Semantic(format!(
            "point {p} out of range 0..{}",
            action.space().n_points()
        )));
    }
    Ok(())
}

fn pair_args(pair: &[usize], all: bool) -> Result<Option<(usize, usize)>, CliError> {
    match (pair.len(), all) {
        (2, false) => Ok(Some((pair[0], pair[1]))),
        (0, true) => Ok(None),
        _ => Err(CliError::Semantic(
            "give exactly two points or --all".to_string(),
        )),
    }
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Validate { input } => {
            let doc = read_doc(&input)?;
            let mut violations = Vec::new();
            if doc.action.is_some() {
                violations.extend(doc.to_action()?.validate().violations);
            } else {
                if doc.space.is_some() {
                    violations.extend(doc.to_space()?.violations());
                }
                if doc.group.is_some() {
                    violations.extend(doc.to_group()?.violations());
                }
            }
            if doc.groupoid.is_some() {
                violations.extend(doc.to_groupoid()?.validate());
            }
            if doc.structures.is_some() {
                doc.to_structures()?;
            }
            if doc.sequences.is_some() {
                doc.to_sequences()?;
            }
            let out = ValidateOut {
                valid: violations.is_empty(),
                violations: violations
                    .iter()
                    .map(|v| ViolationOut {
                        scope: v.scope.to_string(),
                        rule: v.rule.to_string(),
                        witness: v.witness.clone(),
                    })
                    .collect(),
            };
            print_json(&out);
            if !out.valid {
                return Err(CliError::ValidationFailed);
            }
            Ok(())
        }
        Command::Orbits { input } => {
            let action = load_valid_action(&input)?;
            let partition = action.orbit_partition();
            print_json(&OrbitsOut {
                orbits: partition.blocks.iter().map(|b| b.to_vec()).collect(),
            });
            Ok(())
        }
        Command::Becker { input, pair, all } => {
            let action = load_valid_action(&input)?;
            let render = |x: usize, y: usize| {
                let v = becker_embeddable(&action, x, y);
                BeckerOut {
                    x,
                    y,
                    ii_wins: v.ii_wins,
                    witness: v.witness,
                }
            };
            match pair_args(&pair, all)? {
                Some((x, y)) => {
                    check_point(&action, x)?;
                    check_point(&action, y)?;
                    print_json(&render(x, y));
                }
                None => {
                    let n = action.space().n_points();
                    let pairs: Vec<(usize, usize)> =
                        (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
                    let outs =
                        sweeps::parallel_map(&pairs, sweeps::worker_count(), |&(x, y)| {
                            render(x, y)
                        });
                    print_json(&PairsOut { pairs: outs });
                }
            }
            Ok(())
        }
        Command::Hjorth { input, pair, all } => {
            let action = load_valid_action(&input)?;
            let render = |x: usize, y: usize| {
                let v = hjorth_isomorphic(&action, x, y);
                HjorthOut {
                    x,
                    y,
                    ii_wins: v.ii_wins,
                }
            };
            match pair_args(&pair, all)? {
                Some((x, y)) => {
                    check_point(&action, x)?;
                    check_point(&action, y)?;
                    print_json(&render(x, y));
                }
                None => {
                    let n = action.space().n_points();
                    let pairs: Vec<(usize, usize)> =
                        (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
                    let outs =
                        sweeps::parallel_map(&pairs, sweeps::worker_count(), |&(x, y)| {
                            render(x, y)
                        });
                    print_json(&PairsOut { pairs: outs });
                }
            }
            Ok(())
        }
        Command::LocalOrbit { input, x, u, v } => {
            let action = load_valid_action(&input)?;
            check_point(&action, x)?;
            let u = parse_index_list(&u, action.space().n_points(), "U")?;
            let v = parse_index_list(&v, action.group().order(), "V")?;
            if !u.contains(x) {
                return Err(CliError::Semantic(format!("point {x} must lie in U")));
            }
            let lo = local_orbit(&action, x, u, v);
            print_json(&LocalOrbitOut {
                x,
                u: u.to_vec(),
                v: v.to_vec(),
                local_orbit: lo.to_vec(),
            });
            Ok(())
        }
        Command::Turbulence { input } => {
            let action = load_valid_action(&input)?;
            let report = turbulence_report(&action);
            print_json(&TurbulenceOut {
                points: report
                    .points
                    .iter()
                    .map(|p| PointTurbulenceOut {
                        point: p.point,
                        dense_orbit: p.dense_orbit,
                        turbulent: p.turbulent,
                        meager_orbit: p.meager_orbit,
                        witness_failures: p
                            .witness_failures
                            .iter()
                            .map(|(u, v)| WitnessFailureOut {
                                u: u.to_vec(),
                                v: v.to_vec(),
                            })
                            .collect(),
                    })
                    .collect(),
                preturbulent: report.preturbulent,
                turbulent_action: report.turbulent_action,
            });
            Ok(())
        }
        Command::Graphs {
            input,
            kind,
            format,
        } => {
            let action = load_valid_action(&input)?;
            let graph = match kind {
                KindArg::Becker => becker_digraph(&action),
                KindArg::Hjorth => hjorth_graph(&action),
            };
            match format {
                FormatArg::Dot => print!("{}", emit_dot(&graph)),
                FormatArg::Structured => print_json(&GraphOut {
                    kind: graph.kind.to_string(),
                    vertices: graph.vertices.iter().map(|b| b.to_vec()).collect(),
                    edges: graph.edges.clone(),
                }),
            }
            Ok(())
        }
        Command::Obstruction { input } => {
            let action = load_valid_action(&input)?;
            let report = cli_obstruction_check(&action);
            print_json(&ObstructionOut {
                verdict: report.verdict,
                cases: report
                    .cases
                    .iter()
                    .map(|c| ObstructionCaseOut {
                        orbits: c.orbit_indices.clone(),
                        points: c.points.to_vec(),
                        witness: c.witness,
                    })
                    .collect(),
            });
            Ok(())
        }
        Command::Ranks { input, x, y, game } => {
            let action = load_valid_action(&input)?;
            check_point(&action, x)?;
            check_point(&action, y)?;
            let arena = match game {
                GameArg::Becker => becker_arena(&action, x, y, false),
                GameArg::Hjorth => hjorth_arena(&action, x, y, false),
            };
            let result = solve_closed_game(&arena);
            let results = [result];
            let n_positions = arena.n_positions();
            let related_at: Vec<bool> = (0..=n_positions as u32)
                .map(|alpha| relation_at_rank(&results, alpha)[0])
                .collect();
            print_json(&RanksOut {
                x,
                y,
                game: match game {
                    GameArg::Becker => "becker".to_string(),
                    GameArg::Hjorth => "hjorth".to_string(),
                },
                ii_wins: results[0].ii_wins(),
                rank: results[0].initial_rank(),
                n_positions,
                related_at,
            });
            Ok(())
        }
        Command::OracleDiff { family } => {
            let mismatches = match family {
                FamilyArg::Spaces => sweeps::sweep_spaces(),
                FamilyArg::Logic => sweeps::sweep_logic(),
                FamilyArg::Sequences => sweeps::sweep_sequences(),
                FamilyArg::Diag => sweeps::sweep_diag(),
            };
            if mismatches.is_empty() {
                println!("ok: zero mismatches");
                Ok(())
            } else {
                for m in &mismatches {
                    println!("mismatch: {m}");
                }
                Err(CliError::OracleMismatch(format!(
                    "{} mismatches",
                    mismatches.len()
                )))
            }
        }
        Command::Gen { catalog, out } => {
            if catalog == "list" {
                for name in fixture_names() {
                    println!("{name}");
                }
                return Ok(());
            }
            let inst = fixture(&catalog).ok_or_else(|| {
                CliError::Semantic(format!(
                    "unknown catalog instance {catalog:?}; try `gen --catalog list`"
                ))
            })?;
            let text = doc_from_action(&inst.name, &inst.action).emit();
            match out {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            Ok(())
        }
        Command::Play {
            input,
            x,
            y,
            side,
            game,
        } => {
            let action = load_valid_action(&input)?;
            check_point(&action, x)?;
            check_point(&action, y)?;
            let arena = match game {
                GameArg::Becker => becker_arena(&action, x, y, true),
                GameArg::Hjorth => hjorth_arena(&action, x, y, true),
            };
            println!(
                "{} game for pair ({x}, {y}); {} positions.",
                match game {
                    GameArg::Becker => "Becker embedding",
                    GameArg::Hjorth => "Hjorth isomorphism",
                },
                arena.n_positions()
            );
            let human = match side {
                SideArg::I => Player::I,
                SideArg::II => Player::II,
            };
            let stdin = std::io::stdin();
            let mut stdout = std::io::stdout();
            crate::play::play(&arena, human, stdin.lock(), &mut stdout)
                .map_err(|e| CliError::Io(e.to_string()))?;
            stdout.flush().ok();
            Ok(())
        }
    }
}
