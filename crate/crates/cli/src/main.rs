//! `gpreps`: command-line front end for systems of general position
//! representatives, Hall-type conditions and the associated complexes.
//!
//! Exit codes: 0 found / holds, 1 not found / violated, 2 condition
//! violated (greedy ordering phase), 3 input error, 4 budget exceeded.

mod doc;
mod expr;
mod witness;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gpreps_core::homology::{betti_up_to, is_homologically_k_connected};
use gpreps_core::solver::{
    self, bound_a, bound_b, bound_f_upper, check_condition, BoundTable, ConditionMode,
    GreedyOptions, MAX_EXHAUSTIVE_SETS,
};
use gpreps_core::{complex::QStarViolation, Error as CoreError};
use gpreps_core::{HomologyOptions, PointFamily, SgprResult, SgprStatus, SimplicialComplex};
use num_bigint::BigUint;
use serde_json::{json, Value};

use doc::{ComplexDocument, FamilyDocument, NerveDocument};
use expr::BoundExpr;

const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_CONDITION: u8 = 2;
const EXIT_INPUT: u8 = 3;
const EXIT_BUDGET: u8 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "gpreps",
    version,
    about = "Systems of general position representatives"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Emit machine-readable JSON (the default).
    #[arg(long, global = true, conflicts_with = "human")]
    json: bool,
    /// Emit a human-readable summary instead of JSON.
    #[arg(long, global = true)]
    human: bool,
    /// Maximum number of faces any complex enumeration may produce.
    #[arg(long, global = true, env = "GPREPS_BUDGET_FACES", default_value_t = 1 << 20)]
    budget_faces: usize,
    /// Maximum number of search nodes for the exhaustive solver.
    #[arg(
        long,
        global = true,
        env = "GPREPS_BUDGET_NODES",
        default_value_t = 10_000_000
    )]
    budget_nodes: usize,
    /// Compute homology ranks modulo this prime (cross-checked, exact on
    /// disagreement).
    #[arg(long, global = true, env = "GPREPS_MOD_PRIME")]
    mod_prime: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Find a system of general position representatives.
    Solve {
        /// Family document, or `-` for standard input.
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Greedy only: when the ordering phase fails, try every ordering
        /// of at most eight sets before giving up.
        #[arg(long)]
        try_all_orders: bool,
    },
    /// Evaluate the condition φ(∪_{i∈I} X_i) >= f(|I|) over subsets I.
    Check {
        input: PathBuf,
        /// `A`, `B`, `hall`, `g`, or an expression in `k` and `d` such as
        /// `d*C(2*k+2,d)+1`.
        #[arg(long, default_value = "B")]
        bound: String,
        /// Check this many random subsets instead of all of them.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Build or analyse a simplicial complex.
    Complex {
        /// Family document for `gpc` and `independence`, labeled family for
        /// `nerve`, complex document otherwise.
        input: PathBuf,
        #[command(subcommand)]
        op: ComplexOp,
    },
    /// Emit a family satisfying φ(∪_{i∈I} X_i) >= |I| with no representatives.
    Counterexample {
        #[arg(long, short = 'd')]
        d: usize,
        #[arg(long, short = 'm')]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed_param: u64,
    },
    /// Search for point sets with a given φ whose general position complex
    /// has low-degree homology.
    WitnessSearch {
        #[arg(long, short = 'd', default_value_t = 2)]
        d: usize,
        #[arg(long)]
        target_phi: usize,
        #[arg(long, short = 'k')]
        k: usize,
        /// Number of configurations to try.
        #[arg(long, default_value_t = 1000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        max_extra: usize,
    },
    /// Print A, B, g, f and h bounds over ranges of d and k.
    Bounds {
        #[arg(long, default_value_t = 1)]
        d_min: u64,
        #[arg(long, default_value_t = 3)]
        d_max: u64,
        #[arg(long, default_value_t = 1)]
        k_min: u64,
        #[arg(long, default_value_t = 10)]
        k_max: u64,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Greedy,
    Exhaustive,
    Matroid,
    Colorful,
}

#[derive(Subcommand, Debug, Clone)]
enum ComplexOp {
    /// General position complex G(X) of the union of all sets.
    Gpc {
        #[arg(long)]
        max_card: Option<usize>,
    },
    /// Independence complex M(X) of the union of all sets.
    Independence,
    /// The j-completion.
    Completion {
        j: isize,
        #[arg(long)]
        max_card: Option<usize>,
    },
    /// Neighborhood complex Γ_K(v), with d = dim K.
    Gamma { v: usize },
    /// Star st_K(v).
    Star { v: usize },
    /// Nerve of a labeled family of complexes.
    Nerve,
    /// The q-star property.
    Qstar { q: usize },
    /// Reduced rational Betti numbers in degrees 0..=k.
    Betti { k: usize },
}

/// A finished command: JSON payload, human text and exit code.
struct Outcome {
    json: Value,
    human: String,
    code: u8,
}

/// A failed command with the exit code it maps to.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        let code = match error.downcast_ref::<CoreError>() {
            Some(CoreError::BudgetExceeded { .. }) => EXIT_BUDGET,
            _ => EXIT_INPUT,
        };
        Failure { code, error }
    }
}

impl From<CoreError> for Failure {
    fn from(error: CoreError) -> Self {
        anyhow::Error::from(error).into()
    }
}

type CmdResult = Result<Outcome, Failure>;

fn load_family(path: &Path) -> anyhow::Result<PointFamily> {
    let text = doc::read_input(path)?;
    doc::parse_document::<FamilyDocument>(&text, "family")?.to_family()
}

fn load_complex(path: &Path) -> anyhow::Result<SimplicialComplex> {
    let text = doc::read_input(path)?;
    doc::parse_document::<ComplexDocument>(&text, "complex")?.to_complex()
}

fn status_name(s: SgprStatus) -> &'static str {
    match s {
        SgprStatus::Found => "found",
        SgprStatus::NotFound => "not_found",
        SgprStatus::ConditionViolated => "condition_violated",
    }
}

fn status_code(s: SgprStatus) -> u8 {
    match s {
        SgprStatus::Found => EXIT_OK,
        SgprStatus::NotFound => EXIT_NEGATIVE,
        SgprStatus::ConditionViolated => EXIT_CONDITION,
    }
}

fn result_json(r: &SgprResult, method: &str, note: Option<&str>) -> Value {
    json!({
        "status": status_name(r.status),
        "method": method,
        "representatives": r.representatives.iter().map(|rep| json!({
            "set": rep.set,
            "index": rep.index,
            "point": doc::point_coords(&rep.point),
        })).collect::<Vec<_>>(),
        "violation": r.violation.as_ref().map(|v| json!({
            "subset": v.subset,
            "phi": v.phi,
            "required": v.required.to_string(),
        })),
        "note": note,
    })
}

fn result_human(r: &SgprResult, method: &str, note: Option<&str>) -> String {
    let mut out = format!("{} ({method})\n", status_name(r.status));
    for rep in &r.representatives {
        out.push_str(&format!(
            "  X_{}[{}] = {}\n",
            rep.set + 1,
            rep.index,
            rep.point
        ));
    }
    if let Some(v) = &r.violation {
        let sets: Vec<String> = v.subset.iter().map(|i| format!("X_{}", i + 1)).collect();
        out.push_str(&format!(
            "  unplaced sets {{{}}}: best φ = {}, need {}\n",
            sets.join(", "),
            v.phi,
            v.required
        ));
    }
    if let Some(n) = note {
        out.push_str(&format!("  note: {n}\n"));
    }
    out
}

fn cmd_solve(g: &Global, input: &Path, method: Method, try_all_orders: bool) -> CmdResult {
    let family = load_family(input)?;
    let greedy_opts = GreedyOptions { try_all_orders };
    let (result, used, note) = match method {
        Method::Greedy => (
            solver::solve_greedy_with(&family, &greedy_opts),
            "greedy",
            None,
        ),
        Method::Exhaustive => (
            solver::solve_exhaustive(&family, g.budget_nodes)?,
            "exhaustive",
            None,
        ),
        Method::Matroid => (
            solver::solve_matroid_intersection(&family)?,
            "matroid",
            None,
        ),
        Method::Colorful => (solver::solve_colorful(&family)?, "colorful", None),
        Method::Auto => {
            if family.len() <= family.dim() + 1 {
                (
                    solver::solve_matroid_intersection(&family)?,
                    "matroid",
                    None,
                )
            } else {
                let greedy = solver::solve_greedy_with(&family, &greedy_opts);
                if greedy.is_found() {
                    (greedy, "greedy", None)
                } else {
                    match solver::solve_exhaustive(&family, g.budget_nodes) {
                        Ok(r) => (r, "exhaustive", None),
                        Err(CoreError::BudgetExceeded { .. }) => (
                            greedy,
                            "greedy",
                            Some("exhaustive fallback exceeded the node budget"),
                        ),
                        Err(e) => return Err(e.into()),
                    }
                }
            }
        }
    };
    Ok(Outcome {
        json: result_json(&result, used, note),
        human: result_human(&result, used, note),
        code: status_code(result.status),
    })
}

enum Bound {
    A,
    B,
    Hall,
    G,
    Expr(BoundExpr),
}

impl Bound {
    fn parse(text: &str) -> anyhow::Result<Self> {
        Ok(match text {
            "A" | "a" => Bound::A,
            "B" | "b" => Bound::B,
            "hall" | "Hall" => Bound::Hall,
            "g" | "G" | "f" => Bound::G,
            other => Bound::Expr(BoundExpr::parse(other)?),
        })
    }

    fn eval(&self, k: usize, d: usize) -> anyhow::Result<BigUint> {
        Ok(match self {
            Bound::A => bound_a(d as u64, k as u64),
            Bound::B => bound_b(d as u64, k as u64),
            Bound::Hall => BigUint::from(k),
            Bound::G => bound_f_upper(d as u64, k as u64)?,
            Bound::Expr(e) => e.eval(k, d)?,
        })
    }
}

fn cmd_check(input: &Path, bound_text: &str, samples: Option<usize>, seed: u64) -> CmdResult {
    let family = load_family(input)?;
    let bound = Bound::parse(bound_text)?;
    let d = family.dim();
    let m = family.len();
    let table: Vec<BigUint> = (0..=m)
        .map(|k| bound.eval(k.max(1), d))
        .collect::<anyhow::Result<_>>()?;
    let mode = match samples {
        Some(samples) => ConditionMode::Sampled { samples, seed },
        None => {
            if m > MAX_EXHAUSTIVE_SETS {
                return Err(anyhow!(
                    "{m} sets: checking all subsets needs at most {MAX_EXHAUSTIVE_SETS}; use --samples"
                )
                .into());
            }
            ConditionMode::AllSubsets
        }
    };
    let report = check_condition(&family, |k| table[k].clone(), mode)?;
    let holds = report.holds();
    let rows: Vec<Value> = report
        .verdicts
        .iter()
        .map(|v| {
            json!({
                "subset": v.subset,
                "phi": v.phi,
                "required": v.required.to_string(),
                "holds": v.holds,
            })
        })
        .collect();
    let first = report.first_violation.map(|i| rows[i].clone());
    let mut human = format!(
        "bound {bound_text}: {} ({} subsets checked)\n",
        if holds { "holds" } else { "violated" },
        report.verdicts.len()
    );
    if let Some(i) = report.first_violation {
        let v = &report.verdicts[i];
        human.push_str(&format!(
            "  first violation: I = {:?}, φ = {}, need {}\n",
            v.subset.iter().map(|i| i + 1).collect::<Vec<_>>(),
            v.phi,
            v.required
        ));
    }
    Ok(Outcome {
        json: json!({
            "bound": bound_text,
            "d": d,
            "m": m,
            "mode": if samples.is_some() { "sampled" } else { "all_subsets" },
            "holds": holds,
            "subsets": rows,
            "first_violation": first,
        }),
        human,
        code: if holds { EXIT_OK } else { EXIT_NEGATIVE },
    })
}

fn complex_outcome(k: &SimplicialComplex, label: &str) -> Outcome {
    let doc = ComplexDocument::from_complex(k);
    let counts = k.face_counts();
    let human = format!(
        "{label}: {} vertices, dim {}, f-vector {:?}\n  facets {:?}\n",
        k.n_vertices(),
        k.dim(),
        counts.get(1..).unwrap_or(&[]),
        doc.facets
    );
    Outcome {
        json: json!({
            "n_vertices": doc.n_vertices,
            "facets": doc.facets,
            "dim": k.dim(),
            "f_vector": counts,
        }),
        human,
        code: EXIT_OK,
    }
}

fn cmd_complex(g: &Global, input: &Path, op: &ComplexOp) -> CmdResult {
    let homology = HomologyOptions {
        face_budget: g.budget_faces,
        modulus: g.mod_prime,
    };
    match op {
        ComplexOp::Gpc { max_card } => {
            let family = load_family(input)?;
            let (x, _) = family.disjoint_union();
            let cap = max_card.unwrap_or(x.len());
            let k = solver::general_position_complex_with_budget(&x, cap, g.budget_faces)?;
            Ok(complex_outcome(&k, "general position complex"))
        }
        ComplexOp::Independence => {
            let family = load_family(input)?;
            let (x, _) = family.disjoint_union();
            let k = solver::independence_complex_with_budget(&x, g.budget_faces)?;
            Ok(complex_outcome(&k, "independence complex"))
        }
        ComplexOp::Completion { j, max_card } => {
            let k = load_complex(input)?;
            let cap = max_card.unwrap_or(k.n_vertices());
            let out = k.completion_with_budget(*j, cap, g.budget_faces)?;
            Ok(complex_outcome(&out, &format!("{j}-completion")))
        }
        ComplexOp::Gamma { v } => {
            let k = load_complex(input)?;
            let out = k.neighborhood(*v, k.dim())?;
            Ok(complex_outcome(
                &out,
                &format!("neighborhood complex of {v}"),
            ))
        }
        ComplexOp::Star { v } => {
            let k = load_complex(input)?;
            Ok(complex_outcome(&k.star(*v)?, &format!("star of {v}")))
        }
        ComplexOp::Nerve => {
            let text = doc::read_input(input)?;
            let fam = doc::parse_document::<NerveDocument>(&text, "labeled family")?.to_family()?;
            let nerve = fam.nerve();
            let mut out = complex_outcome(&nerve, "nerve");
            let labels: Vec<&str> = fam.members().iter().map(|(l, _)| l.as_str()).collect();
            out.json["labels"] = json!(labels);
            out.human.push_str(&format!("  vertices {labels:?}\n"));
            Ok(out)
        }
        ComplexOp::Qstar { q } => {
            let k = load_complex(input)?;
            let report = k.q_star(*q)?;
            let violation = report.violation.map(|v| match v {
                QStarViolation::TooFewVertices { have } => {
                    json!({"kind": "too_few_vertices", "vertices": have})
                }
                QStarViolation::Uncovered(y) => {
                    json!({"kind": "uncovered", "y": y.vertices().collect::<Vec<_>>()})
                }
            });
            let extenders: Vec<Value> = report
                .extenders
                .iter()
                .map(|(y, v)| json!({"y": y.vertices().collect::<Vec<_>>(), "v": v}))
                .collect();
            let human = format!(
                "{q}-star: {}{}\n",
                report.holds,
                violation
                    .as_ref()
                    .map(|v| format!(" ({v})"))
                    .unwrap_or_default()
            );
            Ok(Outcome {
                json: json!({
                    "q": q,
                    "dim": k.dim(),
                    "holds": report.holds,
                    "violation": violation,
                    "extenders": extenders,
                }),
                human,
                code: if report.holds { EXIT_OK } else { EXIT_NEGATIVE },
            })
        }
        ComplexOp::Betti { k: up_to } => {
            let k = load_complex(input)?;
            let profile = betti_up_to(&k, *up_to, &homology)?;
            let connected = is_homologically_k_connected(&k, *up_to as isize, &homology)?;
            Ok(Outcome {
                human: format!(
                    "reduced Betti numbers β̃_0..β̃_{up_to}: {:?}{}\n  homologically {up_to}-connected: {connected}\n",
                    profile.betti,
                    if profile.complete { " (complete)" } else { "" }
                ),
                json: json!({
                    "betti": profile.betti,
                    "up_to": up_to,
                    "complete": profile.complete,
                    "euler_partial": profile.euler_partial,
                    "homologically_connected": connected,
                }),
                code: EXIT_OK,
            })
        }
    }
}

fn cmd_counterexample(d: usize, m: usize, seed_param: u64) -> CmdResult {
    let family = solver::counterexample_family(d, m, seed_param)?;
    let doc = FamilyDocument::from_family(&family);
    let mut human = format!("d = {d}, m = {m}\n");
    for (i, set) in family.sets().iter().enumerate() {
        let pts: Vec<String> = set.iter().map(|p| p.to_string()).collect();
        human.push_str(&format!("  X_{} = {{{}}}\n", i + 1, pts.join(", ")));
    }
    Ok(Outcome {
        json: serde_json::to_value(&doc).context("serializing the family")?,
        human,
        code: EXIT_OK,
    })
}

fn cmd_witness(g: &Global, params: witness::SearchParams) -> CmdResult {
    let params = witness::SearchParams {
        homology: HomologyOptions {
            face_budget: g.budget_faces,
            modulus: g.mod_prime,
        },
        ..params
    };
    let report = witness::search(&params)?;
    let human = match &report.witness {
        Some(w) => format!(
            "witness after {} configurations: φ = {}, β̃ = {:?}, {} points\n",
            report.tried,
            w.phi,
            w.betti,
            w.points.len()
        ),
        None => format!(
            "none found within budget ({} tried, {} with φ = {})\n",
            report.tried, report.examined, report.target_phi
        ),
    };
    Ok(Outcome {
        json: serde_json::to_value(&report).context("serializing the report")?,
        human,
        code: EXIT_OK,
    })
}

fn cmd_bounds(d_min: u64, d_max: u64, k_min: u64, k_max: u64) -> CmdResult {
    let table = BoundTable::new(d_min..=d_max, k_min..=k_max)?;
    let rows: Vec<Value> = table
        .rows
        .iter()
        .map(|r| {
            json!({
                "d": r.d,
                "k": r.k,
                "A": r.a.to_string(),
                "B": r.b.to_string(),
                "g_upper": r.g_upper.to_string(),
                "f_upper": r.f_upper.to_string(),
                "h_upper": r.h_upper.to_string(),
            })
        })
        .collect();
    let mut human = format!(
        "{:>3} {:>3} {:>12} {:>14} {:>14} {:>14} {:>14}\n",
        "d", "k", "A", "B", "g", "f", "h(d+1)"
    );
    for r in &table.rows {
        human.push_str(&format!(
            "{:>3} {:>3} {:>12} {:>14} {:>14} {:>14} {:>14}\n",
            r.d, r.k, r.a, r.b, r.g_upper, r.f_upper, r.h_upper
        ));
    }
    Ok(Outcome {
        json: json!({ "rows": rows }),
        human,
        code: EXIT_OK,
    })
}

fn run(cli: &Cli) -> CmdResult {
    let g = &cli.global;
    match &cli.command {
        Command::Solve {
            input,
            method,
            try_all_orders,
        } => cmd_solve(g, input, *method, *try_all_orders),
        Command::Check {
            input,
            bound,
            samples,
            seed,
        } => cmd_check(input, bound, *samples, *seed),
        Command::Complex { input, op } => cmd_complex(g, input, op),
        Command::Counterexample { d, m, seed_param } => cmd_counterexample(*d, *m, *seed_param),
        Command::WitnessSearch {
            d,
            target_phi,
            k,
            budget,
            seed,
            max_extra,
        } => cmd_witness(
            g,
            witness::SearchParams {
                d: *d,
                target_phi: *target_phi,
                k: *k,
                budget: *budget,
                seed: *seed,
                max_extra: *max_extra,
                homology: HomologyOptions::default(),
            },
        ),
        Command::Bounds {
            d_min,
            d_max,
            k_min,
            k_max,
        } => cmd_bounds(*d_min, *d_max, *k_min, *k_max),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let human = cli.global.human;
    match run(&cli) {
        Ok(out) => {
            if human {
                print!("{}", out.human);
            } else {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("JSON values serialize")
                );
            }
            ExitCode::from(out.code)
        }
        Err(Failure { code, error }) => {
            if human {
                eprintln!("error: {error:#}");
            } else {
                let kind = if code == EXIT_BUDGET {
                    "budget_exceeded"
                } else {
                    "input_error"
                };
                println!("{}", json!({ "error": format!("{error:#}"), "kind": kind }));
            }
            ExitCode::from(code)
        }
    }
}
