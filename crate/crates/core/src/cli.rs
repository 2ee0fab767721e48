//! Command-line harness: family construction, solvers, and verifiers behind
//! subcommands with reproducible seeds, explicit budgets, and file-based
//! reports.
//!
//! Exit codes: 0 success/property holds, 1 property fails (a recorded
//! scientific outcome, with the counterexample emitted), 2 usage or input
//! error, 3 budget exhausted.

use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::budget::Budget;
use crate::error::{SolveError, WitnessError};
use crate::families::{
    build_borsuk_sample, build_general_kneser, build_kneser, build_mycielski,
    build_rational_complete, build_schrijver, build_u, build_w, rational_canonical_coloring,
    SpherePointSet,
};
use crate::graph::Graph;
use crate::io::{
    self, detect_format, export_graph, read_coloring, read_set_system, GraphFormat,
};
use crate::solve::{
    chromatic_number, circular_chromatic, enumerate_colorings, find_homomorphism, is_wide,
    min_colors_local, Coloring,
};
use crate::witness::{
    find_colorful_bipartite, find_zigzag, spencer_su_partition, sweep_verify,
    sweep_verify_sampled, SweepOptions, SweepOutcome, SweepProperty,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Environment variable supplying a default wall-clock budget in
/// milliseconds when `--budget-ms` is absent.
pub const BUDGET_ENV: &str = "KNESERLAB_BUDGET_MS";

#[derive(Parser, Clone, Debug, Serialize)]
#[command(
    name = "kneserlab",
    version,
    about = "Exact coloring invariants and witness sweeps on Kneser-type graph families"
)]
pub struct CliArgs {
    #[command(subcommand)]
    pub command: Command,
}

/// Family selector plus every family parameter, shared by the subcommands
/// that need a graph. For the `w` family `--t` doubles as the palette size,
/// which is also the only palette those sweeps use.
#[derive(Args, Clone, Debug, Serialize, Default)]
pub struct FamilySpec {
    /// kneser | schrijver | mycielski | u | w | rational | borsuk | general
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    /// U-family parameter, zig-zag length for zigzag contexts.
    #[arg(long)]
    pub r: Option<usize>,
    /// W-family path length, wideness parameter for `wide`.
    #[arg(long)]
    pub s: Option<usize>,
    /// Palette size; also the W-family word length.
    #[arg(long)]
    pub t: Option<u32>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Number of sphere points for the borsuk family.
    #[arg(long)]
    pub points: Option<usize>,
    /// Mycielski level count.
    #[arg(long)]
    pub levels: Option<usize>,
    /// Graph file used as the mycielski base or instead of a family.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Set system JSON for the general family.
    #[arg(long)]
    pub system: Option<PathBuf>,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Args, Clone, Debug, Serialize, Default)]
pub struct BudgetArgs {
    /// Wall-clock budget in milliseconds; defaults to KNESERLAB_BUDGET_MS.
    #[arg(long)]
    pub budget_ms: Option<u64>,
    /// Search-node budget.
    #[arg(long)]
    pub budget_nodes: Option<u64>,
}

impl BudgetArgs {
    pub fn to_budget(&self) -> Budget {
        let ms = self.budget_ms.or_else(|| {
            std::env::var(BUDGET_ENV)
                .ok()
                .and_then(|v| v.parse().ok())
        });
        Budget {
            node_limit: self.budget_nodes,
            time_limit: ms.map(Duration::from_millis),
        }
    }
}

#[derive(Subcommand, Clone, Debug, Serialize)]
pub enum Command {
    /// Construct a graph and export it (DIMACS plus sidecar, or JSON).
    Gen {
        #[command(flatten)]
        family: FamilySpec,
        #[arg(long)]
        out: Option<PathBuf>,
        /// dimacs | json
        #[arg(long, default_value = "dimacs")]
        format: String,
    },
    /// Exact chromatic number.
    Chi {
        #[command(flatten)]
        family: FamilySpec,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Exact circular chromatic number, printed as p/q.
    Chic {
        #[command(flatten)]
        family: FamilySpec,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Colorability defect of a set system.
    Cd {
        /// Set system JSON file.
        #[arg(long)]
        system: PathBuf,
        /// Number of hypergraph colors.
        #[arg(long)]
        m: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Constructive certificate that the 2-colorability defect is at most 3.
    Cd3Cert {
        #[arg(long)]
        system: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search one coloring for a colorful complete bipartite subgraph.
    Colorful {
        #[command(flatten)]
        family: FamilySpec,
        /// Coloring JSON file; defaults to the first canonical t-coloring.
        #[arg(long)]
        coloring: Option<PathBuf>,
        /// Use the rational family's canonical coloring.
        #[arg(long, default_value_t = false)]
        canonical: bool,
        /// Color bipartition, e.g. 2,4/1,3.
        #[arg(long)]
        bipartition: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search one coloring for a zig-zag witness over --r colors.
    Zigzag {
        #[command(flatten)]
        family: FamilySpec,
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long, default_value_t = false)]
        canonical: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Ground-set partition induced by a colorful witness on a general
    /// Kneser graph.
    SpencerSu {
        #[arg(long)]
        system: PathBuf,
        #[arg(long)]
        coloring: Option<PathBuf>,
        /// Palette when deriving the default coloring.
        #[arg(long)]
        t: Option<u32>,
        /// Color blocks B1/B2, e.g. 1,2/3,4.
        #[arg(long)]
        bipartition: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a property over every canonical t-coloring.
    Sweep {
        #[command(flatten)]
        family: FamilySpec,
        /// colorful | zigzag | spencer-su
        #[arg(long)]
        property: String,
        /// Restrict colorful/spencer-su to one bipartition A/B.
        #[arg(long)]
        bipartition: Option<String>,
        /// Check seeded random proper colorings instead of the canonical
        /// enumeration.
        #[arg(long)]
        sample: Option<u64>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Homomorphism from one graph file into another.
    Hom {
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        target: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bounded-palette local chromatic value at palette --t.
    Local {
        #[command(flatten)]
        family: FamilySpec,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Check a coloring for s-wideness.
    Wide {
        #[command(flatten)]
        family: FamilySpec,
        #[arg(long)]
        coloring: PathBuf,
    },
}

/// Short content hash of a run configuration, used to name result
/// directories.
pub fn config_hash(command: &Command) -> String {
    let json = serde_json::to_string(command).expect("config serializes");
    let digest = Sha256::digest(json.as_bytes());
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    hex[..12].to_string()
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Fail(String),
    Budget(String),
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }
}

impl From<crate::error::IoError> for CliError {
    fn from(e: crate::error::IoError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<crate::error::FamilyError> for CliError {
    fn from(e: crate::error::FamilyError) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn need<T: Copy>(value: Option<T>, flag: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::usage(format!("missing required flag --{flag}")))
}

fn build_graph(spec: &FamilySpec) -> Result<Graph, CliError> {
    match spec.family.as_deref() {
        Some("kneser") => Ok(build_kneser(need(spec.n, "n")?, need(spec.k, "k")?)?),
        Some("schrijver") => Ok(build_schrijver(need(spec.n, "n")?, need(spec.k, "k")?)?),
        Some("rational") => Ok(build_rational_complete(
            need(spec.p, "p")?,
            need(spec.q, "q")?,
        )?),
        Some("u") => Ok(build_u(need(spec.m, "m")?, need(spec.r, "r")?)?),
        Some("w") => Ok(build_w(
            need(spec.s, "s")?,
            need(spec.t, "t")? as usize,
        )?),
        Some("mycielski") => {
            let input = spec
                .input
                .as_ref()
                .ok_or_else(|| CliError::usage("mycielski needs --input <graph file>"))?;
            let base = io::import_graph(input, detect_format(input))?;
            Ok(build_mycielski(&base, need(spec.levels, "levels")?)?)
        }
        Some("borsuk") => {
            let d = need(spec.d, "d")?;
            let alpha = need(spec.alpha, "alpha")?;
            let count = need(spec.points, "points")?;
            let points = if d == 2 {
                SpherePointSet::equally_spaced_circle(count)
            } else {
                SpherePointSet::sample_uniform(d, count, spec.seed.unwrap_or(0))
            };
            Ok(build_borsuk_sample(d, alpha, &points)?)
        }
        Some("general") => {
            let path = spec
                .system
                .as_ref()
                .ok_or_else(|| CliError::usage("general needs --system <json file>"))?;
            let system = read_set_system(path)?;
            Ok(build_general_kneser(&system)?)
        }
        Some(other) => Err(CliError::usage(format!("unknown family {other:?}"))),
        None => {
            let input = spec
                .input
                .as_ref()
                .ok_or_else(|| CliError::usage("pass --family or --input"))?;
            Ok(io::import_graph(input, detect_format(input))?)
        }
    }
}

/// Parses a bipartition written as comma lists joined by a slash, e.g.
/// `2,4/1,3`; either side may be empty.
pub fn parse_bipartition(text: &str) -> Result<(Vec<u32>, Vec<u32>), String> {
    let (a, b) = text
        .split_once('/')
        .ok_or_else(|| format!("bipartition {text:?} needs a '/'"))?;
    let parse = |side: &str| -> Result<Vec<u32>, String> {
        if side.trim().is_empty() {
            return Ok(Vec::new());
        }
        side.split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| format!("malformed color {x:?}"))
            })
            .collect()
    };
    Ok((parse(a)?, parse(b)?))
}

fn bipartition_arg(text: &str) -> Result<(Vec<u32>, Vec<u32>), CliError> {
    parse_bipartition(text).map_err(CliError::Usage)
}

/// Default coloring: explicit file, the rational canonical coloring, or the
/// first canonical t-coloring (t defaulting to the chromatic number).
fn resolve_coloring(
    g: &Graph,
    spec: &FamilySpec,
    coloring: &Option<PathBuf>,
    canonical: bool,
    budget: &Budget,
) -> Result<Coloring, CliError> {
    if let Some(path) = coloring {
        return Ok(read_coloring(path)?);
    }
    if canonical {
        let (Some(p), Some(q)) = (spec.p, spec.q) else {
            return Err(CliError::usage(
                "--canonical needs the rational family (--p, --q)",
            ));
        };
        return Ok(rational_canonical_coloring(p, q)?);
    }
    let t = match spec.t {
        Some(t) => t,
        None => chromatic_number(g, budget).map_err(map_solve)?,
    };
    enumerate_colorings(g, t)
        .next()
        .ok_or_else(|| CliError::usage(format!("no proper {t}-coloring exists")))
}

fn map_solve(e: SolveError) -> CliError {
    match e {
        SolveError::Budget { .. }
        | SolveError::BudgetExhausted
        | SolveError::BudgetCircular { .. }
        | SolveError::BudgetLocal { .. } => CliError::Budget(e.to_string()),
        other => CliError::Usage(other.to_string()),
    }
}

fn write_or_print(out: &Option<PathBuf>, body: &str) -> Result<(), CliError> {
    match out {
        Some(path) => {
            if let Some(parent) = path.parent() {
                if !parent.as_os_str().is_empty() {
                    std::fs::create_dir_all(parent)
                        .map_err(|e| CliError::usage(e.to_string()))?;
                }
            }
            std::fs::write(path, body).map_err(|e| CliError::usage(e.to_string()))?;
        }
        None => print!("{body}"),
    }
    Ok(())
}

fn pretty(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("value serializes");
    s.push('\n');
    s
}

/// Whether the instance belongs to the families the colorful theorem is
/// known to cover at this palette; everything else is labeled exploratory.
fn theorem_scope(g: &Graph, t: u32) -> &'static str {
    let prov = g.provenance();
    let param = |key: &str| prov.parameters.get(key).and_then(Value::as_u64);
    let listed = match prov.family.as_str() {
        "kneser" | "schrijver" => match (param("n"), param("k")) {
            (Some(n), Some(k)) => n + 2 >= 2 * k && t as u64 == n + 2 - 2 * k,
            _ => false,
        },
        "w" => param("t") == Some(t as u64),
        "u" => match (param("m"), param("r")) {
            (Some(m), Some(r)) => m == t as u64 + 1 && r == (t as u64 + 3) / 2,
            _ => false,
        },
        "rational" => match (param("p"), param("q")) {
            (Some(p), Some(q)) if q > 0 => {
                let ceil = p.div_ceil(q);
                t as u64 == ceil && (ceil % 2 == 1 || p % q == 0)
            }
            _ => false,
        },
        _ => false,
    };
    if listed {
        "listed"
    } else {
        "exploratory"
    }
}

fn instance_json(g: &Graph, command: &Command) -> Value {
    json!({
        "family": g.provenance().family,
        "parameters": g.provenance().parameters,
        "seed": g.provenance().seed,
        "config": serde_json::to_value(command).expect("config serializes"),
    })
}

fn run_inner(cli: &CliArgs) -> Result<i32, CliError> {
    match &cli.command {
        Command::Gen {
            family,
            out,
            format,
        } => {
            let g = build_graph(family)?;
            let format: GraphFormat = format
                .parse()
                .map_err(CliError::Usage)?;
            match out {
                Some(path) => {
                    export_graph(&g, path, format).map_err(|e| CliError::usage(e.to_string()))?;
                    println!(
                        "wrote {} ({} vertices, {} edges)",
                        path.display(),
                        g.vertex_count(),
                        g.edge_count()
                    );
                }
                None => print!("{}", io::to_dimacs(&g)),
            }
            Ok(EXIT_PASS)
        }
        Command::Chi { family, budget } => {
            let g = build_graph(family)?;
            let chi = chromatic_number(&g, &budget.to_budget()).map_err(map_solve)?;
            println!("{chi}");
            Ok(EXIT_PASS)
        }
        Command::Chic { family, budget } => {
            let g = build_graph(family)?;
            let value = circular_chromatic(&g, &budget.to_budget()).map_err(map_solve)?;
            println!("{value}");
            Ok(EXIT_PASS)
        }
        Command::Cd { system, m, out } => {
            let f = read_set_system(system)?;
            let witness = crate::defect::colorability_defect(&f, *m);
            if let Some(path) = out {
                write_or_print(&Some(path.clone()), &pretty(&witness))?;
            }
            println!("{}", witness.size);
            Ok(EXIT_PASS)
        }
        Command::Cd3Cert { system, out } => {
            let f = read_set_system(system)?;
            let cert = crate::defect::cd3_certificate(&f)
                .map_err(|e| CliError::usage(e.to_string()))?;
            write_or_print(out, &pretty(&cert))?;
            if cert.valid {
                Ok(EXIT_PASS)
            } else {
                Ok(EXIT_FAIL)
            }
        }
        Command::Colorful {
            family,
            coloring,
            canonical,
            bipartition,
            out,
        } => {
            let g = build_graph(family)?;
            let budget = Budget::unlimited();
            let c = resolve_coloring(&g, family, coloring, *canonical, &budget)?;
            let (a, b) = bipartition_arg(bipartition)?;
            let witness = find_colorful_bipartite(&g, &c, &a, &b).map_err(map_witness)?;
            let found = witness.is_some();
            write_or_print(out, &pretty(&json!({ "witness": witness })))?;
            Ok(if found { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Zigzag {
            family,
            coloring,
            canonical,
            out,
        } => {
            let g = build_graph(family)?;
            let r = need(family.r, "r")? as u32;
            let budget = Budget::unlimited();
            let c = resolve_coloring(&g, family, coloring, *canonical, &budget)?;
            let witness = find_zigzag(&g, &c, r).map_err(map_witness)?;
            let found = witness.is_some();
            write_or_print(out, &pretty(&json!({ "witness": witness })))?;
            Ok(if found { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::SpencerSu {
            system,
            coloring,
            t,
            bipartition,
            out,
        } => {
            let f = read_set_system(system)?;
            let g = build_general_kneser(&f)?;
            let spec = FamilySpec {
                t: *t,
                ..Default::default()
            };
            let budget = Budget::unlimited();
            let c = resolve_coloring(&g, &spec, coloring, false, &budget)?;
            let (b1, b2) = bipartition_arg(bipartition)?;
            match spencer_su_partition(&f, &c, &b1, &b2) {
                Ok(partition) => {
                    write_or_print(out, &pretty(&partition))?;
                    Ok(EXIT_PASS)
                }
                Err(WitnessError::NoWitness) => {
                    write_or_print(out, &pretty(&json!({ "partition": Value::Null })))?;
                    Ok(EXIT_FAIL)
                }
                Err(e) => Err(map_witness(e)),
            }
        }
        Command::Sweep {
            family,
            property,
            bipartition,
            sample,
            jobs,
            budget,
            out,
        } => {
            let g = build_graph(family)?;
            let budget = budget.to_budget();
            let t = match family.t {
                Some(t) => t,
                None => chromatic_number(&g, &budget).map_err(map_solve)?,
            };
            let pair = bipartition
                .as_ref()
                .map(|text| bipartition_arg(text))
                .transpose()?;
            let prop = match property.as_str() {
                "colorful" => SweepProperty::Colorful { bipartition: pair },
                "zigzag" => SweepProperty::Zigzag {
                    r: need(family.r, "r")? as u32,
                },
                "spencer-su" => {
                    let path = family.system.as_ref().ok_or_else(|| {
                        CliError::usage("spencer-su sweeps need --system <json file>")
                    })?;
                    let system = read_set_system(path)?;
                    if build_general_kneser(&system)?.vertex_count() != g.vertex_count() {
                        return Err(CliError::usage(
                            "the swept graph must be the general Kneser graph of --system",
                        ));
                    }
                    SweepProperty::SpencerSu {
                        system,
                        bipartition: pair,
                    }
                }
                other => return Err(CliError::usage(format!("unknown property {other:?}"))),
            };
            let opts = SweepOptions {
                jobs: (*jobs).max(1),
                budget,
                ..Default::default()
            };
            let mut instance = instance_json(&g, &cli.command);
            instance["theorem_scope"] = Value::String(theorem_scope(&g, t).to_string());
            let report = match sample {
                None => sweep_verify(&g, t, &prop, &opts, instance),
                Some(count) => sweep_verify_sampled(
                    &g,
                    t,
                    &prop,
                    *count,
                    family.seed.unwrap_or(0),
                    &opts,
                    instance,
                ),
            };
            let out_path = match out {
                Some(path) => path.clone(),
                None => PathBuf::from("runs")
                    .join(config_hash(&cli.command))
                    .join("report.json"),
            };
            write_or_print(&Some(out_path.clone()), &pretty(&report))?;
            println!(
                "{}: {} colorings checked, outcome {} -> {}",
                report.property,
                report.colorings_checked,
                match report.outcome {
                    SweepOutcome::Pass => "pass",
                    SweepOutcome::Fail => "fail",
                    SweepOutcome::Budget => "budget",
                },
                out_path.display()
            );
            Ok(match report.outcome {
                SweepOutcome::Pass => EXIT_PASS,
                SweepOutcome::Fail => EXIT_FAIL,
                SweepOutcome::Budget => EXIT_BUDGET,
            })
        }
        Command::Hom {
            source,
            target,
            budget,
            out,
        } => {
            let f = io::import_graph(source, detect_format(source))?;
            let g = io::import_graph(target, detect_format(target))?;
            let map =
                find_homomorphism(&f, &g, &budget.to_budget()).map_err(map_solve)?;
            let found = map.is_some();
            write_or_print(out, &pretty(&json!({ "hom": map })))?;
            Ok(if found { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Local { family, budget } => {
            let g = build_graph(family)?;
            let t = need(family.t, "t")? ;
            match min_colors_local(&g, t, &budget.to_budget()) {
                Ok(value) => {
                    println!("{value}");
                    Ok(EXIT_PASS)
                }
                Err(SolveError::Infeasible { palette }) => {
                    println!("infeasible: no proper {palette}-coloring");
                    Ok(EXIT_FAIL)
                }
                Err(e) => Err(map_solve(e)),
            }
        }
        Command::Wide { family, coloring } => {
            let g = build_graph(family)?;
            let s = need(family.s, "s")? as u32;
            let c = read_coloring(coloring)?;
            let wide = is_wide(&g, &c, s).map_err(map_solve)?;
            println!("{wide}");
            Ok(if wide { EXIT_PASS } else { EXIT_FAIL })
        }
    }
}

fn map_witness(e: WitnessError) -> CliError {
    match e {
        WitnessError::Budget => CliError::Budget(e.to_string()),
        WitnessError::NoWitness => CliError::Fail(e.to_string()),
        other => CliError::Usage(other.to_string()),
    }
}

/// Dispatches a parsed command line and returns the process exit code.
pub fn run(cli: &CliArgs) -> i32 {
    match run_inner(cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Fail(msg)) => {
            eprintln!("{msg}");
            EXIT_FAIL
        }
        Err(CliError::Budget(msg)) => {
            eprintln!("budget: {msg}");
            EXIT_BUDGET
        }
    }
}
