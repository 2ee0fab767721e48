//! Sweep verification: run a witness property over every canonical coloring
//! of a graph and aggregate the outcome into a serializable report.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::budget::Budget;
use crate::families::SetSystem;
use crate::graph::Graph;
use crate::solve::{chromatic_number, enumerate_colorings, Coloring};
use crate::witness::{find_colorful_bipartite, find_zigzag, spencer_su_partition};

/// Colorings are consumed in fixed-size batches; a batch boundary is the
/// cancellation point after a failure, so reports are deterministic for a
/// given configuration regardless of worker scheduling.
const BATCH: usize = 64;

/// The property checked per coloring.
#[derive(Clone, Debug)]
pub enum SweepProperty {
    /// Colorful bipartite witnesses, either for every unordered bipartition
    /// of the palette or for one prescribed bipartition.
    Colorful {
        bipartition: Option<(Vec<u32>, Vec<u32>)>,
    },
    /// Zig-zag witness over `r` colors.
    Zigzag { r: u32 },
    /// Ground partitions of the given system, for every unordered
    /// bipartition of the palette or one prescribed bipartition.
    SpencerSu {
        system: SetSystem,
        bipartition: Option<(Vec<u32>, Vec<u32>)>,
    },
}

impl SweepProperty {
    pub fn name(&self) -> String {
        match self {
            SweepProperty::Colorful { bipartition: None } => {
                "colorful-all-bipartitions".to_string()
            }
            SweepProperty::Colorful {
                bipartition: Some(pair),
            } => format!("colorful({})", bipartition_label(pair)),
            SweepProperty::Zigzag { r } => format!("zigzag({r})"),
            SweepProperty::SpencerSu {
                bipartition: None, ..
            } => "spencer-su".to_string(),
            SweepProperty::SpencerSu {
                bipartition: Some(pair),
                ..
            } => format!("spencer-su({})", bipartition_label(pair)),
        }
    }
}

fn bipartition_label(pair: &(Vec<u32>, Vec<u32>)) -> String {
    let side = |xs: &[u32]| {
        xs.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    format!("{}/{}", side(&pair.0), side(&pair.1))
}

/// Every unordered bipartition of the palette `[t]`, canonically ordered so
/// the side containing color 1 comes first; includes the trivial
/// bipartition with an empty second side.
pub fn all_bipartitions(t: u32) -> Vec<(Vec<u32>, Vec<u32>)> {
    let rest: Vec<u32> = (2..=t).collect();
    let mut out = Vec::new();
    for mask in 0..(1u64 << rest.len()) {
        let mut a = vec![1u32];
        let mut b = Vec::new();
        for (i, &color) in rest.iter().enumerate() {
            if mask >> i & 1 == 1 {
                a.push(color);
            } else {
                b.push(color);
            }
        }
        out.push((a, b));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepOutcome {
    Pass,
    Fail,
    Budget,
}

/// Outcome record of one sweep: self-contained and serializable, with the
/// first counterexample embedded when the property fails.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub instance: Value,
    pub property: String,
    pub t: u32,
    pub colorings_checked: u64,
    pub outcome: SweepOutcome,
    pub witnesses_sampled: Vec<Value>,
    pub counterexample: Option<Value>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug)]
pub struct SweepOptions {
    /// Worker threads per batch; 1 is the reproducibility baseline.
    pub jobs: usize,
    pub budget: Budget,
    /// Cap on sampled witnesses embedded in the report.
    pub max_witnesses: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            jobs: 1,
            budget: Budget::unlimited(),
            max_witnesses: 3,
        }
    }
}

struct CheckResult {
    /// Payload describing the first failing sub-check, if any.
    failure: Option<Value>,
    /// A sampled witness from the first sub-check, for the report.
    sample: Option<Value>,
}

fn coloring_json(c: &Coloring) -> Value {
    serde_json::to_value(c).expect("coloring serializes")
}

fn check_one(g: &Graph, property: &SweepProperty, id: u64, c: &Coloring) -> CheckResult {
    let mut sample = None;
    let failure = match property {
        SweepProperty::Colorful { bipartition } => {
            let pairs = match bipartition {
                Some(pair) => vec![pair.clone()],
                None => all_bipartitions(c.palette()),
            };
            let mut failure = None;
            for pair in &pairs {
                match find_colorful_bipartite(g, c, &pair.0, &pair.1) {
                    Ok(Some(w)) => {
                        if sample.is_none() {
                            sample = Some(json!({
                                "coloring_id": id,
                                "bipartition": bipartition_label(pair),
                                "witness": w,
                            }));
                        }
                    }
                    Ok(None) => {
                        failure = Some(json!({
                            "coloring_id": id,
                            "coloring": coloring_json(c),
                            "bipartition": bipartition_label(pair),
                        }));
                        break;
                    }
                    Err(e) => {
                        failure = Some(json!({
                            "coloring_id": id,
                            "error": e.to_string(),
                        }));
                        break;
                    }
                }
            }
            failure
        }
        SweepProperty::Zigzag { r } => match find_zigzag(g, c, *r) {
            Ok(Some(w)) => {
                sample = Some(json!({
                    "coloring_id": id,
                    "r": r,
                    "witness": w,
                }));
                None
            }
            Ok(None) => Some(json!({
                "coloring_id": id,
                "coloring": coloring_json(c),
                "r": r,
            })),
            Err(e) => Some(json!({
                "coloring_id": id,
                "error": e.to_string(),
            })),
        },
        SweepProperty::SpencerSu {
            system,
            bipartition,
        } => {
            let pairs = match bipartition {
                Some(pair) => vec![pair.clone()],
                None => all_bipartitions(c.palette()),
            };
            let mut failure = None;
            for pair in &pairs {
                match spencer_su_partition(system, c, &pair.0, &pair.1) {
                    Ok(p) => {
                        if sample.is_none() {
                            sample = Some(json!({
                                "coloring_id": id,
                                "bipartition": bipartition_label(pair),
                                "partition": p,
                            }));
                        }
                    }
                    Err(e) => {
                        failure = Some(json!({
                            "coloring_id": id,
                            "coloring": coloring_json(c),
                            "bipartition": bipartition_label(pair),
                            "error": e.to_string(),
                        }));
                        break;
                    }
                }
            }
            failure
        }
    };
    CheckResult { failure, sample }
}

fn check_batch(
    g: &Graph,
    property: &SweepProperty,
    base_id: u64,
    batch: &[Coloring],
    jobs: usize,
) -> Vec<CheckResult> {
    if jobs <= 1 || batch.len() <= 1 {
        return batch
            .iter()
            .enumerate()
            .map(|(i, c)| check_one(g, property, base_id + i as u64, c))
            .collect();
    }
    let chunk = batch.len().div_ceil(jobs);
    let mut out: Vec<Vec<CheckResult>> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = batch
            .chunks(chunk)
            .enumerate()
            .map(|(ci, items)| {
                scope.spawn(move || {
                    items
                        .iter()
                        .enumerate()
                        .map(|(i, c)| {
                            check_one(g, property, base_id + (ci * chunk + i) as u64, c)
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            out.push(h.join().expect("sweep worker panicked"));
        }
    });
    out.into_iter().flatten().collect()
}

/// Runs the property over every canonical `t`-coloring of `g`, aggregating
/// a pass/fail/budget outcome. The first counterexample (least coloring id)
/// is embedded; `instance` is carried into the report with the computed
/// chromatic number attached.
pub fn sweep_verify(
    g: &Graph,
    t: u32,
    property: &SweepProperty,
    opts: &SweepOptions,
    instance: Value,
) -> Report {
    let start = Instant::now();
    let mut instance = instance;
    if let Value::Object(map) = &mut instance {
        let chi = chromatic_number(g, &opts.budget)
            .map(Value::from)
            .unwrap_or(Value::Null);
        map.insert("chi".to_string(), chi);
    }

    let mut meter = opts.budget.start();
    let mut stream = enumerate_colorings(g, t);
    let mut checked: u64 = 0;
    let mut witnesses: Vec<Value> = Vec::new();
    let mut counterexample: Option<Value> = None;
    let mut outcome = SweepOutcome::Pass;

    'sweep: loop {
        let mut batch: Vec<Coloring> = Vec::with_capacity(BATCH);
        for c in stream.by_ref().take(BATCH) {
            if meter.tick().is_err() {
                outcome = SweepOutcome::Budget;
                break;
            }
            batch.push(c);
        }
        if batch.is_empty() {
            break;
        }
        let results = check_batch(g, property, checked, &batch, opts.jobs);
        for result in results {
            checked += 1;
            if witnesses.len() < opts.max_witnesses {
                if let Some(s) = result.sample {
                    witnesses.push(s);
                }
            }
            if counterexample.is_none() {
                if let Some(f) = result.failure {
                    counterexample = Some(f);
                    outcome = SweepOutcome::Fail;
                }
            }
        }
        if counterexample.is_some() || outcome == SweepOutcome::Budget {
            break 'sweep;
        }
    }

    Report {
        instance,
        property: property.name(),
        t,
        colorings_checked: checked,
        outcome,
        witnesses_sampled: witnesses,
        counterexample,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// Like [`sweep_verify`], but over `count` seeded random proper
/// `t`-colorings instead of the canonical enumeration. Used to sample
/// colorings with palettes beyond the chromatic number, where the canonical
/// space explodes.
pub fn sweep_verify_sampled(
    g: &Graph,
    t: u32,
    property: &SweepProperty,
    count: u64,
    seed: u64,
    opts: &SweepOptions,
    instance: Value,
) -> Report {
    use rand::SeedableRng;

    let start = Instant::now();
    let mut instance = instance;
    if let Value::Object(map) = &mut instance {
        let chi = chromatic_number(g, &opts.budget)
            .map(Value::from)
            .unwrap_or(Value::Null);
        map.insert("chi".to_string(), chi);
        map.insert("sampled".to_string(), Value::from(count));
        map.insert("seed".to_string(), Value::from(seed));
    }

    let mut meter = opts.budget.start();
    let mut checked: u64 = 0;
    let mut witnesses: Vec<Value> = Vec::new();
    let mut counterexample: Option<Value> = None;
    let mut outcome = SweepOutcome::Pass;

    for id in 0..count {
        if meter.tick().is_err() {
            outcome = SweepOutcome::Budget;
            break;
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed.wrapping_add(id));
        let Some(c) = crate::solve::random_proper_coloring(g, t, &mut rng) else {
            counterexample = Some(json!({
                "coloring_id": id,
                "error": format!("no proper {t}-coloring exists"),
            }));
            outcome = SweepOutcome::Fail;
            break;
        };
        let result = check_one(g, property, id, &c);
        checked += 1;
        if witnesses.len() < opts.max_witnesses {
            if let Some(s) = result.sample {
                witnesses.push(s);
            }
        }
        if let Some(f) = result.failure {
            counterexample = Some(f);
            outcome = SweepOutcome::Fail;
            break;
        }
    }

    Report {
        instance,
        property: property.name(),
        t,
        colorings_checked: checked,
        outcome,
        witnesses_sampled: witnesses,
        counterexample,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_kneser, build_rational_complete};

    #[test]
    fn bipartitions_of_three_colors() {
        let parts = all_bipartitions(3);
        assert_eq!(parts.len(), 4);
        assert!(parts.iter().all(|(a, _)| a.contains(&1)));
        assert!(parts.contains(&(vec![1], vec![2, 3])));
        assert!(parts.contains(&(vec![1, 2, 3], vec![])));
    }

    #[test]
    fn petersen_sweep_passes() {
        let g = build_kneser(5, 2).unwrap();
        let report = sweep_verify(
            &g,
            3,
            &SweepProperty::Colorful { bipartition: None },
            &SweepOptions::default(),
            serde_json::json!({"family": "kneser"}),
        );
        assert_eq!(report.outcome, SweepOutcome::Pass);
        assert_eq!(report.colorings_checked, 20);
        assert!(report.counterexample.is_none());
        assert!(!report.witnesses_sampled.is_empty());
        assert_eq!(report.instance["chi"], 3);
    }

    #[test]
    fn rational_counterexample_sweep_fails() {
        let g = build_rational_complete(7, 2).unwrap();
        let report = sweep_verify(
            &g,
            4,
            &SweepProperty::Colorful {
                bipartition: Some((vec![2, 4], vec![1, 3])),
            },
            &SweepOptions::default(),
            serde_json::json!({"family": "rational"}),
        );
        assert_eq!(report.outcome, SweepOutcome::Fail);
        let counterexample = report.counterexample.unwrap();
        assert!(counterexample["coloring_id"].is_u64());
    }

    #[test]
    fn zigzag_sweep_passes_on_petersen() {
        let g = build_kneser(5, 2).unwrap();
        let report = sweep_verify(
            &g,
            3,
            &SweepProperty::Zigzag { r: 3 },
            &SweepOptions::default(),
            Value::Null,
        );
        assert_eq!(report.outcome, SweepOutcome::Pass);
        assert_eq!(report.colorings_checked, 20);
    }

    #[test]
    fn budget_outcome_reports_partial_coverage() {
        let g = build_kneser(5, 2).unwrap();
        let opts = SweepOptions {
            budget: Budget::nodes(5),
            ..Default::default()
        };
        let report = sweep_verify(
            &g,
            3,
            &SweepProperty::Colorful { bipartition: None },
            &opts,
            Value::Null,
        );
        assert_eq!(report.outcome, SweepOutcome::Budget);
        assert!(report.colorings_checked <= 5);
    }

    #[test]
    fn parallel_sweep_matches_sequential() {
        let g = build_rational_complete(7, 2).unwrap();
        let sequential = sweep_verify(
            &g,
            4,
            &SweepProperty::Colorful { bipartition: None },
            &SweepOptions::default(),
            Value::Null,
        );
        let parallel = sweep_verify(
            &g,
            4,
            &SweepProperty::Colorful { bipartition: None },
            &SweepOptions {
                jobs: 4,
                ..Default::default()
            },
            Value::Null,
        );
        assert_eq!(sequential.outcome, parallel.outcome);
        assert_eq!(sequential.colorings_checked, parallel.colorings_checked);
        assert_eq!(sequential.counterexample, parallel.counterexample);
    }
}
