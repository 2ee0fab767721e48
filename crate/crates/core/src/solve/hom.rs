//! Graph homomorphism search by backtracking with bitset candidate pruning.

use serde::{Deserialize, Serialize};

use crate::bits::BitSet;
use crate::budget::{Budget, BudgetMeter, BudgetStop};
use crate::error::SolveError;
use crate::graph::Graph;

/// A vertex map from a source graph into a target graph carrying every edge
/// to an edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomMap {
    pub image: Vec<usize>,
}

impl HomMap {
    /// Rechecks the defining property from scratch.
    pub fn verify(&self, source: &Graph, target: &Graph) -> bool {
        if self.image.len() != source.vertex_count() {
            return false;
        }
        if self.image.iter().any(|&w| w >= target.vertex_count()) {
            return false;
        }
        source
            .edges()
            .iter()
            .all(|&(u, v)| target.adjacent(self.image[u], self.image[v]))
    }
}

fn extend(
    source: &Graph,
    target: &Graph,
    v: usize,
    image: &mut Vec<usize>,
    meter: &mut BudgetMeter,
) -> Result<bool, BudgetStop> {
    if v == source.vertex_count() {
        return Ok(true);
    }
    meter.tick()?;
    let mut candidates = BitSet::full(target.vertex_count());
    for u in source.neighbors(v).iter() {
        if u < v {
            candidates.intersect_with(target.neighbors(image[u]));
            if candidates.is_empty() {
                return Ok(false);
            }
        }
    }
    for w in candidates.iter() {
        image[v] = w;
        if extend(source, target, v + 1, image, meter)? {
            return Ok(true);
        }
    }
    Ok(false)
}

pub(crate) fn hom_with_meter(
    source: &Graph,
    target: &Graph,
    meter: &mut BudgetMeter,
) -> Result<Option<HomMap>, BudgetStop> {
    let mut image = vec![0usize; source.vertex_count()];
    if extend(source, target, 0, &mut image, meter)? {
        Ok(Some(HomMap { image }))
    } else {
        Ok(None)
    }
}

/// Maximum-back-degree search order: each vertex is placed after as many of
/// its neighbors as possible so candidate sets shrink early.
fn connectivity_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for _ in 0..n {
        let mut best: Option<(usize, usize, usize)> = None;
        for v in 0..n {
            if placed[v] {
                continue;
            }
            let back = g.neighbors(v).iter().filter(|&u| placed[u]).count();
            let deg = g.degree(v);
            let better = match best {
                None => true,
                Some((bb, bd, _)) => back > bb || (back == bb && deg > bd),
            };
            if better {
                best = Some((back, deg, v));
            }
        }
        let v = best.expect("an unplaced vertex exists").2;
        placed[v] = true;
        order.push(v);
    }
    order
}

fn extend_ordered(
    source: &Graph,
    target: &Graph,
    order: &[usize],
    step: usize,
    image: &mut [Option<usize>],
    pin_first: bool,
    meter: &mut BudgetMeter,
) -> Result<bool, BudgetStop> {
    if step == order.len() {
        return Ok(true);
    }
    meter.tick()?;
    let v = order[step];
    let mut candidates = if pin_first && step == 0 {
        BitSet::from_indices(target.vertex_count(), &[0])
    } else {
        BitSet::full(target.vertex_count())
    };
    for u in source.neighbors(v).iter() {
        if let Some(w) = image[u] {
            candidates.intersect_with(target.neighbors(w));
            if candidates.is_empty() {
                return Ok(false);
            }
        }
    }
    for w in candidates.iter() {
        image[v] = Some(w);
        if extend_ordered(source, target, order, step + 1, image, pin_first, meter)? {
            return Ok(true);
        }
    }
    image[v] = None;
    Ok(false)
}

/// Existence-only homomorphism decision with a connectivity-aware vertex
/// order. With `pin_first` the first placed vertex maps to target vertex 0,
/// which is sound exactly when the target is vertex-transitive.
pub(crate) fn hom_exists_ordered(
    source: &Graph,
    target: &Graph,
    pin_first: bool,
    meter: &mut BudgetMeter,
) -> Result<bool, BudgetStop> {
    if source.vertex_count() == 0 {
        return Ok(true);
    }
    if target.vertex_count() == 0 {
        return Ok(false);
    }
    let order = connectivity_order(source);
    let mut image = vec![None; source.vertex_count()];
    extend_ordered(source, target, &order, 0, &mut image, pin_first, meter)
}

/// First homomorphism from `source` into `target` in lexicographic order of
/// the image vector under canonical vertex orders, or `None` when no
/// homomorphism exists. Budget exhaustion is a distinct error, never a
/// silent `None`.
pub fn find_homomorphism(
    source: &Graph,
    target: &Graph,
    budget: &Budget,
) -> Result<Option<HomMap>, SolveError> {
    let mut meter = budget.start();
    hom_with_meter(source, target, &mut meter).map_err(|BudgetStop| SolveError::BudgetExhausted)
}
