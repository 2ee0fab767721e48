//! Exact chromatic number by iterated k-colorability decisions.
//!
//! Bounds come from a greedy coloring (upper) and a greedy clique (lower);
//! each decision runs saturation-ordered backtracking with a pre-colored
//! maximal clique and a first-use cap on new colors for symmetry breaking.

use crate::budget::{Budget, BudgetMeter, BudgetStop};
use crate::error::SolveError;
use crate::graph::Graph;
use crate::solve::Coloring;

fn greedy_coloring(g: &Graph) -> Vec<u32> {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut colors = vec![0u32; n];
    for v in order {
        let mut c = 1u32;
        while g.neighbors(v).iter().any(|u| colors[u] == c) {
            c += 1;
        }
        colors[v] = c;
    }
    colors
}

/// A maximal clique found greedily by repeatedly taking the highest-degree
/// candidate. Deterministic; used as a chromatic lower bound and for
/// symmetry breaking.
fn greedy_clique(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let mut clique = Vec::new();
    let mut candidates = crate::bits::BitSet::full(n);
    loop {
        let mut best: Option<(usize, usize)> = None;
        for v in candidates.iter() {
            let deg = g.neighbors(v).intersection(&candidates).count();
            if best.map(|(bd, _)| deg > bd).unwrap_or(true) {
                best = Some((deg, v));
            }
        }
        match best {
            Some((_, v)) => {
                clique.push(v);
                candidates.intersect_with(g.neighbors(v));
            }
            None => break,
        }
        if candidates.is_empty() {
            break;
        }
    }
    clique.sort_unstable();
    clique
}

fn saturation(g: &Graph, colors: &[u32], v: usize) -> u32 {
    let mut seen = 0u64;
    let mut count = 0u32;
    for u in g.neighbors(v).iter() {
        let c = colors[u];
        if c != 0 && c <= 64 && seen >> (c - 1) & 1 == 0 {
            seen |= 1 << (c - 1);
            count += 1;
        }
    }
    count
}

fn extend(
    g: &Graph,
    k: u32,
    colors: &mut [u32],
    uncolored: usize,
    max_used: u32,
    meter: &mut BudgetMeter,
) -> Result<bool, BudgetStop> {
    if uncolored == 0 {
        return Ok(true);
    }
    meter.tick()?;
    // DSATUR pick: max saturation, then max degree, then least index
    let mut pick: Option<(u32, usize, usize)> = None;
    for v in 0..g.vertex_count() {
        if colors[v] != 0 {
            continue;
        }
        let sat = saturation(g, colors, v);
        let deg = g.degree(v);
        let better = match pick {
            None => true,
            Some((ps, pd, _)) => sat > ps || (sat == ps && deg > pd),
        };
        if better {
            pick = Some((sat, deg, v));
        }
    }
    let v = pick.expect("an uncolored vertex exists").2;
    let cap = k.min(max_used + 1);
    for c in 1..=cap {
        if g.neighbors(v).iter().any(|u| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        if extend(g, k, colors, uncolored - 1, max_used.max(c), meter)? {
            return Ok(true);
        }
        colors[v] = 0;
    }
    Ok(false)
}

fn k_colorable(
    g: &Graph,
    k: u32,
    clique: &[usize],
    meter: &mut BudgetMeter,
) -> Result<Option<Vec<u32>>, BudgetStop> {
    if (clique.len() as u32) > k {
        return Ok(None);
    }
    let mut colors = vec![0u32; g.vertex_count()];
    for (i, &v) in clique.iter().enumerate() {
        colors[v] = i as u32 + 1;
    }
    let uncolored = g.vertex_count() - clique.len();
    if extend(g, k, &mut colors, uncolored, clique.len() as u32, meter)? {
        Ok(Some(colors))
    } else {
        Ok(None)
    }
}

pub(crate) fn chromatic_with_meter(
    g: &Graph,
    meter: &mut BudgetMeter,
) -> Result<(u32, Option<Coloring>), SolveError> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok((0, None));
    }
    let greedy = greedy_coloring(g);
    let ub = *greedy.iter().max().expect("nonempty");
    let clique = greedy_clique(g);
    let lb = clique.len() as u32;
    if lb >= ub {
        let c = Coloring::new(ub, greedy).expect("greedy stays in palette");
        return Ok((ub, Some(c)));
    }
    for k in lb..ub {
        match k_colorable(g, k, &clique, meter) {
            Ok(Some(colors)) => {
                let c = Coloring::new(k, colors).expect("decision stays in palette");
                return Ok((k, Some(c)));
            }
            Ok(None) => {}
            Err(BudgetStop) => return Err(SolveError::Budget { lo: k, hi: ub }),
        }
    }
    let c = Coloring::new(ub, greedy).expect("greedy stays in palette");
    Ok((ub, Some(c)))
}

/// Exact chromatic number.
pub fn chromatic_number(g: &Graph, budget: &Budget) -> Result<u32, SolveError> {
    let mut meter = budget.start();
    chromatic_with_meter(g, &mut meter).map(|(chi, _)| chi)
}

/// Exact chromatic number together with an optimal coloring (absent only for
/// the empty graph).
pub fn chromatic_number_with_coloring(
    g: &Graph,
    budget: &Budget,
) -> Result<(u32, Option<Coloring>), SolveError> {
    let mut meter = budget.start();
    chromatic_with_meter(g, &mut meter)
}
