//! Circular chromatic number by homomorphism search into rational complete
//! graphs.
//!
//! For a graph with chromatic number chi the search runs over denominators
//! q = 1..n and numerators (chi-1)q < p <= chi*q, keeping the minimum p/q
//! whose target admits a homomorphism. The denominator bound q <= n is the
//! standard finiteness fact for finite graphs and makes the search exact.

use crate::budget::Budget;
use crate::error::SolveError;
use crate::families::build_rational_complete;
use crate::graph::Graph;
use crate::solve::hom::hom_exists_ordered;
use crate::solve::rational::{gcd, RationalValue};

/// Exact circular chromatic number of a graph with at least one edge.
pub fn circular_chromatic(g: &Graph, budget: &Budget) -> Result<RationalValue, SolveError> {
    if g.edge_count() == 0 {
        return Err(SolveError::InvalidParameter(
            "circular chromatic number needs at least one edge".into(),
        ));
    }
    let mut meter = budget.start();
    let chi = match super::chromatic::chromatic_with_meter(g, &mut meter) {
        Ok((chi, _)) => chi as usize,
        Err(SolveError::Budget { .. }) => {
            return Err(SolveError::BudgetCircular { upper: None })
        }
        Err(other) => return Err(other),
    };
    let n = g.vertex_count();
    let mut best: Option<RationalValue> = None;
    for q in 1..=n {
        for p in (chi - 1) * q + 1..=chi * q {
            if p < 2 * q || gcd(p as u64, q as u64) > 1 {
                continue;
            }
            let candidate = RationalValue::new(p as u64, q as u64);
            if best.map(|b| candidate >= b).unwrap_or(false) {
                break;
            }
            let target =
                build_rational_complete(p, q).expect("p >= 2q holds by construction");
            // rational complete graphs are vertex-transitive (rotation), so
            // the existence decision may pin the first image
            match hom_exists_ordered(g, &target, true, &mut meter) {
                Ok(true) => {
                    best = Some(candidate);
                    break; // numerators ascend, so this p is minimal for q
                }
                Ok(false) => {}
                Err(_) => return Err(SolveError::BudgetCircular { upper: best }),
            }
        }
    }
    Ok(best.expect("the chi-coloring maps into K_{chi/1}"))
}
