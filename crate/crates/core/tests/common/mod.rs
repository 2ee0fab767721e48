//! Shared oracles and samplers for the integration suites.
//!
//! Every oracle here decides by full enumeration and stays independent of
//! the library's search paths; the implementations are checked against these
//! on small instances.

#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use kneserlab::families::SetSystem;
use kneserlab::graph::{Graph, Provenance};
use kneserlab::solve::Coloring;

/// Advances a base-`radix` odometer in place; false when it wraps to zero.
fn advance(digits: &mut [u32], radix: u32) -> bool {
    for d in digits.iter_mut().rev() {
        if *d + 1 < radix {
            *d += 1;
            return true;
        }
        *d = 0;
    }
    false
}

/// True iff some assignment of `k` colors to the vertices leaves no edge
/// monochromatic, by enumerating all k^n assignments.
pub fn naive_k_colorable(g: &Graph, k: u32) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let edges = g.edges();
    let mut assignment = vec![0u32; n];
    loop {
        if edges.iter().all(|&(u, v)| assignment[u] != assignment[v]) {
            return true;
        }
        if !advance(&mut assignment, k) {
            return false;
        }
    }
}

pub fn naive_chromatic(g: &Graph) -> u32 {
    if g.vertex_count() == 0 {
        return 0;
    }
    (1..).find(|&k| naive_k_colorable(g, k)).unwrap()
}

/// All proper palette-`t` colorings, as raw color vectors.
pub fn naive_proper_colorings(g: &Graph, t: u32) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    let edges = g.edges();
    let mut out = Vec::new();
    if t == 0 {
        return out;
    }
    let mut assignment = vec![0u32; n];
    loop {
        if edges.iter().all(|&(u, v)| assignment[u] != assignment[v]) {
            out.push(assignment.iter().map(|&c| c + 1).collect());
        }
        if !advance(&mut assignment, t) {
            return out;
        }
    }
}

/// Canonical form of a color vector: colors renamed in first-use order.
pub fn canonical_form(colors: &[u32]) -> Vec<u32> {
    let max = colors.iter().copied().max().unwrap_or(0) as usize;
    let mut rename: Vec<Option<u32>> = vec![None; max + 1];
    let mut next = 1u32;
    colors
        .iter()
        .map(|&c| {
            *rename[c as usize].get_or_insert_with(|| {
                let v = next;
                next += 1;
                v
            })
        })
        .collect()
}

/// Canonical representatives of the proper `t`-colorings, by raw
/// enumeration, canonicalization, and deduplication.
pub fn naive_canonical_colorings(g: &Graph, t: u32) -> Vec<Vec<u32>> {
    let mut forms: Vec<Vec<u32>> = naive_proper_colorings(g, t)
        .iter()
        .map(|c| canonical_form(c))
        .collect();
    forms.sort();
    forms.dedup();
    forms
}

fn subsets_by_size(items: &[usize]) -> Vec<Vec<usize>> {
    let mut subsets: Vec<Vec<usize>> = (0..1u64 << items.len())
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect()
        })
        .collect();
    subsets.sort_by_key(|s: &Vec<usize>| (s.len(), s.clone()));
    subsets
}

/// True iff some m-coloring of the ground elements outside `deleted` leaves
/// no surviving member monochromatic, by full enumeration.
fn naive_hypergraph_colorable(system: &SetSystem, deleted: &[usize], m: u32) -> bool {
    let n = system.ground_size();
    let survivors: Vec<Vec<usize>> = system
        .members()
        .iter()
        .filter(|s| s.iter().all(|e| !deleted.contains(&e)))
        .map(|s| s.iter().collect())
        .collect();
    if survivors.is_empty() {
        return true;
    }
    if m == 0 {
        return false;
    }
    let mut assignment = vec![0u32; n];
    loop {
        let ok = survivors.iter().all(|s| {
            let first = assignment[s[0]];
            !s.iter().all(|&e| assignment[e] == first)
        });
        if ok {
            return true;
        }
        if !advance(&mut assignment, m) {
            return false;
        }
    }
}

/// The m-colorability defect by direct minimization over all deletion sets,
/// smallest first.
pub fn naive_defect(system: &SetSystem, m: u32) -> usize {
    let ground: Vec<usize> = (0..system.ground_size()).collect();
    for deleted in subsets_by_size(&ground) {
        if naive_hypergraph_colorable(system, &deleted, m) {
            return deleted.len();
        }
    }
    unreachable!("deleting everything always works")
}

/// True iff a completely multicolored complete bipartite subgraph with side
/// color sets `a` and `b` exists, by enumerating every choice of one vertex
/// per color.
pub fn naive_colorful_exists(g: &Graph, c: &Coloring, a: &[u32], b: &[u32]) -> bool {
    let class = |color: u32| -> Vec<usize> {
        (0..g.vertex_count())
            .filter(|&v| c.color(v) == color)
            .collect()
    };
    let left: Vec<Vec<usize>> = a.iter().map(|&x| class(x)).collect();
    let right: Vec<Vec<usize>> = b.iter().map(|&x| class(x)).collect();
    if left.iter().chain(&right).any(|cl| cl.is_empty()) {
        return false;
    }
    let all: Vec<&Vec<usize>> = left.iter().chain(&right).collect();
    let mut pick = vec![0usize; all.len()];
    loop {
        let chosen: Vec<usize> = pick.iter().zip(&all).map(|(&i, cl)| cl[i]).collect();
        let (l, r) = chosen.split_at(a.len());
        if l.iter().all(|&u| r.iter().all(|&v| g.adjacent(u, v))) {
            return true;
        }
        // advance the mixed-radix odometer over class sizes
        let mut pos = all.len();
        let mut advanced = false;
        while pos > 0 {
            pos -= 1;
            if pick[pos] + 1 < all[pos].len() {
                pick[pos] += 1;
                for p in pick.iter_mut().skip(pos + 1) {
                    *p = 0;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            return false;
        }
    }
}

/// True iff a homomorphism exists, by enumerating every vertex map.
pub fn naive_hom_exists(source: &Graph, target: &Graph) -> bool {
    let n = source.vertex_count();
    let t = target.vertex_count();
    if n == 0 {
        return true;
    }
    if t == 0 {
        return false;
    }
    let edges = source.edges();
    let mut map = vec![0u32; n];
    loop {
        if edges
            .iter()
            .all(|&(u, v)| target.adjacent(map[u] as usize, map[v] as usize))
        {
            return true;
        }
        if !advance(&mut map, t as u32) {
            return false;
        }
    }
}

/// Seeded random graph on at most `max_n` vertices with at most `max_edges`
/// edges.
pub fn random_graph(rng: &mut ChaCha8Rng, max_n: usize, max_edges: usize) -> Graph {
    loop {
        let n = rng.random_range(1..=max_n);
        let labels = (0..n).map(|i| i.to_string()).collect();
        let mut g = Graph::new(labels, Provenance::new("random")).unwrap();
        let p = rng.random_range(0.15..0.75);
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        if g.edge_count() <= max_edges {
            return g;
        }
    }
}

/// Seeded random set system with ground size at most `max_ground` and at
/// most `max_members` nonempty members.
pub fn random_system(rng: &mut ChaCha8Rng, max_ground: usize, max_members: usize) -> SetSystem {
    let ground = rng.random_range(1..=max_ground);
    let members = rng.random_range(1..=max_members);
    let mut sets = Vec::with_capacity(members);
    for _ in 0..members {
        loop {
            let set: Vec<usize> = (1..=ground).filter(|_| rng.random_bool(0.4)).collect();
            if !set.is_empty() {
                sets.push(set);
                break;
            }
        }
    }
    SetSystem::from_sets(ground, &sets).unwrap()
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
