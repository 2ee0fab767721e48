//! Searches for the structures optimal colorings are forced to contain:
//! completely multicolored complete bipartite subgraphs, zig-zag witnesses,
//! and ground-set partitions, plus sweep verification over all canonical
//! colorings.

mod sweep;

pub use sweep::{
    all_bipartitions, sweep_verify, sweep_verify_sampled, Report, SweepOptions, SweepOutcome,
    SweepProperty,
};

use serde::{Deserialize, Serialize};

use crate::bits::BitSet;
use crate::error::WitnessError;
use crate::families::{build_general_kneser, SetSystem};
use crate::graph::Graph;
use crate::solve::{is_proper, Coloring};

/// A complete bipartite subgraph whose sides realize prescribed color sets,
/// one vertex per color.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteWitness {
    pub side_l: Vec<usize>,
    pub side_m: Vec<usize>,
    /// Ascending colors realized on `side_l`, aligned entrywise.
    pub colors_l: Vec<u32>,
    /// Ascending colors realized on `side_m`, aligned entrywise.
    pub colors_m: Vec<u32>,
}

impl BipartiteWitness {
    /// Rechecks the invariants from the raw graph and coloring, trusting
    /// nothing from the search path.
    pub fn verify(&self, g: &Graph, c: &Coloring) -> bool {
        if self.side_l.len() != self.colors_l.len() || self.side_m.len() != self.colors_m.len() {
            return false;
        }
        let increasing = |xs: &[u32]| xs.windows(2).all(|w| w[0] < w[1]);
        if !increasing(&self.colors_l) || !increasing(&self.colors_m) {
            return false;
        }
        if self.colors_l.iter().any(|c| self.colors_m.contains(c)) {
            return false;
        }
        let n = g.vertex_count();
        let aligned = |side: &[usize], colors: &[u32]| {
            side.iter()
                .zip(colors)
                .all(|(&v, &color)| v < n && c.color(v) == color)
        };
        if !aligned(&self.side_l, &self.colors_l) || !aligned(&self.side_m, &self.colors_m) {
            return false;
        }
        self.side_l
            .iter()
            .all(|&u| self.side_m.iter().all(|&v| g.adjacent(u, v)))
    }
}

/// A colorful complete bipartite subgraph over a strictly increasing color
/// sequence whose colors alternate sides: odd positions on side L, even
/// positions on side M.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZigzagWitness {
    /// Strictly increasing colors, one per chosen vertex.
    pub colors: Vec<u32>,
    /// Chosen vertices aligned with `colors`.
    pub vertices: Vec<usize>,
}

impl ZigzagWitness {
    /// Vertices at odd positions of the sequence (1st, 3rd, ...).
    pub fn side_l(&self) -> Vec<usize> {
        self.vertices.iter().copied().step_by(2).collect()
    }

    /// Vertices at even positions of the sequence (2nd, 4th, ...).
    pub fn side_m(&self) -> Vec<usize> {
        self.vertices.iter().copied().skip(1).step_by(2).collect()
    }

    pub fn verify(&self, g: &Graph, c: &Coloring) -> bool {
        if self.colors.len() != self.vertices.len() {
            return false;
        }
        if !self.colors.windows(2).all(|w| w[0] < w[1]) {
            return false;
        }
        let n = g.vertex_count();
        if !self
            .vertices
            .iter()
            .zip(&self.colors)
            .all(|(&v, &color)| v < n && c.color(v) == color)
        {
            return false;
        }
        self.side_l()
            .iter()
            .all(|&u| self.side_m().iter().all(|&v| g.adjacent(u, v)))
    }
}

/// A partition of the ground set into two parts whose contained members
/// realize exactly the prescribed color blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroundPartition {
    /// 1-based ground elements of the first part, ascending.
    pub e1: Vec<usize>,
    /// 1-based ground elements of the second part, ascending.
    pub e2: Vec<usize>,
    /// Colors of members contained in the first part, ascending.
    pub colors_e1: Vec<u32>,
    /// Colors of members contained in the second part, ascending.
    pub colors_e2: Vec<u32>,
}

impl GroundPartition {
    /// Rechecks the partition and the contained-member color sets by
    /// enumeration over the system.
    pub fn verify(&self, system: &SetSystem, coloring: &Coloring) -> bool {
        let n = system.ground_size();
        let mut e1 = BitSet::new(n);
        let mut e2 = BitSet::new(n);
        for &e in &self.e1 {
            if e == 0 || e > n {
                return false;
            }
            e1.insert(e - 1);
        }
        for &e in &self.e2 {
            if e == 0 || e > n {
                return false;
            }
            e2.insert(e - 1);
        }
        if !e1.is_disjoint(&e2) || e1.count() + e2.count() != n {
            return false;
        }
        contained_colors(system, coloring, &e1) == self.colors_e1
            && contained_colors(system, coloring, &e2) == self.colors_e2
    }
}

fn contained_colors(system: &SetSystem, coloring: &Coloring, part: &BitSet) -> Vec<u32> {
    let mut colors: Vec<u32> = system
        .members()
        .iter()
        .enumerate()
        .filter(|(_, s)| s.is_subset(part))
        .map(|(v, _)| coloring.color(v))
        .collect();
    colors.sort_unstable();
    colors.dedup();
    colors
}

fn normalize_colors(colors: &[u32], palette: u32) -> Result<Vec<u32>, WitnessError> {
    let mut out = colors.to_vec();
    out.sort_unstable();
    out.dedup();
    if let Some(&bad) = out.iter().find(|&&c| c == 0 || c > palette) {
        return Err(WitnessError::ColorOutOfPalette {
            color: bad,
            palette,
        });
    }
    Ok(out)
}

fn validate(g: &Graph, c: &Coloring) -> Result<(), WitnessError> {
    match is_proper(g, c) {
        Ok(true) => Ok(()),
        Ok(false) => Err(WitnessError::ImproperColoring),
        Err(_) => Err(WitnessError::SizeMismatch {
            expected: g.vertex_count(),
            got: c.len(),
        }),
    }
}

/// Exhaustive backtracking for one vertex per color of `a` (ascending color
/// order, candidates ascending) whose common neighborhood covers one vertex
/// per color of `b`. Returns side vertex lists aligned with the sorted color
/// sets.
fn bipartite_search(
    g: &Graph,
    classes: &[BitSet],
    a: &[u32],
    b: &[u32],
) -> Option<(Vec<usize>, Vec<usize>)> {
    fn go(
        g: &Graph,
        classes: &[BitSet],
        a: &[u32],
        b: &[u32],
        i: usize,
        chosen: &mut Vec<usize>,
        common: &BitSet,
    ) -> Option<(Vec<usize>, Vec<usize>)> {
        if i == a.len() {
            let mut side_m = Vec::with_capacity(b.len());
            for &color in b {
                let candidates = common.intersection(&classes[(color - 1) as usize]);
                side_m.push(candidates.min()?);
            }
            return Some((chosen.clone(), side_m));
        }
        for v in classes[(a[i] - 1) as usize].iter() {
            let next_common = common.intersection(g.neighbors(v));
            if !b.is_empty() && next_common.is_empty() {
                continue;
            }
            chosen.push(v);
            if let Some(found) = go(g, classes, a, b, i + 1, chosen, &next_common) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }

    let full = BitSet::full(g.vertex_count());
    go(g, classes, a, b, 0, &mut Vec::new(), &full)
}

/// First completely multicolored complete bipartite subgraph with side color
/// sets exactly `a` and `b`, or `None` when no such subgraph exists.
pub fn find_colorful_bipartite(
    g: &Graph,
    c: &Coloring,
    a: &[u32],
    b: &[u32],
) -> Result<Option<BipartiteWitness>, WitnessError> {
    validate(g, c)?;
    let a = normalize_colors(a, c.palette())?;
    let b = normalize_colors(b, c.palette())?;
    if a.iter().any(|x| b.contains(x)) {
        return Err(WitnessError::OverlappingColorSets);
    }
    let classes = c.classes();
    Ok(bipartite_search(g, &classes, &a, &b).map(|(side_l, side_m)| BipartiteWitness {
        side_l,
        side_m,
        colors_l: a,
        colors_m: b,
    }))
}

/// First zig-zag witness over `r` colors: a strictly increasing color
/// sequence realized by a complete bipartite subgraph with the colors
/// alternating sides. Sequences are explored in lexicographic order.
pub fn find_zigzag(
    g: &Graph,
    c: &Coloring,
    r: u32,
) -> Result<Option<ZigzagWitness>, WitnessError> {
    if r == 0 {
        return Err(WitnessError::InvalidParameter(
            "zig-zag length r must be positive".into(),
        ));
    }
    validate(g, c)?;
    let palette: Vec<u32> = (1..=c.palette()).collect();
    let classes = c.classes();
    for sequence in crate::families::combinations(&palette, r as usize) {
        if sequence
            .iter()
            .any(|&color| classes[(color - 1) as usize].is_empty())
        {
            continue;
        }
        let a: Vec<u32> = sequence.iter().copied().step_by(2).collect();
        let b: Vec<u32> = sequence.iter().copied().skip(1).step_by(2).collect();
        if let Some((side_l, side_m)) = bipartite_search(g, &classes, &a, &b) {
            let mut vertices = Vec::with_capacity(sequence.len());
            for (pos, _) in sequence.iter().enumerate() {
                if pos % 2 == 0 {
                    vertices.push(side_l[pos / 2]);
                } else {
                    vertices.push(side_m[pos / 2]);
                }
            }
            return Ok(Some(ZigzagWitness {
                colors: sequence,
                vertices,
            }));
        }
    }
    Ok(None)
}

/// Ground-set partition induced by a colorful bipartite witness on the
/// general Kneser graph of `system`: the first part collects the members on
/// side L plus every leftover element, the second the members on side M.
/// The realized color sets are re-verified by enumeration before returning.
pub fn spencer_su_partition(
    system: &SetSystem,
    c: &Coloring,
    b1: &[u32],
    b2: &[u32],
) -> Result<GroundPartition, WitnessError> {
    let g = build_general_kneser(system)
        .map_err(|e| WitnessError::InvalidParameter(e.to_string()))?;
    validate(&g, c)?;
    let b1 = normalize_colors(b1, c.palette())?;
    let b2 = normalize_colors(b2, c.palette())?;
    if b1.iter().any(|x| b2.contains(x)) {
        return Err(WitnessError::OverlappingColorSets);
    }
    if b1.len() + b2.len() != c.palette() as usize {
        return Err(WitnessError::InvalidParameter(format!(
            "color blocks must partition the palette [{}]",
            c.palette()
        )));
    }
    let witness = find_colorful_bipartite(&g, c, &b1, &b2)?.ok_or(WitnessError::NoWitness)?;

    let n = system.ground_size();
    let mut e1 = BitSet::new(n);
    for &v in &witness.side_l {
        e1.union_with(&system.members()[v]);
    }
    let mut e2 = BitSet::new(n);
    for &v in &witness.side_m {
        e2.union_with(&system.members()[v]);
    }
    // leftover ground elements all go to the first part
    let mut leftover = BitSet::full(n);
    leftover.difference_with(&e1);
    leftover.difference_with(&e2);
    e1.union_with(&leftover);

    let colors_e1 = contained_colors(system, c, &e1);
    let colors_e2 = contained_colors(system, c, &e2);
    if colors_e1 != b1 || colors_e2 != b2 {
        return Err(WitnessError::VerificationFailed(format!(
            "parts realize {colors_e1:?} / {colors_e2:?}, expected {b1:?} / {b2:?}"
        )));
    }
    Ok(GroundPartition {
        e1: e1.iter().map(|e| e + 1).collect(),
        e2: e2.iter().map(|e| e + 1).collect(),
        colors_e1,
        colors_e2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{
        build_kneser, build_rational_complete, rational_canonical_coloring, SetSystem,
    };
    use crate::solve::enumerate_colorings;

    #[test]
    fn colorful_witness_exists_in_every_petersen_coloring() {
        let g = build_kneser(5, 2).unwrap();
        for c in enumerate_colorings(&g, 3) {
            let w = find_colorful_bipartite(&g, &c, &[1], &[2, 3])
                .unwrap()
                .expect("witness required");
            assert!(w.verify(&g, &c));
        }
    }

    #[test]
    fn trivial_side_is_a_color_transversal() {
        let g = build_kneser(5, 2).unwrap();
        let c = enumerate_colorings(&g, 3).next().unwrap();
        let w = find_colorful_bipartite(&g, &c, &[1, 2, 3], &[])
            .unwrap()
            .expect("a transversal exists for an onto coloring");
        assert!(w.verify(&g, &c));
        assert!(w.side_m.is_empty());
    }

    #[test]
    fn rational_counterexample_coloring_has_no_even_odd_witness() {
        let g = build_rational_complete(7, 2).unwrap();
        let c = rational_canonical_coloring(7, 2).unwrap();
        let w = find_colorful_bipartite(&g, &c, &[2, 4], &[1, 3]).unwrap();
        assert_eq!(w, None);
    }

    #[test]
    fn overlapping_color_sets_are_rejected() {
        let g = build_kneser(5, 2).unwrap();
        let c = enumerate_colorings(&g, 3).next().unwrap();
        assert_eq!(
            find_colorful_bipartite(&g, &c, &[1, 2], &[2, 3]).unwrap_err(),
            WitnessError::OverlappingColorSets
        );
    }

    #[test]
    fn improper_colorings_are_rejected() {
        let g = build_kneser(2, 1).unwrap();
        let c = Coloring::new(2, vec![1, 1]).unwrap();
        assert_eq!(
            find_colorful_bipartite(&g, &c, &[1], &[2]).unwrap_err(),
            WitnessError::ImproperColoring
        );
    }

    #[test]
    fn zigzag_of_length_one_is_a_single_vertex() {
        let g = build_kneser(2, 1).unwrap();
        let c = Coloring::new(2, vec![1, 2]).unwrap();
        let w = find_zigzag(&g, &c, 1).unwrap().unwrap();
        assert_eq!(w.colors.len(), 1);
        assert!(w.verify(&g, &c));
    }

    #[test]
    fn zigzag_in_petersen_colorings() {
        let g = build_kneser(5, 2).unwrap();
        for c in enumerate_colorings(&g, 3) {
            let w = find_zigzag(&g, &c, 3).unwrap().expect("zig-zag required");
            assert!(w.verify(&g, &c));
            assert_eq!(w.side_l().len(), 2);
            assert_eq!(w.side_m().len(), 1);
        }
    }

    #[test]
    fn zigzag_rejects_r_zero() {
        let g = build_kneser(2, 1).unwrap();
        let c = Coloring::new(2, vec![1, 2]).unwrap();
        assert!(find_zigzag(&g, &c, 0).is_err());
    }

    #[test]
    fn no_zigzag_of_length_four_in_rational_counterexample() {
        let g = build_rational_complete(7, 2).unwrap();
        let c = rational_canonical_coloring(7, 2).unwrap();
        assert_eq!(find_zigzag(&g, &c, 4).unwrap(), None);
    }

    #[test]
    fn spencer_su_on_petersen() {
        let f = SetSystem::k_subsets(5, 2).unwrap();
        let g = build_kneser(5, 2).unwrap();
        for c in enumerate_colorings(&g, 3) {
            let p = spencer_su_partition(&f, &c, &[1], &[2, 3]).unwrap();
            assert!(p.verify(&f, &c));
            assert_eq!(p.colors_e1, vec![1]);
            assert_eq!(p.colors_e2, vec![2, 3]);
        }
    }

    #[test]
    fn spencer_su_trivial_block() {
        let f = SetSystem::k_subsets(5, 2).unwrap();
        let g = build_kneser(5, 2).unwrap();
        let c = enumerate_colorings(&g, 3).next().unwrap();
        let p = spencer_su_partition(&f, &c, &[1, 2, 3], &[]).unwrap();
        assert!(p.e2.is_empty());
        assert_eq!(p.e1, vec![1, 2, 3, 4, 5]);
        assert!(p.verify(&f, &c));
    }

    #[test]
    fn spencer_su_requires_partitioning_blocks() {
        let f = SetSystem::k_subsets(5, 2).unwrap();
        let g = build_kneser(5, 2).unwrap();
        let c = enumerate_colorings(&g, 3).next().unwrap();
        assert!(matches!(
            spencer_su_partition(&f, &c, &[1], &[2]),
            Err(WitnessError::InvalidParameter(_))
        ));
    }

    #[test]
    fn witness_verify_rejects_tampering() {
        let g = build_kneser(5, 2).unwrap();
        let c = enumerate_colorings(&g, 3).next().unwrap();
        let mut w = find_colorful_bipartite(&g, &c, &[1], &[2, 3])
            .unwrap()
            .unwrap();
        assert!(w.verify(&g, &c));
        w.side_l[0] = (w.side_l[0] + 1) % g.vertex_count();
        assert!(!w.verify(&g, &c));
    }
}
