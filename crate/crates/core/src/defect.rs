//! Hypergraph m-colorability, the colorability defect cd_m, the pairwise
//! disjointness condition, and the constructive three-point certificate it
//! guarantees.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bits::BitSet;
use crate::error::DefectError;
use crate::families::{combinations, SetSystem};

/// Witness for a colorability-defect value: the deleted points and a valid
/// coloring of the surviving support.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectWitness {
    pub size: usize,
    /// Deleted ground elements, 1-based ascending.
    pub deleted: Vec<usize>,
    /// Colors of the surviving support elements, 1-based elements.
    pub coloring: BTreeMap<usize, u32>,
}

/// Output of the constructive certificate: at most three deleted points and
/// a red/blue coloring of the rest, with `valid` recomputed from scratch.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectCertificate {
    pub deleted: Vec<usize>,
    pub red: Vec<usize>,
    pub blue: Vec<usize>,
    pub valid: bool,
}

fn elements(bits: &BitSet) -> Vec<usize> {
    bits.iter().map(|b| b + 1).collect()
}

/// Searches for an m-coloring of the ground set leaving no member
/// monochromatic. Backtracks over ground elements; a member whose other
/// elements are already colored alike forbids that color on its last one.
fn colorable(members: &[BitSet], ground: usize, m: u32) -> Option<Vec<u32>> {
    // members indexed by their largest element, so each becomes fully
    // assigned exactly when that element is colored
    let mut by_max: Vec<Vec<usize>> = vec![Vec::new(); ground];
    for (i, s) in members.iter().enumerate() {
        let max = s.iter().last().expect("members are nonempty");
        by_max[max].push(i);
    }
    let mut colors = vec![0u32; ground];

    fn go(
        members: &[BitSet],
        by_max: &[Vec<usize>],
        colors: &mut Vec<u32>,
        e: usize,
        m: u32,
    ) -> bool {
        if e == colors.len() {
            return true;
        }
        let mut forbidden = vec![false; m as usize];
        for &i in &by_max[e] {
            let s = &members[i];
            if s.count() == 1 {
                // a singleton member is monochromatic under every coloring
                return false;
            }
            let mut others = s.iter().filter(|&b| b != e).map(|b| colors[b]);
            let first = others.next().expect("member has another element");
            if others.all(|c| c == first) {
                forbidden[(first - 1) as usize] = true;
            }
        }
        for c in 1..=m {
            if forbidden[(c - 1) as usize] {
                continue;
            }
            colors[e] = c;
            if go(members, by_max, colors, e + 1, m) {
                return true;
            }
        }
        colors[e] = 0;
        false
    }

    if go(members, &by_max, &mut colors, 0, m) {
        Some(colors)
    } else {
        None
    }
}

/// An m-coloring of the ground set with no monochromatic member, or `None`.
/// The empty family is vacuously colorable.
pub fn is_m_colorable_hypergraph(system: &SetSystem, m: u32) -> Option<Vec<u32>> {
    if m == 0 {
        return if system.is_empty() {
            Some(Vec::new())
        } else {
            None
        };
    }
    colorable(system.members(), system.ground_size(), m)
}

/// The m-colorability defect: the minimum number of ground points whose
/// deletion leaves the surviving members m-colorable, with a witness.
///
/// Deleted points are restricted to the support of the family; deleting a
/// point outside every member cannot change the surviving members.
pub fn colorability_defect(system: &SetSystem, m: u32) -> DefectWitness {
    let support: Vec<usize> = system.support().iter().collect();
    let ground = system.ground_size();
    for size in 0..=support.len() {
        for deleted in combinations(&support, size) {
            let mut mask = BitSet::new(ground);
            for &d in &deleted {
                mask.insert(d);
            }
            let survivors: Vec<BitSet> = system
                .members()
                .iter()
                .filter(|s| s.is_disjoint(&mask))
                .cloned()
                .collect();
            if let Some(colors) = colorable(&survivors, ground, m) {
                let coloring = support
                    .iter()
                    .filter(|e| !mask.contains(**e))
                    .map(|&e| (e + 1, colors[e]))
                    .collect();
                return DefectWitness {
                    size,
                    deleted: deleted.iter().map(|&d| d + 1).collect(),
                    coloring,
                };
            }
        }
    }
    unreachable!("deleting the whole support leaves no members")
}

/// True iff for every pair of distinct member values at most one member is
/// disjoint from both. Duplicate members are collapsed first, since the
/// condition quantifies over distinct set values.
pub fn pairwise_condition(system: &SetSystem) -> bool {
    let members = system.distinct_members();
    for a in 0..members.len() {
        for b in a + 1..members.len() {
            let mut both = members[a].clone();
            both.union_with(&members[b]);
            let disjoint = members.iter().filter(|c| c.is_disjoint(&both)).count();
            if disjoint > 1 {
                return false;
            }
        }
    }
    true
}

fn recheck(system: &SetSystem, deleted: &BitSet, red: &BitSet) -> bool {
    for s in system.members() {
        if !s.is_disjoint(deleted) {
            continue;
        }
        let in_red = s.iter().filter(|&e| red.contains(e)).count();
        if in_red == 0 || in_red == s.count() {
            return false;
        }
    }
    true
}

/// The constructive two-coloring certificate for families satisfying the
/// pairwise condition: pick distinct members A, B with |A∪B| minimal (ties
/// lexicographic), delete one point from each side of their symmetric
/// difference (falling back to a point of the smaller set when one side is
/// contained in the other), delete one point of the unique member disjoint
/// from A∪B if it exists, then color the surviving part of A∪B red and
/// everything else blue. At most three points are deleted.
pub fn cd3_certificate(system: &SetSystem) -> Result<DefectCertificate, DefectError> {
    if !pairwise_condition(system) {
        return Err(DefectError::PreconditionViolated);
    }
    let ground = system.ground_size();
    let members = system.distinct_members();
    let support = system.support();

    let mut deleted = BitSet::new(ground);
    let mut red = BitSet::new(ground);

    if members.len() == 1 {
        deleted.insert(members[0].min().expect("members are nonempty"));
    } else if members.len() >= 2 {
        let mut pair = (0, 1);
        let mut best = usize::MAX;
        for a in 0..members.len() {
            for b in a + 1..members.len() {
                let mut union = members[a].clone();
                union.union_with(&members[b]);
                if union.count() < best {
                    best = union.count();
                    pair = (a, b);
                }
            }
        }
        let (a, b) = (&members[pair.0], &members[pair.1]);
        let mut union = a.clone();
        union.union_with(b);

        let mut only_a = a.clone();
        only_a.difference_with(b);
        let mut only_b = b.clone();
        only_b.difference_with(a);
        // when one member contains the other, its side of the difference is
        // empty and a point of the smaller member is deleted instead
        deleted.insert(only_a.min().unwrap_or_else(|| a.min().expect("nonempty")));
        deleted.insert(only_b.min().unwrap_or_else(|| b.min().expect("nonempty")));
        if let Some(outside) = members.iter().find(|c| c.is_disjoint(&union)) {
            deleted.insert(outside.min().expect("nonempty"));
        }

        red = union;
        red.difference_with(&deleted);
    }

    let mut blue = support.clone();
    blue.difference_with(&deleted);
    blue.difference_with(&red);

    let valid = recheck(system, &deleted, &red);
    Ok(DefectCertificate {
        deleted: elements(&deleted),
        red: elements(&red),
        blue: elements(&blue),
        valid,
    })
}
