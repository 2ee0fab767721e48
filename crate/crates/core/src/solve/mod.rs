//! Exact coloring machinery: properness, chromatic number, canonical
//! coloring enumeration, homomorphism search, circular chromatic number, and
//! the local/wide coloring predicates.

mod chromatic;
mod circular;
mod enumerate;
mod hom;
mod rational;

pub use chromatic::{chromatic_number, chromatic_number_with_coloring};
pub use circular::circular_chromatic;
pub use enumerate::{enumerate_colorings, CanonicalColorings};
pub use hom::{find_homomorphism, HomMap};
pub use rational::RationalValue;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bits::BitSet;
use crate::budget::Budget;
use crate::error::SolveError;
use crate::graph::Graph;

/// A palette-bounded color assignment, aligned with the canonical vertex
/// order. Colors are 1-based and lie in `1..=palette`. Carrying a `Coloring`
/// does not guarantee properness; that is a checked predicate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawColoring", into = "RawColoring")]
pub struct Coloring {
    palette: u32,
    colors: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct RawColoring {
    palette: u32,
    colors: Vec<u32>,
}

impl From<Coloring> for RawColoring {
    fn from(c: Coloring) -> Self {
        RawColoring {
            palette: c.palette,
            colors: c.colors,
        }
    }
}

impl TryFrom<RawColoring> for Coloring {
    type Error = String;

    fn try_from(raw: RawColoring) -> Result<Self, String> {
        Coloring::new(raw.palette, raw.colors).map_err(|e| e.to_string())
    }
}

impl Coloring {
    pub fn new(palette: u32, colors: Vec<u32>) -> Result<Self, SolveError> {
        if palette == 0 {
            return Err(SolveError::InvalidParameter(
                "palette size must be positive".into(),
            ));
        }
        if let Some(&bad) = colors.iter().find(|&&c| c == 0 || c > palette) {
            return Err(SolveError::InvalidParameter(format!(
                "color {bad} outside palette [{palette}]"
            )));
        }
        Ok(Coloring { palette, colors })
    }

    pub fn palette(&self) -> u32 {
        self.palette
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    #[inline]
    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Vertices of each color, indexed by `color - 1`.
    pub fn classes(&self) -> Vec<BitSet> {
        let mut classes = vec![BitSet::new(self.colors.len()); self.palette as usize];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[(c - 1) as usize].insert(v);
        }
        classes
    }

    /// Colors actually used, ascending.
    pub fn used_colors(&self) -> Vec<u32> {
        let mut used: Vec<u32> = self.colors.clone();
        used.sort_unstable();
        used.dedup();
        used
    }
}

fn check_size(g: &Graph, c: &Coloring) -> Result<(), SolveError> {
    if c.len() != g.vertex_count() {
        return Err(SolveError::SizeMismatch {
            expected: g.vertex_count(),
            got: c.len(),
        });
    }
    Ok(())
}

/// True iff no edge of `g` is monochromatic under `c`.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool, SolveError> {
    check_size(g, c)?;
    for (u, v) in g.edges() {
        if c.color(u) == c.color(v) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn require_proper(g: &Graph, c: &Coloring) -> Result<(), SolveError> {
    if !is_proper(g, c)? {
        return Err(SolveError::ImproperColoring);
    }
    Ok(())
}

/// Maximum, over all vertices, of the number of distinct colors in the
/// closed neighborhood: the neighborhood's color count plus one for the
/// vertex itself.
pub fn max_closed_neighborhood_colors(g: &Graph, c: &Coloring) -> Result<u32, SolveError> {
    require_proper(g, c)?;
    let mut max = 0u32;
    for v in 0..g.vertex_count() {
        let mut seen = BitSet::new(c.palette() as usize);
        for u in g.neighbors(v).iter() {
            seen.insert((c.color(u) - 1) as usize);
        }
        max = max.max(seen.count() as u32 + 1);
    }
    Ok(max)
}

fn bool_mat_mult(a: &[BitSet], b: &[BitSet], n: usize) -> Vec<BitSet> {
    let mut out = vec![BitSet::new(n); n];
    for i in 0..n {
        for j in a[i].iter() {
            out[i].union_with(&b[j]);
        }
    }
    out
}

/// True iff no walk of length exactly 2s-1 joins two vertices of the same
/// color (including a vertex to itself).
pub fn is_wide(g: &Graph, c: &Coloring, s: u32) -> Result<bool, SolveError> {
    if s == 0 {
        return Err(SolveError::InvalidParameter(
            "wideness parameter s must be positive".into(),
        ));
    }
    require_proper(g, c)?;
    let n = g.vertex_count();
    let adj: Vec<BitSet> = (0..n).map(|v| g.neighbors(v).clone()).collect();
    let mut reach = adj.clone();
    for _ in 1..(2 * s - 1) {
        reach = bool_mat_mult(&reach, &adj, n);
    }
    for u in 0..n {
        for v in u..n {
            if c.color(u) == c.color(v) && reach[u].contains(v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Minimum over all proper palette-`m` colorings of
/// [`max_closed_neighborhood_colors`]: the bounded-palette local chromatic
/// value, by exhaustive canonical enumeration.
pub fn min_colors_local(g: &Graph, m: u32, budget: &Budget) -> Result<u32, SolveError> {
    let floor = if g.edge_count() == 0 { 1 } else { 2 };
    let mut meter = budget.start();
    let mut best: Option<u32> = None;
    for coloring in enumerate_colorings(g, m) {
        if meter.tick().is_err() {
            return Err(SolveError::BudgetLocal { best });
        }
        let value = max_closed_neighborhood_colors(g, &coloring)?;
        if best.map(|b| value < b).unwrap_or(true) {
            best = Some(value);
            if value == floor {
                break;
            }
        }
    }
    best.ok_or(SolveError::Infeasible { palette: m })
}

/// A proper coloring drawn by seeded randomized backtracking: vertex order
/// is canonical, color order is shuffled per vertex. Returns `None` only
/// when no proper `t`-coloring exists.
pub fn random_proper_coloring<R: Rng>(g: &Graph, t: u32, rng: &mut R) -> Option<Coloring> {
    fn go<R: Rng>(g: &Graph, t: u32, v: usize, colors: &mut Vec<u32>, rng: &mut R) -> bool {
        if v == g.vertex_count() {
            return true;
        }
        let mut order: Vec<u32> = (1..=t).collect();
        order.shuffle(rng);
        for c in order {
            if g.neighbors(v).iter().all(|u| colors[u] != c) {
                colors[v] = c;
                if go(g, t, v + 1, colors, rng) {
                    return true;
                }
                colors[v] = 0;
            }
        }
        false
    }

    let mut colors = vec![0u32; g.vertex_count()];
    if go(g, t, 0, &mut colors, rng) {
        Some(Coloring::new(t, colors).expect("backtracking stays in palette"))
    } else {
        None
    }
}
