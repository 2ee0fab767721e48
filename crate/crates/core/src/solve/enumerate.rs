//! Enumeration of proper colorings up to color permutation.
//!
//! The canonical representative of an orbit is the coloring whose colors
//! appear in order of first use along the canonical vertex order; the stream
//! yields exactly one representative per orbit, in ascending lexicographic
//! order of the color vectors.

use crate::graph::Graph;
use crate::solve::Coloring;

/// Iterator over canonical proper palette-`t` colorings.
pub struct CanonicalColorings<'g> {
    g: &'g Graph,
    t: u32,
    colors: Vec<u32>,
    /// max color used among vertices before index i
    max_before: Vec<u32>,
    pos: usize,
    state: State,
}

enum State {
    Fresh,
    Running,
    Done,
}

/// Streams every canonical proper `t`-coloring of `g`; empty when no proper
/// `t`-coloring exists.
pub fn enumerate_colorings(g: &Graph, t: u32) -> CanonicalColorings<'_> {
    let n = g.vertex_count();
    CanonicalColorings {
        g,
        t,
        colors: vec![0; n],
        max_before: vec![0; n + 1],
        pos: 0,
        state: if t == 0 { State::Done } else { State::Fresh },
    }
}

impl CanonicalColorings<'_> {
    fn feasible(&self, v: usize, c: u32) -> bool {
        // unassigned neighbors hold 0, which never equals a real color
        !self.g.neighbors(v).iter().any(|u| self.colors[u] == c)
    }
}

impl Iterator for CanonicalColorings<'_> {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        let n = self.g.vertex_count();
        match self.state {
            State::Done => return None,
            State::Fresh => {
                self.state = State::Running;
                if n == 0 {
                    self.state = State::Done;
                    return Some(Coloring::new(self.t, Vec::new()).expect("valid palette"));
                }
            }
            State::Running => {
                // resume by advancing the deepest vertex
                self.pos = n - 1;
            }
        }
        loop {
            let v = self.pos;
            let start = self.colors[v] + 1;
            let cap = self.t.min(self.max_before[v] + 1);
            let mut advanced = false;
            for c in start..=cap {
                if self.feasible(v, c) {
                    self.colors[v] = c;
                    self.max_before[v + 1] = self.max_before[v].max(c);
                    advanced = true;
                    break;
                }
            }
            if advanced {
                if v + 1 == n {
                    return Some(
                        Coloring::new(self.t, self.colors.clone()).expect("colors within palette"),
                    );
                }
                self.pos += 1;
            } else {
                self.colors[v] = 0;
                if v == 0 {
                    self.state = State::Done;
                    return None;
                }
                self.pos -= 1;
            }
        }
    }
}
