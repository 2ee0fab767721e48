//! A combinatorial laboratory for coloring invariants of Kneser-type graphs.
//!
//! The crate builds the graph families under study (Kneser, Schrijver,
//! generalized Mycielski, Borsuk samples, the homomorphism-universal graphs
//! U(m,r) and W(s,t), rational complete graphs), computes exact coloring
//! invariants (chromatic and circular chromatic numbers, hypergraph
//! colorability defects), and searches exhaustively for the structures that
//! optimal colorings are forced to contain: completely multicolored complete
//! bipartite subgraphs, zig-zag witnesses, and ground-set partitions.
//!
//! Start with the runnable examples in `examples/`; each one exercises a
//! single capability end to end. The `kneserlab` binary exposes the same
//! operations behind a small subcommand interface with file-based reports.

pub mod bits;
pub mod budget;
pub mod cli;
pub mod defect;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod solve;
pub mod witness;

pub use budget::Budget;
pub use graph::{Graph, Provenance};
pub use solve::{Coloring, RationalValue};
