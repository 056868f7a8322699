//! Pseudoknots in extended Conway notation.
//!
//! Symbols such as `3 i 3` or `6*2.2 0.i.1.1.1` are parsed into an
//! expression tree ([`notation`]), built into planar pseudodiagrams
//! ([`diagram`]), and examined through their coloring matrices
//! ([`linalg`], [`invariants`]). The [`families`] module holds a table of
//! parametric pseudoknot families with closed-form pseudodeterminants.

pub mod diagram;
pub mod exec;
pub mod families;
pub mod invariants;
pub mod linalg;
pub mod notation;

pub use diagram::{DiagramError, NodeKind, PseudoDiagram};
pub use notation::{parse, ConwayExpr, ParseError};
