//! Signed-graph spectra: exact and numeric eigenvalue multiplicities,
//! switching and balance, girth, and exhaustive checks of the girth bound
//! `m(G^σ, λ) ≤ n − g + 2` over small graphs.

pub mod cli;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod formulas;
pub mod graph;
pub mod linalg;
pub mod report;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::{
    BalanceClass, BalanceKind, CycleWitness, Edge, Sign, SignedGraph, SwitchingFunction,
};
