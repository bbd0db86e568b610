//! Multistationarity and multistability of small mass-action networks.

pub mod classify;
pub mod cli;
pub mod linalg;
pub mod network;
pub mod poly;
pub mod rational;
pub mod realize;
pub mod structure;
pub mod svg;
pub mod witness;

pub use classify::{classify, Capacity, CaseLabel, Verdict};
pub use network::{parse_inline, parse_network, Network, Reaction};
