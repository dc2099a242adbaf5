//! Exact analysis of integer k-matchings and of (strong) integer k-matching
//! preclusion numbers.
//!
//! * [`graph`]: immutable simple graphs, fault sets, component statistics.
//! * [`generators`]: K_n, P_n, C_n, bipartite and random graphs, arrangement
//!   graphs A_{n,s}.
//! * [`matching`]: blossom maximum matching, perfect fractional matchings.
//! * [`ikm`]: perfect / almost perfect integer k-matchings via a gadget
//!   reduction, μ_k, obstruction certificates, support structure.
//! * [`preclusion`]: mp^k and smp^k by enumeration, verification and sampling.
//! * [`theorems`]: the closed-form value tables, checked row by row.

pub mod error;
pub mod generators;
pub mod graph;
pub mod ikm;
pub mod matching;
pub mod preclusion;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::{ComponentReport, FaultSet, Graph};
