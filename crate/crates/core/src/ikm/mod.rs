//! Integer k-matchings: verification, existence of perfect and almost
//! perfect assignments, the integer k-matching number, obstruction
//! certificates and support structure.

mod assignment;
mod certificate;
mod decide;
mod gadget;
mod structure;

pub use assignment::{verify, IkmClass, IkmKind, IntegerKMatching};
pub use certificate::{lemma41_certificate, CertBudget, Lemma41Certificate};
pub use decide::{
    decide_almost_perfect_ikm, decide_perfect_ikm, has_almost_perfect_ikm, has_perfect_ikm, has_perfect_or_almost,
    max_ikm, mu_k, Decision,
};
pub use gadget::{build_gadget, GadgetGraph};
pub use structure::{blocks, is_odd_cycle_tree, support_structure, SupportComponent, SupportKind, SupportReport};
