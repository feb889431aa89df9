//! Computational toolkit for subset-sum problems in the first Grigorchuk
//! group.
//!
//! The crate is organized bottom-up:
//!
//! * [`words`] — reduced words over the generators `{a, b, c, d}`;
//! * [`grigorchuk`] — the action on the binary tree: sections, the word
//!   problem, portraits, element orders;
//! * [`lift`] — substitution homomorphisms into the subgroup `K` and families
//!   of independent commuting order-8 elements;
//! * [`zkinf`] — finitely supported vectors over `Z_k^∞` with brute-force,
//!   GF(2) and meet-in-the-middle subset-sum solvers;
//! * [`zoe`] — zero-one equation systems, their block reduction to subset sum
//!   over `Z_k^∞`, and the composed reduction into the group;
//! * [`sspg`] — subset-sum solvers inside the group itself.
//!
//! Everything is exact integer/word arithmetic; randomness appears only in
//! test harnesses. The solvers are desk-scale reference implementations with
//! explicit caps, meant for cross-validating the reductions rather than for
//! bulk computation.

pub mod grigorchuk;
pub mod lift;
pub mod sspg;
pub mod words;
pub mod zkinf;
pub mod zoe;

pub use grigorchuk::{
    act_on, canonical_portrait, equal, in_stabilizer, is_trivial, is_trivial_oracle, order,
    sections, ElementOrder, Portrait, Vertex,
};
pub use words::{GrigWord, Letter};

/// Errors across the crate. Operations that can only fail on caller mistakes
/// (bad input text, mismatched moduli, violated caps) report them here;
/// mathematical invariants are enforced by construction instead.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid letter {0:?}: words are over the alphabet a, b, c, d")]
    InvalidLetter(char),

    #[error("invalid vertex character {0:?}: tree vertices are binary strings")]
    InvalidVertexBit(char),

    #[error("the word moves the first level of the tree (odd number of a's)")]
    NotInStabilizer,

    #[error("the word fails the K-membership check (nontrivial image under rho)")]
    NotInK,

    #[error("invalid lifting index {0}: only 0 and 1 name subtrees")]
    InvalidPhiIndex(u8),

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),

    #[error("{what} does not support modulus {got}")]
    InvalidModulus { what: &'static str, got: u32 },

    #[error("{what}: got {got}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        got: usize,
        cap: usize,
    },

    #[error("integer entry overflow")]
    ValueOverflow,

    #[error("witness has {got} entries but the instance has {expected} generators")]
    WitnessLength { got: usize, expected: usize },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("malformed JSON")]
    Json(#[from] serde_json::Error),
}
