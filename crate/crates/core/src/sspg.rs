//! Subset sum inside the Grigorchuk group.
//!
//! Given generators `g₁, …, g_m` and a target `g`, decide whether some
//! `ε ∈ {0,1}^m` satisfies `g₁^ε₁ · g₂^ε₂ · … · g_m^ε_m = g`. The product is
//! ordered — no commutativity is assumed — which is exactly the form the
//! composed reduction of [`crate::zoe::reduce_to_grig`] produces.
//!
//! Both solvers return the lexicographically least witness. They compare
//! partial products through [`canonical_portrait`], whose structural equality
//! coincides with group equality, so portraits serve both as memoization keys
//! (DFS) and as index keys (meet-in-the-middle).

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::grigorchuk::{canonical_portrait, equal, Portrait};
use crate::words::GrigWord;
use crate::Error;

/// Generator count cap for [`Strategy::Dfs`].
pub const DFS_CAP: usize = 24;
/// Generator count cap for [`Strategy::Mitm`].
pub const GRIG_MITM_CAP: usize = 30;

/// A subset-sum instance over the group: words for the generators and the
/// target. Parsing reduces the words; the wire form is
/// `{"generators": ["word", …], "target": "word"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SspGrigInstance {
    generators: Vec<GrigWord>,
    target: GrigWord,
}

impl SspGrigInstance {
    pub fn new(generators: Vec<GrigWord>, target: GrigWord) -> SspGrigInstance {
        SspGrigInstance { generators, target }
    }

    pub fn generators(&self) -> &[GrigWord] {
        &self.generators
    }

    pub fn target(&self) -> &GrigWord {
        &self.target
    }

    pub fn from_json(json: &str) -> Result<SspGrigInstance, Error> {
        Ok(serde_json::from_str(json)?)
    }

    /// Canonical serialization: compact JSON, reduced words.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("wire form serializes")
    }
}

/// Search strategy for [`solve`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Depth-first search over prefixes, memoized on (position, portrait of
    /// the prefix product); visits witnesses in lexicographic order.
    Dfs,
    /// Meet-in-the-middle over the two halves of the generator list, with tie
    /// post-processing to preserve the least-witness contract.
    Mitm,
}

/// Decides the instance and returns the lexicographically least witness, or
/// `None`. Both strategies agree exactly; they differ only in cost shape.
pub fn solve(inst: &SspGrigInstance, strategy: Strategy) -> Result<Option<Vec<u8>>, Error> {
    match strategy {
        Strategy::Dfs => solve_dfs(inst),
        Strategy::Mitm => solve_mitm(inst),
    }
}

/// Replays a witness through the ordered product and compares with the
/// target. Errors when the witness length does not match the generator count
/// or contains entries outside `{0, 1}`.
pub fn verify_witness(inst: &SspGrigInstance, eps: &[u8]) -> Result<bool, Error> {
    if eps.len() != inst.generators.len() {
        return Err(Error::WitnessLength {
            got: eps.len(),
            expected: inst.generators.len(),
        });
    }
    if eps.iter().any(|&e| e > 1) {
        return Err(Error::InvalidInstance(
            "witness entries must be 0 or 1".into(),
        ));
    }
    let mut product = GrigWord::identity();
    for (gen, &e) in inst.generators.iter().zip(eps) {
        if e == 1 {
            product = product.concat(gen);
        }
    }
    Ok(equal(&product, &inst.target))
}

fn solve_dfs(inst: &SspGrigInstance) -> Result<Option<Vec<u8>>, Error> {
    let m = inst.generators.len();
    if m > DFS_CAP {
        return Err(Error::CapExceeded {
            what: "generator count for group subset-sum DFS",
            got: m,
            cap: DFS_CAP,
        });
    }

    // Two prefixes with the same portrait have identical subtrees of
    // outcomes, and the lexicographically first visit explores a subtree
    // exhaustively before any revisit, so pruning on seen states keeps both
    // completeness and the least-witness guarantee.
    fn go(
        inst: &SspGrigInstance,
        i: usize,
        prefix: &GrigWord,
        eps: &mut Vec<u8>,
        seen: &mut HashSet<(usize, Portrait)>,
    ) -> Option<Vec<u8>> {
        if i == inst.generators.len() {
            return equal(prefix, &inst.target).then(|| eps.clone());
        }
        if !seen.insert((i, canonical_portrait(prefix))) {
            return None;
        }
        eps.push(0);
        if let Some(hit) = go(inst, i + 1, prefix, eps, seen) {
            return Some(hit);
        }
        eps.pop();
        let extended = prefix.concat(&inst.generators[i]);
        eps.push(1);
        let hit = go(inst, i + 1, &extended, eps, seen);
        eps.pop();
        hit
    }

    Ok(go(
        inst,
        0,
        &GrigWord::identity(),
        &mut Vec::with_capacity(m),
        &mut HashSet::new(),
    ))
}

fn solve_mitm(inst: &SspGrigInstance) -> Result<Option<Vec<u8>>, Error> {
    let m = inst.generators.len();
    if m > GRIG_MITM_CAP {
        return Err(Error::CapExceeded {
            what: "generator count for group subset-sum meet-in-the-middle",
            got: m,
            cap: GRIG_MITM_CAP,
        });
    }
    let half = m / 2;
    let (front, back) = inst.generators.split_at(half);

    // Index the first-half prefix products by portrait; lexicographic
    // enumeration makes the first stored witness the least one.
    let mut prefixes: HashMap<Portrait, Vec<u8>> = HashMap::new();
    enumerate_products(front, &mut |eps, product| {
        prefixes
            .entry(canonical_portrait(product))
            .or_insert_with(|| eps.to_vec());
    });

    // For a second-half product S the first half must contribute target·S⁻¹.
    let mut best: Option<Vec<u8>> = None;
    enumerate_products(back, &mut |eps_back, product| {
        let need = inst.target.concat(&product.invert());
        if let Some(eps_front) = prefixes.get(&canonical_portrait(&need)) {
            let mut candidate = eps_front.clone();
            candidate.extend_from_slice(eps_back);
            if best.as_ref().is_none_or(|b| candidate < *b) {
                best = Some(candidate);
            }
        }
    });
    Ok(best)
}

/// Calls `visit` with every `ε ∈ {0,1}^len(gens)` in lexicographic order and
/// the corresponding ordered product.
fn enumerate_products(gens: &[GrigWord], visit: &mut dyn FnMut(&[u8], &GrigWord)) {
    fn go(
        gens: &[GrigWord],
        i: usize,
        eps: &mut Vec<u8>,
        product: &GrigWord,
        visit: &mut dyn FnMut(&[u8], &GrigWord),
    ) {
        if i == gens.len() {
            visit(eps, product);
            return;
        }
        eps.push(0);
        go(gens, i + 1, eps, product, visit);
        eps.pop();
        let extended = product.concat(&gens[i]);
        eps.push(1);
        go(gens, i + 1, eps, &extended, visit);
        eps.pop();
    }
    go(gens, 0, &mut Vec::new(), &GrigWord::identity(), visit)
}
