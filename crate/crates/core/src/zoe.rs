//! Zero-one equation systems and their reductions to subset sum.
//!
//! A ZOE instance is a square 0/1 matrix; the question is whether some subset
//! of the rows sums to the all-ones vector over the integers (equivalently,
//! whether the columns can each be covered exactly once).
//!
//! [`reduce_to_zk`] is the answer-preserving reduction into subset sum over
//! `Z_k^∞` (`k > 2`): the `n` coordinates blow up to `n` blocks of `n`. Row
//! `i` becomes `ξ_i`, which puts the unit `b_i` into every block `j` with
//! `u_ij = 1`; shift vectors `δ_ij` (`-1` at place `j`, `+1` at place `j + 1`
//! inside block `i`) then allow any covered block to be normalized to `b_n`,
//! the content of the target block. A row selection solves the ZOE system
//! exactly when the corresponding `ξ`s plus suitable shifts hit the target.
//!
//! [`reduce_to_grig`] composes that with the order-8 commuting family of
//! [`crate::lift::lemma_generators`]: a vector `v` over `Z_8` becomes the
//! ordered product `Π_j A_j^{v_j}`, turning the abelian instance into a
//! subset-sum instance inside the Grigorchuk group.

use serde::{Deserialize, Serialize};

use crate::lift::lemma_generators;
use crate::sspg::SspGrigInstance;
use crate::words::GrigWord;
use crate::zkinf::{SparseVector, SspZkInstance};
use crate::Error;

/// Dimension cap for [`zoe_brute`].
pub const ZOE_BRUTE_CAP: usize = 20;
/// Dimension cap for [`reduce_to_grig`]; beyond this the group words grow
/// past desk scale.
pub const GRIG_REDUCTION_CAP: usize = 8;

/// A square system of zero-one equations: `n` rows over `n` coordinates,
/// entries in `{0, 1}`, target all-ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZoeInstance {
    n: usize,
    rows: Vec<Vec<u8>>,
}

#[derive(Serialize, Deserialize)]
struct ZoeWire {
    n: usize,
    rows: Vec<Vec<u8>>,
}

impl ZoeInstance {
    /// Validates squareness and 0/1 entries; `n ≥ 1`.
    pub fn new(rows: Vec<Vec<u8>>) -> Result<ZoeInstance, Error> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidInstance(
                "a zero-one system needs at least one row".into(),
            ));
        }
        for row in &rows {
            if row.len() != n {
                return Err(Error::InvalidInstance(format!(
                    "row of length {} in a system of {} rows",
                    row.len(),
                    n
                )));
            }
            if row.iter().any(|&e| e > 1) {
                return Err(Error::InvalidInstance(
                    "matrix entries must be 0 or 1".into(),
                ));
            }
        }
        Ok(ZoeInstance { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn from_json(json: &str) -> Result<ZoeInstance, Error> {
        let wire: ZoeWire = serde_json::from_str(json)?;
        if wire.n != wire.rows.len() {
            return Err(Error::InvalidInstance(format!(
                "declared n = {} but {} rows given",
                wire.n,
                wire.rows.len()
            )));
        }
        ZoeInstance::new(wire.rows)
    }

    /// Canonical serialization; compact JSON, `n` first.
    pub fn to_json(&self) -> String {
        let wire = ZoeWire {
            n: self.n,
            rows: self.rows.clone(),
        };
        serde_json::to_string(&wire).expect("wire form serializes")
    }
}

/// Exhaustive ZOE solver. Returns the lexicographically least `x ∈ {0,1}^n`
/// whose selected rows sum to all-ones, pruning any branch in which a
/// coordinate exceeds one (entries are nonnegative, so an overshoot can never
/// recover). Caps `n` at [`ZOE_BRUTE_CAP`].
pub fn zoe_brute(inst: &ZoeInstance) -> Result<Option<Vec<u8>>, Error> {
    let n = inst.n;
    if n > ZOE_BRUTE_CAP {
        return Err(Error::CapExceeded {
            what: "dimension for brute-force zero-one equations",
            got: n,
            cap: ZOE_BRUTE_CAP,
        });
    }
    fn go(inst: &ZoeInstance, i: usize, sums: &mut [u8], x: &mut Vec<u8>) -> Option<Vec<u8>> {
        if i == inst.n {
            return sums.iter().all(|&s| s == 1).then(|| x.clone());
        }
        x.push(0);
        if let Some(hit) = go(inst, i + 1, sums, x) {
            return Some(hit);
        }
        x.pop();

        let row = &inst.rows[i];
        if row.iter().zip(sums.iter()).any(|(&e, &s)| e + s > 1) {
            return None;
        }
        sums.iter_mut().zip(row).for_each(|(s, &e)| *s += e);
        x.push(1);
        let hit = go(inst, i + 1, sums, x);
        x.pop();
        sums.iter_mut().zip(row).for_each(|(s, &e)| *s -= e);
        hit
    }
    Ok(go(inst, 0, &mut vec![0u8; n], &mut Vec::with_capacity(n)))
}

/// The block reduction into subset sum over `Z_k^∞`, `k > 2`.
///
/// Coordinates `1..=n²` are read as `n` blocks of `n`. Generators come out in
/// the order `ξ₁, …, ξ_n, δ₁₁, δ₁₂, …, δ_{n,n-1}` (shifts row-major), so the
/// generator count is always `n²`. The target holds `b_n` in every block.
pub fn reduce_to_zk(inst: &ZoeInstance, k: u32) -> Result<SspZkInstance, Error> {
    if k <= 2 {
        return Err(Error::InvalidModulus {
            what: "the block reduction",
            got: k,
        });
    }
    let n = inst.n as u64;
    let block = |j: u64| (j - 1) * n; // offset of block j, 1-based j

    let mut generators = Vec::with_capacity(inst.n * inst.n);
    for i in 1..=n {
        let row = &inst.rows[(i - 1) as usize];
        generators.push(SparseVector::from_entries(
            k,
            (1..=n)
                .filter(|&j| row[(j - 1) as usize] == 1)
                .map(|j| (block(j) + i, 1)),
        ));
    }
    for i in 1..=n {
        for j in 1..n {
            generators.push(SparseVector::from_entries(
                k,
                [(block(i) + j, -1), (block(i) + j + 1, 1)],
            ));
        }
    }
    let target = SparseVector::from_entries(k, (1..=n).map(|j| (block(j) + n, 1)));
    SspZkInstance::new(k, generators, target)
}

/// The composed reduction into subset sum over the Grigorchuk group.
///
/// Runs [`reduce_to_zk`] with `k = 8` — the order of the base element `t`,
/// recomputed here as a guard — and then maps each vector `v` to the ordered
/// product `Π_j A_j^(v_j)` over the commuting order-8 family `A` of size
/// `n²`, coordinates ascending. Caps `n` at [`GRIG_REDUCTION_CAP`].
pub fn reduce_to_grig(inst: &ZoeInstance) -> Result<SspGrigInstance, Error> {
    use crate::grigorchuk::{order, ElementOrder};

    if inst.n > GRIG_REDUCTION_CAP {
        return Err(Error::CapExceeded {
            what: "dimension for the group reduction",
            got: inst.n,
            cap: GRIG_REDUCTION_CAP,
        });
    }
    let base = crate::lift::KElement::t();
    let k = match order(base.word(), 4) {
        ElementOrder::Finite(k) => u32::try_from(k).expect("small order"),
        ElementOrder::ExceedsCap => unreachable!("t = abab has order 8"),
    };
    assert_eq!(k, 8, "the base element must have order 8");

    let abelian = reduce_to_zk(inst, k)?;
    let family: Vec<GrigWord> = lemma_generators(inst.n * inst.n)
        .into_iter()
        .map(|g| g.word().clone())
        .collect();
    let embed = |v: &SparseVector| -> GrigWord {
        let mut word = GrigWord::identity();
        for (coord, value) in v.pairs() {
            let exponent = u32::try_from(value).expect("canonical residues are 0..8");
            word = word.concat(&family[(coord - 1) as usize].pow(exponent));
        }
        word
    };

    let generators = abelian.generators().iter().map(embed).collect();
    let target = embed(abelian.target());
    Ok(SspGrigInstance::new(generators, target))
}
