//! Finitely supported vectors over `Z_k^∞` (or `Z^∞` for `k = 0`) and
//! subset-sum solvers for them.
//!
//! A vector stores only its nonzero coordinates, 1-based, each holding a
//! canonical residue (`1..k` for modulus `k ≥ 2`, any nonzero integer for
//! `k = 0`). Instances of the subset-sum problem ask for `ε ∈ {0,1}^m` with
//! `ε₁ξ₁ + … + ε_mξ_m = ξ`.
//!
//! Three solvers, cross-checked against each other in the test suite:
//!
//! * [`ssp_brute`] — exhaustive search, first witness in lexicographic order;
//! * [`ssp_gf2`] — for `k = 2` the problem is span membership over GF(2),
//!   decided by Gaussian elimination (decision only, polynomial time);
//! * [`ssp_mitm`] — meet-in-the-middle, same witness contract as `ssp_brute`
//!   at roughly the square root of its cost.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::Error;

/// Generator count cap for [`ssp_brute`].
pub const BRUTE_CAP: usize = 25;
/// Generator count cap for [`ssp_mitm`].
pub const MITM_CAP: usize = 40;
/// Magnitude bound for entries when `k = 0`, low enough that no sum of
/// `MITM_CAP` entries can overflow an `i64`.
pub const MAX_Z_MAGNITUDE: i64 = 1 << 50;

/// A finitely supported vector over `Z_k^∞` (`k ≥ 2`) or `Z^∞` (`k = 0`).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SparseVector {
    k: u32,
    entries: BTreeMap<u64, i64>,
}

fn canonical(k: u32, value: i64) -> i64 {
    if k == 0 {
        value
    } else {
        value.rem_euclid(i64::from(k))
    }
}

impl SparseVector {
    /// The zero vector with modulus `k` (`0` means the integers).
    pub fn zero(k: u32) -> SparseVector {
        debug_assert!(k != 1, "modulus 1 has no nonzero residues");
        SparseVector {
            k,
            entries: BTreeMap::new(),
        }
    }

    /// The standard basis vector `e_coord`. Coordinates are 1-based.
    pub fn unit(k: u32, coord: u64) -> SparseVector {
        let mut v = SparseVector::zero(k);
        v.add_entry(coord, 1);
        v
    }

    /// Builds a vector from arbitrary entries: values are canonicalized,
    /// repeated coordinates accumulate, zeros vanish. Intended for trusted
    /// construction; parsing untrusted pairs goes through [`try_from_pairs`].
    ///
    /// [`try_from_pairs`]: SparseVector::try_from_pairs
    pub fn from_entries<I: IntoIterator<Item = (u64, i64)>>(k: u32, entries: I) -> SparseVector {
        let mut v = SparseVector::zero(k);
        for (coord, value) in entries {
            v.add_entry(coord, value);
        }
        v
    }

    /// Strict constructor for wire data: coordinates must be ≥ 1 and pairwise
    /// distinct, values already in canonical form and nonzero (for `k = 0`
    /// also bounded by [`MAX_Z_MAGNITUDE`]).
    pub fn try_from_pairs(k: u32, pairs: &[(u64, i64)]) -> Result<SparseVector, Error> {
        if k == 1 {
            return Err(Error::InvalidInstance("modulus 1 is not allowed".into()));
        }
        let mut entries = BTreeMap::new();
        for &(coord, value) in pairs {
            if coord == 0 {
                return Err(Error::InvalidInstance(
                    "coordinate indices are 1-based; 0 is invalid".into(),
                ));
            }
            let in_range = if k == 0 {
                value != 0 && value.abs() <= MAX_Z_MAGNITUDE
            } else {
                (1..i64::from(k)).contains(&value)
            };
            if !in_range {
                return Err(Error::InvalidInstance(format!(
                    "value {value} at coordinate {coord} is not a canonical nonzero \
                     residue for modulus {k}"
                )));
            }
            if entries.insert(coord, value).is_some() {
                return Err(Error::InvalidInstance(format!(
                    "coordinate {coord} appears twice"
                )));
            }
        }
        Ok(SparseVector { k, entries })
    }

    pub fn modulus(&self) -> u32 {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    /// The value at a coordinate (zero when absent).
    pub fn get(&self, coord: u64) -> i64 {
        self.entries.get(&coord).copied().unwrap_or(0)
    }

    /// Nonzero entries in ascending coordinate order.
    pub fn pairs(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.entries.iter().map(|(&c, &v)| (c, v))
    }

    fn add_entry(&mut self, coord: u64, value: i64) {
        debug_assert!(coord >= 1, "coordinates are 1-based");
        let sum = canonical(self.k, self.get(coord) + value);
        if sum == 0 {
            self.entries.remove(&coord);
        } else {
            self.entries.insert(coord, sum);
        }
    }

    /// Componentwise sum. Errors when the moduli differ; for `k = 0` an entry
    /// overflowing `i64` is reported rather than wrapped.
    pub fn add(&self, other: &SparseVector) -> Result<SparseVector, Error> {
        if self.k != other.k {
            return Err(Error::ModulusMismatch(self.k, other.k));
        }
        let mut out = self.clone();
        for (coord, value) in other.pairs() {
            let sum = (i128::from(out.get(coord)) + i128::from(value))
                .try_into()
                .map_err(|_| Error::ValueOverflow)?;
            let sum = canonical(out.k, sum);
            if sum == 0 {
                out.entries.remove(&coord);
            } else {
                out.entries.insert(coord, sum);
            }
        }
        Ok(out)
    }

    /// The additive inverse.
    pub fn neg(&self) -> SparseVector {
        let k = self.k;
        SparseVector {
            k,
            entries: self
                .entries
                .iter()
                .map(|(&c, &v)| (c, canonical(k, -v)))
                .collect(),
        }
    }

    /// `self - other`, with the same error conditions as [`add`].
    ///
    /// [`add`]: SparseVector::add
    pub fn sub(&self, other: &SparseVector) -> Result<SparseVector, Error> {
        self.add(&other.neg())
    }
}

/// A subset-sum instance over `Z_k^∞`: does some subsequence of `generators`
/// sum to `target`?
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SspZkInstance {
    k: u32,
    generators: Vec<SparseVector>,
    target: SparseVector,
}

/// Wire form: `{"k": …, "generators": [[[coord, value], …], …],
/// "target": [[coord, value], …]}`.
#[derive(Serialize, Deserialize)]
struct SspZkWire {
    k: u32,
    generators: Vec<Vec<(u64, i64)>>,
    target: Vec<(u64, i64)>,
}

impl SspZkInstance {
    /// Assembles an instance, checking that every vector carries modulus `k`.
    pub fn new(
        k: u32,
        generators: Vec<SparseVector>,
        target: SparseVector,
    ) -> Result<SspZkInstance, Error> {
        for v in generators.iter().chain(std::iter::once(&target)) {
            if v.modulus() != k {
                return Err(Error::ModulusMismatch(k, v.modulus()));
            }
        }
        Ok(SspZkInstance {
            k,
            generators,
            target,
        })
    }

    pub fn modulus(&self) -> u32 {
        self.k
    }

    pub fn generators(&self) -> &[SparseVector] {
        &self.generators
    }

    pub fn target(&self) -> &SparseVector {
        &self.target
    }

    /// Strict parse of the wire format.
    pub fn from_json(json: &str) -> Result<SspZkInstance, Error> {
        let wire: SspZkWire = serde_json::from_str(json)?;
        let generators = wire
            .generators
            .iter()
            .map(|pairs| SparseVector::try_from_pairs(wire.k, pairs))
            .collect::<Result<Vec<_>, _>>()?;
        let target = SparseVector::try_from_pairs(wire.k, &wire.target)?;
        SspZkInstance::new(wire.k, generators, target)
    }

    /// Canonical serialization: compact JSON, generators in order, entries in
    /// ascending coordinate order. Re-parsing yields an identical instance.
    pub fn to_json(&self) -> String {
        let wire = SspZkWire {
            k: self.k,
            generators: self
                .generators
                .iter()
                .map(|g| g.pairs().collect())
                .collect(),
            target: self.target.pairs().collect(),
        };
        serde_json::to_string(&wire).expect("wire form serializes")
    }
}

/// Exhaustive subset-sum search; returns the lexicographically least witness
/// (trying `ε_i = 0` before `ε_i = 1`), or `None`. Caps `m` at [`BRUTE_CAP`].
pub fn ssp_brute(inst: &SspZkInstance) -> Result<Option<Vec<u8>>, Error> {
    let m = inst.generators.len();
    if m > BRUTE_CAP {
        return Err(Error::CapExceeded {
            what: "generator count for brute-force subset sum",
            got: m,
            cap: BRUTE_CAP,
        });
    }
    let mut sum = SparseVector::zero(inst.k);
    let mut eps = Vec::with_capacity(m);
    Ok(brute_dfs(inst, 0, &mut sum, &mut eps))
}

fn brute_dfs(
    inst: &SspZkInstance,
    i: usize,
    sum: &mut SparseVector,
    eps: &mut Vec<u8>,
) -> Option<Vec<u8>> {
    if i == inst.generators.len() {
        return (sum == &inst.target).then(|| eps.clone());
    }
    eps.push(0);
    if let Some(hit) = brute_dfs(inst, i + 1, sum, eps) {
        return Some(hit);
    }
    eps.pop();

    let gen = inst.generators[i].clone();
    for (coord, value) in gen.pairs() {
        sum.add_entry(coord, value);
    }
    eps.push(1);
    let hit = brute_dfs(inst, i + 1, sum, eps);
    eps.pop();
    for (coord, value) in gen.pairs() {
        sum.add_entry(coord, -value);
    }
    hit
}

/// Span membership over GF(2) by Gaussian elimination, restricted to the
/// union of the supports. Decision only. Requires `k = 2`.
pub fn ssp_gf2(inst: &SspZkInstance) -> Result<bool, Error> {
    if inst.k != 2 {
        return Err(Error::InvalidModulus {
            what: "GF(2) elimination",
            got: inst.k,
        });
    }

    // Dense 0/1 rows over the occurring coordinates, packed into u64 words.
    let mut coords: Vec<u64> = inst
        .generators
        .iter()
        .chain(std::iter::once(&inst.target))
        .flat_map(|v| v.pairs().map(|(c, _)| c))
        .collect();
    coords.sort_unstable();
    coords.dedup();
    let index: HashMap<u64, usize> = coords.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let width = coords.len().div_ceil(64).max(1);

    let pack = |v: &SparseVector| -> Vec<u64> {
        let mut row = vec![0u64; width];
        for (coord, _) in v.pairs() {
            let bit = index[&coord];
            row[bit / 64] |= 1 << (bit % 64);
        }
        row
    };
    let leading = |row: &[u64]| -> Option<usize> {
        row.iter()
            .enumerate()
            .find(|(_, &word)| word != 0)
            .map(|(i, &word)| i * 64 + word.trailing_zeros() as usize)
    };

    fn reduce_by(basis: &HashMap<usize, Vec<u64>>, mut row: Vec<u64>) -> Vec<u64> {
        loop {
            let lead = row
                .iter()
                .enumerate()
                .find(|(_, &word)| word != 0)
                .map(|(i, &word)| i * 64 + word.trailing_zeros() as usize);
            match lead.and_then(|l| basis.get(&l)) {
                Some(pivot) => row.iter_mut().zip(pivot).for_each(|(r, p)| *r ^= p),
                None => return row,
            }
        }
    }

    // Basis rows keyed by leading bit.
    let mut basis: HashMap<usize, Vec<u64>> = HashMap::new();
    for g in &inst.generators {
        let row = reduce_by(&basis, pack(g));
        if let Some(lead) = leading(&row) {
            basis.insert(lead, row);
        }
    }
    let residue = reduce_by(&basis, pack(&inst.target));
    Ok(leading(&residue).is_none())
}

/// Meet-in-the-middle subset sum. Splits the generators in half, indexes all
/// first-half sums, and probes with `target - s` for each second-half sum
/// `s`. Ties are post-processed so the returned witness is exactly the one
/// [`ssp_brute`] would return. Caps `m` at [`MITM_CAP`].
pub fn ssp_mitm(inst: &SspZkInstance) -> Result<Option<Vec<u8>>, Error> {
    let m = inst.generators.len();
    if m > MITM_CAP {
        return Err(Error::CapExceeded {
            what: "generator count for meet-in-the-middle subset sum",
            got: m,
            cap: MITM_CAP,
        });
    }
    let half = m / 2;
    let (front, back) = inst.generators.split_at(half);

    // Lexicographic enumeration inserts the least prefix first.
    let mut sums: HashMap<SparseVector, Vec<u8>> = HashMap::new();
    enumerate_sums(front, inst.k, &mut |eps, sum| {
        sums.entry(sum.clone()).or_insert_with(|| eps.to_vec());
    })?;

    let mut best: Option<Vec<u8>> = None;
    enumerate_sums(back, inst.k, &mut |eps_back, sum| {
        let need = inst
            .target
            .sub(sum)
            .expect("moduli agree within an instance");
        if let Some(eps_front) = sums.get(&need) {
            let mut candidate = eps_front.clone();
            candidate.extend_from_slice(eps_back);
            if best.as_ref().is_none_or(|b| candidate < *b) {
                best = Some(candidate);
            }
        }
    })?;
    Ok(best)
}

/// Calls `visit` with every `ε ∈ {0,1}^len(gens)` in lexicographic order and
/// the corresponding subset sum.
fn enumerate_sums(
    gens: &[SparseVector],
    k: u32,
    visit: &mut dyn FnMut(&[u8], &SparseVector),
) -> Result<(), Error> {
    fn go(
        gens: &[SparseVector],
        i: usize,
        eps: &mut Vec<u8>,
        sum: &SparseVector,
        visit: &mut dyn FnMut(&[u8], &SparseVector),
    ) -> Result<(), Error> {
        if i == gens.len() {
            visit(eps, sum);
            return Ok(());
        }
        eps.push(0);
        go(gens, i + 1, eps, sum, visit)?;
        eps.pop();
        let with = sum.add(&gens[i])?;
        eps.push(1);
        go(gens, i + 1, eps, &with, visit)?;
        eps.pop();
        Ok(())
    }
    go(gens, 0, &mut Vec::new(), &SparseVector::zero(k), visit)
}
