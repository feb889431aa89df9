//! Shared helpers for the integration suites: seeded randomness, raw letter
//! sequences, trivial-by-construction words, and random instance generators.

#![allow(dead_code)]

use grigsum::lift::KElement;
use grigsum::words::{GrigWord, Letter};
use grigsum::zkinf::{SparseVector, SspZkInstance};
use grigsum::zoe::ZoeInstance;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn w(s: &str) -> GrigWord {
    s.parse().expect("test words are well-formed")
}

/// Relators of the group used to build trivial words by construction. Each
/// one is checked to be trivial in `grig_oracle::relators_are_trivial`.
pub const RELATORS: [&str; 13] = [
    "aa",
    "bb",
    "cc",
    "dd",
    "bcd",
    "bdc",
    "cbd",
    "cdb",
    "dbc",
    "dcb",
    "adadadad",
    "acacacacacacacac",
    "abababababababababababababababab",
];

/// Uniformly random raw letter sequence (not reduced).
pub fn random_letters(rng: &mut ChaCha8Rng, len: usize) -> Vec<Letter> {
    (0..len).map(|_| Letter::ALL[rng.gen_range(0..4)]).collect()
}

/// Random element presented by a raw sequence of at most `max_raw_len`
/// letters; the returned word is its reduced form.
pub fn random_word(rng: &mut ChaCha8Rng, max_raw_len: usize) -> GrigWord {
    let len = rng.gen_range(0..=max_raw_len);
    GrigWord::from_letters(random_letters(rng, len))
}

/// A word trivial in the group by construction: splice relators into the
/// empty sequence at random positions. Splicing preserves the represented
/// element, so the result is trivial no matter how the pieces interleave.
pub fn random_trivial_word(rng: &mut ChaCha8Rng, insertions: usize) -> GrigWord {
    let mut seq: Vec<char> = Vec::new();
    for _ in 0..insertions {
        let rel = RELATORS[rng.gen_range(0..RELATORS.len())];
        let pos = rng.gen_range(0..=seq.len());
        seq.splice(pos..pos, rel.chars());
    }
    let s: String = seq.into_iter().collect();
    w(&s)
}

/// u·u⁻¹ for a random raw sequence u; trivial by cancellation. All letters
/// are involutions, so the inverse of a raw sequence is its reverse.
pub fn random_uu_inverse(rng: &mut ChaCha8Rng, max_half_len: usize) -> GrigWord {
    let half_len = rng.gen_range(0..=max_half_len);
    let half = random_letters(rng, half_len);
    let mut seq = half.clone();
    seq.extend(half.into_iter().rev());
    GrigWord::from_letters(seq)
}

/// Random element of the base subgroup: a product of conjugates g⁻¹·tᵉ·g of
/// t = (ab)², which lies in the normal closure of t by construction.
pub fn random_k_element(rng: &mut ChaCha8Rng, conjugates: usize) -> KElement {
    let t = w("abab");
    let mut acc = GrigWord::identity();
    for _ in 0..conjugates {
        let g = random_word(rng, 6);
        let e = rng.gen_range(1..8u32);
        let piece = g.invert().concat(&t.pow(e)).concat(&g);
        acc = acc.concat(&piece);
    }
    KElement::from_word(acc).expect("conjugate products of t pass the membership check")
}

/// Random sparse vector: `support` distinct coordinates in 1..=max_coord with
/// nonzero values (canonical residues for k ≥ 2, small signed ints for k = 0).
pub fn random_vector(
    rng: &mut ChaCha8Rng,
    k: u32,
    max_support: usize,
    max_coord: u64,
) -> SparseVector {
    let support = rng.gen_range(0..=max_support);
    let mut coords: Vec<u64> = (1..=max_coord).collect();
    coords.shuffle(rng);
    let entries = coords.into_iter().take(support).map(|c| {
        let v = if k >= 2 {
            rng.gen_range(1..k) as i64
        } else {
            let m = rng.gen_range(1..=9i64);
            if rng.gen_bool(0.5) {
                m
            } else {
                -m
            }
        };
        (c, v)
    });
    SparseVector::from_entries(k, entries)
}

/// Random subset-sum instance over Z_k^∞. Half the time the target is the
/// sum of a random subset of the generators (guaranteed solvable); otherwise
/// it is an unrelated random vector.
pub fn random_zk_instance(
    rng: &mut ChaCha8Rng,
    k: u32,
    gens: usize,
    max_support: usize,
    max_coord: u64,
) -> SspZkInstance {
    let generators: Vec<SparseVector> = (0..gens)
        .map(|_| random_vector(rng, k, max_support, max_coord))
        .collect();
    let target = if rng.gen_bool(0.5) {
        let mut sum = SparseVector::zero(k);
        for g in &generators {
            if rng.gen_bool(0.5) {
                sum = sum.add(g).expect("small test values never overflow");
            }
        }
        sum
    } else {
        random_vector(rng, k, max_support, max_coord)
    };
    SspZkInstance::new(k, generators, target).expect("moduli agree by construction")
}

/// Random square 0/1 system.
pub fn random_zoe(rng: &mut ChaCha8Rng, n: usize) -> ZoeInstance {
    let rows = (0..n)
        .map(|_| (0..n).map(|_| u8::from(rng.gen_bool(0.5))).collect())
        .collect();
    ZoeInstance::new(rows).expect("0/1 square matrices are always valid")
}

/// Sum of the generators selected by a 0/1 vector; replays a witness.
pub fn zk_sum(inst: &SspZkInstance, eps: &[u8]) -> SparseVector {
    let mut sum = SparseVector::zero(inst.modulus());
    for (e, g) in eps.iter().zip(inst.generators()) {
        if *e == 1 {
            sum = sum.add(g).expect("test values never overflow");
        }
    }
    sum
}

/// Does x solve the 0/1 system, i.e. does the selected subset of the row
/// vectors sum to (1, …, 1) coordinatewise?
pub fn zoe_satisfied(inst: &ZoeInstance, x: &[u8]) -> bool {
    let n = inst.n();
    (0..n).all(|j| {
        let s: u32 = inst
            .rows()
            .iter()
            .zip(x)
            .map(|(row, &xi)| u32::from(row[j]) * u32::from(xi))
            .sum();
        s == 1
    })
}

/// All 0/1 vectors of length m in lexicographic order (0 before 1).
pub fn all_bit_vectors(m: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::with_capacity(1 << m);
    for mask in 0..(1u32 << m) {
        out.push((0..m).map(|i| ((mask >> (m - 1 - i)) & 1) as u8).collect());
    }
    out
}
