//! Shared machinery for the `grigsum` binary and its end-to-end tests:
//! seeded random generators for words and instances, and the self-check
//! suites behind `grigsum selftest`.

use grigsum::grigorchuk::{
    equal, is_trivial, is_trivial_oracle, sufficient_oracle_depth,
};
use grigsum::sspg::{solve, verify_witness, SspGrigInstance, Strategy};
use grigsum::words::{GrigWord, Letter};
use grigsum::zkinf::{ssp_brute, ssp_gf2, ssp_mitm, SparseVector, SspZkInstance};
use grigsum::zoe::{reduce_to_zk, zoe_brute, ZoeInstance};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

/// Default seed for every randomized subcommand, so plain invocations are
/// reproducible run to run.
pub const DEFAULT_SEED: u64 = 20240817;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniformly random raw letter sequence (not reduced).
pub fn random_letters(rng: &mut ChaCha8Rng, len: usize) -> Vec<Letter> {
    (0..len).map(|_| Letter::ALL[rng.gen_range(0..4)]).collect()
}

/// Random group element presented by at most `max_raw_len` letters.
pub fn random_word(rng: &mut ChaCha8Rng, max_raw_len: usize) -> GrigWord {
    let len = rng.gen_range(0..=max_raw_len);
    GrigWord::from_letters(random_letters(rng, len))
}

/// A word trivial by construction: relators spliced into the empty sequence
/// at random positions.
pub fn random_trivial_word(rng: &mut ChaCha8Rng, insertions: usize) -> GrigWord {
    const RELATORS: [&str; 12] = [
        "aa", "bb", "cc", "dd", "bcd", "bdc", "cbd", "cdb", "dbc", "dcb", "adadadad",
        "acacacacacacacac",
    ];
    let mut seq: Vec<char> = Vec::new();
    for _ in 0..insertions {
        let rel = RELATORS[rng.gen_range(0..RELATORS.len())];
        let pos = rng.gen_range(0..=seq.len());
        seq.splice(pos..pos, rel.chars());
    }
    seq.into_iter().collect::<String>().parse().expect("relators parse")
}

/// Random sparse vector with values canonical for the modulus.
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

/// Random subset-sum instance over Z_k^∞; the target is planted half the
/// time so both outcomes stay well represented.
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

/// Random subset-sum instance over the group, target planted half the time.
pub fn random_grig_instance(rng: &mut ChaCha8Rng, gens: usize) -> SspGrigInstance {
    let generators: Vec<GrigWord> = (0..gens).map(|_| random_word(rng, 8)).collect();
    let target = if rng.gen_bool(0.5) {
        let mut acc = GrigWord::identity();
        for g in &generators {
            if rng.gen_bool(0.5) {
                acc = acc.concat(g);
            }
        }
        acc
    } else {
        random_word(rng, 10)
    };
    SspGrigInstance::new(generators, target)
}

/// Outcome of one self-check suite.
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
}

/// Runs every self-check suite with sub-seeds derived from `seed`. Each
/// suite counts cases and failures instead of panicking, so a broken build
/// reports everything that is wrong in one pass.
pub fn run_selftest(seed: u64) -> Vec<SuiteReport> {
    vec![
        suite_reduction_confluence(seed ^ 0x01),
        suite_word_problem_oracle(seed ^ 0x02),
        suite_zk_solvers(seed ^ 0x03),
        suite_zoe_reduction(seed ^ 0x04),
        suite_grig_solvers(seed ^ 0x05),
    ]
}

/// Stack reducer vs. one random rewrite order per sequence.
fn suite_reduction_confluence(seed: u64) -> SuiteReport {
    let mut rng = seeded(seed);
    let mut failures = 0;
    let cases = 200;
    for _ in 0..cases {
        let len = rng.gen_range(0..=48);
        let seq = random_letters(&mut rng, len);
        let reduced = GrigWord::from_letters(seq.clone());
        if naive_reduce(&mut rng, seq) != reduced.letters() {
            failures += 1;
        }
    }
    SuiteReport { name: "reduction-confluence", cases, failures }
}

fn naive_reduce(rng: &mut ChaCha8Rng, mut seq: Vec<Letter>) -> Vec<Letter> {
    loop {
        let sites: Vec<usize> = (0..seq.len().saturating_sub(1))
            .filter(|&i| {
                let (x, y) = (seq[i], seq[i + 1]);
                x == y || (x.is_k4() && y.is_k4())
            })
            .collect();
        let Some(&i) = sites.choose(rng) else {
            return seq;
        };
        let (x, y) = (seq[i], seq[i + 1]);
        if x == y {
            seq.drain(i..=i + 1);
        } else {
            seq.splice(i..=i + 1, [Letter::k4_product(x, y)]);
        }
    }
}

/// Contraction decision vs. the brute tree action, plus constructed
/// trivial words.
fn suite_word_problem_oracle(seed: u64) -> SuiteReport {
    let mut rng = seeded(seed);
    let mut failures = 0;
    let mut cases = 0;
    for _ in 0..150 {
        cases += 1;
        let word = random_word(&mut rng, 32);
        if is_trivial(&word) != is_trivial_oracle(&word, sufficient_oracle_depth(&word)) {
            failures += 1;
        }
    }
    for i in 0..50 {
        cases += 1;
        let word = random_trivial_word(&mut rng, 1 + i % 6);
        if !is_trivial(&word) {
            failures += 1;
        }
    }
    SuiteReport { name: "word-problem-oracle", cases, failures }
}

/// Brute, meet-in-the-middle, and (for modulus 2) elimination must agree.
fn suite_zk_solvers(seed: u64) -> SuiteReport {
    let mut rng = seeded(seed);
    let mut failures = 0;
    let cases = 100;
    for round in 0..cases {
        let k = [0u32, 2, 3, 5, 8][round % 5];
        let gens = rng.gen_range(0..=10);
        let inst = random_zk_instance(&mut rng, k, gens, 4, 6);
        let brute = ssp_brute(&inst).expect("within caps");
        let mitm = ssp_mitm(&inst).expect("within caps");
        let mut ok = brute == mitm;
        if k == 2 {
            ok &= ssp_gf2(&inst).expect("modulus is 2") == brute.is_some();
        }
        if !ok {
            failures += 1;
        }
    }
    SuiteReport { name: "zk-solvers", cases, failures }
}

/// Solvability transfer through the Z_k^∞ reduction: exhaustive at n ≤ 2,
/// sampled at n = 3.
fn suite_zoe_reduction(seed: u64) -> SuiteReport {
    let mut rng = seeded(seed);
    let mut failures = 0;
    let mut cases = 0;
    let check = |inst: &ZoeInstance, k: u32| -> bool {
        let reduced = reduce_to_zk(inst, k).expect("modulus above 2");
        zoe_brute(inst).expect("within caps").is_some()
            == ssp_brute(&reduced).expect("within caps").is_some()
    };
    for n in 1..=2usize {
        for mask in 0..(1u32 << (n * n)) {
            let bits: Vec<u8> = (0..n * n).map(|i| (mask >> i & 1) as u8).collect();
            let inst =
                ZoeInstance::new(bits.chunks(n).map(<[u8]>::to_vec).collect()).expect("square");
            for k in [3, 8] {
                cases += 1;
                if !check(&inst, k) {
                    failures += 1;
                }
            }
        }
    }
    for _ in 0..20 {
        let inst = random_zoe(&mut rng, 3);
        cases += 1;
        if !check(&inst, 3) {
            failures += 1;
        }
    }
    SuiteReport { name: "zoe-reduction", cases, failures }
}

/// The two group solvers agree and their positive answers replay.
fn suite_grig_solvers(seed: u64) -> SuiteReport {
    let mut rng = seeded(seed);
    let mut failures = 0;
    let cases = 60;
    for _ in 0..cases {
        let gens = rng.gen_range(0..=9);
        let inst = random_grig_instance(&mut rng, gens);
        let dfs = solve(&inst, Strategy::Dfs).expect("within caps");
        let mitm = solve(&inst, Strategy::Mitm).expect("within caps");
        let mut ok = dfs == mitm;
        if let Some(eps) = &dfs {
            ok &= verify_witness(&inst, eps).expect("witness shape is valid");
            let mut acc = GrigWord::identity();
            for (e, g) in eps.iter().zip(inst.generators()) {
                if *e == 1 {
                    acc = acc.concat(g);
                }
            }
            ok &= equal(&acc, inst.target());
        }
        if !ok {
            failures += 1;
        }
    }
    SuiteReport { name: "grig-solvers", cases, failures }
}
