//! Lifting maps into the subgroup `K` and families of independent commuting
//! generators.
//!
//! `K` is the normal closure of `t = (ab)² = abab`, an order-8 element. The
//! letterwise substitution
//!
//! ```text
//!   σ: a -> aca,  b -> d,  c -> b,  d -> c
//! ```
//!
//! satisfies `sections(σ(w)) = (ρ(w), w)` where `ρ` is the letterwise map
//! `a -> d, b -> 1, c -> a, d -> a` into the dihedral subgroup generated by
//! `a` and `d`. On words representing elements of `K` the left section `ρ(w)`
//! is trivial, so
//!
//! ```text
//!   φ₁(x) = σ(x)         with sections (1, x)
//!   φ₀(x) = a · σ(x) · a with sections (x, 1)
//! ```
//!
//! plant a copy of `x` in one subtree and nothing in the other. Composing the
//! two maps along a tuple of indices plants `x` at any chosen vertex, and the
//! prefix-free tuple family used by [`lemma_generators`] yields `n` elements
//! of order 8 supported on pairwise disjoint subtrees — they commute and
//! generate a direct sum of cyclic groups of order 8.

use std::fmt;
use std::str::FromStr;

use crate::grigorchuk::is_trivial;
use crate::words::{GrigWord, Letter};
use crate::Error;

/// The letterwise map `a -> d, b -> 1, c -> a, d -> a`. A word lies in `K`
/// only if its image is trivial; see [`KElement`].
pub fn rho(w: &GrigWord) -> GrigWord {
    GrigWord::from_letters(w.letters().iter().filter_map(|&l| match l {
        Letter::A => Some(Letter::D),
        Letter::B => None,
        Letter::C => Some(Letter::A),
        Letter::D => Some(Letter::A),
    }))
}

/// The letterwise substitution `a -> aca, b -> d, c -> b, d -> c`, reduced.
pub fn sigma(w: &GrigWord) -> GrigWord {
    let mut letters = Vec::with_capacity(3 * w.len());
    for &l in w.letters() {
        match l {
            Letter::A => letters.extend([Letter::A, Letter::C, Letter::A]),
            Letter::B => letters.push(Letter::D),
            Letter::C => letters.push(Letter::B),
            Letter::D => letters.push(Letter::C),
        }
    }
    GrigWord::from_letters(letters)
}

/// A word certified to represent an element of `K`, together with the trace
/// of how it was built: the base word and the tuple of lifting indices that
/// has been applied to it (outermost index first).
#[derive(Clone)]
pub struct KElement {
    word: GrigWord,
    base: GrigWord,
    tuple: Vec<u8>,
}

impl KElement {
    /// Certifies a raw word. Errors with [`Error::NotInK`] when the
    /// `ρ`-triviality check fails, which proves the word is outside `K`.
    pub fn from_word(word: GrigWord) -> Result<KElement, Error> {
        if !is_trivial(&rho(&word)) {
            return Err(Error::NotInK);
        }
        Ok(KElement {
            base: word.clone(),
            word,
            tuple: Vec::new(),
        })
    }

    /// The canonical normal generator `t = abab` of `K`.
    pub fn t() -> KElement {
        let word: GrigWord = "abab".parse().expect("t is a valid word");
        KElement::from_word(word).expect("t lies in K")
    }

    pub fn word(&self) -> &GrigWord {
        &self.word
    }

    pub fn base(&self) -> &GrigWord {
        &self.base
    }

    /// Lifting indices applied so far, outermost first.
    pub fn tuple(&self) -> &[u8] {
        &self.tuple
    }
}

impl fmt::Debug for KElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "KElement {{ word: \"{}\", base: \"{}\", tuple: {:?} }}",
            self.word, self.base, self.tuple
        )
    }
}

/// One lifting step: `φ₀` for `j = 0`, `φ₁` for `j = 1`.
///
/// Both maps are injective homomorphisms `K -> K`, so the result is again a
/// certified `KElement` — the `ρ`-check of the input is carried by the
/// `KElement` type itself. Rejects indices other than 0 and 1.
pub fn phi(j: u8, x: &KElement) -> Result<KElement, Error> {
    if j > 1 {
        return Err(Error::InvalidPhiIndex(j));
    }
    let lifted = sigma(&x.word);
    let word = if j == 1 {
        lifted
    } else {
        let a = GrigWord::generator(Letter::A);
        a.concat(&lifted).concat(&a)
    };
    let mut tuple = Vec::with_capacity(x.tuple.len() + 1);
    tuple.push(j);
    tuple.extend_from_slice(&x.tuple);
    Ok(KElement {
        word,
        base: x.base.clone(),
        tuple,
    })
}

/// The composition `φ_{i₁} ∘ φ_{i₂} ∘ … ∘ φ_{i_ℓ}` applied to `x`: the last
/// index acts first, the first index outermost. The empty sequence is the
/// identity map.
pub fn phi_tuple(indices: &[u8], x: &KElement) -> Result<KElement, Error> {
    let mut acc = x.clone();
    for &j in indices.iter().rev() {
        acc = phi(j, &acc)?;
    }
    Ok(acc)
}

/// A lifting tuple of the prefix-free family `1ʲ 0 i₁ … i_j`, `j ≥ 0`.
///
/// Read as binary strings these tuples are pairwise incomparable vertices of
/// the tree, so the elements they produce are supported on disjoint subtrees.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IndexTuple(Vec<u8>);

impl IndexTuple {
    /// Validates the `1ʲ 0 i₁ … i_j` shape: length `2j + 1`, a leading run of
    /// `j` ones, then a zero, then `j` free bits.
    pub fn new(bits: Vec<u8>) -> Result<IndexTuple, Error> {
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidInstance(format!(
                "index tuple containing {:?} is not over 0/1",
                bits
            )));
        }
        if bits.len() % 2 == 0 {
            return Err(Error::InvalidInstance(format!(
                "index tuple of even length {} cannot have the 1..10.. shape",
                bits.len()
            )));
        }
        let j = bits.len() / 2;
        let prefix_ok = bits[..j].iter().all(|&b| b == 1) && bits[j] == 0;
        if !prefix_ok {
            return Err(Error::InvalidInstance(format!(
                "index tuple {:?} does not start with {} ones and a zero",
                bits, j
            )));
        }
        Ok(IndexTuple(bits))
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    /// The level `j` of the tuple `1ʲ 0 i₁ … i_j`.
    pub fn level(&self) -> usize {
        self.0.len() / 2
    }

    /// The first `n` tuples of the family, enumerated level by level and in
    /// binary counting order within each level:
    /// `0; 100, 101; 11000, 11001, 11010, 11011; …`
    pub fn family(n: usize) -> Vec<IndexTuple> {
        let mut tuples = Vec::with_capacity(n);
        let mut level = 0usize;
        'outer: loop {
            for index in 0u64..(1u64 << level) {
                if tuples.len() == n {
                    break 'outer;
                }
                let mut bits = vec![1u8; level];
                bits.push(0);
                bits.extend((0..level).rev().map(|i| (index >> i & 1) as u8));
                tuples.push(IndexTuple(bits));
            }
            level += 1;
        }
        tuples
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IndexTuple({self})")
    }
}

impl FromStr for IndexTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<IndexTuple, Error> {
        let mut bits = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '0' => bits.push(0),
                '1' => bits.push(1),
                other => {
                    return Err(Error::InvalidInstance(format!(
                        "character {other:?} in index tuple"
                    )))
                }
            }
        }
        IndexTuple::new(bits)
    }
}

/// The smallest `p` with `2^(p+1) - 1 ≥ n`: the family of tuples up to level
/// `p` is large enough to supply `n` generators.
pub fn smallest_p(n: usize) -> u32 {
    let mut p = 0u32;
    while (1u128 << (p + 1)) - 1 < n as u128 {
        p += 1;
    }
    p
}

/// `n` independent commuting elements of order 8: `t = abab` lifted along the
/// first `n` tuples of the prefix-free family. Tuple lengths stay at most
/// `2p + 1` for the `p` of [`smallest_p`], so the construction is polynomial
/// in `n`.
pub fn lemma_generators(n: usize) -> Vec<KElement> {
    let t = KElement::t();
    IndexTuple::family(n)
        .iter()
        .map(|tuple| phi_tuple(tuple.bits(), &t).expect("family tuples are over 0/1"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grigorchuk::{equal, sections, ElementOrder};

    fn w(s: &str) -> GrigWord {
        s.parse().expect("test words are valid")
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(&w("abab")).to_string(), "");
        assert_eq!(rho(&w("acac")).to_string(), "dada");
        assert_eq!(rho(&w("b")).to_string(), "");
        assert_eq!(rho(&w("cd")).to_string(), "");
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(&w("abab")).to_string(), "acadacad");
        assert_eq!(sigma(&w("")).to_string(), "");
        assert_eq!(sigma(&w("b")).to_string(), "d");
        assert_eq!(sigma(&w("a")).to_string(), "aca");
    }

    #[test]
    fn sigma_sections_are_rho_and_the_word() {
        for word in ["abab", "b", "adad", "abadac", "cadacada"] {
            let word = w(word);
            let image = sigma(&word);
            let (left, right) = sections(&image).expect("sigma lands in the stabilizer");
            assert!(equal(&left, &rho(&word)), "left section of sigma({word})");
            assert!(equal(&right, &word), "right section of sigma({word})");
        }
    }

    #[test]
    fn k_membership_check() {
        assert!(KElement::from_word(w("abab")).is_ok());
        assert!(KElement::from_word(w("")).is_ok());
        assert!(KElement::from_word(w("babababa")).is_ok());
        assert!(matches!(
            KElement::from_word(w("a")),
            Err(Error::NotInK)
        ));
        assert!(matches!(
            KElement::from_word(w("acac")),
            Err(Error::NotInK)
        ));
    }

    #[test]
    fn phi_examples() {
        let t = KElement::t();
        let lifted = phi(1, &t).unwrap();
        assert_eq!(lifted.word().to_string(), "acadacad");
        let planted = phi(0, &t).unwrap();
        assert_eq!(planted.word().to_string(), "cadacada");
        assert!(matches!(phi(2, &t), Err(Error::InvalidPhiIndex(2))));
    }

    #[test]
    fn phi_sections_plant_the_argument() {
        let t = KElement::t();
        let (l1, r1) = sections(phi(1, &t).unwrap().word()).unwrap();
        assert!(is_trivial(&l1));
        assert!(equal(&r1, t.word()));
        let (l0, r0) = sections(phi(0, &t).unwrap().word()).unwrap();
        assert!(equal(&l0, t.word()));
        assert!(is_trivial(&r0));
    }

    #[test]
    fn phi_tuple_composes_right_to_left() {
        let t = KElement::t();
        let same = phi_tuple(&[], &t).unwrap();
        assert_eq!(same.word(), t.word());
        assert_eq!(phi_tuple(&[0], &t).unwrap().word().to_string(), "cadacada");
        // (1, 0): apply phi_0 first, then phi_1.
        let nested = phi_tuple(&[1, 0], &t).unwrap();
        let by_hand = phi(1, &phi(0, &t).unwrap()).unwrap();
        assert_eq!(nested.word(), by_hand.word());
        assert_eq!(nested.tuple(), &[1, 0]);
        assert_eq!(nested.base(), t.word());
    }

    #[test]
    fn tuple_family_enumeration() {
        let tuples = IndexTuple::family(7);
        let rendered: Vec<String> = tuples.iter().map(|t| t.to_string()).collect();
        assert_eq!(
            rendered,
            ["0", "100", "101", "11000", "11001", "11010", "11011"]
        );
        assert_eq!(IndexTuple::family(0).len(), 0);
        assert_eq!(IndexTuple::family(1).len(), 1);
    }

    #[test]
    fn tuple_shape_is_validated() {
        assert!(IndexTuple::new(vec![0]).is_ok());
        assert!(IndexTuple::new(vec![1, 0, 1]).is_ok());
        assert!(IndexTuple::new(vec![]).is_err());
        assert!(IndexTuple::new(vec![1, 0]).is_err());
        assert!(IndexTuple::new(vec![0, 0, 1]).is_err());
        assert!(IndexTuple::new(vec![1, 1, 0]).is_err());
        assert!(IndexTuple::new(vec![2]).is_err());
        assert_eq!("11011".parse::<IndexTuple>().unwrap().level(), 2);
        assert!("12".parse::<IndexTuple>().is_err());
    }

    #[test]
    fn smallest_p_values() {
        assert_eq!(smallest_p(1), 0);
        assert_eq!(smallest_p(2), 1);
        assert_eq!(smallest_p(3), 1);
        assert_eq!(smallest_p(4), 2);
        assert_eq!(smallest_p(7), 2);
        assert_eq!(smallest_p(8), 3);
        assert_eq!(smallest_p(256), 8);
    }

    #[test]
    fn lemma_generators_small_families() {
        let one = lemma_generators(1);
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].word().to_string(), "cadacada");

        let three = lemma_generators(3);
        let tuples: Vec<String> = three
            .iter()
            .map(|g| g.tuple().iter().map(|b| b.to_string()).collect())
            .collect();
        assert_eq!(tuples, ["0", "100", "101"]);
        for g in &three {
            assert_eq!(order_of(g.word()), 8);
        }
    }

    fn order_of(word: &GrigWord) -> u64 {
        match crate::grigorchuk::order(word, 10) {
            ElementOrder::Finite(n) => n,
            ElementOrder::ExceedsCap => panic!("unexpectedly large order for {word}"),
        }
    }
}
