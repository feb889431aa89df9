//! The first Grigorchuk group acting on the infinite rooted binary tree.
//!
//! Vertices of the tree are finite binary strings; the group acts by
//! tree automorphisms. Each generator decomposes into a root permutation and a
//! pair of sections (its restrictions to the two subtrees):
//!
//! ```text
//!   a: swaps the two subtrees, sections (1, 1)
//!   b: fixes the root level,   sections (a, c)
//!   c: fixes the root level,   sections (a, d)
//!   d: fixes the root level,   sections (1, b)
//! ```
//!
//! Throughout this crate a word `w = l1 l2 … ln` acts on a vertex by applying
//! `l1` first, then `l2`, and so on; equivalently, `concat(u, v)` means
//! "first `u`, then `v`". Sections, portraits and the section-contraction
//! solution of the word problem below all follow this convention.
//!
//! The word problem is decided by [`is_trivial`]: sections of a reduced word
//! are at most half as long (plus one), so recursing into both subtrees
//! terminates after logarithmically many levels. [`is_trivial_oracle`] is an
//! independent check that simply acts on every vertex of a fixed level, and
//! [`canonical_portrait`] gives a finite normal form whose structural equality
//! coincides with equality in the group.

use std::fmt;
use std::str::FromStr;

use crate::words::{GrigWord, Letter};
use crate::Error;

/// Root behaviour of one generator: whether it swaps the two subtrees, and its
/// sections at the vertices `0` and `1` (`None` means the identity).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorRecursion {
    pub swaps: bool,
    pub sections: [Option<Letter>; 2],
}

/// The defining self-similar recursion, indexed in the order `a, b, c, d`.
pub const RECURSION_TABLE: [GeneratorRecursion; 4] = [
    GeneratorRecursion {
        swaps: true,
        sections: [None, None],
    },
    GeneratorRecursion {
        swaps: false,
        sections: [Some(Letter::A), Some(Letter::C)],
    },
    GeneratorRecursion {
        swaps: false,
        sections: [Some(Letter::A), Some(Letter::D)],
    },
    GeneratorRecursion {
        swaps: false,
        sections: [None, Some(Letter::B)],
    },
];

/// The recursion data of a single generator.
pub fn recursion(letter: Letter) -> GeneratorRecursion {
    RECURSION_TABLE[letter as usize]
}

/// A vertex of the rooted binary tree: a finite string over `{0, 1}`.
/// The empty string is the root.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Vertex(Vec<bool>);

impl Vertex {
    pub fn root() -> Vertex {
        Vertex(Vec::new())
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Vertex {
        Vertex(bits.into_iter().collect())
    }

    /// Depth of the vertex below the root.
    pub fn level(&self) -> usize {
        self.0.len()
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }
}

impl FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Vertex, Error> {
        let mut bits = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                other => return Err(Error::InvalidVertexBit(other)),
            }
        }
        Ok(Vertex(bits))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &bit in &self.0 {
            write!(f, "{}", if bit { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vertex(\"{self}\")")
    }
}

/// Does `w` fix the first level of the tree? Exactly the words with an even
/// number of `a`s (only `a` moves the root level).
pub fn in_stabilizer(w: &GrigWord) -> bool {
    w.a_count() % 2 == 0
}

/// The two sections of a level-one stabilizer element, as reduced words.
///
/// Scans the word once, tracking the parity `s` of `a`s seen so far. The
/// prefix of `a`s routes the subtree streams: a Klein letter seen at parity
/// `s` contributes its section at `s` to the `0`-stream and its section at
/// `1 - s` to the `1`-stream. Errors with [`Error::NotInStabilizer`] on words
/// that move the first level.
pub fn sections(w: &GrigWord) -> Result<(GrigWord, GrigWord), Error> {
    if !in_stabilizer(w) {
        return Err(Error::NotInStabilizer);
    }
    Ok(sections_of_stabilizer(w))
}

/// Section computation without the stabilizer check; callers guarantee an even
/// number of `a`s.
fn sections_of_stabilizer(w: &GrigWord) -> (GrigWord, GrigWord) {
    debug_assert!(in_stabilizer(w));
    let mut stream0 = Vec::new();
    let mut stream1 = Vec::new();
    let mut parity = false;
    for &letter in w.letters() {
        if letter == Letter::A {
            parity = !parity;
            continue;
        }
        let [at0, at1] = recursion(letter).sections;
        let (to0, to1) = if parity { (at1, at0) } else { (at0, at1) };
        if let Some(l) = to0 {
            stream0.push(l);
        }
        if let Some(l) = to1 {
            stream1.push(l);
        }
    }
    (
        GrigWord::from_letters(stream0),
        GrigWord::from_letters(stream1),
    )
}

/// Decides the word problem by section contraction.
///
/// The empty word is trivial; a word moving the first level is not; a single
/// letter is not. Otherwise the element is trivial exactly when both sections
/// are, and each section of a reduced word of length `n ≥ 2` has length at
/// most `(n + 1) / 2 < n`, so the recursion terminates.
pub fn is_trivial(w: &GrigWord) -> bool {
    if w.is_empty() {
        return true;
    }
    if !in_stabilizer(w) {
        return false;
    }
    if w.len() == 1 {
        return false;
    }
    let (w0, w1) = sections_of_stabilizer(w);
    is_trivial(&w0) && is_trivial(&w1)
}

/// Equality in the group: `u = v` iff `u · v⁻¹` is trivial.
pub fn equal(u: &GrigWord, v: &GrigWord) -> bool {
    is_trivial(&u.concat(&v.invert()))
}

/// Applies `w` to a vertex, leftmost letter first.
///
/// A single letter acts by walking down the path: `a` flips the current bit
/// and stops; a Klein letter keeps the current bit and continues on the rest
/// of the path as its section at that bit.
pub fn act_on(w: &GrigWord, vertex: &Vertex) -> Vertex {
    let mut bits = vertex.bits().to_vec();
    for &letter in w.letters() {
        let mut current = Some(letter);
        let mut depth = 0;
        while let Some(l) = current {
            if depth >= bits.len() {
                break;
            }
            if l == Letter::A {
                bits[depth] = !bits[depth];
                break;
            }
            current = recursion(l).sections[usize::from(bits[depth])];
            depth += 1;
        }
    }
    Vertex(bits)
}

/// Word problem decided by brute tree action: does `w` fix every vertex of
/// the given level? Moving any shallower vertex also moves its descendants,
/// so checking one level suffices for all levels up to `depth`.
///
/// At `depth = ceil(log2(max(|w|, 2))) + 3` this agrees with [`is_trivial`]:
/// after `ceil(log2 |w|)` levels of contraction every iterated section is a
/// single letter or empty, and a nontrivial letter moves some vertex within
/// three more levels. Cost is `O(2^depth · |w| · depth)` — a desk-scale check,
/// not a decision procedure.
pub fn is_trivial_oracle(w: &GrigWord, depth: u32) -> bool {
    assert!(depth <= 26, "oracle depth {depth} is past desk scale");
    for mask in 0u64..(1u64 << depth) {
        let vertex = Vertex::from_bits((0..depth).map(|i| mask >> i & 1 == 1));
        if act_on(w, &vertex) != vertex {
            return false;
        }
    }
    true
}

/// The oracle depth at which [`is_trivial_oracle`] is guaranteed to agree
/// with [`is_trivial`] for words of length `|w|`.
pub fn sufficient_oracle_depth(w: &GrigWord) -> u32 {
    let n = w.len().max(2) as u64;
    (u64::BITS - (n - 1).leading_zeros()) + 3
}

/// The five elements whose sections are again among them: `1, a, b, c, d`.
/// `None` encodes the identity.
pub type NucleusLabel = Option<Letter>;

/// A finite normal form for a group element: the minimal decorated subtree
/// obtained by unfolding the self-similar recursion until every piece lies in
/// the nucleus `{1, a, b, c, d}`.
///
/// Two elements are equal in the group iff their portraits are structurally
/// equal, so `Portrait` doubles as a hashable key for memoized searches.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Portrait {
    Leaf(NucleusLabel),
    Node {
        /// Whether the element swaps the two subtrees at this vertex.
        swap: bool,
        /// Portraits of the sections at `0` and `1`.
        children: Box<[Portrait; 2]>,
    },
}

impl fmt::Display for Portrait {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Portrait::Leaf(None) => write!(f, "1"),
            Portrait::Leaf(Some(l)) => write!(f, "{}", l.to_char()),
            Portrait::Node { swap, children } => {
                write!(
                    f,
                    "{}({}, {})",
                    if *swap { "~" } else { "" },
                    children[0],
                    children[1]
                )
            }
        }
    }
}

impl fmt::Debug for Portrait {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Portrait({self})")
    }
}

/// Computes the canonical portrait of `w`.
///
/// Words of length ≤ 1 are nucleus leaves. Longer words split into a swap
/// flag `s` (the parity of `a`s) and the two sections of `w · aˢ`; each child
/// is canonicalized recursively and the node collapses back to a leaf when it
/// matches the unfolding of a nucleus element. The five collapsible shapes
/// below are in bijection with the nucleus, which makes the collapse exactly
/// "equals a nucleus element" and the result minimal: an internal node never
/// denotes a nucleus element.
pub fn canonical_portrait(w: &GrigWord) -> Portrait {
    if w.len() <= 1 {
        return Portrait::Leaf(w.letters().first().copied());
    }
    let swap = !in_stabilizer(w);
    let stabilized = if swap {
        w.concat(&GrigWord::generator(Letter::A))
    } else {
        w.clone()
    };
    let (u0, u1) = sections_of_stabilizer(&stabilized);
    let child0 = canonical_portrait(&u0);
    let child1 = canonical_portrait(&u1);
    collapse_if_nucleus(swap, child0, child1)
}

fn collapse_if_nucleus(swap: bool, child0: Portrait, child1: Portrait) -> Portrait {
    use Letter::{A, B, C, D};
    use Portrait::Leaf;
    let label = match (swap, &child0, &child1) {
        (true, Leaf(None), Leaf(None)) => Some(Some(A)),
        (false, Leaf(None), Leaf(None)) => Some(None),
        (false, Leaf(Some(A)), Leaf(Some(C))) => Some(Some(B)),
        (false, Leaf(Some(A)), Leaf(Some(D))) => Some(Some(C)),
        (false, Leaf(None), Leaf(Some(B))) => Some(Some(D)),
        _ => None,
    };
    match label {
        Some(l) => Portrait::Leaf(l),
        None => Portrait::Node {
            swap,
            children: Box::new([child0, child1]),
        },
    }
}

/// The order of a group element, when it is at most `2^cap`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementOrder {
    Finite(u64),
    ExceedsCap,
}

/// Computes the order of `w` by repeated squaring.
///
/// The group is a 2-group, so the order is the least `2^i` with `w^(2^i)`
/// trivial; `i` ranges over `0..=cap`. `cap` must be at most 63 so the order
/// fits in a `u64`.
pub fn order(w: &GrigWord, cap: u32) -> ElementOrder {
    assert!(cap <= 63, "order cap {cap} does not fit in u64");
    let mut power = w.clone();
    for i in 0..=cap {
        if is_trivial(&power) {
            return ElementOrder::Finite(1 << i);
        }
        power = power.concat(&power);
    }
    ElementOrder::ExceedsCap
}
