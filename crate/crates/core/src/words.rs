//! Words over the generating set `{a, b, c, d}` of the first Grigorchuk group.
//!
//! Every generator is an involution, and the three generators `b`, `c`, `d`
//! together with the identity form a Klein four-group: the product of any two
//! distinct letters among `{b, c, d}` is the third. This module maintains the
//! resulting rewriting system
//!
//! ```text
//!   xx -> (empty)        for x in {a, b, c, d}
//!   xy -> z              for {x, y, z} = {b, c, d}
//! ```
//!
//! which is confluent, so every word has a unique reduced form: letters from
//! `{b, c, d}` and the letter `a` strictly alternate. [`GrigWord`] stores only
//! reduced words; concatenation and inversion re-establish the invariant.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Error;

/// A generator of the first Grigorchuk group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
    C,
    D,
}

impl Letter {
    /// All four letters, in alphabetical order.
    pub const ALL: [Letter; 4] = [Letter::A, Letter::B, Letter::C, Letter::D];

    /// Parses a single generator character.
    pub fn from_char(ch: char) -> Result<Letter, Error> {
        match ch {
            'a' => Ok(Letter::A),
            'b' => Ok(Letter::B),
            'c' => Ok(Letter::C),
            'd' => Ok(Letter::D),
            other => Err(Error::InvalidLetter(other)),
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
            Letter::C => 'c',
            Letter::D => 'd',
        }
    }

    /// True for the letters that lie in the Klein four-subgroup `{1, b, c, d}`.
    pub fn is_k4(self) -> bool {
        self != Letter::A
    }

    /// The third letter of `{b, c, d}`, given two distinct ones.
    ///
    /// Panics if either argument is `a` or if the arguments are equal; callers
    /// uphold both conditions.
    pub fn k4_product(x: Letter, y: Letter) -> Letter {
        debug_assert!(x.is_k4() && y.is_k4() && x != y);
        match (x, y) {
            (Letter::B, Letter::C) | (Letter::C, Letter::B) => Letter::D,
            (Letter::B, Letter::D) | (Letter::D, Letter::B) => Letter::C,
            (Letter::C, Letter::D) | (Letter::D, Letter::C) => Letter::B,
            _ => unreachable!("k4_product called with {x:?}, {y:?}"),
        }
    }
}

/// A reduced word over `{a, b, c, d}`.
///
/// The empty word represents the identity. Because the rewriting system is
/// confluent, two `GrigWord`s are equal as *words* exactly when their reduced
/// forms coincide; equality as *group elements* is coarser and is decided by
/// [`crate::grigorchuk::equal`].
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrigWord(Vec<Letter>);

impl GrigWord {
    /// The empty word (group identity).
    pub fn identity() -> GrigWord {
        GrigWord(Vec::new())
    }

    /// A one-letter word.
    pub fn generator(letter: Letter) -> GrigWord {
        GrigWord(vec![letter])
    }

    /// Builds the reduced form of an arbitrary letter sequence.
    ///
    /// Single left-to-right pass over the input: each incoming letter either
    /// cancels against the top of a stack of already-reduced output (`xx`),
    /// merges with it (`xy -> z` inside `{b, c, d}`), or is pushed. A merge
    /// re-examines the new top, so no reducible pair survives.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> GrigWord {
        let iter = letters.into_iter();
        let mut stack: Vec<Letter> = Vec::with_capacity(iter.size_hint().0);
        for letter in iter {
            let mut incoming = Some(letter);
            while let Some(cur) = incoming {
                match stack.last().copied() {
                    Some(top) if top == cur => {
                        stack.pop();
                        incoming = None;
                    }
                    Some(top) if top.is_k4() && cur.is_k4() => {
                        stack.pop();
                        incoming = Some(Letter::k4_product(top, cur));
                    }
                    _ => {
                        stack.push(cur);
                        incoming = None;
                    }
                }
            }
        }
        GrigWord(stack)
    }

    /// The reduced concatenation `self · other` (apply `self` first).
    pub fn concat(&self, other: &GrigWord) -> GrigWord {
        GrigWord::from_letters(self.0.iter().chain(other.0.iter()).copied())
    }

    /// The inverse word. All letters are involutions, so this is the reversal
    /// (the reversal of a reduced word is already reduced).
    pub fn invert(&self) -> GrigWord {
        GrigWord(self.0.iter().rev().copied().collect())
    }

    /// The reduced `e`-th power, by repeated concatenation.
    pub fn pow(&self, e: u32) -> GrigWord {
        let mut acc = GrigWord::identity();
        for _ in 0..e {
            acc = acc.concat(self);
        }
        acc
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Number of occurrences of the letter `a`.
    pub fn a_count(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::A).count()
    }
}

impl FromStr for GrigWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<GrigWord, Error> {
        let mut letters = Vec::with_capacity(s.len());
        for ch in s.chars() {
            letters.push(Letter::from_char(ch)?);
        }
        Ok(GrigWord::from_letters(letters))
    }
}

impl fmt::Display for GrigWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for letter in &self.0 {
            write!(f, "{}", letter.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for GrigWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GrigWord(\"{self}\")")
    }
}

impl Serialize for GrigWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GrigWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<GrigWord, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}
