//! Permutations of `{1,..,r}` stored as value words `(w(1),...,w(r))`.
//!
//! The value-word convention makes the symmetric group act on every other
//! object of the crate by relabeling letters: `w` sends the letter `v` to
//! `w(v)`. On permutations themselves relabeling coincides with composition,
//! so the same trait powers the diagonal action on simplices and the value
//! action on surjections.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A permutation of `{1,..,r}`, stored as the word of its values.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation from its value word, checking that every value
    /// of `1..=len` occurs exactly once.
    pub fn new(word: Vec<u8>) -> Result<Self, Error> {
        let r = word.len();
        if r == 0 {
            return Err(Error::InvalidArity(0));
        }
        let mut seen = vec![false; r];
        for (position, &letter) in word.iter().enumerate() {
            if letter == 0 || letter as usize > r {
                return Err(Error::OutOfRange {
                    letter,
                    position,
                    arity: r,
                });
            }
            if seen[letter as usize - 1] {
                // A repeated value forces some other value to be missing.
                let missing = (1..=r as u8).find(|&v| !seen[v as usize - 1] && v != letter);
                return Err(Error::NotSurjective {
                    arity: r,
                    missing: missing.unwrap_or(letter),
                });
            }
            seen[letter as usize - 1] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(r: usize) -> Self {
        Permutation {
            word: (1..=r as u8).collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    /// The image `w(v)` of a letter.
    pub fn apply(&self, v: u8) -> u8 {
        self.word[v as usize - 1]
    }

    /// Composition `self . other`, applying `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, Error> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch {
                left: self.arity(),
                right: other.arity(),
            });
        }
        Ok(Permutation {
            word: other.word.iter().map(|&v| self.apply(v)).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0u8; self.arity()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v as usize - 1] = i as u8 + 1;
        }
        Permutation { word }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.word)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Permutation::new(parse_word(s)?)
    }
}

/// Objects carrying the letter-relabeling action of the symmetric group.
pub trait Relabel: Sized {
    /// Replaces every letter `v` by `w(v)`.
    fn relabel(&self, w: &Permutation) -> Result<Self, Error>;
}

impl Relabel for Permutation {
    fn relabel(&self, w: &Permutation) -> Result<Self, Error> {
        w.compose(self)
    }
}

/// All permutations of `{1,..,r}` in lexicographic word order.
pub fn all_permutations(r: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(r);
    let mut used = vec![false; r];
    fn rec(r: usize, word: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if word.len() == r {
            out.push(Permutation {
                word: word.clone(),
            });
            return;
        }
        for v in 1..=r as u8 {
            if !used[v as usize - 1] {
                used[v as usize - 1] = true;
                word.push(v);
                rec(r, word, used, out);
                word.pop();
                used[v as usize - 1] = false;
            }
        }
    }
    rec(r, &mut word, &mut used, &mut out);
    out
}

/// Parses a comma-separated word like `2,3,1`.
pub(crate) fn parse_word(s: &str) -> Result<Vec<u8>, Error> {
    if s.trim().is_empty() {
        return Err(Error::parse(0, "empty word"));
    }
    let mut word = Vec::new();
    let mut offset = 0;
    for piece in s.split(',') {
        let trimmed = piece.trim();
        let letter: u8 = trimmed.parse().map_err(|_| {
            Error::parse(
                offset + (piece.len() - piece.trim_start().len()),
                format!("expected a letter in 1..=255, found '{trimmed}'"),
            )
        })?;
        if letter == 0 {
            return Err(Error::parse(offset, "letters are 1-based"));
        }
        word.push(letter);
        offset += piece.len() + 1;
    }
    Ok(word)
}

pub(crate) fn write_word(f: &mut fmt::Formatter<'_>, word: &[u8]) -> fmt::Result {
    for (i, v) in word.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}
