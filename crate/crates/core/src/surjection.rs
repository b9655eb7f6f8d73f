//! Nondegenerate surjection words, the basis of the surjection complex.
//!
//! A surjection of arity `r` and degree `d` is a word of length `r + d` over
//! `{1,..,r}` in which every value occurs and no letter repeats adjacently.
//! Occurrence bookkeeping (multiplicities, occurrence positions, caesuras)
//! lives here because both the prism decomposition and the differential are
//! phrased in terms of which occurrence of a value is selected or deleted.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::perm::{parse_word, write_word, Permutation, Relabel};

/// A nondegenerate surjective word; basis element of the surjection complex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Surjection {
    arity: usize,
    word: Vec<u8>,
}

/// Occurrence counts `(d_1,...,d_r)` of a surjection's values.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Multiplicities {
    counts: Vec<usize>,
}

/// Classification of a raw word, as produced by occurrence deletion.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WordClass {
    Surjection(Surjection),
    Degenerate,
    NotSurjective,
}

impl Surjection {
    /// Validates a word as a surjection of the given arity.
    ///
    /// Degeneracy is reported before missing values, so `(1,1)` at arity 2
    /// classifies as degenerate.
    pub fn new(word: Vec<u8>, arity: usize) -> Result<Self, Error> {
        if arity == 0 {
            return Err(Error::InvalidArity(0));
        }
        if word.is_empty() {
            return Err(Error::NotSurjective {
                arity,
                missing: 1,
            });
        }
        let mut seen = vec![false; arity];
        for (position, &letter) in word.iter().enumerate() {
            if letter == 0 || letter as usize > arity {
                return Err(Error::OutOfRange {
                    letter,
                    position,
                    arity,
                });
            }
            seen[letter as usize - 1] = true;
        }
        if let Some(position) = word.windows(2).position(|w| w[0] == w[1]) {
            return Err(Error::Degenerate { position });
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::NotSurjective {
                arity,
                missing: missing as u8 + 1,
            });
        }
        Ok(Surjection { arity, word })
    }

    /// A permutation viewed as the degree-0 surjection with the same word.
    pub fn from_permutation(p: &Permutation) -> Self {
        Surjection {
            arity: p.arity(),
            word: p.word().to_vec(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Degree `d = len - r`.
    pub fn degree(&self) -> usize {
        self.word.len() - self.arity
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    /// The underlying permutation when the degree is 0.
    pub fn as_permutation(&self) -> Option<Permutation> {
        if self.degree() == 0 {
            Some(Permutation::new(self.word.clone()).expect("degree-0 surjection is a permutation"))
        } else {
            None
        }
    }

    /// Occurrence counts of every value.
    pub fn multiplicities(&self) -> Multiplicities {
        let mut counts = vec![0usize; self.arity];
        for &letter in &self.word {
            counts[letter as usize - 1] += 1;
        }
        Multiplicities { counts }
    }

    /// 0-based positions of the occurrences of `k`, in word order.
    pub fn occurrence_positions(&self, k: u8) -> Vec<usize> {
        self.word
            .iter()
            .enumerate()
            .filter(|&(_, &v)| v == k)
            .map(|(i, _)| i)
            .collect()
    }

    /// Occurrence positions of every value; entry `k-1` lists the positions
    /// of `k`.
    pub fn occurrence_table(&self) -> Vec<Vec<usize>> {
        let mut table = vec![Vec::new(); self.arity];
        for (i, &letter) in self.word.iter().enumerate() {
            table[letter as usize - 1].push(i);
        }
        table
    }

    /// The caesura sequence: what remains of the word after deleting the
    /// last occurrence of every value. Its length is the degree, and the
    /// value `k` occurs `d_k - 1` times.
    pub fn caesura_sequence(&self) -> Vec<u8> {
        let mut last = vec![0usize; self.arity];
        for (i, &letter) in self.word.iter().enumerate() {
            last[letter as usize - 1] = i;
        }
        self.word
            .iter()
            .enumerate()
            .filter(|&(i, &v)| last[v as usize - 1] != i)
            .map(|(_, &v)| v)
            .collect()
    }

    /// Deletes the `(x+1)`-th occurrence of `k`, returning the raw word.
    /// The caller classifies the result (see [`classify_word`]).
    pub fn delete_occurrence(&self, k: u8, x: usize) -> Result<Vec<u8>, Error> {
        let positions = self.occurrence_positions(k);
        let position = *positions
            .get(x)
            .ok_or(Error::NoSuchOccurrence { value: k, index: x })?;
        let mut word = self.word.clone();
        word.remove(position);
        Ok(word)
    }
}

impl Relabel for Surjection {
    fn relabel(&self, w: &Permutation) -> Result<Self, Error> {
        if w.arity() != self.arity {
            return Err(Error::ArityMismatch {
                left: w.arity(),
                right: self.arity,
            });
        }
        // Relabeling preserves surjectivity and nondegeneracy letterwise.
        Ok(Surjection {
            arity: self.arity,
            word: self.word.iter().map(|&v| w.apply(v)).collect(),
        })
    }
}

impl Multiplicities {
    /// The count `d_k`.
    pub fn count(&self, k: u8) -> usize {
        self.counts[k as usize - 1]
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

/// Classifies a raw word of the given arity: a valid surjection, degenerate
/// (adjacent repetition), or not surjective. Letters must already lie in
/// `1..=arity`.
pub fn classify_word(word: &[u8], arity: usize) -> Result<WordClass, Error> {
    for (position, &letter) in word.iter().enumerate() {
        if letter == 0 || letter as usize > arity {
            return Err(Error::OutOfRange {
                letter,
                position,
                arity,
            });
        }
    }
    if word.windows(2).any(|w| w[0] == w[1]) {
        return Ok(WordClass::Degenerate);
    }
    match Surjection::new(word.to_vec(), arity) {
        Ok(u) => Ok(WordClass::Surjection(u)),
        Err(Error::NotSurjective { .. }) => Ok(WordClass::NotSurjective),
        Err(e) => Err(e),
    }
}

impl fmt::Debug for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl fmt::Display for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.word)
    }
}

impl FromStr for Surjection {
    type Err = Error;

    /// Parses a comma-separated word, inferring the arity as the largest
    /// letter. Validation then reports any smaller missing value.
    fn from_str(s: &str) -> Result<Self, Error> {
        let word = parse_word(s)?;
        let arity = word.iter().copied().max().unwrap_or(0) as usize;
        Surjection::new(word, arity)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surj(word: &[u8], r: usize) -> Surjection {
        Surjection::new(word.to_vec(), r).unwrap()
    }

    #[test]
    fn validates_the_running_example() {
        let u = surj(&[1, 2, 3, 1, 2], 3);
        assert_eq!(u.degree(), 2);
        assert_eq!(u.arity(), 3);
    }

    #[test]
    fn rejects_degenerate_and_non_surjective_words() {
        assert!(matches!(
            Surjection::new(vec![1, 1, 2], 2),
            Err(Error::Degenerate { position: 0 })
        ));
        assert!(matches!(
            Surjection::new(vec![1, 3, 1], 3),
            Err(Error::NotSurjective { missing: 2, .. })
        ));
        assert!(matches!(
            Surjection::new(vec![1, 4], 3),
            Err(Error::OutOfRange { letter: 4, .. })
        ));
        // Degeneracy takes precedence when both fail.
        assert!(matches!(
            Surjection::new(vec![1, 1], 2),
            Err(Error::Degenerate { .. })
        ));
    }

    #[test]
    fn multiplicities_count_occurrences() {
        assert_eq!(surj(&[1, 2, 3, 1, 2], 3).multiplicities().counts(), &[2, 2, 1]);
        assert_eq!(surj(&[2, 1], 2).multiplicities().counts(), &[1, 1]);
        assert_eq!(surj(&[1, 2, 1, 2], 2).multiplicities().counts(), &[2, 2]);
        assert_eq!(surj(&[1, 2, 3, 1, 2], 3).multiplicities().total(), 5);
    }

    #[test]
    fn caesura_deletes_last_occurrences() {
        assert_eq!(surj(&[1, 2, 3, 1, 2], 3).caesura_sequence(), vec![1, 2]);
        assert_eq!(surj(&[2, 1], 2).caesura_sequence(), Vec::<u8>::new());
        assert_eq!(surj(&[2, 1, 2, 1], 2).caesura_sequence(), vec![2, 1]);
    }

    #[test]
    fn caesura_multiset_matches_multiplicities() {
        // Value k occurs d_k - 1 times among the caesuras.
        for r in 1..=4usize {
            for d in 0..=4usize {
                for u in crate::xcomplex::enumerate_surjections(r, d).unwrap() {
                    let mult = u.multiplicities();
                    let caesuras = u.caesura_sequence();
                    assert_eq!(caesuras.len(), d);
                    for k in 1..=r as u8 {
                        let found = caesuras.iter().filter(|&&v| v == k).count();
                        assert_eq!(found, mult.count(k) - 1, "u={u}");
                    }
                }
            }
        }
    }

    #[test]
    fn deletes_the_requested_occurrence() {
        let u = surj(&[1, 2, 3, 1, 2], 3);
        assert_eq!(u.delete_occurrence(1, 1).unwrap(), vec![1, 2, 3, 2]);
        let v = surj(&[1, 2, 1], 2);
        assert_eq!(v.delete_occurrence(2, 0).unwrap(), vec![1, 1]);
        assert_eq!(v.delete_occurrence(1, 0).unwrap(), vec![2, 1]);
        assert!(matches!(
            v.delete_occurrence(2, 1),
            Err(Error::NoSuchOccurrence { value: 2, index: 1 })
        ));
    }

    #[test]
    fn delete_then_reinsert_restores_the_word() {
        for u in crate::xcomplex::enumerate_surjections(3, 3).unwrap() {
            for k in 1..=3u8 {
                let positions = u.occurrence_positions(k);
                for (x, &pos) in positions.iter().enumerate() {
                    let mut word = u.delete_occurrence(k, x).unwrap();
                    word.insert(pos, k);
                    assert_eq!(word, u.word());
                }
            }
        }
    }

    #[test]
    fn classification_of_deleted_words() {
        let v = surj(&[1, 2, 1], 2);
        assert_eq!(
            classify_word(&v.delete_occurrence(2, 0).unwrap(), 2).unwrap(),
            WordClass::Degenerate
        );
        assert!(matches!(
            classify_word(&v.delete_occurrence(1, 1).unwrap(), 2).unwrap(),
            WordClass::Surjection(_)
        ));
        let u = surj(&[1, 2, 3, 1, 2], 3);
        assert!(matches!(
            classify_word(&u.delete_occurrence(3, 0).unwrap(), 3).unwrap(),
            WordClass::Surjection(_)
        ));
    }

    #[test]
    fn relabels_letterwise() {
        let w = Permutation::new(vec![2, 1]).unwrap();
        let u = surj(&[1, 2, 1], 2);
        assert_eq!(u.relabel(&w).unwrap(), surj(&[2, 1, 2], 2));
        let id = Permutation::identity(2);
        assert_eq!(u.relabel(&id).unwrap(), u);
        let w3 = Permutation::new(vec![2, 3, 1]).unwrap();
        assert!(matches!(
            u.relabel(&w3),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn parses_with_inferred_arity() {
        let u: Surjection = "1,2,3,1,2".parse().unwrap();
        assert_eq!(u, surj(&[1, 2, 3, 1, 2], 3));
        assert!(matches!(
            "1,2,2,1".parse::<Surjection>(),
            Err(Error::Degenerate { .. })
        ));
        assert!(matches!(
            "1,3,1".parse::<Surjection>(),
            Err(Error::NotSurjective { missing: 2, .. })
        ));
    }
}
