//! Complexity, cells, and the filtration refining them.
//!
//! For each pair of values `{i,j}` the complexity counts how often their
//! relative order changes: on a surjection it is the length of the reduced
//! two-letter word minus one, on a simplex it is one plus the number of
//! adjacent vertex pairs that flip `i` and `j`. Permutations and vertices
//! have complexity one in every pair, and the degree-`n` filtration stage
//! collects the basis elements with all complexities at most `n`.
//!
//! A cell refines the filtration by also remembering, per pair, the final
//! relative order. Cells are partially ordered; the differentials and the
//! transfer maps only ever move into smaller or equal cells.

use crate::error::Error;
use crate::simplex::Simplex;
use crate::surjection::Surjection;

/// Pairwise complexity entries, indexed by unordered pairs of `{1,..,r}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComplexityMatrix {
    arity: usize,
    entries: Vec<u32>,
}

/// Final relative order of a pair `{i,j}` with `i < j`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PairOrder {
    /// `i` occurs before `j`.
    LowThenHigh,
    /// `j` occurs before `i`.
    HighThenLow,
}

/// A cell of the complexity structure: complexities plus final orientations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CellDescriptor {
    complexity: ComplexityMatrix,
    orders: Vec<PairOrder>,
}

fn pair_index(arity: usize, i: u8, j: u8) -> usize {
    // Row-major upper triangle, i < j, both 1-based.
    let (i, j) = (i as usize - 1, j as usize - 1);
    debug_assert!(i < j && j < arity);
    i * arity - i * (i + 1) / 2 + (j - i - 1)
}

fn pairs(arity: usize) -> impl Iterator<Item = (u8, u8)> {
    (1..=arity as u8).flat_map(move |i| (i + 1..=arity as u8).map(move |j| (i, j)))
}

impl ComplexityMatrix {
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// The entry for the unordered pair `{i,j}`.
    pub fn entry(&self, i: u8, j: u8) -> u32 {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.entries[pair_index(self.arity, i, j)]
    }

    /// Largest entry; 1 for arities below 2, where there are no pairs.
    pub fn max_entry(&self) -> u32 {
        self.entries.iter().copied().max().unwrap_or(1)
    }

    /// Ordered `(i, j, c)` triples, the serialization of the matrix.
    pub fn triples(&self) -> Vec<(u8, u8, u32)> {
        pairs(self.arity)
            .map(|(i, j)| (i, j, self.entry(i, j)))
            .collect()
    }
}

impl CellDescriptor {
    pub fn complexity(&self) -> &ComplexityMatrix {
        &self.complexity
    }

    pub fn order(&self, i: u8, j: u8) -> PairOrder {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.orders[pair_index(self.complexity.arity, i, j)]
    }
}

/// The word over `{i,j}` obtained by restriction and collapsing adjacent
/// repeats.
fn reduced_pair_word(word: &[u8], i: u8, j: u8) -> Vec<u8> {
    let mut out: Vec<u8> = Vec::new();
    for &v in word {
        if (v == i || v == j) && out.last() != Some(&v) {
            out.push(v);
        }
    }
    out
}

/// Complexity of a surjection: per pair, reduced word length minus one.
pub fn complexity_surjection(u: &Surjection) -> ComplexityMatrix {
    let arity = u.arity();
    let entries = pairs(arity)
        .map(|(i, j)| (reduced_pair_word(u.word(), i, j).len() - 1) as u32)
        .collect();
    ComplexityMatrix { arity, entries }
}

/// Complexity of a simplex: per pair, one plus the number of adjacent
/// orientation changes in the vertex sequence.
pub fn complexity_simplex(s: &Simplex) -> ComplexityMatrix {
    let arity = s.arity();
    let entries = pairs(arity)
        .map(|(i, j)| {
            let orders: Vec<PairOrder> = s
                .vertices()
                .iter()
                .map(|w| word_pair_order(w.word(), i, j))
                .collect();
            1 + orders.windows(2).filter(|w| w[0] != w[1]).count() as u32
        })
        .collect();
    ComplexityMatrix { arity, entries }
}

fn word_pair_order(word: &[u8], i: u8, j: u8) -> PairOrder {
    for &v in word {
        if v == i {
            return PairOrder::LowThenHigh;
        }
        if v == j {
            return PairOrder::HighThenLow;
        }
    }
    unreachable!("both values occur in a permutation word")
}

/// The cell of a surjection: complexities plus the final two letters of each
/// reduced pair word.
pub fn cell_descriptor_surjection(u: &Surjection) -> CellDescriptor {
    let complexity = complexity_surjection(u);
    let orders = pairs(u.arity())
        .map(|(i, j)| {
            let reduced = reduced_pair_word(u.word(), i, j);
            // The reduced word alternates, so its last letter fixes the
            // final adjacent pair.
            if *reduced.last().expect("both values occur") == j {
                PairOrder::LowThenHigh
            } else {
                PairOrder::HighThenLow
            }
        })
        .collect();
    CellDescriptor { complexity, orders }
}

/// The cell of a simplex: complexities plus the pair orders of the last
/// vertex.
pub fn cell_descriptor_simplex(s: &Simplex) -> CellDescriptor {
    let complexity = complexity_simplex(s);
    let last = s.vertices().last().expect("simplices are nonempty");
    let orders = pairs(s.arity())
        .map(|(i, j)| word_pair_order(last.word(), i, j))
        .collect();
    CellDescriptor { complexity, orders }
}

/// Containment order on cells: per pair, strictly smaller complexity or
/// equal complexity with the same final orientation.
pub fn cell_leq(a: &CellDescriptor, b: &CellDescriptor) -> Result<bool, Error> {
    if a.complexity.arity != b.complexity.arity {
        return Err(Error::ArityMismatch {
            left: a.complexity.arity,
            right: b.complexity.arity,
        });
    }
    Ok(a.complexity
        .entries
        .iter()
        .zip(&b.complexity.entries)
        .zip(a.orders.iter().zip(&b.orders))
        .all(|((ca, cb), (oa, ob))| ca < cb || (ca == cb && oa == ob)))
}

/// Filtration membership of a surjection: every complexity at most `n`.
pub fn in_filtration_surjection(u: &Surjection, n: u32) -> bool {
    complexity_surjection(u).max_entry() <= n
}

/// Filtration membership of a simplex.
pub fn in_filtration_simplex(s: &Simplex, n: u32) -> bool {
    complexity_simplex(s).max_entry() <= n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;
    use crate::prism::fundamental_simplex;
    use crate::xcomplex::enumerate_surjections;

    fn surj(word: &[u8]) -> Surjection {
        let arity = *word.iter().max().unwrap() as usize;
        Surjection::new(word.to_vec(), arity).unwrap()
    }

    fn perm(word: &[u8]) -> Permutation {
        Permutation::new(word.to_vec()).unwrap()
    }

    fn simplex(words: &[&[u8]]) -> Simplex {
        Simplex::new(words.iter().map(|w| perm(w)).collect()).unwrap()
    }

    #[test]
    fn surjection_complexity_counts_the_reduced_word() {
        assert_eq!(complexity_surjection(&surj(&[1, 2, 1])).entry(1, 2), 2);
        assert_eq!(complexity_surjection(&surj(&[1, 2, 1, 2])).entry(1, 2), 3);
        let p = complexity_surjection(&surj(&[2, 3, 1]));
        assert_eq!(p.triples(), vec![(1, 2, 1), (1, 3, 1), (2, 3, 1)]);
    }

    #[test]
    fn simplex_complexity_counts_orientation_changes() {
        assert_eq!(
            complexity_simplex(&simplex(&[&[1, 2], &[2, 1]])).entry(1, 2),
            2
        );
        assert_eq!(
            complexity_simplex(&Simplex::from_vertex(perm(&[2, 1, 3]))).max_entry(),
            1
        );
        assert_eq!(
            complexity_simplex(&simplex(&[&[1, 2], &[2, 1], &[1, 2]])).entry(1, 2),
            3
        );
    }

    #[test]
    fn cells_record_final_orientations() {
        let cell = cell_descriptor_surjection(&surj(&[1, 2, 1]));
        assert_eq!(cell.complexity().entry(1, 2), 2);
        assert_eq!(cell.order(1, 2), PairOrder::HighThenLow);

        let edge = cell_descriptor_simplex(&simplex(&[&[1, 2], &[2, 1]]));
        assert_eq!(edge, cell);

        let vertex = cell_descriptor_simplex(&Simplex::from_vertex(perm(&[2, 1])));
        assert_eq!(vertex.complexity().max_entry(), 1);
        assert_eq!(vertex.order(1, 2), PairOrder::HighThenLow);
    }

    #[test]
    fn cell_order_is_reflexive_and_respects_complexity() {
        let a = cell_descriptor_surjection(&surj(&[1, 2, 1]));
        assert!(cell_leq(&a, &a).unwrap());
        let b = cell_descriptor_surjection(&surj(&[1, 2]));
        assert!(cell_leq(&b, &a).unwrap());
        assert!(!cell_leq(&a, &b).unwrap());
        // Equal complexity, opposite orientation.
        let edge = cell_descriptor_simplex(&simplex(&[&[1, 2], &[2, 1]]));
        let c = cell_descriptor_surjection(&surj(&[2, 1, 2]));
        assert!(!cell_leq(&edge, &c).unwrap());
        assert!(!cell_leq(&c, &edge).unwrap());
    }

    #[test]
    fn filtration_membership() {
        assert!(in_filtration_surjection(&surj(&[2, 1]), 1));
        assert!(in_filtration_simplex(&Simplex::from_vertex(perm(&[1, 2])), 1));
        let u = surj(&[1, 2, 1]);
        assert!(!in_filtration_surjection(&u, 1));
        assert!(in_filtration_surjection(&u, 2));
        let v = surj(&[1, 2, 1, 2]);
        assert!(!in_filtration_surjection(&v, 2));
        assert!(in_filtration_surjection(&v, 3));
    }

    #[test]
    fn filtration_is_nested_and_exhaustive() {
        for r in 1..=3 {
            for d in 0..=3 {
                for u in enumerate_surjections(r, d).unwrap() {
                    let max = complexity_surjection(&u).max_entry();
                    assert!(in_filtration_surjection(&u, max));
                    if max > 1 {
                        assert!(!in_filtration_surjection(&u, max - 1));
                    }
                    for n in max..max + 3 {
                        assert!(in_filtration_surjection(&u, n));
                    }
                }
            }
        }
    }

    #[test]
    fn fundamental_simplex_shares_the_cell() {
        for r in 1..=3 {
            for d in 0..=3 {
                for u in enumerate_surjections(r, d).unwrap() {
                    let cell_u = cell_descriptor_surjection(&u);
                    let cell_f = cell_descriptor_simplex(&fundamental_simplex(&u));
                    assert_eq!(cell_u, cell_f, "cells differ for {u}");
                }
            }
        }
    }
}
