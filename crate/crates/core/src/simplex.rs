//! Simplices of the bar construction and its normalized chain complex.
//!
//! An `n`-simplex of the homogeneous bar construction of the symmetric group
//! on `r` letters is an `(n+1)`-tuple of permutations `(w_0,...,w_n)`; its
//! faces omit a vertex and its degeneracies repeat one. Normalized chains
//! keep only the nondegenerate tuples (adjacent vertices distinct) and kill
//! everything degenerate, so the boundary is the alternating face sum with
//! degenerate faces dropped.

use std::fmt;
use std::str::FromStr;

use crate::chain::{BasisElement, Chain};
use crate::error::Error;
use crate::perm::{all_permutations, Permutation, Relabel};

/// A nondegenerate simplex of the bar construction: a tuple of permutations
/// with adjacent entries distinct.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    vertices: Vec<Permutation>,
}

/// Integer chains on nondegenerate simplices of fixed arity and dimension.
pub type EChain = Chain<Simplex>;

impl Simplex {
    /// Validates a vertex tuple: nonempty, equal arities, no adjacent
    /// repetition.
    pub fn new(vertices: Vec<Permutation>) -> Result<Self, Error> {
        if vertices.is_empty() {
            return Err(Error::InvalidArity(0));
        }
        let arity = vertices[0].arity();
        for v in &vertices[1..] {
            if v.arity() != arity {
                return Err(Error::ArityMismatch {
                    left: arity,
                    right: v.arity(),
                });
            }
        }
        if let Some(position) = vertices.windows(2).position(|w| w[0] == w[1]) {
            return Err(Error::Degenerate { position });
        }
        Ok(Simplex { vertices })
    }

    pub fn from_vertex(w: Permutation) -> Self {
        Simplex { vertices: vec![w] }
    }

    pub fn arity(&self) -> usize {
        self.vertices[0].arity()
    }

    pub fn dimension(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn vertices(&self) -> &[Permutation] {
        &self.vertices
    }

    /// The front face `(w_0,...,w_i)`; nondegenerate because the input is.
    pub fn prefix(&self, i: usize) -> Simplex {
        Simplex {
            vertices: self.vertices[..=i].to_vec(),
        }
    }

    /// The `i`-th face, omitting vertex `i`; `None` when the result is
    /// degenerate (and hence zero in normalized chains).
    pub fn face(&self, i: usize) -> Result<Option<Simplex>, Error> {
        let tuple = tuple_face(&self.vertices, i)?;
        if is_nondegenerate(&tuple) {
            Ok(Some(Simplex { vertices: tuple }))
        } else {
            Ok(None)
        }
    }

    /// The `j`-th degeneracy as a raw tuple; always degenerate, provided for
    /// simplicial-identity tests.
    pub fn degeneracy(&self, j: usize) -> Result<Vec<Permutation>, Error> {
        tuple_degeneracy(&self.vertices, j)
    }
}

impl Relabel for Simplex {
    /// Diagonal action: relabels every vertex. Adjacent vertices stay
    /// distinct, so nondegeneracy is preserved.
    fn relabel(&self, w: &Permutation) -> Result<Self, Error> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| v.relabel(w))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Simplex { vertices })
    }
}

impl BasisElement for Simplex {
    fn arity(&self) -> usize {
        Simplex::arity(self)
    }

    fn degree(&self) -> usize {
        self.dimension()
    }
}

/// Face of a raw vertex tuple: omits entry `i`.
pub fn tuple_face(vertices: &[Permutation], i: usize) -> Result<Vec<Permutation>, Error> {
    if i >= vertices.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: vertices.len() - 1,
        });
    }
    let mut out = vertices.to_vec();
    out.remove(i);
    Ok(out)
}

/// Degeneracy of a raw vertex tuple: repeats entry `j`.
pub fn tuple_degeneracy(vertices: &[Permutation], j: usize) -> Result<Vec<Permutation>, Error> {
    if j >= vertices.len() {
        return Err(Error::IndexOutOfRange {
            index: j,
            max: vertices.len() - 1,
        });
    }
    let mut out = vertices.to_vec();
    out.insert(j, vertices[j].clone());
    Ok(out)
}

pub fn is_nondegenerate(vertices: &[Permutation]) -> bool {
    !vertices.is_empty() && vertices.windows(2).all(|w| w[0] != w[1])
}

/// Boundary of a basis simplex: the alternating sum of its faces,
/// degenerate faces dropped.
pub fn simplex_boundary(s: &Simplex) -> EChain {
    let mut out = EChain::zero();
    if s.dimension() == 0 {
        return out;
    }
    for i in 0..=s.dimension() {
        if let Some(face) = s.face(i).expect("face index in range") {
            out.add_term(face, if i % 2 == 0 { 1 } else { -1 });
        }
    }
    out
}

/// Boundary extended linearly to chains. Degree-0 chains map to zero.
pub fn boundary_e(c: &EChain) -> EChain {
    c.map_linear(simplex_boundary)
}

/// Number of nondegenerate `n`-simplices at arity `r`: `r! (r! - 1)^n`.
/// `None` when the count overflows `u128`.
pub fn simplex_count(r: usize, n: usize) -> Option<u128> {
    let fact = (1..=r as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))?;
    let mut count = fact;
    for _ in 0..n {
        count = count.checked_mul(fact - 1)?;
    }
    Some(count)
}

/// Cap on materialized basis enumerations.
pub const ENUMERATION_LIMIT: u128 = 1_000_000;

/// All nondegenerate `n`-simplices at arity `r`, in lexicographic order on
/// the flattened vertex words.
pub fn enumerate_simplices(r: usize, n: usize) -> Result<Vec<Simplex>, Error> {
    if r == 0 {
        return Err(Error::InvalidArity(0));
    }
    let count = simplex_count(r, n).filter(|&c| c <= ENUMERATION_LIMIT).ok_or_else(|| {
        Error::ResourceExceeded(format!(
            "basis of {r}!·({r}!-1)^{n} simplices exceeds the enumeration limit"
        ))
    })?;
    let perms = all_permutations(r);
    let mut out = Vec::with_capacity(count as usize);
    let mut vertices: Vec<Permutation> = Vec::with_capacity(n + 1);
    fn rec(
        perms: &[Permutation],
        n: usize,
        vertices: &mut Vec<Permutation>,
        out: &mut Vec<Simplex>,
    ) {
        if vertices.len() == n + 1 {
            out.push(Simplex {
                vertices: vertices.clone(),
            });
            return;
        }
        for p in perms {
            if vertices.last() == Some(p) {
                continue;
            }
            vertices.push(p.clone());
            rec(perms, n, vertices, out);
            vertices.pop();
        }
    }
    rec(&perms, n, &mut vertices, &mut out);
    debug_assert_eq!(out.len() as u128, count);
    Ok(out)
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Simplex {
    type Err = Error;

    /// Parses `1,2,3;2,3,1;3,1,2`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let mut vertices = Vec::new();
        let mut offset = 0;
        for piece in s.split(';') {
            let p: Permutation = piece.parse().map_err(|e| match e {
                Error::Parse { position, message } => Error::parse(offset + position, message),
                other => other,
            })?;
            vertices.push(p);
            offset += piece.len() + 1;
        }
        Simplex::new(vertices)
    }
}
