//! The prism attached to a surjection.
//!
//! A surjection `u` of arity `r` with multiplicities `(d_1,...,d_r)` defines
//! a simplicial map from the prism `Δ^{d_1-1} × ... × Δ^{d_r-1}` into the bar
//! construction. A prism vertex is a coordinate tuple `(x_1,...,x_r)` with
//! `0 <= x_k <= d_k - 1`; its image is the permutation read off the word of
//! `u` at the selected occurrences (occurrence number `x_k + 1` of each value
//! `k`), taken in increasing position order.
//!
//! Maximal simplices of the prism are saturated monotone lattice paths from
//! `(0,...,0)` to `(d_1-1,...,d_r-1)`, encoded by their step sequences. The
//! fundamental simplex is the one whose step sequence is the caesura sequence
//! of `u`; its orientation sign calibrates the twisted Eilenberg-Zilber map.

use crate::error::Error;
use crate::simplex::{is_nondegenerate, Simplex};
use crate::surjection::{classify_word, Multiplicities, Surjection, WordClass};
use crate::perm::Permutation;

/// A vertex of the prism: one selected occurrence per value.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexCoord {
    coords: Vec<usize>,
}

impl VertexCoord {
    pub fn new(coords: Vec<usize>) -> Self {
        VertexCoord { coords }
    }

    pub fn origin(arity: usize) -> Self {
        VertexCoord {
            coords: vec![0; arity],
        }
    }

    pub fn coords(&self) -> &[usize] {
        &self.coords
    }

    /// Componentwise comparison; the face order of the prism.
    pub fn leq(&self, other: &VertexCoord) -> bool {
        self.coords.len() == other.coords.len()
            && self
                .coords
                .iter()
                .zip(&other.coords)
                .all(|(a, b)| a <= b)
    }

    fn validate(&self, mult: &Multiplicities) -> Result<(), Error> {
        if self.coords.len() != mult.counts().len() {
            return Err(Error::ArityMismatch {
                left: self.coords.len(),
                right: mult.counts().len(),
            });
        }
        for (k, (&x, &d)) in self.coords.iter().zip(mult.counts()).enumerate() {
            if x >= d {
                return Err(Error::CoordOutOfRange {
                    value: k as u8 + 1,
                    coord: x,
                    max: d - 1,
                });
            }
        }
        Ok(())
    }
}

/// The step sequence of a saturated monotone lattice path; step `k`
/// increments coordinate `k`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LatticePath {
    steps: Vec<u8>,
}

impl LatticePath {
    pub fn new(steps: Vec<u8>) -> Self {
        LatticePath { steps }
    }

    pub fn steps(&self) -> &[u8] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    fn validate(&self, mult: &Multiplicities) -> Result<(), Error> {
        let r = mult.counts().len();
        let mut counts = vec![0usize; r];
        for &k in &self.steps {
            if k == 0 || k as usize > r {
                return Err(Error::PathInvalid(format!("step {k} outside 1..={r}")));
            }
            counts[k as usize - 1] += 1;
        }
        for k in 1..=r as u8 {
            if counts[k as usize - 1] != mult.count(k) - 1 {
                return Err(Error::PathInvalid(format!(
                    "value {k} must step {} times, found {}",
                    mult.count(k) - 1,
                    counts[k as usize - 1]
                )));
            }
        }
        Ok(())
    }
}

/// The image of a prism vertex: select occurrence number `x_k + 1` of each
/// value `k` and read the selected positions in increasing order.
pub fn vertex_permutation(u: &Surjection, x: &VertexCoord) -> Result<Permutation, Error> {
    x.validate(&u.multiplicities())?;
    let table = u.occurrence_table();
    let mut selected: Vec<usize> = x
        .coords()
        .iter()
        .enumerate()
        .map(|(k, &xk)| table[k][xk])
        .collect();
    selected.sort_unstable();
    let word = u.word();
    Permutation::new(selected.iter().map(|&p| word[p]).collect())
}

/// All prism vertices with their images, ordered lexicographically on
/// coordinates.
pub fn vertex_table(u: &Surjection) -> Vec<(VertexCoord, Permutation)> {
    let mult = u.multiplicities();
    let mut out = Vec::new();
    let mut coords = vec![0usize; u.arity()];
    loop {
        let x = VertexCoord::new(coords.clone());
        let image = vertex_permutation(u, &x).expect("enumerated coordinate is valid");
        out.push((x, image));
        // Odometer with the rightmost coordinate fastest.
        let mut k = u.arity();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if coords[k] + 1 < mult.counts()[k] {
                coords[k] += 1;
                coords[k + 1..].iter_mut().for_each(|c| *c = 0);
                break;
            }
        }
    }
}

/// All step sequences with value `k` stepping `d_k - 1` times, in
/// lexicographic order. Their number is the multinomial
/// `d! / prod_k (d_k - 1)!`.
pub fn enumerate_maximal_paths(u: &Surjection) -> Vec<LatticePath> {
    let mult = u.multiplicities();
    let mut remaining: Vec<usize> = mult.counts().iter().map(|&d| d - 1).collect();
    let total: usize = remaining.iter().sum();
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(total);
    fn rec(
        remaining: &mut [usize],
        total: usize,
        steps: &mut Vec<u8>,
        out: &mut Vec<LatticePath>,
    ) {
        if steps.len() == total {
            out.push(LatticePath::new(steps.clone()));
            return;
        }
        for k in 0..remaining.len() {
            if remaining[k] > 0 {
                remaining[k] -= 1;
                steps.push(k as u8 + 1);
                rec(remaining, total, steps, out);
                steps.pop();
                remaining[k] += 1;
            }
        }
    }
    rec(&mut remaining, total, &mut steps, &mut out);
    out
}

/// The vertex images along a lattice path, starting at the origin.
pub fn path_vertices(u: &Surjection, p: &LatticePath) -> Result<Vec<Permutation>, Error> {
    p.validate(&u.multiplicities())?;
    let mut coords = vec![0usize; u.arity()];
    let mut vertices = Vec::with_capacity(p.len() + 1);
    vertices.push(vertex_permutation(u, &VertexCoord::new(coords.clone()))?);
    for &k in p.steps() {
        coords[k as usize - 1] += 1;
        vertices.push(vertex_permutation(u, &VertexCoord::new(coords.clone()))?);
    }
    Ok(vertices)
}

/// The maximal simplex determined by a path; `None` when adjacent vertex
/// images coincide, so the simplex vanishes in normalized chains.
pub fn path_to_simplex(u: &Surjection, p: &LatticePath) -> Result<Option<Simplex>, Error> {
    let vertices = path_vertices(u, p)?;
    if is_nondegenerate(&vertices) {
        Ok(Some(Simplex::new(vertices).expect("checked nondegenerate")))
    } else {
        Ok(None)
    }
}

/// The caesura sequence of `u` as a lattice path.
pub fn caesura_path(u: &Surjection) -> LatticePath {
    LatticePath::new(u.caesura_sequence())
}

/// The fundamental simplex: the maximal simplex along the caesura path.
/// It is always nondegenerate.
pub fn fundamental_simplex(u: &Surjection) -> Simplex {
    path_to_simplex(u, &caesura_path(u))
        .expect("caesura path is valid")
        .expect("fundamental simplex is nondegenerate")
}

/// Shuffle sign of a path: parity of inversions between distinct
/// coordinates. Steps of one coordinate never invert among themselves.
pub fn path_sign(p: &LatticePath) -> i64 {
    let steps = p.steps();
    let mut inversions = 0usize;
    for a in 0..steps.len() {
        for b in a + 1..steps.len() {
            if steps[a] > steps[b] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Orientation of the fundamental simplex relative to the standard shuffle
/// orientation of the prism.
pub fn orientation_sign(u: &Surjection) -> i64 {
    path_sign(&caesura_path(u))
}

/// The face of the prism in direction `k` at occurrence `x`: the surjection
/// (or degenerate / non-surjective word) obtained by deleting that
/// occurrence. Requires the `k`-th factor to have positive dimension.
pub fn prism_face(u: &Surjection, k: u8, x: usize) -> Result<WordClass, Error> {
    if k == 0 || k as usize > u.arity() {
        return Err(Error::OutOfRange {
            letter: k,
            position: 0,
            arity: u.arity(),
        });
    }
    if u.multiplicities().count(k) < 2 {
        return Err(Error::FactorIsPoint(k));
    }
    let word = u.delete_occurrence(k, x)?;
    classify_word(&word, u.arity())
}

/// Whether a simplex lies in the image of the prism of `u`: true iff its
/// vertex tuple lifts to a componentwise weakly increasing chain of prism
/// coordinates.
pub fn simplex_in_prism(s: &Simplex, u: &Surjection) -> bool {
    if s.arity() != u.arity() {
        return false;
    }
    // Preimages of each vertex under the (not necessarily injective)
    // vertex map.
    let table = vertex_table(u);
    let preimages: Vec<Vec<&VertexCoord>> = s
        .vertices()
        .iter()
        .map(|v| {
            table
                .iter()
                .filter(|(_, image)| image == v)
                .map(|(x, _)| x)
                .collect()
        })
        .collect();
    if preimages.iter().any(|p| p.is_empty()) {
        return false;
    }
    fn search(preimages: &[Vec<&VertexCoord>], level: usize, current: &VertexCoord) -> bool {
        if level == preimages.len() {
            return true;
        }
        preimages[level]
            .iter()
            .any(|x| current.leq(x) && search(preimages, level + 1, x))
    }
    preimages[0]
        .iter()
        .any(|x| search(&preimages, 1, x))
}

/// The first surjection, by total length and then lexicographic word order,
/// whose multiplicities all stay within `bound` and whose prism contains
/// `s`. `None` when no such surjection exists within the bound.
pub fn covering_surjection(s: &Simplex, bound: usize) -> Option<Surjection> {
    let r = s.arity();
    if bound == 0 {
        return None;
    }
    for length in r..=r * bound {
        let mut word: Vec<u8> = Vec::with_capacity(length);
        let mut counts = vec![0usize; r];
        if let Some(u) = covering_search(s, r, bound, length, &mut word, &mut counts) {
            return Some(u);
        }
    }
    None
}

fn covering_search(
    s: &Simplex,
    r: usize,
    bound: usize,
    length: usize,
    word: &mut Vec<u8>,
    counts: &mut [usize],
) -> Option<Surjection> {
    if word.len() == length {
        if counts.iter().all(|&c| c > 0) {
            let u = Surjection::new(word.clone(), r).expect("search yields valid surjections");
            if simplex_in_prism(s, &u) {
                return Some(u);
            }
        }
        return None;
    }
    let remaining = length - word.len();
    let missing = counts.iter().filter(|&&c| c == 0).count();
    if missing > remaining {
        return None;
    }
    for k in 1..=r as u8 {
        if word.last() == Some(&k) || counts[k as usize - 1] == bound {
            continue;
        }
        counts[k as usize - 1] += 1;
        word.push(k);
        if let Some(u) = covering_search(s, r, bound, length, word, counts) {
            return Some(u);
        }
        word.pop();
        counts[k as usize - 1] -= 1;
    }
    None
}
