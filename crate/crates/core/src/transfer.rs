//! The transfer maps between the surjection complex and normalized chains.
//!
//! `tc` (twisted Eilenberg-Zilber) sends a surjection to the alternating sum
//! of the maximal simplices of its prism. Each path is weighted by its
//! shuffle sign times the orientation of the fundamental simplex, so the
//! fundamental simplex always carries coefficient `+1`; degenerate images
//! are dropped.
//!
//! `tr` (table reduction) is the Alexander-Whitney-type one-sided inverse.
//! On a basis simplex `(w_0,...,w_d)` of arity `r` it sums, over all
//! compositions `(r_0,...,r_d)` of `r + d` into positive parts, the
//! surjection assembled row by row: row `i` collects the first `r_i` values
//! of `w_i` not yet finalized, and every collected value except the row's
//! last (its caesura) becomes final once the row closes. Words with an
//! adjacent repetition are discarded; all surviving terms carry
//! coefficient `+1`.
//!
//! `homotopy` is the prefix cone: for a chain self-map `T` which is the
//! identity in degree 0, `H(w_0,...,w_d) = sum_i (-1)^(i+1)
//! (T(w_0,...,w_i), w_i,...,w_d)` satisfies `T = Id + dH + Hd` with the
//! alternating face convention used by [`crate::simplex::boundary_e`].

use crate::chain::Chain;
use crate::error::Error;
use crate::perm::Permutation;
use crate::prism::{enumerate_maximal_paths, orientation_sign, path_sign, path_vertices};
use crate::simplex::{is_nondegenerate, EChain, Simplex};
use crate::surjection::Surjection;
use crate::xcomplex::XChain;

/// Twisted Eilenberg-Zilber map on a basis surjection.
pub fn tc_surjection(u: &Surjection) -> EChain {
    let eps = orientation_sign(u);
    let mut out = EChain::zero();
    for p in enumerate_maximal_paths(u) {
        let vertices = path_vertices(u, &p).expect("enumerated path is valid");
        if is_nondegenerate(&vertices) {
            let s = Simplex::new(vertices).expect("checked nondegenerate");
            out.add_term(s, eps * path_sign(&p));
        }
    }
    out
}

/// Twisted Eilenberg-Zilber map, extended linearly.
pub fn tc(c: &XChain) -> EChain {
    c.map_linear(tc_surjection)
}

/// Table reduction of a basis simplex.
pub fn table_reduction(s: &Simplex) -> XChain {
    let r = s.arity();
    let d = s.dimension();
    let mut out = XChain::zero();
    for composition in compositions(r + d, d + 1) {
        if let Some(word) = reduce_rows(s.vertices(), &composition) {
            let u = Surjection::new(word, r).expect("surviving words are valid surjections");
            out.add_term(u, 1);
        }
    }
    out
}

/// Table reduction, extended linearly.
pub fn tr(c: &EChain) -> XChain {
    c.map_linear(table_reduction)
}

/// The composite `tc . tr` on a basis simplex; the chain self-map whose
/// homotopy to the identity the prefix cone realizes.
pub fn tc_tr(s: &Simplex) -> EChain {
    tc(&table_reduction(s))
}

/// Runs the row-filling procedure for one composition. Returns the
/// assembled word, or `None` when it acquires an adjacent repetition.
fn reduce_rows(vertices: &[Permutation], composition: &[usize]) -> Option<Vec<u8>> {
    let r = vertices[0].arity();
    let mut word: Vec<u8> = Vec::with_capacity(r + vertices.len() - 1);
    let mut fin = vec![false; r];
    for (i, (w, &row_len)) in vertices.iter().zip(composition).enumerate() {
        let mut row = w
            .word()
            .iter()
            .copied()
            .filter(|&v| !fin[v as usize - 1]);
        for _ in 0..row_len {
            let v = row.next().expect("composition bounded by availability");
            if word.last() == Some(&v) {
                return None;
            }
            word.push(v);
        }
        // All of the row except its caesura (the last entry) is finalized;
        // the last row keeps everything live.
        if i + 1 < vertices.len() {
            for &v in &word[word.len() - row_len..word.len() - 1] {
                fin[v as usize - 1] = true;
            }
        }
    }
    Some(word)
}

/// All compositions of `total` into `parts` positive parts, lexicographically.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(parts);
    fn rec(total: usize, parts: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            current.push(total);
            out.push(current.clone());
            current.pop();
            return;
        }
        for first in 1..=total - (parts - 1) {
            current.push(first);
            rec(total - first, parts - 1, current, out);
            current.pop();
        }
    }
    if parts >= 1 && total >= parts {
        rec(total, parts, &mut current, &mut out);
    }
    out
}

/// Prefix-cone homotopy of a chain self-map `t` against the identity, on a
/// basis simplex. Degenerate concatenations drop out; the result has
/// dimension `d + 1`.
///
/// `t` must preserve degree; a term of the wrong bidegree raises
/// [`Error::DegreeMismatch`].
pub fn homotopy_simplex<T>(s: &Simplex, t: T) -> Result<EChain, Error>
where
    T: Fn(&Simplex) -> EChain,
{
    let d = s.dimension();
    let mut out = EChain::zero();
    for i in 0..=d {
        let image = t(&s.prefix(i));
        if let Some(degree) = image.degree() {
            if degree != i {
                return Err(Error::DegreeMismatch {
                    expected: i,
                    actual: degree,
                });
            }
        }
        let sign = if (i + 1) % 2 == 0 { 1 } else { -1 };
        for (front, coefficient) in image.iter() {
            let mut vertices = front.vertices().to_vec();
            vertices.extend_from_slice(&s.vertices()[i..]);
            if is_nondegenerate(&vertices) {
                let cone = Simplex::new(vertices).expect("checked nondegenerate");
                out.add_term(cone, sign * coefficient);
            }
        }
    }
    Ok(out)
}

/// The prefix-cone homotopy extended linearly to chains.
pub fn homotopy<T>(c: &EChain, t: T) -> Result<EChain, Error>
where
    T: Fn(&Simplex) -> EChain + Copy,
{
    let mut out = EChain::zero();
    for (s, coefficient) in c.iter() {
        for (b, inner) in homotopy_simplex(s, t)?.iter() {
            out.add_term(b.clone(), coefficient * inner);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;
    use crate::simplex::{boundary_e, simplex_boundary};
    use crate::xcomplex::{enumerate_surjections, surjection_boundary};

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
    fn tc_of_the_running_example() {
        let c = tc_surjection(&surj(&[1, 2, 3, 1, 2]));
        assert_eq!(c.len(), 2);
        assert_eq!(
            c.coefficient(&simplex(&[&[1, 2, 3], &[2, 3, 1], &[3, 1, 2]])),
            1
        );
        assert_eq!(
            c.coefficient(&simplex(&[&[1, 2, 3], &[1, 3, 2], &[3, 1, 2]])),
            -1
        );
    }

    #[test]
    fn tc_is_the_identity_in_degree_zero() {
        let w = perm(&[3, 1, 2]);
        let c = tc_surjection(&Surjection::from_permutation(&w));
        assert_eq!(c, EChain::generator(Simplex::from_vertex(w)));
    }

    #[test]
    fn tc_drops_degenerate_paths() {
        let c = tc_surjection(&surj(&[2, 1, 2, 1]));
        assert_eq!(c, EChain::generator(simplex(&[&[2, 1], &[1, 2], &[2, 1]])));
    }

    #[test]
    fn tc_gives_the_fundamental_simplex_coefficient_one() {
        for r in 1..=3 {
            for d in 0..=3 {
                for u in enumerate_surjections(r, d).unwrap() {
                    let f = crate::prism::fundamental_simplex(&u);
                    assert_eq!(tc_surjection(&u).coefficient(&f), 1, "u={u}");
                }
            }
        }
    }

    #[test]
    fn table_reduction_inverts_the_fundamental_simplex() {
        assert_eq!(
            table_reduction(&simplex(&[&[1, 2, 3], &[2, 3, 1], &[3, 1, 2]])),
            XChain::generator(surj(&[1, 2, 3, 1, 2]))
        );
    }

    #[test]
    fn table_reduction_kills_the_other_maximal_simplex() {
        assert!(table_reduction(&simplex(&[&[1, 2, 3], &[1, 3, 2], &[3, 1, 2]])).is_zero());
    }

    #[test]
    fn table_reduction_on_a_diagonal_simplex() {
        let c = table_reduction(&simplex(&[&[1, 2, 3], &[3, 2, 1]]));
        let mut expected = XChain::generator(surj(&[1, 3, 2, 1]));
        expected.add_term(surj(&[1, 2, 3, 2]), 1);
        assert_eq!(c, expected);
        // Cross-check it is a chain map on this instance.
        let lhs = boundary_x_chain(&c);
        let rhs = tr(&simplex_boundary(&simplex(&[&[1, 2, 3], &[3, 2, 1]])));
        assert_eq!(lhs, rhs);
    }

    fn boundary_x_chain(c: &XChain) -> XChain {
        c.map_linear(surjection_boundary)
    }

    #[test]
    fn table_reduction_is_the_identity_in_degree_zero() {
        for w in all_permutations(4) {
            let s = Simplex::from_vertex(w.clone());
            assert_eq!(
                table_reduction(&s),
                XChain::generator(Surjection::from_permutation(&w))
            );
        }
    }

    #[test]
    fn retraction_on_small_arities() {
        for r in 1..=3 {
            for d in 0..=3 {
                for u in enumerate_surjections(r, d).unwrap() {
                    assert_eq!(
                        tr(&tc_surjection(&u)),
                        XChain::generator(u.clone()),
                        "tr(tc({u})) != {u}"
                    );
                }
            }
        }
    }

    #[test]
    fn chain_maps_commute_on_small_arities() {
        for r in 1..=3 {
            for d in 0..=3 {
                for u in enumerate_surjections(r, d).unwrap() {
                    let lhs = boundary_e(&tc_surjection(&u));
                    let rhs = tc(&surjection_boundary(&u));
                    assert_eq!(lhs, rhs, "tc fails to be a chain map on {u}");
                }
            }
        }
    }

    #[test]
    fn homotopy_vanishes_on_vertices() {
        let s = Simplex::from_vertex(perm(&[1, 2]));
        assert!(homotopy_simplex(&s, tc_tr).unwrap().is_zero());
    }

    #[test]
    fn homotopy_vanishes_on_fixed_edges() {
        let s = simplex(&[&[1, 2], &[2, 1]]);
        assert!(homotopy_simplex(&s, tc_tr).unwrap().is_zero());
    }

    #[test]
    fn homotopy_on_a_diagonal_edge() {
        let s = simplex(&[&[1, 2, 3], &[3, 2, 1]]);
        let h = homotopy_simplex(&s, tc_tr).unwrap();
        assert_eq!(
            h,
            EChain::generator(simplex(&[&[1, 2, 3], &[1, 3, 2], &[3, 2, 1]]))
        );
        // T = Id + dH + Hd on this simplex.
        let t = tc_tr(&s);
        let mut rhs = EChain::generator(s.clone());
        rhs = &rhs + &boundary_e(&h);
        rhs = &rhs + &homotopy(&simplex_boundary(&s), tc_tr).unwrap();
        assert_eq!(t, rhs);
    }

    #[test]
    fn homotopy_with_identity_is_zero() {
        // With T = Id every cone is degenerate, so H = 0 and dH + Hd = 0.
        let id = |s: &Simplex| EChain::generator(s.clone());
        for s in crate::simplex::enumerate_simplices(2, 3).unwrap() {
            assert!(homotopy_simplex(&s, id).unwrap().is_zero());
        }
    }

    #[test]
    fn homotopy_rejects_degree_shifts() {
        let shift = |s: &Simplex| {
            let mut vertices = s.vertices().to_vec();
            let other = if vertices[0] == perm(&[1, 2]) {
                perm(&[2, 1])
            } else {
                perm(&[1, 2])
            };
            vertices.push(other);
            EChain::generator(Simplex::new(vertices).unwrap())
        };
        let s = simplex(&[&[1, 2], &[2, 1]]);
        assert!(matches!(
            homotopy_simplex(&s, shift),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn compositions_enumerate_positive_parts() {
        assert_eq!(compositions(3, 1), vec![vec![3]]);
        assert_eq!(compositions(3, 2), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(compositions(5, 3).len(), 6);
        assert!(compositions(2, 3).is_empty());
    }
}
