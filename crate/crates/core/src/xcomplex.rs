//! The surjection complex: basis enumeration and the cellular differential.
//!
//! The differential of a surjection deletes one occurrence of one value at a
//! time. Deletions that leave a degenerate or non-surjective word contribute
//! zero. The sign of a surviving deletion compares the orientations of the
//! fundamental simplices on both sides of the corresponding prism face:
//!
//! ```text
//! sign(u, k, x) = eps(u) * eps(v) * (-1)^(x + sum_{l<k} (d_l - 1))
//! ```
//!
//! where `eps` is the fundamental-simplex orientation and the exponent is
//! the Koszul count of the face `x` of factor `k` inside the tensor product
//! of the prism factors. This is exactly the sign that makes the twisted
//! Eilenberg-Zilber map a chain map.

use crate::chain::{BasisElement, Chain};
use crate::error::Error;
use crate::prism::orientation_sign;
use crate::simplex::ENUMERATION_LIMIT;
use crate::surjection::{classify_word, Surjection, WordClass};

/// Integer chains on surjections of fixed arity and degree.
pub type XChain = Chain<Surjection>;

impl BasisElement for Surjection {
    fn arity(&self) -> usize {
        Surjection::arity(self)
    }

    fn degree(&self) -> usize {
        Surjection::degree(self)
    }
}

/// The signed terms of the differential of a basis surjection.
pub fn surjection_boundary(u: &Surjection) -> XChain {
    let mut out = XChain::zero();
    if u.degree() == 0 {
        return out;
    }
    let mult = u.multiplicities();
    let eps_u = orientation_sign(u);
    // Koszul offset: dimensions of the prism factors left of k.
    let mut offset = 0usize;
    for k in 1..=u.arity() as u8 {
        let d_k = mult.count(k);
        for x in 0..d_k {
            let word = u
                .delete_occurrence(k, x)
                .expect("occurrence index within multiplicity");
            if let WordClass::Surjection(v) =
                classify_word(&word, u.arity()).expect("letters stay in range")
            {
                let koszul = if (x + offset) % 2 == 0 { 1 } else { -1 };
                out.add_term(v.clone(), eps_u * orientation_sign(&v) * koszul);
            }
        }
        offset += d_k - 1;
    }
    out
}

/// The differential extended linearly to chains.
pub fn boundary_x(c: &XChain) -> XChain {
    c.map_linear(surjection_boundary)
}

/// All surjections of the given arity and degree, in lexicographic word
/// order.
pub fn enumerate_surjections(r: usize, d: usize) -> Result<Vec<Surjection>, Error> {
    if r == 0 {
        return Err(Error::InvalidArity(0));
    }
    let length = r + d;
    let mut out = Vec::new();
    let mut word: Vec<u8> = Vec::with_capacity(length);
    let mut counts = vec![0usize; r];
    fn rec(
        r: usize,
        length: usize,
        word: &mut Vec<u8>,
        counts: &mut [usize],
        out: &mut Vec<Surjection>,
    ) -> Result<(), Error> {
        if word.len() == length {
            if counts.iter().all(|&c| c > 0) {
                if out.len() as u128 >= ENUMERATION_LIMIT {
                    return Err(Error::ResourceExceeded(format!(
                        "surjection basis at arity {r}, length {length} exceeds the enumeration limit"
                    )));
                }
                out.push(Surjection::new(word.clone(), r).expect("enumeration yields valid words"));
            }
            return Ok(());
        }
        let remaining = length - word.len();
        let missing = counts.iter().filter(|&&c| c == 0).count();
        if missing > remaining {
            return Ok(());
        }
        for k in 1..=r as u8 {
            if word.last() == Some(&k) {
                continue;
            }
            counts[k as usize - 1] += 1;
            word.push(k);
            rec(r, length, word, counts, out)?;
            word.pop();
            counts[k as usize - 1] -= 1;
        }
        Ok(())
    }
    rec(r, length, &mut word, &mut counts, &mut out)?;
    Ok(out)
}
