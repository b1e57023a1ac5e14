//! Bounded breadth-first search for words in a matrix group: given a target
//! and a generator list, find a word of generators whose product is the
//! target.
//!
//! States are deduplicated through visited sets keyed by the canonical byte
//! encoding of the matrix. The search meets in the middle (forward from the
//! identity, backward from the target by peeling factors), which keeps the
//! state count at roughly the square root of a one-sided search. Termination
//! is guaranteed by the word-length bound together with a cap on entry
//! magnitude; both are parameters.

use std::collections::HashMap;

use crate::error::{Error, Result};

use super::IntMat;

/// Default cap on the magnitude of matrix entries explored by the search.
pub const DEFAULT_ENTRY_CAP: i64 = 64;

/// Searches for a word `g_k ... g_2 g_1` of length at most `max_len` with
/// product equal to `target`.
///
/// The result lists generator indices in application order: `w[0]` is the
/// first (rightmost) factor, so the matrix product is
/// `gens[w[k-1]] * ... * gens[w[0]]`, matching the composition order of the
/// move functor. Returns `None` when no word within the bounds exists.
///
/// Errors if a generator is not invertible over `Z` (the generator list is
/// expected to be closed under inverses, which forces unimodularity).
pub fn bfs_decompose(
    target: &IntMat,
    gens: &[IntMat],
    max_len: usize,
    entry_cap: i64,
) -> Result<Option<Vec<usize>>> {
    let n = target.rows();
    if !target.is_square() {
        return Err(Error::DimensionMismatch("target must be square".into()));
    }
    for g in gens {
        if g.rows() != n || g.cols() != n {
            return Err(Error::DimensionMismatch(
                "generator size differs from target".into(),
            ));
        }
    }
    let inverses: Vec<IntMat> = gens
        .iter()
        .map(IntMat::inverse_unimodular)
        .collect::<Result<_>>()
        .map_err(|_| Error::Precondition("generators must be unimodular".into()))?;

    let identity = IntMat::identity(n);
    if target == &identity {
        return Ok(Some(Vec::new()));
    }

    let cap = num_bigint::BigInt::from(entry_cap);
    if target.max_abs_entry() > cap {
        return Ok(None);
    }

    let fwd_depth = max_len.div_ceil(2);
    let bwd_depth = max_len / 2;

    // Forward side: words in application order, product = left-folded gens.
    let mut fwd: HashMap<Vec<u8>, Vec<usize>> = HashMap::new();
    fwd.insert(identity.canonical_bytes(), Vec::new());
    let mut fwd_frontier: Vec<(IntMat, Vec<usize>)> = vec![(identity, Vec::new())];

    // Backward side: factors peeled off the left of the target, recorded
    // last-factor-first.
    let mut bwd: HashMap<Vec<u8>, Vec<usize>> = HashMap::new();
    bwd.insert(target.canonical_bytes(), Vec::new());
    let mut bwd_frontier: Vec<(IntMat, Vec<usize>)> = vec![(target.clone(), Vec::new())];

    let join = |fwd_word: &[usize], bwd_word: &[usize]| -> Vec<usize> {
        let mut word = fwd_word.to_vec();
        word.extend(bwd_word.iter().rev());
        word
    };

    // The target itself may already be a known forward state only when it is
    // the identity, handled above. Grow both sides level by level; a meet of
    // a forward word of length a with a backward word of length b yields a
    // word of length a + b.
    for depth in 1..=fwd_depth.max(bwd_depth) {
        if depth <= fwd_depth {
            let mut next = Vec::new();
            for (state, word) in &fwd_frontier {
                for (gi, g) in gens.iter().enumerate() {
                    let product = g.mul(state)?;
                    if product.max_abs_entry() > cap {
                        continue;
                    }
                    let key = product.canonical_bytes();
                    if fwd.contains_key(&key) {
                        continue;
                    }
                    let mut w = word.clone();
                    w.push(gi);
                    fwd.insert(key, w.clone());
                    next.push((product, w));
                }
            }
            fwd_frontier = next;

            // New forward states may complete existing backward states.
            for (key, bwd_word) in &bwd {
                if let Some(fwd_word) = fwd.get(key) {
                    if fwd_word.len() + bwd_word.len() <= max_len {
                        return Ok(Some(join(fwd_word, bwd_word)));
                    }
                }
            }
        }

        if depth <= bwd_depth {
            let mut next = Vec::new();
            for (state, word) in &bwd_frontier {
                for (gi, ginv) in inverses.iter().enumerate() {
                    let peeled = ginv.mul(state)?;
                    if peeled.max_abs_entry() > cap {
                        continue;
                    }
                    let key = peeled.canonical_bytes();
                    if bwd.contains_key(&key) {
                        continue;
                    }
                    let mut w = word.clone();
                    w.push(gi);
                    if let Some(fwd_word) = fwd.get(&key) {
                        if fwd_word.len() + w.len() <= max_len {
                            return Ok(Some(join(fwd_word, &w)));
                        }
                    }
                    bwd.insert(key, w.clone());
                    next.push((peeled, w));
                }
            }
            bwd_frontier = next;
        }
    }

    Ok(None)
}

/// Product of a word returned by [`bfs_decompose`]: generators are applied
/// in list order, each as a new left factor.
pub fn word_product(gens: &[IntMat], word: &[usize], n: usize) -> Result<IntMat> {
    let mut acc = IntMat::identity(n);
    for &gi in word {
        let g = gens
            .get(gi)
            .ok_or_else(|| Error::IndexOutOfRange(format!("generator index {gi}")))?;
        acc = g.mul(&acc)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intmat::{reflection_matrix, wall_generators, Signature};

    #[test]
    fn identity_gives_empty_word() {
        let gens = wall_generators(Signature::new(2, 2)).unwrap();
        let word = bfs_decompose(&IntMat::identity(4), &gens, 4, DEFAULT_ENTRY_CAP)
            .unwrap()
            .unwrap();
        assert!(word.is_empty());
    }

    #[test]
    fn single_generator_found_at_length_one() {
        let mut gens = wall_generators(Signature::new(2, 2)).unwrap();
        // close under inverses; all of these are involutions except D
        let d_inv = gens.last().unwrap().inverse_unimodular().unwrap();
        gens.push(d_inv);
        let q1 = reflection_matrix(4, 1);
        let word = bfs_decompose(&q1, &gens, 4, DEFAULT_ENTRY_CAP)
            .unwrap()
            .unwrap();
        assert_eq!(word.len(), 1);
        assert_eq!(word_product(&gens, &word, 4).unwrap(), q1);
    }

    #[test]
    fn unreachable_within_bound_is_none() {
        let gens = vec![reflection_matrix(2, 1)];
        let target = IntMat::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert!(bfs_decompose(&target, &gens, 6, DEFAULT_ENTRY_CAP)
            .unwrap()
            .is_none());
    }
}
