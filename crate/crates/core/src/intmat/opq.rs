//! The indefinite orthogonal groups `O(p,q;Z)` of integer matrices
//! preserving the diagonal form `I_{p,q} = I_p (+) (-I_q)` under congruence,
//! together with the generating set (swaps within each block, reflections,
//! and the corner matrix `D_{p,q}` mixing two positive and two negative
//! indices).

use num_bigint::BigInt;

use super::{reflection_matrix, swap_matrix, IntMat};
use crate::error::{Error, Result};

/// The type `(p, q)` of a diagonal `+-1` form: `p` entries `+1` followed by
/// `q` entries `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    pub p: usize,
    pub q: usize,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Signature {
        Signature { p, q }
    }

    pub fn size(&self) -> usize {
        self.p + self.q
    }
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// The diagonal matrix `I_{p,q}` with `p` entries `+1` followed by `q`
/// entries `-1`.
pub fn ipq(sig: Signature) -> IntMat {
    IntMat::from_fn(sig.size(), sig.size(), |r, c| {
        if r != c {
            BigInt::from(0)
        } else if r < sig.p {
            BigInt::from(1)
        } else {
            BigInt::from(-1)
        }
    })
}

/// Whether `t` lies in `O(p,q;Z)`, i.e. `t * I_{p,q} * t^t = I_{p,q}`.
///
/// The congruence forces `det(t)^2 = 1`, so no separate determinant check is
/// needed. Errors if `t` is not square of size `p+q`.
pub fn is_in_opq(t: &IntMat, sig: Signature) -> Result<bool> {
    let n = sig.size();
    if t.rows() != n || t.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "matrix is {}x{}, expected {n}x{n} for type {sig}",
            t.rows(),
            t.cols()
        )));
    }
    let form = ipq(sig);
    Ok(t.congruence(&form)? == form)
}

/// The block generator `D_{p,q}` acting nontrivially on indices
/// `{1, 2, p+1, p+2}`; requires `p, q >= 2`.
pub fn d_pq(sig: Signature) -> Result<IntMat> {
    if sig.p < 2 || sig.q < 2 {
        return Err(Error::Precondition(format!(
            "D_{{p,q}} needs p, q >= 2, got {sig}"
        )));
    }
    let corner = [
        [1, 1, -1, 0],
        [-1, 1, 0, 1],
        [-1, 0, 1, 1],
        [0, 1, -1, 1],
    ];
    let slots = [0, 1, sig.p, sig.p + 1];
    let mut m = IntMat::identity(sig.size());
    for (a, row) in slots.iter().zip(corner.iter()) {
        for (b, val) in slots.iter().zip(row.iter()) {
            m[(*a, *b)] = BigInt::from(*val);
        }
    }
    Ok(m)
}

/// The generating set of `O(p,q;Z)` for `p, q >= 2`: swaps within the
/// positive block, swaps within the negative block, all reflections, and
/// `D_{p,q}`.
pub fn wall_generators(sig: Signature) -> Result<Vec<IntMat>> {
    if sig.p < 2 || sig.q < 2 {
        return Err(Error::Precondition(format!(
            "generator list needs p, q >= 2, got {sig}"
        )));
    }
    let n = sig.size();
    let mut gens = Vec::new();
    for i in 1..=sig.p {
        for j in i + 1..=sig.p {
            gens.push(swap_matrix(n, i, j));
        }
    }
    for i in sig.p + 1..=n {
        for j in i + 1..=n {
            gens.push(swap_matrix(n, i, j));
        }
    }
    for i in 1..=n {
        gens.push(reflection_matrix(n, i));
    }
    gens.push(d_pq(sig)?);
    Ok(gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intmat::transvection_matrix;
    use crate::Sign;

    #[test]
    fn ipq_shapes() {
        assert_eq!(ipq(Signature::new(2, 1)), IntMat::diagonal(&[1, 1, -1]));
        assert_eq!(ipq(Signature::new(0, 0)), IntMat::zero(0, 0));
        assert_eq!(ipq(Signature::new(2, 2)), IntMat::diagonal(&[1, 1, -1, -1]));
    }

    #[test]
    fn identity_is_orthogonal() {
        assert!(is_in_opq(&IntMat::identity(4), Signature::new(2, 2)).unwrap());
    }

    #[test]
    fn transvection_is_not_orthogonal() {
        // W_{1,2}^{+1} = I + E12 picks up E11 + E12 + E21 in the congruence.
        let w = transvection_matrix(4, 1, 2, Sign::Plus);
        let sig = Signature::new(2, 2);
        assert!(!is_in_opq(&w, sig).unwrap());
        let g = w.congruence(&ipq(sig)).unwrap();
        let mut expected = ipq(sig);
        expected[(0, 0)] += 1;
        expected[(0, 1)] += 1;
        expected[(1, 0)] += 1;
        assert_eq!(g, expected);
    }

    #[test]
    fn is_in_opq_dimension_check() {
        let err = is_in_opq(&IntMat::identity(3), Signature::new(2, 2));
        assert!(matches!(err, Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn d22_matches_block_display() {
        let d = d_pq(Signature::new(2, 2)).unwrap();
        let expected = IntMat::from_rows(&[
            vec![1, 1, -1, 0],
            vec![-1, 1, 0, 1],
            vec![-1, 0, 1, 1],
            vec![0, 1, -1, 1],
        ]);
        assert_eq!(d, expected);
        assert!(is_in_opq(&d, Signature::new(2, 2)).unwrap());
    }

    #[test]
    fn d33_has_identity_middle_row() {
        let d = d_pq(Signature::new(3, 3)).unwrap();
        let row3: Vec<BigInt> = (0..6).map(|c| d[(2, c)].clone()).collect();
        let expected: Vec<BigInt> = [0, 0, 1, 0, 0, 0].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(row3, expected);
        assert!(is_in_opq(&d, Signature::new(3, 3)).unwrap());
    }

    #[test]
    fn d_pq_needs_two_by_two() {
        assert!(d_pq(Signature::new(1, 2)).is_err());
        assert!(wall_generators(Signature::new(2, 1)).is_err());
    }

    #[test]
    fn wall_generator_counts() {
        assert_eq!(wall_generators(Signature::new(2, 2)).unwrap().len(), 7);
        assert_eq!(wall_generators(Signature::new(3, 2)).unwrap().len(), 10);
    }

    #[test]
    fn wall_generators_satisfy_congruence() {
        for (p, q) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
            let sig = Signature::new(p, q);
            for g in wall_generators(sig).unwrap() {
                assert!(is_in_opq(&g, sig).unwrap(), "{g:?} not in O{sig}");
            }
        }
    }
}
