//! Smith normal form over `Z` by elementary row and column operations,
//! with both transforms tracked, plus the cokernel computation built on it.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMat;

/// A decomposition `U * A * V = S` with `U`, `V` unimodular and `S` diagonal,
/// every diagonal entry non-negative and dividing the next.
///
/// `S` is unique given `A`; the transforms are not.
#[derive(Debug, Clone)]
pub struct SmithDecomposition {
    u: IntMat,
    s: IntMat,
    v: IntMat,
    src_rows: usize,
    src_cols: usize,
}

impl SmithDecomposition {
    pub fn u(&self) -> &IntMat {
        &self.u
    }

    pub fn s(&self) -> &IntMat {
        &self.s
    }

    pub fn v(&self) -> &IntMat {
        &self.v
    }

    /// Dimensions of the matrix this decomposition was computed from.
    pub fn source_dims(&self) -> (usize, usize) {
        (self.src_rows, self.src_cols)
    }

    /// Nonzero diagonal entries `d_1 | d_2 | ...` of `S`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.s.rows().min(self.s.cols());
        (0..n)
            .map(|i| self.s[(i, i)].clone())
            .filter(|d| !d.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

pub fn smith_normal_form(a: &IntMat) -> SmithDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut s = a.clone();
    let mut u = IntMat::identity(m);
    let mut v = IntMat::identity(n);

    let mut t = 0;
    while t < m.min(n) {
        // Pivot: a nonzero entry of minimal magnitude in the remaining block.
        let Some((pi, pj)) = pivot(&s, t) else {
            break;
        };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);

        let mut clean = false;
        while !clean {
            clean = true;
            for i in t + 1..m {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = rounded_quotient(&s[(i, t)], &s[(t, t)]);
                if !q.is_zero() {
                    let k = -q;
                    s.add_row_multiple(i, t, &k);
                    u.add_row_multiple(i, t, &k);
                }
                if !s[(i, t)].is_zero() {
                    // Remainder smaller than the pivot: promote it and restart.
                    s.swap_rows(t, i);
                    u.swap_rows(t, i);
                    clean = false;
                }
            }
            for j in t + 1..n {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = rounded_quotient(&s[(t, j)], &s[(t, t)]);
                if !q.is_zero() {
                    let k = -q;
                    s.add_col_multiple(j, t, &k);
                    v.add_col_multiple(j, t, &k);
                }
                if !s[(t, j)].is_zero() {
                    s.swap_cols(t, j);
                    v.swap_cols(t, j);
                    clean = false;
                }
            }
            if clean {
                // Divisibility: the pivot must divide the remaining block.
                'scan: for i in t + 1..m {
                    for j in t + 1..n {
                        if !(&s[(i, j)] % &s[(t, t)]).is_zero() {
                            let one = BigInt::one();
                            s.add_row_multiple(t, i, &one);
                            u.add_row_multiple(t, i, &one);
                            clean = false;
                            break 'scan;
                        }
                    }
                }
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    // Remaining block is zero; normalize any negative diagonal left behind.
    for k in 0..m.min(n) {
        if s[(k, k)].is_negative() {
            s.negate_row(k);
            u.negate_row(k);
        }
    }

    SmithDecomposition {
        u,
        s,
        v,
        src_rows: m,
        src_cols: n,
    }
}

fn pivot(s: &IntMat, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..s.rows() {
        for j in t..s.cols() {
            let e = &s[(i, j)];
            if e.is_zero() {
                continue;
            }
            let mag = e.abs();
            match &best {
                Some((_, _, m)) if *m <= mag => {}
                _ => best = Some((i, j, mag)),
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Quotient rounding toward the nearest integer, so the remainder has
/// magnitude at most half the divisor.
fn rounded_quotient(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut q, r) = a.div_rem(b);
    let two_r = r.abs() * 2;
    if two_r > b.abs() {
        if (a.is_negative()) == (b.is_negative()) {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

/// A finitely generated abelian group `Z^free + Z/t_1 + ... + Z/t_k`
/// with `t_1 | t_2 | ... | t_k` and every `t_i >= 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn new(free_rank: usize, torsion: Vec<BigInt>) -> AbelianGroup {
        for w in torsion.windows(2) {
            debug_assert!((&w[1] % &w[0]).is_zero(), "torsion chain must divide");
        }
        debug_assert!(torsion.iter().all(|t| *t >= BigInt::from(2)));
        AbelianGroup { free_rank, torsion }
    }

    pub fn free(rank: usize) -> AbelianGroup {
        AbelianGroup::new(rank, Vec::new())
    }

    pub fn trivial() -> AbelianGroup {
        AbelianGroup::free(0)
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Cokernel of `a` acting on column vectors: `Z^rows / a Z^cols`.
pub fn cokernel(a: &IntMat) -> AbelianGroup {
    let dec = smith_normal_form(a);
    let factors = dec.invariant_factors();
    let free_rank = a.rows() - factors.len();
    let torsion = factors.into_iter().filter(|d| *d > BigInt::one()).collect();
    AbelianGroup::new(free_rank, torsion)
}
