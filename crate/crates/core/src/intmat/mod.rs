//! Exact integer matrices and the linear algebra the rest of the crate is
//! built on: arithmetic, Smith normal form, cokernels, and the groups
//! `O(p,q;Z)` with their generating set.

mod bfs;
mod opq;
mod snf;

pub use bfs::bfs_decompose;
pub use opq::{d_pq, ipq, is_in_opq, wall_generators, Signature};
pub use snf::{AbelianGroup, SmithDecomposition};

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::textio;
use crate::Sign;

/// A dense integer matrix with arbitrary-precision entries, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> IntMat {
        IntMat {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntMat {
        let mut m = IntMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> IntMat {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        IntMat { rows, cols, entries }
    }

    /// Builds a matrix from `i64` rows; rows must all have the same length.
    pub fn from_rows(rows: &[Vec<i64>]) -> IntMat {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        IntMat::from_fn(nrows, ncols, |r, c| BigInt::from(rows[r][c]))
    }

    pub fn diagonal(entries: &[i64]) -> IntMat {
        IntMat::from_fn(entries.len(), entries.len(), |r, c| {
            if r == c {
                BigInt::from(entries[r])
            } else {
                BigInt::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for r in 0..self.rows {
            for c in 0..r {
                if self[(r, c)] != self[(c, r)] {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_diagonal(&self) -> bool {
        for r in 0..self.rows {
            for c in 0..self.cols {
                if r != c && !self[(r, c)].is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == IntMat::identity(self.rows)
    }

    pub fn transpose(&self) -> IntMat {
        IntMat::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn mul(&self, other: &IntMat) -> Result<IntMat> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMat::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let add = a * &other[(k, c)];
                    out[(r, c)] += add;
                }
            }
        }
        Ok(out)
    }

    /// `self * other * self^t`.
    pub fn congruence(&self, other: &IntMat) -> Result<IntMat> {
        self.mul(other)?.mul(&self.transpose())
    }

    pub fn neg(&self) -> IntMat {
        IntMat::from_fn(self.rows, self.cols, |r, c| -&self[(r, c)])
    }

    /// Exact inverse of a unimodular matrix; [`Error::NotUnimodular`] if the
    /// determinant is not `+-1`.
    pub fn inverse_unimodular(&self) -> Result<IntMat> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "inverse of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        // U A V = S; when S = I the inverse is V U.
        let dec = snf::smith_normal_form(self);
        if !dec.s().is_identity() {
            return Err(Error::NotUnimodular);
        }
        dec.v().mul(dec.u())
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_square() && snf::smith_normal_form(self).s().is_identity()
    }

    /// Column `c` as a vector.
    pub fn col_vec(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.entries
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row(target) += k * row(source)
    pub fn add_row_multiple(&mut self, target: usize, source: usize, k: &BigInt) {
        assert_ne!(target, source);
        for c in 0..self.cols {
            let add = k * &self[(source, c)];
            self[(target, c)] += add;
        }
    }

    /// col(target) += k * col(source)
    pub fn add_col_multiple(&mut self, target: usize, source: usize, k: &BigInt) {
        assert_ne!(target, source);
        for r in 0..self.rows {
            let add = k * &self[(r, source)];
            self[(r, target)] += add;
        }
    }

    pub fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -&self[(r, c)];
            self[(r, c)] = v;
        }
    }

    pub fn negate_col(&mut self, c: usize) {
        for r in 0..self.rows {
            let v = -&self[(r, c)];
            self[(r, c)] = v;
        }
    }

    /// Canonical byte encoding (dimensions plus sign/magnitude of each entry),
    /// used as a visited-set key during breadth-first search.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(8 + self.entries.len() * 2);
        out.extend_from_slice(&(self.rows as u32).to_le_bytes());
        out.extend_from_slice(&(self.cols as u32).to_le_bytes());
        for e in &self.entries {
            let bytes = e.to_signed_bytes_le();
            out.extend_from_slice(&(bytes.len() as u32).to_le_bytes());
            out.extend_from_slice(&bytes);
        }
        out
    }

    /// Parses the plain text format: a `<rows> <cols>` header followed by
    /// `rows * cols` integers; whitespace runs and line breaks are free.
    pub fn parse(input: &str) -> Result<IntMat> {
        let mut toks = input
            .lines()
            .map(str::trim)
            .filter(|l| !l.starts_with('#'))
            .flat_map(str::split_whitespace);
        let rows = textio::parse_usize(
            toks.next()
                .ok_or_else(|| Error::Parse("empty matrix input".into()))?,
        )?;
        let cols = textio::parse_usize(
            toks.next()
                .ok_or_else(|| Error::Parse("missing column count".into()))?,
        )?;
        let mut entries = Vec::with_capacity(rows * cols);
        for _ in 0..rows * cols {
            let tok = toks
                .next()
                .ok_or_else(|| Error::Parse(format!("expected {} entries", rows * cols)))?;
            entries.push(textio::parse_bigint(tok)?);
        }
        if toks.next().is_some() {
            return Err(Error::Parse("trailing tokens after matrix entries".into()));
        }
        Ok(IntMat { rows, cols, entries })
    }

    /// Renders the plain text format accepted by [`IntMat::parse`].
    pub fn format(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for r in 0..self.rows {
            let line: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = BigInt;
    fn index(&self, (r, c): (usize, usize)) -> &BigInt {
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut BigInt {
        &mut self.entries[r * self.cols + c]
    }
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
        }
        write!(f, "]")
    }
}

/// The permutation matrix `I - E_ii - E_jj + E_ij + E_ji` exchanging
/// components `i` and `j` (1-based).
pub fn swap_matrix(n: usize, i: usize, j: usize) -> IntMat {
    let (i, j) = (i - 1, j - 1);
    let mut m = IntMat::identity(n);
    m.swap_rows(i, j);
    m
}

/// The reflection `I - 2 E_ii` reversing component `i` (1-based).
pub fn reflection_matrix(n: usize, i: usize) -> IntMat {
    let mut m = IntMat::identity(n);
    m[(i - 1, i - 1)] = BigInt::from(-1);
    m
}

/// The transvection `I + sign * E_ij` for a slide of `i` over `j` (1-based).
pub fn transvection_matrix(n: usize, i: usize, j: usize, sign: Sign) -> IntMat {
    let mut m = IntMat::identity(n);
    m[(i - 1, j - 1)] = BigInt::from(sign.as_i32());
    m
}

/// Smith normal form of `a`; see [`SmithDecomposition`].
pub fn smith_normal_form(a: &IntMat) -> SmithDecomposition {
    snf::smith_normal_form(a)
}

/// Cokernel of `a` acting on column vectors, `Z^rows / a Z^cols`.
pub fn cokernel(a: &IntMat) -> AbelianGroup {
    snf::cokernel(a)
}
