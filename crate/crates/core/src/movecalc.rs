//! Sequences of elementary moves on ordered, oriented framed links and the
//! functor taking them to `GL(n;Z)`.
//!
//! The three elementary moves on an `n`-component link are: exchanging two
//! components in the ordering, reversing the orientation of one component,
//! and handle-sliding one component over another with a sign. A sequence of
//! moves maps to the product of the corresponding elementary matrices.
//!
//! # Composition order
//!
//! The matrix of a sequence is the product `x_k ... x_2 x_1` where `x_1` is
//! the matrix of the *first* move applied: the first move is the rightmost
//! factor. Every operation in this module and its callers sticks to this
//! convention.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::intmat::{reflection_matrix, swap_matrix, transvection_matrix, IntMat, Signature};
use crate::textio;
use crate::Sign;

/// One elementary move on an ordered, oriented framed link. Indices are
/// 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    /// Exchange components `i` and `j` in the ordering.
    Reorder(usize, usize),
    /// Reverse the orientation of component `i`.
    Reorient(usize),
    /// Handle-slide component `i` over component `j` with sign `sign`.
    Slide { i: usize, j: usize, sign: Sign },
}

impl Move {
    fn validate(&self, n: usize) -> Result<()> {
        let check = |i: usize| -> Result<()> {
            if i == 0 || i > n {
                Err(Error::IndexOutOfRange(format!(
                    "move index {i} out of range 1..={n}"
                )))
            } else {
                Ok(())
            }
        };
        match *self {
            Move::Reorder(i, j) | Move::Slide { i, j, .. } => {
                check(i)?;
                check(j)?;
                if i == j {
                    return Err(Error::Precondition(format!(
                        "move needs two distinct components, got {i} twice"
                    )));
                }
                Ok(())
            }
            Move::Reorient(i) => check(i),
        }
    }

    /// The elementary matrix of this move in `GL(n;Z)`.
    pub fn matrix(&self, n: usize) -> IntMat {
        match *self {
            Move::Reorder(i, j) => swap_matrix(n, i, j),
            Move::Reorient(i) => reflection_matrix(n, i),
            Move::Slide { i, j, sign } => transvection_matrix(n, i, j, sign),
        }
    }

    /// The move undoing this one: slides flip sign, the others are
    /// involutions.
    pub fn inverse(&self) -> Move {
        match *self {
            Move::Slide { i, j, sign } => Move::Slide {
                i,
                j,
                sign: sign.flip(),
            },
            other => other,
        }
    }
}

impl std::fmt::Display for Move {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Move::Reorder(i, j) => write!(f, "P {i} {j}"),
            Move::Reorient(i) => write!(f, "Q {i}"),
            Move::Slide {
                i,
                j,
                sign: Sign::Plus,
            } => write!(f, "W+ {i} {j}"),
            Move::Slide {
                i,
                j,
                sign: Sign::Minus,
            } => write!(f, "W- {i} {j}"),
        }
    }
}

/// An ordered word of elementary moves on an `n`-component link.
///
/// `Slide { i, j, sign }` acts on linking data through `I + sign*E_ij`, i.e.
/// on row `i`:
///
/// ```
/// use kirby_shadow::movecalc::{Move, MoveSequence};
/// use kirby_shadow::intmat::IntMat;
/// use kirby_shadow::Sign;
///
/// let s = MoveSequence::new(2, vec![Move::Slide { i: 1, j: 2, sign: Sign::Plus }]).unwrap();
/// assert_eq!(s.phi(), IntMat::from_rows(&[vec![1, 1], vec![0, 1]]));
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveSequence {
    n: usize,
    moves: Vec<Move>,
}

impl MoveSequence {
    pub fn new(n: usize, moves: Vec<Move>) -> Result<MoveSequence> {
        for m in &moves {
            m.validate(n)?;
        }
        Ok(MoveSequence { n, moves })
    }

    pub fn empty(n: usize) -> MoveSequence {
        MoveSequence { n, moves: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// `self` followed by `other`; the matrix is `other.phi() * self.phi()`.
    pub fn then(&self, other: &MoveSequence) -> Result<MoveSequence> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "cannot concatenate sequences on {} and {} components",
                self.n, other.n
            )));
        }
        let mut moves = self.moves.clone();
        moves.extend_from_slice(&other.moves);
        Ok(MoveSequence { n: self.n, moves })
    }

    /// The matrix of the sequence: the product of the move matrices with the
    /// first move as the rightmost factor.
    pub fn phi(&self) -> IntMat {
        let mut acc = IntMat::identity(self.n);
        for m in &self.moves {
            acc = m.matrix(self.n).mul(&acc).expect("square sizes agree");
        }
        acc
    }

    /// The reverse sequence: moves in reverse order, slides with flipped
    /// sign. Satisfies `phi(reverse) = phi(self)^-1`.
    pub fn reverse(&self) -> MoveSequence {
        MoveSequence {
            n: self.n,
            moves: self.moves.iter().rev().map(Move::inverse).collect(),
        }
    }

    /// Whether the sequence satisfies the band-slide criterion `phi = I`.
    ///
    /// A sequence with identity matrix is realizable by band-slides alone;
    /// this reports the matrix criterion, not the geometric realization.
    pub fn is_band_slide_realizable(&self) -> bool {
        self.phi().is_identity()
    }
}

/// Applies the moves of `s` to a symmetric linking matrix: the result equals
/// `phi(s) * lk * phi(s)^t`, computed move by move as row and column
/// operations.
pub fn evolve_lk(lk: &IntMat, s: &MoveSequence) -> Result<IntMat> {
    if !lk.is_symmetric() {
        return Err(Error::Precondition(
            "linking matrix must be symmetric".into(),
        ));
    }
    if lk.rows() != s.n() {
        return Err(Error::DimensionMismatch(format!(
            "linking matrix is {}x{} but sequence has n={}",
            lk.rows(),
            lk.cols(),
            s.n()
        )));
    }
    let mut m = lk.clone();
    for mv in s.moves() {
        apply_move_to_lk(&mut m, mv);
    }
    Ok(m)
}

pub(crate) fn apply_move_to_lk(lk: &mut IntMat, mv: &Move) {
    match *mv {
        Move::Reorder(i, j) => {
            lk.swap_rows(i - 1, j - 1);
            lk.swap_cols(i - 1, j - 1);
        }
        Move::Reorient(i) => {
            lk.negate_row(i - 1);
            lk.negate_col(i - 1);
        }
        Move::Slide { i, j, sign } => {
            let k = BigInt::from(sign.as_i32());
            lk.add_row_multiple(i - 1, j - 1, &k);
            lk.add_col_multiple(i - 1, j - 1, &k);
        }
    }
}

/// `(p, q)` when `lk` equals `I_{p,q}` exactly: diagonal, `+1` entries first,
/// then `-1` entries.
pub fn admissible_type(lk: &IntMat) -> Option<Signature> {
    if !lk.is_symmetric() || !lk.is_diagonal() {
        return None;
    }
    let n = lk.rows();
    let one = BigInt::from(1);
    let minus_one = BigInt::from(-1);
    let mut p = 0;
    while p < n && lk[(p, p)] == one {
        p += 1;
    }
    let mut q = p;
    while q < n && lk[(q, q)] == minus_one {
        q += 1;
    }
    if q == n {
        Some(Signature::new(p, n - p))
    } else {
        None
    }
}

/// For a diagonal `+-1` matrix in any order, a sequence of reorderings
/// sorting the `+1` entries first, with the resulting type. `None` when the
/// matrix is not diagonal with `+-1` entries.
pub fn normalize_admissible(lk: &IntMat) -> Option<(MoveSequence, Signature)> {
    if !lk.is_symmetric() || !lk.is_diagonal() {
        return None;
    }
    let n = lk.rows();
    let one = BigInt::from(1);
    let minus_one = BigInt::from(-1);
    let mut diag: Vec<bool> = Vec::with_capacity(n);
    for i in 0..n {
        let d = &lk[(i, i)];
        if *d == one {
            diag.push(true);
        } else if *d == minus_one {
            diag.push(false);
        } else {
            return None;
        }
    }
    let p = diag.iter().filter(|&&d| d).count();
    let mut moves = Vec::new();
    for target in 0..p {
        if diag[target] {
            continue;
        }
        let source = (target + 1..n).find(|&k| diag[k]).expect("p positives");
        diag.swap(target, source);
        moves.push(Move::Reorder(target + 1, source + 1));
    }
    let seq = MoveSequence::new(n, moves).expect("indices in range");
    Some((seq, Signature::new(p, n - p)))
}

/// The eight-slide word whose matrix is the block generator `D` embedded at
/// the four given slots (for `sign = -1`, the reverse word, with matrix
/// `D^-1`).
///
/// Slots `(a1, a2)` are meant to carry framing `+1` and `(b1, b2)` framing
/// `-1`; the abstract indices `1, 2, 3, 4` of the word map to
/// `a1, a2, b1, b2`. Errors when the slots collide or fall outside `1..=n`.
pub fn expand_d_move(
    n: usize,
    slots: (usize, usize, usize, usize),
    sign: Sign,
) -> Result<MoveSequence> {
    let map = [slots.0, slots.1, slots.2, slots.3];
    for (k, &s) in map.iter().enumerate() {
        if s == 0 || s > n {
            return Err(Error::IndexOutOfRange(format!(
                "slot {s} out of range 1..={n}"
            )));
        }
        if map[..k].contains(&s) {
            return Err(Error::Precondition(format!("slot {s} used twice")));
        }
    }
    // The word for D, in application order (first move = rightmost matrix
    // factor):
    //   D = W_{2,1}^- W_{3,1}^- W_{2,4}^+ W_{3,4}^+ W_{4,3}^- W_{1,3}^- W_{4,2}^+ W_{1,2}^+
    let abstract_word = [
        (1, 2, Sign::Plus),
        (4, 2, Sign::Plus),
        (1, 3, Sign::Minus),
        (4, 3, Sign::Minus),
        (3, 4, Sign::Plus),
        (2, 4, Sign::Plus),
        (3, 1, Sign::Minus),
        (2, 1, Sign::Minus),
    ];
    let moves: Vec<Move> = abstract_word
        .iter()
        .map(|&(i, j, s)| Move::Slide {
            i: map[i - 1],
            j: map[j - 1],
            sign: s,
        })
        .collect();
    let seq = MoveSequence::new(n, moves)?;
    Ok(match sign {
        Sign::Plus => seq,
        Sign::Minus => seq.reverse(),
    })
}

/// Parses the move-sequence text format.
///
/// One move per line after a `n <count>` header: `P i j`, `Q i`, `W+ i j`,
/// `W- i j`, the band-slide macro `BS i j` (expanding to `W+ i j` then
/// `W- i j`), and the macros `D+ a1 a2 b1 b2` / `D- a1 a2 b1 b2`. Indices
/// are 1-based; `#` starts a comment line.
pub fn parse_sequence(input: &str) -> Result<MoveSequence> {
    let mut lines = textio::content_lines(input);
    let header: Vec<&str> = lines
        .next()
        .ok_or_else(|| Error::Parse("missing `n <count>` header".into()))?
        .split_whitespace()
        .collect();
    let n = match header.as_slice() {
        ["n", count] => textio::parse_usize(count)?,
        _ => return Err(Error::Parse("header must be `n <count>`".into())),
    };
    let mut moves = Vec::new();
    for line in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        let parse_idx = |t: &str| textio::parse_usize(t);
        match toks.as_slice() {
            ["P", i, j] => moves.push(Move::Reorder(parse_idx(i)?, parse_idx(j)?)),
            ["Q", i] => moves.push(Move::Reorient(parse_idx(i)?)),
            ["W+", i, j] => moves.push(Move::Slide {
                i: parse_idx(i)?,
                j: parse_idx(j)?,
                sign: Sign::Plus,
            }),
            ["W-", i, j] => moves.push(Move::Slide {
                i: parse_idx(i)?,
                j: parse_idx(j)?,
                sign: Sign::Minus,
            }),
            ["BS", i, j] => {
                let (i, j) = (parse_idx(i)?, parse_idx(j)?);
                moves.push(Move::Slide {
                    i,
                    j,
                    sign: Sign::Plus,
                });
                moves.push(Move::Slide {
                    i,
                    j,
                    sign: Sign::Minus,
                });
            }
            ["D+", a1, a2, b1, b2] | ["D-", a1, a2, b1, b2] => {
                let sign = if toks[0] == "D+" { Sign::Plus } else { Sign::Minus };
                let slots = (
                    parse_idx(a1)?,
                    parse_idx(a2)?,
                    parse_idx(b1)?,
                    parse_idx(b2)?,
                );
                let expanded = expand_d_move(n, slots, sign)?;
                moves.extend_from_slice(expanded.moves());
            }
            _ => return Err(Error::Parse(format!("unrecognized move line {line:?}"))),
        }
    }
    MoveSequence::new(n, moves)
}

/// Renders a sequence in the text format of [`parse_sequence`] (macros are
/// not reconstructed).
pub fn format_sequence(s: &MoveSequence) -> String {
    let mut out = format!("n {}\n", s.n());
    for m in s.moves() {
        out.push_str(&m.to_string());
        out.push('\n');
    }
    out
}

/// True when `lk` is zero off the diagonal; helper for admissibility-style
/// checks on raw matrices.
pub fn off_diagonal_is_zero(lk: &IntMat) -> bool {
    for r in 0..lk.rows() {
        for c in 0..lk.cols() {
            if r != c && !lk[(r, c)].is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intmat::{d_pq, ipq};

    fn slide(i: usize, j: usize, sign: Sign) -> Move {
        Move::Slide { i, j, sign }
    }

    #[test]
    fn phi_empty_is_identity() {
        assert_eq!(MoveSequence::empty(3).phi(), IntMat::identity(3));
    }

    #[test]
    fn phi_single_reorder() {
        let s = MoveSequence::new(2, vec![Move::Reorder(1, 2)]).unwrap();
        assert_eq!(s.phi(), IntMat::from_rows(&[vec![0, 1], vec![1, 0]]));
    }

    #[test]
    fn phi_double_slide_accumulates() {
        let s = MoveSequence::new(
            2,
            vec![slide(1, 2, Sign::Plus), slide(1, 2, Sign::Plus)],
        )
        .unwrap();
        assert_eq!(s.phi(), IntMat::from_rows(&[vec![1, 2], vec![0, 1]]));
    }

    #[test]
    fn phi_composition_order_first_move_rightmost() {
        // Slide then reorder: matrix = P * W, not W * P.
        let s = MoveSequence::new(2, vec![slide(1, 2, Sign::Plus), Move::Reorder(1, 2)]).unwrap();
        let w = transvection_matrix(2, 1, 2, Sign::Plus);
        let p = swap_matrix(2, 1, 2);
        assert_eq!(s.phi(), p.mul(&w).unwrap());
    }

    #[test]
    fn reverse_flips_slides() {
        let s = MoveSequence::new(2, vec![slide(1, 2, Sign::Plus)]).unwrap();
        assert_eq!(s.reverse().moves(), &[slide(1, 2, Sign::Minus)]);
        assert!(MoveSequence::empty(4).reverse().is_empty());
    }

    #[test]
    fn reverse_inverts_phi() {
        let s = MoveSequence::new(
            3,
            vec![
                slide(1, 2, Sign::Plus),
                Move::Reorient(2),
                Move::Reorder(2, 3),
                slide(3, 1, Sign::Minus),
            ],
        )
        .unwrap();
        let product = s.reverse().phi().mul(&s.phi()).unwrap();
        assert_eq!(product, IntMat::identity(3));
    }

    #[test]
    fn evolve_lk_single_slide() {
        let lk = IntMat::diagonal(&[1, -1]);
        let s = MoveSequence::new(2, vec![slide(1, 2, Sign::Plus)]).unwrap();
        let out = evolve_lk(&lk, &s).unwrap();
        assert_eq!(out, IntMat::from_rows(&[vec![0, -1], vec![-1, -1]]));
    }

    #[test]
    fn evolve_lk_band_slide_pair_is_identity() {
        let lk = IntMat::from_rows(&[vec![2, 3, 0], vec![3, -1, 5], vec![0, 5, 7]]);
        let s = MoveSequence::new(
            3,
            vec![slide(2, 3, Sign::Plus), slide(2, 3, Sign::Minus)],
        )
        .unwrap();
        assert_eq!(evolve_lk(&lk, &s).unwrap(), lk);
    }

    #[test]
    fn evolve_lk_rejects_asymmetric() {
        let lk = IntMat::from_rows(&[vec![0, 1], vec![2, 0]]);
        let s = MoveSequence::empty(2);
        assert!(evolve_lk(&lk, &s).is_err());
    }

    #[test]
    fn evolve_lk_fixes_ipq_under_d_word() {
        let s = expand_d_move(4, (1, 2, 3, 4), Sign::Plus).unwrap();
        let form = ipq(Signature::new(2, 2));
        assert_eq!(evolve_lk(&form, &s).unwrap(), form);
    }

    #[test]
    fn band_slide_criterion() {
        let pair = MoveSequence::new(
            2,
            vec![slide(1, 2, Sign::Plus), slide(1, 2, Sign::Minus)],
        )
        .unwrap();
        assert!(pair.is_band_slide_realizable());
        let single = MoveSequence::new(2, vec![slide(1, 2, Sign::Plus)]).unwrap();
        assert!(!single.is_band_slide_realizable());
        let double_swap =
            MoveSequence::new(2, vec![Move::Reorder(1, 2), Move::Reorder(1, 2)]).unwrap();
        assert!(double_swap.is_band_slide_realizable());
    }

    #[test]
    fn admissible_type_cases() {
        assert_eq!(
            admissible_type(&IntMat::diagonal(&[1, 1, -1])),
            Some(Signature::new(2, 1))
        );
        assert_eq!(admissible_type(&IntMat::diagonal(&[-1, 1])), None);
        assert_eq!(
            admissible_type(&IntMat::from_rows(&[vec![1, 1], vec![1, -1]])),
            None
        );
    }

    #[test]
    fn normalize_admissible_sorts() {
        let (seq, sig) = normalize_admissible(&IntMat::diagonal(&[-1, 1])).unwrap();
        assert_eq!(seq.moves(), &[Move::Reorder(1, 2)]);
        assert_eq!(sig, Signature::new(1, 1));
        let evolved = evolve_lk(&IntMat::diagonal(&[-1, 1]), &seq).unwrap();
        assert_eq!(admissible_type(&evolved), Some(sig));

        let (seq, sig) = normalize_admissible(&IntMat::diagonal(&[1, 1])).unwrap();
        assert!(seq.is_empty());
        assert_eq!(sig, Signature::new(2, 0));

        assert!(normalize_admissible(&IntMat::diagonal(&[1, 2])).is_none());
    }

    #[test]
    fn expand_d_move_matches_generator() {
        let s = expand_d_move(4, (1, 2, 3, 4), Sign::Plus).unwrap();
        assert_eq!(s.len(), 8);
        assert_eq!(s.phi(), d_pq(Signature::new(2, 2)).unwrap());

        let inv = expand_d_move(4, (1, 2, 3, 4), Sign::Minus).unwrap();
        let d = d_pq(Signature::new(2, 2)).unwrap();
        assert_eq!(inv.phi(), d.inverse_unimodular().unwrap());
    }

    #[test]
    fn expand_d_move_embeds() {
        let s = expand_d_move(6, (1, 2, 4, 5), Sign::Plus).unwrap();
        let phi = s.phi();
        for fixed in [2usize, 5] {
            for c in 0..6 {
                let expected = i64::from(c == fixed);
                assert_eq!(phi[(fixed, c)], BigInt::from(expected));
                assert_eq!(phi[(c, fixed)], BigInt::from(expected));
            }
        }
        assert!(expand_d_move(4, (1, 1, 2, 3), Sign::Plus).is_err());
        assert!(expand_d_move(3, (1, 2, 3, 4), Sign::Plus).is_err());
    }

    #[test]
    fn parse_and_format_round_trip() {
        let text = "# sample sequence\nn 4\nP 1 2\nQ 3\nW+ 1 2\nW- 2 4\nBS 1 3\n";
        let s = parse_sequence(text).unwrap();
        assert_eq!(s.len(), 6);
        assert_eq!(
            s.moves()[4],
            Move::Slide {
                i: 1,
                j: 3,
                sign: Sign::Plus
            }
        );
        let again = parse_sequence(&format_sequence(&s)).unwrap();
        assert_eq!(s, again);
    }

    #[test]
    fn parse_d_macro() {
        let s = parse_sequence("n 4\nD+ 1 2 3 4\n").unwrap();
        assert_eq!(s.phi(), d_pq(Signature::new(2, 2)).unwrap());
        let s = parse_sequence("n 4\nD- 1 2 3 4\n").unwrap();
        let d = d_pq(Signature::new(2, 2)).unwrap();
        assert_eq!(s.phi(), d.inverse_unimodular().unwrap());
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(parse_sequence("").is_err());
        assert!(parse_sequence("n 2\nX 1 2\n").is_err());
        assert!(parse_sequence("n 2\nW+ 1 1\n").is_err());
        assert!(parse_sequence("n 2\nP 1 3\n").is_err());
    }
}
