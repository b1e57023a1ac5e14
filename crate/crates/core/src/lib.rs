//! Exact-arithmetic engine for the move calculus of framed links, working
//! at the level of their computable shadows: linking matrices, first-homology
//! classes, braid words and handle-chain data.
//!
//! Everything is integer arithmetic over [`num_bigint::BigInt`]; there is no
//! floating point anywhere in this crate.
//!
//! The main pieces:
//!
//! - [`intmat`] — integer matrices, Smith normal form, cokernels, and the
//!   indefinite orthogonal groups `O(p,q;Z)` with their generator set.
//! - [`movecalc`] — sequences of elementary moves on ordered, oriented
//!   framed links (reorderings, reorientations, handle-slides) and the
//!   functor into `GL(n;Z)`.
//! - [`homlink`] — homological shadows of framed links and every move
//!   acting on them, plus the surgery presentation of first homology.
//! - [`h4`] — the exterior power `Λ⁴Zʳ ≅ H₄(Zʳ)` and the obstruction-class
//!   cancellation planner.
//! - [`braidclasp`] — free-group words, the Artin representation of braid
//!   groups, and the braid certificates for the IHX identity.
//! - [`fourman`] — Kirby-diagram skeletons of closed 4-manifolds and their
//!   chain-level homology.
//! - [`pdcode`] — planar-diagram oracle for linking numbers and writhes,
//!   used to derive every figure-dependent constant reproducibly.
//! - [`verify`] — the full self-check suite backing `verify-all`.

pub mod braidclasp;
pub mod error;
pub mod fourman;
pub mod h4;
pub mod homlink;
pub mod intmat;
pub mod movecalc;
pub mod pdcode;
pub mod verify;

pub(crate) mod textio;

pub use error::Error;
pub use intmat::{AbelianGroup, IntMat, Signature, SmithDecomposition};

/// A sign, `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn from_i32(v: i32) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Sign::Plus => write!(f, "+1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self.flip()
    }
}
