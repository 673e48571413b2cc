//! Exact-arithmetic engine for the unramified local theory of metaplectic
//! Shalika models on the double cover of GL(2k).
//!
//! The crate is organized around a small tower:
//!
//! * [`exactalg`] - multivariate Laurent polynomials, rational functions and
//!   truncated power series over the rationals and the Gaussian rationals.
//! * [`weylroots`] - root systems and Weyl groups of GL(n) and Sp(k), with
//!   the GL(2k) embedding of the hyperoctahedral group.
//! * [`characters`] - unramified characters on the symplectic locus and the
//!   evaluations feeding the Casselman-Shalika sums.
//! * [`padicweil`] - Hilbert symbols (with a solvability oracle), normalized
//!   Weil factors and the two rank-one p-adic integrals.
//! * [`cocycle`] - exact multiplication in the metaplectic double cover
//!   restricted to monomial matrices.
//! * [`hallittlewood`] - Hall-Littlewood polynomials and the even-partition
//!   summation identity.
//! * [`csmodel`] - the Casselman-Shalika engine (both forms of the value
//!   formula, rank-one coefficients, theta specialization).
//! * [`zetagj`] - the unramified zeta integral as a truncated series and its
//!   closed L-quotient.
//! * [`clifford`] - the finite pin-representation computation.
//!
//! All values are immutable and all operations are pure functions.

pub mod characters;
pub mod clifford;
pub mod cocycle;
pub mod csmodel;
pub mod exactalg;
pub mod hallittlewood;
pub mod padicweil;
pub mod weylroots;
pub mod zetagj;

pub use exactalg::{BigRat, GaussRat, LaurentPoly, RatFunc, TruncSeries};

/// Errors surfaced by the exact engines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero polynomial")]
    DivisionByZeroPoly,
    #[error("not expandable at {var}=0")]
    NotExpandable { var: String },
    #[error("pole at specialization point: denominator {den} vanishes")]
    Pole { den: String },
    #[error("unbound variable {0} in specialization")]
    UnboundVariable(String),
    #[error("t_lambda outside T_{{n,*}}: partition has an odd part")]
    OddPartition,
    #[error("partition is not weakly decreasing")]
    NotAPartition,
    #[error("predicate requires specialization to exact rationals")]
    RequiresNumeric,
    #[error("odd residue characteristic required")]
    EvenResidueChar,
    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
