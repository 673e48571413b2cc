//! Exact ground rings: arbitrary-precision rationals, Gaussian rationals,
//! multivariate Laurent polynomials, rational functions and truncated series.
//!
//! The distinguished prime-power variable is `u` with u^4 = q^{-1}, so that
//! q^{-1/2} = u^2 and all exponents appearing downstream are integers.

mod gcd;
mod poly;
mod ratfunc;
mod series;

pub use poly::{LaurentPoly, Mono};
pub use ratfunc::{ratfunc_normalize, RatFunc};
pub use series::{series_expand, TruncSeries};

use num::{BigInt, One, Signed, Zero};

/// Exact rational with arbitrary-precision numerator and denominator.
///
/// `num::BigRational` maintains the invariants we need: gcd(|num|, den) = 1
/// and den > 0.
pub type BigRat = num::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

/// Rational n/d (d nonzero).
pub fn ratio(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

/// Element of Q(i), i^2 = -1, with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussRat {
    pub re: BigRat,
    pub im: BigRat,
}

impl GaussRat {
    pub fn new(re: BigRat, im: BigRat) -> Self {
        GaussRat { re, im }
    }

    pub fn zero() -> Self {
        GaussRat::new(BigRat::zero(), BigRat::zero())
    }

    pub fn one() -> Self {
        GaussRat::new(BigRat::one(), BigRat::zero())
    }

    /// The imaginary unit i.
    pub fn i() -> Self {
        GaussRat::new(BigRat::zero(), BigRat::one())
    }

    pub fn from_rat(re: BigRat) -> Self {
        GaussRat::new(re, BigRat::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        GaussRat::new(&self.re + &other.re, &self.im + &other.im)
    }

    pub fn sub(&self, other: &Self) -> Self {
        GaussRat::new(&self.re - &other.re, &self.im - &other.im)
    }

    pub fn neg(&self) -> Self {
        GaussRat::new(-self.re.clone(), -self.im.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        GaussRat::new(
            &self.re * &other.re - &self.im * &other.im,
            &self.re * &other.im + &self.im * &other.re,
        )
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Self {
        let norm = &self.re * &self.re + &self.im * &self.im;
        assert!(!norm.is_zero(), "inverse of zero Gaussian rational");
        GaussRat::new(&self.re / &norm, -(&self.im / &norm))
    }

    /// i^e for e mod 4.
    pub fn i_pow(e: i64) -> Self {
        match e.rem_euclid(4) {
            0 => GaussRat::one(),
            1 => GaussRat::i(),
            2 => GaussRat::one().neg(),
            _ => GaussRat::i().neg(),
        }
    }
}

impl std::fmt::Display for GaussRat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            if self.im.is_one() {
                return write!(f, "i");
            }
            if (-self.im.clone()).is_one() {
                return write!(f, "-i");
            }
            return write!(f, "{}*i", self.im);
        }
        if self.im.is_positive() {
            write!(f, "{}+{}*i", self.re, self.im)
        } else {
            write!(f, "{}{}*i", self.re, self.im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_field_ops() {
        let a = GaussRat::new(ratio(1, 2), rat(3));
        let b = a.inv();
        assert_eq!(a.mul(&b), GaussRat::one());
        assert_eq!(a.mul(&a.conj()).im, BigRat::zero());
        assert_eq!(GaussRat::i().mul(&GaussRat::i()), GaussRat::one().neg());
    }

    #[test]
    fn i_pow_cycles() {
        assert_eq!(GaussRat::i_pow(0), GaussRat::one());
        assert_eq!(GaussRat::i_pow(2), GaussRat::one().neg());
        assert_eq!(GaussRat::i_pow(-1), GaussRat::i().neg());
        assert_eq!(GaussRat::i_pow(7), GaussRat::i().neg());
    }
}
