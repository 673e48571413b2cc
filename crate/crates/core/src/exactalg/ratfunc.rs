//! Rational functions with canonical reduced representation.
//!
//! Invariants: the denominator is nonzero, gcd(num, den) is a unit, the
//! denominator has leading coefficient 1 under graded lex, and variables
//! appearing in neither part are pruned. Equality is plain structural
//! equality.

use super::poly::LaurentPoly;
use super::BigRat;
use crate::{Error, Result};
use num::One;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

/// Canonical reduced quotient of two Laurent polynomials.
pub fn ratfunc_normalize(num: LaurentPoly, den: LaurentPoly) -> Result<RatFunc> {
    if den.is_zero() {
        return Err(Error::DivisionByZeroPoly);
    }
    if num.is_zero() {
        return Ok(RatFunc {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        });
    }
    let (num, den) = LaurentPoly::align(&num, &den);
    // pull the Laurent parts out as a single monomial on the numerator
    let vars = num.vars().to_vec();
    let mut n = num;
    let mut d = den;
    let mut mono_shift: Vec<i64> = vec![0; vars.len()];
    for (i, v) in vars.iter().enumerate() {
        let sn = n.min_exp(v);
        let sd = d.min_exp(v);
        if sn != 0 {
            n = n.shift_var(v, -sn);
        }
        if sd != 0 {
            d = d.shift_var(v, -sd);
        }
        mono_shift[i] = sn - sd;
    }
    let g = n.gcd(&d);
    if !g.is_one() {
        n = n.div_exact(&g).expect("gcd must divide numerator");
        d = d.div_exact(&g).expect("gcd must divide denominator");
    }
    for (i, v) in vars.iter().enumerate() {
        if mono_shift[i] != 0 {
            n = n.shift_var(v, mono_shift[i]);
        }
    }
    // make den leading coefficient 1, then den is an ordinary polynomial
    let lead = d.leading().expect("nonzero").1.clone();
    if !lead.is_one() {
        let inv = lead.recip();
        n = n.scale(&inv);
        d = d.scale(&inv);
    }
    let (n, d) = LaurentPoly::align(&n.prune_vars(), &d.prune_vars());
    Ok(RatFunc { num: n, den: d })
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        ratfunc_normalize(p, LaurentPoly::one()).unwrap()
    }

    pub fn from_rat(c: BigRat) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn int(n: i64) -> Self {
        Self::from_poly(LaurentPoly::int(n))
    }

    pub fn var(name: &str) -> Self {
        Self::from_poly(LaurentPoly::var(name))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Exact constant value if the function is a rational number.
    pub fn constant_value(&self) -> Option<BigRat> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        // lcm-based addition keeps intermediate polynomial sizes down
        let g = self.den.gcd(&other.den);
        let (da, db) = if g.is_one() {
            (self.den.clone(), other.den.clone())
        } else {
            (
                self.den.clone(),
                other.den.div_exact(&g).expect("gcd divides"),
            )
        };
        let lcm = da.mul(&db);
        let fa = lcm.div_exact(&self.den).expect("den divides lcm");
        let fb = lcm.div_exact(&other.den).expect("den divides lcm");
        let num = self.num.mul(&fa).add(&other.num.mul(&fb));
        ratfunc_normalize(num, lcm).expect("nonzero lcm")
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        // cross-cancel first: gcd(num_a, den_b), gcd(num_b, den_a)
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let na = if g1.is_one() {
            self.num.clone()
        } else {
            self.num.div_exact(&g1).expect("gcd divides")
        };
        let db = if g1.is_one() {
            other.den.clone()
        } else {
            other.den.div_exact(&g1).expect("gcd divides")
        };
        let nb = if g2.is_one() {
            other.num.clone()
        } else {
            other.num.div_exact(&g2).expect("gcd divides")
        };
        let da = if g2.is_one() {
            self.den.clone()
        } else {
            self.den.div_exact(&g2).expect("gcd divides")
        };
        ratfunc_normalize(na.mul(&nb), da.mul(&db)).expect("nonzero denominators")
    }

    pub fn inv(&self) -> Result<RatFunc> {
        ratfunc_normalize(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<RatFunc> {
        if e == 0 {
            return Ok(RatFunc::one());
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = RatFunc::one();
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&sq);
            }
            k >>= 1;
            if k > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// Cross-multiplied equality; avoids any further reduction.
    pub fn eq_cross(&self, other: &RatFunc) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    /// Substitute a polynomial for a variable in both parts.
    pub fn subst_var(&self, var: &str, value: &LaurentPoly) -> Result<RatFunc> {
        ratfunc_normalize(
            self.num.subst_var(var, value),
            self.den.subst_var(var, value),
        )
    }

    /// Exact rational evaluation at a point covering all variables.
    pub fn specialize(&self, bindings: &BTreeMap<String, BigRat>) -> Result<BigRat> {
        let d = self.den.eval(bindings)?;
        if num::Zero::is_zero(&d) {
            return Err(Error::Pole {
                den: self.den.to_string(),
            });
        }
        let n = self.num.eval(bindings)?;
        Ok(n / d)
    }
}

/// Exact evaluation; fails on unbound variables or poles.
pub fn specialize(f: &RatFunc, bindings: &BTreeMap<String, BigRat>) -> Result<BigRat> {
    f.specialize(bindings)
}

impl std::fmt::Display for RatFunc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, ratio};
    use super::*;

    fn u() -> LaurentPoly {
        LaurentPoly::var("u")
    }

    #[test]
    fn reduce_difference_of_squares() {
        let one = LaurentPoly::one();
        let f = ratfunc_normalize(one.sub(&u().pow(2)), one.sub(&u())).unwrap();
        assert_eq!(f, RatFunc::from_poly(one.add(&u())));
    }

    #[test]
    fn reduce_two_variables() {
        let z1 = LaurentPoly::var("z1");
        let z2 = LaurentPoly::var("z2");
        let f = ratfunc_normalize(z1.pow(2).sub(&z2.pow(2)), z1.sub(&z2)).unwrap();
        assert_eq!(f, RatFunc::from_poly(z1.add(&z2)));
    }

    #[test]
    fn zero_numerator_canonical() {
        let one = LaurentPoly::one();
        let f = ratfunc_normalize(LaurentPoly::zero(), one.sub(&u())).unwrap();
        assert_eq!(f, RatFunc::zero());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(
            ratfunc_normalize(LaurentPoly::one(), LaurentPoly::zero()),
            Err(Error::DivisionByZeroPoly)
        ));
    }

    #[test]
    fn scaling_invariance() {
        // normalize(a/b) == normalize(ac/bc)
        let one = LaurentPoly::one();
        let a = one.add(&u().pow(3));
        let b = one.sub(&u().pow(2)).scale(&ratio(7, 3));
        let c = u().add(&LaurentPoly::int(5)).mul(&LaurentPoly::var("z1"));
        let f1 = ratfunc_normalize(a.clone(), b.clone()).unwrap();
        let f2 = ratfunc_normalize(a.mul(&c), b.mul(&c)).unwrap();
        assert_eq!(f1, f2);
    }

    #[test]
    fn specialize_arithmetic() {
        let f = RatFunc::var("u")
            .add(&RatFunc::one())
            .div(&RatFunc::var("u").sub(&RatFunc::int(2)))
            .unwrap();
        let mut b = BTreeMap::new();
        b.insert("u".to_string(), rat(3));
        assert_eq!(f.specialize(&b).unwrap(), rat(4));
        b.insert("u".to_string(), rat(2));
        assert!(matches!(f.specialize(&b), Err(Error::Pole { .. })));
    }
}
