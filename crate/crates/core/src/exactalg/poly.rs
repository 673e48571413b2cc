//! Multivariate Laurent polynomials over Q with canonical term order.
//!
//! Variables are kept sorted by name and exponent vectors are compared in
//! graded-lexicographic order, so equal polynomials have identical
//! representations and printing is byte-stable.

use super::BigRat;
use num::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// Exponent vector with graded-lexicographic ordering.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<i64>);

impl Mono {
    pub fn total_degree(&self) -> i64 {
        self.0.iter().sum()
    }

    fn add(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn sub(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Laurent polynomial: sorted variable names plus a map from exponent
/// vectors to nonzero rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: Vec<String>,
    terms: BTreeMap<Mono, BigRat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            vars: vec![],
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono(vec![]), c);
        }
        LaurentPoly { vars: vec![], terms }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(super::rat(n))
    }

    /// The variable `name` to the first power.
    pub fn var(name: &str) -> Self {
        Self::var_pow(name, 1)
    }

    /// name^e as a Laurent monomial.
    pub fn var_pow(name: &str, e: i64) -> Self {
        if e == 0 {
            return Self::one();
        }
        let mut terms = BTreeMap::new();
        terms.insert(Mono(vec![e]), BigRat::one());
        LaurentPoly {
            vars: vec![name.to_string()],
            terms,
        }
    }

    /// Build from explicit (exponent vector, coefficient) pairs over `vars`.
    pub fn from_terms(vars: &[&str], terms: &[(&[i64], BigRat)]) -> Self {
        let mut p = LaurentPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        };
        for (e, c) in terms {
            assert_eq!(e.len(), p.vars.len());
            if !c.is_zero() {
                let m = Mono(e.to_vec());
                let entry = p.terms.entry(m).or_insert_with(BigRat::zero);
                *entry += c.clone();
            }
        }
        p.terms.retain(|_, c| !c.is_zero());
        p.canonicalize()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.is_constant()
            && self
                .terms
                .values()
                .next()
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1
            && self
                .terms
                .keys()
                .all(|m| m.0.iter().all(|&e| e == 0))
    }

    /// Single-term test: Laurent units are exactly the nonzero monomials.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_value(&self) -> Option<BigRat> {
        if self.is_zero() {
            return Some(BigRat::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigRat)> {
        self.terms.iter()
    }

    /// Leading (largest) term under graded lex.
    pub fn leading(&self) -> Option<(&Mono, &BigRat)> {
        self.terms.iter().next_back()
    }

    /// Drop variables that appear with exponent zero in every term.
    pub fn prune_vars(&self) -> LaurentPoly {
        let used: Vec<usize> = (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|m| m.0[i] != 0))
            .collect();
        if used.len() == self.vars.len() {
            return self.clone();
        }
        let vars: Vec<String> = used.iter().map(|&i| self.vars[i].clone()).collect();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (Mono(used.iter().map(|&i| m.0[i]).collect()), c.clone()))
            .collect();
        LaurentPoly { vars, terms }
    }

    fn canonicalize(self) -> LaurentPoly {
        // sort vars by name, permute exponents accordingly
        let mut idx: Vec<usize> = (0..self.vars.len()).collect();
        idx.sort_by(|&a, &b| self.vars[a].cmp(&self.vars[b]));
        let sorted = idx.windows(2).all(|w| self.vars[w[0]] <= self.vars[w[1]]);
        debug_assert!(
            {
                let mut names = self.vars.clone();
                names.sort();
                names.dedup();
                names.len() == self.vars.len()
            },
            "duplicate variable names"
        );
        if sorted && idx.iter().enumerate().all(|(i, &j)| i == j) {
            return self;
        }
        let vars: Vec<String> = idx.iter().map(|&i| self.vars[i].clone()).collect();
        let terms = self
            .terms
            .into_iter()
            .map(|(m, c)| (Mono(idx.iter().map(|&i| m.0[i]).collect()), c))
            .collect();
        LaurentPoly { vars, terms }
    }

    /// Reindex both polynomials over the union of their variables.
    pub fn align(a: &LaurentPoly, b: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
        if a.vars == b.vars {
            return (a.clone(), b.clone());
        }
        let mut vars: Vec<String> = a.vars.iter().chain(b.vars.iter()).cloned().collect();
        vars.sort();
        vars.dedup();
        (a.embed(&vars), b.embed(&vars))
    }

    /// Reindex over a superset of the variables.
    pub fn embed(&self, vars: &[String]) -> LaurentPoly {
        if self.vars == vars {
            return self.clone();
        }
        let pos: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                vars.iter()
                    .position(|w| w == v)
                    .expect("embed: missing variable")
            })
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0i64; vars.len()];
                for (i, &p) in pos.iter().enumerate() {
                    e[p] = m.0[i];
                }
                (Mono(e), c.clone())
            })
            .collect();
        LaurentPoly {
            vars: vars.to_vec(),
            terms,
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let (mut a, b) = Self::align(self, other);
        for (m, c) in b.terms {
            let entry = a.terms.entry(m).or_insert_with(BigRat::zero);
            *entry += c;
            if entry.is_zero() {
                // remove below
            }
        }
        a.terms.retain(|_, c| !c.is_zero());
        a
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let (a, b) = Self::align(self, other);
        let mut terms: BTreeMap<Mono, BigRat> = BTreeMap::new();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let m = ma.add(mb);
                let entry = terms.entry(m).or_insert_with(BigRat::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly {
            vars: a.vars,
            terms,
        }
    }

    pub fn scale(&self, c: &BigRat) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    /// Integer power; negative exponents require a monomial base.
    pub fn pow(&self, e: i64) -> LaurentPoly {
        if e == 0 {
            return LaurentPoly::one();
        }
        let base = if e < 0 {
            self.inv_monomial()
                .expect("negative power of a non-monomial Laurent polynomial")
        } else {
            self.clone()
        };
        let mut result = LaurentPoly::one();
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&sq);
            }
            k >>= 1;
            if k > 0 {
                sq = sq.mul(&sq);
            }
        }
        result
    }

    /// Inverse of a Laurent unit (single term), if it is one.
    pub fn inv_monomial(&self) -> Option<LaurentPoly> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        let mut terms = BTreeMap::new();
        terms.insert(Mono(m.0.iter().map(|e| -e).collect()), c.recip());
        Some(LaurentPoly {
            vars: self.vars.clone(),
            terms,
        })
    }

    /// Minimum exponent of `var` over all terms (0 if absent or zero poly).
    pub fn min_exp(&self, var: &str) -> i64 {
        match self.vars.iter().position(|v| v == var) {
            None => 0,
            Some(i) => self.terms.keys().map(|m| m.0[i]).min().unwrap_or(0),
        }
    }

    /// Maximum exponent of `var` over all terms.
    pub fn max_exp(&self, var: &str) -> i64 {
        match self.vars.iter().position(|v| v == var) {
            None => 0,
            Some(i) => self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0),
        }
    }

    /// Multiply by var^e.
    pub fn shift_var(&self, var: &str, e: i64) -> LaurentPoly {
        self.mul(&LaurentPoly::var_pow(var, e))
    }

    /// Collect as a univariate polynomial in `var` with Laurent coefficients
    /// in the remaining variables. Pairs are sorted by exponent.
    pub fn as_univariate(&self, var: &str) -> Vec<(i64, LaurentPoly)> {
        let Some(i) = self.vars.iter().position(|v| v == var) else {
            if self.is_zero() {
                return vec![];
            }
            return vec![(0, self.clone())];
        };
        let rest: Vec<String> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, v)| v.clone())
            .collect();
        let mut by_exp: BTreeMap<i64, BTreeMap<Mono, BigRat>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[i];
            let mm = Mono(
                m.0.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .map(|(_, &x)| x)
                    .collect(),
            );
            by_exp.entry(e).or_default().insert(mm, c.clone());
        }
        by_exp.into_iter()
            .map(|(e, terms)| {
                (
                    e,
                    LaurentPoly {
                        vars: rest.clone(),
                        terms,
                    },
                )
            })
            .collect()
    }

    /// Substitute a polynomial for one variable (nonnegative exponents of
    /// that variable only).
    pub fn subst_var(&self, var: &str, value: &LaurentPoly) -> LaurentPoly {
        if !self.vars.iter().any(|v| v == var) {
            return self.clone();
        }
        let uni = self.as_univariate(var);
        let mut acc = LaurentPoly::zero();
        for (e, coeff) in uni {
            let pw = if e >= 0 {
                value.pow(e)
            } else {
                value
                    .inv_monomial()
                    .expect("subst_var: negative exponent needs monomial value")
                    .pow(-e)
            };
            acc = acc.add(&coeff.mul(&pw));
        }
        acc.prune_vars()
    }

    /// Exact rational evaluation. Every variable must be bound; negative
    /// exponents at zero are poles.
    pub fn eval(&self, bindings: &BTreeMap<String, BigRat>) -> crate::Result<BigRat> {
        for v in &self.vars {
            if !bindings.contains_key(v) {
                return Err(crate::Error::UnboundVariable(v.clone()));
            }
        }
        let vals: Vec<&BigRat> = self.vars.iter().map(|v| &bindings[v]).collect();
        let mut total = BigRat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if vals[i].is_zero() && e < 0 {
                    return Err(crate::Error::Pole {
                        den: format!("{}^{}", self.vars[i], e),
                    });
                }
                let mut base = vals[i].clone();
                if e < 0 {
                    base = base.recip();
                }
                let mut pw = BigRat::one();
                for _ in 0..e.unsigned_abs() {
                    pw *= &base;
                }
                t *= pw;
            }
            total += t;
        }
        Ok(total)
    }

    /// Quotient if `other` divides exactly, else None. Both operands may be
    /// Laurent; the quotient is Laurent.
    pub fn div_exact(&self, other: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!other.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let (a, b) = Self::align(self, other);
        // clear Laurent shifts
        let vars = a.vars.clone();
        let shift_a: Vec<i64> = vars.iter().map(|v| a.min_exp(v)).collect();
        let shift_b: Vec<i64> = vars.iter().map(|v| b.min_exp(v)).collect();
        let mut an = a;
        let mut bn = b;
        for (i, v) in vars.iter().enumerate() {
            if shift_a[i] != 0 {
                an = an.shift_var(v, -shift_a[i]);
            }
            if shift_b[i] != 0 {
                bn = bn.shift_var(v, -shift_b[i]);
            }
        }
        let q = poly_div_exact(&an, &bn)?;
        let mut result = q;
        for (i, v) in vars.iter().enumerate() {
            let d = shift_a[i] - shift_b[i];
            if d != 0 {
                result = result.shift_var(v, d);
            }
        }
        Some(result)
    }

    /// Greatest common divisor, normalized with leading coefficient 1.
    /// Laurent content is cleared first, so the result is an ordinary
    /// polynomial determined up to the monomial ambiguity of Laurent gcds.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        super::gcd::gcd(self, other)
    }
}

/// Long division of ordinary (nonnegative-exponent) polynomials, exact only.
fn poly_div_exact(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    let mut rem = a.clone();
    let mut quo = LaurentPoly {
        vars: a.vars.clone(),
        terms: BTreeMap::new(),
    };
    let (lb, cb) = b.leading()?;
    let lb = lb.clone();
    let cb = cb.clone();
    while !rem.is_zero() {
        let (lr, cr) = rem.leading().unwrap();
        let m = lr.sub(&lb);
        if m.0.iter().any(|&e| e < 0) {
            return None;
        }
        let c = cr / &cb;
        let term = LaurentPoly {
            vars: rem.vars.clone(),
            terms: {
                let mut t = BTreeMap::new();
                t.insert(m, c);
                t
            },
        };
        quo = quo.add(&term);
        rem = rem.sub(&term.mul(b));
    }
    Some(quo)
}

impl std::fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mono: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], e)
                    }
                })
                .collect();
            let mono = mono.join("*");
            let (sign, abs) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            if mono.is_empty() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", mono)?;
            } else {
                write!(f, "{}*{}", abs, mono)?;
            }
        }
        Ok(())
    }
}

/// Dispatch for the three binary polynomial operations.
pub fn poly_arith(a: &LaurentPoly, b: &LaurentPoly, op: PolyOp) -> LaurentPoly {
    match op {
        PolyOp::Add => a.add(b),
        PolyOp::Sub => a.sub(b),
        PolyOp::Mul => a.mul(b),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    fn u() -> LaurentPoly {
        LaurentPoly::var("u")
    }

    #[test]
    fn cancellation() {
        // (u + 1) + (u - 1) = 2u
        let a = u().add(&LaurentPoly::one());
        let b = u().sub(&LaurentPoly::one());
        assert_eq!(a.add(&b), u().scale(&rat(2)));
    }

    #[test]
    fn laurent_inverse_monomial() {
        let z = LaurentPoly::var("z1");
        let zi = z.inv_monomial().unwrap();
        assert!(z.mul(&zi).is_one());
    }

    #[test]
    fn difference_of_squares() {
        let one = LaurentPoly::one();
        let a = one.sub(&u());
        let b = one.add(&u());
        let expect = one.sub(&u().pow(2));
        assert_eq!(a.mul(&b), expect);
    }

    #[test]
    fn display_is_canonical() {
        let p = LaurentPoly::var("x1")
            .pow(2)
            .add(&LaurentPoly::var("x2").pow(2))
            .add(&LaurentPoly::var("x1").mul(&LaurentPoly::var("x2")).scale(&rat(-3)));
        assert_eq!(p.to_string(), "x1^2 - 3*x1*x2 + x2^2");
    }

    #[test]
    fn exact_division() {
        let one = LaurentPoly::one();
        let z1 = LaurentPoly::var("z1");
        let z2 = LaurentPoly::var("z2");
        let num = z1.pow(2).sub(&z2.pow(2));
        let den = z1.sub(&z2);
        assert_eq!(num.div_exact(&den).unwrap(), z1.add(&z2));
        assert!(one.sub(&u()).div_exact(&one.add(&u())).is_none());
    }

    #[test]
    fn eval_with_pole() {
        let p = LaurentPoly::var_pow("z1", -1);
        let mut b = BTreeMap::new();
        b.insert("z1".to_string(), rat(0));
        assert!(p.eval(&b).is_err());
        b.insert("z1".to_string(), ratio(1, 3));
        assert_eq!(p.eval(&b).unwrap(), rat(3));
    }

    use super::super::ratio;
}
