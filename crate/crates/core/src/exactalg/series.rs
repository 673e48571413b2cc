//! Truncated power series in one distinguished variable with Laurent
//! polynomial coefficients in the remaining variables.

use super::poly::LaurentPoly;
use super::ratfunc::RatFunc;
use crate::{Error, Result};

/// Power series in `var` kept modulo var^{cap+1}; coefficient i sits at
/// index i and never mentions `var`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    pub var: String,
    pub cap: usize,
    pub coeffs: Vec<LaurentPoly>,
}

impl TruncSeries {
    pub fn zero(var: &str, cap: usize) -> Self {
        TruncSeries {
            var: var.to_string(),
            cap,
            coeffs: vec![LaurentPoly::zero(); cap + 1],
        }
    }

    pub fn one(var: &str, cap: usize) -> Self {
        let mut s = Self::zero(var, cap);
        s.coeffs[0] = LaurentPoly::one();
        s
    }

    pub fn from_coeff(var: &str, cap: usize, deg: usize, c: LaurentPoly) -> Self {
        let mut s = Self::zero(var, cap);
        if deg <= cap {
            s.coeffs[deg] = c;
        }
        s
    }

    /// Truncate an ordinary polynomial in `var`.
    pub fn from_poly(p: &LaurentPoly, var: &str, cap: usize) -> Result<Self> {
        let mut s = Self::zero(var, cap);
        for (e, c) in p.as_univariate(var) {
            if e < 0 {
                return Err(Error::NotExpandable {
                    var: var.to_string(),
                });
            }
            if (e as usize) <= cap {
                s.coeffs[e as usize] = c;
            }
        }
        Ok(s)
    }

    pub fn coeff(&self, i: usize) -> &LaurentPoly {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &TruncSeries) -> TruncSeries {
        assert_eq!(self.var, other.var, "series variable mismatch");
        let cap = self.cap.min(other.cap);
        let coeffs = (0..=cap)
            .map(|i| self.coeffs[i].add(&other.coeffs[i]))
            .collect();
        TruncSeries {
            var: self.var.clone(),
            cap,
            coeffs,
        }
    }

    pub fn sub(&self, other: &TruncSeries) -> TruncSeries {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TruncSeries {
        TruncSeries {
            var: self.var.clone(),
            cap: self.cap,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        assert_eq!(self.var, other.var, "series variable mismatch");
        let cap = self.cap.min(other.cap);
        let mut coeffs = vec![LaurentPoly::zero(); cap + 1];
        for i in 0..=cap {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(cap - i) {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&self.coeffs[i].mul(&other.coeffs[j]));
            }
        }
        TruncSeries {
            var: self.var.clone(),
            cap,
            coeffs,
        }
    }

    /// First index on which two series differ, with the two coefficients.
    pub fn first_difference(&self, other: &TruncSeries) -> Option<(usize, LaurentPoly, LaurentPoly)> {
        let cap = self.cap.min(other.cap);
        (0..=cap)
            .find(|&i| self.coeffs[i] != other.coeffs[i])
            .map(|i| (i, self.coeffs[i].clone(), other.coeffs[i].clone()))
    }
}

impl std::fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            wrote = true;
            let xpow = match i {
                0 => String::new(),
                1 => format!("{}", self.var),
                _ => format!("{}^{}", self.var, i),
            };
            if i == 0 {
                write!(f, "{}", c)?;
            } else if c.is_one() {
                write!(f, "{}", xpow)?;
            } else if c.num_terms() == 1 {
                write!(f, "{}*{}", c, xpow)?;
            } else {
                write!(f, "({})*{}", c, xpow)?;
            }
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Expand a rational function as a power series in `var` about 0.
///
/// The denominator, viewed as a polynomial in `var`, must have an
/// invertible (single-term) constant coefficient, and neither part may
/// carry negative powers of `var`.
pub fn series_expand(f: &RatFunc, var: &str, cap: usize) -> Result<TruncSeries> {
    let num = f.num();
    let den = f.den();
    if num.min_exp(var) < 0 || den.min_exp(var) < 0 {
        return Err(Error::NotExpandable {
            var: var.to_string(),
        });
    }
    let den_uni = den.as_univariate(var);
    let c0 = den_uni
        .iter()
        .find(|(e, _)| *e == 0)
        .map(|(_, c)| c.clone())
        .unwrap_or_else(LaurentPoly::zero);
    let c0_inv = c0.inv_monomial().ok_or_else(|| Error::NotExpandable {
        var: var.to_string(),
    })?;
    // h = 1/den via h_m = -c0^{-1} * sum_{j>=1} d_j h_{m-j}
    let mut h = vec![LaurentPoly::zero(); cap + 1];
    h[0] = c0_inv.clone();
    let higher: Vec<(usize, LaurentPoly)> = den_uni
        .into_iter()
        .filter(|(e, _)| *e > 0)
        .map(|(e, c)| (e as usize, c))
        .collect();
    for m in 1..=cap {
        let mut acc = LaurentPoly::zero();
        for (j, dj) in &higher {
            if *j > m {
                break;
            }
            acc = acc.add(&dj.mul(&h[m - j]));
        }
        h[m] = c0_inv.neg().mul(&acc);
    }
    let inv = TruncSeries {
        var: var.to_string(),
        cap,
        coeffs: h,
    };
    let num_series = TruncSeries::from_poly(num, var, cap)?;
    Ok(num_series.mul(&inv))
}
