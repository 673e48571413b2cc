//! Unramified characters on the symplectic locus.
//!
//! A character on the 2k-dimensional torus satisfying the locus constraint
//! s_{n-i+1} = -s_i is stored on k coordinates as invertible monomials
//! z_i = q^{-s_i}. The hyperoctahedral Weyl group acts by signed
//! permutation of the z_i, and all evaluations entering the value formulas
//! (chi(a_alpha), half powers on long roots, torus values, delta factors)
//! are integer monomials in u and the z_i.

use crate::exactalg::{LaurentPoly, RatFunc};
use crate::weylroots::{GLRoot, SpRoot, WeylSp};
use crate::{Error, Result};
use num::{One, Zero};

/// Weakly decreasing integer vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition);
        }
        Ok(Partition { parts })
    }

    pub fn zero(k: usize) -> Self {
        Partition {
            parts: vec![0; k],
        }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// lambda in Z^k_+ : all parts nonnegative.
    pub fn is_nonneg(&self) -> bool {
        self.parts.iter().all(|&p| p >= 0)
    }

    /// lambda in 2Z^k : all parts even.
    pub fn is_even(&self) -> bool {
        self.parts.iter().all(|&p| p % 2 == 0)
    }

    /// |lambda| = sum of parts.
    pub fn norm(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// Extend with zeros to length k.
    pub fn padded(&self, k: usize) -> Partition {
        assert!(k >= self.parts.len());
        let mut parts = self.parts.clone();
        parts.resize(k, 0);
        assert!(parts.windows(2).all(|w| w[0] >= w[1]), "negative tail");
        Partition { parts }
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({})",
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// Unramified character on the symplectic locus, as k invertible monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticChar {
    k: usize,
    z: Vec<LaurentPoly>,
}

impl SymplecticChar {
    /// Free symbols z1..zk.
    pub fn symbolic(k: usize) -> Self {
        SymplecticChar {
            k,
            z: (1..=k)
                .map(|i| LaurentPoly::var(&format!("z{}", i)))
                .collect(),
        }
    }

    /// Exact rational values (all nonzero).
    pub fn numeric(vals: Vec<crate::BigRat>) -> Result<Self> {
        if vals.iter().any(|v| v.is_zero()) {
            return Err(Error::Domain("character coordinates must be nonzero".into()));
        }
        Ok(SymplecticChar {
            k: vals.len(),
            z: vals.into_iter().map(LaurentPoly::constant).collect(),
        })
    }

    /// From explicit single-term monomials.
    pub fn from_monomials(z: Vec<LaurentPoly>) -> Result<Self> {
        if z.iter().any(|m| !m.is_monomial()) {
            return Err(Error::Domain(
                "character coordinates must be invertible monomials".into(),
            ));
        }
        Ok(SymplecticChar { k: z.len(), z })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        2 * self.k
    }

    pub fn z(&self, i: usize) -> &LaurentPoly {
        &self.z[i - 1]
    }

    pub fn coordinates(&self) -> &[LaurentPoly] {
        &self.z
    }

    /// All coordinates are rational constants.
    pub fn is_numeric(&self) -> bool {
        self.z.iter().all(|m| m.is_constant())
    }

    pub fn numeric_values(&self) -> Option<Vec<crate::BigRat>> {
        self.z.iter().map(|m| m.constant_value()).collect()
    }

    /// Coordinate-wise inverse character.
    pub fn inverse(&self) -> SymplecticChar {
        SymplecticChar {
            k: self.k,
            z: self
                .z
                .iter()
                .map(|m| m.inv_monomial().expect("coordinates are units"))
                .collect(),
        }
    }

    /// q^{-s_a} for a full-torus index 1 <= a <= 2k, through the locus
    /// constraint s_{n-a+1} = -s_a.
    fn q_pow_minus_s(&self, a: usize) -> LaurentPoly {
        let n = self.n();
        assert!(a >= 1 && a <= n);
        if a <= self.k {
            self.z[a - 1].clone()
        } else {
            self.z[n - a].inv_monomial().expect("unit")
        }
    }
}

/// chi(a_alpha) = q^{-2(s_i - s_j)} for the GL root alpha = (i,j), resolved
/// through the locus. Always a monomial.
pub fn eval_a(chi: &SymplecticChar, alpha: GLRoot) -> RatFunc {
    let hi = chi.q_pow_minus_s(alpha.i).pow(2);
    let hj = chi.q_pow_minus_s(alpha.j).pow(-2);
    RatFunc::from_poly(hi.mul(&hj))
}

/// chi^{1/2} or chi^{-1/2} at a long root 2e_i: z_i^{+-2}. Half powers are
/// defined only here; short roots have no canonical square root.
pub fn eval_half_long(chi: &SymplecticChar, alpha: SpRoot, sign: i64) -> Result<RatFunc> {
    assert!(sign == 1 || sign == -1);
    match alpha {
        SpRoot::Long { i } => Ok(RatFunc::from_poly(chi.z(i).pow(2 * sign))),
        _ => Err(Error::Domain(
            "half powers of the character exist only on long roots".into(),
        )),
    }
}

/// chi(s(t_lambda)) = prod z_i^{lambda_i}; defined only for even lambda
/// (t_lambda must lie in T_{n,*}).
pub fn eval_torus(chi: &SymplecticChar, lambda: &Partition) -> Result<RatFunc> {
    if !lambda.is_even() {
        return Err(Error::OddPartition);
    }
    let lam = lambda.padded(chi.k());
    let mut acc = LaurentPoly::one();
    for (i, &p) in lam.parts().iter().enumerate() {
        acc = acc.mul(&chi.z[i].pow(p));
    }
    Ok(RatFunc::from_poly(acc))
}

/// delta_{B_n}^{1/2}(t_lambda) = prod u^{2 lambda_i (n+1-2i)}.
pub fn delta_b_half(lambda: &Partition, n: usize) -> RatFunc {
    RatFunc::from_poly(delta_b_power(lambda, n, 2))
}

/// delta_{B_n}^{1/4}(t_lambda) = prod u^{lambda_i (n+1-2i)}.
pub fn delta_b_quarter(lambda: &Partition, n: usize) -> RatFunc {
    RatFunc::from_poly(delta_b_power(lambda, n, 1))
}

fn delta_b_power(lambda: &Partition, n: usize, scale: i64) -> LaurentPoly {
    let mut e = 0i64;
    for (i, &p) in lambda.parts().iter().enumerate() {
        let coord = i as i64 + 1;
        e += scale * p * (n as i64 + 1 - 2 * coord);
    }
    LaurentPoly::var_pow("u", e)
}

/// The Weyl action ^w chi: z'_b = z_{w^{-1}(b)}^{sign_{w^{-1}(b)}}.
pub fn weyl_act(w: &WeylSp, chi: &SymplecticChar) -> SymplecticChar {
    assert_eq!(w.k(), chi.k());
    let winv = w.inverse();
    let z = (1..=chi.k())
        .map(|b| {
            let a = winv.apply(b);
            let m = chi.z(a);
            if winv.sign_of(b) == 1 {
                // careful: sign is attached to the source index of w
                m.clone()
            } else {
                m.inv_monomial().expect("unit")
            }
        })
        .collect();
    SymplecticChar { k: chi.k, z }
}

/// The theta character: z_i = u^{n+1-2i} (s = (n-1, n-3, ..., 1-n)/4
/// restricted to the first k coordinates), n = 2k.
pub fn theta_char(k: usize) -> SymplecticChar {
    let n = 2 * k as i64;
    SymplecticChar {
        k,
        z: (1..=k as i64)
            .map(|i| LaurentPoly::var_pow("u", n + 1 - 2 * i))
            .collect(),
    }
}

/// Admissibility report for a numeric character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityReport {
    /// Locus-regularity: z_i^2 != z_j^{+-2} for all i < j.
    pub regular: bool,
    /// Conditions (1) and (2) of the uniqueness theorem hold.
    pub shalika_dim_le_1: bool,
    /// Matching of the uniqueness theorem, in coordinates mirrored through
    /// the antidiagonal embedding (the locus produces the identity).
    pub tau: Option<Vec<usize>>,
    /// chi(t_{i, pair(tau(i))}) = 1 for all i.
    pub necessary_condition: bool,
}

/// Decide the uniqueness-theorem predicates for a numeric character.
pub fn admissibility(chi: &SymplecticChar) -> Result<AdmissibilityReport> {
    let vals = chi.numeric_values().ok_or(Error::RequiresNumeric)?;
    let k = chi.k();
    let one = crate::BigRat::one();
    let sq = |r: &crate::BigRat| r * r;
    // locus regularity: z_i^2 != z_j^2 and (z_i z_j)^2 != 1 for i < j
    let mut regular = true;
    for i in 0..k {
        for j in (i + 1)..k {
            if sq(&vals[i]) == sq(&vals[j]) || sq(&(vals[i].clone() * &vals[j])) == one {
                regular = false;
            }
        }
    }
    // condition (1): (z_i z_j)^2 != 1 for i < j
    let mut cond1 = true;
    for i in 0..k {
        for j in (i + 1)..k {
            if sq(&(vals[i].clone() * &vals[j])) == one {
                cond1 = false;
            }
        }
    }
    // condition (2): a permutation tau with z_i^2 != z_j^2 whenever
    // j != tau(i) (mirrored labels)
    let mut tau: Option<Vec<usize>> = None;
    for cand in permutations(k) {
        let ok = (0..k).all(|i| {
            (0..k).all(|j| j == cand[i] - 1 || sq(&vals[i]) != sq(&vals[j]))
        });
        if ok {
            tau = Some(cand);
            break;
        }
    }
    let necessary = match &tau {
        None => false,
        Some(t) => (0..k).all(|i| sq(&vals[i]) == sq(&vals[t[i] - 1])),
    };
    Ok(AdmissibilityReport {
        regular,
        shalika_dim_le_1: cond1 && tau.is_some(),
        tau,
        necessary_condition: necessary,
    })
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    crate::weylroots::WeylGL::all(k)
        .into_iter()
        .map(|w| (1..=k).map(|i| w.apply(i)).collect())
        .collect()
}
