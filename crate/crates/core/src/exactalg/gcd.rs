//! Multivariate polynomial gcd over Q via primitive pseudo-remainder
//! sequences.
//!
//! Laurent inputs are cleared to ordinary polynomials by the minimal
//! monomial shift first; the returned gcd is an ordinary polynomial with
//! leading coefficient 1, which is all the rational-function normalization
//! needs.

use super::poly::LaurentPoly;
use super::BigRat;
use num::One;

/// gcd of two Laurent polynomials, leading coefficient normalized to 1.
pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return monic(&clear_laurent(b));
    }
    if b.is_zero() {
        return monic(&clear_laurent(a));
    }
    let (a, b) = LaurentPoly::align(a, b);
    let a = clear_laurent(&a).prune_vars();
    let b = clear_laurent(&b).prune_vars();
    let (a, b) = LaurentPoly::align(&a, &b);
    monic(&gcd_ordinary(&a, &b))
}

/// Shift away negative exponents (minimal monomial multiple).
fn clear_laurent(p: &LaurentPoly) -> LaurentPoly {
    let mut q = p.clone();
    for v in p.vars().to_vec() {
        let m = q.min_exp(&v);
        if m < 0 {
            q = q.shift_var(&v, -m);
        }
    }
    q
}

fn monic(p: &LaurentPoly) -> LaurentPoly {
    match p.leading() {
        None => LaurentPoly::one(),
        Some((_, c)) => {
            if c.is_one() {
                p.clone()
            } else {
                p.scale(&c.recip())
            }
        }
    }
}

/// Divide out the per-variable monomial content (min exponents).
fn monomial_content_split(p: &LaurentPoly) -> (Vec<i64>, LaurentPoly) {
    let shifts: Vec<i64> = p.vars().iter().map(|v| p.min_exp(v)).collect();
    let mut q = p.clone();
    for (i, v) in p.vars().to_vec().iter().enumerate() {
        if shifts[i] != 0 {
            q = q.shift_var(v, -shifts[i]);
        }
    }
    (shifts, q)
}

fn gcd_ordinary(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    debug_assert_eq!(a.vars(), b.vars());
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let (sa, pa) = monomial_content_split(a);
    let (sb, pb) = monomial_content_split(b);
    let common: Vec<i64> = sa.iter().zip(&sb).map(|(x, y)| *x.min(y)).collect();
    let mut mono = LaurentPoly::one();
    for (i, v) in a.vars().iter().enumerate() {
        if common[i] != 0 {
            mono = mono.mul(&LaurentPoly::var_pow(v, common[i]));
        }
    }
    if pa.is_constant() || pb.is_constant() {
        return mono;
    }
    // main variable: a live variable minimizing the larger degree
    let vars = pa.vars().to_vec();
    let mut best: Option<(String, i64)> = None;
    for v in &vars {
        let da = pa.max_exp(v);
        let db = pb.max_exp(v);
        if da > 0 && db > 0 {
            let key = da.max(db);
            if best.as_ref().map(|(_, k)| key < *k).unwrap_or(true) {
                best = Some((v.clone(), key));
            }
        }
    }
    let Some((x, _)) = best else {
        // no shared variable of positive degree: coprime up to content
        return mono;
    };
    let g = gcd_univariate_over_ring(&pa, &pb, &x);
    mono.mul(&g)
}

/// gcd of the coefficient list of p as a polynomial in x (recursive).
fn content_in(p: &LaurentPoly, x: &str) -> LaurentPoly {
    let coeffs = p.as_univariate(x);
    let mut g = LaurentPoly::zero();
    for (_, c) in &coeffs {
        g = if g.is_zero() {
            clear_laurent(c)
        } else {
            gcd_ordinary(&LaurentPoly::align(&g, c).0, &LaurentPoly::align(&g, c).1)
        };
        if g.is_constant() && !g.is_zero() {
            return LaurentPoly::one().embed(&v_names(p, x));
        }
    }
    if g.is_zero() {
        LaurentPoly::one().embed(&v_names(p, x))
    } else {
        g.embed(&v_names(p, x))
    }
}

fn v_names(p: &LaurentPoly, x: &str) -> Vec<String> {
    p.vars().iter().filter(|v| v.as_str() != x).cloned().collect()
}

/// Primitive PRS in x with coefficients in the remaining variables.
fn gcd_univariate_over_ring(a: &LaurentPoly, b: &LaurentPoly, x: &str) -> LaurentPoly {
    let ca = content_in(a, x);
    let cb = content_in(b, x);
    let cg = gcd_ordinary(&LaurentPoly::align(&ca, &cb).0, &LaurentPoly::align(&ca, &cb).1);
    let pa = a
        .div_exact(&ca)
        .expect("content must divide");
    let pb = b
        .div_exact(&cb)
        .expect("content must divide");

    let (mut f, mut g) = if pa.max_exp(x) >= pb.max_exp(x) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    while !g.is_zero() {
        let Some(r) = pseudo_rem(&f, &g, x) else {
            break; // deg f < deg g cannot happen; defensive
        };
        if r.is_zero() {
            f = g;
            break;
        }
        // primitive part to tame growth
        let cr = content_in(&r, x);
        let rp = r.div_exact(&cr).expect("content must divide");
        f = g;
        g = rp;
        if g.max_exp(x) == 0 {
            // nonzero constant in x: primitive parts are coprime
            f = LaurentPoly::one();
            break;
        }
    }
    let pp = if f.max_exp(x) == 0 {
        LaurentPoly::one()
    } else {
        let cf = content_in(&f, x);
        f.div_exact(&cf).expect("content must divide")
    };
    let (g1, g2) = LaurentPoly::align(&cg, &pp);
    g1.mul(&g2)
}

/// lc(g)^(deg f - deg g + 1) * f = q*g + r; returns r.
fn pseudo_rem(f: &LaurentPoly, g: &LaurentPoly, x: &str) -> Option<LaurentPoly> {
    let df = f.max_exp(x);
    let dg = g.max_exp(x);
    if df < dg {
        return None;
    }
    let g_uni = g.as_univariate(x);
    let lc_g = g_uni
        .iter()
        .rev()
        .find(|(e, _)| *e == dg)
        .map(|(_, c)| c.clone())
        .unwrap();
    let full_vars = f.vars().to_vec();
    let lc_g = lc_g.embed(&full_vars_excl(&full_vars, x)).embed(&full_vars);
    let g_al = g.clone();
    let mut r = f.clone();
    let mut steps = df - dg + 1;
    while !r.is_zero() && r.max_exp(x) >= dg {
        let dr = r.max_exp(x);
        let r_uni = r.as_univariate(x);
        let lc_r = r_uni
            .iter()
            .rev()
            .find(|(e, _)| *e == dr)
            .map(|(_, c)| c.clone())
            .unwrap()
            .embed(&full_vars_excl(&full_vars, x))
            .embed(&full_vars);
        // r <- lc_g * r - lc_r * x^(dr-dg) * g
        let shift = LaurentPoly::var_pow(x, dr - dg).embed(&full_vars);
        r = lc_g.mul(&r).sub(&lc_r.mul(&shift).mul(&g_al));
        steps -= 1;
    }
    // pad remaining lc_g powers so the result is the true pseudo-remainder
    let mut out = r;
    while steps > 0 {
        out = out.mul(&lc_g);
        steps -= 1;
    }
    Some(out)
}

fn full_vars_excl(vars: &[String], x: &str) -> Vec<String> {
    vars.iter().filter(|v| v.as_str() != x).cloned().collect()
}

#[allow(dead_code)]
fn is_one_rat(c: &BigRat) -> bool {
    c.is_one()
}
