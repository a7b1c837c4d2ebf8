use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::field::Rationals;
use super::monomial::Monomial;
use super::multipoly::MultiPoly;

type QPoly = MultiPoly<Rationals>;

/// Scale to integer coefficients with content 1 and a positive leading coefficient.
pub fn normalize_primitive(p: &QPoly) -> QPoly {
    if p.is_zero() {
        return p.clone();
    }
    let mut lcm_den = BigInt::one();
    for (_, c) in p.terms() {
        lcm_den = lcm_den.lcm(c.denom());
    }
    let mut g = BigInt::zero();
    for (_, c) in p.terms() {
        let n: BigInt = c.numer() * (&lcm_den / c.denom());
        g = g.gcd(&n);
    }
    let mut scale = BigRational::new(lcm_den, g);
    if p.leading_coeff().unwrap().is_negative() {
        scale = -scale;
    }
    p.scale(&scale)
}

/// A greatest common divisor over the rationals, in [`normalize_primitive`] form.
/// `gcd(p, 0)` is the normalized `p`.
pub fn gcd(p: &QPoly, q: &QPoly) -> Result<QPoly> {
    if p.nvars() != q.nvars() {
        return Err(Error::RingMismatch(format!(
            "{} vs {} variables",
            p.nvars(),
            q.nvars()
        )));
    }
    Ok(normalize_primitive(&gcd_rec(p, q)))
}

/// GCD of a list; zero entries are skipped.
pub fn gcd_all<'a>(polys: impl IntoIterator<Item = &'a QPoly>) -> Result<Option<QPoly>> {
    let mut acc: Option<QPoly> = None;
    for p in polys {
        if p.is_zero() {
            continue;
        }
        acc = Some(match acc {
            None => normalize_primitive(p),
            Some(g) => gcd(&g, p)?,
        });
        if acc.as_ref().is_some_and(|g| g.is_constant()) {
            break;
        }
    }
    Ok(acc)
}

fn gcd_rec(p: &QPoly, q: &QPoly) -> QPoly {
    let n = p.nvars();
    if p.is_zero() {
        return q.clone();
    }
    if q.is_zero() {
        return p.clone();
    }
    let one = QPoly::one(Rationals, n);
    if p.is_constant() || q.is_constant() {
        return one;
    }
    if p.div_exact(q).is_some() {
        return q.clone();
    }
    if q.div_exact(p).is_some() {
        return p.clone();
    }
    let counts: Vec<usize> = p
        .variable_occurrences()
        .iter()
        .zip(q.variable_occurrences())
        .map(|(a, b)| a + b)
        .collect();
    let v = (0..n).max_by_key(|&i| (counts[i], std::cmp::Reverse(i))).unwrap();

    let cp = content_in(p, v);
    let cq = content_in(q, v);
    let g_content = gcd_rec(&cp, &cq);
    let pp = p.div_exact(&cp).expect("content divides");
    let qq = q.div_exact(&cq).expect("content divides");
    if pp.degree_in(v) == 0 || qq.degree_in(v) == 0 {
        return g_content;
    }
    let prs = subresultant_last(&pp, &qq, v);
    let g_prim = if prs.degree_in(v) == 0 {
        one
    } else {
        let c = content_in(&prs, v);
        prs.div_exact(&c).expect("content divides")
    };
    normalize_primitive(&(&g_content * &g_prim))
}

/// GCD of the coefficients of `p` viewed as a polynomial in `var`.
fn content_in(p: &QPoly, var: usize) -> QPoly {
    let mut coeffs: Vec<QPoly> = p.coefficients_in(var).into_iter().filter(|c| !c.is_zero()).collect();
    coeffs.sort_by_key(|c| c.num_terms());
    let mut g = coeffs[0].clone();
    for c in &coeffs[1..] {
        if g.is_constant() {
            break;
        }
        g = gcd_rec(&g, c);
    }
    if g.is_constant() {
        QPoly::one(Rationals, p.nvars())
    } else {
        normalize_primitive(&g)
    }
}

fn leading_coeff_in(p: &QPoly, var: usize) -> QPoly {
    p.coefficients_in(var).pop().unwrap()
}

fn var_power(n: usize, var: usize, k: u16) -> Monomial {
    Monomial::one(n).with_exp(var, k)
}

/// Pseudo-remainder of `a` by `b` with respect to `var`.
fn pseudo_remainder(a: &QPoly, b: &QPoly, var: usize) -> QPoly {
    let n = a.nvars();
    let db = b.degree_in(var);
    let lb = leading_coeff_in(b, var);
    let mut r = a.clone();
    let mut e = a.degree_in(var) as i32 - db as i32 + 1;
    while !r.is_zero() && r.degree_in(var) >= db {
        let dr = r.degree_in(var);
        let lr = leading_coeff_in(&r, var);
        let shift = QPoly::from_sorted_unchecked(
            Rationals,
            n,
            vec![(var_power(n, var, dr - db), BigRational::one())],
        );
        r = &(&lb * &r) - &(&(&lr * &shift) * b);
        e -= 1;
    }
    if e > 0 {
        r = &lb.pow(e as u32) * &r;
    }
    r
}

/// Last nonzero element of the subresultant remainder sequence in `var`.
fn subresultant_last(p: &QPoly, q: &QPoly, var: usize) -> QPoly {
    let n = p.nvars();
    let (mut a, mut b) = if p.degree_in(var) >= q.degree_in(var) {
        (p.clone(), q.clone())
    } else {
        (q.clone(), p.clone())
    };
    let mut g = QPoly::one(Rationals, n);
    let mut h = QPoly::one(Rationals, n);
    loop {
        let delta = (a.degree_in(var) - b.degree_in(var)) as u32;
        let r = pseudo_remainder(&a, &b, var);
        if r.is_zero() {
            return b;
        }
        if r.degree_in(var) == 0 {
            return QPoly::one(Rationals, n);
        }
        let divisor = &g * &h.pow(delta);
        a = b;
        b = r.div_exact(&divisor).expect("subresultant division is exact");
        g = leading_coeff_in(&a, var);
        h = if delta == 0 {
            h
        } else {
            g.pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant division is exact")
        };
    }
}
