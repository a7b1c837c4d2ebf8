//! Text form `c*x1^a1*...*xn^an` for polynomials. Variables are a letter prefix
//! followed by a 1-based index; any prefix is accepted on input.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};

use super::field::Field;
use super::monomial::Monomial;
use super::multipoly::MultiPoly;

/// Render with the given variable prefix (`"x"` gives `x1`, `x2`, ...).
pub fn format_poly<F: Field>(p: &MultiPoly<F>, prefix: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let field = p.field();
    let mut out = String::new();
    for (idx, (m, c)) in p.terms().iter().enumerate() {
        let mut coeff = field.format_elem(c);
        let negative = coeff.starts_with('-');
        if negative {
            coeff.remove(0);
        }
        if idx == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mono = format_monomial(m, prefix);
        if mono.is_empty() {
            out.push_str(&coeff);
        } else if coeff == "1" {
            out.push_str(&mono);
        } else {
            out.push_str(&coeff);
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

fn format_monomial(m: &Monomial, prefix: &str) -> String {
    let parts: Vec<String> = m
        .exps()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("{prefix}{}", i + 1)
            } else {
                format!("{prefix}{}^{e}", i + 1)
            }
        })
        .collect();
    parts.join("*")
}

/// Parse a polynomial in `nvars` variables. Whitespace is ignored.
pub fn parse_poly<F: Field>(field: F, nvars: usize, s: &str) -> Result<MultiPoly<F>> {
    let err = |msg: String| Error::Parse { line: 1, msg };
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err("empty polynomial".into()));
    }
    // Split into signed terms at top-level '+'/'-' (never inside a coefficient like 3/4).
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut negative = false;
    for (i, ch) in compact.chars().enumerate() {
        if (ch == '+' || ch == '-') && !(i > 0 && compact[..i].ends_with('^')) {
            if i > 0 {
                if cur.is_empty() {
                    return Err(err(format!("dangling sign at offset {i}")));
                }
                terms.push((negative, std::mem::take(&mut cur)));
            }
            negative = ch == '-';
        } else {
            cur.push(ch);
        }
    }
    if cur.is_empty() {
        return Err(err("trailing sign".into()));
    }
    terms.push((negative, cur));

    let mut parsed = Vec::with_capacity(terms.len());
    for (neg, t) in terms {
        let (coeff, mono) = parse_term(&t, nvars).map_err(err)?;
        let coeff = if neg { -coeff } else { coeff };
        let c = field
            .from_rational(&coeff)
            .ok_or_else(|| err(format!("coefficient {coeff} has no image in the field")))?;
        parsed.push((mono, c));
    }
    Ok(MultiPoly::from_terms(field, nvars, parsed))
}

fn parse_term(t: &str, nvars: usize) -> std::result::Result<(BigRational, Monomial), String> {
    let mut coeff = BigRational::one();
    let mut exps = vec![0u16; nvars];
    for factor in t.split('*') {
        if factor.is_empty() {
            return Err(format!("empty factor in term '{t}'"));
        }
        if factor.starts_with(|c: char| c.is_ascii_digit()) {
            coeff *= parse_rational(factor)?;
            continue;
        }
        let (var, exp) = match factor.split_once('^') {
            Some((v, e)) => (v, e.parse::<u16>().map_err(|_| format!("bad exponent in '{factor}'"))?),
            None => (factor, 1),
        };
        let digits_at = var
            .find(|c: char| c.is_ascii_digit())
            .ok_or_else(|| format!("variable '{var}' has no index"))?;
        if digits_at == 0 || !var[..digits_at].chars().all(|c| c.is_ascii_alphabetic() || c == '_') {
            return Err(format!("bad variable name '{var}'"));
        }
        let idx: usize = var[digits_at..]
            .parse()
            .map_err(|_| format!("bad variable index in '{var}'"))?;
        if idx == 0 || idx > nvars {
            return Err(format!("variable '{var}' out of range 1..={nvars}"));
        }
        exps[idx - 1] += exp;
    }
    Ok((coeff, Monomial::new(&exps)))
}

/// Parse `a` or `a/b` (optionally signed) as a rational.
pub fn parse_rational(s: &str) -> std::result::Result<BigRational, String> {
    let bad = || format!("bad number '{s}'");
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.parse().map_err(|_| bad())?;
            let b: BigInt = b.parse().map_err(|_| bad())?;
            if b == BigInt::from(0) {
                return Err(format!("zero denominator in '{s}'"));
            }
            Ok(BigRational::new(a, b))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}
