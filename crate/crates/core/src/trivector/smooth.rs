use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::numbers::bigint_gcd_all;
use crate::poly::groebner::{buchberger, leading_terms_cover_all_variables, normal_form};
use crate::poly::{Field, MultiPoly, PrimeField, Rationals};

/// Projective spaces with more points than this are not searched for a witness.
const WITNESS_POINT_LIMIT: u128 = 10_000_000;
const WITNESS_PRIME_LIMIT: u64 = 101;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SmoothVerdict {
    Smooth,
    /// A singular point over `F_p`, when the search was small enough to run and found one.
    Singular(Option<Vec<u64>>),
    BadPrime,
}

impl fmt::Display for SmoothVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SmoothVerdict::Smooth => f.write_str("Smooth"),
            SmoothVerdict::Singular(None) => f.write_str("Singular"),
            SmoothVerdict::Singular(Some(p)) => {
                let coords: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                write!(f, "Singular at [{}]", coords.join(":"))
            }
            SmoothVerdict::BadPrime => f.write_str("BadPrime"),
        }
    }
}

fn check_integral_primitive(cubic: &MultiPoly<Rationals>) -> Result<()> {
    if cubic.total_degree() != Some(3) || !cubic.is_homogeneous() {
        return Err(Error::InvalidInput("expected a homogeneous cubic".into()));
    }
    if !cubic.terms().iter().all(|(_, c)| c.is_integer()) {
        return Err(Error::InvalidInput("cubic has non-integer coefficients".into()));
    }
    let content = bigint_gcd_all(cubic.terms().iter().map(|(_, c)| c.numer()));
    if !content.is_one() {
        return Err(Error::InvalidInput("cubic is not primitive".into()));
    }
    Ok(())
}

/// Jacobian criterion over `F_p`: smooth iff the partial derivatives have only
/// the origin as common zero. Smoothness of the reduction implies smoothness
/// over the rationals.
pub fn smoothness_check(cubic: &MultiPoly<Rationals>, p: u64) -> Result<SmoothVerdict> {
    check_integral_primitive(cubic)?;
    if p == 2 || p == 3 {
        return Ok(SmoothVerdict::BadPrime);
    }
    let fp = PrimeField::new(p)?;
    let reduced = cubic
        .map_coeffs(fp, |c| fp.from_rational(c))
        .expect("integer coefficients reduce");
    if reduced.total_degree() != Some(3) {
        return Ok(SmoothVerdict::BadPrime);
    }
    let n = reduced.nvars();
    let partials: Vec<MultiPoly<PrimeField>> = (0..n).map(|i| reduced.partial_derivative(i)).collect();
    let gb = buchberger(&partials)?;
    // Euler: 3f = Σ x_i ∂_i f, so f lies in the ideal of its partials when p ≠ 3.
    if !normal_form(&reduced, &gb).is_zero() {
        return Err(Error::SelfCheck("cubic does not reduce to 0 modulo its partials".into()));
    }
    if leading_terms_cover_all_variables(&gb, n) {
        return Ok(SmoothVerdict::Smooth);
    }
    Ok(SmoothVerdict::Singular(find_singular_point(&partials, fp)))
}

fn find_singular_point(partials: &[MultiPoly<PrimeField>], fp: PrimeField) -> Option<Vec<u64>> {
    let p = fp.modulus();
    let n = partials.first()?.nvars();
    let points = ((p as u128).pow(n as u32) - 1) / (p as u128 - 1);
    if p > WITNESS_PRIME_LIMIT || points > WITNESS_POINT_LIMIT {
        return None;
    }
    // first nonzero coordinate normalized to 1
    for lead in 0..n {
        let mut pt = vec![0u64; n];
        pt[lead] = 1;
        loop {
            if partials.iter().all(|d| d.evaluate(&pt).unwrap() == 0) {
                return Some(pt);
            }
            let mut i = n;
            let mut wrapped = true;
            while i > lead + 1 {
                i -= 1;
                pt[i] += 1;
                if pt[i] < p {
                    wrapped = false;
                    break;
                }
                pt[i] = 0;
            }
            if wrapped {
                break;
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::text::parse_poly;

    fn q(s: &str) -> MultiPoly<Rationals> {
        parse_poly(Rationals, 6, s).unwrap()
    }

    #[test]
    fn fermat_and_cone() {
        let fermat = q("x1^3 + x2^3 + x3^3 + x4^3 + x5^3 + x6^3");
        assert_eq!(smoothness_check(&fermat, 10007).unwrap(), SmoothVerdict::Smooth);
        assert_eq!(smoothness_check(&q("x1^3"), 10007).unwrap(), SmoothVerdict::Singular(None));
        assert_eq!(smoothness_check(&fermat, 3).unwrap(), SmoothVerdict::BadPrime);
        assert!(smoothness_check(&fermat, 10005).is_err());
        assert!(smoothness_check(&q("2*x1^3 + 4*x2^3"), 10007).is_err());
        assert!(smoothness_check(&q("x1^2"), 10007).is_err());
    }

    #[test]
    fn witness_search_on_small_field() {
        let cone = parse_poly(Rationals, 3, "x1^3 + x2^3").unwrap();
        match smoothness_check(&cone, 5).unwrap() {
            SmoothVerdict::Singular(Some(pt)) => {
                let fp = PrimeField::new(5).unwrap();
                let reduced = cone.map_coeffs(fp, |c| fp.from_rational(c)).unwrap();
                for i in 0..3 {
                    assert_eq!(reduced.partial_derivative(i).evaluate(&pt).unwrap(), 0);
                }
                assert_eq!(pt, vec![0, 0, 1]);
            }
            other => panic!("expected a witness, got {other}"),
        }
    }
}
