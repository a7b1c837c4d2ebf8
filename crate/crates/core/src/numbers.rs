//! Elementary number theory behind the discriminant criteria: trial-division
//! factorization, Legendre symbols, brute-force square tests and canonical
//! arithmetic in `Q/2Z`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{invalid, Result};

/// Prime factorization as `(prime, exponent)` pairs, ascending by prime.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization(Vec<(u64, u32)>);

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.0
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().map(|&(p, _)| p)
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.0
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    /// The integer this factorization represents.
    pub fn value(&self) -> u128 {
        self.0
            .iter()
            .map(|&(p, e)| (p as u128).pow(e))
            .product()
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        f.write_str(&parts.join(" * "))
    }
}

/// Factorization by trial division up to the square root.
pub fn factorize(n: i64) -> Result<Factorization> {
    if n <= 0 {
        return Err(invalid(format!("cannot factor {n}: need n >= 1")));
    }
    let mut n = n as u64;
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    Ok(Factorization(out))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut p = 3u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return false;
        }
        p += 2;
    }
    true
}

pub(crate) fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut acc = 1u128 % m128;
    let mut b = base as u128 % m128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// Legendre symbol `(a/p)` by Euler's criterion.
pub fn legendre(a: i64, p: i64) -> Result<i8> {
    if p < 3 || p % 2 == 0 || !is_prime(p as u64) {
        return Err(invalid(format!("legendre symbol needs an odd prime, got {p}")));
    }
    let r = a.rem_euclid(p) as u64;
    if r == 0 {
        return Ok(0);
    }
    let p = p as u64;
    Ok(if pow_mod(r, (p - 1) / 2, p) == 1 { 1 } else { -1 })
}

/// Whether `a` is a square modulo `m`, by scanning every residue `k` in `[0, m)`.
///
/// Zero counts as a square. The scan is deliberately exhaustive: it is the
/// reference the closed-form criteria are checked against.
pub fn is_square_mod(a: i64, m: i64) -> Result<bool> {
    if m <= 0 {
        return Err(invalid(format!("modulus must be positive, got {m}")));
    }
    Ok(square_root_mod(a, m).is_some())
}

/// Smallest `k` in `[0, m)` with `k^2 = a (mod m)`, by exhaustive scan.
pub fn square_root_mod(a: i64, m: i64) -> Option<i64> {
    if m <= 0 {
        return None;
    }
    let m = m as i128;
    let target = (a as i128).rem_euclid(m);
    (0..m).find(|k| k * k % m == target).map(|k| k as i64)
}

/// A rational number modulo `2Z`, kept in lowest terms with `0 <= num/den < 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QmodTwoZ {
    num: i64,
    den: i64,
}

impl QmodTwoZ {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(invalid("zero denominator in Q/2Z"));
        }
        Ok(Self::from_i128(num as i128, den as i128))
    }

    fn from_i128(num: i128, den: i128) -> Self {
        let (mut num, mut den) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = num.gcd(&den);
        num /= g;
        den /= g;
        let num = num.rem_euclid(2 * den);
        QmodTwoZ {
            num: num as i64,
            den: den as i64,
        }
    }

    pub fn zero() -> Self {
        QmodTwoZ { num: 0, den: 1 }
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    /// Canonical representative of a big rational; fails if the reduced
    /// denominator does not fit in 64 bits.
    pub fn from_rational(q: &BigRational) -> Result<Self> {
        let den = q.denom().clone();
        let two_den: BigInt = &den * 2;
        let num = q.numer().mod_floor(&two_den);
        match (num.to_i64(), den.to_i64()) {
            (Some(n), Some(d)) => Ok(Self::from_i128(n as i128, d as i128)),
            _ => Err(invalid(format!("{q} does not fit a 64-bit Q/2Z value"))),
        }
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(BigInt::from(self.num), BigInt::from(self.den))
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// Equality modulo `Z` rather than `2Z`.
    pub fn eq_mod_one(&self, other: &Self) -> bool {
        let diff = *self - *other;
        diff.num == 0 || (diff.den == 1 && diff.num == 1)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_i128(self.num as i128 * k as i128, self.den as i128)
    }
}

/// `num/den` reduced into `[0, 2)`.
pub fn qmod2z(num: i64, den: i64) -> Result<QmodTwoZ> {
    QmodTwoZ::new(num, den)
}

impl Add for QmodTwoZ {
    type Output = QmodTwoZ;
    fn add(self, rhs: Self) -> Self {
        let den = self.den as i128 * rhs.den as i128;
        let num = self.num as i128 * rhs.den as i128 + rhs.num as i128 * self.den as i128;
        Self::from_i128(num, den)
    }
}

impl Neg for QmodTwoZ {
    type Output = QmodTwoZ;
    fn neg(self) -> Self {
        Self::from_i128(-(self.num as i128), self.den as i128)
    }
}

impl Sub for QmodTwoZ {
    type Output = QmodTwoZ;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul<i64> for QmodTwoZ {
    type Output = QmodTwoZ;
    fn mul(self, k: i64) -> Self {
        self.scale(k)
    }
}

impl fmt::Display for QmodTwoZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

pub(crate) fn bigint_gcd_all<'a>(xs: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    let mut g = BigInt::zero();
    for x in xs {
        g = g.gcd(x);
    }
    g.abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).unwrap().pairs().is_empty());
        assert_eq!(factorize(24).unwrap().pairs(), &[(2, 3), (3, 1)]);
        assert_eq!(factorize(2312).unwrap().pairs(), &[(2, 3), (17, 2)]);
        assert_eq!(factorize(9_999_991).unwrap().pairs(), &[(9_999_991, 1)]);
        assert!(factorize(0).is_err());
        assert!(factorize(-6).is_err());
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(3, 11).unwrap(), 1);
        assert_eq!(legendre(2, 11).unwrap(), -1);
        assert_eq!(legendre(11, 11).unwrap(), 0);
        assert_eq!(legendre(-1, 7).unwrap(), -1);
        assert!(legendre(3, 2).is_err());
        assert!(legendre(3, 15).is_err());
    }

    #[test]
    fn square_mod_examples() {
        // 11^2 = 121 = 33 = -11 (mod 44)
        assert!(is_square_mod(-11, 44).unwrap());
        assert_eq!(square_root_mod(-11, 44), Some(11));
        assert!(is_square_mod(0, 97).unwrap());
        assert!(!is_square_mod(5, 8).unwrap());
        assert!(is_square_mod(3, 1).unwrap());
        assert!(is_square_mod(1, 0).is_err());
    }

    #[test]
    fn qmod2z_examples() {
        assert_eq!(qmod2z(25, 11).unwrap(), qmod2z(3, 11).unwrap());
        let q = qmod2z(-11, 24).unwrap();
        assert_eq!((q.numerator(), q.denominator()), (37, 24));
        let z = qmod2z(4, 2).unwrap();
        assert_eq!((z.numerator(), z.denominator()), (0, 1));
        assert_eq!(qmod2z(3, -11).unwrap(), qmod2z(19, 11).unwrap());
        assert!(qmod2z(1, 0).is_err());
    }

    #[test]
    fn legendre_agrees_with_scan_for_small_primes() {
        for p in (3..=1000i64).filter(|&p| is_prime(p as u64)) {
            for a in -3..p + 3 {
                let scan = is_square_mod(a, p).unwrap() && a.rem_euclid(p) != 0;
                assert_eq!(legendre(a, p).unwrap() == 1, scan, "a={a} p={p}");
            }
        }
    }

    #[test]
    fn reciprocity_for_minus_eleven() {
        for p in (3..2000i64).filter(|&p| is_prime(p as u64) && p != 11) {
            assert_eq!(legendre(-11, p).unwrap(), legendre(p, 11).unwrap(), "p={p}");
        }
    }

    proptest! {
        #[test]
        fn qmod2z_is_additive(a in -10_000i64..10_000, b in 1i64..500,
                              c in -10_000i64..10_000, d in 1i64..500) {
            let lhs = qmod2z(a, b).unwrap() + qmod2z(c, d).unwrap();
            let rhs = qmod2z(a * d + c * b, b * d).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert!(lhs.numerator() >= 0 && lhs.numerator() < 2 * lhs.denominator());
        }

        #[test]
        fn factorization_multiplies_back(n in 1i64..5_000_000) {
            let f = factorize(n).unwrap();
            prop_assert_eq!(f.value(), n as u128);
            for p in f.primes() {
                prop_assert!(is_prime(p));
            }
        }
    }
}
