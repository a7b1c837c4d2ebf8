use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

use super::field::{Field, Ring};
use super::monomial::Monomial;

/// Sparse multivariate polynomial over a field, terms kept in strictly
/// descending grevlex order with no zero coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiPoly<F: Field> {
    field: F,
    nvars: usize,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(field: F, nvars: usize) -> Self {
        MultiPoly {
            field,
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(field: F, nvars: usize, c: F::Elem) -> Self {
        let mut p = Self::zero(field, nvars);
        if !p.field.is_zero(&c) {
            p.terms.push((Monomial::one(nvars), c));
        }
        p
    }

    pub fn one(field: F, nvars: usize) -> Self {
        let one = field.one();
        Self::constant(field, nvars, one)
    }

    /// The variable `x_i` (0-based).
    pub fn var(field: F, nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        let one = field.one();
        MultiPoly {
            field,
            nvars,
            terms: vec![(Monomial::var(nvars, i), one)],
        }
    }

    pub fn from_terms(
        field: F,
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, F::Elem)>,
    ) -> Self {
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity mismatch");
            match acc.get_mut(&m) {
                Some(e) => *e = field.add(e, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(field, nvars, acc)
    }

    /// Build from `(coefficient, exponents)` pairs with integer coefficients.
    pub fn from_int_terms(field: F, nvars: usize, terms: &[(i64, &[u16])]) -> Self {
        let it: Vec<_> = terms
            .iter()
            .map(|(c, e)| (Monomial::new(e), field.from_i64(*c)))
            .collect();
        Self::from_terms(field, nvars, it)
    }

    fn from_map(field: F, nvars: usize, acc: HashMap<Monomial, F::Elem>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        MultiPoly {
            field,
            nvars,
            terms,
        }
    }

    pub(crate) fn from_sorted_unchecked(field: F, nvars: usize, terms: Vec<(Monomial, F::Elem)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        MultiPoly {
            field,
            nvars,
            terms,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_term(&self) -> Option<&(Monomial, F::Elem)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&F::Elem> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.exp(var)).max().unwrap_or(0)
    }

    pub fn coeff(&self, m: &Monomial) -> F::Elem {
        self.terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| self.field.zero())
    }

    fn check_same_ring(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::RingMismatch(format!(
                "{} vs {} variables",
                self.nvars, other.nvars
            )));
        }
        if self.field != other.field {
            return Err(Error::RingMismatch(format!(
                "{:?} vs {:?}",
                self.field, other.field
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let f = &self.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp(mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_other { f.neg(cb) } else { cb.clone() };
                    out.push((mb.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { f.sub(ca, cb) } else { f.add(ca, cb) };
                    if !f.is_zero(&c) {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        for (m, c) in &other.terms[j..] {
            let c = if negate_other { f.neg(c) } else { c.clone() };
            out.push((m.clone(), c));
        }
        Self::from_sorted_unchecked(self.field.clone(), self.nvars, out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.field.clone(), self.nvars));
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return Ok(self.mul_term(m, c));
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return Ok(other.mul_term(m, c));
        }
        let f = &self.field;
        let mut acc: HashMap<Monomial, F::Elem> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = f.mul(ca, cb);
                match acc.get_mut(&m) {
                    Some(e) => *e = f.add(e, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(Self::from_map(self.field.clone(), self.nvars, acc))
    }

    /// `c * m * self`; the term order is preserved, so no re-sorting is needed.
    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Self {
        let f = &self.field;
        if f.is_zero(c) {
            return Self::zero(f.clone(), self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(t, a)| (t.mul(m), f.mul(a, c)))
            .filter(|(_, a)| !f.is_zero(a))
            .collect();
        Self::from_sorted_unchecked(f.clone(), self.nvars, terms)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        self.mul_term(&Monomial::one(self.nvars), c)
    }

    /// `self - c * m * other`, computed by a single merge.
    pub(crate) fn sub_scaled_term(&self, c: &F::Elem, m: &Monomial, other: &Self) -> Self {
        let f = &self.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let shifted = |k: usize| {
            let (t, a) = &other.terms[k];
            (t.mul(m), f.mul(a, c))
        };
        let mut next_other = if other.terms.is_empty() { None } else { Some(shifted(0)) };
        while let Some((mb, cb)) = next_other.take() {
            while i < self.terms.len() && self.terms[i].0 > mb {
                out.push(self.terms[i].clone());
                i += 1;
            }
            if i < self.terms.len() && self.terms[i].0 == mb {
                let v = f.sub(&self.terms[i].1, &cb);
                if !f.is_zero(&v) {
                    out.push((mb, v));
                }
                i += 1;
            } else {
                let v = f.neg(&cb);
                if !f.is_zero(&v) {
                    out.push((mb, v));
                }
            }
            j += 1;
            if j < other.terms.len() {
                next_other = Some(shifted(j));
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        Self::from_sorted_unchecked(f.clone(), self.nvars, out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.field.clone(), self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.field.inv(lc).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn evaluate(&self, point: &[F::Elem]) -> Result<F::Elem> {
        if point.len() != self.nvars {
            return Err(Error::Shape(format!(
                "point has {} coordinates, polynomial has {} variables",
                point.len(),
                self.nvars
            )));
        }
        let f = &self.field;
        let mut total = f.zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exps()) {
                for _ in 0..e {
                    v = f.mul(&v, x);
                }
            }
            total = f.add(&total, &v);
        }
        Ok(total)
    }

    /// Compose with the linear substitution `x_i -> sum_j a[i][j] * y_j`,
    /// where `a` has one row per variable of `self` and `m` columns.
    pub fn substitute_linear(&self, a: &[Vec<F::Elem>]) -> Result<Self> {
        if a.len() != self.nvars {
            return Err(Error::Shape(format!(
                "substitution has {} rows, polynomial has {} variables",
                a.len(),
                self.nvars
            )));
        }
        let m = a.first().map_or(0, |r| r.len());
        if a.iter().any(|r| r.len() != m) {
            return Err(Error::Shape("ragged substitution matrix".into()));
        }
        if m == 0 {
            return Err(Error::Shape("substitution into zero variables".into()));
        }
        let f = &self.field;
        let images: Vec<MultiPoly<F>> = a
            .iter()
            .map(|row| {
                MultiPoly::from_terms(
                    f.clone(),
                    m,
                    row.iter()
                        .enumerate()
                        .map(|(j, c)| (Monomial::var(m, j), c.clone())),
                )
            })
            .collect();
        // Cache powers of each image as they are needed.
        let mut powers: Vec<Vec<MultiPoly<F>>> = images
            .iter()
            .map(|p| vec![MultiPoly::one(f.clone(), m), p.clone()])
            .collect();
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
        for (mono, c) in &self.terms {
            let mut term = MultiPoly::constant(f.clone(), m, c.clone());
            for (i, &e) in mono.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e as usize];
            }
            for (t, v) in term.terms {
                match acc.get_mut(&t) {
                    Some(x) => *x = f.add(x, &v),
                    None => {
                        acc.insert(t, v);
                    }
                }
            }
        }
        Ok(Self::from_map(f.clone(), m, acc))
    }

    pub fn partial_derivative(&self, var: usize) -> Self {
        let f = &self.field;
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(var) > 0)
            .map(|(m, c)| {
                let e = m.exp(var);
                (m.with_exp(var, e - 1), f.mul(c, &f.from_i64(e as i64)))
            })
            .filter(|(_, c)| !f.is_zero(c));
        Self::from_terms(f.clone(), self.nvars, terms.collect::<Vec<_>>())
    }

    /// Apply a coefficient map into another field; `None` if any coefficient has no image.
    pub fn map_coeffs<G: Field>(
        &self,
        target: G,
        map: impl Fn(&F::Elem) -> Option<G::Elem>,
    ) -> Option<MultiPoly<G>> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let v = map(c)?;
            if !target.is_zero(&v) {
                terms.push((m.clone(), v));
            }
        }
        Some(MultiPoly::from_sorted_unchecked(target, self.nvars, terms))
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if self.check_same_ring(d).is_err() {
            return None;
        }
        let (lm, lc) = d.leading_term()?;
        let f = &self.field;
        let lc_inv = f.inv(lc)?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading_term() {
            if !lm.divides(m) {
                return None;
            }
            let qm = m.div(lm);
            let qc = f.mul(c, &lc_inv);
            rem = rem.sub_scaled_term(&qc, &qm, d);
            quot.push((qm, qc));
        }
        Some(Self::from_sorted_unchecked(f.clone(), self.nvars, quot))
    }

    /// Coefficients with respect to `var`: entry `k` is the coefficient of `var^k`
    /// (a polynomial not involving `var`).
    pub fn coefficients_in(&self, var: usize) -> Vec<Self> {
        let deg = self.degree_in(var) as usize;
        let mut buckets: Vec<Vec<(Monomial, F::Elem)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            buckets[m.exp(var) as usize].push((m.with_exp(var, 0), c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut ts| {
                ts.sort_by(|a, b| b.0.cmp(&a.0));
                Self::from_sorted_unchecked(self.field.clone(), self.nvars, ts)
            })
            .collect()
    }

    /// Inverse of [`coefficients_in`](Self::coefficients_in).
    pub fn from_coefficients_in(field: F, nvars: usize, var: usize, coeffs: &[Self]) -> Self {
        let mut terms = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, v) in &c.terms {
                terms.push((m.with_exp(var, k as u16), v.clone()));
            }
        }
        Self::from_terms(field, nvars, terms)
    }

    /// Number of terms in which each variable occurs.
    pub fn variable_occurrences(&self) -> Vec<usize> {
        let mut counts = vec![0; self.nvars];
        for (m, _) in &self.terms {
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    counts[i] += 1;
                }
            }
        }
        counts
    }
}

impl<F: Field> Add for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn add(self, rhs: Self) -> MultiPoly<F> {
        self.checked_add(rhs).expect("polynomial ring mismatch")
    }
}

impl<F: Field> Sub for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn sub(self, rhs: Self) -> MultiPoly<F> {
        self.checked_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl<F: Field> Mul for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn mul(self, rhs: Self) -> MultiPoly<F> {
        self.checked_mul(rhs).expect("polynomial ring mismatch")
    }
}

impl<F: Field> Neg for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn neg(self) -> MultiPoly<F> {
        let f = &self.field;
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), f.neg(c))).collect();
        MultiPoly::from_sorted_unchecked(f.clone(), self.nvars, terms)
    }
}

impl<F: Field> fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_poly(self, "x"))
    }
}

/// The ring `F[x_1, ..., x_n]` as a [`Ring`] context, for generic routines such as Pfaffians.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyRing<F: Field> {
    field: F,
    nvars: usize,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, nvars: usize) -> Self {
        PolyRing { field, nvars }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn var(&self, i: usize) -> MultiPoly<F> {
        MultiPoly::var(self.field.clone(), self.nvars, i)
    }

    pub fn constant(&self, c: F::Elem) -> MultiPoly<F> {
        MultiPoly::constant(self.field.clone(), self.nvars, c)
    }
}

impl<F: Field> Ring for PolyRing<F> {
    type Elem = MultiPoly<F>;

    fn zero(&self) -> MultiPoly<F> {
        MultiPoly::zero(self.field.clone(), self.nvars)
    }
    fn one(&self) -> MultiPoly<F> {
        MultiPoly::one(self.field.clone(), self.nvars)
    }
    fn is_zero(&self, a: &MultiPoly<F>) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &MultiPoly<F>, b: &MultiPoly<F>) -> MultiPoly<F> {
        a + b
    }
    fn sub(&self, a: &MultiPoly<F>, b: &MultiPoly<F>) -> MultiPoly<F> {
        a - b
    }
    fn neg(&self, a: &MultiPoly<F>) -> MultiPoly<F> {
        -a
    }
    fn mul(&self, a: &MultiPoly<F>, b: &MultiPoly<F>) -> MultiPoly<F> {
        a * b
    }
}
