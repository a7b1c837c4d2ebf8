//! Alternating 3-forms on a 10-dimensional space and the geometry built on
//! them: contractions, Peskine quartics, flags, cubic extraction and
//! smoothness certificates.

mod aux;
mod flag;
mod peskine;
mod smooth;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::poly::text::parse_rational;
use crate::poly::{Field, MultiPoly, PrimeField, Rationals, Ring};

pub use aux::{line_in_peskine, x6_membership, x7_kernel, KernelDomain};
pub use flag::Flag;
pub use peskine::{
    extract_cubic, peskine_equations, rank_at_point, restrict_to_subspace, restricted_pfaffians,
    verify_flag, PeskineSystem,
};
pub use smooth::{smoothness_check, SmoothVerdict};

pub const DIM: usize = 10;

/// Sort a triple of indices; returns the permutation sign, or `None` on a repeated index.
pub fn normalize_triple(i: usize, j: usize, k: usize) -> Option<(bool, [usize; 3])> {
    if i == j || j == k || i == k {
        return None;
    }
    let mut t = [i, j, k];
    let mut negative = false;
    for a in 0..2 {
        for b in 0..2 - a {
            if t[b] > t[b + 1] {
                t.swap(b, b + 1);
                negative = !negative;
            }
        }
    }
    Some((negative, t))
}

/// `σ = Σ σ_ijk e_i ∧ e_j ∧ e_k`, stored once per sorted triple (0-based).
#[derive(Debug, Clone, PartialEq)]
pub struct Trivector<F: Field> {
    field: F,
    coeffs: BTreeMap<[usize; 3], F::Elem>,
}

impl<F: Field> Trivector<F> {
    pub fn zero(field: F) -> Self {
        Trivector {
            field,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// Add `c * e_i ∧ e_j ∧ e_k` (0-based, any order).
    pub fn add_term(&mut self, i: usize, j: usize, k: usize, c: F::Elem) -> Result<()> {
        if i >= DIM || j >= DIM || k >= DIM {
            return Err(Error::InvalidInput(format!("index out of range in ({i},{j},{k})")));
        }
        let Some((neg, t)) = normalize_triple(i, j, k) else {
            return Ok(());
        };
        let c = if neg { self.field.neg(&c) } else { c };
        let f = &self.field;
        let v = match self.coeffs.get(&t) {
            Some(old) => f.add(old, &c),
            None => c,
        };
        if f.is_zero(&v) {
            self.coeffs.remove(&t);
        } else {
            self.coeffs.insert(t, v);
        }
        Ok(())
    }

    /// `σ_ijk` with the alternating extension (0-based).
    pub fn get(&self, i: usize, j: usize, k: usize) -> F::Elem {
        match normalize_triple(i, j, k) {
            None => self.field.zero(),
            Some((neg, t)) => match self.coeffs.get(&t) {
                None => self.field.zero(),
                Some(c) if neg => self.field.neg(c),
                Some(c) => c.clone(),
            },
        }
    }

    /// Stored terms on sorted triples.
    pub fn terms(&self) -> impl Iterator<Item = ([usize; 3], &F::Elem)> {
        self.coeffs.iter().map(|(t, c)| (*t, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check_len(v: &[F::Elem]) -> Result<()> {
        if v.len() != DIM {
            return Err(Error::Shape(format!("vector of length {}, expected {DIM}", v.len())));
        }
        Ok(())
    }

    /// The trilinear form `σ(u, v, w)`.
    pub fn eval(&self, u: &[F::Elem], v: &[F::Elem], w: &[F::Elem]) -> Result<F::Elem> {
        Self::check_len(u)?;
        Self::check_len(v)?;
        Self::check_len(w)?;
        let f = &self.field;
        let mut acc = f.zero();
        for ([a, b, c], s) in &self.coeffs {
            let det3 = {
                let m = |x: &F::Elem, y: &F::Elem| f.mul(x, y);
                let t1 = m(&u[*a], &f.sub(&m(&v[*b], &w[*c]), &m(&v[*c], &w[*b])));
                let t2 = m(&u[*b], &f.sub(&m(&v[*a], &w[*c]), &m(&v[*c], &w[*a])));
                let t3 = m(&u[*c], &f.sub(&m(&v[*a], &w[*b]), &m(&v[*b], &w[*a])));
                f.add(&f.sub(&t1, &t2), &t3)
            };
            acc = f.add(&acc, &f.mul(s, &det3));
        }
        Ok(acc)
    }

    /// The skew matrix `M[j][k] = Σ_i v_i σ_ijk`.
    pub fn contract(&self, v: &[F::Elem]) -> Result<Vec<Vec<F::Elem>>> {
        Self::check_len(v)?;
        let f = &self.field;
        let mut m = vec![vec![f.zero(); DIM]; DIM];
        for ([a, b, c], s) in &self.coeffs {
            // σ_abc = σ_bca = σ_cab
            for (i, j, k) in [(*a, *b, *c), (*b, *c, *a), (*c, *a, *b)] {
                if f.is_zero(&v[i]) {
                    continue;
                }
                let x = f.mul(&v[i], s);
                m[j][k] = f.add(&m[j][k], &x);
                m[k][j] = f.sub(&m[k][j], &x);
            }
        }
        Ok(m)
    }

    /// `contract` with the generic vector `(x1, ..., x10)`: entries are linear forms.
    pub fn symbolic_contract(&self) -> Vec<Vec<MultiPoly<F>>> {
        self.linear_contract(&identity_rows(&self.field))
            .expect("identity has the right shape")
    }

    /// Contraction with `v = Σ_r y_r rows[r]`, entries linear forms in `y`.
    pub(crate) fn linear_contract(&self, rows: &[Vec<F::Elem>]) -> Result<Vec<Vec<MultiPoly<F>>>> {
        for r in rows {
            Self::check_len(r)?;
        }
        let n = rows.len();
        let f = &self.field;
        let mut m = vec![vec![MultiPoly::zero(f.clone(), n); DIM]; DIM];
        for ([a, b, c], s) in &self.coeffs {
            for (i, j, k) in [(*a, *b, *c), (*b, *c, *a), (*c, *a, *b)] {
                let coeffs: Vec<_> = rows.iter().map(|r| f.mul(&r[i], s)).collect();
                if coeffs.iter().all(|x| f.is_zero(x)) {
                    continue;
                }
                let lin = MultiPoly::from_terms(
                    f.clone(),
                    n,
                    coeffs
                        .into_iter()
                        .enumerate()
                        .map(|(r, x)| (crate::poly::Monomial::var(n, r), x)),
                );
                m[j][k] = &m[j][k] + &lin;
                m[k][j] = &m[k][j] - &lin;
            }
        }
        Ok(m)
    }

    pub fn map_field<G: Field>(&self, target: G, map: impl Fn(&F::Elem) -> Option<G::Elem>) -> Option<Trivector<G>> {
        let mut out = Trivector::zero(target);
        for (t, c) in &self.coeffs {
            let v = map(c)?;
            if !out.field.is_zero(&v) {
                out.coeffs.insert(*t, v);
            }
        }
        Some(out)
    }
}

impl Trivector<Rationals> {
    /// Reduction modulo a prime; fails if a denominator is divisible by `p`.
    pub fn reduce(&self, fp: PrimeField) -> Result<Trivector<PrimeField>> {
        self.map_field(fp, |c| fp.from_rational(c)).ok_or_else(|| {
            Error::InvalidInput(format!("a coefficient has denominator divisible by {}", fp.modulus()))
        })
    }
}

pub(crate) fn identity_rows<F: Field>(f: &F) -> Vec<Vec<F::Elem>> {
    (0..DIM)
        .map(|i| (0..DIM).map(|j| if i == j { f.one() } else { f.zero() }).collect())
        .collect()
}

/// Basis vector `e_i` (0-based).
pub fn basis_vector<F: Field>(f: &F, i: usize) -> Vec<F::Elem> {
    (0..DIM).map(|j| if i == j { f.one() } else { f.zero() }).collect()
}

/// Parse the `i j k c` text format (1-based indices, `i < j < k`, nonzero `c`).
pub fn parse_tvec(text: &str) -> Result<Trivector<Rationals>> {
    let mut sigma = Trivector::zero(Rationals);
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let perr = |msg: String| Error::Parse { line: n + 1, msg };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(perr(format!("expected 'i j k c', found {} fields", fields.len())));
        }
        let idx: Vec<usize> = fields[..3]
            .iter()
            .map(|s| s.parse::<usize>().map_err(|_| perr(format!("bad index '{s}'"))))
            .collect::<Result<_>>()?;
        let (i, j, k) = (idx[0], idx[1], idx[2]);
        if !(1 <= i && i < j && j < k && k <= DIM) {
            return Err(perr(format!("need 1 <= i < j < k <= 10, found {i} {j} {k}")));
        }
        let c = parse_rational(fields[3]).map_err(perr)?;
        if c == Rationals.zero() {
            return Err(perr("zero coefficient".into()));
        }
        if sigma.coeffs.contains_key(&[i - 1, j - 1, k - 1]) {
            return Err(perr(format!("duplicate triple {i} {j} {k}")));
        }
        sigma.coeffs.insert([i - 1, j - 1, k - 1], c);
    }
    Ok(sigma)
}

pub fn format_tvec<F: Field>(sigma: &Trivector<F>) -> String {
    let mut out = String::new();
    for ([a, b, c], s) in sigma.terms() {
        let _ = writeln!(out, "{} {} {} {}", a + 1, b + 1, c + 1, sigma.field.format_elem(s));
    }
    out
}
