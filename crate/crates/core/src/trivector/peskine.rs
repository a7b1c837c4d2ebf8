use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::rank;
use crate::poly::gcd::gcd_all;
use crate::poly::pfaffian::pfaffian_unchecked;
use crate::poly::{Field, MultiPoly, PolyRing, Rationals};

use super::flag::Flag;
use super::{identity_rows, Trivector, DIM};

/// The 45 quartics cutting out the rank `<= 6` locus, indexed by removed pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct PeskineSystem<F: Field> {
    pub pairs: Vec<(usize, usize)>,
    pub quartics: Vec<MultiPoly<F>>,
}

pub(crate) fn removed_pairs() -> Vec<(usize, usize)> {
    (0..DIM)
        .flat_map(|i| (i + 1..DIM).map(move |j| (i, j)))
        .collect()
}

/// The principal 8x8 Pfaffians of the contraction with `Σ_r y_r rows[r]`, as
/// polynomials in `y`, in removed-pair order.
pub fn restricted_pfaffians<F: Field>(sigma: &Trivector<F>, rows: &[Vec<F::Elem>]) -> Result<Vec<MultiPoly<F>>> {
    if rows.is_empty() {
        return Err(Error::Shape("restriction to the zero subspace".into()));
    }
    let m = sigma.linear_contract(rows)?;
    let ring = PolyRing::new(sigma.field().clone(), rows.len());
    Ok(removed_pairs()
        .par_iter()
        .map(|&(a, b)| {
            let idx: Vec<usize> = (0..DIM).filter(|&k| k != a && k != b).collect();
            pfaffian_unchecked(&ring, &m, &idx)
        })
        .collect())
}

pub fn peskine_equations<F: Field>(sigma: &Trivector<F>) -> PeskineSystem<F> {
    let quartics = restricted_pfaffians(sigma, &identity_rows(sigma.field())).expect("identity rows");
    PeskineSystem {
        pairs: removed_pairs(),
        quartics,
    }
}

/// Rank of `σ(v, -, -)`.
pub fn rank_at_point<F: Field>(sigma: &Trivector<F>, v: &[F::Elem]) -> Result<usize> {
    let f = sigma.field();
    if v.iter().all(|x| f.is_zero(x)) {
        return Err(Error::InvalidInput("rank at the zero vector".into()));
    }
    rank(f, &sigma.contract(v)?)
}

/// `σ(W1, W6, V10) = 0`, checked on the 60 triples `(w1, b_j, e_k)`.
pub fn verify_flag<F: Field>(sigma: &Trivector<F>, flag: &Flag) -> Result<bool> {
    let f = sigma.field();
    let w1 = flag.w1_in(f);
    let m = sigma.contract(&w1)?;
    // σ(w1, b, e_k) = (b^T M)_k
    for b in flag.w6_in(f) {
        for k in 0..DIM {
            let mut acc = f.zero();
            for j in 0..DIM {
                acc = f.add(&acc, &f.mul(&b[j], &m[j][k]));
            }
            if !f.is_zero(&acc) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub(crate) fn check_full_rank<F: Field>(f: &F, rows: &[Vec<F::Elem>], expect: usize) -> Result<()> {
    if rows.len() != expect || rows.iter().any(|r| r.len() != DIM) {
        return Err(Error::Shape(format!("expected a {expect}x{DIM} matrix")));
    }
    if rank(f, rows)? != expect {
        return Err(Error::InvalidInput(format!("the {expect} rows are not independent")));
    }
    Ok(())
}

/// Pull each quartic back along `x = y^T w6`.
pub fn restrict_to_subspace<F: Field>(sys: &PeskineSystem<F>, w6: &[Vec<F::Elem>]) -> Result<Vec<MultiPoly<F>>> {
    let Some(f) = sys.quartics.first().map(|q| q.field().clone()) else {
        return Ok(Vec::new());
    };
    check_full_rank(&f, w6, 6)?;
    let a: Vec<Vec<F::Elem>> = (0..DIM)
        .map(|i| w6.iter().map(|row| row[i].clone()).collect())
        .collect();
    sys.quartics
        .par_iter()
        .map(|q| q.substitute_linear(&a))
        .collect()
}

/// The cubic `Y = X_1 ∩ P(W6)` as the GCD of the restricted quartics, in
/// primitive integer form. Every restricted quartic must be the cubic times a
/// linear form.
pub fn extract_cubic(sigma: &Trivector<Rationals>, flag: &Flag) -> Result<MultiPoly<Rationals>> {
    if !verify_flag(sigma, flag)? {
        return Err(Error::FlagViolated);
    }
    let restricted = restricted_pfaffians(sigma, &flag.w6_in(&Rationals))?;
    let mut nonzero: Vec<(usize, &MultiPoly<Rationals>)> =
        restricted.iter().enumerate().filter(|(_, q)| !q.is_zero()).collect();
    if nonzero.is_empty() {
        return Err(Error::AllRestrictionsZero);
    }
    nonzero.sort_by_key(|(i, q)| (q.num_terms(), *i));
    let g = gcd_all(nonzero.iter().map(|(_, q)| *q))?.expect("nonempty");
    let degree = g.total_degree().unwrap_or(0);
    if degree != 3 || !g.is_homogeneous() {
        return Err(Error::NotACubic {
            degree,
            gcd: Box::new(g),
        });
    }
    for (index, q) in &nonzero {
        match q.div_exact(&g) {
            Some(l) if l.total_degree() == Some(1) && l.is_homogeneous() => {}
            _ => return Err(Error::NotDivisible { index: *index }),
        }
    }
    Ok(g)
}
