use std::collections::HashSet;

use crate::error::{Error, Result};

use super::field::Field;
use super::monomial::Monomial;
use super::multipoly::MultiPoly;

fn check_ring<F: Field>(gens: &[MultiPoly<F>]) -> Result<()> {
    if let Some(first) = gens.first() {
        for g in gens {
            if g.nvars() != first.nvars() || g.field() != first.field() {
                return Err(Error::RingMismatch("generators live in different rings".into()));
            }
        }
    }
    Ok(())
}

/// Full reduction of `f` by `basis` (leading term and tail).
pub fn normal_form<F: Field>(f: &MultiPoly<F>, basis: &[MultiPoly<F>]) -> MultiPoly<F> {
    let field = f.field().clone();
    let lts: Vec<(&Monomial, F::Elem)> = basis
        .iter()
        .filter_map(|g| g.leading_term().map(|(m, c)| (m, field.inv(c).unwrap())))
        .collect();
    let live: Vec<&MultiPoly<F>> = basis.iter().filter(|g| !g.is_zero()).collect();
    let mut p = f.clone();
    let mut rem: Vec<(Monomial, F::Elem)> = Vec::new();
    let mut rest_start = 0;
    // `p.terms()[rest_start..]` is the unreduced part; everything before it has moved to `rem`.
    loop {
        let Some((m, c)) = p.terms().get(rest_start) else { break };
        match lts.iter().position(|(lm, _)| lm.divides(m)) {
            Some(k) => {
                let q = field.mul(c, &lts[k].1);
                let shift = m.div(lts[k].0);
                let tail = MultiPoly::from_sorted_unchecked(
                    field.clone(),
                    p.nvars(),
                    p.terms()[rest_start..].to_vec(),
                );
                p = tail.sub_scaled_term(&q, &shift, live[k]);
                rest_start = 0;
            }
            None => {
                rem.push((m.clone(), c.clone()));
                rest_start += 1;
            }
        }
    }
    MultiPoly::from_sorted_unchecked(field, f.nvars(), rem)
}

fn s_polynomial<F: Field>(a: &MultiPoly<F>, b: &MultiPoly<F>) -> MultiPoly<F> {
    let field = a.field();
    let (ma, ca) = a.leading_term().unwrap();
    let (mb, cb) = b.leading_term().unwrap();
    let l = ma.lcm(mb);
    let left = a.mul_term(&l.div(ma), &field.inv(ca).unwrap());
    left.sub_scaled_term(&field.inv(cb).unwrap(), &l.div(mb), b)
}

/// Reduced Gröbner basis under grevlex, monic, sorted by ascending leading monomial.
pub fn buchberger<F: Field>(gens: &[MultiPoly<F>]) -> Result<Vec<MultiPoly<F>>> {
    check_ring(gens)?;
    let mut basis: Vec<MultiPoly<F>> = Vec::new();
    for g in gens {
        let r = normal_form(g, &basis);
        if !r.is_zero() {
            basis.push(r.monic());
        }
    }
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    while !pending.is_empty() {
        // normal selection strategy: smallest lcm first, ties broken by index
        let &(i, j) = pending
            .iter()
            .min_by(|&&(a, b), &&(c, d)| {
                let l1 = basis[a].leading_monomial().unwrap().lcm(basis[b].leading_monomial().unwrap());
                let l2 = basis[c].leading_monomial().unwrap().lcm(basis[d].leading_monomial().unwrap());
                l1.cmp(&l2).then((a, b).cmp(&(c, d)))
            })
            .unwrap();
        pending.remove(&(i, j));
        let (li, lj) = (basis[i].leading_monomial().unwrap(), basis[j].leading_monomial().unwrap());
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let r = normal_form(&s_polynomial(&basis[i], &basis[j]), &basis);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        if r.is_constant() {
            return Ok(vec![r]);
        }
        let n = basis.len();
        for k in 0..n {
            pending.insert((k, n));
        }
        basis.push(r);
    }
    Ok(reduce_basis(basis))
}

fn reduce_basis<F: Field>(basis: Vec<MultiPoly<F>>) -> Vec<MultiPoly<F>> {
    let mut minimal: Vec<MultiPoly<F>> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lm = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            let hm = h.leading_monomial().unwrap();
            k != i && hm.divides(lm) && (hm != lm || k < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<MultiPoly<F>> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, g)| g.clone())
            .collect();
        reduced.push(normal_form(&minimal[i], &others).monic());
    }
    reduced.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    reduced
}

/// Whether the homogeneous ideal generated by `gens` has only the origin as common zero
/// over the algebraic closure: every variable needs a pure power among the leading
/// monomials of the reduced basis (a unit ideal qualifies trivially).
pub fn only_zero_at_origin<F: Field>(gens: &[MultiPoly<F>]) -> Result<bool> {
    if let Some(g) = gens.iter().find(|g| !g.is_homogeneous()) {
        return Err(Error::InvalidInput(format!("generator {g} is not homogeneous")));
    }
    let Some(first) = gens.first() else {
        return Ok(false);
    };
    let nvars = first.nvars();
    let gb = buchberger(gens)?;
    Ok(leading_terms_cover_all_variables(&gb, nvars))
}

pub(crate) fn leading_terms_cover_all_variables<F: Field>(gb: &[MultiPoly<F>], nvars: usize) -> bool {
    let mut covered = vec![false; nvars];
    for g in gb {
        let lm = g.leading_monomial().unwrap();
        if lm.is_one() {
            return true;
        }
        if let Some(v) = lm.pure_power_var() {
            covered[v] = true;
        }
    }
    covered.iter().all(|&c| c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::text::parse_poly;
    use crate::poly::PrimeField;

    fn fp() -> PrimeField {
        PrimeField::new(10007).unwrap()
    }

    fn p(s: &str, n: usize) -> MultiPoly<PrimeField> {
        parse_poly(fp(), n, s).unwrap()
    }

    fn assert_groebner(gb: &[MultiPoly<PrimeField>]) {
        for i in 0..gb.len() {
            for j in i + 1..gb.len() {
                assert!(normal_form(&s_polynomial(&gb[i], &gb[j]), gb).is_zero());
            }
            assert_eq!(*gb[i].leading_coeff().unwrap(), 1);
            for (k, h) in gb.iter().enumerate() {
                if k != i {
                    let lm = h.leading_monomial().unwrap();
                    assert!(gb[i].terms().iter().all(|(m, _)| !lm.divides(m)));
                }
            }
        }
    }

    #[test]
    fn small_bases() {
        assert_eq!(buchberger(&[p("x1", 2)]).unwrap(), vec![p("x1", 2)]);
        assert_eq!(buchberger(&[p("x1 + x2", 2), p("x2", 2)]).unwrap(), vec![p("x2", 2), p("x1", 2)]);
        assert!(buchberger::<PrimeField>(&[]).unwrap().is_empty());
        let gb = buchberger(&[p("x1^2 - x2", 3), p("x1*x2 - x3", 3), p("x2^2 - x1*x3", 3)]).unwrap();
        assert_groebner(&gb);
    }

    #[test]
    fn origin_examples() {
        let vars: Vec<_> = (1..=6).map(|i| p(&format!("x{i}"), 6)).collect();
        assert!(only_zero_at_origin(&vars).unwrap());
        assert!(!only_zero_at_origin(&[p("x1^2", 2)]).unwrap());
        assert!(only_zero_at_origin(&[p("x1^2 + x2", 2)]).is_err());
        let fermat_partials: Vec<_> = (1..=6).map(|i| p(&format!("3*x{i}^2"), 6)).collect();
        assert!(only_zero_at_origin(&fermat_partials).unwrap());
        // adding generators keeps a true verdict
        let mut more = fermat_partials.clone();
        more.push(p("x1*x2 + x3^2", 6));
        assert!(only_zero_at_origin(&more).unwrap());
    }

    #[test]
    fn euler_relation_membership() {
        let f = p("x1^3 + 2*x1*x2*x3 - 5*x2^2*x4 + x3^3 + 7*x4^2*x5 + x5^2*x6 - x6^3 + x1*x6^2", 6);
        let partials: Vec<_> = (0..6).map(|i| f.partial_derivative(i)).collect();
        let gb = buchberger(&partials).unwrap();
        assert_groebner(&gb);
        assert!(normal_form(&f, &gb).is_zero());
    }
}
