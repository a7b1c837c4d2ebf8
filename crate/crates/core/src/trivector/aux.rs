use crate::error::Result;
use crate::linalg::nullspace;
use crate::poly::Field;

use super::peskine::{check_full_rank, restricted_pfaffians};
use super::{basis_vector, Trivector, DIM};

/// `σ|_{V6} = 0`, checked on the 20 triples of rows of `v6`.
pub fn x6_membership<F: Field>(sigma: &Trivector<F>, v6: &[Vec<F::Elem>]) -> Result<bool> {
    let f = sigma.field();
    check_full_rank(f, v6, 6)?;
    for i in 0..6 {
        for j in i + 1..6 {
            for k in j + 1..6 {
                if !f.is_zero(&sigma.eval(&v6[i], &v6[j], &v6[k])?) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Where the kernel of `σ(-, V7, V7)` is taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum KernelDomain {
    #[default]
    V7,
    V10,
}

/// Basis (as 10-vectors) of `{v : σ(v, V7, V7) = 0}` inside `V7` or `V10`.
pub fn x7_kernel<F: Field>(sigma: &Trivector<F>, v7: &[Vec<F::Elem>], domain: KernelDomain) -> Result<Vec<Vec<F::Elem>>> {
    let f = sigma.field();
    check_full_rank(f, v7, 7)?;
    let candidates: Vec<Vec<F::Elem>> = match domain {
        KernelDomain::V7 => v7.to_vec(),
        KernelDomain::V10 => (0..DIM).map(|i| basis_vector(f, i)).collect(),
    };
    // one equation per pair i < j of rows of v7, one unknown per candidate vector
    let mut eqs = Vec::with_capacity(21);
    for i in 0..7 {
        for j in i + 1..7 {
            let row = candidates
                .iter()
                .map(|c| sigma.eval(c, &v7[i], &v7[j]))
                .collect::<Result<Vec<_>>>()?;
            eqs.push(row);
        }
    }
    let kernel = nullspace(f, &eqs, candidates.len())?;
    Ok(kernel
        .iter()
        .map(|coef| {
            (0..DIM)
                .map(|t| {
                    coef.iter()
                        .zip(&candidates)
                        .fold(f.zero(), |acc, (a, c)| f.add(&acc, &f.mul(a, &c[t])))
                })
                .collect()
        })
        .collect())
}

/// Whether every Peskine quartic vanishes identically on the line `P(V2)`.
pub fn line_in_peskine<F: Field>(sigma: &Trivector<F>, v2: &[Vec<F::Elem>]) -> Result<bool> {
    check_full_rank(sigma.field(), v2, 2)?;
    Ok(restricted_pfaffians(sigma, v2)?.iter().all(|q| q.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{in_row_span, rank};
    use crate::poly::{PrimeField, Rationals};
    use crate::trivector::parse_tvec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn span<F: Field>(f: &F, idx: &[usize]) -> Vec<Vec<F::Elem>> {
        idx.iter().map(|&i| basis_vector(f, i)).collect()
    }

    #[test]
    fn x6_examples() {
        let q = Rationals;
        let v6 = span(&q, &[0, 1, 2, 3, 4, 5]);
        assert!(x6_membership(&Trivector::zero(q), &v6).unwrap());
        assert!(!x6_membership(&parse_tvec("1 2 3 1\n").unwrap(), &v6).unwrap());
        assert!(x6_membership(&parse_tvec("1 2 7 1\n").unwrap(), &v6).unwrap());
        assert!(x6_membership(&Trivector::zero(q), &span(&q, &[0, 1, 2, 3, 4, 4])).is_err());
    }

    #[test]
    fn x7_examples() {
        let q = Rationals;
        let v7 = span(&q, &[0, 1, 2, 3, 4, 5, 6]);
        assert_eq!(x7_kernel(&Trivector::zero(q), &v7, KernelDomain::V7).unwrap().len(), 7);
        assert_eq!(x7_kernel(&Trivector::zero(q), &v7, KernelDomain::V10).unwrap().len(), 10);
        let s = parse_tvec("1 2 3 1\n").unwrap();
        let k = x7_kernel(&s, &v7, KernelDomain::V7).unwrap();
        assert_eq!(k.len(), 4);
        let expect = span(&q, &[3, 4, 5, 6]);
        assert_eq!(rank(&q, &k).unwrap(), 4);
        for v in &k {
            assert!(in_row_span(&q, &expect, v).unwrap());
        }
        // in V10 the directions e8..e10 are also killed
        assert_eq!(x7_kernel(&s, &v7, KernelDomain::V10).unwrap().len(), 7);
    }

    #[test]
    fn planted_kernel_is_recovered_and_its_line_lies_on_the_peskine() {
        let fp = PrimeField::new(10007).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        // σ random except that σ(V2, V7, V7) = 0 for V2 = <e1, e2>, V7 = <e1..e7>
        let mut sigma = Trivector::zero(fp);
        for i in 0..DIM {
            for j in i + 1..DIM {
                for k in j + 1..DIM {
                    if i < 2 && k < 7 {
                        continue;
                    }
                    sigma.add_term(i, j, k, rng.gen_range(1..10007)).unwrap();
                }
            }
        }
        let v7 = span(&fp, &[0, 1, 2, 3, 4, 5, 6]);
        let k = x7_kernel(&sigma, &v7, KernelDomain::V7).unwrap();
        assert_eq!(k.len(), 2);
        for v in span(&fp, &[0, 1]) {
            assert!(in_row_span(&fp, &k, &v).unwrap());
        }
        assert!(line_in_peskine(&sigma, &k).unwrap());
    }

    #[test]
    fn random_line_is_not_on_the_peskine() {
        let fp = PrimeField::new(10007).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        let mut sigma = Trivector::zero(fp);
        for i in 0..DIM {
            for j in i + 1..DIM {
                for k in j + 1..DIM {
                    sigma.add_term(i, j, k, rng.gen_range(0..10007)).unwrap();
                }
            }
        }
        let v2: Vec<Vec<u64>> = (0..2).map(|_| (0..DIM).map(|_| rng.gen_range(0..10007)).collect()).collect();
        assert!(!line_in_peskine(&sigma, &v2).unwrap());
        assert!(line_in_peskine(&Trivector::zero(fp), &v2).unwrap());
        assert!(line_in_peskine(&sigma, &[v2[0].clone(), v2[0].clone()]).is_err());
    }
}
