use crate::error::{Error, Result};

use super::field::{Field, Ring};

pub fn check_skew<R: Ring>(ring: &R, m: &[Vec<R::Elem>]) -> Result<()> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::Shape("matrix is not square".into()));
    }
    for i in 0..n {
        if !ring.is_zero(&m[i][i]) {
            return Err(Error::InvalidInput(format!("nonzero diagonal entry at {i}")));
        }
        for j in i + 1..n {
            if !ring.is_zero(&ring.add(&m[i][j], &m[j][i])) {
                return Err(Error::InvalidInput(format!("entries ({i},{j}) and ({j},{i}) are not opposite")));
            }
        }
    }
    Ok(())
}

/// Pfaffian of a skew matrix by expansion along the first row.
pub fn pfaffian<R: Ring>(ring: &R, m: &[Vec<R::Elem>]) -> Result<R::Elem> {
    check_skew(ring, m)?;
    if m.len() % 2 == 1 {
        return Err(Error::Shape(format!("Pfaffian of odd size {}", m.len())));
    }
    let idx: Vec<usize> = (0..m.len()).collect();
    Ok(pfaffian_unchecked(ring, m, &idx))
}

/// Pfaffian of the principal submatrix on `idx`, which must have even length.
pub(crate) fn pfaffian_unchecked<R: Ring>(ring: &R, m: &[Vec<R::Elem>], idx: &[usize]) -> R::Elem {
    match idx.len() {
        0 => return ring.one(),
        2 => return m[idx[0]][idx[1]].clone(),
        _ => {}
    }
    let first = idx[0];
    let mut acc = ring.zero();
    let mut rest: Vec<usize> = Vec::with_capacity(idx.len() - 2);
    for (pos, &j) in idx.iter().enumerate().skip(1) {
        let a = &m[first][j];
        if ring.is_zero(a) {
            continue;
        }
        rest.clear();
        rest.extend(idx[1..].iter().copied().filter(|&k| k != j));
        let sub = pfaffian_unchecked(ring, m, &rest);
        if ring.is_zero(&sub) {
            continue;
        }
        let term = ring.mul(a, &sub);
        // positions 1, 3, 5, ... carry a plus sign
        acc = if pos % 2 == 1 { ring.add(&acc, &term) } else { ring.sub(&acc, &term) };
    }
    acc
}

/// Determinant over a field by Gaussian elimination.
pub fn determinant<F: Field>(field: &F, m: &[Vec<F::Elem>]) -> Result<F::Elem> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::Shape("matrix is not square".into()));
    }
    let mut a: Vec<Vec<F::Elem>> = m.to_vec();
    let mut det = field.one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !field.is_zero(&a[r][col])) else {
            return Ok(field.zero());
        };
        if piv != col {
            a.swap(piv, col);
            det = field.neg(&det);
        }
        let p = a[col][col].clone();
        det = field.mul(&det, &p);
        let pinv = field.inv(&p).expect("nonzero pivot");
        for r in col + 1..n {
            if field.is_zero(&a[r][col]) {
                continue;
            }
            let factor = field.mul(&a[r][col], &pinv);
            for c in col..n {
                let v = field.mul(&factor, &a[col][c]);
                a[r][c] = field.sub(&a[r][c], &v);
            }
        }
    }
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{MultiPoly, PolyRing, PrimeField, Rationals};
    use num_rational::BigRational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_skew<F: Field>(field: &F, n: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<F::Elem>> {
        let mut m = vec![vec![field.zero(); n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let v = field.from_i64(rng.gen_range(-20..=20));
                m[j][i] = field.neg(&v);
                m[i][j] = v;
            }
        }
        m
    }

    #[test]
    fn small_examples() {
        let r = PolyRing::new(Rationals, 6);
        let a = r.var(0);
        let z = r.zero();
        let m2 = vec![vec![z.clone(), a.clone()], vec![-&a, z.clone()]];
        assert_eq!(pfaffian(&r, &m2).unwrap(), a);
        assert_eq!(pfaffian(&r, &[]).unwrap(), r.one());

        // generic 4x4 with a12..a34 = x1..x6
        let v: Vec<MultiPoly<Rationals>> = (0..6).map(|i| r.var(i)).collect();
        let up = [[None, Some(0), Some(1), Some(2)], [None, None, Some(3), Some(4)], [None, None, None, Some(5)], [None; 4]];
        let mut m4 = vec![vec![z.clone(); 4]; 4];
        for i in 0..4 {
            for j in i + 1..4 {
                let e = &v[up[i][j].unwrap()];
                m4[i][j] = e.clone();
                m4[j][i] = -e;
            }
        }
        let expect = &(&(&v[0] * &v[5]) - &(&v[1] * &v[4])) + &(&v[2] * &v[3]);
        assert_eq!(pfaffian(&r, &m4).unwrap(), expect);
    }

    #[test]
    fn rejects_bad_input() {
        let q = Rationals;
        let one = q.one();
        let z = q.zero();
        assert!(pfaffian(&q, &[vec![z.clone(), one.clone()], vec![one.clone(), z.clone()]]).is_err());
        assert!(pfaffian(&q, &[vec![z.clone()]]).is_err());
        assert!(pfaffian(&q, &[vec![one.clone(), z.clone()], vec![z.clone(), z.clone()]]).is_err());
    }

    #[test]
    fn pfaffian_squared_is_determinant() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let fp = PrimeField::new(10007).unwrap();
        for n in [4, 6, 8] {
            for _ in 0..100 {
                let m = random_skew(&fp, n, &mut rng);
                let pf = pfaffian(&fp, &m).unwrap();
                assert_eq!(fp.mul(&pf, &pf), determinant(&fp, &m).unwrap());

                let m = random_skew(&Rationals, n, &mut rng);
                let pf: BigRational = pfaffian(&Rationals, &m).unwrap();
                assert_eq!(&pf * &pf, determinant(&Rationals, &m).unwrap());
            }
        }
    }
}
