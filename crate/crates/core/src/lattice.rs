//! Integer lattices given by Gram matrices: Smith normal form, discriminant
//! groups with their `Q/2Z`-valued forms, divisibility, saturation and
//! orthogonal complements.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numbers::QmodTwoZ;

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: Vec<Vec<BigInt>>,
    ncols: usize,
}

impl IntMatrix {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Shape("ragged integer matrix".into()));
        }
        Ok(IntMatrix { rows, ncols })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        IntMatrix {
            rows: vec![vec![BigInt::zero(); ncols]; nrows],
            ncols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i][i] = BigInt::one();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.rows[i]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let rows = (0..self.ncols).map(|j| self.column(j)).collect();
        IntMatrix {
            rows,
            ncols: self.nrows(),
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.ncols != other.nrows() {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows(),
                self.ncols,
                other.nrows(),
                other.ncols
            )));
        }
        let mut out = Self::zeros(self.nrows(), other.ncols);
        for i in 0..self.nrows() {
            for k in 0..self.ncols {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.ncols {
                    out.rows[i][j] += a * &other.rows[k][j];
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.nrows() == self.ncols
            && (0..self.ncols).all(|i| (0..i).all(|j| self.rows[i][j] == self.rows[j][i]))
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        let n = self.nrows();
        if n != self.ncols {
            return Err(Error::Shape("determinant of a non-square matrix".into()));
        }
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.rows.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.rows.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for r in &mut self.rows {
            r.swap(i, j);
        }
    }

    /// row_i += q * row_j
    fn add_row(&mut self, i: usize, j: usize, q: &BigInt) {
        let src = self.rows[j].clone();
        for (a, b) in self.rows[i].iter_mut().zip(&src) {
            *a += q * b;
        }
    }

    /// col_i += q * col_j
    fn add_col(&mut self, i: usize, j: usize, q: &BigInt) {
        for r in &mut self.rows {
            let v = q * &r[j];
            r[i] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for a in &mut self.rows[i] {
            *a = -&*a;
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", cells.join(","))?;
        }
        Ok(())
    }
}

/// `u * m * v = d` with `u`, `v` unimodular and `d` diagonal, `d_1 | d_2 | ...`, all `d_i >= 0`.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.nrows().min(self.d.ncols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (r, c) = (m.nrows(), m.ncols());
    let mut a = m.clone();
    let mut u = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);
    let mut v_inv = IntMatrix::identity(c);

    'outer: for t in 0..r.min(c) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    let x = a.get(i, j);
                    if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break 'outer };
            if pi != t {
                a.swap_rows(pi, t);
                u.swap_rows(pi, t);
            }
            if pj != t {
                a.swap_cols(pj, t);
                v.swap_cols(pj, t);
                v_inv.swap_rows(pj, t);
            }
            let p = a.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..r {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = -a.get(i, t).div_floor(&p);
                a.add_row(i, t, &q);
                u.add_row(i, t, &q);
                clean &= a.get(i, t).is_zero();
            }
            for j in t + 1..c {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = -a.get(t, j).div_floor(&p);
                a.add_col(j, t, &q);
                v.add_col(j, t, &q);
                v_inv.add_row(t, j, &-&q);
                clean &= a.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            let bad_row = (t + 1..r).find(|&i| (t + 1..c).any(|j| !a.get(i, j).is_multiple_of(&p)));
            match bad_row {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row(t, i, &one);
                    u.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { u, d: a, v, v_inv }
}

/// A nondegenerate integral symmetric bilinear form on `Z^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramLattice {
    gram: IntMatrix,
}

impl GramLattice {
    pub fn new(gram: IntMatrix) -> Result<Self> {
        if !gram.is_symmetric() {
            return Err(Error::InvalidInput("Gram matrix is not symmetric".into()));
        }
        if gram.determinant()?.is_zero() {
            return Err(Error::Degenerate("Gram matrix has determinant 0".into()));
        }
        Ok(GramLattice { gram })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(IntMatrix::from_i64(rows)?)
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.nrows()
    }

    pub fn determinant(&self) -> BigInt {
        self.gram.determinant().expect("square by construction")
    }

    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram.get(i, i).is_even())
    }

    pub fn pairing(&self, a: &[BigInt], b: &[BigInt]) -> BigInt {
        a.iter().zip(self.gram.mul_vec(b)).map(|(x, y)| x * y).sum()
    }

    /// Positive generator of the ideal `v . L`.
    pub fn divisibility(&self, v: &[BigInt]) -> Result<BigInt> {
        if v.len() != self.rank() {
            return Err(Error::Shape(format!("vector of length {} in rank {}", v.len(), self.rank())));
        }
        if v.iter().all(|x| x.is_zero()) {
            return Err(Error::InvalidInput("divisibility of the zero vector".into()));
        }
        Ok(self.gram.mul_vec(v).iter().fold(BigInt::zero(), |g, x| g.gcd(x)))
    }

    pub fn discriminant_group(&self) -> DiscGroup {
        let n = self.rank();
        let snf = smith_normal_form(&self.gram);
        let diag = snf.diagonal();
        let mut invariant_factors = Vec::new();
        let mut generators = Vec::new();
        let mut qvals = Vec::new();
        for (i, di) in diag.iter().enumerate() {
            if di.is_one() {
                continue;
            }
            let g: Vec<BigRational> = (0..n)
                .map(|k| BigRational::new(snf.v.get(k, i).clone(), di.clone()))
                .collect();
            let gg: Vec<BigRational> = (0..n)
                .map(|r| {
                    (0..n)
                        .map(|k| BigRational::from_integer(self.gram.get(r, k).clone()) * &g[k])
                        .sum()
                })
                .collect();
            let q: BigRational = g.iter().zip(&gg).map(|(a, b)| a * b).sum();
            invariant_factors.push(di.clone());
            qvals.push(QmodTwoZ::from_rational(&q).expect("q-value fits 64 bits"));
            generators.push(g);
        }
        DiscGroup {
            invariant_factors,
            generators,
            qvals,
            even: self.is_even(),
        }
    }

    pub fn orthogonal_complement(&self, sub: &[Vec<BigInt>]) -> Result<GramLattice> {
        let n = self.rank();
        if sub.iter().any(|s| s.len() != n) {
            return Err(Error::Shape("sublattice vectors have the wrong length".into()));
        }
        let a = IntMatrix::new(sub.iter().map(|s| self.gram.mul_vec(s)).collect())?;
        let a = if sub.is_empty() { IntMatrix::zeros(0, n) } else { a };
        let snf = smith_normal_form(&a);
        let r = snf.rank();
        if r < sub.len() {
            return Err(Error::InvalidInput("sublattice vectors are linearly dependent".into()));
        }
        let kernel: Vec<Vec<BigInt>> = (r..n).map(|j| snf.v.column(j)).collect();
        let rows: Vec<Vec<BigInt>> = kernel
            .iter()
            .map(|x| kernel.iter().map(|y| self.pairing(x, y)).collect())
            .collect();
        let gram = IntMatrix::new(rows)?;
        if gram.nrows() > 0 && gram.determinant()?.is_zero() {
            return Err(Error::Degenerate("orthogonal complement is degenerate".into()));
        }
        GramLattice::new(gram)
    }
}

/// `(Q span of basis) ∩ Z^n`, as the first rows of an inverse column transform.
pub fn saturation(ambient_rank: usize, basis: &[Vec<BigInt>]) -> Result<Vec<Vec<BigInt>>> {
    if basis.iter().any(|b| b.len() != ambient_rank) {
        return Err(Error::Shape("basis vectors have the wrong length".into()));
    }
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    let snf = smith_normal_form(&IntMatrix::new(basis.to_vec())?);
    if snf.rank() < basis.len() {
        return Err(Error::InvalidInput("basis vectors are linearly dependent".into()));
    }
    Ok((0..basis.len()).map(|i| snf.v_inv.row(i).to_vec()).collect())
}

/// The finite group `L^∨/L` with its discriminant quadratic form.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscGroup {
    pub invariant_factors: Vec<BigInt>,
    /// Dual vectors in the lattice basis, one per invariant factor.
    pub generators: Vec<Vec<BigRational>>,
    pub qvals: Vec<QmodTwoZ>,
    /// q is only defined mod `Z` when the lattice is odd.
    pub even: bool,
}

impl DiscGroup {
    pub fn order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors.len() <= 1
    }

    pub fn invariant_factors_u64(&self) -> Vec<u64> {
        self.invariant_factors.iter().map(|x| x.to_u64().unwrap()).collect()
    }

    /// Whether some generator of the cyclic group has q-value `q`, comparing
    /// mod `2Z` for even lattices and mod `Z` for odd ones.
    pub fn represents_on_generator(&self, q: QmodTwoZ) -> bool {
        if !self.is_cyclic() {
            return false;
        }
        let Some(q0) = self.qvals.first() else {
            return q.is_zero();
        };
        let n = self.invariant_factors[0].to_i64().expect("group order fits 64 bits");
        (1..n).filter(|u| u.gcd(&n) == 1).any(|u| {
            let cand = q0.scale(u * u);
            if self.even {
                cand == q
            } else {
                cand.eq_mod_one(&q)
            }
        })
    }
}

impl fmt::Display for DiscGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariant_factors.is_empty() {
            return f.write_str("trivial");
        }
        let parts: Vec<String> = self.invariant_factors.iter().map(|d| format!("Z/{d}")).collect();
        f.write_str(&parts.join(" x "))
    }
}

/// Gram matrix of `U^3 ⊕ E8(-1)^2 ⊕ <-2>`, rank 23.
pub fn big_l() -> GramLattice {
    let mut rows = vec![vec![0i64; 23]; 23];
    for k in 0..3 {
        rows[2 * k][2 * k + 1] = 1;
        rows[2 * k + 1][2 * k] = 1;
    }
    // E8 Dynkin diagram: chain 0-1-2-3-4-5-6 with node 7 attached to 4.
    let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)];
    for block in 0..2 {
        let off = 6 + 8 * block;
        for i in 0..8 {
            rows[off + i][off + i] = -2;
        }
        for &(i, j) in &edges {
            rows[off + i][off + j] = 1;
            rows[off + j][off + i] = 1;
        }
    }
    rows[22][22] = -2;
    GramLattice::from_i64(&rows).expect("nondegenerate")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn lambda11() -> GramLattice {
        GramLattice::from_i64(&[vec![15, 7], vec![7, 4]]).unwrap()
    }

    #[test]
    fn determinants() {
        assert_eq!(lambda11().determinant(), BigInt::from(11));
        let m = GramLattice::from_i64(&[vec![15, 7, 0], vec![7, 4, 0], vec![0, 0, 2]]).unwrap();
        assert_eq!(m.determinant(), BigInt::from(22));
        assert_eq!(GramLattice::from_i64(&[vec![1, 0], vec![0, 1]]).unwrap().determinant(), BigInt::one());
        assert!(GramLattice::from_i64(&[vec![1, 2], vec![2, 4]]).is_err());
        assert!(GramLattice::from_i64(&[vec![1, 2], vec![3, 4]]).is_err());
    }

    #[test]
    fn smith_examples() {
        let snf = smith_normal_form(&IntMatrix::from_i64(&[vec![2, 0], vec![0, 4]]).unwrap());
        assert_eq!(snf.diagonal(), big(&[2, 4]));
        let snf = smith_normal_form(lambda11().gram());
        assert_eq!(snf.diagonal(), big(&[1, 11]));
        let snf = smith_normal_form(&IntMatrix::from_i64(&[vec![0]]).unwrap());
        assert_eq!(snf.diagonal(), big(&[0]));
    }

    #[test]
    fn discriminant_groups() {
        let d = lambda11().discriminant_group();
        assert_eq!(d.invariant_factors, big(&[11]));
        let m24 = GramLattice::from_i64(&[vec![15, 7, 3], vec![7, 4, 1], vec![3, 1, 3]]).unwrap();
        let d = m24.discriminant_group();
        assert_eq!(d.invariant_factors, big(&[24]));
        assert!(d.represents_on_generator(QmodTwoZ::new(11, 24).unwrap()));
        assert!(!d.represents_on_generator(QmodTwoZ::new(1, 24).unwrap()));
        let u = GramLattice::from_i64(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert!(u.discriminant_group().invariant_factors.is_empty());
    }

    #[test]
    fn divisibility_examples() {
        let u = GramLattice::from_i64(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(u.divisibility(&big(&[1, 0])).unwrap(), BigInt::one());
        let m2 = GramLattice::from_i64(&[vec![-2]]).unwrap();
        assert_eq!(m2.divisibility(&big(&[1])).unwrap(), BigInt::from(2));
        assert_eq!(lambda11().divisibility(&big(&[1, 1])).unwrap(), BigInt::from(11));
        assert!(u.divisibility(&big(&[0, 0])).is_err());
    }

    #[test]
    fn saturation_examples() {
        assert_eq!(saturation(2, &[big(&[2, 0])]).unwrap(), vec![big(&[1, 0])]);
        let s = saturation(2, &[big(&[1, 0]), big(&[0, 1])]).unwrap();
        assert_eq!(smith_normal_form(&IntMatrix::new(s).unwrap()).diagonal(), big(&[1, 1]));
        let s = saturation(3, &[big(&[2, 2, 0]), big(&[0, 2, 2])]).unwrap();
        assert_eq!(s.len(), 2);
        for v in &s {
            assert_eq!(&v[0] - &v[1] + &v[2], BigInt::zero());
        }
        // primitive: the 2x3 matrix has trivial invariant factors
        assert_eq!(smith_normal_form(&IntMatrix::new(s).unwrap()).diagonal(), big(&[1, 1]));
        assert!(saturation(2, &[big(&[1, 1]), big(&[2, 2])]).is_err());
    }

    #[test]
    fn orthogonal_complement_examples() {
        let id = GramLattice::from_i64(&[vec![1, 0], vec![0, 1]]).unwrap();
        let c = id.orthogonal_complement(&[big(&[1, 0])]).unwrap();
        assert_eq!(c.gram(), &IntMatrix::from_i64(&[vec![1]]).unwrap());
        let u = GramLattice::from_i64(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert!(matches!(u.orthogonal_complement(&[big(&[1, 0])]), Err(Error::Degenerate(_))));
        let l = GramLattice::from_i64(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, -2]]).unwrap();
        // (1,1,1) is isotropic, so it lies in its own complement
        assert!(matches!(l.orthogonal_complement(&[big(&[1, 1, 1])]), Err(Error::Degenerate(_))));
        let c = l.orthogonal_complement(&[big(&[1, 0, 0])]).unwrap();
        assert_eq!(c.determinant(), BigInt::from(-2));
    }

    #[test]
    fn big_l_is_even_with_disc_two() {
        let l = big_l();
        assert!(l.is_even());
        assert_eq!(l.determinant(), BigInt::from(2));
        assert_eq!(l.discriminant_group().invariant_factors, big(&[2]));
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(-20i64..=20, c), r)
        })
    }

    fn symmetric_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..6).prop_flat_map(|n| {
            prop::collection::vec(-20i64..=20, n * n).prop_map(move |v| {
                let mut m = vec![vec![0; n]; n];
                for i in 0..n {
                    for j in 0..=i {
                        m[i][j] = v[i * n + j];
                        m[j][i] = v[i * n + j];
                    }
                }
                m
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn smith_round_trip(rows in small_matrix()) {
            let m = IntMatrix::from_i64(&rows).unwrap();
            let s = smith_normal_form(&m);
            prop_assert_eq!(s.u.mul(&m).unwrap().mul(&s.v).unwrap(), s.d.clone());
            prop_assert_eq!(s.u.determinant().unwrap().abs(), BigInt::one());
            prop_assert_eq!(s.v.determinant().unwrap().abs(), BigInt::one());
            prop_assert_eq!(s.v.mul(&s.v_inv).unwrap(), IntMatrix::identity(m.ncols()));
            for i in 0..s.d.nrows() {
                for j in 0..s.d.ncols() {
                    if i != j {
                        prop_assert!(s.d.get(i, j).is_zero());
                    }
                }
            }
            let diag = s.diagonal();
            for w in diag.windows(2) {
                prop_assert!(w[1].is_zero() || (!w[0].is_zero() && w[1].is_multiple_of(&w[0])));
                prop_assert!(!w[0].is_negative());
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn disc_group_order_is_abs_det(rows in symmetric_matrix()) {
            let m = IntMatrix::from_i64(&rows).unwrap();
            prop_assume!(!m.determinant().unwrap().is_zero());
            let l = GramLattice::new(m).unwrap();
            let d = l.discriminant_group();
            prop_assert_eq!(d.order(), l.determinant().abs());
            for (g, di) in d.generators.iter().zip(&d.invariant_factors) {
                for x in g {
                    prop_assert!((x * BigRational::from_integer(di.clone())).is_integer());
                }
                for row in l.gram().rows() {
                    let s: BigRational = row.iter().zip(g).map(|(a, b)| BigRational::from_integer(a.clone()) * b).sum();
                    prop_assert!(s.is_integer());
                }
            }
        }

        #[test]
        fn divisibility_divides_norm(rows in symmetric_matrix(), seed in prop::collection::vec(-9i64..=9, 5)) {
            let m = IntMatrix::from_i64(&rows).unwrap();
            prop_assume!(!m.determinant().unwrap().is_zero());
            let l = GramLattice::new(m).unwrap();
            let v: Vec<BigInt> = seed.iter().take(l.rank()).map(|&x| BigInt::from(x)).collect();
            prop_assume!(v.len() == l.rank() && v.iter().any(|x| !x.is_zero()));
            let div = l.divisibility(&v).unwrap();
            prop_assert!(l.pairing(&v, &v).is_multiple_of(&div));
        }

        #[test]
        fn saturation_is_idempotent(rows in small_matrix()) {
            let n = rows[0].len();
            let basis: Vec<Vec<BigInt>> = rows.iter().map(|r| big(r)).collect();
            prop_assume!(smith_normal_form(&IntMatrix::new(basis.clone()).unwrap()).rank() == basis.len());
            let s1 = saturation(n, &basis).unwrap();
            let s2 = saturation(n, &s1).unwrap();
            // same span: stacking either onto the other adds no rank and no index
            let mut both = s1.clone();
            both.extend(s2.iter().cloned());
            let snf = smith_normal_form(&IntMatrix::new(both).unwrap());
            prop_assert_eq!(snf.rank(), s1.len());
            prop_assert!(snf.diagonal().iter().take(s1.len()).all(|x| x.is_one()));
            let snf1 = smith_normal_form(&IntMatrix::new(s1.clone()).unwrap());
            prop_assert!(snf1.diagonal().iter().all(|x| x.is_one()));
        }

        #[test]
        fn unimodular_complement_matches_sublattice_det(a in -5i64..=5, b in -5i64..=5) {
            // primitive vector in U ⊕ U, complement discriminant equals |norm|
            prop_assume!(a.gcd(&b) == 1);
            let l = GramLattice::from_i64(&[vec![0,1,0,0], vec![1,0,0,0], vec![0,0,0,1], vec![0,0,1,0]]).unwrap();
            let v = big(&[1, a * b + 1, a, b]);
            let norm = l.pairing(&v, &v);
            prop_assume!(!norm.is_zero());
            let c = l.orthogonal_complement(&[v]).unwrap();
            prop_assert_eq!(c.determinant().abs(), norm.abs());
        }
    }
}
