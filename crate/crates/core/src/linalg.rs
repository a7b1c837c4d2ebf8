//! Dense linear algebra over an exact field.

use crate::error::{Error, Result};
use crate::poly::Field;

pub type Matrix<F> = Vec<Vec<<F as crate::poly::Ring>::Elem>>;

fn check_rect<T>(m: &[Vec<T>]) -> Result<usize> {
    let cols = m.first().map_or(0, |r| r.len());
    if m.iter().any(|r| r.len() != cols) {
        return Err(Error::Shape("ragged matrix".into()));
    }
    Ok(cols)
}

/// Reduced row echelon form and its pivot columns.
pub fn rref<F: Field>(field: &F, m: &[Vec<F::Elem>]) -> Result<(Matrix<F>, Vec<usize>)> {
    let cols = check_rect(m)?;
    let mut a: Matrix<F> = m.to_vec();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == a.len() {
            break;
        }
        let Some(p) = (row..a.len()).find(|&r| !field.is_zero(&a[r][col])) else {
            continue;
        };
        a.swap(p, row);
        let inv = field.inv(&a[row][col]).unwrap();
        for c in col..cols {
            a[row][c] = field.mul(&a[row][c], &inv);
        }
        for r in 0..a.len() {
            if r == row || field.is_zero(&a[r][col]) {
                continue;
            }
            let factor = a[r][col].clone();
            for c in col..cols {
                let v = field.mul(&factor, &a[row][c]);
                a[r][c] = field.sub(&a[r][c], &v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    Ok((a, pivots))
}

pub fn rank<F: Field>(field: &F, m: &[Vec<F::Elem>]) -> Result<usize> {
    Ok(rref(field, m)?.1.len())
}

/// Basis of `{x : m x = 0}`, one vector per free column.
pub fn nullspace<F: Field>(field: &F, m: &[Vec<F::Elem>], ncols: usize) -> Result<Matrix<F>> {
    if !m.is_empty() && check_rect(m)? != ncols {
        return Err(Error::Shape(format!("expected {ncols} columns")));
    }
    let (r, pivots) = rref(field, m)?;
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![field.zero(); ncols];
        v[free] = field.one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = field.neg(&r[i][free]);
        }
        basis.push(v);
    }
    Ok(basis)
}

/// Whether `v` lies in the row span of `m`.
pub fn in_row_span<F: Field>(field: &F, m: &[Vec<F::Elem>], v: &[F::Elem]) -> Result<bool> {
    let base = rank(field, m)?;
    let mut ext = m.to_vec();
    ext.push(v.to_vec());
    Ok(rank(field, &ext)? == base)
}

pub fn mat_vec<F: Field>(field: &F, m: &[Vec<F::Elem>], v: &[F::Elem]) -> Vec<F::Elem> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(field.zero(), |acc, (a, b)| field.add(&acc, &field.mul(a, b)))
        })
        .collect()
}

pub fn to_field_matrix<F: Field>(field: &F, m: &[Vec<i64>]) -> Matrix<F> {
    m.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect()
}
