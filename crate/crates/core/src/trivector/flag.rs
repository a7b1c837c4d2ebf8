use crate::error::{Error, Result};
use crate::linalg::{in_row_span, rank, to_field_matrix};
use crate::poly::{Field, Rationals};

use super::DIM;

/// A flag `W1 ⊂ W6 ⊂ V10`: a nonzero vector and six independent rows spanning a space that contains it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flag {
    w1: Vec<i64>,
    w6: Vec<Vec<i64>>,
}

impl Flag {
    pub fn new(w1: Vec<i64>, w6: Vec<Vec<i64>>) -> Result<Self> {
        if w1.len() != DIM || w6.len() != 6 || w6.iter().any(|r| r.len() != DIM) {
            return Err(Error::Shape("flag needs a 10-vector and a 6x10 matrix".into()));
        }
        if w1.iter().all(|&x| x == 0) {
            return Err(Error::InvalidInput("W1 is spanned by the zero vector".into()));
        }
        let q = Rationals;
        let m = to_field_matrix(&q, &w6);
        if rank(&q, &m)? != 6 {
            return Err(Error::InvalidInput("W6 rows are not independent".into()));
        }
        let v: Vec<_> = w1.iter().map(|&x| q.from_i64(x)).collect();
        if !in_row_span(&q, &m, &v)? {
            return Err(Error::InvalidInput("W1 is not contained in W6".into()));
        }
        Ok(Flag { w1, w6 })
    }

    /// `W1 = <e1>`, `W6 = <e1, ..., e6>`.
    pub fn standard() -> Self {
        Self::parse_shorthand("e1:e1..e6").expect("valid")
    }

    pub fn w1(&self) -> &[i64] {
        &self.w1
    }

    pub fn w6(&self) -> &[Vec<i64>] {
        &self.w6
    }

    pub fn w1_in<F: Field>(&self, f: &F) -> Vec<F::Elem> {
        self.w1.iter().map(|&x| f.from_i64(x)).collect()
    }

    pub fn w6_in<F: Field>(&self, f: &F) -> Vec<Vec<F::Elem>> {
        to_field_matrix(f, &self.w6)
    }

    /// `eA:LIST` where `LIST` is comma-separated `eN` or `eA..eB` items (1-based).
    pub fn parse_shorthand(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("bad flag shorthand '{s}', expected e.g. e1:e1..e6"));
        let (a, b) = s.split_once(':').ok_or_else(bad)?;
        let w1 = unit(basis_index(a.trim()).ok_or_else(bad)?);
        let mut w6 = Vec::new();
        for item in b.split(',') {
            let item = item.trim();
            match item.split_once("..") {
                Some((lo, hi)) => {
                    let lo = basis_index(lo).ok_or_else(bad)?;
                    let hi = basis_index(hi).ok_or_else(bad)?;
                    if lo > hi {
                        return Err(bad());
                    }
                    w6.extend((lo..=hi).map(unit));
                }
                None => w6.push(unit(basis_index(item).ok_or_else(bad)?)),
            }
        }
        Self::new(w1, w6)
    }

    /// Seven lines of ten integers: `W1` first, then the rows of `W6`. `#` starts a comment.
    pub fn parse_file(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let row: Vec<i64> = line
                .split_whitespace()
                .map(|t| t.parse::<i64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Parse {
                    line: n + 1,
                    msg: "expected integers".into(),
                })?;
            rows.push(row);
        }
        if rows.len() != 7 {
            return Err(Error::Parse {
                line: 0,
                msg: format!("flag file needs 7 rows, found {}", rows.len()),
            });
        }
        let w1 = rows.remove(0);
        Self::new(w1, rows)
    }
}

fn basis_index(s: &str) -> Option<usize> {
    let n: usize = s.strip_prefix('e')?.parse().ok()?;
    n.checked_sub(1).filter(|&i| i < DIM)
}

fn unit(i: usize) -> Vec<i64> {
    (0..DIM).map(|j| i64::from(i == j)).collect()
}
