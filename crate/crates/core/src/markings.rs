//! Markings `M_d ⊃ Λ11` of special Peskine sixfolds: admissible
//! discriminants, the orbit representative for each `d`, and the closed-form
//! discriminant form, checked against the lattice computation.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::lattice::{DiscGroup, GramLattice};
use crate::numbers::QmodTwoZ;

const ADMISSIBLE_RESIDUES: [i64; 6] = [0, 2, 6, 8, 10, 18];

pub fn admissible(d: i64) -> bool {
    admissibility_failure(d).is_none()
}

/// Why `d` is not admissible, or `None` if it is.
pub fn admissibility_failure(d: i64) -> Option<String> {
    if d <= 0 {
        return Some(format!("{d} is not positive"));
    }
    if d % 2 != 0 {
        return Some(format!("{d} is odd"));
    }
    let r = d % 22;
    if !ADMISSIBLE_RESIDUES.contains(&r) {
        return Some(format!("{d} mod 22 = {r} not admissible"));
    }
    None
}

pub(crate) fn require_admissible(d: i64) -> Result<()> {
    match admissibility_failure(d) {
        Some(reason) => Err(Error::NotAdmissible { d, reason }),
        None => Ok(()),
    }
}

/// Discriminants whose divisors are not in the image of trivector moduli.
pub fn hls_set() -> [i64; 5] {
    [2, 6, 8, 10, 18]
}

pub fn lambda11() -> GramLattice {
    GramLattice::from_i64(&[vec![15, 7], vec![7, 4]]).expect("nondegenerate")
}

#[derive(Debug, Clone, PartialEq)]
pub struct MarkingGram {
    pub d: i64,
    pub abc: (i64, i64, i64),
    pub lattice: GramLattice,
}

impl MarkingGram {
    pub fn rows(&self) -> [[i64; 3]; 3] {
        let (a, b, c) = self.abc;
        [[15, 7, a], [7, 4, b], [a, b, c]]
    }
}

pub fn marking_gram(d: i64) -> Result<MarkingGram> {
    require_admissible(d)?;
    let abc = match d % 22 {
        0 => (0, 0, d / 11),
        2 => (3, 1, (d + 9) / 11),
        6 => (1, 1, (d + 5) / 11),
        8 => (2, 1, (d + 3) / 11),
        10 => (3, 2, (d + 12) / 11),
        18 => (1, 0, (d + 4) / 11),
        _ => unreachable!("admissible residues are covered"),
    };
    let (a, b, c) = abc;
    let lattice = GramLattice::from_i64(&[vec![15, 7, a], vec![7, 4, b], vec![a, b, c]])?;
    debug_assert_eq!(lattice.determinant(), BigInt::from(d));
    Ok(MarkingGram { d, abc, lattice })
}

/// Closed-form discriminant group and form of `M_d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosedDiscForm {
    Cyclic { order: i64, q: QmodTwoZ },
    /// `Z/11 x Z/d'` with `11 | d'`; no single generator.
    NonCyclic { factors: [i64; 2] },
}

impl fmt::Display for ClosedDiscForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedDiscForm::Cyclic { order, q } => write!(f, "Z/{order}, q = {q}"),
            ClosedDiscForm::NonCyclic { factors } => write!(f, "Z/{} x Z/{}", factors[0], factors[1]),
        }
    }
}

pub fn disc_form_closed(d: i64) -> Result<ClosedDiscForm> {
    require_admissible(d)?;
    if d % 22 != 0 {
        return Ok(ClosedDiscForm::Cyclic {
            order: d,
            q: QmodTwoZ::new(11, d)?,
        });
    }
    let dp = d / 11;
    if dp % 11 == 0 {
        return Ok(ClosedDiscForm::NonCyclic { factors: [11, dp] });
    }
    Ok(ClosedDiscForm::Cyclic {
        order: d,
        q: QmodTwoZ::new(3, 11)? + QmodTwoZ::new(1, dp)?,
    })
}

/// Outcome of comparing the closed form with the lattice computation for one `d`.
#[derive(Debug, Clone)]
pub struct MarkingCheck {
    pub d: i64,
    pub closed: ClosedDiscForm,
    pub computed: DiscGroup,
    pub det_ok: bool,
    pub group_ok: bool,
    pub form_ok: bool,
}

impl MarkingCheck {
    pub fn passed(&self) -> bool {
        self.det_ok && self.group_ok && self.form_ok
    }
}

pub fn cross_validate(d: i64) -> Result<MarkingCheck> {
    let m = marking_gram(d)?;
    let closed = disc_form_closed(d)?;
    let computed = m.lattice.discriminant_group();
    let det_ok = m.lattice.determinant() == BigInt::from(d);
    let block_ok = (0..2).all(|i| (0..2).all(|j| m.lattice.gram().get(i, j) == lambda11().gram().get(i, j)));
    let factors: Vec<i64> = computed
        .invariant_factors
        .iter()
        .map(|x| x.to_i64().expect("fits"))
        .collect();
    let (group_ok, form_ok) = match &closed {
        ClosedDiscForm::Cyclic { order, q } => {
            (factors == vec![*order], computed.represents_on_generator(*q))
        }
        ClosedDiscForm::NonCyclic { factors: f } => (factors == f.to_vec(), true),
    };
    Ok(MarkingCheck {
        d,
        closed,
        computed,
        det_ok: det_ok && block_ok,
        group_ok,
        form_ok,
    })
}
