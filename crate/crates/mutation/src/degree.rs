use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::{ExchangeMatrix, MutationError};

/// Tri-degree (n, p, q): membership in the (pα₁ + qα₂)-weight space of V_{nω}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DegreeVector {
    pub n: i64,
    pub p: i64,
    pub q: i64,
}

impl DegreeVector {
    pub const ZERO: DegreeVector = DegreeVector { n: 0, p: 0, q: 0 };

    pub const fn new(n: i64, p: i64, q: i64) -> Self {
        DegreeVector { n, p, q }
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n, self.p, self.q)
    }
}

impl Add for DegreeVector {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        DegreeVector::new(self.n + o.n, self.p + o.p, self.q + o.q)
    }
}

impl Sub for DegreeVector {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        DegreeVector::new(self.n - o.n, self.p - o.p, self.q - o.q)
    }
}

impl Neg for DegreeVector {
    type Output = Self;
    fn neg(self) -> Self {
        DegreeVector::new(-self.n, -self.p, -self.q)
    }
}

impl Mul<DegreeVector> for i64 {
    type Output = DegreeVector;
    fn mul(self, d: DegreeVector) -> DegreeVector {
        DegreeVector::new(self * d.n, self * d.p, self * d.q)
    }
}

/// Degree of the new variable at `k`: Σ [b_ik]₊ deg(x_i) − deg(x_k),
/// after checking that both exchange monomials have the same degree.
pub fn propagate_degrees(
    degrees: &BTreeMap<i32, DegreeVector>,
    b: &ExchangeMatrix,
    k: i32,
) -> Result<DegreeVector, MutationError> {
    let kc = b.col_index(k)?;
    let mut plus = DegreeVector::ZERO;
    let mut minus = DegreeVector::ZERO;
    for (row, l) in b.rows().iter().zip(b.labels()) {
        let d = *degrees.get(l).ok_or(MutationError::UnknownLabel(*l))?;
        let x = row[kc];
        if x > 0 {
            plus = plus + x * d;
        } else if x < 0 {
            minus = minus + (-x) * d;
        }
    }
    if plus != minus {
        return Err(MutationError::HomogeneityViolation { k, plus: plus.to_string(), minus: minus.to_string() });
    }
    Ok(plus - degrees[&k])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn initial() -> BTreeMap<i32, DegreeVector> {
        [
            (1, DegreeVector::new(1, -1, -1)),
            (2, DegreeVector::new(3, 3, 1)),
            (3, DegreeVector::new(1, 1, 0)),
            (-1, DegreeVector::new(1, -2, -1)),
            (-2, DegreeVector::new(3, 0, 0)),
            (-3, DegreeVector::new(1, 2, 1)),
        ]
        .into_iter()
        .collect()
    }

    #[test]
    fn first_exchange_degree() {
        let d = propagate_degrees(&initial(), &catalog::underline_matrix(1), 3).unwrap();
        assert_eq!(d, DegreeVector::new(2, 2, 1));
    }

    #[test]
    fn empty_column_negates() {
        let b = ExchangeMatrix::new(vec![1, 2, -1], 2, vec![vec![0, 0], vec![0, 0], vec![0, 0]]).unwrap();
        let degs = [(1, DegreeVector::new(1, 2, 3)), (2, DegreeVector::ZERO), (-1, DegreeVector::ZERO)]
            .into_iter()
            .collect();
        assert_eq!(propagate_degrees(&degs, &b, 1).unwrap(), DegreeVector::new(-1, -2, -3));
    }

    #[test]
    fn inhomogeneous_rejected() {
        let mut degs = initial();
        degs.insert(-3, DegreeVector::new(2, 2, 1));
        assert!(matches!(
            propagate_degrees(&degs, &catalog::underline_matrix(1), 3),
            Err(MutationError::HomogeneityViolation { k: 3, .. })
        ));
    }
}
