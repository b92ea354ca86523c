use std::cmp::Ordering;

/// Exponent vector, one signed entry per variable.
///
/// Ordered by total degree first, then lexicographically with the first
/// variable most significant (graded lexicographic order).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<i64>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_sub(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    /// True when every exponent of `self` is at least the matching one of `other`.
    pub fn divisible_by(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex() {
        let a = Monomial(vec![2, 0, -1]);
        let b = Monomial(vec![0, 1, 0]);
        let c = Monomial(vec![1, 0, 0]);
        assert!(a > b || a == b || a < b);
        // equal total degree: lex decides, x1 beats x2
        assert!(c > b);
        assert!(a > b);
        assert!(Monomial(vec![0, 0, 2]) > c);
    }

    #[test]
    fn divisibility() {
        let a = Monomial(vec![2, 1]);
        assert!(a.divisible_by(&Monomial(vec![1, 1])));
        assert!(!a.divisible_by(&Monomial(vec![0, 2])));
        assert_eq!(a.div(&Monomial(vec![1, 1])).mul(&Monomial(vec![1, 1])), a);
    }
}
