use num::{One, Zero};

use crate::{LaurentPoly, Rational};

/// Minimal commutative-ring interface used for generic evaluation.
///
/// Constructors take `&self` so that values carrying context (the variable
/// set of a Laurent polynomial) can produce compatible constants.
pub trait Coeff: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_rational_like(&self, r: &Rational) -> Self;
    fn is_zero_value(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negate(&self) -> Self;
    /// Multiplicative inverse when it exists in the ring.
    fn inverse(&self) -> Option<Self>;

    fn pow_u(&self, mut e: u64) -> Self {
        let mut acc = self.one_like();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }

    fn pow_i(&self, e: i64) -> Option<Self> {
        if e >= 0 {
            Some(self.pow_u(e as u64))
        } else {
            self.inverse().map(|i| i.pow_u(e.unsigned_abs()))
        }
    }
}

impl Coeff for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn from_rational_like(&self, r: &Rational) -> Self {
        r.clone()
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negate(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Coeff for LaurentPoly {
    fn zero_like(&self) -> Self {
        LaurentPoly::zero(self.vars())
    }
    fn one_like(&self) -> Self {
        LaurentPoly::one(self.vars())
    }
    fn from_rational_like(&self, r: &Rational) -> Self {
        LaurentPoly::constant(self.vars(), r.clone())
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negate(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        LaurentPoly::inverse(self)
    }
}
