use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use laurent::{Coeff, LaurentPoly, Monomial, Rational, VarSet};
use num::{One, Zero};

use crate::chevalley::chevalley;
use crate::{weyl_lift_word, G2Error, GroupPoint, Mat};

/// The 49 entry variables `g11..g77`, row-major.
pub fn entry_vars() -> &'static Arc<VarSet> {
    static VARS: OnceLock<Arc<VarSet>> = OnceLock::new();
    VARS.get_or_init(|| VarSet::new((1..=7).flat_map(|a| (1..=7).map(move |b| format!("g{a}{b}")))))
}

/// A polynomial in the matrix entries of the 7-dimensional representation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RegFunction(LaurentPoly);

impl RegFunction {
    pub fn from_poly(p: LaurentPoly) -> Result<Self, G2Error> {
        Ok(RegFunction(p.reembed(entry_vars())?))
    }

    pub fn zero() -> Self {
        RegFunction(LaurentPoly::zero(entry_vars()))
    }

    pub fn constant(c: Rational) -> Self {
        RegFunction(LaurentPoly::constant(entry_vars(), c))
    }

    /// The coordinate g_ab (1-based).
    pub fn entry(a: usize, b: usize) -> Self {
        assert!((1..=7).contains(&a) && (1..=7).contains(&b), "entry index out of range");
        RegFunction(LaurentPoly::var(entry_vars(), (a - 1) * 7 + (b - 1)))
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RegFunction(self.0.scale(c))
    }

    pub fn pow(&self, e: u32) -> Self {
        RegFunction(self.0.pow(e))
    }

    /// Value at a group point over any coefficient ring.
    pub fn evaluate<C: Coeff>(&self, g: &GroupPoint<C>) -> C {
        self.evaluate_matrix(g.matrix())
    }

    pub fn evaluate_matrix<C: Coeff>(&self, m: &Mat<C>) -> C {
        self.0.eval_in(&m.entries(), &m.like().one_like()).expect("polynomial has no negative exponents")
    }

    /// x ↦ F(x·M), as a polynomial: substitute g ↦ g·M.
    pub fn right_translate(&self, m: &Mat<Rational>) -> Self {
        let images = product_entries(m);
        RegFunction(self.0.eval_in(&images, &LaurentPoly::one(entry_vars())).expect("polynomial"))
    }

    /// X†F for the right-invariant derivation with g_ab ↦ (g·X)_ab.
    pub fn derivation(&self, x: &Mat<Rational>) -> Self {
        let images = product_entries(x);
        let mut out = LaurentPoly::zero(entry_vars());
        for i in self.0.used_vars() {
            if images[i].is_zero() {
                continue;
            }
            out = &out + &(&self.0.derivative(i) * &images[i]);
        }
        RegFunction(out)
    }

    /// Apply a chain of lowering operators written right to left: `[1, 2]` is f₁†f₂†.
    pub fn lower_chain(&self, ops: &[u8]) -> Self {
        ops.iter().rev().fold(self.clone(), |f, &i| lowering_derivation(i, &f))
    }

    /// Number of monomials in the entry variables.
    pub fn terms(&self) -> usize {
        self.0.len()
    }
}

/// Entries of g·M as linear polynomials in the g's.
fn product_entries(m: &Mat<Rational>) -> Vec<LaurentPoly> {
    let vars = entry_vars();
    let mut out = Vec::with_capacity(49);
    for a in 0..7 {
        for b in 0..7 {
            let terms = (0..7).filter(|&k| !m.get(k, b).is_zero()).map(|k| {
                let mut e = vec![0i64; 49];
                e[a * 7 + k] = 1;
                (Monomial(e), m.get(k, b).clone())
            });
            out.push(LaurentPoly::from_terms(vars, terms));
        }
    }
    out
}

pub fn lowering_derivation(i: u8, f: &RegFunction) -> RegFunction {
    f.derivation(chevalley().f(i))
}

pub fn raising_derivation(i: u8, f: &RegFunction) -> RegFunction {
    f.derivation(chevalley().e(i))
}

/// Δ^{ω₁} = g11 and Δ^{ω₂} = g11·g22 − g12·g21.
pub fn fundamental_minor(i: u8) -> Result<RegFunction, G2Error> {
    match i {
        1 => Ok(RegFunction::entry(1, 1)),
        2 => Ok(&(&RegFunction::entry(1, 1) * &RegFunction::entry(2, 2))
            - &(&RegFunction::entry(1, 2) * &RegFunction::entry(2, 1))),
        _ => Err(G2Error::BadIndex(i)),
    }
}

/// Δ^{wωᵢ}(x) = Δ^{ωᵢ}(x·w̄) for a reduced word of w.
pub fn generalized_minor(i: u8, word: &[u8]) -> Result<RegFunction, G2Error> {
    let base = fundamental_minor(i)?;
    let w = weyl_lift_word(word)?;
    Ok(base.right_translate(w.matrix()))
}

impl Add<&RegFunction> for &RegFunction {
    type Output = RegFunction;
    fn add(self, o: &RegFunction) -> RegFunction {
        RegFunction(&self.0 + &o.0)
    }
}

impl Sub<&RegFunction> for &RegFunction {
    type Output = RegFunction;
    fn sub(self, o: &RegFunction) -> RegFunction {
        RegFunction(&self.0 - &o.0)
    }
}

impl Mul<&RegFunction> for &RegFunction {
    type Output = RegFunction;
    fn mul(self, o: &RegFunction) -> RegFunction {
        RegFunction(&self.0 * &o.0)
    }
}

impl Neg for &RegFunction {
    type Output = RegFunction;
    fn neg(self) -> RegFunction {
        RegFunction(-&self.0)
    }
}

impl fmt::Display for RegFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Coeff for RegFunction {
    fn zero_like(&self) -> Self {
        RegFunction::zero()
    }
    fn one_like(&self) -> Self {
        RegFunction::constant(Rational::one())
    }
    fn from_rational_like(&self, r: &Rational) -> Self {
        RegFunction::constant(r.clone())
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
        self.0.inverse().map(RegFunction)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{one_param, Sign};
    use laurent::rat;

    #[test]
    fn constants_are_killed() {
        let c = RegFunction::constant(rat(5, 1));
        assert!(lowering_derivation(1, &c).is_zero());
        assert!(raising_derivation(2, &c).is_zero());
    }

    #[test]
    fn lowering_of_highest_minor() {
        let d1 = fundamental_minor(1).unwrap();
        assert!(lowering_derivation(2, &d1).is_zero());
        assert_eq!(lowering_derivation(1, &d1), generalized_minor(1, &[1]).unwrap());
    }

    #[test]
    fn highest_vectors() {
        for i in [1, 2] {
            let d = fundamental_minor(i).unwrap();
            assert!(raising_derivation(1, &d).is_zero());
            assert!(raising_derivation(2, &d).is_zero());
        }
    }

    #[test]
    fn value_on_root_subgroup() {
        // Δ^{s₁ω₁}(x₁(t)) = t
        let t = rat(7, 3);
        let g = one_param(1, t.clone(), Sign::Raise).unwrap();
        assert_eq!(generalized_minor(1, &[1]).unwrap().evaluate(&g), t);
        assert_eq!(fundamental_minor(1).unwrap().evaluate(&g), rat(1, 1));
    }

    #[test]
    fn derivation_is_linear_coefficient_of_flow() {
        // F(g·exp(tX)) is a polynomial in t whose linear coefficient is X†F(g).
        let f = generalized_minor(2, &[2, 1]).unwrap();
        let c = chevalley();
        let g = one_param(2, rat(3, 2), Sign::Lower).unwrap().mul(&one_param(1, rat(-2, 1), Sign::Raise).unwrap());
        let tv = VarSet::new(["t"]);
        let t = LaurentPoly::var(&tv, 0);
        let lift = |m: &Mat<Rational>| m.map(|r| LaurentPoly::constant(&tv, r.clone()));
        let flow = lift(g.matrix()).mul(&lift(c.f(1)).exp_nilpotent(&t));
        let along = f.evaluate_matrix(&flow);
        let slope = along.coefficient(&Monomial(vec![1]));
        assert_eq!(lowering_derivation(1, &f).evaluate(&g), slope);
    }
}
