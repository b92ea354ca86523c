use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::{One, Signed, Zero};

use crate::{Coeff, LaurentError, Monomial, Rational};

/// Ordered, immutable list of indeterminate names shared by a family of polynomials.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct VarSet {
    names: Vec<String>,
}

impl VarSet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Arc<VarSet> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = std::collections::HashSet::new();
        for n in &names {
            assert!(seen.insert(n.as_str()), "duplicate variable name {n}");
        }
        Arc::new(VarSet { names })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Finitely supported map from exponent vectors to nonzero rationals.
#[derive(Clone, Debug)]
pub struct LaurentPoly {
    vars: Arc<VarSet>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        same_vars(&self.vars, &other.vars) && self.terms == other.terms
    }
}

impl Eq for LaurentPoly {}

fn same_vars(a: &Arc<VarSet>, b: &Arc<VarSet>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl LaurentPoly {
    pub fn zero(vars: &Arc<VarSet>) -> Self {
        LaurentPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &Arc<VarSet>) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: &Arc<VarSet>, c: Rational) -> Self {
        Self::monomial(vars, Monomial::one(vars.len()), c)
    }

    pub fn monomial(vars: &Arc<VarSet>, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.0.len(), vars.len(), "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { vars: vars.clone(), terms }
    }

    /// The indeterminate at position `i`.
    pub fn var(vars: &Arc<VarSet>, i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(vars, Monomial(e), Rational::one())
    }

    pub fn var_named(vars: &Arc<VarSet>, name: &str) -> Result<Self, LaurentError> {
        let i = vars.index(name).ok_or_else(|| LaurentError::UnknownVariable(name.into()))?;
        Ok(Self::var(vars, i))
    }

    /// Build from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms(vars: &Arc<VarSet>, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.0.len(), vars.len(), "exponent vector length");
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Same as [`LaurentPoly::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(m, c)| m.is_one() && c.is_one())
    }

    /// Coefficient of the exponent-zero monomial.
    pub fn constant_term(&self) -> Rational {
        self.terms.get(&Monomial::one(self.vars.len())).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Highest term in graded lexicographic order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check(&self, other: &Self) -> Result<(), LaurentError> {
        if same_vars(&self.vars, &other.vars) {
            Ok(())
        } else {
            Err(LaurentError::VarMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check(other)?;
        let (mut big, small) = if self.len() >= other.len() { (self.clone(), other) } else { (other.clone(), self) };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        Ok(big)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check(other)?;
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(LaurentPoly { vars: self.vars.clone(), terms })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.vars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Componentwise minimum exponent over all terms (zero vector for the zero polynomial).
    pub fn min_exponents(&self) -> Monomial {
        let n = self.vars.len();
        let mut it = self.terms.keys();
        let Some(first) = it.next() else { return Monomial::one(n) };
        let mut lo = first.0.clone();
        for m in it {
            for (l, e) in lo.iter_mut().zip(&m.0) {
                *l = (*l).min(*e);
            }
        }
        Monomial(lo)
    }

    /// Inverse if `self` is a single term.
    pub fn inverse(&self) -> Option<Self> {
        if self.len() != 1 {
            return None;
        }
        let (m, c) = self.leading_term()?;
        let inv = Monomial(m.0.iter().map(|e| -e).collect());
        Some(Self::monomial(&self.vars, inv, c.recip()))
    }

    /// Exact quotient `self / den` in the Laurent ring.
    ///
    /// Both operands are shifted by their componentwise minimal exponents so
    /// they become ordinary polynomials, the shifted numerator is divided by
    /// the shifted denominator under graded lexicographic order, and a
    /// nonzero remainder is reported as [`LaurentError::InexactDivision`].
    pub fn exact_div(&self, den: &Self) -> Result<Self, LaurentError> {
        self.check(den)?;
        if den.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(&self.vars));
        }
        if let Some(inv) = den.inverse() {
            return Ok(self * &inv);
        }
        let sn = self.min_exponents();
        let sd = den.min_exponents();
        let neg = |m: &Monomial| Monomial(m.0.iter().map(|e| -e).collect());
        let mut rem = self.mul_monomial(&neg(&sn));
        let d = den.mul_monomial(&neg(&sd));
        let (dm, dc) = d.leading_term().map(|(m, c)| (m.clone(), c.clone())).expect("nonzero");
        let mut quot = BTreeMap::new();
        while let Some((lm, lc)) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            if !lm.divisible_by(&dm) {
                return Err(LaurentError::InexactDivision);
            }
            let qm = lm.div(&dm);
            let qc = &lc / &dc;
            for (m, c) in &d.terms {
                rem.add_term(m.mul(&qm), -(c * &qc));
            }
            quot.insert(qm, qc);
        }
        let q = LaurentPoly { vars: self.vars.clone(), terms: quot };
        Ok(q.mul_monomial(&sn.div(&sd)))
    }

    /// Exponent vector if `self` has exactly one term.
    pub fn monomial_exponents(&self) -> Option<Vec<i64>> {
        if self.len() == 1 {
            self.leading_term().map(|(m, _)| m.0.clone())
        } else {
            None
        }
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e != 0 {
                let mut m2 = m.clone();
                m2.0[i] -= 1;
                out.add_term(m2, c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    /// Exact substitution of rational values given by name.
    pub fn eval_named(&self, assignment: &BTreeMap<String, Rational>) -> Result<Rational, LaurentError> {
        let used = self.used_vars();
        let mut vals = vec![Rational::zero(); self.vars.len()];
        for &i in &used {
            let name = &self.vars.names()[i];
            vals[i] = assignment.get(name).cloned().ok_or_else(|| LaurentError::MissingValue(name.clone()))?;
        }
        self.eval_in(&vals, &Rational::one())
    }

    /// Indices of the variables that occur with a nonzero exponent.
    pub fn used_vars(&self) -> Vec<usize> {
        (0..self.vars.len()).filter(|&i| self.terms.keys().any(|m| m.0[i] != 0)).collect()
    }

    /// Substitute `vals[i]` for variable `i`, computing in coefficient ring `C`.
    ///
    /// `one` fixes the context of the result (for instance the variable set
    /// when `C` is itself a Laurent polynomial). Variables occurring with a
    /// negative exponent must map to invertible values.
    pub fn eval_in<C: Coeff>(&self, vals: &[C], one: &C) -> Result<C, LaurentError> {
        assert_eq!(vals.len(), self.vars.len(), "one value per variable");
        let n = self.vars.len();
        let mut inverses: Vec<Option<C>> = vec![None; n];
        let mut powers: HashMap<(usize, i64), C> = HashMap::new();
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                if e < 0 && inverses[i].is_none() {
                    let inv = vals[i]
                        .inverse()
                        .ok_or_else(|| LaurentError::ZeroToNegativePower(self.vars.names()[i].clone()))?;
                    inverses[i] = Some(inv);
                }
            }
        }
        let mut acc = one.zero_like();
        for (m, c) in &self.terms {
            let mut t = one.from_rational_like(c);
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = powers.entry((i, e)).or_insert_with(|| {
                    let base = if e > 0 { &vals[i] } else { inverses[i].as_ref().expect("inverse computed") };
                    base.pow_u(e.unsigned_abs())
                });
                t = t.times(p);
            }
            acc = acc.plus(&t);
        }
        Ok(acc)
    }

    /// Rename into another variable set by name; every used variable must exist there.
    pub fn reembed(&self, target: &Arc<VarSet>) -> Result<Self, LaurentError> {
        let map: Vec<Option<usize>> = self.vars.names().iter().map(|n| target.index(n)).collect();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &x) in m.0.iter().enumerate() {
                if x != 0 {
                    let j = map[i].ok_or_else(|| LaurentError::UnknownVariable(self.vars.names()[i].clone()))?;
                    e[j] = x;
                }
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Largest absolute exponent appearing anywhere.
    pub fn max_abs_exponent(&self) -> i64 {
        self.terms.keys().flat_map(|m| m.0.iter().map(|e| e.abs())).max().unwrap_or(0)
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// True when every coefficient is positive.
    pub fn has_positive_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl<'a> $tr<&'a LaurentPoly> for &'a LaurentPoly {
            type Output = LaurentPoly;
            /// Panics if the operands live over different variable sets.
            fn $m(self, rhs: &'a LaurentPoly) -> LaurentPoly {
                self.$f(rhs).expect("variable sets differ")
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$f(&rhs).expect("variable sets differ")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn xy() -> Arc<VarSet> {
        VarSet::new(["x", "y"])
    }

    #[test]
    fn cancellation_and_identity() {
        let v = xy();
        let x = LaurentPoly::var(&v, 0);
        let y = LaurentPoly::var(&v, 1);
        assert_eq!(&(&x + &y) + &(-&x), y);
        assert_eq!(&x + &LaurentPoly::zero(&v), x);
        let xi = x.inverse().unwrap();
        assert_eq!((&xi.scale(&rat(3, 1))) + &xi, xi.scale(&rat(4, 1)));
    }

    #[test]
    fn products() {
        let v = xy();
        let x = LaurentPoly::var(&v, 0);
        let y = LaurentPoly::var(&v, 1);
        assert!((&x * &x.inverse().unwrap()).is_one());
        assert_eq!(&(&x + &y) * &(&x - &y), &x.pow(2) - &y.pow(2));
        assert!((&x * &LaurentPoly::zero(&v)).is_zero());
    }

    #[test]
    fn division() {
        let v = xy();
        let x = LaurentPoly::var(&v, 0);
        let y = LaurentPoly::var(&v, 1);
        let num = &x.pow(2) - &y.pow(2);
        assert_eq!(num.exact_div(&(&x - &y)).unwrap(), &x + &y);
        assert_eq!((&x + &y).exact_div(&(&x - &y)), Err(LaurentError::InexactDivision));
        assert_eq!(x.exact_div(&LaurentPoly::zero(&v)), Err(LaurentError::DivisionByZero));
        // Laurent shift on both sides
        let d = &(&x + &y) * &y.inverse().unwrap().pow(3);
        let q = &(&x.inverse().unwrap() + &y) * &x;
        assert_eq!((&q * &d).exact_div(&d).unwrap(), q);
    }

    #[test]
    fn exchange_quotient_example() {
        let v = VarSet::new(["x1", "x2", "x3", "x-1", "x-2", "x-3"]);
        let g = |n: &str| LaurentPoly::var_named(&v, n).unwrap();
        let num = &(&g("x1") * &g("x-3").pow(2)) + &g("x2");
        let q = num.exact_div(&g("x3")).unwrap();
        let x3i = g("x3").inverse().unwrap();
        assert_eq!(q, &(&(&g("x1") * &g("x-3").pow(2)) * &x3i) + &(&g("x2") * &x3i));
    }

    #[test]
    fn eval_and_monomial() {
        let v = xy();
        let x = LaurentPoly::var(&v, 0);
        let y = LaurentPoly::var(&v, 1);
        let p = &x * &y.inverse().unwrap();
        let mut a = BTreeMap::new();
        a.insert("x".to_string(), rat(3, 1));
        a.insert("y".to_string(), rat(2, 1));
        assert_eq!(p.eval_named(&a).unwrap(), rat(3, 2));
        assert_eq!(LaurentPoly::constant(&v, rat(7, 1)).eval_named(&BTreeMap::new()).unwrap(), rat(7, 1));
        a.insert("y".to_string(), rat(0, 1));
        assert_eq!(p.eval_named(&a), Err(LaurentError::ZeroToNegativePower("y".into())));
        assert_eq!((&x.pow(3) * &y.pow(2)).monomial_exponents(), Some(vec![3, 2]));
        assert_eq!((&x + &y).monomial_exponents(), None);
        assert_eq!(LaurentPoly::zero(&v).monomial_exponents(), None);
    }

    #[test]
    fn mismatch() {
        let a = LaurentPoly::var(&xy(), 0);
        let b = LaurentPoly::var(&VarSet::new(["u"]), 0);
        assert_eq!(a.try_add(&b), Err(LaurentError::VarMismatch));
        assert_eq!(a.try_mul(&b), Err(LaurentError::VarMismatch));
    }

    #[test]
    fn derivative_leibniz() {
        let v = xy();
        let x = LaurentPoly::var(&v, 0);
        let y = LaurentPoly::var(&v, 1);
        let p = &x.pow(3) * &y;
        assert_eq!(p.derivative(0), &x.pow(2).scale(&rat(3, 1)) * &y);
        assert_eq!(p.derivative(1), x.pow(3));
    }
}
