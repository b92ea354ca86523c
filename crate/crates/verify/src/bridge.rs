//! Values of registry expressions and of seed variables at group points.
//!
//! Seed variables are Laurent polynomials in `x<label>`; an [`Assignment`]
//! names the function on G standing behind each label. Evaluation clears
//! denominators first and finishes with one exact division, so the same code
//! serves rational points and symbolic ones.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use g2rep::group::symbolic_point;
use g2rep::{registry, GroupPoint, PointFunction, RegFunction};
use laurent::{Coeff, LaurentPoly, Monomial, Rational};
use mutation::seed::var_name;
use num::Zero;

use crate::VerifyError;

/// Coefficient types points can carry.
pub trait Carrier: Coeff + fmt::Display + PartialEq + Send + Sync {
    /// Exact quotient, if it exists.
    fn divide(&self, d: &Self) -> Option<Self>;
}

impl Carrier for Rational {
    fn divide(&self, d: &Self) -> Option<Self> {
        (!d.is_zero()).then(|| self / d)
    }
}

impl Carrier for LaurentPoly {
    fn divide(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        self.exact_div(d).ok()
    }
}

/// A point with the registry atoms evaluated once.
#[derive(Clone, Debug)]
pub struct PointValues<C> {
    pub point: GroupPoint<C>,
    pub atoms: Vec<C>,
}

impl<C: Carrier> PointValues<C> {
    pub fn new(point: GroupPoint<C>) -> Self {
        let atoms = registry().atom_values(&point);
        PointValues { point, atoms }
    }
}

/// The eight-parameter symbolic point, evaluated once per process.
pub fn symbolic_values() -> &'static PointValues<LaurentPoly> {
    static PV: OnceLock<PointValues<LaurentPoly>> = OnceLock::new();
    PV.get_or_init(|| PointValues::new(symbolic_point()))
}

/// A function on G: a polynomial in registry atoms, or a polynomial in the entries.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Formula(LaurentPoly),
    Direct(RegFunction),
}

impl Expr {
    /// Parse an expression over registry names.
    pub fn parse(text: &str) -> Result<Expr, VerifyError> {
        Ok(Expr::Formula(registry().formula(text)?))
    }

    pub fn value<C: Carrier>(&self, pv: &PointValues<C>) -> C {
        match self {
            Expr::Formula(f) => registry().eval_formula(f, &pv.atoms).expect("formulas are polynomial"),
            Expr::Direct(f) => f.evaluate(&pv.point),
        }
    }

    /// As a polynomial in the entries.
    pub fn expand(&self) -> RegFunction {
        match self {
            Expr::Formula(f) => registry().expand(f),
            Expr::Direct(f) => f.clone(),
        }
    }
}

impl PointFunction for Expr {
    fn at_rational(&self, g: &GroupPoint<Rational>) -> Result<Rational, g2rep::G2Error> {
        Ok(self.value(&PointValues::new(g.clone())))
    }
    fn at_symbolic(&self, g: &GroupPoint<LaurentPoly>) -> Result<LaurentPoly, g2rep::G2Error> {
        Ok(self.value(&PointValues::new(g.clone())))
    }
}

/// Label → function for a seed's extended cluster.
#[derive(Clone, Debug, PartialEq)]
pub struct Assignment {
    entries: BTreeMap<i32, (String, Expr)>,
}

impl Assignment {
    /// Each pair is a label and a registry expression (usually a single name).
    pub fn new(pairs: &[(i32, &str)]) -> Result<Self, VerifyError> {
        let mut entries = BTreeMap::new();
        for &(l, text) in pairs {
            entries.insert(l, (text.to_string(), Expr::parse(text)?));
        }
        Ok(Assignment { entries })
    }

    pub fn labels(&self) -> impl Iterator<Item = i32> + '_ {
        self.entries.keys().copied()
    }

    pub fn name(&self, label: i32) -> Result<&str, VerifyError> {
        self.entries.get(&label).map(|(n, _)| n.as_str()).ok_or(VerifyError::Unassigned(label))
    }

    pub fn expr(&self, label: i32) -> Result<&Expr, VerifyError> {
        self.entries.get(&label).map(|(_, e)| e).ok_or(VerifyError::Unassigned(label))
    }

    /// Relabel through `(new, old)` pairs; old labels not listed are dropped.
    pub fn relabeled(&self, corr: &[(i32, i32)]) -> Result<Self, VerifyError> {
        let mut entries = BTreeMap::new();
        for &(new, old) in corr {
            let e = self.entries.get(&old).ok_or(VerifyError::Unassigned(old))?;
            entries.insert(new, e.clone());
        }
        Ok(Assignment { entries })
    }

    /// (label, name) pairs for reports.
    pub fn listing(&self) -> Vec<(i32, String)> {
        self.entries.iter().map(|(l, (n, _))| (*l, n.clone())).collect()
    }
}

fn label_of(name: &str) -> Result<i32, VerifyError> {
    name.strip_prefix('x')
        .and_then(|s| s.parse().ok())
        .filter(|l| var_name(*l) == name)
        .ok_or_else(|| VerifyError::ForeignVariable(name.to_string()))
}

/// Value of a seed Laurent polynomial with each `x<label>` replaced by its assigned function.
pub fn bridge_evaluate<C: Carrier>(p: &LaurentPoly, a: &Assignment, pv: &PointValues<C>) -> Result<C, VerifyError> {
    let names = p.vars().names();
    let used = p.used_vars();
    let like = &pv.atoms[0];
    let mut values: Vec<C> = vec![like.one_like(); names.len()];
    for &i in &used {
        values[i] = a.expr(label_of(&names[i])?)?.value(pv);
    }
    // p = q / x^m with q polynomial
    let shift: Vec<i64> = p.min_exponents().0.iter().map(|&e| (-e).max(0)).collect();
    let q = p.mul_monomial(&Monomial(shift.clone()));
    let one = like.one_like();
    let num = q.eval_in(&values, &one)?;
    let mut den = one.clone();
    for (i, &e) in shift.iter().enumerate() {
        if e > 0 {
            if values[i].is_zero_value() {
                return Err(VerifyError::Vanishing(label_of(&names[i])?));
            }
            den = den.times(&values[i].pow_u(e as u64));
        }
    }
    num.divide(&den).ok_or(VerifyError::Vanishing(0))
}

/// Either side of a checked equality.
#[derive(Clone, Debug)]
pub enum Target {
    Expr(Expr),
    Bridged { poly: LaurentPoly, assignment: Assignment },
}

impl Target {
    pub fn expr(text: &str) -> Result<Target, VerifyError> {
        Ok(Target::Expr(Expr::parse(text)?))
    }

    pub fn bridged(poly: &LaurentPoly, assignment: &Assignment) -> Target {
        Target::Bridged { poly: poly.clone(), assignment: assignment.clone() }
    }

    pub fn value<C: Carrier>(&self, pv: &PointValues<C>) -> Result<C, VerifyError> {
        match self {
            Target::Expr(e) => Ok(e.value(pv)),
            Target::Bridged { poly, assignment } => bridge_evaluate(poly, assignment, pv),
        }
    }
}

impl PointFunction for Target {
    fn at_rational(&self, g: &GroupPoint<Rational>) -> Result<Rational, g2rep::G2Error> {
        self.value(&PointValues::new(g.clone()))
            .map_err(|e| g2rep::G2Error::NotHomogeneous(e.to_string()))
    }
    fn at_symbolic(&self, g: &GroupPoint<LaurentPoly>) -> Result<LaurentPoly, g2rep::G2Error> {
        self.value(&PointValues::new(g.clone()))
            .map_err(|e| g2rep::G2Error::NotHomogeneous(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Config;
    use mutation::{catalog, Seed};

    fn sigma1() -> Assignment {
        Assignment::new(&[
            (1, "Delta_s2s1s2s1_omega1"),
            (2, "X2"),
            (3, "Delta_s2s1_omega1"),
            (-1, "Delta_w0_omega1"),
            (-2, "X-2"),
            (-3, "Delta_omega1"),
        ])
        .unwrap()
    }

    #[test]
    fn initial_variable_is_its_function() {
        let s = Seed::initial(catalog::underline_matrix(1));
        let pv = PointValues::new(Config::default().points("t", 1).remove(0));
        let got = bridge_evaluate(s.variable(-3).unwrap(), &sigma1(), &pv).unwrap();
        assert_eq!(got, Expr::parse("Delta_omega1").unwrap().value(&pv));
    }

    #[test]
    fn first_exchange_matches_closed_expression() {
        let s = Seed::initial(catalog::underline_matrix(1)).mutate(3).unwrap();
        let want = Expr::parse("Delta_s1_omega1*Delta_s2s1_omega1 + -1*Delta_omega1*X0").unwrap();
        for g in Config::default().points("first", 3) {
            let pv = PointValues::new(g);
            assert_eq!(bridge_evaluate(s.variable(3).unwrap(), &sigma1(), &pv).unwrap(), want.value(&pv));
        }
        let sym = symbolic_values();
        assert_eq!(bridge_evaluate(s.variable(3).unwrap(), &sigma1(), sym).unwrap(), want.value(sym));
    }

    #[test]
    fn foreign_variables_rejected() {
        let v = laurent::VarSet::new(["y1"]);
        let p = LaurentPoly::var(&v, 0);
        let pv = PointValues::new(Config::default().points("f", 1).remove(0));
        assert!(matches!(bridge_evaluate(&p, &sigma1(), &pv), Err(VerifyError::ForeignVariable(_))));
    }
}
