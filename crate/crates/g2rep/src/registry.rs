//! Named functions on G₂.
//!
//! Atoms are built from the two fundamental minors by lowering chains (and,
//! for the extremal minors, also by right translation with a Weyl lift).
//! Composite functions are stored as polynomial formulas in the atoms so they
//! can be evaluated atom-first at symbolic points.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use laurent::{rat, Coeff, LaurentPoly, Rational, VarSet};
use serde::Serialize;

use crate::regfun::fundamental_minor;
use crate::{generalized_minor, G2Error, GroupPoint, RegFunction};

#[derive(Clone, Debug)]
pub struct NamedFunction {
    pub name: String,
    /// Human-readable construction, e.g. `"1/2 f1 f1 Delta_s2s1_omega1"`.
    pub recipe: String,
    /// Which fundamental representation the function is built from (1 or 2).
    pub family: u8,
    /// The function as a polynomial in g11..g77.
    pub function: RegFunction,
    /// For extremal minors: the word used for the translation definition.
    pub word: Option<Vec<u8>>,
    /// For composites: the defining formula over the atom variables.
    pub formula: Option<LaurentPoly>,
}

#[derive(Serialize)]
struct ListingEntry<'a> {
    name: &'a str,
    kind: &'a str,
    family: u8,
    recipe: &'a str,
    word: Option<&'a [u8]>,
    terms: usize,
}

/// All named functions, with atoms in a fixed order that doubles as the
/// variable order of composite formulas.
#[derive(Debug)]
pub struct Registry {
    atoms: Vec<String>,
    atom_vars: Arc<VarSet>,
    /// Atoms followed by composites, for parsing expressions that mention either.
    name_vars: Arc<VarSet>,
    substitution: Vec<LaurentPoly>,
    functions: BTreeMap<String, NamedFunction>,
    translation: BTreeMap<String, RegFunction>,
}

/// Lowering chain written in operator order, applied right to left, times `c`.
fn chain(f: &RegFunction, ops: &[u8], c: Rational) -> RegFunction {
    f.lower_chain(ops).scale(&c)
}

fn ops_text(ops: &[u8]) -> String {
    ops.iter().map(|i| format!("f{i}")).collect::<Vec<_>>().join(" ")
}

impl Registry {
    fn build() -> Self {
        let mut r = Registry {
            atoms: Vec::new(),
            atom_vars: VarSet::new(Vec::<String>::new()),
            name_vars: VarSet::new(Vec::<String>::new()),
            substitution: Vec::new(),
            functions: BTreeMap::new(),
            translation: BTreeMap::new(),
        };
        let d1 = fundamental_minor(1).expect("index 1");
        let d2 = fundamental_minor(2).expect("index 2");
        r.atom("Delta_omega1", "g11", 1, d1.clone(), Some(vec![]));
        r.atom("Delta_omega2", "g11*g22 - g12*g21", 2, d2.clone(), Some(vec![]));

        // (name, source, ops, coefficient, word for translation)
        type Step = (&'static str, &'static str, &'static [u8], (i64, i64), Option<&'static [u8]>);
        let steps: &[Step] = &[
            ("Delta_s1_omega1", "Delta_omega1", &[1], (1, 1), Some(&[1])),
            ("Delta_s2s1_omega1", "Delta_s1_omega1", &[2], (1, 1), Some(&[2, 1])),
            ("Delta_s1s2s1_omega1", "Delta_s2s1_omega1", &[1, 1], (1, 2), Some(&[1, 2, 1])),
            ("Delta_s2s1s2s1_omega1", "Delta_s1s2s1_omega1", &[2], (1, 1), Some(&[2, 1, 2, 1])),
            ("Delta_w0_omega1", "Delta_s2s1s2s1_omega1", &[1], (1, 1), Some(&[1, 2, 1, 2, 1, 2])),
            ("X0", "Delta_omega1", &[1, 2, 1], (1, 2), None),
            ("Delta_s2_omega2", "Delta_omega2", &[2], (1, 1), Some(&[2])),
            // weight bookkeeping forces f1 here; the printed chain uses f2
            ("Delta_s1s2_omega2", "Delta_s2_omega2", &[1, 1, 1], (1, 6), Some(&[1, 2])),
            ("Delta_s1s2_omega2_as_printed", "Delta_s2_omega2", &[2, 2, 2], (1, 6), None),
            ("Delta_s2s1s2_omega2", "Delta_s1s2_omega2", &[2, 2], (1, 2), Some(&[2, 1, 2])),
            ("Delta_s1s2s1s2_omega2", "Delta_s2s1s2_omega2", &[1, 1, 1], (1, 6), Some(&[1, 2, 1, 2])),
            ("Delta_w0_omega2", "Delta_s1s2s1s2_omega2", &[2], (1, 1), Some(&[2, 1, 2, 1, 2, 1])),
            ("F(2,1)", "Delta_s2_omega2", &[1], (1, 3), None),
            ("F(1,1)", "F(2,1)", &[1], (1, 2), None),
            ("F(1,0)", "F(1,1)", &[2], (1, 1), None),
            ("F(-1,-1)", "Delta_s2s1s2_omega2", &[1], (1, 3), None),
            ("F(-2,-1)", "F(-1,-1)", &[1], (1, 2), None),
            ("Y2", "Delta_omega2", &[1, 1, 2], (1, 6), None),
        ];
        for &(name, src, ops, (n, d), word) in steps {
            let f = chain(&r.functions[src].function, ops, rat(n, d));
            let coef = if (n, d) == (1, 1) { String::new() } else { format!("{n}/{d} ") };
            let family = r.functions[src].family;
            r.atom(name, &format!("{coef}{} {src}", ops_text(ops)), family, f, word.map(<[u8]>::to_vec));
        }
        // (2 f1 f2 − f2 f1) applied to F(1,1) and to Y2
        for (name, src) in [("F1(0,0)", "F(1,1)"), ("Y-2", "Y2")] {
            let s = r.functions[src].function.clone();
            let f = &chain(&s, &[1, 2], rat(2, 1)) - &s.lower_chain(&[2, 1]);
            r.atom(name, &format!("(2 f1 f2 - f2 f1) {src}"), 2, f, None);
        }
        let f2 = {
            let a = r.functions["Delta_s1s2_omega2"].function.lower_chain(&[2]);
            (&a - &r.functions["F1(0,0)"].function).scale(&rat(1, 2))
        };
        r.atom("F2(0,0)", "1/2 (f2 Delta_s1s2_omega2 - F1(0,0))", 2, f2, None);
        let fm10 = r.functions["F1(0,0)"].function.lower_chain(&[1]);
        r.atom("F(-1,0)", "f1 F1(0,0)", 2, fm10, None);

        r.atom_vars = VarSet::new(r.atoms.clone());
        for (name, family, text) in COMPOSITES {
            let formula = LaurentPoly::parse(text, &r.atom_vars).expect("composite formula");
            let function = r.expand(&formula);
            r.functions.insert(
                name.to_string(),
                NamedFunction {
                    name: name.to_string(),
                    recipe: text.to_string(),
                    family: *family,
                    function,
                    word: None,
                    formula: Some(formula),
                },
            );
        }
        let mut names = r.atoms.clone();
        let mut substitution: Vec<LaurentPoly> =
            (0..r.atoms.len()).map(|i| LaurentPoly::var(&r.atom_vars, i)).collect();
        for (name, _, _) in COMPOSITES {
            names.push(name.to_string());
            substitution.push(r.functions[*name].formula.clone().expect("composite"));
        }
        r.name_vars = VarSet::new(names);
        r.substitution = substitution;
        for (name, nf) in &r.functions {
            if let Some(w) = &nf.word {
                let t = generalized_minor(nf.family, w).expect("reduced word");
                r.translation.insert(name.clone(), t);
            }
        }
        r
    }

    fn atom(&mut self, name: &str, recipe: &str, family: u8, function: RegFunction, word: Option<Vec<u8>>) {
        self.atoms.push(name.to_string());
        self.functions.insert(
            name.to_string(),
            NamedFunction { name: name.into(), recipe: recipe.into(), family, function, word, formula: None },
        );
    }

    pub fn get(&self, name: &str) -> Result<&NamedFunction, G2Error> {
        self.functions.get(name).ok_or_else(|| G2Error::UnknownFunction(name.into()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.functions.keys().map(String::as_str)
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn atom_vars(&self) -> &Arc<VarSet> {
        &self.atom_vars
    }

    /// Translation-definition minor for a name that carries a word.
    pub fn translation_minor(&self, name: &str) -> Option<&RegFunction> {
        self.translation.get(name)
    }

    /// Parse an expression in registry names, e.g. `"Delta_omega1*X0 + -1*X2"`,
    /// and rewrite it over the atoms.
    pub fn formula(&self, text: &str) -> Result<LaurentPoly, G2Error> {
        let p = LaurentPoly::parse(text, &self.name_vars)?;
        Ok(p.eval_in(&self.substitution, &LaurentPoly::one(&self.atom_vars))?)
    }

    /// The named function as a formula over the atoms.
    pub fn formula_of(&self, name: &str) -> Result<LaurentPoly, G2Error> {
        let nf = self.get(name)?;
        match &nf.formula {
            Some(f) => Ok(f.clone()),
            None => Ok(LaurentPoly::var_named(&self.atom_vars, name)?),
        }
    }

    /// The formula as a polynomial in the entries.
    pub fn expand(&self, formula: &LaurentPoly) -> RegFunction {
        let vals: Vec<RegFunction> = self.atoms.iter().map(|a| self.functions[a].function.clone()).collect();
        formula.eval_in(&vals, &RegFunction::constant(rat(1, 1))).expect("formulas are polynomial")
    }

    /// Atom values at a point, in atom order.
    pub fn atom_values<C: Coeff>(&self, g: &GroupPoint<C>) -> Vec<C> {
        self.atoms.iter().map(|a| self.functions[a].function.evaluate(g)).collect()
    }

    /// Value of a formula from precomputed atom values.
    pub fn eval_formula<C: Coeff>(&self, formula: &LaurentPoly, atoms: &[C]) -> Result<C, G2Error> {
        let one = atoms[0].one_like();
        Ok(formula.eval_in(atoms, &one)?)
    }

    pub fn evaluate<C: Coeff>(&self, name: &str, g: &GroupPoint<C>) -> Result<C, G2Error> {
        let f = self.formula_of(name)?;
        self.eval_formula(&f, &self.atom_values(g))
    }

    /// Registry listing (name → recipe) as pretty JSON.
    pub fn listing_json(&self) -> String {
        let entries: Vec<ListingEntry> = self
            .functions
            .values()
            .map(|nf| ListingEntry {
                name: &nf.name,
                kind: if nf.formula.is_some() { "composite" } else { "atom" },
                family: nf.family,
                recipe: &nf.recipe,
                word: nf.word.as_deref(),
                terms: nf.function.terms(),
            })
            .collect();
        serde_json::to_string_pretty(&entries).expect("listing")
    }
}

/// Composite functions: initial-seed functions and the GLS seed functions.
const COMPOSITES: &[(&str, u8, &str)] = &[
    (
        "X2",
        1,
        "Delta_s1_omega1*Delta_s2s1_omega1^2 + -1*Delta_omega1*Delta_s2s1_omega1*X0 + -1*Delta_omega1^2*Delta_s2s1s2s1_omega1",
    ),
    (
        "X-2",
        1,
        "X0*Delta_omega1*Delta_w0_omega1 + X0*Delta_s1_omega1*Delta_s2s1s2s1_omega1 + -1*Delta_omega1*Delta_s1s2s1_omega1*Delta_s2s1s2s1_omega1 + -1*Delta_s1_omega1*Delta_s2s1_omega1*Delta_w0_omega1",
    ),
    ("X1_GLS", 1, "-1*Delta_omega1*Delta_s1s2s1_omega1 + Delta_s1_omega1*X0"),
    (
        "X2_GLS",
        1,
        "Delta_s2s1_omega1*Delta_s1_omega1^2 + -2*Delta_omega1*Delta_s1_omega1*X0 + Delta_omega1^2*Delta_s1s2s1_omega1",
    ),
    ("Y1_GLS", 2, "F(2,1)*F(1,0) + -1*Delta_s2_omega2*F1(0,0)"),
];

pub fn registry() -> &'static Registry {
    static R: OnceLock<Registry> = OnceLock::new();
    R.get_or_init(Registry::build)
}

/// The named function as a polynomial in the entries.
pub fn named_function(name: &str) -> Result<RegFunction, G2Error> {
    Ok(registry().get(name)?.function.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{lowering_derivation, raising_derivation};
    use laurent::Rational;
    use num::One;

    #[test]
    fn unknown_name() {
        assert!(matches!(named_function("nope"), Err(G2Error::UnknownFunction(_))));
    }

    #[test]
    fn translation_equals_chain() {
        let r = registry();
        for (name, t) in &r.translation {
            assert_eq!(&r.functions[name].function, t, "{name}");
        }
        assert_eq!(r.translation.len(), 12);
    }

    #[test]
    fn printed_chain_vanishes() {
        assert!(named_function("Delta_s1s2_omega2_as_printed").unwrap().is_zero());
    }

    #[test]
    fn values_at_identity() {
        let e = GroupPoint::identity(&Rational::one());
        let r = registry();
        assert_eq!(r.evaluate("Delta_omega1", &e).unwrap(), rat(1, 1));
        assert_eq!(r.evaluate("Delta_omega2", &e).unwrap(), rat(1, 1));
        // X0 at e: derivation oracle, ½ f1 f2 f1 g11 evaluated at the identity
        let x0 = lowering_derivation(1, &lowering_derivation(2, &lowering_derivation(1, &RegFunction::entry(1, 1))))
            .scale(&rat(1, 2));
        assert_eq!(r.evaluate("X0", &e).unwrap(), x0.evaluate(&e));
    }

    #[test]
    fn f2_kills_f21() {
        // weight α₁+... : (2,1) − α₂ = (2,0) is not a weight of the adjoint module
        assert!(lowering_derivation(2, &named_function("F(2,1)").unwrap()).is_zero());
        assert_eq!(named_function("Y2").unwrap(), named_function("F(1,1)").unwrap());
        assert_eq!(named_function("Y-2").unwrap(), named_function("F1(0,0)").unwrap());
    }

    #[test]
    fn composites_expand() {
        let r = registry();
        let x1 = &r.get("X1_GLS").unwrap().function;
        let want = &(&named_function("Delta_s1_omega1").unwrap() * &named_function("X0").unwrap())
            - &(&named_function("Delta_omega1").unwrap() * &named_function("Delta_s1s2s1_omega1").unwrap());
        assert_eq!(x1, &want);
        assert!(raising_derivation(1, &named_function("Delta_omega2").unwrap()).is_zero());
        assert!(r.listing_json().contains("\"X-2\""));
        let via_names = r.formula("Delta_omega1*X2 + -1*X2*Delta_omega1 + X1_GLS").unwrap();
        assert_eq!(r.expand(&via_names), *x1);
    }
}
