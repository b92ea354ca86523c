//! Canonical text form: terms in descending graded lexicographic order,
//! joined by `" + "`, each written `coef*name^exp*...` with the exponent
//! omitted when it is 1.

use std::sync::Arc;

use num::{One, Zero};

use crate::{parse_rational, LaurentError, LaurentPoly, Monomial, Rational, VarSet};

impl LaurentPoly {
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let names = self.vars().names();
        let mut parts = Vec::with_capacity(self.len());
        for (m, c) in self.terms().rev() {
            let mut s = c.to_string();
            for (name, &e) in names.iter().zip(&m.0) {
                match e {
                    0 => {}
                    1 => {
                        s.push('*');
                        s.push_str(name);
                    }
                    _ => {
                        s.push('*');
                        s.push_str(name);
                        s.push('^');
                        s.push_str(&e.to_string());
                    }
                }
            }
            parts.push(s);
        }
        parts.join(" + ")
    }

    /// Parse the canonical text form. A leading coefficient may be omitted.
    pub fn parse(text: &str, vars: &Arc<VarSet>) -> Result<Self, LaurentError> {
        let text = text.trim();
        if text == "0" || text.is_empty() {
            return Ok(LaurentPoly::zero(vars));
        }
        let mut terms = Vec::new();
        for term in text.split(" + ") {
            let mut coef = Rational::one();
            let mut exps = vec![0i64; vars.len()];
            for (k, factor) in term.trim().split('*').enumerate() {
                let factor = factor.trim();
                if k == 0 {
                    if let Ok(c) = parse_rational(factor) {
                        coef = c;
                        continue;
                    }
                }
                let (name, e) = match factor.split_once('^') {
                    Some((n, e)) => {
                        (n, e.parse::<i64>().map_err(|_| LaurentError::Parse(format!("bad exponent in {factor:?}")))?)
                    }
                    None => (factor, 1),
                };
                let i = vars.index(name).ok_or_else(|| LaurentError::UnknownVariable(name.into()))?;
                exps[i] += e;
            }
            if !coef.is_zero() {
                terms.push((Monomial(exps), coef));
            }
        }
        Ok(LaurentPoly::from_terms(vars, terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn canonical_example() {
        let v = VarSet::new(["x1", "x2", "x3"]);
        let p = LaurentPoly::from_terms(
            &v,
            [(Monomial(vec![0, 1, 0]), rat(-1, 1)), (Monomial(vec![2, 0, -1]), rat(3, 2))],
        );
        assert_eq!(p.to_text(), "3/2*x1^2*x3^-1 + -1*x2");
        assert_eq!(LaurentPoly::parse(&p.to_text(), &v).unwrap(), p);
    }

    #[test]
    fn edge_cases() {
        let v = VarSet::new(["x-3", "y"]);
        assert_eq!(LaurentPoly::zero(&v).to_text(), "0");
        assert_eq!(LaurentPoly::constant(&v, rat(-5, 3)).to_text(), "-5/3");
        let p = LaurentPoly::parse("x-3^-2*y + 2", &v).unwrap();
        assert_eq!(p.to_text(), "2 + 1*x-3^-2*y");
        assert!(matches!(LaurentPoly::parse("z", &v), Err(LaurentError::UnknownVariable(_))));
        assert!(LaurentPoly::parse("x-3^q", &v).is_err());
    }
}
