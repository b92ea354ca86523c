//! Weights of functions under the two torus actions.
//!
//! For a left N⁻-invariant weight vector F ∈ V_{nωᵢ}(pα₁+qα₂) one has
//! F(h·g) = h^{nωᵢ} F(g) and F(g·h) = h^{pα₁+qα₂} F(g). Both characters are
//! read off by evaluating at h(u,v)·g₀ and g₀·h(u,v) with u, v symbolic.

use std::sync::Arc;

use laurent::{LaurentPoly, Rational, VarSet};
use mutation::DegreeVector;
use num::{One, Zero};
use rand::Rng;

use crate::chevalley::weight_from_pairings;
use crate::group::generic_group_point;
use crate::{torus_element, G2Error, GroupPoint, Mat, RegFunction};

/// Anything that can be evaluated at rational and at symbolic points.
pub trait PointFunction {
    fn at_rational(&self, g: &GroupPoint<Rational>) -> Result<Rational, G2Error>;
    fn at_symbolic(&self, g: &GroupPoint<LaurentPoly>) -> Result<LaurentPoly, G2Error>;
}

impl PointFunction for RegFunction {
    fn at_rational(&self, g: &GroupPoint<Rational>) -> Result<Rational, G2Error> {
        Ok(self.evaluate(g))
    }
    fn at_symbolic(&self, g: &GroupPoint<LaurentPoly>) -> Result<LaurentPoly, G2Error> {
        Ok(self.evaluate(g))
    }
}

/// Exponents (a, b) of the characters u^a v^b under left and right multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorusWeight {
    pub left: (i64, i64),
    pub right: (i64, i64),
}

impl TorusWeight {
    /// The right weight as pα₁ + qα₂.
    pub fn root_coordinates(&self) -> (i64, i64) {
        weight_from_pairings(self.right.0, self.right.1)
    }
}

fn lift(g: &GroupPoint<Rational>, vars: &Arc<VarSet>) -> GroupPoint<LaurentPoly> {
    let m: Mat<LaurentPoly> = g.matrix().map(|r| LaurentPoly::constant(vars, r.clone()));
    GroupPoint::from_matrix(m, g.word().to_vec())
}

fn character(value: &LaurentPoly, base: &Rational, what: &str) -> Result<(i64, i64), G2Error> {
    let ratio = value.scale(&base.recip());
    let unit = ratio.terms().next().map(|(_, c)| c.is_one()).unwrap_or(false);
    match ratio.monomial_exponents() {
        Some(e) if unit => Ok((e[0], e[1])),
        _ => Err(G2Error::NotHomogeneous(format!("{what} action gives {value}"))),
    }
}

/// A generic point g₀ together with h(u,v)·g₀ and g₀·h(u,v), u and v symbolic.
#[derive(Clone, Debug)]
pub struct TorusProbe {
    pub base: GroupPoint<Rational>,
    pub left: GroupPoint<LaurentPoly>,
    pub right: GroupPoint<LaurentPoly>,
}

impl TorusProbe {
    pub fn sample<R: Rng>(rng: &mut R) -> Self {
        let vars = VarSet::new(["u", "v"]);
        let h = torus_element(LaurentPoly::var(&vars, 0), LaurentPoly::var(&vars, 1)).expect("nonzero parameters");
        let base = generic_group_point(rng);
        let lg = lift(&base, &vars);
        TorusProbe { left: h.mul(&lg), right: lg.mul(&h), base }
    }

    /// Characters from the three values F(g₀), F(h·g₀), F(g₀·h).
    pub fn weight(&self, base: &Rational, left: &LaurentPoly, right: &LaurentPoly) -> Result<TorusWeight, G2Error> {
        if base.is_zero() {
            return Err(G2Error::NotHomogeneous("function vanishes at the probe point".into()));
        }
        Ok(TorusWeight { left: character(left, base, "left")?, right: character(right, base, "right")? })
    }
}

const RESAMPLES: usize = 8;

/// Left and right torus characters, resampling g₀ while F(g₀) = 0.
pub fn infer_weight<R: Rng>(f: &dyn PointFunction, rng: &mut R) -> Result<TorusWeight, G2Error> {
    for _ in 0..RESAMPLES {
        let probe = TorusProbe::sample(rng);
        let base = f.at_rational(&probe.base)?;
        if base.is_zero() {
            continue;
        }
        return probe.weight(&base, &f.at_symbolic(&probe.left)?, &f.at_symbolic(&probe.right)?);
    }
    Err(G2Error::NotHomogeneous("function vanished at every sampled point".into()))
}

/// (n, p, q) from the two characters; `case` says which fundamental weight n counts.
pub fn degree_of_weight(w: &TorusWeight, case: u8) -> Result<DegreeVector, G2Error> {
    let n = match (case, w.left) {
        (1, (a, 0)) => a,
        (2, (0, b)) => b,
        (1 | 2, l) => {
            return Err(G2Error::NotHomogeneous(format!("left character {l:?} is not a multiple of omega{case}")))
        }
        _ => return Err(G2Error::BadIndex(case)),
    };
    let (p, q) = w.root_coordinates();
    Ok(DegreeVector { n, p, q })
}

/// Degree (n, p, q) with F ∈ V_{nωᵢ}(pα₁ + qα₂), `case` selecting i.
pub fn infer_degree<R: Rng>(f: &dyn PointFunction, case: u8, rng: &mut R) -> Result<DegreeVector, G2Error> {
    degree_of_weight(&infer_weight(f, rng)?, case)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named_function;
    use laurent::rat;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn deg(name: &str, case: u8) -> DegreeVector {
        infer_degree(&named_function(name).unwrap(), case, &mut ChaCha8Rng::seed_from_u64(3)).unwrap()
    }

    #[test]
    fn degrees_of_named_functions() {
        assert_eq!(deg("Delta_w0_omega1", 1), DegreeVector { n: 1, p: -2, q: -1 });
        assert_eq!(deg("X0", 1), DegreeVector { n: 1, p: 0, q: 0 });
        assert_eq!(deg("Delta_omega2", 2), DegreeVector { n: 1, p: 3, q: 2 });
        assert_eq!(deg("X2", 1), DegreeVector { n: 3, p: 3, q: 1 });
        assert_eq!(deg("F1(0,0)", 2), DegreeVector { n: 1, p: 0, q: 0 });
    }

    #[test]
    fn rescaling_keeps_degree() {
        let f = named_function("Delta_s2s1_omega1").unwrap().scale(&rat(-7, 3));
        let d = infer_degree(&f, 1, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        assert_eq!(d, DegreeVector { n: 1, p: 1, q: 0 });
    }

    #[test]
    fn inhomogeneous_rejected() {
        let f = &named_function("Delta_omega1").unwrap() + &named_function("Delta_s1_omega1").unwrap();
        assert!(matches!(
            infer_degree(&f, 1, &mut ChaCha8Rng::seed_from_u64(1)),
            Err(G2Error::NotHomogeneous(_))
        ));
        let g = &named_function("Delta_omega1").unwrap() * &named_function("Delta_omega2").unwrap();
        assert!(infer_degree(&g, 1, &mut ChaCha8Rng::seed_from_u64(1)).is_err());
    }
}
