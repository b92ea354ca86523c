use laurent::{rat, Rational};
use num::Zero;
use std::sync::OnceLock;

use crate::Mat;

/// Weights of v1..v7 in the basis (α₁, α₂).
pub const WEIGHTS: [(i64, i64); 7] = [(2, 1), (1, 1), (1, 0), (0, 0), (-1, 0), (-1, -1), (-2, -1)];

/// Cartan matrix a_ij = ⟨α_j, α_i^∨⟩.
pub const CARTAN: [[i64; 2]; 2] = [[2, -3], [-1, 2]];

/// (⟨μ, α₁^∨⟩, ⟨μ, α₂^∨⟩) for μ = pα₁ + qα₂.
pub fn coroot_pairings(p: i64, q: i64) -> (i64, i64) {
    (CARTAN[0][0] * p + CARTAN[0][1] * q, CARTAN[1][0] * p + CARTAN[1][1] * q)
}

/// Inverse of [`coroot_pairings`].
pub fn weight_from_pairings(a: i64, b: i64) -> (i64, i64) {
    (2 * a + 3 * b, a + 2 * b)
}

/// The six Chevalley generators in the 7-dimensional representation.
#[derive(Clone, Debug)]
pub struct Chevalley {
    pub e: [Mat<Rational>; 2],
    pub f: [Mat<Rational>; 2],
    pub h: [Mat<Rational>; 2],
}

impl Chevalley {
    pub fn e(&self, i: u8) -> &Mat<Rational> {
        &self.e[(i - 1) as usize]
    }
    pub fn f(&self, i: u8) -> &Mat<Rational> {
        &self.f[(i - 1) as usize]
    }
    pub fn h(&self, i: u8) -> &Mat<Rational> {
        &self.h[(i - 1) as usize]
    }
}

/// Matrix with `M[k][j] = c` for each `(j, k, c)`: the operator sends v_j to c·v_k (1-based).
fn op(images: &[(usize, usize, i64)]) -> Mat<Rational> {
    let mut m = Mat::zero(7, &Rational::zero());
    for &(j, k, c) in images {
        m.set(k - 1, j - 1, rat(c, 1));
    }
    m
}

/// Shared copy of the generators.
pub fn chevalley() -> &'static Chevalley {
    static C: OnceLock<Chevalley> = OnceLock::new();
    C.get_or_init(chevalley_matrices)
}

pub fn chevalley_matrices() -> Chevalley {
    let f1 = op(&[(1, 2, 1), (3, 4, 1), (4, 5, 2), (6, 7, 1)]);
    let f2 = op(&[(2, 3, 1), (5, 6, 1)]);
    let e1 = op(&[(2, 1, 1), (4, 3, 2), (5, 4, 1), (7, 6, 1)]);
    let e2 = op(&[(3, 2, 1), (6, 5, 1)]);
    let h1 = e1.bracket(&f1);
    let h2 = e2.bracket(&f2);
    Chevalley { e: [e1, e2], f: [f1, f2], h: [h1, h2] }
}

/// (ad X)^k Y.
pub fn ad_power(x: &Mat<Rational>, y: &Mat<Rational>, k: u32) -> Mat<Rational> {
    (0..k).fold(y.clone(), |acc, _| x.bracket(&acc))
}

/// Every bracket and Serre relation, as (name, holds).
pub fn relations(c: &Chevalley) -> Vec<(String, bool)> {
    let mut out = Vec::new();
    for i in 1..=2u8 {
        for j in 1..=2u8 {
            let ef = c.e(i).bracket(c.f(j));
            let want = if i == j { c.h(i).clone() } else { Mat::zero(7, &Rational::zero()) };
            out.push((format!("[e{i},f{j}]"), ef == want));
            let a = rat(CARTAN[(i - 1) as usize][(j - 1) as usize], 1);
            out.push((format!("[h{i},e{j}]"), c.h(i).bracket(c.e(j)) == c.e(j).scale(&a)));
            out.push((format!("[h{i},f{j}]"), c.h(i).bracket(c.f(j)) == c.f(j).scale(&-a)));
            if i != j {
                let k = (1 - CARTAN[(i - 1) as usize][(j - 1) as usize]) as u32;
                out.push((format!("(ad e{i})^{k} e{j}"), ad_power(c.e(i), c.e(j), k).is_zero()));
                out.push((format!("(ad f{i})^{k} f{j}"), ad_power(c.f(i), c.f(j), k).is_zero()));
                out.push((format!("(ad e{i})^{} e{j} ≠ 0", k - 1), !ad_power(c.e(i), c.e(j), k - 1).is_zero()));
            }
        }
    }
    out.push(("[h1,h2]".into(), c.h(1).bracket(c.h(2)).is_zero()));
    for i in 1..=2u8 {
        let diag: Vec<Rational> = WEIGHTS
            .iter()
            .map(|&(p, q)| {
                let (a, b) = coroot_pairings(p, q);
                rat(if i == 1 { a } else { b }, 1)
            })
            .collect();
        out.push((format!("h{i} acts by weights"), *c.h(i) == Mat::diagonal(diag)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_relations_hold() {
        for (name, ok) in relations(&chevalley_matrices()) {
            assert!(ok, "{name}");
        }
    }

    #[test]
    fn lowering_shape() {
        let c = chevalley_matrices();
        for i in 1..=2u8 {
            let alpha = if i == 1 { (1, 0) } else { (0, 1) };
            for k in 0..7 {
                for j in 0..7 {
                    if !c.f(i).get(k, j).is_zero() {
                        assert_eq!(WEIGHTS[k], (WEIGHTS[j].0 - alpha.0, WEIGHTS[j].1 - alpha.1));
                    }
                }
            }
        }
    }

    #[test]
    fn nilpotency() {
        let c = chevalley_matrices();
        assert!(!c.e(1).pow(2).is_zero());
        assert!(c.e(1).pow(3).is_zero());
        assert!(c.e(2).pow(2).is_zero());
    }

    #[test]
    fn pairing_inverse() {
        for p in -3..=3 {
            for q in -3..=3 {
                let (a, b) = coroot_pairings(p, q);
                assert_eq!(weight_from_pairings(a, b), (p, q));
            }
        }
        assert_eq!(coroot_pairings(2, 1), (1, 0));
        assert_eq!(coroot_pairings(3, 2), (0, 1));
    }
}
