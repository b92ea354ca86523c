use std::fmt::Display;

use laurent::{rat, Coeff, LaurentPoly, Rational, VarSet};
use num::{One, Zero};
use rand::Rng;

use crate::chevalley::{chevalley, coroot_pairings, WEIGHTS};
use crate::mat::nullspace;
use crate::{G2Error, Mat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    /// x_i(t) = exp(t e_i)
    Raise,
    /// y_i(t) = exp(t f_i)
    Lower,
}

/// A matrix in the image of G₂, with the generator word that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPoint<C> {
    matrix: Mat<C>,
    word: Vec<String>,
}

impl<C: Coeff> GroupPoint<C> {
    pub fn identity(like: &C) -> Self {
        GroupPoint { matrix: Mat::identity(7, like), word: Vec::new() }
    }

    pub fn from_matrix(matrix: Mat<C>, word: Vec<String>) -> Self {
        assert_eq!(matrix.dim(), 7, "7x7 matrix");
        GroupPoint { matrix, word }
    }

    pub fn matrix(&self) -> &Mat<C> {
        &self.matrix
    }

    /// Generators in multiplication order, e.g. `["y1(3/2)", "h(2,-1)"]`.
    pub fn word(&self) -> &[String] {
        &self.word
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut word = self.word.clone();
        word.extend(o.word.iter().cloned());
        GroupPoint { matrix: self.matrix.mul(&o.matrix), word }
    }
}

fn check_index(i: u8) -> Result<(), G2Error> {
    if i == 1 || i == 2 {
        Ok(())
    } else {
        Err(G2Error::BadIndex(i))
    }
}

/// x_i(t) or y_i(t), summed as a truncated exponential.
pub fn one_param<C: Coeff + Display>(i: u8, t: C, sign: Sign) -> Result<GroupPoint<C>, G2Error> {
    check_index(i)?;
    let c = chevalley();
    let gen = match sign {
        Sign::Raise => c.e(i),
        Sign::Lower => c.f(i),
    };
    let lifted = gen.map(|r| t.from_rational_like(r));
    let name = if sign == Sign::Raise { "x" } else { "y" };
    Ok(GroupPoint { matrix: lifted.exp_nilpotent(&t), word: vec![format!("{name}{i}({t})")] })
}

/// h(u, v): the line of weight μ is scaled by u^{⟨μ,α₁^∨⟩} v^{⟨μ,α₂^∨⟩}.
pub fn torus_element<C: Coeff + Display>(u: C, v: C) -> Result<GroupPoint<C>, G2Error> {
    if u.is_zero_value() || v.is_zero_value() {
        return Err(G2Error::ZeroParameter);
    }
    let diag = WEIGHTS
        .iter()
        .map(|&(p, q)| {
            let (a, b) = coroot_pairings(p, q);
            let ua = u.pow_i(a).ok_or(G2Error::ZeroParameter)?;
            let vb = v.pow_i(b).ok_or(G2Error::ZeroParameter)?;
            Ok(ua.times(&vb))
        })
        .collect::<Result<Vec<C>, G2Error>>()?;
    Ok(GroupPoint { matrix: Mat::diagonal(diag), word: vec![format!("h({u},{v})")] })
}

/// s̄ᵢ = xᵢ(−1) yᵢ(1) xᵢ(−1).
pub fn weyl_lift(i: u8) -> Result<GroupPoint<Rational>, G2Error> {
    let m = rat(-1, 1);
    let p = one_param(i, m.clone(), Sign::Raise)?
        .mul(&one_param(i, Rational::one(), Sign::Lower)?)
        .mul(&one_param(i, m, Sign::Raise)?);
    Ok(GroupPoint { matrix: p.matrix, word: vec![format!("s{i}")] })
}

/// w(μ) for μ = pα₁ + qα₂, reading the word right to left.
pub fn weyl_image(word: &[u8], mu: (i64, i64)) -> (i64, i64) {
    word.iter().rev().fold(mu, |m, &i| reflect(i, m))
}

/// Simple reflection sᵢ on a weight written as pα₁ + qα₂.
fn reflect(i: u8, (p, q): (i64, i64)) -> (i64, i64) {
    let (a, b) = coroot_pairings(p, q);
    if i == 1 {
        (p - a, q)
    } else {
        (p, q - b)
    }
}

/// A word is reduced when each appended sᵢ sends the current prefix w to w·sᵢ with w(αᵢ) > 0.
pub fn is_reduced(word: &[u8]) -> bool {
    // images of α₁, α₂ under the prefix read so far
    let mut images = [(1i64, 0i64), (0, 1)];
    for &i in word {
        if i != 1 && i != 2 {
            return false;
        }
        let (p, q) = images[(i - 1) as usize];
        if p < 0 || q < 0 {
            return false;
        }
        // w·sᵢ(α_j) = w(α_j − ⟨α_j, αᵢ^∨⟩ αᵢ)
        let w_alpha_i = images[(i - 1) as usize];
        for j in 0..2 {
            let simple = if j == 0 { (1, 0) } else { (0, 1) };
            let (a, b) = coroot_pairings(simple.0, simple.1);
            let c = if i == 1 { a } else { b };
            images[j] = (images[j].0 - c * w_alpha_i.0, images[j].1 - c * w_alpha_i.1);
        }
    }
    true
}

/// w̄ = s̄_{i₁}···s̄_{i_l} for a reduced word.
pub fn weyl_lift_word(word: &[u8]) -> Result<GroupPoint<Rational>, G2Error> {
    if !is_reduced(word) {
        return Err(G2Error::NonReduced(word.to_vec()));
    }
    word.iter().try_fold(GroupPoint::identity(&Rational::one()), |acc, &i| Ok(acc.mul(&weyl_lift(i)?)))
}

/// Parameter pool for sampling: n/d with n ∈ [−9, 9] ∖ {0} and d ∈ [1, 4].
pub fn random_parameter<R: Rng>(rng: &mut R) -> Rational {
    let mut n = rng.gen_range(-9i64..=8);
    if n >= 0 {
        n += 1;
    }
    rat(n, rng.gen_range(1i64..=4))
}

/// Product of `length` random factors among x₁, x₂, y₁, y₂ and h.
pub fn random_group_point<R: Rng>(rng: &mut R, length: usize) -> GroupPoint<Rational> {
    let mut g = GroupPoint::identity(&Rational::one());
    for _ in 0..length {
        let f = match rng.gen_range(0..5) {
            k @ 0..=1 => one_param(k + 1, random_parameter(rng), Sign::Raise),
            k @ 2..=3 => one_param(k - 1, random_parameter(rng), Sign::Lower),
            _ => torus_element(random_parameter(rng), random_parameter(rng)),
        };
        g = g.mul(&f.expect("valid generator"));
    }
    g
}

/// A random word of length 8 followed by h(u,v)·x₁x₂x₁x₂x₁x₂ with random parameters.
///
/// The tail sweeps out a dense subset of N⁻\G, so the named functions are
/// nonzero at such points with high probability; short random words alone
/// often hit their zero sets.
pub fn generic_group_point<R: Rng>(rng: &mut R) -> GroupPoint<Rational> {
    let mut g = random_group_point(rng, 8);
    g = g.mul(&torus_element(random_parameter(rng), random_parameter(rng)).expect("nonzero"));
    for k in 0..6 {
        g = g.mul(&one_param(1 + (k % 2) as u8, random_parameter(rng), Sign::Raise).expect("valid"));
    }
    g
}

/// Variable set of the symbolic dense-cell point.
pub fn symbolic_vars() -> std::sync::Arc<VarSet> {
    VarSet::new(["u", "v", "t1", "t2", "t3", "t4", "t5", "t6"])
}

/// h(u,v)·x₁(t₁)x₂(t₂)x₁(t₃)x₂(t₄)x₁(t₅)x₂(t₆) over Laurent polynomials.
pub fn symbolic_point() -> GroupPoint<LaurentPoly> {
    let vars = symbolic_vars();
    let var = |i| LaurentPoly::var(&vars, i);
    let mut g = torus_element(var(0), var(1)).expect("monomials are invertible");
    for k in 0..6 {
        g = g.mul(&one_param(1 + (k % 2) as u8, var(2 + k), Sign::Raise).expect("valid"));
    }
    g
}

/// The symmetric bilinear form preserved by G₂, normalized so that B(v₄, v₄) = 1 up to sign.
pub fn invariant_form() -> Mat<Rational> {
    // unknowns b_ij for i ≤ j; conditions Xᵀ B + B X = 0 for all generators
    let idx: Vec<(usize, usize)> = (0..7).flat_map(|i| (i..7).map(move |j| (i, j))).collect();
    let col = |i: usize, j: usize| idx.iter().position(|&p| p == (i.min(j), i.max(j))).expect("index");
    let c = chevalley();
    let mut rows = Vec::new();
    for x in c.e.iter().chain(c.f.iter()) {
        for a in 0..7 {
            for b in 0..7 {
                // (XᵀB + BX)_ab = Σ_k X_ka B_kb + B_ak X_kb
                let mut row = vec![Rational::zero(); idx.len()];
                for k in 0..7 {
                    row[col(k, b)] += x.get(k, a);
                    row[col(a, k)] += x.get(k, b);
                }
                rows.push(row);
            }
        }
    }
    let ns = nullspace(&rows, idx.len());
    assert_eq!(ns.len(), 1, "invariant form is unique up to scale");
    let v = &ns[0];
    let mut m = Mat::zero(7, &Rational::zero());
    for (k, &(i, j)) in idx.iter().enumerate() {
        m.set(i, j, v[k].clone());
        m.set(j, i, v[k].clone());
    }
    let mid = m.get(3, 3).clone();
    if !mid.is_zero() {
        m = m.scale(&mid.recip());
    }
    m
}

/// gᵀ B g = B.
pub fn preserves_form(g: &GroupPoint<Rational>, form: &Mat<Rational>) -> bool {
    g.matrix().transpose().mul(form).mul(g.matrix()) == *form
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn trivial_parameters() {
        let one = Rational::one();
        assert_eq!(*one_param(1, Rational::zero(), Sign::Raise).unwrap().matrix(), Mat::identity(7, &one));
        assert_eq!(*torus_element(one.clone(), one.clone()).unwrap().matrix(), Mat::identity(7, &one));
        assert_eq!(*weyl_lift_word(&[]).unwrap().matrix(), Mat::identity(7, &one));
        assert!(matches!(torus_element(Rational::zero(), one), Err(G2Error::ZeroParameter)));
        assert!(matches!(one_param(3, rat(1, 1), Sign::Raise), Err(G2Error::BadIndex(3))));
    }

    #[test]
    fn one_parameter_law() {
        for i in [1, 2] {
            for sign in [Sign::Raise, Sign::Lower] {
                let a = one_param(i, rat(2, 3), sign).unwrap();
                let b = one_param(i, rat(-5, 2), sign).unwrap();
                let ab = one_param(i, rat(2, 3) + rat(-5, 2), sign).unwrap();
                assert_eq!(a.mul(&b).matrix(), ab.matrix());
            }
        }
    }

    #[test]
    fn reduced_words() {
        assert!(is_reduced(&[1, 2, 1, 2, 1, 2]));
        assert!(is_reduced(&[2, 1, 2, 1, 2, 1]));
        assert!(!is_reduced(&[1, 1]));
        assert!(!is_reduced(&[1, 2, 1, 2, 1, 2, 1]));
        assert!(matches!(weyl_lift_word(&[2, 2]), Err(G2Error::NonReduced(_))));
    }

    #[test]
    fn weyl_orbits() {
        assert_eq!(weyl_image(&[2, 1], (2, 1)), (1, 0));
        assert_eq!(weyl_image(&[1, 2, 1, 2, 1, 2], (2, 1)), (-2, -1));
        assert_eq!(weyl_image(&[1, 2], (3, 2)), (0, 1));
    }

    #[test]
    fn braid_relation_for_lifts() {
        let a = weyl_lift_word(&[1, 2, 1, 2, 1, 2]).unwrap();
        let b = weyl_lift_word(&[2, 1, 2, 1, 2, 1]).unwrap();
        assert_eq!(a.matrix(), b.matrix());
    }

    #[test]
    fn fourth_power_of_lift_is_a_sign() {
        for i in [1, 2] {
            let s = weyl_lift(i).unwrap();
            let s4 = s.mul(&s).mul(&s).mul(&s);
            for a in 0..7 {
                for b in 0..7 {
                    let x = s4.matrix().get(a, b);
                    if a == b {
                        assert!(*x == rat(1, 1) || *x == rat(-1, 1));
                    } else {
                        assert!(x.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn samples_are_in_the_group() {
        let form = invariant_form();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..5 {
            let g = random_group_point(&mut rng, 8);
            assert_eq!(g.matrix().det(), Rational::one());
            assert!(preserves_form(&g, &form));
        }
        assert_eq!(random_group_point(&mut rng, 0).matrix(), &Mat::identity(7, &Rational::one()));
    }

    #[test]
    fn sampling_is_deterministic() {
        let a = generic_group_point(&mut ChaCha8Rng::seed_from_u64(5));
        let b = generic_group_point(&mut ChaCha8Rng::seed_from_u64(5));
        assert_eq!(a, b);
        assert_eq!(a.word().len(), 15);
    }

    #[test]
    fn symbolic_point_is_laurent() {
        let g = symbolic_point();
        assert_eq!(g.word().len(), 7);
        assert_eq!(g.matrix().get(0, 0).to_text(), "1*u");
    }
}
