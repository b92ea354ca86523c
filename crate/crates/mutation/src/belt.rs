use std::collections::BTreeMap;

use crate::{MutationError, Seed};

/// The seeds reached from a bipartite base by alternating μ₊ = μ₁μ₂ and μ₋ = μ₃.
///
/// Index r ≥ 0 is r alternating steps starting with μ₊; r < 0 is −r steps
/// starting with μ₋. Between r and r+1 the step is μ₊ for even r and μ₋ for
/// odd r. Seeds are memoised; construction is single-threaded.
#[derive(Clone, Debug)]
pub struct Belt {
    seeds: BTreeMap<i64, Seed>,
}

/// Mutations taking the belt seed at r to the one at r+1 (and back).
pub fn step_between(r: i64) -> &'static [i32] {
    if r.rem_euclid(2) == 0 {
        &[1, 2]
    } else {
        &[3]
    }
}

impl Belt {
    pub fn new(base: Seed) -> Result<Self, MutationError> {
        let b = base.matrix();
        for l in [1, 2, 3] {
            if !b.is_mutable(l) {
                return Err(MutationError::NotBipartite(format!("vertex {l} is not mutable")));
            }
        }
        if b.get(1, 2)? != 0 || b.get(2, 1)? != 0 {
            return Err(MutationError::NotBipartite("vertices 1 and 2 are linked".into()));
        }
        for row in b.principal() {
            if row.iter().any(|&x| x > 0) && row.iter().any(|&x| x < 0) {
                return Err(MutationError::NotBipartite("a mutable vertex is neither source nor sink".into()));
            }
        }
        let mut seeds = BTreeMap::new();
        seeds.insert(0, base);
        Ok(Belt { seeds })
    }

    pub fn base(&self) -> &Seed {
        &self.seeds[&0]
    }

    pub fn seed(&mut self, r: i64) -> Result<&Seed, MutationError> {
        if !self.seeds.contains_key(&r) {
            if r > 0 {
                let (&start, _) = self.seeds.range(..r).next_back().expect("base present");
                for t in start..r {
                    let next = self.seeds[&t].apply_sequence(step_between(t))?;
                    self.seeds.insert(t + 1, next);
                }
            } else {
                let (&start, _) = self.seeds.range(r + 1..).next().expect("base present");
                for t in (r..start).rev() {
                    let next = self.seeds[&(t + 1)].apply_sequence(step_between(t))?;
                    self.seeds.insert(t, next);
                }
            }
        }
        Ok(&self.seeds[&r])
    }
}

/// Belt seed r of `base`.
pub fn belt_seed(base: &Seed, r: i64) -> Result<Seed, MutationError> {
    Ok(Belt::new(base.clone())?.seed(r)?.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn base(case: u8) -> Seed {
        Seed::initial(catalog::underline_matrix(case)).apply_composition(&[2, 3]).unwrap()
    }

    #[test]
    fn zero_is_base() {
        let b = base(1);
        assert_eq!(belt_seed(&b, 0).unwrap(), b);
    }

    #[test]
    fn rejects_non_bipartite() {
        assert!(Belt::new(Seed::initial(catalog::underline_matrix(1))).is_err());
    }

    #[test]
    fn steps_are_consistent_both_ways() {
        let mut belt = Belt::new(base(2)).unwrap();
        let s3 = belt.seed(3).unwrap().clone();
        let s2 = belt.seed(2).unwrap().clone();
        assert_eq!(s3.apply_sequence(step_between(2)).unwrap().cluster(), s2.cluster());
        let sm2 = belt.seed(-2).unwrap().clone();
        let sm1 = belt.seed(-1).unwrap().clone();
        assert_eq!(sm2.apply_sequence(step_between(-2)).unwrap().cluster(), sm1.cluster());
    }
}
