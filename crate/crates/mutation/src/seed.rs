use std::sync::Arc;

use laurent::{LaurentPoly, Monomial, Rational, VarSet};
use num::One;
use serde::{Deserialize, Serialize};

use crate::{ExchangeMatrix, MutationError};

/// Exchange matrix plus an extended cluster of Laurent polynomials in the
/// variables of the seed's own initial cluster.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    matrix: ExchangeMatrix,
    cluster: Vec<LaurentPoly>,
    history: Vec<i32>,
}

/// Variable name of the initial cluster variable at `label`.
pub fn var_name(label: i32) -> String {
    format!("x{label}")
}

/// Variable set `x<label>` for every row label, in row order.
pub fn initial_vars(labels: &[i32]) -> Arc<VarSet> {
    VarSet::new(labels.iter().map(|&l| var_name(l)))
}

impl Seed {
    /// Seed whose cluster is its own set of indeterminates.
    pub fn initial(matrix: ExchangeMatrix) -> Self {
        let vars = initial_vars(matrix.labels());
        let cluster = (0..matrix.m()).map(|i| LaurentPoly::var(&vars, i)).collect();
        Seed { matrix, cluster, history: Vec::new() }
    }

    pub fn from_parts(matrix: ExchangeMatrix, cluster: Vec<LaurentPoly>, history: Vec<i32>) -> Result<Self, MutationError> {
        if cluster.len() != matrix.m() {
            return Err(MutationError::Shape(format!("{} cluster entries for {} rows", cluster.len(), matrix.m())));
        }
        Ok(Seed { matrix, cluster, history })
    }

    pub fn matrix(&self) -> &ExchangeMatrix {
        &self.matrix
    }

    pub fn cluster(&self) -> &[LaurentPoly] {
        &self.cluster
    }

    pub fn history(&self) -> &[i32] {
        &self.history
    }

    pub fn labels(&self) -> &[i32] {
        self.matrix.labels()
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        self.cluster[0].vars()
    }

    pub fn variable(&self, label: i32) -> Result<&LaurentPoly, MutationError> {
        let i = self.matrix.row_index(label).ok_or(MutationError::UnknownLabel(label))?;
        Ok(&self.cluster[i])
    }

    /// The two exchange monomials at `k`: products of x_i^{[b_ik]₊} and x_i^{[−b_ik]₊}.
    pub fn exchange_monomials(&self, k: i32) -> Result<(LaurentPoly, LaurentPoly), MutationError> {
        let kc = self.matrix.col_index(k)?;
        let vars = self.vars().clone();
        let mut plus = LaurentPoly::one(&vars);
        let mut minus = LaurentPoly::one(&vars);
        for (row, x) in self.matrix.rows().iter().zip(&self.cluster) {
            let b = row[kc];
            if b > 0 {
                plus = &plus * &x.pow(b as u32);
            } else if b < 0 {
                minus = &minus * &x.pow((-b) as u32);
            }
        }
        Ok((plus, minus))
    }

    /// Seed mutation at mutable label `k`.
    pub fn mutate(&self, k: i32) -> Result<Self, MutationError> {
        let kc = self.matrix.col_index(k)?;
        let old = &self.cluster[kc];
        if old.is_zero() {
            return Err(MutationError::ZeroClusterEntry(k));
        }
        let (plus, minus) = self.exchange_monomials(k)?;
        let fresh = (&plus + &minus).exact_div(old)?;
        let mut cluster = self.cluster.clone();
        cluster[kc] = fresh;
        let mut history = self.history.clone();
        history.push(k);
        Ok(Seed { matrix: self.matrix.mutate(k)?, cluster, history })
    }

    /// Apply mutations in list order: `[a, b]` mutates at `a`, then at `b`.
    pub fn apply_sequence(&self, ks: &[i32]) -> Result<Self, MutationError> {
        ks.iter().try_fold(self.clone(), |s, &k| s.mutate(k))
    }

    /// Apply mutations written in composition order: `[a, b]` is μ_a μ_b, so `b` goes first.
    pub fn apply_composition(&self, ks: &[i32]) -> Result<Self, MutationError> {
        ks.iter().rev().try_fold(self.clone(), |s, &k| s.mutate(k))
    }

    /// Same seed with a replaced matrix (used to re-root after relabeling).
    pub fn with_matrix(&self, matrix: ExchangeMatrix) -> Result<Self, MutationError> {
        Seed::from_parts(matrix, self.cluster.clone(), self.history.clone())
    }

    /// True when every cluster entry is the corresponding entry of `other`.
    pub fn same_cluster(&self, other: &Seed) -> bool {
        self.labels() == other.labels() && self.cluster == other.cluster
    }

    pub fn to_json(&self) -> SeedJson {
        SeedJson {
            labels: self.labels().to_vec(),
            n: self.matrix.n(),
            matrix: self.matrix.rows().to_vec(),
            cluster: self.cluster.iter().map(LaurentPoly::to_text).collect(),
            history: self.history.clone(),
        }
    }

    /// Rebuild from JSON; cluster texts are read over the `x<label>` variables.
    pub fn from_json(j: &SeedJson) -> Result<Self, MutationError> {
        let matrix = ExchangeMatrix::new(j.labels.clone(), j.n, j.matrix.clone())?;
        let vars = initial_vars(&j.labels);
        let cluster = j
            .cluster
            .iter()
            .map(|t| LaurentPoly::parse(t, &vars))
            .collect::<Result<Vec<_>, _>>()?;
        Seed::from_parts(matrix, cluster, j.history.clone())
    }

    /// Monomial x^e over the seed's initial variables (exps in row order).
    pub fn initial_monomial(&self, exps: Vec<i64>) -> LaurentPoly {
        LaurentPoly::monomial(self.vars(), Monomial(exps), Rational::one())
    }
}

/// JSON shape of a seed: labels, row-major matrix, canonical cluster texts, history.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedJson {
    pub labels: Vec<i32>,
    pub n: usize,
    pub matrix: Vec<Vec<i64>>,
    pub cluster: Vec<String>,
    pub history: Vec<i32>,
}

impl SeedJson {
    pub fn to_string_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("seed json")
    }

    pub fn parse(text: &str) -> Result<Self, MutationError> {
        serde_json::from_str(text).map_err(|e| MutationError::Json(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn first_exchange_of_underline_seed() {
        let s = Seed::initial(catalog::underline_matrix(1));
        let m = s.mutate(3).unwrap();
        let v = s.vars();
        let x = |n: &str| LaurentPoly::var_named(v, n).unwrap();
        let want = (&(&x("x1") * &x("x-3").pow(2)) + &x("x2")).exact_div(&x("x3")).unwrap();
        assert_eq!(m.variable(3).unwrap(), &want);
        assert_eq!(m.history(), &[3]);
    }

    #[test]
    fn involution_on_seeds() {
        let s = Seed::initial(catalog::underline_matrix(2));
        for k in [1, 2, 3] {
            let back = s.mutate(k).unwrap().mutate(k).unwrap();
            assert!(back.same_cluster(&s));
            assert_eq!(back.matrix(), s.matrix());
        }
    }

    #[test]
    fn order_conventions() {
        let s = Seed::initial(catalog::underline_matrix(1));
        let a = s.apply_sequence(&[3, 2]).unwrap();
        let b = s.apply_composition(&[2, 3]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.history(), &[3, 2]);
        assert_eq!(s.apply_sequence(&[]).unwrap(), s);
        assert!(matches!(s.mutate(-2), Err(MutationError::NotMutable(-2))));
    }

    #[test]
    fn json_round_trip() {
        let s = Seed::initial(catalog::underline_matrix(1)).apply_sequence(&[3, 2, 1]).unwrap();
        let j = s.to_json();
        let back = Seed::from_json(&SeedJson::parse(&j.to_string_pretty()).unwrap()).unwrap();
        assert_eq!(back, s);
    }
}
