use std::fmt;

use num::{BigInt, BigRational, Integer, Zero};
use serde::{Deserialize, Serialize};

use crate::MutationError;

/// An m×n integer matrix whose first n rows are the mutable vertices.
///
/// Rows carry labels; columns are the mutable labels in row order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeMatrix {
    labels: Vec<i32>,
    n: usize,
    entries: Vec<Vec<i64>>,
}

impl ExchangeMatrix {
    /// Validates shape, zero diagonal and skew-symmetrizability of the principal part.
    pub fn new(labels: Vec<i32>, n: usize, entries: Vec<Vec<i64>>) -> Result<Self, MutationError> {
        let b = Self::new_unchecked(labels, n, entries)?;
        if skew_symmetrizer(&b.principal()).is_none() {
            return Err(MutationError::NotSkewSymmetrizable);
        }
        Ok(b)
    }

    /// Shape checks only; used for tables that are known to violate the axioms.
    pub fn new_unchecked(labels: Vec<i32>, n: usize, entries: Vec<Vec<i64>>) -> Result<Self, MutationError> {
        if n > labels.len() || entries.len() != labels.len() {
            return Err(MutationError::Shape(format!("{} labels, {} rows, n={n}", labels.len(), entries.len())));
        }
        if let Some(r) = entries.iter().find(|r| r.len() != n) {
            return Err(MutationError::Shape(format!("row of length {} in a matrix with {n} columns", r.len())));
        }
        let mut seen = std::collections::HashSet::new();
        if !labels.iter().all(|l| seen.insert(*l)) {
            return Err(MutationError::Shape("duplicate labels".into()));
        }
        Ok(ExchangeMatrix { labels, n, entries })
    }

    pub fn labels(&self) -> &[i32] {
        &self.labels
    }

    pub fn mutable_labels(&self) -> &[i32] {
        &self.labels[..self.n]
    }

    pub fn frozen_labels(&self) -> &[i32] {
        &self.labels[self.n..]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.labels.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn row_index(&self, label: i32) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    /// Column position of a mutable label.
    pub fn col_index(&self, label: i32) -> Result<usize, MutationError> {
        self.mutable_labels().iter().position(|&l| l == label).ok_or(MutationError::NotMutable(label))
    }

    /// Entry b_{ij} by labels; `j` must be mutable.
    pub fn get(&self, i: i32, j: i32) -> Result<i64, MutationError> {
        let r = self.row_index(i).ok_or(MutationError::UnknownLabel(i))?;
        Ok(self.entries[r][self.col_index(j)?])
    }

    pub fn is_mutable(&self, label: i32) -> bool {
        self.mutable_labels().contains(&label)
    }

    pub fn principal(&self) -> Vec<Vec<i64>> {
        self.entries[..self.n].to_vec()
    }

    pub fn negated(&self) -> Self {
        ExchangeMatrix {
            labels: self.labels.clone(),
            n: self.n,
            entries: self.entries.iter().map(|r| r.iter().map(|x| -x).collect()).collect(),
        }
    }

    /// Matrix mutation at mutable label `k`.
    ///
    /// b'_{ij} = −b_{ij} if i or j is k, otherwise b_{ij} + sgn(b_{ik})·[b_{ik}b_{kj}]₊.
    pub fn mutate(&self, k: i32) -> Result<Self, MutationError> {
        let kc = self.col_index(k)?;
        let kr = kc;
        let mut out = self.entries.clone();
        for (i, row) in self.entries.iter().enumerate() {
            for (j, &b) in row.iter().enumerate() {
                out[i][j] = if i == kr || j == kc {
                    -b
                } else {
                    let bik = row[kc];
                    let bkj = self.entries[kr][j];
                    b + bik.signum() * (bik * bkj).max(0)
                };
            }
        }
        Ok(ExchangeMatrix { labels: self.labels.clone(), n: self.n, entries: out })
    }

    /// Keep the listed rows (all of them) and declare which ones stay mutable,
    /// relabeling through `corr` (new label, old label). Used for freezing.
    pub fn restrict(&self, corr: &[(i32, i32)], n: usize) -> Result<Self, MutationError> {
        let mut entries = Vec::with_capacity(corr.len());
        for &(_, old_i) in corr {
            let mut row = Vec::with_capacity(n);
            for &(_, old_j) in &corr[..n] {
                row.push(self.get(old_i, old_j)?);
            }
            entries.push(row);
        }
        Self::new(corr.iter().map(|c| c.0).collect(), n, entries)
    }
}

impl fmt::Display for ExchangeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:>5} |", "")?;
        for l in self.mutable_labels() {
            write!(f, "{l:>4}")?;
        }
        writeln!(f)?;
        for (l, row) in self.labels.iter().zip(&self.entries) {
            write!(f, "{l:>5} |")?;
            for x in row {
                write!(f, "{x:>4}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Minimal positive integer diagonal D with D·B skew-symmetric, if one exists.
///
/// Works component by component over the graph of nonzero entries: relative
/// values are propagated by d_j = −d_i b_{ij} / b_{ji}, checked for
/// consistency, and each component is scaled to coprime integers.
pub fn skew_symmetrizer(b: &[Vec<i64>]) -> Option<Vec<i64>> {
    let n = b.len();
    if b.iter().any(|r| r.len() != n) {
        return None;
    }
    for i in 0..n {
        if b[i][i] != 0 {
            return None;
        }
        for j in 0..n {
            let (x, y) = (b[i][j], b[j][i]);
            if (x == 0) != (y == 0) || (x != 0 && x.signum() == y.signum()) {
                return None;
            }
        }
    }
    let mut d: Vec<Option<BigRational>> = vec![None; n];
    let mut out = vec![0i64; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(BigRational::from_integer(1.into()));
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let di = d[i].clone().expect("assigned");
            for j in 0..n {
                if b[i][j] == 0 {
                    continue;
                }
                let dj = -&di * BigRational::from_integer(b[i][j].into()) / BigRational::from_integer(b[j][i].into());
                match &d[j] {
                    Some(old) if *old != dj => return None,
                    Some(_) => {}
                    None => {
                        d[j] = Some(dj);
                        comp.push(j);
                        stack.push(j);
                    }
                }
            }
        }
        let lcm = comp.iter().fold(BigInt::from(1), |acc, &i| acc.lcm(d[i].as_ref().unwrap().denom()));
        let ints: Vec<BigInt> = comp.iter().map(|&i| (d[i].as_ref().unwrap() * &lcm).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        for (&i, v) in comp.iter().zip(ints) {
            out[i] = i64::try_from(v / &g).ok()?;
        }
    }
    Some(out)
}

/// No oriented cycle in the digraph with an edge k→l whenever b_{kl} > 0.
pub fn is_acyclic(b: &[Vec<i64>]) -> bool {
    let n = b.len();
    let mut indeg = vec![0usize; n];
    for row in b {
        for (l, &x) in row.iter().enumerate() {
            if x > 0 {
                indeg[l] += 1;
            }
        }
    }
    let mut queue: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
    let mut seen = 0;
    while let Some(k) = queue.pop() {
        seen += 1;
        for l in 0..n {
            if b[k][l] > 0 {
                indeg[l] -= 1;
                if indeg[l] == 0 {
                    queue.push(l);
                }
            }
        }
    }
    seen == n
}

/// Rank over the rationals by fraction-free Gaussian elimination.
pub fn matrix_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..m).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(rank, p);
        for r in 0..m {
            if r != rank && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let piv = a[rank][col].clone();
                for c in 0..n {
                    let v = &a[r][c] * &piv - &a[rank][c] * &f;
                    a[r][c] = v;
                }
                let g = a[r].iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
                if !g.is_zero() {
                    for x in a[r].iter_mut() {
                        *x = &*x / &g;
                    }
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b1() -> ExchangeMatrix {
        ExchangeMatrix::new(
            vec![1, 2, 3, -1, -2, -3],
            3,
            vec![vec![0, -3, 1], vec![1, 0, -1], vec![-1, 3, 0], vec![1, 0, 0], vec![-1, 1, 0], vec![0, -3, 2]],
        )
        .unwrap()
    }

    #[test]
    fn symmetrizers() {
        assert_eq!(skew_symmetrizer(&b1().principal()), Some(vec![1, 3, 1]));
        assert_eq!(skew_symmetrizer(&[vec![0, 1], vec![1, 0]]), None);
        assert_eq!(skew_symmetrizer(&[vec![0, 2], vec![-1, 0]]), Some(vec![1, 2]));
        assert_eq!(skew_symmetrizer(&[vec![0, 0], vec![0, 0]]), Some(vec![1, 1]));
        // inconsistent triangle
        assert_eq!(skew_symmetrizer(&[vec![0, 1, 1], vec![-2, 0, 1], vec![-1, -1, 0]]), None);
    }

    #[test]
    fn nonzero_diagonal_rejected() {
        let mut rows = b1().rows().to_vec();
        rows[2][2] = 1;
        assert_eq!(
            ExchangeMatrix::new(b1().labels().to_vec(), 3, rows),
            Err(MutationError::NotSkewSymmetrizable)
        );
    }

    #[test]
    fn mutation_rule() {
        let b = b1();
        let m = b.mutate(2).unwrap();
        for l in b.labels() {
            assert_eq!(m.get(*l, 2).unwrap(), -b.get(*l, 2).unwrap());
        }
        assert_eq!(m.mutate(2).unwrap(), b);
        assert!(matches!(b.mutate(-1), Err(MutationError::NotMutable(-1))));
        assert!(matches!(b.mutate(4), Err(MutationError::NotMutable(4))));
    }

    #[test]
    fn rank_and_cycles() {
        assert_eq!(matrix_rank(b1().rows()), 3);
        assert_eq!(matrix_rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(matrix_rank(&[vec![0, 0], vec![0, 0]]), 0);
        assert!(!is_acyclic(&b1().principal()));
        assert!(is_acyclic(&[vec![0, 1], vec![-1, 0]]));
    }
}
