use std::fmt;

use laurent::{Coeff, Rational};
use num::{One, Zero};

/// Dense square matrix over a coefficient ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat<C> {
    rows: Vec<Vec<C>>,
}

impl<C: Coeff> Mat<C> {
    pub fn from_rows(rows: Vec<Vec<C>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "square matrix");
        Mat { rows }
    }

    pub fn zero(n: usize, like: &C) -> Self {
        Mat { rows: vec![vec![like.zero_like(); n]; n] }
    }

    pub fn identity(n: usize, like: &C) -> Self {
        let mut m = Self::zero(n, like);
        for i in 0..n {
            m.rows[i][i] = like.one_like();
        }
        m
    }

    pub fn diagonal(d: Vec<C>) -> Self {
        let like = d[0].clone();
        let mut m = Self::zero(d.len(), &like);
        for (i, x) in d.into_iter().enumerate() {
            m.rows[i][i] = x;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C) {
        self.rows[i][j] = v;
    }

    pub fn rows(&self) -> &[Vec<C>] {
        &self.rows
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> Vec<C> {
        self.rows.iter().flatten().cloned().collect()
    }

    pub fn like(&self) -> &C {
        &self.rows[0][0]
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.dim();
        let mut out = Self::zero(n, self.like());
        for i in 0..n {
            for k in 0..n {
                let a = &self.rows[i][k];
                if a.is_zero_value() {
                    continue;
                }
                for j in 0..n {
                    let b = &o.rows[k][j];
                    if !b.is_zero_value() {
                        out.rows[i][j] = out.rows[i][j].plus(&a.times(b));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a.plus(b))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a.minus(b))
    }

    pub fn scale(&self, c: &C) -> Self {
        Mat { rows: self.rows.iter().map(|r| r.iter().map(|x| x.times(c)).collect()).collect() }
    }

    fn zip(&self, o: &Self, f: impl Fn(&C, &C) -> C) -> Self {
        Mat {
            rows: self.rows.iter().zip(&o.rows).map(|(a, b)| a.iter().zip(b).map(|(x, y)| f(x, y)).collect()).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim();
        Mat { rows: (0..n).map(|j| (0..n).map(|i| self.rows[i][j].clone()).collect()).collect() }
    }

    /// Commutator [A, B] = AB − BA.
    pub fn bracket(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::identity(self.dim(), self.like()), |acc, _| acc.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Coeff::is_zero_value)
    }

    /// exp(tX) for nilpotent X, summing the series until the power vanishes.
    pub fn exp_nilpotent(&self, t: &C) -> Self {
        let n = self.dim();
        let mut out = Self::identity(n, self.like());
        let mut term = Self::identity(n, self.like());
        for k in 1..=n {
            let c = t.from_rational_like(&Rational::new(1.into(), (k as i64).into()));
            term = term.mul(self).scale(&t.times(&c));
            if term.is_zero() {
                return out;
            }
            out = out.add(&term);
        }
        assert!(term.mul(self).is_zero(), "matrix is not nilpotent");
        out
    }

    /// Entrywise image under a ring map.
    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Mat<D> {
        Mat { rows: self.rows.iter().map(|r| r.iter().map(&f).collect()).collect() }
    }
}

impl Mat<Rational> {
    /// Determinant by Gaussian elimination over the rationals.
    pub fn det(&self) -> Rational {
        let mut a = self.rows.clone();
        let n = a.len();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else { return Rational::zero() };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            let piv = a[c][c].clone();
            det *= &piv;
            for r in c + 1..n {
                if a[r][c].is_zero() {
                    continue;
                }
                let f = &a[r][c] / &piv;
                for k in c..n {
                    let v = &a[c][k] * &f;
                    a[r][k] -= v;
                }
            }
        }
        det
    }
}

/// Basis of the nullspace of a rational matrix given by rows (reduced row echelon form).
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut a: Vec<Vec<Rational>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let piv = a[r][c].clone();
        for x in a[r].iter_mut() {
            *x = &*x / &piv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in 0..ncols {
                    let v = &a[r][k] * &f;
                    a[i][k] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][f].clone();
            }
            v
        })
        .collect()
}

impl<C: Coeff + fmt::Display> fmt::Display for Mat<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(|x| format!("{x:>6}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use laurent::rat;

    #[test]
    fn det_and_nullspace() {
        let m = Mat::from_rows(vec![vec![rat(2, 1), rat(1, 1)], vec![rat(4, 1), rat(3, 1)]]);
        assert_eq!(m.det(), rat(2, 1));
        let ns = nullspace(&[vec![rat(1, 1), rat(2, 1), rat(0, 1)]], 3);
        assert_eq!(ns.len(), 2);
    }

    #[test]
    fn exponential_of_nilpotent() {
        let one = rat(1, 1);
        let mut x = Mat::zero(3, &one);
        x.set(0, 1, rat(1, 1));
        x.set(1, 2, rat(1, 1));
        let e = x.exp_nilpotent(&rat(2, 1));
        assert_eq!(*e.get(0, 2), rat(2, 1));
        assert_eq!(*e.get(0, 1), rat(2, 1));
    }
}
