//! Valued quivers for G₂-type seeds.
//!
//! Each vertex carries a class `d ∈ {1, 3}` and arrows are counted without
//! valuation. An arrow j→k between vertices of the same class is an entry
//! b_{jk} = 1; between classes it is b_{jk} = d_k / min(d_j, d_k), so a
//! class-1 → class-3 arrow reads 3 and the reverse reads 1. Mutation follows
//! the combinatorial rules directly: compose two-step paths (tripled when both
//! steps cross classes), reverse arrows at the vertex, drop frozen–frozen
//! arrows and cancel two-cycles.

use std::collections::BTreeMap;

use crate::{ExchangeMatrix, MutationError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuedQuiver {
    labels: Vec<i32>,
    n: usize,
    class: Vec<i64>,
    arrows: BTreeMap<(i32, i32), u64>,
}

impl ValuedQuiver {
    /// Build from an arrow list; duplicate arrows add up and two-cycles cancel.
    pub fn from_arrows(
        labels: Vec<i32>,
        n: usize,
        class: Vec<i64>,
        arrows: &[(i32, i32)],
    ) -> Result<Self, MutationError> {
        if class.len() != labels.len() || class.iter().any(|d| *d != 1 && *d != 3) {
            return Err(MutationError::EncodingMismatch("classes must be 1 or 3, one per vertex".into()));
        }
        let mut q = ValuedQuiver { labels, n, class, arrows: BTreeMap::new() };
        for &(a, b) in arrows {
            q.pos(a)?;
            q.pos(b)?;
            *q.arrows.entry((a, b)).or_insert(0) += 1;
        }
        q.normalize();
        Ok(q)
    }

    /// Encode an exchange matrix; fails if some entry is not a whole number of arrows.
    pub fn encode(b: &ExchangeMatrix, class: Vec<i64>) -> Result<Self, MutationError> {
        let mut q = Self::from_arrows(b.labels().to_vec(), b.n(), class, &[])?;
        for (ri, &i) in b.labels().iter().enumerate() {
            for (cj, &j) in b.mutable_labels().iter().enumerate() {
                let x = b.rows()[ri][cj];
                if x <= 0 {
                    continue;
                }
                let unit = q.unit(i, j);
                if x % unit != 0 {
                    return Err(MutationError::EncodingMismatch(format!("b[{i}][{j}] = {x} is not a multiple of {unit}")));
                }
                *q.arrows.entry((i, j)).or_insert(0) += (x / unit) as u64;
            }
            // a frozen row with a negative entry is an arrow into the frozen vertex
            if ri >= b.n() {
                for (cj, &j) in b.mutable_labels().iter().enumerate() {
                    let x = b.rows()[ri][cj];
                    if x < 0 {
                        let unit = q.unit(i, j);
                        if x % unit != 0 {
                            return Err(MutationError::EncodingMismatch(format!(
                                "b[{i}][{j}] = {x} is not a multiple of {unit}"
                            )));
                        }
                        *q.arrows.entry((j, i)).or_insert(0) += (-x / unit) as u64;
                    }
                }
            }
        }
        q.normalize();
        if q.decode() != *b {
            return Err(MutationError::EncodingMismatch("matrix is not balanced for these classes".into()));
        }
        Ok(q)
    }

    /// The exchange matrix this quiver stands for.
    pub fn decode(&self) -> ExchangeMatrix {
        let mutable = &self.labels[..self.n];
        let rows = self
            .labels
            .iter()
            .map(|&i| mutable.iter().map(|&j| self.entry(i, j)).collect())
            .collect();
        ExchangeMatrix::new_unchecked(self.labels.clone(), self.n, rows).expect("well-shaped")
    }

    pub fn labels(&self) -> &[i32] {
        &self.labels
    }

    pub fn arrows(&self) -> &BTreeMap<(i32, i32), u64> {
        &self.arrows
    }

    /// Number of arrows from `a` to `b`.
    pub fn count(&self, a: i32, b: i32) -> u64 {
        self.arrows.get(&(a, b)).copied().unwrap_or(0)
    }

    /// Signed arrow count: arrows a→b minus arrows b→a.
    pub fn signed(&self, a: i32, b: i32) -> i64 {
        self.count(a, b) as i64 - self.count(b, a) as i64
    }

    fn pos(&self, l: i32) -> Result<usize, MutationError> {
        self.labels.iter().position(|&x| x == l).ok_or(MutationError::UnknownLabel(l))
    }

    fn d(&self, l: i32) -> i64 {
        self.class[self.pos(l).expect("known label")]
    }

    fn is_frozen(&self, l: i32) -> bool {
        self.pos(l).expect("known label") >= self.n
    }

    fn vertical(&self, a: i32, b: i32) -> bool {
        self.d(a) != self.d(b)
    }

    /// Matrix value of a single arrow i→j.
    fn unit(&self, i: i32, j: i32) -> i64 {
        self.d(j) / self.d(i).min(self.d(j))
    }

    fn entry(&self, i: i32, j: i32) -> i64 {
        self.signed(i, j) * self.unit(i, j)
    }

    fn normalize(&mut self) {
        let frozen: Vec<i32> = self.labels[self.n..].to_vec();
        self.arrows.retain(|(a, b), c| *c > 0 && a != b && !(frozen.contains(a) && frozen.contains(b)));
        let keys: Vec<(i32, i32)> = self.arrows.keys().copied().collect();
        for (a, b) in keys {
            let s = self.count(a, b);
            let t = self.count(b, a);
            if s > 0 && t > 0 {
                let m = s.min(t);
                self.arrows.insert((a, b), s - m);
                self.arrows.insert((b, a), t - m);
            }
        }
        self.arrows.retain(|_, c| *c > 0);
    }

    /// Mutation at mutable vertex `i` by the path-composition rules.
    pub fn mutate(&self, i: i32) -> Result<Self, MutationError> {
        let p = self.pos(i)?;
        if p >= self.n {
            return Err(MutationError::NotMutable(i));
        }
        let incoming: Vec<(i32, u64)> =
            self.arrows.iter().filter(|((_, b), _)| *b == i).map(|((a, _), c)| (*a, *c)).collect();
        let outgoing: Vec<(i32, u64)> =
            self.arrows.iter().filter(|((a, _), _)| *a == i).map(|((_, b), c)| (*b, *c)).collect();
        let mut arrows: BTreeMap<(i32, i32), u64> = BTreeMap::new();
        for (&(a, b), &c) in &self.arrows {
            let key = if a == i || b == i { (b, a) } else { (a, b) };
            *arrows.entry(key).or_insert(0) += c;
        }
        for &(j, cj) in &incoming {
            for &(k, ck) in &outgoing {
                if j == k || (self.is_frozen(j) && self.is_frozen(k)) {
                    continue;
                }
                let factor = if self.vertical(j, i) && self.vertical(i, k) { 3 } else { 1 };
                *arrows.entry((j, k)).or_insert(0) += cj * ck * factor;
            }
        }
        let mut q = ValuedQuiver { labels: self.labels.clone(), n: self.n, class: self.class.clone(), arrows };
        q.normalize();
        Ok(q)
    }
}
