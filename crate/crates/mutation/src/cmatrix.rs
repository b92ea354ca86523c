//! Signed arrow counts from the frozen vertices −1, −2, −3 to the mutable
//! vertices 1, 2, 3 along the bipartite belt, and their parity-dependent
//! recurrence.

use serde::{Deserialize, Serialize};

use crate::ValuedQuiver;

/// Rows −1, −2, −3; columns 1, 2, 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CMatrix(pub [[i64; 3]; 3]);

const FROZEN: [i32; 3] = [-1, -2, -3];
const MUTABLE: [i32; 3] = [1, 2, 3];

fn neg_part(x: i64) -> i64 {
    (-x).max(0)
}

fn pos_part(x: i64) -> i64 {
    x.max(0)
}

impl CMatrix {
    pub const INITIAL: CMatrix = CMatrix([[1, 0, 0], [-1, -1, 1], [0, -1, 1]]);

    /// Row for frozen label −1, −2 or −3.
    pub fn row(&self, frozen: i32) -> [i64; 3] {
        self.0[(-frozen - 1) as usize]
    }

    /// Read the table off a quiver.
    pub fn from_quiver(q: &ValuedQuiver) -> CMatrix {
        let mut c = [[0; 3]; 3];
        for (i, f) in FROZEN.iter().enumerate() {
            for (j, m) in MUTABLE.iter().enumerate() {
                c[i][j] = q.signed(*f, *m);
            }
        }
        CMatrix(c)
    }

    /// C^{(r+1)} from C^{(r)}.
    ///
    /// Even r (mutating at 1 and 2) flips columns 1, 2 and corrects column 3
    /// by [C_{i1}]₋ and a tripled-or-not [C_{i2}]₋; odd r (mutating at 3)
    /// flips column 3 and corrects the other two.
    pub fn step(&self, r: i64) -> CMatrix {
        let mut out = [[0; 3]; 3];
        for (i, c) in self.0.iter().enumerate() {
            out[i] = if r.rem_euclid(2) == 0 {
                let f = [3, 1, 3][i];
                [-c[0], -c[1], c[2] - neg_part(c[0]) - f * neg_part(c[1])]
            } else {
                let f = [1, 3, 1][i];
                [c[0] - neg_part(c[2]), c[1] - f * neg_part(c[2]), -c[2]]
            };
        }
        CMatrix(out)
    }

    /// C^{(r)} from C^{(r+1)}: the inverse of [`CMatrix::step`] at the same r.
    pub fn step_back(&self, r: i64) -> CMatrix {
        let mut out = [[0; 3]; 3];
        for (i, c) in self.0.iter().enumerate() {
            out[i] = if r.rem_euclid(2) == 0 {
                let f = [3, 1, 3][i];
                [-c[0], -c[1], c[2] + pos_part(c[0]) + f * pos_part(c[1])]
            } else {
                let f = [1, 3, 1][i];
                [c[0] + pos_part(c[2]), c[1] + f * pos_part(c[2]), -c[2]]
            };
        }
        CMatrix(out)
    }
}

/// C^{(r)} for every r in `lo..=hi` (lo ≤ 0 ≤ hi) starting from the initial value.
pub fn iterate(lo: i64, hi: i64) -> std::collections::BTreeMap<i64, CMatrix> {
    assert!(lo <= 0 && hi >= 0);
    let mut out = std::collections::BTreeMap::new();
    let mut c = CMatrix::INITIAL;
    out.insert(0, c);
    for r in 0..hi {
        c = c.step(r);
        out.insert(r + 1, c);
    }
    c = CMatrix::INITIAL;
    for r in (lo..0).rev() {
        c = c.step_back(r);
        out.insert(r, c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn back_inverts_forward() {
        let cs = iterate(-12, 12);
        for r in -12..12 {
            assert_eq!(cs[&r].step(r), cs[&(r + 1)]);
            assert_eq!(cs[&(r + 1)].step_back(r), cs[&r]);
        }
    }

    #[test]
    fn first_steps() {
        let cs = iterate(-1, 2);
        assert_eq!(cs[&1], CMatrix([[-1, 0, 0], [1, 1, -1], [0, 1, -2]]));
        assert_eq!(cs[&2], CMatrix([[-1, 0, 0], [0, -2, 1], [-2, -1, 2]]));
        assert_eq!(cs[&-1], CMatrix([[1, 0, 0], [0, 2, -1], [1, 0, -1]]));
    }

    #[test]
    fn middle_row_has_period_four() {
        let cs = iterate(-40, 40);
        let cycle = [[-1, -1, 1], [1, 1, -1], [0, -2, 1], [0, 2, -1]];
        for (r, c) in &cs {
            assert_eq!(c.row(-2), cycle[r.rem_euclid(4) as usize]);
        }
    }
}
