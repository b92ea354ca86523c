//! Closed forms stated for the belt, written independently of the engine:
//! the degree tables, the solved arrow table, and the degree recurrence.
//!
//! Everything here is transcribed as stated, typos included; the scenarios
//! compare it with what the engine computes.

use std::collections::BTreeMap;

use mutation::{CMatrix, DegreeVector};

fn dv(n: i64, p: i64, q: i64) -> DegreeVector {
    DegreeVector::new(n, p, q)
}

fn even(r: i64) -> bool {
    r.rem_euclid(2) == 0
}

fn d1_odd(r: i64) -> DegreeVector {
    match r {
        _ if r >= 0 && even(r) => dv(r / 2 + 1, 1, 1),
        _ if r > 0 => dv((r + 1) / 2, 1, 0),
        -2 => dv(1, 1, 1),
        _ if !even(r) => dv((1 - r) / 2, -1, -1),
        _ => dv(-r / 2 - 1, -1, 0),
    }
}

fn d2_odd(r: i64) -> DegreeVector {
    match r {
        _ if r >= 0 && even(r) => dv(3 * r / 2 + 3, 3, 1),
        _ if r > 0 => dv(3 * (r + 1) / 2 + 3, 3, 2),
        -1 => dv(3, 3, 2),
        _ if even(r) => dv(-3 * r / 2, -3, -2),
        _ => dv(-3 * (r + 1) / 2, -3, -1),
    }
}

fn d3_even(r: i64) -> DegreeVector {
    match r {
        _ if r >= 0 => dv(2 + r, 2, 1),
        -1 => dv(2, 0, 0),
        _ => dv(-r, -2, -1),
    }
}

fn g1_odd(r: i64) -> DegreeVector {
    match r {
        _ if r >= 0 && even(r) => dv(r / 2 + 2, 3, 1),
        _ if r > 0 => dv((r + 1) / 2, 0, 1),
        -2 => dv(1, 3, 1),
        _ if !even(r) => dv((1 - r) / 2, -3, -1),
        _ => dv(-r / 2 - 1, 0, -1),
    }
}

fn g2_odd(r: i64) -> DegreeVector {
    match r {
        _ if r >= 0 && even(r) => dv(r / 2 + 1, 2, 1),
        _ if r > 0 => dv((r + 3) / 2, 1, 1),
        -1 => dv(1, 2, 1),
        _ if even(r) => dv(-r / 2, -2, -1),
        _ => dv(-(r + 1) / 2, -1, -1),
    }
}

fn g3_even(r: i64) -> DegreeVector {
    match r {
        _ if r >= 0 => dv(2 + r, 3, 2),
        -1 => dv(2, 0, 0),
        _ => dv(-r, -3, -2),
    }
}

/// Stated degree of the belt variable at `vertex` (1, 2, 3) of seed `r`.
///
/// Vertices 1 and 2 are given at odd indices 2s+1 and repeat at 2s+2;
/// vertex 3 is given at even indices 2s and repeats at 2s+1.
pub fn stated_degree(case: u8, vertex: i32, r: i64) -> DegreeVector {
    let f: fn(i64) -> DegreeVector = match (case, vertex) {
        (1, 1) => d1_odd,
        (1, 2) => d2_odd,
        (1, 3) => d3_even,
        (2, 1) => g1_odd,
        (2, 2) => g2_odd,
        (2, 3) => g3_even,
        _ => panic!("case {case} vertex {vertex}"),
    };
    if vertex == 3 {
        f((r - r.rem_euclid(2)) / 2)
    } else {
        let odd = if even(r) { r - 1 } else { r };
        f((odd - 1) / 2)
    }
}

/// Stated single values: (case, vertex, r, degree). The last one disagrees
/// with the stated table, which gives (1,−2,−1) there; (1,2,1) is the table's value at r = −1.
pub const MILESTONES: [(u8, i32, i64, DegreeVector); 6] = [
    (1, 1, -3, DegreeVector::new(1, 1, 1)),
    (1, 1, -7, DegreeVector::new(1, -1, 0)),
    (2, 1, -3, DegreeVector::new(1, 3, 1)),
    (2, 2, -5, DegreeVector::new(1, -1, -1)),
    (2, 1, -7, DegreeVector::new(1, 0, -1)),
    (2, 2, -3, DegreeVector::new(1, 2, 1)),
];

/// Stated degrees of the two extra variables of case 2.
pub const DEG_U: DegreeVector = DegreeVector::new(1, 1, 0);
pub const DEG_Z: DegreeVector = DegreeVector::new(1, -1, 0);

fn c11(r: i64) -> i64 {
    // C_{-1,1}^{(2s)} = C_{-1,1}^{(2s+1)}
    let odd = if even(r) { r + 1 } else { r };
    let s = (odd - 1) / 2;
    if odd == 1 {
        -1
    } else if s % 2 == 1 {
        (s + 1) / 2
    } else {
        (s - 2) / 2
    }
}

/// Row −1 of the solved table.
pub fn lemma_row_minus1(r: i64) -> [i64; 3] {
    if r >= 1 {
        let sign = |e: i64| if e.rem_euclid(2) == 0 { 1 } else { -1 };
        [c11(r), sign(r + 1) * r.div_euclid(4), sign(r) * ((r + 1).div_euclid(2) - 1)]
    } else {
        lemma_row_minus1(1 - r).map(|x| -x)
    }
}

/// Row −2: period four.
pub fn lemma_row_minus2(r: i64) -> [i64; 3] {
    [[-1, -1, 1], [1, 1, -1], [0, -2, 1], [0, 2, -1]][r.rem_euclid(4) as usize]
}

/// Row −3: row −1 shifted by four.
pub fn lemma_row_minus3(r: i64) -> [i64; 3] {
    lemma_row_minus1(r + 4)
}

pub fn lemma_cmatrix(r: i64) -> CMatrix {
    CMatrix([lemma_row_minus1(r), lemma_row_minus2(r), lemma_row_minus3(r)])
}

fn neg(x: i64) -> i64 {
    (-x).max(0)
}

/// Frozen degrees (rows −1, −2, −3) and the stated initial mutable degrees.
pub fn recurrence_data(case: u8) -> ([DegreeVector; 3], [DegreeVector; 3]) {
    if case == 1 {
        ([dv(1, -2, -1), dv(3, 0, 0), dv(1, 2, 1)], [dv(1, -1, -1), dv(2, 2, 1), dv(3, 3, 2)])
    } else {
        ([dv(1, -3, -2), dv(1, 0, 0), dv(1, 3, 2)], [dv(1, -3, -1), dv(1, 2, 1), dv(2, 3, 2)])
    }
}

/// Multipliers of [C_{i,k}]₋ deg(X_i) for k = 1, 2, 3 (outer) and i = −1, −2, −3 (inner).
fn factors(case: u8) -> [[i64; 3]; 3] {
    if case == 1 {
        [[1, 1, 1], [3, 1, 3], [1, 1, 1]]
    } else {
        [[1, 3, 1], [1, 1, 1], [1, 3, 1]]
    }
}

/// Which table column enters the update of vertex k. The printed update of
/// vertex 2 reads column 1 in row −2; `literal` keeps that, otherwise column 2.
fn column(k: usize, row: usize, literal: bool) -> usize {
    if literal && k == 1 && row == 1 {
        0
    } else {
        k
    }
}

/// Iterate the degree recurrence over `lo..=hi` from given initial degrees.
///
/// Going up from r, vertices 1 and 2 change for even r and vertex 3 for odd r;
/// d⁽ʳ⁺¹⁾ + d⁽ʳ⁾ is a function of C⁽ʳ⁾, so the same relation runs downward.
pub fn recurrence(
    case: u8,
    initial: [DegreeVector; 3],
    literal: bool,
    lo: i64,
    hi: i64,
) -> BTreeMap<i64, [DegreeVector; 3]> {
    let (frozen, _) = recurrence_data(case);
    let cs = mutation::cmatrix::iterate(lo.min(0), hi.max(0));
    let fac = factors(case);
    let update = |d: [DegreeVector; 3], r: i64| {
        let c = cs[&r].0;
        let mut out = d;
        let ks: &[usize] = if even(r) { &[0, 1] } else { &[2] };
        for &k in ks {
            let mut s = DegreeVector::ZERO;
            for row in 0..3 {
                s = s + (fac[k][row] * neg(c[row][column(k, row, literal)])) * frozen[row];
            }
            out[k] = s - d[k];
        }
        out
    };
    let mut out = BTreeMap::new();
    out.insert(0, initial);
    let mut d = initial;
    for r in 0..hi {
        d = update(d, r);
        out.insert(r + 1, d);
    }
    d = initial;
    for r in (lo..0).rev() {
        d = update(d, r);
        out.insert(r, d);
    }
    out.into_iter().filter(|(r, _)| (lo..=hi).contains(r)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stated_examples() {
        for s in 0..=5 {
            assert_eq!(stated_degree(1, 3, 2 * s), dv(2 + s, 2, 1));
        }
        assert_eq!(stated_degree(2, 3, -2), dv(2, 0, 0));
        assert_eq!(stated_degree(1, 1, -3), dv(1, 1, 1));
        for (case, v, r, d) in &MILESTONES[..5] {
            assert_eq!(stated_degree(*case, *v, *r), *d, "{case} {v} {r}");
        }
        assert_eq!(stated_degree(2, 2, -3), dv(1, -2, -1));
        assert_eq!(stated_degree(2, 2, -1), dv(1, 2, 1));
    }

    #[test]
    fn lemma_small_values() {
        assert_eq!(lemma_row_minus1(1), [-1, 0, -0]);
        assert_eq!(lemma_row_minus1(0), [1, 0, 0]);
        assert_eq!(lemma_row_minus2(0), [-1, -1, 1]);
        assert_eq!(lemma_cmatrix(0).row(-3), lemma_row_minus1(4));
    }

    #[test]
    fn recurrence_is_reversible() {
        let (_, init) = recurrence_data(1);
        let t = recurrence(1, init, true, -6, 6);
        assert_eq!(t.len(), 13);
        assert_eq!(t[&0], init);
    }
}
