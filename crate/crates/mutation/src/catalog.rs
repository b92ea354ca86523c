//! The concrete G₂ exchange matrices, vertex classes and relabelings.
//!
//! `case` is 1 or 2 throughout and selects the first or second fundamental
//! weight. Row order is mutable labels first.

use crate::{ExchangeMatrix, ValuedQuiver};

pub const UNDERLINE_LABELS: [i32; 6] = [1, 2, 3, -1, -2, -3];
pub const BFZ_LABELS: [i32; 8] = [1, 2, 3, 4, -1, -2, 5, 6];

fn check_case(case: u8) {
    assert!(case == 1 || case == 2, "case must be 1 or 2");
}

fn underline_rows(case: u8) -> Vec<Vec<i64>> {
    check_case(case);
    if case == 1 {
        vec![vec![0, -3, 1], vec![1, 0, -1], vec![-1, 3, 0], vec![1, 0, 0], vec![-1, 1, 0], vec![0, -3, 2]]
    } else {
        vec![vec![0, -1, 1], vec![3, 0, -3], vec![-1, 1, 0], vec![1, 0, 0], vec![-3, 1, 0], vec![0, -1, 2]]
    }
}

/// Initial exchange matrix of the seed for the i-th partial flag variety.
///
/// The printed table for case 1 has b₃₃ = 1; a seed needs a zero diagonal,
/// so 0 is used here and [`underline_matrix_as_printed`] keeps the original.
pub fn underline_matrix(case: u8) -> ExchangeMatrix {
    ExchangeMatrix::new(UNDERLINE_LABELS.to_vec(), 3, underline_rows(case)).expect("valid table")
}

/// Case-1 table exactly as printed, including the diagonal entry b₃₃ = 1.
pub fn underline_matrix_as_printed() -> ExchangeMatrix {
    let mut rows = underline_rows(1);
    rows[2][2] = 1;
    ExchangeMatrix::new_unchecked(UNDERLINE_LABELS.to_vec(), 3, rows).expect("well-shaped")
}

/// Vertex classes of the underlined and GLS seeds, in row order.
pub fn underline_classes(case: u8) -> Vec<i64> {
    check_case(case);
    UNDERLINE_LABELS
        .iter()
        .map(|l| match (case, l.abs() % 2 == 1) {
            (1, true) | (2, false) => 1,
            _ => 3,
        })
        .collect()
}

/// Initial matrices of the GLS seeds; they differ from the underlined ones only in row −3.
pub fn gls_matrix(case: u8) -> ExchangeMatrix {
    let mut rows = underline_rows(case);
    rows[5] = vec![0, 0, 1];
    ExchangeMatrix::new(UNDERLINE_LABELS.to_vec(), 3, rows).expect("valid table")
}

/// Classes for the two double-reduced-word seeds of the big cell.
pub fn bfz_classes(case: u8) -> Vec<i64> {
    check_case(case);
    let first: &[i32] = if case == 1 { &[-1, 1, 3, 5] } else { &[-1, 2, 4, 6] };
    BFZ_LABELS.iter().map(|l| if first.contains(l) { 1 } else { 3 }).collect()
}

/// Arrows of the seed for reduced word (1,2,1,2,1,2) (case 1) or (2,1,2,1,2,1) (case 2).
pub fn bfz_arrows(case: u8) -> Vec<(i32, i32)> {
    check_case(case);
    if case == 1 {
        vec![(-1, 1), (1, 3), (1, -2), (3, 5), (3, 2), (5, 4), (-2, 2), (2, 4), (2, 1), (4, 6), (4, 3)]
    } else {
        vec![(-1, 2), (2, 4), (2, 1), (4, 6), (4, 3), (-2, 1), (1, 3), (1, -1), (3, 5), (3, 2), (5, 4)]
    }
}

pub fn bfz_matrix(case: u8) -> ExchangeMatrix {
    let q = ValuedQuiver::from_arrows(BFZ_LABELS.to_vec(), 4, bfz_classes(case), &bfz_arrows(case)).expect("valid");
    let b = q.decode();
    ExchangeMatrix::new(b.labels().to_vec(), b.n(), b.rows().to_vec()).expect("skew-symmetrizable")
}

/// Case-1 big-cell matrix written out entry by entry, for cross-checking the arrow list.
pub fn bfz1_table() -> ExchangeMatrix {
    ExchangeMatrix::new(
        BFZ_LABELS.to_vec(),
        4,
        vec![
            vec![0, -3, 1, 0],
            vec![1, 0, -1, 1],
            vec![-1, 3, 0, -3],
            vec![0, -1, 1, 0],
            vec![1, 0, 0, 0],
            vec![-1, 1, 0, 0],
            vec![0, 0, -1, 3],
            vec![0, 0, 0, -1],
        ],
    )
    .expect("valid table")
}

/// Vertex correspondence (new label, old label) that turns the seed obtained
/// from the big-cell seed by mutating at 4 then 2 into the underlined seed:
/// old vertex 2 is frozen and becomes −2; unlisted old vertices are dropped.
pub fn freezing_correspondence(case: u8) -> Vec<(i32, i32)> {
    check_case(case);
    let minus_one = if case == 1 { -1 } else { -2 };
    vec![(1, 1), (2, 4), (3, 3), (-1, minus_one), (-2, 2), (-3, 5)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skew_symmetrizer;

    #[test]
    fn symmetrizers_of_tables() {
        assert_eq!(skew_symmetrizer(&underline_matrix(1).principal()), Some(vec![1, 3, 1]));
        assert_eq!(skew_symmetrizer(&underline_matrix(2).principal()), Some(vec![3, 1, 3]));
        assert_eq!(skew_symmetrizer(&underline_matrix_as_printed().principal()), None);
    }

    #[test]
    fn bfz_arrow_list_matches_table() {
        assert_eq!(bfz_matrix(1), bfz1_table());
    }
}
