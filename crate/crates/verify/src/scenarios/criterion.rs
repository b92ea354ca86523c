//! Hypotheses of the acyclicity criterion for the underlined seeds.

use mutation::{catalog, is_acyclic, matrix_rank, skew_symmetrizer};

use super::setup_failure;
use crate::seeds::underline_zero;
use crate::CheckReport;

/// Expected skew-symmetrizers of the principal parts, per case.
pub const SYMMETRIZERS: [[i64; 3]; 2] = [[1, 3, 1], [3, 1, 3]];

pub fn run() -> Vec<CheckReport> {
    let mut out = Vec::new();
    for case in [1u8, 2] {
        let p = format!("criterion.case{case}.");
        let b = catalog::underline_matrix(case);
        let rank = matrix_rank(b.rows());
        out.push(CheckReport::outcome(
            format!("{p}rank"),
            "the extended exchange matrix has full rank 3",
            rank == 3,
            format!("rank {rank}"),
            None,
        ));
        let d = skew_symmetrizer(&b.principal());
        let want = SYMMETRIZERS[case as usize - 1];
        out.push(CheckReport::outcome(
            format!("{p}symmetrizer"),
            format!("principal part is skew-symmetrized by diag{want:?}"),
            d.as_deref() == Some(&want[..]),
            format!("found {d:?}"),
            None,
        ));
        match underline_zero(case) {
            Ok(z) => {
                let pr = z.seed.matrix().principal();
                out.push(CheckReport::outcome(
                    format!("{p}acyclic"),
                    "the bipartite seed has an acyclic quiver",
                    is_acyclic(&pr),
                    format!("principal part {pr:?}"),
                    None,
                ));
            }
            Err(e) => out.push(setup_failure(&format!("{p}acyclic"), "bipartite seed", &e)),
        }
    }
    out
}
