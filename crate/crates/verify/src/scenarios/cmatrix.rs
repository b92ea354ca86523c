//! Arrow counts from frozen to mutable vertices along the belt.

use mutation::cmatrix::iterate;
use mutation::belt::step_between;
use mutation::{catalog, CMatrix, ValuedQuiver};

use crate::oracle::{lemma_row_minus1, lemma_row_minus2, lemma_row_minus3};
use crate::seeds::underline_zero;
use crate::{CheckReport, Counterexample, VerifyError};

/// Largest |r| for which the table is checked.
pub const CMATRIX_RANGE: i64 = 40;

fn row_report(row: i32, stated: impl Fn(i64) -> [i64; 3], lo: i64, hi: i64) -> CheckReport {
    let cs = iterate(lo, hi);
    let bad: Vec<(i64, [i64; 3], [i64; 3])> = cs
        .iter()
        .filter_map(|(r, c)| {
            let want = stated(*r);
            (c.row(row) != want).then_some((*r, c.row(row), want))
        })
        .collect();
    let id = format!("cmatrix.row{row}");
    let claim = format!("closed form of row {row} for r in [{lo}, {hi}]");
    match bad.first() {
        None => CheckReport::pass(id, claim, cs.len(), format!("{} values agree", cs.len())),
        Some((r, got, want)) => {
            let entries: usize = bad
                .iter()
                .map(|(_, g, w)| g.iter().zip(w).filter(|(a, b)| a != b).count())
                .sum();
            let sign_only = bad.iter().all(|(_, g, w)| g.iter().zip(w).all(|(a, b)| a == b || *a == -*b));
            let cx = Counterexample::new(&[])
                .value("r", r)
                .value("iterate", format!("{got:?}"))
                .value("closed form", format!("{want:?}"));
            CheckReport::fail(
                id,
                claim,
                cs.len(),
                format!(
                    "{} of {} values differ ({entries} entries{}), first at r = {r}",
                    bad.len(),
                    cs.len(),
                    if sign_only { ", all by sign" } else { "" }
                ),
                cx,
            )
        }
    }
}

fn shift_report(lo: i64, hi: i64) -> CheckReport {
    let cs = iterate(lo, hi + 4);
    let bad: Vec<i64> = (lo..=hi).filter(|r| cs[r].row(-3) != cs[&(r + 4)].row(-1)).collect();
    CheckReport::outcome(
        "cmatrix.shift",
        "row -3 at r equals row -1 at r + 4",
        bad.is_empty(),
        if bad.is_empty() { format!("holds for r in [{lo}, {hi}]") } else { format!("fails at r = {bad:?}") },
        None,
    )
}

fn quiver_report(case: u8, lo: i64, hi: i64) -> Result<CheckReport, VerifyError> {
    let cs = iterate(lo, hi);
    let base = underline_zero(case)?.seed.matrix().clone();
    let classes = catalog::underline_classes(case);
    // matrices only: the clusters grow too fast to be worth carrying to |r| = 40
    let mut mats = std::collections::BTreeMap::new();
    mats.insert(0, base.clone());
    let mut b = base.clone();
    for r in 0..hi {
        for &k in step_between(r) {
            b = b.mutate(k)?;
        }
        mats.insert(r + 1, b.clone());
    }
    let mut b = base;
    for r in (lo..0).rev() {
        for &k in step_between(r) {
            b = b.mutate(k)?;
        }
        mats.insert(r, b.clone());
    }
    let mut bad = Vec::new();
    for (r, m) in &mats {
        let c = CMatrix::from_quiver(&ValuedQuiver::encode(m, classes.clone())?);
        if c != cs[r] {
            bad.push(*r);
        }
    }
    Ok(CheckReport::outcome(
        format!("cmatrix.case{case}.quiver"),
        "the recurrence reproduces the arrow counts of the belt quivers",
        bad.is_empty(),
        if bad.is_empty() { format!("{} seeds agree", mats.len()) } else { format!("differ at r = {bad:?}") },
        None,
    ))
}

pub fn run(range: i64) -> Vec<CheckReport> {
    let (lo, hi) = (-range.abs(), range.abs());
    let mut out = vec![
        row_report(-1, lemma_row_minus1, lo, hi),
        row_report(-2, lemma_row_minus2, lo, hi),
        row_report(-3, lemma_row_minus3, lo, hi),
        shift_report(lo, hi),
    ];
    for case in [1, 2] {
        out.push(quiver_report(case, lo, hi).unwrap_or_else(|e| {
            super::setup_failure(&format!("cmatrix.case{case}.quiver"), "belt quivers", &e)
        }));
    }
    out
}
