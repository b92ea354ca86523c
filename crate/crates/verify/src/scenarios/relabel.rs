//! The eleven-step passage between the two big-cell seeds.

use std::collections::BTreeMap;

use itertools::Itertools;
use mutation::ExchangeMatrix;

use super::bridged;
use crate::seeds::bfz;
use crate::{check_equal, CheckReport, Config, VerifyError};

/// Composition order, applied to the case-2 seed.
pub const ELEVEN_COMPOSITION: [i32; 11] = [1, 3, 2, 1, 2, 4, 2, 1, 2, 3, 1];

/// Bijections old→new preserving mutability under which `b` becomes `target`.
fn relabelings(b: &ExchangeMatrix, target: &ExchangeMatrix) -> Vec<BTreeMap<i32, i32>> {
    let tm = target.mutable_labels().to_vec();
    let tf = target.frozen_labels().to_vec();
    let mut out = Vec::new();
    for pm in b.mutable_labels().iter().copied().permutations(tm.len()) {
        for pf in b.frozen_labels().iter().copied().permutations(tf.len()) {
            // target label -> label in b
            let map: BTreeMap<i32, i32> = tm.iter().chain(&tf).copied().zip(pm.iter().chain(&pf).copied()).collect();
            let fits = target.labels().iter().all(|&i| {
                tm.iter().all(|&j| target.get(i, j).ok() == b.get(map[&i], map[&j]).ok())
            });
            if fits {
                out.push(map);
            }
        }
    }
    out
}

fn reports(cfg: &Config) -> Result<Vec<CheckReport>, VerifyError> {
    let two = bfz(2)?;
    let one = bfz(1)?;
    let s = two.seed.apply_composition(&ELEVEN_COMPOSITION)?;
    let maps = relabelings(s.matrix(), one.seed.matrix());
    let mut out = Vec::new();
    let listing = |m: &BTreeMap<i32, i32>| m.iter().map(|(n, o)| format!("{n}<-{o}")).join(" ");
    out.push(CheckReport::flagged(
        "relabel.eleven-steps.matrix",
        "eleven mutations of the second big-cell seed give the first up to relabeling",
        match maps.first() {
            Some(m) => format!("{} matching relabelings of 4!·4!; first {}", maps.len(), listing(m)),
            None => "no relabeling preserving mutable and frozen vertices matches".into(),
        },
    ));
    if let Some(m) = maps.first() {
        let mut failed = Vec::new();
        for (&new, &old) in m {
            let r = check_equal(
                &format!("relabel.eleven-steps.x{new}"),
                "relabeled function",
                &bridged(s.variable(old)?, &two.assignment),
                &crate::Target::Expr(one.assignment.expr(new)?.clone()),
                cfg,
            );
            if r.status != crate::Status::Pass {
                failed.push(new);
            }
        }
        out.push(CheckReport::flagged(
            "relabel.eleven-steps.functions",
            "the relabeled cluster carries the functions of the first big-cell seed",
            if failed.is_empty() { "all eight functions agree".to_string() } else { format!("vertices {failed:?} differ") },
        ));
    }
    Ok(out)
}

/// Optional scenario; its reports are informational.
pub fn run(cfg: &Config) -> Vec<CheckReport> {
    reports(cfg).unwrap_or_else(|e| {
        vec![CheckReport::flagged("relabel.eleven-steps", "eleven-step relabeling", format!("setup failed: {e}"))]
    })
}
