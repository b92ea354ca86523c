//! From the big-cell seeds to the underlined ones: two mutations, then freezing.

use mutation::catalog;

use super::{bridged, expr, setup_failure};
use crate::seeds::{bfz, underline};
use crate::{check_equal, CheckReport, Config, Target, VerifyError};

/// Composition order of the two mutations.
pub const LEMMA_COMPOSITION: [i32; 2] = [2, 4];

/// Stated functions at vertices 2 and 4 after the mutations.
pub fn stated(case: u8) -> [(i32, &'static str); 2] {
    if case == 1 {
        [(2, "X-2"), (4, "X2")]
    } else {
        [(2, "F1(0,0)"), (4, "F(1,1)")]
    }
}

fn case_reports(case: u8, cfg: &Config) -> Result<Vec<CheckReport>, VerifyError> {
    let p = format!("lemmas.case{case}.");
    let big = bfz(case)?;
    let s = big.seed.apply_composition(&LEMMA_COMPOSITION)?;
    let mut out = Vec::new();
    for (v, name) in stated(case) {
        let t = bridged(s.variable(v)?, &big.assignment);
        out.push(check_equal(
            &format!("{p}vertex{v}"),
            &format!("vertex {v} after mu2 mu4 is {name}"),
            &t,
            &expr(name),
            cfg,
        ));
    }

    let corr = catalog::freezing_correspondence(case);
    let corr_text: Vec<String> = corr.iter().map(|(n, o)| format!("{n}<-{o}")).collect();
    let frozen = s.matrix().restrict(&corr, 3)?;
    let want = catalog::underline_matrix(case);
    out.push(CheckReport::outcome(
        format!("{p}frozen-matrix"),
        "freezing vertex 2 gives the underlined exchange matrix",
        frozen == want,
        format!("correspondence (new<-old) {}", corr_text.join(" ")),
        None,
    ));
    if case == 1 {
        let printed = catalog::underline_matrix_as_printed();
        let differing: Vec<String> = printed
            .labels()
            .iter()
            .flat_map(|&i| printed.mutable_labels().iter().map(move |&j| (i, j)))
            .filter(|&(i, j)| printed.get(i, j).ok() != frozen.get(i, j).ok())
            .map(|(i, j)| format!("b{i},{j}"))
            .collect();
        out.push(CheckReport::flagged(
            "lemmas.case1.b33",
            "printed underlined table has b33 = 1",
            format!(
                "restricted matrix has b33 = {}; it differs from the printed table only at [{}]",
                frozen.get(3, 3)?,
                differing.join(", ")
            ),
        ));
    }

    let u = underline(case)?;
    for &(new, old) in &corr {
        let t = bridged(s.variable(old)?, &big.assignment);
        let rhs = Target::Expr(u.assignment.expr(new)?.clone());
        let name = u.assignment.name(new)?;
        out.push(check_equal(
            &format!("{p}frozen-function{new}"),
            &format!("old vertex {old} carries {name}, the function of underlined vertex {new}"),
            &t,
            &rhs,
            cfg,
        ));
    }
    Ok(out)
}

pub fn run(cfg: &Config) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for case in [1, 2] {
        match case_reports(case, cfg) {
            Ok(r) => out.extend(r),
            Err(e) => out.push(setup_failure(&format!("lemmas.case{case}"), "lemma seeds", &e)),
        }
    }
    out
}
