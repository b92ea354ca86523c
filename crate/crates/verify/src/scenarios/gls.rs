//! The seeds built from the preprojective side, mutated onto the underlined seeds.

use super::{bridged, expr, setup_failure};
use crate::seeds::{gls, underline, underline_zero};
use crate::{check_equal, CheckReport, Config, Target, VerifyError};

/// Mutations in the order they are applied.
pub const GLS_SEQUENCE: [i32; 4] = [3, 1, 2, 3];
/// The same mutations with the two commuting middle steps swapped.
pub const GLS_SEQUENCE_ALT: [i32; 4] = [3, 2, 1, 3];

const STEPS: [&str; 4] = ["a", "b", "c", "d"];

/// Stated function produced at each step.
fn stated(case: u8) -> Result<[Target; 4], VerifyError> {
    Ok(if case == 1 {
        [
            expr("Delta_s1_omega1*Delta_s2s1_omega1 + -1*Delta_omega1*X0"),
            expr("Delta_s2s1s2s1_omega1"),
            expr("X2"),
            expr("Delta_s2s1_omega1"),
        ]
    } else {
        // step a: the vertex-3 exchange of the underlined seed
        let u = underline(2)?;
        let first = u.seed.mutate(3)?;
        [
            bridged(first.variable(3)?, &u.assignment),
            expr("Delta_s1s2s1s2_omega2"),
            expr("F(1,1)"),
            expr("Delta_s1s2_omega2"),
        ]
    })
}

fn same_functions(
    id: &str,
    claim: &str,
    s: &mutation::Seed,
    sa: &crate::Assignment,
    t: &mutation::Seed,
    ta: &crate::Assignment,
    cfg: &Config,
) -> Result<Vec<CheckReport>, VerifyError> {
    let mut out = Vec::new();
    for &l in s.labels() {
        out.push(check_equal(
            &format!("{id}.x{l}"),
            &format!("{claim}: vertex {l}"),
            &bridged(s.variable(l)?, sa),
            &bridged(t.variable(l)?, ta),
            cfg,
        ));
    }
    Ok(out)
}

fn case_reports(case: u8, cfg: &Config) -> Result<Vec<CheckReport>, VerifyError> {
    let p = format!("gls.case{case}.");
    let g = gls(case)?;
    let want = stated(case)?;
    let mut out = Vec::new();
    let mut s = g.seed.clone();
    let mut after = Vec::new();
    for ((k, step), w) in GLS_SEQUENCE.iter().zip(STEPS).zip(&want) {
        s = s.mutate(*k)?;
        out.push(check_equal(
            &format!("{p}step-{step}"),
            &format!("step {step}: mu{k} produces the stated function at vertex {k}"),
            &bridged(s.variable(*k)?, &g.assignment),
            w,
            cfg,
        ));
        after.push(s.clone());
    }

    let u0 = underline_zero(case)?;
    let mid = &after[1];
    out.extend(same_functions(
        &format!("{p}mid-cluster"),
        "after mu3 then mu1 the cluster is that of the bipartite seed",
        mid,
        &g.assignment,
        &u0.seed,
        &u0.assignment,
        cfg,
    )?);
    out.push(CheckReport::outcome(
        format!("{p}mid-matrix"),
        "after mu3 then mu1 the exchange matrix is minus that of the bipartite seed",
        *mid.matrix() == u0.seed.matrix().negated(),
        format!("{:?}", mid.matrix().rows()),
        None,
    ));

    let fin = &after[3];
    let u = underline(case)?;
    out.extend(same_functions(
        &format!("{p}final-cluster"),
        "after all four steps the cluster is that of the underlined seed",
        fin,
        &g.assignment,
        &u.seed,
        &u.assignment,
        cfg,
    )?);
    out.push(CheckReport::outcome(
        format!("{p}final-matrix-bipartite"),
        "after all four steps the exchange matrix is minus that of the bipartite seed",
        *fin.matrix() == u0.seed.matrix().negated(),
        format!("final {:?}; negated bipartite {:?}", fin.matrix().rows(), u0.seed.matrix().negated().rows()),
        None,
    ));
    out.push(CheckReport::outcome(
        format!("{p}final-matrix-underlined"),
        "after all four steps the exchange matrix is minus that of the underlined seed",
        *fin.matrix() == u.seed.matrix().negated(),
        format!("final {:?}", fin.matrix().rows()),
        None,
    ));

    let alt = g.seed.apply_sequence(&GLS_SEQUENCE_ALT)?;
    out.push(CheckReport::outcome(
        format!("{p}order"),
        "swapping the middle mutations gives the same seed",
        alt.same_cluster(fin) && alt.matrix() == fin.matrix(),
        "order 3,2,1,3 against 3,1,2,3",
        None,
    ));
    Ok(out)
}

pub fn run(cfg: &Config) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for case in [1, 2] {
        match case_reports(case, cfg) {
            Ok(r) => out.extend(r),
            Err(e) => out.push(setup_failure(&format!("gls.case{case}"), "GLS sequence", &e)),
        }
    }
    out
}
