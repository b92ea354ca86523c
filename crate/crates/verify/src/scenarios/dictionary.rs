//! Named functions located among the cluster variables.

use laurent::LaurentPoly;

use super::{bridged, expr, setup_failure};
use crate::seeds::{belt, underline, underline_zero};
use crate::{check_equal, CheckReport, Config, VerifyError};

/// (case, r, vertex, function): the belt variable at vertex of seed r.
pub const BELT_ENTRIES: &[(u8, i64, i32, &str)] = &[
    (1, -2, 1, "Delta_s1_omega1"),
    (1, -6, 1, "Delta_s1s2s1_omega1"),
    (2, -2, 1, "Delta_s2_omega2"),
    (2, 0, 2, "F(2,1)"),
    (2, -6, 1, "Delta_s2s1s2_omega2"),
    (2, -4, 2, "F(-1,-1)"),
    (2, -2, 2, "F(-2,-1)"),
];

/// (case, composition-order mutations of the bipartite or underlined seed, vertex, function).
const OFF_BELT: &[(u8, bool, &[i32], i32, &str)] = &[
    (1, false, &[1, 3, 2, 3], 1, "Delta_s1_omega1"),
    (2, true, &[2, 3, 1], 2, "F(1,0)"),
    (2, true, &[2, 3, 2], 2, "F(-1,0)"),
];

/// Plücker-type relations in the second representation.
const RELATIONS: &[(&str, &str, &str)] = &[
    (
        "plucker-F2",
        "F2(0,0)*Delta_omega2",
        "Delta_s2_omega2*Delta_s1s2_omega2 + -1*F(1,1)*F(2,1) + -1*Delta_omega2*F1(0,0)",
    ),
    (
        "plucker-sum",
        "Delta_omega2*F1(0,0) + Delta_omega2*F2(0,0)",
        "Delta_s2_omega2*Delta_s1s2_omega2 + -1*F(1,1)*F(2,1)",
    ),
];

fn var(s: &mutation::Seed, l: i32) -> Result<LaurentPoly, VerifyError> {
    Ok(s.variable(l)?.clone())
}

fn x(s: &mutation::Seed, l: i32) -> Result<LaurentPoly, VerifyError> {
    Ok(LaurentPoly::var_named(s.vars(), &mutation::seed::var_name(l))?)
}

/// The two products with a non-cluster factor written in the variables of the underlined seed.
fn localized(cfg: &Config) -> Result<Vec<CheckReport>, VerifyError> {
    let mut out = Vec::new();

    let b = underline(1)?;
    let m2 = belt(1, -2)?.seed;
    let z0 = underline_zero(1)?.seed;
    // X1^(-2) x3 - X3^(0)
    let p = &var(&m2, 1)? * &x(&m2, 3)? - var(&z0, 3)?;
    out.push(check_equal(
        "dictionary.localized.omega1-X0",
        "Delta_omega1 X0 = X1^(-2) X3 - X3^(0)",
        &bridged(&p, &b.assignment),
        &expr("Delta_omega1*X0"),
        cfg,
    ));

    let b = underline(2)?;
    let m2 = belt(2, -2)?.seed;
    let z0 = underline_zero(2)?.seed;
    // Y1^(-2) Y3 - Y2 Y2^(0) - Y-3 Y-2
    let p = &var(&m2, 1)? * &x(&m2, 3)? - &x(&m2, 2)? * &var(&z0, 2)? - &x(&m2, -3)? * &x(&m2, -2)?;
    out.push(check_equal(
        "dictionary.localized.omega2-F2",
        "Delta_omega2 F2(0,0) = Y1^(-2) Y3 - Y2 Y2^(0) - Y-3 Y-2",
        &bridged(&p, &b.assignment),
        &expr("Delta_omega2*F2(0,0)"),
        cfg,
    ));
    Ok(out)
}

fn entries(cfg: &Config) -> Result<Vec<CheckReport>, VerifyError> {
    let mut out = Vec::new();
    for &(case, r, v, name) in BELT_ENTRIES {
        let s = belt(case, r)?;
        out.push(check_equal(
            &format!("dictionary.case{case}.r{r:+03}.v{v}"),
            &format!("{name} is the variable at vertex {v} of belt seed {r}"),
            &bridged(s.seed.variable(v)?, &s.assignment),
            &expr(name),
            cfg,
        ));
    }
    for &(case, bipartite, seq, v, name) in OFF_BELT {
        let base = if bipartite { underline_zero(case)? } else { underline(case)? };
        let s = base.seed.apply_composition(seq)?;
        let path: Vec<String> = seq.iter().map(|k| format!("mu{k}")).collect();
        out.push(check_equal(
            &format!("dictionary.case{case}.{}.v{v}", path.join("")),
            &format!("{name} is at vertex {v} of {} of the {} seed", path.join(" "), base.name),
            &bridged(s.variable(v)?, &base.assignment),
            &expr(name),
            cfg,
        ));
    }
    Ok(out)
}

pub fn run(cfg: &Config) -> Vec<CheckReport> {
    let mut out = match entries(cfg) {
        Ok(r) => r,
        Err(e) => vec![setup_failure("dictionary.entries", "dictionary entries", &e)],
    };
    match localized(cfg) {
        Ok(r) => out.extend(r),
        Err(e) => out.push(setup_failure("dictionary.localized", "localized generation", &e)),
    }
    for (id, l, r) in RELATIONS {
        out.push(check_equal(&format!("dictionary.{id}"), &format!("{l} = {r}"), &expr(l), &expr(r), cfg));
    }
    out
}
