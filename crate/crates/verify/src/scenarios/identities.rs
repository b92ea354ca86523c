//! Quadratic and cubic relations among the weight vectors.

use g2rep::{lowering_derivation, raising_derivation, registry, RegFunction};
use rayon::prelude::*;

use super::expr;
use crate::{check_equal, check_zero, CheckReport, Config, Expr, Target};

/// (id, lhs, rhs) over registry names.
pub const IDENTITIES: &[(&str, &str, &str)] = &[
    (
        "D1",
        "Delta_omega2*Delta_s2s1_omega1^3 + Delta_omega1^3*Delta_s2s1s2_omega2",
        "Delta_s2_omega2*X2",
    ),
    (
        "D2",
        "Delta_s2s1s2s1_omega1^3*Delta_omega2 + Delta_w0_omega2*X2",
        "Delta_s2s1s2_omega2*X-2",
    ),
    (
        "D3",
        "Delta_s1s2s1_omega1*Delta_omega2 + Delta_omega1*Delta_s1s2_omega2",
        "Delta_s1_omega1*F(1,1)",
    ),
    (
        "D4",
        "Delta_omega1*Delta_s1s2s1s2_omega2 + Delta_w0_omega1*F(1,1)",
        "Delta_s1s2s1_omega1*F1(0,0)",
    ),
    ("P1", "F(2,1)^2 + Delta_omega2*F(1,0)", "Delta_s2_omega2*F(1,1)"),
    ("P2", "F(1,0)*Delta_s1s2s1s2_omega2", "F1(0,0)*F(-2,-1) + F(1,1)*Delta_w0_omega2"),
    ("P3", "Delta_omega2*Delta_w0_omega2", "F(1,0)*F(-1,0) + -1*F1(0,0)*F2(0,0)"),
    ("P4", "F(-2,-1)*F(2,1) + F(1,0)*F(-1,0)", "F(1,1)*F(-1,-1)"),
    ("P5", "F(1,1)^2", "F(2,1)*Delta_s1s2_omega2 + -1*Delta_omega2*F(-1,0)"),
    ("P6", "Delta_omega2*Delta_s1s2s1s2_omega2", "F(1,1)*F(-1,0) + -1*F1(0,0)*Delta_s1s2_omega2"),
];

/// The relation generating the family checked by [`xi_family`].
pub const XI: &str = "Delta_omega1*F(2,1) + -1*Delta_s1_omega1*Delta_s2_omega2 + Delta_s2s1_omega1*Delta_omega2";

/// Longest lowering word applied to ξ.
pub const XI_DEPTH: usize = 6;

fn word_name(w: &[u8]) -> String {
    if w.is_empty() {
        "xi".into()
    } else {
        format!("f{}.xi", w.iter().map(u8::to_string).collect::<Vec<_>>().join(""))
    }
}

/// ξ and every fᵢ-word image of it up to [`XI_DEPTH`], each of which must vanish on G.
pub fn xi_family() -> Vec<(String, RegFunction)> {
    let reg = registry();
    let xi = reg.expand(&reg.formula(XI).expect("xi parses"));
    let mut out = vec![(word_name(&[]), xi.clone())];
    let mut layer = vec![(Vec::<u8>::new(), xi)];
    for _ in 0..XI_DEPTH {
        layer = layer
            .par_iter()
            .flat_map_iter(|(w, f)| {
                [1u8, 2].into_iter().filter_map(move |i| {
                    let g = lowering_derivation(i, f);
                    // operator order: the new operator acts last, so it is written first
                    let mut nw = vec![i];
                    nw.extend_from_slice(w);
                    (!g.is_zero()).then_some((nw, g))
                })
            })
            .collect();
        out.extend(layer.iter().map(|(w, f)| (word_name(w), f.clone())));
    }
    out
}

/// The listed identities whose ids are in `ids`.
pub fn run_subset(cfg: &Config, ids: &[&str]) -> Vec<CheckReport> {
    IDENTITIES
        .par_iter()
        .filter(|(id, _, _)| ids.contains(id))
        .map(|(id, l, r)| {
            check_equal(&format!("identities.{id}"), &format!("{l} = {r}"), &expr(l), &expr(r), cfg)
        })
        .collect()
}

pub fn run(cfg: &Config) -> Vec<CheckReport> {
    let all: Vec<&str> = IDENTITIES.iter().map(|(id, _, _)| *id).collect();
    let mut out = run_subset(cfg, &all);

    let reg = registry();
    let xi = reg.expand(&reg.formula(XI).expect("xi parses"));
    for i in 1..=2u8 {
        let e = raising_derivation(i, &xi);
        let t = Target::Expr(Expr::Direct(e));
        out.push(check_zero(&format!("identities.xi.e{i}"), &format!("e{i} xi = 0"), &t, cfg));
    }
    let family = xi_family();
    let n = family.len();
    let reports: Vec<CheckReport> = family
        .into_par_iter()
        .map(|(name, f)| {
            let t = Target::Expr(Expr::Direct(f));
            check_zero(&format!("identities.xi-family.{name}"), &format!("{name} = 0"), &t, cfg)
        })
        .collect();
    let failed: Vec<&CheckReport> = reports.iter().filter(|r| r.status == crate::Status::Fail).collect();
    out.push(match failed.first() {
        None => CheckReport::pass(
            "identities.xi-family",
            "xi and its lowering images vanish",
            cfg.trials,
            format!("{n} nonzero polynomials up to depth {XI_DEPTH}, all vanish on G"),
        ),
        Some(f) => CheckReport::fail(
            "identities.xi-family",
            "xi and its lowering images vanish",
            f.trials,
            format!("{} of {n} do not vanish, first {}", failed.len(), f.check_id),
            f.counterexample.clone().unwrap_or_else(|| crate::Counterexample::new(&[])),
        ),
    });
    out
}
