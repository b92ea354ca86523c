//! Lowering and raising actions on the named weight vectors of the two
//! fundamental representations.

use g2rep::{infer_weight, lowering_derivation, raising_derivation, registry, RegFunction};
use laurent::rat;
use rayon::prelude::*;

use crate::bridge::symbolic_values;
use crate::{CheckReport, Config, Counterexample};

/// `f_op(source) = target`, with `target` a registry expression.
struct Arrow {
    id: &'static str,
    op: u8,
    source: &'static str,
    target: &'static str,
}

const fn arrow(id: &'static str, op: u8, source: &'static str, target: &'static str) -> Arrow {
    Arrow { id, op, source, target }
}

const ARROWS: &[Arrow] = &[
    arrow("first.omega1-s1", 1, "Delta_omega1", "Delta_s1_omega1"),
    arrow("first.s1-s2s1", 2, "Delta_s1_omega1", "Delta_s2s1_omega1"),
    arrow("first.s2s1-X0", 1, "Delta_s2s1_omega1", "2*X0"),
    arrow("first.X0-s1s2s1", 1, "X0", "Delta_s1s2s1_omega1"),
    arrow("first.s1s2s1-s2s1s2s1", 2, "Delta_s1s2s1_omega1", "Delta_s2s1s2s1_omega1"),
    arrow("first.s2s1s2s1-w0", 1, "Delta_s2s1s2s1_omega1", "Delta_w0_omega1"),
    arrow("second.omega2-s2", 2, "Delta_omega2", "Delta_s2_omega2"),
    arrow("second.s2-F21", 1, "Delta_s2_omega2", "3*F(2,1)"),
    arrow("second.F21-F11", 1, "F(2,1)", "2*F(1,1)"),
    arrow("second.F11-s1s2", 1, "F(1,1)", "Delta_s1s2_omega2"),
    arrow("second.F11-F10", 2, "F(1,1)", "F(1,0)"),
    arrow("second.s1s2-F00", 2, "Delta_s1s2_omega2", "F1(0,0) + 2*F2(0,0)"),
    arrow("second.F10-F00", 1, "F(1,0)", "F1(0,0) + F2(0,0)"),
    arrow("second.F1-Fm10", 1, "F1(0,0)", "F(-1,0)"),
    arrow("second.F2-Fm10", 1, "F2(0,0)", "F(-1,0)"),
    arrow("second.F1-zero", 2, "F1(0,0)", "0"),
    arrow("second.F2-s2s1s2", 2, "F2(0,0)", "Delta_s2s1s2_omega2"),
    arrow("second.Fm10-Fm1m1", 2, "F(-1,0)", "F(-1,-1)"),
    arrow("second.s2s1s2-Fm1m1", 1, "Delta_s2s1s2_omega2", "3*F(-1,-1)"),
    arrow("second.Fm1m1-Fm2m1", 1, "F(-1,-1)", "2*F(-2,-1)"),
    arrow("second.Fm2m1-s1s2s1s2", 1, "F(-2,-1)", "Delta_s1s2s1s2_omega2"),
    arrow("second.s1s2s1s2-w0", 2, "Delta_s1s2s1s2_omega2", "Delta_w0_omega2"),
];

/// Highest vectors: both raising operators annihilate them.
const HIGHEST: [&str; 2] = ["Delta_omega1", "Delta_omega2"];

fn function(text: &str) -> RegFunction {
    let reg = registry();
    reg.expand(&reg.formula(text).unwrap_or_else(|e| panic!("{text}: {e}")))
}

fn alpha(i: u8) -> (i64, i64) {
    if i == 1 {
        (1, 0)
    } else {
        (0, 1)
    }
}

/// Whether the arrow lowers the weight by αᵢ (zero targets are consistent by default).
fn weight_consistent(a: &Arrow, source: &RegFunction, target: &RegFunction, cfg: &Config) -> Result<bool, String> {
    if target.is_zero() {
        return Ok(true);
    }
    let mut rng = cfg.rng(&format!("figures.weight.{}", a.id));
    let ws = infer_weight(source, &mut rng).map_err(|e| e.to_string())?.root_coordinates();
    let wt = infer_weight(target, &mut rng).map_err(|e| e.to_string())?.root_coordinates();
    let da = alpha(a.op);
    Ok((ws.0 - da.0, ws.1 - da.1) == wt)
}

fn arrow_report(a: &Arrow, cfg: &Config) -> CheckReport {
    let id = format!("figures.{}", a.id);
    let claim = format!("f{} {} = {}", a.op, a.source, a.target);
    let source = function(a.source);
    let target = function(a.target);
    let image = lowering_derivation(a.op, &source);
    let consistent = match weight_consistent(a, &source, &target, cfg) {
        Ok(c) => c,
        Err(e) => return CheckReport::fail(id, claim, 1, format!("weight inference: {e}"), Counterexample::new(&[])),
    };
    // equal as entry polynomials, or else on the dense cell (left N⁻-invariant functions)
    let how = if image == target {
        Some("exact in the entries")
    } else {
        let pv = symbolic_values();
        (image.evaluate(&pv.point) == target.evaluate(&pv.point)).then_some("exact at the symbolic point")
    };
    let ok = how.is_some() && consistent;
    let details = format!("{}; weight-consistent: {consistent}", how.unwrap_or("sides differ"));
    let cx = (!ok).then(|| Counterexample::new(&[]).value("image terms", image.terms()).value("target terms", target.terms()));
    CheckReport::outcome(id, claim, ok, details, cx)
}

fn flagged() -> Vec<CheckReport> {
    let reg = registry();
    let mut out = Vec::new();

    // the printed arrow out of X0 is labelled f2
    let x0 = function("X0");
    let f2x0 = lowering_derivation(2, &x0);
    out.push(CheckReport::flagged(
        "figures.first.X0-arrow-label",
        "arrow X0 to Delta_s1s2s1_omega1 labelled f2",
        format!(
            "f2 X0 {} zero; the arrow lowers by alpha1, and f1 X0 = Delta_s1s2s1_omega1 is checked instead",
            if f2x0.is_zero() { "is" } else { "is not" }
        ),
    ));

    // the printed chain for Delta_s1s2_omega2 uses f2 three times
    let printed = &reg.get("Delta_s1s2_omega2_as_printed").expect("registered").function;
    let used = &reg.get("Delta_s1s2_omega2").expect("registered").function;
    out.push(CheckReport::flagged(
        "figures.second.s1s2-printed-chain",
        "Delta_s1s2_omega2 = 1/6 f2^3 Delta_s2_omega2",
        format!(
            "the printed chain gives {} ; 1/6 f1^3 Delta_s2_omega2 is used ({} terms)",
            if printed.is_zero() { "zero".to_string() } else { format!("{} terms", printed.terms()) },
            used.terms()
        ),
    ));

    // F(1,0) is reached from F(1,1), not from F(2,1)
    let f2f21 = lowering_derivation(2, &function("F(2,1)"));
    out.push(CheckReport::flagged(
        "figures.second.F10-source",
        "F(1,0) = f2 F(2,1)",
        format!(
            "f2 F(2,1) {} zero; F(1,0) is defined as f2 F(1,1)",
            if f2f21.is_zero() { "is" } else { "is not" }
        ),
    ));

    // the worked examples under the second figure
    let y2 = function("Y2");
    let f11 = function("F(1,1)");
    let sixth = lowering_derivation(1, &lowering_derivation(1, &function("Delta_s2_omega2"))).scale(&rat(1, 6));
    let ok = sixth == f11 && f11 == y2;
    out.push(CheckReport::outcome(
        "figures.second.F11-is-Y2",
        "F(1,1) = 1/6 f1^2 Delta_s2_omega2 = Y2",
        ok,
        "exact in the entries",
        None,
    ));
    let ok = function("F1(0,0)") == function("Y-2");
    out.push(CheckReport::outcome("figures.second.F1-is-Y-2", "F1(0,0) = Y-2", ok, "exact in the entries", None));
    out
}

fn highest(name: &str) -> Vec<CheckReport> {
    let f = function(name);
    (1..=2u8)
        .map(|i| {
            let ok = raising_derivation(i, &f).is_zero();
            CheckReport::outcome(
                format!("figures.highest.e{i}-{name}"),
                format!("e{i} {name} = 0"),
                ok,
                "exact in the entries",
                None,
            )
        })
        .collect()
}

pub fn run(cfg: &Config) -> Vec<CheckReport> {
    let mut out: Vec<CheckReport> = ARROWS.par_iter().map(|a| arrow_report(a, cfg)).collect();
    out.extend(flagged());
    for h in HIGHEST {
        out.extend(highest(h));
    }
    out
}
