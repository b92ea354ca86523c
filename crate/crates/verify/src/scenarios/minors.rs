use g2rep::registry;

use crate::bridge::symbolic_values;
use crate::{CheckReport, Counterexample};

/// For each extremal minor: the right-translation definition against the
/// lowering chain, as polynomials in the entries and at the symbolic point.
pub fn run() -> Vec<CheckReport> {
    let reg = registry();
    let pv = symbolic_values();
    let mut out = Vec::new();
    for name in reg.names() {
        let Some(t) = reg.translation_minor(name) else { continue };
        let chain = &reg.get(name).expect("listed").function;
        let same_poly = t == chain;
        let same_sym = t.evaluate(&pv.point) == chain.evaluate(&pv.point);
        let id = format!("minors.{name}");
        let claim = "translated minor equals its lowering chain";
        out.push(if same_poly && same_sym {
            CheckReport::pass(id, claim, 1, "equal as entry polynomials and at the symbolic point")
        } else {
            let cx = Counterexample::new(pv.point.word()).value("translation", t).value("chain", chain);
            CheckReport::fail(id, claim, 1, format!("polynomial {same_poly}, symbolic {same_sym}"), cx)
        });
    }
    out
}
