//! Properties of the mutation engine itself.

use mutation::belt::step_between;
use mutation::random::random_skew_symmetrizable;
use mutation::{catalog, ExchangeMatrix, MutationError, ValuedQuiver};
use rand::Rng;

use crate::{CheckReport, Config, Counterexample};

/// Random matrices tested for the involution property.
pub const INVOLUTION_SAMPLES: usize = 1000;

fn involution(cfg: &Config) -> CheckReport {
    let mut rng = cfg.rng("engine.involution");
    let mut checked = 0;
    for _ in 0..INVOLUTION_SAMPLES {
        let n = rng.gen_range(2..=5);
        let frozen = rng.gen_range(0..=3);
        let b = random_skew_symmetrizable(&mut rng, n, frozen, 4);
        for &k in b.mutable_labels() {
            let back = b.mutate(k).and_then(|m| m.mutate(k));
            if back.as_ref() != Ok(&b) {
                let cx = Counterexample::new(&[]).value("matrix", format!("{:?}", b.rows())).value("k", k);
                return CheckReport::fail(
                    "engine.involution",
                    "mutating twice at the same vertex is the identity",
                    checked,
                    "a random matrix is not restored",
                    cx,
                );
            }
            checked += 1;
        }
    }
    CheckReport::pass(
        "engine.involution",
        "mutating twice at the same vertex is the identity",
        INVOLUTION_SAMPLES,
        format!("{INVOLUTION_SAMPLES} random matrices, {checked} mutations"),
    )
}

/// Matrices met by the scripted mutation sequences, with their vertex classes.
fn scenario_walks() -> Vec<(String, ExchangeMatrix, Vec<i64>, Vec<i32>)> {
    let mut out = Vec::new();
    for case in [1u8, 2] {
        let uc = catalog::underline_classes(case);
        out.push((format!("sigma{case} lemma"), catalog::bfz_matrix(case), catalog::bfz_classes(case), vec![4, 2]));
        out.push((format!("underline{case} bipartite"), catalog::underline_matrix(case), uc.clone(), vec![3, 2]));
        out.push((format!("gls{case}"), catalog::gls_matrix(case), catalog::underline_classes(case), vec![3, 1, 2, 3]));
        let up: Vec<i32> = (0..12).flat_map(|r| step_between(r).to_vec()).collect();
        let down: Vec<i32> = (-12..0).rev().flat_map(|r| step_between(r).to_vec()).collect();
        let z = catalog::underline_matrix(case).mutate(3).and_then(|m| m.mutate(2)).expect("bipartite base");
        out.push((format!("belt{case} up"), z.clone(), uc.clone(), up));
        out.push((format!("belt{case} down"), z, uc, down));
    }
    out
}

fn quiver_walk(b: &ExchangeMatrix, classes: &[i64], seq: &[i32]) -> Result<usize, String> {
    let err = |e: MutationError| e.to_string();
    let mut m = b.clone();
    let mut q = ValuedQuiver::encode(&m, classes.to_vec()).map_err(err)?;
    let mut compared = 0;
    for &k in seq {
        for &j in m.mutable_labels() {
            let by_quiver = q.mutate(j).map_err(err)?.decode();
            if by_quiver != m.mutate(j).map_err(err)? {
                return Err(format!("single mutation at {j} disagrees"));
            }
            compared += 1;
        }
        q = q.mutate(k).map_err(err)?;
        m = m.mutate(k).map_err(err)?;
        if q.decode() != m {
            return Err(format!("walk disagrees after mutating at {k}"));
        }
    }
    Ok(compared)
}

fn quiver_rule() -> Vec<CheckReport> {
    scenario_walks()
        .into_iter()
        .map(|(name, b, classes, seq)| {
            let id = format!("engine.quiver.{}", name.replace(' ', "-"));
            let claim = "the valued-quiver rule and the matrix rule agree";
            match quiver_walk(&b, &classes, &seq) {
                Ok(n) => CheckReport::pass(id, claim, n, format!("{} steps, {n} single mutations compared", seq.len())),
                Err(e) => CheckReport::fail(id, claim, 0, e, Counterexample::new(&[])),
            }
        })
        .collect()
}

fn determinism(cfg: &Config) -> CheckReport {
    let run = || {
        let mut r = super::identities::run_subset(cfg, &["P1", "D3"]);
        r.push(involution(cfg));
        crate::report::to_json(&r)
    };
    let a = run();
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().map(|p| p.install(run));
    let b = run();
    let ok = a == b && single.as_ref().map_or(true, |s| *s == a);
    CheckReport::outcome(
        "engine.determinism",
        "reports are identical for a fixed rng seed, across runs and thread counts",
        ok,
        format!("{} bytes of report compared three times", a.len()),
        None,
    )
}

pub fn run(cfg: &Config) -> Vec<CheckReport> {
    let mut out = vec![involution(cfg), determinism(cfg)];
    out.extend(quiver_rule());
    out
}
