//! Degrees along the bipartite belt.

use std::collections::BTreeMap;

use mutation::belt::step_between;
use mutation::{propagate_degrees, Belt, DegreeVector, Seed};

use super::{bridged, setup_failure};
use crate::oracle::{self, DEG_U, DEG_Z, MILESTONES};
use crate::seeds::underline_zero;
use crate::{infer_degrees, CheckReport, Config, Counterexample, Target, VerifyError};

/// Mutations from the bipartite base reaching U and Z (composition order).
pub const U_COMPOSITION: [i32; 3] = [2, 3, 1];
pub const Z_COMPOSITION: [i32; 3] = [2, 3, 2];

const MUTABLE: [i32; 3] = [1, 2, 3];
const FROZEN: [i32; 3] = [-1, -2, -3];

/// Degrees of the belt variables at vertices 1, 2, 3, found two ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BeltDegrees {
    pub case: u8,
    /// From exchange relations, starting from the degrees of the initial functions.
    pub propagated: BTreeMap<i64, [DegreeVector; 3]>,
    /// From the torus action on the bridged variables.
    pub inferred: BTreeMap<i64, [DegreeVector; 3]>,
    /// Number of exchanges performed.
    pub exchanges: usize,
    /// Every variable lies in Z[frozen][mutable^±1]; and in Z[X-1, X-2, X-3^±1][mutable^±1].
    pub frozen_polynomial: bool,
    pub frozen_polynomial_but_minus3: bool,
}

fn vertex_names(case: u8) -> [&'static str; 3] {
    if case == 1 {
        ["d1", "d2", "d3"]
    } else {
        ["g1", "g2", "g3"]
    }
}

/// Walk one belt step, propagating degrees through each exchange.
fn step_degrees(
    from: &Seed,
    ks: &[i32],
    degrees: &mut BTreeMap<i32, DegreeVector>,
) -> Result<Seed, VerifyError> {
    let mut s = from.clone();
    for &k in ks {
        let d = propagate_degrees(degrees, s.matrix(), k)?;
        degrees.insert(k, d);
        s = s.mutate(k)?;
    }
    Ok(s)
}

fn mutable_degrees(d: &BTreeMap<i32, DegreeVector>) -> [DegreeVector; 3] {
    MUTABLE.map(|l| d[&l])
}

fn frozen_exponents_ok(seed: &Seed, minus3_free: bool) -> bool {
    let names = seed.vars().names().to_vec();
    let idx: Vec<usize> = FROZEN
        .iter()
        .filter(|&&l| !(minus3_free && l == -3))
        .filter_map(|&l| names.iter().position(|n| *n == mutation::seed::var_name(l)))
        .collect();
    seed.cluster().iter().all(|p| {
        let m = p.min_exponents();
        idx.iter().all(|&i| m.0[i] >= 0)
    })
}

/// Degrees of the belt seeds for r in `lo..=hi` (lo ≤ 0 ≤ hi).
pub fn belt_degrees(case: u8, lo: i64, hi: i64, cfg: &Config) -> Result<BeltDegrees, VerifyError> {
    let base = underline_zero(case)?;
    let labels: Vec<i32> = base.seed.labels().to_vec();
    let initial_targets: Vec<Target> = labels
        .iter()
        .map(|&l| base.assignment.expr(l).map(|e| Target::Expr(e.clone())))
        .collect::<Result<_, _>>()?;
    let refs: Vec<&Target> = initial_targets.iter().collect();
    let mut initial = BTreeMap::new();
    for (l, d) in labels.iter().zip(infer_degrees(&refs, case, cfg, &format!("belt.case{case}.initial"))) {
        initial.insert(*l, d?);
    }

    // the base itself is two exchanges away from the initial seed
    let mut degrees0 = initial.clone();
    let start = crate::seeds::underline(case)?.seed;
    let mut exchanges = 0;
    let mut s = start;
    for &k in crate::seeds::BIPARTITE_COMPOSITION.iter().rev() {
        s = step_degrees(&s, &[k], &mut degrees0)?;
        exchanges += 1;
    }

    let mut belt = Belt::new(base.seed.clone())?;
    let mut propagated = BTreeMap::new();
    propagated.insert(0, mutable_degrees(&degrees0));
    let mut d = degrees0.clone();
    for r in 0..hi {
        let next = step_degrees(belt.seed(r)?, step_between(r), &mut d)?;
        exchanges += step_between(r).len();
        debug_assert!(next.same_cluster(belt.seed(r + 1)?));
        propagated.insert(r + 1, mutable_degrees(&d));
    }
    let mut d = degrees0;
    for r in (lo..0).rev() {
        step_degrees(belt.seed(r + 1)?, step_between(r), &mut d)?;
        exchanges += step_between(r).len();
        propagated.insert(r, mutable_degrees(&d));
    }

    let mut targets = Vec::new();
    for r in lo..=hi {
        let seed = belt.seed(r)?;
        for v in MUTABLE {
            targets.push((r, bridged(seed.variable(v)?, &base.assignment)));
        }
    }
    let refs: Vec<&Target> = targets.iter().map(|(_, t)| t).collect();
    let found = infer_degrees(&refs, case, cfg, &format!("belt.case{case}.inferred"));
    let mut inferred = BTreeMap::new();
    for (chunk, r) in found.chunks(3).zip(lo..=hi) {
        let mut row = [DegreeVector::ZERO; 3];
        for (slot, d) in row.iter_mut().zip(chunk) {
            *slot = *d.as_ref().map_err(|e| VerifyError::Usage(format!("degree at r = {r}: {e}")))?;
        }
        inferred.insert(r, row);
    }

    let mut frozen_polynomial = true;
    let mut frozen_polynomial_but_minus3 = true;
    for r in lo..=hi {
        let seed = belt.seed(r)?;
        frozen_polynomial &= frozen_exponents_ok(seed, false);
        frozen_polynomial_but_minus3 &= frozen_exponents_ok(seed, true);
    }
    Ok(BeltDegrees { case, propagated, inferred, exchanges, frozen_polynomial, frozen_polynomial_but_minus3 })
}

fn fmt_row(row: &[DegreeVector; 3]) -> String {
    row.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn r_id(r: i64) -> String {
    format!("r{r:+03}")
}

fn case_reports(case: u8, lo: i64, hi: i64, cfg: &Config) -> Result<Vec<CheckReport>, VerifyError> {
    let p = format!("belt.case{case}.");
    let names = vertex_names(case);
    let t = belt_degrees(case, lo, hi, cfg)?;
    let mut out = vec![
        CheckReport::pass(
            format!("{p}laurent"),
            "every exchange along the belt divides exactly",
            t.exchanges,
            format!("{} exact exchanges for r in [{lo}, {hi}]", t.exchanges),
        ),
        CheckReport::pass(
            format!("{p}homogeneity"),
            "both exchange monomials have equal degree at every belt mutation",
            t.exchanges,
            format!("{} exchanges homogeneous", t.exchanges),
        ),
    ];

    let bad: Vec<i64> = t.propagated.iter().filter(|(r, d)| t.inferred.get(r) != Some(d)).map(|(r, _)| *r).collect();
    out.push(CheckReport::outcome(
        format!("{p}inferred-vs-propagated"),
        "torus weights of the belt variables agree with degrees propagated through exchanges",
        bad.is_empty(),
        if bad.is_empty() { format!("{} seeds agree", t.inferred.len()) } else { format!("disagree at r = {bad:?}") },
        None,
    ));

    for (r, row) in &t.inferred {
        let stated = [1, 2, 3].map(|v| oracle::stated_degree(case, v, *r));
        let wrong: Vec<String> = (0..3)
            .filter(|&i| stated[i] != row[i])
            .map(|i| format!("{}: stated {} actual {}", names[i], stated[i], row[i]))
            .collect();
        let id = format!("{p}{}", r_id(*r));
        let claim = format!("closed-form degrees at r = {r}");
        out.push(if wrong.is_empty() {
            CheckReport::pass(id, claim, 1, fmt_row(row))
        } else {
            let mut cx = Counterexample::new(&[]);
            for (i, n) in names.iter().enumerate() {
                cx = cx.value(format!("{n} stated"), stated[i]).value(format!("{n} actual"), row[i]);
            }
            CheckReport::fail(id, claim, 1, wrong.join("; "), cx)
        });
    }

    for (c, v, r, want) in MILESTONES {
        if c != case || !(lo..=hi).contains(&r) {
            continue;
        }
        let got = t.inferred[&r][(v - 1) as usize];
        let name = format!("{}({r})", names[(v - 1) as usize]);
        let ok = got == want;
        let stated = oracle::stated_degree(case, v, r);
        let details = format!("actual {got}, milestone {want}, closed form {stated}");
        out.push(if ok || stated == want {
            CheckReport::outcome(format!("{p}milestone.{name}"), format!("{name} = {want}"), ok, details, None)
        } else {
            // the milestone contradicts the stated table itself
            CheckReport::flagged(format!("{p}milestone.{name}"), format!("{name} = {want}"), details)
        });
    }

    if case == 2 {
        let base = underline_zero(2)?;
        for (label, order, want) in [("U", U_COMPOSITION, DEG_U), ("Z", Z_COMPOSITION, DEG_Z)] {
            let s = base.seed.apply_composition(&order)?;
            let target = bridged(s.variable(2)?, &base.assignment);
            let got = infer_degrees(&[&target], 2, cfg, &format!("belt.case2.{label}")).remove(0)?;
            out.push(CheckReport::outcome(
                format!("{p}deg-{label}"),
                format!("deg({label}) = {want}"),
                got == want,
                format!("vertex 2 of mu{}mu{}mu{} of the bipartite seed has degree {got}", order[0], order[1], order[2]),
                None,
            ));
        }
    }

    // the recurrence as stated, and with its two evident slips repaired
    let (_, stated_init) = oracle::recurrence_data(case);
    for (tag, init, literal) in [("as-stated", stated_init, true), ("repaired", t.inferred[&0], false)] {
        let rec = oracle::recurrence(case, init, literal, lo, hi);
        let off: Vec<i64> = rec.iter().filter(|(r, d)| t.inferred.get(r) != Some(d)).map(|(r, _)| *r).collect();
        let id = format!("{p}recurrence-{tag}");
        let claim = "degree recurrence driven by the arrow table";
        let details = if off.is_empty() {
            format!("matches every seed, initial {}", fmt_row(&init))
        } else {
            format!("initial {}; differs at {} of {} seeds, first r = {}", fmt_row(&init), off.len(), rec.len(), off[0])
        };
        out.push(if literal {
            CheckReport::flagged(id, claim, details)
        } else {
            CheckReport::outcome(id, claim, off.is_empty(), details, None)
        });
    }

    out.push(CheckReport::outcome(
        format!("{p}ground-ring.polynomial"),
        "belt variables are Laurent in mutable variables with coefficients in Z[X-1, X-2, X-3]",
        t.frozen_polynomial,
        "no negative exponent of a frozen variable",
        None,
    ));
    out.push(CheckReport::outcome(
        format!("{p}ground-ring.minus3-inverted"),
        "belt variables have coefficients in Z[X-1, X-2, X-3^±1]",
        t.frozen_polynomial_but_minus3,
        "no negative exponent of X-1 or X-2",
        None,
    ));
    Ok(out)
}

/// Belt checks for one case over `lo..=hi`.
pub fn run(case: u8, lo: i64, hi: i64, cfg: &Config) -> Vec<CheckReport> {
    match case_reports(case, lo.min(0), hi.max(0), cfg) {
        Ok(r) => r,
        Err(e) => vec![setup_failure(&format!("belt.case{case}"), "bipartite belt", &e)],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_degrees() {
        let t = belt_degrees(1, -1, 1, &Config::default()).unwrap();
        let dv = DegreeVector::new;
        assert_eq!(t.inferred[&0], [dv(1, -1, -1), dv(3, 3, 2), dv(2, 2, 1)]);
        assert_eq!(t.inferred, t.propagated);
        let t = belt_degrees(2, 0, 0, &Config::default()).unwrap();
        assert_eq!(t.inferred[&0], [dv(1, -3, -1), dv(1, 2, 1), dv(2, 3, 2)]);
    }
}
