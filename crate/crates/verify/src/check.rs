//! Equality of functions on G, decided exactly at sampled or symbolic points.

use g2rep::{degree_of_weight, TorusProbe};
use laurent::{LaurentPoly, Rational};
use mutation::DegreeVector;

use crate::bridge::{symbolic_values, Carrier, PointValues, Target};
use crate::{CheckReport, Config, Counterexample, Mode, VerifyError};

/// Extra samples allowed when a bridged side divides by a function vanishing at the point.
const RESAMPLE_BUDGET: usize = 16;

enum Outcome<C> {
    Equal,
    Differ(C, C),
    Vanishing(VerifyError),
}

fn compare<C: Carrier>(lhs: &Target, rhs: &Target, pv: &PointValues<C>) -> Outcome<C> {
    match (lhs.value(pv), rhs.value(pv)) {
        (Ok(a), Ok(b)) if a == b => Outcome::Equal,
        (Ok(a), Ok(b)) => Outcome::Differ(a, b),
        (Err(e), _) | (_, Err(e)) => Outcome::Vanishing(e),
    }
}

/// Check `lhs = rhs` as functions on G.
///
/// Randomized mode compares at `cfg.trials` points from the stream named by
/// `id`; symbolic mode compares once at the eight-parameter point.
pub fn check_equal(id: &str, claim: &str, lhs: &Target, rhs: &Target, cfg: &Config) -> CheckReport {
    match cfg.mode {
        Mode::Symbolic => {
            let pv = symbolic_values();
            match compare(lhs, rhs, pv) {
                Outcome::Equal => CheckReport::pass(id, claim, 1, "equal at the symbolic point"),
                Outcome::Differ(a, b) => CheckReport::fail(
                    id,
                    claim,
                    1,
                    "sides differ at the symbolic point",
                    Counterexample::new(pv.point.word()).value("lhs", a).value("rhs", b),
                ),
                Outcome::Vanishing(e) => CheckReport::fail(
                    id,
                    claim,
                    1,
                    format!("not evaluable at the symbolic point: {e}"),
                    Counterexample::new(pv.point.word()),
                ),
            }
        }
        Mode::Randomized => {
            let mut rng = cfg.rng(id);
            let mut done = 0;
            let mut skipped = 0;
            while done < cfg.trials {
                let pv = PointValues::new(g2rep::generic_group_point(&mut rng));
                match compare::<Rational>(lhs, rhs, &pv) {
                    Outcome::Equal => done += 1,
                    Outcome::Differ(a, b) => {
                        return CheckReport::fail(
                            id,
                            claim,
                            done + 1,
                            format!("sides differ at trial {}", done + 1),
                            Counterexample::new(pv.point.word()).value("lhs", a).value("rhs", b),
                        )
                    }
                    Outcome::Vanishing(e) => {
                        skipped += 1;
                        if skipped > RESAMPLE_BUDGET {
                            return CheckReport::fail(
                                id,
                                claim,
                                done,
                                format!("resample budget exhausted: {e}"),
                                Counterexample::new(pv.point.word()),
                            );
                        }
                    }
                }
            }
            let extra = if skipped > 0 { format!(" ({skipped} points resampled)") } else { String::new() };
            CheckReport::pass(id, claim, done, format!("equal at {done} random points{extra}"))
        }
    }
}

/// Check `lhs = 0`.
pub fn check_zero(id: &str, claim: &str, lhs: &Target, cfg: &Config) -> CheckReport {
    let zero = Target::Expr(crate::Expr::Formula(LaurentPoly::zero(g2rep::registry().atom_vars())));
    check_equal(id, claim, lhs, &zero, cfg)
}

/// Degrees of several targets from shared torus probes; `case` selects which
/// fundamental weight counts n. A target vanishing at a probe gets a fresh one.
pub fn infer_degrees(targets: &[&Target], case: u8, cfg: &Config, stream: &str) -> Vec<Result<DegreeVector, VerifyError>> {
    let mut rng = cfg.rng(stream);
    let mut out: Vec<Option<Result<DegreeVector, VerifyError>>> = (0..targets.len()).map(|_| None).collect();
    for _ in 0..RESAMPLE_BUDGET {
        if out.iter().all(Option::is_some) {
            break;
        }
        let probe = TorusProbe::sample(&mut rng);
        let base = PointValues::new(probe.base.clone());
        let left = PointValues::new(probe.left.clone());
        let right = PointValues::new(probe.right.clone());
        for (slot, t) in out.iter_mut().zip(targets) {
            if slot.is_some() {
                continue;
            }
            let b = match t.value(&base) {
                Ok(b) if !num::Zero::is_zero(&b) => b,
                _ => continue,
            };
            let r = (|| -> Result<DegreeVector, VerifyError> {
                let w = probe.weight(&b, &t.value(&left)?, &t.value(&right)?)?;
                Ok(degree_of_weight(&w, case)?)
            })();
            *slot = Some(r);
        }
    }
    out.into_iter().map(|o| o.unwrap_or(Err(VerifyError::Vanishing(0)))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Status;

    #[test]
    fn true_and_false_identities() {
        let cfg = Config { trials: 5, ..Config::default() };
        let lhs = Target::expr("F(2,1)^2 + Delta_omega2*F(1,0)").unwrap();
        let rhs = Target::expr("Delta_s2_omega2*F(1,1)").unwrap();
        assert_eq!(check_equal("p1", "P1", &lhs, &rhs, &cfg).status, Status::Pass);
        assert_eq!(check_equal("p1s", "P1", &lhs, &rhs, &cfg.symbolic()).status, Status::Pass);
        let bad = Target::expr("Delta_s2_omega2*F(2,1)").unwrap();
        let r = check_equal("bad", "wrong", &lhs, &bad, &cfg);
        assert_eq!(r.status, Status::Fail);
        assert!(r.counterexample.is_some());
    }

    #[test]
    fn degrees_of_expressions() {
        let ts = [Target::expr("X0").unwrap(), Target::expr("Delta_w0_omega2").unwrap()];
        let d = infer_degrees(&[&ts[0]], 1, &Config::default(), "d");
        assert_eq!(d[0].as_ref().unwrap(), &DegreeVector::new(1, 0, 0));
        let d = infer_degrees(&[&ts[1]], 2, &Config::default(), "d");
        assert_eq!(d[0].as_ref().unwrap(), &DegreeVector::new(1, -3, -2));
    }
}
