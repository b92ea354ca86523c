//! The concrete seeds with the functions assigned to their initial clusters.

use mutation::belt::belt_seed;
use mutation::{catalog, Seed};

use crate::{Assignment, VerifyError};

/// A seed together with the functions behind its initial variables.
#[derive(Clone, Debug)]
pub struct SeedWithFunctions {
    pub name: String,
    pub case: u8,
    pub seed: Seed,
    pub assignment: Assignment,
}

fn check_case(case: u8) -> Result<(), VerifyError> {
    if case == 1 || case == 2 {
        Ok(())
    } else {
        Err(VerifyError::Usage(format!("case must be 1 or 2, got {case}")))
    }
}

/// Functions for the underlined seed of case 1 or 2.
pub fn underline_assignment(case: u8) -> Result<Assignment, VerifyError> {
    check_case(case)?;
    if case == 1 {
        Assignment::new(&[
            (1, "Delta_s2s1s2s1_omega1"),
            (2, "X2"),
            (3, "Delta_s2s1_omega1"),
            (-1, "Delta_w0_omega1"),
            (-2, "X-2"),
            (-3, "Delta_omega1"),
        ])
    } else {
        Assignment::new(&[
            (1, "Delta_s1s2s1s2_omega2"),
            (2, "F(1,1)"),
            (3, "Delta_s1s2_omega2"),
            (-1, "Delta_w0_omega2"),
            (-2, "F1(0,0)"),
            (-3, "Delta_omega2"),
        ])
    }
}

pub fn bfz_assignment(case: u8) -> Result<Assignment, VerifyError> {
    check_case(case)?;
    if case == 1 {
        Assignment::new(&[
            (-1, "Delta_w0_omega1"),
            (1, "Delta_s2s1s2s1_omega1"),
            (3, "Delta_s2s1_omega1"),
            (5, "Delta_omega1"),
            (-2, "Delta_w0_omega2"),
            (2, "Delta_s2s1s2_omega2"),
            (4, "Delta_s2_omega2"),
            (6, "Delta_omega2"),
        ])
    } else {
        Assignment::new(&[
            (-1, "Delta_w0_omega1"),
            (2, "Delta_s1s2s1_omega1"),
            (4, "Delta_s1_omega1"),
            (6, "Delta_omega1"),
            (-2, "Delta_w0_omega2"),
            (1, "Delta_s1s2s1s2_omega2"),
            (3, "Delta_s1s2_omega2"),
            (5, "Delta_omega2"),
        ])
    }
}

pub fn gls_assignment(case: u8) -> Result<Assignment, VerifyError> {
    check_case(case)?;
    if case == 1 {
        Assignment::new(&[
            (-1, "Delta_w0_omega1"),
            (-2, "X-2"),
            (-3, "Delta_omega1"),
            (1, "X1_GLS"),
            (2, "X2_GLS"),
            (3, "Delta_s1_omega1"),
        ])
    } else {
        Assignment::new(&[
            (-1, "Delta_w0_omega2"),
            (-2, "F1(0,0)"),
            (-3, "Delta_omega2"),
            (1, "Y1_GLS"),
            (2, "F(2,1)"),
            (3, "Delta_s2_omega2"),
        ])
    }
}

/// The underlined seed for the i-th partial flag variety.
pub fn underline(case: u8) -> Result<SeedWithFunctions, VerifyError> {
    let assignment = underline_assignment(case)?;
    Ok(SeedWithFunctions {
        name: format!("underline-sigma{case}"),
        case,
        seed: Seed::initial(catalog::underline_matrix(case)),
        assignment,
    })
}

/// Composition order of the mutations making the underlined seed bipartite.
pub const BIPARTITE_COMPOSITION: [i32; 2] = [2, 3];

/// The bipartite seed μ₂μ₃ of the underlined one, the base of the belt.
pub fn underline_zero(case: u8) -> Result<SeedWithFunctions, VerifyError> {
    let u = underline(case)?;
    Ok(SeedWithFunctions {
        name: format!("underline-sigma{case}-0"),
        seed: u.seed.apply_composition(&BIPARTITE_COMPOSITION)?,
        ..u
    })
}

/// The big-cell seed of case 1 or 2.
pub fn bfz(case: u8) -> Result<SeedWithFunctions, VerifyError> {
    let assignment = bfz_assignment(case)?;
    Ok(SeedWithFunctions {
        name: format!("sigma{case}"),
        case,
        seed: Seed::initial(catalog::bfz_matrix(case)),
        assignment,
    })
}

pub fn gls(case: u8) -> Result<SeedWithFunctions, VerifyError> {
    let assignment = gls_assignment(case)?;
    Ok(SeedWithFunctions { name: format!("gls{case}"), case, seed: Seed::initial(catalog::gls_matrix(case)), assignment })
}

/// Belt seed r over the bipartite base.
pub fn belt(case: u8, r: i64) -> Result<SeedWithFunctions, VerifyError> {
    let z = underline_zero(case)?;
    Ok(SeedWithFunctions { name: format!("belt{case}({r})"), seed: belt_seed(&z.seed, r)?, ..z })
}

/// Seed names accepted by [`named_seed`].
pub const SEED_NAMES: [&str; 5] = ["sigma", "underline-sigma", "underline-sigma-0", "gls", "belt"];

/// Look up a seed by name: the names in [`SEED_NAMES`], optionally with the
/// case appended (`sigma1`, `underline-sigma2-0`, `gls1`). `r` is used by `belt`.
pub fn named_seed(name: &str, case: u8, r: i64) -> Result<SeedWithFunctions, VerifyError> {
    let (base, case) = split_case(name, case)?;
    match base.as_str() {
        "sigma" => bfz(case),
        "underline-sigma" => underline(case),
        "underline-sigma-0" => underline_zero(case),
        "gls" => gls(case),
        "belt" => belt(case, r),
        _ => Err(VerifyError::Usage(format!("unknown seed {name:?}; known: {}", SEED_NAMES.join(", ")))),
    }
}

fn split_case(name: &str, default: u8) -> Result<(String, u8), VerifyError> {
    for c in ['1', '2'] {
        if let Some(b) = name.strip_suffix(c) {
            return Ok((b.to_string(), c as u8 - b'0'));
        }
        if let Some(b) = name.strip_suffix(&format!("{c}-0")) {
            return Ok((format!("{b}-0"), c as u8 - b'0'));
        }
    }
    check_case(default)?;
    Ok((name.to_string(), default))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve() {
        assert_eq!(named_seed("sigma1", 2, 0).unwrap().case, 1);
        assert_eq!(named_seed("underline-sigma2-0", 1, 0).unwrap().name, "underline-sigma2-0");
        assert_eq!(named_seed("belt", 2, -3).unwrap().name, "belt2(-3)");
        assert!(named_seed("tau", 1, 0).is_err());
        assert!(named_seed("gls", 3, 0).is_err());
    }

    #[test]
    fn assignments_cover_clusters() {
        for case in [1, 2] {
            for s in [bfz(case).unwrap(), underline(case).unwrap(), gls(case).unwrap()] {
                let mut ls: Vec<i32> = s.seed.labels().to_vec();
                ls.sort();
                assert_eq!(s.assignment.labels().collect::<Vec<_>>(), ls, "{}", s.name);
            }
        }
    }
}
