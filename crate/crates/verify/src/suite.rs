//! Named groups of scenarios and the canonical report order.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::report::sort_reports;
use crate::scenarios::{belt, cmatrix, criterion, dictionary, engine, figures, gls, identities, lemmas, minors, relabel, representation};
use crate::{CheckReport, Config};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Representation,
    Minors,
    Figures,
    Identities,
    Lemmas,
    Belt,
    Cmatrix,
    Gls,
    Dictionary,
    Criterion,
    Engine,
    Relabel,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 13] = [
        "representation",
        "minors",
        "figures",
        "identities",
        "lemmas",
        "belt",
        "cmatrix",
        "gls",
        "dictionary",
        "criterion",
        "engine",
        "relabel",
        "all",
    ];

    const EACH: [Suite; 12] = [
        Suite::Representation,
        Suite::Minors,
        Suite::Figures,
        Suite::Identities,
        Suite::Lemmas,
        Suite::Belt,
        Suite::Cmatrix,
        Suite::Gls,
        Suite::Dictionary,
        Suite::Criterion,
        Suite::Engine,
        Suite::Relabel,
    ];

    pub fn name(self) -> &'static str {
        Self::NAMES[self as usize]
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Self::NAMES
            .iter()
            .position(|n| *n == s)
            .map(|i| if i == 12 { Suite::All } else { Self::EACH[i] })
            .ok_or_else(|| format!("unknown suite {s:?}; known: {}", Self::NAMES.join(", ")))
    }
}

/// What to run beyond the suite itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub config: Config,
    /// Restricts the case-specific belt scenario; None runs both.
    pub case: Option<u8>,
    /// Belt range; the C-table uses the larger absolute bound.
    pub range: (i64, i64),
}

pub const DEFAULT_RANGE: (i64, i64) = (-12, 12);

impl Default for Options {
    fn default() -> Self {
        Options { config: Config::default(), case: None, range: DEFAULT_RANGE }
    }
}

fn run_one(s: Suite, o: &Options) -> Vec<CheckReport> {
    let cfg = &o.config;
    match s {
        Suite::Representation => representation::run(),
        Suite::Minors => minors::run(),
        Suite::Figures => figures::run(cfg),
        Suite::Identities => identities::run(cfg),
        Suite::Lemmas => lemmas::run(cfg),
        Suite::Belt => {
            let cases: Vec<u8> = o.case.map_or(vec![1, 2], |c| vec![c]);
            cases.par_iter().flat_map_iter(|&c| belt::run(c, o.range.0, o.range.1, cfg)).collect()
        }
        Suite::Cmatrix => cmatrix::run(o.range.0.abs().max(o.range.1.abs()).max(cmatrix::CMATRIX_RANGE)),
        Suite::Gls => gls::run(cfg),
        Suite::Dictionary => dictionary::run(cfg),
        Suite::Criterion => criterion::run(),
        Suite::Engine => engine::run(cfg),
        Suite::Relabel => relabel::run(cfg),
        Suite::All => unreachable!("expanded by run_suite"),
    }
}

/// Run a suite and return its reports in canonical order.
pub fn run_suite(s: Suite, o: &Options) -> Vec<CheckReport> {
    let suites: Vec<Suite> = if s == Suite::All { Suite::EACH.to_vec() } else { vec![s] };
    let mut out: Vec<CheckReport> = suites.par_iter().flat_map_iter(|&s| run_one(s, o)).collect();
    sort_reports(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for n in Suite::NAMES {
            assert_eq!(n.parse::<Suite>().unwrap().name(), n);
        }
        assert!("everything".parse::<Suite>().is_err());
    }
}
