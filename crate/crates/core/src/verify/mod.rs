//! Brute-force oracles over explicit groups and the named verification checks.
//!
//! Every check is an exhaustive enumeration up to a bound and produces a
//! [`VerificationReport`]. Reports are deterministic for identical bounds apart
//! from the wall-clock field.

mod checks;
pub(crate) mod expansions;
pub mod explicit;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};

pub use explicit::{
    oracle_extensions, oracle_extensions_with_limit, oracle_limit, oracle_quotient_type,
    oracle_subgroup_types, oracle_subgroup_types_with_limit, ExplicitGroup, ExplicitSubgroup,
    DEFAULT_ORACLE_LIMIT, HARD_ORACLE_LIMIT, ORACLE_LIMIT_ENV,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Counterexample {
    pub input: String,
    pub expected: String,
    pub got: String,
}

impl Counterexample {
    pub(crate) fn new(
        input: impl Into<String>,
        expected: impl Into<String>,
        got: impl Into<String>,
    ) -> Self {
        Counterexample {
            input: input.into(),
            expected: expected.into(),
            got: got.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub params: BTreeMap<String, u64>,
    pub status: Status,
    /// Number of cases examined.
    pub cases: u64,
    /// Sorted; empty iff the check passed.
    pub counterexamples: Vec<Counterexample>,
    pub notes: Vec<String>,
    pub seconds: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Names of all checks, sorted.
pub const CHECK_NAMES: [&str; 10] = [
    "cyclic-splitting",
    "fulton-oracle",
    "lemma-r2-4",
    "lr-paper-expansions",
    "prop-cr1-cr1",
    "prop-cr1-cr2",
    "rank-sharpness",
    "subgroup-criterion",
    "table1-closure",
    "terminal-product",
];

/// Shipped bound of each check.
pub fn default_bound(name: &str) -> Result<u64> {
    Ok(match name {
        "cyclic-splitting" => 512,
        "fulton-oracle" => 64,
        "lemma-r2-4" => 512,
        "lr-paper-expansions" => 6,
        "prop-cr1-cr1" => 256,
        "prop-cr1-cr2" => 64,
        "rank-sharpness" => 1024,
        "subgroup-criterion" => 64,
        "table1-closure" => 512,
        "terminal-product" => 512,
        other => return Err(Error::UnknownCheck(other.to_string())),
    })
}

/// What a check found, before timing and status are attached.
#[derive(Default)]
pub(crate) struct Outcome {
    pub params: BTreeMap<String, u64>,
    pub cases: u64,
    pub counterexamples: Vec<Counterexample>,
    pub notes: Vec<String>,
}

impl Outcome {
    pub(crate) fn with_param(mut self, key: &str, value: u64) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    pub(crate) fn absorb(&mut self, (cases, found): (u64, Vec<Counterexample>)) {
        self.cases += cases;
        self.counterexamples.extend(found);
    }
}

/// Runs one named check; `bound` defaults to [`default_bound`].
pub fn run_check(name: &str, bound: Option<u64>) -> Result<VerificationReport> {
    let bound = match bound {
        Some(b) => {
            default_bound(name)?;
            b
        }
        None => default_bound(name)?,
    };
    let start = Instant::now();
    let mut outcome = checks::run(name, bound)?;
    outcome.counterexamples.sort();
    outcome.counterexamples.dedup();
    let status = if outcome.counterexamples.is_empty() {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(VerificationReport {
        check: name.to_string(),
        params: outcome.params,
        status,
        cases: outcome.cases,
        counterexamples: outcome.counterexamples,
        notes: outcome.notes,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// Runs the named checks (all of them if `names` is empty) in sorted order.
pub fn run_checks(names: &[String], bound: Option<u64>) -> Result<Vec<VerificationReport>> {
    let mut selected: Vec<&str> = if names.is_empty() {
        CHECK_NAMES.to_vec()
    } else {
        names.iter().map(String::as_str).collect()
    };
    for name in &selected {
        default_bound(name)?;
    }
    selected.sort_unstable();
    selected.dedup();
    selected.into_iter().map(|n| run_check(n, bound)).collect()
}

/// Plain-text table of reports.
pub fn render_table(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<22} {:<6} {:>10} {:>8} {:>9}  params",
        "check", "status", "cases", "counter", "seconds"
    );
    for r in reports {
        let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(
            out,
            "{:<22} {:<6} {:>10} {:>8} {:>9.3}  {}",
            r.check,
            if r.passed() { "pass" } else { "FAIL" },
            r.cases,
            r.counterexamples.len(),
            r.seconds,
            params.join(" ")
        );
        for c in r.counterexamples.iter().take(10) {
            let _ = writeln!(
                out,
                "    {}: expected {}, got {}",
                c.input, c.expected, c.got
            );
        }
        if r.counterexamples.len() > 10 {
            let _ = writeln!(out, "    ... {} more", r.counterexamples.len() - 10);
        }
        for n in &r.notes {
            let _ = writeln!(out, "    note: {n}");
        }
    }
    out
}

/// Order-preserving map over `items`, in parallel when the feature is enabled.
pub(crate) fn par_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}
