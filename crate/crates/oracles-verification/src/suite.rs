use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use affine_growth::{check_invariants, first_stable_window, GrowthRegion};
use affine_permutation::{enumerate_box, enumerate_by_length, AffinePermutation};
use combinatorics_core::{partitions_of, Tabloid};
use dars::{forward, inverse, validate, DarsError, DarsTuple};
use serde::Serialize;

use crate::asymptotic::{affine_evacuation_of, ptabloid_oracle};
use crate::OracleError;

/// Which affine permutations a suite runs over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Enumeration {
    /// Windows with every entry in lo..=hi.
    Box { n: usize, lo: i64, hi: i64 },
    /// Coxeter length at most `max_len` in each listed index coset.
    Length { n: usize, max_len: usize, indices: Vec<i64> },
}

impl Enumeration {
    pub fn n(&self) -> usize {
        match self {
            Enumeration::Box { n, .. } | Enumeration::Length { n, .. } => *n,
        }
    }

    pub fn elements(&self) -> Result<Vec<AffinePermutation>, OracleError> {
        Ok(match self {
            Enumeration::Box { n, lo, hi } => enumerate_box(*n, *lo, *hi, None)?,
            Enumeration::Length { n, max_len, indices } => {
                let mut out = Vec::new();
                for &i in indices {
                    out.extend(enumerate_by_length(*n, i, *max_len)?);
                }
                out
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    RoundTrip,
    Oracle,
    Symmetry,
    Evacuation,
    Index,
    Invariants,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::RoundTrip, Suite::Oracle, Suite::Symmetry, Suite::Evacuation, Suite::Index, Suite::Invariants];

    /// The checks tying forward to the oracles, the reflection and the index.
    pub const DUALITY: [Suite; 4] = [Suite::Symmetry, Suite::Evacuation, Suite::Oracle, Suite::Index];

    pub fn name(self) -> &'static str {
        match self {
            Suite::RoundTrip => "roundtrip",
            Suite::Oracle => "oracle",
            Suite::Symmetry => "symmetry",
            Suite::Evacuation => "evacuation",
            Suite::Index => "index",
            Suite::Invariants => "invariants",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = OracleError;

    fn from_str(s: &str) -> Result<Self, OracleError> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| OracleError::UnknownSuite(s.to_string()))
    }
}

/// One line of the JSON-lines report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub suite: String,
    pub input: String,
    pub pass: bool,
    pub details: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteCount {
    pub passed: usize,
    pub failed: usize,
    /// Failing input of least Coxeter length, first in enumeration order among ties.
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub counts: BTreeMap<String, SuiteCount>,
    #[serde(skip)]
    pub records: Vec<CheckRecord>,
    #[serde(skip)]
    least_failing: BTreeMap<String, usize>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.counts.values().all(|c| c.failed == 0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().map(|c| c.passed + c.failed).sum()
    }

    fn push(&mut self, record: CheckRecord, length: usize) {
        let count =
            self.counts.entry(record.suite.clone()).or_insert(SuiteCount { passed: 0, failed: 0, counterexample: None });
        if record.pass {
            count.passed += 1;
        } else {
            count.failed += 1;
            let best = self.least_failing.entry(record.suite.clone()).or_insert(usize::MAX);
            if length < *best {
                *best = length;
                count.counterexample = Some(record.input.clone());
            }
        }
        self.records.push(record);
    }
}

fn outcome(ok: Result<bool, String>, expect: impl FnOnce() -> String) -> (bool, String) {
    match ok {
        Ok(true) => (true, String::new()),
        Ok(false) => (false, expect()),
        Err(e) => (false, e),
    }
}

fn check(suite: Suite, w: &AffinePermutation, cached: &Result<DarsTuple, DarsError>) -> (bool, String) {
    let fwd = || cached.clone().map_err(|e| e.to_string());
    match suite {
        Suite::RoundTrip => {
            let back = fwd().and_then(|t| inverse(&t).map_err(|e| e.to_string()));
            let shown = format!("{back:?}");
            outcome(back.map(|u| &u == w), || format!("inverse gave {shown}"))
        }
        Suite::Oracle => {
            let pair = fwd().and_then(|t| Ok((t.pbar, ptabloid_oracle(w).map_err(|e| e.to_string())?)));
            let shown = format!("{pair:?}");
            outcome(pair.map(|(a, b)| a == b), || format!("forward vs oracle: {shown}"))
        }
        Suite::Symmetry => {
            let other = w.inverse().dynkin_reflection();
            let pair = fwd().and_then(|t| Ok((t, forward(&other).map_err(|e| e.to_string())?)));
            let shown = format!("{pair:?}");
            outcome(pair.map(|(a, b)| a.pbar == b.qbar && a.qbar == b.pbar), || format!("w and r(w^-1): {shown}"))
        }
        Suite::Evacuation => {
            let pair: Result<(Tabloid, Tabloid), String> = affine_evacuation_of(w)
                .and_then(|a| Ok((a, ptabloid_oracle(&w.dynkin_reflection())?)))
                .map_err(|e| e.to_string());
            let shown = format!("{pair:?}");
            outcome(pair.map(|(a, b)| a == b), || format!("evacuation vs P of r(w): {shown}"))
        }
        Suite::Index => outcome(index_identity(w), || "size of lambda^m differs from n(m-2)-i".into()),
        Suite::Invariants => match check_invariants(w) {
            Ok(r) if r.all_passed() => (true, String::new()),
            Ok(r) => {
                let bad: Vec<String> =
                    r.checks.iter().filter(|c| !c.passed()).map(|c| format!("{}: {:?}", c.name, c.failures)).collect();
                (false, bad.join("; "))
            }
            Err(e) => (false, e.to_string()),
        },
    }
}

/// |λ^m| = n(m - 2) - index(w) for every full window up to three past the first stable one.
pub fn index_identity(w: &AffinePermutation) -> Result<bool, String> {
    let s = first_stable_window(w).map_err(|e| e.to_string())?;
    let region = GrowthRegion::build(w, s.m + 4).map_err(|e| e.to_string())?;
    let n = w.n() as i64;
    for m in affine_growth::window::first_full_window(w)..=s.m + 3 {
        let size = region.lambda(m).map_err(|e| e.to_string())?.size() as i64;
        if size != n * (m - 2) - w.index() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Runs `suites` on every element of the enumeration, handing each record to
/// `sink` as soon as it is produced.
pub fn run_suites(
    enumeration: &Enumeration,
    suites: &[Suite],
    mut sink: impl FnMut(&CheckRecord),
) -> Result<SuiteReport, OracleError> {
    let mut report = SuiteReport::default();
    for w in enumeration.elements()? {
        let cached = forward(&w);
        let length = w.coxeter_length();
        for &suite in suites {
            let (pass, details) = check(suite, &w, &cached);
            let record = CheckRecord { suite: suite.name().into(), input: w.to_string(), pass, details };
            sink(&record);
            report.push(record, length);
        }
    }
    Ok(report)
}

pub fn duality_suite(enumeration: &Enumeration) -> Result<SuiteReport, OracleError> {
    run_suites(enumeration, &Suite::DUALITY, |_| {})
}

/// forward(inverse(t)) = t for every valid tuple of size n with |λ| ≤ `max_lambda`,
/// N₀ ranging over values whose index n(N₀ - 2) - |λ| lies in [-n, n].
pub fn tuple_round_trip(n: usize, max_lambda: usize, mut sink: impl FnMut(&CheckRecord)) -> SuiteReport {
    let mut report = SuiteReport::default();
    let ni = n as i64;
    for k in 0..=max_lambda {
        for lambda in partitions_of(k) {
            for mu in partitions_of(n) {
                let tabs = Tabloid::all_of_shape(&mu);
                for p in &tabs {
                    for q in &tabs {
                        if !validate(&DarsTuple::new(p.clone(), q.clone(), lambda.clone(), 2)).is_valid() {
                            continue;
                        }
                        // i = n(N0 - 2) - k in [-n, n]
                        let lo = (k as i64 - ni).div_euclid(ni) + 2 + i64::from((k as i64 - ni).rem_euclid(ni) != 0);
                        let hi = (k as i64 + ni).div_euclid(ni) + 2;
                        for n0 in lo..=hi {
                            let t = DarsTuple::new(p.clone(), q.clone(), lambda.clone(), n0);
                            let back = inverse(&t).and_then(|w| forward(&w));
                            let pass = back.as_ref() == Ok(&t);
                            let details = if pass { String::new() } else { format!("{back:?}") };
                            let record =
                                CheckRecord { suite: "reverse-roundtrip".into(), input: t.to_string(), pass, details };
                            sink(&record);
                            report.push(record, k);
                        }
                    }
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_passes_everything() {
        let e = Enumeration::Length { n: 3, max_len: 0, indices: vec![0] };
        let report = run_suites(&e, &Suite::ALL, |_| {}).unwrap();
        assert_eq!(report.total(), 6);
        assert!(report.all_passed());
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn tuple_round_trip_bounds_index() {
        let mut seen = Vec::new();
        let report = tuple_round_trip(2, 2, |r| seen.push(r.input.clone()));
        assert!(report.all_passed());
        assert!(!seen.is_empty());
    }

    #[test]
    fn records_serialize_as_json_lines() {
        let r = CheckRecord { suite: "oracle".into(), input: "[2,1]".into(), pass: true, details: String::new() };
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"{"suite":"oracle","input":"[2,1]","pass":true,"details":""}"#);
    }

    #[test]
    fn counterexample_prefers_shorter() {
        let mut report = SuiteReport::default();
        let rec = |input: &str| CheckRecord { suite: "x".into(), input: input.into(), pass: false, details: String::new() };
        report.push(rec("long"), 5);
        report.push(rec("short"), 2);
        report.push(rec("tie"), 2);
        assert_eq!(report.counts["x"].counterexample.as_deref(), Some("short"));
        assert_eq!(report.counts["x"].failed, 3);
    }
}
