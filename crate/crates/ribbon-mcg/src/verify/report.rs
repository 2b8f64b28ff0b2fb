//! Suite reports: one JSON record per case.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// A hypothesis of the case does not hold (for example the pivot
    /// condition); the relation itself was not evaluated.
    Precondition,
    /// The case could not be compiled or evaluated.
    Error,
}

/// Result of evaluating one relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub verdict: Verdict,
    pub witness: Option<String>,
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome { verdict: Verdict::Pass, witness: None }
    }

    pub fn fail(witness: impl Into<String>) -> Self {
        Outcome { verdict: Verdict::Fail, witness: Some(witness.into()) }
    }

    pub fn precondition(why: impl Into<String>) -> Self {
        Outcome { verdict: Verdict::Precondition, witness: Some(why.into()) }
    }

    pub fn is_pass(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Combine checks of the same relation: the first non-pass wins.
    pub fn and(self, other: impl FnOnce() -> Result<Outcome>) -> Result<Outcome> {
        if self.is_pass() {
            other()
        } else {
            Ok(self)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub suite: String,
    pub case: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    pub millis: u64,
    /// Deliberately corrupted case that must fail.
    #[serde(skip_serializing_if = "std::ops::Not::not", default)]
    pub negative_control: bool,
}

impl CaseReport {
    /// Whether the case behaved as intended: relations pass, controls fail.
    pub fn as_expected(&self) -> bool {
        if self.negative_control {
            self.verdict == Verdict::Fail
        } else {
            self.verdict == Verdict::Pass
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub cases: Vec<CaseReport>,
}

impl SuiteReport {
    pub fn merge(mut self, other: SuiteReport) -> SuiteReport {
        self.cases.extend(other.cases);
        self
    }

    /// Non-control cases that did not pass.
    pub fn failures(&self) -> Vec<&CaseReport> {
        self.cases.iter().filter(|c| !c.negative_control && c.verdict != Verdict::Pass).collect()
    }

    /// Negative controls that did not fail.
    pub fn silent_controls(&self) -> Vec<&CaseReport> {
        self.cases.iter().filter(|c| c.negative_control && c.verdict != Verdict::Fail).collect()
    }

    pub fn all_pass(&self) -> bool {
        self.failures().is_empty()
    }

    /// All relations pass, every control fails, and there is at least one control.
    pub fn self_test_ok(&self) -> bool {
        self.all_pass() && self.silent_controls().is_empty() && self.cases.iter().any(|c| c.negative_control)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.cases).expect("reports serialize")
    }

    pub fn summary(&self) -> String {
        let controls = self.cases.iter().filter(|c| c.negative_control).count();
        format!(
            "{} cases, {} failed, {} negative controls ({} behaved)",
            self.cases.len() - controls,
            self.failures().len(),
            controls,
            controls - self.silent_controls().len()
        )
    }
}

type CaseFn<'a> = Box<dyn Fn() -> Result<Outcome> + Send + Sync + 'a>;

/// A named relation check, evaluated lazily.
pub struct Case<'a> {
    pub name: String,
    pub negative_control: bool,
    run: CaseFn<'a>,
}

impl<'a> Case<'a> {
    pub fn new(name: impl Into<String>, run: impl Fn() -> Result<Outcome> + Send + Sync + 'a) -> Self {
        Case { name: name.into(), negative_control: false, run: Box::new(run) }
    }

    pub fn control(name: impl Into<String>, run: impl Fn() -> Result<Outcome> + Send + Sync + 'a) -> Self {
        Case { name: name.into(), negative_control: true, run: Box::new(run) }
    }
}

/// Run independent cases in parallel; the report keeps declaration order.
pub fn run_cases(suite: &str, cases: Vec<Case<'_>>) -> SuiteReport {
    let cases = cases
        .par_iter()
        .map(|c| {
            let t = Instant::now();
            let out = (c.run)().unwrap_or_else(|e| Outcome { verdict: Verdict::Error, witness: Some(e.to_string()) });
            CaseReport {
                suite: suite.to_string(),
                case: c.name.clone(),
                verdict: out.verdict,
                witness: out.witness,
                millis: t.elapsed().as_millis() as u64,
                negative_control: c.negative_control,
            }
        })
        .collect();
    SuiteReport { cases }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_bookkeeping() {
        let cases = vec![
            Case::new("ok", || Ok(Outcome::pass())),
            Case::control("control", || Ok(Outcome::fail("differs"))),
            Case::new("broken", || Err(crate::Error::Unknown("x".into()))),
        ];
        let r = run_cases("demo", cases);
        assert_eq!(r.cases[2].verdict, Verdict::Error);
        assert_eq!(r.failures().len(), 1);
        assert!(r.silent_controls().is_empty());
        assert!(!r.self_test_ok());
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json[0]["suite"], "demo");
        assert_eq!(json[0]["verdict"], "pass");
        assert!(json[0].get("witness").is_none());
        assert_eq!(json[1]["witness"], "differs");
    }
}
