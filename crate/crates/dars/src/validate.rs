use std::fmt;

use combinatorics_core::{looparrowright, minimal_inner_shape_pair, Partition, SkewTableau, Tabloid};
use serde::Serialize;

use crate::omega::build_omega;
use crate::DarsTuple;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Condition {
    #[serde(rename = "(1)")]
    SameShape,
    #[serde(rename = "(2)(a)")]
    LengthBound,
    #[serde(rename = "(2)(b)")]
    NoColumnSlide,
    #[serde(rename = "(2)(c)")]
    Saturated,
    #[serde(rename = "(3)")]
    NotReducible,
    #[serde(rename = "(4)")]
    AnyN0,
}

impl Condition {
    pub const ALL: [Condition; 6] = [
        Condition::SameShape,
        Condition::LengthBound,
        Condition::NoColumnSlide,
        Condition::Saturated,
        Condition::NotReducible,
        Condition::AnyN0,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Condition::SameShape => "(1)",
            Condition::LengthBound => "(2)(a)",
            Condition::NoColumnSlide => "(2)(b)",
            Condition::Saturated => "(2)(c)",
            Condition::NotReducible => "(3)",
            Condition::AnyN0 => "(4)",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// An earlier condition failed so this one cannot be evaluated.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionResult {
    pub condition: Condition,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub results: Vec<ConditionResult>,
    /// Smallest common inner shape of the column words, when both fillings are standard.
    pub minimal_lambda: Option<Vec<usize>>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.results.iter().all(|r| r.status == Status::Pass)
    }

    pub fn first_failure(&self) -> Option<&ConditionResult> {
        self.results.iter().find(|r| r.status != Status::Pass)
    }

    pub fn status(&self, c: Condition) -> Status {
        self.results.iter().find(|r| r.condition == c).map_or(Status::Skipped, |r| r.status)
    }
}

fn result(condition: Condition, ok: bool, detail: impl Into<String>) -> ConditionResult {
    ConditionResult { condition, status: if ok { Status::Pass } else { Status::Fail }, detail: detail.into() }
}

/// True iff some column can slide up one row in both fillings at once and
/// leave both standard.
pub fn some_column_slides(p: &SkewTableau, q: &SkewTableau) -> bool {
    let widest = p.inner().first().copied().unwrap_or(0);
    (1..=widest).any(|c| match (p.slide_column_up(c), q.slide_column_up(c)) {
        (Some(a), Some(b)) => a.is_standard() && b.is_standard(),
        _ => false,
    })
}

/// Results of (2)(a), (2)(b) and (2)(c) for a given λ.
fn condition_two(pbar: &Tabloid, qbar: &Tabloid, lambda: &Partition) -> Vec<ConditionResult> {
    let mu = pbar.shape();
    let a = result(Condition::LengthBound, lambda.len() <= mu.len(), format!("l(lambda) = {}, l(mu) = {}", lambda.len(), mu.len()));
    let p = looparrowright(lambda, pbar);
    let q = looparrowright(lambda, qbar);
    let b = if !p.is_standard() {
        result(Condition::NoColumnSlide, false, "lambda -> P is not a standard skew tableau")
    } else if !q.is_standard() {
        result(Condition::NoColumnSlide, false, "lambda -> Q is not a standard skew tableau")
    } else if some_column_slides(&p, &q) {
        result(Condition::NoColumnSlide, false, "a column slides up in both tableaux")
    } else {
        result(Condition::NoColumnSlide, true, "")
    };
    let c = if b.status == Status::Pass {
        match build_omega(&p, &q) {
            Ok(o) if o.is_saturated() => result(Condition::Saturated, true, ""),
            Ok(o) => result(Condition::Saturated, false, format!("color classes with two colors: {:?}", o.conflicts)),
            Err(e) => result(Condition::Saturated, false, e.to_string()),
        }
    } else {
        ConditionResult { condition: Condition::Saturated, status: Status::Skipped, detail: String::new() }
    };
    vec![a, b, c]
}

pub fn validate(t: &DarsTuple) -> ValidationReport {
    let (ps, qs) = (t.pbar.shape(), t.qbar.shape());
    let mut results = vec![result(Condition::SameShape, ps == qs, format!("shapes {ps} and {qs}"))];
    if ps != qs {
        for c in &Condition::ALL[1..5] {
            results.push(ConditionResult { condition: *c, status: Status::Skipped, detail: String::new() });
        }
        results.push(result(Condition::AnyN0, true, ""));
        return ValidationReport { results, minimal_lambda: None };
    }
    results.extend(condition_two(&t.pbar, &t.qbar, &t.lambda));

    let (p, q) = (looparrowright(&t.lambda, &t.pbar), looparrowright(&t.lambda, &t.qbar));
    let minimal_lambda = (p.is_standard() && q.is_standard())
        .then(|| minimal_inner_shape_pair(&p.column_word(), &q.column_word()).ok())
        .flatten()
        .map(|l| l.parts().to_vec());

    let reduced = reduce(&t.lambda, &ps);
    let three = match &reduced {
        Some(l) if condition_two(&t.pbar, &t.qbar, l).iter().all(|r| r.status == Status::Pass) => {
            result(Condition::NotReducible, false, format!("lambda - mu = ({l}) also satisfies (2)"))
        }
        _ => result(Condition::NotReducible, true, ""),
    };
    results.push(three);
    results.push(result(Condition::AnyN0, true, ""));
    ValidationReport { results, minimal_lambda }
}

/// λ - μ when it is a partition.
fn reduce(lambda: &Partition, mu: &Partition) -> Option<Partition> {
    let len = lambda.len().max(mu.len());
    let parts: Option<Vec<usize>> = (0..len).map(|k| lambda.part(k).checked_sub(mu.part(k))).collect();
    Partition::new(parts?).ok()
}
