//! Claim registry and exhaustive checking over bounded finite universes.
//!
//! Every claim is a pure function of a [`Universe`]. Universal claims walk
//! their whole universe and stop at the first failing instance; existential
//! claims stop at the first witness. Instances are visited in a fixed order
//! (total size, then lexicographic), so witnesses are minimal and reports
//! are reproducible byte for byte.

mod chu_claims;
pub mod enumerate;
mod group_claims;
mod powerset_claims;
mod registry;
mod set_claims;

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::abgroup::embed::SEARCH_ORDER_BOUND;
use crate::abgroup::table::ELEMENT_TABLE_BOUND;
use crate::powerset::DEFAULT_POWERSET_BOUND;
use crate::{Error, Result};

pub use enumerate::{
    all_mappings, composable_pairs, endo_pairs, enumerate_mappings, enumerate_mappings_bounded,
    size_pairs, size_triples,
};
pub use registry::{claim, claims};
pub use set_claims::{check_rho_not_functor, find_dev2_incomparability, Incomparability};

/// Version tag carried by every machine-format record.
pub const REPORT_SCHEMA: &str = "setdev-report/1";

/// Upper limits accepted for the universe bounds.
pub const MAX_SET_BOUND: usize = 8;
pub const MAX_GROUP_BOUND: u64 = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Universe {
    /// Carrier bound for single-mapping claims on plain sets.
    pub max_set_size: usize,
    /// Carrier bound for claims over composable pairs and for the powerset
    /// equivalence theorems and Chu claims.
    pub max_triple_size: usize,
    /// Group order bound for single-homomorphism group claims.
    pub max_group_order: u64,
    /// Carrier bound for claims on powerset maps.
    pub max_powerset_base: usize,
    /// Group order bound for claims over composable pairs of homomorphisms.
    pub max_pair_group_order: u64,
    /// Group order bound for the lattice-versus-element-table comparison.
    pub max_oracle_group_order: u64,
    /// Group order bound for the embeddability comparison.
    pub max_embed_group_order: u64,
}

impl Default for Universe {
    fn default() -> Self {
        Universe {
            max_set_size: 4,
            max_triple_size: 3,
            max_group_order: 12,
            max_powerset_base: 4,
            max_pair_group_order: 8,
            max_oracle_group_order: 16,
            max_embed_group_order: 64,
        }
    }
}

impl Universe {
    /// All bounds zero.
    pub fn empty() -> Self {
        Universe {
            max_set_size: 0,
            max_triple_size: 0,
            max_group_order: 0,
            max_powerset_base: 0,
            max_pair_group_order: 0,
            max_oracle_group_order: 0,
            max_embed_group_order: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let sets = [
            ("max_set_size", self.max_set_size, MAX_SET_BOUND),
            ("max_triple_size", self.max_triple_size, MAX_SET_BOUND),
            (
                "max_powerset_base",
                self.max_powerset_base,
                DEFAULT_POWERSET_BOUND,
            ),
        ];
        for (name, value, bound) in sets {
            if value > bound {
                return Err(Error::InvalidUniverse(format!(
                    "{name} = {value} exceeds {bound}"
                )));
            }
        }
        let groups = [
            ("max_group_order", self.max_group_order, MAX_GROUP_BOUND),
            (
                "max_pair_group_order",
                self.max_pair_group_order,
                MAX_GROUP_BOUND,
            ),
            (
                "max_oracle_group_order",
                self.max_oracle_group_order,
                ELEMENT_TABLE_BOUND.min(MAX_GROUP_BOUND),
            ),
            (
                "max_embed_group_order",
                self.max_embed_group_order,
                SEARCH_ORDER_BOUND,
            ),
        ];
        for (name, value, bound) in groups {
            if value > bound {
                return Err(Error::InvalidUniverse(format!(
                    "{name} = {value} exceeds {bound}"
                )));
            }
        }
        Ok(())
    }

    /// Carrier bound for claims on powerset maps of single mappings.
    pub(crate) fn powerset_bound(&self) -> usize {
        self.max_powerset_base
    }

    /// Carrier bound for the equivalence theorems and Chu claims, which
    /// need both the triple bound and the powerset bound.
    pub(crate) fn theorem_bound(&self) -> usize {
        self.max_triple_size.min(self.max_powerset_base)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimKind {
    /// Must hold on every instance; a failure carries a witness.
    Universal,
    /// Must have an instance; success carries a witness.
    Existential,
    /// Evaluated like a universal claim, but never affects the exit status.
    ReportOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Verified,
    CounterexampleFoundAsRequired,
    RefutedAsStated,
    NotFound,
    Skipped,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Verified => "verified",
            Verdict::CounterexampleFoundAsRequired => "counterexample-found-as-required",
            Verdict::RefutedAsStated => "refuted-as-stated",
            Verdict::NotFound => "not-found",
            Verdict::Skipped => "skipped",
        }
    }

    pub const ALL: [Verdict; 5] = [
        Verdict::Verified,
        Verdict::CounterexampleFoundAsRequired,
        Verdict::RefutedAsStated,
        Verdict::NotFound,
        Verdict::Skipped,
    ];
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What a checker saw, before it is read against the claim's kind.
#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Outcome {
    Holds { count: u64 },
    Fails { count: u64, witness: Value },
    Found { count: u64, witness: Value },
    Absent { count: u64 },
    Skipped { reason: String },
}

pub(crate) type Checker = fn(&Universe) -> Outcome;

#[derive(Clone, Copy)]
pub struct Claim {
    pub id: &'static str,
    pub description: &'static str,
    pub kind: ClaimKind,
    pub expected: Verdict,
    pub(crate) check: Checker,
}

impl std::fmt::Debug for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Claim")
            .field("id", &self.id)
            .field("kind", &self.kind)
            .field("expected", &self.expected)
            .finish()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub id: String,
    pub kind: ClaimKind,
    pub verdict: Verdict,
    pub expected: Verdict,
    pub witness: Option<Value>,
    pub count: u64,
    pub note: Option<String>,
    pub elapsed: Duration,
}

impl Report {
    /// Whether this report should fail a run. Skipped claims and
    /// report-only claims never do.
    pub fn is_mismatch(&self) -> bool {
        self.kind != ClaimKind::ReportOnly
            && self.verdict != Verdict::Skipped
            && self.verdict != self.expected
    }

    pub fn to_record(&self, timings: bool) -> Record {
        Record {
            schema: REPORT_SCHEMA.to_string(),
            id: self.id.clone(),
            kind: self.kind,
            verdict: self.verdict,
            expected: self.expected,
            matches: !self.is_mismatch(),
            witness: self.witness.clone(),
            count: self.count,
            note: self.note.clone(),
            millis: timings.then_some(self.elapsed.as_millis() as u64),
        }
    }
}

/// One line of the machine report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Record {
    pub schema: String,
    pub id: String,
    pub kind: ClaimKind,
    pub verdict: Verdict,
    pub expected: Verdict,
    pub matches: bool,
    pub witness: Option<Value>,
    pub count: u64,
    pub note: Option<String>,
    pub millis: Option<u64>,
}

fn interpret(kind: ClaimKind, outcome: Outcome) -> (Verdict, Option<Value>, u64, Option<String>) {
    match outcome {
        Outcome::Holds { count } => (Verdict::Verified, None, count, None),
        Outcome::Fails { count, witness } => (Verdict::RefutedAsStated, Some(witness), count, None),
        Outcome::Found { count, witness } => {
            debug_assert_eq!(kind, ClaimKind::Existential);
            (
                Verdict::CounterexampleFoundAsRequired,
                Some(witness),
                count,
                None,
            )
        }
        Outcome::Absent { count } => (Verdict::NotFound, None, count, None),
        Outcome::Skipped { reason } => (Verdict::Skipped, None, 0, Some(reason)),
    }
}

fn run(c: &Claim, u: &Universe) -> Report {
    let start = Instant::now();
    let outcome = (c.check)(u);
    let elapsed = start.elapsed();
    let (verdict, witness, count, note) = interpret(c.kind, outcome);
    Report {
        id: c.id.to_string(),
        kind: c.kind,
        verdict,
        expected: c.expected,
        witness,
        count,
        note,
        elapsed,
    }
}

pub fn check_claim(id: &str, u: &Universe) -> Result<Report> {
    u.validate()?;
    let c = claim(id).ok_or_else(|| Error::UnknownClaim(id.to_string()))?;
    Ok(run(c, u))
}

/// Checks the given claims concurrently; reports come back in the order of
/// `ids`.
pub fn check_claims(ids: &[&str], u: &Universe) -> Result<Vec<Report>> {
    u.validate()?;
    let selected: Vec<&Claim> = ids
        .iter()
        .map(|id| claim(id).ok_or_else(|| Error::UnknownClaim(id.to_string())))
        .collect::<Result<_>>()?;
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let next = std::sync::atomic::AtomicUsize::new(0);
    let mut slots: Vec<Option<Report>> = vec![None; selected.len()];
    let results = std::sync::Mutex::new(&mut slots);
    std::thread::scope(|s| {
        for _ in 0..workers.min(selected.len()) {
            s.spawn(|| loop {
                let k = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                let Some(c) = selected.get(k) else { break };
                let report = run(c, u);
                results.lock().expect("no worker panicked")[k] = Some(report);
            });
        }
    });
    Ok(slots
        .into_iter()
        .map(|r| r.expect("every claim ran"))
        .collect())
}

pub fn check_all(u: &Universe) -> Result<Vec<Report>> {
    let ids: Vec<&str> = claims().iter().map(|c| c.id).collect();
    check_claims(&ids, u)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub verified: usize,
    pub counterexample_found_as_required: usize,
    pub refuted_as_stated: usize,
    pub not_found: usize,
    pub skipped: usize,
    pub mismatches: usize,
}

impl Summary {
    pub fn of(reports: &[Report]) -> Self {
        let mut s = Summary::default();
        for r in reports {
            *match r.verdict {
                Verdict::Verified => &mut s.verified,
                Verdict::CounterexampleFoundAsRequired => &mut s.counterexample_found_as_required,
                Verdict::RefutedAsStated => &mut s.refuted_as_stated,
                Verdict::NotFound => &mut s.not_found,
                Verdict::Skipped => &mut s.skipped,
            } += 1;
            if r.is_mismatch() {
                s.mismatches += 1;
            }
        }
        s
    }
}

/// One JSON object per line, in report order.
pub fn render_machine(reports: &[Report], timings: bool) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&serde_json::to_string(&r.to_record(timings)).expect("records serialize"));
        out.push('\n');
    }
    out
}

pub fn render_text(reports: &[Report], timings: bool) -> String {
    let width = reports.iter().map(|r| r.id.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in reports {
        let status = if r.is_mismatch() { "MISMATCH" } else { "ok" };
        let _ = write!(out, "{status:<8} {:<width$}  {}", r.id, r.verdict);
        if r.verdict != r.expected {
            let _ = write!(out, " (expected {})", r.expected);
        }
        let _ = write!(out, "  [{} instances", r.count);
        if timings {
            let _ = write!(out, ", {} ms", r.elapsed.as_millis());
        }
        out.push(']');
        out.push('\n');
        if let Some(w) = &r.witness {
            let _ = writeln!(out, "         witness: {w}");
        }
        if let Some(n) = &r.note {
            let _ = writeln!(out, "         note: {n}");
        }
    }
    let s = Summary::of(reports);
    let _ = writeln!(
        out,
        "{} claims: {} verified, {} counterexample-found-as-required, {} refuted-as-stated, {} not-found, {} skipped; {} mismatches",
        reports.len(),
        s.verified,
        s.counterexample_found_as_required,
        s.refuted_as_stated,
        s.not_found,
        s.skipped,
        s.mismatches
    );
    out
}

/// Walks `items` in order; `fails` returns a witness for a failing instance.
pub(crate) fn for_all<T>(
    items: impl IntoIterator<Item = T>,
    mut fails: impl FnMut(&T) -> Option<Value>,
) -> Outcome {
    let mut count = 0;
    for item in items {
        count += 1;
        if let Some(witness) = fails(&item) {
            return Outcome::Fails { count, witness };
        }
    }
    Outcome::Holds { count }
}

/// Walks `items` in order; `hit` returns a witness for a qualifying instance.
pub(crate) fn exists<T>(
    items: impl IntoIterator<Item = T>,
    mut hit: impl FnMut(&T) -> Option<Value>,
) -> Outcome {
    let mut count = 0;
    for item in items {
        count += 1;
        if let Some(witness) = hit(&item) {
            return Outcome::Found { count, witness };
        }
    }
    Outcome::Absent { count }
}

/// Runs several universal checks as one claim; the first failure wins and
/// counts accumulate.
pub(crate) fn all_of(parts: impl IntoIterator<Item = (&'static str, Outcome)>) -> Outcome {
    let mut total = 0;
    for (label, outcome) in parts {
        match outcome {
            Outcome::Holds { count } => total += count,
            Outcome::Fails { count, witness } => {
                return Outcome::Fails {
                    count: total + count,
                    witness: serde_json::json!({ "item": label, "instance": witness }),
                }
            }
            other => return other,
        }
    }
    Outcome::Holds { count: total }
}

pub(crate) fn skip(reason: impl Into<String>) -> Outcome {
    Outcome::Skipped {
        reason: reason.into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn universe_validation() {
        assert!(Universe::default().validate().is_ok());
        assert!(Universe::empty().validate().is_ok());
        let big = Universe {
            max_powerset_base: 13,
            ..Universe::default()
        };
        assert!(big.validate().is_err());
        let json = serde_json::to_string(&Universe::default()).unwrap();
        assert_eq!(
            serde_json::from_str::<Universe>(&json).unwrap(),
            Universe::default()
        );
        assert!(serde_json::from_str::<Universe>(r#"{"max_size": 3}"#).is_err());
        let partial: Universe = serde_json::from_str(r#"{"max_set_size": 2}"#).unwrap();
        assert_eq!(partial.max_triple_size, 3);
    }

    #[test]
    fn verdict_names() {
        for v in Verdict::ALL {
            assert_eq!(
                serde_json::to_value(v).unwrap(),
                Value::String(v.as_str().into())
            );
        }
    }

    #[test]
    fn mismatch_rules() {
        let base = Report {
            id: "x".into(),
            kind: ClaimKind::Universal,
            verdict: Verdict::Verified,
            expected: Verdict::Verified,
            witness: None,
            count: 1,
            note: None,
            elapsed: Duration::ZERO,
        };
        assert!(!base.is_mismatch());
        let refuted = Report {
            verdict: Verdict::RefutedAsStated,
            ..base.clone()
        };
        assert!(refuted.is_mismatch());
        let skipped = Report {
            verdict: Verdict::Skipped,
            ..base.clone()
        };
        assert!(!skipped.is_mismatch());
        let report_only = Report {
            kind: ClaimKind::ReportOnly,
            ..refuted
        };
        assert!(!report_only.is_mismatch());
    }

    #[test]
    fn unknown_claim() {
        assert!(matches!(
            check_claim("NOPE", &Universe::default()),
            Err(Error::UnknownClaim(_))
        ));
    }
}
