//! One PASS/FAIL line per acceptance criterion. Runs the `setdev` binary on
//! the default universe and reads its machine report; a few criteria are
//! checked directly against the library as well.

use std::collections::HashMap;
use std::process::{Command, ExitCode};
use std::time::Instant;

use serde_json::Value;

use setdev::abgroup::{embeds_in, embeds_in_by_search, FinAbGroup};
use setdev::chu::ex_deviation;
use setdev::finset::FiniteSet;
use setdev::verifier::{Record, Universe, Verdict};

fn setdev(args: &[&str]) -> (Option<i32>, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_setdev"))
        .args(args)
        .output()
        .expect("setdev binary runs");
    (
        out.status.code(),
        String::from_utf8(out.stdout).expect("utf-8 output"),
    )
}

type Criterion<'a> = (&'a str, &'a dyn Fn(&Suite) -> Result<(), String>);

struct Suite {
    records: HashMap<String, Record>,
}

impl Suite {
    fn verdict(&self, id: &str) -> Option<Verdict> {
        self.records.get(id).map(|r| r.verdict)
    }

    fn all(&self, ids: &[&str], want: Verdict) -> Result<(), String> {
        let bad: Vec<String> = ids
            .iter()
            .filter(|id| self.verdict(id) != Some(want))
            .map(|id| {
                format!(
                    "{id}={}",
                    self.verdict(id).map_or("missing", Verdict::as_str)
                )
            })
            .collect();
        if bad.is_empty() {
            Ok(())
        } else {
            Err(bad.join(", "))
        }
    }

    fn witness(&self, id: &str) -> Value {
        self.records
            .get(id)
            .and_then(|r| r.witness.clone())
            .unwrap_or(Value::Null)
    }
}

fn factorization(s: &Suite) -> Result<(), String> {
    s.all(&["0.3"], Verdict::Verified)?;
    // every mapping between carriers of size <= 4: sum of y^x
    let expected: u64 = (0..=4u64)
        .flat_map(|x| (0..=4u64).map(move |y| y.pow(x as u32)))
        .sum();
    let count = s.records["0.3"].count;
    if count != expected {
        return Err(format!("{count} mappings checked, expected {expected}"));
    }
    Ok(())
}

fn set_theorems(s: &Suite) -> Result<(), String> {
    s.all(&["L1.1", "T1.1", "1.12"], Verdict::Verified)
}

fn incomparability(s: &Suite) -> Result<(), String> {
    s.all(
        &["T1.2-counterexample"],
        Verdict::CounterexampleFoundAsRequired,
    )?;
    match s.witness("T1.2-counterexample")["size"].as_u64() {
        Some(2) => Ok(()),
        other => Err(format!("witness size {other:?}, wanted 2")),
    }
}

fn groups(s: &Suite) -> Result<(), String> {
    s.all(
        &["devg-oracle", "L2.1", "T2.1-2.7", "T2.1-2.8"],
        Verdict::Verified,
    )?;
    s.all(
        &["T2.1-counterexample"],
        Verdict::CounterexampleFoundAsRequired,
    )
}

fn embeddability(s: &Suite) -> Result<(), String> {
    s.all(&["embeds-fast-vs-oracle"], Verdict::Verified)?;
    // independent of the suite: every pair of groups of order <= 64
    let all: Vec<FinAbGroup> = (1..=64).flat_map(FinAbGroup::all_of_order).collect();
    for a in &all {
        for b in &all {
            if embeds_in(a, b) != embeds_in_by_search(a, b).map_err(|e| e.to_string())? {
                return Err(format!("{a} into {b}"));
            }
        }
    }
    Ok(())
}

fn powerset(s: &Suite) -> Result<(), String> {
    s.all(
        &[
            "L3.1",
            "L3.2",
            "L3.3a",
            "L3.3b",
            "3.18",
            "3.29-3.30",
            "3.58",
            "3.59",
            "3.60",
            "3.61",
            "T3.1",
            "T3.2",
            "T3.3",
        ],
        Verdict::Verified,
    )
}

fn literal_reading(s: &Suite) -> Result<(), String> {
    s.all(&["3.44-computed"], Verdict::Verified)?;
    s.all(&["3.44-literal"], Verdict::RefutedAsStated)?;
    let f = &s.witness("3.44-literal")["f"];
    match (f["dom"].as_u64(), f["cod"].as_u64()) {
        (Some(1), Some(2)) => Ok(()),
        other => Err(format!("witness sizes {other:?}, wanted (1, 2)")),
    }
}

fn chu(s: &Suite) -> Result<(), String> {
    s.all(
        &[
            "3.4-category-laws",
            "3.6-validity",
            "E-functoriality",
            "E-faithfulness",
            "E-fullness",
            "3.11-3.14",
            "3.12",
        ],
        Verdict::Verified,
    )?;
    for n in 2..=4usize {
        let d = ex_deviation(&FiniteSet::new(n)).map_err(|e| e.to_string())?;
        let sizes: Vec<usize> = d.part.blocks().iter().map(Vec::len).collect();
        if !d.missed.is_empty() || sizes != [n << (n - 1); 2] {
            return Err(format!(
                "|X|={n}: blocks {sizes:?}, missed {}",
                d.missed.len()
            ));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let start = Instant::now();
    let (code, first) = setdev(&["verify", "--format", "machine"]);
    let elapsed = start.elapsed();
    let (_, second) = setdev(&["verify", "--format", "machine"]);

    let records: HashMap<String, Record> = first
        .lines()
        .filter_map(|l| serde_json::from_str::<Record>(l).ok())
        .map(|r| (r.id.clone(), r))
        .collect();
    let suite = Suite { records };
    println!(
        "suite: exit {code:?}, {} records, {:.1} s, universe {}",
        suite.records.len(),
        elapsed.as_secs_f64(),
        serde_json::to_string(&Universe::default()).unwrap()
    );

    let determinism = |_: &Suite| -> Result<(), String> {
        if code != Some(0) {
            return Err(format!("verify exited with {code:?}"));
        }
        if first.is_empty() || first != second {
            return Err("machine reports differ between runs".into());
        }
        Ok(())
    };

    let criteria: [Criterion; 9] = [
        ("factorization of all mappings up to 4 -> 4", &factorization),
        (
            "kernel/missed-set lemma, composition theorem and its corollary",
            &set_theorems,
        ),
        (
            "second-component incomparability witnessed at size 2",
            &incomparability,
        ),
        (
            "group deviations: lattice = element tables, lemma, theorem, counterexamples",
            &groups,
        ),
        (
            "embeddability fast path = search for all orders <= 64",
            &embeddability,
        ),
        (
            "powerset lemmas, identities and equivalence theorems",
            &powerset,
        ),
        (
            "literal missed-set reading refuted at |X|=1, |Y|=2; computed form verified",
            &literal_reading,
        ),
        (
            "Chu category laws, embedding functor, e-space deviation",
            &chu,
        ),
        ("determinism of two verify runs", &determinism),
    ];

    let mut failed = 0;
    for (name, check) in criteria {
        match check(&suite) {
            Ok(()) => println!("PASS  {name}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
