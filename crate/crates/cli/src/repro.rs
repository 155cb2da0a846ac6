//! Recompute the printed fixtures and report any entry that differs.

use serde_json::{json, Value};

use skeinlab::composite::z_reform;
use skeinlab::lmov::{congruent_skein_case, hat_h};
use skeinlab::parallel::par_map;
use skeinlab::partitions::Partition;
use skeinlab::reference;
use skeinlab::skein::{torus_full_invariant, LinkSpec};
use skeinlab::symfun::q_matrix;

use crate::jobs::{CliError, Job};
use crate::Fixture;

fn row(what: String, got: Option<String>, want: String) -> Value {
    let ok = got.as_deref() == Some(want.as_str());
    json!({"case": what, "got": got, "expected": want, "match": ok})
}

fn finish(fixture: &str, rows: Vec<Value>) -> (Value, bool) {
    let mismatches: Vec<Value> = rows.iter().filter(|r| r["match"] == false).cloned().collect();
    let ok = mismatches.is_empty();
    (
        json!({"command": "repro", "fixture": fixture, "checked": rows.len(),
               "mismatches": mismatches, "cases": rows, "verdict": ok}),
        ok,
    )
}

fn matrix_text(m: &[Vec<skeinlab::symfun::HEntry>]) -> Vec<String> {
    m.iter()
        .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
        .collect()
}

fn example_31() -> Vec<Value> {
    let (lambda, mu, want) = reference::determinant_matrix();
    let got = matrix_text(&q_matrix(&lambda, &mu));
    let want = matrix_text(&want);
    (0..want.len())
        .map(|i| row(format!("row {} of M_{{{lambda},{mu}}}", i + 1), got.get(i).cloned(), want[i].clone()))
        .collect()
}

fn example_43(ks: &[i64]) -> Result<Vec<Value>, CliError> {
    let mut cases = Vec::new();
    for &k in ks {
        let spec = LinkSpec::standard_torus(2, 2 * k + 1)?;
        cases.extend(reference::torus_knot_w(k).into_iter().map(|(pair, want)| (k, spec.clone(), pair, want)));
    }
    Ok(par_map(&cases, |(k, spec, pair, want)| {
        let got = torus_full_invariant(spec, std::slice::from_ref(pair)).map(|r| r.value.to_string());
        row(format!("W_{pair}(T(2,{}))", 2 * k + 1), got.ok(), want.to_string())
    }))
}

fn example_63() -> Vec<Value> {
    let cases = reference::hopf_hat_h();
    par_map(&cases, |c| {
        let spec = LinkSpec::hopf(c.writhe.0, c.writhe.1);
        let got = hat_h(&spec, &c.labels, 2).map(|v| v.to_string());
        row(
            format!("hat_h_{}{} writhes ({},{})", c.labels[0], c.labels[1], c.writhe.0, c.writhe.1),
            got.ok(),
            c.value.to_string(),
        )
    })
}

fn theorem_79(ks: &[i64]) -> Result<Vec<Value>, CliError> {
    let mut rows = Vec::new();
    let verdicts = par_map(ks, |&k| congruent_skein_case(2, k));
    for (k, v) in ks.iter().zip(verdicts) {
        let v = v?;
        let failed = v.failed.map(|s| format!("{s:?}"));
        rows.push(json!({"case": format!("p=2 k={k}"), "failed_stage": failed, "match": v.holds}));
    }
    for &k in ks.iter().filter(|&&k| k >= 1) {
        let link = LinkSpec::standard_torus(2, 2 * k)?;
        for (pairs, want) in reference::two_component_w(k) {
            let got = torus_full_invariant(&link, &pairs).map(|r| r.value.to_string());
            rows.push(row(format!("W_{},{}(T(2,{}))", pairs[0], pairs[1], 2 * k), got.ok(), want.to_string()));
        }
        let rev = link.with_reversed([1]);
        let got = z_reform(&rev, &[Partition::row(2), Partition::row(2)]).map(|v| v.to_string());
        rows.push(row(
            format!("reversed Z_(2)(2)(T(2,{}))", 2 * k),
            got.ok(),
            reference::reversed_two_component_z22(k).to_string(),
        ));
    }
    Ok(rows)
}

pub fn run(job: &Job, fixture: Fixture) -> Result<(Value, bool), CliError> {
    Ok(match fixture {
        Fixture::Example31 => finish("example-3.1", example_31()),
        Fixture::Example43 => {
            let ks: Vec<i64> = job.k_range(1..=3)?.collect();
            if ks.contains(&0) || *ks.last().unwrap() > 3 {
                return Err(CliError::Usage("example-4.3 prints k = 1..3 only".into()));
            }
            finish("example-4.3", example_43(&ks)?)
        }
        Fixture::Example63 => finish("example-6.3", example_63()),
        Fixture::Theorem79 => {
            let ks: Vec<i64> = job.k_range(0..=3)?.collect();
            finish("theorem-7.9", theorem_79(&ks)?)
        }
    })
}
