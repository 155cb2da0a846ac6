//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion;
//! criteria 1 to 7 gate the test, criterion 8 is reported only.

use std::io::Write;
use std::time::Instant;

use skeinlab::composite::{frobenius_congruence, integrality_2z, integrality_z, r_reform, z_reform};
use skeinlab::exactring::LaurentQT;
use skeinlab::lmov::{congruent_skein_case, hat_h, lmov_check, special_polynomial};
use skeinlab::partitions::{enumerate_upto, pairs_upto, Partition, PartitionPair};
use skeinlab::reference;
use skeinlab::selftest::{integrality_specs, run_suites, STRUCTURAL};
use skeinlab::skein::{torus_full_invariant, LinkSpec};

struct Outcome {
    id: u32,
    title: &'static str,
    gate: bool,
    checked: usize,
    failures: Vec<String>,
    seconds: f64,
}

fn criterion(id: u32, title: &'static str, gate: bool, body: impl FnOnce(&mut Vec<String>) -> usize) -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let checked = body(&mut failures);
    Outcome {
        id,
        title,
        gate,
        checked,
        failures,
        seconds: start.elapsed().as_secs_f64(),
    }
}

fn expect(failures: &mut Vec<String>, ok: bool, what: impl FnOnce() -> String) -> usize {
    if !ok {
        failures.push(what());
    }
    1
}

fn torus_knot_fixtures(f: &mut Vec<String>) -> usize {
    let mut n = 0;
    for k in 1..=3 {
        let spec = LinkSpec::standard_torus(2, 2 * k + 1).unwrap();
        for (pair, want) in reference::torus_knot_w(k) {
            let got = torus_full_invariant(&spec, &[pair.clone()]).map(|r| r.value);
            n += expect(f, got.as_ref() == Ok(&want), || format!("k={k} {pair:?}"));
        }
    }
    n
}

fn hopf_fixtures(f: &mut Vec<String>) -> usize {
    let mut n = 0;
    for case in reference::hopf_hat_h() {
        let spec = LinkSpec::hopf(case.writhe.0, case.writhe.1);
        let got = hat_h(&spec, &case.labels, 2);
        n += expect(f, got.as_ref() == Ok(&case.value), || {
            format!("writhes {:?} labels {:?}", case.writhe, case.labels)
        });
    }
    n
}

fn congruent_skein(f: &mut Vec<String>) -> usize {
    let mut n = 0;
    for k in 0..=3 {
        let ok = congruent_skein_case(2, k).map(|v| v.holds).unwrap_or(false);
        n += expect(f, ok, || format!("p=2 k={k}"));
    }
    for k in 1..=2 {
        let link = LinkSpec::standard_torus(2, 2 * k).unwrap();
        for (pairs, want) in reference::two_component_w(k) {
            let got = torus_full_invariant(&link, &pairs).map(|r| r.value);
            n += expect(f, got.as_ref() == Ok(&want), || format!("k={k} {pairs:?}"));
        }
        let rev = link.with_reversed([1]);
        let got = z_reform(&rev, &[Partition::row(2), Partition::row(2)]);
        n += expect(f, got == Ok(reference::reversed_two_component_z22(k)), || {
            format!("reversed Z_(2)(2) k={k}")
        });
    }
    n
}

fn label_tuples(l: usize, max: usize) -> Vec<Vec<Partition>> {
    (0..l).fold(vec![vec![]], |acc, _| {
        acc.into_iter()
            .flat_map(|prefix| {
                enumerate_upto(max).into_iter().map(move |a| {
                    let mut next = prefix.clone();
                    next.push(a);
                    next
                })
            })
            .collect()
    })
}

fn z_integrality(f: &mut Vec<String>) -> usize {
    let mut n = 0;
    for spec in integrality_specs() {
        for mu in label_tuples(spec.components(), 3) {
            let ok = z_reform(&spec, &mu).map(|z| integrality_z(&z).holds).unwrap_or(false);
            n += expect(f, ok, || format!("{spec} {mu:?}"));
        }
    }
    n
}

fn r_integrality(f: &mut Vec<String>) -> usize {
    let mut n = 0;
    for spec in integrality_specs() {
        for p in [2, 3] {
            let ok = r_reform(&spec, p).map(|r| integrality_2z(&r).holds).unwrap_or(false);
            n += expect(f, ok, || format!("p={p} {spec}"));
        }
    }
    n
}

/// `P_{T(2,n)}(1,t)` from the skein relation `t P₊ - t⁻¹ P₋ = z P₀` at
/// `z → 0`: knots keep their constant term, two-component links their
/// `z⁻¹` coefficient.
fn t2_special_oracle(n: i64) -> LaurentQT {
    let t = |e: i64| LaurentQT::t_pow(e);
    let mut knot = LaurentQT::one();
    let mut link = &t(1) - &t(-1);
    for m in 1..=n {
        if m % 2 == 0 {
            link = &t(-2) * &link;
        } else if m > 1 {
            knot = &(&t(-2) * &knot) + &(&t(-1) * &link);
        }
    }
    knot
}

fn special_polynomials(f: &mut Vec<String>) -> usize {
    let mut n = 0;
    let trefoil = LinkSpec::standard_torus(2, 3).unwrap();
    let base = special_polynomial(&trefoil, &[PartitionPair::new(Partition::row(1), Partition::empty())]);
    let hand: LaurentQT = "2*t^-2 - t^-4".parse().unwrap();
    let mirror = hand.bar();
    n += expect(f, base.as_ref().is_ok_and(|b| *b == hand || *b == mirror), || {
        format!("trefoil base value {base:?}")
    });
    for k in [3, 5] {
        let spec = LinkSpec::standard_torus(2, k).unwrap();
        let pk = t2_special_oracle(k);
        for pair in pairs_upto(3) {
            let got = special_polynomial(&spec, &[pair.clone()]);
            n += expect(f, got == Ok(pk.pow(pair.size() as u32)), || format!("T(2,{k}) {pair:?}"));
        }
    }
    let hopf = LinkSpec::standard_torus(2, 2).unwrap();
    let small = pairs_upto(2);
    for a in &small {
        for b in &small {
            if a.size() + b.size() > 2 {
                continue;
            }
            let got = special_polynomial(&hopf, &[a.clone(), b.clone()]);
            n += expect(f, got == Ok(LaurentQT::one()), || format!("T(2,2) {a:?} {b:?}"));
        }
    }
    n
}

fn structural(f: &mut Vec<String>) -> usize {
    let mut n = 0;
    for r in run_suites(STRUCTURAL) {
        n += r.checked;
        f.extend(r.failures.into_iter().map(|x| format!("{}: {x}", r.name)));
    }
    n
}

fn conjecture_reports(f: &mut Vec<String>) -> usize {
    let mut n = 0;
    for w1 in -1..=1 {
        for w2 in -1..=1 {
            let spec = LinkSpec::hopf(w1, w2);
            for b in label_tuples(2, 2) {
                if b.iter().all(Partition::is_empty) {
                    continue;
                }
                let ok = lmov_check(&spec, &b, 2).map(|r| r.verdict.holds).unwrap_or(false);
                n += expect(f, ok, || format!("LMOV T(2,2)({w1},{w2}) {b:?}"));
            }
        }
    }
    let specs = (-2..=2).map(LinkSpec::unknot).chain([LinkSpec::standard_torus(2, 2).unwrap()]);
    for spec in specs {
        for p in [2, 3] {
            let ok = frobenius_congruence(&spec, p).map(|v| v.holds).unwrap_or(false);
            n += expect(f, ok, || format!("congruence p={p} {spec}"));
        }
    }
    n
}

#[test]
fn acceptance() {
    let outcomes = vec![
        criterion(1, "torus knot W formulas, k = 1..3", true, torus_knot_fixtures),
        criterion(2, "framed Hopf link hat-h values (20)", true, hopf_fixtures),
        criterion(3, "congruent skein relation p = 2 and two-component identities", true, congruent_skein),
        criterion(4, "Z-check integrality in Z[z^2, t^±1]", true, z_integrality),
        criterion(5, "R-check integrality in 2Z[z^2, t^±1]", true, r_integrality),
        criterion(6, "special polynomial factorization", true, special_polynomials),
        criterion(7, "structural property suites", true, structural),
        criterion(8, "conjecture status (informational)", false, conjecture_reports),
    ];
    // Written to the raw handle so the report shows up without --nocapture.
    let mut out = std::io::stdout().lock();
    writeln!(out).unwrap();
    let mut gated_failures = 0;
    for o in &outcomes {
        let status = if o.failures.is_empty() { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "criterion {}: {status}  {} ({} checks, {:.2}s)",
            o.id, o.title, o.checked, o.seconds
        )
        .unwrap();
        for x in o.failures.iter().take(5) {
            writeln!(out, "    {x}").unwrap();
        }
        if o.gate && !o.failures.is_empty() {
            gated_failures += 1;
        }
    }
    assert_eq!(gated_failures, 0, "hard acceptance criteria failed");
}
