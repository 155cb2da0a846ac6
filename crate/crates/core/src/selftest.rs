//! Exact property suites over the whole engine. Each suite counts the cases
//! it checked and records a line for every failure.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::chars::{char_table, lr_coeff, lr_via_chars};
use crate::composite::{frobenius_congruence, integrality_2z, integrality_z, r_reform, reversal_symmetric, z_reform};
use crate::exactring::hseries_expand_auto;
use crate::lmov::{congruent_skein_case, lmov_check};
use crate::parallel::par_map;
use crate::partitions::{enumerate, enumerate_upto, pairs_upto, Partition, PartitionPair};
use crate::reference;
use crate::skein::{framed_bracket, torus_full_invariant, LinkSpec};
use crate::symfun::{
    composite_product, composite_product_via_schurpair, q_determinant, r_nu, r_nu_character_sum, Basis, IntTable,
    SymFunc,
};

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
    pub seconds: f64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Running count for one suite.
#[derive(Default)]
pub struct Tally {
    checked: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn merge(&mut self, results: Vec<(bool, String)>) {
        for (ok, what) in results {
            self.check(ok, || what);
        }
    }
}

pub type Suite = (&'static str, fn() -> Tally);

fn run(name: &'static str, f: fn() -> Tally) -> SuiteReport {
    let start = Instant::now();
    let t = f();
    SuiteReport {
        name,
        checked: t.checked,
        failures: t.failures,
        seconds: start.elapsed().as_secs_f64(),
    }
}

fn q_determinant_suite() -> Tally {
    let mut t = Tally::default();
    let parts = enumerate_upto(3);
    for a in &parts {
        for b in &parts {
            let want = IntTable::from([(PartitionPair::new(a.clone(), b.clone()), BigInt::one())]);
            t.check(q_determinant(a, b) == want, || format!("det Q[{a},{b}]"));
        }
    }
    t
}

fn lr_suite() -> Tally {
    let mut t = Tally::default();
    for n in 0..=6 {
        for nu in enumerate(n) {
            for k in 0..=n {
                for lambda in enumerate(k) {
                    for mu in enumerate(n - k) {
                        let (a, b) = (lr_coeff(&nu, &lambda, &mu), lr_via_chars(&nu, &lambda, &mu));
                        t.check(a == b, || format!("c^{nu}_{{{lambda},{mu}}}: {a} vs {b}"));
                    }
                }
            }
        }
    }
    t
}

fn orthogonality_suite() -> Tally {
    let mut t = Tally::default();
    for n in 0..=6 {
        let table = char_table(n);
        let ps = &table.partitions;
        for a in ps {
            for b in ps {
                let rows: BigRational = ps
                    .iter()
                    .map(|mu| BigRational::new(BigInt::from(table.get(a, mu) * table.get(b, mu)), mu.z()))
                    .sum();
                let want = if a == b { BigRational::one() } else { BigRational::zero() };
                t.check(rows == want, || format!("rows {a},{b}"));
                let cols: i64 = ps.iter().map(|l| table.get(l, a) * table.get(l, b)).sum();
                let want = if a == b { a.z() } else { BigInt::zero() };
                t.check(BigInt::from(cols) == want, || format!("columns {a},{b}"));
            }
        }
    }
    t
}

fn r_nu_suite() -> Tally {
    let mut t = Tally::default();
    for nu in enumerate_upto(4) {
        t.check(r_nu(&nu) == r_nu_character_sum(&nu), || format!("R_{nu}"));
    }
    t
}

fn symmetry_specs() -> Vec<LinkSpec> {
    vec![LinkSpec::standard_torus(2, 3).unwrap(), LinkSpec::standard_torus(2, 2).unwrap()]
}

fn labelings(l: usize, total: usize) -> Vec<Vec<PartitionPair>> {
    let mut out: Vec<Vec<PartitionPair>> = vec![vec![]];
    for _ in 0..l {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                pairs_upto(total).into_iter().map(move |p| {
                    let mut next = prefix.clone();
                    next.push(p);
                    next
                })
            })
            .filter(|v| v.iter().map(PartitionPair::size).sum::<usize>() <= total)
            .collect();
    }
    out
}

fn symmetry_cases() -> Vec<(LinkSpec, Vec<PartitionPair>)> {
    symmetry_specs()
        .into_iter()
        .flat_map(|s| {
            let l = s.components();
            labelings(l, 3).into_iter().map(move |p| (s.clone(), p))
        })
        .collect()
}

fn pair_swap_suite() -> Tally {
    let mut t = Tally::default();
    t.merge(par_map(&symmetry_cases(), |(spec, pairs)| {
        let swapped: Vec<PartitionPair> = pairs.iter().map(PartitionPair::swap).collect();
        let (a, b) = (framed_bracket(spec, pairs), framed_bracket(spec, &swapped));
        (matches!((a, b), (Ok(x), Ok(y)) if x == y), format!("{spec} {pairs:?}"))
    }));
    t
}

fn conjugation_suite() -> Tally {
    let mut t = Tally::default();
    t.merge(par_map(&symmetry_cases(), |(spec, pairs)| {
        let conj: Vec<PartitionPair> = pairs.iter().map(PartitionPair::conjugate).collect();
        let a = framed_bracket(spec, pairs).and_then(|v| v.conj_q());
        let b = framed_bracket(spec, &conj);
        (matches!((a, b), (Ok(x), Ok(y)) if x == y), format!("{spec} {pairs:?}"))
    }));
    t
}

fn basis_suite() -> Tally {
    let mut t = Tally::default();
    let pairs = pairs_upto(3);
    for pair in &pairs {
        let f = SymFunc::element(Basis::CompositeSchur, pair.clone());
        for b in [Basis::SchurPair, Basis::PowerPair] {
            t.check(f.to_basis(b).to_basis(Basis::CompositeSchur) == f, || format!("{pair:?} via {b:?}"));
        }
    }
    let small = pairs_upto(2);
    for a in &small {
        for b in &small {
            t.check(*composite_product(a, b) == composite_product_via_schurpair(a, b), || {
                format!("Q{a:?} Q{b:?}")
            });
        }
    }
    t
}

/// Example 4.3 and the two-component identities: inputs for the valuation
/// bound and the fixture comparisons.
fn fixture_inputs() -> Vec<(LinkSpec, Vec<PartitionPair>)> {
    let mut out = Vec::new();
    for k in 1..=2 {
        let knot = LinkSpec::standard_torus(2, 2 * k + 1).unwrap();
        for (pair, _) in reference::torus_knot_w(k) {
            out.push((knot.clone(), vec![pair]));
        }
        let link = LinkSpec::standard_torus(2, 2 * k).unwrap();
        for (pairs, _) in reference::two_component_w(k) {
            out.push((link.clone(), pairs.to_vec()));
        }
    }
    out
}

fn lickorish_millett_suite() -> Tally {
    let mut t = Tally::default();
    t.merge(par_map(&fixture_inputs(), |(spec, pairs)| {
        let bound = -(pairs.iter().map(PartitionPair::size).sum::<usize>() as i64);
        let ok = torus_full_invariant(spec, pairs)
            .and_then(|w| hseries_expand_auto(&w.value))
            .map(|s| s.valuation >= bound)
            .unwrap_or(false);
        (ok, format!("{spec} {pairs:?}"))
    }));
    t
}

fn fixture_suite() -> Tally {
    let mut t = Tally::default();
    for k in 1..=2 {
        let knot = LinkSpec::standard_torus(2, 2 * k + 1).unwrap();
        for (pair, want) in reference::torus_knot_w(k) {
            let got = torus_full_invariant(&knot, &[pair.clone()]).map(|r| r.value).ok();
            t.check(got.as_ref() == Some(&want), || format!("W{pair:?}(T(2,{}))", 2 * k + 1));
        }
        let link = LinkSpec::standard_torus(2, 2 * k).unwrap();
        for (pairs, want) in reference::two_component_w(k) {
            let got = torus_full_invariant(&link, &pairs).map(|r| r.value).ok();
            t.check(got.as_ref() == Some(&want), || format!("W{pairs:?}(T(2,{}))", 2 * k));
        }
        let rev = link.clone().with_reversed([1]);
        let got = z_reform(&rev, &[Partition::row(2), Partition::row(2)]).ok();
        t.check(got == Some(reference::reversed_two_component_z22(k)), || {
            format!("Ž_(2)(2) of reversed T(2,{})", 2 * k)
        });
    }
    for case in reference::hopf_hat_h() {
        let spec = LinkSpec::hopf(case.writhe.0, case.writhe.1);
        let got = crate::lmov::hat_h(&spec, &case.labels, 2).ok();
        t.check(got == Some(case.value.clone()), || {
            format!("ĥ{:?} at writhes {:?}", case.labels, case.writhe)
        });
    }
    t
}

/// Framed unknots with writhe in `[-2, 2]` and the torus links used by the
/// integrality suites.
pub fn integrality_specs() -> Vec<LinkSpec> {
    let mut out: Vec<LinkSpec> = (-2..=2).map(LinkSpec::unknot).collect();
    for (p, q) in [(2, 2), (2, 3), (2, 4), (3, 3)] {
        out.push(LinkSpec::standard_torus(p, q).unwrap());
    }
    out
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

fn z_integrality_suite() -> Tally {
    let mut t = Tally::default();
    let cases: Vec<(LinkSpec, Vec<Partition>)> = integrality_specs()
        .into_iter()
        .flat_map(|s| label_tuples(s.components(), 3).into_iter().map(move |m| (s.clone(), m)))
        .collect();
    t.merge(par_map(&cases, |(spec, mu)| {
        let ok = z_reform(spec, mu).map(|z| integrality_z(&z).holds).unwrap_or(false);
        (ok, format!("Ž{mu:?}({spec})"))
    }));
    t
}

fn r_integrality_suite() -> Tally {
    let mut t = Tally::default();
    let cases: Vec<(LinkSpec, usize)> = integrality_specs()
        .into_iter()
        .flat_map(|s| [2, 3].map(|p| (s.clone(), p)))
        .collect();
    t.merge(par_map(&cases, |(spec, p)| {
        let ok = r_reform(spec, *p).map(|r| integrality_2z(&r).holds).unwrap_or(false);
        (ok, format!("Ř_{p}({spec})"))
    }));
    t
}

fn reversal_suite() -> Tally {
    let mut t = Tally::default();
    let mut cases: Vec<(LinkSpec, Vec<Partition>)> = Vec::new();
    for spec in [
        LinkSpec::unknot(1),
        LinkSpec::standard_torus(2, 3).unwrap(),
        LinkSpec::standard_torus(2, 2).unwrap(),
        LinkSpec::standard_torus(2, 4).unwrap(),
    ] {
        for mu in label_tuples(spec.components(), 2) {
            cases.push((spec.clone(), mu));
        }
    }
    t.merge(par_map(&cases, |(spec, mu)| {
        (reversal_symmetric(spec, mu).unwrap_or(false), format!("{spec} {mu:?}"))
    }));
    t
}

fn congruent_skein_suite() -> Tally {
    let mut t = Tally::default();
    let ks: Vec<i64> = (0..=3).collect();
    t.merge(par_map(&ks, |&k| {
        (congruent_skein_case(2, k).map(|v| v.holds).unwrap_or(false), format!("p=2 k={k}"))
    }));
    t
}

fn degree_one_lmov_suite() -> Tally {
    let mut t = Tally::default();
    let knots = [
        LinkSpec::unknot(0),
        LinkSpec::torus(2, 3, 1).unwrap(),
        LinkSpec::torus(2, 5, 1).unwrap(),
        LinkSpec::torus(3, 2, 1).unwrap(),
    ];
    for spec in knots {
        // Zero framing: cancel the self-writhe of the torus diagram.
        let (m, n, _) = spec.mnl();
        let spec = match spec.family {
            crate::skein::Family::TorusLink { .. } => spec.with_framing(vec![-(m as i64) * n]),
            crate::skein::Family::FramedUnknot => spec,
        };
        let ok = lmov_check(&spec, &[Partition::row(1)], 1)
            .map(|r| r.verdict.holds)
            .unwrap_or(false);
        t.check(ok, || format!("ĥ_(1)({spec})"));
    }
    t
}

fn frobenius_suite() -> Tally {
    let mut t = Tally::default();
    let mut cases: Vec<(LinkSpec, usize)> = Vec::new();
    for spec in (-2..=2).map(LinkSpec::unknot).chain([LinkSpec::standard_torus(2, 2).unwrap()]) {
        for p in [2, 3] {
            cases.push((spec.clone(), p));
        }
    }
    t.merge(par_map(&cases, |(spec, p)| {
        (frobenius_congruence(spec, *p).map(|v| v.holds).unwrap_or(false), format!("p={p} {spec}"))
    }));
    t
}

/// The structural suites: symmetric functions, characters and the skein
/// symmetries.
pub const STRUCTURAL: &[Suite] = &[
    ("q_determinant", q_determinant_suite),
    ("lr_tableau_vs_characters", lr_suite),
    ("character_orthogonality", orthogonality_suite),
    ("r_nu_dual_path", r_nu_suite),
    ("pair_swap_symmetry", pair_swap_suite),
    ("conjugation_symmetry", conjugation_suite),
    ("basis_round_trips", basis_suite),
];

/// Invariant-level suites: printed fixtures, integrality, congruences.
pub const INVARIANTS: &[Suite] = &[
    ("printed_fixtures", fixture_suite),
    ("lickorish_millett_valuation", lickorish_millett_suite),
    ("z_integrality", z_integrality_suite),
    ("r_integrality", r_integrality_suite),
    ("reversal_symmetry", reversal_suite),
    ("congruent_skein_p2", congruent_skein_suite),
    ("degree_one_lmov", degree_one_lmov_suite),
    ("frobenius_congruence", frobenius_suite),
];

pub fn run_suites(suites: &[Suite]) -> Vec<SuiteReport> {
    suites.iter().map(|&(name, f)| run(name, f)).collect()
}

pub fn run_all() -> Vec<SuiteReport> {
    let mut out = run_suites(STRUCTURAL);
    out.extend(run_suites(INVARIANTS));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suites_pass() {
        for r in run_suites(&STRUCTURAL[..4]) {
            assert!(r.passed(), "{}: {:?}", r.name, r.failures);
            assert!(r.checked > 0);
        }
    }
}
