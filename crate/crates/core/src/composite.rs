//! Composite invariants `H_Ā`, their framed versions, and the reformulated
//! invariants `Ž`, `Ř` built from power-sum decorations.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;
use serde_json::{json, Value};

use crate::chars::lr_coeff;
use crate::error::{Error, Result};
use crate::exactring::{zsquare_decompose, zsquare_decompose_rational, LaurentQT, RationalQT, ZTable};
use crate::memo::Memo;
use crate::partitions::{enumerate, Partition, PartitionPair};
use crate::skein::{torus_framed_lin, LinkSpec};
use crate::symfun::{power_decoration, r_nu_composite, Lin};

/// `Σ_{λ,μ} c^A_{λμ} Q_{λ,μ}`
pub fn composite_decoration(a: &Partition) -> Arc<Lin<LaurentQT>> {
    static MEMO: Memo<Partition, Lin<LaurentQT>> = Memo::new();
    MEMO.get_or(a, || {
        let n = a.size();
        let mut out = Lin::new();
        for k in 0..=n {
            for lambda in enumerate(k) {
                for mu in enumerate(n - k) {
                    let c = lr_coeff(a, &lambda, &mu);
                    if c > 0 {
                        out.insert(PartitionPair::new(lambda.clone(), mu), LaurentQT::constant(c));
                    }
                }
            }
        }
        out
    })
}

/// `P_μ` (or `P*_μ`) in the composite basis.
pub fn power_sum_decoration(mu: &Partition) -> Arc<Lin<LaurentQT>> {
    static MEMO: Memo<Partition, Lin<LaurentQT>> = Memo::new();
    MEMO.get_or(mu, || {
        power_decoration(mu, false)
            .into_iter()
            .map(|(k, c)| (k, LaurentQT::constant(c)))
            .collect()
    })
}

fn check_len(spec: &LinkSpec, got: usize) -> Result<()> {
    if spec.components() != got {
        return Err(Error::LabelCountMismatch {
            expected: spec.components(),
            got,
        });
    }
    Ok(())
}

fn unframed(spec: &LinkSpec) -> LinkSpec {
    let (m, n, l) = spec.mnl();
    spec.clone().with_framing(vec![-(m as i64) * n; l])
}

fn decorations(labels: &[Partition], f: fn(&Partition) -> Arc<Lin<LaurentQT>>) -> Vec<Lin<LaurentQT>> {
    labels.iter().map(|a| (*f(a)).clone()).collect()
}

/// `H_Ā = Σ c^Ā_{λ̄,μ̄} W_{[λ¹,μ¹],…}`
pub fn composite_invariant(spec: &LinkSpec, labels: &[Partition]) -> Result<RationalQT> {
    check_len(spec, labels.len())?;
    torus_framed_lin(&unframed(spec), &decorations(labels, composite_decoration))
}

/// `ℋ_Ā`: the same sum over framed brackets, without writhe normalization.
pub fn framed_composite(spec: &LinkSpec, labels: &[Partition]) -> Result<RationalQT> {
    check_len(spec, labels.len())?;
    torus_framed_lin(spec, &decorations(labels, composite_decoration))
}

/// `[μ̄] = Π_α Π_i (q^{μ^α_i} - q^{-μ^α_i})`
pub fn bracket_product(labels: &[Partition]) -> LaurentQT {
    labels
        .iter()
        .flat_map(|mu| mu.parts().iter())
        .fold(LaurentQT::one(), |acc, &k| &acc * &LaurentQT::q_bracket(k as i64))
}

/// `Ž_μ̄ = [μ̄] ⟨L ⋆ ⊗ P_{μ^α}⟩`; reversed components carry `P*`.
pub fn z_reform(spec: &LinkSpec, labels: &[Partition]) -> Result<RationalQT> {
    check_len(spec, labels.len())?;
    let z = torus_framed_lin(spec, &decorations(labels, power_sum_decoration))?;
    Ok(z.mul_laurent(&bracket_product(labels)))
}

/// `Ž_p` with every component colored by `(p)`.
pub fn z_reform_p(spec: &LinkSpec, p: usize) -> Result<RationalQT> {
    z_reform(spec, &vec![Partition::row(p); spec.components()])
}

/// `Ř_ν̄ = [ν̄] ⟨L ⋆ ⊗ R_{ν^α}⟩`
pub fn r_reform_labels(spec: &LinkSpec, labels: &[Partition]) -> Result<RationalQT> {
    check_len(spec, labels.len())?;
    let decs: Vec<Lin<LaurentQT>> = labels
        .iter()
        .map(|nu| {
            r_nu_composite(nu)
                .into_iter()
                .map(|(k, c)| (k, LaurentQT::constant(c)))
                .collect()
        })
        .collect();
    Ok(torus_framed_lin(spec, &decs)?.mul_laurent(&bracket_product(labels)))
}

/// `Ř_p` as the sum of `Ž_p` over all `2^L` orientation-reversal subsets.
pub fn r_reform(spec: &LinkSpec, p: usize) -> Result<RationalQT> {
    if p == 0 {
        return Err(Error::InvalidSpec("p must be positive".into()));
    }
    let l = spec.components();
    let terms = (0u32..1 << l)
        .map(|mask| {
            let reversed = (0..l).filter(|i| mask & (1 << i) != 0);
            z_reform_p(&spec.clone().with_reversed(reversed), p)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RationalQT::sum_many(&terms))
}

/// Which step of a membership test failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    NotLaurent,
    NotEven,
    NotDivisible,
    NotZSquare,
}

/// Outcome of a membership test together with its integer certificate.
#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub holds: bool,
    pub failed: Option<Stage>,
    pub table: ZTable,
}

impl Verdict {
    pub fn pass(table: ZTable) -> Self {
        Verdict {
            holds: true,
            failed: None,
            table,
        }
    }

    pub fn fail(stage: Stage) -> Self {
        Verdict {
            holds: false,
            failed: Some(stage),
            table: ZTable::new(),
        }
    }

    /// Rows `[g, Q, n]` with the table's `z^{2g}` index shifted by `shift`.
    pub fn rows(&self, shift: i64) -> Value {
        Value::Array(
            self.table
                .iter()
                .map(|((g, q), n)| json!([g + shift, q, big_json(n)]))
                .collect(),
        )
    }
}

pub(crate) fn big_json(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

/// `Ž`-type membership: `f ∈ Z[z², t^±]`.
pub fn integrality_z(f: &RationalQT) -> Verdict {
    match f.to_laurent() {
        Err(_) => Verdict::fail(Stage::NotLaurent),
        Ok(p) => match zsquare_decompose(&p, 0) {
            Ok(t) => Verdict::pass(t),
            Err(_) => Verdict::fail(Stage::NotZSquare),
        },
    }
}

/// `f ∈ 2Z[z², t^±]`; the certificate is the table of `f/2`.
pub fn integrality_2z(f: &RationalQT) -> Verdict {
    let p = match f.to_laurent() {
        Ok(p) => p,
        Err(_) => return Verdict::fail(Stage::NotLaurent),
    };
    let half = match p.div_scalar_exact(&BigInt::from(2)) {
        Ok(h) => h,
        Err(_) => return Verdict::fail(Stage::NotEven),
    };
    match zsquare_decompose(&half, 0) {
        Ok(t) => Verdict::pass(t),
        Err(_) => Verdict::fail(Stage::NotZSquare),
    }
}

/// `(A - B)/C ∈ Z[z², t^±]`
pub fn congruence_check(a: &RationalQT, b: &RationalQT, c: &LaurentQT) -> Result<Verdict> {
    if c.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let diff = a - b;
    if diff.is_zero() {
        return Ok(Verdict::pass(ZTable::new()));
    }
    let q = match diff.div(&RationalQT::from(c.clone()))?.to_laurent() {
        Ok(q) => q,
        Err(_) => return Ok(Verdict::fail(Stage::NotDivisible)),
    };
    Ok(match zsquare_decompose_rational(&RationalQT::from(q), 0) {
        Ok(t) => Verdict::pass(t),
        Err(_) => Verdict::fail(Stage::NotZSquare),
    })
}

/// `{p} = [p]/[1]` as a Laurent polynomial.
pub fn curly(p: i64) -> LaurentQT {
    LaurentQT::q_bracket(p)
        .exact_div(&LaurentQT::q_bracket(1))
        .expect("[1] divides [p]")
}

/// `Ž_p(L) ≡ (-1)^{(p-1) w̄} Ž_1(L; q^p, t^p) mod {p}²`
pub fn frobenius_congruence(spec: &LinkSpec, p: usize) -> Result<Verdict> {
    let zp = z_reform_p(spec, p)?;
    let z1 = z_reform_p(spec, 1)?.substitute_power(p as i64);
    let wbar: i64 = spec.self_writhe().iter().sum();
    let sign = if ((p as i64 - 1) * wbar).rem_euclid(2) == 0 { 1 } else { -1 };
    congruence_check(&zp, &z1.scale(&BigInt::from(sign)), &curly(p as i64).pow(2))
}

/// Whether `Ž` with reversal set `S` equals `Ž` with the complement of `S`.
pub fn reversal_symmetric(spec: &LinkSpec, labels: &[Partition]) -> Result<bool> {
    let l = spec.components();
    for mask in 0u32..1 << l {
        let s: Vec<usize> = (0..l).filter(|i| mask & (1 << i) != 0).collect();
        let c: Vec<usize> = (0..l).filter(|i| mask & (1 << i) == 0).collect();
        let a = z_reform(&spec.clone().with_reversed(s), labels)?;
        let b = z_reform(&spec.clone().with_reversed(c), labels)?;
        if a != b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Integer `2` as a big integer; the factor in `Ř ∈ 2Z[z², t^±]`.
pub fn two() -> BigInt {
    BigInt::one() + BigInt::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::p;
    use crate::skein::{knot_invariant, power_value};

    fn s() -> RationalQT {
        power_value(1)
    }

    #[test]
    fn composite_of_unknot() {
        let u = LinkSpec::unknot(0);
        assert_eq!(composite_invariant(&u, &[p(&[1])]).unwrap(), s().scale(&two()));
        assert_eq!(composite_invariant(&u, &[Partition::empty()]).unwrap(), RationalQT::one());
        let t23 = LinkSpec::torus(2, 3, 1).unwrap();
        let w = knot_invariant(&t23, &PartitionPair::new(p(&[1]), Partition::empty())).unwrap();
        assert_eq!(composite_invariant(&t23, &[p(&[1])]).unwrap(), w.scale(&two()));
    }

    #[test]
    fn framed_composite_of_unknot() {
        assert_eq!(framed_composite(&LinkSpec::unknot(0), &[p(&[1])]).unwrap(), s().scale(&two()));
        assert_eq!(
            framed_composite(&LinkSpec::unknot(1), &[p(&[1])]).unwrap(),
            s().scale(&two()).mul_laurent(&LaurentQT::t_pow(1))
        );
    }

    #[test]
    fn reformulated_unknot() {
        let z = z_reform(&LinkSpec::unknot(0), &[p(&[2])]).unwrap();
        assert_eq!(z, RationalQT::from(LaurentQT::t_bracket(2)));
        let r = r_reform(&LinkSpec::unknot(0), 1).unwrap();
        assert_eq!(r, RationalQT::from(LaurentQT::t_bracket(1).scale(&two())));
    }

    #[test]
    fn r_reform_matches_r_decoration() {
        let spec = LinkSpec::standard_torus(2, 2).unwrap();
        for q in 1..=2 {
            let labels = vec![Partition::row(q); 2];
            assert_eq!(r_reform(&spec, q).unwrap(), r_reform_labels(&spec, &labels).unwrap());
        }
    }

    #[test]
    fn membership_verdicts() {
        let z2 = LaurentQT::z().pow(2);
        let f = RationalQT::from(&z2.scale(&two()) * &LaurentQT::t_pow(1));
        let v = integrality_2z(&f);
        assert!(v.holds);
        assert_eq!(v.table, ZTable::from([((1, 1), BigInt::one())]));
        let g = RationalQT::from(&LaurentQT::q_pow(1) + &LaurentQT::q_pow(-1));
        assert!(!integrality_2z(&g).holds);
        let a = RationalQT::from(z2.clone());
        assert!(congruence_check(&a, &a, &z2).unwrap().holds);
        assert!(!congruence_check(&a, &RationalQT::zero(), &z2.pow(2)).unwrap().holds);
        assert!(congruence_check(&a, &a, &LaurentQT::zero()).is_err());
    }
}
