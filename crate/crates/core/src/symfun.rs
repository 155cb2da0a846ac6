//! The algebra `Λ_x ⊗ Λ_{x*}` behind the full skein of the annulus.
//!
//! Three bases are supported: composite Schur functions `s_{λ,μ}` (the
//! images of `Q_{λ,μ}`), Schur pairs `s_ρ ⊗ s*_ν`, and power-sum pairs
//! `P_η P*_π`. Products and Adams operations are done on Schur pairs; the
//! other two bases are conversion layers.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::chars::{chi, lr_coeff, lr_product, lr_skew};
use crate::exactring::{LaurentQT, RationalQT};
use crate::memo::Memo;
use crate::partitions::{enumerate, enumerate_upto, splittings, Partition, PartitionPair, SplitFlags};

/// Ring elements usable as coefficients of a linear combination.
pub trait Coeff: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale_int(&self, c: &BigInt) -> Self;
}

/// Coefficient rings containing `Q`.
pub trait RatCoeff: Coeff {
    fn from_ratio(r: &BigRational) -> Self;
}

impl Coeff for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn scale_int(&self, c: &BigInt) -> Self {
        self * c
    }
}

impl Coeff for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn scale_int(&self, c: &BigInt) -> Self {
        self * BigRational::from_integer(c.clone())
    }
}

impl RatCoeff for BigRational {
    fn from_ratio(r: &BigRational) -> Self {
        r.clone()
    }
}

impl Coeff for LaurentQT {
    fn zero() -> Self {
        LaurentQT::zero()
    }
    fn one() -> Self {
        LaurentQT::one()
    }
    fn is_zero(&self) -> bool {
        LaurentQT::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn scale_int(&self, c: &BigInt) -> Self {
        self.scale(c)
    }
}

impl Coeff for RationalQT {
    fn zero() -> Self {
        RationalQT::zero()
    }
    fn one() -> Self {
        RationalQT::one()
    }
    fn is_zero(&self) -> bool {
        RationalQT::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn scale_int(&self, c: &BigInt) -> Self {
        self.scale(c)
    }
}

impl RatCoeff for RationalQT {
    fn from_ratio(r: &BigRational) -> Self {
        RationalQT::from_ratio(r)
    }
}

/// A finite linear combination indexed by partition pairs.
pub type Lin<C> = BTreeMap<PartitionPair, C>;
pub type IntTable = Lin<BigInt>;
pub type RatTable = Lin<BigRational>;

pub fn add_term<C: Coeff>(t: &mut Lin<C>, k: PartitionPair, v: C) {
    if v.is_zero() {
        return;
    }
    match t.get_mut(&k) {
        Some(slot) => {
            let s = slot.add(&v);
            if s.is_zero() {
                t.remove(&k);
            } else {
                *slot = s;
            }
        }
        None => {
            t.insert(k, v);
        }
    }
}

pub fn lin_add<C: Coeff>(a: &Lin<C>, b: &Lin<C>) -> Lin<C> {
    let mut out = a.clone();
    for (k, v) in b {
        add_term(&mut out, k.clone(), v.clone());
    }
    out
}

pub fn lin_scale<C: Coeff>(a: &Lin<C>, c: &C) -> Lin<C> {
    let mut out = Lin::new();
    for (k, v) in a {
        add_term(&mut out, k.clone(), v.mul(c));
    }
    out
}

/// Applies a linear map given on basis elements by integer tables.
pub fn map_linear<C: Coeff>(t: &Lin<C>, f: impl Fn(&PartitionPair) -> Arc<IntTable>) -> Lin<C> {
    let mut out = Lin::new();
    for (k, v) in t {
        for (k2, c) in f(k).iter() {
            add_term(&mut out, k2.clone(), v.scale_int(c));
        }
    }
    out
}

/// Like [`map_linear`] with rational images.
pub fn map_linear_rat<C: RatCoeff>(t: &Lin<C>, f: impl Fn(&PartitionPair) -> Arc<RatTable>) -> Lin<C> {
    let mut out = Lin::new();
    for (k, v) in t {
        for (k2, c) in f(k).iter() {
            add_term(&mut out, k2.clone(), v.mul(&C::from_ratio(c)));
        }
    }
    out
}

fn int_table_of<C: Coeff>(t: &IntTable) -> Lin<C> {
    let mut out = Lin::new();
    for (k, v) in t {
        add_term(&mut out, k.clone(), C::one().scale_int(v));
    }
    out
}

// ---------------------------------------------------------------------------
// Schur-pair structure

/// `(s_ρ ⊗ s*_ν)(s_α ⊗ s*_β)` in the Schur-pair basis.
pub fn schurpair_product(a: &PartitionPair, b: &PartitionPair) -> Arc<IntTable> {
    static MEMO: Memo<(PartitionPair, PartitionPair), IntTable> = Memo::new();
    let key = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
    MEMO.get_or(&key, || {
        let pos = lr_product(&a.pos, &b.pos);
        let neg = lr_product(&a.neg, &b.neg);
        let mut out = IntTable::new();
        for (x, cx) in &pos {
            for (y, cy) in &neg {
                out.insert(PartitionPair::new(x.clone(), y.clone()), BigInt::from(cx * cy));
            }
        }
        out
    })
}

/// Product of two Schur-pair combinations.
pub fn mul_schurpair<C: Coeff>(a: &Lin<C>, b: &Lin<C>) -> Lin<C> {
    let mut out = Lin::new();
    for (ka, va) in a {
        for (kb, vb) in b {
            let prod = va.mul(vb);
            if prod.is_zero() {
                continue;
            }
            for (k, c) in schurpair_product(ka, kb).iter() {
                add_term(&mut out, k.clone(), prod.scale_int(c));
            }
        }
    }
    out
}

/// `s_{λ,μ} = Σ_{σ,ρ,ν} (-1)^{|σ|} c^λ_{σρ} c^μ_{σᵗν} s_ρ ⊗ s*_ν`
pub fn composite_to_schurpair(pair: &PartitionPair) -> Arc<IntTable> {
    static MEMO: Memo<PartitionPair, IntTable> = Memo::new();
    MEMO.get_or(pair, || {
        let mut out = IntTable::new();
        let (lambda, mu) = (&pair.pos, &pair.neg);
        for sigma in enumerate_upto(lambda.size().min(mu.size())) {
            let st = sigma.conjugate();
            if !sigma.fits_in(lambda) || !st.fits_in(mu) {
                continue;
            }
            let sign = if sigma.size() % 2 == 0 { 1 } else { -1 };
            let left = lr_skew(lambda, &sigma);
            let right = lr_skew(mu, &st);
            for (rho, a) in &left {
                for (nu, b) in &right {
                    let c = BigInt::from(sign * (*a as i64) * (*b as i64));
                    add_term(&mut out, PartitionPair::new(rho.clone(), nu.clone()), c);
                }
            }
        }
        out
    })
}

/// `s_ρ ⊗ s*_ν = Σ_{ε,a,b} c^ρ_{εa} c^ν_{εb} s_{a,b}`
pub fn schurpair_to_composite(pair: &PartitionPair) -> Arc<IntTable> {
    static MEMO: Memo<PartitionPair, IntTable> = Memo::new();
    MEMO.get_or(pair, || {
        let mut out = IntTable::new();
        let (rho, nu) = (&pair.pos, &pair.neg);
        for eps in enumerate_upto(rho.size().min(nu.size())) {
            if !eps.fits_in(rho) || !eps.fits_in(nu) {
                continue;
            }
            let left = lr_skew(rho, &eps);
            let right = lr_skew(nu, &eps);
            for (a, x) in &left {
                for (b, y) in &right {
                    add_term(&mut out, PartitionPair::new(a.clone(), b.clone()), BigInt::from(x * y));
                }
            }
        }
        out
    })
}

/// `s_{ξ,η} s_{ρ,ν} = Σ M^{[λ,μ]}_{[ξ,η],[ρ,ν]} s_{λ,μ}` with
///
/// `M = Σ_{β,γ,θ,δ} (Σ_σ c^ξ_{σβ} c^ν_{σγ})(Σ_ε c^η_{εθ} c^ρ_{εδ}) c^λ_{βδ} c^μ_{γθ}`.
pub fn composite_product(a: &PartitionPair, b: &PartitionPair) -> Arc<IntTable> {
    static MEMO: Memo<(PartitionPair, PartitionPair), IntTable> = Memo::new();
    MEMO.get_or(&(a.clone(), b.clone()), || {
        let (xi, eta) = (&a.pos, &a.neg);
        let (rho, nu) = (&b.pos, &b.neg);
        // (β, γ) ↦ Σ_σ c^ξ_{σβ} c^ν_{σγ}
        let mut first: BTreeMap<(Partition, Partition), u64> = BTreeMap::new();
        for sigma in enumerate_upto(xi.size().min(nu.size())) {
            if !sigma.fits_in(xi) || !sigma.fits_in(nu) {
                continue;
            }
            for (beta, x) in lr_skew(xi, &sigma) {
                for (gamma, y) in lr_skew(nu, &sigma) {
                    *first.entry((beta.clone(), gamma)).or_insert(0) += x * y;
                }
            }
        }
        // (θ, δ) ↦ Σ_ε c^η_{εθ} c^ρ_{εδ}
        let mut second: BTreeMap<(Partition, Partition), u64> = BTreeMap::new();
        for eps in enumerate_upto(eta.size().min(rho.size())) {
            if !eps.fits_in(eta) || !eps.fits_in(rho) {
                continue;
            }
            for (theta, x) in lr_skew(eta, &eps) {
                for (delta, y) in lr_skew(rho, &eps) {
                    *second.entry((theta.clone(), delta)).or_insert(0) += x * y;
                }
            }
        }
        let mut out = IntTable::new();
        for ((beta, gamma), f) in &first {
            for ((theta, delta), s) in &second {
                let lams = lr_product(beta, delta);
                let mus = lr_product(gamma, theta);
                for (lam, x) in &lams {
                    for (mu, y) in &mus {
                        let c = BigInt::from(f * s * x * y);
                        add_term(&mut out, PartitionPair::new(lam.clone(), mu.clone()), c);
                    }
                }
            }
        }
        out
    })
}

/// The same product computed through the Schur-pair basis.
pub fn composite_product_via_schurpair(a: &PartitionPair, b: &PartitionPair) -> IntTable {
    let x: IntTable = (*composite_to_schurpair(a)).clone();
    let y: IntTable = (*composite_to_schurpair(b)).clone();
    map_linear(&mul_schurpair(&x, &y), schurpair_to_composite)
}

/// Product of two composite-basis combinations.
pub fn mul_composite<C: Coeff>(a: &Lin<C>, b: &Lin<C>) -> Lin<C> {
    let mut out = Lin::new();
    for (ka, va) in a {
        for (kb, vb) in b {
            let prod = va.mul(vb);
            for (k, c) in composite_product(ka, kb).iter() {
                add_term(&mut out, k.clone(), prod.scale_int(c));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Adams operations

/// `Ψ_m(s_λ) = Σ_ρ C^ρ_{λ;m} s_ρ` with `C^ρ_{λ;m} = Σ_μ χ_λ(μ) χ_ρ(mμ) / z_μ`.
pub fn adams_schur(lambda: &Partition, m: usize) -> Arc<BTreeMap<Partition, BigInt>> {
    assert!(m >= 1);
    static MEMO: Memo<(Partition, usize), BTreeMap<Partition, BigInt>> = Memo::new();
    MEMO.get_or(&(lambda.clone(), m), || {
        if m == 1 {
            return BTreeMap::from([(lambda.clone(), BigInt::from(1))]);
        }
        let classes = enumerate(lambda.size());
        let weights: Vec<(Partition, BigRational)> = classes
            .into_iter()
            .filter_map(|mu| {
                let c = chi(lambda, &mu);
                (c != 0).then(|| (mu.scale(m), BigRational::new(BigInt::from(c), mu.z())))
            })
            .collect();
        let mut out = BTreeMap::new();
        for rho in enumerate(m * lambda.size()) {
            let mut acc = <BigRational as Zero>::zero();
            for (mmu, w) in &weights {
                acc += w * BigRational::from_integer(BigInt::from(chi(&rho, mmu)));
            }
            assert!(acc.is_integer(), "Adams coefficient is not an integer");
            if !Zero::is_zero(&acc) {
                out.insert(rho, acc.to_integer());
            }
        }
        out
    })
}

/// `Ψ_m(s_ρ ⊗ s*_ν)` in the Schur-pair basis.
pub fn adams_schurpair(pair: &PartitionPair, m: usize) -> Arc<IntTable> {
    static MEMO: Memo<(PartitionPair, usize), IntTable> = Memo::new();
    MEMO.get_or(&(pair.clone(), m), || {
        let a = adams_schur(&pair.pos, m);
        let b = adams_schur(&pair.neg, m);
        let mut out = IntTable::new();
        for (x, cx) in a.iter() {
            for (y, cy) in b.iter() {
                out.insert(PartitionPair::new(x.clone(), y.clone()), cx * cy);
            }
        }
        out
    })
}

/// `Ψ_m(s_{λ,μ}) = Σ C^{[β,γ]}_{[λ,μ];m} s_{β,γ}`
pub fn adams_composite(pair: &PartitionPair, m: usize) -> Arc<IntTable> {
    static MEMO: Memo<(PartitionPair, usize), IntTable> = Memo::new();
    MEMO.get_or(&(pair.clone(), m), || {
        let sp = map_linear(&*composite_to_schurpair(pair), |k| adams_schurpair(k, m));
        map_linear(&sp, schurpair_to_composite)
    })
}

// ---------------------------------------------------------------------------
// Power sums

/// `s_λ = Σ_μ χ_λ(μ)/z_μ p_μ`
pub fn schur_to_power(lambda: &Partition) -> Arc<BTreeMap<Partition, BigRational>> {
    static MEMO: Memo<Partition, BTreeMap<Partition, BigRational>> = Memo::new();
    MEMO.get_or(lambda, || {
        enumerate(lambda.size())
            .into_iter()
            .filter_map(|mu| {
                let c = chi(lambda, &mu);
                (c != 0).then(|| {
                    let z = mu.z();
                    (mu, BigRational::new(BigInt::from(c), z))
                })
            })
            .collect()
    })
}

/// `p_μ = Σ_λ χ_λ(μ) s_λ`
pub fn power_to_schur(mu: &Partition) -> Arc<BTreeMap<Partition, BigInt>> {
    static MEMO: Memo<Partition, BTreeMap<Partition, BigInt>> = Memo::new();
    MEMO.get_or(mu, || {
        enumerate(mu.size())
            .into_iter()
            .filter_map(|lambda| {
                let c = chi(&lambda, mu);
                (c != 0).then(|| (lambda, BigInt::from(c)))
            })
            .collect()
    })
}

fn schurpair_to_powerpair(pair: &PartitionPair) -> Arc<RatTable> {
    static MEMO: Memo<PartitionPair, RatTable> = Memo::new();
    MEMO.get_or(pair, || {
        let a = schur_to_power(&pair.pos);
        let b = schur_to_power(&pair.neg);
        let mut out = RatTable::new();
        for (x, cx) in a.iter() {
            for (y, cy) in b.iter() {
                out.insert(PartitionPair::new(x.clone(), y.clone()), cx * cy);
            }
        }
        out
    })
}

fn powerpair_to_schurpair(pair: &PartitionPair) -> Arc<IntTable> {
    static MEMO: Memo<PartitionPair, IntTable> = Memo::new();
    MEMO.get_or(pair, || {
        let a = power_to_schur(&pair.pos);
        let b = power_to_schur(&pair.neg);
        let mut out = IntTable::new();
        for (x, cx) in a.iter() {
            for (y, cy) in b.iter() {
                out.insert(PartitionPair::new(x.clone(), y.clone()), cx * cy);
            }
        }
        out
    })
}

// ---------------------------------------------------------------------------
// Determinantal basis

/// An entry of the matrix `M_{λ,μ}` whose determinant is `Q_{λ,μ}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HEntry {
    Zero,
    One,
    H(usize),
    HStar(usize),
}

impl HEntry {
    fn h(k: i64) -> HEntry {
        match k {
            k if k < 0 => HEntry::Zero,
            0 => HEntry::One,
            k => HEntry::H(k as usize),
        }
    }

    fn h_star(k: i64) -> HEntry {
        match k {
            k if k < 0 => HEntry::Zero,
            0 => HEntry::One,
            k => HEntry::HStar(k as usize),
        }
    }

    fn as_schurpair(self) -> IntTable {
        let key = match self {
            HEntry::Zero => return IntTable::new(),
            HEntry::One => PartitionPair::empty(),
            HEntry::H(k) => PartitionPair::new(Partition::row(k), Partition::empty()),
            HEntry::HStar(k) => PartitionPair::new(Partition::empty(), Partition::row(k)),
        };
        IntTable::from([(key, BigInt::from(1))])
    }
}

impl fmt::Display for HEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HEntry::Zero => write!(f, "0"),
            HEntry::One => write!(f, "1"),
            HEntry::H(k) => write!(f, "h_{k}"),
            HEntry::HStar(k) => write!(f, "h*_{k}"),
        }
    }
}

/// The `(l+r) × (l+r)` matrix `M_{λ,μ}`: `r = l(μ)` rows of `h*` carrying
/// `μ_r, …, μ_1` on the diagonal, then `l = l(λ)` rows of `h` carrying
/// `λ_1, …, λ_l`.
pub fn q_matrix(lambda: &Partition, mu: &Partition) -> Vec<Vec<HEntry>> {
    let (l, r) = (lambda.len() as i64, mu.len() as i64);
    let n = (l + r) as usize;
    let mut rows = Vec::with_capacity(n);
    for i in 1..=r {
        let d = mu.part((r + 1 - i) as usize) as i64;
        rows.push((1..=n as i64).map(|j| HEntry::h_star(d + (i - 1) - (j - 1))).collect());
    }
    for i in 1..=l {
        let d = lambda.part(i as usize) as i64;
        rows.push((1..=n as i64).map(|j| HEntry::h(d - r - (i - 1) + (j - 1))).collect());
    }
    rows
}

/// `det M_{λ,μ}` expanded into the composite basis; equals `s_{λ,μ}`.
pub fn q_determinant(lambda: &Partition, mu: &Partition) -> IntTable {
    let m = q_matrix(lambda, mu);
    let mut memo: std::collections::HashMap<u64, IntTable> = std::collections::HashMap::new();
    fn det(
        row: usize,
        used: u64,
        m: &[Vec<HEntry>],
        memo: &mut std::collections::HashMap<u64, IntTable>,
    ) -> IntTable {
        let n = m.len();
        if row == n {
            return IntTable::from([(PartitionPair::empty(), BigInt::from(1))]);
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut out = IntTable::new();
        let mut pos = 0;
        for col in 0..n {
            if used & (1 << col) != 0 {
                continue;
            }
            let e = m[row][col];
            if e != HEntry::Zero {
                let minor = det(row + 1, used | (1 << col), m, memo);
                if !minor.is_empty() {
                    let mut term = mul_schurpair(&e.as_schurpair(), &minor);
                    if pos % 2 == 1 {
                        term = lin_scale(&term, &BigInt::from(-1));
                    }
                    out = lin_add(&out, &term);
                }
            }
            pos += 1;
        }
        memo.insert(used, out.clone());
        out
    }
    let sp = det(0, 0, &m, &mut memo);
    map_linear(&sp, schurpair_to_composite)
}

// ---------------------------------------------------------------------------
// R_ν

/// `R_ν = Σ_A χ_A(ν) Σ_{λ,μ} c^A_{λμ} s_{λ,μ}`, evaluated directly from the
/// character sum and converted to power-sum pairs.
pub fn r_nu_character_sum(nu: &Partition) -> RatTable {
    let n = nu.size();
    let mut comp = IntTable::new();
    for a in enumerate(n) {
        let x = chi(&a, nu);
        if x == 0 {
            continue;
        }
        for k in 0..=n {
            for lambda in enumerate(k) {
                for mu in enumerate(n - k) {
                    let c = lr_coeff(&a, &lambda, &mu);
                    if c > 0 {
                        add_term(
                            &mut comp,
                            PartitionPair::new(lambda.clone(), mu),
                            BigInt::from(x * c as i64),
                        );
                    }
                }
            }
        }
    }
    let sp = map_linear(&comp, composite_to_schurpair);
    let rat: RatTable = sp
        .into_iter()
        .map(|(k, v)| (k, BigRational::from_integer(v)))
        .collect();
    map_linear_rat(&rat, schurpair_to_powerpair)
}

/// `R_ν` from the splitting formula: a sum over `η ∪ τ ∪ τ ∪ π = ν` of
/// `(-1)^{l(τ)} z_ν / (z_η z_τ z_π) P_η P*_π`. The `τ = ∅` terms are the
/// plain `Σ_{B∪C=ν}` part; `τ ≠ ∅` gives the correction.
pub fn r_nu(nu: &Partition) -> RatTable {
    let mut out = RatTable::new();
    let zn = nu.z();
    // τ ranges over sub-multisets whose doubled multiplicities fit in ν.
    let halves: Vec<(usize, usize)> = nu
        .multiplicities()
        .into_iter()
        .map(|(j, m)| (j, m / 2))
        .collect();
    let mut taus = vec![Partition::empty()];
    for (j, h) in halves {
        let mut next = Vec::new();
        for t in &taus {
            for k in 0..=h {
                next.push(t.union(&Partition::from_unsorted(vec![j; k])));
            }
        }
        taus = next;
    }
    for tau in taus {
        let rest = nu.remove_parts(&tau.union(&tau)).expect("τ∪τ fits in ν");
        let sign = if tau.len() % 2 == 0 { 1 } else { -1 };
        for s in splittings(&rest, SplitFlags::NONE) {
            let c = BigRational::new(BigInt::from(sign) * &zn, s.left.z() * tau.z() * s.right.z());
            add_term(&mut out, PartitionPair::new(s.left, s.right), c);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// SymFunc

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Basis {
    CompositeSchur,
    SchurPair,
    PowerPair,
}

/// A linear combination in one of the three bases with coefficients in the
/// rational-function ring.
#[derive(Clone, Debug, PartialEq)]
pub struct SymFunc {
    pub basis: Basis,
    pub terms: Lin<RationalQT>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc {
            basis,
            terms: Lin::new(),
        }
    }

    pub fn one(basis: Basis) -> Self {
        SymFunc::element(basis, PartitionPair::empty())
    }

    pub fn element(basis: Basis, pair: PartitionPair) -> Self {
        SymFunc {
            basis,
            terms: Lin::from([(pair, RationalQT::one())]),
        }
    }

    pub fn from_ints(basis: Basis, t: &IntTable) -> Self {
        SymFunc {
            basis,
            terms: int_table_of(t),
        }
    }

    pub fn from_ratios(basis: Basis, t: &RatTable) -> Self {
        let mut terms = Lin::new();
        for (k, v) in t {
            add_term(&mut terms, k.clone(), RationalQT::from_ratio(v));
        }
        SymFunc { basis, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_basis(&self, target: Basis) -> SymFunc {
        use Basis::*;
        let terms = match (self.basis, target) {
            (a, b) if a == b => self.terms.clone(),
            (CompositeSchur, SchurPair) => map_linear(&self.terms, composite_to_schurpair),
            (SchurPair, CompositeSchur) => map_linear(&self.terms, schurpair_to_composite),
            (SchurPair, PowerPair) => map_linear_rat(&self.terms, schurpair_to_powerpair),
            (PowerPair, SchurPair) => map_linear(&self.terms, powerpair_to_schurpair),
            (_, b) => return self.to_basis(SchurPair).to_basis(b),
        };
        SymFunc {
            basis: target,
            terms,
        }
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        let o = other.to_basis(self.basis);
        SymFunc {
            basis: self.basis,
            terms: lin_add(&self.terms, &o.terms),
        }
    }

    pub fn scale(&self, c: &RationalQT) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: lin_scale(&self.terms, c),
        }
    }

    /// Product, returned in `self`'s basis.
    pub fn mul(&self, other: &SymFunc) -> SymFunc {
        let terms = match (self.basis, other.basis) {
            (Basis::CompositeSchur, Basis::CompositeSchur) => mul_composite(&self.terms, &other.terms),
            _ => {
                let a = self.to_basis(Basis::SchurPair);
                let b = other.to_basis(Basis::SchurPair);
                let p = SymFunc {
                    basis: Basis::SchurPair,
                    terms: mul_schurpair(&a.terms, &b.terms),
                };
                return p.to_basis(self.basis);
            }
        };
        SymFunc {
            basis: self.basis,
            terms,
        }
    }

    /// `Ψ_m`, returned in `self`'s basis.
    pub fn adams(&self, m: usize) -> SymFunc {
        match self.basis {
            Basis::CompositeSchur => SymFunc {
                basis: self.basis,
                terms: map_linear(&self.terms, |k| adams_composite(k, m)),
            },
            Basis::SchurPair => SymFunc {
                basis: self.basis,
                terms: map_linear(&self.terms, |k| adams_schurpair(k, m)),
            },
            Basis::PowerPair => {
                let mut terms = Lin::new();
                for (k, v) in &self.terms {
                    add_term(&mut terms, PartitionPair::new(k.pos.scale(m), k.neg.scale(m)), v.clone());
                }
                SymFunc {
                    basis: self.basis,
                    terms,
                }
            }
        }
    }
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<(&PartitionPair, &RationalQT)> = self.terms.iter().collect();
        let mut st = s.serialize_struct("SymFunc", 2)?;
        st.serialize_field("basis", &self.basis)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// The decoration `P_μ = Σ_λ χ_λ(μ) Q_{λ,∅}` (or `P*_μ` with the labels
/// swapped) in the composite basis.
pub fn power_decoration(mu: &Partition, star: bool) -> IntTable {
    power_to_schur(mu)
        .iter()
        .map(|(lambda, c)| {
            let pair = if star {
                PartitionPair::new(Partition::empty(), lambda.clone())
            } else {
                PartitionPair::new(lambda.clone(), Partition::empty())
            };
            (pair, c.clone())
        })
        .collect()
}

/// `R_ν` in the composite basis with integer coefficients.
pub fn r_nu_composite(nu: &Partition) -> IntTable {
    let sf = SymFunc::from_ratios(Basis::PowerPair, &r_nu(nu)).to_basis(Basis::CompositeSchur);
    sf.terms
        .into_iter()
        .map(|(k, v)| {
            let c = v.to_laurent().ok().and_then(|l| l.as_constant()).expect("integral R_ν coefficient");
            (k, c)
        })
        .collect()
}

/// Whether every coefficient is a nonnegative integer.
pub fn is_nonnegative(t: &IntTable) -> bool {
    t.values().all(|v| !v.is_negative())
}

/// Greatest common divisor of a table's coefficients.
pub fn table_content(t: &IntTable) -> BigInt {
    t.values().fold(BigInt::from(0), |g, v| g.gcd(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{p, pp};

    fn table(entries: &[(PartitionPair, i64)]) -> IntTable {
        entries.iter().map(|(k, v)| (k.clone(), BigInt::from(*v))).collect()
    }

    #[test]
    fn composite_expansions() {
        assert_eq!(
            *composite_to_schurpair(&pp(&[1], &[1])),
            table(&[(pp(&[1], &[1]), 1), (pp(&[], &[]), -1)])
        );
        assert_eq!(*composite_to_schurpair(&pp(&[2, 1], &[])), table(&[(pp(&[2, 1], &[]), 1)]));
        assert_eq!(
            *composite_to_schurpair(&pp(&[2], &[1])),
            table(&[(pp(&[2], &[1]), 1), (pp(&[1], &[]), -1)])
        );
        assert_eq!(
            *schurpair_to_composite(&pp(&[1], &[1])),
            table(&[(pp(&[1], &[1]), 1), (pp(&[], &[]), 1)])
        );
    }

    #[test]
    fn products() {
        let a = pp(&[1], &[]);
        let b = pp(&[], &[1]);
        assert_eq!(*composite_product(&a, &b), table(&[(pp(&[1], &[1]), 1), (pp(&[], &[]), 1)]));
        assert_eq!(
            *composite_product(&pp(&[1], &[1]), &PartitionPair::empty()),
            table(&[(pp(&[1], &[1]), 1)])
        );
        assert_eq!(
            *composite_product(&pp(&[1], &[]), &pp(&[1], &[])),
            table(&[(pp(&[2], &[]), 1), (pp(&[1, 1], &[]), 1)])
        );
        assert_eq!(*composite_product(&pp(&[2], &[1]), &pp(&[1], &[1])), composite_product_via_schurpair(&pp(&[2], &[1]), &pp(&[1], &[1])));
    }

    #[test]
    fn adams_small() {
        let a = adams_schur(&p(&[1]), 2);
        assert_eq!(*a, BTreeMap::from([(p(&[2]), BigInt::from(1)), (p(&[1, 1]), BigInt::from(-1))]));
        let a = adams_schur(&p(&[1]), 3);
        assert_eq!(a.len(), 3);
        assert_eq!(a[&p(&[2, 1])], BigInt::from(-1));
        assert_eq!(a[&p(&[1, 1, 1])], BigInt::from(1));
        assert_eq!(*adams_schur(&p(&[2, 1]), 1), BTreeMap::from([(p(&[2, 1]), BigInt::from(1))]));
        assert_eq!(
            *adams_composite(&pp(&[1], &[]), 2),
            table(&[(pp(&[2], &[]), 1), (pp(&[1, 1], &[]), -1)])
        );
    }

    #[test]
    fn determinant_matrix_layout() {
        use HEntry::*;
        let m = q_matrix(&p(&[4, 2, 2]), &p(&[3, 2]));
        assert_eq!(
            m,
            vec![
                vec![HStar(2), HStar(1), One, Zero, Zero],
                vec![HStar(4), HStar(3), HStar(2), HStar(1), One],
                vec![H(2), H(3), H(4), H(5), H(6)],
                vec![Zero, One, H(1), H(2), H(3)],
                vec![Zero, Zero, One, H(1), H(2)],
            ]
        );
        assert_eq!(q_determinant(&p(&[1]), &p(&[])), table(&[(pp(&[1], &[]), 1)]));
        assert_eq!(q_determinant(&p(&[1]), &p(&[1])), table(&[(pp(&[1], &[1]), 1)]));
        assert_eq!(q_determinant(&p(&[2, 1]), &p(&[2])), table(&[(pp(&[2, 1], &[2]), 1)]));
    }

    #[test]
    fn r_nu_small() {
        let r = |e: &[(PartitionPair, i64)]| -> RatTable {
            e.iter().map(|(k, v)| (k.clone(), BigRational::from_integer(BigInt::from(*v)))).collect()
        };
        assert_eq!(r_nu(&p(&[3])), r(&[(pp(&[3], &[]), 1), (pp(&[], &[3]), 1)]));
        let expected = r(&[
            (pp(&[1, 1], &[]), 1),
            (pp(&[1], &[1]), 2),
            (pp(&[], &[1, 1]), 1),
            (pp(&[], &[]), -2),
        ]);
        assert_eq!(r_nu(&p(&[1, 1])), expected);
        assert_eq!(r_nu_character_sum(&p(&[1, 1])), expected);
        assert_eq!(r_nu(&Partition::empty()), r(&[(pp(&[], &[]), 1)]));
    }

    #[test]
    fn basis_round_trip() {
        let f = SymFunc::element(Basis::CompositeSchur, pp(&[2, 1], &[1]));
        for b in [Basis::SchurPair, Basis::PowerPair] {
            assert_eq!(f.to_basis(b).to_basis(Basis::CompositeSchur), f);
        }
    }
}
