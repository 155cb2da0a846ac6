//! Truncated power series in `ħ` under `q = e^ħ`, used for `q → 1` limits.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::{Exp, LaurentQT};
use super::rational::RationalQT;
use crate::error::{Error, Result};

pub const DEFAULT_ORDER: usize = 8;
pub const MAX_ORDER: usize = 64;

/// Laurent polynomial in `t` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TPoly {
    terms: BTreeMap<Exp, BigRational>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly::default()
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = TPoly::zero();
        p.add_term(Exp::zero(), c);
        p
    }

    pub fn add_term(&mut self, e: Exp, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &BigRational)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &TPoly) -> TPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TPoly) -> TPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &TPoly) -> TPoly {
        let mut out = TPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }

    /// Exact quotient in `Q[t^±]`, or [`Error::NotDivisible`].
    pub fn exact_div(&self, b: &TPoly) -> Result<TPoly> {
        let (&top_b, cb) = b.terms.iter().next_back().ok_or(Error::DivisionByZero)?;
        let low_b = *b.terms.keys().next().unwrap();
        let mut rem = self.clone();
        let mut quo = TPoly::zero();
        let floor = match rem.terms.keys().next() {
            None => return Ok(quo),
            Some(low) => low - low_b,
        };
        while let Some((&top, c)) = rem.terms.iter().next_back() {
            let e = top - top_b;
            if e < floor {
                return Err(Error::NotDivisible);
            }
            let k = c / cb;
            let mut step = TPoly::zero();
            step.add_term(e, k.clone());
            rem = rem.sub(&step.mul(b));
            quo.add_term(e, k);
        }
        Ok(quo)
    }

    /// The integer-coefficient Laurent polynomial in `t`, if this is one.
    pub fn to_laurent(&self) -> Option<LaurentQT> {
        let mut out = LaurentQT::zero();
        for (e, c) in &self.terms {
            if !c.is_integer() {
                return None;
            }
            out.add_term(super::laurent::Monomial::new(0, *e), c.to_integer());
        }
        Some(out)
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                if e.is_zero() {
                    format!("{c}")
                } else {
                    format!("({c})*t^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `ħ^valuation · (coeffs[0] + coeffs[1] ħ + …)`, truncated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HSeries {
    pub valuation: i64,
    pub coeffs: Vec<TPoly>,
}

impl HSeries {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(TPoly::is_zero)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn leading(&self) -> &TPoly {
        &self.coeffs[0]
    }

    pub fn mul(&self, other: &HSeries) -> HSeries {
        let n = self.order().min(other.order());
        let coeffs = (0..n)
            .map(|k| {
                (0..=k).fold(TPoly::zero(), |acc, i| {
                    acc.add(&self.coeffs[i].mul(&other.coeffs[k - i]))
                })
            })
            .collect();
        HSeries {
            valuation: self.valuation + other.valuation,
            coeffs,
        }
    }

    /// The first `terms` coefficients of `self / other`. Fails with
    /// [`Error::NotDivisible`] if a coefficient is not a Laurent polynomial
    /// in `t`.
    pub fn div(&self, other: &HSeries, terms: usize) -> Result<HSeries> {
        if other.is_zero() || other.coeffs[0].is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = terms.min(self.order()).min(other.order());
        let mut coeffs: Vec<TPoly> = Vec::with_capacity(n);
        for k in 0..n {
            let mut r = self.coeffs[k].clone();
            for i in 0..k {
                r = r.sub(&coeffs[i].mul(&other.coeffs[k - i]));
            }
            coeffs.push(r.exact_div(&other.coeffs[0])?);
        }
        Ok(HSeries {
            valuation: self.valuation - other.valuation,
            coeffs,
        })
    }
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Coefficient of `ħ^k` in `p(e^ħ, t)`.
fn laurent_coeff(p: &LaurentQT, k: usize) -> TPoly {
    let kf = BigRational::from_integer(factorial(k));
    let mut out = TPoly::zero();
    for (m, c) in p.terms() {
        let a = BigRational::new(BigInt::from(*m.q.numer()), BigInt::from(*m.q.denom()));
        let mut ak = BigRational::one();
        for _ in 0..k {
            ak *= &a;
        }
        out.add_term(m.t, BigRational::from_integer(c.clone()) * ak / &kf);
    }
    out
}

/// Expansion of a Laurent polynomial: the valuation is searched among the
/// first `order` coefficients and `order` coefficients are returned from there.
pub fn laurent_expand(p: &LaurentQT, order: usize) -> Result<HSeries> {
    if p.is_zero() {
        return Ok(HSeries {
            valuation: 0,
            coeffs: vec![TPoly::zero(); order],
        });
    }
    let v = (0..order)
        .find(|&k| !laurent_coeff(p, k).is_zero())
        .ok_or(Error::TruncationInsufficient(order))?;
    Ok(HSeries {
        valuation: v as i64,
        coeffs: (v..v + order).map(|k| laurent_coeff(p, k)).collect(),
    })
}

/// Expansion of `f` under `q = e^ħ` with `order` coefficients past the valuation.
pub fn hseries_expand(f: &RationalQT, order: usize) -> Result<HSeries> {
    let num = laurent_expand(&f.num(), order)?;
    if f.is_laurent() {
        return Ok(num);
    }
    let den = laurent_expand(&f.den(), order)?;
    let mut out = HSeries {
        valuation: num.valuation - den.valuation,
        coeffs: Vec::with_capacity(order),
    };
    let lead = den.coeffs[0].clone();
    for k in 0..order {
        let mut r = num.coeffs[k].clone();
        for i in 0..k {
            r = r.sub(&out.coeffs[i].mul(&den.coeffs[k - i]));
        }
        let q = r.exact_div(&lead)?;
        out.coeffs.push(q);
    }
    Ok(out)
}

/// [`hseries_expand`] starting at [`DEFAULT_ORDER`] and doubling on
/// [`Error::TruncationInsufficient`] up to [`MAX_ORDER`].
pub fn hseries_expand_auto(f: &RationalQT) -> Result<HSeries> {
    let mut order = DEFAULT_ORDER;
    loop {
        match hseries_expand(f, order) {
            Err(Error::TruncationInsufficient(_)) if order < MAX_ORDER => order *= 2,
            other => return other,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn bracket_expansion() {
        let s = hseries_expand(&RationalQT::from(LaurentQT::z()), 3).unwrap();
        assert_eq!(s.valuation, 1);
        assert_eq!(s.coeffs[0], TPoly::constant(r(2, 1)));
        assert!(s.coeffs[1].is_zero());
        assert_eq!(s.coeffs[2], TPoly::constant(r(1, 3)));
    }

    #[test]
    fn unknot_expansion() {
        let f = RationalQT::new(LaurentQT::t_bracket(1), LaurentQT::z()).unwrap();
        let s = hseries_expand(&f, 2).unwrap();
        assert_eq!(s.valuation, -1);
        let mut lead = TPoly::zero();
        lead.add_term(Exp::from(1), r(1, 2));
        lead.add_term(Exp::from(-1), r(-1, 2));
        assert_eq!(s.coeffs[0], lead);
    }

    #[test]
    fn constant_expansion() {
        let s = hseries_expand(&RationalQT::from(LaurentQT::t_pow(2)), 4).unwrap();
        assert_eq!(s.valuation, 0);
        assert_eq!(s.coeffs.len(), 4);
        assert!(s.coeffs[1..].iter().all(TPoly::is_zero));
    }

    #[test]
    fn deep_valuation_needs_more_terms() {
        let f = RationalQT::from(LaurentQT::z().pow(10));
        assert_eq!(hseries_expand(&f, 8), Err(Error::TruncationInsufficient(8)));
        assert_eq!(hseries_expand_auto(&f).unwrap().valuation, 10);
    }

    #[test]
    fn series_division() {
        let a = hseries_expand(&RationalQT::from(LaurentQT::q_bracket(2)), 4).unwrap();
        let b = hseries_expand(&RationalQT::from(LaurentQT::z()), 4).unwrap();
        let c = a.div(&b, 3).unwrap();
        // [2]/[1] = q + q^{-1} = 2 + ħ² + …
        assert_eq!(c.valuation, 0);
        assert_eq!(c.coeffs[0], TPoly::constant(r(2, 1)));
        assert_eq!(c.coeffs[2], TPoly::constant(r(1, 1)));
    }
}
