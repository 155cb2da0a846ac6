//! Rational functions in `q`, `t` whose denominators are, in practice,
//! products of `[k] = q^k - q^{-k}` and integers.
//!
//! The denominator is kept factored as `scalar · Π Φ_d(q)^e · rest`. Sums
//! use the exact lcm of the cyclotomic parts, and every operation cancels
//! whatever cyclotomic factors divide the numerator. No multivariate gcd is
//! ever taken; anything that is not cyclotomic stays in `rest` and is only
//! cancelled when it divides the numerator outright.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::cyclotomic::{divisors, phi, totient};
use super::laurent::{LaurentQT, Monomial};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
struct Denominator {
    scalar: BigInt,
    cyclo: BTreeMap<u32, u32>,
    rest: LaurentQT,
}

impl Denominator {
    fn one() -> Self {
        Denominator {
            scalar: BigInt::one(),
            cyclo: BTreeMap::new(),
            rest: LaurentQT::one(),
        }
    }

    fn is_one(&self) -> bool {
        self.scalar.is_one() && self.cyclo.is_empty() && self.rest.is_one()
    }

    fn expand(&self) -> LaurentQT {
        let mut p = LaurentQT::constant(self.scalar.clone());
        for (d, e) in &self.cyclo {
            p = &p * &phi(*d).pow(*e);
        }
        &p * &self.rest
    }

    fn mul(&self, other: &Denominator) -> Denominator {
        let mut cyclo = self.cyclo.clone();
        for (d, e) in &other.cyclo {
            *cyclo.entry(*d).or_insert(0) += e;
        }
        Denominator {
            scalar: &self.scalar * &other.scalar,
            cyclo,
            rest: &self.rest * &other.rest,
        }
    }

    /// Common multiple of two denominators together with the cofactors
    /// `l/self` and `l/other`.
    fn lcm(&self, other: &Denominator) -> (Denominator, LaurentQT, LaurentQT) {
        let scalar = self.scalar.lcm(&other.scalar);
        let mut fa = LaurentQT::constant(&scalar / &self.scalar);
        let mut fb = LaurentQT::constant(&scalar / &other.scalar);
        let mut cyclo = BTreeMap::new();
        let keys: std::collections::BTreeSet<u32> =
            self.cyclo.keys().chain(other.cyclo.keys()).copied().collect();
        for d in keys {
            let ea = self.cyclo.get(&d).copied().unwrap_or(0);
            let eb = other.cyclo.get(&d).copied().unwrap_or(0);
            let e = ea.max(eb);
            cyclo.insert(d, e);
            if e > ea {
                fa = &fa * &phi(d).pow(e - ea);
            }
            if e > eb {
                fb = &fb * &phi(d).pow(e - eb);
            }
        }
        let rest = if self.rest == other.rest {
            self.rest.clone()
        } else if self.rest.is_one() {
            fa = &fa * &other.rest;
            other.rest.clone()
        } else if other.rest.is_one() {
            fb = &fb * &self.rest;
            self.rest.clone()
        } else {
            fa = &fa * &other.rest;
            fb = &fb * &self.rest;
            &self.rest * &other.rest
        };
        (Denominator { scalar, cyclo, rest }, fa, fb)
    }

    /// Factors a nonzero Laurent polynomial as `unit · D` where `unit` is a
    /// signed monomial. Returns `(D, unit)`.
    fn factor(p: &LaurentQT) -> (Denominator, LaurentQT) {
        debug_assert!(!p.is_zero());
        if let Some((c, m)) = p.as_monomial() {
            let sign = if c.is_negative() { -1 } else { 1 };
            let den = Denominator {
                scalar: c.abs(),
                ..Denominator::one()
            };
            return (den, LaurentQT::term(sign, *m));
        }
        let mut content = p.content();
        if p.leading().unwrap().1.is_negative() {
            content = -content;
        }
        let mut rest = p.div_scalar_exact(&content).expect("content divides");
        let mut cyclo = BTreeMap::new();
        let span = rest
            .q_range()
            .map(|(lo, hi)| (hi - lo).ceil().to_integer())
            .unwrap_or(0);
        if span > 0 {
            let dmax = (4 * span + 4).min(400) as u32;
            for d in 1..=dmax {
                if totient(d) as i64 > span {
                    continue;
                }
                let dense = dense_phi(d);
                while let Some(next) = rest.exact_div_q_monic(&dense) {
                    rest = next;
                    *cyclo.entry(d).or_insert(0) += 1;
                }
            }
        }
        let mut unit = LaurentQT::constant(if content.is_negative() { -1 } else { 1 });
        if let Some((c, m)) = rest.as_monomial() {
            unit = &unit * &LaurentQT::term(c.clone(), *m);
            rest = LaurentQT::one();
        }
        (
            Denominator {
                scalar: content.abs(),
                cyclo,
                rest,
            },
            unit,
        )
    }
}

fn dense_phi(d: u32) -> Vec<BigInt> {
    let p = phi(d);
    let deg = p.leading().map(|(m, _)| m.q.to_integer()).unwrap_or(0) as usize;
    let mut dense = vec![BigInt::zero(); deg + 1];
    for (m, c) in p.terms() {
        dense[m.q.to_integer() as usize] = c.clone();
    }
    dense
}

/// An element of the coefficient ring with `[k]` admitted as denominators.
#[derive(Clone, Debug)]
pub struct RationalQT {
    num: LaurentQT,
    den: Denominator,
}

impl RationalQT {
    pub fn zero() -> Self {
        RationalQT::from(LaurentQT::zero())
    }

    pub fn one() -> Self {
        RationalQT::from(LaurentQT::one())
    }

    pub fn from_int(c: i64) -> Self {
        RationalQT::from(LaurentQT::constant(c))
    }

    pub fn from_ratio(r: &BigRational) -> Self {
        let mut out = RationalQT {
            num: LaurentQT::constant(r.numer().clone()),
            den: Denominator {
                scalar: r.denom().clone(),
                ..Denominator::one()
            },
        };
        out.fix_sign();
        out
    }

    /// `num / den`; fails with [`Error::DivisionByZero`] when `den = 0`.
    pub fn new(num: LaurentQT, den: LaurentQT) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (den, unit) = Denominator::factor(&den);
        let num = num.exact_div(&unit).expect("units divide everything");
        let mut out = RationalQT { num, den };
        out.reduce();
        Ok(out)
    }

    /// `1 / [k]`
    pub fn inv_q_bracket(k: i64) -> Self {
        assert!(k != 0);
        let kk = k.unsigned_abs() as u32;
        // [k] = q^{-k} (q^{2k} - 1) = q^{-k} Π_{d | 2k} Φ_d(q)
        let cyclo = divisors(2 * kk).into_iter().map(|d| (d, 1)).collect();
        let sign = if k < 0 { -1 } else { 1 };
        RationalQT {
            num: LaurentQT::monomial(sign, kk as i64, 0),
            den: Denominator {
                cyclo,
                ..Denominator::one()
            },
        }
    }

    pub fn numerator(&self) -> &LaurentQT {
        &self.num
    }

    /// The numerator in the stored (not necessarily lowest) form.
    pub fn num(&self) -> LaurentQT {
        self.num.clone()
    }

    /// The denominator, expanded.
    pub fn den(&self) -> LaurentQT {
        self.den.expand()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// The Laurent polynomial this function equals, or [`Error::NotDivisible`].
    pub fn to_laurent(&self) -> Result<LaurentQT> {
        if self.den.is_one() {
            return Ok(self.num.clone());
        }
        self.num.exact_div(&self.den.expand())
    }

    pub fn has_integer_exponents(&self) -> bool {
        self.num.has_integer_exponents() && self.den.rest.has_integer_exponents()
    }

    pub fn assert_integral(&self) -> Result<()> {
        self.num.assert_integral()?;
        self.den.rest.assert_integral()
    }

    fn fix_sign(&mut self) {
        if self.den.scalar.is_negative() {
            self.den.scalar = -self.den.scalar.clone();
            self.num = -&self.num;
        }
    }

    fn reduce(&mut self) {
        self.fix_sign();
        if self.num.is_zero() {
            self.den = Denominator::one();
            return;
        }
        let keys: Vec<u32> = self.den.cyclo.keys().copied().collect();
        for d in keys {
            let dense = dense_phi(d);
            let e = self.den.cyclo.get_mut(&d).unwrap();
            while *e > 0 {
                match self.num.exact_div_q_monic(&dense) {
                    Some(next) => {
                        self.num = next;
                        *e -= 1;
                    }
                    None => break,
                }
            }
            if *e == 0 {
                self.den.cyclo.remove(&d);
            }
        }
        if !self.den.rest.is_one() {
            if let Ok(next) = self.num.exact_div(&self.den.rest) {
                self.num = next;
                self.den.rest = LaurentQT::one();
            }
        }
        if !self.den.scalar.is_one() {
            let g = self.num.content().gcd(&self.den.scalar);
            if !g.is_one() {
                self.num = self.num.div_scalar_exact(&g).expect("gcd divides");
                self.den.scalar = &self.den.scalar / &g;
            }
        }
    }

    pub fn inv(&self) -> Result<RationalQT> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (den, unit) = Denominator::factor(&self.num);
        let num = self.den.expand().exact_div(&unit).expect("units divide everything");
        let mut out = RationalQT { num, den };
        out.reduce();
        Ok(out)
    }

    pub fn div(&self, other: &RationalQT) -> Result<RationalQT> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, c: &BigInt) -> RationalQT {
        let mut out = RationalQT {
            num: self.num.scale(c),
            den: self.den.clone(),
        };
        out.reduce();
        out
    }

    pub fn mul_laurent(&self, p: &LaurentQT) -> RationalQT {
        let mut out = RationalQT {
            num: &self.num * p,
            den: self.den.clone(),
        };
        out.reduce();
        out
    }

    pub fn mul_monomial(&self, m: Monomial) -> RationalQT {
        RationalQT {
            num: self.num.mul_monomial(m),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> RationalQT {
        (0..e).fold(RationalQT::one(), |acc, _| &acc * self)
    }

    fn map_both(&self, f: impl Fn(&LaurentQT) -> Result<LaurentQT>) -> Result<RationalQT> {
        RationalQT::new(f(&self.num)?, f(&self.den.expand())?)
    }

    /// `q ↦ q^d, t ↦ t^d`
    pub fn substitute_power(&self, d: i64) -> RationalQT {
        if d == 1 {
            return self.clone();
        }
        self.map_both(|p| Ok(p.substitute_power(d)))
            .expect("substitution keeps denominators nonzero")
    }

    /// Mirror `q ↦ q^{-1}, t ↦ t^{-1}`.
    pub fn bar(&self) -> RationalQT {
        self.map_both(|p| Ok(p.bar())).expect("bar keeps denominators nonzero")
    }

    /// `q ↦ -q^{-1}`
    pub fn conj_q(&self) -> Result<RationalQT> {
        self.map_both(|p| p.conj_q())
    }
}

impl RationalQT {
    /// Sum of many terms over one common denominator, reduced once.
    pub fn sum_many<'a>(terms: impl IntoIterator<Item = &'a RationalQT>) -> RationalQT {
        let terms: Vec<&RationalQT> = terms.into_iter().filter(|x| !x.is_zero()).collect();
        match terms.len() {
            0 => return RationalQT::zero(),
            1 => return terms[0].clone(),
            _ => {}
        }
        let mut common = terms[0].den.clone();
        for x in &terms[1..] {
            if x.den != common {
                common = common.lcm(&x.den).0;
            }
        }
        let mut num = LaurentQT::zero();
        for x in terms {
            if x.den == common {
                num = &num + &x.num;
                continue;
            }
            let mut cof = LaurentQT::constant(&common.scalar / &x.den.scalar);
            for (d, e) in &common.cyclo {
                let have = x.den.cyclo.get(d).copied().unwrap_or(0);
                if *e > have {
                    cof = &cof * &phi(*d).pow(e - have);
                }
            }
            if x.den.rest != common.rest {
                let r = common.rest.exact_div(&x.den.rest).expect("rest divides the lcm");
                cof = &cof * &r;
            }
            num = &num + &(&x.num * &cof);
        }
        let mut out = RationalQT { num, den: common };
        out.reduce();
        out
    }
}

impl From<LaurentQT> for RationalQT {
    fn from(num: LaurentQT) -> Self {
        RationalQT {
            num,
            den: Denominator::one(),
        }
    }
}

impl From<i64> for RationalQT {
    fn from(c: i64) -> Self {
        RationalQT::from_int(c)
    }
}

impl<'a> Add<&'a RationalQT> for &'a RationalQT {
    type Output = RationalQT;
    fn add(self, rhs: &'a RationalQT) -> RationalQT {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            let mut out = RationalQT {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            };
            out.reduce();
            return out;
        }
        let (den, fa, fb) = self.den.lcm(&rhs.den);
        let mut out = RationalQT {
            num: &(&self.num * &fa) + &(&rhs.num * &fb),
            den,
        };
        out.reduce();
        out
    }
}

impl<'a> Sub<&'a RationalQT> for &'a RationalQT {
    type Output = RationalQT;
    fn sub(self, rhs: &'a RationalQT) -> RationalQT {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalQT> for &'a RationalQT {
    type Output = RationalQT;
    fn mul(self, rhs: &'a RationalQT) -> RationalQT {
        if self.is_zero() || rhs.is_zero() {
            return RationalQT::zero();
        }
        let mut out = RationalQT {
            num: &self.num * &rhs.num,
            den: self.den.mul(&rhs.den),
        };
        out.reduce();
        out
    }
}

impl Neg for &RationalQT {
    type Output = RationalQT;
    fn neg(self) -> RationalQT {
        RationalQT {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalQT {
    type Output = RationalQT;
    fn neg(self) -> RationalQT {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<RationalQT> for RationalQT {
            type Output = RationalQT;
            fn $f(self, rhs: RationalQT) -> RationalQT {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a RationalQT> for RationalQT {
            type Output = RationalQT;
            fn $f(self, rhs: &'a RationalQT) -> RationalQT {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for RationalQT {
    fn sum<I: Iterator<Item = RationalQT>>(iter: I) -> Self {
        let v: Vec<RationalQT> = iter.collect();
        RationalQT::sum_many(&v)
    }
}

/// Cross-multiplication over the common denominator.
impl PartialEq for RationalQT {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        let (_, fa, fb) = self.den.lcm(&other.den);
        &self.num * &fa == &other.num * &fb
    }
}

impl Eq for RationalQT {}

impl PartialEq<LaurentQT> for RationalQT {
    fn eq(&self, other: &LaurentQT) -> bool {
        *self == RationalQT::from(other.clone())
    }
}

impl fmt::Display for RationalQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den.expand())
        }
    }
}

impl Serialize for RationalQT {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RationalQT", 2)?;
        st.serialize_field("num", &self.num)?;
        st.serialize_field("den", &self.den.expand())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> RationalQT {
        RationalQT::new(LaurentQT::t_bracket(1), LaurentQT::z()).unwrap()
    }

    #[test]
    fn bracket_denominators_cancel() {
        // [2]/[1] = q + q^{-1}
        let r = RationalQT::new(LaurentQT::q_bracket(2), LaurentQT::q_bracket(1)).unwrap();
        assert!(r.is_laurent());
        assert_eq!(r.to_laurent().unwrap(), LaurentQT::q_pow(1) + LaurentQT::q_pow(-1));
        let inv = RationalQT::inv_q_bracket(3);
        assert_eq!(&inv * &RationalQT::from(LaurentQT::q_bracket(3)), RationalQT::one());
    }

    #[test]
    fn sums_over_different_brackets() {
        // 1/[1] - [2]/([1][2]) = 0
        let a = RationalQT::inv_q_bracket(1);
        let b = RationalQT::inv_q_bracket(1) * RationalQT::inv_q_bracket(2) * RationalQT::from(LaurentQT::q_bracket(2));
        assert!((&a - &b).is_zero());
        // 1/[1]^2 - 1/[2]: the difference of A=(2),B=(2) and A=(2),B=(1^2) T-values
        let lhs = &(&a * &a) - &RationalQT::inv_q_bracket(2);
        let rhs = RationalQT::new(
            &LaurentQT::q_bracket(2) - &(&LaurentQT::z() * &LaurentQT::z()),
            &(&LaurentQT::z() * &LaurentQT::z()) * &LaurentQT::q_bracket(2),
        )
        .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rational_scalars_reduce() {
        let half = RationalQT::from_ratio(&BigRational::new(2.into(), 4.into()));
        assert_eq!(&half + &half, RationalQT::one());
        let r = RationalQT::new(LaurentQT::constant(6), LaurentQT::constant(-4)).unwrap();
        assert_eq!(r, RationalQT::from_ratio(&BigRational::new((-3).into(), 2.into())));
    }

    #[test]
    fn substitution_of_fraction() {
        let r = RationalQT::new(LaurentQT::t_pow(1), LaurentQT::z()).unwrap();
        let expected = RationalQT::new(LaurentQT::t_pow(3), LaurentQT::q_bracket(3)).unwrap();
        assert_eq!(r.substitute_power(3), expected);
        assert_eq!(r.substitute_power(1), r);
    }

    #[test]
    fn generic_denominator_survives() {
        let d = LaurentQT::t_pow(1) + LaurentQT::q_pow(1) + LaurentQT::one();
        let r = RationalQT::new(LaurentQT::one(), d.clone()).unwrap();
        assert!(!r.is_laurent());
        assert_eq!(&r * &RationalQT::from(d), RationalQT::one());
        assert_eq!(r.to_laurent(), Err(Error::NotDivisible));
    }

    #[test]
    fn unknot_value_is_bar_invariant() {
        assert_eq!(s().bar(), s());
        assert_eq!(s().conj_q().unwrap(), s());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(RationalQT::new(LaurentQT::one(), LaurentQT::zero()).unwrap_err(), Error::DivisionByZero);
        assert_eq!(RationalQT::zero().inv().unwrap_err(), Error::DivisionByZero);
    }
}
