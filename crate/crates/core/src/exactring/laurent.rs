//! Sparse Laurent polynomials in `q` and `t` with big-integer coefficients.
//!
//! Exponents are exact rationals: the fractional twist on torus links
//! produces powers like `q^{(n/m)κ}` in intermediate expressions. Final
//! invariants are checked for integral exponents with
//! [`LaurentQT::has_integer_exponents`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational exponent.
pub type Exp = Ratio<i64>;

/// A monomial `q^q · t^t`. Ordered lexicographically by `(t, q)`, which is
/// a monomial order on the Laurent group and also the output term order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub t: Exp,
    pub q: Exp,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        t: Ratio::new_raw(0, 1),
        q: Ratio::new_raw(0, 1),
    };

    pub fn new(q: impl Into<Exp>, t: impl Into<Exp>) -> Self {
        Monomial {
            q: q.into(),
            t: t.into(),
        }
    }

    pub fn mul(self, other: Monomial) -> Monomial {
        Monomial {
            q: self.q + other.q,
            t: self.t + other.t,
        }
    }

    pub fn div(self, other: Monomial) -> Monomial {
        Monomial {
            q: self.q - other.q,
            t: self.t - other.t,
        }
    }

    pub fn is_integral(&self) -> bool {
        self.q.is_integer() && self.t.is_integer()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentQT {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentQT {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentQT { terms }
    }

    /// `c · q^eq · t^et`
    pub fn monomial(c: impl Into<BigInt>, eq: impl Into<Exp>, et: impl Into<Exp>) -> Self {
        Self::term(c, Monomial::new(eq, et))
    }

    pub fn q_pow(e: impl Into<Exp>) -> Self {
        Self::monomial(1, e, 0)
    }

    pub fn t_pow(e: impl Into<Exp>) -> Self {
        Self::monomial(1, 0, e)
    }

    /// `[k] = q^k - q^{-k}`
    pub fn q_bracket(k: i64) -> Self {
        Self::monomial(1, k, 0) - Self::monomial(1, -k, 0)
    }

    /// `t^k - t^{-k}`
    pub fn t_bracket(k: i64) -> Self {
        Self::monomial(1, 0, k) - Self::monomial(1, 0, -k)
    }

    /// `z = q - q^{-1}`
    pub fn z() -> Self {
        Self::q_bracket(1)
    }

    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut out = LaurentQT::zero();
        for (m, c) in iter {
            out.add_term(m, c.into());
        }
        out
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Returns `Some((c, m))` when the polynomial is a single term.
    pub fn as_monomial(&self) -> Option<(&BigInt, &Monomial)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (c, m))
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        match self.as_monomial() {
            Some((c, m)) if *m == Monomial::ONE => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn trailing(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next()
    }

    pub fn has_integer_exponents(&self) -> bool {
        self.terms.keys().all(Monomial::is_integral)
    }

    /// Fails with [`Error::NonIntegralExponent`] unless every exponent is an integer.
    pub fn assert_integral(&self) -> Result<()> {
        match self.terms.keys().find(|m| !m.is_integral()) {
            None => Ok(()),
            Some(m) => Err(Error::NonIntegralExponent(format!("q^{} t^{}", m.q, m.t))),
        }
    }

    /// Gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn scale(&self, c: &BigInt) -> LaurentQT {
        if c.is_zero() {
            return LaurentQT::zero();
        }
        LaurentQT {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// Divides every coefficient by `c`, which must divide all of them.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Result<LaurentQT> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut terms = BTreeMap::new();
        for (m, v) in &self.terms {
            let (quo, rem) = v.div_rem(c);
            if !rem.is_zero() {
                return Err(Error::NotDivisible);
            }
            terms.insert(*m, quo);
        }
        Ok(LaurentQT { terms })
    }

    pub fn mul_monomial(&self, m: Monomial) -> LaurentQT {
        LaurentQT {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> LaurentQT {
        let mut acc = LaurentQT::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn map_monomials(&self, f: impl Fn(Monomial) -> (Monomial, bool)) -> LaurentQT {
        let mut out = LaurentQT::zero();
        for (m, c) in &self.terms {
            let (m2, negate) = f(*m);
            out.add_term(m2, if negate { -c.clone() } else { c.clone() });
        }
        out
    }

    /// `q ↦ q^d, t ↦ t^d`
    pub fn substitute_power(&self, d: i64) -> LaurentQT {
        self.map_monomials(|m| (Monomial::new(m.q * d, m.t * d), false))
    }

    /// Mirror involution `q ↦ q^{-1}, t ↦ t^{-1}`.
    pub fn bar(&self) -> LaurentQT {
        self.map_monomials(|m| (Monomial::new(-m.q, -m.t), false))
    }

    /// `q ↦ -q^{-1}`; defined only for integral `q`-exponents.
    pub fn conj_q(&self) -> Result<LaurentQT> {
        if let Some(m) = self.terms.keys().find(|m| !m.q.is_integer()) {
            return Err(Error::NonIntegralExponent(format!("q^{}", m.q)));
        }
        Ok(self.map_monomials(|m| (Monomial::new(-m.q, m.t), m.q.to_integer().rem_euclid(2) == 1)))
    }

    /// Exact quotient `self / b` in the Laurent ring, or [`Error::NotDivisible`].
    ///
    /// Greedy leading-term division in the `(t, q)` lex order. Every quotient
    /// monomial must lie above `low(self)/low(b)`, which bounds the search.
    pub fn exact_div(&self, b: &LaurentQT) -> Result<LaurentQT> {
        let (&lead_b, lead_c) = b.leading().ok_or(Error::DivisionByZero)?;
        if self.is_zero() {
            return Ok(LaurentQT::zero());
        }
        if let Some((c, m)) = b.as_monomial() {
            let inv = Monomial::new(-m.q, -m.t);
            return self.div_scalar_exact(c).map(|p| p.mul_monomial(inv));
        }
        // Lowest q-degree parts multiply to a nonzero part, so quotient
        // q-exponents are bounded below as well; this stops runaway
        // descent inside a single t-class.
        let floor = self.trailing().unwrap().0.div(*b.trailing().unwrap().0);
        let q_floor = self.q_range().unwrap().0 - b.q_range().unwrap().0;
        let mut rem = self.clone();
        let mut quot = LaurentQT::zero();
        while let Some((&m, c)) = rem.leading() {
            let qm = m.div(lead_b);
            if qm < floor || qm.q < q_floor {
                return Err(Error::NotDivisible);
            }
            let (cq, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (bm, bc) in &b.terms {
                rem.add_term(bm.mul(qm), -(bc * &cq));
            }
            quot.add_term(qm, cq);
        }
        Ok(quot)
    }

    /// Exact division by a monic polynomial in `q` alone, given densely
    /// (lowest coefficient first). Works class by class: terms sharing a
    /// `t`-exponent and a fractional `q`-part form independent univariate
    /// polynomials, which keeps the cyclotomic cancellation in
    /// [`super::RationalQT`] cheap. Returns `None` when not divisible.
    pub fn exact_div_q_monic(&self, divisor: &[BigInt]) -> Option<LaurentQT> {
        let deg = divisor.len().checked_sub(1)?;
        debug_assert!(divisor[deg].is_one());
        if deg == 0 {
            return Some(self.clone());
        }
        let mut classes: BTreeMap<(Exp, Exp), Vec<(i64, &BigInt)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let int = m.q.floor().to_integer();
            let frac = m.q - int;
            classes.entry((m.t, frac)).or_default().push((int, c));
        }
        let mut out = LaurentQT::zero();
        for ((t, frac), entries) in classes {
            let lo = entries.iter().map(|e| e.0).min().unwrap();
            let hi = entries.iter().map(|e| e.0).max().unwrap();
            let len = (hi - lo + 1) as usize;
            if len <= deg {
                return None;
            }
            let mut dense = vec![BigInt::zero(); len];
            for (e, c) in entries {
                dense[(e - lo) as usize] = c.clone();
            }
            let mut quot = vec![BigInt::zero(); len - deg];
            for i in (0..len - deg).rev() {
                let c = std::mem::take(&mut dense[i + deg]);
                if c.is_zero() {
                    continue;
                }
                for (j, dc) in divisor.iter().enumerate().take(deg) {
                    if !dc.is_zero() {
                        dense[i + j] -= &c * dc;
                    }
                }
                quot[i] = c;
            }
            if dense[..deg].iter().any(|c| !c.is_zero()) {
                return None;
            }
            for (i, c) in quot.into_iter().enumerate() {
                if !c.is_zero() {
                    out.terms.insert(Monomial { t, q: frac + lo + i as i64 }, c);
                }
            }
        }
        Some(out)
    }

    /// Serialization records `[e_q_num, e_q_den, e_t_num, e_t_den, "coeff"]`
    /// in `(e_t, e_q)` order.
    pub fn to_records(&self) -> Vec<(i64, i64, i64, i64, String)> {
        self.terms
            .iter()
            .map(|(m, c)| (*m.q.numer(), *m.q.denom(), *m.t.numer(), *m.t.denom(), c.to_string()))
            .collect()
    }

    pub fn from_records(records: &[(i64, i64, i64, i64, String)]) -> Result<LaurentQT> {
        let mut out = LaurentQT::zero();
        for (qn, qd, tn, td, c) in records {
            if *qd == 0 || *td == 0 {
                return Err(Error::Parse("zero exponent denominator".into()));
            }
            let c: BigInt = c
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {c:?}")))?;
            out.add_term(Monomial::new(Ratio::new(*qn, *qd), Ratio::new(*tn, *td)), c);
        }
        Ok(out)
    }

    /// Minimum and maximum `q`-exponent (None for zero).
    pub fn q_range(&self) -> Option<(Exp, Exp)> {
        let mut it = self.terms.keys().map(|m| m.q);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    /// Evaluates at an integer point `q`, `t` where every exponent is an integer.
    pub fn eval_integer(&self, q: &num_rational::BigRational, t: &num_rational::BigRational) -> Option<num_rational::BigRational> {
        let mut acc = num_rational::BigRational::zero();
        for (m, c) in &self.terms {
            if !m.is_integral() {
                return None;
            }
            let pq = rational_pow(q, m.q.to_integer())?;
            let pt = rational_pow(t, m.t.to_integer())?;
            acc += num_rational::BigRational::from_integer(c.clone()) * pq * pt;
        }
        Some(acc)
    }
}

fn rational_pow(x: &num_rational::BigRational, e: i64) -> Option<num_rational::BigRational> {
    if e < 0 && x.is_zero() {
        return None;
    }
    let mut acc = num_rational::BigRational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= x;
    }
    Some(if e < 0 { acc.recip() } else { acc })
}

impl From<i64> for LaurentQT {
    fn from(c: i64) -> Self {
        LaurentQT::constant(c)
    }
}

impl From<BigInt> for LaurentQT {
    fn from(c: BigInt) -> Self {
        LaurentQT::constant(c)
    }
}

impl<'a> AddAssign<&'a LaurentQT> for LaurentQT {
    fn add_assign(&mut self, rhs: &'a LaurentQT) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl<'a> SubAssign<&'a LaurentQT> for LaurentQT {
    fn sub_assign(&mut self, rhs: &'a LaurentQT) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl<'a> Add<&'a LaurentQT> for &'a LaurentQT {
    type Output = LaurentQT;
    fn add(self, rhs: &'a LaurentQT) -> LaurentQT {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a LaurentQT> for &'a LaurentQT {
    type Output = LaurentQT;
    fn sub(self, rhs: &'a LaurentQT) -> LaurentQT {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a LaurentQT> for &'a LaurentQT {
    type Output = LaurentQT;
    fn mul(self, rhs: &'a LaurentQT) -> LaurentQT {
        let mut out = LaurentQT::zero();
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(*mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentQT {
    type Output = LaurentQT;
    fn neg(self) -> LaurentQT {
        LaurentQT {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<LaurentQT> for LaurentQT {
            type Output = LaurentQT;
            fn $f(self, rhs: LaurentQT) -> LaurentQT {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a LaurentQT> for LaurentQT {
            type Output = LaurentQT;
            fn $f(self, rhs: &'a LaurentQT) -> LaurentQT {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentQT {
    type Output = LaurentQT;
    fn neg(self) -> LaurentQT {
        -&self
    }
}

impl std::iter::Sum for LaurentQT {
    fn sum<I: Iterator<Item = LaurentQT>>(iter: I) -> Self {
        let mut acc = LaurentQT::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

fn fmt_exp(var: &str, e: Exp) -> Option<String> {
    if e.is_zero() {
        None
    } else if e.is_one() {
        Some(var.to_string())
    } else if e.is_integer() {
        Some(format!("{var}^{}", e.numer()))
    } else {
        Some(format!("{var}^({}/{})", e.numer(), e.denom()))
    }
}

impl fmt::Display for LaurentQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let vars: Vec<String> = [fmt_exp("q", m.q), fmt_exp("t", m.t)]
                .into_iter()
                .flatten()
                .collect();
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Parses the [`Display`](fmt::Display) syntax, e.g. `2*q^-1*t - t^(1/2) + 3`.
/// Juxtaposition (`2q^2t`) is accepted as well.
impl std::str::FromStr for LaurentQT {
    type Err = Error;

    fn from_str(s: &str) -> Result<LaurentQT> {
        let bad = || Error::Parse(format!("bad polynomial: {s:?}"));
        let src: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if src.is_empty() {
            return Err(bad());
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for i in 1..src.len() {
            if (src[i] == '+' || src[i] == '-') && !matches!(src[i - 1], '^' | '(' | '/' | '+' | '-') {
                terms.push(&src[start..i]);
                start = i;
            }
        }
        terms.push(&src[start..]);
        let mut out = LaurentQT::zero();
        for term in terms {
            let mut i = 0;
            let mut sign = BigInt::one();
            while i < term.len() && (term[i] == '+' || term[i] == '-') {
                if term[i] == '-' {
                    sign = -sign;
                }
                i += 1;
            }
            let digits: String = term[i..].iter().take_while(|c| c.is_ascii_digit()).collect();
            i += digits.len();
            let coeff = if digits.is_empty() {
                BigInt::one()
            } else {
                digits.parse::<BigInt>().map_err(|_| bad())?
            };
            let mut m = Monomial::ONE;
            while i < term.len() {
                match term[i] {
                    '*' => i += 1,
                    v @ ('q' | 't') => {
                        i += 1;
                        let mut e = Exp::one();
                        if i < term.len() && term[i] == '^' {
                            i += 1;
                            let (paren, close) = if term.get(i) == Some(&'(') {
                                let j = term[i..].iter().position(|&c| c == ')').ok_or_else(bad)? + i;
                                (true, j)
                            } else {
                                let mut j = i;
                                if j < term.len() && (term[j] == '-' || term[j] == '+') {
                                    j += 1;
                                }
                                while j < term.len() && term[j].is_ascii_digit() {
                                    j += 1;
                                }
                                (false, j)
                            };
                            let body: String = term[if paren { i + 1 } else { i }..close].iter().collect();
                            e = match body.split_once('/') {
                                Some((a, b)) => Exp::new(
                                    a.parse().map_err(|_| bad())?,
                                    b.parse().map_err(|_| bad())?,
                                ),
                                None => Exp::from(body.parse::<i64>().map_err(|_| bad())?),
                            };
                            i = if paren { close + 1 } else { close };
                        }
                        m = if v == 'q' { m.mul(Monomial::new(e, 0)) } else { m.mul(Monomial::new(0, e)) };
                    }
                    _ => return Err(bad()),
                }
            }
            out.add_term(m, sign * coeff);
        }
        Ok(out)
    }
}

impl Serialize for LaurentQT {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_records().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentQT {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let records: Vec<(i64, i64, i64, i64, String)> = Vec::deserialize(d)?;
        LaurentQT::from_records(&records).map_err(D::Error::custom)
    }
}

/// Integer exponent as `i64`, if the rational is integral.
pub fn exp_to_i64(e: Exp) -> Option<i64> {
    if e.is_integer() {
        e.to_integer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i64) -> LaurentQT {
        LaurentQT::q_pow(e)
    }

    #[test]
    fn bracket_factorization_divides() {
        let a = LaurentQT::q_bracket(2);
        let b = LaurentQT::q_bracket(1);
        assert_eq!(a.exact_div(&b).unwrap(), q(1) + q(-1));
    }

    #[test]
    fn lower_degree_is_not_divisible() {
        let a = LaurentQT::q_bracket(1);
        let b = LaurentQT::q_bracket(2);
        assert_eq!(a.exact_div(&b), Err(Error::NotDivisible));
    }

    #[test]
    fn zero_divided_is_zero() {
        let b = LaurentQT::q_bracket(3) + LaurentQT::t_pow(2);
        assert!(LaurentQT::zero().exact_div(&b).unwrap().is_zero());
        assert_eq!(LaurentQT::one().exact_div(&LaurentQT::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn coefficient_divisibility_is_checked() {
        let a = LaurentQT::q_bracket(1);
        let b = LaurentQT::q_bracket(1).scale(&BigInt::from(2));
        assert_eq!(a.exact_div(&b), Err(Error::NotDivisible));
        assert_eq!(b.exact_div(&a).unwrap(), LaurentQT::constant(2));
    }

    #[test]
    fn fractional_exponents_multiply_exactly() {
        let half = LaurentQT::monomial(1, Ratio::new(1, 2), Ratio::new(3, 2));
        let p = &half * &half;
        assert_eq!(p, LaurentQT::monomial(1, 1, 3));
        assert!(!half.has_integer_exponents());
        assert!(p.has_integer_exponents());
    }

    #[test]
    fn substitution_and_conjugation() {
        let z = LaurentQT::z();
        assert_eq!(z.substitute_power(2), LaurentQT::q_bracket(2));
        // q - q^{-1} is invariant under q -> -q^{-1}
        assert_eq!(z.conj_q().unwrap(), z);
        assert_eq!(q(1).conj_q().unwrap(), -q(-1));
        assert!(LaurentQT::monomial(1, Ratio::new(1, 2), 0).conj_q().is_err());
    }

    #[test]
    fn display_orders_by_t_then_q() {
        let p = LaurentQT::monomial(2, 1, -1) + LaurentQT::monomial(-1, -2, 0) + LaurentQT::constant(3);
        assert_eq!(p.to_string(), "2*q*t^-1 - q^-2 + 3");
    }

    #[test]
    fn json_records_roundtrip() {
        let p = LaurentQT::monomial(-5, Ratio::new(3, 2), 2) + LaurentQT::constant(7);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"[[0,1,0,1,"7"],[3,2,2,1,"-5"]]"#);
        let back: LaurentQT = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn parse_display_roundtrip() {
        let p: LaurentQT = "2*q^-1*t - t^(1/2) + 3 - q^2t^-4".parse().unwrap();
        assert_eq!(p.to_string().parse::<LaurentQT>().unwrap(), p);
        assert_eq!(p.coeff(&Monomial::new(-1, 1)), BigInt::from(2));
        assert_eq!(p.coeff(&Monomial::new(2, -4)), BigInt::from(-1));
        assert!("q^".parse::<LaurentQT>().is_err());
        assert!("x".parse::<LaurentQT>().is_err());
    }
}
