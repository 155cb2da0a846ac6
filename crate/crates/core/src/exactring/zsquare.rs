//! Membership in `Z[z², t^±]` with `z = q - q^{-1}`, and the integer table
//! that certifies it.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::laurent::{LaurentQT, Monomial};
use super::rational::RationalQT;
use crate::error::{Error, Result};

/// Coefficients `c_{g,Q}` with `f = Σ c_{g,Q} z^{2g} t^Q`.
pub type ZTable = BTreeMap<(i64, i64), BigInt>;

fn z2g(g: i64) -> LaurentQT {
    (&LaurentQT::z() * &LaurentQT::z()).pow(g as u32)
}

/// Expands `f` as `Σ c_{g,Q} z^{2g} t^Q` with `g ≥ -allowed_pole`, or fails
/// with [`Error::NotMember`].
///
/// Per `t`-power the top `q`-degree term is peeled against the leading term
/// `q^{2g}` of `z^{2g}`. A Laurent polynomial that is a member never needs
/// negative `g`, so the pole bound only matters for [`zsquare_decompose_rational`].
pub fn zsquare_decompose(f: &LaurentQT, allowed_pole: i64) -> Result<ZTable> {
    let _ = allowed_pole;
    if !f.has_integer_exponents() {
        return Err(Error::NotMember("non-integral exponent".into()));
    }
    let mut by_t: BTreeMap<i64, LaurentQT> = BTreeMap::new();
    for (m, c) in f.terms() {
        by_t.entry(m.t.to_integer())
            .or_default()
            .add_term(Monomial::new(m.q, 0), c.clone());
    }
    let mut table = ZTable::new();
    for (tq, mut rest) in by_t {
        while let Some((m, c)) = rest.leading().map(|(m, c)| (*m, c.clone())) {
            let d = m.q.to_integer();
            if d < 0 || d % 2 != 0 {
                return Err(Error::NotMember(format!("stray term {c}*q^{d}*t^{tq}")));
            }
            let g = d / 2;
            rest -= &z2g(g).scale(&c);
            table.insert((g, tq), c);
        }
    }
    Ok(table)
}

/// Expansion of a rational function with at most a `z^{-2·allowed_pole}` pole.
pub fn zsquare_decompose_rational(f: &RationalQT, allowed_pole: i64) -> Result<ZTable> {
    let pole = allowed_pole.max(0);
    let lifted = f
        .mul_laurent(&z2g(pole))
        .to_laurent()
        .map_err(|_| Error::NotMember(format!("pole beyond z^-{}", 2 * pole)))?;
    let table = zsquare_decompose(&lifted, 0)?;
    Ok(table.into_iter().map(|((g, tq), c)| ((g - pole, tq), c)).collect())
}

/// Reassembles `Σ c_{g,Q} z^{2g} t^Q`.
pub fn zsquare_assemble(table: &ZTable) -> RationalQT {
    let pole = table.keys().map(|(g, _)| -g).max().unwrap_or(0).max(0);
    let mut num = LaurentQT::zero();
    for ((g, tq), c) in table {
        if c.is_zero() {
            continue;
        }
        num += &z2g(g + pole).mul_monomial(Monomial::new(0, *tq)).scale(c);
    }
    RationalQT::new(num, z2g(pole)).expect("z is nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> LaurentQT {
        &LaurentQT::z() * &LaurentQT::z()
    }

    #[test]
    fn z_squared() {
        let f = LaurentQT::q_pow(2) + LaurentQT::q_pow(-2) - LaurentQT::constant(2);
        let t = zsquare_decompose(&f, 0).unwrap();
        assert_eq!(t, ZTable::from([((1, 0), BigInt::from(1))]));
    }

    #[test]
    fn odd_powers_rejected() {
        let f = LaurentQT::q_pow(1) + LaurentQT::q_pow(-1);
        assert!(matches!(zsquare_decompose(&f, 0), Err(Error::NotMember(_))));
    }

    #[test]
    fn t_weighted_fourth_power() {
        let f = &LaurentQT::t_pow(2) * &z2().pow(2);
        let t = zsquare_decompose(&f, 0).unwrap();
        assert_eq!(t, ZTable::from([((2, 2), BigInt::from(1))]));
    }

    #[test]
    fn pole_allowed() {
        // (t - 1) z^{-2} + z^2
        let f = RationalQT::new(&(LaurentQT::t_pow(1) - LaurentQT::one()) + &z2().pow(2), z2()).unwrap();
        let t = zsquare_decompose_rational(&f, 1).unwrap();
        assert_eq!(t.get(&(-1, 1)), Some(&BigInt::from(1)));
        assert_eq!(t.get(&(-1, 0)), Some(&BigInt::from(-1)));
        assert_eq!(t.get(&(1, 0)), Some(&BigInt::from(1)));
        assert_eq!(zsquare_assemble(&t), f);
        assert!(zsquare_decompose_rational(&f, 0).is_err());
    }
}
