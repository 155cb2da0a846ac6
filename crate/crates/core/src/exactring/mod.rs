//! Exact scalar arithmetic in `q` and `t`.

mod cyclotomic;
mod hseries;
mod laurent;
mod rational;
mod zsquare;

pub use cyclotomic::{divisors, phi, totient};
pub use hseries::{hseries_expand, hseries_expand_auto, laurent_expand, HSeries, TPoly, DEFAULT_ORDER, MAX_ORDER};
pub use laurent::{exp_to_i64, Exp, LaurentQT, Monomial};
pub use rational::RationalQT;
pub use zsquare::{zsquare_assemble, zsquare_decompose, zsquare_decompose_rational, ZTable};

/// `q ↦ q^d, t ↦ t^d`
pub fn substitute_power(f: &RationalQT, d: i64) -> RationalQT {
    f.substitute_power(d)
}

/// Exact quotient in the Laurent ring.
pub fn exact_div(a: &LaurentQT, b: &LaurentQT) -> crate::Result<LaurentQT> {
    a.exact_div(b)
}
