//! Exact coefficient arithmetic: rationals, sparse multivariate polynomials
//! over named variables, rational functions and Laurent polynomials in `z`.

mod laurent;
mod multipoly;
mod ratfn;
mod special;

pub use laurent::LaurentPoly;
pub use multipoly::{Monomial, MultiPoly, Var};
pub use ratfn::{ratfn_equal, RationalFn};
pub use special::{bernoulli_polynomial, binomial, discrete_integral, gaussian_binomial};

use num_bigint::BigInt;
use num_rational::BigRational;

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Renders a rational as `p` or `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q == BigInt::from(0) {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}
