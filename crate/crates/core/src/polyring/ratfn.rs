use super::{MultiPoly, Rational, Var};
use crate::ring::Ring;
use std::fmt;

/// Unnormalized fraction of two polynomials. Equality is decided by
/// cross-multiplication, so no multivariate gcd is ever needed.
#[derive(Clone, Debug)]
pub struct RationalFn {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFn {
    /// Panics if `den` is zero.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut f = RationalFn { num, den };
        f.normalize_content();
        f
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RationalFn {
            num: p,
            den: MultiPoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(MultiPoly::constant(c))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(MultiPoly::var(v))
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    // Cheap cleanups that keep cross-multiplication equality: exact
    // cancellation when the denominator divides the numerator, and a monic
    // leading denominator coefficient.
    fn normalize_content(&mut self) {
        if self.num.is_zero() {
            self.den = MultiPoly::one();
            return;
        }
        if self.den.as_constant().is_none() {
            if let Some(q) = self.num.div_exact(&self.den) {
                self.num = q;
                self.den = MultiPoly::one();
                return;
            }
        }
        if let Some((_, lc)) = self.den.leading_term() {
            let inv = lc.recip();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn recip(&self) -> Self {
        RationalFn::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &RationalFn) -> Self {
        self.mul_fn(&other.recip())
    }

    fn mul_fn(&self, other: &RationalFn) -> Self {
        RationalFn::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    /// Substitutes a rational function for `v`.
    pub fn substitute(&self, v: Var, value: &RationalFn) -> RationalFn {
        let n = subst_poly(&self.num, v, value);
        let d = subst_poly(&self.den, v, value);
        n.div(&d)
    }

    pub fn substitute_poly(&self, v: Var, value: &MultiPoly) -> RationalFn {
        RationalFn::new(self.num.substitute(v, value), self.den.substitute(v, value))
    }

    /// The polynomial this function equals, if the denominator divides.
    pub fn as_poly(&self) -> Option<MultiPoly> {
        self.num.div_exact(&self.den)
    }
}

fn subst_poly(p: &MultiPoly, v: Var, value: &RationalFn) -> RationalFn {
    let mut out = RationalFn::zero();
    for (m, c) in p.terms() {
        let rest = RationalFn::from_poly(MultiPoly::monomial(c.clone(), m.without(v)));
        out = out.add(&rest.mul(&value.pow(m.exp(v))));
    }
    out
}

impl PartialEq for RationalFn {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

/// Cross-multiplication equality test.
pub fn ratfn_equal(f: &RationalFn, g: &RationalFn) -> bool {
    f == g
}

impl Ring for RationalFn {
    fn zero() -> Self {
        Self::from_poly(MultiPoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return RationalFn::new(self.num.add(&other.num), self.den.clone());
        }
        RationalFn::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }
    fn mul(&self, other: &Self) -> Self {
        self.mul_fn(other)
    }
    fn neg(&self) -> Self {
        RationalFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn from_int(n: i64) -> Self {
        Self::from_poly(MultiPoly::int(n))
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == MultiPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
