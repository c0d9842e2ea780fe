use super::{MultiPoly, Rational};
use crate::ring::Ring;
use std::collections::BTreeMap;
use std::fmt;

/// Laurent polynomial in `z` with polynomial coefficients.
///
/// An optional window `[-N, N]` bounds the exponents. Arithmetic never
/// truncates: a term written outside the window sets the sticky
/// `overflow` flag, which callers turn into an error.
#[derive(Clone, Debug, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, MultiPoly>,
    window: Option<i32>,
    overflow: bool,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn constant(p: MultiPoly) -> Self {
        Self::term(0, p)
    }

    pub fn term(exp: i32, coeff: MultiPoly) -> Self {
        let mut l = Self::zero();
        l.add_term(exp, coeff);
        l
    }

    pub fn with_window(mut self, n: i32) -> Self {
        self.window = Some(n);
        self.check_window();
        self
    }

    pub fn window(&self) -> Option<i32> {
        self.window
    }

    pub fn overflowed(&self) -> bool {
        self.overflow
    }

    fn check_window(&mut self) {
        if let Some(n) = self.window {
            if self.coeffs.keys().any(|&e| e < -n || e > n) {
                self.overflow = true;
            }
        }
    }

    pub fn add_term(&mut self, exp: i32, coeff: MultiPoly) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_default();
        *entry = entry.add(&coeff);
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
        self.check_window();
    }

    pub fn coeff(&self, exp: i32) -> MultiPoly {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i32, &MultiPoly)> {
        self.coeffs.iter()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    fn combine_meta(&self, other: &Self) -> (Option<i32>, bool) {
        let window = match (self.window, other.window) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        (window, self.overflow || other.overflow)
    }

    fn filtered(&self, keep: impl Fn(i32) -> bool) -> Self {
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(e, _)| keep(**e))
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
            window: self.window,
            overflow: self.overflow,
        }
    }

    /// Polar part: the strictly negative powers of `z`.
    pub fn polar_part(&self) -> Self {
        self.filtered(|e| e < 0)
    }

    /// Regular part: the nonnegative powers of `z`.
    pub fn regular_part(&self) -> Self {
        self.filtered(|e| e >= 0)
    }

    /// The terms below `z^n`.
    pub fn truncated(&self, n: i32) -> Self {
        self.filtered(|e| e < n)
    }

    /// `(P+ f, P- f)`.
    pub fn polar_split(&self) -> (Self, Self) {
        (self.polar_part(), self.regular_part())
    }

    /// Coefficient of `z^-1`.
    pub fn residue(&self) -> MultiPoly {
        self.coeff(-1)
    }

    /// Sum of all coefficients (evaluation at `z = 1`).
    pub fn at_one(&self) -> MultiPoly {
        self.coeffs
            .values()
            .fold(MultiPoly::zero(), |acc, c| acc.add(c))
    }

    pub fn map_coeffs(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> Self {
        let mut out = LaurentPoly {
            coeffs: BTreeMap::new(),
            window: self.window,
            overflow: self.overflow,
        };
        for (e, c) in &self.coeffs {
            out.add_term(*e, f(c));
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map_coeffs(|p| p.scale(c))
    }
}

impl Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::constant(MultiPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let (window, overflow) = self.combine_meta(other);
        let mut out = self.clone();
        out.window = window;
        out.overflow = overflow;
        for (e, c) in &other.coeffs {
            out.add_term(*e, c.clone());
        }
        out.check_window();
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let (window, overflow) = self.combine_meta(other);
        let mut out = LaurentPoly {
            coeffs: BTreeMap::new(),
            window,
            overflow,
        };
        for (e, c) in &self.coeffs {
            for (f, d) in &other.coeffs {
                out.add_term(e + f, c.mul(d));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }
    fn from_int(n: i64) -> Self {
        LaurentPoly::constant(MultiPoly::int(n))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(e, c)| match e {
                0 => format!("({c})"),
                _ => format!("({c}) * z^{e}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
