use super::{int, MultiPoly, Rational, Var};

use num_bigint::BigInt;
use num_traits::One;

/// Ordinary binomial coefficient as an exact integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Bernoulli polynomial `B_m(t)` from the recursion
/// `sum_{j<=m} C(m+1, j) B_j(t) = (m+1) t^m`.
pub fn bernoulli_polynomial(m: u32) -> MultiPoly {
    let t = MultiPoly::var(Var::T);
    let mut table: Vec<MultiPoly> = Vec::with_capacity(m as usize + 1);
    for k in 0..=m {
        let mut b = t.pow(k);
        let scale = Rational::new(BigInt::one(), BigInt::from(k + 1));
        for (j, bj) in table.iter().enumerate() {
            let c = Rational::from_integer(binomial(k as u64 + 1, j as u64)) * &scale;
            b = b.sub(&bj.scale(&c));
        }
        table.push(b);
    }
    table.pop().expect("nonempty")
}

/// Discrete integral in `t`: `t^p -> (B_{p+1}(t) - B_{p+1}(0)) / (p+1)`,
/// extended linearly (other variables are treated as constants).
///
/// The result `g` satisfies `g(t+1) - g(t) = p(t)` and `g(0) = 0`.
pub fn discrete_integral(p: &MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for (m, c) in p.terms() {
        let e = m.exp(Var::T);
        let b = bernoulli_polynomial(e + 1);
        let b0 = b.evaluate(Var::T, &int(0));
        let prim = b
            .sub(&b0)
            .scale(&Rational::new(BigInt::one(), BigInt::from(e + 1)));
        let rest = MultiPoly::monomial(c.clone(), m.without(Var::T));
        out = out.add(&prim.mul(&rest));
    }
    out
}

/// Gaussian binomial `[n choose k]_q` by the q-Pascal rule.
pub fn gaussian_binomial(n: u32, k: u32) -> MultiPoly {
    if k > n {
        return MultiPoly::zero();
    }
    let q = MultiPoly::var(Var::Q);
    // rows[j] = [i choose j]_q for the current i
    let mut row = vec![MultiPoly::one()];
    for i in 1..=n as usize {
        let mut next = vec![MultiPoly::one(); i + 1];
        for j in 1..i {
            next[j] = row[j - 1].add(&q.pow(j as u32).mul(&row[j]));
        }
        row = next;
    }
    row[k as usize].clone()
}
