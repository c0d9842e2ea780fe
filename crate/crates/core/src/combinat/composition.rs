use super::parse_seq;
use crate::error::{Error, Result};
use std::fmt;

/// A composition `I = (i_1, ..., i_r)` of `n = |I|` into positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(
                parts
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            ));
        }
        Ok(Composition(parts))
    }

    pub(crate) fn new_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        Composition(parts)
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// The one-part composition `(n)` (empty for `n = 0`).
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Composition::empty()
        } else {
            Composition(vec![n])
        }
    }

    /// `(1^n)`.
    pub fn column(n: u32) -> Self {
        Composition(vec![1; n as usize])
    }

    /// Parses comma-separated parts; a bare digit string is read one digit
    /// per part, so "312" means `(3,1,2)`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts = parse_seq(s).map_err(|_| Error::InvalidComposition(s.to_string()))?;
        Composition::new(parts).map_err(|_| Error::InvalidComposition(s.to_string()))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `D(I) = {i_1, i_1 + i_2, ..., i_1 + ... + i_{r-1}}`.
    pub fn descent_set(&self) -> Vec<usize> {
        let mut acc = 0usize;
        let mut out = Vec::new();
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p as usize;
            out.push(acc);
        }
        out
    }

    pub fn from_descent_set(n: usize, set: &[usize]) -> Self {
        if n == 0 {
            return Composition::empty();
        }
        let mut parts = Vec::new();
        let mut last = 0;
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for d in sorted {
            assert!(d > 0 && d < n, "descent {d} out of range for n = {n}");
            parts.push((d - last) as u32);
            last = d;
        }
        parts.push((n - last) as u32);
        Composition(parts)
    }

    /// Descent set as a bitmask over positions `1..n-1` (bit `i-1`).
    pub fn descent_mask(&self) -> u64 {
        self.descent_set().iter().fold(0, |m, &d| m | 1 << (d - 1))
    }

    pub fn from_descent_mask(n: usize, mask: u64) -> Self {
        let set: Vec<usize> = (1..n).filter(|&i| mask >> (i - 1) & 1 == 1).collect();
        Self::from_descent_set(n, &set)
    }

    pub fn maj(&self) -> usize {
        self.descent_set().iter().sum()
    }

    /// The composition with descent set `{1..n-1} \ D(I)`.
    pub fn complement(&self) -> Self {
        let n = self.weight() as usize;
        let d = self.descent_set();
        let set: Vec<usize> = (1..n).filter(|i| !d.contains(i)).collect();
        Self::from_descent_set(n, &set)
    }

    pub fn reverse(&self) -> Self {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// The ribbon conjugate: complement of the reverse.
    pub fn conjugate(&self) -> Self {
        self.reverse().complement()
    }

    /// `self` refines `other`: same weight and `D(self) ⊇ D(other)`.
    pub fn is_finer(&self, other: &Composition) -> bool {
        self.weight() == other.weight() && {
            let m = self.descent_mask();
            other.descent_mask() & !m == 0
        }
    }

    pub fn is_coarser(&self, other: &Composition) -> bool {
        other.is_finer(self)
    }

    /// All refinements of `self` (compositions `J` with `D(J) ⊇ D(I)`).
    pub fn refinements(&self) -> Vec<Composition> {
        let n = self.weight() as usize;
        all_compositions(n)
            .into_iter()
            .filter(|j| j.is_finer(self))
            .collect()
    }

    /// All coarsenings of `self`.
    pub fn coarsenings(&self) -> Vec<Composition> {
        let n = self.weight() as usize;
        all_compositions(n)
            .into_iter()
            .filter(|j| self.is_finer(j))
            .collect()
    }

    pub fn concat(&self, other: &Composition) -> Self {
        let mut p = self.0.clone();
        p.extend_from_slice(&other.0);
        Composition(p)
    }

    /// Near-concatenation `I ▷ J`: last part of `I` merged with the first
    /// part of `J`. Either side empty gives `None`.
    pub fn near_concat(&self, other: &Composition) -> Option<Self> {
        if self.is_empty() || other.is_empty() {
            return None;
        }
        let mut p = self.0.clone();
        *p.last_mut().unwrap() += other.0[0];
        p.extend_from_slice(&other.0[1..]);
        Some(Composition(p))
    }

    /// `I` without its last part, and that part.
    pub fn split_last(&self) -> Option<(Composition, u32)> {
        let (&last, rest) = self.0.split_last()?;
        Some((Composition(rest.to_vec()), last))
    }

    /// The sign word of length `n` with `-` exactly at the descents.
    pub fn sign_word(&self) -> SignWord {
        let n = self.weight() as usize;
        let d = self.descent_set();
        SignWord((1..=n).map(|i| d.contains(&i)).collect())
    }
}

impl Ord for Composition {
    /// Graded: weight, then length, then parts lexicographically.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.weight(), self.0.len(), &self.0).cmp(&(other.weight(), other.0.len(), &other.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// All compositions of `n`, ordered by length then lexicographically.
pub fn all_compositions(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    let mut out: Vec<Composition> = (0..1u64 << (n - 1))
        .map(|m| Composition::from_descent_mask(n, m))
        .collect();
    out.sort();
    out
}

/// A word in `{+, -}`; `true` stands for `-`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignWord(Vec<bool>);

impl SignWord {
    pub fn new(minus: Vec<bool>) -> Self {
        SignWord(minus)
    }

    pub fn parse(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                '+' | 'p' => Ok(false),
                '-' | 'm' => Ok(true),
                _ => Err(Error::InvalidSignWord(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(SignWord)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_minus(&self, i: usize) -> bool {
        self.0[i]
    }

    pub fn signs(&self) -> &[bool] {
        &self.0
    }

    pub fn push(&mut self, minus: bool) {
        self.0.push(minus);
    }

    /// All sign words of length `k`, `+` before `-` lexicographically.
    pub fn all(k: usize) -> Vec<SignWord> {
        (0..1u64 << k)
            .map(|m| SignWord((0..k).rev().map(|i| m >> i & 1 == 1).collect()))
            .collect()
    }

    /// The composition of `len + 1` whose descents are the `-` positions
    /// (signed ribbon dictionary).
    pub fn ribbon_composition(&self) -> Composition {
        let set: Vec<usize> = (1..=self.0.len()).filter(|&i| self.0[i - 1]).collect();
        Composition::from_descent_set(self.0.len() + 1, &set)
    }

    /// Lengths of maximal blocks of identical signs.
    pub fn block_lengths(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for (i, &s) in self.0.iter().enumerate() {
            if i > 0 && self.0[i - 1] == s {
                *out.last_mut().unwrap() += 1;
            } else {
                out.push(1);
            }
        }
        out
    }
}

impl fmt::Display for SignWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &m in &self.0 {
            f.write_str(if m { "-" } else { "+" })?;
        }
        Ok(())
    }
}
