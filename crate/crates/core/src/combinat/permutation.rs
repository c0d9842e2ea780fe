use super::{format_seq, parse_seq, Composition, LabelledForest, PlaneForest};
use crate::error::{Error, Result};
use std::fmt;

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &w in &word {
            let i = w as usize;
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::InvalidPermutation(format_seq(&word)));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation(word))
    }

    pub(crate) fn from_vec_unchecked(word: Vec<u32>) -> Self {
        Permutation(word)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let w = parse_seq(s).map_err(|_| Error::InvalidPermutation(s.to_string()))?;
        Self::new(w)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// `sigma(i)` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation(inv)
    }

    /// The reversed word.
    pub fn mirror(&self) -> Self {
        Permutation(self.0.iter().rev().copied().collect())
    }

    /// Composition `(self o other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation(other.0.iter().map(|&i| self.0[i as usize - 1]).collect())
    }

    pub fn descent_set(&self) -> Vec<usize> {
        (1..self.len())
            .filter(|&i| self.0[i - 1] > self.0[i])
            .collect()
    }

    /// The ribbon shape (descent composition).
    pub fn ribbon_shape(&self) -> Composition {
        Composition::from_descent_set(self.len(), &self.descent_set())
    }

    /// Inversions as position pairs `(i, j)`, `i < j`, `sigma_i > sigma_j`.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.0[i] > self.0[j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn num_inversions(&self) -> usize {
        self.inversions().len()
    }

    /// Weak order by containment of value-inversion sets: every pair of
    /// values `a < b` with `b` written before `a` in `self` is also
    /// inverted in `other`.
    pub fn weak_leq(&self, other: &Permutation) -> bool {
        self.inverse().position_inversions_within(&other.inverse())
    }

    /// Containment of position-inversion sets.
    pub fn position_inversions_within(&self, other: &Permutation) -> bool {
        self.len() == other.len()
            && self
                .inversions()
                .iter()
                .all(|&(i, j)| other.0[i] > other.0[j])
    }

    /// Whether the word contains the pattern 132.
    pub fn contains_132(&self) -> bool {
        let w = &self.0;
        let n = w.len();
        for i in 0..n {
            for j in i + 1..n {
                if w[j] <= w[i] {
                    continue;
                }
                for k in j + 1..n {
                    if w[i] < w[k] && w[k] < w[j] {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Shifts every letter by `k`.
    pub fn shifted(&self, k: u32) -> Vec<u32> {
        self.0.iter().map(|&v| v + k).collect()
    }

    /// Standardization of an injective word of integers.
    pub fn standardize(word: &[u32]) -> Self {
        let mut idx: Vec<usize> = (0..word.len()).collect();
        idx.sort_by_key(|&i| word[i]);
        let mut out = vec![0; word.len()];
        for (rank, i) in idx.into_iter().enumerate() {
            out[i] = rank as u32 + 1;
        }
        Permutation(out)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_seq(&self.0))
    }
}

/// All permutations of size `n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if cur.len() == n {
            out.push(Permutation(cur.clone()));
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v as u32 + 1);
                rec(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

/// A word over positive integers using every letter of `{1..max}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PackedWord(Vec<u32>);

impl PackedWord {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let max = word.iter().copied().max().unwrap_or(0);
        let mut seen = vec![false; max as usize];
        for &w in &word {
            if w == 0 {
                return Err(Error::code(
                    format_seq(&word),
                    "packed words use letters >= 1",
                ));
            }
            seen[w as usize - 1] = true;
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::code(format_seq(&word), "not packed"));
        }
        Ok(PackedWord(word))
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::new(parse_seq(s)?)
    }

    /// Packs an arbitrary word: letters replaced by their rank among the
    /// distinct letters.
    pub fn pack(word: &[u32]) -> Self {
        let mut vals: Vec<u32> = word.to_vec();
        vals.sort_unstable();
        vals.dedup();
        PackedWord(
            word.iter()
                .map(|w| vals.binary_search(w).expect("present") as u32 + 1)
                .collect(),
        )
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_letter(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Letter multiplicities, as a composition (commutative image).
    pub fn evaluation(&self) -> Composition {
        let mut counts = vec![0u32; self.max_letter() as usize];
        for &w in &self.0 {
            counts[w as usize - 1] += 1;
        }
        Composition::new_unchecked(counts)
    }
}

impl fmt::Display for PackedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_seq(&self.0))
    }
}

impl PlaneForest {
    pub fn linear_extensions(&self) -> Vec<Permutation> {
        LabelledForest::new(self).linear_extensions()
    }

    /// The maximal linear extension `sigma_F`, selected as the linear
    /// extension with the most inversions.
    pub fn max_linear_extension(&self) -> Permutation {
        self.linear_extensions()
            .into_iter()
            .max_by_key(|p| p.num_inversions())
            .expect("every forest has a linear extension")
    }

    /// Reconstructs `F` from `sigma_F`: build the binary search tree of the
    /// mirror word and read it as first-child / next-sibling links.
    pub fn from_max_extension(sigma: &Permutation) -> Result<PlaneForest> {
        let n = sigma.len();
        let mut left = vec![None; n + 1];
        let mut right = vec![None; n + 1];
        let mut root: Option<u32> = None;
        for &v in sigma.mirror().as_slice() {
            match root {
                None => root = Some(v),
                Some(r) => {
                    let mut cur = r;
                    loop {
                        let slot = if v < cur {
                            &mut left[cur as usize]
                        } else {
                            &mut right[cur as usize]
                        };
                        match *slot {
                            Some(next) => cur = next,
                            None => {
                                *slot = Some(v);
                                break;
                            }
                        }
                    }
                }
            }
        }
        // left child = first child, right child = next sibling
        let mut parent: Vec<Option<usize>> = vec![None; n];
        fn walk(
            node: Option<u32>,
            up: Option<usize>,
            left: &[Option<u32>],
            right: &[Option<u32>],
            parent: &mut [Option<usize>],
        ) {
            let mut cur = node;
            while let Some(v) = cur {
                parent[v as usize - 1] = up;
                walk(left[v as usize], Some(v as usize - 1), left, right, parent);
                cur = right[v as usize];
            }
        }
        walk(root, None, &left, &right, &mut parent);
        let labelled = LabelledForest::from_parents(parent);
        let forest = labelled.to_forest();
        if LabelledForest::new(&forest) != labelled || forest.max_linear_extension() != *sigma {
            return Err(Error::NotMaximal(sigma.to_string()));
        }
        Ok(forest)
    }
}
