use super::{format_seq, parse_seq};
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

/// A plane rooted tree: a node with an ordered list of subtrees.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlaneTree {
    pub children: Vec<PlaneTree>,
}

impl PlaneTree {
    pub fn leaf() -> Self {
        PlaneTree {
            children: Vec::new(),
        }
    }

    /// `B+`: grafts the trees of a forest on a new root.
    pub fn graft(forest: &PlaneForest) -> Self {
        PlaneTree {
            children: forest.trees(),
        }
    }

    pub fn chain(n: usize) -> Self {
        assert!(n >= 1);
        let mut t = PlaneTree::leaf();
        for _ in 1..n {
            t = PlaneTree { children: vec![t] };
        }
        t
    }

    pub fn corolla(n: usize) -> Self {
        assert!(n >= 1);
        PlaneTree {
            children: vec![PlaneTree::leaf(); n - 1],
        }
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(PlaneTree::size).sum::<usize>()
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn push_code(&self, out: &mut Vec<u32>) {
        out.push(self.children.len() as u32);
        for c in &self.children {
            c.push_code(out);
        }
    }

    pub fn code(&self) -> Vec<u32> {
        let mut out = Vec::new();
        self.push_code(&mut out);
        out
    }

    /// The forest of subtrees of the root.
    pub fn subforest(&self) -> PlaneForest {
        PlaneForest::from_trees(&self.children)
    }

    pub fn to_forest(&self) -> PlaneForest {
        PlaneForest::from_trees(std::slice::from_ref(self))
    }
}

/// A plane forest, stored by its Polish code (prefix traversal, each node
/// labelled by its number of children).
///
/// Forests compare first by size, then lexicographically by code.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PlaneForest {
    code: Vec<u32>,
}

impl PartialOrd for PlaneTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Same order as the one-tree forests: size, then code.
impl Ord for PlaneTree {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.size(), self.code()).cmp(&(other.size(), other.code()))
    }
}

impl PartialOrd for PlaneForest {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PlaneForest {
    fn cmp(&self, other: &Self) -> Ordering {
        self.code
            .len()
            .cmp(&other.code.len())
            .then_with(|| self.code.cmp(&other.code))
    }
}

/// Splits a Polish code into tree codes; errors on underflow/leftovers.
fn split_trees(code: &[u32]) -> std::result::Result<Vec<(usize, usize)>, String> {
    let mut out = Vec::new();
    let mut start = 0;
    let mut need: i64 = 0;
    for (i, &c) in code.iter().enumerate() {
        if need == 0 {
            start = i;
            need = 1;
        }
        need += c as i64 - 1;
        if need == 0 {
            out.push((start, i + 1));
        }
    }
    if need != 0 {
        return Err(format!("{need} subtree(s) missing at end of code"));
    }
    Ok(out)
}

fn build_tree(code: &[u32], pos: &mut usize) -> PlaneTree {
    let arity = code[*pos] as usize;
    *pos += 1;
    let children = (0..arity).map(|_| build_tree(code, pos)).collect();
    PlaneTree { children }
}

impl PlaneForest {
    pub fn empty() -> Self {
        PlaneForest::default()
    }

    pub fn from_code(code: Vec<u32>) -> Result<Self> {
        split_trees(&code).map_err(|r| Error::code(format_seq(&code), r))?;
        Ok(PlaneForest { code })
    }

    /// Parses a Polish code (compact digits, or comma separated).
    pub fn parse(s: &str) -> Result<Self> {
        let code = parse_seq(s)?;
        Self::from_code(code).map_err(|e| match e {
            Error::InvalidCode { reason, .. } => Error::code(s, reason),
            e => e,
        })
    }

    /// Parses a reverse Polish code (the reversed Polish code).
    pub fn parse_reverse(s: &str) -> Result<Self> {
        let mut code = parse_seq(s)?;
        code.reverse();
        Self::from_code(code).map_err(|e| match e {
            Error::InvalidCode { reason, .. } => Error::code(s, reason),
            e => e,
        })
    }

    pub fn from_trees(trees: &[PlaneTree]) -> Self {
        let mut code = Vec::new();
        for t in trees {
            t.push_code(&mut code);
        }
        PlaneForest { code }
    }

    pub fn singletons(n: usize) -> Self {
        PlaneForest { code: vec![0; n] }
    }

    /// The chain with `n` nodes (empty for `n = 0`).
    pub fn chain(n: usize) -> Self {
        if n == 0 {
            return PlaneForest::empty();
        }
        PlaneTree::chain(n).to_forest()
    }

    pub fn corolla(n: usize) -> Self {
        PlaneTree::corolla(n).to_forest()
    }

    pub fn polish_code(&self) -> &[u32] {
        &self.code
    }

    pub fn reverse_polish_code(&self) -> Vec<u32> {
        self.code.iter().rev().copied().collect()
    }

    pub fn code_string(&self) -> String {
        format_seq(&self.code)
    }

    pub fn size(&self) -> usize {
        self.code.len()
    }

    pub fn is_empty(&self) -> bool {
        self.code.is_empty()
    }

    pub fn num_roots(&self) -> usize {
        self.code.len() - self.code.iter().map(|&c| c as usize).sum::<usize>()
    }

    pub fn is_tree(&self) -> bool {
        !self.is_empty() && self.num_roots() == 1
    }

    pub fn trees(&self) -> Vec<PlaneTree> {
        let mut pos = 0;
        let mut out = Vec::new();
        while pos < self.code.len() {
            out.push(build_tree(&self.code, &mut pos));
        }
        out
    }

    pub fn as_tree(&self) -> Result<PlaneTree> {
        if !self.is_tree() {
            return Err(Error::NotATree(self.code_string()));
        }
        Ok(self.trees().remove(0))
    }

    /// The forests of the individual trees, in order.
    pub fn tree_forests(&self) -> Vec<PlaneForest> {
        split_trees(&self.code)
            .expect("valid code")
            .into_iter()
            .map(|(a, b)| PlaneForest {
                code: self.code[a..b].to_vec(),
            })
            .collect()
    }

    pub fn concat(&self, other: &PlaneForest) -> PlaneForest {
        let mut code = self.code.clone();
        code.extend_from_slice(&other.code);
        PlaneForest { code }
    }

    /// `B+(F)` as a one-tree forest.
    pub fn graft(&self) -> PlaneForest {
        let mut code = vec![self.num_roots() as u32];
        code.extend_from_slice(&self.code);
        PlaneForest { code }
    }

    /// For a tree `B+(F)`, the forest `F`.
    pub fn ungraft(&self) -> Result<PlaneForest> {
        if !self.is_tree() {
            return Err(Error::NotATree(self.code_string()));
        }
        Ok(PlaneForest {
            code: self.code[1..].to_vec(),
        })
    }

    /// All splittings `F = F1 F2` at tree boundaries (including empty ends).
    pub fn deconcatenations(&self) -> Vec<(PlaneForest, PlaneForest)> {
        let cuts = split_trees(&self.code).expect("valid code");
        let mut out = vec![(PlaneForest::empty(), self.clone())];
        for (_, end) in cuts {
            out.push((
                PlaneForest {
                    code: self.code[..end].to_vec(),
                },
                PlaneForest {
                    code: self.code[end..].to_vec(),
                },
            ));
        }
        out
    }

    /// Commutative monomial `a_F`: the multiset of code entries, as
    /// exponent counts indexed by entry value.
    pub fn code_multiset(&self) -> Vec<u32> {
        let mut counts = vec![
            0u32;
            self.code
                .iter()
                .copied()
                .max()
                .map_or(0, |m| m as usize + 1)
        ];
        for &c in &self.code {
            counts[c as usize] += 1;
        }
        counts
    }
}

impl fmt::Display for PlaneForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code_string())
    }
}

fn extend_codes(
    remaining: usize,
    need: usize,
    single_tree: bool,
    started: bool,
    prefix: &mut Vec<u32>,
    out: &mut Vec<PlaneForest>,
) {
    if remaining == 0 {
        if need == 0 {
            out.push(PlaneForest {
                code: prefix.clone(),
            });
        }
        return;
    }
    let need = if need == 0 {
        if single_tree && started {
            return;
        }
        1
    } else {
        need
    };
    // after placing arity c: need' = need - 1 + c must be <= remaining - 1
    let max_c = remaining - need;
    for c in 0..=max_c {
        prefix.push(c as u32);
        extend_codes(remaining - 1, need - 1 + c, single_tree, true, prefix, out);
        prefix.pop();
    }
}

/// All plane forests with `n` nodes, ordered lexicographically by code.
pub fn enumerate_forests(n: usize) -> Vec<PlaneForest> {
    let mut out = Vec::new();
    extend_codes(n, 0, false, false, &mut Vec::new(), &mut out);
    out
}

/// All plane trees with `n >= 1` nodes, ordered lexicographically by code.
pub fn enumerate_trees(n: usize) -> Vec<PlaneForest> {
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    extend_codes(n, 0, true, false, &mut Vec::new(), &mut out);
    out
}
