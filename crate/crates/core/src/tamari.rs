//! The Tamari order on plane forests.
//!
//! Among trees the order is generated by the rotation move (`tree_covers`).
//! Forests are compared through their grafts: `F <= G` iff
//! `B+(F) <= B+(G)`. Equivalently, the forests above a tree `T = B+(F)`
//! are the `G1 B+(G2)` with `G1 G2 >= F`; in reverse Polish code this
//! appends each admissible root arity to the codes of the forests above
//! `F`.

use crate::combinat::{enumerate_forests, PlaneForest, PlaneTree};
use crate::error::{Error, Result};
use std::collections::{BTreeSet, HashMap};

/// The set `{G : G >= base}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TamariUpSet {
    pub base: PlaneForest,
    pub elements: BTreeSet<PlaneForest>,
}

impl TamariUpSet {
    pub fn contains(&self, g: &PlaneForest) -> bool {
        self.elements.contains(g)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Per-evaluation memo of up-sets keyed by forest.
#[derive(Default)]
pub struct UpsetCache {
    memo: HashMap<PlaneForest, BTreeSet<PlaneForest>>,
    trees: HashMap<PlaneTree, BTreeSet<PlaneTree>>,
}

impl UpsetCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn upset(&mut self, f: &PlaneForest) -> BTreeSet<PlaneForest> {
        if let Some(s) = self.memo.get(f) {
            return s.clone();
        }
        let result: BTreeSet<PlaneForest> = self
            .tree_upset(&PlaneTree::graft(f))
            .into_iter()
            .map(|t| t.subforest())
            .collect();
        self.memo.insert(f.clone(), result.clone());
        result
    }
}

impl UpsetCache {
    pub fn downset(&mut self, f: &PlaneForest) -> BTreeSet<PlaneForest> {
        enumerate_forests(f.size())
            .into_iter()
            .filter(|g| self.upset(g).contains(f))
            .collect()
    }

    /// Trees above `t`: closure of `t` under `tree_covers`.
    pub fn tree_upset(&mut self, t: &PlaneTree) -> BTreeSet<PlaneTree> {
        if let Some(s) = self.trees.get(t) {
            return s.clone();
        }
        let mut out = BTreeSet::from([t.clone()]);
        for c in tree_covers(t) {
            out.extend(self.tree_upset(&c));
        }
        self.trees.insert(t.clone(), out.clone());
        out
    }
}

pub fn upset(f: &PlaneForest) -> TamariUpSet {
    TamariUpSet {
        base: f.clone(),
        elements: UpsetCache::new().upset(f),
    }
}

/// `F <= G` in the Tamari order.
pub fn leq(f: &PlaneForest, g: &PlaneForest) -> Result<bool> {
    if f.size() != g.size() {
        return Err(Error::SizeMismatch(f.size(), g.size()));
    }
    Ok(upset(f).contains(g))
}

/// `{G : G <= F}`, by scanning all forests of the same size.
pub fn downset(f: &PlaneForest) -> BTreeSet<PlaneForest> {
    UpsetCache::new().downset(f)
}

/// Trees covering `t`: at a vertex `x` that is neither root nor leaf, cut
/// the leftmost subtree of `x` and graft it back just left of `x` under
/// the parent of `x`.
pub fn tree_covers(t: &PlaneTree) -> BTreeSet<PlaneTree> {
    let mut out = BTreeSet::new();
    // path: child indices from the root to the parent of x
    fn rec(
        node: &PlaneTree,
        path: &mut Vec<usize>,
        root: &PlaneTree,
        out: &mut BTreeSet<PlaneTree>,
    ) {
        for (k, x) in node.children.iter().enumerate() {
            if !x.is_leaf() {
                let mut t = root.clone();
                let parent = path.iter().fold(&mut t, |n, &i| &mut n.children[i]);
                let cut = parent.children[k].children.remove(0);
                parent.children.insert(k, cut);
                out.insert(t);
            }
            path.push(k);
            rec(x, path, root, out);
            path.pop();
        }
    }
    rec(t, &mut Vec::new(), t, &mut out);
    out
}
