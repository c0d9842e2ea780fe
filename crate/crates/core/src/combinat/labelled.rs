use super::{Permutation, PlaneForest, PlaneTree};

/// A forest with its canonical postorder labelling: node `i` (0-based,
/// label `i + 1`) has every subtree labelled by an interval whose maximum
/// is its root. Regarded as a poset with `i < j` when `i` is a proper
/// descendant of `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelledForest {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
}

fn label_tree(
    t: &PlaneTree,
    parent: &mut Vec<Option<usize>>,
    children: &mut Vec<Vec<usize>>,
) -> usize {
    let kids: Vec<usize> = t
        .children
        .iter()
        .map(|c| label_tree(c, parent, children))
        .collect();
    let me = parent.len();
    parent.push(None);
    for &k in &kids {
        parent[k] = Some(me);
    }
    children.push(kids);
    me
}

impl LabelledForest {
    pub fn new(forest: &PlaneForest) -> Self {
        let mut parent = Vec::with_capacity(forest.size());
        let mut children = Vec::with_capacity(forest.size());
        for t in forest.trees() {
            label_tree(&t, &mut parent, &mut children);
        }
        LabelledForest { parent, children }
    }

    /// Builds from a parent array; children and roots are ordered by index.
    pub fn from_parents(parent: Vec<Option<usize>>) -> Self {
        let mut children = vec![Vec::new(); parent.len()];
        for (i, p) in parent.iter().enumerate() {
            if let Some(p) = p {
                children[*p].push(i);
            }
        }
        LabelledForest { parent, children }
    }

    pub fn size(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, i: usize) -> Option<usize> {
        self.parent[i]
    }

    pub fn children(&self, i: usize) -> &[usize] {
        &self.children[i]
    }

    pub fn roots(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&i| self.parent[i].is_none())
            .collect()
    }

    /// `i <_F j`: `i` is a proper descendant of `j`.
    pub fn less(&self, i: usize, j: usize) -> bool {
        let mut cur = self.parent[i];
        while let Some(p) = cur {
            if p == j {
                return true;
            }
            cur = self.parent[p];
        }
        false
    }

    /// All strict relations `(i, j)` with `i <_F j`.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.size() {
            let mut cur = self.parent[i];
            while let Some(p) = cur {
                out.push((i, p));
                cur = self.parent[p];
            }
        }
        out
    }

    fn tree_at(&self, i: usize) -> PlaneTree {
        PlaneTree {
            children: self.children[i].iter().map(|&c| self.tree_at(c)).collect(),
        }
    }

    pub fn to_forest(&self) -> PlaneForest {
        let trees: Vec<PlaneTree> = self.roots().into_iter().map(|r| self.tree_at(r)).collect();
        PlaneForest::from_trees(&trees)
    }

    /// The forest induced on the nodes with `keep[i]`: the parent of a kept
    /// node is its nearest kept ancestor.
    pub fn restrict(&self, keep: &[bool]) -> PlaneForest {
        let mut index = vec![usize::MAX; self.size()];
        let mut parents = Vec::new();
        for i in 0..self.size() {
            if keep[i] {
                index[i] = parents.len();
                parents.push(None);
            }
        }
        for i in 0..self.size() {
            if !keep[i] {
                continue;
            }
            let mut cur = self.parent[i];
            while let Some(p) = cur {
                if keep[p] {
                    parents[index[i]] = Some(index[p]);
                    break;
                }
                cur = self.parent[p];
            }
        }
        LabelledForest::from_parents(parents).to_forest()
    }

    /// Linear extensions: permutations (words of labels) listing every
    /// descendant before its ancestors. Sorted lexicographically.
    pub fn linear_extensions(&self) -> Vec<Permutation> {
        let n = self.size();
        let mut pending: Vec<usize> = self.children.iter().map(Vec::len).collect();
        let mut word = Vec::with_capacity(n);
        let mut out = Vec::new();
        self.extend(&mut pending, &mut word, &mut out);
        out
    }

    fn extend(&self, pending: &mut Vec<usize>, word: &mut Vec<u32>, out: &mut Vec<Permutation>) {
        if word.len() == self.size() {
            out.push(Permutation::from_vec_unchecked(word.clone()));
            return;
        }
        for i in 0..self.size() {
            if pending[i] == 0 && !word.contains(&(i as u32 + 1)) {
                word.push(i as u32 + 1);
                if let Some(p) = self.parent[i] {
                    pending[p] -= 1;
                }
                self.extend(pending, word, out);
                if let Some(p) = self.parent[i] {
                    pending[p] += 1;
                }
                word.pop();
            }
        }
    }
}
