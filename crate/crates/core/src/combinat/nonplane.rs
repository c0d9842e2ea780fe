use super::PlaneTree;
use std::fmt;

/// A rooted tree with unordered children, stored in canonical form:
/// children canonicalized recursively and sorted by their codes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NonPlaneTree {
    canonical: PlaneTree,
}

fn canonicalize(t: &PlaneTree) -> PlaneTree {
    let mut kids: Vec<PlaneTree> = t.children.iter().map(canonicalize).collect();
    kids.sort_by(|a, b| b.cmp(a));
    PlaneTree { children: kids }
}

fn aut(t: &PlaneTree) -> u64 {
    let mut total: u64 = t.children.iter().map(aut).product();
    let mut i = 0;
    while i < t.children.len() {
        let mut j = i;
        while j < t.children.len() && t.children[j] == t.children[i] {
            j += 1;
        }
        total *= (1..=(j - i) as u64).product::<u64>();
        i = j;
    }
    total
}

impl NonPlaneTree {
    pub fn new(t: &PlaneTree) -> Self {
        NonPlaneTree {
            canonical: canonicalize(t),
        }
    }

    /// The canonical plane representative.
    pub fn representative(&self) -> &PlaneTree {
        &self.canonical
    }

    pub fn size(&self) -> usize {
        self.canonical.size()
    }

    /// Order of the automorphism group.
    pub fn aut_order(&self) -> u64 {
        aut(&self.canonical)
    }

    /// All plane trees with this shape, in code order.
    pub fn plane_embeddings(&self) -> Vec<PlaneTree> {
        fn rec(t: &PlaneTree) -> Vec<PlaneTree> {
            let mut orders: Vec<Vec<PlaneTree>> = vec![Vec::new()];
            // distinct orderings of the child multiset, each child expanded
            let kids = &t.children;
            let mut perms: Vec<Vec<usize>> = Vec::new();
            permute_distinct(
                kids,
                &mut vec![false; kids.len()],
                &mut Vec::new(),
                &mut perms,
            );
            let mut out = Vec::new();
            for p in perms {
                orders.clear();
                orders.push(Vec::new());
                for &k in &p {
                    let subs = rec(&kids[k]);
                    let mut next = Vec::new();
                    for o in &orders {
                        for s in &subs {
                            let mut o2 = o.clone();
                            o2.push(s.clone());
                            next.push(o2);
                        }
                    }
                    orders = next;
                }
                for o in &orders {
                    out.push(PlaneTree {
                        children: o.clone(),
                    });
                }
            }
            out.sort();
            out.dedup();
            out
        }
        fn permute_distinct(
            kids: &[PlaneTree],
            used: &mut Vec<bool>,
            cur: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if cur.len() == kids.len() {
                out.push(cur.clone());
                return;
            }
            for i in 0..kids.len() {
                if used[i] || (0..i).any(|j| !used[j] && kids[j] == kids[i]) {
                    continue;
                }
                used[i] = true;
                cur.push(i);
                permute_distinct(kids, used, cur, out);
                cur.pop();
                used[i] = false;
            }
        }
        rec(&self.canonical)
    }
}

impl fmt::Display for NonPlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical.to_forest())
    }
}

/// The non-plane class of a plane tree together with `|Aut|`.
pub fn non_plane_class(t: &PlaneTree) -> (NonPlaneTree, u64) {
    let np = NonPlaneTree::new(t);
    let a = np.aut_order();
    (np, a)
}
