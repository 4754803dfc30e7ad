//! Validity checks for tree-decompositions.

use crate::graph::{Graph, VertexSet};

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    /// Returns false if `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb)] = ra.min(rb);
        true
    }
}

pub(crate) fn union_find_groups(n: usize, joins: impl IntoIterator<Item = (usize, usize)>) -> Vec<usize> {
    let mut uf = UnionFind::new(n);
    for (a, b) in joins {
        uf.union(a, b);
    }
    (0..n).map(|x| uf.find(x)).collect()
}

/// Checks that `(edges, bags)` is a tree-decomposition of `g`, allowing a
/// forest (a forest can always be joined into a tree with empty adhesions).
pub fn check_tree_decomposition(g: &Graph, bags: &[VertexSet], edges: &[(usize, usize)]) -> Result<(), String> {
    let k = bags.len();
    if g.n() > 0 && k == 0 {
        return Err("no bags".into());
    }
    let mut uf = UnionFind::new(k);
    for &(a, b) in edges {
        if a >= k || b >= k {
            return Err(format!("edge ({a},{b}) refers to a missing bag"));
        }
        if !uf.union(a, b) {
            return Err(format!("edge ({a},{b}) closes a cycle"));
        }
    }
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, bag) in bags.iter().enumerate() {
        if let Some(&v) = bag.as_slice().last() {
            if v >= g.n() {
                return Err(format!("bag {i} holds unknown vertex {v}"));
            }
        }
        for v in bag {
            holders[v].push(i);
        }
    }
    for (v, hs) in holders.iter().enumerate() {
        if hs.is_empty() {
            return Err(format!("vertex {v} is in no bag"));
        }
    }
    for (u, v) in g.edges() {
        if !holders[u].iter().any(|&i| bags[i].contains(v)) {
            return Err(format!("edge ({u},{v}) is in no bag"));
        }
    }
    // bags holding v must be connected through edges between such bags
    for (v, hs) in holders.iter().enumerate() {
        let inner = edges.iter().filter(|&&(a, b)| bags[a].contains(v) && bags[b].contains(v));
        let mut local = UnionFind::new(k);
        let mut parts = hs.len();
        for &(a, b) in inner {
            if local.union(a, b) {
                parts -= 1;
            }
        }
        if parts != 1 {
            return Err(format!("bags containing vertex {v} are not connected"));
        }
    }
    Ok(())
}
