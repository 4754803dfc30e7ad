//! Maximum cardinality search, perfect elimination orders and clique trees.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::separators::{canonical_order, Origin, Separator};

/// Vertices in maximum cardinality search visiting order; ties go to the
/// lowest id. The reverse of this order is a PEO whenever the graph is chordal.
pub fn mcs_order(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut buckets: Vec<BTreeSet<Vertex>> = vec![BTreeSet::new(); n + 1];
    buckets[0].extend(0..n);
    let mut top = 0;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        while buckets[top].is_empty() {
            top -= 1;
        }
        let v = buckets[top].pop_first().expect("non-empty bucket");
        visited[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            if !visited[u] {
                buckets[weight[u]].remove(&u);
                weight[u] += 1;
                buckets[weight[u]].insert(u);
                top = top.max(weight[u]);
            }
        }
    }
    order
}

/// Position of each vertex in a visiting order.
fn positions(order: &[Vertex]) -> Vec<usize> {
    let mut pos = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    pos
}

/// Neighbors of `v` visited before it.
fn earlier_neighbors(g: &Graph, pos: &[usize], v: Vertex) -> Vec<Vertex> {
    g.neighbors(v).iter().copied().filter(|&u| pos[u] < pos[v]).collect()
}

/// Checks that reversing `visit` gives a perfect elimination order.
fn visit_order_is_perfect(g: &Graph, visit: &[Vertex]) -> bool {
    let pos = positions(visit);
    for &v in visit {
        let earlier = earlier_neighbors(g, &pos, v);
        let Some(&parent) = earlier.iter().max_by_key(|&&u| pos[u]) else {
            continue;
        };
        if earlier.iter().any(|&u| u != parent && !g.has_edge(parent, u)) {
            return false;
        }
    }
    true
}

/// A perfect elimination order, if `g` is chordal.
pub fn peo(g: &Graph) -> Option<Vec<Vertex>> {
    let mut visit = mcs_order(g);
    if !visit_order_is_perfect(g, &visit) {
        return None;
    }
    visit.reverse();
    Some(visit)
}

pub fn is_chordal(g: &Graph) -> bool {
    visit_order_is_perfect(g, &mcs_order(g))
}

/// Checks that `order` is a perfect elimination order of `g`: every vertex's
/// later neighbors form a clique.
pub fn is_perfect_elimination_order(g: &Graph, order: &[Vertex]) -> bool {
    if order.len() != g.n() {
        return false;
    }
    let mut visit = order.to_vec();
    visit.reverse();
    let mut seen = vec![false; g.n()];
    for &v in &visit {
        if v >= g.n() || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    visit_order_is_perfect(g, &visit)
}

/// Maximal cliques of a chordal graph arranged in a tree.
///
/// For a disconnected graph the tree is a forest: components are not joined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueTree {
    pub bags: Vec<VertexSet>,
    pub tree_edges: Vec<(usize, usize)>,
    /// Intersection of the two bags of each tree edge, parallel to `tree_edges`.
    pub edge_separators: Vec<VertexSet>,
}

impl CliqueTree {
    pub fn max_bag(&self) -> usize {
        self.bags.iter().map(VertexSet::len).max().unwrap_or(0)
    }
}

/// Clique tree of a chordal graph, built during maximum cardinality search.
pub fn clique_tree(h: &Graph) -> Result<CliqueTree> {
    let visit = mcs_order(h);
    if !visit_order_is_perfect(h, &visit) {
        return Err(Error::NotChordal);
    }
    let pos = positions(&visit);
    let mut bags: Vec<Vec<Vertex>> = Vec::new();
    let mut clique_of = vec![usize::MAX; h.n()];
    let mut tree_edges = Vec::new();
    let mut edge_separators = Vec::new();
    let mut prev_card = 0;
    for (i, &v) in visit.iter().enumerate() {
        let earlier = earlier_neighbors(h, &pos, v);
        let card = earlier.len();
        if i == 0 || card <= prev_card {
            let mut bag = earlier.clone();
            bag.push(v);
            bags.push(bag);
            let c = bags.len() - 1;
            if let Some(&last) = earlier.iter().max_by_key(|&&u| pos[u]) {
                tree_edges.push((clique_of[last], c));
                edge_separators.push(VertexSet::new(earlier));
            }
        } else {
            bags.last_mut().expect("a bag exists").push(v);
        }
        clique_of[v] = bags.len() - 1;
        prev_card = card;
    }
    Ok(CliqueTree { bags: bags.into_iter().map(VertexSet::new).collect(), tree_edges, edge_separators })
}

/// All minimal separators of a chordal graph, in canonical order.
pub fn minimal_separators_chordal(h: &Graph) -> Result<Vec<Separator>> {
    let tree = clique_tree(h)?;
    Ok(canonical_order(
        tree.edge_separators.into_iter().map(|s| Separator::new(s, Origin::ChordalExtraction)).collect(),
    ))
}
