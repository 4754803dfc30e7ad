//! Simple undirected graphs over contiguous vertex ids and sorted vertex sets.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A strictly increasing list of vertex ids.
///
/// Sets order canonically: by size first, then lexicographically.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new<I: IntoIterator<Item = Vertex>>(vertices: I) -> Self {
        let mut v: Vec<Vertex> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    /// Wraps a vector that is already strictly increasing.
    pub fn from_sorted(v: Vec<Vertex>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]), "not strictly sorted: {v:?}");
        VertexSet(v)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(vec![v])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn with(&self, v: Vertex) -> Self {
        match self.0.binary_search(&v) {
            Ok(_) => self.clone(),
            Err(pos) => {
                let mut out = self.0.clone();
                out.insert(pos, v);
                VertexSet(out)
            }
        }
    }

    pub fn without(&self, v: Vertex) -> Self {
        VertexSet(self.0.iter().copied().filter(|&x| x != v).collect())
    }

    pub fn union(&self, other: &VertexSet) -> Self {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        VertexSet(out)
    }

    pub fn difference(&self, other: &VertexSet) -> Self {
        VertexSet(self.0.iter().copied().filter(|&v| !other.contains(v)).collect())
    }

    pub fn intersection(&self, other: &VertexSet) -> Self {
        VertexSet(self.0.iter().copied().filter(|&v| other.contains(v)).collect())
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.len() <= other.len() && self.0.iter().all(|&v| other.contains(v))
    }

    /// The members as 1-based ids, the way PACE files number vertices.
    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|v| v + 1).collect()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = Vertex;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, Vertex>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// Simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are kept sorted so that adjacency tests are binary searches
/// and set operations are merges. Values are immutable; operations that add
/// edges return a new graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
    labels: Option<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0, labels: None }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_raw_adjacency(adj))
    }

    /// Sorts and deduplicates raw, already symmetric adjacency rows.
    pub(crate) fn from_raw_adjacency(mut adj: Vec<Vec<Vertex>>) -> Self {
        let mut total = 0;
        for row in adj.iter_mut() {
            row.sort_unstable();
            row.dedup();
            total += row.len();
        }
        Graph { adj, m: total / 2, labels: None }
    }

    /// Attaches external vertex names (one per vertex).
    pub fn with_labels(mut self, labels: Vec<usize>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::InvalidInput(format!("{} labels for {} vertices", labels.len(), self.n())));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().copied().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// External name of `v`; defaults to the 1-based id.
    pub fn label(&self, v: Vertex) -> usize {
        match &self.labels {
            Some(l) => l[v],
            None => v + 1,
        }
    }

    pub fn labels(&self) -> Option<&[usize]> {
        self.labels.as_deref()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::from_sorted((0..self.n()).collect())
    }

    pub fn check_set(&self, u: &VertexSet) -> Result<()> {
        match u.as_slice().last() {
            Some(&v) if v >= self.n() => Err(Error::VertexOutOfRange { vertex: v, n: self.n() }),
            _ => Ok(()),
        }
    }

    pub(crate) fn mask(&self, u: &VertexSet) -> Vec<bool> {
        let mut mask = vec![false; self.n()];
        for v in u {
            mask[v] = true;
        }
        mask
    }

    /// Vertices outside `u` adjacent to some vertex of `u`.
    pub fn neighborhood(&self, u: &VertexSet) -> Result<VertexSet> {
        self.check_set(u)?;
        let inside = self.mask(u);
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for v in u {
            for &w in &self.adj[v] {
                if !inside[w] && !seen[w] {
                    seen[w] = true;
                    out.push(w);
                }
            }
        }
        Ok(VertexSet::new(out))
    }

    /// Connected components of the graph with `removed` deleted, ordered by
    /// their smallest member.
    pub fn components(&self, removed: &VertexSet) -> Result<Vec<VertexSet>> {
        self.check_set(removed)?;
        let labels = ComponentLabels::new(self, removed);
        Ok(labels.into_sets())
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        ComponentLabels::new(self, &VertexSet::empty()).count() == 1
    }

    /// Number of non-adjacent pairs inside `u`.
    pub fn missing_pairs(&self, u: &VertexSet) -> usize {
        let s = u.as_slice();
        let mut missing = 0;
        for (i, &a) in s.iter().enumerate() {
            for &b in &s[i + 1..] {
                if !self.has_edge(a, b) {
                    missing += 1;
                }
            }
        }
        missing
    }

    pub fn is_clique(&self, u: &VertexSet) -> bool {
        let s = u.as_slice();
        s.iter().enumerate().all(|(i, &a)| s[i + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    /// `self ∪ K(u)`.
    pub fn fill_clique(&self, u: &VertexSet) -> Result<Graph> {
        self.fill_cliques(std::iter::once(u))
    }

    /// Fills every given set into a clique in one pass.
    pub fn fill_cliques<'a, I>(&self, sets: I) -> Result<Graph>
    where
        I: IntoIterator<Item = &'a VertexSet>,
    {
        let mut adj = self.adj.clone();
        let mut touched = false;
        for u in sets {
            self.check_set(u)?;
            let s = u.as_slice();
            for (i, &a) in s.iter().enumerate() {
                for &b in &s[i + 1..] {
                    if !self.has_edge(a, b) {
                        adj[a].push(b);
                        adj[b].push(a);
                        touched = true;
                    }
                }
            }
        }
        if !touched {
            return Ok(self.clone());
        }
        let mut g = Graph::from_raw_adjacency(adj);
        g.labels = self.labels.clone();
        Ok(g)
    }

    /// Adds the given edges; endpoints must be distinct and in range.
    pub fn with_edges<I>(&self, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = self.adj.clone();
        let n = self.n();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut g = Graph::from_raw_adjacency(adj);
        g.labels = self.labels.clone();
        Ok(g)
    }

    /// Removes one edge. Used to probe minimality of triangulations.
    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Graph {
        let mut g = self.clone();
        if let Ok(i) = g.adj[u].binary_search(&v) {
            g.adj[u].remove(i);
            let j = g.adj[v].binary_search(&u).expect("adjacency is symmetric");
            g.adj[v].remove(j);
            g.m -= 1;
        }
        g
    }

    /// `G[u]` renumbered to `0..|u|`, with a map from new ids back to ids of
    /// `self`. External labels are carried over.
    pub fn induced_subgraph(&self, u: &VertexSet) -> Result<(Graph, Vec<Vertex>)> {
        self.check_set(u)?;
        let map: Vec<Vertex> = u.as_slice().to_vec();
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let mut adj = Vec::with_capacity(map.len());
        let mut m2 = 0;
        for &v in &map {
            let row: Vec<Vertex> = self.adj[v].iter().filter(|&&w| local[w] != usize::MAX).map(|&w| local[w]).collect();
            m2 += row.len();
            adj.push(row);
        }
        let labels = map.iter().map(|&v| self.label(v)).collect();
        Ok((Graph { adj, m: m2 / 2, labels: Some(labels) }, map))
    }

    /// The graph with `v` deleted, plus the id map back to `self`.
    pub fn without_vertex(&self, v: Vertex) -> (Graph, Vec<Vertex>) {
        let rest = VertexSet::from_sorted((0..self.n()).filter(|&x| x != v).collect());
        self.induced_subgraph(&rest).expect("ids in range")
    }
}

/// Component membership of every vertex after deleting a vertex set.
///
/// Removed vertices get [`ComponentLabels::REMOVED`]. Components are numbered
/// in order of their smallest vertex.
#[derive(Clone, Debug)]
pub struct ComponentLabels {
    label: Vec<u32>,
    count: usize,
}

impl ComponentLabels {
    pub const REMOVED: u32 = u32::MAX;

    pub fn new(g: &Graph, removed: &VertexSet) -> Self {
        let n = g.n();
        const UNSEEN: u32 = u32::MAX - 1;
        let mut label = vec![UNSEEN; n];
        for v in removed {
            label[v] = Self::REMOVED;
        }
        let mut count = 0u32;
        let mut stack = Vec::new();
        for s in 0..n {
            if label[s] != UNSEEN {
                continue;
            }
            label[s] = count;
            stack.push(s);
            while let Some(x) = stack.pop() {
                for &y in g.neighbors(x) {
                    if label[y] == UNSEEN {
                        label[y] = count;
                        stack.push(y);
                    }
                }
            }
            count += 1;
        }
        ComponentLabels { label, count: count as usize }
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn of(&self, v: Vertex) -> Option<usize> {
        match self.label[v] {
            Self::REMOVED => None,
            c => Some(c as usize),
        }
    }

    /// True if the members of `s` outside the removed set fall into at least
    /// two different components.
    pub fn separates(&self, s: &VertexSet) -> bool {
        let mut first = None;
        for v in s {
            let c = self.label[v];
            if c == Self::REMOVED {
                continue;
            }
            match first {
                None => first = Some(c),
                Some(f) if f != c => return true,
                _ => {}
            }
        }
        false
    }

    pub fn into_sets(self) -> Vec<VertexSet> {
        let mut sets = vec![Vec::new(); self.count];
        for (v, &c) in self.label.iter().enumerate() {
            if c != Self::REMOVED {
                sets[c as usize].push(v);
            }
        }
        sets.into_iter().map(VertexSet::from_sorted).collect()
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// Graph from 1-based edges, the way the examples are written.
    pub fn g1(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().map(|&(u, v)| (u - 1, v - 1))).unwrap()
    }

    /// Vertex set from 1-based ids.
    pub fn s1(vs: &[usize]) -> VertexSet {
        VertexSet::new(vs.iter().map(|v| v - 1))
    }

    pub fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn neighborhood_examples() {
        let c4 = cycle(4);
        assert_eq!(c4.neighborhood(&s1(&[1])).unwrap(), s1(&[2, 4]));
        assert_eq!(c4.neighborhood(&s1(&[1, 3])).unwrap(), s1(&[2, 4]));
        assert_eq!(complete(4).neighborhood(&s1(&[1, 2])).unwrap(), s1(&[3, 4]));
        assert_eq!(c4.neighborhood(&VertexSet::singleton(7)), Err(Error::VertexOutOfRange { vertex: 7, n: 4 }));
    }

    #[test]
    fn components_examples() {
        assert_eq!(cycle(4).components(&s1(&[1, 3])).unwrap(), vec![s1(&[2]), s1(&[4])]);
        assert_eq!(cycle(6).components(&s1(&[1, 4])).unwrap(), vec![s1(&[2, 3]), s1(&[5, 6])]);
        assert_eq!(path(3).components(&VertexSet::empty()).unwrap(), vec![s1(&[1, 2, 3])]);
    }

    #[test]
    fn fill_clique_examples() {
        let c4 = cycle(4);
        let f = c4.fill_clique(&s1(&[2, 4])).unwrap();
        assert_eq!(f.m(), 5);
        assert!(f.has_edge(1, 3));
        assert_eq!(f.fill_clique(&s1(&[2, 4])).unwrap(), f);
        let k4 = complete(4);
        assert_eq!(k4.fill_clique(&s1(&[1, 2, 3])).unwrap(), k4);
        assert_eq!(cycle(6).fill_clique(&s1(&[1, 3, 5])).unwrap().m(), 9);
    }

    #[test]
    fn induced_subgraph_examples() {
        let (p, map) = cycle(4).induced_subgraph(&s1(&[1, 2, 3])).unwrap();
        assert_eq!(p.m(), 2);
        assert_eq!(map, vec![0, 1, 2]);
        assert!(p.has_edge(0, 1) && p.has_edge(1, 2) && !p.has_edge(0, 2));

        let (k3, map) = complete(4).induced_subgraph(&s1(&[1, 2, 4])).unwrap();
        assert_eq!(k3, complete(3).with_labels(vec![1, 2, 4]).unwrap());
        assert_eq!(map, vec![0, 1, 3]);

        let (two, _) = cycle(6).induced_subgraph(&s1(&[1, 4])).unwrap();
        assert_eq!((two.n(), two.m()), (2, 0));
        assert_eq!(two.labels(), Some(&[1, 4][..]));
    }

    #[test]
    fn clique_examples() {
        assert!(complete(4).is_clique(&s1(&[1, 2, 3])));
        assert!(!cycle(4).is_clique(&s1(&[1, 3])));
        assert!(cycle(4).is_clique(&VertexSet::empty()));
        assert!(cycle(4).is_clique(&s1(&[3])));
    }

    #[test]
    fn rejects_self_loops_and_merges_duplicates() {
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(matches!(Graph::from_edges(3, [(0, 3)]), Err(Error::VertexOutOfRange { .. })));
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn canonical_set_order() {
        let mut v = vec![s1(&[1, 2, 3]), s1(&[4, 5]), s1(&[2, 4]), s1(&[1, 3])];
        v.sort();
        assert_eq!(v, vec![s1(&[1, 3]), s1(&[2, 4]), s1(&[4, 5]), s1(&[1, 2, 3])]);
    }

    #[test]
    fn without_edge_restores_cycle() {
        let c4 = cycle(4);
        let f = c4.fill_clique(&s1(&[2, 4])).unwrap();
        assert_eq!(f.without_edge(1, 3), c4);
    }
}
