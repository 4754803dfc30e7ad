//! Full components, minimal separators, almost-cliques and crossing.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::hash::{Hash, Hasher};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{ComponentLabels, Graph, Vertex, VertexSet};

/// Which procedure produced a separator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Origin {
    Heuristic,
    Standard,
    Enumeration,
    ChordalExtraction,
}

/// A separator identified by its vertex set.
///
/// Equality, hashing and ordering look at the vertex set only; the cached
/// apexes belong to the graph they were computed against.
#[derive(Clone, Debug)]
pub struct Separator {
    pub vertices: VertexSet,
    pub apexes: Option<VertexSet>,
    pub origin: Origin,
}

impl Separator {
    pub fn new(vertices: VertexSet, origin: Origin) -> Self {
        Separator { vertices, apexes: None, origin }
    }

    /// Separator with its apex set computed against `g`.
    pub fn annotated(g: &Graph, vertices: VertexSet, origin: Origin) -> Self {
        let apexes = almost_clique_apexes(g, &vertices);
        Separator { vertices, apexes: Some(apexes), origin }
    }

    /// Recomputes the apex cache for `g`.
    pub fn annotate(&mut self, g: &Graph) {
        self.apexes = Some(almost_clique_apexes(g, &self.vertices));
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

impl PartialEq for Separator {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
    }
}

impl Eq for Separator {}

impl Hash for Separator {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.vertices.hash(state);
    }
}

impl Ord for Separator {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vertices.cmp(&other.vertices)
    }
}

impl PartialOrd for Separator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn nonempty(g: &Graph, s: &VertexSet) -> Result<()> {
    g.check_set(s)?;
    if s.is_empty() {
        return Err(Error::InvalidInput("empty separator".into()));
    }
    Ok(())
}

/// Components `C` of `g - s` with `N(C) = s`, ordered by smallest vertex.
pub fn full_components(g: &Graph, s: &VertexSet) -> Result<Vec<VertexSet>> {
    nonempty(g, s)?;
    let labels = ComponentLabels::new(g, s);
    let full = full_component_flags(g, s, &labels);
    Ok(labels.into_sets().into_iter().zip(full).filter_map(|(c, is_full)| is_full.then_some(c)).collect())
}

/// For each component of `g - s`, whether it touches every vertex of `s`.
fn full_component_flags(g: &Graph, s: &VertexSet, labels: &ComponentLabels) -> Vec<bool> {
    let k = labels.count();
    let mut touches = vec![0usize; k];
    let mut stamp = vec![usize::MAX; k];
    for (i, v) in s.iter().enumerate() {
        for &w in g.neighbors(v) {
            if let Some(c) = labels.of(w) {
                if stamp[c] != i {
                    stamp[c] = i;
                    touches[c] += 1;
                }
            }
        }
    }
    touches.into_iter().map(|t| t == s.len()).collect()
}

fn count_full_components(g: &Graph, s: &VertexSet) -> usize {
    let labels = ComponentLabels::new(g, s);
    full_component_flags(g, s, &labels).into_iter().filter(|&f| f).count()
}

/// `s` has at least two full components.
pub fn is_minimal_separator(g: &Graph, s: &VertexSet) -> Result<bool> {
    nonempty(g, s)?;
    if s.len() >= g.n() {
        return Ok(false);
    }
    Ok(count_full_components(g, s) >= 2)
}

/// Every `q` in `s` such that `s - q` is a clique of `g`.
///
/// Empty exactly when `s` is not an almost-clique; all of `s` when `s` is a
/// clique.
pub fn almost_clique_apexes(g: &Graph, s: &VertexSet) -> VertexSet {
    // A vertex is an apex iff it covers every non-edge inside s.
    let verts = s.as_slice();
    let mut candidates: Option<Vec<Vertex>> = None;
    for (i, &a) in verts.iter().enumerate() {
        for &b in &verts[i + 1..] {
            if g.has_edge(a, b) {
                continue;
            }
            let next: Vec<Vertex> = match &candidates {
                None => vec![a, b],
                Some(c) => c.iter().copied().filter(|&x| x == a || x == b).collect(),
            };
            if next.is_empty() {
                return VertexSet::empty();
            }
            candidates = Some(next);
        }
    }
    match candidates {
        None => s.clone(),
        Some(c) => VertexSet::new(c),
    }
}

pub fn is_almost_clique(g: &Graph, s: &VertexSet) -> bool {
    !almost_clique_apexes(g, s).is_empty()
}

/// `r` separates some pair of vertices of `s`.
///
/// Vertices of `s` that lie in `r` are never counted as separated.
pub fn crosses(g: &Graph, r: &VertexSet, s: &VertexSet) -> Result<bool> {
    nonempty(g, r)?;
    nonempty(g, s)?;
    Ok(ComponentLabels::new(g, r).separates(s))
}

/// Sorts by (size, lexicographic) and drops later duplicates.
pub fn canonical_order(mut seps: Vec<Separator>) -> Vec<Separator> {
    seps.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    let mut seen = HashSet::new();
    seps.retain(|s| seen.insert(s.vertices.clone()));
    seps
}

/// A separator together with the component labelling of `g - s`, so that
/// crossing queries against it cost `O(|other|)`.
#[derive(Clone, Debug)]
pub struct LabelledSeparator {
    pub separator: Separator,
    labels: ComponentLabels,
}

impl LabelledSeparator {
    pub fn new(g: &Graph, separator: Separator) -> Self {
        let labels = ComponentLabels::new(g, &separator.vertices);
        LabelledSeparator { separator, labels }
    }

    /// Whether this separator separates two vertices of `s`.
    pub fn crosses(&self, s: &VertexSet) -> bool {
        self.labels.separates(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{complete, cycle, g1, path, s1};

    #[test]
    fn full_component_examples() {
        assert_eq!(full_components(&cycle(4), &s1(&[1, 3])).unwrap(), vec![s1(&[2]), s1(&[4])]);
        assert_eq!(full_components(&cycle(6), &s1(&[1, 3])).unwrap(), vec![s1(&[2]), s1(&[4, 5, 6])]);
        assert_eq!(full_components(&path(3), &s1(&[1])).unwrap(), vec![s1(&[2, 3])]);
        assert!(full_components(&path(3), &VertexSet::empty()).is_err());
    }

    #[test]
    fn minimal_separator_examples() {
        assert!(is_minimal_separator(&cycle(4), &s1(&[1, 3])).unwrap());
        assert!(is_minimal_separator(&path(3), &s1(&[2])).unwrap());
        assert!(!is_minimal_separator(&complete(4), &s1(&[1, 2])).unwrap());
        assert!(!is_minimal_separator(&path(3), &s1(&[1])).unwrap());
        assert!(!is_minimal_separator(&path(3), &s1(&[1, 2, 3])).unwrap());
    }

    #[test]
    fn apex_examples() {
        assert_eq!(almost_clique_apexes(&cycle(4), &s1(&[2, 4])), s1(&[2, 4]));
        assert_eq!(almost_clique_apexes(&cycle(4), &s1(&[3])), s1(&[3]));
        assert_eq!(almost_clique_apexes(&cycle(6), &s1(&[1, 3, 5])), VertexSet::empty());
        // K4 minus edge {1,2}: either endpoint is an apex; {1,2,3,4} minus 3 is not a clique.
        let g = g1(4, &[(1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(almost_clique_apexes(&g, &s1(&[1, 2, 3, 4])), s1(&[1, 2]));
        assert_eq!(almost_clique_apexes(&complete(4), &s1(&[1, 2, 3])), s1(&[1, 2, 3]));
    }

    #[test]
    fn crossing_examples() {
        let c4 = cycle(4);
        assert!(crosses(&c4, &s1(&[1, 3]), &s1(&[2, 4])).unwrap());
        let c6 = cycle(6);
        assert!(!crosses(&c6, &s1(&[1, 4]), &s1(&[1, 3])).unwrap());
        assert!(!crosses(&c6, &s1(&[1, 3]), &s1(&[1, 4])).unwrap());
        // A clique is never separated.
        assert!(!crosses(&c6, &s1(&[1, 4]), &s1(&[2, 3])).unwrap());
    }

    #[test]
    fn canonical_order_examples() {
        let mk = |v: &[usize]| Separator::new(s1(v), Origin::Enumeration);
        let ids = |v: Vec<Separator>| v.into_iter().map(|s| s.vertices).collect::<Vec<_>>();
        assert_eq!(ids(canonical_order(vec![mk(&[2, 4]), mk(&[1, 3])])), vec![s1(&[1, 3]), s1(&[2, 4])]);
        assert_eq!(ids(canonical_order(vec![mk(&[1, 3]), mk(&[1, 3])])), vec![s1(&[1, 3])]);
        assert_eq!(ids(canonical_order(vec![mk(&[1, 2, 3]), mk(&[4, 5])])), vec![s1(&[4, 5]), s1(&[1, 2, 3])]);
    }

    #[test]
    fn canonical_order_keeps_first_duplicate() {
        let a = Separator::new(s1(&[1, 3]), Origin::Heuristic);
        let b = Separator::new(s1(&[1, 3]), Origin::Standard);
        let out = canonical_order(vec![a, b]);
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].origin, Origin::Heuristic);
    }
}
