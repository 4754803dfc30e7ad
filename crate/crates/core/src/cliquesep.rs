//! Clique minimal separators and the decomposition into atoms.
//!
//! Both are read off a single MCS-M triangulation `H`: the clique minimal
//! separators of `G` are exactly the minimal separators of `H` that are
//! cliques in `G`, and the atoms are the unions of clique-tree bags that stay
//! connected once the tree edges carrying those separators are cut.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::separators::{Origin, Separator};
use crate::treedec::union_find_groups;
use crate::triangulation::{clique_tree, mcs_m_fill, CliqueTree};

/// Tree of atoms; `edge_labels[i]` is the clique minimal separator shared by
/// the two atoms of `tree_edges[i]`. For disconnected input this is a forest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub atoms: Vec<VertexSet>,
    pub tree_edges: Vec<(usize, usize)>,
    pub edge_labels: Vec<Separator>,
}

impl Decomposition {
    pub fn num_atoms(&self) -> usize {
        self.atoms.len()
    }

    /// Size of the largest atom.
    pub fn max_atom(&self) -> usize {
        self.atoms.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// Atoms sorted canonically, for order-independent comparison.
    pub fn sorted_atoms(&self) -> Vec<VertexSet> {
        let mut a = self.atoms.clone();
        a.sort();
        a
    }

    /// Re-indexes atoms into canonical order.
    fn canonicalize(mut self) -> Self {
        let mut idx: Vec<usize> = (0..self.atoms.len()).collect();
        idx.sort_by(|&a, &b| self.atoms[a].cmp(&self.atoms[b]));
        let mut new_of = vec![0; idx.len()];
        for (new, &old) in idx.iter().enumerate() {
            new_of[old] = new;
        }
        self.atoms = idx.iter().map(|&i| self.atoms[i].clone()).collect();
        for e in self.tree_edges.iter_mut() {
            let (a, b) = (new_of[e.0], new_of[e.1]);
            *e = (a.min(b), a.max(b));
        }
        self
    }

    /// Maps vertex ids through `map` (local id -> id in a larger graph).
    pub(crate) fn relabel(self, map: &[usize]) -> Self {
        let conv = |s: &VertexSet| VertexSet::new(s.iter().map(|v| map[v]));
        Decomposition {
            atoms: self.atoms.iter().map(conv).collect(),
            tree_edges: self.tree_edges,
            edge_labels: self
                .edge_labels
                .into_iter()
                .map(|s| Separator { vertices: conv(&s.vertices), apexes: None, origin: s.origin })
                .collect(),
        }
    }

    /// Disjoint union of decompositions over disjoint vertex sets.
    pub(crate) fn forest(parts: Vec<Decomposition>) -> Self {
        let mut out = Decomposition { atoms: Vec::new(), tree_edges: Vec::new(), edge_labels: Vec::new() };
        for p in parts {
            let off = out.atoms.len();
            out.atoms.extend(p.atoms);
            out.tree_edges.extend(p.tree_edges.into_iter().map(|(a, b)| (a + off, b + off)));
            out.edge_labels.extend(p.edge_labels);
        }
        out.canonicalize()
    }
}

fn mcs_m_clique_tree(g: &Graph) -> CliqueTree {
    let (_, fill) = mcs_m_fill(g);
    let h = g.with_edges(fill).expect("fill edges are in range");
    clique_tree(&h).expect("MCS-M output is chordal")
}

/// Clique minimal separators of any graph, connected or not.
pub(crate) fn clique_minimal_separator_sets(g: &Graph) -> Vec<VertexSet> {
    if g.n() == 0 {
        return Vec::new();
    }
    let tree = mcs_m_clique_tree(g);
    let mut seps: Vec<VertexSet> = tree.edge_separators.into_iter().filter(|s| g.is_clique(s)).collect();
    seps.sort();
    seps.dedup();
    seps
}

/// All clique minimal separators of a connected graph, in canonical order.
pub fn clique_minimal_separators(g: &Graph) -> Result<Vec<Separator>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(clique_minimal_separator_sets(g)
        .into_iter()
        .map(|s| Separator::annotated(g, s, Origin::ChordalExtraction))
        .collect())
}

/// Clique minimal separator decomposition of a connected graph.
pub fn decompose(g: &Graph) -> Result<Decomposition> {
    if g.n() == 0 {
        return Err(Error::InvalidInput("cannot decompose an empty graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let tree = mcs_m_clique_tree(g);
    let clique_edge: Vec<bool> = tree.edge_separators.iter().map(|s| g.is_clique(s)).collect();
    let group = union_find_groups(
        tree.bags.len(),
        tree.tree_edges.iter().zip(&clique_edge).filter(|(_, &c)| !c).map(|(&e, _)| e),
    );
    let mut atom_of_root = BTreeMap::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    for (bag, root) in tree.bags.iter().zip(&group) {
        let idx = *atom_of_root.entry(*root).or_insert_with(|| {
            members.push(Vec::new());
            members.len() - 1
        });
        members[idx].extend(bag.iter());
    }
    let atoms = members.into_iter().map(VertexSet::new).collect();
    let mut tree_edges = Vec::new();
    let mut edge_labels = Vec::new();
    for ((&(a, b), sep), _) in tree.tree_edges.iter().zip(tree.edge_separators).zip(&clique_edge).filter(|(_, &c)| c) {
        tree_edges.push((atom_of_root[&group[a]], atom_of_root[&group[b]]));
        edge_labels.push(Separator::annotated(g, sep, Origin::ChordalExtraction));
    }
    Ok(Decomposition { atoms, tree_edges, edge_labels }.canonicalize())
}

/// Which clique minimal separator the recursive decomposition splits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitChoice {
    First,
    Last,
}

/// Decomposition by recursive splitting: pick a clique minimal separator `S`,
/// recurse on `G[C ∪ N(C)]` for every component `C` of `G - S`, and join the
/// pieces. Slower than [`decompose`]; kept as an independent route to the
/// same atoms.
pub fn decompose_recursive(g: &Graph, choice: SplitChoice) -> Result<Decomposition> {
    if g.n() == 0 {
        return Err(Error::InvalidInput("cannot decompose an empty graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(split(g, &g.vertices(), choice)?.canonicalize())
}

fn split(g: &Graph, part: &VertexSet, choice: SplitChoice) -> Result<Decomposition> {
    let (sub, map) = g.induced_subgraph(part)?;
    let seps = clique_minimal_separator_sets(&sub);
    let chosen = match choice {
        SplitChoice::First => seps.first(),
        SplitChoice::Last => seps.last(),
    };
    let Some(local_sep) = chosen else {
        return Ok(Decomposition { atoms: vec![part.clone()], tree_edges: Vec::new(), edge_labels: Vec::new() });
    };
    let to_global = |s: &VertexSet| VertexSet::new(s.iter().map(|v| map[v]));
    let sep = to_global(local_sep);

    let mut pieces = Vec::new();
    let mut main = None;
    for comp in sub.components(local_sep)? {
        let nb = sub.neighborhood(&comp)?;
        if main.is_none() && nb.len() == local_sep.len() {
            main = Some(pieces.len());
        }
        pieces.push((to_global(&comp.union(&nb)), to_global(&nb)));
    }
    let main = main.ok_or_else(|| Error::Internal(format!("{sep:?} has no full component")))?;

    let mut out = split(g, &pieces[main].0, choice)?;
    for (i, (piece, adhesion)) in pieces.iter().enumerate() {
        if i == main {
            continue;
        }
        let d = split(g, piece, choice)?;
        let near = out
            .atoms
            .iter()
            .position(|a| adhesion.is_subset(a))
            .ok_or_else(|| Error::Internal(format!("no atom holds clique {adhesion:?}")))?;
        let off = out.atoms.len();
        let far = d
            .atoms
            .iter()
            .position(|a| adhesion.is_subset(a))
            .ok_or_else(|| Error::Internal(format!("no atom holds clique {adhesion:?}")))?;
        out.atoms.extend(d.atoms);
        out.tree_edges.extend(d.tree_edges.into_iter().map(|(a, b)| (a + off, b + off)));
        out.edge_labels.extend(d.edge_labels);
        out.tree_edges.push((near, far + off));
        out.edge_labels.push(Separator::annotated(g, adhesion.clone(), Origin::ChordalExtraction));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{complete, cycle, g1, path, s1};
    use crate::treedec::check_tree_decomposition;

    fn butterfly() -> Graph {
        g1(5, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)])
    }

    fn sets(v: Vec<Separator>) -> Vec<VertexSet> {
        v.into_iter().map(|s| s.vertices).collect()
    }

    #[test]
    fn clique_minimal_separator_examples() {
        assert_eq!(sets(clique_minimal_separators(&butterfly()).unwrap()), vec![s1(&[3])]);
        assert!(clique_minimal_separators(&cycle(4)).unwrap().is_empty());
        assert_eq!(sets(clique_minimal_separators(&path(3)).unwrap()), vec![s1(&[2])]);
    }

    #[test]
    fn decomposition_examples() {
        let d = decompose(&butterfly()).unwrap();
        assert_eq!(d.atoms, vec![s1(&[1, 2, 3]), s1(&[3, 4, 5])]);
        assert_eq!(d.tree_edges, vec![(0, 1)]);
        assert_eq!(sets(d.edge_labels), vec![s1(&[3])]);

        let d = decompose(&complete(4)).unwrap();
        assert_eq!(d.atoms, vec![s1(&[1, 2, 3, 4])]);
        assert!(d.tree_edges.is_empty());

        let g = cycle(4).fill_clique(&s1(&[2, 4])).unwrap();
        let d = decompose(&g).unwrap();
        assert_eq!(d.atoms, vec![s1(&[1, 2, 4]), s1(&[2, 3, 4])]);
        assert_eq!(sets(d.edge_labels.clone()), vec![s1(&[2, 4])]);
        assert!(check_tree_decomposition(&g, &d.atoms, &d.tree_edges).is_ok());
    }

    #[test]
    fn recursive_route_agrees() {
        let g =
            g1(8, &[(1, 2), (2, 3), (3, 4), (4, 1), (1, 3), (3, 5), (5, 6), (6, 3), (6, 7), (7, 8), (8, 6), (2, 5)]);
        let fast = decompose(&g).unwrap();
        for choice in [SplitChoice::First, SplitChoice::Last] {
            let slow = decompose_recursive(&g, choice).unwrap();
            assert_eq!(slow.atoms, fast.atoms);
            assert!(check_tree_decomposition(&g, &slow.atoms, &slow.tree_edges).is_ok());
        }
        assert!(check_tree_decomposition(&g, &fast.atoms, &fast.tree_edges).is_ok());
    }

    #[test]
    fn disconnected_rejected() {
        let g = g1(4, &[(1, 2), (3, 4)]);
        assert_eq!(decompose(&g), Err(Error::Disconnected));
        assert_eq!(clique_minimal_separators(&g).unwrap_err(), Error::Disconnected);
    }
}
