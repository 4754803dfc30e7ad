//! MCS-M: maximum cardinality search that adds fill along low-weight paths,
//! producing a minimal triangulation directly.

use std::collections::BTreeSet;

use super::{fill_edges_are_unique_chords, Method, Triangulation};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Numbering order (first numbered first) and fill edges of MCS-M on `g`.
///
/// Works on disconnected graphs too; the search never leaves a component.
pub(crate) fn mcs_m_fill(g: &Graph) -> (Vec<Vertex>, Vec<(Vertex, Vertex)>) {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut buckets: Vec<BTreeSet<Vertex>> = vec![BTreeSet::new(); n + 1];
    buckets[0].extend(0..n);
    let mut top = 0;

    let mut reached = vec![0u32; n];
    let mut stamp = 0u32;
    let mut reach: Vec<Vec<Vertex>> = vec![Vec::new(); n + 1];
    let mut raised = Vec::new();
    let mut order = Vec::with_capacity(n);
    let mut fill = Vec::new();

    for _ in 0..n {
        while buckets[top].is_empty() {
            top -= 1;
        }
        let v = buckets[top].pop_first().expect("non-empty bucket");
        numbered[v] = true;
        order.push(v);

        stamp += 1;
        reached[v] = stamp;
        raised.clear();
        for &u in g.neighbors(v) {
            if !numbered[u] {
                reached[u] = stamp;
                reach[weight[u]].push(u);
                raised.push(u);
            }
        }
        // u is raised when some path v..u has all inner vertices lighter than u
        for level in 0..=top {
            while let Some(x) = reach[level].pop() {
                for &z in g.neighbors(x) {
                    if numbered[z] || reached[z] == stamp {
                        continue;
                    }
                    reached[z] = stamp;
                    if weight[z] > level {
                        reach[weight[z]].push(z);
                        raised.push(z);
                    } else {
                        reach[level].push(z);
                    }
                }
            }
        }
        for &z in &raised {
            buckets[weight[z]].remove(&z);
            weight[z] += 1;
            buckets[weight[z]].insert(z);
            top = top.max(weight[z]);
            if !g.has_edge(v, z) {
                fill.push((v.min(z), v.max(z)));
            }
        }
    }
    fill.sort_unstable();
    (order, fill)
}

/// Minimal triangulation of a connected graph by MCS-M, ties broken toward
/// the lowest vertex id.
pub fn mcs_m(g: &Graph) -> Result<Triangulation> {
    if g.n() == 0 {
        return Err(Error::InvalidInput("cannot triangulate an empty graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let (_, fill) = mcs_m_fill(g);
    let h = g.with_edges(fill)?;
    let claimed = fill_edges_are_unique_chords(g, &h);
    Ok(Triangulation::new(g, h, Method::Mcsm, claimed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{cycle, g1, s1};
    use crate::triangulation::{is_chordal, verify_minimal};

    #[test]
    fn c4_gets_the_chord_at_2_4() {
        let t = mcs_m(&cycle(4)).unwrap();
        assert_eq!(t.fill_edges, vec![(1, 3)]);
        assert_eq!(t.h, cycle(4).fill_clique(&s1(&[2, 4])).unwrap());
        assert!(t.minimal_claimed);
    }

    #[test]
    fn tree_gets_no_fill() {
        let tree = g1(7, &[(1, 2), (1, 3), (2, 4), (2, 5), (3, 6), (6, 7)]);
        let t = mcs_m(&tree).unwrap();
        assert!(t.fill_edges.is_empty());
        assert_eq!(t.h, tree);
    }

    #[test]
    fn c6_gets_three_chords() {
        let t = mcs_m(&cycle(6)).unwrap();
        assert_eq!(t.fill_edges.len(), 3);
        assert!(is_chordal(&t.h));
        assert!(verify_minimal(&cycle(6), &t));
    }

    #[test]
    fn numbering_order_is_reverse_peo() {
        let g = cycle(7);
        let (mut order, fill) = mcs_m_fill(&g);
        let h = g.with_edges(fill).unwrap();
        order.reverse();
        assert!(crate::triangulation::is_perfect_elimination_order(&h, &order));
    }
}
