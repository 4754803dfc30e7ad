#![allow(dead_code)]

use std::collections::BTreeSet;

use acsep_core::generate::connected_gnp;
use acsep_core::{Graph, Separator, VertexSet};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const PROBS: [f64; 3] = [0.2, 0.35, 0.5];

/// A connected `G(n, p)` draw; `p` is raised until a connected graph turns up.
pub fn connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut p = p;
    loop {
        if let Some(g) = connected_gnp(n, p, rng, 200) {
            return g;
        }
        p = (p + 0.05).min(1.0);
    }
}

/// Graph with `n` uniform in `lo..=hi` and `p` cycling through [`PROBS`].
pub fn corpus_graph(rng: &mut ChaCha8Rng, i: usize, lo: usize, hi: usize) -> Graph {
    let n = rng.gen_range(lo..=hi);
    connected(rng, n, PROBS[i % PROBS.len()])
}

pub fn sets(seps: &[Separator]) -> BTreeSet<VertexSet> {
    seps.iter().map(|s| s.vertices.clone()).collect()
}

pub fn edges1(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().map(|(u, v)| (u + 1, v + 1)).collect()
}

use proptest::prelude::*;

fn build(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Random graphs on `lo..=hi` vertices with edge density drawn per graph.
pub fn graphs(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi, 0.1f64..0.7).prop_flat_map(|(n, p)| {
        proptest::collection::vec(proptest::bool::weighted(p), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| build(n, &bits))
    })
}

/// Like [`graphs`], with components chained by one edge each so the result
/// is connected.
pub fn connected_graphs(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    graphs(lo.max(1), hi).prop_map(|g| {
        let comps = g.components(&VertexSet::empty()).unwrap();
        let links: Vec<(usize, usize)> =
            comps.windows(2).map(|w| (w[0].first().unwrap(), w[1].first().unwrap())).collect();
        g.with_edges(links).unwrap()
    })
}
