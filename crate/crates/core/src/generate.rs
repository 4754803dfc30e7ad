//! Random graphs for tests and benchmarks.

use rand::Rng;

use crate::graph::Graph;

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated edges are in range")
}

/// `G(n, p)` conditioned on connectivity, by rejection. Gives up and returns
/// `None` after `attempts` draws.
pub fn connected_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R, attempts: usize) -> Option<Graph> {
    (0..attempts).map(|_| gnp(n, p, rng)).find(|g| n > 0 && g.is_connected())
}
