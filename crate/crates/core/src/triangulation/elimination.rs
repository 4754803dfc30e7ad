//! The elimination game with minimum degree, minimum fill and minimum
//! average fill vertex selection.

use std::cmp::Ordering;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Strategy {
    /// Minimum degree.
    MinDegree,
    /// Minimum number of missing edges in the neighborhood.
    MinFill,
    /// Minimum fill divided by degree; isolated vertices score 0.
    MinAverageFill,
}

impl Strategy {
    fn needs_fill(self) -> bool {
        !matches!(self, Strategy::MinDegree)
    }
}

/// One elimination step: `vertex` was eliminated with current neighborhood
/// `neighborhood`, which was filled into a clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FillRecord {
    pub step: usize,
    pub vertex: Vertex,
    pub neighborhood: VertexSet,
    /// The neighborhood was already a clique, so nothing was added.
    pub was_clique: bool,
}

#[derive(Clone, Debug)]
pub struct EliminationRun {
    pub order: Vec<Vertex>,
    pub fill_records: Vec<FillRecord>,
    /// Input graph plus every fill edge; `order` is a PEO of it.
    pub h: Graph,
    pub fill_edges: Vec<(Vertex, Vertex)>,
}

impl EliminationRun {
    pub fn fill_count(&self) -> usize {
        self.fill_edges.len()
    }
}

#[derive(Clone, Copy, Debug)]
struct Score {
    degree: usize,
    fill: usize,
}

impl Score {
    fn cmp(&self, other: &Score, strategy: Strategy) -> Ordering {
        match strategy {
            Strategy::MinDegree => self.degree.cmp(&other.degree),
            Strategy::MinFill => self.fill.cmp(&other.fill),
            Strategy::MinAverageFill => {
                // fill/degree compared by cross multiplication; degree 0 scores 0
                let (f1, d1) = if self.degree == 0 { (0, 1) } else { (self.fill, self.degree) };
                let (f2, d2) = if other.degree == 0 { (0, 1) } else { (other.fill, other.degree) };
                (f1 as u128 * d2 as u128).cmp(&(f2 as u128 * d1 as u128))
            }
        }
    }
}

struct Board {
    rows: Vec<FixedBitSet>,
    alive: Vec<bool>,
}

impl Board {
    fn score(&self, v: Vertex, with_fill: bool) -> Score {
        let row = &self.rows[v];
        let degree = row.count_ones(..);
        let fill = if with_fill && degree > 1 {
            let inner: usize = row.ones().map(|u| self.rows[u].intersection_count(row)).sum();
            degree * (degree - 1) / 2 - inner / 2
        } else {
            0
        };
        Score { degree, fill }
    }
}

/// Runs the elimination game on `g`, picking at each step the live vertex
/// with the smallest score (lowest id on ties).
pub fn eliminate(g: &Graph, strategy: Strategy) -> Result<EliminationRun> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidInput("cannot eliminate an empty graph".into()));
    }
    let with_fill = strategy.needs_fill();
    let rows = (0..n)
        .map(|v| {
            let mut b = FixedBitSet::with_capacity(n);
            b.extend(g.neighbors(v).iter().copied());
            b
        })
        .collect();
    let mut board = Board { rows, alive: vec![true; n] };
    let mut scores: Vec<Score> = (0..n).map(|v| board.score(v, with_fill)).collect();
    let mut dirty = FixedBitSet::with_capacity(n);

    let mut order = Vec::with_capacity(n);
    let mut fill_records = Vec::with_capacity(n);
    let mut fill_edges = Vec::new();

    for step in 0..n {
        let mut best: Option<Vertex> = None;
        for v in (0..n).filter(|&v| board.alive[v]) {
            match best {
                Some(b) if scores[v].cmp(&scores[b], strategy) != Ordering::Less => {}
                _ => best = Some(v),
            }
        }
        let v = best.expect("a live vertex remains");

        let nb: Vec<Vertex> = board.rows[v].ones().collect();
        let mut added = false;
        dirty.clear();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if !board.rows[a].contains(b) {
                    board.rows[a].insert(b);
                    board.rows[b].insert(a);
                    fill_edges.push((a.min(b), a.max(b)));
                    added = true;
                    if with_fill {
                        dirty.union_with(&board.rows[a]);
                        dirty.union_with(&board.rows[b]);
                    }
                }
            }
        }
        for &a in &nb {
            board.rows[a].set(v, false);
            dirty.insert(a);
        }
        board.alive[v] = false;
        dirty.set(v, false);
        for w in dirty.ones() {
            scores[w] = board.score(w, with_fill);
        }

        order.push(v);
        fill_records.push(FillRecord { step, vertex: v, neighborhood: VertexSet::from_sorted(nb), was_clique: !added });
    }

    let h = g.with_edges(fill_edges.iter().copied())?;
    Ok(EliminationRun { order, fill_records, h, fill_edges })
}
