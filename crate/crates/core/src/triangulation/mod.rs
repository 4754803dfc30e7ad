//! Chordal graphs, elimination orderings and minimal triangulations.

mod chordal;
mod elimination;
mod mcsm;
mod minimal;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use chordal::{
    clique_tree, is_chordal, is_perfect_elimination_order, mcs_order, minimal_separators_chordal, peo, CliqueTree,
};
pub use elimination::{eliminate, EliminationRun, FillRecord, Strategy};
pub use mcsm::mcs_m;
pub(crate) use mcsm::mcs_m_fill;
pub use minimal::{minimal_separators_within, minimalize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Md,
    Mf,
    Maf,
    Mmd,
    Mmf,
    Mmaf,
    Mcsm,
}

impl Method {
    pub const ALL: [Method; 7] =
        [Method::Md, Method::Mf, Method::Maf, Method::Mmd, Method::Mmf, Method::Mmaf, Method::Mcsm];

    pub fn name(self) -> &'static str {
        match self {
            Method::Md => "md",
            Method::Mf => "mf",
            Method::Maf => "maf",
            Method::Mmd => "mmd",
            Method::Mmf => "mmf",
            Method::Mmaf => "mmaf",
            Method::Mcsm => "mcsm",
        }
    }

    /// Whether the method guarantees a minimal triangulation.
    pub fn is_minimal(self) -> bool {
        matches!(self, Method::Mmd | Method::Mmf | Method::Mmaf | Method::Mcsm)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidInput(format!("unknown triangulation method {s:?}")))
    }
}

/// A chordal supergraph `h` of `base` on the same vertices.
#[derive(Clone, Debug)]
pub struct Triangulation {
    pub base: Graph,
    pub h: Graph,
    pub method: Method,
    /// Edges of `h` missing from `base`, sorted, as `(u, v)` with `u < v`.
    pub fill_edges: Vec<(Vertex, Vertex)>,
    pub minimal_claimed: bool,
}

impl Triangulation {
    pub fn new(base: &Graph, h: Graph, method: Method, minimal_claimed: bool) -> Self {
        let fill_edges = fill_edges(base, &h);
        Triangulation { base: base.clone(), h, method, fill_edges, minimal_claimed }
    }

    pub fn clique_tree(&self) -> Result<CliqueTree> {
        clique_tree(&self.h)
    }
}

fn fill_edges(base: &Graph, h: &Graph) -> Vec<(Vertex, Vertex)> {
    h.edges().filter(|&(u, v)| !base.has_edge(u, v)).collect()
}

/// Triangulates a connected graph with the given method.
pub fn triangulate(g: &Graph, method: Method) -> Result<Triangulation> {
    let run_plain = |s: Strategy| -> Result<Triangulation> {
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let run = eliminate(g, s)?;
        Ok(Triangulation::new(g, run.h, method, false))
    };
    match method {
        Method::Md => run_plain(Strategy::MinDegree),
        Method::Mf => run_plain(Strategy::MinFill),
        Method::Maf => run_plain(Strategy::MinAverageFill),
        Method::Mmd => minimalize(g, Strategy::MinDegree),
        Method::Mmf => minimalize(g, Strategy::MinFill),
        Method::Mmaf => minimalize(g, Strategy::MinAverageFill),
        Method::Mcsm => mcs_m(g),
    }
}

/// `t.h` is a minimal triangulation of `g`: chordal, a supergraph of `g` on
/// the same vertices, and deleting any single fill edge breaks chordality.
pub fn verify_minimal(g: &Graph, t: &Triangulation) -> bool {
    let h = &t.h;
    if h.n() != g.n() || !g.edges().all(|(u, v)| h.has_edge(u, v)) || !is_chordal(h) {
        return false;
    }
    fill_edges(g, h).into_iter().all(|(u, v)| !is_chordal(&h.without_edge(u, v)))
}

/// Every fill edge of the chordal graph `h` over `g` is the unique chord of
/// some 4-cycle, i.e. its endpoints have two non-adjacent common neighbors.
/// For chordal `h` this is equivalent to minimality.
pub fn fill_edges_are_unique_chords(g: &Graph, h: &Graph) -> bool {
    h.edges().filter(|&(u, v)| !g.has_edge(u, v)).all(|(u, v)| {
        let common: Vec<Vertex> = h.neighbors(u).iter().copied().filter(|&w| h.has_edge(v, w)).collect();
        common.iter().enumerate().any(|(i, &a)| common[i + 1..].iter().any(|&b| !h.has_edge(a, b)))
    })
}
