//! Listing almost-clique minimal separators and the preprocessing loop that
//! fills them.
//!
//! Three listers are provided:
//!
//! * [`heuristic_list`]: the almost-clique minimal separators of `G` among the
//!   minimal separators of one minimal triangulation `H` (MMAF by default).
//!   These are pairwise non-crossing because the minimal separators of a
//!   chordal graph are.
//! * [`standard_list`]: for every vertex `v`, the clique minimal separators
//!   `K` of `G - v` give candidates `K + v`; a candidate is adopted when it is
//!   a minimal separator of `G` crossing nothing adopted so far.
//! * [`all_acs`]: the same candidates without the crossing filter, i.e. every
//!   almost-clique minimal separator of `G`.
//!
//! [`greedy_max`] extends a non-crossing family to a maximal one and
//! [`preprocess`] repeats list-and-fill until nothing changes, then splits the
//! filled graph into atoms.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::cliquesep::{clique_minimal_separator_sets, decompose, Decomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::report::{ceil_ms, BenchRecord};
use crate::separators::{canonical_order, is_minimal_separator, LabelledSeparator, Origin, Separator};
use crate::triangulation::{minimal_separators_chordal, triangulate, Method, Triangulation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ListMethod {
    Heuristic,
    Standard,
    All,
    MaxExpanded,
}

#[derive(Clone, Debug)]
pub struct AcsResult {
    pub separators: Vec<Separator>,
    pub method: ListMethod,
    pub triangulation_method: Option<Method>,
    pub elapsed: Duration,
}

impl AcsResult {
    pub fn len(&self) -> usize {
        self.separators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.separators.is_empty()
    }

    /// Wall time rounded up to whole milliseconds.
    pub fn elapsed_ms(&self) -> u64 {
        ceil_ms(self.elapsed)
    }

    pub fn vertex_sets(&self) -> Vec<VertexSet> {
        self.separators.iter().map(|s| s.vertices.clone()).collect()
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// Almost-clique minimal separators of `g` that are minimal separators of
/// the triangulation `t`.
pub fn acs_from_triangulation(g: &Graph, t: &Triangulation) -> Result<AcsResult> {
    let start = Instant::now();
    if t.h.n() != g.n() {
        return Err(Error::InvalidInput("triangulation has a different vertex count".into()));
    }
    let mut out = Vec::new();
    for sep in minimal_separators_chordal(&t.h)? {
        let annotated = Separator::annotated(g, sep.vertices, Origin::Heuristic);
        if annotated.apexes.as_ref().is_some_and(VertexSet::is_empty) {
            continue;
        }
        if !is_minimal_separator(g, &annotated.vertices)? {
            if t.minimal_claimed {
                return Err(Error::Internal(format!(
                    "{:?} separates the {} triangulation but is not a minimal separator of the graph",
                    annotated.vertices, t.method
                )));
            }
            continue;
        }
        out.push(annotated);
    }
    Ok(AcsResult {
        separators: out,
        method: ListMethod::Heuristic,
        triangulation_method: Some(t.method),
        elapsed: start.elapsed(),
    })
}

/// The heuristic lister with an MMAF triangulation.
pub fn heuristic_list(g: &Graph) -> Result<AcsResult> {
    heuristic_list_with(g, Method::Mmaf)
}

/// The heuristic lister with a chosen minimal triangulation method.
pub fn heuristic_list_with(g: &Graph, method: Method) -> Result<AcsResult> {
    if !method.is_minimal() {
        return Err(Error::InvalidInput(format!("{method} does not produce minimal triangulations")));
    }
    require_connected(g)?;
    let start = Instant::now();
    if g.n() == 0 {
        return Ok(AcsResult {
            separators: Vec::new(),
            method: ListMethod::Heuristic,
            triangulation_method: Some(method),
            elapsed: start.elapsed(),
        });
    }
    let t = triangulate(g, method)?;
    let mut r = acs_from_triangulation(g, &t)?;
    r.elapsed = start.elapsed();
    Ok(r)
}

/// Candidates `K + v` for the clique minimal separators `K` of `g - v`, in
/// canonical order of `K`.
fn apex_candidates(g: &Graph, v: usize) -> Vec<VertexSet> {
    let (rest, map) = g.without_vertex(v);
    clique_minimal_separator_sets(&rest)
        .into_iter()
        .map(|k| VertexSet::new(k.iter().map(|x| map[x]).chain(std::iter::once(v))))
        .collect()
}

/// Every almost-clique minimal separator of a connected graph.
pub fn all_acs(g: &Graph) -> Result<AcsResult> {
    require_connected(g)?;
    let start = Instant::now();
    let mut found: BTreeSet<VertexSet> = clique_minimal_separator_sets(g).into_iter().collect();
    for v in 0..g.n() {
        for cand in apex_candidates(g, v) {
            if !found.contains(&cand) && is_minimal_separator(g, &cand)? {
                found.insert(cand);
            }
        }
    }
    let separators = found.into_iter().map(|s| Separator::annotated(g, s, Origin::Enumeration)).collect();
    Ok(AcsResult { separators, method: ListMethod::All, triangulation_method: None, elapsed: start.elapsed() })
}

/// Runs a lister on each connected component and maps the separators back
/// to `g`, in canonical order. A minimal separator of a component is one of
/// `g`, and every minimal separator of `g` lies inside a component.
pub fn per_component<F>(g: &Graph, list: F) -> Result<Vec<Separator>>
where
    F: Fn(&Graph) -> Result<AcsResult>,
{
    let mut out = Vec::new();
    for comp in g.components(&VertexSet::empty())? {
        let (sub, map) = g.induced_subgraph(&comp)?;
        for s in list(&sub)?.separators {
            out.push(Separator::annotated(g, VertexSet::new(s.vertices.iter().map(|v| map[v])), s.origin));
        }
    }
    Ok(canonical_order(out))
}

/// Extends the non-crossing family `seed` by scanning `universe` in order
/// and adopting every candidate that crosses nothing adopted so far.
pub fn greedy_max(g: &Graph, seed: &[Separator], universe: &[Separator]) -> Result<AcsResult> {
    let start = Instant::now();
    let mut adopted: Vec<LabelledSeparator> = Vec::with_capacity(seed.len());
    let mut members: HashSet<VertexSet> = HashSet::new();
    for s in seed {
        g.check_set(&s.vertices)?;
        if let Some(other) = adopted.iter().find(|a| a.crosses(&s.vertices)) {
            return Err(Error::InvalidInput(format!(
                "seed separators {:?} and {:?} cross",
                other.separator.vertices, s.vertices
            )));
        }
        if members.insert(s.vertices.clone()) {
            adopted.push(LabelledSeparator::new(g, s.clone()));
        }
    }
    for cand in universe {
        g.check_set(&cand.vertices)?;
        if members.contains(&cand.vertices) || adopted.iter().any(|a| a.crosses(&cand.vertices)) {
            continue;
        }
        members.insert(cand.vertices.clone());
        adopted.push(LabelledSeparator::new(g, cand.clone()));
    }
    let separators = canonical_order(adopted.into_iter().map(|a| a.separator).collect());
    Ok(AcsResult { separators, method: ListMethod::MaxExpanded, triangulation_method: None, elapsed: start.elapsed() })
}

/// The standard lister: scan vertices in ascending order and adopt apex
/// candidates that are minimal separators crossing nothing adopted.
///
/// Clique minimal separators of `g` are adopted first; they cross no
/// minimal separator.
pub fn standard_list(g: &Graph) -> Result<AcsResult> {
    require_connected(g)?;
    let start = Instant::now();
    let mut adopted: Vec<LabelledSeparator> = Vec::new();
    let mut members: HashSet<VertexSet> = HashSet::new();
    for s in clique_minimal_separator_sets(g) {
        members.insert(s.clone());
        adopted.push(LabelledSeparator::new(g, Separator::new(s, Origin::Standard)));
    }
    for v in 0..g.n() {
        for cand in apex_candidates(g, v) {
            if members.contains(&cand) || !is_minimal_separator(g, &cand)? || adopted.iter().any(|a| a.crosses(&cand)) {
                continue;
            }
            members.insert(cand.clone());
            adopted.push(LabelledSeparator::new(g, Separator::new(cand, Origin::Standard)));
        }
    }
    let mut separators = canonical_order(adopted.into_iter().map(|a| a.separator).collect());
    for s in separators.iter_mut() {
        s.annotate(g);
    }
    Ok(AcsResult { separators, method: ListMethod::Standard, triangulation_method: None, elapsed: start.elapsed() })
}

/// Which lister the preprocessing loop uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lister {
    Heuristic(Method),
    Standard,
}

impl Lister {
    pub fn name(self) -> &'static str {
        match self {
            Lister::Heuristic(_) => "heuristic",
            Lister::Standard => "standard",
        }
    }

    pub fn triangulation(self) -> Option<Method> {
        match self {
            Lister::Heuristic(m) => Some(m),
            Lister::Standard => None,
        }
    }

    pub fn list(self, g: &Graph) -> Result<AcsResult> {
        match self {
            Lister::Heuristic(m) => heuristic_list_with(g, m),
            Lister::Standard => standard_list(g),
        }
    }
}

impl Default for Lister {
    fn default() -> Self {
        Lister::Heuristic(Method::Mmaf)
    }
}

impl fmt::Display for Lister {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Lister {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "heuristic" => Ok(Lister::default()),
            "standard" => Ok(Lister::Standard),
            _ => Err(Error::InvalidInput(format!("unknown lister {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PreprocessResult {
    pub filled: Graph,
    /// Rounds run, counting the final one that changed nothing. For
    /// disconnected input, the maximum over components.
    pub rounds: usize,
    /// Separators listed (and filled) in each round.
    pub filled_separators: Vec<Vec<Separator>>,
    pub decomposition: Decomposition,
    pub stats: BenchRecord,
}

/// List-and-fill until a round adds no edge, then decompose the filled graph
/// into atoms. Disconnected graphs are processed per component.
pub fn preprocess(g: &Graph, lister: Lister) -> Result<PreprocessResult> {
    let start = Instant::now();
    let mut list_time = Duration::ZERO;
    let mut rounds = 0;
    let mut per_round: Vec<Vec<Separator>> = Vec::new();
    let mut fill = Vec::new();
    let mut parts = Vec::new();

    for comp in g.components(&VertexSet::empty())? {
        let (sub, map) = g.induced_subgraph(&comp)?;
        let cap = sub.n().max(1);
        let mut current = sub.clone();
        let mut r = 0;
        loop {
            r += 1;
            if r > cap {
                return Err(Error::RoundCap(cap));
            }
            let listed = lister.list(&current)?;
            list_time += listed.elapsed;
            let next = current.fill_cliques(listed.separators.iter().map(|s| &s.vertices))?;
            if per_round.len() < r {
                per_round.push(Vec::new());
            }
            per_round[r - 1].extend(listed.separators.into_iter().map(|s| Separator {
                vertices: VertexSet::new(s.vertices.iter().map(|v| map[v])),
                apexes: s.apexes.map(|a| VertexSet::new(a.iter().map(|v| map[v]))),
                origin: s.origin,
            }));
            if next.m() == current.m() {
                break;
            }
            current = next;
        }
        rounds = rounds.max(r);
        fill.extend(current.edges().filter(|&(u, v)| !sub.has_edge(u, v)).map(|(u, v)| (map[u], map[v])));
        parts.push(decompose(&current)?.relabel(&map));
    }

    for seps in per_round.iter_mut() {
        seps.sort();
    }
    let filled = if fill.is_empty() { g.clone() } else { g.with_edges(fill)? };
    let decomposition = Decomposition::forest(parts);
    let stats = BenchRecord {
        instance: String::new(),
        n: g.n(),
        m: g.m(),
        lister: lister.name().to_string(),
        triangulation: lister.triangulation().map(|m| m.to_string()),
        t_list_ms: ceil_ms(list_time),
        t_total_ms: ceil_ms(start.elapsed()),
        num_acs: per_round.first().map_or(0, Vec::len),
        num_max: None,
        num_all: None,
        rounds,
        num_atoms: decomposition.num_atoms(),
        max_atom: decomposition.max_atom(),
    };
    Ok(PreprocessResult { filled, rounds, filled_separators: per_round, decomposition, stats })
}
