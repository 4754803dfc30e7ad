//! Turning elimination heuristics into minimal triangulation algorithms.
//!
//! Each round runs the elimination game on the current graph. Instead of
//! keeping the filled neighborhoods, only the minimal separators of the
//! current graph found inside them are filled. Since those are minimal
//! separators of the original graph as well, a minimal triangulation of the
//! filled graph is one of the original; the loop stops once the elimination
//! game adds nothing, i.e. the current graph is chordal.

use std::collections::BTreeSet;

use log::warn;

use super::elimination::{eliminate, Strategy};
use super::{fill_edges_are_unique_chords, Method, Triangulation};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::separators::{canonical_order, is_minimal_separator, Origin, Separator};

/// Minimal separators of `g` contained in `s`, where `s` is the
/// neighborhood of a full component of `s` (as every filled neighborhood of
/// the elimination game is).
///
/// Returns `N(D)` for every component `D` of `g - s` with `N(D)` a proper
/// subset of `s`, plus `s` itself if it has two or more full components.
pub fn minimal_separators_within(g: &Graph, s: &VertexSet) -> Result<Vec<Separator>> {
    let mut found = Vec::new();
    let mut full = 0;
    for comp in g.components(s)? {
        let nd = g.neighborhood(&comp)?;
        if nd.len() == s.len() {
            full += 1;
        } else if !nd.is_empty() {
            found.push(nd);
        }
    }
    if full >= 2 {
        found.push(s.clone());
    }
    for sep in &found {
        if !is_minimal_separator(g, sep)? {
            return Err(Error::Internal(format!("{sep:?} found inside {s:?} is not a minimal separator")));
        }
    }
    Ok(canonical_order(found.into_iter().map(|v| Separator::new(v, Origin::ChordalExtraction)).collect()))
}

/// Minimal triangulation by repeated elimination rounds (MMD, MMF or MMAF,
/// depending on `strategy`).
pub fn minimalize(g: &Graph, strategy: Strategy) -> Result<Triangulation> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidInput("cannot triangulate an empty graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let method = match strategy {
        Strategy::MinDegree => Method::Mmd,
        Strategy::MinFill => Method::Mmf,
        Strategy::MinAverageFill => Method::Mmaf,
    };

    let mut current = g.clone();
    let mut fallback = false;
    let mut stalls = 0;
    for _round in 0..=n {
        let run = eliminate(&current, strategy)?;
        if run.fill_count() == 0 {
            let claimed = !fallback && fill_edges_are_unique_chords(g, &current);
            if !fallback && !claimed {
                warn!("{method:?}: result failed the unique-chord minimality check");
            }
            return Ok(Triangulation::new(g, current, method, claimed));
        }

        let mut to_fill = BTreeSet::new();
        for rec in run.fill_records.iter().filter(|r| !r.was_clique) {
            for sep in minimal_separators_within(&current, &rec.neighborhood)? {
                to_fill.insert(sep.vertices);
            }
        }
        let next = current.fill_cliques(to_fill.iter())?;
        if next.m() == current.m() {
            stalls += 1;
            warn!("{method:?}: round added no edge to a non-chordal graph (stall {stalls})");
            if stalls >= 2 {
                return Ok(Triangulation::new(g, run.h, method, false));
            }
            fallback = true;
            current = run.h;
        } else {
            stalls = 0;
            current = next;
        }
    }
    // Unreachable in practice: every productive round adds at least one edge
    // and a stall makes the graph chordal.
    let run = eliminate(&current, strategy)?;
    warn!("{method:?}: round cap {n} reached");
    Ok(Triangulation::new(g, run.h, method, false))
}
