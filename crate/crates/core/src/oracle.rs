//! Brute-force ground truth for small graphs.
//!
//! Everything here works on bitmask adjacency and applies the definitions
//! directly (subset enumeration, the subset dynamic program for treewidth).
//! It shares no code with the algorithms it is used to check.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::separators::{Origin, Separator};

/// Vertex caps for the exponential procedures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_n_subsets: usize,
    pub max_n_tw: usize,
}

impl OracleLimits {
    /// Largest cap accepted; masks are 32-bit and tables have `2^n` entries.
    pub const HARD_CAP: usize = 24;

    pub fn new(max_n_subsets: usize, max_n_tw: usize) -> Result<Self> {
        for cap in [max_n_subsets, max_n_tw] {
            if !(4..=Self::HARD_CAP).contains(&cap) {
                return Err(Error::InvalidInput(format!("oracle caps must lie in 4..={}, got {cap}", Self::HARD_CAP)));
            }
        }
        Ok(OracleLimits { max_n_subsets, max_n_tw })
    }
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_n_subsets: 16, max_n_tw: 16 }
    }
}

struct Bits {
    n: usize,
    adj: Vec<u32>,
}

impl Bits {
    fn new(g: &Graph, cap: usize) -> Result<Self> {
        if g.n() > cap {
            return Err(Error::OracleCap { n: g.n(), cap });
        }
        let adj = (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u)).collect();
        Ok(Bits { n: g.n(), adj })
    }

    fn all(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    fn nbhd(&self, set: u32) -> u32 {
        let mut out = 0;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= self.adj[v];
        }
        out & !set
    }

    /// Vertices reachable from `start` inside `allowed`.
    fn reach(&self, start: u32, allowed: u32) -> u32 {
        let mut seen = start;
        loop {
            let next = (seen | self.nbhd(seen)) & (allowed | start);
            if next == seen {
                return seen;
            }
            seen = next;
        }
    }

    fn components(&self, allowed: u32) -> Vec<u32> {
        let mut out = Vec::new();
        let mut left = allowed;
        while left != 0 {
            let c = self.reach(left & left.wrapping_neg(), allowed);
            out.push(c);
            left &= !c;
        }
        out
    }

    fn is_clique(&self, set: u32) -> bool {
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if set & !(1 << v) & !self.adj[v] != 0 {
                return false;
            }
        }
        true
    }

    fn full_components(&self, s: u32) -> usize {
        self.components(self.all() & !s).into_iter().filter(|&c| self.nbhd(c) == s).count()
    }

    fn is_minimal_separator(&self, s: u32) -> bool {
        s != 0 && self.full_components(s) >= 2
    }

    fn is_almost_clique(&self, s: u32) -> bool {
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            if self.is_clique(s & !(1 << v)) {
                return true;
            }
        }
        false
    }
}

fn to_set(mask: u32) -> VertexSet {
    VertexSet::new((0..32).filter(|&i| mask >> i & 1 == 1))
}

fn brute_list(g: &Graph, limits: &OracleLimits, keep: impl Fn(&Bits, u32) -> bool) -> Result<Vec<Separator>> {
    let b = Bits::new(g, limits.max_n_subsets)?;
    let mut out: Vec<Separator> = (1..b.all())
        .filter(|&s| b.is_minimal_separator(s) && keep(&b, s))
        .map(|s| Separator::new(to_set(s), Origin::Enumeration))
        .collect();
    out.sort();
    Ok(out)
}

/// Every non-empty proper subset with at least two full components.
pub fn brute_minimal_separators(g: &Graph, limits: &OracleLimits) -> Result<Vec<Separator>> {
    brute_list(g, limits, |_, _| true)
}

pub fn brute_almost_clique_minimal_separators(g: &Graph, limits: &OracleLimits) -> Result<Vec<Separator>> {
    brute_list(g, limits, |b, s| b.is_almost_clique(s))
}

pub fn brute_clique_minimal_separators(g: &Graph, limits: &OracleLimits) -> Result<Vec<Separator>> {
    brute_list(g, limits, |b, s| b.is_clique(s))
}

/// Whether some clique (possibly empty) leaves two or more components.
pub fn brute_has_clique_separator(g: &Graph, limits: &OracleLimits) -> Result<bool> {
    let b = Bits::new(g, limits.max_n_subsets)?;
    Ok((0..b.all()).any(|s| b.is_clique(s) && b.components(b.all() & !s).len() >= 2))
}

/// Whether `s` is a minimal separator, straight from the definition.
pub fn brute_is_minimal_separator(g: &Graph, s: &VertexSet, limits: &OracleLimits) -> Result<bool> {
    let b = Bits::new(g, limits.max_n_subsets)?;
    g.check_set(s)?;
    Ok(b.is_minimal_separator(s.iter().fold(0, |m, v| m | 1 << v)))
}

/// Exact treewidth by the dynamic program over vertex subsets
/// `TW(S) = min_{v in S} max(TW(S - v), Q(S - v, v))`, where `Q(X, v)` counts
/// the vertices outside `X + v` reachable from `v` through `X`.
///
/// The empty graph gets 0.
pub fn brute_treewidth(g: &Graph, limits: &OracleLimits) -> Result<usize> {
    let b = Bits::new(g, limits.max_n_tw)?;
    if b.n == 0 {
        return Ok(0);
    }
    // -1 stands for minus infinity at the empty set
    let mut tw = vec![i8::MAX; 1usize << b.n];
    tw[0] = -1;
    for s in 1u32..=b.all() {
        let mut best = i8::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            let x = s & !(1 << v);
            let inner = b.reach(1 << v, x);
            let q = (b.nbhd(inner) & !x).count_ones() as i8;
            best = best.min(tw[x as usize].max(q));
        }
        tw[s as usize] = best;
    }
    Ok(tw[b.all() as usize] as usize)
}

/// `tw(g ∪ K(s)) == tw(g)`.
pub fn check_safety(g: &Graph, s: &VertexSet, limits: &OracleLimits) -> Result<bool> {
    let before = brute_treewidth(g, limits)?;
    let after = brute_treewidth(&g.fill_clique(s)?, limits)?;
    Ok(before == after)
}
