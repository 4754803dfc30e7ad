//! PACE `.gr` graphs and `.td` tree decompositions.

use std::fmt::Write as _;
use std::io::BufRead;

use log::warn;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::triangulation::CliqueTree;

/// What the parser tolerated.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParseWarnings {
    pub duplicate_edges: usize,
    /// Header edge count when it disagrees with the parsed edges.
    pub header_m: Option<usize>,
}

fn positive(tok: &str, line: usize) -> Result<usize> {
    match tok.parse::<usize>() {
        Ok(v) if v > 0 => Ok(v),
        _ => Err(Error::Parse { line, msg: format!("expected a positive integer, got {tok:?}") }),
    }
}

/// Reads a `.gr` graph. Vertex labels are the 1-based file ids.
pub fn parse_gr<R: BufRead>(input: R) -> Result<(Graph, ParseWarnings)> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let lineno = i + 1;
        let line = line.map_err(|e| Error::Parse { line: lineno, msg: e.to_string() })?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.first() {
            None => continue,
            Some(t) if t.starts_with('c') => continue,
            Some(&"p") => {
                if header.is_some() {
                    return Err(Error::Parse { line: lineno, msg: "duplicate header".into() });
                }
                if toks.len() != 4 || toks[1] != "tw" {
                    return Err(Error::Parse { line: lineno, msg: "header must be `p tw <n> <m>`".into() });
                }
                let n = toks[2]
                    .parse::<usize>()
                    .map_err(|_| Error::Parse { line: lineno, msg: format!("bad vertex count {:?}", toks[2]) })?;
                let m = toks[3]
                    .parse::<usize>()
                    .map_err(|_| Error::Parse { line: lineno, msg: format!("bad edge count {:?}", toks[3]) })?;
                header = Some((n, m));
            }
            Some(_) => {
                let Some((n, _)) = header else {
                    return Err(Error::Parse { line: lineno, msg: "edge before header".into() });
                };
                if toks.len() != 2 {
                    return Err(Error::Parse { line: lineno, msg: "edge line must have two endpoints".into() });
                }
                let u = positive(toks[0], lineno)?;
                let v = positive(toks[1], lineno)?;
                if u > n || v > n {
                    return Err(Error::Parse { line: lineno, msg: format!("endpoint out of range 1..={n}") });
                }
                if u == v {
                    return Err(Error::Parse { line: lineno, msg: format!("self-loop at {u}") });
                }
                edges.push((u.min(v) - 1, u.max(v) - 1));
            }
        }
    }
    let Some((n, m)) = header else {
        return Err(Error::Parse { line: 0, msg: "missing `p tw` header".into() });
    };
    let raw = edges.len();
    let g = Graph::from_edges(n, edges)?;
    let mut warnings = ParseWarnings { duplicate_edges: raw - g.m(), header_m: None };
    if warnings.duplicate_edges > 0 {
        warn!("ignored {} duplicate edge lines", warnings.duplicate_edges);
    }
    if g.m() != m {
        warn!("header announces {m} edges, parsed {}", g.m());
        warnings.header_m = Some(m);
    }
    Ok((g, warnings))
}

pub fn parse_gr_str(text: &str) -> Result<Graph> {
    parse_gr(text.as_bytes()).map(|(g, _)| g)
}

/// Canonical `.gr` text: header, then edges sorted by endpoints.
pub fn write_gr(g: &Graph) -> String {
    let mut out = format!("p tw {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

/// `.td` text for bags on `n` vertices. Trees of a forest are chained into a
/// single tree, which keeps the decomposition valid since distinct trees share
/// no vertex.
pub fn write_td(bags: &[VertexSet], edges: &[(usize, usize)], n: usize) -> String {
    let max_bag = bags.iter().map(VertexSet::len).max().unwrap_or(0);
    let mut out = format!("s td {} {} {}\n", bags.len(), max_bag, n);
    for (i, b) in bags.iter().enumerate() {
        let _ = write!(out, "b {}", i + 1);
        for v in b {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    let mut all = edges.to_vec();
    all.extend(forest_links(bags.len(), edges));
    for (a, b) in all {
        let _ = writeln!(out, "{} {}", a + 1, b + 1);
    }
    out
}

pub fn write_clique_tree_td(tree: &CliqueTree, n: usize) -> String {
    write_td(&tree.bags, &tree.tree_edges, n)
}

/// Extra edges joining the trees of a forest, first bag to first bag.
fn forest_links(nodes: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let root = crate::treedec::union_find_groups(nodes, edges.iter().copied());
    let mut firsts: Vec<usize> = Vec::new();
    for i in 0..nodes {
        if !firsts.iter().any(|&f| root[f] == root[i]) {
            firsts.push(i);
        }
    }
    firsts.windows(2).map(|w| (w[0], w[1])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{complete, cycle, path, s1};
    use crate::triangulation::clique_tree;

    #[test]
    fn parses_c4() {
        let text = "c a cycle\nc another\np tw 4 4\n1 2\n2 3\n3 4\n4 1\n";
        let (g, w) = parse_gr(text.as_bytes()).unwrap();
        assert_eq!(g, cycle(4));
        assert_eq!(w, ParseWarnings::default());
    }

    #[test]
    fn rejects_bad_input() {
        let err = |t: &str| parse_gr_str(t).unwrap_err();
        assert!(matches!(err("p tw 2 1\n1 1\n"), Error::Parse { line: 2, .. }));
        assert!(matches!(err("1 2\n"), Error::Parse { line: 1, .. }));
        assert!(matches!(err("p tw 2 1\np tw 2 1\n"), Error::Parse { line: 2, .. }));
        assert!(matches!(err("p tw 3 1\n1 x\n"), Error::Parse { line: 2, .. }));
        assert!(matches!(err("p tw 3 1\n0 2\n"), Error::Parse { line: 2, .. }));
        assert!(matches!(err("p tw 3 1\n1 4\n"), Error::Parse { line: 2, .. }));
        assert!(matches!(err("c nothing\n"), Error::Parse { .. }));
    }

    #[test]
    fn tolerates_duplicates_and_wrong_count() {
        let (g, w) = parse_gr("p tw 3 5\n1 2\n2 1\n2 3\n".as_bytes()).unwrap();
        assert_eq!(g, path(3));
        assert_eq!(w.duplicate_edges, 1);
        assert_eq!(w.header_m, Some(5));
    }

    #[test]
    fn round_trip() {
        for g in [cycle(5), complete(4), path(6), Graph::empty(3)] {
            let back = parse_gr_str(&write_gr(&g)).unwrap();
            assert_eq!(back.n(), g.n());
            assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
        }
    }

    #[test]
    fn td_headers() {
        let h = cycle(4).fill_clique(&s1(&[2, 4])).unwrap();
        let td = write_clique_tree_td(&clique_tree(&h).unwrap(), 4);
        assert!(td.starts_with("s td 2 3 4\n"));
        let td = write_clique_tree_td(&clique_tree(&complete(4)).unwrap(), 4);
        assert_eq!(td, "s td 1 4 4\nb 1 1 2 3 4\n");
        let td = write_clique_tree_td(&clique_tree(&path(3)).unwrap(), 3);
        assert!(td.starts_with("s td 2 2 3\n"));
    }

    #[test]
    fn forest_is_joined() {
        let bags = vec![s1(&[1, 2]), s1(&[2, 3]), s1(&[4, 5])];
        let td = write_td(&bags, &[(0, 1)], 5);
        assert_eq!(td.lines().filter(|l| !l.starts_with(['s', 'b'])).count(), 2);
    }
}
