use std::collections::BTreeSet;
use std::fs::{self, File};
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use acsep_core::acs::{
    all_acs, greedy_max, heuristic_list_with, per_component, preprocess, standard_list, AcsResult, Lister,
};
use acsep_core::cliquesep::clique_minimal_separators;
use acsep_core::oracle::{
    brute_almost_clique_minimal_separators, brute_clique_minimal_separators, brute_has_clique_separator,
    brute_treewidth, check_safety, OracleLimits,
};
use acsep_core::pace::{parse_gr, write_clique_tree_td, write_gr};
use acsep_core::report::{ceil_ms, BenchRecord, RatioRecord};
use acsep_core::separators::{crosses, is_minimal_separator};
use acsep_core::triangulation::{self, minimal_separators_chordal, verify_minimal, Method, Triangulation};
use acsep_core::{Graph, Separator, VertexSet};
use log::warn;
use serde::Serialize;

use crate::exit::{self, Failure};
use crate::{ListArg, ListerArg};

pub fn lister(arg: ListerArg, triangulation: Method) -> Lister {
    match arg {
        ListerArg::Heuristic => Lister::Heuristic(triangulation),
        ListerArg::Standard => Lister::Standard,
    }
}

fn instance_name(path: &Path) -> String {
    path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned())
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let f = File::open(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let (g, warnings) =
        parse_gr(BufReader::new(f)).map_err(|e| Failure::from(e).with_context(&path.display().to_string()))?;
    if warnings.duplicate_edges > 0 {
        warn!("{}: {} duplicate edges ignored", path.display(), warnings.duplicate_edges);
    }
    Ok(g)
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn labels(g: &Graph, s: &VertexSet) -> Vec<usize> {
    s.iter().map(|v| g.label(v)).collect()
}

#[derive(Serialize)]
struct SeparatorJson {
    vertices: Vec<usize>,
    apexes: Vec<usize>,
    origin: acsep_core::Origin,
}

fn separator_json(g: &Graph, s: &Separator) -> SeparatorJson {
    let apexes = s.apexes.clone().unwrap_or_else(|| acsep_core::separators::almost_clique_apexes(g, &s.vertices));
    SeparatorJson { vertices: labels(g, &s.vertices), apexes: labels(g, &apexes), origin: s.origin }
}

#[derive(Serialize)]
struct TriangulationSummary {
    instance: String,
    n: usize,
    m: usize,
    method: Method,
    fill_count: usize,
    max_bag: usize,
    width: usize,
    minimal_claimed: bool,
    verify_minimal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    td_path: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    td: Option<String>,
}

pub fn triangulate(input: &Path, method: Method, td_path: Option<PathBuf>, verify: bool) -> Result<(), Failure> {
    let g = read_graph(input)?;
    let t = triangulate_graph(&g, method)?;
    let tree = t.clique_tree()?;
    let td = write_clique_tree_td(&tree, g.n());
    let verified = verify.then(|| verify_minimal(&g, &t));
    let td = match &td_path {
        Some(p) => {
            fs::write(p, td)?;
            None
        }
        None => Some(td),
    };
    print_json(&TriangulationSummary {
        instance: instance_name(input),
        n: g.n(),
        m: g.m(),
        method,
        fill_count: t.fill_edges.len(),
        max_bag: tree.max_bag(),
        width: tree.max_bag().saturating_sub(1),
        minimal_claimed: t.minimal_claimed,
        verify_minimal: verified,
        td_path,
        td,
    })
}

/// Triangulates every component and joins the results.
fn triangulate_graph(g: &Graph, method: Method) -> Result<Triangulation, Failure> {
    if g.n() > 0 && g.is_connected() {
        return Ok(triangulation::triangulate(g, method)?);
    }
    let mut fill = Vec::new();
    let mut claimed = true;
    for comp in g.components(&VertexSet::empty())? {
        let (sub, map) = g.induced_subgraph(&comp)?;
        let t = triangulation::triangulate(&sub, method)?;
        claimed &= t.minimal_claimed;
        fill.extend(t.fill_edges.iter().map(|&(u, v)| (map[u], map[v])));
    }
    let h = g.with_edges(fill)?;
    Ok(Triangulation::new(g, h, method, claimed))
}

#[derive(Serialize)]
struct Expansion {
    num_all: usize,
    num_max: usize,
    added: Vec<SeparatorJson>,
    elapsed_ms: u64,
}

#[derive(Serialize)]
struct AcsListing {
    instance: String,
    n: usize,
    m: usize,
    method: &'static str,
    triangulation: Option<Method>,
    count: usize,
    elapsed_ms: u64,
    separators: Vec<SeparatorJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    expanded: Option<Expansion>,
}

pub fn list_acs(input: &Path, method: ListArg, triangulation: Method, expand: bool) -> Result<(), Failure> {
    let g = read_graph(input)?;
    if !triangulation.is_minimal() {
        return Err(Failure::usage(format!("{triangulation} is not a minimal triangulation method")));
    }
    let start = Instant::now();
    let (name, found) = match method {
        ListArg::Heuristic => ("heuristic", per_component(&g, |h| heuristic_list_with(h, triangulation))?),
        ListArg::Standard => ("standard", per_component(&g, standard_list)?),
        ListArg::All => ("all", per_component(&g, all_acs)?),
    };
    let elapsed_ms = ceil_ms(start.elapsed());
    let expanded = if expand {
        let start = Instant::now();
        let all = per_component(&g, all_acs)?;
        let seed: &[Separator] = if matches!(method, ListArg::All) { &[] } else { &found };
        let max = greedy_max(&g, seed, &all)?;
        let listed: BTreeSet<&VertexSet> = seed.iter().map(|s| &s.vertices).collect();
        let added = max.separators.iter().filter(|s| !listed.contains(&s.vertices)).map(|s| separator_json(&g, s));
        Some(Expansion {
            num_all: all.len(),
            num_max: max.len(),
            added: added.collect(),
            elapsed_ms: ceil_ms(start.elapsed()),
        })
    } else {
        None
    };
    print_json(&AcsListing {
        instance: instance_name(input),
        n: g.n(),
        m: g.m(),
        method: name,
        triangulation: matches!(method, ListArg::Heuristic).then_some(triangulation),
        count: found.len(),
        elapsed_ms,
        separators: found.iter().map(|s| separator_json(&g, s)).collect(),
        expanded,
    })
}

#[derive(Serialize)]
struct AtomJson {
    id: usize,
    file: String,
    vertices: Vec<usize>,
}

#[derive(Serialize)]
struct Manifest {
    instance: String,
    n: usize,
    m: usize,
    lister: String,
    triangulation: Option<String>,
    rounds: usize,
    filled_edges: usize,
    num_atoms: usize,
    max_atom: usize,
    atoms: Vec<AtomJson>,
    /// Pairs of atom ids, matching `atoms[].id`.
    tree_edges: Vec<(usize, usize)>,
    separators: Vec<Vec<usize>>,
}

pub fn decompose(input: &Path, lister: Lister, out_dir: &Path) -> Result<(), Failure> {
    let g = read_graph(input)?;
    if g.n() == 0 {
        return Err(Failure::new(exit::FAILED, "cannot decompose an empty graph"));
    }
    let p = preprocess(&g, lister)?;
    fs::create_dir_all(out_dir)?;
    let mut atoms = Vec::new();
    for (k, atom) in p.decomposition.atoms.iter().enumerate() {
        let (sub, map) = p.filled.induced_subgraph(atom)?;
        let file = format!("atom_{}.gr", k + 1);
        let names: Vec<String> = map.iter().map(|&v| g.label(v).to_string()).collect();
        let text = format!("c vertices {}\n{}", names.join(" "), write_gr(&sub));
        fs::write(out_dir.join(&file), text)?;
        atoms.push(AtomJson { id: k + 1, file, vertices: labels(&g, atom) });
    }
    let mut stats = p.stats.clone();
    stats.instance = instance_name(input);
    let manifest = Manifest {
        instance: stats.instance.clone(),
        n: g.n(),
        m: g.m(),
        lister: stats.lister.clone(),
        triangulation: stats.triangulation.clone(),
        rounds: p.rounds,
        filled_edges: p.filled.m() - g.m(),
        num_atoms: p.decomposition.num_atoms(),
        max_atom: p.decomposition.max_atom(),
        atoms,
        tree_edges: p.decomposition.tree_edges.iter().map(|&(a, b)| (a + 1, b + 1)).collect(),
        separators: p.decomposition.edge_labels.iter().map(|s| labels(&g, &s.vertices)).collect(),
    };
    fs::write(out_dir.join("manifest.json"), serde_json::to_string_pretty(&manifest)?)?;
    fs::write(out_dir.join("bench.json"), serde_json::to_string_pretty(&stats)?)?;
    print_json(&stats)
}

fn bench_record(name: &str, g: &Graph, lister: Lister, expand: bool) -> Result<BenchRecord, Failure> {
    let p = preprocess(g, lister)?;
    let mut stats = p.stats;
    stats.instance = name.to_string();
    if expand {
        let all = per_component(g, all_acs)?;
        let seed = p.filled_separators.first().map_or(&[][..], Vec::as_slice);
        stats.num_max = Some(greedy_max(g, seed, &all)?.len());
        stats.num_all = Some(all.len());
    }
    Ok(stats)
}

pub fn bench(
    dir: &Path,
    listers: &[Lister],
    csv_path: &Path,
    ratios: Option<PathBuf>,
    expand: bool,
) -> Result<(), Failure> {
    let entries = fs::read_dir(dir).map_err(|e| Failure::usage(format!("{}: {e}", dir.display())))?;
    let mut files: Vec<PathBuf> =
        entries.filter_map(|e| e.ok().map(|e| e.path())).filter(|p| p.extension().is_some_and(|x| x == "gr")).collect();
    files.sort();

    let mut listers = listers.to_vec();
    listers.dedup();
    let mut rows = csv::Writer::from_path(csv_path)?;
    let mut pairs = Vec::new();
    for path in &files {
        let name = instance_name(path);
        let g = read_graph(path)?;
        if g.n() == 0 {
            warn!("{}: empty graph skipped", path.display());
            continue;
        }
        let mut heuristic = None;
        let mut standard = None;
        for &l in &listers {
            let rec = bench_record(&name, &g, l, expand)?;
            rows.serialize(&rec)?;
            match l {
                Lister::Heuristic(_) => heuristic = Some(rec),
                Lister::Standard => standard = Some(rec),
            }
        }
        if let (Some(h), Some(s)) = (heuristic, standard) {
            pairs.push(RatioRecord::new(&h, &s));
        }
    }
    rows.flush()?;
    println!("{} instances, {} rows -> {}", files.len(), files.len() * listers.len(), csv_path.display());

    if !pairs.is_empty() {
        let path = ratios.unwrap_or_else(|| {
            let stem = csv_path.file_stem().map_or_else(|| "bench".into(), |s| s.to_string_lossy().into_owned());
            csv_path.with_file_name(format!("{stem}_ratios.csv"))
        });
        let mut w = csv::Writer::from_path(&path)?;
        for r in &pairs {
            w.serialize(r)?;
        }
        w.flush()?;
        println!("{} ratio rows -> {}", pairs.len(), path.display());
    }
    Ok(())
}

fn non_crossing(g: &Graph, seps: &[Separator]) -> Result<bool, Failure> {
    for (i, a) in seps.iter().enumerate() {
        for b in &seps[i + 1..] {
            if crosses(g, &a.vertices, &b.vertices)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn set_of(seps: &[Separator]) -> BTreeSet<VertexSet> {
    seps.iter().map(|s| s.vertices.clone()).collect()
}

fn components(g: &Graph) -> Result<Vec<Graph>, Failure> {
    let mut out = Vec::new();
    for c in g.components(&VertexSet::empty())? {
        out.push(g.induced_subgraph(&c)?.0);
    }
    Ok(out)
}

/// Checks a listing against the brute-force set: subset, pairwise
/// non-crossing and, if `maximal`, blocked by a crossing for every omission.
fn listing_check(g: &Graph, list: &AcsResult, truth: &[Separator], maximal: bool) -> Result<Option<String>, Failure> {
    let found = &list.separators;
    let truth_set = set_of(truth);
    if let Some(s) = found.iter().find(|s| !truth_set.contains(&s.vertices)) {
        return Ok(Some(format!("{:?} is not an almost-clique minimal separator", s.vertices.one_based())));
    }
    if !non_crossing(g, found)? {
        return Ok(Some("two listed separators cross".into()));
    }
    if maximal {
        let listed = set_of(found);
        for s in truth.iter().filter(|s| !listed.contains(&s.vertices)) {
            let blocked = found.iter().map(|a| crosses(g, &a.vertices, &s.vertices)).collect::<Result<Vec<_>, _>>()?;
            if !blocked.into_iter().any(|b| b) {
                return Ok(Some(format!("{:?} could still be added", s.vertices.one_based())));
            }
        }
    }
    Ok(None)
}

pub fn verify(input: &Path, max_n_subsets: usize, max_n_tw: usize) -> Result<(), Failure> {
    let g = read_graph(input)?;
    let limits = OracleLimits::new(max_n_subsets, max_n_tw).map_err(Failure::usage)?;
    let cap = limits.max_n_subsets.min(limits.max_n_tw);
    if g.n() > cap {
        return Err(Failure::new(
            exit::ORACLE_CAP,
            format!("refusing to verify: the graph has {} vertices, the oracle cap is {cap}", g.n()),
        ));
    }

    let mut results: Vec<(String, Option<String>)> = Vec::new();
    let truth = brute_almost_clique_minimal_separators(&g, &limits)?;
    let all = per_component(&g, all_acs)?;
    let mismatch =
        (set_of(&all) != set_of(&truth)).then(|| format!("{} listed, {} by brute force", all.len(), truth.len()));
    results.push(("all almost-clique minimal separators".into(), mismatch));

    let parts = components(&g)?;
    for method in [Method::Mmd, Method::Mmf, Method::Mmaf, Method::Mcsm] {
        let mut problem = None;
        for sub in &parts {
            let sub_truth = brute_almost_clique_minimal_separators(sub, &limits)?;
            problem = problem.or(listing_check(sub, &heuristic_list_with(sub, method)?, &sub_truth, false)?);
        }
        results.push((format!("heuristic listing with {method}"), problem));
    }
    let mut problem = None;
    for sub in &parts {
        let sub_truth = brute_almost_clique_minimal_separators(sub, &limits)?;
        problem = problem.or(listing_check(sub, &standard_list(sub)?, &sub_truth, true)?);
    }
    results.push(("standard listing".into(), problem));

    let mut problem = None;
    for sub in &parts {
        if set_of(&clique_minimal_separators(sub)?) != set_of(&brute_clique_minimal_separators(sub, &limits)?) {
            problem = Some("clique minimal separators differ from brute force".to_string());
        }
    }
    results.push(("clique minimal separators".into(), problem));

    for method in Method::ALL.into_iter().filter(|m| m.is_minimal()) {
        let mut problem = None;
        for sub in &parts {
            let t = triangulation::triangulate(sub, method)?;
            if !verify_minimal(sub, &t) {
                problem = Some("a fill edge can be removed".to_string());
            }
            for s in minimal_separators_chordal(&t.h)? {
                if !is_minimal_separator(sub, &s.vertices)? {
                    problem = Some(format!("{:?} is not a minimal separator of the graph", s.vertices.one_based()));
                }
            }
        }
        results.push((format!("minimal triangulation {method}"), problem));
    }

    let tw = brute_treewidth(&g, &limits)?;
    let mut problem = None;
    for s in &all {
        if !check_safety(&g, &s.vertices, &limits)? {
            problem = Some(format!("filling {:?} changes the treewidth", s.vertices.one_based()));
        }
    }
    results.push((format!("separators are safe (treewidth {tw})"), problem));

    for l in [Lister::Heuristic(Method::Mmaf), Lister::Standard] {
        let p = preprocess(&g, l)?;
        let mut width = 0;
        let mut problem = None;
        for atom in &p.decomposition.atoms {
            let (sub, _) = p.filled.induced_subgraph(atom)?;
            width = width.max(brute_treewidth(&sub, &limits)?);
            if brute_has_clique_separator(&sub, &limits)? {
                problem = Some(format!("atom {:?} has a clique separator", atom.one_based()));
            }
        }
        if width != tw {
            problem = Some(format!("atoms have width {width}, the graph {tw}"));
        }
        results.push((format!("{l} preprocessing keeps treewidth"), problem));
    }

    let mut failed = 0;
    for (name, problem) in &results {
        match problem {
            None => println!("PASS {name}"),
            Some(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    if failed > 0 {
        return Err(Failure::new(exit::FAILED, format!("{failed} of {} checks failed", results.len())));
    }
    Ok(())
}
