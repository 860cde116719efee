//! Shared test oracles: brute-force reference implementations that are
//! independent of the library's algorithm choices, plus seeded random-graph
//! samplers.

#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use netcompress::graph::{EdgeKey, Graph, NodeId};

/// All-pairs distances by Floyd–Warshall relaxation (`None` = unreachable).
/// Independent of the library's BFS path.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.node_count();
    let mut dist: Vec<Vec<Option<u32>>> = vec![vec![None; n]; n];
    for (v, row) in dist.iter_mut().enumerate() {
        row[v] = Some(0);
    }
    for e in g.edges() {
        dist[e.u().index()][e.v().index()] = Some(1);
        dist[e.v().index()][e.u().index()] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (dist[i][k], dist[k][j]) {
                    let through = a + b;
                    if dist[i][j].is_none_or(|d| through < d) {
                        dist[i][j] = Some(through);
                    }
                }
            }
        }
    }
    dist
}

/// Every geodesic from `s` to `t`, as node sequences, found by depth-first
/// enumeration pruned with the Floyd–Warshall matrix.
pub fn enumerate_geodesics(
    g: &Graph,
    dist: &[Vec<Option<u32>>],
    s: NodeId,
    t: NodeId,
) -> Vec<Vec<NodeId>> {
    let mut paths = Vec::new();
    let Some(total) = dist[s.index()][t.index()] else {
        return paths;
    };
    let mut current = vec![s];
    descend(g, dist, t, total, &mut current, &mut paths);
    paths
}

fn descend(
    g: &Graph,
    dist: &[Vec<Option<u32>>],
    t: NodeId,
    remaining: u32,
    current: &mut Vec<NodeId>,
    paths: &mut Vec<Vec<NodeId>>,
) {
    let u = *current.last().unwrap();
    if u == t {
        paths.push(current.clone());
        return;
    }
    for v in g.neighbors(u) {
        if dist[v.index()][t.index()] == Some(remaining - 1) {
            current.push(v);
            descend(g, dist, t, remaining - 1, current, paths);
            current.pop();
        }
    }
}

/// Brute-force edge betweenness over ordered pairs: for each pair, the
/// fraction of its geodesics crossing each edge. With `exclude_endpoints`,
/// each edge skips the contribution of its own endpoint pair.
pub fn oracle_edge_betweenness(g: &Graph, exclude_endpoints: bool) -> BTreeMap<EdgeKey, f64> {
    let dist = floyd_warshall(g);
    let mut map: BTreeMap<EdgeKey, f64> = g.edges().map(|e| (e, 0.0)).collect();
    for s in g.nodes() {
        for t in g.nodes() {
            if s == t {
                continue;
            }
            let paths = enumerate_geodesics(g, &dist, s, t);
            if paths.is_empty() {
                continue;
            }
            let total = paths.len() as f64;
            let mut per_edge: BTreeMap<EdgeKey, usize> = BTreeMap::new();
            for path in &paths {
                for pair in path.windows(2) {
                    *per_edge.entry(EdgeKey::new(pair[0], pair[1])).or_insert(0) += 1;
                }
            }
            for (edge, count) in per_edge {
                let is_endpoint_pair = edge.has_endpoint(s) && edge.has_endpoint(t);
                if exclude_endpoints && is_endpoint_pair {
                    continue;
                }
                *map.get_mut(&edge).unwrap() += count as f64 / total;
            }
        }
    }
    map
}

/// Number of geodesics between an ordered pair.
pub fn oracle_path_count(g: &Graph, s: NodeId, t: NodeId) -> usize {
    let dist = floyd_warshall(g);
    enumerate_geodesics(g, &dist, s, t).len()
}

/// Whether removing `e` disconnects the component it sits in.
pub fn oracle_is_bridge(g: &Graph, e: EdgeKey) -> bool {
    let before = g.connected_components().len();
    let mut cut = g.clone();
    cut.remove_edge(e).unwrap();
    cut.connected_components().len() > before
}

/// Connected random graph: a random attachment tree plus extra random pairs,
/// so samples span sparse trees through dense near-cliques.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n_min: usize, n_max: usize) -> Graph {
    let n = rng.gen_range(n_min..=n_max);
    let mut g = Graph::empty(n);
    for i in 1..n {
        let parent = rng.gen_range(0..i);
        g.add_edge(EdgeKey::new(NodeId(i), NodeId(parent))).unwrap();
    }
    let extra_p: f64 = rng.gen_range(0.0..0.5);
    for i in 0..n {
        for j in (i + 1)..n {
            if !g.has_edge(NodeId(i), NodeId(j)) && rng.gen_bool(extra_p) {
                g.add_edge(EdgeKey::new(NodeId(i), NodeId(j))).unwrap();
            }
        }
    }
    g
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
