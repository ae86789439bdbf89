use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Degeneracy {
    /// Largest `k` such that the graph has a non-empty `k`-core.
    pub k: usize,
    /// Elimination order; each vertex has residual degree `<= k` when removed.
    pub peel_order: Vec<Vertex>,
}

/// Min-degree peeling with degree buckets, linear in `n + m`.
pub fn degeneracy(g: &Graph) -> Degeneracy {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let max_deg = g.max_degree();
    let mut buckets: Vec<Vec<Vertex>> = vec![Vec::new(); max_deg + 1];
    for v in 0..n {
        buckets[degree[v]].push(v);
    }
    let mut removed = vec![false; n];
    let mut peel_order = Vec::with_capacity(n);
    let mut k = 0;
    let mut low = 0;
    while peel_order.len() < n {
        // Stale bucket entries are skipped lazily.
        let v = loop {
            while buckets[low].is_empty() {
                low += 1;
            }
            let v = buckets[low].pop().expect("non-empty bucket");
            if !removed[v] && degree[v] == low {
                break v;
            }
        };
        k = k.max(low);
        removed[v] = true;
        peel_order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
                buckets[degree[w]].push(w);
                low = low.min(degree[w]);
            }
        }
    }
    Degeneracy { k, peel_order }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metrics {
    pub is_tree: bool,
    pub is_bipartite: bool,
    pub is_connected: bool,
    pub min_degree: usize,
    /// `None` for forests.
    pub girth: Option<usize>,
}

pub fn metrics(g: &Graph) -> Metrics {
    let is_connected = g.is_connected();
    Metrics {
        is_tree: is_connected && g.m() + 1 == g.n(),
        is_bipartite: is_bipartite(g),
        is_connected,
        min_degree: g.min_degree(),
        girth: girth(g),
    }
}

fn is_bipartite(g: &Graph) -> bool {
    let mut side: Vec<Option<bool>> = vec![None; g.n()];
    for root in 0..g.n() {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let s = side[u].unwrap();
            for &v in g.neighbors(u) {
                match side[v] {
                    None => {
                        side[v] = Some(!s);
                        queue.push_back(v);
                    }
                    Some(t) if t == s => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// Shortest cycle via BFS from every vertex, O(nm).
fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.fill(usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v {
                    let len = dist[u] + dist[v] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::{double_subdivision, GraphFamily};

    fn gen(f: GraphFamily) -> Graph {
        f.generate().unwrap()
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(degeneracy(&gen(GraphFamily::Complete(5))).k, 4);
        assert_eq!(degeneracy(&gen(GraphFamily::Path(6))).k, 1);
        assert_eq!(degeneracy(&gen(GraphFamily::Star(4))).k, 1);
        for d in 2..=4 {
            assert_eq!(degeneracy(&gen(GraphFamily::DsHypercube(d))).k, 2, "d = {d}");
        }
        assert_eq!(degeneracy(&gen(GraphFamily::Path(1))).k, 0);
    }

    #[test]
    fn peel_order_is_a_witness() {
        let g = double_subdivision(&gen(GraphFamily::Icosahedron));
        let d = degeneracy(&g);
        let mut removed = vec![false; g.n()];
        for &v in &d.peel_order {
            let residual = g.neighbors(v).iter().filter(|&&w| !removed[w]).count();
            assert!(residual <= d.k);
            removed[v] = true;
        }
        assert!(removed.iter().all(|&r| r));
    }

    #[test]
    fn metrics_examples() {
        let p7 = metrics(&gen(GraphFamily::Path(7)));
        assert!(p7.is_tree && p7.is_bipartite && p7.is_connected);
        assert_eq!(p7.girth, None);

        let heawood = metrics(&fixtures::heawood());
        assert_eq!((heawood.min_degree, heawood.girth), (3, Some(6)));
        assert!(heawood.is_bipartite);

        let ds = metrics(&double_subdivision(&gen(GraphFamily::Icosahedron)));
        assert!(ds.is_bipartite && ds.is_connected);
        assert_eq!(ds.girth, Some(4));

        let c5 = metrics(&gen(GraphFamily::Cycle(5)));
        assert_eq!(c5.girth, Some(5));
        assert!(!c5.is_bipartite && !c5.is_tree);
        assert_eq!(metrics(&fixtures::petersen()).girth, Some(5));
    }
}
