use serde::{Deserialize, Serialize};

use super::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductKind {
    Cartesian,
    Strong,
    Lexicographic,
}

/// Graph product on `V(g) x V(h)`; vertex `(u, v)` gets index `u * |V(h)| + v`.
pub fn product(g: &Graph, h: &Graph, kind: ProductKind) -> Graph {
    let nh = h.n();
    Graph::from_predicate(g.n() * nh, |a, b| {
        let (u, v) = (a / nh, a % nh);
        let (x, y) = (b / nh, b % nh);
        let gu = g.has_edge(u, x);
        let hv = h.has_edge(v, y);
        match kind {
            ProductKind::Cartesian => (gu && v == y) || (u == x && hv),
            ProductKind::Strong => (gu && v == y) || (u == x && hv) || (gu && hv),
            ProductKind::Lexicographic => (u == x && hv) || gu,
        }
    })
}

/// Replaces every edge `xy` with a 4-cycle `x a y s`.
///
/// Original vertices keep their indices. For each edge in sorted order two
/// vertices are appended: the apex `a` first, then the subdivision vertex
/// `s`, both adjacent to exactly `x` and `y`.
pub fn double_subdivision(g: &Graph) -> Graph {
    let edges = g.edges();
    let n = g.n();
    let mut out = Vec::with_capacity(4 * edges.len());
    for (i, &(x, y)) in edges.iter().enumerate() {
        let apex = n + 2 * i;
        let sub = apex + 1;
        out.extend([(x, apex), (y, apex), (x, sub), (y, sub)]);
    }
    Graph::from_edges(n + 2 * edges.len(), &out).expect("double subdivision is simple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphFamily;

    fn path(n: usize) -> Graph {
        GraphFamily::Path(n).generate().unwrap()
    }

    #[test]
    fn strong_c3_c3_is_k9() {
        let c3 = GraphFamily::Cycle(3).generate().unwrap();
        let g = product(&c3, &c3, ProductKind::Strong);
        assert_eq!(g.n(), 9);
        assert!((0..9).all(|v| g.degree(v) == 8));
    }

    #[test]
    fn small_products_of_p2() {
        let p2 = path(2);
        let lex = product(&p2, &p2, ProductKind::Lexicographic);
        assert_eq!(lex, GraphFamily::Complete(4).generate().unwrap());
        let cart = product(&p2, &p2, ProductKind::Cartesian);
        // (0,0)-(0,1)-(1,1)-(1,0)-(0,0)
        assert_eq!(cart.edges(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn double_subdivision_small_cases() {
        let c4 = double_subdivision(&path(2));
        assert_eq!(c4.edges(), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        let ds = double_subdivision(&GraphFamily::Cycle(3).generate().unwrap());
        assert_eq!((ds.n(), ds.m()), (9, 12));
        assert!((0..3).all(|v| ds.degree(v) == 4));
        assert!(!ds.has_edge(0, 1));
    }

    #[test]
    fn ds_icosahedron_degrees() {
        let ds = double_subdivision(&GraphFamily::Icosahedron.generate().unwrap());
        assert_eq!(ds.n(), 72);
        assert!((0..12).all(|v| ds.degree(v) == 10));
        assert!((12..72).all(|v| ds.degree(v) == 2));
    }
}
