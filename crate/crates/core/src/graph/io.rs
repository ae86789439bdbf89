//! Edge-list text format and DOT export.
//!
//! ```text
//! # comment
//! 3
//! 0 1
//! 1 2
//! ```
//!
//! The first non-comment token is the vertex count, every following
//! non-comment line one edge `u v`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::{Graph, GraphError, Vertex};

pub fn parse_edgelist(text: &str) -> Result<Graph, GraphError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parse_err = |message: String| GraphError::Parse { line: line_no, message };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let nums: Vec<usize> = tokens
            .iter()
            .map(|t| t.parse::<usize>().map_err(|_| parse_err(format!("not a vertex index: {t:?}"))))
            .collect::<Result<_, _>>()?;
        match (n, nums.as_slice()) {
            (None, [count]) => n = Some(*count),
            (None, _) => return Err(parse_err("expected the vertex count on its own line".into())),
            (Some(count), [u, v]) => {
                for &x in [u, v] {
                    if x >= count {
                        return Err(GraphError::VertexOutOfRange { vertex: x, n: count });
                    }
                }
                if u == v {
                    return Err(GraphError::SelfLoop(*u));
                }
                let key = (*u.min(v), *u.max(v));
                if !seen.insert(key) {
                    return Err(GraphError::DuplicateEdge(key.0, key.1));
                }
                edges.push(key);
            }
            (Some(_), _) => return Err(parse_err(format!("expected \"u v\", found {line:?}"))),
        }
    }
    let n = n.ok_or(GraphError::Empty)?;
    if n == 0 {
        return Err(GraphError::Empty);
    }
    Graph::from_edges(n, &edges)
}

/// Normalised form: vertex count, then edges `u v` with `u < v`, sorted.
pub fn serialize_edgelist(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// One-line corpus entry `n: u v, u v, ...`.
pub fn parse_corpus_line(line: &str) -> Result<Graph, GraphError> {
    let bad = |message: &str| GraphError::Parse {
        line: 1,
        message: format!("{message}: {line:?}"),
    };
    let (n, rest) = line.split_once(':').ok_or_else(|| bad("missing ':'"))?;
    let n: usize = n.trim().parse().map_err(|_| bad("bad vertex count"))?;
    let mut edges = Vec::new();
    for part in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let mut it = part.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => edges.push((u, v)),
            _ => return Err(bad("bad edge")),
        }
    }
    Graph::from_edges(n, &edges)
}

#[derive(Clone, Debug, Default)]
pub struct DotAnnotations {
    /// Number of cops on each vertex (absent means zero).
    pub cops: BTreeMap<Vertex, usize>,
    pub robber: Option<Vertex>,
    /// Vertices drawn with a bold outline, e.g. where pushers landed.
    pub highlight: Vec<Vertex>,
    pub title: Option<String>,
}

pub fn to_dot(g: &Graph, ann: &DotAnnotations) -> String {
    let mut out = String::from("graph G {\n");
    if let Some(title) = &ann.title {
        let _ = writeln!(out, "  label=\"{}\";", title.replace('"', "'"));
    }
    out.push_str("  node [shape=circle];\n");
    for v in 0..g.n() {
        let mut label = v.to_string();
        let mut attrs = Vec::new();
        if let Some(&c) = ann.cops.get(&v).filter(|&&c| c > 0) {
            let _ = write!(label, "\\nC{c}");
            attrs.push("style=filled".to_string());
            attrs.push("fillcolor=lightblue".to_string());
        }
        if ann.robber == Some(v) {
            label.push_str("\\nR");
            attrs.push("color=red".to_string());
        }
        if ann.highlight.contains(&v) {
            attrs.push("penwidth=3".to_string());
        }
        attrs.insert(0, format!("label=\"{label}\""));
        let _ = writeln!(out, "  {v} [{}];", attrs.join(", "));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphFamily;
    use proptest::prelude::*;

    #[test]
    fn parses_p3() {
        let g = parse_edgelist("3\n0 1\n1 2").unwrap();
        assert_eq!(g, GraphFamily::Path(3).generate().unwrap());
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_edgelist("# header\n\n4 # four vertices\n0 1\n\n2 3 # edge\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_edgelist("2\n0 0"), Err(GraphError::SelfLoop(0)));
        assert_eq!(parse_edgelist("3\n0 1\n1 0"), Err(GraphError::DuplicateEdge(0, 1)));
        assert!(matches!(
            parse_edgelist("3\n0 5"),
            Err(GraphError::VertexOutOfRange { vertex: 5, n: 3 })
        ));
        assert!(matches!(
            parse_edgelist("3\n0 1\n1 2 3"),
            Err(GraphError::Parse { line: 3, .. })
        ));
        assert!(matches!(parse_edgelist("3\n0 x"), Err(GraphError::Parse { line: 2, .. })));
        assert_eq!(parse_edgelist("# nothing"), Err(GraphError::Empty));
    }

    #[test]
    fn dot_output_marks_cops_and_robber() {
        let g = GraphFamily::Path(3).generate().unwrap();
        let ann = DotAnnotations {
            cops: BTreeMap::from([(1, 2)]),
            robber: Some(2),
            highlight: vec![1],
            title: None,
        };
        let dot = to_dot(&g, &ann);
        assert!(dot.starts_with("graph G {"));
        assert!(dot.contains("1 [label=\"1\\nC2\""));
        assert!(dot.contains("2 [label=\"2\\nR\", color=red]"));
        assert!(dot.contains("0 -- 1;") && dot.contains("1 -- 2;"));
        assert!(dot.trim_end().ends_with('}'));
    }

    #[test]
    fn corpus_line() {
        let g = parse_corpus_line("3: 0 1, 1 2").unwrap();
        assert_eq!(g, GraphFamily::Path(3).generate().unwrap());
        assert_eq!(parse_corpus_line("1: ").unwrap().n(), 1);
    }

    proptest! {
        #[test]
        fn edgelist_round_trip(n in 1usize..12, raw in proptest::collection::vec((0usize..12, 0usize..12), 0..30)) {
            let mut edges: Vec<(usize, usize)> = raw
                .into_iter()
                .filter(|&(u, v)| u < n && v < n && u != v)
                .map(|(u, v)| (u.min(v), u.max(v)))
                .collect();
            edges.sort_unstable();
            edges.dedup();
            let g = Graph::from_edges(n, &edges).unwrap();
            let text = serialize_edgelist(&g);
            prop_assert_eq!(&parse_edgelist(&text).unwrap(), &g);
            prop_assert_eq!(serialize_edgelist(&parse_edgelist(&text).unwrap()), text);
        }
    }
}
