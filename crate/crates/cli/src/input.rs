//! Graph arguments: files, family specs, fixtures, products and subdivisions.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use cheatbot_core::fixtures;
use cheatbot_core::graph::{double_subdivision, parse_edgelist, product, Graph, GraphFamily, ProductKind};
use serde::{Deserialize, Serialize};

/// Where a graph came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDescriptor {
    /// `file`, `family`, `fixture`, `product` or `ds`.
    pub source: String,
    pub spec: String,
    pub content_hash: String,
}

pub struct Loaded {
    pub graph: Graph,
    pub descriptor: GraphDescriptor,
}

fn kind(name: &str) -> Result<ProductKind> {
    Ok(match name {
        "strong" => ProductKind::Strong,
        "cartesian" => ProductKind::Cartesian,
        "lexicographic" | "lex" => ProductKind::Lexicographic,
        _ => bail!("unknown product kind {name:?} (strong, cartesian, lexicographic)"),
    })
}

fn single(spec: &str) -> Result<(Graph, &'static str)> {
    if let Some(g) = fixtures::by_name(spec) {
        return Ok((g, "fixture"));
    }
    if spec == "ds-icosahedron" {
        return Ok((double_subdivision(&GraphFamily::Icosahedron.generate()?), "ds"));
    }
    if let Some(inner) = spec.strip_prefix("ds(").and_then(|s| s.strip_suffix(')')) {
        return Ok((double_subdivision(&single(inner)?.0), "ds"));
    }
    if let Ok(family) = spec.parse::<GraphFamily>() {
        return Ok((family.generate()?, "family"));
    }
    let path = Path::new(spec);
    if path.exists() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {spec}"))?;
        let g = parse_edgelist(&text).with_context(|| format!("parsing {spec}"))?;
        return Ok((g, "file"));
    }
    bail!(
        "{spec:?} is not a file, fixture ({}) or family spec such as cycle:7",
        fixtures::FIXTURE_NAMES.join(", ")
    )
}

/// Resolves one or more words: `SPEC`, `product KIND SPEC SPEC` or `ds SPEC`.
pub fn load(words: &[String]) -> Result<Loaded> {
    let (graph, source) = match words {
        [one] => single(one)?,
        [p, k, a, b] if p == "product" => (product(&single(a)?.0, &single(b)?.0, kind(k)?), "product"),
        [d, a] if d == "ds" => (double_subdivision(&single(a)?.0), "ds"),
        [] => bail!("missing graph"),
        _ => {
            // `cycle 7` style: name then integer parameters
            let spec = format!("{}:{}", words[0], words[1..].join(","));
            single(&spec)?
        }
    };
    let descriptor = GraphDescriptor {
        source: source.to_string(),
        spec: words.join(" "),
        content_hash: graph.content_hash(),
    };
    Ok(Loaded { graph, descriptor })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    #[test]
    fn resolves_forms() {
        assert_eq!(load(&words("cycle 7")).unwrap().graph.m(), 7);
        assert_eq!(load(&words("cycle:7")).unwrap().descriptor.source, "family");
        assert_eq!(load(&words("ds-icosahedron")).unwrap().graph.n(), 72);
        assert_eq!(load(&words("product strong cycle:4 path:3")).unwrap().graph.n(), 12);
        assert_eq!(load(&words("ds path:2")).unwrap().graph.m(), 4);
        assert_eq!(load(&words("heawood")).unwrap().graph.n(), 14);
        assert!(load(&words("nonsense")).is_err());
        assert!(load(&words("cycle 2")).is_err());
    }
}
