use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{double_subdivision, Graph, GraphError};

/// Named graph families with deterministic labellings.
///
/// Paths and cycles are labelled `0..n` in order, hypercube vertices by
/// their binary codes, stars put the centre at 0 and complete multipartite
/// graphs number the parts consecutively.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", content = "params", rename_all = "snake_case")]
pub enum GraphFamily {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteMultipartite(Vec<usize>),
    Hypercube(usize),
    /// `K_{1,leaves}`.
    Star(usize),
    Icosahedron,
    /// Double subdivision of the `d`-dimensional hypercube.
    DsHypercube(usize),
}

impl GraphFamily {
    fn name(&self) -> &'static str {
        match self {
            GraphFamily::Path(_) => "path",
            GraphFamily::Cycle(_) => "cycle",
            GraphFamily::Complete(_) => "complete",
            GraphFamily::CompleteMultipartite(_) => "multipartite",
            GraphFamily::Hypercube(_) => "hypercube",
            GraphFamily::Star(_) => "star",
            GraphFamily::Icosahedron => "icosahedron",
            GraphFamily::DsHypercube(_) => "ds-hypercube",
        }
    }

    fn bad(&self, constraint: &str) -> GraphError {
        GraphError::Parameter {
            family: self.name(),
            constraint: constraint.to_string(),
        }
    }

    pub fn generate(&self) -> Result<Graph, GraphError> {
        match *self {
            GraphFamily::Path(n) => {
                if n < 1 {
                    return Err(self.bad("path needs n >= 1"));
                }
                Ok(Graph::from_predicate(n, |u, v| v == u + 1))
            }
            GraphFamily::Cycle(n) => {
                if n < 3 {
                    return Err(self.bad("cycle needs n >= 3"));
                }
                Ok(Graph::from_predicate(n, |u, v| v == u + 1 || (u == 0 && v == n - 1)))
            }
            GraphFamily::Complete(n) => {
                if n < 1 {
                    return Err(self.bad("complete graph needs n >= 1"));
                }
                Ok(Graph::from_predicate(n, |_, _| true))
            }
            GraphFamily::CompleteMultipartite(ref parts) => {
                if parts.is_empty() || parts.contains(&0) {
                    return Err(self.bad("multipartite needs at least one part, each of size >= 1"));
                }
                let part_of: Vec<usize> = parts
                    .iter()
                    .enumerate()
                    .flat_map(|(i, &size)| std::iter::repeat_n(i, size))
                    .collect();
                Ok(Graph::from_predicate(part_of.len(), |u, v| part_of[u] != part_of[v]))
            }
            GraphFamily::Hypercube(d) => {
                if d > 16 {
                    return Err(self.bad("hypercube dimension must be <= 16"));
                }
                Ok(Graph::from_predicate(1 << d, |u, v| (u ^ v).is_power_of_two()))
            }
            GraphFamily::Star(leaves) => {
                if leaves < 1 {
                    return Err(self.bad("star needs at least one leaf"));
                }
                Ok(Graph::from_predicate(leaves + 1, |u, _| u == 0))
            }
            GraphFamily::Icosahedron => Ok(icosahedron()),
            GraphFamily::DsHypercube(d) => {
                if d < 1 {
                    return Err(self.bad("ds-hypercube needs d >= 1"));
                }
                Ok(double_subdivision(&GraphFamily::Hypercube(d).generate()?))
            }
        }
    }
}

/// Top vertex 0, upper ring 1..=5, lower ring 6..=10, bottom vertex 11.
/// Upper `u_i` meets lower `l_i` and `l_{i+1}`.
fn icosahedron() -> Graph {
    let mut edges = Vec::with_capacity(30);
    for i in 0..5 {
        let up = 1 + i;
        let up_next = 1 + (i + 1) % 5;
        let low = 6 + i;
        let low_next = 6 + (i + 1) % 5;
        edges.push((0, up));
        edges.push((up, up_next));
        edges.push((up, low));
        edges.push((up, low_next));
        edges.push((low, low_next));
        edges.push((low, 11));
    }
    Graph::from_edges(12, &edges).expect("icosahedron edge list is simple")
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphFamily::Path(n)
            | GraphFamily::Cycle(n)
            | GraphFamily::Complete(n)
            | GraphFamily::Hypercube(n)
            | GraphFamily::Star(n)
            | GraphFamily::DsHypercube(n) => write!(f, "{}:{n}", self.name()),
            GraphFamily::CompleteMultipartite(parts) => {
                let parts: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "multipartite:{}", parts.join(","))
            }
            GraphFamily::Icosahedron => f.write_str("icosahedron"),
        }
    }
}

impl FromStr for GraphFamily {
    type Err = GraphError;

    /// Parses `name` or `name:params`, e.g. `cycle:7`, `multipartite:2,2,2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, params) = s.split_once(':').unwrap_or((s, ""));
        let bad = |constraint: &str| GraphError::Parameter {
            family: "family",
            constraint: format!("{constraint} in {s:?}"),
        };
        let nums: Vec<usize> = if params.is_empty() {
            Vec::new()
        } else {
            params
                .split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|_| bad("expected integer parameters")))
                .collect::<Result<_, _>>()?
        };
        let one = || match nums.as_slice() {
            [x] => Ok(*x),
            _ => Err(bad("expected exactly one integer parameter")),
        };
        Ok(match name {
            "path" => GraphFamily::Path(one()?),
            "cycle" => GraphFamily::Cycle(one()?),
            "complete" => GraphFamily::Complete(one()?),
            "multipartite" | "complete-multipartite" => GraphFamily::CompleteMultipartite(nums),
            "hypercube" => GraphFamily::Hypercube(one()?),
            "star" => GraphFamily::Star(one()?),
            "icosahedron" => GraphFamily::Icosahedron,
            "ds-hypercube" => GraphFamily::DsHypercube(one()?),
            _ => return Err(bad("unknown family")),
        })
    }
}
