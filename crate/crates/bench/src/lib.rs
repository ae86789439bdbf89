//! Benchmark inputs shared by the criterion harness.

use cheatbot_core::fixtures;
use cheatbot_core::graph::{double_subdivision, product, Graph, GraphFamily, ProductKind};

/// A named graph with the cop count to solve it at.
pub struct Case {
    pub name: &'static str,
    pub graph: Graph,
    pub k: usize,
}

fn family(f: GraphFamily) -> Graph {
    f.generate().expect("valid family parameters")
}

/// Pursuit solves that finish in well under a second.
pub fn pursuit_cases() -> Vec<Case> {
    let p3 = family(GraphFamily::Path(3));
    vec![
        Case { name: "cycle:10 k=2", graph: family(GraphFamily::Cycle(10)), k: 2 },
        Case { name: "petersen k=3", graph: fixtures::petersen(), k: 3 },
        Case { name: "heawood k=3", graph: fixtures::heawood(), k: 3 },
        Case { name: "p3xp3 k=3", graph: product(&p3, &p3, ProductKind::Strong), k: 3 },
        Case { name: "ds(c4) k=3", graph: double_subdivision(&family(GraphFamily::Cycle(4))), k: 3 },
    ]
}

/// Inputs for the fixed-point check.
pub fn psi_cases() -> Vec<Case> {
    vec![
        Case { name: "cycle:8 k=2", graph: family(GraphFamily::Cycle(8)), k: 2 },
        Case { name: "fig1-h k=2", graph: fixtures::fig1_h(), k: 2 },
        Case { name: "petersen k=2", graph: fixtures::petersen(), k: 2 },
    ]
}

/// Bodyguard solves.
pub fn bodyguard_cases() -> Vec<Case> {
    vec![
        Case { name: "cycle:9 k=3", graph: family(GraphFamily::Cycle(9)), k: 3 },
        Case { name: "star:6 k=6", graph: family(GraphFamily::Star(6)), k: 6 },
    ]
}
