//! Named graphs from the literature plus a few hand-made cliques.

use crate::graph::{Label, TemporalGraph};

use super::OracleError;

pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    order: &'static [&'static str],
    edges: &'static [(&'static str, &'static str, Label)],
}

impl Fixture {
    pub fn graph(&self) -> TemporalGraph {
        TemporalGraph::from_named_with_order(self.order, self.edges.iter().copied())
            .expect("fixtures are valid")
    }
}

const ABCD: &[&str] = &["a", "b", "c", "d"];
const ABCDE: &[&str] = &["a", "b", "c", "d", "e"];
const FOUR: &[&str] = &["1", "2", "3", "4"];

pub const FIXTURES: &[Fixture] = &[
    Fixture {
        name: "fig1_gpp",
        description:
            "four-cycle spanner of a multi-labeled graph; connected, not a clique, no pivot",
        order: ABCD,
        edges: &[("a", "b", 2), ("b", "c", 3), ("c", "d", 1), ("a", "d", 4)],
    },
    Fixture {
        name: "fig2_k5",
        description: "recursively 1-hop dismountable K5 with a 7-edge spanner",
        order: ABCDE,
        edges: &[
            ("a", "b", 0),
            ("a", "c", 3),
            ("a", "d", 2),
            ("a", "e", 9),
            ("b", "c", 4),
            ("b", "d", 6),
            ("b", "e", 1),
            ("c", "d", 5),
            ("c", "e", 7),
            ("d", "e", 8),
        ],
    },
    Fixture {
        name: "fig5_g1",
        description: "graph whose compression is fig5_g2",
        order: ABCDE,
        edges: &[
            ("c", "d", 1),
            ("c", "e", 2),
            ("a", "c", 3),
            ("b", "d", 4),
            ("a", "b", 5),
            ("d", "e", 17),
        ],
    },
    Fixture {
        name: "fig5_g2",
        description: "compressed labeling, lifetime 4 on 6 edges",
        order: ABCDE,
        edges: &[
            ("c", "d", 1),
            ("c", "e", 2),
            ("a", "c", 3),
            ("b", "d", 2),
            ("a", "b", 4),
            ("d", "e", 3),
        ],
    },
    Fixture {
        name: "fig5_g3",
        description: "full-range graph, not temporally connected",
        order: ABCDE,
        edges: &[
            ("a", "b", 1),
            ("a", "c", 2),
            ("c", "d", 3),
            ("c", "e", 4),
            ("d", "e", 5),
            ("b", "d", 6),
        ],
    },
    Fixture {
        name: "fig12_k8",
        description: "K8 that is neither pivotable nor dismountable",
        order: &["0", "1", "2", "3", "4", "5", "6", "7"],
        edges: &[
            // cross edges
            ("0", "5", 10),
            ("0", "7", 11),
            ("1", "4", 16),
            ("1", "6", 17),
            ("2", "4", 12),
            ("2", "6", 13),
            ("3", "5", 14),
            ("3", "7", 15),
            // M+
            ("5", "1", 18),
            ("6", "0", 19),
            ("4", "3", 20),
            ("7", "2", 21),
            // M-
            ("7", "1", 6),
            ("6", "3", 7),
            ("4", "0", 8),
            ("5", "2", 9),
            // inside {4,5,6,7}
            ("5", "4", 22),
            ("4", "6", 23),
            ("7", "4", 24),
            ("5", "6", 25),
            ("5", "7", 26),
            ("7", "6", 27),
            // inside {0,1,2,3}
            ("1", "0", 0),
            ("2", "0", 1),
            ("0", "3", 2),
            ("2", "1", 3),
            ("1", "3", 4),
            ("2", "3", 5),
        ],
    },
    Fixture {
        name: "k4_min",
        description: "non-dismountable, non-pivotable K4 with a 4-edge spanner",
        order: FOUR,
        edges: &[
            ("1", "2", 1),
            ("1", "3", 2),
            ("2", "4", 3),
            ("2", "3", 5),
            ("1", "4", 6),
            ("3", "4", 7),
        ],
    },
    Fixture {
        name: "k4_2hop",
        description: "K4 that is 2-hop but not 1-hop dismountable",
        order: FOUR,
        edges: &[
            ("1", "2", 1),
            ("1", "4", 2),
            ("1", "3", 3),
            ("2", "4", 4),
            ("2", "3", 6),
            ("3", "4", 7),
        ],
    },
    Fixture {
        name: "k4_fullrange",
        description: "full-range K4 with pivot c-d",
        order: ABCD,
        edges: &[
            ("a", "b", 1),
            ("b", "c", 2),
            ("a", "c", 3),
            ("c", "d", 4),
            ("b", "d", 5),
            ("a", "d", 6),
        ],
    },
];

pub fn fixture_names() -> impl Iterator<Item = &'static str> {
    FIXTURES.iter().map(|f| f.name)
}

pub fn fixture_info(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}

pub fn fixture(name: &str) -> Result<TemporalGraph, OracleError> {
    fixture_info(name)
        .map(Fixture::graph)
        .ok_or_else(|| OracleError::UnknownFixture(name.to_string()))
}
