//! Shared fixtures for the benchmark suite.

use rcm_core::graphs::{named_graph, random_regular, Graph};

pub fn petersen() -> Graph {
    named_graph("petersen").unwrap()
}

pub fn k5() -> Graph {
    named_graph("k5").unwrap()
}

pub fn cubic(n: usize) -> Graph {
    random_regular(n, 3, 42).unwrap()
}
