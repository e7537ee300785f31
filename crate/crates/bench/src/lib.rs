//! Prepared inputs for the route benchmarks.

use gpindex_core::theta::theta_star_partition;
use gpindex_core::tubulene::{generate, theoretical_orbits};
use gpindex_core::{EdgePartition, Graph, OrbitPartition, TubuleneSpec};

/// Tubulene sizes benchmarked, smallest first.
pub const TUBULENES: [(usize, usize); 4] = [(3, 7), (5, 8), (7, 10), (11, 12)];

/// A generated tubulene with its orbits and Θ*-partition.
pub struct Case {
    pub spec: TubuleneSpec,
    pub graph: Graph,
    pub orbits: OrbitPartition,
    pub theta: EdgePartition,
}

impl Case {
    pub fn new(n: usize, h: usize) -> Case {
        let spec = TubuleneSpec::new(n, h).expect("benchmark sizes are valid");
        let graph = generate(spec);
        let theta = theta_star_partition(&graph).expect("tubulenes are connected");
        Case { spec, orbits: theoretical_orbits(spec), graph, theta }
    }
}

pub fn cases() -> Vec<Case> {
    TUBULENES.iter().map(|&(n, h)| Case::new(n, h)).collect()
}
