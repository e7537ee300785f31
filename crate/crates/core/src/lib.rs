//! Graovac-Pisanski (modified Wiener) index of connected graphs.
//!
//! Three independent routes compute the same number:
//!
//! * [`indices::gp_direct`] sums the Wiener indices of the automorphism orbits,
//! * [`indices::gp_cut_method`] works on weighted quotient graphs G/F_j for any
//!   edge partition coarser than the Θ*-partition,
//! * [`tubulene::closed_form_gp`] evaluates closed formulas for zig-zag
//!   tubulenes ZT(n,h).
//!
//! ```
//! use gpindex_core::{automorphisms, indices, theta, Graph, ExactRational};
//!
//! let c6 = Graph::from_edge_list(&[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)], 6)?;
//! let autos = automorphisms::enumerate_automorphisms(&c6, automorphisms::DEFAULT_NODE_LIMIT)?;
//! let orbits = automorphisms::vertex_orbits(&c6, &autos);
//! let classes = theta::theta_star_partition(&c6)?;
//! let cut = indices::gp_cut_method(&c6, &orbits, &classes, indices::CoarsenessCheck::Verify)?;
//! assert_eq!(cut.value, indices::gp_direct(&c6, &orbits)?);
//! assert_eq!(cut.value, ExactRational::from_integer(27));
//! # Ok::<(), gpindex_core::Error>(())
//! ```

pub mod automorphisms;
pub mod error;
pub mod graph;
pub mod indices;
pub mod quotient;
pub mod rational;
pub mod theta;
pub mod tubulene;
mod unionfind;

pub use automorphisms::{OrbitPartition, Permutation};
pub use error::{Error, Result};
pub use graph::{Components, DistanceMatrix, DistanceRow, Graph, UNREACHABLE};
pub use indices::{CoarsenessCheck, CutMethodResult, IndexReport};
pub use quotient::WeightedQuotient;
pub use rational::ExactRational;
pub use theta::{EdgePartition, PartitionKind};
pub use tubulene::{ClosedFormResult, OrbitId, Regime, TubuleneReport, TubuleneSpec, VertexLabel};
