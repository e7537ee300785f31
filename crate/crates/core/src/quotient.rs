//! Quotient graphs G/F and orbit-derived vertex weights.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// The quotient G/F together with a weight per quotient vertex.
///
/// Quotient vertex `c` is the `c`-th component of G − F, ordered by smallest
/// member vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedQuotient {
    pub quotient: Graph,
    pub component_of: Vec<usize>,
    pub members: Vec<Vec<usize>>,
    pub weights: Vec<u64>,
}

/// Builds G/F for the edge set `block`; all weights start at zero.
pub fn quotient_graph(g: &Graph, block: &[usize]) -> Result<WeightedQuotient> {
    let components = g.connected_components(block)?;
    let component_of = components.component_of.clone();
    // only edges of F can join different components
    let adjacent: BTreeSet<(usize, usize)> = block
        .iter()
        .map(|&e| {
            let (u, v) = g.edge(e);
            let (a, b) = (component_of[u], component_of[v]);
            (a.min(b), a.max(b))
        })
        .filter(|(a, b)| a != b)
        .collect();
    let pairs: Vec<_> = adjacent.into_iter().collect();
    let quotient = Graph::from_edge_list(&pairs, components.count)?;
    Ok(WeightedQuotient {
        quotient,
        members: components.members(),
        weights: vec![0; components.count],
        component_of,
    })
}

impl WeightedQuotient {
    /// Copy with `weights[C] = |orbit ∩ C|`.
    pub fn weight_by_orbit(&self, orbit: &[usize]) -> Result<WeightedQuotient> {
        let mut weights = vec![0; self.members.len()];
        for &v in orbit {
            let c = *self.component_of.get(v).ok_or(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.component_of.len(),
            })?;
            weights[c] += 1;
        }
        Ok(WeightedQuotient { weights, ..self.clone() })
    }

    /// Edge list of the quotient with one `# members:` line per quotient vertex.
    pub fn to_text(&self) -> String {
        let comments: Vec<String> = self
            .members
            .iter()
            .zip(&self.weights)
            .enumerate()
            .map(|(c, (members, w))| {
                let list: Vec<String> = members.iter().map(ToString::to_string).collect();
                format!("members: {c} weight={w} [{}]", list.join(" "))
            })
            .collect();
        self.quotient.to_edge_list(Some(&comments))
    }
}
