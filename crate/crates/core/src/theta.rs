//! The Djoković-Winkler relation Θ, its transitive closure Θ*, and edge
//! partitions coarser than the Θ*-partition.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::unionfind::UnionFind;

/// Where an [`EdgePartition`] came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionKind {
    ThetaStar,
    CoarseningOfThetaStar,
    UserSupplied,
}

/// A partition of the edge index range `0..edge_count` into nonempty blocks.
///
/// Blocks are kept sorted internally and ordered by their smallest edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePartition {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
    kind: PartitionKind,
}

impl EdgePartition {
    /// Validates that `blocks` are nonempty, disjoint and cover `0..edge_count`.
    pub fn new(mut blocks: Vec<Vec<usize>>, edge_count: usize, kind: PartitionKind) -> Result<Self> {
        let mut block_of = vec![usize::MAX; edge_count];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::PartitionCoverage("empty block".into()));
            }
            block.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        for (i, block) in blocks.iter().enumerate() {
            for &e in block {
                match block_of.get_mut(e) {
                    None => {
                        return Err(Error::PartitionCoverage(format!(
                            "edge {e} out of range for {edge_count} edges"
                        )))
                    }
                    Some(slot) if *slot != usize::MAX => {
                        return Err(Error::PartitionCoverage(format!("edge {e} appears twice")))
                    }
                    Some(slot) => *slot = i,
                }
            }
        }
        if let Some(e) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::PartitionCoverage(format!("edge {e} is in no block")));
        }
        Ok(EdgePartition { blocks, block_of, kind })
    }

    /// The partition with every edge in its own block.
    pub fn singletons(edge_count: usize, kind: PartitionKind) -> Self {
        EdgePartition {
            blocks: (0..edge_count).map(|e| vec![e]).collect(),
            block_of: (0..edge_count).collect(),
            kind,
        }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, index: usize) -> &[usize] {
        &self.blocks[index]
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_of(&self, edge: usize) -> usize {
        self.block_of[edge]
    }

    pub fn kind(&self) -> PartitionKind {
        self.kind
    }

    /// Parses `block: i j k` lines (blank and `#` lines are skipped).
    pub fn parse(text: &str, edge_count: usize) -> Result<Self> {
        let mut blocks = Vec::new();
        for (number, raw) in text.lines().enumerate() {
            let line = number + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let Some(rest) = trimmed.strip_prefix("block:") else {
                return Err(Error::Parse { line, message: "expected `block: i j ...`".into() });
            };
            let mut block = Vec::new();
            for token in rest.split_whitespace() {
                if !token.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::Parse { line, message: format!("invalid token `{token}`") });
                }
                let e: usize = token.parse().map_err(|_| Error::Parse {
                    line,
                    message: format!("integer `{token}` out of range"),
                })?;
                block.push(e);
            }
            if block.is_empty() {
                return Err(Error::Parse { line, message: "empty block".into() });
            }
            blocks.push(block);
        }
        EdgePartition::new(blocks, edge_count, PartitionKind::UserSupplied)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for block in &self.blocks {
            out.push_str("block:");
            for e in block {
                write!(out, " {e}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    /// The first `base` block that is spread over more than one block of `self`.
    pub fn first_split_block<'a>(&self, base: &'a EdgePartition) -> Result<Option<&'a [usize]>> {
        if self.edge_count() != base.edge_count() {
            return Err(Error::PartitionCoverage(format!(
                "partitions cover {} and {} edges",
                self.edge_count(),
                base.edge_count()
            )));
        }
        Ok(base
            .blocks
            .iter()
            .find(|block| block.iter().any(|&e| self.block_of[e] != self.block_of[block[0]]))
            .map(Vec::as_slice))
    }
}

/// Djoković-Winkler relation between edges `e1` and `e2`.
pub fn theta_related(g: &Graph, e1: usize, e2: usize, apd: &DistanceMatrix) -> bool {
    let (u1, v1) = g.edge(e1);
    let (u2, v2) = g.edge(e2);
    apd.get(u1, u2) + apd.get(v1, v2) != apd.get(u1, v2) + apd.get(v1, u2)
}

/// Θ*-classes of a connected graph.
pub fn theta_star_partition(g: &Graph) -> Result<EdgePartition> {
    g.require_connected()?;
    Ok(theta_star_partition_with(g, &DistanceMatrix::new(g)))
}

/// As [`theta_star_partition`], reusing precomputed distances. `g` must be
/// connected.
pub fn theta_star_partition_with(g: &Graph, apd: &DistanceMatrix) -> EdgePartition {
    let m = g.edge_count();
    let related: Vec<(usize, usize)> = (0..m)
        .into_par_iter()
        .flat_map_iter(|e1| {
            ((e1 + 1)..m)
                .filter(move |&e2| theta_related(g, e1, e2, apd))
                .map(move |e2| (e1, e2))
        })
        .collect();
    let mut uf = UnionFind::new(m);
    for (a, b) in related {
        uf.union(a, b);
    }
    EdgePartition::new(uf.classes(), m, PartitionKind::ThetaStar).expect("union-find classes cover the edges")
}

/// Whether every block of `base` lies inside a single block of `candidate`.
pub fn is_coarser(candidate: &EdgePartition, base: &EdgePartition) -> Result<bool> {
    Ok(candidate.first_split_block(base)?.is_none())
}

/// Merges the blocks of `base` according to `grouping`, a partition of the
/// block indices `0..base.len()`.
pub fn coarsen(base: &EdgePartition, grouping: &[Vec<usize>]) -> Result<EdgePartition> {
    let mut used = vec![false; base.len()];
    let mut blocks = Vec::with_capacity(grouping.len());
    for group in grouping {
        if group.is_empty() {
            return Err(Error::InvalidGrouping("empty group".into()));
        }
        let mut merged = Vec::new();
        for &b in group {
            match used.get_mut(b) {
                None => return Err(Error::InvalidGrouping(format!("block {b} out of range"))),
                Some(true) => return Err(Error::InvalidGrouping(format!("block {b} used twice"))),
                Some(flag) => *flag = true,
            }
            merged.extend_from_slice(base.block(b));
        }
        blocks.push(merged);
    }
    if let Some(b) = used.iter().position(|&u| !u) {
        return Err(Error::InvalidGrouping(format!("block {b} not grouped")));
    }
    EdgePartition::new(blocks, base.edge_count(), PartitionKind::CoarseningOfThetaStar)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(k: usize) -> Graph {
        let pairs: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        Graph::from_edge_list(&pairs, k).unwrap()
    }

    #[test]
    fn c4_relation() {
        let g = cycle(4);
        let apd = DistanceMatrix::new(&g);
        // edges: 0=(0,1) 1=(1,2) 2=(2,3) 3=(0,3)
        assert!(theta_related(&g, 0, 2, &apd));
        assert!(!theta_related(&g, 0, 1, &apd));
        for e in 0..4 {
            assert!(theta_related(&g, e, e, &apd));
        }
    }

    #[test]
    fn small_theta_star_partitions() {
        let c6 = theta_star_partition(&cycle(6)).unwrap();
        assert_eq!(c6.blocks(), &[vec![0, 3], vec![1, 4], vec![2, 5]]);
        assert_eq!(c6.kind(), PartitionKind::ThetaStar);
        let k3 = theta_star_partition(&cycle(3)).unwrap();
        assert_eq!(k3.blocks(), &[vec![0, 1, 2]]);
        let disconnected = Graph::from_edge_list(&[(0, 1), (2, 3)], 4).unwrap();
        assert!(theta_star_partition(&disconnected).is_err());
    }

    #[test]
    fn coarsening() {
        let base = theta_star_partition(&cycle(6)).unwrap();
        let same = coarsen(&base, &[vec![0], vec![1], vec![2]]).unwrap();
        assert_eq!(same.blocks(), base.blocks());
        assert_eq!(same.kind(), PartitionKind::CoarseningOfThetaStar);
        let one = coarsen(&base, &[vec![2, 0, 1]]).unwrap();
        assert_eq!(one.blocks(), &[vec![0, 1, 2, 3, 4, 5]]);
        assert!(is_coarser(&one, &base).unwrap());
        assert!(!is_coarser(&base, &one).unwrap());
        assert!(is_coarser(&base, &base).unwrap());

        assert!(matches!(coarsen(&base, &[vec![0, 1]]), Err(Error::InvalidGrouping(_))));
        assert!(matches!(coarsen(&base, &[vec![0, 1], vec![1, 2]]), Err(Error::InvalidGrouping(_))));
        assert!(matches!(coarsen(&base, &[vec![0, 1, 2, 3]]), Err(Error::InvalidGrouping(_))));
        assert!(matches!(coarsen(&base, &[vec![0, 1, 2], vec![]]), Err(Error::InvalidGrouping(_))));
    }

    #[test]
    fn coverage_mismatch() {
        let a = EdgePartition::singletons(3, PartitionKind::UserSupplied);
        let b = EdgePartition::singletons(4, PartitionKind::UserSupplied);
        assert!(matches!(is_coarser(&a, &b), Err(Error::PartitionCoverage(_))));
        assert!(EdgePartition::new(vec![vec![0, 1], vec![1, 2]], 3, PartitionKind::UserSupplied).is_err());
        assert!(EdgePartition::new(vec![vec![0, 1]], 3, PartitionKind::UserSupplied).is_err());
        assert!(EdgePartition::new(vec![vec![0, 3]], 3, PartitionKind::UserSupplied).is_err());
    }

    #[test]
    fn partition_text_format() {
        let p = EdgePartition::parse("# two blocks\nblock: 3 0\nblock: 2 1\n", 4).unwrap();
        assert_eq!(p.blocks(), &[vec![0, 3], vec![1, 2]]);
        assert_eq!(p.kind(), PartitionKind::UserSupplied);
        assert_eq!(p.to_text(), "block: 0 3\nblock: 1 2\n");
        assert!(matches!(EdgePartition::parse("blk: 0\n", 1), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(EdgePartition::parse("block: 0\nblock:\n", 1), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(EdgePartition::parse("block: 0 a\n", 2), Err(Error::Parse { line: 1, .. })));
    }
}
