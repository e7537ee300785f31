//! Wiener-type indices and the Graovac-Pisanski index.
//!
//! Integer sums are `u128`: a graph that fits in memory has a total distance
//! far below 2^96. The Graovac-Pisanski index itself is an [`ExactRational`].

use rayon::prelude::*;

use crate::automorphisms::{OrbitPartition, Permutation};
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::quotient::{quotient_graph, WeightedQuotient};
use crate::rational::ExactRational;
use crate::theta::{theta_star_partition_with, EdgePartition};

/// Wiener index: sum of distances over unordered vertex pairs.
pub fn wiener(g: &Graph) -> Result<u128> {
    g.require_connected()?;
    let apd = DistanceMatrix::new(g);
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    Ok(subset_sum(&apd, &all))
}

/// W(S), with distances measured in `g` (not in the subgraph induced by `s`).
pub fn wiener_subset(g: &Graph, s: &[usize]) -> Result<u128> {
    check_vertices(g, s)?;
    g.require_connected()?;
    Ok(subset_sum(&DistanceMatrix::new(g), s))
}

/// Sum of distances over unordered pairs of `s`.
pub fn subset_sum(apd: &DistanceMatrix, s: &[usize]) -> u128 {
    let mut total = 0u128;
    for (i, &x) in s.iter().enumerate() {
        let row = apd.row(x);
        total += s[i + 1..].iter().map(|&y| row[y] as u128).sum::<u128>();
    }
    total
}

/// Σ_{x∈s} d(u, x).
pub fn distance_to_set(g: &Graph, u: usize, s: &[usize]) -> Result<u128> {
    check_vertices(g, s)?;
    g.require_connected()?;
    let row = g.bfs_distances(u)?;
    Ok(s.iter().map(|&x| row.dist[x] as u128).sum())
}

/// Vertex-weighted Wiener index of a quotient with its weights.
pub fn wiener_weighted(q: &WeightedQuotient) -> Result<u128> {
    q.quotient.require_connected()?;
    Ok(weighted_sum(&DistanceMatrix::new(&q.quotient), &q.weights))
}

fn weighted_sum(apd: &DistanceMatrix, weights: &[u64]) -> u128 {
    let support: Vec<usize> = (0..weights.len()).filter(|&c| weights[c] > 0).collect();
    let mut total = 0u128;
    for (i, &c) in support.iter().enumerate() {
        let row = apd.row(c);
        for &d in &support[i + 1..] {
            total += weights[c] as u128 * weights[d] as u128 * row[d] as u128;
        }
    }
    total
}

fn check_vertices(g: &Graph, s: &[usize]) -> Result<()> {
    match s.iter().find(|&&v| v >= g.vertex_count()) {
        Some(&vertex) => Err(Error::VertexOutOfRange { vertex, vertex_count: g.vertex_count() }),
        None => Ok(()),
    }
}

fn check_orbits(g: &Graph, orbits: &OrbitPartition) -> Result<()> {
    if orbits.vertex_count() != g.vertex_count() {
        return Err(Error::OrbitCoverage(format!(
            "orbits cover {} vertices, graph has {}",
            orbits.vertex_count(),
            g.vertex_count()
        )));
    }
    Ok(())
}

/// |V| · Σ_i values[i] / |V_i|.
fn orbit_weighted_total(g: &Graph, orbits: &OrbitPartition, values: impl Iterator<Item = u128>) -> ExactRational {
    let total: ExactRational = orbits
        .orbits()
        .iter()
        .zip(values)
        .map(|(orbit, w)| ExactRational::new(w, orbit.len()))
        .sum();
    total * ExactRational::from_integer(g.vertex_count())
}

/// W(V_i) per orbit, in orbit order.
pub fn per_orbit_wiener(g: &Graph, orbits: &OrbitPartition) -> Result<Vec<u128>> {
    g.require_connected()?;
    check_orbits(g, orbits)?;
    let apd = DistanceMatrix::new(g);
    Ok(orbits.orbits().iter().map(|o| subset_sum(&apd, o)).collect())
}

/// Ŵ(G) = |V| Σ_i W(V_i)/|V_i|.
pub fn gp_direct(g: &Graph, orbits: &OrbitPartition) -> Result<ExactRational> {
    let per_orbit = per_orbit_wiener(g, orbits)?;
    Ok(orbit_weighted_total(g, orbits, per_orbit.into_iter()))
}

/// W'(G) = Σ_i W(V_i).
pub fn orbit_wiener_sum(g: &Graph, orbits: &OrbitPartition) -> Result<u128> {
    Ok(per_orbit_wiener(g, orbits)?.into_iter().sum())
}

/// Ŵ(G) from the defining sum over the automorphism group,
/// |V|/(2|Aut|) · Σ_u Σ_α d(u, α(u)).
pub fn gp_by_definition(g: &Graph, automorphisms: &[Permutation]) -> Result<ExactRational> {
    g.require_connected()?;
    if automorphisms.is_empty() {
        return Err(Error::VerificationFailed("empty automorphism list".into()));
    }
    let apd = DistanceMatrix::new(g);
    let moved: u128 = automorphisms
        .iter()
        .map(|alpha| (0..g.vertex_count()).map(|u| apd.get(u, alpha.apply(u)) as u128).sum::<u128>())
        .sum();
    Ok(ExactRational::new(g.vertex_count() as u128 * moved, 2 * automorphisms.len() as u128))
}

/// Whether [`gp_cut_method`] verifies its partition against Θ* first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoarsenessCheck {
    Verify,
    /// Trust the caller. A partition that is not coarser than Θ* gives a
    /// meaningless result.
    Skip,
}

/// Result of the generalized cut method.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutMethodResult {
    pub value: ExactRational,
    /// `terms[i][j]` = W(G/F_j, w_ij) for orbit `i` and block `j`.
    pub terms: Vec<Vec<u128>>,
}

/// Ŵ(G) = |V| Σ_i (1/|V_i|) Σ_j W(G/F_j, w_ij) with w_ij(C) = |V_i ∩ C|.
pub fn gp_cut_method(
    g: &Graph,
    orbits: &OrbitPartition,
    partition: &EdgePartition,
    check: CoarsenessCheck,
) -> Result<CutMethodResult> {
    g.require_connected()?;
    check_orbits(g, orbits)?;
    if partition.edge_count() != g.edge_count() {
        return Err(Error::PartitionCoverage(format!(
            "partition covers {} edges, graph has {}",
            partition.edge_count(),
            g.edge_count()
        )));
    }
    if check == CoarsenessCheck::Verify {
        let theta_star = theta_star_partition_with(g, &DistanceMatrix::new(g));
        if let Some(class) = partition.first_split_block(&theta_star)? {
            return Err(Error::NotCoarser { class: class.to_vec() });
        }
    }
    let columns: Vec<Vec<u128>> = partition
        .blocks()
        .par_iter()
        .map(|block| {
            let q = quotient_graph(g, block)?;
            let apd = DistanceMatrix::new(&q.quotient);
            orbits
                .orbits()
                .iter()
                .map(|orbit| Ok(weighted_sum(&apd, &q.weight_by_orbit(orbit)?.weights)))
                .collect::<Result<Vec<u128>>>()
        })
        .collect::<Result<_>>()?;
    let terms: Vec<Vec<u128>> = (0..orbits.len())
        .map(|i| columns.iter().map(|col| col[i]).collect())
        .collect();
    let value = orbit_weighted_total(g, orbits, terms.iter().map(|row| row.iter().sum()));
    Ok(CutMethodResult { value, terms })
}

/// All index values for one graph and orbit partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexReport {
    pub wiener: u128,
    pub gp_direct: ExactRational,
    pub gp_cut: Option<ExactRational>,
    pub orbit_wiener_sum: u128,
    /// (|V_i|, W(V_i)) per orbit.
    pub per_orbit: Vec<(usize, u128)>,
    /// W(G/F_j, w_ij), present when the cut method ran.
    pub per_block_quotient_terms: Option<Vec<Vec<u128>>>,
}

/// Computes W, W', Ŵ directly, and Ŵ by the cut method when `partition` is given.
pub fn index_report(
    g: &Graph,
    orbits: &OrbitPartition,
    partition: Option<(&EdgePartition, CoarsenessCheck)>,
) -> Result<IndexReport> {
    let per_orbit = per_orbit_wiener(g, orbits)?;
    let gp_direct = orbit_weighted_total(g, orbits, per_orbit.iter().copied());
    let cut = partition
        .map(|(p, check)| gp_cut_method(g, orbits, p, check))
        .transpose()?;
    Ok(IndexReport {
        wiener: wiener(g)?,
        gp_direct,
        orbit_wiener_sum: per_orbit.iter().sum(),
        per_orbit: orbits.orbits().iter().map(Vec::len).zip(per_orbit).collect(),
        gp_cut: cut.as_ref().map(|c| c.value.clone()),
        per_block_quotient_terms: cut.map(|c| c.terms),
    })
}
