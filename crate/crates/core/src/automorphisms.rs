//! Automorphism enumeration by backtracking, and vertex orbits.
//!
//! Search visits vertices in descending degree (ties by index) and tries
//! images in ascending index. A partial map is extended only if it preserves
//! degree, a per-vertex distance profile, and the distance to every vertex
//! already mapped; automorphisms are isometries, so this prunes nothing valid.

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::unionfind::UnionFind;

/// Default backtracking budget.
pub const DEFAULT_NODE_LIMIT: u64 = 10_000_000;

/// A bijection on `0..n`, stored as its image vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    /// Fails unless `image` is a bijection on `0..image.len()`.
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let mut hit = vec![false; image.len()];
        for &x in &image {
            match hit.get_mut(x) {
                Some(h) if !*h => *h = true,
                _ => return Err(Error::VerificationFailed(format!("image {image:?} is not a bijection"))),
            }
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { image: other.image.iter().map(|&x| self.image[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.image.len()];
        for (i, &x) in self.image.iter().enumerate() {
            image[x] = i;
        }
        Permutation { image }
    }

    /// Whether the map sends every edge of `g` to an edge of `g`.
    pub fn is_automorphism(&self, g: &Graph) -> bool {
        self.image.len() == g.vertex_count()
            && g.edges().iter().all(|&(u, v)| g.has_edge(self.image[u], self.image[v]))
    }
}

/// A partition of the vertex set into orbits, ordered by smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    orbits: Vec<Vec<usize>>,
    orbit_of: Vec<usize>,
}

impl OrbitPartition {
    /// Validates that `orbits` partition `0..vertex_count`.
    pub fn new(mut orbits: Vec<Vec<usize>>, vertex_count: usize) -> Result<Self> {
        let mut orbit_of = vec![usize::MAX; vertex_count];
        for orbit in &mut orbits {
            if orbit.is_empty() {
                return Err(Error::OrbitCoverage("empty orbit".into()));
            }
            orbit.sort_unstable();
        }
        orbits.sort_unstable_by_key(|o| o[0]);
        for (i, orbit) in orbits.iter().enumerate() {
            for &v in orbit {
                match orbit_of.get_mut(v) {
                    None => return Err(Error::OrbitCoverage(format!("vertex {v} out of range"))),
                    Some(slot) if *slot != usize::MAX => {
                        return Err(Error::OrbitCoverage(format!("vertex {v} in two orbits")))
                    }
                    Some(slot) => *slot = i,
                }
            }
        }
        if let Some(v) = orbit_of.iter().position(|&o| o == usize::MAX) {
            return Err(Error::OrbitCoverage(format!("vertex {v} in no orbit")));
        }
        Ok(OrbitPartition { orbits, orbit_of })
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn orbit_of(&self, v: usize) -> usize {
        self.orbit_of[v]
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.orbit_of.len()
    }
}

/// All automorphisms of a connected graph, identity first, the rest in
/// lexicographic order of their image vectors.
pub fn enumerate_automorphisms(g: &Graph, node_limit: u64) -> Result<Vec<Permutation>> {
    g.require_connected()?;
    let apd = DistanceMatrix::new(g);
    let mut search = Search::new(g, &apd, node_limit);
    search.extend(0)?;
    let mut found = search.found;
    found.sort_unstable();
    Ok(found)
}

/// |Aut(G)| by full enumeration.
pub fn group_order(g: &Graph, node_limit: u64) -> Result<usize> {
    enumerate_automorphisms(g, node_limit).map(|a| a.len())
}

/// Orbits generated by `automorphisms` (union of `v` and `α(v)` over all α).
pub fn vertex_orbits(g: &Graph, automorphisms: &[Permutation]) -> OrbitPartition {
    let n = g.vertex_count();
    let mut uf = UnionFind::new(n);
    for alpha in automorphisms {
        for v in 0..n {
            uf.union(v, alpha.apply(v));
        }
    }
    OrbitPartition::new(uf.classes(), n).expect("union-find classes cover the vertices")
}

struct Search<'a> {
    apd: &'a DistanceMatrix,
    order: Vec<usize>,
    // candidate images per vertex, ascending
    candidates: Vec<Vec<usize>>,
    image: Vec<usize>,
    used: Vec<bool>,
    nodes: u64,
    node_limit: u64,
    found: Vec<Permutation>,
}

impl<'a> Search<'a> {
    fn new(g: &Graph, apd: &'a DistanceMatrix, node_limit: u64) -> Self {
        let n = g.vertex_count();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let profiles: Vec<(usize, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut counts = vec![0u32; n];
                for &d in apd.row(v) {
                    counts[d as usize] += 1;
                }
                (g.degree(v), counts)
            })
            .collect();
        let candidates = (0..n)
            .map(|v| (0..n).filter(|&w| profiles[w] == profiles[v]).collect())
            .collect();
        Search {
            apd,
            order,
            candidates,
            image: vec![usize::MAX; n],
            used: vec![false; n],
            nodes: 0,
            node_limit,
            found: Vec::new(),
        }
    }

    fn extend(&mut self, depth: usize) -> Result<()> {
        if depth == self.order.len() {
            self.found.push(Permutation { image: self.image.clone() });
            return Ok(());
        }
        let v = self.order[depth];
        for ci in 0..self.candidates[v].len() {
            let c = self.candidates[v][ci];
            if self.used[c] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.node_limit {
                return Err(Error::NodeLimitExceeded { limit: self.node_limit });
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&x| self.apd.get(v, x) == self.apd.get(c, self.image[x]));
            if !consistent {
                continue;
            }
            self.image[v] = c;
            self.used[c] = true;
            self.extend(depth + 1)?;
            self.used[c] = false;
            self.image[v] = usize::MAX;
        }
        Ok(())
    }
}
