//! Zig-zag tubulenes ZT(n,h): generator, orbits, structural automorphisms and
//! closed-form index values.
//!
//! ZT(n,h) has `n + 1` rings of `2h` vertices. Vertex `v^k_{i,j}` (layer `i`,
//! type `k`, position `j`) has index `i·2h + k·h + j`. Ring `i` is the cycle
//! `v^0_{i,0} v^1_{i,0} v^0_{i,1} v^1_{i,1} …`, and `v^1_{i,j}` is joined to
//! `v^0_{i+1,j}`. The boundary vertices `v^0_{0,j}` and `v^1_{n,j}` have
//! degree 2, all others degree 3.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::automorphisms::{OrbitPartition, Permutation};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indices::{index_report, CoarsenessCheck, IndexReport};
use crate::rational::ExactRational;
use crate::theta::theta_star_partition;

/// The parameters of ZT(n,h): `n ≥ 1` hexagon layers of `h ≥ 2` hexagons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TubuleneSpec {
    n: usize,
    h: usize,
}

impl TubuleneSpec {
    pub fn new(n: usize, h: usize) -> Result<Self> {
        if n >= 1 && h >= 2 {
            Ok(TubuleneSpec { n, h })
        } else {
            Err(Error::InvalidTubulene { n, h })
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.h * (self.n + 1)
    }

    pub fn index(&self, label: VertexLabel) -> usize {
        label.layer * 2 * self.h + label.kind * self.h + label.position
    }

    pub fn label(&self, index: usize) -> VertexLabel {
        VertexLabel {
            layer: index / (2 * self.h),
            kind: (index / self.h) % 2,
            position: index % self.h,
        }
    }

    /// Index of `v^kind_{layer, position mod h}`; `position` may be negative.
    fn vertex(&self, layer: usize, kind: usize, position: i64) -> usize {
        let j = position.rem_euclid(self.h as i64) as usize;
        self.index(VertexLabel { layer, kind, position: j })
    }

    /// The set V^kind_layer.
    pub fn layer_set(&self, layer: usize, kind: usize) -> Vec<usize> {
        (0..self.h).map(|j| self.index(VertexLabel { layer, kind, position: j })).collect()
    }
}

impl fmt::Display for TubuleneSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZT({},{})", self.n, self.h)
    }
}

/// `v^kind_{layer,position}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexLabel {
    pub layer: usize,
    pub kind: usize,
    pub position: usize,
}

/// Builds ZT(n,h) with the labelling described in the module docs.
pub fn generate(spec: TubuleneSpec) -> Graph {
    let (n, h) = (spec.n, spec.h);
    let mut pairs = Vec::with_capacity((n + 1) * 2 * h + n * h);
    for i in 0..=n {
        for j in 0..h as i64 {
            pairs.push((spec.vertex(i, 0, j), spec.vertex(i, 1, j)));
            pairs.push((spec.vertex(i, 1, j), spec.vertex(i, 0, j + 1)));
        }
    }
    for i in 0..n {
        for j in 0..h as i64 {
            pairs.push((spec.vertex(i, 1, j), spec.vertex(i + 1, 0, j)));
        }
    }
    Graph::from_edge_list(&pairs, spec.vertex_count()).expect("tubulene edges are simple")
}

/// `# label i k j` comment per vertex, for the edge-list writer.
pub fn label_comments(spec: TubuleneSpec) -> Vec<String> {
    (0..spec.vertex_count())
        .map(|v| {
            let l = spec.label(v);
            format!("label {} {} {}", l.layer, l.kind, l.position)
        })
        .collect()
}

/// Names of the automorphism orbits of ZT(n,h).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OrbitId {
    /// `O^kind_layer = V^kind_layer ∪ V^{1-kind}_{n-layer}`, `layer < n/2`.
    Paired { kind: usize, layer: usize },
    /// `O_{n/2} = V^0_{n/2} ∪ V^1_{n/2}`, even `n` only.
    Middle,
}

impl fmt::Display for OrbitId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitId::Paired { kind, layer } => write!(f, "O^{kind}_{layer}"),
            OrbitId::Middle => write!(f, "O_mid"),
        }
    }
}

/// Orbit names in the order of [`theoretical_orbits`].
pub fn orbit_ids(spec: TubuleneSpec) -> Vec<OrbitId> {
    let mut ids = Vec::new();
    for layer in 0..spec.n.div_ceil(2) {
        ids.push(OrbitId::Paired { kind: 0, layer });
        ids.push(OrbitId::Paired { kind: 1, layer });
    }
    if spec.n.is_multiple_of(2) {
        ids.push(OrbitId::Middle);
    }
    ids
}

/// Vertices of one orbit, ascending.
pub fn orbit_vertices(spec: TubuleneSpec, id: OrbitId) -> Vec<usize> {
    let mut vertices = match id {
        OrbitId::Paired { kind, layer } => {
            let mut v = spec.layer_set(layer, kind);
            v.extend(spec.layer_set(spec.n - layer, 1 - kind));
            v
        }
        OrbitId::Middle => {
            let m = spec.n / 2;
            let mut v = spec.layer_set(m, 0);
            v.extend(spec.layer_set(m, 1));
            v
        }
    };
    vertices.sort_unstable();
    vertices
}

/// The orbit partition predicted for ZT(n,h); orbit `t` is `orbit_ids(spec)[t]`.
pub fn theoretical_orbits(spec: TubuleneSpec) -> OrbitPartition {
    let orbits = orbit_ids(spec).into_iter().map(|id| orbit_vertices(spec, id)).collect();
    OrbitPartition::new(orbits, spec.vertex_count()).expect("tubulene orbits partition the vertices")
}

/// Rotation `v^k_{i,j} ↦ v^k_{i,j+1}`.
pub fn rotation(spec: TubuleneSpec) -> Permutation {
    map_labels(spec, |i, k, j| (i, k, j + 1))
}

/// Reflection extending `v^0_{0,j} ↦ v^0_{0,-j}` on the first ring:
/// `v^0_{i,j} ↦ v^0_{i,-j-i}` and `v^1_{i,j} ↦ v^1_{i,-j-1-i}`.
pub fn reflection(spec: TubuleneSpec) -> Permutation {
    map_labels(spec, |i, k, j| (i, k, -j - k as i64 - i as i64))
}

/// End swap `v^k_{i,j} ↦ v^{1-k}_{n-i,-j}`, exchanging the two boundary rings.
pub fn end_swap(spec: TubuleneSpec) -> Permutation {
    map_labels(spec, |i, k, j| (spec.n - i, 1 - k, -j))
}

fn map_labels(spec: TubuleneSpec, f: impl Fn(usize, usize, i64) -> (usize, usize, i64)) -> Permutation {
    let image = (0..spec.vertex_count())
        .map(|v| {
            let l = spec.label(v);
            let (i, k, j) = f(l.layer, l.kind, l.position as i64);
            spec.vertex(i, k, j)
        })
        .collect();
    Permutation::new(image).expect("label maps are bijective")
}

/// The 4h automorphisms generated by [`rotation`], [`reflection`] and
/// [`end_swap`], identity first. Only odd `n` is supported.
pub fn structural_automorphisms(spec: TubuleneSpec) -> Result<Vec<Permutation>> {
    if spec.n.is_multiple_of(2) {
        return Err(Error::EvenLayerCount { n: spec.n, h: spec.h });
    }
    let g = generate(spec);
    let generators = [rotation(spec), reflection(spec), end_swap(spec)];
    for (name, p) in ["rotation", "reflection", "end swap"].iter().zip(&generators) {
        if !p.is_automorphism(&g) {
            return Err(Error::VerificationFailed(format!("{name} of {spec}")));
        }
    }
    let identity = Permutation::identity(spec.vertex_count());
    let mut seen = BTreeSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(p) = queue.pop_front() {
        for gen in &generators {
            let q = gen.compose(&p);
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    if seen.len() != 4 * spec.h {
        return Err(Error::VerificationFailed(format!(
            "generated group of {spec} has {} elements, expected {}",
            seen.len(),
            4 * spec.h
        )));
    }
    // BTreeSet order is lexicographic, so the identity comes first
    Ok(seen.into_iter().collect())
}

/// Integer `h/2 · inner` (the tables' `W` rows are always integral).
fn half_h_times(h: i128, inner: i128) -> u128 {
    let twice = h * inner;
    debug_assert!(twice % 2 == 0 && twice >= 0);
    (twice / 2) as u128
}

/// Table cells for the outermost orbits of ZT(n,h), by parity of `h` and `n`.
/// `u` is any vertex of V^0_0 and `v` any vertex of V^1_0; `d(x, S)` is the
/// sum of distances from `x` to the vertices of `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistanceTable {
    pub d_u_v00: u128,
    pub d_u_v1n: u128,
    pub d_u_o00: u128,
    pub w_o00: u128,
    pub d_v_v10: u128,
    pub d_v_v0n: u128,
    pub d_v_o10: u128,
    pub w_o10: u128,
}

/// Evaluates the parity-appropriate distance table for ZT(n,h).
pub fn distance_table(spec: TubuleneSpec) -> DistanceTable {
    let (n, h) = (spec.n as i128, spec.h as i128);
    let h_odd = h % 2 == 1;
    let n_odd = n % 2 == 1;
    // Each cell is stored doubled and halved at the end.
    let ring_2x = if h_odd { h * h - 1 } else { h * h };
    // `+1` terms that differ between the four tables
    let (u_far, u_o00, v_far, v_o10) = match (h_odd, n_odd) {
        (true, true) => (0, -1, 0, -1),
        (false, true) => (1, 1, 1, 1),
        (true, false) => (1, 0, 1, 0),
        (false, false) => (0, 0, 0, 0),
    };
    let (d_u_v1n_2x, d_u_o00_2x) = if h > n + 2 {
        (
            h * h + 2 * h * n + n * n + 2 * n + u_far,
            2 * h * h + 2 * h * n + n * n + 2 * n + u_o00,
        )
    } else {
        (2 * h * (2 * n + 1), h * h + 4 * h * n + 2 * h - i128::from(h_odd))
    };
    let (d_v_v0n_2x, d_v_o10_2x) = if h > n {
        (
            h * h + 2 * h * n + n * n - 2 * n + v_far,
            2 * h * h + 2 * h * n + n * n - 2 * n + v_o10,
        )
    } else {
        (2 * h * (2 * n - 1), h * h + 4 * h * n - 2 * h - i128::from(h_odd))
    };
    let half = |x: i128| (x / 2) as u128;
    DistanceTable {
        d_u_v00: half(ring_2x),
        d_u_v1n: half(d_u_v1n_2x),
        d_u_o00: half(d_u_o00_2x),
        w_o00: half_h_times(h, d_u_o00_2x),
        d_v_v10: half(ring_2x),
        d_v_v0n: half(d_v_v0n_2x),
        d_v_o10: half(d_v_o10_2x),
        w_o10: half_h_times(h, d_v_o10_2x),
    }
}

/// W(orbit) from the distance tables. Inner orbits `O^k_i` reuse the
/// outermost values of ZT(n-2i, h); the middle orbit of even `n` is a
/// `2h`-cycle with W = h³.
pub fn orbit_wiener_closed(spec: TubuleneSpec, id: OrbitId) -> u128 {
    match id {
        OrbitId::Middle => (spec.h as u128).pow(3),
        OrbitId::Paired { kind, layer } => {
            let inner = TubuleneSpec { n: spec.n - 2 * layer, h: spec.h };
            let table = distance_table(inner);
            if kind == 0 {
                table.w_o00
            } else {
                table.w_o10
            }
        }
    }
}

/// (n+1)·W' with W' summed from [`orbit_wiener_closed`]; valid for every spec.
pub fn table_gp(spec: TubuleneSpec) -> u128 {
    let w_prime: u128 = orbit_ids(spec).into_iter().map(|id| orbit_wiener_closed(spec, id)).sum();
    (spec.n as u128 + 1) * w_prime
}

/// One row of the closed-formula table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    OddOddBelow,
    OddOddMiddle,
    OddOddAbove,
    EvenOddBelow,
    EvenOddMiddle,
    EvenOddAbove,
    OddEvenBelow,
    OddEvenMiddle,
    OddEvenAbove,
    EvenEvenBelow,
    EvenEvenMiddle,
    EvenEvenAbove,
}

impl Regime {
    /// Identifier of the form `h-<parity>,n-<parity>,<condition>`.
    pub fn id(&self) -> &'static str {
        match self {
            Regime::OddOddBelow => "h-odd,n-odd,n<h-2",
            Regime::OddOddMiddle => "h-odd,n-odd,n=h-2",
            Regime::OddOddAbove => "h-odd,n-odd,n>=h",
            Regime::EvenOddBelow => "h-even,n-odd,n<h-2",
            Regime::EvenOddMiddle => "h-even,n-odd,n=h-1",
            Regime::EvenOddAbove => "h-even,n-odd,n>=h",
            Regime::OddEvenBelow => "h-odd,n-even,n<h-2",
            Regime::OddEvenMiddle => "h-odd,n-even,n=h-1",
            Regime::OddEvenAbove => "h-odd,n-even,n>=h",
            Regime::EvenEvenBelow => "h-even,n-even,n<h-2",
            Regime::EvenEvenMiddle => "h-even,n-even,n=h-2",
            Regime::EvenEvenAbove => "h-even,n-even,n>=h",
        }
    }

    /// The row whose conditions (n, h) satisfies, if any.
    pub fn select(spec: TubuleneSpec) -> Option<Regime> {
        let (n, h) = (spec.n, spec.h);
        let below = n + 2 < h;
        match (h % 2 == 1, n % 2 == 1) {
            (true, true) => {
                if below {
                    Some(Regime::OddOddBelow)
                } else if n + 2 == h && n >= 3 {
                    Some(Regime::OddOddMiddle)
                } else if n >= h && h >= 5 {
                    Some(Regime::OddOddAbove)
                } else {
                    None
                }
            }
            (false, true) => {
                if below {
                    Some(Regime::EvenOddBelow)
                } else if n + 1 == h && n >= 3 {
                    Some(Regime::EvenOddMiddle)
                } else if n >= h && h >= 4 {
                    Some(Regime::EvenOddAbove)
                } else {
                    None
                }
            }
            (true, false) => {
                if below {
                    Some(Regime::OddEvenBelow)
                } else if n + 1 == h && n >= 4 {
                    Some(Regime::OddEvenMiddle)
                } else if n >= h && h >= 5 {
                    Some(Regime::OddEvenAbove)
                } else {
                    None
                }
            }
            (false, false) => {
                if below {
                    Some(Regime::EvenEvenBelow)
                } else if n + 2 == h && n >= 4 {
                    Some(Regime::EvenEvenMiddle)
                } else if n >= h && h >= 6 {
                    Some(Regime::EvenEvenAbove)
                } else {
                    None
                }
            }
        }
    }

    /// Evaluates this row's formula at (n, h), regardless of its conditions.
    pub fn evaluate(&self, spec: TubuleneSpec) -> ExactRational {
        let (n, h) = (spec.n as i128, spec.h as i128);
        let (h2, h3, n2, n3) = (h * h, h * h * h, n * n, n * n * n);
        // value = prefactor/6 · (n+1)^power · poly
        let (prefactor, power, poly) = match self {
            Regime::OddOddBelow => (h, 2, 6 * h2 + 3 * h * n + 3 * h + n2 + 2 * n - 3),
            Regime::OddOddMiddle => {
                (h, 1, 6 * h2 * n + 3 * h2 + 3 * h * n2 + 12 * h * n + 9 * h + n3 - 7 * n - 3)
            }
            Regime::OddOddAbove | Regime::OddEvenAbove => {
                (h, 1, h3 + 3 * h2 * n + 3 * h2 + 6 * h * n2 + 12 * h * n + 5 * h - 3 * n - 3)
            }
            Regime::EvenOddBelow => (h, 2, 6 * h2 + 3 * h * n + 3 * h + n2 + 2 * n + 3),
            Regime::EvenOddMiddle => {
                (h, 1, 6 * h2 * n + 3 * h2 + 3 * h * n2 + 12 * h * n + 9 * h + n3 - n)
            }
            Regime::EvenOddAbove => (h2, 1, h2 + 3 * h * n + 3 * h + 6 * n2 + 12 * n + 8),
            Regime::OddEvenBelow | Regime::EvenEvenBelow => {
                (h, 1, 6 * h2 * n + 6 * h2 + 3 * h * n2 + 6 * h * n + n3 + 3 * n2 + 2 * n)
            }
            Regime::OddEvenMiddle => {
                (h, 1, 6 * h2 * n + 3 * h2 + 3 * h * n2 + 12 * h * n + 6 * h + n3 - 4 * n - 3)
            }
            Regime::EvenEvenMiddle => {
                (h, 1, 6 * h2 * n + 3 * h2 + 3 * h * n2 + 12 * h * n + 6 * h + n3 - 4 * n)
            }
            Regime::EvenEvenAbove => (h2, 1, h2 + 3 * h * n + 3 * h + 6 * n2 + 12 * n + 2),
        };
        ExactRational::new(prefactor * (n + 1).pow(power) * poly, 6)
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Closed-formula value of Ŵ(ZT(n,h)), or unsupported when no row applies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormResult {
    pub regime: Option<Regime>,
    pub value: Option<ExactRational>,
}

impl ClosedFormResult {
    pub fn supported(&self) -> bool {
        self.regime.is_some()
    }
}

pub fn closed_form_gp(spec: TubuleneSpec) -> ClosedFormResult {
    let regime = Regime::select(spec);
    ClosedFormResult { regime, value: regime.map(|r| r.evaluate(spec)) }
}

/// Every route for one tubulene.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TubuleneReport {
    pub spec: TubuleneSpec,
    /// Direct and cut-method values, the latter over the Θ*-partition.
    pub index: IndexReport,
    pub closed: ClosedFormResult,
}

impl TubuleneReport {
    /// Whether the cut method and (when supported) the closed form equal the
    /// direct value.
    pub fn routes_agree(&self) -> bool {
        let direct = &self.index.gp_direct;
        self.index.gp_cut.as_ref().is_none_or(|c| c == direct)
            && self.closed.value.as_ref().is_none_or(|c| c == direct)
    }
}

/// Generates ZT(n,h) and evaluates the direct, cut-method and closed routes
/// with the theoretical orbits.
pub fn full_report(spec: TubuleneSpec) -> Result<TubuleneReport> {
    let g = generate(spec);
    let orbits = theoretical_orbits(spec);
    let theta = theta_star_partition(&g)?;
    let index = index_report(&g, &orbits, Some((&theta, CoarsenessCheck::Skip)))?;
    Ok(TubuleneReport { spec, index, closed: closed_form_gp(spec) })
}
