//! Undirected simple graphs, breadth-first distances and connected components.
//!
//! Vertices are dense indices `0..vertex_count`. Edges are identified by their
//! position in the input list, so edge sets (and edge partitions) can be stored
//! as plain index sets.

use std::collections::{HashSet, VecDeque};
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Sentinel distance for vertices that cannot be reached from the source.
pub const UNREACHABLE: u32 = u32::MAX;

/// An immutable undirected simple graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    // (neighbor, edge index), sorted by neighbor
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph from `pairs`; edge `i` is `pairs[i]`.
    ///
    /// Self-loops, duplicate edges (in either orientation) and out-of-range
    /// endpoints are rejected.
    pub fn from_edge_list(pairs: &[(usize, usize)], vertex_count: usize) -> Result<Graph> {
        let mut seen = HashSet::with_capacity(pairs.len());
        let mut adjacency = vec![Vec::new(); vertex_count];
        let mut edges = Vec::with_capacity(pairs.len());
        for (index, &(u, v)) in pairs.iter().enumerate() {
            for vertex in [u, v] {
                if vertex >= vertex_count {
                    return Err(Error::VertexOutOfRange { vertex, vertex_count });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge { u, v });
            }
            adjacency[u].push((v, index));
            adjacency[v].push((u, index));
            edges.push(key);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { vertex_count, edges, adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edge `index` as `(smaller endpoint, larger endpoint)`.
    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].iter().map(|&(w, _)| w)
    }

    /// `(neighbor, edge index)` pairs around `v`, ascending by neighbor.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let list = self.adjacency.get(u)?;
        list.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| list[i].1)
    }

    fn check_vertex(&self, vertex: usize) -> Result<()> {
        if vertex < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex, vertex_count: self.vertex_count })
        }
    }

    /// Hop distances from `source` to every vertex.
    pub fn bfs_distances(&self, source: usize) -> Result<DistanceRow> {
        self.check_vertex(source)?;
        Ok(DistanceRow { source, dist: bfs(self, source, None) })
    }

    /// Component id per vertex in the graph with `removed_edges` deleted.
    ///
    /// Ids are dense and assigned in order of the smallest vertex in each
    /// component.
    pub fn connected_components(&self, removed_edges: &[usize]) -> Result<Components> {
        let mut removed = vec![false; self.edge_count()];
        for &edge in removed_edges {
            if edge >= self.edge_count() {
                return Err(Error::EdgeOutOfRange { edge, edge_count: self.edge_count() });
            }
            removed[edge] = true;
        }
        Ok(self.components_with_mask(&removed))
    }

    pub(crate) fn components_with_mask(&self, removed: &[bool]) -> Components {
        let mut component_of = vec![usize::MAX; self.vertex_count];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.vertex_count {
            if component_of[start] != usize::MAX {
                continue;
            }
            component_of[start] = count;
            queue.push_back(start);
            while let Some(x) = queue.pop_front() {
                for &(y, e) in &self.adjacency[x] {
                    if !removed[e] && component_of[y] == usize::MAX {
                        component_of[y] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        Components { component_of, count }
    }

    /// Whether the graph has exactly one component. The empty graph is an error.
    pub fn is_connected(&self) -> Result<bool> {
        if self.vertex_count == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(self.components_with_mask(&vec![false; self.edge_count()]).count == 1)
    }

    /// Fails with [`Error::Disconnected`] naming the smallest vertices of the
    /// first two components.
    pub fn require_connected(&self) -> Result<()> {
        if self.vertex_count == 0 {
            return Err(Error::EmptyGraph);
        }
        let components = self.components_with_mask(&vec![false; self.edge_count()]);
        if components.count == 1 {
            return Ok(());
        }
        let second = components
            .component_of
            .iter()
            .position(|&c| c == 1)
            .expect("component 1 exists");
        Err(Error::Disconnected { first: 0, second })
    }

    /// Parses the edge-list text format.
    ///
    /// ```text
    /// # optional comments
    /// vertices 3
    /// 0 1
    /// 1 2
    /// ```
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut vertex_count = None;
        let mut pairs = Vec::new();
        let mut seen = HashSet::new();
        for (number, raw) in text.lines().enumerate() {
            let line = number + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = trimmed.split_whitespace().collect();
            let Some(n) = vertex_count else {
                match tokens.as_slice() {
                    ["vertices", count] => {
                        vertex_count = Some(parse_index(count, line)?);
                        continue;
                    }
                    _ => return Err(parse_error(line, "expected header `vertices N`")),
                }
            };
            let [u, v] = tokens.as_slice() else {
                return Err(parse_error(line, "expected an edge `u v`"));
            };
            let (u, v) = (parse_index(u, line)?, parse_index(v, line)?);
            let err = if u >= n || v >= n {
                Some(Error::VertexOutOfRange { vertex: u.max(v), vertex_count: n })
            } else if u == v {
                Some(Error::SelfLoop { vertex: u })
            } else if !seen.insert((u.min(v), u.max(v))) {
                Some(Error::DuplicateEdge { u, v })
            } else {
                None
            };
            if let Some(err) = err {
                return Err(parse_error(line, &err.to_string()));
            }
            pairs.push((u, v));
        }
        let n = vertex_count.ok_or_else(|| parse_error(text.lines().count().max(1), "missing header `vertices N`"))?;
        Graph::from_edge_list(&pairs, n)
    }

    /// Renders the edge-list format. `vertex_comments[v]`, when given, is
    /// emitted as a `# ...` line after the header.
    pub fn to_edge_list(&self, vertex_comments: Option<&[String]>) -> String {
        let mut out = String::new();
        writeln!(out, "vertices {}", self.vertex_count).unwrap();
        if let Some(comments) = vertex_comments {
            for comment in comments {
                writeln!(out, "# {comment}").unwrap();
            }
        }
        for &(u, v) in &self.edges {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }
}

fn parse_error(line: usize, message: &str) -> Error {
    Error::Parse { line, message: message.to_string() }
}

fn parse_index(token: &str, line: usize) -> Result<usize> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_error(line, &format!("invalid token `{token}`")));
    }
    token
        .parse()
        .map_err(|_| parse_error(line, &format!("integer `{token}` out of range")))
}

fn bfs(g: &Graph, source: usize, removed: Option<&[bool]>) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.vertex_count];
    let mut queue = VecDeque::with_capacity(g.vertex_count);
    dist[source] = 0;
    queue.push_back(source);
    while let Some(x) = queue.pop_front() {
        let next = dist[x] + 1;
        for &(y, e) in &g.adjacency[x] {
            if removed.is_some_and(|mask| mask[e]) {
                continue;
            }
            if dist[y] == UNREACHABLE {
                dist[y] = next;
                queue.push_back(y);
            }
        }
    }
    dist
}

/// Distances from one source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: usize,
    /// Hop counts; [`UNREACHABLE`] marks vertices in other components.
    pub dist: Vec<u32>,
}

impl DistanceRow {
    pub fn get(&self, v: usize) -> Option<u32> {
        match self.dist[v] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }
}

/// Component labelling produced by [`Graph::connected_components`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub component_of: Vec<usize>,
    pub count: usize,
}

impl Components {
    /// Vertex sets of each component, each sorted ascending.
    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut members = vec![Vec::new(); self.count];
        for (v, &c) in self.component_of.iter().enumerate() {
            members[c].push(v);
        }
        members
    }
}

/// All-pairs hop distances, one BFS per source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    /// Runs a BFS from every vertex (in parallel). Unreachable pairs hold
    /// [`UNREACHABLE`].
    pub fn new(g: &Graph) -> DistanceMatrix {
        let n = g.vertex_count();
        let rows: Vec<Vec<u32>> = (0..n).into_par_iter().map(|s| bfs(g, s, None)).collect();
        DistanceMatrix { n, data: rows.concat() }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }
}
