//! Test fixtures and brute-force oracles shared by the integration tests.
//! Nothing here calls into the BFS, Θ or backtracking code under test.

#![allow(dead_code)]

use gpindex_core::{EdgePartition, Graph};
use rand::seq::SliceRandom;
use rand::Rng;

/// The ten-vertex tree: v1 joined to v2, v3, v4, each of which carries two
/// leaves. Edge order e1..e9 = v1v2, v1v3, v1v4, v2v5, v2v6, v3v7, v3v8,
/// v4v9, v4v10 (vertex `vK` has index K-1).
pub fn tree_t() -> Graph {
    let pairs = [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9)];
    Graph::from_edge_list(&pairs, 10).unwrap()
}

pub fn cycle(k: usize) -> Graph {
    let pairs: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    Graph::from_edge_list(&pairs, k).unwrap()
}

pub fn complete(k: usize) -> Graph {
    let pairs: Vec<_> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    Graph::from_edge_list(&pairs, k).unwrap()
}

pub fn path(k: usize) -> Graph {
    let pairs: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(&pairs, k).unwrap()
}

pub fn hypercube(d: usize) -> Graph {
    let n = 1 << d;
    let pairs: Vec<_> = (0..n)
        .flat_map(|x| (0..d).map(move |b| (x, x ^ (1 << b))).filter(|&(x, y)| x < y))
        .collect();
    Graph::from_edge_list(&pairs, n).unwrap()
}

/// Floyd-Warshall distances; `u32::MAX` for unreachable pairs.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    let inf = u32::MAX / 2;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    for row in &mut d {
        for x in row.iter_mut() {
            if *x == inf {
                *x = u32::MAX;
            }
        }
    }
    d
}

/// Every permutation of `0..n` that maps edges to edges (Heap's algorithm).
pub fn brute_force_automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let is_aut = |p: &[usize]| g.edges().iter().all(|&(u, v)| adj[p[u]][p[v]]);
    let mut p: Vec<usize> = (0..n).collect();
    let mut found = Vec::new();
    if is_aut(&p) {
        found.push(p.clone());
    }
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            if is_aut(&p) {
                found.push(p.clone());
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    found.sort();
    found
}

/// Orbits from a list of permutations by repeated merging, ordered by
/// smallest member.
pub fn orbits_from(perms: &[Vec<usize>], n: usize) -> Vec<Vec<usize>> {
    let mut label: Vec<usize> = (0..n).collect();
    loop {
        let mut changed = false;
        for p in perms {
            for v in 0..n {
                let (a, b) = (label[v], label[p[v]]);
                if a != b {
                    let (lo, hi) = (a.min(b), a.max(b));
                    for l in label.iter_mut() {
                        if *l == hi {
                            *l = lo;
                        }
                    }
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for v in 0..n {
        if slot[label[v]] == usize::MAX {
            slot[label[v]] = orbits.len();
            orbits.push(Vec::new());
        }
        orbits[slot[label[v]]].push(v);
    }
    orbits
}

fn random_connected_pairs<R: Rng>(rng: &mut R, n: usize, extra: f64) -> Vec<(usize, usize)> {
    let mut pairs: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(extra) && !pairs.contains(&(u, v)) {
                pairs.push((u, v));
            }
        }
    }
    pairs
}

/// A random connected graph on at most `max_vertices` vertices, drawn from a
/// mix of families so that many samples have nontrivial symmetry.
pub fn random_connected_graph<R: Rng>(rng: &mut R, max_vertices: usize) -> Graph {
    assert!(max_vertices >= 4);
    let mut pairs = match rng.gen_range(0..4) {
        // sparse random graph
        0 => {
            let n = rng.gen_range(2..=max_vertices);
            let extra = rng.gen_range(0.0..0.25);
            (n, random_connected_pairs(rng, n, extra))
        }
        // two mirrored copies joined along a vertex subset
        1 => {
            let m = rng.gen_range(2..=max_vertices / 2);
            let extra = rng.gen_range(0.0..0.3);
            let half = random_connected_pairs(rng, m, extra);
            let mut pairs = half.clone();
            pairs.extend(half.iter().map(|&(u, v)| (u + m, v + m)));
            let bridges: Vec<usize> = (0..m).filter(|_| rng.gen_bool(0.3)).collect();
            let bridges = if bridges.is_empty() { vec![rng.gen_range(0..m)] } else { bridges };
            pairs.extend(bridges.into_iter().map(|x| (x, x + m)));
            (2 * m, pairs)
        }
        // copies of a random rooted tree hung from a centre
        2 => {
            let copies = rng.gen_range(2..=4);
            let size = rng.gen_range(1..=((max_vertices - 1) / copies).max(1));
            let branch = random_connected_pairs(rng, size, 0.0);
            let mut pairs = Vec::new();
            for c in 0..copies {
                let offset = 1 + c * size;
                pairs.push((0, offset));
                pairs.extend(branch.iter().map(|&(u, v)| (u + offset, v + offset)));
            }
            (1 + copies * size, pairs)
        }
        // circulant C_n(1, s, ...)
        _ => {
            let n = rng.gen_range(4..=max_vertices);
            let mut jumps = vec![1];
            for s in 2..=n / 2 {
                if rng.gen_bool(0.2) {
                    jumps.push(s);
                }
            }
            let mut pairs = Vec::new();
            for v in 0..n {
                for &s in &jumps {
                    let w = (v + s) % n;
                    let e = (v.min(w), v.max(w));
                    if !pairs.contains(&e) {
                        pairs.push(e);
                    }
                }
            }
            (n, pairs)
        }
    };
    pairs.1.shuffle(rng);
    Graph::from_edge_list(&pairs.1, pairs.0).unwrap()
}

/// Random groupings of the blocks of `base`: the identity grouping, a
/// two-group merge (when there are at least two blocks), and one random
/// grouping.
pub fn random_groupings<R: Rng>(rng: &mut R, base: &EdgePartition) -> Vec<Vec<Vec<usize>>> {
    let k = base.len();
    let mut out = vec![(0..k).map(|b| vec![b]).collect::<Vec<_>>()];
    if k >= 2 {
        let mut order: Vec<usize> = (0..k).collect();
        order.shuffle(rng);
        let cut = rng.gen_range(1..k);
        out.push(vec![order[..cut].to_vec(), order[cut..].to_vec()]);
    }
    let groups = rng.gen_range(1..=k);
    let mut grouping = vec![Vec::new(); groups];
    for b in 0..k {
        grouping[rng.gen_range(0..groups)].push(b);
    }
    grouping.retain(|g| !g.is_empty());
    out.push(grouping);
    out
}
