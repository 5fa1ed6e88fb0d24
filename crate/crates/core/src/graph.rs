//! Simple undirected graphs with dense vertex ids and stable edge ids.
//!
//! A [`Graph`] is immutable once built. Reductions never mutate a graph in
//! place; they build a smaller graph with [`Graph::without_vertex`] and keep
//! the map from the new edge ids back to the old ones.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    inc: Vec<Vec<EdgeId>>,
    edges: Vec<(VertexId, VertexId)>,
    labels: Vec<usize>,
}

impl Graph {
    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            inc: vec![Vec::new(); n],
            edges: Vec::new(),
            labels: (0..n).collect(),
        }
    }

    /// Builds a graph from vertex pairs. The vertex set is the union of the
    /// endpoints; duplicate pairs are accepted once and self-loops rejected.
    pub fn from_edges(pairs: &[(VertexId, VertexId)]) -> Result<Self> {
        let n = pairs.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        Self::with_vertices(n, pairs)
    }

    /// Like [`Graph::from_edges`] but with an explicit vertex count, so that
    /// isolated vertices can be declared.
    pub fn with_vertices(n: usize, pairs: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in pairs {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if u >= n {
                return Err(Error::UnknownVertex(u));
            }
            if v >= n {
                return Err(Error::UnknownVertex(v));
            }
            if g.edge_between(u, v).is_none() {
                g.push_edge(u, v);
            }
        }
        Ok(g)
    }

    fn push_edge(&mut self, u: VertexId, v: VertexId) -> EdgeId {
        let id = self.edges.len();
        self.edges.push((u.min(v), u.max(v)));
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.inc[u].push(id);
        self.inc[v].push(id);
        id
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.adj.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    /// Endpoints of `e`, smaller id first.
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn has_edge_id(&self, e: EdgeId) -> bool {
        e < self.edges.len()
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        v < self.adj.len()
    }

    /// Neighbors of `v` in insertion order.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    /// Edge ids incident to `v`, parallel to [`Graph::neighbors`].
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.inc[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        if u >= self.adj.len() || v >= self.adj.len() {
            return None;
        }
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a]
            .iter()
            .position(|&w| w == b)
            .map(|i| self.inc[a][i])
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Label of `v` in the graph this one was derived from (identity for
    /// graphs built from edge lists).
    pub fn label(&self, v: VertexId) -> usize {
        self.labels[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Number of neighbors of `v` with degree 2.
    pub fn weak_neighbors(&self, v: VertexId) -> usize {
        self.adj[v].iter().filter(|&&u| self.degree(u) == 2).count()
    }

    /// True if `v` is a k_t-vertex: degree `k` with exactly `t` neighbors of
    /// degree two.
    pub fn is_kt(&self, v: VertexId, k: usize, t: usize) -> bool {
        self.degree(v) == k && self.weak_neighbors(v) == t
    }

    pub fn degree_class(&self, v: VertexId) -> Result<DegreeClass> {
        if v >= self.adj.len() {
            return Err(Error::UnknownVertex(v));
        }
        let delta = self.max_degree();
        let mut class = DegreeClass {
            k: self.degree(v),
            ..DegreeClass::default()
        };
        for &u in &self.adj[v] {
            match self.degree(u) {
                1 => class.ones += 1,
                2 => class.t += 1,
                3 => class.threes += 1,
                4 => class.fours += 1,
                _ => class.fives_plus += 1,
            }
            if self.degree(u) == delta {
                class.max_degree_neighbors += 1;
            }
        }
        Ok(class)
    }

    /// Length of a shortest cycle, by breadth-first search from every vertex.
    pub fn girth(&self) -> Girth {
        let n = self.adj.len();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent_edge = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            queue.clear();
            queue.push_back(root);
            while let Some(x) = queue.pop_front() {
                // Any cycle found from here on is at least 2 * dist[x] + 1.
                if 2 * dist[x] + 1 >= best {
                    break;
                }
                for (&y, &e) in self.adj[x].iter().zip(&self.inc[x]) {
                    if e == parent_edge[x] {
                        continue;
                    }
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent_edge[y] = e;
                        queue.push_back(y);
                    } else {
                        best = best.min(dist[x] + dist[y] + 1);
                    }
                }
            }
            parent_edge.iter_mut().for_each(|p| *p = usize::MAX);
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.adj.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced by `keep` (any order, no duplicates). Vertices are
    /// renumbered by increasing old id. Returns the subgraph, the old id of
    /// each new vertex, and the old id of each new edge.
    pub fn induced(&self, keep: &[VertexId]) -> (Graph, Vec<VertexId>, Vec<EdgeId>) {
        let mut old_of: Vec<VertexId> = keep.to_vec();
        old_of.sort_unstable();
        old_of.dedup();
        let mut new_of = vec![usize::MAX; self.adj.len()];
        for (i, &v) in old_of.iter().enumerate() {
            new_of[v] = i;
        }
        let mut sub = Graph::empty(old_of.len());
        sub.labels = old_of.iter().map(|&v| self.labels[v]).collect();
        let mut edge_map = Vec::new();
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            if new_of[a] != usize::MAX && new_of[b] != usize::MAX {
                sub.push_edge(new_of[a], new_of[b]);
                edge_map.push(e);
            }
        }
        (sub, old_of, edge_map)
    }

    /// `G - v`. Vertex ids above `v` shift down by one; edge order is kept.
    pub fn without_vertex(&self, v: VertexId) -> (Graph, Vec<EdgeId>) {
        let keep: Vec<VertexId> = self.vertices().filter(|&x| x != v).collect();
        let (sub, _, edge_map) = self.induced(&keep);
        (sub, edge_map)
    }

    /// Number of edges with both endpoints in `set`.
    pub fn induced_edge_count(&self, set: &[VertexId]) -> usize {
        let mut member = vec![false; self.adj.len()];
        for &v in set {
            member[v] = true;
        }
        self.edges
            .iter()
            .filter(|&&(a, b)| member[a] && member[b])
            .count()
    }
}

/// Degree profile of a vertex: its degree `k`, the number `t` of degree-2
/// neighbors, and counts of the other neighbor classes.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DegreeClass {
    pub k: usize,
    pub t: usize,
    pub ones: usize,
    pub threes: usize,
    pub fours: usize,
    pub fives_plus: usize,
    /// Neighbors whose degree equals the maximum degree of the graph.
    pub max_degree_neighbors: usize,
}

impl DegreeClass {
    pub fn three_plus(&self) -> usize {
        self.threes + self.fours + self.fives_plus
    }

    pub fn four_plus(&self) -> usize {
        self.fours + self.fives_plus
    }
}

impl fmt::Display for DegreeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.k, self.t)
    }
}

/// Length of a shortest cycle; `Infinite` for forests. Orders as expected,
/// with `Infinite` above every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= k,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

/// Standard small graphs used by tests, examples and the generator.
pub mod named {
    use super::{Graph, VertexId};

    pub fn path(n: usize) -> Graph {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::with_vertices(n, &pairs).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least three vertices");
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::with_vertices(n, &pairs).expect("cycle is simple")
    }

    pub fn complete(n: usize) -> Graph {
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                pairs.push((u, v));
            }
        }
        Graph::with_vertices(n, &pairs).expect("complete graph is simple")
    }

    /// K_{1,n} with center 0.
    pub fn star(n: usize) -> Graph {
        let pairs: Vec<_> = (1..=n).map(|i| (0, i)).collect();
        Graph::with_vertices(n + 1, &pairs).expect("star is simple")
    }

    /// Every edge of `g` replaced by a path of length two. New vertices are
    /// numbered after the old ones, in edge order.
    pub fn subdivide(g: &Graph) -> Graph {
        let n = g.vertex_count();
        let mut pairs = Vec::new();
        for (i, &(a, b)) in g.edges().iter().enumerate() {
            pairs.push((a, n + i));
            pairs.push((n + i, b));
        }
        Graph::with_vertices(n + g.edge_count(), &pairs).expect("subdivision is simple")
    }

    pub fn petersen() -> Graph {
        let mut pairs: Vec<(VertexId, VertexId)> = Vec::new();
        for i in 0..5 {
            pairs.push((i, (i + 1) % 5));
            pairs.push((i, i + 5));
            pairs.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::with_vertices(10, &pairs).expect("petersen is simple")
    }

    /// The 3-dimensional cube; vertex ids are 3-bit words.
    pub fn cube() -> Graph {
        let mut pairs = Vec::new();
        for v in 0..8usize {
            for bit in 0..3 {
                let u = v ^ (1 << bit);
                if v < u {
                    pairs.push((v, u));
                }
            }
        }
        Graph::with_vertices(8, &pairs).expect("cube is simple")
    }

    /// Graph from LCF notation on `n` vertices (Hamiltonian cycle plus chords).
    pub fn lcf(n: usize, jumps: &[i64], repeats: usize) -> Graph {
        let mut pairs = Vec::new();
        for i in 0..n {
            pairs.push((i, (i + 1) % n));
        }
        let seq: Vec<i64> = jumps.iter().copied().cycle().take(jumps.len() * repeats).collect();
        for (i, &j) in seq.iter().enumerate() {
            let t = (i as i64 + j).rem_euclid(n as i64) as usize;
            pairs.push((i, t));
        }
        Graph::with_vertices(n, &pairs).expect("lcf graph is simple")
    }

    /// The McGee graph: cubic, girth 7, 24 vertices. Not planar.
    pub fn mcgee() -> Graph {
        lcf(24, &[12, 7, -7], 8)
    }

    /// Each vertex of C5 blown up into an independent set of size `half`,
    /// consecutive sets joined completely. Maximum degree `2 * half`.
    pub fn c5_blowup(half: usize) -> Graph {
        let mut pairs = Vec::new();
        for i in 0..5 {
            let j = (i + 1) % 5;
            for a in 0..half {
                for b in 0..half {
                    pairs.push((i * half + a, j * half + b));
                }
            }
        }
        Graph::with_vertices(5 * half, &pairs).expect("blowup is simple")
    }
}
