//! Seeded instance generators.
//!
//! Every family is a pure function of its [`GenSpec`]: the same spec gives
//! the same instance, edge order and rotation included.

use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::{Color, ColorLists};
use crate::density::{mad, Rational};
use crate::embedding::{adjacency_rotation, trace_faces, Embedding};
use crate::error::{Error, Result};
use crate::graph::{named, Graph, VertexId};
use crate::io::Instance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Random graphs with Δ ≤ 4 and mad < 3.
    SparseMad3,
    /// Plane graphs of girth at least 7 grown from a cycle.
    PlanarGirth7,
    Cycle,
    Tree,
    /// C₅ with every vertex blown up into Δ/2 independent copies.
    C5Blowup,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::SparseMad3,
        Family::PlanarGirth7,
        Family::Cycle,
        Family::Tree,
        Family::C5Blowup,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::SparseMad3 => "sparse-mad3",
            Family::PlanarGirth7 => "planar-girth7",
            Family::Cycle => "cycle",
            Family::Tree => "tree",
            Family::C5Blowup => "c5-blowup",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| Error::Generator(format!("unknown family '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenSpec {
    pub family: Family,
    /// Vertex count; ignored by `C5Blowup`.
    pub n: usize,
    /// Degree bound; the blow-up's exact degree. Ignored by `Cycle`.
    pub delta: usize,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(family: Family, n: usize, delta: usize, seed: u64) -> Self {
        GenSpec {
            family,
            n,
            delta,
            seed,
        }
    }
}

fn reject(msg: impl Into<String>) -> Error {
    Error::Generator(msg.into())
}

pub fn generate(spec: &GenSpec) -> Result<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let (graph, embedding, planar, cap) = match spec.family {
        Family::Cycle => {
            if spec.n < 3 {
                return Err(reject(format!("a cycle needs 3 vertices, got {}", spec.n)));
            }
            let g = named::cycle(spec.n);
            let rot = (0..spec.n)
                .map(|i| vec![(i + spec.n - 1) % spec.n, (i + 1) % spec.n])
                .collect();
            (g.clone(), Some(trace_faces(&g, rot)?), true, None)
        }
        Family::Tree => {
            let g = tree(spec.n, spec.delta, &mut rng)?;
            let emb = trace_faces(&g, adjacency_rotation(&g))?;
            (g, Some(emb), true, None)
        }
        Family::C5Blowup => {
            if spec.delta < 2 || !spec.delta.is_multiple_of(2) {
                return Err(reject(format!("blow-up degree must be even and positive, got {}", spec.delta)));
            }
            (named::c5_blowup(spec.delta / 2), None, false, None)
        }
        Family::SparseMad3 => (sparse_mad3(spec.n, spec.delta, &mut rng)?, None, false, None),
        Family::PlanarGirth7 => {
            let emb = planar_girth7(spec.n, spec.delta, &mut rng)?;
            (emb.graph().clone(), Some(emb), true, Some(spec.delta))
        }
    };
    Ok(Instance {
        delta: Some(graph.max_degree()),
        graph,
        embedding,
        lists: None,
        planar,
        delta_cap: cap,
    })
}

/// Random recursive tree: each new vertex hangs off an earlier vertex that
/// still has room under `delta`.
fn tree(n: usize, delta: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    if n == 0 {
        return Err(reject("a tree needs at least one vertex"));
    }
    if n > 2 && delta < 2 {
        return Err(reject(format!("a tree on {n} vertices needs degree bound 2 or more")));
    }
    let mut deg = vec![0; n];
    let mut pairs = Vec::with_capacity(n - 1);
    for v in 1..n {
        let open: Vec<VertexId> = (0..v).filter(|&u| deg[u] < delta).collect();
        let &u = open.choose(rng).expect("a leaf always has room");
        deg[u] += 1;
        deg[v] += 1;
        pairs.push((u, v));
    }
    Graph::with_vertices(n, &pairs)
}

fn sparse_mad3(n: usize, delta: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    if n < 2 {
        return Err(reject("sparse graphs need at least 2 vertices"));
    }
    if !(1..=4).contains(&delta) {
        return Err(reject(format!("degree bound must be between 1 and 4, got {delta}")));
    }
    for _ in 0..1000 {
        let g = if rng.gen_bool(0.5) {
            random_sparse(n, delta, rng)
        } else {
            subdivided_core(n, delta, rng)
        };
        if g.edge_count() > 0 && mad(&g)?.density < Rational::from_integer(3) {
            return Ok(g);
        }
    }
    Err(reject(format!("no graph with mad < 3 found for n = {n}, delta = {delta}")))
}

/// Adds random edges under the degree bound until a random target size.
fn random_sparse(n: usize, delta: usize, rng: &mut ChaCha8Rng) -> Graph {
    let target = rng.gen_range(n / 2..=(3 * n / 2).saturating_sub(1).max(n / 2));
    let mut pairs = Vec::new();
    let mut deg = vec![0; n];
    for _ in 0..20 * target.max(1) {
        if pairs.len() >= target {
            break;
        }
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u == v || deg[u] >= delta || deg[v] >= delta || pairs.contains(&(u.min(v), u.max(v))) {
            continue;
        }
        deg[u] += 1;
        deg[v] += 1;
        pairs.push((u.min(v), u.max(v)));
    }
    Graph::with_vertices(n, &pairs).expect("pairs are simple by construction")
}

/// A random dense-ish core whose edges are then subdivided, with a few
/// pendant vertices mixed in, until there are `n` vertices.
fn subdivided_core(n: usize, delta: usize, rng: &mut ChaCha8Rng) -> Graph {
    let k = rng.gen_range(2..=(n / 2).max(2)).min(n);
    let mut deg = vec![0; k];
    let mut pairs: Vec<(VertexId, VertexId)> = Vec::new();
    for _ in 0..40 * k {
        let (u, v) = (rng.gen_range(0..k), rng.gen_range(0..k));
        if u == v || deg[u] >= delta || deg[v] >= delta || pairs.contains(&(u.min(v), u.max(v))) {
            continue;
        }
        deg[u] += 1;
        deg[v] += 1;
        pairs.push((u.min(v), u.max(v)));
    }
    while deg.len() < n {
        let w = deg.len();
        if !pairs.is_empty() && rng.gen_bool(0.8) {
            let i = rng.gen_range(0..pairs.len());
            let (a, b) = pairs.swap_remove(i);
            pairs.push((a, w));
            pairs.push((b, w));
            deg.push(2);
        } else {
            let open: Vec<VertexId> = (0..w).filter(|&u| deg[u] < delta).collect();
            deg.push(0);
            if let Some(&u) = open.choose(rng) {
                deg[u] += 1;
                deg[w] += 1;
                pairs.push((u, w));
            }
        }
    }
    Graph::with_vertices(n, &pairs).expect("pairs are simple by construction")
}

/// Grows a plane graph of girth at least 7 from a cycle by hanging pendant
/// vertices into corners and drawing ears of length 6 to 8 across faces.
fn planar_girth7(n: usize, cap: usize, rng: &mut ChaCha8Rng) -> Result<Embedding> {
    if n < 7 {
        return Err(reject(format!("girth 7 needs at least 7 vertices, got {n}")));
    }
    if cap < 3 {
        return Err(reject(format!("degree cap must be at least 3, got {cap}")));
    }
    let len = rng.gen_range(7..=n.min(12));
    let mut pairs: Vec<(VertexId, VertexId)> = (0..len).map(|i| (i, (i + 1) % len)).collect();
    let mut rot: Vec<Vec<VertexId>> = (0..len).map(|i| vec![(i + len - 1) % len, (i + 1) % len]).collect();
    let mut emb = trace_faces(&Graph::with_vertices(len, &pairs)?, rot.clone())?;

    while rot.len() < n {
        let room = n - rot.len();
        let deg = |v: VertexId, rot: &[Vec<VertexId>]| rot[v].len();
        let grown = room >= 5 && rng.gen_bool(0.35) && add_ear(&emb, &mut rot, &mut pairs, room, cap, rng);
        if !grown {
            let open: Vec<VertexId> = (0..rot.len()).filter(|&v| deg(v, &rot) < cap).collect();
            let top = open.iter().map(|&v| deg(v, &rot)).max().expect("leaves have room");
            let x = if rng.gen_bool(0.5) {
                **open.iter().filter(|&&v| deg(v, &rot) == top).collect::<Vec<_>>().choose(rng).unwrap()
            } else {
                *open.choose(rng).unwrap()
            };
            let y = rot.len();
            let at = rng.gen_range(0..=rot[x].len());
            rot[x].insert(at, y);
            rot.push(vec![x]);
            pairs.push((x, y));
        }
        let g = Graph::with_vertices(rot.len(), &pairs)?;
        emb = trace_faces(&g, rot.clone())
            .map_err(|e| Error::TheoremViolation(format!("generator broke planarity: {e}")))?;
    }
    Ok(emb)
}

/// Draws a path with 5 to 7 interior vertices inside one face between two
/// distinct corner vertices. Returns false when no face allows it.
fn add_ear(
    emb: &Embedding,
    rot: &mut Vec<Vec<VertexId>>,
    pairs: &mut Vec<(VertexId, VertexId)>,
    room: usize,
    cap: usize,
    rng: &mut ChaCha8Rng,
) -> bool {
    let faces = emb.faces();
    let f = &faces[rng.gen_range(0..faces.len())];
    // Corner i sits at the head of dart i, just after its tail in rotation.
    let corners: Vec<(VertexId, VertexId)> = f
        .darts
        .iter()
        .copied()
        .filter(|&(_, b)| rot[b].len() < cap)
        .collect();
    if corners.len() < 2 {
        return false;
    }
    let (a1, b1) = corners[rng.gen_range(0..corners.len())];
    let others: Vec<_> = corners.iter().filter(|&&(_, b)| b != b1).collect();
    let Some(&&(a2, b2)) = others.choose(rng) else {
        return false;
    };
    let inner = rng.gen_range(5..=7usize).min(room);
    let first = rot.len();
    let path: Vec<VertexId> = (first..first + inner).collect();
    for (i, &p) in path.iter().enumerate() {
        let prev = if i == 0 { b1 } else { p - 1 };
        let next = if i + 1 == inner { b2 } else { p + 1 };
        rot.push(vec![prev, next]);
        pairs.push((prev, p));
    }
    pairs.push((first + inner - 1, b2));
    for (hub, tail, new) in [(b1, a1, first), (b2, a2, first + inner - 1)] {
        let at = rot[hub].iter().position(|&x| x == tail).unwrap() + 1;
        rot[hub].insert(at, new);
    }
    true
}

/// Per-edge lists of `size` distinct colors drawn from `0..pool`.
pub fn random_lists(edges: usize, size: usize, pool: Color, seed: u64) -> Result<ColorLists> {
    if size > pool as usize {
        return Err(reject(format!("cannot draw {size} distinct colors from a pool of {pool}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(ColorLists::new(
        (0..edges)
            .map(|_| {
                sample(&mut rng, pool as usize, size)
                    .into_iter()
                    .map(|c| c as Color)
                    .collect()
            })
            .collect(),
    ))
}
