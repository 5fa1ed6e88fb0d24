//! Exact maximum average degree.
//!
//! `density_exceeds` decides `mad(G) > τ` with one maximum-flow computation
//! on the standard densest-subgraph network, scaled to integer capacities.
//! `mad` binary-searches the finite set of values `2a/b` (with `b ≤ |V|`)
//! that a subgraph density can take. Everything is exact rational
//! arithmetic; no floating point is involved.

use std::collections::BTreeSet;

use num_rational::Rational64;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::flow::{FlowNetwork, INF};
use crate::graph::{Graph, VertexId};

pub type Rational = Rational64;

/// A vertex set `H` together with its average degree `2|E(H)|/|H|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityWitness {
    pub vertices: Vec<VertexId>,
    pub density: Rational,
}

impl DensityWitness {
    pub fn of(g: &Graph, vertices: Vec<VertexId>) -> Self {
        let e = g.induced_edge_count(&vertices) as i64;
        let density = Rational::new(2 * e, vertices.len() as i64);
        DensityWitness { vertices, density }
    }
}

/// Some `H` with `2|E(H)|/|H| > threshold`, or `None` when `mad(g) ≤ threshold`.
pub fn density_exceeds(g: &Graph, threshold: Rational) -> Option<DensityWitness> {
    let n = g.vertex_count();
    if n == 0 {
        return None;
    }
    if threshold.is_negative() {
        return Some(DensityWitness::of(g, g.vertices().collect()));
    }
    // 2|E(H)|/|H| > p/q  <=>  2q|E(H)| - p|H| > 0. Maximize the left side
    // over closed sets of the bipartite edge/vertex network.
    let p = *threshold.numer();
    let q = *threshold.denom();
    let m = g.edge_count();
    let source = m + n;
    let sink = source + 1;
    let mut net = FlowNetwork::new(n + m + 2);
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        net.add_arc(source, e, 2 * q);
        net.add_arc(e, m + a, INF);
        net.add_arc(e, m + b, INF);
    }
    for v in 0..n {
        net.add_arc(m + v, sink, p);
    }
    let cut = net.max_flow(source, sink);
    let best = 2 * q * m as i64 - cut;
    if best <= 0 {
        return None;
    }
    let side = net.source_side(source);
    let h: Vec<VertexId> = (0..n).filter(|&v| side[m + v]).collect();
    let w = DensityWitness::of(g, h);
    debug_assert!(w.density > threshold);
    Some(w)
}

/// Every value a subgraph density of `g` can take, sorted.
fn candidate_densities(g: &Graph) -> Vec<Rational> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let delta = g.max_degree();
    let mut out = BTreeSet::new();
    for b in 1..=n {
        let most = m.min(b * (b - 1) / 2).min(b * delta / 2);
        for a in 0..=most {
            out.insert(Rational::new(2 * a as i64, b as i64));
        }
    }
    out.into_iter().collect()
}

/// Maximum average degree with a maximizing vertex set.
pub fn mad(g: &Graph) -> Result<DensityWitness> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let cands = candidate_densities(g);
    // exceeds(c) holds exactly for the candidates below mad(g), and mad(g)
    // is itself a candidate. Find the first candidate that is not exceeded.
    let (mut lo, mut hi) = (0usize, cands.len() - 1);
    let mut witness = None;
    while lo < hi {
        let mid = (lo + hi) / 2;
        match density_exceeds(g, cands[mid]) {
            Some(w) => {
                lo = mid + 1;
                witness = Some(w);
            }
            None => hi = mid,
        }
    }
    let value = cands[lo];
    let witness = match witness {
        Some(w) if w.density == value => w,
        _ if value.is_zero() => DensityWitness::of(g, vec![0]),
        _ => density_exceeds(g, cands[lo - 1]).expect("candidate below the maximum is exceeded"),
    };
    debug_assert_eq!(witness.density, value);
    Ok(witness)
}

/// `Σ_v (deg(v) - 3) = 2|E| - 3|V|`; negative whenever `mad(g) < 3`.
pub fn mad_deficit_sum(g: &Graph) -> Rational {
    Rational::from_integer(2 * g.edge_count() as i64 - 3 * g.vertex_count() as i64)
}
