//! The distance-two relation between edges.
//!
//! Two distinct edges `uv` and `f` are in conflict when `f` has an endpoint
//! in `N(u) ∪ N(v)`. Since `v ∈ N(u)` and `u ∈ N(v)`, every edge sharing an
//! endpoint with `uv` is a conflict too. A strong edge coloring is exactly a
//! proper vertex coloring of the conflict graph.

use std::collections::BTreeSet;

use crate::coloring::{Color, PartialColoring};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

/// Edges within distance two of `e`, sorted by id.
pub fn edges_within_distance_two(g: &Graph, e: EdgeId) -> Result<Vec<EdgeId>> {
    if !g.has_edge_id(e) {
        return Err(Error::UnknownEdge(e));
    }
    Ok(conflicts_of(g, e))
}

pub(crate) fn conflicts_of(g: &Graph, e: EdgeId) -> Vec<EdgeId> {
    let (u, v) = g.endpoints(e);
    let mut out: Vec<EdgeId> = g
        .neighbors(u)
        .iter()
        .chain(g.neighbors(v))
        .flat_map(|&x| g.incident(x).iter().copied())
        .filter(|&f| f != e)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Precomputed conflict sets for every edge of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConflictIndex {
    sets: Vec<Vec<EdgeId>>,
}

impl ConflictIndex {
    pub fn build(g: &Graph) -> Self {
        ConflictIndex {
            sets: (0..g.edge_count()).map(|e| conflicts_of(g, e)).collect(),
        }
    }

    pub fn conflicts(&self, e: EdgeId) -> &[EdgeId] {
        &self.sets[e]
    }

    pub fn conflict_degree(&self, e: EdgeId) -> usize {
        self.sets[e].len()
    }

    pub fn edge_count(&self) -> usize {
        self.sets.len()
    }

    pub fn max_conflict_degree(&self) -> usize {
        self.sets.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn are_in_conflict(&self, e: EdgeId, f: EdgeId) -> bool {
        self.sets[e].binary_search(&f).is_ok()
    }
}

/// The conflict graph: one vertex per edge of `g`, adjacent when the edges
/// are within distance two. Vertex `i` of the result is edge `i` of `g`.
pub fn conflict_graph(g: &Graph) -> Graph {
    let idx = ConflictIndex::build(g);
    let mut pairs = Vec::new();
    for e in 0..g.edge_count() {
        for &f in idx.conflicts(e) {
            if e < f {
                pairs.push((e, f));
            }
        }
    }
    Graph::with_vertices(g.edge_count(), &pairs).expect("conflict graph is simple")
}

/// Number of colored edges in conflict with `e`, and their distinct colors.
pub fn colored_conflicts(
    idx: &ConflictIndex,
    e: EdgeId,
    partial: &PartialColoring,
) -> (usize, BTreeSet<Color>) {
    let mut count = 0;
    let mut colors = BTreeSet::new();
    for &f in idx.conflicts(e) {
        if let Some(c) = partial.get(f) {
            count += 1;
            colors.insert(c);
        }
    }
    (count, colors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn e(g: &Graph, u: usize, v: usize) -> EdgeId {
        g.edge_between(u, v).unwrap()
    }

    #[test]
    fn path_p4_first_edge() {
        let g = path(4);
        let got = edges_within_distance_two(&g, e(&g, 0, 1)).unwrap();
        assert_eq!(got, vec![e(&g, 1, 2), e(&g, 2, 3)]);
    }

    #[test]
    fn path_p5_excludes_far_edge() {
        let g = path(5);
        let got = edges_within_distance_two(&g, e(&g, 0, 1)).unwrap();
        assert_eq!(got, vec![e(&g, 1, 2), e(&g, 2, 3)]);
    }

    #[test]
    fn c5_every_pair_conflicts() {
        let g = cycle(5);
        for x in 0..5 {
            assert_eq!(edges_within_distance_two(&g, x).unwrap().len(), 4);
        }
        let cg = conflict_graph(&g);
        assert_eq!(cg.edge_count(), 10);
    }

    #[test]
    fn unknown_edge_rejected() {
        assert_eq!(
            edges_within_distance_two(&path(3), 5),
            Err(Error::UnknownEdge(5))
        );
    }

    #[test]
    fn single_edge_conflict_graph_is_k1() {
        let cg = conflict_graph(&path(2));
        assert_eq!((cg.vertex_count(), cg.edge_count()), (1, 0));
    }

    #[test]
    fn blowup_conflict_graph_is_k20() {
        let g = c5_blowup(2);
        let cg = conflict_graph(&g);
        assert_eq!(cg.vertex_count(), 20);
        assert_eq!(cg.edge_count(), 20 * 19 / 2);
    }

    #[test]
    fn colored_conflict_counts() {
        let g = path(4);
        let idx = ConflictIndex::build(&g);
        let mut c = PartialColoring::new(g.edge_count());
        assert_eq!(colored_conflicts(&idx, 0, &c), (0, BTreeSet::new()));
        c.set(e(&g, 1, 2), 1);
        c.set(e(&g, 2, 3), 1);
        assert_eq!(
            colored_conflicts(&idx, e(&g, 0, 1), &c),
            (2, BTreeSet::from([1]))
        );

        let g = cycle(5);
        let idx = ConflictIndex::build(&g);
        let mut c = PartialColoring::new(5);
        for (i, f) in (1..5).enumerate() {
            c.set(f, i as Color + 1);
        }
        assert_eq!(
            colored_conflicts(&idx, 0, &c),
            (4, BTreeSet::from([1, 2, 3, 4]))
        );
    }
}
