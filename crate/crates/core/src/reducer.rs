//! Reducible configurations and the delete / erase / extend recipes that
//! come with them.
//!
//! Each configuration is matched around an anchor vertex. A match yields a
//! [`ReductionPlan`]: delete one vertex, color the rest recursively, erase
//! the colors of a few edges, then color the plan's extension edges in
//! order. Every extension step carries an upper bound on the number of
//! colored edges within distance two of it at that moment; the bound is
//! always below the list size the solver requires, so a free color exists.
//!
//! Bounds are stated in terms of `Δ`: the maximum degree of the current
//! graph on the sparse path, the degree cap on the girth-7 path. They only
//! hold when no configuration of higher priority is present, which is why
//! [`find_reducible_mad`] and [`find_reducible_girth7`] try configurations
//! in a fixed order.

use std::fmt;

use crate::conflict::conflicts_of;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClaimTag {
    /// A 1-vertex.
    M1Pendant,
    /// A 2-vertex whose neighbors are both 3⁻-vertices.
    M2TwoWeakNeighbors,
    /// A 2-vertex `v1 ~ {v, w1}` where `v` has at least two 2-neighbors and
    /// `w1` is a 3⁻-vertex.
    M3TwoFour,
    /// A 4₄-vertex.
    M4NoFourFour,
    /// A 4₃-vertex with a 2-neighbor whose other neighbor is not a 4₁-vertex.
    M5FourThree,
    /// A 1-vertex whose edge has fewer than `3Δ` edges within distance two.
    G1Pendant,
    /// A 2-vertex whose neighbors are both 3⁻-vertices.
    G2TwoWeak,
    /// A vertex with no 3⁺-neighbor.
    G3AllTwoNeighbors,
    /// A 2-vertex adjacent to a 2-vertex and to a 4-vertex that is not 4₁.
    G4FourTwelve,
    /// A 2-vertex adjacent to a 4₃-vertex and a 3-vertex.
    G5NoFourThreeThree,
    /// A 2-vertex `v1 ~ {v, w1}` with `v` a 3₂-vertex and `w1` neither a
    /// 5⁺-vertex nor a 4₁-vertex.
    G6NotTwoFourTwo,
    /// A 5⁺-vertex with exactly one 3⁺-neighbor that has a 1-neighbor, or a
    /// 2-neighbor whose other neighbor is a 3⁻-vertex.
    G7BigOneThreePlus,
    /// A k-vertex (k ≥ 5) with exactly two 3⁺-neighbors and `ℓ` 1-neighbors,
    /// where `ℓ ∈ {k-2, k-3, k-4}`, or `ℓ = k-5` and the three 2-neighbors
    /// lead to 2- or 3₂-vertices.
    G8BigTwoThreePlus,
}

impl ClaimTag {
    pub const MAD: [ClaimTag; 5] = [
        ClaimTag::M1Pendant,
        ClaimTag::M2TwoWeakNeighbors,
        ClaimTag::M3TwoFour,
        ClaimTag::M4NoFourFour,
        ClaimTag::M5FourThree,
    ];

    pub const GIRTH7: [ClaimTag; 8] = [
        ClaimTag::G1Pendant,
        ClaimTag::G2TwoWeak,
        ClaimTag::G3AllTwoNeighbors,
        ClaimTag::G4FourTwelve,
        ClaimTag::G5NoFourThreeThree,
        ClaimTag::G6NotTwoFourTwo,
        ClaimTag::G7BigOneThreePlus,
        ClaimTag::G8BigTwoThreePlus,
    ];

    pub fn code(self) -> &'static str {
        match self {
            ClaimTag::M1Pendant => "M1",
            ClaimTag::M2TwoWeakNeighbors => "M2",
            ClaimTag::M3TwoFour => "M3",
            ClaimTag::M4NoFourFour => "M4",
            ClaimTag::M5FourThree => "M5",
            ClaimTag::G1Pendant => "G1",
            ClaimTag::G2TwoWeak => "G2",
            ClaimTag::G3AllTwoNeighbors => "G3",
            ClaimTag::G4FourTwelve => "G4",
            ClaimTag::G5NoFourThreeThree => "G5",
            ClaimTag::G6NotTwoFourTwo => "G6",
            ClaimTag::G7BigOneThreePlus => "G7",
            ClaimTag::G8BigTwoThreePlus => "G8",
        }
    }

    pub fn from_code(code: &str) -> Option<ClaimTag> {
        ClaimTag::MAD
            .iter()
            .chain(&ClaimTag::GIRTH7)
            .copied()
            .find(|t| t.code() == code)
    }
}

impl fmt::Display for ClaimTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// One edge to color during extension, with the most colored conflicts it
/// can see at that point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtensionStep {
    pub edge: EdgeId,
    pub bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionPlan {
    pub claim: ClaimTag,
    /// Vertices of the configuration, anchor first.
    pub involved: Vec<VertexId>,
    pub delete_vertex: VertexId,
    /// Edges of the current graph whose colors are discarded after the
    /// recursive call.
    pub erase_edges: Vec<EdgeId>,
    pub extension: Vec<ExtensionStep>,
}

impl ReductionPlan {
    pub fn anchor(&self) -> VertexId {
        self.involved[0]
    }

    pub fn max_bound(&self) -> usize {
        self.extension.iter().map(|s| s.bound).max().unwrap_or(0)
    }

    /// Structural consistency against the graph the plan was made for.
    pub fn check(&self, g: &Graph) -> std::result::Result<(), String> {
        if !g.has_vertex(self.delete_vertex) {
            return Err(format!("delete vertex {} not in graph", self.delete_vertex));
        }
        for s in &self.extension {
            if !g.has_edge_id(s.edge) {
                return Err(format!("extension edge {} not in graph", s.edge));
            }
        }
        let in_ext = |e: EdgeId| self.extension.iter().any(|s| s.edge == e);
        if let Some(&e) = self.erase_edges.iter().find(|&&e| !in_ext(e)) {
            return Err(format!("erased edge {e} is never re-colored"));
        }
        if let Some(&e) = g.incident(self.delete_vertex).iter().find(|&&e| !in_ext(e)) {
            return Err(format!("edge {e} of the deleted vertex is never colored"));
        }
        let mut seen: Vec<EdgeId> = self.extension.iter().map(|s| s.edge).collect();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != self.extension.len() {
            return Err("extension colors an edge twice".into());
        }
        Ok(())
    }
}

fn edge(g: &Graph, u: VertexId, v: VertexId) -> EdgeId {
    g.edge_between(u, v).expect("adjacent vertices share an edge")
}

fn step(g: &Graph, u: VertexId, v: VertexId, bound: usize) -> ExtensionStep {
    ExtensionStep {
        edge: edge(g, u, v),
        bound,
    }
}

/// Neighbors of `v` sorted by id.
fn sorted_neighbors(g: &Graph, v: VertexId) -> Vec<VertexId> {
    let mut n = g.neighbors(v).to_vec();
    n.sort_unstable();
    n
}

/// The two neighbors of a 2-vertex, smaller id first.
fn pair(g: &Graph, v: VertexId) -> (VertexId, VertexId) {
    let n = g.neighbors(v);
    (n[0].min(n[1]), n[0].max(n[1]))
}

/// The neighbor of 2-vertex `x` other than `v`.
fn across(g: &Graph, x: VertexId, v: VertexId) -> VertexId {
    let n = g.neighbors(x);
    if n[0] == v {
        n[1]
    } else {
        n[0]
    }
}

fn weak(g: &Graph, v: VertexId) -> Vec<VertexId> {
    sorted_neighbors(g, v)
        .into_iter()
        .filter(|&u| g.degree(u) == 2)
        .collect()
}

fn three_plus(g: &Graph, v: VertexId) -> usize {
    g.neighbors(v).iter().filter(|&&u| g.degree(u) >= 3).count()
}

fn plan(
    claim: ClaimTag,
    involved: Vec<VertexId>,
    delete_vertex: VertexId,
    erase_edges: Vec<EdgeId>,
    extension: Vec<ExtensionStep>,
) -> ReductionPlan {
    ReductionPlan {
        claim,
        involved,
        delete_vertex,
        erase_edges,
        extension,
    }
}

/// Tries `claim` with anchor `v`. `delta` is the bound parameter.
fn match_at(g: &Graph, claim: ClaimTag, delta: usize, v: VertexId) -> Option<ReductionPlan> {
    use ClaimTag::*;
    let d = delta;
    let deg = |x: VertexId| g.degree(x);
    match claim {
        M1Pendant => {
            if deg(v) != 1 {
                return None;
            }
            let u = g.neighbors(v)[0];
            Some(plan(claim, vec![v, u], v, vec![], vec![step(g, u, v, 3 * d)]))
        }
        M2TwoWeakNeighbors | G2TwoWeak => {
            if deg(v) != 2 {
                return None;
            }
            let (a, b) = pair(g, v);
            if deg(a) > 3 || deg(b) > 3 {
                return None;
            }
            // A 3⁻-neighbor has at most s - 1 other edges, each leading to a
            // vertex with at most Δ - 1 further edges.
            let s = 3.min(d);
            let base = (s - 1) * (d + 1);
            Some(plan(
                claim,
                vec![v, a, b],
                v,
                vec![],
                vec![step(g, a, v, base), step(g, b, v, base + 1)],
            ))
        }
        M3TwoFour => {
            if deg(v) != 2 {
                return None;
            }
            let (a, b) = pair(g, v);
            [(a, b), (b, a)]
                .into_iter()
                .find(|&(hub, w)| g.weak_neighbors(hub) >= 2 && deg(w) <= 3)
                .map(|(hub, w)| {
                    plan(
                        claim,
                        vec![v, hub, w],
                        v,
                        vec![],
                        vec![step(g, hub, v, 2 * d + 4), step(g, v, w, 2 * d + 4)],
                    )
                })
        }
        M4NoFourFour => {
            if !g.is_kt(v, 4, 4) {
                return None;
            }
            let nbrs = sorted_neighbors(g, v);
            let ext = nbrs
                .iter()
                .enumerate()
                .map(|(i, &x)| step(g, v, x, d + 3 + i))
                .collect();
            let mut involved = vec![v];
            involved.extend(nbrs);
            Some(plan(claim, involved, v, vec![], ext))
        }
        M5FourThree => {
            if !g.is_kt(v, 4, 3) {
                return None;
            }
            let twos = weak(g, v);
            let v1 = *twos.iter().find(|&&x| !g.is_kt(across(g, x, v), 4, 1))?;
            let w1 = across(g, v1, v);
            let v2 = *twos.iter().find(|&&x| x != v1)?;
            Some(plan(
                claim,
                vec![v, v1, w1, v2],
                v1,
                vec![edge(g, v, v2)],
                vec![
                    step(g, v1, w1, 2 * d + 4),
                    step(g, v, v1, 3 * d - 1),
                    step(g, v, v2, 3 * d),
                ],
            ))
        }
        G1Pendant => {
            if deg(v) != 1 {
                return None;
            }
            let u = g.neighbors(v)[0];
            let uv = edge(g, u, v);
            if conflicts_of(g, uv).len() >= 3 * d {
                return None;
            }
            Some(plan(claim, vec![v, u], v, vec![], vec![step(g, u, v, 3 * d - 1)]))
        }
        G3AllTwoNeighbors => {
            let tau = deg(v);
            if tau == 0 || g.neighbors(v).iter().any(|&u| deg(u) > 2) {
                return None;
            }
            let nbrs = sorted_neighbors(g, v);
            let ext = nbrs
                .iter()
                .enumerate()
                .map(|(i, &x)| step(g, v, x, d + tau - 1 + i))
                .collect();
            let mut involved = vec![v];
            involved.extend(nbrs);
            Some(plan(claim, involved, v, vec![], ext))
        }
        G4FourTwelve => {
            if deg(v) != 2 {
                return None;
            }
            let (a, b) = pair(g, v);
            [(a, b), (b, a)]
                .into_iter()
                .find(|&(u, w)| deg(u) == 4 && !g.is_kt(u, 4, 1) && deg(w) == 2)
                .map(|(u, w)| {
                    plan(
                        claim,
                        vec![v, u, w],
                        v,
                        vec![],
                        vec![step(g, u, v, 2 * d + 3), step(g, w, v, d + 4)],
                    )
                })
        }
        G5NoFourThreeThree => {
            if deg(v) != 2 {
                return None;
            }
            let (a, b) = pair(g, v);
            [(a, b), (b, a)]
                .into_iter()
                .find(|&(u, w)| g.is_kt(u, 4, 3) && deg(w) == 3)
                .map(|(u, w)| {
                    plan(
                        claim,
                        vec![v, u, w],
                        v,
                        vec![],
                        vec![step(g, w, v, 2 * d + 3), step(g, u, v, d + 7)],
                    )
                })
        }
        G6NotTwoFourTwo => {
            if deg(v) != 2 {
                return None;
            }
            let v1 = v;
            let (a, b) = pair(g, v1);
            let (hub, w1) = [(a, b), (b, a)].into_iter().find(|&(hub, w1)| {
                g.is_kt(hub, 3, 2) && !(deg(w1) >= 5 || g.is_kt(w1, 4, 1))
            })?;
            let v2 = *weak(g, hub).iter().find(|&&x| x != v1)?;
            Some(plan(
                claim,
                vec![v1, hub, w1, v2],
                v1,
                vec![edge(g, hub, v2)],
                vec![
                    step(g, v1, w1, 2 * d + 3),
                    step(g, hub, v1, d + 5),
                    step(g, hub, v2, 2 * d + 2),
                ],
            ))
        }
        G7BigOneThreePlus => {
            let k = deg(v);
            if k < 5 || three_plus(g, v) != 1 {
                return None;
            }
            let nbrs = sorted_neighbors(g, v);
            if let Some(&u) = nbrs.iter().find(|&&u| deg(u) == 1) {
                return Some(plan(
                    claim,
                    vec![v, u],
                    u,
                    vec![],
                    vec![step(g, v, u, d + 2 * (k - 2))],
                ));
            }
            let v1 = *nbrs
                .iter()
                .find(|&&x| deg(x) == 2 && deg(across(g, x, v)) <= 3)?;
            let w1 = across(g, v1, v);
            Some(plan(
                claim,
                vec![v, v1, w1],
                v1,
                vec![],
                vec![
                    step(g, v1, w1, 2 * d + k - 1),
                    step(g, v, v1, d + 2 * (k - 2) + 3),
                ],
            ))
        }
        G8BigTwoThreePlus => {
            let k = deg(v);
            if k < 5 || three_plus(g, v) != 2 {
                return None;
            }
            let nbrs = sorted_neighbors(g, v);
            let ones: Vec<VertexId> = nbrs.iter().copied().filter(|&u| deg(u) == 1).collect();
            let l = ones.len();
            if l + 4 >= k && l + 2 <= k && l >= 1 {
                let u = ones[0];
                return Some(plan(
                    claim,
                    vec![v, u],
                    u,
                    vec![],
                    vec![step(g, v, u, 2 * d + (l - 1) + 2 * (k - 2 - l))],
                ));
            }
            if l + 5 != k {
                return None;
            }
            let twos = weak(g, v);
            debug_assert_eq!(twos.len(), 3);
            let ws: Vec<VertexId> = twos.iter().map(|&x| across(g, x, v)).collect();
            if !ws.iter().all(|&w| deg(w) == 2 || g.is_kt(w, 3, 2)) {
                return None;
            }
            let mut involved = vec![v];
            involved.extend(&twos);
            involved.extend(&ws);
            Some(plan(
                claim,
                involved,
                twos[0],
                vec![edge(g, twos[1], ws[1]), edge(g, twos[2], ws[2])],
                vec![
                    step(g, v, twos[0], 2 * d + (k - 3) + 2),
                    step(g, twos[0], ws[0], 3 * d - 1),
                    step(g, twos[1], ws[1], 3 * d - 1),
                    step(g, twos[2], ws[2], 3 * d - 1),
                ],
            ))
        }
    }
}

/// Every match of one configuration, by increasing anchor id.
pub fn match_claim(g: &Graph, claim: ClaimTag, delta: usize) -> Vec<ReductionPlan> {
    g.vertices()
        .filter_map(|v| match_at(g, claim, delta, v))
        .collect()
}

fn first_match(g: &Graph, claims: &[ClaimTag], delta: usize) -> Option<ReductionPlan> {
    claims
        .iter()
        .find_map(|&c| g.vertices().find_map(|v| match_at(g, c, delta, v)))
}

/// First reducible configuration for the sparse (mad < 3, Δ ≤ 4) pipeline,
/// in priority M1 > M2 > M3 > M4 > M5, smallest anchor first.
pub fn find_reducible_mad(g: &Graph) -> Option<ReductionPlan> {
    first_match(g, &ClaimTag::MAD, g.max_degree())
}

fn check_cap(g: &Graph, delta_cap: usize) -> Result<()> {
    if delta_cap < 4 {
        return Err(Error::Hypothesis(format!(
            "degree cap {delta_cap} is below 4"
        )));
    }
    if g.max_degree() > delta_cap {
        return Err(Error::Hypothesis(format!(
            "maximum degree {} exceeds the cap {delta_cap}",
            g.max_degree()
        )));
    }
    Ok(())
}

/// First reducible configuration for the planar girth-7 pipeline, in
/// priority G1 > ... > G8, smallest anchor first.
pub fn find_reducible_girth7(g: &Graph, delta_cap: usize) -> Result<Option<ReductionPlan>> {
    check_cap(g, delta_cap)?;
    Ok(first_match(g, &ClaimTag::GIRTH7, delta_cap))
}

/// All configurations present, in priority order. Only the first one is
/// guaranteed to have valid bounds.
pub fn enumerate_mad(g: &Graph) -> Vec<ReductionPlan> {
    ClaimTag::MAD
        .iter()
        .flat_map(|&c| match_claim(g, c, g.max_degree()))
        .collect()
}

pub fn enumerate_girth7(g: &Graph, delta_cap: usize) -> Result<Vec<ReductionPlan>> {
    check_cap(g, delta_cap)?;
    Ok(ClaimTag::GIRTH7
        .iter()
        .flat_map(|&c| match_claim(g, c, delta_cap))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn single_edge_is_pendant() {
        let g = path(2);
        let p = find_reducible_mad(&g).unwrap();
        assert_eq!(p.claim, ClaimTag::M1Pendant);
        assert_eq!(p.delete_vertex, 0);
        assert_eq!(p.extension.len(), 1);
        assert_eq!(p.extension[0].edge, 0);
        assert!(p.check(&g).is_ok());
    }

    #[test]
    fn p3_fires_pendant_first() {
        let p = find_reducible_mad(&path(3)).unwrap();
        assert_eq!(p.claim, ClaimTag::M1Pendant);
        assert_eq!(p.delete_vertex, 0);
    }

    #[test]
    fn subdivided_star_pendant_beats_four_four() {
        let g = subdivide(&star(4));
        let p = find_reducible_mad(&g).unwrap();
        assert_eq!(p.claim, ClaimTag::M1Pendant);
        assert_eq!(p.delete_vertex, 1);
        // Without leaves the center is the 4₄-vertex.
        let m4 = match_claim(&g, ClaimTag::M4NoFourFour, 4);
        assert_eq!(m4.len(), 1);
        assert_eq!(m4[0].delete_vertex, 0);
    }

    #[test]
    fn c7_fires_two_weak_neighbors() {
        let g = cycle(7);
        let p = find_reducible_mad(&g).unwrap();
        assert_eq!(p.claim, ClaimTag::M2TwoWeakNeighbors);
        let p = find_reducible_girth7(&g, 4).unwrap().unwrap();
        assert_eq!(p.claim, ClaimTag::G2TwoWeak);
        assert_eq!(p.delete_vertex, 0);
        assert_eq!(p.extension[0].bound, 2 * 4 + 2);
    }

    #[test]
    fn star_pendant_girth7() {
        let g = star(4);
        let p = find_reducible_girth7(&g, 4).unwrap().unwrap();
        assert_eq!(p.claim, ClaimTag::G1Pendant);
        assert_eq!(p.delete_vertex, 1);
        assert_eq!(conflicts_of(&g, p.extension[0].edge).len(), 3);
        assert!(p.extension[0].bound < 3 * 4);
    }

    #[test]
    fn girth7_cap_is_checked() {
        assert!(find_reducible_girth7(&star(4), 3).is_err());
        assert!(find_reducible_girth7(&star(5), 4).is_err());
    }

    #[test]
    fn empty_and_edgeless_graphs_have_no_plan() {
        assert!(find_reducible_mad(&Graph::empty(0)).is_none());
        assert!(find_reducible_mad(&Graph::empty(3)).is_none());
        assert!(find_reducible_girth7(&Graph::empty(3), 4).unwrap().is_none());
    }

    #[test]
    fn codes_round_trip() {
        for t in ClaimTag::MAD.iter().chain(&ClaimTag::GIRTH7) {
            assert_eq!(ClaimTag::from_code(t.code()), Some(*t));
        }
    }
}
