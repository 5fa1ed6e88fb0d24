//! Exact ground truth on small instances: the strong chromatic index and
//! list strong colorability, by complete backtracking over the conflict
//! graph.
//!
//! Edges are put in a canonical order (by endpoint pair) before the search,
//! so results do not depend on the order edges were inserted in. Branching
//! picks the uncolored edge with the fewest admissible colors, ties by
//! canonical position. In the uniform case a new color may only be the
//! next unused one.

use crate::coloring::{Color, ColorLists, PartialColoring};
use crate::conflict::ConflictIndex;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest edge count the oracle accepts.
    pub max_edges: usize,
    /// Search nodes allowed before giving up with [`Error::Budget`].
    pub max_nodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_edges: 28,
            max_nodes: 200_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub chi_s: usize,
    /// A strong coloring with colors `0..chi_s`.
    pub witness: PartialColoring,
    /// Size of a greedily found clique in the conflict graph.
    pub lower_bound_clique: usize,
}

/// Conflict graph in canonical edge order, as adjacency bit rows.
struct Canonical {
    /// `order[i]` is the edge id at canonical position `i`.
    order: Vec<EdgeId>,
    adj: Vec<Vec<usize>>,
}

impl Canonical {
    fn new(g: &Graph) -> Self {
        let mut order: Vec<EdgeId> = (0..g.edge_count()).collect();
        order.sort_by_key(|&e| g.endpoints(e));
        let mut pos = vec![0; order.len()];
        for (i, &e) in order.iter().enumerate() {
            pos[e] = i;
        }
        let idx = ConflictIndex::build(g);
        let adj = order
            .iter()
            .map(|&e| {
                let mut row: Vec<usize> = idx.conflicts(e).iter().map(|&f| pos[f]).collect();
                row.sort_unstable();
                row
            })
            .collect();
        Canonical { order, adj }
    }

    fn len(&self) -> usize {
        self.order.len()
    }

    fn greedy_clique(&self) -> usize {
        let n = self.len();
        let mut by_degree: Vec<usize> = (0..n).collect();
        by_degree.sort_by_key(|&i| (std::cmp::Reverse(self.adj[i].len()), i));
        let mut clique: Vec<usize> = Vec::new();
        for i in by_degree {
            if clique.iter().all(|&j| self.adj[i].binary_search(&j).is_ok()) {
                clique.push(i);
            }
        }
        clique.len()
    }

    fn to_coloring(&self, colors: &[Option<Color>]) -> PartialColoring {
        let mut out = PartialColoring::new(self.len());
        for (i, c) in colors.iter().enumerate() {
            out.set(self.order[i], c.expect("search returns total colorings"));
        }
        out
    }
}

struct Search<'a> {
    cg: &'a Canonical,
    /// Admissible colors per canonical vertex.
    lists: Vec<Vec<Color>>,
    colors: Vec<Option<Color>>,
    /// Only allow a fresh color when it is the smallest unused one.
    symmetric: bool,
    nodes: u64,
    max_nodes: u64,
}

impl Search<'_> {
    fn admissible(&self, i: usize, max_used: Option<Color>) -> Vec<Color> {
        let mut out: Vec<Color> = self.lists[i]
            .iter()
            .copied()
            .filter(|&c| !self.cg.adj[i].iter().any(|&j| self.colors[j] == Some(c)))
            .collect();
        if self.symmetric {
            let limit = max_used.map_or(0, |m| m + 1);
            out.retain(|&c| c <= limit);
        }
        out
    }

    fn run(&mut self, max_used: Option<Color>) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::Budget(self.max_nodes));
        }
        let mut best: Option<(usize, Vec<Color>)> = None;
        for i in 0..self.colors.len() {
            if self.colors[i].is_some() {
                continue;
            }
            let opts = self.admissible(i, max_used);
            if best.as_ref().is_none_or(|(_, b)| opts.len() < b.len()) {
                let empty = opts.is_empty();
                best = Some((i, opts));
                if empty {
                    break;
                }
            }
        }
        let Some((i, opts)) = best else {
            return Ok(true);
        };
        for c in opts {
            self.colors[i] = Some(c);
            if self.run(Some(max_used.map_or(c, |m| m.max(c))))? {
                return Ok(true);
            }
        }
        self.colors[i] = None;
        Ok(false)
    }
}

fn check_cap(g: &Graph, budget: &Budget) -> Result<()> {
    if g.edge_count() > budget.max_edges {
        return Err(Error::OracleCap {
            edges: g.edge_count(),
            cap: budget.max_edges,
        });
    }
    Ok(())
}

/// Exact strong chromatic index.
pub fn strong_chromatic_index_exact(g: &Graph, budget: &Budget) -> Result<OracleResult> {
    check_cap(g, budget)?;
    let cg = Canonical::new(g);
    let lb = cg.greedy_clique();
    let mut nodes = 0;
    for k in lb..=cg.len() {
        let mut s = Search {
            cg: &cg,
            lists: vec![(0..k as Color).collect(); cg.len()],
            colors: vec![None; cg.len()],
            symmetric: true,
            nodes,
            max_nodes: budget.max_nodes,
        };
        if s.run(None)? {
            return Ok(OracleResult {
                chi_s: k,
                witness: cg.to_coloring(&s.colors),
                lower_bound_clique: lb,
            });
        }
        nodes = s.nodes;
    }
    unreachable!("one color per edge always suffices")
}

/// A strong coloring drawing each edge's color from its list, or `None`
/// when no such coloring exists.
pub fn list_strong_colorable(
    g: &Graph,
    lists: &ColorLists,
    budget: &Budget,
) -> Result<Option<PartialColoring>> {
    check_cap(g, budget)?;
    if lists.len() < g.edge_count() {
        return Err(Error::Hypothesis(format!(
            "{} lists for {} edges",
            lists.len(),
            g.edge_count()
        )));
    }
    let cg = Canonical::new(g);
    let mut s = Search {
        cg: &cg,
        lists: cg.order.iter().map(|&e| lists.get(e).to_vec()).collect(),
        colors: vec![None; cg.len()],
        symmetric: false,
        nodes: 0,
        max_nodes: budget.max_nodes,
    };
    Ok(if s.run(None)? {
        Some(cg.to_coloring(&s.colors))
    } else {
        None
    })
}

/// Checks χ'ₛ ≤ 1 for maximum degree at most one and χ'ₛ ≤ 5 for maximum
/// degree two, with the exact oracle.
pub fn check_proposition_small_delta(g: &Graph) -> Result<bool> {
    let delta = g.max_degree();
    if delta > 2 {
        return Err(Error::Hypothesis(format!(
            "maximum degree {delta} exceeds 2"
        )));
    }
    let budget = Budget {
        max_edges: usize::MAX,
        ..Budget::default()
    };
    let chi = strong_chromatic_index_exact(g, &budget)?.chi_s;
    Ok(if delta <= 1 { chi <= 1 } else { chi <= 5 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_strong;
    use crate::graph::named::*;

    fn chi(g: &Graph) -> usize {
        let r = strong_chromatic_index_exact(g, &Budget::default()).unwrap();
        assert!(verify_strong(g, &r.witness, true).is_empty());
        assert!(r.lower_bound_clique <= r.chi_s);
        assert_eq!(r.witness.colors_used(), r.chi_s);
        r.chi_s
    }

    #[test]
    fn small_examples() {
        assert_eq!(chi(&cycle(5)), 5);
        assert_eq!(chi(&path(4)), 3);
        assert_eq!(chi(&cycle(7)), 4);
        for n in 1..7 {
            assert_eq!(chi(&star(n)), n);
        }
        assert_eq!(chi(&Graph::empty(3)), 0);
    }

    #[test]
    fn blowup_needs_twenty() {
        let r = strong_chromatic_index_exact(&c5_blowup(2), &Budget::default()).unwrap();
        assert_eq!(r.chi_s, 20);
        assert_eq!(r.lower_bound_clique, 20);
    }

    #[test]
    fn cap_is_enforced() {
        let err = strong_chromatic_index_exact(&path(30), &Budget::default()).unwrap_err();
        assert!(matches!(err, Error::OracleCap { edges: 29, cap: 28 }));
    }

    #[test]
    fn budget_is_enforced() {
        let tiny = Budget {
            max_edges: 28,
            max_nodes: 3,
        };
        assert_eq!(
            strong_chromatic_index_exact(&petersen(), &tiny),
            Err(Error::Budget(3))
        );
    }

    #[test]
    fn list_examples() {
        let c = list_strong_colorable(&path(2), &ColorLists::new(vec![vec![5]]), &Budget::default())
            .unwrap()
            .unwrap();
        assert_eq!(c.get(0), Some(5));
        let four = ColorLists::new(vec![vec![1, 2, 3, 4]; 5]);
        assert!(list_strong_colorable(&cycle(5), &four, &Budget::default())
            .unwrap()
            .is_none());
        let single = ColorLists::new(vec![vec![1], vec![1]]);
        assert!(list_strong_colorable(&path(3), &single, &Budget::default())
            .unwrap()
            .is_none());
    }

    #[test]
    fn proposition_examples() {
        let matching = Graph::from_edges(&[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert!(check_proposition_small_delta(&matching).unwrap());
        assert_eq!(chi(&matching), 1);
        assert!(check_proposition_small_delta(&cycle(5)).unwrap());
        assert!(check_proposition_small_delta(&path(6)).unwrap());
        assert_eq!(chi(&path(6)), 3);
        assert!(check_proposition_small_delta(&star(3)).is_err());
    }
}
