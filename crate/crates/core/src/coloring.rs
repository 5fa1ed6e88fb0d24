//! Color lists, partial colorings, the strong-coloring verifier and a greedy
//! baseline.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::conflict::ConflictIndex;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

pub type Color = u32;

/// Admissible colors per edge, each list sorted and free of duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ColorLists {
    lists: Vec<Vec<Color>>,
}

impl ColorLists {
    pub fn new(lists: Vec<Vec<Color>>) -> Self {
        let lists = lists
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                l.dedup();
                l
            })
            .collect();
        ColorLists { lists }
    }

    /// Every one of `edges` edges gets `{0, .., size - 1}`.
    pub fn uniform(edges: usize, size: usize) -> Self {
        ColorLists {
            lists: vec![(0..size as Color).collect(); edges],
        }
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn get(&self, e: EdgeId) -> &[Color] {
        &self.lists[e]
    }

    pub fn set(&mut self, e: EdgeId, list: Vec<Color>) {
        if e >= self.lists.len() {
            self.lists.resize(e + 1, Vec::new());
        }
        self.lists[e] = ColorLists::new(vec![list]).lists.pop().unwrap();
    }

    pub fn min_size(&self) -> usize {
        self.lists.iter().map(Vec::len).min().unwrap_or(usize::MAX)
    }

    pub fn contains(&self, e: EdgeId, c: Color) -> bool {
        self.lists
            .get(e)
            .is_some_and(|l| l.binary_search(&c).is_ok())
    }

    /// Lists for a subgraph whose edge `i` is edge `map[i]` here.
    pub fn restrict(&self, map: &[EdgeId]) -> ColorLists {
        ColorLists {
            lists: map.iter().map(|&e| self.lists[e].clone()).collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &[Color]> {
        self.lists.iter().map(Vec::as_slice)
    }
}

/// Edge → color map, possibly incomplete. Indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PartialColoring {
    colors: Vec<Option<Color>>,
}

impl PartialColoring {
    pub fn new(edges: usize) -> Self {
        PartialColoring {
            colors: vec![None; edges],
        }
    }

    pub fn from_vec(colors: Vec<Option<Color>>) -> Self {
        PartialColoring { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, e: EdgeId) -> Option<Color> {
        self.colors.get(e).copied().flatten()
    }

    pub fn set(&mut self, e: EdgeId, c: Color) {
        if e >= self.colors.len() {
            self.colors.resize(e + 1, None);
        }
        self.colors[e] = Some(c);
    }

    pub fn clear(&mut self, e: EdgeId) {
        if let Some(slot) = self.colors.get_mut(e) {
            *slot = None;
        }
    }

    pub fn colored_count(&self) -> usize {
        self.colors.iter().flatten().count()
    }

    pub fn is_total(&self, edges: usize) -> bool {
        self.colors.len() >= edges && self.colors[..edges].iter().all(Option::is_some)
    }

    pub fn colors_used(&self) -> usize {
        self.colors.iter().flatten().collect::<BTreeSet<_>>().len()
    }

    /// (edge, color) pairs of the colored edges, by edge id.
    pub fn iter(&self) -> impl Iterator<Item = (EdgeId, Color)> + '_ {
        self.colors
            .iter()
            .enumerate()
            .filter_map(|(e, c)| c.map(|c| (e, c)))
    }

    pub fn as_slice(&self) -> &[Option<Color>] {
        &self.colors
    }

    /// Copies this coloring of a subgraph into a coloring of the parent,
    /// where subgraph edge `i` is parent edge `map[i]`.
    pub fn lift(&self, map: &[EdgeId], parent_edges: usize) -> PartialColoring {
        let mut out = PartialColoring::new(parent_edges);
        for (e, c) in self.iter() {
            out.set(map[e], c);
        }
        out
    }

    /// Applies `rename` to every color.
    pub fn map_colors(&self, rename: impl Fn(Color) -> Color) -> PartialColoring {
        PartialColoring {
            colors: self.colors.iter().map(|c| c.map(&rename)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Violation {
    Uncolored(EdgeId),
    UnknownEdge(EdgeId),
    /// Two edges within distance two share a color.
    Conflict(EdgeId, EdgeId, Color),
    NotInList(EdgeId, Color),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Uncolored(e) => write!(f, "edge {e} is uncolored"),
            Violation::UnknownEdge(e) => write!(f, "color assigned to unknown edge {e}"),
            Violation::Conflict(a, b, c) => {
                write!(f, "edges {a} and {b} are within distance two and share color {c}")
            }
            Violation::NotInList(e, c) => write!(f, "edge {e} has color {c} outside its list"),
        }
    }
}

/// Checks that every color class is an induced matching (and, when asked,
/// that every edge is colored). An empty result means the coloring is a
/// strong edge coloring.
///
/// This works class by class on the definition, without the conflict
/// index, so it can serve as an independent check of the solvers.
pub fn verify_strong(g: &Graph, c: &PartialColoring, require_total: bool) -> Vec<Violation> {
    let m = g.edge_count();
    let mut out = Vec::new();
    let mut classes: BTreeMap<Color, Vec<EdgeId>> = BTreeMap::new();
    for (e, color) in c.iter() {
        if e >= m {
            out.push(Violation::UnknownEdge(e));
        } else {
            classes.entry(color).or_default().push(e);
        }
    }
    if require_total {
        out.extend((0..m).filter(|&e| c.get(e).is_none()).map(Violation::Uncolored));
    }
    for (&color, class) in &classes {
        for (i, &a) in class.iter().enumerate() {
            for &b in &class[i + 1..] {
                if !induced_pair(g, a, b) {
                    out.push(Violation::Conflict(a, b, color));
                }
            }
        }
    }
    out
}

/// True when `a` and `b` are disjoint and no edge joins them.
fn induced_pair(g: &Graph, a: EdgeId, b: EdgeId) -> bool {
    let (a0, a1) = g.endpoints(a);
    let (b0, b1) = g.endpoints(b);
    for x in [a0, a1] {
        for y in [b0, b1] {
            if x == y || g.edge_between(x, y).is_some() {
                return false;
            }
        }
    }
    true
}

/// Colors that lie outside their edge's list.
pub fn check_lists(c: &PartialColoring, lists: &ColorLists) -> Vec<Violation> {
    c.iter()
        .filter(|&(e, color)| !lists.contains(e, color))
        .map(|(e, color)| Violation::NotInList(e, color))
        .collect()
}

/// Greedy list coloring: edges in `order`, each takes the smallest color of
/// its list not used on a colored conflicting edge. Always succeeds when
/// every list is longer than the edge's conflict degree.
pub fn greedy_color(g: &Graph, lists: &ColorLists, order: &[EdgeId]) -> Result<PartialColoring> {
    let idx = ConflictIndex::build(g);
    let mut c = PartialColoring::new(g.edge_count());
    greedy_extend(&idx, lists, order, &mut c)?;
    Ok(c)
}

pub(crate) fn greedy_extend(
    idx: &ConflictIndex,
    lists: &ColorLists,
    order: &[EdgeId],
    c: &mut PartialColoring,
) -> Result<()> {
    for &e in order {
        if e >= idx.edge_count() {
            return Err(Error::UnknownEdge(e));
        }
        let used: BTreeSet<Color> = idx.conflicts(e).iter().filter_map(|&f| c.get(f)).collect();
        match lists.get(e).iter().find(|col| !used.contains(col)) {
            Some(&col) => c.set(e, col),
            None => {
                return Err(Error::Unsolved(format!(
                    "greedy found no admissible color for edge {e}"
                )))
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn coloring(g: &Graph, pairs: &[((usize, usize), Color)]) -> PartialColoring {
        let mut c = PartialColoring::new(g.edge_count());
        for &((u, v), col) in pairs {
            c.set(g.edge_between(u, v).unwrap(), col);
        }
        c
    }

    #[test]
    fn c5_with_five_colors_is_strong() {
        let g = cycle(5);
        let c = PartialColoring::from_vec((0..5).map(Some).collect());
        assert!(verify_strong(&g, &c, true).is_empty());
    }

    #[test]
    fn p4_end_edges_conflict() {
        let g = path(4);
        let c = coloring(&g, &[((0, 1), 1), ((1, 2), 2), ((2, 3), 1)]);
        let v = verify_strong(&g, &c, true);
        assert_eq!(v, vec![Violation::Conflict(0, 2, 1)]);
    }

    #[test]
    fn p5_end_edges_are_free() {
        let g = path(5);
        let c = coloring(&g, &[((0, 1), 1), ((1, 2), 2), ((2, 3), 3), ((3, 4), 1)]);
        assert!(verify_strong(&g, &c, true).is_empty());
    }

    #[test]
    fn uncolored_and_unknown_edges_are_reported() {
        let g = path(3);
        let mut c = PartialColoring::new(2);
        c.set(0, 1);
        c.set(9, 4);
        let v = verify_strong(&g, &c, true);
        assert!(v.contains(&Violation::Uncolored(1)));
        assert!(v.contains(&Violation::UnknownEdge(9)));
        assert!(!verify_strong(&g, &c, false).contains(&Violation::Uncolored(1)));
    }

    #[test]
    fn greedy_single_edge() {
        let g = path(2);
        let c = greedy_color(&g, &ColorLists::new(vec![vec![7]]), &[0]).unwrap();
        assert_eq!(c.get(0), Some(7));
    }

    #[test]
    fn greedy_c5_uses_five_colors() {
        let g = cycle(5);
        let lists = ColorLists::new(vec![(1..=5).collect(); 5]);
        let c = greedy_color(&g, &lists, &[0, 1, 2, 3, 4]).unwrap();
        assert!(verify_strong(&g, &c, true).is_empty());
        assert_eq!(c.colors_used(), 5);
    }

    #[test]
    fn greedy_p3_singletons_fail() {
        let g = path(3);
        let lists = ColorLists::new(vec![vec![1], vec![1]]);
        let err = greedy_color(&g, &lists, &[0, 1]).unwrap_err();
        assert!(err.to_string().contains("edge 1"));
    }

    #[test]
    fn list_membership() {
        let lists = ColorLists::new(vec![vec![3, 1], vec![2]]);
        let mut c = PartialColoring::new(2);
        c.set(0, 3);
        c.set(1, 5);
        assert_eq!(check_lists(&c, &lists), vec![Violation::NotInList(1, 5)]);
        assert_eq!(lists.get(0), &[1, 3]);
    }
}
