//! Reduce-and-extend list strong edge coloring.
//!
//! The solver repeatedly finds a reducible configuration, deletes one of its
//! vertices and descends into the smaller graph until no edge is left. On
//! the way back up each plan erases a few colors and recolors its extension
//! edges in order, picking the smallest admissible color of each list.
//! Before every assignment the number of colored edges within distance two
//! is compared against the bound the plan promised.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::coloring::{check_lists, greedy_color, verify_strong, Color, ColorLists, PartialColoring};
use crate::conflict::conflicts_of;
use crate::density::{mad, Rational};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::oracle::{list_strong_colorable, Budget};
use crate::reducer::{find_reducible_girth7, find_reducible_mad, ClaimTag, ReductionPlan};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pipeline {
    /// Graphs with mad < 3 and Δ ≤ 4, lists of size 3Δ + 1.
    Mad3,
    /// Planar graphs of girth ≥ 7 with Δ ≤ cap, lists of size 3·cap.
    Girth7,
}

impl fmt::Display for Pipeline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pipeline::Mad3 => "mad3",
            Pipeline::Girth7 => "girth7",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Largest stuck subgraph handed to the exact oracle when the girth-7
    /// pipeline finds no configuration; bigger ones go to greedy.
    pub fallback_threshold: usize,
    pub oracle: Budget,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            fallback_threshold: 24,
            oracle: Budget::default(),
        }
    }
}

/// What happened at one extension step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepRecord {
    pub claim: ClaimTag,
    pub step: usize,
    pub edge: EdgeId,
    pub bound: usize,
    /// Colored edges within distance two right before the assignment.
    pub actual: usize,
    pub list_size: usize,
    pub color: Color,
}

impl StepRecord {
    pub fn within_bound(&self) -> bool {
        self.actual <= self.bound
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub coloring: PartialColoring,
    pub pipeline: Pipeline,
    /// The list size the run was entitled to: 3Δ + 1 or 3·cap.
    pub list_bound: usize,
    pub colors_used: usize,
    /// Every extension stayed within its plan's bound and no fallback ran.
    pub certified: bool,
    pub fallback: Option<String>,
    /// How often each configuration was reduced.
    pub claims: BTreeMap<ClaimTag, usize>,
    pub steps: Vec<StepRecord>,
    pub max_depth: usize,
}

impl SolveReport {
    pub fn bound_violations(&self) -> usize {
        self.steps.iter().filter(|s| !s.within_bound()).count()
    }
}

/// Colors the extension edges of `plan` on `g` (the graph the plan was
/// made for), after erasing the plan's erase edges. `partial` must be a
/// strong coloring of the rest of `g`.
pub fn extend(
    g: &Graph,
    partial: &mut PartialColoring,
    plan: &ReductionPlan,
    lists: &ColorLists,
) -> Result<Vec<StepRecord>> {
    for &e in &plan.erase_edges {
        partial.clear(e);
    }
    let mut records = Vec::with_capacity(plan.extension.len());
    for (i, s) in plan.extension.iter().enumerate() {
        let conflicts = conflicts_of(g, s.edge);
        let used: BTreeSet<Color> = conflicts.iter().filter_map(|&f| partial.get(f)).collect();
        let actual = conflicts.iter().filter(|&&f| partial.get(f).is_some()).count();
        let list = lists.get(s.edge);
        let Some(&color) = list.iter().find(|c| !used.contains(c)) else {
            return Err(Error::ExtensionFailed {
                step: i,
                edge: s.edge,
                promised: s.bound,
                actual,
            });
        };
        partial.set(s.edge, color);
        records.push(StepRecord {
            claim: plan.claim,
            step: i,
            edge: s.edge,
            bound: s.bound,
            actual,
            list_size: list.len(),
            color,
        });
    }
    Ok(records)
}

struct Frame {
    graph: Graph,
    plan: ReductionPlan,
    /// Edge ids of the child graph mapped to `graph`'s edge ids.
    child_edges: Vec<EdgeId>,
    lists: ColorLists,
}

struct Run {
    claims: BTreeMap<ClaimTag, usize>,
    steps: Vec<StepRecord>,
    fallback: Option<String>,
    max_depth: usize,
}

/// What to do when no configuration is found on a graph with edges.
enum Stuck<'a> {
    Alarm,
    Fallback(&'a SolveOptions),
}

fn reduce_and_extend(
    g: &Graph,
    lists: &ColorLists,
    detect: &dyn Fn(&Graph) -> Result<Option<ReductionPlan>>,
    stuck: &Stuck<'_>,
    run: &mut Run,
) -> Result<PartialColoring> {
    let mut frames: Vec<Frame> = Vec::new();
    let mut cur = g.clone();
    let mut cur_lists = lists.clone();
    let mut coloring = loop {
        if cur.edge_count() == 0 {
            break PartialColoring::new(0);
        }
        match detect(&cur)? {
            Some(plan) => {
                let (child, child_edges) = cur.without_vertex(plan.delete_vertex);
                let child_lists = cur_lists.restrict(&child_edges);
                *run.claims.entry(plan.claim).or_default() += 1;
                frames.push(Frame {
                    graph: std::mem::replace(&mut cur, child),
                    plan,
                    child_edges,
                    lists: std::mem::replace(&mut cur_lists, child_lists),
                });
                run.max_depth = run.max_depth.max(frames.len());
            }
            None => match stuck {
                Stuck::Alarm => {
                    return Err(Error::TheoremViolation(format!(
                        "no reducible configuration in a hypothesis-satisfying graph with {} vertices and {} edges",
                        cur.vertex_count(),
                        cur.edge_count()
                    )))
                }
                Stuck::Fallback(opts) => break fallback(&cur, &cur_lists, opts, run)?,
            },
        }
    };
    while let Some(f) = frames.pop() {
        let mut lifted = coloring.lift(&f.child_edges, f.graph.edge_count());
        let records = extend(&f.graph, &mut lifted, &f.plan, &f.lists)?;
        run.steps.extend(records);
        coloring = lifted;
    }
    Ok(coloring)
}

fn fallback(g: &Graph, lists: &ColorLists, opts: &SolveOptions, run: &mut Run) -> Result<PartialColoring> {
    let m = g.edge_count();
    if m <= opts.fallback_threshold {
        let budget = Budget {
            max_edges: m.max(opts.oracle.max_edges),
            ..opts.oracle
        };
        let c = list_strong_colorable(g, lists, &budget)?
            .ok_or_else(|| Error::Unsolved(format!("no list strong coloring of a stuck subgraph with {m} edges")))?;
        run.fallback = Some(format!(
            "no reducible configuration on a subgraph with {m} edges; colored it with the exact oracle"
        ));
        Ok(c)
    } else {
        let order: Vec<EdgeId> = (0..m).collect();
        let c = greedy_color(g, lists, &order)?;
        run.fallback = Some(format!(
            "no reducible configuration on a subgraph with {m} edges; colored it greedily"
        ));
        Ok(c)
    }
}

fn check_list_sizes(g: &Graph, lists: &ColorLists, need: usize) -> Result<()> {
    if lists.len() < g.edge_count() {
        return Err(Error::Hypothesis(format!(
            "{} color lists for {} edges",
            lists.len(),
            g.edge_count()
        )));
    }
    if let Some(e) = (0..g.edge_count()).find(|&e| lists.get(e).len() < need) {
        return Err(Error::Hypothesis(format!(
            "list of edge {e} has {} colors, at least {need} required",
            lists.get(e).len()
        )));
    }
    Ok(())
}

/// Solves each component with edges separately and stitches the results.
fn solve_components(
    g: &Graph,
    lists: &ColorLists,
    detect: &dyn Fn(&Graph) -> Result<Option<ReductionPlan>>,
    stuck: &Stuck<'_>,
    run: &mut Run,
) -> Result<PartialColoring> {
    let mut out = PartialColoring::new(g.edge_count());
    for comp in g.components() {
        if comp.len() < 2 {
            continue;
        }
        let (sub, _, emap) = g.induced(&comp);
        let c = reduce_and_extend(&sub, &lists.restrict(&emap), detect, stuck, run)?;
        for (e, col) in c.iter() {
            out.set(emap[e], col);
        }
    }
    Ok(out)
}

fn finish(
    g: &Graph,
    lists: &ColorLists,
    coloring: PartialColoring,
    pipeline: Pipeline,
    list_bound: usize,
    run: Run,
) -> Result<SolveReport> {
    let mut bad = verify_strong(g, &coloring, true);
    bad.extend(check_lists(&coloring, lists));
    if let Some(v) = bad.first() {
        return Err(Error::TheoremViolation(format!(
            "solver produced an invalid coloring: {v}"
        )));
    }
    let report = SolveReport {
        colors_used: coloring.colors_used(),
        certified: run.fallback.is_none() && run.steps.iter().all(StepRecord::within_bound),
        coloring,
        pipeline,
        list_bound,
        fallback: run.fallback,
        claims: run.claims,
        steps: run.steps,
        max_depth: run.max_depth,
    };
    Ok(report)
}

fn new_run() -> Run {
    Run {
        claims: BTreeMap::new(),
        steps: Vec::new(),
        fallback: None,
        max_depth: 0,
    }
}

/// List strong edge coloring of a graph with mad < 3 and Δ ≤ 4 from lists
/// of size at least 3Δ + 1.
pub fn solve_mad3(g: &Graph, lists: &ColorLists) -> Result<SolveReport> {
    let delta = g.max_degree();
    if delta > 4 {
        return Err(Error::Hypothesis(format!(
            "maximum degree {delta} exceeds 4"
        )));
    }
    if g.vertex_count() > 0 {
        let w = mad(g)?;
        if w.density >= Rational::from_integer(3) {
            return Err(Error::Hypothesis(format!(
                "mad = {} is not below 3 (witness subgraph on vertices {:?})",
                w.density, w.vertices
            )));
        }
    }
    let need = 3 * delta + 1;
    // With Δ ≤ 1 no two edges conflict, so any nonempty lists will do.
    check_list_sizes(g, lists, if delta <= 1 { 1 } else { need })?;
    let mut run = new_run();
    let coloring = if delta <= 1 {
        // A matching: no two edges conflict.
        let order: Vec<EdgeId> = (0..g.edge_count()).collect();
        greedy_color(g, lists, &order)?
    } else {
        let detect = |h: &Graph| Ok(find_reducible_mad(h));
        solve_components(g, lists, &detect, &Stuck::Alarm, &mut run)?
    };
    finish(g, lists, coloring, Pipeline::Mad3, need, run)
}

/// List strong edge coloring of a planar graph with girth ≥ 7 and Δ ≤ cap
/// (cap ≥ 4) from lists of size at least 3·cap. Planarity is taken on
/// trust; if it is false the reduction may get stuck, in which case the
/// stuck part is colored by a fallback and the report is not certified.
pub fn solve_girth7(
    g: &Graph,
    lists: &ColorLists,
    delta_cap: usize,
    opts: &SolveOptions,
) -> Result<SolveReport> {
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
    let girth = g.girth();
    if !girth.at_least(7) {
        return Err(Error::Hypothesis(format!("girth {girth} is below 7")));
    }
    let need = 3 * delta_cap;
    check_list_sizes(g, lists, need)?;
    let mut run = new_run();
    let detect = |h: &Graph| find_reducible_girth7(h, delta_cap);
    let coloring = solve_components(g, lists, &detect, &Stuck::Fallback(opts), &mut run)?;
    finish(g, lists, coloring, Pipeline::Girth7, need, run)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn c7_mad3_uniform() {
        let g = cycle(7);
        let r = solve_mad3(&g, &ColorLists::uniform(7, 7)).unwrap();
        assert!(r.certified);
        assert!(r.colors_used <= 7);
        assert_eq!(r.list_bound, 7);
    }

    #[test]
    fn single_edge_takes_its_list() {
        let g = path(2);
        let r = solve_mad3(&g, &ColorLists::new(vec![vec![42]])).unwrap();
        assert_eq!(r.coloring.get(0), Some(42));
        assert!(r.certified);
    }

    #[test]
    fn mad3_rejects_dense_or_high_degree() {
        let err = solve_mad3(&complete(4), &ColorLists::uniform(6, 10)).unwrap_err();
        assert!(err.to_string().contains("mad = 3"));
        let err = solve_mad3(&star(5), &ColorLists::uniform(5, 16)).unwrap_err();
        assert!(err.to_string().contains("exceeds 4"));
        let err = solve_mad3(&cycle(7), &ColorLists::uniform(7, 6)).unwrap_err();
        assert!(matches!(err, Error::Hypothesis(_)));
    }

    #[test]
    fn girth7_rejections() {
        let g = cycle(7);
        assert!(solve_girth7(&g, &ColorLists::uniform(7, 12), 3, &SolveOptions::default()).is_err());
        assert!(solve_girth7(&cycle(6), &ColorLists::uniform(6, 12), 4, &SolveOptions::default()).is_err());
        assert!(solve_girth7(&g, &ColorLists::uniform(7, 11), 4, &SolveOptions::default()).is_err());
        assert!(solve_girth7(&star(5), &ColorLists::uniform(5, 12), 4, &SolveOptions::default()).is_err());
    }

    #[test]
    fn c7_girth7() {
        let g = cycle(7);
        let r = solve_girth7(&g, &ColorLists::uniform(7, 12), 4, &SolveOptions::default()).unwrap();
        assert!(r.certified);
        assert!(r.colors_used <= 12);
    }

    #[test]
    fn mcgee_falls_back_to_greedy() {
        let g = mcgee();
        let r = solve_girth7(&g, &ColorLists::uniform(36, 15), 5, &SolveOptions::default()).unwrap();
        assert!(!r.certified);
        assert!(r.fallback.as_deref().unwrap().contains("greedily"));
        assert!(verify_strong(&g, &r.coloring, true).is_empty());
    }

    #[test]
    fn extend_reports_exhausted_lists() {
        let g = path(3);
        let plan = find_reducible_mad(&g).unwrap();
        let (_, map) = g.without_vertex(plan.delete_vertex);
        // Child edge colored 1, pendant edge only allows 1.
        let mut child = PartialColoring::new(1);
        child.set(0, 1);
        let mut lifted = child.lift(&map, 2);
        let lists = ColorLists::new(vec![vec![1], vec![1]]);
        let err = extend(&g, &mut lifted, &plan, &lists).unwrap_err();
        assert!(matches!(err, Error::ExtensionFailed { step: 0, actual: 1, .. }));
    }
}
