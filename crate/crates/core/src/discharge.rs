//! Discharging arithmetic on concrete graphs.
//!
//! Two rule sets are implemented. The sparse one starts every vertex at
//! `deg(v) - 3` and lets 4₁- and 4₂-vertices feed their 2-neighbors. The
//! planar one starts vertices at `5/2·deg(v) - 7` and faces at
//! `deg(f) - 7` and applies rules R1 to R10. All rules read the degree
//! classes of the original graph and fire simultaneously, so the order in
//! which they are listed has no effect.

use std::fmt;

use num_traits::Signed;

use crate::density::{mad, Rational};
use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::graph::{Girth, Graph, VertexId};
use crate::reducer::{enumerate_girth7, enumerate_mad, ClaimTag, ReductionPlan};
use crate::solver::Pipeline;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Vertex(VertexId),
    Face(usize),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "vertex {v}"),
            Element::Face(i) => write!(f, "face {i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transfer {
    pub from: Element,
    pub to: Element,
    pub amount: Rational,
    pub rule: &'static str,
}

/// A 2-vertex whose neighbor classes match none of the planar rules'
/// cases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UncoveredCase {
    pub vertex: VertexId,
    /// Classes of the two neighbors, e.g. `{4_3, 3_1}`.
    pub profile: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeLedger {
    pub vertex_initial: Vec<Rational>,
    pub vertex_final: Vec<Rational>,
    pub face_initial: Vec<Rational>,
    pub face_final: Vec<Rational>,
    pub transfers: Vec<Transfer>,
    pub uncovered: Vec<UncoveredCase>,
}

impl ChargeLedger {
    fn new(vertex_initial: Vec<Rational>, face_initial: Vec<Rational>) -> Self {
        ChargeLedger {
            vertex_final: vertex_initial.clone(),
            face_final: face_initial.clone(),
            vertex_initial,
            face_initial,
            transfers: Vec::new(),
            uncovered: Vec::new(),
        }
    }

    fn slot(&mut self, el: Element) -> &mut Rational {
        match el {
            Element::Vertex(v) => &mut self.vertex_final[v],
            Element::Face(i) => &mut self.face_final[i],
        }
    }

    fn send(&mut self, from: Element, to: Element, amount: Rational, rule: &'static str) {
        *self.slot(from) -= amount;
        *self.slot(to) += amount;
        self.transfers.push(Transfer {
            from,
            to,
            amount,
            rule,
        });
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        let faces = self.face_initial.len();
        (0..self.vertex_initial.len())
            .map(Element::Vertex)
            .chain((0..faces).map(Element::Face))
    }

    pub fn initial(&self, el: Element) -> Rational {
        match el {
            Element::Vertex(v) => self.vertex_initial[v],
            Element::Face(i) => self.face_initial[i],
        }
    }

    pub fn final_charge(&self, el: Element) -> Rational {
        match el {
            Element::Vertex(v) => self.vertex_final[v],
            Element::Face(i) => self.face_final[i],
        }
    }

    pub fn total_initial(&self) -> Rational {
        self.vertex_initial.iter().chain(&self.face_initial).sum()
    }

    pub fn total_final(&self) -> Rational {
        self.vertex_final.iter().chain(&self.face_final).sum()
    }

    pub fn is_conserved(&self) -> bool {
        self.total_initial() == self.total_final()
    }

    /// Elements with negative final charge, vertices first.
    pub fn negative(&self) -> Vec<(Element, Rational)> {
        self.elements()
            .map(|el| (el, self.final_charge(el)))
            .filter(|(_, c)| c.is_negative())
            .collect()
    }
}

fn r(a: i64, b: i64) -> Rational {
    Rational::new(a, b)
}

/// `Σ_v (5/2·deg(v) - 7) + Σ_f (deg(f) - 7)`, which Euler's formula pins to
/// `-14` on a connected plane graph.
pub fn euler_charge_identity(emb: &Embedding) -> Result<Rational> {
    let g = emb.graph();
    let comps = g.components().len();
    if comps != 1 {
        return Err(Error::Disconnected(comps));
    }
    let vertices: Rational = g
        .vertices()
        .map(|v| r(5 * g.degree(v) as i64, 2) - 7)
        .sum();
    let faces: Rational = emb
        .faces()
        .iter()
        .map(|f| Rational::from_integer(f.degree() as i64 - 7))
        .sum();
    let total = vertices + faces;
    if total != r(-14, 1) {
        return Err(Error::TheoremViolation(format!(
            "charge identity gives {total} instead of -14"
        )));
    }
    Ok(total)
}

/// Sparse rules: start at `deg(v) - 3`; a 4₁-vertex sends 1 to its
/// 2-neighbor (R1), a 4₂-vertex sends 1/2 to each 2-neighbor (R2).
pub fn apply_rules_mad(g: &Graph) -> ChargeLedger {
    let initial = g
        .vertices()
        .map(|v| Rational::from_integer(g.degree(v) as i64 - 3))
        .collect();
    let mut ledger = ChargeLedger::new(initial, Vec::new());
    for v in g.vertices() {
        let (amount, rule) = if g.is_kt(v, 4, 1) {
            (r(1, 1), "R1")
        } else if g.is_kt(v, 4, 2) {
            (r(1, 2), "R2")
        } else {
            continue;
        };
        for &u in g.neighbors(v) {
            if g.degree(u) == 2 {
                ledger.send(Element::Vertex(v), Element::Vertex(u), amount, rule);
            }
        }
    }
    ledger
}

/// Short class name used in reports: `1`, `2`, `k_t` for degree 3 or 4,
/// `5+` above.
pub fn class_label(g: &Graph, v: VertexId) -> String {
    match g.degree(v) {
        d @ (0..=2) => d.to_string(),
        d @ (3 | 4) => format!("{d}_{}", g.weak_neighbors(v)),
        _ => "5+".to_string(),
    }
}

/// Whether the planar analysis has a case for a 2-vertex with neighbors
/// `a` and `b`.
fn covered_pair(g: &Graph, a: VertexId, b: VertexId) -> bool {
    let big = |x| g.degree(x) >= 5;
    let kt = |x, k, t| g.is_kt(x, k, t);
    if kt(a, 4, 1) || kt(b, 4, 1) {
        return true;
    }
    let oriented = |u, w| {
        (big(u) && (g.degree(w) == 2 || kt(w, 3, 1) || kt(w, 3, 2) || g.degree(w) >= 4))
            || (kt(u, 4, 2) && kt(w, 3, 1))
            || ((kt(u, 4, 2) || kt(u, 4, 3)) && (kt(w, 4, 2) || kt(w, 4, 3)))
    };
    oriented(a, b) || oriented(b, a)
}

/// Planar rules R1 to R10 on a plane embedding.
pub fn apply_rules_girth7(emb: &Embedding, delta_cap: usize) -> Result<ChargeLedger> {
    let g = emb.graph();
    if g.max_degree() > delta_cap {
        return Err(Error::Hypothesis(format!(
            "maximum degree {} exceeds the cap {delta_cap}",
            g.max_degree()
        )));
    }
    let vertex_initial = g
        .vertices()
        .map(|v| r(5 * g.degree(v) as i64, 2) - 7)
        .collect();
    let face_initial = emb
        .faces()
        .iter()
        .map(|f| Rational::from_integer(f.degree() as i64 - 7))
        .collect();
    let mut ledger = ChargeLedger::new(vertex_initial, face_initial);
    let vx = Element::Vertex;
    let deg = |x: VertexId| g.degree(x);

    for v in g.vertices() {
        match deg(v) {
            1 => {
                let u = g.neighbors(v)[0];
                let f = emb.face_of_dart(v, u).expect("dart of an edge");
                ledger.send(Element::Face(f), vx(v), r(2, 1), "R1");
                ledger.send(vx(u), vx(v), r(5, 2), "R2");
            }
            4 => {
                let (amount, rule) = match g.weak_neighbors(v) {
                    1 => (r(3, 1), "R3"),
                    2 => (r(3, 2), "R4"),
                    3 => (r(1, 1), "R5"),
                    _ => continue,
                };
                for &u in g.neighbors(v) {
                    if deg(u) == 2 {
                        ledger.send(vx(v), vx(u), amount, rule);
                    }
                }
            }
            _ => {}
        }
    }

    for v in g.vertices().filter(|&v| deg(v) == 2) {
        let (a, b) = (g.neighbors(v)[0], g.neighbors(v)[1]);
        for (u, w) in [(a, b), (b, a)] {
            if deg(u) >= 5 {
                if deg(w) == 2 {
                    ledger.send(vx(u), vx(v), r(2, 1), "R6");
                } else if g.is_kt(w, 3, 1) {
                    ledger.send(vx(u), vx(v), r(3, 2), "R8");
                    ledger.send(vx(w), vx(v), r(1, 2), "R8");
                } else if g.is_kt(w, 3, 2) {
                    ledger.send(vx(u), vx(v), r(2, 1), "R9");
                } else if deg(w) >= 4 {
                    ledger.send(vx(u), vx(v), r(1, 1), "R10");
                }
            } else if g.is_kt(u, 4, 2) && g.is_kt(w, 3, 1) {
                ledger.send(vx(w), vx(v), r(1, 2), "R7");
            }
        }
        if !covered_pair(g, a, b) {
            let mut labels = [class_label(g, a), class_label(g, b)];
            labels.sort();
            ledger.uncovered.push(UncoveredCase {
                vertex: v,
                profile: format!("{{{}, {}}}", labels[0], labels[1]),
            });
        }
    }
    Ok(ledger)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegativeElement {
    pub element: Element,
    pub charge: Rational,
    /// Highest-priority configuration meeting the element's closed
    /// neighborhood (its boundary vertices and their neighbors, for a face).
    pub plan: Option<ClaimTag>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub pipeline: Pipeline,
    pub ledger: ChargeLedger,
    pub negative: Vec<NegativeElement>,
    /// Uncovered 2-vertices with the configuration that rules them out, if any.
    pub uncovered: Vec<(UncoveredCase, Option<ClaimTag>)>,
    /// What the detector returns on the whole graph.
    pub detected: Option<ClaimTag>,
    /// Value of the Euler charge identity, when the embedding is connected.
    pub identity: Option<Rational>,
    /// Hypotheses the input does not meet.
    pub notes: Vec<String>,
}

fn closed_neighborhood(g: &Graph, seeds: &[VertexId]) -> Vec<bool> {
    let mut mark = vec![false; g.vertex_count()];
    for &s in seeds {
        mark[s] = true;
        for &u in g.neighbors(s) {
            mark[u] = true;
        }
    }
    mark
}

fn touching(g: &Graph, plans: &[ReductionPlan], seeds: &[VertexId]) -> Option<ClaimTag> {
    let mark = closed_neighborhood(g, seeds);
    plans
        .iter()
        .find(|p| p.involved.iter().any(|&x| mark[x]))
        .map(|p| p.claim)
}

/// Runs one rule set and cross-references every negative element and every
/// uncovered 2-vertex with the configurations present in `g`.
pub fn audit(
    g: &Graph,
    emb: Option<&Embedding>,
    which: Pipeline,
    delta_cap: Option<usize>,
) -> Result<AuditReport> {
    let mut notes = Vec::new();
    let (ledger, plans, identity) = match which {
        Pipeline::Mad3 => {
            if g.max_degree() > 4 {
                notes.push(format!("maximum degree {} exceeds 4", g.max_degree()));
            }
            if g.vertex_count() > 0 {
                let m = mad(g)?.density;
                if m >= r(3, 1) {
                    notes.push(format!("mad = {m} is not below 3"));
                }
            }
            (apply_rules_mad(g), enumerate_mad(g), None)
        }
        Pipeline::Girth7 => {
            let emb = emb.ok_or_else(|| {
                Error::Hypothesis("the girth-7 audit needs a rotation system".into())
            })?;
            if emb.graph() != g {
                return Err(Error::Hypothesis(
                    "embedding belongs to a different graph".into(),
                ));
            }
            let cap = delta_cap.unwrap_or(g.max_degree().max(4));
            if let Girth::Finite(k) = g.girth() {
                if k < 7 {
                    notes.push(format!("girth {k} < 7"));
                }
            }
            let identity = match euler_charge_identity(emb) {
                Ok(x) => Some(x),
                Err(Error::Disconnected(c)) => {
                    notes.push(format!("{c} components; identity not evaluated"));
                    None
                }
                Err(e) => return Err(e),
            };
            let plans = enumerate_girth7(g, cap)?;
            (apply_rules_girth7(emb, cap)?, plans, identity)
        }
    };
    let negative = ledger
        .negative()
        .into_iter()
        .map(|(element, charge)| {
            let seeds = match element {
                Element::Vertex(v) => vec![v],
                Element::Face(i) => emb.expect("faces need an embedding").faces()[i].vertices(),
            };
            NegativeElement {
                element,
                charge,
                plan: touching(g, &plans, &seeds),
            }
        })
        .collect();
    let uncovered = ledger
        .uncovered
        .iter()
        .map(|u| (u.clone(), touching(g, &plans, &[u.vertex])))
        .collect();
    Ok(AuditReport {
        pipeline: which,
        negative,
        uncovered,
        detected: plans.first().map(|p| p.claim),
        identity,
        notes,
        ledger,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{adjacency_rotation, cube_rotation, trace_faces};
    use crate::graph::named::*;
    use num_traits::Zero;

    fn plane(g: &Graph) -> Embedding {
        trace_faces(g, adjacency_rotation(g)).unwrap()
    }

    /// Spider: center 0 with legs of the given lengths.
    fn spider(legs: &[usize]) -> Graph {
        let mut pairs = Vec::new();
        let mut next = 1;
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                pairs.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Graph::from_edges(&pairs).unwrap()
    }

    #[test]
    fn identity_examples() {
        assert_eq!(euler_charge_identity(&plane(&cycle(7))).unwrap(), r(-14, 1));
        assert_eq!(euler_charge_identity(&plane(&path(2))).unwrap(), r(-14, 1));
        assert_eq!(euler_charge_identity(&plane(&star(5))).unwrap(), r(-14, 1));
        let two = Graph::from_edges(&[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            euler_charge_identity(&plane(&two)),
            Err(Error::Disconnected(2))
        );
    }

    #[test]
    fn mad_rules_four_one() {
        // Center 0 is a 4₁-vertex: one leg of length 2, three of length 1.
        let g = spider(&[2, 1, 1, 1]);
        let l = apply_rules_mad(&g);
        assert!(g.is_kt(0, 4, 1));
        assert_eq!(l.vertex_final[0], r(0, 1));
        assert_eq!(l.vertex_final[1], r(0, 1));
        assert!(l.is_conserved());
    }

    #[test]
    fn mad_rules_between_two_four_twos() {
        // Two 4₂-vertices 0 and 1 joined through the 2-vertex 2.
        let pairs = [
            (0, 2), (2, 1),
            (0, 3), (3, 4), (0, 5), (0, 6),
            (1, 7), (7, 8), (1, 9), (1, 10),
        ];
        let g = Graph::from_edges(&pairs).unwrap();
        assert!(g.is_kt(0, 4, 2) && g.is_kt(1, 4, 2));
        let l = apply_rules_mad(&g);
        assert_eq!(l.vertex_final[2], r(0, 1));
        assert_eq!(l.vertex_final[0], r(0, 1));
    }

    #[test]
    fn mad_rules_three_vertices_stay_zero() {
        let l = apply_rules_mad(&petersen());
        assert!(l.vertex_final.iter().all(|c| c.is_zero()));
        assert!(l.transfers.is_empty());
    }

    #[test]
    fn planar_three_zero_vertex() {
        let emb = trace_faces(&cube(), cube_rotation()).unwrap();
        let l = apply_rules_girth7(&emb, 4).unwrap();
        assert!(l.vertex_final.iter().all(|&c| c == r(1, 2)));
        assert_eq!(l.total_final(), r(-14, 1));
    }

    #[test]
    fn planar_face_with_pendant() {
        // C₇ with one pendant edge drawn in the outer face.
        let mut pairs: Vec<_> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        pairs.push((0, 7));
        let g = Graph::from_edges(&pairs).unwrap();
        let emb = plane(&g);
        let l = apply_rules_girth7(&emb, 4).unwrap();
        let f = emb.face_of_dart(7, 0).unwrap();
        assert_eq!(emb.faces()[f].degree(), 9);
        assert_eq!(l.face_final[f], r(0, 1));
        // 5/2 - 7 + 2 + 5/2
        assert_eq!(l.vertex_final[7], r(0, 1));
        assert!(l.is_conserved());
    }

    #[test]
    fn planar_between_four_two_and_four_three() {
        // 4₂ at 0, 4₃ at 1, shared 2-vertex 2.
        let pairs = [
            (0, 2), (2, 1),
            (0, 3), (3, 4), (0, 5), (0, 6),
            (1, 7), (7, 8), (1, 9), (9, 10), (1, 11),
        ];
        let g = Graph::from_edges(&pairs).unwrap();
        assert!(g.is_kt(0, 4, 2) && g.is_kt(1, 4, 3));
        let l = apply_rules_girth7(&plane(&g), 4).unwrap();
        assert_eq!(l.vertex_final[2], r(1, 2));
        assert!(l.is_conserved());
    }

    #[test]
    fn big_vertex_rules() {
        // 5-vertex 0 with two 2-neighbors leading to a 2-vertex and to a
        // 4-vertex, plus three pendant neighbors.
        let pairs = [
            (0, 1), (1, 2), (2, 3),
            (0, 4), (4, 5), (5, 6), (5, 7), (5, 8),
            (0, 9), (0, 10), (0, 11),
        ];
        let g = Graph::from_edges(&pairs).unwrap();
        let l = apply_rules_girth7(&plane(&g), 5).unwrap();
        let rules_into = |v| {
            let mut out: Vec<_> = l.transfers.iter().filter(|t| t.to == Element::Vertex(v)).map(|t| t.rule).collect();
            out.sort();
            out
        };
        assert_eq!(rules_into(1), vec!["R6"]);
        assert_eq!(rules_into(4), vec!["R10", "R3"]);
        assert!(l.is_conserved());
        assert!(apply_rules_girth7(&plane(&g), 4).is_err());
    }

    #[test]
    fn uncovered_profiles_are_reported() {
        let l = apply_rules_girth7(&plane(&cycle(7)), 4).unwrap();
        assert_eq!(l.uncovered.len(), 7);
        assert_eq!(l.uncovered[0].profile, "{2, 2}");
    }

    #[test]
    fn audit_cycle_mad() {
        let rep = audit(&cycle(7), None, Pipeline::Mad3, None).unwrap();
        assert_eq!(rep.negative.len(), 7);
        assert!(rep.negative.iter().all(|n| n.charge == r(-1, 1) && n.plan.is_some()));
        assert_eq!(rep.detected, Some(ClaimTag::M2TwoWeakNeighbors));
        assert!(rep.notes.is_empty());
    }

    #[test]
    fn audit_pendant_mad() {
        let rep = audit(&path(4), None, Pipeline::Mad3, None).unwrap();
        let first = &rep.negative[0];
        assert_eq!(first.element, Element::Vertex(0));
        assert_eq!(first.charge, r(-2, 1));
        assert_eq!(first.plan, Some(ClaimTag::M1Pendant));
    }

    #[test]
    fn audit_cube_girth7_notes_girth() {
        let emb = trace_faces(&cube(), cube_rotation()).unwrap();
        let rep = audit(&cube(), Some(&emb), Pipeline::Girth7, None).unwrap();
        assert_eq!(rep.notes, vec!["girth 4 < 7".to_string()]);
        assert_eq!(rep.identity, Some(r(-14, 1)));
        assert_eq!(rep.ledger.total_final(), r(-14, 1));
        assert_eq!(rep.negative.len(), 6);
    }

    #[test]
    fn audit_girth7_needs_embedding() {
        assert!(audit(&cycle(7), None, Pipeline::Girth7, None).is_err());
        let rep = audit(&cycle(7), Some(&plane(&cycle(7))), Pipeline::Girth7, Some(4)).unwrap();
        assert!(rep.uncovered.iter().all(|(_, p)| p.is_some()));
    }
}
