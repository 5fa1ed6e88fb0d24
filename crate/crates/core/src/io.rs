//! Line-oriented text formats.
//!
//! Instance files hold one record per line; `#` starts a comment.
//!
//! ```text
//! v 7                 # vertex count, before any e/r/l record
//! p planar            # optional properties
//! p delta 2
//! p cap 4
//! e 0 1               # edges, numbered in order of appearance
//! r 0 : 1 6           # cyclic neighbor order at a vertex
//! l 0 1 : 3 5 9       # color list of an edge
//! ```
//!
//! Coloring files hold `c U V COLOR` records.

use std::fmt::Write as _;

use crate::coloring::{Color, ColorLists, PartialColoring};
use crate::embedding::{trace_faces, Embedding};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub embedding: Option<Embedding>,
    pub lists: Option<ColorLists>,
    pub planar: bool,
    /// Declared maximum degree; always equal to the computed one.
    pub delta: Option<usize>,
    pub delta_cap: Option<usize>,
}

impl Instance {
    pub fn new(graph: Graph) -> Self {
        Instance {
            graph,
            embedding: None,
            lists: None,
            planar: false,
            delta: None,
            delta_cap: None,
        }
    }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
    /// Column just past the last character, for "missing token" errors.
    end: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (j, ch) in body.char_indices().chain(std::iter::once((body.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(j),
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &body[s..j],
                        column: body[..s].chars().count() + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        (!tokens.is_empty()).then(|| Line {
            number: i + 1,
            tokens,
            end: body.trim_end().chars().count() + 1,
        })
    })
}

impl Line<'_> {
    fn token(&self, i: usize, what: &str) -> Result<&Token<'_>> {
        self.tokens
            .get(i)
            .ok_or_else(|| err(self.number, self.end, format!("missing {what}")))
    }

    fn number(&self, i: usize, what: &str) -> Result<usize> {
        let t = self.token(i, what)?;
        t.text.parse().map_err(|_| {
            err(self.number, t.column, format!("expected {what}, found '{}'", t.text))
        })
    }

    fn vertex(&self, i: usize, n: usize) -> Result<VertexId> {
        let v = self.number(i, "vertex id")?;
        if v >= n {
            return Err(err(
                self.number,
                self.tokens[i].column,
                format!("vertex {v} out of range (v {n})"),
            ));
        }
        Ok(v)
    }

    fn color(&self, i: usize) -> Result<Color> {
        let t = self.token(i, "color")?;
        t.text.parse().map_err(|_| {
            err(self.number, t.column, format!("expected color, found '{}'", t.text))
        })
    }

    fn expect_len(&self, n: usize) -> Result<()> {
        match self.tokens.get(n) {
            Some(t) => Err(err(self.number, t.column, format!("unexpected '{}'", t.text))),
            None => Ok(()),
        }
    }

    fn colon(&self, i: usize) -> Result<()> {
        let t = self.token(i, "':'")?;
        if t.text != ":" {
            return Err(err(self.number, t.column, format!("expected ':', found '{}'", t.text)));
        }
        Ok(())
    }

    /// Numbers after the `:` at position `i`.
    fn tail<T>(&self, i: usize, item: impl Fn(&Self, usize) -> Result<T>) -> Result<Vec<T>> {
        self.colon(i)?;
        (i + 1..self.tokens.len()).map(|j| item(self, j)).collect()
    }
}

/// `l U V : C...` records against `g`, one list per edge at most.
fn parse_list_line(
    line: &Line<'_>,
    g: &Graph,
    lists: &mut [Option<Vec<Color>>],
) -> Result<()> {
    let n = g.vertex_count();
    let (u, v) = (line.vertex(1, n)?, line.vertex(2, n)?);
    let e = g
        .edge_between(u, v)
        .ok_or_else(|| err(line.number, line.tokens[1].column, format!("list for unknown edge {u} {v}")))?;
    if lists[e].is_some() {
        return Err(err(line.number, 1, format!("second list for edge {u} {v}")));
    }
    lists[e] = Some(line.tail(3, |l, j| l.color(j))?);
    Ok(())
}

/// Reads an instance file. A rotation block is traced into an embedding
/// and checked with Euler's formula.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut n: Option<usize> = None;
    let mut planar = false;
    let mut delta = None;
    let mut cap = None;
    let mut pairs = Vec::new();
    let mut deferred = Vec::new();
    let all: Vec<Line<'_>> = lines(text).collect();
    for line in &all {
        let kind = line.tokens[0].text;
        if kind != "v" && kind != "p" && n.is_none() {
            return Err(err(line.number, line.tokens[0].column, "vertex count 'v N' must come first"));
        }
        match kind {
            "v" => {
                if n.is_some() {
                    return Err(err(line.number, 1, "vertex count given twice"));
                }
                n = Some(line.number(1, "vertex count")?);
                line.expect_len(2)?;
            }
            "p" => {
                let t = line.token(1, "property")?;
                match t.text {
                    "planar" => {
                        planar = true;
                        line.expect_len(2)?;
                    }
                    "delta" => {
                        delta = Some((line.number(2, "maximum degree")?, line.number));
                        line.expect_len(3)?;
                    }
                    "cap" => {
                        cap = Some((line.number(2, "degree cap")?, line.number));
                        line.expect_len(3)?;
                    }
                    other => {
                        return Err(err(line.number, t.column, format!("unknown property '{other}'")))
                    }
                }
            }
            "e" => {
                let n = n.unwrap();
                let (u, v) = (line.vertex(1, n)?, line.vertex(2, n)?);
                line.expect_len(3)?;
                if u == v {
                    return Err(err(line.number, line.tokens[2].column, format!("self-loop at vertex {u}")));
                }
                pairs.push((u, v));
            }
            "r" | "l" => deferred.push(line),
            other => {
                return Err(err(line.number, line.tokens[0].column, format!("unknown record '{other}'")));
            }
        }
    }
    let n = n.ok_or_else(|| err(1, 1, "missing vertex count 'v N'"))?;
    let graph = Graph::with_vertices(n, &pairs)?;
    let max_degree = graph.max_degree();
    if let Some((d, at)) = delta {
        if d != max_degree {
            return Err(err(at, 3, format!("declared maximum degree {d}, computed {max_degree}")));
        }
    }
    if let Some((c, at)) = cap {
        if c < max_degree {
            return Err(err(at, 3, format!("degree cap {c} is below the maximum degree {max_degree}")));
        }
    }

    let mut rotation: Vec<Option<Vec<VertexId>>> = vec![None; n];
    let mut lists: Vec<Option<Vec<Color>>> = vec![None; graph.edge_count()];
    let (mut any_rotation, mut any_list) = (false, false);
    for line in deferred {
        if line.tokens[0].text == "r" {
            any_rotation = true;
            let u = line.vertex(1, n)?;
            if rotation[u].is_some() {
                return Err(err(line.number, line.tokens[1].column, format!("second rotation for vertex {u}")));
            }
            rotation[u] = Some(line.tail(2, |l, j| l.vertex(j, n))?);
        } else {
            any_list = true;
            parse_list_line(line, &graph, &mut lists)?;
        }
    }
    let embedding = if any_rotation {
        let mut full = Vec::with_capacity(n);
        for (v, r) in rotation.into_iter().enumerate() {
            match r {
                Some(r) => full.push(r),
                None if graph.degree(v) == 0 => full.push(Vec::new()),
                None => return Err(Error::Rotation(format!("no rotation given for vertex {v}"))),
            }
        }
        Some(trace_faces(&graph, full)?)
    } else {
        None
    };
    let lists = any_list.then(|| ColorLists::new(lists.into_iter().map(Option::unwrap_or_default).collect()));
    Ok(Instance {
        graph,
        embedding,
        lists,
        planar,
        delta: delta.map(|d| d.0),
        delta_cap: cap.map(|c| c.0),
    })
}

/// Reads a file of `l` records for the edges of `g`. Edges without a
/// record get an empty list.
pub fn parse_lists(text: &str, g: &Graph) -> Result<ColorLists> {
    let mut lists = vec![None; g.edge_count()];
    for line in lines(text) {
        if line.tokens[0].text != "l" {
            return Err(err(line.number, 1, format!("expected 'l' record, found '{}'", line.tokens[0].text)));
        }
        parse_list_line(&line, g, &mut lists)?;
    }
    Ok(ColorLists::new(lists.into_iter().map(Option::unwrap_or_default).collect()))
}

/// Reads `c U V COLOR` records for the edges of `g`.
pub fn parse_coloring(text: &str, g: &Graph) -> Result<PartialColoring> {
    let n = g.vertex_count();
    let mut out = PartialColoring::new(g.edge_count());
    for line in lines(text) {
        if line.tokens[0].text != "c" {
            return Err(err(line.number, 1, format!("expected 'c' record, found '{}'", line.tokens[0].text)));
        }
        let (u, v) = (line.vertex(1, n)?, line.vertex(2, n)?);
        let color = line.color(3)?;
        line.expect_len(4)?;
        let e = g
            .edge_between(u, v)
            .ok_or_else(|| err(line.number, line.tokens[1].column, format!("no edge {u} {v}")))?;
        if out.get(e).is_some() {
            return Err(err(line.number, 1, format!("edge {u} {v} colored twice")));
        }
        out.set(e, color);
    }
    Ok(out)
}

fn push_list(out: &mut String, prefix: &str, items: impl IntoIterator<Item = impl std::fmt::Display>) {
    out.push_str(prefix);
    out.push_str(" :");
    for x in items {
        let _ = write!(out, " {x}");
    }
    out.push('\n');
}

/// Canonical text of an instance; `parse_instance` reads it back unchanged.
pub fn serialize_instance(inst: &Instance) -> String {
    let g = &inst.graph;
    let mut out = format!("v {}\n", g.vertex_count());
    if inst.planar {
        out.push_str("p planar\n");
    }
    if let Some(d) = inst.delta {
        let _ = writeln!(out, "p delta {d}");
    }
    if let Some(c) = inst.delta_cap {
        let _ = writeln!(out, "p cap {c}");
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    if let Some(emb) = &inst.embedding {
        for (v, r) in emb.rotation().iter().enumerate() {
            if !r.is_empty() {
                push_list(&mut out, &format!("r {v}"), r);
            }
        }
    }
    if let Some(lists) = &inst.lists {
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            push_list(&mut out, &format!("l {u} {v}"), lists.get(e));
        }
    }
    out
}

pub fn serialize_coloring(g: &Graph, c: &PartialColoring) -> String {
    let mut out = String::new();
    for (e, color) in c.iter() {
        let (u, v) = g.endpoints(e);
        let _ = writeln!(out, "c {u} {v} {color}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    const C7: &str = "v 7\np planar\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 0 6\n\
        r 0 : 1 6\nr 1 : 0 2\nr 2 : 1 3\nr 3 : 2 4\nr 4 : 3 5\nr 5 : 4 6\nr 6 : 5 0\n";

    fn parse_error(text: &str) -> (usize, usize) {
        match parse_instance(text) {
            Err(Error::Parse { line, column, .. }) => (line, column),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn path_of_three() {
        let inst = parse_instance("v 3\ne 0 1\ne 1 2").unwrap();
        assert_eq!(inst.graph, path(3));
        assert!(inst.embedding.is_none() && inst.lists.is_none());
    }

    #[test]
    fn cycle_with_rotation() {
        let inst = parse_instance(C7).unwrap();
        assert_eq!(inst.embedding.as_ref().unwrap().faces().len(), 2);
        assert!(inst.planar);
        assert_eq!(serialize_instance(&inst), C7);
    }

    #[test]
    fn list_line() {
        let inst = parse_instance("v 2\ne 0 1\nl 0 1 : 3 5 9 # three colors").unwrap();
        assert_eq!(inst.lists.unwrap().get(0), &[3, 5, 9]);
    }

    #[test]
    fn round_trip_with_everything() {
        let text = "v 4\np delta 2\np cap 4\ne 0 1\ne 1 2\ne 2 3\nr 0 : 1\nr 1 : 0 2\nr 2 : 1 3\nr 3 : 2\n\
            l 0 1 : 1 2\nl 1 2 :\nl 2 3 : 7\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(serialize_instance(&inst), text);
        assert_eq!(parse_instance(&serialize_instance(&inst)).unwrap(), inst);
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_error("v 3\ne 0 x"), (2, 5));
        assert_eq!(parse_error("v 3\ne 0 3"), (2, 5));
        assert_eq!(parse_error("e 0 1"), (1, 1));
        assert_eq!(parse_error("v 3\ne 1 1"), (2, 5));
        assert_eq!(parse_error("v 3\n\n  q 1"), (3, 3));
        assert_eq!(parse_error("v 3\ne 0"), (2, 4));
        assert_eq!(parse_error("v 2\ne 0 1\nl 0 1 3"), (3, 7));
        assert_eq!(parse_error("v 3\ne 0 1\nl 1 2 : 4"), (3, 3));
        assert_eq!(parse_error("v 3\np delta 1\ne 0 1\ne 1 2"), (2, 3));
        assert_eq!(parse_error(""), (1, 1));
    }

    #[test]
    fn rotation_problems() {
        let missing = "v 3\ne 0 1\ne 1 2\nr 0 : 1\nr 1 : 0 2";
        assert!(matches!(parse_instance(missing), Err(Error::Rotation(_))));
        let wrong = "v 3\ne 0 1\ne 1 2\nr 0 : 1\nr 1 : 0\nr 2 : 1";
        assert!(matches!(parse_instance(wrong), Err(Error::Rotation(_))));
        let mut k5 = String::from("v 5\n");
        for u in 0..5 {
            for v in u + 1..5 {
                k5 += &format!("e {u} {v}\n");
            }
        }
        for u in 0..5 {
            let others: Vec<String> = (0..5).filter(|&v| v != u).map(|v| v.to_string()).collect();
            k5 += &format!("r {u} : {}\n", others.join(" "));
        }
        assert!(matches!(parse_instance(&k5), Err(Error::NotPlanar { .. })));
    }

    #[test]
    fn colorings() {
        let g = path(3);
        let c = parse_coloring("c 0 1 4\nc 2 1 5\n", &g).unwrap();
        assert_eq!(c.get(0), Some(4));
        assert_eq!(c.get(1), Some(5));
        assert_eq!(serialize_coloring(&g, &c), "c 0 1 4\nc 1 2 5\n");
        assert!(parse_coloring("c 0 2 1", &g).is_err());
        assert!(parse_coloring("c 0 1 1\nc 1 0 2", &g).is_err());
    }

    #[test]
    fn list_files() {
        let g = path(3);
        let l = parse_lists("# lists\nl 0 1 : 1 2\n", &g).unwrap();
        assert_eq!(l.get(0), &[1, 2]);
        assert!(l.get(1).is_empty());
        assert!(parse_lists("e 0 1", &g).is_err());
    }
}
