//! Python bindings for the `strongcolor` crate.

use std::collections::BTreeMap;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use strongcolor::coloring::{self, ColorLists, PartialColoring};
use strongcolor::conflict::edges_within_distance_two;
use strongcolor::density::{self, Rational};
use strongcolor::discharge::{self, class_label};
use strongcolor::error::Error;
use strongcolor::generate::{generate as build, random_lists, Family, GenSpec};
use strongcolor::graph::{named, Girth};
use strongcolor::io;
use strongcolor::oracle::{self, Budget};
use strongcolor::solver::{self, Pipeline, SolveOptions};

fn py_err(e: Error) -> PyErr {
    if e.is_alarm() {
        PyRuntimeError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn fraction<'py>(py: Python<'py>, q: Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((*q.numer(), *q.denom()))
}

fn pipeline(name: &str) -> PyResult<Pipeline> {
    match name {
        "mad3" => Ok(Pipeline::Mad3),
        "girth7" => Ok(Pipeline::Girth7),
        _ => Err(PyValueError::new_err(format!("unknown pipeline {name:?}, expected mad3 or girth7"))),
    }
}

fn color_lists(g: &strongcolor::graph::Graph, lists: Option<Vec<Vec<u32>>>, size: usize) -> PyResult<ColorLists> {
    match lists {
        None => Ok(ColorLists::uniform(g.edge_count(), size)),
        Some(l) if l.len() == g.edge_count() => Ok(ColorLists::new(l)),
        Some(l) => Err(PyValueError::new_err(format!("{} lists for {} edges", l.len(), g.edge_count()))),
    }
}

fn colors(c: &PartialColoring) -> Vec<Option<u32>> {
    c.as_slice().to_vec()
}

/// A simple undirected graph with edges numbered in insertion order.
#[pyclass(module = "strongcolor", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct Graph {
    inner: strongcolor::graph::Graph,
}

#[pymethods]
impl Graph {
    #[new]
    #[pyo3(signature = (n, edges))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = strongcolor::graph::Graph::with_vertices(n, &edges).map_err(py_err)?;
        Ok(Graph { inner })
    }

    #[staticmethod]
    fn path(n: usize) -> Self {
        Graph { inner: named::path(n) }
    }

    #[staticmethod]
    fn cycle(n: usize) -> Self {
        Graph { inner: named::cycle(n) }
    }

    #[staticmethod]
    fn complete(n: usize) -> Self {
        Graph { inner: named::complete(n) }
    }

    #[staticmethod]
    fn petersen() -> Self {
        Graph { inner: named::petersen() }
    }

    #[staticmethod]
    fn cube() -> Self {
        Graph { inner: named::cube() }
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    #[getter]
    fn max_degree(&self) -> usize {
        self.inner.max_degree()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        self.vertex(v)?;
        Ok(self.inner.degree(v))
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.vertex(v)?;
        Ok(self.inner.neighbors(v).to_vec())
    }

    /// Degree class label of `v`: "1", "2", "k_t" or "5+".
    fn class_label(&self, v: usize) -> PyResult<String> {
        self.vertex(v)?;
        Ok(class_label(&self.inner, v))
    }

    /// Length of a shortest cycle, or None for a forest.
    fn girth(&self) -> Option<usize> {
        match self.inner.girth() {
            Girth::Finite(k) => Some(k),
            Girth::Infinite => None,
        }
    }

    /// Edges in conflict with edge `e`.
    fn conflicts(&self, e: usize) -> PyResult<Vec<usize>> {
        edges_within_distance_two(&self.inner, e).map_err(py_err)
    }

    fn __len__(&self) -> usize {
        self.inner.vertex_count()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.vertex_count(), self.inner.edge_count())
    }
}

impl Graph {
    fn vertex(&self, v: usize) -> PyResult<()> {
        if self.inner.has_vertex(v) {
            Ok(())
        } else {
            Err(py_err(Error::UnknownVertex(v)))
        }
    }
}

/// Result of one solver run.
#[pyclass(module = "strongcolor", frozen, get_all)]
struct SolveReport {
    /// Color of each edge, indexed by edge id.
    coloring: Vec<Option<u32>>,
    pipeline: String,
    list_bound: usize,
    colors_used: usize,
    certified: bool,
    fallback: Option<String>,
    /// Number of reductions per configuration code.
    claims: BTreeMap<String, usize>,
    steps: usize,
    bound_violations: usize,
    max_depth: usize,
}

#[pymethods]
impl SolveReport {
    fn __repr__(&self) -> String {
        format!(
            "SolveReport(pipeline={}, list_bound={}, colors_used={}, certified={})",
            self.pipeline,
            self.list_bound,
            self.colors_used,
            if self.certified { "True" } else { "False" }
        )
    }
}

impl From<solver::SolveReport> for SolveReport {
    fn from(r: solver::SolveReport) -> Self {
        SolveReport {
            coloring: colors(&r.coloring),
            pipeline: r.pipeline.to_string(),
            list_bound: r.list_bound,
            colors_used: r.colors_used,
            certified: r.certified,
            fallback: r.fallback.clone(),
            claims: r.claims.iter().map(|(c, k)| (c.to_string(), *k)).collect(),
            steps: r.steps.len(),
            bound_violations: r.bound_violations(),
            max_depth: r.max_depth,
        }
    }
}

/// A parsed or generated instance.
#[pyclass(module = "strongcolor", frozen)]
struct Instance {
    inner: io::Instance,
}

#[pymethods]
impl Instance {
    #[getter]
    fn graph(&self) -> Graph {
        Graph {
            inner: self.inner.graph.clone(),
        }
    }

    #[getter]
    fn planar(&self) -> bool {
        self.inner.planar
    }

    #[getter]
    fn delta_cap(&self) -> Option<usize> {
        self.inner.delta_cap
    }

    #[getter]
    fn has_embedding(&self) -> bool {
        self.inner.embedding.is_some()
    }

    /// Face degrees of the embedding, if there is one.
    fn face_degrees(&self) -> Option<Vec<usize>> {
        self.inner
            .embedding
            .as_ref()
            .map(|emb| emb.faces().iter().map(|f| f.degree()).collect())
    }

    #[getter]
    fn lists(&self) -> Option<Vec<Vec<u32>>> {
        self.inner.lists.as_ref().map(|l| l.iter().map(|x| x.to_vec()).collect())
    }

    /// The instance in the text format.
    fn to_text(&self) -> String {
        io::serialize_instance(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "Instance(n={}, m={}, planar={})",
            self.inner.graph.vertex_count(),
            self.inner.graph.edge_count(),
            if self.inner.planar { "True" } else { "False" }
        )
    }
}

/// Parses an instance from its text form.
#[pyfunction]
fn parse_instance(text: &str) -> PyResult<Instance> {
    io::parse_instance(text).map(|inner| Instance { inner }).map_err(py_err)
}

/// Generates an instance of a named family.
#[pyfunction]
#[pyo3(signature = (family, n, delta, seed, list_size=None, pool=40))]
fn generate(family: &str, n: usize, delta: usize, seed: u64, list_size: Option<usize>, pool: u32) -> PyResult<Instance> {
    let family: Family = family.parse().map_err(py_err)?;
    let mut inner = build(&GenSpec::new(family, n, delta, seed)).map_err(py_err)?;
    if let Some(size) = list_size {
        inner.lists = Some(random_lists(inner.graph.edge_count(), size, pool, seed).map_err(py_err)?);
    }
    Ok(Instance { inner })
}

/// Exact maximum average degree as a Fraction, with a densest vertex set.
#[pyfunction]
fn mad<'py>(py: Python<'py>, g: &Graph) -> PyResult<(Bound<'py, PyAny>, Vec<usize>)> {
    let w = density::mad(&g.inner).map_err(py_err)?;
    Ok((fraction(py, w.density)?, w.vertices))
}

/// Colors a graph with mad < 3 and Δ ≤ 4; lists default to 3Δ + 1 colors.
#[pyfunction]
#[pyo3(signature = (g, lists=None))]
fn solve_mad3(g: &Graph, lists: Option<Vec<Vec<u32>>>) -> PyResult<SolveReport> {
    let lists = color_lists(&g.inner, lists, 3 * g.inner.max_degree() + 1)?;
    solver::solve_mad3(&g.inner, &lists).map(Into::into).map_err(py_err)
}

/// Colors a planar graph of girth ≥ 7 with Δ ≤ cap; lists default to 3·cap colors.
#[pyfunction]
#[pyo3(signature = (g, cap=4, lists=None))]
fn solve_girth7(g: &Graph, cap: usize, lists: Option<Vec<Vec<u32>>>) -> PyResult<SolveReport> {
    let lists = color_lists(&g.inner, lists, 3 * cap)?;
    solver::solve_girth7(&g.inner, &lists, cap, &SolveOptions::default())
        .map(Into::into)
        .map_err(py_err)
}

/// Violations of a strong coloring, as messages; empty when valid.
#[pyfunction]
#[pyo3(signature = (g, coloring, require_total=true))]
fn verify_strong(g: &Graph, coloring: Vec<Option<u32>>, require_total: bool) -> PyResult<Vec<String>> {
    if coloring.len() != g.inner.edge_count() {
        return Err(PyValueError::new_err(format!(
            "{} colors for {} edges",
            coloring.len(),
            g.inner.edge_count()
        )));
    }
    let c = PartialColoring::from_vec(coloring);
    Ok(coloring::verify_strong(&g.inner, &c, require_total)
        .iter()
        .map(|v| v.to_string())
        .collect())
}

fn budget(max_edges: Option<usize>, max_nodes: Option<u64>) -> Budget {
    let d = Budget::default();
    Budget {
        max_edges: max_edges.unwrap_or(d.max_edges),
        max_nodes: max_nodes.unwrap_or(d.max_nodes),
    }
}

/// Exact strong chromatic index with an optimal coloring.
#[pyfunction]
#[pyo3(signature = (g, max_edges=None, max_nodes=None))]
fn strong_chromatic_index(g: &Graph, max_edges: Option<usize>, max_nodes: Option<u64>) -> PyResult<(usize, Vec<Option<u32>>)> {
    let r = oracle::strong_chromatic_index_exact(&g.inner, &budget(max_edges, max_nodes)).map_err(py_err)?;
    Ok((r.chi_s, colors(&r.witness)))
}

/// A strong coloring from the given lists, or None if none exists.
#[pyfunction]
#[pyo3(signature = (g, lists, max_edges=None, max_nodes=None))]
fn list_strong_colorable(
    g: &Graph,
    lists: Vec<Vec<u32>>,
    max_edges: Option<usize>,
    max_nodes: Option<u64>,
) -> PyResult<Option<Vec<Option<u32>>>> {
    let lists = color_lists(&g.inner, Some(lists), 0)?;
    let r = oracle::list_strong_colorable(&g.inner, &lists, &budget(max_edges, max_nodes)).map_err(py_err)?;
    Ok(r.as_ref().map(colors))
}

/// Charge ledger of one rule set, as a dict.
#[pyfunction]
#[pyo3(signature = (instance, which="mad3", cap=None))]
fn audit<'py>(py: Python<'py>, instance: &Instance, which: &str, cap: Option<usize>) -> PyResult<Bound<'py, pyo3::types::PyDict>> {
    let inst = &instance.inner;
    let rep = discharge::audit(
        &inst.graph,
        inst.embedding.as_ref(),
        pipeline(which)?,
        cap.or(inst.delta_cap),
    )
    .map_err(py_err)?;
    let l = &rep.ledger;
    let fracs = |qs: &[Rational]| -> PyResult<Vec<Bound<'py, PyAny>>> { qs.iter().map(|&q| fraction(py, q)).collect() };
    let d = pyo3::types::PyDict::new(py);
    d.set_item("pipeline", rep.pipeline.to_string())?;
    d.set_item("vertex_initial", fracs(&l.vertex_initial)?)?;
    d.set_item("vertex_final", fracs(&l.vertex_final)?)?;
    d.set_item("face_initial", fracs(&l.face_initial)?)?;
    d.set_item("face_final", fracs(&l.face_final)?)?;
    let transfers: Vec<(String, String, String, Bound<'py, PyAny>)> = l
        .transfers
        .iter()
        .map(|t| Ok((t.rule.to_string(), t.from.to_string(), t.to.to_string(), fraction(py, t.amount)?)))
        .collect::<PyResult<_>>()?;
    d.set_item("transfers", transfers)?;
    let negative: Vec<(String, Bound<'py, PyAny>, Option<String>)> = rep
        .negative
        .iter()
        .map(|n| Ok((n.element.to_string(), fraction(py, n.charge)?, n.plan.map(|c| c.to_string()))))
        .collect::<PyResult<_>>()?;
    d.set_item("negative", negative)?;
    let uncovered: Vec<(usize, String, Option<String>)> = rep
        .uncovered
        .iter()
        .map(|(u, c)| (u.vertex, u.profile.clone(), c.map(|c| c.to_string())))
        .collect();
    d.set_item("uncovered", uncovered)?;
    d.set_item("detected", rep.detected.map(|c| c.to_string()))?;
    d.set_item("identity", rep.identity.map(|q| fraction(py, q)).transpose()?)?;
    d.set_item("total_initial", fraction(py, l.total_initial())?)?;
    d.set_item("total_final", fraction(py, l.total_final())?)?;
    d.set_item("conserved", l.is_conserved())?;
    d.set_item("notes", rep.notes.clone())?;
    Ok(d)
}

#[pymodule]
#[pyo3(name = "strongcolor")]
fn strongcolor_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_class::<Instance>()?;
    m.add_class::<SolveReport>()?;
    m.add_function(wrap_pyfunction!(parse_instance, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(mad, m)?)?;
    m.add_function(wrap_pyfunction!(solve_mad3, m)?)?;
    m.add_function(wrap_pyfunction!(solve_girth7, m)?)?;
    m.add_function(wrap_pyfunction!(verify_strong, m)?)?;
    m.add_function(wrap_pyfunction!(strong_chromatic_index, m)?)?;
    m.add_function(wrap_pyfunction!(list_strong_colorable, m)?)?;
    m.add_function(wrap_pyfunction!(audit, m)?)?;
    Ok(())
}
