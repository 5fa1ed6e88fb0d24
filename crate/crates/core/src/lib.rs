//! List strong edge coloring for sparse graphs and planar graphs of large
//! girth.
//!
//! The two constructive solvers in [`solver`] repeatedly find a reducible
//! configuration ([`reducer`]), delete a vertex, color the rest and extend
//! the coloring back with a bounded number of conflicts at every step.
//! [`oracle`] gives exact answers on small graphs, [`density`] computes the
//! maximum average degree exactly, and [`discharge`] replays the charge
//! arithmetic on concrete embedded graphs.

pub mod cli;
pub mod coloring;
pub mod conflict;
pub mod density;
pub mod discharge;
pub mod embedding;
pub mod error;
mod flow;
pub mod generate;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod reducer;
pub mod solver;
