//! Rotation systems and face tracing.
//!
//! A rotation lists, for every vertex, its neighbors in cyclic order. Faces
//! are traced with the usual next-dart rule: after the dart `(u, v)` comes
//! `(v, w)` where `w` follows `u` in the rotation at `v`. A pendant edge is
//! walked in both directions by the same face, so it adds 2 to that face's
//! degree. Each isolated vertex gets an empty face of its own, which keeps
//! `V - E + F = 2` true for every component of a plane embedding.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    /// The closed walk as darts `(tail, head)`; empty for the face of an
    /// isolated vertex.
    pub darts: Vec<(VertexId, VertexId)>,
    /// Set only for the face of an isolated vertex.
    pub isolated: Option<VertexId>,
}

impl Face {
    /// Number of dart incidences along the walk.
    pub fn degree(&self) -> usize {
        self.darts.len()
    }

    /// Distinct vertices on the boundary, sorted.
    pub fn vertices(&self) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = self.darts.iter().map(|&(u, _)| u).collect();
        out.extend(self.isolated);
        out.sort_unstable();
        out.dedup();
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    graph: Graph,
    rotation: Vec<Vec<VertexId>>,
    faces: Vec<Face>,
    /// Face index of each dart, keyed by `(tail, position of head in tail's rotation)`.
    dart_face: Vec<Vec<usize>>,
}

impl Embedding {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self) -> &[Vec<VertexId>] {
        &self.rotation
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// The face on which the dart `(u, v)` lies.
    pub fn face_of_dart(&self, u: VertexId, v: VertexId) -> Option<usize> {
        let i = self.rotation.get(u)?.iter().position(|&x| x == v)?;
        Some(self.dart_face[u][i])
    }
}

fn validate(g: &Graph, rotation: &[Vec<VertexId>]) -> Result<()> {
    if rotation.len() != g.vertex_count() {
        return Err(Error::Rotation(format!(
            "rotation covers {} vertices, graph has {}",
            rotation.len(),
            g.vertex_count()
        )));
    }
    for v in g.vertices() {
        let mut got = rotation[v].clone();
        got.sort_unstable();
        let mut want = g.neighbors(v).to_vec();
        want.sort_unstable();
        if got != want {
            return Err(Error::Rotation(format!(
                "rotation at {v} is {:?}, neighbors are {:?}",
                rotation[v], want
            )));
        }
    }
    Ok(())
}

/// Traces the faces of `rotation` and checks Euler's formula on every
/// component.
pub fn trace_faces(g: &Graph, rotation: Vec<Vec<VertexId>>) -> Result<Embedding> {
    validate(g, &rotation)?;
    let n = g.vertex_count();
    let pos = |v: VertexId, u: VertexId| -> usize {
        rotation[v].iter().position(|&x| x == u).expect("validated rotation")
    };
    let mut dart_face: Vec<Vec<usize>> = rotation.iter().map(|r| vec![usize::MAX; r.len()]).collect();
    let mut faces = Vec::new();
    for u in 0..n {
        for i in 0..rotation[u].len() {
            if dart_face[u][i] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut darts = Vec::new();
            let (mut a, mut ai) = (u, i);
            while dart_face[a][ai] == usize::MAX {
                dart_face[a][ai] = id;
                let b = rotation[a][ai];
                darts.push((a, b));
                let bi = (pos(b, a) + 1) % rotation[b].len();
                (a, ai) = (b, bi);
            }
            faces.push(Face {
                darts,
                isolated: None,
            });
        }
    }
    for v in g.vertices().filter(|&v| g.degree(v) == 0) {
        faces.push(Face {
            darts: Vec::new(),
            isolated: Some(v),
        });
    }

    let mut comp_of = vec![0; n];
    let comps = g.components();
    for (c, members) in comps.iter().enumerate() {
        for &v in members {
            comp_of[v] = c;
        }
    }
    let mut euler: Vec<i64> = comps.iter().map(|m| m.len() as i64).collect();
    for &(a, _) in g.edges() {
        euler[comp_of[a]] -= 1;
    }
    for f in &faces {
        let v = f.darts.first().map(|&(u, _)| u).or(f.isolated).unwrap();
        euler[comp_of[v]] += 1;
    }
    if let Some(&bad) = euler.iter().find(|&&x| x != 2) {
        return Err(Error::NotPlanar { euler: bad });
    }
    Ok(Embedding {
        graph: g.clone(),
        rotation,
        faces,
        dart_face,
    })
}

/// Rotation that keeps each vertex's neighbors in adjacency order. Plane
/// for forests and cycles, arbitrary otherwise.
pub fn adjacency_rotation(g: &Graph) -> Vec<Vec<VertexId>> {
    g.vertices().map(|v| g.neighbors(v).to_vec()).collect()
}

/// Plane rotation of [`crate::graph::named::cube`]: outer square 0-1-3-2
/// around inner square 4-5-7-6, neighbors counterclockwise.
pub fn cube_rotation() -> Vec<Vec<VertexId>> {
    vec![
        vec![1, 4, 2],
        vec![3, 5, 0],
        vec![0, 6, 3],
        vec![7, 1, 2],
        vec![0, 5, 6],
        vec![1, 7, 4],
        vec![4, 7, 2],
        vec![5, 3, 6],
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn c7_has_two_faces_of_degree_seven() {
        let g = cycle(7);
        let emb = trace_faces(&g, adjacency_rotation(&g)).unwrap();
        assert_eq!(emb.faces().len(), 2);
        assert!(emb.faces().iter().all(|f| f.degree() == 7));
    }

    #[test]
    fn cube_has_six_square_faces() {
        let emb = trace_faces(&cube(), cube_rotation()).unwrap();
        assert_eq!(emb.faces().len(), 6);
        assert!(emb.faces().iter().all(|f| f.degree() == 4));
    }

    #[test]
    fn k5_is_never_planar() {
        let g = complete(5);
        let err = trace_faces(&g, adjacency_rotation(&g)).unwrap_err();
        assert!(matches!(err, Error::NotPlanar { .. }));
        assert!(err.to_string().contains("genus > 0"));
    }

    #[test]
    fn single_edge_face_walks_twice() {
        let g = path(2);
        let emb = trace_faces(&g, adjacency_rotation(&g)).unwrap();
        assert_eq!(emb.faces().len(), 1);
        assert_eq!(emb.faces()[0].degree(), 2);
    }

    #[test]
    fn tree_faces() {
        let g = star(4);
        let emb = trace_faces(&g, adjacency_rotation(&g)).unwrap();
        assert_eq!(emb.faces().len(), 1);
        assert_eq!(emb.faces()[0].degree(), 8);
        assert_eq!(emb.face_of_dart(1, 0), Some(0));
    }

    #[test]
    fn malformed_rotation_rejected() {
        let g = path(3);
        let err = trace_faces(&g, vec![vec![1], vec![0], vec![1]]).unwrap_err();
        assert!(matches!(err, Error::Rotation(_)));
        let err = trace_faces(&g, vec![vec![1], vec![0, 2]]).unwrap_err();
        assert!(matches!(err, Error::Rotation(_)));
    }

    #[test]
    fn isolated_vertices_get_a_face() {
        let g = Graph::with_vertices(3, &[(0, 1)]).unwrap();
        let emb = trace_faces(&g, adjacency_rotation(&g)).unwrap();
        assert_eq!(emb.faces().len(), 2);
        assert_eq!(emb.faces()[1].isolated, Some(2));
    }
}
