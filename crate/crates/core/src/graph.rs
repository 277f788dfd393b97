//! Finite simple graphs on {1, ..., n}, n <= 64, with the pieces needed for
//! the cover-ideal view of codimension-two complexes: the cofacet graph
//! (edges are facet complements), minimal vertex covers (which generate the
//! cover ideal), and a sound-but-incomplete (S_2) screen based on induced
//! 4-cycles in the complement graph.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::complex::{Face, SimplicialComplex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex count {0} outside supported range 1..=64")]
    InvalidVertexCount(u32),
    #[error("vertex {v} outside 1..={n}")]
    VertexOutOfRange { v: u32, n: u32 },
    #[error("loop edge at vertex {0}")]
    LoopEdge(u32),
    #[error(
        "facet {facet} does not have cardinality {expected}; the complex is not codimension two"
    )]
    NotCodimensionTwo { facet: Face, expected: u32 },
}

/// Simple graph stored as adjacency bitmasks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: u32,
    adj: Vec<u64>,
}

impl Graph {
    pub fn new(n: u32) -> Result<Graph, GraphError> {
        if n == 0 || n > 64 {
            return Err(GraphError::InvalidVertexCount(n));
        }
        Ok(Graph { n, adj: vec![0; n as usize] })
    }

    pub fn from_edges<I: IntoIterator<Item = (u32, u32)>>(
        n: u32,
        edges: I,
    ) -> Result<Graph, GraphError> {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: u32, v: u32) -> Result<(), GraphError> {
        for w in [u, v] {
            if w == 0 || w > self.n {
                return Err(GraphError::VertexOutOfRange { v: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        self.adj[(u - 1) as usize] |= 1 << (v - 1);
        self.adj[(v - 1) as usize] |= 1 << (u - 1);
        Ok(())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        u >= 1
            && v >= 1
            && u <= self.n
            && v <= self.n
            && self.adj[(u - 1) as usize] >> (v - 1) & 1 == 1
    }

    /// Edges as (u, v) with u < v, lexicographically sorted.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            let mut higher = self.adj[(u - 1) as usize] >> u << u;
            while higher != 0 {
                let v = higher.trailing_zeros() + 1;
                higher &= higher - 1;
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let full = full_mask(self.n);
        let adj = (0..self.n as usize).map(|i| !self.adj[i] & full & !(1 << i)).collect();
        Graph { n: self.n, adj }
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    /// Isolated vertices form singleton components.
    pub fn connected_components(&self) -> Vec<u64> {
        let mut remaining = full_mask(self.n);
        let mut comps = Vec::new();
        while remaining != 0 {
            let mut comp = remaining & remaining.wrapping_neg();
            loop {
                let mut grown = comp;
                let mut cursor = comp;
                while cursor != 0 {
                    let i = cursor.trailing_zeros() as usize;
                    cursor &= cursor - 1;
                    grown |= self.adj[i];
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            comps.push(comp);
            remaining &= !comp;
        }
        comps
    }

    /// All inclusion-minimal vertex covers, lexicographically sorted. Found
    /// by branching on the first uncovered edge, then filtering to minimal
    /// sets. The edgeless graph has the empty cover.
    pub fn minimal_vertex_covers(&self) -> Vec<Face> {
        let edges = self.edges();
        let mut found: Vec<u64> = Vec::new();
        let mut pending: Vec<u64> = vec![0];
        while let Some(cover) = pending.pop() {
            match edges
                .iter()
                .find(|&&(u, v)| cover >> (u - 1) & 1 == 0 && cover >> (v - 1) & 1 == 0)
            {
                None => found.push(cover),
                Some(&(u, v)) => {
                    pending.push(cover | 1 << (v - 1));
                    pending.push(cover | 1 << (u - 1));
                }
            }
        }
        found.sort_unstable_by_key(|m| m.count_ones());
        let mut kept: Vec<u64> = Vec::new();
        for m in found {
            if kept.iter().all(|&k| k & !m != 0) {
                kept.push(m);
            }
        }
        let mut faces: Vec<Face> = kept.into_iter().map(Face::from_mask).collect();
        faces.sort_unstable();
        faces
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Graph", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("edges", &self.edges())?;
        s.end()
    }
}

fn full_mask(n: u32) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1 << n) - 1
    }
}

/// For a pure complex whose facets all have cardinality n - 2, the graph on
/// {1, ..., n} whose edges are the facet complements. Its minimal vertex
/// covers are exactly the minimal nonfaces of the complex.
pub fn cofacet_graph(cx: &SimplicialComplex) -> Result<Graph, GraphError> {
    let n = cx.n();
    let expected = n.saturating_sub(2);
    let full = Face::from_mask(full_mask(n));
    let mut g = Graph::new(n)?;
    for &f in cx.facets() {
        if f.card() != expected || expected == 0 {
            return Err(GraphError::NotCodimensionTwo { facet: f, expected });
        }
        let co = full.difference(f);
        let mut it = co.iter();
        let (u, v) = (it.next().unwrap(), it.next().unwrap());
        g.add_edge(u, v).expect("complement vertices are in range");
    }
    Ok(g)
}

/// An induced 4-cycle u - z - v - t - u: the four consecutive pairs are
/// edges and the diagonals {u, v} and {z, t} are not.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InducedC4 {
    pub u: u32,
    pub z: u32,
    pub v: u32,
    pub t: u32,
}

impl fmt::Display for InducedC4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.u, self.z, self.v, self.t)
    }
}

/// First induced 4-cycle in lexicographic order over vertex quadruples, or
/// None. Within a quadruple a < b < c < d the three cyclic pairings are
/// tried in a fixed order, so the result is deterministic.
pub fn has_induced_c4(g: &Graph) -> Option<InducedC4> {
    let n = g.n();
    let e = |x: u32, y: u32| g.has_edge(x, y);
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                for d in c + 1..=n {
                    // cycle a-b-c-d
                    if e(a, b) && e(b, c) && e(c, d) && e(d, a) && !e(a, c) && !e(b, d) {
                        return Some(InducedC4 { u: a, z: b, v: c, t: d });
                    }
                    // cycle a-b-d-c
                    if e(a, b) && e(b, d) && e(d, c) && e(c, a) && !e(a, d) && !e(b, c) {
                        return Some(InducedC4 { u: a, z: b, v: d, t: c });
                    }
                    // cycle a-c-b-d
                    if e(a, c) && e(c, b) && e(b, d) && e(d, a) && !e(a, b) && !e(c, d) {
                        return Some(InducedC4 { u: a, z: c, v: b, t: d });
                    }
                }
            }
        }
    }
    None
}

/// Outcome of the graph-based (S_2) screen. `NotS2` is sound: the witness
/// is an induced 4-cycle in the complement of the cofacet graph, which
/// rules out (S_2). `Inconclusive` decides nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ObstructionVerdict {
    NotS2 { witness: InducedC4 },
    Inconclusive,
}

/// Screens a codimension-two complex through its cofacet graph: if two
/// components each contain an edge, their lex-least edges {u, v} and {z, t}
/// yield the induced 4-cycle u - z - v - t in the complement graph, and the
/// complex cannot satisfy (S_2).
pub fn s2_graph_obstruction(cx: &SimplicialComplex) -> Result<ObstructionVerdict, GraphError> {
    let g = cofacet_graph(cx)?;
    let edge_comps: Vec<u64> =
        g.connected_components().into_iter().filter(|c| c.count_ones() >= 2).collect();
    if edge_comps.len() < 2 {
        return Ok(ObstructionVerdict::Inconclusive);
    }
    let edges = g.edges();
    let first_edge_in = |comp: u64| {
        edges
            .iter()
            .copied()
            .find(|&(u, _)| comp >> (u - 1) & 1 == 1)
            .expect("component contains an edge")
    };
    let (u, v) = first_edge_in(edge_comps[0]);
    let (z, t) = first_edge_in(edge_comps[1]);
    let witness = InducedC4 { u, z, v, t };
    debug_assert!({
        let co = g.complement();
        co.has_edge(u, z)
            && co.has_edge(z, v)
            && co.has_edge(v, t)
            && co.has_edge(t, u)
            && !co.has_edge(u, v)
            && !co.has_edge(z, t)
    });
    Ok(ObstructionVerdict::NotS2 { witness })
}
