//! Simple undirected graphs on `0..n`, and the two graphs this crate is
//! about: the power graph and the enhanced power graph of a finite group.
//!
//! Both constructions read the group directly and are deliberately
//! independent of the reconstruction code, so they can serve as ground
//! truth when testing it.

use thiserror::Error;

use crate::group::FiniteGroup;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("vertex {index} is outside 0..{vertices}")]
    VertexOutOfRange { index: usize, vertices: usize },
    #[error("self-loop at vertex {vertex} is not allowed")]
    SelfLoop { vertex: usize },
}

/// An undirected simple graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
        }
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let adjacency = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Graph { adjacency }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut graph = Graph::empty(n);
        for &(a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange {
                        index: v,
                        vertices: n,
                    });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop { vertex: a });
            }
            graph.add_edge(a, b);
        }
        Ok(graph)
    }

    /// Inserts the edge `{a, b}`; inserting an existing edge is a no-op.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b, "self-loops are not allowed");
        assert!(a < self.vertex_count() && b < self.vertex_count());
        for (x, y) in [(a, b), (b, a)] {
            if let Err(pos) = self.adjacency[x].binary_search(&y) {
                self.adjacency[x].insert(pos, y);
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.adjacency[a].binary_search(&b).is_ok()
    }

    /// All edges as pairs `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, nbrs) in self.adjacency.iter().enumerate() {
            for &b in nbrs {
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// True iff every pair of distinct vertices is adjacent.
    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.adjacency.iter().all(|nbrs| nbrs.len() == n - 1)
    }

    /// Vertices adjacent to every other vertex, in increasing order.
    pub fn universal_vertices(&self) -> Vec<usize> {
        let n = self.vertex_count();
        (0..n).filter(|&v| self.degree(v) == n - 1).collect()
    }

    /// True iff `other` has the same vertices and a superset of the edges.
    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> bool {
        self.vertex_count() == other.vertex_count()
            && self
                .adjacency
                .iter()
                .enumerate()
                .all(|(v, nbrs)| nbrs.iter().all(|&u| other.has_edge(v, u)))
    }

    /// Image of the graph under the vertex renaming `v -> new_of_old[v]`,
    /// which must be a permutation.
    pub fn relabeled(&self, new_of_old: &[usize]) -> Graph {
        let n = self.vertex_count();
        assert_eq!(new_of_old.len(), n);
        let mut graph = Graph::empty(n);
        for (a, b) in self.edges() {
            graph.add_edge(new_of_old[a], new_of_old[b]);
        }
        graph
    }
}

/// The power graph of `group`: distinct elements `a`, `b` are adjacent iff
/// one is a power of the other, i.e. `a` lies in `<b>` or `b` lies in `<a>`.
pub fn power_graph(group: &FiniteGroup) -> Graph {
    let n = group.order();
    let subgroups: Vec<Vec<usize>> = (0..n).map(|a| group.cyclic_subgroup(a)).collect();
    let mut graph = Graph::empty(n);
    for a in 0..n {
        let da = group.element_order(a);
        for b in a + 1..n {
            let db = group.element_order(b);
            // membership in <x> forces the order to divide |<x>|
            let adjacent = if da % db == 0 {
                subgroups[a].binary_search(&b).is_ok()
            } else if db % da == 0 {
                subgroups[b].binary_search(&a).is_ok()
            } else {
                false
            };
            if adjacent {
                graph.add_edge(a, b);
            }
        }
    }
    graph
}

/// The enhanced power graph of `group`: distinct elements `a`, `b` are
/// adjacent iff some cyclic subgroup contains both. Built directly as the
/// union of cliques over all cyclic subgroups; this is the ground-truth
/// construction the reconstruction is validated against.
pub fn enhanced_power_graph(group: &FiniteGroup) -> Graph {
    let n = group.order();
    let mut adjacent = vec![false; n * n];
    let mut seen: Vec<Vec<usize>> = Vec::new();
    for c in 0..n {
        let members = group.cyclic_subgroup(c);
        if seen.contains(&members) {
            continue;
        }
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                adjacent[a * n + b] = true;
            }
        }
        seen.push(members);
    }
    let mut graph = Graph::empty(n);
    for a in 0..n {
        for b in a + 1..n {
            if adjacent[a * n + b] {
                graph.add_edge(a, b);
            }
        }
    }
    graph
}
