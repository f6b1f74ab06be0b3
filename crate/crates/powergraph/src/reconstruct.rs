//! Reconstruction of the enhanced power graph from the power graph alone.
//!
//! The input is an abstract graph, with no access to the group it came
//! from. Universal vertices classify the input: a complete graph is its
//! own enhanced power graph; more than two universal vertices pins the
//! group as cyclic (so the enhanced power graph is complete); otherwise
//! the group is non-cyclic and each non-adjacent pair is decided locally
//! from closed-twin counts and a common-neighbor witness.

use thiserror::Error;

use crate::graph::Graph;
use crate::twins::{twin_counts, TwinCounts};

#[derive(Debug, Error)]
pub enum ReconstructError {
    #[error("vertex {index} is outside 0..{vertices}")]
    VertexOutOfRange { index: usize, vertices: usize },
    #[error("the decision rule needs two distinct vertices, got {vertex} twice")]
    IdenticalVertices { vertex: usize },
    #[error("vertices {a} and {b} are already adjacent in the power graph")]
    AlreadyAdjacent { a: usize, b: usize },
}

/// What the universal-vertex census reveals about the (unseen) group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputClass {
    /// Complete power graph: cyclic of prime-power order (or trivial).
    Complete,
    /// More than two universal vertices: cyclic of non-prime-power order.
    CyclicNonPrimePower,
    /// At most two universal vertices in an incomplete graph: non-cyclic.
    NonCyclic,
}

impl std::fmt::Display for InputClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            InputClass::Complete => "complete",
            InputClass::CyclicNonPrimePower => "cyclic-non-prime-power",
            InputClass::NonCyclic => "non-cyclic",
        };
        f.write_str(s)
    }
}

/// An edge the reconstruction added, with the common-neighbor witness that
/// justified it (absent when the whole graph was completed at once).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AddedEdge {
    pub a: usize,
    pub b: usize,
    pub witness: Option<usize>,
}

/// How a reconstruction run classified its input and what it changed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconstructionReport {
    pub input_class: InputClass,
    pub universal_count: usize,
    /// Added edges in lexicographic order, `a < b`.
    pub added_edges: Vec<AddedEdge>,
}

/// First common neighbor of `a` and `b` (in increasing order) whose count
/// passes the threshold; `strict` selects `>` over `>=`.
fn witness_for(
    power: &Graph,
    counts: &TwinCounts,
    a: usize,
    b: usize,
    threshold: usize,
    strict: bool,
) -> Option<usize> {
    let (mut xs, mut ys) = (power.neighbors(a).iter(), power.neighbors(b).iter());
    let (mut x, mut y) = (xs.next(), ys.next());
    while let (Some(&u), Some(&v)) = (x, y) {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => x = xs.next(),
            std::cmp::Ordering::Greater => y = ys.next(),
            std::cmp::Ordering::Equal => {
                let c = counts.get(u);
                if c > threshold || (!strict && c == threshold) {
                    return Some(u);
                }
                x = xs.next();
                y = ys.next();
            }
        }
    }
    None
}

/// Decides and justifies one pair: is the non-adjacent pair `{a, b}`
/// adjacent in the enhanced power graph? Returns the witness on a yes.
///
/// With unequal counts the pair is adjacent iff some common neighbor's
/// count reaches the larger of the two; with equal counts the witness
/// must strictly exceed them. Only meaningful when the input is the power
/// graph of a non-cyclic group.
fn decide_pair_witness(
    power: &Graph,
    counts: &TwinCounts,
    a: usize,
    b: usize,
) -> Result<Option<usize>, ReconstructError> {
    let n = power.vertex_count();
    for v in [a, b] {
        if v >= n {
            return Err(ReconstructError::VertexOutOfRange {
                index: v,
                vertices: n,
            });
        }
    }
    if a == b {
        return Err(ReconstructError::IdenticalVertices { vertex: a });
    }
    if power.has_edge(a, b) {
        return Err(ReconstructError::AlreadyAdjacent { a, b });
    }
    let (ka, kb) = (counts.get(a), counts.get(b));
    let (threshold, strict) = if ka == kb {
        (ka, true)
    } else {
        (ka.max(kb), false)
    };
    Ok(witness_for(power, counts, a, b, threshold, strict))
}

/// Decides whether the non-adjacent pair `{a, b}` is adjacent in the
/// enhanced power graph. See [`reconstruct_enhanced`] for the whole-graph
/// procedure this rule belongs to; it applies only to power graphs of
/// non-cyclic groups.
pub fn decide_pair(
    power: &Graph,
    counts: &TwinCounts,
    a: usize,
    b: usize,
) -> Result<bool, ReconstructError> {
    decide_pair_witness(power, counts, a, b).map(|w| w.is_some())
}

/// Reconstructs the enhanced power graph of the unseen group whose power
/// graph is `power`, along with a report of what was inferred.
pub fn reconstruct_enhanced(power: &Graph) -> (Graph, ReconstructionReport) {
    let n = power.vertex_count();
    let universal = power.universal_vertices();
    let universal_count = universal.len();

    if power.is_complete() {
        let report = ReconstructionReport {
            input_class: InputClass::Complete,
            universal_count,
            added_edges: Vec::new(),
        };
        return (power.clone(), report);
    }

    if universal_count > 2 {
        // Cyclic group of non-prime-power order: the enhanced power graph
        // is complete, so add every missing edge without further analysis.
        let mut out = power.clone();
        let mut added = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if !power.has_edge(a, b) {
                    out.add_edge(a, b);
                    added.push(AddedEdge {
                        a,
                        b,
                        witness: None,
                    });
                }
            }
        }
        let report = ReconstructionReport {
            input_class: InputClass::CyclicNonPrimePower,
            universal_count,
            added_edges: added,
        };
        return (out, report);
    }

    // Non-cyclic group: decide each non-adjacent pair from twin counts.
    let counts = twin_counts(power);
    let mut out = power.clone();
    let mut added = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if power.has_edge(a, b) {
                continue;
            }
            let witness = decide_pair_witness(power, &counts, a, b)
                .expect("pair is distinct, in range, and non-adjacent");
            if let Some(c) = witness {
                out.add_edge(a, b);
                added.push(AddedEdge {
                    a,
                    b,
                    witness: Some(c),
                });
            }
        }
    }
    let report = ReconstructionReport {
        input_class: InputClass::NonCyclic,
        universal_count,
        added_edges: added,
    };
    (out, report)
}

/// Edges of `enhanced` that are not in `power`, in lexicographic order.
pub fn difference_edges(power: &Graph, enhanced: &Graph) -> Vec<(usize, usize)> {
    assert_eq!(power.vertex_count(), enhanced.vertex_count());
    enhanced
        .edges()
        .into_iter()
        .filter(|&(a, b)| !power.has_edge(a, b))
        .collect()
}

/// The difference graph: edges of the enhanced power graph that are absent
/// from the power graph, with vertices of degree zero removed. The vertex
/// `v` of the difference graph corresponds to `original_indices[v]` in the
/// input graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceGraph {
    pub graph: Graph,
    pub original_indices: Vec<usize>,
}

/// Builds the difference graph from a power graph and an enhanced power
/// graph on the same vertex set.
pub fn difference_graph(power: &Graph, enhanced: &Graph) -> DifferenceGraph {
    let diff = difference_edges(power, enhanced);
    let mut keep: Vec<usize> = diff
        .iter()
        .flat_map(|&(a, b)| [a, b])
        .collect();
    keep.sort_unstable();
    keep.dedup();
    let mut new_index = vec![usize::MAX; power.vertex_count()];
    for (i, &v) in keep.iter().enumerate() {
        new_index[v] = i;
    }
    let mut graph = Graph::empty(keep.len());
    for (a, b) in diff {
        graph.add_edge(new_index[a], new_index[b]);
    }
    DifferenceGraph {
        graph,
        original_indices: keep,
    }
}

/// Reconstructs the enhanced power graph from `power`, then forms the
/// difference graph of the two.
pub fn difference_graph_from_power(power: &Graph) -> (DifferenceGraph, ReconstructionReport) {
    let (enhanced, report) = reconstruct_enhanced(power);
    (difference_graph(power, &enhanced), report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enhanced_power_graph, power_graph};
    use crate::group::{make_group, GroupSpec};

    #[test]
    fn complete_input_is_fixed_point() {
        for n in [1usize, 2, 5] {
            let k = Graph::complete(n);
            let (out, report) = reconstruct_enhanced(&k);
            assert_eq!(out, k);
            assert_eq!(report.input_class, InputClass::Complete);
            assert_eq!(report.universal_count, n);
            assert!(report.added_edges.is_empty());
        }
    }

    #[test]
    fn cyclic_six_input_completes() {
        let g = make_group(&GroupSpec::Cyclic(6)).unwrap();
        let pg = power_graph(&g);
        let (out, report) = reconstruct_enhanced(&pg);
        assert_eq!(report.input_class, InputClass::CyclicNonPrimePower);
        assert_eq!(report.universal_count, 3);
        assert!(out.is_complete());
        assert_eq!(out, enhanced_power_graph(&g));
        let added: Vec<(usize, usize)> = report.added_edges.iter().map(|e| (e.a, e.b)).collect();
        assert_eq!(added, vec![(2, 3), (3, 4)]);
        assert!(report.added_edges.iter().all(|e| e.witness.is_none()));
    }

    #[test]
    fn quaternion_eight_input_unchanged() {
        let g = make_group(&GroupSpec::GeneralizedQuaternion(3)).unwrap();
        let pg = power_graph(&g);
        let (out, report) = reconstruct_enhanced(&pg);
        assert_eq!(report.input_class, InputClass::NonCyclic);
        assert_eq!(report.universal_count, 2);
        assert!(report.added_edges.is_empty());
        assert_eq!(out, pg);
        assert_eq!(out, enhanced_power_graph(&g));
    }

    #[test]
    fn dihedral_six_reconstruction_adds_rotation_edges() {
        let g = make_group(&GroupSpec::Dihedral(6)).unwrap();
        let pg = power_graph(&g);
        let (out, report) = reconstruct_enhanced(&pg);
        assert_eq!(report.input_class, InputClass::NonCyclic);
        assert_eq!(report.universal_count, 1);
        assert_eq!(out, enhanced_power_graph(&g));
        // the two missing rotation pairs: r^2--r^3 and r^3--r^4
        let added: Vec<(usize, usize)> = report.added_edges.iter().map(|e| (e.a, e.b)).collect();
        assert_eq!(added, vec![(2, 3), (3, 4)]);
        // witnessed by a rotation of order 6 whose count dominates
        for edge in &report.added_edges {
            let w = edge.witness.expect("pairwise decisions carry a witness");
            assert!(w == 1 || w == 5);
        }
    }

    #[test]
    fn decide_pair_examples() {
        let g = make_group(&GroupSpec::Dihedral(6)).unwrap();
        let pg = power_graph(&g);
        let counts = twin_counts(&pg);
        // r^3 and r^2 share <r>: adjacent in the enhanced power graph
        assert!(decide_pair(&pg, &counts, 3, 2).unwrap());
        // a reflection and r share no cyclic subgroup
        assert!(!decide_pair(&pg, &counts, 6, 1).unwrap());
        // two reflections share no cyclic subgroup
        assert!(!decide_pair(&pg, &counts, 6, 7).unwrap());
    }

    #[test]
    fn decide_pair_rejects_bad_input() {
        let g = make_group(&GroupSpec::Dihedral(3)).unwrap();
        let pg = power_graph(&g);
        let counts = twin_counts(&pg);
        assert!(matches!(
            decide_pair(&pg, &counts, 2, 2),
            Err(ReconstructError::IdenticalVertices { vertex: 2 })
        ));
        assert!(matches!(
            decide_pair(&pg, &counts, 0, 3),
            Err(ReconstructError::AlreadyAdjacent { a: 0, b: 3 })
        ));
        assert!(matches!(
            decide_pair(&pg, &counts, 0, 99),
            Err(ReconstructError::VertexOutOfRange { index: 99, .. })
        ));
    }

    #[test]
    fn difference_graph_strips_isolated_vertices() {
        let g = make_group(&GroupSpec::Dihedral(6)).unwrap();
        let pg = power_graph(&g);
        let (diff, _) = difference_graph_from_power(&pg);
        assert_eq!(diff.original_indices, vec![2, 3, 4]);
        assert_eq!(diff.graph.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn difference_graph_empty_when_orders_are_prime_powers() {
        for spec in [
            GroupSpec::Symmetric(3),
            GroupSpec::GeneralizedQuaternion(3),
            GroupSpec::DirectProduct(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(2)]),
        ] {
            let g = make_group(&spec).unwrap();
            let (diff, _) = difference_graph_from_power(&power_graph(&g));
            assert_eq!(diff.graph.vertex_count(), 0, "{spec}");
            assert!(diff.original_indices.is_empty());
        }
    }

    #[test]
    fn difference_edges_against_ground_truth() {
        let spec = GroupSpec::DirectProduct(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(6)]);
        let g = make_group(&spec).unwrap();
        let pg = power_graph(&g);
        let truth = enhanced_power_graph(&g);
        let (reconstructed, _) = reconstruct_enhanced(&pg);
        assert_eq!(reconstructed, truth);
        assert_eq!(
            difference_edges(&pg, &reconstructed),
            difference_edges(&pg, &truth)
        );
        assert!(!difference_edges(&pg, &truth).is_empty());
    }
}
