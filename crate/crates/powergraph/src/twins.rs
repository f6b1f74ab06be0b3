//! Closed-twin analysis.
//!
//! Two adjacent vertices `a`, `b` are closed twins when they have the same
//! neighbors apart from each other: `N(a) \ {b} = N(b) \ {a}`. The count
//! assigned to a vertex is the number of its closed twins plus one (the
//! vertex itself); equivalently, the size of its equivalence class under
//! "closed twin or equal". These counts are the only information the
//! reconstruction extracts from a power graph, and for power graphs they
//! are predicted by a closed-form expression in most cases — the
//! [`formula_twin_counts`] half of this module exists purely so tests can
//! confront measured counts with the prediction.

use thiserror::Error;

use crate::graph::Graph;
use crate::group::FiniteGroup;
use crate::numtheory::{euler_phi, is_prime_power};

#[derive(Debug, Error)]
pub enum TwinError {
    #[error("twin-count monotonicity applies only to non-cyclic groups")]
    CyclicGroup,
}

/// Sorted/masked slice equality: `xs \ {skip_x} == ys \ {skip_y}`.
fn masked_eq(xs: &[usize], ys: &[usize], skip_x: usize, skip_y: usize) -> bool {
    xs.iter()
        .filter(|&&v| v != skip_x)
        .eq(ys.iter().filter(|&&v| v != skip_y))
}

/// The closed twins of `a`: neighbors `b` with `N(a) \ {b} = N(b) \ {a}`,
/// in increasing order.
pub fn closed_twins(graph: &Graph, a: usize) -> Vec<usize> {
    let na = graph.neighbors(a);
    na.iter()
        .copied()
        .filter(|&b| masked_eq(na, graph.neighbors(b), b, a))
        .collect()
}

/// Per-vertex closed-twin counts measured on a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinCounts {
    counts: Vec<usize>,
}

impl TwinCounts {
    /// Wraps precomputed counts; mainly for tests that doctor values.
    pub fn new(counts: Vec<usize>) -> Self {
        TwinCounts { counts }
    }

    /// Count for vertex `v`: number of closed twins of `v`, plus one.
    pub fn get(&self, v: usize) -> usize {
        self.counts[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.counts
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

/// Measures the closed-twin count of every vertex.
pub fn twin_counts(graph: &Graph) -> TwinCounts {
    let counts = (0..graph.vertex_count())
        .map(|a| closed_twins(graph, a).len() + 1)
        .collect();
    TwinCounts { counts }
}

/// Closed-form prediction for one element, or a marker that the closed form
/// does not speak about it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaValue {
    Count(usize),
    NotCovered,
}

impl FormulaValue {
    pub fn is_covered(&self) -> bool {
        matches!(self, FormulaValue::Count(_))
    }

    pub fn value(&self) -> Option<usize> {
        match self {
            FormulaValue::Count(c) => Some(*c),
            FormulaValue::NotCovered => None,
        }
    }
}

/// Closed-form twin-count predictions for the power graph of a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaCounts {
    values: Vec<FormulaValue>,
}

impl FormulaCounts {
    pub fn get(&self, v: usize) -> FormulaValue {
        self.values[v]
    }

    pub fn values(&self) -> &[FormulaValue] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Number of elements the closed form covers.
    pub fn covered(&self) -> usize {
        self.values.iter().filter(|v| v.is_covered()).count()
    }
}

/// Predicts the closed-twin counts of the power graph from the group's
/// structure, without building the graph:
///
/// * cyclic of prime-power order (or trivial): every count is the group
///   order, since the power graph is complete;
/// * cyclic otherwise: `phi(n) + 1` for the identity and the generators,
///   `phi(ord(a))` for everything else;
/// * non-cyclic: 2 for the identity of a generalized quaternion group and
///   1 for any other identity; `phi(ord(a))` for elements whose order is
///   not a prime power, and likewise for elements of prime-power order
///   that lie inside some cyclic subgroup of non-prime-power order.
///
/// Elements of prime-power order in a non-cyclic group with no such
/// overgroup are reported as [`FormulaValue::NotCovered`] — deliberately,
/// so the prediction stays an independent check rather than looping in the
/// graph-side measurement as its own fallback.
pub fn formula_twin_counts(group: &FiniteGroup) -> FormulaCounts {
    let n = group.order();
    let phi = |d: usize| euler_phi(d as u64) as usize;

    if group.is_cyclic() {
        let values = if n == 1 || is_prime_power(n as u64) {
            vec![FormulaValue::Count(n); n]
        } else {
            (0..n)
                .map(|a| {
                    let d = group.element_order(a);
                    if d == 1 || d == n {
                        FormulaValue::Count(phi(n) + 1)
                    } else {
                        FormulaValue::Count(phi(d))
                    }
                })
                .collect()
        };
        return FormulaCounts { values };
    }

    // Elements lying in some cyclic subgroup of non-prime-power order.
    let mut in_composite_cyclic = vec![false; n];
    for b in 0..n {
        if !is_prime_power(group.element_order(b) as u64) && group.element_order(b) > 1 {
            for m in group.cyclic_subgroup(b) {
                in_composite_cyclic[m] = true;
            }
        }
    }

    let values = (0..n)
        .map(|a| {
            let d = group.element_order(a);
            if d == 1 {
                let c = if group.is_generalized_quaternion() { 2 } else { 1 };
                FormulaValue::Count(c)
            } else if !is_prime_power(d as u64) || in_composite_cyclic[a] {
                FormulaValue::Count(phi(d))
            } else {
                FormulaValue::NotCovered
            }
        })
        .collect();
    FormulaCounts { values }
}

/// A pair of elements with nested cyclic subgroups whose measured counts
/// decrease outward, contradicting the expected monotonicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotonicityViolation {
    pub inner: usize,
    pub outer: usize,
    pub inner_count: usize,
    pub outer_count: usize,
}

/// Checks that in a non-cyclic group, `<h>` inside `<k>` implies the count
/// of `h` is at most the count of `k` (equal subgroups force equal counts,
/// since both directions are scanned). Returns every violating pair.
///
/// The statement is specific to non-cyclic groups, so a cyclic input is an
/// error rather than a vacuous pass.
pub fn check_monotonicity(
    group: &FiniteGroup,
    counts: &TwinCounts,
) -> Result<Vec<MonotonicityViolation>, TwinError> {
    assert_eq!(counts.len(), group.order());
    if group.is_cyclic() {
        return Err(TwinError::CyclicGroup);
    }
    let poset = group.cyclic_subgroup_poset();
    let mut violations = Vec::new();
    for h in 0..group.order() {
        for k in 0..group.order() {
            if h == k {
                continue;
            }
            if poset.included(poset.subgroup_of(h), poset.subgroup_of(k))
                && counts.get(h) > counts.get(k)
            {
                violations.push(MonotonicityViolation {
                    inner: h,
                    outer: k,
                    inner_count: counts.get(h),
                    outer_count: counts.get(k),
                });
            }
        }
    }
    Ok(violations)
}
