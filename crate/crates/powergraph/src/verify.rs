//! Catalog-wide verification: construct each group, build its power graph,
//! reconstruct the enhanced power graph without the group, and confront the
//! result (and every intermediate quantity) with ground truth computed from
//! the Cayley table.
//!
//! Each check has a stable name so failures can be reported precisely and
//! tests can assert on specific checks.

use crate::catalog::{default_catalog, CatalogEntry};
use crate::graph::{enhanced_power_graph, power_graph, Graph};
use crate::group::{make_group, FiniteGroup, GroupError, GroupSpec};
use crate::numtheory::{euler_phi, gcd, is_prime_power, lcm, prime_power_base};
use crate::reconstruct::{
    difference_graph, reconstruct_enhanced, InputClass, ReconstructionReport,
};
use crate::twins::{
    check_monotonicity, closed_twins, formula_twin_counts, twin_counts, FormulaValue, TwinCounts,
};

/// Filters for a verification run.
#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Keep only groups of order at most this.
    pub max_order: Option<usize>,
    /// Keep only this group family (accepts the CLI family aliases).
    pub family: Option<String>,
}

/// One failed check on one group.
#[derive(Debug, Clone)]
pub struct CheckFailure {
    pub check: &'static str,
    pub detail: String,
}

/// Verification outcome for one catalog group.
#[derive(Debug, Clone)]
pub struct GroupReport {
    pub name: String,
    pub order: usize,
    pub input_class: InputClass,
    /// Elements whose closed-twin count the closed form predicts.
    pub formula_covered: usize,
    pub formula_total: usize,
    /// Closed-twin count of the identity; 2 exactly on generalized
    /// quaternion groups.
    pub identity_count: usize,
    pub failures: Vec<CheckFailure>,
}

/// Verification outcome for a whole run.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub groups: Vec<GroupReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.groups.iter().all(|g| g.failures.is_empty())
    }

    pub fn failure_count(&self) -> usize {
        self.groups.iter().map(|g| g.failures.len()).sum()
    }
}

fn family_matches(entry: &CatalogEntry, family: &str) -> Result<bool, GroupError> {
    let canonical = match family {
        "cyclic" | "c" | "z" => "cyclic",
        "dihedral" | "d" => "dihedral",
        "q" | "quaternion" | "generalized-quaternion" => "quaternion",
        "symmetric" | "s" => "symmetric",
        "product" | "p" => "product",
        other => return Err(GroupError::UnknownFamily(other.to_string())),
    };
    Ok(entry.spec.family_name() == canonical)
}

/// Runs every check against every catalog group passing the filters.
pub fn run_verify(options: &VerifyOptions) -> Result<VerifyReport, GroupError> {
    let mut groups = Vec::new();
    for entry in default_catalog() {
        if let Some(max) = options.max_order {
            if entry.order > max {
                continue;
            }
        }
        if let Some(family) = &options.family {
            if !family_matches(&entry, family)? {
                continue;
            }
        }
        groups.push(verify_entry(&entry)?);
    }
    Ok(VerifyReport { groups })
}

fn verify_entry(entry: &CatalogEntry) -> Result<GroupReport, GroupError> {
    let group = make_group(&entry.spec)?;
    let power = power_graph(&group);
    let truth = enhanced_power_graph(&group);
    let (reconstructed, report) = reconstruct_enhanced(&power);
    let counts = twin_counts(&power);
    let formula = formula_twin_counts(&group);

    let mut failures = Vec::new();
    let mut fail = |check: &'static str, detail: String| {
        failures.push(CheckFailure { check, detail });
    };

    check_reconstruction(&mut fail, &reconstructed, &truth);
    check_universal_count(&mut fail, entry, &group, &power);
    check_input_class(&mut fail, &group, &report);
    check_formula(&mut fail, &group, &counts, &formula);
    check_monotone_counts(&mut fail, &group, &counts);
    check_count_lower_bound(&mut fail, &group, &counts);
    check_equal_subgroups(&mut fail, &group, &counts);
    check_totient_on_chains(&mut fail, &group);
    check_difference(&mut fail, &group, &power, &reconstructed);
    check_subgraph(&mut fail, &power, &truth);
    check_identity_universal(&mut fail, &power, &truth);
    check_witnesses(&mut fail, &power, &counts, &report);
    check_divisibility_adjacency(&mut fail, &group, &power);
    check_group_arithmetic(&mut fail, entry, &group);
    check_noncyclic_when_single_universal(&mut fail, &group, &power);
    check_twin_symmetry(&mut fail, &power);
    check_count_range(&mut fail, &group, &counts, &formula);
    check_exact_nonprimepower_counts(&mut fail, &group, &counts);
    check_universal_twin_count(&mut fail, &power, &counts);
    check_twins_share_prime(&mut fail, &group, &power);
    check_output_contains_input(&mut fail, &power, &reconstructed, &report);
    check_difference_consistency(&mut fail, &power, &reconstructed, &truth);

    Ok(GroupReport {
        name: entry.name.clone(),
        order: entry.order,
        input_class: report.input_class,
        formula_covered: formula.covered(),
        formula_total: formula.len(),
        identity_count: counts.get(group.identity()),
        failures,
    })
}

/// The reconstruction must equal the enhanced power graph built from the
/// Cayley table.
fn check_reconstruction(
    fail: &mut impl FnMut(&'static str, String),
    reconstructed: &Graph,
    truth: &Graph,
) {
    if reconstructed != truth {
        let missing: Vec<_> = truth
            .edges()
            .into_iter()
            .filter(|&(a, b)| !reconstructed.has_edge(a, b))
            .collect();
        let extra: Vec<_> = reconstructed
            .edges()
            .into_iter()
            .filter(|&(a, b)| !truth.has_edge(a, b))
            .collect();
        fail(
            "reconstruction-matches-oracle",
            format!("missing edges {missing:?}, extra edges {extra:?}"),
        );
    }
}

/// Universal-vertex census of the power graph, against both the catalog's
/// recorded expectation and the structural rule.
fn check_universal_count(
    fail: &mut impl FnMut(&'static str, String),
    entry: &CatalogEntry,
    group: &FiniteGroup,
    power: &Graph,
) {
    let n = group.order();
    let found = power.universal_vertices().len();
    let structural = if group.is_cyclic() {
        if n == 1 || is_prime_power(n as u64) {
            n
        } else {
            1 + euler_phi(n as u64) as usize
        }
    } else if group.is_generalized_quaternion() {
        2
    } else {
        1
    };
    if found != structural {
        fail(
            "universal-count",
            format!("found {found}, structure demands {structural}"),
        );
    }
    if found != entry.expected_universal_count {
        fail(
            "universal-count",
            format!(
                "found {found}, catalog records {}",
                entry.expected_universal_count
            ),
        );
    }
}

/// The classification inferred from the graph alone must agree with what
/// the group actually is.
fn check_input_class(
    fail: &mut impl FnMut(&'static str, String),
    group: &FiniteGroup,
    report: &ReconstructionReport,
) {
    let n = group.order();
    let expected = if group.is_cyclic() && (n == 1 || is_prime_power(n as u64)) {
        InputClass::Complete
    } else if group.is_cyclic() {
        InputClass::CyclicNonPrimePower
    } else {
        InputClass::NonCyclic
    };
    if report.input_class != expected {
        fail(
            "input-class",
            format!("classified {}, group is {expected}", report.input_class),
        );
    }
}

/// Where the closed form speaks, it must agree with measurement; for
/// cyclic groups it must speak everywhere.
fn check_formula(
    fail: &mut impl FnMut(&'static str, String),
    group: &FiniteGroup,
    counts: &TwinCounts,
    formula: &crate::twins::FormulaCounts,
) {
    for a in 0..group.order() {
        if let FormulaValue::Count(predicted) = formula.get(a) {
            let measured = counts.get(a);
            if predicted != measured {
                fail(
                    "formula-agreement",
                    format!("element {a}: predicted {predicted}, measured {measured}"),
                );
            }
        }
    }
    if group.is_cyclic() && formula.covered() != formula.len() {
        fail(
            "formula-coverage-cyclic",
            format!("covered {} of {}", formula.covered(), formula.len()),
        );
    }
}

/// In non-cyclic groups, counts must not decrease along subgroup chains.
fn check_monotone_counts(
    fail: &mut impl FnMut(&'static str, String),
    group: &FiniteGroup,
    counts: &TwinCounts,
) {
    if group.is_cyclic() {
        return;
    }
    let violations = check_monotonicity(group, counts).expect("group is non-cyclic");
    for v in violations {
        fail(
            "count-monotonicity",
            format!(
                "<{}> inside <{}> but counts {} > {}",
                v.inner, v.outer, v.inner_count, v.outer_count
            ),
        );
    }
}

/// Every element's count is at least the totient of its order.
fn check_count_lower_bound(
    fail: &mut impl FnMut(&'static str, String),
    group: &FiniteGroup,
    counts: &TwinCounts,
) {
    for a in 0..group.order() {
        let bound = euler_phi(group.element_order(a) as u64) as usize;
        if counts.get(a) < bound {
            fail(
                "count-lower-bound",
                format!(
                    "element {a} of order {}: count {} < phi = {bound}",
                    group.element_order(a),
                    counts.get(a)
                ),
            );
        }
    }
}

/// Elements generating the same cyclic subgroup must have equal counts.
fn check_equal_subgroups(
    fail: &mut impl FnMut(&'static str, String),
    group: &FiniteGroup,
    counts: &TwinCounts,
) {
    let poset = group.cyclic_subgroup_poset();
    let mut first_seen: Vec<Option<usize>> = vec![None; poset.len()];
    for a in 0..group.order() {
        if group.element_order(a) != poset.subgroup(poset.subgroup_of(a)).len() {
            continue; // a member, not a generator
        }
        let id = poset.subgroup_of(a);
        match first_seen[id] {
            None => first_seen[id] = Some(a),
            Some(b) => {
                if counts.get(a) != counts.get(b) {
                    fail(
                        "equal-subgroups-equal-counts",
                        format!(
                            "generators {b} and {a} of the same subgroup have counts {} and {}",
                            counts.get(b),
                            counts.get(a)
                        ),
                    );
                }
            }
        }
    }
}

/// Along every strict subgroup inclusion, the totient of the order cannot
/// drop,
/// and equality forces the outer order to be exactly twice the inner.
fn check_totient_on_chains(fail: &mut impl FnMut(&'static str, String), group: &FiniteGroup) {
    let poset = group.cyclic_subgroup_poset();
    for (s, t) in poset.inclusion_pairs() {
        let h = poset.subgroup(s).len();
        let k = poset.subgroup(t).len();
        let ph = euler_phi(h as u64);
        let pk = euler_phi(k as u64);
        if ph > pk {
            fail(
                "totient-monotone-on-chains",
                format!("|H| = {h} inside |K| = {k} but phi drops: {ph} > {pk}"),
            );
        } else if ph == pk && k != h && k != 2 * h {
            fail(
                "totient-equality-doubling",
                format!("phi({h}) = phi({k}) = {ph} but {k} is neither {h} nor {}", 2 * h),
            );
        }
    }
}

/// The difference graph is empty exactly when every element order is a
/// prime power, and it never keeps isolated vertices.
fn check_difference(
    fail: &mut impl FnMut(&'static str, String),
    group: &FiniteGroup,
    power: &Graph,
    reconstructed: &Graph,
) {
    let diff = difference_graph(power, reconstructed);
    let eppo = group.is_eppo();
    let empty = diff.graph.vertex_count() == 0;
    if empty != eppo {
        fail(
            "difference-empty-iff-prime-power-orders",
            format!("difference empty: {empty}, all orders prime powers: {eppo}"),
        );
    }
    for v in 0..diff.graph.vertex_count() {
        if diff.graph.degree(v) == 0 {
            fail(
                "difference-no-isolated-vertices",
                format!("vertex {v} (original {}) is isolated", diff.original_indices[v]),
            );
        }
    }
}

/// The power graph is a spanning subgraph of the enhanced power graph.
fn check_subgraph(fail: &mut impl FnMut(&'static str, String), power: &Graph, truth: &Graph) {
    if !power.is_spanning_subgraph_of(truth) {
        fail(
            "power-inside-enhanced",
            "power graph has an edge missing from the enhanced power graph".to_string(),
        );
    }
}

/// The identity is adjacent to everything in both graphs.
fn check_identity_universal(
    fail: &mut impl FnMut(&'static str, String),
    power: &Graph,
    truth: &Graph,
) {
    let n = power.vertex_count();
    for (name, graph) in [("power", power), ("enhanced", truth)] {
        if n > 0 && graph.degree(0) != n - 1 {
            fail(
                "identity-universal",
                format!("identity degree {} of {} in the {name} graph", graph.degree(0), n - 1),
            );
        }
    }
}

/// Element-level arithmetic facts: orders divide the group order, generator
/// sets have totient size, and product elements have lcm orders.
fn check_group_arithmetic(
    fail: &mut impl FnMut(&'static str, String),
    entry: &CatalogEntry,
    group: &FiniteGroup,
) {
    let n = group.order();
    for a in 0..n {
        let d = group.element_order(a);
        if n % d != 0 {
            fail(
                "order-divides-group-order",
                format!("element {a} has order {d}, group order {n}"),
            );
        }
        let gens = group.generators_of_cyclic(a).len();
        let phi = euler_phi(d as u64) as usize;
        if gens != phi {
            fail(
                "generator-count-is-phi",
                format!("element {a} of order {d}: {gens} generators, phi = {phi}"),
            );
        }
    }
    if let GroupSpec::DirectProduct(factors) = &entry.spec {
        let sizes: Vec<usize> = factors
            .iter()
            .map(|f| match f {
                GroupSpec::Cyclic(m) => *m,
                other => panic!("catalog products use cyclic factors, got {other}"),
            })
            .collect();
        for a in 0..n {
            let mut idx = a;
            let mut expected = 1u64;
            for &m in sizes.iter().rev() {
                let t = (idx % m) as u64;
                idx /= m;
                // order of t in Z_m; gcd(m, 0) = m covers the identity
                let m = m as u64;
                expected = lcm(expected, m / gcd(m, t));
            }
            let measured = group.element_order(a) as u64;
            if expected != measured {
                fail(
                    "product-orders-are-lcm",
                    format!("element {a}: lcm of factor orders {expected}, measured {measured}"),
                );
            }
        }
    }
}

/// An incomplete power graph with exactly one universal vertex can only
/// come from a non-cyclic group.
fn check_noncyclic_when_single_universal(
    fail: &mut impl FnMut(&'static str, String),
    group: &FiniteGroup,
    power: &Graph,
) {
    if !power.is_complete() && power.universal_vertices().len() == 1 && group.is_cyclic() {
        fail(
            "single-universal-implies-noncyclic",
            "incomplete power graph with one universal vertex from a cyclic group".to_string(),
        );
    }
}

/// The closed-twin relation is symmetric.
fn check_twin_symmetry(fail: &mut impl FnMut(&'static str, String), power: &Graph) {
    for a in 0..power.vertex_count() {
        for b in closed_twins(power, a) {
            if !closed_twins(power, b).contains(&a) {
                fail(
                    "twin-symmetry",
                    format!("{b} is a twin of {a} but not conversely"),
                );
            }
        }
    }
}

/// Counts lie in `1..=n`; covered formula values are positive.
fn check_count_range(
    fail: &mut impl FnMut(&'static str, String),
    group: &FiniteGroup,
    counts: &TwinCounts,
    formula: &crate::twins::FormulaCounts,
) {
    let n = group.order();
    for a in 0..n {
        let c = counts.get(a);
        if c < 1 || c > n {
            fail("count-range", format!("element {a} has count {c}, order {n}"));
        }
        if let FormulaValue::Count(p) = formula.get(a) {
            if p < 1 {
                fail("count-range", format!("formula value {p} for element {a}"));
            }
        }
    }
}

/// In non-cyclic groups, non-identity elements of non-prime-power order
/// have count exactly the totient of their order.
fn check_exact_nonprimepower_counts(
    fail: &mut impl FnMut(&'static str, String),
    group: &FiniteGroup,
    counts: &TwinCounts,
) {
    if group.is_cyclic() {
        return;
    }
    for a in 0..group.order() {
        let d = group.element_order(a);
        if d > 1 && !is_prime_power(d as u64) {
            let expected = euler_phi(d as u64) as usize;
            if counts.get(a) != expected {
                fail(
                    "nonprimepower-count-exact",
                    format!("element {a} of order {d}: count {}, phi = {expected}", counts.get(a)),
                );
            }
        }
    }
}

/// Every universal vertex's count equals the number of universal vertices.
fn check_universal_twin_count(
    fail: &mut impl FnMut(&'static str, String),
    power: &Graph,
    counts: &TwinCounts,
) {
    let universal = power.universal_vertices();
    for &v in &universal {
        if counts.get(v) != universal.len() {
            fail(
                "universal-twin-count",
                format!(
                    "universal vertex {v} has count {}, |U| = {}",
                    counts.get(v),
                    universal.len()
                ),
            );
        }
    }
}

/// A closed twin of an element of prime-power order p^r itself has order a
/// power of the same prime (possibly 1).
fn check_twins_share_prime(
    fail: &mut impl FnMut(&'static str, String),
    group: &FiniteGroup,
    power: &Graph,
) {
    for h in 0..group.order() {
        let Some(p) = prime_power_base(group.element_order(h) as u64) else {
            continue;
        };
        for k in closed_twins(power, h) {
            let d = group.element_order(k) as u64;
            if d != 1 && prime_power_base(d) != Some(p) {
                fail(
                    "twins-share-prime",
                    format!(
                        "element {h} of order {} has twin {k} of order {d}",
                        group.element_order(h)
                    ),
                );
            }
        }
    }
}

/// Reconstruction only ever adds edges, never removes; complete inputs are
/// fixed points.
fn check_output_contains_input(
    fail: &mut impl FnMut(&'static str, String),
    power: &Graph,
    reconstructed: &Graph,
    report: &ReconstructionReport,
) {
    if !power.is_spanning_subgraph_of(reconstructed) {
        fail(
            "output-contains-input",
            "reconstruction dropped an input edge".to_string(),
        );
    }
    if report.input_class == InputClass::Complete && reconstructed != power {
        fail(
            "complete-input-fixed-point",
            "complete input was not returned unchanged".to_string(),
        );
    }
}

/// The difference graph built through reconstruction equals the one built
/// from ground truth.
fn check_difference_consistency(
    fail: &mut impl FnMut(&'static str, String),
    power: &Graph,
    reconstructed: &Graph,
    truth: &Graph,
) {
    let via_reconstruction = difference_graph(power, reconstructed);
    let via_truth = difference_graph(power, truth);
    if via_reconstruction != via_truth {
        fail(
            "difference-consistency",
            format!(
                "reconstructed difference keeps {:?}, ground truth keeps {:?}",
                via_reconstruction.original_indices, via_truth.original_indices
            ),
        );
    }
}

/// Every pairwise-decided edge must carry a valid witness: a common
/// neighbor whose count passes the rule's threshold.
fn check_witnesses(
    fail: &mut impl FnMut(&'static str, String),
    power: &Graph,
    counts: &TwinCounts,
    report: &ReconstructionReport,
) {
    for edge in &report.added_edges {
        match (report.input_class, edge.witness) {
            (InputClass::NonCyclic, Some(w)) => {
                if !power.has_edge(edge.a, w) || !power.has_edge(edge.b, w) {
                    fail(
                        "witness-is-common-neighbor",
                        format!("edge ({},{}) witness {w} is not a common neighbor", edge.a, edge.b),
                    );
                }
                let (ka, kb, kw) = (counts.get(edge.a), counts.get(edge.b), counts.get(w));
                let ok = if ka == kb { kw > ka } else { kw >= ka.max(kb) };
                if !ok {
                    fail(
                        "witness-count-threshold",
                        format!(
                            "edge ({},{}) counts ({ka},{kb}) witness {w} count {kw}",
                            edge.a, edge.b
                        ),
                    );
                }
            }
            (InputClass::NonCyclic, None) => {
                fail(
                    "witness-is-common-neighbor",
                    format!("edge ({},{}) lacks a witness", edge.a, edge.b),
                );
            }
            (InputClass::CyclicNonPrimePower, None) => {}
            (InputClass::CyclicNonPrimePower, Some(w)) => {
                fail(
                    "witness-count-threshold",
                    format!(
                        "edge ({},{}) in a completed graph carries spurious witness {w}",
                        edge.a, edge.b
                    ),
                );
            }
            (InputClass::Complete, _) => {
                fail(
                    "witness-is-common-neighbor",
                    "complete input reported added edges".to_string(),
                );
            }
        }
    }
}

/// Within any cyclic subgroup, order divisibility forces power-graph
/// adjacency.
fn check_divisibility_adjacency(
    fail: &mut impl FnMut(&'static str, String),
    group: &FiniteGroup,
    power: &Graph,
) {
    let poset = group.cyclic_subgroup_poset();
    for id in 0..poset.len() {
        let members = poset.subgroup(id);
        for &a in members {
            for &b in members {
                if a != b
                    && group.element_order(b) % group.element_order(a) == 0
                    && !power.has_edge(a, b)
                {
                    fail(
                        "divisibility-forces-adjacency",
                        format!(
                            "orders {} | {} within a cyclic subgroup but ({a},{b}) not adjacent",
                            group.element_order(a),
                            group.element_order(b)
                        ),
                    );
                }
            }
        }
    }
}
