//! A catalog of small groups with independently stated structural facts.
//!
//! Each entry records, as data, what is known about the group ahead of any
//! computation: order, cyclicity, whether every element order is a prime
//! power, whether it is generalized quaternion, and how many universal
//! vertices its power graph must have. The verification machinery replays
//! these facts against constructed groups and graphs; keeping them as
//! literals here (rather than deriving them) is what makes that a real
//! cross-check.

use crate::group::GroupSpec;
use crate::numtheory::{euler_phi, is_prime_power};

/// One catalog group and its expected structural facts.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub spec: GroupSpec,
    pub order: usize,
    pub cyclic: bool,
    /// Every non-identity element has prime-power order.
    pub eppo: bool,
    pub generalized_quaternion: bool,
    /// Universal vertices of the power graph.
    pub expected_universal_count: usize,
}

fn cyclic_entry(n: usize) -> CatalogEntry {
    let prime_power = is_prime_power(n as u64);
    CatalogEntry {
        name: format!("cyclic-{n}"),
        spec: GroupSpec::Cyclic(n),
        order: n,
        cyclic: true,
        eppo: n == 1 || prime_power,
        generalized_quaternion: false,
        expected_universal_count: if n == 1 || prime_power {
            n
        } else {
            1 + euler_phi(n as u64) as usize
        },
    }
}

fn dihedral_entry(n: usize) -> CatalogEntry {
    // n = 1 gives the cyclic group of order 2; n = 2 the Klein four group.
    let cyclic = n == 1;
    CatalogEntry {
        name: format!("dihedral-{n}"),
        spec: GroupSpec::Dihedral(n),
        order: 2 * n,
        cyclic,
        // element orders: the divisors of n, plus 2 for the reflections
        eppo: n == 1 || is_prime_power(n as u64),
        generalized_quaternion: false,
        expected_universal_count: if cyclic { 2 } else { 1 },
    }
}

fn quaternion_entry(exponent: u32) -> CatalogEntry {
    let order = 1usize << exponent;
    CatalogEntry {
        name: format!("quaternion-{order}"),
        spec: GroupSpec::GeneralizedQuaternion(exponent),
        order,
        cyclic: false,
        eppo: true,
        generalized_quaternion: true,
        expected_universal_count: 2,
    }
}

fn symmetric_entry(n: usize, order: usize, eppo: bool) -> CatalogEntry {
    CatalogEntry {
        name: format!("symmetric-{n}"),
        spec: GroupSpec::Symmetric(n),
        order,
        cyclic: false,
        eppo,
        generalized_quaternion: false,
        expected_universal_count: 1,
    }
}

fn product_entry(name: &str, factors: &[usize], eppo: bool) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        spec: GroupSpec::DirectProduct(factors.iter().map(|&n| GroupSpec::Cyclic(n)).collect()),
        order: factors.iter().product(),
        cyclic: false,
        eppo,
        generalized_quaternion: false,
        expected_universal_count: 1,
    }
}

/// The default verification catalog: cyclic groups up to order 48, dihedral
/// groups up to order 48, the three smallest generalized quaternion groups,
/// two symmetric groups, and a handful of abelian products chosen to cover
/// both prime-power-only and mixed element orders.
pub fn default_catalog() -> Vec<CatalogEntry> {
    let mut entries = Vec::new();
    for n in 1..=48 {
        entries.push(cyclic_entry(n));
    }
    for n in 1..=24 {
        entries.push(dihedral_entry(n));
    }
    for exponent in 3..=5 {
        entries.push(quaternion_entry(exponent));
    }
    entries.push(symmetric_entry(3, 6, true));
    entries.push(symmetric_entry(4, 24, true));
    entries.push(product_entry("Z2xZ2", &[2, 2], true));
    entries.push(product_entry("Z2xZ4", &[2, 4], true));
    entries.push(product_entry("Z2xZ6", &[2, 6], false));
    entries.push(product_entry("Z3xZ3", &[3, 3], true));
    entries.push(product_entry("Z2xZ2xZ3", &[2, 2, 3], false));
    entries
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_group;
    use std::collections::BTreeSet;

    #[test]
    fn catalog_is_large_and_uniquely_named() {
        let catalog = default_catalog();
        assert!(catalog.len() >= 40, "catalog has {} entries", catalog.len());
        let names: BTreeSet<&str> = catalog.iter().map(|e| e.name.as_str()).collect();
        assert_eq!(names.len(), catalog.len());
    }

    #[test]
    fn recorded_facts_match_constructed_groups() {
        for entry in default_catalog() {
            let group = make_group(&entry.spec).unwrap_or_else(|e| {
                panic!("catalog entry {} failed to construct: {e}", entry.name)
            });
            assert_eq!(group.order(), entry.order, "{}", entry.name);
            assert_eq!(group.is_cyclic(), entry.cyclic, "{}", entry.name);
            assert_eq!(group.is_eppo(), entry.eppo, "{}", entry.name);
            assert_eq!(
                group.is_generalized_quaternion(),
                entry.generalized_quaternion,
                "{}",
                entry.name
            );
        }
    }

    #[test]
    fn catalog_spans_all_input_classes() {
        let catalog = default_catalog();
        // complete power graphs (cyclic prime power), cyclic non-prime-power,
        // non-cyclic with and without quaternion structure, EPPO and not
        assert!(catalog.iter().any(|e| e.cyclic && e.eppo && e.order > 1));
        assert!(catalog.iter().any(|e| e.cyclic && !e.eppo));
        assert!(catalog.iter().any(|e| !e.cyclic && e.generalized_quaternion));
        assert!(catalog.iter().any(|e| !e.cyclic && !e.eppo));
        assert!(catalog
            .iter()
            .any(|e| !e.cyclic && e.eppo && !e.generalized_quaternion));
    }
}
