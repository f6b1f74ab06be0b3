//! Finite groups as Cayley tables, standard family constructors, and
//! cyclic-subgroup machinery.
//!
//! Everything in this crate works from the multiplication table alone, so a
//! single representation covers cyclic, dihedral, generalized quaternion and
//! symmetric groups, direct products, and externally supplied tables. The
//! table costs O(n^2) memory, which is fine at the desk-scale orders this
//! crate targets (see [`MAX_ORDER`]).

use std::collections::BTreeSet;
use std::fmt;
use std::path::PathBuf;

use thiserror::Error;

use crate::cayley;
use crate::numtheory::euler_phi;

/// Hard cap on group order. The exhaustive associativity check is O(n^3),
/// so tables beyond this size are rejected rather than silently slow.
pub const MAX_ORDER: usize = 512;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("cyclic group requires order >= 1")]
    CyclicOrder,
    #[error("dihedral family requires n >= 1 (group order 2n)")]
    DihedralParameter,
    #[error("generalized quaternion requires exponent >= 3 (group order 2^n), got {0}")]
    QuaternionExponent(u32),
    #[error("symmetric group requires degree >= 1")]
    SymmetricDegree,
    #[error("direct product requires at least one factor")]
    EmptyProduct,
    #[error("group order {order} exceeds the supported maximum {MAX_ORDER}")]
    OrderTooLarge { order: usize },
    #[error("unknown group family '{0}'")]
    UnknownFamily(String),
    #[error("family '{family}' expects {expected} parameter(s), got {found}")]
    ParameterCount {
        family: &'static str,
        expected: &'static str,
        found: usize,
    },
    #[error("failed to read Cayley table {path}: {source}")]
    TableRead {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("invalid Cayley table {path}: {source}")]
    TableInvalid {
        path: PathBuf,
        source: cayley::CayleyError,
    },
}

/// Declarative description of a group to construct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    /// Cyclic group of order `n >= 1`.
    Cyclic(usize),
    /// Dihedral group with `n >= 1` rotations (order `2n`).
    Dihedral(usize),
    /// Generalized quaternion group of order `2^n`, `n >= 3`.
    GeneralizedQuaternion(u32),
    /// Symmetric group on `n >= 1` points (order `n!`).
    Symmetric(usize),
    /// Direct product of the factor groups.
    DirectProduct(Vec<GroupSpec>),
    /// Cayley table loaded from a CSV file.
    External(PathBuf),
}

impl GroupSpec {
    /// Parses a CLI-style family name plus integer parameters.
    ///
    /// Families: `cyclic N`, `dihedral N`, `q N` (exponent, order `2^N`),
    /// `symmetric N`, `product N1 N2 ...` (product of cyclic factors).
    pub fn from_family(family: &str, params: &[usize]) -> Result<Self, GroupError> {
        let one = |family: &'static str| -> Result<usize, GroupError> {
            match params {
                [n] => Ok(*n),
                _ => Err(GroupError::ParameterCount {
                    family,
                    expected: "1",
                    found: params.len(),
                }),
            }
        };
        match family {
            "cyclic" | "c" | "z" => Ok(GroupSpec::Cyclic(one("cyclic")?)),
            "dihedral" | "d" => Ok(GroupSpec::Dihedral(one("dihedral")?)),
            "q" | "quaternion" | "generalized-quaternion" => {
                let n = one("generalized-quaternion")?;
                Ok(GroupSpec::GeneralizedQuaternion(n as u32))
            }
            "symmetric" | "s" => Ok(GroupSpec::Symmetric(one("symmetric")?)),
            "product" | "p" => {
                if params.is_empty() {
                    return Err(GroupError::ParameterCount {
                        family: "product",
                        expected: "1 or more",
                        found: 0,
                    });
                }
                Ok(GroupSpec::DirectProduct(
                    params.iter().map(|&n| GroupSpec::Cyclic(n)).collect(),
                ))
            }
            other => Err(GroupError::UnknownFamily(other.to_string())),
        }
    }

    /// Family keyword used by catalog filters.
    pub fn family_name(&self) -> &'static str {
        match self {
            GroupSpec::Cyclic(_) => "cyclic",
            GroupSpec::Dihedral(_) => "dihedral",
            GroupSpec::GeneralizedQuaternion(_) => "quaternion",
            GroupSpec::Symmetric(_) => "symmetric",
            GroupSpec::DirectProduct(_) => "product",
            GroupSpec::External(_) => "table",
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic({n})"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral({n})"),
            GroupSpec::GeneralizedQuaternion(n) => write!(f, "generalized-quaternion({n})"),
            GroupSpec::Symmetric(n) => write!(f, "symmetric({n})"),
            GroupSpec::DirectProduct(fs) => {
                write!(f, "product(")?;
                for (i, s) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{s}")?;
                }
                write!(f, ")")
            }
            GroupSpec::External(p) => write!(f, "table({})", p.display()),
        }
    }
}

/// A finite group given by its full multiplication table.
///
/// Element 0 is always the identity. Construction validates the table
/// exhaustively: closure, the identity law, the Latin-square property
/// (which together with associativity gives inverses), and associativity
/// itself.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>, // row-major order x order
    orders: Vec<usize>,
    labels: Vec<String>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

/// A defect found while validating a multiplication table.
///
/// Family constructors treat any defect as an internal bug; the Cayley CSV
/// reader maps defects to line-numbered errors for the user.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableDefect {
    OutOfRange { row: usize, col: usize, value: usize },
    IdentityLaw { row: usize, col: usize },
    RowRepeats { row: usize, value: usize },
    ColumnRepeats { col: usize, value: usize },
    NotAssociative { i: usize, j: usize, k: usize },
}

impl fmt::Display for TableDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableDefect::OutOfRange { row, col, value } => {
                write!(f, "entry ({row},{col}) = {value} is outside the element range")
            }
            TableDefect::IdentityLaw { row, col } => {
                write!(f, "identity law fails at ({row},{col})")
            }
            TableDefect::RowRepeats { row, value } => {
                write!(f, "row {row} repeats value {value} (not a Latin square)")
            }
            TableDefect::ColumnRepeats { col, value } => {
                write!(f, "column {col} repeats value {value} (not a Latin square)")
            }
            TableDefect::NotAssociative { i, j, k } => {
                write!(f, "associativity fails for the triple ({i},{j},{k})")
            }
        }
    }
}

/// Checks closure and the Latin-square property of a flat `n x n` table.
pub(crate) fn check_latin(order: usize, table: &[usize]) -> Result<(), TableDefect> {
    debug_assert_eq!(table.len(), order * order);
    for row in 0..order {
        for col in 0..order {
            let v = table[row * order + col];
            if v >= order {
                return Err(TableDefect::OutOfRange { row, col, value: v });
            }
        }
    }
    let mut seen = vec![false; order];
    for row in 0..order {
        seen.iter_mut().for_each(|s| *s = false);
        for col in 0..order {
            let v = table[row * order + col];
            if seen[v] {
                return Err(TableDefect::RowRepeats { row, value: v });
            }
            seen[v] = true;
        }
    }
    for col in 0..order {
        seen.iter_mut().for_each(|s| *s = false);
        for row in 0..order {
            let v = table[row * order + col];
            if seen[v] {
                return Err(TableDefect::ColumnRepeats { col, value: v });
            }
            seen[v] = true;
        }
    }
    Ok(())
}

/// Checks associativity of a closed table by exhaustive triple scan.
pub(crate) fn check_associative(order: usize, table: &[usize]) -> Result<(), TableDefect> {
    for i in 0..order {
        for j in 0..order {
            let ij = table[i * order + j];
            for k in 0..order {
                let jk = table[j * order + k];
                if table[ij * order + k] != table[i * order + jk] {
                    return Err(TableDefect::NotAssociative { i, j, k });
                }
            }
        }
    }
    Ok(())
}

/// Checks that element 0 is a two-sided identity.
pub(crate) fn check_identity_zero(order: usize, table: &[usize]) -> Result<(), TableDefect> {
    for i in 0..order {
        if table[i] != i {
            return Err(TableDefect::IdentityLaw { row: 0, col: i });
        }
        if table[i * order] != i {
            return Err(TableDefect::IdentityLaw { row: i, col: 0 });
        }
    }
    Ok(())
}

impl FiniteGroup {
    /// Builds a group from constructor output. Panics on any table defect,
    /// since family constructors are supposed to emit valid tables.
    fn from_parts(order: usize, table: Vec<usize>, labels: Vec<String>) -> Self {
        assert!(order >= 1 && table.len() == order * order && labels.len() == order);
        check_latin(order, &table).expect("constructor produced a non-Latin table");
        check_identity_zero(order, &table).expect("constructor misplaced the identity");
        check_associative(order, &table).expect("constructor produced a non-associative table");
        let mut group = FiniteGroup {
            order,
            table,
            orders: Vec::new(),
            labels,
        };
        group.orders = (0..order).map(|a| group.compute_order(a)).collect();
        group
    }

    /// Builds a group from an externally supplied table whose identity is
    /// already at index 0 and which has already been fully validated.
    pub(crate) fn from_validated_table(order: usize, table: Vec<usize>, labels: Vec<String>) -> Self {
        Self::from_parts(order, table, labels)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The identity element; always index 0 by construction.
    pub fn identity(&self) -> usize {
        0
    }

    /// Product of elements `a` and `b`.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        assert!(a < self.order && b < self.order, "element index out of range");
        self.table[a * self.order + b]
    }

    pub fn element_name(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn element_names(&self) -> &[String] {
        &self.labels
    }

    fn compute_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut d = 1;
        while x != 0 {
            x = self.mul(x, a);
            d += 1;
        }
        // Lagrange sanity check
        assert!(self.order % d == 0, "element order {d} does not divide {}", self.order);
        d
    }

    /// Multiplicative order of `a`: the smallest `d >= 1` with `a^d = e`.
    pub fn element_order(&self, a: usize) -> usize {
        assert!(a < self.order, "element index out of range");
        self.orders[a]
    }

    /// The cyclic subgroup `<a> = {e, a, a^2, ...}`, as a sorted element list.
    pub fn cyclic_subgroup(&self, a: usize) -> Vec<usize> {
        assert!(a < self.order, "element index out of range");
        let mut members = Vec::with_capacity(self.orders[a]);
        members.push(0);
        let mut x = a;
        while x != 0 {
            members.push(x);
            x = self.mul(x, a);
        }
        members.sort_unstable();
        debug_assert_eq!(members.len(), self.orders[a]);
        members
    }

    /// Generators of `<a>`: the elements `b` of `<a>` with `<b> = <a>`.
    /// There are exactly `phi(|<a>|)` of them.
    pub fn generators_of_cyclic(&self, a: usize) -> Vec<usize> {
        let target = self.orders[a];
        let gens: Vec<usize> = self
            .cyclic_subgroup(a)
            .into_iter()
            .filter(|&b| self.orders[b] == target)
            .collect();
        debug_assert_eq!(gens.len() as u64, euler_phi(target as u64));
        gens
    }

    /// True iff some element generates the whole group.
    pub fn is_cyclic(&self) -> bool {
        self.orders.iter().any(|&d| d == self.order)
    }

    /// Number of elements of order exactly 2.
    pub fn involution_count(&self) -> usize {
        self.orders.iter().filter(|&&d| d == 2).count()
    }

    /// Structural test for the generalized quaternion groups of order `2^n`:
    /// a non-cyclic 2-group with a unique involution. Detection never looks
    /// at the originating [`GroupSpec`], so externally ingested tables are
    /// classified correctly.
    pub fn is_generalized_quaternion(&self) -> bool {
        self.order >= 8
            && self.order.is_power_of_two()
            && !self.is_cyclic()
            && self.involution_count() == 1
    }

    /// True iff every non-identity element has prime-power order.
    pub fn is_eppo(&self) -> bool {
        self.orders
            .iter()
            .all(|&d| d == 1 || crate::numtheory::is_prime_power(d as u64))
    }

    /// Histogram of element orders, keyed by order.
    pub fn element_order_histogram(&self) -> std::collections::BTreeMap<usize, usize> {
        let mut hist = std::collections::BTreeMap::new();
        for &d in &self.orders {
            *hist.entry(d).or_insert(0) += 1;
        }
        hist
    }

    /// Enumerates all cyclic subgroups together with their inclusion order.
    pub fn cyclic_subgroup_poset(&self) -> CyclicSubgroupPoset {
        CyclicSubgroupPoset::new(self)
    }
}

/// All cyclic subgroups of a group, ordered by size then lexicographically
/// by element list, with the strict inclusion relation between them.
#[derive(Debug, Clone)]
pub struct CyclicSubgroupPoset {
    subgroups: Vec<Vec<usize>>,
    representatives: Vec<usize>,
    element_subgroup: Vec<usize>,
    inclusion: BTreeSet<(usize, usize)>,
}

impl CyclicSubgroupPoset {
    fn new(group: &FiniteGroup) -> Self {
        let n = group.order();
        let mut subgroups: Vec<Vec<usize>> = Vec::new();
        let mut membership: Vec<Option<usize>> = vec![None; n];
        for a in 0..n {
            let set = group.cyclic_subgroup(a);
            let id = subgroups.iter().position(|s| *s == set).unwrap_or_else(|| {
                subgroups.push(set.clone());
                subgroups.len() - 1
            });
            membership[a] = Some(id);
        }
        // Deterministic order: by size, then lexicographic on the element list.
        let mut order: Vec<usize> = (0..subgroups.len()).collect();
        order.sort_by(|&i, &j| {
            subgroups[i]
                .len()
                .cmp(&subgroups[j].len())
                .then_with(|| subgroups[i].cmp(&subgroups[j]))
        });
        let mut remap = vec![0usize; subgroups.len()];
        for (new_id, &old_id) in order.iter().enumerate() {
            remap[old_id] = new_id;
        }
        let mut sorted_subgroups = vec![Vec::new(); subgroups.len()];
        for (old_id, set) in subgroups.into_iter().enumerate() {
            sorted_subgroups[remap[old_id]] = set;
        }
        let element_subgroup: Vec<usize> =
            membership.into_iter().map(|id| remap[id.unwrap()]).collect();

        // Representative: the smallest element index that generates the subgroup.
        let mut representatives = vec![usize::MAX; sorted_subgroups.len()];
        for a in 0..n {
            let id = element_subgroup[a];
            if group.element_order(a) == sorted_subgroups[id].len() {
                representatives[id] = representatives[id].min(a);
            }
        }

        let mut inclusion = BTreeSet::new();
        for s in 0..sorted_subgroups.len() {
            for t in 0..sorted_subgroups.len() {
                if s != t
                    && sorted_subgroups[s].len() < sorted_subgroups[t].len()
                    && is_sorted_subset(&sorted_subgroups[s], &sorted_subgroups[t])
                {
                    inclusion.insert((s, t));
                }
            }
        }

        CyclicSubgroupPoset {
            subgroups: sorted_subgroups,
            representatives,
            element_subgroup,
            inclusion,
        }
    }

    /// Number of distinct cyclic subgroups.
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    /// Sorted element list of subgroup `id`.
    pub fn subgroup(&self, id: usize) -> &[usize] {
        &self.subgroups[id]
    }

    pub fn subgroups(&self) -> &[Vec<usize>] {
        &self.subgroups
    }

    /// Smallest element index generating subgroup `id`.
    pub fn representative(&self, id: usize) -> usize {
        self.representatives[id]
    }

    /// Id of the subgroup generated by element `a`.
    pub fn subgroup_of(&self, a: usize) -> usize {
        self.element_subgroup[a]
    }

    /// Strict inclusion: subgroup `s` is a proper subset of subgroup `t`.
    pub fn properly_included(&self, s: usize, t: usize) -> bool {
        self.inclusion.contains(&(s, t))
    }

    /// Inclusion-or-equality between subgroup ids.
    pub fn included(&self, s: usize, t: usize) -> bool {
        s == t || self.properly_included(s, t)
    }

    /// All strict inclusion pairs `(s, t)`.
    pub fn inclusion_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.inclusion.iter().copied()
    }
}

/// Subset test on sorted slices.
pub(crate) fn is_sorted_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    'outer: for x in small {
        for y in it.by_ref() {
            match y.cmp(x) {
                std::cmp::Ordering::Less => continue,
                std::cmp::Ordering::Equal => continue 'outer,
                std::cmp::Ordering::Greater => return false,
            }
        }
        return false;
    }
    true
}

/// Constructs the group described by `spec`.
///
/// Construction is deterministic: the same spec always yields the identical
/// table and element names, with the identity at index 0.
pub fn make_group(spec: &GroupSpec) -> Result<FiniteGroup, GroupError> {
    match spec {
        GroupSpec::Cyclic(n) => {
            if *n < 1 {
                return Err(GroupError::CyclicOrder);
            }
            check_order(*n)?;
            Ok(build_cyclic(*n))
        }
        GroupSpec::Dihedral(n) => {
            if *n < 1 {
                return Err(GroupError::DihedralParameter);
            }
            check_order(2 * *n)?;
            Ok(build_dihedral(*n))
        }
        GroupSpec::GeneralizedQuaternion(m) => {
            if *m < 3 {
                return Err(GroupError::QuaternionExponent(*m));
            }
            let order = 1usize
                .checked_shl(*m)
                .filter(|&o| o <= MAX_ORDER)
                .ok_or(GroupError::OrderTooLarge { order: usize::MAX })?;
            Ok(build_quaternion(order))
        }
        GroupSpec::Symmetric(n) => {
            if *n < 1 {
                return Err(GroupError::SymmetricDegree);
            }
            let order = factorial_checked(*n).ok_or(GroupError::OrderTooLarge { order: usize::MAX })?;
            check_order(order)?;
            Ok(build_symmetric(*n))
        }
        GroupSpec::DirectProduct(factors) => {
            if factors.is_empty() {
                return Err(GroupError::EmptyProduct);
            }
            let groups = factors
                .iter()
                .map(make_group)
                .collect::<Result<Vec<_>, _>>()?;
            let order = groups
                .iter()
                .try_fold(1usize, |acc, g| acc.checked_mul(g.order()))
                .ok_or(GroupError::OrderTooLarge { order: usize::MAX })?;
            check_order(order)?;
            Ok(build_product(&groups))
        }
        GroupSpec::External(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| GroupError::TableRead {
                path: path.clone(),
                source,
            })?;
            cayley::parse_cayley_csv(&text).map_err(|source| GroupError::TableInvalid {
                path: path.clone(),
                source,
            })
        }
    }
}

fn check_order(order: usize) -> Result<(), GroupError> {
    if order > MAX_ORDER {
        Err(GroupError::OrderTooLarge { order })
    } else {
        Ok(())
    }
}

fn factorial_checked(n: usize) -> Option<usize> {
    (1..=n).try_fold(1usize, |acc, k| {
        acc.checked_mul(k).filter(|&v| v <= MAX_ORDER)
    })
}

fn build_cyclic(n: usize) -> FiniteGroup {
    let mut table = vec![0usize; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = (i + j) % n;
        }
    }
    let labels = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    FiniteGroup::from_parts(n, table, labels)
}

/// Dihedral group of order `2n`: indices `k` are the rotations `r^k`,
/// indices `n + k` the reflections `s r^k`, with `r^k s = s r^{-k}`.
fn build_dihedral(n: usize) -> FiniteGroup {
    let order = 2 * n;
    let idx = |flip: usize, k: usize| flip * n + k;
    let mut table = vec![0usize; order * order];
    for f1 in 0..2 {
        for k1 in 0..n {
            for f2 in 0..2 {
                for k2 in 0..n {
                    // (s^f1 r^k1)(s^f2 r^k2) = s^(f1 xor f2) r^((-1)^f2 k1 + k2)
                    let k = if f2 == 0 {
                        (k1 + k2) % n
                    } else {
                        (n - k1 + k2) % n
                    };
                    table[idx(f1, k1) * order + idx(f2, k2)] = idx(f1 ^ f2, k);
                }
            }
        }
    }
    let mut labels = Vec::with_capacity(order);
    for k in 0..n {
        labels.push(match k {
            0 => "e".to_string(),
            1 => "r".to_string(),
            _ => format!("r^{k}"),
        });
    }
    for k in 0..n {
        labels.push(match k {
            0 => "s".to_string(),
            1 => "sr".to_string(),
            _ => format!("sr^{k}"),
        });
    }
    FiniteGroup::from_parts(order, table, labels)
}

/// Generalized quaternion group of order `2^m` built as the dicyclic group
/// with presentation `<x, y | x^(2^(m-1)) = e, y^2 = x^(2^(m-2)), y^-1 x y = x^-1>`.
/// Indices `i` are `x^i`, indices `half + i` are `x^i y`.
fn build_quaternion(order: usize) -> FiniteGroup {
    let half = order / 2;
    let idx = |i: usize, j: usize| j * half + i;
    let mut table = vec![0usize; order * order];
    for i1 in 0..half {
        for j1 in 0..2 {
            for i2 in 0..half {
                for j2 in 0..2 {
                    // x^i1 y^j1 x^i2 y^j2 = x^(i1 + (-1)^j1 i2) y^(j1+j2), with
                    // y^2 = x^(half/2).
                    let mut i = if j1 == 0 {
                        (i1 + i2) % half
                    } else {
                        (i1 + half - i2) % half
                    };
                    let j = (j1 + j2) % 2;
                    if j1 == 1 && j2 == 1 {
                        i = (i + half / 2) % half;
                    }
                    table[idx(i1, j1) * order + idx(i2, j2)] = idx(i, j);
                }
            }
        }
    }
    let mut labels = Vec::with_capacity(order);
    for i in 0..half {
        labels.push(match i {
            0 => "e".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        });
    }
    for i in 0..half {
        labels.push(match i {
            0 => "y".to_string(),
            1 => "xy".to_string(),
            _ => format!("x^{i}y"),
        });
    }
    FiniteGroup::from_parts(order, table, labels)
}

/// Symmetric group on `n` points. Elements are the permutations of `[0, n)`
/// in lexicographic one-line order, so the identity comes first. The product
/// `p * q` is the composite "apply `q`, then `p`".
fn build_symmetric(n: usize) -> FiniteGroup {
    let perms = lexicographic_permutations(n);
    let order = perms.len();
    let rank = |p: &[usize]| -> usize {
        perms
            .binary_search_by(|q| q.as_slice().cmp(p))
            .expect("composite of permutations is a permutation")
    };
    let mut table = vec![0usize; order * order];
    let mut scratch = vec![0usize; n];
    for (i, p) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            for (x, slot) in scratch.iter_mut().enumerate() {
                *slot = p[q[x]];
            }
            table[i * order + j] = rank(&scratch);
        }
    }
    let labels = perms.iter().map(|p| cycle_notation(p)).collect();
    FiniteGroup::from_parts(order, table, labels)
}

fn lexicographic_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut perms = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        perms.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    perms
}

/// Disjoint-cycle notation with 1-based points; fixed points omitted.
fn cycle_notation(p: &[usize]) -> String {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        loop {
            seen[x] = true;
            if x != start {
                out.push(' ');
            }
            out.push_str(&(x + 1).to_string());
            x = p[x];
            if x == start {
                break;
            }
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

/// Direct product with mixed-radix element indexing; index 0 is the tuple
/// of identities.
fn build_product(groups: &[FiniteGroup]) -> FiniteGroup {
    let sizes: Vec<usize> = groups.iter().map(|g| g.order()).collect();
    let order: usize = sizes.iter().product();
    let decode = |mut idx: usize| -> Vec<usize> {
        let mut tuple = vec![0usize; sizes.len()];
        for k in (0..sizes.len()).rev() {
            tuple[k] = idx % sizes[k];
            idx /= sizes[k];
        }
        tuple
    };
    let encode = |tuple: &[usize]| -> usize {
        tuple
            .iter()
            .zip(&sizes)
            .fold(0usize, |acc, (&t, &s)| acc * s + t)
    };
    let mut table = vec![0usize; order * order];
    for a in 0..order {
        let ta = decode(a);
        for b in 0..order {
            let tb = decode(b);
            let product: Vec<usize> = groups
                .iter()
                .enumerate()
                .map(|(k, g)| g.mul(ta[k], tb[k]))
                .collect();
            table[a * order + b] = encode(&product);
        }
    }
    let labels = (0..order)
        .map(|a| {
            let tuple = decode(a);
            let parts: Vec<&str> = groups
                .iter()
                .enumerate()
                .map(|(k, g)| g.element_name(tuple[k]))
                .collect();
            format!("({})", parts.join(", "))
        })
        .collect();
    FiniteGroup::from_parts(order, table, labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::lcm;

    /// Order oracle: repeated multiplication straight off the table.
    fn order_by_powers(g: &FiniteGroup, a: usize) -> usize {
        let mut x = a;
        let mut d = 1;
        while x != g.identity() {
            x = g.mul(x, a);
            d += 1;
        }
        d
    }

    #[test]
    fn trivial_group_table() {
        let g = make_group(&GroupSpec::Cyclic(1)).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.mul(0, 0), 0);
        assert_eq!(g.element_name(0), "e");
    }

    #[test]
    fn quaternion8_has_unique_involution() {
        let g = make_group(&GroupSpec::GeneralizedQuaternion(3)).unwrap();
        assert_eq!(g.order(), 8);
        let involutions: Vec<usize> = (0..8).filter(|&a| order_by_powers(&g, a) == 2).collect();
        assert_eq!(involutions.len(), 1);
        assert!(g.is_generalized_quaternion());
    }

    #[test]
    fn dihedral6_has_seven_involutions() {
        let g = make_group(&GroupSpec::Dihedral(6)).unwrap();
        assert_eq!(g.order(), 12);
        let count = (0..12).filter(|&a| order_by_powers(&g, a) == 2).count();
        assert_eq!(count, 7);
    }

    #[test]
    fn element_orders() {
        let c12 = make_group(&GroupSpec::Cyclic(12)).unwrap();
        assert_eq!(c12.element_order(c12.identity()), 1);
        assert_eq!(c12.element_order(1), 12);
        let q8 = make_group(&GroupSpec::GeneralizedQuaternion(3)).unwrap();
        let involution = (0..8).find(|&a| q8.element_order(a) == 2).unwrap();
        assert_eq!(order_by_powers(&q8, involution), 2);
        // Lagrange across a few groups
        for spec in [GroupSpec::Dihedral(5), GroupSpec::Symmetric(4)] {
            let g = make_group(&spec).unwrap();
            for a in 0..g.order() {
                assert_eq!(g.element_order(a), order_by_powers(&g, a));
                assert_eq!(g.order() % g.element_order(a), 0);
            }
        }
    }

    #[test]
    fn cyclic_subgroup_contents() {
        let c6 = make_group(&GroupSpec::Cyclic(6)).unwrap();
        assert_eq!(c6.cyclic_subgroup(c6.identity()), vec![0]);
        let order3 = (0..6).find(|&a| c6.element_order(a) == 3).unwrap();
        assert_eq!(c6.cyclic_subgroup(order3).len(), 3);
        let d3 = make_group(&GroupSpec::Dihedral(3)).unwrap();
        for r in 3..6 {
            // reflections are involutions
            assert_eq!(c6.identity(), 0);
            assert_eq!(d3.cyclic_subgroup(r), vec![0, r]);
        }
    }

    #[test]
    fn generator_sets_match_phi() {
        let c6 = make_group(&GroupSpec::Cyclic(6)).unwrap();
        assert_eq!(c6.generators_of_cyclic(0), vec![0]);
        assert_eq!(c6.generators_of_cyclic(1), vec![1, 5]);
        let c8 = make_group(&GroupSpec::Cyclic(8)).unwrap();
        assert_eq!(c8.generators_of_cyclic(1).len(), 4);
        // Oracle: literal subgroup-equality test.
        for g in [&c6, &c8] {
            for a in 0..g.order() {
                let sub = g.cyclic_subgroup(a);
                let expected: Vec<usize> = sub
                    .iter()
                    .copied()
                    .filter(|&b| g.cyclic_subgroup(b) == sub)
                    .collect();
                assert_eq!(g.generators_of_cyclic(a), expected);
            }
        }
    }

    #[test]
    fn poset_shapes() {
        let trivial = make_group(&GroupSpec::Cyclic(1)).unwrap();
        let p = trivial.cyclic_subgroup_poset();
        assert_eq!(p.len(), 1);
        assert_eq!(p.inclusion_pairs().count(), 0);

        let q8 = make_group(&GroupSpec::GeneralizedQuaternion(3)).unwrap();
        let p = q8.cyclic_subgroup_poset();
        let sizes: Vec<usize> = p.subgroups().iter().map(|s| s.len()).collect();
        assert_eq!(sizes, vec![1, 2, 4, 4, 4]);

        let c6 = make_group(&GroupSpec::Cyclic(6)).unwrap();
        let p = c6.cyclic_subgroup_poset();
        let sizes: Vec<usize> = p.subgroups().iter().map(|s| s.len()).collect();
        assert_eq!(sizes, vec![1, 2, 3, 6]);
        // diamond: {e} below everything, both proper subgroups below the whole group
        let pairs: Vec<(usize, usize)> = p.inclusion_pairs().collect();
        assert_eq!(pairs, vec![(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]);
    }

    #[test]
    fn poset_trivial_subgroup_below_everything() {
        for spec in [
            GroupSpec::Dihedral(6),
            GroupSpec::Symmetric(4),
            GroupSpec::GeneralizedQuaternion(4),
        ] {
            let g = make_group(&spec).unwrap();
            let p = g.cyclic_subgroup_poset();
            assert_eq!(p.subgroup(0), &[0]);
            for t in 1..p.len() {
                assert!(p.properly_included(0, t));
            }
            // strict partial order: irreflexive + transitive
            for (s, t) in p.inclusion_pairs() {
                assert_ne!(s, t);
                for (u, v) in p.inclusion_pairs() {
                    if t == u {
                        assert!(p.properly_included(s, v));
                    }
                }
            }
        }
    }

    #[test]
    fn representative_is_smallest_generator() {
        let d6 = make_group(&GroupSpec::Dihedral(6)).unwrap();
        let p = d6.cyclic_subgroup_poset();
        for id in 0..p.len() {
            let rep = p.representative(id);
            assert_eq!(d6.cyclic_subgroup(rep), p.subgroup(id));
            for a in 0..rep {
                assert!(d6.cyclic_subgroup(a) != p.subgroup(id));
            }
        }
    }

    #[test]
    fn product_orders_are_lcm() {
        let spec = GroupSpec::DirectProduct(vec![GroupSpec::Cyclic(4), GroupSpec::Cyclic(6)]);
        let g = make_group(&spec).unwrap();
        let c4 = make_group(&GroupSpec::Cyclic(4)).unwrap();
        let c6 = make_group(&GroupSpec::Cyclic(6)).unwrap();
        assert_eq!(g.order(), 24);
        for a in 0..4 {
            for b in 0..6 {
                let idx = a * 6 + b;
                let expected = lcm(c4.element_order(a) as u64, c6.element_order(b) as u64);
                assert_eq!(g.element_order(idx) as u64, expected, "({a},{b})");
            }
        }
    }

    #[test]
    fn construction_is_deterministic() {
        let spec = GroupSpec::Dihedral(6);
        let g1 = make_group(&spec).unwrap();
        let g2 = make_group(&spec).unwrap();
        assert_eq!(g1, g2);
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(matches!(
            make_group(&GroupSpec::GeneralizedQuaternion(2)),
            Err(GroupError::QuaternionExponent(2))
        ));
        assert!(matches!(
            make_group(&GroupSpec::Cyclic(0)),
            Err(GroupError::CyclicOrder)
        ));
        assert!(matches!(
            make_group(&GroupSpec::Cyclic(MAX_ORDER + 1)),
            Err(GroupError::OrderTooLarge { .. })
        ));
        assert!(matches!(
            make_group(&GroupSpec::Symmetric(6)),
            Err(GroupError::OrderTooLarge { .. })
        ));
        assert!(matches!(
            make_group(&GroupSpec::DirectProduct(vec![])),
            Err(GroupError::EmptyProduct)
        ));
    }

    #[test]
    fn family_parsing() {
        assert_eq!(
            GroupSpec::from_family("cyclic", &[6]).unwrap(),
            GroupSpec::Cyclic(6)
        );
        assert_eq!(
            GroupSpec::from_family("q", &[3]).unwrap(),
            GroupSpec::GeneralizedQuaternion(3)
        );
        assert_eq!(
            GroupSpec::from_family("product", &[2, 4]).unwrap(),
            GroupSpec::DirectProduct(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(4)])
        );
        assert!(GroupSpec::from_family("frobnicate", &[1]).is_err());
        assert!(GroupSpec::from_family("cyclic", &[]).is_err());
    }

    #[test]
    fn symmetric_labels_are_cycle_notation() {
        let s3 = make_group(&GroupSpec::Symmetric(3)).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.element_name(0), "e");
        let names: Vec<&str> = (0..6).map(|a| s3.element_name(a)).collect();
        assert!(names.contains(&"(1 2 3)"));
        assert!(names.contains(&"(1 2)"));
        assert!(names.contains(&"(2 3)"));
    }

    #[test]
    fn sorted_subset_helper() {
        assert!(is_sorted_subset(&[], &[1, 2]));
        assert!(is_sorted_subset(&[1, 3], &[1, 2, 3]));
        assert!(!is_sorted_subset(&[1, 4], &[1, 2, 3]));
        assert!(!is_sorted_subset(&[0], &[]));
    }
}
