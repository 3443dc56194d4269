//! Correct-by-construction example families. Valid whiskerings are sparse in
//! the space of tables, so the checkers are seeded from these families plus
//! mutation testing rather than rejection sampling.

use std::fmt;

use thiserror::Error;

use crate::core::{FiniteCategory, FiniteGroupoid, MorId, ObjId};
use crate::whisker::{BaseCategory, WhiskeredCategory, Whiskering};

/// A finite monoid as an explicit product table with named elements.
#[derive(Clone, Debug)]
pub struct MonoidTable {
    pub name: String,
    pub element_names: Vec<String>,
    pub unit: u32,
    table: Vec<u32>,
}

impl MonoidTable {
    pub fn new(name: &str, element_names: Vec<String>, unit: u32, table: Vec<u32>) -> MonoidTable {
        assert_eq!(table.len(), element_names.len() * element_names.len());
        MonoidTable { name: name.to_string(), element_names, unit, table }
    }

    pub fn size(&self) -> u32 {
        self.element_names.len() as u32
    }

    pub fn product(&self, x: u32, y: u32) -> u32 {
        self.table[(x * self.size() + y) as usize]
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.size();
        (0..n).all(|x| (0..n).all(|y| self.product(x, y) == self.product(y, x)))
    }

    pub(crate) fn table_raw(&self) -> &[u32] {
        &self.table
    }
}

/// A finite group: a monoid table plus inverses.
#[derive(Clone, Debug)]
pub struct GroupTable {
    pub monoid: MonoidTable,
    inverse: Vec<u32>,
}

impl GroupTable {
    pub fn new(monoid: MonoidTable, inverse: Vec<u32>) -> GroupTable {
        assert_eq!(inverse.len(), monoid.size() as usize);
        GroupTable { monoid, inverse }
    }

    pub fn size(&self) -> u32 {
        self.monoid.size()
    }

    pub fn product(&self, x: u32, y: u32) -> u32 {
        self.monoid.product(x, y)
    }

    pub fn inverse(&self, x: u32) -> u32 {
        self.inverse[x as usize]
    }
}

/// Codiscrete whiskered groupoid on a monoid: objects are the monoid
/// elements, exactly one morphism per ordered pair, actions forced by
/// endpoints. Every square commutes, so every defect is trivial.
pub fn codiscrete_whiskered(m: &MonoidTable) -> WhiskeredCategory {
    let n = m.size();
    let mor = |x: u32, y: u32| x * n + y;
    let mut endpoints = Vec::with_capacity((n * n) as usize);
    for x in 0..n {
        for y in 0..n {
            endpoints.push((x, y));
        }
    }
    let identity: Vec<u32> = (0..n).map(|x| mor(x, x)).collect();
    let count = n * n;
    let mut compose = vec![None; (count * count) as usize];
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                compose[(mor(x, y) * count + mor(y, z)) as usize] = Some(mor(x, z));
            }
        }
    }
    let cat = FiniteCategory::from_tables(n, endpoints, identity, compose);
    let inverse: Vec<u32> = (0..n).flat_map(|x| (0..n).map(move |y| y * n + x)).collect();
    let groupoid = FiniteGroupoid::from_tables(cat, inverse);

    let mut left = vec![0u32; (n * count) as usize];
    let mut right = vec![0u32; (count * n) as usize];
    for o in 0..n {
        for x in 0..n {
            for y in 0..n {
                let a = mor(x, y);
                left[(o * count + a) as usize] = mor(m.product(o, x), m.product(o, y));
                right[(a * n + o) as usize] = mor(m.product(x, o), m.product(y, o));
            }
        }
    }
    let whiskering =
        Whiskering::from_tables(n, count, m.unit, m.table_raw().to_vec(), left, right);
    WhiskeredCategory { base: BaseCategory::Groupoid(groupoid), whiskering }
}

/// Why a bundle construction was refused: the offered action tables violate
/// one of the whiskering preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BundleError {
    #[error("{} action violates the unit law at group element {g}", side(*.left))]
    UnitLaw { left: bool, g: u32 },
    #[error("{} action of {x} is not a group endomorphism at ({g}, {h})", side(*.left))]
    NotEndomorphism { left: bool, x: u32, g: u32, h: u32 },
    #[error("{} action is not a monoid action at objects ({x}, {y}), element {g}", side(*.left))]
    NotAnAction { left: bool, x: u32, y: u32, g: u32 },
    #[error("left/right actions are incompatible at ({x}, {g}, {y})")]
    Incompatible { x: u32, g: u32, y: u32 },
}

fn side(left: bool) -> &'static str {
    if left {
        "left"
    } else {
        "right"
    }
}

/// Bundle of groups over a monoid of objects: one copy of `g` at each element
/// of `m`, morphisms are endomorphisms only. The action tables
/// `left[x][g]`, `right[g][y]` must be monoid actions by group
/// endomorphisms compatible with each other; this is checked, and the
/// construction refused with a witness otherwise.
pub fn bundle_of_groups(
    m: &MonoidTable,
    g: &GroupTable,
    left: &[u32],
    right: &[u32],
) -> Result<WhiskeredCategory, BundleError> {
    let nm = m.size();
    let ng = g.size();
    assert_eq!(left.len(), (nm * ng) as usize);
    assert_eq!(right.len(), (ng * nm) as usize);
    let lam = |x: u32, k: u32| left[(x * ng + k) as usize];
    let rho = |k: u32, y: u32| right[(k * nm + y) as usize];

    for k in 0..ng {
        if lam(m.unit, k) != k {
            return Err(BundleError::UnitLaw { left: true, g: k });
        }
        if rho(k, m.unit) != k {
            return Err(BundleError::UnitLaw { left: false, g: k });
        }
    }
    for x in 0..nm {
        for a in 0..ng {
            for b in 0..ng {
                if lam(x, g.product(a, b)) != g.product(lam(x, a), lam(x, b)) {
                    return Err(BundleError::NotEndomorphism { left: true, x, g: a, h: b });
                }
                if rho(g.product(a, b), x) != g.product(rho(a, x), rho(b, x)) {
                    return Err(BundleError::NotEndomorphism { left: false, x, g: a, h: b });
                }
            }
        }
        for y in 0..nm {
            for k in 0..ng {
                if lam(m.product(x, y), k) != lam(x, lam(y, k)) {
                    return Err(BundleError::NotAnAction { left: true, x, y, g: k });
                }
                if rho(k, m.product(x, y)) != rho(rho(k, x), y) {
                    return Err(BundleError::NotAnAction { left: false, x, y, g: k });
                }
                if lam(x, rho(k, y)) != rho(lam(x, k), y) {
                    return Err(BundleError::Incompatible { x, g: k, y });
                }
            }
        }
    }

    let count = nm * ng;
    let mor = |o: u32, k: u32| o * ng + k;
    let endpoints: Vec<(u32, u32)> =
        (0..nm).flat_map(|o| (0..ng).map(move |_| (o, o))).collect();
    let identity: Vec<u32> = (0..nm).map(|o| mor(o, g.monoid.unit)).collect();
    let mut compose = vec![None; (count * count) as usize];
    for o in 0..nm {
        for a in 0..ng {
            for b in 0..ng {
                compose[(mor(o, a) * count + mor(o, b)) as usize] = Some(mor(o, g.product(a, b)));
            }
        }
    }
    let cat = FiniteCategory::from_tables(nm, endpoints, identity, compose);
    let inverse: Vec<u32> =
        (0..nm).flat_map(|o| (0..ng).map(move |k| mor(o, g.inverse(k)))).collect();
    let groupoid = FiniteGroupoid::from_tables(cat, inverse);

    let mut left_tab = vec![0u32; (nm * count) as usize];
    let mut right_tab = vec![0u32; (count * nm) as usize];
    for x in 0..nm {
        for o in 0..nm {
            for k in 0..ng {
                let a = mor(o, k);
                left_tab[(x * count + a) as usize] = mor(m.product(x, o), lam(x, k));
                right_tab[(a * nm + x) as usize] = mor(m.product(o, x), rho(k, x));
            }
        }
    }
    let whiskering =
        Whiskering::from_tables(nm, count, m.unit, m.table_raw().to_vec(), left_tab, right_tab);
    Ok(WhiskeredCategory { base: BaseCategory::Groupoid(groupoid), whiskering })
}

/// One object, morphisms the elements of `n`, trivial whiskering. The base
/// is a groupoid exactly when `n` is a group.
pub fn one_object_from_monoid(n: &MonoidTable) -> WhiskeredCategory {
    let count = n.size();
    let endpoints = vec![(0u32, 0u32); count as usize];
    let identity = vec![n.unit];
    let mut compose = vec![None; (count * count) as usize];
    for a in 0..count {
        for b in 0..count {
            compose[(a * count + b) as usize] = Some(n.product(a, b));
        }
    }
    let cat = FiniteCategory::from_tables(1, endpoints, identity, compose);

    let inverse: Option<Vec<u32>> = (0..count)
        .map(|a| {
            (0..count).find(|&b| n.product(a, b) == n.unit && n.product(b, a) == n.unit)
        })
        .collect();
    let base = match inverse {
        Some(inv) => BaseCategory::Groupoid(FiniteGroupoid::from_tables(cat, inv)),
        None => BaseCategory::Plain(cat),
    };

    let left: Vec<u32> = (0..count).collect();
    let right: Vec<u32> = (0..count).collect();
    let whiskering = Whiskering::from_tables(1, count, 0, vec![0], left, right);
    WhiskeredCategory { base, whiskering }
}

/// The one-object groupoid on a group, with no whiskering attached.
pub fn one_object_group(g: &GroupTable) -> FiniteGroupoid {
    match one_object_from_monoid(&g.monoid).base {
        BaseCategory::Groupoid(gr) => gr,
        BaseCategory::Plain(_) => unreachable!("groups are invertible"),
    }
}

/// Componentwise direct product of two whiskered categories.
pub fn direct_product(w1: &WhiskeredCategory, w2: &WhiskeredCategory) -> WhiskeredCategory {
    let (c1, c2) = (w1.category(), w2.category());
    let (n1, n2) = (c1.object_count(), c2.object_count());
    let (m1, m2) = (c1.morphism_count(), c2.morphism_count());
    let obj = |x: ObjId, y: ObjId| x.0 * n2 + y.0;
    let mor = |a: MorId, b: MorId| a.0 * m2 + b.0;

    let mut endpoints = Vec::with_capacity((m1 * m2) as usize);
    for a in c1.morphisms() {
        for b in c2.morphisms() {
            endpoints.push((obj(c1.source(a), c2.source(b)), obj(c1.target(a), c2.target(b))));
        }
    }
    let mut identity = Vec::with_capacity((n1 * n2) as usize);
    for x in c1.objects() {
        for y in c2.objects() {
            identity.push(mor(c1.identity(x), c2.identity(y)));
        }
    }
    let count = m1 * m2;
    let mut compose = vec![None; (count * count) as usize];
    for a1 in c1.morphisms() {
        for a2 in c2.morphisms() {
            for b1 in c1.morphisms() {
                for b2 in c2.morphisms() {
                    if let (Some(x), Some(y)) = (c1.compose_entry(a1, b1), c2.compose_entry(a2, b2))
                    {
                        compose[(mor(a1, a2) * count + mor(b1, b2)) as usize] = Some(mor(x, y));
                    }
                }
            }
        }
    }
    let cat = FiniteCategory::from_tables(n1 * n2, endpoints, identity, compose);

    let base = match (w1.groupoid(), w2.groupoid()) {
        (Some(g1), Some(g2)) => {
            let inverse: Vec<u32> = c1
                .morphisms()
                .flat_map(|a| c2.morphisms().map(move |b| mor(g1.inverse(a), g2.inverse(b))))
                .collect();
            BaseCategory::Groupoid(FiniteGroupoid::from_tables(cat, inverse))
        }
        _ => BaseCategory::Plain(cat),
    };

    let (k1, k2) = (&w1.whiskering, &w2.whiskering);
    let n_obj = n1 * n2;
    let mut monoid = vec![0u32; (n_obj * n_obj) as usize];
    for x1 in c1.objects() {
        for x2 in c2.objects() {
            for y1 in c1.objects() {
                for y2 in c2.objects() {
                    monoid[(obj(x1, x2) * n_obj + obj(y1, y2)) as usize] =
                        obj(k1.product(x1, y1), k2.product(x2, y2));
                }
            }
        }
    }
    let mut left = vec![0u32; (n_obj * count) as usize];
    let mut right = vec![0u32; (count * n_obj) as usize];
    for x1 in c1.objects() {
        for x2 in c2.objects() {
            for a1 in c1.morphisms() {
                for a2 in c2.morphisms() {
                    let o = obj(x1, x2);
                    let a = mor(a1, a2);
                    left[(o * count + a) as usize] =
                        mor(k1.left_act(x1, a1), k2.left_act(x2, a2));
                    right[(a * n_obj + o) as usize] =
                        mor(k1.right_act(a1, x1), k2.right_act(a2, x2));
                }
            }
        }
    }
    let unit = obj(k1.unit(), k2.unit());
    let whiskering = Whiskering::from_tables(n_obj, count, unit, monoid, left, right);
    WhiskeredCategory { base, whiskering }
}

/// A named, ready-to-check structure with display names for its morphisms.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub structure: WhiskeredCategory,
    pub morphism_names: Vec<String>,
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family {0:?} (expected codiscrete, bundle, algebra or product)")]
    UnknownFamily(String),
    #[error("unknown parameter {parameter:?} for family {family:?}; available: {available}")]
    UnknownParameter { family: String, parameter: String, available: String },
    #[error("family {0:?} takes {1}")]
    Arity(String, &'static str),
    #[error(transparent)]
    Refused(#[from] BundleError),
}

pub mod presets {
    //! Fixed monoids, groups and whiskered structures used by the checkers,
    //! the command-line generator and the test suites.

    use super::*;

    /// Permutations of {0,1,2} in lexicographic order; index 0 is the
    /// identity. The composition convention applies the left factor first.
    pub fn s3_permutations() -> Vec<[usize; 3]> {
        vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ]
    }

    pub fn s4_permutations() -> Vec<[usize; 4]> {
        let mut out = Vec::with_capacity(24);
        for a in 0..4 {
            for b in 0..4 {
                if b == a {
                    continue;
                }
                for c in 0..4 {
                    if c == a || c == b {
                        continue;
                    }
                    out.push([a, b, c, 6 - a - b - c]);
                }
            }
        }
        out
    }

    /// Cycle notation on 1-based points; identity renders as "e".
    pub fn permutation_name(p: &[usize]) -> String {
        let mut seen = vec![false; p.len()];
        let mut out = String::new();
        for start in 0..p.len() {
            if seen[start] || p[start] == start {
                continue;
            }
            out.push('(');
            let mut i = start;
            loop {
                seen[i] = true;
                out.push_str(&(i + 1).to_string());
                i = p[i];
                if i == start {
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

    fn permutation_group<const N: usize>(name: &str, perms: Vec<[usize; N]>) -> GroupTable {
        let n = perms.len() as u32;
        let compose = |p: &[usize; N], q: &[usize; N]| -> [usize; N] {
            core::array::from_fn(|i| q[p[i]])
        };
        let index = |p: &[usize; N]| perms.iter().position(|r| r == p).unwrap() as u32;
        let mut table = vec![0u32; (n * n) as usize];
        let mut inverse = vec![0u32; n as usize];
        for (i, p) in perms.iter().enumerate() {
            for (j, q) in perms.iter().enumerate() {
                table[i * n as usize + j] = index(&compose(p, q));
            }
            let mut inv = [0usize; N];
            for (k, &v) in p.iter().enumerate() {
                inv[v] = k;
            }
            inverse[i] = index(&inv);
        }
        let names = perms.iter().map(|p| permutation_name(p)).collect();
        GroupTable::new(MonoidTable::new(name, names, 0, table), inverse)
    }

    fn cyclic(name: &str, n: u32) -> GroupTable {
        let names = (0..n).map(|k| k.to_string()).collect();
        let mut table = vec![0u32; (n * n) as usize];
        for a in 0..n {
            for b in 0..n {
                table[(a * n + b) as usize] = (a + b) % n;
            }
        }
        let inverse = (0..n).map(|a| (n - a) % n).collect();
        GroupTable::new(MonoidTable::new(name, names, 0, table), inverse)
    }

    pub fn group_z2() -> GroupTable {
        cyclic("z2", 2)
    }

    pub fn group_z3() -> GroupTable {
        cyclic("z3", 3)
    }

    pub fn group_z4() -> GroupTable {
        cyclic("z4", 4)
    }

    pub fn group_z2xz2() -> GroupTable {
        let names = ["1", "a", "b", "ab"].map(String::from).to_vec();
        let mut table = vec![0u32; 16];
        for x in 0..4u32 {
            for y in 0..4u32 {
                table[(x * 4 + y) as usize] = x ^ y;
            }
        }
        let inverse = (0..4).collect();
        GroupTable::new(MonoidTable::new("z2xz2", names, 0, table), inverse)
    }

    pub fn group_s3() -> GroupTable {
        permutation_group("s3", s3_permutations())
    }

    pub fn group_s4() -> GroupTable {
        permutation_group("s4", s4_permutations())
    }

    pub fn monoid_trivial() -> MonoidTable {
        MonoidTable::new("trivial", vec!["1".into()], 0, vec![0])
    }

    pub fn monoid_z2() -> MonoidTable {
        group_z2().monoid
    }

    pub fn monoid_z3() -> MonoidTable {
        group_z3().monoid
    }

    pub fn monoid_z4() -> MonoidTable {
        group_z4().monoid
    }

    pub fn monoid_z2xz2() -> MonoidTable {
        group_z2xz2().monoid
    }

    pub fn monoid_s3() -> MonoidTable {
        group_s3().monoid
    }

    /// Left-zero semigroup {a,b} with an adjoined unit: the smallest
    /// noncommutative monoid.
    pub fn monoid_lz3() -> MonoidTable {
        let names = ["1", "a", "b"].map(String::from).to_vec();
        // 1x = x1 = x; a·y = a, b·y = b for y in {a,b}
        let table = vec![
            0, 1, 2, //
            1, 1, 1, //
            2, 2, 2,
        ];
        MonoidTable::new("lz3", names, 0, table)
    }

    /// Idempotent two-element monoid {1,e} with e*e = e.
    pub fn monoid_e2() -> MonoidTable {
        MonoidTable::new("e2", ["1", "e"].map(String::from).to_vec(), 0, vec![0, 1, 1, 1])
    }

    /// Words of length <= 2 over {s,t} plus an absorbing zero; products that
    /// would exceed length 2 fall to zero. Associative by the table check.
    pub fn monoid_free2() -> MonoidTable {
        let words = ["", "s", "t", "ss", "st", "ts", "tt"];
        let names: Vec<String> = words
            .iter()
            .map(|w| if w.is_empty() { "1".to_string() } else { (*w).to_string() })
            .chain(std::iter::once("0".to_string()))
            .collect();
        let zero = 7u32;
        let n = 8u32;
        let mut table = vec![0u32; (n * n) as usize];
        for a in 0..n {
            for b in 0..n {
                let cell = if a == zero || b == zero {
                    zero
                } else {
                    let cat = format!("{}{}", words[a as usize], words[b as usize]);
                    match words.iter().position(|w| **w == cat) {
                        Some(i) => i as u32,
                        None => zero,
                    }
                };
                table[(a * n + b) as usize] = cell;
            }
        }
        MonoidTable::new("free2", names, 0, table)
    }

    fn trivial_actions(m: &MonoidTable, g: &GroupTable) -> (Vec<u32>, Vec<u32>) {
        let left = (0..m.size()).flat_map(|_| 0..g.size()).collect();
        let right = (0..g.size()).flat_map(|k| vec![k; m.size() as usize]).collect();
        (left, right)
    }

    /// One object, vertex group S3, trivial whiskering: the classical
    /// commutator testbed.
    pub fn bundle_s3_trivial() -> WhiskeredCategory {
        let (m, g) = (monoid_trivial(), group_s3());
        let (l, r) = trivial_actions(&m, &g);
        bundle_of_groups(&m, &g, &l, &r).expect("valid bundle")
    }

    pub fn bundle_z3_trivial() -> WhiskeredCategory {
        let (m, g) = (monoid_trivial(), group_z3());
        let (l, r) = trivial_actions(&m, &g);
        bundle_of_groups(&m, &g, &l, &r).expect("valid bundle")
    }

    pub fn bundle_s4_trivial() -> WhiskeredCategory {
        let (m, g) = (monoid_trivial(), group_s4());
        let (l, r) = trivial_actions(&m, &g);
        bundle_of_groups(&m, &g, &l, &r).expect("valid bundle")
    }

    /// Two copies of Z/2 with trivial actions: the smallest bundle with more
    /// than one object.
    pub fn bundle_z2_pair() -> WhiskeredCategory {
        let (m, g) = (monoid_z2(), group_z2());
        let (l, r) = trivial_actions(&m, &g);
        bundle_of_groups(&m, &g, &l, &r).expect("valid bundle")
    }

    /// Objects Z/2, vertex groups Z/4, both actions negate under the
    /// non-unit object: nontrivial but symmetric, so the commutator rules
    /// still hold.
    pub fn bundle_z4_twist() -> WhiskeredCategory {
        let (m, g) = (monoid_z2(), group_z4());
        let neg = |k: u32| (4 - k) % 4;
        let left: Vec<u32> = (0..2).flat_map(|x| (0..4).map(move |k| if x == 1 { neg(k) } else { k })).collect();
        let right: Vec<u32> = (0..4).flat_map(|k| (0..2).map(move |y| if y == 1 { neg(k) } else { k })).collect();
        bundle_of_groups(&m, &g, &left, &right).expect("valid bundle")
    }

    /// Objects Z/2, vertex groups Z/4, only the left action negates. The
    /// commutator rules hold (abelian vertices) while the actions disagree:
    /// a genuine counterexample to the commutativity criterion, kept out of
    /// the blessed registry.
    pub fn bundle_z4_flip() -> WhiskeredCategory {
        let (m, g) = (monoid_z2(), group_z4());
        let neg = |k: u32| (4 - k) % 4;
        let left: Vec<u32> = (0..2).flat_map(|x| (0..4).map(move |k| if x == 1 { neg(k) } else { k })).collect();
        let (_, right) = trivial_actions(&m, &g);
        bundle_of_groups(&m, &g, &left, &right).expect("valid bundle")
    }

    /// Idempotent object monoid {1,e}, vertex groups Z/4, both actions crush
    /// to 0 under e (the zero endomorphism is the only nontrivial idempotent
    /// choice on Z/4).
    pub fn bundle_e_absorb() -> WhiskeredCategory {
        let (m, g) = (monoid_e2(), group_z4());
        let left: Vec<u32> = (0..2).flat_map(|x| (0..4).map(move |k| if x == 1 { 0 } else { k })).collect();
        let right: Vec<u32> = (0..4).flat_map(|k| (0..2).map(move |y| if y == 1 { 0 } else { k })).collect();
        bundle_of_groups(&m, &g, &left, &right).expect("valid bundle")
    }

    /// Objects Z/2, vertex groups S3, left action conjugates by (12) under
    /// the non-unit object, right action trivial. Asymmetric with nonabelian
    /// vertices: the instance where the subtler laws bite.
    pub fn bundle_s3_twist() -> WhiskeredCategory {
        let (m, g) = (monoid_z2(), group_s3());
        let tau = 2u32; // index of (12) in s3_permutations
        let conj = |k: u32| g.product(g.product(tau, k), tau);
        let left: Vec<u32> = (0..2).flat_map(|x| (0..6).map(move |k| if x == 1 { conj(k) } else { k })).collect();
        let right: Vec<u32> = (0..6).flat_map(|k| (0..2).map(move |_| k)).collect();
        bundle_of_groups(&m, &g, &left, &right).expect("valid bundle")
    }

    /// The action table from the broken two-element example: doubling on Z/4
    /// under an idempotent object. Not a monoid action; the constructor must
    /// refuse it.
    pub fn bundle_e_doubling() -> Result<WhiskeredCategory, BundleError> {
        let (m, g) = (monoid_e2(), group_z4());
        let dbl = |k: u32| (2 * k) % 4;
        let left: Vec<u32> = (0..2).flat_map(|x| (0..4).map(move |k| if x == 1 { dbl(k) } else { k })).collect();
        let right: Vec<u32> = (0..4).flat_map(|k| (0..2).map(move |y| if y == 1 { dbl(k) } else { k })).collect();
        bundle_of_groups(&m, &g, &left, &right)
    }
}

fn codiscrete_names(m: &MonoidTable) -> Vec<String> {
    let n = m.size();
    let mut out = Vec::with_capacity((n * n) as usize);
    for x in 0..n {
        for y in 0..n {
            out.push(format!(
                "{}>{}",
                m.element_names[x as usize], m.element_names[y as usize]
            ));
        }
    }
    out
}

fn bundle_names(m: &MonoidTable, g: &GroupTable) -> Vec<String> {
    let mut out = Vec::with_capacity((m.size() * g.size()) as usize);
    for o in 0..m.size() {
        for k in 0..g.size() {
            if m.size() == 1 {
                out.push(g.monoid.element_names[k as usize].clone());
            } else {
                out.push(format!(
                    "{}@{}",
                    g.monoid.element_names[k as usize], m.element_names[o as usize]
                ));
            }
        }
    }
    out
}

fn monoid_by_name(name: &str) -> Option<MonoidTable> {
    Some(match name {
        "trivial" => presets::monoid_trivial(),
        "z2" => presets::monoid_z2(),
        "z3" => presets::monoid_z3(),
        "z4" => presets::monoid_z4(),
        "z2xz2" => presets::monoid_z2xz2(),
        "s3" => presets::monoid_s3(),
        "lz3" => presets::monoid_lz3(),
        "e2" => presets::monoid_e2(),
        "free2" => presets::monoid_free2(),
        _ => return None,
    })
}

const MONOID_NAMES: &str = "trivial, z2, z3, z4, z2xz2, s3, lz3, e2, free2";
const BUNDLE_NAMES: &str =
    "s3_trivial, z3_trivial, s4_trivial, z2_pair, z4_twist, z4_flip, e_absorb, s3_twist";

fn bundle_by_name(name: &str) -> Option<(WhiskeredCategory, Vec<String>)> {
    let named = |m: MonoidTable, g: GroupTable, w: WhiskeredCategory| {
        let names = bundle_names(&m, &g);
        (w, names)
    };
    Some(match name {
        "s3_trivial" => named(presets::monoid_trivial(), presets::group_s3(), presets::bundle_s3_trivial()),
        "z3_trivial" => named(presets::monoid_trivial(), presets::group_z3(), presets::bundle_z3_trivial()),
        "s4_trivial" => named(presets::monoid_trivial(), presets::group_s4(), presets::bundle_s4_trivial()),
        "z2_pair" => named(presets::monoid_z2(), presets::group_z2(), presets::bundle_z2_pair()),
        "z4_twist" => named(presets::monoid_z2(), presets::group_z4(), presets::bundle_z4_twist()),
        "z4_flip" => named(presets::monoid_z2(), presets::group_z4(), presets::bundle_z4_flip()),
        "e_absorb" => named(presets::monoid_e2(), presets::group_z4(), presets::bundle_e_absorb()),
        "s3_twist" => named(presets::monoid_z2(), presets::group_s3(), presets::bundle_s3_twist()),
        _ => return None,
    })
}

/// Builds a named family member: `codiscrete <monoid>`, `bundle <preset>`,
/// `algebra <monoid>` or `product <a> <b>` where `<a>` and `<b>` are
/// `family:parameter` pairs.
pub fn instance(family: &str, params: &[&str]) -> Result<Instance, FamilyError> {
    let unknown = |parameter: &str, available: &str| FamilyError::UnknownParameter {
        family: family.to_string(),
        parameter: parameter.to_string(),
        available: available.to_string(),
    };
    match family {
        "codiscrete" => {
            let [name] = params else {
                return Err(FamilyError::Arity(family.into(), "one monoid name"));
            };
            let m = monoid_by_name(name).ok_or_else(|| unknown(name, MONOID_NAMES))?;
            Ok(Instance {
                name: format!("codiscrete:{name}"),
                morphism_names: codiscrete_names(&m),
                structure: codiscrete_whiskered(&m),
            })
        }
        "bundle" => {
            let [name] = params else {
                return Err(FamilyError::Arity(family.into(), "one bundle preset name"));
            };
            let (structure, morphism_names) =
                bundle_by_name(name).ok_or_else(|| unknown(name, BUNDLE_NAMES))?;
            Ok(Instance { name: format!("bundle:{name}"), structure, morphism_names })
        }
        "algebra" => {
            let [name] = params else {
                return Err(FamilyError::Arity(family.into(), "one monoid name"));
            };
            let m = monoid_by_name(name).ok_or_else(|| unknown(name, MONOID_NAMES))?;
            Ok(Instance {
                name: format!("algebra:{name}"),
                morphism_names: m.element_names.clone(),
                structure: one_object_from_monoid(&m),
            })
        }
        "product" => {
            let [a, b] = params else {
                return Err(FamilyError::Arity(family.into(), "two family:parameter arguments"));
            };
            let parse = |pair: &str| -> Result<Instance, FamilyError> {
                let (f, p) = pair
                    .split_once(':')
                    .ok_or_else(|| FamilyError::Arity("product".into(), "two family:parameter arguments"))?;
                instance(f, &[p])
            };
            let (i1, i2) = (parse(a)?, parse(b)?);
            let mut names = Vec::new();
            for n1 in &i1.morphism_names {
                for n2 in &i2.morphism_names {
                    names.push(format!("({n1},{n2})"));
                }
            }
            Ok(Instance {
                name: format!("product:({},{})", i1.name, i2.name),
                structure: direct_product(&i1.structure, &i2.structure),
                morphism_names: names,
            })
        }
        _ => Err(FamilyError::UnknownFamily(family.to_string())),
    }
}

/// The blessed construction-family registry every acceptance checker runs
/// over: codiscrete structures on the small monoids, the small bundles, the
/// monoid algebras and one direct product.
pub fn registry() -> Vec<Instance> {
    let members: [(&str, &[&str]); 19] = [
        ("codiscrete", &["trivial"]),
        ("codiscrete", &["z2"]),
        ("codiscrete", &["z3"]),
        ("codiscrete", &["z4"]),
        ("codiscrete", &["z2xz2"]),
        ("codiscrete", &["lz3"]),
        ("codiscrete", &["s3"]),
        ("bundle", &["s3_trivial"]),
        ("bundle", &["z3_trivial"]),
        ("bundle", &["z2_pair"]),
        ("bundle", &["z4_twist"]),
        ("bundle", &["e_absorb"]),
        ("bundle", &["s3_twist"]),
        ("algebra", &["z3"]),
        ("algebra", &["z4"]),
        ("algebra", &["s3"]),
        ("algebra", &["lz3"]),
        ("algebra", &["free2"]),
        ("product", &["codiscrete:z2", "bundle:z3_trivial"]),
    ];
    members
        .iter()
        .map(|(f, p)| instance(f, p).expect("registry members are valid"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::whisker::validate_whiskering;

    #[test]
    fn every_registry_instance_validates_empty() {
        for inst in registry() {
            let report = validate_whiskering(&inst.structure);
            assert!(report.is_empty(), "{}: {report}", inst.name);
            assert_eq!(
                inst.morphism_names.len() as u32,
                inst.structure.category().morphism_count(),
                "{}",
                inst.name
            );
        }
    }

    #[test]
    fn constructions_are_deterministic() {
        for (a, b) in registry().into_iter().zip(registry()) {
            assert_eq!(a.structure, b.structure, "{}", a.name);
        }
    }

    #[test]
    fn free2_monoid_is_associative_with_absorbing_zero() {
        let m = presets::monoid_free2();
        let n = m.size();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(m.product(m.product(a, b), c), m.product(a, m.product(b, c)));
                }
            }
        }
        let zero = 7;
        for a in 0..n {
            assert_eq!(m.product(a, zero), zero);
            assert_eq!(m.product(zero, a), zero);
        }
        // st is reachable, sts overflows to zero
        assert_eq!(m.product(1, 2), 4);
        assert_eq!(m.product(4, 1), zero);
    }

    #[test]
    fn lz3_is_noncommutative() {
        assert!(!presets::monoid_lz3().is_commutative());
        assert!(presets::monoid_z4().is_commutative());
    }

    #[test]
    fn doubling_action_is_refused_with_action_law_witness() {
        let err = presets::bundle_e_doubling().unwrap_err();
        assert!(
            matches!(err, BundleError::NotAnAction { .. }),
            "doubling under an idempotent is not an action: {err}"
        );
    }

    #[test]
    fn broken_left_table_is_refused() {
        let (m, g) = (presets::monoid_z2(), presets::group_z4());
        // left table sends e to a non-endomorphism map
        let left: Vec<u32> = vec![0, 1, 2, 3, /* e: */ 0, 2, 1, 3];
        let right: Vec<u32> = (0..4).flat_map(|k| vec![k, k]).collect();
        let err = bundle_of_groups(&m, &g, &left, &right).unwrap_err();
        assert!(matches!(
            err,
            BundleError::NotEndomorphism { left: true, .. } | BundleError::NotAnAction { left: true, .. }
        ));
    }

    #[test]
    fn algebra_base_is_groupoid_exactly_for_groups() {
        assert!(one_object_from_monoid(&presets::monoid_s3()).groupoid().is_some());
        assert!(one_object_from_monoid(&presets::monoid_free2()).groupoid().is_none());
        assert!(one_object_from_monoid(&presets::monoid_lz3()).groupoid().is_none());
    }

    #[test]
    fn product_with_trivial_is_the_same_shape() {
        let w = presets::bundle_z3_trivial();
        let t = instance("codiscrete", &["trivial"]).unwrap().structure;
        let p = direct_product(&w, &t);
        assert_eq!(p.category().object_count(), w.category().object_count());
        assert_eq!(p.category().morphism_count(), w.category().morphism_count());
        assert!(validate_whiskering(&p).is_empty());
    }

    #[test]
    fn unknown_family_and_parameter_errors() {
        assert!(matches!(instance("nope", &["x"]), Err(FamilyError::UnknownFamily(_))));
        assert!(matches!(
            instance("codiscrete", &["nope"]),
            Err(FamilyError::UnknownParameter { .. })
        ));
        assert!(matches!(instance("bundle", &[]), Err(FamilyError::Arity(..))));
    }

    #[test]
    fn permutation_names() {
        assert_eq!(presets::permutation_name(&[0, 1, 2]), "e");
        assert_eq!(presets::permutation_name(&[1, 0, 2]), "(12)");
        assert_eq!(presets::permutation_name(&[1, 2, 0]), "(123)");
    }
}
