//! Finite categories and groupoids stored as explicit tables.
//!
//! Composition is written left to right throughout: for `a: x -> y` and
//! `b: y -> z` the composite `ab: x -> z` is `compose(a, b)`. The library
//! never exposes function-application order.

use std::fmt;

use thiserror::Error;

/// Index of an object of a finite category.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ObjId(pub u32);

/// Index of a morphism of a finite category.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MorId(pub u32);

impl fmt::Display for ObjId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

impl fmt::Display for MorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{}", self.0)
    }
}

/// Sentinel for an undefined cell of the dense composition table.
pub(crate) const UNDEFINED: u32 = u32::MAX;

/// Size caps that keep every exhaustive checker tractable. Exceeding a cap is
/// a validation error, never silent sampling.
#[derive(Clone, Copy, Debug)]
pub struct SizeLimits {
    pub max_objects: u32,
    pub max_morphisms: u32,
}

impl Default for SizeLimits {
    fn default() -> Self {
        SizeLimits {
            max_objects: 64,
            max_morphisms: 4096,
        }
    }
}

/// A finite category: global morphism indices with an endpoint table, an
/// identity table, and a dense partial composition table whose undefined
/// cells hold an explicit sentinel.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteCategory {
    objects: u32,
    endpoints: Vec<(u32, u32)>,
    identity: Vec<u32>,
    compose: Vec<u32>,
}

/// Error returned when composing a non-composable pair.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot compose {a}: {a_source}->{a_target} with {b}: {b_source}->{b_target}")]
pub struct ComposeError {
    pub a: MorId,
    pub a_source: ObjId,
    pub a_target: ObjId,
    pub b: MorId,
    pub b_source: ObjId,
    pub b_target: ObjId,
}

impl FiniteCategory {
    /// Builds a category from raw tables. `compose` cells are `None` where
    /// the composite is undefined. Table shapes must be consistent; the
    /// mathematical laws are checked by [`validate_category`], not here.
    pub fn from_tables(
        objects: u32,
        endpoints: Vec<(u32, u32)>,
        identity: Vec<u32>,
        compose: Vec<Option<u32>>,
    ) -> FiniteCategory {
        let n = endpoints.len();
        assert_eq!(identity.len(), objects as usize, "one identity per object");
        assert_eq!(compose.len(), n * n, "dense n*n composition table");
        FiniteCategory {
            objects,
            endpoints,
            identity,
            compose: compose.into_iter().map(|c| c.unwrap_or(UNDEFINED)).collect(),
        }
    }

    pub fn object_count(&self) -> u32 {
        self.objects
    }

    pub fn morphism_count(&self) -> u32 {
        self.endpoints.len() as u32
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjId> {
        (0..self.objects).map(ObjId)
    }

    pub fn morphisms(&self) -> impl Iterator<Item = MorId> {
        (0..self.morphism_count()).map(MorId)
    }

    pub fn source(&self, a: MorId) -> ObjId {
        ObjId(self.endpoints[a.0 as usize].0)
    }

    pub fn target(&self, a: MorId) -> ObjId {
        ObjId(self.endpoints[a.0 as usize].1)
    }

    pub fn identity(&self, x: ObjId) -> MorId {
        MorId(self.identity[x.0 as usize])
    }

    /// Raw composition table cell, `None` where undefined.
    pub fn compose_entry(&self, a: MorId, b: MorId) -> Option<MorId> {
        let n = self.endpoints.len();
        let cell = self.compose[a.0 as usize * n + b.0 as usize];
        (cell != UNDEFINED).then_some(MorId(cell))
    }

    /// The composite `ab` for `a: x -> y`, `b: y -> z`.
    pub fn compose(&self, a: MorId, b: MorId) -> Result<MorId, ComposeError> {
        self.compose_entry(a, b).ok_or_else(|| ComposeError {
            a,
            a_source: self.source(a),
            a_target: self.target(a),
            b,
            b_source: self.source(b),
            b_target: self.target(b),
        })
    }

    /// All morphisms `x -> y` in stable index order.
    pub fn hom(&self, x: ObjId, y: ObjId) -> Vec<MorId> {
        self.morphisms()
            .filter(|&a| self.source(a) == x && self.target(a) == y)
            .collect()
    }

    pub(crate) fn endpoints_raw(&self) -> &[(u32, u32)] {
        &self.endpoints
    }

    pub(crate) fn identity_raw(&self) -> &[u32] {
        &self.identity
    }

    pub(crate) fn compose_raw(&self) -> &[u32] {
        &self.compose
    }
}

impl fmt::Debug for FiniteCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FiniteCategory({} objects, {} morphisms)",
            self.objects,
            self.endpoints.len()
        )
    }
}

/// A finite groupoid: a finite category plus an inverse table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteGroupoid {
    pub cat: FiniteCategory,
    inverse: Vec<u32>,
}

impl FiniteGroupoid {
    pub fn from_tables(cat: FiniteCategory, inverse: Vec<u32>) -> FiniteGroupoid {
        assert_eq!(inverse.len(), cat.morphism_count() as usize);
        FiniteGroupoid { cat, inverse }
    }

    pub fn inverse(&self, a: MorId) -> MorId {
        MorId(self.inverse[a.0 as usize])
    }

    /// `b^-1 a b`, the conjugate of `a` by `b`.
    pub fn conjugate(&self, a: MorId, b: MorId) -> Result<MorId, ComposeError> {
        let ib = self.inverse(b);
        self.cat.compose(self.cat.compose(ib, a)?, b)
    }

    pub(crate) fn inverse_raw(&self) -> &[u32] {
        &self.inverse
    }
}

/// One violated law with a witness tuple. Witness data is self-contained so a
/// report consumer can re-evaluate the cited instance directly on the tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    SizeExceeded {
        objects: u32,
        morphisms: u32,
        limits: (u32, u32),
    },
    EndpointRange {
        mor: MorId,
    },
    IdentityRange {
        object: ObjId,
    },
    IdentityEndpoints {
        object: ObjId,
        identity: MorId,
    },
    ComposeRange {
        a: MorId,
        b: MorId,
    },
    /// Composable pair with an undefined table cell.
    ClosureMissing {
        a: MorId,
        b: MorId,
    },
    /// Non-composable pair with a defined table cell.
    ClosureSpurious {
        a: MorId,
        b: MorId,
    },
    CompositeEndpoints {
        a: MorId,
        b: MorId,
        composite: MorId,
    },
    Associativity {
        a: MorId,
        b: MorId,
        c: MorId,
        left: MorId,
        right: MorId,
    },
    LeftUnit {
        a: MorId,
        got: MorId,
    },
    RightUnit {
        a: MorId,
        got: MorId,
    },
    InverseRange {
        a: MorId,
    },
    LeftInverse {
        a: MorId,
        got: Option<MorId>,
    },
    RightInverse {
        a: MorId,
        got: Option<MorId>,
    },
    MonoidUnitRange {
        unit: ObjId,
    },
    MonoidRange {
        x: ObjId,
        y: ObjId,
    },
    MonoidAssociativity {
        x: ObjId,
        y: ObjId,
        z: ObjId,
    },
    MonoidUnit {
        x: ObjId,
    },
    ActionRange {
        left: bool,
        x: ObjId,
        a: MorId,
    },
    /// `1.a = a` (or `a.1 = a`).
    ActionUnit {
        left: bool,
        a: MorId,
        got: MorId,
    },
    /// `(xy).a = x.(y.a)` (or mirrored).
    ActionAssociativity {
        left: bool,
        x: ObjId,
        y: ObjId,
        a: MorId,
    },
    /// `x.(ab) = (x.a)(x.b)` (or mirrored).
    ActionComposition {
        left: bool,
        x: ObjId,
        a: MorId,
        b: MorId,
    },
    /// `x.1_y = 1_{xy}` (or mirrored).
    ActionIdentity {
        left: bool,
        x: ObjId,
        y: ObjId,
    },
    /// `x.a: xu -> xv` for `a: u -> v` (or mirrored).
    ActionEndpoints {
        left: bool,
        x: ObjId,
        a: MorId,
        got: MorId,
    },
    /// `x.(a.y) = (x.a).y`.
    ActionCompatibility {
        x: ObjId,
        a: MorId,
        y: ObjId,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            SizeExceeded { objects, morphisms, limits } => write!(
                f,
                "size cap exceeded: {objects} objects, {morphisms} morphisms (caps {}, {})",
                limits.0, limits.1
            ),
            EndpointRange { mor } => write!(f, "endpoint of {mor} out of range"),
            IdentityRange { object } => write!(f, "identity of {object} out of range"),
            IdentityEndpoints { object, identity } => {
                write!(f, "identity {identity} of {object} is not an endomorphism of {object}")
            }
            ComposeRange { a, b } => write!(f, "compose({a}, {b}) out of range"),
            ClosureMissing { a, b } => write!(f, "composable pair ({a}, {b}) has no composite"),
            ClosureSpurious { a, b } => {
                write!(f, "non-composable pair ({a}, {b}) has a composite")
            }
            CompositeEndpoints { a, b, composite } => {
                write!(f, "composite {composite} of ({a}, {b}) has wrong endpoints")
            }
            Associativity { a, b, c, left, right } => {
                write!(f, "associativity fails at ({a}, {b}, {c}): ({a}{b}){c} = {left} but {a}({b}{c}) = {right}")
            }
            LeftUnit { a, got } => write!(f, "left unit fails at {a}: id·{a} = {got}"),
            RightUnit { a, got } => write!(f, "right unit fails at {a}: {a}·id = {got}"),
            InverseRange { a } => write!(f, "inverse of {a} out of range"),
            LeftInverse { a, got } => match got {
                Some(g) => write!(f, "{a}·inv({a}) = {g} is not the identity at source({a})"),
                None => write!(f, "{a}·inv({a}) is undefined"),
            },
            RightInverse { a, got } => match got {
                Some(g) => write!(f, "inv({a})·{a} = {g} is not the identity at target({a})"),
                None => write!(f, "inv({a})·{a} is undefined"),
            },
            MonoidUnitRange { unit } => write!(f, "monoid unit {unit} out of range"),
            MonoidRange { x, y } => write!(f, "monoid product {x}{y} out of range"),
            MonoidAssociativity { x, y, z } => {
                write!(f, "monoid associativity fails at ({x}, {y}, {z})")
            }
            MonoidUnit { x } => write!(f, "monoid unit law fails at {x}"),
            ActionRange { left, x, a } => {
                write!(f, "{} action ({x}, {a}) out of range", side(*left))
            }
            ActionUnit { left, a, got } => {
                write!(f, "{} action unit fails at {a}: got {got}", side(*left))
            }
            ActionAssociativity { left, x, y, a } => {
                write!(f, "{} action associativity fails at ({x}, {y}, {a})", side(*left))
            }
            ActionComposition { left, x, a, b } => {
                write!(f, "{} action does not preserve composition at ({x}, {a}, {b})", side(*left))
            }
            ActionIdentity { left, x, y } => {
                write!(f, "{} action does not preserve identities at ({x}, {y})", side(*left))
            }
            ActionEndpoints { left, x, a, got } => {
                write!(f, "{} action endpoint rule fails at ({x}, {a}): got {got}", side(*left))
            }
            ActionCompatibility { x, a, y } => {
                write!(f, "action compatibility x.(a.y) = (x.a).y fails at ({x}, {a}, {y})")
            }
        }
    }
}

fn side(left: bool) -> &'static str {
    if left {
        "left"
    } else {
        "right"
    }
}

/// Every violated law found by a validator, with witnesses. Empty iff the
/// structure satisfies all checked laws.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// True when collection stopped at the cap; the structure is still invalid.
    pub truncated: bool,
}

const MAX_VIOLATIONS: usize = 1000;

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn push(&mut self, v: Violation) -> bool {
        if self.violations.len() >= MAX_VIOLATIONS {
            self.truncated = true;
            return false;
        }
        self.violations.push(v);
        true
    }

    fn merge(&mut self, other: ValidationReport) {
        for v in other.violations {
            if !self.push(v) {
                break;
            }
        }
        self.truncated |= other.truncated;
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "ok");
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        if self.truncated {
            writeln!(f, "... report truncated at {MAX_VIOLATIONS} violations")?;
        }
        Ok(())
    }
}

/// Checks closure, endpoint coherence, associativity and units exhaustively.
pub fn validate_category(c: &FiniteCategory) -> ValidationReport {
    validate_category_with(c, SizeLimits::default())
}

pub fn validate_category_with(c: &FiniteCategory, limits: SizeLimits) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n_obj = c.object_count();
    let n_mor = c.morphism_count();
    if n_obj > limits.max_objects || n_mor > limits.max_morphisms {
        report.push(Violation::SizeExceeded {
            objects: n_obj,
            morphisms: n_mor,
            limits: (limits.max_objects, limits.max_morphisms),
        });
        return report;
    }

    let mut ranges_ok = true;
    for a in c.morphisms() {
        let (s, t) = c.endpoints_raw()[a.0 as usize];
        if s >= n_obj || t >= n_obj {
            report.push(Violation::EndpointRange { mor: a });
            ranges_ok = false;
        }
    }
    for x in c.objects() {
        if c.identity_raw()[x.0 as usize] >= n_mor {
            report.push(Violation::IdentityRange { object: x });
            ranges_ok = false;
        }
    }
    for a in c.morphisms() {
        for b in c.morphisms() {
            let cell = c.compose_raw()[a.0 as usize * n_mor as usize + b.0 as usize];
            if cell != UNDEFINED && cell >= n_mor {
                report.push(Violation::ComposeRange { a, b });
                ranges_ok = false;
            }
        }
    }
    if !ranges_ok {
        // endpoint/index data is unusable; the law checks below would read
        // out of bounds
        return report;
    }

    // closure and endpoint coherence
    for a in c.morphisms() {
        for b in c.morphisms() {
            let composable = c.target(a) == c.source(b);
            match c.compose_entry(a, b) {
                None if composable => {
                    report.push(Violation::ClosureMissing { a, b });
                }
                Some(_) if !composable => {
                    report.push(Violation::ClosureSpurious { a, b });
                }
                Some(ab) if c.source(ab) != c.source(a) || c.target(ab) != c.target(b) => {
                    report.push(Violation::CompositeEndpoints { a, b, composite: ab });
                }
                Some(_) => {}
                None => {}
            }
        }
    }

    // associativity over every composable triple
    'assoc: for a in c.morphisms() {
        for b in c.morphisms() {
            let Some(ab) = c.compose_entry(a, b) else { continue };
            for cc in c.morphisms() {
                let Some(bc) = c.compose_entry(b, cc) else { continue };
                let left = c.compose_entry(ab, cc);
                let right = c.compose_entry(a, bc);
                match (left, right) {
                    (Some(l), Some(r)) if l == r => {}
                    (l, r) => {
                        let sentinel = MorId(UNDEFINED);
                        if !report.push(Violation::Associativity {
                            a,
                            b,
                            c: cc,
                            left: l.unwrap_or(sentinel),
                            right: r.unwrap_or(sentinel),
                        }) {
                            break 'assoc;
                        }
                    }
                }
            }
        }
    }

    // identities
    for x in c.objects() {
        let id = c.identity(x);
        if c.source(id) != x || c.target(id) != x {
            report.push(Violation::IdentityEndpoints { object: x, identity: id });
        }
    }
    for a in c.morphisms() {
        let idl = c.identity(c.source(a));
        if let Some(got) = c.compose_entry(idl, a) {
            if got != a {
                report.push(Violation::LeftUnit { a, got });
            }
        }
        let idr = c.identity(c.target(a));
        if let Some(got) = c.compose_entry(a, idr) {
            if got != a {
                report.push(Violation::RightUnit { a, got });
            }
        }
    }

    report
}

/// Adds the inverse laws to the category checks.
pub fn validate_groupoid(g: &FiniteGroupoid) -> ValidationReport {
    validate_groupoid_with(g, SizeLimits::default())
}

pub fn validate_groupoid_with(g: &FiniteGroupoid, limits: SizeLimits) -> ValidationReport {
    let mut report = validate_category_with(&g.cat, limits);
    if report
        .violations
        .iter()
        .any(|v| matches!(v, Violation::SizeExceeded { .. } | Violation::EndpointRange { .. } | Violation::IdentityRange { .. } | Violation::ComposeRange { .. }))
    {
        return report;
    }
    let n_mor = g.cat.morphism_count();
    let mut inv_report = ValidationReport::default();
    for a in g.cat.morphisms() {
        if g.inverse_raw()[a.0 as usize] >= n_mor {
            inv_report.push(Violation::InverseRange { a });
            continue;
        }
        let ia = g.inverse(a);
        let got = g.cat.compose_entry(a, ia);
        if got != Some(g.cat.identity(g.cat.source(a))) {
            inv_report.push(Violation::LeftInverse { a, got });
        }
        let got = g.cat.compose_entry(ia, a);
        if got != Some(g.cat.identity(g.cat.target(a))) {
            inv_report.push(Violation::RightInverse { a, got });
        }
    }
    report.merge(inv_report);
    report
}

pub(crate) fn validate_monoid_table(
    count: u32,
    unit: u32,
    table: &[u32],
    report: &mut ValidationReport,
) -> bool {
    if unit >= count {
        report.push(Violation::MonoidUnitRange { unit: ObjId(unit) });
        return false;
    }
    let n = count as usize;
    assert_eq!(table.len(), n * n);
    let mut ok = true;
    for x in 0..count {
        for y in 0..count {
            if table[x as usize * n + y as usize] >= count {
                report.push(Violation::MonoidRange { x: ObjId(x), y: ObjId(y) });
                ok = false;
            }
        }
    }
    if !ok {
        return false;
    }
    let mul = |x: u32, y: u32| table[x as usize * n + y as usize];
    for x in 0..count {
        if mul(unit, x) != x || mul(x, unit) != x {
            report.push(Violation::MonoidUnit { x: ObjId(x) });
            ok = false;
        }
        for y in 0..count {
            for z in 0..count {
                if mul(mul(x, y), z) != mul(x, mul(y, z)) {
                    report.push(Violation::MonoidAssociativity {
                        x: ObjId(x),
                        y: ObjId(y),
                        z: ObjId(z),
                    });
                    ok = false;
                }
            }
        }
    }
    ok
}
