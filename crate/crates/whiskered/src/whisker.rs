//! Whiskering structures: a monoid on objects acting on morphisms from both
//! sides, the star bimorphism, the two induced multiplications, and the
//! strict-monoidal / sesquicategory classification.

use thiserror::Error;

use crate::core::{
    validate_category_with, validate_groupoid_with, validate_monoid_table, FiniteCategory,
    FiniteGroupoid, MorId, ObjId, SizeLimits, ValidationReport, Violation,
};
use crate::cubes::{edge_index, vertex_index, CubeShell, Direction, SquareShell};

/// Monoid structure on objects plus left and right object-on-morphism action
/// tables. Stored dense so that every axiom is exhaustively checkable and a
/// single-cell mutation is always visible to the validator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Whiskering {
    unit: u32,
    monoid: Vec<u32>,
    left: Vec<u32>,
    right: Vec<u32>,
    objects: u32,
    morphisms: u32,
}

impl Whiskering {
    pub fn from_tables(
        objects: u32,
        morphisms: u32,
        unit: u32,
        monoid: Vec<u32>,
        left: Vec<u32>,
        right: Vec<u32>,
    ) -> Whiskering {
        let n = objects as usize;
        let m = morphisms as usize;
        assert_eq!(monoid.len(), n * n);
        assert_eq!(left.len(), n * m);
        assert_eq!(right.len(), m * n);
        Whiskering { unit, monoid, left, right, objects, morphisms }
    }

    /// The declared unit object of the object monoid.
    pub fn unit(&self) -> ObjId {
        ObjId(self.unit)
    }

    /// Monoid product of two objects.
    pub fn product(&self, x: ObjId, y: ObjId) -> ObjId {
        ObjId(self.monoid[x.0 as usize * self.objects as usize + y.0 as usize])
    }

    /// `x.a`.
    pub fn left_act(&self, x: ObjId, a: MorId) -> MorId {
        MorId(self.left[x.0 as usize * self.morphisms as usize + a.0 as usize])
    }

    /// `a.y`.
    pub fn right_act(&self, a: MorId, y: ObjId) -> MorId {
        MorId(self.right[a.0 as usize * self.objects as usize + y.0 as usize])
    }

    pub(crate) fn monoid_raw(&self) -> &[u32] {
        &self.monoid
    }

    pub(crate) fn left_raw(&self) -> &[u32] {
        &self.left
    }

    pub(crate) fn right_raw(&self) -> &[u32] {
        &self.right
    }
}

/// The underlying category of a whiskered structure, with or without
/// inverses.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BaseCategory {
    Plain(FiniteCategory),
    Groupoid(FiniteGroupoid),
}

impl BaseCategory {
    pub fn category(&self) -> &FiniteCategory {
        match self {
            BaseCategory::Plain(c) => c,
            BaseCategory::Groupoid(g) => &g.cat,
        }
    }

    pub fn groupoid(&self) -> Option<&FiniteGroupoid> {
        match self {
            BaseCategory::Plain(_) => None,
            BaseCategory::Groupoid(g) => Some(g),
        }
    }
}

/// A category or groupoid carrying a whiskering.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WhiskeredCategory {
    pub base: BaseCategory,
    pub whiskering: Whiskering,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WhiskerError {
    #[error("operation requires a groupoid base")]
    GroupoidRequired,
}

impl WhiskeredCategory {
    pub fn category(&self) -> &FiniteCategory {
        self.base.category()
    }

    pub fn groupoid(&self) -> Option<&FiniteGroupoid> {
        self.base.groupoid()
    }

    pub fn require_groupoid(&self) -> Result<&FiniteGroupoid, WhiskerError> {
        self.groupoid().ok_or(WhiskerError::GroupoidRequired)
    }
}

/// Exhaustively checks the whiskering axioms on top of the base validation:
/// the object monoid, both action laws, the endpoint rule and the
/// left/right compatibility.
pub fn validate_whiskering(w: &WhiskeredCategory) -> ValidationReport {
    validate_whiskering_with(w, SizeLimits::default())
}

pub fn validate_whiskering_with(w: &WhiskeredCategory, limits: SizeLimits) -> ValidationReport {
    let mut report = match &w.base {
        BaseCategory::Plain(c) => validate_category_with(c, limits),
        BaseCategory::Groupoid(g) => validate_groupoid_with(g, limits),
    };
    if !report.is_empty() {
        return report;
    }
    let c = w.base.category();
    let wk = &w.whiskering;
    let n_obj = c.object_count();
    let n_mor = c.morphism_count();

    if !validate_monoid_table(n_obj, wk.unit, wk.monoid_raw(), &mut report) {
        return report;
    }

    // range checks on the action tables
    let mut ranges_ok = true;
    for x in c.objects() {
        for a in c.morphisms() {
            if wk.left_raw()[x.0 as usize * n_mor as usize + a.0 as usize] >= n_mor {
                report.push(Violation::ActionRange { left: true, x, a });
                ranges_ok = false;
            }
            if wk.right_raw()[a.0 as usize * n_obj as usize + x.0 as usize] >= n_mor {
                report.push(Violation::ActionRange { left: false, x, a });
                ranges_ok = false;
            }
        }
    }
    if !ranges_ok {
        return report;
    }

    let unit = wk.unit();
    for a in c.morphisms() {
        let got = wk.left_act(unit, a);
        if got != a {
            report.push(Violation::ActionUnit { left: true, a, got });
        }
        let got = wk.right_act(a, unit);
        if got != a {
            report.push(Violation::ActionUnit { left: false, a, got });
        }
    }

    for x in c.objects() {
        for a in c.morphisms() {
            // endpoint rule: x.a : xu -> xv for a : u -> v, mirrored on the right
            let xa = wk.left_act(x, a);
            if c.source(xa) != wk.product(x, c.source(a))
                || c.target(xa) != wk.product(x, c.target(a))
            {
                report.push(Violation::ActionEndpoints { left: true, x, a, got: xa });
            }
            let ax = wk.right_act(a, x);
            if c.source(ax) != wk.product(c.source(a), x)
                || c.target(ax) != wk.product(c.target(a), x)
            {
                report.push(Violation::ActionEndpoints { left: false, x, a, got: ax });
            }
            for y in c.objects() {
                // (xy).a = x.(y.a) and a.(xy) = (a.x).y
                if wk.left_act(wk.product(x, y), a) != wk.left_act(x, wk.left_act(y, a)) {
                    report.push(Violation::ActionAssociativity { left: true, x, y, a });
                }
                if wk.right_act(a, wk.product(x, y)) != wk.right_act(wk.right_act(a, x), y) {
                    report.push(Violation::ActionAssociativity { left: false, x, y, a });
                }
                // x.(a.y) = (x.a).y
                if wk.left_act(x, wk.right_act(a, y)) != wk.right_act(wk.left_act(x, a), y) {
                    report.push(Violation::ActionCompatibility { x, a, y });
                }
            }
        }
        // x.1_y = 1_{xy} and 1_y.x = 1_{yx}
        for y in c.objects() {
            if wk.left_act(x, c.identity(y)) != c.identity(wk.product(x, y)) {
                report.push(Violation::ActionIdentity { left: true, x, y });
            }
            if wk.right_act(c.identity(y), x) != c.identity(wk.product(y, x)) {
                report.push(Violation::ActionIdentity { left: false, x, y });
            }
        }
        // x.(ab) = (x.a)(x.b) and (ab).x = (a.x)(b.x)
        for a in c.morphisms() {
            for b in c.morphisms() {
                let Some(ab) = c.compose_entry(a, b) else { continue };
                let lhs = wk.left_act(x, ab);
                let rhs = c.compose_entry(wk.left_act(x, a), wk.left_act(x, b));
                if rhs != Some(lhs) {
                    report.push(Violation::ActionComposition { left: true, x, a, b });
                }
                let lhs = wk.right_act(ab, x);
                let rhs = c.compose_entry(wk.right_act(a, x), wk.right_act(b, x));
                if rhs != Some(lhs) {
                    report.push(Violation::ActionComposition { left: false, x, a, b });
                }
            }
        }
    }

    report
}

/// The canonical square on a pair of morphisms: for `a: x -> y` and
/// `b: u -> v` the shell with left `a.u`, bottom `y.b`, top `x.b`, right
/// `a.v`. Always defined; no composability needed.
pub fn star(w: &WhiskeredCategory, a: MorId, b: MorId) -> SquareShell {
    let c = w.category();
    let wk = &w.whiskering;
    let (x, y) = (c.source(a), c.target(a));
    SquareShell {
        top: wk.left_act(x, b),
        bottom: wk.left_act(y, b),
        left: wk.right_act(a, c.source(b)),
        right: wk.right_act(a, c.target(b)),
    }
}

/// `l(a,b) = (a.u)(y.b)`, the left-then-bottom path of the star square.
pub fn l_mult(w: &WhiskeredCategory, a: MorId, b: MorId) -> MorId {
    let sq = star(w, a, b);
    w.category().compose(sq.left, sq.bottom).expect("star square corners")
}

/// `r(a,b) = (x.b)(a.v)`, the top-then-right path of the star square.
pub fn r_mult(w: &WhiskeredCategory, a: MorId, b: MorId) -> MorId {
    let sq = star(w, a, b);
    w.category().compose(sq.top, sq.right).expect("star square corners")
}

/// Outcome of the strict-monoidal test: either the two multiplications agree
/// everywhere (and the induced product passed the interchange, associativity
/// and unit laws), or a failing pair witnesses the sesquicategory.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Commutativity {
    /// `l = r`; the induced product makes the structure strict monoidal.
    StrictMonoidal,
    /// `l(a,b) != r(a,b)`: interchange fails, composition without
    /// interchange only.
    Sesquicategory { witness: (MorId, MorId) },
    /// `l = r` but an induced-product law failed; would indicate a broken
    /// whiskering.
    LawFailure { law: &'static str, witness: String },
}

impl Commutativity {
    pub fn is_commutative(&self) -> bool {
        matches!(self, Commutativity::StrictMonoidal)
    }
}

/// Tests `l = r` on all pairs. On success, verifies the interchange law
/// `(a.b)` vs composition on all composable quadruples, associativity on all
/// triples and the unit laws of the induced product.
pub fn is_commutative_whiskered(w: &WhiskeredCategory) -> Commutativity {
    let c = w.category();
    for a in c.morphisms() {
        for b in c.morphisms() {
            if l_mult(w, a, b) != r_mult(w, a, b) {
                return Commutativity::Sesquicategory { witness: (a, b) };
            }
        }
    }
    let dot = |a, b| l_mult(w, a, b);
    // interchange: (a∘c).(b∘d) = (a.b)∘(c.d)
    for a in c.morphisms() {
        for cc in c.morphisms() {
            let Some(ac) = c.compose_entry(a, cc) else { continue };
            for b in c.morphisms() {
                for d in c.morphisms() {
                    let Some(bd) = c.compose_entry(b, d) else { continue };
                    let lhs = dot(ac, bd);
                    let rhs = c.compose_entry(dot(a, b), dot(cc, d));
                    if rhs != Some(lhs) {
                        return Commutativity::LawFailure {
                            law: "interchange",
                            witness: format!("a={a} c={cc} b={b} d={d}"),
                        };
                    }
                }
            }
        }
    }
    for a in c.morphisms() {
        for b in c.morphisms() {
            for d in c.morphisms() {
                if dot(dot(a, b), d) != dot(a, dot(b, d)) {
                    return Commutativity::LawFailure {
                        law: "associativity",
                        witness: format!("a={a} b={b} d={d}"),
                    };
                }
            }
        }
    }
    let unit_id = c.identity(w.whiskering.unit());
    for a in c.morphisms() {
        if dot(unit_id, a) != a || dot(a, unit_id) != a {
            return Commutativity::LawFailure { law: "unit", witness: format!("a={a}") };
        }
    }
    Commutativity::StrictMonoidal
}

/// The 3-cube on three morphisms `a: x -> y`, `b: u -> v`, `c: z -> w`, with
/// the twelve whiskered edges: direction 1 carries `a` whiskered by the
/// object products of `{u,v}` and `{z,w}`, direction 2 carries `b` whiskered
/// by `{x,y}` on the left and `{z,w}` on the right, direction 3 carries `c`
/// whiskered by the products of `{x,y}` and `{u,v}` on the left.
pub fn cube_of_three(w: &WhiskeredCategory, a: MorId, b: MorId, c: MorId) -> CubeShell {
    let cat = w.category();
    let wk = &w.whiskering;
    let first = [cat.source(a), cat.target(a)];
    let second = [cat.source(b), cat.target(b)];
    let third = [cat.source(c), cat.target(c)];

    let mut vertices = [ObjId(0); 8];
    for d1 in 0..2 {
        for d2 in 0..2 {
            for d3 in 0..2 {
                vertices[vertex_index(d1, d2, d3)] =
                    wk.product(wk.product(first[d1], second[d2]), third[d3]);
            }
        }
    }
    let mut edges = [MorId(0); 12];
    for s in 0..2 {
        for t in 0..2 {
            edges[edge_index(Direction::D1, s, t)] =
                wk.right_act(a, wk.product(second[s], third[t]));
            edges[edge_index(Direction::D2, s, t)] =
                wk.right_act(wk.left_act(first[s], b), third[t]);
            edges[edge_index(Direction::D3, s, t)] =
                wk.left_act(wk.product(first[s], second[t]), c);
        }
    }
    CubeShell { vertices, edges }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{codiscrete_whiskered, presets};
    use crate::cubes::{comp1, comp2, face, Sign};

    #[test]
    fn codiscrete_whiskering_validates_empty() {
        for m in [presets::monoid_trivial(), presets::monoid_z4(), presets::monoid_s3()] {
            let w = codiscrete_whiskered(&m);
            let report = validate_whiskering(&w);
            assert!(report.is_empty(), "{report}");
        }
    }

    #[test]
    fn bundle_whiskering_validates_empty() {
        for w in [presets::bundle_s3_trivial(), presets::bundle_z4_twist(), presets::bundle_s3_twist()]
        {
            let report = validate_whiskering(&w);
            assert!(report.is_empty(), "{report}");
        }
    }

    #[test]
    fn broken_compatibility_cell_yields_that_witness() {
        let mut w = presets::bundle_s3_twist();
        // corrupt one left-action cell
        let c = w.category().morphism_count() as usize;
        let old = w.whiskering.left[c + 3];
        w.whiskering.left[c + 3] = (old + 1) % c as u32;
        let report = validate_whiskering(&w);
        assert!(!report.is_empty());
        // the broken cell must be visible through some action law
        assert!(report.violations.iter().any(|v| matches!(
            v,
            Violation::ActionUnit { .. }
                | Violation::ActionAssociativity { .. }
                | Violation::ActionComposition { .. }
                | Violation::ActionIdentity { .. }
                | Violation::ActionEndpoints { .. }
                | Violation::ActionCompatibility { .. }
        )));
    }

    #[test]
    fn star_of_identities_is_degenerate() {
        let w = presets::bundle_z4_twist();
        let c = w.category();
        let wk = &w.whiskering;
        for x in c.objects() {
            for u in c.objects() {
                let sq = star(&w, c.identity(x), c.identity(u));
                let id = c.identity(wk.product(x, u));
                assert_eq!(sq, SquareShell { top: id, bottom: id, left: id, right: id });
            }
        }
    }

    #[test]
    fn star_is_a_bimorphism() {
        for w in [presets::bundle_s3_twist(), codiscrete_whiskered(&presets::monoid_z4())] {
            let c = w.category();
            for a in c.morphisms() {
                for d in c.morphisms() {
                    let Some(ad) = c.compose_entry(a, d) else { continue };
                    for b in c.morphisms() {
                        let lhs = star(&w, ad, b);
                        let rhs = comp1(c, &star(&w, a, b), &star(&w, d, b)).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
            for b in c.morphisms() {
                for d in c.morphisms() {
                    let Some(bd) = c.compose_entry(b, d) else { continue };
                    for a in c.morphisms() {
                        let lhs = star(&w, a, bd);
                        let rhs = comp2(c, &star(&w, a, b), &star(&w, a, d)).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn star_squares_are_valid_shells() {
        let w = presets::bundle_s3_twist();
        let c = w.category();
        for a in c.morphisms() {
            for b in c.morphisms() {
                assert!(star(&w, a, b).is_valid(c));
            }
        }
    }

    #[test]
    fn trivial_whiskering_star_edges() {
        let w = presets::bundle_s3_trivial();
        let c = w.category();
        for a in c.morphisms() {
            for b in c.morphisms() {
                let sq = star(&w, a, b);
                assert_eq!((sq.left, sq.bottom, sq.top, sq.right), (a, b, b, a));
            }
        }
    }

    #[test]
    fn unit_whisker_collapses_l_and_r() {
        // l(1_x, b) = x.b = r(1_x, b) for every object x
        let w = presets::bundle_s3_twist();
        let c = w.category();
        for x in c.objects() {
            let idx = c.identity(x);
            for b in c.morphisms() {
                let xb = w.whiskering.left_act(x, b);
                assert_eq!(l_mult(&w, idx, b), xb);
                assert_eq!(r_mult(&w, idx, b), xb);
            }
        }
    }

    #[test]
    fn l_and_r_are_parallel() {
        for w in [presets::bundle_s3_twist(), codiscrete_whiskered(&presets::monoid_s3())] {
            let c = w.category();
            for a in c.morphisms() {
                for b in c.morphisms() {
                    let l = l_mult(&w, a, b);
                    let r = r_mult(&w, a, b);
                    assert_eq!(c.source(l), c.source(r));
                    assert_eq!(c.target(l), c.target(r));
                }
            }
        }
    }

    #[test]
    fn codiscrete_is_strict_monoidal() {
        for m in [presets::monoid_s3(), presets::monoid_z4()] {
            let w = codiscrete_whiskered(&m);
            assert_eq!(is_commutative_whiskered(&w), Commutativity::StrictMonoidal);
        }
    }

    #[test]
    fn abelian_trivial_bundle_is_strict_monoidal() {
        let w = presets::bundle_z3_trivial();
        assert_eq!(is_commutative_whiskered(&w), Commutativity::StrictMonoidal);
    }

    #[test]
    fn s3_bundle_is_a_sesquicategory() {
        let w = presets::bundle_s3_trivial();
        match is_commutative_whiskered(&w) {
            Commutativity::Sesquicategory { witness: (a, b) } => {
                assert_ne!(l_mult(&w, a, b), r_mult(&w, a, b));
            }
            other => panic!("expected sesquicategory, got {other:?}"),
        }
    }

    #[test]
    fn cube_of_three_identities_is_degenerate() {
        let w = presets::bundle_z4_twist();
        let c = w.category();
        let id = c.identity(w.whiskering.unit());
        let cube = cube_of_three(&w, id, id, id);
        assert_eq!(cube, CubeShell::degenerate(c, w.whiskering.unit()));
    }

    #[test]
    fn cube_of_three_faces_are_valid_and_match_whiskered_edges() {
        let w = presets::bundle_s3_twist();
        let c = w.category();
        let wk = &w.whiskering;
        for a in c.morphisms().step_by(3) {
            for b in c.morphisms().step_by(2) {
                for cc in c.morphisms().step_by(5) {
                    let cube = cube_of_three(&w, a, b, cc);
                    assert!(cube.is_valid(c));
                    // the negative direction-1 face reads b whiskered by x on
                    // the left and by {z,w} on the right, and c whiskered by
                    // the products x{u,v}
                    let f = face(&cube, Direction::D1, Sign::Neg);
                    let (x, u, v) = (c.source(a), c.source(b), c.target(b));
                    let (z, wv) = (c.source(cc), c.target(cc));
                    assert_eq!(f.left, wk.right_act(wk.left_act(x, b), z));
                    assert_eq!(f.right, wk.right_act(wk.left_act(x, b), wv));
                    assert_eq!(f.top, wk.left_act(wk.product(x, u), cc));
                    assert_eq!(f.bottom, wk.left_act(wk.product(x, v), cc));
                }
            }
        }
    }
}
