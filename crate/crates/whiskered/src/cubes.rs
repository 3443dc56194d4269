//! Square and 3-cube shells, their partial compositions, the groupoid defect
//! operator, face extraction, and the data-driven resolution of the
//! factor-ordering questions.
//!
//! A shell assigns morphisms to the edges of the square or cube with matching
//! corners only; commutativity is not required. A literal functor from the
//! square category would force commutativity and make the defect identically
//! trivial, so shells are the carriers everywhere.

use std::fmt;

use thiserror::Error;

use crate::core::{FiniteCategory, FiniteGroupoid, MorId, ObjId};
use crate::util::SplitMix64;

/// Square directions: 1 runs downwards (left/right edges), 2 runs rightwards
/// (top/bottom edges). `sf` is the top-left corner, `tf` the bottom-right.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SquareShell {
    pub top: MorId,
    pub bottom: MorId,
    pub left: MorId,
    pub right: MorId,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShellError {
    #[error("corner mismatch at {corner}: edges {a} and {b} do not meet")]
    Corner { corner: &'static str, a: MorId, b: MorId },
    #[error("shells not composable in direction {direction}: {a} != {b}")]
    NotComposable { direction: u8, a: MorId, b: MorId },
}

impl SquareShell {
    /// Top-left corner object.
    pub fn source(&self, c: &FiniteCategory) -> ObjId {
        c.source(self.top)
    }

    /// Bottom-right corner object.
    pub fn target(&self, c: &FiniteCategory) -> ObjId {
        c.target(self.bottom)
    }

    pub fn is_valid(&self, c: &FiniteCategory) -> bool {
        c.source(self.top) == c.source(self.left)
            && c.target(self.top) == c.source(self.right)
            && c.target(self.left) == c.source(self.bottom)
            && c.target(self.bottom) == c.target(self.right)
    }
}

/// Builds a shell in quadruple order (left, bottom, top, right), checking the
/// four corner conditions and nothing else.
pub fn make_square(
    c: &FiniteCategory,
    left: MorId,
    bottom: MorId,
    top: MorId,
    right: MorId,
) -> Result<SquareShell, ShellError> {
    if c.source(top) != c.source(left) {
        return Err(ShellError::Corner { corner: "top-left", a: top, b: left });
    }
    if c.target(top) != c.source(right) {
        return Err(ShellError::Corner { corner: "top-right", a: top, b: right });
    }
    if c.target(left) != c.source(bottom) {
        return Err(ShellError::Corner { corner: "bottom-left", a: left, b: bottom });
    }
    if c.target(bottom) != c.target(right) {
        return Err(ShellError::Corner { corner: "bottom-right", a: bottom, b: right });
    }
    Ok(SquareShell { top, bottom, left, right })
}

/// The degenerate shell on `x`: all four edges the identity.
pub fn degenerate_square(c: &FiniteCategory, x: ObjId) -> SquareShell {
    let id = c.identity(x);
    SquareShell { top: id, bottom: id, left: id, right: id }
}

/// Stacks `alpha` above `beta` (direction 1): requires `bottom(alpha) =
/// top(beta)`; left and right edges compose.
pub fn comp1(
    c: &FiniteCategory,
    alpha: &SquareShell,
    beta: &SquareShell,
) -> Result<SquareShell, ShellError> {
    if alpha.bottom != beta.top {
        return Err(ShellError::NotComposable { direction: 1, a: alpha.bottom, b: beta.top });
    }
    let left = c.compose(alpha.left, beta.left).expect("corner-compatible shells");
    let right = c.compose(alpha.right, beta.right).expect("corner-compatible shells");
    Ok(SquareShell { top: alpha.top, bottom: beta.bottom, left, right })
}

/// Places `gamma` to the right of `alpha` (direction 2): requires
/// `right(alpha) = left(gamma)`; top and bottom edges compose.
pub fn comp2(
    c: &FiniteCategory,
    alpha: &SquareShell,
    gamma: &SquareShell,
) -> Result<SquareShell, ShellError> {
    if alpha.right != gamma.left {
        return Err(ShellError::NotComposable { direction: 2, a: alpha.right, b: gamma.left });
    }
    let top = c.compose(alpha.top, gamma.top).expect("corner-compatible shells");
    let bottom = c.compose(alpha.bottom, gamma.bottom).expect("corner-compatible shells");
    Ok(SquareShell { top, bottom, left: alpha.left, right: gamma.right })
}

/// The square defect `right^-1 · top^-1 · left · bottom`, an endomorphism at
/// the bottom-right corner. Identity exactly when the two boundary paths
/// agree.
pub fn delta(g: &FiniteGroupoid, f: &SquareShell) -> MorId {
    let c = &g.cat;
    let w = c
        .compose(g.inverse(f.right), g.inverse(f.top))
        .and_then(|p| c.compose(p, f.left))
        .and_then(|p| c.compose(p, f.bottom));
    w.expect("valid shell")
}

/// Coordinate sign along a cube direction.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Neg,
    Pos,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Neg, Sign::Pos];

    fn bit(self) -> usize {
        match self {
            Sign::Neg => 0,
            Sign::Pos => 1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if *self == Sign::Neg { "-" } else { "+" })
    }
}

/// Cube directions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    D1,
    D2,
    D3,
}

impl Direction {
    pub const ALL: [Direction; 3] = [Direction::D1, Direction::D2, Direction::D3];

    fn index(self) -> usize {
        match self {
            Direction::D1 => 0,
            Direction::D2 => 1,
            Direction::D3 => 2,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index() + 1)
    }
}

/// A 3-cube shell: eight vertex objects and twelve edges with matching
/// endpoints. Vertices are indexed by the coordinate bits `(d1, d2, d3)` as
/// `4*d1 + 2*d2 + d3`; edges run from the negative to the positive end of
/// their direction and are indexed by the signs of the two remaining
/// coordinates in increasing direction order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CubeShell {
    pub vertices: [ObjId; 8],
    pub edges: [MorId; 12],
}

pub(crate) fn vertex_index(d1: usize, d2: usize, d3: usize) -> usize {
    4 * d1 + 2 * d2 + d3
}

pub(crate) fn edge_index(dir: Direction, a: usize, b: usize) -> usize {
    4 * dir.index() + 2 * a + b
}

/// Flat index of the edge in `dir` at the signs of the two remaining
/// coordinates, for containers laid out like `CubeShell::edges`.
pub fn edge_slot(dir: Direction, a: Sign, b: Sign) -> usize {
    edge_index(dir, a.bit(), b.bit())
}

/// (direction, from-vertex, to-vertex) of each of the twelve edges.
pub(crate) fn edge_endpoints() -> [(Direction, usize, usize); 12] {
    let mut out = [(Direction::D1, 0, 0); 12];
    for a in 0..2 {
        for b in 0..2 {
            out[edge_index(Direction::D1, a, b)] =
                (Direction::D1, vertex_index(0, a, b), vertex_index(1, a, b));
            out[edge_index(Direction::D2, a, b)] =
                (Direction::D2, vertex_index(a, 0, b), vertex_index(a, 1, b));
            out[edge_index(Direction::D3, a, b)] =
                (Direction::D3, vertex_index(a, b, 0), vertex_index(a, b, 1));
        }
    }
    out
}

impl CubeShell {
    /// Edge in `dir` at the given signs of the two remaining coordinates (in
    /// increasing direction order).
    pub fn edge(&self, dir: Direction, a: Sign, b: Sign) -> MorId {
        self.edges[edge_index(dir, a.bit(), b.bit())]
    }

    pub fn vertex(&self, d1: Sign, d2: Sign, d3: Sign) -> ObjId {
        self.vertices[vertex_index(d1.bit(), d2.bit(), d3.bit())]
    }

    pub fn is_valid(&self, c: &FiniteCategory) -> bool {
        edge_endpoints().iter().enumerate().all(|(i, &(_, from, to))| {
            c.source(self.edges[i]) == self.vertices[from]
                && c.target(self.edges[i]) == self.vertices[to]
        })
    }

    /// The degenerate cube on `x`.
    pub fn degenerate(c: &FiniteCategory, x: ObjId) -> CubeShell {
        CubeShell { vertices: [x; 8], edges: [c.identity(x); 12] }
    }

    pub fn from_edges(c: &FiniteCategory, edges: [MorId; 12]) -> Option<CubeShell> {
        let mut vertices = [ObjId(0); 8];
        let mut seen = [false; 8];
        for (i, &(_, from, to)) in edge_endpoints().iter().enumerate() {
            for (v, o) in [(from, c.source(edges[i])), (to, c.target(edges[i]))] {
                if seen[v] && vertices[v] != o {
                    return None;
                }
                vertices[v] = o;
                seen[v] = true;
            }
        }
        let cube = CubeShell { vertices, edges };
        cube.is_valid(c).then_some(cube)
    }
}

/// The square obtained by fixing coordinate `dir` at `sign`; the remaining
/// directions, in increasing index order, become the square's directions
/// 1 and 2.
pub fn face(f: &CubeShell, dir: Direction, sign: Sign) -> SquareShell {
    let s = sign;
    match dir {
        Direction::D1 => SquareShell {
            top: f.edge(Direction::D3, s, Sign::Neg),
            bottom: f.edge(Direction::D3, s, Sign::Pos),
            left: f.edge(Direction::D2, s, Sign::Neg),
            right: f.edge(Direction::D2, s, Sign::Pos),
        },
        Direction::D2 => SquareShell {
            top: f.edge(Direction::D3, Sign::Neg, s),
            bottom: f.edge(Direction::D3, Sign::Pos, s),
            left: f.edge(Direction::D1, s, Sign::Neg),
            right: f.edge(Direction::D1, s, Sign::Pos),
        },
        Direction::D3 => SquareShell {
            top: f.edge(Direction::D2, Sign::Neg, s),
            bottom: f.edge(Direction::D2, Sign::Pos, s),
            left: f.edge(Direction::D1, Sign::Neg, s),
            right: f.edge(Direction::D1, Sign::Pos, s),
        },
    }
}

// ---------------------------------------------------------------------------
// identity resolution
// ---------------------------------------------------------------------------

/// Per-law verdict after evaluating the candidate orderings.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    /// The printed form holds universally.
    Holds,
    /// The printed form fails but the resolved alternative holds universally.
    HoldsReversed,
    /// No candidate holds universally.
    Counterexample,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Holds => "holds",
            Verdict::HoldsReversed => "holds-with-reversed-ordering",
            Verdict::Counterexample => "counterexample",
        };
        write!(f, "{s}")
    }
}

/// One candidate form of an identity, with its scan outcome.
#[derive(Clone, Debug)]
pub struct Candidate {
    pub name: &'static str,
    pub holds: bool,
    pub checked: u64,
    pub witness: Option<String>,
}

/// Outcome of checking an identity in all its candidate orderings over a
/// structure. The printed form is always among the candidates; the resolved
/// alternative is named by `resolved`.
#[derive(Clone, Debug)]
pub struct IdentityResolution {
    pub law: &'static str,
    pub candidates: Vec<Candidate>,
    pub resolved: &'static str,
    pub exhaustive: bool,
}

impl IdentityResolution {
    pub fn candidate(&self, name: &str) -> Option<&Candidate> {
        self.candidates.iter().find(|c| c.name == name)
    }

    pub fn printed_holds(&self) -> bool {
        self.candidate("printed").is_some_and(|c| c.holds)
    }

    pub fn resolved_holds(&self) -> bool {
        self.candidate(self.resolved).is_some_and(|c| c.holds)
    }

    pub fn verdict(&self) -> Verdict {
        if self.printed_holds() {
            Verdict::Holds
        } else if self.resolved_holds() {
            Verdict::HoldsReversed
        } else {
            Verdict::Counterexample
        }
    }

    /// First witness against the printed form, if any.
    pub fn witness(&self) -> Option<&str> {
        self.candidates
            .iter()
            .filter(|c| !c.holds)
            .find_map(|c| c.witness.as_deref())
    }
}

struct CandidateScan {
    name: &'static str,
    holds: bool,
    checked: u64,
    witness: Option<String>,
}

impl CandidateScan {
    fn new(name: &'static str) -> CandidateScan {
        CandidateScan { name, holds: true, checked: 0, witness: None }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.holds {
            self.holds = false;
            self.witness = Some(witness());
        }
    }

    fn into_candidate(self) -> Candidate {
        Candidate { name: self.name, holds: self.holds, checked: self.checked, witness: self.witness }
    }
}

/// All square shells of the category, in stable order.
pub fn enumerate_squares(c: &FiniteCategory) -> Vec<SquareShell> {
    let mut out = Vec::new();
    for top in c.morphisms() {
        for left in c.morphisms() {
            if c.source(left) != c.source(top) {
                continue;
            }
            for right in c.morphisms() {
                if c.source(right) != c.target(top) {
                    continue;
                }
                for bottom in c.hom(c.target(left), c.target(right)) {
                    out.push(SquareShell { top, bottom, left, right });
                }
            }
        }
    }
    out
}

/// Evaluates the defect of a composite against one candidate ordering.
/// Direction 1 printed form: `(δβ)(δα)^{right(β)}`; direction 2 printed form:
/// `(δα)^{bottom(γ)}(δγ)`. The reversed candidates multiply the two factors
/// the other way round.
pub fn verify_delta_comp(
    g: &FiniteGroupoid,
    alpha: &SquareShell,
    beta: &SquareShell,
    direction: u8,
) -> Result<(bool, bool), ShellError> {
    let c = &g.cat;
    let (composite, conjugator) = match direction {
        1 => (comp1(c, alpha, beta)?, beta.right),
        2 => (comp2(c, alpha, beta)?, beta.bottom),
        _ => panic!("square direction must be 1 or 2"),
    };
    let d = delta(g, &composite);
    let da = g.conjugate(delta(g, alpha), conjugator).expect("endomorphism conjugation");
    let db = delta(g, beta);
    let printed = match direction {
        1 => c.compose(db, da),
        _ => c.compose(da, db),
    }
    .expect("parallel endomorphisms");
    let reversed = match direction {
        1 => c.compose(da, db),
        _ => c.compose(db, da),
    }
    .expect("parallel endomorphisms");
    Ok((printed == d, reversed == d))
}

/// Scans every composable square pair in the given direction (up to `budget`
/// pairs; beyond it, a deterministic sample) and reports which candidate
/// ordering holds universally.
pub fn resolve_delta_comp(g: &FiniteGroupoid, direction: u8, budget: u64) -> IdentityResolution {
    let c = &g.cat;
    let squares = enumerate_squares(c);
    let mut printed = CandidateScan::new("printed");
    let mut reversed = CandidateScan::new("reversed");

    // index squares by the edge the composition shares
    let key = |sq: &SquareShell| match direction {
        1 => sq.top,
        _ => sq.left,
    };
    let mut by_key: Vec<Vec<usize>> = vec![Vec::new(); c.morphism_count() as usize];
    for (i, sq) in squares.iter().enumerate() {
        by_key[key(sq).0 as usize].push(i);
    }
    let shared = |sq: &SquareShell| match direction {
        1 => sq.bottom,
        _ => sq.right,
    };

    let total: u64 = squares
        .iter()
        .map(|sq| by_key[shared(sq).0 as usize].len() as u64)
        .sum();
    let exhaustive = total <= budget;

    let mut record = |alpha: &SquareShell, beta: &SquareShell| {
        let (p, r) = verify_delta_comp(g, alpha, beta, direction).expect("composable pair");
        let wit = || format!("alpha={alpha:?} beta={beta:?} direction={direction}");
        printed.record(p, wit);
        let wit = || format!("alpha={alpha:?} beta={beta:?} direction={direction}");
        reversed.record(r, wit);
    };

    if exhaustive {
        for alpha in &squares {
            for &j in &by_key[shared(alpha).0 as usize] {
                record(alpha, &squares[j]);
            }
        }
    } else {
        let mut rng = SplitMix64::new(0x5ee1ed + direction as u64);
        let mut sampled = 0;
        while sampled < budget {
            let alpha = &squares[rng.below(squares.len() as u64) as usize];
            let bucket = &by_key[shared(alpha).0 as usize];
            if bucket.is_empty() {
                sampled += 1;
                continue;
            }
            let beta = &squares[bucket[rng.below(bucket.len() as u64) as usize]];
            record(alpha, beta);
            sampled += 1;
        }
    }

    IdentityResolution {
        law: if direction == 1 { "delta-comp-1" } else { "delta-comp-2" },
        candidates: vec![printed.into_candidate(), reversed.into_candidate()],
        resolved: "reversed",
        exhaustive,
    }
}

/// Evaluates the 3-cube defect rule on one cube under both orderings.
/// Conjugators: `u1 = edge(1,+,+)`, `u2 = edge(2,+,+)`, `u3 = edge(3,+,+)`;
/// conjugation is `a^b = b^-1 a b`. The printed form multiplies each side
/// `(δ∂3-)^u3 (δ∂2+) (δ∂1-)^u1 = (δ∂1+)(δ∂2-)^u2 (δ∂3+)`; the reversed form
/// multiplies each side's three factors the other way round.
pub fn verify_cube_delta(g: &FiniteGroupoid, f: &CubeShell) -> (bool, bool) {
    let c = &g.cat;
    let d = |dir, s| delta(g, &face(f, dir, s));
    let u1 = f.edge(Direction::D1, Sign::Pos, Sign::Pos);
    let u2 = f.edge(Direction::D2, Sign::Pos, Sign::Pos);
    let u3 = f.edge(Direction::D3, Sign::Pos, Sign::Pos);
    let conj = |a: MorId, b: MorId| g.conjugate(a, b).expect("typed conjugation");
    let mul3 = |a: MorId, b: MorId, cc: MorId| {
        c.compose(c.compose(a, b).expect("parallel"), cc).expect("parallel")
    };

    let l = [
        conj(d(Direction::D3, Sign::Neg), u3),
        d(Direction::D2, Sign::Pos),
        conj(d(Direction::D1, Sign::Neg), u1),
    ];
    let r = [
        d(Direction::D1, Sign::Pos),
        conj(d(Direction::D2, Sign::Neg), u2),
        d(Direction::D3, Sign::Pos),
    ];
    let printed = mul3(l[0], l[1], l[2]) == mul3(r[0], r[1], r[2]);
    let reversed = mul3(l[2], l[1], l[0]) == mul3(r[2], r[1], r[0]);
    (printed, reversed)
}

/// Enumerates cube shells (depth-first over vertices with hom pruning, then
/// an odometer over edge choices) and resolves the cube defect rule. Beyond
/// `budget` cubes the scan stops and is marked non-exhaustive.
pub fn resolve_cube_delta(g: &FiniteGroupoid, budget: u64) -> IdentityResolution {
    let c = &g.cat;
    let n_obj = c.object_count() as usize;
    let hom: Vec<Vec<Vec<MorId>>> = (0..n_obj)
        .map(|x| {
            (0..n_obj)
                .map(|y| c.hom(ObjId(x as u32), ObjId(y as u32)))
                .collect()
        })
        .collect();

    let mut scan = CubeScan {
        g,
        hom,
        edges: edge_endpoints(),
        budget,
        seen: 0,
        complete: true,
        printed: CandidateScan::new("printed"),
        reversed: CandidateScan::new("reversed"),
        vertices: [0; 8],
    };
    scan.vertex_dfs(0);

    IdentityResolution {
        law: "cube-delta-rule",
        candidates: vec![scan.printed.into_candidate(), scan.reversed.into_candidate()],
        resolved: "reversed",
        exhaustive: scan.complete,
    }
}

struct CubeScan<'a> {
    g: &'a FiniteGroupoid,
    hom: Vec<Vec<Vec<MorId>>>,
    edges: [(Direction, usize, usize); 12],
    budget: u64,
    seen: u64,
    complete: bool,
    printed: CandidateScan,
    reversed: CandidateScan,
    vertices: [usize; 8],
}

impl CubeScan<'_> {
    fn vertex_dfs(&mut self, depth: usize) {
        if self.seen >= self.budget {
            self.complete = false;
            return;
        }
        if depth == 8 {
            self.edge_odometer();
            return;
        }
        let n_obj = self.hom.len();
        'next: for v in 0..n_obj {
            self.vertices[depth] = v;
            // prune on edges whose endpoints are both assigned
            for &(_, from, to) in self.edges.iter() {
                if from <= depth
                    && to <= depth
                    && self.hom[self.vertices[from]][self.vertices[to]].is_empty()
                {
                    continue 'next;
                }
            }
            self.vertex_dfs(depth + 1);
            if !self.complete {
                return;
            }
        }
    }

    fn edge_odometer(&mut self) {
        let lists: Vec<Vec<MorId>> = self
            .edges
            .iter()
            .map(|&(_, from, to)| self.hom[self.vertices[from]][self.vertices[to]].clone())
            .collect();
        if lists.iter().any(|l| l.is_empty()) {
            return;
        }
        let mut idx = [0usize; 12];
        loop {
            if self.seen >= self.budget {
                self.complete = false;
                return;
            }
            let cube = CubeShell {
                vertices: core::array::from_fn(|i| ObjId(self.vertices[i] as u32)),
                edges: core::array::from_fn(|i| lists[i][idx[i]]),
            };
            let (p, r) = verify_cube_delta(self.g, &cube);
            self.seen += 1;
            let wit = || format!("cube edges {:?}", cube.edges);
            self.printed.record(p, wit);
            let wit = || format!("cube edges {:?}", cube.edges);
            self.reversed.record(r, wit);
            let mut k = 11;
            loop {
                idx[k] += 1;
                if idx[k] < lists[k].len() {
                    break;
                }
                idx[k] = 0;
                if k == 0 {
                    return;
                }
                k -= 1;
            }
        }
    }
}
