//! Computing with finite whiskered categories and groupoids.
//!
//! The crate builds square and cube shells over finite categories, evaluates
//! the two defect operators (the groupoid-valued one and the linear one),
//! derives commutators and brackets from the star square, and checks every
//! law exhaustively on finite instances. Where the display order of a product
//! of defects is ambiguous, the checkers evaluate every candidate ordering
//! and report which one holds, backed by a free-group oracle; nothing is
//! hard-coded.
//!
//! Start with the runnable examples (`cargo run --example <name>`) or the
//! `whiskered` command-line tool.

pub mod commutator;
pub mod constructions;
pub mod core;
pub mod cubes;
pub mod io;
pub mod linear;
pub mod mutate;
pub mod report;
pub mod symbolic;
pub mod util;
pub mod whisker;

pub use crate::commutator::{check_commutativity_criterion, commutator};
pub use crate::core::{
    validate_category, validate_groupoid, FiniteCategory, FiniteGroupoid, MorId, ObjId,
    SizeLimits, ValidationReport, Violation,
};
pub use crate::cubes::{
    comp1, comp2, delta, face, make_square, CubeShell, Direction, IdentityResolution, Sign,
    SquareShell, Verdict,
};
pub use crate::linear::{linearize, FormalSum, LinearCategory, LinearSquare, Rational};
pub use crate::symbolic::GroupWord;
pub use crate::whisker::{
    cube_of_three, is_commutative_whiskered, l_mult, r_mult, star, validate_whiskering,
    BaseCategory, Commutativity, WhiskeredCategory, Whiskering,
};
