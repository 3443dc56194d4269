//! The free-group word engine at work: reduction, the cube defect rule
//! reduced symbolically, and the ordering certificates.
//!
//! ```bash
//! cargo run --example symbolic_oracle
//! ```

use whiskered::symbolic::{
    certify_classical_commutator_law, certify_delta_composition, cube_delta_sides,
    equal_in_free_group, reduce, GroupWord, LabelledCube, LabelledSquare,
};

fn main() {
    let a = GroupWord::gen("a");
    let b = GroupWord::gen("b");
    let w = a.mul(&b).mul(&b.inverse()).mul(&a.inverse()).mul(&a);
    println!("a·b·b^-1·a^-1·a reduces to: {}", reduce(&w));

    let sq = LabelledSquare::new("l", "b", "t", "r");
    println!("defect of the generic labelled square: {}", sq.delta());

    // both sides of the cube rule, multiplied in the resolved order, reduce
    // to one word
    let cube = LabelledCube::generic();
    let (lhs, rhs) = cube_delta_sides(&cube, false);
    println!("cube rule, resolved order: lhs = {lhs}");
    println!("                           rhs = {rhs}");
    println!("equal in the free group: {}", equal_in_free_group(&lhs, &rhs));

    let (plhs, prhs) = cube_delta_sides(&cube, true);
    println!(
        "cube rule, printed order: equal = {} (lhs = {plhs})",
        equal_in_free_group(&plhs, &prhs)
    );

    // certificates for the composite-defect rule and the classical law
    for dir in [1, 2] {
        println!(
            "composite defect, direction {dir}: printed {}, reversed {}",
            certify_delta_composition(dir, true),
            certify_delta_composition(dir, false),
        );
    }
    println!(
        "classical commutator law: printed {}, reversed {}",
        certify_classical_commutator_law(true),
        certify_classical_commutator_law(false),
    );
}
