//! Whiskering structures: the star square, the two induced multiplications,
//! and the strict-monoidal versus sesquicategory classification.
//!
//! ```bash
//! cargo run --example whiskering
//! ```

use whiskered::constructions::{codiscrete_whiskered, instance, presets};
use whiskered::whisker::{is_commutative_whiskered, l_mult, r_mult, star, Commutativity};
use whiskered::MorId;

fn main() {
    let inst = instance("bundle", &["s3_trivial"]).unwrap();
    let w = &inst.structure;
    let names = &inst.morphism_names;

    let (a, b) = (MorId(2), MorId(3));
    let sq = star(w, a, b);
    println!("star({}, {}) has edges:", names[a.0 as usize], names[b.0 as usize]);
    println!(
        "  left {}  bottom {}  top {}  right {}",
        names[sq.left.0 as usize],
        names[sq.bottom.0 as usize],
        names[sq.top.0 as usize],
        names[sq.right.0 as usize],
    );

    let l = l_mult(w, a, b);
    let r = r_mult(w, a, b);
    println!(
        "the two paths around it: l = {}, r = {}",
        names[l.0 as usize], names[r.0 as usize]
    );

    match is_commutative_whiskered(w) {
        Commutativity::Sesquicategory { witness: (x, y) } => println!(
            "S3 bundle is a sesquicategory: l != r at ({}, {})",
            names[x.0 as usize], names[y.0 as usize]
        ),
        other => println!("unexpected: {other:?}"),
    }

    // commutative cases induce a strict monoidal product
    for (label, w) in [
        ("codiscrete on Z/4", codiscrete_whiskered(&presets::monoid_z4())),
        ("trivial Z/3 bundle", presets::bundle_z3_trivial()),
        ("twisted Z/4 bundle", presets::bundle_z4_twist()),
    ] {
        match is_commutative_whiskered(&w) {
            Commutativity::StrictMonoidal => {
                println!("{label}: strict monoidal (interchange, associativity, unit verified)")
            }
            Commutativity::Sesquicategory { witness } => {
                println!("{label}: sesquicategory, witness {witness:?}")
            }
            Commutativity::LawFailure { law, witness } => {
                println!("{label}: broken {law} at {witness}")
            }
        }
    }
}
