//! Commutators in whiskered groupoids: the table on the S3 bundle, the
//! commutativity criterion in both directions, and the resolved cube laws.
//!
//! ```bash
//! cargo run --example commutators
//! ```

use whiskered::commutator::{
    check_commutativity_criterion, commutator, resolve_biderivation,
    resolve_classical_commutator_law, resolve_cube_commutator_rule,
    resolve_cube_face_commutators,
};
use whiskered::constructions::{codiscrete_whiskered, instance, presets};

fn main() {
    let inst = instance("bundle", &["s3_trivial"]).unwrap();
    let w = &inst.structure;
    let names = &inst.morphism_names;
    let c = w.category();

    println!("commutator table on the one-object S3 bundle (classical [a,b] = a^-1 b^-1 a b):");
    for a in c.morphisms().take(3) {
        for b in c.morphisms() {
            let k = commutator(w, a, b).unwrap();
            print!("[{},{}]={}  ", names[a.0 as usize], names[b.0 as usize], names[k.0 as usize]);
        }
        println!();
    }
    println!("...");

    // the criterion, on instances where each direction shows
    for (label, w) in [
        ("trivial Z/3 bundle", presets::bundle_z3_trivial()),
        ("codiscrete on S3", codiscrete_whiskered(&presets::monoid_s3())),
        ("twisted S3 bundle", presets::bundle_s3_twist()),
    ] {
        let crit = check_commutativity_criterion(&w).unwrap();
        println!(
            "{label}: rules {} / structure {} -> biconditional {}",
            if crit.rules_hold() { "hold" } else { "fail" },
            if crit.structure_commutative() { "commutative" } else { "noncommutative" },
            if crit.biconditional_holds() { "holds" } else { "FAILS" },
        );
    }

    // the cube laws on the twisted bundle, with the ordering resolved rather
    // than assumed
    let tw = presets::bundle_s3_twist();
    let (left, right) = resolve_biderivation(&tw).unwrap();
    println!("biderivation left law: {} (derived candidate)", left.verdict());
    println!("biderivation right law: {}", right.verdict());
    let faces = resolve_cube_face_commutators(&tw).unwrap();
    println!(
        "face commutators: {} over {} triples",
        faces.verdict(),
        faces.candidate("printed").unwrap().checked
    );
    let rule = resolve_cube_commutator_rule(&tw).unwrap();
    println!("cube commutator rule: {}", rule.verdict());

    // the classical law needs the big brother S4 to show its ordering
    for (label, g) in [
        ("S3", presets::bundle_s3_trivial()),
        ("S4", presets::bundle_s4_trivial()),
    ] {
        let res = resolve_classical_commutator_law(g.groupoid().unwrap()).unwrap();
        println!(
            "classical law on {label}: printed {}, reversed {}",
            if res.candidate("printed").unwrap().holds { "holds" } else { "fails" },
            if res.candidate("reversed").unwrap().holds { "holds" } else { "fails" },
        );
    }
}
