//! The rational linearization: formal sums, the linear defect, brackets, the
//! cube defect decomposition and the bracket-defect equation that replaces
//! the plain bracket identity.
//!
//! ```bash
//! cargo run --example linear_brackets
//! ```

use whiskered::constructions::{instance, presets};
use whiskered::core::MorId;
use whiskered::linear::{
    leibniz_defect, leibniz_identity_holds, linearize, render_formal_sum,
    resolve_cube_defect_decomposition, resolve_leibniz_defect,
};

fn main() {
    let inst = instance("algebra", &["free2"]).unwrap();
    let alg = linearize(&inst.structure);
    let names = &inst.morphism_names;

    let (s, t) = (MorId(1), MorId(2));
    let b = alg.bracket(&alg.basis(s), &alg.basis(t));
    println!("monoid algebra on words of length <= 2:");
    println!("  [s,t] = {}", render_formal_sum(&b, Some(names)));
    let ss = alg.basis(s).add(&alg.basis(t)).unwrap();
    println!("  [s+t, s] = {}", render_formal_sum(&alg.bracket(&ss, &alg.basis(s)), Some(names)));

    // the defect decomposition of random cubes, exactly
    let res = resolve_cube_defect_decomposition(&alg, 300, 0xd1ce).unwrap();
    let c = res.candidate("printed").unwrap();
    println!("cube defect decomposition on {} random cubes: {}", c.checked, res.verdict());

    // with trivial whiskering the bracket is the negated algebra commutator,
    // so the plain bracket identity holds...
    let scan = resolve_leibniz_defect(&alg).unwrap();
    println!(
        "trivial whiskering: defect equation {}, plain identity failure: {:?}",
        scan.resolution.verdict(),
        scan.identity_failure,
    );

    // ...but nontrivial whiskering genuinely breaks it, while the defect
    // equation keeps holding exactly
    let twisted = linearize(&presets::bundle_s3_twist());
    let scan = resolve_leibniz_defect(&twisted).unwrap();
    println!(
        "twisted S3 bundle: defect equation {}, plain identity fails at {:?}",
        scan.resolution.verdict(),
        scan.identity_failure,
    );
    if let Some((a, b, c)) = scan.identity_failure {
        let d = leibniz_defect(&twisted, a, b, c).unwrap();
        println!("  defect at that triple: {}", d.lhs);
        println!(
            "  plain identity holds there: {}",
            leibniz_identity_holds(&twisted, a, b, c).unwrap()
        );
    }
}
