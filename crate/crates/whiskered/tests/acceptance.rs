//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Everything is exact arithmetic and deterministic scans; there are no
//! tolerances to tune.

use std::process::Command;

use whiskered::commutator::{
    check_commutativity_criterion, commutator, resolve_biderivation,
    resolve_classical_commutator_law, resolve_cube_commutator_rule,
    resolve_cube_face_commutators,
};
use whiskered::constructions::{instance, presets, registry, Instance};
use whiskered::core::{MorId, SizeLimits, Violation};
use whiskered::cubes::{resolve_cube_delta, resolve_delta_comp};
use whiskered::io::{build, document_of_instance, from_text, render, LoadError, StructureDocument};
use whiskered::linear::{
    add1, add2, linearize, random_sum, rational, resolve_cube_defect_decomposition,
    resolve_leibniz_defect, LinearSquare,
};
use whiskered::mutate;
use whiskered::symbolic::{
    certify_classical_commutator_law, certify_delta_composition, cube_delta_sides,
    GroupWord, LabelledCube,
};
use whiskered::util::SplitMix64;
use whiskered::whisker::{is_commutative_whiskered, validate_whiskering, Commutativity};
use whiskered::{comp1, comp2, star};

fn criterion(n: u32, label: &str, ok: bool, detail: String) {
    println!("criterion {n} ({label}): {}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {n} ({label}): {detail}");
}

/// Re-evaluates a reported violation directly against the document tables,
/// independently of the validator that produced it.
fn confirm_violation(doc: &StructureDocument, v: &Violation) -> bool {
    let n_mor = doc.morphisms.len() as u32;
    let n_obj = doc.objects;
    let cell = |a: u32, b: u32| doc.compose[a as usize][b as usize];
    let src = |m: u32| doc.morphisms[m as usize].0;
    let tgt = |m: u32| doc.morphisms[m as usize].1;
    let wk_prod = |x: u32, y: u32| doc.monoid.as_ref().unwrap().table[x as usize][y as usize];
    let lact = |x: u32, a: u32| doc.left_action.as_ref().unwrap()[x as usize][a as usize];
    let ract = |a: u32, y: u32| doc.right_action.as_ref().unwrap()[a as usize][y as usize];
    match *v {
        Violation::SizeExceeded { .. } => n_obj > 64 || n_mor > 4096,
        Violation::EndpointRange { mor } => src(mor.0) >= n_obj || tgt(mor.0) >= n_obj,
        Violation::IdentityRange { object } => doc.identity[object.0 as usize] >= n_mor,
        Violation::IdentityEndpoints { object, identity } => {
            src(identity.0) != object.0 || tgt(identity.0) != object.0
        }
        Violation::ComposeRange { a, b } => matches!(cell(a.0, b.0), Some(x) if x >= n_mor),
        Violation::ClosureMissing { a, b } => tgt(a.0) == src(b.0) && cell(a.0, b.0).is_none(),
        Violation::ClosureSpurious { a, b } => tgt(a.0) != src(b.0) && cell(a.0, b.0).is_some(),
        Violation::CompositeEndpoints { a, b, composite } => {
            cell(a.0, b.0) == Some(composite.0)
                && (src(composite.0) != src(a.0) || tgt(composite.0) != tgt(b.0))
        }
        Violation::Associativity { a, b, c, .. } => {
            let ab = cell(a.0, b.0);
            let bc = cell(b.0, c.0);
            let lhs = ab.and_then(|x| cell(x, c.0));
            let rhs = bc.and_then(|x| cell(a.0, x));
            lhs != rhs || lhs.is_none()
        }
        Violation::LeftUnit { a, .. } => {
            cell(doc.identity[src(a.0) as usize], a.0) != Some(a.0)
        }
        Violation::RightUnit { a, .. } => {
            cell(a.0, doc.identity[tgt(a.0) as usize]) != Some(a.0)
        }
        Violation::InverseRange { a } => doc.inverse.as_ref().unwrap()[a.0 as usize] >= n_mor,
        Violation::LeftInverse { a, .. } => {
            let ia = doc.inverse.as_ref().unwrap()[a.0 as usize];
            cell(a.0, ia) != Some(doc.identity[src(a.0) as usize])
        }
        Violation::RightInverse { a, .. } => {
            let ia = doc.inverse.as_ref().unwrap()[a.0 as usize];
            cell(ia, a.0) != Some(doc.identity[tgt(a.0) as usize])
        }
        Violation::MonoidUnitRange { unit } => unit.0 >= n_obj,
        Violation::MonoidRange { x, y } => wk_prod(x.0, y.0) >= n_obj,
        Violation::MonoidAssociativity { x, y, z } => {
            wk_prod(wk_prod(x.0, y.0), z.0) != wk_prod(x.0, wk_prod(y.0, z.0))
        }
        Violation::MonoidUnit { x } => {
            let u = doc.monoid.as_ref().unwrap().unit;
            wk_prod(u, x.0) != x.0 || wk_prod(x.0, u) != x.0
        }
        Violation::ActionRange { left, x, a } => {
            let v = if left { lact(x.0, a.0) } else { ract(a.0, x.0) };
            v >= n_mor
        }
        Violation::ActionUnit { left, a, .. } => {
            let u = doc.monoid.as_ref().unwrap().unit;
            let v = if left { lact(u, a.0) } else { ract(a.0, u) };
            v != a.0
        }
        Violation::ActionAssociativity { left, x, y, a } => {
            if left {
                lact(wk_prod(x.0, y.0), a.0) != lact(x.0, lact(y.0, a.0))
            } else {
                ract(a.0, wk_prod(x.0, y.0)) != ract(ract(a.0, x.0), y.0)
            }
        }
        Violation::ActionComposition { left, x, a, b } => {
            let Some(ab) = cell(a.0, b.0) else { return false };
            if left {
                cell(lact(x.0, a.0), lact(x.0, b.0)) != Some(lact(x.0, ab))
            } else {
                cell(ract(a.0, x.0), ract(b.0, x.0)) != Some(ract(ab, x.0))
            }
        }
        Violation::ActionIdentity { left, x, y } => {
            let idy = doc.identity[y.0 as usize];
            if left {
                lact(x.0, idy) != doc.identity[wk_prod(x.0, y.0) as usize]
            } else {
                ract(idy, x.0) != doc.identity[wk_prod(y.0, x.0) as usize]
            }
        }
        Violation::ActionEndpoints { left, x, a, .. } => {
            if left {
                let xa = lact(x.0, a.0);
                src(xa) != wk_prod(x.0, src(a.0)) || tgt(xa) != wk_prod(x.0, tgt(a.0))
            } else {
                let ax = ract(a.0, x.0);
                src(ax) != wk_prod(src(a.0), x.0) || tgt(ax) != wk_prod(tgt(a.0), x.0)
            }
        }
        Violation::ActionCompatibility { x, a, y } => {
            lact(x.0, ract(a.0, y.0)) != ract(lact(x.0, a.0), y.0)
        }
    }
}

fn groupoid_instances() -> Vec<Instance> {
    registry().into_iter().filter(|i| i.structure.groupoid().is_some()).collect()
}

/// Independent brute-force re-validation of a document, evaluated directly
/// on the raw tables. Used to confirm the rare mutation that lands on a
/// different but still-valid structure (a one-cell change of an idempotent
/// monoid table can do that).
fn document_is_valid(doc: &StructureDocument) -> bool {
    let n_mor = doc.morphisms.len() as u32;
    let n_obj = doc.objects;
    let cell = |a: u32, b: u32| doc.compose[a as usize][b as usize];
    let src = |m: u32| doc.morphisms[m as usize].0;
    let tgt = |m: u32| doc.morphisms[m as usize].1;
    let in_range = doc.morphisms.iter().all(|&(s, t)| s < n_obj && t < n_obj)
        && doc.identity.iter().all(|&i| i < n_mor)
        && doc.compose.iter().flatten().all(|c| c.is_none_or(|v| v < n_mor));
    if !in_range {
        return false;
    }
    for a in 0..n_mor {
        for b in 0..n_mor {
            match cell(a, b) {
                Some(ab) => {
                    if tgt(a) != src(b) || src(ab) != src(a) || tgt(ab) != tgt(b) {
                        return false;
                    }
                }
                None => {
                    if tgt(a) == src(b) {
                        return false;
                    }
                }
            }
            for c in 0..n_mor {
                let lhs = cell(a, b).and_then(|ab| cell(ab, c));
                let rhs = cell(b, c).and_then(|bc| cell(a, bc));
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    for x in 0..n_obj {
        let id = doc.identity[x as usize];
        if src(id) != x || tgt(id) != x {
            return false;
        }
    }
    for a in 0..n_mor {
        if cell(doc.identity[src(a) as usize], a) != Some(a)
            || cell(a, doc.identity[tgt(a) as usize]) != Some(a)
        {
            return false;
        }
    }
    if let Some(inv) = &doc.inverse {
        if inv.iter().any(|&i| i >= n_mor) {
            return false;
        }
        for a in 0..n_mor {
            let ia = inv[a as usize];
            if cell(a, ia) != Some(doc.identity[src(a) as usize])
                || cell(ia, a) != Some(doc.identity[tgt(a) as usize])
            {
                return false;
            }
        }
    }
    if let Some(monoid) = &doc.monoid {
        if monoid.unit >= n_obj || monoid.table.iter().flatten().any(|&v| v >= n_obj) {
            return false;
        }
        let prod = |x: u32, y: u32| monoid.table[x as usize][y as usize];
        for x in 0..n_obj {
            if prod(monoid.unit, x) != x || prod(x, monoid.unit) != x {
                return false;
            }
            for y in 0..n_obj {
                for z in 0..n_obj {
                    if prod(prod(x, y), z) != prod(x, prod(y, z)) {
                        return false;
                    }
                }
            }
        }
        let left = doc.left_action.as_ref().unwrap();
        let right = doc.right_action.as_ref().unwrap();
        if left.iter().flatten().chain(right.iter().flatten()).any(|&v| v >= n_mor) {
            return false;
        }
        let lact = |x: u32, a: u32| left[x as usize][a as usize];
        let ract = |a: u32, y: u32| right[a as usize][y as usize];
        for a in 0..n_mor {
            if lact(monoid.unit, a) != a || ract(a, monoid.unit) != a {
                return false;
            }
        }
        for x in 0..n_obj {
            for a in 0..n_mor {
                let xa = lact(x, a);
                if src(xa) != prod(x, src(a)) || tgt(xa) != prod(x, tgt(a)) {
                    return false;
                }
                let ax = ract(a, x);
                if src(ax) != prod(src(a), x) || tgt(ax) != prod(tgt(a), x) {
                    return false;
                }
                for y in 0..n_obj {
                    if lact(prod(x, y), a) != lact(x, lact(y, a))
                        || ract(a, prod(x, y)) != ract(ract(a, x), y)
                        || lact(x, ract(a, y)) != ract(lact(x, a), y)
                    {
                        return false;
                    }
                }
                for b in 0..n_mor {
                    if let Some(ab) = cell(a, b) {
                        if cell(lact(x, a), lact(x, b)) != Some(lact(x, ab))
                            || cell(ract(a, x), ract(b, x)) != Some(ract(ab, x))
                        {
                            return false;
                        }
                    }
                }
            }
            for y in 0..n_obj {
                let idy = doc.identity[y as usize];
                if lact(x, idy) != doc.identity[prod(x, y) as usize]
                    || ract(idy, x) != doc.identity[prod(y, x) as usize]
                {
                    return false;
                }
            }
        }
    }
    true
}

#[test]
fn criterion_1_validators_and_mutation_detection() {
    let mut detail = String::new();
    let mut ok = true;
    let mut rng = SplitMix64::new(0xacce97ed);
    for inst in registry() {
        let report = validate_whiskering(&inst.structure);
        if !report.is_empty() {
            ok = false;
            detail = format!("{} fails validation: {report}", inst.name);
            break;
        }
        let pristine = document_of_instance(&inst);
        let mut detected = 0;
        let mut attempts = 0;
        while detected < 100 && attempts < 200 {
            attempts += 1;
            let mut doc = pristine.clone();
            let what = mutate::random_mutation(&mut doc, &mut rng);
            match build(&doc, SizeLimits::default()) {
                Err(LoadError::Invalid { report }) => {
                    let witness = &report.violations[0];
                    if !confirm_violation(&doc, witness) {
                        ok = false;
                        detail = format!(
                            "{}: witness {witness} for mutation ({what}) does not re-check",
                            inst.name
                        );
                        break;
                    }
                    detected += 1;
                }
                Ok(_) => {
                    // a mutation may land on a different valid structure;
                    // that is only acceptable if it truly is one
                    if !document_is_valid(&doc) {
                        ok = false;
                        detail = format!(
                            "{}: undetected invalid mutation ({what})",
                            inst.name
                        );
                        break;
                    }
                }
                Err(other) => {
                    ok = false;
                    detail =
                        format!("{}: mutation ({what}) produced a non-validation error: {other}", inst.name);
                    break;
                }
            }
        }
        if ok && detected < 100 {
            ok = false;
            detail = format!("{}: only {detected} detected mutations in {attempts} attempts", inst.name);
        }
        if !ok {
            break;
        }
    }
    criterion(1, "validators and mutation detection", ok, detail);
}

#[test]
fn criterion_2_delta_composition_ordering_resolution() {
    let structures = [presets::bundle_s3_trivial(), presets::bundle_z4_twist()];
    let mut ok = true;
    let mut detail = String::new();
    let mut resolved_per_direction = Vec::new();
    for dir in [1u8, 2] {
        let mut printed_everywhere = true;
        let mut reversed_everywhere = true;
        for w in &structures {
            let g = w.groupoid().expect("bundles are groupoids");
            let res = resolve_delta_comp(g, dir, 2_000_000);
            if !res.exhaustive {
                ok = false;
                detail = format!("direction {dir}: scan was not exhaustive");
            }
            printed_everywhere &= res.candidate("printed").unwrap().holds;
            reversed_everywhere &= res.candidate("reversed").unwrap().holds;
        }
        let universal: Vec<&str> = [("printed", printed_everywhere), ("reversed", reversed_everywhere)]
            .iter()
            .filter(|(_, h)| *h)
            .map(|(n, _)| *n)
            .collect();
        if universal != ["reversed"] {
            ok = false;
            detail = format!("direction {dir}: universal orderings {universal:?}");
        }
        resolved_per_direction.push("reversed");
        // the symbolic oracle certifies the same resolution
        if certify_delta_composition(dir, true) || !certify_delta_composition(dir, false) {
            ok = false;
            detail = format!("direction {dir}: free-group certificate disagrees");
        }
    }
    if resolved_per_direction[0] != resolved_per_direction[1] {
        ok = false;
        detail = "directions resolve differently".into();
    }
    criterion(2, "composite-defect ordering resolution", ok, detail);
}

#[test]
fn criterion_3_cube_defect_rule() {
    let mut ok = true;
    let mut detail = String::new();

    // symbolic: both resolved sides reduce to the one word
    let cube = LabelledCube::generic();
    let (lhs, rhs) = cube_delta_sides(&cube, false);
    let expected = GroupWord::from_letters(vec![
        ("a1".into(), -1i8),
        ("b2".into(), -1),
        ("c3".into(), -1),
        ("a3".into(), 1),
        ("b4".into(), 1),
        ("c1".into(), 1),
    ]);
    if lhs != expected || rhs != expected {
        ok = false;
        detail = format!("symbolic sides reduce to {lhs} and {rhs}, expected {expected}");
    }

    // exhaustive over every 3-cube of the small instances
    let small = [
        ("bundle:z3_trivial", presets::bundle_z3_trivial()),
        ("bundle:z2_pair", presets::bundle_z2_pair()),
        ("codiscrete:z3", instance("codiscrete", &["z3"]).unwrap().structure),
    ];
    for (name, w) in &small {
        let g = w.groupoid().expect("groupoid");
        let res = resolve_cube_delta(g, 600_000);
        if !(res.exhaustive && res.candidate("reversed").unwrap().holds) {
            ok = false;
            detail = format!("{name}: exhaustive={} reversed holds={}", res.exhaustive,
                res.candidate("reversed").unwrap().holds);
        }
    }

    // nonabelian support: a deterministic sample on the S3 bundle separates
    // the orderings
    let s3 = presets::bundle_s3_trivial();
    let res = resolve_cube_delta(s3.groupoid().unwrap(), 20_000);
    if !res.candidate("reversed").unwrap().holds || res.candidate("printed").unwrap().holds {
        ok = false;
        detail = "sampled S3 cubes do not separate the orderings".into();
    }
    criterion(3, "cube defect rule", ok, detail);
}

#[test]
fn criterion_4_star_bimorphism_and_monoidal_detection() {
    let mut ok = true;
    let mut detail = String::new();
    for inst in registry() {
        let w = &inst.structure;
        let c = w.category();
        for a in c.morphisms() {
            for d in c.morphisms() {
                let Some(ad) = c.compose_entry(a, d) else { continue };
                for b in c.morphisms() {
                    let law1 = comp1(c, &star(w, a, b), &star(w, d, b))
                        .map(|rhs| rhs == star(w, ad, b))
                        .unwrap_or(false);
                    let law2 = comp2(c, &star(w, b, a), &star(w, b, d))
                        .map(|rhs| rhs == star(w, b, ad))
                        .unwrap_or(false);
                    if !(law1 && law2) {
                        ok = false;
                        detail = format!("{}: bimorphism fails at a={a} d={d} b={b}", inst.name);
                    }
                }
            }
        }
    }
    for name in ["z2", "z4", "z2xz2", "s3"] {
        let w = instance("codiscrete", &[name]).unwrap().structure;
        if !is_commutative_whiskered(&w).is_commutative() {
            ok = false;
            detail = format!("codiscrete:{name} not detected strict monoidal");
        }
    }
    for w in [presets::bundle_z3_trivial(), presets::bundle_z4_twist()] {
        if !is_commutative_whiskered(&w).is_commutative() {
            ok = false;
            detail = "abelian bundle not detected strict monoidal".into();
        }
    }
    match is_commutative_whiskered(&presets::bundle_s3_trivial()) {
        Commutativity::Sesquicategory { witness: (a, b) } => {
            let w = presets::bundle_s3_trivial();
            if whiskered::l_mult(&w, a, b) == whiskered::r_mult(&w, a, b) {
                ok = false;
                detail = "sesquicategory witness does not separate l and r".into();
            }
        }
        other => {
            ok = false;
            detail = format!("S3 bundle misclassified: {other:?}");
        }
    }
    criterion(4, "star bimorphism and monoidal detection", ok, detail);
}

#[test]
fn criterion_5_classical_commutators_on_s3() {
    // independent permutation oracle
    let perms = presets::s3_permutations();
    let mul = |p: [usize; 3], q: [usize; 3]| -> [usize; 3] { core::array::from_fn(|k| q[p[k]]) };
    let inv = |p: [usize; 3]| -> [usize; 3] {
        let mut r = [0; 3];
        for (k, &v) in p.iter().enumerate() {
            r[v] = k;
        }
        r
    };
    let w = presets::bundle_s3_trivial();
    let mut ok = true;
    let mut detail = String::new();
    let mut pairs = 0;
    for (i, &p) in perms.iter().enumerate() {
        for (j, &q) in perms.iter().enumerate() {
            let got = commutator(&w, MorId(i as u32), MorId(j as u32)).unwrap();
            let expect = mul(mul(inv(p), inv(q)), mul(p, q));
            let expect = perms.iter().position(|&r| r == expect).unwrap();
            pairs += 1;
            if got.0 as usize != expect {
                ok = false;
                detail = format!("pair ({i},{j}): got m{}, oracle m{expect}", got.0);
            }
        }
    }
    ok &= pairs == 36;
    criterion(5, "classical commutators on S3", ok, detail);
}

#[test]
fn criterion_6_commutativity_criterion_biconditional() {
    let mut ok = true;
    let mut detail = String::new();
    let mut saw_both_true = false;
    let mut saw_both_false = false;
    for inst in groupoid_instances() {
        let crit = check_commutativity_criterion(&inst.structure).unwrap();
        if !crit.biconditional_holds() {
            ok = false;
            detail = format!("{}: {:?}", inst.name, crit.witness());
        }
        saw_both_true |= crit.rules_hold() && crit.structure_commutative();
        saw_both_false |= !crit.rules_hold() && !crit.structure_commutative();
    }
    if !(saw_both_true && saw_both_false) {
        ok = false;
        detail = format!("both directions exercised: true={saw_both_true} false={saw_both_false}");
    }
    criterion(6, "commutativity criterion biconditional", ok, detail);
}

#[test]
fn criterion_7_commutator_laws() {
    let mut ok = true;
    let mut detail = String::new();
    let bundles = [
        ("bundle:s3_trivial", presets::bundle_s3_trivial()),
        ("bundle:z4_twist", presets::bundle_z4_twist()),
        ("bundle:e_absorb", presets::bundle_e_absorb()),
        ("bundle:s3_twist", presets::bundle_s3_twist()),
        ("bundle:s4_trivial", presets::bundle_s4_trivial()),
    ];
    for (name, w) in &bundles {
        let (left, right) = resolve_biderivation(w).unwrap();
        if !left.candidate("derived").unwrap().holds || !right.candidate("printed").unwrap().holds {
            ok = false;
            detail = format!("{name}: resolved biderivation fails");
        }
        let faces = resolve_cube_face_commutators(w).unwrap();
        if !faces.candidate("printed").unwrap().holds {
            ok = false;
            detail = format!("{name}: face commutators fail: {:?}", faces.witness());
        }
        let rule = resolve_cube_commutator_rule(w).unwrap();
        if !rule.candidate("reversed").unwrap().holds {
            ok = false;
            detail = format!("{name}: cube commutator rule fails: {:?}", rule.witness());
        }
    }
    // the classical law: all S3 triples under the resolved ordering, plus the
    // free-group certificate
    let s3 = presets::bundle_s3_trivial();
    let res = resolve_classical_commutator_law(s3.groupoid().unwrap()).unwrap();
    if !res.candidate("reversed").unwrap().holds {
        ok = false;
        detail = "classical law fails on S3 under the resolved ordering".into();
    }
    if certify_classical_commutator_law(true) || !certify_classical_commutator_law(false) {
        ok = false;
        detail = "classical law free-group certificate disagrees".into();
    }
    criterion(7, "biderivation, face commutators, cube rule, classical law", ok, detail);
}

#[test]
fn criterion_8_linear_brackets_and_defects() {
    let mut ok = true;
    let mut detail = String::new();

    // bracket = -ab + ba on one-object monoid algebras, all basis pairs
    for name in ["free2", "s3", "lz3"] {
        let alg = linearize(&instance("algebra", &[name]).unwrap().structure);
        let c = alg.category();
        for a in c.morphisms() {
            for b in c.morphisms() {
                let got = alg.bracket(&alg.basis(a), &alg.basis(b));
                let ab = c.compose(a, b).unwrap();
                let ba = c.compose(b, a).unwrap();
                let expect = alg.basis(ba).sub(&alg.basis(ab)).unwrap();
                if got != expect {
                    ok = false;
                    detail = format!("algebra:{name}: [{a},{b}] != -ab + ba");
                }
            }
        }
    }

    // defect additivity over every basis square pair in both directions
    for name in ["z3", "s3"] {
        let alg = linearize(&instance("algebra", &[name]).unwrap().structure);
        let c = alg.category();
        let n = c.morphism_count();
        let mut checked = 0u64;
        for t in 0..n {
            for bo in 0..n {
                for l in 0..n {
                    for r in 0..n {
                        let sq = LinearSquare {
                            top: alg.basis(MorId(t)),
                            bottom: alg.basis(MorId(bo)),
                            left: alg.basis(MorId(l)),
                            right: alg.basis(MorId(r)),
                        };
                        // +1 partner: same left/right, basis top/bottom shifted
                        let other = LinearSquare {
                            top: alg.basis(MorId((t + 1) % n)),
                            bottom: alg.basis(MorId((bo + 1) % n)),
                            left: sq.left.clone(),
                            right: sq.right.clone(),
                        };
                        let s = add1(&sq, &other).unwrap();
                        if alg.delta(&s).unwrap()
                            != alg.delta(&sq).unwrap().add(&alg.delta(&other).unwrap()).unwrap()
                        {
                            ok = false;
                            detail = format!("algebra:{name}: +1 additivity fails");
                        }
                        let other = LinearSquare {
                            top: sq.top.clone(),
                            bottom: sq.bottom.clone(),
                            left: alg.basis(MorId((l + 1) % n)),
                            right: alg.basis(MorId((r + 1) % n)),
                        };
                        let s = add2(&sq, &other).unwrap();
                        if alg.delta(&s).unwrap()
                            != alg.delta(&sq).unwrap().add(&alg.delta(&other).unwrap()).unwrap()
                        {
                            ok = false;
                            detail = format!("algebra:{name}: +2 additivity fails");
                        }
                        checked += 2;
                    }
                }
            }
        }
        ok &= checked > 0;
    }
    // and on random rational-coefficient squares
    {
        let alg = linearize(&instance("algebra", &["free2"]).unwrap().structure);
        let mut rng = SplitMix64::new(0xadd);
        let obj = whiskered::ObjId(0);
        for _ in 0..300 {
            let mk = |rng: &mut SplitMix64| {
                random_sum(&alg, obj, obj, rng).scaled(&(rational(1) / rational(2)))
            };
            let alpha = LinearSquare { top: mk(&mut rng), bottom: mk(&mut rng), left: mk(&mut rng), right: mk(&mut rng) };
            let beta = LinearSquare {
                top: mk(&mut rng),
                bottom: mk(&mut rng),
                left: alpha.left.clone(),
                right: alpha.right.clone(),
            };
            let s = add1(&alpha, &beta).unwrap();
            if alg.delta(&s).unwrap()
                != alg.delta(&alpha).unwrap().add(&alg.delta(&beta).unwrap()).unwrap()
            {
                ok = false;
                detail = "rational +1 additivity fails".into();
            }
        }
    }

    // cube defect decomposition on 1000 random integer-coefficient cubes
    let alg = linearize(&instance("algebra", &["free2"]).unwrap().structure);
    let res = resolve_cube_defect_decomposition(&alg, 1000, 0xdecade).unwrap();
    let c = res.candidate("printed").unwrap();
    if !(c.holds && c.checked == 1000) {
        ok = false;
        detail = format!("cube decomposition: holds={} checked={}", c.holds, c.checked);
    }

    // bracket-defect equation exhaustively on the small algebras, while the
    // plain bracket identity fails somewhere under nontrivial whiskering
    for name in ["z3", "z4", "s3", "lz3"] {
        let alg = linearize(&instance("algebra", &[name]).unwrap().structure);
        let scan = resolve_leibniz_defect(&alg).unwrap();
        if !scan.resolution.candidate("printed").unwrap().holds {
            ok = false;
            detail = format!("algebra:{name}: defect equation fails");
        }
    }
    let twisted = linearize(&presets::bundle_s3_twist());
    let scan = resolve_leibniz_defect(&twisted).unwrap();
    if !scan.resolution.candidate("printed").unwrap().holds {
        ok = false;
        detail = "twisted bundle: defect equation fails".into();
    }
    if scan.identity_failure.is_none() {
        ok = false;
        detail = "no witness that the plain bracket identity fails".into();
    }
    criterion(8, "linear brackets, additivity, defect equations", ok, detail);
}

#[test]
fn criterion_9_cli_round_trip_and_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_whiskered");
    let dir = std::env::temp_dir().join(format!("whiskered-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let mut ok = true;
    let mut detail = String::new();

    // canonical round trip through the library path
    for inst in registry() {
        let doc = document_of_instance(&inst);
        let text = render(&doc);
        let loaded = from_text(&text, SizeLimits::default()).unwrap();
        if render(&loaded.document) != text {
            ok = false;
            detail = format!("{}: round trip not byte-identical", inst.name);
        }
    }

    // generate | validate via the binary, byte-identical across two runs
    let gen = |args: &[&str]| {
        let out = Command::new(bin).args(args).output().expect("spawn");
        (out.status.code(), out.stdout, out.stderr)
    };
    let (code, doc1, _) = gen(&["generate", "bundle", "z4_twist"]);
    let (_, doc2, _) = gen(&["generate", "bundle", "z4_twist"]);
    if code != Some(0) || doc1 != doc2 {
        ok = false;
        detail = "generate is not deterministic".into();
    }
    let good = dir.join("z4_twist.json");
    std::fs::write(&good, &doc1).unwrap();
    let (code, _, _) = gen(&["validate", good.to_str().unwrap()]);
    if code != Some(0) {
        ok = false;
        detail = "validate rejects a canonical document".into();
    }

    // check exit code matches the report verdicts, twice, identically
    let (c1, out1, _) = gen(&["check", good.to_str().unwrap(), "--suite", "all"]);
    let (c2, out2, _) = gen(&["check", good.to_str().unwrap(), "--suite", "all"]);
    if c1 != Some(0) || c2 != Some(0) || out1 != out2 {
        ok = false;
        detail = "check on a passing fixture is not a deterministic success".into();
    }

    // a mutated document must fail validation with exit 1
    let inst = instance("bundle", &["z4_twist"]).unwrap();
    let mut bad = document_of_instance(&inst);
    let mut rng = SplitMix64::new(3);
    mutate::random_mutation(&mut bad, &mut rng);
    let bad_path = dir.join("mutated.json");
    std::fs::write(&bad_path, render(&bad)).unwrap();
    let (code, _, _) = gen(&["validate", bad_path.to_str().unwrap()]);
    if code != Some(1) {
        ok = false;
        detail = format!("validate on mutated fixture exited {code:?}, expected 1");
    }

    // a structurally valid document whose laws fail must turn up as a failed
    // check with exit 1
    let (code, flip_doc, _) = gen(&["generate", "bundle", "z4_flip"]);
    if code != Some(0) {
        ok = false;
        detail = "generate z4_flip failed".into();
    }
    let flip = dir.join("z4_flip.json");
    std::fs::write(&flip, &flip_doc).unwrap();
    let (code, out, _) = gen(&["check", flip.to_str().unwrap(), "--suite", "commutators"]);
    let text = String::from_utf8_lossy(&out);
    if code != Some(1) || !text.contains("counterexample") {
        ok = false;
        detail = format!("check on z4_flip exited {code:?}; report:\n{text}");
    }

    // parse errors and usage errors exit 2
    let truncated = dir.join("truncated.json");
    let bytes = std::fs::read(&good).unwrap();
    std::fs::write(&truncated, &bytes[..bytes.len() / 2]).unwrap();
    let (code, _, _) = gen(&["validate", truncated.to_str().unwrap()]);
    if code != Some(2) {
        ok = false;
        detail = format!("validate on truncated fixture exited {code:?}, expected 2");
    }
    let (code, _, _) = gen(&["generate", "nope"]);
    if code != Some(2) {
        ok = false;
        detail = format!("generate with unknown family exited {code:?}, expected 2");
    }
    let (code, _, _) = gen(&["check", good.to_str().unwrap(), "--suite", "bogus"]);
    if code != Some(2) {
        ok = false;
        detail = format!("check with unknown suite exited {code:?}, expected 2");
    }

    std::fs::remove_dir_all(&dir).ok();
    criterion(9, "CLI round trip, determinism, exit codes", ok, detail);
}
