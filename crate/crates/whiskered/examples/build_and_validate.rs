//! Build the example families, validate them, and watch the validators catch
//! a broken table.
//!
//! ```bash
//! cargo run --example build_and_validate
//! ```

use whiskered::constructions::{presets, registry};
use whiskered::io::{build, document_of_instance, LoadError};
use whiskered::mutate;
use whiskered::util::SplitMix64;
use whiskered::whisker::validate_whiskering;
use whiskered::SizeLimits;

fn main() {
    println!("family registry:");
    for inst in registry() {
        let c = inst.structure.category();
        let report = validate_whiskering(&inst.structure);
        println!(
            "  {:<40} {:>2} objects {:>3} morphisms  validation: {}",
            inst.name,
            c.object_count(),
            c.morphism_count(),
            if report.is_empty() { "ok" } else { "FAILED" },
        );
    }

    // break one composition cell and let the validator point at it
    let inst = registry().into_iter().find(|i| i.name == "bundle:z4_twist").unwrap();
    let mut doc = document_of_instance(&inst);
    let mut rng = SplitMix64::new(7);
    let what = mutate::random_mutation(&mut doc, &mut rng);
    println!("\nmutating one cell: {what}");
    match build(&doc, SizeLimits::default()) {
        Err(LoadError::Invalid { report }) => {
            println!("refused with {} violation(s); first witness:", report.violations.len());
            println!("  {}", report.violations[0]);
        }
        other => println!("unexpected outcome: {other:?}"),
    }

    // construction preconditions are checked too: the doubling table on Z/4
    // under an idempotent object is not a monoid action
    match presets::bundle_e_doubling() {
        Err(e) => println!("\ndoubling-action bundle refused: {e}"),
        Ok(_) => println!("\ndoubling-action bundle unexpectedly accepted"),
    }
}
