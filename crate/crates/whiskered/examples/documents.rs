//! Structure documents: canonical serialization, byte-identical round trips,
//! fingerprints, and the identities report.
//!
//! ```bash
//! cargo run --example documents
//! ```

use whiskered::constructions::instance;
use whiskered::io::{document_of_instance, from_text, render};
use whiskered::report::{run_checks, CheckBudget, Suite};
use whiskered::SizeLimits;

fn main() {
    let inst = instance("bundle", &["z4_twist"]).unwrap();
    let doc = document_of_instance(&inst);
    let text = render(&doc);
    println!("canonical document ({} bytes):", text.len());
    for line in text.lines().take(12) {
        println!("  {line}");
    }
    println!("  ...");

    let loaded = from_text(&text, SizeLimits::default()).unwrap();
    println!("round trip byte-identical: {}", render(&loaded.document) == text);
    println!("fingerprint: {}", loaded.fingerprint);

    let report = run_checks(&loaded.structure, Suite::All, &loaded.fingerprint, CheckBudget::default());
    println!();
    print!("{}", report.to_text());
}
