//! Square shells, their two partial compositions, the defect operator, and
//! the data-driven resolution of the composite-defect ordering.
//!
//! ```bash
//! cargo run --example squares_and_delta
//! ```

use whiskered::constructions::presets;
use whiskered::cubes::{
    degenerate_square, delta, enumerate_squares, resolve_cube_delta, resolve_delta_comp,
};
use whiskered::{comp1, ObjId};

fn main() {
    let w = presets::bundle_s3_trivial();
    let g = w.groupoid().unwrap();
    let c = &g.cat;

    let squares = enumerate_squares(c);
    println!("S3 one-object bundle: {} square shells", squares.len());

    let sq = squares[100];
    println!("one of them: {sq:?}");
    println!("its defect: {} (identity iff the square commutes)", delta(g, &sq));
    let deg = degenerate_square(c, ObjId(0));
    println!("degenerate shell defect: {}", delta(g, &deg));

    // stacking shells composes their side edges
    let beta = squares.iter().find(|s| s.top == sq.bottom).unwrap();
    let stacked = comp1(c, &sq, beta).unwrap();
    println!("stacked with a matching shell: {stacked:?}");

    // which ordering of the composite-defect rule holds? never assume; scan
    for dir in [1, 2] {
        let res = resolve_delta_comp(g, dir, 2_000_000);
        let printed = res.candidate("printed").unwrap();
        let reversed = res.candidate("reversed").unwrap();
        println!(
            "direction {dir}: printed {} on {} pairs, reversed {}  -> verdict: {}",
            if printed.holds { "holds" } else { "fails" },
            printed.checked,
            if reversed.holds { "holds" } else { "fails" },
            res.verdict(),
        );
    }

    // the same resolution carries to the 3-cube rule
    let z3 = presets::bundle_z3_trivial();
    let res = resolve_cube_delta(z3.groupoid().unwrap(), 600_000);
    println!(
        "cube rule on the Z/3 bundle: {} over {} cubes ({})",
        res.verdict(),
        res.candidate("reversed").unwrap().checked,
        if res.exhaustive { "exhaustive" } else { "sampled" },
    );
}
