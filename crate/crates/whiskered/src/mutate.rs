//! Deterministic single-cell document mutations. The dense sentinel tables
//! make every cell addressable, so a mutation is always a visible,
//! re-checkable change for the validators to catch.

use crate::io::StructureDocument;
use crate::util::SplitMix64;

/// One mutable cell of a structure document.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Cell {
    SourceEndpoint(usize),
    TargetEndpoint(usize),
    Identity(usize),
    Compose(usize, usize),
    Inverse(usize),
    Monoid(usize, usize),
    LeftAction(usize, usize),
    RightAction(usize, usize),
}

/// Every mutable cell of the document, in a stable order.
pub fn cells(doc: &StructureDocument) -> Vec<Cell> {
    let n_mor = doc.morphisms.len();
    let n_obj = doc.objects as usize;
    let mut out = Vec::new();
    for i in 0..n_mor {
        out.push(Cell::SourceEndpoint(i));
        out.push(Cell::TargetEndpoint(i));
    }
    for x in 0..n_obj {
        out.push(Cell::Identity(x));
    }
    for a in 0..n_mor {
        for b in 0..n_mor {
            out.push(Cell::Compose(a, b));
        }
    }
    if doc.inverse.is_some() {
        for a in 0..n_mor {
            out.push(Cell::Inverse(a));
        }
    }
    if doc.monoid.is_some() {
        for x in 0..n_obj {
            for y in 0..n_obj {
                out.push(Cell::Monoid(x, y));
            }
        }
    }
    if doc.left_action.is_some() {
        for x in 0..n_obj {
            for a in 0..n_mor {
                out.push(Cell::LeftAction(x, a));
            }
        }
    }
    if doc.right_action.is_some() {
        for a in 0..n_mor {
            for y in 0..n_obj {
                out.push(Cell::RightAction(a, y));
            }
        }
    }
    out
}

fn fresh(rng: &mut SplitMix64, range: u32, old: u32) -> u32 {
    if range < 2 {
        return old; // nothing else to pick; caller skips such cells
    }
    loop {
        let v = rng.below(range as u64) as u32;
        if v != old {
            return v;
        }
    }
}

/// Applies an in-range mutation to the cell, returning a description, or
/// `None` when the cell admits no distinct value (single-object tables and
/// the like).
pub fn apply(doc: &mut StructureDocument, cell: Cell, rng: &mut SplitMix64) -> Option<String> {
    let n_mor = doc.morphisms.len() as u32;
    let n_obj = doc.objects;
    match cell {
        Cell::SourceEndpoint(i) => {
            let old = doc.morphisms[i].0;
            if n_obj < 2 {
                return None;
            }
            doc.morphisms[i].0 = fresh(rng, n_obj, old);
            Some(format!("source(m{i}): {old} -> {}", doc.morphisms[i].0))
        }
        Cell::TargetEndpoint(i) => {
            let old = doc.morphisms[i].1;
            if n_obj < 2 {
                return None;
            }
            doc.morphisms[i].1 = fresh(rng, n_obj, old);
            Some(format!("target(m{i}): {old} -> {}", doc.morphisms[i].1))
        }
        Cell::Identity(x) => {
            let old = doc.identity[x];
            if n_mor < 2 {
                return None;
            }
            doc.identity[x] = fresh(rng, n_mor, old);
            Some(format!("identity(x{x}): m{old} -> m{}", doc.identity[x]))
        }
        Cell::Compose(a, b) => {
            let old = doc.compose[a][b];
            // the fresh value ranges over None and every morphism except the
            // current entry
            let pick = rng.below(n_mor as u64 + 1);
            let new = if pick == n_mor as u64 { None } else { Some(pick as u32) };
            if new == old {
                // shift deterministically to the next distinct value
                let shifted = match new {
                    None => Some(0),
                    Some(v) if v + 1 < n_mor => Some(v + 1),
                    Some(_) => None,
                };
                if shifted == old {
                    return None;
                }
                doc.compose[a][b] = shifted;
            } else {
                doc.compose[a][b] = new;
            }
            Some(format!("compose(m{a}, m{b}): {old:?} -> {:?}", doc.compose[a][b]))
        }
        Cell::Inverse(a) => {
            let inv = doc.inverse.as_mut()?;
            let old = inv[a];
            if n_mor < 2 {
                return None;
            }
            inv[a] = fresh(rng, n_mor, old);
            Some(format!("inverse(m{a}): m{old} -> m{}", inv[a]))
        }
        Cell::Monoid(x, y) => {
            let m = doc.monoid.as_mut()?;
            let old = m.table[x][y];
            if n_obj < 2 {
                return None;
            }
            m.table[x][y] = fresh(rng, n_obj, old);
            Some(format!("monoid(x{x}, x{y}): x{old} -> x{}", m.table[x][y]))
        }
        Cell::LeftAction(x, a) => {
            let t = doc.left_action.as_mut()?;
            let old = t[x][a];
            if n_mor < 2 {
                return None;
            }
            t[x][a] = fresh(rng, n_mor, old);
            Some(format!("left_action(x{x}, m{a}): m{old} -> m{}", t[x][a]))
        }
        Cell::RightAction(a, y) => {
            let t = doc.right_action.as_mut()?;
            let old = t[a][y];
            if n_mor < 2 {
                return None;
            }
            t[a][y] = fresh(rng, n_mor, old);
            Some(format!("right_action(m{a}, x{y}): m{old} -> m{}", t[a][y]))
        }
    }
}

/// Mutates one randomly chosen cell, retrying until a cell admits a distinct
/// value. Returns the description of what changed.
pub fn random_mutation(doc: &mut StructureDocument, rng: &mut SplitMix64) -> String {
    let all = cells(doc);
    loop {
        let cell = all[rng.below(all.len() as u64) as usize];
        if let Some(desc) = apply(doc, cell, rng) {
            return desc;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::instance;
    use crate::core::SizeLimits;
    use crate::io::{build, document_of_instance, LoadError};

    #[test]
    fn every_cell_kind_is_listed() {
        let inst = instance("bundle", &["z4_twist"]).unwrap();
        let doc = document_of_instance(&inst);
        let cs = cells(&doc);
        assert!(cs.iter().any(|c| matches!(c, Cell::Compose(..))));
        assert!(cs.iter().any(|c| matches!(c, Cell::Inverse(..))));
        assert!(cs.iter().any(|c| matches!(c, Cell::Monoid(..))));
        assert!(cs.iter().any(|c| matches!(c, Cell::LeftAction(..))));
    }

    #[test]
    fn mutations_change_the_document_and_fail_validation() {
        let inst = instance("bundle", &["z4_twist"]).unwrap();
        let pristine = document_of_instance(&inst);
        let mut rng = SplitMix64::new(1);
        for _ in 0..50 {
            let mut doc = pristine.clone();
            let desc = random_mutation(&mut doc, &mut rng);
            assert_ne!(doc, pristine, "{desc}");
            match build(&doc, SizeLimits::default()) {
                Err(LoadError::Invalid { report }) => assert!(!report.is_empty(), "{desc}"),
                Err(other) => panic!("expected validation failure for {desc}, got {other}"),
                Ok(_) => panic!("mutation went undetected: {desc}"),
            }
        }
    }
}
