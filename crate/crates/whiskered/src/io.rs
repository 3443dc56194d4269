//! One self-describing, versioned document format for every structure kind.
//! Tables are nested arrays with explicit `null` for undefined composition
//! cells, so documents are bit-exact and diffable; `save` always emits the
//! canonical rendering and `load` refuses anything that fails the matching
//! validator.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::Instance;
use crate::core::{FiniteCategory, FiniteGroupoid, SizeLimits, ValidationReport};
use crate::linear::{linearize, LinearCategory};
use crate::util::fingerprint;
use crate::whisker::{validate_whiskering_with, BaseCategory, WhiskeredCategory, Whiskering};

pub const FORMAT: &str = "whiskered.structure/1";

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StructureKind {
    Category,
    Groupoid,
    WhiskeredCategory,
    WhiskeredGroupoid,
    /// A whiskered structure read as its free-module linearization.
    Linear,
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StructureKind::Category => "category",
            StructureKind::Groupoid => "groupoid",
            StructureKind::WhiskeredCategory => "whiskered-category",
            StructureKind::WhiskeredGroupoid => "whiskered-groupoid",
            StructureKind::Linear => "linear",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MonoidDocument {
    pub unit: u32,
    pub table: Vec<Vec<u32>>,
}

/// The on-disk form of a structure. Field order is the canonical key order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureDocument {
    pub format: String,
    pub kind: StructureKind,
    pub objects: u32,
    pub morphisms: Vec<(u32, u32)>,
    pub identity: Vec<u32>,
    pub compose: Vec<Vec<Option<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inverse: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monoid: Option<MonoidDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left_action: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right_action: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub morphism_names: Option<Vec<String>>,
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("unsupported format {found:?} (expected {FORMAT:?})")]
    Format { found: String },
    #[error("malformed document: {0}")]
    Shape(String),
    #[error("document failed validation:\n{report}")]
    Invalid { report: ValidationReport },
}

/// A structure rebuilt from a document, as its declared kind.
#[derive(Clone, Debug)]
pub enum LoadedStructure {
    Category(FiniteCategory),
    Groupoid(FiniteGroupoid),
    Whiskered(WhiskeredCategory),
    Linear(LinearCategory),
}

impl LoadedStructure {
    pub fn category(&self) -> &FiniteCategory {
        match self {
            LoadedStructure::Category(c) => c,
            LoadedStructure::Groupoid(g) => &g.cat,
            LoadedStructure::Whiskered(w) => w.category(),
            LoadedStructure::Linear(l) => l.category(),
        }
    }

    pub fn groupoid(&self) -> Option<&FiniteGroupoid> {
        match self {
            LoadedStructure::Category(_) => None,
            LoadedStructure::Groupoid(g) => Some(g),
            LoadedStructure::Whiskered(w) => w.groupoid(),
            LoadedStructure::Linear(l) => l.base.groupoid(),
        }
    }

    pub fn whiskered(&self) -> Option<&WhiskeredCategory> {
        match self {
            LoadedStructure::Whiskered(w) => Some(w),
            LoadedStructure::Linear(l) => Some(&l.base),
            _ => None,
        }
    }
}

/// A parsed, validated document with its canonical bytes and fingerprint.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub document: StructureDocument,
    pub structure: LoadedStructure,
    pub canonical: String,
    pub fingerprint: String,
}

/// The canonical rendering every save emits: pretty JSON plus a trailing
/// newline.
pub fn render(doc: &StructureDocument) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("documents serialize");
    out.push('\n');
    out
}

pub fn save(doc: &StructureDocument, path: &Path) -> std::io::Result<()> {
    std::fs::write(path, render(doc))
}

pub fn parse(text: &str) -> Result<StructureDocument, LoadError> {
    let doc: StructureDocument = serde_json::from_str(text).map_err(|e| LoadError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if doc.format != FORMAT {
        return Err(LoadError::Format { found: doc.format });
    }
    Ok(doc)
}

pub fn load(path: &Path) -> Result<Loaded, LoadError> {
    load_with(path, SizeLimits::default())
}

pub fn load_with(path: &Path, limits: SizeLimits) -> Result<Loaded, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    from_text(&text, limits)
}

pub fn from_text(text: &str, limits: SizeLimits) -> Result<Loaded, LoadError> {
    let doc = parse(text)?;
    let structure = build(&doc, limits)?;
    let canonical = render(&doc);
    let fp = fingerprint(canonical.as_bytes());
    Ok(Loaded { document: doc, structure, canonical, fingerprint: fp })
}

fn shape_err(msg: impl Into<String>) -> LoadError {
    LoadError::Shape(msg.into())
}

/// Rebuilds and validates the structure a document describes.
pub fn build(doc: &StructureDocument, limits: SizeLimits) -> Result<LoadedStructure, LoadError> {
    let n_mor = doc.morphisms.len();
    let n_obj = doc.objects as usize;
    if doc.identity.len() != n_obj {
        return Err(shape_err(format!(
            "identity table has {} entries for {} objects",
            doc.identity.len(),
            n_obj
        )));
    }
    if doc.compose.len() != n_mor || doc.compose.iter().any(|row| row.len() != n_mor) {
        return Err(shape_err("composition table is not a dense n*n array"));
    }
    if let Some(names) = &doc.morphism_names {
        if names.len() != n_mor {
            return Err(shape_err("morphism_names length differs from morphism count"));
        }
    }
    let compose_cells: Vec<Option<u32>> = doc.compose.iter().flatten().copied().collect();
    let cat = FiniteCategory::from_tables(
        doc.objects,
        doc.morphisms.clone(),
        doc.identity.clone(),
        compose_cells,
    );

    let needs_inverse = matches!(
        doc.kind,
        StructureKind::Groupoid | StructureKind::WhiskeredGroupoid
    );
    let needs_whiskering = matches!(
        doc.kind,
        StructureKind::WhiskeredCategory | StructureKind::WhiskeredGroupoid | StructureKind::Linear
    );
    if needs_inverse && doc.inverse.is_none() {
        return Err(shape_err(format!("kind {} requires an inverse table", doc.kind)));
    }
    if needs_whiskering && (doc.monoid.is_none() || doc.left_action.is_none() || doc.right_action.is_none()) {
        return Err(shape_err(format!(
            "kind {} requires monoid, left_action and right_action tables",
            doc.kind
        )));
    }

    let groupoid = |cat: FiniteCategory| -> Result<FiniteGroupoid, LoadError> {
        let inverse = doc.inverse.clone().expect("checked above");
        if inverse.len() != n_mor {
            return Err(shape_err("inverse table length differs from morphism count"));
        }
        Ok(FiniteGroupoid::from_tables(cat, inverse))
    };

    let structure = match doc.kind {
        StructureKind::Category => {
            let report = crate::core::validate_category_with(&cat, limits);
            if !report.is_empty() {
                return Err(LoadError::Invalid { report });
            }
            LoadedStructure::Category(cat)
        }
        StructureKind::Groupoid => {
            let g = groupoid(cat)?;
            let report = crate::core::validate_groupoid_with(&g, limits);
            if !report.is_empty() {
                return Err(LoadError::Invalid { report });
            }
            LoadedStructure::Groupoid(g)
        }
        StructureKind::WhiskeredCategory | StructureKind::WhiskeredGroupoid | StructureKind::Linear => {
            let monoid = doc.monoid.as_ref().expect("checked above");
            if monoid.table.len() != n_obj || monoid.table.iter().any(|r| r.len() != n_obj) {
                return Err(shape_err("monoid table is not a dense n*n array"));
            }
            let left = doc.left_action.as_ref().expect("checked above");
            if left.len() != n_obj || left.iter().any(|r| r.len() != n_mor) {
                return Err(shape_err("left_action is not an objects*morphisms array"));
            }
            let right = doc.right_action.as_ref().expect("checked above");
            if right.len() != n_mor || right.iter().any(|r| r.len() != n_obj) {
                return Err(shape_err("right_action is not a morphisms*objects array"));
            }
            let whiskering = Whiskering::from_tables(
                doc.objects,
                n_mor as u32,
                monoid.unit,
                monoid.table.iter().flatten().copied().collect(),
                left.iter().flatten().copied().collect(),
                right.iter().flatten().copied().collect(),
            );
            let base = if doc.inverse.is_some() {
                BaseCategory::Groupoid(groupoid(cat)?)
            } else {
                if doc.kind == StructureKind::WhiskeredGroupoid {
                    return Err(shape_err("kind whiskered-groupoid requires an inverse table"));
                }
                BaseCategory::Plain(cat)
            };
            let w = WhiskeredCategory { base, whiskering };
            let report = validate_whiskering_with(&w, limits);
            if !report.is_empty() {
                return Err(LoadError::Invalid { report });
            }
            if doc.kind == StructureKind::Linear {
                LoadedStructure::Linear(linearize(&w))
            } else {
                LoadedStructure::Whiskered(w)
            }
        }
    };
    Ok(structure)
}

/// The preferred document kind for a structure: groupoid bases round-trip as
/// whiskered groupoids.
pub fn natural_kind(w: &WhiskeredCategory) -> StructureKind {
    if w.groupoid().is_some() {
        StructureKind::WhiskeredGroupoid
    } else {
        StructureKind::WhiskeredCategory
    }
}

/// Serializes a whiskered structure into a document.
pub fn document_of(
    w: &WhiskeredCategory,
    kind: StructureKind,
    morphism_names: Option<Vec<String>>,
) -> StructureDocument {
    let c = w.category();
    let n_mor = c.morphism_count() as usize;
    let n_obj = c.object_count() as usize;
    let compose: Vec<Vec<Option<u32>>> = (0..n_mor)
        .map(|a| {
            (0..n_mor)
                .map(|b| c.compose_entry(crate::core::MorId(a as u32), crate::core::MorId(b as u32)).map(|m| m.0))
                .collect()
        })
        .collect();
    let wk = &w.whiskering;
    let monoid = MonoidDocument {
        unit: wk.unit().0,
        table: (0..n_obj)
            .map(|x| {
                (0..n_obj)
                    .map(|y| wk.product(crate::core::ObjId(x as u32), crate::core::ObjId(y as u32)).0)
                    .collect()
            })
            .collect(),
    };
    let left_action: Vec<Vec<u32>> = (0..n_obj)
        .map(|x| {
            (0..n_mor)
                .map(|a| wk.left_act(crate::core::ObjId(x as u32), crate::core::MorId(a as u32)).0)
                .collect()
        })
        .collect();
    let right_action: Vec<Vec<u32>> = (0..n_mor)
        .map(|a| {
            (0..n_obj)
                .map(|y| wk.right_act(crate::core::MorId(a as u32), crate::core::ObjId(y as u32)).0)
                .collect()
        })
        .collect();
    StructureDocument {
        format: FORMAT.to_string(),
        kind,
        objects: c.object_count(),
        morphisms: c.morphisms().map(|m| (c.source(m).0, c.target(m).0)).collect(),
        identity: c.objects().map(|x| c.identity(x).0).collect(),
        compose,
        inverse: w
            .groupoid()
            .map(|g| c.morphisms().map(|m| g.inverse(m).0).collect()),
        monoid: Some(monoid),
        left_action: Some(left_action),
        right_action: Some(right_action),
        morphism_names,
    }
}

/// Document for a named family instance; monoid algebras serialize with the
/// linear kind, everything else as its natural whiskered kind.
pub fn document_of_instance(inst: &Instance) -> StructureDocument {
    let kind = if inst.name.starts_with("algebra:") {
        StructureKind::Linear
    } else {
        natural_kind(&inst.structure)
    };
    document_of(&inst.structure, kind, Some(inst.morphism_names.clone()))
}
