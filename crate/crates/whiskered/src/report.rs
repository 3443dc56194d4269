//! The identities report: for each law of the whiskered-category calculus,
//! which candidate form holds on the given structure, under one fixed global
//! convention (left-to-right composition, conjugation `a^b = b^-1 a b`),
//! cross-certified in the free group. Two runs on the same document always
//! produce the same report.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::commutator;
use crate::cubes::{self, IdentityResolution, Verdict};
use crate::io::LoadedStructure;
use crate::linear::{self, linearize};
use crate::symbolic;
use crate::whisker::{self, Commutativity};

/// Which checks to run.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Squares,
    Whisker,
    Commutators,
    Linear,
    All,
}

impl Suite {
    pub const NAMES: &'static str = "squares, whisker, commutators, linear, all";

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Suite, String> {
        match s {
            "squares" => Ok(Suite::Squares),
            "whisker" => Ok(Suite::Whisker),
            "commutators" => Ok(Suite::Commutators),
            "linear" => Ok(Suite::Linear),
            "all" => Ok(Suite::All),
            other => Err(format!("unknown suite {other:?} (expected one of {})", Suite::NAMES)),
        }
    }
}

/// One law with its resolved verdict.
#[derive(Clone, Debug, Serialize)]
pub struct ReportEntry {
    pub law: String,
    pub verdict: String,
    pub exhaustive: bool,
    pub checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ReportEntry {
    fn from_resolution(res: &IdentityResolution) -> ReportEntry {
        let verdict = res.verdict();
        let checked = res.candidates.iter().map(|c| c.checked).max().unwrap_or(0);
        let witness = match verdict {
            Verdict::Counterexample => res.witness().map(str::to_string),
            _ => None,
        };
        let mut notes = Vec::new();
        for c in &res.candidates {
            if c.name != "printed" {
                notes.push(format!(
                    "{} candidate {}",
                    c.name,
                    if c.holds { "holds" } else { "fails" }
                ));
            }
        }
        ReportEntry {
            law: res.law.to_string(),
            verdict: verdict.to_string(),
            exhaustive: res.exhaustive,
            checked,
            witness,
            note: if notes.is_empty() { None } else { Some(notes.join("; ")) },
        }
    }

    fn passed(&self) -> bool {
        self.verdict != Verdict::Counterexample.to_string()
    }
}

/// Free-group verdicts for the ordering-sensitive laws; independent of the
/// structure under test.
#[derive(Clone, Debug, Serialize)]
pub struct SymbolicCertificate {
    pub law: String,
    pub printed_holds: bool,
    pub reversed_holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Convention {
    pub composition: &'static str,
    pub conjugation: &'static str,
    pub resolved_ordering: &'static str,
    pub certificates: Vec<SymbolicCertificate>,
}

/// The fixed global convention and its free-group certificates.
pub fn convention() -> Convention {
    let cube = symbolic::LabelledCube::generic();
    let (printed_l, printed_r) = symbolic::cube_delta_sides(&cube, true);
    let (rev_l, rev_r) = symbolic::cube_delta_sides(&cube, false);
    Convention {
        composition: "left-to-right",
        conjugation: "a^b = b^-1 a b",
        resolved_ordering: "reversed",
        certificates: vec![
            SymbolicCertificate {
                law: "delta-comp-1".into(),
                printed_holds: symbolic::certify_delta_composition(1, true),
                reversed_holds: symbolic::certify_delta_composition(1, false),
            },
            SymbolicCertificate {
                law: "delta-comp-2".into(),
                printed_holds: symbolic::certify_delta_composition(2, true),
                reversed_holds: symbolic::certify_delta_composition(2, false),
            },
            SymbolicCertificate {
                law: "cube-delta-rule".into(),
                printed_holds: symbolic::equal_in_free_group(&printed_l, &printed_r),
                reversed_holds: symbolic::equal_in_free_group(&rev_l, &rev_r),
            },
            SymbolicCertificate {
                law: "classical-commutator-law".into(),
                printed_holds: symbolic::certify_classical_commutator_law(true),
                reversed_holds: symbolic::certify_classical_commutator_law(false),
            },
        ],
    }
}

/// The full report for one structure.
#[derive(Clone, Debug, Serialize)]
pub struct IdentitiesReport {
    pub format: String,
    pub fingerprint: String,
    pub structure_kind: String,
    pub convention: Convention,
    pub entries: Vec<ReportEntry>,
}

pub const REPORT_FORMAT: &str = "whiskered.report/1";

impl IdentitiesReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(ReportEntry::passed)
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("reports serialize");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "identities report ({})", self.fingerprint);
        let _ = writeln!(out, "structure kind: {}", self.structure_kind);
        let _ = writeln!(
            out,
            "convention: {} composition, {}; resolved ordering: {}",
            self.convention.composition,
            self.convention.conjugation,
            self.convention.resolved_ordering
        );
        for c in &self.convention.certificates {
            let _ = writeln!(
                out,
                "  free group: {:<28} printed {}, reversed {}",
                c.law,
                if c.printed_holds { "holds" } else { "fails" },
                if c.reversed_holds { "holds" } else { "fails" },
            );
        }
        if self.entries.is_empty() {
            let _ = writeln!(out, "no applicable checks for this structure kind");
        }
        for e in &self.entries {
            let scope = if e.exhaustive { "exhaustive" } else { "sampled" };
            let _ = writeln!(out, "{:<28} {:<30} [{} over {}]", e.law, e.verdict, scope, e.checked);
            if let Some(w) = &e.witness {
                let _ = writeln!(out, "  witness: {w}");
            }
            if let Some(n) = &e.note {
                let _ = writeln!(out, "  note: {n}");
            }
        }
        let _ = writeln!(out, "result: {}", if self.passed() { "pass" } else { "fail" });
        out
    }
}

/// Scan budgets; the defaults keep a full `all` run on the family instances
/// comfortably interactive.
#[derive(Clone, Copy, Debug)]
pub struct CheckBudget {
    pub square_pairs: u64,
    pub cubes: u64,
    pub linear_samples: u64,
    pub linear_cubes: u64,
}

impl Default for CheckBudget {
    fn default() -> Self {
        CheckBudget { square_pairs: 150_000, cubes: 60_000, linear_samples: 100, linear_cubes: 150 }
    }
}

/// Runs a suite against a loaded structure. Checks that do not apply to the
/// structure kind (no groupoid base, no whiskering) are omitted.
pub fn run_checks(
    structure: &LoadedStructure,
    suite: Suite,
    fingerprint: &str,
    budget: CheckBudget,
) -> IdentitiesReport {
    let mut entries = Vec::new();
    let whiskered = structure.whiskered();
    let groupoid = structure.groupoid();

    if suite.includes(Suite::Squares) {
        if let Some(g) = groupoid {
            entries.push(ReportEntry::from_resolution(&cubes::resolve_delta_comp(
                g,
                1,
                budget.square_pairs,
            )));
            entries.push(ReportEntry::from_resolution(&cubes::resolve_delta_comp(
                g,
                2,
                budget.square_pairs,
            )));
            entries.push(ReportEntry::from_resolution(&cubes::resolve_cube_delta(
                g,
                budget.cubes,
            )));
        }
    }

    if suite.includes(Suite::Whisker) {
        if let Some(w) = whiskered {
            let report = whisker::validate_whiskering(w);
            entries.push(ReportEntry {
                law: "whisker-axioms".into(),
                verdict: if report.is_empty() {
                    Verdict::Holds.to_string()
                } else {
                    Verdict::Counterexample.to_string()
                },
                exhaustive: true,
                checked: 0,
                witness: report.violations.first().map(|v| v.to_string()),
                note: None,
            });
            entries.push(star_bimorphism_entry(w, 1));
            entries.push(star_bimorphism_entry(w, 2));
            entries.push(parallel_paths_entry(w));
            let (verdict, note, witness) = match whisker::is_commutative_whiskered(w) {
                Commutativity::StrictMonoidal => (
                    Verdict::Holds,
                    "strict monoidal: l = r; interchange, associativity and unit verified".into(),
                    None,
                ),
                Commutativity::Sesquicategory { witness: (a, b) } => (
                    Verdict::Holds,
                    format!("sesquicategory: l != r at ({a}, {b}); interchange fails"),
                    None,
                ),
                Commutativity::LawFailure { law, witness } => (
                    Verdict::Counterexample,
                    format!("induced product breaks {law}"),
                    Some(witness),
                ),
            };
            entries.push(ReportEntry {
                law: "monoidal-detection".into(),
                verdict: verdict.to_string(),
                exhaustive: true,
                checked: 0,
                witness,
                note: Some(note),
            });
        }
    }

    if suite.includes(Suite::Commutators) {
        if let Some(w) = whiskered {
            if w.groupoid().is_some() {
                let crit = commutator::check_commutativity_criterion(w).expect("groupoid base");
                entries.push(ReportEntry {
                    law: "commutativity-criterion".into(),
                    verdict: if crit.biconditional_holds() {
                        Verdict::Holds.to_string()
                    } else {
                        Verdict::Counterexample.to_string()
                    },
                    exhaustive: true,
                    checked: crit.rules.checked_pairs,
                    witness: crit.witness(),
                    note: Some(format!(
                        "rules {}; monoid {}; actions {}",
                        if crit.rules_hold() { "hold" } else { "fail" },
                        if crit.monoid_commutative { "commutative" } else { "noncommutative" },
                        if crit.actions_agree { "agree" } else { "differ" },
                    )),
                });
                let (left, right) = commutator::resolve_biderivation(w).expect("groupoid base");
                entries.push(ReportEntry::from_resolution(&left));
                entries.push(ReportEntry::from_resolution(&right));
                entries.push(ReportEntry::from_resolution(
                    &commutator::resolve_cube_face_commutators(w).expect("groupoid base"),
                ));
                entries.push(ReportEntry::from_resolution(
                    &commutator::resolve_cube_commutator_rule(w).expect("groupoid base"),
                ));
            }
        }
        if let Some(g) = groupoid {
            if g.cat.object_count() == 1 {
                entries.push(ReportEntry::from_resolution(
                    &commutator::resolve_classical_commutator_law(g).expect("one object"),
                ));
            }
        }
    }

    if suite.includes(Suite::Linear) {
        if let Some(w) = whiskered {
            let alg = match structure {
                LoadedStructure::Linear(l) => l.clone(),
                _ => linearize(w),
            };
            entries.push(ReportEntry::from_resolution(
                &linear::resolve_delta_additivity(&alg, budget.linear_samples)
                    .expect("family shapes support random squares"),
            ));
            for dir in [1u8, 2] {
                entries.push(ReportEntry::from_resolution(
                    &linear::resolve_linear_delta_comp(&alg, dir, budget.linear_samples)
                        .expect("family shapes support random squares"),
                ));
            }
            entries.push(ReportEntry::from_resolution(
                &linear::resolve_cube_defect_decomposition(&alg, budget.linear_cubes, 0x3c0b)
                    .expect("family shapes support random cubes"),
            ));
            entries.push(ReportEntry::from_resolution(
                &linear::resolve_bracket_bilinearity(&alg, budget.linear_samples)
                    .expect("nonempty hom-sets"),
            ));
            let scan = linear::resolve_leibniz_defect(&alg).expect("basis triples");
            let mut entry = ReportEntry::from_resolution(&scan.resolution);
            entry.note = Some(match scan.identity_failure {
                Some((a, b, c)) => format!(
                    "plain bracket identity fails at ({a}, {b}, {c}); the defect term is essential"
                ),
                None => "plain bracket identity also holds on this instance".into(),
            });
            entries.push(entry);
        }
    }

    IdentitiesReport {
        format: REPORT_FORMAT.to_string(),
        fingerprint: fingerprint.to_string(),
        structure_kind: match structure {
            LoadedStructure::Category(_) => "category".into(),
            LoadedStructure::Groupoid(_) => "groupoid".into(),
            LoadedStructure::Whiskered(w) if w.groupoid().is_some() => "whiskered-groupoid".into(),
            LoadedStructure::Whiskered(_) => "whiskered-category".into(),
            LoadedStructure::Linear(_) => "linear".into(),
        },
        convention: convention(),
        entries,
    }
}

fn star_bimorphism_entry(w: &whisker::WhiskeredCategory, law: u8) -> ReportEntry {
    let c = w.category();
    let mut checked = 0;
    let mut witness = None;
    for a in c.morphisms() {
        for d in c.morphisms() {
            let Some(ad) = c.compose_entry(a, d) else { continue };
            for b in c.morphisms() {
                checked += 1;
                let ok = if law == 1 {
                    let lhs = whisker::star(w, ad, b);
                    cubes::comp1(c, &whisker::star(w, a, b), &whisker::star(w, d, b))
                        .map(|rhs| rhs == lhs)
                        .unwrap_or(false)
                } else {
                    let lhs = whisker::star(w, b, ad);
                    cubes::comp2(c, &whisker::star(w, b, a), &whisker::star(w, b, d))
                        .map(|rhs| rhs == lhs)
                        .unwrap_or(false)
                };
                if !ok && witness.is_none() {
                    witness = Some(format!("a={a} d={d} b={b}"));
                }
            }
        }
    }
    ReportEntry {
        law: format!("star-bimorphism-{law}"),
        verdict: if witness.is_none() {
            Verdict::Holds.to_string()
        } else {
            Verdict::Counterexample.to_string()
        },
        exhaustive: true,
        checked,
        witness,
        note: None,
    }
}

fn parallel_paths_entry(w: &whisker::WhiskeredCategory) -> ReportEntry {
    let c = w.category();
    let mut checked = 0;
    let mut witness = None;
    for a in c.morphisms() {
        for b in c.morphisms() {
            checked += 1;
            let l = whisker::l_mult(w, a, b);
            let r = whisker::r_mult(w, a, b);
            if (c.source(l) != c.source(r) || c.target(l) != c.target(r)) && witness.is_none() {
                witness = Some(format!("a={a} b={b}"));
            }
        }
    }
    ReportEntry {
        law: "parallel-paths".into(),
        verdict: if witness.is_none() {
            Verdict::Holds.to_string()
        } else {
            Verdict::Counterexample.to_string()
        },
        exhaustive: true,
        checked,
        witness,
        note: None,
    }
}
