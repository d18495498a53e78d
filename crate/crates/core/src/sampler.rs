//! Seeded random generation of single-edit patches. Every patch is applied
//! to the pristine original unit (no random walk, no chaining), duplicates
//! by canonical string are discarded without redrawing, and evaluation of
//! the retained patches may run in parallel without perturbing the output
//! order.

use crate::edits::{
    apply_edit, enumerate_targets, Edit, EditError, Granularity, Patch, LINE_EDIT_KINDS,
    STMT_EDIT_KINDS,
};
use crate::rules::{self, Violation};
use crate::syntax::{check_validity, ParseStatus, SourceUnit, Validity};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{HashMap, HashSet};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PoolMode {
    /// Every draw picks a unit uniformly from the whole corpus.
    GlobalPool,
    /// Draws are distributed round-robin, a fixed share per file.
    PerFile,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct SamplerConfig {
    pub seed: u64,
    pub n_line: usize,
    pub n_stmt: usize,
    pub pool: PoolMode,
}

impl SamplerConfig {
    pub fn new(seed: u64, n_line: usize, n_stmt: usize) -> SamplerConfig {
        SamplerConfig {
            seed,
            n_line,
            n_stmt,
            pool: PoolMode::GlobalPool,
        }
    }
}

/// One evaluated patch: the patched text, its parse and validity status,
/// and its violations (None = UNANALYZABLE, exactly when parsing failed).
#[derive(Debug, Clone)]
pub struct PatchOutcome {
    pub patch: Patch,
    pub patched_text: String,
    pub parse_status: ParseStatus,
    pub validity: Validity,
    pub violations: Option<Vec<Violation>>,
}

#[derive(Debug, Error)]
pub enum SamplerError {
    #[error("corpus has no units to sample from")]
    EmptyCorpus,
    #[error("edit application failed: {0}")]
    Edit(#[from] EditError),
}

/// The compilability decision applied to each patched text. The default is
/// the parse + declare-before-use proxy; an external command can stand in
/// when a real compiler is available.
pub trait ValidityCheck: Sync {
    fn check(&self, text: &str) -> Validity;
}

/// The built-in validity proxy.
pub struct ProxyValidity;

impl ValidityCheck for ProxyValidity {
    fn check(&self, text: &str) -> Validity {
        check_validity(text)
    }
}

/// Per-draw RNG: one logical stream per draw index so that evaluation order
/// and worker count cannot perturb the sampled sequence.
fn draw_rng(seed: u64, draw_index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(draw_index as u64 + 1);
    rng
}

/// Generate the raw draw sequence (before deduplication). Draw order is the
/// output order: all line draws first, then all statement draws.
pub fn draw_patches(
    units: &[SourceUnit],
    config: &SamplerConfig,
) -> Result<Vec<Patch>, SamplerError> {
    if units.is_empty() {
        return Err(SamplerError::EmptyCorpus);
    }
    debug_assert!(units.iter().all(|u| u.parse_status.is_ok()));
    let line_targets: Vec<_> = units
        .iter()
        .map(|u| enumerate_targets(u, Granularity::Line).ok())
        .collect();
    let stmt_targets: Vec<_> = units
        .iter()
        .map(|u| enumerate_targets(u, Granularity::Statement).ok())
        .collect();
    let mut skipped: HashSet<(usize, Granularity)> = HashSet::new();
    let mut draws = Vec::with_capacity(config.n_line + config.n_stmt);
    let total = config.n_line + config.n_stmt;
    for k in 0..total {
        let granularity = if k < config.n_line {
            Granularity::Line
        } else {
            Granularity::Statement
        };
        let mut rng = draw_rng(config.seed, k);
        let ui = match config.pool {
            PoolMode::GlobalPool => rng.random_range(0..units.len()),
            PoolMode::PerFile => {
                let segment_index = if k < config.n_line { k } else { k - config.n_line };
                segment_index % units.len()
            }
        };
        let targets = match granularity {
            Granularity::Line => &line_targets[ui],
            Granularity::Statement => &stmt_targets[ui],
        };
        let Some(targets) = targets else {
            if skipped.insert((ui, granularity)) {
                log::info!(
                    "unit {} has no {granularity:?} targets; draws on it are skipped",
                    units[ui].snippet_id
                );
            }
            continue;
        };
        let kinds = match granularity {
            Granularity::Line => &LINE_EDIT_KINDS,
            Granularity::Statement => &STMT_EDIT_KINDS,
        };
        let kind = kinds[rng.random_range(0..kinds.len())];
        let target = targets[rng.random_range(0..targets.len())];
        let source = if kind.needs_source() {
            Some(targets[rng.random_range(0..targets.len())])
        } else {
            None
        };
        draws.push(Patch::single(
            units[ui].snippet_id.clone(),
            Edit {
                kind,
                target,
                source,
            },
        ));
    }
    Ok(draws)
}

/// First occurrence wins; later duplicates by canonical string are dropped.
pub fn dedup_patches(draws: Vec<Patch>) -> Vec<Patch> {
    let mut seen = HashSet::with_capacity(draws.len());
    draws
        .into_iter()
        .filter(|p| seen.insert(p.canonical.clone()))
        .collect()
}

/// Apply one patch to its original unit and evaluate it.
pub fn evaluate_patch(
    unit: &SourceUnit,
    patch: &Patch,
    checker: &dyn ValidityCheck,
) -> Result<PatchOutcome, SamplerError> {
    let patched_text = apply_edit(unit, patch.edit())?;
    let patched_unit = SourceUnit::parse(unit.snippet_id.clone(), patched_text.clone());
    let violations = rules::analyze(&patched_unit);
    // the checker decides validity on its own; an external compiler may
    // accept texts our parser cannot analyze
    let validity = checker.check(&patched_text);
    Ok(PatchOutcome {
        patch: patch.clone(),
        patched_text,
        parse_status: patched_unit.parse_status,
        validity,
        violations,
    })
}

/// Draw, dedup, and evaluate with the built-in validity proxy.
pub fn sample_patches(
    units: &[SourceUnit],
    config: &SamplerConfig,
) -> Result<Vec<PatchOutcome>, SamplerError> {
    sample_patches_with(units, config, &ProxyValidity)
}

/// Draw, dedup, and evaluate with a caller-supplied validity check. The
/// retained patches are evaluated in parallel; results keep draw order.
pub fn sample_patches_with(
    units: &[SourceUnit],
    config: &SamplerConfig,
    checker: &dyn ValidityCheck,
) -> Result<Vec<PatchOutcome>, SamplerError> {
    let retained = dedup_patches(draw_patches(units, config)?);
    let by_id: HashMap<&str, &SourceUnit> =
        units.iter().map(|u| (u.snippet_id.as_str(), u)).collect();
    retained
        .par_iter()
        .map(|patch| {
            let unit = by_id
                .get(patch.snippet_id.as_str())
                .expect("patch refers to a corpus unit");
            evaluate_patch(unit, patch, checker)
        })
        .collect()
}

/// Valid / total, per granularity and overall, in exact rationals. The raw
/// counts are kept alongside the (reduced) ratios.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValidityRates {
    pub line_counts: [u64; 2],
    pub stmt_counts: [u64; 2],
    pub line: Option<Ratio<u64>>,
    pub stmt: Option<Ratio<u64>>,
    pub overall: Option<Ratio<u64>>,
}

pub fn validity_rates(outcomes: &[PatchOutcome]) -> ValidityRates {
    let mut line = (0u64, 0u64);
    let mut stmt = (0u64, 0u64);
    for o in outcomes {
        let bucket = match o.patch.edit().kind.granularity() {
            Granularity::Line => &mut line,
            Granularity::Statement => &mut stmt,
        };
        bucket.1 += 1;
        if o.validity.is_valid() {
            bucket.0 += 1;
        }
    }
    let ratio = |(v, t): (u64, u64)| if t == 0 { None } else { Some(Ratio::new(v, t)) };
    ValidityRates {
        line_counts: [line.0, line.1],
        stmt_counts: [stmt.0, stmt.1],
        line: ratio(line),
        stmt: ratio(stmt),
        overall: ratio((line.0 + stmt.0, line.1 + stmt.1)),
    }
}

/// The JSON-lines record persisted per retained patch.
#[derive(Debug, Serialize)]
pub struct OutcomeRecord {
    pub canonical: String,
    pub snippet_id: String,
    pub edit_kind: String,
    pub parse_status: &'static str,
    pub parse_error: Option<String>,
    pub validity: &'static str,
    pub invalid_reason: Option<String>,
    pub violations: Option<Vec<Violation>>,
}

impl OutcomeRecord {
    pub fn from_outcome(o: &PatchOutcome) -> OutcomeRecord {
        let (parse_status, parse_error) = match &o.parse_status {
            ParseStatus::Ok => ("OK", None),
            ParseStatus::Failed {
                reason,
                line,
                column,
                ..
            } => ("FAILED", Some(format!("{reason} at {line}:{column}"))),
        };
        OutcomeRecord {
            canonical: o.patch.canonical.clone(),
            snippet_id: o.patch.snippet_id.clone(),
            edit_kind: o.patch.edit().kind.name().to_string(),
            parse_status,
            parse_error,
            validity: if o.validity.is_valid() {
                "VALID"
            } else {
                "INVALID"
            },
            invalid_reason: o.validity.reason(),
            violations: o.violations.clone(),
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("outcome record serialization")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::edits::EditKind;

    fn unit(id: &str, src: &str) -> SourceUnit {
        let u = SourceUnit::parse(id, src);
        assert!(u.parse_status.is_ok(), "{:?}", u.parse_status);
        u
    }

    fn small_corpus() -> Vec<SourceUnit> {
        vec![
            unit(
                "u1",
                "class A {\nvoid m(int n) {\nint s = 0;\nfor (int i = 0; i < n; i++) {\ns += i;\n}\nf(s);\n}\n}",
            ),
            unit(
                "u2",
                "class B {\nvoid k(String s) {\nString t = s;\nif (t != null) {\ng(t);\n}\n}\n}",
            ),
        ]
    }

    #[test]
    fn zero_draws_give_empty_outcomes() {
        let units = small_corpus();
        let outcomes = sample_patches(&units, &SamplerConfig::new(1, 0, 0)).unwrap();
        assert!(outcomes.is_empty());
    }

    #[test]
    fn identical_seed_gives_identical_sequences() {
        let units = small_corpus();
        let cfg = SamplerConfig::new(7, 50, 50);
        let a: Vec<String> = sample_patches(&units, &cfg)
            .unwrap()
            .iter()
            .map(|o| o.patch.canonical.clone())
            .collect();
        let b: Vec<String> = sample_patches(&units, &cfg)
            .unwrap()
            .iter()
            .map(|o| o.patch.canonical.clone())
            .collect();
        assert_eq!(a, b);
        assert!(!a.is_empty());
    }

    #[test]
    fn retained_patches_have_unique_canonicals() {
        let units = small_corpus();
        let cfg = SamplerConfig::new(13, 300, 300);
        let outcomes = sample_patches(&units, &cfg).unwrap();
        assert!(outcomes.len() < 600, "dedup must drop something here");
        // independent duplicate scan
        let mut seen = HashSet::new();
        for o in &outcomes {
            assert!(seen.insert(o.patch.canonical.clone()));
        }
    }

    #[test]
    fn dedup_is_first_occurrence_and_post_hoc_equivalent() {
        let units = small_corpus();
        let cfg = SamplerConfig::new(99, 200, 200);
        let draws = draw_patches(&units, &cfg).unwrap();
        let retained = dedup_patches(draws.clone());
        // post-hoc oracle: first occurrence by canonical, in draw order
        let mut seen = HashSet::new();
        let expected: Vec<&Patch> = draws
            .iter()
            .filter(|p| seen.insert(p.canonical.clone()))
            .collect();
        assert_eq!(retained.len(), expected.len());
        for (a, b) in retained.iter().zip(expected) {
            assert_eq!(a.canonical, b.canonical);
        }
    }

    #[test]
    fn outcomes_invariant_unanalyzable_iff_parse_failed() {
        let units = small_corpus();
        let outcomes = sample_patches(&units, &SamplerConfig::new(3, 150, 150)).unwrap();
        for o in &outcomes {
            assert_eq!(o.violations.is_some(), o.parse_status.is_ok());
            if !o.parse_status.is_ok() {
                assert!(!o.validity.is_valid());
            }
        }
    }

    #[test]
    fn patched_text_matches_textual_oracle_for_deletes() {
        let units = small_corpus();
        let outcomes = sample_patches(&units, &SamplerConfig::new(5, 0, 120)).unwrap();
        let mut checked = 0;
        for o in &outcomes {
            let edit = o.patch.edit();
            if edit.kind != EditKind::DeleteStmt {
                continue;
            }
            let unit = units
                .iter()
                .find(|u| u.snippet_id == o.patch.snippet_id)
                .unwrap();
            let span = unit.statements[edit.target.index].span;
            let mut expected = String::new();
            expected.push_str(&unit.text[..span.start]);
            expected.push_str(&unit.text[span.end..]);
            assert_eq!(o.patched_text, expected);
            checked += 1;
        }
        assert!(checked > 0);
    }

    #[test]
    fn validity_rate_arithmetic_is_exact() {
        let mk = |granularity, valid, tag: u32| {
            let kind = match granularity {
                Granularity::Line => EditKind::DeleteLine,
                Granularity::Statement => EditKind::DeleteStmt,
            };
            PatchOutcome {
                patch: Patch::single(
                    format!("s{tag}"),
                    Edit {
                        kind,
                        target: crate::edits::Locator {
                            granularity,
                            method_index: 0,
                            index: 1,
                        },
                        source: None,
                    },
                ),
                patched_text: String::new(),
                parse_status: ParseStatus::Ok,
                validity: if valid {
                    Validity::Valid
                } else {
                    Validity::Invalid(crate::syntax::InvalidReason::Undeclared { name: "x".into() })
                },
                violations: Some(vec![]),
            }
        };
        let mut outcomes = Vec::new();
        for (i, valid) in [true, true, false, false].into_iter().enumerate() {
            outcomes.push(mk(Granularity::Line, valid, i as u32));
        }
        for (i, valid) in [true, true, true, false].into_iter().enumerate() {
            outcomes.push(mk(Granularity::Statement, valid, 10 + i as u32));
        }
        let rates = validity_rates(&outcomes);
        assert_eq!(rates.line, Some(Ratio::new(1, 2)));
        assert_eq!(rates.stmt, Some(Ratio::new(3, 4)));
        assert_eq!(rates.overall, Some(Ratio::new(5, 8)));
    }

    #[test]
    fn all_valid_outcomes_give_unit_rates() {
        let units = small_corpus();
        let outcomes = sample_patches(&units, &SamplerConfig::new(11, 30, 30)).unwrap();
        let valid_only: Vec<PatchOutcome> = outcomes
            .into_iter()
            .filter(|o| o.validity.is_valid())
            .collect();
        assert!(!valid_only.is_empty());
        let rates = validity_rates(&valid_only);
        for r in [rates.line, rates.stmt, rates.overall].into_iter().flatten() {
            assert_eq!(r, Ratio::new(1, 1));
        }
    }

    #[test]
    fn delete_targets_are_uniform_over_statements() {
        // single-method unit with several statements; over many draws each
        // statement is the DELETE_STMT target with frequency 1/k within
        // five standard errors
        let src = "class A { void m(int n) {\nint a = 1;\nint b = 2;\nint c = 3;\nint d = 4;\nint e = 5;\nf(a, b, c, d, e, n);\n} }";
        let u = unit("solo", src);
        let k = enumerate_targets(&u, Granularity::Statement).unwrap().len() as f64;
        let cfg = SamplerConfig::new(1234, 0, 40_000);
        let draws = draw_patches(&[u], &cfg).unwrap();
        let deletes: Vec<&Patch> = draws
            .iter()
            .filter(|p| p.edit().kind == EditKind::DeleteStmt)
            .collect();
        let n = deletes.len() as f64;
        assert!(n > 5_000.0);
        let mut counts: HashMap<usize, f64> = HashMap::new();
        for p in &deletes {
            *counts.entry(p.edit().target.index).or_default() += 1.0;
        }
        assert_eq!(counts.len() as f64, k);
        let p = 1.0 / k;
        let se = (p * (1.0 - p) / n).sqrt();
        for (&target, &count) in &counts {
            let freq = count / n;
            assert!(
                (freq - p).abs() <= 5.0 * se,
                "target {target}: freq {freq:.4} vs expected {p:.4} (5se = {:.4})",
                5.0 * se
            );
        }
    }

    #[test]
    fn per_file_pool_distributes_draws_round_robin() {
        let units = small_corpus();
        let mut cfg = SamplerConfig::new(5, 40, 40);
        cfg.pool = PoolMode::PerFile;
        let draws = draw_patches(&units, &cfg).unwrap();
        let mut per_unit: HashMap<&str, usize> = HashMap::new();
        for p in &draws {
            *per_unit.entry(p.snippet_id.as_str()).or_default() += 1;
        }
        // two units, 40 + 40 draws: an exact fixed share each
        assert_eq!(per_unit["u1"], 40);
        assert_eq!(per_unit["u2"], 40);
    }

    #[test]
    fn external_checker_overrides_validity() {
        struct AlwaysInvalid;
        impl ValidityCheck for AlwaysInvalid {
            fn check(&self, _: &str) -> Validity {
                Validity::Invalid(crate::syntax::InvalidReason::External {
                    detail: "stub".into(),
                })
            }
        }
        let units = small_corpus();
        let outcomes =
            sample_patches_with(&units, &SamplerConfig::new(2, 20, 20), &AlwaysInvalid).unwrap();
        assert!(!outcomes.is_empty());
        assert!(outcomes.iter().all(|o| !o.validity.is_valid()));
    }

    #[test]
    fn empty_corpus_is_an_error() {
        assert!(matches!(
            sample_patches(&[], &SamplerConfig::new(1, 10, 10)),
            Err(SamplerError::EmptyCorpus)
        ));
    }
}
