//! Aggregation of patch outcomes: per-rule violation deltas, the
//! rule × edit-kind × validity matrix, the fully-cleaned-patch census, and
//! the run summary with exact-fraction statistics.
//!
//! The VALID/INVALID partition everywhere in this module is the validity
//! proxy's stand-in for the compilable/non-compilable split.

use crate::edits::EditKind;
use crate::rules::{self, RuleId, Violation};
use crate::sampler::{PatchOutcome, ValidityRates};
use crate::syntax::SourceUnit;
use num_rational::Ratio;
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("record is not fully cleaned (before={before}, after={after:?})")]
    NotFullyCleaned {
        before: usize,
        after: Option<usize>,
    },
}

/// Matrix column order: copy/delete/replace/swap, line then statement.
pub const MATRIX_COLUMNS: [EditKind; 8] = [
    EditKind::CopyLine,
    EditKind::DeleteLine,
    EditKind::ReplaceLine,
    EditKind::SwapLine,
    EditKind::CopyStmt,
    EditKind::DeleteStmt,
    EditKind::ReplaceStmt,
    EditKind::SwapStmt,
];

fn column_of(kind: EditKind) -> usize {
    MATRIX_COLUMNS
        .iter()
        .position(|&k| k == kind)
        .expect("every edit kind has a column")
}

/// Violation delta of one patch against its original, keyed by rule only:
/// edits move lines, so positional matching would fabricate removed +
/// introduced pairs.
#[derive(Debug, Clone, Serialize)]
pub struct DeltaRecord {
    pub canonical: String,
    pub snippet_id: String,
    pub edit_kind: EditKind,
    pub valid: bool,
    pub violations_before: usize,
    /// None = UNANALYZABLE (the patched text did not parse).
    pub violations_after: Option<usize>,
    pub removed: BTreeMap<RuleId, usize>,
    pub introduced: BTreeMap<RuleId, usize>,
    #[serde(skip)]
    pub after_by_rule: Option<BTreeMap<RuleId, usize>>,
}

impl DeltaRecord {
    pub fn is_fully_cleaned(&self) -> bool {
        self.violations_before > 0 && self.violations_after == Some(0)
    }
}

fn count_by_rule(violations: &[Violation]) -> BTreeMap<RuleId, usize> {
    let mut m = BTreeMap::new();
    for v in violations {
        *m.entry(v.rule).or_insert(0) += 1;
    }
    m
}

/// Multiset difference of rule occurrences between the original's
/// violations and a patch outcome.
pub fn delta(original_violations: &[Violation], outcome: &PatchOutcome) -> DeltaRecord {
    let before = count_by_rule(original_violations);
    let after = outcome.violations.as_deref().map(count_by_rule);
    let mut removed = BTreeMap::new();
    let mut introduced = BTreeMap::new();
    if let Some(after) = &after {
        for (&rule, &b) in &before {
            let a = after.get(&rule).copied().unwrap_or(0);
            if b > a {
                removed.insert(rule, b - a);
            }
        }
        for (&rule, &a) in after {
            let b = before.get(&rule).copied().unwrap_or(0);
            if a > b {
                introduced.insert(rule, a - b);
            }
        }
    }
    let record = DeltaRecord {
        canonical: outcome.patch.canonical.clone(),
        snippet_id: outcome.patch.snippet_id.clone(),
        edit_kind: outcome.patch.edit().kind,
        valid: outcome.validity.is_valid(),
        violations_before: original_violations.len(),
        violations_after: outcome.violations.as_ref().map(|v| v.len()),
        removed,
        introduced,
        after_by_rule: after,
    };
    debug_assert!(record.violations_after.is_none() || conservation_holds(&record));
    record
}

/// before − |removed| + |introduced| = after, for analyzable records.
pub fn conservation_holds(record: &DeltaRecord) -> bool {
    match record.violations_after {
        None => true,
        Some(after) => {
            let removed: usize = record.removed.values().sum();
            let introduced: usize = record.introduced.values().sum();
            record.violations_before + introduced == after + removed
        }
    }
}

/// One validity partition of the matrix.
#[derive(Debug, Clone, Serialize)]
pub struct PartitionGrid {
    pub label: &'static str,
    /// Violation counts per rule per edit-kind column.
    pub cells: BTreeMap<RuleId, [u64; 8]>,
    pub row_totals: BTreeMap<RuleId, u64>,
    pub col_totals: [u64; 8],
    pub grand_total: u64,
    /// Patched files still exhibiting violations, per edit-kind column.
    pub file_counts: [u64; 8],
    pub file_total: u64,
    /// Outcomes in this partition with no violation list (did not parse).
    pub unanalyzable: u64,
}

impl PartitionGrid {
    fn new(label: &'static str) -> PartitionGrid {
        PartitionGrid {
            label,
            cells: BTreeMap::new(),
            row_totals: BTreeMap::new(),
            col_totals: [0; 8],
            grand_total: 0,
            file_counts: [0; 8],
            file_total: 0,
            unanalyzable: 0,
        }
    }
}

/// The rule × edit-kind × validity matrix plus the reference column of
/// original per-rule counts that fixes the row order.
#[derive(Debug, Clone, Serialize)]
pub struct MatrixReport {
    /// Rules ordered by descending original violation count, then name.
    pub row_order: Vec<RuleId>,
    pub original_counts: BTreeMap<RuleId, u64>,
    pub valid: PartitionGrid,
    pub invalid: PartitionGrid,
}

/// Aggregate delta records into the matrix. `original_counts` are the
/// per-rule totals over the original corpus (the reference column).
pub fn build_matrix(records: &[DeltaRecord], original_counts: &BTreeMap<RuleId, u64>) -> MatrixReport {
    let mut valid = PartitionGrid::new("VALID");
    let mut invalid = PartitionGrid::new("INVALID");
    for r in records {
        let grid = if r.valid { &mut valid } else { &mut invalid };
        let col = column_of(r.edit_kind);
        let Some(after_by_rule) = &r.after_by_rule else {
            grid.unanalyzable += 1;
            continue;
        };
        let mut any = false;
        for (&rule, &n) in after_by_rule {
            if n == 0 {
                continue;
            }
            any = true;
            let n = n as u64;
            grid.cells.entry(rule).or_insert([0; 8])[col] += n;
            *grid.row_totals.entry(rule).or_insert(0) += n;
            grid.col_totals[col] += n;
            grid.grand_total += n;
        }
        if any {
            grid.file_counts[col] += 1;
            grid.file_total += 1;
        }
    }
    let mut row_order: Vec<RuleId> = rules::CATALOG.iter().map(|(r, _)| *r).collect();
    row_order.sort_by(|a, b| {
        let ca = original_counts.get(a).copied().unwrap_or(0);
        let cb = original_counts.get(b).copied().unwrap_or(0);
        cb.cmp(&ca).then_with(|| a.name().cmp(b.name()))
    });
    MatrixReport {
        row_order,
        original_counts: original_counts.clone(),
        valid,
        invalid,
    }
}

/// Render one partition as CSV in the fixed matrix column order.
pub fn matrix_to_csv(report: &MatrixReport, partition: &PartitionGrid) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "# validity partition: {} (validity proxy stands in for the compilable/non-compilable split)\n",
        partition.label
    ));
    out.push_str("original_count,rule,total,copy_line,delete_line,replace_line,swap_line,copy_stmt,delete_stmt,replace_stmt,swap_stmt\n");
    for rule in &report.row_order {
        let orig = report.original_counts.get(rule).copied().unwrap_or(0);
        let cells = partition.cells.get(rule).copied().unwrap_or([0; 8]);
        let total = partition.row_totals.get(rule).copied().unwrap_or(0);
        out.push_str(&format!("{orig},{},{total}", rule.name()));
        for c in cells {
            out.push_str(&format!(",{c}"));
        }
        out.push('\n');
    }
    let orig_total: u64 = report.original_counts.values().sum();
    out.push_str(&format!(
        "{orig_total},total_rule_violations,{}",
        partition.grand_total
    ));
    for c in partition.col_totals {
        out.push_str(&format!(",{c}"));
    }
    out.push('\n');
    out.push_str(&format!(
        ",patched_files_with_violations,{}",
        partition.file_total
    ));
    for c in partition.file_counts {
        out.push_str(&format!(",{c}"));
    }
    out.push('\n');
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CleaningClass {
    DeletedOffender,
    ModifiedOffender,
    Other,
}

impl fmt::Display for CleaningClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CleaningClass::DeletedOffender => "DELETED_OFFENDER",
            CleaningClass::ModifiedOffender => "MODIFIED_OFFENDER",
            CleaningClass::Other => "OTHER",
        };
        f.write_str(s)
    }
}

/// How a fully cleaned patch removed every violation: by deleting the
/// offending code, by modifying the span that held it, or as a side effect
/// elsewhere.
pub fn classify_cleaning(
    record: &DeltaRecord,
    original_unit: &SourceUnit,
    outcome: &PatchOutcome,
) -> Result<CleaningClass, ReportError> {
    if !record.is_fully_cleaned() {
        return Err(ReportError::NotFullyCleaned {
            before: record.violations_before,
            after: record.violations_after,
        });
    }
    let offending_lines: Vec<u32> = rules::analyze(original_unit)
        .map(|vs| vs.iter().map(|v| v.line).collect())
        .unwrap_or_default();
    let edit = outcome.patch.edit();
    let span_lines = |loc: &crate::edits::Locator| -> (u32, u32) {
        match loc.granularity {
            crate::edits::Granularity::Line => (loc.index as u32, loc.index as u32),
            crate::edits::Granularity::Statement => {
                original_unit.statements[loc.index].line_range
            }
        }
    };
    let target_lines = span_lines(&edit.target);
    let covers_all = |ranges: &[(u32, u32)]| {
        offending_lines
            .iter()
            .all(|&l| ranges.iter().any(|&(a, b)| l >= a && l <= b))
    };
    if edit.kind.is_delete() && covers_all(&[target_lines]) {
        return Ok(CleaningClass::DeletedOffender);
    }
    let mut edited = vec![target_lines];
    if matches!(edit.kind, EditKind::SwapLine | EditKind::SwapStmt) {
        if let Some(src) = &edit.source {
            edited.push(span_lines(src));
        }
    }
    if matches!(edit.kind, EditKind::CopyLine | EditKind::CopyStmt) {
        // a copy only inserts after the target; it modifies no existing line
        edited.clear();
    }
    if !edited.is_empty() && covers_all(&edited) {
        return Ok(CleaningClass::ModifiedOffender);
    }
    Ok(CleaningClass::Other)
}

/// Census of the fully cleaned patches.
#[derive(Debug, Clone, Serialize)]
pub struct CleanCensus {
    pub cleaned_patches: Vec<String>,
    /// issues removed -> number of patches
    pub histogram: BTreeMap<usize, usize>,
    #[serde(serialize_with = "serialize_opt_fraction")]
    pub valid_fraction: Option<Ratio<u64>>,
    pub cleaning_classes: BTreeMap<String, CleaningClass>,
    pub class_counts: BTreeMap<String, usize>,
}

/// Build the census over aligned records/outcomes (same index = same patch).
pub fn build_census(
    records: &[DeltaRecord],
    outcomes: &[PatchOutcome],
    units_by_id: &HashMap<&str, &SourceUnit>,
) -> CleanCensus {
    assert_eq!(records.len(), outcomes.len());
    let mut cleaned_patches = Vec::new();
    let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
    let mut cleaning_classes = BTreeMap::new();
    let mut class_counts: BTreeMap<String, usize> = BTreeMap::new();
    let mut valid = 0u64;
    for (record, outcome) in records.iter().zip(outcomes) {
        if !record.is_fully_cleaned() {
            continue;
        }
        cleaned_patches.push(record.canonical.clone());
        *histogram.entry(record.violations_before).or_insert(0) += 1;
        if record.valid {
            valid += 1;
        }
        let unit = units_by_id
            .get(record.snippet_id.as_str())
            .expect("record refers to a corpus unit");
        let class = classify_cleaning(record, unit, outcome)
            .expect("record was checked to be fully cleaned");
        *class_counts.entry(class.to_string()).or_insert(0) += 1;
        cleaning_classes.insert(record.canonical.clone(), class);
    }
    let total = cleaned_patches.len() as u64;
    CleanCensus {
        cleaned_patches,
        histogram,
        valid_fraction: if total == 0 {
            None
        } else {
            Some(Ratio::new(valid, total))
        },
        cleaning_classes,
        class_counts,
    }
}

/// An exact fraction carried alongside its decimal rendering.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Fraction {
    pub num: u64,
    pub den: u64,
    pub decimal: f64,
    pub display: DecimalString,
}

#[derive(Debug, Clone, Copy)]
pub struct DecimalString(pub u64, pub u64);

impl Serialize for DecimalString {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_decimal(Ratio::new(self.0, self.1), 2))
    }
}

impl From<Ratio<u64>> for Fraction {
    fn from(r: Ratio<u64>) -> Fraction {
        Fraction {
            num: *r.numer(),
            den: *r.denom(),
            decimal: *r.numer() as f64 / *r.denom() as f64,
            display: DecimalString(*r.numer(), *r.denom()),
        }
    }
}

fn serialize_opt_fraction<S: serde::Serializer>(
    v: &Option<Ratio<u64>>,
    s: S,
) -> Result<S::Ok, S::Error> {
    match v {
        Some(r) => Fraction::from(*r).serialize(s),
        None => s.serialize_none(),
    }
}

/// Fixed-point decimal rendering of a ratio, half-up, exact arithmetic.
pub fn format_decimal(r: Ratio<u64>, places: u32) -> String {
    let scale = 10u64.pow(places);
    let scaled = r * Ratio::new(scale, 1);
    // round half-up
    let rounded = (scaled + Ratio::new(1, 2)).to_integer();
    let whole = rounded / scale;
    let frac = rounded % scale;
    if places == 0 {
        format!("{whole}")
    } else {
        format!("{whole}.{frac:0width$}", width = places as usize)
    }
}

/// Average-issue statistics over the run: exact fractions plus two-decimal
/// renderings.
#[derive(Debug, Clone, Serialize)]
pub struct Averages {
    /// original violations per original file with violations
    #[serde(serialize_with = "serialize_opt_fraction")]
    pub original_per_violating_file: Option<Ratio<u64>>,
    /// after-violations per analyzable patched version of violating files
    #[serde(serialize_with = "serialize_opt_fraction")]
    pub patched_per_file: Option<Ratio<u64>>,
    /// same, restricted to VALID patched versions
    #[serde(serialize_with = "serialize_opt_fraction")]
    pub valid_patched_per_file: Option<Ratio<u64>>,
}

/// Compute the run averages from originals and delta records.
pub fn averages(
    original_violation_counts: &BTreeMap<String, usize>,
    records: &[DeltaRecord],
) -> Averages {
    let violating_files: u64 = original_violation_counts
        .values()
        .filter(|&&n| n > 0)
        .count() as u64;
    let total_original: u64 = original_violation_counts
        .values()
        .map(|&n| n as u64)
        .sum();
    let mut patched = (0u64, 0u64);
    let mut valid_patched = (0u64, 0u64);
    for r in records {
        if r.violations_before == 0 {
            continue;
        }
        let Some(after) = r.violations_after else {
            continue;
        };
        patched.0 += after as u64;
        patched.1 += 1;
        if r.valid {
            valid_patched.0 += after as u64;
            valid_patched.1 += 1;
        }
    }
    let ratio = |(n, d): (u64, u64)| if d == 0 { None } else { Some(Ratio::new(n, d)) };
    Averages {
        original_per_violating_file: ratio((total_original, violating_files)),
        patched_per_file: ratio(patched),
        valid_patched_per_file: ratio(valid_patched),
    }
}

/// The summary artifact: everything `summary.json` holds.
#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub ruleset: &'static str,
    pub partition_note: &'static str,
    pub corpus: CorpusSummary,
    pub sampling: SamplingSummary,
    pub rates: RatesSummary,
    pub census: CleanCensus,
    pub averages: Averages,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusSummary {
    pub accepted_files: usize,
    pub accepted_methods: usize,
    pub rejected_files: usize,
    pub original_violations: u64,
    pub files_with_violations: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SamplingSummary {
    pub seed: u64,
    pub n_line: usize,
    pub n_stmt: usize,
    pub drawn: usize,
    pub retained: usize,
    pub duplicates_discarded: usize,
    pub unanalyzable: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RatesSummary {
    /// Raw `[valid, total]` counts per granularity, before reduction.
    pub line_counts: [u64; 2],
    pub stmt_counts: [u64; 2],
    #[serde(serialize_with = "serialize_opt_fraction")]
    pub line: Option<Ratio<u64>>,
    #[serde(serialize_with = "serialize_opt_fraction")]
    pub stmt: Option<Ratio<u64>>,
    #[serde(serialize_with = "serialize_opt_fraction")]
    pub overall: Option<Ratio<u64>>,
}

impl From<ValidityRates> for RatesSummary {
    fn from(r: ValidityRates) -> RatesSummary {
        RatesSummary {
            line_counts: r.line_counts,
            stmt_counts: r.stmt_counts,
            line: r.line,
            stmt: r.stmt,
            overall: r.overall,
        }
    }
}

pub const PARTITION_NOTE: &str =
    "VALID/INVALID is the validity-proxy partition, the stand-in for compilable/non-compilable";
