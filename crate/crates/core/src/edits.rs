//! The eight single-edit transformations: delete/replace/copy/swap at line
//! or statement granularity, applied with span splicing over the original
//! text. Never chains edits; every application starts from the pristine
//! unit.

use crate::syntax::{ByteSpan, SourceUnit};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Granularity {
    Line,
    Statement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Locator {
    pub granularity: Granularity,
    pub method_index: usize,
    /// Line number (1-based) for LINE locators; statement id for STATEMENT.
    pub index: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EditKind {
    DeleteLine,
    ReplaceLine,
    CopyLine,
    SwapLine,
    DeleteStmt,
    ReplaceStmt,
    CopyStmt,
    SwapStmt,
}

pub const EDIT_KINDS: [EditKind; 8] = [
    EditKind::DeleteLine,
    EditKind::ReplaceLine,
    EditKind::CopyLine,
    EditKind::SwapLine,
    EditKind::DeleteStmt,
    EditKind::ReplaceStmt,
    EditKind::CopyStmt,
    EditKind::SwapStmt,
];

pub const LINE_EDIT_KINDS: [EditKind; 4] = [
    EditKind::DeleteLine,
    EditKind::ReplaceLine,
    EditKind::CopyLine,
    EditKind::SwapLine,
];

pub const STMT_EDIT_KINDS: [EditKind; 4] = [
    EditKind::DeleteStmt,
    EditKind::ReplaceStmt,
    EditKind::CopyStmt,
    EditKind::SwapStmt,
];

impl EditKind {
    pub fn granularity(&self) -> Granularity {
        match self {
            EditKind::DeleteLine | EditKind::ReplaceLine | EditKind::CopyLine
            | EditKind::SwapLine => Granularity::Line,
            _ => Granularity::Statement,
        }
    }

    pub fn needs_source(&self) -> bool {
        !matches!(self, EditKind::DeleteLine | EditKind::DeleteStmt)
    }

    pub fn is_delete(&self) -> bool {
        matches!(self, EditKind::DeleteLine | EditKind::DeleteStmt)
    }

    pub fn name(&self) -> &'static str {
        match self {
            EditKind::DeleteLine => "DELETE_LINE",
            EditKind::ReplaceLine => "REPLACE_LINE",
            EditKind::CopyLine => "COPY_LINE",
            EditKind::SwapLine => "SWAP_LINE",
            EditKind::DeleteStmt => "DELETE_STMT",
            EditKind::ReplaceStmt => "REPLACE_STMT",
            EditKind::CopyStmt => "COPY_STMT",
            EditKind::SwapStmt => "SWAP_STMT",
        }
    }
}

impl fmt::Display for EditKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edit {
    pub kind: EditKind,
    pub target: Locator,
    pub source: Option<Locator>,
}

/// A single-edit patch with its canonical identity string; two patches are
/// the same patch exactly when their canonical strings are equal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Patch {
    pub snippet_id: String,
    pub edits: Vec<Edit>,
    pub canonical: String,
}

impl Patch {
    pub fn single(snippet_id: impl Into<String>, edit: Edit) -> Patch {
        let snippet_id = snippet_id.into();
        let canonical = canonical_string(&snippet_id, &[edit]);
        Patch {
            snippet_id,
            edits: vec![edit],
            canonical,
        }
    }

    pub fn edit(&self) -> &Edit {
        &self.edits[0]
    }
}

/// Stable serialization `snippet_id|kind|src|tgt`; the dedup key.
pub fn canonicalize(patch: &Patch) -> String {
    canonical_string(&patch.snippet_id, &patch.edits)
}

fn canonical_string(snippet_id: &str, edits: &[Edit]) -> String {
    let parts: Vec<String> = edits
        .iter()
        .map(|e| {
            format!(
                "{}|{}|{}",
                e.kind.name(),
                e.source.map_or_else(|| "-".to_string(), locator_key),
                locator_key(e.target)
            )
        })
        .collect();
    format!("{}|{}", snippet_id, parts.join(";"))
}

fn locator_key(loc: Locator) -> String {
    match loc.granularity {
        Granularity::Line => format!("l{}", loc.index),
        Granularity::Statement => format!("s{}", loc.index),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EditError {
    #[error("unit has methods but no editable targets")]
    NoTargets,
    #[error("stale locator: {detail}")]
    StaleLocator { detail: String },
}

/// Enumerate the edit targets of a unit at one granularity.
///
/// LINE: every line intersecting a method body, excluding lines that overlap
/// the signature and lines holding only a closing brace. STATEMENT: every
/// statement in a method body except the body's outermost block.
pub fn enumerate_targets(
    unit: &SourceUnit,
    granularity: Granularity,
) -> Result<Vec<Locator>, EditError> {
    let mut out = Vec::new();
    for (mi, method) in unit.methods.iter().enumerate() {
        match granularity {
            Granularity::Line => {
                let (sig_start, sig_end) = unit.line_range_of(method.signature_span);
                let (body_start, body_end) = method.body_line_range;
                for line in body_start..=body_end {
                    if line >= sig_start && line <= sig_end {
                        continue;
                    }
                    if unit.line_content(line).trim() == "}" {
                        continue;
                    }
                    out.push(Locator {
                        granularity,
                        method_index: mi,
                        index: line as usize,
                    });
                }
            }
            Granularity::Statement => {
                for &sid in &method.statement_ids {
                    if sid == method.body_block {
                        continue;
                    }
                    out.push(Locator {
                        granularity,
                        method_index: mi,
                        index: sid,
                    });
                }
            }
        }
    }
    if out.is_empty() {
        return Err(EditError::NoTargets);
    }
    Ok(out)
}

/// Apply one edit to the unit's original text and return the patched text.
pub fn apply_edit(unit: &SourceUnit, edit: &Edit) -> Result<String, EditError> {
    match edit.kind.granularity() {
        Granularity::Line => apply_line_edit(unit, edit),
        Granularity::Statement => apply_stmt_edit(unit, edit),
    }
}

fn check_line(unit: &SourceUnit, loc: Locator) -> Result<u32, EditError> {
    let line = loc.index as u32;
    if loc.granularity != Granularity::Line || line == 0 || line > unit.line_count() {
        return Err(EditError::StaleLocator {
            detail: format!("line {} out of range", loc.index),
        });
    }
    Ok(line)
}

fn apply_line_edit(unit: &SourceUnit, edit: &Edit) -> Result<String, EditError> {
    let text = &unit.text;
    let target = check_line(unit, edit.target)?;
    let target_span = unit.line_span(target);
    let target_content = content_span(text, target_span);
    match edit.kind {
        EditKind::DeleteLine => {
            let mut out = String::with_capacity(text.len());
            out.push_str(&text[..target_span.start]);
            out.push_str(&text[target_span.end..]);
            Ok(out)
        }
        EditKind::ReplaceLine => {
            let source = check_line(unit, required_source(edit)?)?;
            let source_text = unit.line_content(source).to_string();
            Ok(splice(text, target_content, &source_text))
        }
        EditKind::CopyLine => {
            let source = check_line(unit, required_source(edit)?)?;
            let source_text = unit.line_content(source);
            let insert_at = target_span.end;
            let terminated = text[target_span.start..target_span.end].ends_with('\n');
            let inserted = if terminated {
                format!("{source_text}\n")
            } else {
                format!("\n{source_text}")
            };
            let mut out = String::with_capacity(text.len() + inserted.len());
            out.push_str(&text[..insert_at]);
            out.push_str(&inserted);
            out.push_str(&text[insert_at..]);
            Ok(out)
        }
        EditKind::SwapLine => {
            let source = check_line(unit, required_source(edit)?)?;
            if source == target {
                return Ok(text.clone());
            }
            let source_content = content_span(text, unit.line_span(source));
            Ok(swap_spans(text, source_content, target_content))
        }
        _ => unreachable!("line dispatch"),
    }
}

fn apply_stmt_edit(unit: &SourceUnit, edit: &Edit) -> Result<String, EditError> {
    let text = &unit.text;
    let target = check_stmt(unit, edit.target)?;
    match edit.kind {
        EditKind::DeleteStmt => {
            let mut out = String::with_capacity(text.len());
            out.push_str(&text[..target.start]);
            out.push_str(&text[target.end..]);
            Ok(out)
        }
        EditKind::ReplaceStmt => {
            let source = check_stmt(unit, required_source(edit)?)?;
            Ok(splice(text, target, &text[source.start..source.end]))
        }
        EditKind::CopyStmt => {
            let source = check_stmt(unit, required_source(edit)?)?;
            let mut out = String::with_capacity(text.len() + source.len());
            out.push_str(&text[..target.end]);
            out.push_str(&text[source.start..source.end]);
            out.push_str(&text[target.end..]);
            Ok(out)
        }
        EditKind::SwapStmt => {
            let source = check_stmt(unit, required_source(edit)?)?;
            if source == target {
                return Ok(text.clone());
            }
            if target.contains(&source) {
                // inner-dominates: the outer span collapses to the inner text
                return Ok(splice(text, target, &inner_replacement(text, source)));
            }
            if source.contains(&target) {
                return Ok(splice(text, source, &inner_replacement(text, target)));
            }
            Ok(swap_spans(text, source, target))
        }
        _ => unreachable!("statement dispatch"),
    }
}

fn required_source(edit: &Edit) -> Result<Locator, EditError> {
    edit.source.ok_or_else(|| EditError::StaleLocator {
        detail: format!("{} requires a source locator", edit.kind),
    })
}

fn check_stmt(unit: &SourceUnit, loc: Locator) -> Result<ByteSpan, EditError> {
    if loc.granularity != Granularity::Statement || loc.index >= unit.statements.len() {
        return Err(EditError::StaleLocator {
            detail: format!("statement {} out of range", loc.index),
        });
    }
    Ok(unit.statements[loc.index].span)
}

/// Byte range of a line without its `\n` terminator.
fn content_span(text: &str, line_span: ByteSpan) -> ByteSpan {
    let mut end = line_span.end;
    if end > line_span.start && text.as_bytes()[end - 1] == b'\n' {
        end -= 1;
    }
    ByteSpan::new(line_span.start, end)
}

fn splice(text: &str, span: ByteSpan, replacement: &str) -> String {
    let mut out = String::with_capacity(text.len() - span.len() + replacement.len());
    out.push_str(&text[..span.start]);
    out.push_str(replacement);
    out.push_str(&text[span.end..]);
    out
}

fn swap_spans(text: &str, a: ByteSpan, b: ByteSpan) -> String {
    let (first, second) = if a.start <= b.start { (a, b) } else { (b, a) };
    debug_assert!(first.end <= second.start, "spans must not overlap");
    let mut out = String::with_capacity(text.len());
    out.push_str(&text[..first.start]);
    out.push_str(&text[second.start..second.end]);
    out.push_str(&text[first.end..second.start]);
    out.push_str(&text[first.start..first.end]);
    out.push_str(&text[second.end..]);
    out
}

/// Replacement text for a nested swap: when the inner statement starts its
/// own line, bring its newline and indentation along so it keeps its line
/// position once the outer span collapses around it.
fn inner_replacement(text: &str, inner: ByteSpan) -> String {
    let line_start = text[..inner.start].rfind('\n').map(|p| p + 1).unwrap_or(0);
    let prefix = &text[line_start..inner.start];
    let inner_text = &text[inner.start..inner.end];
    if line_start > 0 && prefix.chars().all(|c| c == ' ' || c == '\t') {
        format!("\n{prefix}{inner_text}")
    } else {
        inner_text.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::wrap_snippet;
    use crate::syntax::StatementKind;

    fn parse(src: &str) -> SourceUnit {
        let unit = SourceUnit::parse("t", src);
        assert!(unit.parse_status.is_ok(), "{:?}", unit.parse_status);
        unit
    }

    fn stmt_loc(unit: &SourceUnit, id: usize) -> Locator {
        let mi = unit
            .methods
            .iter()
            .position(|m| m.statement_ids.contains(&id))
            .unwrap();
        Locator {
            granularity: Granularity::Statement,
            method_index: mi,
            index: id,
        }
    }

    fn line_loc(line: usize) -> Locator {
        Locator {
            granularity: Granularity::Line,
            method_index: 0,
            index: line,
        }
    }

    #[test]
    fn line_targets_exclude_signature_and_closing_brace() {
        let unit = parse("class A {\nvoid m() {\nint x = 1;\nx++;\nf(x);\n}\n}");
        let targets = enumerate_targets(&unit, Granularity::Line).unwrap();
        let lines: Vec<usize> = targets.iter().map(|l| l.index).collect();
        assert_eq!(lines, vec![3, 4, 5]);
    }

    #[test]
    fn statement_targets_exclude_outer_block() {
        let unit = parse("class A { void m(int n) { for (int i=0;i<n;i++) { f(i); } } }");
        let targets = enumerate_targets(&unit, Granularity::Statement).unwrap();
        let kinds: Vec<StatementKind> = targets
            .iter()
            .map(|l| unit.statement(l.index).kind)
            .collect();
        assert_eq!(
            kinds,
            vec![
                StatementKind::For,
                StatementKind::Block,
                StatementKind::ExprStmt
            ]
        );
    }

    #[test]
    fn empty_body_has_no_targets() {
        let unit = parse("class A { void m(){} }");
        assert_eq!(
            enumerate_targets(&unit, Granularity::Statement),
            Err(EditError::NoTargets)
        );
        assert_eq!(
            enumerate_targets(&unit, Granularity::Line),
            Err(EditError::NoTargets)
        );
    }

    #[test]
    fn delete_line_removes_terminator_too() {
        let unit = parse("class A {\nvoid m() {\nint x = 1;\nx++;\n}\n}");
        let edit = Edit {
            kind: EditKind::DeleteLine,
            target: line_loc(3),
            source: None,
        };
        assert_eq!(
            apply_edit(&unit, &edit).unwrap(),
            "class A {\nvoid m() {\nx++;\n}\n}"
        );
    }

    #[test]
    fn delete_only_body_line_keeps_unit_parseable() {
        let unit = parse("class A {\nvoid m() {\nf();\n}\n}");
        let edit = Edit {
            kind: EditKind::DeleteLine,
            target: line_loc(3),
            source: None,
        };
        let patched = apply_edit(&unit, &edit).unwrap();
        assert!(SourceUnit::parse("t", patched).parse_status.is_ok());
    }

    #[test]
    fn copy_line_inserts_after_target() {
        let unit = parse("class A {\nvoid m() {\nint x = 1;\nx++;\n}\n}");
        let edit = Edit {
            kind: EditKind::CopyLine,
            target: line_loc(4),
            source: Some(line_loc(3)),
        };
        assert_eq!(
            apply_edit(&unit, &edit).unwrap(),
            "class A {\nvoid m() {\nint x = 1;\nx++;\nint x = 1;\n}\n}"
        );
    }

    #[test]
    fn copy_line_at_eof_without_terminator() {
        let unit = parse("class A {\nvoid m() {\nint x = 1;\nx++;\n}\n}");
        // re-parse a text whose last line has no trailing newline
        let trimmed = parse(unit.text.trim_end());
        let last = trimmed.line_count() as usize;
        let edit = Edit {
            kind: EditKind::CopyLine,
            target: line_loc(last),
            source: Some(line_loc(3)),
        };
        let patched = apply_edit(&trimmed, &edit).unwrap();
        assert!(patched.ends_with("}\nint x = 1;"));
    }

    #[test]
    fn delete_line_at_eof_without_terminator() {
        let unit = parse("class A { void m() {\nf();\n} }");
        let last = unit.line_count() as usize;
        let edit = Edit {
            kind: EditKind::DeleteLine,
            target: line_loc(last),
            source: None,
        };
        assert_eq!(apply_edit(&unit, &edit).unwrap(), "class A { void m() {\nf();\n");
    }

    #[test]
    fn replace_line_keeps_terminators() {
        let unit = parse("class A {\nvoid m() {\nint x = 1;\nx++;\n}\n}");
        let edit = Edit {
            kind: EditKind::ReplaceLine,
            target: line_loc(3),
            source: Some(line_loc(4)),
        };
        assert_eq!(
            apply_edit(&unit, &edit).unwrap(),
            "class A {\nvoid m() {\nx++;\nx++;\n}\n}"
        );
    }

    #[test]
    fn copy_stmt_matches_splicing_oracle() {
        let unit = parse("class A { void m() { int x = 1; x++; } }");
        let body = unit.statement(unit.methods[0].body_block);
        let s = body.children[1];
        let edit = Edit {
            kind: EditKind::CopyStmt,
            target: stmt_loc(&unit, s),
            source: Some(stmt_loc(&unit, s)),
        };
        let patched = apply_edit(&unit, &edit).unwrap();
        // independent splicing oracle
        let span = unit.statement(s).span;
        let mut expected = String::new();
        expected.push_str(&unit.text[..span.end]);
        expected.push_str(&unit.text[span.start..span.end]);
        expected.push_str(&unit.text[span.end..]);
        assert_eq!(patched, expected);
        assert!(patched.contains("x++;x++;"));
    }

    #[test]
    fn delete_then_reinsert_restores_text() {
        let unit = parse("class A { void m() { int x = 1; x++; f(x); } }");
        for &s in &unit.statements[unit.methods[0].body_block].children.clone() {
            let span = unit.statement(s).span;
            let edit = Edit {
                kind: EditKind::DeleteStmt,
                target: stmt_loc(&unit, s),
                source: None,
            };
            let deleted = apply_edit(&unit, &edit).unwrap();
            let mut restored = String::new();
            restored.push_str(&deleted[..span.start]);
            restored.push_str(&unit.text[span.start..span.end]);
            restored.push_str(&deleted[span.start..]);
            assert_eq!(restored, unit.text);
        }
    }

    #[test]
    fn swap_with_self_is_identity() {
        let unit = parse("class A { void m() { int x = 1; x++; } }");
        let s = unit.statements[unit.methods[0].body_block].children[0];
        let edit = Edit {
            kind: EditKind::SwapStmt,
            target: stmt_loc(&unit, s),
            source: Some(stmt_loc(&unit, s)),
        };
        assert_eq!(apply_edit(&unit, &edit).unwrap(), unit.text);
    }

    #[test]
    fn non_nested_swap_is_an_involution() {
        let src = "class A { void m() { f(1); g(2); } }";
        let unit = parse(src);
        let body = unit.statements[unit.methods[0].body_block].clone();
        let (a, b) = (body.children[0], body.children[1]);
        let edit = Edit {
            kind: EditKind::SwapStmt,
            target: stmt_loc(&unit, b),
            source: Some(stmt_loc(&unit, a)),
        };
        let once = apply_edit(&unit, &edit).unwrap();
        assert_eq!(once, "class A { void m() { g(2); f(1); } }");
        // recompute locators on the swapped text; same ids since the tree
        // shape is unchanged
        let unit2 = parse(&once);
        let twice = apply_edit(&unit2, &edit).unwrap();
        assert_eq!(twice, src);
    }

    #[test]
    fn edits_leave_text_outside_method_untouched() {
        let src = "class A { int f1 = 7; void m() { int x = 1; x++; } int f2 = 9; }";
        let unit = parse(src);
        let body = unit.statements[unit.methods[0].body_block].clone();
        let (a, b) = (body.children[0], body.children[1]);
        let edit = Edit {
            kind: EditKind::ReplaceStmt,
            target: stmt_loc(&unit, a),
            source: Some(stmt_loc(&unit, b)),
        };
        let patched = apply_edit(&unit, &edit).unwrap();
        let body_span = unit.methods[0].body_span;
        assert_eq!(&patched[..body_span.start], &src[..body_span.start]);
        let tail = src.len() - body_span.end;
        assert_eq!(&patched[patched.len() - tail..], &src[src.len() - tail..]);
    }

    #[test]
    fn nested_swap_collapses_loop_to_first_statement() {
        let raw = std::fs::read_to_string(concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/fixtures/listing1.java"
        ))
        .unwrap();
        let snippet = wrap_snippet(&raw, "listing1").unwrap();
        let unit = SourceUnit::parse("listing1", snippet.wrapped_text.clone());
        assert!(unit.parse_status.is_ok(), "{:?}", unit.parse_status);
        let body = unit.statement(unit.methods[0].body_block);
        let for_node = unit.statement(
            *body
                .children
                .iter()
                .find(|&&c| unit.statement(c).kind == StatementKind::For)
                .unwrap(),
        );
        let block = unit.statement(for_node.children[0]);
        assert_eq!(block.kind, StatementKind::Block);
        let first_inner = block.children[0];
        let edit = Edit {
            kind: EditKind::SwapStmt,
            target: stmt_loc(&unit, block.id),
            source: Some(stmt_loc(&unit, first_inner)),
        };
        let patched = apply_edit(&unit, &edit).unwrap();
        assert!(
            patched.contains("for (int i = c+1; i < nums.length; i++) \n    b[j] = nums[i];"),
            "patched text:\n{patched}"
        );
        // the independent oracle: splice the extended inner text over the block span
        let expected = {
            let mut s = String::new();
            s.push_str(&unit.text[..block.span.start]);
            s.push_str("\n    b[j] = nums[i];");
            s.push_str(&unit.text[block.span.end..]);
            s
        };
        assert_eq!(patched, expected);
    }

    #[test]
    fn canonical_strings_are_stable_and_ordered() {
        let del = Patch::single(
            "A",
            Edit {
                kind: EditKind::DeleteStmt,
                target: Locator {
                    granularity: Granularity::Statement,
                    method_index: 0,
                    index: 5,
                },
                source: None,
            },
        );
        assert_eq!(del.canonical, "A|DELETE_STMT|-|s5");
        assert_eq!(canonicalize(&del), del.canonical);

        let (l3, l7) = (line_loc(3), line_loc(7));
        let ab = Patch::single(
            "A",
            Edit {
                kind: EditKind::SwapLine,
                target: l7,
                source: Some(l3),
            },
        );
        let ba = Patch::single(
            "A",
            Edit {
                kind: EditKind::SwapLine,
                target: l3,
                source: Some(l7),
            },
        );
        assert_eq!(ab.canonical, "A|SWAP_LINE|l3|l7");
        assert_ne!(ab.canonical, ba.canonical);
        // resampling the same edit gives the identical key
        let again = Patch::single(
            "A",
            Edit {
                kind: EditKind::SwapLine,
                target: l7,
                source: Some(l3),
            },
        );
        assert_eq!(ab.canonical, again.canonical);
    }

    #[test]
    fn stale_locators_are_rejected() {
        let unit = parse("class A { void m() { f(); } }");
        let edit = Edit {
            kind: EditKind::DeleteStmt,
            target: Locator {
                granularity: Granularity::Statement,
                method_index: 0,
                index: 99,
            },
            source: None,
        };
        assert!(matches!(
            apply_edit(&unit, &edit),
            Err(EditError::StaleLocator { .. })
        ));
    }
}
