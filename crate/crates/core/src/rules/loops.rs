//! Loop rules: object allocation inside loops and element-copy loops that
//! System.arraycopy would replace.

use super::context::Ctx;
use super::{RuleId, Violation};
use crate::syntax::{StatementDetail, StatementKind, TokenKind};
use std::collections::HashSet;

/// Any `new` expression lexically inside a loop statement's span.
pub(crate) fn avoid_instantiating_objects_in_loops(ctx: &Ctx<'_>) -> Vec<Violation> {
    let loop_spans: Vec<_> = ctx
        .loop_ids()
        .iter()
        .map(|&id| ctx.unit.statements[id].span)
        .collect();
    let mut out = Vec::new();
    for k in 0..ctx.len() {
        let t = ctx.tok(k);
        if !t.is_keyword("new") {
            continue;
        }
        if loop_spans.iter().any(|s| s.contains_pos(t.span.start)) {
            out.push(Violation::new(
                RuleId::AvoidInstantiatingObjectsInLoops,
                t.line,
                "Avoid instantiating new objects inside loops.",
            ));
        }
    }
    out
}

/// A loop whose body is only array element copies plus index increments,
/// where every subscript variable advances each iteration (via the loop
/// update clause or a body increment). Such loops are array copies.
pub(crate) fn avoid_array_loops(ctx: &Ctx<'_>) -> Vec<Violation> {
    let mut out = Vec::new();
    for id in ctx.loop_ids() {
        let node = &ctx.unit.statements[id];
        let Some(&body) = node.children.first() else {
            continue;
        };
        let stmts: Vec<usize> = if ctx.unit.statements[body].kind == StatementKind::Block {
            ctx.unit.statements[body].children.clone()
        } else {
            vec![body]
        };
        if stmts.is_empty() {
            continue;
        }
        let mut advancing: HashSet<String> = HashSet::new();
        if let StatementDetail::For {
            update: Some(update),
            ..
        } = &ctx.unit.details[id]
        {
            for i in update.start..update.end {
                let t = &ctx.unit.tokens[i];
                if t.kind == TokenKind::Ident {
                    advancing.insert(t.text.clone());
                }
            }
        }
        let mut copies: Vec<HashSet<String>> = Vec::new();
        let mut shape_ok = true;
        for &s in &stmts {
            if let Some(indexes) = element_copy_indexes(ctx, s) {
                copies.push(indexes);
            } else if let Some(var) = increment_var(ctx, s) {
                advancing.insert(var);
            } else {
                shape_ok = false;
                break;
            }
        }
        if !shape_ok || copies.is_empty() {
            continue;
        }
        let all_advance = copies
            .iter()
            .all(|idx| idx.iter().all(|v| advancing.contains(v)));
        if all_advance {
            out.push(Violation::new(
                RuleId::AvoidArrayLoops,
                node.line_range.0,
                "System.arraycopy is more efficient.",
            ));
        }
    }
    out
}

/// `a[i] = b[j];` shapes. Returns the subscript variables; None when the
/// statement is not an element copy or a subscript carries no variable.
fn element_copy_indexes(ctx: &Ctx<'_>, stmt_id: usize) -> Option<HashSet<String>> {
    let node = &ctx.unit.statements[stmt_id];
    if node.kind != StatementKind::ExprStmt {
        return None;
    }
    let (lo, hi) = ctx.sig_range_of(node.span);
    let mut indexes = HashSet::new();
    // lhs: IDENT [ ... ]
    if ctx.tok(lo).kind != TokenKind::Ident || !ctx.try_tok(lo + 1).is_some_and(|t| t.is_punct("[")) {
        return None;
    }
    let lhs_close = ctx.matching_close(lo + 1)?;
    collect_subscript_vars(ctx, lo + 2, lhs_close, &mut indexes)?;
    // =
    if !ctx.try_tok(lhs_close + 1).is_some_and(|t| t.is_operator("=")) {
        return None;
    }
    // rhs: IDENT [ ... ]
    let r = lhs_close + 2;
    if ctx.try_tok(r).map(|t| t.kind) != Some(TokenKind::Ident)
        || !ctx.try_tok(r + 1).is_some_and(|t| t.is_punct("["))
    {
        return None;
    }
    let rhs_close = ctx.matching_close(r + 1)?;
    collect_subscript_vars(ctx, r + 2, rhs_close, &mut indexes)?;
    // ;
    if rhs_close + 2 != hi || !ctx.try_tok(rhs_close + 1).is_some_and(|t| t.is_punct(";")) {
        return None;
    }
    Some(indexes)
}

fn collect_subscript_vars(
    ctx: &Ctx<'_>,
    lo: usize,
    hi: usize,
    indexes: &mut HashSet<String>,
) -> Option<()> {
    let mut found = false;
    for k in lo..hi {
        let t = ctx.tok(k);
        if t.kind == TokenKind::Ident {
            // skip member accesses like `nums.length`
            if ctx.try_tok(k.wrapping_sub(1)).is_some_and(|p| p.is_punct(".")) {
                continue;
            }
            indexes.insert(t.text.clone());
            found = true;
        }
    }
    if found {
        Some(())
    } else {
        None
    }
}

/// `i++;`, `++i;`, `i--;`, `--i;`, `i += <n>;`, `i -= <n>;`
fn increment_var(ctx: &Ctx<'_>, stmt_id: usize) -> Option<String> {
    let node = &ctx.unit.statements[stmt_id];
    if node.kind != StatementKind::ExprStmt {
        return None;
    }
    let (lo, hi) = ctx.sig_range_of(node.span);
    match hi - lo {
        3 => {
            let (a, b) = (ctx.tok(lo), ctx.tok(lo + 1));
            if a.kind == TokenKind::Ident && (b.is_operator("++") || b.is_operator("--")) {
                return Some(a.text.clone());
            }
            if (a.is_operator("++") || a.is_operator("--")) && b.kind == TokenKind::Ident {
                return Some(b.text.clone());
            }
            None
        }
        4 => {
            let (a, op, n) = (ctx.tok(lo), ctx.tok(lo + 1), ctx.tok(lo + 2));
            if a.kind == TokenKind::Ident
                && (op.is_operator("+=") || op.is_operator("-="))
                && n.kind == TokenKind::NumLit
            {
                return Some(a.text.clone());
            }
            None
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::super::{analyze, RuleId};
    use crate::syntax::SourceUnit;

    fn rules_on(src: &str) -> Vec<(RuleId, u32)> {
        let unit = SourceUnit::parse("t", src);
        assert!(unit.parse_status.is_ok(), "{:?}", unit.parse_status);
        analyze(&unit)
            .unwrap()
            .into_iter()
            .map(|v| (v.rule, v.line))
            .collect()
    }

    #[test]
    fn allocation_inside_loop_fires_per_new() {
        let src = "class A { void m(int n) {\nfor (int i=0;i<n;i++) {\nObject o = new Object();\nf(o);\n}\n} }";
        assert_eq!(
            rules_on(src),
            vec![(RuleId::AvoidInstantiatingObjectsInLoops, 3)]
        );
    }

    #[test]
    fn allocation_outside_loop_is_fine() {
        let src = "class A { void m(int n) { Object o = new Object(); while (n > 0) { n--; } f(o); } }";
        assert!(rules_on(src).is_empty());
    }

    #[test]
    fn classic_array_copy_fires() {
        let src = "class A { void m(int[] a, int[] b, int n) {\nfor (int i = 0; i < n; i++) {\na[i] = b[i];\n}\n} }";
        assert_eq!(rules_on(src), vec![(RuleId::AvoidArrayLoops, 2)]);
    }

    #[test]
    fn copy_with_secondary_index_fires_when_incremented() {
        let src = "class A { void m(int[] a, int[] b, int n, int j) {\nfor (int i = 0; i < n; i++) {\na[j] = b[i];\nj++;\n}\n} }";
        assert_eq!(rules_on(src), vec![(RuleId::AvoidArrayLoops, 2)]);
    }

    #[test]
    fn stalled_index_does_not_fire() {
        // j never advances: the loop overwrites one cell, not a copy
        let src = "class A { void m(int[] a, int[] b, int n, int j) {\nfor (int i = 0; i < n; i++) \na[j] = b[i];\n} }";
        assert!(rules_on(src).is_empty());
    }

    #[test]
    fn extra_work_in_body_does_not_fire() {
        let src = "class A { void m(int[] a, int[] b, int n) {\nfor (int i = 0; i < n; i++) {\na[i] = b[i];\nf(i);\n}\n} }";
        assert!(rules_on(src).is_empty());
    }

    #[test]
    fn while_copy_with_body_increment_fires() {
        let src = "class A { void m(int[] a, int[] b, int n, int i) {\nwhile (i < n) {\na[i] = b[i];\ni++;\n}\n} }";
        assert_eq!(rules_on(src), vec![(RuleId::AvoidArrayLoops, 2)]);
    }

    #[test]
    fn constant_subscripts_do_not_fire() {
        let src = "class A { void m(int[] a, int[] b, int n) {\nfor (int i = 0; i < n; i++) {\na[0] = b[0];\n}\n} }";
        assert!(rules_on(src).is_empty());
    }
}
