//! StringBuilder/StringBuffer rules: append shapes, consecutive appends, and
//! capacity accounting.

use super::context::{is_one_char_string, literal_char_count, Ctx};
use super::{RuleId, Violation};
use crate::syntax::{StatementDetail, StatementKind, TokenKind};

/// `.append("x")` with a one-character string literal argument.
pub(crate) fn append_character_with_char(ctx: &Ctx<'_>) -> Vec<Violation> {
    let mut out = Vec::new();
    for k in 0..ctx.len() {
        let t = ctx.tok(k);
        if !t.is_ident("append") || k == 0 || !ctx.tok(k - 1).is_punct(".") {
            continue;
        }
        let arg_ok = ctx.try_tok(k + 1).is_some_and(|t| t.is_punct("("))
            && ctx.try_tok(k + 2).is_some_and(is_one_char_string)
            && ctx.try_tok(k + 3).is_some_and(|t| t.is_punct(")"));
        if arg_ok {
            out.push(Violation::new(
                RuleId::AppendCharacterWithChar,
                t.line,
                "Avoid appending characters as strings in StringBuffer.append.",
            ));
        }
    }
    out
}

/// A `+` concatenation with a non-literal operand inside a StringBuffer or
/// StringBuilder constructor argument or `.append()` argument.
pub(crate) fn inefficient_string_buffering(ctx: &Ctx<'_>) -> Vec<Violation> {
    const MSG: &str =
        "Avoid concatenating nonliterals in a StringBuffer/StringBuilder constructor or append().";
    let mut out = Vec::new();
    for k in 0..ctx.len() {
        let t = ctx.tok(k);
        let (open, line) = if t.is_keyword("new")
            && ctx
                .try_tok(k + 1)
                .is_some_and(|t| t.is_ident("StringBuilder") || t.is_ident("StringBuffer"))
            && ctx.try_tok(k + 2).is_some_and(|t| t.is_punct("("))
        {
            (k + 2, t.line)
        } else if t.is_ident("append")
            && k > 0
            && ctx.tok(k - 1).is_punct(".")
            && ctx.try_tok(k + 1).is_some_and(|t| t.is_punct("("))
        {
            (k + 1, t.line)
        } else {
            continue;
        };
        let Some(close) = ctx.matching_close(open) else {
            continue;
        };
        if has_nonliteral_concatenation(ctx, open + 1, close) {
            out.push(Violation::new(RuleId::InefficientStringBuffering, line, MSG));
        }
    }
    out
}

/// Split `[lo, hi)` on depth-zero `+` and report whether that yields at
/// least two non-empty operands with at least one non-literal among them.
fn has_nonliteral_concatenation(ctx: &Ctx<'_>, lo: usize, hi: usize) -> bool {
    let mut depth = 0usize;
    let mut segments: Vec<(usize, usize)> = Vec::new();
    let mut seg_start = lo;
    for k in lo..hi {
        let t = ctx.tok(k);
        match t.text.as_str() {
            "(" | "[" | "{" if t.kind == TokenKind::Punct => depth += 1,
            ")" | "]" | "}" if t.kind == TokenKind::Punct => depth = depth.saturating_sub(1),
            "+" if depth == 0 && t.kind == TokenKind::Operator => {
                segments.push((seg_start, k));
                seg_start = k + 1;
            }
            _ => {}
        }
    }
    segments.push((seg_start, hi));
    if segments.len() < 2 || segments.iter().any(|(a, b)| a >= b) {
        return false;
    }
    segments.iter().any(|&(a, b)| {
        !(b - a == 1 && ctx.tok(a).is_literal())
    })
}

/// Two or more consecutive `X.append(...);` statements on one receiver.
pub(crate) fn consecutive_appends_should_reuse(ctx: &Ctx<'_>) -> Vec<Violation> {
    const MSG: &str = "StringBuffer (or StringBuilder).append is called consecutively without reusing the target variable.";
    let mut out = Vec::new();
    for run in append_runs(ctx) {
        if run.len() >= 2 {
            out.push(Violation::new(
                RuleId::ConsecutiveAppendsShouldReuse,
                run[0].1,
                MSG,
            ));
        }
    }
    out
}

/// Two or more consecutive `X.append(<literal>);` statements on one
/// receiver; the run length is part of the message.
pub(crate) fn consecutive_literal_appends(ctx: &Ctx<'_>) -> Vec<Violation> {
    let mut out = Vec::new();
    for run in append_runs(ctx) {
        // sub-runs whose argument is a single literal token
        let mut k = 0;
        while k < run.len() {
            if !run[k].2 {
                k += 1;
                continue;
            }
            let start = k;
            while k < run.len() && run[k].2 {
                k += 1;
            }
            let len = k - start;
            if len >= 2 {
                out.push(Violation::new(
                    RuleId::ConsecutiveLiteralAppends,
                    run[start].1,
                    format!(
                        "StringBuffer (or StringBuilder).append is called <{len}> consecutive times with literals."
                    ),
                ));
            }
        }
    }
    out
}

/// Maximal same-receiver runs of simple append statements across every
/// statement-list in the unit. Each element is (stmt id, line, literal-arg).
fn append_runs(ctx: &Ctx<'_>) -> Vec<Vec<(usize, u32, bool)>> {
    let mut runs = Vec::new();
    for parent in &ctx.unit.statements {
        if !matches!(
            parent.kind,
            StatementKind::Block | StatementKind::SwitchCaseGroup
        ) {
            continue;
        }
        let mut current: Vec<(usize, u32, bool)> = Vec::new();
        let mut receiver = String::new();
        for &child in &parent.children {
            match ctx.simple_append(child) {
                Some(call) => {
                    let lit = call.arg_range.1 - call.arg_range.0 == 1
                        && ctx.tok(call.arg_range.0).is_literal();
                    if !current.is_empty() && call.receiver == receiver {
                        current.push((child, call.line, lit));
                    } else {
                        if current.len() >= 2 {
                            runs.push(std::mem::take(&mut current));
                        }
                        current = vec![(child, call.line, lit)];
                        receiver = call.receiver;
                    }
                }
                None => {
                    if current.len() >= 2 {
                        runs.push(std::mem::take(&mut current));
                    }
                    current.clear();
                }
            }
        }
        if current.len() >= 2 {
            runs.push(current);
        }
    }
    runs
}

/// A builder constructed with a known capacity that is exceeded by the
/// literal characters appended to it within the same method.
pub(crate) fn insufficient_string_buffer_declaration(ctx: &Ctx<'_>) -> Vec<Violation> {
    let mut out = Vec::new();
    for m in &ctx.unit.methods {
        let mut builders: Vec<(String, String, u64, u32)> = Vec::new(); // name, type, capacity, line
        for &sid in &m.statement_ids {
            if let StatementDetail::LocalDecl {
                type_text,
                declarators,
            } = &ctx.unit.details[sid]
            {
                if type_text != "StringBuilder" && type_text != "StringBuffer" {
                    continue;
                }
                for d in declarators {
                    let Some(init) = d.init else { continue };
                    let (lo, hi) = (
                        ctx.sig.partition_point(|&i| i < init.start),
                        ctx.sig.partition_point(|&i| i < init.end),
                    );
                    if let Some(cap) = constructor_capacity(ctx, lo, hi) {
                        let line = ctx.unit.tokens[d.name_tok].line;
                        builders.push((d.name.clone(), type_text.clone(), cap, line));
                    }
                }
            }
        }
        if builders.is_empty() {
            continue;
        }
        let (mlo, mhi) = ctx.sig_range_of(m.body_span);
        for (name, type_text, capacity, line) in builders {
            let mut appended = 0u64;
            for k in mlo..mhi {
                if !ctx.tok(k).is_ident(&name) {
                    continue;
                }
                if !(ctx.try_tok(k + 1).is_some_and(|t| t.is_punct("."))
                    && ctx.try_tok(k + 2).is_some_and(|t| t.is_ident("append"))
                    && ctx.try_tok(k + 3).is_some_and(|t| t.is_punct("(")))
                {
                    continue;
                }
                let Some(close) = ctx.matching_close(k + 3) else {
                    continue;
                };
                if close != k + 5 {
                    continue; // not a single-token argument
                }
                let arg = ctx.tok(k + 4);
                appended += match arg.kind {
                    TokenKind::StringLit => literal_char_count(&arg.text) as u64,
                    TokenKind::CharLit => 1,
                    TokenKind::NumLit => arg.text.len() as u64,
                    TokenKind::Keyword if arg.text == "true" => 4,
                    TokenKind::Keyword if arg.text == "false" => 5,
                    _ => 0,
                };
            }
            if appended > capacity {
                out.push(Violation::new(
                    RuleId::InsufficientStringBufferDeclaration,
                    line,
                    format!(
                        "{type_text} has been initialized with size <{capacity}>, but has at least <{appended}> characters appended."
                    ),
                ));
            }
        }
    }
    out
}

/// Capacity from a `new StringBuilder(...)` initializer: 16 when empty, the
/// literal when an int literal, seed length + 16 for a string literal. None
/// when the initializer is not such a constructor or uses a dynamic size.
fn constructor_capacity(ctx: &Ctx<'_>, lo: usize, hi: usize) -> Option<u64> {
    if hi - lo < 4 || !ctx.tok(lo).is_keyword("new") {
        return None;
    }
    let ty = ctx.try_tok(lo + 1)?;
    if !ty.is_ident("StringBuilder") && !ty.is_ident("StringBuffer") {
        return None;
    }
    if !ctx.try_tok(lo + 2).is_some_and(|t| t.is_punct("(")) {
        return None;
    }
    let close = ctx.matching_close(lo + 2)?;
    if close + 1 != hi {
        return None; // trailing tokens after the constructor
    }
    match close - (lo + 2) {
        1 => Some(16),
        2 => {
            let arg = ctx.tok(lo + 3);
            match arg.kind {
                TokenKind::NumLit => parse_int_literal(&arg.text),
                TokenKind::StringLit => Some(literal_char_count(&arg.text) as u64 + 16),
                _ => None,
            }
        }
        _ => None,
    }
}

fn parse_int_literal(text: &str) -> Option<u64> {
    let cleaned: String = text
        .trim_end_matches(['l', 'L'])
        .chars()
        .filter(|&c| c != '_')
        .collect();
    if let Some(hex) = cleaned.strip_prefix("0x").or_else(|| cleaned.strip_prefix("0X")) {
        u64::from_str_radix(hex, 16).ok()
    } else {
        cleaned.parse().ok()
    }
}
