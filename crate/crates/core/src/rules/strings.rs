//! String-usage rules: concatenation, instantiation, and call-shape checks.

use super::context::{is_one_char_string, Ctx};
use super::{RuleId, Violation};
use crate::syntax::TokenKind;

/// `+=` where the left operand is a local or field of declared type String.
pub(crate) fn use_string_buffer_for_string_appends(ctx: &Ctx<'_>) -> Vec<Violation> {
    let mut out = Vec::new();
    for k in 0..ctx.len() {
        let t = ctx.tok(k);
        if !t.is_operator("+=") || k == 0 {
            continue;
        }
        let lhs = ctx.tok(k - 1);
        if lhs.kind != TokenKind::Ident {
            continue;
        }
        // plain variable, or a field accessed through `this`
        if k >= 2 && ctx.tok(k - 2).is_punct(".") {
            let receiver_ok = k >= 3 && ctx.tok(k - 3).is_keyword("this");
            if !receiver_ok {
                continue;
            }
        }
        if ctx.is_string_typed(&lhs.text, lhs.span.start) {
            out.push(Violation::new(
                RuleId::UseStringBufferForStringAppends,
                t.line,
                "Prefer StringBuilder (non-synchronized) or StringBuffer (synchronized) over += for concatenating strings.",
            ));
        }
    }
    out
}

/// An empty string literal used as an operand of `+` or `+=`.
pub(crate) fn add_empty_string(ctx: &Ctx<'_>) -> Vec<Violation> {
    let mut out = Vec::new();
    for k in 0..ctx.len() {
        let t = ctx.tok(k);
        if t.kind != TokenKind::StringLit || t.text != "\"\"" {
            continue;
        }
        let prev_plus = k > 0 && {
            let p = ctx.tok(k - 1);
            p.is_operator("+") || p.is_operator("+=")
        };
        let next_plus = ctx
            .try_tok(k + 1)
            .is_some_and(|n| n.is_operator("+") || n.is_operator("+="));
        if prev_plus || next_plus {
            out.push(Violation::new(
                RuleId::AddEmptyString,
                t.line,
                "Do not add empty strings.",
            ));
        }
    }
    out
}

/// `indexOf`/`lastIndexOf` called with a single-character string literal.
pub(crate) fn use_index_of_char(ctx: &Ctx<'_>) -> Vec<Violation> {
    let mut out = Vec::new();
    for k in 0..ctx.len() {
        let t = ctx.tok(k);
        if t.kind != TokenKind::Ident || (t.text != "indexOf" && t.text != "lastIndexOf") {
            continue;
        }
        if k == 0 || !ctx.tok(k - 1).is_punct(".") {
            continue;
        }
        let Some(open) = ctx.try_tok(k + 1).filter(|t| t.is_punct("(")) else {
            continue;
        };
        let _ = open;
        let Some(arg) = ctx.try_tok(k + 2) else {
            continue;
        };
        let after = ctx.try_tok(k + 3);
        let single_first_arg =
            after.is_some_and(|a| a.is_punct(")") || a.is_punct(","));
        if is_one_char_string(arg) && single_first_arg {
            out.push(Violation::new(
                RuleId::UseIndexOfChar,
                t.line,
                "String.indexOf(char) is faster than String.indexOf(String).",
            ));
        }
    }
    out
}

/// `new String(...)` with zero arguments or one String-typed argument.
pub(crate) fn string_instantiation(ctx: &Ctx<'_>) -> Vec<Violation> {
    let mut out = Vec::new();
    for k in 0..ctx.len() {
        if !ctx.tok(k).is_keyword("new") {
            continue;
        }
        let Some(ty) = ctx.try_tok(k + 1).filter(|t| t.is_ident("String")) else {
            continue;
        };
        if !ctx.try_tok(k + 2).is_some_and(|t| t.is_punct("(")) {
            continue;
        }
        let Some(close) = ctx.matching_close(k + 2) else {
            continue;
        };
        let fires = match close - (k + 2) {
            1 => true, // new String()
            2 => {
                let arg = ctx.tok(k + 3);
                arg.kind == TokenKind::StringLit
                    || (arg.kind == TokenKind::Ident
                        && ctx.is_string_typed(&arg.text, arg.span.start))
            }
            _ => false,
        };
        if fires {
            out.push(Violation::new(
                RuleId::StringInstantiation,
                ty.line,
                "Avoid instantiating String objects; this is usually unnecessary.",
            ));
        }
    }
    out
}

/// `String.valueOf(x)` used as an operand of `+`. Because `valueOf` returns
/// a String, any adjacent `+` is a string concatenation.
pub(crate) fn useless_string_value_of(ctx: &Ctx<'_>) -> Vec<Violation> {
    let mut out = Vec::new();
    for k in 0..ctx.len() {
        let t = ctx.tok(k);
        if !t.is_ident("String") {
            continue;
        }
        if k > 0 && ctx.tok(k - 1).is_punct(".") {
            continue;
        }
        if !(ctx.try_tok(k + 1).is_some_and(|t| t.is_punct("."))
            && ctx.try_tok(k + 2).is_some_and(|t| t.is_ident("valueOf"))
            && ctx.try_tok(k + 3).is_some_and(|t| t.is_punct("(")))
        {
            continue;
        }
        let Some(close) = ctx.matching_close(k + 3) else {
            continue;
        };
        let prev_plus = k > 0 && {
            let p = ctx.tok(k - 1);
            p.is_operator("+") || p.is_operator("+=")
        };
        let next_plus = ctx.try_tok(close + 1).is_some_and(|n| n.is_operator("+"));
        if prev_plus || next_plus {
            out.push(Violation::new(
                RuleId::UselessStringValueOf,
                t.line,
                "No need to call String.valueOf to append to a string.",
            ));
        }
    }
    out
}

/// `.trim().length() == 0` or `.trim().isEmpty()` chains.
pub(crate) fn inefficient_empty_string_check(ctx: &Ctx<'_>) -> Vec<Violation> {
    const MSG: &str = "String.trim().length() == 0 / String.trim().isEmpty() is an inefficient way to validate a blank String.";
    let mut out = Vec::new();
    for k in 0..ctx.len() {
        if !(ctx.tok(k).is_punct(".")
            && ctx.try_tok(k + 1).is_some_and(|t| t.is_ident("trim"))
            && ctx.try_tok(k + 2).is_some_and(|t| t.is_punct("("))
            && ctx.try_tok(k + 3).is_some_and(|t| t.is_punct(")"))
            && ctx.try_tok(k + 4).is_some_and(|t| t.is_punct(".")))
        {
            continue;
        }
        let line = ctx.tok(k + 1).line;
        let tail = k + 5;
        let is_empty_call = ctx.try_tok(tail).is_some_and(|t| t.is_ident("isEmpty"))
            && ctx.try_tok(tail + 1).is_some_and(|t| t.is_punct("("))
            && ctx.try_tok(tail + 2).is_some_and(|t| t.is_punct(")"));
        let length_eq_zero = ctx.try_tok(tail).is_some_and(|t| t.is_ident("length"))
            && ctx.try_tok(tail + 1).is_some_and(|t| t.is_punct("("))
            && ctx.try_tok(tail + 2).is_some_and(|t| t.is_punct(")"))
            && ctx.try_tok(tail + 3).is_some_and(|t| t.is_operator("=="))
            && ctx
                .try_tok(tail + 4)
                .is_some_and(|t| t.kind == TokenKind::NumLit && t.text == "0");
        if is_empty_call || length_eq_zero {
            out.push(Violation::new(
                RuleId::InefficientEmptyStringCheck,
                line,
                MSG,
            ));
        }
    }
    out
}

/// `.toString()` on an expression statically known to be a String: a string
/// literal or a declared-String local/field.
pub(crate) fn string_to_string(ctx: &Ctx<'_>) -> Vec<Violation> {
    let mut out = Vec::new();
    for k in 1..ctx.len() {
        if !(ctx.tok(k).is_punct(".")
            && ctx.try_tok(k + 1).is_some_and(|t| t.is_ident("toString"))
            && ctx.try_tok(k + 2).is_some_and(|t| t.is_punct("("))
            && ctx.try_tok(k + 3).is_some_and(|t| t.is_punct(")")))
        {
            continue;
        }
        let recv = ctx.tok(k - 1);
        let is_string = recv.kind == TokenKind::StringLit
            || (recv.kind == TokenKind::Ident
                && !(k >= 2 && ctx.tok(k - 2).is_punct("."))
                && ctx.is_string_typed(&recv.text, recv.span.start));
        if is_string {
            out.push(Violation::new(
                RuleId::StringToString,
                recv.line,
                "Avoid calling toString() on String objects; this is unnecessary.",
            ));
        }
    }
    out
}

/// `.startsWith("x")` with a one-character literal.
pub(crate) fn simplify_starts_with(ctx: &Ctx<'_>) -> Vec<Violation> {
    let mut out = Vec::new();
    for k in 0..ctx.len() {
        let t = ctx.tok(k);
        if !t.is_ident("startsWith") || k == 0 || !ctx.tok(k - 1).is_punct(".") {
            continue;
        }
        let arg_ok = ctx.try_tok(k + 1).is_some_and(|t| t.is_punct("("))
            && ctx.try_tok(k + 2).is_some_and(is_one_char_string)
            && ctx.try_tok(k + 3).is_some_and(|t| t.is_punct(")"));
        if arg_ok {
            out.push(Violation::new(
                RuleId::SimplifyStartsWith,
                t.line,
                "This call to String.startsWith can be rewritten using String.charAt(0).",
            ));
        }
    }
    out
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
    fn string_append_fires_for_string_lhs_only() {
        let fires = rules_on("class A { void m(String s, int n) { s += n; } }");
        assert_eq!(fires, vec![(RuleId::UseStringBufferForStringAppends, 1)]);
        let silent = rules_on("class A { void m(int s, int n) { s += n; } }");
        assert!(silent.is_empty());
    }

    #[test]
    fn string_append_sees_fields_through_this() {
        let fires = rules_on("class A { String s; void m(String x) { this.s += x; } }");
        assert_eq!(fires, vec![(RuleId::UseStringBufferForStringAppends, 1)]);
    }

    #[test]
    fn empty_string_operand_positions() {
        assert_eq!(
            rules_on("class A { void m(String s) { s += \"\"; } }"),
            vec![
                (RuleId::AddEmptyString, 1),
                (RuleId::UseStringBufferForStringAppends, 1)
            ]
        );
        assert!(rules_on("class A { void m() { f(\"\"); } }").is_empty());
    }

    #[test]
    fn index_of_char_vs_string() {
        assert_eq!(
            rules_on("class A { void m(String s) { int i = s.indexOf(\"a\"); f(i); } }"),
            vec![(RuleId::UseIndexOfChar, 1)]
        );
        assert!(rules_on("class A { void m(String s) { int i = s.indexOf(\"ab\"); f(i); } }")
            .is_empty());
        // escaped one-char literal still counts as one character
        assert_eq!(
            rules_on("class A { void m(String s) { int i = s.lastIndexOf(\"\\n\"); f(i); } }"),
            vec![(RuleId::UseIndexOfChar, 1)]
        );
    }

    #[test]
    fn string_instantiation_needs_string_argument() {
        assert_eq!(
            rules_on("class A { void m() { String s = new String(); f(s); } }"),
            vec![(RuleId::StringInstantiation, 1)]
        );
        assert_eq!(
            rules_on("class A { void m(String t) { String s = new String(t); f(s); } }"),
            vec![(RuleId::StringInstantiation, 1)]
        );
        assert!(rules_on("class A { void m(byte[] b) { String s = new String(b); f(s); } }")
            .is_empty());
        assert!(rules_on("class A { void m() { String[] s = new String[3]; f(s); } }").is_empty());
    }

    #[test]
    fn useless_value_of_only_in_concatenation() {
        assert_eq!(
            rules_on("class A { void m(int x) { String s = \"v=\" + String.valueOf(x); f(s); } }"),
            vec![(RuleId::UselessStringValueOf, 1)]
        );
        assert!(
            rules_on("class A { void m(int x) { String s = String.valueOf(x); f(s); } }")
                .is_empty()
        );
    }

    #[test]
    fn empty_string_check_shapes() {
        assert_eq!(
            rules_on("class A { boolean m(String s) { return s.trim().length() == 0; } }"),
            vec![(RuleId::InefficientEmptyStringCheck, 1)]
        );
        assert_eq!(
            rules_on("class A { boolean m(String s) { return s.trim().isEmpty(); } }"),
            vec![(RuleId::InefficientEmptyStringCheck, 1)]
        );
        assert!(rules_on("class A { boolean m(String s) { return s.trim().length() == 1; } }")
            .is_empty());
    }

    #[test]
    fn to_string_on_known_strings() {
        assert_eq!(
            rules_on("class A { void m(String s) { f(s.toString()); } }"),
            vec![(RuleId::StringToString, 1)]
        );
        assert_eq!(
            rules_on("class A { void m() { f(\"x\".toString()); } }"),
            vec![(RuleId::StringToString, 1)]
        );
        assert!(rules_on("class A { void m(Object s) { f(s.toString()); } }").is_empty());
    }

    #[test]
    fn starts_with_single_char() {
        assert_eq!(
            rules_on("class A { boolean m(String s) { return s.startsWith(\"x\"); } }"),
            vec![(RuleId::SimplifyStartsWith, 1)]
        );
        assert!(
            rules_on("class A { boolean m(String s) { return s.startsWith(\"xy\"); } }")
                .is_empty()
        );
    }
}
