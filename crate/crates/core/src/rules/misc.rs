//! Field defaults, primitive-type choices, switch shape, and wrapper-type
//! instantiation rules.

use super::context::Ctx;
use super::{RuleId, Violation};
use crate::syntax::{StatementKind, TokenKind};

/// A field initializer equal to the type's default value.
pub(crate) fn redundant_field_initializer(ctx: &Ctx<'_>) -> Vec<Violation> {
    let mut out = Vec::new();
    for f in &ctx.unit.fields {
        let Some(init) = f.init else { continue };
        let sig: Vec<&crate::syntax::Token> = ctx.unit.tokens[init.start..init.end]
            .iter()
            .filter(|t| t.is_significant())
            .collect();
        if sig.len() != 1 {
            continue;
        }
        let tok = sig[0];
        let redundant = match f.type_text.as_str() {
            "int" | "long" | "byte" | "short" => {
                tok.kind == TokenKind::NumLit && numeric_zero(&tok.text)
            }
            "float" | "double" => tok.kind == TokenKind::NumLit && numeric_zero(&tok.text),
            "boolean" => tok.is_keyword("false"),
            "char" => tok.text == "'\\u0000'" || tok.text == "'\\0'",
            _ => tok.is_keyword("null"),
        };
        if redundant {
            out.push(Violation::new(
                RuleId::RedundantFieldInitializer,
                f.line,
                format!("Avoid using redundant field initializer for <{}>.", f.name),
            ));
        }
    }
    out
}

fn numeric_zero(text: &str) -> bool {
    let cleaned: String = text
        .trim_end_matches(['l', 'L', 'f', 'F', 'd', 'D'])
        .chars()
        .filter(|&c| c != '_')
        .collect();
    if let Some(hex) = cleaned.strip_prefix("0x").or_else(|| cleaned.strip_prefix("0X")) {
        return u64::from_str_radix(hex, 16) == Ok(0);
    }
    cleaned.parse::<f64>() == Ok(0.0)
}

/// Any use of the `short` type keyword outside a cast target.
pub(crate) fn avoid_using_short_type(ctx: &Ctx<'_>) -> Vec<Violation> {
    let mut out = Vec::new();
    for k in 0..ctx.len() {
        let t = ctx.tok(k);
        if !t.is_keyword("short") {
            continue;
        }
        let is_cast = k > 0
            && ctx.tok(k - 1).is_punct("(")
            && ctx.try_tok(k + 1).is_some_and(|n| n.is_punct(")"));
        if !is_cast {
            out.push(Violation::new(
                RuleId::AvoidUsingShortType,
                t.line,
                "Do not use the short type.",
            ));
        }
    }
    out
}

/// A switch with fewer than three case groups (default counts as a group).
pub(crate) fn too_few_branches_for_a_switch_statement(ctx: &Ctx<'_>) -> Vec<Violation> {
    ctx.unit
        .statements
        .iter()
        .filter(|n| n.kind == StatementKind::Switch && n.children.len() < 3)
        .map(|n| {
            Violation::new(
                RuleId::TooFewBranchesForASwitchStatement,
                n.line_range.0,
                "A switch with less than three branches is inefficient, use a if statement instead.",
            )
        })
        .collect()
}

/// `new Integer(...)`.
pub(crate) fn integer_instantiation(ctx: &Ctx<'_>) -> Vec<Violation> {
    new_call_sites(ctx, "Integer")
        .into_iter()
        .map(|line| {
            Violation::new(
                RuleId::IntegerInstantiation,
                line,
                "Avoid instantiating Integer objects. Call Integer.valueOf() instead.",
            )
        })
        .collect()
}

/// `.toArray(new T[0])` with a zero-length array argument.
pub(crate) fn optimizable_to_array_call(ctx: &Ctx<'_>) -> Vec<Violation> {
    let mut out = Vec::new();
    for k in 0..ctx.len() {
        let t = ctx.tok(k);
        if !t.is_ident("toArray") || k == 0 || !ctx.tok(k - 1).is_punct(".") {
            continue;
        }
        let shape_ok = ctx.try_tok(k + 1).is_some_and(|t| t.is_punct("("))
            && ctx.try_tok(k + 2).is_some_and(|t| t.is_keyword("new"))
            && ctx
                .try_tok(k + 3)
                .is_some_and(|t| t.kind == TokenKind::Ident)
            && ctx.try_tok(k + 4).is_some_and(|t| t.is_punct("["))
            && ctx
                .try_tok(k + 5)
                .is_some_and(|t| t.kind == TokenKind::NumLit && t.text == "0")
            && ctx.try_tok(k + 6).is_some_and(|t| t.is_punct("]"))
            && ctx.try_tok(k + 7).is_some_and(|t| t.is_punct(")"));
        if shape_ok {
            out.push(Violation::new(
                RuleId::OptimizableToArrayCall,
                t.line,
                "This call to Collection.toArray() may be optimizable.",
            ));
        }
    }
    out
}

/// `new Boolean(...)` or `Boolean.valueOf(<literal>)`.
pub(crate) fn boolean_instantiation(ctx: &Ctx<'_>) -> Vec<Violation> {
    const MSG: &str = "Avoid instantiating Boolean objects; reference Boolean.TRUE/Boolean.FALSE or call Boolean.valueOf() instead.";
    let mut out: Vec<Violation> = new_call_sites(ctx, "Boolean")
        .into_iter()
        .map(|line| Violation::new(RuleId::BooleanInstantiation, line, MSG))
        .collect();
    for k in 0..ctx.len() {
        let t = ctx.tok(k);
        if !t.is_ident("Boolean") || (k > 0 && ctx.tok(k - 1).is_punct(".")) {
            continue;
        }
        let literal_arg = ctx.try_tok(k + 1).is_some_and(|t| t.is_punct("."))
            && ctx.try_tok(k + 2).is_some_and(|t| t.is_ident("valueOf"))
            && ctx.try_tok(k + 3).is_some_and(|t| t.is_punct("("))
            && ctx.try_tok(k + 4).is_some_and(|t| {
                t.kind == TokenKind::StringLit || t.is_keyword("true") || t.is_keyword("false")
            })
            && ctx.try_tok(k + 5).is_some_and(|t| t.is_punct(")"));
        if literal_arg {
            out.push(Violation::new(RuleId::BooleanInstantiation, t.line, MSG));
        }
    }
    out
}

/// Lines of `new <TypeName>(` occurrences.
fn new_call_sites(ctx: &Ctx<'_>, type_name: &str) -> Vec<u32> {
    let mut lines = Vec::new();
    for k in 0..ctx.len() {
        if ctx.tok(k).is_keyword("new")
            && ctx.try_tok(k + 1).is_some_and(|t| t.is_ident(type_name))
            && ctx.try_tok(k + 2).is_some_and(|t| t.is_punct("("))
        {
            lines.push(ctx.tok(k).line);
        }
    }
    lines
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
    fn zero_field_initializer_is_redundant() {
        assert_eq!(
            rules_on("class A { int i = 0; void m(){ f(i); } }"),
            vec![(RuleId::RedundantFieldInitializer, 1)]
        );
        assert!(rules_on("class A { int i = 1; void m(){ f(i); } }").is_empty());
    }

    #[test]
    fn default_initializers_by_type() {
        assert_eq!(
            rules_on("class A { boolean b = false; void m(){ f(b); } }").len(),
            1
        );
        assert_eq!(
            rules_on("class A { double d = 0.0; void m(){ f(d); } }").len(),
            1
        );
        assert_eq!(
            rules_on("class A { Object o = null; void m(){ f(o); } }").len(),
            1
        );
        assert_eq!(
            rules_on("class A { long l = 0L; void m(){ f(l); } }").len(),
            1
        );
        assert!(rules_on("class A { boolean b = true; void m(){ f(b); } }").is_empty());
        // locals are not fields
        assert!(rules_on("class A { void m(){ int i = 0; f(i); } }").is_empty());
    }

    #[test]
    fn short_type_fires_outside_casts() {
        let fires = rules_on("class A { void m() { short s = 1; f(s); } }");
        assert_eq!(fires, vec![(RuleId::AvoidUsingShortType, 1)]);
        assert!(rules_on("class A { void m(int x) { f((short) x); } }").is_empty());
        // fields and parameters count
        assert_eq!(
            rules_on("class A { short s; void m(){ f(s); } }"),
            vec![(RuleId::AvoidUsingShortType, 1)]
        );
    }

    #[test]
    fn switch_branch_counting() {
        let two = "class A { void m(int x) { switch (x) { case 1: f(); break; default: g(); } } }";
        assert_eq!(
            rules_on(two),
            vec![(RuleId::TooFewBranchesForASwitchStatement, 1)]
        );
        let three = "class A { void m(int x) { switch (x) { case 1: f(); break; case 2: h(); break; default: g(); } } }";
        assert!(rules_on(three).is_empty());
    }

    #[test]
    fn integer_and_boolean_instantiation() {
        assert_eq!(
            rules_on("class A { void m() { Integer i = new Integer(3); f(i); } }"),
            vec![(RuleId::IntegerInstantiation, 1)]
        );
        assert_eq!(
            rules_on("class A { void m() { Boolean b = new Boolean(true); f(b); } }"),
            vec![(RuleId::BooleanInstantiation, 1)]
        );
        assert_eq!(
            rules_on("class A { void m() { Boolean b = Boolean.valueOf(\"true\"); f(b); } }"),
            vec![(RuleId::BooleanInstantiation, 1)]
        );
        assert!(rules_on("class A { void m(String s) { Boolean b = Boolean.valueOf(s); f(b); } }")
            .is_empty());
    }

    #[test]
    fn to_array_zero_length() {
        assert_eq!(
            rules_on(
                "class A { void m(java.util.List c) { Object[] o = c.toArray(new Object[0]); f(o); } }"
            ),
            vec![(RuleId::OptimizableToArrayCall, 1)]
        );
        assert!(rules_on(
            "class A { void m(java.util.List c) { Object[] o = c.toArray(new Object[c.size()]); f(o); } }"
        )
        .is_empty());
    }
}
