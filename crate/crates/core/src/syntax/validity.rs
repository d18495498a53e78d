//! The compilability proxy: a text is VALID when it parses and every
//! identifier used as a local variable is declared earlier in an enclosing
//! scope of the same method, with no duplicate locals in one scope.
//!
//! The check is deliberately shallow. Identifiers followed by `.` are given
//! the benefit of the doubt (they may be class names), expressions carrying
//! lambdas, method references, or anonymous-class bodies are left unchecked,
//! and case labels are never checked (enum constants appear there bare). The
//! proxy therefore admits some non-compilable code; it never rejects code
//! for constructs it cannot see through.

use super::parser::{ForInit, StatementDetail, StatementKind, TokRange};
use super::scan;
use super::token::{Token, TokenKind};
use super::{ParseStatus, SourceUnit};
use std::collections::HashSet;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvalidReason {
    Parse { message: String },
    Undeclared { name: String },
    DuplicateLocal { name: String },
    External { detail: String },
}

impl fmt::Display for InvalidReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvalidReason::Parse { message } => write!(f, "PARSE: {message}"),
            InvalidReason::Undeclared { name } => write!(f, "UNDECLARED: {name}"),
            InvalidReason::DuplicateLocal { name } => write!(f, "DUPLICATE: {name}"),
            InvalidReason::External { detail } => write!(f, "EXTERNAL: {detail}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validity {
    Valid,
    Invalid(InvalidReason),
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }

    pub fn reason(&self) -> Option<String> {
        match self {
            Validity::Valid => None,
            Validity::Invalid(r) => Some(r.to_string()),
        }
    }
}

/// Check a full unit text against the validity proxy.
pub fn check_validity(text: &str) -> Validity {
    let unit = SourceUnit::parse("validity-check", text);
    check_unit(&unit)
}

/// Same check over an already-parsed unit.
pub fn check_unit(unit: &SourceUnit) -> Validity {
    match &unit.parse_status {
        ParseStatus::Failed { reason, .. } => {
            return Validity::Invalid(InvalidReason::Parse {
                message: reason.clone(),
            })
        }
        ParseStatus::Ok => {}
    }
    let mut checker = ScopeChecker {
        unit,
        sig_cache: scan::significant_indices(&unit.tokens),
        scopes: Vec::new(),
    };
    for m in 0..unit.methods.len() {
        if let Err(reason) = checker.check_method(m) {
            return Validity::Invalid(reason);
        }
    }
    Validity::Valid
}

struct ScopeChecker<'u> {
    unit: &'u SourceUnit,
    sig_cache: Vec<usize>,
    scopes: Vec<HashSet<String>>,
}

type VResult = Result<(), InvalidReason>;

impl<'u> ScopeChecker<'u> {
    fn check_method(&mut self, method: usize) -> VResult {
        self.scopes.clear();
        // class fields form the outermost scope
        let fields: HashSet<String> = self
            .unit
            .fields
            .iter()
            .map(|f| f.name.clone())
            .collect();
        self.scopes.push(fields);
        // parameters get their own scope below the fields
        let mut params = HashSet::new();
        for p in &self.unit.methods[method].params {
            if !params.insert(p.name.clone()) {
                return Err(InvalidReason::DuplicateLocal {
                    name: p.name.clone(),
                });
            }
        }
        self.scopes.push(params);
        let body = self.unit.methods[method].body_block;
        self.walk(body)?;
        Ok(())
    }

    fn declared(&self, name: &str) -> bool {
        self.scopes.iter().any(|s| s.contains(name))
    }

    fn declare(&mut self, name: &str) -> VResult {
        let top = self.scopes.last_mut().expect("scope stack never empty");
        if !top.insert(name.to_string()) {
            return Err(InvalidReason::DuplicateLocal {
                name: name.to_string(),
            });
        }
        Ok(())
    }

    fn scoped_walk(&mut self, id: usize) -> VResult {
        self.scopes.push(HashSet::new());
        let r = self.walk(id);
        self.scopes.pop();
        r
    }

    fn walk(&mut self, id: usize) -> VResult {
        let node = &self.unit.statements[id];
        let detail = &self.unit.details[id];
        match node.kind {
            StatementKind::Block => {
                self.scopes.push(HashSet::new());
                for &c in &node.children {
                    self.walk(c)?;
                }
                self.scopes.pop();
                Ok(())
            }
            StatementKind::LocalDecl => {
                if let StatementDetail::LocalDecl { declarators, .. } = detail {
                    for d in declarators {
                        if let Some(init) = d.init {
                            self.check_expr(init)?;
                        }
                        self.declare(&d.name)?;
                    }
                }
                Ok(())
            }
            StatementKind::ExprStmt => {
                if let StatementDetail::Expr(r) = detail {
                    self.check_expr(*r)?;
                }
                Ok(())
            }
            StatementKind::If
            | StatementKind::While
            | StatementKind::Do
            | StatementKind::SyncBlock => {
                if let StatementDetail::Cond(r) = detail {
                    self.check_expr(*r)?;
                }
                for &c in &node.children {
                    self.scoped_walk(c)?;
                }
                Ok(())
            }
            StatementKind::For => {
                self.scopes.push(HashSet::new());
                if let StatementDetail::For { init, cond, update } = detail {
                    match init {
                        ForInit::Decl { declarators, .. } => {
                            for d in declarators.clone() {
                                if let Some(init) = d.init {
                                    self.check_expr(init)?;
                                }
                                self.declare(&d.name)?;
                            }
                        }
                        ForInit::Exprs(r) => self.check_expr(*r)?,
                        ForInit::None => {}
                    }
                    if let Some(r) = cond {
                        self.check_expr(*r)?;
                    }
                    if let Some(r) = update {
                        self.check_expr(*r)?;
                    }
                }
                for &c in &node.children {
                    self.walk(c)?;
                }
                self.scopes.pop();
                Ok(())
            }
            StatementKind::Foreach => {
                self.scopes.push(HashSet::new());
                if let StatementDetail::Foreach {
                    var_name, iterable, ..
                } = detail
                {
                    self.check_expr(*iterable)?;
                    self.declare(&var_name.clone())?;
                }
                for &c in &node.children {
                    self.walk(c)?;
                }
                self.scopes.pop();
                Ok(())
            }
            StatementKind::Switch => {
                if let StatementDetail::Switch { selector } = detail {
                    self.check_expr(*selector)?;
                }
                // one shared scope for the whole switch body; case labels
                // themselves are not checked
                self.scopes.push(HashSet::new());
                for &group in &node.children {
                    for &c in &self.unit.statements[group].children {
                        self.walk(c)?;
                    }
                }
                self.scopes.pop();
                Ok(())
            }
            StatementKind::SwitchCaseGroup => Ok(()), // handled by Switch
            StatementKind::Try => {
                self.scopes.push(HashSet::new());
                let (resources, catches) = match detail {
                    StatementDetail::Try { resources, catches } => {
                        (resources.clone(), catches.clone())
                    }
                    _ => (Vec::new(), Vec::new()),
                };
                for r in &resources {
                    if !r.init.is_empty() {
                        self.check_expr(r.init)?;
                    }
                    if let Some(name) = &r.name {
                        self.declare(name)?;
                    }
                }
                let children = node.children.clone();
                if let Some(&try_block) = children.first() {
                    self.walk(try_block)?;
                }
                for (i, catch) in catches.iter().enumerate() {
                    if let Some(&block) = children.get(1 + i) {
                        self.scopes.push(HashSet::new());
                        if let Some(name) = &catch.param_name {
                            self.declare(name)?;
                        }
                        self.walk(block)?;
                        self.scopes.pop();
                    }
                }
                // finally block, when present
                if children.len() > 1 + catches.len() {
                    self.walk(*children.last().unwrap())?;
                }
                self.scopes.pop();
                Ok(())
            }
            StatementKind::Return => {
                if let StatementDetail::Return(Some(r)) = detail {
                    self.check_expr(*r)?;
                }
                Ok(())
            }
            StatementKind::Throw => {
                if let StatementDetail::Throw(r) = detail {
                    self.check_expr(*r)?;
                }
                Ok(())
            }
            StatementKind::Break | StatementKind::Continue | StatementKind::Empty => Ok(()),
        }
    }

    /// Check one opaque expression range: flag identifiers that read like
    /// local-variable uses but are not declared in any enclosing scope.
    fn check_expr(&mut self, range: TokRange) -> VResult {
        let tokens = &self.unit.tokens;
        let sig: Vec<usize> = self
            .sig_cache
            .iter()
            .copied()
            .filter(|&i| i >= range.start && i < range.end)
            .collect();
        if sig.is_empty() {
            return Ok(());
        }
        // opaque constructs: lambdas, method references, anonymous-class or
        // array-initializer bodies
        let mut has_new = false;
        for &i in &sig {
            let t = &tokens[i];
            if t.is_operator("->") || t.is_operator("::") {
                return Ok(());
            }
            if t.is_keyword("new") {
                has_new = true;
            }
            if has_new && t.is_punct("{") {
                return Ok(());
            }
        }

        let mut skip = vec![false; sig.len()];
        mark_type_contexts(tokens, &sig, &mut skip);

        for (k, &raw) in sig.iter().enumerate() {
            let t = &tokens[raw];
            if t.kind != TokenKind::Ident || skip[k] {
                continue;
            }
            let prev = k.checked_sub(1).map(|p| &tokens[sig[p]]);
            let next = sig.get(k + 1).map(|&n| &tokens[n]);
            if prev.is_some_and(|p| p.is_punct(".") || p.is_keyword("new") || p.is_keyword("instanceof")) {
                continue;
            }
            if next.is_some_and(|n| n.is_punct("(") || n.is_punct(".")) {
                continue;
            }
            if !self.declared(&t.text) {
                return Err(InvalidReason::Undeclared {
                    name: t.text.clone(),
                });
            }
        }
        Ok(())
    }
}

/// Mark identifier positions that sit in type contexts: cast targets,
/// `new T<...>` type arguments, and generic call type arguments.
fn mark_type_contexts(tokens: &[Token], sig: &[usize], skip: &mut [bool]) {
    let mut k = 0;
    while k < sig.len() {
        let t = &tokens[sig[k]];
        // generic type arguments anywhere in the expression
        if t.is_operator("<") {
            if let Some(after) = scan::scan_type_args(tokens, sig, k) {
                let next_ok = sig.get(after).map(|&n| {
                    let nt = &tokens[n];
                    nt.kind == TokenKind::Ident || nt.is_punct("(")
                });
                // `new Foo<...>()`: after `>` comes `(`; generic method call:
                // after `>` comes the method name
                if next_ok.unwrap_or(false) || is_after_new_type(tokens, sig, k) {
                    for s in skip.iter_mut().take(after).skip(k) {
                        *s = true;
                    }
                    k = after;
                    continue;
                }
            }
        }
        // cast: parenthesized dotted type name (with optional []) followed
        // by something value-like
        if t.is_punct("(") {
            if let Some(close) = scan::matching_close(tokens, sig, k) {
                if close > k + 1 && looks_like_type_tokens(tokens, &sig[k + 1..close]) {
                    let after_ok = sig.get(close + 1).map(|&n| {
                        let nt = &tokens[n];
                        matches!(
                            nt.kind,
                            TokenKind::Ident
                                | TokenKind::NumLit
                                | TokenKind::StringLit
                                | TokenKind::CharLit
                        ) || nt.is_punct("(")
                            || nt.is_keyword("new")
                            || nt.is_keyword("this")
                            || nt.is_keyword("super")
                            || nt.is_operator("!")
                            || nt.is_operator("~")
                    });
                    if after_ok.unwrap_or(false) {
                        for s in skip.iter_mut().take(close).skip(k + 1) {
                            *s = true;
                        }
                    }
                }
            }
        }
        k += 1;
    }
}

fn is_after_new_type(tokens: &[Token], sig: &[usize], lt_pos: usize) -> bool {
    // walk back over `Ident (. Ident)*` and expect `new`
    let mut k = lt_pos;
    loop {
        if k == 0 {
            return false;
        }
        k -= 1;
        let t = &tokens[sig[k]];
        if t.kind == TokenKind::Ident {
            if k == 0 {
                return false;
            }
            let p = &tokens[sig[k - 1]];
            if p.is_keyword("new") {
                return true;
            }
            if p.is_punct(".") {
                k -= 1;
                continue;
            }
            return false;
        }
        return false;
    }
}

fn looks_like_type_tokens(tokens: &[Token], sig: &[usize]) -> bool {
    // Ident (. Ident)* ([])*  or a primitive keyword with ([])*
    let first = match sig.first() {
        Some(&i) => &tokens[i],
        None => return false,
    };
    let mut k = 1;
    if first.kind == TokenKind::Keyword && super::token::is_primitive_type(&first.text) {
        // primitive head
    } else if first.kind == TokenKind::Ident {
        while k + 1 < sig.len()
            && tokens[sig[k]].is_punct(".")
            && tokens[sig[k + 1]].kind == TokenKind::Ident
        {
            k += 2;
        }
    } else {
        return false;
    }
    while k + 1 < sig.len() && tokens[sig[k]].is_punct("[") && tokens[sig[k + 1]].is_punct("]") {
        k += 2;
    }
    k == sig.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wrap(body: &str) -> String {
        format!("public class T {{ void m(String s, int[] a, int n) {{\n{body}\n}} }}")
    }

    #[test]
    fn original_fixture_is_valid() {
        let v = check_validity(&wrap("int x = 1;\nint y = x + n;\nf(y);"));
        assert_eq!(v, Validity::Valid);
    }

    #[test]
    fn use_without_declaration_is_undeclared() {
        let v = check_validity(&wrap("int y = x + 1;"));
        assert_eq!(
            v,
            Validity::Invalid(InvalidReason::Undeclared { name: "x".into() })
        );
    }

    #[test]
    fn deleting_a_decl_line_makes_remaining_use_invalid() {
        let full = wrap("int x = 1;\nint y = x + 1;");
        assert_eq!(check_validity(&full), Validity::Valid);
        let patched = wrap("int y = x + 1;");
        assert!(matches!(
            check_validity(&patched),
            Validity::Invalid(InvalidReason::Undeclared { .. })
        ));
    }

    #[test]
    fn unparseable_text_is_invalid_parse() {
        let v = check_validity("class A { void m() { } } }");
        assert!(matches!(v, Validity::Invalid(InvalidReason::Parse { .. })));
    }

    #[test]
    fn duplicate_local_in_same_scope_is_invalid() {
        let v = check_validity(&wrap("int x = 1;\nint x = 2;"));
        assert_eq!(
            v,
            Validity::Invalid(InvalidReason::DuplicateLocal { name: "x".into() })
        );
    }

    #[test]
    fn shadowing_in_nested_scope_is_allowed() {
        let v = check_validity(&wrap("int x = 1;\nif (x > 0) { int y = 2; f(y); }\nf(x);"));
        assert_eq!(v, Validity::Valid);
    }

    #[test]
    fn fields_and_params_are_in_scope() {
        let src = "class A { int count; void m(int inc) { count += inc; } }";
        assert_eq!(check_validity(src), Validity::Valid);
    }

    #[test]
    fn dotted_heads_get_benefit_of_the_doubt() {
        let v = check_validity(&wrap("System.out.println(s);"));
        assert_eq!(v, Validity::Valid);
    }

    #[test]
    fn declaration_must_precede_use() {
        let v = check_validity(&wrap("y = 1;\nint y;"));
        assert_eq!(
            v,
            Validity::Invalid(InvalidReason::Undeclared { name: "y".into() })
        );
    }

    #[test]
    fn for_loop_variable_is_scoped_to_the_loop() {
        let v = check_validity(&wrap("for (int i = 0; i < n; i++) { a[i] = i; }\nf(i);"));
        assert_eq!(
            v,
            Validity::Invalid(InvalidReason::Undeclared { name: "i".into() })
        );
    }

    #[test]
    fn cast_target_is_not_a_variable_use() {
        let v = check_validity(&wrap("Object o = null;\nString t = (String) o;\nf(t);"));
        assert_eq!(v, Validity::Valid);
    }

    #[test]
    fn catch_param_is_scoped() {
        let v = check_validity(&wrap("try { f(s); } catch (Exception e) { g(e); }"));
        assert_eq!(v, Validity::Valid);
    }

    #[test]
    fn lambda_expressions_are_opaque() {
        let v = check_validity(&wrap("list.forEach(x -> f(x));"));
        // `list` itself is dotted-head exempt, lambda body is opaque
        assert_eq!(v, Validity::Valid);
    }

    #[test]
    fn valid_requires_parse() {
        // every VALID text parses: trivially check an INVALID-parse case
        let v = check_validity("void m( {");
        assert!(matches!(v, Validity::Invalid(InvalidReason::Parse { .. })));
    }
}
