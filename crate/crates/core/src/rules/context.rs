//! Shared analysis context: the significant-token view of a unit plus a
//! shallow declared-type table (method-local declarations, parameters, and
//! class fields only).

use crate::syntax::{scan, ByteSpan, SourceUnit, StatementDetail, StatementKind, Token, TokenKind};

#[derive(Debug, Clone)]
pub(crate) struct DeclEntry {
    pub name: String,
    pub type_text: String,
    /// Byte position where the name becomes visible.
    pub declared_at: usize,
    /// Region in which the declaration is in scope.
    pub region: ByteSpan,
}

/// Per-unit context built once and shared by all matchers.
pub struct Ctx<'u> {
    pub unit: &'u SourceUnit,
    /// Raw indices of significant tokens.
    pub sig: Vec<usize>,
    pub(crate) decls: Vec<DeclEntry>,
}

impl<'u> Ctx<'u> {
    pub fn new(unit: &'u SourceUnit) -> Ctx<'u> {
        let sig = scan::significant_indices(&unit.tokens);
        let mut decls = Vec::new();
        let file_span = ByteSpan::new(0, unit.text.len());
        for f in &unit.fields {
            decls.push(DeclEntry {
                name: f.name.clone(),
                type_text: f.type_text.clone(),
                declared_at: 0,
                region: file_span,
            });
        }
        for m in &unit.methods {
            for p in &m.params {
                decls.push(DeclEntry {
                    name: p.name.clone(),
                    type_text: p.type_text.clone(),
                    declared_at: m.body_span.start,
                    region: m.body_span,
                });
            }
            for &sid in &m.statement_ids {
                let node = &unit.statements[sid];
                match &unit.details[sid] {
                    StatementDetail::LocalDecl {
                        type_text,
                        declarators,
                    } => {
                        for d in declarators {
                            decls.push(DeclEntry {
                                name: d.name.clone(),
                                type_text: type_text.clone(),
                                declared_at: unit.tokens[d.name_tok].span.start,
                                region: m.body_span,
                            });
                        }
                    }
                    StatementDetail::For {
                        init:
                            crate::syntax::parser::ForInit::Decl {
                                type_text,
                                declarators,
                            },
                        ..
                    } => {
                        for d in declarators {
                            decls.push(DeclEntry {
                                name: d.name.clone(),
                                type_text: type_text.clone(),
                                declared_at: unit.tokens[d.name_tok].span.start,
                                region: node.span,
                            });
                        }
                    }
                    StatementDetail::Foreach {
                        var_type,
                        var_name,
                        var_name_tok,
                        ..
                    } => {
                        decls.push(DeclEntry {
                            name: var_name.clone(),
                            type_text: var_type.clone(),
                            declared_at: unit.tokens[*var_name_tok].span.start,
                            region: node.span,
                        });
                    }
                    _ => {}
                }
            }
        }
        Ctx { unit, sig, decls }
    }

    pub fn tok(&self, pos: usize) -> &Token {
        &self.unit.tokens[self.sig[pos]]
    }

    pub fn try_tok(&self, pos: usize) -> Option<&Token> {
        self.sig.get(pos).map(|&i| &self.unit.tokens[i])
    }

    pub fn len(&self) -> usize {
        self.sig.len()
    }

    /// Declared type of `name` at a byte position: the latest in-scope,
    /// already-visible local declaration wins, then parameters, then fields.
    pub fn declared_type(&self, name: &str, at: usize) -> Option<&str> {
        self.decls
            .iter()
            .filter(|d| d.name == name && d.declared_at <= at && d.region.contains_pos(at))
            .max_by_key(|d| d.declared_at)
            .map(|d| d.type_text.as_str())
    }

    pub fn is_string_typed(&self, name: &str, at: usize) -> bool {
        self.declared_type(name, at) == Some("String")
    }

    pub fn is_builder_typed(&self, name: &str, at: usize) -> bool {
        matches!(
            self.declared_type(name, at),
            Some("StringBuilder") | Some("StringBuffer")
        )
    }

    /// Position of the closing delimiter matching the opener at `pos`.
    pub fn matching_close(&self, pos: usize) -> Option<usize> {
        scan::matching_close(&self.unit.tokens, &self.sig, pos)
    }

    /// Significant-token positions covered by a byte span.
    pub fn sig_range_of(&self, span: ByteSpan) -> (usize, usize) {
        let lo = self
            .sig
            .partition_point(|&i| self.unit.tokens[i].span.start < span.start);
        let hi = self
            .sig
            .partition_point(|&i| self.unit.tokens[i].span.end <= span.end);
        (lo, hi)
    }

    /// Statement ids of all loop statements (for, for-each, while, do).
    pub fn loop_ids(&self) -> Vec<usize> {
        self.unit
            .statements
            .iter()
            .filter(|n| {
                matches!(
                    n.kind,
                    StatementKind::For
                        | StatementKind::Foreach
                        | StatementKind::While
                        | StatementKind::Do
                )
            })
            .map(|n| n.id)
            .collect()
    }

    /// Match `receiver.append(...)` statement shapes: an expression statement
    /// whose tokens are exactly `IDENT . append ( ... ) ;`.
    pub fn simple_append(&self, stmt_id: usize) -> Option<AppendCall> {
        let node = &self.unit.statements[stmt_id];
        if node.kind != StatementKind::ExprStmt {
            return None;
        }
        let (lo, hi) = self.sig_range_of(node.span);
        // minimal shape: ident . append ( ) ;
        if hi - lo < 6 {
            return None;
        }
        let recv = self.tok(lo);
        if recv.kind != TokenKind::Ident {
            return None;
        }
        if !self.tok(lo + 1).is_punct(".") || !self.tok(lo + 2).is_ident("append") {
            return None;
        }
        if !self.tok(lo + 3).is_punct("(") {
            return None;
        }
        let close = self.matching_close(lo + 3)?;
        if close + 2 != hi || !self.tok(close + 1).is_punct(";") {
            return None;
        }
        Some(AppendCall {
            receiver: recv.text.clone(),
            arg_range: (lo + 4, close),
            line: recv.line,
        })
    }
}

/// A `receiver.append(args)` expression statement.
pub struct AppendCall {
    pub receiver: String,
    /// Significant-token positions of the argument tokens (half-open).
    pub arg_range: (usize, usize),
    pub line: u32,
}

/// Unescape a string or char literal body and return its character count.
/// Unknown escapes count as one character.
pub fn literal_char_count(lit: &str) -> usize {
    let inner = lit
        .strip_prefix('"')
        .and_then(|s| s.strip_suffix('"'))
        .or_else(|| lit.strip_prefix('\'').and_then(|s| s.strip_suffix('\'')))
        .unwrap_or(lit);
    let mut count = 0usize;
    let mut chars = inner.chars();
    while let Some(c) = chars.next() {
        if c == '\\' {
            match chars.next() {
                Some('u') => {
                    for _ in 0..4 {
                        chars.next();
                    }
                }
                Some(_) => {}
                None => {}
            }
        }
        count += 1;
    }
    count
}

/// True for a one-character string literal token like `"a"` or `"\n"`.
pub fn is_one_char_string(tok: &Token) -> bool {
    tok.kind == TokenKind::StringLit && literal_char_count(&tok.text) == 1
}
