//! Recursive-descent parser for the Java subset: classes with fields and
//! methods, and the statement grammar needed to segment method bodies.
//!
//! Expressions are not parsed into trees; they are carried as token ranges
//! and inspected shallowly by the validity checker and the rule matchers.
//! Generics, lambdas, and anonymous classes are legal inside those opaque
//! expression ranges, but generics in structural positions (type headers,
//! member/local declaration types, method signatures) make the whole unit
//! an unsupported-feature failure.

use super::token::{is_primitive_type, ByteSpan, Token, TokenKind};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum StatementKind {
    ExprStmt,
    LocalDecl,
    If,
    For,
    Foreach,
    While,
    Do,
    Switch,
    SwitchCaseGroup,
    Return,
    Break,
    Continue,
    Throw,
    Try,
    Block,
    SyncBlock,
    Empty,
}

impl fmt::Display for StatementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StatementKind::ExprStmt => "EXPR_STMT",
            StatementKind::LocalDecl => "LOCAL_DECL",
            StatementKind::If => "IF",
            StatementKind::For => "FOR",
            StatementKind::Foreach => "FOREACH",
            StatementKind::While => "WHILE",
            StatementKind::Do => "DO",
            StatementKind::Switch => "SWITCH",
            StatementKind::SwitchCaseGroup => "SWITCH_CASE_GROUP",
            StatementKind::Return => "RETURN",
            StatementKind::Break => "BREAK",
            StatementKind::Continue => "CONTINUE",
            StatementKind::Throw => "THROW",
            StatementKind::Try => "TRY",
            StatementKind::Block => "BLOCK",
            StatementKind::SyncBlock => "SYNC_BLOCK",
            StatementKind::Empty => "EMPTY",
        };
        f.write_str(s)
    }
}

/// Half-open range of raw token indices into `SourceUnit::tokens`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TokRange {
    pub start: usize,
    pub end: usize,
}

impl TokRange {
    pub fn is_empty(&self) -> bool {
        self.start >= self.end
    }
}

/// One node of the statement tree.
#[derive(Debug, Clone)]
pub struct StatementNode {
    pub id: usize,
    pub kind: StatementKind,
    pub span: ByteSpan,
    /// Inclusive 1-based line interval.
    pub line_range: (u32, u32),
    pub parent: Option<usize>,
    pub children: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct Declarator {
    pub name: String,
    /// Raw index of the name token.
    pub name_tok: usize,
    pub init: Option<TokRange>,
}

#[derive(Debug, Clone)]
pub enum ForInit {
    None,
    Decl {
        type_text: String,
        declarators: Vec<Declarator>,
    },
    Exprs(TokRange),
}

#[derive(Debug, Clone)]
pub struct ResourceDecl {
    pub name: Option<String>,
    pub init: TokRange,
}

#[derive(Debug, Clone)]
pub struct CatchClause {
    pub param_name: Option<String>,
}

/// Statement-kind specific payload, parallel to the node arena.
#[derive(Debug, Clone)]
pub enum StatementDetail {
    None,
    Expr(TokRange),
    LocalDecl {
        type_text: String,
        declarators: Vec<Declarator>,
    },
    Cond(TokRange),
    For {
        init: ForInit,
        cond: Option<TokRange>,
        update: Option<TokRange>,
    },
    Foreach {
        var_type: String,
        var_name: String,
        var_name_tok: usize,
        iterable: TokRange,
    },
    Switch {
        selector: TokRange,
    },
    CaseGroup {
        labels: Vec<TokRange>,
    },
    Try {
        resources: Vec<ResourceDecl>,
        catches: Vec<CatchClause>,
    },
    Return(Option<TokRange>),
    Throw(TokRange),
}

#[derive(Debug, Clone)]
pub struct Param {
    pub name: String,
    pub type_text: String,
}

/// A method (or constructor) with a body; the unit of edit targeting.
#[derive(Debug, Clone)]
pub struct MethodRegion {
    pub name: String,
    pub signature_span: ByteSpan,
    /// From the opening `{` to the closing `}`, both inclusive.
    pub body_span: ByteSpan,
    pub body_line_range: (u32, u32),
    /// Preorder ids of every statement whose span lies in the body,
    /// including the outermost body block itself (its first element).
    pub statement_ids: Vec<usize>,
    /// Id of the outermost body block.
    pub body_block: usize,
    pub params: Vec<Param>,
}

/// A class-level field declarator.
#[derive(Debug, Clone)]
pub struct FieldDecl {
    pub name: String,
    pub type_text: String,
    pub line: u32,
    pub init: Option<TokRange>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    pub line: u32,
    pub column: u32,
    /// True when the text uses a recognized construct outside the supported
    /// grammar subset (as opposed to being syntactically broken).
    pub unsupported: bool,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at line {}, column {}", self.message, self.line, self.column)
    }
}

#[derive(Debug, Clone, Default)]
pub struct ParsedUnit {
    pub nodes: Vec<StatementNode>,
    pub details: Vec<StatementDetail>,
    pub methods: Vec<MethodRegion>,
    pub fields: Vec<FieldDecl>,
}

const MODIFIERS: &[&str] = &[
    "public",
    "protected",
    "private",
    "static",
    "final",
    "abstract",
    "synchronized",
    "native",
    "strictfp",
    "transient",
    "volatile",
];

struct Parser<'t> {
    tokens: &'t [Token],
    /// Indices of significant tokens.
    sig: Vec<usize>,
    /// Cursor into `sig`.
    cur: usize,
    nodes: Vec<StatementNode>,
    details: Vec<StatementDetail>,
    methods: Vec<MethodRegion>,
    fields: Vec<FieldDecl>,
    class_stack: Vec<String>,
}

type PResult<T> = Result<T, ParseError>;

pub fn parse(tokens: &[Token]) -> Result<ParsedUnit, ParseError> {
    let sig: Vec<usize> = tokens
        .iter()
        .enumerate()
        .filter(|(_, t)| t.is_significant())
        .map(|(i, _)| i)
        .collect();
    let mut p = Parser {
        tokens,
        sig,
        cur: 0,
        nodes: Vec::new(),
        details: Vec::new(),
        methods: Vec::new(),
        fields: Vec::new(),
        class_stack: Vec::new(),
    };
    p.compilation_unit()?;
    Ok(p.finish())
}

impl<'t> Parser<'t> {
    fn peek_n(&self, n: usize) -> Option<&'t Token> {
        self.sig.get(self.cur + n).map(|&i| &self.tokens[i])
    }

    fn peek(&self) -> Option<&'t Token> {
        self.peek_n(0)
    }

    fn raw_index(&self) -> usize {
        self.sig
            .get(self.cur)
            .copied()
            .unwrap_or(self.tokens.len())
    }

    fn bump(&mut self) -> Option<&'t Token> {
        let t = self.peek();
        if t.is_some() {
            self.cur += 1;
        }
        t
    }

    fn eof(&self) -> bool {
        self.cur >= self.sig.len()
    }

    fn err_at<T>(&self, message: impl Into<String>, tok: Option<&Token>) -> PResult<T> {
        let (line, column) = match tok {
            Some(t) => (t.line, t.column),
            None => self
                .tokens
                .last()
                .map(|t| (t.line, t.column))
                .unwrap_or((1, 1)),
        };
        Err(ParseError {
            message: message.into(),
            line,
            column,
            unsupported: false,
        })
    }

    fn err_here<T>(&self, message: impl Into<String>) -> PResult<T> {
        let tok = self.peek();
        self.err_at(message, tok)
    }

    fn unsupported<T>(&self, message: impl Into<String>) -> PResult<T> {
        let tok = self.peek().or_else(|| self.tokens.last());
        let (line, column) = tok.map(|t| (t.line, t.column)).unwrap_or((1, 1));
        Err(ParseError {
            message: message.into(),
            line,
            column,
            unsupported: true,
        })
    }

    fn expect_punct(&mut self, p: &str) -> PResult<&'t Token> {
        match self.peek() {
            Some(t) if t.is_punct(p) => Ok(self.bump().unwrap()),
            other => self.err_at(format!("expected `{p}`"), other),
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> PResult<&'t Token> {
        match self.peek() {
            Some(t) if t.is_keyword(kw) => Ok(self.bump().unwrap()),
            other => self.err_at(format!("expected `{kw}`"), other),
        }
    }

    fn expect_ident(&mut self) -> PResult<&'t Token> {
        match self.peek() {
            Some(t) if t.kind == TokenKind::Ident => Ok(self.bump().unwrap()),
            other => self.err_at("expected identifier", other),
        }
    }

    // ---- top level ----

    fn compilation_unit(&mut self) -> PResult<()> {
        if self.peek().is_some_and(|t| t.is_keyword("package")) {
            self.bump();
            self.skip_to_semicolon()?;
        }
        while self.peek().is_some_and(|t| t.is_keyword("import")) {
            self.bump();
            self.skip_to_semicolon()?;
        }
        while !self.eof() {
            if self.peek().is_some_and(|t| t.is_punct(";")) {
                self.bump();
                continue;
            }
            self.type_decl()?;
        }
        Ok(())
    }

    fn skip_to_semicolon(&mut self) -> PResult<()> {
        while let Some(t) = self.bump() {
            if t.is_punct(";") {
                return Ok(());
            }
        }
        self.err_here("expected `;` before end of input")
    }

    fn consume_modifiers(&mut self) -> PResult<()> {
        loop {
            match self.peek() {
                Some(t) if t.kind == TokenKind::Keyword && MODIFIERS.contains(&t.text.as_str()) => {
                    self.bump();
                }
                Some(t) if t.is_punct("@") => {
                    if self.peek_n(1).is_some_and(|t| t.is_keyword("interface")) {
                        // annotation type declaration, handled by the caller
                        return Ok(());
                    }
                    self.bump();
                    self.expect_ident()?;
                    while self.peek().is_some_and(|t| t.is_punct(".")) {
                        self.bump();
                        self.expect_ident()?;
                    }
                    if self.peek().is_some_and(|t| t.is_punct("(")) {
                        self.skip_balanced("(", ")")?;
                    }
                }
                _ => return Ok(()),
            }
        }
    }

    fn type_decl(&mut self) -> PResult<()> {
        self.consume_modifiers()?;
        match self.peek() {
            Some(t) if t.is_keyword("class") => self.class_decl(),
            Some(t) if t.is_keyword("interface") || t.is_keyword("enum") => self.opaque_type_decl(),
            Some(t) if t.is_punct("@") => self.opaque_annotation_decl(),
            other => self.err_at("expected type declaration", other),
        }
    }

    /// Interfaces, enums, and annotation types are consumed opaquely: their
    /// bodies contribute no method regions or statements.
    fn opaque_type_decl(&mut self) -> PResult<()> {
        self.bump();
        while let Some(t) = self.peek() {
            if t.is_punct("{") {
                return self.skip_balanced("{", "}");
            }
            if t.is_operator("<") {
                return self.unsupported("generic type declaration");
            }
            self.bump();
        }
        self.err_here("expected `{` in type declaration")
    }

    fn opaque_annotation_decl(&mut self) -> PResult<()> {
        self.bump(); // @
        self.expect_keyword("interface")?;
        self.expect_ident()?;
        self.expect_punct("{")?;
        // cursor sits right after `{`; rewind one so skip_balanced sees it
        self.cur -= 1;
        self.skip_balanced("{", "}")
    }

    fn class_decl(&mut self) -> PResult<()> {
        self.expect_keyword("class")?;
        let name = self.expect_ident()?.text.clone();
        if self.peek().is_some_and(|t| t.is_operator("<")) {
            return self.unsupported("generic type declaration");
        }
        // extends / implements clauses
        while let Some(t) = self.peek() {
            if t.is_punct("{") {
                break;
            }
            if t.is_operator("<") {
                return self.unsupported("generics in class header");
            }
            if t.is_keyword("extends")
                || t.is_keyword("implements")
                || t.is_punct(",")
                || t.is_punct(".")
                || t.kind == TokenKind::Ident
            {
                self.bump();
            } else {
                return self.err_at("unexpected token in class header", Some(t));
            }
        }
        self.expect_punct("{")?;
        self.class_stack.push(name);
        loop {
            match self.peek() {
                None => return self.err_here("unterminated class body"),
                Some(t) if t.is_punct("}") => {
                    self.bump();
                    break;
                }
                Some(t) if t.is_punct(";") => {
                    self.bump();
                }
                _ => self.member_decl()?,
            }
        }
        self.class_stack.pop();
        Ok(())
    }

    fn member_decl(&mut self) -> PResult<()> {
        let start_raw = self.raw_index();
        self.consume_modifiers()?;
        let t = match self.peek() {
            Some(t) => t,
            None => return self.err_here("unexpected end of class body"),
        };
        if t.is_punct("@") {
            return self.opaque_annotation_decl();
        }
        if t.is_keyword("class") {
            return self.class_decl();
        }
        if t.is_keyword("interface") || t.is_keyword("enum") {
            return self.opaque_type_decl();
        }
        if t.is_punct("{") {
            // instance or static initializer block: opaque
            return self.skip_balanced("{", "}");
        }
        if t.is_operator("<") {
            return self.unsupported("generic method declaration");
        }
        if t.is_keyword("void") {
            self.bump();
            let name = self.expect_ident()?.text.clone();
            return self.method_rest(start_raw, name);
        }
        // constructor?
        if t.kind == TokenKind::Ident
            && self.peek_n(1).is_some_and(|n| n.is_punct("("))
            && self.class_stack.last().is_some_and(|c| c == &t.text)
        {
            let name = self.bump().unwrap().text.clone();
            return self.method_rest(start_raw, name);
        }
        let type_text = self.parse_type("member declaration")?;
        let name_tok = self.expect_ident()?;
        let name = name_tok.text.clone();
        if self.peek().is_some_and(|t| t.is_operator("<")) {
            return self.unsupported("generic method declaration");
        }
        if self.peek().is_some_and(|t| t.is_punct("(")) {
            return self.method_rest(start_raw, name);
        }
        self.field_rest(type_text, name)
    }

    /// Parse a type: primitive keyword or dotted identifiers, plus trailing
    /// `[]` pairs. Generics here are unsupported.
    fn parse_type(&mut self, context: &str) -> PResult<String> {
        let mut text = String::new();
        match self.peek() {
            Some(t) if t.kind == TokenKind::Keyword && is_primitive_type(&t.text) => {
                text.push_str(&t.text);
                self.bump();
            }
            Some(t) if t.kind == TokenKind::Ident => {
                text.push_str(&t.text);
                self.bump();
                while self.peek().is_some_and(|t| t.is_punct("."))
                    && self.peek_n(1).is_some_and(|t| t.kind == TokenKind::Ident)
                {
                    self.bump();
                    text.push('.');
                    text.push_str(&self.bump().unwrap().text);
                }
            }
            other => return self.err_at(format!("expected type in {context}"), other),
        }
        if self.peek().is_some_and(|t| t.is_operator("<")) {
            return self.unsupported(format!("generics in {context}"));
        }
        while self.peek().is_some_and(|t| t.is_punct("["))
            && self.peek_n(1).is_some_and(|t| t.is_punct("]"))
        {
            self.bump();
            self.bump();
            text.push_str("[]");
        }
        Ok(text)
    }

    fn method_rest(&mut self, start_raw: usize, name: String) -> PResult<()> {
        let params = self.parse_params()?;
        // throws clause
        if self.peek().is_some_and(|t| t.is_keyword("throws")) {
            self.bump();
            loop {
                self.expect_ident()?;
                while self.peek().is_some_and(|t| t.is_punct(".")) {
                    self.bump();
                    self.expect_ident()?;
                }
                if self.peek().is_some_and(|t| t.is_punct(",")) {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        match self.peek() {
            Some(t) if t.is_punct(";") => {
                // abstract/native method: no body, no region
                self.bump();
                Ok(())
            }
            Some(t) if t.is_punct("{") => {
                let sig_end = self.prev_sig_end();
                let body_block = self.parse_block()?;
                let body = &self.nodes[body_block];
                let region = MethodRegion {
                    name,
                    signature_span: ByteSpan::new(self.tokens[start_raw].span.start, sig_end),
                    body_span: body.span,
                    body_line_range: body.line_range,
                    statement_ids: Vec::new(), // filled in finish()
                    body_block,
                    params,
                };
                self.methods.push(region);
                Ok(())
            }
            other => self.err_at("expected method body or `;`", other),
        }
    }

    /// Byte end of the most recently consumed significant token.
    fn prev_sig_end(&self) -> usize {
        if self.cur == 0 {
            return 0;
        }
        self.tokens[self.sig[self.cur - 1]].span.end
    }

    fn parse_params(&mut self) -> PResult<Vec<Param>> {
        self.expect_punct("(")?;
        let mut params = Vec::new();
        if self.peek().is_some_and(|t| t.is_punct(")")) {
            self.bump();
            return Ok(params);
        }
        loop {
            self.consume_modifiers()?; // final + annotations
            let mut type_text = self.parse_type("method signature")?;
            if self.peek().is_some_and(|t| t.is_operator("...")) {
                self.bump();
                type_text.push_str("[]");
            }
            let name = self.expect_ident()?.text.clone();
            while self.peek().is_some_and(|t| t.is_punct("["))
                && self.peek_n(1).is_some_and(|t| t.is_punct("]"))
            {
                self.bump();
                self.bump();
                type_text.push_str("[]");
            }
            params.push(Param { name, type_text });
            match self.peek() {
                Some(t) if t.is_punct(",") => {
                    self.bump();
                }
                Some(t) if t.is_punct(")") => {
                    self.bump();
                    break;
                }
                other => return self.err_at("expected `,` or `)` in parameter list", other),
            }
        }
        Ok(params)
    }

    fn field_rest(&mut self, type_text: String, first_name: String) -> PResult<()> {
        let mut name = first_name;
        loop {
            let mut ty = type_text.clone();
            while self.peek().is_some_and(|t| t.is_punct("["))
                && self.peek_n(1).is_some_and(|t| t.is_punct("]"))
            {
                self.bump();
                self.bump();
                ty.push_str("[]");
            }
            let line = self.tokens[self.sig[self.cur - 1]].line;
            let init = if self.peek().is_some_and(|t| t.is_operator("=")) {
                self.bump();
                Some(self.scan_expr(&[",", ";"])?)
            } else {
                None
            };
            self.fields.push(FieldDecl {
                name,
                type_text: ty,
                line,
                init,
            });
            match self.peek() {
                Some(t) if t.is_punct(",") => {
                    self.bump();
                    name = self.expect_ident()?.text.clone();
                }
                Some(t) if t.is_punct(";") => {
                    self.bump();
                    return Ok(());
                }
                other => return self.err_at("expected `,` or `;` in field declaration", other),
            }
        }
    }

    /// Skip a balanced group from the opening delimiter at the cursor.
    fn skip_balanced(&mut self, open: &str, close: &str) -> PResult<()> {
        let open_tok = self.peek().cloned();
        match &open_tok {
            Some(t) if t.is_punct(open) => {}
            other => return self.err_at(format!("expected `{open}`"), other.as_ref()),
        }
        let mut depth = 0usize;
        while let Some(t) = self.bump() {
            if t.is_punct(open) {
                depth += 1;
            } else if t.is_punct(close) {
                depth -= 1;
                if depth == 0 {
                    return Ok(());
                }
            }
        }
        self.err_at(
            format!("unterminated `{open}`"),
            open_tok.as_ref(),
        )
    }

    /// Scan an opaque expression: consume significant tokens until one of the
    /// terminators appears at bracket depth zero. The terminator itself is
    /// not consumed. Returns the raw token range of the scanned expression.
    ///
    /// Generic type arguments inside the expression (`new HashMap<String,
    /// Integer>()`, `x.<T>call()`) are skipped as a unit so their commas do
    /// not terminate declarator scans.
    fn scan_expr(&mut self, terminators: &[&str]) -> PResult<TokRange> {
        let start = self.raw_index();
        let mut depth = 0usize;
        loop {
            let t = match self.peek() {
                Some(t) => t,
                None => return self.err_here("unexpected end of input in expression"),
            };
            if depth == 0 && t.kind == TokenKind::Punct && terminators.contains(&t.text.as_str()) {
                break;
            }
            if depth == 0
                && t.kind == TokenKind::Operator
                && terminators.contains(&t.text.as_str())
            {
                break;
            }
            if t.is_operator("<") {
                if let Some(after) = self.scan_type_args(self.cur) {
                    let followed_by_use = self.sig.get(after).is_some_and(|&i| {
                        let nt = &self.tokens[i];
                        nt.is_punct("(") || nt.kind == TokenKind::Ident || nt.is_operator("::")
                    });
                    if followed_by_use {
                        self.cur = after;
                        continue;
                    }
                }
            }
            match t.text.as_str() {
                "(" | "[" | "{" if t.kind == TokenKind::Punct => depth += 1,
                ")" | "]" | "}" if t.kind == TokenKind::Punct => {
                    if depth == 0 {
                        return self.err_at("unbalanced closing delimiter", Some(t));
                    }
                    depth -= 1;
                }
                _ => {}
            }
            self.bump();
        }
        Ok(TokRange {
            start,
            end: self.prev_raw_end(start),
        })
    }

    /// Raw index one past the last consumed significant token, but never
    /// before `start` (empty scan yields an empty range).
    fn prev_raw_end(&self, start: usize) -> usize {
        if self.cur == 0 {
            return start;
        }
        let last = self.sig[self.cur - 1];
        if last < start {
            start
        } else {
            last + 1
        }
    }

    // ---- statements ----

    fn new_node(
        &mut self,
        kind: StatementKind,
        span: ByteSpan,
        children: Vec<usize>,
        detail: StatementDetail,
    ) -> usize {
        let id = self.nodes.len();
        for &c in &children {
            self.nodes[c].parent = Some(id);
        }
        self.nodes.push(StatementNode {
            id,
            kind,
            span,
            line_range: (0, 0), // filled in finish() from the line table
            parent: None,
            children,
        });
        self.details.push(detail);
        id
    }

    fn parse_block(&mut self) -> PResult<usize> {
        let open = self.expect_punct("{")?.span.start;
        let mut children = Vec::new();
        loop {
            match self.peek() {
                None => return self.err_here("unterminated block"),
                Some(t) if t.is_punct("}") => {
                    let close = self.bump().unwrap().span.end;
                    return Ok(self.new_node(
                        StatementKind::Block,
                        ByteSpan::new(open, close),
                        children,
                        StatementDetail::None,
                    ));
                }
                _ => children.push(self.parse_statement()?),
            }
        }
    }

    fn parse_statement(&mut self) -> PResult<usize> {
        let t = match self.peek() {
            Some(t) => t,
            None => return self.err_here("expected statement"),
        };
        let start = t.span.start;
        match (&t.kind, t.text.as_str()) {
            (TokenKind::Punct, "{") => self.parse_block(),
            (TokenKind::Punct, ";") => {
                let end = self.bump().unwrap().span.end;
                Ok(self.new_node(
                    StatementKind::Empty,
                    ByteSpan::new(start, end),
                    vec![],
                    StatementDetail::None,
                ))
            }
            (TokenKind::Keyword, "if") => self.parse_if(),
            (TokenKind::Keyword, "for") => self.parse_for(),
            (TokenKind::Keyword, "while") => self.parse_while(),
            (TokenKind::Keyword, "do") => self.parse_do(),
            (TokenKind::Keyword, "switch") => self.parse_switch(),
            (TokenKind::Keyword, "try") => self.parse_try(),
            (TokenKind::Keyword, "synchronized") => self.parse_sync(),
            (TokenKind::Keyword, "return") => {
                self.bump();
                let expr = if self.peek().is_some_and(|t| t.is_punct(";")) {
                    None
                } else {
                    Some(self.scan_expr(&[";"])?)
                };
                let end = self.expect_punct(";")?.span.end;
                Ok(self.new_node(
                    StatementKind::Return,
                    ByteSpan::new(start, end),
                    vec![],
                    StatementDetail::Return(expr),
                ))
            }
            (TokenKind::Keyword, "throw") => {
                self.bump();
                let expr = self.scan_expr(&[";"])?;
                let end = self.expect_punct(";")?.span.end;
                Ok(self.new_node(
                    StatementKind::Throw,
                    ByteSpan::new(start, end),
                    vec![],
                    StatementDetail::Throw(expr),
                ))
            }
            (TokenKind::Keyword, kw @ ("break" | "continue")) => {
                let kind = if kw == "break" {
                    StatementKind::Break
                } else {
                    StatementKind::Continue
                };
                self.bump();
                if self.peek().is_some_and(|t| t.kind == TokenKind::Ident) {
                    self.bump(); // label
                }
                let end = self.expect_punct(";")?.span.end;
                Ok(self.new_node(kind, ByteSpan::new(start, end), vec![], StatementDetail::None))
            }
            (TokenKind::Keyword, "class") => self.unsupported("local class declaration"),
            (TokenKind::Punct, "}") => self.err_at("unexpected `}`", Some(t)),
            _ => {
                // label?
                if t.kind == TokenKind::Ident
                    && self.peek_n(1).is_some_and(|n| n.is_operator(":"))
                {
                    self.bump();
                    self.bump();
                    let inner = self.parse_statement()?;
                    self.nodes[inner].span.start = start;
                    return Ok(inner);
                }
                if self.is_decl_ahead() {
                    self.parse_local_decl()
                } else {
                    let expr = self.scan_expr(&[";"])?;
                    let end = self.expect_punct(";")?.span.end;
                    Ok(self.new_node(
                        StatementKind::ExprStmt,
                        ByteSpan::new(start, end),
                        vec![],
                        StatementDetail::Expr(expr),
                    ))
                }
            }
        }
    }

    /// Lookahead: does a local variable declaration start at the cursor?
    /// Returns true for `final ...`, annotations, primitive types, and the
    /// `Type name` / `a.b.Type[] name` shapes. Generic declaration types are
    /// detected here and rejected as unsupported during parsing proper.
    fn is_decl_ahead(&self) -> bool {
        let t = match self.peek() {
            Some(t) => t,
            None => return false,
        };
        if t.is_keyword("final") || t.is_punct("@") {
            return true;
        }
        if t.kind == TokenKind::Keyword && is_primitive_type(&t.text) {
            return true;
        }
        if t.kind != TokenKind::Ident {
            return false;
        }
        // dotted name
        let mut k = 1;
        while self.peek_n(k).is_some_and(|t| t.is_punct("."))
            && self.peek_n(k + 1).is_some_and(|t| t.kind == TokenKind::Ident)
        {
            k += 2;
        }
        if self.peek_n(k).is_some_and(|t| t.is_operator("<")) {
            match self.scan_type_args(self.cur + k) {
                Some(after) => k = after - self.cur,
                None => return false,
            }
        }
        while self.peek_n(k).is_some_and(|t| t.is_punct("["))
            && self.peek_n(k + 1).is_some_and(|t| t.is_punct("]"))
        {
            k += 2;
        }
        self.peek_n(k).is_some_and(|t| t.kind == TokenKind::Ident)
    }

    /// Balanced type arguments starting at `sig` position `from` (at `<`);
    /// returns the position just past the matching `>`.
    fn scan_type_args(&self, from: usize) -> Option<usize> {
        super::scan::scan_type_args(self.tokens, &self.sig, from)
    }

    fn parse_local_decl(&mut self) -> PResult<usize> {
        let start = self.peek().unwrap().span.start;
        self.consume_modifiers()?; // final + annotations
        if self.peek().is_some_and(|t| t.kind == TokenKind::Ident) {
            // reject generic declaration types explicitly
            let mut k = 1;
            while self.peek_n(k).is_some_and(|t| t.is_punct("."))
                && self.peek_n(k + 1).is_some_and(|t| t.kind == TokenKind::Ident)
            {
                k += 2;
            }
            if self.peek_n(k).is_some_and(|t| t.is_operator("<")) {
                return self.unsupported("generics in local declaration");
            }
        }
        let type_text = self.parse_type("local declaration")?;
        let declarators = self.parse_declarators(&[";"])?;
        let end = self.expect_punct(";")?.span.end;
        Ok(self.new_node(
            StatementKind::LocalDecl,
            ByteSpan::new(start, end),
            vec![],
            StatementDetail::LocalDecl {
                type_text,
                declarators,
            },
        ))
    }

    fn parse_declarators(&mut self, stop: &[&str]) -> PResult<Vec<Declarator>> {
        let mut declarators = Vec::new();
        loop {
            let name_tok_raw = self.raw_index();
            let name = self.expect_ident()?.text.clone();
            while self.peek().is_some_and(|t| t.is_punct("["))
                && self.peek_n(1).is_some_and(|t| t.is_punct("]"))
            {
                self.bump();
                self.bump();
            }
            let init = if self.peek().is_some_and(|t| t.is_operator("=")) {
                self.bump();
                let mut terms: Vec<&str> = stop.to_vec();
                terms.push(",");
                Some(self.scan_expr(&terms)?)
            } else {
                None
            };
            declarators.push(Declarator {
                name,
                name_tok: name_tok_raw,
                init,
            });
            if self.peek().is_some_and(|t| t.is_punct(",")) {
                self.bump();
            } else {
                return Ok(declarators);
            }
        }
    }

    fn parse_if(&mut self) -> PResult<usize> {
        let start = self.expect_keyword("if")?.span.start;
        self.expect_punct("(")?;
        let cond = self.scan_expr(&[")"])?;
        self.expect_punct(")")?;
        let then_branch = self.parse_statement()?;
        let mut children = vec![then_branch];
        let mut end = self.nodes[then_branch].span.end;
        if self.peek().is_some_and(|t| t.is_keyword("else")) {
            self.bump();
            let else_branch = self.parse_statement()?;
            end = self.nodes[else_branch].span.end;
            children.push(else_branch);
        }
        Ok(self.new_node(
            StatementKind::If,
            ByteSpan::new(start, end),
            children,
            StatementDetail::Cond(cond),
        ))
    }

    fn parse_while(&mut self) -> PResult<usize> {
        let start = self.expect_keyword("while")?.span.start;
        self.expect_punct("(")?;
        let cond = self.scan_expr(&[")"])?;
        self.expect_punct(")")?;
        let body = self.parse_statement()?;
        let end = self.nodes[body].span.end;
        Ok(self.new_node(
            StatementKind::While,
            ByteSpan::new(start, end),
            vec![body],
            StatementDetail::Cond(cond),
        ))
    }

    fn parse_do(&mut self) -> PResult<usize> {
        let start = self.expect_keyword("do")?.span.start;
        let body = self.parse_statement()?;
        self.expect_keyword("while")?;
        self.expect_punct("(")?;
        let cond = self.scan_expr(&[")"])?;
        self.expect_punct(")")?;
        let end = self.expect_punct(";")?.span.end;
        Ok(self.new_node(
            StatementKind::Do,
            ByteSpan::new(start, end),
            vec![body],
            StatementDetail::Cond(cond),
        ))
    }

    fn parse_sync(&mut self) -> PResult<usize> {
        let start = self.expect_keyword("synchronized")?.span.start;
        self.expect_punct("(")?;
        let expr = self.scan_expr(&[")"])?;
        self.expect_punct(")")?;
        let body = self.parse_block()?;
        let end = self.nodes[body].span.end;
        Ok(self.new_node(
            StatementKind::SyncBlock,
            ByteSpan::new(start, end),
            vec![body],
            StatementDetail::Cond(expr),
        ))
    }

    fn parse_for(&mut self) -> PResult<usize> {
        let start = self.expect_keyword("for")?.span.start;
        // classic for has a `;` at paren depth 1 before the closing `)`
        let classic = self.for_header_has_semicolon();
        self.expect_punct("(")?;
        if classic {
            let init = if self.peek().is_some_and(|t| t.is_punct(";")) {
                ForInit::None
            } else if self.is_decl_ahead() {
                if self.peek().is_some_and(|t| t.kind == TokenKind::Ident) {
                    let mut k = 1;
                    while self.peek_n(k).is_some_and(|t| t.is_punct("."))
                        && self.peek_n(k + 1).is_some_and(|t| t.kind == TokenKind::Ident)
                    {
                        k += 2;
                    }
                    if self.peek_n(k).is_some_and(|t| t.is_operator("<")) {
                        return self.unsupported("generics in for-loop declaration");
                    }
                }
                self.consume_modifiers()?;
                let type_text = self.parse_type("for-loop declaration")?;
                let declarators = self.parse_declarators(&[";"])?;
                ForInit::Decl {
                    type_text,
                    declarators,
                }
            } else {
                ForInit::Exprs(self.scan_expr(&[";"])?)
            };
            self.expect_punct(";")?;
            let cond = if self.peek().is_some_and(|t| t.is_punct(";")) {
                None
            } else {
                Some(self.scan_expr(&[";"])?)
            };
            self.expect_punct(";")?;
            let update = if self.peek().is_some_and(|t| t.is_punct(")")) {
                None
            } else {
                Some(self.scan_expr(&[")"])?)
            };
            self.expect_punct(")")?;
            let body = self.parse_statement()?;
            let end = self.nodes[body].span.end;
            Ok(self.new_node(
                StatementKind::For,
                ByteSpan::new(start, end),
                vec![body],
                StatementDetail::For { init, cond, update },
            ))
        } else {
            self.consume_modifiers()?;
            if self.peek().is_some_and(|t| t.kind == TokenKind::Ident) {
                let mut k = 1;
                while self.peek_n(k).is_some_and(|t| t.is_punct("."))
                    && self.peek_n(k + 1).is_some_and(|t| t.kind == TokenKind::Ident)
                {
                    k += 2;
                }
                if self.peek_n(k).is_some_and(|t| t.is_operator("<")) {
                    return self.unsupported("generics in for-each declaration");
                }
            }
            let var_type = self.parse_type("for-each declaration")?;
            let var_name_tok = self.raw_index();
            let var_name = self.expect_ident()?.text.clone();
            match self.peek() {
                Some(t) if t.is_operator(":") => {
                    self.bump();
                }
                other => return self.err_at("expected `:` in for-each", other),
            }
            let iterable = self.scan_expr(&[")"])?;
            self.expect_punct(")")?;
            let body = self.parse_statement()?;
            let end = self.nodes[body].span.end;
            Ok(self.new_node(
                StatementKind::Foreach,
                ByteSpan::new(start, end),
                vec![body],
                StatementDetail::Foreach {
                    var_type,
                    var_name,
                    var_name_tok,
                    iterable,
                },
            ))
        }
    }

    fn for_header_has_semicolon(&self) -> bool {
        let mut depth = 0i32;
        let mut k = 0;
        while let Some(t) = self.peek_n(k) {
            match (&t.kind, t.text.as_str()) {
                (TokenKind::Punct, "(") | (TokenKind::Punct, "[") | (TokenKind::Punct, "{") => {
                    depth += 1
                }
                (TokenKind::Punct, ")") | (TokenKind::Punct, "]") | (TokenKind::Punct, "}") => {
                    depth -= 1;
                    if depth == 0 {
                        return false;
                    }
                }
                (TokenKind::Punct, ";") if depth == 1 => return true,
                _ => {}
            }
            k += 1;
        }
        false
    }

    fn parse_switch(&mut self) -> PResult<usize> {
        let start = self.expect_keyword("switch")?.span.start;
        self.expect_punct("(")?;
        let selector = self.scan_expr(&[")"])?;
        self.expect_punct(")")?;
        self.expect_punct("{")?;
        let mut groups = Vec::new();
        loop {
            match self.peek() {
                None => return self.err_here("unterminated switch body"),
                Some(t) if t.is_punct("}") => {
                    let end = self.bump().unwrap().span.end;
                    return Ok(self.new_node(
                        StatementKind::Switch,
                        ByteSpan::new(start, end),
                        groups,
                        StatementDetail::Switch { selector },
                    ));
                }
                Some(t) if t.is_keyword("case") || t.is_keyword("default") => {
                    groups.push(self.parse_case_group()?);
                }
                Some(t) => return self.err_at("expected `case`, `default`, or `}`", Some(t)),
            }
        }
    }

    fn parse_case_group(&mut self) -> PResult<usize> {
        let start = self.peek().unwrap().span.start;
        let mut labels = Vec::new();
        let mut end = start;
        while let Some(t) = self.peek() {
            if t.is_keyword("case") {
                self.bump();
                let label = self.scan_expr(&[":"])?;
                if self.peek().is_some_and(|t| t.is_operator("->")) {
                    return self.unsupported("switch arrow case");
                }
                match self.peek() {
                    Some(t) if t.is_operator(":") => {
                        end = self.bump().unwrap().span.end;
                    }
                    other => return self.err_at("expected `:` after case label", other),
                }
                labels.push(label);
            } else if t.is_keyword("default") {
                self.bump();
                match self.peek() {
                    Some(t) if t.is_operator(":") => {
                        end = self.bump().unwrap().span.end;
                    }
                    other => return self.err_at("expected `:` after `default`", other),
                }
                labels.push(TokRange { start: 0, end: 0 });
            } else {
                break;
            }
        }
        let mut children = Vec::new();
        while let Some(t) = self.peek() {
            if t.is_punct("}") || t.is_keyword("case") || t.is_keyword("default") {
                break;
            }
            let child = self.parse_statement()?;
            end = self.nodes[child].span.end;
            children.push(child);
        }
        Ok(self.new_node(
            StatementKind::SwitchCaseGroup,
            ByteSpan::new(start, end),
            children,
            StatementDetail::CaseGroup { labels },
        ))
    }

    fn parse_try(&mut self) -> PResult<usize> {
        let start = self.expect_keyword("try")?.span.start;
        let mut resources = Vec::new();
        if self.peek().is_some_and(|t| t.is_punct("(")) {
            self.bump();
            loop {
                if self.peek().is_some_and(|t| t.is_punct(")")) {
                    self.bump();
                    break;
                }
                let seg = self.scan_expr(&[";", ")"])?;
                resources.push(self.resource_from_range(seg));
                if self.peek().is_some_and(|t| t.is_punct(";")) {
                    self.bump();
                }
            }
        }
        let try_block = self.parse_block()?;
        let mut children = vec![try_block];
        let mut catches = Vec::new();
        let mut end = self.nodes[try_block].span.end;
        while self.peek().is_some_and(|t| t.is_keyword("catch")) {
            self.bump();
            self.expect_punct("(")?;
            let param = self.scan_expr(&[")"])?;
            self.expect_punct(")")?;
            let block = self.parse_block()?;
            end = self.nodes[block].span.end;
            children.push(block);
            catches.push(CatchClause {
                param_name: self.last_ident_in_range(param),
            });
        }
        if self.peek().is_some_and(|t| t.is_keyword("finally")) {
            self.bump();
            let block = self.parse_block()?;
            end = self.nodes[block].span.end;
            children.push(block);
        }
        Ok(self.new_node(
            StatementKind::Try,
            ByteSpan::new(start, end),
            children,
            StatementDetail::Try { resources, catches },
        ))
    }

    /// Best-effort extraction of the declared name from a try-resource
    /// segment: the identifier immediately before the first top-level `=`.
    fn resource_from_range(&self, range: TokRange) -> ResourceDecl {
        let mut prev_ident: Option<String> = None;
        let mut init_start = range.end;
        for i in range.start..range.end {
            let t = &self.tokens[i];
            if !t.is_significant() {
                continue;
            }
            if t.is_operator("=") {
                init_start = i + 1;
                break;
            }
            if t.kind == TokenKind::Ident {
                prev_ident = Some(t.text.clone());
            }
        }
        ResourceDecl {
            name: if init_start < range.end {
                prev_ident
            } else {
                None
            },
            init: TokRange {
                start: init_start.min(range.end),
                end: range.end,
            },
        }
    }

    fn last_ident_in_range(&self, range: TokRange) -> Option<String> {
        self.tokens[range.start..range.end]
            .iter()
            .rev()
            .find(|t| t.kind == TokenKind::Ident)
            .map(|t| t.text.clone())
    }

    // ---- finalization ----

    /// Renumber nodes in preorder (methods in source order), wire method
    /// statement id lists, and return the finished unit.
    fn finish(mut self) -> ParsedUnit {
        let mut order: Vec<usize> = Vec::with_capacity(self.nodes.len());
        for m in &self.methods {
            let mut stack = vec![m.body_block];
            while let Some(n) = stack.pop() {
                order.push(n);
                for &c in self.nodes[n].children.iter().rev() {
                    stack.push(c);
                }
            }
        }
        debug_assert_eq!(order.len(), self.nodes.len());
        let mut remap = vec![usize::MAX; self.nodes.len()];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new;
        }
        let mut nodes: Vec<StatementNode> = Vec::with_capacity(self.nodes.len());
        let mut details: Vec<StatementDetail> = Vec::with_capacity(self.details.len());
        for &old in &order {
            let mut n = self.nodes[old].clone();
            n.id = remap[old];
            n.parent = n.parent.map(|p| remap[p]);
            n.children = n.children.iter().map(|&c| remap[c]).collect();
            nodes.push(n);
            details.push(self.details[old].clone());
        }
        for m in &mut self.methods {
            m.body_block = remap[m.body_block];
            let mut ids = Vec::new();
            let mut stack = vec![m.body_block];
            while let Some(n) = stack.pop() {
                ids.push(n);
                for &c in nodes[n].children.iter().rev() {
                    stack.push(c);
                }
            }
            ids.sort_unstable();
            m.statement_ids = ids;
        }
        ParsedUnit {
            nodes,
            details,
            methods: self.methods,
            fields: self.fields,
        }
    }
}
