//! Lexer for the Java-subset surface syntax.
//!
//! The lexer is total: `lex` always produces tokens covering the whole input,
//! so detokenization reproduces it byte-exactly, even on malformed text. The
//! strict entry point `tokenize` reports unterminated literals and comments
//! as errors instead.

use super::token::{is_java_keyword, ByteSpan, Token, TokenKind};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LexError {
    #[error("unterminated string or character literal at line {line}, column {column}")]
    UnterminatedLiteral { line: u32, column: u32 },
    #[error("unterminated block comment at line {line}, column {column}")]
    UnterminatedComment { line: u32, column: u32 },
}

/// Multi-character operators, longest first so maximal munch works by
/// probing in table order.
const OPERATORS: &[&str] = &[
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "==", "!=", "<=", ">=", "&&", "||", "++",
    "--", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<", ">>", "+", "-", "*", "/", "%",
    "=", "!", "<", ">", "&", "|", "^", "~", "?", ":",
];

fn single_punct(c: char) -> bool {
    matches!(c, '(' | ')' | '{' | '}' | '[' | ']' | ';' | ',' | '.' | '@')
}

fn ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_' || c == '$'
}

fn ident_continue(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '$'
}

struct Scanner<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
    line: u32,
    column: u32,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            text,
            bytes: text.as_bytes(),
            pos: 0,
            line: 1,
            column: 1,
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn peek2(&self) -> Option<char> {
        let mut it = self.text[self.pos..].chars();
        it.next();
        it.next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += c.len_utf8() as u32;
        }
        Some(c)
    }

    fn starts_with(&self, s: &str) -> bool {
        self.bytes[self.pos..].starts_with(s.as_bytes())
    }
}

/// Lenient lex: always covers the full input. The second element carries the
/// first lexical error, if any (the offending token still spans to EOF or to
/// its natural end).
pub fn lex(text: &str) -> (Vec<Token>, Option<LexError>) {
    let mut sc = Scanner::new(text);
    let mut tokens = Vec::new();
    let mut error: Option<LexError> = None;

    while let Some(c) = sc.peek() {
        let start = sc.pos;
        let line = sc.line;
        let column = sc.column;

        let kind = if c.is_whitespace() {
            while sc.peek().is_some_and(|c| c.is_whitespace()) {
                sc.bump();
            }
            TokenKind::Whitespace
        } else if sc.starts_with("//") {
            while sc.peek().is_some_and(|c| c != '\n') {
                sc.bump();
            }
            TokenKind::Comment
        } else if sc.starts_with("/*") {
            sc.bump();
            sc.bump();
            let mut closed = false;
            while let Some(c) = sc.bump() {
                if c == '*' && sc.peek() == Some('/') {
                    sc.bump();
                    closed = true;
                    break;
                }
            }
            if !closed && error.is_none() {
                error = Some(LexError::UnterminatedComment { line, column });
            }
            TokenKind::Comment
        } else if c == '"' || c == '\'' {
            let quote = c;
            sc.bump();
            let mut closed = false;
            while let Some(n) = sc.peek() {
                if n == '\\' {
                    sc.bump();
                    sc.bump();
                } else if n == quote {
                    sc.bump();
                    closed = true;
                    break;
                } else if n == '\n' {
                    // Java string/char literals cannot span lines.
                    break;
                } else {
                    sc.bump();
                }
            }
            if !closed && error.is_none() {
                error = Some(LexError::UnterminatedLiteral { line, column });
            }
            if quote == '"' {
                TokenKind::StringLit
            } else {
                TokenKind::CharLit
            }
        } else if c.is_ascii_digit() || (c == '.' && sc.peek2().is_some_and(|d| d.is_ascii_digit()))
        {
            lex_number(&mut sc);
            TokenKind::NumLit
        } else if ident_start(c) {
            while sc.peek().is_some_and(ident_continue) {
                sc.bump();
            }
            if is_java_keyword(&text[start..sc.pos]) {
                TokenKind::Keyword
            } else {
                TokenKind::Ident
            }
        } else if single_punct(c) {
            // "..." is matched by the operator table before we get here.
            if let Some(op) = OPERATORS.iter().find(|op| sc.starts_with(op)) {
                for _ in 0..op.len() {
                    sc.bump();
                }
                TokenKind::Operator
            } else {
                sc.bump();
                TokenKind::Punct
            }
        } else if let Some(op) = OPERATORS.iter().find(|op| sc.starts_with(op)) {
            for _ in 0..op.len() {
                sc.bump();
            }
            TokenKind::Operator
        } else {
            // Unknown character: keep it as punctuation so the lexer stays total.
            sc.bump();
            TokenKind::Punct
        };

        tokens.push(Token {
            kind,
            text: text[start..sc.pos].to_string(),
            span: ByteSpan::new(start, sc.pos),
            line,
            column,
        });
    }

    (tokens, error)
}

fn lex_number(sc: &mut Scanner<'_>) {
    // Loose numeric scan: covers decimal, hex, binary, octal, underscores,
    // float suffixes, and exponents. Malformed numbers become opaque tokens.
    sc.bump();
    while let Some(c) = sc.peek() {
        if c.is_ascii_alphanumeric() || c == '_' {
            let is_exp = matches!(c, 'e' | 'E');
            sc.bump();
            if is_exp && matches!(sc.peek(), Some('+') | Some('-')) {
                if sc.peek2().is_some_and(|d| d.is_ascii_digit()) {
                    sc.bump();
                }
            }
        } else if c == '.' && sc.peek2().is_some_and(|d| d.is_ascii_digit()) {
            sc.bump();
        } else {
            break;
        }
    }
}

/// Strict tokenization per the module contract.
pub fn tokenize(text: &str) -> Result<Vec<Token>, LexError> {
    let (tokens, error) = lex(text);
    match error {
        Some(e) => Err(e),
        None => Ok(tokens),
    }
}

/// Inverse of tokenization: concatenate every token text.
pub fn detokenize(tokens: &[Token]) -> String {
    tokens.iter().map(|t| t.text.as_str()).collect()
}
