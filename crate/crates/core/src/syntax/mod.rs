//! Lexing, parsing, and statement segmentation for the Java-subset surface
//! syntax, plus the parse/validity checks used as the compilability proxy.

pub mod lexer;
pub mod parser;
pub mod scan;
pub mod token;
pub mod validity;

pub use lexer::{detokenize, lex, tokenize, LexError};
pub use parser::{
    FieldDecl, MethodRegion, ParseError, Param, StatementDetail, StatementKind, StatementNode,
    TokRange,
};
pub use token::{ByteSpan, Token, TokenKind};
pub use validity::{check_validity, InvalidReason, Validity};

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ParseStatus {
    Ok,
    Failed {
        reason: String,
        line: u32,
        column: u32,
        /// Recognized-but-unsupported construct, as opposed to broken syntax.
        unsupported: bool,
    },
}

impl ParseStatus {
    pub fn is_ok(&self) -> bool {
        matches!(self, ParseStatus::Ok)
    }
}

/// A parsed compilation unit: the text, its tokens, the line table, the
/// statement tree, and the method regions that edits may target.
#[derive(Debug, Clone)]
pub struct SourceUnit {
    pub snippet_id: String,
    pub text: String,
    pub tokens: Vec<Token>,
    /// 1-based line -> byte range (index 0 holds line 1). Every byte of the
    /// text belongs to exactly one line; a line includes its `\n` terminator.
    pub line_table: Vec<ByteSpan>,
    pub statements: Vec<StatementNode>,
    pub details: Vec<StatementDetail>,
    pub methods: Vec<MethodRegion>,
    pub fields: Vec<FieldDecl>,
    pub parse_status: ParseStatus,
}

impl SourceUnit {
    /// Parse `text` into a source unit. Total: failures are recorded in
    /// `parse_status` rather than returned as errors.
    pub fn parse(snippet_id: impl Into<String>, text: impl Into<String>) -> SourceUnit {
        let snippet_id = snippet_id.into();
        let text = text.into();
        let line_table = build_line_table(&text);
        let (tokens, lex_err) = lexer::lex(&text);
        if let Some(e) = lex_err {
            let (line, column) = match &e {
                LexError::UnterminatedLiteral { line, column }
                | LexError::UnterminatedComment { line, column } => (*line, *column),
            };
            return SourceUnit {
                snippet_id,
                text,
                tokens,
                line_table,
                statements: Vec::new(),
                details: Vec::new(),
                methods: Vec::new(),
                fields: Vec::new(),
                parse_status: ParseStatus::Failed {
                    reason: e.to_string(),
                    line,
                    column,
                    unsupported: false,
                },
            };
        }
        match parser::parse(&tokens) {
            Ok(parsed) => {
                let mut unit = SourceUnit {
                    snippet_id,
                    text,
                    tokens,
                    line_table,
                    statements: parsed.nodes,
                    details: parsed.details,
                    methods: parsed.methods,
                    fields: parsed.fields,
                    parse_status: ParseStatus::Ok,
                };
                for i in 0..unit.statements.len() {
                    let span = unit.statements[i].span;
                    unit.statements[i].line_range = unit.line_range_of(span);
                }
                for m in &mut unit.methods {
                    let span = m.body_span;
                    m.body_line_range = line_range_of(&unit.line_table, span);
                }
                unit
            }
            Err(e) => SourceUnit {
                snippet_id,
                text,
                tokens,
                line_table,
                statements: Vec::new(),
                details: Vec::new(),
                methods: Vec::new(),
                fields: Vec::new(),
                parse_status: ParseStatus::Failed {
                    reason: e.message,
                    line: e.line,
                    column: e.column,
                    unsupported: e.unsupported,
                },
            },
        }
    }

    pub fn statement(&self, id: usize) -> &StatementNode {
        &self.statements[id]
    }

    pub fn statement_text(&self, id: usize) -> &str {
        let span = self.statements[id].span;
        &self.text[span.start..span.end]
    }

    /// 1-based line number of a byte position.
    pub fn line_of(&self, pos: usize) -> u32 {
        line_of(&self.line_table, pos)
    }

    pub fn line_count(&self) -> u32 {
        self.line_table.len() as u32
    }

    /// Byte range of a 1-based line, including its terminator.
    pub fn line_span(&self, line: u32) -> ByteSpan {
        self.line_table[(line - 1) as usize]
    }

    /// Line text without its `\n` terminator.
    pub fn line_content(&self, line: u32) -> &str {
        let span = self.line_span(line);
        self.text[span.start..span.end].trim_end_matches('\n')
    }

    pub fn line_range_of(&self, span: ByteSpan) -> (u32, u32) {
        line_range_of(&self.line_table, span)
    }
}

fn build_line_table(text: &str) -> Vec<ByteSpan> {
    let mut lines = Vec::new();
    let mut start = 0usize;
    for (i, b) in text.bytes().enumerate() {
        if b == b'\n' {
            lines.push(ByteSpan::new(start, i + 1));
            start = i + 1;
        }
    }
    if start < text.len() {
        lines.push(ByteSpan::new(start, text.len()));
    }
    lines
}

fn line_of(line_table: &[ByteSpan], pos: usize) -> u32 {
    match line_table.binary_search_by(|s| {
        if pos < s.start {
            std::cmp::Ordering::Greater
        } else if pos >= s.end {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Equal
        }
    }) {
        Ok(i) => (i + 1) as u32,
        // positions at or past EOF map to the last line
        Err(_) => line_table.len().max(1) as u32,
    }
}

fn line_range_of(line_table: &[ByteSpan], span: ByteSpan) -> (u32, u32) {
    let start = line_of(line_table, span.start);
    let end = line_of(line_table, span.end.saturating_sub(1).max(span.start));
    (start, end)
}

#[derive(Serialize)]
struct TreeNode {
    id: usize,
    kind: StatementKind,
    line_range: (u32, u32),
    children: Vec<usize>,
}

/// Debug dump of the statement tree: one record per node, ordered by id.
pub fn statement_tree_json(unit: &SourceUnit) -> String {
    let nodes: Vec<TreeNode> = unit
        .statements
        .iter()
        .map(|n| TreeNode {
            id: n.id,
            kind: n.kind,
            line_range: n.line_range,
            children: n.children.clone(),
        })
        .collect();
    serde_json::to_string_pretty(&nodes).expect("tree serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_table_partitions_text() {
        let text = "a\nbb\n\nc";
        let table = build_line_table(text);
        assert_eq!(table.len(), 4);
        let mut pos = 0;
        for span in &table {
            assert_eq!(span.start, pos);
            pos = span.end;
        }
        assert_eq!(pos, text.len());
    }

    #[test]
    fn parse_simple_method() {
        let unit = SourceUnit::parse("t", "public class A { void m() { int x = 1; x++; } }");
        assert!(unit.parse_status.is_ok());
        assert_eq!(unit.methods.len(), 1);
        let m = &unit.methods[0];
        assert_eq!(m.name, "m");
        let block = unit.statement(m.body_block);
        assert_eq!(block.kind, StatementKind::Block);
        assert_eq!(block.children.len(), 2);
        assert_eq!(
            unit.statement(block.children[0]).kind,
            StatementKind::LocalDecl
        );
        assert_eq!(
            unit.statement(block.children[1]).kind,
            StatementKind::ExprStmt
        );
    }

    #[test]
    fn braceless_if_body_is_statement_node() {
        let unit = SourceUnit::parse("t", "class A { void m(int x) { if (x > 0) f(x); } }");
        assert!(unit.parse_status.is_ok());
        let body = unit.statement(unit.methods[0].body_block);
        let if_node = unit.statement(body.children[0]);
        assert_eq!(if_node.kind, StatementKind::If);
        assert_eq!(if_node.children.len(), 1);
        assert_eq!(
            unit.statement(if_node.children[0]).kind,
            StatementKind::ExprStmt
        );
    }

    #[test]
    fn loop_with_block_matches_expected_shape() {
        let src = "class A { void m(int c, int j, int[] nums, int[] b) {\nfor (int i = c+1; i < nums.length; i++) {\n    b[j] = nums[i];\n    j++;\n}\n} }";
        let unit = SourceUnit::parse("t", src);
        assert!(unit.parse_status.is_ok(), "{:?}", unit.parse_status);
        let body = unit.statement(unit.methods[0].body_block);
        let for_node = unit.statement(body.children[0]);
        assert_eq!(for_node.kind, StatementKind::For);
        let block = unit.statement(for_node.children[0]);
        assert_eq!(block.kind, StatementKind::Block);
        assert_eq!(block.children.len(), 2);
        for &c in &block.children {
            assert_eq!(unit.statement(c).kind, StatementKind::ExprStmt);
        }
    }

    #[test]
    fn stray_close_brace_fails_with_location() {
        let unit = SourceUnit::parse("t", "public class A { void m() { } } }");
        match &unit.parse_status {
            ParseStatus::Failed { line, column, unsupported, .. } => {
                assert_eq!(*line, 1);
                assert_eq!(*column, 33);
                assert!(!unsupported);
            }
            s => panic!("expected failure, got {s:?}"),
        }
    }

    #[test]
    fn generic_local_decl_is_unsupported() {
        let unit = SourceUnit::parse(
            "t",
            "import java.util.*;\nclass A { void m() { List<String> xs = null; } }",
        );
        match &unit.parse_status {
            ParseStatus::Failed { unsupported, .. } => assert!(unsupported),
            s => panic!("expected unsupported failure, got {s:?}"),
        }
    }

    #[test]
    fn generics_inside_expressions_are_opaque() {
        let unit = SourceUnit::parse(
            "t",
            "class A { void m() { java.util.List xs = new java.util.ArrayList<String>(); xs.add(\"a\"); } }",
        );
        assert!(unit.parse_status.is_ok(), "{:?}", unit.parse_status);
    }

    #[test]
    fn switch_case_groups_are_nodes() {
        let src = "class A { int m(int x) { switch (x) { case 1: return 1; case 2: case 3: x++; break; default: x--; } return x; } }";
        let unit = SourceUnit::parse("t", src);
        assert!(unit.parse_status.is_ok(), "{:?}", unit.parse_status);
        let body = unit.statement(unit.methods[0].body_block);
        let switch = unit.statement(body.children[0]);
        assert_eq!(switch.kind, StatementKind::Switch);
        assert_eq!(switch.children.len(), 3);
        for &g in &switch.children {
            assert_eq!(unit.statement(g).kind, StatementKind::SwitchCaseGroup);
        }
    }

    #[test]
    fn try_catch_finally_children_are_blocks() {
        let src = "class A { void m() { try { f(); } catch (Exception e) { g(); } finally { h(); } } }";
        let unit = SourceUnit::parse("t", src);
        assert!(unit.parse_status.is_ok(), "{:?}", unit.parse_status);
        let body = unit.statement(unit.methods[0].body_block);
        let try_node = unit.statement(body.children[0]);
        assert_eq!(try_node.kind, StatementKind::Try);
        assert_eq!(try_node.children.len(), 3);
        for &c in &try_node.children {
            assert_eq!(unit.statement(c).kind, StatementKind::Block);
        }
    }

    #[test]
    fn statement_ids_are_preorder_and_spans_nest() {
        let src = "class A { void m(int n) { for (int i=0;i<n;i++) { if (i>1) { f(i); } } } void k() { g(); } }";
        let unit = SourceUnit::parse("t", src);
        assert!(unit.parse_status.is_ok());
        for (i, n) in unit.statements.iter().enumerate() {
            assert_eq!(n.id, i);
            if let Some(p) = n.parent {
                assert!(unit.statements[p].span.contains(&n.span));
            }
            for w in n.children.windows(2) {
                let (a, b) = (&unit.statements[w[0]], &unit.statements[w[1]]);
                assert!(a.span.end <= b.span.start, "sibling spans overlap");
            }
        }
        assert_eq!(unit.methods.len(), 2);
        // second method's ids all larger than first's
        let max_first = unit.methods[0].statement_ids.iter().max().unwrap();
        let min_second = unit.methods[1].statement_ids.iter().min().unwrap();
        assert!(max_first < min_second);
    }

    #[test]
    fn fields_and_constructors_are_recognized() {
        let src = "class A { int count = 0; String name; A(int c) { count = c; } void m() { } }";
        let unit = SourceUnit::parse("t", src);
        assert!(unit.parse_status.is_ok(), "{:?}", unit.parse_status);
        assert_eq!(unit.fields.len(), 2);
        assert_eq!(unit.fields[0].name, "count");
        assert_eq!(unit.fields[0].type_text, "int");
        assert!(unit.fields[0].init.is_some());
        assert_eq!(unit.methods.len(), 2);
        assert_eq!(unit.methods[0].name, "A");
    }

    #[test]
    fn interfaces_and_enums_are_opaque() {
        let src = "interface I { void m(); }\nenum E { A, B }\nclass C { void m() { f(); } }";
        let unit = SourceUnit::parse("t", src);
        assert!(unit.parse_status.is_ok(), "{:?}", unit.parse_status);
        assert_eq!(unit.methods.len(), 1);
    }

    #[test]
    fn statement_span_reconstruction_is_identity() {
        let src = "class A { void m(int n) { int s = 0; for (int i=0;i<n;i++) { s += i; } f(s); } }";
        let unit = SourceUnit::parse("t", src);
        assert!(unit.parse_status.is_ok());
        for n in &unit.statements {
            let mut patched = unit.text.clone();
            patched.replace_range(n.span.start..n.span.end, unit.statement_text(n.id));
            assert_eq!(patched, unit.text);
        }
    }

    #[test]
    fn anonymous_class_in_expression_is_opaque() {
        let src = "class A { void m() { Runnable r = new Runnable() { public void run() { f(); } }; r.run(); } }";
        let unit = SourceUnit::parse("t", src);
        assert!(unit.parse_status.is_ok(), "{:?}", unit.parse_status);
        let body = unit.statement(unit.methods[0].body_block);
        assert_eq!(body.children.len(), 2);
    }

    #[test]
    fn tree_json_contains_kinds_and_ids() {
        let unit = SourceUnit::parse("t", "class A { void m() { f(); } }");
        let json = statement_tree_json(&unit);
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed[0]["id"], 0);
        assert_eq!(parsed[0]["kind"], "BLOCK");
        assert_eq!(parsed[1]["kind"], "EXPR_STMT");
    }
}
