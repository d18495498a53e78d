//! Property tests for the module-level invariants: lexer totality and
//! round-tripping, wrapper idempotence, span reconstruction, and whitespace
//! insensitivity of the analysis.

use proptest::prelude::*;
use snipforge::corpus::wrap_snippet;
use snipforge::rules;
use snipforge::syntax::{detokenize, lex, tokenize, SourceUnit};
use std::fs;
use std::path::{Path, PathBuf};

proptest! {
    /// The lenient lexer covers any input byte-exactly, malformed or not.
    #[test]
    fn lossy_lex_roundtrips_arbitrary_text(text in ".{0,200}") {
        let (tokens, _) = lex(&text);
        prop_assert_eq!(detokenize(&tokens), text);
    }

    /// Strict tokenization round-trips whenever it succeeds.
    #[test]
    fn strict_tokenize_roundtrips(text in "[ -~\\n]{0,200}") {
        if let Ok(tokens) = tokenize(&text) {
            prop_assert_eq!(detokenize(&tokens), text);
        }
    }

    /// Wrapping is idempotent: wrapped text always carries `class`.
    #[test]
    fn wrap_is_idempotent(body in "[a-z][a-z0-9 ();{}=+]{0,80}") {
        prop_assume!(!body.trim().is_empty());
        if let Ok(first) = wrap_snippet(&body, "p") {
            let second = wrap_snippet(&first.wrapped_text, "q").unwrap();
            prop_assert!(!second.wrap_applied);
            prop_assert_eq!(second.wrapped_text, first.wrapped_text);
        }
    }

    /// Splicing any statement's own text over its span is the identity.
    #[test]
    fn statement_spans_reconstruct(
        names in proptest::collection::vec("[a-z]{1,6}", 1..5),
    ) {
        let mut body = String::new();
        for (i, name) in names.iter().enumerate() {
            body.push_str(&format!("int {name}_{i} = {i};\nif ({name}_{i} > 0) {{ f({name}_{i}); }}\n"));
        }
        let src = format!("public class P {{ void m() {{\n{body}}} }}");
        let unit = SourceUnit::parse("p", src);
        prop_assume!(unit.parse_status.is_ok());
        for node in &unit.statements {
            let mut patched = unit.text.clone();
            patched.replace_range(
                node.span.start..node.span.end,
                &unit.text[node.span.start..node.span.end],
            );
            prop_assert_eq!(&patched, &unit.text);
        }
    }
}

fn collect_java(dir: &Path, out: &mut Vec<PathBuf>) {
    if let Ok(entries) = fs::read_dir(dir) {
        for entry in entries.flatten() {
            let path = entry.path();
            if path.is_dir() {
                collect_java(&path, out);
            } else if path.extension().and_then(|e| e.to_str()) == Some("java") {
                out.push(path);
            }
        }
    }
}

/// Re-indenting a fixture changes no violation except through line numbers
/// (and extra indentation does not even shift those).
#[test]
fn analysis_is_whitespace_insensitive() {
    let mut files = Vec::new();
    collect_java(
        &Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/rules"),
        &mut files,
    );
    assert!(files.len() >= 84);
    let mut checked = 0;
    for path in files {
        let text = fs::read_to_string(&path).unwrap();
        let unit = SourceUnit::parse("orig", text.clone());
        if !unit.parse_status.is_ok() {
            continue;
        }
        let reindented: String = text
            .lines()
            .map(|l| format!("        {l}\n"))
            .collect();
        let reunit = SourceUnit::parse("reindented", reindented);
        assert!(reunit.parse_status.is_ok(), "{}", path.display());
        let a = rules::analyze(&unit).unwrap();
        let b = rules::analyze(&reunit).unwrap();
        assert_eq!(a, b, "{} changed under re-indentation", path.display());
        checked += 1;
    }
    assert!(checked >= 84);
}
