//! Snippet ingestion: wrap raw snippets into compilation units, parse them,
//! and keep the ones that contain at least one method.

use crate::syntax::{ParseStatus, SourceUnit, TokenKind};
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("snippet is empty or whitespace-only")]
    EmptySnippet,
    #[error("no snippet files ingested from {dir}")]
    EmptyCorpus { dir: PathBuf },
    #[error("cannot read corpus directory {dir}: {source}")]
    Io {
        dir: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

/// A raw snippet plus its analyzable, possibly wrapped form.
#[derive(Debug, Clone)]
pub struct Snippet {
    pub id: String,
    pub raw_text: String,
    pub wrapped_text: String,
    pub wrap_applied: bool,
    pub origin_path: PathBuf,
    /// Raw line `L` sits at wrapped line `L + line_offset`.
    pub line_offset: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RejectReason {
    NoMethod,
    ParseFailure,
    UnsupportedFeature,
    Empty,
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RejectReason::NoMethod => "NO_METHOD",
            RejectReason::ParseFailure => "PARSE_FAILURE",
            RejectReason::UnsupportedFeature => "UNSUPPORTED_FEATURE",
            RejectReason::Empty => "EMPTY",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Rejection {
    pub id: String,
    pub reason: RejectReason,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CorpusCounts {
    pub accepted_files: usize,
    pub accepted_methods: usize,
}

/// The ingestion record: which snippets were kept, which were dropped and
/// why, and the headline counts. Ids are lexicographically sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusManifest {
    pub accepted: Vec<String>,
    pub rejected: Vec<Rejection>,
    pub counts: CorpusCounts,
}

impl CorpusManifest {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("manifest serialization");
        s.push('\n');
        s
    }
}

/// Wrap a raw snippet: texts that already carry an `import`, `package`, or
/// `class` keyword token are kept unmodified; everything else is enclosed in
/// a fresh public class.
pub fn wrap_snippet(raw: &str, id: &str) -> Result<Snippet, CorpusError> {
    wrap_snippet_at(raw, id, PathBuf::new())
}

fn wrap_snippet_at(raw: &str, id: &str, origin_path: PathBuf) -> Result<Snippet, CorpusError> {
    if raw.trim().is_empty() {
        return Err(CorpusError::EmptySnippet);
    }
    // token-based check, so e.g. `classic` in an identifier does not count
    let (tokens, _) = crate::syntax::lex(raw);
    let has_unit_keyword = tokens.iter().any(|t| {
        t.kind == TokenKind::Keyword && matches!(t.text.as_str(), "import" | "package" | "class")
    });
    if has_unit_keyword {
        return Ok(Snippet {
            id: id.to_string(),
            raw_text: raw.to_string(),
            wrapped_text: raw.to_string(),
            wrap_applied: false,
            origin_path,
            line_offset: 0,
        });
    }
    let class_name = sanitize_class_name(id);
    let mut wrapped = format!("public class {class_name} {{\n");
    wrapped.push_str(raw);
    if !raw.ends_with('\n') {
        wrapped.push('\n');
    }
    wrapped.push_str("}\n");
    Ok(Snippet {
        id: id.to_string(),
        raw_text: raw.to_string(),
        wrapped_text: wrapped,
        wrap_applied: true,
        origin_path,
        line_offset: 1,
    })
}

fn sanitize_class_name(id: &str) -> String {
    let mut name = String::from("C_");
    for c in id.chars() {
        if c.is_ascii_alphanumeric() || c == '_' {
            name.push(c);
        } else {
            name.push('_');
        }
    }
    name
}

/// The built corpus: manifest plus the accepted units, both in id order.
#[derive(Debug)]
pub struct Corpus {
    pub manifest: CorpusManifest,
    pub snippets: Vec<Snippet>,
    pub units: Vec<SourceUnit>,
}

impl Corpus {
    /// Ingest every `.java` file in `dir` (non-recursive). Unreadable files
    /// are logged and skipped; undecodable or unparseable ones are rejected
    /// with a reason.
    pub fn build(dir: &Path) -> Result<Corpus, CorpusError> {
        let mut files: Vec<(String, PathBuf)> = Vec::new();
        let entries = fs::read_dir(dir).map_err(|source| CorpusError::Io {
            dir: dir.to_path_buf(),
            source,
        })?;
        for entry in entries {
            let entry = match entry {
                Ok(e) => e,
                Err(e) => {
                    log::warn!("skipping unreadable directory entry in {}: {e}", dir.display());
                    continue;
                }
            };
            let path = entry.path();
            if path.extension().and_then(|e| e.to_str()) != Some("java") {
                continue;
            }
            let id = match path.file_stem().and_then(|s| s.to_str()) {
                Some(s) => s.to_string(),
                None => continue,
            };
            files.push((id, path));
        }
        files.sort_by(|a, b| a.0.cmp(&b.0));

        enum Outcome {
            Accepted(Snippet, Box<SourceUnit>),
            Rejected(Rejection),
            IoFailure(PathBuf, String),
        }

        let outcomes: Vec<Outcome> = files
            .par_iter()
            .map(|(id, path)| {
                let bytes = match fs::read(path) {
                    Ok(b) => b,
                    Err(e) => return Outcome::IoFailure(path.clone(), e.to_string()),
                };
                let raw = match String::from_utf8(bytes) {
                    Ok(s) => s,
                    Err(_) => {
                        return Outcome::Rejected(Rejection {
                            id: id.clone(),
                            reason: RejectReason::ParseFailure,
                        })
                    }
                };
                let snippet = match wrap_snippet_at(&raw, id, path.clone()) {
                    Ok(s) => s,
                    Err(_) => {
                        return Outcome::Rejected(Rejection {
                            id: id.clone(),
                            reason: RejectReason::Empty,
                        })
                    }
                };
                let unit = SourceUnit::parse(id.clone(), snippet.wrapped_text.clone());
                match &unit.parse_status {
                    ParseStatus::Failed { unsupported, .. } => Outcome::Rejected(Rejection {
                        id: id.clone(),
                        reason: if *unsupported {
                            RejectReason::UnsupportedFeature
                        } else {
                            RejectReason::ParseFailure
                        },
                    }),
                    ParseStatus::Ok if unit.methods.is_empty() => Outcome::Rejected(Rejection {
                        id: id.clone(),
                        reason: RejectReason::NoMethod,
                    }),
                    ParseStatus::Ok => Outcome::Accepted(snippet, Box::new(unit)),
                }
            })
            .collect();

        let mut accepted = Vec::new();
        let mut rejected = Vec::new();
        let mut snippets = Vec::new();
        let mut units = Vec::new();
        let mut ingested = 0usize;
        let mut accepted_methods = 0usize;
        for outcome in outcomes {
            match outcome {
                Outcome::Accepted(snippet, unit) => {
                    ingested += 1;
                    accepted.push(snippet.id.clone());
                    accepted_methods += unit.methods.len();
                    snippets.push(snippet);
                    units.push(*unit);
                }
                Outcome::Rejected(r) => {
                    ingested += 1;
                    rejected.push(r);
                }
                Outcome::IoFailure(path, err) => {
                    log::warn!("IO_FAILURE reading {}: {err}", path.display());
                }
            }
        }
        if ingested == 0 {
            return Err(CorpusError::EmptyCorpus {
                dir: dir.to_path_buf(),
            });
        }
        let counts = CorpusCounts {
            accepted_files: accepted.len(),
            accepted_methods,
        };
        Ok(Corpus {
            manifest: CorpusManifest {
                accepted,
                rejected,
                counts,
            },
            snippets,
            units,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snippet_with_class_keyword_is_kept_unmodified() {
        let s = wrap_snippet("public class A { void m(){} }", "a").unwrap();
        assert!(!s.wrap_applied);
        assert_eq!(s.wrapped_text, s.raw_text);
        assert_eq!(s.line_offset, 0);
    }

    #[test]
    fn snippet_without_keywords_is_wrapped() {
        let s = wrap_snippet("void m(){ int x=1; }", "q1").unwrap();
        assert!(s.wrap_applied);
        assert_eq!(
            s.wrapped_text,
            "public class C_q1 {\nvoid m(){ int x=1; }\n}\n"
        );
        assert_eq!(s.line_offset, 1);
    }

    #[test]
    fn keyword_detection_is_token_based() {
        // `classic` must not suppress wrapping; `class` in a string must not either
        let s = wrap_snippet("void classic(){ f(\"class\"); }", "x").unwrap();
        assert!(s.wrap_applied);
    }

    #[test]
    fn whitespace_only_snippet_is_empty_error() {
        assert!(matches!(
            wrap_snippet("   ", "e"),
            Err(CorpusError::EmptySnippet)
        ));
    }

    #[test]
    fn wrapping_is_idempotent() {
        let s = wrap_snippet("int f(){ return 1; }", "w").unwrap();
        let again = wrap_snippet(&s.wrapped_text, "w2").unwrap();
        assert!(!again.wrap_applied);
        assert_eq!(again.wrapped_text, s.wrapped_text);
    }

    #[test]
    fn class_name_is_sanitized() {
        let s = wrap_snippet("void m(){}", "q-1.2 odd").unwrap();
        assert!(s.wrapped_text.starts_with("public class C_q_1_2_odd {"));
    }

    fn write(dir: &Path, name: &str, content: &str) {
        fs::write(dir.join(name), content).unwrap();
    }

    #[test]
    fn build_classifies_files_and_counts_methods() {
        let dir = tempfile::tempdir().unwrap();
        write(dir.path(), "a_ok.java", "void m(){ f(); }\nvoid k(){ g(); }");
        write(dir.path(), "b_nomethod.java", "public class B { int x = 1; }");
        write(dir.path(), "c_broken.java", "void m(){ ");
        write(dir.path(), "d_empty.java", "  \n ");
        write(
            dir.path(),
            "e_unsupported.java",
            "void m(){ java.util.List<String> xs = null; }",
        );
        write(dir.path(), "notjava.txt", "ignored");
        let corpus = Corpus::build(dir.path()).unwrap();
        assert_eq!(corpus.manifest.accepted, vec!["a_ok"]);
        assert_eq!(
            corpus.manifest.rejected,
            vec![
                Rejection {
                    id: "b_nomethod".into(),
                    reason: RejectReason::NoMethod
                },
                Rejection {
                    id: "c_broken".into(),
                    reason: RejectReason::ParseFailure
                },
                Rejection {
                    id: "d_empty".into(),
                    reason: RejectReason::Empty
                },
                Rejection {
                    id: "e_unsupported".into(),
                    reason: RejectReason::UnsupportedFeature
                },
            ]
        );
        assert_eq!(corpus.manifest.counts.accepted_files, 1);
        assert_eq!(corpus.manifest.counts.accepted_methods, 2);
    }

    #[test]
    fn accepted_units_have_methods() {
        let dir = tempfile::tempdir().unwrap();
        write(dir.path(), "one.java", "int inc(int x){ return x + 1; }");
        let corpus = Corpus::build(dir.path()).unwrap();
        assert!(corpus
            .units
            .iter()
            .all(|u| !u.methods.is_empty() && u.parse_status.is_ok()));
        assert!(corpus.manifest.counts.accepted_methods >= corpus.manifest.counts.accepted_files);
    }

    #[test]
    fn rebuild_is_byte_identical() {
        let dir = tempfile::tempdir().unwrap();
        write(dir.path(), "m1.java", "void a(){ f(); }");
        write(dir.path(), "m2.java", "void b(){ g(); }");
        let first = Corpus::build(dir.path()).unwrap().manifest.to_json();
        let second = Corpus::build(dir.path()).unwrap().manifest.to_json();
        assert_eq!(first, second);
    }

    #[test]
    fn empty_directory_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        assert!(matches!(
            Corpus::build(dir.path()),
            Err(CorpusError::EmptyCorpus { .. })
        ));
    }
}
