//! Pipeline driver: ingest a corpus, analyze originals, sample patches,
//! analyze the patched variants, and write the report artifacts. Also the
//! single-file lint entry point and the external-compiler validity adapter.

use crate::corpus::{wrap_snippet, Corpus, CorpusError};
use crate::report::{
    self, averages, build_census, build_matrix, delta, matrix_to_csv, CorpusSummary, DeltaRecord,
    RatesSummary, SamplingSummary, Summary,
};
use crate::rules::{self, RuleId, Violation};
use crate::sampler::{
    sample_patches_with, validity_rates, OutcomeRecord, PatchOutcome, PoolMode, ProxyValidity,
    SamplerConfig, SamplerError, ValidityCheck,
};
use crate::syntax::{InvalidReason, ParseStatus, SourceUnit, Validity};
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::Command;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValidityMode {
    Proxy,
    External,
}

/// Configuration of one `run` invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub corpus_dir: PathBuf,
    pub out_dir: PathBuf,
    pub seed: u64,
    pub n_line: usize,
    pub n_stmt: usize,
    pub validity_mode: ValidityMode,
    /// Command template with a `{file}` placeholder; exit 0 means valid.
    pub external_compiler_cmd: Option<String>,
    /// Worker threads for patch evaluation; 0 = library default.
    pub jobs: usize,
    pub pool: PoolMode,
}

impl RunConfig {
    pub fn new(corpus_dir: impl Into<PathBuf>, out_dir: impl Into<PathBuf>, seed: u64) -> Self {
        RunConfig {
            corpus_dir: corpus_dir.into(),
            out_dir: out_dir.into(),
            seed,
            n_line: 10_000,
            n_stmt: 10_000,
            validity_mode: ValidityMode::Proxy,
            external_compiler_cmd: None,
            jobs: 0,
            pool: PoolMode::GlobalPool,
        }
    }

    pub fn validate(&self) -> Result<(), RunError> {
        if self.validity_mode == ValidityMode::External {
            match &self.external_compiler_cmd {
                Some(cmd) if cmd.contains("{file}") => {}
                _ => return Err(RunError::BadConfig(
                    "external validity mode requires --compiler-cmd with a {file} placeholder"
                        .into(),
                )),
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error("{0}")]
    BadConfig(String),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Sampler(#[from] SamplerError),
    #[error("cannot write artifacts to {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

/// Validity decided by an external compiler command; exit status 0 is valid.
pub struct ExternalCompiler {
    pub cmd_template: String,
}

impl ValidityCheck for ExternalCompiler {
    fn check(&self, text: &str) -> Validity {
        let run = || -> std::io::Result<Validity> {
            let dir = tempfile::tempdir()?;
            let file = dir.path().join("Snippet.java");
            fs::write(&file, text)?;
            let cmd = self.cmd_template.replace("{file}", &file.to_string_lossy());
            let status = Command::new("sh").arg("-c").arg(&cmd).status()?;
            Ok(if status.success() {
                Validity::Valid
            } else {
                Validity::Invalid(InvalidReason::External {
                    detail: format!("exit status {}", status.code().unwrap_or(-1)),
                })
            })
        };
        run().unwrap_or_else(|e| {
            Validity::Invalid(InvalidReason::External {
                detail: format!("compiler invocation failed: {e}"),
            })
        })
    }
}

/// Everything `cmd_run` computed, for callers that want more than files.
pub struct RunOutput {
    pub summary: Summary,
    pub artifacts: Vec<PathBuf>,
}

/// The full pipeline. Writes manifest.json, originals_violations.jsonl,
/// patches.jsonl, matrix_valid.csv, matrix_invalid.csv, and summary.json
/// into the output directory, all-or-nothing.
pub fn cmd_run(config: &RunConfig) -> Result<RunOutput, RunError> {
    config.validate()?;
    let corpus = Corpus::build(&config.corpus_dir)?;
    let sampler_config = SamplerConfig {
        seed: config.seed,
        n_line: config.n_line,
        n_stmt: config.n_stmt,
        pool: config.pool,
    };

    let run_inner = || -> Result<(Vec<PatchOutcome>, Vec<Option<Vec<Violation>>>), RunError> {
        let original_violations: Vec<Option<Vec<Violation>>> = corpus
            .units
            .par_iter()
            .map(rules::analyze)
            .collect();
        let outcomes = match config.validity_mode {
            ValidityMode::Proxy => {
                sample_patches_with(&corpus.units, &sampler_config, &ProxyValidity)?
            }
            ValidityMode::External => {
                let checker = ExternalCompiler {
                    cmd_template: config
                        .external_compiler_cmd
                        .clone()
                        .expect("validated above"),
                };
                sample_patches_with(&corpus.units, &sampler_config, &checker)?
            }
        };
        Ok((outcomes, original_violations))
    };
    let (outcomes, original_violations) = if config.jobs > 0 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| RunError::BadConfig(format!("cannot build thread pool: {e}")))?;
        pool.install(run_inner)?
    } else {
        run_inner()?
    };

    // per-snippet and per-rule original tallies
    let mut per_snippet: BTreeMap<String, usize> = BTreeMap::new();
    let mut per_rule: BTreeMap<RuleId, u64> = BTreeMap::new();
    for (unit, violations) in corpus.units.iter().zip(&original_violations) {
        let violations = violations.as_ref().expect("accepted units parse");
        per_snippet.insert(unit.snippet_id.clone(), violations.len());
        for v in violations {
            *per_rule.entry(v.rule).or_insert(0) += 1;
        }
    }

    let by_id: HashMap<&str, &SourceUnit> = corpus
        .units
        .iter()
        .map(|u| (u.snippet_id.as_str(), u))
        .collect();
    let originals_by_id: HashMap<&str, &[Violation]> = corpus
        .units
        .iter()
        .zip(&original_violations)
        .map(|(u, v)| (u.snippet_id.as_str(), v.as_deref().unwrap_or(&[])))
        .collect();

    let records: Vec<DeltaRecord> = outcomes
        .iter()
        .map(|o| delta(originals_by_id[o.patch.snippet_id.as_str()], o))
        .collect();
    let matrix = build_matrix(&records, &per_rule);
    let census = build_census(&records, &outcomes, &by_id);
    let rates = validity_rates(&outcomes);
    let avgs = averages(&per_snippet, &records);

    let drawn = config.n_line + config.n_stmt;
    let unanalyzable = outcomes.iter().filter(|o| o.violations.is_none()).count() as u64;
    let summary = Summary {
        ruleset: RuleId::RULESET,
        partition_note: report::PARTITION_NOTE,
        corpus: CorpusSummary {
            accepted_files: corpus.manifest.counts.accepted_files,
            accepted_methods: corpus.manifest.counts.accepted_methods,
            rejected_files: corpus.manifest.rejected.len(),
            original_violations: per_rule.values().sum(),
            files_with_violations: per_snippet.values().filter(|&&n| n > 0).count() as u64,
        },
        sampling: SamplingSummary {
            seed: config.seed,
            n_line: config.n_line,
            n_stmt: config.n_stmt,
            drawn,
            retained: outcomes.len(),
            duplicates_discarded: drawn.saturating_sub(outcomes.len()),
            unanalyzable,
        },
        rates: RatesSummary::from(rates),
        census,
        averages: avgs,
    };

    // artifact contents
    let manifest_json = corpus.manifest.to_json();
    let mut originals_jsonl = String::new();
    for (unit, violations) in corpus.units.iter().zip(&original_violations) {
        let record = serde_json::json!({
            "snippet_id": unit.snippet_id,
            "violations": violations.as_ref().expect("accepted units parse"),
        });
        originals_jsonl.push_str(&record.to_string());
        originals_jsonl.push('\n');
    }
    let mut patches_jsonl = String::new();
    for o in &outcomes {
        patches_jsonl.push_str(&OutcomeRecord::from_outcome(o).to_json_line());
        patches_jsonl.push('\n');
    }
    let matrix_valid_csv = matrix_to_csv(&matrix, &matrix.valid);
    let matrix_invalid_csv = matrix_to_csv(&matrix, &matrix.invalid);
    let mut summary_json =
        serde_json::to_string_pretty(&summary).expect("summary serialization");
    summary_json.push('\n');

    let artifacts = write_artifacts(
        &config.out_dir,
        &[
            ("manifest.json", manifest_json.as_str()),
            ("originals_violations.jsonl", originals_jsonl.as_str()),
            ("patches.jsonl", patches_jsonl.as_str()),
            ("matrix_valid.csv", matrix_valid_csv.as_str()),
            ("matrix_invalid.csv", matrix_invalid_csv.as_str()),
            ("summary.json", summary_json.as_str()),
        ],
    )?;

    Ok(RunOutput { summary, artifacts })
}

/// Write every artifact to a temp file first, then rename them all; an
/// interrupted or failed run leaves no half-written artifact behind.
fn write_artifacts(out_dir: &Path, files: &[(&str, &str)]) -> Result<Vec<PathBuf>, RunError> {
    let io_err = |path: &Path, source: std::io::Error| RunError::Io {
        path: path.to_path_buf(),
        source,
    };
    fs::create_dir_all(out_dir).map_err(|e| io_err(out_dir, e))?;
    let mut temps: Vec<(PathBuf, PathBuf)> = Vec::new();
    let cleanup = |temps: &[(PathBuf, PathBuf)]| {
        for (tmp, _) in temps {
            let _ = fs::remove_file(tmp);
        }
    };
    for (name, content) in files {
        let tmp = out_dir.join(format!(".tmp_{name}"));
        let result = fs::File::create(&tmp).and_then(|mut f| f.write_all(content.as_bytes()));
        if let Err(e) = result {
            cleanup(&temps);
            let _ = fs::remove_file(&tmp);
            return Err(io_err(&tmp, e));
        }
        temps.push((tmp, out_dir.join(name)));
    }
    let mut written = Vec::new();
    for (tmp, target) in &temps {
        if let Err(e) = fs::rename(tmp, target) {
            cleanup(&temps);
            return Err(io_err(target, e));
        }
        written.push(target.clone());
    }
    Ok(written)
}

#[derive(Debug, Error)]
pub enum AnalyzeError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}:{column}: parse failed: {reason}")]
    Parse {
        path: PathBuf,
        line: u32,
        column: u32,
        reason: String,
    },
}

/// Lint one file. Returns violations with line numbers mapped back to the
/// raw file's coordinates (undoing the wrapper offset).
pub fn cmd_analyze(path: &Path) -> Result<Vec<Violation>, AnalyzeError> {
    let raw = fs::read_to_string(path).map_err(|source| AnalyzeError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let id = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("snippet");
    let snippet = wrap_snippet(&raw, id).map_err(|_| AnalyzeError::Parse {
        path: path.to_path_buf(),
        line: 1,
        column: 1,
        reason: "file is empty or whitespace-only".into(),
    })?;
    let unit = SourceUnit::parse(id, snippet.wrapped_text.clone());
    let map_line = |line: u32| line.saturating_sub(snippet.line_offset).max(1);
    match &unit.parse_status {
        ParseStatus::Failed {
            reason,
            line,
            column,
            ..
        } => Err(AnalyzeError::Parse {
            path: path.to_path_buf(),
            line: map_line(*line),
            column: *column,
            reason: reason.clone(),
        }),
        ParseStatus::Ok => {
            let mut violations = rules::analyze(&unit).expect("parse status checked");
            for v in &mut violations {
                v.line = map_line(v.line);
            }
            Ok(violations)
        }
    }
}
