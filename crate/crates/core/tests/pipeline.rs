//! End-to-end pipeline tests: corpus manifest fixture, artifact determinism,
//! failure atomicity, the external-compiler adapter, and the CLI contract.

use snipforge::cli::{cmd_run, RunConfig, ValidityMode};
use snipforge::corpus::Corpus;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

fn fixture(path: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(path)
}

#[test]
fn mini40_manifest_matches_hand_prepared_expectation() {
    let corpus = Corpus::build(&fixture("mini40")).unwrap();
    let actual: serde_json::Value =
        serde_json::from_str(&corpus.manifest.to_json()).unwrap();
    let expected: serde_json::Value = serde_json::from_str(
        &fs::read_to_string(fixture("mini40/expected_manifest.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(actual, expected);
}

#[test]
fn bundled_corpus_originals_are_valid_under_the_proxy() {
    for corpus_dir in ["corpus100", "cleaning10"] {
        let corpus = Corpus::build(&fixture(corpus_dir)).unwrap();
        for unit in &corpus.units {
            let v = snipforge::syntax::check_validity(&unit.text);
            assert!(
                v.is_valid(),
                "{corpus_dir}/{}: {:?}",
                unit.snippet_id,
                v.reason()
            );
        }
    }
}

#[test]
fn mini40_rebuild_is_byte_identical() {
    let a = Corpus::build(&fixture("mini40")).unwrap().manifest.to_json();
    let b = Corpus::build(&fixture("mini40")).unwrap().manifest.to_json();
    assert_eq!(a, b);
}

fn run_into(out: &Path, jobs: usize, seed: u64) -> snipforge::cli::RunOutput {
    let mut config = RunConfig::new(fixture("cleaning10"), out, seed);
    config.n_line = 150;
    config.n_stmt = 150;
    config.jobs = jobs;
    cmd_run(&config).unwrap()
}

const ARTIFACTS: [&str; 6] = [
    "manifest.json",
    "originals_violations.jsonl",
    "patches.jsonl",
    "matrix_valid.csv",
    "matrix_invalid.csv",
    "summary.json",
];

#[test]
fn run_writes_all_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let output = run_into(dir.path(), 0, 7);
    assert_eq!(output.artifacts.len(), 6);
    for name in ARTIFACTS {
        let path = dir.path().join(name);
        assert!(path.is_file(), "{name} missing");
        assert!(fs::metadata(&path).unwrap().len() > 0, "{name} empty");
    }
    // no temp residue
    for entry in fs::read_dir(dir.path()).unwrap() {
        let name = entry.unwrap().file_name();
        assert!(
            !name.to_string_lossy().starts_with(".tmp_"),
            "leftover temp file {name:?}"
        );
    }
}

#[test]
fn artifacts_are_identical_across_job_counts() {
    let d1 = tempfile::tempdir().unwrap();
    let d4 = tempfile::tempdir().unwrap();
    run_into(d1.path(), 1, 7);
    run_into(d4.path(), 4, 7);
    for name in ARTIFACTS {
        let a = fs::read(d1.path().join(name)).unwrap();
        let b = fs::read(d4.path().join(name)).unwrap();
        assert_eq!(a, b, "{name} differs between --jobs 1 and --jobs 4");
    }
}

#[test]
fn different_seeds_give_different_patches() {
    let d1 = tempfile::tempdir().unwrap();
    let d2 = tempfile::tempdir().unwrap();
    run_into(d1.path(), 0, 7);
    run_into(d2.path(), 0, 8);
    let a = fs::read(d1.path().join("patches.jsonl")).unwrap();
    let b = fs::read(d2.path().join("patches.jsonl")).unwrap();
    assert_ne!(a, b);
}

#[test]
fn unwritable_out_dir_leaves_no_partial_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("blocker");
    fs::write(&blocker, "file, not a directory").unwrap();
    let out = blocker.join("nested");
    let mut config = RunConfig::new(fixture("cleaning10"), &out, 7);
    config.n_line = 10;
    config.n_stmt = 10;
    assert!(cmd_run(&config).is_err());
    assert!(!out.exists());
}

#[test]
fn external_stub_compiler_marks_everything_invalid() {
    let dir = tempfile::tempdir().unwrap();
    let mut config = RunConfig::new(fixture("cleaning10"), dir.path(), 3);
    config.n_line = 40;
    config.n_stmt = 40;
    config.validity_mode = ValidityMode::External;
    config.external_compiler_cmd = Some("false # {file}".into());
    let output = cmd_run(&config).unwrap();
    assert_eq!(output.summary.rates.line_counts[0], 0);
    assert_eq!(output.summary.rates.stmt_counts[0], 0);
    // only the invalid partition may hold files
    let valid_csv = fs::read_to_string(dir.path().join("matrix_valid.csv")).unwrap();
    assert!(valid_csv.contains("\n,patched_files_with_violations,0"));
    let patches = fs::read_to_string(dir.path().join("patches.jsonl")).unwrap();
    for line in patches.lines() {
        let record: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(record["validity"], "INVALID");
        assert!(record["invalid_reason"]
            .as_str()
            .unwrap()
            .starts_with("EXTERNAL"));
    }
}

#[test]
fn external_true_compiler_marks_everything_valid() {
    let dir = tempfile::tempdir().unwrap();
    let mut config = RunConfig::new(fixture("cleaning10"), dir.path(), 3);
    config.n_line = 20;
    config.n_stmt = 20;
    config.validity_mode = ValidityMode::External;
    config.external_compiler_cmd = Some("true # {file}".into());
    let output = cmd_run(&config).unwrap();
    assert_eq!(
        output.summary.rates.line_counts[0],
        output.summary.rates.line_counts[1]
    );
}

fn snipforge_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_snipforge"))
}

#[test]
fn cli_env_seed_overrides_flag() {
    let d_env = tempfile::tempdir().unwrap();
    let d_flag = tempfile::tempdir().unwrap();
    let status = snipforge_bin()
        .args(["run", "--corpus"])
        .arg(fixture("cleaning10"))
        .arg("--out")
        .arg(d_env.path())
        .args(["--seed", "7", "--n-line", "30", "--n-stmt", "30"])
        .env("SNIPFORGE_SEED", "123")
        .status()
        .unwrap();
    assert!(status.success());
    let status = snipforge_bin()
        .args(["run", "--corpus"])
        .arg(fixture("cleaning10"))
        .arg("--out")
        .arg(d_flag.path())
        .args(["--seed", "123", "--n-line", "30", "--n-stmt", "30"])
        .env_remove("SNIPFORGE_SEED")
        .status()
        .unwrap();
    assert!(status.success());
    let a = fs::read(d_env.path().join("patches.jsonl")).unwrap();
    let b = fs::read(d_flag.path().join("patches.jsonl")).unwrap();
    assert_eq!(a, b);
}

#[test]
fn cli_analyze_exit_codes_and_format() {
    // clean file: exit 0, no output
    let dir = tempfile::tempdir().unwrap();
    let clean = dir.path().join("clean.java");
    fs::write(&clean, "public class A { void m(){} }\n").unwrap();
    let out = snipforge_bin().arg("analyze").arg(&clean).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());

    // violating file: exit 2, `<file>:<line>: <rule>: <message>` lines
    let dirty = dir.path().join("dirty.java");
    fs::write(&dirty, "void m(int x) {\n    String s = \"\" + x;\n    use(s);\n}\n").unwrap();
    let out = snipforge_bin().arg("analyze").arg(&dirty).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let stdout = String::from_utf8(out.stdout).unwrap();
    let expected = format!(
        "{}:2: AddEmptyString: Do not add empty strings.\n",
        dirty.display()
    );
    assert_eq!(stdout, expected);

    // unparseable file: exit 1, location on stderr
    let broken = dir.path().join("broken.java");
    fs::write(&broken, "void m( {\n").unwrap();
    let out = snipforge_bin().arg("analyze").arg(&broken).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
}

#[test]
fn cli_run_fails_with_exit_1_on_missing_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let out = snipforge_bin()
        .args(["run", "--corpus"])
        .arg(dir.path().join("nope"))
        .arg("--out")
        .arg(dir.path().join("out"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
