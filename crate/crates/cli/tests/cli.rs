//! End-to-end tests of the `nervecheck` binary: exit codes, emitted
//! files, and the machine-readable report format.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use nervecheck::corpus::{constant_top, constant_top_self_law};
use nervecheck::double::transpose;
use nervecheck::io::{
    distributive_law_to_file, load_document, monad_to_file, save_document, Document, DocumentFile,
};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_nervecheck"))
}

fn tmp(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write_monad_fixture(name: &str) -> PathBuf {
    let path = tmp(name);
    let m = constant_top(3);
    save_document(&path, &DocumentFile::Monad(monad_to_file(&m))).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn validate_valid_monad_exits_zero() {
    let path = write_monad_fixture("valid.json");
    let out = bin().args(["validate"]).arg(&path).output().unwrap();
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.contains("overall: pass"), "{text}");
    assert!(text.contains("sha256="), "{text}");
}

#[test]
fn broken_mult_exits_one_and_names_the_object() {
    let path = tmp("broken.json");
    let mut m = constant_top(3);
    let x = m.base.objects[0].clone();
    let idx = m.base.identity[&x].clone();
    m.mult.insert(x.clone(), idx);
    save_document(&path, &DocumentFile::Monad(monad_to_file(&m))).unwrap();
    let out = bin().args(["validate"]).arg(&path).output().unwrap();
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(1), "{text}");
    assert!(text.contains("overall: fail"), "{text}");
    assert!(text.contains(&format!("`{}`", x.0)), "witness must name the object: {text}");
}

#[test]
fn malformed_file_exits_two() {
    let path = tmp("malformed.json");
    fs::write(&path, "{not json").unwrap();
    let out = bin().args(["validate"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn nerve_emits_expected_square_count() {
    let monad = write_monad_fixture("nerve-in.json");
    let emitted = tmp("nerve-out.json");
    let out = bin()
        .args(["nerve", "--theory", "kleisli", "--out"])
        .arg(&emitted)
        .arg(&monad)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let Document::DoubleCategory(dc) = load_document(&emitted).unwrap() else {
        panic!("expected a double-category document");
    };
    assert_eq!(dc.squares.len(), 36);
    // the emitted file validates on a second run
    let out = bin().args(["validate"]).arg(&emitted).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn transpose_round_trips() {
    let monad = write_monad_fixture("transpose-in.json");
    let plain = tmp("nerve-plain.json");
    let transposed = tmp("nerve-transposed.json");
    for (args, path) in [(vec![], &plain), (vec!["--transpose"], &transposed)] {
        let out = bin()
            .args(["nerve", "--theory", "embedding", "--out"])
            .arg(path)
            .args(args)
            .arg(&monad)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    }
    let Document::DoubleCategory(a) = load_document(&plain).unwrap() else { panic!() };
    let Document::DoubleCategory(b) = load_document(&transposed).unwrap() else { panic!() };
    assert!(transpose(&b).structurally_equal(&a));
    assert!(!a.structurally_equal(&b));
}

#[test]
fn machine_format_is_valid_json() {
    let monad = write_monad_fixture("machine.json");
    let out = bin()
        .args(["axioms", "--theory", "splitepi", "--format", "machine"])
        .arg(&monad)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], "nervecheck-report/1");
    assert_eq!(v["overall"], "pass");
    assert!(v["findings"].as_array().map(|a| !a.is_empty()).unwrap_or(false));
    assert!(v["inputs"][0]["sha256"].is_string());
}

#[test]
fn truncated_search_exits_three() {
    let monad = write_monad_fixture("tiny-bound.json");
    let out = bin()
        .args(["closure", "--theory", "embedding", "--bound", "3"])
        .arg(&monad)
        .output()
        .unwrap();
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(3), "{text}");
    assert!(text.contains("inconclusive"), "{text}");
}

#[test]
fn faithful_echoes_bound_and_passes() {
    let monad = write_monad_fixture("faithful.json");
    let out = bin()
        .args(["faithful", "--theory", "kleisli"])
        .arg(&monad)
        .arg(&monad)
        .output()
        .unwrap();
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.contains("bound 1000000"), "{text}");
    assert!(text.contains("faithfulness: pass"), "{text}");
}

#[test]
fn triple_builds_and_revalidates() {
    let law_path = tmp("law.json");
    let d = constant_top_self_law(3);
    save_document(&law_path, &DocumentFile::DistributiveLaw(distributive_law_to_file(&d))).unwrap();
    let emitted = tmp("triple-out.json");
    let out = bin()
        .args(["triple", "--theory1", "kleisli", "--theory2", "kleisli", "--out"])
        .arg(&emitted)
        .arg(&law_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let out = bin().args(["validate"]).arg(&emitted).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}
