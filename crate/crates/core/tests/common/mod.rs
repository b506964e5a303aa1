#![allow(dead_code)]

pub mod oracle;

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn rskrev(args: &[&str]) -> Output {
    rskrev_in(Path::new(env!("CARGO_MANIFEST_DIR")), args)
}

pub fn rskrev_in(dir: &Path, args: &[&str]) -> Output {
    let out = Command::new(env!("CARGO_BIN_EXE_rskrev"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("spawn rskrev");
    Output {
        code: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub fn golden_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

pub fn golden(name: &str) -> String {
    std::fs::read_to_string(golden_path(name)).unwrap()
}

/// `(golden file, CLI arguments)` for every worked example with JSON output.
pub const GOLDEN_CASES: &[(&str, &[&str])] = &[
    ("rsk_52314.json", &["--json", "rsk", "52314"]),
    (
        "evac_135_2_4.json",
        &["--json", "evac", "[[1,3,5],[2],[4]]"],
    ),
    (
        "phi_1_2_52314.json",
        &["--json", "phi", "--a", "1", "--b", "2", "52314"],
    ),
    (
        "phi_1_7_52314.json",
        &["--json", "phi", "--a", "1", "--b", "7", "52314"],
    ),
    (
        "phi_5_3_52314.json",
        &["--json", "phi", "--a", "5", "--b", "3", "52314"],
    ),
    (
        "phi_3_5_52314.json",
        &["--json", "phi", "--a", "3", "--b", "5", "52314"],
    ),
    ("theta_231.json", &["--json", "theta", "231"]),
    ("theta_52314.json", &["--json", "theta", "52314"]),
    ("theta_1634257.json", &["--json", "theta", "1634257"]),
];
