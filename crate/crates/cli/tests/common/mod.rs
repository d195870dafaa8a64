#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct GoldenCase {
    pub name: String,
    pub exit: i32,
    pub args: Vec<String>,
}

pub fn crate_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_path(name: &str) -> PathBuf {
    crate_dir().join("tests/golden").join(name)
}

pub fn golden_cases() -> Vec<GoldenCase> {
    let text = std::fs::read_to_string(golden_path("manifest.txt")).expect("golden manifest");
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut words = l.split_whitespace();
            let name = words.next().expect("name").to_string();
            let exit = words.next().and_then(|w| w.parse().ok()).expect("exit code");
            GoldenCase { name, exit, args: words.map(String::from).collect() }
        })
        .collect()
}

/// Runs the binary from the crate root; returns exit code, stdout, stderr.
pub fn weyl(args: &[impl AsRef<str>]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_weyl"))
        .args(args.iter().map(AsRef::as_ref))
        .current_dir(crate_dir())
        .output()
        .expect("spawn weyl");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}
