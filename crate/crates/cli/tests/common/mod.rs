#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub const GOLDEN: [&str; 3] = ["nulen", "cycle", "adictop"];

pub fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

pub fn ordlen(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ordlen"));
    cmd.args(args).env_remove("ORDLEN_CAP");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

pub fn run_script(script: &str, flags: &[&str], env: &[(&str, &str)]) -> Output {
    use std::hash::{Hash, Hasher};
    let mut h = std::collections::hash_map::DefaultHasher::new();
    script.hash(&mut h);
    let dir = std::env::temp_dir().join(format!("ordlen-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(format!("{:x}.ol", h.finish()));
    std::fs::write(&path, script).unwrap();
    let mut args = flags.to_vec();
    args.extend(["run", path.to_str().unwrap()]);
    ordlen(&args, env)
}

/// Runs a golden script with `flags` and compares against the file with
/// extension `ext`.
pub fn golden_mismatch(name: &str, flags: &[&str], ext: &str) -> Option<String> {
    let script = golden(&format!("{name}.ol"));
    let mut args = flags.to_vec();
    args.extend(["run", script.to_str().unwrap()]);
    let out = ordlen(&args, &[]);
    let expected = std::fs::read_to_string(golden(&format!("{name}.{ext}"))).unwrap();
    let got = String::from_utf8_lossy(&out.stdout);
    if !out.status.success() || got != expected {
        Some(format!("{name}.{ext}: expected {expected:?}, got {got:?}"))
    } else {
        None
    }
}

/// `(script, flags, env, exit code)`.
pub type Case = (
    &'static str,
    &'static [&'static str],
    &'static [(&'static str, &'static str)],
    i32,
);

pub const ERROR_CORPUS: &[Case] = &[
    ("ring x\nI = x^\n", &[], &[], 1),
    ("ring x\nI = x @ x\n", &[], &[], 1),
    ("ring x\nfrobnicate I\n", &[], &[], 1),
    ("ring x\nI = x\nlen\n", &[], &[], 1),
    ("ring x\nI = x\niopen I I I\n", &[], &[], 1),
    ("len I\n", &[], &[], 2),
    ("ring x\nI = y\n", &[], &[], 2),
    ("ring x, y\nI = x\nlen J\n", &[], &[], 2),
    ("ring x, y\nI = x\nJ = x^2\nlen I\nlen J/I\n", &[], &[], 2),
    ("ring x, y\nI = x^2\nK = y\nopen I K\n", &[], &[], 2),
    ("ring x, y\nI = 1\nhomvanishes I I\n", &[], &[], 2),
    ("ring x, y\nI = x^2, x*y\nsubmodlen I w^3\n", &[], &[], 2),
    (
        "ring x, y\nI = x^2, x*y, y^2\neopen I\n",
        &[],
        &[("ORDLEN_CAP", "1")],
        3,
    ),
    ("ring x, y, z\nI = x\n", &["--max-vars", "2"], &[], 3),
];
