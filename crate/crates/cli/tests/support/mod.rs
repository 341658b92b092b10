#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use brokeneyes::fixtures::synthetic_scene;

pub fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_brokeneyes"));
    cmd.env_remove("BROKENEYES_THREADS");
    cmd
}

pub fn run(cwd: &Path, args: &[&str]) -> Output {
    bin().current_dir(cwd).args(args).output().expect("binary runs")
}

pub fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

pub fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

/// Writes `n` distinct scenes of the given size as PNGs named `<prefix>_NNNN.png`.
pub fn write_scenes(dir: &Path, prefix: &str, n: usize, width: u32, height: u32, seed_base: u64) -> Vec<PathBuf> {
    std::fs::create_dir_all(dir).unwrap();
    (0..n)
        .map(|i| {
            let path = dir.join(format!("{prefix}_{i:04}.png"));
            synthetic_scene(width, height, seed_base + i as u64).save_png(&path).unwrap();
            path
        })
        .collect()
}

/// Every file under `root`, keyed by its relative path.
pub fn snapshot(root: &Path) -> BTreeMap<PathBuf, Vec<u8>> {
    let mut files = BTreeMap::new();
    let mut stack = vec![root.to_path_buf()];
    while let Some(dir) = stack.pop() {
        for entry in std::fs::read_dir(&dir).unwrap() {
            let path = entry.unwrap().path();
            if path.is_dir() {
                stack.push(path);
            } else {
                let rel = path.strip_prefix(root).unwrap().to_path_buf();
                files.insert(rel, std::fs::read(&path).unwrap());
            }
        }
    }
    files
}
