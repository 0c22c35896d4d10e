#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn sbrauer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sbrauer"))
        .args(args)
        .current_dir(fixtures())
        .output()
        .expect("binary runs")
}

/// Documented invocations and the file holding their expected stdout.
pub const EXAMPLES: &[(&[&str], &str)] = &[
    (&["homdim", "--sigma", "2", "--n", "4", "--m", "0"], "homdim.json"),
    (&["ext", "--sigma", "2", "--i", "0", "--lambda", "2,1", "--mu", "2,1"], "ext.json"),
    (&["shift", "--lambda", "2", "--n", "1"], "shift.json"),
    (&["mult", "--sigma", "2", "--lambda", "2,2", "--mu", "2"], "mult.json"),
    (&["compose", "--in", "compose_input.json"], "compose.json"),
    (&["traceless", "--sigma", "2", "--rank", "5", "--n", "3", "--lambda", "1,1,1", "--seed", "7"], "traceless.json"),
    (&["stab", "check", "--sigma", "3", "--rank", "3", "--seed", "1", "--samples", "20"], "stab.json"),
    (&["oracle", "step1", "--sigma", "2|1", "--max", "3"], "oracle_step1.json"),
];

/// Runs every example twice; returns the first mismatch.
pub fn check_examples() -> Result<usize, String> {
    for (args, fixture) in EXAMPLES {
        let expected = std::fs::read(fixtures().join(fixture)).map_err(|e| format!("{fixture}: {e}"))?;
        let first = sbrauer(args);
        let second = sbrauer(args);
        if !first.status.success() {
            return Err(format!("{args:?} failed: {}", String::from_utf8_lossy(&first.stderr)));
        }
        if first.stdout != second.stdout {
            return Err(format!("{args:?} differs between runs"));
        }
        if first.stdout != expected {
            return Err(format!("{args:?} drifted from {fixture}"));
        }
    }
    Ok(EXAMPLES.len())
}
