//! End-to-end tests of the `nbound` binary: output contents, formats,
//! config files and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn nbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nbound"))
        .args(args)
        .env_remove("NBOUND_REL_TOL")
        .output()
        .expect("binary launches")
}

fn stdout(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).expect("stdout is utf-8")
}

fn stderr(out: &Output) -> &str {
    std::str::from_utf8(&out.stderr).expect("stderr is utf-8")
}

fn scratch_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("nbound-cli-{}-{name}", std::process::id()))
}

#[test]
fn bounds_reports_known_values_for_a_singular_well() {
    let out = nbound(&["bounds", "--kind", "hulthen", "--g", "2.5", "--format", "machine"]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    for line in [
        "exact.count = 2",
        "moment-upper.bound = 10",
        "half-wave-upper.bound = 5",
        "phase-upper.bound = 3",
        "phase-lower-singular.bound = 1",
        "sandwich_violation = false",
    ] {
        assert!(text.contains(line), "missing `{line}` in:\n{text}");
    }
    // Origin-anchored limits cannot apply to a -1/r shape.
    assert!(text.contains("ladder-upper: not applicable"));
}

#[test]
fn bounds_below_the_one_state_threshold_reports_zero() {
    let out = nbound(&["bounds", "--kind", "square-well", "--g", "0.5", "--format", "machine"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("exact.count = 0"), "{text}");
    assert!(text.contains("phase-upper.bound = 0"), "{text}");
}

#[test]
fn table1_matches_the_reference_exact_counts() {
    let out = nbound(&["table1", "--format", "csv"]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim_end().lines().collect();
    assert_eq!(lines.len(), 10, "header plus nine rows:\n{text}");
    assert!(lines[0].starts_with("alpha,g,N,"));
    let want_n = [2, 22, 221, 15, 147, 29, 293, 44, 440];
    for (line, want) in lines[1..].iter().zip(want_n) {
        let n: usize = line.split(',').nth(2).unwrap().parse().unwrap();
        assert_eq!(n, want, "row `{line}`");
    }
}

#[test]
fn sweep_emits_an_ordered_monotone_grid() {
    let out = nbound(&[
        "sweep", "--kind", "exponential", "--g-min", "1", "--g-max", "15", "--steps", "14",
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let lines: Vec<&str> = stdout(&out).trim_end().lines().collect();
    assert_eq!(lines.len(), 16, "header plus fifteen rows");
    let mut prev_g = 0.0;
    let mut prev_n = 0;
    for line in &lines[1..] {
        let mut fields = line.split(',');
        let g: f64 = fields.next().unwrap().parse().unwrap();
        let n: usize = fields.next().unwrap().parse().unwrap();
        assert!(g > prev_g, "grid not ascending at `{line}`");
        assert!(n >= prev_n, "count fell while deepening at `{line}`");
        (prev_g, prev_n) = (g, n);
    }
    assert_eq!(lines[1].split(',').nth(1).unwrap(), "0");
    assert_eq!(lines[15].split(',').nth(1).unwrap(), "9");
}

#[test]
fn kg_reduction_matches_the_equivalent_deeper_well() {
    // A flat scalar well of depth c reduces to a flat well of depth
    // 2mc + c²; for c = m = 1 that is the square well at g = √3.
    let reduced = nbound(&["kg", "--kind", "square-well", "--g", "1", "--mass", "1", "--format", "csv"]);
    let direct = nbound(&["bounds", "--kind", "square-well", "--g", "1.7320508075688772", "--format", "csv"]);
    assert!(reduced.status.success() && direct.status.success());
    // Same counts and same limit values; only the descriptor differs,
    // and the csv form carries no descriptor.
    assert_eq!(stdout(&reduced), stdout(&direct));
}

#[test]
fn config_file_is_equivalent_to_flags() {
    let path = scratch_path("hulthen.cfg");
    std::fs::write(&path, "# test well\nkind = hulthen\ng = 2.5\nR = 1\n").unwrap();
    let from_file = nbound(&["bounds", "--config", path.to_str().unwrap()]);
    let from_flags = nbound(&["bounds", "--kind", "hulthen", "--g", "2.5"]);
    std::fs::remove_file(&path).ok();
    assert!(from_file.status.success());
    assert_eq!(stdout(&from_file), stdout(&from_flags));
}

#[test]
fn tabulated_config_runs_end_to_end() {
    let path = scratch_path("table.cfg");
    std::fs::write(
        &path,
        "kind = tabulated\n0.0 -25.0\n1.0 -25.0\n1.0 -4.0\n2.5 0.0\n",
    )
    .unwrap();
    let out = nbound(&["bounds", "--config", path.to_str().unwrap(), "--format", "machine"]);
    std::fs::remove_file(&path).ok();
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("exact.count = 2"), "{}", stdout(&out));
}

#[test]
fn output_flag_writes_the_same_bytes() {
    let path = scratch_path("report.txt");
    let to_file = nbound(&[
        "bounds", "--kind", "poschl-teller", "--g", "4",
        "--output", path.to_str().unwrap(),
    ]);
    assert!(to_file.status.success());
    assert!(stdout(&to_file).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    let direct = nbound(&["bounds", "--kind", "poschl-teller", "--g", "4"]);
    assert_eq!(written, stdout(&direct));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let first = nbound(&["table1", "--format", "csv"]);
    let second = nbound(&["table1", "--format", "csv"]);
    assert_eq!(stdout(&first), stdout(&second));
}

#[test]
fn invalid_input_exits_with_code_two() {
    let cases: &[&[&str]] = &[
        &["bounds", "--kind", "morse", "--g", "1"],
        &["bounds", "--kind", "inverse-square", "--g", "10"],
        &["bounds", "--kind", "hulthen", "--g", "2.5", "--alpha", "3"],
        &["bounds", "--g", "5"],
        &["bounds"],
        &["bounds", "--kind", "hulthen", "--g", "-2"],
        &["sweep", "--kind", "yukawa", "--g-min", "5", "--g-max", "2"],
        &["bounds", "--config", "/nonexistent/path.cfg"],
        &["bounds", "--kind", "hulthen", "--g", "2.5", "--format", "yaml"],
    ];
    for args in cases {
        let out = nbound(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}: {}", stderr(&out));
    }
}

#[test]
fn config_errors_carry_line_numbers() {
    let path = scratch_path("bad.cfg");
    std::fs::write(&path, "kind = hulthen\ndepth = 3\n").unwrap();
    let out = nbound(&["bounds", "--config", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"), "stderr: {}", stderr(&out));
}

#[test]
fn bad_tolerance_override_exits_with_code_two() {
    let out = Command::new(env!("CARGO_BIN_EXE_nbound"))
        .args(["bounds", "--kind", "hulthen", "--g", "2.5"])
        .env("NBOUND_REL_TOL", "fast")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = Command::new(env!("CARGO_BIN_EXE_nbound"))
        .args(["bounds", "--kind", "hulthen", "--g", "2.5"])
        .env("NBOUND_REL_TOL", "1e-8")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn help_lists_every_subcommand() {
    let out = nbound(&["--help"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for sub in ["bounds", "sweep", "table1", "kg"] {
        assert!(text.contains(sub), "help missing `{sub}`:\n{text}");
    }
}
