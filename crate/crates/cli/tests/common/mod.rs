//! Golden cases shared by the golden and acceptance test targets.

#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};

use gradedq_cli::{run_cli, Outcome};

pub const MODELS: &str = "tests/golden/models";
pub const EXPECTED: &str = "tests/golden/expected";

/// (case name, model file or "", arguments after the model)
pub const CASES: &[(&str, &str, &[&str])] = &[
    ("r13_check_q", "r13.gq", &["check-q", "Q"]),
    (
        "r13_check_q_by_degree",
        "r13.gq",
        &["check-q", "Q", "--by-degree"],
    ),
    ("r13_check_qs", "r13.gq", &["check-qs", "Q", "S", "G"]),
    ("r13_double", "r13.gq", &["double", "Q", "S", "G"]),
    (
        "r13_sd_flat",
        "r13.gq",
        &["sd", "Q", "S", "G", "--names", "p,pi1,pi2,pi3,q,k1,k2,k3"],
    ),
    (
        "r13_sd_connection",
        "r13.gq",
        &[
            "sd",
            "Q",
            "S",
            "G",
            "--connection",
            "C",
            "--names",
            "p,pi1,pi2,pi3,q,k1,k2,k3",
        ],
    ),
    ("r13_print", "r13.gq", &["print"]),
    ("susy_check_qp", "susy.gq", &["check-qp", "Q", "P", "G"]),
    ("susy_odd_double", "susy.gq", &["odd-double", "Q", "P", "G"]),
    (
        "susy_odd_double_json",
        "susy.gq",
        &["--json", "odd-double", "Q", "P", "G"],
    ),
    ("susy_check_tensor", "susy.gq", &["check-tensor", "P"]),
    (
        "aff_bialgebra",
        "bialgebras.gq",
        &["check-bialgebra", "aff", "aff_b"],
    ),
    ("aff_double", "bialgebras.gq", &["double", "aff", "aff_b"]),
    (
        "heis_double",
        "bialgebras.gq",
        &["double", "heis", "heis_b"],
    ),
    (
        "heis_bad_double",
        "bialgebras.gq",
        &["double", "heis", "heis_bad"],
    ),
    (
        "sl2_yang_baxter",
        "bialgebras.gq",
        &["yang-baxter", "sl2", "sl2_b"],
    ),
    ("q1_odd_double", "odd.gq", &["odd-double", "q1", "q1_dual"]),
    (
        "gl11_odd_double",
        "odd.gq",
        &["odd-double", "gl11", "gl11_p"],
    ),
    (
        "q1_report",
        "odd.gq",
        &["algebra-report", "q1", "--cobracket"],
    ),
    ("q2_report", "", &["algebra-report", "q(2)", "--cobracket"]),
    ("q3_report", "", &["algebra-report", "q(3)", "--cobracket"]),
    ("duality_even", "duality.gq", &["duality", "even", "E"]),
    ("duality_odd", "duality.gq", &["duality", "odd", "E"]),
    (
        "linf_by_degree",
        "linf.gq",
        &["check-q", "Q", "--by-degree"],
    ),
    (
        "linf_q23_by_degree",
        "linf.gq",
        &["check-q", "Q23", "--by-degree"],
    ),
    ("nilpotent_square_print", "nilpotent_square.gq", &["print"]),
    (
        "error_missing_semicolon",
        "missing_semicolon.gq",
        &["print"],
    ),
    ("error_parity", "parity_error.gq", &["print"]),
    ("error_unknown_variable", "unknown_variable.gq", &["print"]),
    ("error_usage", "r13.gq", &["check-q"]),
];

pub fn args(model: &str, rest: &[&str]) -> Vec<String> {
    let mut a = vec!["gradedq".to_string()];
    if !model.is_empty() {
        a.push("-m".into());
        a.push(format!("{MODELS}/{model}"));
    }
    a.extend(rest.iter().map(|s| s.to_string()));
    a
}

pub fn run_case(model: &str, rest: &[&str]) -> Outcome {
    run_cli(args(model, rest))
}

/// Serialized outcome as stored in the expected files.
pub fn transcript(o: &Outcome) -> String {
    format!(
        "exit: {}\n--- stdout\n{}--- stderr\n{}",
        o.code, o.stdout, o.stderr
    )
}

pub fn expected_path(name: &str) -> PathBuf {
    Path::new(EXPECTED).join(format!("{name}.txt"))
}

/// Names of cases whose transcript differs from the stored file, or
/// from a second run.
pub fn golden_mismatches() -> Vec<String> {
    let mut bad = Vec::new();
    for (name, model, rest) in CASES {
        let first = transcript(&run_case(model, rest));
        let second = transcript(&run_case(model, rest));
        let stored = fs::read_to_string(expected_path(name)).unwrap_or_default();
        if first != second || first != stored {
            bad.push(name.to_string());
        }
    }
    bad
}
