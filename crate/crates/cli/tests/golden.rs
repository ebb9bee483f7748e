//! Runs every golden case and compares stdout, stderr and exit code with
//! the stored transcript. Set `UPDATE_GOLDEN=1` to rewrite the files.

mod common;

use std::fs;

use common::*;

#[test]
fn golden_transcripts() {
    let update = std::env::var("UPDATE_GOLDEN").is_ok_and(|v| v == "1");
    if update {
        fs::create_dir_all(EXPECTED).unwrap();
    }
    let mut failures = Vec::new();
    for (name, model, rest) in CASES {
        let got = transcript(&run_case(model, rest));
        let path = expected_path(name);
        if update {
            fs::write(&path, &got).unwrap();
            continue;
        }
        let want =
            fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
        if got != want {
            failures.push(format!("{name}:\n--- expected\n{want}--- got\n{got}"));
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn runs_are_byte_identical() {
    for (name, model, rest) in CASES {
        let a = transcript(&run_case(model, rest));
        let b = transcript(&run_case(model, rest));
        assert_eq!(a, b, "{name}");
    }
}

#[test]
fn exit_codes_follow_check_status() {
    for (name, model, rest) in CASES {
        let o = run_case(model, rest);
        if name.starts_with("error_") {
            assert_eq!(o.code, 2, "{name}");
            assert!(o.stdout.is_empty(), "{name}");
        } else {
            let failed =
                o.stdout.contains("result: FAIL") || o.stdout.contains("\"status\": \"fail\"");
            assert_eq!(o.code, i32::from(failed), "{name}");
        }
    }
}
