use std::process::{Command, Output};

fn kks(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kks")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn conjectures_pass_and_write_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = kks(&["check", "conjectures", "--nmax", "4", "--json", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("16 passed, 0 failed, 0 skipped"));
    let text = std::fs::read_to_string(&path).unwrap();
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    let reports = value.as_array().unwrap();
    assert_eq!(reports.len(), 16);
    for r in reports {
        for key in ["id", "params", "status", "lhs", "rhs", "millis"] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
        assert_eq!(r["status"], "pass");
    }
    assert!(reports.iter().any(|r| r["lhs"] == "3584/1"));
}

#[test]
fn single_suites_with_params() {
    let out = kks(&["check", "main-d", "--params", "m=3,l=3,a=2", "--nmax", "4"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("value=530712"));
    let out = kks(&["check", "epilogue", "--params", "s=1,r=0", "--nmax", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("skipped: needs r >= 1"));
    let out = kks(&["check", "kappa", "--params", "kappa=1", "--nmax", "4", "--quiet"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let out = kks(&["check", "series", "--params", "m=1,l=1,a=0"]);
    assert!(out.status.success());
}

#[test]
fn table_prints_exact_values() {
    let out = kks(&["table", "DF", "--nmax", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("4\t3328"));
    assert!(text.contains("5\t678912"));
}

#[test]
fn render_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.svg");
    let out = kks(&["render", "--type", "1", "--s", "1", "--r", "1", "--n", "4", "--tiling", "5", "--svg", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("44 cells"));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert_eq!(svg.matches("<rect").count(), 44 + 22);
}

#[test]
fn cofactors_and_bench() {
    let out = kks(&["cofactors", "--matrix", "WD33", "--n", "5"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("c[4] = 1"));
    let out = kks(&["bench", "--det", "modular", "--n", "12"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("WD33 n=12"));
}

#[test]
fn errors_exit_nonzero() {
    assert_eq!(kks(&["check", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(kks(&["table", "DF", "--params", "x"]).status.code(), Some(2));
    assert!(!kks(&["render", "--type", "3", "--s", "1", "--r", "1", "--n", "1"]).status.success());
}
