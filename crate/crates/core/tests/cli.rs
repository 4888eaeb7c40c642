use std::process::Command;

use classical_pieri::verify::SuiteReport;
use classical_pieri::RepRingElement;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_classical-pieri")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn documented_invocations() {
    let (code, out) = run(&["tensor", "--group", "sp", "--n", "1", "--mu", "[1]", "--kind", "sym", "--r", "2"]);
    assert_eq!((code, out.trim()), (0, "{[1]: 1, [3]: 1}"));
    let (code, out) = run(&["modify", "--group", "o", "--N", "2", "--lambda", "[2,2]"]);
    assert_eq!((code, out.trim()), (0, "-[2]"));
    let (code, out) = run(&["count", "--variant", "burrill1", "--k", "3", "--n", "1", "--m", "1", "--side", "both"]);
    assert_eq!((code, out.trim()), (0, "a=2, b=2"));
    let (code, out) = run(&["--json", "modify", "--group", "o", "--N", "2", "--lambda", "[2,2]"]);
    assert_eq!((code, out.trim()), (0, r#"{"term":{"sign":-1,"label":[2]}}"#));
}

#[test]
fn json_outputs_parse() {
    let (code, out) = run(&["--json", "tensor", "--group", "so", "--N", "5", "--mu", "[1,1]", "--kind", "ext", "--r", "2"]);
    assert_eq!(code, 0);
    let elem: RepRingElement = serde_json::from_str(&out).unwrap();
    assert_eq!(serde_json::to_string(&elem).unwrap(), out.trim());
    let (code, out) = run(&["--json", "count", "--variant", "main5", "--alpha", "[1,1]", "--n", "1", "--m", "0"]);
    assert_eq!((code, out.trim()), (0, r#"{"a":2,"b":2}"#));
    let (code, out) = run(&["--json", "lr", "--mu", "[2,1]", "--nu", "[2,1]", "--lambda", "[3,2,1]"]);
    assert_eq!((code, out.trim()), (0, r#"{"coefficient":2}"#));
}

#[test]
fn verify_reports_round_trip() {
    let (code, out) = run(&["--json", "verify", "standard", "--max-size", "3", "--max-rank", "2"]);
    assert_eq!(code, 0);
    let report: SuiteReport = serde_json::from_str(&out).unwrap();
    assert!(report.passed);
    assert_eq!(report.to_json(), out.trim_end());
    let (code, out) = run(&["--json", "verify", "all", "--max-size", "2", "--max-r", "2", "--max-rank", "1"]);
    assert_eq!(code, 0);
    let reports: Vec<SuiteReport> = serde_json::from_str(&out).unwrap();
    assert_eq!(reports.len(), 11);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["--version"]).0, 0);
    assert_eq!(run(&["pieri", "--group", "sp", "--n", "1", "--mu", "[1,1]", "--r", "1"]).0, 1);
    assert_eq!(run(&["pieri", "--group", "sp", "--n", "2", "--mu", "[1,x]", "--r", "1"]).0, 1);
    assert_eq!(run(&["tensor", "--group", "so", "--N", "1", "--mu", "[]", "--kind", "sym", "--r", "1"]).0, 1);
    assert_eq!(run(&["verify", "bogus"]).0, 1);
    assert_eq!(run(&["count", "--variant", "main4", "--alpha", "[1]", "--n", "1", "--m", "3"]).0, 1);
}
