use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn qrlab(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qrlab"))
        .args(args)
        .env("QRLAB_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn without_timings(mut doc: Value) -> Value {
    for step in doc["steps"].as_array_mut().unwrap() {
        step.as_object_mut().unwrap().remove("seconds");
    }
    doc
}

#[test]
fn hamming_code_summary() {
    let dir = tempfile::tempdir().unwrap();
    let o = qrlab(dir.path(), &["code", "7"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("[7,4,3]"), "{text}");
    assert!(text.contains("g = x^3+x+1"), "{text}");
}

#[test]
fn unsupported_prime_fails_with_message() {
    let dir = tempfile::tempdir().unwrap();
    let o = qrlab(dir.path(), &["code", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unsupported parameter"));
}

#[test]
fn weights_and_dumped_words() {
    let dir = tempfile::tempdir().unwrap();
    let o = qrlab(dir.path(), &["code", "41", "--extended", "--weights"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("[ <0, 1>, <10, 1722>, <12, 10619>,"));
    let o = qrlab(
        dir.path(),
        &["code", "41", "--extended", "--dump-words", "10"],
    );
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1722);
    assert!(text
        .lines()
        .all(|l| l.len() == 42 && l.matches('1').count() == 10));
}

#[test]
fn design_and_group_commands_on_d() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let o = qrlab(
        &cache,
        &[
            "code",
            "41",
            "--extended",
            "--dump-words",
            "10",
            "--format",
            "design",
        ],
    );
    let d_file = dir.path().join("d.txt");
    std::fs::write(&d_file, &o.stdout).unwrap();
    let d = d_file.to_str().unwrap();

    let o = qrlab(&cache, &["design", d, "--verify", "3"]);
    assert_eq!(stdout(&o).trim(), "3-(42,10,18), b=1722, r=410");

    let der = dir.path().join("der.txt");
    let o = qrlab(
        &cache,
        &["design", d, "--derived", "inf", "-o", der.to_str().unwrap()],
    );
    assert!(o.status.success());
    let o = qrlab(&cache, &["design", der.to_str().unwrap(), "--verify", "2"]);
    assert!(stdout(&o).starts_with("2-(41,9,18)"));

    let o = qrlab(&cache, &["design", d, "--span"]);
    assert_eq!(
        stdout(&o).trim(),
        "dimension 21, equals extended QR(41): yes"
    );

    let o = qrlab(&cache, &["group", "--aut", d, "--orbits", "3"]);
    assert!(stdout(&o).starts_with("2 orbits: 5740, 5740\n"));
    let o = qrlab(&cache, &["group", "--psl", "41", "--order"]);
    assert_eq!(stdout(&o).trim(), "34440");
    let o = qrlab(&cache, &["group", "--psl", "3", "--order"]);
    assert_eq!(stdout(&o).trim(), "12");
}

#[test]
fn malformed_design_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.txt");
    std::fs::write(&file, "5 2 2\n0 1\n3 3\n").unwrap();
    let o = qrlab(
        dir.path(),
        &["design", file.to_str().unwrap(), "--verify", "2"],
    );
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn reproduce_json_roundtrips_and_is_stable() {
    let dir = tempfile::tempdir().unwrap();
    let cold = qrlab(dir.path(), &["reproduce", "--json"]);
    assert!(
        cold.status.success(),
        "{}",
        String::from_utf8_lossy(&cold.stderr)
    );
    let warm = qrlab(dir.path(), &["reproduce", "--json"]);
    assert!(warm.status.success());

    let doc: Value = serde_json::from_slice(&cold.stdout).unwrap();
    assert_eq!(doc["passed"], Value::Bool(true));
    let reparsed: Value = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
    assert_eq!(reparsed, doc);
    let warm_doc: Value = serde_json::from_slice(&warm.stdout).unwrap();
    assert_eq!(without_timings(doc.clone()), without_timings(warm_doc));

    let names: Vec<&str> = doc["steps"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"automorphism group of D"));
    let aut = doc["steps"]
        .as_array()
        .unwrap()
        .iter()
        .find(|s| s["name"] == "automorphism group of D")
        .unwrap();
    assert_eq!(aut["result"]["order"], 34440);
}

#[test]
fn skip_aut_omits_the_search() {
    let dir = tempfile::tempdir().unwrap();
    let o = qrlab(dir.path(), &["reproduce", "--skip-aut"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(!text.contains("automorphism group of D"));
    assert!(text.contains("orbits of PSL(2,41) on triples"));
    assert!(text.contains("0 failed"));
}

#[test]
fn thread_count_does_not_change_results() {
    let dir = tempfile::tempdir().unwrap();
    let one = qrlab(
        dir.path().join("a").as_path(),
        &["--threads", "1", "code", "41", "--extended", "--weights"],
    );
    let many = qrlab(
        dir.path().join("b").as_path(),
        &["--threads", "4", "code", "41", "--extended", "--weights"],
    );
    assert_eq!(one.stdout, many.stdout);
}
