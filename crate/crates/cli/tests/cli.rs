use std::process::{Command, Output};

fn sdiam(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sdiam")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = sdiam(&all);
    assert!(o.status.success(), "{:?}", o);
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn generated(args: &[&str]) -> String {
    let mut all = vec!["generate"];
    all.extend_from_slice(args);
    let o = sdiam(&all);
    assert!(o.status.success(), "{o:?}");
    stdout(&o).trim().to_string()
}

#[test]
fn metrics_values() {
    assert_eq!(json(&["metrics", "Bw", "3"])["sdiam"], 2);
    assert_eq!(json(&["metrics", "A_", "2"])["sdiam"], 1);
    let c7 = generated(&["--cycle", "7"]);
    let r = json(&["metrics", &c7, "3", "--witness"]);
    assert_eq!(r["sdiam"], 4);
    assert_eq!(r["witness"]["edges"].as_array().unwrap().len(), 4);
    assert!(json(&["metrics", &c7, "3"])["witness"].is_null());
}

#[test]
fn metrics_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.g6");
    std::fs::write(&path, "\nBw\n").unwrap();
    let arg = format!("@{}", path.display());
    assert_eq!(json(&["metrics", &arg, "2"])["sdiam"], 1);
}

#[test]
fn classify_examples() {
    let c5 = generated(&["--cycle", "5"]);
    let p6 = generated(&["--path", "6"]);
    let c4 = generated(&["--cycle", "4"]);
    assert_eq!(json(&["classify", &c5])["class"], "Three");
    let p = json(&["classify", &p6]);
    assert_eq!(p["class"], "NMinus1");
    assert_eq!(p["recognition"]["spider"]["a"], 0);
    assert_eq!(json(&["classify", &c4])["class"], "Two");
    let two_k2 = "Cc";
    assert_eq!(sdiam(&["classify", two_k2]).status.code(), Some(3));
}

#[test]
fn generate_families() {
    // C6: bits 101001 000110 001000 after the order byte.
    assert_eq!(generated(&["--cycle", "6"]), "EhEG");
    let r = json(&["generate", "--spider", "1,2,2"]);
    assert_eq!(r["n"], 6);
    assert_eq!(r["edges"], 5);
    let r = json(&["generate", "--example2-inner-complete", "6"]);
    assert_eq!(r["n"], 10);
    assert_eq!(sdiam(&["generate", "--spider", "2,1,1"]).status.code(), Some(2));
    assert_eq!(sdiam(&["generate", "--spider", "1,2"]).status.code(), Some(2));
    assert_eq!(sdiam(&["generate", "--h2", "uv,zz"]).status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(sdiam(&["metrics", "Bx~", "2"]).status.code(), Some(2));
    assert_eq!(sdiam(&["metrics", "Bw", "5"]).status.code(), Some(3));
    assert_eq!(sdiam(&["metrics", "@/definitely/missing", "2"]).status.code(), Some(4));
    assert_eq!(sdiam(&["oracle-diff", &generated(&["--path", "17"]), "2"]).status.code(), Some(3));
}

#[test]
fn oracle_diff_agrees() {
    let k4 = generated(&["--complete", "4"]);
    let r = json(&["oracle-diff", &k4, "3"]);
    assert_eq!(r["subsets"], 4);
    assert_eq!(r["discrepancies"].as_array().unwrap().len(), 0);
    // Disconnected: every value is infinite on every side.
    let r = json(&["oracle-diff", "Cc", "3"]);
    assert_eq!(r["discrepancies"].as_array().unwrap().len(), 0);
    let o = sdiam(&["oracle-diff", &generated(&["--star-path", "8"]), "4"]);
    assert!(stdout(&o).contains("70 subsets, 0 discrepancies"));
}

#[test]
fn verify_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    let o = sdiam(&[
        "verify",
        "--claims",
        "th2,th3,th4",
        "--corpus",
        "labeled:5:connected",
        "--out",
        out.to_str().unwrap(),
        "--threads",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0), "{o:?}");
    let csv = std::fs::read_to_string(out.join("summary.csv")).unwrap();
    assert_eq!(
        csv,
        "claim_id,corpus,checked,violations,vacuous\n\
         th2,labeled:5:connected,728,0,0\nth3,labeled:5:connected,728,0,0\nth4,labeled:5:connected,728,0,0\n"
    );
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out.join("report.json")).unwrap()).unwrap();
    assert_eq!(report.as_array().unwrap().len(), 3);

    for args in [["pro2", "trees:7"], ["oracle_dp", "labeled:5"]] {
        let o = sdiam(&["verify", "--claims", args[0], "--corpus", args[1], "--out", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{o:?}");
    }
}

#[test]
fn verify_ingestion_modes() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("in.g6");
    std::fs::write(&file, "A_\nzz\nBw\n").unwrap();
    let corpus = format!("file:{}", file.display());
    let out = dir.path().join("out");
    let run = |strict: &str| {
        Command::new(env!("CARGO_BIN_EXE_sdiam"))
            .args(["--json", "verify", "--claims", "pro1", "--corpus", &corpus, "--out", out.to_str().unwrap()])
            .env("GRAPH6_STRICT", strict)
            .output()
            .unwrap()
    };
    assert_eq!(run("1").status.code(), Some(2));
    let lenient = run("0");
    assert_eq!(lenient.status.code(), Some(0));
    let r: serde_json::Value = serde_json::from_str(&stdout(&lenient)).unwrap();
    assert_eq!(r[0]["graphs_checked"], 2);

    let blocked = dir.path().join("blocked");
    std::fs::write(&blocked, "a file, not a directory").unwrap();
    let o = sdiam(&["verify", "--claims", "pro1", "--corpus", "trees:4", "--out", blocked.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn unknown_claim_is_a_parse_error() {
    let o = sdiam(&["verify", "--claims", "nope", "--corpus", "trees:4", "--out", "/tmp/unused-sdiam"]);
    assert_eq!(o.status.code(), Some(2));
}
