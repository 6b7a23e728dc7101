use std::process::{Command, Output};

fn tdgame(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tdgame")).args(args).env("NO_COLOR", "1").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn family_passthrough() {
    let o = tdgame(&["family", "complete:2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2\n0 1\n");
    let o = tdgame(&["family", "path:3", "--emit", "graph6"]);
    assert_eq!(stdout(&o), "Bg\n");
}

#[test]
fn exit_codes() {
    assert_eq!(tdgame(&["family", "nonsense:3"]).status.code(), Some(2));
    assert_eq!(tdgame(&["family", "path:27"]).status.code(), Some(3));
    assert_eq!(tdgame(&["survey"]).status.code(), Some(2), "missing corpus");
    assert_eq!(tdgame(&["bogus"]).status.code(), Some(2));
    assert_eq!(tdgame(&["trees", "--max", "13"]).status.code(), Some(3));
    assert_eq!(
        tdgame(&["verify", "continuation", "--graph", "path:8", "--exhaustive"]).status.code(),
        Some(3)
    );
    // K_1 has an isolated vertex
    assert_eq!(tdgame(&["invariant", "--graph", "complete:1"]).status.code(), Some(3));
    assert_eq!(tdgame(&["invariant", "--file", "/nonexistent/graph.txt"]).status.code(), Some(2));
}

#[test]
fn invariant_text_and_json() {
    let o = tdgame(&["invariant", "--graph", "path:5", "--which", "gt,gti,nui"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("path:5: n=5 m=4\n"), "{text}");
    assert!(text.contains("gt    = 3  witness {1,2,3}"), "{text}");
    assert!(text.contains("gti   = 4\n"), "{text}");
    let o = tdgame(&["invariant", "--graph", "cycle:6", "--which", "all", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 6);
    assert_eq!(v["gti"]["value"], 4);
    assert_eq!(v["ugt"]["witness"].as_array().unwrap().len(), 4);
    let o = tdgame(&["invariant", "--graph", "path:4", "--which", "gti", "--declared", "0,1,2,3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["gti"]["value"], 0);
}

#[test]
fn invariant_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p3.txt");
    std::fs::write(&path, "3\n0 1\n1 2\n").unwrap();
    let o = tdgame(&["invariant", "--file", path.to_str().unwrap(), "--which", "gti"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("gti   = 2"));
    std::fs::write(&path, "3\n0 5\n").unwrap();
    assert_eq!(tdgame(&["invariant", "--file", path.to_str().unwrap()]).status.code(), Some(2));
    let o = tdgame(&["invariant", "--file", &fixture("all_order4.g6"), "--format", "graph6"]);
    // the first fixture graph is edgeless
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn survey_sinks() {
    let o = tdgame(&["survey", "--exhaustive", "4", "--emit", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let csv = stdout(&o);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("graph,n,gt,ugt,gti,gtg,grt,ooir,nui,bipartite,violations"));
    assert_eq!(lines.count(), 7);

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("rows.jsonl");
    let o = tdgame(&["survey", "--random", "7,0.4,5,3", "--emit", "json", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("seed 3:"));
    let body = std::fs::read_to_string(&out).unwrap();
    assert_eq!(body.lines().count(), 5);
    for line in body.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["n"], 7);
        assert_eq!(v["violations"], serde_json::json!([]));
    }
    // the same seed gives the same report
    let again = dir.path().join("again.jsonl");
    tdgame(&["survey", "--random", "7,0.4,5,3", "--emit", "json", "--out", again.to_str().unwrap()]);
    assert_eq!(std::fs::read_to_string(&again).unwrap(), body);
}

#[test]
fn survey_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("corpus.g6");
    std::fs::write(&path, "Bg\nCl\nC~\n").unwrap();
    let o = tdgame(&["survey", "--file", path.to_str().unwrap(), "--format", "graph6", "--emit", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let csv = stdout(&o);
    assert_eq!(csv.lines().nth(1), Some("corpus#0,3,2,2,2,2,2,2,1,true,"));
    assert_eq!(csv.lines().count(), 4);
    std::fs::write(&path, "Bg\nC\n").unwrap();
    let o = tdgame(&["survey", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn continuation_reports() {
    let o = tdgame(&["verify", "continuation", "--graph", "path:5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "path:5: 243 pairs checked, 0 violations\n");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("paw.txt");
    std::fs::write(&path, "4\n0 3\n1 2\n1 3\n2 3\n").unwrap();
    let o = tdgame(&["verify", "continuation", "--file", path.to_str().unwrap(), "--exhaustive"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("A={0,3} B={3}: gti(G|A)=2 > gti(G|B)=1"));
    let o = tdgame(&["verify", "continuation", "--graph", "cycle:8", "--samples", "50", "--seed", "1"]);
    assert!(stdout(&o).starts_with("cycle:8: 50 pairs checked"));
}

#[test]
fn trees_listing_and_probe() {
    let o = tdgame(&["trees", "--max", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1 + 1 + 2 + 3 + 6);
    assert!(String::from_utf8_lossy(&o.stderr).contains("n=6: 6 trees"));
    let o = tdgame(&["trees", "--max", "8", "--probe"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("Gamma_t = gti on trees: no counterexample found up to n=8"), "{text}");
    assert!(text.contains("qualifying trees"));
}

#[test]
fn verify_paper_prints_plain_table() {
    let o = tdgame(&["verify", "paper", "--no-timing"]);
    let text = stdout(&o);
    assert!(!text.contains('\x1b'));
    assert!(text.starts_with("#  claim"));
    // the continuation rows fail on the known counterexamples
    assert_eq!(o.status.code(), Some(1));
    assert!(text.contains("counterexample: n=4 [0-3 1-2 1-3 2-3] A={0,3} B={3}"));
    assert_eq!(text, stdout(&tdgame(&["verify", "paper", "--no-timing"])));
}

#[test]
fn help_documents_subcommands() {
    let o = tdgame(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for cmd in ["invariant", "verify", "survey", "trees", "family"] {
        assert!(text.contains(cmd), "{cmd}");
    }
}
