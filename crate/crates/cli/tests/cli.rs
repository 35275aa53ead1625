use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toromaps")).args(args).output().expect("run toromaps")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("toromaps-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn unsensed_column(csv: &str) -> Vec<String> {
    csv.lines().skip(1).map(|l| l.rsplit(',').next().unwrap().to_string()).collect()
}

#[test]
fn oracle_line() {
    let o = run(&["oracle", "--r", "4", "--v", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "sensed=23 reflexible=17 unsensed=20\n");
}

#[test]
fn oracle_odd_degree_doubles_vertices() {
    let o = run(&["oracle", "--r", "5", "--v", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("unsensed=13\n"), "{}", stdout(&o));
}

#[test]
fn table_rows() {
    let o = run(&["table", "--r", "4", "--max-v", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("v,edges,sensed,reflexible,unsensed\n"));
    assert_eq!(unsensed_column(&out), ["1", "4", "20"]);
    let o = run(&["table", "--r", "3", "--max-v", "2", "--format", "csv"]);
    assert_eq!(unsensed_column(&stdout(&o)), ["1", "5"]);
}

#[test]
fn table_json_uses_strings() {
    let o = run(&["table", "--r", "4", "--max-v", "10", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("\"unsensed\": \"107087360\""), "{out}");
    assert!(out.contains("\"v\": 10"));
}

#[test]
fn table_is_deterministic() {
    let a = run(&["table", "--r", "3", "--max-v", "6"]);
    let b = run(&["table", "--r", "3", "--max-v", "6"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn oracle_table_mode() {
    let o = run(&["table", "--r", "6", "--max-v", "1", "--oracle", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(unsensed_column(&stdout(&o)), ["3"]);
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["table", "--r", "4", "--max-v", "0"]).status.code(), Some(2));
    assert_eq!(run(&["table", "--r", "5", "--max-v", "1"]).status.code(), Some(2));
    assert_eq!(run(&["table", "--r", "4", "--max-v", "2", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(run(&["table", "--r", "4", "--max-v", "2", "--precursors", "/nonexistent/p.txt"]).status.code(), Some(2));
    assert_eq!(run(&["oracle", "--r", "9", "--v", "1"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
}

#[test]
fn verify_full_table() {
    let o = run(&["verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.ends_with(" ok")).count(), 20);
}

#[test]
fn verify_reports_corruption() {
    let dir = scratch("corrupt");
    let path = dir.join("r4.txt");
    let o = run(&["precursors", "generate", "--r", "4", "--max-n", "12", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let corrupted = text.replacen("\n0 0 1\n", "\n0 0 2\n", 1);
    assert_ne!(corrupted, text);
    std::fs::write(&path, &corrupted).unwrap();
    let o = run(&["verify", "--r", "4", "--max-v", "3", "--precursors", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("r=4 uncovered from v=3"), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), corrupted);

    let corrupted = text.replacen("\n6 23\n", "\n6 25\n", 1);
    assert_ne!(corrupted, text);
    std::fs::write(&path, &corrupted).unwrap();
    let o = run(&["verify", "--r", "4", "--max-v", "3", "--precursors", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("first mismatch at r=4 v=3"));
    assert!(stdout(&o).contains("r=4 v=3 unsensed=21 expected=20 MISMATCH"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_reports_uncovered_rows() {
    let dir = scratch("short");
    let path = dir.join("r4.txt");
    let o = run(&["precursors", "generate", "--r", "4", "--max-n", "12", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["verify", "--r", "4", "--max-v", "10", "--precursors", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.ends_with(" ok")).count(), 6);
    assert!(out.contains("r=4 v=10 uncovered"), "{out}");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn precursor_round_trip() {
    let dir = scratch("round");
    let path = dir.join("brute.txt");
    let o = run(&["precursors", "generate", "--r", "4", "--max-darts", "8", "--backend", "brute", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["precursors", "import", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("s_tilde r=4"));
    let o = run(&["precursors", "export", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), std::fs::read_to_string(&path).unwrap());
    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "@sequence s_tilde2 r=4 arity=3\n2 1 2 1\n").unwrap();
    let o = run(&["precursors", "import", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn table_from_file_matches_default() {
    let dir = scratch("file");
    let path = dir.join("r3.txt");
    run(&["precursors", "generate", "--r", "3", "--max-n", "30", "--output", path.to_str().unwrap()]);
    let a = run(&["table", "--r", "3", "--max-v", "10", "--precursors", path.to_str().unwrap()]);
    let b = run(&["table", "--r", "3", "--max-v", "10"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    std::fs::remove_dir_all(dir).unwrap();
}
