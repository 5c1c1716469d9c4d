use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hyperspan::bench::BENCH_HEADER;
use hyperspan::format::{parse_instance, write_instance};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperspan"))
        .args(args)
        .env("HYPERSPAN_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_instance(text: &str) -> tempfile::NamedTempFile {
    let f = tempfile::NamedTempFile::new().unwrap();
    fs::write(f.path(), text).unwrap();
    f
}

fn worked() -> String {
    data("worked.hgr").to_str().unwrap().to_owned()
}

#[test]
fn span_worked() {
    let o = run(&["span", &worked()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "edges: x y z\nweight: 6\ncomponents: 1\n");
}

#[test]
fn span_trace_and_modes() {
    let o = run(&["span", &worked(), "--trace"]);
    let text = stdout(&o);
    assert!(text.contains("  x new-vertex calls=0\n"));
    assert!(text.contains("  z matching-accepted calls=1\n"));
    assert!(text.contains("  u matching-rejected calls=1\n"));
    assert!(text.ends_with("matching_calls: 2\n"));
    for flag in ["--strict-removals", "--incremental"] {
        let o = run(&["span", &worked(), flag]);
        assert!(
            stdout(&o).starts_with("edges: x y z\nweight: 6\n"),
            "{flag}"
        );
    }
    let o = run(&["span", &worked(), "--max"]);
    assert_eq!(stdout(&o), "edges: y z u\nweight: 9\ncomponents: 1\n");
}

#[test]
fn span_path_and_empty() {
    let path = temp_instance("hgr 2 4\ne a 1 2 w 1\ne b 2 3 w 1\ne c 3 4 w 1\ne d 1 3 w 5\n");
    let o = run(&["span", path.path().to_str().unwrap()]);
    assert!(stdout(&o).contains("weight: 3\n"));
    let empty = temp_instance("hgr 3 4\n");
    let o = run(&["span", empty.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "edges:\nweight: 0\ncomponents: 0\n");
}

#[test]
fn parse_errors_exit_2_with_line() {
    let bad = temp_instance("hgr 3 4\ne a 1 1 2 w 1\n");
    let o = run(&["span", bad.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let o = run(&["span", "/nonexistent/file.hgr"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_exit_codes() {
    let o = run(&["check", &worked(), "--edges", "x,y,z"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "independent\n");
    let o = run(&["check", &worked(), "--edges", "x"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["check", &worked(), "--edges", "x,y,z,u"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.starts_with("dependent\n"));
    // Γu = {1,4,5}
    let removed = text
        .lines()
        .find_map(|l| l.strip_prefix("removed: "))
        .unwrap();
    let removed: Vec<u32> = removed.split(' ').map(|v| v.parse().unwrap()).collect();
    assert_eq!(removed.len(), 2);
    assert!(removed.iter().all(|v| [1, 4, 5].contains(v)));
    let o = run(&["check", &worked(), "--edges", "x,nope"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn components_reports() {
    let o = run(&["components", &worked()]);
    assert_eq!(
        stdout(&o),
        "components: 1\ncomponent 1:\n  skeleton: x y z\n  links: u\n  vertices: 5\n"
    );
    let two = temp_instance("hgr 3 6\ne a 1 2 3 w 1\ne b 4 5 6 w 1\n");
    let o = run(&["components", two.path().to_str().unwrap()]);
    let text = stdout(&o);
    assert!(text.starts_with("components: 2\n"));
    assert_eq!(text.matches("  links: \n").count(), 2);
    let o = run(&["components", data("q4_triple.hgr").to_str().unwrap()]);
    assert_eq!(
        stdout(&o),
        "components: 1\ncomponent 1:\n  skeleton: a b c\n  links: \n  vertices: 6\n"
    );
}

#[test]
fn konig_dot() {
    let single = temp_instance("hgr 3 3\ne a 1 2 3 w 1\n");
    let o = run(&["konig", single.path().to_str().unwrap()]);
    let text = stdout(&o);
    assert_eq!(text.matches("shape=").count(), 4);
    assert_eq!(text.matches(" -- ").count(), 3);
    let o = run(&["konig", &worked(), "--edges", "x,y,z", "--remove", "1,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("style=dashed").count(), 2);
    let o = run(&["konig", &worked(), "--edges", "w"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["konig", &worked(), "--edges", "x", "--remove", "4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_contract() {
    let o = run(&["verify", "--seed", "42", "--count", "100", "--q", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("100/100 ok\n"));
    let o = run(&["verify", "--count", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("0/0 ok\n"));
    let o = run(&["verify", "--count", "10", "--csv"]);
    assert!(stdout(&o).starts_with("check,checked,failed\n"));
    let o = run(&["verify", "--count", "20", "--inject-fault"]);
    assert_ne!(o.status.code(), Some(0));
    let o = run(&["verify", "--count", "1", "--max-edges", "30"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bench_csv() {
    let o = run(&["bench", "--sizes", "100,200,400", "--q", "3", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(BENCH_HEADER));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 3);
    for r in rows {
        let edges: usize = r[2].parse().unwrap();
        let calls: usize = r[4].parse().unwrap();
        assert!(calls <= edges);
    }
}

#[test]
fn file_round_trip() {
    let text = fs::read_to_string(data("q4_triple.hgr")).unwrap();
    assert_eq!(write_instance(&parse_instance(&text).unwrap()), text);
    let canonical =
        write_instance(&parse_instance(&fs::read_to_string(data("worked.hgr")).unwrap()).unwrap());
    let out = temp_instance(&canonical);
    let o = run(&["span", out.path().to_str().unwrap()]);
    assert!(stdout(&o).starts_with("edges: x y z\n"));
}
