use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str], out: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jordan-limits"))
        .args(args)
        .env("JORDAN_LIMITS_OUT", out)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("jordan-limits-cli-{}-{name}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    dir
}

fn ideal_lines(text: &str) -> usize {
    text.lines().filter(|l| l.trim_start().starts_with(|c: char| c.is_ascii_digit())).count()
}

#[test]
fn ideals_f4_d4_a5() {
    let dir = scratch("ideals");
    let o = run(&["ideals", "--type", "F4"], &dir);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(ideal_lines(&text), 1);
    assert!(text.contains("{2342, 1342, 1242, 1232}"), "{text}");
    assert_eq!(ideal_lines(&stdout(&run(&["ideals", "--type", "D", "--rank", "4"], &dir))), 3);
    assert_eq!(ideal_lines(&stdout(&run(&["ideals", "--type", "A", "--rank", "5"], &dir))), 7);
    assert!(dir.join("ideals.json").exists());
}

#[test]
fn iemu_examples() {
    let dir = scratch("iemu");
    let o = run(&["iemu", "9"], &dir);
    assert!(o.status.success());
    assert!(stdout(&o).contains("z  = (10, 10, 10, 10, 10, 10, 10, 10, 0)"));
    let o = run(&["iemu", "3,3"], &dir);
    assert!(stdout(&o).contains("z  = (14, 14, 0, 21, 14, 7)"));
    let o = run(&["iemu", "4,4,1"], &dir);
    assert!(o.status.success());
    assert!(stdout(&o).contains("brute check: pass"));
}

#[test]
fn usage_errors_exit_two() {
    let dir = scratch("usage");
    assert_eq!(run(&["iemu", "3,,1"], &dir).status.code(), Some(2));
    assert_eq!(run(&["iemu", "0"], &dir).status.code(), Some(2));
    assert_eq!(run(&["verify", "--type", "D", "--rank", "3"], &dir).status.code(), Some(2));
    assert_eq!(run(&["verify", "--type", "Q"], &dir).status.code(), Some(2));
    assert_eq!(run(&["verify"], &dir).status.code(), Some(2));
    assert_eq!(run(&["verify", "--type", "G2", "--rank", "3"], &dir).status.code(), Some(2));
}

#[test]
fn verify_g2_and_e8() {
    let dir = scratch("g2");
    let o = run(&["verify", "--type", "G2"], &dir);
    assert_eq!(o.status.code(), Some(0));
    let cert: serde_json::Value = serde_json::from_str(&fs::read_to_string(dir.join("G2_001.json")).unwrap()).unwrap();
    for key in ["type", "rank", "ideal", "steps", "pass", "millis"] {
        assert!(cert.get(key).is_some(), "missing {key}");
    }
    for key in ["kind", "params", "target_basis", "computed_basis", "equal"] {
        assert!(cert["steps"][0].get(key).is_some(), "missing step {key}");
    }
    assert_eq!(cert["pass"], true);

    let dir = scratch("e8");
    let o = run(&["verify", "--type", "E8"], &dir);
    assert_eq!(o.status.code(), Some(0));
    let certs: Vec<_> = fs::read_dir(&dir).unwrap().filter_map(|e| {
        let n = e.unwrap().file_name().into_string().unwrap();
        n.starts_with("E8_").then_some(n)
    }).collect();
    assert_eq!(certs.len(), 2);
}

#[test]
fn verify_b7_contains_worked_ideal() {
    let dir = scratch("b7");
    let o = run(&["verify", "--type", "B", "--rank", "7", "--no-timing"], &dir);
    assert_eq!(o.status.code(), Some(0));
    let mut want = ["e1+e2", "e1+e3", "e2+e3", "e1+e4", "e2+e4", "e3+e4", "e1+e5"].map(String::from).to_vec();
    want.sort();
    let found = fs::read_dir(&dir).unwrap().any(|e| {
        let p = e.unwrap().path();
        if !p.file_name().unwrap().to_string_lossy().starts_with("B7_") {
            return false;
        }
        let c: serde_json::Value = serde_json::from_str(&fs::read_to_string(p).unwrap()).unwrap();
        let mut ideal: Vec<String> = serde_json::from_value(c["ideal"].clone()).unwrap();
        ideal.sort();
        ideal == want && c["pass"] == true
    });
    assert!(found);
}

#[test]
fn serial_and_parallel_json_identical() {
    let a = scratch("serial");
    let b = scratch("parallel");
    let sa = run(&["verify", "--type", "D", "--rank", "6", "--jobs", "1", "--no-timing"], &a);
    let sb = run(&["verify", "--type", "D", "--rank", "6", "--jobs", "4", "--no-timing", "--out", b.to_str().unwrap()], &a);
    assert!(sa.status.success() && sb.status.success());
    assert_eq!(stdout(&sa).replace(a.to_str().unwrap(), ""), stdout(&sb).replace(b.to_str().unwrap(), ""));
    let mut names: Vec<_> = fs::read_dir(&a).unwrap().map(|e| e.unwrap().file_name()).collect();
    names.sort();
    assert!(!names.is_empty());
    for n in names {
        assert_eq!(fs::read(a.join(&n)).unwrap(), fs::read(b.join(&n)).unwrap(), "{n:?}");
    }
}
