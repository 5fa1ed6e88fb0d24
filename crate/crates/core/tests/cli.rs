//! Exit codes and outputs of the command-line tool.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_strongcolor")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn cycle7(dir: &TempDir) -> PathBuf {
    let out = run(&["gen", "--family", "cycle", "--seed", "0", "--n", "7"]);
    assert_eq!(code(&out), 0);
    write(dir, "c7.txt", &stdout(&out))
}

#[test]
fn color_then_verify() {
    let dir = TempDir::new().unwrap();
    let c7 = cycle7(&dir);
    let out = run(&["color", "--mode", "mad3", s(&c7)]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("# certified true"));
    assert!(text.contains("# list_bound 7"));
    assert!(text.lines().filter(|l| l.starts_with("c ")).all(|l| l.split(' ').nth(3).unwrap().parse::<u32>().unwrap() < 7));
    let col = write(&dir, "col.txt", &text);
    let out = run(&["verify", s(&c7), s(&col)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("ok"));
}

#[test]
fn verify_reports_violations() {
    let dir = TempDir::new().unwrap();
    let p3 = write(&dir, "p3.txt", "v 3\ne 0 1\ne 1 2\n");
    let bad = write(&dir, "bad.txt", "c 0 1 4\nc 1 2 4\n");
    let out = run(&["verify", s(&p3), s(&bad)]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("violation"));
    let partial = write(&dir, "partial.txt", "c 0 1 4\n");
    assert_eq!(code(&run(&["verify", s(&p3), s(&partial)])), 1);
}

#[test]
fn girth7_mode_and_audit() {
    let dir = TempDir::new().unwrap();
    let c7 = cycle7(&dir);
    let out = run(&["color", "--mode", "girth7", s(&c7)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("# list_bound 12"));
    let out = run(&["audit", "--which", "girth7", s(&c7)]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("identity -14"));
    assert!(text.contains("total_final -14"));
    assert!(text.contains("conserved true"));
    let out = run(&["audit", "--which", "mad3", s(&c7)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("negative vertex 0 charge -1 plan M2"));
}

#[test]
fn hypothesis_rejections_exit_one() {
    let dir = TempDir::new().unwrap();
    let blowup = write(&dir, "b.txt", &stdout(&run(&["gen", "--family", "c5-blowup", "--seed", "0", "--delta", "4"])));
    let out = run(&["color", "--mode", "mad3", s(&blowup)]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("mad = 4"));
    assert_eq!(code(&run(&["color", "--mode", "girth7", s(&blowup)])), 1);
    let short = write(&dir, "short.txt", "v 2\ne 0 1\nl 0 1 : 1 2\n");
    assert_eq!(code(&run(&["color", "--mode", "girth7", s(&short)])), 1);
}

#[test]
fn uncertified_fallback_exits_two() {
    // The McGee graph: cubic, girth 7, not planar, and no configuration applies.
    let dir = TempDir::new().unwrap();
    let mut text = String::from("v 24\n");
    let jumps = [12i64, 7, -7];
    for i in 0..24i64 {
        let j = (i + 1) % 24;
        text += &format!("e {} {}\n", i.min(j), i.max(j));
        let k = (i + jumps[(i % 3) as usize]).rem_euclid(24);
        if i < k {
            text += &format!("e {i} {k}\n");
        }
    }
    let m = write(&dir, "mcgee.txt", &text);
    assert_eq!(stdout(&run(&["girth", s(&m)])).trim(), "7");
    let out = run(&["color", "--mode", "girth7", "--delta", "5", s(&m)]);
    assert_eq!(code(&out), 2, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("# certified false"));
    let col = write(&dir, "col.txt", &stdout(&out));
    assert_eq!(code(&run(&["verify", s(&m), s(&col)])), 0);
}

#[test]
fn input_errors_exit_one() {
    let dir = TempDir::new().unwrap();
    assert_eq!(code(&run(&["mad", "/nonexistent/file"])), 1);
    assert_eq!(code(&run(&["color", "--bogus"])), 1);
    assert_eq!(code(&run(&["frobnicate"])), 1);
    assert_eq!(code(&run(&[])), 1);
    let broken = write(&dir, "broken.txt", "v 3\ne 0 x\n");
    let out = run(&["girth", s(&broken)]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2, column 5"));
    let big = write(&dir, "big.txt", &stdout(&run(&["gen", "--family", "cycle", "--seed", "0", "--n", "40"])));
    assert_eq!(code(&run(&["exact", s(&big)])), 1);
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["--version"])), 0);
}

#[test]
fn small_queries() {
    let dir = TempDir::new().unwrap();
    let c7 = cycle7(&dir);
    assert_eq!(stdout(&run(&["girth", s(&c7)])), "7\n");
    assert_eq!(stdout(&run(&["mad", s(&c7)])), "mad 2\nwitness 0 1 2 3 4 5 6\n");
    let out = run(&["exact", s(&c7)]);
    assert!(stdout(&out).starts_with("chi_s 4\n"));
    let tree = write(&dir, "t.txt", "v 3\ne 0 1\ne 1 2\n");
    assert_eq!(stdout(&run(&["girth", s(&tree)])), "inf\n");
}

#[test]
fn outputs_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let args = ["gen", "--family", "planar-girth7", "--seed", "11", "--n", "35", "--delta", "5", "--list-size", "15"];
    let a = stdout(&run(&args));
    assert_eq!(a, stdout(&run(&args)));
    let p = write(&dir, "p.txt", &a);
    for cmd in [vec!["color", "--mode", "girth7", s(&p)], vec!["audit", "--which", "girth7", s(&p)]] {
        let x = run(&cmd);
        assert_eq!(code(&x), 0);
        assert_eq!(x.stdout, run(&cmd).stdout);
    }
}

#[test]
fn list_file_overrides_defaults() {
    let dir = TempDir::new().unwrap();
    let p2 = write(&dir, "p2.txt", "v 2\ne 0 1\n");
    let lists = write(&dir, "l.txt", "l 0 1 : 42\n");
    let out = run(&["color", "--mode", "mad3", "--lists", s(&lists), s(&p2)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("c 0 1 42\n"));
}
