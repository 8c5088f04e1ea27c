use std::path::PathBuf;
use std::process::{Command, Output};

fn tss(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tss"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("tss-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn file(&self, name: &str, text: &str) -> String {
        let p = self.0.join(name);
        std::fs::write(&p, text).unwrap();
        p.to_string_lossy().into_owned()
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

const PATH: &str = "p tss 3 2\nt 1 1\nt 2 1\nt 3 1\ne 1 2\ne 2 3\n";

#[test]
fn solve_engines_agree_and_verify() {
    let dir = Scratch::new("solve");
    let g = dir.file("path.tss", PATH);
    for engine in ["fpt", "brute", "greedy"] {
        let out = tss(&["solve", &g, "--engine", engine]);
        assert_eq!(out.status.code(), Some(0), "{engine}");
        let text = stdout(&out);
        assert!(text.starts_with("s 1\n"), "{engine}: {text}");
        let w = dir.file("w.txt", &text);
        let v = tss(&["verify", &g, &w]);
        assert_eq!(v.status.code(), Some(0));
        assert_eq!(stdout(&v), "feasible 3/3\n");
    }
}

#[test]
fn decision_exit_codes() {
    let dir = Scratch::new("decide");
    // edgeless: every vertex must be seeded
    let g = dir.file("e.tss", "p tss 2 0\nt 1 1\nt 2 1\n");
    assert_eq!(tss(&["solve", &g, "--k", "2"]).status.code(), Some(0));
    assert_eq!(tss(&["solve", &g, "--k", "1"]).status.code(), Some(1));
    assert_eq!(
        tss(&["solve", &g, "--k", "1", "--engine", "brute"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn simulate_prints_rounds() {
    let dir = Scratch::new("sim");
    let g = dir.file("path.tss", PATH);
    let s = dir.file("s.txt", "w 1\n");
    let out = tss(&["simulate", &g, &s]);
    assert_eq!(stdout(&out), "r 0 1\nr 1 2\nr 2 3\n");
    let bad = dir.file("bad.txt", "w 3\n");
    let g2 = dir.file("p2.tss", "p tss 3 1\nt 1 1\nt 2 1\nt 3 1\ne 1 2\n");
    assert_eq!(tss(&["verify", &g2, &bad]).status.code(), Some(1));
}

#[test]
fn format_and_usage_errors_exit_two() {
    let dir = Scratch::new("err");
    let g = dir.file("bad.tss", "p tss 2 1\nt 1 1\nt 2 0\ne 1 2\n");
    let out = tss(&["solve", &g]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    assert_eq!(tss(&["solve"]).status.code(), Some(2));
    assert_eq!(
        tss(&["solve", &g, "--engine", "magic"]).status.code(),
        Some(2)
    );
    let path = dir.file("path.tss", PATH);
    let not_cover = dir.file("c.txt", "w 1\n");
    assert_eq!(
        tss(&["solve", &path, "--cover", &not_cover]).status.code(),
        Some(2)
    );
}

#[test]
fn reductions_pipeline() {
    let dir = Scratch::new("red");
    let sc = dir.file("x.sc", "p sc 3 3\ns 1 2\ns 2 3\ns 3\n");
    let out = tss(&["reduce", "sc2tss", &sc]);
    assert_eq!(out.status.code(), Some(0));
    let g = dir.file("g.tss", &stdout(&out));
    // {x_1, T_2} is feasible and normalizes to {T_1, T_2}
    let s = dir.file("s.txt", "w 1 5\n");
    let n = tss(&["normalize", &g, &s]);
    assert_eq!(stdout(&n), "w 4 5\n");
    let greedy = tss(&["greedy-sc", &sc]);
    assert_eq!(stdout(&greedy), "s 2\nw 1 2\n");

    let path = dir.file("path.tss", PATH);
    let sub = stdout(&tss(&["reduce", "subdivide", &path]));
    assert!(sub.starts_with("p tss 5 4\n"), "{sub}");
    assert!(sub.contains("b 1 1 2 3\n") && sub.contains("b 2 4 5\n"));
}

#[test]
fn generate_is_deterministic_and_bench_reports() {
    let a = tss(&["generate", "tss", "--t", "2", "--n", "8", "--seed", "3"]);
    let b = tss(&["generate", "tss", "--t", "2", "--n", "8", "--seed", "3"]);
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&tss(&["generate", "sc", "--n", "4", "--m", "3"])).starts_with("p sc 4 3\n"));

    let out = tss(&[
        "bench",
        "--fix-t",
        "2",
        "--grid",
        "8,10",
        "--engines",
        "fpt,brute",
        "--machine",
    ]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4, "{text}");
    for pair in lines.chunks(2) {
        let f: Vec<&str> = pair[0].split_whitespace().collect();
        let b: Vec<&str> = pair[1].split_whitespace().collect();
        assert_eq!((f[0], f[1], b[1]), ("B", "fpt", "brute"));
        assert_eq!(f[4], "2");
        assert_eq!(f[5], b[5], "optima differ: {text}");
    }
}

#[test]
fn cover_subcommand() {
    let dir = Scratch::new("cover");
    let g = dir.file("path.tss", PATH);
    assert_eq!(stdout(&tss(&["cover", &g])), "w 2\n");
    assert_eq!(stdout(&tss(&["cover", &g, "--approx"])), "w 1 2\n");
}
