use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Scratch {
        let dir = std::env::temp_dir().join(format!("booldiff-cli-{tag}-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn file(&self, name: &str, text: &str) -> PathBuf {
        let p = self.0.join(name);
        fs::write(&p, text).unwrap();
        p
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.join(name)
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = fs::remove_dir_all(&self.0);
    }
}

fn run(args: &[&Path]) -> Output {
    run_env(args, None)
}

fn run_env(args: &[&Path], nmax: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_booldiff"));
    cmd.args(args).env_remove("BOOLDIFF_NMAX");
    if let Some(v) = nmax {
        cmd.env("BOOLDIFF_NMAX", v);
    }
    cmd.output().unwrap()
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "exit {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

macro_rules! args {
    ($($a:expr),* $(,)?) => { &[$(Path::new($a)),*] };
}

const JORDAN_N1: &str = "1\n{} {}\n{} {1}\n{1} {}\n";

const BLOCK_A: &str = "4
{4} {4}
{4} {1,2}
{4} {1,3}
{1,2} {4}
{1,2} {1,2}
{1,2} {1,3}
{1,3} {4}
{1,3} {1,2}
{1,3} {1,3}
";

const BLOCK_B: &str = "4
{1,3} {1,3}
{1,3} {1,4}
{1,3} {2,3}
{1,4} {1,3}
{1,4} {1,4}
{1,4} {2,3}
{2,3} {1,3}
{2,3} {1,4}
{2,3} {2,3}
";

#[test]
fn matrix_of_jordan_digraph() {
    let s = Scratch::new("matrix");
    let a = s.file("a.dg", JORDAN_N1);
    let out = stdout(&run(args!["matrix", "--basis", "ms", &a]));
    assert_eq!(out, "2 2\n11\n01\n");
}

#[test]
fn digraph_of_jordan_matrix() {
    let s = Scratch::new("digraph");
    let m = s.file("j.mat", "# Jordan block\n2 2\n11\n01\n");
    let out = stdout(&run(args!["digraph", "--basis", "ms", &m]));
    assert_eq!(out, JORDAN_N1);
}

#[test]
fn product_of_block_digraphs() {
    let s = Scratch::new("product");
    let a = s.file("a.dg", BLOCK_A);
    let b = s.file("b.dg", BLOCK_B);
    let want = "4\n{1,2} {}\n{1,2} {1,2}\n{1,2} {3,4}\n{1,3} {1,3}\n{1,3} {2,3}\n{1,3} {2,4}\n";
    for route in ["direct", "matrix", "auto"] {
        let out = stdout(&run(args![
            "product", "--basis", "ms", "--route", route, &a, &b
        ]));
        assert_eq!(out, want, "route {route}");
    }
}

#[test]
fn output_is_deterministic_and_out_flag_writes_file() {
    let s = Scratch::new("out");
    let a = s.file("a.dg", BLOCK_A);
    let b = s.file("b.dg", BLOCK_B);
    let p = s.path("p.dg");
    for basis in ["ms", "md", "xs", "xd"] {
        let first = stdout(&run(args!["product", "--basis", basis, &a, &b]));
        let second = stdout(&run(args!["product", "--basis", basis, &a, &b]));
        assert_eq!(first, second);
        let quiet = stdout(&run(args![
            "product", "--basis", basis, &a, &b, "--out", &p
        ]));
        assert!(quiet.is_empty());
        assert_eq!(fs::read_to_string(&p).unwrap(), first);
    }
}

#[test]
fn convert_round_trip() {
    let s = Scratch::new("convert");
    let a = s.file("a.dg", BLOCK_A);
    let x = s.path("x.dg");
    stdout(&run(args![
        "convert", "--from", "ms", "--to", "xd", &a, "--out", &x
    ]));
    let back = stdout(&run(args!["convert", "--from", "xd", "--to", "ms", &x]));
    assert_eq!(back, BLOCK_A);
}

#[test]
fn derivative_conversion_example() {
    let s = Scratch::new("convert-md");
    let a = s.file("d1.dg", "1\n{} {1}\n{1} {1}\n");
    let out = stdout(&run(args!["convert", "--from", "md", "--to", "ms", &a]));
    assert_eq!(out, "1\n{} {}\n{} {1}\n{1} {}\n{1} {1}\n");
}

#[test]
fn apply_and_rank_of_first_derivative() {
    let s = Scratch::new("apply");
    let a = s.file("d1.dg", "1\n{} {1}\n{1} {1}\n");
    let f = s.file("m0.bf", "1\n10\n");
    assert_eq!(
        stdout(&run(args!["apply", "--basis", "md", &a, &f])),
        "1\n11\n"
    );
    assert_eq!(
        stdout(&run(args!["rank", "--basis", "md", &a])),
        "rank=1 image=2 kernel=2\n"
    );
    assert_eq!(
        stdout(&run(args!["format", "--basis", "md", &a])),
        "m^{}∂^{1} + m^{1}∂^{1}\n"
    );
}

#[test]
fn jordan_lines_per_dimension() {
    let out = stdout(&run(args!["jordan", "-n", "1", "-n", "2"]));
    assert_eq!(
        out,
        "m^{}s^{1} + 1\nm^{}s^{1} + m^{1}s^{1,2} + m^{2}s^{1} + 1\n"
    );
    let out = stdout(&run(args!["jordan", "-n", "3"]));
    assert!(out.contains("m^{2}s^{2,3}"));
    assert!(out.contains("m^{3}s^{1,2,3}"));
}

#[test]
fn table_golden_and_pairs() {
    let s = Scratch::new("table");
    let t = s.path("t.tsv");
    stdout(&run(args![
        "table", "--basis", "ms", "-n", "1", "--out", &t
    ]));
    let golden = include_str!("golden/star_table_n1.tsv");
    assert_eq!(fs::read_to_string(&t).unwrap(), golden);

    let a = s.file("a.dg", "1\n{1} {}\n{} {1}\n");
    let b = s.file("b.dg", "1\n{1} {}\n");
    let out = stdout(&run(args!["table", "--basis", "ms", &a, &b]));
    assert_eq!(
        out,
        "left\tright\t★\n{(1,0),(0,1)}\t{(1,0)}\t{(1,0),(0,1)}\n"
    );
}

#[test]
fn render_product_points() {
    let s = Scratch::new("render");
    let a = s.file(
        "a.dg",
        "4\n{1} {1,2}\n{2} {1,2}\n{3} {1,2}\n{4} {1,2}\n{1,2} {1,2}\n{1,3} {1,2}\n",
    );
    let out = stdout(&run(args!["render", &a, &a]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "x\ty\tmarker");
    let stars: Vec<&str> = lines
        .iter()
        .copied()
        .filter(|l| l.ends_with("star"))
        .collect();
    assert_eq!(stars, ["1\t0\tstar", "2\t0\tstar"]);
    assert_eq!(lines.iter().filter(|l| l.ends_with("triangle")).count(), 6);
    assert_eq!(lines.iter().filter(|l| l.ends_with("circle")).count(), 6);

    let empty = s.file("e.dg", "2\n");
    assert_eq!(stdout(&run(args!["render", &empty])), "x\ty\tmarker\n");
}

#[test]
fn parse_errors_exit_2_with_line_number() {
    let s = Scratch::new("parse");
    let bad = s.file("bad.dg", "2\n{1} {2}\n{1} {5}\n");
    let out = run(args!["matrix", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let dup = s.file("dup.dg", "1\n{1} {}\n{1} {}\n");
    assert_eq!(run(args!["matrix", &dup]).status.code(), Some(2));

    let bits = s.file("bad.mat", "2 2\n11\n0x\n");
    let out = run(args!["digraph", &bits]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn dimension_errors_exit_3() {
    let s = Scratch::new("dim");
    let a = s.file("a.dg", "1\n{1} {}\n");
    let b = s.file("b.dg", "2\n{1} {}\n");
    assert_eq!(run(args!["product", &a, &b]).status.code(), Some(3));
    let m = s.file("m.mat", "3 3\n100\n010\n001\n");
    assert_eq!(run(args!["digraph", &m]).status.code(), Some(3));
    let f = s.file("f.bf", "2\n1000\n");
    assert_eq!(run(args!["apply", &a, &f]).status.code(), Some(3));
    assert_eq!(run(args!["jordan", "-n", "0"]).status.code(), Some(3));
}

#[test]
fn capacity_errors_exit_4() {
    assert_eq!(run(args!["table", "-n", "2"]).status.code(), Some(4));
    let s = Scratch::new("cap");
    let a = s.file("a.dg", "5\n{1} {}\n");
    assert_eq!(
        run(args![
            "product", "--basis", "xd", "--route", "direct", &a, &a
        ])
        .status
        .code(),
        Some(4)
    );
    assert!(run(args!["product", "--basis", "xd", &a, &a])
        .status
        .success());
    assert_eq!(
        run_env(args!["matrix", &a], Some("4")).status.code(),
        Some(4)
    );
    assert_eq!(run(args!["jordan", "-n", "11"]).status.code(), Some(4));
    assert!(run_env(args!["jordan", "-n", "11"], Some("11"))
        .status
        .success());
}

#[test]
fn missing_file_exits_1() {
    let out = run(args!["matrix", "/nonexistent/booldiff/input.dg"]);
    assert_eq!(out.status.code(), Some(1));
}
