use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use tempfile::TempDir;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn untangle(args: &[&str]) -> Run {
    untangle_env(args, &[])
}

fn untangle_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_untangle"));
    cmd.args(args).env_remove("UNTANGLE_STATE_CAP");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn corpus(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name).to_str().unwrap().to_owned()
}

fn tmp_file(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

fn path_in(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_owned()
}

fn first_line(run: &Run) -> &str {
    run.stdout.lines().next().unwrap_or("")
}

#[test]
fn five_by_nine_both_objectives_with_witnesses() {
    let dir = TempDir::new().unwrap();
    let g = corpus("five-by-nine.tg");
    for (objective, ell) in [("max", "1"), ("sum", "4")] {
        let w = path_in(&dir, &format!("{objective}.tl"));
        let run = untangle(&["solve", &g, "--objective", objective, "--k", "2", "--ell", ell, "--witness", &w]);
        assert_eq!((run.code, first_line(&run)), (0, "YES"), "{}", run.stderr);
        let run = untangle(&["verify", &g, &w, "--objective", objective, "--k", "2", "--ell", ell]);
        assert_eq!(run.stdout, "VALID\n");
    }
    let run = untangle(&["verify", &g, &corpus("five-by-nine-sum.tl"), "--objective", "sum", "--budgets", &corpus("k2.bud"), "--ell", "4"]);
    assert_eq!(run.stdout, "VALID\n");
    let run = untangle(&["verify", &g, &corpus("five-by-nine-sum.tl"), "--objective", "sum", "--k", "2", "--ell", "3"]);
    assert_eq!(run.stdout, "OBJECTIVE sum=4 ell=3\n");
    let run = untangle(&["solve", &g, "--objective", "max", "--k", "2", "--ell", "0"]);
    assert_eq!(first_line(&run), "NO");
}

#[test]
fn every_admissible_algorithm_agrees_on_five_by_nine() {
    let g = corpus("five-by-nine.tg");
    for (objective, ell, algos) in [
        ("max", "1", &["max-dp", "branch"][..]),
        ("max", "0", &["max-dp", "branch", "zero"][..]),
        ("sum", "4", &["sum-dp", "patterns"][..]),
        ("sum", "2", &["sum-dp", "patterns"][..]),
    ] {
        let answers: Vec<String> = algos
            .iter()
            .map(|a| first_line(&untangle(&["solve", &g, "--objective", objective, "--k", "2", "--ell", ell, "--algo", a])).to_owned())
            .collect();
        assert!(answers.iter().all(|a| a == &answers[0]), "{objective} {ell}: {answers:?}");
    }
}

#[test]
fn empty_layers_need_nothing() {
    let dir = TempDir::new().unwrap();
    let g = tmp_file(&dir, "empty.tg", "tg 1\nn 3\ntau 4\n");
    for objective in ["max", "sum"] {
        let w = path_in(&dir, "w.tl");
        let run = untangle(&["solve", &g, "--objective", objective, "--k", "0", "--ell", "0", "--witness", &w]);
        assert_eq!(run.stdout, "YES\n");
        assert_eq!(fs::read_to_string(&w).unwrap(), "");
    }
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = tmp_file(&dir, "bad.tg", "tg 1\nn 2\ntau 1\nlayer 1\ne 1 1\n");
    let run = untangle(&["solve", &bad, "--objective", "max", "--k", "1", "--ell", "0"]);
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("line 5"), "{}", run.stderr);
    assert!(run.stdout.is_empty());

    let run = untangle(&["solve", &corpus("five-by-nine.tg"), "--objective", "max", "--ell", "1"]);
    assert_eq!(run.code, 1, "missing budget flag");
    let run = untangle(&["solve", &corpus("five-by-nine.tg"), "--objective", "sum", "--k", "2", "--ell", "1", "--algo", "branch"]);
    assert_eq!(run.code, 1);

    let args = ["solve", &corpus("five-by-nine.tg"), "--objective", "max", "--k", "2", "--ell", "1", "--algo", "max-dp"];
    let run = untangle_env(&args, &[("UNTANGLE_STATE_CAP", "100")]);
    assert_eq!(run.code, 2, "{}", run.stderr);
    let run = untangle(&["solve", &corpus("five-by-nine.tg"), "--objective", "max", "--k", "2", "--ell", "1", "--algo", "oracle"]);
    assert_eq!(run.code, 2);
    let run = untangle_env(&args, &[("UNTANGLE_STATE_CAP", "lots")]);
    assert_eq!(run.code, 1);
}

#[test]
fn min_ell_scans_upwards() {
    let dir = TempDir::new().unwrap();
    let g = tmp_file(&dir, "three.tg", "tg 1\nn 2\ntau 3\nlayer 1\ne 1 2\nlayer 2\ne 1 2\nlayer 3\ne 1 2\n");
    let run = untangle(&["min-ell", &g, "--objective", "max", "--k", "1"]);
    assert_eq!(run.stdout, "1\n");
    let run = untangle(&["min-ell", &g, "--objective", "sum", "--k", "1"]);
    assert_eq!(run.stdout, "1\n");
    let run = untangle(&["min-ell", &g, "--objective", "max", "--k", "0"]);
    assert_eq!(run.stdout, "NONE\n");
    // the shipped sum-4 witness is not the cheapest one
    let run = untangle(&["min-ell", &corpus("five-by-nine.tg"), "--objective", "sum", "--k", "2"]);
    assert_eq!(run.stdout, "3\n");
    let run = untangle(&["min-ell", &corpus("five-by-nine.tg"), "--objective", "max", "--k", "2"]);
    assert_eq!(run.stdout, "1\n");
}

#[test]
fn bin_packing_reduction_and_back() {
    let dir = TempDir::new().unwrap();
    let (tg, bud, w) = (path_in(&dir, "bp.tg"), path_in(&dir, "bp.bud"), path_in(&dir, "bp.tl"));
    let run = untangle(&["reduce", "binpacking", &corpus("four-items.bp"), "--out", &tg, "--budget-out", &bud]);
    assert_eq!(run.stdout, "REDUCED n=6 tau=18 objective=max ell=1\n", "{}", run.stderr);
    assert_eq!(fs::read_to_string(&bud).unwrap(), "class 1 6\nclass 2 6\nclass 3 6\nclass 4 5\nmember 1 1\nmember 2 2\nmember 3 3\nmember 4 4\nmember 4 5\nmember 4 6\n");
    let run = untangle(&["solve", &tg, "--objective", "max", "--colors", &bud, "--ell", "1", "--witness", &w]);
    assert_eq!(run.stdout, "YES\n", "{}", run.stderr);
    let run = untangle(&["extract", "binpacking", &corpus("four-items.bp"), &w]);
    let bins: Vec<u32> = run.stdout.trim().strip_prefix("BINS ").unwrap().split(' ').map(|b| b.parse().unwrap()).collect();
    let sizes = [2, 3, 1, 3];
    let mut load = [0; 3];
    for (i, b) in bins.iter().enumerate() {
        load[*b as usize - 1] += sizes[i];
    }
    assert_eq!(load, [3, 3, 3]);

    // forward map from a packing
    let bins_file = tmp_file(&dir, "bins.txt", "1 2 1 3\n");
    let lifted = path_in(&dir, "lifted.tl");
    let run = untangle(&["reduce", "binpacking", &corpus("four-items.bp"), "--out", &tg, "--witness-in", &bins_file, "--witness-out", &lifted]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let run = untangle(&["verify", &tg, &lifted, "--objective", "max", "--colors", &bud, "--ell", "1"]);
    assert_eq!(run.stdout, "VALID\n");

    let wide = tmp_file(&dir, "wide.bp", "bp 1\nsizes 2\nbeta 2\nB 1\n");
    let run = untangle(&["reduce", "binpacking", &wide, "--out", &tg]);
    assert_eq!((run.code, run.stdout.as_str()), (0, "NO\n"));
    let big = tmp_file(&dir, "big.bp", "bp 1\nsizes 21\nbeta 1\nB 21\n");
    assert_eq!(untangle(&["reduce", "binpacking", &big, "--out", &tg]).code, 2);
}

#[test]
fn uniformization_chain() {
    let dir = TempDir::new().unwrap();
    let g = tmp_file(&dir, "g.tg", "tg 1\nn 3\ntau 2\nlayer 1\ne 1 2\ne 2 3\nlayer 2\ne 1 3\n");
    let colors = tmp_file(&dir, "c.bud", "class 1 1\nclass 2 1\nmember 1 1\nmember 1 3\nmember 2 2\n");
    let (g2, b2, g3, b3) = (path_in(&dir, "g2.tg"), path_in(&dir, "b2.bud"), path_in(&dir, "g3.tg"), path_in(&dir, "b3.bud"));
    let run = untangle(&["reduce", "multicolored", &g, "--colors", &colors, "--out", &g2, "--budget-out", &b2]);
    assert_eq!(run.stdout, "REDUCED n=3 tau=6 objective=max ell=1\n", "{}", run.stderr);
    let run = untangle(&["reduce", "uniform", &g2, "--budgets", &b2, "--out", &g3, "--budget-out", &b3]);
    assert_eq!(run.stdout, "REDUCED n=5 tau=16 objective=max ell=1\n", "{}", run.stderr);

    let w3 = path_in(&dir, "w3.tl");
    let run = untangle(&["solve", &g3, "--objective", "max", "--budgets", &b3, "--ell", "1", "--witness", &w3]);
    assert_eq!(run.stdout, "YES\n");
    let w2 = path_in(&dir, "w2.tl");
    untangle(&["extract", "uniform", &g2, &w3, "--out", &w2]);
    let run = untangle(&["verify", &g2, &w2, "--objective", "max", "--budgets", &b2, "--ell", "1"]);
    assert_eq!(run.stdout, "VALID\n");
    let run = untangle(&["extract", "multicolored", &g, &w2]);
    let w1 = tmp_file(&dir, "w1.tl", &run.stdout);
    let run = untangle(&["verify", &g, &w1, "--objective", "max", "--colors", &colors, "--ell", "1"]);
    assert_eq!(run.stdout, "VALID\n");
}

#[test]
fn oct_and_almost2sat() {
    let dir = TempDir::new().unwrap();
    let tri = tmp_file(&dir, "tri.tg", "tg 1\nn 3\ntau 1\nlayer 1\ne 1 2\ne 1 3\ne 2 3\n");
    let (out, w) = (path_in(&dir, "oct.tg"), path_in(&dir, "oct.tl"));
    let x = tmp_file(&dir, "x.txt", "3\n");
    let run = untangle(&["reduce", "oct", &tri, "--s", "1", "--out", &out, "--witness-in", &x, "--witness-out", &w]);
    assert_eq!(run.stdout, "REDUCED n=3 tau=2 objective=sum ell=1\n", "{}", run.stderr);
    let run = untangle(&["verify", &out, &w, "--objective", "sum", "--k", "1", "--ell", "1"]);
    assert_eq!(run.stdout, "VALID\n");
    assert_eq!(untangle(&["extract", "oct", &w]).stdout, "X 3\n");
    assert_eq!(first_line(&untangle(&["solve", &out, "--objective", "sum", "--k", "1", "--ell", "0"])), "NO");

    let cnf = path_in(&dir, "f.cnf");
    let run = untangle(&["reduce", "almost2sat", &out, "--ell", "1", "--out", &cnf]);
    assert_eq!(run.stdout, "REDUCED variables=6 clauses=15 deletions=1\n");
    assert!(fs::read_to_string(&cnf).unwrap().contains("clause -x1_1 -x1_2\n"));
    assert_eq!(untangle(&["reduce", "almost2sat", &tri, "--ell", "1", "--out", &cnf]).code, 1);
}

#[test]
fn generate_is_reproducible() {
    let a = untangle(&["generate", "random", "--n", "3", "--tau", "3", "--p", "0.5", "--seed", "42"]);
    assert_eq!(a.stdout, fs::read_to_string(corpus("random-n3-tau3-p0.5-seed42.tg")).unwrap());
    let b = untangle(&["generate", "random", "--n", "3", "--tau", "3", "--p", "0.5", "--seed", "42"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(untangle(&["generate", "random", "--n", "3", "--tau", "3", "--p", "1.5", "--seed", "1"]).code, 1);
}

#[test]
fn help_is_not_an_error() {
    let run = untangle(&["--help"]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.contains("solve"));
    let _: PathBuf = corpus("five-by-nine.tg").into();
}
