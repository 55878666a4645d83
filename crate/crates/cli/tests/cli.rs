use std::path::Path;
use std::process::{Command, Output};

fn tritperm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tritperm"))
        .args(args)
        .env_remove("TRITPERM_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn assert_one_line_error(o: &Output) {
    assert!(!o.status.success());
    let err = stderr(o);
    let diagnostics: Vec<&str> = err.lines().filter(|l| !l.starts_with("jobs=")).collect();
    assert_eq!(diagnostics.len(), 1, "{err}");
    assert!(diagnostics[0].starts_with("error: "), "{err}");
}

/// Parses `schema,n,trials,seed,zero_count,p_hat,stderr` data rows.
fn mc_rows(csv: &str) -> Vec<Vec<String>> {
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("schema,n,trials,seed,zero_count,p_hat,stderr"));
    lines.map(|l| l.split(',').map(str::to_string).collect()).collect()
}

#[test]
fn perm_identity_and_all_ones() {
    let dir = tempfile::tempdir().unwrap();
    let id = write(dir.path(), "id.txt", "3\n1 0 0\n0 1 0\n0 0 1\n");
    let o = tritperm(&["perm", &id, "--method", "mod3", "--jobs", "2"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("1"));
    let record: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(record["schema"], "tritperm.perm.v1");
    assert_eq!(record["n"], 3);
    assert_eq!(record["method"], "mod3");
    assert_eq!(record["jobs"], 2);
    assert!(record["elapsed_seconds"].as_f64().unwrap() >= 0.0);
    assert!(stderr(&o).contains("jobs=2"));

    let ones = write(dir.path(), "ones.txt", "2\n1 1\n1 1\n");
    let o = tritperm(&["perm", &ones, "--method", "naive"]);
    assert_eq!(stdout(&o).lines().next(), Some("-1"));
    let o = tritperm(&["perm", &ones, "--method", "naive", "--mod3-classes"]);
    assert_eq!(stdout(&o).lines().next(), Some("2"));
}

#[test]
fn perm_engines_agree_on_random_10x10() {
    let dir = tempfile::tempdir().unwrap();
    let mut state = 0x2545_f491_4f6c_dd1du64;
    let mut text = String::from("10\n");
    for _ in 0..10 {
        let row: Vec<String> = (0..10)
            .map(|_| {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                ((state % 3) as i64).to_string()
            })
            .collect();
        text.push_str(&row.join(" "));
        text.push('\n');
    }
    let path = write(dir.path(), "r.txt", &text);
    let ryser = tritperm(&["perm", &path, "--method", "ryser"]);
    let mod3 = tritperm(&["perm", &path, "--method", "mod3", "--jobs", "3"]);
    assert_eq!(stdout(&ryser).lines().next(), stdout(&mod3).lines().next());
}

#[test]
fn perm_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "2\n1 0\n1\n");
    let o = tritperm(&["perm", &bad]);
    assert_one_line_error(&o);
    assert!(stderr(&o).contains("line 3"));

    let big = format!("10\n{}", "1 0 0 0 0 0 0 0 0 0\n".repeat(10));
    let big = write(dir.path(), "big.txt", &big);
    assert_one_line_error(&tritperm(&["perm", &big, "--method", "naive"]));
    assert_one_line_error(&tritperm(&["perm", "/nonexistent/matrix.txt"]));
    assert_one_line_error(&tritperm(&["perm", &big, "--jobs", "0"]));
}

#[test]
fn threads_env_sets_default_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let id = write(dir.path(), "id.txt", "1\n1\n");
    let o = Command::new(env!("CARGO_BIN_EXE_tritperm"))
        .args(["perm", &id])
        .env("TRITPERM_THREADS", "3")
        .output()
        .unwrap();
    assert!(stderr(&o).contains("jobs=3"));
}

#[test]
fn count_exact() {
    let o = tritperm(&["count-exact", "--n", "2"]);
    assert_eq!(stdout(&o), "schema,n,z,plus_one,minus_one,total,ratio\ntritperm.exact.v1,2,33,24,24,81,0.4074074074074074\n");
    let o = tritperm(&["count-exact", "--n", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["z"], 1);
    assert_one_line_error(&tritperm(&["count-exact", "--n", "5"]));
}

#[test]
fn montecarlo_n6_matches_reported_rate() {
    let o = tritperm(&["montecarlo", "--n", "6", "--trials", "1000000", "--seed", "1", "--jobs", "8"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let rows = mc_rows(&stdout(&o));
    let p: f64 = rows[0][5].parse().unwrap();
    let se: f64 = rows[0][6].parse().unwrap();
    assert!((p - 0.35456).abs() <= 3.0 * se, "p_hat {p} stderr {se}");
}

#[test]
fn montecarlo_reproducible_and_appends() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("mc.csv");
    let out_s = out.to_str().unwrap();
    let a = tritperm(&["montecarlo", "--n", "1", "--trials", "100000", "--seed", "1", "--jobs", "1", "--out", out_s]);
    let b = tritperm(&["montecarlo", "--n", "1", "--trials", "100000", "--seed", "1", "--jobs", "4", "--out", out_s]);
    assert_eq!(stdout(&a), stdout(&b));
    let rows = mc_rows(&stdout(&a));
    let (p, se): (f64, f64) = (rows[0][5].parse().unwrap(), rows[0][6].parse().unwrap());
    assert!((p - 1.0 / 3.0).abs() <= 5.0 * se);

    let file = std::fs::read_to_string(&out).unwrap();
    let rows = mc_rows(&file);
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0], rows[1]);
}

#[test]
fn montecarlo_sweep_and_figure() {
    let o = tritperm(&["montecarlo", "--n", "3", "--n-max", "5", "--trials", "2000"]);
    let ns: Vec<String> = mc_rows(&stdout(&o)).into_iter().map(|r| r[1].clone()).collect();
    assert_eq!(ns, ["3", "4", "5"]);

    let o = tritperm(&["figure", "--n-max", "4", "--exact-up-to", "2", "--trials", "1000"]);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("schema,n,source,p,stderr,samples"));
    let sources: Vec<&str> = lines.map(|l| l.split(',').nth(2).unwrap()).collect();
    assert_eq!(sources, ["exact", "exact", "montecarlo", "montecarlo"]);
}

#[test]
fn bench_output() {
    let o = tritperm(&["bench", "--n-min", "8", "--n-max", "10", "--reps", "0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "");

    let o = tritperm(&["bench", "--n-min", "8", "--n-max", "10", "--reps", "1", "--methods", "ryser,mod3"]);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(
        lines.next(),
        Some("schema,method,model,n,reps,mean_seconds,median_seconds,min_seconds,relative_residual,constant")
    );
    let methods: Vec<&str> = lines.map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(methods, ["ryser", "ryser", "ryser", "mod3", "mod3", "mod3"]);
}

#[test]
fn pi_matrix_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pi3.txt");
    let p = path.to_str().unwrap();
    assert!(tritperm(&["pi-matrix", "--n", "3", "--out", p]).status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "3\n0 1 1\n1 -1 0\n-1 0 -1\n");

    let o = tritperm(&["pi-matrix", "--n", "3", "--skip-integer-part"]);
    assert_eq!(stdout(&o), "3\n1 1 1\n-1 0 -1\n0 -1 0\n");
    assert_one_line_error(&tritperm(&["pi-matrix", "--n", "101"]));

    // Written files feed straight back into `perm`.
    let big = dir.path().join("pi12.txt");
    assert!(tritperm(&["pi-matrix", "--n", "12", "--out", big.to_str().unwrap()]).status.success());
    let a = tritperm(&["perm", big.to_str().unwrap(), "--method", "ryser"]);
    let b = tritperm(&["perm", big.to_str().unwrap(), "--method", "mod3"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a).lines().next(), stdout(&b).lines().next());
}

#[test]
fn circuits() {
    for (op, gates) in [("add", 6), ("mul", 2), ("div", 1)] {
        let o = tritperm(&["circuits", op]);
        assert!(o.status.success(), "{}", stderr(&o));
        let out = stdout(&o);
        assert!(out.starts_with(&format!("# minimal circuit for {op}: {gates} gates\n")), "{out}");
        assert!(out.contains("verified"));
    }
    assert_one_line_error(&tritperm(&["circuits", "add", "--max-gates", "5"]));
}
