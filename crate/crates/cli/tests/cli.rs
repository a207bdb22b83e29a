use std::path::Path;
use std::process::{Command, Output};

use gbo_core::{make_function, optimize_benchmark, FunctionId, GboConfig, Record};
use gbo_harness::{emit, Format, ResultTable};

fn gbo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gbo"))
        .args(args)
        .env_remove("GBO_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn field(out: &str, name: &str) -> String {
    out.lines()
        .find_map(|l| l.strip_prefix(name))
        .map(|v| v.trim().to_string())
        .unwrap_or_else(|| panic!("no '{name}' line in:\n{out}"))
}

#[test]
fn run_sphere() {
    let o = gbo(&["run", "--function", "f1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(field(&out, "best value").parse::<f64>().unwrap(), 0.0);
    assert_eq!(field(&out, "best point"), "(0.0, 0.0)");
    assert_eq!(field(&out, "error").parse::<f64>().unwrap(), 0.0);
}

#[test]
fn run_unknown_function() {
    let o = gbo(&["run", "--function", "f99"]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("f1,") && err.contains("f20"), "{err}");
}

#[test]
fn run_levy() {
    let o = gbo(&["run", "--function", "f6"]);
    assert_eq!(o.status.code(), Some(0));
    let v: f64 = field(&stdout(&o), "best value").parse().unwrap();
    assert!(v <= 1e-6, "{v}");
}

#[test]
fn run_matches_the_library_and_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rec.json");
    let o = gbo(&["run", "-f", "f9", "--mode", "basic", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let rec: Record = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let f = make_function::<f64>(FunctionId::F9, None).unwrap();
    let direct = optimize_benchmark(&f, &GboConfig::basic()).unwrap();
    assert_eq!(rec.best_value, direct.best_value);
    assert_eq!(rec.best_point, direct.best_point);
    assert_eq!(rec.evaluations, direct.evaluations);
    assert_eq!(rec.round_trace, direct.round_trace);
}

#[test]
fn seed_falls_back_to_environment() {
    let with_flag = gbo(&["run", "-f", "f4", "--seed", "5"]);
    let with_env = Command::new(env!("CARGO_BIN_EXE_gbo"))
        .args(["run", "-f", "f4"])
        .env("GBO_SEED", "5")
        .output()
        .unwrap();
    let default = gbo(&["run", "-f", "f4"]);
    let value = |o: &Output| field(&stdout(o), "best value");
    assert_eq!(value(&with_flag), value(&with_env));
    assert_ne!(value(&with_flag), value(&default));
}

#[test]
fn round_budget_exits_two() {
    let o = gbo(&["run", "-f", "f9", "--max-rounds", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(field(&stdout(&o), "termination"), "round-budget");
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(
        gbo(&["compare", "--functions", "f1", "--repeats", "0"]).status.code(),
        Some(1)
    );
    assert_eq!(gbo(&["run", "--function", "f1", "--bogus"]).status.code(), Some(1));
    assert_eq!(gbo(&["run", "--function", "f9", "--dim", "3"]).status.code(), Some(1));
    assert_eq!(
        gbo(&["compare", "--functions", "f1", "--algorithms", "afsa"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(gbo(&[]).status.code(), Some(1));
}

#[test]
fn compare_markdown() {
    let o = gbo(&[
        "compare",
        "--functions",
        "f1,f5,f9",
        "--algorithms",
        "gbo",
        "--repeats",
        "10",
        "--format",
        "markdown",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let md = stdout(&o);
    let values: Vec<&str> = md
        .lines()
        .skip_while(|l| !l.ends_with("Mean best value"))
        .filter(|l| l.starts_with("| f"))
        .take(3)
        .collect();
    assert_eq!(values[0], "| f1 | **0.00E+00** |");
    assert_eq!(values[1], "| f5 | **-1.00E+00** |");
    assert_eq!(values[2], "| f9 | **3.00E+00** |");
}

#[test]
fn compare_json_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("table.json");
    let journal = dir.path().join("journal.csv");
    let o = gbo(&[
        "compare",
        "--functions",
        "f1,f7",
        "--algorithms",
        "gbo,pso",
        "--repeats",
        "2",
        "--format",
        "json",
        "--out",
        out.to_str().unwrap(),
        "--journal",
        journal.to_str().unwrap(),
        "--timing",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = std::fs::read_to_string(&out).unwrap();
    let table: ResultTable = serde_json::from_str(&text).unwrap();
    assert_eq!(table.rows.len(), 8);
    assert_eq!(emit(&table, Format::Json).unwrap(), text);
    assert_eq!(std::fs::read_to_string(&journal).unwrap().lines().count(), 9);
}

#[test]
fn compare_partial_failure_exits_three() {
    let o = gbo(&[
        "compare",
        "--functions",
        "f1",
        "--algorithms",
        "gbo,de",
        "--repeats",
        "1",
        "--max-evaluations",
        "1",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(3));
    let csv = stdout(&o);
    assert!(
        csv.lines()
            .any(|l| l.starts_with("f1,gbo,0,") && l.ends_with(",failed")),
        "{csv}"
    );
    assert!(
        csv.lines().any(|l| l.starts_with("f1,de,0,") && l.ends_with(",ok")),
        "{csv}"
    );
}

#[test]
fn compare_from_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("spec.json");
    std::fs::write(
        &cfg,
        r#"{"functions": ["f7"], "algorithms": ["gbo", "sa"], "repeats": 2}"#,
    )
    .unwrap();
    let o = gbo(&["compare", "--config", cfg.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).lines().count(), 5);
}

fn series<'a>(csv: &'a str, function: &str) -> Vec<&'a str> {
    csv.lines()
        .filter(|l| l.starts_with(&format!("{function},gbo,")))
        .map(|l| l.split(',').nth(3).unwrap())
        .collect()
}

#[test]
fn stability_series() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("series.csv");
    let o = gbo(&["stability", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let csv = std::fs::read_to_string(&out).unwrap();
    assert_eq!(csv.lines().count(), 1 + 4 * 10);
    let f5 = series(&csv, "f5");
    assert_eq!(f5.len(), 10);
    assert!(f5.iter().all(|e| *e == "0"));
    let f4 = series(&csv, "f4");
    assert!(f4.windows(2).any(|w| w[0] != w[1]), "{f4:?}");
    assert!(stdout(&o).starts_with("function,algorithm,mean_error"));
    assert_eq!(gbo(&["stability", "--repeats", "3"]).status.code(), Some(1));
}

#[test]
fn registry_help_and_version() {
    let list = gbo(&["--list-functions"]);
    assert_eq!(list.status.code(), Some(0));
    assert_eq!(stdout(&list).lines().count(), 21);
    assert_eq!(stdout(&gbo(&["list-functions"])), stdout(&list));
    let version = gbo(&["--version"]);
    assert_eq!(version.status.code(), Some(0));
    assert!(stdout(&version).starts_with("gbo "));
    let help = stdout(&gbo(&["run", "--help"]));
    for flag in [
        "--function",
        "--dim",
        "--mode",
        "--oob",
        "--seed",
        "--out",
        "[default: prime]",
        "[env: GBO_SEED=]",
    ] {
        assert!(help.contains(flag), "{flag} missing from:\n{help}");
    }
    assert!(Path::new(env!("CARGO_BIN_EXE_gbo")).exists());
}
