//! Command-line behaviour: output formats, exit codes and sweeps.

use std::process::Command;
use std::time::Instant;

use hydrocomplex::cli::output::{StateRecord, STATE_COLUMNS};
use hydrocomplex::cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hydrocomplex").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> Vec<StateRecord> {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let (code, out, err) = call(&a);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn csv_rows(text: &str) -> Vec<csv::StringRecord> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    r.records().map(|x| x.unwrap()).collect()
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hydrocomplex"))
}

#[test]
fn hydrogen_ground_state_momentum() {
    let r = json(&[
        "compute", "--D", "3", "--n", "1", "--l", "0", "--space", "momentum",
    ]);
    assert_eq!(r.len(), 1);
    assert!((r[0].complexity - 2.3545).abs() < 1e-4);
}

#[test]
fn two_dimensional_ground_state_position() {
    let r = json(&[
        "compute", "--D", "2", "--n", "1", "--l", "0", "--space", "position",
    ]);
    assert!((r[0].complexity - 1.8473).abs() < 1e-4);
}

#[test]
fn functional_and_oracle_agree() {
    let base = ["compute", "--D", "3", "--n", "2", "--mu", "1,1", "--method"];
    let f = json(&[&base[..], &["functional"]].concat());
    let o = json(&[&base[..], &["oracle"]].concat());
    for (a, b) in f.iter().zip(&o) {
        assert!((a.complexity / b.complexity - 1.0).abs() < 1e-6);
    }
}

#[test]
fn json_round_trip() {
    for args in [
        vec!["compute", "--D", "5", "--n", "3", "--state", "circular"],
        vec!["compute", "--D", "4", "--n", "4", "--mu", "2,1,-1"],
        vec![
            "compute", "--D", "3", "--n", "3", "--mu", "1,0", "--method", "oracle", "--Z", "3",
        ],
    ] {
        for r in json(&args) {
            let c = r.disequilibrium * r.entropy_total.exp();
            assert!((c - r.complexity).abs() <= 1e-12 * r.complexity);
            assert!(r.converged && !r.formulas.is_empty());
        }
    }
}

#[test]
fn invalid_state_names_the_inequality() {
    let (code, out, err) = call(&["compute", "--D", "3", "--n", "2", "--mu", "2,0"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("n-1"), "{err}");
    let (code, _, err) = call(&["compute", "--D", "4", "--n", "3", "--mu", "1,2,0"]);
    assert_eq!(code, 1);
    assert!(err.contains(">="), "{err}");
}

#[test]
fn closed_form_needs_ground_or_circular_state() {
    let (code, _, err) = call(&[
        "compute", "--D", "3", "--n", "3", "--mu", "1,0", "--method", "closed",
    ]);
    assert_eq!(code, 1);
    assert!(err.contains("closed form"), "{err}");
}

#[test]
fn unreachable_tolerance_exits_with_quadrature_code() {
    let o = bin()
        .args([
            "compute",
            "--D",
            "3",
            "--n",
            "3",
            "--mu",
            "1,0",
            "--method",
            "functional",
        ])
        .env("HYDRO_QUAD_RELTOL", "1e-300")
        .output()
        .unwrap();
    assert_eq!(
        o.status.code(),
        Some(2),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert!(o.stdout.is_empty());
}

#[test]
fn csv_header_is_fixed() {
    let (code, out, _) = call(&[
        "compute",
        "--format",
        "csv",
        "--space",
        "momentum",
        "--n",
        "2",
        "--D",
        "3",
        "--method",
        "functional",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next().unwrap(), STATE_COLUMNS.join(","));
    let (_, out2, _) = call(&[
        "compute",
        "--method",
        "functional",
        "--D",
        "3",
        "--space",
        "momentum",
        "--format",
        "csv",
        "--n",
        "2",
    ]);
    assert_eq!(out, out2);
}

fn complexity_table(out: &str) -> Vec<(usize, u32, String, f64)> {
    csv_rows(out)
        .iter()
        .map(|r| {
            (
                r[0].parse().unwrap(),
                r[2].parse().unwrap(),
                r[4].to_string(),
                r[10].parse().unwrap(),
            )
        })
        .collect()
}

#[test]
fn sweep_reproduces_the_n_ordering() {
    let (code, out, _) = call(&["sweep", "--D", "2..10", "--n", "1..3"]);
    assert_eq!(code, 0);
    let rows = complexity_table(&out);
    assert_eq!(rows.len(), 9 * 3 * 2);
    for d in 2..=10 {
        for sp in ["position", "momentum"] {
            let c: Vec<f64> = (1..=3)
                .map(|n| {
                    rows.iter()
                        .find(|r| r.0 == d && r.1 == n && r.2 == sp)
                        .unwrap()
                        .3
                })
                .collect();
            assert!(c[2] < c[1] && c[1] < c[0], "D={d} {sp}: {c:?}");
        }
    }
}

#[test]
fn sweep_decreasing_in_n() {
    for d in ["2", "5", "15"] {
        let (_, out, _) = call(&["sweep", "--D", d, "--n", "1..15", "--space", "position"]);
        let c: Vec<f64> = complexity_table(&out).iter().map(|r| r.3).collect();
        assert_eq!(c.len(), 15);
        assert!(c.windows(2).all(|w| w[1] < w[0]), "D={d}");
    }
}

#[test]
fn single_point_sweep_equals_compute() {
    let (_, sweep, _) = call(&["sweep", "--D", "4", "--n", "3", "--method", "functional"]);
    let (_, compute, _) = call(&[
        "compute",
        "--D",
        "4",
        "--n",
        "3",
        "--state",
        "circular",
        "--method",
        "functional",
        "--format",
        "csv",
    ]);
    assert_eq!(sweep, compute);
}

#[test]
fn sweep_is_deterministic_and_writes_files() {
    let dir = std::env::temp_dir().join(format!("hydrocomplex-sweep-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("grid.csv");
    let p = path.to_str().unwrap();
    let args = [
        "sweep", "--D", "2..6", "--n", "1..4", "--method", "oracle", "--out", p,
    ];
    assert_eq!(call(&args).0, 0);
    let first = std::fs::read_to_string(&path).unwrap();
    assert_eq!(call(&args).0, 0);
    assert_eq!(first, std::fs::read_to_string(&path).unwrap());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn sweep_marks_failed_rows_and_continues() {
    let o = bin()
        .args([
            "sweep",
            "--D",
            "3",
            "--n",
            "1..2",
            "--method",
            "functional",
            "--space",
            "position",
        ])
        .env("HYDRO_QUAD_RELTOL", "1e-300")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let rows = csv_rows(&String::from_utf8(o.stdout).unwrap());
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().any(|r| &r[12] == "false"));
    assert!(rows
        .iter()
        .filter(|r| &r[12] == "false")
        .all(|r| &r[10] == "NaN"));
    assert!(!o.stderr.is_empty());
}

#[test]
fn digits_override() {
    let (_, out, _) = call(&[
        "sweep", "--D", "2", "--n", "1", "--space", "position", "--digits", "5",
    ]);
    let rows = csv_rows(&out);
    assert_eq!(&rows[0][10], "1.8473e0");
}

#[test]
fn radial_density_rows() {
    let (code, out, _) = call(&[
        "sweep",
        "--D",
        "2",
        "--n",
        "1..4",
        "--radial-density",
        "--r-max",
        "60",
        "--r-points",
        "3001",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next().unwrap(), "D,n,r,radial_density");
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 4 * 3001);
    for n in 1..=4 {
        let pts: Vec<(f64, f64)> = rows
            .iter()
            .filter(|r| r[1].parse::<u32>().unwrap() == n)
            .map(|r| (r[2].parse().unwrap(), r[3].parse().unwrap()))
            .collect();
        let h = pts[1].0 - pts[0].0;
        let mass: f64 = pts.iter().map(|p| p.1).sum::<f64>() * h;
        assert!((mass - 1.0).abs() < 1e-3, "n={n}: {mass}");
    }
}

fn limits_json(args: &[&str]) -> Vec<serde_json::Value> {
    let mut a = vec!["limits"];
    a.extend_from_slice(args);
    a.extend(["--format", "json"]);
    let (code, out, err) = call(&a);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn limits_tables() {
    let r = limits_json(&[
        "--limit",
        "rydberg",
        "--quantity",
        "position",
        "--D",
        "3",
        "--at",
        "200",
    ]);
    assert!((r[0]["ratio"].as_f64().unwrap() - 1.0).abs() < 0.02);
    let r = limits_json(&[
        "--limit",
        "dimensional",
        "--quantity",
        "momentum",
        "--n",
        "1",
        "--at",
        "200",
    ]);
    assert!((r[0]["log_ratio"].as_f64().unwrap() - 1.0).abs() < 0.05);
    let r = limits_json(&[
        "--limit",
        "rydberg",
        "--quantity",
        "product",
        "--D",
        "2",
        "--at",
        "10,100",
    ]);
    let half_e = (std::f64::consts::E / 2.0).ln();
    for row in &r {
        assert!((row["asymptotic_ln"].as_f64().unwrap() - half_e).abs() < 1e-15);
    }
    let (code, out, _) = call(&["limits", "--limit", "dimensional", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(
        out.lines().next().unwrap(),
        "limit,quantity,n,D,exact_ln,asymptotic_ln,log_ratio,ratio"
    );
}

#[test]
fn quick_validation_passes_fast() {
    let t = Instant::now();
    let (code, out, _) = call(&["validate", "--quick"]);
    assert_eq!(code, 0, "{out}");
    assert!(t.elapsed().as_secs_f64() < 10.0);
    assert!(!out.contains("FAIL"));
}

#[test]
fn alt_exponent_fails_validation() {
    let (code, out, _) = call(&["validate", "--quick", "--alt-exponent"]);
    assert_eq!(code, 3);
    assert!(
        out.lines()
            .any(|l| l.starts_with("FAIL ground-state disequilibrium")),
        "{out}"
    );
}

#[test]
fn usage_errors() {
    assert_eq!(call(&["compute", "--D", "3"]).0, 1);
    assert_eq!(
        call(&["compute", "--D", "3", "--n", "2", "--mu", "1,1", "--l", "1"]).0,
        1
    );
    assert_eq!(call(&["sweep", "--D", "5..2"]).0, 1);
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("compute"));
}
