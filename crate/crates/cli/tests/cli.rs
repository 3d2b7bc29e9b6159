use std::path::PathBuf;
use std::process::{Command, Output};

fn surface(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "surfaces", &format!("{name}.surf")].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_front-atlas"))
        .args(args)
        .env_remove("FRONT_ATLAS_ORDER")
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut a = args.to_vec();
    a.push("--json");
    let o = run(&a);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn help_and_usage_errors() {
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["frobnicate"])), 1);
    assert_eq!(code(&run(&[])), 1);
    assert_eq!(code(&run(&["classify", "/nonexistent.surf"])), 1);
    assert_eq!(code(&run(&["classify", &surface("quartic_edge"), "--at", "zero"])), 1);
}

#[test]
fn parse_error_exit_code() {
    let dir = std::env::temp_dir().join(format!("front-atlas-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.surf");
    std::fs::write(&bad, "f = (u, v +, 0)").unwrap();
    let o = run(&["classify", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("1:12"));
}

#[test]
fn precondition_and_numerical_exit_codes() {
    // Not parabolic on the edge away from the origin.
    assert_eq!(code(&run(&["contact", &surface("transverse_edge"), "--at", "0.2,0"])), 3);
    assert_eq!(code(&run(&["trace", &surface("quartic_edge"), "--at", "0.2,0.1"])), 3);
    assert_eq!(code(&run(&["height", &surface("quartic_edge")])), 3);
    // The plane's Gauss map has no principal direction.
    assert_eq!(code(&run(&["gauss", &surface("plane")])), 4);
}

#[test]
fn verbs_report_expected_types() {
    let v = json(&["classify", &surface("swallowtail")]);
    assert_eq!(v["singularity"]["class"], "swallowtail");
    let v = json(&["gauss", &surface("graph_lips")]);
    assert_eq!(v["gauss"]["tag"], "lips");
    let v = json(&["contact", &surface("quartic_edge")]);
    assert_eq!(v["contact"], "2-point contact");
    let v = json(&["height", &surface("swallowtail_d4_minus")]);
    assert_eq!(v["height"]["d4_tag"], "D4minus");
    let v = json(&["report", &surface("quartic_edge"), "--at", "-0.1,0"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["point"][0], -0.1);
}

#[test]
fn text_output_is_flat() {
    let o = run(&["contact", &surface("quartic_edge")]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert!(s.lines().any(|l| l == "contact = 2-point contact"), "{s}");
    assert!(s.lines().all(|l| l.contains(" = ")));
}

#[test]
fn trace_csv() {
    let o = run(&["trace", &surface("quartic_edge"), "--field", "kappa", "--step", "0.05", "--count", "3"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    let mut lines = s.lines();
    assert_eq!(lines.next(), Some("u,v,residual"));
    let rows: Vec<Vec<f64>> = lines.map(|l| l.split(',').map(|x| x.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 7);
    for r in rows {
        assert!((r[1] - 12.0 * r[0] * r[0]).abs() < 0.02 * r[0].abs().max(1e-3));
    }
}

#[test]
fn order_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_front-atlas"))
        .args(["--show-config", "--json"])
        .env("FRONT_ATLAS_ORDER", "8")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["config"]["order"], 8);
    let v = json(&["--show-config", "--order", "5"]);
    assert_eq!(v["config"]["order"], 5);
    // The override reaches evaluation, past the file's default order.
    let o = Command::new(env!("CARGO_BIN_EXE_front-atlas"))
        .args(["report", &surface("swallowtail_d4_plus"), "--json"])
        .env("FRONT_ATLAS_ORDER", "9")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["order"], 9);
    assert_eq!(v["height"]["value"]["d4_tag"], "D4plus");
}

#[test]
fn corpus_is_reproducible() {
    let a = stdout(&run(&["corpus", "--kind", "first", "--count", "3", "--seed", "4"]));
    let b = stdout(&run(&["corpus", "--kind", "first", "--count", "3", "--seed", "4"]));
    assert_eq!(a, b);
    assert_eq!(a.matches("f = (").count(), 3);
    assert_eq!(code(&run(&["corpus", "--kind", "first", "--count", "0"])), 1);
}
