use std::path::PathBuf;
use std::process::{Command, Output};

use troplift::fixtures::{fixture, Fixture, FIXTURE_NAMES};
use troplift::lifts::LiftCertificate;
use troplift::membership::MembershipVerdict;
use troplift::oracle::SuiteReport;
use troplift::trees::TreeJson;
use troplift::tropical::{TropDetResult, TropMatrix};

fn troplift(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_troplift"))
        .args(args)
        .env_remove("TROPLIFT_TRUNC")
        .env_remove("TROPLIFT_ENUM_BOUND")
        .env_remove("TROPLIFT_SEED")
        .env_remove("TROPLIFT_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn fixture_file(name: &str) -> String {
    let path = scratch(&format!("{name}.json"));
    let o = troplift(&["fixtures", name, "--out", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path.to_str().unwrap().to_string()
}

#[test]
fn ex52_membership_exit_codes() {
    let f = fixture_file("ex52");
    let o = troplift(&["member", "--variety", "sym_corank1", "--mode", "C+", "--in", &f]);
    assert_eq!(o.status.code(), Some(0));
    let v: MembershipVerdict = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.verdict);
    let o = troplift(&["member", "--variety", "sym_corank1", "--mode", "R+", "--in", &f]);
    assert_eq!(o.status.code(), Some(1));
    let v: MembershipVerdict = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!v.verdict);
    assert_eq!(serde_json::to_value(v.reason.kind).unwrap(), "MinorSignsOpposed");
}

#[test]
fn eq1_tree_as_dot() {
    let f = fixture_file("eq1");
    let o = troplift(&["tree", "--in", &f, "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("graph bicolored {"));
    assert_eq!(dot.matches("shape=circle, color=red").count(), 3);
    assert_eq!(dot.matches("shape=circle, color=blue").count(), 3);
    // one internal node joined to three others by unit edges
    assert_eq!(dot.matches("[label=\"1\"];").count(), 3);
    let o = troplift(&["tree", "--in", &f]);
    let t: TreeJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(serde_json::to_string_pretty(&t).unwrap() + "\n", stdout(&o));
}

#[test]
fn fixtures_round_trip() {
    for name in FIXTURE_NAMES {
        let o = troplift(&["fixtures", name]);
        assert!(o.status.success());
        let parsed: Fixture = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(parsed, fixture(name).unwrap(), "{name}");
    }
    let dir = scratch("all");
    let o = troplift(&["fixtures", "--all", dir.to_str().unwrap()]);
    assert!(o.status.success());
    for name in FIXTURE_NAMES {
        assert!(dir.join(format!("{name}.json")).exists());
    }
    assert_eq!(troplift(&["fixtures", "fig9"]).status.code(), Some(2));
}

#[test]
fn lift_then_verify() {
    let f = fixture_file("fig4a");
    let cert_path = scratch("fig4a_cert.json");
    let o = troplift(&["lift", "--variety", "sym_rank2", "--mode", "R+", "--in", &f, "--out", cert_path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&cert_path).unwrap();
    let cert: LiftCertificate = serde_json::from_str(&text).unwrap();
    assert!(cert.valid);
    assert_eq!(serde_json::to_string_pretty(&cert).unwrap() + "\n", text);
    let o = troplift(&["verify", "--in", cert_path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));

    let mut bad = cert.clone();
    bad.lift[0][1] = bad.lift[0][1].shift(&troplift::exact::rational::int(1));
    let bad_path = scratch("fig4a_bad.json");
    std::fs::write(&bad_path, serde_json::to_string(&bad).unwrap()).unwrap();
    assert_eq!(troplift(&["verify", "--in", bad_path.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn lift_of_non_member_is_negative() {
    let f = fixture_file("eq1");
    let o = troplift(&["lift", "--variety", "rank2", "--mode", "R+", "--in", &f]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["lifted"], false);
    assert_eq!(v["reason"], "NotBarvinok2");
}

#[test]
fn trop_det_round_trip() {
    let f = fixture_file("ex52");
    for extra in [&[][..], &["--symmetric"][..]] {
        let mut args = vec!["trop-det", "--in", &f];
        args.extend_from_slice(extra);
        let o = troplift(&args);
        assert_eq!(o.status.code(), Some(0));
        let r: TropDetResult = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(serde_json::to_string_pretty(&r).unwrap() + "\n", stdout(&o));
    }
}

#[test]
fn rank_report() {
    let f = fixture_file("cocircuit-ag23");
    let v: serde_json::Value = serde_json::from_str(&stdout(&troplift(&["rank", "--in", &f]))).unwrap();
    assert_eq!(v["tropical_rank"], 3);
    assert!(v.get("barvinok_rank_at_most_2").is_none());
}

#[test]
fn polytope_and_table() {
    let o = troplift(&["polytope", "--table2"]);
    let rows: Vec<troplift::newton::Table2Row> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rows, troplift::newton::table2_rows());
    let v: serde_json::Value = serde_json::from_str(&stdout(&troplift(&["polytope", "--n", "4"]))).unwrap();
    assert_eq!(v["classes"].as_array().unwrap().len(), 17);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 14);
}

#[test]
fn verify_suite_report() {
    let o = troplift(&["verify-suite", "--seed", "3", "--max-n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let r: SuiteReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((r.seed, r.max_n, r.disagreements), (3, 3, 0));
    assert!(r.total > 0);
}

#[test]
fn size_limits() {
    assert_eq!(troplift(&["polytope", "--n", "9"]).status.code(), Some(3));
    assert_eq!(troplift(&["polytope", "--enum-bound", "12"]).status.code(), Some(3));
    let big = TropMatrix::zeros(9, 9);
    let path = scratch("zeros9.json");
    std::fs::write(&path, serde_json::to_string(&big).unwrap()).unwrap();
    let o = troplift(&["trop-det", "--in", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn input_errors() {
    let path = scratch("garbage.json");
    std::fs::write(&path, "[1, 2").unwrap();
    assert_eq!(troplift(&["rank", "--in", path.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(troplift(&["member", "--variety", "rank7", "--mode", "C"]).status.code(), Some(2));
    let f = fixture_file("eq1");
    assert_eq!(troplift(&["rank", "--in", &f, "--format", "dot"]).status.code(), Some(2));
    assert_eq!(troplift(&["rank", "--in", &f, "--trunc", "x"]).status.code(), Some(2));
}

#[test]
fn flags_override_environment() {
    let f = fixture_file("eq1");
    let run = |env: Option<&str>, flag: Option<&str>| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_troplift"));
        c.args(["rank", "--in", &f]);
        if let Some(e) = env {
            c.env("TROPLIFT_FORMAT", e);
        }
        if let Some(fl) = flag {
            c.args(["--format", fl]);
        }
        String::from_utf8(c.output().unwrap().stdout).unwrap()
    };
    assert_eq!(run(Some("text"), None), "2\n");
    assert!(run(Some("text"), Some("json")).starts_with('{'));
    assert!(run(None, None).starts_with('{'));
}
