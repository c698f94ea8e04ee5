use std::path::PathBuf;
use std::process::{Command, Output};

fn table_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../tables/c12.tbl")
}

fn cloops(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cloops")).args(args).output().expect("spawn cloops")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn demo_prints_golden_lines() {
    let o = cloops(&["demo"]);
    assert!(o.status.success());
    let out = stdout(&o);
    for line in [
        "alpha1S2 = (0 1 2)(3 4 5)(6 7 8)(9 10 11)",
        "beta1T2 = (0 2 1)(3 5 4)(6 8 7)(9 11 10)",
        "gamma1R2 = ()",
        "forward = (R1, R2, R0)",
        "alpha = R10 = (0 10 1 11 2 9)(3 7 4 8 5 6)",
        "verified = true",
    ] {
        assert!(out.lines().any(|l| l == line), "missing {line:?} in\n{out}");
    }
}

#[test]
fn check_single_identity() {
    let t = table_path();
    let o = cloops(&["check", "--table", t.to_str().unwrap(), "--identity", "c"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "order = 12\nidentity element = 0\nc holds=true\n");

    let o = cloops(&["check", "--table", t.to_str().unwrap(), "--identity", "steiner"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("steiner holds=false witness=(1) clause x^2=e"));
}

#[test]
fn trivial_autotopism_for_identity_element() {
    let t = table_path();
    let o = cloops(&["autotopism", "--table", t.to_str().unwrap(), "--x", "0"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("trivial = true\n"));
    assert!(out.contains("forward = (R0, R0, R0)\n"));
}

#[test]
fn exit_codes() {
    let t = table_path();
    let o = cloops(&["autotopism", "--table", t.to_str().unwrap(), "--x", "12"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("ERROR "));

    assert_eq!(cloops(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(cloops(&["check", "--table", "/does/not/exist"]).status.code(), Some(1));
}

#[test]
fn parastrophe_and_sts_with_files() {
    let dir = std::env::temp_dir().join(format!("cloops-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let t = table_path();

    let o = cloops(&["parastrophe", "--table", t.to_str().unwrap(), "--kind", "star"]);
    assert!(o.status.success());
    let star = dir.join("star.tbl");
    std::fs::write(&star, stdout(&o)).unwrap();
    let o = cloops(&["parastrophe", "--table", star.to_str().unwrap(), "--kind", "star"]);
    let original = cloops::magma::read_table_file(&std::fs::read_to_string(&t).unwrap()).unwrap();
    assert_eq!(cloops::magma::read_table_file(&stdout(&o)).unwrap(), original);

    let bases = dir.join("bases.txt");
    std::fs::write(&bases, "# identity and the principal autotopism\n() ; () ; ()\n\n(0 1 2)(3 4 5)(6 7 8)(9 10 11) ; (0 2 1)(3 5 4)(6 8 7)(9 11 10) ; ()\n").unwrap();
    let o = cloops(&["sts", "--table", t.to_str().unwrap(), "--bases", bases.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    assert!(out.contains("distinct_members=pass"));
    assert!(out.contains("admissible = "));

    std::fs::write(&bases, "() ; ()\n").unwrap();
    let o = cloops(&["sts", "--table", t.to_str().unwrap(), "--bases", bases.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}
