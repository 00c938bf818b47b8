use std::process::{Command, Output};

fn canalrec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_canalrec")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn fermat_cubic_exits_with_not_canal() {
    let o = canalrec(&["recognize", "x^3+y^3+z^3-1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("verdict: NOT_CANAL"));
}

#[test]
fn cylinder_json_report() {
    let o = canalrec(&["recognize", "y^2+z^2-1", "--json", "--seed", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "RATIONAL_CANAL");
    assert_eq!(v["cyclicity"], 0);
}

#[test]
fn sphere_is_referred() {
    assert_eq!(canalrec(&["recognize", "x^2+y^2+z^2-1"]).status.code(), Some(2));
}

#[test]
fn budget_exit_code() {
    let o = canalrec(&["recognize", "x^2+y^2+z^2+1", "--height-bound", "5"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn example1_with_point_and_plane() {
    let o = canalrec(&[
        "recognize",
        "x^3+x*y^2+x*z^2+2*x^2+3*y^2+z^2-5*x-6",
        "--point",
        "3/2,0,3/2",
        "--plane",
        "1,0,1,-3",
        "--verify",
        "full",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("corresponding point (1, 0, 2)"));
    assert!(out.contains("MAT rational: true"));
}

#[test]
fn input_from_file() {
    let path = std::env::temp_dir().join(format!("canalrec-{}.txt", std::process::id()));
    std::fs::write(&path, "y**2 + z**2 - 1\n").unwrap();
    let arg = format!("@{}", path.display());
    let o = canalrec(&["recognize", &arg]);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn input_errors_exit_64() {
    let o = canalrec(&["recognize", "x^^2"]);
    assert_eq!(o.status.code(), Some(64));
    assert!(String::from_utf8_lossy(&o.stderr).contains("offset 2"));
    assert_eq!(canalrec(&["recognize", "x+y", "--point", "1,2"]).status.code(), Some(64));
    assert_eq!(canalrec(&["recognize", "x^2+y^2+z^2-1", "--point", "0,0,0"]).status.code(), Some(64));
    assert_eq!(canalrec(&["recognize", "@/nonexistent/file"]).status.code(), Some(64));
    assert_eq!(canalrec(&["recognize", "5"]).status.code(), Some(64));
    assert_eq!(canalrec(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(canalrec(&["forge", "--spine", "t,0", "--R", "1"]).status.code(), Some(64));
}

#[test]
fn forge_cylinder() {
    let o = canalrec(&["forge", "--spine", "t,0,0", "--R", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "y^2 + z^2 - 1");
}

#[test]
fn forge_then_recognize() {
    let o = canalrec(&["forge", "--spine", "t,t^2,0", "--R", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let text = v["text"].as_str().unwrap();
    let r = canalrec(&["recognize", text, "--json"]);
    assert_eq!(r.status.code(), Some(0));
    let rv: serde_json::Value = serde_json::from_slice(&r.stdout).unwrap();
    assert_eq!(rv["section_genus"], 2);
}
