use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use tempfile::TempDir;

fn cinkra(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cinkra"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn cinkra");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn ok_stdout(args: &[&str], stdin: Option<&str>) -> String {
    let out = cinkra(args, stdin);
    assert!(
        out.status.success(),
        "cinkra {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn minrep_six_has_dimension_sixteen() {
    let v = json(&ok_stdout(&["minrep", "6"], None));
    assert_eq!(v["dimension"], 16);
    assert_eq!(v["family"], "d6");
    assert_eq!(v["n"], 6);
}

#[test]
fn one_cube_gives_the_swap_matrix() {
    let cube = ok_stdout(&["cube", "1"], None);
    let v = json(&ok_stdout(&["matrices"], Some(&cube)));
    assert_eq!(v["matrices"], json("[[[0,1],[1,0]]]"));
    assert_eq!(v["parity"], json(r#"["b","f"]"#));
}

#[test]
fn matrices_round_trip_through_files() {
    let dir = TempDir::new().unwrap();
    let cube = ok_stdout(&["cube", "3"], None);
    let cube_path = write(&dir, "cube.json", &cube);
    let mats_path = dir.path().join("mats.json");
    ok_stdout(
        &["matrices", "-i", &cube_path, "-o", mats_path.to_str().unwrap()],
        None,
    );
    let back = ok_stdout(&["from-matrices", "-i", mats_path.to_str().unwrap()], None);
    let a = json(&cube);
    let b = json(&back);
    assert_eq!(a["edges"], b["edges"]);
    assert_eq!(a["parity"], b["parity"]);
}

#[test]
fn toggled_dash_is_reported_but_exits_zero() {
    let mut g = json(&ok_stdout(&["cube", "3"], None));
    let first = &mut g["edges"][0]["dashed"];
    *first = Value::Bool(!first.as_bool().unwrap());
    let out = cinkra(&["validate"], Some(&g.to_string()));
    assert_eq!(out.status.code(), Some(0));
    let report = json(&String::from_utf8(out.stdout).unwrap());
    assert_eq!(report["valid"], false);
    let violations = report["violations"].as_array().unwrap();
    assert_eq!(violations.len(), 2);
    assert!(violations.iter().all(|v| v["rule"] == "dashing"));
}

#[test]
fn quotient_spec_and_recovered_code() {
    let spec = r#"{"n":4,"code":["1111"],"signs":"+"}"#;
    let g = ok_stdout(&["quotient"], Some(spec));
    assert_eq!(json(&g)["parity"].as_array().unwrap().len(), 8);
    let code = json(&ok_stdout(&["recover-code"], Some(&g)));
    assert_eq!(code["code"], json(r#"["1111"]"#));
    assert_eq!(code["doubly_even"], true);
}

#[test]
fn opposite_sign_quotients_are_not_isomorphic() {
    let dir = TempDir::new().unwrap();
    let plus = ok_stdout(&["quotient"], Some(r#"{"n":4,"code":["1111"],"signs":"+"}"#));
    let minus = ok_stdout(&["quotient"], Some(r#"{"n":4,"code":["1111"],"signs":"-"}"#));
    let a = write(&dir, "a.json", &plus);
    let b = write(&dir, "b.json", &minus);
    let v = json(&ok_stdout(&["iso", &a, &b], None));
    assert_eq!(v["isomorphic"], false);
    let switched = ok_stdout(&["switch", "--vertices", "1,4"], Some(&plus));
    let c = write(&dir, "c.json", &switched);
    let v = json(&ok_stdout(&["iso", &a, &c], None));
    assert_eq!(v["isomorphic"], true);
}

#[test]
fn cohomology_and_geometry_of_the_four_cube() {
    let cube = ok_stdout(&["cube", "4"], None);
    let r = json(&ok_stdout(&["cohomology"], Some(&cube)));
    assert_eq!((r["h0"].as_u64(), r["h1"].as_u64()), (Some(1), Some(0)));
    let s = json(&ok_stdout(&["geometrize", "--rainbow", "0,2,1,3"], Some(&cube)));
    assert_eq!(s["genus"], 1);
    assert_eq!(s["f"], 16);
}

#[test]
fn signature_cube_validates_and_gives_matrices() {
    let g = ok_stdout(&["cube", "2", "--signature", "1,1"], None);
    let r = json(&ok_stdout(&["validate", "--signature", "1,1"], Some(&g)));
    assert_eq!(r["valid"], true);
    let m = json(&ok_stdout(&["matrices", "--signature", "1,1"], Some(&g)));
    assert_eq!(m["signature"], json("[1,1]"));
    let back = ok_stdout(&["from-matrices"], Some(&m.to_string()));
    assert_eq!(json(&back)["edges"], json(&g)["edges"]);
}

#[test]
fn dot_export() {
    let cube = ok_stdout(&["cube", "2"], None);
    let dot = ok_stdout(&["export-dot"], Some(&cube));
    assert!(dot.starts_with("graph"));
    assert!(dot.contains("style=dashed"));
    assert_eq!(dot, ok_stdout(&["cube", "2", "--format", "dot"], None));
}

#[test]
fn codes_listing() {
    let v = json(&ok_stdout(&["codes", "8", "--max"], None));
    assert_eq!(v["dimension"], 4);
    assert_eq!(v["family"], "e8");
    let v = json(&ok_stdout(&["codes", "4", "--enumerate"], None));
    assert_eq!(v["count"], 2);
}

#[test]
fn exit_codes() {
    assert_eq!(cinkra(&["validate"], Some("{")).status.code(), Some(2));
    assert_eq!(cinkra(&["cube", "x"], None).status.code(), Some(2));
    let missing = Path::new("/nonexistent/graph.json").to_str().unwrap();
    assert_eq!(cinkra(&["validate", "-i", missing], None).status.code(), Some(2));
    assert_eq!(cinkra(&["codes", "12", "--enumerate"], None).status.code(), Some(4));
    assert_eq!(cinkra(&["minrep", "40"], None).status.code(), Some(4));
    let bad = r#"{"matrices":[[[1,0],[0,1]]],"parity":["b","f"]}"#;
    assert_eq!(cinkra(&["from-matrices"], Some(bad)).status.code(), Some(3));
    let g = ok_stdout(&["cube", "2"], None);
    assert_eq!(cinkra(&["cube", "3", "--signature", "1,1"], None).status.code(), Some(3));
    assert_eq!(cinkra(&["geometrize"], Some(&g)).status.code(), Some(3));
}
