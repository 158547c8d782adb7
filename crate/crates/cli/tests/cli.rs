use std::path::PathBuf;
use std::process::{Command, Output};

use jsonschema::JSONSchema;
use serde_json::Value;

fn m0chow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_m0chow")).args(args).output().expect("spawn m0chow")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn schema_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../schema")
}

fn load(name: &str) -> Value {
    let text = std::fs::read_to_string(schema_dir().join(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
    serde_json::from_str(&text).unwrap()
}

/// Replace file references (`{"$ref": "x.schema.json"}`) with the referenced document.
fn inline_refs(v: &mut Value) {
    match v {
        Value::Object(map) => {
            if let Some(Value::String(r)) = map.get("$ref") {
                if !r.starts_with('#') {
                    let mut doc = load(r);
                    if let Value::Object(m) = &mut doc {
                        m.remove("$schema");
                    }
                    inline_refs(&mut doc);
                    *v = doc;
                    return;
                }
            }
            map.values_mut().for_each(inline_refs);
        }
        Value::Array(items) => items.iter_mut().for_each(inline_refs),
        _ => {}
    }
}

fn assert_valid(schema: &str, text: &str) -> Value {
    let mut s = load(schema);
    inline_refs(&mut s);
    let compiled = JSONSchema::compile(&s).expect("schema compiles");
    let instance: Value = serde_json::from_str(text).expect("output is JSON");
    if let Err(errors) = compiled.validate(&instance) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("{schema}: {msgs:?}");
    }
    instance
}

#[test]
fn present_twisted_cubic_text() {
    let out = m0chow(&["present", "--r", "2", "--d", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("r = 2, d = 3: Z[c1, c2] / (4 generators)\n"));
    for poly in ["9c1^2 - 27c2", "8c1^3 - 27c1*c2"] {
        assert!(text.contains(poly), "{poly} missing from\n{text}");
    }
}

#[test]
fn present_grassmannian_point() {
    let out = m0chow(&["--format", "json", "present", "--r", "0", "--d", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = assert_valid("present.schema.json", &stdout(&out));
    let texts: Vec<&str> =
        v["results"][0]["generators"].as_array().unwrap().iter().map(|g| g["text"].as_str().unwrap()).collect();
    assert_eq!(texts, ["1", "c1"]);
}

#[test]
fn alpha_r0_is_binomial() {
    let out = m0chow(&["alpha", "--i", "2", "--k", "0", "--r", "0", "--d", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "alpha_{2,0}^{0,5} = 10\n");
}

#[test]
fn alpha_json_schema() {
    let out = m0chow(&["--format", "json", "alpha", "--i", "1..3", "--k", "0..1", "--r", "1..2", "--d", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = assert_valid("alpha.schema.json", &stdout(&out));
    assert_eq!(v["results"].as_array().unwrap().len(), 2 * 3 * 2);
}

#[test]
fn latex_present() {
    let out = m0chow(&["--format", "latex", "present", "--r", "2", "--d", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("\\cong \\mathbb{Z}[c_1, c_2]"));
    assert!(text.contains("9c_1^{2} - 27c_2") || text.contains("9 c_1^{2} - 27 c_2"), "{text}");
}

#[test]
fn even_degree_is_input_error() {
    let out = m0chow(&["verify", "identities", "--d", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("even"));
    assert_eq!(m0chow(&["present", "--r", "1", "--d", "4"]).status.code(), Some(2));
}

#[test]
fn bad_index_is_input_error() {
    assert_eq!(m0chow(&["alpha", "--i", "5", "--k", "0", "--r", "1", "--d", "3"]).status.code(), Some(2));
    assert_eq!(m0chow(&["alpha", "--i", "1", "--k", "3", "--r", "1", "--d", "3"]).status.code(), Some(2));
    assert_eq!(m0chow(&["gcd-binomials", "--i", "1"]).status.code(), Some(2));
}

#[test]
fn unparsable_arguments_exit_2() {
    assert_eq!(m0chow(&["present", "--r", "x", "--d", "3"]).status.code(), Some(2));
    assert_eq!(m0chow(&["verify", "nonsense"]).status.code(), Some(2));
}

#[test]
fn verify_passes_and_validates() {
    for kind in ["cross", "identities", "reduction", "conjecture"] {
        let out = m0chow(&["--format", "json", "verify", kind, "--r", "1..2", "--d", "1..5"]);
        assert_eq!(out.status.code(), Some(0), "{kind}: {}", String::from_utf8_lossy(&out.stdout));
        let v = assert_valid("verify.schema.json", &stdout(&out));
        assert_eq!(v["kind"], kind);
        assert_eq!(v["passed"], true);
    }
}

#[test]
fn failing_check_exits_1() {
    // At r = 0 the candidate set contains a unit, so minimality fails.
    let out = m0chow(&["verify", "conjecture", "--r", "0", "--d", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).lines().last().unwrap().starts_with("FAIL verify conjecture"));
}

#[test]
fn gcd_binomials() {
    let out = m0chow(&["gcd-binomials", "--i", "6..8"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "i = 6: gcd 1, not a prime power\ni = 7: gcd 7, prime power of 7\ni = 8: gcd 2, prime power of 2\n"
    );
    let out = m0chow(&["--format", "json", "gcd-binomials", "--i", "2..40"]);
    let v = assert_valid("gcd-binomials.schema.json", &stdout(&out));
    assert!(v["results"].as_array().unwrap().iter().all(|r| r["consistent"] == true));
}

#[test]
fn output_is_thread_independent() {
    let args = ["--format", "json", "present", "--r", "0..3", "--d", "1..7", "--full"];
    let one = m0chow(&[&["--threads", "1"], &args[..]].concat());
    let four = m0chow(&[&["--threads", "4"], &args[..]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_m0chow"))
        .env("M0CHOW_THREADS", "2")
        .args(args)
        .output()
        .unwrap();
    assert_eq!(one.stdout, env.stdout);
}

#[test]
fn out_file() {
    let path = std::env::temp_dir().join(format!("m0chow-out-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let out = m0chow(&["--format", "json", "--out", p, "present", "--r", "2", "--d", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    let direct = m0chow(&["--format", "json", "present", "--r", "2", "--d", "3"]);
    assert_eq!(written, stdout(&direct));
    assert_valid("present.schema.json", &written);
}

#[test]
fn timing_goes_to_stderr() {
    let plain = m0chow(&["present", "--r", "1", "--d", "3"]);
    let timed = m0chow(&["--timing", "present", "--r", "1", "--d", "3"]);
    assert_eq!(plain.stdout, timed.stdout);
    assert!(String::from_utf8_lossy(&timed.stderr).contains("elapsed"));
}
