//! End-to-end tests of the command-line interface, including validation of
//! the JSON outputs against the schemas shipped under `schemas/`.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_postlab"))
}

fn write_circuit(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(text.as_bytes()).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn schema_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../schemas")
        .canonicalize()
        .unwrap()
}

fn load_schema(name: &str) -> Value {
    let text = std::fs::read_to_string(schema_dir().join(name)).unwrap();
    serde_json::from_str(&text).unwrap()
}

// ---------------------------------------------------------------------------
// A validator for the JSON Schema subset the shipped schemas use.

fn validate(schema: &Value, value: &Value, path: &str) -> Result<(), String> {
    let obj = schema.as_object().ok_or("schema must be an object")?;
    if let Some(ty) = obj.get("type").and_then(|t| t.as_str()) {
        let ok = match ty {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "boolean" => value.is_boolean(),
            "integer" => value.is_i64() || value.is_u64(),
            "number" => value.is_number(),
            other => return Err(format!("unsupported type `{other}`")),
        };
        if !ok {
            return Err(format!("{path}: expected {ty}, got {value}"));
        }
    }
    if let Some(allowed) = obj.get("enum").and_then(|e| e.as_array()) {
        if !allowed.contains(value) {
            return Err(format!("{path}: {value} not in enum"));
        }
    }
    if let Some(pattern) = obj.get("pattern").and_then(|p| p.as_str()) {
        let s = value.as_str().ok_or(format!("{path}: pattern on non-string"))?;
        let re = regex::Regex::new(pattern).unwrap();
        if !re.is_match(s) {
            return Err(format!("{path}: `{s}` fails pattern {pattern}"));
        }
    }
    if let Some(min) = obj.get("minLength").and_then(|m| m.as_u64()) {
        let s = value.as_str().ok_or(format!("{path}: minLength on non-string"))?;
        if (s.len() as u64) < min {
            return Err(format!("{path}: shorter than {min}"));
        }
    }
    if let Some(min) = obj.get("minimum").and_then(|m| m.as_i64()) {
        let n = value.as_i64().ok_or(format!("{path}: minimum on non-integer"))?;
        if n < min {
            return Err(format!("{path}: {n} below {min}"));
        }
    }
    if let Some(object) = value.as_object() {
        if let Some(min) = obj.get("minProperties").and_then(|m| m.as_u64()) {
            if (object.len() as u64) < min {
                return Err(format!("{path}: fewer than {min} properties"));
            }
        }
        if let Some(max) = obj.get("maxProperties").and_then(|m| m.as_u64()) {
            if (object.len() as u64) > max {
                return Err(format!("{path}: more than {max} properties"));
            }
        }
        if let Some(required) = obj.get("required").and_then(|r| r.as_array()) {
            for key in required {
                let key = key.as_str().unwrap();
                if !object.contains_key(key) {
                    return Err(format!("{path}: missing required `{key}`"));
                }
            }
        }
        let props = obj.get("properties").and_then(|p| p.as_object());
        let additional = obj.get("additionalProperties");
        for (key, sub) in object {
            let sub_path = format!("{path}.{key}");
            if let Some(schema) = props.and_then(|p| p.get(key)) {
                validate(schema, sub, &sub_path)?;
            } else {
                match additional {
                    Some(Value::Bool(false)) => {
                        return Err(format!("{path}: unexpected property `{key}`"))
                    }
                    Some(Value::Bool(true)) | None => {}
                    Some(schema) => validate(schema, sub, &sub_path)?,
                }
            }
        }
    }
    if let (Some(items), Some(array)) = (obj.get("items"), value.as_array()) {
        for (i, item) in array.iter().enumerate() {
            validate(items, item, &format!("{path}[{i}]"))?;
        }
    }
    Ok(())
}

fn assert_valid(schema_name: &str, value: &Value) {
    let schema = load_schema(schema_name);
    if let Err(e) = validate(&schema, value, "$") {
        panic!("{schema_name} validation failed: {e}\nvalue: {value:#}");
    }
}

// ---------------------------------------------------------------------------

const AND_OR: &str = "base AND = tt 2 0b1000\nbase OR = tt 2 0b1110\ninput x1 x2\n\
                      g1 = AND(x1, x2)\ng2 = OR(g1, x2)\noutput g2\n";
const MAJ: &str = "base MAJ = (x&y)|(y&z)|(x&z)\ninput x y z\ng1 = MAJ(x, y, z)\noutput g1\n";
const D1_CIRCUIT: &str = "base F = (x&y)|(x&!z)|(y&!z)\ninput a b c\ng1 = F(a, b, c)\noutput g1\n";
const XOR_CHAIN: &str = "base XOR = tt 2 0b0110\ninput x1 x2 x3\ng1 = XOR(x1, x2)\n\
                         g2 = XOR(g1, x3)\noutput g2\n";
const UNSAT: &str = "base AND = tt 2 0b1000\nbase ZERO = tt 0 0b0\ninput x1\n\
                     g0 = ZERO()\ng1 = AND(x1, g0)\noutput g1\n";

#[test]
fn clone_of_reports_m2() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_circuit(&dir, "and_or.bc", AND_OR);
    let out = run(&["clone-of", f.to_str().unwrap()]);
    let json = stdout_json(&out);
    assert_eq!(json["clone"], "M2");
    assert_valid("clone.schema.json", &json);
}

#[test]
fn classify_eq_is_conp_complete() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_circuit(&dir, "and_or.bc", AND_OR);
    let out = run(&["classify", "--problem", "eq", f.to_str().unwrap()]);
    let json = stdout_json(&out);
    assert_eq!(json["label"], "CoNPComplete");
    assert_eq!(json["clone"], "M2");
    assert_valid("verdict.schema.json", &json);
}

#[test]
fn classify_every_problem_validates() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_circuit(&dir, "maj.bc", MAJ);
    for p in [
        "sat", "sat-star", "val", "eq", "iso", "fv", "efv", "audit", "usat", "enum", "enum-lex",
    ] {
        let out = run(&["classify", "--problem", p, f.to_str().unwrap()]);
        let json = stdout_json(&out);
        assert_valid("verdict.schema.json", &json);
    }
}

#[test]
fn solve_sat_and_exit_status() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_circuit(&dir, "and_or.bc", AND_OR);
    let out = run(&["solve", "--problem", "sat", f.to_str().unwrap()]);
    let json = stdout_json(&out);
    assert_eq!(json["answer"], true);
    assert_valid("decision.schema.json", &json);

    let u = write_circuit(&dir, "unsat.bc", UNSAT);
    let out = run(&["--exit-status", "solve", "--problem", "sat", u.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let json: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["answer"], false);
    assert_valid("decision.schema.json", &json);
}

#[test]
fn solve_frozen_variables() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_circuit(
        &dir,
        "and.bc",
        "base AND = tt 2 0b1000\ninput x1 x2\ng1 = AND(x1, x2)\noutput g1\n",
    );
    let out = run(&[
        "solve",
        "--problem",
        "fv",
        "--vars",
        "x1,x2",
        f.to_str().unwrap(),
    ]);
    let json = stdout_json(&out);
    assert_eq!(json["answer"], true);
    assert_valid("decision.schema.json", &json);
}

#[test]
fn solve_val_with_assignment() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_circuit(&dir, "maj.bc", MAJ);
    let out = run(&[
        "solve",
        "--problem",
        "val",
        "--assign",
        "101",
        f.to_str().unwrap(),
    ]);
    let json = stdout_json(&out);
    assert_eq!(json["answer"], true);
}

#[test]
fn solve_equivalence_of_two_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_circuit(
        &dir,
        "a.bc",
        "base OR = tt 2 0b1110\ninput x1 x2\ng1 = OR(x1, x2)\noutput g1\n",
    );
    let b = write_circuit(
        &dir,
        "b.bc",
        "base OR = tt 2 0b1110\ninput x1 x2\ng1 = OR(x2, x1)\noutput g1\n",
    );
    let out = run(&[
        "solve",
        "--problem",
        "eq",
        a.to_str().unwrap(),
        b.to_str().unwrap(),
    ]);
    let json = stdout_json(&out);
    assert_eq!(json["answer"], true);
    assert_eq!(json["method"], "NormalForm");
}

#[test]
fn enum_lex_is_sorted_and_valid() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_circuit(&dir, "xor.bc", XOR_CHAIN);
    let out = run(&["enum", "--order", "lex", "--stats", f.to_str().unwrap()]);
    let json = stdout_json(&out);
    assert_valid("enum.schema.json", &json);
    let sols: Vec<String> = json["solutions"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_string())
        .collect();
    let mut sorted = sols.clone();
    sorted.sort();
    assert_eq!(sols, sorted);
    assert_eq!(sols.len(), 4); // odd parity of three variables
    assert_eq!(json["stats"]["algorithm"], "Backtrack");
}

#[test]
fn enum_lex_refuses_hard_order() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_circuit(&dir, "d1.bc", D1_CIRCUIT);
    let out = run(&["enum", "--order", "lex", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("D1"), "stderr: {err}");

    // Unordered enumeration still works through the pairing algorithm.
    let out = run(&["enum", "--order", "any", "--stats", f.to_str().unwrap()]);
    let json = stdout_json(&out);
    assert_eq!(json["stats"]["algorithm"], "DualPairing");
    assert_eq!(json["solutions"].as_array().unwrap().len(), 4);
}

#[test]
fn gadget_taut_to_eq_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_circuit(&dir, "h.dnf", "x & y | !x | !y\n");
    let out = run(&["gadget", "taut-to-eq", f.to_str().unwrap()]);
    let json = stdout_json(&out);
    assert_eq!(json["verified"], true);
    assert_valid("gadget.schema.json", &json);
    // The emitted circuits parse back.
    for (_, text) in json["circuits"].as_object().unwrap() {
        postlab::circuit::parse(text.as_str().unwrap()).unwrap();
    }
}

#[test]
fn gadget_satstar_chain_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_circuit(
        &dir,
        "c.bc",
        "base G = x & (y | !z)\nbase ZERO = tt 0 0b0\ninput x1 x2\n\
         g1 = G(x1, x2, x2)\noutput g1\n",
    );
    let out = run(&["gadget", "satstar-chain", f.to_str().unwrap()]);
    let json = stdout_json(&out);
    assert_eq!(json["verified"], true);
    assert_valid("gadget.schema.json", &json);
}

#[test]
fn lattice_dot_contains_cover_edge() {
    let out = run(&["lattice", "--dot"]);
    let json = stdout_json(&out);
    assert_valid("lattice.schema.json", &json);
    let dot = json["dot"].as_str().unwrap();
    assert!(dot.contains("\"D2\" -> \"D1\""));

    let out = run(&["--plain", "lattice", "--dot", "--max-n", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("digraph"));
    assert!(text.contains("S02^2"));
}

#[test]
fn convert_to_wider_base() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_circuit(&dir, "and_or.bc", AND_OR);
    let target = write_circuit(
        &dir,
        "target.bc",
        "base G = x & (y | z)\nbase ONE = tt 0 0b1\ninput a\ng1 = G(a, a, a)\noutput g1\n",
    );
    let out = run(&[
        "convert",
        "--to",
        target.to_str().unwrap(),
        f.to_str().unwrap(),
    ]);
    let json = stdout_json(&out);
    let converted = postlab::circuit::parse(json["circuit"].as_str().unwrap()).unwrap();
    let original = postlab::circuit::parse(AND_OR).unwrap();
    assert_eq!(
        converted.all_sat().unwrap().len(),
        original.all_sat().unwrap().len()
    );
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_circuit(&dir, "broken.bc", "base AND = tt 2 0b1000\ninput x\noutput q\n");
    let out = run(&["clone-of", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let good = write_circuit(&dir, "maj.bc", MAJ);
    let out = run(&["classify", "--problem", "nonsense", good.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["clone-of", "/nonexistent/file.bc"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn brute_limit_exceeded_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    // A negated-implication base has no tractable unique-satisfiability
    // path, so the scan limit applies.
    let mut text = String::from("base NIMPL = tt 2 0b0010\ninput");
    for i in 0..22 {
        text.push_str(&format!(" v{i}"));
    }
    text.push_str("\ng1 = NIMPL(v0, v1)\noutput g1\n");
    let f = write_circuit(&dir, "wide.bc", &text);
    let out = bin()
        .args(["solve", "--problem", "usat", f.to_str().unwrap()])
        .env("POSTLAB_BRUTE_LIMIT", "20")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));

    // Raising the limit through the environment unlocks the scan.
    let out = bin()
        .args(["solve", "--problem", "usat", f.to_str().unwrap()])
        .env("POSTLAB_BRUTE_LIMIT", "23")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}
