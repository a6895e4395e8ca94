use std::process::Command;

use atilde_cli::{run, EXIT_CAP_EXCEEDED, EXIT_OK, EXIT_USAGE};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("atilde").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn fixture(name: &str) -> String {
    format!("{}/../core/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn scratch_dir(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("atilde-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    dir
}

#[test]
fn table_row_ten() {
    let (code, out, _) = call(&["table", "--n-max", "10"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.lines().any(|l| l == "10 | 4862 3868 3432 3240 1651"));
    assert_eq!(out.lines().count(), 9);
}

#[test]
fn count_variants() {
    assert_eq!(call(&["count", "--r", "0", "--s", "4"]).1, "6\n");
    assert_eq!(call(&["count", "--r", "0", "--s", "5"]).1, "26\n");
    assert_eq!(call(&["count", "--r", "2", "--s", "2"]).1, "4\n");
    assert_eq!(call(&["count", "--r", "3", "--s", "5"]).1, "315\n");
    assert_eq!(call(&["count", "--r", "5", "--s", "3"]).1, "315\n");
    assert_eq!(call(&["count", "--r", "2", "--s", "1", "--r2", "1", "--s2", "0"]).1, "1\n");
    assert_eq!(call(&["count", "--r1", "2", "--r2", "0", "--s1", "2", "--s2", "0"]).1, "2\n");
    assert_eq!(call(&["count", "--r", "3", "--s", "3", "--r1", "1", "--r2", "1", "--s1", "3", "--s2", "0"]).0, EXIT_OK);
    let (code, out, _) = call(&["count", "--r", "2", "--s", "2", "--json"]);
    assert_eq!(code, EXIT_OK);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["value"], "4");
}

#[test]
fn count_rejects_bad_combinations() {
    for args in [
        &["count", "--r", "2"][..],
        &["count", "--r", "2", "--s", "2", "--r2", "1"],
        &["count", "--r", "2", "--s", "2", "--r2", "2", "--s2", "0"],
        &["count", "--r", "9", "--s", "8", "--r1", "3", "--r2", "3", "--s1", "4", "--s2", "1"],
        &["count", "--r", "0", "--s", "2"],
        &["count", "--r", "1", "--s", "0"],
        &["count", "--r", "-1", "--s", "3"],
    ] {
        let (code, _, err) = call(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(!err.is_empty());
    }
}

#[test]
fn classify_reports_json() {
    let (code, out, _) = call(&["classify", "--file", &fixture("example_17.quiver")]);
    assert_eq!(code, EXIT_OK);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["atilde"], true);
    assert_eq!((doc["r1"].as_u64(), doc["r2"].as_u64()), (Some(3), Some(3)));
    assert_eq!((doc["s1"].as_u64(), doc["s2"].as_u64()), (Some(4), Some(2)));
    assert_eq!((doc["r"].as_u64(), doc["s"].as_u64()), (Some(9), Some(8)));
    assert_eq!(doc["symmetric"], false);
}

#[test]
fn classify_non_atilde_has_null_fields() {
    let dir = scratch_dir("triangle");
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("t.quiver");
    std::fs::write(&file, "3\n0 1 1\n1 2 1\n2 0 1\n").unwrap();
    let (code, out, _) = call(&["classify", "--file", file.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["atilde"], false);
    assert!(doc["r1"].is_null() && doc["symmetric"].is_null());
    let (code, _, err) = call(&["classify", "--file", dir.join("missing").to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("missing"));
}

#[test]
fn enumerate_dumps_members() {
    let dir = scratch_dir("dump");
    let (code, out, _) = call(&["enumerate", "--cycle", "2", "2", "--out", dir.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("4 quivers"));
    let listing: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("class.json")).unwrap()).unwrap();
    assert_eq!(listing.as_array().unwrap().len(), 4);
    let files = std::fs::read_dir(&dir).unwrap().filter(|e| {
        e.as_ref().unwrap().path().extension().is_some_and(|x| x == "quiver")
    });
    assert_eq!(files.count(), 4);

    // A dumped member seeds the same class.
    let member = dir.join("0.quiver");
    let (_, again, _) = call(&["enumerate", "--seed", member.to_str().unwrap(), "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&again).unwrap();
    assert_eq!(doc["size"], 4);
}

#[test]
fn enumerate_seeds_and_errors() {
    assert!(call(&["enumerate", "--dynkin-d", "6"]).1.contains("80 quivers"));
    assert!(call(&["enumerate", "--dynkin-a", "6"]).1.contains("49 quivers"));
    assert_eq!(call(&["enumerate"]).0, EXIT_USAGE);
    assert_eq!(call(&["enumerate", "--cycle", "1", "2", "--dynkin-d", "4"]).0, EXIT_USAGE);
    assert_eq!(call(&["enumerate", "--cycle", "0", "2"]).0, EXIT_USAGE);
    assert_eq!(call(&["enumerate", "--dynkin-d", "3"]).0, EXIT_USAGE);
    assert_eq!(call(&["enumerate", "--cycle", "2", "2", "--cap", "1"]).0, EXIT_USAGE);

    let dir = scratch_dir("wild");
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("wild.quiver");
    std::fs::write(&file, "3\n0 1 2\n1 2 2\n2 0 1\n").unwrap();
    let (code, _, err) = call(&["enumerate", "--seed", file.to_str().unwrap()]);
    assert_eq!(code, EXIT_CAP_EXCEEDED);
    assert!(err.contains("cap"));
}

#[test]
fn verify_small_suite() {
    let (code, out, _) = call(&["verify", "--n-max", "5", "--degree", "6"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.lines().last().unwrap().ends_with("0 failed"));
    assert_eq!(call(&["verify", "--n-max", "1"]).0, EXIT_USAGE);
}

#[test]
fn help_is_not_an_error() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("enumerate"));
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_atilde");
    let ok = Command::new(bin).args(["verify", "--n-max", "8", "--degree", "10"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0), "{}", String::from_utf8_lossy(&ok.stdout));
    let usage = Command::new(bin).args(["table", "--n-max", "x"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    let d4 = Command::new(bin).args(["count", "--r", "0", "--s", "4"]).output().unwrap();
    assert_eq!(String::from_utf8(d4.stdout).unwrap(), "6\n");
}

fn schema(name: &str) -> serde_json::Value {
    let path = format!("{}/../../docs/{name}", env!("CARGO_MANIFEST_DIR"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Keys of an output object are exactly the ones its schema requires.
fn assert_shape(doc: &serde_json::Value, schema: &serde_json::Value) {
    let mut keys: Vec<&str> = doc.as_object().unwrap().keys().map(String::as_str).collect();
    let mut required: Vec<&str> = schema["required"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    keys.sort();
    required.sort();
    assert_eq!(keys, required);
}

#[test]
fn outputs_follow_the_documented_schemas() {
    let (_, out, _) = call(&["classify", "--file", &fixture("example_17.quiver")]);
    assert_shape(&serde_json::from_str(&out).unwrap(), &schema("classify-report.schema.json"));

    let (_, out, _) = call(&["enumerate", "--cycle", "1", "3", "--json"]);
    assert_shape(&serde_json::from_str(&out).unwrap(), &schema("enumerate-summary.schema.json"));

    let (_, out, _) = call(&["count", "--r", "1", "--s", "3", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_shape(&doc, &schema("count.schema.json"));
    assert_eq!(doc["kind"], "quivers");

    let dir = scratch_dir("schema");
    call(&["enumerate", "--cycle", "1", "3", "--out", dir.to_str().unwrap()]);
    let listing: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("class.json")).unwrap()).unwrap();
    let item_schema = &schema("class-listing.schema.json")["items"];
    for member in listing.as_array().unwrap() {
        assert_shape(member, item_schema);
        let key = member["key"].as_str().unwrap();
        assert!(key.len() % 8 == 0 && key.chars().all(|c| c.is_ascii_hexdigit() && !c.is_ascii_uppercase()));
        let n = member["quiver"].as_array().unwrap().len();
        assert_eq!(key.len(), 8 * (1 + n * n));
    }
}
