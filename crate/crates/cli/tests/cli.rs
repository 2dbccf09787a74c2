use std::fs;

use loopnr::format::StructureFile;
use loopnr_cli::{run, Outcome, EXIT_BOUND, EXIT_HYPOTHESIS, EXIT_INVALID, EXIT_OK, EXIT_PARSE};
use serde_json::{json, Value};

fn loopnr(args: &[&str]) -> Outcome {
    run(std::iter::once("loopnr").chain(args.iter().copied()))
}

fn json_of(out: &Outcome) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout))
}

#[test]
fn check_valid_generated_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z4.json");
    let gen = loopnr(&["generate", "cyclic:4"]);
    assert_eq!(gen.code, EXIT_OK);
    fs::write(&path, &gen.stdout).unwrap();
    let out = loopnr(&["check", path.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert_eq!(json_of(&out)["valid"], json!(true));
}

#[test]
fn check_broken_latin_square_lists_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "loop 3\n0 1 2\n1 1 0\n2 0 1\n").unwrap();
    let out = loopnr(&["check", path.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_INVALID);
    let v = json_of(&out);
    assert_eq!(v["valid"], json!(false));
    let axioms: Vec<&str> = v["violations"].as_array().unwrap().iter().map(|x| x["axiom"].as_str().unwrap()).collect();
    assert_eq!(axioms, ["NotLatinSquare", "NotLatinSquare"]);
}

#[test]
fn check_reports_every_ring_axiom_failure() {
    // Z/3 addition with projection multiplication: no identity, and 0 is not absorbing.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("proj.txt");
    fs::write(&path, "ring 3\n0 1 2\n1 2 0\n2 0 1\n\n0 1 2\n0 1 2\n0 1 2\none=1\n").unwrap();
    let out = loopnr(&["check", path.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_INVALID);
    let v = json_of(&out);
    let axioms: Vec<&str> = v["violations"].as_array().unwrap().iter().map(|x| x["axiom"].as_str().unwrap()).collect();
    assert!(axioms.contains(&"NotIdentity"));
    assert!(axioms.contains(&"ZeroNotLeftAbsorbing"));
}

#[test]
fn malformed_file_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mal.json");
    fs::write(&path, "{\"kind\":\"ring\",\"n\":2,\"add\":[[0,1]]}").unwrap();
    assert_eq!(loopnr(&["check", path.to_str().unwrap()]).code, EXIT_PARSE);
    assert_eq!(loopnr(&["analyze", "nosuchfamily:3"]).code, EXIT_PARSE);
    assert_eq!(loopnr(&["frobnicate"]).code, EXIT_PARSE);
}

#[test]
fn analyze_cyclic6_local() {
    let out = loopnr(&["analyze", "cyclic:6", "--local"]);
    assert_eq!(out.code, EXIT_OK);
    let v = json_of(&out);
    assert_eq!(v["locality"]["local"], json!(false));
    assert_eq!(v["locality"]["maximal_n_subloops"], json!([[0, 3], [0, 2, 4]]));
}

#[test]
fn analyze_cyclic4_radical() {
    let v = json_of(&loopnr(&["analyze", "cyclic:4", "--radical"]));
    assert_eq!(v["ring"]["radical"], json!([0, 2]));
}

#[test]
fn analyze_map_near_ring_of_nonassociative_loop() {
    let out = loopnr(&["analyze", "m0:nonassoc5", "--local"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let v = json_of(&out);
    assert_eq!(v["n"], json!(625));
    assert_eq!(v["locality"]["agree"], json!(true));
    assert_eq!(v["locality"]["via_maximal"], v["locality"]["via_units"]);
}

#[test]
fn analyze_text_output() {
    let out = loopnr(&["analyze", "cyclic:4", "--radical", "--text"]);
    assert!(out.stdout.contains("radical: [0,2]"), "{}", out.stdout);
}

#[test]
fn decompose_examples() {
    let v = json_of(&loopnr(&["decompose", "cyclic:6"]));
    assert_eq!(v["family"], json!([3, 4]));
    let sizes: Vec<u64> = v["corners"].as_array().unwrap().iter().map(|c| c["corner_size"].as_u64().unwrap()).collect();
    assert_eq!(sizes, [2, 3]);

    let v = json_of(&loopnr(&["decompose", "cyclic:4"]));
    assert_eq!(v["family"], json!([1]));

    let v = json_of(&loopnr(&["decompose", "matrix:cyclic:2,2", "--verify-uniqueness"]));
    assert_eq!(v["uniqueness"]["all_matched"], json!(true));
    assert!(v["uniqueness"]["family_count"].as_u64().unwrap() > 1);
}

#[test]
fn decompose_needs_a_ring() {
    assert_eq!(loopnr(&["decompose", "m0:cyclic:3"]).code, EXIT_HYPOTHESIS);
}

#[test]
fn hom_identity_and_reduction() {
    let v = json_of(&loopnr(&["hom", "cyclic:5", "cyclic:5", "0,1,2,3,4"]));
    assert_eq!(v["valid"], json!(true));

    let out = loopnr(&["hom", "cyclic:4", "cyclic:2", "0 1 0 1", "--transfer"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let v = json_of(&out);
    assert_eq!(v["unit_reflecting"], json!(true));
    assert_eq!(v["transfer"]["agree"], json!(true));
}

#[test]
fn hom_from_map_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("map.json");
    fs::write(&path, "{\"map\":[0,1,2,0,1,2]}").unwrap();
    let out = loopnr(&["hom", "cyclic:6", "cyclic:3", path.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert_eq!(json_of(&out)["kernel"], json!([0, 3]));
}

#[test]
fn invalid_hom_exits_one() {
    let out = loopnr(&["hom", "cyclic:4", "cyclic:2", "0,1,1,1"]);
    assert_eq!(out.code, EXIT_INVALID);
    assert_eq!(json_of(&out)["violation"]["axiom"], json!("NotAHomomorphism"));
}

#[test]
fn loop_hom_reports_normal_kernel() {
    let v = json_of(&loopnr(&["hom", "loop:cyclic:4", "loop:cyclic:2", "0,1,0,1"]));
    assert_eq!(v["kernel"], json!([0, 2]));
    assert_eq!(v["kernel_normal"], json!(true));
}

#[test]
fn bounds_from_flags_and_environment() {
    assert_eq!(loopnr(&["--max-n", "10", "analyze", "cyclic:12"]).code, EXIT_BOUND);
    assert_eq!(loopnr(&["analyze", "cyclic:12", "--local", "--max-n", "12"]).code, EXIT_OK);
    assert_eq!(loopnr(&["--max-subloops", "2", "analyze", "cyclic:12", "--local"]).code, EXIT_BOUND);
}

fn binary(args: &[&str], env: &[(&str, &str)]) -> std::process::Output {
    std::process::Command::new(env!("CARGO_BIN_EXE_loopnr")).args(args).envs(env.iter().copied()).output().unwrap()
}

#[test]
fn flags_override_environment() {
    let args = ["decompose", "matrix:cyclic:2,2", "--verify-uniqueness"];
    let env_only = binary(&args, &[("LOOPNR_MAX_FAMILIES", "1")]);
    let mut with_flag = vec!["--max-families", "1000"];
    with_flag.extend(args);
    let flag = binary(&with_flag, &[("LOOPNR_MAX_FAMILIES", "1")]);
    let parse = |o: &std::process::Output| serde_json::from_slice::<Value>(&o.stdout).unwrap();
    assert_eq!(parse(&env_only)["uniqueness"]["truncated"], json!(true));
    assert_eq!(parse(&flag)["uniqueness"]["truncated"], json!(false));

    let bound = binary(&["analyze", "cyclic:12"], &[("LOOPNR_MAX_N", "10")]);
    assert_eq!(bound.status.code(), Some(EXIT_BOUND as i32));
}

#[test]
fn generate_round_trips_for_every_catalog_entry() {
    let cat = json_of(&loopnr(&["catalog"]));
    let entries = cat.as_array().unwrap();
    assert!(!entries.is_empty());
    for e in entries {
        let spec = e["spec"].as_str().unwrap();
        let out = loopnr(&["generate", spec]);
        assert_eq!(out.code, EXIT_OK, "{spec}");
        let file = StructureFile::parse(&out.stdout).unwrap();
        assert_eq!(format!("{}\n", file.to_canonical_json()), out.stdout, "{spec}");
        assert!(file.audit().is_empty(), "{spec}");
        assert_eq!(file.meta["name"], e["name"].as_str().unwrap());
    }
}

#[test]
fn generate_large_map_near_ring() {
    let out = loopnr(&["generate", "m0:nonassoc5"]);
    assert_eq!(json_of(&out)["n"], json!(625));
}

#[test]
fn catalog_is_deterministic() {
    assert_eq!(loopnr(&["catalog"]), loopnr(&["catalog"]));
}

#[test]
fn thread_count_does_not_change_reports() {
    let one = loopnr(&["--threads", "1", "analyze", "upper:cyclic:2,2"]);
    let four = loopnr(&["--threads", "4", "analyze", "upper:cyclic:2,2"]);
    assert_eq!(one.code, EXIT_OK);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn catalog_names_are_inputs() {
    let by_name = loopnr(&["decompose", "m2z2"]);
    let by_spec = loopnr(&["decompose", "matrix:cyclic:2,2"]);
    assert_eq!(by_name.code, EXIT_OK, "{}", by_name.stderr);
    assert_eq!(by_name.stdout, by_spec.stdout);
    let gen = json_of(&loopnr(&["generate", "z6"]));
    assert_eq!(gen["meta"]["name"], json!("z6"));
}
