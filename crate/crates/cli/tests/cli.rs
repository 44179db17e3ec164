use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_splitquot"))
        .args(args)
        .env_remove("SPLITQUOT_SEED")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn plain(args: &[&str]) -> String {
    let mut full = args.to_vec();
    full.push("--plain");
    let out = run(&full);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

#[test]
fn dominance_example() {
    let v = json(&["dominance", "--e", "0,0", "--f", "-2,2"]);
    assert_eq!(v["command"], "dominance");
    assert_eq!(v["outputs"]["dominates"], true);
    assert_eq!(v["counterexamples"], serde_json::json!([]));
    assert_eq!(plain(&["dominance", "--e", "-2,2", "--f", "0,0"]), "false");
}

#[test]
fn eb_example() {
    assert_eq!(plain(&["eb", "--r", "4", "--d", "-1", "--a", "0,0"]), "(-1,0,0,0)");
    let v = json(&["eb", "--r", "4", "--d", "-1", "--a", "0,0"]);
    assert_eq!(v["outputs"]["eb"], serde_json::json!([-1, 0, 0, 0]));
}

#[test]
fn verify_vanishing_example() {
    let args = [
        "verify-vanishing", "--r", "1", "--d", "3", "--N", "3", "--m", "3", "--D", "3", "--mu-cap", "9",
    ];
    let v = json(&args);
    let out = &v["outputs"];
    assert_eq!(out["counterexamples"].as_array().unwrap().len(), 0);
    assert_eq!(v["counterexamples"].as_array().unwrap().len(), 0);
    let witness = out["sharpness_witnesses"]
        .as_array()
        .unwrap()
        .iter()
        .find(|w| w["mu"] == serde_json::json!([7, 2]))
        .expect("witness mu = (7,2)");
    assert_eq!(witness["alpha"], serde_json::json!([1]));
    assert_eq!(witness["beta"], serde_json::json!([2]));
    assert_eq!(witness["degree"], 12);
    assert_eq!(witness["bound"], 12);
}

#[test]
fn verify_vanishing_jobs_do_not_change_output() {
    let base = [
        "verify-vanishing", "--r", "1", "--d", "3", "--N", "3", "--m", "3", "--D", "2", "--mu-cap", "7",
    ];
    let serial = run(&base).stdout;
    let mut par = base.to_vec();
    par.extend(["--jobs", "4"]);
    assert_eq!(serial, run(&par).stdout);
}

#[test]
fn malformed_inputs_exit_2() {
    let out = run(&["dominance", "--e", "2,0", "--f", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("weakly increasing"));

    let out = run(&["conjugate", "--lam", "1,2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("weakly decreasing"));

    // rank mismatch is a precondition violation
    let out = run(&["dominance", "--e", "0,0", "--f", "0"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["embedding", "--r", "1", "--d", "3", "--N", "3", "--m", "1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_byte_stable() {
    let cases: &[&[&str]] = &[
        &["vcoh", "--r", "1", "--d", "3", "--N", "3", "--m", "3", "--mu", "7,2", "--alpha", "1", "--beta", "2"],
        &["fitting", "--d", "7", "--e", "5"],
        &["splitting-from-point", "--d", "8", "--random"],
        &["schur-double", "--lam", "3,2,1", "--rank", "3"],
    ];
    for args in cases {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn seed_env_changes_random_points() {
    let args = ["splitting-from-point", "--d", "8", "--random"];
    let default = run(&args).stdout;
    let seeded = Command::new(env!("CARGO_BIN_EXE_splitquot"))
        .args(args)
        .env("SPLITQUOT_SEED", "12345")
        .output()
        .unwrap()
        .stdout;
    assert_ne!(default, seeded);
}

#[test]
fn timing_is_opt_in() {
    let v = json(&["u", "--e", "0,2"]);
    assert!(v.get("timing_ms").is_none());
    let v = json(&["u", "--e", "0,2", "--timing"]);
    assert!(v["timing_ms"].is_number());
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["command", "counterexamples", "inputs", "outputs", "timing_ms"]);
}

#[test]
fn worked_values() {
    assert_eq!(plain(&["u", "--e", "0,2"]), "1");
    assert_eq!(plain(&["tame", "--e", "1,2,5,6"]), "true");
    assert_eq!(plain(&["tame", "--e", "0,2,4"]), "false");
    assert_eq!(plain(&["fiber-dim", "--chain", "1;-1,2;-2,-1,3"]), "3");
    assert_eq!(plain(&["fiber-dim", "--chain", "1;-2,3;-2,-1,3"]), "4");
    assert_eq!(plain(&["fiber-dim", "--chain", "2;-1,3;-3,0,3"]), "2");
    assert_eq!(plain(&["bwb", "--k", "3", "--n", "9", "--mu", "7,2", "--alpha", "1"]), "7");
    assert_eq!(plain(&["bwb", "--k", "5", "--n", "12", "--nu", "6,1,1,1,1,1"]), "5");
    assert_eq!(plain(&["lr", "--lam", "2,1", "--mu", "2,1", "--nu", "3,2,1"]), "2");
    assert_eq!(plain(&["conjugate", "--lam", "4,1,1"]), "(3,1,1,1)");
    assert_eq!(plain(&["splitting-from-point", "--d", "4", "--nodes", "2", "--weights", "1"]), "(1,3)");
    assert_eq!(plain(&["splitting-from-point", "--point", "0,0,0"]), "(0,4)");

    let v = json(&["admissible", "--e", "-2,-2,-1,-1,0,0", "--set", "1,2"]);
    assert_eq!(v["outputs"]["admissible_sets"], serde_json::json!([[1], [2], [1, 2]]));
    assert_eq!(v["outputs"]["is_admissible"], true);

    let v = json(&["embedding", "--r", "1", "--d", "3", "--N", "3", "--m", "3"]);
    let emb = &v["outputs"]["embedding"];
    assert_eq!((emb["k1"].clone(), emb["n1"].clone()), (3.into(), 9.into()));
    assert_eq!((emb["k2"].clone(), emb["n2"].clone()), (5.into(), 12.into()));

    let v = json(&["vcoh", "--r", "1", "--d", "3", "--N", "3", "--m", "3", "--mu", "7,2", "--alpha", "1", "--beta", "2"]);
    assert_eq!(v["outputs"]["max_degree"], 12);
    assert_eq!(v["outputs"]["size"], 12);

    let gens = plain(&["fitting", "--d", "6", "--e", "4"]);
    assert_eq!(gens.lines().count(), 1);
}

/// Operation names of the library surface; each must be exposed by exactly one subcommand.
const LIBRARY_OPERATIONS: &[&str] = &[
    "conjugate", "lr_coefficient", "tensor_schur", "schur_of_double", "cauchy_wedge",
    "schur_complex_terms", "h0", "h1", "u", "hom", "ext1", "dominates", "dominates_via_h1",
    "dominates_via_flag", "is_balanced", "is_perfectly_balanced", "is_tame", "hn_data",
    "admissible_sets", "is_admissible", "admits_subsheaf", "eb", "gap", "flag_stratum_dim",
    "stratum_codim", "tangent_check", "gp_type", "bwb_mixed", "bwb_quot_dual", "bwb_indices",
    "stromme_embedding", "taut_rank", "v_cohomology", "koszul_summands", "verify_vanishing",
    "degree_lower_bound", "hankel", "splitting_from_point", "fitting_generators", "secant_point",
];

const REQUIRED_SUBCOMMANDS: &[&str] = &[
    "dominance", "u", "eb", "admissible", "tame", "hn", "stratum-dim", "fiber-dim", "tangent",
    "bwb", "embedding", "vcoh", "verify-vanishing", "hankel", "fitting", "splitting-from-point",
    "gp-type",
];

#[test]
fn every_operation_has_one_subcommand() {
    let v = json(&["ops"]);
    let table = v["outputs"].as_object().unwrap();
    let mut names: Vec<&str> = LIBRARY_OPERATIONS.to_vec();
    names.sort_unstable();
    let mut listed: Vec<&str> = table.keys().map(String::as_str).collect();
    listed.sort_unstable();
    assert_eq!(names, listed);
    for (op, sub) in table {
        let sub = sub.as_str().unwrap();
        let out = run(&[sub, "--help"]);
        assert_eq!(out.status.code(), Some(0), "{op} -> {sub}");
    }
    for sub in REQUIRED_SUBCOMMANDS {
        assert!(table.values().any(|s| s == sub), "{sub} exposes no operation");
    }
}

#[test]
fn every_subcommand_runs() {
    let cases: &[&[&str]] = &[
        &["dominance", "--e", "-1,1", "--f", "-2,2"],
        &["u", "--e", "-3,0,3"],
        &["cohomology", "--e", "-2,1", "--m", "-1"],
        &["hom", "--a", "0,1", "--b", "-1,2"],
        &["tame", "--e", "0,0,3"],
        &["hn", "--e", "-2,-2,-1,0"],
        &["admissible", "--e", "-2,0,1"],
        &["gap", "--a", "0", "--e", "-1,1"],
        &["eb", "--r", "3", "--d", "0", "--a", ""],
        &["stratum-dim", "--a", "0", "--e", "-1,1", "--c", "1"],
        &["fiber-dim", "--chain", "1;-1,2"],
        &["tangent", "--e", "-2,-2,-1,-1,0,0", "--set", "1", "--f", "-3,-2,-1,0,0,0"],
        &["gp-type", "--g", "4", "--d", "3", "--r", "1", "--k", "4"],
        &["bwb", "--k", "2", "--n", "5", "--mu", "3,1", "--alpha", "2"],
        &["embedding", "--r", "1", "--d", "3", "--N", "3", "--D", "3"],
        &["koszul", "--r", "1", "--d", "3", "--N", "3", "--m", "3", "--k", "3"],
        &["vcoh", "--r", "0", "--d", "2", "--N", "2", "--m", "2", "--mu", "2"],
        &["verify-vanishing", "--r", "0", "--d", "2", "--N", "2", "--m", "2", "--D", "1", "--mu-cap", "3"],
        &["hankel", "--k", "2", "--d", "5", "--point", "1,1/2,-3,0"],
        &["fitting", "--d", "5", "--e", "4"],
        &["splitting-from-point", "--d", "6", "--random", "--s", "2"],
        &["conjugate", "--lam", "3,1"],
        &["lr", "--lam", "1", "--mu", "1", "--nu", "1,1"],
        &["tensor", "--lam", "2,1", "--mu", "1", "--rank", "3"],
        &["schur-double", "--lam", "2,1", "--rank", "2"],
        &["cauchy", "--n", "2", "--rank-e", "2", "--rank-f", "3"],
        &["schur-complex", "--lam", "2,1", "--t", "1"],
        &["ops"],
    ];
    for args in cases {
        let v = json(args);
        assert_eq!(v["command"], args[0]);
        assert!(v["outputs"].is_object(), "{args:?}");
    }
}
