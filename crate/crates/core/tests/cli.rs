use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn chvlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chvlab")).args(args).env_remove("CHVLAB_JOBS").output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const M12: &str = r#"{"n":2,"entries":[["1","2"],["3","4"]]}"#;
const I2: &str = r#"{"n":2,"entries":[["1","0"],["0","1"]]}"#;

#[test]
fn verify_generated_families() {
    let o = chvlab(&["verify", "--theorem", "phillips", "--n", "3", "--k", "2", "--strategy", "conjugated-diagonal", "--seeds", "5"]);
    assert_eq!(code(&o), 0);
    let v: Vec<Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.len(), 5);
    assert!(v.iter().all(|r| r["status"] == "pass" && r["v"] == "v1"));
}

#[test]
fn symbolic_lemmas_carry_the_term_tables() {
    let o = chvlab(&["verify", "--theorem", "lemmas", "--n", "2", "--k", "2", "--symbolic"]);
    assert_eq!(code(&o), 0);
    let v: Vec<Value> = serde_json::from_str(&stdout(&o)).unwrap();
    let fig = v.iter().find(|r| r["theorem"] == "figures").unwrap();
    assert_eq!(fig["data"]["one_index"].as_array().unwrap().len(), 8);
    assert!(stdout(&o).contains("+(A_r)_{1,1}(A_s)_{2,2}(B_r)_{1,1}(B_s)_{1,2}"));
}

#[test]
fn user_family_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", &format!(r#"{{"n":2,"k":2,"a":[{I2},{M12}],"b":[{M12},{I2}]}}"#));
    assert_eq!(code(&chvlab(&["verify", "--theorem", "phillips", "--input", &bad])), 3);
    let good = write(dir.path(), "good.json", &format!(r#"{{"n":2,"k":2,"a":[{{"n":2,"entries":[["-1","0"],["0","-1"]]}},{M12}],"b":[{M12},{I2}]}}"#));
    assert_eq!(code(&chvlab(&["verify", "--theorem", "phillips", "--input", &good])), 0);
    assert_eq!(code(&chvlab(&["verify", "--theorem", "laplace", "--input", &good, "--b", "2"])), 0);
    let broken = write(dir.path(), "broken.json", "{");
    assert_eq!(code(&chvlab(&["verify", "--theorem", "phillips", "--input", &broken])), 2);
    let missing = dir.path().join("missing.json");
    assert_eq!(code(&chvlab(&["verify", "--theorem", "phillips", "--input", missing.to_str().unwrap()])), 2);
    assert_eq!(code(&chvlab(&["verify", "--theorem", "nope"])), 2);
    assert_eq!(code(&chvlab(&["verify", "--theorem", "lemmas", "--b", "0"])), 2);
    assert_eq!(code(&chvlab(&["verify", "--theorem", "phillips", "--jobs", "0"])), 2);
    let pair = write(dir.path(), "pair.json", &format!(r#"{{"a":{M12},"b":{{"n":2,"entries":[["0","1"],["1","0"]]}}}}"#));
    assert_eq!(code(&chvlab(&["verify", "--theorem", "cor12", "--input", &pair])), 3);
}

#[test]
fn gen_output_feeds_verify() {
    let dir = tempfile::tempdir().unwrap();
    let fam = dir.path().join("fam.json");
    let mixed = dir.path().join("mixed.json");
    let f = fam.to_str().unwrap();
    let m = mixed.to_str().unwrap();
    assert_eq!(code(&chvlab(&["gen", "--strategy", "circulant", "--n", "3", "--k", "3", "--seed", "4", "--out", f])), 0);
    assert_eq!(code(&chvlab(&["verify", "--theorem", "phillips", "--input", f])), 0);
    assert_eq!(code(&chvlab(&["gen", "--object", "mixed", "--n", "2", "--k", "2", "--seed", "4", "--out", m])), 0);
    assert_eq!(code(&chvlab(&["verify", "--theorem", "mixed", "--input", m])), 0);
    assert_eq!(code(&chvlab(&["verify", "--theorem", "lemmas2", "--input", m, "--b", "1", "--e", "2"])), 0);
    let again = chvlab(&["gen", "--strategy", "circulant", "--n", "3", "--k", "3", "--seed", "4"]);
    assert_eq!(stdout(&again), std::fs::read_to_string(f).unwrap());
    let spec = chvlab(&["gen", "--object", "spec", "--strategy", "powers-of-one", "--n", "3", "--k", "2", "--seed", "9"]);
    let v: Value = serde_json::from_str(&stdout(&spec)).unwrap();
    assert_eq!(v["strategy"], "powers-of-one");
    assert_eq!(code(&chvlab(&["gen", "--n", "0"])), 2);
}

#[test]
fn enumerate_counts() {
    let last = |args: &[&str]| -> Value {
        let o = chvlab(args);
        assert_eq!(code(&o), 0, "{args:?}");
        serde_json::from_str(stdout(&o).lines().last().unwrap()).unwrap()
    };
    let v = last(&["enumerate", "--object", "pathmutation", "--n", "2", "--k", "2", "--b", "1", "--e", "2"]);
    assert_eq!(v["count"], 16);
    let o = chvlab(&["enumerate", "--object", "pathmutation", "--n", "2", "--k", "2", "--b", "1", "--e", "2"]);
    assert_eq!(stdout(&o).lines().count(), 17);
    assert_eq!(last(&["enumerate", "--object", "pathmap-H", "--n", "1", "--k", "3"])["count"], 0);
    let g = chvlab(&["enumerate", "--object", "pathmap-G", "--n", "3", "--k", "2", "--limit", "5"]);
    assert_eq!(stdout(&g).lines().count(), 6);
    assert!(stdout(&g).lines().last().unwrap().contains(r#""count":1296"#));
    assert_eq!(last(&["enumerate", "--object", "decmap2", "--n", "2", "--k", "2"])["count"], 2 * 8 * 3);
    assert_eq!(code(&chvlab(&["enumerate", "--object", "pathmutation", "--n", "2", "--b", "3"])), 2);
    assert_eq!(code(&chvlab(&["enumerate", "--object", "widget"])), 2);
}

#[test]
fn compute_values() {
    let dir = tempfile::tempdir().unwrap();
    let pair = write(
        dir.path(),
        "pair.json",
        &format!(r#"{{"n":2,"mats":[{M12},{{"n":2,"entries":[["0","1"],["1","0"]]}}]}}"#),
    );
    let o = chvlab(&["compute", "--object", "mixed-discriminant", "--input", &pair]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "-5/2");
    let b = r#"{"n":2,"entries":[["2","x"],["1","y"]]}"#;
    let same = write(dir.path(), "same.json", &format!(r#"{{"n":2,"mats":[{b},{b}]}}"#));
    let single = write(dir.path(), "single.json", b);
    let md = stdout(&chvlab(&["compute", "--object", "mixed-discriminant", "--input", &same]));
    let det = stdout(&chvlab(&["compute", "--object", "det", "--input", &single]));
    assert_eq!(md, det);
    assert_eq!(det.trim(), "-x + 2*y");
    let k1 = write(dir.path(), "k1.json", &format!(r#"{{"a":[{M12}]}}"#));
    assert_eq!(stdout(&chvlab(&["compute", "--object", "charpoly", "--input", &k1])).trim(), "-2*x_1^2");
    let bad = write(dir.path(), "bad.json", r#"{"n":2,"entries":[["1","2"]]}"#);
    assert_eq!(code(&chvlab(&["compute", "--object", "det", "--input", &bad])), 2);
    let fam = write(dir.path(), "fam.json", &format!(r#"{{"n":2,"k":2,"a":[{{"n":2,"entries":[["-1","0"],["0","-1"]]}},{M12}],"b":[{M12},{I2}]}}"#));
    let z = stdout(&chvlab(&["compute", "--object", "substitute", "--input", &fam]));
    assert_eq!(z.trim(), "[[0, 0], [0, 0]]");
}

#[test]
fn reports_are_reproducible_and_job_independent() {
    let strip = |o: &Output| -> Vec<Value> {
        let mut v: Vec<Value> = serde_json::from_str(&stdout(o)).unwrap();
        for r in &mut v {
            r["elapsed_ms"] = Value::from(0);
        }
        v
    };
    let args = ["verify", "--theorem", "lemmas", "--n", "2,3", "--k", "2", "--seeds", "2", "--seed", "11"];
    let one = chvlab(&[&args[..], &["--jobs", "1"]].concat());
    let four = chvlab(&[&args[..], &["--jobs", "4"]].concat());
    let env = Command::new(env!("CARGO_BIN_EXE_chvlab")).args(args).env("CHVLAB_JOBS", "3").output().unwrap();
    assert_eq!(code(&one), 0);
    assert_eq!(strip(&one), strip(&four));
    assert_eq!(strip(&one), strip(&env));
}
