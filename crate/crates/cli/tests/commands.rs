use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2cluster")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "--suite", "criterion"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "--suite", "cmatrix"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "--suite", "nothing"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--trials", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--range", "-41..0"]).status.code(), Some(2));
    assert_eq!(run(&["seed", "--name", "tau1"]).status.code(), Some(2));
    assert_eq!(run(&["mutate", "--name", "sigma1", "--seq", "-1"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn json_is_reproducible_and_matches_text() {
    let args = ["verify", "--suite", "identities", "--trials", "4", "--rng-seed", "7", "--format", "json"];
    let a = run(&args);
    let b = run(&[&args[..], &["--jobs", "1"]].concat());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&run(&["verify", "--suite", "identities", "--trials", "4", "--rng-seed", "7"]));
    let from_text: Vec<(String, String)> = text
        .lines()
        .filter(|l| !l.starts_with(' '))
        .map(|l| {
            let mut w = l.split_whitespace();
            let status = w.next().unwrap().to_string();
            (w.next().unwrap().to_string(), status)
        })
        .collect();
    let from_json: Vec<(String, String)> = json(&a)
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["check_id"].as_str().unwrap().to_string(), r["status"].as_str().unwrap().to_string()))
        .collect();
    assert_eq!(from_text, from_json);
}

#[test]
fn belt_of_one_case_reports_that_case() {
    let o = run(&["verify", "--suite", "belt", "--case", "1", "--range", "-3..0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let ids: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["check_id"].as_str().unwrap()).collect();
    assert!(ids.contains(&"belt.case1.milestone.d1(-3)"));
    assert!(ids.iter().all(|id| id.starts_with("belt.case1.")));
}

#[test]
fn seed_export() {
    let v = json(&run(&["seed", "--name", "underline-sigma1", "--format", "json"]));
    assert_eq!(v["seed"]["matrix"][2][2], 0);
    assert!(v["notes"][0].as_str().unwrap().contains("b33"));
    assert!(v["functions"].as_array().unwrap().contains(&serde_json::json!([-1, "Delta_w0_omega1"])));

    let v = json(&run(&["seed", "--name", "belt", "--case", "1", "--r", "-3", "--format", "json"]));
    assert_eq!(v["degrees"][0], serde_json::json!([1, "(1,1,1)"]));

    let t = stdout(&run(&["seed", "--name", "gls1"]));
    assert!(t.contains("x1 -> X1_GLS") && t.contains("x3 -> Delta_s1_omega1"));
}

#[test]
fn mutation_orders() {
    let left = run(&["mutate", "--name", "sigma1", "--seq", "4,2", "--format", "json"]);
    let composed = run(&["mutate", "--name", "sigma1", "--seq", "2,4", "--paper-order", "--format", "json"]);
    assert_eq!(left.stdout, composed.stdout);
    assert_eq!(json(&left)["seed"]["history"], serde_json::json!([4, 2]));

    let none = json(&run(&["mutate", "--name", "gls2", "--format", "json"]));
    let seed = json(&run(&["seed", "--name", "gls2", "--format", "json"]));
    assert_eq!(none, seed);

    let fin = json(&run(&["mutate", "--name", "gls1", "--seq", "3,1,2,3", "--format", "json"]));
    let under = json(&run(&["seed", "--name", "underline-sigma1", "--format", "json"]));
    let neg: Vec<Vec<i64>> = under["seed"]["matrix"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_array().unwrap().iter().map(|x| -x.as_i64().unwrap()).collect())
        .collect();
    assert_eq!(fin["seed"]["matrix"], serde_json::json!(neg));
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("g2cluster-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = run(&["verify", "--suite", "criterion", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 6);
    std::fs::remove_dir_all(&dir).unwrap();
}
