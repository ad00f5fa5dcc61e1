use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tauexc")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// JSON records after the metadata header.
fn records(o: &Output) -> Vec<Value> {
    stdout(o).lines().skip(1).map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn verify_all_t2_succeeds() {
    let o = run(&["verify", "all", "--t", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).lines().filter(|l| l.ends_with(')') && l.contains(": ok")).count(), 13);
}

#[test]
fn verify_json_reports() {
    let o = run(&["verify", "thm_4_15", "--t", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = records(&o);
    assert_eq!(r.len(), 1);
    assert_eq!(r[0]["statement"], "thm_4_15");
    assert_eq!(r[0]["checked"], 1);
    assert_eq!(r[0]["passed"], true);
}

#[test]
fn enumerate_tilting_t3() {
    let o = run(&["enumerate", "tilting", "--t", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let r = records(&o);
    assert_eq!(r.len(), 6);
    for x in &r {
        assert_eq!(x["summands"].as_array().unwrap().len(), 3);
        assert_eq!(x["summands"][0], "P3");
    }
}

#[test]
fn enumerate_tau_exc_t2() {
    let o = run(&["enumerate", "tau-exc", "--t", "2"]);
    let r = records(&o);
    assert_eq!(r.len(), 4);
    assert_eq!(r.iter().filter(|x| x["exceptional"] == true).count(), 2);
}

#[test]
fn enumerate_other_kinds() {
    assert_eq!(records(&run(&["enumerate", "exc", "--t", "3"])).len(), 6);
    let st = records(&run(&["enumerate", "sttilt", "--t", "2"]));
    assert_eq!(st.len(), 6);
    assert_eq!(st.iter().filter(|x| x["tilting"] == true).count(), 2);
}

#[test]
fn header_echoes_seed_and_caps() {
    let o = run(&["enumerate", "exc", "--t", "2", "--seed", "7", "--cap-nodes", "500"]);
    let first: Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    assert_eq!(first["meta"]["seed"], 7);
    assert_eq!(first["meta"]["node_cap"], 500);
    assert_eq!(first["meta"]["t"], 2);
}

#[test]
fn env_overrides() {
    let o = Command::new(env!("CARGO_BIN_EXE_tauexc"))
        .args(["enumerate", "tilting"])
        .env("TAUEXC_T", "3")
        .output()
        .unwrap();
    assert_eq!(records(&o).len(), 6);
}

#[test]
fn deterministic_output() {
    for args in [
        &["enumerate", "tau-exc", "--t", "3", "--dot"][..],
        &["lattice", "--t", "3"][..],
        &["verify", "all", "--t", "3", "--json"][..],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout);
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "widgets"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "thm_9_9"]).status.code(), Some(2));
    assert_eq!(run(&["mutate", "--kind", "phi", "--dir", "left", "--pos", "2", "--seq", "{bad"]).status.code(), Some(2));
}

#[test]
fn mutate_inline_sequences() {
    let exc = records(&run(&["enumerate", "exc", "--t", "2"]));
    let e = exc.iter().find(|x| x["labels"] == serde_json::json!(["S2", "P1"])).unwrap();
    let seq = e.to_string();
    for kind in ["psi", "phi"] {
        let o = run(&["mutate", "--t", "2", "--kind", kind, "--dir", "left", "--pos", "2", "--seq", &seq]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        assert_eq!(stdout(&o).lines().nth(1), Some("(I1, S2)"));
    }
    let o = run(&["mutate", "--t", "2", "--kind", "psi", "--dir", "right", "--pos", "2", "--seq", &seq, "--json"]);
    assert_eq!(records(&o), [Value::Null]);
    let o = run(&["mutate", "--t", "2", "--kind", "phi", "--dir", "right", "--pos", "2", "--seq", &seq, "--json"]);
    assert_eq!(records(&o)[0]["labels"], serde_json::json!(["P1", "S1"]));
}

#[test]
fn mutate_from_file() {
    let dir = std::env::temp_dir().join(format!("tauexc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("seq.json");
    let exc = records(&run(&["enumerate", "exc", "--t", "3"]));
    std::fs::write(&path, exc[0].to_string()).unwrap();
    let o = run(&["mutate", "--t", "3", "--kind", "phi", "--dir", "left", "--pos", "3", "--seq", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn algebra_info() {
    let o = run(&["algebra", "info", "--t", "2"]);
    let text = stdout(&o);
    assert!(text.contains("dimension 5"));
    assert!(text.contains("  1 1\n  1 2"));
    let j = records(&run(&["algebra", "--t", "3", "--json"]));
    assert_eq!(j[0]["dim"], 14);
    assert_eq!(j[0]["pair_dims"][2][2], 3);
}

#[test]
fn dot_outputs_are_well_formed() {
    for args in [&["lattice", "--t", "3", "--dot"][..], &["enumerate", "tau-exc", "--t", "2", "--dot"][..]] {
        let text = stdout(&run(args));
        let body: Vec<&str> = text.lines().skip(1).collect();
        assert!(body[0].starts_with("digraph "));
        assert_eq!(*body.last().unwrap(), "}");
        for l in &body[1..body.len() - 1] {
            assert!(l.ends_with(';'), "{l}");
            assert_eq!(l.matches('"').count() % 2, 0);
        }
    }
}
