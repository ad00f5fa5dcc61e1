use tauexc::bqa::auslander_algebra;
use tauexc::homology::{injective, projective, simple};
use tauexc::json::{algebra_json, lattice_dot, module_from_json, module_json, sequence_from_json, sequence_json};
use tauexc::modrep::{is_isomorphic, Catalog, Module};
use tauexc::sequences::SeqCategory;
use tauexc::tautilt::Lattice;

#[test]
fn algebra_record() {
    let alg = auslander_algebra(3).unwrap();
    let v = algebra_json(&alg);
    assert_eq!(v["name"], "A3");
    assert_eq!(v["vertices"], 3);
    assert_eq!(v["dim"], 14);
    assert_eq!(v["arrows"].as_array().unwrap().len(), 4);
    assert_eq!(v["arrows"][0]["source"], 1);
    assert_eq!(v["arrows"][0]["target"], 2);
    assert_eq!(v["relations"].as_array().unwrap().len(), 2);
    assert_eq!(v["relations"][0], "a1b1");
}

#[test]
fn module_round_trip() {
    let alg = auslander_algebra(3).unwrap();
    let mods = [projective(&alg, 1).unwrap(), injective(&alg, 0).unwrap(), simple(&alg, 2).unwrap(), Module::zero(&alg)];
    for m in &mods {
        let v = module_json(m, None);
        let text = v.to_string();
        let back = module_from_json(&alg, &serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(&back, m);
    }
}

#[test]
fn module_parse_errors() {
    let alg = auslander_algebra(2).unwrap();
    let bad_len = serde_json::json!({"dim": [1], "maps": {}});
    assert!(module_from_json(&alg, &bad_len).is_err());
    let missing = serde_json::json!({"dim": [1, 1], "maps": {"b1": [["0"]]}});
    assert!(module_from_json(&alg, &missing).is_err());
    let unknown = serde_json::json!({"dim": [1, 1], "maps": {"a1": [["1"]], "b1": [["0"]], "c": [["1"]]}});
    assert!(module_from_json(&alg, &unknown).is_err());
    let relation = serde_json::json!({"dim": [1, 1], "maps": {"a1": [["1"]], "b1": [["1"]]}});
    assert!(module_from_json(&alg, &relation).is_err());
    let fraction = serde_json::json!({"dim": [1, 1], "maps": {"a1": [["3/2"]], "b1": [[0]]}});
    let m = module_from_json(&alg, &fraction).unwrap();
    assert!(is_isomorphic(&m, &projective(&alg, 0).unwrap()).unwrap());
}

#[test]
fn sequence_round_trip() {
    let alg = auslander_algebra(3).unwrap();
    let sc = SeqCategory::of(&alg).unwrap();
    let cat = Catalog::of(&alg);
    for s in 0..sc.len() {
        let terms = &sc.seqs()[s].terms;
        let v = sequence_json(&cat, terms);
        assert_eq!(v["labels"].as_array().unwrap().len(), 3);
        assert_eq!(v["labels"][0], cat.label(terms[2]));
        let mods = sequence_from_json(&alg, &v).unwrap();
        assert_eq!(sc.find_modules(&mods).unwrap(), Some(s));
    }
}

#[test]
fn lattice_graph() {
    let alg = auslander_algebra(2).unwrap();
    let lat = Lattice::of(&alg).unwrap();
    let dot = lattice_dot(&lat, &[lat.top()]);
    assert!(dot.starts_with("digraph lattice {"));
    assert_eq!(dot.matches(" -> ").count(), lat.hasse().len());
    assert_eq!(dot.matches("plum").count(), 1);
    assert!(dot.contains("P1[1] ⊕ P2[1]"));
}
