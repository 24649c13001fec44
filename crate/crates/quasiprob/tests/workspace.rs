use quasiprob::{LoadError, Workspace};
use quasiprob_core::values::rat;

fn example(name: &str) -> Workspace {
    let path = format!("{}/examples/{name}.json", env!("CARGO_MANIFEST_DIR"));
    Workspace::load(path).unwrap()
}

#[test]
fn shipped_examples_load_and_round_trip() {
    for name in ["standard-conditionals", "sqrt2-pair"] {
        let ws = example(name);
        let again = Workspace::parse(&ws.to_json()).unwrap();
        assert_eq!(again, ws, "{name}");
        assert_eq!(again.to_json(), ws.to_json());
    }
}

#[test]
fn standard_conditionals_reproduce_on_load() {
    let ws = example("standard-conditionals");
    let q = ws.valuation("Q").unwrap().to_quasi().unwrap();
    let u = &ws.universe;
    let at = |e: &str| q.eval(u.event(e).unwrap()).unwrap();
    assert_eq!(at("A=0"), rat(0, 1));
    assert_eq!(at("B=0"), rat(9, 10));
    assert_eq!(ws.partition("by-B").unwrap().len(), 2);
    assert!(ws.query("total-B1").is_some());
}

#[test]
fn empty_valuations_are_valid() {
    let ws = Workspace::parse(r#"{"universe": {"atoms": ["x", "y"]}, "valuations": {}}"#).unwrap();
    assert!(ws.valuations.is_empty());
    assert_eq!(ws.basis.dim(), 1);
    assert_eq!(Workspace::parse(&ws.to_json()).unwrap(), ws);
}

fn invalid_field(text: &str) -> String {
    match Workspace::parse(text) {
        Err(LoadError::Invalid { field, .. }) => field,
        other => panic!("expected a validation error, got {other:?}"),
    }
}

#[test]
fn validation_errors_name_the_field() {
    let zero_den = r#"{"universe": {"atoms": ["x"]}, "valuations": {"R": {"x": {"1": "1/0"}}}}"#;
    assert_eq!(invalid_field(zero_den), "valuations.R.x.1");
    let unknown_atom = r#"{"universe": {"atoms": ["x"]}, "valuations": {"R": {"z": {"1": "1"}}}}"#;
    assert_eq!(invalid_field(unknown_atom), "valuations.R.z");
    let unknown_symbol = r#"{"universe": {"atoms": ["x"]}, "valuations": {"R": {"x": {"pi": "1"}}}}"#;
    assert_eq!(invalid_field(unknown_symbol), "valuations.R.x.pi");
    let overlap = r#"{"universe": {"atoms": ["x", "y"]}, "partitions": {"p": [["x"], ["x", "y"]]}}"#;
    assert_eq!(invalid_field(overlap), "partitions.p");
    let bad_interval = r#"{"basis": [{"symbol": "s", "enclosure_re": ["2", "1"]}], "universe": {"atoms": ["x"]}}"#;
    assert_eq!(invalid_field(bad_interval), "basis[0].enclosure_re");
    let duplicate = r#"{"universe": {"atoms": ["x", "x"]}}"#;
    assert_eq!(invalid_field(duplicate), "universe.atoms");
}

#[test]
fn parse_errors_carry_a_position() {
    match Workspace::parse("{\n  \"universe\": {\"atoms\": [\"x\"]},\n  oops\n}") {
        Err(LoadError::Parse { line, column, .. }) => {
            assert_eq!(line, 3);
            assert!(column > 0);
        }
        other => panic!("expected a parse error, got {other:?}"),
    }
    assert!(matches!(
        Workspace::parse(r#"{"universe": {"atoms": ["x"]}, "extra": 1}"#),
        Err(LoadError::Parse { .. })
    ));
}
