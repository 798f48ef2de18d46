use jgl::json::{lie_json, pair_json, read_structure, Structure};
use jgl_core::catalog::{gl_graded, rectangular_pair, spin_dot};
use jgl_core::Ring;
use serde_json::Value;

fn f5() -> Ring {
    Ring::prime(5).unwrap()
}

fn reparse(doc: &Value) -> Structure {
    read_structure(&doc.to_string()).unwrap_or_else(|e| panic!("{e}"))
}

#[test]
fn pair_round_trip() {
    for ring in [Ring::Rational, f5()] {
        for p in [
            rectangular_pair(2, 3, ring).unwrap(),
            spin_dot(4, ring).unwrap(),
        ] {
            let doc = pair_json(&p);
            let Structure::Pair(q) = reparse(&doc) else {
                panic!("not a pair")
            };
            assert_eq!(pair_json(&q), doc);
            assert_eq!(q.dims(), p.dims());
        }
    }
}

#[test]
fn lie_round_trip() {
    let g = gl_graded(&[1, 0, -1], f5());
    let doc = lie_json(&g);
    let Structure::Lie(h) = reparse(&doc) else {
        panic!("not a Lie algebra")
    };
    assert_eq!(lie_json(&h), doc);
    assert_eq!(h.k(), 2);
}

fn with_bad_coefficient(ring: Ring, text: &str) -> String {
    let mut doc = pair_json(&rectangular_pair(1, 2, ring).unwrap());
    doc["tplus"][0][4] = Value::String(text.into());
    doc.to_string()
}

fn error_of(text: &str) -> String {
    match read_structure(text) {
        Ok(_) => panic!("accepted"),
        Err(e) => e.to_string(),
    }
}

#[test]
fn division_by_zero_is_rejected() {
    for ring in [Ring::Rational, f5()] {
        let e = error_of(&with_bad_coefficient(ring, "1/0"));
        assert!(e.starts_with("$.tplus[0][4]"), "{e}");
    }
}

#[test]
fn non_canonical_residue_is_rejected() {
    let e = error_of(&with_bad_coefficient(f5(), "7"));
    assert!(e.starts_with("$.tplus[0][4]"), "{e}");
    // Over Q the same text is a fine coefficient.
    assert!(read_structure(&with_bad_coefficient(Ring::Rational, "7")).is_ok());
}

#[test]
fn schema_errors_name_the_path() {
    let mut doc = pair_json(&rectangular_pair(1, 1, f5()).unwrap());
    doc["schema_version"] = 2.into();
    assert!(error_of(&doc.to_string()).starts_with("$.schema_version"));
    let mut doc = pair_json(&rectangular_pair(1, 1, f5()).unwrap());
    doc["extra"] = 1.into();
    assert!(error_of(&doc.to_string()).contains("extra"));
    let mut doc = pair_json(&rectangular_pair(1, 1, f5()).unwrap());
    doc["tplus"][0][0] = 9.into();
    assert!(error_of(&doc.to_string()).starts_with("$.tplus[0][0]"));
    assert!(read_structure("{").is_err());
}
