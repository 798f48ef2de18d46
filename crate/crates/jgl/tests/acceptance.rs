//! Runs every acceptance suite through the `jgl` binary three times and
//! prints one line per criterion.
//!
//! Criterion 13 has no witness for length-2 flags; the test pins that
//! outcome (FAIL with the supplementary length-3 witness) instead of hiding it.

use std::io::Write;
use std::process::Command;

use serde_json::Value;

struct Run {
    bytes: Vec<Vec<u8>>,
    codes: Vec<i32>,
    doc: Value,
}

fn run_suite(id: &str) -> Run {
    let mut bytes = Vec::new();
    let mut codes = Vec::new();
    for _ in 0..3 {
        let out = Command::new(env!("CARGO_BIN_EXE_jgl"))
            .args(["suite", "--name", id])
            .output()
            .expect("jgl runs");
        codes.push(out.status.code().unwrap_or(-1));
        bytes.push(out.stdout);
    }
    let doc =
        serde_json::from_slice(&bytes[0]).unwrap_or_else(|e| panic!("suite {id}: bad JSON: {e}"));
    Run { bytes, codes, doc }
}

fn checks(doc: &Value) -> Vec<(String, bool)> {
    doc["checks"]
        .as_array()
        .expect("checks")
        .iter()
        .map(|c| {
            (
                c["name"].as_str().unwrap().to_string(),
                c["status"] == "pass",
            )
        })
        .collect()
}

fn check<'a>(doc: &'a Value, name: &str) -> &'a Value {
    doc["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("missing check {name}"))
}

/// Names that must be present (and pass) besides "everything passes".
fn required(id: &str) -> &'static [&'static str] {
    match id {
        "axioms" => &[
            "q/rectangular(3,3)/LJP2+",
            "f5/spin(4)/LJP2-",
            "f5/loop(3)/LJP1+",
        ],
        "fundamental" => &[
            "rectangular(1,2)/MethodsAgree+",
            "spin(3)/exhaustive/FundamentalFormula-",
        ],
        "meyberg" => &["rectangular(1,3)/Homotopes", "hermitian(2)/Homotopes"],
        "invertibility" => &[
            "scalar/SharpIsInverse",
            "scalar/HomotopeUnit",
            "rectangular(1,2)/NoInvertible",
            "f5/scalar/ExactMatch",
            "f5/hermitian(2)/ExactMatch",
        ],
        "jordan-lie" => &[
            "f5/rectangular(3,3)/polarized/LT3",
            "q/scalar/ZeroLts",
            "f5/loop(3)/ZeroLts",
        ],
        "tkk" => &[
            "q/rectangular(3,3)/PairRecovered",
            "rectangular(1,1)/Dimension3",
            "rectangular(1,1)/Sl2Bracket",
        ],
        "geometry" => &[
            "gras1_f5_2/ChartLaw",
            "gras2_f5_4/ChartLaw",
            "gras2_f5_4/PrRepresentativeIndependence",
            "gras1_f5_2/AffineIndependence",
            "gras2_f5_4/AffineIndependence",
        ],
        "symmetric-space" => &[
            "gras1_f5_2/M3",
            "gras2_f5_4/M1",
            "gras2_f5_4/M2",
            "gras2_f5_4/M3",
        ],
        "flags" => &[
            "f5_4/GradingRoundTrip",
            "gl2_f5/Crosswise",
            "gl3_5grading_f7/EulerOperator",
            "gl3_5grading_f5/RingConstraint",
        ],
        "exp-bijection" => &[
            "sl2/Counts",
            "gl3_blocks12/Counts",
            "gl3_blocks12/Surjective",
        ],
        "orbit" => &["sl2/OrbitSize", "gl3_blocks12/OrbitSize"],
        "states" => &[
            "gras1_f5_3/Bijection",
            "gras2_f5_4/Bijection",
            "gras2_f5_4/f(1,3)/StatesMatchFlags",
            "lines_m2/PureStatesAreLines",
            "lines_m3/PureStatesAreLines",
        ],
        _ => &[],
    }
}

#[test]
fn acceptance_criteria() {
    let ids = [
        "axioms",
        "fundamental",
        "meyberg",
        "invertibility",
        "jordan-lie",
        "tkk",
        "geometry",
        "symmetric-space",
        "flags",
        "exp-bijection",
        "orbit",
        "states",
        "affine-failure",
    ];
    let mut err = std::io::stderr();
    let mut identical = true;
    let mut unexpected = Vec::new();
    for (i, id) in ids.iter().enumerate() {
        let run = run_suite(id);
        let all = checks(&run.doc);
        let same = run.bytes.windows(2).all(|w| w[0] == w[1])
            && run.codes.windows(2).all(|w| w[0] == w[1]);
        identical &= same;
        let failed: Vec<&String> = all.iter().filter(|(_, ok)| !ok).map(|(n, _)| n).collect();
        let missing: Vec<&str> = required(id)
            .iter()
            .copied()
            .filter(|n| !all.iter().any(|(m, ok)| m == n && *ok))
            .collect();
        let pass = failed.is_empty() && missing.is_empty() && run.codes[0] == 0;
        let detail = if pass {
            format!("{} checks", all.len())
        } else if !missing.is_empty() {
            format!("missing or failing: {}", missing.join(", "))
        } else {
            let names: Vec<&str> = failed.iter().map(|s| s.as_str()).collect();
            format!("failing: {}", names.join(", "))
        };
        writeln!(
            err,
            "criterion {:>2} {:<16} {}  {}",
            i + 1,
            id,
            if pass { "PASS" } else { "FAIL" },
            detail
        )
        .unwrap();
        if *id == "affine-failure" {
            // Recorded outcome: no witness for length-2 flags, one for length 3.
            assert!(!pass, "criterion 13 now passes; update the decision record");
            let two = check(&run.doc, "LengthTwoWitness");
            assert_eq!(two["status"], "fail");
            assert!(two["witness"]
                .as_str()
                .unwrap()
                .starts_with("no origin dependence"));
            let three = check(&run.doc, "LengthThreeExpWitness");
            assert_eq!(three["status"], "pass");
            assert!(three["witness"].as_str().unwrap().contains("alpha="));
            assert_eq!(run.codes[0], 1);
        } else if !pass {
            unexpected.push(*id);
        }
        if *id == "orbit" {
            assert_eq!(run.doc["data"]["orbit_size"]["sl2"], 6);
            assert_eq!(run.doc["data"]["orbit_size"]["gl3_blocks12"], 31);
        }
    }
    writeln!(
        err,
        "criterion 14 {:<16} {}  3 runs per suite",
        "determinism",
        if identical { "PASS" } else { "FAIL" }
    )
    .unwrap();
    assert!(identical, "some suite was not byte-identical across runs");
    assert!(unexpected.is_empty(), "failing criteria: {unexpected:?}");
}
