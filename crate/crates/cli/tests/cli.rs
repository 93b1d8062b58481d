use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_altchar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn csv_rows(args: &[&str]) -> (Vec<String>, Vec<Vec<String>>) {
    let mut full = vec!["--format", "csv"];
    full.extend_from_slice(args);
    let out = run(&full);
    assert!(out.status.success(), "{full:?}");
    let mut r = csv::Reader::from_reader(out.stdout.as_slice());
    let header = r.headers().unwrap().iter().map(String::from).collect();
    let rows = r
        .records()
        .map(|rec| rec.unwrap().iter().map(String::from).collect())
        .collect();
    (header, rows)
}

/// One invocation per subcommand; each has a checked-in golden output.
const CASES: &[(&str, &[&str])] = &[
    (
        "eigmult_an_vector",
        &[
            "eigmult", "--group", "an", "--irrep", "2,1:+", "--class", "3:+",
        ],
    ),
    (
        "eigmult_an_single",
        &[
            "eigmult", "--group", "an", "--irrep", "4,4", "--class", "5,3:-", "--i", "-1",
        ],
    ),
    (
        "eigmult_sn_vector",
        &[
            "eigmult", "--group", "sn", "--irrep", "3,2,1", "--class", "4,2",
        ],
    ),
    ("bias_single", &["bias", "--mu", "15,9,3", "--i", "9"]),
    ("bias_vector", &["bias", "--mu", "5,3"]),
    (
        "invariant_an",
        &[
            "invariant",
            "--group",
            "an",
            "--irrep",
            "4,4",
            "--class",
            "5,3:+",
        ],
    ),
    (
        "invariant_sn",
        &[
            "invariant",
            "--group",
            "sn",
            "--irrep",
            "3,1",
            "--class",
            "2,2",
        ],
    ),
    (
        "unisingular_an",
        &["unisingular", "--group", "an", "--irrep", "2,2:+"],
    ),
    ("swanson", &["swanson", "--n", "6"]),
    (
        "swanson_as_printed",
        &["swanson", "--n", "6", "--as-printed"],
    ),
    ("power_conj", &["power-conj", "--mu", "5,3", "--i", "2"]),
    ("global_closed_form", &["global", "--mu", "5,3,1"]),
    ("global_undecided", &["global", "--mu", "4,2,1,1"]),
    ("global_verified", &["global", "--mu", "5,3", "--verify"]),
    ("chartable", &["chartable", "--n", "5"]),
    ("selftest", &["selftest"]),
];

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.json"))
}

/// Set `UPDATE_GOLDEN=1` to rewrite the files after an intended change.
#[test]
fn golden_outputs() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for (name, args) in CASES {
        let out = run(args);
        assert!(
            out.status.success(),
            "{name}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let path = golden_path(name);
        if update {
            std::fs::write(&path, &out.stdout).unwrap();
            continue;
        }
        let expected = std::fs::read_to_string(&path)
            .unwrap_or_else(|_| panic!("{}: missing, run with UPDATE_GOLDEN=1", path.display()));
        assert_eq!(String::from_utf8_lossy(&out.stdout), expected, "{name}");
    }
}

#[test]
fn outputs_match_schema() {
    let schema: Value = serde_json::from_str(include_str!("../schema/output.schema.json")).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).expect("schema compiles");
    let mut docs: Vec<Value> = CASES.iter().map(|(_, args)| json(args)).collect();
    docs.push(json(&["--timing", "selftest"]));
    for doc in &docs {
        if let Err(errors) = compiled.validate(doc) {
            let msgs: Vec<String> = errors
                .map(|e| format!("{e} at {}", e.instance_path))
                .collect();
            panic!("{}: {msgs:?}", doc["command"]);
        }
    }
    // The schema is not vacuous.
    let mut bad = docs[0].clone();
    bad["results"]["entries"] = serde_json::json!([-1]);
    assert!(!compiled.is_valid(&bad));
}

#[test]
fn documented_examples() {
    let v = json(&["bias", "--mu", "15,9,3", "--i", "9"]);
    assert_eq!(v["results"][0]["abs_d"], 6);
    assert_eq!(v["results"][0]["d"], 6);

    let v = json(&[
        "invariant",
        "--group",
        "an",
        "--irrep",
        "4,4",
        "--class",
        "5,3:+",
    ]);
    assert_eq!(v["results"]["invariant"], false);

    let v = json(&[
        "eigmult", "--group", "an", "--irrep", "2,1:+", "--class", "3:+",
    ]);
    assert_eq!(v["results"]["entries"], serde_json::json!([0, 1, 0]));
}

#[test]
fn csv_agrees_with_json() {
    let args: &[&str] = &["eigmult", "--group", "sn", "--irrep", "4,1", "--class", "5"];
    let v = json(args);
    let (header, rows) = csv_rows(args);
    assert_eq!(rows.len(), 1);
    for (k, entry) in v["results"]["entries"]
        .as_array()
        .unwrap()
        .iter()
        .enumerate()
    {
        let col = header
            .iter()
            .position(|h| *h == format!("entries_{k}"))
            .unwrap();
        assert_eq!(rows[0][col], entry.to_string());
    }

    let args: &[&str] = &["swanson", "--n", "8"];
    let v = json(args);
    let (header, rows) = csv_rows(args);
    let results = v["results"].as_array().unwrap();
    assert_eq!(rows.len(), results.len());
    for (row, obj) in rows.iter().zip(results) {
        assert_eq!(row[0], obj["lambda"].as_str().unwrap());
        let missing: Vec<String> = header
            .iter()
            .zip(row)
            .filter(|(h, c)| h.starts_with("missing_") && !c.is_empty())
            .map(|(_, c)| c.clone())
            .collect();
        let expected: Vec<String> = obj["missing"]
            .as_array()
            .unwrap()
            .iter()
            .map(Value::to_string)
            .collect();
        assert_eq!(missing, expected);
    }

    let args: &[&str] = &["chartable", "--n", "6"];
    let v = json(args);
    let (header, rows) = csv_rows(args);
    let classes = v["results"]["classes"].as_array().unwrap();
    assert_eq!(header.len(), classes.len() + 2);
    assert_eq!(
        rows.len(),
        v["results"]["irreps"].as_array().unwrap().len() + 1
    );
    for (c, class) in classes.iter().enumerate() {
        assert_eq!(header[c + 2], class["label"].as_str().unwrap());
        assert_eq!(rows[0][c + 2], class["size"].as_str().unwrap());
    }
}

#[test]
fn exit_codes() {
    let cases: &[&[&str]] = &[
        &[
            "eigmult", "--group", "an", "--irrep", "2,1", "--class", "3:+",
        ],
        &["eigmult", "--group", "an", "--irrep", "3", "--class", "3"],
        &["eigmult", "--group", "sn", "--irrep", "3:+", "--class", "3"],
        &["eigmult", "--group", "sn", "--irrep", "3,x", "--class", "4"],
        &["eigmult", "--group", "sn", "--irrep", "", "--class", "3"],
        &["eigmult", "--group", "sn", "--irrep", "2,1", "--class", "4"],
        &["bias", "--mu", "4,2"],
        &["power-conj", "--mu", "5,3", "--i", "5"],
        &["global", "--mu", "3,2"],
        &["chartable", "--n", "15"],
        &["swanson", "--n", "31"],
        &["frobnicate"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    let out = run(&["chartable", "--n", "15"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("--unsafe-bounds"));
}

#[test]
fn negative_exponents_wrap() {
    let neg = json(&[
        "eigmult", "--group", "an", "--irrep", "4,4", "--class", "5,3:+", "--i", "-1",
    ]);
    let pos = json(&[
        "eigmult", "--group", "an", "--irrep", "4,4", "--class", "5,3:+", "--i", "14",
    ]);
    assert_eq!(
        neg["results"]["multiplicity"],
        pos["results"]["multiplicity"]
    );
}

#[test]
fn timing_is_opt_in() {
    let plain = json(&["power-conj", "--mu", "7,3,1", "--i", "2"]);
    assert!(plain.get("timing_ms").is_none());
    let timed = json(&["--timing", "power-conj", "--mu", "7,3,1", "--i", "2"]);
    assert!(timed["timing_ms"].as_f64().unwrap() >= 0.0);
}
