//! Frozen JSON output. Regenerate a file with the listed invocation and
//! `--format json` only when the schema changes on purpose.

use std::process::Command;

const CASES: &[(&str, &[&str])] = &[
    (
        "nsym_embed_R_21",
        &["nsym", "embed", "--basis", "R", "--I", "2,1"],
    ),
    (
        "idem_eulerian_4_1",
        &["idem", "eulerian", "--n", "4", "--k", "1"],
    ),
    (
        "birkhoff_phi_plus_200",
        &["birkhoff", "phi-plus", "--forest", "200"],
    ),
    (
        "ehrhart_qcount_200_3_interior",
        &[
            "ehrhart",
            "qcount",
            "--forest",
            "200",
            "--n",
            "3",
            "--interior",
        ],
    ),
    ("idem_qsolomon_3", &["idem", "qsolomon", "--n", "3"]),
    (
        "verify_series_inverse_4",
        &["verify", "--suite", "series-inverse", "--n", "4"],
    ),
    (
        "hopf_coproduct_2100",
        &["hopf", "coproduct", "--code", "2100"],
    ),
    (
        "tamari_up_0021_reverse",
        &["tamari", "up", "--code", "0021", "--reverse"],
    ),
];

#[test]
fn golden_json() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for (name, args) in CASES {
        let out = Command::new(env!("CARGO_BIN_EXE_nck"))
            .args(*args)
            .args(["--format", "json"])
            .output()
            .unwrap();
        assert!(out.status.success(), "{name}");
        let want = std::fs::read_to_string(dir.join(format!("{name}.json"))).unwrap();
        assert_eq!(String::from_utf8(out.stdout).unwrap(), want, "{name}");
    }
}
