mod common;

use clap::Parser;
use common::{golden_cases, golden_path, weyl};
use serde::de::DeserializeOwned;
use serde::Serialize;
use weyl_cli::report::*;
use weyl_cli::{run, RunConfig};

/// Set `UPDATE_GOLDEN=1` to rewrite the files after an intended change.
#[test]
fn golden_outputs() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for case in golden_cases() {
        let (code, stdout, stderr) = weyl(&case.args);
        assert_eq!(code, case.exit, "{}: {stderr}", case.name);
        let path = golden_path(&case.name);
        if update {
            std::fs::write(&path, &stdout).unwrap();
            continue;
        }
        let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden {}", case.name));
        assert_eq!(stdout, expected, "{} drifted", case.name);
    }
}

#[test]
fn headline_outputs() {
    assert_eq!(weyl(&["quiddity", "--tensor", "fixtures/zeta11.json"]).1, "3 1 2 3 2 1 3\n");
    assert_eq!(weyl(&["complex", "boundary", "--expr", "[a|b]"]).1, "[a,b] - [b,a]\n");
    let (_, cartan, _) = weyl(&["cartan", "--tensor", "fixtures/zeta3_rank3.json"]);
    assert_eq!(cartan, " 2 -1 -1\n-1  2 -1\n-1 -1  2\n");
}

#[test]
fn exit_codes() {
    let (code, _, err) = weyl(&[
        "cartan",
        "--inline",
        r#"{"modulus": 5, "degree": 2, "rank": 2, "sqrt_entries": [{"index": [1, 1], "exp": "x"}]}"#,
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("sqrt_entries[0].exp"), "{err}");

    let (code, _, err) =
        weyl(&["cartan", "--inline", r#"{"modulus": 5, "degree": 2, "rank2_profile": [1, 2, 3], "extra": 1}"#]);
    assert_eq!(code, 2);
    assert!(err.contains("extra"), "{err}");

    assert_eq!(weyl(&["no-such-command"]).0, 2);
    assert_eq!(weyl(&["cartan", "--tensor", "fixtures/missing.json"]).0, 2);

    // q_11 = 1 and q_12 q_21 = -1: no R_m vanishes
    let undefined = r#"{"modulus": 4, "degree": 2, "rank2_profile": [0, 1, 2]}"#;
    let (code, _, err) = weyl(&["cartan", "--m-max", "20", "--inline", undefined]);
    assert_eq!(code, 2, "{err}");
    assert!(err.contains("undefined"), "{err}");

    let orbit = r#"{"modulus": 20, "degree": 4, "rank2_profile": [14, 11, 13, 8, 8]}"#;
    let (code, out, _) = weyl(&["orbit", "--m-max", "64", "--inline", orbit]);
    assert_eq!(code, 1);
    assert!(out.contains("C2: FAIL"), "{out}");

    let (code, _, err) = weyl(&["complex", "homology", "--group", "Z/3", "--degree", "7"]);
    assert_eq!(code, 2);
    assert!(err.contains("WEYL_MAX_CELLS"), "{err}");
    assert_eq!(weyl(&["orbit", "--tensor", "fixtures/zeta11.json", "--max-objects", "3"]).0, 2);
}

fn roundtrip<T: Serialize + DeserializeOwned>(args: &[&str]) {
    let mut argv = vec!["weyl", "--format", "json"];
    argv.extend_from_slice(args);
    let config = RunConfig::try_parse_from(argv).unwrap();
    let out = run(&config).unwrap().output;
    let parsed: T = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    let again = serde_json::to_string_pretty(&parsed).unwrap() + "\n";
    assert_eq!(again, out, "{args:?}");
}

#[test]
fn json_round_trips() {
    std::env::set_current_dir(common::crate_dir()).unwrap();
    roundtrip::<CartanReport>(&["cartan", "--tensor", "fixtures/zeta3_rank3.json"]);
    roundtrip::<DiagnosticsReport>(&["diagnostics", "--tensor", "fixtures/zeta11.json"]);
    roundtrip::<ReflectReport>(&["reflect", "--tensor", "fixtures/zeta7.json", "--l", "2"]);
    roundtrip::<OrbitReport>(&["orbit", "--tensor", "fixtures/zeta7.json"]);
    roundtrip::<DynkinReport>(&["dynkin", "--tensor", "fixtures/zeta3_rank3.json"]);
    roundtrip::<QuiddityReport>(&["quiddity", "--tensor", "fixtures/zeta7.json"]);
    roundtrip::<FriezeReport>(&["frieze", "--cycle", "3 1 2 3 2 1 3"]);
    roundtrip::<TriangulationReport>(&["triangulate", "--cycle", "1,4,1,2,2,2"]);
    roundtrip::<RootsReport>(&["roots", "--tensor", "fixtures/zeta3_rank3.json"]);
    roundtrip::<CertificateReport>(&["verify", "recursion", "--degree", "3", "--upto", "4"]);
    roundtrip::<weyl_core::rank2::SearchReport>(&["search", "--samples", "20", "--degree", "2"]);
    roundtrip::<BoundaryReport>(&["complex", "boundary", "--expr", "[a,b||c]"]);
    roundtrip::<TableReport>(&["complex", "verify-table"]);
    roundtrip::<WitnessesReport>(&["complex", "witnesses"]);
    roundtrip::<SymcycleReport>(&["complex", "symcycle", "--lambda", "1,2", "--args", "(1,0),b", "--group", "Z^2"]);
    roundtrip::<MembershipReport>(&["complex", "membership", "--group", "Z/2", "--expr", "[a|a]"]);
    roundtrip::<HomologyReport>(&["complex", "homology", "--group", "Z/4", "--level", "0", "--degree", "1"]);
    roundtrip::<ConjectureReport>(&[
        "complex",
        "conjecture",
        "--group",
        "Z/2",
        "--lambda",
        "2",
        "--args",
        "1",
        "--betas",
        "a,a,1",
    ]);
}

#[test]
fn tensor_file_round_trip_through_reflect() {
    std::env::set_current_dir(common::crate_dir()).unwrap();
    let config = RunConfig::try_parse_from([
        "weyl",
        "--format",
        "json",
        "reflect",
        "--tensor",
        "fixtures/zeta11.json",
        "--l",
        "1",
    ])
    .unwrap();
    let report: ReflectReport = serde_json::from_str(&run(&config).unwrap().output).unwrap();
    let inline = serde_json::to_string(&report.tensor).unwrap();
    // reflecting again along the same direction returns the original aggregates
    let (code, out, _) = weyl(&["reflect", "--l", "1", "--inline", &inline]);
    assert_eq!(code, 0);
    assert!(out.contains("gamma_0 = mu^1 (mod 22)") && out.contains("gamma_4 = mu^1 (mod 22)"), "{out}");
}
