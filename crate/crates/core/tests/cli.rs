use std::fs;
use std::path::PathBuf;

use fdalgebra::cli::{run, EXIT_INPUT, EXIT_OK, EXIT_SINGULAR, EXIT_VERIFY};
use fdalgebra::additive::parse_complex;
use fdalgebra::io::AlgebraFile;
use fdalgebra::Rational;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).to_string_lossy().into_owned()
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("fdalgebra").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn machine_value<'a>(out: &'a str, key: &str) -> Option<&'a str> {
    out.lines().find_map(|l| l.strip_prefix(key)?.strip_prefix('='))
}

#[test]
fn worked_system_solves() {
    let (code, out, _) = cli(&["solve", &data("complex_system.json")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("z = 3/5 - 2i"), "{out}");
    assert!(out.contains("w = 1/5 - i"), "{out}");
    assert_eq!(out.matches(" ok").count(), 2);
}

#[test]
fn worked_system_machine_output_reparses() {
    let (code, out, _) = cli(&["--machine", "solve", &data("complex_system.json"), "--quasidets"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(parse_complex(machine_value(&out, "solution.z").unwrap()).unwrap().to_string(), "3/5 - 2i");
    let coords: Vec<Rational> = machine_value(&out, "solution.w.coords")
        .unwrap()
        .split_whitespace()
        .map(|s| s.parse().unwrap())
        .collect();
    assert_eq!(coords, vec![Rational::new(1, 5), Rational::from(-1)]);
    assert_eq!(machine_value(&out, "quasidet.0.0"), Some("1 + 2/3*I"));
    assert_eq!(machine_value(&out, "quasidet.1.1"), Some("-3 - 2*I"));
}

#[test]
fn identity_system_echoes_rhs() {
    let (code, out, _) = cli(&["--machine", "solve", &data("identity_system.json")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(machine_value(&out, "solution.x1"), Some("2/3 - i"));
    assert_eq!(machine_value(&out, "solution.x2"), Some("5i"));
}

#[test]
fn singular_system_exits_3_and_names_the_pivot() {
    let (code, out, err) = cli(&["solve", &data("singular_system.json")]);
    assert_eq!(code, EXIT_SINGULAR);
    assert!(out.contains("no pivot"), "{out}");
    assert!(err.contains("singular"), "{err}");
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"{"algebra": "complex", "matrix": [["1", "2"]], "rhs": ["1"]}"#).unwrap();
    assert_eq!(cli(&["solve", bad.to_str().unwrap()]).0, EXIT_INPUT);
    fs::write(&bad, "not json").unwrap();
    assert_eq!(cli(&["solve", bad.to_str().unwrap()]).0, EXIT_INPUT);
    assert_eq!(cli(&["solve", "/nonexistent/file.json"]).0, EXIT_INPUT);
    assert_eq!(cli(&["tables", "sedenion"]).0, EXIT_INPUT);
    assert_eq!(cli(&["algebra", "builtin", "quaternion", "--a", "0"]).0, EXIT_INPUT);
}

#[test]
fn help_exits_0() {
    let (code, out, _) = cli(&["--help"]);
    assert_eq!(code, EXIT_OK);
    for sub in ["solve", "tables", "verify", "basis", "algebra", "map"] {
        assert!(out.contains(sub), "{sub} missing from help");
    }
}

#[test]
fn quaternion_tables_show_the_sign_matrices() {
    let (code, out, _) = cli(&["--machine", "tables", "quaternion"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(machine_value(&out, "f.row.0"), Some("1 -1 -1 -1"));
    assert_eq!(machine_value(&out, "f.row.3"), Some("1 1 1 -1"));
    assert_eq!(machine_value(&out, "f_inv.factor"), Some("1/4"));
    assert_eq!(machine_value(&out, "blocks.consistent"), Some("true"));
}

#[test]
fn octonion_tables_carry_the_twelfth() {
    let (code, out, _) = cli(&["--machine", "tables", "octonion"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(machine_value(&out, "f_inv.factor"), Some("1/12"));
    assert_eq!(machine_value(&out, "f_inv.scaled.row.0"), Some("5 1 1 1 1 1 1 1"));
    assert_eq!(machine_value(&out, "f_inv.scaled.row.1"), Some("-1 -5 1 1 1 1 1 1"));
}

#[test]
fn complex_tables_list_relations() {
    let (code, out, _) = cli(&["tables", "complex"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("f_0^0 = f^00 - f^11"));
    assert!(out.contains("f_1^0 = -f^01 - f^10"));
}

#[test]
fn machine_fractions_round_trip() {
    for args in [
        &["--machine", "tables", "octonion", "--relations"][..],
        &["--machine", "basis", "complex"],
        &["--machine", "map", "convert", "--algebra", "H", "--coords", &data("quaternion_conjugation.txt")],
    ] {
        let (code, out, _) = cli(args);
        assert_eq!(code, EXIT_OK);
        for line in out.lines().filter(|l| l.contains(".row.") || l.starts_with("f_inv.factor")) {
            let value = line.split_once('=').unwrap().1;
            for tok in value.split_whitespace() {
                let r: Rational = tok.parse().unwrap();
                assert_eq!(r.to_string(), tok);
            }
        }
    }
}

#[test]
fn verify_suites_pass_and_are_deterministic() {
    for suite in ["ch4", "teichmueller", "quasidet"] {
        let (code, out, _) = cli(&["verify", suite]);
        assert_eq!(code, EXIT_OK, "{out}");
        assert_eq!(cli(&["verify", suite]).1, out);
    }
}

#[test]
fn verify_machine_output() {
    let (code, out, _) = cli(&["--machine", "verify", "bases"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(machine_value(&out, "passed"), machine_value(&out, "total"));
    assert!(out.lines().all(|l| l.contains('=')));
}

#[test]
fn verification_failure_code_is_distinct() {
    assert_ne!(EXIT_VERIFY, EXIT_OK);
    assert_ne!(EXIT_VERIFY, EXIT_INPUT);
}

#[test]
fn basis_counts() {
    let count = |alg: &str| {
        let (code, out, _) = cli(&["--machine", "basis", alg]);
        assert_eq!(code, EXIT_OK);
        machine_value(&out, "generators").unwrap().to_string()
    };
    assert_eq!(count("complex"), "2");
    assert_eq!(count("quaternion"), "1");
    assert_eq!(count("octonion"), "1");
}

#[test]
fn basis_without_unit_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zero.json");
    fs::write(&path, r#"{"dim": 2, "labels": ["a", "b"], "constants": [[0, 0, 1, "1"]]}"#).unwrap();
    let (code, _, err) = cli(&["basis", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("unit"), "{err}");
}

#[test]
fn builtin_algebra_file_round_trips() {
    let (code, out, _) = cli(&["algebra", "builtin", "quaternion", "--a", "2", "--b", "-3"]);
    assert_eq!(code, EXIT_OK);
    let alg = AlgebraFile::parse(&out).unwrap().to_algebra().unwrap();
    assert_eq!(alg.constant(1, 1, 0), Rational::from(2));
    assert_eq!(alg.constant(3, 3, 0), Rational::from(6));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("o.json");
    fs::write(&path, cli(&["algebra", "builtin", "octonion"]).1).unwrap();
    let (code, out, _) = cli(&["--machine", "basis", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(machine_value(&out, "generators"), Some("1"));
}

#[test]
fn map_convert() {
    let (code, out, _) = cli(&["--machine", "map", "convert", "--algebra", "H", "--coords", &data("quaternion_conjugation.txt")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(machine_value(&out, "particular.row.0"), Some("-1/2 0 0 0"));
    assert_eq!(machine_value(&out, "unique"), Some("true"));

    let (code, _, err) = cli(&["map", "convert", "--algebra", "C", "--coords", &data("complex_conjugation.txt")]);
    assert_eq!(code, EXIT_SINGULAR);
    assert!(err.contains("not in the image"), "{err}");

    let (code, out, _) = cli(&["map", "convert", "--algebra", "C", "--coords", &data("complex_conjugation.txt"), "--order", "right"]);
    assert_eq!(code, EXIT_SINGULAR, "{out}");
}

#[test]
fn map_convert_reports_free_directions() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("id.txt");
    fs::write(&path, "1 0\n0 1\n").unwrap();
    let (code, out, _) = cli(&["--machine", "map", "convert", "--algebra", "complex", "--coords", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(machine_value(&out, "rank"), Some("2"));
    assert_eq!(machine_value(&out, "unique"), Some("false"));
    assert!(out.contains("nullspace.1.row.0"));
}

#[test]
fn map_basis_matches_basis() {
    let a = cli(&["--machine", "map", "basis", "--algebra", "complex"]);
    let b = cli(&["--machine", "basis", "complex"]);
    assert_eq!(a, b);
}

#[test]
fn quaternion_system_with_coordinate_entries() {
    let (code, out, _) = cli(&["solve", &data("quaternion_system.json")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("x = 2 - i + 1/2*k"), "{out}");
}
