use std::process::Command;

fn enrich(args: &[&str]) -> (i32, String, String) {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");
    let out = Command::new(env!("CARGO_BIN_EXE_enrich"))
        .current_dir(dir)
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn homology_prints_the_invariant_factor() {
    let (code, out, _) = enrich(&["homology", "z_mod_3.txt", "--degree", "0"]);
    assert_eq!(code, 0);
    assert_eq!(out, "H_0 = Z/3\n");
}

#[test]
fn failing_axioms_exit_one_and_name_the_diagram() {
    let (code, out, _) = enrich(&["axioms", "a2_mutated_z.txt"]);
    assert_eq!(code, 1);
    assert!(out.contains("failure: associativity at (a, a, a, b)"));
}

#[test]
fn input_errors_exit_two_on_stderr() {
    let (code, out, err) = enrich(&["homology", "nope.txt"]);
    assert_eq!((code, out.as_str()), (2, ""));
    assert!(err.starts_with("error: nope.txt"));
    let (code, _, err) = enrich(&["homology", "a2_z.txt"]);
    assert_eq!(code, 2);
    assert!(err.contains("expected a complex"));
    let (code, _, _) = enrich(&["--ring", "Q", "homology", "z_mod_3.txt"]);
    assert_eq!(code, 2);
    let (code, _, err) = enrich(&["--verify-axioms", "format", "a2_mutated_z.txt"]);
    assert_eq!(code, 2);
    assert!(err.contains("axioms fail"));
}

#[test]
fn natural_iso_fixture_passes() {
    let (code, out, _) = enrich(&[
        "natural-iso",
        "unit_z.txt",
        "a2_cone_z.txt",
        "--object",
        "a",
        "--range",
        "-3:3",
    ]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn translation_round_trips_through_files() {
    let (code, fc, _) = enrich(&["translate", "a2_cone_dg_z.txt"]);
    assert_eq!(code, 0);
    assert_eq!(
        fc,
        std::fs::read_to_string(concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/fixtures/a2_cone_z.txt"
        ))
        .unwrap()
    );
}

#[test]
fn random_output_depends_only_on_the_seed() {
    let a = enrich(&["--seed", "9", "random", "functor-complex"]);
    let b = enrich(&["--seed", "9", "--threads", "3", "random", "functor-complex"]);
    assert_eq!(a.0, 0);
    assert_eq!(a, b);
}
