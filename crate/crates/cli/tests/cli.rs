use threepage::diagram::projection_crossings;
use threepage::format;
use threepage_cli::render::{render, Format, RenderSpec};
use threepage_cli::run;

const HOPF: &str = "n=6; P1:1-3,4-6; P2:2-6,3-5; P3:1-5,2-4";
const TRIANGLE: &str = "n=3; P1:1-2; P2:2-3; P3:1-3";

fn sh(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut argv = vec!["threepage"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn construct_tnn_two_verifies() {
    let (code, out, _) = sh(&["construct", "tnn", "--n", "2", "--verify"], "");
    assert_eq!(code, 0);
    let first = out.lines().next().unwrap();
    let p = format::parse(first).unwrap();
    let hopf = format::parse(HOPF).unwrap();
    let prof = |p| threepage::InvariantProfile::of_presentation(p).unwrap();
    assert_eq!(prof(&p), prof(&hopf));
    assert_eq!(p.arc_count(), 6);
    assert!(out.contains("verification PASS"));
}

#[test]
fn bounds_table_has_tight_value() {
    let (code, out, _) = sh(&["bounds", "--p", "2", "--q", "5"], "");
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["upper_tight", "11"]), "{out}");
    let (code, out, _) = sh(&["bounds", "--p", "-5", "--q", "2"], "");
    assert_eq!(code, 0);
    assert!(out.contains("T(2,5)") && out.contains("mirror"));
}

#[test]
fn exit_codes() {
    assert_eq!(sh(&["validate", "-"], "not a presentation").0, 2);
    assert_eq!(sh(&["validate", "-"], "n=3; P1:1-2; P2:1-2; P3:1-3").0, 1);
    let (code, out, _) = sh(&["validate", "-"], HOPF);
    assert_eq!((code, out.as_str()), (0, "ok\n"));
    let (code, _, err) = sh(&["bounds", "--p", "2", "--frobnicate", "1"], "");
    assert_eq!(code, 2);
    assert!(err.contains("--frobnicate"));
    assert_eq!(sh(&["bounds", "--p", "1", "--q", "5"], "").0, 1);
    assert_eq!(sh(&["construct", "tpq", "--p", "2", "--q", "3", "--tight"], "").0, 1);
    assert_eq!(sh(&["braid", "s3", "--strands", "2"], "").0, 1);
    assert_eq!(sh(&["validate", "/nonexistent/file"], "").0, 2);
    assert_eq!(sh(&["--help"], "").0, 0);
}

#[test]
fn construct_output_round_trips() {
    let cases: &[&[&str]] = &[
        &["construct", "tnn", "--n", "3"],
        &["construct", "tpq", "--p", "2", "--q", "3"],
        &["construct", "tpq", "--p", "3", "--q", "5"],
        &["construct", "tpq", "--p", "2", "--q", "6", "--tight"],
        &["construct", "tpq", "--p", "3", "--q", "4", "--json"],
    ];
    for args in cases {
        let (code, text, _) = sh(args, "");
        assert_eq!(code, 0);
        assert_eq!(sh(&["validate", "-"], &text).0, 0, "{args:?}");
        let (code, inv, _) = sh(&["invariants", "-"], &text);
        assert_eq!(code, 0);
        let p = format::parse_any(&text).unwrap();
        assert_eq!(inv, format!("{}\n", threepage::InvariantProfile::of_presentation(&p).unwrap()));
    }
}

#[test]
fn invariants_in_t() {
    let (code, out, _) = sh(&["invariants", "-", "--t"], "n=8; P1:1-3,4-8,5-7; P2:1-5,2-4,6-8; P3:2-7,3-6");
    assert_eq!(code, 0);
    // a trefoil: t + t^3 - t^4 or its mirror
    assert!(out.contains("t^3") || out.contains("t^-3"), "{out}");
}

#[test]
fn components_and_diagram() {
    let (code, out, _) = sh(&["components", "-"], HOPF);
    assert_eq!(code, 0);
    assert!(out.starts_with("components=2\n"));
    let (code, out, _) = sh(&["diagram", "-"], HOPF);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("components=2 crossings=2"));
    assert_eq!(out.lines().filter(|l| l.starts_with("X ")).count(), 2);
}

#[test]
fn perturbation_is_seeded_and_preserves_jones() {
    let args = ["diagram", "-", "--perturb", "30", "--seed", "11", "--check"];
    let (code, a, _) = sh(&args, HOPF);
    assert_eq!(code, 0);
    assert!(a.ends_with("jones preserved: PASS\n"));
    assert_eq!(a, sh(&args, HOPF).1);
    let other = sh(&["diagram", "-", "--perturb", "30", "--seed", "12"], HOPF).1;
    assert_ne!(a.lines().next(), None);
    assert_ne!(other, a);
}

#[test]
fn search_and_census() {
    let (code, out, _) = sh(&["search", "--torus", "2,2", "--max-n", "6"], "");
    assert_eq!(code, 0);
    assert!(out.contains("index=6"), "{out}");
    let (code, out, _) = sh(&["search", "--braid", "s1 s1", "--strands", "2", "--max-n", "5"], "");
    assert_eq!(code, 0);
    assert!(out.contains("index>5"));
    let (code, out, _) = sh(&["census", "--n", "4"], "");
    assert_eq!(code, 0);
    let lib = threepage::search::census_text(&threepage::search::census(4).unwrap());
    assert_eq!(out, lib);
}

#[test]
fn max_n_env_limits_search() {
    // the only test touching the variable
    std::env::set_var(threepage_cli::MAX_N_ENV, "5");
    let (code, _, err) = sh(&["census", "--n", "6"], "");
    std::env::remove_var(threepage_cli::MAX_N_ENV);
    assert_eq!(code, 1);
    assert!(err.contains("limit"), "{err}");
}

#[test]
fn braid_report() {
    let (code, out, _) = sh(&["braid", "s1 s2 s1 s2", "--strands", "3", "--against", "s1 s2 s1 s2"], "");
    assert_eq!(code, 0);
    assert!(out.contains("cycles          1"));
    assert!(out.contains("closure-profile PASS"));
    let (code, out, _) = sh(&["braid", "s1", "--strands", "2", "--against", "-s1"], "");
    assert_eq!(code, 1);
    assert!(out.contains("exponent-sum FAIL"));
}

fn gaps(svg: &str) -> usize {
    svg.matches("class=\"gap\"").count()
}

#[test]
fn svg_goldens() {
    let (_, hopf, _) = sh(&["render", "-"], HOPF);
    assert_eq!(hopf, include_str!("golden/hopf.svg"));
    let (_, tri, _) = sh(&["render", "-"], TRIANGLE);
    assert_eq!(tri, include_str!("golden/triangle.svg"));
    let (_, ascii, _) = sh(&["render", "-", "--format", "ascii"], HOPF);
    assert_eq!(ascii, include_str!("golden/hopf.txt"));
}

#[test]
fn svg_gap_counts_follow_projection() {
    let tri = render(&format::parse(TRIANGLE).unwrap(), &RenderSpec::default()).unwrap();
    assert_eq!(tri.matches("class=\"arc").count(), 3);
    assert_eq!(gaps(&tri), 0);
    let hopf = format::parse(HOPF).unwrap();
    assert_eq!(gaps(&render(&hopf, &RenderSpec::default()).unwrap()), 2);
    for (p, q) in [(2, 3), (3, 4), (2, 5)] {
        let t = threepage::torus::tpq(p, q).unwrap();
        let svg = render(&t, &RenderSpec::default()).unwrap();
        assert_eq!(gaps(&svg), projection_crossings(&t).len());
        assert_eq!(svg, render(&t, &RenderSpec::default()).unwrap());
    }
}

#[test]
fn render_options() {
    assert_eq!(sh(&["render", "-", "--scale", "-1"], HOPF).0, 2);
    let (_, out, _) = sh(&["render", "-", "--no-point-labels", "--page-labels", "--format", "ascii"], HOPF);
    assert!(out.ends_with("(over P1)\n"));
    let spec = RenderSpec { format: Format::Svg, scale: 10.0, point_labels: false, page_labels: false };
    assert!(!render(&format::parse(HOPF).unwrap(), &spec).unwrap().contains("<text"));
}
