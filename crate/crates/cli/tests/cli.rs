use std::process::{Command, Output};

use capelli::elements::{capelli_c, capelli_h};
use capelli::report::SuiteReport;
use capelli::rep::{bracket_det, cayley_omega, PolyTermRepr, SuperPolynomial};
use capelli::shifted::{shifted_elementary, ShiftedPoly, ShiftedRepr};
use capelli::ugl::element::ElementRepr;
use capelli::ugl::EnvElement;
use capelli::Rat;

fn capelli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_capelli")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = capelli(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

fn element_json(args: &[&str]) -> EnvElement {
    let mut a = vec!["--format", "json", "element"];
    a.extend_from_slice(args);
    let repr: ElementRepr = serde_json::from_str(&stdout(&a)).unwrap();
    EnvElement::from_repr(&repr).unwrap()
}

#[test]
fn element_text() {
    assert_eq!(stdout(&["element", "H", "2", "2"]), "e_{2,2} + e_{1,1}e_{2,2} - e_{2,1}e_{1,2}");
    assert_eq!(stdout(&["element", "Krect", "1", "0"]), "1");
}

#[test]
fn element_json_round_trip() {
    let h = element_json(&["H", "3", "2"]);
    assert!(h.equals(&capelli_h(3, 2).unwrap()).unwrap());
    let c = element_json(&["C", "3", "1"]);
    let want = &capelli_h(3, 3).unwrap() - &capelli_h(3, 2).unwrap();
    assert!(c.equals(&want).unwrap());
    assert!(c.equals(&capelli_c(3, 1).unwrap()).unwrap());
    // render(parse(render(x))) = render(x)
    let text = stdout(&["--format", "json", "element", "Kshaped", "2,1", "2"]);
    let again = serde_json::to_string_pretty(&EnvElement::from_repr(&serde_json::from_str(&text).unwrap()).unwrap().to_repr())
        .unwrap();
    assert_eq!(text, again);
}

#[test]
fn negative_shift_and_trailing_flags() {
    let x = element_json(&["Hshift", "2", "-1"]);
    assert_eq!(x.constant_term(), Rat::from_int(2));
    assert_eq!(stdout(&["hc", "H", "2", "2", "--format", "latex"]), "x_{1} x_{2} + x_{2}");
}

#[test]
fn polynomial_elements() {
    let s = stdout(&["element", "cdet-poly", "2"]);
    assert!(s.starts_with("(1)*t^2"), "{s}");
    let s = stdout(&["element", "script-poly", "2"]);
    assert!(s.starts_with("(1)*s^2"), "{s}");
}

#[test]
fn hc_and_eigen() {
    assert_eq!(stdout(&["hc", "H", "2", "2"]), "x1*x2 + x2");
    let r: ShiftedRepr = serde_json::from_str(&stdout(&["--format", "json", "hc", "H", "3", "2"])).unwrap();
    assert_eq!(ShiftedPoly::from_repr(&r).unwrap(), shifted_elementary(2, 3).unwrap());
    assert_eq!(stdout(&["eigen", "--shape", "3,3", "--mu", "2,2,2"]), "-144");
    assert_eq!(stdout(&["eigen", "--element", "Krect 3 2", "--mu", "2,2,2"]), "-144");
    assert_eq!(stdout(&["eigen", "--shape", "3,3", "--mu", "3,3,1"]), "0");
}

#[test]
fn act_matches_capelli_identity() {
    let on = "(1|1)(2|2) + 3(1|2)^2(2|1)";
    let out = stdout(&["--format", "json", "act", "--element", "H 2 2", "--on", on, "--d", "2"]);
    let repr: Vec<PolyTermRepr> = serde_json::from_str(&out).unwrap();
    let got = SuperPolynomial::from_repr(&repr).unwrap();
    let f = SuperPolynomial::parse(on).unwrap();
    assert_eq!(got, bracket_det(2).mul(&cayley_omega(&f, 2).unwrap()));
    assert_eq!(capelli(&["act", "--element", "H 2 2", "--on", "(1|3)", "--d", "2"]).status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(capelli(&["verify", "centrality", "--element", "e12", "--n", "2"]).status.code(), Some(1));
    assert_eq!(capelli(&["verify", "centrality", "--element", "H 2 1"]).status.code(), Some(0));
    assert_eq!(capelli(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(capelli(&["element", "Q", "1"]).status.code(), Some(2));
    assert_eq!(capelli(&["--max-n", "2", "element", "H", "3", "3"]).status.code(), Some(2));
}

#[test]
fn report_json_round_trip() {
    let out = stdout(&["--format", "json", "verify", "expansion", "--shape", "3,2", "--M", "1,2"]);
    let r: SuiteReport = serde_json::from_str(&out).unwrap();
    assert!(r.passed());
    assert_eq!(r.records.len(), 1);
    assert!(r.records[0].detail.as_deref().unwrap().contains("2, -2, -2, 1"));
    assert!(r.records.iter().all(|x| !x.anchor.is_empty()));
    assert_eq!(serde_json::to_string_pretty(&r).unwrap(), out);
}

#[test]
fn hook_suite_reports_minus_144() {
    let out = stdout(&["verify", "hook", "--n", "3", "--p", "2"]);
    assert!(out.lines().any(|l| l.contains("mu=(2,2,2)") && l.contains("eigenvalue -144")), "{out}");
}

#[test]
fn reports_are_sorted_and_deterministic() {
    let a = stdout(&["--format", "json", "--jobs", "4", "verify", "koszul", "--n", "2"]);
    let b = stdout(&["--format", "json", "--jobs", "1", "verify", "koszul", "--n", "2"]);
    let strip = |s: &str| {
        let mut r: SuiteReport = serde_json::from_str(s).unwrap();
        r.records.iter_mut().for_each(|x| x.elapsed_us = 0);
        r
    };
    let (a, b) = (strip(&a), strip(&b));
    assert_eq!(a, b);
    let names: Vec<_> = a.records.iter().map(|r| (&r.name, &r.params)).collect();
    assert!(names.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn single_law() {
    let out = stdout(&["--seed", "7", "verify", "proof-machinery", "--law", "super Jacobi", "--cases", "10"]);
    assert!(out.contains("1/1 passed"), "{out}");
    assert_eq!(capelli(&["verify", "proof-machinery", "--law", "nope"]).status.code(), Some(2));
}
