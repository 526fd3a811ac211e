use std::process::Command;

use proptest::prelude::*;
use qgrass_cli::tasks::standard_monomial_count;
use qgrass_cli::{parse_expression, run_task, Conv, Params, ParseError, Task};
use qgrass_core::coeffs::{q_int, Laurent, LocScalar, QConv};
use qgrass_core::hopf::QuantumMatrix;
use qgrass_core::ncalg::{NCPoly, Word};

fn labels(n: usize) -> Vec<String> {
    QuantumMatrix::new(n, QConv::Standard)
        .unwrap()
        .pres()
        .labels()
        .to_vec()
}

fn params(n: usize, r: usize, order: usize, deg: usize) -> Params {
    Params {
        n,
        r,
        order,
        deg,
        ..Params::default()
    }
}

fn qgrass(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qgrass"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

fn scalar() -> impl Strategy<Value = LocScalar> {
    (
        prop::collection::vec((-3i32..=3, -5i64..=5, 1i64..=3), 0..3),
        0u32..=2,
    )
        .prop_map(|(t, d)| {
            let l = Laurent::from_terms(t.into_iter().map(|(k, a, b)| (k, q_int(a) / q_int(b))));
            LocScalar::new(l, d)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn printer_round_trip(
        terms in prop::collection::vec((prop::collection::vec(0u16..4, 0..4), scalar()), 0..4)
    ) {
        let l = labels(2);
        let p = NCPoly::from_terms(terms.into_iter().map(|(w, c)| (Word::from_slice(&w), c)));
        let text = p.display_with(&l);
        prop_assert_eq!(parse_expression(&text, &l).unwrap(), p);
    }
}

#[test]
fn parser_examples() {
    let l = labels(3);
    assert_eq!(
        parse_expression("x[9,9]", &l),
        Err(ParseError::UnknownGenerator("x[9,9]".into()))
    );
    let p = parse_expression(" x[1,2] * x[1,1] ", &l).unwrap();
    assert_eq!(p.display_with(&l), "x[1,2]*x[1,1]");
    assert!(matches!(
        parse_expression("x[1,2", &l),
        Err(ParseError::SyntaxError { pos: 6, .. })
    ));
}

#[test]
fn manin_confluence_task_n3() {
    let r = run_task(Task::ManinConfluence, &params(3, 1, 2, 2)).unwrap();
    assert!(r.pass);
    assert_eq!(r.checks.len(), 18);
}

#[test]
fn poisson_task_flags_the_diagonal_entries() {
    let r = run_task(Task::PoissonTable, &params(3, 1, 2, 2)).unwrap();
    assert!(r.pass);
    assert_eq!(r.flags.len(), 9);
    let r2 = run_task(Task::PoissonTable, &params(2, 1, 2, 2)).unwrap();
    assert_eq!(r2.flags.len(), 1);
}

#[test]
fn main_theorem_task() {
    let r = run_task(Task::MainTheorem, &params(2, 1, 3, 3)).unwrap();
    assert!(r.pass);
    assert_eq!(r.residual_norms, vec!["mu[2,1]: 0 0 0".to_string()]);
}

#[test]
fn plucker_oracle_matches_task() {
    assert_eq!(standard_monomial_count(4, 2, 2), 20);
    let r = run_task(Task::PluckerKernel, &params(4, 2, 2, 2)).unwrap();
    assert!(r.pass, "{}", r.to_text());
}

#[test]
fn inverted_convention_keeps_structure() {
    let p = Params {
        q_conv: Conv::Inverted,
        ..params(2, 1, 3, 2)
    };
    for t in [
        Task::ManinConfluence,
        Task::QdetCentral,
        Task::Coaction,
        Task::PluckerKernel,
        Task::Flatness,
        Task::PoissonTable,
        Task::VeeLimit,
        Task::MainTheorem,
    ] {
        let r = run_task(t, &p).unwrap();
        assert!(r.pass, "{}", r.to_text());
    }
}

#[test]
fn json_is_byte_stable() {
    let a = qgrass(&["verify", "coideal", "--n", "3", "--order", "2", "--json"]);
    let b = qgrass(&["verify", "coideal", "--n", "3", "--order", "2", "--json"]);
    assert_eq!(a, b);
    assert_eq!(a.0, 0);
    let v: serde_json::Value = serde_json::from_str(&a.1).unwrap();
    assert_eq!(v["check"], "coideal");
    assert_eq!(v["pass"], true);
    assert!(v.get("wall_time").is_none());
}

#[test]
fn exit_codes() {
    assert_eq!(qgrass(&["verify", "qdet-central", "--n", "3"]).0, 0);
    assert_eq!(qgrass(&["verify", "big-cell", "--n", "3", "--r", "2"]).0, 1);
    assert_eq!(qgrass(&["nf", "x[5,1]"]).0, 2);
    assert_eq!(qgrass(&["verify", "no-such-task"]).0, 2);
    let (code, out) = qgrass(&["nf", "x[2,1]*x[1,1]"]);
    assert_eq!((code, out.trim()), (0, "q^-1*x[1,1]*x[2,1]"));
}

#[test]
fn verify_all_small() {
    let (code, out) = qgrass(&["verify", "all", "--n", "2"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.matches("[PASS]").count(), 12);
}
