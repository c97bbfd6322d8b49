//! The acceptance gate: one test per criterion, each printing a single
//! pass/fail line (run with `--nocapture` to see them as they complete).

use superweyl::realizations::{families, Algebra};
use superweyl::scalar::GaussianRational;
use superweyl::verify::axioms::{
    self, associativity_check, clifford_relations_check, grading_check, super_jacobi_matrix_check,
    super_jacobi_symbol_check, weyl_relation_check,
};
use superweyl::verify::consistency::{module_consistency, symbol_structure_consistency};
use superweyl::verify::export::export_table_json;
use superweyl::verify::generate::generate_closure;
use superweyl::verify::suites::{
    ck6_identity_check, cocycle_check, odd_generator_field_check, spo_relations_check,
    virasoro_check,
};
use superweyl::verify::table::{bracket_table, closure_check, closure_check_with_families};

fn report(criterion: &str, failures: &[String]) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("acceptance [{status}] {criterion}");
    for f in failures.iter().take(10) {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "{criterion}: {failures:?}");
}

#[test]
fn criterion_1_axioms() {
    let mut rng = axioms::Rng::new(0xacce_0001);
    let mut failures = Vec::new();
    failures.extend(weyl_relation_check());
    failures.extend(associativity_check(&mut rng, 300));
    failures.extend(clifford_relations_check(4));
    failures.extend(super_jacobi_matrix_check(&mut rng, 1000).unwrap());
    failures.extend(super_jacobi_symbol_check(&mut rng, 1000));
    report("1: algebraic axioms", &failures);
}

#[test]
fn criterion_2_sl2_and_orthosymplectic() {
    let failures = spo_relations_check(4).unwrap();
    report("2: sl(2) and sp(2|2N) relations", &failures);
}

#[test]
fn criterion_3_k2() {
    let mut failures = Vec::new();
    let table = closure_check(Algebra::K2, 4).unwrap();
    if !table.passed {
        failures.extend(table.failures);
    }
    failures.extend(virasoro_check(Algebra::K2, 4).unwrap());
    failures.extend(symbol_structure_consistency(Algebra::K2, 3, -8).unwrap());
    report("3: K(2) closure, Virasoro law and symbol homomorphism", &failures);
}

#[test]
fn criterion_4_k4hat() {
    let mut failures = Vec::new();
    let table = closure_check(Algebra::K4hat, 3).unwrap();
    if !table.passed {
        failures.extend(table.failures);
    }
    failures.extend(cocycle_check(3).unwrap());
    report("4: K'(4)-hat closure and central values", &failures);
}

#[test]
fn criterion_5_ck6() {
    let mut failures = Vec::new();
    let table = closure_check(Algebra::CK6, 3).unwrap();
    if !table.passed {
        failures.extend(table.failures);
    }
    failures.extend(odd_generator_field_check(Algebra::K4hat).unwrap());
    failures.extend(odd_generator_field_check(Algebra::CK6).unwrap());
    failures.extend(ck6_identity_check(3).unwrap());

    // negative control: the closure detector must notice a missing family
    let reduced: Vec<String> = families(Algebra::CK6)
        .into_iter()
        .map(|f| f.name)
        .filter(|n| n != "T^1")
        .collect();
    let reduced_refs: Vec<&str> = reduced.iter().map(String::as_str).collect();
    if closure_check_with_families(Algebra::CK6, &reduced_refs, 2)
        .unwrap()
        .is_none()
    {
        failures.push("closure with one family removed was not detected as open".into());
    }
    report("5: CK6 closure and generation identities", &failures);
}

#[test]
fn criterion_6_modules() {
    let mut failures = Vec::new();
    for mu in [GaussianRational::from_ratio(1, 2), GaussianRational::zero()] {
        for algebra in [Algebra::K4hat, Algebra::CK6] {
            failures.extend(module_consistency(algebra, &mu, 2).unwrap());
        }
    }
    report("6: module representation law at mu = 1/2 and mu = 0", &failures);
}

#[test]
fn criterion_7_generation_dichotomy() {
    let mut failures = Vec::new();
    for n in 1..=3 {
        let r = generate_closure(n, 6, 3).unwrap();
        if r.family_span_match != Some(true) {
            failures.push(format!("{n} pairs: reached span differs from the family span"));
        }
        let full = r.coverage_lower.complete && r.coverage_diagonal.complete && r.coverage_upper.complete;
        if full {
            failures.push(format!("{n} pairs: unexpectedly reached the full band"));
        }
        if !r.passed {
            failures.push(format!("{n} pairs: generation report failed"));
        }
    }
    let r = generate_closure(4, 6, 2).unwrap();
    if !(r.coverage_lower.complete && r.coverage_diagonal.complete && r.coverage_upper.complete) {
        failures.push(format!("4 pairs: band coverage incomplete, missing {:?}", r.missing));
    }
    if r.identities_hold != Some(true) {
        failures.push("4 pairs: an intermediate bracket identity failed".into());
    }
    if !r.passed {
        failures.push("4 pairs: generation report failed".into());
    }
    report("7: generation dichotomy for 1..4 pairs", &failures);
}

#[test]
fn criterion_8_symbol_consistency() {
    let mut failures = Vec::new();
    failures.extend(symbol_structure_consistency(Algebra::K4hat, 2, -8).unwrap());
    failures.extend(symbol_structure_consistency(Algebra::CK6, 2, -8).unwrap());
    let mut rng = axioms::Rng::new(0xacce_0008);
    failures.extend(grading_check(&mut rng, 1000));
    report("8: symbol-picture structure constants and grading", &failures);
}

#[test]
fn criterion_9_determinism() {
    let mut failures = Vec::new();
    for algebra in [Algebra::K2, Algebra::K4hat] {
        let a = export_table_json(&bracket_table(algebra, 2).unwrap()).unwrap();
        let b = export_table_json(&bracket_table(algebra, 2).unwrap()).unwrap();
        if a != b {
            failures.push(format!("{} table export is not byte-stable", algebra.label()));
        }
    }
    let a = serde_json::to_string_pretty(&generate_closure(2, 4, 2).unwrap()).unwrap();
    let b = serde_json::to_string_pretty(&generate_closure(2, 4, 2).unwrap()).unwrap();
    if a != b {
        failures.push("generation report is not byte-stable".into());
    }
    report("9: determinism of the JSON reports", &failures);
}
