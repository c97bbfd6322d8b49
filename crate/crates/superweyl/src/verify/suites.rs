//! Composite verification suites shared by the command-line front end and
//! the acceptance tests: the sl(2)/sp(2|2N) relations, the Virasoro law,
//! the K4hat central values, and the CK6 odd-generation identities.

use crate::clifford::{rho_pm, sl2_generators, spo_basis, OddGen, Sign};
use crate::error::SuperweylError;
use crate::realizations::{ck6, matrix_field, spo_in_fields, Algebra};
use crate::scalar::GaussianRational;
use crate::supermatrix::{Parity, SuperMatrix};
use crate::verify::span::MatrixSpan;
use crate::verify::table::{bracket_of, cocycle_extract, expected_cocycle, mode_basis_cache};
use crate::weyl::WeylElement;

fn wscale(m: &SuperMatrix<WeylElement>, c: GaussianRational) -> SuperMatrix<WeylElement> {
    m.scale(&WeylElement::monomial(0, 0, c))
}

/// The sl(2) relations `[H,E] = 2E`, `[H,F] = -2F`, `[E,F] = H` and the
/// closure of the orthosymplectic basis with the expected even and odd
/// dimensions, for each number of xi/eta pairs up to `max_pairs`.
pub fn spo_relations_check(max_pairs: u32) -> Result<Vec<String>, SuperweylError> {
    let mut failures = Vec::new();
    for n in 1..=max_pairs {
        let (e, h, f) = sl2_generators(n);
        let two = GaussianRational::from_int(2);
        if !h.superbracket(&e)?.sub(&wscale(&e, two.clone())).is_zero() {
            failures.push(format!("[H,E] != 2E for {n} pairs"));
        }
        if !h.superbracket(&f)?.add(&wscale(&f, two)).is_zero() {
            failures.push(format!("[H,F] != -2F for {n} pairs"));
        }
        if !e.superbracket(&f)?.sub(&h).is_zero() {
            failures.push(format!("[E,F] != H for {n} pairs"));
        }

        let basis = spo_basis(n);
        let mats: Vec<SuperMatrix<WeylElement>> = basis.iter().map(|(_, m)| m.clone()).collect();
        let span = MatrixSpan::new(&mats);
        if span.rank() != basis.len() {
            failures.push(format!(
                "orthosymplectic basis is dependent for {n} pairs: rank {} of {}",
                span.rank(),
                basis.len()
            ));
        }
        let n64 = n as usize;
        let expected_even = 3 + n64 * (2 * n64 - 1);
        let expected_odd = 4 * n64;
        let even = basis
            .iter()
            .filter(|(_, m)| m.parity() == Parity::Even)
            .count();
        let odd = basis
            .iter()
            .filter(|(_, m)| m.parity() == Parity::Odd)
            .count();
        if (even, odd) != (expected_even, expected_odd) {
            failures.push(format!(
                "dimension {even}|{odd} differs from {expected_even}|{expected_odd} for {n} pairs"
            ));
        }
        for (la, a) in &basis {
            for (lb, b) in &basis {
                if !span.contains(&a.superbracket(b)?) {
                    failures.push(format!("[{la}, {lb}] leaves the span for {n} pairs"));
                }
            }
        }
    }
    Ok(failures)
}

/// The Virasoro commutation law `[L_n, L_m] = (m - n) L_{n+m}` on the
/// matrix side, for all mode pairs in the window.
pub fn virasoro_check(algebra: Algebra, window: i64) -> Result<Vec<String>, SuperweylError> {
    let mut failures = Vec::new();
    for n in -window..=window {
        for m in -window..=window {
            let lhs = matrix_field(algebra, "L", n)?.superbracket(&matrix_field(algebra, "L", m)?)?;
            let rhs = wscale(
                &matrix_field(algebra, "L", n + m)?,
                GaussianRational::from_int(m - n),
            );
            if !lhs.sub(&rhs).is_zero() {
                failures.push(format!("[L_{n}, L_{m}] != ({m} - {n}) L_{}", n + m));
            }
        }
    }
    Ok(failures)
}

/// Central values of every bracket on the `n + k = 0` line against the
/// expected two-cocycle, for all ordered family pairs.
pub fn cocycle_check(window: i64) -> Result<Vec<String>, SuperweylError> {
    let algebra = Algebra::K4hat;
    let fams = crate::realizations::families(algebra);
    let cache = mode_basis_cache(algebra, &fams, std::iter::once(0))?;
    let mut failures = Vec::new();
    for fa in &fams {
        for fb in &fams {
            for n in -window..=window {
                let x = bracket_of(algebra, &fa.name, n, &fb.name, -n)?;
                let (central, remainder) = cocycle_extract(&x)?;
                let expected = expected_cocycle(&fa.name, n, &fb.name, -n);
                if central != expected {
                    failures.push(format!(
                        "central value of [{}_{n}, {}_{}] is {central}, expected {expected}",
                        fa.name,
                        fb.name,
                        -n
                    ));
                }
                if cache[&0].decompose(&remainder, 0).is_none() {
                    failures.push(format!(
                        "non-central part of [{}_{n}, {}_{}] leaves the family span",
                        fa.name,
                        fb.name,
                        -n
                    ));
                }
            }
        }
    }
    Ok(failures)
}

/// The expressions of the odd symplectic generators as field combinations,
/// entrywise, for the algebras where they are defined.
pub fn odd_generator_field_check(algebra: Algebra) -> Result<Vec<String>, SuperweylError> {
    let mut failures = Vec::new();
    for (label, rho_side, field_side) in spo_in_fields(algebra)? {
        if !rho_side.sub(&field_side).is_zero() {
            failures.push(format!("{label} differs from its field combination"));
        }
    }
    Ok(failures)
}

/// The CK6 generation identities for the remaining odd families: the
/// J-type loop elements acting on the raising eta images produce the I
/// fields, `[J~^{ij}_n, rho(eta_k)^+] = -n I^k_{n+1}` and
/// `[J^{ij}_n, rho(eta_k)^+] = -n I_{n+1}` over the cyclic index triples.
pub fn ck6_identity_check(window: i64) -> Result<Vec<String>, SuperweylError> {
    let algebra = Algebra::CK6;
    let mut failures = Vec::new();
    for (i, j, k) in [(1u32, 2u32, 3u32), (2, 3, 1), (3, 1, 2)] {
        let rho_eta = ck6::to_display_basis(&rho_pm(OddGen::Eta(k), Sign::Plus, 3));
        for n in -window..=window {
            let minus_n = GaussianRational::from_int(-n);
            let jt = matrix_field(algebra, &format!("J~^{{{}{}}}", i.min(j), i.max(j)), n)?;
            let jt = if i > j { jt.neg() } else { jt };
            let lhs = jt.superbracket(&rho_eta)?;
            let rhs = wscale(&matrix_field(algebra, &format!("I^{}", k), n + 1)?, minus_n.clone());
            if !lhs.sub(&rhs).is_zero() {
                failures.push(format!(
                    "[J~^{{{i}{j}}}_{n}, rho(eta_{k})^+] != -{n} I^{k}_{}",
                    n + 1
                ));
            }
            let jf = matrix_field(algebra, &format!("J^{{{}{}}}", i.min(j), i.max(j)), n)?;
            let jf = if i > j { jf.neg() } else { jf };
            let lhs = jf.superbracket(&rho_eta)?;
            let rhs = wscale(&matrix_field(algebra, "I", n + 1)?, minus_n);
            if !lhs.sub(&rhs).is_zero() {
                failures.push(format!(
                    "[J^{{{i}{j}}}_{n}, rho(eta_{k})^+] != -{n} I_{}",
                    n + 1
                ));
            }
        }
    }
    Ok(failures)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_and_spo_relations_hold_up_to_three_pairs() {
        assert!(spo_relations_check(3).unwrap().is_empty());
    }

    #[test]
    fn virasoro_law_holds_for_k2() {
        assert!(virasoro_check(Algebra::K2, 3).unwrap().is_empty());
    }

    #[test]
    fn ck6_identities_hold_in_a_small_window() {
        assert!(odd_generator_field_check(Algebra::CK6).unwrap().is_empty());
        assert!(ck6_identity_check(2).unwrap().is_empty());
    }

    #[test]
    fn cocycle_values_match_in_a_small_window() {
        assert!(cocycle_check(2).unwrap().is_empty());
    }
}
