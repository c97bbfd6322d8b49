//! Cross-picture consistency checks: symbol brackets against matrix
//! structure constants, the symplectic generators in the symbol picture
//! against their matrix images, and the module actions against the
//! centrally-extended commutation relations.

use crate::clifford::{rho_pm, OddGen, Sign};
use crate::error::SuperweylError;
use crate::realizations::modules::{module_action, ModuleVector};
use crate::realizations::{families, symbol_field, Algebra};
use crate::scalar::{solve_linear_system, CoordinateVector, GaussianRational, SpanSolver};
use crate::supermatrix::SuperMatrix;
use crate::symbols::{poisson_bracket, sp_symbol_generators, SymbolElement, SymbolTerm};
use crate::verify::span::matrix_keys;
use crate::verify::table::{bracket_of, mode_basis_cache};
use crate::weyl::WeylElement;

/// A comparison floor low enough to behave like "compare everything"
/// for exact symbols.
const NO_FLOOR: i64 = i64::MIN / 2;

fn cmp_floor_of(a: &SymbolElement, b: &SymbolElement) -> i64 {
    a.floor()
        .unwrap_or(NO_FLOOR)
        .max(b.floor().unwrap_or(NO_FLOOR))
}

/// Verifies that the symbol-picture brackets reproduce the matrix-picture
/// structure constants (and central terms) on every ordered family pair
/// in the window, modulo the truncation floor. Returns failures.
pub fn symbol_structure_consistency(
    algebra: Algebra,
    window: i64,
    tau_floor: i64,
) -> Result<Vec<String>, SuperweylError> {
    let fams = families(algebra);
    let mut modes = Vec::new();
    for n in -window..=window {
        for k in -window..=window {
            if (n + k).abs() <= window {
                modes.push((n, k));
            }
        }
    }
    let cache = mode_basis_cache(algebra, &fams, modes.iter().map(|(n, k)| n + k))?;

    let mut failures = Vec::new();
    for fa in &fams {
        for fb in &fams {
            for &(n, k) in &modes {
                let br = bracket_of(algebra, &fa.name, n, &fb.name, k)?;
                let (terms, central) = match cache[&(n + k)].decompose(&br, n + k) {
                    Some(d) => d,
                    None => {
                        failures.push(format!(
                            "matrix bracket [{}_{}, {}_{}] does not decompose",
                            fa.name, n, fb.name, k
                        ));
                        continue;
                    }
                };
                let sa = symbol_field(algebra, &fa.name, n, tau_floor)?;
                let sb = symbol_field(algebra, &fb.name, k, tau_floor)?;
                let lhs = match algebra {
                    Algebra::K2 => poisson_bracket(&sa, &sb, 1),
                    _ => crate::symbols::p1_bracket(&sa, &sb, tau_floor),
                };
                let mut rhs = SymbolElement::zero();
                for t in &terms {
                    rhs = rhs.add(&symbol_field(algebra, &t.family, t.mode, tau_floor)?
                        .scale(&t.coefficient));
                }
                if !central.is_zero() {
                    rhs = rhs.add(&SymbolElement::one().scale(&central));
                }
                let cmp = cmp_floor_of(&lhs, &rhs);
                if !lhs.agrees_with(&rhs, cmp) {
                    failures.push(format!(
                        "symbol bracket [{}_{}, {}_{}] disagrees with the matrix decomposition",
                        fa.name, n, fb.name, k
                    ));
                }
            }
        }
    }
    Ok(failures)
}

fn symbol_coordinates(elements: &[&SymbolElement]) -> Vec<CoordinateVector> {
    let mut keys: std::collections::BTreeMap<SymbolTerm, usize> = std::collections::BTreeMap::new();
    for e in elements {
        for (t, _) in e.terms() {
            let next = keys.len();
            keys.entry(*t).or_insert(next);
        }
    }
    for (i, v) in keys.values_mut().enumerate() {
        *v = i;
    }
    elements
        .iter()
        .map(|e| {
            let mut v = vec![GaussianRational::zero(); keys.len()];
            for (t, c) in e.terms() {
                v[keys[t]] = c.clone();
            }
            v
        })
        .collect()
}

fn matrix_coordinate_columns(mats: &[&SuperMatrix<WeylElement>]) -> Vec<CoordinateVector> {
    let keys = matrix_keys(mats.iter().copied());
    mats.iter()
        .map(|m| crate::verify::span::matrix_coordinates(m, &keys).expect("keys cover inputs"))
        .collect()
}

/// Checks that the odd symplectic generators in the symbol picture have
/// the same structure constants as their matrix images: the pairing
/// symbol generator -> matrix generator extends to a well-defined linear
/// map on pair brackets, and triple brackets decompose over the odd
/// generators with identical coefficients on both sides.
pub fn sp_symbol_consistency(n: u32) -> Result<Vec<String>, SuperweylError> {
    let syms: Vec<SymbolElement> = sp_symbol_generators(n).into_iter().map(|(_, s)| s).collect();
    let mut mats: Vec<SuperMatrix<WeylElement>> = Vec::new();
    for i in 1..=n {
        for (gen, _) in [(OddGen::Xi(i), "xi"), (OddGen::Eta(i), "eta")] {
            for sign in [Sign::Plus, Sign::Minus] {
                mats.push(rho_pm(gen, sign, n));
            }
        }
    }
    // sp_symbol_generators lists xi+, xi-, eta+, eta- per index
    let mut failures = Vec::new();
    let count = syms.len();
    assert_eq!(mats.len(), count);

    // pairwise brackets on both sides
    let mut sym_brackets = Vec::new();
    let mut mat_brackets = Vec::new();
    for i in 0..count {
        for j in 0..count {
            sym_brackets.push(poisson_bracket(&syms[i], &syms[j], n));
            mat_brackets.push(mats[i].superbracket(&mats[j])?);
        }
    }

    // well-definedness: the matrix brackets satisfy every linear relation
    // that the symbol brackets satisfy (joint rank = symbol rank)
    let sym_cols = symbol_coordinates(&sym_brackets.iter().collect::<Vec<_>>());
    let mat_cols = matrix_coordinate_columns(&mat_brackets.iter().collect::<Vec<_>>());
    let mut sym_solver = SpanSolver::new(sym_cols[0].len());
    let mut joint_solver = SpanSolver::new(sym_cols[0].len() + mat_cols[0].len());
    let mut sym_rank = 0usize;
    let mut joint_rank = 0usize;
    for (s, m) in sym_cols.iter().zip(&mat_cols) {
        if sym_solver.push_column(s.clone()) {
            sym_rank += 1;
        }
        let mut joint = s.clone();
        joint.extend(m.iter().cloned());
        if joint_solver.push_column(joint) {
            joint_rank += 1;
        }
    }
    if sym_rank != joint_rank {
        failures.push(format!(
            "the even parts are not isomorphic: symbol rank {} vs joint rank {}",
            sym_rank, joint_rank
        ));
    }

    // triple brackets decompose over the odd generators identically
    let sym_gen_cols: Vec<&SymbolElement> = syms.iter().collect();
    for i in 0..count {
        for j in 0..count {
            for l in 0..count {
                let sym_triple = poisson_bracket(&sym_brackets[i * count + j], &syms[l], n);
                let mat_triple = mat_brackets[i * count + j].superbracket(&mats[l])?;
                // decompose the symbol side over the symbol generators
                let mut involved: Vec<&SymbolElement> = sym_gen_cols.clone();
                involved.push(&sym_triple);
                let cols = symbol_coordinates(&involved);
                let (target, gen_cols) = cols.split_last().unwrap();
                let coeffs = match solve_linear_system(gen_cols, target)? {
                    Some(c) => c,
                    None => {
                        failures.push(format!(
                            "triple bracket ({}, {}, {}) leaves the odd generator span",
                            i, j, l
                        ));
                        continue;
                    }
                };
                let mut expected = mat_triple.clone();
                for (c, m) in coeffs.iter().zip(&mats) {
                    expected = expected.sub(&m.scale(&WeylElement::monomial(0, 0, c.clone())));
                }
                if !expected.is_zero() {
                    failures.push(format!(
                        "triple bracket ({}, {}, {}) has different coefficients in the two pictures",
                        i, j, l
                    ));
                }
            }
        }
    }
    Ok(failures)
}

/// Verifies the representation law on the Laurent modules: the action of
/// a bracket (family decomposition plus central term) equals the graded
/// commutator of the actions, on every basis vector at a few modes.
pub fn module_consistency(
    algebra: Algebra,
    mu: &GaussianRational,
    window: i64,
) -> Result<Vec<String>, SuperweylError> {
    let fams = families(algebra);
    let mut mode_pairs = Vec::new();
    for n in -window..=window {
        for k in -window..=window {
            mode_pairs.push((n, k));
        }
    }
    let cache = mode_basis_cache(algebra, &fams, mode_pairs.iter().map(|(n, k)| n + k))?;
    let size = 2 * algebra.block_size();

    let mut failures = Vec::new();
    for fa in &fams {
        for fb in &fams {
            let sign = if fa.odd && fb.odd {
                -GaussianRational::one()
            } else {
                GaussianRational::one()
            };
            for &(n, k) in &mode_pairs {
                let br = bracket_of(algebra, &fa.name, n, &fb.name, k)?;
                let (terms, central) = match cache[&(n + k)].decompose(&br, n + k) {
                    Some(d) => d,
                    None => {
                        failures.push(format!(
                            "[{}_{}, {}_{}] does not decompose over the families",
                            fa.name, n, fb.name, k
                        ));
                        continue;
                    }
                };
                for idx in 0..size {
                    for m in [-1i64, 0, 1] {
                        let v = ModuleVector::basis(mu.clone(), idx, m);
                        let ab = module_action(
                            algebra,
                            &fa.name,
                            n,
                            &module_action(algebra, &fb.name, k, &v)?,
                        )?;
                        let ba = module_action(
                            algebra,
                            &fb.name,
                            k,
                            &module_action(algebra, &fa.name, n, &v)?,
                        )?;
                        let lhs = ab.sub(&ba.scale(&sign));
                        let mut rhs = ModuleVector::zero(mu.clone());
                        for t in &terms {
                            rhs = rhs.add(
                                &module_action(algebra, &t.family, t.mode, &v)?
                                    .scale(&t.coefficient),
                            );
                        }
                        rhs = rhs.add(&v.scale(&central));
                        if lhs != rhs {
                            failures.push(format!(
                                "representation law fails for [{}_{}, {}_{}] on basis {} at mode {}",
                                fa.name, n, fb.name, k, idx, m
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(failures)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_symbols_match_matrix_structure_constants() {
        let failures = symbol_structure_consistency(Algebra::K2, 2, -8).unwrap();
        assert!(failures.is_empty(), "{:?}", failures);
    }

    #[test]
    fn sp_generators_agree_in_both_pictures_for_one_pair() {
        let failures = sp_symbol_consistency(1).unwrap();
        assert!(failures.is_empty(), "{:?}", failures);
    }

    #[test]
    fn k4hat_module_representation_law_small() {
        let mu = GaussianRational::from_ratio(1, 2);
        let failures = module_consistency(Algebra::K4hat, &mu, 1).unwrap();
        assert!(failures.is_empty(), "{:?}", failures);
    }
}
