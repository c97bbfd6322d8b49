//! Flattening of Weyl supermatrices and symbols onto finite coordinate
//! vectors, and span-membership solving on top of the exact linear
//! backend.

use std::collections::BTreeMap;

use crate::error::SuperweylError;
use crate::scalar::{solve_linear_system, CoordinateVector, GaussianRational, SpanSolver};
use crate::supermatrix::SuperMatrix;
use crate::symbols::{SymbolElement, SymbolTerm};
use crate::weyl::WeylElement;

/// One monomial coordinate of a Weyl supermatrix: (row, col, t-exponent,
/// d-power).
pub type MatrixKey = (usize, usize, i64, u32);

/// The ordered key set spanned by a collection of matrices.
pub fn matrix_keys<'a>(
    mats: impl IntoIterator<Item = &'a SuperMatrix<WeylElement>>,
) -> BTreeMap<MatrixKey, usize> {
    let mut keys = BTreeMap::new();
    for m in mats {
        let size = m.size();
        for row in 0..size {
            for col in 0..size {
                for ((a, k), _) in m.get(row, col).terms() {
                    let next = keys.len();
                    keys.entry((row, col, *a, *k)).or_insert(next);
                }
            }
        }
    }
    // re-index in sorted key order so the flattening is deterministic
    for (i, v) in keys.values_mut().enumerate() {
        *v = i;
    }
    keys
}

/// Flattens a matrix over a fixed key set; `None` if the matrix has a
/// monomial outside the key set (so it cannot lie in the key set's span).
pub fn matrix_coordinates(
    m: &SuperMatrix<WeylElement>,
    keys: &BTreeMap<MatrixKey, usize>,
) -> Option<CoordinateVector> {
    let mut v = vec![GaussianRational::zero(); keys.len()];
    let size = m.size();
    for row in 0..size {
        for col in 0..size {
            for ((a, k), c) in m.get(row, col).terms() {
                let idx = keys.get(&(row, col, *a, *k))?;
                v[*idx] = c.clone();
            }
        }
    }
    Some(v)
}

/// Expresses `x` over `basis`, or `None` if `x` is outside the span.
pub fn span_coordinates(
    x: &SuperMatrix<WeylElement>,
    basis: &[SuperMatrix<WeylElement>],
) -> Result<Option<Vec<GaussianRational>>, SuperweylError> {
    for b in basis {
        x.check_shape(b)?;
    }
    let keys = matrix_keys(basis.iter().chain(std::iter::once(x)));
    let target = matrix_coordinates(x, &keys).expect("keys cover x by construction");
    let columns: Vec<CoordinateVector> = basis
        .iter()
        .map(|b| matrix_coordinates(b, &keys).expect("keys cover the basis by construction"))
        .collect();
    solve_linear_system(&columns, &target)
}

/// An incremental span of matrices over a frozen key set: matrices whose
/// monomials leave the key set are rejected as out-of-span.
pub struct MatrixSpan {
    keys: BTreeMap<MatrixKey, usize>,
    solver: SpanSolver,
}

impl MatrixSpan {
    /// Builds the span of `basis`; the key set is frozen to the monomials
    /// occurring in `basis`.
    pub fn new(basis: &[SuperMatrix<WeylElement>]) -> Self {
        let keys = matrix_keys(basis.iter());
        let mut solver = SpanSolver::new(keys.len());
        for b in basis {
            let col = matrix_coordinates(b, &keys).expect("keys cover the basis");
            solver.push_column(col);
        }
        MatrixSpan { keys, solver }
    }

    pub fn rank(&self) -> usize {
        self.solver.rank()
    }

    pub fn contains(&self, x: &SuperMatrix<WeylElement>) -> bool {
        match matrix_coordinates(x, &self.keys) {
            None => false,
            Some(v) => self.solver.contains(&v),
        }
    }

    /// Coordinates of `x` over the basis columns in construction order.
    pub fn solve(&self, x: &SuperMatrix<WeylElement>) -> Option<Vec<GaussianRational>> {
        self.solver.solve(&matrix_coordinates(x, &self.keys)?)
    }
}

/// Symbol-space analogue of [`span_coordinates`]: coordinates are symbol
/// monomials with tau-exponent at or above `cmp_floor`; everything below
/// the floor is truncation debris and is ignored.
pub fn symbol_span_coordinates(
    x: &SymbolElement,
    basis: &[SymbolElement],
    cmp_floor: i64,
) -> Result<Option<Vec<GaussianRational>>, SuperweylError> {
    let mut keys: BTreeMap<SymbolTerm, usize> = BTreeMap::new();
    for s in basis.iter().chain(std::iter::once(x)) {
        for (t, _) in s.terms() {
            if t.b >= cmp_floor {
                let next = keys.len();
                keys.entry(*t).or_insert(next);
            }
        }
    }
    for (i, v) in keys.values_mut().enumerate() {
        *v = i;
    }
    let coords = |s: &SymbolElement| -> CoordinateVector {
        let mut v = vec![GaussianRational::zero(); keys.len()];
        for (t, c) in s.terms() {
            if t.b >= cmp_floor {
                v[keys[t]] = c.clone();
            }
        }
        v
    };
    let columns: Vec<CoordinateVector> = basis.iter().map(&coords).collect();
    solve_linear_system(&columns, &coords(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realizations::{matrix_field, Algebra};
    use crate::symbols;

    #[test]
    fn element_against_itself() {
        let l = matrix_field(Algebra::K2, "L", 1).unwrap();
        let coeffs = span_coordinates(&l, &[l.clone()]).unwrap().unwrap();
        assert_eq!(coeffs, vec![GaussianRational::one()]);
    }

    #[test]
    fn virasoro_bracket_decomposes_over_weight_zero_families() {
        // [L_1, L_-1] = -2 L_0 in K(2), with no H component
        let l1 = matrix_field(Algebra::K2, "L", 1).unwrap();
        let lm1 = matrix_field(Algebra::K2, "L", -1).unwrap();
        let bracket = l1.superbracket(&lm1).unwrap();
        let basis = [
            matrix_field(Algebra::K2, "L", 0).unwrap(),
            matrix_field(Algebra::K2, "H", 0).unwrap(),
        ];
        let coeffs = span_coordinates(&bracket, &basis).unwrap().unwrap();
        assert_eq!(coeffs[0], GaussianRational::from_int(-2));
        assert!(coeffs[1].is_zero());
    }

    #[test]
    fn off_span_matrix_is_rejected() {
        let l0 = matrix_field(Algebra::K2, "L", 0).unwrap();
        let h5 = matrix_field(Algebra::K2, "H", 5).unwrap();
        assert!(span_coordinates(&h5, &[l0.clone()]).unwrap().is_none());
        let span = MatrixSpan::new(&[l0]);
        assert!(!span.contains(&h5));
    }

    #[test]
    fn incremental_span_matches_batch_solve() {
        let basis: Vec<_> = ["L", "H", "G", "G~"]
            .iter()
            .map(|f| matrix_field(Algebra::K2, f, 0).unwrap())
            .collect();
        let span = MatrixSpan::new(&basis);
        assert_eq!(span.rank(), 4);
        let x = basis[0].add(&basis[2].scale(&crate::weyl::WeylElement::monomial(
            0,
            0,
            GaussianRational::from_int(3),
        )));
        let coeffs = span.solve(&x).unwrap();
        assert_eq!(coeffs[0], GaussianRational::one());
        assert_eq!(coeffs[2], GaussianRational::from_int(3));
    }

    #[test]
    fn symbol_coordinates_ignore_terms_below_the_floor() {
        // two symbols equal above the floor but differing below it
        let a = symbols::t_pow(1).add(&symbols::tau_pow(-9));
        let b = symbols::t_pow(1);
        let coeffs = symbol_span_coordinates(&a, &[b], -8).unwrap().unwrap();
        assert_eq!(coeffs, vec![GaussianRational::one()]);
    }
}
