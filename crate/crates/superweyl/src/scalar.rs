//! Exact arithmetic over the Gaussian rationals and exact dense linear
//! solving.
//!
//! Every span and closure computation in this crate reduces to linear
//! algebra over `GaussianRational`, so everything here is exact: no
//! floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::SuperweylError;

/// An exact complex number `re + im*i` with rational components.
///
/// Both components are kept in lowest terms with positive denominator
/// (`BigRational` maintains this), so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        GaussianRational {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    /// Exact rational `num/den`. Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        GaussianRational {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `re^2 + im^2`, the squared modulus; zero iff the number is zero.
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self, SuperweylError> {
        if self.is_zero() {
            return Err(SuperweylError::DivisionByZero);
        }
        let n = self.norm_sq();
        Ok(GaussianRational {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, SuperweylError> {
        Ok(self.clone() * rhs.inv()?)
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> Self {
        GaussianRational {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> Self {
        GaussianRational {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> Self {
        GaussianRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for GaussianRational {
    type Output = GaussianRational;
    /// Panics on division by zero; use [`GaussianRational::checked_div`]
    /// for the error-signalling variant.
    fn div(self, rhs: Self) -> Self {
        self.checked_div(&rhs).expect("division by zero")
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rational(&self.re));
        }
        if self.re.is_zero() {
            return write!(f, "{}*i", fmt_rational(&self.im));
        }
        let sign = if self.im.is_negative() { "-" } else { "+" };
        write!(
            f,
            "{}{}{}*i",
            fmt_rational(&self.re),
            sign,
            fmt_rational(&self.im.abs())
        )
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Dense coordinates of an element relative to an explicit ordered basis.
/// JSON encoding: `{"re": [num, den], "im": [num, den]}` with `i64`
/// components. Values outside the `i64` range fail loudly rather than
/// silently losing exactness.
impl serde::Serialize for GaussianRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::{Error, SerializeStruct};
        let enc = |r: &BigRational| -> Result<[i64; 2], S::Error> {
            let num = r
                .numer()
                .to_i64()
                .ok_or_else(|| S::Error::custom("numerator out of i64 range"))?;
            let den = r
                .denom()
                .to_i64()
                .ok_or_else(|| S::Error::custom("denominator out of i64 range"))?;
            Ok([num, den])
        };
        let mut st = s.serialize_struct("GaussianRational", 2)?;
        st.serialize_field("re", &enc(&self.re)?)?;
        st.serialize_field("im", &enc(&self.im)?)?;
        st.end()
    }
}

impl<'de> serde::Deserialize<'de> for GaussianRational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        #[derive(serde::Deserialize)]
        struct Repr {
            re: [i64; 2],
            im: [i64; 2],
        }
        let r = Repr::deserialize(d)?;
        let dec = |p: [i64; 2]| -> Result<BigRational, D::Error> {
            if p[1] == 0 {
                return Err(D::Error::custom("zero denominator"));
            }
            Ok(BigRational::new(BigInt::from(p[0]), BigInt::from(p[1])))
        };
        Ok(GaussianRational {
            re: dec(r.re)?,
            im: dec(r.im)?,
        })
    }
}

pub type CoordinateVector = Vec<GaussianRational>;

/// Exact span-membership solver.
///
/// Returns coefficients `c` with `sum c_i * columns_i == target` when the
/// target lies in the span of the columns, and `None` otherwise. When the
/// columns are linearly dependent, pivots are taken greedily from earlier
/// columns, so later redundant columns receive coefficient zero.
///
/// Errors on a dimension mismatch between any column and the target.
pub fn solve_linear_system(
    columns: &[CoordinateVector],
    target: &CoordinateVector,
) -> Result<Option<Vec<GaussianRational>>, SuperweylError> {
    let dim = target.len();
    for c in columns {
        if c.len() != dim {
            return Err(SuperweylError::DimensionMismatch {
                expected: dim,
                got: c.len(),
            });
        }
    }
    let mut solver = SpanSolver::new(dim);
    for c in columns {
        solver.push_column(c.clone());
    }
    Ok(solver.solve(target))
}

/// Incremental exact Gaussian elimination over the Gaussian rationals.
///
/// Columns are adjoined one at a time; each independent column contributes
/// an echelon row together with the combination of original columns that
/// produced it. Solving a target then costs one reduction pass, which lets
/// the bracket-table code factor a family basis once per mode and decompose
/// many brackets against it.
pub struct SpanSolver {
    dim: usize,
    ncols: usize,
    /// Echelon rows: (pivot index, reduced column, combination over original columns).
    rows: Vec<(usize, CoordinateVector, Vec<GaussianRational>)>,
}

impl SpanSolver {
    pub fn new(dim: usize) -> Self {
        SpanSolver {
            dim,
            ncols: 0,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Pivot coordinate indices of the echelon rows, in insertion order.
    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.0).collect()
    }

    /// Adjoins a column; returns true if it enlarged the span.
    pub fn push_column(&mut self, mut col: CoordinateVector) -> bool {
        assert_eq!(col.len(), self.dim, "column dimension mismatch");
        let idx = self.ncols;
        self.ncols += 1;
        let mut combo = vec![GaussianRational::zero(); idx + 1];
        combo[idx] = GaussianRational::one();
        for combo_row in self.rows.iter_mut().map(|r| &mut r.2) {
            combo_row.push(GaussianRational::zero());
        }
        self.reduce(&mut col, Some(&mut combo));
        match col.iter().position(|c| !c.is_zero()) {
            None => false,
            Some(pivot) => {
                // Normalize so the pivot entry is 1.
                let p = col[pivot].inv().expect("pivot is nonzero");
                for c in col.iter_mut() {
                    if !c.is_zero() {
                        *c = &*c * &p;
                    }
                }
                for c in combo.iter_mut() {
                    if !c.is_zero() {
                        *c = &*c * &p;
                    }
                }
                let pos = self
                    .rows
                    .binary_search_by_key(&pivot, |r| r.0)
                    .unwrap_err();
                self.rows.insert(pos, (pivot, col, combo));
                true
            }
        }
    }

    /// Membership test without recording a new column.
    pub fn contains(&self, target: &CoordinateVector) -> bool {
        let mut v = target.clone();
        self.reduce(&mut v, None);
        v.iter().all(|c| c.is_zero())
    }

    /// Expresses the target over the adjoined columns, if possible.
    pub fn solve(&self, target: &CoordinateVector) -> Option<Vec<GaussianRational>> {
        assert_eq!(target.len(), self.dim, "target dimension mismatch");
        let mut v = target.clone();
        let mut coeffs = vec![GaussianRational::zero(); self.ncols];
        for (pivot, row, combo) in &self.rows {
            let c = v[*pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (vi, ri) in v.iter_mut().zip(row.iter()) {
                if !ri.is_zero() {
                    *vi = &*vi - &(&c * ri);
                }
            }
            for (ci, ki) in coeffs.iter_mut().zip(combo.iter()) {
                if !ki.is_zero() {
                    *ci = &*ci + &(&c * ki);
                }
            }
        }
        if v.iter().all(|c| c.is_zero()) {
            Some(coeffs)
        } else {
            None
        }
    }

    fn reduce(
        &self,
        v: &mut CoordinateVector,
        mut combo: Option<&mut Vec<GaussianRational>>,
    ) {
        for (pivot, row, row_combo) in &self.rows {
            let c = v[*pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (vi, ri) in v.iter_mut().zip(row.iter()) {
                if !ri.is_zero() {
                    *vi = &*vi - &(&c * ri);
                }
            }
            if let Some(ref mut combo) = combo {
                for (ci, ki) in combo.iter_mut().zip(row_combo.iter()) {
                    if !ki.is_zero() {
                        *ci = &*ci - &(&c * ki);
                    }
                }
            }
        }
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn conjugate_product() {
        // (1 + i)(1 - i) = 2
        let a = g(1) + GaussianRational::i();
        let b = g(1) - GaussianRational::i();
        assert_eq!(a * b, g(2));
    }

    #[test]
    fn conjugate_sum() {
        // (1/2 + i/3) + (1/2 - i/3) = 1
        let third_i = GaussianRational::new(
            BigRational::zero(),
            BigRational::new(BigInt::from(1), BigInt::from(3)),
        );
        let a = GaussianRational::from_ratio(1, 2) + third_i.clone();
        let b = GaussianRational::from_ratio(1, 2) - third_i;
        assert_eq!(a + b, GaussianRational::one());
    }

    #[test]
    fn mul_identity() {
        let x = GaussianRational::from_ratio(-7, 3) + GaussianRational::i() * g(5);
        assert_eq!(x.clone() * GaussianRational::one(), x);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(
            g(1).checked_div(&GaussianRational::zero()),
            Err(SuperweylError::DivisionByZero)
        ));
    }

    #[test]
    fn solve_diagonal() {
        let cols = vec![vec![g(1), g(0)], vec![g(0), g(1)]];
        let target = vec![g(3), GaussianRational::i()];
        let sol = solve_linear_system(&cols, &target).unwrap().unwrap();
        assert_eq!(sol, vec![g(3), GaussianRational::i()]);
    }

    #[test]
    fn solve_inconsistent() {
        let cols = vec![vec![g(1), g(1)]];
        let target = vec![g(1), g(2)];
        assert!(solve_linear_system(&cols, &target).unwrap().is_none());
    }

    #[test]
    fn solve_dependent_prefers_earlier_columns() {
        let cols = vec![vec![g(1), g(0)], vec![g(1), g(0)]];
        let target = vec![g(5), g(0)];
        let sol = solve_linear_system(&cols, &target).unwrap().unwrap();
        assert_eq!(sol, vec![g(5), g(0)]);
    }

    #[test]
    fn solve_dimension_mismatch() {
        let cols = vec![vec![g(1)]];
        let target = vec![g(1), g(2)];
        assert!(matches!(
            solve_linear_system(&cols, &target),
            Err(SuperweylError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn resubstitution_on_random_integer_systems() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let dim = rng.gen_range(1..6);
            let ncols = rng.gen_range(1..6);
            let cols: Vec<CoordinateVector> = (0..ncols)
                .map(|_| (0..dim).map(|_| g(rng.gen_range(-5..6))).collect())
                .collect();
            let coeffs: Vec<GaussianRational> =
                (0..ncols).map(|_| g(rng.gen_range(-5..6))).collect();
            let mut target = vec![GaussianRational::zero(); dim];
            for (c, col) in coeffs.iter().zip(&cols) {
                for (t, e) in target.iter_mut().zip(col) {
                    *t = &*t + &(c * e);
                }
            }
            let sol = solve_linear_system(&cols, &target)
                .unwrap()
                .expect("target is in the span by construction");
            let mut back = vec![GaussianRational::zero(); dim];
            for (c, col) in sol.iter().zip(&cols) {
                for (t, e) in back.iter_mut().zip(col) {
                    *t = &*t + &(c * e);
                }
            }
            assert_eq!(back, target);
        }
    }
}
