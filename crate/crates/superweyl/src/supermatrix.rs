//! Z2-graded block matrices over a coefficient ring, with the superbracket
//! `[A, B] = AB - (-1)^{p(A)p(B)} BA`.
//!
//! Rows and columns `0..m` index the even subspace and `m..m+n` the odd
//! subspace. An even matrix has support in the diagonal blocks, an odd one
//! in the off-diagonal blocks. The lower-left block maps even to odd and
//! the upper-right block maps odd to even; this is the convention under
//! which the explicit N = 1 matrices of the construction come out
//! literally.

use std::fmt;

use crate::error::SuperweylError;
use crate::scalar::GaussianRational;
use crate::weyl::WeylElement;

/// Minimal ring interface shared by scalar and Weyl coefficients.
pub trait Ring: Clone + PartialEq + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
}

impl Ring for GaussianRational {
    fn zero() -> Self {
        GaussianRational::zero()
    }
    fn one() -> Self {
        GaussianRational::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }
}

impl Ring for WeylElement {
    fn zero() -> Self {
        WeylElement::zero()
    }
    fn one() -> Self {
        WeylElement::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn is_zero(&self) -> bool {
        WeylElement::is_zero(self)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parity {
    Even,
    Odd,
    Mixed,
}

impl Parity {
    /// Parity of a product/bracket of homogeneous elements.
    pub fn combine(self, rhs: Parity) -> Parity {
        match (self, rhs) {
            (Parity::Even, Parity::Even) | (Parity::Odd, Parity::Odd) => Parity::Even,
            (Parity::Even, Parity::Odd) | (Parity::Odd, Parity::Even) => Parity::Odd,
            _ => Parity::Mixed,
        }
    }
}

/// An (m|n) supermatrix stored densely, row-major.
#[derive(Clone, PartialEq)]
pub struct SuperMatrix<R: Ring> {
    m: usize,
    n: usize,
    entries: Vec<R>,
}

impl<R: Ring> SuperMatrix<R> {
    pub fn zero(m: usize, n: usize) -> Self {
        SuperMatrix {
            m,
            n,
            entries: vec![R::zero(); (m + n) * (m + n)],
        }
    }

    pub fn identity(m: usize, n: usize) -> Self {
        let mut out = Self::zero(m, n);
        for i in 0..m + n {
            out.set(i, i, R::one());
        }
        out
    }

    /// Elementary matrix with a single `value` at (row, col).
    pub fn elementary(m: usize, n: usize, row: usize, col: usize, value: R) -> Self {
        let mut out = Self::zero(m, n);
        out.set(row, col, value);
        out
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn size(&self) -> usize {
        self.m + self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &R {
        &self.entries[row * self.size() + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: R) {
        let s = self.size();
        self.entries[row * s + col] = value;
    }

    pub fn add_to(&mut self, row: usize, col: usize, value: &R) {
        let s = self.size();
        let e = &mut self.entries[row * s + col];
        *e = e.add(value);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    fn row_is_even(&self, i: usize) -> bool {
        i < self.m
    }

    /// Scan-based parity of the support: Even, Odd, or Mixed. The zero
    /// matrix reports Even.
    pub fn parity(&self) -> Parity {
        let mut diag = false;
        let mut off = false;
        for i in 0..self.size() {
            for j in 0..self.size() {
                if !self.get(i, j).is_zero() {
                    if self.row_is_even(i) == self.row_is_even(j) {
                        diag = true;
                    } else {
                        off = true;
                    }
                }
            }
        }
        match (diag, off) {
            (true, true) => Parity::Mixed,
            (false, true) => Parity::Odd,
            _ => Parity::Even,
        }
    }

    /// Block-diagonal and block-off-diagonal parts; their sum is `self`.
    pub fn parity_decompose(&self) -> (SuperMatrix<R>, SuperMatrix<R>) {
        let mut even = Self::zero(self.m, self.n);
        let mut odd = Self::zero(self.m, self.n);
        for i in 0..self.size() {
            for j in 0..self.size() {
                let e = self.get(i, j);
                if e.is_zero() {
                    continue;
                }
                if self.row_is_even(i) == self.row_is_even(j) {
                    even.set(i, j, e.clone());
                } else {
                    odd.set(i, j, e.clone());
                }
            }
        }
        (even, odd)
    }

    /// Lower-left block (even source, odd target), kept in place.
    pub fn lower_left(&self) -> SuperMatrix<R> {
        let mut out = Self::zero(self.m, self.n);
        for i in self.m..self.size() {
            for j in 0..self.m {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        out
    }

    /// Upper-right block (odd source, even target), kept in place.
    pub fn upper_right(&self) -> SuperMatrix<R> {
        let mut out = Self::zero(self.m, self.n);
        for i in 0..self.m {
            for j in self.m..self.size() {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.m, self.n), (rhs.m, rhs.n), "shape mismatch");
        SuperMatrix {
            m: self.m,
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.m, self.n), (rhs.m, rhs.n), "shape mismatch");
        SuperMatrix {
            m: self.m,
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        SuperMatrix {
            m: self.m,
            n: self.n,
            entries: self.entries.iter().map(|a| a.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        SuperMatrix {
            m: self.m,
            n: self.n,
            entries: self.entries.iter().map(|a| c.mul(a)).collect(),
        }
    }

    pub fn check_shape(&self, rhs: &Self) -> Result<(), SuperweylError> {
        if (self.m, self.n) != (rhs.m, rhs.n) {
            return Err(SuperweylError::ShapeMismatch {
                m1: self.m,
                n1: self.n,
                m2: rhs.m,
                n2: rhs.n,
            });
        }
        Ok(())
    }

    /// Ordinary matrix product with ring multiplication of entries.
    pub fn mat_mul(&self, rhs: &Self) -> Result<Self, SuperweylError> {
        self.check_shape(rhs)?;
        let s = self.size();
        let mut out = Self::zero(self.m, self.n);
        for i in 0..s {
            for k in 0..s {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..s {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.add_to(i, j, &a.mul(b));
                }
            }
        }
        Ok(out)
    }

    /// `AB - (-1)^{p(A)p(B)} BA`, extended bilinearly over parity
    /// decompositions when either argument is mixed.
    pub fn superbracket(&self, rhs: &Self) -> Result<Self, SuperweylError> {
        self.check_shape(rhs)?;
        let pa = self.parity();
        let pb = rhs.parity();
        if pa == Parity::Mixed || pb == Parity::Mixed {
            let (ae, ao) = self.parity_decompose();
            let (be, bo) = rhs.parity_decompose();
            let mut out = ae.superbracket(&be)?;
            out = out.add(&ae.superbracket(&bo)?);
            out = out.add(&ao.superbracket(&be)?);
            out = out.add(&ao.superbracket(&bo)?);
            return Ok(out);
        }
        let ab = self.mat_mul(rhs)?;
        let ba = rhs.mat_mul(self)?;
        Ok(if pa == Parity::Odd && pb == Parity::Odd {
            ab.add(&ba)
        } else {
            ab.sub(&ba)
        })
    }
}

impl SuperMatrix<GaussianRational> {
    /// Promotes scalar entries to degree-zero Weyl elements.
    pub fn promote(&self) -> SuperMatrix<WeylElement> {
        SuperMatrix {
            m: self.m,
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|c| WeylElement::monomial(0, 0, c.clone()))
                .collect(),
        }
    }
}

impl<R: Ring> fmt::Display for SuperMatrix<R> {
    /// Row-major dump with `|` separating the even/odd blocks, one row
    /// per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.size() {
            if i == self.m {
                writeln!(f, "{}", "-".repeat(8))?;
            }
            write!(f, "[")?;
            for j in 0..self.size() {
                if j == self.m {
                    write!(f, " | ")?;
                } else if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for SuperMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    type M = SuperMatrix<GaussianRational>;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    fn random_homogeneous(rng: &mut impl Rng, m: usize, n: usize, odd: bool) -> M {
        let mut out = M::zero(m, n);
        for i in 0..m + n {
            for j in 0..m + n {
                let pos_odd = (i < m) != (j < m);
                if pos_odd == odd {
                    out.set(i, j, g(rng.gen_range(-3..4)));
                }
            }
        }
        out
    }

    #[test]
    fn elementary_product() {
        let e12 = M::elementary(2, 0, 0, 1, g(1));
        let e21 = M::elementary(2, 0, 1, 0, g(1));
        let e11 = M::elementary(2, 0, 0, 0, g(1));
        assert_eq!(e12.mat_mul(&e21).unwrap(), e11);
    }

    #[test]
    fn identity_is_neutral() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let a = random_homogeneous(&mut rng, 1, 1, false);
        assert_eq!(a.mat_mul(&M::identity(1, 1)).unwrap(), a);
    }

    #[test]
    fn even_self_bracket_vanishes() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let a = random_homogeneous(&mut rng, 2, 2, false);
        assert!(a.superbracket(&a).unwrap().is_zero());
    }

    #[test]
    fn parity_decompose_splits_blocks() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        let e = random_homogeneous(&mut rng, 2, 2, false);
        let o = random_homogeneous(&mut rng, 2, 2, true);
        let mixed = e.add(&o);
        let (pe, po) = mixed.parity_decompose();
        assert_eq!(pe, e);
        assert_eq!(po, o);
        assert_eq!(pe.parity(), Parity::Even);
        assert_eq!(po.parity(), Parity::Odd);
    }

    #[test]
    fn super_skew_symmetry_randomized() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for _ in 0..20 {
            let pa = rng.gen_bool(0.5);
            let pb = rng.gen_bool(0.5);
            let a = random_homogeneous(&mut rng, 2, 2, pa);
            let b = random_homogeneous(&mut rng, 2, 2, pb);
            let ab = a.superbracket(&b).unwrap();
            let ba = b.superbracket(&a).unwrap();
            let expected = if pa && pb { ba } else { ba.neg() };
            assert_eq!(ab, expected);
        }
    }

    #[test]
    fn super_jacobi_randomized() {
        // (-1)^{p(A)p(C)}[A,[B,C]] + cyclic = 0
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..20 {
            let ps: Vec<bool> = (0..3).map(|_| rng.gen_bool(0.5)).collect();
            let ms: Vec<M> = ps
                .iter()
                .map(|&p| random_homogeneous(&mut rng, 2, 2, p))
                .collect();
            let sign = |x: bool, y: bool| if x && y { -1i64 } else { 1 };
            let term = |a: usize, b: usize, c: usize| {
                ms[a]
                    .superbracket(&ms[b].superbracket(&ms[c]).unwrap())
                    .unwrap()
                    .scale(&g(sign(ps[a], ps[c])))
            };
            let total = term(0, 1, 2).add(&term(1, 2, 0)).add(&term(2, 0, 1));
            assert!(total.is_zero(), "super Jacobi failed");
        }
    }

    #[test]
    fn bracket_grading() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(19);
        for _ in 0..10 {
            let pa = rng.gen_bool(0.5);
            let pb = rng.gen_bool(0.5);
            let a = random_homogeneous(&mut rng, 2, 2, pa);
            let b = random_homogeneous(&mut rng, 2, 2, pb);
            let br = a.superbracket(&b).unwrap();
            if !br.is_zero() {
                let expected = a.parity().combine(b.parity());
                assert_eq!(br.parity(), expected);
            }
        }
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let a = M::zero(1, 1);
        let b = M::zero(2, 2);
        assert!(a.mat_mul(&b).is_err());
        assert!(a.superbracket(&b).is_err());
    }
}
