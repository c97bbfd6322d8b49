//! The associative Weyl algebra `W = sum_k A d^k` with `A = Q(i)[t, t^-1]`
//! and `d = d/dt`, in normal-ordered form.
//!
//! Every element is a finite sum of terms `c * t^a * d^k` with all t-powers
//! to the left of all d-powers. Multiplication re-normalizes via the
//! relation `d a = d(a) + a d`, which for monomials reads
//!
//! ```text
//! (t^a d^k)(t^b d^l) = sum_{j=0..k} C(k,j) * b(b-1)...(b-j+1) * t^{a+b-j} d^{k+l-j}
//! ```
//!
//! The falling factorial handles negative `b` exactly, so Laurent
//! coefficients are fine; no series are involved.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::GaussianRational;

/// A normal-ordered element of the Weyl algebra: map `(a, k) -> coeff`
/// for the term `coeff * t^a * d^k`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    terms: BTreeMap<(i64, u32), GaussianRational>,
}

/// A Laurent polynomial in `t`, the natural module for [`WeylElement`].
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct Laurent {
    terms: BTreeMap<i64, GaussianRational>,
}

/// Falling factorial `b (b-1) ... (b-j+1)` as an exact integer.
fn falling(b: i64, j: u32) -> BigInt {
    let mut acc = BigInt::one();
    for s in 0..j as i64 {
        acc *= BigInt::from(b - s);
    }
    acc
}

fn binomial(k: u32, j: u32) -> BigInt {
    let mut acc = BigInt::one();
    for s in 0..j {
        acc *= BigInt::from(k - s);
        acc /= BigInt::from(s + 1);
    }
    acc
}

fn big(n: BigInt) -> GaussianRational {
    GaussianRational::new(BigRational::from_integer(n), BigRational::zero())
}

impl WeylElement {
    pub fn zero() -> Self {
        WeylElement::default()
    }

    pub fn one() -> Self {
        WeylElement::monomial(0, 0, GaussianRational::one())
    }

    /// `c * t^a * d^k`.
    pub fn monomial(a: i64, k: u32, c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, k), c);
        }
        WeylElement { terms }
    }

    pub fn t_pow(a: i64) -> Self {
        WeylElement::monomial(a, 0, GaussianRational::one())
    }

    pub fn d() -> Self {
        WeylElement::monomial(0, 1, GaussianRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, u32), &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: i64, k: u32) -> GaussianRational {
        self.terms
            .get(&(a, k))
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return WeylElement::zero();
        }
        WeylElement {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, c * v))
                .collect(),
        }
    }

    fn add_term(&mut self, key: (i64, u32), c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(GaussianRational::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Normal-ordering product of arbitrary factors, left to right.
    ///
    /// The paper writes mixed words such as `t d t^2`; this is the
    /// constructor that normalizes them.
    pub fn product_of(factors: &[WeylElement]) -> Self {
        factors
            .iter()
            .fold(WeylElement::one(), |acc, f| &acc * f)
    }

    /// `t d t^n` normal-ordered: `t^{n+1} d + n t^n`.
    pub fn tdtn(n: i64) -> Self {
        WeylElement::product_of(&[WeylElement::t_pow(1), WeylElement::d(), WeylElement::t_pow(n)])
    }

    /// Applies the operator to a Laurent polynomial: each `t^a d^k` term
    /// acts as `f -> t^a * f^{(k)}`.
    pub fn apply(&self, f: &Laurent) -> Laurent {
        let mut out = Laurent::default();
        for ((a, k), c) in &self.terms {
            for (m, fc) in &f.terms {
                let factor = big(falling(*m, *k));
                if factor.is_zero() {
                    continue;
                }
                out.add_term(a + m - *k as i64, &(c * fc) * &factor);
            }
        }
        out
    }

    /// Maximum d-power appearing, or None for the zero element.
    pub fn max_d_power(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, k)| k).max()
    }

    pub fn t_exponent_range(&self) -> Option<(i64, i64)> {
        let mut it = self.terms.keys().map(|&(a, _)| a);
        let first = it.next()?;
        let (mut lo, mut hi) = (first, first);
        for a in it {
            lo = lo.min(a);
            hi = hi.max(a);
        }
        Some((lo, hi))
    }
}

impl<'a> Add<&'a WeylElement> for &'a WeylElement {
    type Output = WeylElement;
    fn add(self, rhs: &WeylElement) -> WeylElement {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl Add for WeylElement {
    type Output = WeylElement;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<'a> Sub<&'a WeylElement> for &'a WeylElement {
    type Output = WeylElement;
    fn sub(self, rhs: &WeylElement) -> WeylElement {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, -c.clone());
        }
        out
    }
}

impl Sub for WeylElement {
    type Output = WeylElement;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Neg for WeylElement {
    type Output = WeylElement;
    fn neg(self) -> Self {
        WeylElement {
            terms: self.terms.into_iter().map(|(k, v)| (k, -v)).collect(),
        }
    }
}

impl<'a> Mul<&'a WeylElement> for &'a WeylElement {
    type Output = WeylElement;
    fn mul(self, rhs: &WeylElement) -> WeylElement {
        let mut out = WeylElement::zero();
        for ((a, k), c1) in &self.terms {
            for ((b, l), c2) in &rhs.terms {
                let c = c1 * c2;
                for j in 0..=*k {
                    let factor = binomial(*k, j) * falling(*b, j);
                    if factor.is_zero() {
                        continue;
                    }
                    out.add_term((a + b - j as i64, k + l - j), &c * &big(factor));
                }
            }
        }
        out
    }
}

impl Mul for WeylElement {
    type Output = WeylElement;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl fmt::Display for WeylElement {
    /// Sum of `c * t^a * d^k` terms, exponents in decreasing `(a, k)`
    /// lexicographic order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((a, k), c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            if *a != 0 {
                write!(f, " * t^{}", a)?;
            }
            if *k != 0 {
                write!(f, " * d^{}", k)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn monomial(m: i64, c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Laurent { terms }
    }

    pub fn t_pow(m: i64) -> Self {
        Laurent::monomial(m, GaussianRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &GaussianRational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: i64, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(GaussianRational::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &GaussianRational) -> Laurent {
        if c.is_zero() {
            return Laurent::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|(m, v)| (*m, c * v)).collect(),
        }
    }

    /// Derivative with respect to t.
    pub fn derivative(&self) -> Laurent {
        let mut out = Laurent::zero();
        for (m, c) in &self.terms {
            out.add_term(m - 1, c * &GaussianRational::from_int(*m));
        }
        out
    }
}
