//! The Poisson superalgebra P(2N) of pseudodifferential symbols and its
//! associative deformation P1(2N).
//!
//! Elements are finite sums of monomials `t^a tau^b xi_S eta_T`. The
//! Poisson bracket is
//!
//! ```text
//! {A, B} = dtau(A) dt(B) - dt(A) dtau(B)
//!        + (-1)^{p(A)+1} sum_i (dxi_i(A) deta_i(B) + deta_i(A) dxi_i(B))
//! ```
//!
//! with left odd derivatives relative to the canonical word order. The
//! deformed product `A o B = sum_n (1/n!) dtau^n(A) dt^n(B)` multiplies
//! Grassmann parts with the Clifford product and genuinely produces
//! infinite tails in negative tau-powers; those are truncated below a
//! configurable floor and the element is flagged approximate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

use crate::clifford::{CliffordElement, GrassmannWord};
use crate::scalar::GaussianRational;

/// A single symbol monomial `t^a tau^b * word`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SymbolTerm {
    pub a: i64,
    pub b: i64,
    pub word: GrassmannWord,
}

impl SymbolTerm {
    pub fn is_odd(&self) -> bool {
        self.word.is_odd()
    }
}

/// The Z-grading weight: `deg tau = deg xi_i = 1`, `deg t = deg eta_i = 0`,
/// shifted by -1 for the Lie grading.
pub fn lie_degree(term: &SymbolTerm) -> i64 {
    term.b + term.word.xi.count_ones() as i64 - 1
}

/// A finite sum of symbol monomials. `floor = None` means the element is
/// exact; `Some(f)` means terms with tau-exponent below `f` have been
/// truncated away and only coordinates at tau-exponent >= f are reliable.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct SymbolElement {
    terms: BTreeMap<SymbolTerm, GaussianRational>,
    floor: Option<i64>,
}

fn falling(b: i64, j: u64) -> BigInt {
    let mut acc = BigInt::one();
    for s in 0..j as i64 {
        acc *= BigInt::from(b - s);
    }
    acc
}

fn combine_floor(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => Some(x.max(y)),
    }
}

/// Reliable floor of a bilinear pairing of `x` and `y` whose output
/// tau-exponent is at most `b1 + b2` for input exponents `b1`, `b2`:
/// contamination from truncated tails of one factor is bounded by the
/// other factor's largest tau-exponent.
fn pairing_floor(x: &SymbolElement, y: &SymbolElement) -> Option<i64> {
    let fx = x.floor.map(|f| f + y.max_tau().unwrap_or(0));
    let fy = y.floor.map(|f| f + x.max_tau().unwrap_or(0));
    let cross = match (x.floor, y.floor) {
        (Some(f), Some(g)) => Some(f + g - 1),
        _ => None,
    };
    combine_floor(combine_floor(fx, fy), cross)
}

impl SymbolElement {
    pub fn zero() -> Self {
        SymbolElement::default()
    }

    pub fn one() -> Self {
        SymbolElement::monomial(0, 0, GrassmannWord::ONE, GaussianRational::one())
    }

    pub fn monomial(a: i64, b: i64, word: GrassmannWord, c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(SymbolTerm { a, b, word }, c);
        }
        SymbolElement { terms, floor: None }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_exact(&self) -> bool {
        self.floor.is_none()
    }

    pub fn floor(&self) -> Option<i64> {
        self.floor
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SymbolTerm, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn max_tau(&self) -> Option<i64> {
        self.terms.keys().map(|t| t.b).max()
    }

    pub fn add_term(&mut self, t: SymbolTerm, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(t).or_insert_with(GaussianRational::zero);
        *e = &*e + &c;
        if e.is_zero() {
            self.terms.remove(&t);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (t, c) in &rhs.terms {
            out.add_term(*t, c.clone());
        }
        out.floor = combine_floor(self.floor, rhs.floor);
        out.enforce_floor();
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&(-GaussianRational::one()))
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return SymbolElement::zero();
        }
        SymbolElement {
            terms: self.terms.iter().map(|(t, v)| (*t, c * v)).collect(),
            floor: self.floor,
        }
    }

    fn enforce_floor(&mut self) {
        if let Some(f) = self.floor {
            self.terms.retain(|t, _| t.b >= f);
        }
    }

    /// Homogeneous word parity of the support, if any; zero counts even.
    pub fn parity(&self) -> Option<bool> {
        let mut odd = None;
        for t in self.terms.keys() {
            match odd {
                None => odd = Some(t.is_odd()),
                Some(p) if p != t.is_odd() => return None,
                _ => {}
            }
        }
        Some(odd.unwrap_or(false))
    }

    fn parity_split(&self) -> (SymbolElement, SymbolElement) {
        let mut even = SymbolElement {
            terms: BTreeMap::new(),
            floor: self.floor,
        };
        let mut odd = even.clone();
        for (t, c) in &self.terms {
            if t.is_odd() {
                odd.terms.insert(*t, c.clone());
            } else {
                even.terms.insert(*t, c.clone());
            }
        }
        (even, odd)
    }

    /// Exterior (supercommutative) product in P(2N).
    pub fn ext_mul(&self, rhs: &Self) -> Self {
        let mut out = SymbolElement::zero();
        for (t1, c1) in &self.terms {
            for (t2, c2) in &rhs.terms {
                if let Some((w, s)) = t1.word.ext_mul(&t2.word) {
                    let mut c = c1 * c2;
                    if s < 0 {
                        c = -c;
                    }
                    out.add_term(
                        SymbolTerm {
                            a: t1.a + t2.a,
                            b: t1.b + t2.b,
                            word: w,
                        },
                        c,
                    );
                }
            }
        }
        out.floor = pairing_floor(self, rhs);
        out.enforce_floor();
        out
    }

    fn d_t(&self) -> Self {
        let mut out = SymbolElement {
            terms: BTreeMap::new(),
            floor: self.floor,
        };
        for (t, c) in &self.terms {
            out.add_term(
                SymbolTerm {
                    a: t.a - 1,
                    ..*t
                },
                c * &GaussianRational::from_int(t.a),
            );
        }
        out
    }

    fn d_tau(&self) -> Self {
        let mut out = SymbolElement {
            terms: BTreeMap::new(),
            floor: self.floor.map(|f| f - 1),
        };
        for (t, c) in &self.terms {
            out.add_term(
                SymbolTerm {
                    b: t.b - 1,
                    ..*t
                },
                c * &GaussianRational::from_int(t.b),
            );
        }
        out
    }

    fn d_xi(&self, i: u32) -> Self {
        let mut out = SymbolElement {
            terms: BTreeMap::new(),
            floor: self.floor,
        };
        for (t, c) in &self.terms {
            if let Some((w, s)) = t.word.d_xi(i) {
                let v = if s < 0 { -c.clone() } else { c.clone() };
                out.add_term(SymbolTerm { word: w, ..*t }, v);
            }
        }
        out
    }

    fn d_eta(&self, i: u32) -> Self {
        let mut out = SymbolElement {
            terms: BTreeMap::new(),
            floor: self.floor,
        };
        for (t, c) in &self.terms {
            if let Some((w, s)) = t.word.d_eta(i) {
                let v = if s < 0 { -c.clone() } else { c.clone() };
                out.add_term(SymbolTerm { word: w, ..*t }, v);
            }
        }
        out
    }

    /// Exact equality of the coordinates at tau-exponent >= `cmp_floor`.
    pub fn agrees_with(&self, rhs: &Self, cmp_floor: i64) -> bool {
        let keys: std::collections::BTreeSet<SymbolTerm> = self
            .terms
            .keys()
            .chain(rhs.terms.keys())
            .filter(|t| t.b >= cmp_floor)
            .cloned()
            .collect();
        keys.iter().all(|t| {
            let a = self.terms.get(t);
            let b = rhs.terms.get(t);
            match (a, b) {
                (Some(x), Some(y)) => x == y,
                (Some(x), None) | (None, Some(x)) => x.is_zero(),
                (None, None) => true,
            }
        })
    }
}

/// The Poisson super bracket on P(2N); `n` is the number of xi/eta pairs.
pub fn poisson_bracket(a: &SymbolElement, b: &SymbolElement, n: u32) -> SymbolElement {
    let (ae, ao) = a.parity_split();
    let mut out = poisson_bracket_homogeneous(&ae, false, b, n);
    out = out.add(&poisson_bracket_homogeneous(&ao, true, b, n));
    out.floor = pairing_floor(a, b); // pairing bound also covers the d_tau shift
    out.enforce_floor();
    out
}

fn poisson_bracket_homogeneous(
    a: &SymbolElement,
    a_odd: bool,
    b: &SymbolElement,
    n: u32,
) -> SymbolElement {
    if a.is_zero() {
        return SymbolElement::zero();
    }
    let mut out = a.d_tau().ext_mul(&b.d_t());
    out = out.sub(&a.d_t().ext_mul(&b.d_tau()));
    // (-1)^{p(A)+1}: +1 for odd A, -1 for even A.
    let odd_sign = if a_odd {
        GaussianRational::one()
    } else {
        -GaussianRational::one()
    };
    let mut odd_part = SymbolElement::zero();
    for i in 1..=n {
        odd_part = odd_part.add(&a.d_xi(i).ext_mul(&b.d_eta(i)));
        odd_part = odd_part.add(&a.d_eta(i).ext_mul(&b.d_xi(i)));
    }
    out.add(&odd_part.scale(&odd_sign))
}

/// The deformed associative product `A o B`, truncated in tau-degree at
/// `floor`. Grassmann parts multiply with the Clifford product. The result
/// is exact when every term of the series vanishes on its own above the
/// floor.
pub fn compose_truncated(a: &SymbolElement, b: &SymbolElement, floor: i64) -> SymbolElement {
    let mut out = SymbolElement::zero();
    let mut truncated = false;
    for (t1, c1) in a.terms() {
        for (t2, c2) in b.terms() {
            let word_prod =
                CliffordElement::from_word(t1.word).mul(&CliffordElement::from_word(t2.word));
            if word_prod.is_zero() {
                continue;
            }
            let c12 = c1 * c2;
            let mut nn: u64 = 0;
            loop {
                let tau_exp = t1.b + t2.b - nn as i64;
                if tau_exp < floor {
                    truncated = true;
                    break;
                }
                let num = falling(t1.b, nn) * falling(t2.a, nn);
                if !num.is_zero() {
                    let mut fact = BigInt::one();
                    for s in 1..=nn {
                        fact *= BigInt::from(s);
                    }
                    let coeff = GaussianRational::new(
                        BigRational::new(num, fact),
                        BigRational::zero(),
                    );
                    let c = &(&c12 * &coeff);
                    for (w, wc) in word_prod.terms() {
                        out.add_term(
                            SymbolTerm {
                                a: t1.a + t2.a - nn as i64,
                                b: tau_exp,
                                word: *w,
                            },
                            &(c * wc) * &GaussianRational::one(),
                        );
                    }
                }
                // Series terminates once either falling factorial is
                // identically zero for all larger nn.
                let tau_done = t1.b >= 0 && nn as i64 >= t1.b;
                let t_done = t2.a >= 0 && nn as i64 >= t2.a;
                if tau_done || t_done {
                    break;
                }
                nn += 1;
            }
        }
    }
    let input_floor = pairing_floor(a, b);
    out.floor = if truncated {
        combine_floor(Some(floor), input_floor)
    } else {
        input_floor
    };
    out.enforce_floor();
    out
}

/// Lie superbracket of P1(2N): `A o B -+ B o A` with the super sign, both
/// compositions truncated at `floor`.
pub fn p1_bracket(a: &SymbolElement, b: &SymbolElement, floor: i64) -> SymbolElement {
    let (ae, ao) = a.parity_split();
    let (be, bo) = b.parity_split();
    let mut out = SymbolElement::zero();
    for (x, xo) in [(&ae, false), (&ao, true)] {
        for (y, yo) in [(&be, false), (&bo, true)] {
            if x.is_zero() || y.is_zero() {
                continue;
            }
            let xy = compose_truncated(x, y, floor);
            let yx = compose_truncated(y, x, floor);
            let piece = if xo && yo { xy.add(&yx) } else { xy.sub(&yx) };
            out = out.add(&piece);
        }
    }
    out
}

/// Builders for the common generators.
pub fn t_pow(a: i64) -> SymbolElement {
    SymbolElement::monomial(a, 0, GrassmannWord::ONE, GaussianRational::one())
}

pub fn tau_pow(b: i64) -> SymbolElement {
    SymbolElement::monomial(0, b, GrassmannWord::ONE, GaussianRational::one())
}

pub fn xi(i: u32) -> SymbolElement {
    SymbolElement::monomial(0, 0, GrassmannWord::xi_gen(i), GaussianRational::one())
}

pub fn eta(i: u32) -> SymbolElement {
    SymbolElement::monomial(0, 0, GrassmannWord::eta_gen(i), GaussianRational::one())
}

/// The 4N odd generators of sp(2|2N) realized inside K(2N) in the Poisson
/// picture. All are exact finite sums. Returned in the order
/// `(xi_i)^+, (xi_i)^-, (eta_i)^+, (eta_i)^-` for i = 1..N.
pub fn sp_symbol_generators(n: u32) -> Vec<(String, SymbolElement)> {
    let half = GaussianRational::from_ratio(1, 2);
    // sum_j eta_j xi_j
    let mut pair_sum = SymbolElement::zero();
    for j in 1..=n {
        pair_sum = pair_sum.add(&eta(j).ext_mul(&xi(j)));
    }
    // sum_{j,k} eta_j xi_j eta_k xi_k
    let pair_sum_sq = pair_sum.ext_mul(&pair_sum);

    let mut out = Vec::new();
    for i in 1..=n {
        let xi_plus = t_pow(1)
            .ext_mul(&xi(i))
            .add(&tau_pow(-1).ext_mul(&pair_sum).ext_mul(&xi(i)).scale(&half));
        let xi_minus = t_pow(-1).ext_mul(&xi(i)).sub(
            &t_pow(-2)
                .ext_mul(&tau_pow(-1))
                .ext_mul(&pair_sum)
                .ext_mul(&xi(i))
                .scale(&half),
        );
        let eta_plus = t_pow(2)
            .ext_mul(&tau_pow(1))
            .ext_mul(&eta(i))
            .add(&t_pow(1).ext_mul(&eta(i)).ext_mul(&pair_sum).scale(&half))
            .add(
                &tau_pow(-1)
                    .ext_mul(&eta(i))
                    .ext_mul(&pair_sum_sq)
                    .scale(&half),
            );
        let eta_minus = tau_pow(1)
            .ext_mul(&eta(i))
            .sub(&t_pow(-1).ext_mul(&eta(i)).ext_mul(&pair_sum).scale(&half))
            .add(
                &t_pow(-2)
                    .ext_mul(&tau_pow(-1))
                    .ext_mul(&eta(i))
                    .ext_mul(&pair_sum_sq)
                    .scale(&half),
            );
        out.push((format!("(xi_{})^+_K", i), xi_plus));
        out.push((format!("(xi_{})^-_K", i), xi_minus));
        out.push((format!("(eta_{})^+_K", i), eta_plus));
        out.push((format!("(eta_{})^-_K", i), eta_minus));
    }
    out
}

impl fmt::Display for SymbolElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            write!(f, "0")?;
        } else {
            let mut first = true;
            for (t, c) in self.terms.iter().rev() {
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                write!(f, "({})", c)?;
                if t.a != 0 {
                    write!(f, " * t^{}", t.a)?;
                }
                if t.b != 0 {
                    write!(f, " * tau^{}", t.b)?;
                }
                if t.word.degree() > 0 {
                    write!(f, " * {}", t.word)?;
                }
            }
        }
        if let Some(fl) = self.floor {
            write!(f, "  (truncated below tau^{})", fl)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn tau_t_bracket() {
        let out = poisson_bracket(&tau_pow(1), &t_pow(1), 1);
        assert_eq!(out, SymbolElement::one());
    }

    #[test]
    fn xi_eta_bracket() {
        // {xi_1, eta_1} = 1 with the left-derivative convention
        let out = poisson_bracket(&xi(1), &eta(1), 1);
        assert_eq!(out, SymbolElement::one());
    }

    #[test]
    fn witt_relation() {
        // {t^{n+1} tau, t^{m+1} tau} = (m - n) t^{n+m+1} tau
        for nn in -2i64..3 {
            for mm in -2i64..3 {
                let a = t_pow(nn + 1).ext_mul(&tau_pow(1));
                let b = t_pow(mm + 1).ext_mul(&tau_pow(1));
                let out = poisson_bracket(&a, &b, 1);
                let expected = t_pow(nn + mm + 1)
                    .ext_mul(&tau_pow(1))
                    .scale(&g(mm - nn));
                assert_eq!(out, expected);
            }
        }
    }

    #[test]
    fn lie_degrees() {
        assert_eq!(
            lie_degree(&SymbolTerm {
                a: 3,
                b: 1,
                word: GrassmannWord::ONE
            }),
            0
        );
        assert_eq!(
            lie_degree(&SymbolTerm {
                a: 0,
                b: 2,
                word: GrassmannWord::ONE
            }),
            1
        );
        // t^-1 tau^-1 xi_1 xi_2 eta_1 eta_2 has degree -1 + 2 - ... = 0
        assert_eq!(
            lie_degree(&SymbolTerm {
                a: -1,
                b: -1,
                word: GrassmannWord {
                    xi: 0b11,
                    eta: 0b11
                }
            }),
            0
        );
    }

    #[test]
    fn compose_without_tau_is_plain_product() {
        let out = compose_truncated(&t_pow(1), &t_pow(1), -3);
        assert!(out.is_exact());
        assert_eq!(out, t_pow(2));
    }

    #[test]
    fn compose_tau_with_t() {
        // tau o t = t tau + 1, exact
        let out = compose_truncated(&tau_pow(1), &t_pow(1), -3);
        assert!(out.is_exact());
        let expected = t_pow(1).ext_mul(&tau_pow(1)).add(&SymbolElement::one());
        assert_eq!(out, expected);
    }

    #[test]
    fn compose_infinite_tail() {
        // tau^-1 o t^-1 = sum n! t^{-1-n} tau^{-1-n}, truncated at -3
        let out = compose_truncated(&tau_pow(-1), &t_pow(-1), -3);
        assert!(!out.is_exact());
        assert_eq!(out.floor(), Some(-3));
        let mut expected = SymbolElement::zero();
        expected.add_term(
            SymbolTerm {
                a: -1,
                b: -1,
                word: GrassmannWord::ONE,
            },
            g(1),
        );
        expected.add_term(
            SymbolTerm {
                a: -2,
                b: -2,
                word: GrassmannWord::ONE,
            },
            g(1),
        );
        expected.add_term(
            SymbolTerm {
                a: -3,
                b: -3,
                word: GrassmannWord::ONE,
            },
            g(2),
        );
        assert!(out.agrees_with(&expected, -3));
    }

    #[test]
    fn p1_bracket_deforms_poisson() {
        // [tau, t] = 1 in P1 as well
        let out = p1_bracket(&tau_pow(1), &t_pow(1), -4);
        assert_eq!(out, SymbolElement::one());
    }

    #[test]
    fn p1_self_bracket_of_even_vanishes() {
        let a = t_pow(2).ext_mul(&tau_pow(1)).add(&t_pow(-1));
        let out = p1_bracket(&a, &a, -4);
        assert!(out.is_zero());
    }

    #[test]
    fn sp_generator_n1_collapses() {
        // (xi_1)^+_K = t xi_1 at N = 1 because xi_1 xi_1 = 0
        let gens = sp_symbol_generators(1);
        let (name, v) = &gens[0];
        assert_eq!(name, "(xi_1)^+_K");
        assert_eq!(*v, t_pow(1).ext_mul(&xi(1)));
    }

    #[test]
    fn sp_generator_n2_correction_term() {
        // (xi_1)^+_K = t xi_1 + (1/2) tau^-1 (eta_1 xi_1 + eta_2 xi_2) xi_1
        //            = t xi_1 - (1/2) tau^-1 xi_1 xi_2 eta_2  (canonical order)
        let gens = sp_symbol_generators(2);
        let v = &gens[0].1;
        let mut expected = t_pow(1).ext_mul(&xi(1));
        // eta_2 xi_2 xi_1 = + xi_1 xi_2 eta_2 reordered:
        // eta_2 xi_2 xi_1 -> move eta_2 right past xi_2 xi_1: 2 swaps, then
        // xi_2 xi_1 = -xi_1 xi_2, so total sign -1.
        expected.add_term(
            SymbolTerm {
                a: 0,
                b: -1,
                word: GrassmannWord {
                    xi: 0b11,
                    eta: 0b10,
                },
            },
            GaussianRational::from_ratio(-1, 2),
        );
        assert_eq!(*v, expected);
    }

    #[test]
    fn grading_law_additive_under_poisson() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(97);
        let n = 2u32;
        for _ in 0..200 {
            let t1 = SymbolTerm {
                a: rng.gen_range(-3..4),
                b: rng.gen_range(-3..4),
                word: GrassmannWord {
                    xi: rng.gen_range(0..1u16 << n),
                    eta: rng.gen_range(0..1u16 << n),
                },
            };
            let t2 = SymbolTerm {
                a: rng.gen_range(-3..4),
                b: rng.gen_range(-3..4),
                word: GrassmannWord {
                    xi: rng.gen_range(0..1u16 << n),
                    eta: rng.gen_range(0..1u16 << n),
                },
            };
            let a = SymbolElement::monomial(t1.a, t1.b, t1.word, g(1));
            let b = SymbolElement::monomial(t2.a, t2.b, t2.word, g(1));
            let expected = lie_degree(&t1) + lie_degree(&t2) + 1;
            for (t, _) in poisson_bracket(&a, &b, n).terms() {
                assert_eq!(lie_degree(t) + 1, expected);
            }
        }
    }

    #[test]
    fn poisson_super_jacobi_randomized() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(101);
        let n = 2u32;
        let mut checked = 0;
        while checked < 100 {
            let rand_term = |rng: &mut rand_chacha::ChaCha8Rng| SymbolTerm {
                a: rng.gen_range(-2..3),
                b: rng.gen_range(-2..3),
                word: GrassmannWord {
                    xi: rng.gen_range(0..1u16 << n),
                    eta: rng.gen_range(0..1u16 << n),
                },
            };
            let ts = [rand_term(&mut rng), rand_term(&mut rng), rand_term(&mut rng)];
            let ps: Vec<bool> = ts.iter().map(|t| t.is_odd()).collect();
            let ms: Vec<SymbolElement> = ts
                .iter()
                .map(|t| SymbolElement::monomial(t.a, t.b, t.word, g(1)))
                .collect();
            let sign = |x: bool, y: bool| if x && y { g(-1) } else { g(1) };
            let term = |a: usize, b: usize, c: usize| {
                poisson_bracket(&ms[a], &poisson_bracket(&ms[b], &ms[c], n), n)
                    .scale(&sign(ps[a], ps[c]))
            };
            let total = term(0, 1, 2).add(&term(1, 2, 0)).add(&term(2, 0, 1));
            assert!(total.is_zero(), "Jacobi failed for {:?}", ts);
            checked += 1;
        }
    }

    #[test]
    fn compose_associative_up_to_floor() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(103);
        let n = 2u32;
        let floor = -6;
        for _ in 0..40 {
            let rand_elt = |rng: &mut rand_chacha::ChaCha8Rng| {
                SymbolElement::monomial(
                    rng.gen_range(-2..3),
                    rng.gen_range(-2..3),
                    GrassmannWord {
                        xi: rng.gen_range(0..1u16 << n),
                        eta: rng.gen_range(0..1u16 << n),
                    },
                    g(rng.gen_range(1..4)),
                )
            };
            let a = rand_elt(&mut rng);
            let b = rand_elt(&mut rng);
            let c = rand_elt(&mut rng);
            let lhs = compose_truncated(&compose_truncated(&a, &b, floor), &c, floor);
            let rhs = compose_truncated(&a, &compose_truncated(&b, &c, floor), floor);
            let cmp = lhs
                .floor()
                .into_iter()
                .chain(rhs.floor())
                .max()
                .unwrap_or(floor);
            assert!(lhs.agrees_with(&rhs, cmp), "associativity failed");
        }
    }
}
