//! Foundational algebraic laws checked against randomized and exhaustive
//! inputs: the Weyl commutation relation, product associativity, the
//! Clifford relations, the graded Jacobi identity in both pictures, and
//! the degree bookkeeping of the symbol bracket.

use crate::clifford::{CliffordElement, GrassmannWord};
use crate::error::SuperweylError;
use crate::scalar::GaussianRational;
use crate::supermatrix::{Parity, SuperMatrix};
use crate::symbols::{lie_degree, poisson_bracket, SymbolElement};
use crate::weyl::WeylElement;

/// A small deterministic pseudo-random generator (splitmix64), so that
/// randomized checks are reproducible across runs and platforms.
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// Uniform integer in `lo..=hi`.
    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    /// A small nonzero Gaussian rational with numerators in -5..=5 and
    /// denominators in 1..=4.
    pub fn scalar(&mut self) -> GaussianRational {
        loop {
            let re = GaussianRational::from_ratio(self.int(-5, 5), self.int(1, 4));
            let im = GaussianRational::from_ratio(self.int(-5, 5), self.int(1, 4));
            let c = &re + &(&im * &GaussianRational::i());
            if !c.is_zero() {
                return c;
            }
        }
    }
}

fn random_weyl(rng: &mut Rng) -> WeylElement {
    let mut out = WeylElement::zero();
    let terms = 1 + rng.below(3);
    for _ in 0..terms {
        let a = rng.int(-3, 3);
        let k = rng.below(3) as u32;
        out = &out + &WeylElement::monomial(a, k, rng.scalar());
    }
    out
}

/// `d t^k = t^k d + k t^{k-1}` for every exponent in a window, plus the
/// basic commutator instance `[d, t] = 1`.
pub fn weyl_relation_check() -> Vec<String> {
    let mut failures = Vec::new();
    let d = WeylElement::d();
    for k in -8i64..=8 {
        let lhs = &d * &WeylElement::t_pow(k);
        let rhs = &(&WeylElement::t_pow(k) * &d)
            + &WeylElement::monomial(k - 1, 0, GaussianRational::from_int(k));
        if lhs != rhs {
            failures.push(format!("d t^{k} != t^{k} d + {k} t^{}", k - 1));
        }
    }
    let comm = &(&d * &WeylElement::t_pow(1)) - &(&WeylElement::t_pow(1) * &d);
    if comm != WeylElement::one() {
        failures.push("[d, t] != 1".into());
    }
    failures
}

/// Associativity of the Weyl product on random triples.
pub fn associativity_check(rng: &mut Rng, trials: usize) -> Vec<String> {
    let mut failures = Vec::new();
    for trial in 0..trials {
        let a = random_weyl(rng);
        let b = random_weyl(rng);
        let c = random_weyl(rng);
        let left = &(&a * &b) * &c;
        let right = &a * &(&b * &c);
        if left != right {
            failures.push(format!("(ab)c != a(bc) on trial {trial}"));
        }
    }
    failures
}

/// The defining Clifford relations on all generator pairs, for each
/// number of xi/eta pairs up to `max_pairs`: like generators anticommute
/// and the mixed anticommutator is the Kronecker delta.
pub fn clifford_relations_check(max_pairs: u32) -> Vec<String> {
    let mut failures = Vec::new();
    for n in 1..=max_pairs {
        for i in 1..=n {
            for j in 1..=n {
                let xi_i = CliffordElement::xi(i);
                let xi_j = CliffordElement::xi(j);
                let eta_i = CliffordElement::eta(i);
                let eta_j = CliffordElement::eta(j);
                let anti = |a: &CliffordElement, b: &CliffordElement| a.mul(b).add(&b.mul(a));
                if !anti(&xi_i, &xi_j).is_zero() {
                    failures.push(format!("xi_{i} xi_{j} + xi_{j} xi_{i} != 0"));
                }
                if !anti(&eta_i, &eta_j).is_zero() {
                    failures.push(format!("eta_{i} eta_{j} + eta_{j} eta_{i} != 0"));
                }
                let mixed = anti(&eta_i, &xi_j);
                let expected = if i == j {
                    CliffordElement::one()
                } else {
                    CliffordElement::zero()
                };
                if !mixed.sub(&expected).is_zero() {
                    failures.push(format!("eta_{i} xi_{j} + xi_{j} eta_{i} != delta"));
                }
            }
        }
    }
    failures
}

fn random_homogeneous_matrix(rng: &mut Rng, half: usize, odd: bool) -> SuperMatrix<WeylElement> {
    let size = 2 * half;
    let mut m = SuperMatrix::zero(half, half);
    let entries = 1 + rng.below(3);
    for _ in 0..entries {
        let (row, col) = loop {
            let r = rng.below(size as u64) as usize;
            let c = rng.below(size as u64) as usize;
            if ((r < half) != (c < half)) == odd {
                break (r, c);
            }
        };
        m.add_to(row, col, &random_weyl(rng));
    }
    m
}

/// The graded Jacobi identity `[a,[b,c]] = [[a,b],c] + (-1)^{p(a)p(b)}[b,[a,c]]`
/// on random homogeneous supermatrix triples over the Weyl algebra.
pub fn super_jacobi_matrix_check(
    rng: &mut Rng,
    trials: usize,
) -> Result<Vec<String>, SuperweylError> {
    let mut failures = Vec::new();
    for trial in 0..trials {
        let pa = rng.below(2) == 1;
        let pb = rng.below(2) == 1;
        let pc = rng.below(2) == 1;
        let a = random_homogeneous_matrix(rng, 2, pa);
        let b = random_homogeneous_matrix(rng, 2, pb);
        let c = random_homogeneous_matrix(rng, 2, pc);
        if a.parity() == Parity::Mixed || b.parity() == Parity::Mixed {
            failures.push(format!("trial {trial} produced a non-homogeneous input"));
            continue;
        }
        let lhs = a.superbracket(&b.superbracket(&c)?)?;
        let mut rhs = a.superbracket(&b)?.superbracket(&c)?;
        let inner = b.superbracket(&a.superbracket(&c)?)?;
        rhs = if pa && pb {
            rhs.sub(&inner)
        } else {
            rhs.add(&inner)
        };
        if !lhs.sub(&rhs).is_zero() {
            failures.push(format!("matrix Jacobi identity fails on trial {trial}"));
        }
    }
    Ok(failures)
}

fn random_word(rng: &mut Rng, pairs: u32, odd: bool) -> GrassmannWord {
    loop {
        let mask = (1u16 << pairs) - 1;
        let w = GrassmannWord {
            xi: (rng.next_u64() as u16) & mask,
            eta: (rng.next_u64() as u16) & mask,
        };
        if w.is_odd() == odd {
            return w;
        }
    }
}

fn random_symbol(rng: &mut Rng, pairs: u32, odd: bool) -> SymbolElement {
    let mut out = SymbolElement::zero();
    let terms = 1 + rng.below(2);
    for _ in 0..terms {
        out = out.add(&SymbolElement::monomial(
            rng.int(-2, 2),
            rng.int(-2, 2),
            random_word(rng, pairs, odd),
            rng.scalar(),
        ));
    }
    out
}

/// The graded Jacobi identity for the Poisson super bracket on random
/// homogeneous symbols with two xi/eta pairs.
pub fn super_jacobi_symbol_check(rng: &mut Rng, trials: usize) -> Vec<String> {
    let pairs = 2;
    let mut failures = Vec::new();
    for trial in 0..trials {
        let pa = rng.below(2) == 1;
        let pb = rng.below(2) == 1;
        let pc = rng.below(2) == 1;
        let a = random_symbol(rng, pairs, pa);
        let b = random_symbol(rng, pairs, pb);
        let c = random_symbol(rng, pairs, pc);
        let lhs = poisson_bracket(&a, &poisson_bracket(&b, &c, pairs), pairs);
        let mut rhs = poisson_bracket(&poisson_bracket(&a, &b, pairs), &c, pairs);
        let inner = poisson_bracket(&b, &poisson_bracket(&a, &c, pairs), pairs);
        rhs = if pa && pb {
            rhs.sub(&inner)
        } else {
            rhs.add(&inner)
        };
        if !lhs.sub(&rhs).is_zero() {
            failures.push(format!("symbol Jacobi identity fails on trial {trial}"));
        }
    }
    failures
}

/// Degree additivity of the Poisson bracket on random monomials: every
/// term of the bracket of two monomials has the sum of their degrees.
/// In particular brackets of degree-0 monomials stay in degree 0, which
/// makes that slice a subalgebra.
pub fn grading_check(rng: &mut Rng, trials: usize) -> Vec<String> {
    let pairs = 2;
    let mut failures = Vec::new();
    let mut degree_zero_seen = 0usize;
    for trial in 0..trials {
        let a = SymbolElement::monomial(
            rng.int(-2, 2),
            rng.int(-2, 2),
            {
                let odd = rng.below(2) == 1;
                random_word(rng, pairs, odd)
            },
            rng.scalar(),
        );
        let b = SymbolElement::monomial(
            rng.int(-2, 2),
            rng.int(-2, 2),
            {
                let odd = rng.below(2) == 1;
                random_word(rng, pairs, odd)
            },
            rng.scalar(),
        );
        let da = a.terms().next().map(|(t, _)| lie_degree(t)).unwrap();
        let db = b.terms().next().map(|(t, _)| lie_degree(t)).unwrap();
        let br = poisson_bracket(&a, &b, pairs);
        for (t, _) in br.terms() {
            if lie_degree(t) != da + db {
                failures.push(format!(
                    "bracket term of degree {} from inputs of degrees {da} and {db} (trial {trial})",
                    lie_degree(t)
                ));
            }
        }
        if da == 0 && db == 0 {
            degree_zero_seen += 1;
            if br.terms().any(|(t, _)| lie_degree(t) != 0) {
                failures.push(format!("degree-0 bracket left degree 0 on trial {trial}"));
            }
        }
    }
    if degree_zero_seen == 0 {
        failures.push("no degree-0 pairs were sampled".into());
    }
    failures
}

/// Runs every law above with a fixed seed and at least `trials` random
/// inputs per randomized check; returns all failure messages.
pub fn run_axiom_checks(trials: usize) -> Result<Vec<String>, SuperweylError> {
    let mut failures = Vec::new();
    failures.extend(weyl_relation_check());
    let mut rng = Rng::new(0x5eed_0001);
    failures.extend(associativity_check(&mut rng, trials.min(300)));
    failures.extend(clifford_relations_check(4));
    failures.extend(super_jacobi_matrix_check(&mut rng, trials)?);
    failures.extend(super_jacobi_symbol_check(&mut rng, trials));
    failures.extend(grading_check(&mut rng, trials));
    Ok(failures)
}
