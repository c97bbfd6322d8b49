//! Grassmann monomial calculus, the Clifford superalgebra C(2N), the
//! embedding of o(2N) and the Heisenberg superalgebra into it, the spin-type
//! representation on Lambda(xi_1..xi_N), and the assembly of sp(2|2N) and
//! loop-algebra elements over the Weyl algebra.
//!
//! Generators satisfy
//!
//! ```text
//! xi_i xi_j = -xi_j xi_i,   eta_i eta_j = -eta_j eta_i,
//! eta_i xi_j = delta_ij - xi_j eta_i.
//! ```
//!
//! The canonical word has all xi's in ascending index order followed by all
//! eta's in ascending index order; every sign in this module comes from
//! rewriting to that form.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::SuperweylError;
use crate::scalar::GaussianRational;
use crate::supermatrix::SuperMatrix;
use crate::weyl::WeylElement;

/// A canonical Grassmann/Clifford word `xi_S eta_T`, stored as bitmasks
/// (bit `i-1` set means index `i` present).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct GrassmannWord {
    pub xi: u16,
    pub eta: u16,
}

fn indices(mask: u16) -> impl Iterator<Item = u32> {
    (0..16).filter(move |b| mask >> b & 1 == 1).map(|b| b + 1)
}

fn count_above(mask: u16, i: u32) -> u32 {
    (mask >> i).count_ones()
}

fn count_below(mask: u16, i: u32) -> u32 {
    (mask & ((1 << (i - 1)) - 1)).count_ones()
}

impl GrassmannWord {
    pub const ONE: GrassmannWord = GrassmannWord { xi: 0, eta: 0 };

    pub fn xi_gen(i: u32) -> Self {
        GrassmannWord {
            xi: 1 << (i - 1),
            eta: 0,
        }
    }

    pub fn eta_gen(i: u32) -> Self {
        GrassmannWord {
            xi: 0,
            eta: 1 << (i - 1),
        }
    }

    pub fn degree(&self) -> u32 {
        self.xi.count_ones() + self.eta.count_ones()
    }

    /// Parity: (|S| + |T|) mod 2, true for odd.
    pub fn is_odd(&self) -> bool {
        self.degree() % 2 == 1
    }

    pub fn xi_indices(&self) -> Vec<u32> {
        indices(self.xi).collect()
    }

    pub fn eta_indices(&self) -> Vec<u32> {
        indices(self.eta).collect()
    }

    /// Exterior (Grassmann) product: no contractions, pure sign tracking.
    /// Returns None when a generator repeats.
    pub fn ext_mul(&self, rhs: &GrassmannWord) -> Option<(GrassmannWord, i32)> {
        if self.xi & rhs.xi != 0 || self.eta & rhs.eta != 0 {
            return None;
        }
        let mut sign = 1i32;
        // Move rhs's xi block left past self's eta block.
        if (self.eta.count_ones() * rhs.xi.count_ones()) % 2 == 1 {
            sign = -sign;
        }
        sign *= merge_sign(self.xi, rhs.xi);
        sign *= merge_sign(self.eta, rhs.eta);
        Some((
            GrassmannWord {
                xi: self.xi | rhs.xi,
                eta: self.eta | rhs.eta,
            },
            sign,
        ))
    }

    /// Left derivative with respect to xi_i.
    pub fn d_xi(&self, i: u32) -> Option<(GrassmannWord, i32)> {
        if self.xi >> (i - 1) & 1 == 0 {
            return None;
        }
        let sign = if count_below(self.xi, i) % 2 == 1 { -1 } else { 1 };
        Some((
            GrassmannWord {
                xi: self.xi & !(1 << (i - 1)),
                eta: self.eta,
            },
            sign,
        ))
    }

    /// Left derivative with respect to eta_i.
    pub fn d_eta(&self, i: u32) -> Option<(GrassmannWord, i32)> {
        if self.eta >> (i - 1) & 1 == 0 {
            return None;
        }
        let skipped = self.xi.count_ones() + count_below(self.eta, i);
        let sign = if skipped % 2 == 1 { -1 } else { 1 };
        Some((
            GrassmannWord {
                xi: self.xi,
                eta: self.eta & !(1 << (i - 1)),
            },
            sign,
        ))
    }
}

/// Sign of interleaving two ascending index blocks into one ascending
/// block: (-1)^inversions. Masks must be disjoint.
fn merge_sign(left: u16, right: u16) -> i32 {
    let mut inv = 0;
    for i in indices(right) {
        inv += count_above(left, i);
    }
    if inv % 2 == 1 {
        -1
    } else {
        1
    }
}

impl fmt::Display for GrassmannWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for i in indices(self.xi) {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "xi_{}", i)?;
            first = false;
        }
        for i in indices(self.eta) {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "eta_{}", i)?;
            first = false;
        }
        Ok(())
    }
}

/// An element of the Clifford superalgebra C(2N): a Gaussian-rational
/// combination of canonical words.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct CliffordElement {
    terms: BTreeMap<GrassmannWord, GaussianRational>,
}

impl CliffordElement {
    pub fn zero() -> Self {
        CliffordElement::default()
    }

    pub fn one() -> Self {
        CliffordElement::from_word(GrassmannWord::ONE)
    }

    pub fn from_word(w: GrassmannWord) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, GaussianRational::one());
        CliffordElement { terms }
    }

    pub fn xi(i: u32) -> Self {
        CliffordElement::from_word(GrassmannWord::xi_gen(i))
    }

    pub fn eta(i: u32) -> Self {
        CliffordElement::from_word(GrassmannWord::eta_gen(i))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GrassmannWord, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: GrassmannWord, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w).or_insert_with(GaussianRational::zero);
        *e = &*e + &c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(*w, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(*w, -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return CliffordElement::zero();
        }
        CliffordElement {
            terms: self.terms.iter().map(|(w, v)| (*w, c * v)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&(-GaussianRational::one()))
    }

    /// Homogeneous parity of the support, if any; zero reports even.
    pub fn parity(&self) -> Option<bool> {
        let mut odd = None;
        for w in self.terms.keys() {
            match odd {
                None => odd = Some(w.is_odd()),
                Some(p) if p != w.is_odd() => return None,
                _ => {}
            }
        }
        Some(odd.unwrap_or(false))
    }

    /// Right-multiplies a single canonical word by the generator xi_j,
    /// rewriting to canonical form. At most two terms result (one from the
    /// contraction eta_j xi_j = 1 - xi_j eta_j).
    fn word_mul_xi(w: GrassmannWord, j: u32, out: &mut Vec<(GrassmannWord, i32)>) {
        let mut sign = 1i32;
        let mut etas: Vec<u32> = indices(w.eta).collect();
        etas.reverse();
        for t in etas {
            if t == j {
                out.push((
                    GrassmannWord {
                        xi: w.xi,
                        eta: w.eta & !(1 << (j - 1)),
                    },
                    sign,
                ));
            }
            sign = -sign;
        }
        if w.xi >> (j - 1) & 1 == 0 {
            if count_above(w.xi, j) % 2 == 1 {
                sign = -sign;
            }
            out.push((
                GrassmannWord {
                    xi: w.xi | 1 << (j - 1),
                    eta: w.eta,
                },
                sign,
            ));
        }
    }

    fn word_mul_eta(w: GrassmannWord, j: u32, out: &mut Vec<(GrassmannWord, i32)>) {
        if w.eta >> (j - 1) & 1 == 1 {
            return;
        }
        let sign = if count_above(w.eta, j) % 2 == 1 { -1 } else { 1 };
        out.push((
            GrassmannWord {
                xi: w.xi,
                eta: w.eta | 1 << (j - 1),
            },
            sign,
        ));
    }

    fn mul_generator(&self, gen_is_xi: bool, j: u32) -> Self {
        let mut out = CliffordElement::zero();
        let mut buf = Vec::with_capacity(2);
        for (w, c) in &self.terms {
            buf.clear();
            if gen_is_xi {
                Self::word_mul_xi(*w, j, &mut buf);
            } else {
                Self::word_mul_eta(*w, j, &mut buf);
            }
            for (nw, s) in &buf {
                let v = if *s < 0 { -c.clone() } else { c.clone() };
                out.add_term(*nw, v);
            }
        }
        out
    }

    /// Clifford product, reduced to canonical words.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = CliffordElement::zero();
        for (w, c) in &rhs.terms {
            let mut acc = self.scale(c);
            for i in indices(w.xi) {
                acc = acc.mul_generator(true, i);
            }
            for i in indices(w.eta) {
                acc = acc.mul_generator(false, i);
            }
            out = out.add(&acc);
        }
        out
    }

    /// Super-commutator in C(2N); both arguments must be parity
    /// homogeneous (bilinear extension is not needed here).
    pub fn superbracket(&self, rhs: &Self) -> Self {
        let pa = self.parity().expect("homogeneous left argument");
        let pb = rhs.parity().expect("homogeneous right argument");
        let ab = self.mul(rhs);
        let ba = rhs.mul(self);
        if pa && pb {
            ab.add(&ba)
        } else {
            ab.sub(&ba)
        }
    }
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({}) {}", c, w)?;
        }
        Ok(())
    }
}

impl fmt::Debug for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Basis elements of `o(2N) + hei(0|2N)` accepted by the embedding into
/// C(2N).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OBasis {
    /// xi_i xi_j with i < j
    XiXi(u32, u32),
    /// eta_i eta_j with i < j
    EtaEta(u32, u32),
    /// xi_i eta_j (any i, j)
    XiEta(u32, u32),
    /// odd generator xi_i
    Xi(u32),
    /// odd generator eta_i
    Eta(u32),
    /// central element of the Heisenberg part
    Central,
}

impl OBasis {
    pub fn label(&self) -> String {
        match self {
            OBasis::XiXi(i, j) => format!("xi_{} xi_{}", i, j),
            OBasis::EtaEta(i, j) => format!("eta_{} eta_{}", i, j),
            OBasis::XiEta(i, j) => format!("xi_{} eta_{}", i, j),
            OBasis::Xi(i) => format!("xi_{}", i),
            OBasis::Eta(i) => format!("eta_{}", i),
            OBasis::Central => "C".to_string(),
        }
    }
}

/// The embedding of `o(2N) + hei(0|2N)` into C(2N): quadratics map to the
/// corresponding Clifford products, except `xi_i eta_i` which is shifted by
/// -1/2, and the central element maps to 1.
pub fn iota(x: OBasis) -> Result<CliffordElement, SuperweylError> {
    match x {
        OBasis::XiXi(i, j) | OBasis::EtaEta(i, j) if i >= j => Err(
            SuperweylError::UnknownBasisElement(format!("{:?} needs i < j", x)),
        ),
        OBasis::XiXi(i, j) => Ok(CliffordElement::xi(i).mul(&CliffordElement::xi(j))),
        OBasis::EtaEta(i, j) => Ok(CliffordElement::eta(i).mul(&CliffordElement::eta(j))),
        OBasis::XiEta(i, j) => {
            let prod = CliffordElement::xi(i).mul(&CliffordElement::eta(j));
            if i == j {
                Ok(prod.sub(&CliffordElement::one().scale(&GaussianRational::from_ratio(1, 2))))
            } else {
                Ok(prod)
            }
        }
        OBasis::Xi(i) => Ok(CliffordElement::xi(i)),
        OBasis::Eta(i) => Ok(CliffordElement::eta(i)),
        OBasis::Central => Ok(CliffordElement::one()),
    }
}

/// The N(2N-1) quadratic basis elements of o(2N), in a fixed order.
pub fn o_basis(n: u32) -> Vec<OBasis> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(OBasis::XiXi(i, j));
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(OBasis::EtaEta(i, j));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            out.push(OBasis::XiEta(i, j));
        }
    }
    out
}

/// Ordered basis of Lambda(xi_1..xi_N) as bitmasks: even-degree monomials
/// first, then odd; within each parity by degree, then lexicographically by
/// index sequence -- except that degree N-1 (for N >= 3) is ordered by
/// missing index, which reproduces the hatted-basis convention used for the
/// explicit 8x8 elementary-matrix identities at N = 4.
pub fn lambda_basis(n: u32) -> Vec<u16> {
    let mut masks: Vec<u16> = (0..(1u16 << n)).collect();
    let sort_key = |m: &u16| -> (u32, Vec<u32>) {
        let deg = m.count_ones();
        if n >= 3 && deg == n - 1 {
            // missing index ascending
            let missing = indices(!m & ((1 << n) - 1) as u16).collect();
            (deg, missing)
        } else {
            (deg, indices(*m).collect())
        }
    };
    masks.sort_by(|a, b| {
        let (pa, pb) = (a.count_ones() % 2, b.count_ones() % 2);
        pa.cmp(&pb).then_with(|| sort_key(a).cmp(&sort_key(b)))
    });
    masks
}

/// Applies a canonical Clifford word to a Lambda monomial: xi_i acts by
/// left multiplication, eta_i as the left derivative d/d(xi_i).
fn word_apply(w: &GrassmannWord, mask: u16) -> Option<(u16, i32)> {
    let mut m = mask;
    let mut sign = 1i32;
    let mut etas: Vec<u32> = indices(w.eta).collect();
    etas.reverse();
    for i in etas {
        if m >> (i - 1) & 1 == 0 {
            return None;
        }
        if count_below(m, i) % 2 == 1 {
            sign = -sign;
        }
        m &= !(1 << (i - 1));
    }
    let mut xis: Vec<u32> = indices(w.xi).collect();
    xis.reverse();
    for i in xis {
        if m >> (i - 1) & 1 == 1 {
            return None;
        }
        if count_below(m, i) % 2 == 1 {
            sign = -sign;
        }
        m |= 1 << (i - 1);
    }
    Some((m, sign))
}

/// Matrix of a Clifford element acting on Lambda(xi_1..xi_N) in the
/// [`lambda_basis`] order; shape (2^{N-1} | 2^{N-1}).
pub fn rho_matrix(x: &CliffordElement, n: u32) -> SuperMatrix<GaussianRational> {
    let basis = lambda_basis(n);
    let index: BTreeMap<u16, usize> = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let half = basis.len() / 2;
    let mut out = SuperMatrix::zero(half, half);
    for (col, mask) in basis.iter().enumerate() {
        for (w, c) in x.terms() {
            if let Some((m2, s)) = word_apply(w, *mask) {
                let row = index[&m2];
                let v = if s < 0 { -c.clone() } else { c.clone() };
                out.add_to(row, col, &v);
            }
        }
    }
    out
}

/// An odd generator of V.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OddGen {
    Xi(u32),
    Eta(u32),
}

impl OddGen {
    pub fn label(&self) -> String {
        match self {
            OddGen::Xi(i) => format!("xi_{}", i),
            OddGen::Eta(i) => format!("eta_{}", i),
        }
    }

    fn element(&self) -> CliffordElement {
        match self {
            OddGen::Xi(i) => CliffordElement::xi(*i),
            OddGen::Eta(i) => CliffordElement::eta(*i),
        }
    }
}

/// Sign choice in the `rho(X)^{+-}` construction.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn exponent(&self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// The deformed odd matrices `rho(X)^{+-}` over the Weyl algebra: the
/// even-to-odd (lower-left) block of rho(X) is multiplied by `t^{+-1}`,
/// the odd-to-even (upper-right) block by `t d t^{+-1} -+ (1/2) t^{+-1}`.
pub fn rho_pm(v: OddGen, sign: Sign, n: u32) -> SuperMatrix<WeylElement> {
    let e = sign.exponent();
    let scalar = rho_matrix(&v.element(), n);
    let lower = scalar.lower_left().promote();
    let upper = scalar.upper_right().promote();
    let t_e = WeylElement::t_pow(e);
    let half = GaussianRational::from_ratio(1, 2);
    // t d t^{+-1} -+ (1/2) t^{+-1}
    let upper_coeff = WeylElement::tdtn(e)
        - WeylElement::t_pow(e).scale(&half).scale(&GaussianRational::from_int(e));
    lower.scale(&t_e).add(&upper.scale(&upper_coeff))
}

/// The sl(2) triple (E, H, F) of diagonal Weyl matrices at shape
/// (2^{N-1} | 2^{N-1}).
pub fn sl2_generators(n: u32) -> (
    SuperMatrix<WeylElement>,
    SuperMatrix<WeylElement>,
    SuperMatrix<WeylElement>,
) {
    let half = 1usize << (n - 1);
    let half_i = GaussianRational::i() * GaussianRational::from_ratio(1, 2);
    let half_r = GaussianRational::from_ratio(1, 2);

    let tdt2 = WeylElement::product_of(&[
        WeylElement::t_pow(1),
        WeylElement::d(),
        WeylElement::t_pow(2),
    ]);
    let t2dt = WeylElement::product_of(&[
        WeylElement::t_pow(2),
        WeylElement::d(),
        WeylElement::t_pow(1),
    ]);
    let tdtm2 = WeylElement::product_of(&[
        WeylElement::t_pow(1),
        WeylElement::d(),
        WeylElement::t_pow(-2),
    ]);
    let dtm1 = WeylElement::product_of(&[WeylElement::d(), WeylElement::t_pow(-1)]);

    let e_even = (tdt2 - WeylElement::t_pow(2).scale(&half_r)).scale(&half_i);
    let e_odd = (t2dt - WeylElement::t_pow(2).scale(&half_r)).scale(&half_i);
    let f_even = (tdtm2 + WeylElement::t_pow(-2).scale(&half_r)).scale(&half_i);
    let f_odd = (dtm1 + WeylElement::t_pow(-2).scale(&half_r)).scale(&half_i);
    let h_coeff = WeylElement::product_of(&[WeylElement::t_pow(1), WeylElement::d()]);

    let diag = |even: WeylElement, odd: WeylElement| {
        let mut m = SuperMatrix::zero(half, half);
        for i in 0..half {
            m.set(i, i, even.clone());
            m.set(half + i, half + i, odd.clone());
        }
        m
    };
    (
        diag(e_even, e_odd),
        diag(h_coeff.clone(), h_coeff),
        diag(f_even, f_odd),
    )
}

/// Spanning labeled basis of sp(2|2N) inside End(W^{2^{N-1}|2^{N-1}}):
/// E, H, F, the images of the o(2N) quadratics, and the 4N odd elements
/// `rho(v)^{+-}`.
pub fn spo_basis(n: u32) -> Vec<(String, SuperMatrix<WeylElement>)> {
    let mut out = Vec::new();
    let (e, h, f) = sl2_generators(n);
    out.push(("E".to_string(), e));
    out.push(("H".to_string(), h));
    out.push(("F".to_string(), f));
    for x in o_basis(n) {
        let m = rho_matrix(&iota(x).expect("o_basis elements are valid"), n).promote();
        out.push((format!("rho({})", x.label()), m));
    }
    for i in 1..=n {
        for (v, tag) in [(OddGen::Xi(i), "xi"), (OddGen::Eta(i), "eta")] {
            for (s, stag) in [(Sign::Plus, "+"), (Sign::Minus, "-")] {
                out.push((
                    format!("rho({}_{})^{}", tag, i, stag),
                    rho_pm(v, s, n),
                ));
            }
        }
    }
    out
}

/// Loop-algebra element `t^n rho(iota(x))` with Weyl entries.
pub fn loop_so_element(x: OBasis, n_mode: i64, n: u32) -> Result<SuperMatrix<WeylElement>, SuperweylError> {
    let m = rho_matrix(&iota(x)?, n).promote();
    Ok(m.scale(&WeylElement::t_pow(n_mode)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::supermatrix::Parity;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn eta_xi_contraction() {
        // eta_1 * xi_1 = 1 - xi_1 eta_1
        let p = CliffordElement::eta(1).mul(&CliffordElement::xi(1));
        let mut expected = CliffordElement::one();
        expected.add_term(
            GrassmannWord {
                xi: 0b1,
                eta: 0b1,
            },
            -GaussianRational::one(),
        );
        assert_eq!(p, expected);
    }

    #[test]
    fn odd_generator_squares_to_zero() {
        assert!(CliffordElement::xi(1).mul(&CliffordElement::xi(1)).is_zero());
        assert!(CliffordElement::eta(2).mul(&CliffordElement::eta(2)).is_zero());
    }

    #[test]
    fn eta_on_two_letter_word() {
        // eta_1 * (xi_1 xi_2) = xi_2 + xi_1 xi_2 eta_1  (hand rewriting)
        let x12 = CliffordElement::xi(1).mul(&CliffordElement::xi(2));
        let p = CliffordElement::eta(1).mul(&x12);
        let mut expected = CliffordElement::zero();
        expected.add_term(GrassmannWord { xi: 0b10, eta: 0 }, g(1));
        expected.add_term(GrassmannWord { xi: 0b11, eta: 0b1 }, g(1));
        assert_eq!(p, expected);
    }

    #[test]
    fn clifford_relations_exhaustive() {
        // All generator pairs for N <= 4: xi_i xi_j + xi_j xi_i = 0,
        // eta_i eta_j + eta_j eta_i = 0, eta_i xi_j + xi_j eta_i = delta_ij.
        for n in 1..=4u32 {
            for i in 1..=n {
                for j in 1..=n {
                    let (xi_i, xi_j) = (CliffordElement::xi(i), CliffordElement::xi(j));
                    let (eta_i, eta_j) = (CliffordElement::eta(i), CliffordElement::eta(j));
                    assert!(xi_i.mul(&xi_j).add(&xi_j.mul(&xi_i)).is_zero());
                    assert!(eta_i.mul(&eta_j).add(&eta_j.mul(&eta_i)).is_zero());
                    let anti = eta_i.mul(&xi_j).add(&xi_j.mul(&eta_i));
                    let expected = if i == j {
                        CliffordElement::one()
                    } else {
                        CliffordElement::zero()
                    };
                    assert_eq!(anti, expected);
                }
            }
        }
    }

    #[test]
    fn iota_diagonal_shift_and_central() {
        let x = iota(OBasis::XiEta(1, 1)).unwrap();
        let mut expected = CliffordElement::zero();
        expected.add_term(GrassmannWord { xi: 1, eta: 1 }, g(1));
        expected.add_term(GrassmannWord::ONE, GaussianRational::from_ratio(-1, 2));
        assert_eq!(x, expected);
        assert_eq!(iota(OBasis::Central).unwrap(), CliffordElement::one());
    }

    #[test]
    fn iota_bracket_example() {
        // [iota(xi_1 eta_1), iota(xi_1)] = xi_1
        let a = iota(OBasis::XiEta(1, 1)).unwrap();
        let b = iota(OBasis::Xi(1)).unwrap();
        assert_eq!(a.superbracket(&b), CliffordElement::xi(1));
    }

    #[test]
    fn iota_rejects_bad_order() {
        assert!(iota(OBasis::XiXi(2, 1)).is_err());
    }

    #[test]
    fn lambda_basis_n4_matches_hatted_convention() {
        let b = lambda_basis(4);
        let expected: Vec<u16> = vec![
            0b0000, // 1
            0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100, // 12 13 14 23 24 34
            0b1111, // 1234
            0b0001, 0b0010, 0b0100, 0b1000, // 1 2 3 4
            0b1110, 0b1101, 0b1011, 0b0111, // 234 134 124 123
        ];
        assert_eq!(b, expected);
    }

    #[test]
    fn rho_n1_elementary_shapes() {
        // xi_1 maps 1 -> xi_1 (lower-left); eta_1 maps xi_1 -> 1 (upper-right)
        let xi = rho_matrix(&CliffordElement::xi(1), 1);
        assert_eq!(*xi.get(1, 0), g(1));
        assert_eq!(xi.parity(), Parity::Odd);
        assert!(xi.get(0, 1).is_zero());
        let eta = rho_matrix(&CliffordElement::eta(1), 1);
        assert_eq!(*eta.get(0, 1), g(1));
        assert!(eta.get(1, 0).is_zero());
    }

    #[test]
    fn rho_is_an_algebra_map() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(71);
        for n in 1..=3u32 {
            for _ in 0..10 {
                let rand_elt = |rng: &mut rand_chacha::ChaCha8Rng| {
                    let mut x = CliffordElement::zero();
                    for _ in 0..3 {
                        let w = GrassmannWord {
                            xi: rng.gen_range(0..1u16 << n),
                            eta: rng.gen_range(0..1u16 << n),
                        };
                        x.add_term(w, g(rng.gen_range(-3..4)));
                    }
                    x
                };
                let x = rand_elt(&mut rng);
                let y = rand_elt(&mut rng);
                let lhs = rho_matrix(&x.mul(&y), n);
                let rhs = rho_matrix(&x, n).mat_mul(&rho_matrix(&y, n)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn rho_dimension_count() {
        // rho is onto End(C^{2^{N-1}|2^{N-1}}): the 4^N canonical words map
        // to a spanning set, i.e. the flattened images have full rank.
        use crate::scalar::SpanSolver;
        for n in 1..=3u32 {
            let size = 1usize << n;
            let mut solver = SpanSolver::new(size * size);
            for xi in 0..1u16 << n {
                for eta in 0..1u16 << n {
                    let w = GrassmannWord { xi, eta };
                    let m = rho_matrix(&CliffordElement::from_word(w), n);
                    let flat: Vec<GaussianRational> = (0..size)
                        .flat_map(|i| (0..size).map(move |j| (i, j)))
                        .map(|(i, j)| m.get(i, j).clone())
                        .collect();
                    solver.push_column(flat);
                }
            }
            assert_eq!(solver.rank(), size * size);
        }
    }

    #[test]
    fn rho_pm_n1_matches_explicit_matrices() {
        // rho(xi_1)^+ has lower-left t; rho(eta_1)^- has upper-right d - t^{-1}/2;
        // rho(eta_1)^+ has upper-right t^2 d + t/2.
        let xp = rho_pm(OddGen::Xi(1), Sign::Plus, 1);
        assert_eq!(*xp.get(1, 0), WeylElement::t_pow(1));
        assert!(xp.get(0, 1).is_zero());

        let em = rho_pm(OddGen::Eta(1), Sign::Minus, 1);
        let expected = WeylElement::d()
            - WeylElement::t_pow(-1).scale(&GaussianRational::from_ratio(1, 2));
        assert_eq!(*em.get(0, 1), expected);

        let ep = rho_pm(OddGen::Eta(1), Sign::Plus, 1);
        let expected = WeylElement::monomial(2, 1, g(1))
            + WeylElement::t_pow(1).scale(&GaussianRational::from_ratio(1, 2));
        assert_eq!(*ep.get(0, 1), expected);
    }

    #[test]
    fn xi_squares_to_zero_as_matrix() {
        let m = rho_pm(OddGen::Xi(1), Sign::Plus, 1);
        assert!(m.mat_mul(&m).unwrap().is_zero());
    }

    #[test]
    fn sl2_relations() {
        for n in 1..=4u32 {
            let (e, h, f) = sl2_generators(n);
            assert_eq!(
                h.superbracket(&e).unwrap(),
                e.scale(&WeylElement::monomial(0, 0, g(2)))
            );
            assert_eq!(
                h.superbracket(&f).unwrap(),
                f.scale(&WeylElement::monomial(0, 0, g(-2)))
            );
            assert_eq!(e.superbracket(&f).unwrap(), h);
        }
    }

    #[test]
    fn loop_algebra_law() {
        // [loop(x, n), loop(y, m)] = loop([x, y], n + m), with the bracket
        // computed in the Clifford algebra.
        let n = 2u32;
        let cases = [
            (OBasis::XiXi(1, 2), OBasis::EtaEta(1, 2)),
            (OBasis::XiEta(1, 2), OBasis::XiEta(2, 1)),
            (OBasis::XiEta(1, 1), OBasis::XiXi(1, 2)),
        ];
        for (x, y) in cases {
            for (nm, mm) in [(0i64, 1i64), (2, -1), (-2, -1)] {
                let lx = loop_so_element(x, nm, n).unwrap();
                let ly = loop_so_element(y, mm, n).unwrap();
                let lhs = lx.superbracket(&ly).unwrap();
                let bracket = iota(x).unwrap().superbracket(&iota(y).unwrap());
                let rhs = rho_matrix(&bracket, n)
                    .promote()
                    .scale(&WeylElement::t_pow(nm + mm));
                assert_eq!(lhs, rhs);
            }
        }
    }
}
