//! Breadth-first superbracket closure of the seed subalgebra
//! sp(2|2N) + loop so(2N), restricted to a finite degree band, with
//! coverage reporting against the elementary-matrix target sets.
//!
//! Candidates are screened for novelty with modular arithmetic over
//! F_p[i] (p = 2^61 - 1) for speed; every accepted element is re-checked
//! exactly afterwards, so a modular false dependence can only shrink the
//! reached span (and would then surface as a coverage failure), never
//! silently enlarge it.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::clifford::{loop_so_element, o_basis, rho_pm, spo_basis, OddGen, Sign};
use crate::error::SuperweylError;
use crate::realizations::{ck6, families, matrix_field, Algebra};
use crate::scalar::{GaussianRational, SpanSolver};
use crate::supermatrix::{Parity, SuperMatrix};
use crate::weyl::WeylElement;

// ---------------------------------------------------------------------
// arithmetic in F_p[i], p = 2^61 - 1 (p = 3 mod 4, so this is a field)

const P: u64 = 2_305_843_009_213_693_951;

fn addm(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

fn subm(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

fn mulm(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn powm(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulm(acc, base);
        }
        base = mulm(base, base);
        exp >>= 1;
    }
    acc
}

fn invm(a: u64) -> u64 {
    assert!(a != 0, "modular inverse of zero");
    powm(a, P - 2)
}

#[derive(Clone, Copy, PartialEq, Eq, Default, Debug)]
struct Fp2 {
    re: u64,
    im: u64,
}

impl Fp2 {
    fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    fn sub_mul(self, factor: Fp2, other: Fp2) -> Fp2 {
        // self - factor * other
        let prod_re = subm(mulm(factor.re, other.re), mulm(factor.im, other.im));
        let prod_im = addm(mulm(factor.re, other.im), mulm(factor.im, other.re));
        Fp2 {
            re: subm(self.re, prod_re),
            im: subm(self.im, prod_im),
        }
    }

    fn mul(self, rhs: Fp2) -> Fp2 {
        Fp2 {
            re: subm(mulm(self.re, rhs.re), mulm(self.im, rhs.im)),
            im: addm(mulm(self.re, rhs.im), mulm(self.im, rhs.re)),
        }
    }

    fn inv(self) -> Fp2 {
        let norm = addm(mulm(self.re, self.re), mulm(self.im, self.im));
        let ninv = invm(norm);
        Fp2 {
            re: mulm(self.re, ninv),
            im: mulm(subm(0, self.im), ninv),
        }
    }
}

fn big_residue(x: &BigInt) -> u64 {
    let p = BigInt::from(P);
    let m = ((x % &p) + &p) % &p;
    m.to_u64().expect("residue fits in u64")
}

fn rational_residue(r: &BigRational) -> u64 {
    let den = big_residue(r.denom());
    assert!(den != 0, "denominator divisible by the screening prime");
    mulm(big_residue(r.numer()), invm(den))
}

fn scalar_residue(c: &GaussianRational) -> Fp2 {
    Fp2 {
        re: rational_residue(&c.re),
        im: rational_residue(&c.im),
    }
}

// ---------------------------------------------------------------------
// graded coordinate spaces

/// The coordinate space of weight-homogeneous band matrices of one
/// (weight, parity) grade: coordinates are (row, col, d-power) with the
/// t-exponent determined as weight + d-power.
struct GradeSpace {
    keys: Vec<(usize, usize, u32)>,
    index: BTreeMap<(usize, usize, u32), usize>,
}

impl GradeSpace {
    fn new(size: usize, weight: i64, odd: bool, band: (i64, i64)) -> Self {
        let half = size / 2;
        let mut keys = Vec::new();
        for row in 0..size {
            for col in 0..size {
                if ((row >= half) ^ (col >= half)) != odd {
                    continue;
                }
                for k in 0..=1u32 {
                    let a = weight + k as i64;
                    if a >= band.0 && a <= band.1 {
                        keys.push((row, col, k));
                    }
                }
            }
        }
        let index = keys.iter().enumerate().map(|(i, k)| (*k, i)).collect();
        GradeSpace { keys, index }
    }

    fn dim(&self) -> usize {
        self.keys.len()
    }

    fn residue_coords(&self, m: &SuperMatrix<WeylElement>) -> Option<Vec<Fp2>> {
        let mut v = vec![Fp2::default(); self.keys.len()];
        for row in 0..m.size() {
            for col in 0..m.size() {
                for ((_, k), c) in m.get(row, col).terms() {
                    let idx = self.index.get(&(row, col, *k))?;
                    v[*idx] = scalar_residue(c);
                }
            }
        }
        Some(v)
    }

    fn exact_coords(&self, m: &SuperMatrix<WeylElement>) -> Option<Vec<GaussianRational>> {
        let mut v = vec![GaussianRational::zero(); self.keys.len()];
        for row in 0..m.size() {
            for col in 0..m.size() {
                for ((_, k), c) in m.get(row, col).terms() {
                    let idx = self.index.get(&(row, col, *k))?;
                    v[*idx] = c.clone();
                }
            }
        }
        Some(v)
    }
}

/// Reduces `v` against the echelon; if independent, inserts the
/// normalized remainder and returns true.
fn modp_insert(rows: &mut ModpRows, mut v: Vec<Fp2>) -> bool {
    for (pivot, row) in rows.iter() {
        let f = v[*pivot];
        if !f.is_zero() {
            for (vi, ri) in v.iter_mut().zip(row.iter()) {
                if !ri.is_zero() {
                    *vi = vi.sub_mul(f, *ri);
                }
            }
        }
    }
    match v.iter().position(|c| !c.is_zero()) {
        None => false,
        Some(pivot) => {
            let inv = v[pivot].inv();
            for c in v.iter_mut() {
                if !c.is_zero() {
                    *c = c.mul(inv);
                }
            }
            rows.push((pivot, v));
            rows.sort_by_key(|(p, _)| *p);
            true
        }
    }
}

// ---------------------------------------------------------------------
// band and weight bookkeeping

fn in_band(m: &SuperMatrix<WeylElement>, band: (i64, i64)) -> bool {
    for row in 0..m.size() {
        for col in 0..m.size() {
            let e = m.get(row, col);
            if let Some(k) = e.max_d_power() {
                if k > 1 {
                    return false;
                }
            }
            if let Some((lo, hi)) = e.t_exponent_range() {
                if lo < band.0 || hi > band.1 {
                    return false;
                }
            }
        }
    }
    true
}

/// The single weight a - k of all monomials, or `None` if inhomogeneous
/// or zero.
fn weight_of(m: &SuperMatrix<WeylElement>) -> Option<i64> {
    let mut weight = None;
    for row in 0..m.size() {
        for col in 0..m.size() {
            for ((a, k), _) in m.get(row, col).terms() {
                let w = a - *k as i64;
                match weight {
                    None => weight = Some(w),
                    Some(prev) if prev != w => return None,
                    _ => {}
                }
            }
        }
    }
    weight
}

fn grade_of(m: &SuperMatrix<WeylElement>) -> Option<(i64, bool)> {
    let odd = match m.parity() {
        Parity::Even => false,
        Parity::Odd => true,
        Parity::Mixed => return None,
    };
    Some((weight_of(m)?, odd))
}

// ---------------------------------------------------------------------
// reports

#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct CoverageFlag {
    pub checked: usize,
    pub reached: usize,
    pub complete: bool,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct GenerationReport {
    pub n: u32,
    pub window: i64,
    pub depth: u32,
    pub band: (i64, i64),
    pub seed_description: String,
    pub seed_count: usize,
    pub wave_sizes: Vec<usize>,
    pub reached_dimension: usize,
    /// Echelon pivot counts keyed by (block position, t-exponent, d-power).
    pub span_by_position: Vec<(String, usize)>,
    /// Band coverage of the lower-left elementary targets.
    pub coverage_lower: CoverageFlag,
    /// Band coverage of the off-diagonal targets in both diagonal blocks.
    pub coverage_diagonal: CoverageFlag,
    /// Band coverage of the upper-right targets, with and without d.
    pub coverage_upper: CoverageFlag,
    /// For N <= 3: reached span equals the named-family span, both ways.
    pub family_span_match: Option<bool>,
    /// For N = 4: the intermediate bracket identities of the generation
    /// argument, checked literally.
    pub identities_hold: Option<bool>,
    pub missing: Vec<String>,
    pub passed: bool,
}

// ---------------------------------------------------------------------
// the search

/// Echelon rows as (pivot index, normalized coordinates).
type ModpRows = Vec<(usize, Vec<Fp2>)>;

struct GradedEchelons {
    size: usize,
    band: (i64, i64),
    spaces: BTreeMap<(i64, bool), GradeSpace>,
    modp: BTreeMap<(i64, bool), ModpRows>,
}

impl GradedEchelons {
    fn space(&mut self, grade: (i64, bool)) -> &GradeSpace {
        let (size, band) = (self.size, self.band);
        self.spaces
            .entry(grade)
            .or_insert_with(|| GradeSpace::new(size, grade.0, grade.1, band))
    }

    /// Returns true (new direction) or false (modularly dependent).
    fn insert(&mut self, m: &SuperMatrix<WeylElement>) -> Result<bool, SuperweylError> {
        let grade = grade_of(m).ok_or_else(|| {
            SuperweylError::VerificationFailed(
                "generation encountered a non-homogeneous element".into(),
            )
        })?;
        let v = self
            .space(grade)
            .residue_coords(m)
            .expect("band elements fit their grade space");
        Ok(modp_insert(self.modp.entry(grade).or_default(), v))
    }

    /// True when the graded slice already has full modular rank, so no
    /// bracket landing there can contribute a new direction.
    fn grade_is_full(&mut self, grade: (i64, bool)) -> bool {
        let dim = self.space(grade).dim();
        dim == self.modp.get(&grade).map_or(0, |rows| rows.len())
    }
}

fn seed_matrices(n: u32, window: i64) -> Result<(Vec<SuperMatrix<WeylElement>>, String), SuperweylError> {
    let mut seeds: Vec<SuperMatrix<WeylElement>> =
        spo_basis(n).into_iter().map(|(_, m)| m).collect();
    for x in o_basis(n) {
        for mode in -window..=window {
            seeds.push(loop_so_element(x, mode, n)?);
        }
    }
    let description = format!(
        "orthosymplectic basis ({} elements) plus loop elements t^m rho(o(2N)) for |m| <= {}",
        spo_basis(n).len(),
        window
    );
    Ok((seeds, description))
}

/// Exact graded span of a set of homogeneous matrices, for the final
/// membership checks.
struct ExactSpan {
    size: usize,
    band: (i64, i64),
    spaces: BTreeMap<(i64, bool), GradeSpace>,
    solvers: BTreeMap<(i64, bool), SpanSolver>,
}

impl ExactSpan {
    fn new(size: usize, band: (i64, i64)) -> Self {
        ExactSpan {
            size,
            band,
            spaces: BTreeMap::new(),
            solvers: BTreeMap::new(),
        }
    }

    fn space(&mut self, grade: (i64, bool)) -> &GradeSpace {
        let (size, band) = (self.size, self.band);
        self.spaces
            .entry(grade)
            .or_insert_with(|| GradeSpace::new(size, grade.0, grade.1, band))
    }

    fn insert(&mut self, m: &SuperMatrix<WeylElement>) -> Result<bool, SuperweylError> {
        let grade = grade_of(m).ok_or_else(|| {
            SuperweylError::VerificationFailed("non-homogeneous element in exact span".into())
        })?;
        let coords = self
            .space(grade)
            .exact_coords(m)
            .expect("band elements fit their grade space");
        let dim = coords.len();
        let solver = self
            .solvers
            .entry(grade)
            .or_insert_with(|| SpanSolver::new(dim));
        Ok(solver.push_column(coords))
    }

    fn contains(&mut self, m: &SuperMatrix<WeylElement>) -> bool {
        let grade = match grade_of(m) {
            Some(g) => g,
            None => return false,
        };
        let coords = match self.space(grade).exact_coords(m) {
            Some(c) => c,
            None => return false,
        };
        match self.solvers.get(&grade) {
            Some(s) => s.contains(&coords),
            None => false,
        }
    }

    fn rank(&self) -> usize {
        self.solvers.values().map(|s| s.rank()).sum()
    }

    /// Pivot counts keyed by "block t^a d^k".
    fn pivot_histogram(&self) -> Vec<(String, usize)> {
        let half = self.size / 2;
        let mut hist: BTreeMap<String, usize> = BTreeMap::new();
        for (grade, solver) in &self.solvers {
            let space = &self.spaces[grade];
            for p in solver.pivots() {
                let (row, col, k) = space.keys[p];
                let a = grade.0 + k as i64;
                let block = match (row < half, col < half) {
                    (true, true) => "upper-left",
                    (true, false) => "upper-right",
                    (false, true) => "lower-left",
                    (false, false) => "lower-right",
                };
                *hist
                    .entry(format!("{} t^{} d^{}", block, a, k))
                    .or_default() += 1;
            }
        }
        hist.into_iter().collect()
    }
}

fn elementary_target(
    size: usize,
    row: usize,
    col: usize,
    a: i64,
    k: u32,
) -> SuperMatrix<WeylElement> {
    SuperMatrix::elementary(
        size / 2,
        size / 2,
        row,
        col,
        WeylElement::monomial(a, k, GaussianRational::one()),
    )
}

/// Runs the banded breadth-first generation search for `n` xi/eta pairs.
pub fn generate_closure(n: u32, depth: u32, window: i64) -> Result<GenerationReport, SuperweylError> {
    if n == 0 || window < 1 || depth < 1 {
        return Err(SuperweylError::InvalidConfig(
            "generation needs n >= 1, depth >= 1 and window >= 1".into(),
        ));
    }
    let band = (-window - 2, window + 2);
    let half = 1usize << (n - 1);
    let size = 2 * half;

    let (seeds, seed_description) = seed_matrices(n, window)?;
    let mut echelons = GradedEchelons {
        size,
        band,
        spaces: BTreeMap::new(),
        modp: BTreeMap::new(),
    };
    let mut reps: Vec<SuperMatrix<WeylElement>> = Vec::new();
    let mut wave_sizes = Vec::new();

    // wave 0: the seeds themselves
    let mut accepted = 0usize;
    for s in &seeds {
        if s.is_zero() || !in_band(s, band) {
            continue;
        }
        if echelons.insert(s)? {
            reps.push(s.clone());
            accepted += 1;
        }
    }
    wave_sizes.push(accepted);

    // waves 1..depth: brackets of every earlier representative against
    // the frontier (unordered pairs, in creation order), skipping pairs
    // whose target grade is already saturated
    let mut rep_grades: Vec<(i64, bool)> = reps
        .iter()
        .map(|r| grade_of(r).expect("accepted elements are homogeneous"))
        .collect();
    let mut frontier_range = 0..reps.len();
    for _ in 0..depth {
        let next_start = reps.len();
        for f_idx in frontier_range.clone() {
            for x_idx in 0..=f_idx {
                let target = (
                    rep_grades[x_idx].0 + rep_grades[f_idx].0,
                    rep_grades[x_idx].1 ^ rep_grades[f_idx].1,
                );
                if echelons.grade_is_full(target) {
                    continue;
                }
                let b = reps[x_idx].superbracket(&reps[f_idx])?;
                if b.is_zero() || !in_band(&b, band) {
                    continue;
                }
                if echelons.insert(&b)? {
                    rep_grades.push(grade_of(&b).expect("brackets of homogeneous are homogeneous"));
                    reps.push(b);
                }
            }
        }
        wave_sizes.push(reps.len() - next_start);
        if reps.len() == next_start {
            break;
        }
        frontier_range = next_start..reps.len();
    }

    // exact re-verification: every modularly-new element must be exactly new
    let mut reached = ExactSpan::new(size, band);
    for r in &reps {
        if !reached.insert(r)? {
            return Err(SuperweylError::VerificationFailed(
                "modular screening accepted an exactly dependent element".into(),
            ));
        }
    }

    let mut missing = Vec::new();

    // coverage of the elementary-matrix targets within |mode| <= window
    let mut check_targets =
        |targets: Vec<(String, SuperMatrix<WeylElement>)>, missing: &mut Vec<String>| {
            let checked = targets.len();
            let mut hit = 0usize;
            for (label, t) in targets {
                if reached.contains(&t) {
                    hit += 1;
                } else {
                    missing.push(label);
                }
            }
            CoverageFlag {
                checked,
                reached: hit,
                complete: hit == checked,
            }
        };

    let mut lower_targets = Vec::new();
    let mut diag_targets = Vec::new();
    let mut upper_targets = Vec::new();
    for m in -window..=window {
        for i in 0..half {
            for j in 0..half {
                lower_targets.push((
                    format!("t^{} E[{},{}] (lower-left)", m, half + i, j),
                    elementary_target(size, half + i, j, m, 0),
                ));
                upper_targets.push((
                    format!("t^{} E[{},{}] (upper-right)", m, i, half + j),
                    elementary_target(size, i, half + j, m, 0),
                ));
                upper_targets.push((
                    format!("t^{}d E[{},{}] (upper-right)", m, i, half + j),
                    elementary_target(size, i, half + j, m, 1),
                ));
                if i != j {
                    diag_targets.push((
                        format!("t^{} E[{},{}] (upper-left)", m, i, j),
                        elementary_target(size, i, j, m, 0),
                    ));
                    diag_targets.push((
                        format!("t^{} E[{},{}] (lower-right)", m, half + i, half + j),
                        elementary_target(size, half + i, half + j, m, 0),
                    ));
                }
            }
        }
    }
    let coverage_lower = check_targets(lower_targets, &mut missing);
    let coverage_diagonal = check_targets(diag_targets, &mut missing);
    let coverage_upper = check_targets(upper_targets, &mut missing);

    // for N <= 3, compare against the named-family span in both directions
    let family_span_match = if n <= 3 {
        let algebra = match n {
            1 => Algebra::K2,
            2 => Algebra::K4hat,
            _ => Algebra::CK6,
        };
        let mut family_elements = Vec::new();
        for f in families(algebra) {
            for mode in (band.0 - 2)..=(band.1 + 2) {
                let mut m = matrix_field(algebra, &f.name, mode)?;
                if algebra == Algebra::CK6 {
                    m = ck6::to_canonical_basis(&m);
                }
                if !m.is_zero() && in_band(&m, band) {
                    family_elements.push((format!("{}_{}", f.name, mode), m));
                }
            }
        }
        let mut family_span = ExactSpan::new(size, band);
        for (_, m) in &family_elements {
            family_span.insert(m)?;
        }
        let mut ok = true;
        for (i, r) in reps.iter().enumerate() {
            if !family_span.contains(r) {
                ok = false;
                missing.push(format!("reached element {} is outside the family span", i));
            }
        }
        for (label, m) in &family_elements {
            let mode: i64 = label.rsplit('_').next().unwrap().parse().unwrap();
            if mode.abs() <= window && !reached.contains(m) {
                ok = false;
                missing.push(format!("family element {} is not reached", label));
            }
        }
        Some(ok)
    } else {
        None
    };

    let identities_hold = if n == 4 {
        let mut ok = true;
        for (label, holds) in intermediate_identities(window)? {
            if !holds {
                ok = false;
                missing.push(format!("intermediate identity fails: {}", label));
            }
        }
        Some(ok)
    } else {
        None
    };

    let full_coverage =
        coverage_lower.complete && coverage_diagonal.complete && coverage_upper.complete;
    let passed = match n {
        1..=3 => family_span_match == Some(true) && !full_coverage,
        4 => full_coverage && identities_hold == Some(true),
        _ => full_coverage,
    };

    Ok(GenerationReport {
        n,
        window,
        depth,
        band,
        seed_description,
        seed_count: seeds.len(),
        wave_sizes,
        reached_dimension: reached.rank(),
        span_by_position: reached.pivot_histogram(),
        coverage_lower,
        coverage_diagonal,
        coverage_upper,
        family_span_match,
        identities_hold,
        missing,
        passed,
    })
}

/// The literal intermediate bracket identities of the N = 4 generation
/// argument, as (description, holds) pairs, checked for |n| <= window.
pub fn intermediate_identities(window: i64) -> Result<Vec<(String, bool)>, SuperweylError> {
    use crate::clifford::OBasis;
    let n_pairs = 4u32;
    let size = 16usize;
    let e1 = |i: usize, j: usize, a: i64, k: u32, c: i64| {
        // upper-right elementary (1-based block indices)
        SuperMatrix::elementary(
            size / 2,
            size / 2,
            i - 1,
            8 + j - 1,
            WeylElement::monomial(a, k, GaussianRational::from_int(c)),
        )
    };
    let e0 = |i: usize, j: usize, a: i64, c: i64| {
        SuperMatrix::elementary(
            size / 2,
            size / 2,
            i - 1,
            j - 1,
            WeylElement::monomial(a, 0, GaussianRational::from_int(c)),
        )
    };
    let e0t = |i: usize, j: usize, a: i64, c: i64| {
        SuperMatrix::elementary(
            size / 2,
            size / 2,
            8 + i - 1,
            8 + j - 1,
            WeylElement::monomial(a, 0, GaussianRational::from_int(c)),
        )
    };

    let mut out = Vec::new();
    let mut push = |label: String,
                    lhs: Result<SuperMatrix<WeylElement>, SuperweylError>,
                    rhs: SuperMatrix<WeylElement>|
     -> Result<(), SuperweylError> {
        let holds = lhs?.sub(&rhs).is_zero();
        out.push((label, holds));
        Ok(())
    };

    for m in -window..=window {
        // loop element of eta_1 eta_2 against the raising eta_3 image
        push(
            format!("[t^{} rho(eta_1 eta_2), rho(eta_3)^+] = {} t^{} E1[1,8]", m, m, m + 1),
            loop_so_element(OBasis::EtaEta(1, 2), m, n_pairs)?
                .superbracket(&rho_pm(OddGen::Eta(3), Sign::Plus, n_pairs)),
            e1(1, 8, m + 1, 0, m),
        )?;
        // the chain reaching the diagonal targets
        push(
            format!("[rho(xi_3)^+, t^{} E1[1,8]] = t^{} (E0[1,2] + E~0[3,8])", m, m + 1),
            rho_pm(OddGen::Xi(3), Sign::Plus, n_pairs).superbracket(&e1(1, 8, m, 0, 1)),
            e0(1, 2, m + 1, 1).add(&e0t(3, 8, m + 1, 1)),
        )?;
        push(
            format!("[t^{} (E0[1,2] + E~0[3,8]), E1[2,4]] = t^{} E1[1,4]", m, m),
            e0(1, 2, m, 1).add(&e0t(3, 8, m, 1)).superbracket(&e1(2, 4, 0, 0, 1)),
            e1(1, 4, m, 0, 1),
        )?;
        push(
            format!("[rho(xi_2)^+, t^{} E1[1,4]] = t^{} E~0[2,4]", m, m + 1),
            rho_pm(OddGen::Xi(2), Sign::Plus, n_pairs).superbracket(&e1(1, 4, m, 0, 1)),
            e0t(2, 4, m + 1, 1),
        )?;
        push(
            format!("[rho(eta_1)^+, t^{} E1[2,4]] = t^{} (E0[2,4] + E~0[2,4])", m, m + 1),
            rho_pm(OddGen::Eta(1), Sign::Plus, n_pairs).superbracket(&e1(2, 4, m, 0, 1)),
            e0(2, 4, m + 1, 1).add(&e0t(2, 4, m + 1, 1)),
        )?;
        // the raising xi_2 image carries t^2 d + t/2 on its derivative
        // block, so the bracket produces the d-target plus a harmless
        // -t^{n+1}/2 multiple of an already-reached element
        push(
            format!(
                "[t^{} E0[5,2], rho(xi_2)^+] = -t^{}d E1[5,1] - t^{}/2 E1[5,1]",
                m,
                m + 2,
                m + 1
            ),
            e0(5, 2, m, 1).superbracket(&rho_pm(OddGen::Xi(2), Sign::Plus, n_pairs)),
            e1(5, 1, m + 2, 1, -1).add(&e1(5, 1, m + 1, 0, 1).scale(&WeylElement::monomial(
                0,
                0,
                GaussianRational::from_ratio(-1, 2),
            ))),
        )?;
    }
    Ok(out)
}
