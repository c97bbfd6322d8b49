//! The thirty-two field families of CK6: 8x8 Weyl matrices acting on the
//! display basis (v~^1, v~^2, v~^3, v^4 | v^1, v^2, v^3, v~^4), where
//! v~^i = xi_j xi_k for the cycle (i, j, k), v^4 = 1, v^i = xi_i and
//! v~^4 = -xi_1 xi_2 xi_3, plus the symbol picture in P1(6).

use crate::clifford::CliffordElement;
use crate::error::SuperweylError;
use crate::realizations::k4hat::{cliff_product, clifford_sym};
use crate::scalar::GaussianRational;
use crate::supermatrix::SuperMatrix;
use crate::symbols::{compose_truncated, tau_pow, SymbolElement};
use crate::weyl::WeylElement;

/// Row/column order of the matrix realization.
pub const BASIS_LABELS: [&str; 8] = [
    "v~^1", "v~^2", "v~^3", "v^4", "v^1", "v^2", "v^3", "v~^4",
];

/// The cyclic successor within (1, 2, 3).
fn next(i: usize) -> usize {
    i % 3 + 1
}

/// Row index of v^i (i = 1..3) resp. v~^i.
fn vi(i: usize) -> usize {
    3 + i
}
fn vhat(i: usize) -> usize {
    i - 1
}
const V4: usize = 3;
const VHAT4: usize = 7;

fn t_pow(n: i64) -> WeylElement {
    WeylElement::t_pow(n)
}

fn t_deriv(n: i64) -> WeylElement {
    WeylElement::monomial(n + 1, 1, GaussianRational::one())
}

fn neg(w: WeylElement) -> WeylElement {
    w.scale(&-GaussianRational::one())
}

fn parse_pair(name: &str, prefix: &str) -> Option<(usize, usize)> {
    let rest = name.strip_prefix(prefix)?;
    let inner = rest.strip_prefix("^{")?.strip_suffix('}')?;
    let bytes = inner.as_bytes();
    if bytes.len() != 2 {
        return None;
    }
    let i = (bytes[0] as char).to_digit(10)? as usize;
    let j = (bytes[1] as char).to_digit(10)? as usize;
    if (1..=3).contains(&i) && (1..=3).contains(&j) {
        Some((i, j))
    } else {
        None
    }
}

fn parse_index(name: &str, prefix: &str) -> Option<usize> {
    let rest = name.strip_prefix(prefix)?;
    let rest = rest.strip_prefix('^')?;
    let i = rest.parse::<usize>().ok()?;
    if (1..=3).contains(&i) {
        Some(i)
    } else {
        None
    }
}

pub fn matrix_field(name: &str, n: i64) -> Result<SuperMatrix<WeylElement>, SuperweylError> {
    let mut m = SuperMatrix::zero(4, 4);
    match name {
        "L" => {
            for idx in [V4, 4, 5, 6] {
                m.set(idx, idx, t_deriv(n));
            }
            for idx in [0, 1, 2, VHAT4] {
                m.set(idx, idx, WeylElement::tdtn(n));
            }
        }
        "I" => m.set(V4, VHAT4, t_pow(n)),
        _ if parse_index(name, "G~").is_some() => {
            let i = parse_index(name, "G~").unwrap();
            let (j, k) = (next(i), next(next(i)));
            m.set(vi(i), V4, t_pow(n));
            m.set(VHAT4, vhat(i), neg(t_pow(n)));
            m.set(vhat(j), vi(k), neg(WeylElement::tdtn(n)));
            m.set(vhat(k), vi(j), t_deriv(n));
        }
        _ if parse_index(name, "G").is_some() => {
            let i = parse_index(name, "G").unwrap();
            let (j, k) = (next(i), next(next(i)));
            m.set(V4, vi(i), t_deriv(n));
            m.set(vhat(i), VHAT4, neg(WeylElement::tdtn(n)));
            m.set(vi(j), vhat(k), t_pow(n));
            m.set(vi(k), vhat(j), neg(t_pow(n)));
        }
        _ if parse_pair(name, "T").is_some() => {
            let (i, j) = parse_pair(name, "T").unwrap();
            if i == j {
                return Err(SuperweylError::InvalidIndex(format!(
                    "equal indices in {}",
                    name
                )));
            }
            m.set(vi(j), vi(i), neg(t_pow(n)));
            m.set(vhat(i), vhat(j), t_pow(n));
        }
        _ if parse_index(name, "T").is_some() => {
            let i = parse_index(name, "T").unwrap();
            m.set(vi(i), vi(i), neg(t_pow(n)));
            m.set(V4, V4, neg(t_pow(n)));
            m.set(vhat(i), vhat(i), t_pow(n));
            m.set(VHAT4, VHAT4, t_pow(n));
        }
        _ if parse_index(name, "S~").is_some() => {
            let i = parse_index(name, "S~").unwrap();
            let (j, k) = (next(i), next(next(i)));
            m.set(vhat(j), vi(k), neg(t_pow(n)));
            m.set(vhat(k), vi(j), neg(t_pow(n)));
        }
        _ if parse_index(name, "S").is_some() => {
            let i = parse_index(name, "S").unwrap();
            m.set(V4, vi(i), neg(t_pow(n)));
            m.set(vhat(i), VHAT4, neg(t_pow(n)));
        }
        _ if parse_index(name, "I").is_some() => {
            let i = parse_index(name, "I").unwrap();
            m.set(vhat(i), vi(i), t_pow(n));
        }
        _ if parse_pair(name, "J~").is_some() => {
            let (i, j) = parse_pair(name, "J~").unwrap();
            let (_, j, flip) = orient(i, j, name)?;
            let k = next(j);
            let sign = if flip { neg(t_pow(n)) } else { t_pow(n) };
            let nsign = if flip { t_pow(n) } else { neg(t_pow(n)) };
            m.set(vhat(k), V4, sign);
            m.set(VHAT4, vi(k), nsign);
        }
        _ if parse_pair(name, "J").is_some() => {
            let (i, j) = parse_pair(name, "J").unwrap();
            let (_, j, flip) = orient(i, j, name)?;
            let k = next(j);
            let sign = if flip { t_pow(n) } else { neg(t_pow(n)) };
            let nsign = if flip { neg(t_pow(n)) } else { t_pow(n) };
            m.set(V4, vhat(k), sign);
            m.set(vi(k), VHAT4, nsign);
        }
        other => return Err(SuperweylError::UnknownField(other.to_string())),
    }
    Ok(m)
}

/// Reorders an index pair onto a cyclically adjacent pair (i, next(i)),
/// reporting whether the orientation was reversed.
fn orient(i: usize, j: usize, name: &str) -> Result<(usize, usize, bool), SuperweylError> {
    if i == j {
        return Err(SuperweylError::InvalidIndex(format!(
            "equal indices in {}",
            name
        )));
    }
    if next(i) == j {
        Ok((i, j, false))
    } else {
        Ok((j, i, true))
    }
}

pub fn symbol_field(name: &str, n: i64, tau_floor: i64) -> Result<SymbolElement, SuperweylError> {
    let xi = CliffordElement::xi;
    let eta = CliffordElement::eta;
    let nn = GaussianRational::from_int(n);
    let tau_inv = |a: i64, x: CliffordElement| {
        compose_truncated(&tau_pow(-1), &clifford_sym(a, 0, &x), tau_floor)
    };
    let out = match name {
        "L" => clifford_sym(n + 1, 1, &CliffordElement::one()),
        "I" => clifford_sym(n + 1, 1, &cliff_product(&[eta(1), eta(2), eta(3)])),
        _ if parse_index(name, "G~").is_some() => {
            let i = parse_index(name, "G~").unwrap() as u32;
            let j = next(i as usize) as u32;
            clifford_sym(n, 0, &xi(i)).sub(
                &tau_inv(n - 1, cliff_product(&[xi(i), xi(j), eta(j)])).scale(&nn),
            )
        }
        _ if parse_index(name, "G").is_some() => {
            let i = parse_index(name, "G").unwrap() as u32;
            clifford_sym(n + 1, 1, &eta(i))
        }
        _ if parse_pair(name, "T").is_some() => {
            let (i, j) = parse_pair(name, "T").unwrap();
            if i == j {
                return Err(SuperweylError::InvalidIndex(format!(
                    "equal indices in {}",
                    name
                )));
            }
            let k = (1..=3).find(|x| *x != i && *x != j).unwrap() as u32;
            let (i, j) = (i as u32, j as u32);
            clifford_sym(n, 0, &cliff_product(&[eta(i), xi(j)])).sub(
                &tau_inv(n - 1, cliff_product(&[xi(k), xi(j), eta(k), eta(i)])).scale(&nn),
            )
        }
        _ if parse_index(name, "T").is_some() => {
            let i = parse_index(name, "T").unwrap();
            let (j, k) = (next(i) as u32, next(next(i)) as u32);
            let pairs = cliff_product(&[eta(j), xi(j)]).add(&cliff_product(&[eta(k), xi(k)]));
            clifford_sym(n, 0, &pairs)
                .neg()
                .add(&tau_inv(n - 1, cliff_product(&[xi(j), xi(k), eta(j), eta(k)])).scale(&nn))
                .add(&crate::symbols::t_pow(n))
        }
        _ if parse_index(name, "S~").is_some() => {
            let i = parse_index(name, "S~").unwrap();
            let (j, k) = (next(i) as u32, next(next(i)) as u32);
            let i = i as u32;
            let word = cliff_product(&[xi(j), xi(i), eta(j)])
                .sub(&cliff_product(&[xi(k), xi(i), eta(k)]));
            tau_inv(n - 1, word)
        }
        _ if parse_index(name, "S").is_some() => {
            let i = parse_index(name, "S").unwrap();
            let (j, k) = (next(i) as u32, next(next(i)) as u32);
            let i = i as u32;
            let pairs = cliff_product(&[eta(j), xi(j)]).add(&cliff_product(&[eta(k), xi(k)]));
            clifford_sym(n, 0, &eta(i).mul(&pairs))
                .neg()
                .add(
                    &tau_inv(
                        n - 1,
                        cliff_product(&[xi(j), xi(k), eta(i), eta(j), eta(k)]),
                    )
                    .scale(&nn),
                )
                .add(&clifford_sym(n, 0, &eta(i)))
        }
        _ if parse_index(name, "I").is_some() => {
            let i = parse_index(name, "I").unwrap();
            let (j, k) = (next(i) as u32, next(next(i)) as u32);
            tau_inv(n - 1, cliff_product(&[xi(j), xi(k), eta(i as u32)]))
        }
        _ if parse_pair(name, "J~").is_some() => {
            let (i, j) = parse_pair(name, "J~").unwrap();
            let (i, j, flip) = orient_sym(i, j, name)?;
            let base = tau_inv(n - 1, cliff_product(&[xi(i as u32), xi(j as u32)]));
            if flip {
                base.neg()
            } else {
                base
            }
        }
        _ if parse_pair(name, "J").is_some() => {
            let (i, j) = parse_pair(name, "J").unwrap();
            let (i, j, flip) = orient_sym(i, j, name)?;
            let base = clifford_sym(n + 1, 1, &cliff_product(&[eta(i as u32), eta(j as u32)]));
            if flip {
                base.neg()
            } else {
                base
            }
        }
        other => return Err(SuperweylError::UnknownField(other.to_string())),
    };
    Ok(out)
}

/// Index pairs stay as written when i < j; the antisymmetric extension
/// J^{ij} = -J^{ji} covers the rest.
fn orient_sym(i: usize, j: usize, name: &str) -> Result<(usize, usize, bool), SuperweylError> {
    if i == j {
        return Err(SuperweylError::InvalidIndex(format!(
            "equal indices in {}",
            name
        )));
    }
    if i < j {
        Ok((i, j, false))
    } else {
        Ok((j, i, true))
    }
}

/// Change of basis: the canonical exterior-monomial basis of rho_matrix
/// differs from the display basis by a signed permutation (v~^2 = -xi_1
/// xi_3 and v~^4 = -xi_1 xi_2 xi_3 relative to the canonical monomials).
fn basis_change() -> (SuperMatrix<WeylElement>, SuperMatrix<WeylElement>) {
    // canonical order: 1, xi2 xi3, xi1 xi3, xi1 xi2 | xi1, xi2, xi3, xi123
    // display order:  v~1=xi2 xi3, v~2=-xi1 xi3, v~3=xi1 xi2, v4=1 |
    //                 v1..v3 = xi1..xi3, v~4=-xi123
    let cols: [(usize, i64); 8] = [
        (1, 1),
        (2, -1),
        (3, 1),
        (0, 1),
        (4, 1),
        (5, 1),
        (6, 1),
        (7, -1),
    ];
    let mut p = SuperMatrix::zero(4, 4);
    let mut p_inv = SuperMatrix::zero(4, 4);
    for (col, (row, s)) in cols.iter().enumerate() {
        let w = WeylElement::monomial(0, 0, GaussianRational::from_int(*s));
        p.set(*row, col, w.clone());
        p_inv.set(col, *row, w);
    }
    (p, p_inv)
}

/// Conjugates a matrix from the canonical basis into the display basis.
pub fn to_display_basis(m: &SuperMatrix<WeylElement>) -> SuperMatrix<WeylElement> {
    let (p, p_inv) = basis_change();
    p_inv.mat_mul(m).unwrap().mat_mul(&p).unwrap()
}

/// Conjugates a matrix from the display basis into the canonical basis.
pub fn to_canonical_basis(m: &SuperMatrix<WeylElement>) -> SuperMatrix<WeylElement> {
    let (p, p_inv) = basis_change();
    p.mat_mul(m).unwrap().mat_mul(&p_inv).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{rho_pm, OddGen, Sign};
    use crate::realizations::{matrix_field as rfield, Algebra};

    #[test]
    fn t1_action_shape() {
        for n in -2..3 {
            let m = matrix_field("T^1", n).unwrap();
            assert_eq!(*m.get(4, 4), neg(t_pow(n)));
            assert_eq!(*m.get(3, 3), neg(t_pow(n)));
            assert_eq!(*m.get(0, 0), t_pow(n));
            assert_eq!(*m.get(7, 7), t_pow(n));
            let nonzero: usize = (0..64)
                .filter(|idx| !m.get(idx / 8, idx % 8).is_zero())
                .count();
            assert_eq!(nonzero, 4);
        }
    }

    #[test]
    fn l_acts_diagonally() {
        let l = matrix_field("L", 1).unwrap();
        for idx in [3, 4, 5, 6] {
            assert_eq!(*l.get(idx, idx), t_deriv(1));
        }
        for idx in [0, 1, 2, 7] {
            assert_eq!(*l.get(idx, idx), WeylElement::tdtn(1));
        }
    }

    #[test]
    fn i_field_single_entry() {
        for n in -2..3 {
            let m = matrix_field("I", n).unwrap();
            assert_eq!(*m.get(3, 7), t_pow(n));
            let nonzero: usize = (0..64)
                .filter(|idx| !m.get(idx / 8, idx % 8).is_zero())
                .count();
            assert_eq!(nonzero, 1);
        }
    }

    #[test]
    fn j_antisymmetry() {
        for n in -2..3 {
            for (i, j) in [(1usize, 2usize), (1, 3), (2, 3)] {
                // build both orientations through the parser
                let a = matrix_field(&format!("J^{{{}{}}}", i, j), n).unwrap();
                let b = matrix_field(&format!("J^{{{}{}}}", j, i), n).unwrap();
                assert!(a.add(&b).is_zero());
                let a = matrix_field(&format!("J~^{{{}{}}}", i, j), n).unwrap();
                let b = matrix_field(&format!("J~^{{{}{}}}", j, i), n).unwrap();
                assert!(a.add(&b).is_zero());
            }
        }
    }

    #[test]
    fn basis_change_is_an_involution_up_to_inverse() {
        let id = SuperMatrix::identity(4, 4).promote();
        assert!(to_display_basis(&to_canonical_basis(&id))
            .sub(&id)
            .is_zero());
        let g = matrix_field("G~^2", 1).unwrap();
        assert!(to_canonical_basis(&to_display_basis(&to_canonical_basis(&g)))
            .sub(&to_canonical_basis(&g))
            .is_zero());
    }

    #[test]
    fn loop_brackets_with_odd_sp_generators_reach_the_i_fields() {
        // [J~^{ij}_n, rho(eta_k)^+] = -n I^k_{n+1} and
        // [J^{ij}_n, rho(eta_k)^+] = -n I_{n+1} for all three cycles
        for n in -3i64..4 {
            for (i, j, k) in [(1, 2, 3), (2, 3, 1), (3, 1, 2)] {
                let rho_eta = to_display_basis(&rho_pm(OddGen::Eta(k as u32), Sign::Plus, 3));
                let jt = rfield(Algebra::CK6, &format!("J~^{{{}{}}}", i, j), n).unwrap();
                let lhs = jt.superbracket(&rho_eta).unwrap();
                let rhs = rfield(Algebra::CK6, &format!("I^{}", k), n + 1)
                    .unwrap()
                    .scale(&WeylElement::monomial(0, 0, GaussianRational::from_int(-n)));
                assert!(lhs.sub(&rhs).is_zero(), "J~ identity fails at n={} cycle ({},{},{})", n, i, j, k);

                let jf = rfield(Algebra::CK6, &format!("J^{{{}{}}}", i, j), n).unwrap();
                let lhs = jf.superbracket(&rho_eta).unwrap();
                let rhs = rfield(Algebra::CK6, "I", n + 1)
                    .unwrap()
                    .scale(&WeylElement::monomial(0, 0, GaussianRational::from_int(-n)));
                assert!(lhs.sub(&rhs).is_zero(), "J identity fails at n={} cycle ({},{},{})", n, i, j, k);
            }
        }
    }
}
