//! The sixteen field families of the central extension of K'(4): 4x4 Weyl
//! matrices acting on the basis (v^0, v^3 | v^1, v^2) and symbols in the
//! deformed algebra P1(4). The mode-0 element of the G^3 family is the
//! central element (the identity matrix, the constant symbol 1).

use crate::clifford::CliffordElement;
use crate::error::SuperweylError;
use crate::scalar::GaussianRational;
use crate::supermatrix::SuperMatrix;
use crate::symbols::{compose_truncated, tau_pow, SymbolElement, SymbolTerm};
use crate::weyl::WeylElement;

/// Row/column order of the matrix realization.
pub const BASIS_LABELS: [&str; 4] = ["v^0", "v^3", "v^1", "v^2"];

fn t_pow(n: i64) -> WeylElement {
    WeylElement::t_pow(n)
}

fn t_deriv(n: i64) -> WeylElement {
    // t^{n+1} d
    WeylElement::monomial(n + 1, 1, GaussianRational::one())
}

pub fn matrix_field(name: &str, n: i64) -> Result<SuperMatrix<WeylElement>, SuperweylError> {
    let mut m = SuperMatrix::zero(2, 2);
    let neg = |w: WeylElement| w.scale(&-GaussianRational::one());
    match name {
        "L" => {
            m.set(0, 0, t_deriv(n));
            m.set(1, 1, WeylElement::tdtn(n));
            m.set(2, 2, t_deriv(n));
            m.set(3, 3, t_deriv(n));
        }
        "Q" => m.set(0, 1, neg(t_pow(n))),
        "X^1" => {
            m.set(0, 2, t_deriv(n));
            m.set(3, 1, t_pow(n));
        }
        "X^2" => {
            m.set(0, 3, t_deriv(n));
            m.set(2, 1, neg(t_pow(n)));
        }
        "Y^1" => {
            m.set(2, 0, t_pow(n));
            m.set(1, 3, WeylElement::tdtn(n));
        }
        "Y^2" => {
            m.set(3, 0, t_pow(n));
            m.set(1, 2, neg(WeylElement::tdtn(n)));
        }
        "R^{11}" => {
            m.set(0, 0, t_pow(n));
            m.set(3, 3, t_pow(n));
        }
        "R^{22}" => {
            m.set(0, 0, t_pow(n));
            m.set(2, 2, t_pow(n));
        }
        "R^{12}" => m.set(3, 2, neg(t_pow(n))),
        "R^{21}" => m.set(2, 3, neg(t_pow(n))),
        "Z^1" => m.set(0, 3, neg(t_pow(n))),
        "Z^2" => m.set(0, 2, t_pow(n)),
        "G^0" => m.set(1, 0, t_pow(n)),
        "G^1" => m.set(1, 2, t_pow(n)),
        "G^2" => m.set(1, 3, t_pow(n)),
        "G^3" => {
            for i in 0..4 {
                m.set(i, i, t_pow(n));
            }
        }
        other => return Err(SuperweylError::UnknownField(other.to_string())),
    }
    Ok(m)
}

/// Symbol monomial `t^a tau^b X` for a Clifford element X, distributing
/// over the canonical words of X.
pub(crate) fn clifford_sym(a: i64, b: i64, x: &CliffordElement) -> SymbolElement {
    let mut out = SymbolElement::zero();
    for (w, c) in x.terms() {
        out.add_term(SymbolTerm { a, b, word: *w }, c.clone());
    }
    out
}

pub(crate) fn cliff_product(letters: &[CliffordElement]) -> CliffordElement {
    letters
        .iter()
        .fold(CliffordElement::one(), |acc, f| acc.mul(f))
}

pub fn symbol_field(name: &str, n: i64, tau_floor: i64) -> Result<SymbolElement, SuperweylError> {
    let xi = CliffordElement::xi;
    let eta = CliffordElement::eta;
    let out = match name {
        "L" => clifford_sym(n + 1, 1, &CliffordElement::one()),
        "Q" => clifford_sym(n + 1, 1, &cliff_product(&[eta(1), eta(2)])),
        "X^1" => clifford_sym(n + 1, 1, &eta(1)),
        "X^2" => clifford_sym(n + 1, 1, &eta(2)),
        "Y^1" => clifford_sym(n, 0, &xi(1)),
        "Y^2" => clifford_sym(n, 0, &xi(2)),
        "R^{11}" => clifford_sym(n, 0, &cliff_product(&[eta(1), xi(1)])),
        "R^{12}" => clifford_sym(n, 0, &cliff_product(&[eta(1), xi(2)])),
        "R^{21}" => clifford_sym(n, 0, &cliff_product(&[eta(2), xi(1)])),
        "R^{22}" => clifford_sym(n, 0, &cliff_product(&[eta(2), xi(2)])),
        "Z^1" => clifford_sym(n, 0, &cliff_product(&[eta(1), eta(2), xi(1)])),
        "Z^2" => clifford_sym(n, 0, &cliff_product(&[eta(1), eta(2), xi(2)])),
        "G^0" => compose_truncated(
            &tau_pow(-1),
            &clifford_sym(n - 1, 0, &cliff_product(&[xi(1), xi(2)])),
            tau_floor,
        ),
        "G^1" => compose_truncated(
            &tau_pow(-1),
            &clifford_sym(n - 1, 0, &cliff_product(&[xi(1), xi(2), eta(1)])),
            tau_floor,
        ),
        "G^2" => compose_truncated(
            &tau_pow(-1),
            &clifford_sym(n - 1, 0, &cliff_product(&[xi(1), xi(2), eta(2)])),
            tau_floor,
        ),
        "G^3" => compose_truncated(
            &tau_pow(-1),
            &clifford_sym(n - 1, 0, &cliff_product(&[xi(1), xi(2), eta(1), eta(2)])),
            tau_floor,
        )
        .scale(&GaussianRational::from_int(n))
        .add(&crate::symbols::t_pow(n)),
        other => return Err(SuperweylError::UnknownField(other.to_string())),
    };
    Ok(out)
}
