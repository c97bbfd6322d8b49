//! Named field families of the three algebras K(2), K'(4)-hat and CK6,
//! in two pictures: matrices over the Weyl algebra and pseudodifferential
//! symbols. Also the module actions on the Laurent-coefficient spaces.

pub mod ck6;
pub mod k2;
pub mod k4hat;
pub mod modules;

use crate::clifford::{OddGen, Sign};
use crate::error::SuperweylError;
use crate::scalar::GaussianRational;
use crate::supermatrix::{Parity, SuperMatrix};
use crate::symbols::SymbolElement;
use crate::weyl::WeylElement;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Algebra {
    K2,
    K4hat,
    CK6,
}

impl Algebra {
    pub fn label(&self) -> &'static str {
        match self {
            Algebra::K2 => "K2",
            Algebra::K4hat => "K4hat",
            Algebra::CK6 => "CK6",
        }
    }

    pub fn parse(s: &str) -> Result<Self, SuperweylError> {
        match s {
            "K2" | "k2" => Ok(Algebra::K2),
            "K4hat" | "k4hat" => Ok(Algebra::K4hat),
            "CK6" | "ck6" => Ok(Algebra::CK6),
            other => Err(SuperweylError::InvalidConfig(format!(
                "unknown algebra: {}",
                other
            ))),
        }
    }

    /// Number of xi/eta pairs in the underlying Clifford algebra.
    pub fn clifford_pairs(&self) -> u32 {
        match self {
            Algebra::K2 => 1,
            Algebra::K4hat => 2,
            Algebra::CK6 => 3,
        }
    }

    /// Shape (m | m) of the matrix realization.
    pub fn block_size(&self) -> usize {
        1 << self.clifford_pairs().saturating_sub(1)
    }
}

/// A named field family with its Grassmann parity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FamilyInfo {
    pub name: String,
    pub odd: bool,
}

/// The registry of field families, in a fixed deterministic order.
pub fn families(algebra: Algebra) -> Vec<FamilyInfo> {
    let fam = |name: &str, odd: bool| FamilyInfo {
        name: name.to_string(),
        odd,
    };
    match algebra {
        Algebra::K2 => vec![
            fam("L", false),
            fam("H", false),
            fam("G", true),
            fam("G~", true),
        ],
        Algebra::K4hat => vec![
            fam("L", false),
            fam("Q", false),
            fam("X^1", true),
            fam("X^2", true),
            fam("Y^1", true),
            fam("Y^2", true),
            fam("R^{11}", false),
            fam("R^{12}", false),
            fam("R^{21}", false),
            fam("R^{22}", false),
            fam("Z^1", true),
            fam("Z^2", true),
            fam("G^0", false),
            fam("G^1", true),
            fam("G^2", true),
            fam("G^3", false),
        ],
        Algebra::CK6 => {
            let mut out = vec![fam("L", false)];
            for i in 1..=3 {
                out.push(fam(&format!("G^{}", i), true));
            }
            for i in 1..=3 {
                out.push(fam(&format!("G~^{}", i), true));
            }
            for i in 1..=3u32 {
                for j in 1..=3u32 {
                    if i != j {
                        out.push(fam(&format!("T^{{{}{}}}", i, j), false));
                    }
                }
            }
            for i in 1..=3 {
                out.push(fam(&format!("T^{}", i), false));
            }
            for i in 1..=3 {
                out.push(fam(&format!("S^{}", i), true));
            }
            for i in 1..=3 {
                out.push(fam(&format!("S~^{}", i), true));
            }
            out.push(fam("I", true));
            for i in 1..=3 {
                out.push(fam(&format!("I^{}", i), true));
            }
            for (i, j) in [(1, 2), (1, 3), (2, 3)] {
                out.push(fam(&format!("J^{{{}{}}}", i, j), false));
            }
            for (i, j) in [(1, 2), (1, 3), (2, 3)] {
                out.push(fam(&format!("J~^{{{}{}}}", i, j), false));
            }
            out
        }
    }
}

/// Matrix-picture constructor for a family element at mode `n`.
pub fn matrix_field(
    algebra: Algebra,
    name: &str,
    n: i64,
) -> Result<SuperMatrix<WeylElement>, SuperweylError> {
    match algebra {
        Algebra::K2 => k2::matrix_field(name, n),
        Algebra::K4hat => k4hat::matrix_field(name, n),
        Algebra::CK6 => ck6::matrix_field(name, n),
    }
}

/// Symbol-picture constructor; `tau_floor` bounds the truncation of the
/// deformed compositions (ignored by the exact K(2) symbols).
pub fn symbol_field(
    algebra: Algebra,
    name: &str,
    n: i64,
    tau_floor: i64,
) -> Result<SymbolElement, SuperweylError> {
    match algebra {
        Algebra::K2 => k2::symbol_field(name, n),
        Algebra::K4hat => k4hat::symbol_field(name, n, tau_floor),
        Algebra::CK6 => ck6::symbol_field(name, n, tau_floor),
    }
}

/// Expected parity of a family, as declared in the registry.
pub fn family_parity(algebra: Algebra, name: &str) -> Result<Parity, SuperweylError> {
    families(algebra)
        .into_iter()
        .find(|f| f.name == name)
        .map(|f| if f.odd { Parity::Odd } else { Parity::Even })
        .ok_or_else(|| SuperweylError::UnknownField(name.to_string()))
}

/// The odd sp(2|2N) generators written as field combinations: returns
/// (generator label, rho-side matrix in the algebra's display basis,
/// field-combination matrix). Both sides must agree entry by entry.
/// A generator label with its rho-side matrix and its field-combination
/// matrix, which must agree entry by entry.
pub type GeneratorComparison = (String, SuperMatrix<WeylElement>, SuperMatrix<WeylElement>);

pub fn spo_in_fields(
    algebra: Algebra,
) -> Result<Vec<GeneratorComparison>, SuperweylError> {
    let n = algebra.clifford_pairs();
    let half = |m: &SuperMatrix<WeylElement>| {
        m.scale(&WeylElement::monomial(
            0,
            0,
            GaussianRational::from_ratio(1, 2),
        ))
    };
    let mut out = Vec::new();
    match algebra {
        Algebra::K2 => {
            return Err(SuperweylError::InvalidConfig(
                "the odd sp generators are expressed in fields only for K4hat and CK6".into(),
            ))
        }
        Algebra::K4hat => {
            // rho(xi_1)^pm = Y^1_{pm1} -+ G^2_{pm1}/2
            // rho(xi_2)^pm = Y^2_{pm1} +- G^1_{pm1}/2
            // rho(eta_1)^pm = X^1_{pm1} +- Z^2_{pm1}/2
            // rho(eta_2)^pm = X^2_{pm1} -+ Z^1_{pm1}/2
            let combos: [(OddGen, &str, &str, i64); 4] = [
                (OddGen::Xi(1), "Y^1", "G^2", -1),
                (OddGen::Xi(2), "Y^2", "G^1", 1),
                (OddGen::Eta(1), "X^1", "Z^2", 1),
                (OddGen::Eta(2), "X^2", "Z^1", -1),
            ];
            for (gen, main, corr, corr_sign) in combos {
                for sign in [Sign::Plus, Sign::Minus] {
                    let e = sign.exponent();
                    let rho = crate::clifford::rho_pm(gen, sign, n);
                    let correction = half(&matrix_field(algebra, corr, e)?)
                        .scale(&WeylElement::monomial(
                            0,
                            0,
                            GaussianRational::from_int(corr_sign * e),
                        ));
                    let fields = matrix_field(algebra, main, e)?.add(&correction);
                    out.push((
                        format!("rho({})^{}", gen.label(), if e > 0 { "+" } else { "-" }),
                        rho,
                        fields,
                    ));
                }
            }
        }
        Algebra::CK6 => {
            // rho(xi_i)^pm = G~^i_{pm1} -+ S~^i_{pm1}/2
            // rho(eta_i)^pm = G^i_{pm1} -+ S^i_{pm1}/2
            for i in 1..=3u32 {
                for (gen, main, corr) in [
                    (OddGen::Xi(i), format!("G~^{}", i), format!("S~^{}", i)),
                    (OddGen::Eta(i), format!("G^{}", i), format!("S^{}", i)),
                ] {
                    for sign in [Sign::Plus, Sign::Minus] {
                        let e = sign.exponent();
                        let rho = ck6::to_display_basis(&crate::clifford::rho_pm(gen, sign, n));
                        let correction = half(&matrix_field(algebra, &corr, e)?).scale(
                            &WeylElement::monomial(0, 0, GaussianRational::from_int(-e)),
                        );
                        let fields = matrix_field(algebra, &main, e)?.add(&correction);
                        out.push((
                            format!("rho({})^{}", gen.label(), if e > 0 { "+" } else { "-" }),
                            rho,
                            fields,
                        ));
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::WeylElement;

    #[test]
    fn family_counts() {
        assert_eq!(families(Algebra::K2).len(), 4);
        assert_eq!(families(Algebra::K4hat).len(), 16);
        assert_eq!(families(Algebra::CK6).len(), 32);
    }

    #[test]
    fn all_families_block_homogeneous() {
        for algebra in [Algebra::K2, Algebra::K4hat, Algebra::CK6] {
            for f in families(algebra) {
                for n in -2..3 {
                    let m = matrix_field(algebra, &f.name, n).unwrap();
                    let p = m.parity();
                    let expected = family_parity(algebra, &f.name).unwrap();
                    assert!(
                        p == expected || m.is_zero(),
                        "{} {} at mode {}: parity {:?}, declared {:?}",
                        algebra.label(),
                        f.name,
                        n,
                        p,
                        expected
                    );
                }
            }
        }
    }

    #[test]
    fn symbol_parity_matches_declared() {
        for algebra in [Algebra::K2, Algebra::K4hat, Algebra::CK6] {
            for f in families(algebra) {
                for n in [-2i64, 1, 3] {
                    let s = symbol_field(algebra, &f.name, n, -8).unwrap();
                    if let Some(odd) = s.parity() {
                        assert_eq!(
                            odd, f.odd,
                            "{} {} at mode {}",
                            algebra.label(),
                            f.name,
                            n
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn unknown_family_is_an_error() {
        assert!(matrix_field(Algebra::K2, "Q", 0).is_err());
        assert!(matrix_field(Algebra::CK6, "T^{11}", 0).is_err());
        assert!(symbol_field(Algebra::K4hat, "J^{12}", 0, -8).is_err());
    }

    #[test]
    fn odd_sp_generators_match_their_field_combinations() {
        for algebra in [Algebra::K4hat, Algebra::CK6] {
            for (label, rho_side, field_side) in spo_in_fields(algebra).unwrap() {
                assert!(
                    rho_side.sub(&field_side).is_zero(),
                    "{}: {} differs between pictures",
                    algebra.label(),
                    label
                );
            }
        }
    }

    #[test]
    fn virasoro_matrix_relation() {
        // [L_n, L_m] = (m - n) L_{n+m} in every algebra
        for algebra in [Algebra::K2, Algebra::K4hat, Algebra::CK6] {
            for n in -2i64..3 {
                for m in -2i64..3 {
                    let ln = matrix_field(algebra, "L", n).unwrap();
                    let lm = matrix_field(algebra, "L", m).unwrap();
                    let bracket = ln.superbracket(&lm).unwrap();
                    let expected = matrix_field(algebra, "L", n + m)
                        .unwrap()
                        .scale(&WeylElement::monomial(
                            0,
                            0,
                            GaussianRational::from_int(m - n),
                        ));
                    assert!(bracket.sub(&expected).is_zero(), "{:?} {} {}", algebra, n, m);
                }
            }
        }
    }
}
