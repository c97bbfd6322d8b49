//! The four field families of K(2), as 2x2 Weyl matrices acting on the
//! basis (1 | xi_1) and as exact Poisson symbols, together with the
//! isomorphism sigma between the two pictures.

use crate::clifford::GrassmannWord;
use crate::error::SuperweylError;
use crate::scalar::GaussianRational;
use crate::supermatrix::SuperMatrix;
use crate::symbols::SymbolElement;
use crate::weyl::WeylElement;

pub fn matrix_field(name: &str, n: i64) -> Result<SuperMatrix<WeylElement>, SuperweylError> {
    let mut m = SuperMatrix::zero(1, 1);
    match name {
        "L" => {
            m.set(0, 0, WeylElement::tdtn(n));
            m.set(1, 1, WeylElement::monomial(n + 1, 1, GaussianRational::one()));
        }
        "H" => {
            m.set(0, 0, WeylElement::t_pow(n).scale(&-GaussianRational::one()));
            m.set(1, 1, WeylElement::t_pow(n));
        }
        "G" => {
            let entry = WeylElement::monomial(n + 1, 1, GaussianRational::one())
                + WeylElement::monomial(n, 0, GaussianRational::from_ratio(n, 2));
            m.set(0, 1, entry);
        }
        "G~" => {
            m.set(1, 0, WeylElement::t_pow(n));
        }
        other => return Err(SuperweylError::UnknownField(other.to_string())),
    }
    Ok(m)
}

/// The symbol that sigma maps onto the matrix family element.
pub fn symbol_field(name: &str, n: i64) -> Result<SymbolElement, SuperweylError> {
    let one = GaussianRational::one;
    let xi_eta = GrassmannWord { xi: 1, eta: 1 };
    let out = match name {
        "L" => SymbolElement::monomial(n + 1, 1, GrassmannWord::ONE, one()).add(
            &SymbolElement::monomial(n, 0, xi_eta, GaussianRational::from_int(-n)),
        ),
        "H" => SymbolElement::monomial(n, 0, xi_eta, GaussianRational::from_int(2)),
        "G" => SymbolElement::monomial(n + 1, 1, GrassmannWord { xi: 0, eta: 1 }, one()),
        "G~" => SymbolElement::monomial(n, 0, GrassmannWord { xi: 1, eta: 0 }, one()),
        other => return Err(SuperweylError::UnknownField(other.to_string())),
    };
    Ok(out)
}

/// The isomorphism from the degree-zero symbols onto the matrix picture,
/// extended linearly over the four monomial shapes spanning K(2).
pub fn sigma(sym: &SymbolElement) -> Result<SuperMatrix<WeylElement>, SuperweylError> {
    let mut out = SuperMatrix::zero(1, 1);
    for (term, c) in sym.terms() {
        let scalar = WeylElement::monomial(0, 0, c.clone());
        let image = match (term.b, term.word.xi, term.word.eta) {
            // t^{n+1} tau -> L_n + (n/2) H_n
            (1, 0, 0) => {
                let n = term.a - 1;
                matrix_field("L", n)?.add(&matrix_field("H", n)?.scale(
                    &WeylElement::monomial(0, 0, GaussianRational::from_ratio(n, 2)),
                ))
            }
            // t^n xi_1 eta_1 -> H_n / 2
            (0, 1, 1) => matrix_field("H", term.a)?.scale(&WeylElement::monomial(
                0,
                0,
                GaussianRational::from_ratio(1, 2),
            )),
            // t^n xi_1 -> G~_n
            (0, 1, 0) => matrix_field("G~", term.a)?,
            // t^{n+1} tau eta_1 -> G_n
            (1, 0, 1) => matrix_field("G", term.a - 1)?,
            _ => {
                return Err(SuperweylError::UnknownBasisElement(format!(
                    "not a K(2) symbol monomial: t^{} tau^{} ({:?})",
                    term.a, term.b, term.word
                )))
            }
        };
        out = out.add(&image.scale(&scalar));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbols::poisson_bracket;

    #[test]
    fn l0_is_scaling_on_both_components() {
        let l0 = matrix_field("L", 0).unwrap();
        let td = WeylElement::tdtn(0);
        assert_eq!(*l0.get(0, 0), td);
        assert_eq!(*l0.get(1, 1), td);
        assert!(l0.get(0, 1).is_zero() && l0.get(1, 0).is_zero());
    }

    #[test]
    fn g_tilde_is_lower_left_t_power() {
        for n in -3..4 {
            let m = matrix_field("G~", n).unwrap();
            assert_eq!(*m.get(1, 0), WeylElement::t_pow(n));
            assert!(m.get(0, 0).is_zero() && m.get(0, 1).is_zero() && m.get(1, 1).is_zero());
        }
    }

    #[test]
    fn sigma_sends_fields_to_matrices() {
        for name in ["L", "H", "G", "G~"] {
            for n in -2..3 {
                let sym = symbol_field(name, n).unwrap();
                let expected = matrix_field(name, n).unwrap();
                assert!(sigma(&sym).unwrap().sub(&expected).is_zero(), "{} {}", name, n);
            }
        }
    }

    #[test]
    fn sigma_is_a_homomorphism_on_witt_and_odd_pairs() {
        // superbracket(sigma(A), sigma(B)) = sigma({A, B}) for field pairs
        for a_name in ["L", "H", "G", "G~"] {
            for b_name in ["L", "H", "G", "G~"] {
                for n in -2..3 {
                    for m in -2..3 {
                        let a = symbol_field(a_name, n).unwrap();
                        let b = symbol_field(b_name, m).unwrap();
                        let lhs = sigma(&a)
                            .unwrap()
                            .superbracket(&sigma(&b).unwrap())
                            .unwrap();
                        let rhs = sigma(&poisson_bracket(&a, &b, 1)).unwrap();
                        assert!(
                            lhs.sub(&rhs).is_zero(),
                            "sigma fails on [{}_{}, {}_{}]",
                            a_name,
                            n,
                            b_name,
                            m
                        );
                    }
                }
            }
        }
    }
}
