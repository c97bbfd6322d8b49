//! The modules V^mu = t^mu C[t, t^-1] (x) Lambda(xi) for K'(4)-hat and
//! CK6. Vectors are finite sums of basis elements (label, mode); each
//! field acts through its matrix entries, with the Weyl generator d
//! evaluated on t^{m+mu}. For mu = 0 this is the Laurent-basis action;
//! the central element of K'(4)-hat acts by the identity.

use std::collections::BTreeMap;

use crate::error::SuperweylError;
use crate::realizations::{ck6, k4hat, matrix_field, Algebra};
use crate::scalar::GaussianRational;

/// Basis labels in matrix row order.
pub fn basis_labels(algebra: Algebra) -> Result<Vec<&'static str>, SuperweylError> {
    match algebra {
        Algebra::K4hat => Ok(k4hat::BASIS_LABELS.to_vec()),
        Algebra::CK6 => Ok(ck6::BASIS_LABELS.to_vec()),
        Algebra::K2 => Err(SuperweylError::InvalidConfig(
            "module actions are implemented for K4hat and CK6".into(),
        )),
    }
}

/// A vector of V^mu: finite combination of basis elements (index, mode m),
/// where index refers to [`basis_labels`] order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleVector {
    pub mu: GaussianRational,
    terms: BTreeMap<(usize, i64), GaussianRational>,
}

impl ModuleVector {
    pub fn zero(mu: GaussianRational) -> Self {
        ModuleVector {
            mu,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(mu: GaussianRational, index: usize, mode: i64) -> Self {
        let mut v = ModuleVector::zero(mu);
        v.add_term(index, mode, GaussianRational::one());
        v
    }

    pub fn add_term(&mut self, index: usize, mode: i64, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        let e = self
            .terms
            .entry((index, mode))
            .or_insert_with(GaussianRational::zero);
        *e = &*e + &c;
        if e.is_zero() {
            self.terms.remove(&(index, mode));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, i64), &GaussianRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.mu, rhs.mu, "mixed module parameters");
        let mut out = self.clone();
        for ((i, m), c) in &rhs.terms {
            out.add_term(*i, *m, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&-GaussianRational::one()))
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return ModuleVector::zero(self.mu.clone());
        }
        ModuleVector {
            mu: self.mu.clone(),
            terms: self.terms.iter().map(|(k, v)| (*k, c * v)).collect(),
        }
    }
}

/// Applies the family element at mode `n` to a module vector: every matrix
/// entry t^a d^k contributes falling(m + mu, k) at mode m + a - k.
pub fn module_action(
    algebra: Algebra,
    name: &str,
    n: i64,
    vec: &ModuleVector,
) -> Result<ModuleVector, SuperweylError> {
    basis_labels(algebra)?;
    let mat = matrix_field(algebra, name, n)?;
    let size = mat.size();
    let mut out = ModuleVector::zero(vec.mu.clone());
    for ((col, mode), c) in vec.terms() {
        if *col >= size {
            return Err(SuperweylError::InvalidIndex(format!(
                "basis index {} out of range",
                col
            )));
        }
        let exponent = &vec.mu + &GaussianRational::from_int(*mode);
        for row in 0..size {
            let entry = mat.get(row, *col);
            for ((a, k), q) in entry.terms() {
                let mut coeff = c * q;
                for s in 0..*k as i64 {
                    coeff = &coeff * &(&exponent - &GaussianRational::from_int(s));
                }
                out.add_term(row, mode + a - *k as i64, coeff);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half() -> GaussianRational {
        GaussianRational::from_ratio(1, 2)
    }

    #[test]
    fn l_scales_unhatted_vectors() {
        // L_n v^i_m = (m + mu) v^i_{m+n} on the unhatted K4hat components
        let mu = half();
        for (idx, label) in k4hat::BASIS_LABELS.iter().enumerate() {
            if *label == "v^3" {
                continue;
            }
            for n in -2..3 {
                for m in -2..3 {
                    let v = ModuleVector::basis(mu.clone(), idx, m);
                    let out = module_action(Algebra::K4hat, "L", n, &v).unwrap();
                    let expected = ModuleVector::basis(mu.clone(), idx, m + n)
                        .scale(&(&mu + &GaussianRational::from_int(m)));
                    assert_eq!(out, expected, "L_{} on {}_{}", n, label, m);
                }
            }
        }
    }

    #[test]
    fn y2_maps_v1_to_v3_with_shifted_weight() {
        // Y^2_n v^1_m = -(n + m + mu) v^3_{m+n}
        let mu = half();
        let v1 = k4hat::BASIS_LABELS.iter().position(|l| *l == "v^1").unwrap();
        let v3 = k4hat::BASIS_LABELS.iter().position(|l| *l == "v^3").unwrap();
        for n in -2..3 {
            for m in -2..3 {
                let v = ModuleVector::basis(mu.clone(), v1, m);
                let out = module_action(Algebra::K4hat, "Y^2", n, &v).unwrap();
                let w = &(&mu + &GaussianRational::from_int(n + m)) * &-GaussianRational::one();
                let expected = ModuleVector::basis(mu.clone(), v3, m + n).scale(&w);
                assert_eq!(out, expected);
            }
        }
    }

    #[test]
    fn central_element_acts_as_identity() {
        let mu = half();
        for idx in 0..4 {
            for m in -2..3 {
                let v = ModuleVector::basis(mu.clone(), idx, m);
                let out = module_action(Algebra::K4hat, "G^3", 0, &v).unwrap();
                assert_eq!(out, v);
            }
        }
    }

    #[test]
    fn ck6_i_field_action() {
        // I_n sends v~^4_m to v^4_{m+n} and kills the other basis vectors
        let mu = half();
        let vh4 = ck6::BASIS_LABELS.iter().position(|l| *l == "v~^4").unwrap();
        let v4 = ck6::BASIS_LABELS.iter().position(|l| *l == "v^4").unwrap();
        for n in -2..3 {
            for idx in 0..8 {
                let v = ModuleVector::basis(mu.clone(), idx, 0);
                let out = module_action(Algebra::CK6, "I", n, &v).unwrap();
                if idx == vh4 {
                    assert_eq!(out, ModuleVector::basis(mu.clone(), v4, n));
                } else {
                    assert!(out.is_zero());
                }
            }
        }
    }

    #[test]
    fn mu_zero_matches_weyl_entry_arithmetic() {
        // at mu = 0 the action is the plain Laurent action of the entries
        let mu = GaussianRational::zero();
        let v = ModuleVector::basis(mu.clone(), 1, 2);
        let out = module_action(Algebra::K4hat, "L", 1, &v).unwrap();
        // tdt^1 on t^2: 3 t^3
        let expected = ModuleVector::basis(mu, 1, 3).scale(&GaussianRational::from_int(3));
        assert_eq!(out, expected);
    }
}
