//! Finite-dimensional 𝔤-modules as explicit action matrices.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::Scalar;
use crate::lie::SimpleLieData;

/// A 𝔤-module given by one dense action matrix per basis element of 𝔤.
///
/// Matrices act on column vectors: `(ρ(a)v)_i = Σ_k M[i][k]·v_k`.
#[derive(Clone, Debug)]
pub struct GModule {
    algebra: Arc<SimpleLieData>,
    dim: usize,
    actions: Vec<Vec<Vec<Scalar>>>,
    labels: Vec<String>,
    /// h-weights of the basis vectors under the cartan elements, when diagonal.
    h_weights: Option<Vec<Vec<Scalar>>>,
}

impl GModule {
    pub fn new(
        algebra: Arc<SimpleLieData>,
        dim: usize,
        actions: Vec<Vec<Vec<Scalar>>>,
        labels: Vec<String>,
        h_weights: Option<Vec<Vec<Scalar>>>,
    ) -> Result<Self> {
        let m = GModule { algebra, dim, actions, labels, h_weights };
        m.validate()?;
        Ok(m)
    }

    pub fn algebra(&self) -> &Arc<SimpleLieData> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self, k: usize) -> &str {
        &self.labels[k]
    }

    pub fn action_matrix(&self, g: usize) -> &Vec<Vec<Scalar>> {
        &self.actions[g]
    }

    /// ρ(bᵍ)·(basis k) as a sparse column.
    pub fn apply_basis(&self, g: usize, k: usize) -> Vec<(usize, Scalar)> {
        self.actions[g]
            .iter()
            .enumerate()
            .filter(|(_, row)| !row[k].is_zero())
            .map(|(i, row)| (i, row[k].clone()))
            .collect()
    }

    pub fn h_weight(&self, k: usize, cartan_pos: usize) -> Option<Scalar> {
        self.h_weights.as_ref().map(|w| w[k][cartan_pos].clone())
    }

    /// Verifies [ρ(a), ρ(b)] = ρ([a,b]) exactly on every basis pair, and
    /// that declared h-weights really are the diagonal of the cartan actions.
    #[allow(clippy::needless_range_loop)]
    fn validate(&self) -> Result<()> {
        let d = self.algebra.dim();
        if self.actions.len() != d {
            return Err(Error::DimensionMismatch { expected: d, got: self.actions.len() });
        }
        for m in &self.actions {
            if m.len() != self.dim || m.iter().any(|row| row.len() != self.dim) {
                return Err(Error::DimensionMismatch { expected: self.dim, got: m.len() });
            }
        }
        let mul = |a: &Vec<Vec<Scalar>>, b: &Vec<Vec<Scalar>>| -> Vec<Vec<Scalar>> {
            let n = self.dim;
            let mut out = vec![vec![Scalar::zero(); n]; n];
            for i in 0..n {
                for k in 0..n {
                    if a[i][k].is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        if !b[k][j].is_zero() {
                            out[i][j] += &(&a[i][k] * &b[k][j]);
                        }
                    }
                }
            }
            out
        };
        for a in 0..d {
            for b in 0..d {
                let ab = mul(&self.actions[a], &self.actions[b]);
                let ba = mul(&self.actions[b], &self.actions[a]);
                let table = self.algebra.bracket_basis(a, b);
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        let mut rhs = Scalar::zero();
                        for (k, c) in table.iter().enumerate() {
                            if !c.is_zero() {
                                rhs += &(c * &self.actions[k][i][j]);
                            }
                        }
                        let lhs = &ab[i][j] - &ba[i][j];
                        if lhs != rhs {
                            return Err(Error::InvalidAlgebra(format!(
                                "module action violates [{a},{b}] at entry ({i},{j})"
                            )));
                        }
                    }
                }
            }
        }
        if let Some(weights) = &self.h_weights {
            for (pos, &h) in self.algebra.cartan().iter().enumerate() {
                let m = &self.actions[h];
                for k in 0..self.dim {
                    for i in 0..self.dim {
                        let expected = if i == k { weights[k][pos].clone() } else { Scalar::zero() };
                        if m[i][k] != expected {
                            return Err(Error::InvalidAlgebra(format!(
                                "declared h-weights are not the diagonal of cartan action {h}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// The (m+1)-dimensional irreducible sl₂-module V(m) with integer matrices:
/// h·vₖ = (m−2k)vₖ, f·vₖ = vₖ₊₁, e·vₖ = k(m−k+1)vₖ₋₁.
#[derive(Clone, Debug)]
pub struct FiniteIrrep {
    highest_weight: u32,
    module: GModule,
}

impl FiniteIrrep {
    pub fn new(m: u32) -> Self {
        let algebra = SimpleLieData::sl2();
        let dim = (m + 1) as usize;
        let mut e = vec![vec![Scalar::zero(); dim]; dim];
        let mut f = vec![vec![Scalar::zero(); dim]; dim];
        let mut h = vec![vec![Scalar::zero(); dim]; dim];
        for k in 0..dim {
            let ki = k as i64;
            let mi = m as i64;
            h[k][k] = Scalar::from(mi - 2 * ki);
            if k + 1 < dim {
                f[k + 1][k] = Scalar::one();
            }
            if k > 0 {
                e[k - 1][k] = Scalar::from(ki * (mi - ki + 1));
            }
        }
        let labels = (0..dim).map(|k| format!("v{k}")).collect();
        let h_weights = Some((0..dim).map(|k| vec![Scalar::from(m as i64 - 2 * k as i64)]).collect());
        let module = GModule::new(algebra, dim, vec![e, f, h], labels, h_weights)
            .expect("V(m) matrices satisfy the sl2 relations");
        FiniteIrrep { highest_weight: m, module }
    }

    pub fn highest_weight(&self) -> u32 {
        self.highest_weight
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn as_g_module(&self) -> &GModule {
        &self.module
    }

    pub fn into_g_module(self) -> GModule {
        self.module
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from(n)
    }

    #[test]
    fn v1_action_values() {
        let v1 = FiniteIrrep::new(1);
        let g = v1.as_g_module();
        // e v1 = v0, e v0 = 0
        assert_eq!(g.apply_basis(0, 1), vec![(0, s(1))]);
        assert!(g.apply_basis(0, 0).is_empty());
        // f v0 = v1, f v1 = 0
        assert_eq!(g.apply_basis(1, 0), vec![(1, s(1))]);
        assert!(g.apply_basis(1, 1).is_empty());
        // h v0 = v0, h v1 = -v1
        assert_eq!(g.apply_basis(2, 0), vec![(0, s(1))]);
        assert_eq!(g.apply_basis(2, 1), vec![(1, s(-1))]);
    }

    #[test]
    fn irreps_up_to_four_satisfy_relations() {
        for m in 0..=4 {
            let v = FiniteIrrep::new(m);
            assert_eq!(v.dim(), (m + 1) as usize);
        }
    }

    #[test]
    fn e_matrix_nilpotency_order() {
        // e^{m+1} = 0 and e^m ≠ 0 on V(m)
        for m in 1..=3u32 {
            let v = FiniteIrrep::new(m);
            let g = v.as_g_module();
            let e = g.action_matrix(0).clone();
            let dim = g.dim();
            let mut p = e.clone();
            for _ in 1..m {
                p = mat_mul(&p, &e, dim);
            }
            assert!(p.iter().any(|row| row.iter().any(|c| !c.is_zero())));
            p = mat_mul(&p, &e, dim);
            assert!(p.iter().all(|row| row.iter().all(|c| c.is_zero())));
        }
    }

    fn mat_mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>], n: usize) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![Scalar::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                for j in 0..n {
                    out[i][j] += &(&a[i][k] * &b[k][j]);
                }
            }
        }
        out
    }
}
