//! Module-level verification helpers: local nilpotency, diagonal weight
//! actions, and the commutator-bracket representation property.

use crate::error::{Error, Result};
use crate::exact::MultiIndex;
use crate::lie::{GeneratorKey, ToroidalElement};
use crate::modules::{apply_element, ModuleVector, TauModule};

/// Least k ≤ max_k with (x_α(n₀,n̲))^k w = 0, or Ok(None) if no such k is
/// found within the bound. The generator must be a designated root vector.
pub fn nilpotency_check(
    module: &dyn TauModule,
    root_vector: usize,
    n0: i64,
    n: &MultiIndex,
    w: &ModuleVector,
    max_k: usize,
) -> Result<Option<usize>> {
    if !module.algebra().root_vectors().contains(&root_vector) {
        return Err(Error::IndexOutOfRange {
            index: root_vector,
            dim: module.algebra().dim(),
        });
    }
    let key = GeneratorKey::g(root_vector, n0, n.clone());
    let mut current = w.clone();
    for k in 1..=max_k {
        current = module.apply(&key, &current)?;
        if current.is_zero() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Verifies that every extended-Cartan generator acts diagonally on the
/// declared basis with the declared eigenvalues: 𝔥-elements as G(h, 0, 0̲),
/// K₀(n̲) over the supplied sample indices, and every Kᵢ.
pub fn weight_space_check(module: &dyn TauModule, k0_samples: &[MultiIndex]) -> Result<bool> {
    let algebra = module.algebra().clone();
    let rank = module.rank();
    for idx in 0..module.dim() {
        let weight = module.weight_of(idx).ok_or(Error::MissingWeightData)?;
        let w = ModuleVector::unit(idx);
        for (pos, &h) in algebra.cartan().iter().enumerate() {
            let key = GeneratorKey::g(h, 0, MultiIndex::zero(rank));
            let out = module.apply(&key, &w)?;
            if out != w.scale(&weight.cartan[pos]) {
                return Ok(false);
            }
        }
        for n in k0_samples {
            let out = module.apply(&GeneratorKey::k0(n.clone()), &w)?;
            if out != w.scale(&weight.k0_value(n)?) {
                return Ok(false);
            }
        }
        for i in 1..=rank {
            let out = module.apply(&GeneratorKey::ki(i), &w)?;
            let expected = if weight.ki.is_empty() {
                ModuleVector::zero()
            } else {
                w.scale(&weight.ki[i - 1])
            };
            if out != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Outcome of a representation-property sweep.
#[derive(Debug, Clone)]
pub struct RepCheckReport {
    pub pairs_checked: usize,
    pub pairs_skipped: usize,
    pub failure: Option<(GeneratorKey, GeneratorKey, usize)>,
}

impl RepCheckReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

fn key_raise(key: &GeneratorKey) -> i64 {
    match key {
        GeneratorKey::G { n0, .. } => (-n0).max(0),
        _ => 0,
    }
}

/// Checks `apply(u, apply(v, w)) − apply(v, apply(u, w)) = apply([u,v], w)`
/// for every generator pair from `keys` on every sample vector.
///
/// On truncated modules, pairs whose double application would leave the
/// valid window are counted as skipped rather than silently passed.
pub fn representation_check(
    module: &dyn TauModule,
    keys: &[GeneratorKey],
    vectors: &[ModuleVector],
) -> Result<RepCheckReport> {
    let algebra = module.algebra().clone();
    let rank = module.rank();
    let mut report = RepCheckReport { pairs_checked: 0, pairs_skipped: 0, failure: None };
    for u in keys {
        let eu = ToroidalElement::generator(algebra.clone(), rank, u.clone())?;
        for v in keys {
            let ev = ToroidalElement::generator(algebra.clone(), rank, v.clone())?;
            let bracket = eu.bracket(&ev)?;
            for (wi, w) in vectors.iter().enumerate() {
                if let Some(depth) = module.valid_depth() {
                    let max_deg = w
                        .support()
                        .map(|i| module.degree_of(i).unwrap_or(0))
                        .max()
                        .unwrap_or(0);
                    if max_deg + key_raise(u) + key_raise(v) > depth {
                        report.pairs_skipped += 1;
                        continue;
                    }
                }
                let uv = module.apply(u, &module.apply(v, w)?)?;
                let vu = module.apply(v, &module.apply(u, w)?)?;
                let lhs = uv.sub(&vu);
                let rhs = apply_element(module, &bracket, w)?;
                report.pairs_checked += 1;
                if lhs != rhs {
                    report.failure = Some((u.clone(), v.clone(), wi));
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}
