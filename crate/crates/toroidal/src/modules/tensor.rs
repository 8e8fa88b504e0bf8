//! Tensor products of τ-modules of the same rank, acting by the Leibniz rule
//! on every generator (central generators included).

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::{MultiIndex, Scalar};
use crate::lie::{GeneratorKey, SimpleLieData};
use crate::modules::{ModuleVector, ProductIndex, TauModule, Weight};

/// W₁ ⊗ ⋯ ⊗ W_k with slot-wise action. Nested tensors are flattened at
/// construction so slots always refer to leaf modules.
pub struct TensorModule {
    algebra: Arc<SimpleLieData>,
    rank: usize,
    parts: Vec<Arc<dyn TauModule>>,
    prod: ProductIndex,
}

impl TensorModule {
    pub fn new(parts: Vec<Arc<dyn TauModule>>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidDescriptor("tensor product needs at least one part".into()));
        }
        let mut flat: Vec<Arc<dyn TauModule>> = Vec::new();
        for p in parts {
            match p.as_tensor() {
                Some(inner) => flat.extend(inner.parts.iter().cloned()),
                None => flat.push(p),
            }
        }
        let algebra = flat[0].algebra().clone();
        let rank = flat[0].rank();
        for p in &flat {
            if p.rank() != rank {
                return Err(Error::RankMismatch { expected: rank, got: p.rank() });
            }
            if p.algebra().name() != algebra.name() {
                return Err(Error::InvalidDescriptor("mixed algebras across tensor parts".into()));
            }
        }
        let prod = ProductIndex::new(flat.iter().map(|p| p.dim()).collect());
        Ok(TensorModule { algebra, rank, parts: flat, prod })
    }

    pub fn parts(&self) -> &[Arc<dyn TauModule>] {
        &self.parts
    }

    /// Encodes per-slot basis indices into a product-basis index.
    pub fn encode(&self, parts: &[usize]) -> usize {
        self.prod.encode(parts)
    }

    pub fn decode(&self, idx: usize) -> Vec<usize> {
        self.prod.decode(idx)
    }
}

impl TauModule for TensorModule {
    fn algebra(&self) -> &Arc<SimpleLieData> {
        &self.algebra
    }

    fn rank(&self) -> usize {
        self.rank
    }

    fn dim(&self) -> usize {
        self.prod.total()
    }

    fn basis_label(&self, idx: usize) -> String {
        let parts = self.prod.decode(idx);
        parts
            .iter()
            .enumerate()
            .map(|(j, &k)| self.parts[j].basis_label(k))
            .collect::<Vec<_>>()
            .join("⊗")
    }

    fn apply_basis(&self, key: &GeneratorKey, idx: usize) -> Result<ModuleVector> {
        key.check(&self.algebra, self.rank)?;
        let mut out = ModuleVector::zero();
        for slot in 0..self.parts.len() {
            out.add_scaled(&self.apply_slot_basis(slot, key, idx)?, &Scalar::one());
        }
        Ok(out)
    }

    fn degree_of(&self, idx: usize) -> Option<i64> {
        let parts = self.prod.decode(idx);
        let mut total = 0;
        for (j, &k) in parts.iter().enumerate() {
            // ungraded parts count as degree 0
            total += self.parts[j].degree_of(k).unwrap_or(0);
        }
        Some(total)
    }

    fn valid_depth(&self) -> Option<i64> {
        self.parts.iter().filter_map(|p| p.valid_depth()).min()
    }

    fn restriction_bound_basis(&self, a: usize, n: &MultiIndex, idx: usize) -> Option<i64> {
        let parts = self.prod.decode(idx);
        let mut bound = i64::MIN;
        for (j, &k) in parts.iter().enumerate() {
            bound = bound.max(self.parts[j].restriction_bound_basis(a, n, k)?);
        }
        Some(bound)
    }

    fn x0_annihilator_roots(&self) -> Option<Vec<Scalar>> {
        let mut roots: Vec<Scalar> = Vec::new();
        for p in &self.parts {
            for z in p.x0_annihilator_roots()? {
                if !roots.contains(&z) {
                    roots.push(z);
                }
            }
        }
        Some(roots)
    }

    fn xi_annihilator_roots(&self) -> Option<Vec<Vec<Scalar>>> {
        let mut per_var: Vec<Vec<Scalar>> = vec![Vec::new(); self.rank];
        for p in &self.parts {
            let part_roots = p.xi_annihilator_roots()?;
            if part_roots.len() != self.rank {
                return None;
            }
            for (i, roots) in part_roots.into_iter().enumerate() {
                for z in roots {
                    if !per_var[i].contains(&z) {
                        per_var[i].push(z);
                    }
                }
            }
        }
        Some(per_var)
    }

    fn weight_of(&self, idx: usize) -> Option<Weight> {
        let parts = self.prod.decode(idx);
        let mut acc: Option<Weight> = None;
        for (j, &k) in parts.iter().enumerate() {
            let mut w = self.parts[j].weight_of(k)?;
            if w.ki.is_empty() {
                w.ki = vec![Scalar::zero(); self.rank];
            }
            acc = Some(match acc {
                None => w,
                Some(prev) => prev.combine(&w),
            });
        }
        acc
    }

    fn slot_count(&self) -> usize {
        self.parts.len()
    }

    fn apply_slot_basis(&self, slot: usize, key: &GeneratorKey, idx: usize) -> Result<ModuleVector> {
        if slot >= self.parts.len() {
            return Err(Error::IndexOutOfRange { index: slot, dim: self.parts.len() });
        }
        let parts = self.prod.decode(idx);
        let inner = self.parts[slot].apply_basis(key, parts[slot])?;
        let mut out = ModuleVector::zero();
        for (i, c) in inner.iter() {
            let mut np = parts.clone();
            np[slot] = *i;
            out.add_term(self.prod.encode(&np), c.clone());
        }
        Ok(out)
    }

    fn slot_x0_floor(&self, slot: usize, a: usize, v: &ModuleVector) -> Option<i64> {
        let n = MultiIndex::zero(self.rank);
        let mut floor = i64::MIN;
        for idx in v.support() {
            let k = self.prod.decode(idx)[slot];
            floor = floor.max(self.parts[slot].restriction_bound_basis(a, &n, k)?);
        }
        Some(floor)
    }

    fn slot_x0_annihilator_roots(&self, slot: usize) -> Option<Vec<Scalar>> {
        self.parts.get(slot)?.x0_annihilator_roots()
    }

    fn as_tensor(&self) -> Option<&TensorModule> {
        Some(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modules::{
        EvalModule, EvalPoint, FiniteIrrep, InducedModule, RestrictedEvalModule,
        RestrictedEvalPoint,
    };

    fn s(n: i64) -> Scalar {
        Scalar::from(n)
    }

    fn mixed_tensor() -> TensorModule {
        let induced = InducedModule::new(FiniteIrrep::new(0).into_g_module(), s(1), 3).unwrap();
        let restricted = Arc::new(
            RestrictedEvalModule::new(
                vec![induced],
                vec![RestrictedEvalPoint::new(vec![s(2)]).unwrap()],
            )
            .unwrap(),
        );
        let eval = Arc::new(
            EvalModule::new(
                vec![FiniteIrrep::new(1).into_g_module()],
                vec![EvalPoint::new(vec![s(3), s(5)]).unwrap()],
            )
            .unwrap(),
        );
        TensorModule::new(vec![restricted, eval]).unwrap()
    }

    #[test]
    fn leibniz_action_splits_over_slots() {
        let w = mixed_tensor();
        let key = GeneratorKey::g(0, 1, vec![1]); // e(1,(1))
        // on vac⊗v1: restricted slot gives 0 (raising on vacuum),
        // eval slot gives 3^1·5^1·(vac ⊗ e·v1) = 15·vac⊗v0
        let idx = w.encode(&[0, 1]);
        let out = w.apply_basis(&key, idx).unwrap();
        let expected = ModuleVector::unit(w.encode(&[0, 0])).scale(&s(15));
        assert_eq!(out, expected);
        // slot application separates the two contributions
        assert!(w.apply_slot_basis(0, &key, idx).unwrap().is_zero());
        assert_eq!(w.apply_slot_basis(1, &key, idx).unwrap(), expected);
    }

    #[test]
    fn central_action_through_slots() {
        let w = mixed_tensor();
        let idx = w.encode(&[0, 0]);
        // K0((2)): restricted slot contributes 2^2·1 = 4, eval slot 0
        let out = w.apply_basis(&GeneratorKey::k0(vec![2]), idx).unwrap();
        assert_eq!(out, ModuleVector::unit(idx).scale(&s(4)));
        assert!(w.apply_basis(&GeneratorKey::ki(1), idx).unwrap().is_zero());
    }

    #[test]
    fn mixed_tensor_has_no_global_annihilator_or_bound() {
        let w = mixed_tensor();
        assert!(w.x0_annihilator_roots().is_none());
        assert!(w.restriction_bound_basis(0, &MultiIndex::new(vec![0]), 0).is_none());
        // but slot metadata knows each side
        assert_eq!(w.slot_x0_floor(0, 0, &ModuleVector::unit(0)), Some(0));
        assert_eq!(w.slot_x0_annihilator_roots(1), Some(vec![s(3)]));
        // loop-variable annihilator roots combine across slots
        assert_eq!(w.xi_annihilator_roots(), Some(vec![vec![s(2), s(5)]]));
    }

    #[test]
    fn nested_tensors_flatten() {
        let w = mixed_tensor();
        let again = TensorModule::new(vec![Arc::new(mixed_tensor()), Arc::new(mixed_tensor())]).unwrap();
        assert_eq!(again.slot_count(), 2 * w.slot_count());
    }

    #[test]
    fn weight_combines_slots() {
        let w = mixed_tensor();
        let idx = w.encode(&[0, 0]);
        let weight = w.weight_of(idx).unwrap();
        // h-weight: 0 (vacuum) + 1 (v0 of V(1))
        assert_eq!(weight.cartan, vec![s(1)]);
        // K0((n)) eigenvalue: 2^n from the restricted slot only
        assert_eq!(weight.k0_value(&MultiIndex::new(vec![3])).unwrap(), s(8));
    }
}
