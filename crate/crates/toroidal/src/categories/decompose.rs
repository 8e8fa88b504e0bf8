//! The representation splitter π = π_R + π_E.
//!
//! Given a representation certified in the mixed category, the restricted
//! part acts through ψ of the a-series (with the witness p₀) together with
//! the full K₀ action, and the evaluation part is the complement on the
//! a-series with the whole center acting as zero. The two actions commute
//! and each satisfies its own category's witness.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::{LaurentPoly, MultiIndex};
use crate::formal::{ExponentWindow, GeneratingSeries};
use crate::lie::{GeneratorKey, ToroidalElement};
use crate::modules::{nilpotency_check, ModuleVector, TauModule};

use super::{CategoryTag, CategoryWitness};

/// The split actions of one representation.
pub struct DecomposedRep {
    module: Arc<dyn TauModule>,
    witness: CategoryWitness,
    /// Stripped witness p₀ (p₀(0) ≠ 0); 1 when the witness carries none.
    p0: LaurentPoly,
}

impl DecomposedRep {
    pub fn module(&self) -> &Arc<dyn TauModule> {
        &self.module
    }

    pub fn witness(&self) -> &CategoryWitness {
        &self.witness
    }

    /// Reduced nonzero-root polynomial annihilating the evaluation part,
    /// the p₀ of the split-off evaluation witness.
    pub fn evaluation_p0(&self) -> LaurentPoly {
        self.p0.clone()
    }

    fn a_series(&self, a: usize, w: &ModuleVector) -> GeneratingSeries {
        GeneratingSeries::action(self.module.clone(), a, w.clone())
    }

    /// The restricted action π_R: ψ on a-series, full K₀, zero on Kᵢ.
    pub fn pi_r(&self, key: &GeneratorKey, w: &ModuleVector) -> Result<ModuleVector> {
        Ok(self.pi_r_with_length(key, w)?.0)
    }

    /// π_R together with the ψ expansion length used (0 for central keys).
    pub fn pi_r_with_length(&self, key: &GeneratorKey, w: &ModuleVector) -> Result<(ModuleVector, usize)> {
        match key {
            GeneratorKey::G { idx, n0, n } => {
                let series = self.a_series(*idx, w);
                let len = series.psi_expansion_length(&self.p0, *n0)?;
                let psi = series.psi(&self.p0)?;
                Ok((psi.coefficient(*n0, n)?, len))
            }
            GeneratorKey::K0 { .. } => Ok((self.module.apply(key, w)?, 0)),
            GeneratorKey::Ki { .. } => Ok((ModuleVector::zero(), 0)),
        }
    }

    /// The evaluation action π_E: complement on a-series, zero on the center.
    pub fn pi_e(&self, key: &GeneratorKey, w: &ModuleVector) -> Result<ModuleVector> {
        match key {
            GeneratorKey::G { .. } => {
                let full = self.module.apply(key, w)?;
                Ok(full.sub(&self.pi_r(key, w)?))
            }
            GeneratorKey::K0 { .. } | GeneratorKey::Ki { .. } => Ok(ModuleVector::zero()),
        }
    }

    /// Linear extension of π_R over a τ-element.
    pub fn pi_r_element(&self, element: &ToroidalElement, w: &ModuleVector) -> Result<ModuleVector> {
        let mut out = ModuleVector::zero();
        for (key, c) in element.terms() {
            out.add_scaled(&self.pi_r(key, w)?, c);
        }
        Ok(out)
    }

    /// Linear extension of π_E over a τ-element.
    pub fn pi_e_element(&self, element: &ToroidalElement, w: &ModuleVector) -> Result<ModuleVector> {
        let mut out = ModuleVector::zero();
        for (key, c) in element.terms() {
            out.add_scaled(&self.pi_e(key, w)?, c);
        }
        Ok(out)
    }
}

/// Builds the splitter from a mixed-category witness. The witness must be
/// C_τ (an R̃ or E′ witness embeds by adding p₀ = 1 or keeping its p₀).
pub fn decompose_pi(module: Arc<dyn TauModule>, witness: CategoryWitness) -> Result<DecomposedRep> {
    witness.validate()?;
    if witness.pi.len() != module.rank() {
        return Err(Error::RankMismatch { expected: module.rank(), got: witness.pi.len() });
    }
    if witness.category != CategoryTag::CTau {
        return Err(Error::NotInCategory(format!(
            "decompose_pi expects a C_tau witness, got {}",
            witness.category.as_str()
        )));
    }
    let p0_full = witness.p0.clone().unwrap_or_else(LaurentPoly::one);
    let (_, p0) = p0_full.strip_monomial_factor()?;
    Ok(DecomposedRep { module, witness, p0 })
}

/// Checks [π_R(u), π_E(v)] w = 0 for all sampled generator pairs and vectors.
pub fn verify_commuting_actions(
    rep: &DecomposedRep,
    window: &ExponentWindow,
    vectors: &[ModuleVector],
) -> Result<bool> {
    let dim = rep.module.algebra().dim();
    for a in 0..dim {
        for b in 0..dim {
            for (n0, n) in window.pairs() {
                let u = GeneratorKey::g(a, n0, n.clone());
                for (m0, m) in window.pairs() {
                    let v = GeneratorKey::g(b, m0, m.clone());
                    for w in vectors {
                        let re = rep.pi_r(&u, &rep.pi_e(&v, w)?)?;
                        let er = rep.pi_e(&v, &rep.pi_r(&u, w)?)?;
                        if re != er {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Nilpotency transport data for one (root vector, mode, vector) triple.
#[derive(Debug, Clone)]
pub struct TransportReport {
    /// Nilpotency order of the original action, maximized over the modes
    /// n₀..n₀+l that enter the finite ψ formula.
    pub k_original: usize,
    pub k_restricted: usize,
    pub k_evaluation: usize,
    /// Largest ψ expansion length encountered.
    pub l_used: usize,
}

impl TransportReport {
    /// k_R ≤ k(l+1) and k_E ≤ k(l+2).
    pub fn within_bounds(&self) -> bool {
        self.k_restricted <= self.k_original * (self.l_used + 1)
            && self.k_evaluation <= self.k_original * (self.l_used + 2)
    }
}

/// Computes the least nilpotency orders of the split actions ã(n₀,n̲) and
/// ǎ(n₀,n̲) on w and compares them against the transport bounds.
pub fn integrability_transport_check(
    rep: &DecomposedRep,
    root_vector: usize,
    n0: i64,
    n: &MultiIndex,
    w: &ModuleVector,
    max_k: usize,
) -> Result<TransportReport> {
    if !rep.module.algebra().root_vectors().contains(&root_vector) {
        return Err(Error::IndexOutOfRange {
            index: root_vector,
            dim: rep.module.algebra().dim(),
        });
    }
    let key = GeneratorKey::g(root_vector, n0, n.clone());

    let mut l_used = 0usize;
    let mut k_restricted = None;
    let mut current = w.clone();
    for k in 1..=max_k * 8 {
        let (next, len) = rep.pi_r_with_length(&key, &current)?;
        l_used = l_used.max(len);
        current = next;
        if current.is_zero() {
            k_restricted = Some(k);
            break;
        }
    }
    let k_restricted = k_restricted.ok_or(Error::BoundExceeded(max_k * 8))?;

    let mut k_evaluation = None;
    let mut current = w.clone();
    for k in 1..=max_k * 8 {
        current = rep.pi_e(&key, &current)?;
        if current.is_zero() {
            k_evaluation = Some(k);
            break;
        }
    }
    let k_evaluation = k_evaluation.ok_or(Error::BoundExceeded(max_k * 8))?;

    // the original order over all modes the finite formula touches
    let mut k_original = 0usize;
    for m0 in n0..=n0 + l_used as i64 {
        let k = nilpotency_check(rep.module.as_ref(), root_vector, m0, n, w, max_k)?
            .ok_or(Error::BoundExceeded(max_k))?;
        k_original = k_original.max(k);
    }

    Ok(TransportReport { k_original, k_restricted, k_evaluation, l_used })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Scalar;
    use crate::modules::{
        EvalModule, EvalPoint, FiniteIrrep, InducedModule, RestrictedEvalModule,
        RestrictedEvalPoint, TensorModule,
    };

    fn s(n: i64) -> Scalar {
        Scalar::from(n)
    }

    fn restricted_part(depth: i64) -> Arc<dyn TauModule> {
        let induced = InducedModule::new(FiniteIrrep::new(0).into_g_module(), s(1), depth).unwrap();
        Arc::new(
            RestrictedEvalModule::new(
                vec![induced],
                vec![RestrictedEvalPoint::new(vec![s(2)]).unwrap()],
            )
            .unwrap(),
        )
    }

    fn eval_part() -> Arc<dyn TauModule> {
        Arc::new(
            EvalModule::new(
                vec![FiniteIrrep::new(1).into_g_module()],
                vec![EvalPoint::new(vec![s(3), s(5)]).unwrap()],
            )
            .unwrap(),
        )
    }

    fn mixed() -> (Arc<TensorModule>, DecomposedRep) {
        let tensor = Arc::new(TensorModule::new(vec![restricted_part(4), eval_part()]).unwrap());
        let witness = CategoryWitness::for_module(tensor.as_ref(), CategoryTag::CTau).unwrap();
        let module: Arc<dyn TauModule> = tensor.clone();
        let rep = decompose_pi(module, witness).unwrap();
        (tensor, rep)
    }

    #[test]
    fn split_recovers_factor_actions() {
        let (tensor, rep) = mixed();
        // pi_R(e(n0,(n1))) = 2^{n1}(e(n0)v)⊗u, pi_E = 3^{n0}5^{n1} v⊗(e u)
        for idx in 0..tensor.dim() {
            if tensor.degree_of(idx).unwrap() > 2 {
                continue;
            }
            let w = ModuleVector::unit(idx);
            for n0 in -2..=2 {
                for n1 in -2..=2 {
                    let key = GeneratorKey::g(0, n0, vec![n1]);
                    let r = rep.pi_r(&key, &w).unwrap();
                    let e = rep.pi_e(&key, &w).unwrap();
                    assert_eq!(r, tensor.apply_slot(0, &key, &w).unwrap());
                    assert_eq!(e, tensor.apply_slot(1, &key, &w).unwrap());
                    // additivity
                    assert_eq!(r.add(&e), tensor.apply(&key, &w).unwrap());
                }
            }
        }
    }

    #[test]
    fn central_keys_split_by_category() {
        let (tensor, rep) = mixed();
        let w = ModuleVector::unit(0);
        let k0 = GeneratorKey::k0(vec![2]);
        // pi_R carries the whole K0 action, pi_E none
        assert_eq!(rep.pi_r(&k0, &w).unwrap(), tensor.apply(&k0, &w).unwrap());
        assert!(rep.pi_e(&k0, &w).unwrap().is_zero());
        let ki = GeneratorKey::ki(1);
        assert!(rep.pi_r(&ki, &w).unwrap().is_zero());
        assert!(rep.pi_e(&ki, &w).unwrap().is_zero());
    }

    #[test]
    fn purely_restricted_module_splits_as_identity_plus_zero() {
        let m = restricted_part(3);
        let witness = CategoryWitness::new(
            CategoryTag::CTau,
            Some(LaurentPoly::one()),
            vec![LaurentPoly::linear_root(&s(2))],
        )
        .unwrap();
        let rep = decompose_pi(m.clone(), witness).unwrap();
        let w = ModuleVector::unit(0);
        for n0 in -2..=2 {
            let key = GeneratorKey::g(1, n0, vec![1]);
            assert_eq!(rep.pi_r(&key, &w).unwrap(), m.apply(&key, &w).unwrap());
            assert!(rep.pi_e(&key, &w).unwrap().is_zero());
        }
    }

    #[test]
    fn purely_evaluation_module_splits_as_zero_plus_identity() {
        let m = eval_part();
        let witness = CategoryWitness::new(
            CategoryTag::CTau,
            Some(LaurentPoly::linear_root(&s(3))),
            vec![LaurentPoly::linear_root(&s(5))],
        )
        .unwrap();
        let rep = decompose_pi(m.clone(), witness).unwrap();
        for idx in 0..m.dim() {
            let w = ModuleVector::unit(idx);
            for n0 in -2..=2 {
                let key = GeneratorKey::g(0, n0, vec![-1]);
                assert!(rep.pi_r(&key, &w).unwrap().is_zero());
                assert_eq!(rep.pi_e(&key, &w).unwrap(), m.apply(&key, &w).unwrap());
            }
        }
    }

    #[test]
    fn split_actions_commute() {
        let (_, rep) = mixed();
        let window = ExponentWindow::new((-1, 1), vec![(-1, 1)]).unwrap();
        let vectors = vec![ModuleVector::unit(0), ModuleVector::unit(1)];
        assert!(verify_commuting_actions(&rep, &window, &vectors).unwrap());
    }

    #[test]
    fn split_actions_are_representations() {
        // [pi_X(u), pi_X(v)] = pi_X([u,v]) for both halves
        let (tensor, rep) = mixed();
        let algebra = tensor.algebra().clone();
        let w = ModuleVector::unit(1);
        let keys = [
            GeneratorKey::g(0, 1, vec![0]),
            GeneratorKey::g(1, -1, vec![1]),
            GeneratorKey::g(2, 0, vec![-1]),
        ];
        for u in &keys {
            let eu = ToroidalElement::generator(algebra.clone(), 1, u.clone()).unwrap();
            for v in &keys {
                let ev = ToroidalElement::generator(algebra.clone(), 1, v.clone()).unwrap();
                let bracket = eu.bracket(&ev).unwrap();
                let r_lhs = rep
                    .pi_r(u, &rep.pi_r(v, &w).unwrap())
                    .unwrap()
                    .sub(&rep.pi_r(v, &rep.pi_r(u, &w).unwrap()).unwrap());
                assert_eq!(r_lhs, rep.pi_r_element(&bracket, &w).unwrap());
                let e_lhs = rep
                    .pi_e(u, &rep.pi_e(v, &w).unwrap())
                    .unwrap()
                    .sub(&rep.pi_e(v, &rep.pi_e(u, &w).unwrap()).unwrap());
                assert_eq!(e_lhs, rep.pi_e_element(&bracket, &w).unwrap());
            }
        }
    }

    #[test]
    fn transport_bounds_hold_on_mixed_module() {
        let (tensor, rep) = mixed();
        // e acting at a lowering mode on vac⊗v1
        let w = ModuleVector::unit(tensor.encode(&[0, 1]));
        let report =
            integrability_transport_check(&rep, 0, 1, &MultiIndex::new(vec![0]), &w, 8).unwrap();
        assert!(report.within_bounds(), "{report:?}");
        // the evaluation side kills e twice on V(1): k_E ≤ 2
        assert!(report.k_evaluation <= 2);
        // the restricted side annihilates immediately (vacuum, raising mode)
        assert_eq!(report.k_restricted, 1);
    }

    #[test]
    fn transport_on_zero_mode() {
        let (tensor, rep) = mixed();
        let w = ModuleVector::unit(tensor.encode(&[0, 1]));
        let report =
            integrability_transport_check(&rep, 0, 0, &MultiIndex::new(vec![1]), &w, 8).unwrap();
        assert!(report.within_bounds(), "{report:?}");
    }
}
