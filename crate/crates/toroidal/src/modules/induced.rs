//! Depth-truncated induced modules over the affine subalgebra
//! ĝ = 𝔤 ⊗ ℂ[t₀^±1] ⊕ ℂK₀, the exactly computable restricted stand-ins.
//!
//! The full induced module is U(ĝ) ⊗ U over the parabolic 𝔤⊗ℂ[t₀] ⊕ ℂK₀,
//! with K₀ acting as a fixed level and the nonnegative modes acting on U
//! through 𝔤 (positive modes by zero). Its PBW basis consists of ordered
//! monomials a_{i₁}(−m₁)⋯a_{iₖ}(−mₖ) ⊗ u with mⱼ ≥ 1. This type keeps the
//! graded pieces of total degree Σmⱼ ≤ depth; any action that would need a
//! discarded piece fails with `NotWithinValidWindow` instead of returning a
//! wrong value. Lowering and degree-preserving actions agree with the full
//! module exactly.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::{MultiIndex, Scalar};
use crate::lie::{GeneratorKey, SimpleLieData};
use crate::modules::{GModule, ModuleVector, TauModule, Weight};

/// Creation factors (mode m ≥ 1, generator index), kept sorted ascending.
type Monomial = Vec<(i64, usize)>;

/// PBW basis vector: creation monomial applied to a U-basis vector.
type BasisKey = (Monomial, usize);

type Element = BTreeMap<BasisKey, Scalar>;

/// Rank-0 τ-module (an affine ĝ-module): truncated induced module from a
/// finite-dimensional 𝔤-module at a fixed level.
pub struct InducedModule {
    algebra: Arc<SimpleLieData>,
    inducing: GModule,
    level: Scalar,
    depth: i64,
    basis: Vec<BasisKey>,
    index: BTreeMap<BasisKey, usize>,
}

impl InducedModule {
    pub fn new(inducing: GModule, level: Scalar, depth: i64) -> Result<Arc<Self>> {
        if depth < 0 {
            return Err(Error::InvalidDescriptor("depth must be ≥ 0".into()));
        }
        let algebra = inducing.algebra().clone();
        let mut monomials: Vec<Monomial> = vec![Vec::new()];
        let mut frontier: Vec<Monomial> = vec![Vec::new()];
        // extend by factors in nondecreasing (mode, gen) order so each
        // multiset is generated exactly once
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for mono in &frontier {
                let used: i64 = mono.iter().map(|(m, _)| m).sum();
                let min_factor = mono.last().cloned().unwrap_or((1, 0));
                for mode in 1..=(depth - used) {
                    for g in 0..algebra.dim() {
                        if (mode, g) >= min_factor {
                            let mut m2 = mono.clone();
                            m2.push((mode, g));
                            next.push(m2);
                        }
                    }
                }
            }
            monomials.extend(next.iter().cloned());
            frontier = next;
        }
        let mut basis: Vec<BasisKey> = Vec::new();
        for mono in monomials {
            for t in 0..inducing.dim() {
                basis.push((mono.clone(), t));
            }
        }
        // deterministic order: (total degree, monomial, inducing index)
        basis.sort_by_key(|(mono, t)| {
            let deg: i64 = mono.iter().map(|(m, _)| m).sum();
            (deg, mono.clone(), *t)
        });
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, k)| (k.clone(), i))
            .collect();
        Ok(Arc::new(InducedModule { algebra, inducing, level, depth, basis, index }))
    }

    pub fn level(&self) -> &Scalar {
        &self.level
    }

    pub fn depth(&self) -> i64 {
        self.depth
    }

    pub fn inducing_module(&self) -> &GModule {
        &self.inducing
    }

    /// Dimension of each graded piece, degrees 0..=depth.
    pub fn graded_dimensions(&self) -> Vec<usize> {
        let mut dims = vec![0usize; (self.depth + 1) as usize];
        for (mono, _) in &self.basis {
            let deg: i64 = mono.iter().map(|(m, _)| m).sum();
            dims[deg as usize] += 1;
        }
        dims
    }

    /// Index of the degree-0 vector over the t-th U-basis vector.
    pub fn ground_index(&self, t: usize) -> usize {
        self.index[&(Vec::new(), t)]
    }

    fn monomial_degree(mono: &[(i64, usize)]) -> i64 {
        mono.iter().map(|(m, _)| m).sum()
    }

    /// Left multiplication by the creation operator g(−mode) with
    /// straightening into sorted order. Purely combinatorial: no truncation
    /// happens here (the caller checks the degree budget once).
    fn insert_creation(&self, g: usize, mode: i64, mono: &[(i64, usize)]) -> Vec<(Monomial, Scalar)> {
        let factor = (mode, g);
        if mono.is_empty() || factor <= mono[0] {
            let mut out = Vec::with_capacity(mono.len() + 1);
            out.push(factor);
            out.extend_from_slice(mono);
            return vec![(out, Scalar::one())];
        }
        let head = mono[0];
        let rest = &mono[1..];
        let mut out = Vec::new();
        for (m2, c) in self.insert_creation(g, mode, rest) {
            let mut with_head = Vec::with_capacity(m2.len() + 1);
            with_head.push(head);
            with_head.extend(m2);
            out.push((with_head, c));
        }
        // commutator term [g(−mode), head]: modes add, never reaching 0
        let table = self.algebra.bracket_basis(g, head.1);
        for (k, c) in table.iter().enumerate() {
            if !c.is_zero() {
                for (m2, c2) in self.insert_creation(k, mode + head.0, rest) {
                    out.push((m2, c * &c2));
                }
            }
        }
        out
    }

    /// a(n₀) acting on one PBW basis vector. Every output term has degree
    /// deg(mono) − n₀.
    fn act(&self, a: usize, n0: i64, mono: &[(i64, usize)], t: usize) -> Result<Element> {
        let mut out = Element::new();
        if n0 < 0 {
            for (m2, c) in self.insert_creation(a, -n0, mono) {
                add_elem(&mut out, (m2, t), c);
            }
            return Ok(out);
        }
        if mono.is_empty() {
            if n0 == 0 {
                for (i, c) in self.inducing.apply_basis(a, t) {
                    add_elem(&mut out, (Vec::new(), i), c);
                }
            }
            // positive modes annihilate the ground level
            return Ok(out);
        }
        let (m1, b) = mono[0];
        let rest = &mono[1..];
        // a(n0)·b(−m1)·rest = b(−m1)·a(n0)·rest + [a(n0), b(−m1)]·rest
        for ((m2, t2), c) in self.act(a, n0, rest, t)? {
            for (m3, c3) in self.insert_creation(b, m1, &m2) {
                add_elem(&mut out, (m3, t2), &c * &c3);
            }
        }
        let table = self.algebra.bracket_basis(a, b);
        for (k, c) in table.iter().enumerate() {
            if !c.is_zero() {
                for (key, c2) in self.act(k, n0 - m1, rest, t)? {
                    add_elem(&mut out, key, c * &c2);
                }
            }
        }
        if n0 == m1 {
            let central = &(&Scalar::from(n0) * self.algebra.form_basis(a, b)) * &self.level;
            if !central.is_zero() {
                for ((m2, t2), c) in identity_elem(rest, t) {
                    add_elem(&mut out, (m2, t2), &central * &c);
                }
            }
        }
        Ok(out)
    }

    fn element_to_vector(&self, elem: Element) -> ModuleVector {
        let mut out = ModuleVector::zero();
        for (key, c) in elem {
            let idx = *self
                .index
                .get(&key)
                .expect("straightened monomial stays within the generated basis");
            out.add_term(idx, c);
        }
        out
    }
}

fn add_elem(elem: &mut Element, key: BasisKey, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let entry = elem.entry(key.clone()).or_insert_with(Scalar::zero);
    *entry += &c;
    if entry.is_zero() {
        elem.remove(&key);
    }
}

fn identity_elem(mono: &[(i64, usize)], t: usize) -> Element {
    let mut e = Element::new();
    e.insert((mono.to_vec(), t), Scalar::one());
    e
}

impl TauModule for InducedModule {
    fn algebra(&self) -> &Arc<SimpleLieData> {
        &self.algebra
    }

    fn rank(&self) -> usize {
        0
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn basis_label(&self, idx: usize) -> String {
        let (mono, t) = &self.basis[idx];
        let ground = if self.inducing.dim() == 1 {
            "vac".to_string()
        } else {
            self.inducing.label(*t).to_string()
        };
        if mono.is_empty() {
            ground
        } else {
            let factors: String = mono
                .iter()
                .map(|(m, g)| format!("{}(-{m})", self.algebra.label(*g)))
                .collect();
            format!("{factors}·{ground}")
        }
    }

    fn apply_basis(&self, key: &GeneratorKey, idx: usize) -> Result<ModuleVector> {
        key.check(&self.algebra, 0)?;
        if idx >= self.basis.len() {
            return Err(Error::IndexOutOfRange { index: idx, dim: self.basis.len() });
        }
        match key {
            GeneratorKey::G { idx: a, n0, .. } => {
                let (mono, t) = &self.basis[idx];
                let out_degree = Self::monomial_degree(mono) - n0;
                if out_degree > self.depth {
                    return Err(Error::NotWithinValidWindow {
                        degree: out_degree,
                        depth: self.depth,
                    });
                }
                Ok(self.element_to_vector(self.act(*a, *n0, mono, *t)?))
            }
            GeneratorKey::K0 { .. } => Ok(ModuleVector::unit(idx).scale(&self.level)),
            GeneratorKey::Ki { .. } => unreachable!("rank-0 module has no Ki keys"),
        }
    }

    fn degree_of(&self, idx: usize) -> Option<i64> {
        self.basis.get(idx).map(|(m, _)| Self::monomial_degree(m))
    }

    fn valid_depth(&self) -> Option<i64> {
        Some(self.depth)
    }

    fn restriction_bound_basis(&self, _a: usize, _n: &MultiIndex, idx: usize) -> Option<i64> {
        self.degree_of(idx)
    }

    fn xi_annihilator_roots(&self) -> Option<Vec<Vec<Scalar>>> {
        Some(Vec::new())
    }

    fn weight_of(&self, idx: usize) -> Option<Weight> {
        let (mono, t) = &self.basis[idx];
        let cartan_len = self.algebra.cartan().len();
        let mut cartan = vec![Scalar::zero(); cartan_len];
        for (pos, &h) in self.algebra.cartan().iter().enumerate() {
            cartan[pos] += &self.inducing.h_weight(*t, pos)?;
            for (_, g) in mono {
                // ad-eigenvalue of the creation generator under h
                let table = self.algebra.bracket_basis(h, *g);
                for (k, c) in table.iter().enumerate() {
                    if k != *g && !c.is_zero() {
                        return None;
                    }
                }
                cartan[pos] += &table[*g];
            }
        }
        Some(Weight {
            cartan,
            k0_terms: vec![(self.level.clone(), Vec::new())],
            ki: Vec::new(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modules::FiniteIrrep;

    fn s(n: i64) -> Scalar {
        Scalar::from(n)
    }

    fn vacuum_module(depth: i64) -> Arc<InducedModule> {
        InducedModule::new(FiniteIrrep::new(0).into_g_module(), s(1), depth).unwrap()
    }

    #[test]
    fn depth_zero_is_one_dimensional_vacuum() {
        let w = vacuum_module(0);
        assert_eq!(w.dim(), 1);
        assert_eq!(w.basis_label(0), "vac");
        for (a, n0) in [(0, 0), (1, 0), (2, 0), (0, 3)] {
            let out = w.apply_basis(&GeneratorKey::g(a, n0, vec![]), 0).unwrap();
            assert!(out.is_zero(), "{a}({n0}) on vacuum");
        }
        // K0 acts as the level
        assert_eq!(
            w.apply_basis(&GeneratorKey::k0(vec![]), 0).unwrap(),
            ModuleVector::unit(0)
        );
    }

    #[test]
    fn graded_dimensions_match_pbw_count() {
        let w = vacuum_module(2);
        assert_eq!(w.graded_dimensions(), vec![1, 3, 9]);
        assert_eq!(w.dim(), 13);
        // degree-1 basis is e(-1)v, f(-1)v, h(-1)v in order
        assert_eq!(w.basis_label(1), "e(-1)·vac");
        assert_eq!(w.basis_label(2), "f(-1)·vac");
        assert_eq!(w.basis_label(3), "h(-1)·vac");
    }

    #[test]
    fn level_term_appears() {
        // e(1)f(-1)v = [e(1), f(-1)]v = (h(0) + <e,f>K0)v = v at level 1
        let w = vacuum_module(2);
        let f1v = w.apply_basis(&GeneratorKey::g(1, -1, vec![]), 0).unwrap();
        let back = w.apply(&GeneratorKey::g(0, 1, vec![]), &f1v).unwrap();
        assert_eq!(back, ModuleVector::unit(0));
    }

    #[test]
    fn raising_beyond_depth_refuses() {
        let w = vacuum_module(2);
        let deg2 = w
            .apply(
                &GeneratorKey::g(0, -1, vec![]),
                &w.apply_basis(&GeneratorKey::g(0, -1, vec![]), 0).unwrap(),
            )
            .unwrap();
        assert!(!deg2.is_zero());
        let res = w.apply(&GeneratorKey::g(0, -1, vec![]), &deg2);
        assert!(matches!(res, Err(Error::NotWithinValidWindow { .. })));
    }

    #[test]
    fn restriction_bound_holds() {
        let w = vacuum_module(3);
        let n = MultiIndex::zero(0);
        for idx in 0..w.dim() {
            let bound = w.restriction_bound_basis(0, &n, idx).unwrap();
            for a in 0..3 {
                for extra in 1..=4 {
                    let out = w
                        .apply_basis(&GeneratorKey::g(a, bound + extra, vec![]), idx)
                        .unwrap();
                    assert!(out.is_zero());
                }
            }
        }
    }

    #[test]
    fn truncation_consistency_between_depths() {
        // same results at depth D and D+2 on vectors whose outputs stay ≤ D
        let d3 = vacuum_module(3);
        let d5 = vacuum_module(5);
        let keys: Vec<GeneratorKey> = (0..3)
            .flat_map(|a| (-1..=2).map(move |n0| GeneratorKey::g(a, n0, vec![])))
            .collect();
        for idx3 in 0..d3.dim() {
            let (mono, t) = d3.basis[idx3].clone();
            if InducedModule::monomial_degree(&mono) > 2 {
                continue;
            }
            let idx5 = d5.index[&(mono, t)];
            for key in &keys {
                let out3 = d3.apply_basis(key, idx3).unwrap();
                let out5 = d5.apply_basis(key, idx5).unwrap();
                // compare through labels since indices differ across depths
                let as_labels = |m: &InducedModule, v: &ModuleVector| -> Vec<(String, Scalar)> {
                    v.iter().map(|(i, c)| (m.basis_label(*i), c.clone())).collect()
                };
                assert_eq!(as_labels(&d3, &out3), as_labels(&d5, &out5));
            }
        }
    }

    #[test]
    fn commutation_matches_affine_bracket() {
        // [e(1), f(-2)] = h(-1) + 1·<e,f>·δ_{1,2}K0 = h(-1)
        let w = vacuum_module(3);
        let f2v = w.apply_basis(&GeneratorKey::g(1, -2, vec![]), 0).unwrap();
        let e1f2 = w.apply(&GeneratorKey::g(0, 1, vec![]), &f2v).unwrap();
        let h1v = w.apply_basis(&GeneratorKey::g(2, -1, vec![]), 0).unwrap();
        assert_eq!(e1f2, h1v);
    }

    #[test]
    fn weight_of_tracks_creation_operators() {
        let w = vacuum_module(2);
        // e(-1)·vac has h-weight 2, K0-eigenvalue 1
        let idx = w.index[&(vec![(1, 0)], 0)];
        let weight = w.weight_of(idx).unwrap();
        assert_eq!(weight.cartan, vec![s(2)]);
        assert_eq!(weight.k0_value(&MultiIndex::zero(0)).unwrap(), s(1));
    }

    #[test]
    fn nontrivial_inducing_module() {
        // induced from V(1): ground level is two-dimensional, e(0)v1 = v0
        let w = InducedModule::new(FiniteIrrep::new(1).into_g_module(), s(2), 1).unwrap();
        let g1 = w.ground_index(1);
        let out = w.apply_basis(&GeneratorKey::g(0, 0, vec![]), g1).unwrap();
        assert_eq!(out, ModuleVector::unit(w.ground_index(0)));
        // K0 acts as level 2
        assert_eq!(
            w.apply_basis(&GeneratorKey::k0(vec![]), g1).unwrap(),
            ModuleVector::unit(g1).scale(&s(2))
        );
    }
}
