//! Restricted evaluation modules: affine (rank-0, restricted) factors
//! evaluated at loop points z̲ ∈ (ℚ*)^r and tensored.
//!
//! a(n₀,n̲)(v₁⊗⋯⊗v_M) = Σᵢ z̲ᵢ^{n̲} (v₁⊗⋯⊗a(n₀)vᵢ⊗⋯⊗v_M),
//! K₀(n̲)(v₁⊗⋯⊗v_M) = Σᵢ z̲ᵢ^{n̲} (v₁⊗⋯⊗K₀vᵢ⊗⋯⊗v_M),
//! and every Kᵢ acts as zero.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::{MultiIndex, Scalar};
use crate::lie::{GeneratorKey, SimpleLieData};
use crate::modules::{ModuleVector, ProductIndex, TauModule, Weight};

/// A point (z₁,…,z_r) with every component nonzero (no z₀ component).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RestrictedEvalPoint(Vec<Scalar>);

impl RestrictedEvalPoint {
    pub fn new(coords: Vec<Scalar>) -> Result<Self> {
        if coords.iter().any(Scalar::is_zero) {
            return Err(Error::ZeroPoint);
        }
        Ok(RestrictedEvalPoint(coords))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    /// z̲^{n̲} = Π zᵢ^{nᵢ}.
    pub fn monomial_value(&self, n: &MultiIndex) -> Result<Scalar> {
        if n.rank() != self.0.len() {
            return Err(Error::RankMismatch { expected: self.0.len(), got: n.rank() });
        }
        let mut acc = Scalar::one();
        for (i, z) in self.0.iter().enumerate() {
            acc *= &z.pow(n[i])?;
        }
        Ok(acc)
    }
}

/// Tensor of restricted affine factors at loop points.
pub struct RestrictedEvalModule {
    algebra: Arc<SimpleLieData>,
    rank: usize,
    factors: Vec<Arc<dyn TauModule>>,
    points: Vec<RestrictedEvalPoint>,
    prod: ProductIndex,
}

impl RestrictedEvalModule {
    /// Factors must be rank-0 modules carrying restriction bounds.
    pub fn new(factors: Vec<Arc<dyn TauModule>>, points: Vec<RestrictedEvalPoint>) -> Result<Self> {
        if factors.is_empty() || factors.len() != points.len() {
            return Err(Error::InvalidDescriptor(
                "restricted evaluation needs matching, nonempty factor and point lists".into(),
            ));
        }
        let algebra = factors[0].algebra().clone();
        let rank = points[0].rank();
        for f in &factors {
            if f.rank() != 0 {
                return Err(Error::RankMismatch { expected: 0, got: f.rank() });
            }
            if f.algebra().name() != algebra.name() {
                return Err(Error::InvalidDescriptor("mixed algebras across factors".into()));
            }
            if f.restriction_bound_basis(0, &MultiIndex::zero(0), 0).is_none() {
                return Err(Error::MissingRestrictionBound);
            }
        }
        for p in &points {
            if p.rank() != rank {
                return Err(Error::RankMismatch { expected: rank, got: p.rank() });
            }
        }
        let prod = ProductIndex::new(factors.iter().map(|f| f.dim()).collect());
        Ok(RestrictedEvalModule { algebra, rank, factors, points, prod })
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[Arc<dyn TauModule>] {
        &self.factors
    }

    pub fn points(&self) -> &[RestrictedEvalPoint] {
        &self.points
    }

    fn affine_key(key: &GeneratorKey) -> GeneratorKey {
        match key {
            GeneratorKey::G { idx, n0, .. } => GeneratorKey::g(*idx, *n0, Vec::new()),
            GeneratorKey::K0 { .. } => GeneratorKey::k0(Vec::new()),
            GeneratorKey::Ki { .. } => unreachable!("Ki handled before projection"),
        }
    }

    fn loop_scale(&self, factor: usize, key: &GeneratorKey) -> Result<Scalar> {
        let n = match key {
            GeneratorKey::G { n, .. } | GeneratorKey::K0 { n } => n,
            GeneratorKey::Ki { .. } => unreachable!(),
        };
        self.points[factor].monomial_value(n)
    }
}

impl TauModule for RestrictedEvalModule {
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
            .map(|(j, &k)| self.factors[j].basis_label(k))
            .collect::<Vec<_>>()
            .join("⊗")
    }

    fn apply_basis(&self, key: &GeneratorKey, idx: usize) -> Result<ModuleVector> {
        key.check(&self.algebra, self.rank)?;
        if matches!(key, GeneratorKey::Ki { .. }) {
            return Ok(ModuleVector::zero());
        }
        let parts = self.prod.decode(idx);
        let affine = Self::affine_key(key);
        let mut out = ModuleVector::zero();
        for j in 0..self.factors.len() {
            let scale = self.loop_scale(j, key)?;
            let slot = self.factors[j].apply_basis(&affine, parts[j])?;
            for (i, c) in slot.iter() {
                let mut np = parts.clone();
                np[j] = *i;
                out.add_term(self.prod.encode(&np), c * &scale);
            }
        }
        Ok(out)
    }

    fn degree_of(&self, idx: usize) -> Option<i64> {
        let parts = self.prod.decode(idx);
        let mut total = 0;
        for (j, &k) in parts.iter().enumerate() {
            total += self.factors[j].degree_of(k)?;
        }
        Some(total)
    }

    fn valid_depth(&self) -> Option<i64> {
        self.factors.iter().filter_map(|f| f.valid_depth()).min()
    }

    fn restriction_bound_basis(&self, a: usize, _n: &MultiIndex, idx: usize) -> Option<i64> {
        let parts = self.prod.decode(idx);
        let zero = MultiIndex::zero(0);
        let mut bound = i64::MIN;
        for (j, &k) in parts.iter().enumerate() {
            bound = bound.max(self.factors[j].restriction_bound_basis(a, &zero, k)?);
        }
        Some(bound)
    }

    fn xi_annihilator_roots(&self) -> Option<Vec<Vec<Scalar>>> {
        Some(
            (0..self.rank)
                .map(|i| {
                    let mut roots: Vec<Scalar> = Vec::new();
                    for p in &self.points {
                        let z = &p.coords()[i];
                        if !roots.contains(z) {
                            roots.push(z.clone());
                        }
                    }
                    roots
                })
                .collect(),
        )
    }

    fn weight_of(&self, idx: usize) -> Option<Weight> {
        let parts = self.prod.decode(idx);
        let cartan_len = self.algebra.cartan().len();
        let mut cartan = vec![Scalar::zero(); cartan_len];
        let mut k0_terms = Vec::new();
        for (j, &k) in parts.iter().enumerate() {
            let w = self.factors[j].weight_of(k)?;
            for (pos, value) in cartan.iter_mut().enumerate() {
                *value += &w.cartan[pos];
            }
            // the wrapper rescales each factor's K0 eigenvalue by z̲ⱼ^{n̲}
            for (level, z) in w.k0_terms {
                debug_assert!(z.is_empty(), "affine factors carry point-free K0 terms");
                k0_terms.push((level, self.points[j].coords().to_vec()));
            }
        }
        Some(Weight {
            cartan,
            k0_terms,
            ki: vec![Scalar::zero(); self.rank],
        })
    }
}
