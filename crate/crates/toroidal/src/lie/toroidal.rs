//! The toroidal Lie algebra τ: spanning generators and the exact bracket.
//!
//! τ = (𝔤 ⊗ ℂ[t₀^±1] ⊕ ℂK₀) ⊗ ℂ[t₁^±1,…,t_r^±1] ⊕ Σᵢ ℂKᵢ, with
//!
//! [a(n₀,n̲), b(m₀,m̲)] = [a,b](n₀+m₀, n̲+m̲)
//!                      + n₀⟨a,b⟩ δ_{n₀+m₀,0} K₀(n̲+m̲)
//!                      + ⟨a,b⟩ δ_{n₀+m₀,0} δ_{n̲+m̲,0} Σᵢ nᵢKᵢ,
//!
//! and K₀(n̲), Kᵢ central.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::{MultiIndex, Scalar};
use crate::lie::simple::{GVector, SimpleLieData};

/// One spanning generator of τ.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GeneratorKey {
    /// a(n₀, n̲) for a basis element of 𝔤.
    G { idx: usize, n0: i64, n: MultiIndex },
    /// K₀ ⊗ t^n̲.
    K0 { n: MultiIndex },
    /// Kᵢ, 1 ≤ i ≤ r.
    Ki { i: usize },
}

impl GeneratorKey {
    pub fn g(idx: usize, n0: i64, n: impl Into<MultiIndex>) -> Self {
        GeneratorKey::G { idx, n0, n: n.into() }
    }

    pub fn k0(n: impl Into<MultiIndex>) -> Self {
        GeneratorKey::K0 { n: n.into() }
    }

    pub fn ki(i: usize) -> Self {
        GeneratorKey::Ki { i }
    }

    pub fn is_central(&self) -> bool {
        !matches!(self, GeneratorKey::G { .. })
    }

    /// Checks the key against an ambient configuration.
    pub fn check(&self, algebra: &SimpleLieData, rank: usize) -> Result<()> {
        match self {
            GeneratorKey::G { idx, n, .. } => {
                if *idx >= algebra.dim() {
                    return Err(Error::IndexOutOfRange { index: *idx, dim: algebra.dim() });
                }
                if n.rank() != rank {
                    return Err(Error::RankMismatch { expected: rank, got: n.rank() });
                }
            }
            GeneratorKey::K0 { n } => {
                if n.rank() != rank {
                    return Err(Error::RankMismatch { expected: rank, got: n.rank() });
                }
            }
            GeneratorKey::Ki { i } => {
                if *i < 1 || *i > rank {
                    return Err(Error::IndexOutOfRange { index: *i, dim: rank });
                }
            }
        }
        Ok(())
    }

    /// Human-readable rendering with the algebra's basis labels.
    pub fn render(&self, algebra: &SimpleLieData) -> String {
        match self {
            GeneratorKey::G { idx, n0, n } => format!("{}({n0},{n})", algebra.label(*idx)),
            GeneratorKey::K0 { n } => format!("K0({n})"),
            GeneratorKey::Ki { i } => format!("K{i}"),
        }
    }
}

/// Finite linear combination of τ generators over a fixed (𝔤, r).
#[derive(Clone)]
pub struct ToroidalElement {
    algebra: Arc<SimpleLieData>,
    rank: usize,
    terms: BTreeMap<GeneratorKey, Scalar>,
}

impl PartialEq for ToroidalElement {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank
            && self.algebra.name() == other.algebra.name()
            && self.terms == other.terms
    }
}

impl Eq for ToroidalElement {}

impl ToroidalElement {
    pub fn zero(algebra: Arc<SimpleLieData>, rank: usize) -> Self {
        ToroidalElement { algebra, rank, terms: BTreeMap::new() }
    }

    pub fn generator(algebra: Arc<SimpleLieData>, rank: usize, key: GeneratorKey) -> Result<Self> {
        let mut el = ToroidalElement::zero(algebra, rank);
        el.add_term(key, Scalar::one())?;
        Ok(el)
    }

    /// a(n₀,n̲) for an arbitrary 𝔤-element given by coefficients.
    pub fn from_g_vector(
        algebra: Arc<SimpleLieData>,
        rank: usize,
        coeffs: &GVector,
        n0: i64,
        n: &MultiIndex,
    ) -> Result<Self> {
        let mut el = ToroidalElement::zero(algebra, rank);
        for (idx, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                el.add_term(GeneratorKey::g(idx, n0, n.clone()), c.clone())?;
            }
        }
        Ok(el)
    }

    pub fn algebra(&self) -> &Arc<SimpleLieData> {
        &self.algebra
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GeneratorKey, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, key: &GeneratorKey) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, key: GeneratorKey, c: Scalar) -> Result<()> {
        key.check(&self.algebra, self.rank)?;
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(key.clone()).or_insert_with(Scalar::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
        Ok(())
    }

    pub fn add(&self, other: &ToroidalElement) -> Result<ToroidalElement> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ToroidalElement) -> Result<ToroidalElement> {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> ToroidalElement {
        if c.is_zero() {
            return ToroidalElement::zero(self.algebra.clone(), self.rank);
        }
        ToroidalElement {
            algebra: self.algebra.clone(),
            rank: self.rank,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    fn check_compatible(&self, other: &ToroidalElement) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { expected: self.rank, got: other.rank });
        }
        if !Arc::ptr_eq(&self.algebra, &other.algebra) && self.algebra.name() != other.algebra.name() {
            return Err(Error::InvalidAlgebra(format!(
                "mixing algebras {} and {}",
                self.algebra.name(),
                other.algebra.name()
            )));
        }
        Ok(())
    }

    /// The Lie bracket, by bilinear extension of the defining relation.
    /// All K-generators are central.
    pub fn bracket(&self, other: &ToroidalElement) -> Result<ToroidalElement> {
        self.check_compatible(other)?;
        let mut out = ToroidalElement::zero(self.algebra.clone(), self.rank);
        for (ku, cu) in &self.terms {
            let GeneratorKey::G { idx: a, n0, n } = ku else { continue };
            for (kv, cv) in &other.terms {
                let GeneratorKey::G { idx: b, n0: m0, n: m } = kv else { continue };
                let c = cu * cv;
                let mode_sum = n0 + m0;
                let index_sum = n.checked_add(m)?;
                for (k, t) in self.algebra.bracket_basis(*a, *b).iter().enumerate() {
                    if !t.is_zero() {
                        out.add_term(GeneratorKey::g(k, mode_sum, index_sum.clone()), &c * t)?;
                    }
                }
                if mode_sum == 0 {
                    let pairing = self.algebra.form_basis(*a, *b);
                    if !pairing.is_zero() {
                        out.add_term(
                            GeneratorKey::k0(index_sum.clone()),
                            &(&c * pairing) * &Scalar::from(*n0),
                        )?;
                        if index_sum.is_zero() {
                            for i in 0..self.rank {
                                if n[i] != 0 {
                                    out.add_term(
                                        GeneratorKey::ki(i + 1),
                                        &(&c * pairing) * &Scalar::from(n[i]),
                                    )?;
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// True iff `[u,[v,w]] + [v,[w,u]] + [w,[u,v]] = 0` exactly.
    pub fn jacobi_check(u: &ToroidalElement, v: &ToroidalElement, w: &ToroidalElement) -> Result<bool> {
        let t1 = u.bracket(&v.bracket(w)?)?;
        let t2 = v.bracket(&w.bracket(u)?)?;
        let t3 = w.bracket(&u.bracket(v)?)?;
        Ok(t1.add(&t2)?.add(&t3)?.is_zero())
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(k, c)| {
                let key = k.render(&self.algebra);
                if c.is_one() {
                    key
                } else {
                    format!("{c}·{key}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Debug for ToroidalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}
