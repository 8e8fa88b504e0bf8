//! Concrete τ-modules behind one action-oracle interface.
//!
//! Four constructors are shipped: evaluation modules on finite-dimensional
//! 𝔤-modules, depth-truncated induced modules over the affine subalgebra
//! (the restricted stand-ins), restricted evaluation modules wrapping affine
//! factors at loop points, and tensor products of any of these. All actions
//! are exact; truncated modules refuse operations that would leave their
//! valid window instead of approximating.

mod checks;
mod descriptor;
mod eval;
mod induced;
mod irrep;
mod restricted_eval;
mod tensor;

pub use checks::{nilpotency_check, representation_check, weight_space_check, RepCheckReport};
pub use descriptor::ModuleDescriptor;
pub use eval::{eval_annihilator, EvalModule, EvalPoint};
pub use induced::InducedModule;
pub use irrep::{FiniteIrrep, GModule};
pub use restricted_eval::{RestrictedEvalModule, RestrictedEvalPoint};
pub use tensor::TensorModule;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::{LaurentPoly, MultiIndex, Scalar};
use crate::lie::{GeneratorKey, SimpleLieData, ToroidalElement};

/// Sparse module vector over a module's indexed basis.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ModuleVector(BTreeMap<usize, Scalar>);

impl ModuleVector {
    pub fn zero() -> Self {
        ModuleVector(BTreeMap::new())
    }

    pub fn unit(idx: usize) -> Self {
        let mut m = BTreeMap::new();
        m.insert(idx, Scalar::one());
        ModuleVector(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coefficient(&self, idx: usize) -> Scalar {
        self.0.get(&idx).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&usize, &Scalar)> {
        self.0.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.keys().copied()
    }

    pub fn add_term(&mut self, idx: usize, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(idx).or_insert_with(Scalar::zero);
        *entry += &c;
        if entry.is_zero() {
            self.0.remove(&idx);
        }
    }

    pub fn add_scaled(&mut self, other: &ModuleVector, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (idx, v) in &other.0 {
            self.add_term(*idx, v * c);
        }
    }

    pub fn add(&self, other: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn sub(&self, other: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        out.add_scaled(other, &-Scalar::one());
        out
    }

    pub fn scale(&self, c: &Scalar) -> ModuleVector {
        if c.is_zero() {
            return ModuleVector::zero();
        }
        ModuleVector(self.0.iter().map(|(i, v)| (*i, v * c)).collect())
    }

    /// Renders with the module's basis labels, e.g. `2·v0 + 1/3·v1`.
    pub fn render(&self, module: &dyn TauModule) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.0
            .iter()
            .map(|(i, c)| {
                let label = module.basis_label(*i);
                if c.is_one() {
                    label
                } else {
                    format!("{c}·{label}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Sparse JSON object {label: "scalar"}.
    pub fn to_json(&self, module: &dyn TauModule) -> serde_json::Value {
        let map: BTreeMap<String, String> = self
            .0
            .iter()
            .map(|(i, c)| (module.basis_label(*i), c.to_string()))
            .collect();
        serde_json::to_value(map).expect("string map serializes")
    }
}

impl fmt::Debug for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|(i, c)| format!("{c}·#{i}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Weight functional on the extended Cartan h̲ = 𝔥 ⊕ span{K₀(n̲)} ⊕ span{Kᵢ}.
///
/// The K₀ part is stored as finitely many (level, point) pairs so that
/// K₀(n̲) ↦ Σ level·z̲^n̲ stays finitely presented for every n̲.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Weight {
    /// Values on the 𝔥-basis, in the algebra's cartan order.
    pub cartan: Vec<Scalar>,
    /// (level ℓ, point z̲): contributes ℓ·z̲^n̲ to the K₀(n̲) eigenvalue.
    pub k0_terms: Vec<(Scalar, Vec<Scalar>)>,
    /// Values on K₁,…,K_r.
    pub ki: Vec<Scalar>,
}

impl Weight {
    pub fn k0_value(&self, n: &MultiIndex) -> Result<Scalar> {
        let mut acc = Scalar::zero();
        for (level, z) in &self.k0_terms {
            if z.len() != n.rank() {
                return Err(Error::RankMismatch { expected: n.rank(), got: z.len() });
            }
            let mut term = level.clone();
            for (j, zj) in z.iter().enumerate() {
                term *= &zj.pow(n[j])?;
            }
            acc += &term;
        }
        Ok(acc)
    }

    pub fn combine(&self, other: &Weight) -> Weight {
        let cartan = self
            .cartan
            .iter()
            .zip(&other.cartan)
            .map(|(a, b)| a + b)
            .collect();
        let mut k0_terms = self.k0_terms.clone();
        k0_terms.extend(other.k0_terms.iter().cloned());
        let ki = self.ki.iter().zip(&other.ki).map(|(a, b)| a + b).collect();
        Weight { cartan, k0_terms, ki }
    }
}

/// Action oracle of a τ-module with basis-indexed vectors and optional
/// grading, restriction, annihilation, and weight metadata.
pub trait TauModule: Send + Sync {
    fn algebra(&self) -> &Arc<SimpleLieData>;

    /// Number of loop variables r (0 for the internal affine factors).
    fn rank(&self) -> usize;

    fn dim(&self) -> usize;

    fn basis_label(&self, idx: usize) -> String;

    /// Action of one generator on one basis vector.
    fn apply_basis(&self, key: &GeneratorKey, idx: usize) -> Result<ModuleVector>;

    /// Linear extension of the action.
    fn apply(&self, key: &GeneratorKey, v: &ModuleVector) -> Result<ModuleVector> {
        let mut out = ModuleVector::zero();
        for (idx, c) in v.iter() {
            out.add_scaled(&self.apply_basis(key, *idx)?, c);
        }
        Ok(out)
    }

    /// Grading degree of a basis vector, for truncated modules.
    fn degree_of(&self, _idx: usize) -> Option<i64> {
        None
    }

    /// Truncation depth: degrees above this are not represented.
    fn valid_depth(&self) -> Option<i64> {
        None
    }

    /// N such that a(n₀,n̲)·(basis idx) = 0 for all n₀ > N, when the module
    /// is restricted. The bound must hold for every n̲.
    fn restriction_bound_basis(&self, _a: usize, _n: &MultiIndex, _idx: usize) -> Option<i64> {
        None
    }

    /// Distinct nonzero roots z with (x₀ − z) | p₀ for a polynomial p₀
    /// annihilating every a-series (evaluation modules).
    fn x0_annihilator_roots(&self) -> Option<Vec<Scalar>> {
        None
    }

    /// Per-variable distinct nonzero roots, i = 1..r, whose products
    /// annihilate both the a-series and the K₀-series.
    fn xi_annihilator_roots(&self) -> Option<Vec<Vec<Scalar>>> {
        None
    }

    fn weight_of(&self, _idx: usize) -> Option<Weight> {
        None
    }

    /// Tensor factor count; 1 for non-tensor modules.
    fn slot_count(&self) -> usize {
        1
    }

    /// Action of a generator through a single tensor slot.
    fn apply_slot_basis(&self, slot: usize, key: &GeneratorKey, idx: usize) -> Result<ModuleVector> {
        if slot == 0 {
            self.apply_basis(key, idx)
        } else {
            Err(Error::IndexOutOfRange { index: slot, dim: 1 })
        }
    }

    fn apply_slot(&self, slot: usize, key: &GeneratorKey, v: &ModuleVector) -> Result<ModuleVector> {
        let mut out = ModuleVector::zero();
        for (idx, c) in v.iter() {
            out.add_scaled(&self.apply_slot_basis(slot, key, *idx)?, c);
        }
        Ok(out)
    }

    /// Upper bound F with (slot a-series)(n₀,·)v = 0 for n₀ > F, when the
    /// slot is restricted on v.
    fn slot_x0_floor(&self, slot: usize, a: usize, v: &ModuleVector) -> Option<i64> {
        if slot != 0 {
            return None;
        }
        let n = MultiIndex::zero(self.rank());
        let mut floor = i64::MIN;
        for idx in v.support() {
            {
                let b = self.restriction_bound_basis(a, &n, idx)?;
                floor = floor.max(b)
            }
        }
        Some(floor)
    }

    /// Annihilator roots of a single tensor slot's a-series.
    fn slot_x0_annihilator_roots(&self, slot: usize) -> Option<Vec<Scalar>> {
        if slot == 0 {
            self.x0_annihilator_roots()
        } else {
            None
        }
    }

    /// Downcast hook used to flatten nested tensor products.
    fn as_tensor(&self) -> Option<&TensorModule> {
        None
    }
}

/// Applies a finite linear combination of generators.
pub fn apply_element(
    module: &dyn TauModule,
    element: &ToroidalElement,
    v: &ModuleVector,
) -> Result<ModuleVector> {
    let mut out = ModuleVector::zero();
    for (key, c) in element.terms() {
        out.add_scaled(&module.apply(key, v)?, c);
    }
    Ok(out)
}

/// Builds Π (x − z) over a root list.
pub fn poly_from_roots(roots: &[Scalar]) -> LaurentPoly {
    let mut p = LaurentPoly::one();
    for z in roots {
        p = &p * &LaurentPoly::linear_root(z);
    }
    p
}

/// Mixed-radix index bookkeeping shared by the product-basis modules.
#[derive(Clone, Debug)]
pub(crate) struct ProductIndex {
    dims: Vec<usize>,
}

impl ProductIndex {
    pub fn new(dims: Vec<usize>) -> Self {
        ProductIndex { dims }
    }

    pub fn total(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn decode(&self, mut idx: usize) -> Vec<usize> {
        let mut out = vec![0; self.dims.len()];
        for (slot, d) in self.dims.iter().enumerate().rev() {
            out[slot] = idx % d;
            idx /= d;
        }
        out
    }

    pub fn encode(&self, parts: &[usize]) -> usize {
        let mut idx = 0;
        for (slot, d) in self.dims.iter().enumerate() {
            idx = idx * d + parts[slot];
        }
        idx
    }
}
