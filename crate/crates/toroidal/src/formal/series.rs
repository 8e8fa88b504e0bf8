//! Generating series of module actions and the projection ψ.
//!
//! For a ∈ 𝔤 and a fixed vector w, the series a(x₀,x̲)w has coefficients
//! a(n₀,n̲)w indexed by modes. ψ multiplies by a polynomial p₀(x₀) that makes
//! the series lower-truncated in x₀, then by the power-series expansion of
//! 1/p₀, which collapses to the finite sum
//!
//!   ψ(α)(n₀,n̲)w = Σ_{i=0}^{l} βᵢ α(n₀+i, n̲)w,
//!
//! where the βᵢ come from the truncated product of p₀ with its inverse
//! expansion and l is bounded through the certified truncation floor. Zero
//! roots of p₀ are stripped first: multiplying a series by x₀^k and by its
//! inverse expansion shift indices oppositely, so they cancel in ψ and the
//! stripped polynomial computes the same projection.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::{LaurentPoly, MultiIndex, Scalar};
use crate::lie::GeneratorKey;
use crate::modules::{poly_from_roots, ModuleVector, TauModule};

/// Certified truncation data for p₀(x₀)·α(x₀,x̲)w.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SeriesFloor {
    /// The multiplied series is identically zero (p₀ annihilates α on w).
    IdenticallyZero,
    /// Coefficients vanish for all modes n₀ > F.
    At(i64),
}

#[derive(Clone)]
enum SeriesNode {
    Zero,
    /// a-series through one tensor slot of a module action on w.
    SlotAction {
        module: Arc<dyn TauModule>,
        slot: usize,
        a: usize,
        w: ModuleVector,
    },
    Sum(Vec<(Scalar, GeneratingSeries)>),
    /// ψ of `base` with respect to the stripped polynomial `p0` (p0(0) ≠ 0).
    Psi {
        base: GeneratingSeries,
        p0: LaurentPoly,
        floor: SeriesFloor,
    },
}

/// A windowed view of a(x₀,x̲) acting on a fixed vector: coefficients are
/// exact module vectors, computed on demand.
#[derive(Clone)]
pub struct GeneratingSeries {
    rank: usize,
    node: Arc<SeriesNode>,
}

impl GeneratingSeries {
    pub fn zero(rank: usize) -> Self {
        GeneratingSeries { rank, node: Arc::new(SeriesNode::Zero) }
    }

    /// The series of the full module action of basis element `a` on `w`.
    /// Tensor modules split into one summand per slot so that restriction
    /// and annihilation metadata stay attached to the parts that carry them.
    pub fn action(module: Arc<dyn TauModule>, a: usize, w: ModuleVector) -> Self {
        let rank = module.rank();
        let slots = module.slot_count();
        if slots == 1 {
            GeneratingSeries {
                rank,
                node: Arc::new(SeriesNode::SlotAction { module, slot: 0, a, w }),
            }
        } else {
            let parts = (0..slots)
                .map(|slot| {
                    (
                        Scalar::one(),
                        GeneratingSeries {
                            rank,
                            node: Arc::new(SeriesNode::SlotAction {
                                module: module.clone(),
                                slot,
                                a,
                                w: w.clone(),
                            }),
                        },
                    )
                })
                .collect();
            GeneratingSeries { rank, node: Arc::new(SeriesNode::Sum(parts)) }
        }
    }

    /// Linear combination of series over the same rank.
    pub fn sum(parts: Vec<(Scalar, GeneratingSeries)>) -> Result<Self> {
        let rank = parts
            .first()
            .map(|(_, s)| s.rank)
            .ok_or_else(|| Error::InvalidDescriptor("empty series sum".into()))?;
        if parts.iter().any(|(_, s)| s.rank != rank) {
            return Err(Error::RankMismatch { expected: rank, got: 0 });
        }
        Ok(GeneratingSeries { rank, node: Arc::new(SeriesNode::Sum(parts)) })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The exact coefficient a(n₀,n̲)w of the series.
    pub fn coefficient(&self, n0: i64, n: &MultiIndex) -> Result<ModuleVector> {
        match self.node.as_ref() {
            SeriesNode::Zero => Ok(ModuleVector::zero()),
            SeriesNode::SlotAction { module, slot, a, w } => {
                let key = GeneratorKey::g(*a, n0, n.clone());
                module.apply_slot(*slot, &key, w)
            }
            SeriesNode::Sum(parts) => {
                let mut out = ModuleVector::zero();
                for (c, s) in parts {
                    out.add_scaled(&s.coefficient(n0, n)?, c);
                }
                Ok(out)
            }
            SeriesNode::Psi { base, p0, floor } => {
                let coeffs = psi_coefficients(p0, floor, n0)?;
                let mut out = ModuleVector::zero();
                for (i, beta) in coeffs.iter().enumerate() {
                    if !beta.is_zero() {
                        out.add_scaled(&base.coefficient(n0 + i as i64, n)?, beta);
                    }
                }
                Ok(out)
            }
        }
    }

    /// Certifies a floor for p₀(x₀)·(this series)·w, where `p0` has already
    /// been stripped of monomial factors. Fails with `NoTruncationBound`
    /// when the metadata cannot justify any finite bound.
    pub fn truncation_floor(&self, p0: &LaurentPoly) -> Result<SeriesFloor> {
        match self.node.as_ref() {
            SeriesNode::Zero => Ok(SeriesFloor::IdenticallyZero),
            SeriesNode::SlotAction { module, slot, a, w } => {
                if w.is_zero() {
                    return Ok(SeriesFloor::IdenticallyZero);
                }
                if let Some(f) = module.slot_x0_floor(*slot, *a, w) {
                    return Ok(SeriesFloor::At(f));
                }
                if let Some(roots) = module.slot_x0_annihilator_roots(*slot) {
                    let annihilator = poly_from_roots(&roots);
                    if annihilator.divides(p0) {
                        return Ok(SeriesFloor::IdenticallyZero);
                    }
                }
                Err(Error::NoTruncationBound)
            }
            SeriesNode::Sum(parts) => {
                let mut floor = SeriesFloor::IdenticallyZero;
                for (c, s) in parts {
                    if c.is_zero() {
                        continue;
                    }
                    match (floor.clone(), s.truncation_floor(p0)?) {
                        (f, SeriesFloor::IdenticallyZero) => floor = f,
                        (SeriesFloor::IdenticallyZero, f) => floor = f,
                        (SeriesFloor::At(a), SeriesFloor::At(b)) => floor = SeriesFloor::At(a.max(b)),
                    }
                }
                Ok(floor)
            }
            // ψ output is restricted, so any polynomial keeps its floor
            SeriesNode::Psi { floor, .. } => Ok(floor.clone()),
        }
    }

    /// ψ of this series with respect to p₀. The zero roots of p₀ are
    /// stripped; the remaining polynomial must make the series
    /// lower-truncated, as certified by the module metadata.
    pub fn psi(&self, p0: &LaurentPoly) -> Result<GeneratingSeries> {
        let (_, stripped) = p0.strip_monomial_factor()?;
        let floor = self.truncation_floor(&stripped)?;
        Ok(GeneratingSeries {
            rank: self.rank,
            node: Arc::new(SeriesNode::Psi { base: self.clone(), p0: stripped, floor }),
        })
    }

    /// Res_{x₀} x₀^power · (this series), evaluated at loop index n̲.
    ///
    /// With the mode convention α = Σ α(n₀,n̲) x₀^{−n₀−1} x̲^{−n̲−1}, the
    /// residue picks out exactly the coefficient at mode n₀ = power.
    pub fn residue_x0(&self, power: i64, n: &MultiIndex) -> Result<ModuleVector> {
        self.coefficient(power, n)
    }

    /// The finite expansion length l at mode n₀ for ψ with respect to p₀
    /// (0 when the projection vanishes there).
    pub fn psi_expansion_length(&self, p0: &LaurentPoly, n0: i64) -> Result<usize> {
        let (_, stripped) = p0.strip_monomial_factor()?;
        let floor = self.truncation_floor(&stripped)?;
        match floor {
            SeriesFloor::IdenticallyZero => Ok(0),
            SeriesFloor::At(f) if n0 > f => Ok(0),
            SeriesFloor::At(f) => {
                Ok((f - n0) as usize + stripped.degree().unwrap_or(0) as usize)
            }
        }
    }
}

/// The βᵢ of the finite formula at mode n₀: the coefficients of
/// l(1/p₀)·p₀ truncated consistently with the floor. Empty when ψ vanishes
/// at this mode.
fn psi_coefficients(p0: &LaurentPoly, floor: &SeriesFloor, n0: i64) -> Result<Vec<Scalar>> {
    let f = match floor {
        SeriesFloor::IdenticallyZero => return Ok(Vec::new()),
        SeriesFloor::At(f) => *f,
    };
    if n0 > f {
        return Ok(Vec::new());
    }
    let reach = (f - n0) as usize;
    let inverse = p0.expand_inverse(reach)?;
    let deg = p0.degree().unwrap_or(0) as usize;
    let mut beta = vec![Scalar::zero(); reach + deg + 1];
    for i in 0..=reach {
        let inv_i = inverse.coefficient(i);
        if inv_i.is_zero() {
            continue;
        }
        for (t, c) in p0.iter() {
            beta[i + *t as usize] += &(&inv_i * c);
        }
    }
    Ok(beta)
}

/// ψ_R̃(α)(n₀,n̲)w computed through the finite formula.
pub fn psi_project(
    alpha: &GeneratingSeries,
    p0: &LaurentPoly,
    n0: i64,
    n: &MultiIndex,
) -> Result<ModuleVector> {
    alpha.psi(p0)?.coefficient(n0, n)
}

/// Splits α into (tilde, check): tilde = ψ(α) is restricted, check = α − tilde
/// is annihilated by p₀, and α = tilde + check identically.
pub fn decompose_series(
    alpha: &GeneratingSeries,
    p0: &LaurentPoly,
) -> Result<(GeneratingSeries, GeneratingSeries)> {
    let tilde = alpha.psi(p0)?;
    let check = GeneratingSeries::sum(vec![
        (Scalar::one(), alpha.clone()),
        (-Scalar::one(), tilde.clone()),
    ])?;
    Ok((tilde, check))
}
