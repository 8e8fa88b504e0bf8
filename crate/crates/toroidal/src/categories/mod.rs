//! Category membership certification and the representation splitter.
//!
//! Membership in the module categories is always witness-relative and
//! window-relative: a report certifies that the defining annihilation and
//! restrictedness conditions hold for the given witness polynomials, on the
//! given exponent window, for the given sample vectors — never universally.

mod decompose;
mod vandermonde;

pub use decompose::{
    decompose_pi, integrability_transport_check, verify_commuting_actions, DecomposedRep,
    TransportReport,
};
pub use vandermonde::{vandermonde_recombine, vandermonde_separate};

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{LaurentPoly, Scalar};
use crate::formal::{ExponentWindow, GeneratingSeries, SeriesFloor};
use crate::lie::GeneratorKey;
use crate::modules::{poly_from_roots, ModuleVector, TauModule};

/// The four module categories.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CategoryTag {
    ETau,
    ETauPrime,
    RTilde,
    CTau,
}

impl CategoryTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CategoryTag::ETau => "E_tau",
            CategoryTag::ETauPrime => "E_tau_prime",
            CategoryTag::RTilde => "R_tilde",
            CategoryTag::CTau => "C_tau",
        }
    }
}

/// Witness polynomials certifying membership: p₀ (absent for R̃, where
/// restrictedness replaces it) and p₁,…,p_r.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CategoryWitness {
    pub category: CategoryTag,
    pub p0: Option<LaurentPoly>,
    pub pi: Vec<LaurentPoly>,
}

impl CategoryWitness {
    pub fn new(category: CategoryTag, p0: Option<LaurentPoly>, pi: Vec<LaurentPoly>) -> Result<Self> {
        let w = CategoryWitness { category, p0, pi };
        w.validate()?;
        Ok(w)
    }

    /// Structural constraints: nonzero polynomials, p₀ present except for R̃,
    /// and multiplicity-free nonzero roots of p₁..p_r where the category
    /// demands it.
    pub fn validate(&self) -> Result<()> {
        if self.pi.iter().any(LaurentPoly::is_zero) {
            return Err(Error::EmptyPolynomial);
        }
        if let Some(p0) = &self.p0 {
            if p0.is_zero() {
                return Err(Error::EmptyPolynomial);
            }
        }
        match self.category {
            CategoryTag::RTilde => {
                if self.p0.is_some() {
                    return Err(Error::NotInCategory(
                        "R_tilde witnesses carry no p0; restrictedness replaces it".into(),
                    ));
                }
            }
            CategoryTag::ETau | CategoryTag::ETauPrime | CategoryTag::CTau => {
                if self.p0.is_none() {
                    return Err(Error::NotInCategory(format!(
                        "{} witnesses require p0",
                        self.category.as_str()
                    )));
                }
            }
        }
        if matches!(
            self.category,
            CategoryTag::ETauPrime | CategoryTag::RTilde | CategoryTag::CTau
        ) {
            for (i, p) in self.pi.iter().enumerate() {
                if !p.nonzero_roots_multiplicity_free()? {
                    return Err(Error::NotInCategory(format!(
                        "p{} has a repeated nonzero root",
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// Builds the natural witness from a module's annihilator-root metadata:
    /// distinct-root products per variable. For C_τ on mixed tensors, p₀
    /// collects the roots of the evaluation slots only (restricted slots need
    /// no p₀ kill); a module with no evaluation slot gets p₀ = 1.
    pub fn for_module(module: &dyn TauModule, category: CategoryTag) -> Result<Self> {
        let rank = module.rank();
        let pi_roots = module
            .xi_annihilator_roots()
            .ok_or_else(|| Error::NotInCategory("module exposes no loop-variable annihilators".into()))?;
        if pi_roots.len() != rank {
            return Err(Error::RankMismatch { expected: rank, got: pi_roots.len() });
        }
        let pi: Vec<LaurentPoly> = pi_roots.iter().map(|r| poly_from_roots(r)).collect();
        let p0 = match category {
            CategoryTag::RTilde => None,
            CategoryTag::ETau | CategoryTag::ETauPrime => {
                let roots = module.x0_annihilator_roots().ok_or_else(|| {
                    Error::NotInCategory("module exposes no x0 annihilator".into())
                })?;
                Some(poly_from_roots(&roots))
            }
            CategoryTag::CTau => {
                let mut roots: Vec<Scalar> = Vec::new();
                for slot in 0..module.slot_count() {
                    if let Some(slot_roots) = module.slot_x0_annihilator_roots(slot) {
                        for z in slot_roots {
                            if !roots.contains(&z) {
                                roots.push(z);
                            }
                        }
                    }
                }
                Some(poly_from_roots(&roots))
            }
        };
        CategoryWitness::new(category, p0, pi)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "category": self.category.as_str(),
            "p0": self.p0.as_ref().map(LaurentPoly::to_json),
            "pi": self.pi.iter().map(LaurentPoly::to_json).collect::<Vec<_>>(),
        })
    }
}

/// First failing coefficient of a membership check.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Counterexample {
    pub key: String,
    pub vector: String,
    pub exponent: serde_json::Value,
    pub lhs: String,
    pub rhs: String,
}

/// Window- and witness-relative membership certification record.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MembershipReport {
    pub category: String,
    pub witness: serde_json::Value,
    pub window: ExponentWindow,
    pub samples: Vec<String>,
    pub pass: bool,
    pub counterexamples: Vec<Counterexample>,
}

/// How far beyond a certified restriction bound or truncation floor the
/// vanishing of coefficients is verified empirically.
const RESTRICTION_MARGIN: i64 = 5;

struct MembershipChecker<'a> {
    module: &'a Arc<dyn TauModule>,
    window: &'a ExponentWindow,
    report: MembershipReport,
}

impl<'a> MembershipChecker<'a> {
    fn fail(
        &mut self,
        key: String,
        vector: &ModuleVector,
        exponent: serde_json::Value,
        lhs: String,
        rhs: String,
    ) {
        self.report.pass = false;
        if self.report.counterexamples.is_empty() {
            self.report.counterexamples.push(Counterexample {
                key,
                vector: vector.render(self.module.as_ref()),
                exponent,
                lhs,
                rhs,
            });
        }
    }

    /// p(xᵥ)·series = 0 at every window coefficient: the shifted sum
    /// Σ_t p_t · series(.. +t·e_v ..)w must vanish. `a` selects an a-series;
    /// `None` selects the K₀-series (loop variables only).
    fn annihilation_in_variable(
        &mut self,
        var: usize,
        p: &LaurentPoly,
        a: Option<usize>,
        w: &ModuleVector,
    ) -> Result<()> {
        // the K0 series has no x0 variable: one sweep over n̲ suffices
        let points = if a.is_some() {
            self.window.pairs()
        } else {
            self.window.multi_indices().into_iter().map(|n| (0, n)).collect()
        };
        for (n0, n) in points {
            let mut acc = ModuleVector::zero();
            for (t, c) in p.iter() {
                let key = match a {
                    Some(a_idx) => {
                        if var == 0 {
                            GeneratorKey::g(a_idx, n0 + t, n.clone())
                        } else {
                            GeneratorKey::g(a_idx, n0, n.bump(var - 1, *t))
                        }
                    }
                    None => GeneratorKey::k0(n.bump(var - 1, *t)),
                };
                acc.add_scaled(&self.module.apply(&key, w)?, c);
            }
            if !acc.is_zero() {
                let source = match a {
                    Some(a_idx) => self.module.algebra().label(a_idx).to_string(),
                    None => "K0".into(),
                };
                self.fail(
                    format!("p{var}(x{var})·{source}-series"),
                    w,
                    serde_json::json!({"n0": n0, "n": n.entries()}),
                    acc.render(self.module.as_ref()),
                    "0".into(),
                );
                return Ok(());
            }
        }
        Ok(())
    }

    fn xi_annihilations(&mut self, witness: &CategoryWitness, w: &ModuleVector, with_k0: bool) -> Result<()> {
        for (i, p) in witness.pi.iter().enumerate() {
            for a in 0..self.module.algebra().dim() {
                self.annihilation_in_variable(i + 1, p, Some(a), w)?;
                if !self.report.pass {
                    return Ok(());
                }
            }
            if with_k0 {
                self.annihilation_in_variable(i + 1, p, None, w)?;
                if !self.report.pass {
                    return Ok(());
                }
            }
        }
        Ok(())
    }

    fn x0_annihilation(&mut self, p0: &LaurentPoly, w: &ModuleVector) -> Result<()> {
        for a in 0..self.module.algebra().dim() {
            self.annihilation_in_variable(0, p0, Some(a), w)?;
            if !self.report.pass {
                return Ok(());
            }
        }
        Ok(())
    }

    /// Restrictedness via the declared bound: a(n₀,n̲)w = 0 for n₀ in
    /// (bound, bound + margin], every a and every windowed n̲.
    fn restrictedness(&mut self, w: &ModuleVector) -> Result<()> {
        for a in 0..self.module.algebra().dim() {
            for n in self.window.multi_indices() {
                let mut bound: Option<i64> = Some(i64::MIN);
                for idx in w.support() {
                    bound = match (bound, self.module.restriction_bound_basis(a, &n, idx)) {
                        (Some(b), Some(nb)) => Some(b.max(nb)),
                        _ => None,
                    };
                }
                let Some(bound) = bound else {
                    self.fail(
                        format!("{}-series restriction bound", self.module.algebra().label(a)),
                        w,
                        serde_json::json!({"n": n.entries()}),
                        "no declared bound".into(),
                        "finite bound".into(),
                    );
                    return Ok(());
                };
                for n0 in bound + 1..=bound + RESTRICTION_MARGIN {
                    let out = self.module.apply(&GeneratorKey::g(a, n0, n.clone()), w)?;
                    if !out.is_zero() {
                        self.fail(
                            format!("{}({n0},{n})", self.module.algebra().label(a)),
                            w,
                            serde_json::json!({"n0": n0, "n": n.entries()}),
                            out.render(self.module.as_ref()),
                            "0".into(),
                        );
                        return Ok(());
                    }
                }
            }
        }
        Ok(())
    }

    /// p₀-multiplied restrictedness: a certified floor exists and the
    /// multiplied series vanishes above it (checked on a margin).
    fn p0_truncated_restrictedness(&mut self, p0: &LaurentPoly, w: &ModuleVector) -> Result<()> {
        let (_, stripped) = p0.strip_monomial_factor()?;
        for a in 0..self.module.algebra().dim() {
            let series = GeneratingSeries::action(self.module.clone(), a, w.clone());
            let floor = match series.truncation_floor(&stripped) {
                Ok(f) => f,
                Err(Error::NoTruncationBound) => {
                    self.fail(
                        format!("p0·{}-series truncation", self.module.algebra().label(a)),
                        w,
                        serde_json::json!({}),
                        "no certifiable truncation bound".into(),
                        "finite floor".into(),
                    );
                    return Ok(());
                }
                Err(e) => return Err(e),
            };
            let start = match floor {
                SeriesFloor::IdenticallyZero => self.window.x0.0,
                SeriesFloor::At(f) => f + 1,
            };
            for n in self.window.multi_indices() {
                for n0 in start..start + RESTRICTION_MARGIN {
                    let mut acc = ModuleVector::zero();
                    for (t, c) in stripped.iter() {
                        let key = GeneratorKey::g(a, n0 + t, n.clone());
                        acc.add_scaled(&self.module.apply(&key, w)?, c);
                    }
                    if !acc.is_zero() {
                        self.fail(
                            format!("p0·{}-series above floor", self.module.algebra().label(a)),
                            w,
                            serde_json::json!({"n0": n0, "n": n.entries()}),
                            acc.render(self.module.as_ref()),
                            "0".into(),
                        );
                        return Ok(());
                    }
                }
            }
        }
        Ok(())
    }
}

/// Verifies the category axioms for the witness on the window and samples.
pub fn check_membership(
    module: &Arc<dyn TauModule>,
    witness: &CategoryWitness,
    window: &ExponentWindow,
    vectors: &[ModuleVector],
) -> Result<MembershipReport> {
    witness.validate()?;
    if witness.pi.len() != module.rank() {
        return Err(Error::RankMismatch { expected: module.rank(), got: witness.pi.len() });
    }
    let mut checker = MembershipChecker {
        module,
        window,
        report: MembershipReport {
            category: witness.category.as_str().into(),
            witness: witness.to_json(),
            window: window.clone(),
            samples: vectors.iter().map(|v| v.render(module.as_ref())).collect(),
            pass: true,
            counterexamples: Vec::new(),
        },
    };
    for w in vectors {
        match witness.category {
            CategoryTag::ETau | CategoryTag::ETauPrime => {
                let p0 = witness.p0.as_ref().expect("validated");
                checker.x0_annihilation(p0, w)?;
                if checker.report.pass {
                    checker.xi_annihilations(witness, w, false)?;
                }
                // center triviality on evaluation-type modules
                if checker.report.pass {
                    for n in window.multi_indices() {
                        let out = module.apply(&GeneratorKey::k0(n.clone()), w)?;
                        if !out.is_zero() {
                            checker.fail(
                                "K0 center triviality".into(),
                                w,
                                serde_json::json!({"n": n.entries()}),
                                out.render(module.as_ref()),
                                "0".into(),
                            );
                            break;
                        }
                    }
                }
            }
            CategoryTag::RTilde => {
                checker.restrictedness(w)?;
                if checker.report.pass {
                    checker.xi_annihilations(witness, w, true)?;
                }
            }
            CategoryTag::CTau => {
                let p0 = witness.p0.as_ref().expect("validated");
                checker.p0_truncated_restrictedness(p0, w)?;
                if checker.report.pass {
                    checker.xi_annihilations(witness, w, true)?;
                }
            }
        }
        if checker.report.pass {
            for i in 1..=module.rank() {
                let out = module.apply(&GeneratorKey::ki(i), w)?;
                if !out.is_zero() {
                    checker.fail(
                        format!("K{i} centrality"),
                        w,
                        serde_json::json!({}),
                        out.render(module.as_ref()),
                        "0".into(),
                    );
                }
            }
        }
        if !checker.report.pass {
            break;
        }
    }
    Ok(checker.report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modules::{
        EvalModule, EvalPoint, FiniteIrrep, InducedModule, RestrictedEvalModule,
        RestrictedEvalPoint, TensorModule,
    };

    fn s(n: i64) -> Scalar {
        Scalar::from(n)
    }

    fn eval_module() -> Arc<dyn TauModule> {
        Arc::new(
            EvalModule::new(
                vec![FiniteIrrep::new(1).into_g_module(), FiniteIrrep::new(1).into_g_module()],
                vec![
                    EvalPoint::new(vec![s(2), s(3)]).unwrap(),
                    EvalPoint::new(vec![s(4), s(5)]).unwrap(),
                ],
            )
            .unwrap(),
        )
    }

    fn restricted_module() -> Arc<dyn TauModule> {
        let induced = InducedModule::new(FiniteIrrep::new(0).into_g_module(), s(1), 3).unwrap();
        Arc::new(
            RestrictedEvalModule::new(
                vec![induced],
                vec![RestrictedEvalPoint::new(vec![s(2)]).unwrap()],
            )
            .unwrap(),
        )
    }

    fn mixed_module() -> Arc<dyn TauModule> {
        Arc::new(TensorModule::new(vec![restricted_module(), eval_module()]).unwrap())
    }

    fn low_vectors(module: &Arc<dyn TauModule>, max_degree: i64, count: usize) -> Vec<ModuleVector> {
        (0..module.dim())
            .filter(|&i| module.degree_of(i).unwrap_or(0) <= max_degree)
            .take(count)
            .map(ModuleVector::unit)
            .collect()
    }

    #[test]
    fn eval_module_is_in_e_tau_prime() {
        let m = eval_module();
        let witness = CategoryWitness::for_module(m.as_ref(), CategoryTag::ETauPrime).unwrap();
        let window = ExponentWindow::new((-3, 3), vec![(-2, 2)]).unwrap();
        let vectors = low_vectors(&m, 0, 4);
        let report = check_membership(&m, &witness, &window, &vectors).unwrap();
        assert!(report.pass, "{:?}", report.counterexamples);
    }

    #[test]
    fn restricted_eval_is_in_r_tilde_but_eval_is_not() {
        let m = restricted_module();
        let witness = CategoryWitness::for_module(m.as_ref(), CategoryTag::RTilde).unwrap();
        let window = ExponentWindow::new((-2, 2), vec![(-2, 2)]).unwrap();
        let vectors = low_vectors(&m, 1, 4);
        let report = check_membership(&m, &witness, &window, &vectors).unwrap();
        assert!(report.pass, "{:?}", report.counterexamples);

        // an evaluation module has no restriction bound: R̃ check fails
        let e = eval_module();
        let bad = CategoryWitness::new(
            CategoryTag::RTilde,
            None,
            vec![poly_from_roots(&[s(3), s(5)])],
        )
        .unwrap();
        let report = check_membership(&e, &bad, &window, &low_vectors(&e, 0, 2)).unwrap();
        assert!(!report.pass);
        assert_eq!(report.counterexamples.len(), 1);
    }

    #[test]
    fn mixed_tensor_is_in_c_tau_only() {
        let m = mixed_module();
        let window = ExponentWindow::new((-2, 2), vec![(-1, 1)]).unwrap();
        let vectors = low_vectors(&m, 1, 4);

        let witness = CategoryWitness::for_module(m.as_ref(), CategoryTag::CTau).unwrap();
        let report = check_membership(&m, &witness, &window, &vectors).unwrap();
        assert!(report.pass, "{:?}", report.counterexamples);

        // not restricted (the eval slot keeps high modes alive)
        let r_witness = CategoryWitness::new(CategoryTag::RTilde, None, witness.pi.clone()).unwrap();
        let report = check_membership(&m, &r_witness, &window, &vectors).unwrap();
        assert!(!report.pass);

        // no polynomial annihilates the restricted slot in x0
        let e_witness = CategoryWitness::new(
            CategoryTag::ETau,
            Some(poly_from_roots(&[s(2), s(4)])),
            witness.pi.clone(),
        )
        .unwrap();
        let report = check_membership(&m, &e_witness, &window, &vectors).unwrap();
        assert!(!report.pass);
    }

    #[test]
    fn witness_validation_rejects_repeated_roots() {
        let doubled = poly_from_roots(&[s(2), s(2)]);
        let err = CategoryWitness::new(CategoryTag::ETauPrime, Some(LaurentPoly::one()), vec![doubled]);
        assert!(matches!(err, Err(Error::NotInCategory(_))));
        // E_tau has no multiplicity-freeness requirement
        let doubled = poly_from_roots(&[s(2), s(2)]);
        assert!(CategoryWitness::new(CategoryTag::ETau, Some(LaurentPoly::one()), vec![doubled]).is_ok());
    }
}
