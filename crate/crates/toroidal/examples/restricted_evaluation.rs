//! Restricted evaluation modules: affine factors evaluated at loop points,
//! where K₀(n̲) acts by level-weighted loop monomials.
//!
//! ```bash
//! cargo run -p toroidal --example restricted_evaluation
//! ```

use std::sync::Arc;

use toroidal::categories::{check_membership, CategoryTag, CategoryWitness};
use toroidal::exact::{MultiIndex, Scalar};
use toroidal::formal::ExponentWindow;
use toroidal::lie::GeneratorKey;
use toroidal::modules::{
    FiniteIrrep, InducedModule, ModuleVector, RestrictedEvalModule, RestrictedEvalPoint, TauModule,
};

fn s(n: i64) -> Scalar {
    Scalar::from(n)
}

fn main() -> toroidal::Result<()> {
    // two level-1 vacuum factors at the distinct points z = 2 and z = 3
    let factor = |depth| InducedModule::new(FiniteIrrep::new(0).into_g_module(), s(1), depth);
    let module: Arc<dyn TauModule> = Arc::new(RestrictedEvalModule::new(
        vec![factor(3)?, factor(3)?],
        vec![
            RestrictedEvalPoint::new(vec![s(2)])?,
            RestrictedEvalPoint::new(vec![s(3)])?,
        ],
    )?);

    // K0((n)) acts as 2^n + 3^n on the vacuum⊗vacuum vector
    for n in 0..4 {
        let out = module.apply(&GeneratorKey::k0(vec![n]), &ModuleVector::unit(0))?;
        println!("K0(({n})) vac⊗vac = {}", out.render(module.as_ref()));
    }

    // the loop monomial scales each slot's affine action
    let out = module.apply(&GeneratorKey::g(1, -1, vec![2]), &ModuleVector::unit(0))?;
    println!("f(-1,(2)) vac⊗vac = {}", out.render(module.as_ref()));

    // weight data stays finitely presented: K0((n)) ↦ Σ level·z^n
    let weight = module.weight_of(0).unwrap();
    println!(
        "K0((5)) eigenvalue from weight data: {}",
        weight.k0_value(&MultiIndex::new(vec![5]))?
    );

    // the natural witness puts this module in R̃ on any window
    let witness = CategoryWitness::for_module(module.as_ref(), CategoryTag::RTilde)?;
    println!("witness p1 = {}", witness.pi[0]);
    let window = ExponentWindow::new((-2, 2), vec![(-2, 2)])?;
    let vectors: Vec<ModuleVector> = (0..module.dim())
        .filter(|&i| module.degree_of(i).unwrap_or(0) <= 1)
        .map(ModuleVector::unit)
        .collect();
    let report = check_membership(&module, &witness, &window, &vectors)?;
    println!("R̃ membership on the window: {}", report.pass);
    Ok(())
}
