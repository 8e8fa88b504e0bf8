//! The projection ψ: identity on restricted series, zero on evaluation
//! series, and the exact splitting of mixed series into the two parts.
//!
//! ```bash
//! cargo run -p toroidal --example psi_projection
//! ```

use std::sync::Arc;

use toroidal::exact::{LaurentPoly, MultiIndex, Scalar};
use toroidal::formal::{decompose_series, psi_project, ExponentWindow, GeneratingSeries};
use toroidal::modules::{
    EvalModule, EvalPoint, FiniteIrrep, InducedModule, ModuleVector, RestrictedEvalModule,
    RestrictedEvalPoint, TauModule, TensorModule,
};

fn s(n: i64) -> Scalar {
    Scalar::from(n)
}

fn main() -> toroidal::Result<()> {
    // W = (induced depth 4 at z = 2) ⊗ (evaluation V(1) at z̲ = (3,5))
    let induced = InducedModule::new(FiniteIrrep::new(0).into_g_module(), s(1), 4)?;
    let restricted: Arc<dyn TauModule> = Arc::new(RestrictedEvalModule::new(
        vec![induced],
        vec![RestrictedEvalPoint::new(vec![s(2)])?],
    )?);
    let eval: Arc<dyn TauModule> = Arc::new(EvalModule::new(
        vec![FiniteIrrep::new(1).into_g_module()],
        vec![EvalPoint::new(vec![s(3), s(5)])?],
    )?);
    let tensor = Arc::new(TensorModule::new(vec![restricted, eval])?);
    let module: Arc<dyn TauModule> = tensor.clone();

    // the e-series acting on vac⊗v1 mixes both behaviors
    let w = ModuleVector::unit(1);
    let alpha = GeneratingSeries::action(module.clone(), 0, w.clone());

    // p0 = x − 3 annihilates the evaluation slot, so ψ keeps exactly the
    // restricted part
    let p0 = LaurentPoly::linear_root(&s(3));
    let n = MultiIndex::new(vec![1]);
    for n0 in [-1, 0, 1] {
        let full = alpha.coefficient(n0, &n)?;
        let projected = psi_project(&alpha, &p0, n0, &n)?;
        println!("n0 = {n0:2}:");
        println!("  α(n0,(1))w   = {}", full.render(module.as_ref()));
        println!("  ψ(α)(n0,(1)) = {}", projected.render(module.as_ref()));
    }

    // the decomposition α = tilde + check is exact on every coefficient,
    // with tilde restricted and check annihilated by p0
    let (tilde, check) = decompose_series(&alpha, &p0)?;
    let window = ExponentWindow::new((-2, 2), vec![(-1, 1)])?;
    let mut verified = 0;
    for (n0, n) in window.pairs() {
        let a = alpha.coefficient(n0, &n)?;
        let t = tilde.coefficient(n0, &n)?;
        let c = check.coefficient(n0, &n)?;
        assert_eq!(t.add(&c), a);
        // p0·check = 0 coefficient-wise
        let mut pc = ModuleVector::zero();
        for (exp, coef) in p0.iter() {
            pc.add_scaled(&check.coefficient(n0 + exp, &n)?, coef);
        }
        assert!(pc.is_zero());
        verified += 1;
    }
    println!("\ndecomposition verified on {verified} window coefficients");

    // well-definedness: any valid p0 gives the same projection
    let p0_alt = &p0 * &LaurentPoly::linear_root(&s(11));
    let same = window.pairs().iter().all(|(n0, n)| {
        psi_project(&alpha, &p0, *n0, n).unwrap() == psi_project(&alpha, &p0_alt, *n0, n).unwrap()
    });
    println!("ψ agrees for p0 and p0·(x−11): {same}");
    Ok(())
}
