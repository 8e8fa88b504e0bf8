//! Evaluation modules: finite-dimensional sl₂-modules promoted to τ by
//! evaluating the loop variables at nonzero rational points.
//!
//! ```bash
//! cargo run -p toroidal --example evaluation_modules
//! ```

use toroidal::exact::{MultiIndex, Scalar};
use toroidal::lie::GeneratorKey;
use toroidal::modules::{
    eval_annihilator, nilpotency_check, weight_space_check, EvalModule, EvalPoint, FiniteIrrep,
    ModuleVector, TauModule,
};

fn s(n: i64) -> Scalar {
    Scalar::from(n)
}

fn main() -> toroidal::Result<()> {
    // V(1) at z̲ = (2,3): e(1,(1)) v1 = z0·z1·(e v1) = 6 v0
    let module = EvalModule::new(
        vec![FiniteIrrep::new(1).into_g_module()],
        vec![EvalPoint::new(vec![s(2), s(3)])?],
    )?;
    let out = module.apply(&GeneratorKey::g(0, 1, vec![1]), &ModuleVector::unit(1))?;
    println!("e(1,(1)) v1 = {}", out.render(&module));

    // the whole center acts as zero
    let k0 = module.apply(&GeneratorKey::k0(vec![4]), &ModuleVector::unit(0))?;
    let k1 = module.apply(&GeneratorKey::ki(1), &ModuleVector::unit(0))?;
    println!("K0((4)) v0 = {}, K1 v0 = {}", k0.render(&module), k1.render(&module));

    // annihilator polynomials p_i(x) = Π_j (x − z_ij)
    let two_factors = EvalModule::new(
        vec![FiniteIrrep::new(1).into_g_module(), FiniteIrrep::new(1).into_g_module()],
        vec![EvalPoint::new(vec![s(1), s(1)])?, EvalPoint::new(vec![s(2), s(1)])?],
    )?;
    let polys = eval_annihilator(two_factors.points());
    for (i, p) in polys.iter().enumerate() {
        println!(
            "p{i} = {p}   multiplicity-free: {}",
            p.nonzero_roots_multiplicity_free()?
        );
    }

    // weights are diagonal on the declared basis
    let samples: Vec<MultiIndex> = (-2..=2).map(|n| MultiIndex::new(vec![n])).collect();
    println!("weight-space check: {}", weight_space_check(&two_factors, &samples)?);

    // local nilpotency of root-vector modes: e on v1⊗v1 needs three steps
    let v11 = ModuleVector::unit(3);
    let k = nilpotency_check(&two_factors, 0, 0, &MultiIndex::new(vec![0]), &v11, 6)?;
    println!("nilpotency order of e(0,(0)) on v1⊗v1: {k:?}");
    Ok(())
}
