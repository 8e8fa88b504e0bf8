//! Generating-function consistency: the commutator of generator series,
//! extracted through the delta calculus, matches the indexed bracket — in
//! the abstract algebra and acting on modules.
//!
//! ```bash
//! cargo run -p toroidal --example series_consistency
//! ```

use toroidal::exact::{MultiIndex, Scalar};
use toroidal::formal::{commutator_series_check, eq_bracket_series_coefficient, ExponentWindow};
use toroidal::lie::{GeneratorKey, SimpleLieData, ToroidalElement};
use toroidal::modules::{
    EvalModule, EvalPoint, FiniteIrrep, InducedModule, ModuleVector, RestrictedEvalModule,
    RestrictedEvalPoint,
};

fn s(n: i64) -> Scalar {
    Scalar::from(n)
}

fn main() -> toroidal::Result<()> {
    let sl2 = SimpleLieData::sl2();
    let rank = 2;

    // one abstract coefficient: the delta-product extraction of
    // [e(x0,x̲), f(y0,y̲)] at matched indices carries the K0 and K terms
    let n = MultiIndex::new(vec![1, 0]);
    let m = MultiIndex::new(vec![-1, 0]);
    let extracted = eq_bracket_series_coefficient(&sl2, rank, 0, 1, 2, &n, -2, &m)?;
    let direct = ToroidalElement::generator(sl2.clone(), rank, GeneratorKey::g(0, 2, n.clone()))?
        .bracket(&ToroidalElement::generator(sl2.clone(), rank, GeneratorKey::g(1, -2, m.clone()))?)?;
    println!("series extraction: {}", extracted.render());
    println!("indexed bracket:   {}", direct.render());
    assert_eq!(extracted, direct);

    // acting on an evaluation module, the central terms vanish and the delta
    // products collapse to evaluations
    let eval = EvalModule::new(
        vec![FiniteIrrep::new(1).into_g_module()],
        vec![EvalPoint::new(vec![s(2), s(3)])?],
    )?;
    let window = ExponentWindow::new((-2, 2), vec![(-1, 1)])?;
    println!(
        "\ncommutator series on the evaluation module: {}",
        commutator_series_check(0, 1, &eval, &ModuleVector::unit(0), &window)?
    );

    // on a level-1 restricted module the K0 delta-derivative term appears
    // with coefficient <e,f> = 1 and still matches
    let induced = InducedModule::new(FiniteIrrep::new(0).into_g_module(), s(1), 3)?;
    let restricted = RestrictedEvalModule::new(
        vec![induced],
        vec![RestrictedEvalPoint::new(vec![s(2)])?],
    )?;
    let window = ExponentWindow::new((-1, 1), vec![(-1, 1)])?;
    println!(
        "commutator series on the level-1 restricted module: {}",
        commutator_series_check(0, 1, &restricted, &ModuleVector::unit(0), &window)?
    );
    Ok(())
}
