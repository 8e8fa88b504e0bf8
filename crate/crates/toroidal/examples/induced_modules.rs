//! Depth-truncated induced affine modules: the exactly computable
//! restricted stand-ins, with PBW bases and honest truncation errors.
//!
//! ```bash
//! cargo run -p toroidal --example induced_modules
//! ```

use toroidal::exact::{MultiIndex, Scalar};
use toroidal::lie::GeneratorKey;
use toroidal::modules::{FiniteIrrep, InducedModule, ModuleVector, TauModule};
use toroidal::Error;

fn main() -> toroidal::Result<()> {
    // vacuum module at level 1, truncated at depth 2
    let module = InducedModule::new(FiniteIrrep::new(0).into_g_module(), Scalar::from(1), 2)?;
    println!("graded dimensions: {:?}", module.graded_dimensions());
    println!("basis:");
    for idx in 0..module.dim() {
        println!("  {:2}  deg {}  {}", idx, module.degree_of(idx).unwrap(), module.basis_label(idx));
    }

    // the level term: e(1) f(-1) vac = (h(0) + <e,f> K0) vac = vac
    let f_vac = module.apply(&GeneratorKey::g(1, -1, vec![]), &ModuleVector::unit(0))?;
    let back = module.apply(&GeneratorKey::g(0, 1, vec![]), &f_vac)?;
    println!("\ne(1) f(-1) vac = {}", back.render(module.as_ref()));

    // restriction bound: a(n0) kills a vector once n0 exceeds its degree
    let n = MultiIndex::zero(0);
    for idx in [0, 4] {
        let bound = module.restriction_bound_basis(0, &n, idx).unwrap();
        let out = module.apply(&GeneratorKey::g(0, bound + 1, vec![]), &ModuleVector::unit(idx))?;
        println!(
            "bound of {} is {bound}; e({}) applied there gives {}",
            module.basis_label(idx),
            bound + 1,
            out.render(module.as_ref())
        );
    }

    // raising past the depth refuses instead of truncating silently
    let deg2 = module.apply(&GeneratorKey::g(0, -1, vec![]), &f_vac)?;
    match module.apply(&GeneratorKey::g(0, -1, vec![]), &deg2) {
        Err(Error::NotWithinValidWindow { degree, depth }) => {
            println!("raising to degree {degree} beyond depth {depth} is refused")
        }
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
