//! Witness-based category certification: one module, four categories, and
//! the JSON report that records exactly what was checked.
//!
//! ```bash
//! cargo run -p toroidal --example category_membership
//! ```

use std::sync::Arc;

use toroidal::categories::{check_membership, CategoryTag, CategoryWitness};
use toroidal::exact::Scalar;
use toroidal::formal::ExponentWindow;
use toroidal::modules::{ModuleDescriptor, ModuleVector, TauModule};

fn main() -> toroidal::Result<()> {
    // the mixed tensor: restricted ⊗ evaluation, rank 1
    let descriptor = ModuleDescriptor::from_json_str(
        r#"{"type":"tensor","parts":[
            {"type":"restricted_eval","factors":[
                {"module":{"type":"induced","g":"sl2","m":0,"level":"1","depth":4},"z":["2"]}]},
            {"type":"eval","factors":[{"g":"sl2","m":1,"z":["3","5"]}]}
        ]}"#,
    )?;
    let module = descriptor.build()?;
    let window = ExponentWindow::new((-2, 2), vec![(-1, 1)])?;
    let vectors: Vec<ModuleVector> = (0..module.dim())
        .filter(|&i| module.degree_of(i).unwrap_or(0) <= 1)
        .map(ModuleVector::unit)
        .collect();

    // in C_tau with the natural witness
    let witness = CategoryWitness::for_module(module.as_ref(), CategoryTag::CTau)?;
    let report = check_membership(&module, &witness, &window, &vectors)?;
    println!("C_tau: pass = {}", report.pass);
    println!("{}\n", serde_json::to_string_pretty(&report).unwrap());

    // not in R̃ (the evaluation slot is not restricted): the report names
    // the first failing coefficient
    let r_witness = CategoryWitness::new(CategoryTag::RTilde, None, witness.pi.clone())?;
    let report = check_membership(&module, &r_witness, &window, &vectors)?;
    println!("R_tilde: pass = {}", report.pass);
    if let Some(cx) = report.counterexamples.first() {
        println!("  first counterexample: {} on {}", cx.key, cx.vector);
    }

    // not in E_tau either: no polynomial kills the restricted slot in x0
    let e_witness = CategoryWitness::new(
        CategoryTag::ETau,
        Some(toroidal::modules::poly_from_roots(&[Scalar::from(3)])),
        witness.pi.clone(),
    )?;
    let report = check_membership(&module, &e_witness, &window, &vectors)?;
    println!("E_tau: pass = {}", report.pass);

    // a pure evaluation module certifies in E_tau_prime
    let eval = ModuleDescriptor::from_json_str(
        r#"{"type":"eval","factors":[
            {"g":"sl2","m":1,"z":["2","3"]},
            {"g":"sl2","m":1,"z":["4","5"]}
        ]}"#,
    )?
    .build()?;
    let eval_witness = CategoryWitness::for_module(eval.as_ref(), CategoryTag::ETauPrime)?;
    let all: Vec<ModuleVector> = (0..eval.dim()).map(ModuleVector::unit).collect();
    let eval_module: Arc<dyn TauModule> = eval;
    let report = check_membership(&eval_module, &eval_witness, &window, &all)?;
    println!("E_tau_prime for the evaluation tensor: pass = {}", report.pass);
    Ok(())
}
