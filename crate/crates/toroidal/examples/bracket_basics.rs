//! The toroidal bracket: generators, central elements, Jacobi, and the
//! commuting nilpotent basis.
//!
//! ```bash
//! cargo run -p toroidal --example bracket_basics
//! ```

use toroidal::exact::MultiIndex;
use toroidal::lie::{GeneratorKey, SimpleLieData, ToroidalElement};

fn main() -> toroidal::Result<()> {
    let sl2 = SimpleLieData::sl2();
    let rank = 1;

    // [e(1,(0)), f(-1,(0))] = h(0,(0)) + K0((0))
    let e = ToroidalElement::generator(sl2.clone(), rank, GeneratorKey::g(0, 1, vec![0]))?;
    let f = ToroidalElement::generator(sl2.clone(), rank, GeneratorKey::g(1, -1, vec![0]))?;
    println!("[e(1,(0)), f(-1,(0))] = {}", e.bracket(&f)?.render());

    // matched loop indices switch on the K1 term
    let e1 = ToroidalElement::generator(sl2.clone(), rank, GeneratorKey::g(0, 1, vec![1]))?;
    let f1 = ToroidalElement::generator(sl2.clone(), rank, GeneratorKey::g(1, -1, vec![-1]))?;
    println!("[e(1,(1)), f(-1,(-1))] = {}", e1.bracket(&f1)?.render());

    // K0(n̲) and Ki are central
    let k0 = ToroidalElement::generator(sl2.clone(), rank, GeneratorKey::k0(vec![3]))?;
    let any = ToroidalElement::generator(sl2.clone(), rank, GeneratorKey::g(0, 5, vec![2]))?;
    println!("[K0((3)), e(5,(2))] = {}", k0.bracket(&any)?.render());

    // Jacobi identity, exactly
    let h = ToroidalElement::generator(sl2.clone(), rank, GeneratorKey::g(2, -1, vec![0]))?;
    let f0 = ToroidalElement::generator(sl2.clone(), rank, GeneratorKey::g(1, 0, vec![0]))?;
    println!(
        "jacobi(e(1), f(0), h(-1)) holds: {}",
        ToroidalElement::jacobi_check(&e, &f0, &h)?
    );

    // the basis whose modes all commute: e, f, h+e-f for sl2
    println!("\nnilpotent basis of sl2 (coefficients over e,f,h):");
    for a in sl2.nilpotent_basis()? {
        let u = ToroidalElement::from_g_vector(sl2.clone(), rank, &a, 2, &MultiIndex::new(vec![1]))?;
        let v = ToroidalElement::from_g_vector(sl2.clone(), rank, &a, -2, &MultiIndex::new(vec![-1]))?;
        println!(
            "  {:?}  ->  [a(2,(1)), a(-2,(-1))] = {}",
            a,
            u.bracket(&v)?.render()
        );
    }

    // sl3 works the same way, here at rank 2
    let sl3 = SimpleLieData::sl3();
    let u = ToroidalElement::generator(sl3.clone(), 2, GeneratorKey::g(0, 1, vec![1, 0]))?;
    let v = ToroidalElement::generator(sl3.clone(), 2, GeneratorKey::g(3, -1, vec![-1, 0]))?;
    println!("\nsl3, r = 2: [e1(1,(1,0)), f1(-1,(-1,0))] = {}", u.bracket(&v)?.render());
    Ok(())
}
