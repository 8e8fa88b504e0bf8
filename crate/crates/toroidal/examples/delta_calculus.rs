//! Delta-function identities checked coefficient-wise on finite windows:
//! the derivative identities, the substitution property, and residues.
//!
//! ```bash
//! cargo run -p toroidal --example delta_calculus
//! ```

use toroidal::exact::{LaurentPoly, Scalar};
use toroidal::formal::{
    delta_identity_check, delta_substitution_check, residue_poly, ExponentWindow,
};

fn main() -> toroidal::Result<()> {
    let window = ExponentWindow::new((-5, 5), vec![(-5, 5)])?;

    // (x1 − x2)^m (1/n!) ∂₂ⁿ x2⁻¹δ(x1/x2): zero for m > n, a lower-order
    // derivative delta for m ≤ n
    for (m, n) in [(1, 0), (0, 0), (1, 2), (3, 1), (2, 3)] {
        println!(
            "derivative identity m={m}, n={n}: {}",
            delta_identity_check(m, n, &window)?
        );
    }

    // f(x)δ(a/x) = f(a)δ(a/x)
    let f = LaurentPoly::from_terms([(2, Scalar::from(1)), (0, Scalar::from(-4))]);
    for a in [Scalar::from(2), Scalar::from(-3), Scalar::ratio(1, 2)] {
        println!(
            "substitution f = x^2-4 at a = {a}: {}",
            delta_substitution_check(&f, &a, &window)?
        );
    }
    // when f(a) = 0 both sides vanish identically
    let root = LaurentPoly::linear_root(&Scalar::from(2));
    println!(
        "substitution with f(a) = 0: {}",
        delta_substitution_check(&root, &Scalar::from(2), &window)?
    );

    // residues read off single coefficients
    let p = LaurentPoly::from_terms([(-3, Scalar::from(4)), (-1, Scalar::from(7)), (2, Scalar::from(9))]);
    println!("p = {p}");
    for power in [0, 2, -3] {
        println!("  Res_x x^{power}·p = {}", residue_poly(&p, power));
    }
    Ok(())
}
