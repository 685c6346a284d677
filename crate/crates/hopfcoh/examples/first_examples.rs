//! The three base cases of the cohomology theory, computed by brute
//! force: trivial Hopf algebra, trivial coefficients, and a Hopf algebra
//! as a comodule over itself.
//!
//! ```bash
//! cargo run --example first_examples
//! ```

use hopfcoh::cohomology::{Cohomology, Diagram};
use hopfcoh::{ComoduleAlgebra, Field, Hopf, Limits};

fn main() -> hopfcoh::Result<()> {
    let field = Field::prime(3)?;
    let limits = Limits::default();

    // 1) trivial Hopf algebra: H⁰(k, E) = E^×, H¹(k, E) = {1}
    let e2 = ComoduleAlgebra::dual_numbers(field.clone())?;
    let trivial_hopf = ComoduleAlgebra::over_trivial_hopf(e2.alg.clone());
    let diag = Diagram::build(trivial_hopf)?;
    let coh = Cohomology::compute(&diag, &limits)?;
    println!("coefficients E₂ over the trivial Hopf algebra k:");
    println!("  H⁰ = unit group of E₂, order {}", coh.h0.order());
    println!("  Z¹ = {{1}}: {} cocycle(s)", coh.z1.len());
    println!("  H¹ classes: {}", coh.h1.class_count());

    // 2) trivial coefficients: H¹(H, k) is the group of grouplikes
    let h4 = Hopf::sweedler(field.clone())?;
    let grouplikes = h4.grouplikes(&limits)?;
    let diag = Diagram::build(ComoduleAlgebra::trivial_coefficients(h4))?;
    let coh = Cohomology::compute(&diag, &limits)?;
    println!("\ncoefficients k over the Sweedler algebra H₄:");
    println!("  H⁰ = k^×, order {}", coh.h0.order());
    println!(
        "  H¹ classes: {} — the grouplike elements ({} of them)",
        coh.h1.class_count(),
        grouplikes.order()
    );
    for orbit in &coh.h1.orbits {
        println!("    class of {}", diag.level1.describe(&orbit.representative));
    }

    // 3) self-coefficients: H⁰(H, H) = k^×, H¹(H, H) = {1}
    let h4 = Hopf::sweedler(field)?;
    let diag = Diagram::build(ComoduleAlgebra::regular(h4))?;
    let coh = Cohomology::compute(&diag, &limits)?;
    println!("\nH₄ as a comodule algebra over itself:");
    println!("  H⁰ = k^×, order {}", coh.h0.order());
    println!("  H¹ classes: {}", coh.h1.class_count());
    Ok(())
}
