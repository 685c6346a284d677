//! The full cocycle computation for the dual numbers E₂ = k[h]/(h²) over
//! the Sweedler algebra H₄: enumerates the two one-parameter families of
//! cocycles, checks their product and orbit-action laws, and prints the
//! two cohomology classes.
//!
//! ```bash
//! cargo run --example sweedler_cocycles
//! ```

use hopfcoh::cohomology::{cocycle_action, Cohomology, Diagram};
use hopfcoh::{ComoduleAlgebra, Field, Limits, Scalar};

fn main() -> hopfcoh::Result<()> {
    let field = Field::prime(3)?;
    let limits = Limits::default();
    let diag = Diagram::build(ComoduleAlgebra::dual_numbers(field.clone())?)?;
    let coh = Cohomology::compute(&diag, &limits)?;

    println!("cocycles of E₂ over H₄ (p = 3):");
    for x in &coh.z1 {
        println!("  {}", diag.level1.describe(x));
    }
    println!("total: {} = 2p cocycles\n", coh.z1.len());

    // sorted lexicographically the list is Y₀, Y₁, Y₂, X₀, X₁, X₂;
    // multiplying on the right by the X-family shifts the parameter
    let (y1, y2) = (&coh.z1[1], &coh.z1[2]);
    let (x1, x2) = (&coh.z1[4], &coh.z1[5]);
    let prod = diag.level1.mul(y1, x1)?;
    assert_eq!(&prod, y2, "Y₁·X₁ = Y₂");
    println!(
        "product: ({}) · ({}) = {}",
        diag.level1.describe(y1),
        diag.level1.describe(x1),
        diag.level1.describe(&prod)
    );

    // acting by the unit 1 + h also shifts the parameter by one
    let actor = diag.level0.element(vec![field.one(), field.one()]);
    let moved = cocycle_action(&diag, x1, &actor, &limits)?;
    assert_eq!(&moved, x2, "X₁ ⇀ (1+h) = X₂");
    println!(
        "action:  ({}) ⇀ (1 + h) = {}",
        diag.level1.describe(x1),
        diag.level1.describe(&moved)
    );

    println!("\ncohomology classes:");
    for (i, orbit) in coh.h1.orbits.iter().enumerate() {
        println!(
            "  class {i}: representative {}, orbit size {}",
            diag.level1.describe(&orbit.representative),
            orbit.members.len()
        );
        for (member, witness) in orbit.members.iter().zip(&orbit.witnesses) {
            println!(
                "    {}  (moved by {})",
                diag.level1.describe(member),
                diag.level0.describe(witness)
            );
        }
    }

    // the same computation over p = 5 gives 2p = 10 cocycles
    let diag5 = Diagram::build(ComoduleAlgebra::dual_numbers(Field::prime(5)?)?)?;
    let coh5 = Cohomology::compute(&diag5, &limits)?;
    println!("\nover p = 5: {} cocycles, {} classes", coh5.z1.len(), coh5.h1.class_count());
    let _ = Scalar::Fp(0);
    Ok(())
}
