//! Torsors of the endomorphism comodule algebra of a Hopf module M,
//! carried back to twisted coactions on M itself: the composite of the
//! restricted comparison and the torsor classification.
//!
//! ```bash
//! cargo run --example endomorphism_torsors
//! ```

use hopfcoh::comodule::HopfModule;
use hopfcoh::torsor::end_torsor_bridge;
use hopfcoh::{ComoduleAlgebra, Field, Limits};

fn main() -> hopfcoh::Result<()> {
    let field = Field::prime(3)?;
    let limits = Limits::default();
    let module = HopfModule::regular(ComoduleAlgebra::dual_numbers(field)?);

    let bridge = end_torsor_bridge(&module, &limits)?;
    println!("M = E₂ over (H₄, E₂):");
    println!("  torsor classes of End_S(M): {}", bridge.class_count);
    println!("  restricted H¹ classes:      {}", bridge.restricted_class_count);
    println!(
        "  twisted coactions on M satisfy the module axioms: {}",
        bridge.twisted_modules_ok
    );
    println!(
        "  distinguished class restores the original coaction: {}",
        bridge.distinguished_is_original
    );
    if let Some(pairing) = &bridge.base_pairing {
        println!("  pairing with the torsor classes of the base: {pairing:?}");
    }
    println!("  verified: {}", bridge.verified());
    Ok(())
}
