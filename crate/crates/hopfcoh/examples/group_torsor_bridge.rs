//! Hopf torsors over a function algebra k^G matched with classical
//! group torsors: the unit set of each torsor becomes a free transitive
//! E^×-set with compatible G-action, and the classes correspond.
//!
//! ```bash
//! cargo run --example group_torsor_bridge
//! ```

use hopfcoh::cohomology::Diagram;
use hopfcoh::torsor::{group_torsor_bridge, tensor_monoid_check};
use hopfcoh::{ComoduleAlgebra, Field, FiniteGroup, Hopf, Limits};

fn main() -> hopfcoh::Result<()> {
    let field = Field::prime(3)?;
    let limits = Limits::default();
    let kz2 = Hopf::function_algebra(&FiniteGroup::cyclic(2), field)?;
    let comod = ComoduleAlgebra::trivial_coefficients(kz2);

    let bridge = group_torsor_bridge(&comod, &limits)?;
    println!("coefficients k over k^(ℤ/2):");
    println!("  Hopf-torsor classes:      {}", bridge.hopf_classes);
    println!("  classical torsor classes: {}", bridge.classical_classes);
    println!("  pairing: {:?}", bridge.pairing);
    println!("  torsor axioms verified:   {}", bridge.torsor_axioms_ok);
    println!("  twisted action law:       {}", bridge.twisted_action_ok);
    println!("  verified: {}", bridge.verified());

    // in the commutative case the torsor classes form a group under the
    // balanced tensor product, matching the group structure of H¹
    let diag = Diagram::build(comod)?;
    let monoid = tensor_monoid_check(&diag, &limits)?;
    println!("\ntensor monoid on torsor classes:");
    println!("  product table (class indices): {:?}", monoid.product_classes);
    println!("  matches the H¹ group law: {}", monoid.matches_h1_group);
    println!("  unit law E ⊗_E T ≅ T: {}", monoid.unit_law_ok);
    Ok(())
}
