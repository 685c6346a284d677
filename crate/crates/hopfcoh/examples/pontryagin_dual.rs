//! Characters of a finite abelian group recovered four ways: as
//! homomorphisms G → k^×, as grouplike elements of k^G, and as the two
//! 1-cohomology theories with trivial coefficients.
//!
//! ```bash
//! cargo run --example pontryagin_dual
//! ```

use hopfcoh::groupcoh::pontryagin_check;
use hopfcoh::{Field, FiniteGroup, Limits};

fn main() -> hopfcoh::Result<()> {
    let limits = Limits::default();
    for (group, p, name) in [
        (FiniteGroup::cyclic(2), 3, "ℤ/2 over 𝔽₃"),
        (FiniteGroup::cyclic(3), 5, "ℤ/3 over 𝔽₅"),
        (FiniteGroup::cyclic(4), 5, "ℤ/4 over 𝔽₅"),
        (FiniteGroup::trivial(), 3, "trivial group over 𝔽₃"),
    ] {
        let report = pontryagin_check(&group, Field::prime(p)?, &limits)?;
        println!("{name}:");
        println!("  characters Hom(G, k^×): {}", report.character_count);
        println!("  grouplikes of k^G:      {}", report.grouplike_count);
        println!("  H¹(k^G, k) classes:     {}", report.hopf_h1_count);
        println!("  H¹(G, k^×) classes:     {}", report.group_h1_count);
        println!("  identification verified: {}\n", report.verified());
    }
    Ok(())
}
