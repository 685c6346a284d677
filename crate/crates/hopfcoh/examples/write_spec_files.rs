//! Regenerates the shipped structure-constant spec files under `specs/`
//! and re-parses each one to confirm the canonical round trip. Run from
//! the crate root:
//!
//! ```bash
//! cargo run --example write_spec_files
//! ```

use std::path::Path;

use hopfcoh::comodule::HopfModule;
use hopfcoh::specfile::{self, ScalarRepr};
use hopfcoh::{ComoduleAlgebra, Field, FiniteGroup, Hopf};

fn write_and_verify(dir: &Path, name: &str, doc: &specfile::SpecDoc) -> hopfcoh::Result<()> {
    let text = specfile::to_canonical_json(doc);
    let path = dir.join(name);
    std::fs::write(&path, &text)?;
    let reparsed = specfile::parse(&text)?;
    assert_eq!(&reparsed, doc, "round trip for {name}");
    specfile::load(&path)?;
    println!("wrote {} ({} bytes)", path.display(), text.len());
    Ok(())
}

fn main() -> hopfcoh::Result<()> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("specs");
    std::fs::create_dir_all(&dir)?;

    for p in [3u64, 5] {
        let field = Field::prime(p)?;
        let h4 = Hopf::sweedler(field.clone())?;
        write_and_verify(&dir, &format!("h4_f{p}.spec"), &specfile::doc_for_hopf(&h4))?;

        let e2 = ComoduleAlgebra::dual_numbers(field)?;
        write_and_verify(
            &dir,
            &format!("e2_over_h4_f{p}.spec"),
            &specfile::doc_for_comodule(&e2, Some(format!("h4_f{p}.spec"))),
        )?;
    }

    let f3 = Field::prime(3)?;
    let kz2 = Hopf::function_algebra(&FiniteGroup::cyclic(2), f3.clone())?;
    write_and_verify(&dir, "kz2_f3.spec", &specfile::doc_for_hopf(&kz2))?;

    let k_over_h4 = ComoduleAlgebra::trivial_coefficients(Hopf::sweedler(f3.clone())?);
    write_and_verify(
        &dir,
        "k_over_h4_f3.spec",
        &specfile::doc_for_comodule(&k_over_h4, Some("h4_f3.spec".into())),
    )?;

    let k_over_kz2 = ComoduleAlgebra::trivial_coefficients(kz2.clone());
    write_and_verify(
        &dir,
        "k_over_kz2_f3.spec",
        &specfile::doc_for_comodule(&k_over_kz2, Some("kz2_f3.spec".into())),
    )?;

    let s3 = FiniteGroup::symmetric(3);
    let t12 = s3
        .labels()
        .iter()
        .position(|l| l == "(12)")
        .expect("transposition");
    let conj = ComoduleAlgebra::conjugation(&s3, &[s3.identity(), t12], f3.clone())?;
    write_and_verify(
        &dir,
        "ks3_over_kz2_f3.spec",
        &specfile::doc_for_comodule(&conj, None),
    )?;

    let e2_module = HopfModule::regular(ComoduleAlgebra::dual_numbers(f3)?);
    write_and_verify(
        &dir,
        "e2_module_f3.spec",
        &specfile::doc_for_module(&e2_module, Some("h4_f3.spec".into())),
    )?;

    // inclusion matrices for the exact-sequence command
    let one_zero: Vec<Vec<ScalarRepr>> = vec![vec![ScalarRepr::Int(1)], vec![ScalarRepr::Int(0)]];
    let mut text = serde_json::to_string_pretty(&one_zero).expect("serializable");
    text.push('\n');
    std::fs::write(dir.join("incl_k_e2_f3.json"), &text)?;
    println!("wrote {}", dir.join("incl_k_e2_f3.json").display());

    let ones: Vec<Vec<ScalarRepr>> = vec![vec![ScalarRepr::Int(1)], vec![ScalarRepr::Int(1)]];
    let mut text = serde_json::to_string_pretty(&ones).expect("serializable");
    text.push('\n');
    std::fs::write(dir.join("incl_k_kz2_f3.json"), &text)?;
    println!("wrote {}", dir.join("incl_k_kz2_f3.json").display());

    println!("all spec files verified against their axiom suites");
    Ok(())
}
