//! Exact non-abelian cohomology of Hopf comodule algebras.
//!
//! This crate constructs finite-dimensional Hopf algebras, comodule
//! algebras, and Hopf modules from structure constants over `𝔽_p` or `ℚ`,
//! and computes their non-abelian cohomology by exhaustive search:
//!
//! * `ℋ⁰(H, E)` and the pointed set `ℋ¹(H, E)` of cocycle orbits for an
//!   `H`-comodule algebra `E` ([`cohomology`]);
//! * classical non-abelian group cohomology `ℍ*(G, A)` and the levelwise
//!   bridge identifying `ℋ*(k^G, E)` with `ℍ*(G, E^×)` ([`groupcoh`]);
//! * the restricted theory on Hom-spaces `Hom_S(M, M⊗H^⊗n)` with its
//!   composition-type product, and its comparison with
//!   `ℋ*(H, End_S(M))` ([`restricted`]);
//! * cocycle-deformed coactions and the classification of Hopf torsors by
//!   `ℋ¹` ([`torsor`]).
//!
//! Everything is exact: scalars are prime-field residues or
//! arbitrary-precision rationals, and every identity is verified as a
//! matrix equation or by finite enumeration. Enumerations are bounded by
//! an explicit candidate budget ([`enumerate::Limits`]) so oversized
//! searches fail fast instead of running away.
//!
//! The `examples/` directory walks through each capability; the `hopfcoh`
//! binary exposes the same computations on structure-constant files (see
//! the README and [`cli`]).

pub mod algebra;
pub mod cli;
pub mod cohomology;
pub mod comodule;
pub mod cosimplicial;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod fp;
pub mod group;
pub mod groupcoh;
pub mod hopf;
pub mod matrix;
pub mod report;
pub mod restricted;
pub mod specfile;
pub mod suite;
pub mod torsor;

pub use algebra::{Algebra, AxiomReport, Element, ElementGroup};
pub use comodule::{ComoduleAlgebra, HopfModule};
pub use enumerate::Limits;
pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use group::FiniteGroup;
pub use hopf::Hopf;
pub use matrix::Matrix;
