//! Non-abelian cohomology of a Hopf algebra with coefficients in a
//! comodule algebra.
//!
//! The coboundary diagram has levels `E`, `E⊗H`, `E⊗H⊗H` with cofaces
//!
//! ```text
//!   d⁰(x) = Δ_E(x)            d⁰(X) = (Δ_E⊗id_H)(X)
//!   d¹(x) = x⊗1               d¹(X) = (id_E⊗Δ_H)(X)
//!                             d²(X) = X⊗1
//! ```
//!
//! and codegeneracies built from the counit. `ℋ⁰` is the group of
//! invertible coinvariants, `𝒵¹` the invertible solutions of
//! `d²(X)d⁰(X) = d¹(X)`, and `ℋ¹` the orbit space of `𝒵¹` under
//! `X ⇀ x = d¹(x⁻¹)·X·d⁰(x)`. Cocycle searches run on the affine slice
//! `(id_E⊗ε_H)(X) = 1`, which contains every cocycle.

use crate::algebra::{Algebra, AxiomReport, Element, ElementGroup};
use crate::comodule::ComoduleAlgebra;
use crate::cosimplicial::{self, GroupDiagram, H1};
use crate::enumerate::{AffineSpace, Limits};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::fp::{self, Fp, FpSparseMat};
use crate::matrix::Matrix;

/// The three-level coboundary diagram of a comodule algebra, with all
/// coface and codegeneracy matrices materialized.
#[derive(Debug, Clone)]
pub struct Diagram {
    pub comod: ComoduleAlgebra,
    pub level0: Algebra,
    pub level1: Algebra,
    pub level2: Algebra,
    pub d0_01: Matrix,
    pub d1_01: Matrix,
    pub d0_12: Matrix,
    pub d1_12: Matrix,
    pub d2_12: Matrix,
    pub s0_10: Matrix,
    pub s0_21: Matrix,
    pub s1_21: Matrix,
}

impl Diagram {
    /// Builds the diagram and verifies its invariants; fails if the
    /// comodule algebra or any diagram identity fails.
    pub fn build(comod: ComoduleAlgebra) -> Result<Diagram> {
        comod.check().into_result()?;
        let field = comod.field().clone();
        let hopf_alg = comod.hopf.algebra();
        let level0 = comod.alg.clone();
        let level1 = comod.alg.tensor(hopf_alg)?;
        let level2 = level1.tensor(hopf_alg)?;

        let id_e = Matrix::identity(&field, level0.dim());
        let id_h = Matrix::identity(&field, comod.hopf.dim());
        let id_eh = Matrix::identity(&field, level1.dim());
        let unit_h = Matrix::column(hopf_alg.unit_coords());
        let counit = comod.hopf.counit().clone();

        let diagram = Diagram {
            d0_01: comod.coaction.clone(),
            d1_01: id_e.kron(&field, &unit_h),
            d0_12: comod.coaction.kron(&field, &id_h),
            d1_12: id_e.kron(&field, comod.hopf.comult()),
            d2_12: id_eh.kron(&field, &unit_h),
            s0_10: id_e.kron(&field, &counit),
            s0_21: id_e.kron(&field, &counit.kron(&field, &id_h)),
            s1_21: id_eh.kron(&field, &counit),
            comod,
            level0,
            level1,
            level2,
        };
        diagram.check_identities().into_result()?;
        Ok(diagram)
    }

    pub fn field(&self) -> &Field {
        self.comod.field()
    }

    /// Verifies that every coface and codegeneracy is an algebra morphism
    /// and that the (co)simplicial identities hold as matrix equalities.
    pub fn check_identities(&self) -> AxiomReport {
        let mut report = AxiomReport::default();
        let field = self.field();

        let morphisms: [(&str, &Matrix, &Algebra, &Algebra); 8] = [
            ("d0 E→E⊗H", &self.d0_01, &self.level0, &self.level1),
            ("d1 E→E⊗H", &self.d1_01, &self.level0, &self.level1),
            ("d0 E⊗H→E⊗H⊗H", &self.d0_12, &self.level1, &self.level2),
            ("d1 E⊗H→E⊗H⊗H", &self.d1_12, &self.level1, &self.level2),
            ("d2 E⊗H→E⊗H⊗H", &self.d2_12, &self.level1, &self.level2),
            ("s0 E⊗H→E", &self.s0_10, &self.level1, &self.level0),
            ("s0 E⊗H⊗H→E⊗H", &self.s0_21, &self.level2, &self.level1),
            ("s1 E⊗H⊗H→E⊗H", &self.s1_21, &self.level2, &self.level1),
        ];
        for (name, m, from, to) in morphisms {
            report.record(
                &format!("{name} is an algebra morphism"),
                algebra_morphism_failure(field, m, from, to),
            );
        }

        // dⁱdʲ = dʲdⁱ⁻¹ for i > j
        let pairs = [
            ("d1∘d0 = d0∘d0", self.d1_12.mul(field, &self.d0_01), self.d0_12.mul(field, &self.d0_01)),
            ("d2∘d0 = d0∘d1", self.d2_12.mul(field, &self.d0_01), self.d0_12.mul(field, &self.d1_01)),
            ("d2∘d1 = d1∘d1", self.d2_12.mul(field, &self.d1_01), self.d1_12.mul(field, &self.d1_01)),
        ];
        for (name, lhs, rhs) in pairs {
            report.record(name, (lhs != rhs).then(|| name.to_string()));
        }

        // codegeneracy identities
        let id_e = Matrix::identity(field, self.level0.dim());
        let id_eh = Matrix::identity(field, self.level1.dim());
        let checks = [
            ("s0∘d0 = id on E", self.s0_10.mul(field, &self.d0_01), id_e.clone()),
            ("s0∘d1 = id on E", self.s0_10.mul(field, &self.d1_01), id_e),
            ("s0∘d0 = id on E⊗H", self.s0_21.mul(field, &self.d0_12), id_eh.clone()),
            ("s1∘d1 = id on E⊗H", self.s1_21.mul(field, &self.d1_12), id_eh.clone()),
            ("s1∘d2 = id on E⊗H", self.s1_21.mul(field, &self.d2_12), id_eh),
            (
                "s0∘d2 = d1∘s0",
                self.s0_21.mul(field, &self.d2_12),
                self.d1_01.mul(field, &self.s0_10),
            ),
            (
                "s1∘d0 = d0∘s0",
                self.s1_21.mul(field, &self.d0_12),
                self.d0_01.mul(field, &self.s0_10),
            ),
        ];
        for (name, lhs, rhs) in checks {
            report.record(name, (lhs != rhs).then(|| name.to_string()));
        }
        report
    }

    /// The unit-group diagram over this data, driving the generic engine.
    pub fn units<'a>(&'a self, limits: &'a Limits) -> UnitDiagram<'a> {
        UnitDiagram { diagram: self, limits }
    }

    /// The affine slice `(id_E⊗ε_H)(X) = 1` containing every cocycle.
    pub fn normalized_slice(&self) -> Result<AffineSpace> {
        AffineSpace::solve(self.field(), &self.s0_10, self.level0.unit_coords())?
            .ok_or_else(|| Error::DimensionError("counit slice is empty".into()))
    }
}

/// First basis pair (or the unit) on which `m` fails to be an algebra
/// morphism `from → to`, if any.
pub(crate) fn algebra_morphism_failure(
    field: &Field,
    m: &Matrix,
    from: &Algebra,
    to: &Algebra,
) -> Option<String> {
    for i in 0..from.dim() {
        for j in 0..from.dim() {
            let fi = to.element(m.col(i));
            let fj = to.element(m.col(j));
            let prod = to.mul(&fi, &fj).expect("same algebra");
            let direct = to.element(m.apply(field, &from.product_of_basis(i, j)));
            if prod != direct {
                return Some(format!(
                    "fails on {}·{}",
                    from.labels()[i],
                    from.labels()[j]
                ));
            }
        }
    }
    let unit_image = to.element(m.apply(field, from.unit_coords()));
    if unit_image != to.unit() {
        return Some("does not send unit to unit".into());
    }
    None
}

/// [`GroupDiagram`] instance on the unit groups of the three levels.
pub struct UnitDiagram<'a> {
    pub diagram: &'a Diagram,
    pub limits: &'a Limits,
}

impl GroupDiagram for UnitDiagram<'_> {
    type L0 = Element;
    type L1 = Element;
    type L2 = Element;

    fn unit1(&self) -> Element {
        self.diagram.level1.unit()
    }
    fn mul0(&self, a: &Element, b: &Element) -> Element {
        self.diagram.level0.mul(a, b).expect("level 0 product")
    }
    fn inv0(&self, a: &Element) -> Element {
        self.diagram.level0.try_inverse(a).expect("level 0 unit")
    }
    fn mul1(&self, a: &Element, b: &Element) -> Element {
        self.diagram.level1.mul(a, b).expect("level 1 product")
    }
    fn mul2(&self, a: &Element, b: &Element) -> Element {
        self.diagram.level2.mul(a, b).expect("level 2 product")
    }
    fn d0_level0(&self, x: &Element) -> Element {
        self.diagram
            .level1
            .element(self.diagram.d0_01.apply(self.diagram.field(), &x.coords))
    }
    fn d1_level0(&self, x: &Element) -> Element {
        self.diagram
            .level1
            .element(self.diagram.d1_01.apply(self.diagram.field(), &x.coords))
    }
    fn d0_level1(&self, x: &Element) -> Element {
        self.diagram
            .level2
            .element(self.diagram.d0_12.apply(self.diagram.field(), &x.coords))
    }
    fn d1_level1(&self, x: &Element) -> Element {
        self.diagram
            .level2
            .element(self.diagram.d1_12.apply(self.diagram.field(), &x.coords))
    }
    fn d2_level1(&self, x: &Element) -> Element {
        self.diagram
            .level2
            .element(self.diagram.d2_12.apply(self.diagram.field(), &x.coords))
    }
    fn level0_elements(&self) -> Result<Vec<Element>> {
        self.diagram.level0.units(self.limits)
    }
    fn cocycle_candidates(&self) -> Result<Vec<Element>> {
        let slice = self.diagram.normalized_slice()?;
        let fp_units = units_in_slice(&self.diagram.level1, &slice, self.limits)?;
        Ok(fp_units)
    }
}

/// Invertible elements of `alg` inside an affine slice, via the fast path.
fn units_in_slice(alg: &Algebra, slice: &AffineSpace, limits: &Limits) -> Result<Vec<Element>> {
    let field = alg.field();
    let total = limits.check(field, slice.dim())?;
    let fp = Fp::new(field).expect("prime field checked");
    let table = alg.fp_table();
    let particular = fp::from_scalars(&slice.particular);
    let basis: Vec<Vec<u64>> = slice.basis.iter().map(|v| fp::from_scalars(v)).collect();
    let kdim = basis.len();
    let found = fp::par_scan(total, limits.threads, |n| {
        let mut params = vec![0u64; kdim];
        fp::decode_digits(n, fp.p, kdim, &mut params);
        let mut x = particular.clone();
        for (t, vec) in params.iter().zip(&basis) {
            if *t == 0 {
                continue;
            }
            for (xi, vi) in x.iter_mut().zip(vec) {
                *xi = fp.add(*xi, fp.mul(*t, *vi));
            }
        }
        if table.is_invertible(fp, &x) {
            Some(x)
        } else {
            None
        }
    });
    let mut out: Vec<Element> = found
        .into_iter()
        .map(|x| alg.element(fp::to_scalars(&x)))
        .collect();
    out.sort();
    Ok(out)
}

/// `ℋ⁰`: the group of invertible coinvariants, computed by solving the
/// linear system `(d⁰ − d¹)x = 0` exactly and filtering units.
pub fn h0(diagram: &Diagram, limits: &Limits) -> Result<ElementGroup> {
    let field = diagram.field();
    let system = diagram.d0_01.sub(field, &diagram.d1_01);
    let kernel = system.kernel(field);
    let space = AffineSpace {
        particular: vec![field.zero(); diagram.level0.dim()],
        basis: kernel,
    };
    let elements = units_in_slice(&diagram.level0, &space, limits)?;
    ElementGroup::close(&diagram.level0, elements)
}

/// `𝒵¹`: all invertible solutions of the cocycle relation, found on the
/// counit-normalized slice (a lossless restriction). The relation is
/// tested before invertibility, in fast prime-field arithmetic.
pub fn z1(diagram: &Diagram, limits: &Limits) -> Result<Vec<Element>> {
    let field = diagram.field();
    let slice = diagram.normalized_slice()?;
    let total = limits.check(field, slice.dim())?;
    let fp = Fp::new(field).expect("prime field checked");

    let d0 = FpSparseMat::from_matrix(&diagram.d0_12);
    let d1 = FpSparseMat::from_matrix(&diagram.d1_12);
    let d2 = FpSparseMat::from_matrix(&diagram.d2_12);
    let table1 = diagram.level1.fp_table();
    let relation = fp::ProductByOutput::from_table(&diagram.level2.fp_table());
    let dim1 = diagram.level1.dim();
    let dim2 = diagram.level2.dim();
    let particular = fp::from_scalars(&slice.particular);
    let basis: Vec<Vec<u64>> = slice.basis.iter().map(|v| fp::from_scalars(v)).collect();
    let kdim = basis.len();

    struct Scratch {
        params: Vec<u64>,
        x: Vec<u64>,
        d0x: Vec<u64>,
        d1x: Vec<u64>,
        d2x: Vec<u64>,
    }
    let found = fp::par_scan_with(
        total,
        limits.threads,
        || Scratch {
            params: vec![0; kdim],
            x: vec![0; dim1],
            d0x: vec![0; dim2],
            d1x: vec![0; dim2],
            d2x: vec![0; dim2],
        },
        |s, n| {
            fp::decode_digits(n, fp.p, kdim, &mut s.params);
            // unreduced accumulation: p < 2^16 and few kernel vectors
            s.x.copy_from_slice(&particular);
            for (t, vec) in s.params.iter().zip(&basis) {
                if *t == 0 {
                    continue;
                }
                for (xi, vi) in s.x.iter_mut().zip(vec) {
                    *xi += *t * *vi;
                }
            }
            for xi in s.x.iter_mut() {
                *xi = fp.reduce(*xi);
            }
            s.d0x.fill(0);
            s.d1x.fill(0);
            s.d2x.fill(0);
            d0.apply_into(fp, &s.x, &mut s.d0x);
            d1.apply_into(fp, &s.x, &mut s.d1x);
            d2.apply_into(fp, &s.x, &mut s.d2x);
            if !relation.product_equals(fp, &s.d2x, &s.d0x, &s.d1x) {
                return None;
            }
            if !table1.is_invertible(fp, &s.x) {
                return None;
            }
            Some(s.x.clone())
        },
    );
    let mut out: Vec<Element> = found
        .into_iter()
        .map(|x| {
            debug_assert_eq!(x.len(), dim1);
            diagram.level1.element(fp::to_scalars(&x))
        })
        .collect();
    out.sort();

    // guard the prefilter: every reported cocycle is counit-normalized
    for x in &out {
        let eps = diagram.s0_10.apply(field, &x.coords);
        if eps != diagram.level0.unit_coords() {
            return Err(Error::AxiomError {
                name: "cocycle normalization".into(),
                witness: diagram.level1.describe(x),
            });
        }
    }
    Ok(out)
}

/// The right action `X ⇀ x = d¹(x⁻¹)·X·d⁰(x)`; errors if `x` is not
/// invertible, and verifies that cocycles stay cocycles.
pub fn cocycle_action(diagram: &Diagram, x1: &Element, x0: &Element, limits: &Limits) -> Result<Element> {
    diagram.level0.try_inverse(x0)?;
    let unit_diag = diagram.units(limits);
    let result = cosimplicial::act(&unit_diag, x1, x0);
    let was_cocycle = cosimplicial::cocycle_relation_holds(&unit_diag, x1);
    if was_cocycle && !cosimplicial::cocycle_relation_holds(&unit_diag, &result) {
        return Err(Error::AxiomError {
            name: "action preserves cocycles".into(),
            witness: diagram.level1.describe(x1),
        });
    }
    Ok(result)
}

/// `ℋ⁰`, `𝒵¹`, and `ℋ¹` of one comodule algebra.
#[derive(Debug, Clone)]
pub struct Cohomology {
    pub h0: ElementGroup,
    pub z1: Vec<Element>,
    pub h1: H1<Element, Element>,
}

impl Cohomology {
    pub fn compute(diagram: &Diagram, limits: &Limits) -> Result<Cohomology> {
        let h0 = h0(diagram, limits)?;
        let z1 = z1(diagram, limits)?;
        let unit_diag = diagram.units(limits);
        let units = diagram.level0.units(limits)?;
        let h1 = cosimplicial::h1_from_parts(&unit_diag, &z1, &units)?;
        // the unit is always a cocycle and its class is listed first
        let unit = diagram.level1.unit();
        if z1.binary_search(&unit).is_err()
            || h1.orbits[0].members.binary_search(&unit).is_err()
        {
            return Err(Error::AxiomError {
                name: "unit cocycle is distinguished".into(),
                witness: "unit of the first tensor level".into(),
            });
        }
        Ok(Cohomology { h0, z1, h1 })
    }
}

/// `ℋ¹` with the group structure induced by the level-1 product, defined
/// when both `E` and `H` are commutative. Well-definedness of the induced
/// product is verified exhaustively on orbit members.
#[derive(Debug, Clone)]
pub struct H1Group {
    pub cohomology: Cohomology,
    /// `table[i·n + j]` = class index of (rep_i · rep_j).
    pub table: Vec<usize>,
    pub identity: usize,
}

pub fn commutative_h1_group(diagram: &Diagram, limits: &Limits) -> Result<H1Group> {
    if !diagram.level0.is_commutative() {
        return Err(Error::NotCommutative("coefficient algebra".into()));
    }
    if !diagram.comod.hopf.algebra().is_commutative() {
        return Err(Error::NotCommutative("Hopf algebra".into()));
    }
    let cohomology = Cohomology::compute(diagram, limits)?;
    let h1 = &cohomology.h1;
    let n = h1.class_count();
    let mut table = vec![0usize; n * n];
    for i in 0..n {
        for j in 0..n {
            let prod = diagram
                .level1
                .mul(&h1.orbits[i].representative, &h1.orbits[j].representative)?;
            let class = h1
                .class_of(&prod)
                .ok_or_else(|| Error::AxiomError {
                    name: "product of cocycles is a cocycle".into(),
                    witness: diagram.level1.describe(&prod),
                })?;
            table[i * n + j] = class;
        }
    }
    // well-definedness: member·member lands in the class of rep·rep
    for i in 0..n {
        for j in 0..n {
            for a in &h1.orbits[i].members {
                for b in &h1.orbits[j].members {
                    let prod = diagram.level1.mul(a, b)?;
                    if h1.class_of(&prod) != Some(table[i * n + j]) {
                        return Err(Error::AxiomError {
                            name: "induced product well-defined".into(),
                            witness: diagram.level1.describe(&prod),
                        });
                    }
                }
            }
        }
    }
    let identity = 0; // distinguished class is listed first
    Ok(H1Group { cohomology, table, identity })
}

/// An inclusion of comodule algebras `D ↪ E` over the same Hopf algebra,
/// as a `dim E × dim D` matrix.
#[derive(Debug, Clone)]
pub struct Inclusion {
    pub sub: ComoduleAlgebra,
    pub ambient: ComoduleAlgebra,
    pub matrix: Matrix,
}

impl Inclusion {
    pub fn new(sub: ComoduleAlgebra, ambient: ComoduleAlgebra, matrix: Matrix) -> Result<Inclusion> {
        let incl = Inclusion { sub, ambient, matrix };
        incl.verify()?;
        Ok(incl)
    }

    fn verify(&self) -> Result<()> {
        let field = self.ambient.field();
        if self.sub.hopf.dim() != self.ambient.hopf.dim()
            || self.sub.hopf.comult() != self.ambient.hopf.comult()
            || self.sub.hopf.counit() != self.ambient.hopf.counit()
        {
            return Err(Error::NotAMorphism("different Hopf algebras".into()));
        }
        if self.matrix.rows != self.ambient.alg.dim() || self.matrix.cols != self.sub.alg.dim() {
            return Err(Error::DimensionMismatch("inclusion matrix shape".into()));
        }
        if self.matrix.rank(field) < self.sub.alg.dim() {
            return Err(Error::NotInjective);
        }
        // algebra morphism
        for i in 0..self.sub.alg.dim() {
            for j in 0..self.sub.alg.dim() {
                let fi = self.ambient.alg.element(self.matrix.col(i));
                let fj = self.ambient.alg.element(self.matrix.col(j));
                let prod = self.ambient.alg.mul(&fi, &fj)?;
                let direct = self
                    .ambient
                    .alg
                    .element(self.matrix.apply(field, &self.sub.alg.product_of_basis(i, j)));
                if prod != direct {
                    return Err(Error::NotAMorphism("inclusion is not multiplicative".into()));
                }
            }
        }
        let unit_image = self.matrix.apply(field, self.sub.alg.unit_coords());
        if unit_image != self.ambient.alg.unit_coords() {
            return Err(Error::NotAMorphism("inclusion does not preserve the unit".into()));
        }
        // comodule morphism: Δ_E ∘ incl = (incl⊗id_H) ∘ Δ_D
        let id_h = Matrix::identity(field, self.ambient.hopf.dim());
        let lhs = self.ambient.coaction.mul(field, &self.matrix);
        let rhs = self.matrix.kron(field, &id_h).mul(field, &self.sub.coaction);
        if lhs != rhs {
            return Err(Error::NotAMorphism("inclusion is not a comodule map".into()));
        }
        Ok(())
    }
}

/// One coset of `incl(D^×)\E^×` under left translation.
#[derive(Debug, Clone)]
pub struct Coset {
    pub representative: Element,
    pub members: Vec<Element>,
}

/// The relative 0-cohomology pointed set: cosets of `E^×` modulo
/// `incl(D^×)` whose two coface images agree in the level-1 quotient.
#[derive(Debug, Clone)]
pub struct RelativeH0 {
    /// All cosets, sorted by representative.
    pub cosets: Vec<Coset>,
    /// Indices (into `cosets`) of the members of the relative `ℋ⁰`.
    pub h0_indices: Vec<usize>,
    /// Index of the coset of 1 (the distinguished point).
    pub distinguished: usize,
}

/// Partitions the units of `ambient` into left-translation cosets of the
/// image of `sub`'s units.
fn unit_cosets(
    incl_matrix: &Matrix,
    sub: &Algebra,
    ambient: &Algebra,
    limits: &Limits,
) -> Result<Vec<Coset>> {
    let field = ambient.field();
    let ambient_units = ambient.units(limits)?;
    let sub_units = sub.units(limits)?;
    let img_units: Vec<Element> = sub_units
        .iter()
        .map(|u| ambient.element(incl_matrix.apply(field, &u.coords)))
        .collect();
    let mut remaining: std::collections::BTreeSet<Element> = ambient_units.into_iter().collect();
    let mut cosets = Vec::new();
    while let Some(b) = remaining.iter().next().cloned() {
        let mut members: Vec<Element> = img_units
            .iter()
            .map(|a| ambient.mul(a, &b).expect("same algebra"))
            .collect();
        members.sort();
        members.dedup();
        for m in &members {
            remaining.remove(m);
        }
        cosets.push(Coset { representative: members[0].clone(), members });
    }
    cosets.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(cosets)
}

/// Membership test: is `y` in the image of the unit group of `sub_level`
/// under `incl_level`? Solves the linear system and checks invertibility
/// of the preimage.
fn in_unit_image(
    incl_level: &Matrix,
    sub_level: &Algebra,
    y: &[crate::field::Scalar],
) -> Result<Option<Element>> {
    let field = sub_level.field();
    match incl_level.solve(field, y)? {
        crate::matrix::SolveOutcome::Solved { particular, .. } => {
            let z = sub_level.element(particular);
            if sub_level.is_invertible(&z) {
                Ok(Some(z))
            } else {
                Ok(None)
            }
        }
        crate::matrix::SolveOutcome::Unsolvable => Ok(None),
    }
}

/// Computes the relative `ℋ⁰` of an inclusion.
pub fn relative_h0(incl: &Inclusion, limits: &Limits) -> Result<RelativeH0> {
    let field = incl.ambient.field();
    let e_diag = Diagram::build(incl.ambient.clone())?;
    let d_level1 = incl.sub.tensor_with_hopf();
    let id_h = Matrix::identity(field, incl.ambient.hopf.dim());
    let incl1 = incl.matrix.kron(field, &id_h);

    let cosets = unit_cosets(&incl.matrix, &incl.sub.alg, &incl.ambient.alg, limits)?;
    let mut h0_indices = Vec::new();
    for (idx, coset) in cosets.iter().enumerate() {
        let b = &coset.representative;
        // [d⁰(b)] = [d¹(b)] ⟺ d⁰(b)·d¹(b)⁻¹ ∈ incl((D⊗H)^×)
        let d0b = e_diag.level1.element(e_diag.d0_01.apply(field, &b.coords));
        let d1b = e_diag.level1.element(e_diag.d1_01.apply(field, &b.coords));
        let d1b_inv = e_diag.level1.try_inverse(&d1b)?;
        let w = e_diag.level1.mul(&d0b, &d1b_inv)?;
        if in_unit_image(&incl1, &d_level1, &w.coords)?.is_some() {
            h0_indices.push(idx);
        }
    }
    let one = incl.ambient.alg.unit();
    let distinguished = cosets
        .iter()
        .position(|c| c.members.binary_search(&one).is_ok())
        .expect("unit lies in some coset");
    if !h0_indices.contains(&distinguished) {
        return Err(Error::AxiomError {
            name: "distinguished coset in relative H0".into(),
            witness: "coset of 1".into(),
        });
    }
    Ok(RelativeH0 { cosets, h0_indices, distinguished })
}

/// Everything needed to state and verify the cohomology sequence of an
/// inclusion `D ↪ E`.
pub struct SubalgebraSequence {
    pub incl: Inclusion,
    pub d_diag: Diagram,
    pub e_diag: Diagram,
    pub d_coh: Cohomology,
    pub e_coh: Cohomology,
    pub relative: RelativeH0,
}

/// Per-node exactness verdicts for the five-term (and optionally
/// six-term) sequence.
#[derive(Debug, Clone)]
pub struct ExactSequenceReport {
    pub term_sizes: Vec<(String, usize)>,
    pub nodes: Vec<(String, bool)>,
    /// Normality of the unit-group images at levels 0, 1, 2; `None` when
    /// undetermined within budget.
    pub normality: [Option<bool>; 3],
    /// Whether the six-term extension was computed and checked.
    pub six_term_checked: bool,
    /// Size of the quotient `ℋ¹`, when computed.
    pub quotient_h1_size: Option<usize>,
    /// Connecting-map image class (in `ℋ¹(D)`) per relative-`ℋ⁰` member.
    pub connecting_classes: Vec<usize>,
}

impl ExactSequenceReport {
    pub fn is_exact(&self) -> bool {
        self.nodes.iter().all(|(_, ok)| *ok)
    }
}

impl SubalgebraSequence {
    pub fn build(incl: Inclusion, limits: &Limits) -> Result<SubalgebraSequence> {
        let d_diag = Diagram::build(incl.sub.clone())?;
        let e_diag = Diagram::build(incl.ambient.clone())?;
        let d_coh = Cohomology::compute(&d_diag, limits)?;
        let e_coh = Cohomology::compute(&e_diag, limits)?;
        let relative = relative_h0(&incl, limits)?;
        Ok(SubalgebraSequence { incl, d_diag, e_diag, d_coh, e_coh, relative })
    }

    /// The connecting map on one relative-`ℋ⁰` member: lifts the coset to
    /// `b ∈ E^×`, forms `d¹(b)⁻¹·d⁰(b)`, pulls it back through the
    /// inclusion, and returns its class in `ℋ¹(D)`. All lifts are tested
    /// and must agree.
    pub fn connecting(&self, coset_index: usize) -> Result<usize> {
        let field = self.incl.ambient.field();
        let id_h = Matrix::identity(field, self.incl.ambient.hopf.dim());
        let incl1 = self.incl.matrix.kron(field, &id_h);
        let coset = &self.relative.cosets[coset_index];
        let mut class = None;
        for b in &coset.members {
            let d0b = self
                .e_diag
                .level1
                .element(self.e_diag.d0_01.apply(field, &b.coords));
            let d1b = self
                .e_diag
                .level1
                .element(self.e_diag.d1_01.apply(field, &b.coords));
            let d1b_inv = self.e_diag.level1.try_inverse(&d1b)?;
            let y = self.e_diag.level1.mul(&d1b_inv, &d0b)?;
            let z = in_unit_image(&incl1, &self.d_diag.level1, &y.coords)?
                .ok_or(Error::LiftNotInSubalgebra)?;
            // the pullback must be a cocycle of D
            if !self.d_coh.z1.binary_search(&z).is_ok() {
                return Err(Error::LiftNotInSubalgebra);
            }
            let this_class = self
                .d_coh
                .h1
                .class_of(&z)
                .ok_or(Error::LiftNotInSubalgebra)?;
            match class {
                None => class = Some(this_class),
                Some(c) if c == this_class => {}
                Some(_) => {
                    return Err(Error::AxiomError {
                        name: "connecting map independent of lift".into(),
                        witness: self.e_diag.level0.describe(b),
                    })
                }
            }
        }
        class.ok_or(Error::LiftNotInSubalgebra)
    }

    /// Maps a class of `ℋ¹(D)` forward to a class of `ℋ¹(E)`.
    fn push_h1_class(&self, d_class: usize) -> Result<usize> {
        let field = self.incl.ambient.field();
        let id_h = Matrix::identity(field, self.incl.ambient.hopf.dim());
        let incl1 = self.incl.matrix.kron(field, &id_h);
        let rep = &self.d_coh.h1.orbits[d_class].representative;
        let image = self
            .e_diag
            .level1
            .element(incl1.apply(field, &rep.coords));
        self.e_coh.h1.class_of(&image).ok_or_else(|| Error::AxiomError {
            name: "image of a cocycle is a cocycle".into(),
            witness: self.e_diag.level1.describe(&image),
        })
    }

    /// Verifies pointed-set exactness at every interior node, checking the
    /// six-term extension when the three normality conditions hold.
    pub fn verify(&self, limits: &Limits) -> Result<ExactSequenceReport> {
        let field = self.incl.ambient.field();
        let mut nodes = Vec::new();

        // node ℋ⁰(D): image of 1 → preimage of distinguished under incl
        let one_d = self.incl.sub.alg.unit();
        let injective_at_base: Vec<&Element> = self
            .d_coh
            .h0
            .elements
            .iter()
            .filter(|x| {
                let img = self
                    .incl
                    .ambient
                    .alg
                    .element(self.incl.matrix.apply(field, &x.coords));
                self.incl.ambient.alg.is_unit_element(&img)
            })
            .collect();
        nodes.push((
            "H0(D)".to_string(),
            injective_at_base.len() == 1 && *injective_at_base[0] == one_d,
        ));

        // node ℋ⁰(E): image of ℋ⁰(D) = preimage of distinguished coset
        let image_h0: std::collections::BTreeSet<Element> = self
            .d_coh
            .h0
            .elements
            .iter()
            .map(|x| {
                self.incl
                    .ambient
                    .alg
                    .element(self.incl.matrix.apply(field, &x.coords))
            })
            .collect();
        let distinguished_coset = &self.relative.cosets[self.relative.distinguished];
        let preimage: std::collections::BTreeSet<Element> = self
            .e_coh
            .h0
            .elements
            .iter()
            .filter(|b| distinguished_coset.members.binary_search(b).is_ok())
            .cloned()
            .collect();
        nodes.push(("H0(E)".to_string(), image_h0 == preimage));

        // image of ℋ⁰(E) in the coset space must land in the relative ℋ⁰
        let mut image_cosets = std::collections::BTreeSet::new();
        for b in &self.e_coh.h0.elements {
            let idx = self
                .relative
                .cosets
                .iter()
                .position(|c| c.members.binary_search(b).is_ok())
                .expect("unit in some coset");
            image_cosets.insert(idx);
            if !self.relative.h0_indices.contains(&idx) {
                return Err(Error::AxiomError {
                    name: "H0(E) maps into relative H0".into(),
                    witness: self.e_diag.level0.describe(b),
                });
            }
        }

        // node relative ℋ⁰: image of ℋ⁰(E) = ∂⁻¹(distinguished)
        let mut connecting_classes = Vec::new();
        let mut del_preimage = std::collections::BTreeSet::new();
        for &idx in &self.relative.h0_indices {
            let class = self.connecting(idx)?;
            connecting_classes.push(class);
            if class == 0 {
                del_preimage.insert(idx);
            }
        }
        nodes.push(("relative H0".to_string(), image_cosets == del_preimage));

        // node ℋ¹(D): image of ∂ = preimage of distinguished under push
        let image_del: std::collections::BTreeSet<usize> = connecting_classes.iter().copied().collect();
        let mut push_preimage = std::collections::BTreeSet::new();
        for class in 0..self.d_coh.h1.class_count() {
            if self.push_h1_class(class)? == 0 {
                push_preimage.insert(class);
            }
        }
        nodes.push(("H1(D)".to_string(), image_del == push_preimage));

        // normality of each level's unit-group image
        let id_h = Matrix::identity(field, self.incl.ambient.hopf.dim());
        let incl1 = self.incl.matrix.kron(field, &id_h);
        let incl2 = incl1.kron(field, &id_h);
        let d_level1 = self.d_diag.level1.clone();
        let d_level2 = self.d_diag.level2.clone();
        let normality = [
            check_normality(&self.incl.matrix, &self.incl.sub.alg, &self.incl.ambient.alg, limits)?,
            check_normality(&incl1, &d_level1, &self.e_diag.level1, limits)?,
            check_normality(&incl2, &d_level2, &self.e_diag.level2, limits)?,
        ];

        let all_normal = normality.iter().all(|n| *n == Some(true));
        let mut six_term_checked = false;
        let mut quotient_h1_size = None;
        if all_normal {
            let quotient = QuotientDiagram::build(self, limits)?;
            let q_z1 = cosimplicial::z1(&quotient)?;
            let q_units = quotient.level0_elements()?;
            let q_h1 = cosimplicial::h1_from_parts(&quotient, &q_z1, &q_units)?;
            quotient_h1_size = Some(q_h1.class_count());

            // node ℋ¹(E): image of push = preimage of distinguished under
            // the quotient map on classes
            let image_push: std::collections::BTreeSet<usize> = (0..self.d_coh.h1.class_count())
                .map(|c| self.push_h1_class(c))
                .collect::<Result<_>>()?;
            let mut quot_preimage = std::collections::BTreeSet::new();
            for class in 0..self.e_coh.h1.class_count() {
                let rep = &self.e_coh.h1.orbits[class].representative;
                let canon = quotient.canonical1(rep);
                let qclass = q_h1.class_of(&canon).ok_or_else(|| Error::AxiomError {
                    name: "quotient class of a cocycle".into(),
                    witness: self.e_diag.level1.describe(rep),
                })?;
                if qclass == 0 {
                    quot_preimage.insert(class);
                }
            }
            nodes.push(("H1(E)".to_string(), image_push == quot_preimage));
            six_term_checked = true;
        }

        let mut term_sizes = vec![
            ("H0(D)".to_string(), self.d_coh.h0.order()),
            ("H0(E)".to_string(), self.e_coh.h0.order()),
            ("relative H0".to_string(), self.relative.h0_indices.len()),
            ("H1(D)".to_string(), self.d_coh.h1.class_count()),
            ("H1(E)".to_string(), self.e_coh.h1.class_count()),
        ];
        if let Some(q) = quotient_h1_size {
            term_sizes.push(("H1(quotient)".to_string(), q));
        }
        Ok(ExactSequenceReport {
            term_sizes,
            nodes,
            normality,
            six_term_checked,
            quotient_h1_size,
            connecting_classes,
        })
    }
}

/// Normality of the image of `sub`'s unit group inside `ambient`'s:
/// commutative algebras short-circuit to true; otherwise a counterexample
/// scan runs within the budget, returning `None` when the scan itself
/// would exceed it.
fn check_normality(
    incl_matrix: &Matrix,
    sub: &Algebra,
    ambient: &Algebra,
    limits: &Limits,
) -> Result<Option<bool>> {
    if ambient.is_commutative() {
        return Ok(Some(true));
    }
    let field = ambient.field();
    if limits.check(field, ambient.dim()).is_err() || limits.check(field, sub.dim()).is_err() {
        return Ok(None);
    }
    let ambient_units = ambient.units(limits)?;
    let img_units: std::collections::BTreeSet<Element> = sub
        .units(limits)?
        .iter()
        .map(|u| ambient.element(incl_matrix.apply(field, &u.coords)))
        .collect();
    // the whole group and the trivial subgroup are normal outright
    if img_units.len() == ambient_units.len() || img_units.len() == 1 {
        return Ok(Some(true));
    }
    for x in &ambient_units {
        let x_inv = ambient.try_inverse(x)?;
        for u in &img_units {
            let conj = ambient.mul(&ambient.mul(x, u)?, &x_inv)?;
            if !img_units.contains(&conj) {
                return Ok(Some(false));
            }
        }
    }
    Ok(Some(true))
}

/// The levelwise quotient diagram of coset representatives, used for the
/// six-term extension when the normality conditions hold.
struct QuotientDiagram<'a> {
    seq: &'a SubalgebraSequence,
    limits: &'a Limits,
    img0: Vec<Element>,
    img1: Vec<Element>,
    img2: Vec<Element>,
}

impl<'a> QuotientDiagram<'a> {
    fn build(seq: &'a SubalgebraSequence, limits: &'a Limits) -> Result<QuotientDiagram<'a>> {
        let field = seq.incl.ambient.field();
        let id_h = Matrix::identity(field, seq.incl.ambient.hopf.dim());
        let incl1 = seq.incl.matrix.kron(field, &id_h);
        let incl2 = incl1.kron(field, &id_h);
        let img = |m: &Matrix, sub: &Algebra, amb: &Algebra| -> Result<Vec<Element>> {
            Ok(sub
                .units(limits)?
                .iter()
                .map(|u| amb.element(m.apply(field, &u.coords)))
                .collect())
        };
        Ok(QuotientDiagram {
            seq,
            limits,
            img0: img(&seq.incl.matrix, &seq.incl.sub.alg, &seq.e_diag.level0)?,
            img1: img(&incl1, &seq.d_diag.level1, &seq.e_diag.level1)?,
            img2: img(&incl2, &seq.d_diag.level2, &seq.e_diag.level2)?,
        })
    }

    fn canonical(&self, img: &[Element], alg: &Algebra, x: &Element) -> Element {
        img.iter()
            .map(|a| alg.mul(a, x).expect("same algebra"))
            .min()
            .expect("image nonempty")
    }

    fn canonical1(&self, x: &Element) -> Element {
        self.canonical(&self.img1, &self.seq.e_diag.level1, x)
    }
}

impl GroupDiagram for QuotientDiagram<'_> {
    type L0 = Element;
    type L1 = Element;
    type L2 = Element;

    fn unit1(&self) -> Element {
        self.canonical(&self.img1, &self.seq.e_diag.level1, &self.seq.e_diag.level1.unit())
    }
    fn mul0(&self, a: &Element, b: &Element) -> Element {
        let prod = self.seq.e_diag.level0.mul(a, b).expect("product");
        self.canonical(&self.img0, &self.seq.e_diag.level0, &prod)
    }
    fn inv0(&self, a: &Element) -> Element {
        let inv = self.seq.e_diag.level0.try_inverse(a).expect("unit");
        self.canonical(&self.img0, &self.seq.e_diag.level0, &inv)
    }
    fn mul1(&self, a: &Element, b: &Element) -> Element {
        let prod = self.seq.e_diag.level1.mul(a, b).expect("product");
        self.canonical(&self.img1, &self.seq.e_diag.level1, &prod)
    }
    fn mul2(&self, a: &Element, b: &Element) -> Element {
        let prod = self.seq.e_diag.level2.mul(a, b).expect("product");
        self.canonical(&self.img2, &self.seq.e_diag.level2, &prod)
    }
    fn d0_level0(&self, x: &Element) -> Element {
        let field = self.seq.e_diag.field();
        let y = self.seq.e_diag.level1.element(self.seq.e_diag.d0_01.apply(field, &x.coords));
        self.canonical(&self.img1, &self.seq.e_diag.level1, &y)
    }
    fn d1_level0(&self, x: &Element) -> Element {
        let field = self.seq.e_diag.field();
        let y = self.seq.e_diag.level1.element(self.seq.e_diag.d1_01.apply(field, &x.coords));
        self.canonical(&self.img1, &self.seq.e_diag.level1, &y)
    }
    fn d0_level1(&self, x: &Element) -> Element {
        let field = self.seq.e_diag.field();
        let y = self.seq.e_diag.level2.element(self.seq.e_diag.d0_12.apply(field, &x.coords));
        self.canonical(&self.img2, &self.seq.e_diag.level2, &y)
    }
    fn d1_level1(&self, x: &Element) -> Element {
        let field = self.seq.e_diag.field();
        let y = self.seq.e_diag.level2.element(self.seq.e_diag.d1_12.apply(field, &x.coords));
        self.canonical(&self.img2, &self.seq.e_diag.level2, &y)
    }
    fn d2_level1(&self, x: &Element) -> Element {
        let field = self.seq.e_diag.field();
        let y = self.seq.e_diag.level2.element(self.seq.e_diag.d2_12.apply(field, &x.coords));
        self.canonical(&self.img2, &self.seq.e_diag.level2, &y)
    }
    fn level0_elements(&self) -> Result<Vec<Element>> {
        let units = self.seq.e_diag.level0.units(self.limits)?;
        let mut reps: Vec<Element> = units
            .iter()
            .map(|u| self.canonical(&self.img0, &self.seq.e_diag.level0, u))
            .collect();
        reps.sort();
        reps.dedup();
        Ok(reps)
    }
    fn cocycle_candidates(&self) -> Result<Vec<Element>> {
        let slice = AffineSpace::full(self.seq.e_diag.field(), self.seq.e_diag.level1.dim());
        let units = units_in_slice(&self.seq.e_diag.level1, &slice, self.limits)?;
        let mut reps: Vec<Element> = units.iter().map(|u| self.canonical1(u)).collect();
        reps.sort();
        reps.dedup();
        Ok(reps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::Hopf;

    fn f3() -> Field {
        Field::prime(3).unwrap()
    }

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn diagram_identities_for_builders() {
        let f = f3();
        for comod in [
            ComoduleAlgebra::dual_numbers(f.clone()).unwrap(),
            ComoduleAlgebra::trivial_coefficients(Hopf::sweedler(f.clone()).unwrap()),
            ComoduleAlgebra::regular(Hopf::sweedler(f.clone()).unwrap()),
            ComoduleAlgebra::over_trivial_hopf(
                ComoduleAlgebra::dual_numbers(f.clone()).unwrap().alg,
            ),
        ] {
            let diag = Diagram::build(comod).unwrap();
            assert!(diag.check_identities().is_ok());
        }
    }

    #[test]
    fn trivial_hopf_diagram_collapses() {
        let f = f3();
        let e2 = ComoduleAlgebra::dual_numbers(f.clone()).unwrap();
        let comod = ComoduleAlgebra::over_trivial_hopf(e2.alg);
        let diag = Diagram::build(comod).unwrap();
        let id = Matrix::identity(&f, 2);
        assert_eq!(diag.d0_01, id);
        assert_eq!(diag.d1_01, id);
    }

    #[test]
    fn sweedler_d1_is_tensor_with_unit() {
        let f = f3();
        let e2 = ComoduleAlgebra::dual_numbers(f.clone()).unwrap();
        let diag = Diagram::build(e2).unwrap();
        // d¹(h) = h⊗1
        let h = diag.level0.basis_element(1);
        let d1h = diag.d1_01.apply(&f, &h.coords);
        let mut expect = vec![f.zero(); 8];
        expect[4] = f.one();
        assert_eq!(d1h, expect);
    }

    #[test]
    fn first_example_trivial_hopf() {
        // ℋ⁰(k, E₂) = E₂^× (6 elements), ℋ¹(k, E₂) trivial
        let f = f3();
        let e2 = ComoduleAlgebra::dual_numbers(f.clone()).unwrap();
        let comod = ComoduleAlgebra::over_trivial_hopf(e2.alg);
        let diag = Diagram::build(comod).unwrap();
        let coh = Cohomology::compute(&diag, &limits()).unwrap();
        assert_eq!(coh.h0.order(), 6);
        assert_eq!(coh.z1.len(), 1);
        assert_eq!(coh.h1.class_count(), 1);
    }

    #[test]
    fn first_example_trivial_coefficients() {
        // ℋ⁰(H₄, k) = k^×, ℋ¹(H₄, k) ≅ Gr(H₄), 2 classes
        let f = f3();
        let h4 = Hopf::sweedler(f.clone()).unwrap();
        let comod = ComoduleAlgebra::trivial_coefficients(h4);
        let diag = Diagram::build(comod).unwrap();
        let coh = Cohomology::compute(&diag, &limits()).unwrap();
        assert_eq!(coh.h0.order(), 2);
        assert_eq!(coh.h1.class_count(), 2);
    }

    #[test]
    fn first_example_self_coefficients() {
        // ℋ⁰(H₄, H₄) = k^×, ℋ¹(H₄, H₄) trivial
        let f = f3();
        let h4 = Hopf::sweedler(f.clone()).unwrap();
        let comod = ComoduleAlgebra::regular(h4);
        let diag = Diagram::build(comod).unwrap();
        let coh = Cohomology::compute(&diag, &limits()).unwrap();
        assert_eq!(coh.h0.order(), 2);
        assert_eq!(coh.h1.class_count(), 1);
    }

    #[test]
    fn sweedler_dual_numbers_cohomology() {
        // ℋ⁰(H₄, E₂) = k^×; |𝒵¹| = 2p; ℋ¹ = {[1⊗1], [1⊗g]}
        let f = f3();
        let comod = ComoduleAlgebra::dual_numbers(f.clone()).unwrap();
        let diag = Diagram::build(comod).unwrap();
        let coh = Cohomology::compute(&diag, &limits()).unwrap();
        assert_eq!(coh.h0.order(), 2);
        assert_eq!(coh.z1.len(), 6);
        assert_eq!(coh.h1.class_count(), 2);
        let rep0 = &coh.h1.orbits[0].representative;
        let rep1 = &coh.h1.orbits[1].representative;
        assert_eq!(*rep0, diag.level1.unit());
        let mut one_g = vec![f.zero(); 8];
        one_g[1] = f.one();
        assert_eq!(rep1.coords, one_g);
    }

    #[test]
    fn commutative_group_structure() {
        // ℋ¹(k^{ℤ/2}, k) is a group of order 2
        let f = f3();
        let kz2 = Hopf::function_algebra(&crate::group::FiniteGroup::cyclic(2), f.clone()).unwrap();
        let comod = ComoduleAlgebra::trivial_coefficients(kz2);
        let diag = Diagram::build(comod).unwrap();
        let group = commutative_h1_group(&diag, &limits()).unwrap();
        assert_eq!(group.cohomology.h1.class_count(), 2);
        // nontrivial · nontrivial = trivial
        assert_eq!(group.table[1 * 2 + 1], 0);
        assert_eq!(group.identity, 0);
    }

    #[test]
    fn rational_fields_verify_but_do_not_enumerate() {
        // the full identity suite runs exactly over ℚ; enumeration
        // requests fail with the dedicated error
        let q = Field::rational();
        let comod = ComoduleAlgebra::dual_numbers(q).unwrap();
        let diag = Diagram::build(comod).unwrap();
        assert!(diag.check_identities().is_ok());
        assert!(matches!(
            h0(&diag, &limits()),
            Err(Error::RationalFieldNotEnumerable)
        ));
        assert!(matches!(
            z1(&diag, &limits()),
            Err(Error::RationalFieldNotEnumerable)
        ));
    }

    #[test]
    fn self_comodule_of_a_cyclic_function_algebra() {
        // k^{ℤ/3} over itself: H⁰ = k^×, H¹ trivial
        let f = f3();
        let kz3 = Hopf::function_algebra(&crate::group::FiniteGroup::cyclic(3), f).unwrap();
        let diag = Diagram::build(ComoduleAlgebra::regular(kz3)).unwrap();
        let coh = Cohomology::compute(&diag, &limits()).unwrap();
        assert_eq!(coh.h0.order(), 2);
        assert_eq!(coh.h1.class_count(), 1);
    }

    #[test]
    fn commutative_group_trivial_cases() {
        // over the trivial Hopf algebra the group collapses
        let f = f3();
        let e2 = ComoduleAlgebra::dual_numbers(f.clone()).unwrap();
        let diag = Diagram::build(ComoduleAlgebra::over_trivial_hopf(e2.alg)).unwrap();
        let group = commutative_h1_group(&diag, &limits()).unwrap();
        assert_eq!(group.cohomology.h1.class_count(), 1);
        assert_eq!(group.table, vec![0]);
        // a noncommutative Hopf algebra is rejected
        let h4 = ComoduleAlgebra::trivial_coefficients(Hopf::sweedler(f).unwrap());
        let diag = Diagram::build(h4).unwrap();
        assert!(matches!(
            commutative_h1_group(&diag, &limits()),
            Err(Error::NotCommutative(_))
        ));
    }

    /// The scalar inclusion `k ↪ E` over a shared Hopf algebra.
    fn scalar_inclusion(ambient: ComoduleAlgebra) -> Inclusion {
        let field = ambient.field().clone();
        let sub = ComoduleAlgebra::trivial_coefficients(ambient.hopf.clone());
        let matrix = Matrix::column(ambient.alg.unit_coords());
        let _ = field;
        Inclusion::new(sub, ambient, matrix).unwrap()
    }

    #[test]
    fn relative_h0_for_scalars_in_dual_numbers() {
        let f = f3();
        let e2 = ComoduleAlgebra::dual_numbers(f.clone()).unwrap();
        let incl = scalar_inclusion(e2);
        let rel = relative_h0(&incl, &limits()).unwrap();
        // 6 units of E₂ fall into 3 cosets of k^×; only the coset of 1
        // satisfies the equalizer condition
        assert_eq!(rel.cosets.len(), 3);
        assert_eq!(rel.h0_indices.len(), 1);
        assert_eq!(rel.h0_indices[0], rel.distinguished);
        // degenerate cases collapse to a point
        let k_in_k = Inclusion::new(
            incl.sub.clone(),
            incl.sub.clone(),
            Matrix::identity(&f, 1),
        )
        .unwrap();
        let rel = relative_h0(&k_in_k, &limits()).unwrap();
        assert_eq!(rel.cosets.len(), 1);
        assert_eq!(rel.h0_indices.len(), 1);
    }

    #[test]
    fn exact_sequence_scalars_in_dual_numbers() {
        let f = f3();
        let e2 = ComoduleAlgebra::dual_numbers(f.clone()).unwrap();
        let seq = SubalgebraSequence::build(scalar_inclusion(e2), &limits()).unwrap();
        let report = seq.verify(&limits()).unwrap();
        assert!(report.is_exact(), "nodes: {:?}", report.nodes);
        assert_eq!(
            report.term_sizes[..5]
                .iter()
                .map(|(_, n)| *n)
                .collect::<Vec<_>>(),
            vec![2, 2, 1, 2, 2]
        );
        // level 1 is not normal here (conjugation escapes 1⊗H₄),
        // so only the five-term sequence applies
        assert_eq!(report.normality[0], Some(true));
        assert_eq!(report.normality[1], Some(false));
        assert!(!report.six_term_checked);
    }

    #[test]
    fn exact_sequence_scalars_in_function_algebra() {
        // k ↪ k^{ℤ/2} over k^{ℤ/2}: commutative, six-term sequence applies
        let f = f3();
        let kz2 = Hopf::function_algebra(&crate::group::FiniteGroup::cyclic(2), f.clone()).unwrap();
        let comod = ComoduleAlgebra::regular(kz2);
        let seq = SubalgebraSequence::build(scalar_inclusion(comod), &limits()).unwrap();
        let report = seq.verify(&limits()).unwrap();
        assert!(report.is_exact(), "nodes: {:?}", report.nodes);
        assert_eq!(report.normality, [Some(true); 3]);
        assert!(report.six_term_checked);
        // the connecting map is onto ℋ¹(k^{ℤ/2}, k) here
        let classes: std::collections::BTreeSet<_> =
            report.connecting_classes.iter().copied().collect();
        assert_eq!(classes.len(), 2);
    }

    #[test]
    fn connecting_map_of_distinguished_coset_is_trivial() {
        let f = f3();
        let e2 = ComoduleAlgebra::dual_numbers(f).unwrap();
        let seq = SubalgebraSequence::build(scalar_inclusion(e2), &limits()).unwrap();
        let class = seq.connecting(seq.relative.distinguished).unwrap();
        assert_eq!(class, 0);
    }

    #[test]
    fn identity_inclusion_collapses() {
        // D = E: one coset, a constant connecting map, everything exact
        let f = f3();
        let e2 = ComoduleAlgebra::dual_numbers(f.clone()).unwrap();
        let incl = Inclusion::new(e2.clone(), e2.clone(), Matrix::identity(&f, 2)).unwrap();
        let seq = SubalgebraSequence::build(incl, &limits()).unwrap();
        assert_eq!(seq.relative.cosets.len(), 1);
        assert_eq!(seq.relative.h0_indices.len(), 1);
        assert_eq!(seq.connecting(0).unwrap(), 0);
        let report = seq.verify(&limits()).unwrap();
        assert!(report.is_exact());
    }

    #[test]
    fn bad_inclusions_rejected() {
        let f = f3();
        let e2 = ComoduleAlgebra::dual_numbers(f.clone()).unwrap();
        let sub = ComoduleAlgebra::trivial_coefficients(e2.hopf.clone());
        // zero map is not injective
        let zero = Matrix::zeros(&f, 2, 1);
        assert!(matches!(
            Inclusion::new(sub.clone(), e2.clone(), zero),
            Err(Error::NotInjective)
        ));
        // sending 1 to h is injective but not an algebra morphism
        let mut to_h = Matrix::zeros(&f, 2, 1);
        to_h[(1, 0)] = f.one();
        assert!(matches!(
            Inclusion::new(sub, e2, to_h),
            Err(Error::NotAMorphism(_))
        ));
    }
}
