//! Classical non-abelian group cohomology `ℍ*(G, A)` for finite groups,
//! and the levelwise bridge identifying it with the Hopf theory over
//! function algebras `k^G`.
//!
//! A `k^G`-comodule algebra `E` carries a `G`-action read off the
//! coaction, `Δ_E(x) = Σ_g (^g x)⊗δ_g`, turning `E^×` into a `G`-group.
//! The group diagram has levels `A`, `Map(G, A)`, `Map(G², A)` with
//!
//! ```text
//!   d⁰(x): g ↦ ^g x              d⁰(α): (g,g') ↦ ^g α(g')
//!   d¹(x): g ↦ x                 d¹(α): (g,g') ↦ α(gg')
//!                                 d²(α): (g,g') ↦ α(g)
//! ```
//!
//! so cocycles are the crossed homomorphisms `α(gg') = α(g)·^g α(g')` and
//! the orbit action is `(α ⇀ a)(g) = a⁻¹·α(g)·^g a`. The bridge `γ` is
//! implemented as explicit coordinate permutations and verified as exact
//! matrix identities against the Hopf-side cofaces.

use crate::algebra::{Algebra, Element};
use crate::cohomology::{self, Cohomology, Diagram};
use crate::comodule::ComoduleAlgebra;
use crate::cosimplicial::{self, GroupDiagram, H1};
use crate::enumerate::Limits;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::FiniteGroup;
use crate::hopf::Hopf;
use crate::matrix::Matrix;

/// A finite group acting on the unit group of an algebra by algebra
/// automorphisms. Elements of `A = E^×` are indexed into a sorted list;
/// multiplication, inverses, and the action are table lookups.
#[derive(Debug, Clone)]
pub struct GGroup {
    pub group: FiniteGroup,
    pub comod: ComoduleAlgebra,
    pub elements: Vec<Element>,
    table: Vec<u32>,
    inv: Vec<u32>,
    action: Vec<u32>,
    /// The linear action `x ↦ ^g x` on all of `E`, one matrix per `g`.
    pub action_matrices: Vec<Matrix>,
}

impl GGroup {
    /// Extracts the `G`-group structure on `E^×` from a comodule algebra
    /// over a function algebra, verifying that each `^g·` is an algebra
    /// automorphism and that the assignments compose as an action.
    pub fn from_comodule(comod: &ComoduleAlgebra, limits: &Limits) -> Result<GGroup> {
        let group = comod
            .hopf
            .recognize_function_algebra()
            .ok_or_else(|| Error::NotAMorphism("coefficients are not over a function algebra".into()))?;
        let field = comod.field();
        let n = group.order();
        let de = comod.alg.dim();

        // ^g x = coefficient of δ_g in Δ_E(x)
        let action_matrices: Vec<Matrix> = (0..n)
            .map(|g| {
                Matrix::from_fn(field, de, de, |i, j| comod.coaction[(i * n + g, j)].clone())
            })
            .collect();

        // action by algebra automorphisms
        let id = Matrix::identity(field, de);
        if action_matrices[group.identity()] != id {
            return Err(Error::AxiomError {
                name: "identity acts trivially".into(),
                witness: "action of e".into(),
            });
        }
        for (g, m) in action_matrices.iter().enumerate() {
            if let Some(w) = cohomology::algebra_morphism_failure(field, m, &comod.alg, &comod.alg)
            {
                return Err(Error::AxiomError {
                    name: format!("action of {} is an algebra morphism", group.label(g)),
                    witness: w,
                });
            }
            if m.inverse(field)?.is_none() {
                return Err(Error::AxiomError {
                    name: format!("action of {} is invertible", group.label(g)),
                    witness: "singular action matrix".into(),
                });
            }
        }
        for a in 0..n {
            for b in 0..n {
                let composed = action_matrices[a].mul(field, &action_matrices[b]);
                if composed != action_matrices[group.mul(a, b)] {
                    return Err(Error::AxiomError {
                        name: "action is multiplicative".into(),
                        witness: format!("({}, {})", group.label(a), group.label(b)),
                    });
                }
            }
        }

        let elements = comod.alg.units(limits)?;
        let count = elements.len();
        let index_of = |e: &Element| -> Result<u32> {
            elements
                .binary_search(e)
                .map(|i| i as u32)
                .map_err(|_| Error::AxiomError {
                    name: "unit group closed".into(),
                    witness: comod.alg.describe(e),
                })
        };
        let mut table = vec![0u32; count * count];
        let mut inv = vec![0u32; count];
        for (i, a) in elements.iter().enumerate() {
            inv[i] = index_of(&comod.alg.try_inverse(a)?)?;
            for (j, b) in elements.iter().enumerate() {
                table[i * count + j] = index_of(&comod.alg.mul(a, b)?)?;
            }
        }
        let mut action = vec![0u32; n * count];
        for g in 0..n {
            for (i, a) in elements.iter().enumerate() {
                let image = comod.alg.element(action_matrices[g].apply(field, &a.coords));
                action[g * count + i] = index_of(&image)?;
            }
        }
        Ok(GGroup {
            group,
            comod: comod.clone(),
            elements,
            table,
            inv,
            action,
            action_matrices,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.elements.len() + b as usize]
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    pub fn act(&self, g: usize, a: u32) -> u32 {
        self.action[g * self.elements.len() + a as usize]
    }

    pub fn identity_index(&self) -> u32 {
        self.elements
            .binary_search(&self.comod.alg.unit())
            .expect("unit is invertible") as u32
    }

    pub fn element(&self, idx: u32) -> &Element {
        &self.elements[idx as usize]
    }
}

/// [`GroupDiagram`] on `A ⇉ Map(G,A) ⇶ Map(G²,A)`; maps are dense tuples
/// indexed by group elements (pairs in row-major `(u,v) ↦ u·|G| + v`).
pub struct MapDiagram<'a> {
    pub ggroup: &'a GGroup,
    pub limits: &'a Limits,
}

impl GroupDiagram for MapDiagram<'_> {
    type L0 = u32;
    type L1 = Vec<u32>;
    type L2 = Vec<u32>;

    fn unit1(&self) -> Vec<u32> {
        vec![self.ggroup.identity_index(); self.ggroup.group.order()]
    }
    fn mul0(&self, a: &u32, b: &u32) -> u32 {
        self.ggroup.mul(*a, *b)
    }
    fn inv0(&self, a: &u32) -> u32 {
        self.ggroup.inv(*a)
    }
    fn mul1(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        a.iter().zip(b).map(|(x, y)| self.ggroup.mul(*x, *y)).collect()
    }
    fn mul2(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        a.iter().zip(b).map(|(x, y)| self.ggroup.mul(*x, *y)).collect()
    }
    fn d0_level0(&self, x: &u32) -> Vec<u32> {
        (0..self.ggroup.group.order()).map(|g| self.ggroup.act(g, *x)).collect()
    }
    fn d1_level0(&self, x: &u32) -> Vec<u32> {
        vec![*x; self.ggroup.group.order()]
    }
    fn d0_level1(&self, alpha: &Vec<u32>) -> Vec<u32> {
        let n = self.ggroup.group.order();
        let mut out = Vec::with_capacity(n * n);
        for u in 0..n {
            for v in 0..n {
                out.push(self.ggroup.act(u, alpha[v]));
            }
        }
        out
    }
    fn d1_level1(&self, alpha: &Vec<u32>) -> Vec<u32> {
        let n = self.ggroup.group.order();
        let mut out = Vec::with_capacity(n * n);
        for u in 0..n {
            for v in 0..n {
                out.push(alpha[self.ggroup.group.mul(u, v)]);
            }
        }
        out
    }
    fn d2_level1(&self, alpha: &Vec<u32>) -> Vec<u32> {
        let n = self.ggroup.group.order();
        let mut out = Vec::with_capacity(n * n);
        for u in 0..n {
            for _v in 0..n {
                out.push(alpha[u]);
            }
        }
        out
    }
    fn level0_elements(&self) -> Result<Vec<u32>> {
        Ok((0..self.ggroup.order() as u32).collect())
    }
    fn cocycle_candidates(&self) -> Result<Vec<Vec<u32>>> {
        let n = self.ggroup.group.order() as u32;
        let a = self.ggroup.order() as u64;
        let total = self.limits.check_count(a, n)?;
        let mut out = Vec::new();
        let mut tuple = vec![0u32; n as usize];
        for idx in 0..total {
            let mut rem = idx;
            for slot in (0..n as usize).rev() {
                tuple[slot] = (rem % a) as u32;
                rem /= a;
            }
            out.push(tuple.clone());
        }
        Ok(out)
    }
}

/// `ℍ⁰`, `ℤ¹`, `ℍ¹` of a `G`-group.
#[derive(Debug, Clone)]
pub struct GroupCohomology {
    /// Fixed points `A^G`, as indices into the unit list.
    pub h0: Vec<u32>,
    pub z1: Vec<Vec<u32>>,
    pub h1: H1<Vec<u32>, u32>,
}

pub fn compute_group_cohomology(ggroup: &GGroup, limits: &Limits) -> Result<GroupCohomology> {
    let diagram = MapDiagram { ggroup, limits };
    let h0 = cosimplicial::h0(&diagram)?;
    let z1 = cosimplicial::z1(&diagram)?;
    let units = diagram.level0_elements()?;
    let h1 = cosimplicial::h1_from_parts(&diagram, &z1, &units)?;
    // the constant-1 map is always a cocycle
    debug_assert!(z1.binary_search(&diagram.unit1()).is_ok());
    Ok(GroupCohomology { h0, z1, h1 })
}

/// The levelwise bridge between the Hopf diagram of `E` over `k^G` and
/// the group diagram of `E^×`: coordinate permutations `γ₁`, `γ₂` checked
/// to be algebra isomorphisms onto the product algebras `∏_g E`, plus the
/// intertwining identities `γ_j∘dⁱ = dⁱ∘γ_{j−1}` as exact matrix
/// equalities.
#[derive(Debug, Clone)]
pub struct GammaBridge {
    pub gamma1: Matrix,
    pub gamma2: Matrix,
    pub checks: Vec<(String, bool)>,
}

impl GammaBridge {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

pub fn gamma_bridge(diagram: &Diagram, ggroup: &GGroup) -> Result<GammaBridge> {
    let field = diagram.field();
    let de = diagram.level0.dim();
    let n = ggroup.group.order();
    let mut checks = Vec::new();

    // γ₁: E⊗k^G → E^{|G|}, (i, g) ↦ (g, i); γ₂ likewise on pairs
    let mut gamma1 = Matrix::zeros(field, n * de, de * n);
    for i in 0..de {
        for g in 0..n {
            gamma1[(g * de + i, i * n + g)] = field.one();
        }
    }
    let mut gamma2 = Matrix::zeros(field, n * n * de, de * n * n);
    for i in 0..de {
        for g in 0..n {
            for g2 in 0..n {
                gamma2[((g * n + g2) * de + i, (i * n + g) * n + g2)] = field.one();
            }
        }
    }

    // product algebras ∏_g E and ∏_{(g,g')} E
    let prod1 = product_algebra(&diagram.level0, n)?;
    let prod2 = product_algebra(&diagram.level0, n * n)?;
    checks.push((
        "γ₁ is an algebra isomorphism onto the product".into(),
        cohomology::algebra_morphism_failure(field, &gamma1, &diagram.level1, &prod1).is_none(),
    ));
    checks.push((
        "γ₂ is an algebra isomorphism onto the product".into(),
        cohomology::algebra_morphism_failure(field, &gamma2, &diagram.level2, &prod2).is_none(),
    ));

    // group-side coface matrices on coordinate spaces (g-major blocks)
    let stack = |blocks: Vec<Matrix>| -> Matrix {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks[0].cols;
        let mut out = Matrix::zeros(field, rows, cols);
        let mut offset = 0;
        for b in &blocks {
            for r in 0..b.rows {
                for c in 0..cols {
                    out[(offset + r, c)] = b[(r, c)].clone();
                }
            }
            offset += b.rows;
        }
        out
    };
    let id_e = Matrix::identity(field, de);
    let d0_grp_01 = stack((0..n).map(|g| ggroup.action_matrices[g].clone()).collect());
    let d1_grp_01 = stack(vec![id_e.clone(); n]);

    let block_select = |rows_blocks: usize, pick: &dyn Fn(usize) -> (usize, Matrix)| -> Matrix {
        // block row b holds the matrix pick(b).1 at block column pick(b).0
        let mut out = Matrix::zeros(field, rows_blocks * de, n * de);
        for b in 0..rows_blocks {
            let (src, m) = pick(b);
            for r in 0..de {
                for c in 0..de {
                    out[(b * de + r, src * de + c)] = m[(r, c)].clone();
                }
            }
        }
        out
    };
    let d0_grp_12 = block_select(n * n, &|b| {
        let (u, v) = (b / n, b % n);
        (v, ggroup.action_matrices[u].clone())
    });
    let d1_grp_12 = block_select(n * n, &|b| {
        let (u, v) = (b / n, b % n);
        (ggroup.group.mul(u, v), id_e.clone())
    });
    let d2_grp_12 = block_select(n * n, &|b| {
        let (u, _v) = (b / n, b % n);
        (u, id_e.clone())
    });

    let intertwinings = [
        ("γ₁∘d⁰ = d⁰∘γ₀", gamma1.mul(field, &diagram.d0_01), d0_grp_01),
        ("γ₁∘d¹ = d¹∘γ₀", gamma1.mul(field, &diagram.d1_01), d1_grp_01),
        (
            "γ₂∘d⁰ = d⁰∘γ₁",
            gamma2.mul(field, &diagram.d0_12),
            d0_grp_12.mul(field, &gamma1),
        ),
        (
            "γ₂∘d¹ = d¹∘γ₁",
            gamma2.mul(field, &diagram.d1_12),
            d1_grp_12.mul(field, &gamma1),
        ),
        (
            "γ₂∘d² = d²∘γ₁",
            gamma2.mul(field, &diagram.d2_12),
            d2_grp_12.mul(field, &gamma1),
        ),
    ];
    for (name, lhs, rhs) in intertwinings {
        checks.push((name.to_string(), lhs == rhs));
    }
    Ok(GammaBridge { gamma1, gamma2, checks })
}

/// `∏_{i<copies} E` with component-wise product.
fn product_algebra(e: &Algebra, copies: usize) -> Result<Algebra> {
    let field = e.field().clone();
    let de = e.dim();
    let dim = copies * de;
    let z = field.zero();
    let mut mult = vec![vec![vec![z.clone(); dim]; dim]; dim];
    for c in 0..copies {
        for i in 0..de {
            for j in 0..de {
                let prod = e.product_of_basis(i, j);
                for (k, v) in prod.iter().enumerate() {
                    mult[c * de + i][c * de + j][c * de + k] = v.clone();
                }
            }
        }
    }
    let mut unit = vec![z; dim];
    for c in 0..copies {
        for (i, u) in e.unit_coords().iter().enumerate() {
            unit[c * de + i] = u.clone();
        }
    }
    let labels = (0..copies)
        .flat_map(|c| e.labels().iter().map(move |l| format!("{l}[{c}]")))
        .collect();
    Algebra::new(field, labels, mult, unit)
}

/// Decomposes an element of `E⊗k^G` into its unit components; `None`
/// if some component is not a unit of `E`.
pub fn gamma1_apply(ggroup: &GGroup, x: &Element) -> Option<Vec<u32>> {
    let de = ggroup.comod.alg.dim();
    let n = ggroup.group.order();
    let field = ggroup.comod.field();
    let mut out = Vec::with_capacity(n);
    for g in 0..n {
        let mut comp = vec![field.zero(); de];
        for (i, slot) in comp.iter_mut().enumerate() {
            *slot = x.coords[i * n + g].clone();
        }
        let e = ggroup.comod.alg.element(comp);
        match ggroup.elements.binary_search(&e) {
            Ok(idx) => out.push(idx as u32),
            Err(_) => return None,
        }
    }
    Some(out)
}

/// Side-by-side comparison of `ℋ*(k^G, E)` and `ℍ*(G, E^×)`: the two
/// `H⁰` computed independently and compared as element sets, the two `H¹`
/// paired class-by-class through `γ₁`.
#[derive(Debug, Clone)]
pub struct GroupComparison {
    pub bridge: GammaBridge,
    pub hopf: Cohomology,
    pub group: GroupCohomology,
    pub h0_equal: bool,
    /// `pairing[i] = j` sends Hopf class `i` to group class `j`.
    pub pairing: Vec<usize>,
    pub h1_bijective: bool,
}

impl GroupComparison {
    pub fn verified(&self) -> bool {
        self.bridge.all_hold()
            && self.h0_equal
            && self.h1_bijective
            && self.pairing.first() == Some(&0)
    }
}

pub fn compare_group_cohomology(
    comod: &ComoduleAlgebra,
    limits: &Limits,
) -> Result<GroupComparison> {
    let diagram = Diagram::build(comod.clone())?;
    let hopf = Cohomology::compute(&diagram, limits)?;
    let ggroup = GGroup::from_comodule(comod, limits)?;
    let group = compute_group_cohomology(&ggroup, limits)?;
    let bridge = gamma_bridge(&diagram, &ggroup)?;

    // H⁰ agree as subsets of E (γ₀ = id)
    let group_h0: Vec<Element> = group
        .h0
        .iter()
        .map(|&i| ggroup.element(i).clone())
        .collect();
    let h0_equal = hopf.h0.elements == group_h0;

    // H¹ pairing through γ₁ on representatives
    let mut pairing = Vec::with_capacity(hopf.h1.class_count());
    let mut seen = std::collections::BTreeSet::new();
    let mut bijective = hopf.h1.class_count() == group.h1.class_count();
    for orbit in &hopf.h1.orbits {
        let tuple = gamma1_apply(&ggroup, &orbit.representative).ok_or_else(|| {
            Error::AxiomError {
                name: "cocycle has unit components".into(),
                witness: diagram.level1.describe(&orbit.representative),
            }
        })?;
        match group.h1.class_of(&tuple) {
            Some(j) => {
                if !seen.insert(j) {
                    bijective = false;
                }
                pairing.push(j);
            }
            None => {
                bijective = false;
                pairing.push(usize::MAX);
            }
        }
    }
    Ok(GroupComparison { bridge, hopf, group, h0_equal, pairing, h1_bijective: bijective })
}

/// Cross-checks the identification of grouplike elements of `k^G` with
/// the characters `Hom(G, k^×)`, through both `ℋ¹(k^G, k)` and
/// `ℍ¹(G, k^×)`.
#[derive(Debug, Clone)]
pub struct PontryaginReport {
    pub character_count: usize,
    pub grouplike_count: usize,
    pub hopf_h1_count: usize,
    pub group_h1_count: usize,
    /// Character tuples recovered from the grouplikes match exactly.
    pub matched: bool,
    /// The grouplike ↔ character bijection respects multiplication.
    pub multiplicative: bool,
}

impl PontryaginReport {
    pub fn verified(&self) -> bool {
        self.matched
            && self.multiplicative
            && self.character_count == self.grouplike_count
            && self.character_count == self.hopf_h1_count
            && self.character_count == self.group_h1_count
    }
}

pub fn pontryagin_check(group: &FiniteGroup, field: Field, limits: &Limits) -> Result<PontryaginReport> {
    let p = field.characteristic();
    let characters = group.characters(p);
    let hopf = Hopf::function_algebra(group, field.clone())?;
    let grouplikes = hopf.grouplikes(limits)?;

    // grouplike Σ x_g δ_g ↦ the map g ↦ x_g
    let mut recovered: Vec<Vec<u64>> = grouplikes
        .elements
        .iter()
        .map(|e| {
            e.coords
                .iter()
                .map(|s| s.residue().expect("prime field"))
                .collect()
        })
        .collect();
    recovered.sort();
    let matched = recovered == characters;

    // multiplicativity: product of grouplikes ↔ pointwise product of maps
    let mut multiplicative = true;
    let alg = hopf.algebra();
    for a in &grouplikes.elements {
        for b in &grouplikes.elements {
            let prod = alg.mul(a, b)?;
            let lhs: Vec<u64> = prod.coords.iter().map(|s| s.residue().unwrap()).collect();
            let rhs: Vec<u64> = a
                .coords
                .iter()
                .zip(&b.coords)
                .map(|(x, y)| (x.residue().unwrap() * y.residue().unwrap()) % p)
                .collect();
            if lhs != rhs {
                multiplicative = false;
            }
        }
    }

    let comod = ComoduleAlgebra::trivial_coefficients(hopf);
    let diagram = Diagram::build(comod.clone())?;
    let hopf_h1 = cohomology::commutative_h1_group(&diagram, limits)?;
    let ggroup = GGroup::from_comodule(&comod, limits)?;
    let group_coh = compute_group_cohomology(&ggroup, limits)?;

    Ok(PontryaginReport {
        character_count: characters.len(),
        grouplike_count: grouplikes.order(),
        hopf_h1_count: hopf_h1.cohomology.h1.class_count(),
        group_h1_count: group_coh.h1.class_count(),
        matched,
        multiplicative,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Field {
        Field::prime(3).unwrap()
    }

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn trivial_action_from_trivial_coefficients() {
        let f = f3();
        let kz2 = Hopf::function_algebra(&FiniteGroup::cyclic(2), f.clone()).unwrap();
        let comod = ComoduleAlgebra::trivial_coefficients(kz2);
        let g = GGroup::from_comodule(&comod, &limits()).unwrap();
        assert_eq!(g.order(), 2); // k^× over 𝔽₃
        for a in 0..2 {
            assert_eq!(g.act(1, a), a); // trivial action
            assert_eq!(g.act(0, a), a);
        }
    }

    #[test]
    fn conjugation_action_matches_group_conjugation() {
        let f = f3();
        let s3 = FiniteGroup::symmetric(3);
        let find = |lbl: &str| s3.labels().iter().position(|l| l == lbl).unwrap();
        let t12 = find("(12)");
        let comod = ComoduleAlgebra::conjugation(&s3, &[s3.identity(), t12], f.clone()).unwrap();
        let g = GGroup::from_comodule(&comod, &limits()).unwrap();
        // basis vector of (13) maps to basis vector of (23) under ^(12)
        let e13 = comod.alg.basis_element(find("(13)"));
        let image = comod.alg.element(g.action_matrices[1].apply(&f, &e13.coords));
        let e23 = comod.alg.basis_element(find("(23)"));
        assert_eq!(image, e23);
        // identity acts trivially on a sample of units
        for u in g.elements.iter().take(5) {
            let fixed = comod.alg.element(g.action_matrices[0].apply(&f, &u.coords));
            assert_eq!(&fixed, u);
        }
    }

    #[test]
    fn cyclic_two_cocycles() {
        // Z¹(ℤ/2, 𝔽₃^× trivial) = the two homomorphisms
        let f = f3();
        let kz2 = Hopf::function_algebra(&FiniteGroup::cyclic(2), f.clone()).unwrap();
        let comod = ComoduleAlgebra::trivial_coefficients(kz2);
        let g = GGroup::from_comodule(&comod, &limits()).unwrap();
        let coh = compute_group_cohomology(&g, &limits()).unwrap();
        assert_eq!(coh.z1.len(), 2);
        assert_eq!(coh.h1.class_count(), 2);
        // H⁰ of a trivial action is everything
        assert_eq!(coh.h0.len(), 2);
        // trivial group: the single map constrained by α(e) = 1
        let ktriv = Hopf::trivial(f);
        let comod = ComoduleAlgebra::trivial_coefficients(ktriv);
        let g = GGroup::from_comodule(&comod, &limits()).unwrap();
        let coh = compute_group_cohomology(&g, &limits()).unwrap();
        assert_eq!(coh.z1.len(), 1);
        assert_eq!(coh.h1.class_count(), 1);
    }

    #[test]
    fn bridge_for_trivial_coefficients() {
        let f = f3();
        let kz2 = Hopf::function_algebra(&FiniteGroup::cyclic(2), f.clone()).unwrap();
        let comod = ComoduleAlgebra::trivial_coefficients(kz2);
        let cmp = compare_group_cohomology(&comod, &limits()).unwrap();
        assert!(cmp.bridge.all_hold());
        assert!(cmp.h0_equal);
        assert!(cmp.h1_bijective);
        assert_eq!(cmp.hopf.h1.class_count(), 2);
        assert_eq!(cmp.pairing[0], 0);
        assert!(cmp.verified());
    }

    #[test]
    fn gamma1_of_unit_is_the_constant_map() {
        let f = f3();
        let kz2 = Hopf::function_algebra(&FiniteGroup::cyclic(2), f.clone()).unwrap();
        let comod = ComoduleAlgebra::trivial_coefficients(kz2);
        let diag = Diagram::build(comod.clone()).unwrap();
        let g = GGroup::from_comodule(&comod, &limits()).unwrap();
        let tuple = gamma1_apply(&g, &diag.level1.unit()).unwrap();
        assert_eq!(tuple, vec![g.identity_index(); 2]);
        // elements with a non-invertible component are rejected
        let zero = diag.level1.zero();
        assert!(gamma1_apply(&g, &zero).is_none());
    }

    #[test]
    fn bridge_with_trivial_group() {
        let f = f3();
        let ktriv = Hopf::trivial(f);
        let comod = ComoduleAlgebra::trivial_coefficients(ktriv);
        let cmp = compare_group_cohomology(&comod, &limits()).unwrap();
        assert!(cmp.verified());
        assert_eq!(cmp.hopf.h1.class_count(), 1);
        assert_eq!(cmp.group.h1.class_count(), 1);
    }

    #[test]
    fn characters_of_a_nonabelian_group() {
        // S₃ abelianizes to ℤ/2: two characters over 𝔽₇, recovered
        // through all four routes
        let s3 = FiniteGroup::symmetric(3);
        let rep = pontryagin_check(&s3, Field::prime(7).unwrap(), &limits()).unwrap();
        assert!(rep.verified());
        assert_eq!(rep.character_count, 2);

        let z4 = FiniteGroup::cyclic(4);
        let rep = pontryagin_check(&z4, Field::prime(5).unwrap(), &limits()).unwrap();
        assert!(rep.verified());
        assert_eq!(rep.character_count, 4);
    }

    #[test]
    fn pontryagin_small_cases() {
        let limits = limits();
        let z2 = FiniteGroup::cyclic(2);
        let rep = pontryagin_check(&z2, f3(), &limits).unwrap();
        assert!(rep.verified());
        assert_eq!(rep.character_count, 2);

        let z3 = FiniteGroup::cyclic(3);
        let rep = pontryagin_check(&z3, Field::prime(5).unwrap(), &limits).unwrap();
        assert!(rep.verified());
        assert_eq!(rep.character_count, 1);

        let rep = pontryagin_check(&FiniteGroup::trivial(), f3(), &limits).unwrap();
        assert!(rep.verified());
        assert_eq!(rep.character_count, 1);
    }
}
