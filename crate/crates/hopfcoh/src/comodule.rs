//! Comodule algebras and Hopf modules, with exact axiom verification on
//! basis elements (complete by multilinearity) and builders for the
//! standard coefficient objects.

use crate::algebra::{Algebra, AxiomReport, Element};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::group::FiniteGroup;
use crate::hopf::Hopf;
use crate::matrix::Matrix;

/// An algebra `E` carrying a coaction `Δ_E : E → E⊗H` that is itself an
/// algebra morphism. The coaction matrix is `(dim E · dim H) × dim E`
/// with output index `(i, j) ↦ i·dim H + j`.
#[derive(Debug, Clone)]
pub struct ComoduleAlgebra {
    pub hopf: Hopf,
    pub alg: Algebra,
    pub coaction: Matrix,
}

impl ComoduleAlgebra {
    pub fn new(hopf: Hopf, alg: Algebra, coaction: Matrix) -> Result<ComoduleAlgebra> {
        if hopf.field() != alg.field() {
            return Err(Error::FieldMismatch);
        }
        if coaction.rows != alg.dim() * hopf.dim() || coaction.cols != alg.dim() {
            return Err(Error::DimensionError("coaction matrix shape".into()));
        }
        Ok(ComoduleAlgebra { hopf, alg, coaction })
    }

    pub fn field(&self) -> &Field {
        self.alg.field()
    }

    /// `E⊗H` as a structure-constant algebra.
    pub fn tensor_with_hopf(&self) -> Algebra {
        self.alg.tensor(self.hopf.algebra()).expect("same field")
    }

    /// The algebra of dual numbers `k[h]/(h²)` as a comodule algebra over
    /// the Sweedler algebra, with `1 ↦ 1⊗1` and `h ↦ h⊗g + 1⊗h`.
    #[allow(clippy::identity_op)] // spelled-out tensor indices (i·dim + j)
    pub fn dual_numbers(field: Field) -> Result<ComoduleAlgebra> {
        let hopf = Hopf::sweedler(field.clone())?;
        let z = field.zero();
        let o = field.one();
        let alg = Algebra::new(
            field.clone(),
            vec!["1".into(), "h".into()],
            vec![
                vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
                vec![vec![z.clone(), o.clone()], vec![z.clone(), z.clone()]],
            ],
            vec![o.clone(), z.clone()],
        )?;
        let mut coaction = Matrix::zeros(&field, 8, 2);
        coaction[(0, 0)] = o.clone(); // 1 ↦ 1⊗1
        coaction[(1 * 4 + 1, 1)] = o.clone(); // h ↦ h⊗g + 1⊗h
        coaction[(2, 1)] = o.clone();
        ComoduleAlgebra::new(hopf, alg, coaction)
    }

    /// The ground field as a comodule algebra over `H`, with coaction the
    /// unit map of `H`.
    pub fn trivial_coefficients(hopf: Hopf) -> ComoduleAlgebra {
        let field = hopf.field().clone();
        let alg = Algebra::ground(field.clone());
        let coaction = Matrix::column(hopf.algebra().unit_coords());
        ComoduleAlgebra::new(hopf, alg, coaction).expect("shapes by construction")
    }

    /// `H` as a comodule algebra over itself, with coaction `Δ_H`.
    pub fn regular(hopf: Hopf) -> ComoduleAlgebra {
        let alg = hopf.algebra().clone();
        let coaction = hopf.comult().clone();
        ComoduleAlgebra::new(hopf, alg, coaction).expect("shapes by construction")
    }

    /// Any algebra as a comodule algebra over the trivial Hopf algebra,
    /// with coaction the identity under `E⊗k ≅ E`.
    pub fn over_trivial_hopf(alg: Algebra) -> ComoduleAlgebra {
        let hopf = Hopf::trivial(alg.field().clone());
        let coaction = Matrix::identity(alg.field(), alg.dim());
        ComoduleAlgebra::new(hopf, alg, coaction).expect("shapes by construction")
    }

    /// The group algebra `k[L]` as a comodule algebra over `k^G` for a
    /// subgroup `G ≤ L`, with coaction `h ↦ Σ_{g∈G} ghg⁻¹ ⊗ δ_g`.
    pub fn conjugation(l: &FiniteGroup, subgroup: &[usize], field: Field) -> Result<ComoduleAlgebra> {
        l.verify_subgroup(subgroup)?;
        let g = l.subgroup(subgroup)?;
        let hopf = Hopf::function_algebra(&g, field.clone())?;
        let n = l.order();
        let z = field.zero();
        let o = field.one();
        // group algebra k[L]: e_a·e_b = e_{ab}
        let mut mult = vec![vec![vec![z.clone(); n]; n]; n];
        for a in 0..n {
            for b in 0..n {
                mult[a][b][l.mul(a, b)] = o.clone();
            }
        }
        let mut unit = vec![z.clone(); n];
        unit[l.identity()] = o.clone();
        let labels = l.labels().to_vec();
        let alg = Algebra::new(field.clone(), labels, mult, unit)?;

        let gh = g.order();
        let mut coaction = Matrix::zeros(&field, n * gh, n);
        for h in 0..n {
            for (gpos, &gidx) in subgroup.iter().enumerate() {
                let conj = l.mul(l.mul(gidx, h), l.inv(gidx));
                coaction[(conj * gh + gpos, h)] = o.clone();
            }
        }
        ComoduleAlgebra::new(hopf, alg, coaction)
    }

    /// Verifies the comodule-algebra axioms: coassociativity with `Δ_H`,
    /// the counit law, and that the coaction is an algebra morphism.
    pub fn check(&self) -> AxiomReport {
        let mut report = AxiomReport::default();
        let field = self.field();
        let de = self.alg.dim();
        let id_e = Matrix::identity(field, de);
        let id_h = Matrix::identity(field, self.hopf.dim());

        // (Δ_E⊗id_H)Δ_E = (id_E⊗Δ_H)Δ_E
        let lhs = self.coaction.kron(field, &id_h).mul(field, &self.coaction);
        let rhs = id_e.kron(field, self.hopf.comult()).mul(field, &self.coaction);
        report.record(
            "coaction coassociativity",
            (lhs != rhs).then(|| witness_column(&self.alg, &lhs, &rhs)),
        );

        // (id_E⊗ε_H)Δ_E = id_E
        let counit_side = id_e.kron(field, self.hopf.counit()).mul(field, &self.coaction);
        report.record(
            "coaction counit law",
            (counit_side != id_e).then(|| witness_column(&self.alg, &counit_side, &id_e)),
        );

        // algebra morphism on basis pairs, unit to unit
        let eh = self.tensor_with_hopf();
        let mut morph_fail = None;
        'outer: for i in 0..de {
            for j in 0..de {
                let di = eh.element(self.coaction.col(i));
                let dj = eh.element(self.coaction.col(j));
                let prod = eh.mul(&di, &dj).unwrap();
                let direct = eh.element(
                    self.coaction
                        .apply(field, &self.alg.product_of_basis(i, j)),
                );
                if prod != direct {
                    morph_fail = Some(format!(
                        "Δ({x}·{y}) ≠ Δ({x})Δ({y})",
                        x = self.alg.labels()[i],
                        y = self.alg.labels()[j]
                    ));
                    break 'outer;
                }
            }
        }
        if morph_fail.is_none() {
            let unit_image = self.coaction.apply(field, self.alg.unit_coords());
            if eh.element(unit_image) != eh.unit() {
                morph_fail = Some("Δ(1) ≠ 1⊗1".into());
            }
        }
        report.record("coaction is an algebra morphism", morph_fail);
        report
    }
}

/// A right `E`-module `M` with a coaction `Δ_M : M → M⊗H` compatible with
/// the coaction of `E`: `Δ_M(m·s) = Δ_M(m)·Δ_E(s)`. The action is stored
/// as one `dim M × dim M` matrix per basis element of `E`.
#[derive(Debug, Clone)]
pub struct HopfModule {
    pub comod: ComoduleAlgebra,
    pub dim: usize,
    pub actions: Vec<Matrix>,
    pub coaction: Matrix,
}

impl HopfModule {
    pub fn new(
        comod: ComoduleAlgebra,
        dim: usize,
        actions: Vec<Matrix>,
        coaction: Matrix,
    ) -> Result<HopfModule> {
        if actions.len() != comod.alg.dim() {
            return Err(Error::DimensionError(
                "one action matrix per algebra basis element".into(),
            ));
        }
        for m in &actions {
            if m.rows != dim || m.cols != dim {
                return Err(Error::DimensionError("action matrix shape".into()));
            }
        }
        if coaction.rows != dim * comod.hopf.dim() || coaction.cols != dim {
            return Err(Error::DimensionError("module coaction shape".into()));
        }
        Ok(HopfModule { comod, dim, actions, coaction })
    }

    /// `E` as a Hopf module over itself: right multiplication and `Δ_E`.
    pub fn regular(comod: ComoduleAlgebra) -> HopfModule {
        let actions = (0..comod.alg.dim())
            .map(|j| comod.alg.right_mul_matrix(&comod.alg.basis_element(j)))
            .collect();
        let coaction = comod.coaction.clone();
        let dim = comod.alg.dim();
        HopfModule { comod, dim, actions, coaction }
    }

    /// `E` with right multiplication but a custom coaction (deformations).
    pub fn regular_with_coaction(comod: ComoduleAlgebra, coaction: Matrix) -> Result<HopfModule> {
        let actions = (0..comod.alg.dim())
            .map(|j| comod.alg.right_mul_matrix(&comod.alg.basis_element(j)))
            .collect();
        let dim = comod.alg.dim();
        HopfModule::new(comod, dim, actions, coaction)
    }

    pub fn field(&self) -> &Field {
        self.comod.field()
    }

    /// Action matrix of an arbitrary algebra element.
    pub fn action_matrix(&self, s: &Element) -> Matrix {
        let field = self.field();
        let mut out = Matrix::zeros(field, self.dim, self.dim);
        for (j, c) in s.coords.iter().enumerate() {
            if field.is_zero(c) {
                continue;
            }
            out = out.add(field, &self.actions[j].scale(field, c));
        }
        out
    }

    /// `m·s` for a module vector and an algebra element.
    pub fn act(&self, m: &[Scalar], s: &Element) -> Vec<Scalar> {
        self.action_matrix(s).apply(self.field(), m)
    }

    /// Product `(m⊗h)·(s⊗h') = (m·s)⊗(h·h')` of a vector in `M⊗H` by a
    /// vector in `E⊗H`.
    pub fn tensor_act(&self, mh: &[Scalar], eh: &[Scalar]) -> Vec<Scalar> {
        let field = self.field();
        let dh = self.comod.hopf.dim();
        let de = self.comod.alg.dim();
        assert_eq!(mh.len(), self.dim * dh);
        assert_eq!(eh.len(), de * dh);
        let hopf_alg = self.comod.hopf.algebra();
        let mut out = vec![field.zero(); self.dim * dh];
        for mi in 0..self.dim {
            for hi in 0..dh {
                let a = &mh[mi * dh + hi];
                if field.is_zero(a) {
                    continue;
                }
                for si in 0..de {
                    for hj in 0..dh {
                        let b = &eh[si * dh + hj];
                        if field.is_zero(b) {
                            continue;
                        }
                        let coef = field.mul(a, b);
                        let maction = self.actions[si].col(mi);
                        let hprod = hopf_alg.product_of_basis(hi, hj);
                        for (mo, mv) in maction.iter().enumerate() {
                            if field.is_zero(mv) {
                                continue;
                            }
                            for (ho, hv) in hprod.iter().enumerate() {
                                if field.is_zero(hv) {
                                    continue;
                                }
                                let term = field.mul(&coef, &field.mul(mv, hv));
                                let idx = mo * dh + ho;
                                out[idx] = field.add(&out[idx], &term);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Verifies the module axioms, the coaction laws, and the
    /// compatibility `Δ_M(m·s) = Δ_M(m)·Δ_E(s)` on all basis pairs.
    pub fn check(&self) -> AxiomReport {
        let mut report = AxiomReport::default();
        let field = self.field();
        let de = self.comod.alg.dim();
        let dh = self.comod.hopf.dim();
        let id_m = Matrix::identity(field, self.dim);

        // unit acts as identity
        let unit_action = self.action_matrix(&self.comod.alg.unit());
        report.record(
            "unit acts as identity",
            (unit_action != id_m).then(|| "unit action".to_string()),
        );

        // m·(e_i e_j) = (m·e_i)·e_j, i.e. act(e_i e_j) = act(e_j)∘act(e_i)
        let mut assoc_fail = None;
        'outer: for i in 0..de {
            for j in 0..de {
                let prod = self.comod.alg.element(self.comod.alg.product_of_basis(i, j));
                let lhs = self.action_matrix(&prod);
                let rhs = self.actions[j].mul(field, &self.actions[i]);
                if lhs != rhs {
                    assoc_fail = Some(format!(
                        "action of {}·{}",
                        self.comod.alg.labels()[i],
                        self.comod.alg.labels()[j]
                    ));
                    break 'outer;
                }
            }
        }
        report.record("action is associative", assoc_fail);

        // (id_M⊗ε)Δ_M = id_M
        let counit_side = id_m
            .kron(field, self.comod.hopf.counit())
            .mul(field, &self.coaction);
        report.record(
            "module counit law",
            (counit_side != id_m).then(|| "counit law".to_string()),
        );

        // (Δ_M⊗id_H)Δ_M = (id_M⊗Δ_H)Δ_M
        let id_h = Matrix::identity(field, dh);
        let lhs = self.coaction.kron(field, &id_h).mul(field, &self.coaction);
        let rhs = id_m
            .kron(field, self.comod.hopf.comult())
            .mul(field, &self.coaction);
        report.record(
            "module coassociativity",
            (lhs != rhs).then(|| "coassociativity".to_string()),
        );

        // Δ_M(m·s) = Δ_M(m)·Δ_E(s) on basis pairs
        let mut compat_fail = None;
        'compat: for a in 0..self.dim {
            let mut m = vec![field.zero(); self.dim];
            m[a] = field.one();
            let dm = self.coaction.apply(field, &m);
            for j in 0..de {
                let s = self.comod.alg.basis_element(j);
                let ms = self.act(&m, &s);
                let lhs = self.coaction.apply(field, &ms);
                let rhs = self.tensor_act(&dm, &self.comod.coaction.col(j));
                if lhs != rhs {
                    compat_fail = Some(format!(
                        "compatibility at module basis {a} and {}",
                        self.comod.alg.labels()[j]
                    ));
                    break 'compat;
                }
            }
        }
        report.record("action–coaction compatibility", compat_fail);
        report
    }
}

/// True iff `f : M → M'` (a `dim M' × dim M` matrix) is `E`-linear and
/// compatible with the coactions: `(f⊗id_H)∘Δ_M = Δ_{M'}∘f`. Morphism,
/// not isomorphism: invertibility is not required.
pub fn hopf_module_morphism_check(f: &Matrix, from: &HopfModule, to: &HopfModule) -> Result<bool> {
    if f.rows != to.dim || f.cols != from.dim {
        return Err(Error::DimensionMismatch(format!(
            "map is {}×{}, expected {}×{}",
            f.rows, f.cols, to.dim, from.dim
        )));
    }
    if from.comod.alg.dim() != to.comod.alg.dim() || from.comod.hopf.dim() != to.comod.hopf.dim() {
        return Err(Error::DimensionMismatch("modules over different data".into()));
    }
    let field = from.field();
    for j in 0..from.comod.alg.dim() {
        let lhs = f.mul(field, &from.actions[j]);
        let rhs = to.actions[j].mul(field, f);
        if lhs != rhs {
            return Ok(false);
        }
    }
    let id_h = Matrix::identity(field, from.comod.hopf.dim());
    let lhs = f.kron(field, &id_h).mul(field, &from.coaction);
    let rhs = to.coaction.mul(field, f);
    Ok(lhs == rhs)
}

fn witness_column(alg: &Algebra, lhs: &Matrix, rhs: &Matrix) -> String {
    for j in 0..lhs.cols {
        if lhs.col(j) != rhs.col(j) {
            return format!("fails on basis vector {}", alg.labels()[j]);
        }
    }
    "fails".to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Field {
        Field::prime(3).unwrap()
    }

    #[test]
    fn builders_pass_axioms() {
        let f = f3();
        for p in [3u64, 5] {
            let fp = Field::prime(p).unwrap();
            assert!(ComoduleAlgebra::dual_numbers(fp).unwrap().check().is_ok());
        }
        let h4 = Hopf::sweedler(f.clone()).unwrap();
        assert!(ComoduleAlgebra::trivial_coefficients(h4.clone()).check().is_ok());
        assert!(ComoduleAlgebra::regular(h4).check().is_ok());

        let kz2 = Hopf::function_algebra(&FiniteGroup::cyclic(2), f.clone()).unwrap();
        assert!(ComoduleAlgebra::trivial_coefficients(kz2).check().is_ok());

        let e2 = ComoduleAlgebra::dual_numbers(f.clone()).unwrap();
        assert!(ComoduleAlgebra::over_trivial_hopf(e2.alg.clone()).check().is_ok());
    }

    #[test]
    fn dual_numbers_coaction_columns() {
        let f = f3();
        let e2 = ComoduleAlgebra::dual_numbers(f.clone()).unwrap();
        let mut one = vec![f.zero(); 8];
        one[0] = f.one();
        assert_eq!(e2.coaction.col(0), one);
        let mut h = vec![f.zero(); 8];
        h[1 * 4 + 1] = f.one();
        h[2] = f.one();
        assert_eq!(e2.coaction.col(1), h);
    }

    #[test]
    fn corrupted_coaction_fails_counit() {
        // send h ↦ 1⊗h: then (id⊗ε)Δ(h) = ε(h)·1 = 0 ≠ h
        let f = f3();
        let good = ComoduleAlgebra::dual_numbers(f.clone()).unwrap();
        let mut bad_coaction = good.coaction.clone();
        for i in 0..8 {
            bad_coaction[(i, 1)] = f.zero();
        }
        bad_coaction[(2, 1)] = f.one();
        let bad = ComoduleAlgebra::new(good.hopf.clone(), good.alg.clone(), bad_coaction).unwrap();
        let report = bad.check();
        assert!(report
            .failures
            .iter()
            .any(|fail| fail.axiom == "coaction counit law"));
    }

    #[test]
    fn conjugation_comodule() {
        let f = f3();
        let s3 = FiniteGroup::symmetric(3);
        let t12 = s3.labels().iter().position(|l| l == "(12)").unwrap();
        let comod = ComoduleAlgebra::conjugation(&s3, &[s3.identity(), t12], f.clone()).unwrap();
        assert_eq!(comod.alg.dim(), 6);
        assert_eq!(comod.hopf.dim(), 2);
        assert!(comod.check().is_ok());

        // trivial case: L = G = trivial group gives k with trivial coaction
        let triv = FiniteGroup::trivial();
        let k = ComoduleAlgebra::conjugation(&triv, &[0], f.clone()).unwrap();
        assert_eq!(k.alg.dim(), 1);
        assert!(k.check().is_ok());

        // a central element coacts as h ⊗ 1: in ℤ/4 every element is central
        let z4 = FiniteGroup::cyclic(4);
        let sub = vec![0usize, 2];
        let comod4 = ComoduleAlgebra::conjugation(&z4, &sub, f.clone()).unwrap();
        assert!(comod4.check().is_ok());
        let col = comod4.coaction.col(1); // element "1" of ℤ/4, central
        let dh = 2;
        for (idx, v) in col.iter().enumerate() {
            let (l_idx, g_idx) = (idx / dh, idx % dh);
            let expect = l_idx == 1 && (g_idx == 0 || g_idx == 1);
            assert_eq!(!f.is_zero(v), expect);
        }

        assert!(matches!(
            ComoduleAlgebra::conjugation(&s3, &[s3.identity(), t12, 4], f),
            Err(Error::NotASubgroup(_))
        ));
    }

    #[test]
    fn regular_module_passes() {
        let f = f3();
        let e2 = ComoduleAlgebra::dual_numbers(f.clone()).unwrap();
        let m = HopfModule::regular(e2);
        assert!(m.check().is_ok());

        let h4 = ComoduleAlgebra::regular(Hopf::sweedler(f).unwrap());
        assert!(HopfModule::regular(h4).check().is_ok());
    }

    #[test]
    fn morphism_checks() {
        let f = f3();
        let e2 = ComoduleAlgebra::dual_numbers(f.clone()).unwrap();
        let m = HopfModule::regular(e2.clone());
        let id = Matrix::identity(&f, 2);
        assert!(hopf_module_morphism_check(&id, &m, &m).unwrap());
        // the zero map is compatible but not invertible — still a morphism
        let zero = Matrix::zeros(&f, 2, 2);
        assert!(hopf_module_morphism_check(&zero, &m, &m).unwrap());
        assert!(zero.inverse(&f).unwrap().is_none());
        // left multiplication by h is E-linear but not comodule-compatible
        let h = e2.alg.basis_element(1);
        let tau_h = e2.alg.left_mul_matrix(&h);
        assert!(!hopf_module_morphism_check(&tau_h, &m, &m).unwrap());

        let wrong = Matrix::zeros(&f, 3, 2);
        assert!(hopf_module_morphism_check(&wrong, &m, &m).is_err());
    }

    #[test]
    fn morphisms_compose() {
        // scalar left translations are endomorphisms of the regular
        // module; any two compose to another one
        let f = f3();
        let e2 = ComoduleAlgebra::dual_numbers(f.clone()).unwrap();
        let m = HopfModule::regular(e2.clone());
        let morphisms: Vec<Matrix> = (0..3)
            .map(|c| Matrix::identity(&f, 2).scale(&f, &f.from_int(c)))
            .collect();
        for a in &morphisms {
            assert!(hopf_module_morphism_check(a, &m, &m).unwrap());
            for b in &morphisms {
                let composite = a.mul(&f, b);
                assert!(hopf_module_morphism_check(&composite, &m, &m).unwrap());
            }
        }
    }
}
