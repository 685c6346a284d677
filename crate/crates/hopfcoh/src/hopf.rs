//! Hopf algebras: a structure-constant algebra together with
//! comultiplication, counit, and antipode as exact matrices, plus the
//! standard builders (function algebras on finite groups, the Sweedler
//! four-dimensional algebra, the trivial Hopf algebra).

use crate::algebra::{Algebra, AxiomReport, Element, ElementGroup};
use crate::enumerate::{AffineSpace, Limits};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::fp::{self, Fp, FpSparseMat};
use crate::group::FiniteGroup;
use crate::matrix::Matrix;

/// A Hopf algebra. `comult` maps `H → H⊗H` (a `dim²×dim` matrix with
/// output index `(k,l) ↦ k·dim + l`), `counit` is `1×dim`, `antipode`
/// is `dim×dim`.
#[derive(Debug, Clone)]
pub struct Hopf {
    alg: Algebra,
    comult: Matrix,
    counit: Matrix,
    antipode: Matrix,
    /// Set when this algebra is the function algebra of a known group.
    group: Option<FiniteGroup>,
    /// The Sweedler builder flags characteristic 2, where the
    /// anticommutation relation degenerates.
    pub char2_warning: bool,
}

impl Hopf {
    pub fn new(alg: Algebra, comult: Matrix, counit: Matrix, antipode: Matrix) -> Result<Hopf> {
        let d = alg.dim();
        if comult.rows != d * d || comult.cols != d {
            return Err(Error::DimensionError("comultiplication matrix shape".into()));
        }
        if counit.rows != 1 || counit.cols != d {
            return Err(Error::DimensionError("counit matrix shape".into()));
        }
        if antipode.rows != d || antipode.cols != d {
            return Err(Error::DimensionError("antipode matrix shape".into()));
        }
        Ok(Hopf { alg, comult, counit, antipode, group: None, char2_warning: false })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn field(&self) -> &Field {
        self.alg.field()
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn comult(&self) -> &Matrix {
        &self.comult
    }

    pub fn counit(&self) -> &Matrix {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    /// The group this function algebra was built from, if any.
    pub fn known_group(&self) -> Option<&FiniteGroup> {
        self.group.as_ref()
    }

    /// The trivial Hopf algebra `k`.
    pub fn trivial(field: Field) -> Hopf {
        Hopf::function_algebra(&FiniteGroup::trivial(), field).expect("trivial group")
    }

    /// The function algebra `k^G`: basis of indicator functions `δ_g`,
    /// `δ_g·δ_g' = ∂_{g,g'}·δ_g`, `Δ(δ_g) = Σ_{ab=g} δ_a⊗δ_b`,
    /// `ε(δ_g) = ∂_{g,e}`, `σ(δ_g) = δ_{g⁻¹}`.
    pub fn function_algebra(group: &FiniteGroup, field: Field) -> Result<Hopf> {
        let n = group.order();
        let z = field.zero();
        let o = field.one();
        let labels: Vec<String> = group.labels().iter().map(|l| format!("δ_{l}")).collect();
        let mut mult = vec![vec![vec![z.clone(); n]; n]; n];
        for i in 0..n {
            mult[i][i][i] = o.clone();
        }
        let unit = vec![o.clone(); n];
        let alg = Algebra::new(field.clone(), labels, mult, unit)?;

        let mut comult = Matrix::zeros(&field, n * n, n);
        for a in 0..n {
            for b in 0..n {
                let g = group.mul(a, b);
                comult[(a * n + b, g)] = o.clone();
            }
        }
        let mut counit = Matrix::zeros(&field, 1, n);
        counit[(0, group.identity())] = o.clone();
        let mut antipode = Matrix::zeros(&field, n, n);
        for g in 0..n {
            antipode[(group.inv(g), g)] = o.clone();
        }
        let mut hopf = Hopf::new(alg, comult, counit, antipode)?;
        hopf.group = Some(group.clone());
        Ok(hopf)
    }

    /// The Sweedler four-dimensional Hopf algebra on `{1, g, h, gh}` with
    /// `g² = 1`, `h² = 0`, `gh + hg = 0`, `Δ(g) = g⊗g`,
    /// `Δ(h) = h⊗g + 1⊗h`, `ε(g) = 1`, `ε(h) = 0`. The antipode is the
    /// unique completion satisfying the antipode law: `σ(g) = g`,
    /// `σ(h) = gh`, `σ(gh) = −h`.
    #[allow(clippy::identity_op)] // spelled-out tensor indices (i·dim + j)
    pub fn sweedler(field: Field) -> Result<Hopf> {
        let z = field.zero();
        let o = field.one();
        let m = field.from_int(-1);
        let labels = vec!["1".into(), "g".into(), "h".into(), "gh".into()];
        let e = |k: usize, s: &Scalar| {
            let mut v = vec![z.clone(); 4];
            v[k] = s.clone();
            v
        };
        let zero4 = vec![z.clone(); 4];
        // rows: left factor 1, g, h, gh
        let mult = vec![
            vec![e(0, &o), e(1, &o), e(2, &o), e(3, &o)],
            vec![e(1, &o), e(0, &o), e(3, &o), e(2, &o)],
            vec![e(2, &o), e(3, &m), zero4.clone(), zero4.clone()],
            vec![e(3, &o), e(2, &m), zero4.clone(), zero4.clone()],
        ];
        let alg = Algebra::new(field.clone(), labels, mult, e(0, &o))?;

        let mut comult = Matrix::zeros(&field, 16, 4);
        comult[(0, 0)] = o.clone(); // Δ(1) = 1⊗1
        comult[(1 * 4 + 1, 1)] = o.clone(); // Δ(g) = g⊗g
        comult[(2 * 4 + 1, 2)] = o.clone(); // Δ(h) = h⊗g + 1⊗h
        comult[(2, 2)] = o.clone();
        comult[(3 * 4, 3)] = o.clone(); // Δ(gh) = gh⊗1 + g⊗gh
        comult[(1 * 4 + 3, 3)] = o.clone();

        let mut counit = Matrix::zeros(&field, 1, 4);
        counit[(0, 0)] = o.clone();
        counit[(0, 1)] = o.clone();

        let mut antipode = Matrix::zeros(&field, 4, 4);
        antipode[(0, 0)] = o.clone();
        antipode[(1, 1)] = o.clone();
        antipode[(3, 2)] = o.clone();
        antipode[(2, 3)] = m.clone();

        let mut hopf = Hopf::new(alg, comult, counit, antipode)?;
        hopf.char2_warning = field.characteristic() == 2;
        Ok(hopf)
    }

    /// The multiplication map `H⊗H → H` as a `dim × dim²` matrix.
    pub fn mul_matrix(&self) -> Matrix {
        let d = self.dim();
        let field = self.field();
        let mut m = Matrix::zeros(field, d, d * d);
        for i in 0..d {
            for j in 0..d {
                let prod = self.alg.product_of_basis(i, j);
                for (k, v) in prod.iter().enumerate() {
                    if !field.is_zero(v) {
                        m[(k, i * d + j)] = v.clone();
                    }
                }
            }
        }
        m
    }

    /// Unit map `k → H` as a `dim×1` column.
    pub fn unit_matrix(&self) -> Matrix {
        Matrix::column(self.alg.unit_coords())
    }

    /// Verifies coassociativity, the counit laws, that `Δ` and `ε` are
    /// algebra morphisms, and the antipode law on both sides.
    pub fn check_axioms(&self) -> AxiomReport {
        let mut report = self.alg.check_axioms();
        let field = self.field();
        let d = self.dim();
        let id = Matrix::identity(field, d);

        // (Δ⊗id)Δ = (id⊗Δ)Δ
        let lhs = self.comult.kron(field, &id).mul(field, &self.comult);
        let rhs = id.kron(field, &self.comult).mul(field, &self.comult);
        report.record(
            "coassociativity",
            (lhs != rhs).then(|| first_mismatch(&self.alg, &lhs, &rhs)),
        );

        // (ε⊗id)Δ = id = (id⊗ε)Δ
        let left = self.counit.kron(field, &id).mul(field, &self.comult);
        let right = id.kron(field, &self.counit).mul(field, &self.comult);
        report.record(
            "counit law",
            (left != id || right != id).then(|| "counit law on a basis vector".to_string()),
        );

        // Δ is an algebra morphism into H⊗H, ε into k
        match self.alg.tensor(&self.alg) {
            Ok(hh) => {
                let mut delta_fail = None;
                'outer: for i in 0..d {
                    for j in 0..d {
                        let di = hh.element(self.comult.col(i));
                        let dj = hh.element(self.comult.col(j));
                        let prod = hh.mul(&di, &dj).unwrap();
                        let direct = hh.element(
                            self.comult
                                .apply(field, &self.alg.product_of_basis(i, j)),
                        );
                        if prod != direct {
                            delta_fail = Some(format!(
                                "Δ({}·{}) ≠ Δ({})Δ({})",
                                self.alg.labels()[i],
                                self.alg.labels()[j],
                                self.alg.labels()[i],
                                self.alg.labels()[j]
                            ));
                            break 'outer;
                        }
                    }
                }
                if delta_fail.is_none() {
                    let unit_image = self.comult.apply(field, self.alg.unit_coords());
                    if hh.element(unit_image) != hh.unit() {
                        delta_fail = Some("Δ(1) ≠ 1⊗1".into());
                    }
                }
                report.record("comultiplication is an algebra morphism", delta_fail);
            }
            Err(_) => report.record(
                "comultiplication is an algebra morphism",
                Some("tensor square unavailable".into()),
            ),
        }

        let mut eps_fail = None;
        for i in 0..d {
            for j in 0..d {
                let eij = self.counit.apply(field, &self.alg.product_of_basis(i, j))[0].clone();
                let ei = &self.counit[(0, i)];
                let ej = &self.counit[(0, j)];
                if eij != field.mul(ei, ej) {
                    eps_fail = Some(format!(
                        "ε({}·{}) ≠ ε({})ε({})",
                        self.alg.labels()[i],
                        self.alg.labels()[j],
                        self.alg.labels()[i],
                        self.alg.labels()[j]
                    ));
                }
            }
        }
        if eps_fail.is_none()
            && !field.is_one(&self.counit.apply(field, self.alg.unit_coords())[0])
        {
            eps_fail = Some("ε(1) ≠ 1".into());
        }
        report.record("counit is an algebra morphism", eps_fail);

        // μ(σ⊗id)Δ = η∘ε = μ(id⊗σ)Δ
        let mu = self.mul_matrix();
        let eta_eps = self.unit_matrix().mul(field, &self.counit);
        let lhs = mu
            .mul(field, &self.antipode.kron(field, &id))
            .mul(field, &self.comult);
        let rhs = mu
            .mul(field, &id.kron(field, &self.antipode))
            .mul(field, &self.comult);
        report.record(
            "antipode law",
            (lhs != eta_eps || rhs != eta_eps).then(|| {
                let bad = (0..d)
                    .find(|&i| lhs.col(i) != eta_eps.col(i) || rhs.col(i) != eta_eps.col(i))
                    .unwrap_or(0);
                format!("antipode law fails on {}", self.alg.labels()[bad])
            }),
        );
        report
    }

    /// All grouplike elements: `Δ(x) = x⊗x` with `ε(x) = 1`, found by
    /// enumerating the affine slice `ε(x) = 1` and testing the quadratic
    /// condition. Returns the set with its multiplication table.
    pub fn grouplikes(&self, limits: &Limits) -> Result<ElementGroup> {
        let field = self.field();
        let d = self.dim();
        let slice = AffineSpace::solve(field, &self.counit, &[field.one()])?
            .ok_or_else(|| Error::DimensionError("counit has no preimage of 1".into()))?;
        let total = limits.check(field, slice.dim())?;
        let fp = Fp::new(field).expect("prime field");
        let comult = FpSparseMat::from_matrix(&self.comult);
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
            // Δ(x) = x⊗x
            let dx = comult.apply(fp, &x);
            for i in 0..d {
                for j in 0..d {
                    if dx[i * d + j] != fp.mul(x[i], x[j]) {
                        return None;
                    }
                }
            }
            Some(x)
        });
        let mut elements: Vec<Element> = found
            .into_iter()
            .map(|x| self.alg.element(fp::to_scalars(&x)))
            .collect();
        elements.sort();
        ElementGroup::close(&self.alg, elements)
    }

    /// Recovers a group from function-algebra structure: the algebra must
    /// be the diagonal one on its basis and the comultiplication must
    /// tabulate a group law. Returns `None` when the shape does not match.
    pub fn recognize_function_algebra(&self) -> Option<FiniteGroup> {
        if let Some(g) = &self.group {
            return Some(g.clone());
        }
        let field = self.field();
        let d = self.dim();
        // diagonal products δ_i·δ_j = ∂_ij δ_i and unit Σδ_i
        for i in 0..d {
            for j in 0..d {
                let prod = self.alg.product_of_basis(i, j);
                for (k, v) in prod.iter().enumerate() {
                    let expect = if i == j && k == i { field.one() } else { field.zero() };
                    if *v != expect {
                        return None;
                    }
                }
            }
        }
        if self.alg.unit_coords().iter().any(|v| !field.is_one(v)) {
            return None;
        }
        // read the group table from Δ(δ_g) = Σ_{ab=g} δ_a⊗δ_b
        let mut table = vec![vec![usize::MAX; d]; d];
        for g in 0..d {
            let col = self.comult.col(g);
            for (idx, v) in col.iter().enumerate() {
                if field.is_zero(v) {
                    continue;
                }
                if !field.is_one(v) {
                    return None;
                }
                let (a, b) = (idx / d, idx % d);
                if table[a][b] != usize::MAX {
                    return None;
                }
                table[a][b] = g;
            }
        }
        if table.iter().flatten().any(|&v| v == usize::MAX) {
            return None;
        }
        let labels = self.alg.labels().to_vec();
        FiniteGroup::from_table(table, labels).ok()
    }
}

fn first_mismatch(alg: &Algebra, lhs: &Matrix, rhs: &Matrix) -> String {
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
    fn function_algebra_axioms() {
        let kz2 = Hopf::function_algebra(&FiniteGroup::cyclic(2), f3()).unwrap();
        assert!(kz2.check_axioms().is_ok());
        // Δ(δ₀) = δ₀⊗δ₀ + δ₁⊗δ₁
        let col = kz2.comult().col(0);
        let f = f3();
        assert_eq!(col, vec![f.one(), f.zero(), f.zero(), f.one()]);

        let trivial = Hopf::trivial(f3());
        assert_eq!(trivial.dim(), 1);
        assert!(trivial.check_axioms().is_ok());

        let ks3 = Hopf::function_algebra(&FiniteGroup::symmetric(3), f3()).unwrap();
        assert_eq!(ks3.dim(), 6);
        assert!(ks3.check_axioms().is_ok());
    }

    #[test]
    fn sweedler_axioms() {
        for p in [3u64, 5] {
            let h4 = Hopf::sweedler(Field::prime(p).unwrap()).unwrap();
            let report = h4.check_axioms();
            assert!(report.is_ok(), "failures: {:?}", report.failures);
            assert!(!h4.char2_warning);
        }
        assert!(Hopf::sweedler(Field::prime(2).unwrap()).unwrap().char2_warning);
    }

    #[test]
    fn sweedler_structure_maps() {
        let f = f3();
        let h4 = Hopf::sweedler(f.clone()).unwrap();
        // Δ(h) = h⊗g + 1⊗h
        let col = h4.comult().col(2);
        let mut expect = vec![f.zero(); 16];
        expect[2 * 4 + 1] = f.one();
        expect[2] = f.one();
        assert_eq!(col, expect);
        // ε(gh) = 0
        assert!(f.is_zero(&h4.counit()[(0, 3)]));
    }

    #[test]
    fn corrupted_antipode_fails() {
        let f = f3();
        let h4 = Hopf::sweedler(f.clone()).unwrap();
        let bad = Hopf::new(
            h4.algebra().clone(),
            h4.comult().clone(),
            h4.counit().clone(),
            Matrix::identity(&f, 4),
        )
        .unwrap();
        let report = bad.check_axioms();
        assert!(report
            .failures
            .iter()
            .any(|fail| fail.axiom == "antipode law"));
    }

    #[test]
    fn grouplike_sets() {
        let limits = Limits::default();
        let f = f3();

        let trivial = Hopf::trivial(f.clone());
        assert_eq!(trivial.grouplikes(&limits).unwrap().order(), 1);

        let h4 = Hopf::sweedler(f.clone()).unwrap();
        let gr = h4.grouplikes(&limits).unwrap();
        assert_eq!(gr.order(), 2);
        // sorted lexicographically: g = (0,1,0,0) before 1 = (1,0,0,0)
        assert_eq!(gr.elements[0], h4.algebra().basis_element(1));
        assert_eq!(gr.elements[1], h4.algebra().unit());

        // Gr(k^{ℤ/2ℤ}) over 𝔽₃ = {δ₀+δ₁, δ₀+2δ₁}
        let kz2 = Hopf::function_algebra(&FiniteGroup::cyclic(2), f.clone()).unwrap();
        let gr = kz2.grouplikes(&limits).unwrap();
        assert_eq!(gr.order(), 2);
        let coords: Vec<_> = gr.elements.iter().map(|e| e.coords.clone()).collect();
        assert!(coords.contains(&vec![f.one(), f.one()]));
        assert!(coords.contains(&vec![f.one(), f.from_int(2)]));
    }

    #[test]
    fn recognize_function_algebra_roundtrip() {
        let s3 = FiniteGroup::symmetric(3);
        let hopf = Hopf::function_algebra(&s3, f3()).unwrap();
        // drop the cached group and re-derive it from structure
        let bare = Hopf::new(
            hopf.algebra().clone(),
            hopf.comult().clone(),
            hopf.counit().clone(),
            hopf.antipode().clone(),
        )
        .unwrap();
        let recovered = bare.recognize_function_algebra().unwrap();
        assert_eq!(recovered.order(), 6);
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(recovered.mul(a, b), s3.mul(a, b));
            }
        }
        assert!(Hopf::sweedler(f3()).unwrap().recognize_function_algebra().is_none());
    }
}
