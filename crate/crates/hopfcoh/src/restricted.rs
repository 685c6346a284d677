//! Restricted non-abelian cohomology of a Hopf module `M` over an
//! `H`-comodule algebra `S`.
//!
//! The levels are the Hom-spaces `W^n = Hom_S(M, M⊗H^⊗n)` with the
//! composition-type product
//!
//! ```text
//!   φ ∘· ψ = (id_M⊗μ_H^⊗n) ∘ (id_M⊗χ_n) ∘ (φ⊗id_{H^⊗n}) ∘ ψ
//! ```
//!
//! (plain composition at `n = 0`), organized into a pre-cosimplicial
//! diagram by the coboundaries `bⁱ` below. `ℍ⁰(H,M)` is the equalizer of
//! `(b⁰, b¹)` in `Aut_S(M)`; cocycles are the `∘·`-invertible `Φ` with
//! `b²Φ ∘· b⁰Φ = b¹Φ`; `ℍ¹(H,M)` is the orbit space under
//! `Φ ⇀ f = b¹(f⁻¹) ∘· Φ ∘· b⁰f`.
//!
//! The maps `ω_n : End_S(M)⊗H^⊗n → W^n`, `f⊗h ↦ (m ↦ f(m)⊗h)`, compare
//! this theory with the general one: when `ω₁`, `ω₂` are bijective the
//! composite `ω₁⁻¹∘b⁰` is a coaction making `End_S(M)` an `H`-comodule
//! algebra, and the two theories agree through `ω`.

use crate::algebra::Algebra;
use crate::comodule::{ComoduleAlgebra, HopfModule};
use crate::cosimplicial::{self, GroupDiagram, H1};
use crate::enumerate::{AffineSpace, Limits, PointIter};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::{Matrix, SolveOutcome};

/// Precomputed Hom-space data for one Hopf module: S-linear bases of the
/// three levels, the `∘·` contraction operators, and the coboundary
/// ingredients.
pub struct WContext {
    pub module: HopfModule,
    dm: usize,
    dh: usize,
    /// S-linear basis of `W^n`, `n = 0, 1, 2`, as raw matrices.
    pub w_basis: [Vec<Matrix>; 3],
    /// Columns = vectorized basis elements, for coordinatization.
    basis_cols: [Matrix; 3],
    /// `(id_M⊗μ^⊗n)∘(id_M⊗χ_n)` for `n = 1, 2`.
    k1: Matrix,
    k2: Matrix,
    flip: Matrix,
}

fn vec_of(m: &Matrix) -> Vec<Scalar> {
    m.data().to_vec()
}

impl WContext {
    pub fn new(module: HopfModule) -> Result<WContext> {
        module.check().into_result()?;
        let field = module.field().clone();
        let dm = module.dim;
        let dh = module.comod.hopf.dim();
        let hopf = &module.comod.hopf;

        // χ₂ reorders (a₁,a₂,b₁,b₂) ↦ (a₁,b₁,a₂,b₂); χ₁ is the identity
        let mut chi2 = Matrix::zeros(&field, dh * dh * dh * dh, dh * dh * dh * dh);
        for a1 in 0..dh {
            for a2 in 0..dh {
                for b1 in 0..dh {
                    for b2 in 0..dh {
                        let input = ((a1 * dh + a2) * dh + b1) * dh + b2;
                        let output = ((a1 * dh + b1) * dh + a2) * dh + b2;
                        chi2[(output, input)] = field.one();
                    }
                }
            }
        }
        let mut flip = Matrix::zeros(&field, dh * dh, dh * dh);
        for a in 0..dh {
            for b in 0..dh {
                flip[(b * dh + a, a * dh + b)] = field.one();
            }
        }
        let id_m = Matrix::identity(&field, dm);
        let mu = hopf.mul_matrix();
        let k1 = id_m.kron(&field, &mu);
        let mu2 = mu.kron(&field, &mu);
        let k2 = id_m.kron(&field, &mu2.mul(&field, &chi2));

        let mut ctx = WContext {
            module,
            dm,
            dh,
            w_basis: [Vec::new(), Vec::new(), Vec::new()],
            basis_cols: [
                Matrix::zeros(&field, 0, 0),
                Matrix::zeros(&field, 0, 0),
                Matrix::zeros(&field, 0, 0),
            ],
            k1,
            k2,
            flip,
        };
        for n in 0..3 {
            let basis = ctx.solve_s_linear(n)?;
            let cols: Vec<Vec<Scalar>> = basis.iter().map(vec_of).collect();
            let rows = ctx.raw_rows(n) * ctx.dm;
            ctx.basis_cols[n] = Matrix::from_cols(&field, rows, &cols);
            ctx.w_basis[n] = basis;
        }
        Ok(ctx)
    }

    pub fn field(&self) -> &Field {
        self.module.field()
    }

    fn raw_rows(&self, n: usize) -> usize {
        self.dm * self.dh.pow(n as u32)
    }

    /// Basis of the S-linear maps `M → M⊗H^⊗n`: solves
    /// `Φ∘ρ(s) = (ρ(s)⊗id)∘Φ` for all basis `s` of `S`.
    fn solve_s_linear(&self, n: usize) -> Result<Vec<Matrix>> {
        let field = self.field();
        let rows = self.raw_rows(n);
        let unknowns = rows * self.dm;
        let id_hn = Matrix::identity(field, self.dh.pow(n as u32));
        let ds = self.module.comod.alg.dim();
        let mut stacked = Matrix::zeros(field, unknowns * ds, unknowns);
        for j in 0..ds {
            let rho = &self.module.actions[j];
            let rho_tensor = rho.kron(field, &id_hn);
            // linear map Φ ↦ Φ·ρ − (ρ⊗id)·Φ applied to matrix units
            for r in 0..rows {
                for c in 0..self.dm {
                    let mut unit = Matrix::zeros(field, rows, self.dm);
                    unit[(r, c)] = field.one();
                    let image = unit
                        .mul(field, rho)
                        .sub(field, &rho_tensor.mul(field, &unit));
                    for (idx, v) in vec_of(&image).iter().enumerate() {
                        stacked[(j * unknowns + idx, r * self.dm + c)] = v.clone();
                    }
                }
            }
        }
        let kernel = stacked.kernel(field);
        Ok(kernel
            .into_iter()
            .map(|v| {
                let mut m = Matrix::zeros(field, rows, self.dm);
                for (idx, s) in v.into_iter().enumerate() {
                    m[(idx / self.dm, idx % self.dm)] = s;
                }
                m
            })
            .collect())
    }

    /// Dimension of `W^n` as an S-linear space.
    pub fn w_dim(&self, n: usize) -> usize {
        self.w_basis[n].len()
    }

    /// The unit `m ↦ m⊗1^⊗n`.
    pub fn unit(&self, n: usize) -> Matrix {
        let field = self.field();
        let id_m = Matrix::identity(field, self.dm);
        if n == 0 {
            return id_m;
        }
        let unit_col = Matrix::column(self.module.comod.hopf.algebra().unit_coords());
        let mut unit_h = unit_col.clone();
        for _ in 1..n {
            unit_h = unit_h.kron(field, &unit_col);
        }
        id_m.kron(field, &unit_h)
    }

    /// The composition-type product at level `n`.
    pub fn circ_dot(&self, n: usize, phi: &Matrix, psi: &Matrix) -> Result<Matrix> {
        let field = self.field();
        let rows = self.raw_rows(n);
        if phi.rows != rows || phi.cols != self.dm || psi.rows != rows || psi.cols != self.dm {
            return Err(Error::LevelMismatch { expected: n, found: usize::MAX });
        }
        if n == 0 {
            return Ok(phi.mul(field, psi));
        }
        let id_hn = Matrix::identity(field, self.dh.pow(n as u32));
        let k = if n == 1 { &self.k1 } else { &self.k2 };
        Ok(k.mul(field, &phi.kron(field, &id_hn)).mul(field, psi))
    }

    /// Left-`∘·` operator of `φ`: the square matrix `L` with `φ ∘· ψ = L·ψ`.
    fn left_op(&self, n: usize, phi: &Matrix) -> Matrix {
        let field = self.field();
        if n == 0 {
            return phi.clone();
        }
        let id_hn = Matrix::identity(field, self.dh.pow(n as u32));
        let k = if n == 1 { &self.k1 } else { &self.k2 };
        k.mul(field, &phi.kron(field, &id_hn))
    }

    /// Two-sided `∘·`-inverse within the S-linear maps, if any: solves
    /// `φ ∘· X = unit` linearly, then verifies `X ∘· φ = unit` and
    /// S-linearity of `X`.
    pub fn w_inverse(&self, n: usize, phi: &Matrix) -> Result<Option<Matrix>> {
        let field = self.field();
        let l = self.left_op(n, phi);
        let Some(x) = l.solve_matrix(field, &self.unit(n))? else {
            return Ok(None);
        };
        if self.circ_dot(n, &x, phi)? != self.unit(n) {
            return Ok(None);
        }
        if !self.is_s_linear(n, &x) {
            return Ok(None);
        }
        Ok(Some(x))
    }

    pub fn is_s_linear(&self, n: usize, phi: &Matrix) -> bool {
        let field = self.field();
        let id_hn = Matrix::identity(field, self.dh.pow(n as u32));
        for rho in &self.module.actions {
            let lhs = phi.mul(field, rho);
            let rhs = rho.kron(field, &id_hn).mul(field, phi);
            if lhs != rhs {
                return false;
            }
        }
        true
    }

    /// Coordinates of an S-linear map in the stored `W^n` basis.
    pub fn coordinatize(&self, n: usize, phi: &Matrix) -> Result<Vec<Scalar>> {
        let field = self.field();
        match self.basis_cols[n].solve(field, &vec_of(phi))? {
            SolveOutcome::Solved { particular, .. } => Ok(particular),
            SolveOutcome::Unsolvable => Err(Error::DimensionMismatch(
                "map is not in the S-linear span".into(),
            )),
        }
    }

    /// The map with the given coordinates in the `W^n` basis.
    pub fn from_coords(&self, n: usize, coords: &[Scalar]) -> Matrix {
        let field = self.field();
        let mut out = Matrix::zeros(field, self.raw_rows(n), self.dm);
        for (c, b) in coords.iter().zip(&self.w_basis[n]) {
            if !field.is_zero(c) {
                out = out.add(field, &b.scale(field, c));
            }
        }
        out
    }

    /// The coboundary `bⁱ : W^level → W^{level+1}`.
    pub fn coboundary(&self, level: usize, index: usize, phi: &Matrix) -> Result<Matrix> {
        let field = self.field();
        let hopf = &self.module.comod.hopf;
        let dm_coaction = &self.module.coaction;
        let id_m = Matrix::identity(field, self.dm);
        let id_h = Matrix::identity(field, self.dh);
        let eta = Matrix::column(hopf.algebra().unit_coords());
        match (level, index) {
            // b⁰φ = (id_M⊗μ)∘(Δ_M⊗id_H)∘(φ⊗σ)∘Δ_M
            (0, 0) => {
                let step = phi.kron(field, hopf.antipode()).mul(field, dm_coaction);
                let step = dm_coaction.kron(field, &id_h).mul(field, &step);
                Ok(id_m.kron(field, &hopf.mul_matrix()).mul(field, &step))
            }
            // b¹φ = (id_M⊗η)∘φ = φ⊗η
            (0, 1) => Ok(phi.kron(field, &eta)),
            // b⁰Φ = (id_M⊗μ⊗id_H)∘(Δ_M⊗T)∘(Φ⊗σ)∘Δ_M
            (1, 0) => {
                let step = phi.kron(field, hopf.antipode()).mul(field, dm_coaction);
                let step = dm_coaction.kron(field, &self.flip).mul(field, &step);
                let contract = id_m.kron(field, &hopf.mul_matrix().kron(field, &id_h));
                Ok(contract.mul(field, &step))
            }
            // b¹Φ = (id_M⊗Δ_H)∘Φ
            (1, 1) => Ok(id_m.kron(field, hopf.comult()).mul(field, phi)),
            // b²Φ = Φ⊗η
            (1, 2) => Ok(phi.kron(field, &eta)),
            _ => Err(Error::BadIndex { level, index }),
        }
    }

    /// All invertible S-linear endomorphisms, sorted.
    pub fn aut_elements(&self, limits: &Limits) -> Result<Vec<Matrix>> {
        let field = self.field();
        let r = self.w_dim(0);
        let space = AffineSpace::full(field, r);
        let mut out = Vec::new();
        for coords in PointIter::new(field, &space, limits)? {
            let m = self.from_coords(0, &coords);
            if m.inverse(field)?.is_some() {
                out.push(m);
            }
        }
        out.sort();
        Ok(out)
    }

    /// The diagram of `∘·`-unit groups for the generic engine.
    pub fn diagram<'a>(&'a self, limits: &'a Limits) -> WDiagram<'a> {
        WDiagram { ctx: self, limits }
    }

    /// Verifies the pre-cosimplicial identities `bⁱbʲ = bʲbⁱ⁻¹` (`i > j`)
    /// on the S-linear basis of `W⁰`.
    pub fn check_b_identities(&self) -> Result<()> {
        for phi in &self.w_basis[0] {
            let b0 = self.coboundary(0, 0, phi)?;
            let b1 = self.coboundary(0, 1, phi)?;
            let pairs = [
                ("b1∘b0 = b0∘b0", self.coboundary(1, 1, &b0)?, self.coboundary(1, 0, &b0)?),
                ("b2∘b0 = b0∘b1", self.coboundary(1, 2, &b0)?, self.coboundary(1, 0, &b1)?),
                ("b2∘b1 = b1∘b1", self.coboundary(1, 2, &b1)?, self.coboundary(1, 1, &b1)?),
            ];
            for (name, lhs, rhs) in pairs {
                if lhs != rhs {
                    return Err(Error::AxiomError {
                        name: name.into(),
                        witness: "basis element of End_S(M)".into(),
                    });
                }
            }
        }
        Ok(())
    }
}

/// [`GroupDiagram`] on the `∘·`-unit groups of `W⁰, W¹, W²`.
pub struct WDiagram<'a> {
    pub ctx: &'a WContext,
    pub limits: &'a Limits,
}

impl GroupDiagram for WDiagram<'_> {
    type L0 = Matrix;
    type L1 = Matrix;
    type L2 = Matrix;

    fn unit1(&self) -> Matrix {
        self.ctx.unit(1)
    }
    fn mul0(&self, a: &Matrix, b: &Matrix) -> Matrix {
        self.ctx.circ_dot(0, a, b).expect("level 0 product")
    }
    fn inv0(&self, a: &Matrix) -> Matrix {
        a.inverse(self.ctx.field())
            .expect("square")
            .expect("unit of Aut_S(M)")
    }
    fn mul1(&self, a: &Matrix, b: &Matrix) -> Matrix {
        self.ctx.circ_dot(1, a, b).expect("level 1 product")
    }
    fn mul2(&self, a: &Matrix, b: &Matrix) -> Matrix {
        self.ctx.circ_dot(2, a, b).expect("level 2 product")
    }
    fn d0_level0(&self, x: &Matrix) -> Matrix {
        self.ctx.coboundary(0, 0, x).expect("b0")
    }
    fn d1_level0(&self, x: &Matrix) -> Matrix {
        self.ctx.coboundary(0, 1, x).expect("b1")
    }
    fn d0_level1(&self, x: &Matrix) -> Matrix {
        self.ctx.coboundary(1, 0, x).expect("b0")
    }
    fn d1_level1(&self, x: &Matrix) -> Matrix {
        self.ctx.coboundary(1, 1, x).expect("b1")
    }
    fn d2_level1(&self, x: &Matrix) -> Matrix {
        self.ctx.coboundary(1, 2, x).expect("b2")
    }
    fn level0_elements(&self) -> Result<Vec<Matrix>> {
        self.ctx.aut_elements(self.limits)
    }
    fn cocycle_candidates(&self) -> Result<Vec<Matrix>> {
        // affine slice (id_M⊗ε)∘Φ = id_M inside the W¹ coordinates
        let ctx = self.ctx;
        let field = ctx.field();
        let r1 = ctx.w_dim(1);
        let id_m = Matrix::identity(field, ctx.dm);
        let eps_op = id_m.kron(field, ctx.module.comod.hopf.counit());
        let mut constraint = Matrix::zeros(field, ctx.dm * ctx.dm, r1);
        for (i, b) in ctx.w_basis[1].iter().enumerate() {
            let image = eps_op.mul(field, b);
            for (idx, v) in vec_of(&image).iter().enumerate() {
                constraint[(idx, i)] = v.clone();
            }
        }
        let slice = AffineSpace::solve(field, &constraint, &vec_of(&id_m))?
            .ok_or_else(|| Error::DimensionError("counit-normalized slice is empty".into()))?;
        let mut out = Vec::new();
        for coords in PointIter::new(field, &slice, self.limits)? {
            let phi = ctx.from_coords(1, &coords);
            if ctx.w_inverse(1, &phi)?.is_some() {
                out.push(phi);
            }
        }
        out.sort();
        Ok(out)
    }
}

/// `ℍ⁰`, cocycles, and `ℍ¹` of the restricted theory.
#[derive(Debug, Clone)]
pub struct RestrictedCohomology {
    pub h0: Vec<Matrix>,
    pub z1: Vec<Matrix>,
    pub h1: H1<Matrix, Matrix>,
}

pub fn compute_restricted(ctx: &WContext, limits: &Limits) -> Result<RestrictedCohomology> {
    ctx.check_b_identities()?;
    let diagram = ctx.diagram(limits);
    let h0 = cosimplicial::h0(&diagram)?;
    let z1 = cosimplicial::z1(&diagram)?;
    // cross-check the cocycle conditions on every reported cocycle
    let field = ctx.field();
    let id_m = Matrix::identity(field, ctx.dm);
    let eps_op = id_m.kron(field, ctx.module.comod.hopf.counit());
    for phi in &z1 {
        if !ctx.is_s_linear(1, phi) {
            return Err(Error::AxiomError {
                name: "cocycle is S-linear".into(),
                witness: "reported cocycle".into(),
            });
        }
        if eps_op.mul(field, phi) != id_m {
            return Err(Error::AxiomError {
                name: "cocycle is counit-normalized".into(),
                witness: "reported cocycle".into(),
            });
        }
        let lhs = ctx.circ_dot(
            2,
            &ctx.coboundary(1, 2, phi)?,
            &ctx.coboundary(1, 0, phi)?,
        )?;
        if lhs != ctx.coboundary(1, 1, phi)? {
            return Err(Error::AxiomError {
                name: "cocycle relation".into(),
                witness: "reported cocycle".into(),
            });
        }
        // the ∘·-inverse exists and is S-linear (re-checked inside)
        if ctx.w_inverse(1, phi)?.is_none() {
            return Err(Error::AxiomError {
                name: "cocycle is invertible for the composition product".into(),
                witness: "reported cocycle".into(),
            });
        }
    }
    let units = diagram.level0_elements()?;
    let h1 = cosimplicial::h1_from_parts(&diagram, &z1, &units)?;
    Ok(RestrictedCohomology { h0, z1, h1 })
}

/// The comparison map `ω_n` with its bijectivity verdict and the tensor
/// algebra `End_S(M)⊗H^⊗n` it is defined on.
pub struct OmegaMap {
    pub n: usize,
    /// Coordinates map `End_S(M)⊗H^⊗n → W^n` (in the stored bases).
    pub matrix: Matrix,
    pub bijective: bool,
    pub algebra_morphism: bool,
    pub end_tensor: Algebra,
}

/// `End_S(M)` as a structure-constant algebra in the computed basis.
pub fn end_algebra(ctx: &WContext) -> Result<Algebra> {
    let field = ctx.field();
    let r = ctx.w_dim(0);
    let mut mult = vec![vec![vec![field.zero(); r]; r]; r];
    for a in 0..r {
        for b in 0..r {
            let prod = ctx.w_basis[0][a].mul(field, &ctx.w_basis[0][b]);
            mult[a][b] = ctx.coordinatize(0, &prod)?;
        }
    }
    let unit = ctx.coordinatize(0, &Matrix::identity(field, ctx.dm))?;
    let labels = (0..r).map(|i| format!("f{i}")).collect();
    Algebra::new(field.clone(), labels, mult, unit)
}

pub fn omega(ctx: &WContext, n: usize) -> Result<OmegaMap> {
    let field = ctx.field();
    let end = end_algebra(ctx)?;
    let hn: Algebra = match n {
        0 => Algebra::ground(field.clone()),
        1 => ctx.module.comod.hopf.algebra().clone(),
        2 => {
            let h = ctx.module.comod.hopf.algebra();
            h.tensor(h)?
        }
        _ => return Err(Error::BadIndex { level: n, index: n }),
    };
    let end_tensor = end.tensor(&hn)?;
    let dhn = hn.dim();
    let r = ctx.w_dim(0);
    let rn = ctx.w_dim(n);
    let mut matrix = Matrix::zeros(field, rn, r * dhn);
    let mut all_in_span = true;
    for a in 0..r {
        for beta in 0..dhn {
            let mut e_beta = Matrix::zeros(field, dhn, 1);
            e_beta[(beta, 0)] = field.one();
            let raw = ctx.w_basis[0][a].kron(field, &e_beta);
            match ctx.coordinatize(n, &raw) {
                Ok(coords) => {
                    for (i, v) in coords.iter().enumerate() {
                        matrix[(i, a * dhn + beta)] = v.clone();
                    }
                }
                Err(_) => all_in_span = false,
            }
        }
    }
    let bijective = all_in_span && rn == r * dhn && matrix.rank(field) == rn;

    // ω is an algebra morphism for the ∘· product
    let omega_raw = |coords: &[Scalar]| -> Matrix {
        let mut out = Matrix::zeros(field, ctx.dm * ctx.dh.pow(n as u32), ctx.dm);
        for (idx, c) in coords.iter().enumerate() {
            if field.is_zero(c) {
                continue;
            }
            let (a, beta) = (idx / dhn, idx % dhn);
            let mut e_beta = Matrix::zeros(field, dhn, 1);
            e_beta[(beta, 0)] = field.one();
            out = out.add(field, &ctx.w_basis[0][a].kron(field, &e_beta).scale(field, c));
        }
        out
    };
    let mut algebra_morphism = true;
    'check: for i in 0..end_tensor.dim() {
        for j in 0..end_tensor.dim() {
            let ei = end_tensor.basis_element(i);
            let ej = end_tensor.basis_element(j);
            let prod = end_tensor.mul(&ei, &ej)?;
            let lhs = omega_raw(&prod.coords);
            let rhs = ctx.circ_dot(n, &omega_raw(&ei.coords), &omega_raw(&ej.coords))?;
            if lhs != rhs {
                algebra_morphism = false;
                break 'check;
            }
        }
    }
    Ok(OmegaMap { n, matrix, bijective, algebra_morphism, end_tensor })
}

/// `End_S(M)` as an `H`-comodule algebra via `Δ_End = ω₁⁻¹∘b⁰`; requires
/// `ω₁` and `ω₂` bijective.
pub fn end_comodule(ctx: &WContext) -> Result<ComoduleAlgebra> {
    let field = ctx.field();
    let omega1 = omega(ctx, 1)?;
    if !omega1.bijective {
        return Err(Error::ConditionFFailed(1));
    }
    let omega2 = omega(ctx, 2)?;
    if !omega2.bijective {
        return Err(Error::ConditionFFailed(2));
    }
    let end = end_algebra(ctx)?;
    let r = end.dim();
    let dh = ctx.dh;
    let mut coaction = Matrix::zeros(field, r * dh, r);
    for a in 0..r {
        let b0 = ctx.coboundary(0, 0, &ctx.w_basis[0][a])?;
        let w_coords = ctx.coordinatize(1, &b0)?;
        match omega1.matrix.solve(field, &w_coords)? {
            SolveOutcome::Solved { particular, .. } => {
                for (i, v) in particular.iter().enumerate() {
                    coaction[(i, a)] = v.clone();
                }
            }
            SolveOutcome::Unsolvable => return Err(Error::ConditionFFailed(1)),
        }
    }
    let comod = ComoduleAlgebra::new(ctx.module.comod.hopf.clone(), end, coaction)?;
    comod.check().into_result()?;
    Ok(comod)
}

/// Side-by-side comparison of the general cohomology of `End_S(M)` with
/// the restricted cohomology of `M`, matched through `ω`.
pub struct RestrictedComparison {
    pub end_comod: ComoduleAlgebra,
    pub general: crate::cohomology::Cohomology,
    pub restricted: RestrictedCohomology,
    /// `ω_j∘dⁱ = bⁱ∘ω_{j−1}` as matrix identities.
    pub intertwining_ok: bool,
    pub h0_equal: bool,
    pub z1_matched: bool,
    /// `pairing[i] = j` sends general class `i` to restricted class `j`.
    pub pairing: Vec<usize>,
    pub h1_bijective: bool,
}

impl RestrictedComparison {
    pub fn verified(&self) -> bool {
        self.intertwining_ok
            && self.h0_equal
            && self.z1_matched
            && self.h1_bijective
            && self.pairing.first() == Some(&0)
    }
}

pub fn compare_restricted(module: &HopfModule, limits: &Limits) -> Result<RestrictedComparison> {
    let ctx = WContext::new(module.clone())?;
    let field = ctx.field();
    let omega0 = omega(&ctx, 0)?;
    if !omega0.bijective {
        return Err(Error::ConditionFFailed(0));
    }
    let omega1 = omega(&ctx, 1)?;
    let omega2 = omega(&ctx, 2)?;
    if !omega0.algebra_morphism || !omega1.algebra_morphism || !omega2.algebra_morphism {
        return Err(Error::AxiomError {
            name: "comparison map is an algebra morphism".into(),
            witness: "omega".into(),
        });
    }
    if !omega1.bijective {
        return Err(Error::ConditionFFailed(1));
    }
    if !omega2.bijective {
        return Err(Error::ConditionFFailed(2));
    }

    let end_comod = end_comodule(&ctx)?;
    let diagram = crate::cohomology::Diagram::build(end_comod.clone())?;
    let general = crate::cohomology::Cohomology::compute(&diagram, limits)?;
    let restricted = compute_restricted(&ctx, limits)?;

    // ω_j∘dⁱ = bⁱ∘ω_{j−1}: build the b-operators in W coordinates
    let b_op = |level: usize, index: usize| -> Result<Matrix> {
        let src = ctx.w_dim(level);
        let dst = ctx.w_dim(level + 1);
        let mut op = Matrix::zeros(field, dst, src);
        for (i, basis) in ctx.w_basis[level].iter().enumerate() {
            let image = ctx.coboundary(level, index, basis)?;
            let coords = ctx.coordinatize(level + 1, &image)?;
            for (r, v) in coords.iter().enumerate() {
                op[(r, i)] = v.clone();
            }
        }
        Ok(op)
    };
    let mut intertwining_ok = true;
    let checks = [
        (omega1.matrix.mul(field, &diagram.d0_01), b_op(0, 0)?.mul(field, &omega0.matrix)),
        (omega1.matrix.mul(field, &diagram.d1_01), b_op(0, 1)?.mul(field, &omega0.matrix)),
        (omega2.matrix.mul(field, &diagram.d0_12), b_op(1, 0)?.mul(field, &omega1.matrix)),
        (omega2.matrix.mul(field, &diagram.d1_12), b_op(1, 1)?.mul(field, &omega1.matrix)),
        (omega2.matrix.mul(field, &diagram.d2_12), b_op(1, 2)?.mul(field, &omega1.matrix)),
    ];
    for (lhs, rhs) in checks {
        if lhs != rhs {
            intertwining_ok = false;
        }
    }

    // H⁰ as sets of automorphisms, matched through ω₀ = id
    let mut sorted_general: Vec<Matrix> = general
        .h0
        .elements
        .iter()
        .map(|x| ctx.from_coords(0, &x.coords))
        .collect();
    sorted_general.sort();
    let h0_equal = sorted_general == restricted.h0;

    // Z¹ through ω₁
    let omega1_raw = |x: &crate::algebra::Element| -> Matrix {
        let dh = ctx.dh;
        let mut out = Matrix::zeros(field, ctx.dm * dh, ctx.dm);
        for (idx, c) in x.coords.iter().enumerate() {
            if field.is_zero(c) {
                continue;
            }
            let (a, beta) = (idx / dh, idx % dh);
            let mut e_beta = Matrix::zeros(field, dh, 1);
            e_beta[(beta, 0)] = field.one();
            out = out.add(field, &ctx.w_basis[0][a].kron(field, &e_beta).scale(field, c));
        }
        out
    };
    let mut mapped: Vec<Matrix> = general.z1.iter().map(&omega1_raw).collect();
    mapped.sort();
    let z1_matched = mapped == restricted.z1;

    // H¹ pairing
    let mut pairing = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    let mut h1_bijective = general.h1.class_count() == restricted.h1.class_count();
    for orbit in &general.h1.orbits {
        let image = omega1_raw(&orbit.representative);
        match restricted.h1.class_of(&image) {
            Some(j) => {
                if !seen.insert(j) {
                    h1_bijective = false;
                }
                pairing.push(j);
            }
            None => {
                h1_bijective = false;
                pairing.push(usize::MAX);
            }
        }
    }
    Ok(RestrictedComparison {
        end_comod,
        general,
        restricted,
        intertwining_ok,
        h0_equal,
        z1_matched,
        pairing,
        h1_bijective,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::Hopf;

    fn f3() -> Field {
        Field::prime(3).unwrap()
    }

    fn e2_module() -> HopfModule {
        HopfModule::regular(ComoduleAlgebra::dual_numbers(f3()).unwrap())
    }

    #[test]
    fn w_basis_dimensions() {
        // M = S = E₂: End_S(M) ≅ E₂, W¹ ≅ E₂⊗H₄, W² ≅ E₂⊗H₄⊗H₄
        let ctx = WContext::new(e2_module()).unwrap();
        assert_eq!(ctx.w_dim(0), 2);
        assert_eq!(ctx.w_dim(1), 8);
        assert_eq!(ctx.w_dim(2), 32);
    }

    #[test]
    fn circ_dot_unit_laws() {
        let ctx = WContext::new(e2_module()).unwrap();
        for n in 0..3 {
            let unit = ctx.unit(n);
            for b in &ctx.w_basis[n] {
                assert_eq!(ctx.circ_dot(n, b, &unit).unwrap(), *b);
                assert_eq!(ctx.circ_dot(n, &unit, b).unwrap(), *b);
            }
        }
        // level 0 is plain composition
        let f = f3();
        let a = &ctx.w_basis[0][0];
        let b = &ctx.w_basis[0][1];
        assert_eq!(ctx.circ_dot(0, a, b).unwrap(), a.mul(&f, b));
        // shape mismatch is a level error
        assert!(matches!(
            ctx.circ_dot(1, a, b),
            Err(Error::LevelMismatch { .. })
        ));
    }

    #[test]
    fn circ_dot_is_associative() {
        // exhaustive on the S-linear basis at levels 0 and 1
        let ctx = WContext::new(e2_module()).unwrap();
        for n in 0..2 {
            for a in &ctx.w_basis[n] {
                for b in &ctx.w_basis[n] {
                    for c in &ctx.w_basis[n] {
                        let left = ctx
                            .circ_dot(n, &ctx.circ_dot(n, a, b).unwrap(), c)
                            .unwrap();
                        let right = ctx
                            .circ_dot(n, a, &ctx.circ_dot(n, b, c).unwrap())
                            .unwrap();
                        assert_eq!(left, right);
                    }
                }
            }
        }
        // level 2 on a deterministic sample of basis triples
        let basis = &ctx.w_basis[2];
        for step in [1usize, 5, 11] {
            for start in 0..4 {
                let a = &basis[(start * 7) % basis.len()];
                let b = &basis[(start * 7 + step) % basis.len()];
                let c = &basis[(start * 13 + 2 * step) % basis.len()];
                let left = ctx.circ_dot(2, &ctx.circ_dot(2, a, b).unwrap(), c).unwrap();
                let right = ctx.circ_dot(2, a, &ctx.circ_dot(2, b, c).unwrap()).unwrap();
                assert_eq!(left, right);
            }
        }
    }

    #[test]
    fn coaction_inverse_in_w1() {
        // Δ_M is ∘·-invertible with inverse (id⊗σ)∘Δ_M
        let ctx = WContext::new(e2_module()).unwrap();
        let f = f3();
        let dm_coaction = ctx.module.coaction.clone();
        let sigma = ctx.module.comod.hopf.antipode().clone();
        let id_m = Matrix::identity(&f, 2);
        let inverse = id_m.kron(&f, &sigma).mul(&f, &dm_coaction);
        let unit = ctx.unit(1);
        assert_eq!(ctx.circ_dot(1, &dm_coaction, &inverse).unwrap(), unit);
        assert_eq!(ctx.circ_dot(1, &inverse, &dm_coaction).unwrap(), unit);
    }

    #[test]
    fn coboundaries_of_identity() {
        let ctx = WContext::new(e2_module()).unwrap();
        let f = f3();
        let id = Matrix::identity(&f, 2);
        // b⁰(id) = unit of W¹ (counit/antipode law), b¹(id) = unit by definition
        assert_eq!(ctx.coboundary(0, 0, &id).unwrap(), ctx.unit(1));
        assert_eq!(ctx.coboundary(0, 1, &id).unwrap(), ctx.unit(1));
        // b² appends the unit of H
        let phi = &ctx.w_basis[1][3];
        let eta = Matrix::column(ctx.module.comod.hopf.algebra().unit_coords());
        assert_eq!(ctx.coboundary(1, 2, phi).unwrap(), phi.kron(&f, &eta));
        assert!(matches!(
            ctx.coboundary(0, 2, &id),
            Err(Error::BadIndex { .. })
        ));
        ctx.check_b_identities().unwrap();
    }

    #[test]
    fn restricted_cohomology_of_dual_numbers() {
        let ctx = WContext::new(e2_module()).unwrap();
        let limits = Limits::default();
        let coh = compute_restricted(&ctx, &limits).unwrap();
        // mirrors the general theory: 6 cocycles, 2 classes, H⁰ of order 2
        assert_eq!(coh.z1.len(), 6);
        assert_eq!(coh.h1.class_count(), 2);
        assert_eq!(coh.h0.len(), 2);
    }

    #[test]
    fn trivial_hopf_restricted() {
        // M = E over itself with the trivial Hopf algebra: only the identity cocycle
        let f = f3();
        let e2 = ComoduleAlgebra::dual_numbers(f.clone()).unwrap();
        let comod = ComoduleAlgebra::over_trivial_hopf(e2.alg);
        let ctx = WContext::new(HopfModule::regular(comod)).unwrap();
        let coh = compute_restricted(&ctx, &Limits::default()).unwrap();
        assert_eq!(coh.z1.len(), 1);
        assert_eq!(coh.h1.class_count(), 1);
    }

    #[test]
    fn omega_maps() {
        let ctx = WContext::new(e2_module()).unwrap();
        let omega0 = omega(&ctx, 0).unwrap();
        assert!(omega0.bijective);
        assert!(omega0.algebra_morphism);
        // ω₀ is the identity in the chosen coordinates
        assert_eq!(omega0.matrix, Matrix::identity(&f3(), 2));
        for n in [1, 2] {
            let om = omega(&ctx, n).unwrap();
            assert!(om.bijective, "omega {n} bijective");
            assert!(om.algebra_morphism, "omega {n} morphism");
        }
    }

    #[test]
    fn end_comodule_structure() {
        let ctx = WContext::new(e2_module()).unwrap();
        let end = end_comodule(&ctx).unwrap();
        assert!(end.check().is_ok());
        // Δ_End(id) = id⊗1
        let f = f3();
        let id_coords = ctx.coordinatize(0, &Matrix::identity(&f, 2)).unwrap();
        let image = end.coaction.apply(&f, &id_coords);
        let eh = end.tensor_with_hopf();
        let unit_tensor: Vec<Scalar> = eh.unit_coords().to_vec();
        assert_eq!(image, unit_tensor);
    }

    #[test]
    fn comparison_for_dual_numbers() {
        let limits = Limits::default();
        let cmp = compare_restricted(&e2_module(), &limits).unwrap();
        assert!(cmp.intertwining_ok);
        assert!(cmp.h0_equal);
        assert!(cmp.z1_matched);
        assert!(cmp.h1_bijective);
        assert_eq!(cmp.general.h1.class_count(), 2);
        assert!(cmp.verified());
    }

    #[test]
    fn comparison_for_a_rank_two_module() {
        // M = k² over (k^{ℤ/2}, k) with the trivial coaction: the
        // endomorphism algebra is the full 2×2 matrix algebra and the
        // cohomology counts order-two elements of GL₂(𝔽₃) up to
        // conjugacy. That count is recomputed here by brute force as an
        // independent oracle.
        let f = f3();
        let kz2 = Hopf::function_algebra(&crate::group::FiniteGroup::cyclic(2), f.clone()).unwrap();
        let comod = ComoduleAlgebra::trivial_coefficients(kz2);
        let id2 = Matrix::identity(&f, 2);
        let coaction = id2.kron(&f, &Matrix::column(comod.hopf.algebra().unit_coords()));
        let module = HopfModule::new(comod, 2, vec![id2.clone()], coaction).unwrap();
        assert!(module.check().is_ok());

        let limits = Limits::default();
        let cmp = compare_restricted(&module, &limits).unwrap();
        assert!(cmp.verified());

        // oracle: involutions (including the identity) of GL₂(𝔽₃) up to
        // conjugacy, enumerated directly
        let ctx = WContext::new(module).unwrap();
        let units = ctx.aut_elements(&limits).unwrap();
        assert_eq!(units.len(), 48); // |GL₂(𝔽₃)|
        let mut involutions: Vec<&Matrix> = units
            .iter()
            .filter(|g| g.mul(&f, g) == Matrix::identity(&f, 2))
            .collect();
        involutions.sort();
        let mut classes = 0usize;
        let mut assigned: Vec<bool> = vec![false; involutions.len()];
        for i in 0..involutions.len() {
            if assigned[i] {
                continue;
            }
            classes += 1;
            for g in &units {
                let ginv = g.inverse(&f).unwrap().unwrap();
                let conj = g.mul(&f, involutions[i]).mul(&f, &ginv);
                if let Ok(pos) = involutions.binary_search_by(|m| (*m).cmp(&&conj)) {
                    assigned[pos] = true;
                }
            }
        }
        assert_eq!(classes, 3);
        assert_eq!(cmp.restricted.h1.class_count(), classes);
        assert_eq!(cmp.general.h1.class_count(), classes);
    }

    #[test]
    fn comparison_for_trivial_coefficients() {
        // M = k over (H₄, k): everything reduces to the trivial-coefficients case
        let f = f3();
        let h4 = Hopf::sweedler(f).unwrap();
        let comod = ComoduleAlgebra::trivial_coefficients(h4);
        let module = HopfModule::regular(comod);
        let cmp = compare_restricted(&module, &Limits::default()).unwrap();
        assert!(cmp.verified());
        assert_eq!(cmp.general.h1.class_count(), 2);
        assert_eq!(cmp.restricted.h1.class_count(), 2);
    }
}
