//! Finite-dimensional associative unital algebras presented by structure
//! constants, with tensor products, inverses, and exhaustive element
//! enumeration over prime fields.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::enumerate::{AffineSpace, Limits, PointIter};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::fp::{self, Fp, FpMulTable};
use crate::matrix::{vec_add, vec_is_zero, vec_scale, vec_sub, Matrix};

static NEXT_TAG: AtomicU64 = AtomicU64::new(1);

/// Nonzero coordinates of a basis product `e_i·e_j`.
pub type SparseVec = Vec<(usize, Scalar)>;

/// An associative unital algebra over [`Field`], given by basis labels
/// and structure constants `c[i][j][k]` with `e_i·e_j = Σ_k c[i][j][k]·e_k`.
#[derive(Debug, Clone)]
pub struct Algebra {
    field: Field,
    dim: usize,
    labels: Vec<String>,
    /// `table[i·dim + j]` = sparse coordinates of `e_i·e_j`.
    table: Vec<SparseVec>,
    unit: Vec<Scalar>,
    tag: u64,
}

/// An element of a specific [`Algebra`], tagged with its parent so that
/// cross-algebra products are rejected. Equality and ordering compare
/// coordinates only (lexicographically), so canonical representatives are
/// stable across algebra clones.
#[derive(Debug, Clone)]
pub struct Element {
    pub(crate) tag: u64,
    pub coords: Vec<Scalar>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}

impl Eq for Element {}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Element {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coords.cmp(&other.coords)
    }
}

impl std::hash::Hash for Element {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

/// Verdict of an axiom suite: the axioms checked, and the failures with a
/// witness for each.
#[derive(Debug, Clone, Default)]
pub struct AxiomReport {
    pub checked: Vec<String>,
    pub failures: Vec<AxiomFailure>,
}

#[derive(Debug, Clone)]
pub struct AxiomFailure {
    pub axiom: String,
    pub witness: String,
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn record(&mut self, axiom: &str, failure: Option<String>) {
        self.checked.push(axiom.to_string());
        if let Some(witness) = failure {
            self.failures.push(AxiomFailure { axiom: axiom.to_string(), witness });
        }
    }

    pub fn merge(&mut self, other: AxiomReport) {
        self.checked.extend(other.checked);
        self.failures.extend(other.failures);
    }

    /// Turns a failing report into an error.
    pub fn into_result(self) -> Result<()> {
        match self.failures.first() {
            None => Ok(()),
            Some(f) => Err(Error::AxiomError { name: f.axiom.clone(), witness: f.witness.clone() }),
        }
    }
}

impl Algebra {
    /// Builds an algebra from dense structure constants
    /// `mult[i][j] = coordinates of e_i·e_j`.
    pub fn new(
        field: Field,
        labels: Vec<String>,
        mult: Vec<Vec<Vec<Scalar>>>,
        unit: Vec<Scalar>,
    ) -> Result<Algebra> {
        let dim = labels.len();
        if mult.len() != dim || unit.len() != dim {
            return Err(Error::DimensionError(format!(
                "algebra of dimension {dim} needs {dim}² products and a unit vector"
            )));
        }
        let mut table = Vec::with_capacity(dim * dim);
        for (i, row) in mult.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionError(format!("product row {i} has wrong arity")));
            }
            for prod in row {
                if prod.len() != dim {
                    return Err(Error::DimensionError(format!(
                        "product vector in row {i} has wrong arity"
                    )));
                }
                let sparse: SparseVec = prod
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| !field.is_zero(s))
                    .map(|(k, s)| {
                        if !field.validate(s) {
                            Err(Error::DimensionError("non-canonical scalar".into()))
                        } else {
                            Ok((k, s.clone()))
                        }
                    })
                    .collect::<Result<_>>()?;
                table.push(sparse);
            }
        }
        Ok(Algebra {
            field,
            dim,
            labels,
            table,
            unit,
            tag: NEXT_TAG.fetch_add(1, Ordering::Relaxed),
        })
    }

    /// The one-dimensional algebra `k`.
    pub fn ground(field: Field) -> Algebra {
        let one = field.one();
        Algebra::new(field.clone(), vec!["1".into()], vec![vec![vec![one.clone()]]], vec![one])
            .expect("ground algebra")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit_coords(&self) -> &[Scalar] {
        &self.unit
    }

    /// Dense structure-constant slice `c[i][j][·]` as a coordinate vector.
    pub fn product_of_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (k, s) in &self.table[i * self.dim + j] {
            out[*k] = s.clone();
        }
        out
    }

    pub fn element(&self, coords: Vec<Scalar>) -> Element {
        assert_eq!(coords.len(), self.dim, "coordinate length");
        Element { tag: self.tag, coords }
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut coords = vec![self.field.zero(); self.dim];
        coords[i] = self.field.one();
        self.element(coords)
    }

    pub fn unit(&self) -> Element {
        self.element(self.unit.clone())
    }

    pub fn zero(&self) -> Element {
        self.element(vec![self.field.zero(); self.dim])
    }

    /// Accepts elements of this algebra or of a structurally identical one.
    fn ensure_parent(&self, e: &Element) -> Result<()> {
        if e.tag == self.tag {
            return Ok(());
        }
        if e.coords.len() == self.dim {
            // structural fallback for clones built independently
            return Ok(());
        }
        Err(Error::ParentMismatch)
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        if a.tag != b.tag && a.coords.len() != b.coords.len() {
            return Err(Error::ParentMismatch);
        }
        self.ensure_parent(a)?;
        self.ensure_parent(b)?;
        let mut out = vec![self.field.zero(); self.dim];
        for (i, ai) in a.coords.iter().enumerate() {
            if self.field.is_zero(ai) {
                continue;
            }
            for (j, bj) in b.coords.iter().enumerate() {
                if self.field.is_zero(bj) {
                    continue;
                }
                let c = self.field.mul(ai, bj);
                for (k, v) in &self.table[i * self.dim + j] {
                    out[*k] = self.field.add(&out[*k], &self.field.mul(v, &c));
                }
            }
        }
        Ok(Element { tag: self.tag, coords: out })
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        Element { tag: self.tag, coords: vec_add(&self.field, &a.coords, &b.coords) }
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Element {
        Element { tag: self.tag, coords: vec_sub(&self.field, &a.coords, &b.coords) }
    }

    pub fn scale(&self, a: &Element, s: &Scalar) -> Element {
        Element { tag: self.tag, coords: vec_scale(&self.field, &a.coords, s) }
    }

    pub fn is_zero(&self, a: &Element) -> bool {
        vec_is_zero(&self.field, &a.coords)
    }

    pub fn is_unit_element(&self, a: &Element) -> bool {
        a.coords == self.unit
    }

    /// Matrix of left multiplication `x ↦ a·x`.
    pub fn left_mul_matrix(&self, a: &Element) -> Matrix {
        Matrix::from_fn(&self.field, self.dim, self.dim, |i, j| {
            let mut acc = self.field.zero();
            for (k, ak) in a.coords.iter().enumerate() {
                if self.field.is_zero(ak) {
                    continue;
                }
                for (idx, v) in &self.table[k * self.dim + j] {
                    if *idx == i {
                        acc = self.field.add(&acc, &self.field.mul(ak, v));
                    }
                }
            }
            acc
        })
    }

    /// Matrix of right multiplication `x ↦ x·a`.
    pub fn right_mul_matrix(&self, a: &Element) -> Matrix {
        Matrix::from_fn(&self.field, self.dim, self.dim, |i, j| {
            let mut acc = self.field.zero();
            for (k, ak) in a.coords.iter().enumerate() {
                if self.field.is_zero(ak) {
                    continue;
                }
                for (idx, v) in &self.table[j * self.dim + k] {
                    if *idx == i {
                        acc = self.field.add(&acc, &self.field.mul(ak, v));
                    }
                }
            }
            acc
        })
    }

    /// Two-sided inverse: solves `a·x = 1` and verifies `x·a = 1`.
    pub fn try_inverse(&self, a: &Element) -> Result<Element> {
        self.ensure_parent(a)?;
        let la = self.left_mul_matrix(a);
        match la.solve(&self.field, &self.unit)? {
            crate::matrix::SolveOutcome::Solved { particular, .. } => {
                let x = self.element(particular);
                let back = self.mul(&x, a)?;
                if self.is_unit_element(&back) {
                    Ok(x)
                } else {
                    Err(Error::NotInvertible)
                }
            }
            crate::matrix::SolveOutcome::Unsolvable => Err(Error::NotInvertible),
        }
    }

    pub fn is_invertible(&self, a: &Element) -> bool {
        self.try_inverse(a).is_ok()
    }

    /// Verifies associativity on all basis triples and the unit law on all
    /// basis vectors, reporting the first failing witness per axiom.
    pub fn check_axioms(&self) -> AxiomReport {
        let mut report = AxiomReport::default();

        let mut assoc_failure = None;
        'outer: for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.element(self.product_of_basis(i, j));
                for l in 0..self.dim {
                    let jl = self.element(self.product_of_basis(j, l));
                    let lhs = self.mul(&ij, &self.basis_element(l)).unwrap();
                    let rhs = self.mul(&self.basis_element(i), &jl).unwrap();
                    if lhs != rhs {
                        assoc_failure = Some(format!(
                            "({}·{})·{} ≠ {}·({}·{})",
                            self.labels[i], self.labels[j], self.labels[l],
                            self.labels[i], self.labels[j], self.labels[l]
                        ));
                        break 'outer;
                    }
                }
            }
        }
        report.record("associativity", assoc_failure);

        let mut unit_failure = None;
        let one = self.unit();
        for i in 0..self.dim {
            let e = self.basis_element(i);
            if self.mul(&one, &e).unwrap() != e || self.mul(&e, &one).unwrap() != e {
                unit_failure = Some(format!("unit law fails on {}", self.labels[i]));
                break;
            }
        }
        report.record("unit law", unit_failure);
        report
    }

    pub fn is_commutative(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..i {
                if self.product_of_basis(i, j) != self.product_of_basis(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Tensor product algebra; basis pairs `(i, j) ↦ i·dim(B) + j`
    /// (left factor is the slow index).
    pub fn tensor(&self, other: &Algebra) -> Result<Algebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let dim = self.dim * other.dim;
        let mut table = vec![SparseVec::new(); dim * dim];
        for i1 in 0..self.dim {
            for i2 in 0..self.dim {
                let left = &self.table[i1 * self.dim + i2];
                for j1 in 0..other.dim {
                    for j2 in 0..other.dim {
                        let right = &other.table[j1 * other.dim + j2];
                        let mut sparse = SparseVec::new();
                        for (k1, v1) in left {
                            for (k2, v2) in right {
                                sparse.push((k1 * other.dim + k2, self.field.mul(v1, v2)));
                            }
                        }
                        sparse.sort_by_key(|(k, _)| *k);
                        let row = i1 * other.dim + j1;
                        let col = i2 * other.dim + j2;
                        table[row * dim + col] = sparse;
                    }
                }
            }
        }
        let mut unit = vec![self.field.zero(); dim];
        for (i, u1) in self.unit.iter().enumerate() {
            for (j, u2) in other.unit.iter().enumerate() {
                unit[i * other.dim + j] = self.field.mul(u1, u2);
            }
        }
        let labels = self
            .labels
            .iter()
            .flat_map(|a| other.labels.iter().map(move |b| format!("{a}⊗{b}")))
            .collect();
        Ok(Algebra {
            field: self.field.clone(),
            dim,
            labels,
            table,
            unit,
            tag: NEXT_TAG.fetch_add(1, Ordering::Relaxed),
        })
    }

    /// Iterator over all elements (or over an affine subspace of them),
    /// budget-checked before iteration starts.
    pub fn enumerate<'a>(
        &'a self,
        constraint: Option<&'a AffineSpace>,
        limits: &Limits,
    ) -> Result<ElementIter<'a>> {
        match constraint {
            Some(space) => {
                assert_eq!(space.ambient_dim(), self.dim);
                let iter = PointIter::new(&self.field, space, limits)?;
                Ok(ElementIter { tag: self.tag, inner: IterKind::Affine(iter) })
            }
            None => self.enumerate_full(limits),
        }
    }

    fn enumerate_full(&self, limits: &Limits) -> Result<ElementIter<'_>> {
        let total = limits.check(&self.field, self.dim)?;
        Ok(ElementIter {
            tag: self.tag,
            inner: IterKind::Full {
                field: &self.field,
                p: self.field.characteristic(),
                dim: self.dim,
                index: 0,
                total,
            },
        })
    }

    /// All invertible elements, sorted by coordinates. Uses the prime-field
    /// fast path and splits across `limits.threads` workers.
    pub fn units(&self, limits: &Limits) -> Result<Vec<Element>> {
        let total = limits.check(&self.field, self.dim)?;
        let fp = Fp::new(&self.field).expect("prime field checked above");
        let table = self.fp_table();
        let dim = self.dim;
        let found = fp::par_scan(total, limits.threads, |n| {
            let mut coords = vec![0u64; dim];
            fp::decode_digits(n, fp.p, dim, &mut coords);
            if table.is_invertible(fp, &coords) {
                Some(coords)
            } else {
                None
            }
        });
        Ok(found
            .into_iter()
            .map(|c| self.element(fp::to_scalars(&c)))
            .collect())
    }

    /// Sparse structure constants in fast-path form.
    pub fn fp_table(&self) -> FpMulTable {
        let entries = self
            .table
            .iter()
            .map(|sparse| {
                sparse
                    .iter()
                    .map(|(k, s)| match s {
                        Scalar::Fp(v) => (*k as u32, *v),
                        Scalar::Q(_) => panic!("fast path requires a prime field"),
                    })
                    .collect()
            })
            .collect();
        FpMulTable::new(self.dim, entries, fp::from_scalars(&self.unit))
    }

    /// Pretty form `α·label + …` used in witnesses and reports.
    pub fn describe(&self, e: &Element) -> String {
        let mut parts = Vec::new();
        for (i, c) in e.coords.iter().enumerate() {
            if self.field.is_zero(c) {
                continue;
            }
            if self.field.is_one(c) {
                parts.push(self.labels[i].clone());
            } else {
                parts.push(format!("{}·{}", c, self.labels[i]));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

enum IterKind<'a> {
    Affine(PointIter<'a>),
    Full { field: &'a Field, p: u64, dim: usize, index: u64, total: u64 },
}

/// Lazy element stream in lexicographic coordinate order.
pub struct ElementIter<'a> {
    tag: u64,
    inner: IterKind<'a>,
}

impl Iterator for ElementIter<'_> {
    type Item = Element;

    fn next(&mut self) -> Option<Element> {
        match &mut self.inner {
            IterKind::Affine(it) => it.next().map(|coords| Element { tag: self.tag, coords }),
            IterKind::Full { field, p, dim, index, total } => {
                if index >= total {
                    return None;
                }
                let mut digits = vec![0u64; *dim];
                fp::decode_digits(*index, *p, *dim, &mut digits);
                *index += 1;
                let coords = digits
                    .iter()
                    .map(|&d| match field {
                        Field::Prime(_) => Scalar::Fp(d),
                        Field::Rational => unreachable!("budget check rejects rationals"),
                    })
                    .collect();
                Some(Element { tag: self.tag, coords })
            }
        }
    }
}

/// A finite set of elements closed under multiplication, with its
/// multiplication table (indices into `elements`).
#[derive(Debug, Clone)]
pub struct ElementGroup {
    pub elements: Vec<Element>,
    pub table: Vec<usize>,
    pub identity: usize,
}

impl ElementGroup {
    /// Builds the table for a set expected to be a group under `alg`'s
    /// product; errors if the set is not closed or lacks inverses.
    pub fn close(alg: &Algebra, elements: Vec<Element>) -> Result<ElementGroup> {
        let n = elements.len();
        let mut table = vec![0usize; n * n];
        let mut lookup: Vec<(&Element, usize)> = elements.iter().zip(0..n).collect();
        lookup.sort_by(|a, b| a.0.cmp(b.0));
        let index_of = |e: &Element| {
            lookup
                .binary_search_by(|probe| probe.0.cmp(e))
                .ok()
                .map(|pos| lookup[pos].1)
        };
        let mut identity = None;
        for (i, a) in elements.iter().enumerate() {
            if alg.is_unit_element(a) {
                identity = Some(i);
            }
            for (j, b) in elements.iter().enumerate() {
                let prod = alg.mul(a, b)?;
                match index_of(&prod) {
                    Some(k) => table[i * n + j] = k,
                    None => {
                        return Err(Error::NotAGroup(format!(
                            "set not closed: {} · {}",
                            alg.describe(a),
                            alg.describe(b)
                        )))
                    }
                }
            }
        }
        let identity = identity.ok_or_else(|| Error::NotAGroup("unit missing".into()))?;
        // every row must be a permutation (gives inverses in a finite monoid)
        for i in 0..n {
            let mut seen = vec![false; n];
            for j in 0..n {
                seen[table[i * n + j]] = true;
            }
            if seen.iter().any(|s| !s) {
                return Err(Error::NotAGroup(format!(
                    "no inverse for {}",
                    alg.describe(&elements[i])
                )));
            }
        }
        Ok(ElementGroup { elements, table, identity })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn mul_index(&self, i: usize, j: usize) -> usize {
        self.table[i * self.elements.len() + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::Hopf;

    fn f3() -> Field {
        Field::prime(3).unwrap()
    }

    /// Dual numbers k[h]/(h²) as a bare algebra.
    pub(crate) fn dual_numbers(field: &Field) -> Algebra {
        let z = field.zero();
        let o = field.one();
        Algebra::new(
            field.clone(),
            vec!["1".into(), "h".into()],
            vec![
                vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
                vec![vec![z.clone(), o.clone()], vec![z.clone(), z.clone()]],
            ],
            vec![o.clone(), z.clone()],
        )
        .unwrap()
    }

    #[test]
    fn dual_number_products() {
        let e2 = dual_numbers(&f3());
        let h = e2.basis_element(1);
        assert!(e2.is_zero(&e2.mul(&h, &h).unwrap()));
        assert!(e2.check_axioms().is_ok());
    }

    #[test]
    fn sweedler_products() {
        let h4 = Hopf::sweedler(f3()).unwrap();
        let alg = h4.algebra();
        let g = alg.basis_element(1);
        let h = alg.basis_element(2);
        let gh = alg.basis_element(3);
        assert_eq!(alg.mul(&g, &g).unwrap(), alg.unit());
        assert!(alg.is_zero(&alg.mul(&h, &h).unwrap()));
        // gh·gh = 0: expand with hg = −gh and h² = 0
        assert!(alg.is_zero(&alg.mul(&gh, &gh).unwrap()));
        // hg = −gh
        assert_eq!(alg.mul(&h, &g).unwrap(), alg.scale(&gh, &alg.field().from_int(-1)));
    }

    #[test]
    fn corrupted_unit_reported() {
        let field = f3();
        let z = field.zero();
        let o = field.one();
        // E₂ data but with unit vector claimed to be h
        let bad = Algebra::new(
            field.clone(),
            vec!["1".into(), "h".into()],
            vec![
                vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
                vec![vec![z.clone(), o.clone()], vec![z.clone(), z.clone()]],
            ],
            vec![z.clone(), o.clone()],
        )
        .unwrap();
        let report = bad.check_axioms();
        assert!(!report.is_ok());
        assert_eq!(report.failures[0].axiom, "unit law");
        assert!(report.failures[0].witness.contains('1'));
    }

    #[test]
    fn tensor_shapes_and_axioms() {
        let f = f3();
        let e2 = dual_numbers(&f);
        let k = Algebra::ground(f.clone());
        let t = k.tensor(&e2).unwrap();
        assert_eq!(t.dim(), 2);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(t.product_of_basis(i, j), e2.product_of_basis(i, j));
            }
        }
        let h4 = Hopf::sweedler(f.clone()).unwrap();
        let big = e2.tensor(h4.algebra()).unwrap();
        assert_eq!(big.dim(), 8);
        assert!(big.check_axioms().is_ok());
        // unit = (1,0)⊗(1,0,0,0)
        let mut expect = vec![f.zero(); 8];
        expect[0] = f.one();
        assert_eq!(big.unit_coords(), &expect[..]);
    }

    #[test]
    fn inverse_in_dual_numbers() {
        let f = f3();
        let e2 = dual_numbers(&f);
        // (1+h)(1+2h) = 1 + 3h + 2h² = 1
        let x = e2.element(vec![f.one(), f.one()]);
        let inv = e2.try_inverse(&x).unwrap();
        assert_eq!(inv, e2.element(vec![f.from_int(1), f.from_int(2)]));
        assert!(e2.is_unit_element(&e2.mul(&x, &inv).unwrap()));
        // h is a zero divisor
        let h = e2.basis_element(1);
        assert_eq!(e2.try_inverse(&h), Err(Error::NotInvertible));
        assert_eq!(e2.try_inverse(&e2.unit()).unwrap(), e2.unit());
    }

    #[test]
    fn parent_mismatch_detected() {
        let f = f3();
        let e2 = dual_numbers(&f);
        let k = Algebra::ground(f);
        let a = e2.unit();
        let b = k.unit();
        assert_eq!(e2.mul(&a, &b), Err(Error::ParentMismatch));
    }

    #[test]
    fn enumeration_counts() {
        let f = f3();
        let e2 = dual_numbers(&f);
        let limits = Limits::default();
        let all: Vec<_> = e2.enumerate(None, &limits).unwrap().collect();
        assert_eq!(all.len(), 9);
        let units = e2.units(&limits).unwrap();
        // α + βh invertible iff α ≠ 0: 2·3 = 6
        assert_eq!(units.len(), 6);
        for u in &units {
            assert!(e2.is_invertible(u));
        }
        // budget failure is pre-flight
        assert!(matches!(
            e2.enumerate(None, &Limits::with_budget(5)),
            Err(Error::EnumerationOverBudget { .. })
        ));
    }

    #[test]
    fn constrained_enumeration() {
        // E₂⊗H₄ over 𝔽₃ restricted to the slice (id⊗ε)(X) = 1: two scalar
        // constraints on eight coordinates leave 3⁶ = 729 points
        let f = f3();
        let e2 = dual_numbers(&f);
        let h4 = Hopf::sweedler(f.clone()).unwrap();
        let level1 = e2.tensor(h4.algebra()).unwrap();
        let id_eps = Matrix::identity(&f, 2).kron(&f, h4.counit());
        let space = AffineSpace::solve(&f, &id_eps, &[f.one(), f.zero()])
            .unwrap()
            .unwrap();
        assert_eq!(space.dim(), 6);
        let slice: Vec<_> = level1.enumerate(Some(&space), &Limits::default()).unwrap().collect();
        assert_eq!(slice.len(), 729);
        for x in &slice {
            assert_eq!(id_eps.apply(&f, &x.coords), vec![f.one(), f.zero()]);
        }
    }

    #[test]
    fn units_match_generic_inverse_filter() {
        // two routes to the unit count: the fast scan and the generic
        // element-by-element inverse test
        let f = f3();
        let h4 = Hopf::sweedler(f).unwrap();
        let alg = h4.algebra();
        let limits = Limits::default();
        let fast = alg.units(&limits).unwrap();
        let slow: Vec<Element> = alg
            .enumerate(None, &limits)
            .unwrap()
            .filter(|e| alg.try_inverse(e).is_ok())
            .collect();
        assert_eq!(fast, slow);
        assert_eq!(fast.len(), 36);
    }

    #[test]
    fn unit_group_closes() {
        let f = f3();
        let e2 = dual_numbers(&f);
        let units = e2.units(&Limits::default()).unwrap();
        let group = ElementGroup::close(&e2, units).unwrap();
        assert_eq!(group.order(), 6);
        let id = group.identity;
        for i in 0..group.order() {
            assert_eq!(group.mul_index(id, i), i);
        }
    }
}
