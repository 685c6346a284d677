//! Structure-constant spec files: a JSON format describing a field, an
//! algebra, and optionally Hopf, comodule, and module blocks.
//!
//! Prime-field scalars are plain integers in `[0, p)`; rationals are
//! reduced-fraction strings `"a/b"` (or `"a"` when the denominator is 1).
//! Matrices are row-major nested arrays. Serialization is canonical:
//! parsing a file produced by [`to_canonical_json`] and re-serializing it
//! reproduces the bytes exactly, and every loaded structure passes its
//! axiom checker.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, AxiomReport};
use crate::comodule::{ComoduleAlgebra, HopfModule};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::hopf::Hopf;
use crate::matrix::Matrix;

/// One exact scalar in a file: an integer residue or a fraction string.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarRepr {
    Int(u64),
    Text(String),
}

impl ScalarRepr {
    pub fn from_scalar(s: &Scalar) -> ScalarRepr {
        match s {
            Scalar::Fp(v) => ScalarRepr::Int(*v),
            Scalar::Q(_) => ScalarRepr::Text(s.to_string()),
        }
    }

    pub fn to_scalar(&self, field: &Field) -> Result<Scalar> {
        let parsed = match (self, field) {
            (ScalarRepr::Int(v), Field::Prime(_)) => Scalar::Fp(*v),
            (ScalarRepr::Int(v), Field::Rational) => {
                field.from_int(i64::try_from(*v).map_err(|_| {
                    Error::DimensionError("integer too large for a rational literal".into())
                })?)
            }
            (ScalarRepr::Text(t), Field::Rational) => parse_fraction(field, t)?,
            (ScalarRepr::Text(t), Field::Prime(_)) => {
                return Err(Error::DimensionError(format!(
                    "prime-field scalar must be an integer, found \"{t}\""
                )))
            }
        };
        if !field.validate(&parsed) {
            return Err(Error::DimensionError(format!(
                "scalar {parsed} is not in canonical form for the field"
            )));
        }
        Ok(parsed)
    }
}

fn parse_fraction(field: &Field, text: &str) -> Result<Scalar> {
    let bad = || Error::DimensionError(format!("malformed rational \"{text}\""));
    match text.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            field.fraction(n, d)
        }
        None => {
            let n: i64 = text.trim().parse().map_err(|_| bad())?;
            Ok(field.from_int(n))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FieldBlock {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgebraBlock {
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<ScalarRepr>,
    pub mult: Vec<Vec<Vec<ScalarRepr>>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HopfBlock {
    pub comult: Vec<Vec<ScalarRepr>>,
    pub counit: Vec<Vec<ScalarRepr>>,
    pub antipode: Vec<Vec<ScalarRepr>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HopfRef {
    Path(String),
    Inline(Box<SpecDoc>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComoduleBlock {
    pub hopf: HopfRef,
    pub coaction: Vec<Vec<ScalarRepr>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModuleBlock {
    pub dim: usize,
    pub action: Vec<Vec<Vec<ScalarRepr>>>,
    pub coaction: Vec<Vec<ScalarRepr>>,
}

/// The parsed shape of a spec file, before semantic validation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpecDoc {
    pub field: FieldBlock,
    pub algebra: AlgebraBlock,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hopf: Option<HopfBlock>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comodule: Option<ComoduleBlock>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleBlock>,
}

/// Fully validated in-memory structures from one spec file.
pub struct LoadedSpec {
    pub field: Field,
    pub algebra: Algebra,
    pub hopf: Option<Hopf>,
    pub comodule: Option<ComoduleAlgebra>,
    pub module: Option<HopfModule>,
}

impl LoadedSpec {
    /// The comodule algebra a cohomology command should run on: the
    /// explicit comodule block if present, otherwise the Hopf algebra as
    /// a comodule over itself.
    pub fn resolve_comodule(&self) -> Result<ComoduleAlgebra> {
        if let Some(c) = &self.comodule {
            return Ok(c.clone());
        }
        if let Some(h) = &self.hopf {
            return Ok(ComoduleAlgebra::regular(h.clone()));
        }
        Err(Error::Usage(
            "spec defines neither a comodule nor a Hopf algebra".into(),
        ))
    }

    /// The Hopf module a restricted-cohomology command should run on: the
    /// explicit module block if present, otherwise the comodule algebra as
    /// a module over itself.
    pub fn resolve_module(&self) -> Result<HopfModule> {
        if let Some(m) = &self.module {
            return Ok(m.clone());
        }
        Ok(HopfModule::regular(self.resolve_comodule()?))
    }

    /// Runs every applicable axiom suite and returns named reports.
    pub fn check_all(&self) -> Vec<(String, AxiomReport)> {
        let mut out = vec![("algebra".to_string(), self.algebra.check_axioms())];
        if let Some(h) = &self.hopf {
            out.push(("hopf".to_string(), h.check_axioms()));
        }
        if let Some(c) = &self.comodule {
            out.push(("comodule".to_string(), c.check()));
        }
        if let Some(m) = &self.module {
            out.push(("module".to_string(), m.check()));
        }
        out
    }
}

fn parse_field(block: &FieldBlock) -> Result<Field> {
    match block.kind.as_str() {
        "prime" => {
            let p = block
                .p
                .ok_or_else(|| Error::DimensionError("prime field needs p".into()))?;
            Field::prime(p)
        }
        "rational" => Ok(Field::rational()),
        other => Err(Error::DimensionError(format!("unknown field type \"{other}\""))),
    }
}

fn parse_matrix(
    field: &Field,
    rows: &[Vec<ScalarRepr>],
    expect_rows: usize,
    expect_cols: usize,
    what: &str,
) -> Result<Matrix> {
    if rows.len() != expect_rows {
        return Err(Error::DimensionError(format!(
            "{what}: expected {expect_rows} rows, found {}",
            rows.len()
        )));
    }
    let mut out = Vec::with_capacity(expect_rows);
    for row in rows {
        if row.len() != expect_cols {
            return Err(Error::DimensionError(format!(
                "{what}: expected {expect_cols} columns, found {}",
                row.len()
            )));
        }
        out.push(
            row.iter()
                .map(|r| r.to_scalar(field))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    Matrix::from_rows(field, out)
}

fn parse_algebra(field: &Field, block: &AlgebraBlock) -> Result<Algebra> {
    let dim = block.dim;
    if block.basis.len() != dim {
        return Err(Error::DimensionError(format!(
            "algebra: {dim} basis labels expected, found {}",
            block.basis.len()
        )));
    }
    if block.unit.len() != dim {
        return Err(Error::DimensionError("algebra: unit vector arity".into()));
    }
    if block.mult.len() != dim {
        return Err(Error::DimensionError("algebra: mult array arity".into()));
    }
    let mut mult = Vec::with_capacity(dim);
    for (i, row) in block.mult.iter().enumerate() {
        if row.len() != dim {
            return Err(Error::DimensionError(format!("algebra: mult row {i} arity")));
        }
        let mut out_row = Vec::with_capacity(dim);
        for prod in row {
            if prod.len() != dim {
                return Err(Error::DimensionError(format!("algebra: mult entry arity in row {i}")));
            }
            out_row.push(
                prod.iter()
                    .map(|r| r.to_scalar(field))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        mult.push(out_row);
    }
    let unit = block
        .unit
        .iter()
        .map(|r| r.to_scalar(field))
        .collect::<Result<Vec<_>>>()?;
    Algebra::new(field.clone(), block.basis.clone(), mult, unit)
}

/// Parses a document into structures without enforcing the axiom suites;
/// shape and scalar canonicality are still validated.
pub fn realize(doc: &SpecDoc, base_dir: &Path) -> Result<LoadedSpec> {
    let field = parse_field(&doc.field)?;
    let algebra = parse_algebra(&field, &doc.algebra)?;
    let dim = algebra.dim();

    let hopf = match &doc.hopf {
        Some(h) => {
            let comult = parse_matrix(&field, &h.comult, dim * dim, dim, "comult")?;
            let counit = parse_matrix(&field, &h.counit, 1, dim, "counit")?;
            let antipode = parse_matrix(&field, &h.antipode, dim, dim, "antipode")?;
            Some(Hopf::new(algebra.clone(), comult, counit, antipode)?)
        }
        None => None,
    };

    let comodule = match &doc.comodule {
        Some(c) => {
            let base_hopf = match &c.hopf {
                HopfRef::Path(rel) => {
                    let path = base_dir.join(rel);
                    let loaded = load(&path)?;
                    loaded.hopf.ok_or_else(|| {
                        Error::DimensionError(format!(
                            "referenced spec {} has no hopf block",
                            path.display()
                        ))
                    })?
                }
                HopfRef::Inline(inner) => {
                    let loaded = realize(inner, base_dir)?;
                    loaded
                        .hopf
                        .ok_or_else(|| Error::DimensionError("inline hopf block missing".into()))?
                }
            };
            let dh = base_hopf.dim();
            let coaction = parse_matrix(&field, &c.coaction, dim * dh, dim, "coaction")?;
            Some(ComoduleAlgebra::new(base_hopf, algebra.clone(), coaction)?)
        }
        None => None,
    };

    let module = match &doc.module {
        Some(m) => {
            let comod = comodule
                .clone()
                .ok_or_else(|| Error::DimensionError("module block requires a comodule".into()))?;
            if m.action.len() != dim {
                return Err(Error::DimensionError(
                    "module: one action matrix per algebra basis element".into(),
                ));
            }
            let actions = m
                .action
                .iter()
                .map(|a| parse_matrix(&field, a, m.dim, m.dim, "module action"))
                .collect::<Result<Vec<_>>>()?;
            let dh = comod.hopf.dim();
            let coaction = parse_matrix(&field, &m.coaction, m.dim * dh, m.dim, "module coaction")?;
            Some(HopfModule::new(comod, m.dim, actions, coaction)?)
        }
        None => None,
    };

    Ok(LoadedSpec { field, algebra, hopf, comodule, module })
}

/// Parses text into a document; syntax errors carry line and column.
pub fn parse(text: &str) -> Result<SpecDoc> {
    serde_json::from_str(text).map_err(|e| Error::ParseError {
        line: e.line(),
        col: e.column(),
        msg: e.to_string(),
    })
}

/// Loads a spec file and enforces every applicable axiom suite.
pub fn load(path: &Path) -> Result<LoadedSpec> {
    let loaded = load_unchecked(path)?;
    for (name, report) in loaded.check_all() {
        if let Some(f) = report.failures.first() {
            return Err(Error::AxiomError {
                name: format!("{name}: {}", f.axiom),
                witness: f.witness.clone(),
            });
        }
    }
    Ok(loaded)
}

/// Loads a spec file with shape validation only (for `check`).
pub fn load_unchecked(path: &Path) -> Result<LoadedSpec> {
    let text = std::fs::read_to_string(path)?;
    let doc = parse(&text)?;
    let base = path.parent().map(PathBuf::from).unwrap_or_default();
    realize(&doc, &base)
}

/// Canonical serialization: pretty-printed JSON with a trailing newline.
pub fn to_canonical_json(doc: &SpecDoc) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("serializable");
    out.push('\n');
    out
}

fn scalar_row(v: &[Scalar]) -> Vec<ScalarRepr> {
    v.iter().map(ScalarRepr::from_scalar).collect()
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<ScalarRepr>> {
    (0..m.rows).map(|i| scalar_row(m.row(i))).collect()
}

fn field_block(field: &Field) -> FieldBlock {
    match field {
        Field::Prime(p) => FieldBlock { kind: "prime".into(), p: Some(*p) },
        Field::Rational => FieldBlock { kind: "rational".into(), p: None },
    }
}

fn algebra_block(alg: &Algebra) -> AlgebraBlock {
    let dim = alg.dim();
    AlgebraBlock {
        dim,
        basis: alg.labels().to_vec(),
        unit: scalar_row(alg.unit_coords()),
        mult: (0..dim)
            .map(|i| (0..dim).map(|j| scalar_row(&alg.product_of_basis(i, j))).collect())
            .collect(),
    }
}

/// Document describing a Hopf algebra.
pub fn doc_for_hopf(hopf: &Hopf) -> SpecDoc {
    SpecDoc {
        field: field_block(hopf.field()),
        algebra: algebra_block(hopf.algebra()),
        hopf: Some(HopfBlock {
            comult: matrix_rows(hopf.comult()),
            counit: matrix_rows(hopf.counit()),
            antipode: matrix_rows(hopf.antipode()),
        }),
        comodule: None,
        module: None,
    }
}

/// Document describing a comodule algebra, referencing its Hopf algebra
/// by relative path or embedding it inline.
pub fn doc_for_comodule(comod: &ComoduleAlgebra, hopf_ref: Option<String>) -> SpecDoc {
    let hopf = match hopf_ref {
        Some(path) => HopfRef::Path(path),
        None => HopfRef::Inline(Box::new(doc_for_hopf(&comod.hopf))),
    };
    SpecDoc {
        field: field_block(comod.field()),
        algebra: algebra_block(&comod.alg),
        hopf: None,
        comodule: Some(ComoduleBlock { hopf, coaction: matrix_rows(&comod.coaction) }),
        module: None,
    }
}

/// Document describing a Hopf module over its comodule algebra.
pub fn doc_for_module(module: &HopfModule, hopf_ref: Option<String>) -> SpecDoc {
    let mut doc = doc_for_comodule(&module.comod, hopf_ref);
    doc.module = Some(ModuleBlock {
        dim: module.dim,
        action: module.actions.iter().map(matrix_rows).collect(),
        coaction: matrix_rows(&module.coaction),
    });
    doc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    fn f3() -> Field {
        Field::prime(3).unwrap()
    }

    #[test]
    fn hopf_roundtrip() {
        let h4 = Hopf::sweedler(f3()).unwrap();
        let doc = doc_for_hopf(&h4);
        let text = to_canonical_json(&doc);
        let parsed = parse(&text).unwrap();
        assert_eq!(parsed, doc);
        assert_eq!(to_canonical_json(&parsed), text);
        let loaded = realize(&parsed, Path::new(".")).unwrap();
        assert!(loaded.hopf.unwrap().check_axioms().is_ok());
    }

    #[test]
    fn comodule_roundtrip_inline() {
        let comod = ComoduleAlgebra::dual_numbers(f3()).unwrap();
        let doc = doc_for_comodule(&comod, None);
        let text = to_canonical_json(&doc);
        let parsed = parse(&text).unwrap();
        assert_eq!(parsed, doc);
        let loaded = realize(&parsed, Path::new(".")).unwrap();
        let c = loaded.comodule.unwrap();
        assert!(c.check().is_ok());
        assert_eq!(c.coaction, comod.coaction);
    }

    #[test]
    fn module_roundtrip() {
        let comod = ComoduleAlgebra::dual_numbers(f3()).unwrap();
        let module = HopfModule::regular(comod);
        let doc = doc_for_module(&module, None);
        let parsed = parse(&to_canonical_json(&doc)).unwrap();
        let loaded = realize(&parsed, Path::new(".")).unwrap();
        let m = loaded.module.unwrap();
        assert!(m.check().is_ok());
        assert_eq!(m.actions, module.actions);
    }

    #[test]
    fn rational_scalars() {
        let q = Field::rational();
        let half = ScalarRepr::Text("1/2".into()).to_scalar(&q).unwrap();
        assert_eq!(half, q.fraction(1, 2).unwrap());
        let five = ScalarRepr::Text("5".into()).to_scalar(&q).unwrap();
        assert_eq!(five, q.from_int(5));
        assert_eq!(ScalarRepr::from_scalar(&half), ScalarRepr::Text("1/2".into()));
        assert!(ScalarRepr::Text("1/0".into()).to_scalar(&q).is_err());
        // non-canonical prime residue rejected
        assert!(ScalarRepr::Int(5).to_scalar(&f3()).is_err());
    }

    #[test]
    fn parse_errors_carry_location() {
        match parse("") {
            Err(Error::ParseError { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected parse error, got {:?}", other.is_ok()),
        }
        assert!(parse("{\"field\": }").is_err());
    }

    #[test]
    fn wrong_arity_is_dimension_error() {
        let kz2 = Hopf::function_algebra(&FiniteGroup::cyclic(2), f3()).unwrap();
        let mut doc = doc_for_hopf(&kz2);
        doc.algebra.mult[0].pop();
        match realize(&doc, Path::new(".")) {
            Err(Error::DimensionError(_)) => {}
            Err(other) => panic!("expected dimension error, got {other}"),
            Ok(_) => panic!("expected dimension error"),
        }
    }
}
