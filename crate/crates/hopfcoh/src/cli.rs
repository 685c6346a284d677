//! Command-line interface: loads structure-constant spec files, runs the
//! requested computation, and writes a deterministic report.
//!
//! Exit codes: 0 success/verified, 1 verification mismatch, 2 usage or
//! parse error, 3 enumeration budget exceeded.

use std::path::{Path, PathBuf};
use std::time::Instant;

use crate::cohomology::{self, Cohomology, Diagram, Inclusion, SubalgebraSequence};
use crate::enumerate::{Limits, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::groupcoh;
use crate::matrix::Matrix;
use crate::report::{
    element_repr, matrix_repr, AxiomFailureOut, AxiomSuite, Body, CriterionOut, InputDigest,
    NamedCheck, OrbitOut, Report, TermSize, TorsorClassOut,
};
use crate::specfile::{self, ScalarRepr};
use crate::suite;
use crate::torsor;

const USAGE: &str = "\
hopfcoh — exact non-abelian cohomology of Hopf comodule algebras

USAGE:
    hopfcoh <SUBCOMMAND> [ARGS] [FLAGS]

SUBCOMMANDS:
    check <spec>                        run every applicable axiom suite
    h0 <spec>                           invertible coinvariants of the comodule algebra
    z1 <spec>                           Hopf 1-cocycles
    h1 <spec> [--witnesses]             cocycle orbits (the 1-cohomology set)
    torsors <spec>                      torsor classes with representative coactions
    compare-group <spec>                match with group cohomology over a function algebra
    compare-restricted <spec>           match with the restricted theory of a Hopf module
    exact-seq <specD> <specE> --incl <matrix-file>
                                        cohomology sequence of an inclusion D ↪ E
    bridge-torsors <spec>               match with classical group torsors
    paper-examples                      run the built-in verification suite

FLAGS:
    --budget <N>       enumeration cap in candidates (default 10^7,
                       or the HOPFCOH_BUDGET environment variable)
    --threads <N>      worker count for enumeration scans (default 1)
    --format <F>       report format: text (default) or json
    --out <PATH>       write the report to a file instead of stdout
    --emit-timing      include wall-clock timing in the report body
    --witnesses        include orbit members and witnesses (h1 only)

A spec file computes over its comodule block when present, otherwise
over its Hopf algebra as a comodule over itself.
";

#[derive(Debug, Clone, Copy, PartialEq)]
enum Format {
    Text,
    Json,
}

#[derive(Debug)]
struct Options {
    limits: Limits,
    format: Format,
    out: Option<PathBuf>,
    emit_timing: bool,
    witnesses: bool,
    incl: Option<PathBuf>,
    positional: Vec<String>,
}

fn parse_args(args: &[String]) -> Result<(String, Options)> {
    if args.is_empty() {
        return Err(Error::Usage("missing subcommand".into()));
    }
    let subcommand = args[0].clone();
    let mut options = Options {
        limits: Limits {
            budget: std::env::var("HOPFCOH_BUDGET")
                .ok()
                .and_then(|v| v.parse().ok())
                .unwrap_or(DEFAULT_BUDGET),
            threads: 1,
        },
        format: Format::Text,
        out: None,
        emit_timing: false,
        witnesses: false,
        incl: None,
        positional: Vec::new(),
    };
    let mut iter = args[1..].iter();
    while let Some(arg) = iter.next() {
        let mut take = |name: &str| -> Result<String> {
            iter.next()
                .cloned()
                .ok_or_else(|| Error::Usage(format!("{name} needs a value")))
        };
        match arg.as_str() {
            "--budget" => {
                options.limits.budget = take("--budget")?
                    .parse()
                    .map_err(|_| Error::Usage("--budget needs an integer".into()))?;
            }
            "--threads" => {
                options.limits.threads = take("--threads")?
                    .parse()
                    .map_err(|_| Error::Usage("--threads needs an integer".into()))?;
                if options.limits.threads == 0 {
                    return Err(Error::Usage("--threads must be positive".into()));
                }
            }
            "--format" => {
                options.format = match take("--format")?.as_str() {
                    "text" => Format::Text,
                    "json" => Format::Json,
                    other => return Err(Error::Usage(format!("unknown format \"{other}\""))),
                };
            }
            "--out" => options.out = Some(PathBuf::from(take("--out")?)),
            "--emit-timing" => options.emit_timing = true,
            "--witnesses" => options.witnesses = true,
            "--incl" => options.incl = Some(PathBuf::from(take("--incl")?)),
            other if other.starts_with("--") => {
                return Err(Error::Usage(format!("unknown flag \"{other}\"")));
            }
            other => options.positional.push(other.to_string()),
        }
    }
    Ok((subcommand, options))
}

fn digest(path: &Path) -> Result<InputDigest> {
    let bytes = std::fs::read(path)?;
    Ok(InputDigest {
        path: path.display().to_string(),
        hash: crate::report::content_hash(&bytes),
    })
}

fn spec_arg(options: &Options, index: usize) -> Result<PathBuf> {
    options
        .positional
        .get(index)
        .map(PathBuf::from)
        .ok_or_else(|| Error::Usage("missing spec file argument".into()))
}

/// Reads an inclusion matrix file: a JSON array of rows of scalars.
fn read_inclusion_matrix(
    path: &Path,
    field: &crate::field::Field,
    rows: usize,
    cols: usize,
) -> Result<Matrix> {
    let text = std::fs::read_to_string(path)?;
    let raw: Vec<Vec<ScalarRepr>> = serde_json::from_str(&text).map_err(|e| Error::ParseError {
        line: e.line(),
        col: e.column(),
        msg: e.to_string(),
    })?;
    if raw.len() != rows {
        return Err(Error::DimensionError(format!(
            "inclusion matrix: expected {rows} rows, found {}",
            raw.len()
        )));
    }
    let mut out = Vec::with_capacity(rows);
    for row in &raw {
        if row.len() != cols {
            return Err(Error::DimensionError(format!(
                "inclusion matrix: expected {cols} columns, found {}",
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

fn execute(subcommand: &str, options: &Options) -> Result<(Body, Vec<InputDigest>, bool)> {
    let limits = &options.limits;
    match subcommand {
        "check" => {
            let path = spec_arg(options, 0)?;
            let inputs = vec![digest(&path)?];
            let loaded = specfile::load_unchecked(&path)?;
            let suites: Vec<AxiomSuite> = loaded
                .check_all()
                .into_iter()
                .map(|(name, report)| AxiomSuite {
                    name,
                    checked: report.checked.clone(),
                    failures: report
                        .failures
                        .iter()
                        .map(|f| AxiomFailureOut {
                            axiom: f.axiom.clone(),
                            witness: f.witness.clone(),
                        })
                        .collect(),
                })
                .collect();
            let ok = suites.iter().all(|s| s.failures.is_empty());
            Ok((Body::Check { ok, suites }, inputs, ok))
        }
        "h0" => {
            let path = spec_arg(options, 0)?;
            let inputs = vec![digest(&path)?];
            let loaded = specfile::load(&path)?;
            let diagram = Diagram::build(loaded.resolve_comodule()?)?;
            let h0 = cohomology::h0(&diagram, limits)?;
            let elements = h0.elements.iter().map(element_repr).collect();
            Ok((Body::H0 { order: h0.order(), elements }, inputs, true))
        }
        "z1" => {
            let path = spec_arg(options, 0)?;
            let inputs = vec![digest(&path)?];
            let loaded = specfile::load(&path)?;
            let diagram = Diagram::build(loaded.resolve_comodule()?)?;
            let z1 = cohomology::z1(&diagram, limits)?;
            let cocycles = z1.iter().map(element_repr).collect();
            Ok((Body::Z1 { count: z1.len(), cocycles }, inputs, true))
        }
        "h1" => {
            let path = spec_arg(options, 0)?;
            let inputs = vec![digest(&path)?];
            let loaded = specfile::load(&path)?;
            let diagram = Diagram::build(loaded.resolve_comodule()?)?;
            let coh = Cohomology::compute(&diagram, limits)?;
            let orbits = coh
                .h1
                .orbits
                .iter()
                .map(|o| OrbitOut {
                    representative: element_repr(&o.representative),
                    size: o.members.len(),
                    members: o.members.iter().map(element_repr).collect(),
                    witnesses: options
                        .witnesses
                        .then(|| o.witnesses.iter().map(element_repr).collect()),
                })
                .collect();
            Ok((Body::H1 { classes: coh.h1.class_count(), orbits }, inputs, true))
        }
        "torsors" => {
            let path = spec_arg(options, 0)?;
            let inputs = vec![digest(&path)?];
            let loaded = specfile::load(&path)?;
            let diagram = Diagram::build(loaded.resolve_comodule()?)?;
            let result = torsor::classify(&diagram, limits)?;
            let representatives = result
                .classes
                .iter()
                .map(|c| TorsorClassOut {
                    cocycle: element_repr(&c.cocycle),
                    coaction: matrix_repr(&c.module.coaction),
                })
                .collect();
            let verified = result.witnesses_verified && result.pairwise_distinct;
            Ok((
                Body::Torsors {
                    classes: result.class_count(),
                    representatives,
                    witnesses_verified: result.witnesses_verified,
                    pairwise_distinct: result.pairwise_distinct,
                },
                inputs,
                verified,
            ))
        }
        "compare-group" => {
            let path = spec_arg(options, 0)?;
            let inputs = vec![digest(&path)?];
            let loaded = specfile::load(&path)?;
            let comod = loaded.resolve_comodule()?;
            let cmp = groupcoh::compare_group_cohomology(&comod, limits)?;
            let verified = cmp.verified();
            Ok((
                Body::CompareGroup {
                    verified,
                    h0_equal: cmp.h0_equal,
                    h1_bijective: cmp.h1_bijective,
                    hopf_h1_classes: cmp.hopf.h1.class_count(),
                    group_h1_classes: cmp.group.h1.class_count(),
                    pairing: cmp.pairing.clone(),
                    bridge_checks: cmp
                        .bridge
                        .checks
                        .iter()
                        .map(|(name, ok)| NamedCheck { name: name.clone(), ok: *ok })
                        .collect(),
                },
                inputs,
                verified,
            ))
        }
        "compare-restricted" => {
            let path = spec_arg(options, 0)?;
            let inputs = vec![digest(&path)?];
            let loaded = specfile::load(&path)?;
            let module = loaded.resolve_module()?;
            let cmp = crate::restricted::compare_restricted(&module, limits)?;
            let verified = cmp.verified();
            Ok((
                Body::CompareRestricted {
                    verified,
                    intertwining_ok: cmp.intertwining_ok,
                    h0_equal: cmp.h0_equal,
                    z1_matched: cmp.z1_matched,
                    h1_bijective: cmp.h1_bijective,
                    general_h1_classes: cmp.general.h1.class_count(),
                    restricted_h1_classes: cmp.restricted.h1.class_count(),
                    pairing: cmp.pairing.clone(),
                },
                inputs,
                verified,
            ))
        }
        "exact-seq" => {
            let sub_path = spec_arg(options, 0)?;
            let ambient_path = spec_arg(options, 1)?;
            let incl_path = options
                .incl
                .clone()
                .ok_or_else(|| Error::Usage("exact-seq needs --incl <matrix-file>".into()))?;
            let inputs = vec![digest(&sub_path)?, digest(&ambient_path)?, digest(&incl_path)?];
            let sub = specfile::load(&sub_path)?.resolve_comodule()?;
            let ambient = specfile::load(&ambient_path)?.resolve_comodule()?;
            let matrix = read_inclusion_matrix(
                &incl_path,
                ambient.field(),
                ambient.alg.dim(),
                sub.alg.dim(),
            )?;
            let incl = Inclusion::new(sub, ambient, matrix)?;
            let seq = SubalgebraSequence::build(incl, limits)?;
            let report = seq.verify(limits)?;
            let verified = report.is_exact();
            Ok((
                Body::ExactSequence {
                    exact: verified,
                    term_sizes: report
                        .term_sizes
                        .iter()
                        .map(|(term, size)| TermSize { term: term.clone(), size: *size })
                        .collect(),
                    nodes: report
                        .nodes
                        .iter()
                        .map(|(name, ok)| NamedCheck { name: name.clone(), ok: *ok })
                        .collect(),
                    normality: report.normality.to_vec(),
                    six_term_checked: report.six_term_checked,
                    connecting_classes: report.connecting_classes.clone(),
                },
                inputs,
                verified,
            ))
        }
        "bridge-torsors" => {
            let path = spec_arg(options, 0)?;
            let inputs = vec![digest(&path)?];
            let loaded = specfile::load(&path)?;
            let comod = loaded.resolve_comodule()?;
            let bridge = torsor::group_torsor_bridge(&comod, limits)?;
            let verified = bridge.verified();
            Ok((
                Body::BridgeTorsors {
                    verified,
                    hopf_classes: bridge.hopf_classes,
                    classical_classes: bridge.classical_classes,
                    pairing: bridge.pairing.clone(),
                    torsor_axioms_ok: bridge.torsor_axioms_ok,
                    twisted_action_ok: bridge.twisted_action_ok,
                },
                inputs,
                verified,
            ))
        }
        "paper-examples" => {
            let rows = suite::run_all(limits)?;
            let all_passed = rows.iter().all(|r| r.passed);
            let out_rows = rows
                .iter()
                .map(|r| CriterionOut {
                    id: r.id,
                    label: r.label.clone(),
                    expected: r.expected.clone(),
                    computed: r.computed.clone(),
                    passed: r.passed,
                    elapsed_ms: options.emit_timing.then_some(r.elapsed_ms),
                })
                .collect();
            Ok((Body::Examples { all_passed, rows: out_rows }, Vec::new(), all_passed))
        }
        other => Err(Error::Usage(format!("unknown subcommand \"{other}\""))),
    }
}

fn exit_code_for(error: &Error) -> i32 {
    match error {
        Error::Usage(_)
        | Error::ParseError { .. }
        | Error::DimensionError(_)
        | Error::DimensionMismatch(_)
        | Error::Io(_)
        | Error::NotPrime(_)
        | Error::NotAGroup(_)
        | Error::NotASubgroup(_)
        | Error::NotInjective
        | Error::NotAMorphism(_) => 2,
        Error::EnumerationOverBudget { .. }
        | Error::RationalFieldNotEnumerable
        | Error::PrimeTooLargeForEnumeration(_) => 3,
        _ => 1,
    }
}

/// Runs a command and returns `(exit code, rendered report)` without
/// touching stdout; errors render as an empty report string.
pub fn run_capture(args: &[String]) -> (i32, String) {
    let start = Instant::now();
    let (subcommand, options) = match parse_args(args) {
        Ok(parsed) => parsed,
        Err(e) => {
            eprintln!("error: {e}");
            eprintln!("{USAGE}");
            return (2, String::new());
        }
    };
    if subcommand == "help" || subcommand == "--help" {
        return (0, USAGE.to_string());
    }
    match execute(&subcommand, &options) {
        Ok((body, inputs, verified)) => {
            let mut command = vec![subcommand];
            command.extend(options.positional.iter().cloned());
            let report = Report {
                command,
                inputs,
                body,
                timing_ms: options
                    .emit_timing
                    .then(|| start.elapsed().as_millis()),
            };
            let rendered = match options.format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            eprintln!("elapsed: {} ms", start.elapsed().as_millis());
            let code = if verified { 0 } else { 1 };
            if let Some(path) = &options.out {
                if let Err(e) = std::fs::write(path, &rendered) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return (2, rendered);
                }
            }
            (code, rendered)
        }
        Err(e) => {
            eprintln!("error: {e}");
            (exit_code_for(&e), String::new())
        }
    }
}

/// Entry point used by the binary: prints the report to stdout unless
/// `--out` was given.
pub fn run(args: &[String]) -> i32 {
    let wants_out = args.windows(2).any(|w| w[0] == "--out");
    let (code, rendered) = run_capture(args);
    if !rendered.is_empty() && !wants_out {
        print!("{rendered}");
    }
    code
}
