//! Deterministic result reports: one JSON/text document per command,
//! byte-identical for identical inputs regardless of worker count.
//! Timing is emitted only on request so that default reports stay
//! reproducible.

use serde::Serialize;

use crate::algebra::Element;
use crate::matrix::Matrix;
use crate::specfile::ScalarRepr;

pub fn element_repr(e: &Element) -> Vec<ScalarRepr> {
    e.coords.iter().map(ScalarRepr::from_scalar).collect()
}

pub fn matrix_repr(m: &Matrix) -> Vec<Vec<ScalarRepr>> {
    (0..m.rows)
        .map(|i| m.row(i).iter().map(ScalarRepr::from_scalar).collect())
        .collect()
}

/// 64-bit FNV-1a, as a 16-digit hex string.
pub fn content_hash(bytes: &[u8]) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{h:016x}")
}

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub hash: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomSuite {
    pub name: String,
    pub checked: Vec<String>,
    pub failures: Vec<AxiomFailureOut>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomFailureOut {
    pub axiom: String,
    pub witness: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitOut {
    pub representative: Vec<ScalarRepr>,
    pub size: usize,
    pub members: Vec<Vec<ScalarRepr>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<Vec<ScalarRepr>>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TorsorClassOut {
    pub cocycle: Vec<ScalarRepr>,
    pub coaction: Vec<Vec<ScalarRepr>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionOut {
    pub id: usize,
    pub label: String,
    pub expected: String,
    pub computed: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Body {
    Check {
        ok: bool,
        suites: Vec<AxiomSuite>,
    },
    H0 {
        order: usize,
        elements: Vec<Vec<ScalarRepr>>,
    },
    Z1 {
        count: usize,
        cocycles: Vec<Vec<ScalarRepr>>,
    },
    H1 {
        classes: usize,
        orbits: Vec<OrbitOut>,
    },
    Torsors {
        classes: usize,
        representatives: Vec<TorsorClassOut>,
        witnesses_verified: bool,
        pairwise_distinct: bool,
    },
    CompareGroup {
        verified: bool,
        h0_equal: bool,
        h1_bijective: bool,
        hopf_h1_classes: usize,
        group_h1_classes: usize,
        pairing: Vec<usize>,
        bridge_checks: Vec<NamedCheck>,
    },
    CompareRestricted {
        verified: bool,
        intertwining_ok: bool,
        h0_equal: bool,
        z1_matched: bool,
        h1_bijective: bool,
        general_h1_classes: usize,
        restricted_h1_classes: usize,
        pairing: Vec<usize>,
    },
    ExactSequence {
        exact: bool,
        term_sizes: Vec<TermSize>,
        nodes: Vec<NamedCheck>,
        normality: Vec<Option<bool>>,
        six_term_checked: bool,
        connecting_classes: Vec<usize>,
    },
    BridgeTorsors {
        verified: bool,
        hopf_classes: usize,
        classical_classes: usize,
        pairing: Vec<usize>,
        torsor_axioms_ok: bool,
        twisted_action_ok: bool,
    },
    Examples {
        all_passed: bool,
        rows: Vec<CriterionOut>,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct NamedCheck {
    pub name: String,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TermSize {
    pub term: String,
    pub size: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    #[serde(flatten)]
    pub body: Body,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let push = |out: &mut String, line: String| {
            out.push_str(&line);
            out.push('\n');
        };
        push(&mut out, format!("command: {}", self.command.join(" ")));
        for input in &self.inputs {
            push(&mut out, format!("input: {} ({})", input.path, input.hash));
        }
        match &self.body {
            Body::Check { ok, suites } => {
                for suite in suites {
                    if suite.failures.is_empty() {
                        push(
                            &mut out,
                            format!("{}: ok ({} axioms)", suite.name, suite.checked.len()),
                        );
                    } else {
                        for f in &suite.failures {
                            push(
                                &mut out,
                                format!("{}: FAIL {} at {}", suite.name, f.axiom, f.witness),
                            );
                        }
                    }
                }
                push(&mut out, format!("verdict: {}", if *ok { "ok" } else { "FAIL" }));
            }
            Body::H0 { order, elements } => {
                push(&mut out, format!("H0 order: {order}"));
                for e in elements {
                    push(&mut out, format!("  {}", repr_row(e)));
                }
            }
            Body::Z1 { count, cocycles } => {
                push(&mut out, format!("Z1 count: {count}"));
                for c in cocycles {
                    push(&mut out, format!("  {}", repr_row(c)));
                }
            }
            Body::H1 { classes, orbits } => {
                push(&mut out, format!("H1 classes: {classes}"));
                for (i, orbit) in orbits.iter().enumerate() {
                    push(
                        &mut out,
                        format!(
                            "  class {i}{}: representative {}, orbit size {}",
                            if i == 0 { " (distinguished)" } else { "" },
                            repr_row(&orbit.representative),
                            orbit.size
                        ),
                    );
                    if let Some(witnesses) = &orbit.witnesses {
                        for (m, w) in orbit.members.iter().zip(witnesses) {
                            push(
                                &mut out,
                                format!("    member {} via {}", repr_row(m), repr_row(w)),
                            );
                        }
                    }
                }
            }
            Body::Torsors { classes, representatives, witnesses_verified, pairwise_distinct } => {
                push(&mut out, format!("torsor classes: {classes}"));
                for (i, rep) in representatives.iter().enumerate() {
                    push(&mut out, format!("  class {i}: cocycle {}", repr_row(&rep.cocycle)));
                }
                push(&mut out, format!("witnesses verified: {witnesses_verified}"));
                push(&mut out, format!("pairwise distinct: {pairwise_distinct}"));
            }
            Body::CompareGroup {
                verified,
                h0_equal,
                h1_bijective,
                hopf_h1_classes,
                group_h1_classes,
                pairing,
                bridge_checks,
            } => {
                for check in bridge_checks {
                    push(&mut out, format!("  {}: {}", check.name, verdict(check.ok)));
                }
                push(&mut out, format!("H0 sets equal: {h0_equal}"));
                push(
                    &mut out,
                    format!(
                        "H1 classes: {hopf_h1_classes} (Hopf side) vs {group_h1_classes} (group side)"
                    ),
                );
                push(&mut out, format!("pairing: {pairing:?}"));
                push(&mut out, format!("H1 pairing bijective: {h1_bijective}"));
                push(&mut out, format!("verdict: {}", verdict(*verified)));
            }
            Body::CompareRestricted {
                verified,
                intertwining_ok,
                h0_equal,
                z1_matched,
                h1_bijective,
                general_h1_classes,
                restricted_h1_classes,
                pairing,
            } => {
                push(&mut out, format!("intertwining identities: {}", verdict(*intertwining_ok)));
                push(&mut out, format!("H0 sets equal: {h0_equal}"));
                push(&mut out, format!("Z1 matched through the comparison map: {z1_matched}"));
                push(
                    &mut out,
                    format!(
                        "H1 classes: {general_h1_classes} (general) vs {restricted_h1_classes} (restricted)"
                    ),
                );
                push(&mut out, format!("pairing: {pairing:?}"));
                push(&mut out, format!("H1 pairing bijective: {h1_bijective}"));
                push(&mut out, format!("verdict: {}", verdict(*verified)));
            }
            Body::ExactSequence {
                exact,
                term_sizes,
                nodes,
                normality,
                six_term_checked,
                connecting_classes,
            } => {
                let sizes: Vec<String> = term_sizes
                    .iter()
                    .map(|t| format!("{} = {}", t.term, t.size))
                    .collect();
                push(&mut out, format!("terms: {}", sizes.join(", ")));
                for node in nodes {
                    push(&mut out, format!("exact at {}: {}", node.name, verdict(node.ok)));
                }
                push(&mut out, format!("normality by level: {normality:?}"));
                push(&mut out, format!("six-term extension checked: {six_term_checked}"));
                push(&mut out, format!("connecting classes: {connecting_classes:?}"));
                push(&mut out, format!("verdict: {}", verdict(*exact)));
            }
            Body::BridgeTorsors {
                verified,
                hopf_classes,
                classical_classes,
                pairing,
                torsor_axioms_ok,
                twisted_action_ok,
            } => {
                push(
                    &mut out,
                    format!("classes: {hopf_classes} (Hopf) vs {classical_classes} (classical)"),
                );
                push(&mut out, format!("pairing: {pairing:?}"));
                push(&mut out, format!("torsor axioms: {}", verdict(*torsor_axioms_ok)));
                push(&mut out, format!("twisted action law: {}", verdict(*twisted_action_ok)));
                push(&mut out, format!("verdict: {}", verdict(*verified)));
            }
            Body::Examples { all_passed, rows } => {
                for row in rows {
                    let timing = row
                        .elapsed_ms
                        .map(|ms| format!(" [{ms} ms]"))
                        .unwrap_or_default();
                    push(
                        &mut out,
                        format!(
                            "{:>2}. {:<58} {}{}",
                            row.id,
                            row.label,
                            if row.passed { "PASS" } else { "FAIL" },
                            timing
                        ),
                    );
                    push(&mut out, format!("      expected: {}", row.expected));
                    push(&mut out, format!("      computed: {}", row.computed));
                }
                push(&mut out, format!("verdict: {}", verdict(*all_passed)));
            }
        }
        if let Some(ms) = self.timing_ms {
            push(&mut out, format!("timing_ms: {ms}"));
        }
        out
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn repr_row(v: &[ScalarRepr]) -> String {
    let parts: Vec<String> = v
        .iter()
        .map(|r| match r {
            ScalarRepr::Int(x) => x.to_string(),
            ScalarRepr::Text(t) => t.clone(),
        })
        .collect();
    format!("({})", parts.join(", "))
}
