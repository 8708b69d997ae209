//! Report documents emitted by the CLI.
//!
//! The structured format is JSON with a fixed key order (struct declaration
//! order), integers never quoted, and explicit refusal markers for distances
//! that were not computed. Every document round-trips through serde. The
//! `timings` sections hold deterministic work counters, not wall-clock
//! times, so reports are byte-identical across runs and worker counts.

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use group_codes::lcp::{HatCounterexample, LcpReport, SweepSummary};
use group_codes::DistanceOutcome;

/// A distance that is either an exact integer or an explicit marker:
/// `"budget-exceeded"` for a refused enumeration, `"zero-code"` for the code
/// with no nonzero word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceValue {
    Exact(u64),
    BudgetExceeded,
    ZeroCode,
}

impl DistanceValue {
    pub fn render(&self) -> String {
        match self {
            DistanceValue::Exact(d) => d.to_string(),
            DistanceValue::BudgetExceeded => "budget-exceeded".to_string(),
            DistanceValue::ZeroCode => "zero-code".to_string(),
        }
    }
}

impl From<DistanceOutcome> for DistanceValue {
    fn from(value: DistanceOutcome) -> Self {
        match value {
            DistanceOutcome::Exact(d) => DistanceValue::Exact(d),
            DistanceOutcome::BudgetExceeded => DistanceValue::BudgetExceeded,
            DistanceOutcome::ZeroCode => DistanceValue::ZeroCode,
        }
    }
}

impl Serialize for DistanceValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            DistanceValue::Exact(d) => serializer.serialize_u64(*d),
            DistanceValue::BudgetExceeded => serializer.serialize_str("budget-exceeded"),
            DistanceValue::ZeroCode => serializer.serialize_str("zero-code"),
        }
    }
}

impl<'de> Deserialize<'de> for DistanceValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = DistanceValue;

            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("an integer or a refusal marker")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<DistanceValue, E> {
                Ok(DistanceValue::Exact(v))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<DistanceValue, E> {
                match v {
                    "budget-exceeded" => Ok(DistanceValue::BudgetExceeded),
                    "zero-code" => Ok(DistanceValue::ZeroCode),
                    other => Err(E::custom(format!("unknown distance marker '{other}'"))),
                }
            }
        }
        deserializer.deserialize_any(V)
    }
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct SidednessDoc {
    pub right: bool,
    pub left: bool,
    pub two_sided: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct AnalyzeInput {
    pub command: String,
    pub field: String,
    pub group: String,
    pub idempotent: String,
    pub mode: String,
    pub budget: u64,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct Verdicts {
    pub is_lcp: bool,
    pub e_idempotent: Option<bool>,
    pub e_central: Option<bool>,
    pub c_sidedness: SidednessDoc,
    pub d_sidedness: SidednessDoc,
    pub dual_formula_holds: Option<bool>,
    pub theorem_holds: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct IdempotentDoc {
    pub e: Option<String>,
    pub f: Option<String>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct Distances {
    pub dim_c: usize,
    pub dist_c: DistanceValue,
    pub dim_dperp: usize,
    pub dist_dperp: DistanceValue,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct Timings {
    pub codewords_enumerated: u64,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct AnalyzeDoc {
    pub input: AnalyzeInput,
    pub verdicts: Verdicts,
    pub idempotent: IdempotentDoc,
    pub distances: Distances,
    pub security_parameter: DistanceValue,
    pub timings: Timings,
}

impl AnalyzeDoc {
    pub fn from_report(input: AnalyzeInput, report: &LcpReport) -> AnalyzeDoc {
        AnalyzeDoc {
            input,
            verdicts: Verdicts {
                is_lcp: report.is_lcp,
                e_idempotent: report.e_idempotent,
                e_central: report.e_central,
                c_sidedness: SidednessDoc {
                    right: report.c_sidedness.right,
                    left: report.c_sidedness.left,
                    two_sided: report.c_sidedness.two_sided(),
                },
                d_sidedness: SidednessDoc {
                    right: report.d_sidedness.right,
                    left: report.d_sidedness.left,
                    two_sided: report.d_sidedness.two_sided(),
                },
                dual_formula_holds: report.dual_formula_holds,
                theorem_holds: report.theorem_holds,
            },
            idempotent: IdempotentDoc {
                e: report.e.as_ref().map(|e| e.to_string()),
                f: report.f.as_ref().map(|f| f.to_string()),
            },
            distances: Distances {
                dim_c: report.dim_c,
                dist_c: report.dist_c.into(),
                dim_dperp: report.dim_dperp,
                dist_dperp: report.dist_dperp.into(),
            },
            security_parameter: report.security_parameter.into(),
            timings: Timings {
                codewords_enumerated: report.codewords_enumerated,
            },
        }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct SweepInput {
    pub command: String,
    pub field: String,
    pub group: String,
    pub mode: String,
    pub budget: u64,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct SweepCounts {
    pub elements: u64,
    pub idempotents: usize,
    pub central_idempotents: usize,
    pub adjoint_dim_passes: usize,
    pub dual_formula_passes: usize,
    pub hat_equivalence_passes: usize,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct HatCexDoc {
    pub e: String,
    pub central: bool,
    pub subspace_equal: bool,
    pub dist_c: DistanceValue,
    pub dist_dperp: DistanceValue,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct CounterexampleDoc {
    pub adjoint_dim: Vec<String>,
    pub dual_formula: Vec<String>,
    pub hat_equivalence: Vec<HatCexDoc>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct SweepTimings {
    pub elements_enumerated: u64,
    pub codewords_enumerated: u64,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct SweepDoc {
    pub input: SweepInput,
    pub counts: SweepCounts,
    pub counterexamples: CounterexampleDoc,
    pub timings: SweepTimings,
}

impl SweepDoc {
    pub fn from_summary(input: SweepInput, summary: &SweepSummary) -> SweepDoc {
        SweepDoc {
            input,
            counts: SweepCounts {
                elements: summary.elements_enumerated,
                idempotents: summary.idempotents,
                central_idempotents: summary.central_idempotents,
                adjoint_dim_passes: summary.adjoint_dim_passes,
                dual_formula_passes: summary.dual_formula_passes,
                hat_equivalence_passes: summary.hat_equivalence_passes,
            },
            counterexamples: CounterexampleDoc {
                adjoint_dim: summary
                    .adjoint_dim_failures
                    .iter()
                    .map(|e| e.to_string())
                    .collect(),
                dual_formula: summary
                    .dual_formula_failures
                    .iter()
                    .map(|e| e.to_string())
                    .collect(),
                hat_equivalence: summary
                    .hat_counterexamples
                    .iter()
                    .map(HatCexDoc::from_counterexample)
                    .collect(),
            },
            timings: SweepTimings {
                elements_enumerated: summary.elements_enumerated,
                codewords_enumerated: summary.codewords_enumerated,
            },
        }
    }
}

impl HatCexDoc {
    fn from_counterexample(cex: &HatCounterexample) -> HatCexDoc {
        HatCexDoc {
            e: cex.e.to_string(),
            central: cex.central,
            subspace_equal: cex.subspace_equal,
            dist_c: cex.dist_c.into(),
            dist_dperp: cex.dist_dperp.into(),
        }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct DistanceInput {
    pub command: String,
    pub field: String,
    pub group: String,
    pub generators: Vec<String>,
    pub side: String,
    pub budget: u64,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct DistanceDoc {
    pub input: DistanceInput,
    pub dimension: usize,
    pub distance: DistanceValue,
    pub timings: Timings,
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("report serialization");
    out.push('\n');
    out
}
