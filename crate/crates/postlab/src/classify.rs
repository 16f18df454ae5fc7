//! Complexity classification of circuit problems by the clone of the base.
//!
//! Each problem's published case analysis is evaluated top to bottom via
//! lattice inclusions; the first matching case wins and its trace names the
//! rule that fired.

use serde::{Deserialize, Serialize};

use crate::boolfn::TruthTable;
use crate::clones::{self, CloneName, Family};

/// The decision and enumeration problems classified by base.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Problem {
    #[serde(rename = "SAT")]
    Sat,
    #[serde(rename = "SAT_STAR")]
    SatStar,
    #[serde(rename = "VAL")]
    Val,
    #[serde(rename = "EQ")]
    Eq,
    #[serde(rename = "ISO")]
    Iso,
    #[serde(rename = "FV")]
    FrozenVars,
    #[serde(rename = "EFV")]
    ExistsFrozen,
    #[serde(rename = "AUDIT")]
    Audit,
    #[serde(rename = "USAT")]
    UniqueSat,
    #[serde(rename = "ENUM")]
    Enum,
    #[serde(rename = "ENUM_LEX")]
    EnumLex,
}

impl Problem {
    pub const ALL: [Problem; 11] = [
        Problem::Sat,
        Problem::SatStar,
        Problem::Val,
        Problem::Eq,
        Problem::Iso,
        Problem::FrozenVars,
        Problem::ExistsFrozen,
        Problem::Audit,
        Problem::UniqueSat,
        Problem::Enum,
        Problem::EnumLex,
    ];

    pub fn parse(s: &str) -> Option<Problem> {
        Some(match s.to_ascii_lowercase().as_str() {
            "sat" => Problem::Sat,
            "sat*" | "sat-star" | "satstar" | "sat_star" => Problem::SatStar,
            "val" => Problem::Val,
            "eq" => Problem::Eq,
            "iso" => Problem::Iso,
            "fv" => Problem::FrozenVars,
            "efv" => Problem::ExistsFrozen,
            "audit" => Problem::Audit,
            "usat" => Problem::UniqueSat,
            "enum" => Problem::Enum,
            "enum-lex" | "enumlex" | "enum_lex" => Problem::EnumLex,
            _ => return None,
        })
    }
}

/// Complexity labels produced by the classifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ComplexityLabel {
    PolynomialTime,
    #[serde(rename = "NPComplete")]
    NpComplete,
    #[serde(rename = "CoNPComplete")]
    CoNpComplete,
    /// Hard for coNP, contained in the second level of the polynomial
    /// hierarchy; completeness open.
    #[serde(rename = "CoNPHardInSigma2P")]
    CoNpHardInSigma2P,
    #[serde(rename = "DPComplete")]
    DpComplete,
    /// As hard and as easy as the unrestricted problem.
    EquivalentToGeneralCase,
    PolyDelay,
    PolyDelayLex,
    #[serde(rename = "NoPolyTotalUnlessPeqNP")]
    NoPolyTotalUnlessPEqNp,
    #[serde(rename = "NoLexDelayUnlessPeqNP")]
    NoLexDelayUnlessPEqNp,
}

/// Classification outcome with the rule that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityVerdict {
    pub problem: Problem,
    pub clone: CloneName,
    pub label: ComplexityLabel,
    pub trace: String,
}

fn s0_deg2() -> CloneName {
    CloneName::Fam(Family::S0n, 2)
}

/// Classify a problem for circuits over the given base tables.
pub fn classify(problem: Problem, base: &[TruthTable]) -> ComplexityVerdict {
    let c = clones::clone_of(base);
    classify_clone(problem, c)
}

/// Classification by clone name; the base-level entry point resolves the
/// clone first.
pub fn classify_clone(problem: Problem, c: CloneName) -> ComplexityVerdict {
    use CloneName as CN;
    use ComplexityLabel::*;
    let inc = clones::includes;
    let within = |outer: CN| inc(outer, c);
    let verdict = |label, trace: String| ComplexityVerdict {
        problem,
        clone: c,
        label,
        trace,
    };

    match problem {
        Problem::Val => verdict(
            PolynomialTime,
            "circuit value: evaluate gate by gate in topological order".into(),
        ),
        Problem::Sat => {
            if inc(c, CN::S1) {
                verdict(
                    NpComplete,
                    format!("satisfiability dichotomy, hard case: S1 <= {c}"),
                )
            } else {
                verdict(
                    PolynomialTime,
                    format!("satisfiability dichotomy, easy case: S1 is not below {c}"),
                )
            }
        }
        Problem::SatStar => {
            if inc(c, CN::S12) {
                verdict(
                    NpComplete,
                    format!("non-trivial satisfiability dichotomy, hard case: S12 <= {c}"),
                )
            } else {
                verdict(
                    PolynomialTime,
                    format!("non-trivial satisfiability dichotomy, easy case: S12 not below {c}"),
                )
            }
        }
        Problem::Eq | Problem::Iso => {
            let easy = within(CN::E) || within(CN::V) || within(CN::L);
            match (problem, easy) {
                (Problem::Eq, true) => verdict(
                    PolynomialTime,
                    format!("equivalence via normal form: {c} within E, V, or L"),
                ),
                (Problem::Eq, false) => verdict(
                    CoNpComplete,
                    format!("equivalence dichotomy, hard case: {c} outside E, V, and L"),
                ),
                (Problem::Iso, true) => verdict(
                    PolynomialTime,
                    format!("isomorphism via normal form: {c} within E, V, or L"),
                ),
                (Problem::Iso, false) => verdict(
                    CoNpHardInSigma2P,
                    format!(
                        "isomorphism dichotomy, hard case: {c} outside E, V, and L \
                         (coNP-hard, inside Sigma2P, completeness open)"
                    ),
                ),
                _ => unreachable!(),
            }
        }
        Problem::ExistsFrozen => {
            if within(CN::L) {
                verdict(
                    PolynomialTime,
                    format!("frozen-variable existence case 1: {c} within L, linear normal form"),
                )
            } else if within(CN::M) {
                verdict(
                    PolynomialTime,
                    format!("frozen-variable existence case 1: {c} within M, one-flip probes"),
                )
            } else if c == CN::S12 {
                verdict(
                    PolynomialTime,
                    "frozen-variable existence case 1: [B] = S12, every circuit is satisfiable \
                     with a frozen variable by 1-separation"
                        .into(),
                )
            } else if c == CN::S1 {
                verdict(
                    NpComplete,
                    "frozen-variable existence case 2: [B] = S1, equivalent to satisfiability"
                        .into(),
                )
            } else if inc(c, CN::S1) {
                verdict(
                    DpComplete,
                    format!("frozen-variable existence case 3: S1 strictly below {c}"),
                )
            } else {
                verdict(
                    CoNpComplete,
                    format!(
                        "frozen-variable existence case 4: {c} in the self-dual or \
                         1-reproducing bands"
                    ),
                )
            }
        }
        Problem::FrozenVars => {
            if within(CN::M) || within(CN::L) {
                verdict(
                    PolynomialTime,
                    format!("frozen-set dichotomy case 1: {c} within M or L"),
                )
            } else if inc(c, CN::S1) {
                verdict(
                    DpComplete,
                    format!("frozen-set dichotomy case 2: S1 <= {c}"),
                )
            } else {
                verdict(
                    CoNpComplete,
                    format!("frozen-set dichotomy case 3: remaining clones ({c})"),
                )
            }
        }
        Problem::Audit => {
            if within(CN::M) || within(CN::L) || within(CN::S1) {
                verdict(
                    PolynomialTime,
                    format!("audit dichotomy case 1: {c} within M, L, or S1"),
                )
            } else {
                verdict(
                    CoNpComplete,
                    format!("audit dichotomy case 2: remaining clones ({c})"),
                )
            }
        }
        Problem::UniqueSat => {
            if inc(c, CN::S1) {
                verdict(
                    EquivalentToGeneralCase,
                    format!(
                        "unique satisfiability case 1: S1 <= {c}; interreducible with the \
                         unrestricted problem (a natural complete problem for the class US)"
                    ),
                )
            } else if inc(c, CN::S12) && within(CN::R1) {
                verdict(
                    CoNpComplete,
                    format!("unique satisfiability case 2: S12 <= {c} <= R1"),
                )
            } else {
                verdict(
                    PolynomialTime,
                    format!("unique satisfiability case 3: remaining clones ({c})"),
                )
            }
        }
        Problem::Enum => {
            if within(CN::M) || within(CN::L) || within(CN::D) || within(s0_deg2()) {
                verdict(
                    PolyDelay,
                    format!("enumeration case 1: {c} within M, L, D, or S0^2"),
                )
            } else {
                verdict(
                    NoPolyTotalUnlessPEqNp,
                    format!("enumeration case 2: S12 <= {c}, no polynomial total time"),
                )
            }
        }
        Problem::EnumLex => {
            if within(CN::M) || within(CN::L) {
                verdict(
                    PolyDelayLex,
                    format!("lexicographic enumeration case 1: {c} within M or L, backtracking \
                             emits in order"),
                )
            } else if within(CN::D) || within(s0_deg2()) {
                verdict(
                    NoLexDelayUnlessPEqNp,
                    format!(
                        "lexicographic enumeration case 2: {c} within D or S0^2 but not M or L; \
                         a lex-first solution would decide satisfiability with a constant"
                    ),
                )
            } else {
                verdict(
                    NoPolyTotalUnlessPEqNp,
                    format!("lexicographic enumeration case 3: S12 <= {c}"),
                )
            }
        }
    }
}
