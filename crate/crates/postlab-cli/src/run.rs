//! Command implementations and their JSON/plain renderings.

use std::fmt;

use postlab::circuit::{self, Circuit, CircuitError};
use postlab::clones;
use postlab::decide::{self, DecideError};
use postlab::enumerate::{self, EnumerationReport};
use postlab::gadgets::{self, GadgetInstance, ThreeDnf};
use postlab::classify as classification;
use postlab::{ComplexityLabel, Problem};

#[derive(Debug)]
pub struct CliError {
    message: String,
    code: u8,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: 2,
        }
    }

    pub fn limit(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: 3,
        }
    }

    pub fn exit_code(&self) -> u8 {
        self.code
    }
}

impl From<CircuitError> for CliError {
    fn from(e: CircuitError) -> Self {
        let code = match &e {
            CircuitError::VariableLimit { .. } | CircuitError::SynthesisArity(_) => 3,
            _ => 2,
        };
        CliError {
            message: e.to_string(),
            code,
        }
    }
}

impl From<DecideError> for CliError {
    fn from(e: DecideError) -> Self {
        let code = match &e {
            DecideError::Circuit(CircuitError::VariableLimit { .. })
            | DecideError::IsoLimit { .. } => 3,
            _ => 2,
        };
        CliError {
            message: e.to_string(),
            code,
        }
    }
}

impl From<gadgets::GadgetError> for CliError {
    fn from(e: gadgets::GadgetError) -> Self {
        let code = match &e {
            gadgets::GadgetError::Circuit(CircuitError::VariableLimit { .. }) => 3,
            gadgets::GadgetError::Decide(DecideError::Circuit(
                CircuitError::VariableLimit { .. },
            )) => 3,
            _ => 2,
        };
        CliError {
            message: e.to_string(),
            code,
        }
    }
}

impl From<enumerate::EnumError> for CliError {
    fn from(e: enumerate::EnumError) -> Self {
        let code = match &e {
            enumerate::EnumError::Circuit(CircuitError::VariableLimit { .. }) => 3,
            _ => 2,
        };
        CliError {
            message: e.to_string(),
            code,
        }
    }
}

/// Rendered command output plus the yes/no flavor for `--exit-status`.
pub struct Output {
    json: serde_json::Value,
    plain: String,
    no_answer: bool,
}

impl Output {
    fn new(json: serde_json::Value, plain: String) -> Self {
        Output {
            json,
            plain,
            no_answer: false,
        }
    }

    fn with_answer(mut self, answer: bool) -> Self {
        self.no_answer = !answer;
        self
    }

    pub fn render(&self, plain: bool) -> String {
        if plain {
            let mut s = self.plain.clone();
            if !s.ends_with('\n') {
                s.push('\n');
            }
            s
        } else {
            format!("{}\n", serde_json::to_string_pretty(&self.json).unwrap())
        }
    }

    pub fn answer_is_no(&self) -> bool {
        self.no_answer
    }
}

fn parse_circuit(text: &str) -> Result<Circuit, CliError> {
    circuit::parse(text).map_err(CliError::from)
}

fn parse_problem(name: &str) -> Result<Problem, CliError> {
    Problem::parse(name).ok_or_else(|| CliError::usage(format!("unknown problem `{name}`")))
}

pub fn clone_of(text: &str) -> Result<Output, CliError> {
    let c = parse_circuit(text)?;
    let clone = clones::clone_of(&c.base.tables());
    Ok(Output::new(
        serde_json::json!({ "clone": clone.to_string() }),
        clone.to_string(),
    ))
}

pub fn classify(problem: &str, text: &str) -> Result<Output, CliError> {
    let p = parse_problem(problem)?;
    let c = parse_circuit(text)?;
    let verdict = classification::classify(p, &c.base.tables());
    let plain = format!(
        "{:?} over {}: {:?} ({})",
        p, verdict.clone, verdict.label, verdict.trace
    );
    Ok(Output::new(serde_json::to_value(&verdict).unwrap(), plain))
}

pub fn solve(
    problem: &str,
    vars: &[String],
    assign: Option<&str>,
    texts: &[String],
) -> Result<Output, CliError> {
    let p = parse_problem(problem)?;
    let expect_files = |n: usize| {
        if texts.len() != n {
            Err(CliError::usage(format!(
                "problem `{problem}` takes {n} circuit file(s), got {}",
                texts.len()
            )))
        } else {
            Ok(())
        }
    };
    let decision = match p {
        Problem::Eq | Problem::Iso => {
            expect_files(2)?;
            let c1 = parse_circuit(&texts[0])?;
            let c2 = parse_circuit(&texts[1])?;
            if p == Problem::Eq {
                decide::equivalent(&c1, &c2)?
            } else {
                decide::isomorphic(&c1, &c2)?
            }
        }
        Problem::Val => {
            expect_files(1)?;
            let c = parse_circuit(&texts[0])?;
            let bits_text =
                assign.ok_or_else(|| CliError::usage("val needs --assign <bits>"))?;
            let bits: Vec<bool> = bits_text
                .chars()
                .map(|ch| match ch {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    _ => Err(CliError::usage(format!("invalid assignment bit `{ch}`"))),
                })
                .collect::<Result<_, _>>()?;
            let a = c.assignment(&bits)?;
            let v = c.evaluate(&a)?;
            decide::Decision {
                answer: v,
                witness: None,
                method: decide::Method::BruteForce,
            }
        }
        Problem::Sat => {
            expect_files(1)?;
            decide::sat(&parse_circuit(&texts[0])?)?
        }
        Problem::SatStar => {
            expect_files(1)?;
            decide::sat_star(&parse_circuit(&texts[0])?)?
        }
        Problem::FrozenVars => {
            expect_files(1)?;
            if vars.is_empty() {
                return Err(CliError::usage("fv needs --vars <v1,v2,...>"));
            }
            decide::frozen(&parse_circuit(&texts[0])?, vars)?
        }
        Problem::ExistsFrozen => {
            expect_files(1)?;
            decide::exists_frozen(&parse_circuit(&texts[0])?)?
        }
        Problem::Audit => {
            expect_files(1)?;
            decide::audit(&parse_circuit(&texts[0])?)?
        }
        Problem::UniqueSat => {
            expect_files(1)?;
            decide::unique_sat(&parse_circuit(&texts[0])?)?
        }
        Problem::Enum | Problem::EnumLex => {
            return Err(CliError::usage(
                "use the `enum` subcommand for enumeration problems",
            ));
        }
    };
    let answer = decision.answer;
    let plain = (if answer { "yes" } else { "no" }).to_string();
    Ok(Output::new(serde_json::to_value(&decision).unwrap(), plain).with_answer(answer))
}

pub fn enumerate(order: &str, stats: bool, text: &str) -> Result<Output, CliError> {
    let c = parse_circuit(text)?;
    let tables = c.base.tables();
    let clone = clones::clone_of(&tables);
    let report: EnumerationReport = match order {
        "lex" => {
            let verdict = classification::classify_clone(Problem::EnumLex, clone);
            if verdict.label != ComplexityLabel::PolyDelayLex {
                return Err(CliError::limit(format!(
                    "no lexicographic polynomial-delay enumeration for clone {clone}: \
                     {:?} ({})",
                    verdict.label, verdict.trace
                )));
            }
            enumerate::enum_backtrack(&c)?
        }
        "any" => {
            let verdict = classification::classify_clone(Problem::Enum, clone);
            if verdict.label == ComplexityLabel::PolyDelay {
                enumerate::enum_backtrack(&c)
                    .or_else(|_| enumerate::enum_dual_pairing(&c))?
            } else {
                enumerate::enum_bruteforce(&c)?
            }
        }
        other => {
            return Err(CliError::usage(format!(
                "unknown order `{other}` (expected `lex` or `any`)"
            )))
        }
    };
    let mut plain = String::new();
    for a in &report.solutions {
        plain.push_str(&a.to_string());
        plain.push('\n');
    }
    let mut json = serde_json::json!({
        "solutions": report.solutions.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
    });
    if stats {
        let stats_json = serde_json::json!({
            "algorithm": format!("{:?}", report.algorithm),
            "delays": report.oracle_calls_between_outputs,
            "max_delay": report.max_delay(),
            "solutions": report.solutions.len(),
        });
        plain.push_str(&format!("{stats_json}\n"));
        json["stats"] = stats_json;
    }
    Ok(Output::new(json, plain))
}

pub fn gadget(
    name: &str,
    texts: &[String],
    k: usize,
    constant: bool,
    verify: bool,
) -> Result<Output, CliError> {
    let expect = |n: usize| {
        if texts.len() != n {
            Err(CliError::usage(format!(
                "gadget `{name}` takes {n} source file(s), got {}",
                texts.len()
            )))
        } else {
            Ok(())
        }
    };
    let instance: GadgetInstance = match name {
        "taut-to-eq" => {
            expect(1)?;
            let dnf = ThreeDnf::parse(texts[0].trim())?;
            gadgets::taut_to_eq(&dnf)?
        }
        "eliminate-constant" => {
            expect(2)?;
            gadgets::eliminate_constant(
                &parse_circuit(&texts[0])?,
                &parse_circuit(&texts[1])?,
                constant,
            )?
        }
        "selfdual-eq" => {
            expect(2)?;
            gadgets::selfdual_eq_gadget(&parse_circuit(&texts[0])?, &parse_circuit(&texts[1])?)?
        }
        "iso-restricted" => {
            expect(2)?;
            gadgets::iso_restricted(&parse_circuit(&texts[0])?, &parse_circuit(&texts[1])?)?
        }
        "satstar-chain" => {
            expect(1)?;
            gadgets::satstar_chain(&parse_circuit(&texts[0])?)?
        }
        "unsat-to-frozen" => {
            expect(1)?;
            gadgets::unsat_to_frozen(&parse_circuit(&texts[0])?)?
        }
        "eq-to-frozen" => {
            expect(2)?;
            gadgets::eq_to_frozen(&parse_circuit(&texts[0])?, &parse_circuit(&texts[1])?)?
        }
        "satp" => {
            expect(2)?;
            gadgets::satp_gadget(&parse_circuit(&texts[0])?, &parse_circuit(&texts[1])?, k)?
        }
        "satstar-to-efv" => {
            expect(1)?;
            gadgets::satstar_to_efv(&parse_circuit(&texts[0])?, k)?
        }
        "audit" => {
            expect(1)?;
            gadgets::audit_gadget(&parse_circuit(&texts[0])?, k)?
        }
        "usat-const-elim" => {
            expect(1)?;
            gadgets::usat_const_elim(&parse_circuit(&texts[0])?)?
        }
        other => return Err(CliError::usage(format!("unknown gadget `{other}`"))),
    };
    let verified = if verify {
        Some(instance.verify()?)
    } else {
        None
    };
    let mut json = serde_json::to_value(&instance).unwrap();
    if let Some(v) = verified {
        json["verified"] = serde_json::json!(v);
    }
    let mut plain = String::new();
    for (cname, c) in &instance.circuits {
        plain.push_str(&format!("# {cname}\n{}\n", c.print()));
    }
    plain.push_str(&format!("claim: {}\n", instance.claim.description));
    if let Some(v) = verified {
        plain.push_str(&format!("verified: {v}\n"));
    }
    let ok = verified.unwrap_or(true);
    Ok(Output::new(json, plain).with_answer(ok))
}

pub fn lattice(max_n: usize) -> Result<Output, CliError> {
    let dot = clones::lattice_dot(max_n);
    Ok(Output::new(serde_json::json!({ "dot": dot }), dot))
}

pub fn convert(text: &str, target_text: &str) -> Result<Output, CliError> {
    let c = parse_circuit(text)?;
    let target = parse_circuit(target_text)?;
    let converted = circuit::convert(&c, &target.base)?;
    let printed = converted.print();
    Ok(Output::new(
        serde_json::json!({
            "clone": clones::clone_of(&converted.base.tables()).to_string(),
            "circuit": printed,
        }),
        printed,
    ))
}
