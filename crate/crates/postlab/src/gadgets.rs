//! Reduction gadgets: constructions that translate one problem instance into
//! another while provably preserving the relevant property. Every gadget
//! returns the constructed circuits together with a claim that can be
//! verified by brute force at desk scale.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::boolfn::TruthTable;
use crate::circuit::{synthesize, Base, Circuit, CircuitBuilder, CircuitError};
use crate::clones::{self, standard_base, threshold, CloneName};
use crate::decide::{self, DecideError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GadgetError {
    #[error(transparent)]
    Circuit(#[from] CircuitError),
    #[error(transparent)]
    Decide(#[from] DecideError),
    #[error("formula error: {0}")]
    Dnf(String),
    #[error("gadget expects base functions from {{{expected}}}")]
    UnexpectedBase { expected: &'static str },
    #[error("required function not in the base clone: {0}")]
    MissingCapability(&'static str),
    #[error("input circuits must have disjoint variable sets")]
    OverlappingVariables,
    #[error("input circuit needs at least one variable")]
    NoVariables,
    #[error("claim verification needs circuit `{0}`")]
    MissingCircuit(&'static str),
}

// ---------------------------------------------------------------------------
// 3-DNF formulas.

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Literal {
    pub var: String,
    pub negated: bool,
}

/// A disjunction of conjunctions of at most three literals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThreeDnf {
    pub variables: Vec<String>,
    pub terms: Vec<Vec<Literal>>,
}

impl ThreeDnf {
    /// Parse `x1 & !x2 & x3 | !x1` style text.
    pub fn parse(text: &str) -> Result<Self, GadgetError> {
        let mut variables: Vec<String> = Vec::new();
        let mut terms = Vec::new();
        for term_text in text.split('|') {
            let mut term = Vec::new();
            for lit_text in term_text.split('&') {
                let lit_text = lit_text.trim();
                if lit_text.is_empty() {
                    return Err(GadgetError::Dnf("empty literal".into()));
                }
                let (negated, name) = match lit_text.strip_prefix('!') {
                    Some(rest) => (true, rest.trim()),
                    None => (false, lit_text),
                };
                if name.is_empty()
                    || !name
                        .chars()
                        .all(|c| c.is_ascii_alphanumeric() || c == '_')
                    || !name.chars().next().unwrap().is_ascii_alphabetic()
                {
                    return Err(GadgetError::Dnf(format!("invalid variable `{name}`")));
                }
                if !variables.iter().any(|v| v == name) {
                    variables.push(name.to_string());
                }
                term.push(Literal {
                    var: name.to_string(),
                    negated,
                });
            }
            if term.is_empty() || term.len() > 3 {
                return Err(GadgetError::Dnf(format!(
                    "terms carry 1 to 3 literals, got {}",
                    term.len()
                )));
            }
            terms.push(term);
        }
        if terms.is_empty() {
            return Err(GadgetError::Dnf("formula needs at least one term".into()));
        }
        Ok(ThreeDnf { variables, terms })
    }

    pub fn eval(&self, bits: &[bool]) -> bool {
        self.terms.iter().any(|term| {
            term.iter().all(|lit| {
                let i = self.variables.iter().position(|v| *v == lit.var).unwrap();
                bits[i] != lit.negated
            })
        })
    }

    /// Exhaustive check over the declared variables.
    pub fn is_tautology(&self) -> bool {
        let n = self.variables.len();
        (0..1u32 << n).all(|i| {
            let bits: Vec<bool> = (0..n).map(|j| (i >> j) & 1 == 1).collect();
            self.eval(&bits)
        })
    }

    pub fn render(&self) -> String {
        self.terms
            .iter()
            .map(|term| {
                term.iter()
                    .map(|l| {
                        if l.negated {
                            format!("!{}", l.var)
                        } else {
                            l.var.clone()
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(" & ")
            })
            .collect::<Vec<_>>()
            .join(" | ")
    }
}

// ---------------------------------------------------------------------------
// Gadget instances and claims.

#[derive(Debug, Clone, Serialize)]
pub struct GadgetInstance {
    pub name: &'static str,
    /// Human-readable description of the source instance.
    pub source: String,
    /// Named circuits: sources first, constructions after.
    #[serde(serialize_with = "serialize_circuits")]
    pub circuits: Vec<(String, Circuit)>,
    pub claim: Claim,
}

fn serialize_circuits<S: serde::Serializer>(
    circuits: &[(String, Circuit)],
    ser: S,
) -> Result<S::Ok, S::Error> {
    ser.collect_map(circuits.iter().map(|(n, c)| (n, c.print())))
}

#[derive(Debug, Clone, Serialize)]
pub struct Claim {
    pub description: String,
    #[serde(skip)]
    kind: ClaimKind,
}

#[derive(Debug, Clone)]
enum ClaimKind {
    TautEq { dnf: ThreeDnf },
    ConstantElimination,
    SelfDualEq { u: String, v: String },
    IsoRestricted { pad_count: usize },
    SatStarChain,
    UnsatToFrozen { x: String },
    EqToFrozen { x: String },
    SatPair,
    SatStarToEfv { frozen_candidates: Vec<String> },
    AuditReduction { fresh: Vec<String> },
    UsatCount,
}

impl GadgetInstance {
    fn circuit(&self, name: &'static str) -> Result<&Circuit, GadgetError> {
        self.circuits
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, c)| c)
            .ok_or(GadgetError::MissingCircuit(name))
    }

    /// Brute-force verification of the claimed property. Total variable
    /// counts are bounded by [`crate::brute_limit`] through the underlying
    /// scans.
    pub fn verify(&self) -> Result<bool, GadgetError> {
        match &self.claim.kind {
            ClaimKind::TautEq { dnf } => {
                let c1 = self.circuit("C1")?;
                let c2 = self.circuit("C2")?;
                let taut = dnf.is_tautology();
                let eq = decide::equivalent_bruteforce(c1, c2)?.answer;
                let n1 = c1.count_sat()?;
                let n2 = c2.count_sat()?;
                let subset = models(c2)?.is_subset(&models(c1)?);
                let iso_matches = if taut {
                    eq // equal circuits are trivially isomorphic
                } else {
                    n2 < n1 // strict counting gap rules isomorphism out
                };
                Ok(subset && taut == eq && iso_matches)
            }
            ClaimKind::ConstantElimination => {
                let c1 = self.circuit("C1")?;
                let c2 = self.circuit("C2")?;
                let d1 = self.circuit("C1'")?;
                let d2 = self.circuit("C2'")?;
                let eq_before = decide::equivalent_bruteforce(c1, c2)?.answer;
                let eq_after = decide::equivalent_bruteforce(d1, d2)?.answer;
                let iso_before = iso_scan(c1, c2)?;
                let iso_after = iso_scan(d1, d2)?;
                Ok(eq_before == eq_after && iso_before == iso_after)
            }
            ClaimKind::SelfDualEq { u, v } => {
                let c1 = self.circuit("C1")?;
                let c2 = self.circuit("C2")?;
                let d1 = self.circuit("C1'")?;
                let d2 = self.circuit("C2'")?;
                let eq_before = decide::equivalent_bruteforce(c1, c2)?.answer;
                let eq_after = decide::equivalent_bruteforce(d1, d2)?.answer;
                // Equal fresh variables force the output to their value.
                for d in [d1, d2] {
                    let ui = var_index(d, u)?;
                    let vi = var_index(d, v)?;
                    let mut ok = true;
                    d.for_each_assignment(|bits, val| {
                        if bits[ui] == bits[vi] && val != bits[ui] {
                            ok = false;
                        }
                    })?;
                    if !ok {
                        return Ok(false);
                    }
                }
                Ok(eq_before == eq_after)
            }
            ClaimKind::IsoRestricted { pad_count } => {
                let c1 = self.circuit("C1^0")?;
                let c2 = self.circuit("C2^0")?;
                let d1 = self.circuit("C1")?;
                let d2 = self.circuit("C2")?;
                let iso_before = iso_scan(c1, c2)?;
                let iso_after = iso_scan(d1, d2)?;
                // Model counts: wrapping with majority over two fresh
                // variables doubles the inner count and adds a full cube.
                for (inner, outer) in [(c1, d1), (c2, d2)] {
                    let n = inner.num_vars() as u32;
                    if outer.count_sat()? != 2 * inner.count_sat()? + (1u64 << n) {
                        return Ok(false);
                    }
                    if outer.num_vars() != inner.num_vars() + pad_count {
                        return Ok(false);
                    }
                }
                Ok(iso_before == iso_after)
            }
            ClaimKind::SatStarChain => {
                let source = self.circuit("C")?;
                let chained = self.circuit("C_hat")?;
                let sat = source.sat_bruteforce()?.is_some();
                let star = decide::sat_star_bruteforce(chained)?.answer;
                Ok(sat == star)
            }
            ClaimKind::UnsatToFrozen { x } => {
                let source = self.circuit("C")?;
                let out = self.circuit("C_or_x")?;
                let sat = source.sat_bruteforce()?.is_some();
                let frozen_x = decide::frozen_bruteforce(out, std::slice::from_ref(x))?.answer;
                if frozen_x == sat {
                    return Ok(false);
                }
                // No other variable can be frozen.
                for v in out.variables() {
                    if v != x && decide::frozen_bruteforce(out, std::slice::from_ref(v))?.answer {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            ClaimKind::EqToFrozen { x } => {
                let c1 = self.circuit("C1")?;
                let c2 = self.circuit("C2")?;
                let out = self.circuit("Phi")?;
                let eq = decide::equivalent_bruteforce(c1, c2)?.answer;
                let efv = decide::exists_frozen_bruteforce(out)?.answer;
                let fx = decide::frozen_bruteforce(out, std::slice::from_ref(x))?.answer;
                Ok(eq == efv && eq == fx)
            }
            ClaimKind::SatPair => {
                let c1 = self.circuit("C1")?;
                let c2 = self.circuit("C2")?;
                let out = self.circuit("C")?;
                let s1 = c1.sat_bruteforce()?.is_some();
                let s2 = c2.sat_bruteforce()?.is_some();
                let efv = decide::exists_frozen_bruteforce(out)?.answer;
                Ok(efv == (s1 ^ s2))
            }
            ClaimKind::SatStarToEfv { frozen_candidates } => {
                let source = self.circuit("C")?;
                let out = self.circuit("G")?;
                let star = decide::sat_star_bruteforce(source)?.answer;
                let efv = decide::exists_frozen_bruteforce(out)?.answer;
                if efv != !star {
                    return Ok(false);
                }
                if !star {
                    // Unsatisfiable, or all-ones only: every fresh variable
                    // is frozen.
                    let d = decide::frozen_bruteforce(out, frozen_candidates)?;
                    if !d.answer {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            ClaimKind::AuditReduction { fresh } => {
                let source = self.circuit("C")?;
                let out = self.circuit("C'")?;
                let sat = source.sat_bruteforce()?.is_some();
                let audit = decide::audit_bruteforce(out)?.answer;
                if audit != !sat {
                    return Ok(false);
                }
                if !sat && !decide::frozen_bruteforce(out, fresh)?.answer {
                    return Ok(false);
                }
                Ok(true)
            }
            ClaimKind::UsatCount => {
                let source = self.circuit("C")?;
                let out = self.circuit("C'")?;
                Ok(source.count_sat()? == out.count_sat()?)
            }
        }
    }
}

fn models(c: &Circuit) -> Result<BTreeSet<Vec<bool>>, GadgetError> {
    let mut set = BTreeSet::new();
    c.for_each_assignment(|bits, v| {
        if v {
            set.insert(bits.to_vec());
        }
    })?;
    Ok(set)
}

fn var_index(c: &Circuit, v: &str) -> Result<usize, GadgetError> {
    c.variables()
        .iter()
        .position(|u| u == v)
        .ok_or_else(|| GadgetError::Decide(DecideError::UnknownVariable(v.to_string())))
}

/// Permutation-scan isomorphism oracle over the union variables.
fn iso_scan(c1: &Circuit, c2: &Circuit) -> Result<bool, GadgetError> {
    let mut vars: Vec<String> = c1.variables().to_vec();
    for v in c2.variables() {
        if !vars.contains(v) {
            vars.push(v.clone());
        }
    }
    let n = vars.len();
    let project = |c: &Circuit, bits: &[bool]| -> Vec<bool> {
        c.variables()
            .iter()
            .map(|v| bits[vars.iter().position(|u| u == v).unwrap()])
            .collect()
    };
    let t1 = TruthTable::from_fn(n, |args| c1.eval_bits(&project(c1, args)));
    let t2 = TruthTable::from_fn(n, |args| c2.eval_bits(&project(c2, args)));
    let mut perm: Vec<usize> = (0..n).collect();
    Ok(perm_scan(&mut perm, 0, &t1, &t2))
}

fn perm_scan(perm: &mut Vec<usize>, k: usize, t1: &TruthTable, t2: &TruthTable) -> bool {
    if k == perm.len() {
        let permuted = TruthTable::from_fn(t1.arity(), |args| {
            let reordered: Vec<bool> = perm.iter().map(|&p| args[p]).collect();
            t1.eval(&reordered).expect("same arity")
        });
        return permuted == *t2;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        if perm_scan(perm, k + 1, t1, t2) {
            perm.swap(k, i);
            return true;
        }
        perm.swap(k, i);
    }
    false
}

// ---------------------------------------------------------------------------
// Construction helpers.

fn fresh_name(taken: &[&[String]], stem: &str) -> String {
    let mut name = stem.to_string();
    while taken.iter().any(|vars| vars.contains(&name)) {
        name.push('_');
    }
    name
}

fn and2() -> TruthTable {
    TruthTable::from_fn(2, |a| a[0] && a[1])
}
fn or2() -> TruthTable {
    TruthTable::from_fn(2, |a| a[0] || a[1])
}

/// Chain a binary template over a nonempty argument list.
fn chain(
    builder: &mut CircuitBuilder,
    template: &Circuit,
    args: &[usize],
) -> Result<usize, GadgetError> {
    let mut acc = args[0];
    for &a in &args[1..] {
        acc = builder.splice(template, &[acc, a])?;
    }
    Ok(acc)
}

fn require_tables(base: &Base, allowed: &[TruthTable], expected: &'static str) -> Result<(), GadgetError> {
    for (_, t) in base.iter() {
        if !allowed.contains(t) {
            return Err(GadgetError::UnexpectedBase { expected });
        }
    }
    Ok(())
}

fn constant_function_name(base: &Base, c: bool) -> Option<String> {
    base.iter()
        .find(|(_, t)| t.arity() == 0 && t.bit(0) == c)
        .map(|(n, _)| n.to_string())
}

// ---------------------------------------------------------------------------
// The gadgets.

/// Tautology of a 3-DNF as an equivalence (and isomorphism) question for
/// monotone circuits: negated literals become fresh variables, `C1` requires
/// one of each variable pair, `C2` additionally requires the rewritten
/// formula.
pub fn taut_to_eq(dnf: &ThreeDnf) -> Result<GadgetInstance, GadgetError> {
    let base = Base::new(vec![("AND".into(), and2()), ("OR".into(), or2())])?;
    let mut builder = CircuitBuilder::new(base);
    let xs: Vec<String> = dnf.variables.clone();
    let ys: Vec<String> = xs
        .iter()
        .map(|v| fresh_name(&[&xs], &format!("{v}_b")))
        .collect();

    // Inputs in x1..xn, y1..yn order.
    let x_gates: Vec<usize> = xs.iter().map(|v| builder.input(v)).collect();
    let y_gates: Vec<usize> = ys.iter().map(|v| builder.input(v)).collect();

    // C: the formula with negated literals replaced by the fresh variables.
    let mut term_gates = Vec::new();
    for term in &dnf.terms {
        let lit_gates: Vec<usize> = term
            .iter()
            .map(|lit| {
                let i = xs.iter().position(|v| *v == lit.var).unwrap();
                if lit.negated {
                    y_gates[i]
                } else {
                    x_gates[i]
                }
            })
            .collect();
        let mut acc = lit_gates[0];
        for &g in &lit_gates[1..] {
            acc = builder.apply_named("AND", vec![acc, g])?;
        }
        term_gates.push(acc);
    }
    let mut c_gate = term_gates[0];
    for &g in &term_gates[1..] {
        c_gate = builder.apply_named("OR", vec![c_gate, g])?;
    }

    // C1: conjunction of (x_i | y_i).
    let mut pair_gates = Vec::new();
    for i in 0..xs.len() {
        pair_gates.push(builder.apply_named("OR", vec![x_gates[i], y_gates[i]])?);
    }
    let mut c1_gate = pair_gates[0];
    for &g in &pair_gates[1..] {
        c1_gate = builder.apply_named("AND", vec![c1_gate, g])?;
    }

    let c2_gate = builder.apply_named("AND", vec![c1_gate, c_gate])?;

    let c_formula = builder.clone().finish(c_gate)?;
    let c1 = builder.clone().finish(c1_gate)?;
    let c2 = builder.finish(c2_gate)?;

    Ok(GadgetInstance {
        name: "taut-to-eq",
        source: dnf.render(),
        circuits: vec![
            ("C".into(), c_formula),
            ("C1".into(), c1),
            ("C2".into(), c2),
        ],
        claim: Claim {
            description: "the formula is a tautology iff C1 and C2 are equivalent iff they are \
                          isomorphic; Sat(C2) is always a subset of Sat(C1)"
                .into(),
            kind: ClaimKind::TautEq { dnf: dnf.clone() },
        },
    })
}

/// Trade a 0-ary constant for a fresh conjoined (or disjoined) variable:
/// `C[1 -> v] & v` preserves equivalence and isomorphism of pairs.
pub fn eliminate_constant(
    c1: &Circuit,
    c2: &Circuit,
    constant: bool,
) -> Result<GadgetInstance, GadgetError> {
    let connective = if constant { and2() } else { or2() };
    let v = fresh_name(&[c1.variables(), c2.variables()], "v");
    let mut outputs = Vec::new();
    for c in [c1, c2] {
        let const_name = constant_function_name(&c.base, constant)
            .ok_or(GadgetError::MissingCapability("the constant being replaced"))?;
        let replaced = c.replace_function_with_variable(&const_name, &v)?;
        let template = synthesize(&connective, &replaced.base).map_err(|e| match e {
            CircuitError::NotInClone => {
                GadgetError::MissingCapability("binary connective over the reduced base")
            }
            other => GadgetError::Circuit(other),
        })?;
        let mut builder = CircuitBuilder::new(replaced.base.clone());
        for var in replaced.variables() {
            builder.input(var);
        }
        let inputs: Vec<usize> = replaced
            .variables()
            .iter()
            .map(|var| builder.input(var))
            .collect();
        let body = builder.splice(&replaced, &inputs)?;
        let v_gate = builder.input(&v);
        let out = builder.splice(&template, &[body, v_gate])?;
        outputs.push(builder.finish(out)?);
    }
    let c2_prime = outputs.pop().unwrap();
    let c1_prime = outputs.pop().unwrap();
    Ok(GadgetInstance {
        name: "eliminate-constant",
        source: format!(
            "pair of circuits over a base with the constant {}",
            constant as u8
        ),
        circuits: vec![
            ("C1".into(), c1.clone()),
            ("C2".into(), c2.clone()),
            ("C1'".into(), c1_prime),
            ("C2'".into(), c2_prime),
        ],
        claim: Claim {
            description: "the original pair is equivalent (isomorphic) iff the rewritten pair \
                          is equivalent (isomorphic)"
                .into(),
            kind: ClaimKind::ConstantElimination,
        },
    })
}

/// Rewrite a pair of and/or circuits into pure majority circuits such that
/// equivalence is preserved: constants become fresh variables `u`, `v` and
/// the output is wrapped as `maj(v, C, u)`.
pub fn selfdual_eq_gadget(c1: &Circuit, c2: &Circuit) -> Result<GadgetInstance, GadgetError> {
    for c in [c1, c2] {
        require_tables(&c.base, &[and2(), or2()], "and, or")?;
    }
    let u = fresh_name(&[c1.variables(), c2.variables()], "u");
    let v = fresh_name(&[c1.variables(), c2.variables(), std::slice::from_ref(&u)], "v");
    let maj = clones::majority3();
    let base = Base::new(vec![("MAJ".into(), maj.clone())])?;

    let mut outputs = Vec::new();
    for c in [c1, c2] {
        let mut builder = CircuitBuilder::new(base.clone());
        for var in c.variables() {
            builder.input(var);
        }
        let u_gate = builder.input(&u);
        let v_gate = builder.input(&v);
        // Each and/or gate becomes one majority gate with exactly one
        // constant-replacing argument.
        let mut map: Vec<usize> = Vec::with_capacity(c.gates().len());
        for g in c.gates() {
            use crate::circuit::Gate;
            let mapped = match g {
                Gate::Input(vi) => builder.input(&c.variables()[*vi].clone()),
                Gate::Apply { func, args } => {
                    let a = map[args[0]];
                    let b = map[args[1]];
                    let is_and = *c.base.function(*func) == and2();
                    let const_arg = if is_and { u_gate } else { v_gate };
                    builder.apply_named("MAJ", vec![a, b, const_arg])?
                }
            };
            map.push(mapped);
        }
        let wrapped = builder.apply_named("MAJ", vec![v_gate, map[c.output()], u_gate])?;
        outputs.push(builder.finish(wrapped)?);
    }
    let c2_prime = outputs.pop().unwrap();
    let c1_prime = outputs.pop().unwrap();
    Ok(GadgetInstance {
        name: "selfdual-eq",
        source: "pair of and/or circuits".into(),
        circuits: vec![
            ("C1".into(), c1.clone()),
            ("C2".into(), c2.clone()),
            ("C1'".into(), c1_prime),
            ("C2'".into(), c2_prime),
        ],
        claim: Claim {
            description: format!(
                "C1 and C2 are equivalent iff the majority rewrites are; assignments with \
                 {u} = {v} force the output to that shared value"
            ),
            kind: ClaimKind::SelfDualEq { u, v },
        },
    })
}

/// Restrict isomorphism instances: pad each circuit with a fresh conjoined
/// pair, then wrap in a majority over two more fresh variables. Isomorphism
/// is preserved and the results satisfy the counting side conditions.
pub fn iso_restricted(c1: &Circuit, c2: &Circuit) -> Result<GadgetInstance, GadgetError> {
    for c in [c1, c2] {
        require_tables(&c.base, &[and2(), or2()], "and, or")?;
    }
    let base = Base::new(vec![("AND".into(), and2()), ("OR".into(), or2())])?;
    let taken = [c1.variables(), c2.variables()];
    let y = fresh_name(&taken, "y");
    let z = fresh_name(&[c1.variables(), c2.variables(), std::slice::from_ref(&y)], "z");
    let z1 = fresh_name(
        &[c1.variables(), c2.variables(), &[y.clone(), z.clone()]],
        "z1",
    );
    let z2 = fresh_name(
        &[
            c1.variables(),
            c2.variables(),
            &[y.clone(), z.clone(), z1.clone()],
        ],
        "z2",
    );

    // Shared variable list: union of the inputs, in order.
    let mut union_vars: Vec<String> = c1.variables().to_vec();
    for v in c2.variables() {
        if !union_vars.contains(v) {
            union_vars.push(v.clone());
        }
    }

    let mut inners = Vec::new();
    let mut outers = Vec::new();
    for c in [c1, c2] {
        let mut builder = CircuitBuilder::new(base.clone());
        for var in &union_vars {
            builder.input(var);
        }
        let args: Vec<usize> = c.variables().iter().map(|var| builder.input(var)).collect();
        let body = builder.splice(c, &args)?;
        let y_gate = builder.input(&y);
        let z_gate = builder.input(&z);
        let pad = builder.apply_named("AND", vec![y_gate, z_gate])?;
        let inner_out = builder.apply_named("AND", vec![body, pad])?;
        let inner = builder.clone().finish(inner_out)?;

        // Majority(z1, z2, inner) expanded over and/or.
        let z1_gate = builder.input(&z1);
        let z2_gate = builder.input(&z2);
        let p12 = builder.apply_named("AND", vec![z1_gate, z2_gate])?;
        let p1c = builder.apply_named("AND", vec![z1_gate, inner_out])?;
        let p2c = builder.apply_named("AND", vec![z2_gate, inner_out])?;
        let q = builder.apply_named("OR", vec![p12, p1c])?;
        let outer_out = builder.apply_named("OR", vec![q, p2c])?;
        outers.push(builder.finish(outer_out)?);
        inners.push(inner);
    }

    Ok(GadgetInstance {
        name: "iso-restricted",
        source: "pair of and/or circuits".into(),
        circuits: vec![
            ("C1^0".into(), inners[0].clone()),
            ("C2^0".into(), inners[1].clone()),
            ("C1".into(), outers[0].clone()),
            ("C2".into(), outers[1].clone()),
        ],
        claim: Claim {
            description: "the padded circuits are isomorphic iff the majority wraps are; each \
                          wrap has exactly twice the inner model count plus a full cube"
                .into(),
            kind: ClaimKind::IsoRestricted { pad_count: 2 },
        },
    })
}

/// Satisfiability as non-trivial satisfiability: replace the constant 0 by a
/// fresh variable and chain `g(x, y, !z)`-style guards so the all-ones
/// assignment is the only spurious model.
pub fn satstar_chain(c: &Circuit) -> Result<GadgetInstance, GadgetError> {
    let g_table = standard_base(CloneName::S12)[0].clone();
    require_tables(&c.base, &[g_table.clone(), TruthTable::constant(false)], "x&(y|!z), 0")?;
    if c.num_vars() == 0 {
        return Err(GadgetError::NoVariables);
    }
    let x0 = fresh_name(&[c.variables()], "x0");
    let const_name = constant_function_name(&c.base, false)
        .ok_or(GadgetError::MissingCapability("the constant 0"))?;
    let replaced = c.replace_function_with_variable(&const_name, &x0)?;

    let base = Base::new(vec![("G".into(), g_table)])?;
    let mut builder = CircuitBuilder::new(base);
    let orig_vars: Vec<String> = c.variables().to_vec();
    for var in &orig_vars {
        builder.input(var);
    }
    let x0_gate = builder.input(&x0);
    let args: Vec<usize> = replaced
        .variables()
        .iter()
        .map(|var| builder.input(var))
        .collect();
    let mut acc = builder.splice(&replaced, &args)?;
    for var in &orig_vars {
        let xi = builder.input(var);
        acc = builder.apply_named("G", vec![acc, xi, x0_gate])?;
    }
    let chained = builder.finish(acc)?;

    Ok(GadgetInstance {
        name: "satstar-chain",
        source: "circuit over the 1-separating generator with the constant 0".into(),
        circuits: vec![("C".into(), c.clone()), ("C_hat".into(), chained)],
        claim: Claim {
            description: "the source is satisfiable iff the chained circuit has a model other \
                          than all-ones"
                .into(),
            kind: ClaimKind::SatStarChain,
        },
    })
}

/// Unsatisfiability as frozenness: replace the constant 0 by a fresh
/// variable `x` and disjoin `x`; then `x` is frozen exactly when the source
/// had no model, and no other variable can be frozen.
pub fn unsat_to_frozen(c: &Circuit) -> Result<GadgetInstance, GadgetError> {
    let h_table = standard_base(CloneName::S02)[0].clone();
    require_tables(&c.base, &[h_table, TruthTable::constant(false)], "x|(y&!z), 0")?;
    let x = fresh_name(&[c.variables()], "x");
    let const_name = constant_function_name(&c.base, false)
        .ok_or(GadgetError::MissingCapability("the constant 0"))?;
    let replaced = c.replace_function_with_variable(&const_name, &x)?;
    let or_template = synthesize(&or2(), &replaced.base).map_err(|e| match e {
        CircuitError::NotInClone => GadgetError::MissingCapability("disjunction over the base"),
        other => GadgetError::Circuit(other),
    })?;
    let mut builder = CircuitBuilder::new(replaced.base.clone());
    for var in c.variables() {
        builder.input(var);
    }
    let x_gate = builder.input(&x);
    let args: Vec<usize> = replaced
        .variables()
        .iter()
        .map(|var| builder.input(var))
        .collect();
    let body = builder.splice(&replaced, &args)?;
    let out = builder.splice(&or_template, &[body, x_gate])?;
    let result = builder.finish(out)?;

    Ok(GadgetInstance {
        name: "unsat-to-frozen",
        source: "circuit over the 0-separating generator with the constant 0".into(),
        circuits: vec![("C".into(), c.clone()), ("C_or_x".into(), result)],
        claim: Claim {
            description: format!(
                "{x} is frozen iff the source is unsatisfiable, and {x} is the only candidate"
            ),
            kind: ClaimKind::UnsatToFrozen { x },
        },
    })
}

/// Equivalence as frozenness for self-dual bases: when the inputs agree on
/// the all-equal assignments, emit `x xor C1 xor C2`; otherwise emit a bare
/// majority, which never has a frozen variable.
pub fn eq_to_frozen(c1: &Circuit, c2: &Circuit) -> Result<GadgetInstance, GadgetError> {
    for c in [c1, c2] {
        let clone = clones::clone_of(&c.base.tables());
        if !clones::includes(CloneName::D, clone) {
            return Err(GadgetError::MissingCapability("base within D"));
        }
    }
    // Work over the union of the input bases; the connectives are
    // synthesized there, keeping the output a circuit over the same clone
    // band as the inputs.
    let mut funcs: Vec<(String, TruthTable)> = c1
        .base
        .iter()
        .map(|(n, t)| (n.to_string(), t.clone()))
        .collect();
    for (n, t) in c2.base.iter() {
        if !funcs.iter().any(|(_, u)| u == t) {
            let mut name = n.to_string();
            while funcs.iter().any(|(m, _)| *m == name) {
                name.push('_');
            }
            funcs.push((name, t.clone()));
        }
    }
    let base = Base::new(funcs)?;
    let x = fresh_name(&[c1.variables(), c2.variables()], "x");

    let mut union_vars: Vec<String> = c1.variables().to_vec();
    for v in c2.variables() {
        if !union_vars.contains(v) {
            union_vars.push(v.clone());
        }
    }
    let eval_on_const = |c: &Circuit, bit: bool| -> bool {
        c.eval_bits(&vec![bit; c.num_vars()])
    };
    let disagree_on_poles = eval_on_const(c1, false) != eval_on_const(c2, false)
        || eval_on_const(c1, true) != eval_on_const(c2, true);

    let output = if disagree_on_poles {
        let maj = synthesize(&clones::majority3(), &base)?;
        let mut builder = CircuitBuilder::new(base);
        let a = builder.input(&x);
        let b = builder.input("y");
        let cc = builder.input("z");
        let out = builder.splice(&maj, &[a, b, cc])?;
        builder.finish(out)?
    } else {
        let xor3 = synthesize(&TruthTable::from_fn(3, |a| a[0] ^ a[1] ^ a[2]), &base)?;
        let mut builder = CircuitBuilder::new(base);
        for var in &union_vars {
            builder.input(var);
        }
        let x_gate = builder.input(&x);
        let a1: Vec<usize> = c1.variables().iter().map(|v| builder.input(v)).collect();
        let o1 = builder.splice(c1, &a1)?;
        let a2: Vec<usize> = c2.variables().iter().map(|v| builder.input(v)).collect();
        let o2 = builder.splice(c2, &a2)?;
        let out = builder.splice(&xor3, &[x_gate, o1, o2])?;
        builder.finish(out)?
    };

    Ok(GadgetInstance {
        name: "eq-to-frozen",
        source: "pair of circuits over the self-dual both-reproducing base".into(),
        circuits: vec![
            ("C1".into(), c1.clone()),
            ("C2".into(), c2.clone()),
            ("Phi".into(), output),
        ],
        claim: Claim {
            description: format!(
                "the inputs are equivalent iff the output has a frozen variable iff {{{x}}} is \
                 frozen in it"
            ),
            kind: ClaimKind::EqToFrozen { x },
        },
    })
}

/// Exactly-one-satisfiable as frozen-variable existence: feed both circuits
/// into a threshold gate padded with fresh variables.
pub fn satp_gadget(c1: &Circuit, c2: &Circuit, k: usize) -> Result<GadgetInstance, GadgetError> {
    if c1.variables().iter().any(|v| c2.variables().contains(v)) {
        return Err(GadgetError::OverlappingVariables);
    }
    if c1.base != c2.base {
        return Err(GadgetError::UnexpectedBase {
            expected: "a shared base for both inputs",
        });
    }
    let t_k = threshold(k);
    let template = synthesize(&t_k, &c1.base).map_err(|e| match e {
        CircuitError::NotInClone => GadgetError::MissingCapability("threshold function"),
        other => GadgetError::Circuit(other),
    })?;
    let mut builder = CircuitBuilder::new(c1.base.clone());
    for var in c1.variables().iter().chain(c2.variables()) {
        builder.input(var);
    }
    let fresh: Vec<String> = (0..k - 1)
        .map(|i| fresh_name(&[c1.variables(), c2.variables()], &format!("w{}", i + 1)))
        .collect();
    let a1: Vec<usize> = c1.variables().iter().map(|v| builder.input(v)).collect();
    let o1 = builder.splice(c1, &a1)?;
    let a2: Vec<usize> = c2.variables().iter().map(|v| builder.input(v)).collect();
    let o2 = builder.splice(c2, &a2)?;
    let mut args = vec![o1, o2];
    for w in &fresh {
        args.push(builder.input(w));
    }
    let out = builder.splice(&template, &args)?;
    let combined = builder.finish(out)?;

    Ok(GadgetInstance {
        name: "satp",
        source: format!("pair of circuits joined through the {k}-threshold"),
        circuits: vec![
            ("C1".into(), c1.clone()),
            ("C2".into(), c2.clone()),
            ("C".into(), combined),
        ],
        claim: Claim {
            description: "the combination has a frozen variable iff exactly one input is \
                          satisfiable"
                .into(),
            kind: ClaimKind::SatPair,
        },
    })
}

/// Complement of non-trivial satisfiability as frozen-variable existence:
/// guard the threshold-padded circuit with a clause that excludes models
/// setting all original variables but not all fresh ones.
pub fn satstar_to_efv(c: &Circuit, k: usize) -> Result<GadgetInstance, GadgetError> {
    if c.num_vars() == 0 {
        return Err(GadgetError::NoVariables);
    }
    let base = &c.base;
    let g_table = standard_base(CloneName::S12)[0].clone();
    let t_k = threshold(k);
    let t_template = synthesize(&t_k, base).map_err(|_| {
        GadgetError::MissingCapability("threshold function over the base")
    })?;
    let and_template = synthesize(&and2(), base)
        .map_err(|_| GadgetError::MissingCapability("conjunction over the base"))?;
    let g_template = synthesize(&g_table, base)
        .map_err(|_| GadgetError::MissingCapability("x&(y|!z) over the base"))?;

    let ys: Vec<String> = (0..k)
        .map(|i| fresh_name(&[c.variables()], &format!("y{}", i + 1)))
        .collect();
    let mut builder = CircuitBuilder::new(base.clone());
    for var in c.variables() {
        builder.input(var);
    }
    let args: Vec<usize> = c.variables().iter().map(|v| builder.input(v)).collect();
    let body = builder.splice(c, &args)?;
    // C' = t_k(C, y_1..y_k)
    let mut t_args = vec![body];
    for y in &ys {
        t_args.push(builder.input(y));
    }
    let c_prime = builder.splice(&t_template, &t_args)?;
    // G = C' & ((and of ys) | !(and of xs)) = g(C', and(ys), and(xs))
    let y_gates: Vec<usize> = ys.iter().map(|y| builder.input(y)).collect();
    let and_ys = chain(&mut builder, &and_template, &y_gates)?;
    let x_gates: Vec<usize> = c.variables().iter().map(|v| builder.input(v)).collect();
    let and_xs = chain(&mut builder, &and_template, &x_gates)?;
    let out = builder.splice(&g_template, &[c_prime, and_ys, and_xs])?;
    let gadget = builder.finish(out)?;

    Ok(GadgetInstance {
        name: "satstar-to-efv",
        source: format!("circuit guarded through the {k}-threshold"),
        circuits: vec![("C".into(), c.clone()), ("G".into(), gadget)],
        claim: Claim {
            description: "the guarded circuit has a frozen variable iff the source has no model \
                          besides all-ones; in that case every fresh variable is frozen"
                .into(),
            kind: ClaimKind::SatStarToEfv {
                frozen_candidates: ys,
            },
        },
    })
}

/// Unsatisfiability as the audit property: pad the circuit through a
/// threshold gate over fresh variables.
pub fn audit_gadget(c: &Circuit, k: usize) -> Result<GadgetInstance, GadgetError> {
    let t_k = threshold(k);
    let template = synthesize(&t_k, &c.base).map_err(|e| match e {
        CircuitError::NotInClone => GadgetError::MissingCapability("threshold function"),
        other => GadgetError::Circuit(other),
    })?;
    let fresh: Vec<String> = (0..k)
        .map(|i| fresh_name(&[c.variables()], &format!("w{}", i + 1)))
        .collect();
    let mut builder = CircuitBuilder::new(c.base.clone());
    for var in c.variables() {
        builder.input(var);
    }
    let args: Vec<usize> = c.variables().iter().map(|v| builder.input(v)).collect();
    let body = builder.splice(c, &args)?;
    let mut t_args = vec![body];
    for w in &fresh {
        t_args.push(builder.input(w));
    }
    let out = builder.splice(&template, &t_args)?;
    let padded = builder.finish(out)?;

    Ok(GadgetInstance {
        name: "audit",
        source: format!("circuit padded through the {k}-threshold"),
        circuits: vec![("C".into(), c.clone()), ("C'".into(), padded)],
        claim: Claim {
            description: "the source is unsatisfiable iff the padded circuit has a frozen \
                          variable or none of its assignments is a model"
                .into(),
            kind: ClaimKind::AuditReduction { fresh },
        },
    })
}

/// Model-count-preserving elimination of the constant 1 for circuits over
/// the negated-implication base.
pub fn usat_const_elim(c: &Circuit) -> Result<GadgetInstance, GadgetError> {
    let nimpl = TruthTable::from_fn(2, |a| a[0] && !a[1]);
    require_tables(&c.base, &[nimpl.clone(), TruthTable::constant(true)], "x&!y, 1")?;
    let x = fresh_name(&[c.variables()], "x");
    let const_name = constant_function_name(&c.base, true)
        .ok_or(GadgetError::MissingCapability("the constant 1"))?;
    let replaced = c.replace_function_with_variable(&const_name, &x)?;
    let and_template = synthesize(&and2(), &replaced.base)
        .map_err(|_| GadgetError::MissingCapability("conjunction over the base"))?;
    let mut builder = CircuitBuilder::new(replaced.base.clone());
    for var in c.variables() {
        builder.input(var);
    }
    let x_gate = builder.input(&x);
    let args: Vec<usize> = replaced
        .variables()
        .iter()
        .map(|var| builder.input(var))
        .collect();
    let body = builder.splice(&replaced, &args)?;
    let out = builder.splice(&and_template, &[body, x_gate])?;
    let result = builder.finish(out)?;

    Ok(GadgetInstance {
        name: "usat-const-elim",
        source: "circuit over the negated-implication base with the constant 1".into(),
        circuits: vec![("C".into(), c.clone()), ("C'".into(), result)],
        claim: Claim {
            description: "the rewritten circuit has exactly as many models as the source".into(),
            kind: ClaimKind::UsatCount,
        },
    })
}
