//! Decision procedures: satisfiability variants, equivalence, isomorphism,
//! frozen variables, audit, unique satisfiability, and dominant pairs.
//!
//! Each operation dispatches on the clone of the circuit's base. Clones with
//! a published polynomial algorithm take that path; everything else falls
//! back to an exhaustive scan bounded by [`crate::brute_limit`]. The
//! brute-force variants are also exported directly so differential tests can
//! compare both paths.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::boolfn::TruthTable;
use crate::circuit::{Assignment, Circuit, CircuitError};
use crate::clones::{self, CloneName, Family};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecideError {
    #[error("operation needs a base within {needed}, clone is {got}")]
    WrongClone { needed: &'static str, got: CloneName },
    #[error(transparent)]
    Circuit(#[from] CircuitError),
    #[error("the queried variable set is empty")]
    EmptyVariableSet,
    #[error("dominant pair needs two distinct variables, got `{0}` twice")]
    SameVariable(String),
    #[error("variable `{0}` does not appear in the circuit")]
    UnknownVariable(String),
    #[error("isomorphism fallback supports at most {limit} variables, got {vars}")]
    IsoLimit { vars: usize, limit: usize },
}

/// Which algorithm produced a decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    NormalForm,
    MonotoneProbe,
    SelfDualCount,
    ComplementPairing,
    OnesProbe,
    SeparationRule,
    CanonicalForm,
    BruteForce,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Assignment(String),
    Variables(Vec<String>),
}

/// Outcome of a decision operation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub answer: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub method: Method,
}

impl Decision {
    fn new(answer: bool, method: Method) -> Self {
        Decision {
            answer,
            witness: None,
            method,
        }
    }

    fn with_assignment(mut self, a: &Assignment) -> Self {
        self.witness = Some(Witness::Assignment(a.to_string()));
        self
    }

    fn with_variables(mut self, vars: Vec<String>) -> Self {
        self.witness = Some(Witness::Variables(vars));
        self
    }
}

/// The coefficient form computed for circuits over V, E, or L bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub kind: FormKind,
    pub a0: bool,
    /// One coefficient per circuit variable, in variable order.
    pub coeffs: Vec<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormKind {
    Or,
    And,
    Xor,
}

impl NormalForm {
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c).count()
    }

    /// Re-evaluate the form on raw bits in variable order.
    pub fn eval(&self, bits: &[bool]) -> bool {
        match self.kind {
            FormKind::Or => {
                self.a0
                    || self
                        .coeffs
                        .iter()
                        .zip(bits)
                        .any(|(&c, &b)| c && b)
            }
            FormKind::And => {
                self.a0
                    && self
                        .coeffs
                        .iter()
                        .zip(bits)
                        .all(|(&c, &b)| !c || b)
            }
            FormKind::Xor => {
                let parity = self
                    .coeffs
                    .iter()
                    .zip(bits)
                    .filter(|(&c, &b)| c && b)
                    .count()
                    % 2
                    == 1;
                self.a0 ^ parity
            }
        }
    }
}

/// Clone-derived dispatch route for a base.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Route {
    OrForm,
    AndForm,
    XorForm,
    Monotone,
    SelfDual,
    ZeroSeparatingTwo,
    OnesReproducing,
    Hard,
}

pub(crate) fn route_of(c: CloneName) -> Vec<Route> {
    let mut routes = Vec::new();
    let within = |outer| clones::includes(outer, c);
    if within(CloneName::V) {
        routes.push(Route::OrForm);
    }
    if within(CloneName::E) {
        routes.push(Route::AndForm);
    }
    if within(CloneName::L) {
        routes.push(Route::XorForm);
    }
    if within(CloneName::D) {
        routes.push(Route::SelfDual);
    }
    if within(CloneName::Fam(Family::S0n, 2)) {
        routes.push(Route::ZeroSeparatingTwo);
    }
    if within(CloneName::R1) {
        routes.push(Route::OnesReproducing);
    }
    if within(CloneName::M) {
        routes.push(Route::Monotone);
    }
    routes.push(Route::Hard);
    routes
}

fn circuit_routes(c: &Circuit) -> Vec<Route> {
    route_of(clones::clone_of(&c.base.tables()))
}

// ---------------------------------------------------------------------------
// Normal forms.

/// Compute a normal form for a circuit whose base clone lies within V, E,
/// or L (tried in that order).
pub fn normal_form(c: &Circuit) -> Result<NormalForm, DecideError> {
    let clone = clones::clone_of(&c.base.tables());
    let kind = if clones::includes(CloneName::V, clone) {
        FormKind::Or
    } else if clones::includes(CloneName::E, clone) {
        FormKind::And
    } else if clones::includes(CloneName::L, clone) {
        FormKind::Xor
    } else {
        return Err(DecideError::WrongClone {
            needed: "V, E, or L",
            got: clone,
        });
    };
    Ok(normal_form_as(c, kind))
}

/// Coefficient probes for a fixed form kind. Callers must know the base
/// clone admits the form; the result is meaningful only then.
pub fn normal_form_as(c: &Circuit, kind: FormKind) -> NormalForm {
    let n = c.num_vars();
    let mut bits = vec![false; n];
    match kind {
        FormKind::Or => {
            let a0 = c.eval_bits(&bits);
            let coeffs = (0..n)
                .map(|i| {
                    if a0 {
                        true
                    } else {
                        bits[i] = true;
                        let v = c.eval_bits(&bits);
                        bits[i] = false;
                        v
                    }
                })
                .collect();
            NormalForm { kind, a0, coeffs }
        }
        FormKind::Xor => {
            let a0 = c.eval_bits(&bits);
            let coeffs = (0..n)
                .map(|i| {
                    bits[i] = true;
                    let v = c.eval_bits(&bits);
                    bits[i] = false;
                    v ^ a0
                })
                .collect();
            NormalForm { kind, a0, coeffs }
        }
        FormKind::And => {
            let mut bits = vec![true; n];
            let a0 = c.eval_bits(&bits);
            let coeffs = (0..n)
                .map(|i| {
                    if !a0 {
                        true
                    } else {
                        bits[i] = false;
                        let v = c.eval_bits(&bits);
                        bits[i] = true;
                        !v
                    }
                })
                .collect();
            NormalForm { kind, a0, coeffs }
        }
    }
}

// ---------------------------------------------------------------------------
// Variable alignment for the two-circuit problems.

struct Aligned {
    vars: Arc<Vec<String>>,
    /// For each circuit, the union position of each of its variables.
    slots: [Vec<usize>; 2],
}

fn align(c1: &Circuit, c2: &Circuit) -> Aligned {
    let mut vars: Vec<String> = c1.variables().to_vec();
    for v in c2.variables() {
        if !vars.contains(v) {
            vars.push(v.clone());
        }
    }
    let slot = |c: &Circuit| -> Vec<usize> {
        c.variables()
            .iter()
            .map(|v| vars.iter().position(|u| u == v).unwrap())
            .collect()
    };
    Aligned {
        slots: [slot(c1), slot(c2)],
        vars: Arc::new(vars),
    }
}

impl Aligned {
    fn project(&self, which: usize, union_bits: &[bool]) -> Vec<bool> {
        self.slots[which].iter().map(|&i| union_bits[i]).collect()
    }

    /// Coefficient map over union variables for one circuit's form; vars the
    /// circuit lacks are fictive and carry coefficient 0 (or 1 in the
    /// absorbed And case, matching the form's convention for own vars).
    fn union_coeffs(&self, which: usize, form: &NormalForm) -> BTreeMap<usize, bool> {
        let mut m: BTreeMap<usize, bool> = BTreeMap::new();
        for (i, _) in self.vars.iter().enumerate() {
            let absorbed = match form.kind {
                FormKind::Or => form.a0,
                FormKind::And => !form.a0,
                FormKind::Xor => false,
            };
            m.insert(i, absorbed);
        }
        for (own, &slot) in self.slots[which].iter().enumerate() {
            m.insert(slot, form.coeffs[own]);
        }
        m
    }
}

fn union_form_kind(c1: &Circuit, c2: &Circuit) -> Option<FormKind> {
    let mut tables = c1.base.tables();
    tables.extend(c2.base.tables());
    let clone = clones::clone_of(&tables);
    if clones::includes(CloneName::V, clone) {
        Some(FormKind::Or)
    } else if clones::includes(CloneName::E, clone) {
        Some(FormKind::And)
    } else if clones::includes(CloneName::L, clone) {
        Some(FormKind::Xor)
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// Equivalence and isomorphism.

/// Do the two circuits compute the same function over the union of their
/// variables?
pub fn equivalent(c1: &Circuit, c2: &Circuit) -> Result<Decision, DecideError> {
    let aligned = align(c1, c2);
    if let Some(kind) = union_form_kind(c1, c2) {
        let f1 = normal_form_as(c1, kind);
        let f2 = normal_form_as(c2, kind);
        let u1 = aligned.union_coeffs(0, &f1);
        let u2 = aligned.union_coeffs(1, &f2);
        let equal = match kind {
            FormKind::Or => (f1.a0 && f2.a0) || (!f1.a0 && !f2.a0 && u1 == u2),
            FormKind::And => (!f1.a0 && !f2.a0) || (f1.a0 && f2.a0 && u1 == u2),
            FormKind::Xor => f1.a0 == f2.a0 && u1 == u2,
        };
        let mut d = Decision::new(equal, Method::NormalForm);
        if !equal {
            let bits = distinguishing_bits(kind, &f1, &f2, &u1, &u2, aligned.vars.len());
            let a = Assignment::new(Arc::clone(&aligned.vars), bits.clone());
            debug_assert_ne!(
                c1.eval_bits(&aligned.project(0, &bits)),
                c2.eval_bits(&aligned.project(1, &bits))
            );
            d = d.with_assignment(&a);
        }
        return Ok(d);
    }
    equivalent_bruteforce(c1, c2)
}

fn distinguishing_bits(
    kind: FormKind,
    f1: &NormalForm,
    f2: &NormalForm,
    u1: &BTreeMap<usize, bool>,
    u2: &BTreeMap<usize, bool>,
    n: usize,
) -> Vec<bool> {
    match kind {
        FormKind::Or | FormKind::Xor => {
            if f1.a0 != f2.a0 {
                return vec![false; n];
            }
            let v = (0..n).find(|i| u1[i] != u2[i]).expect("forms differ");
            let mut bits = vec![false; n];
            bits[v] = true;
            bits
        }
        FormKind::And => {
            if f1.a0 != f2.a0 {
                return vec![true; n];
            }
            let v = (0..n).find(|i| u1[i] != u2[i]).expect("forms differ");
            let mut bits = vec![true; n];
            bits[v] = false;
            bits
        }
    }
}

/// Exhaustive equivalence check over the union variables.
pub fn equivalent_bruteforce(c1: &Circuit, c2: &Circuit) -> Result<Decision, DecideError> {
    let aligned = align(c1, c2);
    let n = aligned.vars.len();
    let limit = crate::brute_limit();
    if n > limit {
        return Err(DecideError::Circuit(CircuitError::VariableLimit {
            vars: n,
            limit,
        }));
    }
    let mut bits = vec![false; n];
    for counter in 0..1u64 << n {
        for (j, b) in bits.iter_mut().enumerate() {
            *b = (counter >> (n - 1 - j)) & 1 == 1;
        }
        let v1 = c1.eval_bits(&aligned.project(0, &bits));
        let v2 = c2.eval_bits(&aligned.project(1, &bits));
        if v1 != v2 {
            let a = Assignment::new(Arc::clone(&aligned.vars), bits);
            return Ok(Decision::new(false, Method::BruteForce).with_assignment(&a));
        }
    }
    Ok(Decision::new(true, Method::BruteForce))
}

/// Can the circuits be made equivalent by permuting variables?
pub fn isomorphic(c1: &Circuit, c2: &Circuit) -> Result<Decision, DecideError> {
    if let Some(kind) = union_form_kind(c1, c2) {
        let f1 = normal_form_as(c1, kind);
        let f2 = normal_form_as(c2, kind);
        // Fictive union variables add zero coefficients on both sides, so
        // own-variable weights need no union adjustment beyond the absorbed
        // constant cases.
        let iso = match kind {
            FormKind::Or => (f1.a0 && f2.a0) || (!f1.a0 && !f2.a0 && f1.weight() == f2.weight()),
            FormKind::And => {
                (!f1.a0 && !f2.a0) || (f1.a0 && f2.a0 && f1.weight() == f2.weight())
            }
            FormKind::Xor => f1.a0 == f2.a0 && f1.weight() == f2.weight(),
        };
        return Ok(Decision::new(iso, Method::NormalForm));
    }
    isomorphic_canonical(c1, c2)
}

const ISO_FALLBACK_LIMIT: usize = 8;

/// Canonical-form isomorphism over the union variables: lexicographically
/// least truth table across variable permutations, pruned by per-variable
/// solution-weight profiles.
pub fn isomorphic_canonical(c1: &Circuit, c2: &Circuit) -> Result<Decision, DecideError> {
    let aligned = align(c1, c2);
    let n = aligned.vars.len();
    if n > ISO_FALLBACK_LIMIT {
        return Err(DecideError::IsoLimit {
            vars: n,
            limit: ISO_FALLBACK_LIMIT,
        });
    }
    let t1 = union_table(c1, &aligned, 0);
    let t2 = union_table(c2, &aligned, 1);
    let answer = canonical_table(&t1) == canonical_table(&t2);
    Ok(Decision::new(answer, Method::CanonicalForm))
}

fn union_table(c: &Circuit, aligned: &Aligned, which: usize) -> TruthTable {
    let n = aligned.vars.len();
    TruthTable::from_fn(n, |args| c.eval_bits(&aligned.project(which, args)))
}

/// Representative truth table of the isomorphism class: minimal over the
/// permutations that sort the solution-weight profile; permutations across
/// different profiles can never map one circuit onto the other.
fn canonical_table(t: &TruthTable) -> TruthTable {
    let n = t.arity();
    let profile: Vec<usize> = (0..n)
        .map(|j| (0..t.size()).filter(|&i| t.bit(i) && (i >> j) & 1 == 1).count())
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&j| profile[j]);
    // Group positions whose profiles tie; permute freely inside groups.
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &j in &order {
        match groups.last_mut() {
            Some(g) if profile[g[0]] == profile[j] => g.push(j),
            _ => groups.push(vec![j]),
        }
    }
    let mut best: Option<TruthTable> = None;
    let mut perm = vec![0usize; n];
    permute_groups(&groups, 0, &mut Vec::new(), &mut |arrangement| {
        // arrangement[k] = original variable moved to position k; the
        // resulting table then carries an ascending profile, so candidates
        // range over exactly the class members with sorted profiles.
        for (k, &orig) in arrangement.iter().enumerate() {
            perm[orig] = k;
        }
        let candidate = apply_perm(t, &perm);
        match &best {
            Some(b) if b.lex_cmp(&candidate) != std::cmp::Ordering::Greater => {}
            _ => best = Some(candidate),
        }
    });
    best.unwrap_or_else(|| t.clone())
}

fn permute_groups(
    groups: &[Vec<usize>],
    gi: usize,
    acc: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if gi == groups.len() {
        emit(acc);
        return;
    }
    let group = &groups[gi];
    let mut items = group.clone();
    permutations(&mut items, 0, &mut |p| {
        let len = acc.len();
        acc.extend_from_slice(p);
        permute_groups(groups, gi + 1, acc, emit);
        acc.truncate(len);
    });
}

fn permutations(items: &mut Vec<usize>, k: usize, emit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        emit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, emit);
        items.swap(k, i);
    }
}

/// Table of `f(x_{perm[0]}, ..., x_{perm[n-1]})`.
fn apply_perm(t: &TruthTable, perm: &[usize]) -> TruthTable {
    TruthTable::from_fn(t.arity(), |args| {
        let permuted: Vec<bool> = perm.iter().map(|&p| args[p]).collect();
        t.eval(&permuted).expect("same arity")
    })
}

// ---------------------------------------------------------------------------
// Satisfiability variants.

fn ones(c: &Circuit) -> Vec<bool> {
    vec![true; c.num_vars()]
}

/// Satisfiability, dispatching to the clone's easy certificate when one
/// exists.
pub fn sat(c: &Circuit) -> Result<Decision, DecideError> {
    for route in circuit_routes(c) {
        match route {
            Route::SelfDual | Route::ZeroSeparatingTwo => {
                // One of any complementary pair satisfies.
                let method = if route == Route::SelfDual {
                    Method::SelfDualCount
                } else {
                    Method::ComplementPairing
                };
                let n = c.num_vars();
                let probe = vec![false; n];
                if c.eval_bits(&probe) {
                    let a = Assignment::new(c.variables_arc(), probe);
                    return Ok(Decision::new(true, method).with_assignment(&a));
                }
                let comp = vec![true; n];
                if c.eval_bits(&comp) {
                    let a = Assignment::new(c.variables_arc(), comp);
                    return Ok(Decision::new(true, method).with_assignment(&a));
                }
                debug_assert!(n == 0, "complementary pair must contain a solution");
                return Ok(Decision::new(false, method));
            }
            Route::OnesReproducing | Route::Monotone => {
                let method = if route == Route::Monotone {
                    Method::MonotoneProbe
                } else {
                    Method::OnesProbe
                };
                let probe = ones(c);
                let v = c.eval_bits(&probe);
                let mut d = Decision::new(v, method);
                if v {
                    d = d.with_assignment(&Assignment::new(c.variables_arc(), probe));
                }
                return Ok(d);
            }
            Route::XorForm => {
                let f = normal_form_as(c, FormKind::Xor);
                let mut d = Decision::new(f.a0 || f.weight() > 0, Method::NormalForm);
                if d.answer {
                    let mut bits = vec![false; c.num_vars()];
                    if !f.a0 {
                        let i = f.coeffs.iter().position(|&b| b).unwrap();
                        bits[i] = true;
                    }
                    debug_assert!(c.eval_bits(&bits));
                    d = d.with_assignment(&Assignment::new(c.variables_arc(), bits));
                }
                return Ok(d);
            }
            Route::OrForm | Route::AndForm => continue, // subsumed by Monotone
            Route::Hard => break,
        }
    }
    let model = c.sat_bruteforce()?;
    let mut d = Decision::new(model.is_some(), Method::BruteForce);
    if let Some(a) = model {
        d = d.with_assignment(&a);
    }
    Ok(d)
}

/// Satisfiability by an assignment other than all-ones.
pub fn sat_star(c: &Circuit) -> Result<Decision, DecideError> {
    let n = c.num_vars();
    for route in circuit_routes(c) {
        match route {
            Route::Monotone => {
                for i in 0..n {
                    let mut bits = ones(c);
                    bits[i] = false;
                    if c.eval_bits(&bits) {
                        let a = Assignment::new(c.variables_arc(), bits);
                        return Ok(
                            Decision::new(true, Method::MonotoneProbe).with_assignment(&a)
                        );
                    }
                }
                return Ok(Decision::new(false, Method::MonotoneProbe));
            }
            Route::XorForm => {
                let f = normal_form_as(c, FormKind::Xor);
                let w = f.weight();
                let (answer, witness) = if w == 0 {
                    if f.a0 && n >= 1 {
                        (true, Some(vec![false; n]))
                    } else {
                        (false, None)
                    }
                } else if f.a0 {
                    // All-zero is a model distinct from all-ones when n >= 1.
                    (true, Some(vec![false; n]))
                } else {
                    // Models set an odd number of coefficient variables; one
                    // distinct from all-ones exists unless n == 1.
                    if n == 1 {
                        (false, None)
                    } else {
                        let i = f.coeffs.iter().position(|&b| b).unwrap();
                        let mut bits = vec![false; n];
                        bits[i] = true;
                        (true, Some(bits))
                    }
                };
                let mut d = Decision::new(answer, Method::NormalForm);
                if let Some(bits) = witness {
                    debug_assert!(c.eval_bits(&bits) && bits.iter().any(|&b| !b));
                    d = d.with_assignment(&Assignment::new(c.variables_arc(), bits));
                }
                return Ok(d);
            }
            Route::SelfDual | Route::ZeroSeparatingTwo => {
                let method = if route == Route::SelfDual {
                    Method::SelfDualCount
                } else {
                    Method::ComplementPairing
                };
                if n == 0 {
                    return Ok(Decision::new(false, method));
                }
                if n == 1 {
                    let v = c.eval_bits(&[false]);
                    let mut d = Decision::new(v, method);
                    if v {
                        d = d.with_assignment(&Assignment::new(
                            c.variables_arc(),
                            vec![false],
                        ));
                    }
                    return Ok(d);
                }
                // A complementary pair avoiding all-ones always exists.
                let mut probe = vec![false; n];
                probe[n - 1] = true;
                let bits = if c.eval_bits(&probe) {
                    probe
                } else {
                    probe.iter().map(|&b| !b).collect()
                };
                debug_assert!(c.eval_bits(&bits));
                let a = Assignment::new(c.variables_arc(), bits);
                return Ok(Decision::new(true, method).with_assignment(&a));
            }
            Route::OrForm | Route::AndForm | Route::OnesReproducing => continue,
            Route::Hard => break,
        }
    }
    sat_star_bruteforce(c)
}

pub fn sat_star_bruteforce(c: &Circuit) -> Result<Decision, DecideError> {
    let mut found: Option<Assignment> = None;
    c.for_each_assignment(|bits, v| {
        if v && found.is_none() && bits.iter().any(|&b| !b) {
            found = Some(Assignment::new(c.variables_arc(), bits.to_vec()));
        }
    })?;
    let mut d = Decision::new(found.is_some(), Method::BruteForce);
    if let Some(a) = found {
        d = d.with_assignment(&a);
    }
    Ok(d)
}

// ---------------------------------------------------------------------------
// Frozen variables, audit, unique satisfiability.

fn check_vars(_c: &Circuit, vars: &[String]) -> Result<(), DecideError> {
    if vars.is_empty() {
        return Err(DecideError::EmptyVariableSet);
    }
    Ok(())
}

/// Is every variable in `vars` frozen (same value in every model, circuit
/// satisfiable)? Variables missing from the circuit are never frozen.
pub fn frozen(c: &Circuit, vars: &[String]) -> Result<Decision, DecideError> {
    check_vars(c, vars)?;
    if let Some(missing) = vars.iter().find(|v| !c.variables().contains(v)) {
        return Ok(Decision::new(false, Method::SeparationRule)
            .with_variables(vec![missing.clone()]));
    }
    for route in circuit_routes(c) {
        match route {
            Route::Monotone => {
                let all_ones = ones(c);
                if !c.eval_bits(&all_ones) {
                    return Ok(Decision::new(false, Method::MonotoneProbe));
                }
                for v in vars {
                    let i = c.variables().iter().position(|u| u == v).unwrap();
                    let mut bits = ones(c);
                    bits[i] = false;
                    if c.eval_bits(&bits) {
                        return Ok(Decision::new(false, Method::MonotoneProbe)
                            .with_variables(vec![v.clone()]));
                    }
                }
                return Ok(Decision::new(true, Method::MonotoneProbe)
                    .with_variables(vars.to_vec()));
            }
            Route::XorForm => {
                let f = normal_form_as(c, FormKind::Xor);
                if f.weight() == 0 && !f.a0 {
                    return Ok(Decision::new(false, Method::NormalForm)); // unsatisfiable
                }
                if f.weight() != 1 {
                    return Ok(Decision::new(false, Method::NormalForm));
                }
                let i = f.coeffs.iter().position(|&b| b).unwrap();
                let frozen_var = &c.variables()[i];
                let answer = vars.iter().all(|v| v == frozen_var);
                let mut d = Decision::new(answer, Method::NormalForm);
                if answer {
                    d = d.with_variables(vars.to_vec());
                }
                return Ok(d);
            }
            Route::Hard => break,
            _ => continue,
        }
    }
    frozen_bruteforce(c, vars)
}

pub fn frozen_bruteforce(c: &Circuit, vars: &[String]) -> Result<Decision, DecideError> {
    check_vars(c, vars)?;
    let frozen_set = brute_frozen_set(c)?;
    let answer = match &frozen_set {
        None => false, // unsatisfiable
        Some(set) => vars.iter().all(|v| set.contains(v)),
    };
    Ok(Decision::new(answer, Method::BruteForce))
}

/// All frozen variables, or None when the circuit is unsatisfiable.
fn brute_frozen_set(c: &Circuit) -> Result<Option<Vec<String>>, DecideError> {
    let n = c.num_vars();
    let mut seen_model = false;
    let mut always = vec![true; n];
    let mut value = vec![false; n];
    c.for_each_assignment(|bits, v| {
        if !v {
            return;
        }
        if !seen_model {
            seen_model = true;
            value.copy_from_slice(bits);
        } else {
            for i in 0..n {
                if bits[i] != value[i] {
                    always[i] = false;
                }
            }
        }
    })?;
    if !seen_model {
        return Ok(None);
    }
    Ok(Some(
        (0..n)
            .filter(|&i| always[i])
            .map(|i| c.variables()[i].clone())
            .collect(),
    ))
}

/// Does the circuit have any frozen variable?
pub fn exists_frozen(c: &Circuit) -> Result<Decision, DecideError> {
    let clone = clones::clone_of(&c.base.tables());
    for route in route_of(clone) {
        match route {
            Route::Monotone => {
                let all_ones = ones(c);
                if !c.eval_bits(&all_ones) {
                    return Ok(Decision::new(false, Method::MonotoneProbe));
                }
                let mut found = Vec::new();
                for i in 0..c.num_vars() {
                    let mut bits = ones(c);
                    bits[i] = false;
                    if !c.eval_bits(&bits) {
                        found.push(c.variables()[i].clone());
                    }
                }
                let mut d = Decision::new(!found.is_empty(), Method::MonotoneProbe);
                if !found.is_empty() {
                    d = d.with_variables(found);
                }
                return Ok(d);
            }
            Route::XorForm => {
                let f = normal_form_as(c, FormKind::Xor);
                let answer = f.weight() == 1;
                let mut d = Decision::new(answer, Method::NormalForm);
                if answer {
                    let i = f.coeffs.iter().position(|&b| b).unwrap();
                    d = d.with_variables(vec![c.variables()[i].clone()]);
                }
                return Ok(d);
            }
            Route::Hard => break,
            _ => continue,
        }
    }
    // Fully 1-separating bases: satisfiable iff a frozen variable exists,
    // and every circuit is satisfiable when the base is also 1-reproducing.
    if clones::includes(CloneName::S12, clone) {
        return Ok(Decision::new(true, Method::SeparationRule));
    }
    exists_frozen_bruteforce(c)
}

pub fn exists_frozen_bruteforce(c: &Circuit) -> Result<Decision, DecideError> {
    let set = brute_frozen_set(c)?;
    Ok(match set {
        None => Decision::new(false, Method::BruteForce),
        Some(vars) if vars.is_empty() => Decision::new(false, Method::BruteForce),
        Some(vars) => Decision::new(true, Method::BruteForce).with_variables(vars),
    })
}

/// Does the circuit have a frozen variable or no model at all?
pub fn audit(c: &Circuit) -> Result<Decision, DecideError> {
    let clone = clones::clone_of(&c.base.tables());
    for route in route_of(clone) {
        match route {
            Route::Monotone => {
                if !c.eval_bits(&ones(c)) {
                    return Ok(Decision::new(true, Method::MonotoneProbe)); // unsatisfiable
                }
                let efv = exists_frozen(c)?;
                return Ok(Decision::new(efv.answer, Method::MonotoneProbe));
            }
            Route::XorForm => {
                let f = normal_form_as(c, FormKind::Xor);
                let unsat = f.weight() == 0 && !f.a0;
                return Ok(Decision::new(unsat || f.weight() == 1, Method::NormalForm));
            }
            Route::Hard => break,
            _ => continue,
        }
    }
    if clones::includes(CloneName::S1, clone) {
        // Unsatisfiable or fully 1-separating with a shared 1-coordinate.
        return Ok(Decision::new(true, Method::SeparationRule));
    }
    audit_bruteforce(c)
}

pub fn audit_bruteforce(c: &Circuit) -> Result<Decision, DecideError> {
    let set = brute_frozen_set(c)?;
    Ok(match set {
        None => Decision::new(true, Method::BruteForce),
        Some(vars) => {
            let mut d = Decision::new(!vars.is_empty(), Method::BruteForce);
            if !vars.is_empty() {
                d = d.with_variables(vars);
            }
            d
        }
    })
}

/// Exactly one satisfying assignment?
pub fn unique_sat(c: &Circuit) -> Result<Decision, DecideError> {
    let n = c.num_vars();
    for route in circuit_routes(c) {
        match route {
            Route::Monotone => {
                if !c.eval_bits(&ones(c)) {
                    return Ok(Decision::new(false, Method::MonotoneProbe));
                }
                for i in 0..n {
                    let mut bits = ones(c);
                    bits[i] = false;
                    if c.eval_bits(&bits) {
                        return Ok(Decision::new(false, Method::MonotoneProbe));
                    }
                }
                let a = Assignment::new(c.variables_arc(), ones(c));
                return Ok(Decision::new(true, Method::MonotoneProbe).with_assignment(&a));
            }
            Route::XorForm => {
                let f = normal_form_as(c, FormKind::Xor);
                let w = f.weight();
                // Model count is 0, 2^{n-1}, or 2^n.
                let answer = if w == 0 {
                    f.a0 && n == 0
                } else {
                    n == 1
                };
                let mut d = Decision::new(answer, Method::NormalForm);
                if answer && n == 1 {
                    let bits = vec![!f.a0];
                    debug_assert!(c.eval_bits(&bits));
                    d = d.with_assignment(&Assignment::new(c.variables_arc(), bits));
                } else if answer {
                    d = d.with_assignment(&Assignment::new(c.variables_arc(), vec![]));
                }
                return Ok(d);
            }
            Route::SelfDual | Route::ZeroSeparatingTwo => {
                let method = if route == Route::SelfDual {
                    Method::SelfDualCount
                } else {
                    Method::ComplementPairing
                };
                if n >= 2 {
                    // At least 2^{n-1} >= 2 models.
                    return Ok(Decision::new(false, method));
                }
                return unique_sat_bruteforce(c);
            }
            Route::Hard => break,
            _ => continue,
        }
    }
    unique_sat_bruteforce(c)
}

pub fn unique_sat_bruteforce(c: &Circuit) -> Result<Decision, DecideError> {
    let mut count = 0u64;
    let mut model: Option<Assignment> = None;
    c.for_each_assignment(|bits, v| {
        if v {
            count += 1;
            if count == 1 {
                model = Some(Assignment::new(c.variables_arc(), bits.to_vec()));
            }
        }
    })?;
    let mut d = Decision::new(count == 1, Method::BruteForce);
    if count == 1 {
        d = d.with_assignment(&model.unwrap());
    }
    Ok(d)
}

// ---------------------------------------------------------------------------
// Dominant pairs.

/// Is `{s, t}` dominant: every assignment with `s = t = 1` satisfies the
/// circuit and every assignment with `s = t = 0` falsifies it?
pub fn is_dominant_pair(c: &Circuit, s: &str, t: &str) -> Result<bool, DecideError> {
    if s == t {
        return Err(DecideError::SameVariable(s.to_string()));
    }
    let si = c
        .variables()
        .iter()
        .position(|v| v == s)
        .ok_or_else(|| DecideError::UnknownVariable(s.to_string()))?;
    let ti = c
        .variables()
        .iter()
        .position(|v| v == t)
        .ok_or_else(|| DecideError::UnknownVariable(t.to_string()))?;
    let mut dominant = true;
    c.for_each_assignment(|bits, v| {
        if bits[si] == bits[ti] && v != bits[si] {
            dominant = false;
        }
    })?;
    Ok(dominant)
}
