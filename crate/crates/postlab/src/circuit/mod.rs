//! Gate-level circuits over a named basis: the data model, evaluation,
//! substitution, brute-force solving, and base-to-base conversion.

mod dsl;
mod synth;

pub use dsl::{parse, parse_formula};
pub use synth::{convert, synthesize};

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::boolfn::TruthTable;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CircuitError {
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("gate `{gate}` expects {expected} arguments, got {got}")]
    ArityMismatch {
        gate: String,
        expected: usize,
        got: usize,
    },
    #[error("assignment covers {got} variables, circuit has {expected}")]
    AssignmentMismatch { expected: usize, got: usize },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("circuit has {vars} variables, over the scan limit of {limit}")]
    VariableLimit { vars: usize, limit: usize },
    #[error("target function is not in the clone generated by the base")]
    NotInClone,
    #[error("synthesis supports target arity <= 4, got {0}")]
    SynthesisArity(usize),
    #[error("base of the source circuit is not included in the target base's clone")]
    BaseNotIncluded,
    #[error("duplicate function name `{0}` in base")]
    DuplicateFunction(String),
    #[error("base function `{0}` not present in target base")]
    MissingFunction(String),
}

/// An ordered, named set of gate functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Base {
    funcs: Vec<(String, TruthTable)>,
}

impl Base {
    pub fn new(funcs: Vec<(String, TruthTable)>) -> Result<Self, CircuitError> {
        for (i, (name, _)) in funcs.iter().enumerate() {
            if funcs[..i].iter().any(|(n, _)| n == name) {
                return Err(CircuitError::DuplicateFunction(name.clone()));
            }
        }
        Ok(Base { funcs })
    }

    /// Base with functions auto-named `f0`, `f1`, ...
    pub fn from_tables(tables: &[TruthTable]) -> Self {
        Base {
            funcs: tables
                .iter()
                .enumerate()
                .map(|(i, t)| (format!("f{i}"), t.clone()))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.funcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.funcs.is_empty()
    }

    pub fn function(&self, idx: usize) -> &TruthTable {
        &self.funcs[idx].1
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.funcs[idx].0
    }

    pub fn lookup(&self, name: &str) -> Option<usize> {
        self.funcs.iter().position(|(n, _)| n == name)
    }

    pub fn tables(&self) -> Vec<TruthTable> {
        self.funcs.iter().map(|(_, t)| t.clone()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &TruthTable)> {
        self.funcs.iter().map(|(n, t)| (n.as_str(), t))
    }

    /// Index of a 0-ary constant, appending one if the base lacks it.
    pub fn ensure_constant(&mut self, c: bool) -> usize {
        if let Some(idx) = self
            .funcs
            .iter()
            .position(|(_, t)| t.arity() == 0 && t.bit(0) == c)
        {
            return idx;
        }
        let mut name = if c { "ONE".to_string() } else { "ZERO".to_string() };
        while self.lookup(&name).is_some() {
            name.push('_');
        }
        self.funcs.push((name, TruthTable::constant(c)));
        self.funcs.len() - 1
    }
}

/// A gate: either an input for a variable or an application of a base
/// function to earlier gates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Gate {
    Input(usize),
    Apply { func: usize, args: Vec<usize> },
}

/// A circuit over a base: an acyclic gate list in topological order
/// (children strictly precede their gate) with a distinguished output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    pub base: Base,
    variables: Arc<Vec<String>>,
    gates: Vec<Gate>,
    output: usize,
}

/// A total assignment to a circuit's variables, in variable-list order.
/// Ordering is lexicographic with the first variable most significant and
/// 0 before 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Assignment {
    vars: Arc<Vec<String>>,
    bits: Vec<bool>,
}

impl Assignment {
    pub fn new(vars: Arc<Vec<String>>, bits: Vec<bool>) -> Self {
        assert_eq!(vars.len(), bits.len());
        Assignment { vars, bits }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn get(&self, var: &str) -> Option<bool> {
        self.vars.iter().position(|v| v == var).map(|i| self.bits[i])
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Count of positions carrying the value `a`.
    pub fn count_value(&self, a: bool) -> usize {
        self.bits.iter().filter(|&&b| b == a).count()
    }

    /// The complementary assignment.
    pub fn complement(&self) -> Assignment {
        Assignment {
            vars: Arc::clone(&self.vars),
            bits: self.bits.iter().map(|&b| !b).collect(),
        }
    }

    /// Componentwise order.
    pub fn leq(&self, other: &Assignment) -> bool {
        self.bits
            .iter()
            .zip(other.bits.iter())
            .all(|(&a, &b)| a <= b)
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// Replacement target for substitution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Replacement {
    Constant(bool),
    Variable(String),
}

impl Circuit {
    pub fn new(
        base: Base,
        variables: Vec<String>,
        gates: Vec<Gate>,
        output: usize,
    ) -> Result<Self, CircuitError> {
        let c = Circuit {
            base,
            variables: Arc::new(variables),
            gates,
            output,
        };
        c.check()?;
        Ok(c)
    }

    fn check(&self) -> Result<(), CircuitError> {
        for (i, g) in self.gates.iter().enumerate() {
            match g {
                Gate::Input(v) => {
                    if *v >= self.variables.len() {
                        return Err(CircuitError::UnknownVariable(format!("#{v}")));
                    }
                }
                Gate::Apply { func, args } => {
                    let t = self.base.function(*func);
                    if t.arity() != args.len() {
                        return Err(CircuitError::ArityMismatch {
                            gate: format!("#{i}"),
                            expected: t.arity(),
                            got: args.len(),
                        });
                    }
                    if args.iter().any(|&a| a >= i) {
                        return Err(CircuitError::Parse {
                            line: 0,
                            col: 0,
                            msg: format!("gate #{i} references a later gate"),
                        });
                    }
                }
            }
        }
        if self.output >= self.gates.len() {
            return Err(CircuitError::Parse {
                line: 0,
                col: 0,
                msg: "output gate out of range".into(),
            });
        }
        Ok(())
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn variables_arc(&self) -> Arc<Vec<String>> {
        Arc::clone(&self.variables)
    }

    pub fn num_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn output(&self) -> usize {
        self.output
    }

    /// Number of non-input gates.
    pub fn size(&self) -> usize {
        self.gates
            .iter()
            .filter(|g| matches!(g, Gate::Apply { .. }))
            .count()
    }

    /// Assignment from a bit vector in variable order.
    pub fn assignment(&self, bits: &[bool]) -> Result<Assignment, CircuitError> {
        if bits.len() != self.num_vars() {
            return Err(CircuitError::AssignmentMismatch {
                expected: self.num_vars(),
                got: bits.len(),
            });
        }
        Ok(Assignment::new(self.variables_arc(), bits.to_vec()))
    }

    /// The value computed at the output gate.
    pub fn evaluate(&self, assignment: &Assignment) -> Result<bool, CircuitError> {
        if assignment.bits.len() != self.num_vars() {
            return Err(CircuitError::AssignmentMismatch {
                expected: self.num_vars(),
                got: assignment.bits.len(),
            });
        }
        Ok(self.eval_bits(&assignment.bits))
    }

    /// Evaluation on raw bits in variable order; positions beyond the
    /// variable count are ignored.
    pub fn eval_bits(&self, bits: &[bool]) -> bool {
        debug_assert!(bits.len() >= self.num_vars());
        let mut values = vec![false; self.gates.len()];
        let mut args_buf: Vec<bool> = Vec::with_capacity(8);
        for (i, g) in self.gates.iter().enumerate() {
            values[i] = match g {
                Gate::Input(v) => bits[*v],
                Gate::Apply { func, args } => {
                    args_buf.clear();
                    args_buf.extend(args.iter().map(|&a| values[a]));
                    self.base
                        .function(*func)
                        .eval(&args_buf)
                        .expect("arity checked at construction")
                }
            };
        }
        values[self.output]
    }

    /// Replace a variable by a constant or by another variable.
    ///
    /// Constants are realized as 0-ary base functions appended on demand, so
    /// the result is an ordinary circuit over the extended base.
    pub fn substitute(&self, var: &str, replacement: Replacement) -> Result<Circuit, CircuitError> {
        let vi = self
            .variables
            .iter()
            .position(|v| v == var)
            .ok_or_else(|| CircuitError::UnknownVariable(var.to_string()))?;

        let mut base = self.base.clone();
        let mut vars: Vec<String> = self.variables.iter().cloned().collect();
        let mut gates = self.gates.clone();

        match replacement {
            Replacement::Constant(c) => {
                let func = base.ensure_constant(c);
                for g in gates.iter_mut() {
                    if matches!(g, Gate::Input(v) if *v == vi) {
                        *g = Gate::Apply { func, args: vec![] };
                    }
                }
                vars.remove(vi);
            }
            Replacement::Variable(ref new_var) => {
                let existing = vars.iter().position(|v| v == new_var);
                let target = match existing {
                    Some(j) if j == vi => return Ok(self.clone()),
                    Some(j) => {
                        vars.remove(vi);
                        if j > vi {
                            j - 1
                        } else {
                            j
                        }
                    }
                    None => {
                        vars[vi] = new_var.clone();
                        vi
                    }
                };
                for g in gates.iter_mut() {
                    if let Gate::Input(v) = g {
                        if *v == vi {
                            *v = target;
                        } else if existing.is_some() && *v > vi {
                            *v -= 1;
                        }
                    }
                }
            }
        }
        if matches!(replacement, Replacement::Constant(_)) {
            for g in gates.iter_mut() {
                if let Gate::Input(v) = g {
                    if *v > vi {
                        *v -= 1;
                    }
                }
            }
        }
        Circuit::new(base, vars, gates, self.output)
    }

    /// Replace every gate computing the given base function by an input for
    /// a (fresh) variable. Used by the gadget constructions that trade a
    /// constant for a variable.
    pub fn replace_function_with_variable(
        &self,
        func_name: &str,
        var: &str,
    ) -> Result<Circuit, CircuitError> {
        let func = self
            .base
            .lookup(func_name)
            .ok_or_else(|| CircuitError::MissingFunction(func_name.to_string()))?;
        let mut vars: Vec<String> = self.variables.iter().cloned().collect();
        let vi = match vars.iter().position(|v| v == var) {
            Some(i) => i,
            None => {
                vars.push(var.to_string());
                vars.len() - 1
            }
        };
        let mut gates = self.gates.clone();
        for g in gates.iter_mut() {
            if matches!(g, Gate::Apply { func: f, .. } if *f == func) {
                *g = Gate::Input(vi);
            }
        }
        let base = Base::new(
            self.base
                .iter()
                .filter(|(n, _)| *n != func_name)
                .map(|(n, t)| (n.to_string(), t.clone()))
                .collect(),
        )?;
        // Function indices shift after removal.
        let removed = func;
        for g in gates.iter_mut() {
            if let Gate::Apply { func: f, .. } = g {
                debug_assert_ne!(*f, removed);
                if *f > removed {
                    *f -= 1;
                }
            }
        }
        Circuit::new(base, vars, gates, self.output)
    }

    /// Canonical gate layout: one input gate per variable first (in
    /// variable order), then the apply gates in their original order.
    /// Parsing a printed circuit yields exactly this layout, so
    /// `parse(print(c)) == c.normalized()` for every circuit and
    /// `parse(print(c)) == c` for circuits that came from `parse`.
    pub fn normalized(&self) -> Circuit {
        let nvars = self.variables.len();
        let mut gates: Vec<Gate> = (0..nvars).map(Gate::Input).collect();
        let mut map = vec![0usize; self.gates.len()];
        for (i, g) in self.gates.iter().enumerate() {
            if let Gate::Input(v) = g {
                map[i] = *v;
            }
        }
        for (i, g) in self.gates.iter().enumerate() {
            if let Gate::Apply { func, args } = g {
                let args = args.iter().map(|&a| map[a]).collect();
                gates.push(Gate::Apply { func: *func, args });
                map[i] = gates.len() - 1;
            }
        }
        Circuit {
            base: self.base.clone(),
            variables: Arc::clone(&self.variables),
            gates,
            output: map[self.output],
        }
    }

    /// The same wiring over the dual of every base function; computes the
    /// dual of the original function.
    pub fn dualize(&self) -> Circuit {
        let base = Base {
            funcs: self
                .base
                .iter()
                .map(|(n, t)| (n.to_string(), t.dual()))
                .collect(),
        };
        Circuit {
            base,
            variables: Arc::clone(&self.variables),
            gates: self.gates.clone(),
            output: self.output,
        }
    }

    fn check_brute_limit(&self) -> Result<(), CircuitError> {
        let limit = crate::brute_limit();
        if self.num_vars() > limit {
            return Err(CircuitError::VariableLimit {
                vars: self.num_vars(),
                limit,
            });
        }
        Ok(())
    }

    /// Iterate all assignments in lexicographic order (first variable most
    /// significant, 0 before 1), calling `f` with the bits and the value.
    pub fn for_each_assignment(
        &self,
        mut f: impl FnMut(&[bool], bool),
    ) -> Result<(), CircuitError> {
        self.check_brute_limit()?;
        let n = self.num_vars();
        let mut bits = vec![false; n];
        for counter in 0..1u64 << n {
            for (j, b) in bits.iter_mut().enumerate() {
                *b = (counter >> (n - 1 - j)) & 1 == 1;
            }
            let v = self.eval_bits(&bits);
            f(&bits, v);
        }
        Ok(())
    }

    /// First satisfying assignment in lexicographic order, if any.
    pub fn sat_bruteforce(&self) -> Result<Option<Assignment>, CircuitError> {
        self.check_brute_limit()?;
        let n = self.num_vars();
        let mut bits = vec![false; n];
        for counter in 0..1u64 << n {
            for (j, b) in bits.iter_mut().enumerate() {
                *b = (counter >> (n - 1 - j)) & 1 == 1;
            }
            if self.eval_bits(&bits) {
                return Ok(Some(Assignment::new(self.variables_arc(), bits)));
            }
        }
        Ok(None)
    }

    /// Number of satisfying assignments.
    pub fn count_sat(&self) -> Result<u64, CircuitError> {
        let mut count = 0u64;
        self.for_each_assignment(|_, v| {
            if v {
                count += 1;
            }
        })?;
        Ok(count)
    }

    /// All satisfying assignments in lexicographic order.
    pub fn all_sat(&self) -> Result<Vec<Assignment>, CircuitError> {
        let mut out = Vec::new();
        let vars = self.variables_arc();
        self.for_each_assignment(|bits, v| {
            if v {
                out.push(Assignment::new(Arc::clone(&vars), bits.to_vec()));
            }
        })?;
        Ok(out)
    }

    /// The full truth table of the computed function, variables in list
    /// order mapped to arguments.
    pub fn computed_table(&self) -> Result<TruthTable, CircuitError> {
        let n = self.num_vars();
        if n > crate::boolfn::MAX_ARITY {
            return Err(CircuitError::VariableLimit {
                vars: n,
                limit: crate::boolfn::MAX_ARITY,
            });
        }
        let mut bits = vec![false; 1usize << n];
        let mut args = vec![false; n];
        for (i, slot) in bits.iter_mut().enumerate() {
            for (j, a) in args.iter_mut().enumerate() {
                *a = (i >> j) & 1 == 1;
            }
            *slot = self.eval_bits(&args);
        }
        Ok(TruthTable::from_bits(n, &bits).expect("arity checked"))
    }

    pub fn print(&self) -> String {
        dsl::print(self)
    }
}

/// Incremental construction of circuits, used by synthesis and the gadget
/// builders.
#[derive(Debug, Clone)]
pub struct CircuitBuilder {
    base: Base,
    vars: Vec<String>,
    gates: Vec<Gate>,
}

impl CircuitBuilder {
    pub fn new(base: Base) -> Self {
        CircuitBuilder {
            base,
            vars: Vec::new(),
            gates: Vec::new(),
        }
    }

    /// Gate index of the input for `name`, creating it if needed.
    pub fn input(&mut self, name: &str) -> usize {
        if let Some(vi) = self.vars.iter().position(|v| v == name) {
            if let Some(gi) = self
                .gates
                .iter()
                .position(|g| matches!(g, Gate::Input(v) if *v == vi))
            {
                return gi;
            }
            self.gates.push(Gate::Input(vi));
            return self.gates.len() - 1;
        }
        self.vars.push(name.to_string());
        self.gates.push(Gate::Input(self.vars.len() - 1));
        self.gates.len() - 1
    }

    pub fn apply(&mut self, func: usize, args: Vec<usize>) -> usize {
        debug_assert_eq!(self.base.function(func).arity(), args.len());
        debug_assert!(args.iter().all(|&a| a < self.gates.len()));
        self.gates.push(Gate::Apply { func, args });
        self.gates.len() - 1
    }

    pub fn apply_named(&mut self, name: &str, args: Vec<usize>) -> Result<usize, CircuitError> {
        let func = self
            .base
            .lookup(name)
            .ok_or_else(|| CircuitError::MissingFunction(name.to_string()))?;
        Ok(self.apply(func, args))
    }

    pub fn constant(&mut self, c: bool) -> usize {
        let func = self.base.ensure_constant(c);
        self.apply(func, vec![])
    }

    /// Inline a template circuit, wiring its variable inputs (in template
    /// variable order) to existing gates. Template base functions are
    /// resolved in this builder's base by table identity.
    pub fn splice(&mut self, template: &Circuit, args: &[usize]) -> Result<usize, CircuitError> {
        assert_eq!(template.num_vars(), args.len());
        let func_map: Vec<usize> = template
            .base
            .iter()
            .map(|(name, table)| {
                (0..self.base.len())
                    .find(|&i| self.base.function(i) == table)
                    .ok_or_else(|| CircuitError::MissingFunction(name.to_string()))
            })
            .collect::<Result<_, _>>()?;
        let mut gate_map = vec![0usize; template.gates.len()];
        for (i, g) in template.gates.iter().enumerate() {
            gate_map[i] = match g {
                Gate::Input(v) => args[*v],
                Gate::Apply { func, args: ch } => {
                    let mapped: Vec<usize> = ch.iter().map(|&a| gate_map[a]).collect();
                    self.apply(func_map[*func], mapped)
                }
            };
        }
        Ok(gate_map[template.output()])
    }

    /// Build the circuit, dropping apply gates that do not feed the output.
    /// Input gates stay so the declared variable list is preserved.
    pub fn finish(self, output: usize) -> Result<Circuit, CircuitError> {
        let mut keep = vec![false; self.gates.len()];
        let mut stack = vec![output];
        while let Some(i) = stack.pop() {
            if keep[i] {
                continue;
            }
            keep[i] = true;
            if let Gate::Apply { args, .. } = &self.gates[i] {
                stack.extend(args.iter().copied());
            }
        }
        let mut map = vec![usize::MAX; self.gates.len()];
        let mut gates = Vec::new();
        for (i, g) in self.gates.into_iter().enumerate() {
            if keep[i] || matches!(g, Gate::Input(_)) {
                map[i] = gates.len();
                gates.push(match g {
                    Gate::Apply { func, args } => Gate::Apply {
                        func,
                        args: args.iter().map(|&a| map[a]).collect(),
                    },
                    g => g,
                });
            }
        }
        Circuit::new(self.base, self.vars, gates, map[output])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::TruthTable;

    fn and_circuit() -> Circuit {
        parse("base AND = tt 2 0b1000\ninput x1 x2\ng1 = AND(x1, x2)\noutput g1").unwrap()
    }

    #[test]
    fn evaluate_and() {
        let c = and_circuit();
        let a = c.assignment(&[true, true]).unwrap();
        assert!(c.evaluate(&a).unwrap());
        let a = c.assignment(&[true, false]).unwrap();
        assert!(!c.evaluate(&a).unwrap());
    }

    #[test]
    fn fictive_variables_are_irrelevant() {
        let c = parse("base AND = tt 2 0b1000\ninput x1 x2 x3\ng1 = AND(x1, x2)\noutput g1")
            .unwrap();
        for bits in 0..8u8 {
            let mut v = [bits & 4 != 0, bits & 2 != 0, bits & 1 != 0];
            let a1 = c.assignment(&v).unwrap();
            v[2] = !v[2];
            let a2 = c.assignment(&v).unwrap();
            assert_eq!(c.evaluate(&a1).unwrap(), c.evaluate(&a2).unwrap());
        }
    }

    #[test]
    fn substitute_constant() {
        let c = and_circuit();
        let c0 = c.substitute("x1", Replacement::Constant(false)).unwrap();
        assert_eq!(c0.num_vars(), 1);
        for b in [false, true] {
            let a = c0.assignment(&[b]).unwrap();
            assert!(!c0.evaluate(&a).unwrap());
        }
    }

    #[test]
    fn substitute_variable_merges() {
        let c = parse("base OR = tt 2 0b1110\ninput x1 x2\ng1 = OR(x1, x2)\noutput g1").unwrap();
        let cx = c
            .substitute("x1", Replacement::Variable("x2".into()))
            .unwrap();
        assert_eq!(cx.num_vars(), 1);
        assert!(cx.evaluate(&cx.assignment(&[true]).unwrap()).unwrap());
        assert!(!cx.evaluate(&cx.assignment(&[false]).unwrap()).unwrap());
    }

    #[test]
    fn substitution_matches_pinned_evaluation() {
        use crate::generator::{random_circuit, rng_from_seed};
        let base = Base::from_tables(&crate::clones::standard_base(crate::CloneName::Bf));
        let mut rng = rng_from_seed(17);
        for _ in 0..100 {
            let c = random_circuit(&mut rng, &base, 4, 6);
            let var = c.variables()[0].clone();
            for bit in [false, true] {
                let sub = c.substitute(&var, Replacement::Constant(bit)).unwrap();
                for rest in 0..8u8 {
                    let bits = [bit, rest & 4 != 0, rest & 2 != 0, rest & 1 != 0];
                    let full = c.assignment(&bits).unwrap();
                    let partial = sub.assignment(&bits[1..]).unwrap();
                    assert_eq!(c.evaluate(&full).unwrap(), sub.evaluate(&partial).unwrap());
                }
            }
        }
    }

    #[test]
    fn brute_force_solving() {
        let c = and_circuit();
        assert_eq!(c.count_sat().unwrap(), 1);
        let m = c.sat_bruteforce().unwrap().unwrap();
        assert_eq!(m.to_string(), "11");

        let maj = parse(
            "base MAJ = tt 3 0b11101000\ninput x y z\ng1 = MAJ(x, y, z)\noutput g1",
        )
        .unwrap();
        assert_eq!(maj.count_sat().unwrap(), 4);
        let a = maj.assignment(&[true, false, true]).unwrap();
        assert!(maj.evaluate(&a).unwrap());

        let zero = parse("base ZERO = tt 0 0b0\ng1 = ZERO()\noutput g1").unwrap();
        assert_eq!(zero.count_sat().unwrap(), 0);
        assert!(zero.sat_bruteforce().unwrap().is_none());
    }

    #[test]
    fn all_sat_is_lexicographic() {
        let c = parse("base OR = tt 2 0b1110\ninput x1 x2\ng1 = OR(x1, x2)\noutput g1").unwrap();
        let sols: Vec<String> = c.all_sat().unwrap().iter().map(|a| a.to_string()).collect();
        assert_eq!(sols, vec!["01", "10", "11"]);
    }

    #[test]
    fn count_value_basics() {
        let c = and_circuit();
        let a = c.assignment(&[true, false]).unwrap();
        assert_eq!(a.count_value(true), 1);
        assert_eq!(a.count_value(false), 1);
        let all_zero = c.assignment(&[false, false]).unwrap();
        assert_eq!(all_zero.count_value(true), 0);
        assert_eq!(
            a.count_value(true) + a.complement().count_value(true),
            c.num_vars()
        );
    }

    #[test]
    fn computed_table_matches_eval() {
        let maj = parse(
            "base MAJ = tt 3 0b11101000\ninput x y z\ng1 = MAJ(x, y, z)\noutput g1",
        )
        .unwrap();
        let t = maj.computed_table().unwrap();
        assert_eq!(t, crate::clones::majority3());
    }

    #[test]
    fn dualize_computes_dual() {
        let c = and_circuit();
        let d = c.dualize();
        let td = d.computed_table().unwrap();
        assert_eq!(td, c.computed_table().unwrap().dual());
    }

    #[test]
    fn variable_limit_enforced() {
        let mut text = String::from("base AND = tt 2 0b1000\ninput");
        for i in 0..25 {
            text.push_str(&format!(" v{i}"));
        }
        text.push_str("\ng1 = AND(v0, v1)\noutput g1");
        let c = parse(&text).unwrap();
        assert!(matches!(
            c.count_sat(),
            Err(CircuitError::VariableLimit { .. })
        ));
    }

    #[test]
    fn builder_splice() {
        let tables = [TruthTable::from_fn(2, |a| a[0] && a[1])];
        let base = Base::from_tables(&tables);
        let tmpl_base = Base::new(vec![("g".into(), tables[0].clone())]).unwrap();
        let mut tb = CircuitBuilder::new(tmpl_base);
        let x = tb.input("x");
        let y = tb.input("y");
        let o = tb.apply(0, vec![x, y]);
        let template = tb.finish(o).unwrap();

        let mut b = CircuitBuilder::new(base);
        let u = b.input("u");
        let v = b.input("v");
        let w = b.input("w");
        let uv = b.splice(&template, &[u, v]).unwrap();
        let all = b.splice(&template, &[uv, w]).unwrap();
        let c = b.finish(all).unwrap();
        assert_eq!(c.count_sat().unwrap(), 1);
    }
}
