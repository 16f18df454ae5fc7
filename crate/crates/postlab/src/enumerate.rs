//! Enumeration of satisfying assignments: backtracking self-reduction for
//! monotone and linear bases, complementary-pair scanning for self-dual and
//! 0-separating-of-degree-2 bases, and a brute-force enumerator.
//!
//! Delay is measured in oracle calls (satisfiability tests for the
//! backtracking algorithm, circuit evaluations otherwise), recorded before
//! the first solution, between consecutive solutions, and after the last.
//! That makes the polynomial-delay property directly checkable.

use serde::Serialize;
use thiserror::Error;

use crate::circuit::{Assignment, Circuit, CircuitError, Replacement};
use crate::clones::{self, CloneName, Family};
use crate::decide::{normal_form_as, FormKind};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("enumeration algorithm needs a base within {needed}, clone is {got}")]
    WrongClone { needed: &'static str, got: CloneName },
    #[error(transparent)]
    Circuit(#[from] CircuitError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Algorithm {
    Backtrack,
    DualPairing,
    BruteForce,
}

/// Solutions plus the oracle-call counts around each emission.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationReport {
    pub algorithm: Algorithm,
    #[serde(serialize_with = "serialize_solutions")]
    pub solutions: Vec<Assignment>,
    /// Length is one more than the solution count: calls before the first
    /// emission, between consecutive ones, and after the last.
    pub oracle_calls_between_outputs: Vec<u64>,
}

fn serialize_solutions<S: serde::Serializer>(
    sols: &[Assignment],
    ser: S,
) -> Result<S::Ok, S::Error> {
    ser.collect_seq(sols.iter().map(|a| a.to_string()))
}

impl EnumerationReport {
    pub fn max_delay(&self) -> u64 {
        self.oracle_calls_between_outputs
            .iter()
            .copied()
            .max()
            .unwrap_or(0)
    }
}

struct DelayMeter {
    counts: Vec<u64>,
    current: u64,
}

impl DelayMeter {
    fn new() -> Self {
        DelayMeter {
            counts: Vec::new(),
            current: 0,
        }
    }

    fn call(&mut self) {
        self.current += 1;
    }

    fn emitted(&mut self) {
        self.counts.push(self.current);
        self.current = 0;
    }

    fn finish(mut self) -> Vec<u64> {
        self.counts.push(self.current);
        self.counts
    }
}

/// Which tractable satisfiability probe backs the backtracking algorithm.
#[derive(Clone, Copy)]
enum SatProbe {
    Monotone,
    Linear,
}

impl SatProbe {
    /// Satisfiability of a circuit over the constant-extended base. One
    /// evaluation for monotone circuits, the coefficient probes for linear
    /// ones.
    fn is_sat(self, c: &Circuit) -> bool {
        match self {
            SatProbe::Monotone => c.eval_bits(&vec![true; c.num_vars()]),
            SatProbe::Linear => {
                let f = normal_form_as(c, FormKind::Xor);
                f.a0 || f.weight() > 0
            }
        }
    }
}

/// Lexicographic enumeration by self-reduction: substitute the first
/// variable with 0 and then 1, descending into satisfiable branches only.
/// Needs a base within M or L so that satisfiability over the
/// constant-extended base stays polynomial.
pub fn enum_backtrack(c: &Circuit) -> Result<EnumerationReport, EnumError> {
    let mut solutions = Vec::new();
    let delays = enum_backtrack_stream(c, |a| solutions.push(a))?;
    Ok(EnumerationReport {
        algorithm: Algorithm::Backtrack,
        solutions,
        oracle_calls_between_outputs: delays,
    })
}

/// Streaming form of [`enum_backtrack`]; returns the delay counts.
pub fn enum_backtrack_stream(
    c: &Circuit,
    mut sink: impl FnMut(Assignment),
) -> Result<Vec<u64>, EnumError> {
    let clone = clones::clone_of(&c.base.tables());
    let probe = if clones::includes(CloneName::M, clone) {
        SatProbe::Monotone
    } else if clones::includes(CloneName::L, clone) {
        SatProbe::Linear
    } else {
        return Err(EnumError::WrongClone {
            needed: "M or L",
            got: clone,
        });
    };

    let mut meter = DelayMeter::new();
    let vars = c.variables_arc();
    let mut prefix: Vec<bool> = Vec::with_capacity(vars.len());

    meter.call();
    if probe.is_sat(c) {
        descend(c, probe, &mut prefix, &vars, &mut meter, &mut sink)?;
    }
    Ok(meter.finish())
}

fn descend(
    c: &Circuit,
    probe: SatProbe,
    prefix: &mut Vec<bool>,
    vars: &std::sync::Arc<Vec<String>>,
    meter: &mut DelayMeter,
    sink: &mut impl FnMut(Assignment),
) -> Result<(), EnumError> {
    if c.num_vars() == 0 {
        sink(Assignment::new(std::sync::Arc::clone(vars), prefix.clone()));
        meter.emitted();
        return Ok(());
    }
    let var = c.variables()[0].clone();
    for bit in [false, true] {
        let sub = c.substitute(&var, Replacement::Constant(bit))?;
        meter.call();
        if probe.is_sat(&sub) {
            prefix.push(bit);
            descend(&sub, probe, prefix, vars, meter, sink)?;
            prefix.pop();
        }
    }
    Ok(())
}

/// Enumeration for self-dual and 0-separating-of-degree-2 bases: walk the
/// assignments with the first variable at 0 in lexicographic order and test
/// each together with its complement; every pair yields at least one
/// solution.
pub fn enum_dual_pairing(c: &Circuit) -> Result<EnumerationReport, EnumError> {
    let mut solutions = Vec::new();
    let delays = enum_dual_pairing_stream(c, |a| solutions.push(a))?;
    Ok(EnumerationReport {
        algorithm: Algorithm::DualPairing,
        solutions,
        oracle_calls_between_outputs: delays,
    })
}

/// Streaming form of [`enum_dual_pairing`]; returns the delay counts.
pub fn enum_dual_pairing_stream(
    c: &Circuit,
    mut sink: impl FnMut(Assignment),
) -> Result<Vec<u64>, EnumError> {
    let clone = clones::clone_of(&c.base.tables());
    let fits = clones::includes(CloneName::D, clone)
        || clones::includes(CloneName::Fam(Family::S0n, 2), clone);
    if !fits {
        return Err(EnumError::WrongClone {
            needed: "D or S0^2",
            got: clone,
        });
    }
    let n = c.num_vars();
    let limit = crate::brute_limit();
    if n > limit {
        return Err(EnumError::Circuit(CircuitError::VariableLimit {
            vars: n,
            limit,
        }));
    }
    let vars = c.variables_arc();
    let mut meter = DelayMeter::new();

    if n == 0 {
        meter.call();
        if c.eval_bits(&[]) {
            sink(Assignment::new(vars, vec![]));
            meter.emitted();
        }
        return Ok(meter.finish());
    }

    let mut bits = vec![false; n];
    for counter in 0..1u64 << (n - 1) {
        bits[0] = false;
        for (j, b) in bits.iter_mut().enumerate().skip(1) {
            *b = (counter >> (n - 1 - j)) & 1 == 1;
        }
        meter.call();
        if c.eval_bits(&bits) {
            sink(Assignment::new(std::sync::Arc::clone(&vars), bits.clone()));
            meter.emitted();
        }
        let comp: Vec<bool> = bits.iter().map(|&b| !b).collect();
        meter.call();
        if c.eval_bits(&comp) {
            sink(Assignment::new(std::sync::Arc::clone(&vars), comp));
            meter.emitted();
        }
    }
    Ok(meter.finish())
}

/// Exhaustive lexicographic enumeration; the oracle for everything else.
pub fn enum_bruteforce(c: &Circuit) -> Result<EnumerationReport, EnumError> {
    let mut meter = DelayMeter::new();
    let mut solutions = Vec::new();
    let vars = c.variables_arc();
    c.for_each_assignment(|bits, v| {
        meter.call();
        if v {
            solutions.push(Assignment::new(std::sync::Arc::clone(&vars), bits.to_vec()));
            meter.emitted();
        }
    })?;
    Ok(EnumerationReport {
        algorithm: Algorithm::BruteForce,
        solutions,
        oracle_calls_between_outputs: meter.finish(),
    })
}
