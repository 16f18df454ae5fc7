//! Bounded synthesis of a target function over a base, and gate-by-gate
//! conversion of circuits between bases whose clones are nested.

use std::collections::HashMap;

use crate::boolfn::TruthTable;
use crate::clones;

use super::{Base, Circuit, CircuitBuilder, CircuitError, Gate};

/// How a reachable function was first produced during the closure search.
#[derive(Debug, Clone)]
enum Origin {
    Projection(usize),
    LiftedConstant(usize),
    Applied { func: usize, args: Vec<u16> },
}

/// Breadth-first closure of the base at the target arity with parent
/// pointers; reconstructs a circuit computing `target` when it is reachable.
/// Discovery depth is minimal; gate count is not.
pub fn synthesize(target: &TruthTable, base: &Base) -> Result<Circuit, CircuitError> {
    let arity = target.arity();
    if arity > 4 {
        return Err(CircuitError::SynthesisArity(arity));
    }
    let size = 1usize << arity;
    let mask: u32 = (1u32 << size) - 1;
    let pack = |t: &TruthTable| t.to_u16();
    let goal = pack(target);

    let mut origin: HashMap<u16, Origin> = HashMap::new();
    let mut order: Vec<u16> = Vec::new();

    let push = |bits: u16,
                    org: Origin,
                    origin: &mut HashMap<u16, Origin>,
                    order: &mut Vec<u16>| {
        origin.entry(bits).or_insert_with(|| {
            order.push(bits);
            org
        });
    };

    for j in 0..arity {
        let mut bits = 0u32;
        for i in 0..size {
            if (i >> j) & 1 == 1 {
                bits |= 1 << i;
            }
        }
        push(bits as u16, Origin::Projection(j), &mut origin, &mut order);
    }
    for fi in 0..base.len() {
        let t = base.function(fi);
        if t.arity() == 0 {
            let bits = if t.bit(0) { mask as u16 } else { 0 };
            push(bits, Origin::LiftedConstant(fi), &mut origin, &mut order);
        }
    }

    let mut frontier_start = 0usize;
    while !origin.contains_key(&goal) && frontier_start < order.len() {
        let frontier_end = order.len();
        let all: Vec<u16> = order.clone();
        for fi in 0..base.len() {
            let t = base.function(fi);
            let k = t.arity();
            if k == 0 {
                continue;
            }
            let mut args = vec![0u16; k];
            apply_all(
                t,
                &all,
                frontier_start,
                frontier_end,
                &mut args,
                0,
                false,
                size,
                &mut |bits, tuple| {
                    push(
                        bits,
                        Origin::Applied {
                            func: fi,
                            args: tuple.to_vec(),
                        },
                        &mut origin,
                        &mut order,
                    )
                },
            );
        }
        if order.len() == frontier_end {
            break; // fixpoint, goal unreachable
        }
        frontier_start = frontier_end;
    }

    if !origin.contains_key(&goal) {
        return Err(CircuitError::NotInClone);
    }

    // Reconstruct bottom-up through the parent pointers.
    let mut builder = CircuitBuilder::new(base.clone());
    let var_names: Vec<String> = (0..arity).map(|j| format!("v{}", j + 1)).collect();
    // Inputs first so the variable order matches the argument order.
    for name in &var_names {
        builder.input(name);
    }
    let mut built: HashMap<u16, usize> = HashMap::new();
    let out = build_state(goal, &origin, &mut builder, &mut built, &var_names);
    builder.finish(out)
}

#[allow(clippy::too_many_arguments)]
fn apply_all(
    t: &TruthTable,
    all: &[u16],
    frontier_start: usize,
    frontier_end: usize,
    args: &mut [u16],
    pos: usize,
    has_frontier: bool,
    size: usize,
    out: &mut impl FnMut(u16, &[u16]),
) {
    let k = args.len();
    if pos == k {
        if !has_frontier && frontier_start > 0 {
            return;
        }
        let mut bits = 0u16;
        let mut tuple = vec![false; k];
        for i in 0..size {
            for (j, a) in args.iter().enumerate() {
                tuple[j] = (a >> i) & 1 == 1;
            }
            if t.eval(&tuple).expect("arity matches") {
                bits |= 1 << i;
            }
        }
        out(bits, args);
        return;
    }
    for (idx, &a) in all[..frontier_end].iter().enumerate() {
        args[pos] = a;
        let fresh = idx >= frontier_start;
        apply_all(
            t,
            all,
            frontier_start,
            frontier_end,
            args,
            pos + 1,
            has_frontier || fresh,
            size,
            out,
        );
    }
}

fn build_state(
    state: u16,
    origin: &HashMap<u16, Origin>,
    builder: &mut CircuitBuilder,
    built: &mut HashMap<u16, usize>,
    var_names: &[String],
) -> usize {
    if let Some(&g) = built.get(&state) {
        return g;
    }
    let gate = match origin[&state].clone() {
        Origin::Projection(j) => builder.input(&var_names[j]),
        Origin::LiftedConstant(func) => builder.apply(func, vec![]),
        Origin::Applied { func, args } => {
            let arg_gates: Vec<usize> = args
                .iter()
                .map(|&a| build_state(a, origin, builder, built, var_names))
                .collect();
            builder.apply(func, arg_gates)
        }
    };
    built.insert(state, gate);
    gate
}

/// Convert a circuit to an equivalent one over `target_base` by replacing
/// every gate with a synthesized representation of its function.
pub fn convert(circuit: &Circuit, target_base: &Base) -> Result<Circuit, CircuitError> {
    let source_clone = clones::clone_of(&circuit.base.tables());
    let target_clone = clones::clone_of(&target_base.tables());
    if !clones::includes(target_clone, source_clone) {
        return Err(CircuitError::BaseNotIncluded);
    }
    // One template per base function actually used.
    let mut templates: HashMap<usize, Circuit> = HashMap::new();
    for g in circuit.gates() {
        if let Gate::Apply { func, .. } = g {
            if !templates.contains_key(func) {
                let table = circuit.base.function(*func);
                templates.insert(*func, synthesize(table, target_base)?);
            }
        }
    }
    let mut builder = CircuitBuilder::new(target_base.clone());
    for v in circuit.variables() {
        builder.input(v);
    }
    let mut gate_map: Vec<usize> = Vec::with_capacity(circuit.gates().len());
    for g in circuit.gates() {
        let mapped = match g {
            Gate::Input(v) => builder.input(&circuit.variables()[*v].clone()),
            Gate::Apply { func, args } => {
                let arg_gates: Vec<usize> = args.iter().map(|&a| gate_map[a]).collect();
                builder.splice(&templates[func], &arg_gates)?
            }
        };
        gate_map.push(mapped);
    }
    builder.finish(gate_map[circuit.output()])
}
