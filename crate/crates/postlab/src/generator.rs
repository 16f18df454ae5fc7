//! Seeded random circuit generation for the differential test suites.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::circuit::{Base, Circuit, CircuitBuilder, Gate};

/// Deterministic generator from a 64-bit seed.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random circuit over `base` with `num_vars` inputs and `num_gates`
/// applications. Children are drawn uniformly from earlier nodes, the last
/// gate is the output. All variables get an input gate; some may stay
/// fictive in the computed function.
pub fn random_circuit(
    rng: &mut impl Rng,
    base: &Base,
    num_vars: usize,
    num_gates: usize,
) -> Circuit {
    assert!(num_vars > 0 || base.tables().iter().any(|t| t.arity() == 0));
    let mut builder = CircuitBuilder::new(base.clone());
    let mut nodes: Vec<usize> = Vec::new();
    for j in 0..num_vars {
        nodes.push(builder.input(&format!("x{}", j + 1)));
    }
    if num_vars == 0 {
        // Seed the node pool with a constant gate.
        let fi = (0..base.len())
            .find(|&i| base.function(i).arity() == 0)
            .expect("checked above");
        nodes.push(builder.apply(fi, vec![]));
    }
    for _ in 0..num_gates.max(1) {
        let func = rng.gen_range(0..base.len());
        let arity = base.function(func).arity();
        let args: Vec<usize> = (0..arity)
            .map(|_| nodes[rng.gen_range(0..nodes.len())])
            .collect();
        nodes.push(builder.apply(func, args));
    }
    let output = *nodes.last().unwrap();
    builder.finish(output).expect("generator builds valid circuits")
}

/// A structurally identical circuit with the variables renamed through a
/// random permutation; isomorphic to the input by construction.
pub fn permuted_copy(rng: &mut impl Rng, circuit: &Circuit) -> Circuit {
    let n = circuit.num_vars();
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    let mut builder = CircuitBuilder::new(circuit.base.clone());
    let vars = circuit.variables();
    for v in vars {
        builder.input(v);
    }
    let mut map: Vec<usize> = Vec::with_capacity(circuit.gates().len());
    for g in circuit.gates() {
        let mapped = match g {
            Gate::Input(v) => builder.input(&vars[perm[*v]].clone()),
            Gate::Apply { func, args } => {
                let args: Vec<usize> = args.iter().map(|&a| map[a]).collect();
                builder.apply(*func, args)
            }
        };
        map.push(mapped);
    }
    builder
        .finish(map[circuit.output()])
        .expect("permutation keeps the circuit valid")
}
