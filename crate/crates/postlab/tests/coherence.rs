//! Classifier/algorithm coherence: wherever the classification table
//! promises a polynomial algorithm, the corresponding decision or
//! enumeration procedure must actually take a non-brute-force path (and
//! produce the right answer); wherever it denies lexicographic enumeration,
//! the backtracking enumerator must refuse the base.

use postlab::circuit::{Base, Circuit};
use postlab::clones::{self, standard_base, CloneName};
use postlab::decide::{self, Method};
use postlab::enumerate::{self, EnumError};
use postlab::generator::{random_circuit, rng_from_seed};
use postlab::{classify, ComplexityLabel, Problem};

use rand::Rng;

fn sample(clone: CloneName, seed: u64, count: usize) -> Vec<Circuit> {
    let base = Base::from_tables(&standard_base(clone));
    let mut rng = rng_from_seed(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=6);
            let gates = rng.gen_range(1..=6);
            random_circuit(&mut rng, &base, n, gates)
        })
        .collect()
}

fn label(problem: Problem, clone: CloneName) -> ComplexityLabel {
    classify::classify_clone(problem, clone).label
}

#[test]
fn polynomial_labels_have_polynomial_deciders() {
    for clone in CloneName::all(4) {
        let circuits = sample(clone, 0xC0FFEE ^ hash(clone), 10);

        if label(Problem::Sat, clone) == ComplexityLabel::PolynomialTime {
            for c in &circuits {
                let d = decide::sat(c).unwrap();
                assert_ne!(d.method, Method::BruteForce, "SAT over {clone}");
                assert_eq!(d.answer, c.sat_bruteforce().unwrap().is_some(), "{clone}");
            }
        }
        if label(Problem::SatStar, clone) == ComplexityLabel::PolynomialTime {
            for c in &circuits {
                let d = decide::sat_star(c).unwrap();
                assert_ne!(d.method, Method::BruteForce, "SAT* over {clone}");
                assert_eq!(
                    d.answer,
                    decide::sat_star_bruteforce(c).unwrap().answer,
                    "{clone}"
                );
            }
        }
        if label(Problem::Eq, clone) == ComplexityLabel::PolynomialTime {
            for pair in circuits.chunks(2) {
                if let [c1, c2] = pair {
                    let d = decide::equivalent(c1, c2).unwrap();
                    assert_eq!(d.method, Method::NormalForm, "EQ over {clone}");
                    assert_eq!(
                        d.answer,
                        decide::equivalent_bruteforce(c1, c2).unwrap().answer,
                        "{clone}"
                    );
                }
            }
        }
        if label(Problem::FrozenVars, clone) == ComplexityLabel::PolynomialTime {
            for c in &circuits {
                let vars = vec![c.variables()[0].clone()];
                let d = decide::frozen(c, &vars).unwrap();
                assert_ne!(d.method, Method::BruteForce, "FV over {clone}");
                assert_eq!(
                    d.answer,
                    decide::frozen_bruteforce(c, &vars).unwrap().answer,
                    "{clone}"
                );
            }
        }
        if label(Problem::ExistsFrozen, clone) == ComplexityLabel::PolynomialTime {
            for c in &circuits {
                let d = decide::exists_frozen(c).unwrap();
                assert_ne!(d.method, Method::BruteForce, "EFV over {clone}");
                assert_eq!(
                    d.answer,
                    decide::exists_frozen_bruteforce(c).unwrap().answer,
                    "{clone}"
                );
            }
        }
        if label(Problem::Audit, clone) == ComplexityLabel::PolynomialTime {
            for c in &circuits {
                let d = decide::audit(c).unwrap();
                assert_ne!(d.method, Method::BruteForce, "AUDIT over {clone}");
                assert_eq!(
                    d.answer,
                    decide::audit_bruteforce(c).unwrap().answer,
                    "{clone}"
                );
            }
        }
        if label(Problem::UniqueSat, clone) == ComplexityLabel::PolynomialTime {
            for c in &circuits {
                let d = decide::unique_sat(c).unwrap();
                if c.num_vars() >= 2 {
                    assert_ne!(d.method, Method::BruteForce, "USAT over {clone}");
                }
                assert_eq!(
                    d.answer,
                    decide::unique_sat_bruteforce(c).unwrap().answer,
                    "{clone}"
                );
            }
        }
    }
    println!("coherence (decision labels vs deciders): PASS");
}

#[test]
fn enumeration_labels_match_the_algorithms() {
    for clone in CloneName::all(4) {
        let circuits = sample(clone, 0xBEEF ^ hash(clone), 6);
        match label(Problem::Enum, clone) {
            ComplexityLabel::PolyDelay => {
                for c in &circuits {
                    let rep = enumerate::enum_backtrack(c)
                        .or_else(|_| enumerate::enum_dual_pairing(c))
                        .unwrap_or_else(|e| {
                            panic!("no delay-bounded algorithm accepted {clone}: {e}")
                        });
                    let mut got = rep.solutions.clone();
                    got.sort();
                    let brute = enumerate::enum_bruteforce(c).unwrap();
                    assert_eq!(got, brute.solutions, "{clone}");
                }
            }
            ComplexityLabel::NoPolyTotalUnlessPEqNp => {
                for c in &circuits {
                    assert!(matches!(
                        enumerate::enum_backtrack(c),
                        Err(EnumError::WrongClone { .. })
                    ));
                    assert!(matches!(
                        enumerate::enum_dual_pairing(c),
                        Err(EnumError::WrongClone { .. })
                    ));
                }
            }
            other => panic!("unexpected enumeration label {other:?}"),
        }
        match label(Problem::EnumLex, clone) {
            ComplexityLabel::PolyDelayLex => {
                for c in &circuits {
                    let rep = enumerate::enum_backtrack(c).unwrap();
                    for w in rep.solutions.windows(2) {
                        assert!(w[0] < w[1]);
                    }
                }
            }
            ComplexityLabel::NoLexDelayUnlessPEqNp | ComplexityLabel::NoPolyTotalUnlessPEqNp => {
                for c in &circuits {
                    assert!(
                        matches!(
                            enumerate::enum_backtrack(c),
                            Err(EnumError::WrongClone { .. })
                        ),
                        "lexicographic backtracking accepted {clone} against its label"
                    );
                }
            }
            other => panic!("unexpected lex-enumeration label {other:?}"),
        }
    }
    println!("coherence (enumeration labels vs algorithms): PASS");
}

fn hash(c: CloneName) -> u64 {
    use std::collections::hash_map::DefaultHasher;
    use std::hash::{Hash, Hasher};
    let mut h = DefaultHasher::new();
    c.hash(&mut h);
    h.finish()
}
