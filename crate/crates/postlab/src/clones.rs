//! The lattice of Boolean clones: naming, standard bases, identification of
//! the clone generated by a finite basis, inclusion queries, and a
//! brute-force closure oracle used to validate the whole scheme.
//!
//! Every named clone is definable as the set of functions satisfying a
//! conjunction of the predicates in [`PropertySignature`]. Identification
//! therefore works by signature matching: the signature of a basis (the
//! componentwise conjunction of the predicates over its functions) equals
//! the signature of the clone it generates, and signatures are compared
//! against the ones computed from the standard bases at startup.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::boolfn::{SeparationDegree, TruthTable};

/// Largest admissible parameter for the separation-degree families. An
/// arity-16 table realizes separation degrees up to 15, so no valid input
/// ever needs a larger name, and the threshold generator of a larger family
/// would not fit in a table.
pub const MAX_FAMILY_DEGREE: usize = 15;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CloneError {
    #[error("family degree {0} out of range (2..={MAX_FAMILY_DEGREE})")]
    DegreeOutOfRange(usize),
    #[error("unknown clone name `{0}`")]
    UnknownName(String),
    #[error("closure oracle supports arity <= 4, got {0}")]
    OracleArity(usize),
    #[error("no clone signature matches the basis; predicate implementation broken")]
    NoMatch,
}

/// One of the infinite separation-degree families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    S0n,
    S1n,
    S00n,
    S01n,
    S02n,
    S10n,
    S11n,
    S12n,
}

/// A node of the lattice of Boolean clones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CloneName {
    Bf,
    R0,
    R1,
    R2,
    M,
    M0,
    M1,
    M2,
    S0,
    S1,
    S00,
    S01,
    S02,
    S10,
    S11,
    S12,
    D,
    D1,
    D2,
    L,
    L0,
    L1,
    L2,
    L3,
    V,
    V0,
    V1,
    V2,
    E,
    E0,
    E1,
    E2,
    N,
    N2,
    I,
    I0,
    I1,
    I2,
    /// Family member with its degree parameter, `2 <= n <= 15`.
    Fam(Family, usize),
}

const FIXED_NAMES: [CloneName; 38] = [
    CloneName::Bf,
    CloneName::R0,
    CloneName::R1,
    CloneName::R2,
    CloneName::M,
    CloneName::M0,
    CloneName::M1,
    CloneName::M2,
    CloneName::S0,
    CloneName::S1,
    CloneName::S00,
    CloneName::S01,
    CloneName::S02,
    CloneName::S10,
    CloneName::S11,
    CloneName::S12,
    CloneName::D,
    CloneName::D1,
    CloneName::D2,
    CloneName::L,
    CloneName::L0,
    CloneName::L1,
    CloneName::L2,
    CloneName::L3,
    CloneName::V,
    CloneName::V0,
    CloneName::V1,
    CloneName::V2,
    CloneName::E,
    CloneName::E0,
    CloneName::E1,
    CloneName::E2,
    CloneName::N,
    CloneName::N2,
    CloneName::I,
    CloneName::I0,
    CloneName::I1,
    CloneName::I2,
];

const ALL_FAMILIES: [Family; 8] = [
    Family::S0n,
    Family::S1n,
    Family::S00n,
    Family::S01n,
    Family::S02n,
    Family::S10n,
    Family::S11n,
    Family::S12n,
];

impl Family {
    fn prefix(self) -> &'static str {
        match self {
            Family::S0n => "S0",
            Family::S1n => "S1",
            Family::S00n => "S00",
            Family::S01n => "S01",
            Family::S02n => "S02",
            Family::S10n => "S10",
            Family::S11n => "S11",
            Family::S12n => "S12",
        }
    }
}

impl fmt::Display for CloneName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CloneName::Bf => write!(f, "BF"),
            CloneName::R0 => write!(f, "R0"),
            CloneName::R1 => write!(f, "R1"),
            CloneName::R2 => write!(f, "R2"),
            CloneName::M => write!(f, "M"),
            CloneName::M0 => write!(f, "M0"),
            CloneName::M1 => write!(f, "M1"),
            CloneName::M2 => write!(f, "M2"),
            CloneName::S0 => write!(f, "S0"),
            CloneName::S1 => write!(f, "S1"),
            CloneName::S00 => write!(f, "S00"),
            CloneName::S01 => write!(f, "S01"),
            CloneName::S02 => write!(f, "S02"),
            CloneName::S10 => write!(f, "S10"),
            CloneName::S11 => write!(f, "S11"),
            CloneName::S12 => write!(f, "S12"),
            CloneName::D => write!(f, "D"),
            CloneName::D1 => write!(f, "D1"),
            CloneName::D2 => write!(f, "D2"),
            CloneName::L => write!(f, "L"),
            CloneName::L0 => write!(f, "L0"),
            CloneName::L1 => write!(f, "L1"),
            CloneName::L2 => write!(f, "L2"),
            CloneName::L3 => write!(f, "L3"),
            CloneName::V => write!(f, "V"),
            CloneName::V0 => write!(f, "V0"),
            CloneName::V1 => write!(f, "V1"),
            CloneName::V2 => write!(f, "V2"),
            CloneName::E => write!(f, "E"),
            CloneName::E0 => write!(f, "E0"),
            CloneName::E1 => write!(f, "E1"),
            CloneName::E2 => write!(f, "E2"),
            CloneName::N => write!(f, "N"),
            CloneName::N2 => write!(f, "N2"),
            CloneName::I => write!(f, "I"),
            CloneName::I0 => write!(f, "I0"),
            CloneName::I1 => write!(f, "I1"),
            CloneName::I2 => write!(f, "I2"),
            CloneName::Fam(fam, n) => write!(f, "{}^{}", fam.prefix(), n),
        }
    }
}

impl FromStr for CloneName {
    type Err = CloneError;

    fn from_str(s: &str) -> Result<Self, CloneError> {
        if let Some((prefix, deg)) = s.split_once('^') {
            let n: usize = deg
                .parse()
                .map_err(|_| CloneError::UnknownName(s.to_string()))?;
            let fam = ALL_FAMILIES
                .iter()
                .find(|f| f.prefix() == prefix)
                .copied()
                .ok_or_else(|| CloneError::UnknownName(s.to_string()))?;
            return CloneName::family(fam, n);
        }
        FIXED_NAMES
            .iter()
            .find(|c| c.to_string() == s)
            .copied()
            .ok_or_else(|| CloneError::UnknownName(s.to_string()))
    }
}

impl Serialize for CloneName {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CloneName {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl CloneName {
    /// Checked constructor for family members.
    pub fn family(fam: Family, n: usize) -> Result<Self, CloneError> {
        if !(2..=MAX_FAMILY_DEGREE).contains(&n) {
            return Err(CloneError::DegreeOutOfRange(n));
        }
        Ok(CloneName::Fam(fam, n))
    }

    /// All clone names, with family parameters truncated at `max_n`.
    pub fn all(max_n: usize) -> Vec<CloneName> {
        let mut names: Vec<CloneName> = FIXED_NAMES.to_vec();
        for fam in ALL_FAMILIES {
            for n in 2..=max_n.min(MAX_FAMILY_DEGREE) {
                names.push(CloneName::Fam(fam, n));
            }
        }
        names
    }
}

/// Conjunction of the clone-defining predicates over a basis. Separation
/// fields carry the minimum exact degree over the basis functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PropertySignature {
    pub r0: bool,
    pub r1: bool,
    pub monotone: bool,
    pub self_dual: bool,
    pub affine: bool,
    pub sep0: SeparationDegree,
    pub sep1: SeparationDegree,
    pub or_shape: bool,
    pub and_shape: bool,
    pub unary_shape: bool,
    pub projection_shape: bool,
}

impl PropertySignature {
    /// Signature of the empty basis: every predicate holds vacuously.
    pub fn top() -> Self {
        PropertySignature {
            r0: true,
            r1: true,
            monotone: true,
            self_dual: true,
            affine: true,
            sep0: SeparationDegree::Full,
            sep1: SeparationDegree::Full,
            or_shape: true,
            and_shape: true,
            unary_shape: true,
            projection_shape: true,
        }
    }

    fn meet(&mut self, other: &PropertySignature) {
        self.r0 &= other.r0;
        self.r1 &= other.r1;
        self.monotone &= other.monotone;
        self.self_dual &= other.self_dual;
        self.affine &= other.affine;
        self.sep0 = self.sep0.min(other.sep0);
        self.sep1 = self.sep1.min(other.sep1);
        self.or_shape &= other.or_shape;
        self.and_shape &= other.and_shape;
        self.unary_shape &= other.unary_shape;
        self.projection_shape &= other.projection_shape;
    }

    /// `self` satisfies at least the predicates of `weaker`: every boolean
    /// field true in `weaker` is true here and the separation degrees are at
    /// least as strong. Functions with a dominating signature belong to the
    /// clone `weaker` describes.
    pub fn dominates(&self, weaker: &PropertySignature) -> bool {
        (!weaker.r0 || self.r0)
            && (!weaker.r1 || self.r1)
            && (!weaker.monotone || self.monotone)
            && (!weaker.self_dual || self.self_dual)
            && (!weaker.affine || self.affine)
            && self.sep0 >= weaker.sep0
            && self.sep1 >= weaker.sep1
            && (!weaker.or_shape || self.or_shape)
            && (!weaker.and_shape || self.and_shape)
            && (!weaker.unary_shape || self.unary_shape)
            && (!weaker.projection_shape || self.projection_shape)
    }
}

fn signature_of_function(t: &TruthTable) -> PropertySignature {
    let shapes = t.shape_predicates();
    let constant = shapes.is_constant(false) || shapes.is_constant(true);
    PropertySignature {
        r0: t.is_reproducing(false),
        r1: t.is_reproducing(true),
        monotone: t.is_monotone(),
        self_dual: t.is_self_dual(),
        affine: t.is_affine(),
        sep0: t.separation_degree(false),
        sep1: t.separation_degree(true),
        or_shape: shapes.is_or_function,
        and_shape: shapes.is_and_function,
        unary_shape: constant
            || shapes.essentially_unary_projection
            || shapes.essentially_unary_negation,
        projection_shape: constant || shapes.essentially_unary_projection,
    }
}

/// Componentwise conjunction of the predicates over a basis.
pub fn signature_of(base: &[TruthTable]) -> PropertySignature {
    let mut sig = PropertySignature::top();
    for t in base {
        sig.meet(&signature_of_function(t));
    }
    sig
}

// ---------------------------------------------------------------------------
// Standard bases (first listed basis per clone).

fn and2() -> TruthTable {
    TruthTable::from_fn(2, |a| a[0] && a[1])
}
fn or2() -> TruthTable {
    TruthTable::from_fn(2, |a| a[0] || a[1])
}
fn not1() -> TruthTable {
    TruthTable::from_fn(1, |a| !a[0])
}
fn xor2() -> TruthTable {
    TruthTable::from_fn(2, |a| a[0] ^ a[1])
}
fn xnor2() -> TruthTable {
    TruthTable::from_fn(2, |a| !(a[0] ^ a[1]))
}
fn imp2() -> TruthTable {
    TruthTable::from_fn(2, |a| !a[0] || a[1])
}
fn id1() -> TruthTable {
    TruthTable::projection(1, 0)
}
fn nimpl2() -> TruthTable {
    // x and not y
    TruthTable::from_fn(2, |a| a[0] && !a[1])
}
fn x_or_y_and_not_z() -> TruthTable {
    TruthTable::from_fn(3, |a| a[0] || (a[1] && !a[2]))
}
fn x_and_y_or_not_z() -> TruthTable {
    TruthTable::from_fn(3, |a| a[0] && (a[1] || !a[2]))
}
fn x_or_y_and_z() -> TruthTable {
    TruthTable::from_fn(3, |a| a[0] || (a[1] && a[2]))
}
fn x_and_y_or_z() -> TruthTable {
    TruthTable::from_fn(3, |a| a[0] && (a[1] || a[2]))
}
fn x_and_xnor_yz() -> TruthTable {
    TruthTable::from_fn(3, |a| a[0] && !(a[1] ^ a[2]))
}
fn xor3() -> TruthTable {
    TruthTable::from_fn(3, |a| a[0] ^ a[1] ^ a[2])
}
fn xnor3() -> TruthTable {
    TruthTable::from_fn(3, |a| !(a[0] ^ a[1] ^ a[2]))
}
fn d_base() -> TruthTable {
    // majority of (x, not y, not z)
    TruthTable::from_fn(3, |a| {
        (a[0] as u8 + !a[1] as u8 + !a[2] as u8) >= 2
    })
}
fn d1_base() -> TruthTable {
    // majority of (x, y, not z)
    TruthTable::from_fn(3, |a| (a[0] as u8 + a[1] as u8 + !a[2] as u8) >= 2)
}

/// The `(k+1)`-ary threshold function: true when at least `k` inputs are.
pub fn threshold(k: usize) -> TruthTable {
    assert!((1..crate::MAX_ARITY).contains(&k));
    TruthTable::from_fn(k + 1, move |a| a.iter().filter(|&&b| b).count() >= k)
}

/// Ternary majority, the threshold function for degree 2.
pub fn majority3() -> TruthTable {
    threshold(2)
}

/// The first listed standard basis of a named clone.
pub fn standard_base(c: CloneName) -> Vec<TruthTable> {
    let t0 = TruthTable::constant(false);
    let t1 = TruthTable::constant(true);
    match c {
        CloneName::Bf => vec![and2(), not1()],
        CloneName::R0 => vec![and2(), xor2()],
        CloneName::R1 => vec![or2(), xnor2()],
        CloneName::R2 => vec![or2(), x_and_xnor_yz()],
        CloneName::M => vec![and2(), or2(), t0, t1],
        CloneName::M0 => vec![and2(), or2(), t0],
        CloneName::M1 => vec![and2(), or2(), t1],
        CloneName::M2 => vec![and2(), or2()],
        CloneName::S0 => vec![imp2()],
        CloneName::S1 => vec![nimpl2()],
        CloneName::S00 => vec![x_or_y_and_z()],
        CloneName::S01 => vec![x_or_y_and_z(), t1],
        CloneName::S02 => vec![x_or_y_and_not_z()],
        CloneName::S10 => vec![x_and_y_or_z()],
        CloneName::S11 => vec![x_and_y_or_z(), t0],
        CloneName::S12 => vec![x_and_y_or_not_z()],
        CloneName::D => vec![d_base()],
        CloneName::D1 => vec![d1_base()],
        CloneName::D2 => vec![majority3()],
        CloneName::L => vec![xor2(), t1],
        CloneName::L0 => vec![xor2()],
        CloneName::L1 => vec![xnor2()],
        CloneName::L2 => vec![xor3()],
        CloneName::L3 => vec![xnor3()],
        CloneName::V => vec![or2(), t0, t1],
        CloneName::V0 => vec![or2(), t0],
        CloneName::V1 => vec![or2(), t1],
        CloneName::V2 => vec![or2()],
        CloneName::E => vec![and2(), t0, t1],
        CloneName::E0 => vec![and2(), t0],
        CloneName::E1 => vec![and2(), t1],
        CloneName::E2 => vec![and2()],
        CloneName::N => vec![not1(), t1],
        CloneName::N2 => vec![not1()],
        CloneName::I => vec![id1(), t0, t1],
        CloneName::I0 => vec![id1(), t0],
        CloneName::I1 => vec![id1(), t1],
        CloneName::I2 => vec![id1()],
        CloneName::Fam(fam, n) => match fam {
            Family::S0n => vec![imp2(), threshold(n).dual()],
            Family::S1n => vec![nimpl2(), threshold(n)],
            Family::S00n => vec![x_or_y_and_z(), threshold(n).dual()],
            Family::S01n => vec![threshold(n).dual(), t1],
            Family::S02n => vec![x_or_y_and_not_z(), threshold(n).dual()],
            Family::S10n => vec![x_and_y_or_z(), threshold(n)],
            Family::S11n => vec![threshold(n), t0],
            Family::S12n => vec![x_and_y_or_not_z(), threshold(n)],
        },
    }
}

// ---------------------------------------------------------------------------
// Signature table and matching.

fn fixed_signatures() -> &'static HashMap<CloneName, PropertySignature> {
    static SIGS: OnceLock<HashMap<CloneName, PropertySignature>> = OnceLock::new();
    SIGS.get_or_init(|| {
        FIXED_NAMES
            .iter()
            .map(|&c| (c, signature_of(&standard_base(c))))
            .collect()
    })
}

fn family_signature(fam: Family, n: usize) -> PropertySignature {
    static CACHE: OnceLock<Mutex<HashMap<(Family, usize), PropertySignature>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(sig) = cache.lock().unwrap().get(&(fam, n)) {
        return *sig;
    }
    let sig = signature_of(&standard_base(CloneName::Fam(fam, n)));
    cache.lock().unwrap().insert((fam, n), sig);
    sig
}

/// Signature of a named clone: the predicates satisfied by every one of its
/// members, computed from the standard basis.
pub fn clone_signature(c: CloneName) -> PropertySignature {
    match c {
        CloneName::Fam(fam, n) => family_signature(fam, n),
        fixed => fixed_signatures()[&fixed],
    }
}

/// The clone generated by a basis, named. The empty basis generates the
/// projection clone I2.
pub fn clone_of(base: &[TruthTable]) -> CloneName {
    let sig = signature_of(base);
    match match_signature(&sig) {
        Some(c) => c,
        None => unreachable!("no clone matches signature {sig:?}"),
    }
}

fn match_signature(sig: &PropertySignature) -> Option<CloneName> {
    for &c in FIXED_NAMES.iter() {
        if clone_signature(c) == *sig {
            return Some(c);
        }
    }
    // Only family members whose parameter equals one of the exact degrees
    // in the signature can match.
    let mut candidates: Vec<CloneName> = Vec::new();
    if let SeparationDegree::Degree(k) = sig.sep0 {
        for fam in [Family::S0n, Family::S00n, Family::S01n, Family::S02n] {
            if let Ok(c) = CloneName::family(fam, k) {
                candidates.push(c);
            }
        }
    }
    if let SeparationDegree::Degree(k) = sig.sep1 {
        for fam in [Family::S1n, Family::S10n, Family::S11n, Family::S12n] {
            if let Ok(c) = CloneName::family(fam, k) {
                candidates.push(c);
            }
        }
    }
    candidates.into_iter().find(|&c| clone_signature(c) == *sig)
}

/// Lattice inclusion: is `inner` a subclone of `outer`?
///
/// Decided by signature dominance: `inner`'s members satisfy every defining
/// predicate of `outer` exactly when `inner`'s signature dominates.
pub fn includes(outer: CloneName, inner: CloneName) -> bool {
    clone_signature(inner).dominates(&clone_signature(outer))
}

/// Membership of a single function in a named clone.
pub fn member(t: &TruthTable, c: CloneName) -> bool {
    signature_of_function(t).dominates(&clone_signature(c))
}

/// The clone generated by adding one constant to a named clone.
pub fn join_with_constant(c: CloneName, bit: bool) -> CloneName {
    let mut base = standard_base(c);
    base.push(TruthTable::constant(bit));
    clone_of(&base)
}

/// The clone of the duals of a clone's members; an involution on the lattice.
pub fn dual_clone(c: CloneName) -> CloneName {
    let base: Vec<TruthTable> = standard_base(c).iter().map(|t| t.dual()).collect();
    clone_of(&base)
}

/// The least `k >= 2` whose threshold function lies in the clone, if any.
pub fn threshold_in_clone(c: CloneName) -> Option<usize> {
    let sig = clone_signature(c);
    let upper = match sig.sep1 {
        SeparationDegree::Full => return None, // no threshold is fully separating
        SeparationDegree::Degree(k) => k.max(3),
        SeparationDegree::NotSeparating => 3,
    };
    (2..=upper).find(|&k| member(&threshold(k), c))
}

// ---------------------------------------------------------------------------
// Brute-force closure oracle.

/// The exact set of `arity`-ary members of the clone generated by `base`,
/// computed as a composition fixpoint from the projections (plus lifted
/// 0-ary basis constants). Validation-grade: `arity <= 4`.
pub fn closure_oracle(
    base: &[TruthTable],
    arity: usize,
) -> Result<BTreeSet<TruthTable>, CloneError> {
    if arity > 4 {
        return Err(CloneError::OracleArity(arity));
    }
    let size = 1usize << arity;
    let mask: u32 = if size == 32 { u32::MAX } else { (1u32 << size) - 1 };
    let mut known = vec![false; 1usize << size];
    let mut members: Vec<u32> = Vec::new();
    let mut frontier: Vec<u32> = Vec::new();

    let add = |bits: u32, known: &mut Vec<bool>, frontier: &mut Vec<u32>| {
        if !known[bits as usize] {
            known[bits as usize] = true;
            frontier.push(bits);
        }
    };

    for j in 0..arity {
        let mut bits = 0u32;
        for i in 0..size {
            if (i >> j) & 1 == 1 {
                bits |= 1 << i;
            }
        }
        add(bits, &mut known, &mut frontier);
    }
    for t in base {
        if t.arity() == 0 {
            let bits = if t.bit(0) { mask } else { 0 };
            add(bits, &mut known, &mut frontier);
        }
    }

    // Apply base functions to argument tuples until nothing new appears;
    // each round only considers tuples touching the previous frontier.
    while !frontier.is_empty() {
        members.extend(frontier.iter().copied());
        let fresh = std::mem::take(&mut frontier);
        let all: Vec<u32> = members.clone();
        for t in base {
            let k = t.arity();
            if k == 0 {
                continue;
            }
            let mut args = vec![0u32; k];
            apply_tuples(t, &all, &fresh, &mut args, 0, false, size, &mut |bits| {
                add(bits & mask, &mut known, &mut frontier)
            });
        }
    }

    Ok(members
        .into_iter()
        .map(|bits| TruthTable::from_u16(arity, bits as u16))
        .collect())
}

/// Enumerate applications of `t` to argument tuples over `all`, requiring at
/// least one argument from `fresh` (unless `fresh` holds everything).
#[allow(clippy::too_many_arguments)]
fn apply_tuples(
    t: &TruthTable,
    all: &[u32],
    fresh: &[u32],
    args: &mut [u32],
    pos: usize,
    has_fresh: bool,
    size: usize,
    out: &mut impl FnMut(u32),
) {
    let k = args.len();
    if pos == k {
        if !has_fresh && all.len() != fresh.len() {
            return;
        }
        let mut bits = 0u32;
        for i in 0..size {
            let mut tuple = vec![false; k];
            for (j, a) in args.iter().enumerate() {
                tuple[j] = (a >> i) & 1 == 1;
            }
            if t.eval(&tuple).expect("arity checked") {
                bits |= 1 << i;
            }
        }
        out(bits);
        return;
    }
    for &a in all {
        args[pos] = a;
        let is_fresh = fresh.contains(&a);
        apply_tuples(t, all, fresh, args, pos + 1, has_fresh || is_fresh, size, out);
    }
}

// ---------------------------------------------------------------------------
// Lattice rendering.

/// DOT digraph of the lattice fragment with families truncated at `max_n`.
/// Edges are covering edges of the truncated poset and point from the
/// smaller clone to the larger.
pub fn lattice_dot(max_n: usize) -> String {
    let names = CloneName::all(max_n.max(2));
    let n = names.len();
    let mut leq = vec![vec![false; n]; n];
    for (i, &a) in names.iter().enumerate() {
        for (j, &b) in names.iter().enumerate() {
            leq[i][j] = includes(b, a); // a <= b
        }
    }
    let mut out = String::from("digraph boolean_clones {\n  rankdir=BT;\n  node [shape=box];\n");
    for &c in &names {
        out.push_str(&format!("  \"{c}\";\n"));
    }
    for i in 0..n {
        for j in 0..n {
            if i == j || !leq[i][j] || leq[j][i] {
                continue;
            }
            let covering = (0..n).all(|k| {
                k == i || k == j || !(leq[i][k] && leq[k][j] && !leq[k][i] && !leq[j][k])
            });
            if covering {
                out.push_str(&format!("  \"{}\" -> \"{}\";\n", names[i], names[j]));
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signature_examples() {
        let sig = signature_of(&[and2(), or2()]);
        assert!(sig.monotone && sig.r0 && sig.r1);
        assert!(!sig.self_dual && !sig.affine);

        let sig = signature_of(&[xor3()]);
        assert!(sig.affine && sig.self_dual && sig.r0 && sig.r1);

        let sig = signature_of(&[not1()]);
        assert!(sig.affine && sig.unary_shape);
        assert!(!sig.r0 && !sig.r1 && !sig.projection_shape);
    }

    #[test]
    fn clone_of_examples() {
        assert_eq!(clone_of(&[and2(), or2()]), CloneName::M2);
        assert_eq!(clone_of(&[imp2()]), CloneName::S0);
        assert_eq!(
            clone_of(&[nimpl2(), TruthTable::constant(true)]),
            CloneName::Bf
        );
        assert_eq!(clone_of(&[]), CloneName::I2);
        assert_eq!(clone_of(&[majority3()]), CloneName::D2);
        assert_eq!(clone_of(&[threshold(3)]), CloneName::Fam(Family::S10n, 3));
    }

    #[test]
    fn includes_examples() {
        assert!(includes(CloneName::D1, CloneName::L2));
        assert!(includes(CloneName::D1, CloneName::D2));
        assert!(!includes(CloneName::E, CloneName::V));
        assert!(includes(CloneName::Bf, CloneName::I2));
        assert!(includes(
            CloneName::Fam(Family::S0n, 2),
            CloneName::Fam(Family::S0n, 3)
        ));
        assert!(includes(CloneName::Fam(Family::S0n, 3), CloneName::S0));
        assert!(!includes(CloneName::Fam(Family::S0n, 3), CloneName::Fam(Family::S0n, 2)));
    }

    #[test]
    fn join_with_constant_examples() {
        assert_eq!(join_with_constant(CloneName::S12, true), CloneName::R1);
        assert_eq!(join_with_constant(CloneName::S12, false), CloneName::S1);
        assert_eq!(join_with_constant(CloneName::S02, false), CloneName::R0);
        assert_eq!(join_with_constant(CloneName::S1, true), CloneName::Bf);
    }

    #[test]
    fn dual_clone_examples() {
        assert_eq!(dual_clone(CloneName::S0), CloneName::S1);
        assert_eq!(dual_clone(CloneName::D), CloneName::D);
        assert_eq!(dual_clone(CloneName::V), CloneName::E);
        for c in CloneName::all(4) {
            assert_eq!(dual_clone(dual_clone(c)), c, "{c}");
        }
    }

    #[test]
    fn threshold_in_clone_examples() {
        assert_eq!(threshold_in_clone(CloneName::Bf), Some(2));
        assert_eq!(threshold_in_clone(CloneName::R2), Some(2));
        assert_eq!(threshold_in_clone(CloneName::L), None);
        assert_eq!(threshold_in_clone(CloneName::S12), None);
        assert_eq!(
            threshold_in_clone(CloneName::Fam(Family::S12n, 3)),
            Some(3)
        );
        assert_eq!(threshold_in_clone(CloneName::D2), Some(2));
    }

    #[test]
    fn round_trip_all_names() {
        for c in CloneName::all(4) {
            assert_eq!(clone_of(&standard_base(c)), c, "round-trip failed for {c}");
        }
    }

    #[test]
    fn parse_display_round_trip() {
        for c in CloneName::all(3) {
            let s = c.to_string();
            assert_eq!(s.parse::<CloneName>().unwrap(), c);
        }
        assert!("S02^1".parse::<CloneName>().is_err());
        assert!("S02^16".parse::<CloneName>().is_err());
        assert!("Q7".parse::<CloneName>().is_err());
    }

    #[test]
    fn closure_oracle_examples() {
        let closure = closure_oracle(&[and2()], 2).unwrap();
        let expected: BTreeSet<TruthTable> = [
            TruthTable::projection(2, 0),
            TruthTable::projection(2, 1),
            TruthTable::from_fn(2, |a| a[0] && a[1]),
        ]
        .into_iter()
        .collect();
        assert_eq!(closure, expected);

        let closure = closure_oracle(&[not1()], 1).unwrap();
        assert_eq!(closure.len(), 2);

        // Every 2-ary member of [x ^ y ^ z] is affine and both-reproducing,
        // and vice versa.
        let closure = closure_oracle(&[xor3()], 2).unwrap();
        for bits in 0u16..16 {
            let t = TruthTable::from_u16(2, bits);
            let expected = t.is_affine() && t.is_reproducing(false) && t.is_reproducing(true);
            assert_eq!(closure.contains(&t), expected, "bits {bits:#x}");
        }

        assert!(closure_oracle(&[and2()], 5).is_err());
    }

    #[test]
    fn includes_is_partial_order() {
        let names = CloneName::all(4);
        for &a in &names {
            assert!(includes(a, a));
            for &b in &names {
                if includes(a, b) && includes(b, a) {
                    assert_eq!(a, b);
                }
                for &c in &names {
                    if includes(a, b) && includes(b, c) {
                        assert!(includes(a, c), "{c} <= {b} <= {a}");
                    }
                }
            }
        }
    }

    #[test]
    fn lattice_dot_contains_expected_edges() {
        let dot = lattice_dot(3);
        assert!(dot.contains("\"D2\" -> \"D1\""));
        assert!(!dot.contains("\"D2\" -> \"BF\"")); // not a covering edge
        let dot2 = lattice_dot(2);
        assert!(dot2.contains("\"S02^2\""));
    }

    #[test]
    fn five_maximal_clones_below_the_top() {
        // A base generates everything iff it escapes all five of these.
        let names = CloneName::all(4);
        let mut maximal: Vec<CloneName> = names
            .iter()
            .copied()
            .filter(|&c| c != CloneName::Bf)
            .filter(|&c| {
                !names
                    .iter()
                    .any(|&d| d != c && d != CloneName::Bf && includes(d, c))
            })
            .collect();
        maximal.sort();
        let mut expected = vec![
            CloneName::R0,
            CloneName::R1,
            CloneName::M,
            CloneName::D,
            CloneName::L,
        ];
        expected.sort();
        assert_eq!(maximal, expected);
    }

    #[test]
    fn clone_of_is_total_on_wide_tables() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for _ in 0..30 {
            let arity = rng.gen_range(5..=12usize);
            let t = TruthTable::from_fn(arity, |_| rng.gen_bool(0.5));
            let c = clone_of(std::slice::from_ref(&t));
            assert!(member(&t, c));
        }
        // Structured wide cases: the 16-ary conjunction and the widest
        // representable threshold.
        let and16 = TruthTable::from_fn(16, |a| a.iter().all(|&b| b));
        assert_eq!(clone_of(&[and16]), CloneName::E2);
        let t15 = threshold(15);
        assert_eq!(
            t15.separation_degree(true),
            crate::SeparationDegree::Degree(15)
        );
        assert_eq!(clone_of(&[t15]), CloneName::Fam(Family::S10n, 15));
    }

    #[test]
    fn signature_uniqueness_at_small_parameters() {
        let names = CloneName::all(4);
        for (i, &a) in names.iter().enumerate() {
            for &b in names.iter().skip(i + 1) {
                assert_ne!(
                    clone_signature(a),
                    clone_signature(b),
                    "{a} and {b} share a signature"
                );
            }
        }
    }
}
