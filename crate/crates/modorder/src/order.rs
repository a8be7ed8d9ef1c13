//! The five element orders on a finite module, with checkable witnesses.
//!
//! For a module `M` over its scalar ring `R`, write `S = End(M)` for the
//! enumerated endomorphism monoid-as-ring and `M* = Hom(M, R)` for the dual.
//! The relations decided here are:
//!
//! * **mitsch** — `m1 ≤ m2` iff there are `f ∈ S`, `a ∈ R` with
//!   `m1 = m2·a = f(m2)` and `m1 = f(m1)`. Equivalent forms replace the last
//!   identity by `m1 = m1·a` or require both; power form `p` replaces `f, a`
//!   by `f^p, a^p`. All forms produce the same relation (checked by the test
//!   lab), but each is searched independently.
//! * **minus** — `m1 ≤ m2` iff some `φ ∈ M*` satisfies `m1 = m1·φ(m1)`,
//!   `m1·φ(x) = m2·φ(x)` for every `x`, and `φ(m1) = φ(m2)`.
//! * **jones** — `m1 ≤ m2` iff `m1 = m2·a = f(m2)` for an idempotent
//!   `f ∈ S` and an idempotent scalar `a` (for integer scalars the only
//!   idempotent integers are 0 and 1).
//! * **dsum** — `m1 ≤ m2` iff `m2R = m1R ⊕ (m2−m1)R` (internal direct sum of
//!   cyclic submodules).
//! * **space** — `m1 ≤ m2` iff `S·m1 ⊆ S·m2` and `m1·R ⊆ m2·R`; this is only
//!   a pre-order in general.
//!
//! Every decider returns the first witness in a canonical scan (ascending
//! endomorphism index, then ascending scalar representative), packaged as an
//! [`OrderCertificate`] that [`replay_certificate`] re-verifies against the
//! raw definition with no search. Full relation matrices feed
//! [`PosetMatrix`], which records order-axiom counterexamples, Hasse cover
//! edges, and maximal/minimal elements; [`lattice_report`] finds pairs
//! without a join or meet, and [`order_transfer`] checks how the mitsch
//! order moves along summands, fully invariant submodules, and quotients.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, SIZE_CAP};
use crate::hom::{self, HomTable};
use crate::module::{FiniteModule, SubSet};
use crate::scalar::ScalarRing;
use crate::table::{BitMatrix, Bitset};

/// Tag for one of the five relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Rel {
    Mitsch,
    Minus,
    Jones,
    Dsum,
    Space,
}

impl Rel {
    pub const ALL: [Rel; 5] = [Rel::Mitsch, Rel::Minus, Rel::Jones, Rel::Dsum, Rel::Space];

    pub fn name(self) -> &'static str {
        match self {
            Rel::Mitsch => "mitsch",
            Rel::Minus => "minus",
            Rel::Jones => "jones",
            Rel::Dsum => "dsum",
            Rel::Space => "space",
        }
    }

    pub fn parse(s: &str) -> Result<Rel> {
        match s {
            "mitsch" => Ok(Rel::Mitsch),
            "minus" => Ok(Rel::Minus),
            "jones" => Ok(Rel::Jones),
            "dsum" => Ok(Rel::Dsum),
            "space" => Ok(Rel::Space),
            other => Err(Error::UnknownRelation(other.to_string())),
        }
    }
}

impl std::fmt::Display for Rel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Which auxiliary identity accompanies `m1 = m2·a^p = f^p(m2)` in a mitsch
/// witness: `f^p(m1) = m1`, `m1·a^p = m1`, or both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MitschForm {
    FixEnd,
    FixScalar,
    Both,
}

impl MitschForm {
    fn needs_end_fix(self) -> bool {
        matches!(self, MitschForm::FixEnd | MitschForm::Both)
    }

    fn needs_scalar_fix(self) -> bool {
        matches!(self, MitschForm::FixScalar | MitschForm::Both)
    }
}

/// A checkable witness for one related pair. Endomorphism fields are indices
/// into the module's `HomTable`; scalar fields are scalar representatives;
/// set fields are ascending element-index lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "relation", rename_all = "lowercase")]
pub enum OrderCertificate {
    Mitsch { f: u32, a: u32, form: MitschForm, power: u32 },
    Minus { phi: u32 },
    Jones { f: u32, a: u32 },
    Dsum { m1_orbit: Vec<u32>, diff_orbit: Vec<u32>, intersection: Vec<u32>, sum: Vec<u32> },
    /// `end_witness[f] = g` with `f(m1) = g(m2)`; `scalar_witness[r] = s`
    /// with `m1·r = m2·s`.
    Space { end_witness: Vec<u32>, scalar_witness: Vec<u32> },
}

/// First element of `S·m1` or `m1·R` with no counterpart inside `S·m2`
/// (resp. `m2·R`), reported to make space-order failures legible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "side", rename_all = "lowercase")]
pub enum SpaceEscape {
    End { f: u32, value: u32 },
    Scalar { r: u32, value: u32 },
}

/// `a^power` evaluated in the scalar ring (for integer scalars, modulo the
/// exponent — sound because the action factors through it).
fn scalar_pow(s: &ScalarRing, a: usize, power: u32) -> usize {
    let mut acc = a;
    for _ in 1..power {
        acc = s.mul(acc, a);
    }
    acc
}

/// `f^power` as a full lookup table, written into `out`.
fn power_map(map: &[u32], power: u32, out: &mut Vec<u32>) {
    out.clear();
    out.extend_from_slice(map);
    for _ in 1..power {
        for v in out.iter_mut() {
            *v = map[*v as usize];
        }
    }
}

fn apply_pow(homs: &HomTable, f: usize, power: u32, x: usize) -> usize {
    let mut y = x;
    for _ in 0..power {
        y = homs.apply(f, y);
    }
    y
}

/// `m · a^power` via iterated action; valid because `(m·a)·b = m·(ab)`.
fn act_pow(m: &FiniteModule, x: usize, a: usize, power: u32) -> usize {
    let mut y = x;
    for _ in 0..power {
        y = m.act(y, a);
    }
    y
}

/// Mitsch decider in its defining form (`power = 1`, end fixed point).
pub fn mitsch_leq(
    m: &FiniteModule,
    homs: &HomTable,
    m1: usize,
    m2: usize,
) -> Option<OrderCertificate> {
    mitsch_leq_general(m, homs, m1, m2, MitschForm::FixEnd, 1)
}

/// Mitsch decider for any witness form and power ≥ 1. The two halves of the
/// witness constrain `f` and `a` independently, so the first valid pair in
/// row-major `(f, a)` order is (first valid `f`, first valid `a`).
pub fn mitsch_leq_general(
    m: &FiniteModule,
    homs: &HomTable,
    m1: usize,
    m2: usize,
    form: MitschForm,
    power: u32,
) -> Option<OrderCertificate> {
    debug_assert!(power >= 1);
    let f = (0..homs.len()).find(|&f| {
        apply_pow(homs, f, power, m2) == m1
            && (!form.needs_end_fix() || apply_pow(homs, f, power, m1) == m1)
    })?;
    let a = (0..m.scalars().reps()).find(|&a| {
        act_pow(m, m2, a, power) == m1 && (!form.needs_scalar_fix() || act_pow(m, m1, a, power) == m1)
    })?;
    Some(OrderCertificate::Mitsch { f: f as u32, a: a as u32, form, power })
}

/// Minus decider: first `φ` in the dual with `m1 = m1·φ(m1)`,
/// `m1·φ(x) = m2·φ(x)` for all `x`, and `φ(m1) = φ(m2)`.
pub fn minus_leq(
    m: &FiniteModule,
    dual: &HomTable,
    m1: usize,
    m2: usize,
) -> Option<OrderCertificate> {
    let n = m.size();
    for phi in 0..dual.len() {
        let vals = dual.map(phi);
        if vals[m1] != vals[m2] {
            continue;
        }
        if m.act(m1, vals[m1] as usize) != m1 {
            continue;
        }
        if (0..n).all(|x| m.act(m1, vals[x] as usize) == m.act(m2, vals[x] as usize)) {
            return Some(OrderCertificate::Minus { phi: phi as u32 });
        }
    }
    None
}

/// Jones decider: first idempotent `f ∈ S` with `f(m2) = m1`, first
/// idempotent scalar `a` with `m2·a = m1`. (`f(m1) = m1` follows:
/// `f(m1) = f(f(m2)) = f(m2) = m1`.)
pub fn jones_leq(
    m: &FiniteModule,
    homs: &HomTable,
    m1: usize,
    m2: usize,
) -> Option<OrderCertificate> {
    let f = (0..homs.len()).find(|&f| homs.apply(f, m2) == m1 && homs.is_idempotent(f))?;
    let a = m.scalars().idempotent_scalars().into_iter().find(|&a| m.act(m2, a) == m1)?;
    Some(OrderCertificate::Jones { f: f as u32, a: a as u32 })
}

/// Direct-sum decider: `m2R = m1R ⊕ (m2−m1)R`. Since every `m2·r` equals
/// `m1·r + (m2−m1)·r`, the sum of the two orbits always contains `m2R`, so
/// the decomposition holds iff the orbits meet only in zero and their sizes
/// multiply to `|m2R|`.
pub fn dsum_leq(m: &FiniteModule, m1: usize, m2: usize) -> Option<OrderCertificate> {
    let a = m.cyclic_submodule(m1);
    let b = m.cyclic_submodule(m.sub(m2, m1));
    let c = m.cyclic_submodule(m2);
    if a.bits.intersection_count(&b.bits) != 1 || a.len() * b.len() != c.len() {
        return None;
    }
    let mut sum: Vec<u32> = Vec::with_capacity(c.len());
    let mut seen = Bitset::new(m.size());
    for &x in &a.list {
        for &y in &b.list {
            let s = m.add(x, y);
            if !seen.get(s) {
                seen.set(s);
                sum.push(s as u32);
            }
        }
    }
    sum.sort_unstable();
    Some(OrderCertificate::Dsum {
        m1_orbit: a.list.iter().map(|&x| x as u32).collect(),
        diff_orbit: b.list.iter().map(|&x| x as u32).collect(),
        intersection: vec![m.zero() as u32],
        sum,
    })
}

/// Space decider: every `f(m1)` must be some `g(m2)` and every `m1·r` some
/// `m2·s`; witnesses pick the least such `g`/`s` per element.
pub fn space_leq(
    m: &FiniteModule,
    homs: &HomTable,
    m1: usize,
    m2: usize,
) -> Option<OrderCertificate> {
    let n = m.size();
    let reps = m.scalars().reps();
    const UNSET: u32 = u32::MAX;

    let mut first_g = vec![UNSET; n];
    for g in 0..homs.len() {
        let v = homs.apply(g, m2);
        if first_g[v] == UNSET {
            first_g[v] = g as u32;
        }
    }
    let mut end_witness = Vec::with_capacity(homs.len());
    for f in 0..homs.len() {
        let g = first_g[homs.apply(f, m1)];
        if g == UNSET {
            return None;
        }
        end_witness.push(g);
    }

    let mut first_s = vec![UNSET; n];
    for s in 0..reps {
        let v = m.act(m2, s);
        if first_s[v] == UNSET {
            first_s[v] = s as u32;
        }
    }
    let mut scalar_witness = Vec::with_capacity(reps);
    for r in 0..reps {
        let s = first_s[m.act(m1, r)];
        if s == UNSET {
            return None;
        }
        scalar_witness.push(s);
    }
    Some(OrderCertificate::Space { end_witness, scalar_witness })
}

/// First element of `S·m1 ∪ m1·R` escaping the corresponding orbit of `m2`
/// (endomorphism side scanned first), or `None` when `m1 ≤ m2` under space.
pub fn space_escape(
    m: &FiniteModule,
    homs: &HomTable,
    m1: usize,
    m2: usize,
) -> Option<SpaceEscape> {
    let mut s_orbit2 = Bitset::new(m.size());
    for g in 0..homs.len() {
        s_orbit2.set(homs.apply(g, m2));
    }
    for f in 0..homs.len() {
        let v = homs.apply(f, m1);
        if !s_orbit2.get(v) {
            return Some(SpaceEscape::End { f: f as u32, value: v as u32 });
        }
    }
    let mut r_orbit2 = Bitset::new(m.size());
    for s in 0..m.scalars().reps() {
        r_orbit2.set(m.act(m2, s));
    }
    for r in 0..m.scalars().reps() {
        let v = m.act(m1, r);
        if !r_orbit2.get(v) {
            return Some(SpaceEscape::Scalar { r: r as u32, value: v as u32 });
        }
    }
    None
}

/// Re-verify a certificate against the raw definition of its relation.
/// Performs no search; returns false (never panics) on malformed payloads.
pub fn replay_certificate(
    m: &FiniteModule,
    homs: &HomTable,
    dual: &HomTable,
    m1: usize,
    m2: usize,
    cert: &OrderCertificate,
) -> bool {
    let n = m.size();
    let reps = m.scalars().reps();
    match cert {
        OrderCertificate::Mitsch { f, a, form, power } => {
            let (f, a, p) = (*f as usize, *a as usize, *power);
            if f >= homs.len() || a >= reps || p < 1 {
                return false;
            }
            apply_pow(homs, f, p, m2) == m1
                && act_pow(m, m2, a, p) == m1
                && (!form.needs_end_fix() || apply_pow(homs, f, p, m1) == m1)
                && (!form.needs_scalar_fix() || act_pow(m, m1, a, p) == m1)
        }
        OrderCertificate::Minus { phi } => {
            let phi = *phi as usize;
            if phi >= dual.len() {
                return false;
            }
            let vals = dual.map(phi);
            vals[m1] == vals[m2]
                && m.act(m1, vals[m1] as usize) == m1
                && (0..n).all(|x| m.act(m1, vals[x] as usize) == m.act(m2, vals[x] as usize))
        }
        OrderCertificate::Jones { f, a } => {
            let (f, a) = (*f as usize, *a as usize);
            if f >= homs.len() || a >= reps {
                return false;
            }
            homs.is_idempotent(f)
                && m.scalars().idempotent_scalars().contains(&a)
                && homs.apply(f, m2) == m1
                && m.act(m2, a) == m1
        }
        OrderCertificate::Dsum { m1_orbit, diff_orbit, intersection, sum } => {
            let a = m.cyclic_submodule(m1);
            let b = m.cyclic_submodule(m.sub(m2, m1));
            let c = m.cyclic_submodule(m2);
            let as_u32 = |s: &SubSet| s.list.iter().map(|&x| x as u32).collect::<Vec<_>>();
            if as_u32(&a) != *m1_orbit || as_u32(&b) != *diff_orbit {
                return false;
            }
            if *intersection != vec![m.zero() as u32]
                || a.bits.intersection_count(&b.bits) != 1
            {
                return false;
            }
            let mut seen = Bitset::new(n);
            let mut sum_list: Vec<u32> = Vec::new();
            for &x in &a.list {
                for &y in &b.list {
                    let s = m.add(x, y);
                    if !seen.get(s) {
                        seen.set(s);
                        sum_list.push(s as u32);
                    }
                }
            }
            sum_list.sort_unstable();
            sum_list == *sum && sum_list == as_u32(&c)
        }
        OrderCertificate::Space { end_witness, scalar_witness } => {
            if end_witness.len() != homs.len() || scalar_witness.len() != reps {
                return false;
            }
            end_witness.iter().enumerate().all(|(f, &g)| {
                (g as usize) < homs.len() && homs.apply(g as usize, m2) == homs.apply(f, m1)
            }) && scalar_witness.iter().enumerate().all(|(r, &s)| {
                (s as usize) < reps && m.act(m2, s as usize) == m.act(m1, r)
            })
        }
    }
}

// ---------------------------------------------------------------------------
// Relation matrices
// ---------------------------------------------------------------------------

/// Bitset per element `x`: the cyclic orbit `x·R` (over scalar representatives).
pub fn r_orbit_bitsets(m: &FiniteModule) -> Vec<Bitset> {
    let n = m.size();
    (0..n)
        .map(|x| {
            let mut b = Bitset::new(n);
            for a in 0..m.scalars().reps() {
                b.set(m.act(x, a));
            }
            b
        })
        .collect()
}

/// Bitset per element `x`: the orbit `S·x = {f(x) : f ∈ End(M)}`.
pub fn s_orbit_bitsets(m: &FiniteModule, homs: &HomTable) -> Vec<Bitset> {
    let n = m.size();
    let mut out: Vec<Bitset> = (0..n).map(|_| Bitset::new(n)).collect();
    for f in 0..homs.len() {
        let map = homs.map(f);
        for (x, &v) in map.iter().enumerate() {
            out[x].set(v as usize);
        }
    }
    out
}

/// Bitset per element `d`: the right annihilator `{a : d·a = 0}` over scalar
/// representatives.
pub fn annihilator_bitsets(m: &FiniteModule) -> Vec<Bitset> {
    (0..m.size()).map(|d| hom::right_annihilator(m, d)).collect()
}

/// Full mitsch matrix for the given form and power: `bits[m1][m2] = m1 ≤ m2`.
/// Both witness halves are scanned separately (`O(|S|·n + reps·n)`), then
/// intersected.
pub fn mitsch_matrix(m: &FiniteModule, homs: &HomTable, form: MitschForm, power: u32) -> BitMatrix {
    let n = m.size();
    let mut fbit = BitMatrix::new(n);
    let mut fp: Vec<u32> = Vec::with_capacity(n);
    for f in 0..homs.len() {
        power_map(homs.map(f), power, &mut fp);
        for m2 in 0..n {
            let t = fp[m2] as usize;
            if form.needs_end_fix() && fp[t] as usize != t {
                continue;
            }
            fbit.set(t, m2);
        }
    }
    let mut abit = BitMatrix::new(n);
    for a in 0..m.scalars().reps() {
        let ap = scalar_pow(m.scalars(), a, power);
        for m2 in 0..n {
            let t = m.act(m2, ap);
            if form.needs_scalar_fix() && m.act(t, ap) != t {
                continue;
            }
            abit.set(t, m2);
        }
    }
    fbit.and_with(&abit);
    fbit
}

/// Full jones matrix: same separable scan restricted to idempotents.
pub fn jones_matrix(m: &FiniteModule, homs: &HomTable) -> BitMatrix {
    let n = m.size();
    let mut fbit = BitMatrix::new(n);
    for f in 0..homs.len() {
        if !homs.is_idempotent(f) {
            continue;
        }
        let map = homs.map(f);
        for (m2, &im) in map.iter().enumerate() {
            fbit.set(im as usize, m2);
        }
    }
    let mut abit = BitMatrix::new(n);
    for a in m.scalars().idempotent_scalars() {
        for m2 in 0..n {
            abit.set(m.act(m2, a), m2);
        }
    }
    fbit.and_with(&abit);
    fbit
}

/// Full minus matrix. Per functional `φ`, only elements fixed by `·φ(·)` can
/// sit on the left, and only elements with the same `φ`-value as `m1` on the
/// right; the remaining condition `m1·φ(x) = m2·φ(x) ∀x` is the subset test
/// `Im(φ) ⊆ ann(m1 − m2)` on precomputed annihilator bitsets.
pub fn minus_matrix(m: &FiniteModule, dual: &HomTable) -> BitMatrix {
    let n = m.size();
    let reps = m.scalars().reps();
    let ann = annihilator_bitsets(m);
    let mut out = BitMatrix::new(n);
    let mut buckets: Vec<Vec<u32>> = vec![Vec::new(); reps];
    for phi in 0..dual.len() {
        let vals = dual.map(phi);
        let mut im = Bitset::new(reps);
        for b in buckets.iter_mut() {
            b.clear();
        }
        for (x, &v) in vals.iter().enumerate() {
            im.set(v as usize);
            buckets[v as usize].push(x as u32);
        }
        for m1 in 0..n {
            if m.act(m1, vals[m1] as usize) != m1 {
                continue;
            }
            for &m2 in &buckets[vals[m1] as usize] {
                let m2 = m2 as usize;
                if out.get(m1, m2) {
                    continue;
                }
                if im.is_subset_of(&ann[m.sub(m1, m2)]) {
                    out.set(m1, m2);
                }
            }
        }
    }
    out
}

/// Full dsum matrix via orbit bitsets and the size identity
/// `|m1R|·|(m2−m1)R| = |m2R|` with trivial intersection.
pub fn dsum_matrix(m: &FiniteModule) -> BitMatrix {
    let n = m.size();
    let orbits = r_orbit_bitsets(m);
    let counts: Vec<usize> = orbits.iter().map(|b| b.count_ones()).collect();
    let mut out = BitMatrix::new(n);
    for m1 in 0..n {
        for m2 in 0..n {
            let d = m.sub(m2, m1);
            if counts[m1] * counts[d] == counts[m2]
                && orbits[m1].intersection_count(&orbits[d]) == 1
            {
                out.set(m1, m2);
            }
        }
    }
    out
}

/// Full space matrix via orbit-bitset inclusion tests.
pub fn space_matrix(m: &FiniteModule, homs: &HomTable) -> BitMatrix {
    let n = m.size();
    let r_orbits = r_orbit_bitsets(m);
    let s_orbits = s_orbit_bitsets(m, homs);
    let mut out = BitMatrix::new(n);
    for m1 in 0..n {
        for m2 in 0..n {
            if s_orbits[m1].is_subset_of(&s_orbits[m2]) && r_orbits[m1].is_subset_of(&r_orbits[m2])
            {
                out.set(m1, m2);
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Poset analytics
// ---------------------------------------------------------------------------

/// First counterexample to each order axiom, or `None` when the axiom holds.
/// Counterexamples use the canonical row-major scan, so they are stable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    /// First `m` with `¬(m ≤ m)`.
    pub reflexivity_failure: Option<u32>,
    /// First `(i, j)`, `i ≠ j`, with `i ≤ j` and `j ≤ i`.
    pub antisymmetry_failure: Option<(u32, u32)>,
    /// First `(i, j, k)` with `i ≤ j ≤ k` but `¬(i ≤ k)`.
    pub transitivity_failure: Option<(u32, u32, u32)>,
}

impl AxiomReport {
    pub fn is_partial_order(&self) -> bool {
        self.reflexivity_failure.is_none()
            && self.antisymmetry_failure.is_none()
            && self.transitivity_failure.is_none()
    }

    /// Reflexive and transitive (antisymmetry not required).
    pub fn is_preorder(&self) -> bool {
        self.reflexivity_failure.is_none() && self.transitivity_failure.is_none()
    }
}

/// A full relation matrix together with axiom diagnostics and, when the
/// axioms allow, order analytics. `bits[i][j]` means `i ≤ j`.
///
/// * `hasse` (cover edges `(lower, upper)`, lexicographically sorted) is
///   present only for partial orders, where it is the transitive reduction.
/// * `maximal` / `minimal` (elements without strict successor/predecessor,
///   strictness meaning `x ≤ y ∧ ¬(y ≤ x)`) are present for pre-orders, so a
///   space pre-order that fails antisymmetry still reports them.
#[derive(Debug, Clone)]
pub struct PosetMatrix {
    pub relation: Rel,
    pub bits: BitMatrix,
    pub axioms: AxiomReport,
    pub hasse: Option<Vec<(u32, u32)>>,
    pub maximal: Option<Vec<u32>>,
    pub minimal: Option<Vec<u32>>,
}

impl PosetMatrix {
    pub fn size(&self) -> usize {
        self.bits.size()
    }

    pub fn related(&self, m1: usize, m2: usize) -> bool {
        self.bits.get(m1, m2)
    }
}

/// The strict part `x < y ⟺ x ≤ y ∧ ¬(y ≤ x)` of a relation matrix.
fn strict_matrix(bits: &BitMatrix) -> BitMatrix {
    let n = bits.size();
    let mut s = BitMatrix::new(n);
    for i in 0..n {
        for j in bits.row_iter_ones(i).collect::<Vec<_>>() {
            if !bits.get(j, i) {
                s.set(i, j);
            }
        }
    }
    s
}

fn axiom_report(bits: &BitMatrix) -> AxiomReport {
    let n = bits.size();
    let reflexivity_failure = (0..n).find(|&i| !bits.get(i, i)).map(|i| i as u32);

    let mut antisymmetry_failure = None;
    'anti: for i in 0..n {
        for j in bits.row_iter_ones(i).collect::<Vec<_>>() {
            if j != i && bits.get(j, i) {
                antisymmetry_failure = Some((i as u32, j as u32));
                break 'anti;
            }
        }
    }

    let mut transitivity_failure = None;
    'trans: for i in 0..n {
        for j in bits.row_iter_ones(i).collect::<Vec<_>>() {
            if let Some(k) = bits.row_first_not_in(j, i) {
                transitivity_failure = Some((i as u32, j as u32, k as u32));
                break 'trans;
            }
        }
    }

    AxiomReport { reflexivity_failure, antisymmetry_failure, transitivity_failure }
}

/// Wrap a relation matrix in axiom diagnostics and (axioms permitting)
/// Hasse/extremal analytics.
pub fn poset_from_bits(relation: Rel, bits: BitMatrix) -> PosetMatrix {
    let n = bits.size();
    let axioms = axiom_report(&bits);

    let (hasse, maximal, minimal) = if axioms.is_preorder() {
        let strict = strict_matrix(&bits);
        let strict_t = strict.transpose();
        let maximal: Vec<u32> =
            (0..n).filter(|&i| strict.row_count_ones(i) == 0).map(|i| i as u32).collect();
        let minimal: Vec<u32> =
            (0..n).filter(|&i| strict_t.row_count_ones(i) == 0).map(|i| i as u32).collect();
        let hasse = if axioms.is_partial_order() {
            let mut covers = Vec::new();
            for i in 0..n {
                for j in strict.row_iter_ones(i).collect::<Vec<_>>() {
                    // (i, j) is a cover iff no k has i < k < j.
                    if !strict.rows_intersect(i, &strict_t, j) {
                        covers.push((i as u32, j as u32));
                    }
                }
            }
            Some(covers)
        } else {
            None
        };
        (hasse, Some(maximal), Some(minimal))
    } else {
        (None, None, None)
    };

    PosetMatrix { relation, bits, axioms, hasse, maximal, minimal }
}

/// Build the full matrix for one relation and wrap it in poset analytics.
pub fn relation_matrix(
    m: &FiniteModule,
    homs: &HomTable,
    dual: &HomTable,
    rel: Rel,
) -> Result<PosetMatrix> {
    let n = m.size();
    if n > SIZE_CAP {
        return Err(Error::CapacityExceeded { what: "relation matrix side", size: n, cap: SIZE_CAP });
    }
    let bits = match rel {
        Rel::Mitsch => mitsch_matrix(m, homs, MitschForm::FixEnd, 1),
        Rel::Minus => minus_matrix(m, dual),
        Rel::Jones => jones_matrix(m, homs),
        Rel::Dsum => dsum_matrix(m),
        Rel::Space => space_matrix(m, homs),
    };
    Ok(poset_from_bits(rel, bits))
}

/// A pair without a unique least upper (greatest lower) bound, with the full
/// bound set and its minimal (maximal) elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeGap {
    pub pair: (u32, u32),
    pub bounds: Vec<u32>,
    pub extremal_bounds: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeReport {
    pub is_lattice: bool,
    pub join_gap: Option<LatticeGap>,
    pub meet_gap: Option<LatticeGap>,
}

/// Scan all unordered pairs for join/meet existence. A finite poset pair has
/// a join iff its upper-bound set has exactly one minimal element (every
/// bound sits above some minimal bound, so a unique minimal is a least).
/// Comparable pairs always have both and are skipped; the first gap of each
/// kind in row-major pair order is reported.
pub fn lattice_report(p: &PosetMatrix) -> Result<LatticeReport> {
    if !p.axioms.is_partial_order() {
        return Err(Error::NotAPartialOrder(format!(
            "{} relation fails partial-order axioms: {:?}",
            p.relation, p.axioms
        )));
    }
    let n = p.bits.size();
    let up = &p.bits;
    let down = p.bits.transpose();
    let strict = strict_matrix(&p.bits);
    let strict_t = strict.transpose();

    let bound_gap = |rows: &BitMatrix, extremal_blocker: &BitMatrix, i: usize, j: usize| {
        let words: Vec<u64> =
            rows.row(i).iter().zip(rows.row(j)).map(|(x, y)| x & y).collect();
        let bounds: Vec<u32> = (0..n).filter(|&k| words[k / 64] >> (k % 64) & 1 == 1).map(|k| k as u32).collect();
        // A bound is extremal when no other bound lies strictly inside it.
        let extremal: Vec<u32> = bounds
            .iter()
            .copied()
            .filter(|&k| {
                extremal_blocker
                    .row(k as usize)
                    .iter()
                    .zip(&words)
                    .all(|(x, y)| x & y == 0)
            })
            .collect();
        if extremal.len() == 1 {
            None
        } else {
            Some(LatticeGap { pair: (i as u32, j as u32), bounds, extremal_bounds: extremal })
        }
    };

    let mut join_gap = None;
    let mut meet_gap = None;
    'outer: for i in 0..n {
        for j in (i + 1)..n {
            if up.get(i, j) || up.get(j, i) {
                continue;
            }
            if join_gap.is_none() {
                join_gap = bound_gap(up, &strict_t, i, j);
            }
            if meet_gap.is_none() {
                meet_gap = bound_gap(&down, &strict, i, j);
            }
            if join_gap.is_some() && meet_gap.is_some() {
                break 'outer;
            }
        }
    }
    Ok(LatticeReport { is_lattice: join_gap.is_none() && meet_gap.is_none(), join_gap, meet_gap })
}

// ---------------------------------------------------------------------------
// Maximality predicates
// ---------------------------------------------------------------------------

/// Six sufficient conditions for mitsch-maximality of one element, plus the
/// ground truth read off the mitsch matrix.
///
/// For integer scalars the dual of a finite module is zero and annihilators
/// always contain the additive exponent, so `left_invertible`,
/// `ann_shift_units` (`b+1 ∈ {±1}` would force `r(m) ⊆ {0, −2}`), and
/// `ann_zero` are false by construction; they are still reported so the
/// implication "flag ⟹ maximal" can be audited uniformly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaximalityReport {
    pub element: u32,
    /// Some `φ ∈ M*` has `φ(m) = 1` in the scalar ring.
    pub left_invertible: bool,
    /// Some `φ ∈ M*` makes `x ↦ m·φ(x)` the identity on `M`.
    pub right_invertible: bool,
    /// Every `b` with `m·b = 0` has `b + 1` a unit in the scalar ring.
    pub ann_shift_units: bool,
    /// Every `g ∈ End(M)` with `g(m) = 0` has `g + 1` bijective.
    pub end_ann_shift_units: bool,
    /// `r(m) = 0`: only the zero scalar annihilates `m`.
    pub ann_zero: bool,
    /// `l(m) = 0`: only the zero endomorphism kills `m`.
    pub end_ann_zero: bool,
    /// Ground truth: no strict mitsch successor.
    pub maximal: bool,
}

impl MaximalityReport {
    /// Any of the six sufficient conditions holds.
    pub fn any_sufficient_condition(&self) -> bool {
        self.left_invertible
            || self.right_invertible
            || self.ann_shift_units
            || self.end_ann_shift_units
            || self.ann_zero
            || self.end_ann_zero
    }
}

pub fn maximality_predicates(
    m: &FiniteModule,
    homs: &HomTable,
    dual: &HomTable,
    mitsch: &PosetMatrix,
    elt: usize,
) -> MaximalityReport {
    let n = m.size();
    let scalars = m.scalars();

    let (left_invertible, right_invertible) = if scalars.is_integers() {
        // A finite abelian group has no nonzero map to the integers, so no φ
        // reaches 1 ∈ Z; "x ↦ m·φ(x) = identity" survives only on the
        // trivial module, where the zero functional works.
        (false, !dual.is_empty() && (0..n).all(|x| m.act(elt, 0) == x && x == 0))
    } else {
        let one = scalars.one();
        let left = (0..dual.len()).any(|phi| dual.apply(phi, elt) == one);
        // x ↦ m·φ(x) is an endomorphism, so it is the identity iff it fixes
        // every module generator.
        let gens = homs.gens();
        let right = (0..dual.len())
            .any(|phi| gens.iter().all(|&g| m.act(elt, dual.apply(phi, g)) == g));
        (left, right)
    };

    let ann = hom::right_annihilator(m, elt);
    let ann_shift_units = if scalars.is_integers() {
        // r(m) contains the additive order of m (and its doubles), which can
        // never all land in {0, −2}, so b+1 cannot always be ±1.
        false
    } else {
        ann.iter_ones().all(|b| scalars.is_unit_scalar(scalars.add(b, scalars.one())))
    };
    let ann_zero = hom::annihilator_is_zero(m, elt);

    let mut end_ann_shift_units = true;
    let mut end_ann_kills_only_zero_map = true;
    let zero_map_hits = |g: usize| homs.apply(g, elt) == m.zero();
    for g in 0..homs.len() {
        if !zero_map_hits(g) {
            continue;
        }
        if homs.map(g).iter().any(|&v| v as usize != m.zero()) {
            end_ann_kills_only_zero_map = false;
        }
        if end_ann_shift_units {
            // g + 1 is a unit of End(M) iff the map x ↦ g(x) + x is bijective.
            let mut hit = vec![false; n];
            let mut bijective = true;
            for x in 0..n {
                let y = m.add(homs.apply(g, x), x);
                if hit[y] {
                    bijective = false;
                    break;
                }
                hit[y] = true;
            }
            if !bijective {
                end_ann_shift_units = false;
            }
        }
    }

    let strict_successor = (0..n)
        .any(|j| j != elt && mitsch.bits.get(elt, j) && !mitsch.bits.get(j, elt));

    MaximalityReport {
        element: elt as u32,
        left_invertible,
        right_invertible,
        ann_shift_units,
        end_ann_shift_units,
        ann_zero,
        end_ann_zero: end_ann_kills_only_zero_map,
        maximal: !strict_successor,
    }
}

// ---------------------------------------------------------------------------
// Order transfer along submodules and quotients
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TransferKind {
    /// `N` a direct summand: pairs related inside `N` stay related in `M`.
    SummandLift,
    /// `N` fully invariant: pairs of `N`-elements related in `M` are related
    /// inside `N`.
    InvariantRestrict,
    /// `N` fully invariant: pairs related in `M` stay related between cosets
    /// in `M/N`.
    QuotientDescend,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransferViolation {
    /// Offending pair as element indices of `M`.
    pub pair: (u32, u32),
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransferReport {
    pub kind: TransferKind,
    pub submodule_size: usize,
    pub related_pairs_checked: usize,
    pub violation: Option<TransferViolation>,
}

fn is_fully_invariant(homs: &HomTable, sub: &SubSet) -> bool {
    (0..homs.len()).all(|f| sub.list.iter().all(|&x| sub.contains(homs.apply(f, x))))
}

/// Check one mitsch-order transfer law for a submodule. The submodule and
/// quotient are rebuilt as standalone modules with their own endomorphism
/// enumerations, so the check exercises the order definitions, not shortcuts.
pub fn order_transfer(
    m: &FiniteModule,
    homs: &HomTable,
    sub: &SubSet,
    kind: TransferKind,
) -> Result<TransferReport> {
    if !m.is_submodule(sub) {
        return Err(Error::NotASubmodule(format!("{}-element subset", sub.len())));
    }
    let mut checked = 0usize;
    let mut violation = None;

    match kind {
        TransferKind::SummandLift => {
            if m.complement_of(sub)?.is_none() {
                return Err(Error::PreconditionUnmet(
                    "submodule is not a direct summand".to_string(),
                ));
            }
            let (n_mod, embed) = m.submodule_as_module(sub)?;
            let n_homs = hom::enumerate_homs(&n_mod, &n_mod)?;
            let n_mat = mitsch_matrix(&n_mod, &n_homs, MitschForm::FixEnd, 1);
            'lift: for x in 0..n_mod.size() {
                for y in 0..n_mod.size() {
                    if !n_mat.get(x, y) {
                        continue;
                    }
                    checked += 1;
                    if mitsch_leq(m, homs, embed[x], embed[y]).is_none() {
                        violation = Some(TransferViolation {
                            pair: (embed[x] as u32, embed[y] as u32),
                            detail: "related in the summand but not in the ambient module"
                                .to_string(),
                        });
                        break 'lift;
                    }
                }
            }
        }
        TransferKind::InvariantRestrict => {
            if !is_fully_invariant(homs, sub) {
                return Err(Error::PreconditionUnmet(
                    "submodule is not fully invariant".to_string(),
                ));
            }
            let (n_mod, embed) = m.submodule_as_module(sub)?;
            let n_homs = hom::enumerate_homs(&n_mod, &n_mod)?;
            let m_mat = mitsch_matrix(m, homs, MitschForm::FixEnd, 1);
            'restrict: for x in 0..n_mod.size() {
                for y in 0..n_mod.size() {
                    if !m_mat.get(embed[x], embed[y]) {
                        continue;
                    }
                    checked += 1;
                    if mitsch_leq(&n_mod, &n_homs, x, y).is_none() {
                        violation = Some(TransferViolation {
                            pair: (embed[x] as u32, embed[y] as u32),
                            detail: "related in the ambient module but not inside the submodule"
                                .to_string(),
                        });
                        break 'restrict;
                    }
                }
            }
        }
        TransferKind::QuotientDescend => {
            if !is_fully_invariant(homs, sub) {
                return Err(Error::PreconditionUnmet(
                    "submodule is not fully invariant".to_string(),
                ));
            }
            let (q_mod, proj) = m.quotient_module(sub)?;
            let q_homs = hom::enumerate_homs(&q_mod, &q_mod)?;
            let m_mat = mitsch_matrix(m, homs, MitschForm::FixEnd, 1);
            let q_mat = mitsch_matrix(&q_mod, &q_homs, MitschForm::FixEnd, 1);
            'descend: for m1 in 0..m.size() {
                for m2 in 0..m.size() {
                    if !m_mat.get(m1, m2) {
                        continue;
                    }
                    checked += 1;
                    if !q_mat.get(proj[m1] as usize, proj[m2] as usize) {
                        violation = Some(TransferViolation {
                            pair: (m1 as u32, m2 as u32),
                            detail: "related in the module but cosets unrelated in the quotient"
                                .to_string(),
                        });
                        break 'descend;
                    }
                }
            }
        }
    }

    Ok(TransferReport {
        kind,
        submodule_size: sub.len(),
        related_pairs_checked: checked,
        violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::enumerate_homs;
    use crate::module::FiniteModule;
    use crate::ring::pattern_matrix_ring;
    use std::sync::Arc;

    struct Setup {
        m: FiniteModule,
        homs: HomTable,
        dual: HomTable,
    }

    fn zmod(n: usize) -> Setup {
        let m = FiniteModule::zmodule(n).unwrap();
        let homs = enumerate_homs(&m, &m).unwrap();
        let dual = hom::zero_dual(&m);
        Setup { m, homs, dual }
    }

    /// For Z_n the endomorphisms are the multiplication maps and the table is
    /// sorted by the image of the generator 1, so map index k = mult-by-k.
    #[test]
    fn zmod12_mitsch_certificate_for_6_below_2() {
        let s = zmod(12);
        let cert = mitsch_leq(&s.m, &s.homs, 6, 2).expect("6 is mitsch-below 2");
        assert_eq!(
            cert,
            OrderCertificate::Mitsch { f: 3, a: 3, form: MitschForm::FixEnd, power: 1 }
        );
        assert!(replay_certificate(&s.m, &s.homs, &s.dual, 6, 2, &cert));
        // Tampered witnesses must fail the replay.
        let bad = OrderCertificate::Mitsch { f: 3, a: 5, form: MitschForm::FixEnd, power: 1 };
        assert!(!replay_certificate(&s.m, &s.homs, &s.dual, 6, 2, &bad));
        let wrong_pair = mitsch_leq(&s.m, &s.homs, 6, 1);
        assert!(wrong_pair.is_none(), "6 is not mitsch-below 1");
    }

    #[test]
    fn zmod12_mitsch_poset_structure() {
        let s = zmod(12);
        let p = relation_matrix(&s.m, &s.homs, &s.dual, Rel::Mitsch).unwrap();
        assert!(p.axioms.is_partial_order());
        let upset = |i: usize| -> Vec<usize> { p.bits.row_iter_ones(i).collect() };
        assert_eq!(upset(6), vec![2, 6, 10]);
        assert_eq!(upset(4), vec![1, 4, 7, 10]);
        assert_eq!(upset(1), vec![1]);
        assert_eq!(upset(5), vec![5]);
        assert_eq!(upset(0).len(), 12);
        assert_eq!(p.maximal.as_deref(), Some(&[1, 2, 5, 7, 10, 11][..]));
        assert_eq!(p.minimal.as_deref(), Some(&[0][..]));
        let hasse = p.hasse.as_ref().unwrap();
        assert!(hasse.contains(&(6, 2)) && hasse.contains(&(6, 10)));
        // 0 < 4 < 1, so (0, 1) is not a cover edge.
        assert!(!hasse.contains(&(0, 1)));
    }

    #[test]
    fn mitsch_forms_and_powers_agree_on_zmod12() {
        let s = zmod(12);
        let base = mitsch_matrix(&s.m, &s.homs, MitschForm::FixEnd, 1);
        for form in [MitschForm::FixScalar, MitschForm::Both] {
            assert_eq!(mitsch_matrix(&s.m, &s.homs, form, 1), base);
        }
        for power in 2..=4 {
            assert_eq!(mitsch_matrix(&s.m, &s.homs, MitschForm::FixEnd, power), base);
        }
    }

    #[test]
    fn zmod12_jones_is_reflexivity_plus_zero() {
        let s = zmod(12);
        let mat = jones_matrix(&s.m, &s.homs);
        // Integer idempotents are 0 and 1 only, so m1 = 0 or m1 = m2.
        assert_eq!(mat.count_ones(), 23);
        assert!(jones_leq(&s.m, &s.homs, 6, 2).is_none());
        let cert = jones_leq(&s.m, &s.homs, 6, 6).expect("jones is reflexive");
        assert_eq!(cert, OrderCertificate::Jones { f: 1, a: 1 });
        assert!(replay_certificate(&s.m, &s.homs, &s.dual, 6, 6, &cert));
        assert!(jones_leq(&s.m, &s.homs, 3, 7).is_none());
        assert!(mitsch_leq(&s.m, &s.homs, 3, 7).is_some());
    }

    #[test]
    fn zmod12_minus_relates_only_zero() {
        let s = zmod(12);
        let mat = minus_matrix(&s.m, &s.dual);
        assert_eq!(mat.count_ones(), 12);
        assert!((0..12).all(|j| mat.get(0, j)));
        assert!(minus_leq(&s.m, &s.dual, 6, 2).is_none());
        let cert = minus_leq(&s.m, &s.dual, 0, 5).unwrap();
        assert_eq!(cert, OrderCertificate::Minus { phi: 0 });
        assert!(replay_certificate(&s.m, &s.homs, &s.dual, 0, 5, &cert));
        let p = poset_from_bits(Rel::Minus, mat);
        assert_eq!(p.axioms.reflexivity_failure, Some(1));
        assert!(p.hasse.is_none() && p.maximal.is_none());
    }

    #[test]
    fn zmod12_dsum_certificates() {
        let s = zmod(12);
        let cert = dsum_leq(&s.m, 6, 2).expect("2Z12 = 6Z12 ⊕ 8Z12");
        assert_eq!(
            cert,
            OrderCertificate::Dsum {
                m1_orbit: vec![0, 6],
                diff_orbit: vec![0, 4, 8],
                intersection: vec![0],
                sum: vec![0, 2, 4, 6, 8, 10],
            }
        );
        assert!(replay_certificate(&s.m, &s.homs, &s.dual, 6, 2, &cert));
        let tampered = OrderCertificate::Dsum {
            m1_orbit: vec![0, 6],
            diff_orbit: vec![0, 4, 8],
            intersection: vec![0],
            sum: vec![0, 2, 4, 6, 8, 11],
        };
        assert!(!replay_certificate(&s.m, &s.homs, &s.dual, 6, 2, &tampered));
        assert!(dsum_leq(&s.m, 3, 1).is_none(), "orbit sizes 4·6 ≠ 12");
        assert!(dsum_leq(&s.m, 9, 1).is_some());
    }

    #[test]
    fn zmod12_space_preorder_and_escapes() {
        let s = zmod(12);
        let cert = space_leq(&s.m, &s.homs, 1, 5).expect("units have equal orbits");
        assert!(replay_certificate(&s.m, &s.homs, &s.dual, 1, 5, &cert));
        assert!(mitsch_leq(&s.m, &s.homs, 1, 5).is_none());
        assert!(space_leq(&s.m, &s.homs, 2, 1).is_some());
        assert!(mitsch_leq(&s.m, &s.homs, 2, 1).is_none());
        assert_eq!(
            space_escape(&s.m, &s.homs, 1, 2),
            Some(SpaceEscape::End { f: 1, value: 1 })
        );
        assert_eq!(space_escape(&s.m, &s.homs, 2, 1), None);

        let p = relation_matrix(&s.m, &s.homs, &s.dual, Rel::Space).unwrap();
        assert!(p.axioms.is_preorder() && !p.axioms.is_partial_order());
        assert_eq!(p.axioms.antisymmetry_failure, Some((1, 5)));
        assert!(p.hasse.is_none());
        assert_eq!(p.maximal.as_deref(), Some(&[1, 5, 7, 11][..]));
    }

    #[test]
    fn zmod12_maximality_flags() {
        let s = zmod(12);
        let p = relation_matrix(&s.m, &s.homs, &s.dual, Rel::Mitsch).unwrap();
        let report = |e: usize| maximality_predicates(&s.m, &s.homs, &s.dual, &p, e);

        let r2 = report(2);
        assert!(
            !r2.left_invertible
                && !r2.right_invertible
                && !r2.ann_shift_units
                && r2.end_ann_shift_units
                && !r2.ann_zero
                && !r2.end_ann_zero
                && r2.maximal
        );
        let r6 = report(6);
        assert!(!r6.any_sufficient_condition() && !r6.maximal);
        let r1 = report(1);
        assert!(r1.end_ann_zero && r1.end_ann_shift_units && r1.maximal);

        // The six flags are each sufficient for maximality.
        for e in 0..12 {
            let r = report(e);
            if r.any_sufficient_condition() {
                assert!(r.maximal, "element {e} has a sufficient flag but is not maximal");
            }
        }
    }

    #[test]
    fn lattice_reports() {
        let s = zmod(12);
        let p = relation_matrix(&s.m, &s.homs, &s.dual, Rel::Mitsch).unwrap();
        let lat = lattice_report(&p).unwrap();
        assert!(!lat.is_lattice);
        let gap = lat.join_gap.unwrap();
        assert_eq!(gap.pair, (1, 2));
        assert!(gap.bounds.is_empty() && gap.extremal_bounds.is_empty());

        let chain = zmod(2);
        let p2 = relation_matrix(&chain.m, &chain.homs, &chain.dual, Rel::Mitsch).unwrap();
        let lat2 = lattice_report(&p2).unwrap();
        assert!(lat2.is_lattice && lat2.join_gap.is_none() && lat2.meet_gap.is_none());

        let sp = relation_matrix(&s.m, &s.homs, &s.dual, Rel::Space).unwrap();
        assert!(matches!(lattice_report(&sp), Err(Error::NotAPartialOrder(_))));
    }

    /// 2×2 matrices over Z_5; the pair (3I, [[-1,2],[2,-1]]) satisfies the
    /// annihilator inclusions but admits no mitsch witness: the right factor
    /// is invertible, forcing a = 3·m2⁻¹, and then m1·a ≠ m1.
    #[test]
    fn full_matrix_ring_pair_without_witness() {
        let all: Vec<Vec<Vec<usize>>> = vec![vec![(0..5).collect(); 2]; 2];
        let r = Arc::new(pattern_matrix_ring(5, 2, &all).unwrap());
        let m = FiniteModule::regular_representation(Arc::clone(&r)).unwrap();
        let homs = enumerate_homs(&m, &m).unwrap();
        let m1 = m.index_of("[[3,0],[0,3]]").unwrap();
        let m2 = m.index_of("[[4,2],[2,4]]").unwrap();
        assert!(mitsch_leq(&m, &homs, m1, m2).is_none());
        // Sanity: the same elements are honestly related to themselves.
        assert!(mitsch_leq(&m, &homs, m1, m1).is_some());
    }

    /// On the regular module of the regular ring M_2(Z_2), minus, mitsch and
    /// dsum coincide as matrices.
    #[test]
    fn regular_module_order_coincidence_m2z2() {
        let all: Vec<Vec<Vec<usize>>> = vec![vec![(0..2).collect(); 2]; 2];
        let r = Arc::new(pattern_matrix_ring(2, 2, &all).unwrap());
        let m = FiniteModule::regular_representation(Arc::clone(&r)).unwrap();
        let homs = enumerate_homs(&m, &m).unwrap();
        let dual = hom::dual_table(&m, &r).unwrap();
        let mitsch = mitsch_matrix(&m, &homs, MitschForm::FixEnd, 1);
        let minus = minus_matrix(&m, &dual);
        let dsum = dsum_matrix(&m);
        assert_eq!(mitsch, minus);
        assert_eq!(mitsch, dsum);
        assert!(poset_from_bits(Rel::Mitsch, mitsch).axioms.is_partial_order());
    }

    #[test]
    fn transfer_laws_on_small_integer_modules() {
        // Z_2 × Z_4: N = 0 × Z_4 is a summand but not fully invariant.
        let z2 = FiniteModule::zmodule(2).unwrap();
        let z4 = FiniteModule::zmodule(4).unwrap();
        let m = FiniteModule::module_product(&z2, &z4).unwrap();
        let homs = enumerate_homs(&m, &m).unwrap();
        let n_sub = SubSet::from_indices(8, 0..4);
        let lift = order_transfer(&m, &homs, &n_sub, TransferKind::SummandLift).unwrap();
        assert!(lift.violation.is_none());
        assert_eq!(lift.related_pairs_checked, 7);
        assert!(matches!(
            order_transfer(&m, &homs, &n_sub, TransferKind::InvariantRestrict),
            Err(Error::PreconditionUnmet(_))
        ));

        // Z_4: N = {0, 2} is fully invariant but not a summand.
        let s = zmod(4);
        let sub = SubSet::from_indices(4, [0, 2]);
        assert!(matches!(
            order_transfer(&s.m, &s.homs, &sub, TransferKind::SummandLift),
            Err(Error::PreconditionUnmet(_))
        ));
        let restrict =
            order_transfer(&s.m, &s.homs, &sub, TransferKind::InvariantRestrict).unwrap();
        assert!(restrict.violation.is_none());
        assert_eq!(restrict.related_pairs_checked, 3);
        let descend =
            order_transfer(&s.m, &s.homs, &sub, TransferKind::QuotientDescend).unwrap();
        assert!(descend.violation.is_none());
        assert_eq!(descend.related_pairs_checked, 7);
    }

    #[test]
    fn rel_parsing() {
        assert_eq!(Rel::parse("dsum").unwrap(), Rel::Dsum);
        assert!(matches!(Rel::parse("bogus"), Err(Error::UnknownRelation(_))));
        assert_eq!(Rel::Mitsch.to_string(), "mitsch");
    }
}
