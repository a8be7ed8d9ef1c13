//! Finite right modules over a scalar ring, as dense tables.
//!
//! The element set is indexed `0..n`; `add` is an `n x n` table and `action`
//! an `n x reps` table, where `reps` is the number of representative scalars
//! (all of them for a table ring, `0..exponent` for the integers kind).
//!
//! Validation uses the same complete generator-based procedure as the ring
//! checker: the additive group is verified exhaustively (with Light's test
//! for associativity), and each mixed law is additive in one argument once
//! the previously checked laws hold, so it reduces to a scan with that
//! argument restricted to an additive generating set. For the integers kind
//! the action table must literally be repeated addition, truncated at an
//! exponent that annihilates the module; all compatibility laws follow.

use crate::error::{Error, Law, Result, SIZE_CAP, SUBMODULE_ANALYSIS_CAP};
use crate::ring::{check_abelian_group, check_distinct_names, additive_generators, FiniteRing};
use crate::scalar::ScalarRing;
use crate::table::{lcm, Bitset, OpTable};
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteModule {
    scalars: ScalarRing,
    elements: Vec<String>,
    add: OpTable,
    action: OpTable,
    zero: usize,
    neg: Vec<u32>,
    add_gens: Vec<usize>,
}

impl FiniteModule {
    pub fn new(
        scalars: ScalarRing,
        elements: Vec<String>,
        add: OpTable,
        action: OpTable,
        zero: usize,
    ) -> Result<FiniteModule> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::Shape("module must have at least one element".into()));
        }
        if n > SIZE_CAP {
            return Err(Error::CapacityExceeded { what: "module carrier", size: n, cap: SIZE_CAP });
        }
        check_distinct_names(&elements)?;
        if add.rows() != n || add.cols() != n {
            return Err(Error::Shape(format!(
                "module add table is {}x{}, expected {n}x{n}",
                add.rows(),
                add.cols()
            )));
        }
        let reps = scalars.reps();
        if reps == 0 {
            return Err(Error::Shape("scalar ring must have at least one representative".into()));
        }
        if action.rows() != n || action.cols() != reps {
            return Err(Error::Shape(format!(
                "action table is {}x{}, expected {n}x{reps}",
                action.rows(),
                action.cols()
            )));
        }
        if zero >= n {
            return Err(Error::Shape(format!("zero index {zero} out of range {n}")));
        }
        if let Some(m) = add.max_entry() {
            if m as usize >= n {
                return Err(Error::Shape(format!("add table entry {m} out of range {n}")));
            }
        }
        if let Some(m) = action.max_entry() {
            if m as usize >= n {
                return Err(Error::Shape(format!("action table entry {m} out of range {n}")));
            }
        }

        let neg = check_abelian_group(&add, zero)?;
        let add_gens = additive_generators(&add, zero);

        match &scalars {
            ScalarRing::Integers { exponent } => {
                // The action must be repeated addition, and the exponent must
                // annihilate the module so that actions factor through it.
                for m in 0..n {
                    let mut acc = zero;
                    for k in 0..*exponent {
                        if action.get(m, k) != acc {
                            return Err(Error::AxiomViolation {
                                law: Law::ActionRepeatedAddition,
                                witness: vec![m, k],
                            });
                        }
                        acc = add.get(acc, m);
                    }
                    if acc != zero {
                        return Err(Error::AxiomViolation {
                            law: Law::ActionExponentAnnihilates,
                            witness: vec![m],
                        });
                    }
                }
            }
            ScalarRing::Table(ring) => {
                let one = ring.one();
                let rzero = ring.zero();
                for m in 0..n {
                    if action.get(m, one) != m {
                        return Err(Error::AxiomViolation {
                            law: Law::ActionIdentity,
                            witness: vec![m],
                        });
                    }
                    if action.get(m, rzero) != zero {
                        return Err(Error::AxiomViolation {
                            law: Law::ActionZero,
                            witness: vec![m],
                        });
                    }
                }
                let ring_gens = additive_generators(ring.add_table(), rzero);
                let mod_gens = &add_gens;
                // m·(x+g) = m·x + m·g for ring generators g: each row map of
                // the action is additive over the scalars.
                for m in 0..n {
                    for x in 0..reps {
                        for &g in &ring_gens {
                            let lhs = action.get(m, ring.add(x, g));
                            let rhs = add.get(action.get(m, x), action.get(m, g));
                            if lhs != rhs {
                                return Err(Error::AxiomViolation {
                                    law: Law::ActionScalarAdd,
                                    witness: vec![m, x, g],
                                });
                            }
                        }
                    }
                }
                // (x+g)·a = x·a + g·a for module generators g.
                for a in 0..reps {
                    for x in 0..n {
                        for &g in mod_gens {
                            let lhs = action.get(add.get(x, g), a);
                            let rhs = add.get(action.get(x, a), action.get(g, a));
                            if lhs != rhs {
                                return Err(Error::AxiomViolation {
                                    law: Law::ActionElementAdd,
                                    witness: vec![x, g, a],
                                });
                            }
                        }
                    }
                }
                // g·(ab) = (g·a)·b; additive in the module argument, so module
                // generators suffice.
                for &g in mod_gens {
                    for a in 0..reps {
                        for b in 0..reps {
                            let lhs = action.get(g, ring.mul(a, b));
                            let rhs = action.get(action.get(g, a), b);
                            if lhs != rhs {
                                return Err(Error::AxiomViolation {
                                    law: Law::ActionScalarMul,
                                    witness: vec![g, a, b],
                                });
                            }
                        }
                    }
                }
            }
        }

        Ok(FiniteModule { scalars, elements, add, action, zero, neg, add_gens })
    }

    /// The abelian group Z_n as a module over the integers.
    pub fn zmodule(n: usize) -> Result<FiniteModule> {
        if n == 0 {
            return Err(Error::Shape("zmodule requires n >= 1".into()));
        }
        if n > SIZE_CAP {
            return Err(Error::CapacityExceeded { what: "module carrier", size: n, cap: SIZE_CAP });
        }
        let elements: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let add = OpTable::from_fn(n, n, |i, j| ((i + j) % n) as u32);
        let action = OpTable::from_fn(n, n, |m, k| ((m * k) % n) as u32);
        FiniteModule::new(ScalarRing::Integers { exponent: n }, elements, add, action, 0)
    }

    /// A ring as a right module over itself.
    pub fn regular_representation(ring: Arc<FiniteRing>) -> Result<FiniteModule> {
        let elements = ring.element_names().to_vec();
        let add = ring.add_table().clone();
        let action = ring.mul_table().clone();
        let zero = ring.zero();
        FiniteModule::new(ScalarRing::Table(ring), elements, add, action, zero)
    }

    /// Direct product of two modules over the same scalar ring. For the
    /// integers kind the factors may carry different exponents; the product
    /// uses their least common multiple, which annihilates both.
    pub fn module_product(a: &FiniteModule, b: &FiniteModule) -> Result<FiniteModule> {
        let scalars = match (&a.scalars, &b.scalars) {
            (ScalarRing::Table(r1), ScalarRing::Table(r2)) => {
                if r1 != r2 {
                    return Err(Error::ScalarMismatch);
                }
                ScalarRing::Table(Arc::clone(r1))
            }
            (ScalarRing::Integers { exponent: e1 }, ScalarRing::Integers { exponent: e2 }) => {
                ScalarRing::Integers { exponent: lcm(*e1, *e2) }
            }
            _ => return Err(Error::ScalarMismatch),
        };
        let (na, nb) = (a.size(), b.size());
        let n = na.checked_mul(nb).filter(|&v| v <= SIZE_CAP).ok_or(
            Error::CapacityExceeded { what: "module carrier", size: na.saturating_mul(nb), cap: SIZE_CAP },
        )?;
        let mut elements = Vec::with_capacity(n);
        for i in 0..na {
            for j in 0..nb {
                elements.push(format!("({},{})", a.name(i), b.name(j)));
            }
        }
        let add = OpTable::from_fn(n, n, |x, y| {
            let (xi, xj) = (x / nb, x % nb);
            let (yi, yj) = (y / nb, y % nb);
            (a.add(xi, yi) * nb + b.add(xj, yj)) as u32
        });
        let reps = scalars.reps();
        let action = match &scalars {
            ScalarRing::Table(_) => OpTable::from_fn(n, reps, |x, r| {
                let (xi, xj) = (x / nb, x % nb);
                (a.act(xi, r) * nb + b.act(xj, r)) as u32
            }),
            ScalarRing::Integers { .. } => OpTable::from_fn(n, reps, |x, k| {
                let (xi, xj) = (x / nb, x % nb);
                (a.act(xi, k % a.scalars.reps()) * nb + b.act(xj, k % b.scalars.reps())) as u32
            }),
        };
        let zero = a.zero * nb + b.zero;
        FiniteModule::new(scalars, elements, add, action, zero)
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn scalars(&self) -> &ScalarRing {
        &self.scalars
    }

    #[inline(always)]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add.get(a, b)
    }

    /// Right action m·a for a representative scalar a.
    #[inline(always)]
    pub fn act(&self, m: usize, a: usize) -> usize {
        self.action.get(m, a)
    }

    #[inline(always)]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn name(&self, a: usize) -> &str {
        &self.elements[a]
    }

    pub fn element_names(&self) -> &[String] {
        &self.elements
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    pub fn add_table(&self) -> &OpTable {
        &self.add
    }

    pub fn action_table(&self) -> &OpTable {
        &self.action
    }

    /// Greedy additive generating set, fixed at construction. Checking a law
    /// of the form `f(x+g) = f(x)+f(g)` on these generators proves it for
    /// all sums by induction over generator words.
    pub fn additive_gens(&self) -> &[usize] {
        &self.add_gens
    }

    /// Additive order of an element.
    pub fn element_order(&self, m: usize) -> usize {
        let mut acc = m;
        let mut k = 1;
        while acc != self.zero {
            acc = self.add(acc, m);
            k += 1;
        }
        k
    }

    /// Least N with N·m = 0 for every m.
    pub fn additive_exponent(&self) -> usize {
        (0..self.size()).fold(1, |e, m| lcm(e, self.element_order(m)))
    }

    /// The cyclic submodule mR (equals the action orbit, since the orbit is
    /// already closed under addition: m·a + m·b = m·(a+b)).
    pub fn cyclic_submodule(&self, m: usize) -> SubSet {
        let mut bits = Bitset::new(self.size());
        for a in 0..self.scalars.reps() {
            bits.set(self.act(m, a));
        }
        SubSet::from_bits(bits)
    }

    /// Smallest submodule containing the seeds: worklist closure under
    /// addition and the action.
    pub fn submodule_generated(&self, seeds: &[usize]) -> SubSet {
        let n = self.size();
        let mut bits = Bitset::new(n);
        let mut list = vec![self.zero];
        bits.set(self.zero);
        let mut work: Vec<usize> = Vec::new();
        for &s in seeds {
            if !bits.get(s) {
                bits.set(s);
                list.push(s);
                work.push(s);
            }
        }
        while let Some(x) = work.pop() {
            for a in 0..self.scalars.reps() {
                let y = self.act(x, a);
                if !bits.get(y) {
                    bits.set(y);
                    list.push(y);
                    work.push(y);
                }
            }
            let snapshot = list.len();
            for idx in 0..snapshot {
                let y = self.add(x, list[idx]);
                if !bits.get(y) {
                    bits.set(y);
                    list.push(y);
                    work.push(y);
                }
            }
        }
        SubSet::from_bits(bits)
    }

    /// Re-verifies that a set is a submodule.
    pub fn is_submodule(&self, s: &SubSet) -> bool {
        if s.bits.len() != self.size() || !s.contains(self.zero) {
            return false;
        }
        for &x in &s.list {
            for &y in &s.list {
                if !s.contains(self.add(x, y)) {
                    return false;
                }
            }
            for a in 0..self.scalars.reps() {
                if !s.contains(self.act(x, a)) {
                    return false;
                }
            }
        }
        true
    }

    /// All submodules, sorted by (size, lexicographic element list). Bounded
    /// by the submodule-analysis cap.
    pub fn all_submodules(&self) -> Result<Vec<SubSet>> {
        let n = self.size();
        if n > SUBMODULE_ANALYSIS_CAP {
            return Err(Error::CapacityExceeded {
                what: "submodule enumeration",
                size: n,
                cap: SUBMODULE_ANALYSIS_CAP,
            });
        }
        use std::collections::HashSet;
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut subs: Vec<SubSet> = Vec::new();
        let mut work: Vec<SubSet> = Vec::new();
        // Seed with every cyclic submodule (including the trivial one).
        for m in 0..n {
            let s = self.cyclic_submodule(m);
            if seen.insert(s.list.clone()) {
                subs.push(s.clone());
                work.push(s);
            }
        }
        // Close under pairwise join: every submodule is a join of cyclics.
        while let Some(s) = work.pop() {
            let current: Vec<SubSet> = subs.clone();
            for t in &current {
                let mut seeds = s.list.clone();
                seeds.extend_from_slice(&t.list);
                let joined = self.submodule_generated(&seeds);
                if seen.insert(joined.list.clone()) {
                    subs.push(joined.clone());
                    work.push(joined);
                }
            }
        }
        subs.sort_by(|a, b| (a.len(), &a.list).cmp(&(b.len(), &b.list)));
        Ok(subs)
    }

    /// Quotient module M/N with the canonical projection (element index ->
    /// quotient index). Coset representatives are the least member indices.
    pub fn quotient_module(&self, sub: &SubSet) -> Result<(FiniteModule, Vec<u32>)> {
        if !self.is_submodule(sub) {
            return Err(Error::NotASubmodule("quotient base is not a submodule".into()));
        }
        let n = self.size();
        let mut coset_of = vec![u32::MAX; n];
        let mut reps: Vec<usize> = Vec::new();
        for x in 0..n {
            if coset_of[x] == u32::MAX {
                let id = reps.len() as u32;
                for &s in &sub.list {
                    coset_of[self.add(x, s)] = id;
                }
                reps.push(x);
            }
        }
        let q = reps.len();
        let elements: Vec<String> =
            reps.iter().map(|&r| format!("[{}]", self.name(r))).collect();
        let add = OpTable::from_fn(q, q, |i, j| coset_of[self.add(reps[i], reps[j])]);
        let nreps = self.scalars.reps();
        let action = OpTable::from_fn(q, nreps, |i, a| coset_of[self.act(reps[i], a)]);
        let zero = coset_of[self.zero] as usize;
        let qm = FiniteModule::new(self.scalars.clone(), elements, add, action, zero)?;
        Ok((qm, coset_of))
    }

    /// First submodule T (in canonical order) with S ∩ T = 0 and S + T = M,
    /// or None when no direct complement exists.
    pub fn complement_of(&self, sub: &SubSet) -> Result<Option<SubSet>> {
        if !self.is_submodule(sub) {
            return Err(Error::NotASubmodule("complement base is not a submodule".into()));
        }
        let n = self.size();
        for t in self.all_submodules()? {
            if sub.len() * t.len() == n && sub.bits.intersection_count(&t.bits) == 1 {
                return Ok(Some(t));
            }
        }
        Ok(None)
    }

    /// Presents a submodule as a standalone module; returns it together with
    /// the list mapping each new index to its parent element index.
    pub fn submodule_as_module(&self, sub: &SubSet) -> Result<(FiniteModule, Vec<usize>)> {
        if !self.is_submodule(sub) {
            return Err(Error::NotASubmodule("not a submodule of this module".into()));
        }
        let mut rank = vec![u32::MAX; self.size()];
        for (i, &x) in sub.list.iter().enumerate() {
            rank[x] = i as u32;
        }
        let k = sub.len();
        let elements: Vec<String> = sub.list.iter().map(|&x| self.name(x).to_string()).collect();
        let add = OpTable::from_fn(k, k, |i, j| rank[self.add(sub.list[i], sub.list[j])]);
        let reps = self.scalars.reps();
        let action = OpTable::from_fn(k, reps, |i, a| rank[self.act(sub.list[i], a)]);
        let zero = rank[self.zero] as usize;
        let m = FiniteModule::new(self.scalars.clone(), elements, add, action, zero)?;
        Ok((m, sub.list.clone()))
    }
}

/// A subset of module elements carried both as a sorted index list and a
/// bitset, used for submodules and orbit sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubSet {
    pub list: Vec<usize>,
    pub bits: Bitset,
}

impl SubSet {
    pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = usize>) -> SubSet {
        let mut bits = Bitset::new(universe);
        for i in indices {
            bits.set(i);
        }
        SubSet::from_bits(bits)
    }

    pub fn from_bits(bits: Bitset) -> SubSet {
        let list = bits.to_vec();
        SubSet { list, bits }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits.get(i)
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ring_zn;

    #[test]
    fn zmodule_validates_and_orders() {
        let m = FiniteModule::zmodule(12).unwrap();
        assert_eq!(m.size(), 12);
        assert_eq!(m.element_order(6), 2);
        assert_eq!(m.element_order(1), 12);
        assert_eq!(m.additive_exponent(), 12);
        assert_eq!(m.cyclic_submodule(6).list, vec![0, 6]);
        assert_eq!(m.cyclic_submodule(4).list, vec![0, 4, 8]);
    }

    #[test]
    fn regular_representation_of_z4() {
        let r = Arc::new(ring_zn(4).unwrap());
        let m = FiniteModule::regular_representation(r).unwrap();
        assert_eq!(m.size(), 4);
        assert!(m.scalars().as_table().is_some());
        assert_eq!(m.act(3, 3), 1);
    }

    #[test]
    fn product_unifies_integer_exponents() {
        let a = FiniteModule::zmodule(2).unwrap();
        let b = FiniteModule::zmodule(4).unwrap();
        let p = FiniteModule::module_product(&a, &b).unwrap();
        assert_eq!(p.size(), 8);
        assert_eq!(p.scalars().reps(), 4); // lcm(2, 4)
        assert_eq!(p.additive_exponent(), 4);
        let x = p.index_of("(1,1)").unwrap();
        assert_eq!(p.act(x, 3), p.index_of("(1,3)").unwrap());
    }

    #[test]
    fn product_rejects_mismatched_table_scalars() {
        let a = FiniteModule::regular_representation(Arc::new(ring_zn(2).unwrap())).unwrap();
        let b = FiniteModule::regular_representation(Arc::new(ring_zn(3).unwrap())).unwrap();
        assert!(matches!(FiniteModule::module_product(&a, &b), Err(Error::ScalarMismatch)));
    }

    #[test]
    fn quotient_z4_by_two_torsion() {
        let m = FiniteModule::zmodule(4).unwrap();
        let sub = m.cyclic_submodule(2);
        assert_eq!(sub.list, vec![0, 2]);
        let (q, proj) = m.quotient_module(&sub).unwrap();
        assert_eq!(q.size(), 2);
        assert_eq!(proj[0], proj[2]);
        assert_eq!(proj[1], proj[3]);
        assert_ne!(proj[0], proj[1]);
        assert_eq!(q.additive_exponent(), 2);
    }

    #[test]
    fn complements() {
        // 2Z_4 has no direct complement inside Z_4.
        let z4 = FiniteModule::zmodule(4).unwrap();
        assert_eq!(z4.complement_of(&z4.cyclic_submodule(2)).unwrap(), None);
        // Z_2 x 0 inside Z_2 x Z_4 is complemented by 0 x Z_4.
        let p = FiniteModule::module_product(
            &FiniteModule::zmodule(2).unwrap(),
            &FiniteModule::zmodule(4).unwrap(),
        )
        .unwrap();
        let s = p.cyclic_submodule(p.index_of("(1,0)").unwrap());
        let t = p.complement_of(&s).unwrap().unwrap();
        let expect: Vec<usize> =
            ["(0,0)", "(0,1)", "(0,2)", "(0,3)"].iter().map(|n| p.index_of(n).unwrap()).collect();
        let mut expect_sorted = expect.clone();
        expect_sorted.sort_unstable();
        assert_eq!(t.list, expect_sorted);
    }

    #[test]
    fn all_submodules_of_small_modules() {
        let z4 = FiniteModule::zmodule(4).unwrap();
        let subs = z4.all_submodules().unwrap();
        assert_eq!(subs.len(), 3);
        assert_eq!(subs[0].list, vec![0]);
        assert_eq!(subs[2].len(), 4);
        // Z_2 x Z_4 has 8 subgroups, all of them submodules over the integers.
        let p = FiniteModule::module_product(
            &FiniteModule::zmodule(2).unwrap(),
            &FiniteModule::zmodule(4).unwrap(),
        )
        .unwrap();
        assert_eq!(p.all_submodules().unwrap().len(), 8);
    }

    #[test]
    fn corrupting_action_cell_is_detected() {
        let clean = FiniteModule::zmodule(6).unwrap();
        for i in 0..6 {
            for k in 0..6 {
                for v in 0..6 {
                    if clean.action_table().get(i, k) == v {
                        continue;
                    }
                    let mut action = clean.action_table().clone();
                    action.set(i, k, v as u32);
                    assert!(FiniteModule::new(
                        clean.scalars().clone(),
                        clean.element_names().to_vec(),
                        clean.add_table().clone(),
                        action,
                        0,
                    )
                    .is_err());
                }
            }
        }
    }

    #[test]
    fn submodule_as_module_roundtrip() {
        let z12 = FiniteModule::zmodule(12).unwrap();
        let sub = z12.cyclic_submodule(4); // {0, 4, 8}
        let (m, back) = z12.submodule_as_module(&sub).unwrap();
        assert_eq!(m.size(), 3);
        assert_eq!(back, vec![0, 4, 8]);
        assert_eq!(m.name(1), "4");
        // 4 + 8 = 0 inside the submodule.
        assert_eq!(m.add(1, 2), 0);
    }

    #[test]
    fn non_submodule_rejected() {
        let z4 = FiniteModule::zmodule(4).unwrap();
        let bad = SubSet::from_indices(4, [0, 1]);
        assert!(z4.quotient_module(&bad).is_err());
        assert!(!z4.is_submodule(&bad));
    }
}
