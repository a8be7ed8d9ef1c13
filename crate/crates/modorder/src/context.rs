//! Instance context: a finite module bundled with lazily built, shared
//! derived data (endomorphism table, dual table, endomorphism ring,
//! relation posets, orbit/annihilator bitsets, ring facts).
//!
//! Every cache is built at most once and handed out as an `Arc`; failures
//! (for example capacity limits) are cached too, so repeated access is cheap
//! and deterministic.

use std::sync::{Arc, OnceLock};

use crate::error::Result;
use crate::hom::{self, HomTable};
use crate::module::FiniteModule;
use crate::order::{self, PosetMatrix, Rel};
use crate::ring::{ring_subsets, FiniteRing, RingFacts};
use crate::table::Bitset;

/// A named instance plus memoized derived structures.
pub struct Ctx {
    name: String,
    note: String,
    module: Arc<FiniteModule>,
    /// The underlying ring when the module is its own right regular
    /// representation (`M = R_R`); `None` for integer-scalar modules.
    base_ring: Option<Arc<FiniteRing>>,
    homs: OnceLock<Result<Arc<HomTable>>>,
    dual: OnceLock<Result<Arc<HomTable>>>,
    end: OnceLock<Result<Arc<FiniteRing>>>,
    posets: [OnceLock<Result<Arc<PosetMatrix>>>; Rel::ALL.len()],
    r_orbits: OnceLock<Arc<Vec<Bitset>>>,
    s_orbits: OnceLock<Result<Arc<Vec<Bitset>>>>,
    anns: OnceLock<Arc<Vec<Bitset>>>,
    end_anns: OnceLock<Result<Arc<Vec<Bitset>>>>,
    scalar_facts: OnceLock<Option<Arc<RingFacts>>>,
    end_facts: OnceLock<Result<Arc<RingFacts>>>,
    regular: OnceLock<Result<Arc<Bitset>>>,
}

impl Ctx {
    /// Wrap a module under the given display name and description.
    pub fn new(
        name: impl Into<String>,
        note: impl Into<String>,
        module: FiniteModule,
        base_ring: Option<Arc<FiniteRing>>,
    ) -> Ctx {
        Ctx {
            name: name.into(),
            note: note.into(),
            module: Arc::new(module),
            base_ring,
            homs: OnceLock::new(),
            dual: OnceLock::new(),
            end: OnceLock::new(),
            posets: std::array::from_fn(|_| OnceLock::new()),
            r_orbits: OnceLock::new(),
            s_orbits: OnceLock::new(),
            anns: OnceLock::new(),
            end_anns: OnceLock::new(),
            scalar_facts: OnceLock::new(),
            end_facts: OnceLock::new(),
            regular: OnceLock::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn note(&self) -> &str {
        &self.note
    }

    pub fn module(&self) -> &Arc<FiniteModule> {
        &self.module
    }

    /// Underlying ring for regular representations, if any.
    pub fn base_ring(&self) -> Option<&Arc<FiniteRing>> {
        self.base_ring.as_ref()
    }

    /// Whether this instance is the right regular representation of a ring.
    pub fn is_regular_rep(&self) -> bool {
        self.base_ring.is_some()
    }

    /// All endomorphisms of the module.
    pub fn homs(&self) -> Result<Arc<HomTable>> {
        self.homs
            .get_or_init(|| hom::enumerate_homs(&self.module, &self.module).map(Arc::new))
            .clone()
    }

    /// All dual maps `M → R` (the zero map alone for integer scalars).
    pub fn dual(&self) -> Result<Arc<HomTable>> {
        self.dual
            .get_or_init(|| match self.module.scalars().as_table() {
                Some(ring) => hom::dual_table(&self.module, ring).map(Arc::new),
                None => Ok(Arc::new(hom::zero_dual(&self.module))),
            })
            .clone()
    }

    /// The endomorphism ring as an explicit table ring.
    pub fn end_ring(&self) -> Result<Arc<FiniteRing>> {
        self.end
            .get_or_init(|| {
                let homs = self.homs()?;
                hom::end_ring(&self.module, &homs).map(Arc::new)
            })
            .clone()
    }

    /// Relation matrix plus poset analytics for one of the five orders.
    pub fn poset(&self, rel: Rel) -> Result<Arc<PosetMatrix>> {
        let slot = Rel::ALL.iter().position(|&r| r == rel).expect("relation is catalogued");
        self.posets[slot]
            .get_or_init(|| {
                let homs = self.homs()?;
                let dual = self.dual()?;
                order::relation_matrix(&self.module, &homs, &dual, rel).map(Arc::new)
            })
            .clone()
    }

    /// Cyclic orbit `mR` of every element, as bitsets.
    pub fn r_orbit_bits(&self) -> Arc<Vec<Bitset>> {
        self.r_orbits.get_or_init(|| Arc::new(order::r_orbit_bitsets(&self.module))).clone()
    }

    /// Endomorphism orbit `Sm` of every element, as bitsets.
    pub fn s_orbit_bits(&self) -> Result<Arc<Vec<Bitset>>> {
        self.s_orbits
            .get_or_init(|| {
                let homs = self.homs()?;
                Ok(Arc::new(order::s_orbit_bitsets(&self.module, &homs)))
            })
            .clone()
    }

    /// Right annihilator `r_R(m)` of every element, over scalar representatives.
    pub fn ann_bits(&self) -> Arc<Vec<Bitset>> {
        self.anns.get_or_init(|| Arc::new(order::annihilator_bitsets(&self.module))).clone()
    }

    /// Left annihilator `l_S(m)` of every element, over endomorphism indices.
    pub fn end_ann_bits(&self) -> Result<Arc<Vec<Bitset>>> {
        self.end_anns
            .get_or_init(|| {
                let homs = self.homs()?;
                let n = self.module.size();
                let zero = self.module.zero();
                let mut out = Vec::with_capacity(n);
                for x in 0..n {
                    let mut bits = Bitset::new(homs.len());
                    for f in 0..homs.len() {
                        if homs.apply(f, x) == zero {
                            bits.set(f);
                        }
                    }
                    out.push(bits);
                }
                Ok(Arc::new(out))
            })
            .clone()
    }

    /// Unit/idempotent/center/duo facts of the scalar ring (table kind only).
    pub fn scalar_facts(&self) -> Option<Arc<RingFacts>> {
        self.scalar_facts
            .get_or_init(|| {
                self.module.scalars().as_table().map(|ring| Arc::new(ring_subsets(ring)))
            })
            .clone()
    }

    /// Ring facts of the endomorphism ring; element indices coincide with
    /// endomorphism indices in `homs()`.
    pub fn end_facts(&self) -> Result<Arc<RingFacts>> {
        self.end_facts
            .get_or_init(|| {
                let end = self.end_ring()?;
                Ok(Arc::new(ring_subsets(&end)))
            })
            .clone()
    }

    /// Elements `m` with `m = m·φ(m)` for some dual map, as a bitset.
    pub fn regular_bits(&self) -> Result<Arc<Bitset>> {
        self.regular
            .get_or_init(|| {
                let dual = self.dual()?;
                let mut bits = Bitset::new(self.module.size());
                for x in hom::regular_elements(&self.module, &dual) {
                    bits.set(x);
                }
                Ok(Arc::new(bits))
            })
            .clone()
    }

    /// Whether every element is regular.
    pub fn is_regular_module(&self) -> Result<bool> {
        Ok(self.regular_bits()?.count_ones() == self.module.size())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ring_zn;

    #[test]
    fn caches_are_shared_and_stable() {
        let ctx = Ctx::new(
            "z4",
            "integers acting on Z_4",
            FiniteModule::zmodule(4).unwrap(),
            None,
        );
        let h1 = ctx.homs().unwrap();
        let h2 = ctx.homs().unwrap();
        assert!(Arc::ptr_eq(&h1, &h2));
        assert_eq!(h1.len(), 4);
        let p = ctx.poset(Rel::Mitsch).unwrap();
        assert!(p.axioms.is_partial_order());
        assert!(!ctx.is_regular_rep());
        assert!(ctx.scalar_facts().is_none());
        // Z_4 over the integers is not regular: the dual is zero.
        assert!(!ctx.is_regular_module().unwrap());
        assert_eq!(ctx.regular_bits().unwrap().count_ones(), 1);
    }

    #[test]
    fn regular_rep_reuses_base_ring_facts() {
        let ring = Arc::new(ring_zn(6).unwrap());
        let module = FiniteModule::regular_representation(ring.clone()).unwrap();
        let ctx = Ctx::new("z6", "Z_6 acting on itself", module, Some(ring));
        assert!(ctx.is_regular_rep());
        // End(R_R) ≅ R, so the fact sets agree element-for-element under
        // the identification f_i ↔ i produced by the hom enumeration.
        let facts = ctx.end_facts().unwrap();
        let direct = ctx.scalar_facts().unwrap();
        assert_eq!(facts.units, direct.units);
        assert_eq!(facts.idempotents, direct.idempotents);
        assert_eq!(facts.central, direct.central);
        // Z_6 is a regular ring (squarefree modulus), so the module is regular.
        assert!(ctx.is_regular_module().unwrap());
    }
}
