//! Enumeration of module homomorphisms, the endomorphism ring, and dual maps.
//!
//! Maps are enumerated by depth-first search over images of a small module
//! generating set (picked greedily by largest cyclic orbit, lowest index on
//! ties). Each partial assignment is propagated through the span
//! `S' = S + gR`, rejecting scalar conflicts immediately; every completed map
//! is then re-verified by a complete additivity + linearity check that does
//! not trust the search tree — a map is emitted only if the checks prove it
//! is a homomorphism on all inputs. Maps come out sorted lexicographically by
//! their generator-image tuples, so the zero map is first whenever the zero
//! element has index 0 in the target.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result, HOM_COUNT_CAP, ORACLE_SOURCE_CAP, SIZE_CAP};
use crate::module::FiniteModule;
use crate::ring::FiniteRing;
use crate::scalar::ScalarRing;
use crate::table::{Bitset, OpTable};

/// Enumerated homomorphisms from a source module to a target module over the
/// same scalars. `maps[i][x]` is the image (a target element index) of source
/// element `x` under the i-th map.
#[derive(Debug, Clone)]
pub struct HomTable {
    maps: Vec<Vec<u32>>,
    gens: Vec<usize>,
    index_by_gen_images: HashMap<Vec<u32>, u32>,
}

impl HomTable {
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn map(&self, i: usize) -> &[u32] {
        &self.maps[i]
    }

    #[inline(always)]
    pub fn apply(&self, i: usize, x: usize) -> usize {
        self.maps[i][x] as usize
    }

    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    pub fn find_by_gen_images(&self, images: &[u32]) -> Option<usize> {
        self.index_by_gen_images.get(images).map(|&i| i as usize)
    }

    /// Index of the map with the given full image array, if enumerated.
    pub fn find_by_map(&self, full: &[u32]) -> Option<usize> {
        let key: Vec<u32> = self.gens.iter().map(|&g| full[g]).collect();
        let i = self.find_by_gen_images(&key)?;
        (self.maps[i] == full).then_some(i)
    }

    /// Whether map i is idempotent under composition: f(f(x)) = f(x) for all x.
    pub fn is_idempotent(&self, i: usize) -> bool {
        let m = &self.maps[i];
        m.iter().all(|&y| m[y as usize] == y)
    }

    /// Index of the identity map, if the source and target coincide.
    pub fn identity_index(&self) -> Option<usize> {
        let key: Vec<u32> = self.gens.iter().map(|&g| g as u32).collect();
        let i = self.find_by_gen_images(&key)?;
        let ok = self.maps[i].iter().enumerate().all(|(x, &y)| y as usize == x);
        ok.then_some(i)
    }

    /// Index of the all-zero map into the given target zero.
    pub fn zero_index(&self, dst_zero: usize) -> Option<usize> {
        let key: Vec<u32> = self.gens.iter().map(|_| dst_zero as u32).collect();
        let i = self.find_by_gen_images(&key)?;
        let ok = self.maps[i].iter().all(|&y| y as usize == dst_zero);
        ok.then_some(i)
    }
}

/// Greedy module generating set: repeatedly adjoin the element with the
/// largest cyclic orbit (lowest index on ties) among those outside the span,
/// where adjoining g extends the span S to S + gR.
pub fn module_generators(m: &FiniteModule) -> Vec<usize> {
    let n = m.size();
    let reps = m.scalars().reps();
    let mut orbit_size = vec![0usize; n];
    let mut seen = Bitset::new(n);
    for (x, size) in orbit_size.iter_mut().enumerate() {
        let mut cnt = 0;
        for a in 0..reps {
            let y = m.act(x, a);
            if !seen.get(y) {
                seen.set(y);
                cnt += 1;
            }
        }
        *size = cnt;
        for a in 0..reps {
            seen.clear(m.act(x, a));
        }
    }
    let mut span = Bitset::new(n);
    span.set(m.zero());
    let mut span_list = vec![m.zero()];
    let mut gens = Vec::new();
    while span_list.len() < n {
        let mut best: Option<(usize, usize)> = None;
        for (x, &sz) in orbit_size.iter().enumerate() {
            if !span.get(x) {
                let better = match best {
                    None => true,
                    Some((best_sz, _)) => sz > best_sz,
                };
                if better {
                    best = Some((sz, x));
                }
            }
        }
        let g = best.expect("span incomplete implies candidate exists").1;
        gens.push(g);
        // span := span + gR
        let orbit: Vec<usize> = {
            let mut o = Bitset::new(n);
            for a in 0..reps {
                o.set(m.act(g, a));
            }
            o.to_vec()
        };
        let old_list = std::mem::take(&mut span_list);
        let mut new_span = Bitset::new(n);
        for &s in &old_list {
            for &t in &orbit {
                let x = m.add(s, t);
                if !new_span.get(x) {
                    new_span.set(x);
                    span_list.push(x);
                }
            }
        }
        span_list.sort_unstable();
        span = new_span;
    }
    gens
}

/// Index arithmetic helper: target-side action that reduces integer scalars
/// through the target's exponent when the kinds differ in representative count.
#[inline(always)]
fn act_in(dst: &FiniteModule, dst_reps: usize, x: usize, a: usize) -> usize {
    dst.act(x, if a < dst_reps { a } else { a % dst_reps })
}

fn check_scalar_compat(src: &FiniteModule, dst: &FiniteModule) -> Result<()> {
    match (src.scalars(), dst.scalars()) {
        (ScalarRing::Table(r1), ScalarRing::Table(r2)) => {
            if r1 == r2 {
                Ok(())
            } else {
                Err(Error::ScalarMismatch)
            }
        }
        (ScalarRing::Integers { .. }, ScalarRing::Integers { .. }) => Ok(()),
        _ => Err(Error::ScalarMismatch),
    }
}

/// Complete homomorphism verification: proves additivity and linearity on
/// all inputs using additive generators, plus a literal exhaustive scan on
/// small modules.
pub fn verify_hom(src: &FiniteModule, dst: &FiniteModule, map: &[u32]) -> bool {
    let n = src.size();
    if map.len() != n {
        return false;
    }
    let f = |x: usize| map[x] as usize;
    let add_gens = src.additive_gens();
    // f(x+g) = f(x) + f(g) for all x and additive generators g proves
    // additivity everywhere (induction over generator words).
    for x in 0..n {
        for &g in add_gens {
            if f(src.add(x, g)) != dst.add(f(x), f(g)) {
                return false;
            }
        }
    }
    // Given additivity, x -> f(x·a) - f(x)·a is additive in x, so checking
    // generators proves linearity everywhere.
    let src_reps = src.scalars().reps();
    let dst_reps = dst.scalars().reps();
    for &g in add_gens {
        for a in 0..src_reps {
            if f(src.act(g, a)) != act_in(dst, dst_reps, f(g), a) {
                return false;
            }
        }
    }
    // Literal scan on small carriers.
    if n <= 256 {
        for x in 0..n {
            for y in 0..n {
                if f(src.add(x, y)) != dst.add(f(x), f(y)) {
                    return false;
                }
            }
            for a in 0..src_reps {
                if f(src.act(x, a)) != act_in(dst, dst_reps, f(x), a) {
                    return false;
                }
            }
        }
    }
    true
}

/// Enumerates all module homomorphisms src -> dst.
pub fn enumerate_homs(src: &FiniteModule, dst: &FiniteModule) -> Result<HomTable> {
    check_scalar_compat(src, dst)?;
    let n = src.size();
    let reps = src.scalars().reps();
    let dst_reps = dst.scalars().reps();
    let gens = module_generators(src);

    // Span lists per level: elements whose images are determined before the
    // i-th generator image is chosen.
    let mut prev_lists: Vec<Vec<usize>> = Vec::with_capacity(gens.len());
    {
        let mut span = Bitset::new(n);
        span.set(src.zero());
        let mut list = vec![src.zero()];
        for &g in &gens {
            prev_lists.push(list.clone());
            let mut orbit = Bitset::new(n);
            for a in 0..reps {
                orbit.set(src.act(g, a));
            }
            let mut next = span.clone();
            let mut next_list = list.clone();
            for &s in &list {
                for t in orbit.iter_ones() {
                    let x = src.add(s, t);
                    if !next.get(x) {
                        next.set(x);
                        next_list.push(x);
                    }
                }
            }
            span = next;
            list = next_list;
        }
    }

    const UNSET: u32 = u32::MAX;
    let mut img = vec![UNSET; n];
    img[src.zero()] = dst.zero() as u32;
    let mut maps: Vec<Vec<u32>> = Vec::new();

    // Depth-first search over generator images. Each level keeps an explicit
    // trail of the assignments it made so a failed branch undoes exactly its
    // own work.
    struct Search<'a> {
        src: &'a FiniteModule,
        dst: &'a FiniteModule,
        dst_reps: usize,
        gens: &'a [usize],
        prev_lists: &'a [Vec<usize>],
    }

    impl Search<'_> {
        /// Extends `img` with every element determined by sending generator
        /// `g` to `t`, given the span `prev` fixed by earlier levels. Returns
        /// the trail of new assignments, or None (with `img` restored) on a
        /// conflict.
        fn assign_level(
            &self,
            g: usize,
            t: usize,
            prev: &[usize],
            img: &mut [u32],
        ) -> Option<Vec<usize>> {
            let reps = self.src.scalars().reps();
            let mut trail = Vec::new();
            for &s in prev {
                let img_s = img[s] as usize;
                for a in 0..reps {
                    let x = self.src.add(s, self.src.act(g, a));
                    let v = self.dst.add(img_s, act_in(self.dst, self.dst_reps, t, a)) as u32;
                    let cur = img[x];
                    if cur == u32::MAX {
                        img[x] = v;
                        trail.push(x);
                    } else if cur != v {
                        for &y in &trail {
                            img[y] = u32::MAX;
                        }
                        return None;
                    }
                }
            }
            Some(trail)
        }

        fn dfs(&self, level: usize, img: &mut [u32], maps: &mut Vec<Vec<u32>>) -> Result<()> {
            if level == self.gens.len() {
                if verify_hom(self.src, self.dst, img) {
                    if maps.len() >= HOM_COUNT_CAP {
                        return Err(Error::CapacityExceeded {
                            what: "homomorphism count",
                            size: maps.len() + 1,
                            cap: HOM_COUNT_CAP,
                        });
                    }
                    maps.push(img.to_vec());
                }
                return Ok(());
            }
            let g = self.gens[level];
            for t in 0..self.dst.size() {
                if let Some(trail) = self.assign_level(g, t, &self.prev_lists[level], img) {
                    self.dfs(level + 1, img, maps)?;
                    for &y in &trail {
                        img[y] = u32::MAX;
                    }
                }
            }
            Ok(())
        }
    }

    Search { src, dst, dst_reps, gens: &gens, prev_lists: &prev_lists }
        .dfs(0, &mut img, &mut maps)?;

    let mut index_by_gen_images = HashMap::with_capacity(maps.len());
    for (i, m) in maps.iter().enumerate() {
        let key: Vec<u32> = gens.iter().map(|&g| m[g]).collect();
        index_by_gen_images.insert(key, i as u32);
    }
    debug_assert_eq!(index_by_gen_images.len(), maps.len());
    Ok(HomTable { maps, gens, index_by_gen_images })
}

/// Brute-force oracle: filters every function src -> dst by the literal
/// homomorphism laws. Only for tiny sources; used to validate the enumerator.
pub fn hom_oracle(src: &FiniteModule, dst: &FiniteModule) -> Result<Vec<Vec<u32>>> {
    check_scalar_compat(src, dst)?;
    let n = src.size();
    if n > ORACLE_SOURCE_CAP {
        return Err(Error::CapacityExceeded {
            what: "oracle source carrier",
            size: n,
            cap: ORACLE_SOURCE_CAP,
        });
    }
    let nd = dst.size();
    let total = nd.checked_pow(n as u32).filter(|&t| t <= 1 << 26).ok_or(
        Error::CapacityExceeded { what: "oracle function space", size: usize::MAX, cap: 1 << 26 },
    )?;
    let src_reps = src.scalars().reps();
    let dst_reps = dst.scalars().reps();
    let mut f = vec![0u32; n];
    let mut out = Vec::new();
    for _ in 0..total {
        'check: {
            if f[src.zero()] as usize != dst.zero() {
                break 'check;
            }
            for x in 0..n {
                for y in 0..n {
                    if f[src.add(x, y)] != dst.add(f[x] as usize, f[y] as usize) as u32 {
                        break 'check;
                    }
                }
            }
            for x in 0..n {
                for a in 0..src_reps {
                    if f[src.act(x, a)] != act_in(dst, dst_reps, f[x] as usize, a) as u32 {
                        break 'check;
                    }
                }
            }
            out.push(f.clone());
        }
        // Odometer increment, least-significant position last.
        let mut pos = n;
        while pos > 0 {
            pos -= 1;
            f[pos] += 1;
            if (f[pos] as usize) < nd {
                break;
            }
            f[pos] = 0;
        }
    }
    Ok(out)
}

/// The dual table of a module over the integers: the only additive map into
/// the integers from a finite group is zero, represented as the constant-0
/// scalar map.
pub fn zero_dual(m: &FiniteModule) -> HomTable {
    let gens = module_generators(m);
    let maps = vec![vec![0u32; m.size()]];
    let mut index_by_gen_images = HashMap::new();
    index_by_gen_images.insert(vec![0u32; gens.len()], 0);
    HomTable { maps, gens, index_by_gen_images }
}

/// Dual maps of a module over a table ring: homomorphisms into the ring seen
/// as a right module over itself. Map values are ring element indices.
pub fn dual_table(m: &FiniteModule, ring: &Arc<FiniteRing>) -> Result<HomTable> {
    let regular = FiniteModule::regular_representation(Arc::clone(ring))?;
    enumerate_homs(m, &regular)
}

/// Builds the endomorphism ring from the enumerated End table: addition is
/// pointwise, multiplication is composition (f·g)(x) = f(g(x)). Table cells
/// are resolved by generator-image lookup, then the whole ring is validated.
pub fn end_ring(module: &FiniteModule, homs: &HomTable) -> Result<FiniteRing> {
    let k = homs.len();
    if k == 0 {
        return Err(Error::EndomorphismNotFound("endomorphism table is empty".into()));
    }
    if k > SIZE_CAP {
        return Err(Error::CapacityExceeded { what: "endomorphism ring carrier", size: k, cap: SIZE_CAP });
    }
    let gens = homs.gens();
    let names: Vec<String> = (0..k).map(|i| format!("f{i}")).collect();

    // Fast path for a single generator: index maps by that one image.
    let single: Option<Vec<u32>> = if gens.len() == 1 {
        let mut lut = vec![u32::MAX; module.size()];
        for i in 0..k {
            lut[homs.map(i)[gens[0]] as usize] = i as u32;
        }
        Some(lut)
    } else {
        None
    };
    let resolve = |key: &[u32]| -> Result<u32> {
        let found = match &single {
            Some(lut) => {
                let v = lut[key[0] as usize];
                (v != u32::MAX).then_some(v as usize)
            }
            None => homs.find_by_gen_images(key),
        };
        found.map(|i| i as u32).ok_or_else(|| {
            Error::EndomorphismNotFound(format!("no endomorphism with generator images {key:?}"))
        })
    };

    let mut key = vec![0u32; gens.len()];
    let mut add = OpTable::from_fn(k, k, |_, _| 0);
    let mut mul = OpTable::from_fn(k, k, |_, _| 0);
    for i in 0..k {
        let mi = homs.map(i);
        for j in 0..k {
            let mj = homs.map(j);
            for (pos, &g) in gens.iter().enumerate() {
                key[pos] = module.add(mi[g] as usize, mj[g] as usize) as u32;
            }
            add.set(i, j, resolve(&key)?);
            for (pos, &g) in gens.iter().enumerate() {
                key[pos] = mi[mj[g] as usize];
            }
            mul.set(i, j, resolve(&key)?);
        }
    }

    let zero_key: Vec<u32> = gens.iter().map(|_| module.zero() as u32).collect();
    let zero = resolve(&zero_key)? as usize;
    let one_key: Vec<u32> = gens.iter().map(|&g| g as u32).collect();
    let one = resolve(&one_key)? as usize;
    FiniteRing::new(names, add, mul, zero, one)
}

/// Checks that a ring is isomorphic to the endomorphism ring of its regular
/// representation via a -> (x -> a·x), verifying bijectivity and that both
/// operations are preserved cell by cell.
pub fn left_regular_iso_holds(
    ring: &FiniteRing,
    homs: &HomTable,
    end: &FiniteRing,
) -> bool {
    let n = ring.size();
    if end.size() != n || homs.len() != n {
        return false;
    }
    let gens = homs.gens();
    let mut pi = vec![usize::MAX; n];
    let mut hit = vec![false; n];
    let mut key = vec![0u32; gens.len()];
    for (a, slot) in pi.iter_mut().enumerate() {
        for (pos, &g) in gens.iter().enumerate() {
            key[pos] = ring.mul(a, g) as u32;
        }
        match homs.find_by_gen_images(&key) {
            Some(i) if !hit[i] => {
                // Confirm the full map, not only the generator images.
                if (0..n).any(|x| homs.apply(i, x) != ring.mul(a, x)) {
                    return false;
                }
                hit[i] = true;
                *slot = i;
            }
            _ => return false,
        }
    }
    for a in 0..n {
        for b in 0..n {
            if pi[ring.add(a, b)] != end.add(pi[a], pi[b])
                || pi[ring.mul(a, b)] != end.mul(pi[a], pi[b])
            {
                return false;
            }
        }
    }
    true
}

/// Scalar representatives annihilating an element: {a : x·a = 0}.
pub fn right_annihilator(m: &FiniteModule, x: usize) -> Bitset {
    let reps = m.scalars().reps();
    let mut bits = Bitset::new(reps);
    for a in 0..reps {
        if m.act(x, a) == m.zero() {
            bits.set(a);
        }
    }
    bits
}

/// Whether the right annihilator of x is trivial in the actual scalar ring.
/// Over the integers kind this is never true on a nontrivial module, because
/// the exponent annihilates every element; on the trivial module every
/// integer annihilates the only element, so it is false there too.
pub fn annihilator_is_zero(m: &FiniteModule, x: usize) -> bool {
    match m.scalars() {
        ScalarRing::Integers { .. } => false,
        ScalarRing::Table(r) => {
            let ann = right_annihilator(m, x);
            ann.count_ones() == 1 && ann.get(r.zero())
        }
    }
}

/// Endomorphisms annihilating an element: {f : f(x) = 0}.
pub fn end_annihilator(homs: &HomTable, zero: usize, x: usize) -> Vec<usize> {
    (0..homs.len()).filter(|&i| homs.apply(i, x) == zero).collect()
}

/// Elements m with m = m·φ(m) for some dual map φ.
pub fn regular_elements(m: &FiniteModule, dual: &HomTable) -> Vec<usize> {
    let dst_reps = m.scalars().reps();
    (0..m.size())
        .filter(|&x| {
            (0..dual.len()).any(|i| act_in(m, dst_reps, x, dual.apply(i, x)) == x)
        })
        .collect()
}

/// Von Neumann regularity of a table ring: every a has some x with axa = a.
pub fn ring_is_regular(r: &FiniteRing) -> bool {
    let n = r.size();
    (0..n).all(|a| (0..n).any(|x| r.mul(r.mul(a, x), a) == a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ring_zn;

    fn zmod(n: usize) -> FiniteModule {
        FiniteModule::zmodule(n).unwrap()
    }

    #[test]
    fn generators_prefer_largest_orbit() {
        assert_eq!(module_generators(&zmod(12)), vec![1]);
        let p = FiniteModule::module_product(&zmod(2), &zmod(4)).unwrap();
        // (0,1) has index 1 and a 4-element orbit; (1,1) at index 5 finishes.
        assert_eq!(module_generators(&p), vec![1, 5]);
    }

    #[test]
    fn end_of_z4_matches_oracle() {
        let m = zmod(4);
        let enumerated = enumerate_homs(&m, &m).unwrap();
        let oracle = hom_oracle(&m, &m).unwrap();
        assert_eq!(enumerated.len(), 4);
        let got: Vec<Vec<u32>> = (0..enumerated.len()).map(|i| enumerated.map(i).to_vec()).collect();
        let mut oracle_sorted = oracle;
        oracle_sorted.sort();
        let mut got_sorted = got;
        got_sorted.sort();
        assert_eq!(got_sorted, oracle_sorted);
    }

    #[test]
    fn end_of_z2xz4_matches_oracle() {
        let p = FiniteModule::module_product(&zmod(2), &zmod(4)).unwrap();
        let enumerated = enumerate_homs(&p, &p).unwrap();
        let oracle = hom_oracle(&p, &p).unwrap();
        assert_eq!(enumerated.len(), 32);
        assert_eq!(enumerated.len(), oracle.len());
        let mut got: Vec<Vec<u32>> = (0..enumerated.len()).map(|i| enumerated.map(i).to_vec()).collect();
        got.sort();
        let mut want = oracle;
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn maps_sorted_by_generator_images_zero_first() {
        let m = zmod(6);
        let t = enumerate_homs(&m, &m).unwrap();
        assert_eq!(t.len(), 6);
        assert!(t.map(0).iter().all(|&v| v == 0));
        let keys: Vec<Vec<u32>> =
            (0..t.len()).map(|i| t.gens().iter().map(|&g| t.map(i)[g]).collect()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(t.zero_index(0), Some(0));
        assert_eq!(t.identity_index(), Some(1));
    }

    #[test]
    fn idempotent_endomorphisms_of_z12() {
        let m = zmod(12);
        let t = enumerate_homs(&m, &m).unwrap();
        // Multiplication by c is idempotent exactly when c^2 = c mod 12.
        let idem: Vec<usize> = (0..t.len()).filter(|&i| t.is_idempotent(i)).collect();
        let images: Vec<u32> = idem.iter().map(|&i| t.map(i)[1]).collect();
        assert_eq!(images, vec![0, 1, 4, 9]);
    }

    #[test]
    fn end_ring_of_z4_is_z4() {
        let m = zmod(4);
        let homs = enumerate_homs(&m, &m).unwrap();
        let end = end_ring(&m, &homs).unwrap();
        assert_eq!(end.size(), 4);
        // End(Z_4) is commutative with exactly two units (mult by 1 and 3).
        let units: Vec<usize> = (0..4).filter(|&i| end.is_unit(i)).collect();
        assert_eq!(units.len(), 2);
        assert!(end.is_central(2));
    }

    #[test]
    fn left_regular_iso_for_small_rings() {
        for n in [2usize, 4, 6, 12] {
            let ring = Arc::new(ring_zn(n).unwrap());
            let m = FiniteModule::regular_representation(Arc::clone(&ring)).unwrap();
            let homs = enumerate_homs(&m, &m).unwrap();
            let end = end_ring(&m, &homs).unwrap();
            assert!(left_regular_iso_holds(&ring, &homs, &end), "iso failed for Z_{n}");
        }
    }

    #[test]
    fn dual_of_integers_module_is_zero() {
        let m = zmod(12);
        let d = zero_dual(&m);
        assert_eq!(d.len(), 1);
        assert!(d.map(0).iter().all(|&v| v == 0));
        assert_eq!(regular_elements(&m, &d), vec![0]);
    }

    #[test]
    fn dual_of_regular_representation() {
        let ring = Arc::new(ring_zn(6).unwrap());
        let m = FiniteModule::regular_representation(Arc::clone(&ring)).unwrap();
        let d = dual_table(&m, &ring).unwrap();
        assert_eq!(d.len(), 6);
        // Every element of a commutative regular representation is regular
        // exactly when the ring is von Neumann regular; Z_6 is.
        assert!(ring_is_regular(&ring));
        assert_eq!(regular_elements(&m, &d).len(), 6);
    }

    #[test]
    fn annihilators() {
        let m = zmod(12);
        let ann6 = right_annihilator(&m, 6);
        assert_eq!(ann6.to_vec(), vec![0, 2, 4, 6, 8, 10]);
        assert!(!annihilator_is_zero(&m, 1)); // integers kind: never faithful
        let ring = Arc::new(ring_zn(12).unwrap());
        let r = FiniteModule::regular_representation(Arc::clone(&ring)).unwrap();
        assert!(annihilator_is_zero(&r, 1));
        assert!(!annihilator_is_zero(&r, 6));
        let homs = enumerate_homs(&r, &r).unwrap();
        assert_eq!(end_annihilator(&homs, 0, 6).len(), 6);
    }

    #[test]
    fn oracle_rejects_large_sources() {
        let m = zmod(9);
        assert!(matches!(hom_oracle(&m, &m), Err(Error::CapacityExceeded { .. })));
    }

    #[test]
    fn hom_between_different_exponents() {
        // Hom(Z_2, Z_4) has two maps: zero and x -> 2x.
        let a = zmod(2);
        let b = zmod(4);
        let t = enumerate_homs(&a, &b).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.map(1), &[0, 2]);
    }
}
