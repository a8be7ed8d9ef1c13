//! Cross-cutting analytics over a prepared instance: compatibility of the
//! main order with unit/central/duo actions on both sides, and the inclusion
//! diagram between the five relations.

use serde::Serialize;

use crate::context::Ctx;
use crate::error::Result;
use crate::order::Rel;
use crate::table::BitMatrix;

/// Above this many `|units| · n²` relation probes, unit compatibility is
/// verified on a greedy generating set of the unit group only; every unit is
/// still covered because automorphisms compose and the generated closure is
/// checked to exhaust the unit group.
const FULL_UNIT_SCAN_BUDGET: usize = 1 << 27;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompatViolation {
    /// Display name of the acting unit/central/duo element (`f{i}` for
    /// endomorphisms, scalar display name otherwise).
    pub actor: String,
    pub m1: String,
    pub m2: String,
    pub detail: &'static str,
}

/// One compatibility aspect: whether its hypothesis holds here, how many
/// actors were scanned, and the first violation found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompatPart {
    pub applies: bool,
    pub actors_checked: usize,
    /// For the two unit parts: false when only a generating set was scanned.
    pub scanned_all: bool,
    pub violation: Option<CompatViolation>,
}

impl CompatPart {
    fn vacuous() -> CompatPart {
        CompatPart { applies: false, actors_checked: 0, scanned_all: true, violation: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompatReport {
    pub unit_endomorphisms: CompatPart,
    pub unit_scalars: CompatPart,
    pub central_scalars: CompatPart,
    pub central_endomorphisms: CompatPart,
    pub right_duo_scalars: CompatPart,
    pub left_duo_endomorphisms: CompatPart,
    pub endomorphism_unit_group_order: usize,
    pub scalar_unit_group_order: usize,
}

impl CompatReport {
    pub fn first_violation(&self) -> Option<&CompatViolation> {
        [
            &self.unit_endomorphisms,
            &self.unit_scalars,
            &self.central_scalars,
            &self.central_endomorphisms,
            &self.right_duo_scalars,
            &self.left_duo_endomorphisms,
        ]
        .into_iter()
        .find_map(|p| p.violation.as_ref())
    }
}

/// Greedy generating set for a finite group given as a unit list plus a
/// multiplication oracle, together with the closure it generates. Inverses
/// come for free: in a finite group each generator's powers cycle back.
fn group_generators(
    units: &[usize],
    identity: usize,
    space: usize,
    mul: &dyn Fn(usize, usize) -> usize,
) -> (Vec<usize>, Vec<usize>) {
    let mut in_closure = vec![false; space];
    in_closure[identity] = true;
    let mut closure = vec![identity];
    let mut gens: Vec<usize> = Vec::new();
    for &u in units {
        if in_closure[u] {
            continue;
        }
        gens.push(u);
        in_closure[u] = true;
        closure.push(u);
        let mut head = 0;
        while head < closure.len() {
            let x = closure[head];
            head += 1;
            for &g in &gens {
                let y = mul(x, g);
                if !in_closure[y] {
                    in_closure[y] = true;
                    closure.push(y);
                }
            }
        }
    }
    (gens, closure)
}

/// First cell where `x ↦ perm[x]` fails to be a relation automorphism,
/// i.e. `bits(i, j) ≠ bits(perm i, perm j)`.
fn automorphism_violation(bits: &BitMatrix, perm: &[usize]) -> Option<(usize, usize)> {
    let n = bits.size();
    for i in 0..n {
        for j in 0..n {
            if bits.get(i, j) != bits.get(perm[i], perm[j]) {
                return Some((i, j));
            }
        }
    }
    None
}

/// First related pair whose image under `map` is unrelated.
fn forward_violation(
    bits: &BitMatrix,
    map: impl Fn(usize) -> usize,
) -> Option<(usize, usize)> {
    for m1 in 0..bits.size() {
        let mut row = bits.row_iter_ones(m1);
        if let Some(m2) = row.find(|&m2| !bits.get(map(m1), map(m2))) {
            return Some((m1, m2));
        }
    }
    None
}

/// Runs the six compatibility aspects of the main order:
/// 1. unit endomorphisms act as relation automorphisms,
/// 2. unit scalars act as relation automorphisms,
/// 3. central scalars preserve relatedness forward,
/// 4. central endomorphisms preserve relatedness forward,
/// 5. if the scalar ring is right duo, every scalar preserves forward,
/// 6. if the endomorphism ring is left duo, every endomorphism preserves
///    forward.
pub fn compatibility_report(ctx: &Ctx) -> Result<CompatReport> {
    let m = ctx.module();
    let homs = ctx.homs()?;
    let scalars = m.scalars();
    let bits = &ctx.poset(Rel::Mitsch)?.bits;
    let n = m.size();

    let end_facts = ctx.end_facts()?;
    let end_ring = ctx.end_ring()?;
    let identity_f =
        homs.identity_index().expect("endomorphism table contains the identity");

    let unit_part = |unit_list: &[usize],
                     identity: usize,
                     space: usize,
                     mul: &dyn Fn(usize, usize) -> usize,
                     perm_of: &dyn Fn(usize) -> Vec<usize>,
                     name_of: &dyn Fn(usize) -> String|
     -> (CompatPart, usize) {
        let full = unit_list.len().saturating_mul(n * n) <= FULL_UNIT_SCAN_BUDGET;
        let (scan, order) = if full {
            (unit_list.to_vec(), unit_list.len())
        } else {
            let (gens, closure) = group_generators(unit_list, identity, space, mul);
            debug_assert_eq!(closure.len(), unit_list.len());
            (gens, closure.len())
        };
        let mut part = CompatPart {
            applies: true,
            actors_checked: scan.len(),
            scanned_all: full,
            violation: None,
        };
        for &u in &scan {
            let perm = perm_of(u);
            if let Some((i, j)) = automorphism_violation(bits, &perm) {
                part.violation = Some(CompatViolation {
                    actor: name_of(u),
                    m1: m.name(i).to_string(),
                    m2: m.name(j).to_string(),
                    detail: "unit action is not a relation automorphism",
                });
                break;
            }
        }
        (part, order)
    };

    let (unit_endomorphisms, endo_group_order) = unit_part(
        &end_facts.units,
        identity_f,
        homs.len(),
        &|a, b| end_ring.mul(a, b),
        &|u| (0..n).map(|x| homs.apply(u, x)).collect(),
        &|u| format!("f{u}"),
    );

    let scalar_units: Vec<usize> = if scalars.is_integers() {
        // Over the integers only ±1 are invertible; −1 acts like the largest
        // residue of the additive exponent.
        let mut v = vec![scalars.one()];
        let neg_one = m.additive_exponent() - 1;
        if neg_one != scalars.one() {
            v.push(neg_one);
        }
        v
    } else {
        ctx.scalar_facts().expect("table scalars have facts").units.clone()
    };
    let (unit_scalars, scalar_group_order) = unit_part(
        &scalar_units,
        scalars.one(),
        scalars.reps(),
        &|a, b| scalars.mul(a, b),
        &|u| (0..n).map(|x| m.act(x, u)).collect(),
        &|u| scalars.name(u),
    );

    let forward_part = |actors: &[usize],
                        map_of: &dyn Fn(usize, usize) -> usize,
                        name_of: &dyn Fn(usize) -> String,
                        detail: &'static str|
     -> CompatPart {
        let mut part = CompatPart {
            applies: true,
            actors_checked: actors.len(),
            scanned_all: true,
            violation: None,
        };
        for &c in actors {
            if let Some((i, j)) = forward_violation(bits, |x| map_of(c, x)) {
                part.violation = Some(CompatViolation {
                    actor: name_of(c),
                    m1: m.name(i).to_string(),
                    m2: m.name(j).to_string(),
                    detail,
                });
                break;
            }
        }
        part
    };

    let central_scalar_list: Vec<usize> = if scalars.is_integers() {
        (0..scalars.reps()).collect()
    } else {
        ctx.scalar_facts().expect("table scalars have facts").central.clone()
    };
    let central_scalars = forward_part(
        &central_scalar_list,
        &|c, x| m.act(x, c),
        &|c| scalars.name(c),
        "central scalar does not preserve relatedness",
    );

    let central_endomorphisms = forward_part(
        &end_facts.central,
        &|f, x| homs.apply(f, x),
        &|f| format!("f{f}"),
        "central endomorphism does not preserve relatedness",
    );

    let scalars_right_duo = if scalars.is_integers() {
        true // commutative
    } else {
        ctx.scalar_facts().expect("table scalars have facts").right_duo
    };
    let right_duo_scalars = if scalars_right_duo {
        let all: Vec<usize> = (0..scalars.reps()).collect();
        forward_part(
            &all,
            &|c, x| m.act(x, c),
            &|c| scalars.name(c),
            "scalar action over a right duo ring does not preserve relatedness",
        )
    } else {
        CompatPart::vacuous()
    };

    let left_duo_endomorphisms = if end_facts.left_duo {
        let all: Vec<usize> = (0..homs.len()).collect();
        forward_part(
            &all,
            &|f, x| homs.apply(f, x),
            &|f| format!("f{f}"),
            "endomorphism over a left duo ring does not preserve relatedness",
        )
    } else {
        CompatPart::vacuous()
    };

    Ok(CompatReport {
        unit_endomorphisms,
        unit_scalars,
        central_scalars,
        central_endomorphisms,
        right_duo_scalars,
        left_duo_endomorphisms,
        endomorphism_unit_group_order: endo_group_order,
        scalar_unit_group_order: scalar_group_order,
    })
}

/// One inclusion cell of the implication diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InclusionCell {
    pub sub: Rel,
    pub sup: Rel,
    pub holds: bool,
    /// First pair related under `sub` but not `sup` (row-major), by name.
    pub first_missing: Option<(String, String)>,
    /// First pair related under `sup` but not `sub`, by name: the cell is an
    /// equality exactly when both witnesses are absent.
    pub first_strict: Option<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelCount {
    pub relation: Rel,
    pub related_pairs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ImplicationReport {
    pub instance: String,
    pub counts: Vec<RelCount>,
    pub cells: Vec<InclusionCell>,
    /// minus = mitsch = dsum, which regular modules must satisfy.
    pub minus_mitsch_dsum_coincide: bool,
    pub regular_module: bool,
}

fn first_missing_pair(sub: &BitMatrix, sup: &BitMatrix) -> Option<(usize, usize)> {
    for i in 0..sub.size() {
        for (w, (&a, &b)) in sub.row(i).iter().zip(sup.row(i)).enumerate() {
            let diff = a & !b;
            if diff != 0 {
                return Some((i, w * 64 + diff.trailing_zeros() as usize));
            }
        }
    }
    None
}

/// Full pairwise inclusion diagram over the five relations.
pub fn implication_report(ctx: &Ctx) -> Result<ImplicationReport> {
    let m = ctx.module();
    let mats: Vec<(Rel, std::sync::Arc<crate::order::PosetMatrix>)> = Rel::ALL
        .iter()
        .map(|&r| Ok((r, ctx.poset(r)?)))
        .collect::<Result<Vec<_>>>()?;
    let counts = mats
        .iter()
        .map(|(r, p)| RelCount {
            relation: *r,
            related_pairs: (0..p.size()).map(|i| p.bits.row_count_ones(i)).sum(),
        })
        .collect();
    let named = |pair: Option<(usize, usize)>| {
        pair.map(|(i, j)| (m.name(i).to_string(), m.name(j).to_string()))
    };
    let mut cells = Vec::new();
    for (sub, ps) in &mats {
        for (sup, pt) in &mats {
            if sub == sup {
                continue;
            }
            let first_missing = first_missing_pair(&ps.bits, &pt.bits);
            cells.push(InclusionCell {
                sub: *sub,
                sup: *sup,
                holds: first_missing.is_none(),
                first_missing: named(first_missing),
                first_strict: named(first_missing_pair(&pt.bits, &ps.bits)),
            });
        }
    }
    let eq = |a: Rel, b: Rel| {
        cells
            .iter()
            .find(|c| c.sub == a && c.sup == b)
            .map(|c| c.holds && c.first_strict.is_none())
            .unwrap_or(false)
    };
    let minus_mitsch_dsum_coincide =
        eq(Rel::Minus, Rel::Mitsch) && eq(Rel::Mitsch, Rel::Dsum);
    Ok(ImplicationReport {
        instance: ctx.name().to_string(),
        counts,
        cells,
        minus_mitsch_dsum_coincide,
        regular_module: ctx.is_regular_module()?,
    })
}
