//! Built-in instance catalog: reproducible recipes for the finite modules
//! the test-bench and the claim suite run on.
//!
//! Two module kinds appear:
//! * products of cyclic groups `Z_{n1} × … × Z_{nk}` with the integers
//!   acting by repeated addition, and
//! * right regular representations `R_R` of explicit finite rings
//!   (full or patterned matrix rings over `Z_base`, and `Z_n` itself).

use std::sync::Arc;

use crate::context::Ctx;
use crate::error::{Error, Result};
use crate::module::FiniteModule;
use crate::ring::{pattern_matrix_ring, ring_zn, FiniteRing};

/// Recipe for a finite ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingRecipe {
    /// Integers modulo `n`.
    Zn(usize),
    /// `k×k` matrices over `Z_base` with each entry constrained to a fixed
    /// additive subgroup (`entries[i][j]` lists the allowed residues).
    PatternMatrix { base: usize, k: usize, entries: Vec<Vec<Vec<usize>>> },
}

impl RingRecipe {
    pub fn build(&self) -> Result<FiniteRing> {
        match self {
            RingRecipe::Zn(n) => ring_zn(*n),
            RingRecipe::PatternMatrix { base, k, entries } => {
                pattern_matrix_ring(*base, *k, entries)
            }
        }
    }
}

/// Recipe for a finite module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleRecipe {
    /// `Z_{n1} × … × Z_{nk}` over the integers.
    ZModule(Vec<usize>),
    /// The ring acting on itself from the right.
    RegularRep(RingRecipe),
}

/// A named, documented catalog entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceDescriptor {
    pub name: &'static str,
    pub note: &'static str,
    pub recipe: ModuleRecipe,
}

/// Full residue set `{0, …, base−1}` for a pattern entry.
fn all(base: usize) -> Vec<usize> {
    (0..base).collect()
}

/// Residue subgroup `d·Z_base` for a pattern entry (`d > 0`).
fn multiples(base: usize, d: usize) -> Vec<usize> {
    (0..base).step_by(d).collect()
}

/// The zero subgroup `{0}` for a pattern entry.
fn zero_entry() -> Vec<usize> {
    vec![0]
}

/// Full `k×k` matrix ring over `Z_base` as a pattern recipe.
fn full_matrix(base: usize, k: usize) -> RingRecipe {
    RingRecipe::PatternMatrix { base, k, entries: vec![vec![all(base); k]; k] }
}

/// The built-in catalog, in canonical order.
pub fn builtin_catalog() -> Vec<InstanceDescriptor> {
    vec![
        InstanceDescriptor {
            name: "zmod12",
            note: "Z_12 over the integers; Mitsch-related pairs with a zero dual",
            recipe: ModuleRecipe::ZModule(vec![12]),
        },
        InstanceDescriptor {
            name: "zmod4",
            note: "Z_4 over the integers; integer-multiple audit instance",
            recipe: ModuleRecipe::ZModule(vec![4]),
        },
        InstanceDescriptor {
            name: "zmod6",
            note: "Z_6 over the integers; squarefree companion audit instance",
            recipe: ModuleRecipe::ZModule(vec![6]),
        },
        InstanceDescriptor {
            name: "zmod2x4",
            note: "Z_2 × Z_4 over the integers; non-cyclic with noncommutative End",
            recipe: ModuleRecipe::ZModule(vec![2, 4]),
        },
        InstanceDescriptor {
            name: "ex3.7-z2",
            note: "pattern ring {a,0,b; 0,c,d; 0,0,e} inside upper-triangular 3×3 \
                   matrices over Z_2, acting on itself",
            recipe: ModuleRecipe::RegularRep(RingRecipe::PatternMatrix {
                base: 2,
                k: 3,
                entries: vec![
                    vec![all(2), zero_entry(), all(2)],
                    vec![zero_entry(), all(2), all(2)],
                    vec![zero_entry(), zero_entry(), all(2)],
                ],
            }),
        },
        InstanceDescriptor {
            name: "ex3.9-z8",
            note: "2×2 matrices over Z_8 with off-diagonal entries in 2Z_8, \
                   acting on itself",
            recipe: ModuleRecipe::RegularRep(RingRecipe::PatternMatrix {
                base: 8,
                k: 2,
                entries: vec![
                    vec![all(8), multiples(8, 2)],
                    vec![multiples(8, 2), all(8)],
                ],
            }),
        },
        InstanceDescriptor {
            name: "u2z6",
            note: "upper-triangular 2×2 matrices over Z_6, acting on itself",
            recipe: ModuleRecipe::RegularRep(RingRecipe::PatternMatrix {
                base: 6,
                k: 2,
                entries: vec![vec![all(6), all(6)], vec![zero_entry(), all(6)]],
            }),
        },
        InstanceDescriptor {
            name: "m2z5",
            note: "full 2×2 matrix ring over Z_5, acting on itself",
            recipe: ModuleRecipe::RegularRep(full_matrix(5, 2)),
        },
        InstanceDescriptor {
            name: "m2z7",
            note: "full 2×2 matrix ring over Z_7, acting on itself",
            recipe: ModuleRecipe::RegularRep(full_matrix(7, 2)),
        },
        InstanceDescriptor {
            name: "m2z2",
            note: "full 2×2 matrix ring over Z_2, acting on itself; regular ring",
            recipe: ModuleRecipe::RegularRep(full_matrix(2, 2)),
        },
        InstanceDescriptor {
            name: "z6",
            note: "Z_6 as an explicit table ring, acting on itself; regular ring",
            recipe: ModuleRecipe::RegularRep(RingRecipe::Zn(6)),
        },
    ]
}

/// Build the module (and base ring where applicable) for a descriptor.
pub fn build_instance(desc: &InstanceDescriptor) -> Result<Ctx> {
    match &desc.recipe {
        ModuleRecipe::ZModule(orders) => {
            let mut parts = orders.iter();
            let first = *parts.next().ok_or_else(|| Error::Schema {
                path: "$.recipe".into(),
                detail: "a cyclic-group product needs at least one factor".into(),
            })?;
            let mut module = FiniteModule::zmodule(first)?;
            for &n in parts {
                let next = FiniteModule::zmodule(n)?;
                module = FiniteModule::module_product(&module, &next)?;
            }
            Ok(Ctx::new(desc.name, desc.note, module, None))
        }
        ModuleRecipe::RegularRep(ring_recipe) => {
            let ring = Arc::new(ring_recipe.build()?);
            let module = FiniteModule::regular_representation(ring.clone())?;
            Ok(Ctx::new(desc.name, desc.note, module, Some(ring)))
        }
    }
}

/// Build a catalog instance by name.
pub fn build_builtin(name: &str) -> Result<Ctx> {
    let desc = builtin_catalog()
        .into_iter()
        .find(|d| d.name == name)
        .ok_or(Error::UnknownInstance(name.to_string()))?;
    build_instance(&desc)
}
