//! Element orders on finite modules.
//!
//! This crate models finite unital rings and finite right modules as dense
//! operation tables, enumerates module endomorphisms and dual maps, and
//! builds five order-style relations on module elements — a natural partial
//! order defined through endomorphism/scalar witnesses, a minus-type order
//! through dual maps, an idempotent-witness order, a direct-sum order and a
//! cyclic-submodule containment pre-order. On top of the relations it offers
//! poset analytics (Hasse diagrams, maximal elements, lattice checks), a
//! registry of replayable structural claims with certified witnesses, and a
//! catalog of built-in instances.
//!
//! ```
//! use modorder::{catalog, order, order::Rel};
//!
//! # fn main() -> modorder::Result<()> {
//! let ctx = catalog::build_builtin("zmod12")?;
//! let poset = ctx.poset(Rel::Mitsch)?;
//! assert!(poset.axioms.is_partial_order());
//!
//! let homs = ctx.homs()?;
//! let dual = ctx.dual()?;
//! let cert = order::mitsch_leq(ctx.module(), &homs, 6, 2).expect("6 ≤ 2 holds");
//! assert!(order::replay_certificate(ctx.module(), &homs, &dual, 6, 2, &cert));
//! # Ok(())
//! # }
//! ```

pub mod catalog;
pub mod context;
pub mod error;
pub mod hom;
pub mod io;
pub mod lab;
pub mod module;
pub mod order;
pub mod ring;
pub mod scalar;
pub mod table;

pub use error::{Error, Result};
