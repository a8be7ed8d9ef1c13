//! Scalar rings for module instances.
//!
//! Two kinds are supported:
//!
//! * `Table` — an explicit finite ring, every element enumerable;
//! * `Integers { exponent }` — the ring of integers acting on a finite
//!   abelian group. Only the action is finite: scalar `a` acts as repeated
//!   addition, which factors through `a mod exponent`, so representatives
//!   `0..exponent` cover all distinct actions. Properties of the scalar
//!   itself (being a unit, being idempotent, annihilating nothing) are
//!   evaluated in the integers, not in Z_exponent: the only integer units
//!   are 1 and -1, the only integer idempotents are 0 and 1, and no element
//!   of a nontrivial finite module has zero annihilator because the exponent
//!   kills everything.

use std::sync::Arc;

use crate::ring::FiniteRing;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScalarRing {
    Table(Arc<FiniteRing>),
    Integers { exponent: usize },
}

impl ScalarRing {
    /// Number of representative scalars: every distinct action on any module
    /// with this scalar ring is realised by exactly one representative.
    pub fn reps(&self) -> usize {
        match self {
            ScalarRing::Table(r) => r.size(),
            ScalarRing::Integers { exponent } => *exponent,
        }
    }

    pub fn is_integers(&self) -> bool {
        matches!(self, ScalarRing::Integers { .. })
    }

    pub fn as_table(&self) -> Option<&Arc<FiniteRing>> {
        match self {
            ScalarRing::Table(r) => Some(r),
            ScalarRing::Integers { .. } => None,
        }
    }

    pub fn zero(&self) -> usize {
        match self {
            ScalarRing::Table(r) => r.zero(),
            ScalarRing::Integers { .. } => 0,
        }
    }

    pub fn one(&self) -> usize {
        match self {
            ScalarRing::Table(r) => r.one(),
            ScalarRing::Integers { exponent } => 1 % exponent,
        }
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        match self {
            ScalarRing::Table(r) => r.add(a, b),
            ScalarRing::Integers { exponent } => (a + b) % exponent,
        }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match self {
            ScalarRing::Table(r) => r.mul(a, b),
            ScalarRing::Integers { exponent } => (a * b) % exponent,
        }
    }

    pub fn name(&self, a: usize) -> String {
        match self {
            ScalarRing::Table(r) => r.name(a).to_string(),
            ScalarRing::Integers { .. } => a.to_string(),
        }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        match self {
            ScalarRing::Table(r) => r.index_of(name),
            ScalarRing::Integers { exponent } => {
                let v: usize = name.parse().ok()?;
                (v < *exponent).then_some(v)
            }
        }
    }

    /// Representatives of the scalars that are idempotent in the actual ring.
    /// For the integers those are 0 and 1 — not the idempotents of Z_exponent.
    pub fn idempotent_scalars(&self) -> Vec<usize> {
        match self {
            ScalarRing::Table(r) => (0..r.size()).filter(|&a| r.is_idempotent(a)).collect(),
            ScalarRing::Integers { exponent } => {
                let mut v = vec![0, 1 % exponent];
                v.sort_unstable();
                v.dedup();
                v
            }
        }
    }

    /// Representatives of the scalars that are units in the actual ring.
    /// For the integers those are 1 and -1.
    pub fn unit_scalars(&self) -> Vec<usize> {
        match self {
            ScalarRing::Table(r) => (0..r.size()).filter(|&a| r.is_unit(a)).collect(),
            ScalarRing::Integers { exponent } => {
                let n = *exponent;
                let mut v = vec![1 % n, (n - 1) % n];
                v.sort_unstable();
                v.dedup();
                v
            }
        }
    }

    /// Whether scalar representative `a` is a unit of the actual ring.
    pub fn is_unit_scalar(&self, a: usize) -> bool {
        match self {
            ScalarRing::Table(r) => r.is_unit(a),
            ScalarRing::Integers { exponent } => {
                let n = *exponent;
                a == 1 % n || a == (n - 1) % n
            }
        }
    }

    /// Whether every element of the ring commutes with every other.
    pub fn is_commutative(&self) -> bool {
        match self {
            ScalarRing::Table(r) => (0..r.size()).all(|a| r.is_central(a)),
            ScalarRing::Integers { .. } => true,
        }
    }

    /// True when the scalar ring is finite as a set (enumerable elementwise).
    /// The integers kind is infinite even though its action is finite.
    pub fn is_finite(&self) -> bool {
        !self.is_integers()
    }
}

impl std::fmt::Display for ScalarRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ScalarRing::Table(r) => write!(f, "table ring of size {}", r.size()),
            ScalarRing::Integers { exponent } => {
                write!(f, "integers acting through exponent {exponent}")
            }
        }
    }
}
