//! Claim suite: every registered statement about the five orders is encoded
//! as an executable check that runs against one catalog instance and returns
//! a status plus a JSON payload whose witnesses use element display names.
//!
//! Statuses distinguish four honest outcomes besides success: `Fails` (the
//! check found a violation that is *not* registered as a known finding),
//! `Vacuous` (the hypothesis never fires on this instance), `AuditFinding`
//! (the literal statement is contradicted by a replayable witness), and
//! `Capacity` (the instance exceeds a documented analysis cap).

use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::{json, Value};

use crate::context::Ctx;
use crate::error::{Error, Result};
use crate::order;

pub mod analysis;
pub mod claims;
pub mod search;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    Holds,
    Fails,
    Vacuous,
    AuditFinding,
    Capacity,
}

impl ClaimStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimStatus::Holds => "holds",
            ClaimStatus::Fails => "fails",
            ClaimStatus::Vacuous => "vacuous",
            ClaimStatus::AuditFinding => "audit-finding",
            ClaimStatus::Capacity => "capacity",
        }
    }
}

/// Result of one claim on one instance. `runtime` is measured but kept out
/// of the serialized report so reports stay byte-identical across runs.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimCheck {
    pub claim_id: String,
    pub instance: String,
    pub status: ClaimStatus,
    pub payload: Value,
    #[serde(skip)]
    pub runtime: Duration,
}

/// Which instances a claim runs on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    All,
    /// Exact replays pinned to specific instances.
    Only(&'static [&'static str]),
    /// Claims phrased in ring language; they run where the scalars form an
    /// explicit finite ring (every such catalog instance is a ring acting on
    /// itself).
    TableScalars,
    /// Claims about modules over the integers.
    IntegerScalars,
}

impl Scope {
    pub fn applies(self, ctx: &Ctx) -> bool {
        match self {
            Scope::All => true,
            Scope::Only(names) => names.contains(&ctx.name()),
            Scope::TableScalars => !ctx.module().scalars().is_integers(),
            Scope::IntegerScalars => ctx.module().scalars().is_integers(),
        }
    }
}

type ClaimFn = fn(&Ctx) -> Result<(ClaimStatus, Value)>;

pub struct ClaimDef {
    pub id: &'static str,
    pub title: &'static str,
    pub scope: Scope,
    run: ClaimFn,
}

static REGISTRY: &[ClaimDef] = &[
    ClaimDef {
        id: "Prop-mitschdenklik",
        title: "the three witness forms define the same relation",
        scope: Scope::All,
        run: claims::witness_forms_agree,
    },
    ClaimDef {
        id: "Thm-mitsch",
        title: "the relation is a partial order",
        scope: Scope::All,
        run: claims::mitsch_partial_order,
    },
    ClaimDef {
        id: "Thm-nlidenklikler",
        title: "witness powers 1..4 define the same relation and every witness powers up",
        scope: Scope::All,
        run: claims::power_forms_agree,
    },
    ClaimDef {
        id: "Cor-nlidenklikler-ring",
        title: "ring-language version: two-sided witnesses exist and power up",
        scope: Scope::TableScalars,
        run: claims::ring_power_forms,
    },
    ClaimDef {
        id: "Prop-mitschann",
        title: "related pairs satisfy the annihilator and orbit inclusions",
        scope: Scope::All,
        run: claims::annihilator_orbit_inclusions,
    },
    ClaimDef {
        id: "Ex-2.8",
        title: "a pair with all four inclusions that is still unrelated",
        scope: Scope::Only(&["m2z5"]),
        run: claims::ex_2_8,
    },
    ClaimDef {
        id: "Prop-submodule-transfer",
        title: "the order lifts from direct summands and restricts to fully invariant submodules",
        scope: Scope::All,
        run: claims::submodule_transfer,
    },
    ClaimDef {
        id: "Prop-quotient-transfer",
        title: "the order descends to quotients by fully invariant submodules",
        scope: Scope::All,
        run: claims::quotient_transfer,
    },
    ClaimDef {
        id: "Cor-ring-quotient",
        title: "ring reading: the order descends to quotients by two-sided ideals",
        scope: Scope::TableScalars,
        run: claims::ring_quotient,
    },
    ClaimDef {
        id: "Prop-minussamitsch",
        title: "minus implies mitsch; on regular modules they coincide",
        scope: Scope::All,
        run: claims::minus_implies_mitsch,
    },
    ClaimDef {
        id: "Ex-3.2",
        title: "mitsch strictly exceeds minus when the dual is trivial",
        scope: Scope::Only(&["zmod12"]),
        run: claims::ex_3_2,
    },
    ClaimDef {
        id: "Prop-jonessamitsch",
        title: "jones implies mitsch",
        scope: Scope::All,
        run: claims::jones_implies_mitsch,
    },
    ClaimDef {
        id: "Ex-3.4-out-of-scope",
        title: "mitsch strictly exceeds jones (finite substitute witness)",
        scope: Scope::Only(&["zmod12"]),
        run: claims::ex_3_4_substitute,
    },
    ClaimDef {
        id: "Thm-mitschsejones",
        title: "mitsch implies jones under zero annihilators or a regular lower element",
        scope: Scope::All,
        run: claims::mitsch_implies_jones_when,
    },
    ClaimDef {
        id: "Prop-mitschseoplus",
        title: "mitsch implies the direct-sum order; converse on regular modules",
        scope: Scope::All,
        run: claims::mitsch_implies_dsum,
    },
    ClaimDef {
        id: "Ex-3.7",
        title: "a direct-sum-related pair that is not mitsch-related",
        scope: Scope::Only(&["ex3.7-z2"]),
        run: claims::ex_3_7,
    },
    ClaimDef {
        id: "Prop-mitschsespace",
        title: "mitsch implies the space pre-order",
        scope: Scope::All,
        run: claims::mitsch_implies_space,
    },
    ClaimDef {
        id: "Ex-3.9",
        title: "a space-related pair that is not mitsch-related",
        scope: Scope::Only(&["ex3.9-z8"]),
        run: claims::ex_3_9,
    },
    ClaimDef {
        id: "Prop-minussajones",
        title: "minus implies jones",
        scope: Scope::All,
        run: claims::minus_implies_jones,
    },
    ClaimDef {
        id: "Ex-3.11",
        title: "over the integers jones is reflexive while minus only relates zero to itself",
        scope: Scope::IntegerScalars,
        run: claims::ex_3_11,
    },
    ClaimDef {
        id: "Rem-4.1",
        title: "regular pairs yield idempotent scalars and idempotent endomorphisms",
        scope: Scope::All,
        run: claims::regular_pair_idempotents,
    },
    ClaimDef {
        id: "Thm-maxicin",
        title: "six consequences hold for every related pair",
        scope: Scope::All,
        run: claims::related_pair_consequences,
    },
    ClaimDef {
        id: "Thm-maxelement",
        title: "six sufficient conditions for maximality",
        scope: Scope::All,
        run: claims::sufficient_maximality,
    },
    ClaimDef {
        id: "Cor-4.4",
        title: "maximality from faithfulness, cyclic generators, and torsion-freeness",
        scope: Scope::All,
        run: claims::faithful_cyclic_torsionfree,
    },
    ClaimDef {
        id: "Rem-4.5",
        title: "the order need not form a lattice",
        scope: Scope::All,
        run: claims::lattice_failure,
    },
    ClaimDef {
        id: "Ex-4.6",
        title: "left multiplication by a non-unit can destroy relatedness",
        scope: Scope::Only(&["u2z6"]),
        run: claims::ex_4_6,
    },
    ClaimDef {
        id: "Prop-mitschinvertible",
        title: "units act as automorphisms; central and duo elements preserve the order forward",
        scope: Scope::All,
        run: claims::unit_compatibility,
    },
    ClaimDef {
        id: "Ex-4.8",
        title: "addition can destroy relatedness",
        scope: Scope::Only(&["m2z7"]),
        run: claims::ex_4_8,
    },
    ClaimDef {
        id: "Prop-integer-multiples-(1)<=>(3)",
        title: "relatedness is preserved under taking the same additive multiple of both sides",
        scope: Scope::All,
        run: claims::multiples_bidirectional,
    },
    ClaimDef {
        id: "Prop-integer-multiples-(1)=>(2)",
        title: "additive multiples of the lower element stay below the upper element",
        scope: Scope::All,
        run: claims::multiples_forward,
    },
    ClaimDef {
        id: "Prop-epi-duo",
        title: "idempotent images bound the element when its orbit is invariant or an epi image",
        scope: Scope::All,
        run: claims::invariant_epi_idempotent_bounds,
    },
    ClaimDef {
        id: "Cor-duo-epiretractable",
        title: "module-level version of the idempotent bounds",
        scope: Scope::All,
        run: claims::duo_epiretractable_bounds,
    },
    ClaimDef {
        id: "Space-pre-order-axioms",
        title: "the space relation is a pre-order and its antisymmetry failures are explicit",
        scope: Scope::All,
        run: claims::space_axioms,
    },
];

pub fn registry() -> &'static [ClaimDef] {
    REGISTRY
}

pub fn claim_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|d| d.id).collect()
}

pub fn find_claim(id: &str) -> Result<&'static ClaimDef> {
    REGISTRY
        .iter()
        .find(|d| d.id == id)
        .ok_or_else(|| Error::UnknownClaimId(id.to_string()))
}

/// Run one claim on one instance. A `CapacityExceeded` from the runner is a
/// documented outcome, not an error; anything else propagates.
pub fn run_claim(def: &ClaimDef, ctx: &Ctx) -> Result<ClaimCheck> {
    let start = Instant::now();
    let outcome = (def.run)(ctx);
    let runtime = start.elapsed();
    let (status, payload) = match outcome {
        Ok(pair) => pair,
        Err(Error::CapacityExceeded { what, size, cap }) => (
            ClaimStatus::Capacity,
            json!({ "skipped": what, "size": size, "cap": cap }),
        ),
        Err(e) => return Err(e),
    };
    Ok(ClaimCheck {
        claim_id: def.id.to_string(),
        instance: ctx.name().to_string(),
        status,
        payload,
        runtime,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub holds: usize,
    pub fails: usize,
    pub vacuous: usize,
    pub audit_findings: usize,
    pub capacity: usize,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub instances: Vec<String>,
    pub claims: Vec<String>,
    pub checks: Vec<ClaimCheck>,
    pub summary: SuiteSummary,
}

impl SuiteReport {
    /// Count of checks that represent real failures: `Fails` only. Audit
    /// findings are expected documented outcomes, capacity skips are
    /// documented refusals, and vacuous means the hypothesis never fired.
    pub fn non_audit_failures(&self) -> usize {
        self.summary.fails
    }

    pub fn to_json(&self) -> Value {
        json!({
            "format": 1,
            "instances": self.instances,
            "claims": self.claims,
            "checks": self.checks,
            "summary": self.summary,
        })
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Run the selected claims over the given instances, instance-major, claims
/// in registry order. `claim_filter = None` means the full registry.
pub fn run_suite(ctxs: &[Ctx], claim_filter: Option<&[String]>) -> Result<SuiteReport> {
    let selected: Vec<&'static ClaimDef> = match claim_filter {
        None => REGISTRY.iter().collect(),
        Some(ids) => ids.iter().map(|id| find_claim(id)).collect::<Result<Vec<_>>>()?,
    };
    let mut checks = Vec::new();
    let mut summary =
        SuiteSummary { holds: 0, fails: 0, vacuous: 0, audit_findings: 0, capacity: 0 };
    for ctx in ctxs {
        for def in &selected {
            if !def.scope.applies(ctx) {
                continue;
            }
            let check = run_claim(def, ctx)?;
            match check.status {
                ClaimStatus::Holds => summary.holds += 1,
                ClaimStatus::Fails => summary.fails += 1,
                ClaimStatus::Vacuous => summary.vacuous += 1,
                ClaimStatus::AuditFinding => summary.audit_findings += 1,
                ClaimStatus::Capacity => summary.capacity += 1,
            }
            checks.push(check);
        }
    }
    Ok(SuiteReport {
        instances: ctxs.iter().map(|c| c.name().to_string()).collect(),
        claims: selected.iter().map(|d| d.id.to_string()).collect(),
        checks,
        summary,
    })
}

/// Re-derive a `Fails` or `AuditFinding` payload from the raw deciders, so
/// findings never rest on intermediate caches. Returns `Ok(true)` when the
/// recorded violation is reproduced.
pub fn replay_check(ctx: &Ctx, check: &ClaimCheck) -> Result<bool> {
    if !matches!(check.status, ClaimStatus::Fails | ClaimStatus::AuditFinding) {
        return Err(Error::PreconditionUnmet(format!(
            "replay only covers fails/audit-finding checks, got {}",
            check.status.as_str()
        )));
    }
    let m = ctx.module();
    let homs = ctx.homs()?;
    let elt = |key: &str| -> Result<usize> {
        let name = check.payload[key]
            .as_str()
            .ok_or_else(|| Error::PreconditionUnmet(format!("payload lacks \"{key}\"")))?;
        m.index_of(name).ok_or_else(|| Error::UnknownElement(name.to_string()))
    };
    match check.claim_id.as_str() {
        "Prop-integer-multiples-(1)=>(2)" => {
            let (m1, m2) = (elt("m1")?, elt("m2")?);
            let n = check.payload["n"].as_u64().ok_or_else(|| {
                Error::PreconditionUnmet("payload lacks \"n\"".to_string())
            })? as usize;
            let mut nm1 = m.zero();
            for _ in 0..n {
                nm1 = m.add(nm1, m1);
            }
            Ok(order::mitsch_leq(m, &homs, m1, m2).is_some()
                && order::mitsch_leq(m, &homs, nm1, m2).is_none())
        }
        "Prop-epi-duo" | "Cor-duo-epiretractable" => {
            let x = elt("m")?;
            match check.payload["part"].as_u64() {
                Some(1) => {
                    let f = check.payload["f_index"].as_u64().ok_or_else(|| {
                        Error::PreconditionUnmet("payload lacks \"f_index\"".to_string())
                    })? as usize;
                    if f >= homs.len() {
                        return Err(Error::PreconditionUnmet(format!(
                            "endomorphism index {f} out of range"
                        )));
                    }
                    let fx = homs.apply(f, x);
                    Ok(homs.is_idempotent(f)
                        && order::mitsch_leq(m, &homs, fx, x).is_none())
                }
                Some(2) => {
                    let scalars = m.scalars();
                    let e = check.payload["e"]
                        .as_str()
                        .and_then(|s| scalars.index_of(s))
                        .ok_or_else(|| {
                            Error::PreconditionUnmet("payload lacks scalar \"e\"".into())
                        })?;
                    let idem = scalars.mul(e, e) == e;
                    let me = m.act(x, e);
                    Ok(idem && order::mitsch_leq(m, &homs, me, x).is_none())
                }
                _ => Err(Error::PreconditionUnmet("payload lacks \"part\"".to_string())),
            }
        }
        "Cor-4.4" => {
            let (x, succ) = (elt("m")?, elt("strict_successor")?);
            Ok(x != m.zero()
                && succ != x
                && order::mitsch_leq(m, &homs, x, succ).is_some()
                && order::mitsch_leq(m, &homs, succ, x).is_none())
        }
        other => Err(Error::PreconditionUnmet(format!(
            "no raw replay registered for claim {other}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn ctx(name: &str) -> Ctx {
        let d = catalog::builtin_catalog()
            .into_iter()
            .find(|d| d.name == name)
            .expect("known instance");
        catalog::build_instance(&d).expect("instance builds")
    }

    #[test]
    fn registry_ids_are_unique_and_resolvable() {
        let ids = claim_ids();
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len(), "duplicate claim id");
        for id in ids {
            assert_eq!(find_claim(id).unwrap().id, id);
        }
        assert!(matches!(find_claim("nope"), Err(Error::UnknownClaimId(_))));
    }

    #[test]
    fn suite_on_zmod4_has_no_hard_failures_and_one_finding() {
        let c = ctx("zmod4");
        let report = run_suite(std::slice::from_ref(&c), None).unwrap();
        assert_eq!(report.summary.fails, 0, "report: {}", report.to_json_string());
        let finding = report
            .checks
            .iter()
            .find(|ch| ch.claim_id == "Prop-integer-multiples-(1)=>(2)")
            .unwrap();
        assert_eq!(finding.status, ClaimStatus::AuditFinding);
        assert_eq!(finding.payload["m1"], "1");
        assert_eq!(finding.payload["m2"], "1");
        assert_eq!(finding.payload["n"], 2);
        assert!(replay_check(&c, finding).unwrap());
    }

    #[test]
    fn suite_reports_are_deterministic() {
        let c1 = ctx("zmod12");
        let c2 = ctx("zmod12");
        let r1 = run_suite(std::slice::from_ref(&c1), None).unwrap();
        let r2 = run_suite(std::slice::from_ref(&c2), None).unwrap();
        assert_eq!(r1.to_json_string(), r2.to_json_string());
    }

    #[test]
    fn claim_filter_validates_ids() {
        let c = ctx("zmod4");
        let err = run_suite(std::slice::from_ref(&c), Some(&["Prop-unknown".to_string()]));
        assert!(matches!(err, Err(Error::UnknownClaimId(_))));
        let ok = run_suite(
            std::slice::from_ref(&c),
            Some(&["Thm-mitsch".to_string(), "Prop-mitschann".to_string()]),
        )
        .unwrap();
        assert_eq!(ok.checks.len(), 2);
        assert_eq!(ok.summary.holds, 2);
    }
}
