//! `ledger/v1` documents and their validation.

use std::collections::{BTreeMap, BTreeSet};

use serde::Deserialize;

use super::{
    closure_of, Fibration, IncidenceData, Ledger, LedgerError, LinearIntExpr, StalkEntry, Stratum, StratumInfo,
    StringKind, StringTarget,
};

pub const LEDGER_FORMAT: &str = "ledger/v1";

const BUILTIN: &str = include_str!("../../data/ledger.json");

pub fn builtin_fixture_json() -> &'static str {
    BUILTIN
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLedger {
    format: String,
    strata: Vec<RawStratum>,
    incidence: IncidenceData,
    stalks: Vec<RawStalk>,
    components: Vec<RawComponents>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawStratum {
    name: Stratum,
    dim: i64,
    #[serde(default)]
    count: Option<i64>,
    #[serde(default)]
    specializes_to: Vec<Stratum>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawStalk {
    fibration: StringTarget,
    string: StringKind,
    stratum: Stratum,
    rank: LinearIntExpr,
    #[serde(default)]
    invariant: Option<LinearIntExpr>,
    cite: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComponents {
    fibration: Fibration,
    counts: BTreeMap<Stratum, i64>,
}

fn invalid(msg: impl Into<String>) -> LedgerError {
    LedgerError::FixtureInvalid(msg.into())
}

fn choose2(n: i64) -> i64 {
    n * (n - 1) / 2
}

pub(super) fn parse(text: &str) -> Result<Ledger, LedgerError> {
    let raw: RawLedger = serde_json::from_str(text).map_err(|e| invalid(e.to_string()))?;
    if raw.format != LEDGER_FORMAT {
        return Err(invalid(format!(
            "format is '{}', expected '{LEDGER_FORMAT}'",
            raw.format
        )));
    }
    let strata = check_strata(raw.strata)?;
    check_incidence(&raw.incidence)?;
    let stalks = check_stalks(&strata, raw.stalks)?;
    let components = check_components(raw.components)?;
    Ok(Ledger {
        strata,
        incidence: raw.incidence,
        stalks,
        components,
    })
}

fn check_strata(raw: Vec<RawStratum>) -> Result<BTreeMap<Stratum, StratumInfo>, LedgerError> {
    let mut strata = BTreeMap::new();
    for s in raw {
        if s.dim != s.name.dim() {
            return Err(invalid(format!(
                "stratum {} has dim {}, expected {}",
                s.name,
                s.dim,
                s.name.dim()
            )));
        }
        match (s.count, s.name.count()) {
            (Some(got), Some(want)) if got != want => {
                return Err(invalid(format!("|{}| = {got}, expected {want}", s.name)));
            }
            (None, Some(want)) => return Err(invalid(format!("stratum {} needs count {want}", s.name))),
            (Some(_), None) => return Err(invalid(format!("stratum {} is not finite and takes no count", s.name))),
            _ => {}
        }
        let info = StratumInfo {
            dim: s.dim,
            count: s.count,
            specializes_to: s.specializes_to.into_iter().collect(),
        };
        if strata.insert(s.name, info).is_some() {
            return Err(invalid(format!("stratum {} listed twice", s.name)));
        }
    }
    if let Some(missing) = Stratum::ALL.into_iter().find(|s| !strata.contains_key(s)) {
        return Err(invalid(format!("missing stratum {missing}")));
    }
    let edges: BTreeSet<(Stratum, Stratum)> = strata
        .iter()
        .flat_map(|(a, info)| info.specializes_to.iter().map(move |b| (*a, *b)))
        .collect();
    let expected: BTreeSet<(Stratum, Stratum)> = Stratum::EDGES.into_iter().collect();
    if edges != expected {
        let extra: Vec<String> = edges.difference(&expected).map(|(a, b)| format!("{a}->{b}")).collect();
        let absent: Vec<String> = expected.difference(&edges).map(|(a, b)| format!("{a}->{b}")).collect();
        return Err(invalid(format!(
            "specialization edges differ from the stratification poset (unexpected: [{}], missing: [{}])",
            extra.join(", "),
            absent.join(", ")
        )));
    }
    Ok(strata)
}

fn check_incidence(inc: &IncidenceData) -> Result<(), LedgerError> {
    let want = [
        ("lines_total", inc.lines_total, choose2(16)),
        ("lines_through_NR_point", inc.lines_through_nr_point, choose2(6)),
        ("lines_through_N3_point", inc.lines_through_n3_point, 3),
    ];
    for (name, got, expected) in want {
        if got != expected {
            return Err(invalid(format!("incidence {name} = {got}, expected {expected}")));
        }
    }
    Ok(())
}

type StalkMap = BTreeMap<(StringTarget, StringKind, Stratum), StalkEntry>;

fn check_stalks(strata: &BTreeMap<Stratum, StratumInfo>, raw: Vec<RawStalk>) -> Result<StalkMap, LedgerError> {
    let mut stalks = BTreeMap::new();
    for s in raw {
        let where_ = format!("stalk {}/{}/{}", s.fibration, s.string, s.stratum);
        if !s.fibration.strings().contains(&s.string) {
            return Err(invalid(format!("{where_}: string does not occur for this fibration")));
        }
        if !closure_of(strata, s.string.support_generic()).contains(&s.stratum) {
            return Err(invalid(format!("{where_}: stratum is outside the support")));
        }
        if s.cite.trim().is_empty() {
            return Err(invalid(format!("{where_}: empty cite")));
        }
        if !s.rank.has_nonnegative_coefficients() {
            return Err(invalid(format!("{where_}: negative rank {}", s.rank)));
        }
        let invariant = match s.invariant {
            None => s.rank,
            Some(inv) => {
                if strata[&s.stratum].dim == 0 {
                    return Err(invalid(format!("{where_}: monodromy on a finite stratum")));
                }
                if !inv.has_nonnegative_coefficients() || !(s.rank - inv).has_nonnegative_coefficients() {
                    return Err(invalid(format!(
                        "{where_}: invariant rank {inv} not within 0..={}",
                        s.rank
                    )));
                }
                inv
            }
        };
        let entry = StalkEntry {
            rank: s.rank,
            invariant,
            cite: s.cite,
        };
        if stalks.insert((s.fibration, s.string, s.stratum), entry).is_some() {
            return Err(invalid(format!("{where_}: listed twice")));
        }
    }
    for target in StringTarget::ALL {
        for kind in target.strings() {
            for stratum in closure_of(strata, kind.support_generic()) {
                if !stalks.contains_key(&(target, kind, stratum)) {
                    return Err(invalid(format!("missing stalk {target}/{kind}/{stratum}")));
                }
            }
        }
    }
    Ok(stalks)
}

fn check_components(raw: Vec<RawComponents>) -> Result<BTreeMap<(Fibration, Stratum), i64>, LedgerError> {
    let mut components = BTreeMap::new();
    let mut seen = BTreeSet::new();
    for row in raw {
        if !seen.insert(row.fibration) {
            return Err(invalid(format!("component row {} listed twice", row.fibration)));
        }
        for stratum in Stratum::ALL {
            let Some(&n) = row.counts.get(&stratum) else {
                return Err(invalid(format!(
                    "component row {} is missing stratum {stratum}",
                    row.fibration
                )));
            };
            if n < 1 {
                return Err(invalid(format!(
                    "component count {}/{stratum} = {n} is not positive",
                    row.fibration
                )));
            }
            components.insert((row.fibration, stratum), n);
        }
    }
    if let Some(missing) = Fibration::ALL.into_iter().find(|f| !seen.contains(f)) {
        return Err(invalid(format!("missing component row {missing}")));
    }
    // Contracting curves in the resolution can only merge components.
    for stratum in Stratum::ALL {
        let (m, mt) = (
            components[&(Fibration::M, stratum)],
            components[&(Fibration::Mtilde, stratum)],
        );
        if m > mt {
            return Err(invalid(format!(
                "component count M/{stratum} = {m} exceeds Mtilde/{stratum} = {mt}"
            )));
        }
    }
    Ok(components)
}
