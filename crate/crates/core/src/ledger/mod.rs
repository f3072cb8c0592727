//! Stalk ledger for the two Lagrangian fibrations `M̃ → B` and `N → B`
//! over `B = |2θ| ≅ P³`.
//!
//! The ledger records the stratification of `B`, how many lines `N_pq`
//! pass through a point of each stratum, the degree-6 stalk rank of every
//! string on every stratum, and the number of irreducible components of the
//! fibers of `M̃`, `M` and `N`. Since the top direct image `R⁶` of a flat
//! map with reduced fibers is the linearization of the sheaf of fiber
//! components, summing stalk ranks must reproduce the component table. The
//! two unknown skyscraper multiplicities over `NR` enter linearly, so every
//! cell is a [`LinearIntExpr`] and the table pins them down.

mod fixture;
mod linear;
mod solve;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::report::VerificationReport;

pub use fixture::{builtin_fixture_json, LEDGER_FORMAT};
pub use linear::LinearIntExpr;
pub use solve::solve_unknowns;

#[derive(Debug, Error)]
pub enum LedgerError {
    #[error("invalid ledger fixture: {0}")]
    FixtureInvalid(String),
    #[error("inconsistent ledger: {hint}")]
    Inconsistent { hint: String },
    #[error("underdetermined ledger: {0}")]
    Underdetermined(String),
    #[error("cannot read ledger fixture {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// Strata of `|2θ|` by singularity type of the curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Stratum {
    /// smooth curves
    S,
    /// irreducible, nodal at one 2-torsion point
    N1,
    /// irreducible, nodal at two 2-torsion points
    N2,
    /// irreducible, nodal at three 2-torsion points
    N3,
    /// `θ_x + θ_{-x}` with two singular points
    R1,
    /// `θ_x + θ_{-x}` with one singular point, at a 2-torsion point
    R2,
    /// non-reduced curves `2θ_p`
    NR,
}

impl Stratum {
    pub const ALL: [Stratum; 7] = [
        Stratum::S,
        Stratum::N1,
        Stratum::N2,
        Stratum::N3,
        Stratum::R1,
        Stratum::R2,
        Stratum::NR,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Stratum::S => "S",
            Stratum::N1 => "N1",
            Stratum::N2 => "N2",
            Stratum::N3 => "N3",
            Stratum::R1 => "R1",
            Stratum::R2 => "R2",
            Stratum::NR => "NR",
        }
    }

    /// Expected dimension.
    pub fn dim(self) -> i64 {
        match self {
            Stratum::S => 3,
            Stratum::N1 | Stratum::R1 => 2,
            Stratum::N2 | Stratum::R2 => 1,
            Stratum::N3 | Stratum::NR => 0,
        }
    }

    /// Expected number of points, for the finite strata.
    pub fn count(self) -> Option<i64> {
        match self {
            Stratum::N3 => Some(240),
            Stratum::NR => Some(16),
            _ => None,
        }
    }

    /// Immediate specializations: `(a, b)` means `a` lies in the closure of `b`.
    pub const EDGES: [(Stratum, Stratum); 7] = [
        (Stratum::NR, Stratum::R2),
        (Stratum::R2, Stratum::R1),
        (Stratum::R1, Stratum::S),
        (Stratum::N3, Stratum::N2),
        (Stratum::N2, Stratum::N1),
        (Stratum::N1, Stratum::S),
        (Stratum::NR, Stratum::N2),
    ];
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Fibration {
    Mtilde,
    M,
    N,
}

impl Fibration {
    pub const ALL: [Fibration; 3] = [Fibration::Mtilde, Fibration::M, Fibration::N];

    pub fn as_str(self) -> &'static str {
        match self {
            Fibration::Mtilde => "Mtilde",
            Fibration::M => "M",
            Fibration::N => "N",
        }
    }
}

impl fmt::Display for Fibration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The fibrations whose decomposition is written as a sum of strings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum StringTarget {
    Mtilde,
    N,
}

impl StringTarget {
    pub const ALL: [StringTarget; 2] = [StringTarget::Mtilde, StringTarget::N];

    pub fn strings(self) -> [StringKind; 4] {
        match self {
            StringTarget::Mtilde => [
                StringKind::IB,
                StringKind::IRPlus,
                StringKind::INpqPlus,
                StringKind::SkyNR,
            ],
            StringTarget::N => [
                StringKind::IB,
                StringKind::IRMinus,
                StringKind::INpqMinus,
                StringKind::SkyNR,
            ],
        }
    }
}

impl fmt::Display for StringTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(Fibration::from(*self).as_str())
    }
}

impl From<StringTarget> for Fibration {
    fn from(t: StringTarget) -> Fibration {
        match t {
            StringTarget::Mtilde => Fibration::Mtilde,
            StringTarget::N => Fibration::N,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum StringKind {
    #[serde(rename = "I_B")]
    IB,
    #[serde(rename = "IR_plus")]
    IRPlus,
    #[serde(rename = "IR_minus")]
    IRMinus,
    #[serde(rename = "INpq_plus")]
    INpqPlus,
    #[serde(rename = "INpq_minus")]
    INpqMinus,
    #[serde(rename = "Sky_NR")]
    SkyNR,
}

impl StringKind {
    pub fn as_str(self) -> &'static str {
        match self {
            StringKind::IB => "I_B",
            StringKind::IRPlus => "IR_plus",
            StringKind::IRMinus => "IR_minus",
            StringKind::INpqPlus => "INpq_plus",
            StringKind::INpqMinus => "INpq_minus",
            StringKind::SkyNR => "Sky_NR",
        }
    }

    /// The generic stratum of the support; the support is its closure.
    pub fn support_generic(self) -> Stratum {
        match self {
            StringKind::IB => Stratum::S,
            StringKind::IRPlus | StringKind::IRMinus => Stratum::R1,
            StringKind::INpqPlus | StringKind::INpqMinus => Stratum::N2,
            StringKind::SkyNR => Stratum::NR,
        }
    }
}

impl fmt::Display for StringKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IncidenceData {
    /// Number of lines `N_pq`, one per pair of 2-torsion points.
    pub lines_total: i64,
    /// Lines `N_pq` through a point of `NR`: pairs among its six 2-torsion points.
    #[serde(rename = "lines_through_NR_point")]
    pub lines_through_nr_point: i64,
    /// Lines `N_pq` through a point of `N3`: pairs among its three nodes.
    #[serde(rename = "lines_through_N3_point")]
    pub lines_through_n3_point: i64,
}

/// Degree-6 stalk of one string on one stratum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StalkEntry {
    pub rank: LinearIntExpr,
    /// Rank of the monodromy invariants; equals `rank` for trivial monodromy.
    pub invariant: LinearIntExpr,
    pub cite: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumInfo {
    pub dim: i64,
    pub count: Option<i64>,
    pub specializes_to: BTreeSet<Stratum>,
}

/// Over each point of `NR`, the symplectic resolution `M̃ → M` has 16
/// isolated exceptional fibers (256 points in all), contributing
/// `Q^16⟨3⟩` to the decomposition of `M̃` but nothing to that of `M`.
pub const RESOLUTION_POINTS_PER_NR_POINT: i64 = 16;

/// A validated ledger. Immutable after load.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ledger {
    strata: BTreeMap<Stratum, StratumInfo>,
    incidence: IncidenceData,
    stalks: BTreeMap<(StringTarget, StringKind, Stratum), StalkEntry>,
    components: BTreeMap<(Fibration, Stratum), i64>,
}

impl Ledger {
    /// The ledger shipped with the crate.
    pub fn builtin() -> Ledger {
        Ledger::from_json(builtin_fixture_json()).expect("built-in ledger fixture is valid")
    }

    pub fn from_json(text: &str) -> Result<Ledger, LedgerError> {
        fixture::parse(text)
    }

    pub fn load(path: &Path) -> Result<Ledger, LedgerError> {
        let text = std::fs::read_to_string(path).map_err(|source| LedgerError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Ledger::from_json(&text)
    }

    pub fn strata(&self) -> &BTreeMap<Stratum, StratumInfo> {
        &self.strata
    }

    pub fn incidence(&self) -> IncidenceData {
        self.incidence
    }

    pub fn stalk(&self, target: StringTarget, kind: StringKind, stratum: Stratum) -> Option<&StalkEntry> {
        self.stalks.get(&(target, kind, stratum))
    }

    pub fn component_count(&self, fibration: Fibration, stratum: Stratum) -> i64 {
        self.components[&(fibration, stratum)]
    }

    /// Strata lying in the closure of `generic` (including itself).
    pub fn closure(&self, generic: Stratum) -> BTreeSet<Stratum> {
        closure_of(&self.strata, generic)
    }

    /// How many copies of the string's support pass through a point of
    /// `stratum`: lines `N_pq` for the `N_pq` strings, one otherwise, zero
    /// off the support.
    pub fn incidence_multiplicity(&self, kind: StringKind, stratum: Stratum) -> i64 {
        if !self.closure(kind.support_generic()).contains(&stratum) {
            return 0;
        }
        match (kind, stratum) {
            (StringKind::INpqPlus | StringKind::INpqMinus, Stratum::N3) => self.incidence.lines_through_n3_point,
            (StringKind::INpqPlus | StringKind::INpqMinus, Stratum::NR) => self.incidence.lines_through_nr_point,
            _ => 1,
        }
    }

    fn weighted_sum(
        &self,
        target: StringTarget,
        stratum: Stratum,
        pick: impl Fn(&StalkEntry) -> LinearIntExpr,
    ) -> LinearIntExpr {
        target
            .strings()
            .into_iter()
            .filter_map(|kind| {
                self.stalk(target, kind, stratum)
                    .map(|e| pick(e) * self.incidence_multiplicity(kind, stratum))
            })
            .sum()
    }

    /// Rank of `R⁶` on `stratum`: stalk ranks of all strings weighted by
    /// incidence multiplicity.
    pub fn r6_rank(&self, target: StringTarget, stratum: Stratum) -> LinearIntExpr {
        self.weighted_sum(target, stratum, |e| e.rank)
    }

    /// Rank of the monodromy-invariant part of `R⁶` on `stratum`.
    pub fn r6_invariant_rank(&self, target: StringTarget, stratum: Stratum) -> LinearIntExpr {
        self.weighted_sum(target, stratum, |e| e.invariant)
    }

    /// Rank of `R⁶` for the singular space `M`, which is not a string
    /// target: `M̃` minus the summands of the symplectic resolution, i.e.
    /// `I_R^+⟨1⟩` on `R` and the isolated points over `NR`.
    pub fn resolution_rank(&self, stratum: Stratum) -> LinearIntExpr {
        let mut expr = self.r6_rank(StringTarget::Mtilde, stratum);
        if let Some(e) = self.stalk(StringTarget::Mtilde, StringKind::IRPlus, stratum) {
            expr = expr - e.rank * self.incidence_multiplicity(StringKind::IRPlus, stratum);
        }
        if stratum == Stratum::NR {
            expr = expr - LinearIntExpr::constant(RESOLUTION_POINTS_PER_NR_POINT);
        }
        expr
    }

    /// Computed degree-6 rank for any of the three fibrations.
    pub fn computed_rank(&self, fibration: Fibration, stratum: Stratum) -> LinearIntExpr {
        match fibration {
            Fibration::Mtilde => self.r6_rank(StringTarget::Mtilde, stratum),
            Fibration::N => self.r6_rank(StringTarget::N, stratum),
            Fibration::M => self.resolution_rank(stratum),
        }
    }

    /// Checks every `(fibration, stratum)` cell against the component table
    /// under the constraint `r + r24 = 1`, i.e. for both `(0, 1)` and `(1, 0)`.
    pub fn verify_component_table(&self) -> ComponentReport {
        let mut cells = Vec::new();
        for fibration in Fibration::ALL {
            for stratum in Stratum::ALL {
                let computed = self.computed_rank(fibration, stratum);
                let table = self.component_count(fibration, stratum);
                let pass = [(0, 1), (1, 0)].iter().all(|&(r, r24)| computed.eval(r, r24) == table);
                let invariant = match fibration {
                    Fibration::Mtilde | Fibration::N if self.strata[&stratum].dim > 0 => {
                        let target = if fibration == Fibration::N {
                            StringTarget::N
                        } else {
                            StringTarget::Mtilde
                        };
                        Some(self.r6_invariant_rank(target, stratum))
                    }
                    _ => None,
                };
                cells.push(CellCheck {
                    fibration,
                    stratum,
                    computed,
                    invariant,
                    table,
                    pass,
                });
            }
        }
        ComponentReport { cells }
    }
}

pub(crate) fn closure_of(strata: &BTreeMap<Stratum, StratumInfo>, generic: Stratum) -> BTreeSet<Stratum> {
    let mut out = BTreeSet::from([generic]);
    loop {
        let before = out.len();
        for (s, info) in strata {
            if info.specializes_to.iter().any(|t| out.contains(t)) {
                out.insert(*s);
            }
        }
        if out.len() == before {
            return out;
        }
    }
}

/// One cell of the component-table verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellCheck {
    pub fibration: Fibration,
    pub stratum: Stratum,
    pub computed: LinearIntExpr,
    /// Invariant rank under local monodromy, for string targets over
    /// positive-dimensional strata.
    pub invariant: Option<LinearIntExpr>,
    pub table: i64,
    pub pass: bool,
}

impl CellCheck {
    pub fn id(&self) -> String {
        format!("ledger.{}.{}", self.fibration, self.stratum)
    }

    /// `R⁶` on this stratum as trivial ⊕ nontrivial rank-one pieces, e.g.
    /// `Q ⊕ L`, evaluated at `r + r24 = 1`. `None` on finite strata and
    /// for `M`.
    pub fn monodromy(&self) -> Option<String> {
        let invariant = self.invariant?;
        // Positive-dimensional strata never carry r or r24.
        let total = self.computed.eval(0, 1);
        let trivial = invariant.eval(0, 1);
        let nontrivial = total - trivial;
        let piece = |name: &str, k: i64| match k {
            0 => None,
            1 => Some(name.to_string()),
            k => Some(format!("{name}^{k}")),
        };
        let parts: Vec<String> = [piece("Q", trivial), piece("L", nontrivial)]
            .into_iter()
            .flatten()
            .collect();
        Some(if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" ⊕ ")
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentReport {
    pub cells: Vec<CellCheck>,
}

impl ComponentReport {
    pub fn all_passed(&self) -> bool {
        self.cells.iter().all(|c| c.pass)
    }

    pub fn passed_count(&self) -> usize {
        self.cells.iter().filter(|c| c.pass).count()
    }

    pub fn cell(&self, fibration: Fibration, stratum: Stratum) -> Option<&CellCheck> {
        self.cells
            .iter()
            .find(|c| c.fibration == fibration && c.stratum == stratum)
    }

    pub fn to_verification_report(&self) -> VerificationReport {
        let mut report = VerificationReport::new();
        for c in &self.cells {
            report.record(c.id(), c.pass, c.computed.to_string(), c.table);
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_loads() {
        let ledger = Ledger::builtin();
        assert_eq!(ledger.strata().len(), 7);
        assert_eq!(ledger.incidence().lines_total, 120);
    }

    #[test]
    fn closures_follow_the_poset() {
        let ledger = Ledger::builtin();
        let r_row: Vec<_> = ledger.closure(Stratum::R1).into_iter().collect();
        assert_eq!(r_row, vec![Stratum::R1, Stratum::R2, Stratum::NR]);
        let npq: Vec<_> = ledger.closure(Stratum::N2).into_iter().collect();
        assert_eq!(npq, vec![Stratum::N2, Stratum::N3, Stratum::NR]);
        assert_eq!(ledger.closure(Stratum::S).len(), 7);
    }

    #[test]
    fn r6_rank_examples() {
        let ledger = Ledger::builtin();
        assert_eq!(
            ledger.r6_rank(StringTarget::Mtilde, Stratum::NR),
            LinearIntExpr::new(33, 1, 1)
        );
        assert_eq!(ledger.r6_rank(StringTarget::N, Stratum::N3), LinearIntExpr::constant(4));
        assert_eq!(ledger.component_count(Fibration::N, Stratum::N3), 4);
        assert_eq!(
            ledger.r6_rank(StringTarget::Mtilde, Stratum::S),
            LinearIntExpr::constant(1)
        );
        assert_eq!(
            ledger.r6_rank(StringTarget::N, Stratum::NR),
            LinearIntExpr::new(1, 1, 1)
        );
        for target in StringTarget::ALL {
            for s in [Stratum::S, Stratum::N1] {
                assert_eq!(ledger.r6_rank(target, s), LinearIntExpr::constant(1));
            }
        }
        assert_eq!(ledger.resolution_rank(Stratum::NR), LinearIntExpr::new(16, 1, 1));
        assert_eq!(ledger.resolution_rank(Stratum::R1), LinearIntExpr::constant(1));
    }

    #[test]
    fn component_table_verifies() {
        let report = Ledger::builtin().verify_component_table();
        assert_eq!(report.cells.len(), 21);
        assert!(report.all_passed());
        let c = report.cell(Fibration::Mtilde, Stratum::N2).unwrap();
        assert_eq!(c.computed, LinearIntExpr::constant(2));
        let c = report.cell(Fibration::N, Stratum::R1).unwrap();
        assert_eq!(c.computed.eval(0, 1), 2);
        assert_eq!(c.monodromy().as_deref(), Some("Q ⊕ L"));
        let c = report.cell(Fibration::N, Stratum::N2).unwrap();
        assert_eq!(c.monodromy().as_deref(), Some("Q ⊕ L"));
        let c = report.cell(Fibration::Mtilde, Stratum::R1).unwrap();
        assert_eq!(c.monodromy().as_deref(), Some("Q^2"));
        let c = report.cell(Fibration::Mtilde, Stratum::S).unwrap();
        assert_eq!(c.monodromy().as_deref(), Some("Q"));
        assert_eq!(report.cell(Fibration::N, Stratum::NR).unwrap().monodromy(), None);
        assert_eq!(report.cell(Fibration::M, Stratum::R1).unwrap().monodromy(), None);
        let vr = report.to_verification_report();
        assert_eq!(vr.checks.len(), 21);
        assert!(vr.all_passed());
    }
}
