//! Solving the component table for the skyscraper unknowns `(r, r24)`.

use std::collections::BTreeSet;

use super::{Fibration, Ledger, LedgerError, LinearIntExpr, Stratum};

/// One cell as `a·r + b·r24 = c`.
#[derive(Clone, Debug)]
struct Equation {
    label: String,
    a: i64,
    b: i64,
    c: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl Equation {
    fn holds(&self, r: i64, r24: i64) -> bool {
        self.a * r + self.b * r24 == self.c
    }

    /// Divided by the content and with a positive leading coefficient.
    fn normalized(&self) -> (i64, i64, i64) {
        let g = gcd(gcd(self.a, self.b), self.c).max(1);
        let s = if self.a < 0 || (self.a == 0 && self.b < 0) {
            -1
        } else {
            1
        };
        (s * self.a / g, s * self.b / g, s * self.c / g)
    }

    fn describe(&self) -> String {
        let (a, b, c) = self.normalized();
        format!("{}: {} = {c}", self.label, LinearIntExpr::new(0, a, b))
    }
}

/// Every nonnegative integer pair `(r, r24)` for which each computed rank
/// (all three fibrations, the `M` row through the resolution relation)
/// equals the component table.
///
/// An empty solution set is an error: it means the fixture contradicts
/// itself, and the hint names the first pair of cells that disagree.
pub fn solve_unknowns(ledger: &Ledger) -> Result<BTreeSet<(i64, i64)>, LedgerError> {
    let mut equations = Vec::new();
    // The string targets first, so conflicts are reported between them.
    for fibration in [Fibration::Mtilde, Fibration::N, Fibration::M] {
        for stratum in Stratum::ALL {
            let e = ledger.computed_rank(fibration, stratum);
            let table = ledger.component_count(fibration, stratum);
            let eq = Equation {
                label: format!("{fibration}/{stratum}"),
                a: e.coeff_r,
                b: e.coeff_r24,
                c: table - e.constant,
            };
            if eq.a == 0 && eq.b == 0 {
                if eq.c != 0 {
                    return Err(LedgerError::Inconsistent {
                        hint: format!("{}: computed {}, table {table}", eq.label, e.constant),
                    });
                }
            } else {
                equations.push(eq);
            }
        }
    }
    let Some(pivot) = equations.first() else {
        return Err(LedgerError::Underdetermined("no cell involves r or r24".into()));
    };

    let mut point = None;
    for eq in &equations[1..] {
        let det = pivot.a * eq.b - eq.a * pivot.b;
        if det != 0 {
            point.get_or_insert((eq, det));
        } else if pivot.a * eq.c != eq.a * pivot.c || pivot.b * eq.c != eq.b * pivot.c {
            return Err(contradiction(pivot, eq));
        }
    }

    let solutions: BTreeSet<(i64, i64)> = match point {
        Some((eq, det)) => {
            let r_num = pivot.c * eq.b - eq.c * pivot.b;
            let r24_num = pivot.a * eq.c - eq.a * pivot.c;
            if r_num % det != 0 || r24_num % det != 0 {
                return Err(contradiction(pivot, eq));
            }
            let (r, r24) = (r_num / det, r24_num / det);
            if let Some(bad) = equations.iter().find(|e| !e.holds(r, r24)) {
                return Err(LedgerError::Inconsistent {
                    hint: format!(
                        "{} fails at (r, r24) = ({r}, {r24}) forced by {} and {}",
                        bad.describe(),
                        pivot.label,
                        eq.label
                    ),
                });
            }
            [(r, r24)].into_iter().filter(|&(r, r24)| r >= 0 && r24 >= 0).collect()
        }
        None => {
            let (a, b, c) = pivot.normalized();
            if a == 0 || b == 0 || b < 0 {
                return Err(LedgerError::Underdetermined(format!(
                    "only the constraint {} remains, with infinitely many solutions",
                    pivot.describe()
                )));
            }
            if c < 0 {
                return Err(LedgerError::Inconsistent {
                    hint: format!("no nonnegative integer solution of {}", pivot.describe()),
                });
            }
            (0..=c / a)
                .filter(|r| (c - a * r) % b == 0)
                .map(|r| (r, (c - a * r) / b))
                .collect()
        }
    };
    if solutions.is_empty() {
        return Err(LedgerError::Inconsistent {
            hint: format!("no nonnegative integer solution of {}", pivot.describe()),
        });
    }
    Ok(solutions)
}

fn contradiction(pivot: &Equation, other: &Equation) -> LedgerError {
    let (a, b, c) = pivot.normalized();
    LedgerError::Inconsistent {
        hint: format!(
            "{}: {} = {c} contradicts {}",
            pivot.label,
            LinearIntExpr::new(0, a, b),
            other.describe()
        ),
    }
}
