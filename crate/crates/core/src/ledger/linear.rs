use std::fmt;
use std::ops::{Add, AddAssign, Mul, Sub};

use serde::{Deserialize, Serialize};

/// `constant + r·coeff_r + r24·coeff_r24`, exact over the integers.
///
/// `r` is the skyscraper multiplicity over `NR` in the decomposition for
/// `N`; `r24` is the rank of the skyscraper part of the degree-6 cohomology
/// sheaf of the string over the whole base.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinearIntExpr {
    #[serde(rename = "const", default)]
    pub constant: i64,
    #[serde(rename = "r", default)]
    pub coeff_r: i64,
    #[serde(rename = "r24", default)]
    pub coeff_r24: i64,
}

impl LinearIntExpr {
    pub const ZERO: LinearIntExpr = LinearIntExpr::new(0, 0, 0);
    pub const R: LinearIntExpr = LinearIntExpr::new(0, 1, 0);
    pub const R24: LinearIntExpr = LinearIntExpr::new(0, 0, 1);

    pub const fn new(constant: i64, coeff_r: i64, coeff_r24: i64) -> Self {
        LinearIntExpr {
            constant,
            coeff_r,
            coeff_r24,
        }
    }

    pub const fn constant(c: i64) -> Self {
        LinearIntExpr::new(c, 0, 0)
    }

    pub fn eval(&self, r: i64, r24: i64) -> i64 {
        self.constant + self.coeff_r * r + self.coeff_r24 * r24
    }

    pub fn is_constant(&self) -> bool {
        self.coeff_r == 0 && self.coeff_r24 == 0
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.constant >= 0 && self.coeff_r >= 0 && self.coeff_r24 >= 0
    }
}

impl Add for LinearIntExpr {
    type Output = LinearIntExpr;
    fn add(self, o: LinearIntExpr) -> LinearIntExpr {
        LinearIntExpr::new(
            self.constant + o.constant,
            self.coeff_r + o.coeff_r,
            self.coeff_r24 + o.coeff_r24,
        )
    }
}

impl AddAssign for LinearIntExpr {
    fn add_assign(&mut self, o: LinearIntExpr) {
        *self = *self + o;
    }
}

impl Sub for LinearIntExpr {
    type Output = LinearIntExpr;
    fn sub(self, o: LinearIntExpr) -> LinearIntExpr {
        self + o * -1
    }
}

impl Mul<i64> for LinearIntExpr {
    type Output = LinearIntExpr;
    fn mul(self, k: i64) -> LinearIntExpr {
        LinearIntExpr::new(self.constant * k, self.coeff_r * k, self.coeff_r24 * k)
    }
}

impl std::iter::Sum for LinearIntExpr {
    fn sum<I: Iterator<Item = LinearIntExpr>>(iter: I) -> Self {
        iter.fold(LinearIntExpr::ZERO, Add::add)
    }
}

/// Renders as e.g. `33 + r + r24`, `1 - r24`, `2r`.
impl fmt::Display for LinearIntExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        if self.constant != 0 || self.is_constant() {
            write!(f, "{}", self.constant)?;
            wrote = true;
        }
        for (coeff, name) in [(self.coeff_r, "r"), (self.coeff_r24, "r24")] {
            if coeff == 0 {
                continue;
            }
            let magnitude = coeff.unsigned_abs();
            match (wrote, coeff < 0) {
                (false, false) => {}
                (false, true) => f.write_str("-")?,
                (true, false) => f.write_str(" + ")?,
                (true, true) => f.write_str(" - ")?,
            }
            if magnitude != 1 {
                write!(f, "{magnitude}")?;
            }
            f.write_str(name)?;
            wrote = true;
        }
        Ok(())
    }
}
