use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Cell, HodgeClass};

/// Betti numbers, Euler characteristic and signed E-polynomial of a class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Numerics {
    /// Nonzero Betti numbers by degree.
    pub betti: BTreeMap<i32, BigInt>,
    pub euler: BigInt,
    /// `Σ_n (-1)^n m(n, p, q)`, nonzero coefficients only.
    pub e_polynomial: BTreeMap<(i32, i32), BigInt>,
}

impl Numerics {
    /// Betti numbers as a dense vector over the degrees
    /// `min(0, lowest)..=max(0, highest)`. Empty for the zero class.
    pub fn betti_vector(&self) -> Vec<BigInt> {
        let (Some(lo), Some(hi)) = (self.betti.keys().next(), self.betti.keys().next_back()) else {
            return Vec::new();
        };
        (std::cmp::min(0, *lo)..=std::cmp::max(0, *hi))
            .map(|n| self.betti.get(&n).cloned().unwrap_or_default())
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    /// `m(n, p, q) = m(2d - n, d - p, d - q)` everywhere.
    pub poincare: bool,
    /// `m(n, p, q) = m(n, q, p)` everywhere.
    pub hodge: bool,
}

fn sign(n: i32) -> i32 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

impl HodgeClass {
    pub fn numerics(&self) -> Numerics {
        let mut betti: BTreeMap<i32, BigInt> = BTreeMap::new();
        let mut e_polynomial: BTreeMap<(i32, i32), BigInt> = BTreeMap::new();
        let mut euler = BigInt::zero();
        for (c, m) in self.iter() {
            *betti.entry(c.degree).or_default() += m;
            let signed = m * sign(c.degree);
            euler += &signed;
            *e_polynomial.entry((c.p, c.q)).or_default() += signed;
        }
        betti.retain(|_, v| !v.is_zero());
        e_polynomial.retain(|_, v| !v.is_zero());
        Numerics {
            betti,
            euler,
            e_polynomial,
        }
    }

    pub fn euler(&self) -> BigInt {
        self.iter().map(|(c, m)| m * sign(c.degree)).sum()
    }

    pub fn betti_vector(&self) -> Vec<BigInt> {
        self.numerics().betti_vector()
    }

    /// Poincaré duality about real dimension `2d` and Hodge symmetry.
    pub fn symmetry_checks(&self, d: i32) -> SymmetryReport {
        let poincare = self
            .iter()
            .all(|(c, m)| self.multiplicity(Cell::new(2 * d - c.degree, d - c.p, d - c.q)) == *m);
        let hodge = self
            .iter()
            .all(|(c, m)| self.multiplicity(Cell::new(c.degree, c.q, c.p)) == *m);
        SymmetryReport { poincare, hodge }
    }
}
