//! Exact arithmetic on bigraded Hodge classes.
//!
//! A [`HodgeClass`] is an element of the Grothendieck group of graded pure
//! Hodge structures, stored as a sparse table from a [`Cell`] (cohomological
//! degree `n` and Hodge type `(p, q)`) to an integer multiplicity. Virtual
//! classes with negative multiplicities are allowed everywhere except in the
//! graded symmetric and exterior powers.
//!
//! Weights follow the geometric normalization: `H^n` of a smooth projective
//! variety sits at `p + q = n`, the Tate twist `(k)` moves `(p, q)` to
//! `(p - k, q - k)`, and `⟨k⟩ = [-2k](-k)` is [`HodgeClass::angle`].

mod json;
mod numerics;
mod powers;

use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub(crate) use json::int_value;
pub use json::FormatError;
pub use numerics::{Numerics, SymmetryReport};

/// Cohomological degree together with a Hodge type.
///
/// Ordering is lexicographic in `(degree, p, q)`, which is the canonical
/// iteration order of a [`HodgeClass`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub degree: i32,
    pub p: i32,
    pub q: i32,
}

impl Cell {
    pub const fn new(degree: i32, p: i32, q: i32) -> Self {
        Cell { degree, p, q }
    }

    /// Componentwise sum; the cell of a tensor product of generators.
    pub const fn plus(self, other: Cell) -> Cell {
        Cell::new(self.degree + other.degree, self.p + other.p, self.q + other.q)
    }

    pub const fn times(self, k: i32) -> Cell {
        Cell::new(self.degree * k, self.p * k, self.q * k)
    }

    pub const fn is_odd(self) -> bool {
        self.degree.rem_euclid(2) == 1
    }

    pub const fn has_weight_parity(self) -> bool {
        (self.p + self.q - self.degree).rem_euclid(2) == 0
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H^{}[{},{}]", self.degree, self.p, self.q)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HodgeError {
    /// The class has a negative multiplicity, so there is no underlying
    /// graded vector space to take a power of.
    #[error("virtual input: multiplicity {multiplicity} at {cell} is negative")]
    VirtualInput { cell: Cell, multiplicity: BigInt },
}

/// An element of the Grothendieck group of bigraded classes.
///
/// Canonical form: no stored multiplicity is zero. Two classes are equal
/// exactly when their tables agree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HodgeClass {
    entries: BTreeMap<Cell, BigInt>,
}

impl HodgeClass {
    /// The empty (zero) class.
    pub fn zero() -> Self {
        HodgeClass::default()
    }

    /// `Q` in degree 0; the unit for [`HodgeClass::tensor`].
    pub fn point() -> Self {
        HodgeClass::monomial(Cell::new(0, 0, 0), 1)
    }

    /// The Lefschetz class `Q[-2](-1)`.
    pub fn lefschetz() -> Self {
        HodgeClass::monomial(Cell::new(2, 1, 1), 1)
    }

    pub fn monomial(cell: Cell, multiplicity: impl Into<BigInt>) -> Self {
        let mut class = HodgeClass::zero();
        class.add_entry(cell, multiplicity.into());
        class
    }

    /// Builds a class from raw `(n, p, q, m)` rows. Duplicate cells are
    /// summed and zero multiplicities dropped.
    pub fn from_entries<I, M>(raw: I) -> Self
    where
        I: IntoIterator<Item = (i32, i32, i32, M)>,
        M: Into<BigInt>,
    {
        let mut class = HodgeClass::zero();
        for (n, p, q, m) in raw {
            class.add_entry(Cell::new(n, p, q), m.into());
        }
        class
    }

    fn from_cells<I: IntoIterator<Item = (Cell, BigInt)>>(raw: I) -> Self {
        let mut class = HodgeClass::zero();
        for (cell, m) in raw {
            class.add_entry(cell, m);
        }
        class
    }

    fn add_entry(&mut self, cell: Cell, m: BigInt) {
        if m.is_zero() {
            return;
        }
        let slot = self.entries.entry(cell).or_insert_with(BigInt::zero);
        *slot += m;
        if slot.is_zero() {
            self.entries.remove(&cell);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of stored (nonzero) cells.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Entries in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (Cell, &BigInt)> + '_ {
        self.entries.iter().map(|(c, m)| (*c, m))
    }

    pub fn multiplicity(&self, cell: Cell) -> BigInt {
        self.entries.get(&cell).cloned().unwrap_or_default()
    }

    /// Multiplicity at `(n, p, q)`, for terse lookups in tests and reports.
    pub fn get(&self, n: i32, p: i32, q: i32) -> BigInt {
        self.multiplicity(Cell::new(n, p, q))
    }

    pub fn is_effective(&self) -> bool {
        self.entries.values().all(|m| !m.is_negative())
    }

    /// Every entry has `p + q ≡ n (mod 2)`.
    pub fn has_weight_parity(&self) -> bool {
        self.entries.keys().all(|c| c.has_weight_parity())
    }

    /// Every entry has `p + q = n`.
    pub fn is_pure(&self) -> bool {
        self.entries.keys().all(|c| c.p + c.q == c.degree)
    }

    /// Sum of all multiplicities (the dimension, for effective classes).
    pub fn total_dimension(&self) -> BigInt {
        self.entries.values().sum()
    }

    pub fn first_negative(&self) -> Option<(Cell, &BigInt)> {
        self.iter().find(|(_, m)| m.is_negative())
    }

    /// Entries in cohomological degree `n`, still placed in degree `n`.
    pub fn degree_part(&self, n: i32) -> HodgeClass {
        self.filter(|c| c.degree == n)
    }

    pub(crate) fn filter(&self, keep: impl Fn(Cell) -> bool) -> HodgeClass {
        HodgeClass {
            entries: self
                .entries
                .iter()
                .filter(|(c, _)| keep(**c))
                .map(|(c, m)| (*c, m.clone()))
                .collect(),
        }
    }

    fn map_cells(&self, f: impl Fn(Cell) -> Cell) -> HodgeClass {
        HodgeClass::from_cells(self.iter().map(|(c, m)| (f(c), m.clone())))
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> HodgeClass {
        let c = c.into();
        if c.is_zero() {
            return HodgeClass::zero();
        }
        HodgeClass {
            entries: self.entries.iter().map(|(k, m)| (*k, m * &c)).collect(),
        }
    }

    /// Künneth product: convolution of the two tables.
    pub fn tensor(&self, other: &HodgeClass) -> HodgeClass {
        let mut out = HodgeClass::zero();
        for (c1, m1) in self.iter() {
            for (c2, m2) in other.iter() {
                out.add_entry(c1.plus(c2), m1 * m2);
            }
        }
        debug_assert!(!(self.has_weight_parity() && other.has_weight_parity()) || out.has_weight_parity());
        out
    }

    /// The shift `[-k]`: moves degree `n` to `n + k`.
    pub fn shift_up(&self, k: u32) -> HodgeClass {
        // Odd shifts do not preserve weight parity; `angle` only uses even ones.
        let k = k as i32;
        self.map_cells(|c| Cell::new(c.degree + k, c.p, c.q))
    }

    /// The Tate twist `(k)`: `(p, q) -> (p - k, q - k)`.
    pub fn tate(&self, k: i32) -> HodgeClass {
        let out = self.map_cells(|c| Cell::new(c.degree, c.p - k, c.q - k));
        debug_assert!(!self.has_weight_parity() || out.has_weight_parity());
        out
    }

    /// `⟨k⟩ = [-2k](-k)`.
    pub fn angle(&self, k: u32) -> HodgeClass {
        self.tate(-(k as i32)).shift_up(2 * k)
    }

    /// `(n, p, q) -> (-n, -p, -q)`.
    pub fn dual(&self) -> HodgeClass {
        self.map_cells(|c| Cell::new(-c.degree, -c.p, -c.q))
    }

    pub(crate) fn require_effective(&self) -> Result<(), HodgeError> {
        match self.first_negative() {
            Some((cell, m)) => Err(HodgeError::VirtualInput {
                cell,
                multiplicity: m.clone(),
            }),
            None => Ok(()),
        }
    }
}

/// `Σ c·a` over the given terms.
pub fn linear_combine<'a, C, I>(terms: I) -> HodgeClass
where
    C: Into<BigInt>,
    I: IntoIterator<Item = (C, &'a HodgeClass)>,
{
    let mut out = HodgeClass::zero();
    for (c, a) in terms {
        let c: BigInt = c.into();
        if c.is_zero() {
            continue;
        }
        for (cell, m) in a.iter() {
            out.add_entry(cell, m * &c);
        }
    }
    out
}

impl AddAssign<&HodgeClass> for HodgeClass {
    fn add_assign(&mut self, rhs: &HodgeClass) {
        for (cell, m) in rhs.iter() {
            self.add_entry(cell, m.clone());
        }
    }
}

impl SubAssign<&HodgeClass> for HodgeClass {
    fn sub_assign(&mut self, rhs: &HodgeClass) {
        for (cell, m) in rhs.iter() {
            self.add_entry(cell, -m);
        }
    }
}

impl Add for &HodgeClass {
    type Output = HodgeClass;
    fn add(self, rhs: &HodgeClass) -> HodgeClass {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for HodgeClass {
    type Output = HodgeClass;
    fn add(mut self, rhs: HodgeClass) -> HodgeClass {
        self += &rhs;
        self
    }
}

impl Sub for &HodgeClass {
    type Output = HodgeClass;
    fn sub(self, rhs: &HodgeClass) -> HodgeClass {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for HodgeClass {
    type Output = HodgeClass;
    fn sub(mut self, rhs: HodgeClass) -> HodgeClass {
        self -= &rhs;
        self
    }
}

impl Neg for &HodgeClass {
    type Output = HodgeClass;
    fn neg(self) -> HodgeClass {
        self.scale(-BigInt::one())
    }
}

impl Neg for HodgeClass {
    type Output = HodgeClass;
    fn neg(self) -> HodgeClass {
        -&self
    }
}

/// `*` is the tensor product.
impl Mul for &HodgeClass {
    type Output = HodgeClass;
    fn mul(self, rhs: &HodgeClass) -> HodgeClass {
        self.tensor(rhs)
    }
}

impl Mul for HodgeClass {
    type Output = HodgeClass;
    fn mul(self, rhs: HodgeClass) -> HodgeClass {
        self.tensor(&rhs)
    }
}

impl Sum for HodgeClass {
    fn sum<I: Iterator<Item = HodgeClass>>(iter: I) -> Self {
        iter.fold(HodgeClass::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a HodgeClass> for HodgeClass {
    fn sum<I: Iterator<Item = &'a HodgeClass>>(iter: I) -> Self {
        iter.fold(HodgeClass::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}
