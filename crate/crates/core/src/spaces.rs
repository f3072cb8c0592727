//! Cohomology tables of the standard spaces: abelian varieties, curves,
//! projective spaces, the Kummer K3 of an abelian surface, and the named
//! fixtures built from a principally polarized abelian surface `J`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::hodge::HodgeClass;

/// Largest dimension accepted by [`abelian`].
pub const MAX_ABELIAN_DIM: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("abelian variety of dimension {0} exceeds the guard of {MAX_ABELIAN_DIM}")]
    DimensionGuard(u32),
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("unknown fixture name '{0}'")]
    UnknownName(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

fn binomial(n: u32, k: u32) -> u64 {
    (0..k).fold(1u64, |acc, j| acc * u64::from(n - j) / u64::from(j + 1))
}

/// `H*(X)` for an abelian variety of dimension `g`: `h^{p,q} = C(g,p)·C(g,q)`
/// in degree `p + q`.
pub fn abelian(g: u32) -> Result<HodgeClass, SpaceError> {
    if g > MAX_ABELIAN_DIM {
        return Err(SpaceError::DimensionGuard(g));
    }
    let gi = g as i32;
    Ok(HodgeClass::from_entries((0..=gi).flat_map(|p| {
        (0..=gi).map(move |q| (p + q, p, q, BigInt::from(binomial(g, p as u32) * binomial(g, q as u32))))
    })))
}

/// Keeps the entries in even (or odd) cohomological degree.
pub fn parity_part(a: &HodgeClass, which: Parity) -> HodgeClass {
    let want_odd = which == Parity::Odd;
    a.filter(|c| c.is_odd() == want_odd)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalSpace {
    /// Smooth projective curve of genus `g`.
    Curve(u32),
    /// Projective space of dimension `n`.
    Projective(u32),
}

pub fn classical(kind: ClassicalSpace) -> HodgeClass {
    match kind {
        ClassicalSpace::Curve(g) => curve(g),
        ClassicalSpace::Projective(n) => projective(n),
    }
}

pub fn curve(g: u32) -> HodgeClass {
    let h1 = HodgeClass::from_entries([(1, 1, 0, g), (1, 0, 1, g)]);
    HodgeClass::point() + h1 + HodgeClass::lefschetz()
}

pub fn projective(n: u32) -> HodgeClass {
    (0..=n).map(|k| HodgeClass::point().angle(k)).sum()
}

/// `a ⊕ k·L`: blowing up `k` points of a surface, or adding `k` exceptional
/// curves.
pub fn add_exceptional(a: &HodgeClass, k: u32) -> HodgeClass {
    a + &HodgeClass::lefschetz().scale(k)
}

/// Kummer K3 of an abelian surface: `H^ev(J) ⊕ 16·L`.
pub fn kummer_k3(j: &HodgeClass) -> Result<HodgeClass, SpaceError> {
    if *j != abelian(2)? {
        return Err(SpaceError::BadInput(
            "kummer_k3 expects the cohomology of an abelian surface".into(),
        ));
    }
    Ok(add_exceptional(&parity_part(j, Parity::Even), 16))
}

/// Named classes built from a principally polarized abelian surface `J`.
/// `H*(J^∨)` is identified with `H*(J)` through the polarization, so `J^∨`
/// never appears separately.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FixtureName {
    /// `H*(J)`, the abelian surface.
    J,
    /// `H*(J^∨ × J) = H*(J)^{⊗2}`, an abelian fourfold.
    A,
    /// `H^ev(J)`.
    U,
    /// `H^odd(J)`.
    W,
    /// The Kummer K3 of `J`: `U ⊕ 16·L`.
    KummerK3,
    /// The double cover of the Kummer K3 branched along eight exceptional
    /// curves: `U ⊕ 24·L`.
    Z,
    /// `H*(A/±1) = H^ev(A)`; the singular locus of the singular moduli space.
    Sigma,
}

impl FixtureName {
    pub const ALL: [FixtureName; 7] = [
        FixtureName::J,
        FixtureName::A,
        FixtureName::U,
        FixtureName::W,
        FixtureName::KummerK3,
        FixtureName::Z,
        FixtureName::Sigma,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FixtureName::J => "J",
            FixtureName::A => "A",
            FixtureName::U => "U",
            FixtureName::W => "W",
            FixtureName::KummerK3 => "kummerK3",
            FixtureName::Z => "Z",
            FixtureName::Sigma => "Sigma",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            FixtureName::J => "abelian surface J",
            FixtureName::A => "abelian fourfold A = J^v x J",
            FixtureName::U => "even cohomology of J",
            FixtureName::W => "odd cohomology of J",
            FixtureName::KummerK3 => "Kummer K3 of J: U + 16 L",
            FixtureName::Z => "branched double cover of the Kummer K3: U + 24 L",
            FixtureName::Sigma => "A/(+-1), the even cohomology of A",
        }
    }

    /// Real dimension divided by two; the `d` for Poincaré duality checks.
    pub fn complex_dim(self) -> i32 {
        match self {
            FixtureName::A | FixtureName::Sigma => 4,
            _ => 2,
        }
    }
}

impl fmt::Display for FixtureName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FixtureName {
    type Err = SpaceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FixtureName::ALL
            .into_iter()
            .find(|n| n.as_str() == s || (s == "KummerK3" && *n == FixtureName::KummerK3))
            .ok_or_else(|| SpaceError::UnknownName(s.to_string()))
    }
}

pub fn fixture(name: FixtureName) -> HodgeClass {
    let j = abelian(2).expect("abelian(2) is within the guard");
    match name {
        FixtureName::J => j,
        FixtureName::A => j.tensor(&j),
        FixtureName::U => parity_part(&j, Parity::Even),
        FixtureName::W => parity_part(&j, Parity::Odd),
        FixtureName::KummerK3 => kummer_k3(&j).expect("J is an abelian surface"),
        FixtureName::Z => add_exceptional(&parity_part(&j, Parity::Even), 24),
        FixtureName::Sigma => parity_part(&j.tensor(&j), Parity::Even),
    }
}

pub fn fixture_by_name(name: &str) -> Result<HodgeClass, SpaceError> {
    Ok(fixture(name.parse()?))
}
