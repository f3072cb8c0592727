//! Graded symmetric and exterior powers with the Koszul sign rule.
//!
//! Each entry `(cell, m)` stands for `m` generators of parity `degree mod 2`.
//! `super_sym` takes symmetric powers of even generators and exterior powers
//! of odd ones; `super_wedge` swaps the two. Both are computed cell by cell:
//! a cell with `m` generators contributes `C(m + i - 1, i)` (symmetric) or
//! `C(m, i)` (exterior) classes at `i·cell`, and the per-cell series are
//! multiplied together truncated at total count `k`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{HodgeClass, HodgeError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Rule {
    Symmetric,
    Exterior,
}

/// `C(top, i)` for an arbitrary integer `top` and small `i`.
fn falling_binomial(top: &BigInt, i: u32) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..i {
        acc = acc * (top - j) / (j + 1);
    }
    acc
}

fn cell_coefficient(rule: Rule, m: &BigInt, i: u32) -> BigInt {
    match rule {
        Rule::Symmetric => falling_binomial(&(m + i - 1u32), i),
        Rule::Exterior => falling_binomial(m, i),
    }
}

fn graded_power(a: &HodgeClass, k: u32, even: Rule, odd: Rule) -> Result<HodgeClass, HodgeError> {
    a.require_effective()?;
    let k_us = k as usize;
    // levels[j] is the degree-j piece of the product of the series seen so far.
    let mut levels = vec![HodgeClass::zero(); k_us + 1];
    levels[0] = HodgeClass::point();
    for (cell, m) in a.iter() {
        let rule = if cell.is_odd() { odd } else { even };
        let coeffs: Vec<BigInt> = (0..=k).map(|i| cell_coefficient(rule, m, i)).collect();
        let mut next = vec![HodgeClass::zero(); k_us + 1];
        for (j, slot) in next.iter_mut().enumerate() {
            for (i, c) in coeffs.iter().enumerate().take(j + 1) {
                if c.is_zero() || levels[j - i].is_empty() {
                    continue;
                }
                let step = cell.times(i as i32);
                for (base, mult) in levels[j - i].iter() {
                    slot.add_entry(base.plus(step), mult * c);
                }
            }
        }
        levels = next;
    }
    let out = levels.swap_remove(k_us);
    debug_assert!(!a.has_weight_parity() || out.has_weight_parity());
    Ok(out)
}

impl HodgeClass {
    /// Graded symmetric power: `⊕_{i+j=k} Sym^i(even) ⊗ Λ^j(odd)`.
    ///
    /// Fails with [`HodgeError::VirtualInput`] when a multiplicity is negative.
    pub fn super_sym(&self, k: u32) -> Result<HodgeClass, HodgeError> {
        graded_power(self, k, Rule::Symmetric, Rule::Exterior)
    }

    /// Graded exterior power: `⊕_{i+j=k} Λ^i(even) ⊗ Sym^j(odd)`.
    pub fn super_wedge(&self, k: u32) -> Result<HodgeClass, HodgeError> {
        graded_power(self, k, Rule::Exterior, Rule::Symmetric)
    }
}
