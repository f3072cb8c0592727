//! Algebraic laws shared by the property tests and the acceptance runner.

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use hodgeledger::expr::parse;
use hodgeledger::spaces::abelian;
use hodgeledger::{Cell, HodgeClass};

type LawResult = Result<(), TestCaseError>;

/// Small virtual classes in degrees 0..=4.
pub fn class() -> impl Strategy<Value = HodgeClass> {
    prop::collection::vec((0i32..5, 0i32..3, 0i32..3, -3i64..4), 0..5).prop_map(HodgeClass::from_entries)
}

/// Small effective classes.
pub fn effective() -> impl Strategy<Value = HodgeClass> {
    prop::collection::vec((0i32..4, 0i32..3, 0i32..3, 0i64..3), 0..4).prop_map(HodgeClass::from_entries)
}

/// Effective classes with `p + q ≡ n (mod 2)` on every entry.
pub fn parity_class() -> impl Strategy<Value = HodgeClass> {
    prop::collection::vec((0i32..3, 0i32..3, 0i32..2, 0i64..3), 0..4).prop_map(|rows| {
        HodgeClass::from_entries(
            rows.into_iter()
                .map(|(p, q, extra, m)| (p + q + 2 * extra, p + extra, q + extra, m)),
        )
    })
}

fn binom(n: i64, k: i64) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, j| acc * (n - j) / (j + 1))
}

fn dims(a: &HodgeClass) -> (i64, i64) {
    let mut even = 0;
    let mut odd = 0;
    for (c, m) in a.iter() {
        let m = i64::try_from(m).unwrap();
        if c.is_odd() {
            odd += m;
        } else {
            even += m;
        }
    }
    (even, odd)
}

pub fn ring_laws(a: &HodgeClass, b: &HodgeClass, c: &HodgeClass) -> LawResult {
    prop_assert_eq!(a + b, b + a);
    prop_assert_eq!(a * b, b * a);
    prop_assert_eq!(&(a + b) + c, a + &(b + c));
    prop_assert_eq!(&(a * b) * c, a * &(b * c));
    prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    prop_assert_eq!(a * &HodgeClass::point(), a.clone());
    prop_assert!((a * &HodgeClass::zero()).is_empty());
    prop_assert!((a + &(-a)).is_empty());
    prop_assert_eq!(&(a + b) - b, a.clone());
    Ok(())
}

pub fn euler_multiplicative(a: &HodgeClass, b: &HodgeClass) -> LawResult {
    prop_assert_eq!(a.tensor(b).euler(), a.euler() * b.euler());
    prop_assert_eq!((a + b).euler(), a.euler() + b.euler());
    Ok(())
}

pub fn betti_convolution(a: &HodgeClass, b: &HodgeClass) -> LawResult {
    let (na, nb) = (a.numerics().betti, b.numerics().betti);
    let mut conv = std::collections::BTreeMap::<i32, BigInt>::new();
    for (i, x) in &na {
        for (j, y) in &nb {
            *conv.entry(i + j).or_default() += x * y;
        }
    }
    conv.retain(|_, v| *v != BigInt::from(0));
    prop_assert_eq!(a.tensor(b).numerics().betti, conv);
    Ok(())
}

pub fn angle_laws(a: &HodgeClass, b: &HodgeClass, j: u32, k: u32) -> LawResult {
    prop_assert_eq!(a.angle(j).angle(k), a.angle(j + k));
    prop_assert_eq!(a.angle(k).tensor(b), a.tensor(b).angle(k));
    let lk = (0..k).fold(HodgeClass::point(), |acc, _| acc.tensor(&HodgeClass::lefschetz()));
    prop_assert_eq!(a.angle(k), a.tensor(&lk));
    prop_assert_eq!(a.angle(k), a.tate(-(k as i32)).shift_up(2 * k));
    prop_assert_eq!(a.angle(k).euler(), a.euler());
    Ok(())
}

/// `Sym^k(a ⊕ b) = ⊕ Sym^i a ⊗ Sym^{k-i} b`, and likewise for `Λ`.
pub fn power_expansion(a: &HodgeClass, b: &HodgeClass, k: u32) -> LawResult {
    let sum = a + b;
    for wedge in [false, true] {
        let pow = |x: &HodgeClass, i: u32| if wedge { x.super_wedge(i) } else { x.super_sym(i) }.unwrap();
        let expanded: HodgeClass = (0..=k).map(|i| pow(a, i).tensor(&pow(b, k - i))).sum();
        prop_assert_eq!(pow(&sum, k), expanded);
    }
    Ok(())
}

/// Dimensions of graded powers from even and odd dimensions.
pub fn binomial_dimensions(a: &HodgeClass, k: u32) -> LawResult {
    let (e, o) = dims(a);
    let k = i64::from(k);
    let sym: BigInt = (0..=k).map(|i| binom(e + i - 1, i) * binom(o, k - i)).sum();
    let wedge: BigInt = (0..=k).map(|i| binom(e, i) * binom(o + k - i - 1, k - i)).sum();
    prop_assert_eq!(a.super_sym(k as u32).unwrap().total_dimension(), sym);
    prop_assert_eq!(a.super_wedge(k as u32).unwrap().total_dimension(), wedge);
    Ok(())
}

/// Odd generators anticommute under `Sym` and commute under `Λ`.
pub fn super_sign_rule(m: u32, k: u32) -> LawResult {
    let odd = HodgeClass::from_entries([(1, 1, 0, m)]);
    let even = HodgeClass::from_entries([(2, 1, 1, m)]);
    let (m, k64) = (i64::from(m), i64::from(k));
    prop_assert_eq!(odd.super_sym(k).unwrap().total_dimension(), binom(m, k64));
    prop_assert_eq!(odd.super_wedge(k).unwrap().total_dimension(), binom(m + k64 - 1, k64));
    prop_assert_eq!(even.super_sym(k).unwrap().total_dimension(), binom(m + k64 - 1, k64));
    prop_assert_eq!(even.super_wedge(k).unwrap().total_dimension(), binom(m, k64));
    Ok(())
}

pub fn parity_preserved(a: &HodgeClass, b: &HodgeClass, k: u32) -> LawResult {
    prop_assert!(a.has_weight_parity() && b.has_weight_parity());
    prop_assert!(a.tensor(b).has_weight_parity());
    prop_assert!((a + b).has_weight_parity());
    prop_assert!(a.super_sym(k).unwrap().has_weight_parity());
    prop_assert!(a.super_wedge(k).unwrap().has_weight_parity());
    prop_assert!(a.angle(k).has_weight_parity());
    prop_assert!(a.dual().has_weight_parity());
    Ok(())
}

pub fn dual_laws(a: &HodgeClass, b: &HodgeClass) -> LawResult {
    prop_assert_eq!(a.dual().dual(), a.clone());
    prop_assert_eq!(a.tensor(b).dual(), a.dual().tensor(&b.dual()));
    prop_assert_eq!(a.dual().euler(), a.euler());
    Ok(())
}

/// `a ⊕ (Poincaré partner of a)` is Poincaré symmetric about `d`, and
/// products of symmetric classes are symmetric about the sum.
pub fn symmetrization(a: &HodgeClass, b: &HodgeClass, d: u32, e: u32) -> LawResult {
    let hodge_swap = |x: &HodgeClass| HodgeClass::from_entries(x.iter().map(|(c, m)| (c.degree, c.q, c.p, m.clone())));
    let sym = |x: &HodgeClass, d: u32| {
        let y = x + &hodge_swap(x);
        &y + &y.dual().angle(d)
    };
    let (sa, sb) = (sym(a, d), sym(b, e));
    let ra = sa.symmetry_checks(d as i32);
    prop_assert!(ra.poincare && ra.hodge);
    let r = sa.tensor(&sb).symmetry_checks((d + e) as i32);
    prop_assert!(r.poincare && r.hodge);
    Ok(())
}

pub fn json_round_trip(a: &HodgeClass) -> LawResult {
    let text = a.to_json();
    prop_assert_eq!(HodgeClass::from_json(&text).unwrap(), a.clone());
    prop_assert_eq!(HodgeClass::from_json(&text).unwrap().to_json(), text);
    Ok(())
}

pub fn parse_total(text: &str) -> LawResult {
    // Must return, never panic; errors carry an offset inside the input.
    if let Err(e) = parse(text) {
        prop_assert!(e.offset() >= 1 && e.offset() <= text.len() + 1);
    }
    Ok(())
}

/// Strings over the expression alphabet, to exercise the parser.
pub fn expr_text() -> impl Strategy<Value = String> {
    let pieces = prop::sample::select(vec![
        "U", "W", "L", "point", "A", "J", "Sigma", "Z", "kummerK3", "sym", "wedge", "ab", "angle", "tate", "dual",
        "even", "odd", "scale", "(", ")", ",", "+", "-", "*", "1", "2", "-3", " ", "x", "⟨", "$",
    ]);
    prop::collection::vec(pieces, 0..24).prop_map(|v| v.concat())
}

/// Deterministic: `H*(ab(g))` is symmetric about `g` for `g <= 4`, and
/// `Sym^n H¹ = Hⁿ` for `g <= 3`.
pub fn abelian_laws() -> LawResult {
    for g in 0..=4u32 {
        let a = abelian(g).unwrap();
        let s = a.symmetry_checks(g as i32);
        prop_assert!(s.poincare && s.hodge, "abelian({})", g);
    }
    for g in 0..=3u32 {
        let a = abelian(g).unwrap();
        let h1 = a.degree_part(1);
        for n in 0..=(2 * g) as i32 {
            prop_assert_eq!(h1.super_sym(n as u32).unwrap(), a.degree_part(n), "g={} n={}", g, n);
        }
        prop_assert!(h1.super_sym(2 * g + 1).unwrap().is_empty());
    }
    Ok(())
}

pub fn shift_and_tate(a: &HodgeClass, k: u32, t: i32) -> LawResult {
    let shifted = a.shift_up(k);
    for (c, m) in a.iter() {
        prop_assert_eq!(
            shifted.multiplicity(Cell::new(c.degree + k as i32, c.p, c.q)),
            m.clone()
        );
    }
    prop_assert_eq!(a.tate(t).tate(-t), a.clone());
    Ok(())
}

/// Every fixture is symmetric about its own dimension, and so is `H*(M̃)`
/// about `6`.
pub fn fixture_symmetry() -> LawResult {
    use hodgeledger::og6::{ClosedForm, Og6Pipeline};
    use hodgeledger::spaces::{fixture, FixtureName};
    for name in FixtureName::ALL {
        let s = fixture(name).symmetry_checks(name.complex_dim());
        prop_assert!(s.poincare && s.hodge, "{}", name);
    }
    let pipeline = Og6Pipeline::new();
    for (path, class) in pipeline.paths() {
        let s = class.unwrap().symmetry_checks(6);
        prop_assert!(s.poincare && s.hodge, "{}", path);
    }
    let s = pipeline.closed_form(ClosedForm::Theorem).symmetry_checks(6);
    prop_assert!(s.poincare && s.hodge);
    Ok(())
}
