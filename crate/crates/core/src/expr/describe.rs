use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::hodge::HodgeClass;
use crate::spaces::{fixture, FixtureName};

/// Named blocks tried by [`describe`], in order of preference.
const NAMED: [FixtureName; 7] = [
    FixtureName::U,
    FixtureName::W,
    FixtureName::J,
    FixtureName::KummerK3,
    FixtureName::Z,
    FixtureName::Sigma,
    FixtureName::A,
];

fn angle_suffix(k: i32) -> String {
    if k == 0 {
        String::new()
    } else {
        format!("⟨{k}⟩")
    }
}

fn coefficient(m: &BigInt) -> String {
    if m.is_one() {
        String::new()
    } else if *m == -BigInt::one() {
        "-".into()
    } else {
        format!("{m}·")
    }
}

/// A short symbolic name for a class, such as `U⟨2⟩`, `-2·W⟨1⟩` or
/// `Q⟨1⟩ + H(3,2,1)`. Used to display residuals.
///
/// A multiple of one named fixture under `⟨k⟩` is named as such; anything
/// else is a sum of `Q⟨k⟩` for Tate classes and `H(n,p,q)` for other cells.
pub fn describe(a: &HodgeClass) -> String {
    let Some((lowest, m)) = a.iter().next() else {
        return "0".into();
    };
    for name in NAMED {
        let block = fixture(name);
        let (b0, b0m) = block.iter().next().expect("named blocks are nonzero");
        let k = lowest.p - b0.p;
        if k < 0 || lowest.q - b0.q != k || lowest.degree - b0.degree != 2 * k || !(m % b0m).is_zero() {
            continue;
        }
        if block.angle(k as u32).scale(m / b0m) == *a {
            return format!("{}{}{}", coefficient(&(m / b0m)), name, angle_suffix(k));
        }
    }
    let mut out = String::new();
    for (i, (c, m)) in a.iter().enumerate() {
        let term = if c.p == c.q && c.degree == 2 * c.p {
            format!("Q{}", angle_suffix(c.p))
        } else {
            format!("H({},{},{})", c.degree, c.p, c.q)
        };
        let mag = m.abs();
        match (i, m.is_negative()) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        if !mag.is_one() {
            out.push_str(&format!("{mag}·"));
        }
        out.push_str(&term);
    }
    out
}
