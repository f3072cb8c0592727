//! Independent oracles. Nothing here calls the crate's power, tensor or
//! space constructors; tables are built from explicit bases.

use std::collections::BTreeMap;

use hodgeledger::HodgeClass;

/// `(n, p, q) -> multiplicity`.
pub type Table = BTreeMap<(i32, i32, i32), i64>;

pub fn to_class(t: &Table) -> HodgeClass {
    HodgeClass::from_entries(t.iter().map(|(&(n, p, q), &m)| (n, p, q, m)))
}

pub fn add(t: &mut Table, cell: (i32, i32, i32), m: i64) {
    *t.entry(cell).or_default() += m;
    if t[&cell] == 0 {
        t.remove(&cell);
    }
}

pub fn sum(parts: &[&Table]) -> Table {
    let mut out = Table::new();
    for t in parts {
        for (&c, &m) in t.iter() {
            add(&mut out, c, m);
        }
    }
    out
}

pub fn scale(t: &Table, k: i64) -> Table {
    t.iter().map(|(&c, &m)| (c, m * k)).filter(|(_, m)| *m != 0).collect()
}

pub fn angle(t: &Table, k: i32) -> Table {
    t.iter()
        .map(|(&(n, p, q), &m)| ((n + 2 * k, p + k, q + k), m))
        .collect()
}

/// Basis cells of `H*(J)`: subsets of two `(1,0)` and two `(0,1)` generators.
pub fn j_basis() -> Vec<(i32, i32, i32)> {
    let gens = [(1, 1, 0), (1, 1, 0), (1, 0, 1), (1, 0, 1)];
    (0u32..16)
        .map(|mask| {
            gens.iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .fold((0, 0, 0), |acc, (_, g)| (acc.0 + g.0, acc.1 + g.1, acc.2 + g.2))
        })
        .collect()
}

pub fn u_basis() -> Vec<(i32, i32, i32)> {
    j_basis().into_iter().filter(|c| c.0 % 2 == 0).collect()
}

pub fn w_basis() -> Vec<(i32, i32, i32)> {
    j_basis().into_iter().filter(|c| c.0 % 2 == 1).collect()
}

pub fn table_of(basis: &[(i32, i32, i32)]) -> Table {
    let mut t = Table::new();
    for &c in basis {
        add(&mut t, c, 1);
    }
    t
}

/// All products `b_i ⊗ b_j`.
pub fn tensor_basis(a: &[(i32, i32, i32)], b: &[(i32, i32, i32)]) -> Vec<(i32, i32, i32)> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| (x.0 + y.0, x.1 + y.1, x.2 + y.2)))
        .collect()
}

/// Monomials of length `k` in the given basis. `wedge = false` gives the
/// graded symmetric power (odd generators square to zero), `wedge = true`
/// the graded exterior power (even generators square to zero).
pub fn graded_power(basis: &[(i32, i32, i32)], k: usize, wedge: bool) -> Table {
    fn rec(
        basis: &[(i32, i32, i32)],
        start: usize,
        left: usize,
        acc: (i32, i32, i32),
        last: Option<usize>,
        wedge: bool,
        out: &mut Table,
    ) {
        if left == 0 {
            add(out, acc, 1);
            return;
        }
        for i in start..basis.len() {
            let b = basis[i];
            let odd = b.0 % 2 != 0;
            if last == Some(i) && odd != wedge {
                continue;
            }
            rec(
                basis,
                i,
                left - 1,
                (acc.0 + b.0, acc.1 + b.1, acc.2 + b.2),
                Some(i),
                wedge,
                out,
            );
        }
    }
    let mut out = Table::new();
    rec(basis, 0, k, (0, 0, 0), None, wedge, &mut out);
    out
}

pub fn point_table(m: i64) -> Table {
    Table::from([((0, 0, 0), m)])
}

/// `Sym³U ⊕ ((U⊗²)^2 ⊕ W⊗²)⟨1⟩ ⊕ U^137⟨2⟩ ⊕ Q^512⟨3⟩` by enumeration.
pub fn theorem_table() -> Table {
    let (u, w) = (u_basis(), w_basis());
    let sym3 = graded_power(&u, 3, false);
    let uu = table_of(&tensor_basis(&u, &u));
    let ww = table_of(&tensor_basis(&w, &w));
    let mid = angle(&sum(&[&scale(&uu, 2), &ww]), 1);
    sum(&[
        &sym3,
        &mid,
        &angle(&scale(&table_of(&u), 137), 2),
        &angle(&point_table(512), 3),
    ])
}

/// `Sym³U ⊕ Λ³U ⊕ (U⊗²)^2⟨1⟩ ⊕ U^138⟨2⟩ ⊕ Q^512⟨3⟩` by enumeration.
pub fn remark_table() -> Table {
    let u = u_basis();
    let uu = table_of(&tensor_basis(&u, &u));
    sum(&[
        &graded_power(&u, 3, false),
        &graded_power(&u, 3, true),
        &angle(&scale(&uu, 2), 1),
        &angle(&scale(&table_of(&u), 138), 2),
        &angle(&point_table(512), 3),
    ])
}

pub fn euler(t: &Table) -> i64 {
    t.iter().map(|(c, m)| if c.0 % 2 == 0 { *m } else { -*m }).sum()
}

pub fn betti(t: &Table) -> Vec<i64> {
    let hi = t.keys().map(|c| c.0).max().unwrap_or(0).max(0);
    let mut v = vec![0; hi as usize + 1];
    for (c, m) in t {
        v[c.0 as usize] += m;
    }
    v
}

// ---------------------------------------------------------------------------
// Göttsche–Soergel: Hodge numbers of the generalized Kummer K_{n-1}(A).

/// Polynomial in `x, y`: `(deg_x, deg_y) -> coefficient`.
type Poly = BTreeMap<(i32, i32), i128>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (&(i, j), &c) in a {
        for (&(k, l), &d) in b {
            *out.entry((i + k, j + l)).or_default() += c * d;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn binom(n: i128, k: i128) -> i128 {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

/// `E(A^{(k)})` for `k = 0..=n` from
/// `Σ_k E(A^{(k)}) t^k = Π_{p,q} (1 - x^p y^q t)^{-e^{p,q}}`.
fn symmetric_products(n: usize) -> Vec<Poly> {
    // series[k] is the coefficient of t^k
    let mut series: Vec<Poly> = vec![Poly::new(); n + 1];
    series[0].insert((0, 0), 1);
    for p in 0..=2i32 {
        for q in 0..=2i32 {
            let e = (if (p + q) % 2 == 0 { 1 } else { -1 }) * binom(2, p as i128) * binom(2, q as i128);
            let mut factor: Vec<i128> = vec![0; n + 1];
            for (j, f) in factor.iter_mut().enumerate() {
                let j = j as i128;
                *f = if e > 0 {
                    binom(e + j - 1, j)
                } else {
                    (if j % 2 == 0 { 1 } else { -1 }) * binom(-e, j)
                };
            }
            let mut next: Vec<Poly> = vec![Poly::new(); n + 1];
            for (k, slot) in next.iter_mut().enumerate() {
                for j in 0..=k {
                    if factor[j] == 0 {
                        continue;
                    }
                    let mono = Poly::from([((p * j as i32, q * j as i32), factor[j])]);
                    for (c, v) in poly_mul(&series[k - j], &mono) {
                        *slot.entry(c).or_default() += v;
                    }
                }
                slot.retain(|_, c| *c != 0);
            }
            series = next;
        }
    }
    series
}

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Exact division by `(1 - x)`: prefix sums along the x direction.
fn divide_one_minus(p: &Poly, along_x: bool) -> Poly {
    let mut lines: BTreeMap<i32, BTreeMap<i32, i128>> = BTreeMap::new();
    for (&(i, j), &c) in p {
        let (line, pos) = if along_x { (j, i) } else { (i, j) };
        lines.entry(line).or_default().insert(pos, c);
    }
    let mut out = Poly::new();
    for (line, coeffs) in lines {
        let hi = *coeffs.keys().max().unwrap();
        let mut run = 0;
        for pos in 0..=hi {
            run += coeffs.get(&pos).copied().unwrap_or(0);
            if run != 0 {
                out.insert(if along_x { (pos, line) } else { (line, pos) }, run);
            }
        }
        assert_eq!(run, 0, "not divisible by (1 - x)");
    }
    out
}

/// Hodge numbers `h^{p,q}` of `K_{n-1}(A)`, of dimension `2(n-1)`.
pub fn kummer_hodge(n: usize) -> BTreeMap<(i32, i32), i64> {
    let sym = symmetric_products(n);
    let mut total = Poly::new();
    for part in partitions(n, n) {
        let g = part.iter().fold(0, |acc, &x| gcd(acc, x)) as i128;
        let len = part.len() as i32;
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for &x in &part {
            *counts.entry(x).or_default() += 1;
        }
        let mut term = Poly::from([((n as i32 - len, n as i32 - len), g.pow(4))]);
        for (_, a) in counts {
            term = poly_mul(&term, &sym[a]);
        }
        for (c, v) in term {
            *total.entry(c).or_default() += v;
        }
    }
    total.retain(|_, c| *c != 0);
    // divide by E(A) = (1 - x)^2 (1 - y)^2
    for along_x in [true, true, false, false] {
        total = divide_one_minus(&total, along_x);
    }
    total
        .into_iter()
        .map(|((p, q), c)| {
            let sign = if (p + q) % 2 == 0 { 1 } else { -1 };
            ((p, q), i64::try_from(sign * c).unwrap())
        })
        .collect()
}

pub fn kummer_betti(n: usize) -> Vec<i64> {
    let h = kummer_hodge(n);
    let dim = 4 * (n - 1);
    let mut v = vec![0; dim + 1];
    for ((p, q), m) in h {
        v[(p + q) as usize] += m;
    }
    v
}
