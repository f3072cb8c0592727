use std::collections::BTreeMap;
use std::fmt::Write;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::hodge::HodgeClass;

/// Output formats of [`render`]. All are byte-exact for equal classes and
/// carry no trailing newline.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Format {
    /// Canonical `hodgeclass/v1` JSON.
    Json,
    /// One `(p, q)` grid per nonzero degree, `p` descending by row and `q`
    /// ascending by column.
    Diamond,
    /// Betti numbers from degree `min(0, lowest)`, space separated.
    Betti,
    /// Nonzero coefficients of `Σ (-1)^n m x^p y^q`, one `p q coeff` per line.
    Epoly,
    /// A LaTeX `tabular` of the nonzero entries.
    Tex,
}

impl Format {
    pub const ALL: [Format; 5] = [Format::Json, Format::Diamond, Format::Betti, Format::Epoly, Format::Tex];

    pub fn as_str(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Diamond => "diamond",
            Format::Betti => "betti",
            Format::Epoly => "epoly",
            Format::Tex => "tex",
        }
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Format::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| format!("unknown format '{s}'"))
    }
}

pub fn render(a: &HodgeClass, format: Format) -> String {
    match format {
        Format::Json => a.to_json(),
        Format::Betti => betti(a),
        Format::Diamond => diamond(a),
        Format::Epoly => epoly(a),
        Format::Tex => tex(a),
    }
}

fn betti(a: &HodgeClass) -> String {
    let v = a.betti_vector();
    if v.is_empty() {
        return "0".into();
    }
    v.iter().map(BigInt::to_string).collect::<Vec<_>>().join(" ")
}

fn diamond(a: &HodgeClass) -> String {
    if a.is_empty() {
        return "0".into();
    }
    let mut by_degree: BTreeMap<i32, BTreeMap<(i32, i32), &BigInt>> = BTreeMap::new();
    for (c, m) in a.iter() {
        by_degree.entry(c.degree).or_default().insert((c.p, c.q), m);
    }
    let mut blocks = Vec::new();
    for (n, cells) in by_degree {
        let ps: Vec<i32> = cells.keys().map(|k| k.0).collect();
        let qs: Vec<i32> = cells.keys().map(|k| k.1).collect();
        let (p_lo, p_hi) = (*ps.iter().min().unwrap(), *ps.iter().max().unwrap());
        let (q_lo, q_hi) = (*qs.iter().min().unwrap(), *qs.iter().max().unwrap());
        let mut rows: Vec<Vec<String>> = Vec::new();
        let mut header = vec!["p\\q".to_string()];
        header.extend((q_lo..=q_hi).map(|q| q.to_string()));
        rows.push(header);
        for p in (p_lo..=p_hi).rev() {
            let mut row = vec![p.to_string()];
            row.extend((q_lo..=q_hi).map(|q| cells.get(&(p, q)).map_or("0".to_string(), |m| m.to_string())));
            rows.push(row);
        }
        let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
        let mut block = format!("H^{n}");
        for row in rows {
            block.push('\n');
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            block.push_str(line.join(" ").trim_end());
        }
        blocks.push(block);
    }
    blocks.join("\n\n")
}

fn epoly(a: &HodgeClass) -> String {
    let e = a.numerics().e_polynomial;
    if e.is_empty() {
        return "0".into();
    }
    let mut out = String::from("p q coeff");
    for ((p, q), c) in e {
        write!(out, "\n{p} {q} {c}").unwrap();
    }
    out
}

fn tex(a: &HodgeClass) -> String {
    let mut out = String::from("\\begin{tabular}{rrrr}\n$n$ & $p$ & $q$ & $h^{p,q}$ \\\\\n\\hline\n");
    for (c, m) in a.iter() {
        writeln!(out, "{} & {} & {} & {} \\\\", c.degree, c.p, c.q, m).unwrap();
    }
    out.push_str("\\end{tabular}");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::abelian;

    #[test]
    fn examples() {
        assert_eq!(render(&HodgeClass::point(), Format::Betti), "1");
        assert_eq!(
            render(&HodgeClass::lefschetz(), Format::Json),
            r#"{"format":"hodgeclass/v1","entries":[[2,1,1,1]]}"#
        );
        assert_eq!(render(&abelian(2).unwrap(), Format::Betti), "1 4 6 4 1");
        assert_eq!(render(&HodgeClass::zero(), Format::Betti), "0");
    }

    #[test]
    fn diamond_layout() {
        let j = abelian(2).unwrap();
        let text = render(&j, Format::Diamond);
        let expected = "H^0\np\\q   0\n  0   1\n\nH^1\np\\q   0   1\n  1   2   0\n  0   0   2\n\nH^2\np\\q   0   1   2\n  2   1   0   0\n  1   0   4   0\n  0   0   0   1\n\nH^3\np\\q   1   2\n  2   2   0\n  1   0   2\n\nH^4\np\\q   2\n  2   1";
        assert_eq!(text, expected);
    }

    #[test]
    fn epoly_and_tex() {
        let l = HodgeClass::lefschetz();
        assert_eq!(render(&l, Format::Epoly), "p q coeff\n1 1 1");
        let w = HodgeClass::from_entries([(1, 1, 0, 2)]);
        assert_eq!(render(&w, Format::Epoly), "p q coeff\n1 0 -2");
        assert_eq!(
            render(&l, Format::Tex),
            "\\begin{tabular}{rrrr}\n$n$ & $p$ & $q$ & $h^{p,q}$ \\\\\n\\hline\n2 & 1 & 1 & 1 \\\\\n\\end{tabular}"
        );
        for f in Format::ALL {
            assert_eq!(f.as_str().parse::<Format>().unwrap(), f);
        }
    }
}
