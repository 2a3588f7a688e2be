//! q-Cartan matrices from two-sided corner dimensions of radical powers,
//! their rendering in the conventions of the published tables, and quivers.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combitypes::HeadedPartition;
use crate::exactmath::Echelon;

use super::loewy::LoewyFiltration;
use super::model::{apply, AlgebraModel, Vector};

/// Polynomial in t with integer coefficients, index = degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly(pub Vec<i64>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn monomial(c: i64, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        Poly(v).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn at_one(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        Poly((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect()).trimmed()
    }

    /// Parses the table notation: `.`, `1`, `q`, `2 q^{2}`, `q^{2} + q`,
    /// with optional `\!` spacing.
    pub fn parse(s: &str) -> Result<Poly, String> {
        let s = s.replace("\\!", "").replace("\\,", "");
        let s = s.trim();
        if s == "." || s == "0" {
            return Ok(Poly::zero());
        }
        let mut p = Poly::zero();
        for term in s.split('+') {
            let t: String = term.chars().filter(|c| !c.is_whitespace()).collect();
            if t.is_empty() {
                return Err(format!("empty term in {s:?}"));
            }
            let (coef, rest) = match t.find('q') {
                Some(i) => (&t[..i], &t[i..]),
                None => (t.as_str(), ""),
            };
            let c: i64 = if coef.is_empty() {
                1
            } else {
                coef.parse().map_err(|_| format!("bad coefficient in {s:?}"))?
            };
            let k = if rest.is_empty() {
                0
            } else if rest == "q" {
                1
            } else {
                let e = rest
                    .strip_prefix("q^")
                    .ok_or_else(|| format!("bad term {t:?}"))?
                    .trim_start_matches('{')
                    .trim_end_matches('}');
                e.parse().map_err(|_| format!("bad exponent in {t:?}"))?
            };
            p = p.add(&Poly::monomial(c, k));
        }
        Ok(p)
    }

    /// Table notation, highest degree first.
    pub fn to_table(&self) -> String {
        if self.is_zero() {
            return ".".into();
        }
        let mut terms = Vec::new();
        for k in (0..self.0.len()).rev() {
            let c = self.0[k];
            if c == 0 {
                continue;
            }
            let m = match k {
                0 => String::new(),
                1 => "q".into(),
                _ => format!("q^{{{k}}}"),
            };
            terms.push(match (c, k) {
                (_, 0) => c.to_string(),
                (1, _) => m,
                _ => format!("{c} {m}"),
            });
        }
        terms.join(" + ")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_table())
    }
}

impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(Poly(Vec::<i64>::deserialize(d)?).trimmed())
    }
}

/// Square matrix of polynomials, rows and columns indexed by `labels`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix {
    pub labels: Vec<HeadedPartition>,
    pub entries: Vec<Vec<Poly>>,
}

impl CartanMatrix {
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn transpose(&self) -> CartanMatrix {
        let k = self.size();
        CartanMatrix {
            labels: self.labels.clone(),
            entries: (0..k)
                .map(|i| (0..k).map(|j| self.entries[j][i].clone()).collect())
                .collect(),
        }
    }

    pub fn at_one(&self) -> Vec<Vec<i64>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(Poly::at_one).collect())
            .collect()
    }

    pub fn entry(&self, row: &HeadedPartition, col: &HeadedPartition) -> Option<&Poly> {
        let i = self.labels.iter().position(|l| l == row)?;
        let j = self.labels.iter().position(|l| l == col)?;
        Some(&self.entries[i][j])
    }

    /// Keeps the rows and columns whose labels satisfy `keep`.
    pub fn restrict(&self, keep: impl Fn(&HeadedPartition) -> bool) -> CartanMatrix {
        let idx: Vec<usize> = (0..self.size()).filter(|&i| keep(&self.labels[i])).collect();
        CartanMatrix {
            labels: idx.iter().map(|&i| self.labels[i].clone()).collect(),
            entries: idx
                .iter()
                .map(|&i| idx.iter().map(|&j| self.entries[i][j].clone()).collect())
                .collect(),
        }
    }

    /// Highest t-degree among the entries.
    pub fn max_degree(&self) -> usize {
        self.entries
            .iter()
            .flatten()
            .filter_map(Poly::degree)
            .max()
            .unwrap_or(0)
    }

    /// First entry where `self` and `other` differ (same size assumed).
    pub fn first_difference(&self, other: &CartanMatrix) -> Option<(usize, usize)> {
        if self.size() != other.size() {
            return Some((self.size().min(other.size()), 0));
        }
        for i in 0..self.size() {
            for j in 0..self.size() {
                if self.entries[i][j] != other.entries[i][j] {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// LaTeX array in the layout of the published tables.
    pub fn to_latex(&self, name: &str) -> String {
        let k = self.size();
        let mut s = format!("{name} =\n\\left(\\begin{{array}}{{{}}}\n", "c".repeat(k));
        for (i, row) in self.entries.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(Poly::to_table).collect();
            s.push_str(&cells.join(" & "));
            s.push_str(if i + 1 < k { " \\\\\n" } else { "\n" });
        }
        s.push_str("\\end{array}\\right)\n");
        s
    }

    /// Plain text with a label column.
    pub fn to_text(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(Poly::to_table).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        let lw = self.labels.iter().map(|l| l.to_string().len()).max().unwrap_or(1);
        let mut s = String::new();
        for (l, row) in self.labels.iter().zip(&cells) {
            s.push_str(&format!("{:>lw$} |", l.to_string()));
            for c in row {
                s.push_str(&format!(" {c:>width$}"));
            }
            s.push('\n');
        }
        s
    }
}

/// Reads a golden table: a `#` header line, then one row per line with
/// cells separated by `&`.
pub fn parse_table(text: &str) -> Result<Vec<Vec<Poly>>, String> {
    let rows: Vec<Vec<Poly>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split('&').map(Poly::parse).collect::<Result<Vec<_>, _>>())
        .collect::<Result<_, _>>()?;
    if rows.iter().any(|r| r.len() != rows.len()) {
        return Err("table is not square".into());
    }
    Ok(rows)
}

/// Which index of dim(e_a ∗ J^k ∗ e_b) becomes the row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Orientation {
    /// Row a (left idempotent), column b.
    LeftRow,
    /// Row b (right idempotent), column a.
    RightRow,
}

/// Corner dimensions dims[k][a][b] = dim e_a ∗ J^k ∗ e_b, labels in `<`.
#[derive(Clone, Debug)]
pub struct CornerDims {
    pub labels: Vec<HeadedPartition>,
    pub dims: Vec<Vec<Vec<usize>>>,
}

/// Computes the corner dimensions for a complete orthogonal system given by
/// its model coordinates.
pub fn corner_dims(
    model: &AlgebraModel,
    system: &[(HeadedPartition, Vector)],
    filt: &LoewyFiltration,
) -> CornerDims {
    let d = model.dim();
    let lefts: Vec<Vec<Vector>> = system.iter().map(|(_, e)| model.left_matrix(e)).collect();
    let rights: Vec<Vec<Vector>> = system.iter().map(|(_, e)| model.right_matrix(e)).collect();
    let k = system.len();
    let mut dims = Vec::new();
    for layer in &filt.layers {
        let mut dk = vec![vec![0usize; k]; k];
        if !layer.is_empty() {
            for (b, rb) in rights.iter().enumerate() {
                let mut jb = Echelon::new(d);
                for v in layer {
                    jb.insert(apply(rb, v));
                }
                let jb = jb.reduced_rows();
                for (a, la) in lefts.iter().enumerate() {
                    let mut e = Echelon::new(d);
                    for v in &jb {
                        e.insert(apply(la, v));
                    }
                    dk[a][b] = e.rank();
                }
            }
        }
        dims.push(dk);
    }
    CornerDims {
        labels: system.iter().map(|(l, _)| l.clone()).collect(),
        dims,
    }
}

impl CornerDims {
    /// The q-Cartan matrix with labels in the reverse of `<`.
    pub fn matrix(&self, orient: Orientation) -> CartanMatrix {
        let k = self.labels.len();
        let order: Vec<usize> = (0..k).rev().collect();
        let entry = |a: usize, b: usize| {
            let mut p = Poly::zero();
            for lvl in 0..self.dims.len() {
                let here = self.dims[lvl][a][b] as i64;
                let next = self.dims.get(lvl + 1).map_or(0, |m| m[a][b]) as i64;
                p = p.add(&Poly::monomial(here - next, lvl));
            }
            p
        };
        let entries = order
            .iter()
            .map(|&i| {
                order
                    .iter()
                    .map(|&j| match orient {
                        Orientation::LeftRow => entry(i, j),
                        Orientation::RightRow => entry(j, i),
                    })
                    .collect()
            })
            .collect();
        CartanMatrix {
            labels: order.iter().map(|&i| self.labels[i].clone()).collect(),
            entries,
        }
    }
}

/// Arrows (source, target, multiplicity) read off the linear terms: the
/// column label is the source and the row label the target.
pub fn quiver(c: &CartanMatrix) -> Vec<(HeadedPartition, HeadedPartition, i64)> {
    let mut out = Vec::new();
    for (j, src) in c.labels.iter().enumerate() {
        for (i, tgt) in c.labels.iter().enumerate() {
            let m = c.entries[i][j].coeff(1);
            if i != j && m != 0 {
                out.push((src.clone(), tgt.clone(), m));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_round_trip() {
        for s in [".", "1", "q", "2 q^{2}", "q^{2} + q", "q^{3} + 2 q^{2}", "q^{5} + 2 q^{4}"] {
            assert_eq!(Poly::parse(s).unwrap().to_table(), s);
        }
        assert_eq!(
            Poly::parse(r"q^{3}\! +\! 2 q^{2}").unwrap(),
            Poly(vec![0, 0, 2, 1])
        );
        assert!(Poly::parse("x").is_err());
    }
}
