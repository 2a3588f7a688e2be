//! The published q-Cartan matrices, stored verbatim under `data/golden`.

use crate::combitypes::{order_index, HeadedPartition, OrderKind};
use crate::reptheory::{parse_table, CartanMatrix};

const TABLES: &[(usize, usize, &str)] = &[
    (2, 2, include_str!("../../data/golden/C_2_2.txt")),
    (3, 2, include_str!("../../data/golden/C_3_2.txt")),
    (4, 2, include_str!("../../data/golden/C_4_2.txt")),
    (5, 2, include_str!("../../data/golden/C_5_2.txt")),
    (6, 2, include_str!("../../data/golden/C_6_2.txt")),
    (7, 2, include_str!("../../data/golden/C_7_2.txt")),
    (8, 2, include_str!("../../data/golden/C_8_2.txt")),
    (9, 2, include_str!("../../data/golden/C_9_2.txt")),
    (3, 3, include_str!("../../data/golden/C_3_3.txt")),
    (4, 3, include_str!("../../data/golden/C_4_3.txt")),
    (5, 3, include_str!("../../data/golden/C_5_3.txt")),
    (6, 3, include_str!("../../data/golden/C_6_3.txt")),
    (7, 3, include_str!("../../data/golden/C_7_3.txt")),
    (8, 3, include_str!("../../data/golden/C_8_3.txt")),
    (4, 4, include_str!("../../data/golden/C_4_4.txt")),
    (5, 4, include_str!("../../data/golden/C_5_4.txt")),
    (6, 4, include_str!("../../data/golden/C_6_4.txt")),
    (7, 4, include_str!("../../data/golden/C_7_4.txt")),
    (8, 4, include_str!("../../data/golden/C_8_4.txt")),
    (5, 5, include_str!("../../data/golden/C_5_5.txt")),
    (6, 5, include_str!("../../data/golden/C_6_5.txt")),
    (7, 5, include_str!("../../data/golden/C_7_5.txt")),
    (8, 5, include_str!("../../data/golden/C_8_5.txt")),
    (6, 6, include_str!("../../data/golden/C_6_6.txt")),
    (7, 6, include_str!("../../data/golden/C_7_6.txt")),
    (8, 6, include_str!("../../data/golden/C_8_6.txt")),
    (7, 7, include_str!("../../data/golden/C_7_7.txt")),
    (8, 7, include_str!("../../data/golden/C_8_7.txt")),
    (8, 8, include_str!("../../data/golden/C_8_8.txt")),
];

/// One published matrix with its labels (reverse of `<`).
#[derive(Clone, Debug)]
pub struct GoldenTable {
    pub n: usize,
    pub r: usize,
    pub id: String,
    pub matrix: CartanMatrix,
}

/// The (n, r) cells for which a table exists, sorted by r then n.
pub fn golden_cells() -> Vec<(usize, usize)> {
    let mut v: Vec<(usize, usize)> = TABLES.iter().map(|&(n, r, _)| (n, r)).collect();
    v.sort_by_key(|&(n, r)| (r, n));
    v
}

pub fn golden_table(n: usize, r: usize) -> Option<Result<GoldenTable, String>> {
    let (_, _, text) = TABLES.iter().find(|&&(a, b, _)| (a, b) == (n, r))?;
    Some(parse_golden(n, r, text))
}

pub fn parse_golden(n: usize, r: usize, text: &str) -> Result<GoldenTable, String> {
    let entries = parse_table(text)?;
    let mut labels: Vec<HeadedPartition> = order_index(n, OrderKind::Peak(r));
    labels.reverse();
    if labels.len() != entries.len() {
        return Err(format!(
            "C_{n}^({r}) has {} rows but there are {} labels",
            entries.len(),
            labels.len()
        ));
    }
    Ok(GoldenTable {
        n,
        r,
        id: format!("C_{n}^{{({r})}}"),
        matrix: CartanMatrix { labels, entries },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_tables_parse() {
        assert_eq!(golden_cells().len(), 29);
        for (n, r) in golden_cells() {
            let t = golden_table(n, r).unwrap().unwrap();
            for (i, row) in t.matrix.entries.iter().enumerate() {
                assert_eq!(row[i].coeff(0), 1, "diagonal of C_{n}^({r})");
            }
        }
    }
}
