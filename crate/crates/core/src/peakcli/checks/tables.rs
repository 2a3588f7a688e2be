//! The published q-Cartan matrices against freshly computed ones.

use crate::peakcli::golden::{golden_cells, golden_table};
use crate::peakcli::report::{Check, Section};
use crate::reptheory::type_a_cartan;

use super::{check, ensure, err, peak_data, Scope, Task};

const S: Section = Section::Tables;

pub(crate) fn tasks(scope: &Scope) -> Vec<Task> {
    let mut out: Vec<Task> = Vec::new();
    for (n, r) in golden_cells() {
        if n <= scope.max_n {
            out.push(Box::new(move || cell(n, r)));
        }
    }
    if scope.max_n >= 8 {
        out.push(Box::new(|| vec![large_r(8)]));
    }
    out
}

fn cell(n: usize, r: usize) -> Vec<Check> {
    let id = format!("C_{n}^({r})");
    let mut out = vec![check(S, id.clone(), Some(1), || {
        let gold = golden_table(n, r).ok_or("no table")??;
        let data = peak_data(n, r)?;
        let m = data.1.matrix();
        ensure(m.labels == gold.matrix.labels, || "label orders differ".into())?;
        if let Some((i, j)) = m.first_difference(&gold.matrix) {
            let transposed = m.transpose() == gold.matrix;
            return Err(format!(
                "first difference at ({}, {}): computed {}, published {}{}",
                m.labels[i],
                m.labels[j],
                m.entries[i][j],
                gold.matrix.entries[i][j],
                if transposed { "; the transpose matches" } else { "" }
            ));
        }
        Ok(())
    })];
    out.push(check(S, format!("{id}/loewy-length"), None, || {
        let data = peak_data(n, r)?;
        let len = data.1.filtration.length();
        let deg = data.1.matrix().max_degree();
        ensure(len == deg + 1, || format!("Loewy length {len}, top degree {deg}"))
    }));
    out
}

/// For r ≥ n the matrix is that of Sym_n up to labels.
fn large_r(n: usize) -> Check {
    check(S, format!("C_{n}^({n})/type-A"), None, || {
        let a = type_a_cartan(n).map_err(err)?.matrix();
        let p = peak_data(n, n)?.1.matrix();
        let flat = |l: &crate::combitypes::HeadedPartition| l.flatten();
        ensure(a.size() == p.size(), || "sizes differ".into())?;
        for (i, ri) in p.labels.iter().enumerate() {
            for (j, cj) in p.labels.iter().enumerate() {
                let ai = a.labels.iter().position(|l| l.flatten() == flat(ri)).ok_or("label")?;
                let aj = a.labels.iter().position(|l| l.flatten() == flat(cj)).ok_or("label")?;
                ensure(a.entries[ai][aj] == p.entries[i][j], || format!("entry ({ri}, {cj})"))?;
            }
        }
        Ok(())
    })
}
