//! The cycle-transform description of the Cartan invariants of 𝒫^(r)_n,
//! compared with the computed matrices.

use crate::combitypes::rearrangements;
use crate::peakcli::report::{Check, Section};
use crate::reptheory::{conjecture_cartan, conjecture_matrix, CartanMatrix};

use super::{check, ensure, peak_data, Scope, Task};

const S: Section = Section::Conjecture;

fn first_mismatch(a: &CartanMatrix, b: &CartanMatrix, at_one: bool) -> Option<String> {
    if a.labels != b.labels {
        return Some("label orders differ".into());
    }
    let (x, y) = (a.at_one(), b.at_one());
    for (i, row) in a.labels.iter().enumerate() {
        for (j, col) in a.labels.iter().enumerate() {
            let same = if at_one { x[i][j] == y[i][j] } else { a.entries[i][j] == b.entries[i][j] };
            if !same {
                return Some(if at_one {
                    format!("entry ({row}, {col}): predicted {}, computed {}", x[i][j], y[i][j])
                } else {
                    format!("entry ({row}, {col}): predicted {}, computed {}", a.entries[i][j], b.entries[i][j])
                });
            }
        }
    }
    None
}

pub(crate) fn tasks(scope: &Scope) -> Vec<Task> {
    let mut out: Vec<Task> = Vec::new();
    for n in scope.upto(7) {
        out.push(Box::new(move || vec![at_one(n, 2)]));
    }
    for r in 3..=5 {
        for n in scope.upto(6) {
            out.push(Box::new(move || vec![at_one(n, r)]));
        }
    }
    for n in scope.upto(9) {
        out.push(Box::new(move || vec![graded(n)]));
    }
    for r in 2..=5 {
        for n in scope.upto(7) {
            out.push(Box::new(move || vec![column_sums(n, r)]));
        }
    }
    out
}

fn at_one(n: usize, r: usize) -> Check {
    check(S, format!("cartan-at-one/r{r}/{n}"), Some(8), || {
        let computed = peak_data(n, r)?.1.matrix();
        match first_mismatch(&conjecture_cartan(n, r), &computed, true) {
            None => Ok(()),
            Some(d) if r == 2 => Err(d),
            Some(d) => Err(format!("conjecture discrepancy: {d}")),
        }
    })
}

/// For r = 2 each rearrangement contributes t^{(ℓ(μ̄)-ℓ(ν̄))/2}.
fn graded(n: usize) -> Check {
    check(S, format!("graded/r2/{n}"), None, || {
        let computed = peak_data(n, 2)?.1.matrix();
        match first_mismatch(&conjecture_matrix(n, 2, true), &computed, false) {
            None => Ok(()),
            Some(d) => Err(d),
        }
    })
}

/// Column μ sums at t = 1 to the number of rearrangements of μ̄, the
/// dimension of the projective module.
fn column_sums(n: usize, r: usize) -> Check {
    check(S, format!("column-sums/r{r}/{n}"), None, || {
        let computed = peak_data(n, r)?.1.matrix().at_one();
        let predicted = conjecture_cartan(n, r);
        let k = predicted.labels.len();
        for (j, mu) in predicted.labels.iter().enumerate() {
            let want = rearrangements(mu.tail.parts()).len() as i64;
            let p: i64 = (0..k).map(|i| predicted.at_one()[i][j]).sum();
            let c: i64 = (0..k).map(|i| computed[i][j]).sum();
            ensure(p == want && c == want, || format!("column {mu}: predicted {p}, computed {c}, expected {want}"))?;
        }
        Ok(())
    })
}
