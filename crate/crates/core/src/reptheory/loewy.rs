//! Radical and its powers inside an [`AlgebraModel`].

use std::collections::{BTreeMap, HashMap};

use crate::exactmath::{Echelon, ExactMatrix, Rational};
use crate::symcore::Word;

use super::model::{apply, AlgebraModel, Vector};

/// Kernel of the commutative image inside the model, as an echelon basis of
/// model coordinates.
pub fn radical(model: &AlgebraModel) -> Vec<Vector> {
    let images: Vec<BTreeMap<Word, Rational>> =
        model.basis().iter().map(|b| b.commutative_image()).collect();
    let mut keys: HashMap<Word, usize> = HashMap::new();
    for img in &images {
        for w in img.keys() {
            let k = keys.len();
            keys.entry(w.clone()).or_insert(k);
        }
    }
    let d = model.dim();
    let mut m = ExactMatrix::zeros(keys.len(), d);
    for (j, img) in images.iter().enumerate() {
        for (w, c) in img {
            m.set(keys[w], j, c.clone());
        }
    }
    let mut ech = Echelon::new(d);
    for v in m.kernel() {
        ech.insert(v);
    }
    ech.reduced_rows()
}

/// The chain J^0 = A ⊇ J ⊇ J^2 ⊇ ... ⊇ 0, each layer an echelon basis.
#[derive(Clone, Debug)]
pub struct LoewyFiltration {
    pub layers: Vec<Vec<Vector>>,
}

impl LoewyFiltration {
    /// Number of nonzero layers (the Loewy length).
    pub fn length(&self) -> usize {
        self.layers.iter().filter(|l| !l.is_empty()).count()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }
}

/// J^{k+1} = span{x ∗ y : x ∈ J^k, y ∈ J}, until 0. The last layer is empty.
pub fn loewy(model: &AlgebraModel, rad: &[Vector]) -> LoewyFiltration {
    let d = model.dim();
    let full: Vec<Vector> = (0..d)
        .map(|i| {
            let mut e = vec![Rational::zero(); d];
            e[i] = Rational::one();
            e
        })
        .collect();
    let mut layers = vec![full];
    if rad.is_empty() {
        layers.push(Vec::new());
        return LoewyFiltration { layers };
    }
    layers.push(rad.to_vec());
    let right: Vec<Vec<Vector>> = rad.iter().map(|y| model.right_matrix(y)).collect();
    loop {
        let last = layers.last().unwrap();
        if last.is_empty() {
            break;
        }
        let mut ech = Echelon::new(d);
        'outer: for x in last {
            for r in &right {
                ech.insert(apply(r, x));
                if ech.rank() + 1 > last.len() {
                    break 'outer;
                }
            }
        }
        let next = ech.reduced_rows();
        assert!(next.len() < last.len(), "radical powers must decrease");
        layers.push(next);
    }
    LoewyFiltration { layers }
}
