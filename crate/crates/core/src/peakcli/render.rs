//! JSON, LaTeX and text forms of elements and matrices.

use serde::{Deserialize, Serialize};

use crate::combitypes::HeadedPartition;
use crate::exactmath::{Cyclo, Field, Rational};
use crate::reptheory::{CartanMatrix, Poly};
use crate::symcore::{Elem, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub label: String,
    pub coeff: String,
}

/// `{"weight", "field", "terms": [{"label", "coeff"}]}`; labels are S-basis
/// words (`2.1`, with `'` on barred letters), coefficients exact strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub weight: usize,
    pub field: String,
    pub terms: Vec<TermJson>,
}

impl ElementJson {
    pub fn new<F: Field>(e: &Elem<F>) -> Self {
        ElementJson {
            weight: e.weight(),
            field: F::describe(e.field_order()),
            terms: e
                .terms()
                .iter()
                .map(|(w, c)| TermJson {
                    label: w.to_string(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }

    /// Cyclotomic order named by `field`, 0 for Q.
    pub fn order(&self) -> Result<u32, String> {
        if self.field == "Q" {
            return Ok(0);
        }
        self.field
            .strip_prefix("Q(q)/Phi_")
            .and_then(|r| r.parse().ok())
            .ok_or_else(|| format!("unknown field {:?}", self.field))
    }

    pub fn to_elem<F: Field>(&self) -> Result<Elem<F>, String> {
        let order = self.order()?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let w: Word = t.label.parse().map_err(|e| format!("label {:?}: {e}", t.label))?;
            let c = if order == 0 {
                let q: Rational = t.coeff.parse().map_err(|_| format!("coefficient {:?}", t.coeff))?;
                F::from_rational(q)
            } else {
                let c = Cyclo::parse(&t.coeff, order).map_err(|e| e.to_string())?;
                F::from_components(order, &c.components())
            };
            terms.push((w, c));
        }
        Elem::from_terms(self.weight, terms).map_err(|e| e.to_string())
    }
}

/// `S^{2.1}` style words become `S^{21}` when every part is a single digit.
fn latex_word(w: &Word) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let small = w.letters().iter().all(|l| l.size() < 10);
    let sep = if small { "" } else { "," };
    let parts: Vec<String> = w
        .letters()
        .iter()
        .map(|l| {
            if l.bar() {
                format!("\\bar{{{}}}", l.size())
            } else {
                l.size().to_string()
            }
        })
        .collect();
    if w.len() == 1 && !w.has_bar() {
        format!("S_{{{}}}", parts[0])
    } else {
        format!("S^{{{}}}", parts.join(sep))
    }
}

fn latex_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom())
    }
}

pub fn element_latex<F: Field>(e: &Elem<F>) -> String {
    if e.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, (w, c)) in e.terms().iter().enumerate() {
        let body = latex_word(w);
        match c.as_rational() {
            Some(q) => {
                let sign = if q.is_negative() { "-" } else if k > 0 { "+" } else { "" };
                let a = q.abs();
                if k > 0 {
                    s.push(' ');
                }
                s.push_str(sign);
                if k > 0 {
                    s.push(' ');
                }
                if !a.is_one() || w.is_empty() {
                    s.push_str(&latex_rational(&a));
                    if !w.is_empty() {
                        s.push(' ');
                    }
                }
                if !w.is_empty() {
                    s.push_str(&body);
                }
            }
            None => {
                if k > 0 {
                    s.push_str(" + ");
                }
                s.push_str(&format!("({c}) {body}"));
            }
        }
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub name: String,
    pub labels: Vec<String>,
    /// Coefficient lists in t, constant term first.
    pub entries: Vec<Vec<Poly>>,
}

impl MatrixJson {
    pub fn new(name: &str, m: &CartanMatrix) -> Self {
        MatrixJson {
            name: name.to_string(),
            labels: m.labels.iter().map(ToString::to_string).collect(),
            entries: m.entries.clone(),
        }
    }

    pub fn to_matrix(&self) -> Result<CartanMatrix, String> {
        let labels = self
            .labels
            .iter()
            .map(|l| l.parse::<HeadedPartition>().map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        if self.entries.len() != labels.len() || self.entries.iter().any(|r| r.len() != labels.len()) {
            return Err("entries do not match the labels".into());
        }
        Ok(CartanMatrix {
            labels,
            entries: self.entries.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::peakcore::theta;

    #[test]
    fn element_round_trip() {
        let e = &Elem::<Rational>::s_word(&[2, 1]) - &Elem::s_word(&[1, 1, 1]).scale_rat(&Rational::new(1, 3));
        let j = ElementJson::new(&e);
        assert_eq!(j.field, "Q");
        let text = serde_json::to_string(&j).unwrap();
        let back: ElementJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_elem::<Rational>().unwrap(), e);
        assert_eq!(element_latex(&e), "S^{21} - \\frac{1}{3} S^{111}");
    }

    #[test]
    fn cyclotomic_round_trip() {
        let e = theta(&Elem::<Rational>::s_word(&[2, 1]), 3).unwrap();
        let j = ElementJson::new(&e);
        assert_eq!(j.order().unwrap(), 3);
        assert_eq!(j.to_elem::<Cyclo>().unwrap(), e);
    }

    #[test]
    fn matrix_round_trip() {
        let m = crate::peakcli::golden::golden_table(4, 2).unwrap().unwrap().matrix;
        let j = MatrixJson::new("C", &m);
        let back: MatrixJson = serde_json::from_str(&serde_json::to_string(&j).unwrap()).unwrap();
        assert_eq!(back.to_matrix().unwrap(), m);
    }
}
