//! A small reader for displayed expansions such as
//! `S3 - S21 + 1/3 S111` or `1/2 z2 z1^2`.
//!
//! A term is an optional rational coefficient followed by factors separated
//! by spaces; each factor is a token resolved by the caller, optionally
//! raised to a power with `^k`. Terms are separated by `+` and `-`.

use crate::exactmath::Rational;
use crate::symcore::Elem;

pub fn parse_expansion(
    text: &str,
    weight: usize,
    factor: impl Fn(&str) -> Option<Elem<Rational>>,
) -> Result<Elem<Rational>, String> {
    let mut total = Elem::zero(weight);
    let mut sign = 1;
    let mut coeff: Option<Rational> = None;
    let mut prod: Option<Elem<Rational>> = None;
    let flush = |total: &mut Elem<Rational>,
                 sign: i64,
                 coeff: Option<Rational>,
                 prod: Option<Elem<Rational>>|
     -> Result<(), String> {
        let c = coeff.unwrap_or_else(Rational::one);
        let p = prod.unwrap_or_else(Elem::one);
        if p.weight() != weight {
            return Err(format!("term of weight {} in an expansion of weight {weight}", p.weight()));
        }
        total.add_scaled(&p, &(&c * &Rational::from_int(sign)));
        Ok(())
    };
    let mut empty = true;
    for tok in text.split_whitespace() {
        match tok {
            "+" | "-" => {
                if !empty {
                    flush(&mut total, sign, coeff.take(), prod.take())?;
                }
                sign = if tok == "-" { -1 } else { 1 };
                empty = true;
            }
            _ if tok.starts_with(|c: char| c.is_ascii_digit()) => {
                if coeff.is_some() || prod.is_some() {
                    return Err(format!("misplaced coefficient {tok:?}"));
                }
                coeff = Some(tok.parse().map_err(|_| format!("bad coefficient {tok:?}"))?);
                empty = false;
            }
            _ => {
                let (name, power) = match tok.split_once('^') {
                    Some((a, b)) => (a, b.parse::<usize>().map_err(|_| format!("bad power {tok:?}"))?),
                    None => (tok, 1),
                };
                let f = factor(name).ok_or_else(|| format!("unknown factor {name:?}"))?;
                let f = f.pow(power);
                prod = Some(match prod {
                    Some(p) => p.mul(&f),
                    None => f,
                });
                empty = false;
            }
        }
    }
    if !empty {
        flush(&mut total, sign, coeff, prod)?;
    }
    Ok(total)
}

/// `S<digits>` as S^I with one-digit parts.
pub fn s_token(tok: &str) -> Option<Vec<usize>> {
    let digits = tok.strip_prefix('S')?;
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit() && c != '0') {
        return None;
    }
    Some(digits.chars().map(|c| c as usize - '0' as usize).collect())
}

/// `<prefix><k>` as an index k.
pub fn indexed(tok: &str, prefix: &str) -> Option<usize> {
    tok.strip_prefix(prefix)?.parse().ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_terms() {
        let f = |t: &str| s_token(t).map(|p| Elem::s_word(&p));
        let e = parse_expansion("S2 - 1/2 S11", 2, f).unwrap();
        let expect = &Elem::s(2) - &Elem::s_word(&[1, 1]).scale_rat(&Rational::new(1, 2));
        assert_eq!(e, expect);
        let e = parse_expansion("1/2 S1^2 + S2", 2, f).unwrap();
        assert_eq!(e, &Elem::s_word(&[1, 1]).scale_rat(&Rational::new(1, 2)) + &Elem::s(2));
        assert!(parse_expansion("S2 + S1", 2, f).is_err());
        assert!(parse_expansion("S2 + x", 2, f).is_err());
    }
}
