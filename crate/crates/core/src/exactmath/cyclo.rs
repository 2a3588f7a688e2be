//! The cyclotomic field Q[q]/Φ_r(q).

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use super::{Field, MathError, Rational};

/// Largest order with a precomputed cyclotomic polynomial.
const MAX_ORDER: usize = 128;

fn poly_table() -> &'static Vec<Vec<i64>> {
    static TABLE: OnceLock<Vec<Vec<i64>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table: Vec<Vec<i64>> = vec![Vec::new(); MAX_ORDER + 1];
        for r in 1..=MAX_ORDER {
            // x^r - 1 divided by every Φ_d with d a proper divisor of r.
            let mut num = vec![0i64; r + 1];
            num[0] = -1;
            num[r] = 1;
            for d in 1..r {
                if r % d == 0 {
                    num = exact_div(&num, &table[d]);
                }
            }
            table[r] = num;
        }
        table
    })
}

/// Division of integer polynomials by a monic divisor known to divide exactly.
fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = num.len() - 1;
    let mut quot = vec![0i64; nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (j, &b) in den.iter().enumerate() {
                rem[k + j] -= c * b;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

/// Coefficients (constant term first) of the r-th cyclotomic polynomial.
pub fn cyclotomic_poly(r: u32) -> &'static [i64] {
    assert!(
        (1..=MAX_ORDER as u32).contains(&r),
        "cyclotomic order {r} out of range"
    );
    &poly_table()[r as usize]
}

/// Euler's totient, the degree of Φ_r.
pub fn totient(r: u32) -> usize {
    cyclotomic_poly(r).len() - 1
}

/// An element of Q[q]/Φ_r(q).
///
/// Coefficients are stored constant term first with trailing zeros trimmed.
/// Elements of degree 0 carry order 0 so that they behave as rationals and mix
/// with any order; this also makes every element of Q(q) for r ≤ 2 a plain
/// rational.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclo {
    order: u32,
    coeffs: Vec<Rational>,
}

/// Reduces a rational polynomial modulo Φ_r.
pub fn cyclo_reduce(poly: &[Rational], r: u32) -> Cyclo {
    let phi = cyclotomic_poly(r);
    let d = phi.len() - 1;
    let mut c = poly.to_vec();
    if c.len() > d {
        for k in (d..c.len()).rev() {
            if c[k].is_zero() {
                continue;
            }
            let lead = std::mem::take(&mut c[k]);
            for (j, &p) in phi.iter().enumerate().take(d) {
                if p != 0 {
                    c[k - d + j] -= &lead.mul_int(p);
                }
            }
        }
        c.truncate(d);
    }
    Cyclo::canonical(r, c)
}

impl Cyclo {
    fn canonical(order: u32, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let order = if coeffs.len() <= 1 { 0 } else { order };
        Cyclo { order, coeffs }
    }

    pub fn from_rational(q: Rational) -> Self {
        Cyclo::canonical(0, vec![q])
    }

    /// The generator q of Q[q]/Φ_r.
    pub fn generator(r: u32) -> Self {
        cyclo_reduce(&[Rational::zero(), Rational::one()], r)
    }

    /// Raises the generator to `k` (any integer), reduced modulo Φ_r.
    pub fn generator_pow(r: u32, k: i64) -> Self {
        let e = k.rem_euclid(r as i64) as usize;
        let mut poly = vec![Rational::zero(); e + 1];
        poly[e] = Rational::one();
        cyclo_reduce(&poly, r)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn joint_order(&self, other: &Self) -> u32 {
        match (self.order, other.order) {
            (0, o) | (o, 0) => o,
            (a, b) if a == b => a,
            (a, b) => panic!("{}", MathError::FieldMismatch(a, b)),
        }
    }

    /// Checked variant of the order compatibility test.
    pub fn check_compatible(&self, other: &Self) -> Result<u32, MathError> {
        match (self.order, other.order) {
            (0, o) | (o, 0) => Ok(o),
            (a, b) if a == b => Ok(a),
            (a, b) => Err(MathError::FieldMismatch(a, b)),
        }
    }

    fn add_impl(&self, other: &Self, sign: i64) -> Self {
        let order = self.joint_order(other);
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut c = Vec::with_capacity(len);
        for k in 0..len {
            let a = self.coeffs.get(k).cloned().unwrap_or_default();
            match other.coeffs.get(k) {
                Some(b) if sign > 0 => c.push(&a + b),
                Some(b) => c.push(&a - b),
                None => c.push(a),
            }
        }
        Cyclo::canonical(order, c)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        let order = self.joint_order(other);
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Cyclo::canonical(0, Vec::new());
        }
        if self.coeffs.len() == 1 || other.coeffs.len() == 1 {
            let (s, v) = if self.coeffs.len() == 1 {
                (&self.coeffs[0], other)
            } else {
                (&other.coeffs[0], self)
            };
            return Cyclo::canonical(order, v.coeffs.iter().map(|c| c * s).collect());
        }
        let mut prod = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                prod[i + j].add_mul(a, b);
            }
        }
        cyclo_reduce(&prod, order)
    }

    fn inv_impl(&self) -> Result<Self, MathError> {
        if self.coeffs.is_empty() {
            return Err(MathError::DivisionByZero);
        }
        if self.coeffs.len() == 1 {
            return Ok(Cyclo::from_rational(self.coeffs[0].inv()?));
        }
        // Extended Euclid: track s with s·self ≡ r (mod Φ).
        let phi: Vec<Rational> = cyclotomic_poly(self.order)
            .iter()
            .map(|&c| Rational::from_int(c))
            .collect();
        let (mut r0, mut r1) = (phi, self.coeffs.clone());
        let (mut s0, mut s1) = (Vec::<Rational>::new(), vec![Rational::one()]);
        while r1.len() > 1 {
            let (q, r) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // Φ_r is irreducible, so the final remainder is a nonzero constant.
        let c = r1[0].inv()?;
        let s: Vec<Rational> = s1.iter().map(|x| x * &c).collect();
        Ok(cyclo_reduce(&s, self.order))
    }

    /// Substitutes q ↦ q^k (a Galois automorphism when gcd(k, r) = 1).
    pub fn galois(&self, k: i64) -> Self {
        if self.order == 0 {
            return self.clone();
        }
        let r = self.order;
        let mut acc = Cyclo::from_rational(Rational::zero());
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = Cyclo::generator_pow(r, k * e as i64).mul_impl(&Cyclo::from_rational(c.clone()));
            acc = acc.add_impl(&term, 1);
        }
        acc
    }
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut p = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            p[i + j].add_mul(x, y);
        }
    }
    trim(p)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let len = a.len().max(b.len());
    let p = (0..len)
        .map(|k| {
            let x = a.get(k).cloned().unwrap_or_default();
            match b.get(k) {
                Some(y) => &x - y,
                None => x,
            }
        })
        .collect();
    trim(p)
}

fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = trim(a.to_vec());
    let b = trim(b.to_vec());
    let db = b.len() - 1;
    let lead_inv = b[db].inv().expect("nonzero divisor");
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = &c * y;
            rem[k + j] -= &t;
        }
        quot[k] = c;
    }
    (trim(quot), trim(rem))
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Renders as a polynomial in `q`, e.g. `1/2 - 3*q + q^2`.
impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{k}"),
            };
            if k == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{a}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl Cyclo {
    /// Parses the [`Display`](fmt::Display) form in the field of order `r`.
    pub fn parse(s: &str, r: u32) -> Result<Self, MathError> {
        let bad = || MathError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') {
                terms.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else if ch == '-' && i == 0 {
                neg = true;
            } else if ch == '+' && i == 0 {
            } else {
                cur.push(ch);
            }
        }
        terms.push((neg, cur));
        let mut poly: Vec<Rational> = Vec::new();
        for (neg, t) in terms {
            if t.is_empty() {
                return Err(bad());
            }
            let (coef, exp) = match t.find('q') {
                None => (Rational::from_str(&t)?, 0usize),
                Some(pos) => {
                    let head = t[..pos].trim_end_matches('*');
                    let coef = if head.is_empty() {
                        Rational::one()
                    } else {
                        Rational::from_str(head)?
                    };
                    let tail = &t[pos + 1..];
                    let exp = if tail.is_empty() {
                        1
                    } else {
                        tail.strip_prefix('^')
                            .and_then(|e| e.parse::<usize>().ok())
                            .ok_or_else(bad)?
                    };
                    (coef, exp)
                }
            };
            if poly.len() <= exp {
                poly.resize(exp + 1, Rational::zero());
            }
            if neg {
                poly[exp] -= &coef;
            } else {
                poly[exp] += &coef;
            }
        }
        if poly.len() > 1 && r == 0 {
            return Err(bad());
        }
        if r == 0 {
            return Ok(Cyclo::from_rational(poly.pop().unwrap_or_default()));
        }
        Ok(cyclo_reduce(&poly, r))
    }
}

impl Field for Cyclo {
    fn zero() -> Self {
        Cyclo::canonical(0, Vec::new())
    }
    fn one() -> Self {
        Cyclo::from_rational(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.add_impl(other, 1)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.add_impl(other, -1)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul_impl(other)
    }
    fn neg_ref(&self) -> Self {
        Cyclo {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn inv(&self) -> Result<Self, MathError> {
        self.inv_impl()
    }
    fn from_rational(q: Rational) -> Self {
        Cyclo::from_rational(q)
    }
    fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }
    fn order(&self) -> u32 {
        self.order
    }
    fn components(&self) -> Vec<Rational> {
        self.coeffs.clone()
    }
    fn from_components(order: u32, comps: &[Rational]) -> Self {
        if comps.len() <= 1 {
            return Cyclo::canonical(0, comps.to_vec());
        }
        cyclo_reduce(comps, order)
    }
    fn describe(order: u32) -> String {
        if order <= 2 {
            "Q".to_string()
        } else {
            format!("Q(q)/Phi_{order}")
        }
    }
    fn scale(&self, q: &Rational) -> Self {
        Cyclo::canonical(self.order, self.coeffs.iter().map(|c| c * q).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(r: u32) -> Cyclo {
        Cyclo::generator(r)
    }

    fn rat(n: i64, d: i64) -> Cyclo {
        Cyclo::from_rational(Rational::new(n, d))
    }

    #[test]
    fn reduce_examples() {
        let one = Rational::one();
        let z = Rational::zero();
        assert_eq!(cyclo_reduce(&[z.clone(), one.clone()], 2), rat(-1, 1));
        assert_eq!(
            cyclo_reduce(&[z.clone(), z.clone(), z.clone(), one.clone()], 3),
            rat(1, 1)
        );
        assert_eq!(cyclo_reduce(&[z.clone(), z, one], 4), rat(-1, 1));
    }

    #[test]
    fn inverse_examples() {
        let x = Cyclo::one().sub_ref(&q(2));
        assert_eq!(x.inv().unwrap(), rat(1, 2));
        assert_eq!(q(4).inv().unwrap(), q(4).neg_ref());
        let y = Cyclo::one().sub_ref(&q(3));
        let expect = rat(2, 3).add_ref(&q(3).scale(&Rational::new(1, 3)));
        assert_eq!(y.inv().unwrap(), expect);
        assert_eq!(Cyclo::zero().inv(), Err(MathError::DivisionByZero));
    }

    #[test]
    fn known_polynomials() {
        assert_eq!(cyclotomic_poly(1), &[-1, 1]);
        assert_eq!(cyclotomic_poly(6), &[1, -1, 1]);
        assert_eq!(cyclotomic_poly(8), &[1, 0, 0, 0, 1]);
        assert_eq!(totient(12), 4);
    }

    #[test]
    fn product_of_divisor_polys_is_xr_minus_one() {
        for r in 1..=12u32 {
            let mut acc = vec![1i64];
            for d in (1..=r).filter(|d| r % d == 0) {
                let p = cyclotomic_poly(d);
                let mut next = vec![0i64; acc.len() + p.len() - 1];
                for (i, a) in acc.iter().enumerate() {
                    for (j, b) in p.iter().enumerate() {
                        next[i + j] += a * b;
                    }
                }
                acc = next;
            }
            let mut expect = vec![0i64; r as usize + 1];
            expect[0] = -1;
            expect[r as usize] = 1;
            assert_eq!(acc, expect, "r = {r}");
        }
    }

    #[test]
    fn display_parse_round_trip() {
        let x = rat(1, 2).sub_ref(&q(5).scale(&Rational::from_int(3))).add_ref(&Cyclo::generator_pow(5, 2));
        let s = x.to_string();
        assert_eq!(s, "1/2 - 3*q + q^2");
        assert_eq!(Cyclo::parse(&s, 5).unwrap(), x);
        assert_eq!(Cyclo::parse("-q^3", 4).unwrap(), q(4));
    }

    #[test]
    #[should_panic]
    fn mixing_orders_panics() {
        let _ = q(3).add_ref(&q(5));
    }

    #[test]
    fn mismatch_reported() {
        assert_eq!(
            q(3).check_compatible(&q(5)),
            Err(MathError::FieldMismatch(3, 5))
        );
        assert_eq!(q(3).check_compatible(&rat(2, 1)), Ok(3));
    }

    fn arb_cyclo() -> impl Strategy<Value = (u32, Vec<(i64, i64)>)> {
        (1u32..=12).prop_flat_map(|r| {
            let d = totient(r);
            (
                Just(r),
                prop::collection::vec((-20i64..=20, 1i64..=6), d..=d + 2),
            )
        })
    }

    fn build(r: u32, c: &[(i64, i64)]) -> Cyclo {
        let poly: Vec<Rational> = c.iter().map(|&(n, d)| Rational::new(n, d)).collect();
        cyclo_reduce(&poly, r)
    }

    proptest! {
        #[test]
        fn field_axioms((r, a) in arb_cyclo(), b in prop::collection::vec((-20i64..=20, 1i64..=6), 0..8),
                        c in prop::collection::vec((-20i64..=20, 1i64..=6), 0..8)) {
            let x = build(r, &a);
            let y = build(r, &b);
            let z = build(r, &c);
            prop_assert_eq!(x.mul_ref(&y).mul_ref(&z), x.mul_ref(&y.mul_ref(&z)));
            prop_assert_eq!(x.add_ref(&y).add_ref(&z), x.add_ref(&y.add_ref(&z)));
            prop_assert_eq!(x.mul_ref(&y.add_ref(&z)), x.mul_ref(&y).add_ref(&x.mul_ref(&z)));
            prop_assert_eq!(x.mul_ref(&y), y.mul_ref(&x));
            if !x.is_zero() {
                prop_assert_eq!(x.mul_ref(&x.inv().unwrap()), Cyclo::one());
            }
        }

        #[test]
        fn rational_axioms(a in (-1000i64..1000, 1i64..50), b in (-1000i64..1000, 1i64..50), c in (-1000i64..1000, 1i64..50)) {
            let x = Rational::new(a.0, a.1);
            let y = Rational::new(b.0, b.1);
            let z = Rational::new(c.0, c.1);
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            if !x.is_zero() {
                prop_assert_eq!(&x * &x.inv().unwrap(), Rational::one());
            }
        }
    }
}
