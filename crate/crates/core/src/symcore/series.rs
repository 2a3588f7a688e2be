//! Truncated graded series Σ_n f_n with f_n homogeneous of weight n.

use crate::exactmath::{Field, Rational};

use super::{AlgebraError, Elem};

/// A series truncated at order `N`: components of weight 0..=N.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series<F: Field> {
    comps: Vec<Elem<F>>,
}

impl<F: Field> Series<F> {
    pub fn zero(order: usize) -> Self {
        Series {
            comps: (0..=order).map(Elem::zero).collect(),
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.comps[0] = Elem::one();
        s
    }

    /// Builds from components; component k must have weight k.
    pub fn from_components(comps: Vec<Elem<F>>) -> Result<Self, AlgebraError> {
        for (k, c) in comps.iter().enumerate() {
            if !c.is_zero() && c.weight() != k {
                return Err(AlgebraError::WeightMismatch(k, c.weight()));
            }
        }
        let comps = comps
            .into_iter()
            .enumerate()
            .map(|(k, c)| if c.is_zero() { Elem::zero(k) } else { c })
            .collect();
        Ok(Series { comps })
    }

    /// Builds from a generator of the components.
    pub fn from_fn(order: usize, f: impl Fn(usize) -> Elem<F>) -> Self {
        Series::from_components((0..=order).map(f).collect()).expect("component weights")
    }

    /// σ_1 = Σ S_n.
    pub fn sigma(order: usize) -> Self {
        Self::from_fn(order, Elem::s)
    }

    /// σ̄_1 = Σ S_n̄.
    pub fn sigma_bar(order: usize) -> Self {
        Self::from_fn(order, Elem::s_bar)
    }

    pub fn order(&self) -> usize {
        self.comps.len() - 1
    }

    pub fn get(&self, n: usize) -> &Elem<F> {
        &self.comps[n]
    }

    pub fn set(&mut self, n: usize, e: Elem<F>) {
        assert!(e.is_zero() || e.weight() == n);
        self.comps[n] = if e.is_zero() { Elem::zero(n) } else { e };
    }

    pub fn components(&self) -> &[Elem<F>] {
        &self.comps
    }

    pub fn truncate(&self, order: usize) -> Self {
        Series {
            comps: self.comps[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Series::from_fn(n, |k| &self.comps[k] + &other.comps[k])
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Series::from_fn(n, |k| &self.comps[k] - &other.comps[k])
    }

    pub fn scale(&self, c: &F) -> Self {
        Series {
            comps: self.comps.iter().map(|e| e.scale(c)).collect(),
        }
    }

    /// Product truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = Self::zero(n);
        for i in 0..=n {
            if self.comps[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if other.comps[j].is_zero() {
                    continue;
                }
                let p = self.comps[i].mul(&other.comps[j]);
                out.comps[i + j].add_scaled(&p, &F::one());
            }
        }
        out
    }

    /// Applies a homogeneous map componentwise.
    pub fn map(&self, f: impl Fn(&Elem<F>) -> Elem<F>) -> Self {
        Series::from_fn(self.order(), |k| f(&self.comps[k]))
    }

    /// Σ_k a_k g^k for g with zero constant term.
    fn compose(&self, coeffs: impl Fn(usize) -> Rational) -> Self {
        let n = self.order();
        let mut g = self.clone();
        g.comps[0] = Elem::zero(0);
        let mut out = Self::zero(n);
        out.comps[0] = Elem::scalar(F::from_rational(coeffs(0)));
        let mut pow = Self::one(n);
        for k in 1..=n {
            pow = pow.mul(&g);
            let a = coeffs(k);
            if a.is_zero() {
                continue;
            }
            let a = F::from_rational(a);
            for d in 0..=n {
                out.comps[d].add_scaled(&pow.comps[d], &a);
            }
        }
        out
    }

    fn require_constant(&self, c: &F) -> Result<(), AlgebraError> {
        if self.comps[0].constant() != *c {
            return Err(AlgebraError::BadConstantTerm);
        }
        Ok(())
    }

    /// exp of a series with zero constant term.
    pub fn exp(&self) -> Result<Self, AlgebraError> {
        self.require_constant(&F::zero())?;
        let mut fact = Rational::one();
        let coeffs: Vec<Rational> = (0..=self.order())
            .map(|k| {
                if k > 0 {
                    fact = &fact * &Rational::from_int(k as i64);
                }
                fact.inv().expect("nonzero")
            })
            .collect();
        Ok(self.compose(|k| coeffs[k].clone()))
    }

    /// log of a series with constant term 1.
    pub fn log(&self) -> Result<Self, AlgebraError> {
        self.require_constant(&F::one())?;
        let g = self.sub(&Self::one(self.order()));
        Ok(g.compose(|k| {
            if k == 0 {
                Rational::zero()
            } else {
                let s = if k % 2 == 1 { 1 } else { -1 };
                Rational::new(s, k as i64)
            }
        }))
    }

    /// Multiplicative inverse of a series with constant term 1.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        self.require_constant(&F::one())?;
        let g = self.sub(&Self::one(self.order()));
        Ok(g.compose(|k| Rational::from_int(if k % 2 == 0 { 1 } else { -1 })))
    }

    /// (self)^(-1/2) for constant term 1.
    pub fn inverse_sqrt(&self) -> Result<Self, AlgebraError> {
        self.require_constant(&F::one())?;
        let g = self.sub(&Self::one(self.order()));
        // binom(-1/2, k) = prod_{j<k} (-1/2 - j) / k!
        let mut c = Rational::one();
        let coeffs: Vec<Rational> = (0..=self.order())
            .map(|k| {
                if k > 0 {
                    let t = &Rational::new(-1, 2) - &Rational::from_int(k as i64 - 1);
                    c = &(&c * &t) / &Rational::from_int(k as i64);
                }
                c.clone()
            })
            .collect();
        Ok(g.compose(|k| coeffs[k].clone()))
    }

    /// Whether Δ of every component equals Σ_{i+j=n} f_i ⊗ f_j.
    pub fn is_grouplike(&self) -> bool {
        for n in 0..=self.order() {
            let lhs = self.comps[n].coproduct();
            let mut rhs = std::collections::BTreeMap::new();
            for i in 0..=n {
                for (a, x) in self.comps[i].terms() {
                    for (b, y) in self.comps[n - i].terms() {
                        let v: &mut F = rhs.entry((a.clone(), b.clone())).or_insert_with(F::zero);
                        *v = v.add_ref(&x.mul_ref(y));
                    }
                }
            }
            rhs.retain(|_, v: &mut F| !v.is_zero());
            if lhs != rhs {
                return false;
            }
        }
        true
    }
}

/// λ_{t}-type series: Λ_n = Σ_{I ⊨ n} (-1)^{n-ℓ(I)} S^I.
pub fn lambda_n<F: Field>(n: usize) -> Elem<F> {
    let mut e = Elem::zero(n);
    for c in crate::combitypes::compositions(n) {
        let sign = if (n - c.len()).is_multiple_of(2) { 1 } else { -1 };
        e.add_term((&c).into(), F::from_int(sign));
    }
    if n == 0 {
        return Elem::one();
    }
    e
}

/// λ_1 = Σ Λ_n up to `order`.
pub fn lambda_series<F: Field>(order: usize) -> Series<F> {
    Series::from_fn(order, lambda_n)
}

/// Φ_n from φ(t) = log σ_t = Σ Φ_n t^n / n.
pub fn phi_n<F: Field>(n: usize) -> Elem<F> {
    let l = Series::<F>::sigma(n).log().expect("unit constant");
    l.get(n).scale(&F::from_int(n as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    type E = Elem<Rational>;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn log_and_lambda_examples() {
        assert_eq!(phi_n::<Rational>(1), E::s(1));
        let phi2 = &E::s(2).scale_rat(&r(2, 1)) - &E::s_word(&[1, 1]);
        assert_eq!(phi_n::<Rational>(2), phi2);
        let l2 = &E::s_word(&[1, 1]) - &E::s(2);
        assert_eq!(lambda_n::<Rational>(2), l2);
    }

    #[test]
    fn lambda_inverts_sigma_at_minus_t() {
        // λ_{-t} σ_t = 1 componentwise: Σ_{a+b=n} (-1)^a Λ_a S_b = 0 for n ≥ 1.
        for n in 1..=6 {
            let mut acc = E::zero(n);
            for a in 0..=n {
                let t = lambda_n::<Rational>(a).mul(&E::s(n - a));
                let s = if a % 2 == 0 { r(1, 1) } else { r(-1, 1) };
                acc.add_scaled(&t, &s);
            }
            assert!(acc.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn series_identities() {
        let n = 9;
        let s = Series::<Rational>::sigma(n);
        assert_eq!(s.mul(&s.inverse().unwrap()), Series::one(n));
        assert_eq!(s.log().unwrap().exp().unwrap(), s);
        let h = s.inverse_sqrt().unwrap();
        assert_eq!(h.mul(&h).mul(&s), Series::one(n));
        assert!(s.is_grouplike());
        assert!(s.exp().is_err());
    }
}
