//! Exact scalar fields and linear algebra over them.

mod cyclo;
mod matrix;
mod rational;

use std::fmt::{Debug, Display};
use std::hash::Hash;

pub use cyclo::{cyclotomic_poly, cyclo_reduce, totient, Cyclo};
pub use matrix::{intersection, Echelon, ExactMatrix, Rref};
pub use rational::{factorial, gcd, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MathError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: order {0} vs order {1}")]
    FieldMismatch(u32, u32),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
}

/// Common interface of the two coefficient fields.
///
/// Method names avoid the `std::ops` names so that both can be in scope
/// without ambiguity.
pub trait Field: Clone + PartialEq + Eq + Hash + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn inv(&self) -> Result<Self, MathError>;
    fn from_rational(q: Rational) -> Self;
    /// The value when it lies in Q.
    fn as_rational(&self) -> Option<Rational>;
    /// Cyclotomic order this value is tied to, 0 for rationals.
    fn order(&self) -> u32;
    /// Coordinates on 1, q, q^2, ...
    fn components(&self) -> Vec<Rational>;
    fn from_components(order: u32, comps: &[Rational]) -> Self;
    /// Short description used in serialized output, e.g. `Q` or `Q(q)/Phi_3`.
    fn describe(order: u32) -> String;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_int(n))
    }

    fn scale(&self, q: &Rational) -> Self {
        self.mul_ref(&Self::from_rational(q.clone()))
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self = self.add_ref(other);
    }

    fn sub_assign_ref(&mut self, other: &Self) {
        *self = self.sub_ref(other);
    }

    /// `self += a * b`
    fn add_mul(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self = self.add_ref(&a.mul_ref(b));
    }

    fn div_ref(&self, other: &Self) -> Result<Self, MathError> {
        Ok(self.mul_ref(&other.inv()?))
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Rational::is_one(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self, MathError> {
        Rational::inv(self)
    }
    fn from_rational(q: Rational) -> Self {
        q
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn order(&self) -> u32 {
        0
    }
    fn components(&self) -> Vec<Rational> {
        vec![self.clone()]
    }
    fn from_components(_order: u32, comps: &[Rational]) -> Self {
        comps.first().cloned().unwrap_or_default()
    }
    fn describe(_order: u32) -> String {
        "Q".to_string()
    }
    fn add_mul(&mut self, a: &Self, b: &Self) {
        Rational::add_mul(self, a, b)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
}
