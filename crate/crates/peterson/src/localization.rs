use std::sync::Arc;

use num::Zero;
use polyring::{Polynomial, Rational, VariableContext};

use crate::PetersonError;

/// A class restricted to a list of fixed points. Every value is `c·t^d`
/// for one common degree `d`; only the coefficients `c` are stored.
#[derive(Debug, PartialEq, Eq)]
pub struct LocalizationElement<P> {
    points: Arc<Vec<P>>,
    degree: u32,
    values: Vec<Rational>,
}

impl<P> Clone for LocalizationElement<P> {
    fn clone(&self) -> Self {
        LocalizationElement { points: self.points.clone(), degree: self.degree, values: self.values.clone() }
    }
}

impl<P> LocalizationElement<P> {
    pub fn new(points: Arc<Vec<P>>, degree: u32, values: Vec<Rational>) -> Self {
        assert_eq!(points.len(), values.len(), "one value per fixed point");
        LocalizationElement { points, degree, values }
    }

    pub fn zero(points: Arc<Vec<P>>, degree: u32) -> Self {
        let values = vec![Rational::zero(); points.len()];
        LocalizationElement { points, degree, values }
    }

    pub fn constant(points: Arc<Vec<P>>, c: Rational) -> Self {
        let values = vec![c; points.len()];
        LocalizationElement { points, degree: 0, values }
    }

    pub fn points(&self) -> &Arc<Vec<P>> {
        &self.points
    }

    /// Polynomial degree in `t` (half the cohomological degree).
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Coefficients of `t^d`, one per fixed point.
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    /// The value at the `k`-th point as a polynomial in `t`.
    pub fn value_poly(&self, k: usize) -> Polynomial {
        Polynomial::monomial(&VariableContext::circle(), vec![self.degree], self.values[k].clone())
    }

    fn check(&self, other: &Self) -> Result<(), PetersonError> {
        if self.points.len() != other.points.len() {
            return Err(PetersonError::PointMismatch);
        }
        Ok(())
    }

    /// Pointwise product; degrees add.
    pub fn try_mul(&self, other: &Self) -> Result<Self, PetersonError> {
        self.check(other)?;
        Ok(LocalizationElement {
            points: self.points.clone(),
            degree: self.degree + other.degree,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect(),
        })
    }

    /// Pointwise sum. Degrees must agree unless one side is zero.
    pub fn try_add(&self, other: &Self) -> Result<Self, PetersonError> {
        self.check(other)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.degree != other.degree {
            return Err(PetersonError::DegreeMismatch(self.degree, other.degree));
        }
        Ok(LocalizationElement {
            points: self.points.clone(),
            degree: self.degree,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PetersonError> {
        self.try_add(&other.scale(&-Rational::from_integer(1.into())))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LocalizationElement {
            points: self.points.clone(),
            degree: self.degree,
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    /// Multiplication by `t`.
    pub fn mul_t(&self) -> Self {
        LocalizationElement { points: self.points.clone(), degree: self.degree + 1, values: self.values.clone() }
    }

    /// Same values over a relabelled (same-length) point list.
    pub fn relabel<Q>(&self, points: Arc<Vec<Q>>) -> LocalizationElement<Q> {
        LocalizationElement::new(points, self.degree, self.values.clone())
    }
}
