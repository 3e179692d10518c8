//! Scalar traits for the exact linear-algebra kernels.
//!
//! The matrix code is generic over the coefficient ring through these
//! traits, following the usual num-traits layering: [`Scalar`] is any
//! signed exact ring, [`EuclideanScalar`] adds division with remainder
//! (Smith normal form), [`FieldScalar`] marks rings where every nonzero
//! element is invertible (Gaussian elimination).

use num_traits::{Num, Signed};
use std::fmt::{Debug, Display};

/// Signed commutative ring with exact equality.
pub trait Scalar: Num + Signed + Clone + PartialEq + Debug + Display {}

impl<T> Scalar for T where T: Num + Signed + Clone + PartialEq + Debug + Display {}

/// Scalars supporting Euclidean division, used by the integer kernels.
pub trait EuclideanScalar: Scalar + num_integer::Integer {}

impl<T> EuclideanScalar for T where T: Scalar + num_integer::Integer {}

/// Marker for scalars forming a field; `recip` must be total on nonzero
/// input.
pub trait FieldScalar: Scalar {
    fn recip(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl FieldScalar for num_rational::BigRational {}
impl FieldScalar for f64 {}
