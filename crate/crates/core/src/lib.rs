//! Exact combinatorial index theory at desk scale.
//!
//! The crate provides, over exact integer/rational arithmetic:
//!
//! - [`corners`]: oriented face posets of manifolds with corners, face
//!   decompositions, admissibility, products and the standard builders
//!   (interval, cube, simplex, the one-eck, the paired 4-cube);
//! - [`homology`]: a dense integer/rational chain-complex engine (Smith
//!   normal form, homology with torsion, exact linear solvers);
//! - [`faces`]: the face complex of an admissible decomposition, its
//!   homology, the dual pairing, and the inductive taming-obstruction
//!   procedure driven by index suppliers;
//! - [`nerve`]: simplicial complexes, star coverings, nerves and Čech
//!   cochain calculus for constant coefficients;
//! - [`deligne`]: a discrete model of the Deligne double complex with
//!   curvature, characteristic class, coboundary testing, holonomy and
//!   cup products;
//! - [`spectral`]: exactly solvable 1D Dirac models (twisted circles,
//!   interval transmission families), spectral flow, eta invariants,
//!   finite-rank tamings, Bernoulli numbers and the circle-bundle eta
//!   form;
//! - [`ledger`]: assembly of per-nerve eta/index data into Deligne
//!   cochains, closedness verification, spectral-flow corrections and
//!   the scaled canonical class.
//!
//! All numeric kernels are generic over the scalar type through the
//! traits in [`scalar`]; the concrete instantiations used throughout the
//! crate are the exact types [`Int`] and [`Rat`] aliased below.

pub mod scalar;
pub mod homology;
pub mod corners;
pub mod faces;
pub mod nerve;
pub mod deligne;
pub mod spectral;
pub mod ledger;
pub mod json;

/// Arbitrary-precision integer used by every exact computation.
pub type Int = num_bigint::BigInt;

/// Exact rational: reduced pair of [`Int`]s, positive denominator.
pub type Rat = num_rational::BigRational;

/// Dense matrix over [`Int`].
pub type IntMatrix = homology::Matrix<Int>;

/// Dense matrix over [`Rat`].
pub type RatMatrix = homology::Matrix<Rat>;

/// Shorthand for `Int::from`.
pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// Shorthand for building a [`Rat`] from a numerator/denominator pair.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

/// Renders a rational as `"p/q"` (or `"p"` when the denominator is 1).
pub fn rat_to_string(r: &Rat) -> String {
    use num_traits::One;
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p/q"` or `"p"` into a reduced rational.
pub fn rat_from_str(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: Int = num.parse().map_err(|e| format!("bad numerator {num:?}: {e}"))?;
    let d: Int = den.parse().map_err(|e| format!("bad denominator {den:?}: {e}"))?;
    if d == Int::from(0) {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rat::new(n, d))
}
