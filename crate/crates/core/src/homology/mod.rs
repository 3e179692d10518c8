//! Exact integer/rational chain-complex engine.
//!
//! Everything downstream (face homology, Čech cohomology, Deligne
//! coboundary tests) reduces to the four primitives exported here:
//! dense matrices over an exact scalar, Smith normal form with
//! unimodular transforms, homology of an integer chain complex, and
//! exact linear solvers over ℤ, ℚ and the mixed ℤ/ℚ case.

mod matrix;
mod snf;
mod solve;
mod chain;

pub use matrix::Matrix;
pub use snf::{smith_normal_form, SmithNormalForm};
pub use solve::{
    nullspace_rational, rank_rational, solve_integral, solve_mixed, solve_rational, MixedSolution,
};
pub use chain::{ChainComplex, HomologyGroup};
