//! Combinatorial models of compact manifolds with corners.
//!
//! A manifold with corners is represented purely by its oriented face
//! poset: atoms (connected completed boundary strata) graded by
//! codimension, signed passages between atoms of adjacent codimension,
//! and a chosen orientation token per codim-0 atom.  All smooth data is
//! dropped; the boundary-orientation convention lives in the passage
//! signs and is validated by the sign-coherence check here and the
//! δ² = 0 test in the face-complex module.
//!
//! A face decomposition partitions the atoms of each codimension into
//! faces.  Admissibility is the combinatorial reading of the two
//! conditions "each face embeds" and "boundaries of faces are unions of
//! faces".

mod poset;
mod validate;
mod admissible;
mod ops;
mod builders;
mod iso;

pub use poset::{
    Atom, CornersError, Face, FaceDecomposition, FaceId, FacePoset, Passage,
};
pub use validate::{validate_poset, IntervalWitness, ValidationFailure, ValidationReport};
pub use admissible::{check_admissibility, AdmissibilityReport, Violation, ViolationKind};
pub use ops::{adjacent_face, boundary_face, product, reduce};
pub use builders::{cube, interval, one_eck, point, q4_example, simplex, square};
pub use iso::isomorphic;
