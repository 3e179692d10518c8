//! Integer chain complexes and their homology.

use super::{rank_rational, smith_normal_form};
use crate::{Int, IntMatrix, Rat};
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

/// Graded free ℤ-complex with boundary maps `d_k : C_k -> C_{k-1}`.
///
/// `ranks[k]` is the rank of `C_k`; `boundaries[k]` (for k >= 1) is the
/// `ranks[k-1] x ranks[k]` matrix of `d_k`.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    ranks: Vec<usize>,
    boundaries: Vec<IntMatrix>,
}

#[derive(Debug, Error)]
pub enum ComplexError {
    #[error("boundary {degree} has shape {got:?}, expected {expected:?}")]
    Shape { degree: usize, got: (usize, usize), expected: (usize, usize) },
    #[error("d_{degree} ∘ d_{} is nonzero", degree + 1)]
    SquareNonzero { degree: usize },
}

/// Finitely generated abelian group: ℤ^betti ⊕ ⊕ ℤ/torsion[i], the
/// torsion coefficients forming a divisibility chain of factors > 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub betti: usize,
    #[serde(serialize_with = "ser_ints")]
    pub torsion: Vec<Int>,
}

fn ser_ints<S: serde::Serializer>(v: &[Int], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for t in v {
        seq.serialize_element(&t.to_string())?;
    }
    seq.end()
}

impl HomologyGroup {
    pub fn free(betti: usize) -> Self {
        HomologyGroup { betti, torsion: Vec::new() }
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl std::fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".into()),
            b => parts.push(format!("Z^{b}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl ChainComplex {
    /// Builds and validates a complex.  `boundaries[k]` maps degree k+1
    /// to degree k, i.e. it is `d_{k+1}`.
    pub fn new(ranks: Vec<usize>, boundaries: Vec<IntMatrix>) -> Result<Self, ComplexError> {
        assert_eq!(boundaries.len() + 1, ranks.len().max(1), "need one boundary per adjacent pair");
        for (k, b) in boundaries.iter().enumerate() {
            let expected = (ranks[k], ranks[k + 1]);
            if (b.nrows(), b.ncols()) != expected {
                return Err(ComplexError::Shape { degree: k + 1, got: (b.nrows(), b.ncols()), expected });
            }
        }
        for k in 0..boundaries.len().saturating_sub(1) {
            if !boundaries[k].mul(&boundaries[k + 1]).is_zero() {
                return Err(ComplexError::SquareNonzero { degree: k + 1 });
            }
        }
        Ok(ChainComplex { ranks, boundaries })
    }

    pub fn top_degree(&self) -> usize {
        self.ranks.len().saturating_sub(1)
    }

    pub fn rank(&self, k: usize) -> usize {
        self.ranks.get(k).copied().unwrap_or(0)
    }

    /// The boundary `d_k : C_k -> C_{k-1}` (zero matrix outside range).
    pub fn boundary(&self, k: usize) -> IntMatrix {
        if k >= 1 && k <= self.boundaries.len() {
            self.boundaries[k - 1].clone()
        } else {
            let rows = if k >= 1 { self.rank(k - 1) } else { 0 };
            IntMatrix::zero(rows, self.rank(k))
        }
    }

    /// Homology in degree k: ker d_k / im d_{k+1}.
    ///
    /// Betti number from rational ranks, torsion from the invariant
    /// factors of d_{k+1}.
    pub fn homology(&self, k: usize) -> HomologyGroup {
        if k >= self.ranks.len() {
            return HomologyGroup::trivial();
        }
        let dk = self.boundary(k);
        let dk1 = self.boundary(k + 1);
        let rk = rank_rational(&dk.map(|e| Rat::from_integer(e.clone())));
        let rk1 = rank_rational(&dk1.map(|e| Rat::from_integer(e.clone())));
        let betti = self.rank(k) - rk - rk1;
        let snf = smith_normal_form(&dk1);
        let torsion: Vec<Int> =
            snf.diagonal().into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect();
        HomologyGroup { betti, torsion }
    }

    /// Homology of the same data read as a cochain complex: degree-k
    /// cohomology of the dual grading, i.e. ker d_{k+1}` / im d_k` after
    /// transposing.  Callers that index cochain complexes ascending can
    /// reuse `homology` by reversing, which this helper does.
    pub fn reversed(&self) -> ChainComplex {
        let n = self.ranks.len();
        let ranks: Vec<usize> = (0..n).map(|k| self.ranks[n - 1 - k]).collect();
        let boundaries: Vec<IntMatrix> =
            (0..n.saturating_sub(1)).map(|k| self.boundaries[n - 2 - k].transpose()).collect();
        ChainComplex { ranks, boundaries }
    }
}
