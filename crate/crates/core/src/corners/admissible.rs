//! Admissibility of face decompositions.
//!
//! Condition 1 (each face embeds) is read combinatorially: in the
//! completed model of a face, a stratum of codimension gap k appears
//! once per k! multiplicity-weighted chains, so the face embeds iff
//! every strictly lower atom accumulates at most k! chains from the
//! face's atoms.  This covers both multiplicity >= 2 inside a face (the
//! one-eck) and two atoms of one face meeting along a common stratum.
//!
//! Condition 2: for every face j and every level, the set of atoms
//! below j is a union of faces.

use super::poset::{CornersError, FaceDecomposition, FaceId, FacePoset};
use super::validate::validate_poset;
use serde::Serialize;
use std::collections::BTreeSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ViolationKind {
    EmbeddingFailure,
    FaceUnionFailure,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub face: FaceId,
    /// Atoms witnessing the failure: the over-covered stratum for an
    /// embedding failure, the split face for a union failure.
    pub witnesses: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AdmissibilityReport {
    pub verdict: bool,
    pub violations: Vec<Violation>,
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// Checks that the partition is well-formed, then conditions 1 and 2.
pub fn check_admissibility(
    poset: &FacePoset,
    dec: &FaceDecomposition,
) -> Result<AdmissibilityReport, CornersError> {
    let report = validate_poset(poset)?;
    if !report.valid {
        return Err(CornersError::Invalid(format!("{:?}", report.failures)));
    }
    check_partition(poset, dec)?;
    let idx = poset.indexed()?;
    let atoms = idx.atoms();
    let mut violations = Vec::new();

    for face in &dec.faces {
        let face_idx: Vec<usize> = face.atoms.iter().map(|a| idx.by_id[a.as_str()]).collect();
        // all strata strictly below the face
        let mut strata: BTreeSet<usize> = BTreeSet::new();
        for &f in &face_idx {
            strata.extend(idx.below(f));
        }
        // condition 1
        for &s in &strata {
            let gap = atoms[s].codim - face.codim;
            let chains: u64 = face_idx.iter().map(|&f| idx.chain_count(s, f)).sum();
            if chains > factorial(gap) {
                violations.push(Violation {
                    kind: ViolationKind::EmbeddingFailure,
                    face: face.id(),
                    witnesses: vec![atoms[s].id.clone()],
                });
            }
        }
        // condition 2: per level, strata must be a union of faces
        for level in face.codim + 1..=poset.dim {
            let level_strata: BTreeSet<&str> = strata
                .iter()
                .filter(|&&s| atoms[s].codim == level)
                .map(|&s| atoms[s].id.as_str())
                .collect();
            if level_strata.is_empty() {
                continue;
            }
            for other in dec.faces_of_codim(level) {
                let inside = other.atoms.iter().filter(|a| level_strata.contains(a.as_str())).count();
                if inside != 0 && inside != other.atoms.len() {
                    violations.push(Violation {
                        kind: ViolationKind::FaceUnionFailure,
                        face: face.id(),
                        witnesses: other.atoms.iter().cloned().collect(),
                    });
                }
            }
        }
    }

    violations.sort_by(|a, b| (a.face.clone(), a.witnesses.clone()).cmp(&(b.face.clone(), b.witnesses.clone())));
    violations.dedup();
    Ok(AdmissibilityReport { verdict: violations.is_empty(), violations })
}

fn check_partition(poset: &FacePoset, dec: &FaceDecomposition) -> Result<(), CornersError> {
    let mut seen: BTreeSet<&str> = BTreeSet::new();
    for face in &dec.faces {
        if face.atoms.is_empty() {
            return Err(CornersError::BadPartition("empty face".into()));
        }
        for a in &face.atoms {
            let atom = poset
                .atom(a)
                .ok_or_else(|| CornersError::BadPartition(format!("unknown atom {a:?}")))?;
            if atom.codim != face.codim {
                return Err(CornersError::BadPartition(format!(
                    "atom {a:?} has codim {} but lies in a codim-{} face",
                    atom.codim, face.codim
                )));
            }
            if !seen.insert(a) {
                return Err(CornersError::BadPartition(format!("atom {a:?} in two faces")));
            }
        }
    }
    for atom in &poset.atoms {
        if !seen.contains(atom.id.as_str()) {
            return Err(CornersError::BadPartition(format!("atom {:?} in no face", atom.id)));
        }
    }
    Ok(())
}
