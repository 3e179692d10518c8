//! Core data types for oriented face posets.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use thiserror::Error;

/// Opaque atom identifier; all outputs sort ids lexicographically.
pub type AtomId = String;

/// A face is identified by its lexicographically smallest atom id.
pub type FaceId = String;

fn default_true() -> bool {
    true
}

fn is_true(b: &bool) -> bool {
    *b
}

/// Connected completed boundary stratum of codimension `codim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Atom {
    pub id: AtomId,
    pub codim: usize,
    #[serde(default = "default_true", skip_serializing_if = "is_true")]
    pub connected: bool,
}

/// "`lower` is a boundary stratum of `upper`", with the induced-
/// orientation sign relative to the two reference orientations and the
/// number of local sheets.  A multiplicity-2 passage models a stratum
/// reached twice through the same atom (the one-eck); its sign is
/// immaterial since the two sheets carry opposite induced orientations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Passage {
    pub lower: AtomId,
    pub upper: AtomId,
    pub sign: i8,
    #[serde(default = "default_mult")]
    pub mult: u32,
}

fn default_mult() -> u32 {
    1
}

/// Oriented face-incidence structure of a manifold with corners.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacePoset {
    pub dim: usize,
    pub atoms: Vec<Atom>,
    pub passages: Vec<Passage>,
    /// Chosen orientation token (±1) per codim-0 atom; unlisted atoms
    /// default to +1.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub orientations: BTreeMap<AtomId, i8>,
}

/// One face: a set of atoms of a single codimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub codim: usize,
    pub atoms: BTreeSet<AtomId>,
}

impl Face {
    /// Lexicographically smallest atom id; faces are nonempty.
    pub fn id(&self) -> FaceId {
        self.atoms.iter().next().cloned().expect("empty face")
    }
}

/// Partition of the atoms of each codimension into faces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct FaceDecomposition {
    pub faces: Vec<Face>,
}

impl FaceDecomposition {
    /// Atomic decomposition: every atom its own face.
    pub fn atomic(poset: &FacePoset) -> Self {
        FaceDecomposition {
            faces: poset
                .sorted_atoms()
                .iter()
                .map(|a| Face { codim: a.codim, atoms: BTreeSet::from([a.id.clone()]) })
                .collect(),
        }
    }

    pub fn face(&self, id: &str) -> Option<&Face> {
        self.faces.iter().find(|f| f.atoms.contains(id))
    }

    /// Face containing the given atom.
    pub fn face_of_atom(&self, atom: &str) -> Option<&Face> {
        self.faces.iter().find(|f| f.atoms.contains(atom))
    }

    pub fn faces_of_codim(&self, codim: usize) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(move |f| f.codim == codim)
    }

    /// Sorts faces by (codim, id) in place; builders call this so that
    /// identical inputs give bit-identical outputs.
    pub fn normalize(&mut self) {
        self.faces.sort_by(|a, b| (a.codim, a.id()).cmp(&(b.codim, b.id())));
    }
}

#[derive(Debug, Error)]
pub enum CornersError {
    #[error("duplicate atom id {0:?}")]
    DuplicateAtom(AtomId),
    #[error("passage references unknown atom {0:?}")]
    UnknownAtom(AtomId),
    #[error("atom {id:?} has codim {codim} larger than dim {dim}")]
    CodimOutOfRange { id: AtomId, codim: usize, dim: usize },
    #[error("passage {lower:?} -> {upper:?} has sign {0:?}, expected ±1", .sign)]
    BadSign { lower: AtomId, upper: AtomId, sign: i8 },
    #[error("passage {lower:?} -> {upper:?} has multiplicity 0")]
    ZeroMult { lower: AtomId, upper: AtomId },
    #[error("orientation token for unknown or non-codim-0 atom {0:?}")]
    BadOrientationKey(AtomId),
    #[error("faces do not partition the atoms: {0}")]
    BadPartition(String),
    #[error("unknown face id {0:?}")]
    UnknownFace(FaceId),
    #[error("face {face:?}: codim-2 face {sub:?} is not below it")]
    NotBelow { face: FaceId, sub: FaceId },
    #[error("adjacent face is not unique for ({face:?}, {sub:?}): candidates {candidates:?}; decomposition is inadmissible")]
    AdjacentNotUnique { face: FaceId, sub: FaceId, candidates: Vec<FaceId> },
    #[error("poset failed validation: {0}")]
    Invalid(String),
    #[error("simplex dimension must be nonnegative")]
    NegativeDim,
}

/// Indexed view of a poset used by all algorithms.
pub(crate) struct Indexed<'a> {
    pub poset: &'a FacePoset,
    pub by_id: HashMap<&'a str, usize>,
    /// passages grouped as (lower index, upper index) -> (sign, mult)
    pub up: Vec<Vec<(usize, i8, u32)>>,
    pub down: Vec<Vec<(usize, i8, u32)>>,
}

impl FacePoset {
    /// Atoms sorted by id; the canonical traversal order everywhere.
    pub fn sorted_atoms(&self) -> Vec<&Atom> {
        let mut v: Vec<&Atom> = self.atoms.iter().collect();
        v.sort_by(|a, b| a.id.cmp(&b.id));
        v
    }

    pub fn atoms_of_codim(&self, codim: usize) -> Vec<&Atom> {
        self.sorted_atoms().into_iter().filter(|a| a.codim == codim).collect()
    }

    pub fn atom(&self, id: &str) -> Option<&Atom> {
        self.atoms.iter().find(|a| a.id == id)
    }

    /// Orientation token of a codim-0 atom (+1 when unlisted).
    pub fn orientation(&self, id: &str) -> i8 {
        self.orientations.get(id).copied().unwrap_or(1)
    }

    /// Structural well-formedness; distinct from validation failure.
    pub fn check_structure(&self) -> Result<(), CornersError> {
        let mut seen = BTreeSet::new();
        for a in &self.atoms {
            if !seen.insert(a.id.as_str()) {
                return Err(CornersError::DuplicateAtom(a.id.clone()));
            }
            if a.codim > self.dim {
                return Err(CornersError::CodimOutOfRange {
                    id: a.id.clone(),
                    codim: a.codim,
                    dim: self.dim,
                });
            }
        }
        for p in &self.passages {
            for end in [&p.lower, &p.upper] {
                if !seen.contains(end.as_str()) {
                    return Err(CornersError::UnknownAtom(end.clone()));
                }
            }
            if p.sign != 1 && p.sign != -1 {
                return Err(CornersError::BadSign {
                    lower: p.lower.clone(),
                    upper: p.upper.clone(),
                    sign: p.sign,
                });
            }
            if p.mult == 0 {
                return Err(CornersError::ZeroMult { lower: p.lower.clone(), upper: p.upper.clone() });
            }
        }
        for key in self.orientations.keys() {
            match self.atom(key) {
                Some(a) if a.codim == 0 => {}
                _ => return Err(CornersError::BadOrientationKey(key.clone())),
            }
        }
        Ok(())
    }

    pub(crate) fn indexed(&self) -> Result<Indexed<'_>, CornersError> {
        self.check_structure()?;
        let sorted = self.sorted_atoms();
        let by_id: HashMap<&str, usize> =
            sorted.iter().enumerate().map(|(i, a)| (a.id.as_str(), i)).collect();
        let n = sorted.len();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for p in &self.passages {
            let l = by_id[p.lower.as_str()];
            let u = by_id[p.upper.as_str()];
            up[l].push((u, p.sign, p.mult));
            down[u].push((l, p.sign, p.mult));
        }
        for v in up.iter_mut().chain(down.iter_mut()) {
            v.sort();
        }
        Ok(Indexed { poset: self, by_id, up, down })
    }
}

impl<'a> Indexed<'a> {
    pub fn atoms(&self) -> Vec<&'a Atom> {
        self.poset.sorted_atoms()
    }

    /// Sum over all multiplicity-weighted chains from `from` up to `to`
    /// (both atom indices).  Returns 0 when `from` is not below `to`.
    pub fn chain_count(&self, from: usize, to: usize) -> u64 {
        let atoms = self.atoms();
        let (cf, ct) = (atoms[from].codim, atoms[to].codim);
        if cf < ct {
            return 0;
        }
        if from == to {
            return 1;
        }
        // DP by decreasing codimension gap
        let mut counts: HashMap<usize, u64> = HashMap::from([(from, 1)]);
        for codim in (ct..cf).rev() {
            let mut next: HashMap<usize, u64> = HashMap::new();
            for (&i, &c) in &counts {
                if atoms[i].codim != codim + 1 {
                    continue;
                }
                for &(u, _, m) in &self.up[i] {
                    *next.entry(u).or_insert(0) += c * m as u64;
                }
            }
            // carry over entries already at a lower codim (cannot happen
            // with adjacent-codim passages, kept for safety)
            for (&i, &c) in &counts {
                if atoms[i].codim <= codim {
                    *next.entry(i).or_insert(0) += c;
                }
            }
            counts = next;
        }
        counts.get(&to).copied().unwrap_or(0)
    }

    /// Atom indices strictly below `top`, any codimension.
    pub fn below(&self, top: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![top];
        while let Some(i) = stack.pop() {
            for &(l, _, _) in &self.down[i] {
                if seen.insert(l) {
                    stack.push(l);
                }
            }
        }
        seen
    }
}
