//! Built-in posets: cubes, simplices, the one-eck, and the paired
//! 4-cube.

use super::poset::{Atom, CornersError, Face, FaceDecomposition, FacePoset, Passage};
use std::collections::{BTreeMap, BTreeSet};

/// The cube [0,1]^n with atomic face decomposition.
///
/// Atom ids are coordinate words over {0, 1, x}, `x` marking an
/// interior coordinate; codimension is the number of non-`x` letters.
/// The passage flipping coordinate i of atom `a` from 0/1 to `x`
/// carries the sign (-1)^(number of `x` letters after position i),
/// which is the boundary-orientation bookkeeping of the iterated
/// product of intervals under the inward-normal-last convention.
pub fn cube(n: usize) -> (FacePoset, FaceDecomposition) {
    let mut atoms = Vec::new();
    let mut passages = Vec::new();
    let words = coordinate_words(n);
    for w in &words {
        let codim = w.chars().filter(|&c| c != 'x').count();
        atoms.push(Atom { id: w.clone(), codim, connected: true });
        for (i, c) in w.chars().enumerate() {
            if c == 'x' {
                continue;
            }
            let mut upper: Vec<char> = w.chars().collect();
            upper[i] = 'x';
            let twist = w.chars().skip(i + 1).filter(|&c| c == 'x').count();
            passages.push(Passage {
                lower: w.clone(),
                upper: upper.into_iter().collect(),
                sign: if twist % 2 == 0 { 1 } else { -1 },
                mult: 1,
            });
        }
    }
    let interior: String = "x".repeat(n);
    let poset = FacePoset {
        dim: n,
        atoms,
        passages,
        orientations: BTreeMap::from([(interior, 1)]),
    };
    let dec = FaceDecomposition::atomic(&poset);
    (poset, dec)
}

fn coordinate_words(n: usize) -> Vec<String> {
    let mut words = vec![String::new()];
    for _ in 0..n {
        words = words
            .into_iter()
            .flat_map(|w| ['0', '1', 'x'].map(|c| format!("{w}{c}")))
            .collect();
    }
    words.sort();
    words
}

/// A single point.
pub fn point() -> (FacePoset, FaceDecomposition) {
    cube(0)
}

/// The interval [0,1] with atomic decomposition ({0}, {1}).
pub fn interval() -> (FacePoset, FaceDecomposition) {
    cube(1)
}

/// The square [0,1]^2 with atomic decomposition.
pub fn square() -> (FacePoset, FaceDecomposition) {
    cube(2)
}

/// The interval with both endpoints merged into one face.
pub fn interval_merged() -> (FacePoset, FaceDecomposition) {
    let (p, _) = interval();
    let dec = FaceDecomposition {
        faces: vec![
            Face { codim: 0, atoms: BTreeSet::from(["x".to_string()]) },
            Face { codim: 1, atoms: BTreeSet::from(["0".to_string(), "1".to_string()]) },
        ],
    };
    (p, dec)
}

/// The n-simplex with atomic decomposition.
///
/// Atoms of codimension k are the k-element subsets S of {0..n} (the
/// face where the barycentric coordinates indexed by S vanish).  The
/// passage S -> S\{j} carries the sign (-1)^(rank of j among the
/// complement of S\{j}), realizing the boundary identifications
/// ∂_j Δ^n ≅ (-1)^j Δ^(n-1).
pub fn simplex(n: i64) -> Result<(FacePoset, FaceDecomposition), CornersError> {
    if n < 0 {
        return Err(CornersError::NegativeDim);
    }
    let n = n as usize;
    let mut atoms = Vec::new();
    let mut passages = Vec::new();
    for s in subsets(n + 1) {
        if s.len() > n {
            continue; // dropping all n+1 coordinates leaves nothing
        }
        atoms.push(Atom { id: subset_id(&s), codim: s.len(), connected: true });
        for &j in &s {
            let upper: Vec<usize> = s.iter().copied().filter(|&x| x != j).collect();
            let complement: Vec<usize> = (0..=n).filter(|x| !upper.contains(x)).collect();
            let rank = complement.iter().position(|&x| x == j).expect("j in complement");
            passages.push(Passage {
                lower: subset_id(&s),
                upper: subset_id(&upper),
                sign: if rank % 2 == 0 { 1 } else { -1 },
                mult: 1,
            });
        }
    }
    let poset = FacePoset {
        dim: n,
        atoms,
        passages,
        orientations: BTreeMap::from([(subset_id(&[]), 1)]),
    };
    let dec = FaceDecomposition::atomic(&poset);
    Ok((poset, dec))
}

fn subsets(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    for i in 0..n {
        let mut with_i: Vec<Vec<usize>> = out
            .iter()
            .map(|s| {
                let mut t = s.clone();
                t.push(i);
                t
            })
            .collect();
        out.append(&mut with_i);
    }
    out
}

fn subset_id(s: &[usize]) -> String {
    if s.is_empty() {
        "s".to_string()
    } else {
        format!("s{}", s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("_"))
    }
}

/// The one-eck: a disc whose single boundary atom meets itself in one
/// corner.  Valid as a poset, but no face decomposition is admissible.
pub fn one_eck() -> (FacePoset, FaceDecomposition) {
    let poset = FacePoset {
        dim: 2,
        atoms: vec![
            Atom { id: "corner".into(), codim: 2, connected: true },
            Atom { id: "disc".into(), codim: 0, connected: true },
            Atom { id: "rim".into(), codim: 1, connected: true },
        ],
        passages: vec![
            Passage { lower: "rim".into(), upper: "disc".into(), sign: 1, mult: 1 },
            Passage { lower: "corner".into(), upper: "rim".into(), sign: 1, mult: 2 },
        ],
        orientations: BTreeMap::from([("disc".to_string(), 1)]),
    };
    let dec = FaceDecomposition::atomic(&poset);
    (poset, dec)
}

/// The 4-cube with the face decomposition pairing antipodal atoms
/// (reflection through the center).  Admissible; its face homology has
/// 2-torsion in degree 3.
pub fn q4_example() -> (FacePoset, FaceDecomposition) {
    let (poset, _) = cube(4);
    let mut paired: Vec<Face> = Vec::new();
    let mut used: BTreeSet<String> = BTreeSet::new();
    for a in poset.sorted_atoms() {
        if used.contains(&a.id) {
            continue;
        }
        let anti = antipode(&a.id);
        used.insert(a.id.clone());
        used.insert(anti.clone());
        let atoms = if a.codim == 0 {
            BTreeSet::from([a.id.clone()])
        } else {
            BTreeSet::from([a.id.clone(), anti])
        };
        paired.push(Face { codim: a.codim, atoms });
    }
    let mut dec = FaceDecomposition { faces: paired };
    dec.normalize();
    (poset, dec)
}

fn antipode(id: &str) -> String {
    id.chars()
        .map(|c| match c {
            '0' => '1',
            '1' => '0',
            other => other,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corners::validate_poset;

    fn counts_by_codim(p: &FacePoset) -> Vec<usize> {
        let mut v = vec![0usize; p.dim + 1];
        for a in &p.atoms {
            v[a.codim] += 1;
        }
        v
    }

    #[test]
    fn cube_counts() {
        assert_eq!(counts_by_codim(&cube(0).0), vec![1]);
        assert_eq!(counts_by_codim(&cube(1).0), vec![1, 2]);
        assert_eq!(counts_by_codim(&cube(2).0), vec![1, 4, 4]);
        assert_eq!(counts_by_codim(&cube(3).0), vec![1, 6, 12, 8]);
        assert_eq!(counts_by_codim(&cube(4).0), vec![1, 8, 24, 32, 16]);
    }

    #[test]
    fn cubes_validate() {
        for n in 0..=4 {
            let (p, _) = cube(n);
            let r = validate_poset(&p).unwrap();
            assert!(r.valid, "cube({n}): {:?}", r.failures);
        }
    }

    #[test]
    fn simplex_counts_and_validity() {
        // binomial counts: codim k has C(n+1, k) atoms
        let (p, _) = simplex(2).unwrap();
        assert_eq!(counts_by_codim(&p), vec![1, 3, 3]);
        for n in 0..=4 {
            let (p, _) = simplex(n).unwrap();
            let r = validate_poset(&p).unwrap();
            assert!(r.valid, "simplex({n}): {:?}", r.failures);
        }
        assert!(simplex(-1).is_err());
    }

    #[test]
    fn q4_face_counts() {
        let (_, dec) = q4_example();
        let mut v = vec![0usize; 5];
        for f in &dec.faces {
            v[f.codim] += 1;
        }
        assert_eq!(v, vec![1, 4, 12, 16, 8]);
    }

    #[test]
    fn square_corner_under_two_edges() {
        let (p, _) = square();
        let corners: Vec<_> = p.atoms_of_codim(2);
        for c in corners {
            let ups: Vec<_> = p.passages.iter().filter(|q| q.lower == c.id).collect();
            assert_eq!(ups.len(), 2, "corner {} not under exactly 2 edges", c.id);
            assert!(ups.iter().all(|q| q.mult == 1));
        }
    }
}
