//! Products, boundary faces, adjacency, reduction.

use super::poset::{
    Atom, CornersError, Face, FaceDecomposition, FaceId, FacePoset, Passage,
};
use std::collections::{BTreeMap, BTreeSet};

/// Product of two decomposed posets.
///
/// Atoms are pairs with codimensions added.  A boundary passage taken
/// in the left factor is twisted by (-1)^(dimension of the right atom),
/// the inward-normal-last convention for product orientations; right-
/// factor passages are untwisted.
pub fn product(
    p1: &FacePoset,
    d1: &FaceDecomposition,
    p2: &FacePoset,
    d2: &FaceDecomposition,
) -> Result<(FacePoset, FaceDecomposition), CornersError> {
    p1.check_structure()?;
    p2.check_structure()?;
    let pair_id = |a: &str, b: &str| format!("({a},{b})");
    let mut atoms = Vec::new();
    for a in p1.sorted_atoms() {
        for b in p2.sorted_atoms() {
            atoms.push(Atom {
                id: pair_id(&a.id, &b.id),
                codim: a.codim + b.codim,
                connected: a.connected && b.connected,
            });
        }
    }
    let mut passages = Vec::new();
    for q in &p1.passages {
        for b in p2.sorted_atoms() {
            let dim_b = p2.dim - b.codim;
            let twist = if dim_b % 2 == 0 { 1 } else { -1 };
            passages.push(Passage {
                lower: pair_id(&q.lower, &b.id),
                upper: pair_id(&q.upper, &b.id),
                sign: q.sign * twist,
                mult: q.mult,
            });
        }
    }
    for a in p1.sorted_atoms() {
        for q in &p2.passages {
            passages.push(Passage {
                lower: pair_id(&a.id, &q.lower),
                upper: pair_id(&a.id, &q.upper),
                sign: q.sign,
                mult: q.mult,
            });
        }
    }
    let mut orientations = BTreeMap::new();
    for a in p1.atoms_of_codim(0) {
        for b in p2.atoms_of_codim(0) {
            orientations.insert(pair_id(&a.id, &b.id), p1.orientation(&a.id) * p2.orientation(&b.id));
        }
    }
    let poset = FacePoset { dim: p1.dim + p2.dim, atoms, passages, orientations };

    let mut faces = Vec::new();
    for f in &d1.faces {
        for g in &d2.faces {
            let atoms: BTreeSet<String> = f
                .atoms
                .iter()
                .flat_map(|a| g.atoms.iter().map(move |b| pair_id(a, b)))
                .collect();
            faces.push(Face { codim: f.codim + g.codim, atoms });
        }
    }
    let mut dec = FaceDecomposition { faces };
    dec.normalize();
    Ok((poset, dec))
}

/// Replaces the codim-0 partition by a single face.
pub fn reduce(dec: &FaceDecomposition) -> FaceDecomposition {
    let mut zero: BTreeSet<String> = BTreeSet::new();
    let mut faces: Vec<Face> = Vec::new();
    for f in &dec.faces {
        if f.codim == 0 {
            zero.extend(f.atoms.iter().cloned());
        } else {
            faces.push(f.clone());
        }
    }
    if !zero.is_empty() {
        faces.push(Face { codim: 0, atoms: zero });
    }
    let mut out = FaceDecomposition { faces };
    out.normalize();
    out
}

/// The boundary face j as a poset in its own right: the sub-poset of
/// atoms below j with codimensions shifted down, atom ids kept stable,
/// and the induced *reduced* face decomposition.
pub fn boundary_face(
    poset: &FacePoset,
    dec: &FaceDecomposition,
    face_id: &str,
) -> Result<(FacePoset, FaceDecomposition), CornersError> {
    let face = dec
        .face(face_id)
        .filter(|f| f.codim >= 1)
        .ok_or_else(|| CornersError::UnknownFace(face_id.to_string()))?;
    let idx = poset.indexed()?;
    let atoms_sorted = idx.atoms();
    let mut keep: BTreeSet<usize> = face.atoms.iter().map(|a| idx.by_id[a.as_str()]).collect();
    for a in face.atoms.iter() {
        keep.extend(idx.below(idx.by_id[a.as_str()]));
    }
    let keep_ids: BTreeSet<&str> = keep.iter().map(|&i| atoms_sorted[i].id.as_str()).collect();

    let atoms: Vec<Atom> = keep
        .iter()
        .map(|&i| {
            let a = atoms_sorted[i];
            Atom { id: a.id.clone(), codim: a.codim - face.codim, connected: a.connected }
        })
        .collect();
    let passages: Vec<Passage> = poset
        .passages
        .iter()
        .filter(|p| keep_ids.contains(p.lower.as_str()) && keep_ids.contains(p.upper.as_str()))
        .cloned()
        .collect();
    let orientations: BTreeMap<String, i8> =
        face.atoms.iter().map(|a| (a.clone(), 1)).collect();
    let sub = FacePoset { dim: poset.dim - face.codim, atoms, passages, orientations };

    // induced decomposition: faces of M wholly inside the stratum set,
    // reduced at the new codim 0
    let mut faces = vec![Face { codim: 0, atoms: face.atoms.clone() }];
    for f in &dec.faces {
        if f.codim <= face.codim {
            continue;
        }
        if f.atoms.iter().all(|a| keep_ids.contains(a.as_str())) {
            faces.push(Face { codim: f.codim - face.codim, atoms: f.atoms.clone() });
        }
    }
    let mut out = FaceDecomposition { faces };
    out.normalize();
    Ok((sub, out))
}

/// The unique codim-1 face i' ≠ i with k < i'; errors signal either a
/// bad query or an inadmissible decomposition.
pub fn adjacent_face(
    poset: &FacePoset,
    dec: &FaceDecomposition,
    face_id: &str,
    sub_id: &str,
) -> Result<FaceId, CornersError> {
    let face = dec
        .face(face_id)
        .filter(|f| f.codim == 1)
        .ok_or_else(|| CornersError::UnknownFace(face_id.to_string()))?;
    let sub = dec
        .face(sub_id)
        .filter(|f| f.codim == 2)
        .ok_or_else(|| CornersError::UnknownFace(sub_id.to_string()))?;
    let idx = poset.indexed()?;
    let atoms = idx.atoms();

    let below_face: BTreeSet<usize> = {
        let mut s = BTreeSet::new();
        for a in &face.atoms {
            s.extend(idx.below(idx.by_id[a.as_str()]));
        }
        s
    };
    let sub_idx: Vec<usize> = sub.atoms.iter().map(|a| idx.by_id[a.as_str()]).collect();
    if !sub_idx.iter().all(|i| below_face.contains(i)) {
        return Err(CornersError::NotBelow { face: face.id(), sub: sub.id() });
    }

    let mut candidates: BTreeSet<FaceId> = BTreeSet::new();
    for &s in &sub_idx {
        for &(u, _, _) in &idx.up[s] {
            let uid = atoms[u].id.as_str();
            let f = dec.face_of_atom(uid).expect("partition checked by caller");
            if f.codim == 1 && f.id() != face.id() {
                candidates.insert(f.id());
            }
        }
    }
    match candidates.len() {
        1 => Ok(candidates.into_iter().next().unwrap()),
        _ => Err(CornersError::AdjacentNotUnique {
            face: face.id(),
            sub: sub.id(),
            candidates: candidates.into_iter().collect(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corners::builders::{cube, interval, point, simplex, square};
    use crate::corners::{check_admissibility, isomorphic, validate_poset};

    #[test]
    fn interval_times_interval_is_square() {
        let (i, di) = interval();
        let (p, d) = product(&i, &di, &i, &di).unwrap();
        assert!(validate_poset(&p).unwrap().valid);
        assert!(check_admissibility(&p, &d).unwrap().verdict);
        let (sq, _) = square();
        assert!(isomorphic(&p, &sq));
        let mut counts = vec![0usize; 3];
        for a in &p.atoms {
            counts[a.codim] += 1;
        }
        assert_eq!(counts, vec![1, 4, 4]);
    }

    #[test]
    fn point_is_neutral() {
        let (pt, dpt) = point();
        let (sx, dsx) = simplex(2).unwrap();
        let (l, _) = product(&pt, &dpt, &sx, &dsx).unwrap();
        let (r, _) = product(&sx, &dsx, &pt, &dpt).unwrap();
        assert!(isomorphic(&l, &sx));
        assert!(isomorphic(&r, &sx));
    }

    #[test]
    fn interval_times_square_is_cube() {
        let (i, di) = interval();
        let (s, ds) = square();
        let (p, d) = product(&i, &di, &s, &ds).unwrap();
        let mut counts = vec![0usize; 4];
        for a in &p.atoms {
            counts[a.codim] += 1;
        }
        assert_eq!(counts, vec![1, 6, 12, 8]);
        assert!(validate_poset(&p).unwrap().valid);
        assert!(check_admissibility(&p, &d).unwrap().verdict);
        assert!(isomorphic(&p, &cube(3).0));
    }

    #[test]
    fn product_associative_up_to_iso() {
        let (i, di) = interval();
        let (s1, ds1) = simplex(1).unwrap();
        let (ab, dab) = product(&i, &di, &s1, &ds1).unwrap();
        let (ab_c, _) = product(&ab, &dab, &i, &di).unwrap();
        let (bc, dbc) = product(&s1, &ds1, &i, &di).unwrap();
        let (a_bc, _) = product(&i, &di, &bc, &dbc).unwrap();
        assert!(isomorphic(&ab_c, &a_bc));
    }

    #[test]
    fn boundary_of_square_is_interval() {
        let (p, d) = square();
        let (sub, subd) = boundary_face(&p, &d, "0x").unwrap();
        assert!(isomorphic(&sub, &interval().0));
        // reduced: single codim-0 face
        assert_eq!(subd.faces_of_codim(0).count(), 1);
        assert!(check_admissibility(&sub, &subd).unwrap().verdict);
    }

    #[test]
    fn boundary_of_cube_is_square() {
        let (p, d) = cube(3);
        let (sub, _) = boundary_face(&p, &d, "x0x").unwrap();
        assert!(isomorphic(&sub, &square().0));
    }

    #[test]
    fn iterated_boundaries_commute() {
        // ∂ of ∂ through the two routes around a codim-2 face agree
        let (p, d) = cube(3);
        let (s1, d1) = boundary_face(&p, &d, "0xx").unwrap();
        let (s2, d2) = boundary_face(&p, &d, "x0x").unwrap();
        let (t1, _) = boundary_face(&s1, &d1, "00x").unwrap();
        let (t2, _) = boundary_face(&s2, &d2, "00x").unwrap();
        assert!(isomorphic(&t1, &t2));
    }

    #[test]
    fn adjacency_on_square_and_simplex() {
        let (p, d) = square();
        // bottom edge x0 and corner 00: the other edge through 00 is 0x
        assert_eq!(adjacent_face(&p, &d, "x0", "00").unwrap(), "0x");
        assert_eq!(adjacent_face(&p, &d, "0x", "00").unwrap(), "x0");
        let (sp, sd) = simplex(2).unwrap();
        // faces s0 and s1 meet at the vertex s0_1
        assert_eq!(adjacent_face(&sp, &sd, "s0", "s0_1").unwrap(), "s1");
        assert_eq!(adjacent_face(&sp, &sd, "s1", "s0_1").unwrap(), "s0");
    }

    #[test]
    fn adjacency_error_paths() {
        let (p, d) = square();
        // corner 11 is not below edge 0x
        assert!(matches!(
            adjacent_face(&p, &d, "0x", "11"),
            Err(CornersError::NotBelow { .. })
        ));
    }

    #[test]
    fn adjacency_is_involutive_everywhere() {
        for (p, d) in [cube(2), cube(3), simplex(3).map(|x| x).unwrap()] {
            for sub in d.faces_of_codim(2) {
                let faces_above: Vec<_> = d
                    .faces_of_codim(1)
                    .filter(|f| {
                        adjacent_face(&p, &d, &f.id(), &sub.id()).is_ok()
                            || matches!(
                                adjacent_face(&p, &d, &f.id(), &sub.id()),
                                Err(CornersError::AdjacentNotUnique { .. })
                            )
                    })
                    .collect();
                for f in faces_above {
                    if let Ok(other) = adjacent_face(&p, &d, &f.id(), &sub.id()) {
                        assert_ne!(other, f.id(), "adjacency must be fixed-point free");
                        assert_eq!(adjacent_face(&p, &d, &other, &sub.id()).unwrap(), f.id());
                    }
                }
            }
        }
    }

    #[test]
    fn reduce_merges_codim_zero() {
        let (_, d) = cube(2);
        let r = reduce(&d);
        assert_eq!(r.faces_of_codim(0).count(), 1);
        assert_eq!(r.faces_of_codim(1).count(), 4);
    }
}
