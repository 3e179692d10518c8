//! Poset isomorphism up to re-choice of reference orientations.
//!
//! Two posets are isomorphic when a codim-preserving bijection matches
//! passages with multiplicity and there is a gauge ε: atoms -> ±1 with
//! sign'(φa -> φb) = ε(a) ε(b) sign(a -> b).  Desk-scale backtracking
//! with degree-signature pruning.

use super::poset::FacePoset;
use std::collections::HashMap;

struct Side<'a> {
    ids: Vec<&'a str>,
    codim: Vec<usize>,
    /// (lower, upper) -> (sign, mult)
    edges: HashMap<(usize, usize), (i8, u32)>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

fn side(p: &FacePoset) -> Option<Side<'_>> {
    p.check_structure().ok()?;
    let atoms = p.sorted_atoms();
    let index: HashMap<&str, usize> = atoms.iter().enumerate().map(|(i, a)| (a.id.as_str(), i)).collect();
    let mut edges = HashMap::new();
    let mut up = vec![Vec::new(); atoms.len()];
    let mut down = vec![Vec::new(); atoms.len()];
    for q in &p.passages {
        let l = index[q.lower.as_str()];
        let u = index[q.upper.as_str()];
        // merge duplicate passage entries by adding multiplicities
        let e = edges.entry((l, u)).or_insert((q.sign, 0));
        e.1 += q.mult;
        up[l].push(u);
        down[u].push(l);
    }
    Some(Side {
        ids: atoms.iter().map(|a| a.id.as_str()).collect(),
        codim: atoms.iter().map(|a| a.codim).collect(),
        edges,
        up,
        down,
    })
}

fn signature(s: &Side<'_>, i: usize) -> (usize, Vec<(usize, u32)>, Vec<(usize, u32)>) {
    let mut ups: Vec<(usize, u32)> =
        s.up[i].iter().map(|&u| (s.codim[u], s.edges[&(i, u)].1)).collect();
    ups.sort();
    let mut downs: Vec<(usize, u32)> =
        s.down[i].iter().map(|&d| (s.codim[d], s.edges[&(d, i)].1)).collect();
    downs.sort();
    (s.codim[i], ups, downs)
}

/// Structure-and-gauge isomorphism test.
pub fn isomorphic(a: &FacePoset, b: &FacePoset) -> bool {
    if a.dim != b.dim || a.atoms.len() != b.atoms.len() {
        return false;
    }
    let (Some(sa), Some(sb)) = (side(a), side(b)) else { return false };
    let n = sa.ids.len();
    let siga: Vec<_> = (0..n).map(|i| signature(&sa, i)).collect();
    let sigb: Vec<_> = (0..n).map(|i| signature(&sb, i)).collect();
    {
        let mut xa = siga.clone();
        let mut xb = sigb.clone();
        xa.sort();
        xb.sort();
        if xa != xb {
            return false;
        }
    }
    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    backtrack(&sa, &sb, &siga, &sigb, &mut mapping, &mut used, 0)
}

fn backtrack(
    sa: &Side<'_>,
    sb: &Side<'_>,
    siga: &[(usize, Vec<(usize, u32)>, Vec<(usize, u32)>)],
    sigb: &[(usize, Vec<(usize, u32)>, Vec<(usize, u32)>)],
    mapping: &mut [usize],
    used: &mut [bool],
    next: usize,
) -> bool {
    let n = mapping.len();
    if next == n {
        return gauge_exists(sa, sb, mapping);
    }
    for cand in 0..n {
        if used[cand] || siga[next] != sigb[cand] {
            continue;
        }
        // edges to already-mapped atoms must match with multiplicity
        let ok = (0..next).all(|prev| {
            let fwd = sa.edges.get(&(next, prev)).map(|e| e.1)
                == sb.edges.get(&(cand, mapping[prev])).map(|e| e.1);
            let bwd = sa.edges.get(&(prev, next)).map(|e| e.1)
                == sb.edges.get(&(mapping[prev], cand)).map(|e| e.1);
            fwd && bwd
        });
        if !ok {
            continue;
        }
        mapping[next] = cand;
        used[cand] = true;
        if backtrack(sa, sb, siga, sigb, mapping, used, next + 1) {
            return true;
        }
        used[cand] = false;
        mapping[next] = usize::MAX;
    }
    false
}

/// BFS gauge assignment; multiplicity-1 edges constrain ε, higher
/// multiplicities carry canceling sheet signs and constrain nothing.
fn gauge_exists(sa: &Side<'_>, sb: &Side<'_>, mapping: &[usize]) -> bool {
    let n = mapping.len();
    let mut eps: Vec<Option<i8>> = vec![None; n];
    for start in 0..n {
        if eps[start].is_some() {
            continue;
        }
        eps[start] = Some(1);
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let ei = eps[i].unwrap();
            let neighbors: Vec<usize> =
                sa.up[i].iter().chain(sa.down[i].iter()).copied().collect();
            for j in neighbors {
                let (l, u) = if sa.edges.contains_key(&(i, j)) { (i, j) } else { (j, i) };
                let (s_a, m_a) = sa.edges[&(l, u)];
                let Some(&(s_b, m_b)) = sb.edges.get(&(mapping[l], mapping[u])) else {
                    return false;
                };
                if m_a != m_b {
                    return false;
                }
                if m_a != 1 {
                    continue;
                }
                let ratio = s_a * s_b; // ±1
                let other = i ^ l ^ u; // the endpoint that is not i
                let want = ei * ratio;
                match eps[other] {
                    None => {
                        eps[other] = Some(want);
                        stack.push(other);
                    }
                    Some(e) if e != want => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corners::builders::{cube, interval, one_eck, simplex};

    #[test]
    fn self_isomorphic() {
        for p in [cube(2).0, simplex(2).unwrap().0, one_eck().0] {
            assert!(isomorphic(&p, &p));
        }
    }

    #[test]
    fn gauge_flips_allowed() {
        let (p, _) = cube(2);
        let mut q = p.clone();
        // flipping the reference orientation of one atom negates all
        // passage signs at that atom
        for pass in q.passages.iter_mut() {
            if pass.lower == "0x" || pass.upper == "0x" {
                pass.sign = -pass.sign;
            }
        }
        assert!(isomorphic(&p, &q));
    }

    #[test]
    fn genuinely_broken_signs_rejected() {
        let (p, _) = cube(2);
        let mut q = p.clone();
        let i = q.passages.iter().position(|pass| pass.lower == "00" && pass.upper == "0x").unwrap();
        q.passages[i].sign = -q.passages[i].sign;
        // q now violates sign coherence while p satisfies it: no gauge
        assert!(!isomorphic(&p, &q));
    }

    #[test]
    fn different_posets_rejected() {
        assert!(!isomorphic(&cube(2).0, &simplex(2).unwrap().0));
        assert!(!isomorphic(&interval().0, &cube(2).0));
    }
}
