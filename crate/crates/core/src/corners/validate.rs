//! Diamond-property and sign-coherence validation.

use super::poset::{CornersError, FacePoset};
use serde::Serialize;

/// A length-2 interval (a below b with codim gap 2) that fails a check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalWitness {
    pub lower: String,
    pub upper: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ValidationFailure {
    /// Passage connecting non-adjacent codimensions.
    NonAdjacentPassage { lower: String, upper: String },
    /// Total multiplicity through the interval is not exactly 2.
    Diamond(IntervalWitness),
    /// The two sign products along the interval do not cancel.
    SignCoherence(IntervalWitness),
}

/// Outcome of `validate_poset`; `notes` flag benign oddities such as
/// multiplicity-2 passages.
#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub failures: Vec<ValidationFailure>,
    pub notes: Vec<String>,
}

/// Checks the diamond property and sign coherence, listing every
/// failing interval.  Malformed ids and similar structural problems are
/// reported as an error, not as a validation failure.
pub fn validate_poset(poset: &FacePoset) -> Result<ValidationReport, CornersError> {
    let idx = poset.indexed()?;
    let atoms = idx.atoms();
    let mut failures = Vec::new();
    let mut notes = Vec::new();

    for p in &poset.passages {
        let (Some(l), Some(u)) = (poset.atom(&p.lower), poset.atom(&p.upper)) else { continue };
        if l.codim != u.codim + 1 {
            failures.push(ValidationFailure::NonAdjacentPassage {
                lower: p.lower.clone(),
                upper: p.upper.clone(),
            });
        }
        if p.mult >= 2 {
            notes.push(format!(
                "{:?} reached {} times through one atom {:?}",
                p.lower, p.mult, p.upper
            ));
        }
    }

    // every (a, b) with codim(a) = codim(b) + 2 and a chain a -> m -> b
    for a in 0..atoms.len() {
        for b in 0..atoms.len() {
            if atoms[a].codim != atoms[b].codim + 2 {
                continue;
            }
            // expand sign products over sheets: a mult-2 passage carries
            // a canceling ± pair, a mult-1 passage its recorded sign
            let mut signs: Vec<i32> = Vec::new();
            for &(m, s1, m1) in &idx.up[a] {
                for &(b2, s2, m2) in &idx.up[m] {
                    if b2 != b {
                        continue;
                    }
                    let sheet1: Vec<i32> =
                        if m1 == 1 { vec![s1 as i32] } else { sheet_pair(m1) };
                    let sheet2: Vec<i32> =
                        if m2 == 1 { vec![s2 as i32] } else { sheet_pair(m2) };
                    for x in &sheet1 {
                        for y in &sheet2 {
                            signs.push(x * y);
                        }
                    }
                }
            }
            if signs.is_empty() {
                continue; // a is not below b
            }
            let witness = || IntervalWitness {
                lower: atoms[a].id.clone(),
                upper: atoms[b].id.clone(),
                detail: format!("chain signs {signs:?}"),
            };
            if signs.len() != 2 {
                failures.push(ValidationFailure::Diamond(witness()));
            } else if signs.iter().sum::<i32>() != 0 {
                failures.push(ValidationFailure::SignCoherence(witness()));
            }
        }
    }

    Ok(ValidationReport { valid: failures.is_empty(), failures, notes })
}

fn sheet_pair(mult: u32) -> Vec<i32> {
    // two sheets with opposite induced orientations; multiplicities
    // beyond 2 alternate and are flagged by the diamond count anyway
    (0..mult).map(|k| if k % 2 == 0 { 1 } else { -1 }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corners::builders::{interval, one_eck, square};

    #[test]
    fn square_is_valid() {
        let (p, _) = square();
        let r = validate_poset(&p).unwrap();
        assert!(r.valid, "{:?}", r.failures);
        assert!(r.notes.is_empty());
    }

    #[test]
    fn one_eck_valid_but_noted() {
        let (p, _) = one_eck();
        let r = validate_poset(&p).unwrap();
        assert!(r.valid, "{:?}", r.failures);
        assert_eq!(r.notes.len(), 1);
        assert!(r.notes[0].contains("2 times through one atom"));
    }

    #[test]
    fn empty_poset_valid() {
        let p = FacePoset { dim: 0, atoms: vec![], passages: vec![], orientations: Default::default() };
        assert!(validate_poset(&p).unwrap().valid);
    }

    #[test]
    fn broken_sign_detected() {
        let (mut p, _) = square();
        // flip one corner passage sign: the diamond through that corner
        // loses coherence
        let idx = p.passages.iter().position(|q| q.lower == "00" && q.upper == "0x").unwrap();
        p.passages[idx].sign = -p.passages[idx].sign;
        let r = validate_poset(&p).unwrap();
        assert!(!r.valid);
        assert!(matches!(r.failures[0], ValidationFailure::SignCoherence(_)));
    }

    #[test]
    fn structural_error_is_not_a_failure() {
        let (mut p, _) = interval();
        p.passages.push(crate::corners::Passage {
            lower: "ghost".into(),
            upper: "ghost2".into(),
            sign: 1,
            mult: 1,
        });
        assert!(validate_poset(&p).is_err());
    }
}
