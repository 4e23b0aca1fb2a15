//! Conversions between orthomodular posets and unsharp residuated
//! structures, plus round-trip comparisons.
//!
//! * [`to_urp`] equips an orthomodular poset with the partial meet as
//!   product and `x → y := x' ∨ L(x, y)` as implication. The result is a
//!   divisible idempotent structure satisfying every residuation law.
//! * [`to_omp`] goes the other way: given an idempotent structure whose
//!   orthogonal meets exist and whose implication table matches the
//!   formula above, the bare order reduct is orthomodular and is returned.
//! * [`roundtrip_omp`] checks that converting a poset forth and back
//!   reproduces it component for component.
//! * [`roundtrip_urp`] checks that converting a structure back and forth
//!   reproduces the implication exactly and the product wherever the
//!   residuation laws constrain it (`x' <= y`); differences of definedness
//!   elsewhere are reported informationally.

use crate::omp::{check_orthomodular, implication};
use crate::poset::BoundedInvolutivePoset;
use crate::urp::{
    check_idempotent_with, PartialBinaryOp, SetValuedBinaryOp, UnsharpResiduatedStructure,
};
use crate::Error;

/// Builds the canonical residuated structure over an orthomodular poset:
/// product = partial meet, implication = `x' ∨ L(x, y)`.
pub fn to_urp(p: &BoundedInvolutivePoset) -> Result<UnsharpResiduatedStructure, Error> {
    let omp = check_orthomodular(p);
    if let Some(name) = omp.first_failure() {
        return Err(Error::NotOrthomodular {
            law: name.to_string(),
        });
    }

    let n = p.n();
    let product = PartialBinaryOp::from_fn(n, |a, b| p.meet(a, b));
    let mut imp = SetValuedBinaryOp::new(n);
    for a in p.elements() {
        for b in p.elements() {
            imp.set(a, b, implication(p, a, b)?);
        }
    }

    Ok(UnsharpResiduatedStructure {
        poset: p.clone(),
        product,
        implication: imp,
    })
}

/// Extracts the order reduct of an idempotent structure as an orthomodular
/// poset. Preconditions checked in order:
///
/// 1. idempotence (`x ⊙ x = x`),
/// 2. `x' <= y` implies the order meet `x ^ y` is defined,
/// 3. the stored implication equals `x' ∨ L(x, y)` everywhere,
///
/// and finally the reduct itself must pass the orthomodularity checks.
pub fn to_omp(s: &UnsharpResiduatedStructure) -> Result<BoundedInvolutivePoset, Error> {
    let p = &s.poset;

    let idem = check_idempotent_with(s, 1);
    if let Some(w) = idem.witnesses().first() {
        return Err(Error::NotIdempotent {
            witness: w.elements[0],
        });
    }

    for x in p.elements() {
        for y in p.elements() {
            if p.le(p.inv(x), y) && p.meet(x, y).is_none() {
                return Err(Error::OrthogonalMeetMissing { x, y });
            }
        }
    }

    for x in p.elements() {
        for y in p.elements() {
            let derived = implication(p, x, y)?;
            let stored = s.implication.get(x, y);
            if stored != derived {
                return Err(Error::ImplicationTableMismatch {
                    x,
                    y,
                    stored,
                    derived,
                });
            }
        }
    }

    let omp = check_orthomodular(p);
    if let Some(name) = omp.first_failure() {
        return Err(Error::ReductNotOrthomodular {
            law: name.to_string(),
        });
    }

    Ok(p.clone())
}

/// Outcome of a round-trip comparison.
#[derive(Debug, Clone)]
pub struct RoundTripReport {
    /// True when every component the construction determines came back
    /// unchanged.
    pub equal: bool,
    pub first_discrepancy: Option<String>,
    /// Differences the construction does not constrain (definedness of the
    /// product away from orthogonal pairs, and the like).
    pub infos: Vec<String>,
}

/// Poset → structure → poset; the result must equal the input in every
/// component.
pub fn roundtrip_omp(p: &BoundedInvolutivePoset) -> Result<RoundTripReport, Error> {
    let through = to_urp(p)?;
    let back = to_omp(&through)?;

    let defined = p
        .elements()
        .flat_map(|a| p.elements().map(move |b| (a, b)))
        .filter(|&(a, b)| through.product.is_defined(a, b))
        .count();
    let infos = vec![format!(
        "intermediate product is defined on {defined} of {} pairs",
        p.n() * p.n()
    )];

    match p.same_components(&back) {
        None => Ok(RoundTripReport {
            equal: true,
            first_discrepancy: None,
            infos,
        }),
        Some(m) => Ok(RoundTripReport {
            equal: false,
            first_discrepancy: Some(format!("component {}: {}", m.component, m.detail)),
            infos,
        }),
    }
}

/// Structure → poset → structure. The implication must come back
/// identical, and the product must agree on every pair with `x' <= y`.
/// Definedness or value differences on other pairs are informational.
pub fn roundtrip_urp(s: &UnsharpResiduatedStructure) -> Result<RoundTripReport, Error> {
    let p = &s.poset;
    let back = to_urp(&to_omp(s)?)?;

    let mut equal = true;
    let mut first_discrepancy = None;
    let record = |msg: String, equal: &mut bool, slot: &mut Option<String>| {
        *equal = false;
        if slot.is_none() {
            *slot = Some(msg);
        }
    };

    for a in p.elements() {
        for b in p.elements() {
            let stored = s.implication.get(a, b);
            let rebuilt = back.implication.get(a, b);
            if stored != rebuilt {
                record(
                    format!(
                        "implication at ({}, {}): {} came back as {}",
                        p.label(a),
                        p.label(b),
                        p.format_subset(stored),
                        p.format_subset(rebuilt)
                    ),
                    &mut equal,
                    &mut first_discrepancy,
                );
            }
        }
    }

    let mut extra_defined = 0usize;
    let mut extra_undefined = 0usize;
    let mut off_domain_mismatch = 0usize;
    for a in p.elements() {
        for b in p.elements() {
            let orthogonal = p.le(p.inv(a), b);
            let original = s.product.get(a, b);
            let rebuilt = back.product.get(a, b);
            if orthogonal {
                if original != rebuilt {
                    record(
                        format!(
                            "product at orthogonal pair ({}, {}): {:?} came back as {:?}",
                            p.label(a),
                            p.label(b),
                            original.map(|v| p.label(v).to_string()),
                            rebuilt.map(|v| p.label(v).to_string())
                        ),
                        &mut equal,
                        &mut first_discrepancy,
                    );
                }
            } else {
                match (original, rebuilt) {
                    (Some(_), None) => extra_defined += 1,
                    (None, Some(_)) => extra_undefined += 1,
                    (Some(u), Some(v)) if u != v => off_domain_mismatch += 1,
                    _ => {}
                }
            }
        }
    }

    let mut infos = Vec::new();
    if extra_defined > 0 {
        infos.push(format!(
            "original product is defined on {extra_defined} non-orthogonal pair(s) \
             where the rebuilt meet is not"
        ));
    }
    if extra_undefined > 0 {
        infos.push(format!(
            "rebuilt meet is defined on {extra_undefined} non-orthogonal pair(s) \
             where the original product is not"
        ));
    }
    if off_domain_mismatch > 0 {
        infos.push(format!(
            "product and rebuilt meet disagree on {off_domain_mismatch} \
             non-orthogonal pair(s)"
        ));
    }

    Ok(RoundTripReport {
        equal,
        first_discrepancy,
        infos,
    })
}
