//! Orthomodularity checks and the subset-valued implication.
//!
//! On a bounded involutive poset, `x` and `y` are *orthogonal* when
//! `x <= y'`. An orthomodular poset demands joins of orthogonal pairs, the
//! orthomodular law `x <= y  =>  y = x v (y ^ x')`, and complementation
//! (`x v x' = 1`, `x ^ x' = 0`).
//!
//! The implication is everywhere defined but subset-valued:
//! `x -> y = x' v L(x, y)`, the elementwise join of the lower cone with `x'`.

use crate::poset::{BoundedInvolutivePoset, ElementId};
use crate::report::{LawCheck, Report};
use crate::subset::Subset;
use crate::{Error, DEFAULT_WITNESS_CAP};

/// Per-law verdicts for the orthomodular-poset axioms.
#[derive(Debug, Clone)]
pub struct OmpReport {
    /// Joins of orthogonal pairs exist.
    pub orthogonal_joins: LawCheck,
    /// `x <= y  =>  y = x v (y ^ x')`, with both steps defined.
    pub orthomodular_law: LawCheck,
    /// `x v x' = 1` and `x ^ x' = 0`.
    pub complementation: LawCheck,
}

impl OmpReport {
    pub fn passed(&self) -> bool {
        self.orthogonal_joins.passed()
            && self.orthomodular_law.passed()
            && self.complementation.passed()
    }

    pub fn checks(&self) -> [&LawCheck; 3] {
        [
            &self.orthogonal_joins,
            &self.orthomodular_law,
            &self.complementation,
        ]
    }

    pub fn to_report(&self) -> Report {
        let mut r = Report::new();
        for c in self.checks() {
            r.push(c.clone());
        }
        r
    }

    /// Name of the first failing law, for error messages.
    pub fn first_failure(&self) -> Option<&str> {
        self.checks()
            .into_iter()
            .find(|c| !c.passed())
            .map(|c| c.name())
    }
}

/// Checks every orthomodular-poset law on `p`, collecting witnesses.
pub fn check_orthomodular(p: &BoundedInvolutivePoset) -> OmpReport {
    check_orthomodular_with(p, DEFAULT_WITNESS_CAP)
}

pub fn check_orthomodular_with(p: &BoundedInvolutivePoset, cap: usize) -> OmpReport {
    let mut orthogonal_joins = LawCheck::with_cap("omp.orthogonal-joins", cap);
    for x in p.elements() {
        for y in p.elements() {
            if p.le(x, p.inv(y)) && p.join(x, y).is_none() {
                orthogonal_joins.record(
                    vec![x, y],
                    format!(
                        "{} <= {}' but {} v {} has no least upper bound",
                        p.label(x),
                        p.label(y),
                        p.label(x),
                        p.label(y)
                    ),
                );
            }
        }
    }

    // Meet-missing, join-missing, and value mismatches are distinct
    // failure shapes; the witness text tells them apart.
    let mut orthomodular_law = LawCheck::with_cap("omp.orthomodular-law", cap);
    for x in p.elements() {
        for y in p.elements() {
            if !p.le(x, y) {
                continue;
            }
            let Some(m) = p.meet(y, p.inv(x)) else {
                orthomodular_law.record(
                    vec![x, y],
                    format!(
                        "{} <= {} but {} ^ {}' is undefined",
                        p.label(x),
                        p.label(y),
                        p.label(y),
                        p.label(x)
                    ),
                );
                continue;
            };
            let Some(j) = p.join(x, m) else {
                orthomodular_law.record(
                    vec![x, y],
                    format!(
                        "{} <= {} but {} v ({} ^ {}') is undefined",
                        p.label(x),
                        p.label(y),
                        p.label(x),
                        p.label(y),
                        p.label(x)
                    ),
                );
                continue;
            };
            if j != y {
                orthomodular_law.record(
                    vec![x, y],
                    format!(
                        "{} <= {} but {} v ({} ^ {}') = {} differs from {}",
                        p.label(x),
                        p.label(y),
                        p.label(x),
                        p.label(y),
                        p.label(x),
                        p.label(j),
                        p.label(y)
                    ),
                );
            }
        }
    }

    let mut complementation = LawCheck::with_cap("omp.complementation", cap);
    for x in p.elements() {
        match p.join(x, p.inv(x)) {
            Some(j) if j == p.top() => {}
            Some(j) => complementation.record(
                vec![x],
                format!(
                    "{} v {}' = {} differs from top",
                    p.label(x),
                    p.label(x),
                    p.label(j)
                ),
            ),
            None => complementation.record(
                vec![x],
                format!("{} v {}' is undefined", p.label(x), p.label(x)),
            ),
        }
        match p.meet(x, p.inv(x)) {
            Some(m) if m == p.bot() => {}
            Some(m) => complementation.record(
                vec![x],
                format!(
                    "{} ^ {}' = {} differs from bot",
                    p.label(x),
                    p.label(x),
                    p.label(m)
                ),
            ),
            None => complementation.record(
                vec![x],
                format!("{} ^ {}' is undefined", p.label(x), p.label(x)),
            ),
        }
    }

    OmpReport {
        orthogonal_joins,
        orthomodular_law,
        complementation,
    }
}

/// The subset-valued implication `x -> y = x' v L(x, y)`.
///
/// Every member of `L(x, y)` is below `x`, hence orthogonal to `x'`, so in
/// an orthomodular poset all the joins exist; elsewhere a missing join is
/// reported as an error.
pub fn implication(
    p: &BoundedInvolutivePoset,
    x: ElementId,
    y: ElementId,
) -> Result<Subset, Error> {
    p.lift_join(p.lower_cone_pair(x, y), p.inv(x))
}

/// Checks the cone decomposition identities
/// `U(a, b) = a v (U(a, b) ^ a')` and `L(a, b) = b ^ (L(a, b) v b')`
/// for every pair, requiring every constituent partial operation to be
/// defined. Intended for orthomodular posets, where they always hold; on
/// other structures failures are reported with witnesses.
pub fn check_cone_decomposition(p: &BoundedInvolutivePoset) -> Report {
    let mut upper = LawCheck::new("cones.upper-rebuild");
    let mut lower = LawCheck::new("cones.lower-rebuild");
    for a in p.elements() {
        for b in p.elements() {
            let u = p.upper_cone_pair(a, b);
            match p.lift_meet(u, p.inv(a)).and_then(|m| p.lift_join(m, a)) {
                Ok(rebuilt) if rebuilt == u => {}
                Ok(rebuilt) => upper.record(
                    vec![a, b],
                    format!(
                        "{} v (U({}, {}) ^ {}') = {} differs from U({}, {}) = {}",
                        p.label(a),
                        p.label(a),
                        p.label(b),
                        p.label(a),
                        p.format_subset(rebuilt),
                        p.label(a),
                        p.label(b),
                        p.format_subset(u)
                    ),
                ),
                Err(e) => upper.record(
                    vec![a, b],
                    format!("rebuilding U({}, {}): {e}", p.label(a), p.label(b)),
                ),
            }

            let l = p.lower_cone_pair(a, b);
            match p.lift_join(l, p.inv(b)).and_then(|j| p.lift_meet(j, b)) {
                Ok(rebuilt) if rebuilt == l => {}
                Ok(rebuilt) => lower.record(
                    vec![a, b],
                    format!(
                        "{} ^ (L({}, {}) v {}') = {} differs from L({}, {}) = {}",
                        p.label(b),
                        p.label(a),
                        p.label(b),
                        p.label(b),
                        p.format_subset(rebuilt),
                        p.label(a),
                        p.label(b),
                        p.format_subset(l)
                    ),
                ),
                Err(e) => lower.record(
                    vec![a, b],
                    format!("rebuilding L({}, {}): {e}", p.label(a), p.label(b)),
                ),
            }
        }
    }
    let mut report = Report::new();
    report.push(upper);
    report.push(lower);
    report
}

/// Checks the derived implication laws:
///
/// 1. `x -> 0 = {x'}`
/// 2. `1 -> x = L(x)`
/// 3. `x <= y  =>  x -> y = [x', 1]`
/// 4. `x <= y  =>  U(x -> y) = {1}`
/// 5. `x -> x' = {x'}`
pub fn check_implication_laws(p: &BoundedInvolutivePoset) -> Report {
    let n = p.n();
    let top_singleton = Subset::singleton(n, p.top());

    let mut to_bottom = LawCheck::new("implication.to-bottom");
    let mut from_top = LawCheck::new("implication.from-top");
    let mut below_interval = LawCheck::new("implication.below-interval");
    let mut below_upper = LawCheck::new("implication.below-upper");
    let mut self_orthocomplement = LawCheck::new("implication.self-orthocomplement");

    for x in p.elements() {
        match implication(p, x, p.bot()) {
            Ok(s) if s == Subset::singleton(n, p.inv(x)) => {}
            Ok(s) => to_bottom.record(
                vec![x],
                format!(
                    "{} -> 0 = {} differs from {{{}'}}",
                    p.label(x),
                    p.format_subset(s),
                    p.label(x)
                ),
            ),
            Err(e) => to_bottom.record(vec![x], format!("{} -> 0: {e}", p.label(x))),
        }

        match implication(p, p.top(), x) {
            Ok(s) if s == p.down_set(x) => {}
            Ok(s) => from_top.record(
                vec![x],
                format!(
                    "1 -> {} = {} differs from L({}) = {}",
                    p.label(x),
                    p.format_subset(s),
                    p.label(x),
                    p.format_subset(p.down_set(x))
                ),
            ),
            Err(e) => from_top.record(vec![x], format!("1 -> {}: {e}", p.label(x))),
        }

        match implication(p, x, p.inv(x)) {
            Ok(s) if s == Subset::singleton(n, p.inv(x)) => {}
            Ok(s) => self_orthocomplement.record(
                vec![x],
                format!(
                    "{} -> {}' = {} differs from {{{}'}}",
                    p.label(x),
                    p.label(x),
                    p.format_subset(s),
                    p.label(x)
                ),
            ),
            Err(e) => self_orthocomplement
                .record(vec![x], format!("{} -> {}': {e}", p.label(x), p.label(x))),
        }

        for y in p.elements() {
            if !p.le(x, y) {
                continue;
            }
            match implication(p, x, y) {
                Ok(s) => {
                    let expected = p
                        .interval(p.inv(x), p.top())
                        .expect("x' <= top always holds");
                    if s != expected {
                        below_interval.record(
                            vec![x, y],
                            format!(
                                "{} <= {} but {} -> {} = {} differs from [{}', 1] = {}",
                                p.label(x),
                                p.label(y),
                                p.label(x),
                                p.label(y),
                                p.format_subset(s),
                                p.label(x),
                                p.format_subset(expected)
                            ),
                        );
                    }
                    let u = p.upper_cone(s);
                    if u != top_singleton {
                        below_upper.record(
                            vec![x, y],
                            format!(
                                "{} <= {} but U({} -> {}) = {} differs from {{1}}",
                                p.label(x),
                                p.label(y),
                                p.label(x),
                                p.label(y),
                                p.format_subset(u)
                            ),
                        );
                    }
                }
                Err(e) => {
                    below_interval
                        .record(vec![x, y], format!("{} -> {}: {e}", p.label(x), p.label(y)));
                    below_upper
                        .record(vec![x, y], format!("{} -> {}: {e}", p.label(x), p.label(y)));
                }
            }
        }
    }

    let mut report = Report::new();
    report.push(to_bottom);
    report.push(from_top);
    report.push(below_interval);
    report.push(below_upper);
    report.push(self_orthocomplement);
    report
}
