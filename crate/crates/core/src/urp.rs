//! Unsharp residuated structures and their law checks.
//!
//! A candidate structure is a bounded involutive poset together with a
//! partial binary product `⊙` and a total subset-valued implication `→`.
//! The laws checked here:
//!
//! * **R1** — the underlying order and involution laws.
//! * **monoid** — `⊙` is a partial commutative monoid with unit `1`:
//!   both-defined associativity bracketings agree (one-sided definedness is
//!   permitted), `x ⊙ 1 = 1 ⊙ x = x`, and definedness/values are symmetric.
//! * **R2** — `x ⊙ y` is defined whenever `x' <= y`, and `⊙` is monotone
//!   where both products are defined.
//! * **R3** — unsharp adjointness: for all `x, y, z`,
//!   `U(x, y') ⊙ y ⊆ U(L(y, z))  ⟺  U(x, y') ⊆ U(y → z)`.
//! * **R3′** — the order-comparison form: `U(x, y') ⊙ y ≥ L(y, z)  ⟺
//!   U(x, y') ≥ y → z` (with `A ≥ B` meaning every member of `B` is below
//!   every member of `A`; vacuously true for empty sets). Evaluated by a
//!   separate code path so the two formulations can be compared.
//! * **R4** — `x <= y  =>  U(x' → y) = U(y)`.
//! * **divisibility** (optional) — `x ⊙ (x → y) = L(x, y)` elementwise.
//! * **idempotence** (optional) — `x ⊙ x = x`.
//!
//! Missing product entries on pairs R2 requires are reported as R2
//! failures; the adjointness scans skip such triples rather than double-
//! report them.

use std::collections::BTreeSet;

use crate::poset::{BoundedInvolutivePoset, ElementId};
use crate::report::{LawCheck, Report};
use crate::subset::Subset;
use crate::{Error, DEFAULT_WITNESS_CAP};

/// A partial binary operation as an explicit table; `None` is "undefined",
/// an ordinary value rather than an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialBinaryOp {
    n: usize,
    table: Vec<Option<ElementId>>,
}

impl PartialBinaryOp {
    pub fn undefined(n: usize) -> Self {
        PartialBinaryOp {
            n,
            table: vec![None; n * n],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(ElementId, ElementId) -> Option<ElementId>) -> Self {
        let mut op = Self::undefined(n);
        for a in 0..n {
            for b in 0..n {
                let v = f(ElementId::new(a), ElementId::new(b));
                op.table[a * n + b] = v;
            }
        }
        op
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: ElementId, b: ElementId) -> Option<ElementId> {
        self.table[a.index() * self.n + b.index()]
    }

    pub fn set(&mut self, a: ElementId, b: ElementId, v: Option<ElementId>) {
        self.table[a.index() * self.n + b.index()] = v;
    }

    pub fn is_defined(&self, a: ElementId, b: ElementId) -> bool {
        self.get(a, b).is_some()
    }
}

/// A total subset-valued binary operation as an explicit table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetValuedBinaryOp {
    n: usize,
    table: Vec<Subset>,
}

impl SetValuedBinaryOp {
    pub fn new(n: usize) -> Self {
        SetValuedBinaryOp {
            n,
            table: vec![Subset::empty(n); n * n],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(ElementId, ElementId) -> Subset) -> Self {
        let mut op = Self::new(n);
        for a in 0..n {
            for b in 0..n {
                op.table[a * n + b] = f(ElementId::new(a), ElementId::new(b));
            }
        }
        op
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: ElementId, b: ElementId) -> Subset {
        self.table[a.index() * self.n + b.index()]
    }

    pub fn set(&mut self, a: ElementId, b: ElementId, v: Subset) {
        assert_eq!(v.width(), self.n, "subset of a different carrier");
        self.table[a.index() * self.n + b.index()] = v;
    }
}

/// A candidate unsharp residuated structure. The fields are plain data;
/// every law is decided by the checkers below, so deliberately broken
/// tables (mutants) can be represented and diagnosed.
#[derive(Debug, Clone)]
pub struct UnsharpResiduatedStructure {
    pub poset: BoundedInvolutivePoset,
    pub product: PartialBinaryOp,
    pub implication: SetValuedBinaryOp,
}

impl UnsharpResiduatedStructure {
    pub fn n(&self) -> usize {
        self.poset.n()
    }
}

/// Verdicts for the partial commutative monoid laws.
#[derive(Debug, Clone)]
pub struct MonoidChecks {
    pub associativity: LawCheck,
    pub unit: LawCheck,
    pub commutativity: LawCheck,
}

pub fn check_partial_monoid(s: &UnsharpResiduatedStructure) -> MonoidChecks {
    check_partial_monoid_with(s, DEFAULT_WITNESS_CAP)
}

pub fn check_partial_monoid_with(s: &UnsharpResiduatedStructure, cap: usize) -> MonoidChecks {
    let p = &s.poset;

    // Associativity compares the two bracketings only when both are fully
    // defined; one side may be undefined while the other exists.
    let mut associativity = LawCheck::with_cap("monoid.associativity", cap);
    for x in p.elements() {
        for y in p.elements() {
            for z in p.elements() {
                let left = s.product.get(x, y).and_then(|xy| s.product.get(xy, z));
                let right = s.product.get(y, z).and_then(|yz| s.product.get(x, yz));
                if let (Some(l), Some(r)) = (left, right) {
                    if l != r {
                        associativity.record(
                            vec![x, y, z],
                            format!(
                                "({} ⊙ {}) ⊙ {} = {} but {} ⊙ ({} ⊙ {}) = {}",
                                p.label(x),
                                p.label(y),
                                p.label(z),
                                p.label(l),
                                p.label(x),
                                p.label(y),
                                p.label(z),
                                p.label(r)
                            ),
                        );
                    }
                }
            }
        }
    }

    let mut unit = LawCheck::with_cap("monoid.unit", cap);
    for x in p.elements() {
        for (l, r, what) in [(x, p.top(), "x ⊙ 1"), (p.top(), x, "1 ⊙ x")] {
            match s.product.get(l, r) {
                Some(v) if v == x => {}
                Some(v) => unit.record(
                    vec![x],
                    format!(
                        "{what} at {} is {} instead of {}",
                        p.label(x),
                        p.label(v),
                        p.label(x)
                    ),
                ),
                None => unit.record(vec![x], format!("{what} at {} is undefined", p.label(x))),
            }
        }
    }

    let mut commutativity = LawCheck::with_cap("monoid.commutativity", cap);
    for x in p.elements() {
        for y in p.elements() {
            if x.index() > y.index() {
                continue;
            }
            match (s.product.get(x, y), s.product.get(y, x)) {
                (Some(a), Some(b)) if a == b => {}
                (None, None) => {}
                (Some(a), Some(b)) => commutativity.record(
                    vec![x, y],
                    format!(
                        "{} ⊙ {} = {} but {} ⊙ {} = {}",
                        p.label(x),
                        p.label(y),
                        p.label(a),
                        p.label(y),
                        p.label(x),
                        p.label(b)
                    ),
                ),
                (Some(_), None) | (None, Some(_)) => commutativity.record(
                    vec![x, y],
                    format!(
                        "{} ⊙ {} and {} ⊙ {} differ in definedness",
                        p.label(x),
                        p.label(y),
                        p.label(y),
                        p.label(x)
                    ),
                ),
            }
        }
    }

    MonoidChecks {
        associativity,
        unit,
        commutativity,
    }
}

/// Verdicts for R2, plus the count of pairs where definedness does not
/// propagate downward (permitted; reported informationally).
#[derive(Debug, Clone)]
pub struct R2Checks {
    pub definedness: LawCheck,
    pub monotonicity: LawCheck,
    /// Triples `x <= y` with `y ⊙ z` defined but `x ⊙ z` undefined.
    pub non_propagating: usize,
}

pub fn check_r2(s: &UnsharpResiduatedStructure) -> R2Checks {
    check_r2_with(s, DEFAULT_WITNESS_CAP)
}

pub fn check_r2_with(s: &UnsharpResiduatedStructure, cap: usize) -> R2Checks {
    let p = &s.poset;

    let mut definedness = LawCheck::with_cap("R2.definedness", cap);
    for x in p.elements() {
        for y in p.elements() {
            if p.le(p.inv(x), y) && !s.product.is_defined(x, y) {
                definedness.record(
                    vec![x, y],
                    format!(
                        "{}' <= {} but {} ⊙ {} is undefined",
                        p.label(x),
                        p.label(y),
                        p.label(x),
                        p.label(y)
                    ),
                );
            }
        }
    }

    let mut monotonicity = LawCheck::with_cap("R2.monotonicity", cap);
    let mut non_propagating = 0usize;
    for x in p.elements() {
        for y in p.elements() {
            if !p.le(x, y) {
                continue;
            }
            for z in p.elements() {
                match (s.product.get(x, z), s.product.get(y, z)) {
                    (Some(xz), Some(yz)) => {
                        if !p.le(xz, yz) {
                            monotonicity.record(
                                vec![x, y, z],
                                format!(
                                    "{} <= {} but {} ⊙ {} = {} is not below {} ⊙ {} = {}",
                                    p.label(x),
                                    p.label(y),
                                    p.label(z),
                                    p.label(xz),
                                    p.label(x),
                                    p.label(y),
                                    p.label(z),
                                    p.label(yz)
                                ),
                            );
                        }
                    }
                    (None, Some(_)) if x != y => non_propagating += 1,
                    _ => {}
                }
            }
        }
    }

    R2Checks {
        definedness,
        monotonicity,
        non_propagating,
    }
}

/// Result of one adjointness scan: which triples fail, in which direction,
/// and which triples could not be evaluated because a product entry that R2
/// requires is missing (those are R2 failures, not adjointness failures).
#[derive(Debug, Clone)]
pub struct AdjointnessScan {
    /// Triples where the product condition holds but the implication
    /// condition fails.
    pub forward: LawCheck,
    /// Triples where the implication condition holds but the product
    /// condition fails.
    pub backward: LawCheck,
    /// The complete failing-triple set (uncapped), for comparisons.
    pub failing: BTreeSet<(ElementId, ElementId, ElementId)>,
    /// Product entries `u ⊙ y` that were needed but undefined.
    pub product_gaps: Vec<(ElementId, ElementId)>,
    pub triples_checked: usize,
}

impl AdjointnessScan {
    pub fn passed(&self) -> bool {
        self.failing.is_empty()
    }
}

/// Elementwise product image `{ u ⊙ y | u ∈ w }`; `None` if some entry is
/// undefined (recorded by the caller as an R2 gap).
fn product_image(
    s: &UnsharpResiduatedStructure,
    w: Subset,
    y: ElementId,
) -> Result<Subset, (ElementId, ElementId)> {
    let mut out = Subset::empty(s.n());
    for u in w.iter() {
        match s.product.get(u, y) {
            Some(v) => out.insert(v),
            None => return Err((u, y)),
        }
    }
    Ok(out)
}

/// R3 via upper cones: `U(x, y') ⊙ y ⊆ U(L(y, z))  ⟺  U(x, y') ⊆ U(y → z)`.
pub fn check_r3(s: &UnsharpResiduatedStructure) -> AdjointnessScan {
    check_r3_with(s, DEFAULT_WITNESS_CAP)
}

pub fn check_r3_with(s: &UnsharpResiduatedStructure, cap: usize) -> AdjointnessScan {
    let p = &s.poset;
    let mut scan = AdjointnessScan {
        forward: LawCheck::with_cap("R3.forward", cap),
        backward: LawCheck::with_cap("R3.backward", cap),
        failing: BTreeSet::new(),
        product_gaps: Vec::new(),
        triples_checked: 0,
    };

    for y in p.elements() {
        for z in p.elements() {
            let upper_of_lower = p.upper_cone(p.lower_cone_pair(y, z));
            let imp_upper = p.upper_cone(s.implication.get(y, z));
            for x in p.elements() {
                scan.triples_checked += 1;
                let w = p.upper_cone_pair(x, p.inv(y));
                let image = match product_image(s, w, y) {
                    Ok(im) => im,
                    Err(gap) => {
                        scan.product_gaps.push(gap);
                        continue;
                    }
                };
                let product_side = image.is_subset_of(&upper_of_lower);
                let implication_side = w.is_subset_of(&imp_upper);
                if product_side != implication_side {
                    scan.failing.insert((x, y, z));
                    let detail = format!(
                        "x={}, y={}, z={}: U(x, y') ⊙ y = {} {} U(L(y, z)) = {}, \
                         but U(x, y') = {} {} U(y → z) = {}",
                        p.label(x),
                        p.label(y),
                        p.label(z),
                        p.format_subset(image),
                        if product_side { "⊆" } else { "⊄" },
                        p.format_subset(upper_of_lower),
                        p.format_subset(w),
                        if implication_side { "⊆" } else { "⊄" },
                        p.format_subset(imp_upper)
                    );
                    if product_side {
                        scan.forward.record(vec![x, y, z], detail);
                    } else {
                        scan.backward.record(vec![x, y, z], detail);
                    }
                }
            }
        }
    }
    scan
}

/// True when every member of `b` is below every member of `a`
/// (vacuously true when either is empty). Written as explicit loops so the
/// dual scan is an independent evaluation route.
fn dominates(p: &BoundedInvolutivePoset, a: Subset, b: Subset) -> bool {
    for hi in a.iter() {
        for lo in b.iter() {
            if !p.le(lo, hi) {
                return false;
            }
        }
    }
    true
}

/// R3′ via order comparisons: `U(x, y') ⊙ y ≥ L(y, z)  ⟺  U(x, y') ≥ y → z`.
pub fn check_r3_dual(s: &UnsharpResiduatedStructure) -> AdjointnessScan {
    check_r3_dual_with(s, DEFAULT_WITNESS_CAP)
}

pub fn check_r3_dual_with(s: &UnsharpResiduatedStructure, cap: usize) -> AdjointnessScan {
    let p = &s.poset;
    let mut scan = AdjointnessScan {
        forward: LawCheck::with_cap("R3-dual.forward", cap),
        backward: LawCheck::with_cap("R3-dual.backward", cap),
        failing: BTreeSet::new(),
        product_gaps: Vec::new(),
        triples_checked: 0,
    };

    for y in p.elements() {
        for z in p.elements() {
            let lower = p.lower_cone_pair(y, z);
            let imp = s.implication.get(y, z);
            for x in p.elements() {
                scan.triples_checked += 1;
                let w = p.upper_cone_pair(x, p.inv(y));
                let image = match product_image(s, w, y) {
                    Ok(im) => im,
                    Err(gap) => {
                        scan.product_gaps.push(gap);
                        continue;
                    }
                };
                let product_side = dominates(p, image, lower);
                let implication_side = dominates(p, w, imp);
                if product_side != implication_side {
                    scan.failing.insert((x, y, z));
                    let detail = format!(
                        "x={}, y={}, z={}: U(x, y') ⊙ y = {} {} L(y, z) = {}, \
                         but U(x, y') = {} {} y → z = {}",
                        p.label(x),
                        p.label(y),
                        p.label(z),
                        p.format_subset(image),
                        if product_side { "≥" } else { "≱" },
                        p.format_subset(lower),
                        p.format_subset(w),
                        if implication_side { "≥" } else { "≱" },
                        p.format_subset(imp)
                    );
                    if product_side {
                        scan.forward.record(vec![x, y, z], detail);
                    } else {
                        scan.backward.record(vec![x, y, z], detail);
                    }
                }
            }
        }
    }
    scan
}

/// R4: `x <= y  =>  U(x' → y) = U(y)`.
pub fn check_r4(s: &UnsharpResiduatedStructure) -> LawCheck {
    check_r4_with(s, DEFAULT_WITNESS_CAP)
}

pub fn check_r4_with(s: &UnsharpResiduatedStructure, cap: usize) -> LawCheck {
    let p = &s.poset;
    let mut check = LawCheck::with_cap("R4.upper-cone", cap);
    for x in p.elements() {
        for y in p.elements() {
            if !p.le(x, y) {
                continue;
            }
            let u_imp = p.upper_cone(s.implication.get(p.inv(x), y));
            let u_y = p.up_set(y);
            if u_imp != u_y {
                check.record(
                    vec![x, y],
                    format!(
                        "{} <= {} but U({}' → {}) = {} differs from U({}) = {}",
                        p.label(x),
                        p.label(y),
                        p.label(x),
                        p.label(y),
                        p.format_subset(u_imp),
                        p.label(y),
                        p.format_subset(u_y)
                    ),
                );
            }
        }
    }
    check
}

/// Divisibility: `x ⊙ (x → y) = L(x, y)` elementwise, with every product
/// defined.
pub fn check_divisible(s: &UnsharpResiduatedStructure) -> LawCheck {
    check_divisible_with(s, DEFAULT_WITNESS_CAP)
}

pub fn check_divisible_with(s: &UnsharpResiduatedStructure, cap: usize) -> LawCheck {
    let p = &s.poset;
    let mut check = LawCheck::with_cap("divisibility", cap);
    for x in p.elements() {
        for y in p.elements() {
            let imp = s.implication.get(x, y);
            let mut image = Subset::empty(s.n());
            let mut gap = None;
            for t in imp.iter() {
                match s.product.get(x, t) {
                    Some(v) => image.insert(v),
                    None => {
                        gap = Some(t);
                        break;
                    }
                }
            }
            if let Some(t) = gap {
                check.record(
                    vec![x, y, t],
                    format!(
                        "{} ⊙ {} undefined for {} ∈ {} → {}",
                        p.label(x),
                        p.label(t),
                        p.label(t),
                        p.label(x),
                        p.label(y)
                    ),
                );
                continue;
            }
            let lower = p.lower_cone_pair(x, y);
            if image != lower {
                check.record(
                    vec![x, y],
                    format!(
                        "{} ⊙ ({} → {}) = {} differs from L({}, {}) = {}",
                        p.label(x),
                        p.label(x),
                        p.label(y),
                        p.format_subset(image),
                        p.label(x),
                        p.label(y),
                        p.format_subset(lower)
                    ),
                );
            }
        }
    }
    check
}

/// Idempotence: `x ⊙ x = x` for every element.
pub fn check_idempotent(s: &UnsharpResiduatedStructure) -> LawCheck {
    check_idempotent_with(s, DEFAULT_WITNESS_CAP)
}

pub fn check_idempotent_with(s: &UnsharpResiduatedStructure, cap: usize) -> LawCheck {
    let p = &s.poset;
    let mut check = LawCheck::with_cap("idempotence", cap);
    for x in p.elements() {
        match s.product.get(x, x) {
            Some(v) if v == x => {}
            Some(v) => check.record(
                vec![x],
                format!(
                    "{} ⊙ {} = {} differs from {}",
                    p.label(x),
                    p.label(x),
                    p.label(v),
                    p.label(x)
                ),
            ),
            None => check.record(
                vec![x],
                format!("{} ⊙ {} is undefined", p.label(x), p.label(x)),
            ),
        }
    }
    check
}

/// In an idempotent structure the product agrees with the order meet
/// wherever both are defined. Precondition: idempotence (error otherwise).
pub fn check_product_meet_agreement(s: &UnsharpResiduatedStructure) -> Result<LawCheck, Error> {
    check_product_meet_agreement_with(s, DEFAULT_WITNESS_CAP)
}

pub fn check_product_meet_agreement_with(
    s: &UnsharpResiduatedStructure,
    cap: usize,
) -> Result<LawCheck, Error> {
    let idem = check_idempotent_with(s, 1);
    if !idem.passed() {
        return Err(Error::NotIdempotent {
            witness: idem.witnesses()[0].elements[0],
        });
    }
    let p = &s.poset;
    let mut check = LawCheck::with_cap("product-meet-agreement", cap);
    for a in p.elements() {
        for b in p.elements() {
            if let (Some(prod), Some(meet)) = (s.product.get(a, b), p.meet(a, b)) {
                if prod != meet {
                    check.record(
                        vec![a, b],
                        format!(
                            "{} ⊙ {} = {} differs from {} ^ {} = {}",
                            p.label(a),
                            p.label(b),
                            p.label(prod),
                            p.label(a),
                            p.label(b),
                            p.label(meet)
                        ),
                    );
                }
            }
        }
    }
    Ok(check)
}

/// The full validation report for a candidate structure. Core laws decide
/// validity; divisibility, idempotence, and product/meet agreement are
/// reported as optional properties, and `x ⊙ 0 = 0` as an informational
/// flag (it is not an axiom).
#[derive(Debug, Clone)]
pub struct UrpReport {
    pub poset_laws: Report,
    pub monoid_associativity: LawCheck,
    pub monoid_unit: LawCheck,
    pub monoid_commutativity: LawCheck,
    pub r2_definedness: LawCheck,
    pub r2_monotonicity: LawCheck,
    pub r3_forward: LawCheck,
    pub r3_backward: LawCheck,
    pub r3_dual_agreement: LawCheck,
    pub r4_upper_cone: LawCheck,
    pub divisibility: LawCheck,
    pub idempotence: LawCheck,
    /// Only meaningful when idempotence holds.
    pub product_meet_agreement: Option<LawCheck>,
    /// `x ⊙ 0 = 0 ⊙ x = 0` everywhere (informational, not an axiom).
    pub zero_product: bool,
    pub infos: Vec<String>,
}

impl UrpReport {
    /// The checks that decide validity (R1 + monoid + R2 + R3 + R4).
    pub fn core_law_checks(&self) -> Vec<&LawCheck> {
        let mut out: Vec<&LawCheck> = self.poset_laws.checks.iter().collect();
        out.extend([
            &self.monoid_associativity,
            &self.monoid_unit,
            &self.monoid_commutativity,
            &self.r2_definedness,
            &self.r2_monotonicity,
            &self.r3_forward,
            &self.r3_backward,
            &self.r3_dual_agreement,
            &self.r4_upper_cone,
        ]);
        out
    }

    pub fn property_checks(&self) -> Vec<&LawCheck> {
        let mut out = vec![&self.divisibility, &self.idempotence];
        if let Some(c) = &self.product_meet_agreement {
            out.push(c);
        }
        out
    }

    pub fn laws_pass(&self) -> bool {
        self.core_law_checks().iter().all(|c| c.passed())
    }

    pub fn total_law_violations(&self) -> usize {
        self.core_law_checks().iter().map(|c| c.total()).sum()
    }

    pub fn render(&self) -> String {
        let mut out = self.poset_laws.render();
        for c in [
            &self.monoid_associativity,
            &self.monoid_unit,
            &self.monoid_commutativity,
            &self.r2_definedness,
            &self.r2_monotonicity,
            &self.r3_forward,
            &self.r3_backward,
            &self.r3_dual_agreement,
            &self.r4_upper_cone,
        ] {
            c.render_into(&mut out);
        }
        for c in self.property_checks() {
            let verdict = if c.passed() { "holds" } else { "FAILS" };
            out.push_str(&format!("property {}: {}\n", c.name(), verdict));
            for w in c.witnesses() {
                out.push_str(&format!("  witness: {}\n", w.detail));
            }
        }
        for i in &self.infos {
            out.push_str(&format!("info: {i}\n"));
        }
        out
    }
}

/// Runs every law check. The underlying poset is revalidated (R1), the
/// monoid/R2/R3/R4 laws are scanned, the two adjointness formulations are
/// compared triple-for-triple, and optional properties are reported.
pub fn validate_urp(s: &UnsharpResiduatedStructure) -> UrpReport {
    validate_urp_with(s, DEFAULT_WITNESS_CAP)
}

pub fn validate_urp_with(s: &UnsharpResiduatedStructure, cap: usize) -> UrpReport {
    let p = &s.poset;
    let poset_laws = p.check_order_laws();
    let monoid = check_partial_monoid_with(s, cap);
    let r2 = check_r2_with(s, cap);
    let r3 = check_r3_with(s, cap);
    let r3_dual = check_r3_dual_with(s, cap);

    // The two adjointness formulations are equivalent pointwise; diverging
    // failing-triple sets would mean one of the evaluation routes is wrong.
    let mut r3_dual_agreement = LawCheck::with_cap("R3-equivalence", cap);
    for &(x, y, z) in r3.failing.symmetric_difference(&r3_dual.failing) {
        let in_cone_form = r3.failing.contains(&(x, y, z));
        r3_dual_agreement.record(
            vec![x, y, z],
            format!(
                "triple (x={}, y={}, z={}) fails the {} formulation only",
                p.label(x),
                p.label(y),
                p.label(z),
                if in_cone_form {
                    "cone"
                } else {
                    "order-comparison"
                }
            ),
        );
    }

    let r4 = check_r4_with(s, cap);
    let divisibility = check_divisible_with(s, cap);
    let idempotence = check_idempotent_with(s, cap);
    let product_meet_agreement = idempotence
        .passed()
        .then(|| check_product_meet_agreement_with(s, cap).expect("idempotence just checked"));

    let zero_product = p.elements().all(|x| {
        s.product.get(x, p.bot()) == Some(p.bot()) && s.product.get(p.bot(), x) == Some(p.bot())
    });

    let mut infos = Vec::new();
    infos.push(format!(
        "x ⊙ 0 = 0 ⊙ x = 0 (not an axiom): {}",
        if zero_product {
            "holds"
        } else {
            "does not hold"
        }
    ));
    if r2.non_propagating > 0 {
        infos.push(format!(
            "definedness does not propagate downward at {} triple(s) (permitted)",
            r2.non_propagating
        ));
    }
    infos.push(format!(
        "adjointness scanned {} triples per formulation",
        r3.triples_checked
    ));

    UrpReport {
        poset_laws,
        monoid_associativity: monoid.associativity,
        monoid_unit: monoid.unit,
        monoid_commutativity: monoid.commutativity,
        r2_definedness: r2.definedness,
        r2_monotonicity: r2.monotonicity,
        r3_forward: r3.forward,
        r3_backward: r3.backward,
        r3_dual_agreement,
        r4_upper_cone: r4,
        divisibility,
        idempotence,
        product_meet_agreement,
        zero_product,
        infos,
    }
}
