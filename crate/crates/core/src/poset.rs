//! Bounded posets with an antitone involution, and the partial operations
//! induced by the order.
//!
//! Structures are built through [`RawPoset::validate`], which takes the
//! reflexive-transitive closure of generating pairs (or checks a full matrix
//! as given), then scans every order and involution law, collecting
//! witnesses. Only a fully valid candidate yields a
//! [`BoundedInvolutivePoset`]; after that the structure is immutable.

use std::fmt;

use crate::report::{LawCheck, Report};
use crate::subset::Subset;
use crate::{Error, MAX_ELEMENTS};

/// Index of an element in a carrier (always `< 64`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(u8);

impl ElementId {
    pub fn new(index: usize) -> Self {
        assert!(index < MAX_ELEMENTS, "element index out of range");
        ElementId(index as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// The input relation of a [`RawPoset`]: either generating pairs (closed
/// automatically) or a full matrix (validated exactly as given).
#[derive(Debug, Clone)]
enum RelationInput {
    /// `(a, b)` meaning `a <= b`; reflexive-transitive closure is applied.
    Pairs(Vec<(usize, usize)>),
    /// Row `a` holds the bitmask of all `b` with `a <= b`, exactly as given.
    UpRows(Vec<u64>),
}

/// An unvalidated candidate structure.
#[derive(Debug, Clone)]
pub struct RawPoset {
    n: usize,
    relation: RelationInput,
    inv: Vec<usize>,
    bot: usize,
    top: usize,
    labels: Option<Vec<String>>,
    /// Index of the first ragged matrix row, when built from a matrix.
    ragged: Option<usize>,
}

/// Outcome of validation: the per-law report, plus the structure when every
/// law passed.
#[derive(Debug, Clone)]
pub struct PosetValidation {
    pub report: Report,
    pub poset: Option<BoundedInvolutivePoset>,
}

impl RawPoset {
    /// Candidate from generating pairs `a <= b`; the closure is applied
    /// before validation.
    pub fn from_pairs(
        n: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
        inv: Vec<usize>,
        bot: usize,
        top: usize,
    ) -> Self {
        RawPoset {
            n,
            relation: RelationInput::Pairs(pairs.into_iter().collect()),
            inv,
            bot,
            top,
            labels: None,
            ragged: None,
        }
    }

    /// Candidate from a full boolean matrix (`matrix[a][b]` iff `a <= b`),
    /// validated exactly as given — no closure is applied, so reflexivity
    /// and transitivity failures are reported rather than repaired.
    pub fn from_matrix(matrix: &[Vec<bool>], inv: Vec<usize>, bot: usize, top: usize) -> Self {
        let n = matrix.len();
        let rows = matrix
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .take(MAX_ELEMENTS)
                    .fold(0u64, |acc, (j, &v)| if v { acc | (1 << j) } else { acc })
            })
            .collect();
        RawPoset {
            n,
            relation: RelationInput::UpRows(rows),
            inv,
            bot,
            top,
            labels: None,
            ragged: matrix.iter().position(|r| r.len() != n),
        }
    }

    /// Candidate from up-set bitmasks (`rows[a]` = all `b` with `a <= b`),
    /// validated exactly as given.
    pub fn from_up_masks(
        n: usize,
        rows: Vec<u64>,
        inv: Vec<usize>,
        bot: usize,
        top: usize,
    ) -> Self {
        RawPoset {
            n,
            relation: RelationInput::UpRows(rows),
            inv,
            bot,
            top,
            labels: None,
            ragged: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.labels = Some(labels);
        self
    }

    /// Runs structural checks (errors) and then every law check (report).
    pub fn validate(self) -> Result<PosetValidation, Error> {
        let n = self.n;
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if n > MAX_ELEMENTS {
            return Err(Error::CarrierTooLarge { size: n });
        }
        if let Some(row) = self.ragged {
            return Err(Error::DimensionMismatch {
                what: "order matrix row",
                expected: n,
                found: row,
            });
        }
        if self.inv.len() != n {
            return Err(Error::DimensionMismatch {
                what: "involution map",
                expected: n,
                found: self.inv.len(),
            });
        }
        for &i in &self.inv {
            if i >= n {
                return Err(Error::ElementOutOfRange {
                    index: i,
                    carrier: n,
                });
            }
        }
        {
            let mut seen = vec![false; n];
            for &i in &self.inv {
                if seen[i] {
                    return Err(Error::InvalidInvolution {
                        detail: format!("element {i} has two preimages"),
                    });
                }
                seen[i] = true;
            }
        }
        if self.bot >= n {
            return Err(Error::ElementOutOfRange {
                index: self.bot,
                carrier: n,
            });
        }
        if self.top >= n {
            return Err(Error::ElementOutOfRange {
                index: self.top,
                carrier: n,
            });
        }
        let labels = match self.labels {
            Some(l) => {
                if l.len() != n {
                    return Err(Error::DimensionMismatch {
                        what: "label list",
                        expected: n,
                        found: l.len(),
                    });
                }
                for (i, a) in l.iter().enumerate() {
                    if l[..i].contains(a) {
                        return Err(Error::DuplicateLabel { label: a.clone() });
                    }
                }
                l
            }
            None => (0..n).map(|i| format!("e{i}")).collect(),
        };

        // Build the up-rows to check. Generating pairs are closed first;
        // a full matrix is checked exactly as given.
        let rows = match &self.relation {
            RelationInput::Pairs(pairs) => {
                for &(a, b) in pairs {
                    if a >= n {
                        return Err(Error::ElementOutOfRange {
                            index: a,
                            carrier: n,
                        });
                    }
                    if b >= n {
                        return Err(Error::ElementOutOfRange {
                            index: b,
                            carrier: n,
                        });
                    }
                }
                let mut rows = vec![0u64; n];
                for (i, row) in rows.iter_mut().enumerate() {
                    *row |= 1 << i;
                }
                for &(a, b) in pairs {
                    rows[a] |= 1 << b;
                }
                transitive_closure(&mut rows);
                rows
            }
            RelationInput::UpRows(rows) => {
                if rows.len() != n {
                    return Err(Error::DimensionMismatch {
                        what: "order matrix",
                        expected: n,
                        found: rows.len(),
                    });
                }
                let full = full_mask(n);
                for (i, row) in rows.iter().enumerate() {
                    if row & !full != 0 {
                        return Err(Error::ElementOutOfRange {
                            index: (row & !full).trailing_zeros() as usize,
                            carrier: n,
                        });
                    }
                    let _ = i;
                }
                rows.clone()
            }
        };

        let mut report = scan_order_laws(n, &rows, &self.inv, self.bot, self.top, &labels);
        if n == 1 {
            report
                .warnings
                .push("carrier has a single element (bot = top)".to_string());
        }

        let poset = report.passed().then(|| {
            let mut down = vec![0u64; n];
            for (a, row) in rows.iter().enumerate() {
                for b in 0..n {
                    if row >> b & 1 == 1 {
                        down[b] |= 1 << a;
                    }
                }
            }
            BoundedInvolutivePoset {
                n,
                up: rows,
                down,
                inv: self.inv.iter().map(|&i| ElementId::new(i)).collect(),
                bot: ElementId::new(self.bot),
                top: ElementId::new(self.top),
                labels,
            }
        });
        Ok(PosetValidation { report, poset })
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// In-place reflexive-transitive closure of up-rows.
fn transitive_closure(rows: &mut [u64]) {
    let n = rows.len();
    for (i, row) in rows.iter_mut().enumerate() {
        *row |= 1 << i;
    }
    // Standard iterate-to-fixpoint on bit rows; n <= 64 keeps this cheap.
    loop {
        let mut changed = false;
        for i in 0..n {
            let mut acc = rows[i];
            let mut bits = rows[i];
            while bits != 0 {
                let j = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                acc |= rows[j];
            }
            if acc != rows[i] {
                rows[i] = acc;
                changed = true;
            }
        }
        if !changed {
            return;
        }
    }
}

/// Scans every order/involution law on explicit up-rows. Shared between
/// validation and re-checks of already-built structures.
pub(crate) fn scan_order_laws(
    n: usize,
    up: &[u64],
    inv: &[usize],
    bot: usize,
    top: usize,
    labels: &[String],
) -> Report {
    let le = |a: usize, b: usize| up[a] >> b & 1 == 1;
    let mut report = Report::new();

    let mut reflexive = LawCheck::new("order.reflexive");
    for x in 0..n {
        if !le(x, x) {
            reflexive.record(
                vec![ElementId::new(x)],
                format!("{} <= {} does not hold", labels[x], labels[x]),
            );
        }
    }
    report.push(reflexive);

    let mut antisymmetric = LawCheck::new("order.antisymmetric");
    for a in 0..n {
        for b in (a + 1)..n {
            if le(a, b) && le(b, a) {
                antisymmetric.record(
                    vec![ElementId::new(a), ElementId::new(b)],
                    format!(
                        "{} <= {} and {} <= {}",
                        labels[a], labels[b], labels[b], labels[a]
                    ),
                );
            }
        }
    }
    report.push(antisymmetric);

    let mut transitive = LawCheck::new("order.transitive");
    for a in 0..n {
        for b in 0..n {
            if a != b && le(a, b) && up[b] & !up[a] != 0 {
                let c = (up[b] & !up[a]).trailing_zeros() as usize;
                transitive.record(
                    vec![ElementId::new(a), ElementId::new(b), ElementId::new(c)],
                    format!(
                        "{} <= {} <= {} but not {} <= {}",
                        labels[a], labels[b], labels[c], labels[a], labels[c]
                    ),
                );
            }
        }
    }
    report.push(transitive);

    let mut bounds = LawCheck::new("order.bounds");
    for x in 0..n {
        if !le(bot, x) {
            bounds.record(
                vec![ElementId::new(x)],
                format!("bot {} is not below {}", labels[bot], labels[x]),
            );
        }
        if !le(x, top) {
            bounds.record(
                vec![ElementId::new(x)],
                format!("{} is not below top {}", labels[x], labels[top]),
            );
        }
    }
    report.push(bounds);

    let mut involutive = LawCheck::new("involution.involutive");
    for x in 0..n {
        if inv[inv[x]] != x {
            involutive.record(
                vec![ElementId::new(x)],
                format!(
                    "({}')' = {} differs from {}",
                    labels[x], labels[inv[inv[x]]], labels[x]
                ),
            );
        }
    }
    report.push(involutive);

    let mut antitone = LawCheck::new("involution.antitone");
    for a in 0..n {
        for b in 0..n {
            if le(a, b) && !le(inv[b], inv[a]) {
                antitone.record(
                    vec![ElementId::new(a), ElementId::new(b)],
                    format!(
                        "{} <= {} but {}' = {} is not below {}' = {}",
                        labels[a], labels[b], labels[b], labels[inv[b]], labels[a], labels[inv[a]]
                    ),
                );
            }
        }
    }
    report.push(antitone);

    let mut bound_complement = LawCheck::new("involution.bound-complement");
    if inv[bot] != top {
        bound_complement.record(
            vec![ElementId::new(bot)],
            format!(
                "bot' = {} differs from top {}",
                labels[inv[bot]], labels[top]
            ),
        );
    }
    if inv[top] != bot {
        bound_complement.record(
            vec![ElementId::new(top)],
            format!(
                "top' = {} differs from bot {}",
                labels[inv[top]], labels[bot]
            ),
        );
    }
    report.push(bound_complement);

    report
}

/// A validated bounded poset with antitone involution.
///
/// Stores the full reflexive order as bitmask rows in both directions, so
/// cones are word operations. Immutable after validation.
#[derive(Debug, Clone)]
pub struct BoundedInvolutivePoset {
    n: usize,
    /// `up[a]` = bitmask of all `b` with `a <= b`.
    up: Vec<u64>,
    /// `down[b]` = bitmask of all `a` with `a <= b`.
    down: Vec<u64>,
    inv: Vec<ElementId>,
    bot: ElementId,
    top: ElementId,
    labels: Vec<String>,
}

/// First component on which two structures differ, for round-trip reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentMismatch {
    pub component: &'static str,
    pub detail: String,
}

impl BoundedInvolutivePoset {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.n).map(ElementId::new)
    }

    pub fn le(&self, a: ElementId, b: ElementId) -> bool {
        self.up[a.index()] >> b.index() & 1 == 1
    }

    pub fn lt(&self, a: ElementId, b: ElementId) -> bool {
        a != b && self.le(a, b)
    }

    pub fn inv(&self, a: ElementId) -> ElementId {
        self.inv[a.index()]
    }

    pub fn bot(&self) -> ElementId {
        self.bot
    }

    pub fn top(&self) -> ElementId {
        self.top
    }

    pub fn label(&self, a: ElementId) -> &str {
        &self.labels[a.index()]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn element_by_label(&self, label: &str) -> Option<ElementId> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(ElementId::new)
    }

    /// `{ x | a <= x }` as a subset.
    pub fn up_set(&self, a: ElementId) -> Subset {
        Subset::from_bits(self.n, self.up[a.index()])
    }

    /// `{ x | x <= a }` as a subset.
    pub fn down_set(&self, a: ElementId) -> Subset {
        Subset::from_bits(self.n, self.down[a.index()])
    }

    /// Lower cone `L(A)`: all common lower bounds. `L(∅)` is the carrier.
    pub fn lower_cone(&self, a: Subset) -> Subset {
        assert_eq!(a.width(), self.n, "subset of a different carrier");
        let mut acc = full_mask(self.n);
        for e in a.iter() {
            acc &= self.down[e.index()];
        }
        Subset::from_bits(self.n, acc)
    }

    /// Upper cone `U(A)`: all common upper bounds. `U(∅)` is the carrier.
    pub fn upper_cone(&self, a: Subset) -> Subset {
        assert_eq!(a.width(), self.n, "subset of a different carrier");
        let mut acc = full_mask(self.n);
        for e in a.iter() {
            acc &= self.up[e.index()];
        }
        Subset::from_bits(self.n, acc)
    }

    /// Lower cone of a pair, `L(a, b)`.
    pub fn lower_cone_pair(&self, a: ElementId, b: ElementId) -> Subset {
        Subset::from_bits(self.n, self.down[a.index()] & self.down[b.index()])
    }

    /// Upper cone of a pair, `U(a, b)`.
    pub fn upper_cone_pair(&self, a: ElementId, b: ElementId) -> Subset {
        Subset::from_bits(self.n, self.up[a.index()] & self.up[b.index()])
    }

    /// Elementwise involution image `A' = { x' | x in A }`.
    pub fn subset_inv(&self, a: Subset) -> Subset {
        assert_eq!(a.width(), self.n, "subset of a different carrier");
        Subset::from_elements(self.n, a.iter().map(|e| self.inv(e)))
    }

    /// The greatest element of `a`, if `a` has one.
    pub fn greatest(&self, a: Subset) -> Option<ElementId> {
        a.iter().find(|&g| a.is_subset_of(&self.down_set(g)))
    }

    /// The least element of `a`, if `a` has one.
    pub fn least(&self, a: Subset) -> Option<ElementId> {
        a.iter().find(|&l| a.is_subset_of(&self.up_set(l)))
    }

    /// Partial meet: greatest lower bound when it exists.
    pub fn meet(&self, a: ElementId, b: ElementId) -> Option<ElementId> {
        self.greatest(self.lower_cone_pair(a, b))
    }

    /// Partial join: least upper bound when it exists.
    pub fn join(&self, a: ElementId, b: ElementId) -> Option<ElementId> {
        self.least(self.upper_cone_pair(a, b))
    }

    /// The interval `[lo, hi]`; requires `lo <= hi`.
    pub fn interval(&self, lo: ElementId, hi: ElementId) -> Result<Subset, Error> {
        if !self.le(lo, hi) {
            return Err(Error::NotComparable { lo, hi });
        }
        Ok(Subset::from_bits(
            self.n,
            self.up[lo.index()] & self.down[hi.index()],
        ))
    }

    /// Elementwise join `A v a = { x v a | x in A }`; fails on the first
    /// member whose join with `a` does not exist.
    pub fn lift_join(&self, a: Subset, b: ElementId) -> Result<Subset, Error> {
        let mut out = Subset::empty(self.n);
        for x in a.iter() {
            match self.join(x, b) {
                Some(j) => out.insert(j),
                None => return Err(Error::UndefinedJoin { x, y: b }),
            }
        }
        Ok(out)
    }

    /// Elementwise meet `A ^ a = { x ^ a | x in A }`.
    pub fn lift_meet(&self, a: Subset, b: ElementId) -> Result<Subset, Error> {
        let mut out = Subset::empty(self.n);
        for x in a.iter() {
            match self.meet(x, b) {
                Some(m) => out.insert(m),
                None => return Err(Error::UndefinedMeet { x, y: b }),
            }
        }
        Ok(out)
    }

    /// Covering pairs `(a, b)` with `a` covered by `b`, in index order.
    pub fn covers(&self) -> Vec<(ElementId, ElementId)> {
        let mut out = Vec::new();
        for a in self.elements() {
            let strictly_above = self.up[a.index()] & !(1u64 << a.index());
            for b in self.elements() {
                if strictly_above >> b.index() & 1 == 1 {
                    let between = strictly_above & self.down[b.index()] & !(1u64 << b.index());
                    if between == 0 {
                        out.push((a, b));
                    }
                }
            }
        }
        out
    }

    /// Formats a subset with element labels, e.g. `{a, b'}`.
    pub fn format_subset(&self, s: Subset) -> String {
        let mut out = String::from("{");
        let mut first = true;
        for e in s.iter() {
            if !first {
                out.push_str(", ");
            }
            out.push_str(self.label(e));
            first = false;
        }
        out.push('}');
        out
    }

    /// Re-runs every order/involution law on the built structure.
    pub fn check_order_laws(&self) -> Report {
        scan_order_laws(
            self.n,
            &self.up,
            &self.inv.iter().map(|e| e.index()).collect::<Vec<_>>(),
            self.bot.index(),
            self.top.index(),
            &self.labels,
        )
    }

    /// Compares carrier size, bounds, order matrix, and involution.
    /// Labels are presentation only and are ignored.
    pub fn same_components(&self, other: &Self) -> Option<ComponentMismatch> {
        if self.n != other.n {
            return Some(ComponentMismatch {
                component: "carrier",
                detail: format!("{} elements vs {}", self.n, other.n),
            });
        }
        if self.bot != other.bot {
            return Some(ComponentMismatch {
                component: "bot",
                detail: format!("{} vs {}", self.label(self.bot), other.label(other.bot)),
            });
        }
        if self.top != other.top {
            return Some(ComponentMismatch {
                component: "top",
                detail: format!("{} vs {}", self.label(self.top), other.label(other.top)),
            });
        }
        for a in self.elements() {
            if self.up[a.index()] != other.up[a.index()] {
                let diff = self.up[a.index()] ^ other.up[a.index()];
                let b = ElementId::new(diff.trailing_zeros() as usize);
                return Some(ComponentMismatch {
                    component: "order",
                    detail: format!(
                        "pair ({}, {}): {} on one side, {} on the other",
                        self.label(a),
                        self.label(b),
                        self.le(a, b),
                        other.le(a, b)
                    ),
                });
            }
        }
        for a in self.elements() {
            if self.inv(a) != other.inv(a) {
                return Some(ComponentMismatch {
                    component: "involution",
                    detail: format!(
                        "{}' is {} on one side, {} on the other",
                        self.label(a),
                        self.label(self.inv(a)),
                        other.label(other.inv(a))
                    ),
                });
            }
        }
        None
    }
}

impl fmt::Display for BoundedInvolutivePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "carrier [{}], bot {}, top {}",
            self.labels.join(", "),
            self.label(self.bot),
            self.label(self.top)
        )?;
        let covers = self
            .covers()
            .iter()
            .map(|&(a, b)| format!("{} < {}", self.label(a), self.label(b)))
            .collect::<Vec<_>>();
        writeln!(f, "covers: {}", covers.join("; "))?;
        let invs = self
            .elements()
            .map(|a| format!("{}' = {}", self.label(a), self.label(self.inv(a))))
            .collect::<Vec<_>>();
        write!(f, "involution: {}", invs.join("; "))
    }
}
