//! Exhaustive enumeration of small bounded involutive posets and
//! orthomodular posets up to isomorphism, plus a stress runner that feeds
//! every enumerated structure through the full battery of law checks and
//! conversions.
//!
//! Enumeration strategy: a carrier of size `n` is generated in "natural
//! labeling" form — element `0` is the bottom, element `n - 1` the top,
//! and each element's strict down-set lies entirely among smaller indices
//! (every bounded order admits such a labeling via any linear extension).
//! Orders are produced by a depth-first scan over downward-closed
//! down-set choices; each order is then paired with every antitone
//! involution. Duplicates across labelings are removed by a canonical
//! form: the minimum byte encoding over all permutations that fix bottom
//! and top.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::functors::{roundtrip_omp, to_urp};
use crate::omp::{check_cone_decomposition, check_implication_laws, check_orthomodular};
use crate::poset::{BoundedInvolutivePoset, ElementId, RawPoset};
use crate::urp::validate_urp;
use crate::Error;

/// Largest carrier the exhaustive search accepts.
pub const MAX_SEARCH_SIZE: usize = 8;
/// Largest carrier the canonical form accepts (the scan is factorial in
/// the number of interior elements).
pub const MAX_CANONICAL_SIZE: usize = 10;

/// Which axioms enumerated structures must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureClass {
    /// Bounded posets with an antitone involution.
    BoundedInvolutive,
    /// Additionally: orthogonal joins, the orthomodular law, and
    /// complementation.
    Orthomodular,
}

impl StructureClass {
    pub fn admits(&self, p: &BoundedInvolutivePoset) -> bool {
        match self {
            StructureClass::BoundedInvolutive => true,
            StructureClass::Orthomodular => check_orthomodular(p).passed(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            StructureClass::BoundedInvolutive => "bounded-involutive",
            StructureClass::Orthomodular => "orthomodular",
        }
    }
}

/// Result of one enumeration run.
#[derive(Debug)]
pub struct SearchOutcome {
    pub size: usize,
    pub class: StructureClass,
    /// Naturally-labeled (order, involution) pairs that passed the class
    /// filter, before removing isomorphic duplicates.
    pub labeled_candidates: usize,
    /// One structure per isomorphism class, ordered by canonical form.
    pub representatives: Vec<BoundedInvolutivePoset>,
}

impl SearchOutcome {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }
}

/// All naturally-labeled bounded orders on `n` elements, as reflexive
/// up-set bitmask rows.
fn enumerate_orders(n: usize) -> Vec<Vec<u64>> {
    if n == 1 {
        return vec![vec![1]];
    }
    // below[i] = strict down-set of i as a bitmask over indices < i.
    let mut below = vec![0u64; n];
    let mut out = Vec::new();
    fn extend(i: usize, n: usize, below: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if i == n - 1 {
            below[i] = (1 << i) - 1;
            let mut rows = vec![0u64; n];
            for (j, row) in rows.iter_mut().enumerate() {
                *row = 1 << j;
            }
            for j in 0..n {
                for k in 0..j {
                    if below[j] >> k & 1 == 1 {
                        rows[k] |= 1 << j;
                    }
                }
            }
            out.push(rows);
            return;
        }
        // Candidate strict down-sets: subsets of the smaller indices that
        // contain bottom and are downward closed.
        let pool = ((1u64 << i) - 1) & !1;
        let mut extra = pool;
        loop {
            let mask = extra | 1;
            let closed = bit_indices(mask).all(|j| below[j] & !mask == 0);
            if closed {
                below[i] = mask;
                extend(i + 1, n, below, out);
            }
            if extra == 0 {
                break;
            }
            extra = (extra - 1) & pool;
        }
    }
    extend(1, n, &mut below, &mut out);
    out
}

fn bit_indices(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

/// All antitone involutions on a naturally-labeled order; each maps
/// `0 ↔ n - 1` and swaps or fixes interior elements.
fn antitone_involutions(n: usize, rows: &[u64]) -> Vec<Vec<usize>> {
    let antitone = |sigma: &[usize]| {
        (0..n).all(|i| bit_indices(rows[i]).all(|j| rows[sigma[j]] >> sigma[i] & 1 == 1))
    };

    if n == 1 {
        return vec![vec![0]];
    }
    let mut sigma = vec![usize::MAX; n];
    sigma[0] = n - 1;
    sigma[n - 1] = 0;
    let mut out = Vec::new();
    fn pair_up(
        sigma: &mut Vec<usize>,
        n: usize,
        check: &dyn Fn(&[usize]) -> bool,
        out: &mut Vec<Vec<usize>>,
    ) {
        let Some(i) = (1..n - 1).find(|&i| sigma[i] == usize::MAX) else {
            if check(sigma) {
                out.push(sigma.clone());
            }
            return;
        };
        sigma[i] = i;
        pair_up(sigma, n, check, out);
        for j in i + 1..n - 1 {
            if sigma[j] == usize::MAX {
                sigma[i] = j;
                sigma[j] = i;
                pair_up(sigma, n, check, out);
                sigma[j] = usize::MAX;
            }
        }
        sigma[i] = usize::MAX;
    }
    pair_up(&mut sigma, n, &antitone, &mut out);
    out
}

fn build(n: usize, rows: Vec<u64>, inv: Vec<usize>) -> BoundedInvolutivePoset {
    RawPoset::from_up_masks(n, rows, inv, 0, n - 1)
        .validate()
        .expect("enumerated candidate is structurally sound")
        .poset
        .expect("enumerated candidate satisfies the order and involution laws")
}

/// The canonical byte encoding of a structure: the lexicographic minimum,
/// over all permutations fixing bottom and top, of the relabeled up-set
/// rows followed by the relabeled involution. Two structures are
/// isomorphic exactly when their canonical forms agree.
pub fn canonical_form(p: &BoundedInvolutivePoset) -> Result<Vec<u8>, Error> {
    let n = p.n();
    if n > MAX_CANONICAL_SIZE {
        return Err(Error::InvalidParameter {
            what: format!("canonical form supports up to {MAX_CANONICAL_SIZE} elements, got {n}"),
        });
    }
    if n == 1 {
        return Ok(vec![1, 1, 0, 0]);
    }

    let le = |a: usize, b: usize| p.le(ElementId::new(a), ElementId::new(b));
    let inv = |a: usize| p.inv(ElementId::new(a)).index();
    let (bot, top) = (p.bot().index(), p.top().index());
    let middle: Vec<usize> = (0..n).filter(|&i| i != bot && i != top).collect();

    let mut best: Option<Vec<u8>> = None;
    let mut sigma = vec![0usize; n]; // new index -> old index
    let mut old_to_new = vec![0usize; n];
    for perm in middle.iter().copied().permutations(middle.len()) {
        sigma[0] = bot;
        sigma[n - 1] = top;
        sigma[1..n - 1].copy_from_slice(&perm);
        for (new, &old) in sigma.iter().enumerate() {
            old_to_new[old] = new;
        }
        let mut enc = Vec::with_capacity(1 + 3 * n);
        enc.push(n as u8);
        for &old_i in &sigma {
            let mut mask = 0u16;
            for (new_j, &old_j) in sigma.iter().enumerate() {
                if le(old_i, old_j) {
                    mask |= 1 << new_j;
                }
            }
            enc.extend_from_slice(&mask.to_le_bytes());
        }
        for &old_i in &sigma {
            enc.push(old_to_new[inv(old_i)] as u8);
        }
        if best.as_ref().is_none_or(|b| enc < *b) {
            best = Some(enc);
        }
    }
    Ok(best.expect("at least one arrangement of the interior"))
}

/// Rebuilds a structure under the bijection `perm[old] = new`.
pub fn relabel(
    p: &BoundedInvolutivePoset,
    perm: &[usize],
) -> Result<BoundedInvolutivePoset, Error> {
    let n = p.n();
    if perm.len() != n {
        return Err(Error::DimensionMismatch {
            what: "relabeling permutation",
            expected: n,
            found: perm.len(),
        });
    }
    let mut seen = vec![false; n];
    for &v in perm {
        if v >= n || seen[v] {
            return Err(Error::InvalidParameter {
                what: "relabeling is not a permutation of the carrier".to_string(),
            });
        }
        seen[v] = true;
    }

    let mut rows = vec![0u64; n];
    let mut inv = vec![0usize; n];
    let mut labels = vec![String::new(); n];
    for i in 0..n {
        let e = ElementId::new(i);
        for j in 0..n {
            if p.le(e, ElementId::new(j)) {
                rows[perm[i]] |= 1 << perm[j];
            }
        }
        inv[perm[i]] = perm[p.inv(e).index()];
        labels[perm[i]] = p.label(e).to_string();
    }
    let validated =
        RawPoset::from_up_masks(n, rows, inv, perm[p.bot().index()], perm[p.top().index()])
            .with_labels(labels)
            .validate()?;
    Ok(validated
        .poset
        .expect("relabeling a lawful structure preserves every law"))
}

/// Enumerates all structures of the given size and class up to
/// isomorphism. `jobs` worker threads split the candidate list into
/// contiguous chunks; results are merged deterministically.
pub fn enumerate(size: usize, class: StructureClass, jobs: usize) -> Result<SearchOutcome, Error> {
    if size == 0 || size > MAX_SEARCH_SIZE {
        return Err(Error::InvalidParameter {
            what: format!("search supports sizes 1..={MAX_SEARCH_SIZE}, got {size}"),
        });
    }

    let mut candidates = Vec::new();
    for rows in enumerate_orders(size) {
        for inv in antitone_involutions(size, &rows) {
            candidates.push((rows.clone(), inv));
        }
    }

    let jobs = jobs.max(1).min(candidates.len().max(1));
    let classify = |chunk: &[(Vec<u64>, Vec<usize>)]| {
        let mut kept = 0usize;
        let mut classes: BTreeMap<Vec<u8>, BoundedInvolutivePoset> = BTreeMap::new();
        for (rows, inv) in chunk {
            let p = build(size, rows.clone(), inv.clone());
            if !class.admits(&p) {
                continue;
            }
            kept += 1;
            let key = canonical_form(&p).expect("search sizes fit the canonical-form limit");
            classes.entry(key).or_insert(p);
        }
        (kept, classes)
    };

    let (labeled_candidates, classes) = if jobs == 1 {
        classify(&candidates)
    } else {
        let chunk_len = candidates.len().div_ceil(jobs);
        let classify = &classify;
        let results: Vec<(usize, BTreeMap<Vec<u8>, BoundedInvolutivePoset>)> =
            std::thread::scope(|scope| {
                let handles: Vec<_> = candidates
                    .chunks(chunk_len)
                    .map(|chunk| scope.spawn(move || classify(chunk)))
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("worker"))
                    .collect()
            });
        let mut kept = 0usize;
        let mut merged = BTreeMap::new();
        for (k, classes) in results {
            kept += k;
            for (key, p) in classes {
                merged.entry(key).or_insert(p);
            }
        }
        (kept, merged)
    };

    Ok(SearchOutcome {
        size,
        class,
        labeled_candidates,
        representatives: classes.into_values().collect(),
    })
}

/// Outcome of running the full law battery over every enumerated
/// orthomodular poset up to a size bound.
#[derive(Debug)]
pub struct StressOutcome {
    /// (size, number of isomorphism classes) per carrier size.
    pub per_size: Vec<(usize, usize)>,
    pub structures: usize,
    /// Human-readable descriptions of any failed check; empty on success.
    pub failures: Vec<String>,
}

impl StressOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For every orthomodular poset with at most `max_size` elements (up to
/// isomorphism): the cone decomposition identities, the implication laws,
/// conversion to a residuated structure satisfying all residuation laws
/// with divisibility, idempotence and zero annihilation, and the
/// poset-to-structure-to-poset round trip.
pub fn stress_theorems(max_size: usize, jobs: usize) -> Result<StressOutcome, Error> {
    if max_size == 0 || max_size > MAX_SEARCH_SIZE {
        return Err(Error::InvalidParameter {
            what: format!("stress run supports sizes 1..={MAX_SEARCH_SIZE}, got {max_size}"),
        });
    }

    let mut per_size = Vec::new();
    let mut structures = 0usize;
    let mut failures = Vec::new();
    for size in 1..=max_size {
        let found = enumerate(size, StructureClass::Orthomodular, jobs)?;
        per_size.push((size, found.count()));
        for (idx, p) in found.representatives.iter().enumerate() {
            structures += 1;
            let tag = format!("size {size} class {idx}");
            let mut fail = |what: String| failures.push(format!("{tag}: {what}"));

            let cones = check_cone_decomposition(p);
            if !cones.passed() {
                fail(format!("cone decomposition:\n{}", cones.render()));
            }
            let imp = check_implication_laws(p);
            if !imp.passed() {
                fail(format!("implication laws:\n{}", imp.render()));
            }
            match to_urp(p) {
                Err(e) => fail(format!("conversion refused: {e}")),
                Ok(s) => {
                    let r = validate_urp(&s);
                    if !r.laws_pass() {
                        fail(format!("residuation laws:\n{}", r.render()));
                    }
                    if !r.divisibility.passed() {
                        fail("converted structure is not divisible".to_string());
                    }
                    if !r.idempotence.passed() {
                        fail("converted structure is not idempotent".to_string());
                    }
                    if !r.zero_product {
                        fail("converted structure does not annihilate at 0".to_string());
                    }
                }
            }
            match roundtrip_omp(p) {
                Err(e) => fail(format!("round trip refused: {e}")),
                Ok(r) if !r.equal => fail(format!("round trip changed: {:?}", r.first_discrepancy)),
                Ok(_) => {}
            }
        }
    }

    Ok(StressOutcome {
        per_size,
        structures,
        failures,
    })
}
