//! Acceptance suite: one test per criterion, each printing a single
//! `criterion N (...): pass` line and asserting the stated bound.
//!
//! Criteria that pin counts use oracles computed here by independent
//! means (raw matrix enumeration with full-permutation bucketing), not by
//! the search module under test.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use unsharp_core::catalog;
use unsharp_core::functors::{roundtrip_omp, roundtrip_urp, to_urp};
use unsharp_core::omp::{check_cone_decomposition, check_implication_laws, check_orthomodular};
use unsharp_core::poset::{BoundedInvolutivePoset, RawPoset};
use unsharp_core::search::{enumerate, StructureClass};
use unsharp_core::urp::{check_product_meet_agreement, check_r3, check_r3_dual, validate_urp};
use unsharp_core::{ElementId, Subset};

fn conclude(number: usize, what: &str, failures: &[String]) {
    let verdict = if failures.is_empty() { "pass" } else { "FAIL" };
    println!("criterion {number} ({what}): {verdict}");
    assert!(failures.is_empty(), "criterion {number}: {failures:#?}");
}

fn e(i: usize) -> ElementId {
    ElementId::new(i)
}

/// A bounded involutive four-chain; not orthomodular, used as the mutant
/// that the identity suites must reject.
fn four_chain() -> BoundedInvolutivePoset {
    RawPoset::from_pairs(4, [(0, 1), (1, 2), (2, 3)], vec![3, 2, 1, 0], 0, 3)
        .validate()
        .unwrap()
        .poset
        .unwrap()
}

#[test]
fn criterion_1_partial_meets_on_the_even_set_system() {
    let started = Instant::now();
    let mut failures = Vec::new();

    let p = catalog::even_subsets(6).unwrap();
    let ab = p.element_by_label("{1,2}").unwrap();
    let abcd = p.element_by_label("{1,2,3,4}").unwrap();
    let bcde = p.element_by_label("{2,3,4,5}").unwrap();

    match p.meet(ab, abcd) {
        Some(first) if p.label(first) == "{1,2}" => match p.meet(first, bcde) {
            Some(second) if second == p.bot() => {}
            other => failures.push(format!("second step gave {other:?}")),
        },
        other => failures.push(format!("first step gave {other:?}")),
    }
    if p.meet(abcd, bcde).is_some() {
        failures.push("meet of the two four-element sets should be undefined".into());
    }
    if started.elapsed() > Duration::from_secs(1) {
        failures.push(format!("took {:?}, budget 1 s", started.elapsed()));
    }

    conclude(1, "partial meets on the even-set system", &failures);
}

#[test]
fn criterion_2_six_element_structure_satisfies_every_law() {
    let started = Instant::now();
    let mut failures = Vec::new();

    let s = catalog::mo2_residuated();
    let r = validate_urp(&s);
    if !r.laws_pass() {
        failures.push(format!("core laws failed:\n{}", r.render()));
    }
    for (name, check) in [
        ("formulation agreement", &r.r3_dual_agreement),
        ("divisibility", &r.divisibility),
        ("idempotence", &r.idempotence),
    ] {
        if !check.passed() {
            failures.push(format!("{name} failed"));
        }
    }
    let triples = check_r3(&s).triples_checked;
    if triples != 216 {
        failures.push(format!(
            "expected 216 adjointness triples, scanned {triples}"
        ));
    }
    if started.elapsed() > Duration::from_secs(1) {
        failures.push(format!("took {:?}, budget 1 s", started.elapsed()));
    }

    conclude(2, "six-element structure satisfies every law", &failures);
}

#[test]
fn criterion_3_conversions_of_catalog_posets_are_lawful() {
    let started = Instant::now();
    let mut failures = Vec::new();

    let mut fixtures = vec![
        (
            "even-subsets 4".to_string(),
            catalog::even_subsets(4).unwrap(),
        ),
        (
            "even-subsets 6".to_string(),
            catalog::even_subsets(6).unwrap(),
        ),
    ];
    for k in 1..=4 {
        fixtures.push((format!("boolean {k}"), catalog::boolean_algebra(k).unwrap()));
        fixtures.push((format!("mo {k}"), catalog::mo(k).unwrap()));
    }

    for (name, p) in fixtures {
        match to_urp(&p) {
            Err(err) => failures.push(format!("{name}: conversion refused: {err}")),
            Ok(s) => {
                let r = validate_urp(&s);
                if !r.laws_pass() {
                    failures.push(format!("{name}: laws failed:\n{}", r.render()));
                }
                if !r.divisibility.passed() {
                    failures.push(format!("{name}: not divisible"));
                }
                if !r.idempotence.passed() {
                    failures.push(format!("{name}: not idempotent"));
                }
                if !r.zero_product {
                    failures.push(format!("{name}: does not annihilate at 0"));
                }
            }
        }
    }
    if started.elapsed() > Duration::from_secs(10) {
        failures.push(format!("took {:?}, budget 10 s", started.elapsed()));
    }

    conclude(3, "conversions of catalog posets are lawful", &failures);
}

#[test]
fn criterion_4_converted_tables_match_the_tabulated_structure() {
    let mut failures = Vec::new();

    let built = to_urp(&catalog::mo(2).unwrap()).unwrap();
    let tabulated = catalog::mo2_residuated();
    if built.product != tabulated.product {
        failures.push("product tables differ".into());
    }
    if built.implication != tabulated.implication {
        failures.push("implication tables differ".into());
    }
    // Entrywise: all 36 product entries defined, all 36 implication sets
    // non-empty.
    for a in (0..6).map(e) {
        for b in (0..6).map(e) {
            if built.product.get(a, b).is_none() {
                failures.push(format!("product undefined at ({a}, {b})"));
            }
            if built.implication.get(a, b).is_empty() {
                failures.push(format!("implication empty at ({a}, {b})"));
            }
        }
    }

    conclude(
        4,
        "converted tables match the tabulated structure",
        &failures,
    );
}

#[test]
fn criterion_5_poset_roundtrips_over_catalog_and_search() {
    let started = Instant::now();
    let mut failures = Vec::new();

    for (name, p) in catalog::omp_fixtures() {
        match roundtrip_omp(&p) {
            Err(err) => failures.push(format!("catalog {name}: {err}")),
            Ok(r) if !r.equal => {
                failures.push(format!("catalog {name}: {:?}", r.first_discrepancy))
            }
            Ok(_) => {}
        }
    }

    let mut enumerated = 0usize;
    for size in 1..=8 {
        let found = enumerate(size, StructureClass::Orthomodular, 1).unwrap();
        for (idx, p) in found.representatives.iter().enumerate() {
            enumerated += 1;
            match roundtrip_omp(p) {
                Err(err) => failures.push(format!("size {size} class {idx}: {err}")),
                Ok(r) if !r.equal => failures.push(format!(
                    "size {size} class {idx}: {:?}",
                    r.first_discrepancy
                )),
                Ok(_) => {}
            }
        }
    }
    if enumerated == 0 {
        failures.push("search produced no structures to round-trip".into());
    }
    if started.elapsed() > Duration::from_secs(300) {
        failures.push(format!("took {:?}, budget 5 min", started.elapsed()));
    }

    conclude(5, "poset round trips over catalog and search", &failures);
}

#[test]
fn criterion_6_structure_roundtrip_restores_tables() {
    let mut failures = Vec::new();

    let s = catalog::mo2_residuated();
    match roundtrip_urp(&s) {
        Err(err) => failures.push(format!("round trip refused: {err}")),
        Ok(r) if !r.equal => failures.push(format!("{:?}", r.first_discrepancy)),
        Ok(_) => {}
    }
    // Explicit re-derivation: the rebuilt product must equal the original
    // on every orthogonal pair.
    let back = to_urp(&s.poset).unwrap();
    let p = &s.poset;
    for a in p.elements() {
        for b in p.elements() {
            if p.le(p.inv(a), b) && s.product.get(a, b) != back.product.get(a, b) {
                failures.push(format!(
                    "products differ at orthogonal pair ({}, {})",
                    p.label(a),
                    p.label(b)
                ));
            }
        }
    }
    if s.implication != back.implication {
        failures.push("implication tables differ".into());
    }

    conclude(6, "structure round trip restores the tables", &failures);
}

#[test]
fn criterion_7_identity_suites_pass_and_catch_mutants() {
    let mut failures = Vec::new();

    // Positive side: every catalog poset satisfies the cone decomposition
    // and implication identities; every conversion (and the tabulated
    // structure) satisfies product/meet agreement.
    for (name, p) in catalog::omp_fixtures() {
        let cones = check_cone_decomposition(&p);
        if !cones.passed() {
            failures.push(format!("{name}: cone decomposition:\n{}", cones.render()));
        }
        let imp = check_implication_laws(&p);
        if !imp.passed() {
            failures.push(format!("{name}: implication laws:\n{}", imp.render()));
        }
        if p.n() <= 32 {
            let s = to_urp(&p).unwrap();
            match check_product_meet_agreement(&s) {
                Err(err) => failures.push(format!("{name}: agreement refused: {err}")),
                Ok(c) if !c.passed() => {
                    failures.push(format!("{name}: product/meet agreement failed"))
                }
                Ok(_) => {}
            }
        }
    }
    match check_product_meet_agreement(&catalog::mo2_residuated()) {
        Ok(c) if c.passed() => {}
        other => failures.push(format!("tabulated structure agreement: {other:?}")),
    }

    // Mutant side: each suite must reject a deliberately broken input
    // with a concrete witness.
    let chain = four_chain();
    let cones = check_cone_decomposition(&chain);
    let cone_witness = cones
        .checks
        .iter()
        .find(|c| !c.passed())
        .and_then(|c| c.witnesses().first().cloned());
    match cone_witness {
        Some(w) if w.elements == vec![e(1), e(0)] && !w.detail.is_empty() => {}
        other => failures.push(format!("cone mutant witness: {other:?}")),
    }

    let imp = check_implication_laws(&chain);
    let imp_witness = imp
        .checks
        .iter()
        .find(|c| !c.passed())
        .and_then(|c| c.witnesses().first().cloned());
    match imp_witness {
        Some(w) if !w.elements.is_empty() && !w.detail.is_empty() => {}
        other => failures.push(format!("implication mutant witness: {other:?}")),
    }

    let mut tampered = catalog::mo2_residuated();
    tampered.product.set(e(1), e(3), Some(e(5)));
    tampered.product.set(e(3), e(1), Some(e(5)));
    match check_product_meet_agreement(&tampered) {
        Ok(c) if !c.passed() && c.witnesses()[0].elements == vec![e(1), e(3)] => {}
        other => failures.push(format!("agreement mutant: {other:?}")),
    }

    conclude(7, "identity suites pass and catch mutants", &failures);
}

#[test]
fn criterion_8_adjointness_formulations_agree() {
    let mut failures = Vec::new();

    let mut compare = |name: &str,
                       s: &unsharp_core::UnsharpResiduatedStructure,
                       expect_failing: bool,
                       must_contain: Option<(usize, usize, usize)>| {
        let cone_route = check_r3(s);
        let order_route = check_r3_dual(s);
        if cone_route.failing != order_route.failing {
            failures.push(format!(
                "{name}: formulations disagree: {:?} vs {:?}",
                cone_route.failing, order_route.failing
            ));
        }
        if expect_failing == cone_route.failing.is_empty() {
            failures.push(format!(
                "{name}: expected failing = {expect_failing}, got {} triples",
                cone_route.failing.len()
            ));
        }
        if let Some((x, y, z)) = must_contain {
            if !cone_route.failing.contains(&(e(x), e(y), e(z))) {
                failures.push(format!("{name}: expected triple ({x}, {y}, {z}) missing"));
            }
        }
    };

    let genuine = catalog::mo2_residuated();
    compare("genuine", &genuine, false, None);

    // Mutant 1: shrink a → a from {a', 1} to {a'}.
    let mut m1 = catalog::mo2_residuated();
    m1.implication.set(e(1), e(1), Subset::singleton(6, e(2)));
    compare("shrunken reflexive implication", &m1, true, Some((2, 1, 1)));

    // Mutant 2: replace a → b = {a'} with {1}.
    let mut m2 = catalog::mo2_residuated();
    m2.implication.set(e(1), e(3), Subset::singleton(6, e(5)));
    compare("inflated cross implication", &m2, true, Some((2, 1, 3)));

    // Mutant 3: shrink b → b from {b', 1} to {b'}.
    let mut m3 = catalog::mo2_residuated();
    m3.implication.set(e(3), e(3), Subset::singleton(6, e(4)));
    compare(
        "shrunken second-block implication",
        &m3,
        true,
        Some((4, 3, 3)),
    );

    conclude(8, "adjointness formulations agree", &failures);
}

/// All involutive permutations of `0..n` (any number of fixed points).
fn involutions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut sigma = vec![usize::MAX; n];
    fn step(sigma: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some(i) = sigma.iter().position(|&v| v == usize::MAX) else {
            out.push(sigma.clone());
            return;
        };
        sigma[i] = i;
        step(sigma, out);
        for j in i + 1..sigma.len() {
            if sigma[j] == usize::MAX {
                sigma[i] = j;
                sigma[j] = i;
                step(sigma, out);
                sigma[j] = usize::MAX;
            }
        }
        sigma[i] = usize::MAX;
    }
    step(&mut sigma, &mut out);
    out
}

/// A canonical key over the FULL symmetric group (the search module only
/// permutes interior elements, so this is an independent bucketing).
fn full_permutation_key(p: &BoundedInvolutivePoset) -> Vec<u8> {
    use itertools::Itertools;
    let n = p.n();
    let mut best: Option<Vec<u8>> = None;
    for sigma in (0..n).permutations(n) {
        // sigma[new] = old
        let mut old_to_new = vec![0usize; n];
        for (new, &old) in sigma.iter().enumerate() {
            old_to_new[old] = new;
        }
        let mut enc = Vec::with_capacity(3 + 3 * n);
        enc.push(n as u8);
        enc.push(old_to_new[p.bot().index()] as u8);
        enc.push(old_to_new[p.top().index()] as u8);
        for &old_i in &sigma {
            let mut mask = 0u16;
            for (new_j, &old_j) in sigma.iter().enumerate() {
                if p.le(e(old_i), e(old_j)) {
                    mask |= 1 << new_j;
                }
            }
            enc.extend_from_slice(&mask.to_le_bytes());
        }
        for &old_i in &sigma {
            enc.push(old_to_new[p.inv(e(old_i)).index()] as u8);
        }
        if best.as_ref().is_none_or(|b| enc < *b) {
            best = Some(enc);
        }
    }
    best.expect("carrier is non-empty")
}

/// Unpruned oracle: every assignment of order bits between interior
/// elements (bottom and top relations forced), crossed with every
/// involution of the carrier, validated from scratch and bucketed by the
/// full-permutation key. Returns isomorphism-class counts for
/// (bounded involutive, orthomodular).
fn oracle_counts(n: usize) -> (usize, usize) {
    if n == 1 {
        return (1, 1);
    }
    let interior: Vec<usize> = (1..n - 1).collect();
    let free_pairs: Vec<(usize, usize)> = interior
        .iter()
        .flat_map(|&i| interior.iter().map(move |&j| (i, j)))
        .filter(|&(i, j)| i != j)
        .collect();
    let sigmas = involutions(n);

    let mut involutive = BTreeSet::new();
    let mut orthomodular = BTreeSet::new();
    for assignment in 0u64..1 << free_pairs.len() {
        let mut rows = vec![0u64; n];
        rows[0] = (1 << n) - 1;
        for &i in &interior {
            rows[i] = (1 << i) | (1 << (n - 1));
        }
        rows[n - 1] = 1 << (n - 1);
        for (bit, &(i, j)) in free_pairs.iter().enumerate() {
            if assignment >> bit & 1 == 1 {
                rows[i] |= 1 << j;
            }
        }
        for sigma in &sigmas {
            let validated = RawPoset::from_up_masks(n, rows.clone(), sigma.clone(), 0, n - 1)
                .validate()
                .expect("structurally well-formed candidate");
            let Some(p) = validated.poset else { continue };
            let key = full_permutation_key(&p);
            if check_orthomodular(&p).passed() {
                orthomodular.insert(key.clone());
            }
            involutive.insert(key);
        }
    }
    (involutive.len(), orthomodular.len())
}

#[test]
fn criterion_9_search_counts_match_the_oracle() {
    let mut failures = Vec::new();

    for n in 1..=5 {
        let (want_involutive, want_orthomodular) = oracle_counts(n);
        let got_involutive = enumerate(n, StructureClass::BoundedInvolutive, 1)
            .unwrap()
            .count();
        let got_orthomodular = enumerate(n, StructureClass::Orthomodular, 1)
            .unwrap()
            .count();
        if got_involutive != want_involutive {
            failures.push(format!(
                "size {n}: {got_involutive} involutive classes, oracle says {want_involutive}"
            ));
        }
        if got_orthomodular != want_orthomodular {
            failures.push(format!(
                "size {n}: {got_orthomodular} orthomodular classes, oracle says {want_orthomodular}"
            ));
        }
    }
    let two = enumerate(2, StructureClass::Orthomodular, 1)
        .unwrap()
        .count();
    if two != 1 {
        failures.push(format!("size 2 orthomodular count is {two}, want 1"));
    }

    conclude(9, "search counts match the unpruned oracle", &failures);
}

#[test]
fn criterion_10_cone_galois_and_de_morgan_laws() {
    let mut failures = Vec::new();
    let mut rng = StdRng::seed_from_u64(0x0c0_ffee);

    fn check_subset(
        p: &BoundedInvolutivePoset,
        a: Subset,
        extensions: &[ElementId],
        failures: &mut Vec<String>,
    ) {
        let n = p.n();
        let lower = p.lower_cone(a);
        let upper = p.upper_cone(a);
        if !a.is_subset_of(&p.upper_cone(lower)) || !a.is_subset_of(&p.lower_cone(upper)) {
            failures.push(format!("extensivity fails on {a:?} (n = {n})"));
        }
        if p.lower_cone(p.upper_cone(lower)) != lower {
            failures.push(format!("L∘U∘L ≠ L on {a:?} (n = {n})"));
        }
        if p.upper_cone(p.lower_cone(upper)) != upper {
            failures.push(format!("U∘L∘U ≠ U on {a:?} (n = {n})"));
        }
        if p.subset_inv(lower) != p.upper_cone(p.subset_inv(a))
            || p.subset_inv(upper) != p.lower_cone(p.subset_inv(a))
        {
            failures.push(format!("cone duality fails on {a:?} (n = {n})"));
        }
        // Antitonicity across one-element extensions generates the general
        // monotone comparison.
        for &extra in extensions {
            let mut b = a;
            b.insert(extra);
            if !p.upper_cone(b).is_subset_of(&upper) || !p.lower_cone(b).is_subset_of(&lower) {
                failures.push(format!("antitonicity fails on {a:?} + {extra} (n = {n})"));
            }
        }
    }

    for (name, p) in catalog::omp_fixtures() {
        let n = p.n();
        let before = failures.len();
        if n <= 12 {
            let all: Vec<ElementId> = p.elements().collect();
            for bits in 0u64..1 << n {
                check_subset(&p, Subset::from_bits(n, bits), &all, &mut failures);
            }
        } else {
            let mask = Subset::full(n).bits();
            for _ in 0..10_000 {
                let bits = rng.random::<u64>() & mask;
                let extension = [e(rng.random_range(0..n))];
                check_subset(&p, Subset::from_bits(n, bits), &extension, &mut failures);
            }
        }
        if failures.len() > before {
            failures.truncate(before + 3);
            failures.push(format!("(structure {name}, further failures trimmed)"));
            break;
        }
    }

    conclude(10, "cone Galois and De Morgan laws", &failures);
}
