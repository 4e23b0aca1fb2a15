//! A small catalog of named structures used throughout the tests and the
//! command line: Boolean algebras, even-cardinality set systems, horizontal
//! sums of four-element blocks, and one fully tabulated six-element
//! residuated structure.

use crate::poset::{BoundedInvolutivePoset, ElementId, RawPoset};
use crate::subset::Subset;
use crate::urp::{PartialBinaryOp, SetValuedBinaryOp, UnsharpResiduatedStructure};
use crate::{Error, Structure};

fn finish(raw: RawPoset, what: &str) -> BoundedInvolutivePoset {
    raw.validate()
        .unwrap_or_else(|e| panic!("{what}: structural defect: {e}"))
        .poset
        .unwrap_or_else(|| panic!("{what}: law violation in a built-in structure"))
}

fn set_label(mask: u32, ground: usize) -> String {
    if mask == 0 {
        return "{}".to_string();
    }
    let members: Vec<String> = (0..ground)
        .filter(|i| mask & (1 << i) != 0)
        .map(|i| (i + 1).to_string())
        .collect();
    format!("{{{}}}", members.join(","))
}

/// The powerset of `atoms` atoms ordered by inclusion; element `m` is the
/// set of atoms in the binary expansion of `m`. Valid for `1..=6` atoms
/// (up to 64 elements).
pub fn boolean_algebra(atoms: usize) -> Result<BoundedInvolutivePoset, Error> {
    if !(1..=6).contains(&atoms) {
        return Err(Error::InvalidParameter {
            what: format!("boolean takes 1..=6 atoms, got {atoms}"),
        });
    }
    let n = 1usize << atoms;
    let full = (n - 1) as u32;
    let rows = (0..n as u32)
        .map(|m| {
            (0..n as u32)
                .filter(|s| m & s == m)
                .fold(0u64, |acc, s| acc | (1 << s))
        })
        .collect();
    let inv = (0..n as u32).map(|m| (full ^ m) as usize).collect();
    let labels = (0..n as u32)
        .map(|m| {
            if m == 0 {
                "0".to_string()
            } else if m == full {
                "1".to_string()
            } else {
                set_label(m, atoms)
            }
        })
        .collect();
    Ok(finish(
        RawPoset::from_up_masks(n, rows, inv, 0, n - 1).with_labels(labels),
        "boolean",
    ))
}

/// All subsets of `{1, …, ground}` of even cardinality, ordered by
/// inclusion, with set complement as involution. Valid for `ground` equal
/// to 2, 4 or 6. Not a lattice for `ground >= 6`: two four-element sets
/// can share three maximal lower bounds.
pub fn even_subsets(ground: usize) -> Result<BoundedInvolutivePoset, Error> {
    if !matches!(ground, 2 | 4 | 6) {
        return Err(Error::InvalidParameter {
            what: format!("even-subsets takes ground size 2, 4 or 6, got {ground}"),
        });
    }
    let full = (1u32 << ground) - 1;
    let members: Vec<u32> = (0..=full).filter(|m| m.count_ones() % 2 == 0).collect();
    let n = members.len();
    let index_of = |mask: u32| members.binary_search(&mask).expect("member mask");
    let rows = members
        .iter()
        .map(|&m| {
            members
                .iter()
                .enumerate()
                .filter(|&(_, &s)| m & s == m)
                .fold(0u64, |acc, (j, _)| acc | (1 << j))
        })
        .collect();
    let inv = members.iter().map(|&m| index_of(full ^ m)).collect();
    let labels = members.iter().map(|&m| set_label(m, ground)).collect();
    Ok(finish(
        RawPoset::from_up_masks(n, rows, inv, 0, n - 1).with_labels(labels),
        "even-subsets",
    ))
}

/// The horizontal sum of `blocks` four-element Boolean blocks: bounds `0`
/// and `1` plus pairwise incomparable atoms-and-coatoms `a1, a1', …`.
/// Valid for `1..=31` blocks (up to 64 elements).
pub fn mo(blocks: usize) -> Result<BoundedInvolutivePoset, Error> {
    if !(1..=31).contains(&blocks) {
        return Err(Error::InvalidParameter {
            what: format!("mo takes 1..=31 blocks, got {blocks}"),
        });
    }
    let n = 2 * blocks + 2;
    let top = n - 1;
    let mut rows = vec![0u64; n];
    rows[0] = Subset::full(n).bits();
    rows[top] = 1 << top;
    for i in 1..top {
        rows[i] = (1 << i) | (1 << top);
    }
    let mut inv = vec![0usize; n];
    inv[0] = top;
    inv[top] = 0;
    for b in 1..=blocks {
        inv[2 * b - 1] = 2 * b;
        inv[2 * b] = 2 * b - 1;
    }
    let mut labels = vec!["0".to_string()];
    for b in 1..=blocks {
        labels.push(format!("a{b}"));
        labels.push(format!("a{b}'"));
    }
    labels.push("1".to_string());
    Ok(finish(
        RawPoset::from_up_masks(n, rows, inv, 0, top).with_labels(labels),
        "mo",
    ))
}

/// Product values for the six-element structure, indexed `0, a, a', b, b',
/// 1`; entry `[x][y]` is the value of `x ⊙ y` (the table is total).
const SIX_PRODUCT: [[usize; 6]; 6] = [
    [0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 1],
    [0, 0, 2, 0, 0, 2],
    [0, 0, 0, 3, 0, 3],
    [0, 0, 0, 0, 4, 4],
    [0, 1, 2, 3, 4, 5],
];

/// Implication values for the six-element structure; entry `[x][y]` lists
/// the members of `x → y`.
const SIX_IMPLICATION: [[&[usize]; 6]; 6] = [
    [&[5], &[5], &[5], &[5], &[5], &[5]],
    [&[2], &[2, 5], &[2], &[2], &[2], &[2, 5]],
    [&[1], &[1], &[1, 5], &[1], &[1], &[1, 5]],
    [&[4], &[4], &[4], &[4, 5], &[4], &[4, 5]],
    [&[3], &[3], &[3], &[3], &[3, 5], &[3, 5]],
    [
        &[0],
        &[0, 1],
        &[0, 2],
        &[0, 3],
        &[0, 4],
        &[0, 1, 2, 3, 4, 5],
    ],
];

/// The six-element divisible idempotent structure over `{0, a, a', b, b',
/// 1}` (four middle elements that are simultaneously atoms and coatoms),
/// with its product and implication given by explicit tables rather than
/// derived from the order.
pub fn mo2_residuated() -> UnsharpResiduatedStructure {
    let n = 6;
    let rows = vec![0b111111, 0b100010, 0b100100, 0b101000, 0b110000, 0b100000];
    let inv = vec![5, 2, 1, 4, 3, 0];
    let labels = ["0", "a", "a'", "b", "b'", "1"].map(String::from).to_vec();
    let poset = finish(
        RawPoset::from_up_masks(n, rows, inv, 0, 5).with_labels(labels),
        "mo2-residuated",
    );

    let product = PartialBinaryOp::from_fn(n, |a, b| {
        Some(ElementId::new(SIX_PRODUCT[a.index()][b.index()]))
    });
    let implication = SetValuedBinaryOp::from_fn(n, |a, b| {
        let members = SIX_IMPLICATION[a.index()][b.index()];
        Subset::from_elements(n, members.iter().map(|&i| ElementId::new(i)))
    });

    UnsharpResiduatedStructure {
        poset,
        product,
        implication,
    }
}

/// A catalog row: the name accepted by [`build`], the parameter it takes,
/// and a one-line description.
#[derive(Debug, Clone, Copy)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub parameter: Option<&'static str>,
    pub summary: &'static str,
}

pub fn entries() -> &'static [CatalogEntry] {
    &[
        CatalogEntry {
            name: "boolean",
            parameter: Some("atoms (1..=6)"),
            summary: "powerset of the given atoms ordered by inclusion",
        },
        CatalogEntry {
            name: "even-subsets",
            parameter: Some("ground size (2, 4 or 6)"),
            summary: "even-cardinality subsets under inclusion and complement",
        },
        CatalogEntry {
            name: "mo",
            parameter: Some("blocks (1..=31)"),
            summary: "horizontal sum of four-element blocks sharing 0 and 1",
        },
        CatalogEntry {
            name: "mo2-residuated",
            parameter: None,
            summary: "six-element divisible idempotent structure with explicit tables",
        },
    ]
}

/// Builds a catalog structure by name. Parametric entries require `param`;
/// `mo2-residuated` forbids it.
pub fn build(name: &str, param: Option<usize>) -> Result<Structure, Error> {
    let need = |param: Option<usize>| {
        param.ok_or_else(|| Error::InvalidParameter {
            what: format!("catalog entry '{name}' requires a numeric parameter"),
        })
    };
    match name {
        "boolean" => Ok(Structure::Omp(boolean_algebra(need(param)?)?)),
        "even-subsets" => Ok(Structure::Omp(even_subsets(need(param)?)?)),
        "mo" => Ok(Structure::Omp(mo(need(param)?)?)),
        "mo2-residuated" => {
            if param.is_some() {
                return Err(Error::InvalidParameter {
                    what: "catalog entry 'mo2-residuated' takes no parameter".to_string(),
                });
            }
            Ok(Structure::Urp(mo2_residuated()))
        }
        _ => Err(Error::UnknownCatalogEntry {
            name: name.to_string(),
        }),
    }
}

/// The standard roster of catalog posets used by exhaustive law checks:
/// every Boolean algebra size, every even-subsets ground size, a spread of
/// horizontal sums, including the 64-element maximum.
pub fn omp_fixtures() -> Vec<(String, BoundedInvolutivePoset)> {
    let mut out = Vec::new();
    for k in 1..=6 {
        out.push((
            format!("boolean {k}"),
            boolean_algebra(k).expect("in range"),
        ));
    }
    for m in [2, 4, 6] {
        out.push((
            format!("even-subsets {m}"),
            even_subsets(m).expect("in range"),
        ));
    }
    for k in [1, 2, 3, 4, 5, 6, 31] {
        out.push((format!("mo {k}"), mo(k).expect("in range")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omp::check_orthomodular;

    #[test]
    fn all_roster_posets_are_orthomodular() {
        for (name, p) in omp_fixtures() {
            let r = check_orthomodular(&p);
            assert!(r.passed(), "{name} failed: {}", r.to_report().render());
        }
    }

    #[test]
    fn roster_covers_the_size_limit() {
        let sizes: Vec<usize> = omp_fixtures().iter().map(|(_, p)| p.n()).collect();
        assert!(sizes.contains(&64));
        assert!(sizes.iter().all(|&s| s <= 64));
    }

    #[test]
    fn the_two_six_element_presentations_share_their_poset() {
        let sum = mo(2).unwrap();
        let tabulated = mo2_residuated();
        assert!(sum.same_components(&tabulated.poset).is_none());
    }

    #[test]
    fn the_smallest_horizontal_sum_is_the_four_element_boolean_algebra() {
        let a = mo(1).unwrap();
        let b = boolean_algebra(2).unwrap();
        assert!(a.same_components(&b).is_none());
    }

    #[test]
    fn even_subsets_of_a_four_element_ground_set_is_a_three_block_sum() {
        let e = even_subsets(4).unwrap();
        let m = mo(3).unwrap();
        assert_eq!(e.n(), 8);
        assert_eq!(
            crate::search::canonical_form(&e).unwrap(),
            crate::search::canonical_form(&m).unwrap()
        );
    }

    #[test]
    fn even_subsets_of_six_lose_meets_and_one_sided_associativity() {
        let p = even_subsets(6).unwrap();
        assert_eq!(p.n(), 32);
        let ab = p.element_by_label("{1,2}").unwrap();
        let abcd = p.element_by_label("{1,2,3,4}").unwrap();
        let bcde = p.element_by_label("{2,3,4,5}").unwrap();
        // ({1,2} ^ {1,2,3,4}) ^ {2,3,4,5} evaluates to the empty set…
        let left_inner = p.meet(ab, abcd).unwrap();
        assert_eq!(p.label(left_inner), "{1,2}");
        assert_eq!(p.label(p.meet(left_inner, bcde).unwrap()), "{}");
        // …while {1,2,3,4} ^ {2,3,4,5} has three maximal lower bounds and
        // no greatest one.
        assert_eq!(p.meet(abcd, bcde), None);
    }

    #[test]
    fn tabulated_product_and_implication_match_their_shape() {
        let s = mo2_residuated();
        let p = &s.poset;
        let a = p.element_by_label("a").unwrap();
        let b = p.element_by_label("b").unwrap();
        let a1 = p.inv(a);
        assert_eq!(s.product.get(a, b), Some(p.bot()));
        assert_eq!(s.product.get(a, p.top()), Some(a));
        assert_eq!(s.implication.get(a, b), Subset::singleton(6, a1));
        assert_eq!(s.implication.get(p.top(), p.top()), Subset::full(6));
    }

    #[test]
    fn out_of_range_parameters_are_rejected() {
        assert!(matches!(
            boolean_algebra(0),
            Err(Error::InvalidParameter { .. })
        ));
        assert!(matches!(
            boolean_algebra(7),
            Err(Error::InvalidParameter { .. })
        ));
        assert!(matches!(
            even_subsets(3),
            Err(Error::InvalidParameter { .. })
        ));
        assert!(matches!(
            even_subsets(8),
            Err(Error::InvalidParameter { .. })
        ));
        assert!(matches!(mo(0), Err(Error::InvalidParameter { .. })));
        assert!(matches!(mo(32), Err(Error::InvalidParameter { .. })));
    }

    #[test]
    fn build_dispatches_names_and_validates_parameters() {
        assert_eq!(build("boolean", Some(3)).unwrap().kind(), "omp");
        assert_eq!(build("mo2-residuated", None).unwrap().kind(), "urp");
        assert!(matches!(
            build("boolean", None),
            Err(Error::InvalidParameter { .. })
        ));
        assert!(matches!(
            build("mo2-residuated", Some(1)),
            Err(Error::InvalidParameter { .. })
        ));
        assert!(matches!(
            build("hilbert", None),
            Err(Error::UnknownCatalogEntry { name }) if name == "hilbert"
        ));
        for entry in entries() {
            let param = entry.parameter.is_some().then_some(2);
            assert!(build(entry.name, param).is_ok(), "{}", entry.name);
        }
    }
}
