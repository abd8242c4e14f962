use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use auslab_core::invariants::reynolds;
use auslab_core::linalg::{collect_row, Subspace};
use auslab_core::smash::{identity_component_dims, smash_multiply};
use auslab_core::{
    enumerate_subgroups, parse_group, AlgebraElement, Automorphism, CyclotomicContext, FiniteGroup, IdealTruncation,
    NFMonomial, Scalar, SmashElement,
};

fn test_groups() -> Vec<FiniteGroup> {
    vec![
        FiniteGroup::dihedral_group(3),
        FiniteGroup::vertex_reflection_group(4),
        parse_group("rot(2)", 4, 16).unwrap(),
        parse_group("scalar(2;0,0,1;0,0,1)", 3, 16).unwrap(),
    ]
}

fn smash_element(group: &FiniteGroup, terms: &[(usize, usize, usize, usize, i64)]) -> SmashElement {
    let n = group.n();
    let ctx = group.context();
    SmashElement::from_terms(
        n,
        terms.iter().map(|&(s, l, k, g, c)| {
            (
                (NFMonomial::new(s % n, l, k), g % group.order()),
                Scalar::from_integer(ctx, c),
            )
        }),
    )
}

type Terms = Vec<(usize, usize, usize, usize, i64)>;

fn terms() -> impl Strategy<Value = Terms> {
    prop::collection::vec((0usize..6, 0usize..3, 0usize..3, 0usize..8, -2i64..=2), 0..4)
}

proptest! {
    #[test]
    fn smash_product_is_associative(which in 0usize..4, a in terms(), b in terms(), c in terms()) {
        let g = &test_groups()[which];
        let (x, y, z) = (smash_element(g, &a), smash_element(g, &b), smash_element(g, &c));
        prop_assert_eq!(
            smash_multiply(g, &smash_multiply(g, &x, &y), &z),
            smash_multiply(g, &x, &smash_multiply(g, &y, &z))
        );
    }

    #[test]
    fn group_elements_are_absorbed_by_f_g(which in 0usize..4, a in terms(), h in 0usize..8) {
        let g = &test_groups()[which];
        let f = SmashElement::f_g(g);
        let x = smash_element(g, &a);
        let h = h % g.order();
        let shifted = smash_multiply(g, &x, &SmashElement::group_element(g.n(), h, g.context()));
        prop_assert_eq!(smash_multiply(g, &shifted, &f), smash_multiply(g, &x, &f));
    }

    #[test]
    fn reynolds_is_an_idempotent_projection(which in 0usize..4, a in terms()) {
        let g = &test_groups()[which];
        let n = g.n();
        let x = AlgebraElement::from_terms(
            n,
            a.iter().map(|&(s, l, k, _, c)| (NFMonomial::new(s % n, l, k), Scalar::from_integer(g.context(), c))),
        );
        let r = reynolds(g, &x);
        prop_assert_eq!(reynolds(g, &r), r.clone());
        for h in g.elements() {
            prop_assert_eq!(h.apply(&r), r.clone());
        }
    }
}

/// Coordinates of degree-`d` elements of `R#G` in a fixed basis.
struct Coordinates {
    index: BTreeMap<(NFMonomial, usize), usize>,
}

impl Coordinates {
    fn new(group: &FiniteGroup, d: usize) -> Self {
        let mut index = BTreeMap::new();
        for m in NFMonomial::of_degree(group.n(), d) {
            for g in 0..group.order() {
                let next = index.len();
                index.insert((m, g), next);
            }
        }
        Coordinates { index }
    }

    fn row(&self, x: &SmashElement) -> Vec<(usize, Scalar)> {
        collect_row(x.terms().iter().map(|(t, c)| (self.index[t], c.clone())))
    }
}

/// `{(a#1) f_G (b#h)}` over monomials with `deg a + deg b = d`.
fn naive_generators(group: &FiniteGroup, d: usize) -> Vec<SmashElement> {
    let n = group.n();
    let ctx = group.context();
    let f = SmashElement::f_g(group);
    let mut out = Vec::new();
    for da in 0..=d {
        for a in NFMonomial::of_degree(n, da) {
            let left = smash_multiply(group, &SmashElement::term(n, a, 0, Scalar::one(ctx)), &f);
            for b in NFMonomial::of_degree(n, d - da) {
                for h in 0..group.order() {
                    let x = smash_multiply(group, &left, &SmashElement::term(n, b, h, Scalar::one(ctx)));
                    if !x.is_zero() {
                        out.push(x);
                    }
                }
            }
        }
    }
    out
}

#[test]
fn ideal_matches_the_naive_spanning_set() {
    for g in test_groups() {
        let ideal = IdealTruncation::build(&g, 5);
        for d in 0..=5 {
            let coords = Coordinates::new(&g, d);
            let mut span = Subspace::new(g.context(), coords.index.len());
            for x in naive_generators(&g, d) {
                span.insert(&coords.row(&x));
            }
            assert_eq!(span.dim(), ideal.dim(d), "{} degree {d}", g.describe().kind);
        }
    }
}

#[test]
fn ideal_is_two_sided() {
    let ctx = CyclotomicContext::rational();
    for g in test_groups() {
        let n = g.n();
        let ideal = IdealTruncation::build(&g, 4);
        let arrows = [
            NFMonomial::new(0, 1, 0),
            NFMonomial::new(1, 0, 1),
            NFMonomial::new(n - 1, 1, 0),
        ];
        for x in naive_generators(&g, 3).into_iter().take(40) {
            for a in arrows {
                let a = SmashElement::term(n, a, 0, Scalar::one(&ctx).embed(g.context()));
                for y in [smash_multiply(&g, &a, &x), smash_multiply(&g, &x, &a)] {
                    if !y.is_zero() {
                        assert!(ideal.layer(4).contains(&g, &y));
                    }
                }
            }
            for h in 0..g.order() {
                let h = SmashElement::group_element(n, h, g.context());
                assert!(ideal.layer(3).contains(&g, &smash_multiply(&g, &h, &x)));
                assert!(ideal.layer(3).contains(&g, &smash_multiply(&g, &x, &h)));
            }
        }
    }
}

/// All subgroups of `D_n`, found by closing every pair of elements.
fn subgroups_by_closure(n: usize) -> BTreeSet<BTreeSet<usize>> {
    let d = FiniteGroup::dihedral_group(n);
    let mut out = BTreeSet::new();
    for a in 0..d.order() {
        for b in 0..d.order() {
            let mut set: BTreeSet<usize> = [0, a, b].into_iter().collect();
            loop {
                let next: BTreeSet<usize> = set
                    .iter()
                    .flat_map(|&x| set.iter().map(move |&y| (x, y)))
                    .map(|(x, y)| d.mul(x, y))
                    .collect();
                if next == set {
                    break;
                }
                set = next;
            }
            out.insert(set);
        }
    }
    out
}

#[test]
fn subgroup_enumeration_matches_brute_force() {
    for (n, count) in [(3, 6), (4, 10), (5, 8), (6, 16)] {
        let d = FiniteGroup::dihedral_group(n);
        let brute = subgroups_by_closure(n);
        assert_eq!(brute.len(), count);
        let listed: BTreeSet<BTreeSet<usize>> = enumerate_subgroups(n)
            .unwrap()
            .into_iter()
            .map(|(_, g)| g.elements().iter().map(|x| d.index_of(x).unwrap()).collect())
            .collect();
        assert_eq!(listed, brute, "n={n}");
    }
}

#[test]
fn proper_subgroups_have_a_zero_tail_from_degree_2n_plus_1() {
    for n in 3..=5 {
        let ctx = CyclotomicContext::rational();
        let fixing: Vec<Automorphism> = auslab_core::symmetry::vertex_fixing_reflections(n, &ctx);
        for (_, g) in enumerate_subgroups(n).unwrap() {
            if fixing.iter().all(|r| g.contains(r)) {
                continue;
            }
            let dims = identity_component_dims(&g, 4 * n + 4);
            assert!(
                dims[2 * n + 1..].iter().all(|&x| x == 0),
                "n={n} {}: {dims:?}",
                g.describe().kind
            );
        }
    }
}
