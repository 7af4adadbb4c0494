//! Cross-checks against independently known values.

use pancake_coxeter::group::{GroupContext, GroupType, Word};
use pancake_coxeter::presentation::{presentation, relator_count, Family};
use pancake_coxeter::rewriting::{
    enumerate_normal_forms, kb_complete, SymbolOrder, DEFAULT_MAX_LEN, DEFAULT_MAX_RULES,
};
use pancake_coxeter::todd_coxeter::{enumerate, DEFAULT_MAX_COSETS};
use pancake_coxeter::verify::{bfs_order, DEFAULT_BFS_CAP};

fn ctx(t: GroupType, n: usize) -> GroupContext {
    GroupContext::new(t, n).unwrap()
}

// Diameters of the pancake and burnt pancake graphs (OEIS A058986, A078941).
#[test]
fn cayley_diameters_are_pancake_numbers() {
    for (n, d) in [(1, 0), (2, 1), (3, 3), (4, 4), (5, 5), (6, 7), (7, 8)] {
        let c = ctx(GroupType::A, n);
        let closure = bfs_order(&c.pancake_generators(), c, DEFAULT_BFS_CAP).unwrap();
        assert_eq!(closure.sphere_sizes.len() - 1, d, "A{n}");
    }
    for (n, d) in [(1, 1), (2, 4), (3, 6), (4, 8), (5, 10)] {
        let c = ctx(GroupType::B, n);
        let closure = bfs_order(&c.pancake_generators(), c, DEFAULT_BFS_CAP).unwrap();
        assert_eq!(closure.sphere_sizes.len() - 1, d, "B{n}");
    }
}

#[test]
fn coxeter_length_generating_function() {
    // Sphere sizes under the Coxeter generators are the Mahonian numbers.
    let c = ctx(GroupType::A, 4);
    let closure = bfs_order(&c.coxeter_generators(), c, DEFAULT_BFS_CAP).unwrap();
    assert_eq!(closure.sphere_sizes, vec![1, 3, 5, 6, 5, 3, 1]);
}

#[test]
fn closed_form_counts_match_generated_lists() {
    for t in GroupType::ALL {
        for n in 4..=9 {
            for family in [Family::Pancake, Family::Coxeter] {
                let c = ctx(t, n);
                assert_eq!(
                    relator_count(c, family).unwrap(),
                    presentation(c, family).unwrap().relators().len(),
                    "{t}{n} {family}"
                );
            }
        }
    }
    for n in 4..=9 {
        let formula = (n - 1) + 1 + (n - 3) + (n - 2) * (n - 3) / 2 + (n - 3) + (n - 3);
        assert_eq!(
            relator_count(ctx(GroupType::A, n), Family::Pancake).unwrap(),
            formula
        );
    }
}

#[test]
fn completion_counts_small_groups() {
    for (t, n, order) in [
        (GroupType::B, 4, 384),
        (GroupType::D, 4, 192),
        (GroupType::A, 5, 120),
    ] {
        for family in [Family::Pancake, Family::Coxeter] {
            let p = presentation(ctx(t, n), family).unwrap();
            let rs = kb_complete(
                &p,
                &SymbolOrder::canonical(&p),
                DEFAULT_MAX_RULES,
                DEFAULT_MAX_LEN,
            )
            .unwrap();
            assert!(rs.is_confluent(), "{t}{n} {family}");
            assert_eq!(
                enumerate_normal_forms(&rs, 1_000_000).unwrap(),
                order,
                "{t}{n} {family}"
            );
        }
    }
}

#[test]
fn subgroup_indices_agree_with_orbit_counts() {
    // The stabiliser of the last position in A_n is the parabolic generated
    // by r2..r_{n-1}, of index n.
    for n in 4..=6 {
        let c = ctx(GroupType::A, n);
        let p = presentation(c, Family::Pancake).unwrap();
        let h: Vec<Word> = (2..n)
            .map(|k| Word::parse(&format!("r{k}"), c).unwrap())
            .collect();
        assert_eq!(enumerate(&p, &h, DEFAULT_MAX_COSETS).unwrap().cosets(), n);
    }
    // In B_n the flips r1..r_{n-1} fix |x_n| and generate B_{n-1}: index 2n.
    let c = ctx(GroupType::B, 4);
    let p = presentation(c, Family::Pancake).unwrap();
    let h: Vec<Word> = (1..4)
        .map(|k| Word::parse(&format!("r{k}"), c).unwrap())
        .collect();
    assert_eq!(enumerate(&p, &h, DEFAULT_MAX_COSETS).unwrap().cosets(), 8);
}
