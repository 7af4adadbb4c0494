//! Semantic checks of presentations in the permutation model: relators
//! evaluate to the identity, the generators close up to a group of the
//! expected order, and the generator-change identities behind the
//! presentations hold letter for letter.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Generator, GroupContext, GroupType, SignedPermutation, Word};
use crate::presentation::{ExpectedOrder, Family, Presentation};

pub const DEFAULT_BFS_CAP: usize = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelatorFailure {
    pub label: String,
    pub indices: Vec<u32>,
    pub word: String,
    pub evaluated: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityFailure {
    pub name: String,
    pub indices: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub group_type: GroupType,
    pub degree: usize,
    pub family: Option<Family>,
    pub relators_checked: usize,
    pub relators_failed: Vec<RelatorFailure>,
    pub order_found: Option<u64>,
    pub order_expected: Option<u64>,
    pub identities_checked: usize,
    pub identities_failed: Vec<IdentityFailure>,
}

impl VerificationReport {
    fn new(ctx: GroupContext, family: Option<Family>) -> Self {
        Self {
            group_type: ctx.group_type(),
            degree: ctx.degree(),
            family,
            relators_checked: 0,
            relators_failed: Vec::new(),
            order_found: None,
            order_expected: None,
            identities_checked: 0,
            identities_failed: Vec::new(),
        }
    }

    /// True when no relator or identity failed and any order that was
    /// computed matches the expected one.
    pub fn passed(&self) -> bool {
        self.relators_failed.is_empty()
            && self.identities_failed.is_empty()
            && match (self.order_found, self.order_expected) {
                (Some(found), Some(expected)) => found == expected,
                (Some(_), None) => false,
                _ => true,
            }
    }
}

/// Evaluates every relator; all failures are collected.
pub fn check_relators(p: &Presentation) -> VerificationReport {
    let mut report = VerificationReport::new(p.context(), Some(p.family()));
    for r in p.relators() {
        report.relators_checked += 1;
        let value = r.word.eval();
        if !value.is_identity() {
            report.relators_failed.push(RelatorFailure {
                label: r.label.clone(),
                indices: r.indices.clone(),
                word: r.word.to_string(),
                evaluated: value.to_string(),
            });
        }
    }
    report
}

/// The closure of a generating set, in breadth-first visit order.
#[derive(Debug, Clone)]
pub struct CayleyClosure {
    pub context: GroupContext,
    pub generators: Vec<Generator>,
    /// Elements in visit order; `elements[0]` is the identity.
    pub elements: Vec<SignedPermutation>,
    /// Directed edges `x -> x g`, one per element and generator.
    pub edge_count: usize,
    /// `sphere_sizes[d]` is the number of elements at word length `d`.
    pub sphere_sizes: Vec<usize>,
}

impl CayleyClosure {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn sorted_elements(&self) -> Vec<SignedPermutation> {
        let mut v = self.elements.clone();
        v.sort();
        v
    }
}

/// Breadth-first closure of `generators` under right multiplication.
pub fn bfs_order(generators: &[Generator], ctx: GroupContext, cap: usize) -> Result<CayleyClosure> {
    for &g in generators {
        ctx.validate(g)?;
    }
    let cap = cap.max(1);
    let identity = ctx.identity();
    let mut index: HashMap<SignedPermutation, usize> = HashMap::new();
    index.insert(identity.clone(), 0);
    let mut elements = vec![identity];
    let mut sphere_sizes = vec![1];
    let mut level_start = 0;
    while level_start < elements.len() {
        let level_end = elements.len();
        let mut next = 0;
        for i in level_start..level_end {
            for &g in generators {
                let mut window = elements[i].window().to_vec();
                ctx.flip_in_place(g, &mut window);
                let q = SignedPermutation::new(window).expect("flips preserve bijectivity");
                if !index.contains_key(&q) {
                    if elements.len() >= cap {
                        return Err(Error::Overflow { cap });
                    }
                    index.insert(q.clone(), elements.len());
                    elements.push(q);
                    next += 1;
                }
            }
        }
        if next > 0 {
            sphere_sizes.push(next);
        }
        level_start = level_end;
    }
    Ok(CayleyClosure {
        context: ctx,
        generators: generators.to_vec(),
        edge_count: elements.len() * generators.len(),
        elements,
        sphere_sizes,
    })
}

/// Compares the closure of `p`'s generators against the expected group
/// order.
pub fn check_order(p: &Presentation, cap: usize) -> Result<VerificationReport> {
    let ctx = p.context();
    let closure = bfs_order(p.generators(), ctx, cap)?;
    let expected: BigUint = ExpectedOrder::of(ctx).value;
    let mut report = VerificationReport::new(ctx, Some(p.family()));
    report.order_found = Some(closure.order() as u64);
    report.order_expected = expected.to_u64();
    Ok(report)
}

struct IdentityCheck<'a> {
    ctx: GroupContext,
    report: &'a mut VerificationReport,
}

impl IdentityCheck<'_> {
    fn word(&self, symbols: Vec<Generator>) -> Word {
        Word::new(self.ctx, symbols).expect("identity symbols are in range")
    }

    fn equal(&mut self, name: &str, indices: &[u32], lhs: Vec<Generator>, rhs: Vec<Generator>) {
        self.report.identities_checked += 1;
        if self.word(lhs).eval() != self.word(rhs).eval() {
            self.report.identities_failed.push(IdentityFailure {
                name: name.to_string(),
                indices: indices.to_vec(),
            });
        }
    }
}

use Generator::{RBar2, S0Prime, R, S, S0};

/// `s_a s_(a+1) ... s_b` (empty when `a > b`); `S(0)` stands for `s_0`.
fn ascending(a: u32, b: u32) -> Vec<Generator> {
    (a..=b).map(coxeter).collect()
}

/// `s_b s_(b-1) ... s_a`.
fn descending(b: u32, a: u32) -> Vec<Generator> {
    (a..=b).rev().map(coxeter).collect()
}

fn coxeter(i: u32) -> Generator {
    if i == 0 {
        S0
    } else {
        S(i)
    }
}

/// `s_lo (s_(lo+1) s_lo) ... (s_(k-1) ... s_lo)`, the expansion of a
/// reversal in adjacent transpositions (`lo = 1`) or with `s_0` (`lo = 0`).
fn staircase(k: u32, lo: u32) -> Vec<Generator> {
    (lo..k).flat_map(|j| descending(j, lo)).collect()
}

fn cat(parts: &[&[Generator]]) -> Vec<Generator> {
    parts.concat()
}

/// Checks the generator-change identities relating reversals to Coxeter
/// generators over their full index ranges.
pub fn check_lemma_identities(ctx: GroupContext) -> Result<VerificationReport> {
    ctx.require_theorem_degree()?;
    let n = ctx.degree() as u32;
    let mut report = VerificationReport::new(ctx, None);
    let mut c = IdentityCheck {
        ctx,
        report: &mut report,
    };
    match ctx.group_type() {
        GroupType::A | GroupType::D => {
            for i in 2..=n {
                c.equal(
                    "s_(i-1) = r_i r_2 r_i",
                    &[i],
                    vec![S(i - 1)],
                    vec![R(i), R(2), R(i)],
                );
            }
            for k in 2..=n {
                c.equal("rewrite", &[k], vec![R(k)], staircase(k, 1));
            }
            for k in 2..n {
                c.equal("oneapart", &[k], vec![R(k + 1), R(k)], ascending(1, k));
            }
            for k in 2..=n - 2 {
                c.equal(
                    "twoapart",
                    &[k],
                    vec![R(k + 2), R(k)],
                    cat(&[&ascending(1, k + 1), &ascending(1, k)]),
                );
            }
            for k in 3..=n {
                c.equal(
                    "ktwok",
                    &[k],
                    vec![R(k), R(3), R(k)],
                    vec![S(k - 2), S(k - 1), S(k - 2)],
                );
            }
            // r_1 is not a generator of S_n, so i starts at 2.
            for j in 2..n {
                for i in 2..j {
                    c.equal("sjri", &[j, i], vec![S(j), R(i)], vec![R(i), S(j)]);
                }
            }
            for l in 2..=n {
                for k in 1..l {
                    c.equal("skrl", &[k, l], vec![S(k), R(l)], vec![R(l), S(l - k)]);
                }
            }
            if ctx.group_type() == GroupType::D {
                c.equal("s0' = rb2", &[], vec![S0Prime], vec![RBar2]);
            }
        }
        GroupType::B => {
            c.equal("s0 = r1", &[], vec![S0], vec![R(1)]);
            for i in 2..=n {
                c.equal(
                    "s_(i-1) = r_i r_1 r_2 r_1 r_i",
                    &[i],
                    vec![S(i - 1)],
                    vec![R(i), R(1), R(2), R(1), R(i)],
                );
            }
            c.equal("(r2 r3 r1)^3", &[], [R(2), R(3), R(1)].repeat(3), vec![]);
            for k in 1..=n {
                c.equal("rewrite_b", &[k], vec![R(k)], staircase(k, 0));
            }
            // s_j only exists for j <= n-1.
            for i in 1..=n - 2 {
                for j in i + 2..n {
                    c.equal("sjrib", &[j, i], vec![S(j), R(i)], vec![R(i), S(j)]);
                }
            }
            for l in 2..=n {
                for k in 1..l {
                    c.equal("skrlb", &[k, l], vec![S(k), R(l)], vec![R(l), S(l - k)]);
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{coxeter_presentation, pancake_presentation, Relator};

    fn ctx(t: GroupType, n: usize) -> GroupContext {
        GroupContext::new(t, n).unwrap()
    }

    #[test]
    fn staircases() {
        let w: Vec<String> = staircase(3, 1).iter().map(|g| g.to_string()).collect();
        assert_eq!(w, ["s1", "s2", "s1"]);
        let w: Vec<String> = staircase(2, 0).iter().map(|g| g.to_string()).collect();
        assert_eq!(w, ["s0", "s1", "s0"]);
        assert_eq!(staircase(1, 0), vec![S0]);
    }

    #[test]
    fn relators_of_small_presentations_hold() {
        for n in 4..=6 {
            for t in GroupType::ALL {
                let c = ctx(t, n);
                assert!(check_relators(&pancake_presentation(c).unwrap()).passed());
                assert!(check_relators(&coxeter_presentation(c).unwrap()).passed());
            }
        }
    }

    #[test]
    fn mutated_relator_is_reported() {
        let c = ctx(GroupType::A, 4);
        let mut p = pancake_presentation(c).unwrap();
        let r2 = p
            .relators_mut()
            .iter_mut()
            .find(|r| r.label == "R2")
            .unwrap();
        r2.word = Word::parse("(r2 r3)^2", c).unwrap();
        let report = check_relators(&p);
        assert_eq!(report.relators_failed.len(), 1);
        assert_eq!(report.relators_failed[0].label, "R2");
        assert_ne!(report.relators_failed[0].evaluated, "[1,2,3,4]");
        assert!(!report.passed());
    }

    #[test]
    fn closures_of_small_groups() {
        let a4 = ctx(GroupType::A, 4);
        assert_eq!(
            bfs_order(&[R(2), R(3), R(4)], a4, 1_000_000)
                .unwrap()
                .order(),
            24
        );
        let b4 = ctx(GroupType::B, 4);
        let gens: Vec<_> = (1..=4).map(R).collect();
        assert_eq!(bfs_order(&gens, b4, 1_000_000).unwrap().order(), 384);
        let d4 = ctx(GroupType::D, 4);
        let closure = bfs_order(&d4.pancake_generators(), d4, 1_000_000).unwrap();
        assert_eq!(closure.order(), 192);
        assert!(closure.elements.iter().all(|p| p.negative_count() % 2 == 0));
        assert_eq!(closure.sphere_sizes.iter().sum::<usize>(), 192);
    }

    #[test]
    fn bfs_overflow_and_determinism() {
        let a9 = ctx(GroupType::A, 9);
        let p = pancake_presentation(a9).unwrap();
        assert!(matches!(
            check_order(&p, 100_000),
            Err(Error::Overflow { cap: 100_000 })
        ));
        let a5 = ctx(GroupType::A, 5);
        let g = a5.pancake_generators();
        let first = bfs_order(&g, a5, 1000).unwrap();
        let second = bfs_order(&g, a5, 1000).unwrap();
        assert_eq!(first.elements, second.elements);
        assert!(bfs_order(&g, a5, 120).is_ok());
        assert!(bfs_order(&g, a5, 119).is_err());
    }

    #[test]
    fn order_reports() {
        let p = pancake_presentation(ctx(GroupType::A, 6)).unwrap();
        let r = check_order(&p, 1_000_000).unwrap();
        assert_eq!(r.order_found, Some(720));
        assert_eq!(r.order_expected, Some(720));
        assert!(r.passed());
        let p = coxeter_presentation(ctx(GroupType::B, 4)).unwrap();
        assert_eq!(check_order(&p, 1_000_000).unwrap().order_found, Some(384));
    }

    #[test]
    fn proper_subgroup_fails_order_check() {
        let c = ctx(GroupType::A, 4);
        let p = Presentation::custom(
            c,
            vec![R(2), R(3)],
            vec![Relator {
                label: "x".into(),
                indices: vec![],
                word: Word::parse("(r2 r3)^3", c).unwrap(),
            }],
        )
        .unwrap();
        let r = check_order(&p, 1000).unwrap();
        assert_eq!(r.order_found, Some(6));
        assert!(!r.passed());
    }

    #[test]
    fn lemma_examples() {
        let a4 = ctx(GroupType::A, 4);
        let lhs = Word::parse("r4 r3 r4", a4).unwrap().eval();
        assert_eq!(lhs, Word::parse("s2 s3 s2", a4).unwrap().eval());
        assert_eq!(
            Word::parse("r2 r2 r2", a4).unwrap().eval(),
            Word::parse("s1", a4).unwrap().eval()
        );
        let b4 = ctx(GroupType::B, 4);
        assert!(Word::parse("(r2 r3 r1)^3", b4)
            .unwrap()
            .eval()
            .is_identity());
        for t in GroupType::ALL {
            let report = check_lemma_identities(ctx(t, 4)).unwrap();
            assert!(
                report.identities_failed.is_empty(),
                "{t}: {:?}",
                report.identities_failed
            );
            assert!(report.identities_checked > 0);
        }
        assert!(check_lemma_identities(ctx(GroupType::A, 3)).is_err());
    }
}
