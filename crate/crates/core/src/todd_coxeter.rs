//! HLT coset enumeration for presentations whose generators are involutions.
//!
//! There are no inverse letters: each generator is its own inverse, so the
//! table keeps one column per generator and stays symmetric
//! (`c·g = d` iff `d·g = c`). Coincidences are resolved immediately with a
//! union-find over coset ids, always keeping the smaller id as the
//! representative.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::Word;
use crate::presentation::Presentation;

pub const DEFAULT_MAX_COSETS: usize = 5_000_000;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CosetStatus {
    InProgress,
    Closed,
    Overflowed,
}

/// Machine-readable outcome of an enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationSummary {
    pub status: CosetStatus,
    pub cosets: usize,
    pub defined_total: usize,
    pub coincidences: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    ngens: usize,
    /// Row-major, `ngens` entries per coset; `NONE` marks undefined.
    rows: Vec<u32>,
    status: CosetStatus,
    defined_total: usize,
    coincidences: usize,
}

impl CosetTable {
    pub fn status(&self) -> CosetStatus {
        self.status
    }

    /// Number of live cosets.
    pub fn cosets(&self) -> usize {
        self.rows.len() / self.ngens.max(1)
    }

    /// Total number of cosets defined during the run, dead ones included.
    pub fn defined_total(&self) -> usize {
        self.defined_total
    }

    pub fn coincidences(&self) -> usize {
        self.coincidences
    }

    pub fn generator_count(&self) -> usize {
        self.ngens
    }

    /// Image of `coset` under generator number `gen`.
    pub fn get(&self, coset: usize, gen: usize) -> Option<usize> {
        match self.rows.get(coset * self.ngens + gen) {
            Some(&v) if v != NONE => Some(v as usize),
            _ => None,
        }
    }

    pub fn summary(&self) -> EnumerationSummary {
        EnumerationSummary {
            status: self.status,
            cosets: self.cosets(),
            defined_total: self.defined_total,
            coincidences: self.coincidences,
        }
    }
}

fn letters(p: &Presentation, w: &Word) -> Result<Vec<u32>> {
    w.symbols()
        .iter()
        .map(|&g| {
            p.generator_index(g)
                .map(|i| i as u32)
                .ok_or(Error::NotInAlphabet(g))
        })
        .collect()
}

struct Engine {
    ngens: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    live: usize,
    defined_total: usize,
    coincidences: usize,
    max_cosets: usize,
    queue: VecDeque<u32>,
    overflow: bool,
}

impl Engine {
    fn new(ngens: usize, max_cosets: usize) -> Self {
        Self {
            ngens,
            table: vec![NONE; ngens],
            parent: vec![0],
            live: 1,
            defined_total: 1,
            coincidences: 0,
            max_cosets: max_cosets.max(1),
            queue: VecDeque::new(),
            overflow: false,
        }
    }

    #[inline]
    fn at(&self, c: u32, x: u32) -> u32 {
        self.table[c as usize * self.ngens + x as usize]
    }

    #[inline]
    fn set(&mut self, c: u32, x: u32, d: u32) {
        self.table[c as usize * self.ngens + x as usize] = d;
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn define(&mut self, c: u32, x: u32) -> bool {
        let d = self.parent.len();
        if d >= self.max_cosets {
            self.overflow = true;
            return false;
        }
        let d = d as u32;
        self.parent.push(d);
        self.table.extend(std::iter::repeat_n(NONE, self.ngens));
        self.set(c, x, d);
        self.set(d, x, c);
        self.live += 1;
        self.defined_total += 1;
        true
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut cur = c;
        while self.parent[cur as usize] != root {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = root;
            cur = next;
        }
        root
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        self.parent[hi as usize] = lo;
        self.live -= 1;
        self.coincidences += 1;
        self.queue.push_back(hi);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        while let Some(dead) = self.queue.pop_front() {
            for x in 0..self.ngens as u32 {
                let d = self.at(dead, x);
                if d == NONE {
                    continue;
                }
                self.set(d, x, NONE);
                let mu = self.rep(dead);
                let nu = self.rep(d);
                let mu_x = self.at(mu, x);
                if mu_x != NONE {
                    self.merge(nu, mu_x);
                    continue;
                }
                let nu_x = self.at(nu, x);
                if nu_x != NONE {
                    self.merge(mu, nu_x);
                } else {
                    self.set(mu, x, nu);
                    self.set(nu, x, mu);
                }
            }
        }
    }

    /// Traces `w` from `alpha` in both directions, defining cosets to fill
    /// the gap. Returns false when the coset cap stopped the scan.
    fn scan_and_fill(&mut self, alpha: u32, w: &[u32]) -> bool {
        let mut f = alpha;
        let mut b = alpha;
        let mut i = 0;
        let mut j = w.len();
        loop {
            while i < j && self.at(f, w[i]) != NONE {
                f = self.at(f, w[i]);
                i += 1;
            }
            if i == j {
                if f != alpha {
                    self.coincidence(f, alpha);
                }
                return true;
            }
            while j > i && self.at(b, w[j - 1]) != NONE {
                b = self.at(b, w[j - 1]);
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return true;
            }
            if j == i + 1 {
                let x = w[i];
                self.set(f, x, b);
                self.set(b, x, f);
                return true;
            }
            if !self.define(f, w[i]) {
                return false;
            }
        }
    }

    /// Renumbers live cosets in definition order and drops dead rows.
    /// Returns the old-to-new map. The coincidence queue must be empty.
    fn compact(&mut self) -> Vec<u32> {
        debug_assert!(self.queue.is_empty());
        let rows = self.parent.len();
        let mut map = vec![NONE; rows];
        let mut next = 0u32;
        for (c, slot) in map.iter_mut().enumerate() {
            if self.parent[c] == c as u32 {
                *slot = next;
                next += 1;
            }
        }
        let mut table = Vec::with_capacity(next as usize * self.ngens);
        for c in 0..rows as u32 {
            if !self.is_live(c) {
                continue;
            }
            for x in 0..self.ngens as u32 {
                let e = self.at(c, x);
                let e = if e == NONE {
                    NONE
                } else {
                    map[self.rep(e) as usize]
                };
                table.push(e);
            }
        }
        self.table = table;
        self.parent = (0..next).collect();
        map
    }

    fn into_table(mut self, status: CosetStatus) -> CosetTable {
        self.compact();
        CosetTable {
            ngens: self.ngens,
            rows: self.table,
            status,
            defined_total: self.defined_total,
            coincidences: self.coincidences,
        }
    }
}

/// Enumerates the cosets of the subgroup generated by `subgroup_words` in
/// the group presented by `p`. An overflowed table is inconclusive.
pub fn enumerate(
    p: &Presentation,
    subgroup_words: &[Word],
    max_cosets: usize,
) -> Result<CosetTable> {
    let relators = p
        .relators()
        .iter()
        .map(|r| letters(p, &r.word))
        .collect::<Result<Vec<_>>>()?;
    let subgroup = subgroup_words
        .iter()
        .map(|w| letters(p, w))
        .collect::<Result<Vec<_>>>()?;
    let ngens = p.generators().len();
    let mut engine = Engine::new(ngens, max_cosets);
    if ngens == 0 {
        return Ok(engine.into_table(CosetStatus::Closed));
    }

    for w in &subgroup {
        if !engine.scan_and_fill(0, w) {
            return Ok(engine.into_table(CosetStatus::Overflowed));
        }
    }

    let mut alpha: u32 = 0;
    while (alpha as usize) < engine.parent.len() {
        if !engine.is_live(alpha) {
            alpha += 1;
            continue;
        }
        let rows = engine.parent.len();
        if rows > 4096 && (rows - engine.live) * 2 > rows {
            alpha = engine.compact()[alpha as usize];
        }
        let mut complete = true;
        for r in &relators {
            if !engine.is_live(alpha) {
                break;
            }
            if !engine.scan_and_fill(alpha, r) {
                complete = false;
                break;
            }
        }
        if complete && engine.is_live(alpha) {
            for x in 0..ngens as u32 {
                if engine.at(alpha, x) == NONE && !engine.define(alpha, x) {
                    complete = false;
                    break;
                }
            }
        }
        if !complete {
            if engine.live < engine.parent.len() {
                // Dead rows can be reclaimed; retry the same coset.
                engine.overflow = false;
                let live_alpha = engine.rep(alpha);
                alpha = engine.compact()[live_alpha as usize];
                continue;
            }
            return Ok(engine.into_table(CosetStatus::Overflowed));
        }
        alpha += 1;
    }
    Ok(engine.into_table(CosetStatus::Closed))
}

/// True iff `t` is closed, complete, symmetric and every relator closes
/// from every coset.
pub fn validate_table(t: &CosetTable, p: &Presentation) -> bool {
    if t.status != CosetStatus::Closed || t.ngens != p.generators().len() {
        return false;
    }
    let n = t.cosets();
    for c in 0..n {
        for x in 0..t.ngens {
            match t.get(c, x) {
                Some(d) if d < n && t.get(d, x) == Some(c) => {}
                _ => return false,
            }
        }
    }
    let Ok(relators) = p
        .relators()
        .iter()
        .map(|r| letters(p, &r.word))
        .collect::<Result<Vec<_>>>()
    else {
        return false;
    };
    (0..n).all(|c| {
        relators.iter().all(|r| {
            let end = r.iter().try_fold(c, |cur, &x| t.get(cur, x as usize));
            end == Some(c)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Generator, GroupContext, GroupType};
    use crate::presentation::{coxeter_presentation, pancake_presentation, Relator};

    fn ctx(t: GroupType, n: usize) -> GroupContext {
        GroupContext::new(t, n).unwrap()
    }

    #[test]
    fn a4_pancake_closes_at_24() {
        let p = pancake_presentation(ctx(GroupType::A, 4)).unwrap();
        let t = enumerate(&p, &[], 100_000).unwrap();
        assert_eq!(t.status(), CosetStatus::Closed);
        assert_eq!(t.cosets(), 24);
        assert!(validate_table(&t, &p));
        assert!(t.defined_total() >= 24);
    }

    #[test]
    fn subgroup_index() {
        let c = ctx(GroupType::A, 4);
        let p = pancake_presentation(c).unwrap();
        let h = Word::parse("r2", c).unwrap();
        let t = enumerate(&p, &[h], 100_000).unwrap();
        assert_eq!(t.status(), CosetStatus::Closed);
        assert_eq!(t.cosets(), 12);
        assert!(validate_table(&t, &p));
    }

    #[test]
    fn trivial_group() {
        let c = ctx(GroupType::A, 2);
        let rel = |label: &str, s: &str| Relator {
            label: label.into(),
            indices: vec![],
            word: Word::parse(s, c).unwrap(),
        };
        let p = Presentation::custom(
            c,
            vec![Generator::R(2)],
            vec![rel("sq", "r2 r2"), rel("g", "r2")],
        )
        .unwrap();
        let t = enumerate(&p, &[], 10).unwrap();
        assert_eq!(t.cosets(), 1);
        assert!(validate_table(&t, &p));
        assert_eq!(t.get(0, 0), Some(0));
    }

    #[test]
    fn redirected_edge_is_invalid() {
        let p = coxeter_presentation(ctx(GroupType::A, 4)).unwrap();
        let mut t = enumerate(&p, &[], 10_000).unwrap();
        assert!(validate_table(&t, &p));
        let old = t.rows[0];
        t.rows[0] = if old == 1 { 2 } else { 1 };
        assert!(!validate_table(&t, &p));
    }

    #[test]
    fn overflow_is_reported() {
        let p = pancake_presentation(ctx(GroupType::B, 4)).unwrap();
        let t = enumerate(&p, &[], 50).unwrap();
        assert_eq!(t.status(), CosetStatus::Overflowed);
        assert!(!validate_table(&t, &p));
        assert!(t.cosets() <= 50);
    }

    #[test]
    fn subgroup_words_must_use_presentation_generators() {
        let c = ctx(GroupType::A, 4);
        let p = pancake_presentation(c).unwrap();
        let h = Word::parse("s1", c).unwrap();
        assert!(matches!(
            enumerate(&p, &[h], 100),
            Err(Error::NotInAlphabet(_))
        ));
    }

    #[test]
    fn deterministic() {
        let p = pancake_presentation(ctx(GroupType::D, 4)).unwrap();
        let a = enumerate(&p, &[], 100_000).unwrap();
        let b = enumerate(&p, &[], 100_000).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.cosets(), 192);
    }
}
