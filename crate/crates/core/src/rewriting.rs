//! Shortlex Knuth-Bendix completion and word reduction.
//!
//! Words are stored as letter strings over the alphabet of a
//! [`SymbolOrder`]; letter `i` is the `i`-th smallest generator, so plain
//! slice comparison of equal-length strings is the lexicographic part of
//! shortlex.
//!
//! Left-hand sides are kept in a trie of reversed strings. Reduction pushes
//! letters onto an output stack and only has to test the suffixes of that
//! stack, because everything below the top is already irreducible.

use std::cmp::Ordering;
use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Generator, GroupContext, Word};
use crate::presentation::Presentation;

pub const DEFAULT_MAX_RULES: usize = 20_000;
pub const DEFAULT_MAX_LEN: usize = 64;

const NONE: u32 = u32::MAX;

/// A strict total order on a generator alphabet, smallest first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolOrder {
    alphabet: Vec<Generator>,
}

impl SymbolOrder {
    pub fn new(alphabet: Vec<Generator>) -> Result<Self> {
        if alphabet.len() > u8::MAX as usize {
            return Err(Error::Format("alphabet too large".into()));
        }
        for (i, g) in alphabet.iter().enumerate() {
            if alphabet[..i].contains(g) {
                return Err(Error::Format(format!("generator {g} listed twice")));
            }
        }
        Ok(Self { alphabet })
    }

    /// The presentation's generators in their canonical order.
    pub fn canonical(p: &Presentation) -> Self {
        Self {
            alphabet: p.generators().to_vec(),
        }
    }

    pub fn alphabet(&self) -> &[Generator] {
        &self.alphabet
    }

    pub fn rank(&self, g: Generator) -> Option<usize> {
        self.alphabet.iter().position(|&h| h == g)
    }

    fn encode(&self, w: &Word) -> Result<Vec<u8>> {
        w.symbols()
            .iter()
            .map(|&g| self.rank(g).map(|r| r as u8).ok_or(Error::NotInAlphabet(g)))
            .collect()
    }

    fn decode(&self, ctx: GroupContext, letters: &[u8]) -> Word {
        Word::new_unchecked(
            ctx,
            letters.iter().map(|&l| self.alphabet[l as usize]).collect(),
        )
    }
}

fn shortlex(a: &[u8], b: &[u8]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

fn contains_factor(haystack: &[u8], needle: &[u8]) -> bool {
    needle.len() <= haystack.len() && haystack.windows(needle.len()).any(|w| w == needle)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: Word,
}

/// Reversed-lhs trie.
#[derive(Debug, Clone)]
struct SuffixIndex {
    width: usize,
    children: Vec<u32>,
    terminal: Vec<u32>,
}

impl SuffixIndex {
    fn new(width: usize) -> Self {
        Self {
            width,
            children: vec![NONE; width],
            terminal: vec![NONE],
        }
    }

    fn insert(&mut self, lhs: &[u8], rule: u32) {
        let mut node = 0usize;
        for &c in lhs.iter().rev() {
            let slot = node * self.width + c as usize;
            if self.children[slot] == NONE {
                let fresh = self.terminal.len() as u32;
                self.children[slot] = fresh;
                self.children.extend(std::iter::repeat_n(NONE, self.width));
                self.terminal.push(NONE);
            }
            node = self.children[slot] as usize;
        }
        self.terminal[node] = rule;
    }

    fn remove(&mut self, lhs: &[u8]) {
        let mut node = 0usize;
        for &c in lhs.iter().rev() {
            node = self.children[node * self.width + c as usize] as usize;
        }
        self.terminal[node] = NONE;
    }

    /// Shortest rule whose lhs is a suffix of `word`: (rule id, lhs length).
    fn match_suffix(&self, word: &[u8]) -> Option<(u32, usize)> {
        let mut node = 0usize;
        for (depth, &c) in word.iter().rev().enumerate() {
            let next = self.children[node * self.width + c as usize];
            if next == NONE {
                return None;
            }
            node = next as usize;
            if self.terminal[node] != NONE {
                return Some((self.terminal[node], depth + 1));
            }
        }
        None
    }
}

#[derive(Debug, Clone)]
struct Rule {
    lhs: Vec<u8>,
    rhs: Vec<u8>,
    alive: bool,
}

/// Rule storage shared by completion and reduction.
#[derive(Debug, Clone)]
struct RuleSet {
    rules: Vec<Rule>,
    index: SuffixIndex,
    alive: usize,
}

impl RuleSet {
    fn new(width: usize) -> Self {
        Self {
            rules: Vec::new(),
            index: SuffixIndex::new(width),
            alive: 0,
        }
    }

    fn push(&mut self, lhs: Vec<u8>, rhs: Vec<u8>) -> usize {
        let id = self.rules.len();
        self.index.insert(&lhs, id as u32);
        self.rules.push(Rule {
            lhs,
            rhs,
            alive: true,
        });
        self.alive += 1;
        id
    }

    fn kill(&mut self, id: usize) {
        let rule = &mut self.rules[id];
        if rule.alive {
            rule.alive = false;
            self.index.remove(&rule.lhs);
            self.alive -= 1;
        }
    }

    fn reduce(&self, word: &[u8]) -> Vec<u8> {
        let mut out: Vec<u8> = Vec::with_capacity(word.len());
        let mut input: Vec<u8> = word.iter().rev().copied().collect();
        while let Some(c) = input.pop() {
            out.push(c);
            if let Some((rule, len)) = self.index.match_suffix(&out) {
                out.truncate(out.len() - len);
                input.extend(self.rules[rule as usize].rhs.iter().rev());
            }
        }
        out
    }

    fn is_irreducible_extension(&self, word: &[u8]) -> bool {
        self.index.match_suffix(word).is_none()
    }

    /// Words `u`, `v` obtained by rewriting each overlap of `a` then `b`.
    fn critical_pairs(&self, a: usize, b: usize) -> Vec<(Vec<u8>, Vec<u8>)> {
        let (ra, rb) = (&self.rules[a], &self.rules[b]);
        let (la, lb) = (ra.lhs.len(), rb.lhs.len());
        let mut pairs = Vec::new();
        for o in 1..la.min(lb) {
            if ra.lhs[la - o..] == rb.lhs[..o] {
                let mut left = ra.rhs.clone();
                left.extend_from_slice(&rb.lhs[o..]);
                let mut right = ra.lhs[..la - o].to_vec();
                right.extend_from_slice(&rb.rhs);
                pairs.push((left, right));
            }
        }
        // Inclusion of b inside a (absent from interreduced systems).
        if lb < la {
            for start in 0..=la - lb {
                if ra.lhs[start..start + lb] == rb.lhs[..] {
                    let mut right = ra.lhs[..start].to_vec();
                    right.extend_from_slice(&rb.rhs);
                    right.extend_from_slice(&ra.lhs[start + lb..]);
                    pairs.push((ra.rhs.clone(), right));
                }
            }
        }
        pairs
    }

    fn alive_ids(&self) -> Vec<usize> {
        (0..self.rules.len())
            .filter(|&i| self.rules[i].alive)
            .collect()
    }
}

struct Completion {
    set: RuleSet,
    max_rules: usize,
    max_len: usize,
    cap_hit: bool,
}

impl Completion {
    fn add_equation(&mut self, u: Vec<u8>, v: Vec<u8>) {
        let mut pending = VecDeque::from([(u, v)]);
        while let Some((u, v)) = pending.pop_front() {
            let u = self.set.reduce(&u);
            let v = self.set.reduce(&v);
            let (lhs, rhs) = match shortlex(&u, &v) {
                Ordering::Equal => continue,
                Ordering::Greater => (u, v),
                Ordering::Less => (v, u),
            };
            if lhs.len() > self.max_len {
                self.cap_hit = true;
                continue;
            }
            let id = self.set.push(lhs, rhs);
            let new_lhs = self.set.rules[id].lhs.clone();
            for other in self.set.alive_ids() {
                if other != id && contains_factor(&self.set.rules[other].lhs, &new_lhs) {
                    self.set.kill(other);
                    let r = &self.set.rules[other];
                    pending.push_back((r.lhs.clone(), r.rhs.clone()));
                }
            }
            for other in self.set.alive_ids() {
                if other != id && contains_factor(&self.set.rules[other].rhs, &new_lhs) {
                    let reduced = self.set.reduce(&self.set.rules[other].rhs);
                    self.set.rules[other].rhs = reduced;
                }
            }
        }
    }

    fn over_cap(&mut self) -> bool {
        if self.set.alive > self.max_rules {
            self.cap_hit = true;
        }
        self.cap_hit
    }

    /// Resolves critical pairs in rule-creation order. Returns false when a
    /// cap stopped the run.
    fn run(&mut self) -> bool {
        let mut i = 0;
        while i < self.set.rules.len() {
            if self.over_cap() {
                return false;
            }
            for j in 0..=i {
                if !self.set.rules[i].alive {
                    break;
                }
                if !self.set.rules[j].alive {
                    continue;
                }
                let mut pairs = self.set.critical_pairs(i, j);
                if i != j {
                    pairs.extend(self.set.critical_pairs(j, i));
                }
                for (u, v) in pairs {
                    self.add_equation(u, v);
                }
                if self.over_cap() {
                    return false;
                }
            }
            i += 1;
        }
        true
    }
}

/// A (possibly partial) shortlex rewriting system for a presentation.
#[derive(Debug, Clone)]
pub struct RewriteSystem {
    context: GroupContext,
    order: SymbolOrder,
    set: RuleSet,
    confluent: bool,
    rule_cap_hit: bool,
}

/// Runs Knuth-Bendix completion from the involution rules `g g -> e` and the
/// relators of `p`. Hitting `max_rules` or `max_len` leaves a sound but
/// non-confluent system.
pub fn kb_complete(
    p: &Presentation,
    order: &SymbolOrder,
    max_rules: usize,
    max_len: usize,
) -> Result<RewriteSystem> {
    for &g in p.generators() {
        if order.rank(g).is_none() {
            return Err(Error::NotInAlphabet(g));
        }
    }
    let width = order.alphabet().len();
    let mut completion = Completion {
        set: RuleSet::new(width),
        max_rules: max_rules.max(1),
        max_len: max_len.max(1),
        cap_hit: false,
    };
    for &g in order.alphabet() {
        let l = order.rank(g).unwrap() as u8;
        completion.add_equation(vec![l, l], vec![]);
    }
    for r in p.relators() {
        completion.add_equation(order.encode(&r.word)?, vec![]);
    }

    let mut confluent = false;
    while completion.run() {
        let unresolved = unresolved_pairs(&completion.set);
        if unresolved.is_empty() {
            confluent = true;
            break;
        }
        for (u, v) in unresolved {
            completion.add_equation(u, v);
        }
    }

    let mut system = RewriteSystem {
        context: p.context(),
        order: order.clone(),
        set: completion.set,
        confluent,
        rule_cap_hit: completion.cap_hit,
    };
    system.compact();
    Ok(system)
}

fn unresolved_pairs(set: &RuleSet) -> Vec<(Vec<u8>, Vec<u8>)> {
    let ids = set.alive_ids();
    let mut out = Vec::new();
    for &a in &ids {
        for &b in &ids {
            for (u, v) in set.critical_pairs(a, b) {
                if set.reduce(&u) != set.reduce(&v) {
                    out.push((u, v));
                }
            }
        }
    }
    out
}

impl RewriteSystem {
    /// Drops dead rules and rebuilds the index, keeping creation order.
    fn compact(&mut self) {
        let width = self.order.alphabet().len();
        let mut set = RuleSet::new(width);
        for r in self.set.rules.iter().filter(|r| r.alive) {
            set.push(r.lhs.clone(), r.rhs.clone());
        }
        self.set = set;
    }

    pub fn context(&self) -> GroupContext {
        self.context
    }

    pub fn order(&self) -> &SymbolOrder {
        &self.order
    }

    pub fn is_confluent(&self) -> bool {
        self.confluent
    }

    pub fn rule_cap_hit(&self) -> bool {
        self.rule_cap_hit
    }

    pub fn len(&self) -> usize {
        self.set.alive
    }

    pub fn is_empty(&self) -> bool {
        self.set.alive == 0
    }

    pub fn rules(&self) -> Vec<RewriteRule> {
        self.set
            .rules
            .iter()
            .filter(|r| r.alive)
            .map(|r| RewriteRule {
                lhs: self.order.decode(self.context, &r.lhs),
                rhs: self.order.decode(self.context, &r.rhs),
            })
            .collect()
    }

    /// Rewrites `w` until no rule applies.
    pub fn reduce(&self, w: &Word) -> Result<Word> {
        let letters = self.order.encode(w)?;
        Ok(self.order.decode(self.context, &self.set.reduce(&letters)))
    }

    /// Re-checks every critical pair of the current rules.
    pub fn verify_confluence(&self) -> bool {
        unresolved_pairs(&self.set).is_empty()
    }

    pub fn to_json(&self) -> String {
        let doc = RulesDoc {
            order: self
                .order
                .alphabet()
                .iter()
                .map(|g| g.to_string())
                .collect(),
            confluent: self.confluent,
            rules: self
                .rules()
                .into_iter()
                .map(|r| RuleDoc {
                    lhs: r.lhs.tokens(),
                    rhs: r.rhs.tokens(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("rules serialize")
    }

    /// Loads a rules document. Rules must be shortlex-decreasing.
    pub fn from_json(text: &str, context: GroupContext) -> Result<Self> {
        let doc: RulesDoc = serde_json::from_str(text)?;
        let alphabet = doc
            .order
            .iter()
            .map(|t| t.parse())
            .collect::<Result<Vec<Generator>>>()?;
        for &g in &alphabet {
            context.validate(g)?;
        }
        let order = SymbolOrder::new(alphabet)?;
        let mut set = RuleSet::new(order.alphabet().len());
        for r in &doc.rules {
            let lhs = order.encode(&Word::from_tokens(context, &r.lhs)?)?;
            let rhs = order.encode(&Word::from_tokens(context, &r.rhs)?)?;
            if shortlex(&lhs, &rhs) != Ordering::Greater {
                return Err(Error::Format(format!(
                    "rule {:?} -> {:?} does not decrease in shortlex",
                    r.lhs, r.rhs
                )));
            }
            set.push(lhs, rhs);
        }
        Ok(Self {
            context,
            order,
            set,
            confluent: doc.confluent,
            rule_cap_hit: false,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct RulesDoc {
    order: Vec<String>,
    confluent: bool,
    rules: Vec<RuleDoc>,
}

#[derive(Serialize, Deserialize)]
struct RuleDoc {
    lhs: Vec<String>,
    rhs: Vec<String>,
}

pub fn reduce(w: &Word, rs: &RewriteSystem) -> Result<Word> {
    rs.reduce(w)
}

/// Counts irreducible words, level by level. For a confluent system of a
/// finite group this is the group order.
pub fn enumerate_normal_forms(rs: &RewriteSystem, cap: usize) -> Result<u64> {
    if !rs.confluent {
        return Err(Error::NotConfluent);
    }
    let width = rs.order.alphabet().len() as u8;
    let mut level: Vec<Vec<u8>> = vec![Vec::new()];
    let mut count: u64 = 1;
    while !level.is_empty() {
        let mut next = Vec::new();
        for w in &level {
            for c in 0..width {
                let mut ext = w.clone();
                ext.push(c);
                if rs.set.is_irreducible_extension(&ext) {
                    count += 1;
                    if count > cap as u64 {
                        return Err(Error::Overflow { cap });
                    }
                    next.push(ext);
                }
            }
        }
        level = next;
    }
    Ok(count)
}
