//! Signed permutations, generator symbols and words.
//!
//! Every element lives in window notation: a signed permutation of degree `n`
//! is the sequence `[w(1), ..., w(n)]` whose absolute values are `1..=n`.
//! Unsigned permutations are the ones with no negative entry.
//!
//! Words act left to right on arrangements: evaluating `g1 g2 ... gm` starts
//! from the identity arrangement and performs the flip of `g1`, then `g2`,
//! and so on. With this action `r3 r2` and `s1 s2` agree in `S_4`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The Coxeter type of a group context.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GroupType {
    /// The symmetric group `S_n = A_{n-1}`.
    #[serde(rename = "A")]
    A,
    /// The hyperoctahedral group `B_n`.
    #[serde(rename = "B")]
    B,
    /// The even-signed subgroup `D_n` of `B_n`.
    #[serde(rename = "D")]
    D,
}

impl GroupType {
    pub const ALL: [GroupType; 3] = [GroupType::A, GroupType::B, GroupType::D];
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupType::A => "A",
            GroupType::B => "B",
            GroupType::D => "D",
        })
    }
}

impl FromStr for GroupType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(GroupType::A),
            "B" | "b" => Ok(GroupType::B),
            "D" | "d" => Ok(GroupType::D),
            other => Err(Error::Format(format!("unknown group type {other:?}"))),
        }
    }
}

/// A group type together with its degree `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupContext {
    group_type: GroupType,
    degree: usize,
}

impl GroupContext {
    pub fn new(group_type: GroupType, degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        Ok(Self { group_type, degree })
    }

    pub fn group_type(&self) -> GroupType {
        self.group_type
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Rejects degrees for which the prefix-reversal presentations are not
    /// claimed (`n <= 3`).
    pub fn require_theorem_degree(&self) -> Result<()> {
        if self.degree > 3 {
            Ok(())
        } else {
            Err(Error::DegreeTooSmall {
                degree: self.degree,
                requirement: "the prefix-reversal presentations require n > 3",
            })
        }
    }

    pub fn identity(&self) -> SignedPermutation {
        SignedPermutation::identity(self.degree)
    }

    /// Smallest valid prefix-reversal index in this context.
    pub fn min_reversal(&self) -> u32 {
        match self.group_type {
            GroupType::B => 1,
            GroupType::A | GroupType::D => 2,
        }
    }

    /// The prefix-reversal generators in canonical order.
    pub fn pancake_generators(&self) -> Vec<Generator> {
        let n = self.degree as u32;
        let mut gens = Vec::with_capacity(self.degree);
        if self.group_type == GroupType::D {
            gens.push(Generator::RBar2);
        }
        gens.extend((self.min_reversal()..=n).map(Generator::R));
        gens
    }

    /// The Coxeter generators in canonical order.
    pub fn coxeter_generators(&self) -> Vec<Generator> {
        let n = self.degree as u32;
        let mut gens = Vec::with_capacity(self.degree);
        match self.group_type {
            GroupType::A => {}
            GroupType::B => gens.push(Generator::S0),
            GroupType::D => gens.push(Generator::S0Prime),
        }
        gens.extend((1..n).map(Generator::S));
        gens
    }

    pub fn is_valid(&self, g: Generator) -> bool {
        let n = self.degree as u32;
        match (g, self.group_type) {
            (Generator::R(k), _) => k >= self.min_reversal() && k <= n,
            (Generator::RBar2, GroupType::D) => n >= 2,
            (Generator::S(i), _) => i >= 1 && i < n,
            (Generator::S0, GroupType::B) => true,
            (Generator::S0Prime, GroupType::D) => n >= 2,
            _ => false,
        }
    }

    pub fn validate(&self, g: Generator) -> Result<()> {
        if self.is_valid(g) {
            Ok(())
        } else {
            Err(Error::InvalidSymbolForContext {
                symbol: g,
                context: *self,
            })
        }
    }

    /// The window-notation element a generator stands for.
    pub fn eval_symbol(&self, g: Generator) -> Result<SignedPermutation> {
        self.apply_flip(g, &self.identity())
    }

    /// Performs the flip of `g` on the positions of `p`.
    pub fn apply_flip(&self, g: Generator, p: &SignedPermutation) -> Result<SignedPermutation> {
        self.validate(g)?;
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: p.degree(),
            });
        }
        let mut window = p.window.clone();
        self.flip_in_place(g, &mut window);
        Ok(SignedPermutation { window })
    }

    /// Flips `window` in place. `g` must already be valid in this context.
    pub(crate) fn flip_in_place(&self, g: Generator, window: &mut [i32]) {
        match g {
            Generator::R(k) => {
                let prefix = &mut window[..k as usize];
                prefix.reverse();
                if self.group_type == GroupType::B {
                    prefix.iter_mut().for_each(|x| *x = -*x);
                }
            }
            Generator::RBar2 | Generator::S0Prime => {
                window.swap(0, 1);
                window[0] = -window[0];
                window[1] = -window[1];
            }
            Generator::S(i) => window.swap(i as usize - 1, i as usize),
            Generator::S0 => window[0] = -window[0],
        }
    }
}

impl fmt::Display for GroupContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "type {} of degree {}", self.group_type, self.degree)
    }
}

/// A signed permutation in window notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty window".into()));
        }
        let mut seen = vec![false; n];
        for &x in &window {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a - 1] {
                return Err(Error::InvalidPermutation(format!("{window:?}")));
            }
            seen[a - 1] = true;
        }
        Ok(Self { window })
    }

    pub fn identity(degree: usize) -> Self {
        Self {
            window: (1..=degree as i32).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window
            .iter()
            .enumerate()
            .all(|(i, &x)| x == i as i32 + 1)
    }

    pub fn is_unsigned(&self) -> bool {
        self.window.iter().all(|&x| x > 0)
    }

    pub fn negative_count(&self) -> usize {
        self.window.iter().filter(|&&x| x < 0).count()
    }

    /// "Perform `self`'s rearrangement, then `other`'s".
    pub fn compose(&self, other: &SignedPermutation) -> Result<SignedPermutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        let window = other
            .window
            .iter()
            .map(|&q| q.signum() * self.window[q.unsigned_abs() as usize - 1])
            .collect();
        Ok(SignedPermutation { window })
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut window = vec![0; self.degree()];
        for (i, &x) in self.window.iter().enumerate() {
            window[x.unsigned_abs() as usize - 1] = x.signum() * (i as i32 + 1);
        }
        SignedPermutation { window }
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.window.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::InvalidPermutation(format!("expected [..], got {s:?}")))?;
        let window = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::InvalidPermutation(format!("bad entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedPermutation::new(window)
    }
}

/// A named generator: a prefix reversal or a Coxeter generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    /// Prefix reversal `r_k` (signed in type B).
    R(u32),
    /// The signed reversal of the first two entries, `[-2,-1,3,...,n]`.
    RBar2,
    /// Adjacent transposition `s_i = (i, i+1)`.
    S(u32),
    /// `s_0 = [-1,2,...,n]`.
    S0,
    /// `s_0' = [-2,-1,3,...,n]`.
    S0Prime,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::R(k) => write!(f, "r{k}"),
            Generator::RBar2 => f.write_str("rb2"),
            Generator::S(i) => write!(f, "s{i}"),
            Generator::S0 => f.write_str("s0"),
            Generator::S0Prime => f.write_str("s0p"),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Syntax {
            position: 0,
            message: format!("unknown generator {s:?}"),
        };
        let index = |digits: &str| -> Result<u32> {
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            digits.parse().map_err(|_| bad())
        };
        match s {
            "rb2" => Ok(Generator::RBar2),
            "s0" => Ok(Generator::S0),
            "s0p" => Ok(Generator::S0Prime),
            _ => {
                if let Some(rest) = s.strip_prefix('r') {
                    Ok(Generator::R(index(rest)?))
                } else if let Some(rest) = s.strip_prefix('s') {
                    match index(rest)? {
                        0 => Err(bad()),
                        i => Ok(Generator::S(i)),
                    }
                } else {
                    Err(bad())
                }
            }
        }
    }
}

/// A finite sequence of generators valid in one context.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    symbols: Vec<Generator>,
    context: GroupContext,
}

impl Word {
    pub fn new(context: GroupContext, symbols: Vec<Generator>) -> Result<Self> {
        for &g in &symbols {
            context.validate(g)?;
        }
        Ok(Self { symbols, context })
    }

    pub(crate) fn new_unchecked(context: GroupContext, symbols: Vec<Generator>) -> Self {
        debug_assert!(symbols.iter().all(|&g| context.is_valid(g)));
        Self { symbols, context }
    }

    pub fn empty(context: GroupContext) -> Self {
        Self {
            symbols: Vec::new(),
            context,
        }
    }

    /// Parses the word grammar: whitespace-separated generator tokens and
    /// parenthesised powers `( ... )^m`, expanded eagerly.
    pub fn parse(text: &str, context: GroupContext) -> Result<Self> {
        let mut parser = Parser {
            src: text.as_bytes(),
            pos: 0,
        };
        let symbols = parser.sequence(0)?;
        if parser.pos < parser.src.len() {
            return Err(parser.error("unexpected ')'"));
        }
        Word::new(context, symbols)
    }

    pub fn symbols(&self) -> &[Generator] {
        &self.symbols
    }

    pub fn context(&self) -> GroupContext {
        self.context
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.context != other.context {
            return Err(Error::DegreeMismatch {
                expected: self.context.degree(),
                found: other.context.degree(),
            });
        }
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        Ok(Word::new_unchecked(self.context, symbols))
    }

    pub fn pow(&self, m: usize) -> Word {
        Word::new_unchecked(self.context, self.symbols.repeat(m))
    }

    /// The inverse word. Every generator is an involution, so this is the
    /// reversal.
    pub fn inverse(&self) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.reverse();
        Word::new_unchecked(self.context, symbols)
    }

    pub fn eval(&self) -> SignedPermutation {
        let mut window = self.context.identity().window;
        for &g in &self.symbols {
            self.context.flip_in_place(g, &mut window);
        }
        SignedPermutation { window }
    }

    /// Token strings, as used by the JSON formats.
    pub fn tokens(&self) -> Vec<String> {
        self.symbols.iter().map(|g| g.to_string()).collect()
    }

    pub fn from_tokens<S: AsRef<str>>(context: GroupContext, tokens: &[S]) -> Result<Self> {
        let symbols = tokens
            .iter()
            .map(|t| t.as_ref().parse())
            .collect::<Result<Vec<Generator>>>()?;
        Word::new(context, symbols)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.symbols.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn sequence(&mut self, depth: usize) -> Result<Vec<Generator>> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            match self.src.get(self.pos) {
                None => return Ok(out),
                Some(b')') => {
                    if depth == 0 {
                        return Err(self.error("unbalanced ')'"));
                    }
                    return Ok(out);
                }
                Some(b'(') => {
                    self.pos += 1;
                    let inner = self.sequence(depth + 1)?;
                    if self.src.get(self.pos) != Some(&b')') {
                        return Err(self.error("missing ')'"));
                    }
                    self.pos += 1;
                    let m = self.exponent()?;
                    out.extend(inner.iter().copied().cycle().take(inner.len() * m));
                }
                Some(c) if c.is_ascii_alphanumeric() => {
                    let start = self.pos;
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                        self.pos += 1;
                    }
                    let token = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                    let g = token.parse().map_err(|_| Error::Syntax {
                        position: start,
                        message: format!("unknown generator {token:?}"),
                    })?;
                    out.push(g);
                }
                Some(_) => return Err(self.error("unexpected character")),
            }
        }
    }

    fn exponent(&mut self) -> Result<usize> {
        self.skip_ws();
        if self.src.get(self.pos) != Some(&b'^') {
            return Err(self.error("expected '^' after ')'"));
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        match digits.parse::<usize>() {
            Ok(m) if m >= 1 => Ok(m),
            _ => Err(Error::Syntax {
                position: start,
                message: "exponent must be a positive integer".into(),
            }),
        }
    }
}
