//! Prefix-reversal and Coxeter presentations of `A_{n-1}`, `B_n` and `D_n`.
//!
//! Relators are emitted family by family, in the order and with the index
//! ranges of the published presentations. Each relator keeps its family
//! label (`R4`, `Rb6`, `Cd3`, ...) and the index tuple that produced it, so
//! a failing relator can be traced back to a single instance.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Generator, GroupContext, GroupType, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Prefix-reversal generators.
    Pancake,
    /// Adjacent-transposition (Coxeter) generators.
    Coxeter,
    /// Hand-built presentations.
    Custom,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Pancake => "pancake",
            Family::Coxeter => "coxeter",
            Family::Custom => "custom",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pancake" => Ok(Family::Pancake),
            "coxeter" => Ok(Family::Coxeter),
            "custom" => Ok(Family::Custom),
            other => Err(Error::Format(format!("unknown family {other:?}"))),
        }
    }
}

/// One relator with its family label and index tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relator {
    pub label: String,
    pub indices: Vec<u32>,
    pub word: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    context: GroupContext,
    family: Family,
    generators: Vec<Generator>,
    relators: Vec<Relator>,
}

impl Presentation {
    /// Builds a presentation from explicit parts, checking that every relator
    /// only uses listed generators.
    pub fn custom(
        context: GroupContext,
        generators: Vec<Generator>,
        relators: Vec<Relator>,
    ) -> Result<Self> {
        Self::assemble(context, Family::Custom, generators, relators)
    }

    fn assemble(
        context: GroupContext,
        family: Family,
        generators: Vec<Generator>,
        relators: Vec<Relator>,
    ) -> Result<Self> {
        for &g in &generators {
            context.validate(g)?;
        }
        for r in &relators {
            if r.word.context() != context {
                return Err(Error::Format(format!(
                    "relator {} belongs to {}, not {}",
                    r.label,
                    r.word.context(),
                    context
                )));
            }
            if let Some(&g) = r.word.symbols().iter().find(|g| !generators.contains(g)) {
                return Err(Error::NotInAlphabet(g));
            }
        }
        Ok(Self {
            context,
            family,
            generators,
            relators,
        })
    }

    pub fn context(&self) -> GroupContext {
        self.context
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relators(&self) -> &[Relator] {
        &self.relators
    }

    pub fn relators_mut(&mut self) -> &mut Vec<Relator> {
        &mut self.relators
    }

    /// Position of `g` in the generator list.
    pub fn generator_index(&self, g: Generator) -> Option<usize> {
        self.generators.iter().position(|&h| h == g)
    }

    pub fn to_json(&self) -> String {
        let doc = PresentationDoc {
            group_type: self.context.group_type(),
            degree: self.context.degree(),
            family: self.family,
            generators: self.generators.iter().map(|g| g.to_string()).collect(),
            relators: self
                .relators
                .iter()
                .map(|r| RelatorDoc {
                    label: r.label.clone(),
                    indices: r.indices.clone(),
                    word: r.word.tokens(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("presentation serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: PresentationDoc = serde_json::from_str(text)?;
        let context = GroupContext::new(doc.group_type, doc.degree)?;
        let generators = doc
            .generators
            .iter()
            .map(|t| t.parse())
            .collect::<Result<Vec<Generator>>>()?;
        let relators = doc
            .relators
            .into_iter()
            .map(|r| {
                Ok(Relator {
                    word: Word::from_tokens(context, &r.word)?,
                    label: r.label,
                    indices: r.indices,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::assemble(context, doc.family, generators, relators)
    }

    /// A GAP script defining the presented group as a free-group quotient.
    pub fn to_gap(&self) -> String {
        let names: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        let quoted: Vec<String> = names.iter().map(|s| format!("\"{s}\"")).collect();
        let binds: Vec<String> = names
            .iter()
            .enumerate()
            .map(|(i, s)| format!("{s} := F.{};;", i + 1))
            .collect();
        let rels: Vec<String> = self.relators.iter().map(|r| gap_product(&r.word)).collect();
        format!(
            "F := FreeGroup({});;\n{}\nrels := [ {} ];;\nG := F / rels;;\n",
            quoted.join(", "),
            binds.join(" "),
            rels.join(", ")
        )
    }

    pub fn export(&self, format: ExportFormat) -> String {
        match format {
            ExportFormat::Json => self.to_json(),
            ExportFormat::Gap => self.to_gap(),
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        writeln!(
            f,
            "{} presentation of {} ({} generators, {} relators)",
            self.family,
            self.context,
            self.generators.len(),
            self.relators.len()
        )?;
        writeln!(f, "generators: {}", gens.join(" "))?;
        for r in &self.relators {
            if r.indices.is_empty() {
                writeln!(f, "{:>5}: {}", r.label, r.word)?;
            } else {
                let idx: Vec<String> = r.indices.iter().map(|i| i.to_string()).collect();
                writeln!(f, "{:>5} [{}]: {}", r.label, idx.join(","), r.word)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Json,
    Gap,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ExportFormat::Json),
            "gap" => Ok(ExportFormat::Gap),
            other => Err(Error::Format(format!("unknown export format {other:?}"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct PresentationDoc {
    group_type: GroupType,
    degree: usize,
    family: Family,
    generators: Vec<String>,
    relators: Vec<RelatorDoc>,
}

#[derive(Serialize, Deserialize)]
struct RelatorDoc {
    label: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    indices: Vec<u32>,
    word: Vec<String>,
}

/// Renders a word as a GAP product, folding a periodic word `u^m` into a
/// power.
fn gap_product(word: &Word) -> String {
    let symbols = word.symbols();
    if symbols.is_empty() {
        return "One(F)".into();
    }
    let len = symbols.len();
    let period = (1..=len)
        .find(|&p| len.is_multiple_of(p) && (p..len).all(|i| symbols[i] == symbols[i - p]))
        .unwrap_or(len);
    let base: Vec<String> = symbols[..period].iter().map(|g| g.to_string()).collect();
    let reps = len / period;
    match (period, reps) {
        (_, 1) => base.join("*"),
        (1, m) => format!("{}^{m}", base[0]),
        (_, m) => format!("({})^{m}", base.join("*")),
    }
}

/// Group order of the context: `n!`, `2^n n!` or `2^(n-1) n!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedOrder {
    pub context: GroupContext,
    pub value: BigUint,
}

impl ExpectedOrder {
    pub fn of(context: GroupContext) -> Self {
        let n = context.degree();
        let factorial = (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k);
        let signs = match context.group_type() {
            GroupType::A => 0,
            GroupType::B => n,
            GroupType::D => n - 1,
        };
        Self {
            context,
            value: factorial << signs,
        }
    }
}

/// Words are assembled from generator lists internally; every index used here
/// is inside the context's range by construction.
struct Builder {
    context: GroupContext,
    relators: Vec<Relator>,
}

impl Builder {
    fn new(context: GroupContext) -> Self {
        Self {
            context,
            relators: Vec::new(),
        }
    }

    fn push(&mut self, label: &str, indices: &[u32], symbols: Vec<Generator>, power: usize) {
        let word =
            Word::new(self.context, symbols.repeat(power)).expect("relator symbols are in range");
        self.relators.push(Relator {
            label: label.to_string(),
            indices: indices.to_vec(),
            word,
        });
    }
}

use Generator::{RBar2, S0Prime, R, S, S0};

/// The prefix-reversal presentation of `ctx`.
pub fn pancake_presentation(ctx: GroupContext) -> Result<Presentation> {
    ctx.require_theorem_degree()?;
    let n = ctx.degree() as u32;
    let mut b = Builder::new(ctx);
    match ctx.group_type() {
        GroupType::A => {
            for k in 2..=n {
                b.push("R1", &[k], vec![R(k)], 2);
            }
            b.push("R2", &[], vec![R(2), R(3)], 3);
            for k in 4..=n {
                b.push("R3", &[k], vec![R(2), R(k)], 4);
            }
            for l in 4..=n {
                for k in 3..l {
                    let m = l - k + 2;
                    b.push(
                        "R4",
                        &[l, k],
                        vec![R(l), R(m), R(2), R(m), R(l), R(k), R(2), R(k)],
                        1,
                    );
                }
            }
            for k in 3..n {
                b.push(
                    "R5",
                    &[k],
                    vec![R(k), R(k - 1), R(k + 1), R(2), R(k + 1), R(k), R(k + 1)],
                    1,
                );
            }
            for k in 3..n {
                b.push(
                    "R6",
                    &[k],
                    vec![
                        R(k),
                        R(k - 1),
                        R(k),
                        R(k - 1),
                        R(k + 1),
                        R(3),
                        R(k + 1),
                        R(k - 1),
                        R(k + 1),
                    ],
                    1,
                );
            }
        }
        GroupType::B => {
            for k in 1..=n {
                b.push("Rb1", &[k], vec![R(k)], 2);
            }
            b.push("Rb2", &[], vec![R(2), R(3)], 6);
            for k in 2..=n {
                b.push("Rb3", &[k], vec![R(1), R(k)], 4);
            }
            for k in 4..=n {
                b.push("Rb4", &[k], vec![R(1), R(2), R(1), R(k)], 4);
            }
            for k in 3..=n {
                b.push("Rb5", &[k], vec![R(k), R(1), R(k), R(2)], 2);
            }
            for k in 2..n {
                b.push(
                    "Rb6",
                    &[k],
                    vec![
                        R(k),
                        R(1),
                        R(2),
                        R(1),
                        R(k),
                        R(k + 1),
                        R(2),
                        R(3),
                        R(2),
                        R(1),
                        R(k + 1),
                    ],
                    1,
                );
            }
            for k in 2..n {
                b.push(
                    "Rb7",
                    &[k],
                    vec![
                        R(k + 1),
                        R(1),
                        R(2),
                        R(1),
                        R(k + 1),
                        R(k - 1),
                        R(k),
                        R(k + 1),
                        R(k),
                    ],
                    1,
                );
            }
            for k in 2..=n.saturating_sub(2) {
                for l in k + 2..=n {
                    let m = l - k + 2;
                    b.push(
                        "Rb8",
                        &[k, l],
                        vec![
                            R(k),
                            R(1),
                            R(2),
                            R(1),
                            R(k),
                            R(l),
                            R(m),
                            R(1),
                            R(2),
                            R(1),
                            R(m),
                            R(l),
                        ],
                        1,
                    );
                }
            }
        }
        GroupType::D => {
            b.push("Rd1", &[], vec![RBar2], 2);
            for k in 2..=n {
                b.push("Rd2", &[k], vec![R(k)], 2);
            }
            b.push("Rd3", &[], vec![RBar2, R(2)], 2);
            b.push("Rd4", &[], vec![R(2), R(3)], 3);
            for k in 4..=n {
                b.push("Rd5", &[k], vec![R(2), R(k)], 4);
            }
            b.push("Rd6", &[], vec![RBar2, R(3), R(2), R(3)], 3);
            for k in 4..=n {
                b.push("Rd7", &[k], vec![RBar2, R(k), R(2), R(k)], 2);
            }
            for k in 3..n {
                b.push(
                    "Rd8",
                    &[k],
                    vec![R(k), R(k - 1), R(k + 1), R(2), R(k + 1), R(k), R(k + 1)],
                    1,
                );
            }
            for k in 3..n {
                b.push(
                    "Rd9",
                    &[k],
                    vec![
                        R(k),
                        R(k - 1),
                        R(k),
                        R(k - 1),
                        R(k + 1),
                        R(3),
                        R(k + 1),
                        R(k - 1),
                        R(k + 1),
                    ],
                    1,
                );
            }
            for l in 4..=n {
                for k in 3..=l - 2 {
                    let m = l - k + 2;
                    b.push(
                        "Rd10",
                        &[l, k],
                        vec![R(l), R(m), R(2), R(m), R(l), R(k), R(2), R(k)],
                        1,
                    );
                }
            }
        }
    }
    Presentation::assemble(ctx, Family::Pancake, ctx.pancake_generators(), b.relators)
}

fn coxeter_degree_check(ctx: GroupContext) -> Result<()> {
    let (min, requirement) = match ctx.group_type() {
        GroupType::A | GroupType::B => (2, "the Coxeter presentation requires n >= 2"),
        GroupType::D => (4, "the type D Coxeter presentation requires n >= 4"),
    };
    if ctx.degree() < min {
        return Err(Error::DegreeTooSmall {
            degree: ctx.degree(),
            requirement,
        });
    }
    Ok(())
}

/// The standard Coxeter presentation of `ctx`.
pub fn coxeter_presentation(ctx: GroupContext) -> Result<Presentation> {
    coxeter_degree_check(ctx)?;
    let n = ctx.degree() as u32;
    let mut b = Builder::new(ctx);
    match ctx.group_type() {
        GroupType::A => {
            for i in 1..n {
                b.push("Ca1", &[i], vec![S(i)], 2);
            }
            for i in 1..=n.saturating_sub(2) {
                b.push("Ca2", &[i], vec![S(i), S(i + 1)], 3);
            }
            for i in 1..=n.saturating_sub(3) {
                for j in i + 2..n {
                    b.push("Ca3", &[i, j], vec![S(i), S(j)], 2);
                }
            }
        }
        GroupType::B => {
            // s_0 carries index 0 in the labels.
            let s = |i: u32| if i == 0 { S0 } else { S(i) };
            for i in 0..n {
                b.push("Cb1", &[i], vec![s(i)], 2);
            }
            b.push("Cb2", &[], vec![S0, S(1)], 4);
            for i in 1..=n.saturating_sub(2) {
                b.push("Cb3", &[i], vec![S(i), S(i + 1)], 3);
            }
            for i in 0..=n.saturating_sub(3) {
                for j in i + 2..n {
                    b.push("Cb4", &[i, j], vec![s(i), S(j)], 2);
                }
            }
        }
        GroupType::D => {
            for i in 1..n {
                b.push("Cd1", &[i], vec![S(i)], 2);
            }
            b.push("Cd2", &[], vec![S0Prime], 2);
            b.push("Cd3", &[], vec![S0Prime, S(2)], 3);
            for i in 1..=n - 2 {
                b.push("Cd4", &[i], vec![S(i), S(i + 1)], 3);
            }
            for i in std::iter::once(1).chain(3..n) {
                b.push("Cd5", &[i], vec![S0Prime, S(i)], 2);
            }
            for i in 1..n {
                for j in i + 2..n {
                    b.push("Cd6", &[i, j], vec![S(i), S(j)], 2);
                }
            }
        }
    }
    Presentation::assemble(ctx, Family::Coxeter, ctx.coxeter_generators(), b.relators)
}

pub fn presentation(ctx: GroupContext, family: Family) -> Result<Presentation> {
    match family {
        Family::Pancake => pancake_presentation(ctx),
        Family::Coxeter => coxeter_presentation(ctx),
        Family::Custom => Err(Error::Format("custom presentations have no builder".into())),
    }
}

/// Closed-form relator count per family label, summing the index-range sizes.
pub fn relator_count_by_label(
    ctx: GroupContext,
    family: Family,
) -> Result<Vec<(&'static str, usize)>> {
    match family {
        Family::Pancake => ctx.require_theorem_degree()?,
        Family::Coxeter => coxeter_degree_check(ctx)?,
        Family::Custom => {
            return Err(Error::Format(
                "custom presentations have no closed form".into(),
            ))
        }
    }
    let n = ctx.degree();
    let tri = |m: usize| m * (m + 1) / 2;
    let counts = match (family, ctx.group_type()) {
        (Family::Pancake, GroupType::A) => vec![
            ("R1", n - 1),
            ("R2", 1),
            ("R3", n - 3),
            ("R4", (n - 2) * (n - 3) / 2),
            ("R5", n - 3),
            ("R6", n - 3),
        ],
        (Family::Pancake, GroupType::B) => vec![
            ("Rb1", n),
            ("Rb2", 1),
            ("Rb3", n - 1),
            ("Rb4", n - 3),
            ("Rb5", n - 2),
            ("Rb6", n - 2),
            ("Rb7", n - 2),
            ("Rb8", (n - 3) * (n - 2) / 2),
        ],
        (Family::Pancake, GroupType::D) => vec![
            ("Rd1", 1),
            ("Rd2", n - 1),
            ("Rd3", 1),
            ("Rd4", 1),
            ("Rd5", n - 3),
            ("Rd6", 1),
            ("Rd7", n - 3),
            ("Rd8", n - 3),
            ("Rd9", n - 3),
            ("Rd10", (n - 4) * (n - 3) / 2),
        ],
        (_, GroupType::A) => vec![
            ("Ca1", n - 1),
            ("Ca2", n - 2),
            ("Ca3", tri(n.saturating_sub(3))),
        ],
        (_, GroupType::B) => vec![("Cb1", n), ("Cb2", 1), ("Cb3", n - 2), ("Cb4", tri(n - 2))],
        (_, GroupType::D) => vec![
            ("Cd1", n - 1),
            ("Cd2", 1),
            ("Cd3", 1),
            ("Cd4", n - 2),
            ("Cd5", n - 2),
            ("Cd6", tri(n - 3)),
        ],
    };
    Ok(counts)
}

pub fn relator_count(ctx: GroupContext, family: Family) -> Result<usize> {
    Ok(relator_count_by_label(ctx, family)?
        .iter()
        .map(|(_, c)| c)
        .sum())
}
