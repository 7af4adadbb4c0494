//! Command-line front end. Parsing lives here so the binary stays a thin
//! shim and every command can be driven from tests through [`run`].
//!
//! Exit codes: 0 all checks passed, 1 a check failed, 2 a cap was hit and
//! the result is inconclusive, 3 usage error.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::Error;
use crate::group::{GroupContext, GroupType, SignedPermutation, Word};
use crate::pancake::{greedy_sort, verify_certificate};
use crate::presentation::{self, ExpectedOrder, ExportFormat, Family, Presentation};
use crate::rewriting::{
    enumerate_normal_forms, kb_complete, RewriteSystem, SymbolOrder, DEFAULT_MAX_LEN,
    DEFAULT_MAX_RULES,
};
use crate::todd_coxeter::{enumerate, validate_table, CosetStatus, DEFAULT_MAX_COSETS};
use crate::verify::{
    bfs_order, check_lemma_identities, check_order, check_relators, VerificationReport,
    DEFAULT_BFS_CAP,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_OVERFLOW: u8 = 2;
pub const EXIT_USAGE: u8 = 3;

#[derive(Debug, Clone, Parser)]
#[command(
    name = "pancake-coxeter",
    version,
    about = "Prefix-reversal presentations of the Coxeter groups A, B and D"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TypeArg {
    A,
    B,
    D,
}

impl From<TypeArg> for GroupType {
    fn from(t: TypeArg) -> Self {
        match t {
            TypeArg::A => GroupType::A,
            TypeArg::B => GroupType::B,
            TypeArg::D => GroupType::D,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Pancake,
    Coxeter,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Pancake => Family::Pancake,
            FamilyArg::Coxeter => Family::Coxeter,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Gap,
}

#[derive(Debug, Clone, Args)]
pub struct GroupArgs {
    /// Coxeter type.
    #[arg(long = "type", value_enum, ignore_case = true)]
    pub group_type: TypeArg,
    /// Degree n.
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "pancake")]
    pub family: FamilyArg,
}

impl GroupArgs {
    fn context(&self) -> Result<GroupContext, Error> {
        GroupContext::new(self.group_type.into(), self.n)
    }

    fn presentation(&self) -> Result<Presentation, Error> {
        presentation::presentation(self.context()?, self.family.into())
    }
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Print a presentation.
    Present(GroupArgs),
    /// Evaluate every relator in the permutation model.
    Verify(GroupArgs),
    /// Compare the generated group's order with the expected order.
    Order {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, env = "PANCAKE_BFS_CAP", default_value_t = DEFAULT_BFS_CAP)]
        cap: usize,
    },
    /// Todd-Coxeter coset enumeration.
    Tc {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, env = "PANCAKE_MAX_COSETS", default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
        /// Subgroup generator word (repeatable).
        #[arg(long)]
        subgroup: Vec<String>,
    },
    /// Knuth-Bendix completion.
    Kb {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, env = "PANCAKE_MAX_RULES", default_value_t = DEFAULT_MAX_RULES)]
        max_rules: usize,
        #[arg(long, env = "PANCAKE_MAX_LEN", default_value_t = DEFAULT_MAX_LEN)]
        max_len: usize,
        /// Write the rules document to this path.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Reduce a word with a rewriting system.
    Reduce {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        word: String,
        /// Rules document from `kb --emit`; completion runs when absent.
        #[arg(long)]
        rules: Option<PathBuf>,
        #[arg(long, env = "PANCAKE_MAX_RULES", default_value_t = DEFAULT_MAX_RULES)]
        max_rules: usize,
        #[arg(long, env = "PANCAKE_MAX_LEN", default_value_t = DEFAULT_MAX_LEN)]
        max_len: usize,
    },
    /// Greedy pancake sort of a permutation in window notation.
    Sort {
        #[arg(long = "type", value_enum, ignore_case = true)]
        group_type: TypeArg,
        #[arg(long)]
        perm: String,
    },
    /// Export a presentation as JSON or a GAP script.
    Export {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Check the generator-change identities.
    Lemmas {
        #[arg(long = "type", value_enum, ignore_case = true)]
        group_type: TypeArg,
        #[arg(long)]
        n: usize,
    },
    /// Run every check over the default ranges.
    Sweep {
        #[arg(long, env = "PANCAKE_BFS_CAP", default_value_t = DEFAULT_BFS_CAP)]
        bfs_cap: usize,
        #[arg(long, env = "PANCAKE_MAX_COSETS", default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
    },
}

/// Rendered result of a command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: u8, stdout: String) -> Self {
        Self {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(e: &Error) -> Self {
        let code = match e {
            Error::Overflow { .. } => EXIT_OVERFLOW,
            _ => EXIT_USAGE,
        };
        Self {
            code,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

pub fn run(cfg: &RunConfig) -> Outcome {
    match dispatch(cfg) {
        Ok(out) => out,
        Err(e) => Outcome::error(&e),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn report_text(r: &VerificationReport) -> String {
    let mut s = String::new();
    let family = r
        .family
        .map(|f| format!(", {f} presentation"))
        .unwrap_or_default();
    let _ = writeln!(s, "type {} of degree {}{}", r.group_type, r.degree, family);
    if r.relators_checked > 0 {
        let _ = writeln!(s, "relators checked   {:>8}", r.relators_checked);
        let _ = writeln!(s, "relators failed    {:>8}", r.relators_failed.len());
        for f in &r.relators_failed {
            let _ = writeln!(
                s,
                "  {} {:?}: {} = {}",
                f.label, f.indices, f.word, f.evaluated
            );
        }
    }
    if r.identities_checked > 0 {
        let _ = writeln!(s, "identities checked {:>8}", r.identities_checked);
        let _ = writeln!(s, "identities failed  {:>8}", r.identities_failed.len());
        for f in &r.identities_failed {
            let _ = writeln!(s, "  {} {:?}", f.name, f.indices);
        }
    }
    if let Some(found) = r.order_found {
        let expected = r
            .order_expected
            .map(|e| e.to_string())
            .unwrap_or_else(|| "(too large)".into());
        let _ = writeln!(s, "order found        {found:>8}");
        let _ = writeln!(s, "order expected     {expected:>8}");
    }
    let _ = writeln!(s, "verdict: {}", if r.passed() { "PASS" } else { "FAIL" });
    s
}

fn render_report(cfg: &RunConfig, r: &VerificationReport) -> Outcome {
    let code = if r.passed() { EXIT_OK } else { EXIT_FAILURE };
    let out = if cfg.json { to_json(r) } else { report_text(r) };
    Outcome::ok(code, out)
}

#[derive(Serialize)]
struct TcOutput {
    status: CosetStatus,
    cosets: usize,
    defined_total: usize,
    coincidences: usize,
}

#[derive(Serialize)]
struct KbOutput {
    group_type: GroupType,
    degree: usize,
    family: Family,
    rules: usize,
    confluent: bool,
    rule_cap_hit: bool,
    normal_forms: Option<u64>,
}

#[derive(Serialize)]
struct ReduceOutput {
    input: String,
    reduced: String,
    length: usize,
    confluent: bool,
}

fn load_or_complete(
    group: &GroupArgs,
    rules: Option<&PathBuf>,
    max_rules: usize,
    max_len: usize,
) -> Result<RewriteSystem, Error> {
    match rules {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
            RewriteSystem::from_json(&text, group.context()?)
        }
        None => {
            let p = group.presentation()?;
            kb_complete(&p, &SymbolOrder::canonical(&p), max_rules, max_len)
        }
    }
}

fn dispatch(cfg: &RunConfig) -> Result<Outcome, Error> {
    match &cfg.command {
        Command::Present(group) => {
            let p = group.presentation()?;
            let out = if cfg.json {
                format!("{}\n", p.to_json())
            } else {
                p.to_string()
            };
            Ok(Outcome::ok(EXIT_OK, out))
        }
        Command::Verify(group) => {
            let p = group.presentation()?;
            Ok(render_report(cfg, &check_relators(&p)))
        }
        Command::Order { group, cap } => {
            let p = group.presentation()?;
            Ok(render_report(cfg, &check_order(&p, *cap)?))
        }
        Command::Lemmas { group_type, n } => {
            let ctx = GroupContext::new((*group_type).into(), *n)?;
            Ok(render_report(cfg, &check_lemma_identities(ctx)?))
        }
        Command::Tc {
            group,
            max_cosets,
            subgroup,
        } => {
            let p = group.presentation()?;
            let words = subgroup
                .iter()
                .map(|s| Word::parse(s, p.context()))
                .collect::<Result<Vec<_>, _>>()?;
            let table = enumerate(&p, &words, *max_cosets)?;
            let code = match table.status() {
                CosetStatus::Closed => {
                    let expected = ExpectedOrder::of(p.context()).value.to_u64();
                    let order_ok = !words.is_empty() || expected == Some(table.cosets() as u64);
                    if order_ok && validate_table(&table, &p) {
                        EXIT_OK
                    } else {
                        EXIT_FAILURE
                    }
                }
                _ => EXIT_OVERFLOW,
            };
            let s = table.summary();
            let summary = TcOutput {
                status: s.status,
                cosets: s.cosets,
                defined_total: s.defined_total,
                coincidences: s.coincidences,
            };
            let out = if cfg.json {
                to_json(&summary)
            } else {
                format!(
                    "status {:?}\ncosets {}\ndefined {}\ncoincidences {}\n",
                    summary.status, summary.cosets, summary.defined_total, summary.coincidences
                )
            };
            Ok(Outcome::ok(code, out))
        }
        Command::Kb {
            group,
            max_rules,
            max_len,
            emit,
        } => {
            let p = group.presentation()?;
            let rs = kb_complete(&p, &SymbolOrder::canonical(&p), *max_rules, *max_len)?;
            if let Some(path) = emit {
                std::fs::write(path, rs.to_json() + "\n")
                    .map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
            }
            let normal_forms = if rs.is_confluent() {
                match enumerate_normal_forms(&rs, DEFAULT_BFS_CAP) {
                    Ok(c) => Some(c),
                    Err(Error::Overflow { .. }) => None,
                    Err(e) => return Err(e),
                }
            } else {
                None
            };
            let expected = ExpectedOrder::of(p.context()).value.to_u64();
            let code = match (rs.is_confluent(), normal_forms) {
                (true, Some(c)) if Some(c) == expected => EXIT_OK,
                (true, Some(_)) => EXIT_FAILURE,
                _ => EXIT_OVERFLOW,
            };
            let summary = KbOutput {
                group_type: p.context().group_type(),
                degree: p.context().degree(),
                family: p.family(),
                rules: rs.len(),
                confluent: rs.is_confluent(),
                rule_cap_hit: rs.rule_cap_hit(),
                normal_forms,
            };
            let out = if cfg.json {
                to_json(&summary)
            } else {
                let nf = normal_forms
                    .map(|c| c.to_string())
                    .unwrap_or_else(|| "-".into());
                format!(
                    "{} presentation of {}\nrules {}\nconfluent {}\nrule cap hit {}\nnormal forms {}\n",
                    p.family(),
                    p.context(),
                    rs.len(),
                    rs.is_confluent(),
                    rs.rule_cap_hit(),
                    nf
                )
            };
            Ok(Outcome::ok(code, out))
        }
        Command::Reduce {
            group,
            word,
            rules,
            max_rules,
            max_len,
        } => {
            let rs = load_or_complete(group, rules.as_ref(), *max_rules, *max_len)?;
            let w = Word::parse(word, rs.context())?;
            let reduced = rs.reduce(&w)?;
            let code = if reduced.eval() == w.eval() {
                EXIT_OK
            } else {
                EXIT_FAILURE
            };
            let summary = ReduceOutput {
                input: w.to_string(),
                reduced: reduced.to_string(),
                length: reduced.len(),
                confluent: rs.is_confluent(),
            };
            let out = if cfg.json {
                to_json(&summary)
            } else {
                let shown = if reduced.is_empty() {
                    "e".to_string()
                } else {
                    reduced.to_string()
                };
                format!("{shown}\n")
            };
            Ok(Outcome::ok(code, out))
        }
        Command::Sort { group_type, perm } => {
            let p: SignedPermutation = perm.parse()?;
            let ctx = GroupContext::new((*group_type).into(), p.degree())?;
            let cert = greedy_sort(&p, ctx)?;
            let code = if verify_certificate(&cert, ctx) {
                EXIT_OK
            } else {
                EXIT_FAILURE
            };
            Ok(Outcome::ok(code, format!("{}\n", cert.to_json())))
        }
        Command::Export { group, format } => {
            let p = group.presentation()?;
            let format = match format {
                FormatArg::Json => ExportFormat::Json,
                FormatArg::Gap => ExportFormat::Gap,
            };
            let mut out = p.export(format);
            if !out.ends_with('\n') {
                out.push('\n');
            }
            Ok(Outcome::ok(EXIT_OK, out))
        }
        Command::Sweep {
            bfs_cap,
            max_cosets,
        } => {
            let sweep = SweepConfig {
                bfs_cap: *bfs_cap,
                max_cosets: *max_cosets,
                ..SweepConfig::default()
            };
            let report = run_all(&sweep);
            let out = if cfg.json {
                to_json(&report)
            } else {
                report.to_text()
            };
            Ok(Outcome::ok(report.exit_code, out))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Overflow,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepItem {
    pub group_type: GroupType,
    pub degree: usize,
    pub check: String,
    pub verdict: Verdict,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub items: Vec<SweepItem>,
    pub exit_code: u8,
}

impl SweepReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for item in &self.items {
            let verdict = match item.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
                Verdict::Overflow => "OVERFLOW",
            };
            let _ = writeln!(
                s,
                "{}{:<3} {:<22} {:<9} {}",
                item.group_type, item.degree, item.check, verdict, item.detail
            );
        }
        let _ = writeln!(s, "exit code {}", self.exit_code);
        s
    }

    pub fn failures(&self) -> impl Iterator<Item = &SweepItem> {
        self.items.iter().filter(|i| i.verdict == Verdict::Fail)
    }
}

/// Degree ranges and caps for [`run_all`].
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub ranges: Vec<(GroupType, std::ops::RangeInclusive<usize>)>,
    /// Degrees that also get a coset enumeration.
    pub coset_ranges: Vec<(GroupType, std::ops::RangeInclusive<usize>)>,
    pub bfs_cap: usize,
    pub max_cosets: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            ranges: vec![
                (GroupType::A, 4..=8),
                (GroupType::B, 4..=6),
                (GroupType::D, 4..=6),
            ],
            coset_ranges: vec![
                (GroupType::A, 4..=7),
                (GroupType::B, 4..=5),
                (GroupType::D, 4..=5),
            ],
            bfs_cap: DEFAULT_BFS_CAP,
            max_cosets: DEFAULT_MAX_COSETS,
        }
    }
}

pub fn run_all(cfg: &SweepConfig) -> SweepReport {
    run_all_with(cfg, |_| {})
}

/// Like [`run_all`], with a hook that may edit every presentation before it
/// is checked.
pub fn run_all_with<F: Fn(&mut Presentation)>(cfg: &SweepConfig, edit: F) -> SweepReport {
    let mut items = Vec::new();
    for (t, range) in &cfg.ranges {
        for n in range.clone() {
            let with_tc = cfg
                .coset_ranges
                .iter()
                .any(|(u, r)| u == t && r.contains(&n));
            sweep_context(*t, n, with_tc, cfg, &edit, &mut items);
        }
    }
    items.sort_by(|a, b| {
        (a.group_type, a.degree, &a.check).cmp(&(b.group_type, b.degree, &b.check))
    });
    let exit_code = if items.iter().any(|i| i.verdict == Verdict::Fail) {
        EXIT_FAILURE
    } else if items.iter().any(|i| i.verdict == Verdict::Overflow) {
        EXIT_OVERFLOW
    } else {
        EXIT_OK
    };
    SweepReport { items, exit_code }
}

fn sweep_context<F: Fn(&mut Presentation)>(
    t: GroupType,
    n: usize,
    with_tc: bool,
    cfg: &SweepConfig,
    edit: &F,
    items: &mut Vec<SweepItem>,
) {
    let mut push = |check: String, verdict: Verdict, detail: String| {
        items.push(SweepItem {
            group_type: t,
            degree: n,
            check,
            verdict,
            detail,
        })
    };
    let ctx = match GroupContext::new(t, n) {
        Ok(c) => c,
        Err(e) => return push("context".into(), Verdict::Fail, e.to_string()),
    };

    match check_lemma_identities(ctx) {
        Ok(r) => {
            let detail = match r.identities_failed.first() {
                None => format!("{} identities", r.identities_checked),
                Some(f) => format!("{} {:?} fails", f.name, f.indices),
            };
            push("lemmas".into(), verdict_of(&r), detail);
        }
        Err(e) => push("lemmas".into(), Verdict::Fail, e.to_string()),
    }

    let mut closures = Vec::new();
    for family in [Family::Pancake, Family::Coxeter] {
        let mut p = match presentation::presentation(ctx, family) {
            Ok(p) => p,
            Err(e) => {
                push(format!("{family}/build"), Verdict::Fail, e.to_string());
                continue;
            }
        };
        edit(&mut p);

        let r = check_relators(&p);
        let detail = match r.relators_failed.first() {
            None => format!("{} relators", r.relators_checked),
            Some(f) => format!("{} {:?} evaluates to {}", f.label, f.indices, f.evaluated),
        };
        push(format!("{family}/relators"), verdict_of(&r), detail);

        match bfs_order(p.generators(), ctx, cfg.bfs_cap) {
            Ok(closure) => {
                let expected = ExpectedOrder::of(ctx).value.to_u64();
                let found = closure.order() as u64;
                let verdict = if Some(found) == expected {
                    Verdict::Pass
                } else {
                    Verdict::Fail
                };
                push(
                    format!("{family}/order"),
                    verdict,
                    format!("found {found}, expected {}", expected.unwrap_or(0)),
                );
                closures.push(closure);
            }
            Err(e) => push(format!("{family}/order"), Verdict::Overflow, e.to_string()),
        }

        if with_tc {
            match enumerate(&p, &[], cfg.max_cosets) {
                Ok(table) if table.status() == CosetStatus::Closed => {
                    let expected = ExpectedOrder::of(ctx).value.to_u64();
                    let ok = Some(table.cosets() as u64) == expected && validate_table(&table, &p);
                    push(
                        format!("{family}/todd-coxeter"),
                        if ok { Verdict::Pass } else { Verdict::Fail },
                        format!(
                            "{} cosets ({} defined)",
                            table.cosets(),
                            table.defined_total()
                        ),
                    );
                }
                Ok(table) => push(
                    format!("{family}/todd-coxeter"),
                    Verdict::Overflow,
                    format!("overflowed at {} cosets", table.defined_total()),
                ),
                Err(e) => push(
                    format!("{family}/todd-coxeter"),
                    Verdict::Fail,
                    e.to_string(),
                ),
            }
        }
    }

    if let [pancake, coxeter] = closures.as_slice() {
        let a: HashSet<_> = pancake.elements.iter().collect();
        let same =
            pancake.order() == coxeter.order() && coxeter.elements.iter().all(|e| a.contains(e));
        push(
            "closure-sets".into(),
            if same { Verdict::Pass } else { Verdict::Fail },
            format!("{} elements", pancake.order()),
        );
    }
}

fn verdict_of(r: &VerificationReport) -> Verdict {
    if r.passed() {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}
