//! Evaluate every relator, then break one on purpose and watch it get caught.

use pancake_coxeter::group::{GroupContext, GroupType};
use pancake_coxeter::presentation::pancake_presentation;
use pancake_coxeter::verify::check_relators;

fn main() -> pancake_coxeter::error::Result<()> {
    let ctx = GroupContext::new(GroupType::B, 5)?;
    let mut p = pancake_presentation(ctx)?;
    let report = check_relators(&p);
    println!(
        "{} relators checked, passed = {}",
        report.relators_checked,
        report.passed()
    );

    // Drop the last symbol of the longest relator.
    let longest = p
        .relators()
        .iter()
        .enumerate()
        .max_by_key(|(_, r)| r.word.len())
        .map(|(i, _)| i)
        .unwrap();
    let r = &mut p.relators_mut()[longest];
    let mut symbols = r.word.symbols().to_vec();
    symbols.pop();
    r.word = pancake_coxeter::group::Word::new(ctx, symbols)?;

    let report = check_relators(&p);
    for f in &report.relators_failed {
        println!(
            "caught {} {:?}: {} evaluates to {}",
            f.label, f.indices, f.word, f.evaluated
        );
    }
    Ok(())
}
