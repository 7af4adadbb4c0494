//! Complete the pancake presentation of A5 and use it to normalise words.

use pancake_coxeter::group::{GroupContext, GroupType, Word};
use pancake_coxeter::presentation::pancake_presentation;
use pancake_coxeter::rewriting::{
    enumerate_normal_forms, kb_complete, SymbolOrder, DEFAULT_MAX_LEN, DEFAULT_MAX_RULES,
};

fn main() -> pancake_coxeter::error::Result<()> {
    let ctx = GroupContext::new(GroupType::A, 5)?;
    let p = pancake_presentation(ctx)?;
    let rs = kb_complete(
        &p,
        &SymbolOrder::canonical(&p),
        DEFAULT_MAX_RULES,
        DEFAULT_MAX_LEN,
    )?;
    println!("{} rules, confluent {}", rs.len(), rs.is_confluent());
    for rule in rs.rules().iter().take(5) {
        println!(
            "  {} -> {}",
            rule.lhs,
            if rule.rhs.is_empty() {
                "e".into()
            } else {
                rule.rhs.to_string()
            }
        );
    }
    println!("normal forms: {}", enumerate_normal_forms(&rs, 1_000_000)?);

    let w = Word::parse("(r5 r4 r3)^4 r2 r2 r5", ctx)?;
    let nf = rs.reduce(&w)?;
    println!("{w}\n  -> {nf}\n  same element: {}", nf.eval() == w.eval());
    Ok(())
}
