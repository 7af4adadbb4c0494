//! Greedy flip sequences for plain and burnt stacks.

use pancake_coxeter::group::{GroupContext, GroupType, SignedPermutation};
use pancake_coxeter::pancake::{greedy_bound, greedy_sort, verify_certificate};

fn main() -> pancake_coxeter::error::Result<()> {
    for (t, text) in [
        (GroupType::A, "[3,1,2]"),
        (GroupType::A, "[5,2,7,1,6,3,4]"),
        (GroupType::B, "[-1,2,3]"),
        (GroupType::B, "[3,-5,1,-2,4]"),
    ] {
        let p: SignedPermutation = text.parse()?;
        let ctx = GroupContext::new(t, p.degree())?;
        let cert = greedy_sort(&p, ctx)?;
        println!(
            "{t} {p}: {} flips (bound {}), checks {}\n  {}",
            cert.flip_count,
            greedy_bound(ctx),
            verify_certificate(&cert, ctx),
            cert.word
        );
    }
    let p: SignedPermutation = "[2,3,1]".parse()?;
    let ctx = GroupContext::new(GroupType::A, 3)?;
    println!("{}", greedy_sort(&p, ctx)?.to_json());
    Ok(())
}
