//! Words over the flip alphabet and the signed permutations they evaluate to.

use pancake_coxeter::group::{GroupContext, GroupType, SignedPermutation, Word};

fn main() -> pancake_coxeter::error::Result<()> {
    let b4 = GroupContext::new(GroupType::B, 4)?;
    let w = Word::parse("r3 (r1 r2)^2", b4)?;
    println!("{w} -> {}", w.eval());

    // Evaluation is a homomorphism from words to permutations.
    let u = Word::parse("r4 r2", b4)?;
    let v = Word::parse("r1 r3", b4)?;
    let lhs = u.concat(&v)?.eval();
    let rhs = u.eval().compose(&v.eval())?;
    println!("eval(uv) = {lhs}, eval(u)eval(v) = {rhs}");

    let p: SignedPermutation = "[-2,-1,3,4]".parse()?;
    println!(
        "{p} has inverse {} and {} negative entries",
        p.inverse(),
        p.negative_count()
    );

    match Word::parse("r2 (r3", b4) {
        Ok(_) => unreachable!(),
        Err(e) => println!("parse error: {e}"),
    }
    Ok(())
}
