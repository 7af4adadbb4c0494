//! Coset enumeration straight from the abstract presentation.

use std::time::Instant;

use pancake_coxeter::group::{GroupContext, GroupType, Word};
use pancake_coxeter::presentation::{presentation, Family};
use pancake_coxeter::todd_coxeter::{enumerate, validate_table, DEFAULT_MAX_COSETS};

fn main() -> pancake_coxeter::error::Result<()> {
    for (t, n) in [(GroupType::A, 6), (GroupType::B, 4), (GroupType::D, 5)] {
        let ctx = GroupContext::new(t, n)?;
        for family in [Family::Pancake, Family::Coxeter] {
            let p = presentation(ctx, family)?;
            let start = Instant::now();
            let table = enumerate(&p, &[], DEFAULT_MAX_COSETS)?;
            println!(
                "{t}{n} {family:<8} {:?} {} cosets, {} defined, valid {}, {:?}",
                table.status(),
                table.cosets(),
                table.defined_total(),
                validate_table(&table, &p),
                start.elapsed()
            );
        }
    }

    // Index of the subgroup generated by r2 and r3 in A5.
    let a5 = GroupContext::new(GroupType::A, 5)?;
    let p = presentation(a5, Family::Pancake)?;
    let h = [Word::parse("r2", a5)?, Word::parse("r3", a5)?];
    let table = enumerate(&p, &h, DEFAULT_MAX_COSETS)?;
    println!("[A5 : <r2, r3>] = {}", table.cosets());
    Ok(())
}
