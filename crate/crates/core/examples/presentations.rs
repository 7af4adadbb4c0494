//! Build both presentation families and compare relator counts.

use pancake_coxeter::group::{GroupContext, GroupType};
use pancake_coxeter::presentation::{presentation, relator_count_by_label, ExpectedOrder, Family};

fn main() -> pancake_coxeter::error::Result<()> {
    for t in GroupType::ALL {
        let ctx = GroupContext::new(t, 5)?;
        for family in [Family::Pancake, Family::Coxeter] {
            let p = presentation(ctx, family)?;
            let counts = relator_count_by_label(ctx, family)?
                .into_iter()
                .map(|(label, c)| format!("{label}:{c}"))
                .collect::<Vec<_>>()
                .join(" ");
            println!(
                "{t}5 {family:<8} {:>3} relators  {counts}",
                p.relators().len()
            );
        }
        println!("    expected order {}", ExpectedOrder::of(ctx).value);
    }

    let d4 = GroupContext::new(GroupType::D, 4)?;
    print!("{}", presentation(d4, Family::Pancake)?);
    Ok(())
}
