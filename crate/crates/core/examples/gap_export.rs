//! Write presentations out for GAP or as JSON, and read the JSON back.

use pancake_coxeter::group::{GroupContext, GroupType};
use pancake_coxeter::presentation::{pancake_presentation, ExportFormat, Presentation};

fn main() -> pancake_coxeter::error::Result<()> {
    let a4 = GroupContext::new(GroupType::A, 4)?;
    let p = pancake_presentation(a4)?;
    print!("{}", p.export(ExportFormat::Gap));
    println!("# Size(G) should print {}", 24);

    let d4 = GroupContext::new(GroupType::D, 4)?;
    let json = pancake_presentation(d4)?.to_json();
    let back = Presentation::from_json(&json)?;
    println!(
        "D4 round trip: {} relators, generators {:?}",
        back.relators().len(),
        back.generators()
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
    );
    Ok(())
}
