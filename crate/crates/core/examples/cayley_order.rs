//! Breadth-first closure of the generators, compared with the expected order.

use std::time::Instant;

use pancake_coxeter::group::{GroupContext, GroupType};
use pancake_coxeter::presentation::ExpectedOrder;
use pancake_coxeter::verify::{bfs_order, DEFAULT_BFS_CAP};

fn main() -> pancake_coxeter::error::Result<()> {
    for (t, n) in [(GroupType::A, 7), (GroupType::B, 5), (GroupType::D, 6)] {
        let ctx = GroupContext::new(t, n)?;
        let start = Instant::now();
        let closure = bfs_order(&ctx.pancake_generators(), ctx, DEFAULT_BFS_CAP)?;
        let diameter = closure.sphere_sizes.len() - 1;
        println!(
            "{t}{n}: {} elements (expected {}), diameter {diameter}, {:?}",
            closure.order(),
            ExpectedOrder::of(ctx).value,
            start.elapsed()
        );
    }

    let a6 = GroupContext::new(GroupType::A, 6)?;
    match bfs_order(&a6.pancake_generators(), a6, 100) {
        Ok(_) => unreachable!(),
        Err(e) => println!("capped run: {e}"),
    }
    Ok(())
}
