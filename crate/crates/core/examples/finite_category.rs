// A three-element chain as a thin category, with its morphism classes and
// the opposite category.

use adjforge::error::Result;
use adjforge::fincat::FinCategory;

pub fn run() -> Result<()> {
    let chain = FinCategory::from_preorder(3, |a, b| a <= b)?;
    assert!(chain.validate().is_empty());
    println!("{} objects, {} morphisms", chain.num_objects(), chain.num_morphisms());
    for m in chain.morphism_ids() {
        let flags = chain.classify(m);
        println!(
            "  {:>6}: {} -> {}  mono={} epi={} iso={}",
            chain.morphism_name(m),
            chain.object_name(chain.src(m)),
            chain.object_name(chain.dst(m)),
            flags.mono,
            flags.epi,
            flags.iso
        );
    }
    let op = chain.opposite();
    assert!(op.validate().is_empty());
    println!("opposite: {} morphisms", op.num_morphisms());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
