// The window of F_2[x]/(x^2)-modules of dimension at most one, as a finite
// category, and the tensor/hom adjunction of the simple module restricted
// to it.

use std::sync::Arc;

use adjforge::adjunctions::idempotent_pair_battery;
use adjforge::algmod::{dual_numbers, LeftModule, DEFAULT_BUDGET};
use adjforge::error::Result;
use adjforge::ffla::{Matrix, PrimeField};
use adjforge::starlab::{build_window_category, window_adjunction, Side, StarContext};

pub fn run() -> Result<()> {
    let f = PrimeField::f2();
    let r = Arc::new(dual_numbers(f));
    let simple = LeftModule::new(&r, vec![Matrix::identity(f, 1), Matrix::zeros(f, 1, 1)])?;
    let ctx = StarContext::auto_end(&simple, 1, DEFAULT_BUDGET)?;

    let w = build_window_category(&ctx, Side::R, 10_000)?;
    let c = &w.category;
    println!("R-window: {} objects, {} morphisms", c.num_objects(), c.num_morphisms());
    for m in c.morphism_ids() {
        let a = w.matrix(m);
        println!(
            "  {}: surjective={} epi={} injective={} mono={}",
            c.morphism_name(m),
            a.is_surjective(),
            c.is_epi(m),
            a.is_injective(),
            c.is_mono(m)
        );
    }

    if let Some(wa) = window_adjunction(&ctx, 10_000)? {
        let report = idempotent_pair_battery(&wa.adjunction)?;
        println!("abstract pair battery on the window: {:?}", report.verdict());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
