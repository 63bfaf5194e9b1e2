// Star verdicts for two bimodules over the upper-triangular algebra: the
// regular module, and the two-dimensional projective-injective module,
// which is refuted with certificates that are then re-checked.

use std::sync::Arc;

use adjforge::algmod::{enumerate_modules, upper_triangular, LeftModule, DEFAULT_BUDGET};
use adjforge::error::Result;
use adjforge::ffla::PrimeField;
use adjforge::starlab::{revalidate_report, star_report, star_verdict, StarContext};

pub fn run() -> Result<()> {
    let t2 = Arc::new(upper_triangular(PrimeField::f2(), 2));

    let regular = StarContext::auto_end(&LeftModule::regular(&t2), 2, DEFAULT_BUDGET)?;
    let v = star_verdict(&regular)?;
    println!("P = R: {}", v.status);

    let window = enumerate_modules(&t2, 2, DEFAULT_BUDGET)?;
    for p in window.modules.iter().filter(|m| m.dim() > 0) {
        let ctx = StarContext::auto_end(p, 2, DEFAULT_BUDGET)?;
        let v = star_verdict(&ctx)?;
        println!("P of dim {}: {} ({} certificates)", p.dim(), v.status, v.certificates.len());
        if !v.certificates.is_empty() {
            let report = star_report(&ctx, &v)?;
            let ok = revalidate_report(&report)?;
            println!("  revalidated: {ok:?}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
