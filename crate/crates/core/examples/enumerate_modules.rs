// All modules of small dimension over the upper-triangular 2x2 matrices
// over F_2, one per isomorphism class, with their endomorphism algebras.

use std::sync::Arc;

use adjforge::algmod::{endomorphism_algebra, enumerate_modules, upper_triangular, DEFAULT_BUDGET};
use adjforge::error::Result;
use adjforge::ffla::PrimeField;

pub fn run() -> Result<()> {
    let t2 = Arc::new(upper_triangular(PrimeField::f2(), 2));
    let window = enumerate_modules(&t2, 3, DEFAULT_BUDGET)?;
    assert!(window.complete);
    for (i, m) in window.modules.iter().enumerate() {
        let (end, _) = endomorphism_algebra(m)?;
        println!("#{i}: dim {}, End has dim {}", m.dim(), end.dim());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
