// Exact linear algebra over F_5: reduced row echelon form, kernel, image
// and inverse.

use adjforge::error::Result;
use adjforge::ffla::{Matrix, PrimeField};

pub fn run() -> Result<()> {
    let f = PrimeField::new(5)?;
    let a = Matrix::from_rows(f, 3, 3, &[vec![1, 2, 0], vec![0, 1, 3], vec![4, 0, 1]])?;
    let r = a.rref();
    println!("rank {} pivots {:?}", r.rank, r.pivots);
    println!("kernel dimension {}", a.kernel_basis().cols());

    let singular = Matrix::from_rows(f, 2, 3, &[vec![1, 2, 3], vec![2, 4, 6]])?;
    let k = singular.kernel_basis();
    assert!((&singular * &k).is_zero());
    println!("singular: rank {}, kernel {:?}", singular.rank(), k.to_rows());

    if let Some(inv) = a.inverse() {
        assert!((&a * &inv).is_identity());
        println!("inverse {:?}", inv.to_rows());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
