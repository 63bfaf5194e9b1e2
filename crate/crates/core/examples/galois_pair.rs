// A Galois connection between a three-element chain and a two-element
// chain, checked as an idempotent pair and as a star pair.

use adjforge::adjunctions::{idempotent_pair_battery, star_pair_check, verify_equivalence};
use adjforge::corpus::{galois_adjunction, galois_connections, Poset};
use adjforge::error::Result;

pub fn run() -> Result<()> {
    let (p, q) = (Poset::chain(3), Poset::chain(2));
    let (cp, cq) = (p.category(), q.category());
    for (f, g) in galois_connections(&p, &q) {
        let adj = galois_adjunction(&cp, &cq, &f, &g)?;
        let pair = idempotent_pair_battery(&adj)?;
        let eq = verify_equivalence(&adj)?;
        let star = star_pair_check(&adj)?;
        println!(
            "f = {f:?}, g = {g:?}: verdict {:?}, equivalence {}, star pair {}",
            pair.verdict(),
            eq.conjunction(),
            star.star
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
