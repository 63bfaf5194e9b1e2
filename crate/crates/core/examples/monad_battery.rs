// The closure operator "round up to an even element" on a four-element
// chain, its Eilenberg-Moore category and the idempotence battery.

use adjforge::corpus::{closure_monad, Poset};
use adjforge::error::Result;
use adjforge::monadics::{build_em_adjunction, idempotence_battery};

pub fn run() -> Result<()> {
    let chain = Poset::chain(4);
    let c = chain.category();
    let monad = closure_monad(&c, &[0, 2, 2, 3])?;
    let em = build_em_adjunction(&monad)?;
    println!("{} T-modules", em.modules.len());
    assert!(em.adjunction.validate().is_empty());

    let battery = idempotence_battery(&monad)?;
    print!("{battery}");
    assert!(battery.agrees());

    let dual = monad.opposite();
    let co = adjforge::monadics::idempotence_battery_comonad(&dual)?;
    assert_eq!(co.values(), battery.values());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
