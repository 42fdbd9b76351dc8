//! Promotion on rectangular fillings, and why it cannot be done on the
//! standardisation instead.

use moongrowth::growth::standardize;
use moongrowth::transform::{jbar, jbar_inverse};
use moongrowth::{Filling, RskVariant};

fn main() -> moongrowth::Result<()> {
    let f = Filling::parse("010\n101\n210")?;
    let g = jbar(&f, RskVariant::Rsk)?;
    print!("filling\n{f}promoted\n{g}");
    assert_eq!(jbar_inverse(&g, RskVariant::Rsk)?, f);

    let mut s = standardize(&f, RskVariant::Rsk)?;
    for _ in 0..f.sums().1[0] {
        s = jbar(&s, RskVariant::Rsk)?;
    }
    let direct = standardize(&g, RskVariant::Rsk)?;
    println!("promoting the standardisation agrees: {}", s == direct);
    Ok(())
}
