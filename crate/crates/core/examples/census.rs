//! Counting 0-1 fillings by longest ne-chain and row sums, for two column
//! orders of the same moon polyomino.

use std::collections::BTreeMap;

use moongrowth::fillings::{for_each_filling, CountQuery};
use moongrowth::{ChainKind, MoonPolyomino};

fn census(m: &MoonPolyomino) -> moongrowth::Result<BTreeMap<(u32, Vec<u32>), u64>> {
    let mut out = BTreeMap::new();
    for_each_filling(m, &CountQuery::zero_one(), &mut |f| {
        let l = f.longest_chain(ChainKind::ne).expect("0-1 filling");
        *out.entry((l, f.sums().0)).or_insert(0) += 1;
    })?;
    Ok(out)
}

fn main() -> moongrowth::Result<()> {
    let a = MoonPolyomino::parse(".o.\nooo\nooo")?;
    let b = MoonPolyomino::parse("o..\nooo\nooo")?;
    let (ca, cb) = (census(&a)?, census(&b)?);
    for ((l, rows), n) in &ca {
        println!("l={l} rows={rows:?}: {n}");
    }
    println!("same census for both column orders: {}", ca == cb);
    Ok(())
}
