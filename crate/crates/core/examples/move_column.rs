//! Moving columns of a moon polyomino filling and normalising it to the
//! Ferrers shape of its content.

use moongrowth::transform::{moon_move, moon_move_inverse, movable_columns, to_ferrers};
use moongrowth::{ChainKind, Filling, RskVariant};

fn main() -> moongrowth::Result<()> {
    let f = Filling::parse("..1.\n.010\n1001\n0100")?;
    print!("filling\n{f}");
    for c in movable_columns(f.poly()) {
        let g = moon_move(&f, c, RskVariant::DualRskPrime)?;
        let end = f.poly().rectangle_of_column(c).expect("movable").cols.1;
        print!("column {c} moved\n{g}");
        assert_eq!(moon_move_inverse(&g, end, RskVariant::DualRskPrime)?, f);
        assert_eq!(g.longest_chain(ChainKind::ne)?, f.longest_chain(ChainKind::ne)?);
    }
    let h = to_ferrers(&f, ChainKind::ne)?;
    print!("Ferrers form\n{h}");
    println!("longest ne-chain {} -> {}", f.longest_chain(ChainKind::ne)?, h.longest_chain(ChainKind::ne)?);
    Ok(())
}
