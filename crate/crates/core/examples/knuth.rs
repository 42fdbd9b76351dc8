//! Knuth moves on permutation fillings and the effect on the top border.

use moongrowth::growth::rsk_correspond;
use moongrowth::knuth::{apply_knuth_move, differing_indices, find_knuth_moves, knuth_equivalent};
use moongrowth::{Filling, RskVariant};

fn main() -> moongrowth::Result<()> {
    let f = Filling::from_permutation(&[5, 3, 4, 1, 2])?;
    let (_, q) = rsk_correspond(&f, RskVariant::Rsk)?;
    for m in find_knuth_moves(&f)? {
        let g = apply_knuth_move(&f, m)?;
        let (_, qg) = rsk_correspond(&g, RskVariant::Rsk)?;
        println!("{m}: equivalent {}, top border differs at {:?}", knuth_equivalent(&f, &g, RskVariant::Rsk)?, differing_indices(&q, &qg));
    }
    Ok(())
}
