//! Border chains and tableaux of a permutation and of a weighted filling
//! under each RSK variant that accepts it.

use moongrowth::growth::{rsk_correspond, rsk_invert};
use moongrowth::tableaux::chain_to_tableau;
use moongrowth::{Filling, RskVariant};

fn main() -> moongrowth::Result<()> {
    let perm = Filling::from_permutation(&[6, 1, 5, 3, 7, 8, 4, 2])?;
    let (p, q) = rsk_correspond(&perm, RskVariant::Rsk)?;
    println!("P = {p}\nQ = {q}");
    print!("P tableau\n{}Q tableau\n{}", chain_to_tableau(&p).to_lines(), chain_to_tableau(&q).to_lines());

    let weighted = Filling::parse("11\n01\n00\n30")?;
    for v in [RskVariant::Rsk, RskVariant::DualRskPrime] {
        let (p, q) = rsk_correspond(&weighted, v)?;
        println!("{v}: P = {p}, Q = {q}");
        assert_eq!(rsk_invert(&p, &q, v)?, weighted);
    }
    Ok(())
}
