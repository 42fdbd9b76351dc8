//! Jeu de taquin, promotion and evacuation on a chain of partitions.

use moongrowth::tableaux::{chain_to_tableau, evacuation, jdt_chain, promotion, promotion_inverse};
use moongrowth::{ChainMode, PartitionChain};

fn main() -> moongrowth::Result<()> {
    let c = PartitionChain::parse("- 1 2 21 211 211 311 321 3211 3311", ChainMode::Cell)?;
    println!("chain      {c}");
    println!("jdt        {}", jdt_chain(&c)?);
    let pr = promotion(&c)?;
    println!("promotion  {pr}");
    assert_eq!(promotion_inverse(&pr)?, c);

    let standard = PartitionChain::parse("- 1 2 21 31 32", ChainMode::Cell)?;
    let ev = evacuation(&standard)?;
    print!("tableau\n{}evacuated\n{}", chain_to_tableau(&standard).to_lines(), chain_to_tableau(&ev).to_lines());
    Ok(())
}
