//! Border labels of a stack polyomino filling, and the filling rebuilt from
//! them; plus the two evacuation-type transforms on a Ferrers filling.

use moongrowth::transform::{e_transform, ev_t, stack_growth_labels, stack_growth_reconstruct};
use moongrowth::{Filling, MoonPolyomino, RskVariant};

fn main() -> moongrowth::Result<()> {
    let s = MoonPolyomino::stack(&[4, 6, 6, 7, 8, 8, 4, 4])?;
    let crosses = [(5, 7), (3, 6), (1, 5), (2, 4), (4, 3), (0, 2), (7, 1), (6, 0)];
    let f = Filling::from_cells(s.clone(), &crosses.map(|c| (c, 1)))?;
    let labels = stack_growth_labels(&f, RskVariant::Rsk)?;
    print!("{f}labels\n{labels}");
    assert_eq!(stack_growth_reconstruct(&labels, &s, RskVariant::Rsk)?, f);

    let ferrers = Filling::parse("01\n100\n001")?;
    print!("Ferrers filling\n{ferrers}");
    print!("ev_t\n{}", ev_t(&ferrers, RskVariant::Rsk)?);
    print!("e\n{}", e_transform(&ferrers, RskVariant::Rsk)?);
    Ok(())
}
