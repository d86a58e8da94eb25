//! Basic operations on subcubes of {0,1}^d.

use subcube::{parse_subcube_list, Point, Subcube};

fn main() -> subcube::Result<()> {
    let a: Subcube = "0*1*".parse()?;
    let b: Subcube = "**10".parse()?;
    println!("a = {a}: dimension {}, codimension {}", a.dimension(), a.codimension());
    println!("b = {b}: fixed coordinates {:?}", b.fixed_coords().collect::<Vec<_>>());
    println!("a meets b: {}", a.intersects(&b)?);
    if let Some(c) = a.intersection(&b)? {
        println!("a & b = {c}, points {:?}", c.enumerate_points()?.iter().map(Point::to_string).collect::<Vec<_>>());
    }
    let far: Subcube = "1*0*".parse()?;
    println!("hamming distance a..{far} = {}", a.hamming_distance(&far)?);

    // Intersection with a base is preserved by projecting to its free coordinates.
    let base: Subcube = "0***".parse()?;
    let (x, y): (Subcube, Subcube) = ("**1*".parse()?, "0**0".parse()?);
    println!(
        "projections onto {base}: {} and {}, meet: {}",
        x.project(&base)?,
        y.project(&base)?,
        x.project(&base)?.intersects(&y.project(&base)?)?
    );

    let (lo, hi) = a.split(1)?;
    println!("split {a} on coordinate 1: {lo} | {hi}");
    println!("parsed list: {:?}", parse_subcube_list("(**0),(*11),(0*1)")?.iter().map(|c| c.to_string()).collect::<Vec<_>>());
    Ok(())
}
