//! graph6 and DIMACS output of intersection graphs, and the family file
//! format.

use subcube::constructions::full_codim_family;
use subcube::export::{from_graph6, to_dimacs, to_graph6};
use subcube::{CubeFamily, IntersectionGraph};

fn main() -> subcube::Result<()> {
    let family = full_codim_family(2, 2)?;
    let text = family.to_text_with_comments(&["full-codim d=2 r=2".into()]);
    print!("{text}");
    let reread = CubeFamily::from_text(&text)?;
    let g = IntersectionGraph::build(&reread);
    let g6 = to_graph6(g.graph());
    println!("graph6: {g6}");
    println!("round trip equal: {}", &from_graph6(&g6)? == g.graph());
    print!("{}", to_dimacs(g.graph()));
    Ok(())
}
