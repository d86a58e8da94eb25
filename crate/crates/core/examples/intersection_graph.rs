//! Intersection graphs, the Helly clique witness, and representing an
//! arbitrary graph on d vertices by subcubes of {0,1}^d.

use subcube::{analyze, represent_graph, CubeFamily, Graph, IntersectionGraph};

fn main() -> subcube::Result<()> {
    let family = CubeFamily::parse_members(&["0**", "*0*", "1*0", "11*", "*11"])?;
    let g = IntersectionGraph::build(&family);
    println!("C5 family: {} vertices, {} edges", g.vertex_count(), g.edge_count());
    let (omega, witness) = g.clique_number();
    let witness = witness.expect("nonempty family");
    println!("clique number {omega}: members {:?} share point {}", witness.vertices, witness.point);
    println!("branch and bound agrees: {}", g.clique_number_by_search().0 == omega);
    println!("independence number {}", g.independence_number());

    let petersen = {
        let mut p = Graph::empty(10);
        for i in 0..5 {
            p.add_edge(i, (i + 1) % 5);
            p.add_edge(5 + i, 5 + (i + 2) % 5);
            p.add_edge(i, i + 5);
        }
        p
    };
    let rep = represent_graph(&petersen)?;
    let back = IntersectionGraph::build(&rep);
    println!("Petersen graph represented in {{0,1}}^{}: same graph = {}", rep.width(), back.graph() == &petersen);

    let report = analyze(&rep, &[2, 3]);
    print!("{}", report.to_table());
    Ok(())
}
