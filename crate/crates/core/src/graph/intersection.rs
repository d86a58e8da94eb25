use serde::Serialize;

use super::Graph;
use crate::cube::{Coord, Point, Subcube};
use crate::error::{Error, Result};
use crate::family::CubeFamily;

/// Widths up to this use the point sweep for the clique number; wider
/// families fall back to generic branch and bound.
pub const HELLY_SWEEP_MAX_WIDTH: usize = 24;

/// A clique together with a point common to all of its members.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueWitness {
    pub vertices: Vec<usize>,
    pub point: Point,
}

impl CliqueWitness {
    /// Checks that the point lies in every listed member of `family`.
    pub fn verify(&self, family: &CubeFamily) -> Result<bool> {
        for &v in &self.vertices {
            if !family.get(v).contains(&self.point)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The intersection graph of a subcube family; vertex `i` is member `i`.
#[derive(Clone, Debug)]
pub struct IntersectionGraph {
    family: CubeFamily,
    graph: Graph,
}

impl IntersectionGraph {
    pub fn build(family: &CubeFamily) -> Self {
        let n = family.len();
        let members = family.members();
        let mut graph = Graph::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                if members[i].meets(&members[j]) {
                    graph.add_edge(i, j);
                }
            }
        }
        IntersectionGraph {
            family: family.clone(),
            graph,
        }
    }

    pub fn family(&self) -> &CubeFamily {
        &self.family
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Clique number with a witness point.
    ///
    /// By the Helly property of subcubes this is the largest number of members
    /// sharing a point. Narrow families are handled by a point sweep; wider
    /// ones by branch and bound on the graph.
    pub fn clique_number(&self) -> (usize, Option<CliqueWitness>) {
        if self.family.width() <= HELLY_SWEEP_MAX_WIDTH {
            self.clique_number_by_points()
        } else {
            self.clique_number_by_search()
        }
    }

    pub fn clique_number_by_points(&self) -> (usize, Option<CliqueWitness>) {
        match self.family.max_point_multiplicity() {
            None => (0, None),
            Some((count, point)) => {
                let vertices = self.members_containing(&point);
                debug_assert_eq!(vertices.len(), count);
                (count, Some(CliqueWitness { vertices, point }))
            }
        }
    }

    pub fn clique_number_by_search(&self) -> (usize, Option<CliqueWitness>) {
        let clique = self.graph.max_clique();
        if clique.is_empty() {
            return (0, None);
        }
        let mut common = self.family.get(clique[0]).clone();
        for &v in &clique[1..] {
            common = common
                .intersection(self.family.get(v))
                .expect("equal widths")
                .expect("pairwise intersecting subcubes share a point");
        }
        let mut point = Point::zero(self.family.width());
        for i in common.fixed_coords() {
            point.set(i, common.coord(i) == Coord::One);
        }
        (clique.len(), Some(CliqueWitness { vertices: clique, point }))
    }

    fn members_containing(&self, point: &Point) -> Vec<usize> {
        self.family
            .members()
            .iter()
            .enumerate()
            .filter(|(_, m)| m.contains(point).unwrap_or(false))
            .map(|(i, _)| i)
            .collect()
    }

    /// Largest pairwise disjoint subfamily.
    pub fn independence_number(&self) -> usize {
        self.graph.independence_number()
    }

    pub fn count_cliques(&self, size: usize) -> u64 {
        self.graph.count_cliques(size)
    }
}

/// Represents a graph on `d` vertices as `d` subcubes of `{0,1}^d`: member
/// `i` fixes coordinate `i` to 1, fixes every non-neighbour coordinate to 0
/// and leaves neighbour coordinates free.
pub fn represent_graph(g: &Graph) -> Result<CubeFamily> {
    let d = g.vertex_count();
    if d == 0 {
        return Err(Error::InvalidArgument("graph must have at least one vertex".into()));
    }
    let mut family = CubeFamily::new(d);
    for i in 0..d {
        let mut c = Subcube::full(d)?;
        for j in 0..d {
            if j == i {
                c.set(j, Coord::One);
            } else if !g.has_edge(i, j) {
                c.set(j, Coord::Zero);
            }
        }
        family.push(c)?;
    }
    Ok(family)
}

/// Grows a `K_{r+1}`-free family to `target` members without losing edges.
///
/// Each step splits the lowest-index non-singleton member on its lowest free
/// coordinate (the two halves take its place), or, when every member is a
/// singleton, appends a copy of the lowest-index singleton occurring fewer
/// than `r` times, or failing that the first point not yet covered.
pub fn grow_family(family: &CubeFamily, target: usize, r: usize) -> Result<CubeFamily> {
    let d = family.width();
    if d == 0 {
        return Err(Error::InvalidArgument("family has no width".into()));
    }
    if r == 0 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    if d < 64 && target as u128 > (r as u128) << d {
        return Err(Error::Infeasible(format!(
            "{target} subcubes of {{0,1}}^{d} always contain a point covered {} times",
            r + 1
        )));
    }
    if target < family.len() {
        return Err(Error::InvalidArgument(format!(
            "target {target} is below the current size {}",
            family.len()
        )));
    }
    if let Some((omega, _)) = family.max_point_multiplicity() {
        if omega > r {
            return Err(Error::InvalidArgument(format!("family contains K_{}", omega)));
        }
    }
    let mut out = family.clone();
    while out.len() < target {
        let splittable = out.members().iter().position(|m| !m.is_singleton());
        if let Some(i) = splittable {
            let coord = out.get(i).free_coords().next().expect("non-singleton");
            let (zero, one) = out.get(i).split(coord)?;
            out.replace(i, zero);
            out.insert(i + 1, one);
            continue;
        }
        let members = out.members();
        let repeated = members
            .iter()
            .find(|m| members.iter().filter(|o| o == m).count() < r)
            .cloned();
        let next = match repeated {
            Some(c) => c,
            None => {
                let mut point = Point::zero(d);
                loop {
                    let cube = Subcube::singleton(&point)?;
                    if !members.contains(&cube) {
                        break cube;
                    }
                    increment(&mut point);
                }
            }
        };
        out.push(next)?;
    }
    Ok(out)
}

/// Next point in lexicographic order of the text form.
fn increment(p: &mut Point) {
    for i in (0..p.width()).rev() {
        if p.get(i) {
            p.set(i, false);
        } else {
            p.set(i, true);
            return;
        }
    }
}
