use proptest::prelude::*;
use subcube::constructions::{mixed_partite_edges, mixed_partite_family, partite_family, turan_number};
use subcube::groundset::{mols_family, pair_packing_family, split_member};
use subcube::optimizer::optimal_partite_profile;
use subcube::random::{sample_family, RandomModelParams};
use subcube::{binomial, choose2, grow_family, represent_graph, CubeFamily, Graph, IntersectionGraph, Point, Subcube};

fn cube_text(d: usize) -> impl Strategy<Value = String> {
    prop::collection::vec(prop::sample::select(vec!['0', '1', '*']), d).prop_map(|v| v.into_iter().collect())
}

fn cube(d: usize) -> impl Strategy<Value = Subcube> {
    cube_text(d).prop_map(|s| s.parse().unwrap())
}

fn family(max_d: usize, max_n: usize) -> impl Strategy<Value = CubeFamily> {
    (1..=max_d).prop_flat_map(move |d| {
        prop::collection::vec(cube(d), 0..=max_n).prop_map(move |m| CubeFamily::from_members(d, m).unwrap())
    })
}

/// Membership by characters, independent of the bit encoding.
fn contains_by_text(c: &Subcube, p: &Point) -> bool {
    c.to_string().chars().enumerate().all(|(i, ch)| match ch {
        '*' => true,
        '1' => p.get(i),
        _ => !p.get(i),
    })
}

fn meets_by_text(a: &Subcube, b: &Subcube) -> bool {
    a.to_string().chars().zip(b.to_string().chars()).all(|(x, y)| x == '*' || y == '*' || x == y)
}

/// `c` with every coordinate that conflicts with `base` set to base's value.
fn meeting(c: &Subcube, base: &Subcube) -> Subcube {
    let mut out = c.clone();
    for i in base.fixed_coords() {
        if c.coord(i) != subcube::Coord::Free {
            out.set(i, base.coord(i));
        }
    }
    out
}

proptest! {
    #[test]
    fn text_round_trip(s in (1usize..80).prop_flat_map(cube_text)) {
        let c: Subcube = s.parse().unwrap();
        prop_assert_eq!(c.to_string(), s);
    }

    #[test]
    fn intersection_rule((a, b) in (1usize..70).prop_flat_map(|d| (cube(d), cube(d)))) {
        prop_assert_eq!(a.intersects(&b).unwrap(), meets_by_text(&a, &b));
        prop_assert_eq!(a.intersects(&b).unwrap(), b.intersects(&a).unwrap());
        prop_assert_eq!(a.hamming_distance(&b).unwrap() == 0, a.intersects(&b).unwrap());
        match a.intersection(&b).unwrap() {
            Some(c) => {
                prop_assert!(c.is_subcube_of(&a).unwrap() && c.is_subcube_of(&b).unwrap());
                prop_assert_eq!(c.dimension() + a.codimension() + b.codimension(),
                    a.width() + (0..a.width()).filter(|&i| a.coord(i) != subcube::Coord::Free && b.coord(i) != subcube::Coord::Free).count());
            }
            None => prop_assert!(!meets_by_text(&a, &b)),
        }
    }

    #[test]
    fn points_and_containment((c, bits) in (1usize..12).prop_flat_map(|d| (cube(d), prop::collection::vec(any::<bool>(), d)))) {
        let p = Point::from_bits(&bits);
        prop_assert_eq!(c.contains(&p).unwrap(), contains_by_text(&c, &p));
        let pts = c.enumerate_points().unwrap();
        prop_assert_eq!(pts.len(), 1usize << c.dimension());
        prop_assert!(pts.iter().all(|q| contains_by_text(&c, q)));
        prop_assert!(pts.windows(2).all(|w| w[0].to_string() < w[1].to_string()));
    }

    #[test]
    fn projection_preserves_intersection((x, y, base) in (2usize..40).prop_flat_map(|d| (cube(d), cube(d), cube(d)))) {
        prop_assume!(base.dimension() > 0);
        let (x, y) = (meeting(&x, &base), meeting(&y, &base));
        let px = x.project(&base).unwrap();
        let py = y.project(&base).unwrap();
        prop_assert_eq!(px.width(), base.dimension());
        prop_assert_eq!(x.intersects(&y).unwrap(), px.intersects(&py).unwrap());
    }

    #[test]
    fn split_halves_partition(c in (1usize..20).prop_flat_map(cube)) {
        prop_assume!(c.dimension() > 0);
        let i = c.free_coords().next().unwrap();
        let (a, b) = c.split(i).unwrap();
        prop_assert!(!a.intersects(&b).unwrap());
        prop_assert!(a.is_subcube_of(&c).unwrap() && b.is_subcube_of(&c).unwrap());
        prop_assert_eq!(a.dimension() + 1, c.dimension());
    }

    #[test]
    fn family_file_round_trip(f in family(10, 12)) {
        prop_assume!(!f.is_empty());
        prop_assert_eq!(CubeFamily::from_text(&f.to_text()).unwrap(), f);
    }

    #[test]
    fn helly_clique_number_agrees(f in family(10, 40)) {
        let g = IntersectionGraph::build(&f);
        let (omega, witness) = g.clique_number_by_points();
        prop_assert_eq!(omega, g.clique_number_by_search().0);
        prop_assert_eq!(omega, g.graph().clique_number());
        if let Some(w) = witness {
            prop_assert!(w.verify(&f).unwrap());
            prop_assert!(g.graph().is_clique(&w.vertices));
        }
    }

    #[test]
    fn turan_and_absolute_bounds(f in family(8, 30)) {
        let g = IntersectionGraph::build(&f);
        let r = g.clique_number().0;
        prop_assume!(r >= 1);
        let n = f.len() as u64;
        let e = g.edge_count() as u128;
        prop_assert!(e <= turan_number(n, r as u64));
        prop_assert!(e <= choose2(r as u64) << f.width());
    }

    #[test]
    fn clique_count_bound(f in family(6, 24)) {
        let g = IntersectionGraph::build(&f);
        let r = g.clique_number().0 as u64;
        for k in 1..=r {
            prop_assert!(g.count_cliques(k as usize + 1) as u128 <= binomial(r, k + 1) << f.width());
        }
    }

    #[test]
    fn growth_never_loses_edges(f in family(5, 10), extra in 0usize..12) {
        let g = IntersectionGraph::build(&f);
        let r = g.clique_number().0.max(1);
        let target = (f.len() + extra).min(r << f.width());
        prop_assume!(target >= f.len());
        let grown = grow_family(&f, target, r).unwrap();
        let h = IntersectionGraph::build(&grown);
        prop_assert_eq!(grown.len(), target);
        prop_assert!(h.edge_count() >= g.edge_count());
        prop_assert!(h.clique_number().0 <= r);
    }

    #[test]
    fn mixed_edge_formula(d in 1usize..=10, sets in prop::collection::vec(prop::collection::btree_set(0usize..10, 0..5), 1..5)) {
        let sets: Vec<Vec<usize>> = sets.into_iter().map(|s| s.into_iter().filter(|&c| c < d).collect()).collect();
        let f = mixed_partite_family(d, &sets).unwrap();
        prop_assert_eq!(IntersectionGraph::build(&f).edge_count() as u128, mixed_partite_edges(&sets));
    }

    #[test]
    fn optimizer_beats_partite(n in 1u64..60, d in 1usize..=8, r in 2usize..=4) {
        if let Ok(p) = partite_family(n, d, r as u64) {
            let s = optimal_partite_profile(n, d, r).unwrap();
            prop_assert!(s.edges >= IntersectionGraph::build(&p).edge_count() as u128);
        }
    }

    #[test]
    fn splitting_sets_never_loses_edges(seed in any::<u64>(), which in 0usize..12, q in prop::sample::select(vec![2usize, 3, 5])) {
        let f = if seed % 2 == 0 { mols_family(q, 3).unwrap() } else { pair_packing_family(7 + (seed % 5) as usize, 3).unwrap() };
        let index = which % f.len();
        let member = &f.members[index];
        prop_assume!(member.len() >= 2);
        let part: Vec<usize> = member.iter().copied().filter(|x| (seed >> (x % 60)) & 1 == 1).collect();
        prop_assume!(!part.is_empty() && part.len() < member.len());
        let g = split_member(&f, index, &part).unwrap();
        prop_assert!(g.intersection_graph().edge_count() >= f.intersection_graph().edge_count());
    }

    #[test]
    fn random_families_are_canonical(seed in any::<u64>(), d in 1usize..=70, p in 0.0f64..=0.5) {
        let f = sample_family(&RandomModelParams::new(5, d, p, seed)).unwrap();
        for m in f.members() {
            let reparsed: Subcube = m.to_string().parse().unwrap();
            prop_assert_eq!(&reparsed, m);
        }
    }
}

#[test]
fn every_five_vertex_graph_is_represented() {
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
        let g = Graph::from_edges(5, &edges).unwrap();
        let f = represent_graph(&g).unwrap();
        assert_eq!(f.width(), 5);
        assert_eq!(IntersectionGraph::build(&f).graph(), &g, "mask {mask:#b}");
    }
}
