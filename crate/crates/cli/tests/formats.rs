use optimal1p::{make_xw, random_optimal, DynamicGraph};
use optimal1p_io::formats::{graph6, rotation};
use optimal1p_io::Format;
use proptest::prelude::*;

fn same(a: &DynamicGraph, b: &DynamicGraph) -> bool {
    a.n() == b.n() && a.sorted_edges() == b.sorted_edges()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_graphs_round_trip(n in (8usize..300).prop_filter("n = 9", |&n| n != 9), seed in any::<u64>()) {
        let gen = random_optimal(n, seed).unwrap();
        for f in [Format::Edgelist, Format::Graph6] {
            let text = f.write(&gen.graph);
            let back = f.parse(&text).unwrap();
            prop_assert!(same(&back, &gen.graph));
            prop_assert_eq!(f.write(&back), text);
        }
        let emb = gen.embedding();
        let back = rotation::parse(&rotation::write(&emb)).unwrap();
        prop_assert_eq!(back.sorted_edges(), emb.sorted_edges());
    }

    #[test]
    fn arbitrary_graphs_round_trip(n in 0usize..80, edges in prop::collection::vec((0u32..80, 0u32..80), 0..300)) {
        let mut g = DynamicGraph::with_vertices(n);
        for (a, b) in edges {
            let (a, b) = (a % n.max(1) as u32, b % n.max(1) as u32);
            if a != b && !g.has_edge(a, b) {
                g.add_edge(a, b).unwrap();
            }
        }
        for f in [Format::Edgelist, Format::Graph6] {
            prop_assert!(same(&f.parse(&f.write(&g)).unwrap(), &g));
        }
    }
}

#[test]
fn wheels_round_trip_through_graph6() {
    for k in 3..=200 {
        let (g, _) = make_xw(k).unwrap();
        let s = graph6::write(&g);
        assert!(same(&graph6::parse(&s).unwrap(), &g));
    }
}
