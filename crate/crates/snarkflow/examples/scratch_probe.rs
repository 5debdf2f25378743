use snarkflow::connectivity::cyclic_edge_connectivity;
use snarkflow::named;
use snarkflow::factors::enumerate_perfect_matchings;
use snarkflow::five_flow::PipelineState;
use snarkflow::valuation::{check_balanced, BalanceVerdict};

fn main() {
    for name in ["petersen", "flower_snark:5", "blanusa_1", "blanusa_2", "moebius_ladder:4", "prism:5"] {
        let g = named::by_name(name).unwrap();
        let cc = cyclic_edge_connectivity(&g);
        println!("{:18} cc={}", name, cc.value);
    }
    // identify the first violated pair on moebius_ladder:4 for the test
    let g = named::moebius_ladder(4).unwrap();
    let list = enumerate_perfect_matchings(&g, 1_000_000).matchings;
    for i in 0..list.len() {
        for j in i + 1..list.len() {
            if list[i].intersection_size(&list[j]) != 2 { continue; }
            let state = PipelineState::from_shared_pair(&g, &list[i], &list[j], 0).unwrap();
            let verdict = check_balanced(g.graph(), state.valuation(), 24).unwrap();
            let tag = match &verdict { BalanceVerdict::Balanced => "balanced".to_string(),
                BalanceVerdict::Violated(w) => format!("violated set={:?} imb={} bd={}", w.set.iter().collect::<Vec<_>>(), w.imbalance, w.boundary_size) };
            println!("ml4 pair ({},{}): shared={:?} specials={:?} {}", i, j,
                state.shared_edges(), state.special_vertices(), tag);
        }
    }
}
