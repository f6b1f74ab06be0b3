#![no_main]

use libfuzzer_sys::fuzz_target;
use powergraph::cayley::parse_cayley_csv;
use powergraph::graph::{enhanced_power_graph, power_graph};
use powergraph::reconstruct::reconstruct_enhanced;

// Any accepted table must be a genuine group with the identity first, and
// for small orders the reconstruction must match the ground-truth graph.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(group) = parse_cayley_csv(text) {
        assert_eq!(group.identity(), 0);
        let n = group.order();
        for a in 0..n {
            assert_eq!(n % group.element_order(a), 0, "order must divide |G|");
        }
        if n <= 16 {
            let (reconstructed, _) = reconstruct_enhanced(&power_graph(&group));
            assert_eq!(reconstructed, enhanced_power_graph(&group));
        }
    }
});
