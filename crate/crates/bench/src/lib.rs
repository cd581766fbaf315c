//! Fixtures shared by the criterion benchmarks in `benches/`.

use qwalk_core::graph::{complete, cycle};
use qwalk_core::population::{prism, seeded_sample};
use qwalk_core::Graph;

/// Named graphs of increasing order for the exact-arithmetic benchmarks.
pub fn ladder() -> Vec<(String, Graph)> {
    let mut out = vec![
        ("K4".to_string(), complete(4)),
        ("prism".to_string(), prism()),
        ("C8".to_string(), cycle(8)),
        (
            "petersen".to_string(),
            Graph::from_graph6("IheA@GUAo").expect("valid graph6"),
        ),
    ];
    for (i, g) in seeded_sample(42, 2, 12, 12).into_iter().enumerate() {
        out.push((format!("random12-{i}"), g));
    }
    out
}
