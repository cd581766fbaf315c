//! Graph collections used by the identity sweeps: every labeled graph of a
//! given order, seeded random samples, and a catalog of small regular graphs.
//!
//! Random graphs come from `ChaCha8Rng::seed_from_u64(seed)`. For each graph
//! the order is drawn uniformly from the requested range, then every vertex
//! pair is an edge independently with probability 1/2 (pairs visited in
//! lexicographic order).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{complete, complete_multipartite, cycle, Graph};

/// All `2^(n(n-1)/2)` labeled graphs on `n` vertices. Intended for `n <= 6`.
pub fn all_labeled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    assert!(pairs.len() < 32, "too many labeled graphs on {n} vertices");
    (0u32..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::new(n, &edges).expect("distinct valid pairs")
        })
        .collect()
}

/// All labeled graphs with `1 <= n <= max_n` vertices.
pub fn all_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(all_labeled_graphs).collect()
}

/// `count` random graphs with order in `min_n..=max_n`.
pub fn seeded_sample(seed: u64, count: usize, min_n: usize, max_n: usize) -> Vec<Graph> {
    assert!(min_n <= max_n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(min_n..=max_n);
            let mut edges = Vec::new();
            for v in 0..n {
                for u in 0..v {
                    if rng.random_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(n, &edges).expect("distinct valid pairs")
        })
        .collect()
}

/// Exhaustive graphs on at most `exhaustive_n` vertices followed by a seeded sample.
pub fn sweep_population(
    exhaustive_n: usize,
    seed: u64,
    samples: usize,
    min_n: usize,
    max_n: usize,
) -> Vec<Graph> {
    let mut graphs = all_graphs_up_to(exhaustive_n);
    if samples > 0 && max_n >= min_n {
        graphs.extend(seeded_sample(seed, samples, min_n, max_n));
    }
    graphs
}

/// Triangular prism `K3 □ K2`: two triangles joined by a perfect matching.
pub fn prism() -> Graph {
    let edges = [
        (0, 1),
        (1, 2),
        (0, 2),
        (3, 4),
        (4, 5),
        (3, 5),
        (0, 3),
        (1, 4),
        (2, 5),
    ];
    Graph::new(6, &edges).expect("valid prism")
}

/// Named regular graphs: `K_n` for `n <= 6`, `C_n` for `3 <= n <= 8`,
/// `K_{m,m}` for `m <= 3`, edgeless graphs, `2K_2`, `2K_3`, the prism and
/// the Petersen graph.
pub fn regular_catalog() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.push((format!("K{n}"), complete(n)));
    }
    for n in 3..=8 {
        out.push((format!("C{n}"), cycle(n)));
    }
    for m in 1..=3 {
        out.push((
            format!("K{m},{m}"),
            complete_multipartite(&[m, m]).expect("positive parts"),
        ));
    }
    for n in 2..=4 {
        out.push((format!("{n}K1"), Graph::empty(n)));
    }
    out.push(("2K2".into(), complete(2).disjoint_union(&complete(2))));
    out.push(("2K3".into(), complete(3).disjoint_union(&complete(3))));
    out.push(("prism".into(), prism()));
    out.push((
        "petersen".into(),
        Graph::from_graph6("IheA@GUAo").expect("valid graph6"),
    ));
    out
}
