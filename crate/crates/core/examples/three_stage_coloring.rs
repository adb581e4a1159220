//! Color the square in three stages and compare list sizes with the degree.

use gnp_square::coloring::{three_stage_color, validate, ListPolicy, ListSource};
use gnp_square::graph::{sample_gnp, square, GnpParams};
use gnp_square::params::{compute_params, ParamOverrides};

fn main() {
    let g1 = sample_gnp(&GnpParams::new(100_000, 2.0, 3)).unwrap();
    let g2 = square(&g1);
    let params = compute_params(&g1, 2.0, &ParamOverrides::default()).unwrap();

    let (coloring, metrics) = three_stage_color(&g1, &g2, &params, &ListPolicy::adaptive()).unwrap();
    assert!(validate(&coloring, &g2, None).unwrap().is_proper());
    println!("Δ(G1) = {}, Δ(G2) = {}", g1.max_degree(), g2.max_degree());
    for s in &metrics.stages {
        println!(
            "{:?}: {} vertices, at most {} colored neighbors, {} colors",
            s.stage, s.vertices, s.max_colored_neighbors, s.colors_used
        );
    }
    println!("colors used = {}, q_min = {}", metrics.colors_used, metrics.q_min);

    // Random lists of the smallest size that the order above cannot exhaust.
    let policy = ListPolicy::explicit(
        metrics.q_min,
        ListSource::RandomLists {
            seed: Some(11),
            palette: None,
        },
    );
    let (_, m) = three_stage_color(&g1, &g2, &params, &policy).unwrap();
    println!("random {}-lists: colored with {} colors", metrics.q_min, m.colors_used);
}
