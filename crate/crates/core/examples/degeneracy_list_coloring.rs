//! Any graph is list-colorable from lists one longer than its degeneracy.

use gnp_square::coloring::{degeneracy_color, validate, ListAssignment};
use gnp_square::graph::{degeneracy_order, sample_gnp, square, GnpParams};

fn main() {
    let g = square(&sample_gnp(&GnpParams::new(2_000, 1.5, 5)).unwrap());
    let order = degeneracy_order(&g);
    let k = order.degeneracy + 1;
    println!("square: Δ = {}, degeneracy = {}", g.max_degree(), order.degeneracy);

    for seed in 0..5 {
        let lists = ListAssignment::random(g.num_vertices(), k, 3 * k, seed);
        let coloring = degeneracy_color(&g, &lists).unwrap();
        let report = validate(&coloring, &g, Some(&lists)).unwrap();
        println!("seed {seed}: {k}-lists, proper = {}", report.is_proper());
    }
}
