//! Exact maximum subgraph density, against the degeneracy sandwich.

use gnp_square::graph::{degeneracy_order, max_subgraph_density, sample_gnp, square, GnpParams, Graph};

fn main() {
    let k4_with_tail = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5)]).unwrap();
    let d = max_subgraph_density(&k4_with_tail).unwrap();
    println!("K4 plus a tail: density {} on {:?}", d.density, d.witness);

    for seed in 0..3 {
        let g = square(&sample_gnp(&GnpParams::new(5_000, 2.0, seed)).unwrap());
        let d = max_subgraph_density(&g).unwrap();
        let k = degeneracy_order(&g).degeneracy;
        println!(
            "seed {seed}: rho = {} ({:.3}) on {} vertices, degeneracy {k}",
            d.density,
            *d.density.numer() as f64 / *d.density.denom() as f64,
            d.witness.len()
        );
    }
}
