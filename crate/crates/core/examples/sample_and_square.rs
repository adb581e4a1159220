//! Sample a sparse binomial random graph and square it.
//!
//! cargo run --example sample_and_square -- 100000 2 7

use gnp_square::graph::{sample_gnp, square, GnpParams};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n = args.first().and_then(|s| s.parse().ok()).unwrap_or(100_000);
    let c = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(2.0);
    let seed = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(7);

    let g1 = sample_gnp(&GnpParams::new(n, c, seed)).expect("valid parameters");
    let g2 = square(&g1);
    println!("G1: n = {n}, m = {}, max degree = {}", g1.num_edges(), g1.max_degree());
    println!("G2: m = {}, max degree = {}", g2.num_edges(), g2.max_degree());
    println!("mean degree of G1 = {:.3} (c = {c})", 2.0 * g1.num_edges() as f64 / n as f64);
}
