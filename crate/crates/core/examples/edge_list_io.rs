//! Store a sampled graph as an edge list and load it back.

use gnp_square::graph::io::{load_edge_list, parse_edge_list, store_edge_list};
use gnp_square::graph::{sample_gnp, GnpParams};

fn main() {
    let g = sample_gnp(&GnpParams::new(1_000, 3.0, 9)).unwrap();
    let path = std::env::temp_dir().join("gnp-square-example.txt");
    store_edge_list(&g, &path).unwrap();
    let back = load_edge_list(&path).unwrap();
    assert_eq!(back, g);
    println!("round trip of {} edges through {}", g.num_edges(), path.display());

    match parse_edge_list("3 2\n0 1\n1 1\n") {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
}
