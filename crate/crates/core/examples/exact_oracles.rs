//! Exact chromatic number and choosability of small squares.

use gnp_square::coloring::{exact_chromatic_number, is_k_choosable, Choosability, ChoosabilityCaps};
use gnp_square::graph::{square, Graph};

fn main() {
    let k33 = Graph::complete_bipartite(3, 3);
    println!("chi(K3,3) = {}", exact_chromatic_number(&k33, 16).unwrap());
    match is_k_choosable(&k33, 2, ChoosabilityCaps::default()).unwrap() {
        Choosability::Choosable => println!("K3,3 is 2-choosable"),
        Choosability::Witness(lists) => {
            println!("K3,3 is not 2-choosable; bad lists:");
            for v in 0..lists.len() {
                println!("  {v}: {:?}", lists.list(v));
            }
        }
    }

    // The square of C6 is the octahedron K_{2,2,2}: 3-chromatic and 3-choosable.
    let sq = square(&Graph::cycle(6));
    let chi = exact_chromatic_number(&sq, 16).unwrap();
    println!("square of C6: Δ = {}, chi = {chi}", sq.max_degree());
    let caps = ChoosabilityCaps::default();
    for k in chi - 1..=chi {
        let ok = is_k_choosable(&sq, k, caps).unwrap().is_choosable();
        println!("  {k}-choosable: {ok}");
    }
}
