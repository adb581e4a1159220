//! Run every structural check on one sampled graph under two epsilons.

use gnp_square::graph::{sample_gnp, square, GnpParams};
use gnp_square::params::{compute_params, ParamOverrides};
use gnp_square::verify::{
    check_cor1, check_cor2, check_lemma1, check_rest_density, check_sparse_bounds, check_total_edges, CheckVerdict,
};

fn show(v: &CheckVerdict) {
    let name = match &v.part {
        Some(p) => format!("{:?}/{p}", v.claim),
        None => format!("{:?}", v.claim),
    };
    println!(
        "  {name:<28} holds={:<5} measured={:?} bound={:.2} {}",
        v.holds,
        v.statistic.measured,
        v.statistic.bound,
        v.tally.map(|t| format!("violations {}/{}", t.violations, t.trials)).unwrap_or_default()
    );
}

fn main() {
    let (n, c) = (20_000, 2.0);
    let g1 = sample_gnp(&GnpParams::new(n, c, 42)).unwrap();
    let g2 = square(&g1);
    show(&check_lemma1(&g1));
    show(&check_total_edges(&g2, c, n));

    for eps in [0.3, 0.5] {
        let ov = ParamOverrides {
            epsilon: Some(eps),
            ..Default::default()
        };
        let p = compute_params(&g1, c, &ov).unwrap();
        println!("epsilon = {eps}:");
        show(&check_cor1(&g1, &g2, &p).unwrap());
        show(&check_cor2(&g1, &g2, &p).unwrap());
        for v in check_sparse_bounds(&g1, &g2, &p, c, 200, 1).unwrap().verdicts {
            show(&v);
        }
        show(&check_rest_density(&g1, &g2, &p, c).unwrap().0);
    }
}
