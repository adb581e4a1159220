//! Degree-derived parameters and the three-way vertex split.

use gnp_square::graph::{sample_gnp, GnpParams};
use gnp_square::params::{compute_params, compute_theta, ParamOverrides, Partition};

fn main() {
    for n in [17usize, 1_000, 100_000, 10_000_000] {
        println!("theta({n}) = {:.4}", compute_theta(n).unwrap());
    }

    let g1 = sample_gnp(&GnpParams::new(50_000, 2.0, 1)).unwrap();
    for overrides in [
        ParamOverrides::default(),
        ParamOverrides {
            epsilon: Some(0.3),
            ..Default::default()
        },
    ] {
        let p = compute_params(&g1, 2.0, &overrides).unwrap();
        let part = Partition::new(&g1, &p);
        println!(
            "mode {:?}: theta = {:.3}, eps = {:.3} (clamped: {}), Δ = {}, Δ1 = {}, q = {}, k0 = {}, s0 = {}",
            p.mode,
            p.theta,
            p.epsilon,
            p.epsilon_clamped,
            p.delta_obs,
            p.delta1,
            p.q,
            p.k0(),
            p.s0()
        );
        println!(
            "  |V_eps| = {}, |W_eps| = {}, rest = {}",
            part.v_eps().len(),
            part.w_eps().len(),
            part.rest().len()
        );
    }
}
