//! The extended module with zero modes: L_0 Jordan blocks, the singular
//! space, and the zero-mode filtration.

use symplectic_fermion::fock::{Sector, State};
use symplectic_fermion::logmod::*;
use symplectic_fermion::vertex::virasoro;

fn main() {
    let hat = State::vacuum(Sector::Extended);
    let l0 = virasoro(1, 0, &hat);
    println!("L_0 |hat> = {}", l0.display());
    println!("L_0^2 |hat> = {}", virasoro(1, 0, &l0).display());

    for d in 1..=2usize {
        let rep = nilpotency_report(d);
        println!(
            "d = {}: weight-0 dim {}, semisimple: {}, nilpotent index {}",
            d, rep.weight0_dim, rep.is_semisimple, rep.nilpotent_index
        );
        assert!(!rep.is_semisimple);
        let ev = socle_evidence(d);
        println!(
            "  singular dims by weight: {:?} (top-layer inclusion at weight 1: {})",
            ev.omega_dims, ev.weight1_in_top_layer
        );
        for r in 0..=(2 * d) {
            let dims: Vec<usize> = (0..=3).map(|w| filtration_quotient_dim(d, r, w)).collect();
            println!("  layer r = {}: quotient dims {:?}", r, dims);
            for (w, got) in dims.iter().enumerate() {
                assert_eq!(*got, filtration_expected(d, r, w as i64));
            }
        }
    }
}
