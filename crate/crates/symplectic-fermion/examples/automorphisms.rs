//! Symplectic linear maps act on the whole algebra: they fix the
//! conformal vector and commute with every mode.

use rand::SeedableRng;
use symplectic_fermion::report::{check_automorphisms, sample_symplectic, DEFAULT_SEED};
use symplectic_fermion::symplectic::{is_symplectic, shear_ef, swap_ef};
use symplectic_fermion::vertex::{apply_linear_map, virasoro_vector};

fn main() {
    // two explicit rational symplectic maps
    for (name, g) in [("pair swap", swap_ef(1)), ("rational shear", shear_ef(1))] {
        assert!(is_symplectic(&g));
        let w = virasoro_vector(1);
        assert_eq!(apply_linear_map(&g, &w), w);
        println!("{}: symplectic, fixes omega", name);
    }
    // a seeded random one
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let g = sample_symplectic(&mut rng, 2);
    println!("sampled d = 2 map is symplectic: {}", is_symplectic(&g));

    for check in check_automorphisms(DEFAULT_SEED, 3, 20) {
        println!("{}", check.line());
        assert!(check.passed());
    }
}
