//! Seeded residual suites for the master identity, untwisted and
//! twisted: every residual is an exact state that must vanish.

use symplectic_fermion::report::{
    check_borcherds_twisted, check_borcherds_untwisted, DEFAULT_SEED,
};

fn main() {
    for check in check_borcherds_untwisted(100, DEFAULT_SEED) {
        println!("{}", check.line());
        assert!(check.passed());
    }
    for check in check_borcherds_twisted(50, DEFAULT_SEED) {
        println!("{}", check.line());
        assert!(check.passed());
    }
}
