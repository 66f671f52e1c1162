//! Modular behavior of the characters: exact T-phases on the exponent
//! lattice, numeric S-residuals at two sample points.

use num::complex::Complex64;
use symplectic_fermion::chars::{
    character_s_residuals, phi_s_residuals, t_transform_check, Module,
};

fn main() {
    for d in 1..=3usize {
        for m in Module::all() {
            let r = t_transform_check(m, d, 48 * 12).expect("uniform T-phase");
            println!(
                "T: {} d={} picks up e^(2 pi i {}/48) exactly",
                m.name(),
                d,
                r
            );
        }
    }
    for tau in [Complex64::new(0.0, 1.0), Complex64::new(0.2, 1.3)] {
        println!(
            "\nS-residuals at tau = {:.1}+{:.1}i (order 200):",
            tau.re, tau.im
        );
        let mut max = 0f64;
        for (name, r) in phi_s_residuals(tau, 48 * 200) {
            println!("  {}: {:.3e}", name, r);
            max = max.max(r);
        }
        for d in 1..=2usize {
            for (name, r) in character_s_residuals(d, tau, 48 * 200) {
                println!("  {}: {:.3e}", name, r);
                max = max.max(r);
            }
        }
        assert!(max < 1e-6);
    }
}
