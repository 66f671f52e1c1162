//! The Virasoro structure of the symplectic fermion algebra: products of
//! the conformal vector and the central charge -2d.

use symplectic_fermion::fock::{Sector, State};
use symplectic_fermion::scalar::{fmt_scalar, int, rat};
use symplectic_fermion::vertex::{field_mode, virasoro, virasoro_vector};

fn main() {
    for d in 1..=3usize {
        let w = virasoro_vector(d);
        let vac = State::vacuum(Sector::Untwisted);
        println!("d = {}: omega = {}", d, w.display());
        println!("  omega_(1) omega = {}", field_mode(&w, 1, &w).display());
        println!("  omega_(2) omega = {}", field_mode(&w, 2, &w).display());
        println!("  omega_(3) omega = {}", field_mode(&w, 3, &w).display());
        assert_eq!(field_mode(&w, 1, &w), w.scale(&int(2)));
        assert!(field_mode(&w, 2, &w).is_zero());
        assert_eq!(field_mode(&w, 3, &w), vac.scale(&int(-(d as i64))));
    }

    // the bracket [L_m, L_n] = (m-n) L_{m+n} + (m^3-m)/12 c delta_{m+n,0}
    // with c = -2d, sampled on a weight-2 state
    let d = 1;
    let u = virasoro_vector(d);
    println!("\n[L_m, L_n] on omega (d = 1, central charge -2):");
    for m in -2..=2i64 {
        for n in -2..=2i64 {
            let lhs = virasoro(d, m, &virasoro(d, n, &u)).sub(&virasoro(d, n, &virasoro(d, m, &u)));
            let mut rhs = virasoro(d, m + n, &u).scale(&int(m - n));
            if m + n == 0 {
                rhs = rhs.add(&u.scale(&(rat(m * m * m - m, 12) * int(-2))));
            }
            assert_eq!(lhs, rhs);
        }
    }
    println!("  all 25 brackets match, central term (m^3-m)/12 * (-2)");
    println!(
        "  L_0 fixes weights: L_0 omega = {} omega",
        fmt_scalar(&int(2))
    );
}
