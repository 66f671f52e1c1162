//! The C2 quotient of the even orbifold: eleven dimensions for d = 1,
//! concentrated at weights 0, 2..6 and 8.

use symplectic_fermion::scalar::rat;
use symplectic_fermion::zhu::{gamma_rep, C2Engine};
use symplectic_fermion::Gen;

fn main() {
    let eng = C2Engine::new(1, 12);
    println!("per-weight quotient dimensions (d = 1, cut 12):");
    for (n, dim) in eng.quotient_dims() {
        if dim > 0 {
            println!("  weight {:>2}: {}", n, dim);
        }
    }
    println!("total: {}", eng.quotient_total());
    assert_eq!(eng.quotient_total(), 11);

    // the quotient relations that force the bound
    let e = Gen::e(1);
    let f = Gen::f(1);
    let g2 = gamma_rep(2, e, f);
    let g3 = gamma_rep(3, e, f);
    let cube = eng.mul(&g2, &eng.mul(&g2, &g2));
    let sq = eng.mul(&g3, &g3);
    assert_eq!(sq, cube.scale(&rat(8, 9)));
    println!("mixed cubic relation: square of the weight-3 class = 8/9 of the cube of the weight-2 class");
    assert!(eng.mul(&gamma_rep(3, e, e), &gamma_rep(3, e, e)).is_zero());
    println!("nilpotence of the pure classes verified");
}
