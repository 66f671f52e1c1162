//! The invariant bilinear form: determinant evaluation, weightwise Gram
//! matrices of full rank, and the adjoint law.

use num::Zero;
use symplectic_fermion::fock::{Sector, State};
use symplectic_fermion::scalar::fmt_scalar;
use symplectic_fermion::vertex::{bilinear_form, dense_rank, gram_matrix, invariance_residual};
use symplectic_fermion::zhu::word_state;
use symplectic_fermion::Gen;

fn main() {
    let vac = State::vacuum(Sector::Untwisted);
    println!("(1, 1) = {}", fmt_scalar(&bilinear_form(&vac, &vac)));
    let e = word_state(&[(Gen::e(1), 1)]);
    let f = word_state(&[(Gen::f(1), 1)]);
    println!(
        "(e(-1)|0>, f(-1)|0>) = {}",
        fmt_scalar(&bilinear_form(&e, &f))
    );
    println!(
        "(e(-1)|0>, e(-1)|0>) = {}",
        fmt_scalar(&bilinear_form(&e, &e))
    );

    for d in 1..=2usize {
        for w in 0..=6i64 {
            let g = gram_matrix(d, w);
            let n = g.len();
            let r = dense_rank(g);
            println!("d = {} weight {}: Gram rank {}/{}", d, w, r, n);
            assert_eq!(r, n);
        }
    }

    // (a_(n) u, v) matches the adjoint mode of u against v
    let d = 1;
    let a = word_state(&[(Gen::e(1), 2), (Gen::f(1), 1)]);
    let u = word_state(&[(Gen::e(1), 1), (Gen::f(1), 1)]);
    let v = word_state(&[(Gen::e(1), 3), (Gen::f(1), 1)]);
    for n in -2..=2i64 {
        assert!(invariance_residual(d, &a, &u, &v, n).is_zero());
    }
    println!("adjoint law verified for a weight-3 field at modes -2..=2");
}
