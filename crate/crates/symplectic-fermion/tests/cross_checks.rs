//! Cross-module consistency: enumeration against generating functions,
//! report determinism, and the serialization surfaces.

use std::collections::BTreeMap;

use symplectic_fermion::chars::{theta_trace_series, QSeries};
use symplectic_fermion::fock::{enumerate_basis, graded_dimension, Sector};
use symplectic_fermion::report::{check_borcherds_untwisted, Report, DEFAULT_SEED};
use symplectic_fermion::scalar::{int, Half};

/// The graded dimensions of the full Fock space match the product
/// expansion prod (1 + q^n)^{2d} = (eta(2 tau)/eta(tau))^{2d} shifted by
/// q^{d/12}, computed on the characters side.
#[test]
fn fock_dimensions_match_generating_function() {
    for d in 1..=2usize {
        let order = 48 * 13;
        let eta1 = symplectic_fermion::chars::eta_series(Half::from_int(1), order);
        let eta2 = symplectic_fermion::chars::eta_series(Half::from_int(2), order);
        let series: QSeries = eta2.div(&eta1).pow(2 * d as u32);
        for w in 0..=10i64 {
            let count = enumerate_basis(Sector::Untwisted, Half::from_int(w), d).len();
            // leading exponent of the quotient power is d/12 = 4d/48
            let key = 48 * w + 4 * d as i64;
            assert_eq!(series.coeff(key), int(count as i64), "d={} w={}", d, w);
        }
    }
}

/// The theta-trace series equals the parity-signed enumeration.
#[test]
fn theta_trace_matches_signed_enumeration() {
    for d in 1..=2usize {
        let series = theta_trace_series(false, d, 48 * 11);
        for w in 0..=8i64 {
            let even = graded_dimension(Sector::Untwisted, Some(false), Half::from_int(w), d);
            let odd = graded_dimension(Sector::Untwisted, Some(true), Half::from_int(w), d);
            let key = 48 * w + 4 * d as i64;
            assert_eq!(series.coeff(key), int(even as i64 - odd as i64));
        }
    }
}

/// Identical (command, seed) produce byte-identical reports once wall
/// times are cleared.
#[test]
fn report_determinism() {
    let strip = |mut r: Report| {
        for c in &mut r.checks {
            c.wall_time_ms = 0;
        }
        r.to_json()
    };
    let a = strip(Report::new(
        DEFAULT_SEED,
        BTreeMap::new(),
        check_borcherds_untwisted(12, DEFAULT_SEED),
    ));
    let b = strip(Report::new(
        DEFAULT_SEED,
        BTreeMap::new(),
        check_borcherds_untwisted(12, DEFAULT_SEED),
    ));
    assert_eq!(a, b);
}

/// Monomial serialization fixes the external format.
#[test]
fn serialization_surface() {
    use symplectic_fermion::fock::{ModeIndex, Monomial};
    use symplectic_fermion::Gen;
    let m = Monomial {
        factors: vec![
            ModeIndex::new(Gen::e(1), Half::from_int(2)),
            ModeIndex::new(Gen::f(1), Half::from_int(1)),
        ],
    };
    assert_eq!(m.display(Sector::Untwisted), "e1(-2) f1(-1) |0>");
    let t = Monomial {
        factors: vec![ModeIndex::new(Gen::e(1), Half::half_odd(0))],
    };
    assert_eq!(t.display(Sector::Twisted), "e1(-1/2) |th>");
    let x = Monomial {
        factors: vec![ModeIndex::new(Gen::e(1), Half::ZERO)],
    };
    assert_eq!(x.display(Sector::Extended), "e1(0) |hat>");
}
