//! Property tests for the algebraic invariants that hold on arbitrary
//! inputs: canonicalization, the CAR, the involution, series arithmetic.

use num::{One, Zero};
use proptest::prelude::*;

use symplectic_fermion::chars::QSeries;
use symplectic_fermion::fock::{
    apply_mode, canonicalize, theta, Canonical, ModeIndex, Monomial, Sector, State,
};
use symplectic_fermion::scalar::{int, Half, Scalar};
use symplectic_fermion::Gen;

fn arb_factor(d: usize, max_depth: i64) -> impl Strategy<Value = ModeIndex> {
    ((0..(2 * d) as u8), 1..=max_depth).prop_map(|(g, n)| ModeIndex::new(Gen(g), Half::from_int(n)))
}

fn arb_factor_list(d: usize) -> impl Strategy<Value = Vec<ModeIndex>> {
    prop::collection::vec(arb_factor(d, 4), 0..6)
}

fn arb_state(d: usize) -> impl Strategy<Value = State> {
    prop::collection::vec((arb_factor_list(d), -3..=3i64), 1..4).prop_map(move |terms| {
        let mut s = State::zero(Sector::Untwisted);
        for (factors, c) in terms {
            if let Canonical::Mono { sign, mono } = canonicalize(&factors, Sector::Untwisted) {
                s.add_term(mono, int(c * sign as i64));
            }
        }
        s
    })
}

proptest! {
    #[test]
    fn canonicalize_idempotent(factors in arb_factor_list(2)) {
        if let Canonical::Mono { mono, .. } = canonicalize(&factors, Sector::Untwisted) {
            match canonicalize(&mono.factors, Sector::Untwisted) {
                Canonical::Mono { sign, mono: m2 } => {
                    prop_assert_eq!(sign, 1);
                    prop_assert_eq!(m2, mono);
                }
                Canonical::Zero => prop_assert!(false, "canonical monomial vanished"),
            }
        }
    }

    #[test]
    fn canonicalize_swap_antisymmetry(factors in arb_factor_list(2)) {
        // swapping two adjacent distinct factors flips the sign
        if factors.len() >= 2 && factors[0] != factors[1] {
            let mut swapped = factors.clone();
            swapped.swap(0, 1);
            match (canonicalize(&factors, Sector::Untwisted), canonicalize(&swapped, Sector::Untwisted)) {
                (Canonical::Mono { sign: s1, mono: m1 }, Canonical::Mono { sign: s2, mono: m2 }) => {
                    prop_assert_eq!(m1, m2);
                    prop_assert_eq!(s1, -s2);
                }
                (Canonical::Zero, Canonical::Zero) => {}
                _ => prop_assert!(false, "swap changed the zero pattern"),
            }
        }
    }

    #[test]
    fn mode_nilpotence(v in arb_state(2), g in 0..4u8, m in -4..=4i64) {
        let once = apply_mode(Gen(g), Half::from_int(m), &v);
        let twice = apply_mode(Gen(g), Half::from_int(m), &once);
        prop_assert!(twice.is_zero());
    }

    #[test]
    fn car_on_random_states(v in arb_state(1), a in 0..2u8, b in 0..2u8, m in -3..=3i64) {
        // psi(m) phi(-m) + phi(-m) psi(m) = m <psi, phi> id
        let ga = Gen(a);
        let gb = Gen(b);
        let hm = Half::from_int(m);
        let lhs = apply_mode(ga, hm, &apply_mode(gb, -hm, &v))
            .add(&apply_mode(gb, -hm, &apply_mode(ga, hm, &v)));
        let pairing = symplectic_fermion::symplectic::form(ga, gb);
        let rhs = v.scale(&(int(m) * pairing));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn theta_is_an_involution(v in arb_state(2)) {
        prop_assert_eq!(theta(&theta(&v)), v.clone());
        // theta negates exactly the odd part
        let even = v.parity_part(false);
        let odd = v.parity_part(true);
        prop_assert_eq!(theta(&v), even.sub(&odd));
    }

    #[test]
    fn bilinear_form_parity_orthogonality(u in arb_state(1), v in arb_state(1)) {
        let even = u.parity_part(false);
        let odd = v.parity_part(true);
        prop_assert!(symplectic_fermion::vertex::bilinear_form(&even, &odd).is_zero());
    }
}

fn arb_qseries() -> impl Strategy<Value = QSeries> {
    prop::collection::vec((-4..40i64, -5..=5i64), 1..6).prop_map(|terms| {
        let mut s = QSeries::zero(48);
        for (k, c) in terms {
            if c != 0 && k < 48 {
                let prev = s.terms.get(&k).cloned().unwrap_or_else(Scalar::zero);
                s.terms.insert(k, prev + int(c));
            }
        }
        s.terms.retain(|_, c| !c.is_zero());
        s
    })
}

proptest! {
    #[test]
    fn qseries_ring_laws(a in arb_qseries(), b in arb_qseries(), c in arb_qseries()) {
        prop_assert!(a.mul(&b).agrees_with(&b.mul(&a)));
        prop_assert!(a.mul(&b.add(&c)).agrees_with(&a.mul(&b).add(&a.mul(&c))));
        prop_assert!(a.mul(&b).mul(&c).agrees_with(&a.mul(&b.mul(&c))));
    }

    #[test]
    fn qseries_div_roundtrip(a in arb_qseries(), b in arb_qseries()) {
        if b.leading_key().is_some() {
            let q = a.div(&b);
            prop_assert!(q.mul(&b).agrees_with(&a));
        }
    }

    #[test]
    fn qseries_eval_additive(a in arb_qseries(), b in arb_qseries()) {
        let tau = num::complex::Complex64::new(0.1, 1.2);
        let lhs = a.add(&b).eval(tau);
        let rhs = a.eval(tau) + b.eval(tau);
        prop_assert!((lhs - rhs).norm() < 1e-9);
    }

    #[test]
    fn one_is_multiplicative_unit(a in arb_qseries()) {
        let one = QSeries::one(48);
        prop_assert!(a.mul(&one).agrees_with(&a));
    }
}
