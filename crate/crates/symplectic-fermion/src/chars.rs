//! Exact q-series for the eta quotients and irreducible characters, and
//! their modular transformation checks.
//!
//! Exponents live on the lattice (1/48)Z (eta(tau/2) forces denominator
//! 48) and are stored as 48-fold integers with exact rational
//! coefficients; every series carries an explicit truncation order.
//! The T-transformation is checked exactly on the exponent lattice
//! (q^x picks up e^{2 pi i x} under tau -> tau + 1); only the
//! S-transformation uses a floating-point layer.
//!
//! The sqrt(2) prefactor of the third eta quotient is carried
//! symbolically; all assembled characters have an even power, so the
//! final series stay rational.

use std::collections::BTreeMap;

use num::complex::Complex64;
use num::{One, ToPrimitive, Zero};

use crate::fock::{graded_dimension, Sector};
use crate::scalar::{int, rat, Half, Scalar};

/// Truncated series with exponents in (1/48)Z: `terms[k]` is the
/// coefficient of q^{k/48}, exact for k < order48.
#[derive(Clone, Debug, PartialEq)]
pub struct QSeries {
    pub terms: BTreeMap<i64, Scalar>,
    pub order48: i64,
}

impl QSeries {
    pub fn zero(order48: i64) -> QSeries {
        QSeries {
            terms: BTreeMap::new(),
            order48,
        }
    }

    pub fn one(order48: i64) -> QSeries {
        QSeries::monomial(0, Scalar::one(), order48)
    }

    pub fn monomial(key48: i64, coeff: Scalar, order48: i64) -> QSeries {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() && key48 < order48 {
            terms.insert(key48, coeff);
        }
        QSeries { terms, order48 }
    }

    pub fn coeff(&self, key48: i64) -> Scalar {
        assert!(key48 < self.order48, "coefficient beyond truncation order");
        self.terms.get(&key48).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn leading_key(&self) -> Option<i64> {
        self.terms.keys().next().cloned()
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        let order48 = self.order48.min(other.order48);
        let mut out = QSeries::zero(order48);
        for (k, c) in self.terms.iter().chain(other.terms.iter()) {
            if *k < order48 {
                out.add_term(*k, c.clone());
            }
        }
        out
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> QSeries {
        if c.is_zero() {
            return QSeries::zero(self.order48);
        }
        QSeries {
            terms: self.terms.iter().map(|(k, x)| (*k, x * c)).collect(),
            order48: self.order48,
        }
    }

    fn add_term(&mut self, k: i64, c: Scalar) {
        if c.is_zero() || k >= self.order48 {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn mul(&self, other: &QSeries) -> QSeries {
        let la = self.leading_key().unwrap_or(self.order48);
        let lb = other.leading_key().unwrap_or(other.order48);
        let order48 = (self.order48 + lb).min(other.order48 + la);
        let mut out = QSeries::zero(order48);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                if ka + kb >= order48 {
                    break;
                }
                out.add_term(ka + kb, ca * cb);
            }
        }
        out
    }

    /// Division by a series with a nonzero leading coefficient.
    pub fn div(&self, other: &QSeries) -> QSeries {
        let lb = other.leading_key().expect("division by the zero series");
        let la = match self.leading_key() {
            Some(k) => k,
            None => return QSeries::zero(self.order48 - lb),
        };
        // result exact below (la - lb) + min(oa - la, ob - lb)
        let avail = (self.order48 - la).min(other.order48 - lb);
        let order48 = la - lb + avail;
        let binv = Scalar::one() / other.coeff(lb);
        let mut rem = self.clone();
        let mut out = QSeries::zero(order48);
        while let Some(k) = rem.leading_key() {
            let shift = k - lb;
            if shift >= order48 {
                break;
            }
            let c = rem.coeff(k) * &binv;
            out.add_term(shift, c.clone());
            for (kb, cb) in &other.terms {
                rem.add_term(shift + kb, -(&c * cb));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> QSeries {
        let mut acc = QSeries::one(self.order48);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Numeric evaluation at tau in the upper half-plane.
    pub fn eval(&self, tau: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in &self.terms {
            let x = *k as f64 / 48.0;
            let phase = Complex64::new(0.0, 2.0 * std::f64::consts::PI) * tau * x;
            acc += Complex64::new(c.to_f64().unwrap(), 0.0) * phase.exp();
        }
        acc
    }

    /// Term-by-term agreement below the smaller truncation order.
    pub fn agrees_with(&self, other: &QSeries) -> bool {
        let bound = self.order48.min(other.order48);
        let keys: std::collections::BTreeSet<i64> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .filter(|k| **k < bound)
            .cloned()
            .collect();
        keys.iter().all(|k| self.coeff(*k) == other.coeff(*k))
    }

    /// If every exponent is congruent to one residue mod 1, return that
    /// residue as a 48-fold key in [0, 48).
    pub fn t_residue(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(|k| k.rem_euclid(48));
        let r = it.next()?;
        if it.all(|x| x == r) {
            Some(r)
        } else {
            None
        }
    }
}

/// Eta series at scale tau, 2 tau, or tau/2:
/// `q^{s/24} prod_{n>=1} (1 - q^{s n})` with s in {1, 2, 1/2}.
pub fn eta_series(scale: Half, order48: i64) -> QSeries {
    // Half stores 2s, so (s/24)*48 = 2s = scale.0 and s*48 = 24*scale.0
    let lead = scale.0;
    let step = 24 * scale.0;
    assert!(step > 0, "eta scale must be positive");
    let mut out = QSeries::monomial(lead, Scalar::one(), order48);
    let mut n = 1i64;
    while lead + n * step < order48 {
        let mut factor = QSeries::one(order48 - lead);
        factor.add_term(n * step, -Scalar::one());
        out = out.mul(&factor);
        out.order48 = order48; // factors are exact polynomials
        n += 1;
    }
    out.order48 = order48;
    out
}

/// The three eta quotients; the attached integer is the power of sqrt(2)
/// carried symbolically (1 for the third quotient, 0 otherwise).
pub fn phi_series(k: usize, order48: i64) -> (QSeries, u32) {
    let eta1 = eta_series(Half::from_int(1), order48);
    let eta2 = eta_series(Half::from_int(2), order48);
    let etah = eta_series(Half::half_odd(0), order48);
    match k {
        1 => (eta1.mul(&eta1).div(&eta2.mul(&etah)), 0),
        2 => (etah.div(&eta1), 0),
        3 => (eta2.div(&eta1), 1),
        _ => panic!("phi index must be 1, 2 or 3"),
    }
}

/// The four irreducible modules.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Module {
    SfPlus,
    SfMinus,
    ThetaPlus,
    ThetaMinus,
}

impl Module {
    pub fn all() -> [Module; 4] {
        [
            Module::SfPlus,
            Module::SfMinus,
            Module::ThetaPlus,
            Module::ThetaMinus,
        ]
    }

    pub fn name(self) -> &'static str {
        match self {
            Module::SfPlus => "SF+",
            Module::SfMinus => "SF-",
            Module::ThetaPlus => "SF(th)+",
            Module::ThetaMinus => "SF(th)-",
        }
    }
}

/// Character q-series tr q^{L_0 - c/24} with c = -2d:
/// SF(+-) = ((phi_3^2/2)^d +- eta^2d)/2, SF(th)(+-) = (phi_1^2d +- phi_2^2d)/2;
/// the sqrt(2) powers cancel, so everything is rational.
pub fn character_series(module: Module, d: usize, order48: i64) -> QSeries {
    let dd = d as u32;
    match module {
        Module::SfPlus | Module::SfMinus => {
            let (phi3, s2) = phi_series(3, order48);
            assert_eq!(s2, 1);
            // phi_3^{2d} / 2^d: the symbolic sqrt(2)^{2d} cancels 2^d
            let ratio_pow = phi3.pow(2 * dd);
            let eta_pow = eta_series(Half::from_int(1), order48).pow(2 * dd);
            let sign = if module == Module::SfPlus {
                int(1)
            } else {
                int(-1)
            };
            ratio_pow.add(&eta_pow.scale(&sign)).scale(&rat(1, 2))
        }
        Module::ThetaPlus | Module::ThetaMinus => {
            let (phi1, _) = phi_series(1, order48);
            let (phi2, _) = phi_series(2, order48);
            let sign = if module == Module::ThetaPlus {
                int(1)
            } else {
                int(-1)
            };
            phi1.pow(2 * dd)
                .add(&phi2.pow(2 * dd).scale(&sign))
                .scale(&rat(1, 2))
        }
    }
}

/// `tr theta q^{L_0 + d/12}`: eta^{2d} untwisted, (eta(tau/2)/eta)^{2d}
/// twisted.
pub fn theta_trace_series(twisted: bool, d: usize, order48: i64) -> QSeries {
    if twisted {
        phi_series(2, order48).0.pow(2 * d as u32)
    } else {
        eta_series(Half::from_int(1), order48).pow(2 * d as u32)
    }
}

/// Compare the first `count` lattice coefficients of the character with
/// independently enumerated graded dimensions; returns mismatches.
pub fn enumerate_vs_character(module: Module, d: usize, count: usize) -> Vec<String> {
    let order48 = 48 * (count as i64 + 2);
    let series = character_series(module, d, order48);
    let mut failures = Vec::new();
    for i in 0..count {
        let (key48, sector, parity, raw) = match module {
            Module::SfPlus => (
                48 * i as i64 + 4 * d as i64,
                Sector::Untwisted,
                false,
                Half::from_int(i as i64),
            ),
            Module::SfMinus => (
                48 * i as i64 + 4 * d as i64 + 48,
                Sector::Untwisted,
                true,
                Half::from_int(i as i64 + 1),
            ),
            Module::ThetaPlus => (
                48 * i as i64 - 2 * d as i64,
                Sector::Twisted,
                false,
                Half::from_int(i as i64),
            ),
            Module::ThetaMinus => (
                48 * i as i64 - 2 * d as i64 + 24,
                Sector::Twisted,
                true,
                Half::half_odd(i as i64),
            ),
        };
        let expected = graded_dimension(sector, Some(parity), raw, d);
        let got = series.coeff(key48);
        if got != int(expected as i64) {
            failures.push(format!(
                "{} d={} exponent {}/48: series {} vs enumeration {}",
                module.name(),
                d,
                key48,
                crate::scalar::fmt_scalar(&got),
                expected
            ));
        }
    }
    failures
}

/// Exact T-transformation check: the series must live on one residue
/// class mod 1 and the implied phase must match; returns the residue as
/// a fraction of a full turn, in 48ths.
pub fn t_transform_check(module: Module, d: usize, order48: i64) -> Option<i64> {
    let s = character_series(module, d, order48);
    let r = s.t_residue()?;
    let expected = match module {
        // e^{d pi i/6} = e^{2 pi i (4d/48)}
        Module::SfPlus | Module::SfMinus => (4 * d as i64).rem_euclid(48),
        // +- e^{-d pi i/12}: residue -2d/48, shifted by 24/48 for the minus
        Module::ThetaPlus => (-2 * d as i64).rem_euclid(48),
        Module::ThetaMinus => (-2 * d as i64 + 24).rem_euclid(48),
    };
    if r == expected {
        Some(r)
    } else {
        None
    }
}

/// Numeric S-transformation residuals of the eta quotients at tau:
/// |phi_1(-1/tau) - phi_1(tau)|, |phi_2(-1/tau) - phi_3(tau)/sqrt2... |,
/// stated with the sqrt(2) prefactors made explicit:
/// phi_2(-1/tau) = sqrt2 * (eta(2 tau)/eta(tau)) and
/// phi_3(-1/tau) = phi_2(tau), plus the eta law
/// eta(-1/tau) = (-i tau)^{1/2} eta(tau).
pub fn phi_s_residuals(tau: Complex64, order48: i64) -> Vec<(String, f64)> {
    let s_tau = Complex64::new(-1.0, 0.0) / tau;
    let (phi1, _) = phi_series(1, order48);
    let (phi2, _) = phi_series(2, order48);
    let (phi3r, _) = phi_series(3, order48); // rational part, sqrt2 implicit
    let sqrt2 = Complex64::new(2f64.sqrt(), 0.0);
    let eta1 = eta_series(Half::from_int(1), order48);
    let mut out = Vec::new();
    out.push((
        "phi1(-1/tau) = phi1(tau)".to_string(),
        (phi1.eval(s_tau) - phi1.eval(tau)).norm(),
    ));
    out.push((
        "phi2(-1/tau) = phi3(tau)".to_string(),
        (phi2.eval(s_tau) - sqrt2 * phi3r.eval(tau)).norm(),
    ));
    out.push((
        "phi3(-1/tau) = phi2(tau)".to_string(),
        (sqrt2 * phi3r.eval(s_tau) - phi2.eval(tau)).norm(),
    ));
    let branch = (Complex64::new(0.0, -1.0) * tau).sqrt();
    out.push((
        "eta(-1/tau) = (-i tau)^(1/2) eta(tau)".to_string(),
        (eta1.eval(s_tau) - branch * eta1.eval(tau)).norm(),
    ));
    out
}

/// Numeric residuals of the character S-laws at tau.
pub fn character_s_residuals(d: usize, tau: Complex64, order48: i64) -> Vec<(String, f64)> {
    let s_tau = Complex64::new(-1.0, 0.0) / tau;
    let sp = character_series(Module::SfPlus, d, order48);
    let sm = character_series(Module::SfMinus, d, order48);
    let tp = character_series(Module::ThetaPlus, d, order48);
    let tm = character_series(Module::ThetaMinus, d, order48);
    let minus_i_tau_d = (Complex64::new(0.0, -1.0) * tau).powi(d as i32);
    let mut out = Vec::new();
    let half_pow = 0.5f64.powi(d as i32 + 1);
    for (name, lhs, sign) in [("SF+", &sp, 1.0), ("SF-", &sm, -1.0)] {
        let rhs = (tp.eval(tau) - tm.eval(tau)) * half_pow
            + minus_i_tau_d * (sp.eval(tau) - sm.eval(tau)) * 0.5 * sign;
        out.push((
            format!("S[{}] d={}", name, d),
            (lhs.eval(s_tau) - rhs).norm(),
        ));
    }
    let two_pow = 2f64.powi(d as i32 - 1);
    for (name, lhs, sign) in [("SF(th)+", &tp, 1.0), ("SF(th)-", &tm, -1.0)] {
        let rhs =
            (tp.eval(tau) + tm.eval(tau)) * 0.5 + (sp.eval(tau) + sm.eval(tau)) * two_pow * sign;
        out.push((
            format!("S[{}] d={}", name, d),
            (lhs.eval(s_tau) - rhs).norm(),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_basics() {
        let order = 48 * 8;
        let eta = eta_series(Half::from_int(1), order);
        // leading exponent 1/24 with coefficient 1
        assert_eq!(eta.leading_key(), Some(2));
        assert_eq!(eta.coeff(2), int(1));
        // coefficient of q^{1/24 + 1} is -1
        assert_eq!(eta.coeff(2 + 48), int(-1));
        // eta(2 tau) exponents lie in 1/12 + 2 Z>=0
        let eta2 = eta_series(Half::from_int(2), order);
        for k in eta2.terms.keys() {
            assert_eq!((k - 4) % 96, 0);
        }
    }

    #[test]
    fn phi_leading_terms() {
        let order = 48 * 8;
        let (phi1, _) = phi_series(1, order);
        let (phi2, _) = phi_series(2, order);
        let (phi3, s2) = phi_series(3, order);
        assert_eq!(phi1.leading_key(), Some(-1));
        assert_eq!(phi1.coeff(-1), int(1));
        assert_eq!(phi2.leading_key(), Some(-1));
        assert_eq!(phi2.coeff(-1), int(1));
        assert_eq!(s2, 1);
        // phi3^2 / 2 has leading exponent 1/12 (the sqrt(2)s cancel)
        let sq = phi3.mul(&phi3);
        assert_eq!(sq.leading_key(), Some(4));
    }

    #[test]
    fn character_examples() {
        let order = 48 * 8;
        let sp = character_series(Module::SfPlus, 1, order);
        assert_eq!(sp.coeff(4), int(1)); // q^{1/12}
        let sm = character_series(Module::SfMinus, 1, order);
        assert_eq!(sm.coeff(4 + 48), int(2)); // dim SF-_1 = 2
        let tp = character_series(Module::ThetaPlus, 1, order);
        assert_eq!(tp.leading_key(), Some(-2)); // q^{-1/24}
                                                // theta trace: untwisted = S+ - S-, twisted = Sth+ - Sth-
        let tr_un = theta_trace_series(false, 1, order);
        assert!(tr_un.agrees_with(&sp.sub(&sm)));
        assert_eq!(tr_un.coeff(4 + 48), int(-2));
        let tr_tw = theta_trace_series(true, 1, order);
        let tm = character_series(Module::ThetaMinus, 1, order);
        assert!(tr_tw.agrees_with(&tp.sub(&tm)));
    }

    #[test]
    fn characters_match_enumeration() {
        for d in 1..=2 {
            for m in Module::all() {
                let fails = enumerate_vs_character(m, d, 8);
                assert!(fails.is_empty(), "{:?}", fails);
            }
        }
    }

    #[test]
    fn t_transform_exact() {
        for d in 1..=3 {
            for m in Module::all() {
                assert!(
                    t_transform_check(m, d, 48 * 10).is_some(),
                    "T-lattice failure for {} d={}",
                    m.name(),
                    d
                );
            }
        }
    }

    #[test]
    fn s_transform_numeric() {
        // three sample points in the upper half-plane
        for tau in [
            Complex64::new(0.0, 1.0),
            Complex64::new(0.2, 1.3),
            Complex64::new(-0.4, 0.9),
        ] {
            let order = 48 * 80;
            for (name, r) in phi_s_residuals(tau, order) {
                assert!(r < 1e-9, "{} at {}: residual {}", name, tau, r);
            }
            for d in 1..=2 {
                for (name, r) in character_s_residuals(d, tau, order) {
                    assert!(r < 1e-7, "{} at {}: residual {}", name, tau, r);
                }
            }
        }
    }
}
