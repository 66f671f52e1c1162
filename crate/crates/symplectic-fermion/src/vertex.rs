//! Untwisted vertex operator modes.
//!
//! For a monomial `a = psi^1(-n_1)...psi^r(-n_r)|0>` the mode `a_(n)` is
//! the normal-ordered sum over integer tuples (i_1..i_r) with
//! `sum i_j = -sum n_j + n + 1` of
//! `prod binom(-i_j - 1, n_j - 1) :psi^1(i_1)...psi^r(i_r):`.
//!
//! Normal ordering moves factors of level >= 0 to the right: processing
//! left to right, a factor of level >= 0 among r remaining picks up the
//! sign (-1)^{r-1} and lands right of the whole remainder.
//!
//! Applied to a state of bounded weight only finitely many tuples act
//! nontrivially; the enumeration below walks exactly those.

use num::{One, Zero};

use crate::fock::{apply_mode, apply_vector_mode, enumerate_basis, Monomial, Sector, State};
use crate::scalar::{binom_int, int, Half, Scalar};
use crate::symplectic::{form, Gen, HVector, LinearMap};

/// One normal-ordered operator word: modes applied right-to-left, with a
/// scalar prefactor.
#[derive(Clone, Debug)]
pub struct OpTerm {
    pub coeff: Scalar,
    /// Modes in operator order (leftmost first).
    pub modes: Vec<(Gen, Half)>,
}

/// Normal-order a list of modes per the inductive rule, returning the
/// permutation sign and the reordered list.
pub fn normal_order(ops: &[(Gen, Half)]) -> (i8, Vec<(Gen, Half)>) {
    let mut sign = 1i8;
    let mut creators: Vec<(Gen, Half)> = Vec::with_capacity(ops.len());
    let mut annihilators: Vec<(Gen, Half)> = Vec::new();
    for (idx, op) in ops.iter().enumerate() {
        if op.1.is_negative() {
            creators.push(*op);
        } else {
            // r factors remain (this one included): sign (-1)^{r-1}
            let r = ops.len() - idx;
            if (r - 1) % 2 == 1 {
                sign = -sign;
            }
            annihilators.push(*op);
        }
    }
    // the earliest annihilator ends up rightmost
    annihilators.reverse();
    creators.extend(annihilators);
    (sign, creators)
}

/// Expand the operator `a_(n)` of a single untwisted monomial into
/// normal-ordered words, keeping only words whose annihilator levels are
/// at most `max_ann` (levels above that kill every target of bounded
/// depth). `levels_half_integer` switches between the untwisted lattice
/// (modes in Z) and the twisted W-operator lattice (modes in Z + 1/2);
/// `allow_zero_modes` admits level-0 modes (extended targets).
pub fn expand_monomial_mode(
    mono: &Monomial,
    n: Half,
    max_ann: Half,
    levels_half_integer: bool,
    allow_zero_modes: bool,
) -> Vec<OpTerm> {
    let r = mono.len();
    let target_sum = -mono.weight() + n + Half::from_int(1);
    if r == 0 {
        // the vacuum: 1_(m) = delta_{m,-1} id
        if n == Half::from_int(-1) {
            return vec![OpTerm {
                coeff: Scalar::one(),
                modes: vec![],
            }];
        }
        return vec![];
    }
    // per-position admissible levels: creation side i <= -n_j, annihilator
    // side 0 or 1/2 up to max_ann
    let mut out = Vec::new();
    let mut chosen: Vec<(Gen, Half)> = Vec::with_capacity(r);
    expand_rec(
        mono,
        0,
        target_sum,
        max_ann,
        levels_half_integer,
        allow_zero_modes,
        &mut chosen,
        &mut out,
    );
    out
}

#[allow(clippy::too_many_arguments)]
fn expand_rec(
    mono: &Monomial,
    j: usize,
    remaining: Half,
    max_ann: Half,
    half_lattice: bool,
    allow_zero: bool,
    chosen: &mut Vec<(Gen, Half)>,
    out: &mut Vec<OpTerm>,
) {
    let r = mono.len();
    if j == r {
        if remaining != Half::ZERO {
            return;
        }
        let (sign, modes) = normal_order(chosen);
        let mut coeff = if sign < 0 {
            -Scalar::one()
        } else {
            Scalar::one()
        };
        for (k, (_, lvl)) in chosen.iter().enumerate() {
            let n_k = mono.factors[k].depth;
            let b = mode_binom(*lvl, n_k, half_lattice);
            if b.is_zero() {
                return;
            }
            coeff *= b;
        }
        out.push(OpTerm { coeff, modes });
        return;
    }
    // Remaining positions j+1..r can contribute at most max_ann each, so
    // this position needs at least remaining - (r-1-j)*max_ann.
    let slack = Half((r - 1 - j) as i64 * max_ann.0);
    let min_here = remaining - slack;
    let depth_j = mono.factors[j].depth;
    let gen_j = mono.factors[j].gen;

    // annihilator side: levels in (0 or 1/2 ..= max_ann)
    let ann_start = if half_lattice {
        Half(1)
    } else if allow_zero {
        Half(0)
    } else {
        Half(2)
    };
    let mut lvl = ann_start;
    while lvl.0 <= max_ann.0 {
        if lvl.0 >= min_here.0 {
            chosen.push((gen_j, lvl));
            expand_rec(
                mono,
                j + 1,
                remaining - lvl,
                max_ann,
                half_lattice,
                allow_zero,
                chosen,
                out,
            );
            chosen.pop();
        }
        lvl = Half(lvl.0 + 2);
    }
    // creation side: on the integer lattice the binomial vanishes for
    // -n_j < i < 0, so start at -n_j; on the half-integer lattice every
    // negative level contributes, starting at -1/2
    let mut lvl = if half_lattice { Half(-1) } else { -depth_j };
    while lvl.0 >= min_here.0 {
        chosen.push((gen_j, lvl));
        expand_rec(
            mono,
            j + 1,
            remaining - lvl,
            max_ann,
            half_lattice,
            allow_zero,
            chosen,
            out,
        );
        chosen.pop();
        lvl = Half(lvl.0 - 2);
    }
}

/// The binomial weight `binom(-i - 1, n - 1)` for mode level `i` against
/// creation depth `n`.
fn mode_binom(level: Half, depth: Half, half_lattice: bool) -> Scalar {
    let k = depth.to_int() - 1; // untwisted monomial depths are integers
    if half_lattice {
        crate::scalar::binom_scalar(&(-level.to_scalar() - int(1)), k)
    } else {
        binom_int(-level.to_int() - 1, k)
    }
}

/// The mode `a_(n) v` for an untwisted state `a` acting on an untwisted or
/// extended state, extended linearly in `a`.
pub fn field_mode(a: &State, n: i64, v: &State) -> State {
    assert_eq!(
        a.sector,
        Sector::Untwisted,
        "field_mode expects an untwisted a"
    );
    assert!(
        matches!(v.sector, Sector::Untwisted | Sector::Extended),
        "field_mode target must be untwisted or extended"
    );
    let n = Half::from_int(n);
    let max_ann = v.max_depth();
    let allow_zero = v.sector == Sector::Extended;
    let mut out = State::zero(v.sector);
    for (mono, coeff) in &a.terms {
        for term in expand_monomial_mode(mono, n, max_ann, false, allow_zero) {
            let mut w = v.scale(&(coeff * &term.coeff));
            for (g, m) in term.modes.iter().rev() {
                if w.is_zero() {
                    break;
                }
                w = apply_mode(*g, *m, &w);
            }
            out = out.add(&w);
        }
    }
    out
}

/// The Virasoro vector omega = sum_j e^j(-1) f^j(-1) |0>.
pub fn virasoro_vector(d: usize) -> State {
    let mut out = State::zero(Sector::Untwisted);
    for i in 1..=d {
        let mono = Monomial {
            factors: vec![
                crate::fock::ModeIndex::new(Gen::e(i), Half::from_int(1)),
                crate::fock::ModeIndex::new(Gen::f(i), Half::from_int(1)),
            ],
        };
        out.add_term(mono, Scalar::one());
    }
    out
}

/// `L_n v = omega_(n+1) v` for the d-generator Virasoro vector.
pub fn virasoro(d: usize, n: i64, v: &State) -> State {
    field_mode(&virasoro_vector(d), n + 1, v)
}

/// A vector of h as a weight-1 untwisted state.
pub fn h_state(psi: &HVector) -> State {
    let mut out = State::zero(Sector::Untwisted);
    for (i, c) in psi.coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        out.add_term(
            Monomial {
                factors: vec![crate::fock::ModeIndex::new(Gen(i as u8), Half::from_int(1))],
            },
            c.clone(),
        );
    }
    out
}

/// Parity of a state required to be homogeneous; None for the zero state.
pub fn parity_of(a: &State) -> Option<bool> {
    let mut it = a.terms.keys().map(|m| m.parity_odd());
    let p = it.next()?;
    assert!(
        a.terms.keys().all(|m| m.parity_odd() == p),
        "state of mixed parity"
    );
    Some(p)
}

/// LHS - RHS of the super-Borcherds identity applied to `u`:
/// `sum_i binom(q,i) (a_(p+i) b)_(q+r-i) u`
/// minus
/// `sum_i (-1)^i binom(p,i) (a_(p+q-i) b_(r+i) - (-1)^{p+kl} b_(p+r-i) a_(q+i)) u`.
/// Expected zero for all p, q, r.
pub fn borcherds_residual(a: &State, b: &State, u: &State, p: i64, q: i64, r: i64) -> State {
    let ka = parity_of(a).unwrap_or(false);
    let kb = parity_of(b).unwrap_or(false);
    let wa = a.max_weight().to_int();
    let wb = b.max_weight().to_int();
    let wu = u.max_weight().to_int();

    let mut lhs = State::zero(u.sector);
    // a_(p+i) b vanishes once p+i exceeds wa+wb-1
    for i in 0..=(wa + wb - 1 - p).max(-1) {
        let c = binom_int(q, i);
        if c.is_zero() {
            continue;
        }
        let ab = field_mode(a, p + i, b);
        if ab.is_zero() {
            continue;
        }
        lhs = lhs.add(&field_mode(&ab, q + r - i, u).scale(&c));
    }

    let mut rhs = State::zero(u.sector);
    let koszul = if (p + ((ka as i64) * (kb as i64))) % 2 != 0 {
        -Scalar::one()
    } else {
        Scalar::one()
    };
    for i in 0..=(wb + wu - 1 - r).max(-1) {
        let c = binom_int(p, i) * crate::scalar::sign_of_parity(i as u64);
        if c.is_zero() {
            continue;
        }
        let inner = field_mode(b, r + i, u);
        if inner.is_zero() {
            continue;
        }
        rhs = rhs.add(&field_mode(a, p + q - i, &inner).scale(&c));
    }
    for i in 0..=(wa + wu - 1 - q).max(-1) {
        let c = binom_int(p, i) * crate::scalar::sign_of_parity(i as u64) * &koszul;
        if c.is_zero() {
            continue;
        }
        let inner = field_mode(a, q + i, u);
        if inner.is_zero() {
            continue;
        }
        rhs = rhs.sub(&field_mode(b, p + r - i, &inner).scale(&c));
    }
    lhs.sub(&rhs)
}

/// The invariant bilinear form on SF via the determinant formula:
/// `(psi^1(-n_1)..psi^r(-n_r)|0>, xi^1(-m_1)..xi^s(-m_s)|0>)
///  = delta_{rs} (-1)^{r(r+1)/2} det( n_i delta_{n_i, m_j} <psi^i, xi^j> )`.
pub fn bilinear_form(u: &State, v: &State) -> Scalar {
    assert_eq!(u.sector, Sector::Untwisted, "bilinear form lives on SF");
    assert_eq!(v.sector, Sector::Untwisted, "bilinear form lives on SF");
    let mut acc = Scalar::zero();
    for (mu, cu) in &u.terms {
        for (mv, cv) in &v.terms {
            let p = monomial_pairing(mu, mv);
            if !p.is_zero() {
                acc += cu * cv * p;
            }
        }
    }
    acc
}

fn monomial_pairing(mu: &Monomial, mv: &Monomial) -> Scalar {
    let r = mu.len();
    if r != mv.len() {
        return Scalar::zero();
    }
    if r == 0 {
        return Scalar::one();
    }
    let mut mat = vec![vec![Scalar::zero(); r]; r];
    for (i, a) in mu.factors.iter().enumerate() {
        for (j, b) in mv.factors.iter().enumerate() {
            if a.depth == b.depth {
                mat[i][j] = a.depth.to_scalar() * form(a.gen, b.gen);
            }
        }
    }
    let sign = if (r * (r + 1) / 2) % 2 == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    };
    sign * determinant(mat)
}

/// Exact determinant by fraction Gaussian elimination (small matrices).
pub fn determinant(mut mat: Vec<Vec<Scalar>>) -> Scalar {
    let n = mat.len();
    let mut det = Scalar::one();
    for col in 0..n {
        let pivot = match (col..n).find(|&r| !mat[r][col].is_zero()) {
            Some(p) => p,
            None => return Scalar::zero(),
        };
        if pivot != col {
            mat.swap(pivot, col);
            det = -det;
        }
        let p = mat[col][col].clone();
        det *= &p;
        for row in col + 1..n {
            if mat[row][col].is_zero() {
                continue;
            }
            let factor = &mat[row][col] / &p;
            for c in col..n {
                let t = &mat[col][c] * &factor;
                mat[row][c] -= t;
            }
        }
    }
    det
}

/// Residual of the invariance law at mode `n` against `(u, v)`:
/// `(a_(n) u, v) - (-1)^{kl} (-1)^{wt a} sum_j (1/j!) (u, (L_1^j a)_(2 wt a - j - n - 2) v)`.
pub fn invariance_residual(d: usize, a: &State, u: &State, v: &State, n: i64) -> Scalar {
    let wa = a
        .homogeneous_weight()
        .expect("invariance residual needs weight-homogeneous a")
        .to_int();
    let ka = parity_of(a).unwrap_or(false);
    let lu = parity_of(u).unwrap_or(false);
    let lhs = bilinear_form(&field_mode(a, n, u), v);
    let mut rhs = Scalar::zero();
    let mut l1pow = a.clone();
    let mut jfac = Scalar::one();
    let mut j = 0i64;
    while !l1pow.is_zero() {
        let m = 2 * wa - j - n - 2;
        rhs += bilinear_form(u, &field_mode(&l1pow, m, v)) / &jfac;
        j += 1;
        jfac *= int(j);
        l1pow = virasoro(d, 1, &l1pow);
    }
    let mut sign = Scalar::one();
    if ka && lu {
        sign = -sign;
    }
    if wa % 2 != 0 {
        sign = -sign;
    }
    lhs - sign * rhs
}

/// True iff `psi(n) u = 0` for every generator and every `n >= 1`; since h
/// strongly generates SF this detects singular vectors of the SF-module
/// structure.
pub fn is_singular(u: &State, d: usize) -> bool {
    let top = u.max_depth().0.max(2);
    for g in Gen::all(d) {
        let mut m = match u.sector {
            Sector::Twisted => Half(1),
            _ => Half(2),
        };
        while m.0 <= top {
            if !apply_gen_mode(g, m, u).is_zero() {
                return false;
            }
            m = Half(m.0 + 2);
        }
    }
    true
}

fn apply_gen_mode(g: Gen, m: Half, u: &State) -> State {
    apply_mode(g, m, u)
}

/// Extend a symplectic map multiplicatively over monomial factors:
/// `g(psi^1(-n_1)...|0>) = (g psi^1)(-n_1)...|0>`.
pub fn apply_linear_map(g: &LinearMap, v: &State) -> State {
    let mut out = State::zero(v.sector);
    for (mono, coeff) in &v.terms {
        // build right-to-left so each factor is a plain creation insert
        let mut acc = State::vacuum(v.sector);
        let mut ok = true;
        for slot in mono.factors.iter().rev() {
            let img = g.apply_gen(slot.gen);
            let next = apply_vector_mode(img, -slot.depth, &acc);
            if next.is_zero() {
                ok = false;
                break;
            }
            acc = next;
        }
        if ok {
            out = out.add(&acc.scale(coeff));
        }
    }
    out
}

/// Equivariance residual `g(a_(n) b) - (g a)_(n) (g b)`; zero for
/// symplectic g.
pub fn automorphism_residual(g: &LinearMap, a: &State, n: i64, b: &State) -> State {
    assert!(
        crate::symplectic::is_symplectic(g),
        "automorphism residual requires a symplectic map"
    );
    let lhs = apply_linear_map(g, &field_mode(a, n, b));
    let rhs = field_mode(&apply_linear_map(g, a), n, &apply_linear_map(g, b));
    lhs.sub(&rhs)
}

/// Gram matrix of the bilinear form on the full weight-n basis.
pub fn gram_matrix(d: usize, weight: i64) -> Vec<Vec<Scalar>> {
    let basis = enumerate_basis(Sector::Untwisted, Half::from_int(weight), d);
    let states: Vec<State> = basis
        .iter()
        .map(|m| State::monomial(Sector::Untwisted, m.clone(), Scalar::one()))
        .collect();
    states
        .iter()
        .map(|u| states.iter().map(|v| bilinear_form(u, v)).collect())
        .collect()
}

/// Exact rank of a dense rational matrix.
pub fn dense_rank(mut mat: Vec<Vec<Scalar>>) -> usize {
    if mat.is_empty() {
        return 0;
    }
    let rows = mat.len();
    let cols = mat[0].len();
    let mut rank = 0;
    for col in 0..cols {
        if let Some(p) = (rank..rows).find(|&r| !mat[r][col].is_zero()) {
            mat.swap(rank, p);
            let inv = mat[rank][col].clone();
            for r in 0..rows {
                if r != rank && !mat[r][col].is_zero() {
                    let factor = &mat[r][col] / &inv;
                    for c in col..cols {
                        let t = &mat[rank][c] * &factor;
                        mat[r][c] -= t;
                    }
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::ModeIndex;
    use crate::scalar::rat;
    use crate::symplectic::{shear_ef, swap_ef};

    fn mono(slots: &[(Gen, i64)]) -> Monomial {
        Monomial {
            factors: slots
                .iter()
                .map(|(g, n)| ModeIndex::new(*g, Half::from_int(*n)))
                .collect(),
        }
    }

    fn state(slots: &[(Gen, i64)]) -> State {
        State::monomial(Sector::Untwisted, mono(slots), Scalar::one())
    }

    fn e(i: usize) -> Gen {
        Gen::e(i)
    }
    fn f(i: usize) -> Gen {
        Gen::f(i)
    }

    #[test]
    fn vacuum_axioms() {
        // a_(n) |0> = 0 for n >= 0, a_(-1) |0> = a
        let a = state(&[(e(1), 2), (f(1), 1)]);
        let vac = State::vacuum(Sector::Untwisted);
        for n in 0..4 {
            assert!(field_mode(&a, n, &vac).is_zero());
        }
        assert_eq!(field_mode(&a, -1, &vac), a);
        // psi_(n) |0> = 0 for psi in h, n >= 0
        let psi = state(&[(e(1), 1)]);
        assert!(field_mode(&psi, 0, &vac).is_zero());
    }

    #[test]
    fn omega_products() {
        for d in 1..=3 {
            let w = virasoro_vector(d);
            // omega_(1) omega = 2 omega, omega_(2) omega = 0,
            // omega_(3) omega = -d |0>, omega_(0) omega = omega_(-2)|0>
            assert_eq!(field_mode(&w, 1, &w), w.scale(&int(2)));
            assert!(field_mode(&w, 2, &w).is_zero());
            assert_eq!(
                field_mode(&w, 3, &w),
                State::vacuum(Sector::Untwisted).scale(&int(-(d as i64)))
            );
            let vac = State::vacuum(Sector::Untwisted);
            assert_eq!(field_mode(&w, 0, &w), field_mode(&w, -2, &vac));
        }
    }

    #[test]
    fn l0_weights_and_primary_h() {
        let d = 1;
        let psi = state(&[(f(1), 1)]);
        assert_eq!(virasoro(d, 0, &psi), psi);
        for i in 1..=3 {
            assert!(virasoro(d, i, &psi).is_zero());
        }
        // L_{-1} a = a_(-2)|0> on a = e(-1)f(-1)|0>
        let a = state(&[(e(1), 1), (f(1), 1)]);
        let vac = State::vacuum(Sector::Untwisted);
        assert_eq!(virasoro(d, -1, &a), field_mode(&a, -2, &vac));
    }

    #[test]
    fn virasoro_bracket_central_charge() {
        // [L_m, L_n] u = (m-n) L_{m+n} u + ((m^3-m)/12)(-2d) delta_{m+n,0} u
        for d in 1..=2usize {
            for w in 0..=3i64 {
                for mono in enumerate_basis(Sector::Untwisted, Half::from_int(w), d) {
                    let u = State::monomial(Sector::Untwisted, mono, Scalar::one());
                    for m in -2..=2i64 {
                        for n in -2..=2i64 {
                            let lhs = virasoro(d, m, &virasoro(d, n, &u)).sub(&virasoro(
                                d,
                                n,
                                &virasoro(d, m, &u),
                            ));
                            let mut rhs = virasoro(d, m + n, &u).scale(&int(m - n));
                            if m + n == 0 {
                                let c = rat(m * m * m - m, 12) * int(-2 * d as i64);
                                rhs = rhs.add(&u.scale(&c));
                            }
                            assert_eq!(lhs, rhs, "d={} m={} n={}", d, m, n);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn l_psi_bracket() {
        // [L_n, psi_(m)] = -m psi_(m+n)
        let d = 1;
        for w in 0..=4i64 {
            for mono in enumerate_basis(Sector::Untwisted, Half::from_int(w), d) {
                let u = State::monomial(Sector::Untwisted, mono, Scalar::one());
                for g in Gen::all(d) {
                    for n in -2..=2i64 {
                        for m in -2..=2i64 {
                            let pm = |k: i64, x: &State| apply_mode(g, Half::from_int(k), x);
                            let lhs = virasoro(d, n, &pm(m, &u)).sub(&pm(m, &virasoro(d, n, &u)));
                            let rhs = pm(m + n, &u).scale(&int(-m));
                            assert_eq!(lhs, rhs, "n={} m={}", n, m);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn translation_axiom() {
        // (L_{-1} a)_(n) = -n a_(n-1) on sampled homogeneous a
        let d = 1;
        for wa in 1..=4i64 {
            for amono in enumerate_basis(Sector::Untwisted, Half::from_int(wa), d) {
                let a = State::monomial(Sector::Untwisted, amono, Scalar::one());
                let la = virasoro(d, -1, &a);
                for wu in 0..=2i64 {
                    for umono in enumerate_basis(Sector::Untwisted, Half::from_int(wu), d) {
                        let u = State::monomial(Sector::Untwisted, umono, Scalar::one());
                        for n in -2..=3i64 {
                            let lhs = field_mode(&la, n, &u);
                            let rhs = field_mode(&a, n - 1, &u).scale(&int(-n));
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn borcherds_small_cases() {
        let psi = state(&[(e(1), 1)]);
        let phi = state(&[(f(1), 1)]);
        let vac = State::vacuum(Sector::Untwisted);
        assert!(borcherds_residual(&psi, &phi, &vac, 0, 0, -1).is_zero());
        let w = virasoro_vector(1);
        let u = state(&[(e(1), 1), (f(1), 1)]);
        assert!(borcherds_residual(&w, &w, &u, 1, 1, 0).is_zero());
        assert!(borcherds_residual(&psi, &psi, &u, -2, 1, -1).is_zero());
    }

    #[test]
    fn grading_of_modes() {
        // a in V_k applied at mode n maps weight m to k + m - n - 1
        let a = state(&[(e(1), 2), (f(1), 1)]); // weight 3
        for w in 0..=3i64 {
            for umono in enumerate_basis(Sector::Untwisted, Half::from_int(w), 1) {
                let u = State::monomial(Sector::Untwisted, umono, Scalar::one());
                for n in -3..=5i64 {
                    let r = field_mode(&a, n, &u);
                    if let Some(rw) = r.homogeneous_weight() {
                        assert_eq!(rw, Half::from_int(3 + w - n - 1));
                    }
                }
            }
        }
    }

    #[test]
    fn bilinear_form_values() {
        let vac = State::vacuum(Sector::Untwisted);
        assert_eq!(bilinear_form(&vac, &vac), int(1));
        assert_eq!(
            bilinear_form(&state(&[(e(1), 1)]), &state(&[(f(1), 1)])),
            int(1)
        );
        // weight mismatch pairs to zero
        assert_eq!(
            bilinear_form(&state(&[(e(1), 2)]), &state(&[(f(1), 1)])),
            int(0)
        );
        // parities are mutually orthogonal
        assert_eq!(bilinear_form(&state(&[(e(1), 1)]), &vac), int(0));
    }

    #[test]
    fn gram_nondegenerate() {
        for d in 1..=2 {
            for w in 0..=4i64 {
                let g = gram_matrix(d, w);
                let n = g.len();
                assert_eq!(dense_rank(g), n, "degenerate Gram at d={} weight {}", d, w);
            }
        }
    }

    #[test]
    fn invariance_examples() {
        let d = 1;
        // psi in h against mixed states
        let psi = state(&[(e(1), 1)]);
        let u = state(&[(f(1), 1)]);
        let v = state(&[(e(1), 1)]);
        for n in -2..=2i64 {
            assert!(invariance_residual(d, &psi, &u, &v, n).is_zero());
        }
        let w = virasoro_vector(d);
        assert!(invariance_residual(d, &w, &w, &w, 1).is_zero());
    }

    #[test]
    fn singular_vectors() {
        let d = 1;
        assert!(is_singular(&State::vacuum(Sector::Untwisted), d));
        // e(-1)|0> is killed by e-modes but not f-modes
        assert!(!is_singular(&state(&[(e(1), 1)]), d));
        assert!(is_singular(
            &State::vacuum(Sector::Untwisted).scale(&int(7)),
            d
        ));
    }

    #[test]
    fn automorphism_equivariance() {
        let d = 1;
        let id = LinearMap::identity(d);
        let w = virasoro_vector(d);
        assert!(automorphism_residual(&id, &w, 1, &w).is_zero());
        for g in [swap_ef(d), shear_ef(d)] {
            assert_eq!(
                apply_linear_map(&g, &w),
                w,
                "omega must be basis-independent"
            );
            let a = state(&[(e(1), 2), (f(1), 1)]);
            let b = state(&[(e(1), 1), (f(1), 1)]);
            for n in -2..=3i64 {
                assert!(automorphism_residual(&g, &a, n, &b).is_zero(), "n={}", n);
            }
        }
    }
}
