//! Catalog of Zhu-algebra and C2 relations with certificate-backed
//! verification.
//!
//! Relation ids mirror the source equation tags: `prop4.4/...` for the
//! d = 1 Zhu relations, `eq3.12`..`eq3.21` for the d = 1 C2-quotient
//! relations, `lemma3.2` / `lemma4.3` for the B/Theta reduction lemmas,
//! `eq4.12`..`eq4.14` for the Theta product expansions, and
//! `eq4.26`..`eq4.49` for the d = 2 identities (verified at i = 1, j = 2).
//!
//! Zhu relations are certified by an O(V)-membership solve at a fixed
//! pair cut: d = 1 at cut 14, d = 2 at cut 9. The degree-5 relation
//! eq4.49 cannot carry a flat cut-9 certificate (its representative
//! reaches weight 10, above anything a pair of total weight <= 9 spans);
//! it is certified the way it is derived: through the one-pair
//! subalgebra, giving an exact membership witness with pairs of total
//! weight <= 14 supported on a single symplectic pair.

use std::cell::OnceCell;

use num::Zero;

use crate::fock::{Monomial, Sector, State};
use crate::linalg::Echelon;
use crate::scalar::{binom_int, int, rat, Scalar};
use crate::symplectic::{form, Gen};
use crate::vertex::{virasoro, virasoro_vector};

use super::{
    b_state, gamma_rep, gen_cap_e, gen_cap_f, gen_cap_h, gen_e, gen_f, gen_h, phi_involution,
    star_lin, star_product, theta_rep, word_state, C2Engine, Membership, OPool,
};

/// Shared verification context for one value of d.
pub struct ZhuLab {
    pub d: usize,
    pub pool: OPool,
    pub c2: C2Engine,
    /// One-pair subalgebra pool, built on demand for eq4.49.
    pair_pool: OnceCell<OPool>,
}

impl ZhuLab {
    /// Pool cuts are pinned: d = 1 relations at cut 14, d = 2 at cut 9.
    pub fn new(d: usize) -> ZhuLab {
        let (cut, c2cut) = match d {
            1 => (14, 12),
            2 => (9, 9),
            _ => panic!("relation catalog covers d = 1 and d = 2"),
        };
        ZhuLab {
            d,
            pool: OPool::new(d, cut),
            c2: C2Engine::new(d, c2cut),
            pair_pool: OnceCell::new(),
        }
    }

    fn pair_pool(&self) -> &OPool {
        self.pair_pool.get_or_init(|| OPool::new(1, 14))
    }
}

#[derive(Clone, Debug)]
pub struct RelationReport {
    pub id: String,
    pub d: usize,
    pub pass: bool,
    /// A failed membership solve is one-sided: the relation may still
    /// hold with pairs beyond the cut.
    pub inconclusive: bool,
    pub witness: String,
}

/// All relation ids for the given d, in catalog order.
pub fn relation_ids(d: usize) -> Vec<String> {
    match d {
        1 => vec![
            "prop4.4/w-poly",
            "prop4.4/wE",
            "prop4.4/wH",
            "prop4.4/wF",
            "prop4.4/E2",
            "prop4.4/F2",
            "prop4.4/H2",
            "prop4.4/HE",
            "prop4.4/EH",
            "prop4.4/HF",
            "prop4.4/FH",
            "prop4.4/EF",
            "prop4.4/FE",
            "lemma3.2",
            "lemma4.3",
            "eq4.12/m2",
            "eq4.12/m3",
            "eq4.12/m4",
            "eq4.12/m5",
            "eq4.13/m3",
            "eq4.13/m4",
            "eq4.14",
            "eq3.12",
            "eq3.17",
            "eq3.18",
            "eq3.19",
            "eq3.20",
            "eq3.21",
            "center/omega",
            "assoc/wEF",
            "assoc/EHF",
            "phi/antihom",
        ]
        .into_iter()
        .map(String::from)
        .collect(),
        2 => vec![
            "eq4.26", "eq4.27", "eq4.28", "eq4.29", "eq4.30", "eq4.31", "eq4.32", "eq4.33",
            "eq4.34", "eq4.35", "eq4.36", "eq4.37", "eq4.38", "eq4.39", "eq4.40", "eq4.41",
            "eq4.42", "eq4.43", "eq4.44", "eq4.46", "eq4.48", "eq4.49",
        ]
        .into_iter()
        .map(String::from)
        .collect(),
        _ => Vec::new(),
    }
}

/// Verify every relation of the lab's catalog.
pub fn verify_all(lab: &ZhuLab) -> Vec<RelationReport> {
    relation_ids(lab.d)
        .iter()
        .map(|id| verify_relation(lab, id))
        .collect()
}

/// Certify `target` as a member of O(V) through the lab's pool.
fn certify(lab: &ZhuLab, id: &str, target: &State) -> RelationReport {
    match lab.pool.membership(target) {
        Membership::Found(cert) => RelationReport {
            id: id.to_string(),
            d: lab.d,
            pass: true,
            inconclusive: false,
            witness: format!(
                "O(V) certificate, {} circle-product pairs",
                cert.pairs.len()
            ),
        },
        Membership::NotFoundWithinCut { cut, residual } => RelationReport {
            id: id.to_string(),
            d: lab.d,
            pass: false,
            inconclusive: true,
            witness: format!(
                "no certificate within cut {}; residual = {}",
                cut,
                residual.display()
            ),
        },
    }
}

/// Certify several targets under one id.
fn certify_many(lab: &ZhuLab, id: &str, targets: &[State]) -> RelationReport {
    let mut pairs = 0usize;
    for t in targets {
        match lab.pool.membership(t) {
            Membership::Found(cert) => pairs += cert.pairs.len(),
            Membership::NotFoundWithinCut { cut, residual } => {
                return RelationReport {
                    id: id.to_string(),
                    d: lab.d,
                    pass: false,
                    inconclusive: true,
                    witness: format!(
                        "no certificate within cut {}; residual = {}",
                        cut,
                        residual.display()
                    ),
                }
            }
        }
    }
    RelationReport {
        id: id.to_string(),
        d: lab.d,
        pass: true,
        inconclusive: false,
        witness: format!(
            "O(V) certificates for {} targets, {} pairs total",
            targets.len(),
            pairs
        ),
    }
}

/// Pass iff all the reduced C2-quotient differences vanish.
fn c2_zero(lab: &ZhuLab, id: &str, diffs: &[State]) -> RelationReport {
    for dstate in diffs {
        if !dstate.is_zero() {
            return RelationReport {
                id: id.to_string(),
                d: lab.d,
                pass: false,
                inconclusive: false,
                witness: format!("nonzero in the C2 quotient: {}", dstate.display()),
            };
        }
    }
    RelationReport {
        id: id.to_string(),
        d: lab.d,
        pass: true,
        inconclusive: false,
        witness: format!("{} differences vanish in V/C2(V)", diffs.len()),
    }
}

/// Representative of `sum coeffs[k] [omega]^k` (index = power), evaluated
/// by unreduced star products so flat certificates stay available.
fn omega_poly(d: usize, coeffs: &[Scalar]) -> State {
    let w = virasoro_vector(d);
    let mut powers: Vec<State> = vec![State::vacuum(Sector::Untwisted)];
    for k in 1..coeffs.len() {
        let prev = powers[k - 1].clone();
        powers.push(star_product(&w, &prev));
    }
    let mut out = State::zero(Sector::Untwisted);
    for (k, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            out = out.add(&powers[k].scale(c));
        }
    }
    out
}

/// `([w]-1)*(8[w]-3)*x` applied from the left, unreduced.
fn wx_chain(d: usize, x: &State) -> State {
    let w = virasoro_vector(d);
    let y = star_product(&w, x).scale(&int(8)).add(&x.scale(&int(-3)));
    star_product(&w, &y).sub(&y)
}

pub fn verify_relation(lab: &ZhuLab, id: &str) -> RelationReport {
    match lab.d {
        1 => verify_d1(lab, id),
        2 => verify_d2(lab, id),
        _ => unreachable!(),
    }
}

fn verify_d1(lab: &ZhuLab, id: &str) -> RelationReport {
    let d = 1usize;
    let e = Gen::e(1);
    let f = Gen::f(1);
    let w = virasoro_vector(d);
    let cap_e = gen_cap_e(1, 1);
    let cap_h = gen_cap_h(1, 1);
    let cap_f = gen_cap_f(1, 1);
    // [w]^2 (8[w]+1) = 8 w^3 + w^2 as an unreduced representative
    let w2_8w1 = omega_poly(d, &[int(0), int(0), int(1), int(8)]);
    let six_w_minus_1 = |x: &State| star_product(&w, x).scale(&int(6)).sub(x);

    match id {
        // ----- Zhu relations for d = 1 -----
        "prop4.4/w-poly" => {
            // [w]^2 (8[w]+1)([w]-1)(8[w]-3) = 64w^5 - 80w^4 + 13w^3 + 3w^2
            let t = omega_poly(d, &[int(0), int(0), int(3), int(13), int(-80), int(64)]);
            certify(lab, id, &t)
        }
        "prop4.4/wE" => certify(lab, id, &wx_chain(d, &cap_e)),
        "prop4.4/wH" => certify(lab, id, &wx_chain(d, &cap_h)),
        "prop4.4/wF" => certify(lab, id, &wx_chain(d, &cap_f)),
        "prop4.4/E2" => certify(lab, id, &star_product(&cap_e, &cap_e)),
        "prop4.4/F2" => certify(lab, id, &star_product(&cap_f, &cap_f)),
        "prop4.4/H2" => {
            let t = star_product(&cap_h, &cap_h).sub(&w2_8w1.scale(&rat(1, 9)));
            certify(lab, id, &t)
        }
        "prop4.4/HE" => {
            let t = star_product(&cap_h, &cap_e).sub(&six_w_minus_1(&cap_e).scale(&rat(1, 5)));
            certify(lab, id, &t)
        }
        "prop4.4/EH" => {
            let t = star_product(&cap_e, &cap_h).add(&six_w_minus_1(&cap_e).scale(&rat(1, 5)));
            certify(lab, id, &t)
        }
        "prop4.4/HF" => {
            let t = star_product(&cap_h, &cap_f).add(&six_w_minus_1(&cap_f).scale(&rat(1, 5)));
            certify(lab, id, &t)
        }
        "prop4.4/FH" => {
            let t = star_product(&cap_f, &cap_h).sub(&six_w_minus_1(&cap_f).scale(&rat(1, 5)));
            certify(lab, id, &t)
        }
        "prop4.4/EF" => {
            let t = star_product(&cap_e, &cap_f)
                .add(&six_w_minus_1(&cap_h).scale(&rat(2, 5)))
                .add(&w2_8w1.scale(&rat(2, 9)));
            certify(lab, id, &t)
        }
        "prop4.4/FE" => {
            let t = star_product(&cap_f, &cap_e)
                .sub(&six_w_minus_1(&cap_h).scale(&rat(2, 5)))
                .add(&w2_8w1.scale(&rat(2, 9)));
            certify(lab, id, &t)
        }

        // ----- reduction lemmas -----
        "lemma3.2" => lemma32(lab, id),
        "lemma4.3" => {
            let mut targets = Vec::new();
            for (psi, phi) in [(e, f), (f, e), (e, e), (f, f)] {
                for m in 1..=5i64 {
                    for n in 2..=(7 - m) {
                        let mut rhs = State::zero(Sector::Untwisted);
                        for jj in 0..=(n - 1) {
                            rhs = rhs
                                .add(&theta_rep(m + n - jj, psi, phi).scale(&binom_int(n - 1, jj)));
                        }
                        if n % 2 == 0 {
                            rhs = rhs.scale(&int(-1));
                        }
                        let t = b_state(m, n, psi, phi).sub(&rhs);
                        if !t.is_zero() {
                            targets.push(t);
                        }
                    }
                }
            }
            certify_many(lab, id, &targets)
        }

        // ----- Theta product expansions -----
        "eq4.12/m2" => eq412(lab, id, 2, true),
        "eq4.12/m3" => eq412(lab, id, 3, true),
        "eq4.12/m4" => eq412(lab, id, 4, false),
        "eq4.12/m5" => eq412(lab, id, 5, false),
        "eq4.13/m3" => eq413(lab, id, 3, true),
        "eq4.13/m4" => eq413(lab, id, 4, false),
        "eq4.14" => {
            // Theta_2(e,f)^2 = 6 Theta_4 + 6 Theta_3 + Theta_2
            let lhs = star_product(&theta_rep(2, e, f), &theta_rep(2, e, f));
            let rhs = theta_rep(4, e, f)
                .scale(&int(6))
                .add(&theta_rep(3, e, f).scale(&int(6)))
                .add(&theta_rep(2, e, f));
            certify(lab, id, &lhs.sub(&rhs))
        }

        // ----- C2-quotient relations -----
        "eq3.12" => {
            let g3ee = gamma_rep(3, e, e);
            let g3ff = gamma_rep(3, f, f);
            c2_zero(
                lab,
                id,
                &[lab.c2.mul(&g3ee, &g3ee), lab.c2.mul(&g3ff, &g3ff)],
            )
        }
        "eq3.17" => {
            let g3 = gamma_rep(3, e, f);
            let g2 = gamma_rep(2, e, f);
            let sq = lab.c2.mul(&g3, &g3);
            let cube = lab.c2.mul(&g2, &lab.c2.mul(&g2, &g2));
            let g6 = lab.c2.reduce(&gamma_rep(6, e, f));
            c2_zero(
                lab,
                id,
                &[
                    sq.sub(&g6.scale(&rat(2, 3))),
                    sq.sub(&cube.scale(&rat(8, 9))),
                ],
            )
        }
        "eq3.18" => {
            let g2 = gamma_rep(2, e, f);
            let cube = lab.c2.mul(&g2, &lab.c2.mul(&g2, &g2));
            let t = lab
                .c2
                .mul(&gamma_rep(3, e, e), &gamma_rep(3, f, f))
                .add(&cube.scale(&rat(16, 9)));
            c2_zero(lab, id, &[t])
        }
        "eq3.19" => c2_zero(
            lab,
            id,
            &[
                lab.c2.mul(&cap_e, &cap_e),
                lab.c2.mul(&cap_f, &cap_f),
                lab.c2.mul(&cap_h, &cap_e),
                lab.c2.mul(&cap_h, &cap_f),
            ],
        ),
        "eq3.20" => {
            let h2 = lab.c2.mul(&cap_h, &cap_h);
            let w3 = lab.c2.mul(&w, &lab.c2.mul(&w, &w));
            c2_zero(
                lab,
                id,
                &[
                    h2.scale(&int(2)).add(&lab.c2.mul(&cap_e, &cap_f)),
                    h2.scale(&int(2)).sub(&w3.scale(&rat(16, 9))),
                ],
            )
        }
        "eq3.21" => {
            let ww = |x: &State| lab.c2.mul(&w, &lab.c2.mul(&w, x));
            c2_zero(lab, id, &[ww(&cap_e), ww(&cap_h), ww(&cap_f)])
        }

        // ----- structural properties of the Zhu product -----
        "center/omega" => {
            // [w]*[x] - [x]*[w] lies in O(V) for every cubic generator
            let targets: Vec<State> = [&cap_e, &cap_h, &cap_f]
                .iter()
                .map(|x| star_product(&w, x).sub(&star_product(x, &w)))
                .collect();
            certify_many(lab, id, &targets)
        }
        "assoc/wEF" => {
            let t = star_lin(&star_product(&w, &cap_e), &cap_f)
                .sub(&star_product(&w, &star_product(&cap_e, &cap_f)));
            certify(lab, id, &t)
        }
        "assoc/EHF" => {
            let t = star_lin(&star_product(&cap_e, &cap_h), &cap_f)
                .sub(&star_product(&cap_e, &star_product(&cap_h, &cap_f)));
            certify(lab, id, &t)
        }
        "phi/antihom" => {
            let mut targets = Vec::new();
            for (a, b) in [
                (&w, &cap_e),
                (&cap_e, &cap_h),
                (&cap_h, &cap_f),
                (&cap_e, &cap_f),
            ] {
                let lhs = phi_involution(d, &star_lin(a, b));
                let rhs = star_lin(&phi_involution(d, b), &phi_involution(d, a));
                targets.push(lhs.sub(&rhs));
            }
            certify_many(lab, id, &targets)
        }
        _ => RelationReport {
            id: id.to_string(),
            d,
            pass: false,
            inconclusive: false,
            witness: "unknown relation id".to_string(),
        },
    }
}

/// Lemma: B_{m,n} - (-1)^{n-1} B_{m+n-1,1} lies in the span of
/// L_{-1} B_{m+n-1-i,i}, solved exactly per (m, n).
fn lemma32(lab: &ZhuLab, id: &str) -> RelationReport {
    let d = lab.d;
    let pairs = [(Gen::e(1), Gen::f(1)), (Gen::e(1), Gen::e(1))];
    let mut count = 0usize;
    for (psi, phi) in pairs {
        for m in 1..=6i64 {
            for n in 2..=(8 - m) {
                let p = m + n;
                let mut target = b_state(m, n, psi, phi);
                let flip = b_state(p - 1, 1, psi, phi);
                if n % 2 == 1 {
                    target = target.sub(&flip);
                } else {
                    target = target.add(&flip);
                }
                if target.is_zero() {
                    continue;
                }
                // span columns L_{-1} B_{p-1-i,i}
                let basis = super::GradedBasis::even(d, p + 1);
                let mut ech = Echelon::new();
                for i in 1..=(p - 2) {
                    let col = virasoro(d, -1, &b_state(p - 1 - i, i, psi, phi));
                    if !col.is_zero() {
                        ech.insert(basis.coords(&col));
                    }
                }
                if !ech.reduce_untracked(&basis.coords(&target)).is_empty() {
                    return RelationReport {
                        id: id.to_string(),
                        d,
                        pass: false,
                        inconclusive: true,
                        witness: format!("B_{{{},{}}} not in the L_{{-1}} span", m, n),
                    };
                }
                count += 1;
            }
        }
    }
    RelationReport {
        id: id.to_string(),
        d,
        pass: true,
        inconclusive: false,
        witness: format!("{} exact span solves", count),
    }
}

/// Structured tuple filter for the larger-m spot checks.
fn keep_tuple(psi: Gen, phi: Gen, xi: Gen, eta: Gen) -> bool {
    matches!(
        (psi.is_e(), phi.is_e(), xi.is_e(), eta.is_e()),
        (true, false, true, false)
            | (false, true, true, false)
            | (true, true, false, false)
            | (false, false, true, true)
    )
}

/// The Theta_2 * Theta_m expansion, checked for either all 16 generator
/// tuples or a structured subset.
fn eq412(lab: &ZhuLab, id: &str, m: i64, all_tuples: bool) -> RelationReport {
    let gens = [Gen::e(1), Gen::f(1)];
    let mut targets = Vec::new();
    for psi in gens {
        for phi in gens {
            for xi in gens {
                for eta in gens {
                    if !all_tuples && !keep_tuple(psi, phi, xi, eta) {
                        continue;
                    }
                    let lhs = star_product(&theta_rep(2, psi, phi), &theta_rep(m, xi, eta));
                    let quad = word_state(&[(psi, 1), (phi, 1), (xi, m - 1), (eta, 1)])
                        .scale(&(int(1) / int(m - 1)));
                    let block = |a: Gen, b: Gen, c2: Scalar, c1: Scalar, c0: Scalar| {
                        theta_rep(m + 2, a, b)
                            .scale(&c2)
                            .add(&theta_rep(m + 1, a, b).scale(&c1))
                            .add(&theta_rep(m, a, b).scale(&c0))
                    };
                    let lin = |a: Gen, b: Gen| block(a, b, int(m + 1), int(2 * m), int(m - 1));
                    let binb = |a: Gen, b: Gen| {
                        block(
                            a,
                            b,
                            binom_int(m + 1, 2),
                            binom_int(m, 2) * int(2),
                            binom_int(m - 1, 2),
                        )
                    };
                    let rhs = quad
                        .add(&lin(psi, eta).scale(&form(phi, xi)))
                        .sub(&lin(phi, eta).scale(&form(psi, xi)))
                        .add(&binb(xi, psi).scale(&form(phi, eta)))
                        .sub(&binb(xi, phi).scale(&form(psi, eta)));
                    targets.push(lhs.sub(&rhs));
                }
            }
        }
    }
    certify_many(lab, id, &targets)
}

/// The Theta_3 * Theta_m expansion.
fn eq413(lab: &ZhuLab, id: &str, m: i64, all_tuples: bool) -> RelationReport {
    let gens = [Gen::e(1), Gen::f(1)];
    let mut targets = Vec::new();
    for psi in gens {
        for phi in gens {
            for xi in gens {
                for eta in gens {
                    if !all_tuples && !keep_tuple(psi, phi, xi, eta) {
                        continue;
                    }
                    let lhs = star_product(&theta_rep(3, psi, phi), &theta_rep(m, xi, eta));
                    let quad = word_state(&[(psi, 2), (phi, 1), (xi, m - 1), (eta, 1)])
                        .scale(&(int(1) / int(2 * (m - 1))));
                    let theta4 =
                        |a: Gen, b: Gen, c3: Scalar, c2: Scalar, c1: Scalar, c0: Scalar| {
                            theta_rep(m + 3, a, b)
                                .scale(&c3)
                                .add(&theta_rep(m + 2, a, b).scale(&c2))
                                .add(&theta_rep(m + 1, a, b).scale(&c1))
                                .add(&theta_rep(m, a, b).scale(&c0))
                        };
                    let rhs = quad
                        .add(
                            &theta4(
                                psi,
                                eta,
                                binom_int(m + 2, 2),
                                binom_int(m + 1, 2) * int(3),
                                binom_int(m, 2) * int(3),
                                binom_int(m - 1, 2),
                            )
                            .scale(&form(phi, xi)),
                        )
                        .add(
                            &theta4(
                                phi,
                                eta,
                                int(m + 2),
                                int(3 * (m + 1)),
                                int(3 * m),
                                int(m - 1),
                            )
                            .scale(&(form(psi, xi) * rat(m, 2))),
                        )
                        .sub(
                            &theta4(
                                xi,
                                psi,
                                binom_int(m + 2, 3),
                                int(m) * binom_int(m + 1, 2),
                                int(m) * binom_int(m, 2),
                                binom_int(m, 3),
                            )
                            .scale(&(form(phi, eta) * rat(3, 2))),
                        )
                        .sub(
                            &theta4(
                                xi,
                                phi,
                                binom_int(m + 2, 3),
                                binom_int(m + 1, 3) * int(3),
                                binom_int(m, 3) * int(3),
                                binom_int(m - 1, 3),
                            )
                            .scale(&form(psi, eta)),
                        );
                    targets.push(lhs.sub(&rhs));
                }
            }
        }
    }
    certify_many(lab, id, &targets)
}

fn verify_d2(lab: &ZhuLab, id: &str) -> RelationReport {
    let (i, j) = (1usize, 2usize);
    let ei = Gen::e(i);
    let ej = Gen::e(j);
    let fi = Gen::f(i);
    let fj = Gen::f(j);
    let h_ii = gen_h(i, i);
    let h_jj = gen_h(j, j);
    let h_ij = gen_h(i, j);
    let h_ji = gen_h(j, i);
    let e_ij = gen_e(i, j);
    let f_ij = gen_f(i, j);
    let diff = h_ii.sub(&h_jj);
    let diff_sq = star_lin(&diff, &diff);
    let theta_combo = |c4: i64, c3: i64, c2: i64, a: Gen, b: Gen| {
        theta_rep(4, a, b)
            .scale(&int(c4))
            .add(&theta_rep(3, a, b).scale(&int(c3)))
            .add(&theta_rep(2, a, b).scale(&int(c2)))
    };

    match id {
        "eq4.26" => certify(
            lab,
            id,
            &star_product(&h_ii, &e_ij).sub(&theta_combo(3, 4, 1, ei, ej)),
        ),
        "eq4.27" => certify(
            lab,
            id,
            &star_product(&h_jj, &e_ij).sub(&theta_combo(3, 2, 0, ei, ej)),
        ),
        "eq4.28" => certify(
            lab,
            id,
            &star_product(&h_ii, &h_ij).sub(&theta_combo(3, 4, 1, ei, fj)),
        ),
        "eq4.29" => certify(
            lab,
            id,
            &star_product(&h_jj, &h_ij).sub(&theta_combo(3, 2, 0, ei, fj)),
        ),
        "eq4.30" => certify(
            lab,
            id,
            &star_product(&h_ii, &f_ij).sub(&theta_combo(3, 4, 1, fi, fj)),
        ),
        "eq4.31" => certify(
            lab,
            id,
            &star_product(&h_jj, &f_ij).sub(&theta_combo(3, 2, 0, fi, fj)),
        ),
        "eq4.32" => {
            let t = gen_cap_e(i, j)
                .sub(&star_product(&h_ii, &e_ij))
                .add(&star_product(&h_jj, &e_ij));
            certify(lab, id, &t)
        }
        "eq4.33" => {
            let t = gen_cap_h(i, j)
                .sub(&star_product(&h_ii, &h_ij))
                .add(&star_product(&h_jj, &h_ij));
            certify(lab, id, &t)
        }
        "eq4.34" => {
            let t = gen_cap_f(i, j)
                .sub(&star_product(&h_ii, &f_ij))
                .add(&star_product(&h_jj, &f_ij));
            certify(lab, id, &t)
        }
        "eq4.35" => {
            // direct mode computation (confirmed by the module action)
            // gives [h^{ij}]*[e^{ij}] = -(3 Theta_4 + 4 Theta_3)(e^i, e^i)
            let rhs = theta_rep(4, ei, ei)
                .scale(&int(3))
                .add(&theta_rep(3, ei, ei).scale(&int(4)));
            certify(lab, id, &star_product(&h_ij, &e_ij).add(&rhs))
        }
        "eq4.36" => {
            let rhs = theta_rep(4, fi, fi)
                .scale(&int(3))
                .add(&theta_rep(3, fi, fi).scale(&int(2)));
            certify(lab, id, &star_product(&h_ji, &f_ij).sub(&rhs))
        }
        "eq4.37" => {
            // E-part sign follows the corrected eq4.35:
            // [E^{ii}] = -2 [h^{ij}]*[e^{ij}], [F^{ii}] = -2 [h^{ji}]*[f^{ij}]
            let te = gen_cap_e(i, i).add(&star_product(&h_ij, &e_ij).scale(&int(2)));
            let tf = gen_cap_f(i, i).add(&star_product(&h_ji, &f_ij).scale(&int(2)));
            certify_many(lab, id, &[te, tf])
        }
        "eq4.38" => {
            let rhs = gen_cap_h(i, i)
                .add(&gen_cap_h(j, j))
                .scale(&rat(1, 2))
                .add(&diff_sq.scale(&rat(1, 2)));
            certify(lab, id, &star_product(&e_ij, &f_ij).sub(&rhs))
        }
        "eq4.39" => {
            let rhs = gen_cap_h(i, i)
                .sub(&gen_cap_h(j, j))
                .scale(&rat(1, 2))
                .add(&diff_sq.scale(&rat(1, 2)));
            certify(lab, id, &star_product(&h_ij, &h_ji).sub(&rhs))
        }
        "eq4.40" => {
            let t = gen_cap_h(j, j)
                .sub(&star_product(&e_ij, &f_ij))
                .add(&star_product(&h_ij, &h_ji));
            certify(lab, id, &t)
        }
        "eq4.41" => {
            let t = gen_cap_h(i, i)
                .sub(&star_product(&e_ij, &f_ij))
                .sub(&star_product(&h_ij, &h_ji))
                .add(&diff_sq);
            certify(lab, id, &t)
        }
        "eq4.42" => {
            let targets: Vec<State> = [&e_ij, &h_ij, &h_ji, &f_ij]
                .iter()
                .map(|x| star_product(&h_ii, x).sub(&star_product(x, &h_jj)))
                .collect();
            certify_many(lab, id, &targets)
        }
        "eq4.43" => {
            let targets: Vec<State> = [&e_ij, &f_ij]
                .iter()
                .map(|y| star_product(&h_ij, y).add(&star_product(y, &h_ij)))
                .collect();
            certify_many(lab, id, &targets)
        }
        "eq4.44" => {
            let t = star_product(&e_ij, &f_ij)
                .add(&star_product(&f_ij, &e_ij))
                .sub(&diff_sq);
            certify(lab, id, &t)
        }
        "eq4.46" => {
            let t = star_product(&h_ij, &h_ji)
                .add(&star_product(&h_ji, &h_ij))
                .sub(&diff_sq);
            certify(lab, id, &t)
        }
        "eq4.48" => {
            let cap_e_ii = gen_cap_e(i, i);
            let lhs = star_lin(&diff_sq, &cap_e_ii);
            let corr = star_product(&h_ii, &cap_e_ii)
                .scale(&int(6))
                .sub(&cap_e_ii)
                .scale(&rat(1, 5));
            certify(lab, id, &lhs.sub(&corr))
        }
        "eq4.49" => eq449(lab, id),
        _ => RelationReport {
            id: id.to_string(),
            d: lab.d,
            pass: false,
            inconclusive: false,
            witness: "unknown relation id".to_string(),
        },
    }
}

/// The degree-5 polynomial relation for [h^{i,i}], certified through the
/// one-pair subalgebra: the flat representative reaches weight 10, which
/// no pair of total weight <= 9 can span, so the certificate is found in
/// the pair-i copy of the d = 1 algebra (pairs of total weight <= 14,
/// all supported on generators e^i, f^i) and re-verified as an exact
/// statement about d = 2 states.
fn eq449(lab: &ZhuLab, id: &str) -> RelationReport {
    let pool1 = lab.pair_pool();
    let target_d1 = omega_poly(1, &[int(0), int(0), int(3), int(13), int(-80), int(64)]);
    let cert = match pool1.membership(&target_d1) {
        Membership::Found(c) => c,
        Membership::NotFoundWithinCut { cut, .. } => {
            return RelationReport {
                id: id.to_string(),
                d: lab.d,
                pass: false,
                inconclusive: true,
                witness: format!("one-pair certificate missing at cut {}", cut),
            }
        }
    };
    // verify on both symplectic pairs: pair 1 is verbatim, pair 2 by
    // generator relabeling; both checks recompute every circle product as
    // d = 2 states
    let mut pair_counts = Vec::new();
    for pair in 1..=2usize {
        let relabel = |m: &Monomial| -> Monomial {
            Monomial {
                factors: m
                    .factors
                    .iter()
                    .map(|slot| {
                        let g = if slot.gen.is_e() {
                            Gen::e(pair)
                        } else {
                            Gen::f(pair)
                        };
                        crate::fock::ModeIndex::new(g, slot.depth)
                    })
                    .collect(),
            }
        };
        let cert_i = super::Certificate {
            pairs: cert
                .pairs
                .iter()
                .map(|(a, b, c)| (relabel(a), relabel(b), c.clone()))
                .collect(),
        };
        let target_i: State = {
            let mut out = State::zero(Sector::Untwisted);
            for (m, c) in &target_d1.terms {
                out.add_term(relabel(m), c.clone());
            }
            out
        };
        // cross-check the target against a fresh d = 2 evaluation of the
        // polynomial in [h^{pair,pair}]
        let h = gen_h(pair, pair);
        let mut powers: Vec<State> = vec![State::vacuum(Sector::Untwisted)];
        for k in 1..=5 {
            let prev = powers[k - 1].clone();
            powers.push(star_product(&h, &prev));
        }
        let fresh = powers[5]
            .scale(&int(64))
            .add(&powers[4].scale(&int(-80)))
            .add(&powers[3].scale(&int(13)))
            .add(&powers[2].scale(&int(3)));
        if fresh != target_i {
            return RelationReport {
                id: id.to_string(),
                d: lab.d,
                pass: false,
                witness: format!(
                    "pair-{} polynomial disagrees with the embedded target",
                    pair
                ),
            };
        }
        if !cert_i.verify(&target_i) {
            return RelationReport {
                id: id.to_string(),
                d: lab.d,
                pass: false,
                inconclusive: false,
                witness: format!("pair-{} certificate failed re-evaluation", pair),
            };
        }
        pair_counts.push(cert_i.pairs.len());
    }
    RelationReport {
        id: id.to_string(),
        d: lab.d,
        pass: true,
        inconclusive: false,
        witness: format!(
            "one-pair subalgebra certificates ({} and {} pairs, total weight <= 14)",
            pair_counts[0], pair_counts[1]
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d1_c2_relations_pass() {
        let lab = ZhuLab::new(1);
        for id in ["eq3.12", "eq3.17", "eq3.18", "eq3.19", "eq3.20", "eq3.21"] {
            let r = verify_relation(&lab, id);
            assert!(r.pass, "{}: {}", r.id, r.witness);
        }
    }
}
