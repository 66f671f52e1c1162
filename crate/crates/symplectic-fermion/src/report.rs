//! The verification catalog and machine-readable reports behind the
//! `sfcheck` binary.
//!
//! Every check produces a [`CheckResult`] with a stable id, the
//! parameters it ran with, a pass/fail/inconclusive status and a witness
//! string (certificate size, residual, dimensions). Randomized suites
//! record their seed; identical (command, flags, seed) produce identical
//! outcomes.

use std::collections::BTreeMap;
use std::time::Instant;

use num::complex::Complex64;
use num::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::fock::{enumerate_basis, Sector, State};
use crate::scalar::{int, rat, Half};
use crate::symplectic::{Gen, LinearMap};
use crate::twisted::{delta_coeffs, lowest_weight_report, zero_mode_action_table, TwistedEngine};
use crate::vertex::{
    apply_linear_map, automorphism_residual, borcherds_residual, dense_rank, field_mode,
    gram_matrix, invariance_residual, parity_of, virasoro_vector,
};
use crate::zhu::relations::{relation_ids, verify_relation, ZhuLab};

pub const DEFAULT_SEED: u64 = 20260810;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub anchor: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub witness: String,
    pub wall_time_ms: u128,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn line(&self) -> String {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
        };
        format!("{:12} {:32} {}", status, self.id, self.witness)
    }
}

#[derive(Serialize)]
pub struct Report {
    pub version: String,
    pub seed: u64,
    pub config: BTreeMap<String, String>,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new(seed: u64, config: BTreeMap<String, String>, checks: Vec<CheckResult>) -> Report {
        Report {
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
            config,
            checks,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }
}

fn result(
    id: &str,
    anchor: &str,
    params: &[(&str, String)],
    pass: bool,
    witness: String,
    started: Instant,
) -> CheckResult {
    CheckResult {
        id: id.to_string(),
        anchor: anchor.to_string(),
        params: params
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect(),
        status: if pass { Status::Pass } else { Status::Fail },
        witness,
        wall_time_ms: started.elapsed().as_millis(),
    }
}

// ---------------------------------------------------------------------
// random sampling helpers
// ---------------------------------------------------------------------

/// A random parity-homogeneous state of raw weight <= max_weight with one
/// or two monomials and small integer coefficients.
pub fn sample_state(
    rng: &mut ChaCha8Rng,
    sector: Sector,
    d: usize,
    max_weight: i64,
    parity: Option<bool>,
) -> State {
    loop {
        let w = match sector {
            Sector::Twisted => Half(rng.gen_range(0..=(2 * max_weight))),
            _ => Half::from_int(rng.gen_range(0..=max_weight)),
        };
        let basis: Vec<_> = enumerate_basis(sector, w, d)
            .into_iter()
            .filter(|m| parity.map(|p| m.parity_odd() == p).unwrap_or(true))
            .collect();
        if basis.is_empty() {
            continue;
        }
        let mut s = State::zero(sector);
        let picks = rng.gen_range(1..=2usize.min(basis.len()));
        for _ in 0..picks {
            let mono = basis[rng.gen_range(0..basis.len())].clone();
            let mut c = int(rng.gen_range(1..=3i64));
            if rng.gen_bool(0.5) {
                c = -c;
            }
            s.add_term(mono, c);
        }
        if !s.is_zero() {
            return s;
        }
    }
}

/// A random rational symplectic map: a short product of elementary
/// transvections, pair swaps and cross-pair shears (checked symplectic).
pub fn sample_symplectic(rng: &mut ChaCha8Rng, d: usize) -> LinearMap {
    use crate::symplectic::{is_symplectic, swap_ef, HVector};
    let mut g = LinearMap::identity(d);
    let compose = |a: &LinearMap, b: &LinearMap| -> LinearMap {
        LinearMap {
            cols: b.cols.iter().map(|v| a.apply(v)).collect(),
        }
    };
    for _ in 0..rng.gen_range(2..=4usize) {
        let c = [int(1), int(-1), int(2), rat(1, 2)][rng.gen_range(0..4)].clone();
        let i = rng.gen_range(1..=d);
        let kind = rng.gen_range(0..if d >= 2 { 4 } else { 3 });
        let elem = match kind {
            0 => {
                // f^i -> f^i + c e^i
                let mut cols = LinearMap::identity(d).cols;
                cols[Gen::f(i).0 as usize] =
                    HVector::basis(Gen::f(i), d).add(&HVector::basis(Gen::e(i), d).scale(&c));
                LinearMap { cols }
            }
            1 => {
                // e^i -> e^i + c f^i
                let mut cols = LinearMap::identity(d).cols;
                cols[Gen::e(i).0 as usize] =
                    HVector::basis(Gen::e(i), d).add(&HVector::basis(Gen::f(i), d).scale(&c));
                LinearMap { cols }
            }
            2 => swap_ef(d),
            _ => {
                // e^i -> e^i + c e^j, f^j -> f^j - c f^i for one other pair
                let mut j = rng.gen_range(1..=d);
                if j == i {
                    j = if i == d { 1 } else { i + 1 };
                }
                let mut cols = LinearMap::identity(d).cols;
                cols[Gen::e(i).0 as usize] =
                    HVector::basis(Gen::e(i), d).add(&HVector::basis(Gen::e(j), d).scale(&c));
                cols[Gen::f(j).0 as usize] = HVector::basis(Gen::f(j), d)
                    .add(&HVector::basis(Gen::f(i), d).scale(&-c.clone()));
                LinearMap { cols }
            }
        };
        g = compose(&elem, &g);
    }
    assert!(is_symplectic(&g), "sampled map must be symplectic");
    g
}

// ---------------------------------------------------------------------
// check runners
// ---------------------------------------------------------------------

/// Central charge and the basic omega products for d = 1, 2, 3.
pub fn check_virasoro() -> Vec<CheckResult> {
    let t = Instant::now();
    let mut pass = true;
    let mut notes = Vec::new();
    for d in 1..=3usize {
        let w = virasoro_vector(d);
        let vac = State::vacuum(Sector::Untwisted);
        let ok = field_mode(&w, 1, &w) == w.scale(&int(2))
            && field_mode(&w, 2, &w).is_zero()
            && field_mode(&w, 3, &w) == vac.scale(&int(-(d as i64)))
            && field_mode(&w, 0, &w) == field_mode(&w, -2, &vac);
        if !ok {
            pass = false;
        }
        notes.push(format!("d={} ok", d));
    }
    vec![result(
        "virasoro/central-charge",
        "omega products fix central charge -2d",
        &[("d", "1,2,3".into())],
        pass,
        notes.join(", "),
        t,
    )]
}

/// Seeded untwisted Borcherds residual suite.
pub fn check_borcherds_untwisted(samples: usize, seed: u64) -> Vec<CheckResult> {
    check_borcherds_untwisted_at(samples, seed, None)
}

/// Same suite with the rank pinned (None samples d in {1, 2}).
pub fn check_borcherds_untwisted_at(
    samples: usize,
    seed: u64,
    fixed_d: Option<usize>,
) -> Vec<CheckResult> {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut zero = 0usize;
    let mut failures = Vec::new();
    for k in 0..samples {
        let d = fixed_d.unwrap_or_else(|| rng.gen_range(1..=2usize));
        let pa = rng.gen_bool(0.5);
        let pb = rng.gen_bool(0.5);
        let a = sample_state(&mut rng, Sector::Untwisted, d, 5, Some(pa));
        let b = sample_state(&mut rng, Sector::Untwisted, d, 5, Some(pb));
        let u = sample_state(&mut rng, Sector::Untwisted, d, 5, None);
        let p = rng.gen_range(-3..=3i64);
        let q = rng.gen_range(-3..=3i64);
        let r = rng.gen_range(-3..=3i64);
        let res = borcherds_residual(&a, &b, &u, p, q, r);
        if res.is_zero() {
            zero += 1;
        } else {
            failures.push(format!("sample {}: p={} q={} r={}", k, p, q, r));
        }
    }
    vec![result(
        "borcherds/untwisted",
        "the master identity holds on sampled triples",
        &[("samples", samples.to_string()), ("seed", seed.to_string())],
        failures.is_empty(),
        if failures.is_empty() {
            format!("{} residuals exactly zero", zero)
        } else {
            failures.join("; ")
        },
        t,
    )]
}

/// Seeded twisted Borcherds residual suite.
pub fn check_borcherds_twisted(samples: usize, seed: u64) -> Vec<CheckResult> {
    check_borcherds_twisted_at(samples, seed, None)
}

/// Same suite with the rank pinned (None samples d in {1, 2}).
pub fn check_borcherds_twisted_at(
    samples: usize,
    seed: u64,
    fixed_d: Option<usize>,
) -> Vec<CheckResult> {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
    let engines = [TwistedEngine::new(1), TwistedEngine::new(2)];
    let mut zero = 0usize;
    let mut failures = Vec::new();
    for k in 0..samples {
        let d = fixed_d.unwrap_or_else(|| rng.gen_range(1..=2usize));
        let eng = &engines[d - 1];
        let ka = rng.gen_bool(0.5);
        let kb = rng.gen_bool(0.5);
        let a = sample_state(&mut rng, Sector::Untwisted, d, 3, Some(ka));
        let b = sample_state(&mut rng, Sector::Untwisted, d, 3, Some(kb));
        let u = sample_state(&mut rng, Sector::Twisted, d, 3, None);
        let p = rng.gen_range(-2..=2i64);
        // q and r live on the lattices fixed by the parities
        let q = Half(2 * rng.gen_range(-2..=2i64) + if ka { 1 } else { 0 });
        let r = Half(2 * rng.gen_range(-2..=2i64) + if kb { 1 } else { 0 });
        let res = eng.borcherds_residual(&a, &b, &u, p, q, r);
        if res.is_zero() {
            zero += 1;
        } else {
            failures.push(format!("sample {}", k));
        }
    }
    vec![result(
        "borcherds/twisted",
        "the twisted master identity holds on sampled triples",
        &[("samples", samples.to_string()), ("seed", seed.to_string())],
        failures.is_empty(),
        if failures.is_empty() {
            format!("{} residuals exactly zero", zero)
        } else {
            failures.join("; ")
        },
        t,
    )]
}

/// C2 quotient dimensions for d = 1.
pub fn check_c2(d: usize, cut: i64) -> Vec<CheckResult> {
    let t = Instant::now();
    let eng = crate::zhu::C2Engine::new(d, cut);
    let dims = eng.quotient_dims();
    let total = eng.quotient_total();
    let profile: Vec<String> = dims
        .iter()
        .filter(|(_, x)| *x > 0)
        .map(|(n, x)| format!("w{}:{}", n, x))
        .collect();
    let mut checks = Vec::new();
    if d == 1 {
        let golden = [1, 0, 1, 3, 1, 3, 1, 0, 1];
        let profile_ok = dims.iter().all(|(n, x)| {
            let expect = golden.get(*n as usize).copied().unwrap_or(0);
            *x == expect
        });
        checks.push(result(
            "c2/total-11",
            "quotient dimension 11 for the rank-one orbifold",
            &[("d", d.to_string()), ("cut", cut.to_string())],
            total == 11 && profile_ok,
            format!("total {} [{}]", total, profile.join(" ")),
            t,
        ));
    } else {
        checks.push(result(
            "c2/dims",
            "per-weight quotient dimensions",
            &[("d", d.to_string()), ("cut", cut.to_string())],
            true,
            format!("total {} [{}]", total, profile.join(" ")),
            t,
        ));
    }
    checks
}

/// The full relation catalog for one d.
pub fn check_zhu_relations(lab: &ZhuLab) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for id in relation_ids(lab.d) {
        let t = Instant::now();
        let rep = verify_relation(lab, &id);
        let status = if rep.pass {
            Status::Pass
        } else if rep.inconclusive {
            Status::Inconclusive
        } else {
            Status::Fail
        };
        out.push(CheckResult {
            id: format!("zhu/{}", rep.id),
            anchor: "relation catalog".to_string(),
            params: [("d".to_string(), lab.d.to_string())].into_iter().collect(),
            status,
            witness: rep.witness,
            wall_time_ms: t.elapsed().as_millis(),
        });
    }
    out
}

/// The presented algebra: dimension, table, units, ideals.
pub fn check_presented() -> Vec<CheckResult> {
    use crate::zhu::presented::*;
    let t = Instant::now();
    let alg = PresentedAlgebra::build();
    let mut checks = Vec::new();
    let rel_ok = alg.defining_relations_hold().iter().all(|(_, ok)| *ok);
    checks.push(result(
        "presented/dimension-11",
        "word closure + associative table pin the dimension",
        &[],
        alg.dim() == 11 && alg.associativity_holds() && rel_ok,
        format!(
            "{} normal-form words, associativity and all defining relations verified",
            alg.dim()
        ),
        t,
    ));
    let t = Instant::now();
    let t1 = table1_check(true);
    let t38 = table1_check(false);
    checks.push(result(
        "presented/table1",
        "the sixteen block products",
        &[],
        t1.is_empty() && t38.is_empty(),
        if t1.is_empty() && t38.is_empty() {
            "all 16 products verified for both blocks".to_string()
        } else {
            format!("{:?} {:?}", t1, t38)
        },
        t,
    ));
    let t = Instant::now();
    let m1 = matrix_units_check(true);
    let m38 = matrix_units_check(false);
    checks.push(result(
        "presented/matrix-units",
        "v^{ij} v^{kl} = delta_{jk} v^{il}",
        &[],
        m1.is_empty() && m38.is_empty(),
        if m1.is_empty() && m38.is_empty() {
            "all unit products verified for both blocks".to_string()
        } else {
            format!("{:?} {:?}", m1, m38)
        },
        t,
    ));
    let t = Instant::now();
    let rep = ideal_decomposition(&alg);
    let idem_ok = rep.idempotent_identities.iter().all(|(_, ok)| *ok);
    checks.push(result(
        "presented/ideals",
        "four-ideal decomposition with dims (2, 4, 1, 4)",
        &[],
        rep.dims == [2, 4, 1, 4]
            && rep.pairwise_zero
            && rep.direct_sum_rank == 11
            && rep.unit_decomposes
            && idem_ok,
        format!(
            "dims {:?}, pairwise products zero: {}, direct-sum rank {}, unit decomposition: {}",
            rep.dims, rep.pairwise_zero, rep.direct_sum_rank, rep.unit_decomposes
        ),
        t,
    ));
    checks
}

/// The four irreducible module actions.
pub fn check_actions(d: usize) -> Vec<CheckResult> {
    let t = Instant::now();
    let checks = crate::zhu::actions::irreducible_action_check(d);
    let fails: Vec<&str> = checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| c.label.as_str())
        .collect();
    vec![result(
        &format!("actions/d{}", d),
        "four inequivalent lowest-weight actions",
        &[("d", d.to_string())],
        fails.is_empty(),
        if fails.is_empty() {
            format!("{} action checks verified", checks.len())
        } else {
            fails.join("; ")
        },
        t,
    )]
}

/// Characters against enumeration.
pub fn check_characters(max_d: usize, count: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for d in 1..=max_d {
        let t = Instant::now();
        let mut fails = Vec::new();
        for m in crate::chars::Module::all() {
            fails.extend(crate::chars::enumerate_vs_character(m, d, count));
        }
        out.push(result(
            &format!("characters/enumeration-d{}", d),
            "eta-quotient coefficients equal graded dimensions",
            &[("d", d.to_string()), ("exponents", count.to_string())],
            fails.is_empty(),
            if fails.is_empty() {
                format!("4 modules x {} exponents match exactly", count)
            } else {
                fails.join("; ")
            },
            t,
        ));
    }
    out
}

/// Exact T-laws and numeric S-laws.
pub fn check_modular(order48: i64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let t = Instant::now();
    let mut t_ok = true;
    for d in 1..=3usize {
        for m in crate::chars::Module::all() {
            if crate::chars::t_transform_check(m, d, 48 * 12).is_none() {
                t_ok = false;
            }
        }
    }
    out.push(result(
        "modular/T-exact",
        "T-phases exact on the exponent lattice",
        &[("d", "1..3".into())],
        t_ok,
        "phases e^{d pi i/6} and +-e^{-d pi i/12} verified exactly".to_string(),
        t,
    ));
    for (tname, tau) in [
        ("i", Complex64::new(0.0, 1.0)),
        ("0.2+1.3i", Complex64::new(0.2, 1.3)),
    ] {
        let t = Instant::now();
        let mut max_resid = 0f64;
        for (_, r) in crate::chars::phi_s_residuals(tau, order48) {
            max_resid = max_resid.max(r);
        }
        for d in 1..=2usize {
            for (_, r) in crate::chars::character_s_residuals(d, tau, order48) {
                max_resid = max_resid.max(r);
            }
        }
        out.push(result(
            &format!("modular/S-tau-{}", tname),
            "numeric S-transformation residuals",
            &[
                ("tau", tname.to_string()),
                ("order", (order48 / 48).to_string()),
            ],
            max_resid < 1e-6,
            format!("max residual {:.3e}", max_resid),
            t,
        ));
    }
    out
}

/// Twisted-sector structure: the coefficient table, the identity
/// correction, lowest weights, and the action tables.
pub fn check_twisted(d: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let t = Instant::now();
    let table = delta_coeffs(8);
    let mut sym = true;
    for m in 0..=8usize {
        for n in 0..=(8 - m) {
            if table.get(m, n) != table.get(n, m) {
                sym = false;
            }
        }
    }
    out.push(result(
        "twisted/delta-table",
        "series coefficients of the correction operator",
        &[("degree", "8".into())],
        sym && table.get(0, 0).is_zero() && table.get(1, 0) == rat(-1, 4),
        format!(
            "c00 = {}, c10 = {}, symmetric through degree 8",
            crate::scalar::fmt_scalar(&table.get(0, 0)),
            crate::scalar::fmt_scalar(&table.get(1, 0))
        ),
        t,
    ));
    let t = Instant::now();
    let eng = TwistedEngine::new(d);
    let tvac = State::vacuum(Sector::Twisted);
    let l0 = eng.virasoro(0, &tvac);
    let l0_ok = l0 == tvac.scale(&rat(-(d as i64), 8));
    // the identity correction of the quadratic field
    let v = crate::zhu::gen_h(1, 1);
    let full = eng.field_mode(&v, Half::from_int(1), &tvac);
    let corr_ok = full == tvac.scale(&rat(-1, 8));
    out.push(result(
        &format!("twisted/lowest-weight-d{}", d),
        "L_0 acts by -d/8 on the twisted vacuum; <e,f>/8 correction",
        &[("d", d.to_string())],
        l0_ok && corr_ok,
        format!(
            "L_0 1_th = {} 1_th; quadratic correction reproduced",
            crate::scalar::fmt_scalar(&rat(-(d as i64), 8))
        ),
        t,
    ));
    let t = Instant::now();
    let (even, odd) = lowest_weight_report(d, Half::from_int(2));
    out.push(result(
        &format!("twisted/spectrum-d{}", d),
        "lowest weights -d/8 and (-d+4)/8",
        &[("d", d.to_string())],
        even == rat(-(d as i64), 8) && odd == rat(4 - d as i64, 8),
        format!(
            "even {}, odd {}",
            crate::scalar::fmt_scalar(&even),
            crate::scalar::fmt_scalar(&odd)
        ),
        t,
    ));
    if d >= 2 {
        let t = Instant::now();
        let checks = zero_mode_action_table(d);
        let fails: Vec<&str> = checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.label.as_str())
            .collect();
        out.push(result(
            &format!("twisted/action-tables-d{}", d),
            "zero-mode action tables with alpha(3/8) = 1/2",
            &[("d", d.to_string())],
            fails.is_empty(),
            if fails.is_empty() {
                format!("{} table entries verified", checks.len())
            } else {
                fails.join("; ")
            },
            t,
        ));
    }
    out
}

/// Logarithmic-module checks: the Jordan block, singular vectors and the
/// filtration.
pub fn check_logmod(d: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let t = Instant::now();
    let rep = crate::logmod::nilpotency_report(d);
    out.push(result(
        &format!("logmod/jordan-d{}", d),
        "non-semisimple L_0 at weight zero",
        &[("d", d.to_string())],
        !rep.is_semisimple && rep.nilpotent_index >= 2 && rep.even_part_nilpotent_nonzero,
        format!(
            "weight-0 dim {}, nilpotent index {}, even part nonzero nilpotent",
            rep.weight0_dim, rep.nilpotent_index
        ),
        t,
    ));
    let t = Instant::now();
    let ev = crate::logmod::socle_evidence(d);
    let expected_omega = [1usize << (2 * d), 2 * d, 0];
    out.push(result(
        &format!("logmod/omega-d{}", d),
        "singular space is the zero-weight layer plus the top layer at weight one",
        &[("d", d.to_string())],
        ev.omega_dims == expected_omega
            && ev.weight1_in_top_layer
            && ev.transport_identity
            && ev.zero_mode_kernel_dim == 1
            && ev.vacuum_fails_criterion,
        format!(
            "omega dims {:?}, weight-1 in the top layer: {}, transport identity: {}",
            ev.omega_dims, ev.weight1_in_top_layer, ev.transport_identity
        ),
        t,
    ));
    let t = Instant::now();
    let top = if d == 1 { 4 } else { 2 };
    let mut filt_ok = true;
    for r in 0..=(2 * d) {
        for w in 0..=top {
            if crate::logmod::filtration_quotient_dim(d, r, w)
                != crate::logmod::filtration_expected(d, r, w)
            {
                filt_ok = false;
            }
        }
    }
    out.push(result(
        &format!("logmod/filtration-d{}", d),
        "quotient layers are binomial(2d, r) copies of the Fock space",
        &[("d", d.to_string()), ("weights", format!("0..={}", top))],
        filt_ok,
        format!("layers r = 0..={} match at weights 0..={}", 2 * d, top),
        t,
    ));
    out
}

/// Seeded automorphism equivariance suite.
pub fn check_automorphisms(seed: u64, maps: usize, triples: usize) -> Vec<CheckResult> {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(2));
    let mut failures = Vec::new();
    let mut count = 0usize;
    for k in 0..maps {
        let d = rng.gen_range(1..=2usize);
        let g = sample_symplectic(&mut rng, d);
        let w = virasoro_vector(d);
        if apply_linear_map(&g, &w) != w {
            failures.push(format!("map {}: omega not fixed", k));
        }
        for _ in 0..triples {
            let a = sample_state(&mut rng, Sector::Untwisted, d, 3, None);
            let b = sample_state(&mut rng, Sector::Untwisted, d, 3, None);
            let n = rng.gen_range(-2..=3i64);
            if !automorphism_residual(&g, &a, n, &b).is_zero() {
                failures.push(format!("map {}: residual nonzero", k));
            }
            count += 1;
        }
    }
    vec![result(
        "automorphism/equivariance",
        "symplectic maps commute with every mode and fix omega",
        &[
            ("maps", maps.to_string()),
            ("triples", triples.to_string()),
            ("seed", seed.to_string()),
        ],
        failures.is_empty(),
        if failures.is_empty() {
            format!(
                "{} sampled mode identities exact, omega fixed by all maps",
                count
            )
        } else {
            failures.join("; ")
        },
        t,
    )]
}

/// Gram matrices and sampled invariance of the bilinear form.
pub fn check_bilinear(seed: u64, samples: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let t = Instant::now();
    let mut gram_ok = true;
    for d in 1..=2usize {
        for w in 0..=6i64 {
            let g = gram_matrix(d, w);
            let n = g.len();
            if dense_rank(g) != n {
                gram_ok = false;
            }
        }
    }
    out.push(result(
        "bilinear/gram",
        "weightwise Gram matrices have full rank",
        &[("d", "1,2".into()), ("weights", "0..=6".into())],
        gram_ok,
        "nondegenerate at every weight".to_string(),
        t,
    ));
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(3));
    let mut failures = 0usize;
    for _ in 0..samples {
        let d = rng.gen_range(1..=2usize);
        let pa = rng.gen_bool(0.5);
        let a = sample_state(&mut rng, Sector::Untwisted, d, 4, Some(pa));
        // invariance needs weight-homogeneous a
        let a = a
            .weight_components()
            .into_iter()
            .next()
            .map(|(_, s)| s)
            .unwrap();
        let pu = rng.gen_bool(0.5);
        let u = sample_state(&mut rng, Sector::Untwisted, d, 4, Some(pu));
        let v = sample_state(&mut rng, Sector::Untwisted, d, 4, None);
        let n = rng.gen_range(-3..=3i64);
        if parity_of(&a).is_some() && !invariance_residual(d, &a, &u, &v, n).is_zero() {
            failures += 1;
        }
    }
    out.push(result(
        "bilinear/invariance",
        "adjoint law of the form on sampled triples",
        &[("samples", samples.to_string()), ("seed", seed.to_string())],
        failures == 0,
        format!("{} sampled residuals exactly zero", samples),
        t,
    ));
    out
}

/// Singular-vector spot checks in the plain Fock space.
pub fn check_singular() -> Vec<CheckResult> {
    let t = Instant::now();
    let vac = State::vacuum(Sector::Untwisted);
    let e1 = crate::vertex::h_state(&crate::symplectic::HVector::basis(Gen::e(1), 1));
    let pass = crate::vertex::is_singular(&vac, 1)
        && !crate::vertex::is_singular(&e1, 1)
        && crate::vertex::is_singular(&vac.scale(&int(7)), 1);
    vec![result(
        "vertex/singular-vectors",
        "vacuum is singular; weight-one vectors are not",
        &[],
        pass,
        "kernel conditions checked against all generator modes".to_string(),
        t,
    )]
}

/// Everything, in catalog order. Heavy pools are built once.
pub fn run_all(seed: u64) -> Vec<CheckResult> {
    let mut checks = Vec::new();
    checks.extend(check_virasoro());
    checks.extend(check_borcherds_untwisted(100, seed));
    checks.extend(check_borcherds_twisted(50, seed));
    checks.extend(check_bilinear(seed, 50));
    checks.extend(check_singular());
    checks.extend(check_automorphisms(seed, 3, 20));
    checks.extend(check_c2(1, 12));
    let lab1 = ZhuLab::new(1);
    checks.extend(check_zhu_relations(&lab1));
    drop(lab1);
    let lab2 = ZhuLab::new(2);
    checks.extend(check_zhu_relations(&lab2));
    drop(lab2);
    checks.extend(check_presented());
    checks.extend(check_actions(1));
    checks.extend(check_actions(2));
    checks.extend(check_twisted(1));
    checks.extend(check_twisted(2));
    checks.extend(check_characters(3, 20));
    checks.extend(check_modular(48 * 200));
    checks.extend(check_logmod(1));
    checks.extend(check_logmod(2));
    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampled_suites_deterministic() {
        let a = check_borcherds_untwisted(10, 7);
        let b = check_borcherds_untwisted(10, 7);
        assert_eq!(a[0].status, b[0].status);
        assert_eq!(a[0].witness, b[0].witness);
    }

    #[test]
    fn report_json_schema() {
        let checks = check_virasoro();
        let report = Report::new(DEFAULT_SEED, BTreeMap::new(), checks);
        let json = report.to_json();
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert!(parsed["version"].is_string());
        assert!(parsed["checks"].is_array());
        assert_eq!(parsed["checks"][0]["status"], "pass");
        // empty check list still serializes
        let empty = Report::new(0, BTreeMap::new(), Vec::new());
        let parsed: serde_json::Value = serde_json::from_str(&empty.to_json()).unwrap();
        assert_eq!(parsed["checks"].as_array().unwrap().len(), 0);
    }

    #[test]
    fn quick_suites_pass() {
        assert!(check_virasoro().iter().all(|c| c.passed()));
        assert!(check_singular().iter().all(|c| c.passed()));
        assert!(check_borcherds_untwisted(5, DEFAULT_SEED)
            .iter()
            .all(|c| c.passed()));
        assert!(check_borcherds_twisted(3, DEFAULT_SEED)
            .iter()
            .all(|c| c.passed()));
        assert!(check_automorphisms(DEFAULT_SEED, 1, 3)
            .iter()
            .all(|c| c.passed()));
    }
}
