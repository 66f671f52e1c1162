//! The extended module built on the vacuum 1-hat: zero modes occupy
//! exterior-algebra slots, L_0 acts non-semisimply, and the submodule
//! filtration by zero-mode count has graded quotients that are
//! binomial(2d, r) copies of the plain Fock space.
//!
//! The generalized weight of a monomial is its positive-level sum; the
//! weight-0 space is the exterior algebra on the 2d zero modes.

use num::{One, Zero};

use crate::fock::{enumerate_basis, Monomial, Sector, State};
use crate::linalg::kernel_dense;
use crate::scalar::{Half, Scalar};
use crate::symplectic::Gen;
use crate::vertex::{field_mode, virasoro};
use crate::zhu::{gen_cap_e, gen_cap_f, gen_cap_h, gen_e, gen_f, gen_h};

/// Basis of the extended module at one generalized weight.
pub fn shat_basis(d: usize, weight: i64) -> Vec<Monomial> {
    enumerate_basis(Sector::Extended, Half::from_int(weight), d)
}

/// Exact matrix of L_0 on the weight-w space (columns are images).
pub fn l0_block(d: usize, weight: i64) -> Vec<Vec<Scalar>> {
    let basis = shat_basis(d, weight);
    let n = basis.len();
    let mut mat = vec![vec![Scalar::zero(); n]; n];
    for (j, mono) in basis.iter().enumerate() {
        let v = State::monomial(Sector::Extended, mono.clone(), Scalar::one());
        let img = virasoro(d, 0, &v);
        for (m, c) in &img.terms {
            let i = basis
                .iter()
                .position(|x| x == m)
                .expect("L_0 leaves the weight space");
            mat[i][j] = c.clone();
        }
    }
    mat
}

/// Jordan data of the weight-0 block.
pub struct NilpotencyReport {
    pub d: usize,
    pub weight0_dim: usize,
    pub is_semisimple: bool,
    /// smallest k with (L_0)^k = 0 on the weight-0 space
    pub nilpotent_index: usize,
    /// L_0 is nilpotent nonzero on the even weight-0 space as well
    pub even_part_nilpotent_nonzero: bool,
}

pub fn nilpotency_report(d: usize) -> NilpotencyReport {
    let basis = shat_basis(d, 0);
    let n = basis.len();
    let block = l0_block(d, 0);
    let mut power = block.clone();
    let mut index = 1usize;
    while !mat_is_zero(&power) {
        power = mat_mul(&power, &block);
        index += 1;
        assert!(index <= n + 1, "weight-0 block is not nilpotent");
    }
    // even sub-block: L_0 preserves parity
    let even_idx: Vec<usize> = basis
        .iter()
        .enumerate()
        .filter(|(_, m)| !m.parity_odd())
        .map(|(i, _)| i)
        .collect();
    let even_block: Vec<Vec<Scalar>> = even_idx
        .iter()
        .map(|&i| even_idx.iter().map(|&j| block[i][j].clone()).collect())
        .collect();
    NilpotencyReport {
        d,
        weight0_dim: n,
        is_semisimple: mat_is_zero(&block),
        nilpotent_index: index,
        even_part_nilpotent_nonzero: !mat_is_zero(&even_block),
    }
}

fn mat_mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let n = a.len();
    let mut out = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

fn mat_is_zero(a: &[Vec<Scalar>]) -> bool {
    a.iter().all(|r| r.iter().all(|x| x.is_zero()))
}

/// Dimensions of the filtration quotients: monomials with exactly r zero
/// modes at generalized weight n, which must equal
/// binomial(2d, r) * dim SF_n.
pub fn filtration_quotient_dim(d: usize, r: usize, weight: i64) -> usize {
    shat_basis(d, weight)
        .iter()
        .filter(|m| m.zero_modes() == r)
        .count()
}

/// The predicted value binomial(2d, r) * dim SF_n.
pub fn filtration_expected(d: usize, r: usize, weight: i64) -> usize {
    let binom = crate::scalar::binom_int(2 * d as i64, r as i64);
    let sf = enumerate_basis(Sector::Untwisted, Half::from_int(weight), d).len();
    let b = num::ToPrimitive::to_usize(binom.numer()).unwrap();
    b * sf
}

/// The generator set used for the singular-vector conditions: the full
/// weight-2 and weight-3 strong generators of the even orbifold.
fn orbifold_generators(d: usize) -> Vec<State> {
    let mut gens = Vec::new();
    for i in 1..=d {
        for j in 1..=d {
            gens.push(gen_h(i, j));
            gens.push(gen_cap_h(i, j));
            if i < j {
                gens.push(gen_e(i, j));
                gens.push(gen_f(i, j));
            }
            if i <= j {
                gens.push(gen_cap_e(i, j));
                gens.push(gen_cap_f(i, j));
            }
        }
    }
    gens.retain(|g| !g.is_zero());
    gens
}

/// Basis of the singular-vector space at one generalized weight: the
/// joint kernel of a_(n) for every strong generator a of weight k and
/// every n > k - 1 that can act nontrivially.
pub fn omega_space(d: usize, weight: i64) -> Vec<State> {
    let basis = shat_basis(d, weight);
    let n_cols = basis.len();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for a in orbifold_generators(d) {
        let k = a.homogeneous_weight().unwrap().to_int();
        for n in k..=(k + weight) {
            // target weight k + weight - n - 1 >= -1; collect coordinates
            let tw = k + weight - n - 1;
            if tw < 0 {
                // one more mode can still act: it must vanish identically,
                // which the CAR guarantees; skip the empty target space
                continue;
            }
            let target = shat_basis(d, tw);
            let mut block: Vec<Vec<Scalar>> = vec![vec![Scalar::zero(); n_cols]; target.len()];
            for (j, mono) in basis.iter().enumerate() {
                let v = State::monomial(Sector::Extended, mono.clone(), Scalar::one());
                let img = field_mode(&a, n, &v);
                for (m, c) in &img.terms {
                    let i = target.iter().position(|x| x == m).unwrap();
                    block[i][j] = c.clone();
                }
            }
            rows.extend(block);
        }
    }
    let kernel = kernel_dense(rows, n_cols);
    kernel
        .into_iter()
        .map(|coords| {
            let mut s = State::zero(Sector::Extended);
            for (j, c) in coords.into_iter().enumerate() {
                s.add_term(basis[j].clone(), c);
            }
            s
        })
        .collect()
}

/// The two computable socle facets.
pub struct SocleEvidence {
    /// dim of the singular space at weights 0, 1, 2
    pub omega_dims: [usize; 3],
    /// every weight-1 singular vector lies in the full-zero-mode layer
    pub weight1_in_top_layer: bool,
    /// (psi_(-2) phi)_(1) u = phi_(-1) psi_(0) u on the weight-0 space
    pub transport_identity: bool,
    /// weight-0 vectors killed by all zero modes = the top exterior line
    pub zero_mode_kernel_dim: usize,
    /// 1-hat itself fails the criterion: f(-1) e(0) 1-hat is nonzero
    pub vacuum_fails_criterion: bool,
}

pub fn socle_evidence(d: usize) -> SocleEvidence {
    let omega_dims = [
        omega_space(d, 0).len(),
        omega_space(d, 1).len(),
        omega_space(d, 2).len(),
    ];
    // weight-1 singular vectors must carry all 2d zero modes
    let weight1_in_top_layer = omega_space(d, 1)
        .iter()
        .all(|s| s.terms.keys().all(|m| m.zero_modes() == 2 * d));
    // the transport identity on the whole weight-0 space
    let mut transport_identity = true;
    for u_mono in shat_basis(d, 0) {
        let u = State::monomial(Sector::Extended, u_mono, Scalar::one());
        for psi in Gen::all(d) {
            for phi in Gen::all(d) {
                let a = crate::zhu::word_state(&[(psi, 2), (phi, 1)]);
                let lhs = field_mode(&a, 1, &u);
                let rhs = crate::fock::apply_mode(
                    phi,
                    Half::from_int(-1),
                    &crate::fock::apply_mode(psi, Half::ZERO, &u),
                );
                if lhs != rhs {
                    transport_identity = false;
                }
            }
        }
    }
    // kernel of all zero modes inside weight 0
    let basis0 = shat_basis(d, 0);
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for psi in Gen::all(d) {
        let mut block = vec![vec![Scalar::zero(); basis0.len()]; basis0.len()];
        for (j, mono) in basis0.iter().enumerate() {
            let v = State::monomial(Sector::Extended, mono.clone(), Scalar::one());
            let img = crate::fock::apply_mode(psi, Half::ZERO, &v);
            for (m, c) in &img.terms {
                let i = basis0.iter().position(|x| x == m).unwrap();
                block[i][j] = c.clone();
            }
        }
        rows.extend(block);
    }
    let zero_mode_kernel_dim = kernel_dense(rows, basis0.len()).len();
    let hat = State::vacuum(Sector::Extended);
    let probe = crate::fock::apply_mode(
        Gen::f(1),
        Half::from_int(-1),
        &crate::fock::apply_mode(Gen::e(1), Half::ZERO, &hat),
    );
    SocleEvidence {
        omega_dims,
        weight1_in_top_layer,
        transport_identity,
        zero_mode_kernel_dim,
        vacuum_fails_criterion: !probe.is_zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn shat_counts() {
        assert_eq!(shat_basis(1, 0).len(), 4);
        assert_eq!(shat_basis(1, 1).len(), 8);
        assert_eq!(shat_basis(2, 0).len(), 16);
    }

    #[test]
    fn l0_jordan_block_weight0() {
        // L_0 1-hat = e(0)f(0)1-hat is nonzero, L_0^2 1-hat = 0
        let hat = State::vacuum(Sector::Extended);
        let l0 = virasoro(1, 0, &hat);
        assert!(!l0.is_zero());
        assert!(virasoro(1, 0, &l0).is_zero());
        // single zero-mode states are killed
        let e0 = crate::fock::apply_mode(Gen::e(1), Half::ZERO, &hat);
        assert!(virasoro(1, 0, &e0).is_zero());
        let report = nilpotency_report(1);
        assert!(!report.is_semisimple);
        assert_eq!(report.nilpotent_index, 2);
        assert!(report.even_part_nilpotent_nonzero);
        assert_eq!(report.weight0_dim, 4);
    }

    #[test]
    fn l0_blocks_nilpotent_shifted() {
        // (L_0 - w)^dim = 0 on every weight-w block: the sole generalized
        // eigenvalue is w
        for d in 1..=2usize {
            let top = if d == 1 { 3 } else { 1 };
            for w in 0..=top {
                let basis = shat_basis(d, w);
                let mut block = l0_block(d, w);
                let n = basis.len();
                for (i, row) in block.iter_mut().enumerate() {
                    row[i] -= int(w);
                }
                let mut power = block.clone();
                for _ in 0..n {
                    if mat_is_zero(&power) {
                        break;
                    }
                    power = mat_mul(&power, &block);
                }
                assert!(mat_is_zero(&power), "d={} w={}", d, w);
            }
        }
    }

    #[test]
    fn l0_preserves_parity() {
        let basis = shat_basis(1, 2);
        let block = l0_block(1, 2);
        for (j, mono) in basis.iter().enumerate() {
            for (i, m2) in basis.iter().enumerate() {
                if !block[i][j].is_zero() {
                    assert_eq!(mono.parity_odd(), m2.parity_odd());
                }
            }
        }
    }

    #[test]
    fn filtration_matches_binomials() {
        for d in 1..=2usize {
            let top = if d == 1 { 4 } else { 2 };
            for r in 0..=(2 * d) {
                for w in 0..=top {
                    assert_eq!(
                        filtration_quotient_dim(d, r, w),
                        filtration_expected(d, r, w),
                        "d={} r={} w={}",
                        d,
                        r,
                        w
                    );
                }
            }
        }
        // top filtration layer is zero
        assert_eq!(filtration_quotient_dim(1, 3, 0), 0);
    }

    #[test]
    fn zero_modes_raise_filtration() {
        // psi_(0) maps the r-layer into the (r+1)-layer
        for w in 0..=3i64 {
            for mono in shat_basis(1, w) {
                let r = mono.zero_modes();
                let v = State::monomial(Sector::Extended, mono, Scalar::one());
                for g in Gen::all(1) {
                    let img = crate::fock::apply_mode(g, Half::ZERO, &v);
                    for m in img.terms.keys() {
                        assert_eq!(m.zero_modes(), r + 1);
                    }
                }
            }
        }
    }

    #[test]
    fn omega_space_d1() {
        // weight 0: the whole exterior algebra; weight 1: the two vectors
        // over the top layer; weight 2: nothing
        assert_eq!(omega_space(1, 0).len(), 4);
        assert_eq!(omega_space(1, 1).len(), 2);
        assert_eq!(omega_space(1, 2).len(), 0);
    }

    #[test]
    fn socle_evidence_d1() {
        let ev = socle_evidence(1);
        assert_eq!(ev.omega_dims, [4, 2, 0]);
        assert!(ev.weight1_in_top_layer);
        assert!(ev.transport_identity);
        assert_eq!(ev.zero_mode_kernel_dim, 1);
        assert!(ev.vacuum_fails_criterion);
    }

    #[test]
    fn omega_space_d2() {
        assert_eq!(omega_space(2, 0).len(), 16);
        assert_eq!(omega_space(2, 1).len(), 4);
        assert_eq!(omega_space(2, 2).len(), 0);
    }
}
