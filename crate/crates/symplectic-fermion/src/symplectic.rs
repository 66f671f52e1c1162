//! The 2d-dimensional symplectic space h with its canonical basis
//! {(e^i, f^i)}, the skew-symmetric form, and symplectic linear maps.
//!
//! The canonical basis satisfies <e^i, e^j> = <f^i, f^j> = 0 and
//! <e^i, f^j> = -delta_{ij} = -<f^j, e^i>. Everything downstream (mode
//! anticommutators, bilinear forms, automorphism actions) reduces to this
//! form table.

use std::fmt;

use num::{One, Zero};

use crate::scalar::{int, Scalar};

/// A canonical-basis generator of h: `Gen(2*i)` is e^{i+1}, `Gen(2*i+1)`
/// is f^{i+1}. Index range `0..2d`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Gen(pub u8);

impl Gen {
    pub fn e(i: usize) -> Gen {
        Gen((2 * (i - 1)) as u8)
    }

    pub fn f(i: usize) -> Gen {
        Gen((2 * (i - 1) + 1) as u8)
    }

    /// Pair index, 1-based (both e^i and f^i report i).
    pub fn pair(self) -> usize {
        (self.0 / 2) as usize + 1
    }

    pub fn is_e(self) -> bool {
        self.0 % 2 == 0
    }

    /// All 2d generators in canonical order e1, f1, e2, f2, ...
    pub fn all(d: usize) -> impl Iterator<Item = Gen> {
        (0..2 * d).map(|k| Gen(k as u8))
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.is_e() { 'e' } else { 'f' }, self.pair())
    }
}

/// The canonical skew form on generators: <e^i, f^i> = -1, <f^i, e^i> = 1,
/// all other pairs 0.
pub fn form(a: Gen, b: Gen) -> Scalar {
    if a.pair() != b.pair() {
        return Scalar::zero();
    }
    match (a.is_e(), b.is_e()) {
        (true, false) => -Scalar::one(),
        (false, true) => Scalar::one(),
        _ => Scalar::zero(),
    }
}

/// A vector of h in generator coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HVector {
    pub coords: Vec<Scalar>,
}

impl HVector {
    pub fn zero(d: usize) -> HVector {
        HVector {
            coords: vec![Scalar::zero(); 2 * d],
        }
    }

    pub fn basis(g: Gen, d: usize) -> HVector {
        let mut v = HVector::zero(d);
        v.coords[g.0 as usize] = Scalar::one();
        v
    }

    pub fn dim_d(&self) -> usize {
        self.coords.len() / 2
    }

    pub fn add(&self, other: &HVector) -> HVector {
        assert_eq!(self.coords.len(), other.coords.len(), "dimension mismatch");
        HVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> HVector {
        HVector {
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }
}

/// The symplectic space h of dimension 2d with its canonical form table.
#[derive(Clone, Debug)]
pub struct SymplecticSpace {
    pub d: usize,
    /// 2d x 2d form table, `table[i][j] = <g_i, g_j>`.
    pub table: Vec<Vec<Scalar>>,
}

/// Build the space for `d >= 1`; `d = 0` is rejected.
pub fn make_space(d: usize) -> Result<SymplecticSpace, String> {
    if d == 0 {
        return Err("symplectic space requires d >= 1".to_string());
    }
    let n = 2 * d;
    let mut table = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            table[i][j] = form(Gen(i as u8), Gen(j as u8));
        }
    }
    Ok(SymplecticSpace { d, table })
}

/// The skew form extended bilinearly to coordinate vectors.
pub fn skew_form(psi: &HVector, phi: &HVector) -> Scalar {
    assert_eq!(psi.coords.len(), phi.coords.len(), "dimension mismatch");
    let mut acc = Scalar::zero();
    for (i, a) in psi.coords.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in phi.coords.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            acc += a * b * form(Gen(i as u8), Gen(j as u8));
        }
    }
    acc
}

/// Linear map on h, stored column-wise: `cols[j]` is the image of the j-th
/// canonical generator.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMap {
    pub cols: Vec<HVector>,
}

impl LinearMap {
    pub fn identity(d: usize) -> LinearMap {
        LinearMap {
            cols: Gen::all(d).map(|g| HVector::basis(g, d)).collect(),
        }
    }

    /// Map from explicit generator images.
    pub fn from_images(images: Vec<HVector>) -> LinearMap {
        LinearMap { cols: images }
    }

    pub fn dim_d(&self) -> usize {
        self.cols.len() / 2
    }

    /// Image of a generator.
    pub fn apply_gen(&self, g: Gen) -> &HVector {
        &self.cols[g.0 as usize]
    }

    pub fn apply(&self, v: &HVector) -> HVector {
        let d = self.dim_d();
        let mut out = HVector::zero(d);
        for (j, c) in v.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, x) in self.cols[j].coords.iter().enumerate() {
                out.coords[i] += c * x;
            }
        }
        out
    }
}

/// True iff g preserves the skew form on all basis pairs.
pub fn is_symplectic(g: &LinearMap) -> bool {
    let d = g.dim_d();
    for a in Gen::all(d) {
        for b in Gen::all(d) {
            if skew_form(g.apply_gen(a), g.apply_gen(b)) != form(a, b) {
                return false;
            }
        }
    }
    true
}

/// The basis swap (e^i, f^i) -> (f^i, -e^i), symplectic for every d.
pub fn swap_ef(d: usize) -> LinearMap {
    let mut cols = Vec::new();
    for i in 1..=d {
        cols.push(HVector::basis(Gen::f(i), d));
        cols.push(HVector::basis(Gen::e(i), d).scale(&int(-1)));
    }
    LinearMap { cols }
}

/// The rational shear (e^i, f^i) -> (e^i + f^i, (f^i - e^i)/2), an
/// irrational-free stand-in for the 1/sqrt(2) basis rotation:
/// <e + f, (f - e)/2> = -1 keeps the pair canonical.
pub fn shear_ef(d: usize) -> LinearMap {
    let half = crate::scalar::rat(1, 2);
    let mut cols = Vec::new();
    for i in 1..=d {
        let e = HVector::basis(Gen::e(i), d);
        let f = HVector::basis(Gen::f(i), d);
        cols.push(e.add(&f));
        cols.push(f.add(&e.scale(&int(-1))).scale(&half));
    }
    LinearMap { cols }
}

/// Exact rank of the form table (2d for the canonical space).
pub fn form_rank(space: &SymplecticSpace) -> usize {
    let mut mat: Vec<Vec<Scalar>> = space.table.clone();
    let n = mat.len();
    let mut rank = 0;
    for col in 0..n {
        if let Some(p) = (rank..n).find(|&r| !mat[r][col].is_zero()) {
            mat.swap(rank, p);
            let inv = mat[rank][col].clone();
            for r in 0..n {
                if r != rank && !mat[r][col].is_zero() {
                    let factor = &mat[r][col] / &inv;
                    for c in 0..n {
                        let t = &mat[rank][c] * &factor;
                        mat[r][c] -= t;
                    }
                }
            }
            rank += 1;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn canonical_form_values() {
        let s = make_space(1).unwrap();
        assert_eq!(s.table[0][1], int(-1)); // <e1, f1> = -1
        assert_eq!(s.table[0][0], int(0)); // <e1, e1> = 0
        let s2 = make_space(2).unwrap();
        assert_eq!(s2.table[0][3], int(0)); // <e1, f2> = 0
    }

    #[test]
    fn d_zero_rejected() {
        assert!(make_space(0).is_err());
    }

    #[test]
    fn skew_form_examples() {
        let d = 1;
        let e = HVector::basis(Gen::e(1), d);
        let f = HVector::basis(Gen::f(1), d);
        assert_eq!(skew_form(&f, &e), int(1));
        let s = e.add(&f);
        assert_eq!(skew_form(&s, &s), int(0));
        let t = e.add(&f.scale(&int(-1)));
        assert_eq!(skew_form(&s, &t), int(2));
    }

    #[test]
    fn skew_antisymmetry_on_basis() {
        for d in 1..=3 {
            for a in Gen::all(d) {
                for b in Gen::all(d) {
                    assert_eq!(form(a, b), -form(b, a));
                }
            }
        }
    }

    #[test]
    fn symplectic_checks() {
        assert!(is_symplectic(&LinearMap::identity(2)));
        assert!(is_symplectic(&swap_ef(1)));
        assert!(is_symplectic(&swap_ef(2)));
        assert!(is_symplectic(&shear_ef(1)));
        assert!(is_symplectic(&shear_ef(2)));
        // e1 -> 2 e1, f1 -> f1 scales the form: not symplectic
        let bad = LinearMap::from_images(vec![
            HVector::basis(Gen::e(1), 1).scale(&int(2)),
            HVector::basis(Gen::f(1), 1),
        ]);
        assert!(!is_symplectic(&bad));
    }

    #[test]
    fn shear_is_rational_sqrt2_replacement() {
        // <e+f, (f-e)/2> = (<e,f> - <f,e>)/2 = -1: the pair stays canonical
        let g = shear_ef(1);
        assert_eq!(
            skew_form(g.apply_gen(Gen::e(1)), g.apply_gen(Gen::f(1))),
            int(-1)
        );
        assert_eq!(g.apply_gen(Gen::f(1)).coords[0], rat(-1, 2));
        assert_eq!(g.apply_gen(Gen::f(1)).coords[1], rat(1, 2));
    }

    #[test]
    fn form_full_rank() {
        for d in 1..=3 {
            let s = make_space(d).unwrap();
            assert_eq!(form_rank(&s), 2 * d);
        }
    }
}
