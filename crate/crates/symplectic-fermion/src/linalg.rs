//! Exact sparse linear algebra over the rationals.
//!
//! [`Echelon`] maintains a reduced echelon basis of a growing set of
//! columns and remembers, for every pivot row, its expression as a
//! combination of the inserted columns. That provenance is what turns a
//! successful reduction into a checkable membership certificate.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::scalar::Scalar;

/// Sparse rational vector keyed by coordinate index.
pub type SparseVec = BTreeMap<usize, Scalar>;

/// `dst += c * src`, dropping cancelled entries.
pub fn axpy(dst: &mut SparseVec, c: &Scalar, src: &SparseVec) {
    if c.is_zero() {
        return;
    }
    for (k, v) in src {
        let entry = dst.entry(*k).or_insert_with(Scalar::zero);
        *entry += c * v;
        if entry.is_zero() {
            dst.remove(k);
        }
    }
}

struct PivotRow {
    row: SparseVec,
    /// Expression of `row` over inserted column ids.
    comb: BTreeMap<usize, Scalar>,
}

/// Incremental reduced echelon basis with column provenance.
#[derive(Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, PivotRow>,
    n_cols: usize,
}

/// Result of reducing a vector against the current basis.
pub struct Reduction {
    pub residual: SparseVec,
    /// Combination of inserted columns that was subtracted.
    pub used: BTreeMap<usize, Scalar>,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon {
            pivots: BTreeMap::new(),
            n_cols: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn columns_inserted(&self) -> usize {
        self.n_cols
    }

    /// Fully reduce `v` against the pivot rows. The residual contains no
    /// pivot positions; `v = residual + sum used[j] * column_j`.
    pub fn reduce(&self, v: &SparseVec) -> Reduction {
        self.reduce_impl(v, true)
    }

    /// Reduction without provenance bookkeeping (cheaper; used to test
    /// dependence during pool assembly).
    pub fn reduce_untracked(&self, v: &SparseVec) -> SparseVec {
        self.reduce_impl(v, false).residual
    }

    fn reduce_impl(&self, v: &SparseVec, track: bool) -> Reduction {
        let mut residual = v.clone();
        let mut used: BTreeMap<usize, Scalar> = BTreeMap::new();
        loop {
            let hit = residual
                .keys()
                .find(|k| self.pivots.contains_key(k))
                .cloned();
            let pos = match hit {
                Some(p) => p,
                None => break,
            };
            let c = residual.get(&pos).cloned().unwrap();
            let pivot = &self.pivots[&pos];
            let neg = -c.clone();
            axpy(&mut residual, &neg, &pivot.row);
            if track {
                for (j, w) in &pivot.comb {
                    let entry = used.entry(*j).or_insert_with(Scalar::zero);
                    *entry += &c * w;
                    if entry.is_zero() {
                        used.remove(j);
                    }
                }
            }
        }
        Reduction { residual, used }
    }

    /// Insert a column; returns its id and whether the rank grew.
    pub fn insert(&mut self, col: SparseVec) -> (usize, bool) {
        let id = self.n_cols;
        self.n_cols += 1;
        if self.reduce_untracked(&col).is_empty() {
            return (id, false);
        }
        let red = self.reduce(&col);
        let (&lead, lead_coeff) = red.residual.iter().next().unwrap();
        let inv = Scalar::one() / lead_coeff.clone();
        let mut row: SparseVec = BTreeMap::new();
        axpy(&mut row, &inv, &red.residual);
        let mut comb: BTreeMap<usize, Scalar> = BTreeMap::new();
        comb.insert(id, inv.clone());
        for (j, w) in &red.used {
            let entry = comb.entry(*j).or_insert_with(Scalar::zero);
            *entry -= &inv * w;
            if entry.is_zero() {
                comb.remove(j);
            }
        }
        // keep the basis reduced: clear the new pivot position from all
        // existing rows
        let mut updates: Vec<(usize, Scalar)> = Vec::new();
        for (p, piv) in &self.pivots {
            if let Some(t) = piv.row.get(&lead) {
                updates.push((*p, t.clone()));
            }
        }
        for (p, t) in updates {
            let neg = -t.clone();
            let (new_row, new_comb) = {
                let piv = &self.pivots[&p];
                let mut nr = piv.row.clone();
                axpy(&mut nr, &neg, &row);
                let mut nc = piv.comb.clone();
                for (j, w) in &comb {
                    let entry = nc.entry(*j).or_insert_with(Scalar::zero);
                    *entry += &neg * w;
                    if entry.is_zero() {
                        nc.remove(j);
                    }
                }
                (nr, nc)
            };
            let piv = self.pivots.get_mut(&p).unwrap();
            piv.row = new_row;
            piv.comb = new_comb;
        }
        self.pivots.insert(lead, PivotRow { row, comb });
        (id, true)
    }
}

/// Nullspace basis of a dense rational matrix (rows are constraints).
/// Returns vectors of length `n_cols`.
pub fn kernel_dense(mut mat: Vec<Vec<Scalar>>, n_cols: usize) -> Vec<Vec<Scalar>> {
    let rows = mat.len();
    let mut pivot_col_of_row: Vec<usize> = Vec::new();
    let mut is_pivot = vec![false; n_cols];
    let mut rank = 0;
    for col in 0..n_cols {
        if let Some(p) = (rank..rows).find(|&r| !mat[r][col].is_zero()) {
            mat.swap(rank, p);
            let inv = mat[rank][col].clone();
            for c in 0..n_cols {
                mat[rank][c] = &mat[rank][c] / &inv;
            }
            for r in 0..rows {
                if r != rank && !mat[r][col].is_zero() {
                    let factor = mat[r][col].clone();
                    for c in 0..n_cols {
                        let t = &mat[rank][c] * &factor;
                        mat[r][c] -= t;
                    }
                }
            }
            pivot_col_of_row.push(col);
            is_pivot[col] = true;
            rank += 1;
            if rank == rows {
                break;
            }
        }
    }
    let mut basis = Vec::new();
    for free in 0..n_cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![Scalar::zero(); n_cols];
        v[free] = Scalar::one();
        for (r, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = -mat[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn sv(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|(k, v)| (*k, int(*v))).collect()
    }

    #[test]
    fn echelon_rank_and_membership() {
        let mut ech = Echelon::new();
        let c0 = sv(&[(0, 1), (2, 2)]);
        let c1 = sv(&[(1, 3)]);
        let c2 = sv(&[(0, 2), (1, 3), (2, 4)]); // = 2*c0 + c1
        assert!(ech.insert(c0.clone()).1);
        assert!(ech.insert(c1.clone()).1);
        let (_, grew) = ech.insert(c2.clone());
        assert!(!grew);
        assert_eq!(ech.rank(), 2);

        let target = sv(&[(0, 3), (1, 3), (2, 6)]); // 3*c0 + c1
        let red = ech.reduce(&target);
        assert!(red.residual.is_empty());
        // re-evaluate the certificate
        let mut acc: SparseVec = BTreeMap::new();
        let cols = [c0, c1, c2];
        for (j, w) in &red.used {
            axpy(&mut acc, w, &cols[*j]);
        }
        assert_eq!(acc, target);

        let outside = sv(&[(3, 1)]);
        assert!(!ech.reduce(&outside).residual.is_empty());
    }

    #[test]
    fn echelon_fractional() {
        let mut ech = Echelon::new();
        let mut c0 = SparseVec::new();
        c0.insert(0, rat(1, 2));
        c0.insert(1, rat(1, 3));
        ech.insert(c0);
        let mut t = SparseVec::new();
        t.insert(0, rat(3, 2));
        t.insert(1, int(1));
        assert!(ech.reduce(&t).residual.is_empty());
    }

    #[test]
    fn kernel_examples() {
        // x + y + z = 0, x - z = 0 -> kernel spanned by (1, -2, 1)
        let mat = vec![vec![int(1), int(1), int(1)], vec![int(1), int(0), int(-1)]];
        let k = kernel_dense(mat, 3);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        assert_eq!(&v[0] + &v[1] + &v[2], int(0));
        assert_eq!(&v[0] - &v[2], int(0));
    }
}
