//! Exact integer-lattice arithmetic: column Hermite form, membership,
//! canonical coset residues, and subgroup index.
//!
//! A sublattice of Z^dim is given by generator columns. The triangular
//! Hermite form makes membership and residues a forward substitution.

use num::{BigInt, Integer, Signed, Zero};

/// Column Hermite form of an integer matrix. Pivot rows are strictly
/// increasing and pivot entries positive, so forward substitution along
/// pivots decides membership and produces a unique residue per coset.
#[derive(Clone, Debug)]
pub struct Hnf {
    dim: usize,
    /// (pivot row, column) pairs, rows strictly increasing.
    pivots: Vec<(usize, usize)>,
    cols: Vec<Vec<BigInt>>,
}

impl Hnf {
    pub fn from_columns(dim: usize, columns: &[Vec<BigInt>]) -> Hnf {
        for c in columns {
            assert_eq!(c.len(), dim, "column length must equal dim");
        }
        let mut cols: Vec<Vec<BigInt>> = columns.to_vec();
        let mut pivots = Vec::new();
        let mut start = 0usize;
        for row in 0..dim {
            loop {
                // Pick the column with the smallest nonzero |entry| at this row.
                let mut best: Option<usize> = None;
                for (j, col) in cols.iter().enumerate().skip(start) {
                    if !col[row].is_zero()
                        && best
                            .map(|b| col[row].abs() < cols[b][row].abs())
                            .unwrap_or(true)
                    {
                        best = Some(j);
                    }
                }
                let Some(b) = best else { break };
                cols.swap(start, b);
                let mut reduced_all = true;
                for j in start + 1..cols.len() {
                    if cols[j][row].is_zero() {
                        continue;
                    }
                    let q = cols[j][row].div_floor(&cols[start][row]);
                    for r in 0..dim {
                        let sub = &q * &cols[start][r];
                        cols[j][r] -= sub;
                    }
                    if !cols[j][row].is_zero() {
                        reduced_all = false;
                    }
                }
                if reduced_all {
                    if cols[start][row].is_negative() {
                        for r in 0..dim {
                            cols[start][r] = -cols[start][r].clone();
                        }
                    }
                    pivots.push((row, start));
                    start += 1;
                    break;
                }
            }
        }
        cols.truncate(start);
        Hnf { dim, pivots, cols }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.solve(v).is_some()
    }

    /// Coefficients of `v` in the Hermite basis, if `v` lies in the lattice.
    pub fn solve(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.pivots.len());
        for &(row, col) in &self.pivots {
            let p = &self.cols[col][row];
            let (q, r) = w[row].div_mod_floor(p);
            if !r.is_zero() {
                return None;
            }
            for k in 0..self.dim {
                let sub = &q * &self.cols[col][k];
                w[k] -= sub;
            }
            coeffs.push(q);
        }
        if w.iter().all(|x| x.is_zero()) {
            Some(coeffs)
        } else {
            None
        }
    }

    /// Canonical residue of `v` modulo the lattice: reduce along pivots with
    /// floor division. Two vectors reduce to the same residue iff their
    /// difference lies in the lattice.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        for &(row, col) in &self.pivots {
            let p = &self.cols[col][row];
            let q = w[row].div_floor(p);
            for k in 0..self.dim {
                let sub = &q * &self.cols[col][k];
                w[k] -= sub;
            }
        }
        w
    }

    /// Index of the lattice in Z^dim: product of pivots when full rank.
    pub fn index_in_ambient(&self) -> Option<BigInt> {
        if self.rank() < self.dim {
            return None;
        }
        let mut idx = BigInt::from(1);
        for &(row, col) in &self.pivots {
            idx *= self.cols[col][row].clone();
        }
        Some(idx)
    }

    /// Index `[self : sub]` of a sublattice, or None when infinite.
    /// Caller guarantees `sub` is contained in `self`.
    pub fn index_of_sublattice(&self, sub: &Hnf) -> Option<BigInt> {
        if sub.rank() < self.rank() {
            return None;
        }
        // Express each sub-basis column in our basis; index = |det|.
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(sub.cols.len());
        for c in &sub.cols {
            m.push(self.solve(c).expect("sublattice column not in lattice"));
        }
        Some(det(&m).abs())
    }

    pub fn basis_columns(&self) -> &[Vec<BigInt>] {
        &self.cols
    }
}

/// Determinant by cofactor expansion; the matrices here are at most
/// rank x rank for tiny ranks.
fn det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    assert!(m.iter().all(|r| r.len() == n), "square matrix required");
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = BigInt::zero();
    for (j, mj) in m.iter().enumerate() {
        if mj[0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != j)
            .map(|(_, col)| col[1..].to_vec())
            .collect();
        let term = &mj[0] * det(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn even_sublattice_membership() {
        let h = Hnf::from_columns(1, &[v(&[2])]);
        assert!(h.contains(&v(&[4])));
        assert!(!h.contains(&v(&[3])));
        assert_eq!(h.reduce(&v(&[5])), v(&[1]));
        assert_eq!(h.reduce(&v(&[-4])), v(&[0]));
        assert_eq!(h.index_in_ambient(), Some(BigInt::from(2)));
    }

    #[test]
    fn rectangular_lattice_membership() {
        // <(2,0),(0,3)>: brute-force oracle over small coefficients.
        let h = Hnf::from_columns(2, &[v(&[2, 0]), v(&[0, 3])]);
        for a in -6i64..=6 {
            for b in -6i64..=6 {
                let mut member = false;
                for s in -4i64..=4 {
                    for t in -4i64..=4 {
                        if 2 * s == a && 3 * t == b {
                            member = true;
                        }
                    }
                }
                assert_eq!(h.contains(&v(&[a, b])), member, "({a},{b})");
            }
        }
        assert!(h.contains(&v(&[4, 3])));
        assert_eq!(h.index_in_ambient(), Some(BigInt::from(6)));
    }

    #[test]
    fn skewed_generators_reduce_to_same_lattice() {
        // <(2,1),(1,2)> has determinant 3.
        let h = Hnf::from_columns(2, &[v(&[2, 1]), v(&[1, 2])]);
        assert_eq!(h.rank(), 2);
        assert_eq!(h.index_in_ambient(), Some(BigInt::from(3)));
        assert!(h.contains(&v(&[3, 3])));
        assert!(h.contains(&v(&[3, 0])));
        assert!(!h.contains(&v(&[1, 0])));
        // Residues are constant on cosets.
        let r1 = h.reduce(&v(&[1, 0]));
        let r2 = h.reduce(&v(&[4, 3])); // differs by (3,3) in the lattice
        assert_eq!(r1, r2);
    }

    #[test]
    fn rank_deficient_lattice() {
        let h = Hnf::from_columns(2, &[v(&[1, 0])]);
        assert_eq!(h.rank(), 1);
        assert!(h.contains(&v(&[5, 0])));
        assert!(!h.contains(&v(&[0, 1])));
        assert_eq!(h.index_in_ambient(), None);
    }

    #[test]
    fn sublattice_index() {
        let g = Hnf::from_columns(1, &[v(&[2])]);
        let h = Hnf::from_columns(1, &[v(&[6])]);
        assert_eq!(g.index_of_sublattice(&h), Some(BigInt::from(3)));
        let trivial = Hnf::from_columns(1, &[]);
        assert_eq!(g.index_of_sublattice(&trivial), None);
    }

    #[test]
    fn empty_basis_is_trivial_lattice() {
        let h = Hnf::from_columns(2, &[]);
        assert!(h.contains(&v(&[0, 0])));
        assert!(!h.contains(&v(&[1, 0])));
        assert_eq!(h.reduce(&v(&[7, -3])), v(&[7, -3]));
    }
}
