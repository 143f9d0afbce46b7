//! Small dense integer linear algebra.
//!
//! Everything here works on `i64` storage with `i128` intermediates; the
//! matrices involved are at most rank-8 frames and presentation matrices
//! with unit-sized entries. Overflow panics rather than wrapping.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Matrix {
    rows: Vec<Vec<i64>>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

fn narrow(x: i128) -> i64 {
    i64::try_from(x).expect("integer overflow in matrix arithmetic")
}

impl Matrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Matrix { rows: vec![vec![0; ncols]; nrows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i][i] = 1;
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        if let Some(first) = rows.first() {
            assert!(rows.iter().all(|r| r.len() == first.len()), "ragged matrix");
        }
        Matrix { rows }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<i64>]) -> Self {
        let n = cols.first().map_or(0, Vec::len);
        let mut m = Self::zeros(n, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), n, "ragged column list");
            for i in 0..n {
                m.rows[i][j] = c[i];
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.rows[i][j] = v;
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<i64>> {
        self.rows
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    pub fn columns(&self) -> Vec<Vec<i64>> {
        (0..self.ncols()).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.ncols(), self.nrows());
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                t.rows[j][i] = v;
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.ncols(), other.nrows(), "dimension mismatch in product");
        let mut out = Self::zeros(self.nrows(), other.ncols());
        for i in 0..self.nrows() {
            for j in 0..other.ncols() {
                let s: i128 = (0..self.ncols())
                    .map(|k| self.rows[i][k] as i128 * other.rows[k][j] as i128)
                    .sum();
                out.rows[i][j] = narrow(s);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.ncols(), v.len(), "dimension mismatch in matrix-vector product");
        self.rows
            .iter()
            .map(|r| narrow(r.iter().zip(v).map(|(&a, &b)| a as i128 * b as i128).sum()))
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self
                .rows
                .iter()
                .enumerate()
                .all(|(i, r)| r.iter().enumerate().all(|(j, &v)| v == i64::from(i == j)))
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> i64 {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.nrows();
        if n == 0 {
            return 1;
        }
        let mut a: Vec<Vec<i128>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&x| x as i128).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if a[k][k] == 0 {
                match (k + 1..n).find(|&i| a[i][k] != 0) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
            }
            prev = a[k][k];
        }
        narrow(sign * a[n - 1][n - 1])
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        rank_of_rows(&self.rows)
    }

    /// Inverse of a unimodular matrix (determinant ±1), computed exactly
    /// from the adjugate. Returns `None` when the determinant is not ±1.
    pub fn unimodular_inverse(&self) -> Option<Matrix> {
        let d = self.det();
        if d != 1 && d != -1 {
            return None;
        }
        let n = self.nrows();
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let minor = self.minor(j, i).det();
                let cof = if (i + j) % 2 == 0 { minor } else { -minor };
                inv.rows[i][j] = cof * d;
            }
        }
        Some(inv)
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> Matrix {
        Matrix::from_rows(
            self.rows
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip_row)
                .map(|(_, r)| {
                    r.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != skip_col)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect(),
        )
    }
}

/// Rank over the rationals of a list of integer rows.
pub fn rank_of_rows(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..a.len()).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..a.len() {
            if a[i][col] != 0 {
                let (f, g) = (a[rank][col], a[i][col]);
                for j in col..ncols {
                    a[i][j] = a[i][j] * f - a[rank][j] * g;
                }
                let c = a[i].iter().fold(0i128, |acc, &x| gcd(acc, x));
                if c > 1 {
                    a[i].iter_mut().for_each(|x| *x /= c);
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Extended gcd: returns `(g, x, y)` with `a*x + b*y = g >= 0`.
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Divides out the content and fixes the sign so that the first nonzero
/// entry is positive. Returns `None` for the zero vector.
pub fn primitive_canonical(v: &[i64]) -> Option<Vec<i64>> {
    let mut p = primitive(v)?;
    if p.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        p.iter_mut().for_each(|x| *x = -*x);
    }
    Some(p)
}

/// Divides out the content, keeping the direction.
pub fn primitive(v: &[i64]) -> Option<Vec<i64>> {
    let g = v.iter().fold(0i128, |acc, &x| gcd(acc, x as i128));
    if g == 0 {
        return None;
    }
    Some(v.iter().map(|&x| narrow(x as i128 / g)).collect())
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    narrow(a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum())
}

/// A saturated integer basis of `{x in Z^n : A x = 0}`, where `rows` are the
/// rows of `A` and `n` the ambient dimension. The basis is computed by
/// unimodular column reduction, so it spans the full kernel lattice.
pub fn integer_kernel(rows: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut u: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect();
    // Column operations act on columns of both `a` and `u`.
    let col_op = |m: &mut Vec<Vec<i128>>, p: usize, q: usize, x: i128, y: i128, z: i128, w: i128| {
        for row in m.iter_mut() {
            let (cp, cq) = (row[p], row[q]);
            row[p] = x * cp + y * cq;
            row[q] = z * cp + w * cq;
        }
    };
    let mut pivot = 0;
    for r in 0..a.len() {
        if pivot >= n {
            break;
        }
        for j in pivot + 1..n {
            let (ap, aj) = (a[r][pivot], a[r][j]);
            if aj == 0 {
                continue;
            }
            let (g, x, y) = ext_gcd(ap, aj);
            // [x  -aj/g; y  ap/g] has determinant 1.
            let (z, w) = (-aj / g, ap / g);
            col_op(&mut a, pivot, j, x, y, z, w);
            col_op(&mut u, pivot, j, x, y, z, w);
        }
        if a[r][pivot] != 0 {
            pivot += 1;
        }
    }
    (pivot..n)
        .map(|j| u.iter().map(|row| narrow(row[j])).collect())
        .collect()
}

/// Invariant factors of an integer matrix (Smith normal form diagonal,
/// nonzero entries only, each dividing the next).
pub fn smith_invariants(rows: &[Vec<i64>], ncols: usize) -> Vec<i64> {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), ncols, "ragged relation matrix");
            r.iter().map(|&x| x as i128).collect()
        })
        .collect();
    let nrows = a.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // smallest nonzero entry in the remaining block as pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t];
            let mut dirty = false;
            for i in t + 1..nrows {
                let q = a[i][t].div_euclid(p);
                if q != 0 {
                    for j in t..ncols {
                        a[i][j] -= q * a[t][j];
                    }
                }
                dirty |= a[i][t] != 0;
            }
            for j in t + 1..ncols {
                let q = a[t][j].div_euclid(p);
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                dirty |= a[t][j] != 0;
            }
            if !dirty {
                // divisibility of the rest of the block
                let bad = (t + 1..nrows)
                    .flat_map(|i| (t + 1..ncols).map(move |j| (i, j)))
                    .find(|&(i, j)| a[i][j] % p != 0);
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in t..ncols {
                            a[t][j] += a[i][j];
                        }
                        continue;
                    }
                }
            }
            // move the smallest nonzero entry of row/column t to the pivot
            let mut best = (t, t);
            for i in t..nrows {
                if a[i][t] != 0 && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..ncols {
                if a[t][j] != 0 && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            a.swap(t, best.0);
            for row in a.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(narrow(a[t][t].abs()));
        t += 1;
    }
    diag
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_and_inverse() {
        let m = Matrix::from_rows(vec![vec![-1, 0], vec![1, 1]]);
        assert_eq!(m.det(), -1);
        assert_eq!(m.unimodular_inverse().unwrap(), m);
        let m = Matrix::from_rows(vec![vec![2, 1, 0], vec![1, 1, 0], vec![0, 3, 1]]);
        assert_eq!(m.det(), 1);
        assert!(m.mul(&m.unimodular_inverse().unwrap()).is_identity());
        assert!(Matrix::from_rows(vec![vec![2, 0], vec![0, 1]]).unimodular_inverse().is_none());
    }

    #[test]
    fn det_needs_pivoting() {
        let m = Matrix::from_rows(vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]);
        assert_eq!(m.det(), -1);
        assert_eq!(Matrix::from_rows(vec![vec![1, 2], vec![2, 4]]).det(), 0);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_of_rows(&[vec![1, 2, 3], vec![2, 4, 6]]), 1);
        assert_eq!(rank_of_rows(&[vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0]]), 2);
        assert_eq!(rank_of_rows(&[]), 0);
    }

    #[test]
    fn kernel_is_saturated() {
        // x + y + z = 0 over Z has basis of covolume 1
        let k = integer_kernel(&[vec![1, 1, 1]], 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(dot(v, &[1, 1, 1]), 0);
        }
        // saturation: 2x + 4y = 0 has kernel generated by (-2, 1), not (-4, 2)
        let k = integer_kernel(&[vec![2, 4]], 2);
        assert_eq!(k.len(), 1);
        assert_eq!(primitive(&k[0]).unwrap(), k[0]);
        assert!(integer_kernel(&[vec![1, 0], vec![0, 1]], 2).is_empty());
        assert_eq!(integer_kernel(&[], 2).len(), 2);
    }

    #[test]
    fn smith_examples() {
        assert_eq!(smith_invariants(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3), vec![2, 6, 12]);
        assert_eq!(smith_invariants(&[vec![1, -1], vec![-1, 1]], 2), vec![1]);
        assert!(smith_invariants(&[], 3).is_empty());
        assert_eq!(smith_invariants(&[vec![2, 0], vec![0, 3]], 2), vec![1, 6]);
    }

    #[test]
    fn canonical_vectors() {
        assert_eq!(primitive_canonical(&[0, -2, 4]), Some(vec![0, 1, -2]));
        assert_eq!(primitive(&[0, -2, 4]), Some(vec![0, -1, 2]));
        assert_eq!(primitive_canonical(&[0, 0]), None);
    }
}
