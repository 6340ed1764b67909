//! Dense arbitrary-precision integer matrices, Smith and Hermite normal forms.
//!
//! The Smith reduction uses elementary row/column operations with the pivot
//! chosen as the minimal nonzero absolute value in the trailing block, and
//! tracks the unimodular transforms together with their inverses.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::from(1));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntegerMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.get(k, j);
                    let cur = out.get(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = BigInt::zero();
                for j in 0..self.cols {
                    acc += self.get(i, j) * &v[j];
                }
                acc
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j).clone();
            self.set(i, j, v);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -self.get(i, j).clone();
            self.set(i, j, v);
        }
    }

    /// row[dst] += c * row[src]
    fn row_add(&mut self, dst: usize, src: usize, c: &BigInt) {
        for j in 0..self.cols {
            let add = c * self.get(src, j);
            let v = self.get(dst, j) + add;
            self.set(dst, j, v);
        }
    }

    /// col[dst] += c * col[src]
    fn col_add(&mut self, dst: usize, src: usize, c: &BigInt) {
        for i in 0..self.rows {
            let add = c * self.get(i, src);
            let v = self.get(i, dst) + add;
            self.set(i, dst, v);
        }
    }

    pub fn rank(&self) -> usize {
        snf(self).rank()
    }

    /// Basis of the integer kernel of `x -> M x`, as column vectors.
    /// The basis is saturated: it spans `ker M` over the rationals and
    /// generates `ker M` intersected with the integer lattice.
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        let ext = snf_ext(self);
        let r = ext.snf.rank();
        (r..self.cols).map(|j| ext.snf.v.col(j)).collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination. Square only.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "det of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::from(1);
        }
        let mut m = self.to_rows();
        let mut sign = 1i32;
        let mut prev = BigInt::from(1);
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                m.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                    let (q, r) = num.div_rem(&prev);
                    debug_assert!(r.is_zero());
                    m[i][j] = q;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.det().abs() == BigInt::from(1)
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegerMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(
                f,
                "  [{}]",
                self.row(i)
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )?;
        }
        Ok(())
    }
}

/// `u * m * v = d` with `u`, `v` unimodular and `d` in Smith normal form.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        let n = self.d.rows().min(self.d.cols());
        (0..n).filter(|&i| !self.d.get(i, i).is_zero()).count()
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d.get(i, i).clone()).collect()
    }

    /// The nonzero diagonal entries d_1 | d_2 | ...
    pub fn divisors(&self) -> Vec<BigInt> {
        self.diagonal()
            .into_iter()
            .filter(|x| !x.is_zero())
            .collect()
    }
}

pub(crate) struct SnfExt {
    pub snf: SnfResult,
    pub u_inv: IntegerMatrix,
    pub v_inv: IntegerMatrix,
}

fn find_min_nonzero(b: &IntegerMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in k..b.rows() {
        for j in k..b.cols() {
            let v = b.get(i, j);
            if v.is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some((bi, bj)) => {
                    if v.abs() < b.get(bi, bj).abs() {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    best
}

pub fn snf(m: &IntegerMatrix) -> SnfResult {
    snf_ext(m).snf
}

pub(crate) fn snf_ext(m: &IntegerMatrix) -> SnfExt {
    let (r, c) = (m.rows(), m.cols());
    let mut b = m.clone();
    let mut u = IntegerMatrix::identity(r);
    let mut u_inv = IntegerMatrix::identity(r);
    let mut v = IntegerMatrix::identity(c);
    let mut v_inv = IntegerMatrix::identity(c);

    let mut k = 0;
    while k < r.min(c) {
        let Some((pi, pj)) = find_min_nonzero(&b, k) else {
            break;
        };
        b.swap_rows(k, pi);
        u.swap_rows(k, pi);
        u_inv.swap_cols(k, pi);
        b.swap_cols(k, pj);
        v.swap_cols(k, pj);
        v_inv.swap_rows(k, pj);
        loop {
            // keep the pivot: the minimal nonzero entry of the block
            if let Some((mi, mj)) = find_min_nonzero(&b, k) {
                b.swap_rows(k, mi);
                u.swap_rows(k, mi);
                u_inv.swap_cols(k, mi);
                b.swap_cols(k, mj);
                v.swap_cols(k, mj);
                v_inv.swap_rows(k, mj);
            }
            if b.get(k, k).is_negative() {
                b.negate_row(k);
                u.negate_row(k);
                u_inv.negate_col(k);
            }
            let pivot = b.get(k, k).clone();
            for i in k + 1..r {
                let e = b.get(i, k);
                if !e.is_zero() {
                    let q = e / &pivot;
                    if !q.is_zero() {
                        let neg = -q.clone();
                        b.row_add(i, k, &neg);
                        u.row_add(i, k, &neg);
                        u_inv.col_add(k, i, &q);
                    }
                }
            }
            for j in k + 1..c {
                let e = b.get(k, j);
                if !e.is_zero() {
                    let q = e / &pivot;
                    if !q.is_zero() {
                        let neg = -q.clone();
                        b.col_add(j, k, &neg);
                        v.col_add(j, k, &neg);
                        v_inv.row_add(k, j, &q);
                    }
                }
            }
            let col_clean = (k + 1..r).all(|i| b.get(i, k).is_zero());
            let row_clean = (k + 1..c).all(|j| b.get(k, j).is_zero());
            if !(col_clean && row_clean) {
                continue;
            }
            // divisibility: pivot must divide the trailing block
            let pivot = b.get(k, k).clone();
            let culprit = (k + 1..r).find_map(|i| {
                (k + 1..c).find_map(|j| {
                    if (b.get(i, j) % &pivot).is_zero() {
                        None
                    } else {
                        Some(i)
                    }
                })
            });
            match culprit {
                Some(i) => {
                    let one = BigInt::from(1);
                    let minus = BigInt::from(-1);
                    b.row_add(k, i, &one);
                    u.row_add(k, i, &one);
                    u_inv.col_add(i, k, &minus);
                }
                None => break,
            }
        }
        k += 1;
    }

    SnfExt {
        snf: SnfResult { u, d: b, v },
        u_inv,
        v_inv,
    }
}

/// Row-style Hermite normal form of the lattice generated by `rows`:
/// echelon basis with positive pivots and entries above each pivot reduced
/// into `[0, pivot)`. Zero rows are dropped; the result is a canonical basis.
pub fn row_hnf(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> = rows.iter().filter(|r| !r.iter().all(|x| x.is_zero())).cloned().collect();
    if m.is_empty() {
        return vec![];
    }
    let cols = m[0].len();
    let mut done = 0;
    for col in 0..cols {
        loop {
            let mut idx: Option<usize> = None;
            for i in done..m.len() {
                if !m[i][col].is_zero() {
                    match idx {
                        None => idx = Some(i),
                        Some(p) => {
                            if m[i][col].abs() < m[p][col].abs() {
                                idx = Some(i);
                            }
                        }
                    }
                }
            }
            let Some(p) = idx else { break };
            m.swap(done, p);
            if m[done][col].is_negative() {
                for x in m[done].iter_mut() {
                    *x = -x.clone();
                }
            }
            let pivot = m[done][col].clone();
            let mut reduced_all = true;
            for i in done + 1..m.len() {
                if !m[i][col].is_zero() {
                    let q = m[i][col].div_floor(&pivot);
                    for j in 0..cols {
                        let s = &q * &m[done][j];
                        m[i][j] -= s;
                    }
                    if !m[i][col].is_zero() {
                        reduced_all = false;
                    }
                }
            }
            if reduced_all {
                // reduce entries above the pivot into [0, pivot)
                for i in 0..done {
                    let q = m[i][col].div_floor(&pivot);
                    if !q.is_zero() {
                        for j in 0..cols {
                            let s = &q * &m[done][j];
                            m[i][j] -= s;
                        }
                    }
                }
                done += 1;
                break;
            }
        }
        if done == m.len() {
            break;
        }
    }
    m.truncate(done);
    m.retain(|r| !r.iter().all(|x| x.is_zero()));
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn assert_snf_contract(m: &IntegerMatrix) {
        let res = snf(m);
        assert!(res.u.is_unimodular(), "U not unimodular");
        assert!(res.v.is_unimodular(), "V not unimodular");
        let umv = res.u.mul(m).mul(&res.v);
        assert_eq!(umv, res.d, "U*M*V != D");
        // diagonal, nonnegative, divisibility chain
        for i in 0..res.d.rows() {
            for j in 0..res.d.cols() {
                if i != j {
                    assert!(res.d.get(i, j).is_zero(), "D not diagonal");
                }
            }
        }
        let diag = res.diagonal();
        for w in diag.windows(2) {
            assert!(!w[0].is_negative() && !w[1].is_negative());
            if !w[0].is_zero() {
                assert!((&w[1] % &w[0]).is_zero(), "divisibility chain broken");
            } else {
                assert!(w[1].is_zero(), "zero before nonzero on diagonal");
            }
        }
        // inverses from the extended reduction
        let ext = snf_ext(m);
        assert_eq!(ext.snf.u.mul(&ext.u_inv), IntegerMatrix::identity(m.rows()));
        assert_eq!(ext.snf.v.mul(&ext.v_inv), IntegerMatrix::identity(m.cols()));
    }

    #[test]
    fn snf_identity() {
        let m = IntegerMatrix::identity(2);
        let res = snf(&m);
        assert_eq!(res.d, IntegerMatrix::identity(2));
        assert_snf_contract(&m);
    }

    #[test]
    fn snf_two_by_two() {
        // hand reduction: d1 = gcd of entries = 2, d1*d2 = |det| = 8
        let m = IntegerMatrix::from_i64(&[&[2, 4], &[6, 8]]);
        let res = snf(&m);
        assert_eq!(res.diagonal(), vec![BigInt::from(2), BigInt::from(4)]);
        assert_snf_contract(&m);
    }

    #[test]
    fn snf_zero_matrix() {
        let m = IntegerMatrix::zero(2, 3);
        let res = snf(&m);
        assert!(res.d.is_zero());
        assert_eq!(res.rank(), 0);
        assert_snf_contract(&m);
    }

    #[test]
    fn kernel_of_sum_matrix() {
        let m = IntegerMatrix::from_i64(&[&[1, 1, 1]]);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn det_matches_snf_product() {
        let m = IntegerMatrix::from_i64(&[&[2, 1, 0], &[0, 3, 1], &[1, 0, 4]]);
        let d = m.det();
        let prod: BigInt = snf(&m).divisors().iter().product();
        assert_eq!(d.abs(), prod);
    }

    #[test]
    fn hnf_canonical_basis() {
        let rows = vec![
            vec![BigInt::from(2), BigInt::from(0)],
            vec![BigInt::from(0), BigInt::from(2)],
            vec![BigInt::from(1), BigInt::from(1)],
        ];
        let h = row_hnf(&rows);
        assert_eq!(
            h,
            vec![
                vec![BigInt::from(1), BigInt::from(1)],
                vec![BigInt::from(0), BigInt::from(2)]
            ]
        );
    }

    proptest! {
        #[test]
        fn snf_contract_random(rows in 1usize..4, cols in 1usize..4,
                               entries in proptest::collection::vec(-9i64..=9, 16)) {
            let m = IntegerMatrix::from_rows(
                (0..rows).map(|i| (0..cols).map(|j| BigInt::from(entries[i * 4 + j])).collect()).collect()
            );
            assert_snf_contract(&m);
        }

        #[test]
        fn hnf_generates_same_lattice(entries in proptest::collection::vec(-5i64..=5, 6)) {
            let rows: Vec<Vec<BigInt>> = entries.chunks(3).map(|c| c.iter().map(|&x| BigInt::from(x)).collect()).collect();
            let h = row_hnf(&rows);
            // every original row must be an integer combination of the HNF basis:
            // reduce it by the echelon basis and expect zero.
            for r in &rows {
                let mut v = r.clone();
                for b in &h {
                    let p = b.iter().position(|x| !x.is_zero()).unwrap();
                    if !v[p].is_zero() {
                        let q = &v[p] / &b[p];
                        prop_assert!((&v[p] % &b[p]).is_zero());
                        for j in 0..v.len() {
                            let s = &q * &b[j];
                            v[j] -= s;
                        }
                    }
                }
                prop_assert!(v.iter().all(|x| x.is_zero()));
            }
        }
    }
}
