//! Smith normal form over the integers with unimodular transforms.
//!
//! Arithmetic is arbitrary precision throughout; intermediate growth can
//! overflow fixed-width integers even on small inputs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> IntMat {
        IntMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntMat {
        let mut m = IntMat::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> IntMat {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        let mut m = IntMat::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(v));
            }
        }
        m
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

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMat::zero(self.rows, other.cols);
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

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.data.clone();
        let at = |a: &Vec<BigInt>, i: usize, j: usize| a[i * n + j].clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if at(&a, k, k).is_zero() {
                let swap = (k + 1..n).find(|&i| !at(&a, i, k).is_zero());
                match swap {
                    None => return BigInt::zero(),
                    Some(i) => {
                        for j in 0..n {
                            a.swap(k * n + j, i * n + j);
                        }
                        sign = -sign;
                    }
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (at(&a, i, j) * at(&a, k, k) - at(&a, i, k) * at(&a, k, j)) / &prev;
                    a[i * n + j] = v;
                }
            }
            prev = at(&a, k, k);
        }
        sign * at(&a, n - 1, n - 1)
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }
}

/// S = U·M·V with U, V unimodular and S diagonal with d_i | d_{i+1}, d_i >= 0.
pub struct Snf {
    pub u: IntMat,
    pub s: IntMat,
    pub v: IntMat,
}

impl Snf {
    /// Nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.s
            .diagonal()
            .into_iter()
            .filter(|d| !d.is_zero())
            .collect()
    }
}

/// Diagonalize by unimodular row/column operations. Pivots are chosen by
/// smallest nonzero absolute value with row-major tie-breaking.
pub fn smith_normal_form(m: &IntMat) -> Snf {
    let rows = m.rows();
    let cols = m.cols();
    let mut s = m.clone();
    let mut u = IntMat::identity(rows);
    let mut v = IntMat::identity(cols);

    let swap_rows = |s: &mut IntMat, u: &mut IntMat, a: usize, b: usize| {
        if a == b {
            return;
        }
        for j in 0..s.cols() {
            let x = s.get(a, j).clone();
            let y = s.get(b, j).clone();
            s.set(a, j, y);
            s.set(b, j, x);
        }
        for j in 0..u.cols() {
            let x = u.get(a, j).clone();
            let y = u.get(b, j).clone();
            u.set(a, j, y);
            u.set(b, j, x);
        }
    };
    let swap_cols = |s: &mut IntMat, v: &mut IntMat, a: usize, b: usize| {
        if a == b {
            return;
        }
        for i in 0..s.rows() {
            let x = s.get(i, a).clone();
            let y = s.get(i, b).clone();
            s.set(i, a, y);
            s.set(i, b, x);
        }
        for i in 0..v.rows() {
            let x = v.get(i, a).clone();
            let y = v.get(i, b).clone();
            v.set(i, a, y);
            v.set(i, b, x);
        }
    };
    // row_b -= q * row_a  (applied to S and U).
    let row_op = |s: &mut IntMat, u: &mut IntMat, b: usize, a: usize, q: &BigInt| {
        if q.is_zero() {
            return;
        }
        for j in 0..s.cols() {
            let val = s.get(b, j) - q * s.get(a, j);
            s.set(b, j, val);
        }
        for j in 0..u.cols() {
            let val = u.get(b, j) - q * u.get(a, j);
            u.set(b, j, val);
        }
    };
    // col_b -= q * col_a  (applied to S and V).
    let col_op = |s: &mut IntMat, v: &mut IntMat, b: usize, a: usize, q: &BigInt| {
        if q.is_zero() {
            return;
        }
        for i in 0..s.rows() {
            let val = s.get(i, b) - q * s.get(i, a);
            s.set(i, b, val);
        }
        for i in 0..v.rows() {
            let val = v.get(i, b) - q * v.get(i, a);
            v.set(i, b, val);
        }
    };

    let rank_bound = rows.min(cols);
    for k in 0..rank_bound {
        'pivot: loop {
            // Smallest nonzero |entry| in the trailing block, row-major ties.
            let mut pivot: Option<(usize, usize)> = None;
            for i in k..rows {
                for j in k..cols {
                    let val = s.get(i, j);
                    if val.is_zero() {
                        continue;
                    }
                    match pivot {
                        None => pivot = Some((i, j)),
                        Some((pi, pj)) => {
                            if val.abs() < s.get(pi, pj).abs() {
                                pivot = Some((i, j));
                            }
                        }
                    }
                }
            }
            let (pi, pj) = match pivot {
                None => break 'pivot,
                Some(p) => p,
            };
            swap_rows(&mut s, &mut u, k, pi);
            swap_cols(&mut s, &mut v, k, pj);

            let mut clean = true;
            for i in k + 1..rows {
                let q = s.get(i, k).div_floor(s.get(k, k));
                row_op(&mut s, &mut u, i, k, &q);
                if !s.get(i, k).is_zero() {
                    clean = false;
                }
            }
            for j in k + 1..cols {
                let q = s.get(k, j).div_floor(s.get(k, k));
                col_op(&mut s, &mut v, j, k, &q);
                if !s.get(k, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue 'pivot;
            }
            // Enforce divisibility into the trailing block: if some entry is
            // not divisible by the pivot, absorb its row and retry.
            for i in k + 1..rows {
                for j in k + 1..cols {
                    if !s.get(i, j).mod_floor(s.get(k, k)).is_zero() {
                        let one = BigInt::from(-1);
                        row_op(&mut s, &mut u, k, i, &one); // row_k += row_i
                        continue 'pivot;
                    }
                }
            }
            break 'pivot;
        }
        if s.get(k, k).is_negative() {
            let q = BigInt::from(2);
            // Negate row k: row_k -= 2 * row_k.
            row_op(&mut s, &mut u, k, k, &q);
        }
    }
    Snf { u, s, v }
}
