//! Dense integer matrices and Smith normal form.

use std::fmt;

/// Entry type. Unimodular transforms grow quickly, so entries are wider
/// than the group data they start from and all arithmetic is checked.
pub type Int = i128;

#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn diagonal<T: Copy + Into<Int>>(entries: &[T]) -> Self {
        let mut m = IntMatrix::zeros(entries.len(), entries.len());
        for (i, &d) in entries.iter().enumerate() {
            m[(i, i)] = d.into();
        }
        m
    }

    /// Panics on ragged rows. `cols` is needed for the zero-row case.
    pub fn from_rows<T: Copy + Into<Int>>(rows: &[Vec<T>], cols: usize) -> Self {
        let mut m = IntMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix");
            for (j, &v) in row.iter().enumerate() {
                m[(i, j)] = v.into();
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

    pub fn to_rows(&self) -> Vec<Vec<Int>> {
        (0..self.rows)
            .map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows);
        let mut m = IntMatrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)];
            }
            for j in 0..other.cols {
                m[(i, self.cols + j)] = other[(i, j)];
            }
        }
        m
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut m = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    m[(i, j)] = checked(m[(i, j)], a, other[(k, j)], 0, 0);
                }
            }
        }
        m
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)] == 0))
    }

    /// Fraction-free Gaussian elimination (Bareiss).
    pub fn determinant(&self) -> Int {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return 1;
        }
        let mut a = self.to_rows();
        let mut sign = 1;
        let mut prev: Int = 1;
        for k in 0..n - 1 {
            if a[k][k] == 0 {
                match (k + 1..n).find(|&i| a[i][k] != 0) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = checked(0, a[i][j], a[k][k], -a[i][k], a[k][j]) / prev;
                }
            }
            prev = a[k][k];
        }
        sign * a[n - 1][n - 1]
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

    /// row[target] += factor * row[source]
    fn add_row(&mut self, target: usize, source: usize, factor: Int) {
        for j in 0..self.cols {
            let v = self[(source, j)];
            self[(target, j)] = checked(self[(target, j)], factor, v, 1, 0);
        }
    }

    /// `(row[r], row[s]) <- (x·row[r] + y·row[s], z·row[r] + w·row[s])`.
    fn mix_rows(&mut self, r: usize, s: usize, [x, y, z, w]: [Int; 4]) {
        for j in 0..self.cols {
            let (u, v) = (self[(r, j)], self[(s, j)]);
            self[(r, j)] = checked(0, x, u, y, v);
            self[(s, j)] = checked(0, z, u, w, v);
        }
    }

    fn mix_cols(&mut self, r: usize, s: usize, [x, y, z, w]: [Int; 4]) {
        for i in 0..self.rows {
            let (u, v) = (self[(i, r)], self[(i, s)]);
            self[(i, r)] = checked(0, x, u, y, v);
            self[(i, s)] = checked(0, z, u, w, v);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            self[(r, j)] = -self[(r, j)];
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = Int;

    fn index(&self, (i, j): (usize, usize)) -> &Int {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_rows())
    }
}

/// `left * input * right == diag`, with `left`, `right` unimodular and the
/// diagonal entries non-negative and forming a divisibility chain (zeros last).
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub left: IntMatrix,
    pub diag: IntMatrix,
    pub right: IntMatrix,
}

impl SmithForm {
    pub fn diagonal_entries(&self) -> Vec<Int> {
        (0..self.diag.rows.min(self.diag.cols))
            .map(|i| self.diag[(i, i)])
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal_entries().iter().filter(|&&d| d != 0).count()
    }
}

/// Smallest absolute nonzero entry in the lower-right block starting at
/// `(t, t)`; ties go to the first in row-major order.
fn find_pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(Int, usize, usize)> = None;
    for i in t..a.rows {
        for j in t..a.cols {
            let v = a[(i, j)].abs();
            if v != 0 && best.is_none_or(|(b, _, _)| v < b) {
                best = Some((v, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// `base + x·u + y·v`, panicking instead of wrapping on overflow.
fn checked(base: Int, x: Int, u: Int, y: Int, v: Int) -> Int {
    x.checked_mul(u)
        .zip(y.checked_mul(v))
        .and_then(|(xu, yv)| base.checked_add(xu)?.checked_add(yv))
        .expect("integer overflow in matrix arithmetic")
}

/// `(g, s, t)` with `g = gcd(p, q) > 0` and `s·p + t·q = g`.
fn extended_gcd(p: Int, q: Int) -> (Int, Int, Int) {
    let (mut r0, mut r1) = (p, q);
    let (mut s0, mut s1): (Int, Int) = (1, 0);
    let (mut t0, mut t1): (Int, Int) = (0, 1);
    while r1 != 0 {
        let k = r0 / r1;
        (r0, r1) = (r1, r0 - k * r1);
        (s0, s1) = (s1, s0 - k * s1);
        (t0, t1) = (t1, t0 - k * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Unimodular 2×2 step turning `(p, q)` into `(gcd, 0)`; a plain
/// subtraction when `p | q`.
fn clearing_step(p: Int, q: Int) -> Option<[Int; 4]> {
    if q == 0 {
        return None;
    }
    if q % p == 0 {
        return Some([1, 0, -(q / p), 1]);
    }
    let (g, s, t) = extended_gcd(p, q);
    Some([s, t, -(q / g), p / g])
}

pub fn smith_normal_form(input: &IntMatrix) -> SmithForm {
    let (m, n) = (input.rows, input.cols);
    let mut a = input.clone();
    let mut left = IntMatrix::identity(m);
    let mut right = IntMatrix::identity(n);

    for t in 0..m.min(n) {
        let Some((pi, pj)) = find_pivot(&a, t) else {
            break;
        };
        a.swap_rows(t, pi);
        left.swap_rows(t, pi);
        a.swap_cols(t, pj);
        right.swap_cols(t, pj);
        loop {
            for i in t + 1..m {
                if let Some(op) = clearing_step(a[(t, t)], a[(i, t)]) {
                    a.mix_rows(t, i, op);
                    left.mix_rows(t, i, op);
                }
            }
            for j in t + 1..n {
                if let Some(op) = clearing_step(a[(t, t)], a[(t, j)]) {
                    a.mix_cols(t, j, op);
                    right.mix_cols(t, j, op);
                }
            }
            if (t + 1..m).any(|i| a[(i, t)] != 0) {
                continue;
            }
            // The pivot must divide the rest of the block; otherwise fold the
            // offending row into the pivot row and clear again.
            let p = a[(t, t)];
            match (t + 1..m).find(|&i| (t + 1..n).any(|j| a[(i, j)] % p != 0)) {
                Some(i) => {
                    a.add_row(t, i, 1);
                    left.add_row(t, i, 1);
                }
                None => break,
            }
        }
        if a[(t, t)] < 0 {
            a.negate_row(t);
            left.negate_row(t);
        }
    }
    SmithForm {
        left,
        diag: a,
        right,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: &IntMatrix) -> Vec<Int> {
        let snf = smith_normal_form(a);
        assert_eq!(snf.left.mul(a).mul(&snf.right), snf.diag);
        assert!(snf.diag.is_diagonal());
        assert_eq!(snf.left.determinant().abs(), 1);
        assert_eq!(snf.right.determinant().abs(), 1);
        let d = snf.diagonal_entries();
        for w in d.windows(2) {
            assert!(w[0] >= 0 && w[1] >= 0);
            assert!(w[1] % w[0].max(1) == 0 || w[0] == 0 && w[1] == 0);
        }
        d
    }

    #[test]
    fn small_examples() {
        assert_eq!(check(&IntMatrix::diagonal(&[1])), vec![1]);
        assert_eq!(check(&IntMatrix::diagonal(&[2, 3])), vec![1, 6]);
        assert_eq!(check(&IntMatrix::from_rows(&[vec![0]], 1)), vec![0]);
        assert_eq!(check(&IntMatrix::zeros(0, 0)), Vec::<Int>::new());
        assert_eq!(check(&IntMatrix::zeros(0, 3)), Vec::<Int>::new());
    }

    #[test]
    fn rectangular_and_negative() {
        let a = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3);
        assert_eq!(check(&a), vec![2, 6, 12]);
        let b = IntMatrix::from_rows(&[vec![2, 0, 4], vec![0, 3, 0]], 3);
        assert_eq!(check(&b), vec![1, 6]);
        let c = IntMatrix::from_rows(&[vec![6], vec![4]], 1);
        assert_eq!(check(&c), vec![2]);
    }

    #[test]
    fn determinant_values() {
        let a = IntMatrix::from_rows(&[vec![2, 1], vec![7, 4]], 2);
        assert_eq!(a.determinant(), 1);
        let b = IntMatrix::from_rows(&[vec![0, 1, 2], vec![1, 0, 3], vec![4, -3, 8]], 3);
        assert_eq!(b.determinant(), -2);
    }
}
