//! Dense exact linear algebra over any [`Field`].

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::field::{Field, Gauss};

#[derive(Clone, PartialEq, Debug)]
pub struct Mat<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Mat<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<F>]) -> Self {
        let n = cols.first().map_or(0, Vec::len);
        Self::from_fn(n, cols.len(), |i, j| cols[j][i].clone())
    }

    /// Single-entry matrix `E_ij`.
    pub fn unit(rows: usize, cols: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        m[(i, j)] = F::one();
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
    pub fn row(&self, i: usize) -> Vec<F> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }
    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }
    /// Row-major entries.
    pub fn entries(&self) -> &[F] {
        &self.data
    }
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Mat<G> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, k: &F) -> Self {
        self.map(|x| x.clone() * k.clone())
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    /// Lie bracket `AB - BA`.
    pub fn bracket(&self, other: &Self) -> Self {
        self * other - other * self
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::identity(self.rows);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Submatrix on the given row and column index sets.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv();
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].clone() * inv.clone();
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        let v = m[(r, j)].clone() * f.clone();
                        m[(i, j)] = m[(i, j)].clone() - v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : A v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![F::zero(); self.cols];
                v[fc] = F::one();
                for (k, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r[(k, fc)].clone();
                }
                v
            })
            .collect()
    }

    pub fn det(&self) -> F {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return F::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det = det * piv.clone();
            let inv = piv.inv();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone() * inv.clone();
                for j in c..n {
                    let v = m[(c, j)].clone() * f.clone();
                    m[(i, j)] = m[(i, j)].clone() - v;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                F::one()
            } else {
                F::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| r[(i, j + n)].clone()))
    }

    /// Some solution of `A x = b`, if one exists.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let aug = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (k, &pc) in pivots.iter().enumerate() {
            x[pc] = r[(k, self.cols)].clone();
        }
        Some(x)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(F::zero(), |acc, j| acc + self[(i, j)].clone() * v[j].clone())
            })
            .collect()
    }
}

impl Mat<Gauss> {
    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }
    pub fn conj(&self) -> Self {
        self.map(Gauss::conj)
    }
}

impl<F> Index<(usize, usize)> for Mat<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Mat<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<'a, F: Field> Mul<&'a Mat<F>> for &'a Mat<F> {
    type Output = Mat<F>;
    fn mul(self, o: &Mat<F>) -> Mat<F> {
        assert_eq!(self.cols, o.rows, "shape mismatch in product");
        let mut out = Mat::<F>::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                }
            }
        }
        out
    }
}

impl<F: Field> Mul for Mat<F> {
    type Output = Mat<F>;
    fn mul(self, o: Mat<F>) -> Mat<F> {
        &self * &o
    }
}

impl<'a, F: Field> Add<&'a Mat<F>> for &'a Mat<F> {
    type Output = Mat<F>;
    fn add(self, o: &Mat<F>) -> Mat<F> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }
}

impl<F: Field> Add for Mat<F> {
    type Output = Mat<F>;
    fn add(self, o: Mat<F>) -> Mat<F> {
        &self + &o
    }
}

impl<'a, F: Field> Sub<&'a Mat<F>> for &'a Mat<F> {
    type Output = Mat<F>;
    fn sub(self, o: &Mat<F>) -> Mat<F> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }
}

impl<F: Field> Sub for Mat<F> {
    type Output = Mat<F>;
    fn sub(self, o: Mat<F>) -> Mat<F> {
        &self - &o
    }
}

impl<F: Field> Neg for Mat<F> {
    type Output = Mat<F>;
    fn neg(self) -> Mat<F> {
        self.map(|x| -x.clone())
    }
}

/// Flatten a list of matrices into coordinate vectors.
pub fn flatten<F: Field>(ms: &[Mat<F>]) -> Vec<Vec<F>> {
    ms.iter().map(|m| m.entries().to_vec()).collect()
}

/// Dimension of the span of the given vectors.
pub fn span_rank<F: Field>(vs: &[Vec<F>]) -> usize {
    if vs.is_empty() {
        return 0;
    }
    Mat::from_rows(vs.to_vec()).rank()
}

/// Coordinates of `v` in the (independent) family `basis`, if `v` lies in its span.
pub fn coords_in<F: Field>(basis: &[Vec<F>], v: &[F]) -> Option<Vec<F>> {
    if basis.is_empty() {
        return v.iter().all(F::is_zero).then(Vec::new);
    }
    Mat::from_cols(basis).solve(v)
}

/// Extract a maximal independent subfamily (in order).
pub fn independent_subset<F: Field>(vs: &[Vec<F>]) -> Vec<Vec<F>> {
    if vs.is_empty() {
        return Vec::new();
    }
    let (_, pivots) = Mat::from_cols(vs).rref();
    pivots.into_iter().map(|p| vs[p].clone()).collect()
}

/// Whether two families span the same subspace.
pub fn same_span<F: Field>(a: &[Vec<F>], b: &[Vec<F>]) -> bool {
    let ra = span_rank(a);
    let rb = span_rank(b);
    let joint: Vec<Vec<F>> = a.iter().chain(b).cloned().collect();
    ra == rb && span_rank(&joint) == ra
}

/// Whether every vector of `a` lies in the span of `b`.
pub fn contained_in<F: Field>(a: &[Vec<F>], b: &[Vec<F>]) -> bool {
    let rb = span_rank(b);
    let joint: Vec<Vec<F>> = a.iter().chain(b).cloned().collect();
    span_rank(&joint) == rb
}

/// Fast coordinates with respect to a fixed independent family.
///
/// A set of coordinate positions on which the family is independent is chosen
/// once; coordinates are then read off by one small matrix product and
/// checked against the full vector.
#[derive(Clone, Debug)]
pub struct Coords<F> {
    basis: Vec<Vec<F>>,
    positions: Vec<usize>,
    inv: Mat<F>,
}

impl<F: Field> Coords<F> {
    /// Returns `None` if the family is dependent.
    pub fn new(basis: Vec<Vec<F>>) -> Option<Self> {
        if basis.is_empty() {
            return Some(Coords { basis, positions: Vec::new(), inv: Mat::zeros(0, 0) });
        }
        let (_, positions) = Mat::from_rows(basis.clone()).rref();
        if positions.len() != basis.len() {
            return None;
        }
        let k = basis.len();
        let square = Mat::from_fn(k, k, |i, j| basis[j][positions[i]].clone());
        let inv = square.inverse()?;
        Some(Coords { basis, positions, inv })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    /// Coordinates of `v`, or `None` if `v` is outside the span.
    pub fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        let picked: Vec<F> = self.positions.iter().map(|&p| v[p].clone()).collect();
        let c = self.inv.mul_vec(&picked);
        let mut back = vec![F::zero(); v.len()];
        for (ci, b) in c.iter().zip(&self.basis) {
            if ci.is_zero() {
                continue;
            }
            for (x, y) in back.iter_mut().zip(b) {
                *x = x.clone() + ci.clone() * y.clone();
            }
        }
        (back == v).then_some(c)
    }
}

/// Pfaffian of a skew-symmetric matrix by congruence elimination.
pub fn pfaffian<F: Field>(a: &Mat<F>) -> F {
    assert!(a.is_square(), "Pfaffian of a non-square matrix");
    let n = a.rows();
    if n % 2 == 1 {
        return F::zero();
    }
    let mut m = a.clone();
    let mut pf = F::one();
    let mut k = 0;
    while k < n {
        let Some(p) = (k + 1..n).find(|&j| !m[(k, j)].is_zero()) else {
            return F::zero();
        };
        if p != k + 1 {
            // simultaneous row/column swap flips the sign
            m.swap_rows(k + 1, p);
            m.swap_cols(k + 1, p);
            pf = -pf;
        }
        let piv = m[(k, k + 1)].clone();
        pf = pf * piv.clone();
        let pinv = piv.inv();
        for i in k + 2..n {
            let f = m[(k, i)].clone() * pinv.clone();
            if f.is_zero() {
                continue;
            }
            // column i -= f · column k+1, row i -= f · row k+1
            for r in 0..n {
                let v = m[(r, k + 1)].clone() * f.clone();
                m[(r, i)] = m[(r, i)].clone() - v;
            }
            for c in 0..n {
                let v = m[(k + 1, c)].clone() * f.clone();
                m[(i, c)] = m[(i, c)].clone() - v;
            }
        }
        k += 2;
    }
    pf
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{q, qi, Q};

    fn qm(rows: &[&[i64]]) -> Mat<Q> {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect())
    }

    #[test]
    fn det_and_inverse() {
        let a = qm(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(a.det(), qi(18));
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Mat::identity(3));
        assert!(qm(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn kernel_dimension() {
        let a = qm(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = a.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.mul_vec(v).iter().all(|x| x == &qi(0)));
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = qm(&[&[1, 1], &[1, -1]]);
        assert_eq!(a.solve(&[qi(3), qi(1)]), Some(vec![qi(2), qi(1)]));
        let b = qm(&[&[1, 1], &[2, 2]]);
        assert_eq!(b.solve(&[qi(1), qi(3)]), None);
        assert_eq!(coords_in(&[vec![qi(2), qi(0)]], &[q(1, 1), qi(0)]), Some(vec![q(1, 2)]));
    }

    #[test]
    fn pfaffian_small() {
        let a = qm(&[&[0, 2, 0, 0], &[-2, 0, 0, 0], &[0, 0, 0, 3], &[0, 0, -3, 0]]);
        assert_eq!(pfaffian(&a), qi(6));
        // a12 a34 - a13 a24 + a14 a23
        let b = qm(&[&[0, 1, 2, 3], &[-1, 0, 4, 5], &[-2, -4, 0, 6], &[-3, -5, -6, 0]]);
        assert_eq!(pfaffian(&b), qi(6 - 10 + 12));
        assert_eq!(pfaffian(&b) * pfaffian(&b), b.det());
    }

    #[test]
    fn fast_coords() {
        let basis = vec![vec![qi(1), qi(1), qi(0)], vec![qi(0), qi(1), qi(1)]];
        let c = Coords::new(basis).unwrap();
        assert_eq!(c.coords(&[qi(2), qi(5), qi(3)]), Some(vec![qi(2), qi(3)]));
        assert_eq!(c.coords(&[qi(1), qi(0), qi(0)]), None);
    }
}
