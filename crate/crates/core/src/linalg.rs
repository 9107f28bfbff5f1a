//! Small dense complex matrices and Hermitian eigenvalue routines.
//!
//! Everything here targets the tiny dimensions this crate works at (a few
//! dozen at most), so the emphasis is on determinism and genericity over
//! the scalar type rather than on asymptotic speed.

use num_complex::Complex;

use crate::scalar::Scalar;

/// Dense square complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix<T> {
    n: usize,
    data: Vec<Complex<T>>,
}

impl<T: Scalar> CMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Complex::new(T::zero(), T::zero()); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, Complex::new(T::one(), T::zero()));
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    /// Projector |v><v| onto a (not necessarily normalized) vector.
    pub fn outer(v: &[Complex<T>]) -> Self {
        Self::from_fn(v.len(), |i, j| v[i] * v[j].conj())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex<T> {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: Complex<T>) {
        self.data[i * self.n + j] = value;
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).conj())
    }

    pub fn hermitize(&self) -> Self {
        let half = T::from(0.5).unwrap();
        Self::from_fn(self.n, |i, j| {
            (self.get(i, j) + self.get(j, i).conj()).scale(half)
        })
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "matrix dimensions differ");
        Self::from_fn(self.n, |i, j| self.get(i, j) + rhs.get(i, j))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "matrix dimensions differ");
        Self::from_fn(self.n, |i, j| self.get(i, j) - rhs.get(i, j))
    }

    pub fn scale(&self, factor: Complex<T>) -> Self {
        Self::from_fn(self.n, |i, j| self.get(i, j) * factor)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "matrix dimensions differ");
        let zero = Complex::new(T::zero(), T::zero());
        Self::from_fn(self.n, |i, j| {
            (0..self.n).fold(zero, |acc, k| acc + self.get(i, k) * rhs.get(k, j))
        })
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn trace(&self) -> Complex<T> {
        let zero = Complex::new(T::zero(), T::zero());
        (0..self.n).fold(zero, |acc, i| acc + self.get(i, i))
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> T {
        self.data
            .iter()
            .fold(T::zero(), |acc, z| acc.max(z.norm()))
    }

    /// Max-entry distance from the adjoint; zero for a Hermitian matrix.
    pub fn hermiticity_deviation(&self) -> T {
        let mut max = T::zero();
        for i in 0..self.n {
            for j in 0..self.n {
                max = max.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        max
    }

    pub fn matvec(&self, v: &[Complex<T>]) -> Vec<Complex<T>> {
        assert_eq!(self.n, v.len(), "vector length differs from dimension");
        let zero = Complex::new(T::zero(), T::zero());
        (0..self.n)
            .map(|i| (0..self.n).fold(zero, |acc, j| acc + self.get(i, j) * v[j]))
            .collect()
    }

    pub fn is_finite(&self) -> bool {
        self.data
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

/// Eigenvalues of a Hermitian matrix, ascending.
///
/// Works on the real symmetric embedding [[Re, -Im], [Im, Re]], whose
/// spectrum is that of the input doubled; the input is hermitized first so
/// tiny construction asymmetry cannot break the embedding.
pub fn hermitian_eigenvalues<T: Scalar>(m: &CMatrix<T>) -> Vec<T> {
    let n = m.dim();
    if n == 0 {
        return Vec::new();
    }
    let h = m.hermitize();
    let mut big = vec![vec![T::zero(); 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            let z = h.get(i, j);
            big[i][j] = z.re;
            big[i][j + n] = -z.im;
            big[i + n][j] = z.im;
            big[i + n][j + n] = z.re;
        }
    }
    let doubled = jacobi_symmetric_eigenvalues(big);
    doubled.into_iter().step_by(2).collect()
}

/// Cyclic Jacobi sweeps; returns the eigenvalues of a real symmetric
/// matrix in ascending order.
pub(crate) fn jacobi_symmetric_eigenvalues<T: Scalar>(mut a: Vec<Vec<T>>) -> Vec<T> {
    let n = a.len();
    if n <= 1 {
        return a.into_iter().map(|row| row[0]).collect();
    }
    let one = T::one();
    let two = T::from(2.0).unwrap();
    let eps = T::epsilon();

    for _sweep in 0..100 {
        let mut off = T::zero();
        let mut scale = T::zero();
        for i in 0..n {
            scale = scale.max(a[i][i].abs());
            for j in (i + 1)..n {
                off = off.max(a[i][j].abs());
                scale = scale.max(a[i][j].abs());
            }
        }
        if off <= eps * scale || scale == T::zero() {
            break;
        }
        let skip = eps * scale;
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = a[p][q];
                if apq.abs() <= skip {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (two * apq);
                let t = {
                    let magnitude = one / (theta.abs() + (theta * theta + one).sqrt());
                    if theta >= T::zero() {
                        magnitude
                    } else {
                        -magnitude
                    }
                };
                let c = one / (t * t + one).sqrt();
                let s = t * c;
                let tau = s / (one + c);

                let app = a[p][p];
                let aqq = a[q][q];
                a[p][p] = app - t * apq;
                a[q][q] = aqq + t * apq;
                a[p][q] = T::zero();
                a[q][p] = T::zero();
                for i in 0..n {
                    if i == p || i == q {
                        continue;
                    }
                    let aip = a[i][p];
                    let aiq = a[i][q];
                    let new_ip = aip - s * (aiq + tau * aip);
                    let new_iq = aiq + s * (aip - tau * aiq);
                    a[i][p] = new_ip;
                    a[p][i] = new_ip;
                    a[i][q] = new_iq;
                    a[q][i] = new_iq;
                }
            }
        }
    }

    let mut eigenvalues: Vec<T> = (0..n).map(|i| a[i][i]).collect();
    eigenvalues.sort_by(|x, y| x.partial_cmp(y).expect("NaN eigenvalue"));
    eigenvalues
}

/// Eigenvalues of a symmetric tridiagonal matrix by Sturm-sequence
/// bisection, ascending. `offdiag.len()` must be `diag.len() - 1`.
pub fn symmetric_tridiagonal_eigenvalues<T: Scalar>(diag: &[T], offdiag: &[T]) -> Vec<T> {
    let n = diag.len();
    assert!(n >= 1);
    assert_eq!(offdiag.len(), n - 1);

    let two = T::from(2.0).unwrap();
    let mut lo = T::infinity();
    let mut hi = T::neg_infinity();
    for i in 0..n {
        let left = if i > 0 { offdiag[i - 1].abs() } else { T::zero() };
        let right = if i + 1 < n { offdiag[i].abs() } else { T::zero() };
        lo = lo.min(diag[i] - left - right);
        hi = hi.max(diag[i] + left + right);
    }

    // Pivot floor follows the usual bisection safeguard.
    let max_off2 = offdiag
        .iter()
        .fold(T::zero(), |acc, e| acc.max(*e * *e));
    let pivmin = (T::min_positive_value() * max_off2).max(T::min_positive_value());

    // Zero pivots are clamped to -pivmin before counting, so a pivot that
    // lands exactly on zero is treated as negative.
    let count_below = |x: T| -> usize {
        let mut count = 0;
        let mut d = diag[0] - x;
        if d.abs() < pivmin {
            d = -pivmin;
        }
        if d < T::zero() {
            count += 1;
        }
        for i in 1..n {
            d = diag[i] - x - offdiag[i - 1] * offdiag[i - 1] / d;
            if d.abs() < pivmin {
                d = -pivmin;
            }
            if d < T::zero() {
                count += 1;
            }
        }
        count
    };

    (0..n)
        .map(|j| {
            let mut a = lo;
            let mut b = hi;
            for _ in 0..200 {
                let mid = (a + b) / two;
                if mid <= a || mid >= b {
                    break;
                }
                if count_below(mid) > j {
                    b = mid;
                } else {
                    a = mid;
                }
            }
            (a + b) / two
        })
        .collect()
}
