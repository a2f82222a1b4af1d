//! Small dense matrices of scalar fields.

use crate::field::ScalarField;

/// Row-major square matrix of scalar fields.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    n: usize,
    data: Vec<ScalarField>,
}

impl Matrix {
    pub fn zero(n: usize) -> Self {
        Matrix { n, data: vec![ScalarField::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { ScalarField::one() } else { ScalarField::zero() })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> ScalarField) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Matrix { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<ScalarField>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix { n, data: rows.into_iter().flatten().collect() }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &ScalarField {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: ScalarField) {
        self.data[i * self.n + j] = v;
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, rhs: &Matrix) -> Self {
        assert_eq!(self.n, rhs.n);
        Self::from_fn(self.n, |i, j| {
            (0..self.n)
                .filter(|&k| !self.get(i, k).is_exact_zero() && !rhs.get(k, j).is_exact_zero())
                .map(|k| self.get(i, k) * rhs.get(k, j))
                .sum()
        })
    }

    pub fn add(&self, rhs: &Matrix) -> Self {
        Self::from_fn(self.n, |i, j| self.get(i, j) + rhs.get(i, j))
    }

    pub fn sub(&self, rhs: &Matrix) -> Self {
        Self::from_fn(self.n, |i, j| self.get(i, j) - rhs.get(i, j))
    }

    pub fn scale(&self, c: &ScalarField) -> Self {
        Self::from_fn(self.n, |i, j| self.get(i, j) * c)
    }

    pub fn is_exact_zero(&self) -> bool {
        self.data.iter().all(ScalarField::is_exact_zero)
    }

    /// Determinant of the submatrix on the given rows and columns.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> ScalarField {
        assert_eq!(rows.len(), cols.len());
        match rows.len() {
            0 => ScalarField::one(),
            1 => self.get(rows[0], cols[0]).clone(),
            _ => {
                let mut acc = ScalarField::zero();
                for (k, &c) in cols.iter().enumerate() {
                    let a = self.get(rows[0], c);
                    if a.is_exact_zero() {
                        continue;
                    }
                    let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                    let term = a * &self.minor(&rows[1..], &rest);
                    acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
                }
                acc
            }
        }
    }

    pub fn det(&self) -> ScalarField {
        let all: Vec<usize> = (0..self.n).collect();
        self.minor(&all, &all)
    }

    /// Exact inverse by the adjugate; `None` when the determinant is identically zero.
    pub fn inverse(&self) -> Option<Matrix> {
        let det = self.det();
        if det.is_exact_zero() {
            return None;
        }
        let n = self.n;
        let all: Vec<usize> = (0..n).collect();
        Some(Self::from_fn(n, |i, j| {
            let rows: Vec<usize> = all.iter().copied().filter(|&r| r != j).collect();
            let cols: Vec<usize> = all.iter().copied().filter(|&c| c != i).collect();
            let cof = self.minor(&rows, &cols);
            let cof = if (i + j) % 2 == 0 { cof } else { -cof };
            &cof / &det
        }))
    }
}
