//! Real bilinear tensors on the frame, row convention:
//! entry (i, j) is tensor(e_i, e_j), and for an endomorphism row i
//! holds the components of the image of e_i.

#[derive(Debug, Clone, PartialEq)]
pub struct BilinearTensor {
    n: usize,
    entries: Vec<f64>,
}

impl BilinearTensor {
    pub fn zeros(n: usize) -> Self {
        BilinearTensor {
            n,
            entries: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut t = BilinearTensor::zeros(n);
        for i in 0..n {
            t.set(i, i, 1.0);
        }
        t
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let n = rows.len();
        let mut t = BilinearTensor::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "square tensor expected");
            for (j, &v) in row.iter().enumerate() {
                t.set(i, j, v);
            }
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.entries[i * self.n + j] = v;
    }

    pub fn sym(&self) -> BilinearTensor {
        let mut t = BilinearTensor::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(i, j, 0.5 * (self.get(i, j) + self.get(j, i)));
            }
        }
        t
    }

    pub fn skew(&self) -> BilinearTensor {
        let mut t = BilinearTensor::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(i, j, 0.5 * (self.get(i, j) - self.get(j, i)));
            }
        }
        t
    }

    /// Full Frobenius sum Σ_{ij} entries².
    pub fn frob_sq(&self) -> f64 {
        self.entries.iter().map(|v| v * v).sum()
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Frobenius pairing Σ_{ij} self_{ij}·other_{ij}.
    pub fn pairing(&self, other: &BilinearTensor) -> f64 {
        assert_eq!(self.n, other.n);
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn add(&self, other: &BilinearTensor) -> BilinearTensor {
        assert_eq!(self.n, other.n);
        BilinearTensor {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &BilinearTensor) -> BilinearTensor {
        assert_eq!(self.n, other.n);
        BilinearTensor {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: f64) -> BilinearTensor {
        BilinearTensor {
            n: self.n,
            entries: self.entries.iter().map(|a| a * s).collect(),
        }
    }

    /// Row-convention composition: (self∘other)(e_i) = other(self(e_i)).
    pub fn compose(&self, other: &BilinearTensor) -> BilinearTensor {
        assert_eq!(self.n, other.n);
        let mut t = BilinearTensor::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let mut acc = 0.0;
                for k in 0..self.n {
                    acc += self.get(i, k) * other.get(k, j);
                }
                t.set(i, j, acc);
            }
        }
        t
    }

    /// Image of a constant-coefficient vector, row convention.
    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|j| (0..self.n).map(|i| v[i] * self.get(i, j)).sum())
            .collect()
    }

    /// Row i as a vector (image of e_i for endomorphisms).
    pub fn row(&self, i: usize) -> Vec<f64> {
        (0..self.n).map(|j| self.get(i, j)).collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|v| v.abs()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &BilinearTensor) -> f64 {
        self.sub(other).max_abs()
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|i| self.row(i)).collect()
    }
}
