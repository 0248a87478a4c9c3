//! Dense complex linear algebra for small spinor-space matrices.
//!
//! Everything in this crate operates on matrices of size at most
//! 2^5 = 32, so a flat row-major layout and O(n^3) algorithms are
//! entirely adequate. The eigensolver is a cyclic Jacobi iteration
//! adapted to complex Hermitian matrices.

use num_complex::Complex64;

pub type C64 = Complex64;

pub const fn c(re: f64, im: f64) -> C64 {
    Complex64::new(re, im)
}

pub const C_ZERO: C64 = c(0.0, 0.0);
pub const C_ONE: C64 = c(1.0, 0.0);
pub const C_I: C64 = c(0.0, 1.0);

/// Square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMat {
    n: usize,
    data: Vec<C64>,
}

impl CMat {
    pub fn zeros(n: usize) -> Self {
        CMat {
            n,
            data: vec![C_ZERO; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMat::zeros(n);
        for i in 0..n {
            m.set(i, i, C_ONE);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<C64>]) -> Self {
        let n = rows.len();
        let mut m = CMat::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "square matrix expected");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: C64) {
        self.data[i * self.n + j] = v;
    }

    #[inline]
    pub fn add_assign_at(&mut self, i: usize, j: usize, v: C64) {
        self.data[i * self.n + j] += v;
    }

    pub fn add(&self, other: &CMat) -> CMat {
        assert_eq!(self.n, other.n);
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        CMat { n: self.n, data }
    }

    pub fn sub(&self, other: &CMat) -> CMat {
        assert_eq!(self.n, other.n);
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        CMat { n: self.n, data }
    }

    pub fn scale(&self, s: C64) -> CMat {
        CMat {
            n: self.n,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn mul(&self, other: &CMat) -> CMat {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = CMat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == C_ZERO {
                    continue;
                }
                for j in 0..n {
                    out.add_assign_at(i, j, a * other.get(k, j));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(self.n, v.len());
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> CMat {
        let n = self.n;
        let mut out = CMat::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn trace(&self) -> C64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn frob_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Kronecker product, used to build Clifford generators.
    pub fn kron(&self, other: &CMat) -> CMat {
        let n = self.n * other.n;
        let mut out = CMat::zeros(n);
        for i in 0..self.n {
            for j in 0..self.n {
                let a = self.get(i, j);
                if a == C_ZERO {
                    continue;
                }
                for k in 0..other.n {
                    for l in 0..other.n {
                        out.set(i * other.n + k, j * other.n + l, a * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    /// ‖A − A†‖_max, zero for Hermitian matrices.
    pub fn hermiticity_defect(&self) -> f64 {
        self.sub(&self.adjoint()).max_abs()
    }

    /// ‖A + A†‖_max, zero for skew-Hermitian matrices.
    pub fn skew_hermiticity_defect(&self) -> f64 {
        self.add(&self.adjoint()).max_abs()
    }
}

pub fn vec_add(a: &[C64], b: &[C64]) -> Vec<C64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[C64], b: &[C64]) -> Vec<C64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[C64], s: C64) -> Vec<C64> {
    a.iter().map(|x| x * s).collect()
}

/// Hermitian inner product, conjugate-linear in the second slot.
pub fn vec_inner(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b).map(|(x, y)| x * y.conj()).sum()
}

pub fn vec_norm(a: &[C64]) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

/// Eigendecomposition of a complex Hermitian matrix by cyclic Jacobi
/// rotations. Returns eigenvalues in ascending order together with the
/// matrix whose columns are the corresponding orthonormal eigenvectors.
pub fn hermitian_eigen(mat: &CMat) -> (Vec<f64>, CMat) {
    let n = mat.dim();
    debug_assert!(
        mat.hermiticity_defect() <= 1e-10 * (1.0 + mat.max_abs()),
        "hermitian_eigen expects a Hermitian matrix"
    );
    let mut a = mat.clone();
    // Symmetrize to wash out representation round-off.
    a = a.add(&a.adjoint()).scale(c(0.5, 0.0));
    let mut v = CMat::identity(n);

    let max_sweeps = 60;
    for _ in 0..max_sweeps {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off = off.max(a.get(p, q).norm());
            }
        }
        if off <= 1e-15 * (1.0 + a.max_abs()) {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a.get(p, q);
                if apq.norm() <= 1e-300 {
                    continue;
                }
                let app = a.get(p, p).re;
                let aqq = a.get(q, q).re;
                // Phase that makes the off-diagonal entry real, then a
                // classical Jacobi rotation on the 2x2 block.
                let phase = apq / apq.norm();
                let g = apq.norm();
                let tau = (aqq - app) / (2.0 * g);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let cs = 1.0 / (1.0 + t * t).sqrt();
                let sn = t * cs;
                // Column rotation: [p q] <- [p q] * [[c, s*phase], [-s*conj(phase), c]]
                // (unitary U with U† A U zeroing the (p,q) entry).
                let u_pp = c(cs, 0.0);
                let u_pq = phase * sn;
                let u_qp = -phase.conj() * sn;
                let u_qq = c(cs, 0.0);
                // A <- U† A U
                for k in 0..n {
                    let akp = a.get(k, p);
                    let akq = a.get(k, q);
                    a.set(k, p, akp * u_pp + akq * u_qp);
                    a.set(k, q, akp * u_pq + akq * u_qq);
                }
                for k in 0..n {
                    let apk = a.get(p, k);
                    let aqk = a.get(q, k);
                    a.set(p, k, u_pp.conj() * apk + u_qp.conj() * aqk);
                    a.set(q, k, u_pq.conj() * apk + u_qq.conj() * aqk);
                }
                for k in 0..n {
                    let vkp = v.get(k, p);
                    let vkq = v.get(k, q);
                    v.set(k, p, vkp * u_pp + vkq * u_qp);
                    v.set(k, q, vkp * u_pq + vkq * u_qq);
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let evals: Vec<f64> = (0..n).map(|i| a.get(i, i).re).collect();
    order.sort_by(|&i, &j| evals[i].partial_cmp(&evals[j]).unwrap());
    let sorted_vals: Vec<f64> = order.iter().map(|&i| evals[i]).collect();
    let mut sorted_vecs = CMat::zeros(n);
    for (new_col, &old_col) in order.iter().enumerate() {
        for k in 0..n {
            sorted_vecs.set(k, new_col, v.get(k, old_col));
        }
    }
    (sorted_vals, sorted_vecs)
}

/// Orthonormal basis of the common nullspace of a family of matrices,
/// obtained from the small eigenvalues of Σ Mᵀ̄M.
pub fn common_kernel(mats: &[CMat], tol: f64) -> Vec<Vec<C64>> {
    assert!(!mats.is_empty());
    let n = mats[0].dim();
    let mut gram = CMat::zeros(n);
    for m in mats {
        gram = gram.add(&m.adjoint().mul(m));
    }
    let scale = 1.0f64.max(gram.max_abs());
    let (vals, vecs) = hermitian_eigen(&gram);
    let mut basis = Vec::new();
    for (idx, &lambda) in vals.iter().enumerate() {
        if lambda.abs() <= tol * scale {
            basis.push((0..n).map(|k| vecs.get(k, idx)).collect());
        }
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pauli3() -> CMat {
        CMat::from_rows(&[vec![C_ONE, C_ZERO], vec![C_ZERO, -C_ONE]])
    }

    #[test]
    fn eigen_of_sigma3() {
        let (vals, vecs) = hermitian_eigen(&pauli3());
        assert!((vals[0] + 1.0).abs() < 1e-14);
        assert!((vals[1] - 1.0).abs() < 1e-14);
        // residual ‖Hv − λv‖
        let h = pauli3();
        for k in 0..2 {
            let v: Vec<C64> = (0..2).map(|i| vecs.get(i, k)).collect();
            let hv = h.mul_vec(&v);
            let lv = vec_scale(&v, c(vals[k], 0.0));
            assert!(vec_norm(&vec_sub(&hv, &lv)) < 1e-12);
        }
    }

    #[test]
    fn eigen_of_random_hermitian() {
        // Deterministic pseudo-random Hermitian matrix.
        let n = 7;
        let mut h = CMat::zeros(n);
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 11) as f64) / ((1u64 << 53) as f64) - 0.5
        };
        for i in 0..n {
            for j in i..n {
                if i == j {
                    h.set(i, i, c(next(), 0.0));
                } else {
                    let z = c(next(), next());
                    h.set(i, j, z);
                    h.set(j, i, z.conj());
                }
            }
        }
        let (vals, vecs) = hermitian_eigen(&h);
        for k in 0..n {
            let v: Vec<C64> = (0..n).map(|i| vecs.get(i, k)).collect();
            let hv = h.mul_vec(&v);
            let lv = vec_scale(&v, c(vals[k], 0.0));
            assert!(vec_norm(&vec_sub(&hv, &lv)) < 1e-11);
            assert!((vec_norm(&v) - 1.0).abs() < 1e-12);
        }
        // trace preserved
        let tr: f64 = vals.iter().sum();
        assert!((tr - h.trace().re).abs() < 1e-10);
    }

    #[test]
    fn kernel_of_singular_family() {
        // sigma3 - id has kernel spanned by e1.
        let m = pauli3().sub(&CMat::identity(2));
        let basis = common_kernel(std::slice::from_ref(&m), 1e-12);
        assert_eq!(basis.len(), 1);
        let v = &basis[0];
        assert!(vec_norm(&m.mul_vec(v)) < 1e-12);
        // joint kernel of sigma3 - id and sigma3 + id is trivial
        let m2 = pauli3().add(&CMat::identity(2));
        assert_eq!(common_kernel(&[m, m2], 1e-12).len(), 0);
    }

    #[test]
    fn kron_dimensions() {
        let a = pauli3();
        let b = CMat::identity(2);
        let k = a.kron(&b);
        assert_eq!(k.dim(), 4);
        assert_eq!(k.get(0, 0), C_ONE);
        assert_eq!(k.get(3, 3), -C_ONE);
    }
}
