//! Frame-presented homogeneous geometry: constant structure constants
//! of an orthonormal frame, the Levi-Civita connection in closed form,
//! and the associated curvature data.

use crate::error::{Result, SpinError};
use crate::tensor::BilinearTensor;

/// Orthonormal frame with constant structure constants,
/// [e_i, e_j] = Σ_k c_{ij}^k e_k and metric δ_ij.
#[derive(Debug, Clone)]
pub struct FrameManifold {
    pub n: usize,
    c: Vec<f64>, // c[i][j][k] flattened
}

/// 1-based structure-constant entry as it appears in input files.
#[derive(Debug, Clone, Copy)]
pub struct StructureEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: f64,
}

pub const JACOBI_TOL: f64 = 1e-10;

impl FrameManifold {
    #[inline]
    pub fn c(&self, i: usize, j: usize, k: usize) -> f64 {
        self.c[(i * self.n + j) * self.n + k]
    }

    fn set_c(&mut self, i: usize, j: usize, k: usize, v: f64) {
        self.c[(i * self.n + j) * self.n + k] = v;
    }

    /// Jacobi sum Σ_cyc \[\[e_i,e_j\],e_k\] for a triple, by components.
    pub fn jacobi_sum(&self, i: usize, j: usize, k: usize) -> Vec<f64> {
        let n = self.n;
        (0..n)
            .map(|m| {
                (0..n)
                    .map(|l| {
                        self.c(i, j, l) * self.c(l, k, m)
                            + self.c(j, k, l) * self.c(l, i, m)
                            + self.c(k, i, l) * self.c(l, j, m)
                    })
                    .sum()
            })
            .collect()
    }
}

/// Validates 1-based structure-constant entries: applies the
/// antisymmetric completion and verifies the Jacobi identity.
pub fn validate_frame(n: usize, entries: &[StructureEntry]) -> Result<FrameManifold> {
    if !(1..=10).contains(&n) {
        return Err(SpinError::UnsupportedDimension(n));
    }
    let mut m = FrameManifold {
        n,
        c: vec![0.0; n * n * n],
    };
    for e in entries {
        for idx in [e.i, e.j, e.k] {
            if idx < 1 || idx > n {
                return Err(SpinError::IndexOutOfRange { index: idx, n });
            }
        }
        let (i, j, k) = (e.i - 1, e.j - 1, e.k - 1);
        m.set_c(i, j, k, m.c(i, j, k) + e.value);
        m.set_c(j, i, k, m.c(j, i, k) - e.value);
    }
    let mut worst = (0usize, 0usize, 0usize, 0.0f64);
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let res = m
                    .jacobi_sum(i, j, k)
                    .iter()
                    .map(|v| v.abs())
                    .fold(0.0, f64::max);
                if res > worst.3 {
                    worst = (i, j, k, res);
                }
            }
        }
    }
    if worst.3 > JACOBI_TOL {
        return Err(SpinError::JacobiViolation {
            i: worst.0 + 1,
            j: worst.1 + 1,
            k: worst.2 + 1,
            residual: worst.3,
        });
    }
    Ok(m)
}

/// Christoffel symbols Γ_{ij}^k = g(∇_{e_i}e_j, e_k).
#[derive(Debug, Clone)]
pub struct LeviCivitaConnection {
    pub n: usize,
    gamma: Vec<f64>,
}

impl LeviCivitaConnection {
    #[inline]
    pub fn gamma(&self, i: usize, j: usize, k: usize) -> f64 {
        self.gamma[(i * self.n + j) * self.n + k]
    }

    /// ∇_{e_i} of a constant-coefficient vector.
    pub fn derive(&self, i: usize, v: &[f64]) -> Vec<f64> {
        let n = self.n;
        (0..n)
            .map(|k| (0..n).map(|j| v[j] * self.gamma(i, j, k)).sum())
            .collect()
    }

    pub fn metric_compat_defect(&self) -> f64 {
        let n = self.n;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    worst = worst.max((self.gamma(i, j, k) + self.gamma(i, k, j)).abs());
                }
            }
        }
        worst
    }

    pub fn torsion_defect(&self, m: &FrameManifold) -> f64 {
        let n = self.n;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    worst =
                        worst.max((self.gamma(i, j, k) - self.gamma(j, i, k) - m.c(i, j, k)).abs());
                }
            }
        }
        worst
    }
}

/// Koszul closed form for orthonormal frames:
/// Γ_{ij}^k = ½(c_{ij}^k − c_{jk}^i + c_{ki}^j).
pub fn levi_civita(m: &FrameManifold) -> LeviCivitaConnection {
    let n = m.n;
    let mut gamma = vec![0.0; n * n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                gamma[(i * n + j) * n + k] = 0.5 * (m.c(i, j, k) - m.c(j, k, i) + m.c(k, i, j));
            }
        }
    }
    LeviCivitaConnection { n, gamma }
}

/// Curvature of the frame manifold with the convention
/// Ric(Y) = Σ_i R(Y, e_i)e_i.
#[derive(Debug, Clone)]
pub struct CurvatureData {
    pub n: usize,
    riemann: Vec<f64>, // R_{ijkl} = g(R(e_i,e_j)e_k, e_l)
    pub ricci: BilinearTensor,
    pub scal: f64,
}

impl CurvatureData {
    #[inline]
    pub fn riemann(&self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        self.riemann[((i * self.n + j) * self.n + k) * self.n + l]
    }

    pub fn symmetry_defect(&self) -> f64 {
        let n = self.n;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        worst =
                            worst.max((self.riemann(i, j, k, l) + self.riemann(j, i, k, l)).abs());
                        worst =
                            worst.max((self.riemann(i, j, k, l) + self.riemann(i, j, l, k)).abs());
                    }
                }
            }
        }
        worst
    }

    pub fn first_bianchi_defect(&self) -> f64 {
        let n = self.n;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let s = self.riemann(i, j, k, l)
                            + self.riemann(j, k, i, l)
                            + self.riemann(k, i, j, l);
                        worst = worst.max(s.abs());
                    }
                }
            }
        }
        worst
    }
}

/// R(e_i,e_j)e_k = ∇_i∇_j e_k − ∇_j∇_i e_k − ∇_{\[e_i,e_j\]}e_k,
/// evaluated on constant coefficients.
pub fn riemann_curvature(m: &FrameManifold, conn: &LeviCivitaConnection) -> CurvatureData {
    let n = m.n;
    let mut riemann = vec![0.0; n * n * n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let mut val = 0.0;
                    for p in 0..n {
                        val += conn.gamma(j, k, p) * conn.gamma(i, p, l)
                            - conn.gamma(i, k, p) * conn.gamma(j, p, l)
                            - m.c(i, j, p) * conn.gamma(p, k, l);
                    }
                    riemann[((i * n + j) * n + k) * n + l] = val;
                }
            }
        }
    }
    let mut ricci = BilinearTensor::zeros(n);
    for i in 0..n {
        for l in 0..n {
            let mut val = 0.0;
            for j in 0..n {
                val += riemann[((i * n + j) * n + j) * n + l];
            }
            ricci.set(i, l, val);
        }
    }
    let scal = ricci.trace();
    CurvatureData {
        n,
        riemann,
        ricci,
        scal,
    }
}

/// Lie derivative of the metric along a constant-coefficient field x:
/// (L_x g)(e_i, e_j) = g(∇_{e_i}x, e_j) + g(∇_{e_j}x, e_i).
pub fn lie_derivative_metric(conn: &LeviCivitaConnection, x: &[f64]) -> BilinearTensor {
    let n = conn.n;
    assert_eq!(x.len(), n);
    let mut t = BilinearTensor::zeros(n);
    for i in 0..n {
        let di = conn.derive(i, x);
        for j in 0..n {
            let dj = conn.derive(j, x);
            t.set(i, j, di[j] + dj[i]);
        }
    }
    t
}

/// Built-in structure-constant sets used by tests and the catalog.
pub fn nil3_entries(tau: f64) -> Vec<StructureEntry> {
    vec![StructureEntry {
        i: 1,
        j: 2,
        k: 3,
        value: 2.0 * tau,
    }]
}

pub fn sol3_entries() -> Vec<StructureEntry> {
    vec![
        StructureEntry {
            i: 1,
            j: 3,
            k: 1,
            value: 1.0,
        },
        StructureEntry {
            i: 2,
            j: 3,
            k: 2,
            value: -1.0,
        },
    ]
}

pub fn su2_entries(lambda: f64) -> Vec<StructureEntry> {
    vec![
        StructureEntry {
            i: 1,
            j: 2,
            k: 3,
            value: 2.0 * lambda,
        },
        StructureEntry {
            i: 2,
            j: 3,
            k: 1,
            value: 2.0 * lambda,
        },
        StructureEntry {
            i: 3,
            j: 1,
            k: 2,
            value: 2.0 * lambda,
        },
    ]
}
