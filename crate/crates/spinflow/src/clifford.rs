//! Clifford algebra representations on complex spinor spaces.
//!
//! Vectors act skew-adjointly: the generators satisfy
//! γ_iγ_j + γ_jγ_i = −2δ_ij and γ_i† = −γ_i, so Clifford
//! multiplication by a unit vector is unitary. For odd n the
//! complex volume element i^⌊(n+1)/2⌋ γ_1⋯γ_n acts as +Id.

use crate::error::{Result, SpinError};
use crate::linalg::{c, vec_inner, vec_norm, CMat, C64, C_ONE, C_ZERO};

/// A complex spinor, i.e. a vector in C^N with N = 2^⌊n/2⌋.
#[derive(Debug, Clone, PartialEq)]
pub struct Spinor {
    pub components: Vec<C64>,
}

impl Spinor {
    pub fn new(components: Vec<C64>) -> Self {
        Spinor { components }
    }

    pub fn basis(n_spin: usize, k: usize) -> Self {
        let mut v = vec![C_ZERO; n_spin];
        v[k] = C_ONE;
        Spinor::new(v)
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn norm(&self) -> f64 {
        vec_norm(&self.components)
    }

    pub fn norm_sq(&self) -> f64 {
        self.components.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn normalized(&self) -> Spinor {
        let n = self.norm();
        Spinor::new(self.components.iter().map(|z| z / n).collect())
    }
}

/// Hermitian spinor product (Φ,Ψ), conjugate-linear in the second slot.
pub fn spinor_inner(phi: &Spinor, psi: &Spinor) -> Result<C64> {
    if phi.dim() != psi.dim() {
        return Err(SpinError::DimensionMismatch {
            expected: phi.dim(),
            got: psi.dim(),
        });
    }
    Ok(vec_inner(&phi.components, &psi.components))
}

/// Gamma matrices realizing Cl(n) on C^{2^⌊n/2⌋}.
#[derive(Debug, Clone)]
pub struct CliffordAlgebraRep {
    pub n: usize,
    pub n_spin: usize,
    pub gamma: Vec<CMat>,
}

fn sigma1() -> CMat {
    CMat::from_rows(&[vec![C_ZERO, C_ONE], vec![C_ONE, C_ZERO]])
}

fn sigma2() -> CMat {
    CMat::from_rows(&[vec![C_ZERO, c(0.0, -1.0)], vec![c(0.0, 1.0), C_ZERO]])
}

fn sigma3() -> CMat {
    CMat::from_rows(&[vec![C_ONE, C_ZERO], vec![C_ZERO, -C_ONE]])
}

/// Builds the standard representation: γ_j = −i E_j with E_j the
/// Jordan–Wigner chain of Pauli matrices. For odd n the sign of γ_n is
/// normalized so the complex volume element is +Id; for n = 3 this
/// reproduces γ_j = −i σ_j exactly.
pub fn build_rep(n: usize) -> Result<CliffordAlgebraRep> {
    if !(1..=10).contains(&n) {
        return Err(SpinError::UnsupportedDimension(n));
    }
    let m = n / 2;
    let n_spin = 1usize << m;

    // Hermitian generators E_1..E_n on C^{2^m}.
    let mut herm: Vec<CMat> = Vec::with_capacity(n);
    for k in 0..m {
        for s in [sigma1(), sigma2()] {
            let mut acc = CMat::identity(1);
            for slot in 0..m {
                let factor = if slot < k {
                    sigma3()
                } else if slot == k {
                    s.clone()
                } else {
                    CMat::identity(2)
                };
                acc = acc.kron(&factor);
            }
            herm.push(acc);
        }
    }
    if n % 2 == 1 {
        let mut acc = CMat::identity(1);
        for _ in 0..m {
            acc = acc.kron(&sigma3());
        }
        herm.push(acc);
    }

    let mut gamma: Vec<CMat> = herm.iter().map(|e| e.scale(c(0.0, -1.0))).collect();

    if n % 2 == 1 {
        // Normalize so the complex volume acts as +Id.
        let vol = complex_volume(n, &gamma);
        let lead = vol.get(0, 0);
        if (lead - C_ONE).norm() > 0.5 {
            let last = gamma.pop().unwrap();
            gamma.push(last.scale(c(-1.0, 0.0)));
        }
    }

    Ok(CliffordAlgebraRep { n, n_spin, gamma })
}

/// i^⌊(n+1)/2⌋ γ_1⋯γ_n.
pub fn complex_volume(n: usize, gamma: &[CMat]) -> CMat {
    let dim = gamma[0].dim();
    let mut prod = CMat::identity(dim);
    for g in gamma.iter() {
        prod = prod.mul(g);
    }
    let power = n.div_ceil(2);
    let phase = c(0.0, 1.0).powu(power as u32);
    prod.scale(phase)
}

impl CliffordAlgebraRep {
    /// Matrix of Clifford multiplication by the real vector v = Σ v_i e_i.
    pub fn vector_action(&self, v: &[f64]) -> Result<CMat> {
        if v.len() != self.n {
            return Err(SpinError::DimensionMismatch {
                expected: self.n,
                got: v.len(),
            });
        }
        let mut m = CMat::zeros(self.n_spin);
        for (i, &vi) in v.iter().enumerate() {
            if vi != 0.0 {
                m = m.add(&self.gamma[i].scale(c(vi, 0.0)));
            }
        }
        Ok(m)
    }

    /// Matrix of the frame volume ω_n^C.
    pub fn volume(&self) -> CMat {
        complex_volume(self.n, &self.gamma)
    }

    /// Worst anticommutator defect max ‖γ_iγ_j + γ_jγ_i + 2δ_ij‖.
    pub fn anticommutation_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        let id2 = CMat::identity(self.n_spin).scale(c(2.0, 0.0));
        for i in 0..self.n {
            for j in 0..self.n {
                let mut anti = self.gamma[i]
                    .mul(&self.gamma[j])
                    .add(&self.gamma[j].mul(&self.gamma[i]));
                if i == j {
                    anti = anti.add(&id2);
                }
                worst = worst.max(anti.max_abs());
            }
        }
        worst
    }

    pub fn skew_defect(&self) -> f64 {
        self.gamma
            .iter()
            .map(|g| g.skew_hermiticity_defect())
            .fold(0.0, f64::max)
    }
}

/// Element of the Clifford algebra restricted to the grades the
/// estimates use: scalar + vector + bivector.
#[derive(Debug, Clone, Default)]
pub struct CliffordElement {
    pub scalar: f64,
    pub vector: Vec<f64>,
    /// (j, k, a) terms a·γ_jγ_k with 0-based j < k.
    pub bivector: Vec<(usize, usize, f64)>,
}

impl CliffordElement {
    pub fn vector(v: Vec<f64>) -> Self {
        CliffordElement {
            scalar: 0.0,
            vector: v,
            bivector: Vec::new(),
        }
    }

    pub fn zero(n: usize) -> Self {
        CliffordElement {
            scalar: 0.0,
            vector: vec![0.0; n],
            bivector: Vec::new(),
        }
    }

    pub fn to_matrix(&self, rep: &CliffordAlgebraRep) -> Result<CMat> {
        if !self.vector.is_empty() && self.vector.len() != rep.n {
            return Err(SpinError::DimensionMismatch {
                expected: rep.n,
                got: self.vector.len(),
            });
        }
        let mut m = CMat::identity(rep.n_spin).scale(c(self.scalar, 0.0));
        for (i, &vi) in self.vector.iter().enumerate() {
            if vi != 0.0 {
                m = m.add(&rep.gamma[i].scale(c(vi, 0.0)));
            }
        }
        for &(j, k, a) in &self.bivector {
            if j >= rep.n || k >= rep.n {
                return Err(SpinError::IndexOutOfRange {
                    index: j.max(k) + 1,
                    n: rep.n,
                });
            }
            m = m.add(&rep.gamma[j].mul(&rep.gamma[k]).scale(c(a, 0.0)));
        }
        Ok(m)
    }
}

/// Applies a Clifford element to a spinor.
pub fn clifford_mul(
    rep: &CliffordAlgebraRep,
    element: &CliffordElement,
    psi: &Spinor,
) -> Result<Spinor> {
    if psi.dim() != rep.n_spin {
        return Err(SpinError::DimensionMismatch {
            expected: rep.n_spin,
            got: psi.dim(),
        });
    }
    let m = element.to_matrix(rep)?;
    Ok(Spinor::new(m.mul_vec(&psi.components)))
}

/// Codimension-one restriction: γ^Q_j = γ_ν γ_j for j ≠ ν, acting on
/// the same spinor space. The spinor identification Ψ ↦ Ψ* is the
/// identity on components; `normal_index` is 1-based.
pub fn restrict_rep(rep: &CliffordAlgebraRep, normal_index: usize) -> Result<CliffordAlgebraRep> {
    if rep.n.is_multiple_of(2) {
        return Err(SpinError::EvenDimension(rep.n));
    }
    if normal_index < 1 || normal_index > rep.n {
        return Err(SpinError::IndexOutOfRange {
            index: normal_index,
            n: rep.n,
        });
    }
    let nu = normal_index - 1;
    let gnu = &rep.gamma[nu];
    let gamma = (0..rep.n)
        .filter(|&j| j != nu)
        .map(|j| gnu.mul(&rep.gamma[j]))
        .collect();
    Ok(CliffordAlgebraRep {
        n: rep.n - 1,
        n_spin: rep.n_spin,
        gamma,
    })
}
