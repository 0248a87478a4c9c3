//! Frame-constant spinor fields: the spin connection on invariant
//! spinors, derivative-prescribed fields, the Dirac operator and the
//! twisted operator as matrices, and Rayleigh eigenvalue extraction.

use crate::clifford::{CliffordAlgebraRep, CliffordElement, Spinor};
use crate::error::{Result, SpinError};
use crate::frame::LeviCivitaConnection;
use crate::linalg::{c, vec_inner, vec_norm, vec_scale, vec_sub, CMat};
use crate::tensor::BilinearTensor;

pub const DEFAULT_TOL: f64 = 1e-9;

/// How the per-direction derivative matrices were produced. Connection
/// sourced fields form a module over constant matrices, prescribed
/// fields do not, which changes how the Dirac operator composes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivSource {
    SpinConnection,
    Prescribed,
}

/// A spinor field determined by a base value and derivative
/// prescriptions ∇_{e_i}Ψ = M_iΨ.
#[derive(Debug, Clone)]
pub struct SpinorField {
    pub rep: CliffordAlgebraRep,
    pub psi0: Spinor,
    pub deriv: Vec<CMat>,
    pub source: DerivSource,
    /// Whether ℜ(M_iΨ, Ψ) = 0 for every direction, which makes |Ψ|
    /// constant along the flow of each frame field.
    pub constant_norm: bool,
}

/// Spin connection on frame-constant spinors:
/// ω_i = ½ Σ_{j<k} Γ_{ij}^k γ_jγ_k.
pub fn spin_connection(conn: &LeviCivitaConnection, rep: &CliffordAlgebraRep) -> Result<Vec<CMat>> {
    if conn.n != rep.n {
        return Err(SpinError::DimensionMismatch {
            expected: rep.n,
            got: conn.n,
        });
    }
    let n = rep.n;
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut w = CMat::zeros(rep.n_spin);
        for j in 0..n {
            for k in (j + 1)..n {
                let g = conn.gamma(i, j, k);
                if g != 0.0 {
                    w = w.add(&rep.gamma[j].mul(&rep.gamma[k]).scale(c(0.5 * g, 0.0)));
                }
            }
        }
        out.push(w);
    }
    Ok(out)
}

/// Derivative prescription accepted by `make_field`.
pub enum DerivSpec<'a> {
    /// Spin connection of a Levi-Civita connection.
    SpinConnection(&'a LeviCivitaConnection),
    /// Explicit Clifford elements A_i with M_i the action of A_i.
    Elements(&'a [CliffordElement]),
}

pub fn make_field(
    rep: &CliffordAlgebraRep,
    psi0: Spinor,
    spec: DerivSpec<'_>,
) -> Result<SpinorField> {
    if psi0.dim() != rep.n_spin {
        return Err(SpinError::DimensionMismatch {
            expected: rep.n_spin,
            got: psi0.dim(),
        });
    }
    if psi0.norm() == 0.0 {
        return Err(SpinError::ZeroSpinor);
    }
    let (deriv, source) = match spec {
        DerivSpec::SpinConnection(conn) => {
            (spin_connection(conn, rep)?, DerivSource::SpinConnection)
        }
        DerivSpec::Elements(elements) => {
            if elements.len() != rep.n {
                return Err(SpinError::DimensionMismatch {
                    expected: rep.n,
                    got: elements.len(),
                });
            }
            let mats = elements
                .iter()
                .map(|e| e.to_matrix(rep))
                .collect::<Result<Vec<_>>>()?;
            (mats, DerivSource::Prescribed)
        }
    };
    let norm_sq = psi0.norm_sq();
    let constant_norm = deriv.iter().all(|m| {
        vec_inner(&m.mul_vec(&psi0.components), &psi0.components)
            .re
            .abs()
            <= 1e-12 * norm_sq.max(1.0)
    });
    Ok(SpinorField {
        rep: rep.clone(),
        psi0,
        deriv,
        source,
        constant_norm,
    })
}

/// Dirac data of a field: the matrix D = Σ γ_i M_i, its value on Ψ,
/// and the squared eigenvalue when Ψ is an eigenvector of D².
#[derive(Debug, Clone)]
pub struct DiracData {
    pub matrix: CMat,
    pub value: Spinor,
    pub squared_value: Spinor,
    pub lambda_sq: Option<f64>,
}

fn dirac_matrix(field: &SpinorField) -> CMat {
    let mut d = CMat::zeros(field.rep.n_spin);
    for (g, m) in field.rep.gamma.iter().zip(&field.deriv) {
        d = d.add(&g.mul(m));
    }
    d
}

/// Value of D²Ψ. Connection-sourced fields compose as matrices; for
/// prescribed fields the Clifford coefficient of DΨ is treated as
/// parallel, so D²Ψ = Σ_i γ_i·K·M_iΨ with K the Dirac matrix.
fn dirac_squared_value(field: &SpinorField, d: &CMat) -> Vec<crate::linalg::C64> {
    match field.source {
        DerivSource::SpinConnection => d.mul(d).mul_vec(&field.psi0.components),
        DerivSource::Prescribed => {
            let mut out = vec![crate::linalg::C_ZERO; field.rep.n_spin];
            for (g, m) in field.rep.gamma.iter().zip(&field.deriv) {
                let term = g.mul(d).mul_vec(&m.mul_vec(&field.psi0.components));
                for (o, t) in out.iter_mut().zip(term) {
                    *o += t;
                }
            }
            out
        }
    }
}

pub fn dirac(field: &SpinorField) -> DiracData {
    let d = dirac_matrix(field);
    let value = Spinor::new(d.mul_vec(&field.psi0.components));
    let sq = dirac_squared_value(field, &d);
    let norm_sq = field.psi0.norm_sq();
    let lambda = vec_inner(&sq, &field.psi0.components).re / norm_sq;
    let residual = vec_norm(&vec_sub(
        &sq,
        &vec_scale(&field.psi0.components, c(lambda, 0.0)),
    )) / field.psi0.norm();
    let lambda_sq = if residual <= DEFAULT_TOL {
        Some(lambda)
    } else {
        None
    };
    DiracData {
        matrix: d,
        value,
        squared_value: Spinor::new(sq),
        lambda_sq,
    }
}

/// Rayleigh quotient λ² = ℜ(D²Ψ,Ψ)/|Ψ|² with a residual check that the
/// field really is an eigenvector of D².
pub fn rayleigh_eigencheck(field: &SpinorField, tol: f64) -> Result<f64> {
    let d = dirac_matrix(field);
    let sq = dirac_squared_value(field, &d);
    let norm_sq = field.psi0.norm_sq();
    let lambda = vec_inner(&sq, &field.psi0.components).re / norm_sq;
    let residual = vec_norm(&vec_sub(
        &sq,
        &vec_scale(&field.psi0.components, c(lambda, 0.0)),
    )) / field.psi0.norm();
    if residual > tol {
        return Err(SpinError::NotAnEigenspinor(residual));
    }
    Ok(lambda)
}

/// Validates an almost-complex structure in row convention:
/// J·J = −Id and orthogonality, within 1e-10.
pub fn validate_almost_complex(j: &BilinearTensor) -> Result<()> {
    let n = j.dim();
    if n % 2 == 1 {
        return Err(SpinError::OddDimension(n));
    }
    let id = BilinearTensor::identity(n);
    let sq_defect = j.compose(j).add(&id).max_abs();
    // orthogonality: rows form an orthonormal set
    let mut orth_defect = 0.0f64;
    for a in 0..n {
        for b in 0..n {
            let dot: f64 = (0..n).map(|k| j.get(a, k) * j.get(b, k)).sum();
            let target = if a == b { 1.0 } else { 0.0 };
            orth_defect = orth_defect.max((dot - target).abs());
        }
    }
    let defect = sq_defect.max(orth_defect);
    if defect > 1e-10 {
        return Err(SpinError::InvalidAlmostComplex(defect));
    }
    Ok(())
}

/// Twisted operator value D̃Ψ = Σ_i J(e_i)·∇_{e_i}Ψ for an
/// almost-complex structure J given in row convention.
pub fn twisted_dirac(field: &SpinorField, j: &BilinearTensor) -> Result<Spinor> {
    if j.dim() != field.rep.n {
        return Err(SpinError::DimensionMismatch {
            expected: field.rep.n,
            got: j.dim(),
        });
    }
    validate_almost_complex(j)?;
    let mut out = vec![crate::linalg::C_ZERO; field.rep.n_spin];
    for i in 0..field.rep.n {
        let jv = field.rep.vector_action(&j.row(i))?;
        let term = jv.mul_vec(&field.deriv[i].mul_vec(&field.psi0.components));
        for (o, t) in out.iter_mut().zip(term) {
            *o += t;
        }
    }
    Ok(Spinor::new(out))
}
