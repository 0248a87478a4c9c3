//! Energy-momentum tensors of a spinor field and the eigenvalue
//! bounds built from them, together with the limiting-case residual
//! and the modified-connection identity.

use crate::clifford::Spinor;
use crate::error::{Result, SpinError};
use crate::foliation::{flow_emt, FlowStructure};
use crate::linalg::{c, vec_inner, vec_norm, vec_scale, vec_sub};
use crate::spinor_field::SpinorField;
use crate::tensor::BilinearTensor;

/// The three tensors of a field: E_{ij} = ℜ(e_j·∇_{e_i}Ψ, Ψ/|Ψ|²),
/// its symmetric part T and skew part Q.
#[derive(Debug, Clone)]
pub struct EmtTensors {
    pub e: BilinearTensor,
    pub t: BilinearTensor,
    pub q: BilinearTensor,
}

pub fn emt_tensors(field: &SpinorField) -> Result<EmtTensors> {
    let norm_sq = field.psi0.norm_sq();
    if norm_sq == 0.0 {
        return Err(SpinError::ZeroSpinor);
    }
    let n = field.rep.n;
    let mut e = BilinearTensor::zeros(n);
    for i in 0..n {
        let dpsi = field.deriv[i].mul_vec(&field.psi0.components);
        for j in 0..n {
            let v = vec_inner(&field.rep.gamma[j].mul_vec(&dpsi), &field.psi0.components).re;
            e.set(i, j, v / norm_sq);
        }
    }
    Ok(EmtTensors {
        t: e.sym(),
        q: e.skew(),
        e,
    })
}

/// T computed directly from its defining symmetrized formula,
/// independent of the E-split path.
pub fn emt_t_direct(field: &SpinorField) -> Result<BilinearTensor> {
    let norm_sq = field.psi0.norm_sq();
    if norm_sq == 0.0 {
        return Err(SpinError::ZeroSpinor);
    }
    let n = field.rep.n;
    let mut t = BilinearTensor::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let a = vec_inner(
                &field.rep.gamma[i].mul_vec(&field.deriv[j].mul_vec(&field.psi0.components)),
                &field.psi0.components,
            )
            .re;
            let b = vec_inner(
                &field.rep.gamma[j].mul_vec(&field.deriv[i].mul_vec(&field.psi0.components)),
                &field.psi0.components,
            )
            .re;
            t.set(i, j, 0.5 * (a + b) / norm_sq);
        }
    }
    Ok(t)
}

/// Q computed directly from its defining antisymmetrized formula.
pub fn emt_q_direct(field: &SpinorField) -> Result<BilinearTensor> {
    let norm_sq = field.psi0.norm_sq();
    if norm_sq == 0.0 {
        return Err(SpinError::ZeroSpinor);
    }
    let n = field.rep.n;
    let mut q = BilinearTensor::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let a = vec_inner(
                &field.rep.gamma[j].mul_vec(&field.deriv[i].mul_vec(&field.psi0.components)),
                &field.psi0.components,
            )
            .re;
            let b = vec_inner(
                &field.rep.gamma[i].mul_vec(&field.deriv[j].mul_vec(&field.psi0.components)),
                &field.psi0.components,
            )
            .re;
            q.set(i, j, 0.5 * (a - b) / norm_sq);
        }
    }
    Ok(q)
}

/// Residual of the limiting-case equation ∇_{e_i}Ψ = −E(e_i)·Ψ:
/// max_i ‖M_iΨ + (Σ_j E_{ij} e_j)·Ψ‖ / ‖Ψ‖. Zero characterizes the
/// equality case of the eigenvalue estimate.
pub fn equality_residual(field: &SpinorField, e: &BilinearTensor) -> Result<f64> {
    let norm = field.psi0.norm();
    if norm == 0.0 {
        return Err(SpinError::ZeroSpinor);
    }
    let n = field.rep.n;
    let mut worst = 0.0f64;
    for i in 0..n {
        let action = field.rep.vector_action(&e.row(i))?;
        let lhs = field.deriv[i].mul_vec(&field.psi0.components);
        let rhs = action.mul_vec(&field.psi0.components);
        let sum: Vec<_> = lhs.iter().zip(&rhs).map(|(a, b)| a + b).collect();
        worst = worst.max(vec_norm(&sum) / norm);
    }
    Ok(worst)
}

/// Both sides of the modified-connection identity
/// Σ_i ‖M_iΨ + E(e_i)·Ψ‖² = Σ_i ‖M_iΨ‖² − |E|²·|Ψ|².
pub fn modified_connection_identity(field: &SpinorField) -> Result<(f64, f64)> {
    let tensors = emt_tensors(field)?;
    let n = field.rep.n;
    let mut lhs = 0.0;
    let mut grad_sq = 0.0;
    for i in 0..n {
        let dpsi = field.deriv[i].mul_vec(&field.psi0.components);
        grad_sq += dpsi.iter().map(|z| z.norm_sqr()).sum::<f64>();
        let action = field.rep.vector_action(&tensors.e.row(i))?;
        let modified: Vec<_> = dpsi
            .iter()
            .zip(action.mul_vec(&field.psi0.components))
            .map(|(a, b)| a + b)
            .collect();
        lhs += modified.iter().map(|z| z.norm_sqr()).sum::<f64>();
    }
    let rhs = grad_sq - tensors.e.frob_sq() * field.psi0.norm_sq();
    Ok((lhs, rhs))
}

/// Pairing identity of the twisted operator and the Cauchy–Schwarz
/// bounds attached to it.
#[derive(Debug, Clone)]
pub struct PairingReport {
    /// ℜ(D̃Ψ, Ψ)
    pub re_twisted: f64,
    /// (J, Q^Ψ)·|Ψ|²
    pub paired: f64,
    pub t_norm_sq: f64,
    /// tr(T)²/n
    pub t_cs_bound: f64,
    pub q_norm_sq: f64,
    /// (J, Q)²/n
    pub q_cs_bound: f64,
}

pub fn pairing_identity(field: &SpinorField, j: &BilinearTensor) -> Result<PairingReport> {
    let twisted = crate::spinor_field::twisted_dirac(field, j)?;
    let re_twisted = vec_inner(&twisted.components, &field.psi0.components).re;
    let tensors = emt_tensors(field)?;
    let n = field.rep.n as f64;
    let jq = j.pairing(&tensors.q);
    Ok(PairingReport {
        re_twisted,
        paired: jq * field.psi0.norm_sq(),
        t_norm_sq: tensors.t.frob_sq(),
        t_cs_bound: tensors.t.trace().powi(2) / n,
        q_norm_sq: tensors.q.frob_sq(),
        q_cs_bound: jq * jq / n,
    })
}

/// Right-hand sides of the eigenvalue estimates, evaluated pointwise
/// on the homogeneous model, with equality flags.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub lambda_sq: f64,
    /// n·Scal/(4(n−1))
    pub friedrich_rhs: f64,
    pub friedrich_holds: bool,
    pub friedrich_equality: bool,
    /// Whether DΨ is proportional to Ψ, the hypothesis of the
    /// T-only estimate; when false that bound is reported inapplicable.
    pub emt_applicable: bool,
    /// Scal/4 + |T|²
    pub emt_rhs: f64,
    pub emt_holds: Option<bool>,
    pub emt_equality: Option<bool>,
    /// Scal/4 + |T|² + |Q|²
    pub main_rhs: f64,
    pub main_holds: bool,
    pub main_equality: bool,
    /// Scal/4 + |E_flow|², present when a flow is supplied.
    pub flow_rhs: Option<f64>,
    /// Scal/4 + |E_flow|² restricted to directions orthogonal to ξ.
    pub flow_rhs_q: Option<f64>,
    pub flow_holds: Option<bool>,
    /// Residual of the limiting-case equation with E = E^Ψ.
    pub equality_residual: f64,
    pub t_norm_sq: f64,
    pub q_norm_sq: f64,
}

pub fn check_bounds(
    field: &SpinorField,
    scal: f64,
    flow: Option<&FlowStructure>,
    tol: f64,
) -> Result<BoundReport> {
    let lambda_sq = crate::spinor_field::rayleigh_eigencheck(field, tol)?;
    let tensors = emt_tensors(field)?;
    let n = field.rep.n as f64;
    let friedrich_rhs = n * scal / (4.0 * (n - 1.0));
    let emt_rhs = scal / 4.0 + tensors.t.frob_sq();
    let main_rhs = scal / 4.0 + tensors.t.frob_sq() + tensors.q.frob_sq();

    // The T-only bound is stated for eigenspinors of the Dirac
    // operator itself, not of its square.
    let d = crate::spinor_field::dirac(field);
    let mu = vec_inner(&d.value.components, &field.psi0.components).re / field.psi0.norm_sq();
    let d_residual = vec_norm(&vec_sub(
        &d.value.components,
        &vec_scale(&field.psi0.components, c(mu, 0.0)),
    )) / field.psi0.norm();
    let emt_applicable = d_residual <= tol;

    let (flow_rhs, flow_rhs_q, flow_holds) = match flow {
        Some(fs) => {
            let fe = flow_emt(field, fs)?;
            let full = scal / 4.0 + fe.e.frob_sq();
            let mut q_only = 0.0;
            for i in 0..field.rep.n {
                for j in 0..field.rep.n {
                    if i != fs.xi && j != fs.xi {
                        q_only += fe.e.get(i, j).powi(2);
                    }
                }
            }
            let q_rhs = scal / 4.0 + q_only;
            (
                Some(full),
                Some(q_rhs),
                Some(lambda_sq >= full - tol && lambda_sq >= q_rhs - tol),
            )
        }
        None => (None, None, None),
    };

    Ok(BoundReport {
        lambda_sq,
        friedrich_rhs,
        friedrich_holds: lambda_sq >= friedrich_rhs - tol,
        friedrich_equality: (lambda_sq - friedrich_rhs).abs() <= tol,
        emt_applicable,
        emt_rhs,
        emt_holds: emt_applicable.then_some(lambda_sq >= emt_rhs - tol),
        emt_equality: emt_applicable.then(|| (lambda_sq - emt_rhs).abs() <= tol),
        main_rhs,
        main_holds: lambda_sq >= main_rhs - tol,
        main_equality: (lambda_sq - main_rhs).abs() <= tol,
        flow_rhs,
        flow_rhs_q,
        flow_holds,
        equality_residual: equality_residual(field, &tensors.e)?,
        t_norm_sq: tensors.t.frob_sq(),
        q_norm_sq: tensors.q.frob_sq(),
    })
}

/// Convenience: trace identity tr(T^Ψ) = ℜ(DΨ, Ψ)/|Ψ|².
pub fn trace_identity_defect(field: &SpinorField) -> Result<f64> {
    let tensors = emt_tensors(field)?;
    let d = crate::spinor_field::dirac(field);
    let re = vec_inner(&d.value.components, &field.psi0.components).re / field.psi0.norm_sq();
    Ok((tensors.t.trace() - re).abs())
}

pub fn dirac_value_spinor(field: &SpinorField) -> Spinor {
    crate::spinor_field::dirac(field).value
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{build_rep, CliffordElement, Spinor};
    use crate::frame::{levi_civita, nil3_entries, sol3_entries, validate_frame};
    use crate::linalg::{C_ONE, C_ZERO};
    use crate::spinor_field::{make_field, DerivSpec};

    fn nil3_field(tau: f64) -> SpinorField {
        let m = validate_frame(3, &nil3_entries(tau)).unwrap();
        let conn = levi_civita(&m);
        let rep = build_rep(3).unwrap();
        make_field(
            &rep,
            Spinor::new(vec![c(0.8, 0.1), c(-0.3, 0.5)]),
            DerivSpec::SpinConnection(&conn),
        )
        .unwrap()
    }

    fn sol3_field() -> SpinorField {
        let m = validate_frame(3, &sol3_entries()).unwrap();
        let conn = levi_civita(&m);
        let rep = build_rep(3).unwrap();
        make_field(
            &rep,
            Spinor::new(vec![C_ONE, C_ZERO]),
            DerivSpec::SpinConnection(&conn),
        )
        .unwrap()
    }

    fn s1xs2_field() -> SpinorField {
        let rep = build_rep(3).unwrap();
        let elements = vec![
            CliffordElement::zero(3),
            CliffordElement::vector(vec![0.0, 0.0, 0.5]),
            CliffordElement::vector(vec![0.0, -0.5, 0.0]),
        ];
        make_field(
            &rep,
            Spinor::new(vec![C_ONE, C_ZERO]),
            DerivSpec::Elements(&elements),
        )
        .unwrap()
    }

    #[test]
    fn nil3_tensors() {
        for tau in [0.5, 1.0, 2.0] {
            let field = nil3_field(tau);
            let tensors = emt_tensors(&field).unwrap();
            let expected = BilinearTensor::from_rows(&[
                vec![-tau / 2.0, 0.0, 0.0],
                vec![0.0, -tau / 2.0, 0.0],
                vec![0.0, 0.0, tau / 2.0],
            ]);
            assert!(tensors.t.max_abs_diff(&expected) < 1e-13);
            assert!(tensors.q.max_abs() < 1e-13);
            assert!((tensors.t.frob_sq() - 0.75 * tau * tau).abs() < 1e-13);
        }
    }

    #[test]
    fn sol3_tensors() {
        let field = sol3_field();
        let tensors = emt_tensors(&field).unwrap();
        assert!((tensors.t.get(0, 1) + 0.5).abs() < 1e-14);
        assert!((tensors.t.get(1, 0) + 0.5).abs() < 1e-14);
        for i in 0..3 {
            assert!(tensors.t.get(i, i).abs() < 1e-14);
        }
        assert!((tensors.t.frob_sq() - 0.5).abs() < 1e-14);
        assert!(tensors.q.max_abs() < 1e-14);
    }

    #[test]
    fn product_sphere_tensors() {
        let field = s1xs2_field();
        let tensors = emt_tensors(&field).unwrap();
        assert!(tensors.t.max_abs() < 1e-14);
        assert!((tensors.q.get(1, 2) + 0.5).abs() < 1e-14);
        assert!((tensors.q.frob_sq() - 0.5).abs() < 1e-14);
    }

    #[test]
    fn direct_formulas_agree_with_split() {
        for field in [nil3_field(1.3), sol3_field(), s1xs2_field()] {
            let tensors = emt_tensors(&field).unwrap();
            let t = emt_t_direct(&field).unwrap();
            let q = emt_q_direct(&field).unwrap();
            assert!(tensors.t.max_abs_diff(&t) < 1e-12);
            assert!(tensors.q.max_abs_diff(&q) < 1e-12);
            assert!(
                (tensors.e.frob_sq() - tensors.t.frob_sq() - tensors.q.frob_sq()).abs() < 1e-12
            );
        }
    }

    #[test]
    fn nil3_bounds_reach_equality() {
        let field = nil3_field(1.0);
        let report = check_bounds(&field, -2.0, None, 1e-9).unwrap();
        assert!((report.lambda_sq - 0.25).abs() < 1e-12);
        assert!((report.main_rhs - 0.25).abs() < 1e-12);
        assert!(report.main_equality);
        assert!(report.emt_applicable);
        assert_eq!(report.emt_equality, Some(true));
        assert!(report.equality_residual < 1e-12);
        assert!((report.friedrich_rhs + 0.75).abs() < 1e-12);
        assert!(report.friedrich_holds && !report.friedrich_equality);
    }

    #[test]
    fn sol3_bounds_reach_equality_at_zero() {
        let field = sol3_field();
        let report = check_bounds(&field, -2.0, None, 1e-9).unwrap();
        assert!(report.lambda_sq.abs() < 1e-12);
        assert!(report.main_rhs.abs() < 1e-12);
        assert!(report.main_equality);
        assert!(report.equality_residual < 1e-12);
    }

    #[test]
    fn product_sphere_friedrich_is_strict() {
        let field = s1xs2_field();
        let report = check_bounds(&field, 2.0, None, 1e-9).unwrap();
        assert!((report.lambda_sq - 1.0).abs() < 1e-12);
        assert!((report.friedrich_rhs - 0.75).abs() < 1e-12);
        assert!(report.friedrich_holds && !report.friedrich_equality);
        assert!((report.main_rhs - 1.0).abs() < 1e-12);
        assert!(report.main_equality);
        // DΨ = ξΨ is not proportional to Ψ, so the T-only bound is
        // reported inapplicable.
        assert!(!report.emt_applicable);
        assert_eq!(report.emt_holds, None);
    }

    #[test]
    fn equality_residual_perturbation() {
        let field = nil3_field(1.0);
        let tensors = emt_tensors(&field).unwrap();
        assert!(equality_residual(&field, &tensors.e).unwrap() < 1e-13);
        for delta in [1e-6, 1e-3, 0.1] {
            let mut perturbed = tensors.e.clone();
            perturbed.set(0, 1, perturbed.get(0, 1) + delta);
            let r = equality_residual(&field, &perturbed).unwrap();
            assert!(
                (r - delta).abs() < 1e-9 * (1.0 + delta),
                "delta={delta}, r={r}"
            );
        }
    }

    #[test]
    fn modified_connection_identity_on_catalog() {
        for field in [nil3_field(0.7), sol3_field(), s1xs2_field()] {
            let (lhs, rhs) = modified_connection_identity(&field).unwrap();
            assert!((lhs - rhs).abs() < 1e-12);
        }
        // limiting case: both sides vanish for nil3
        let (lhs, rhs) = modified_connection_identity(&nil3_field(1.0)).unwrap();
        assert!(lhs.abs() < 1e-12 && rhs.abs() < 1e-12);
    }

    #[test]
    fn parallel_field_is_degenerate_zero() {
        let rep = build_rep(3).unwrap();
        let elements = vec![CliffordElement::zero(3); 3];
        let field = make_field(
            &rep,
            Spinor::new(vec![C_ONE, C_ZERO]),
            DerivSpec::Elements(&elements),
        )
        .unwrap();
        let tensors = emt_tensors(&field).unwrap();
        assert!(tensors.e.max_abs() < 1e-15);
        assert!(equality_residual(&field, &BilinearTensor::zeros(3)).unwrap() < 1e-15);
        let (lhs, rhs) = modified_connection_identity(&field).unwrap();
        assert!(lhs.abs() < 1e-15 && rhs.abs() < 1e-15);
    }

    #[test]
    fn pairing_identity_two_dimensional() {
        let rep = build_rep(2).unwrap();
        let elements = vec![
            CliffordElement::vector(vec![0.0, 0.5]),
            CliffordElement::vector(vec![-0.5, 0.0]),
        ];
        let field = make_field(
            &rep,
            Spinor::new(vec![c(1.0, 0.3), c(0.2, -0.4)]),
            DerivSpec::Elements(&elements),
        )
        .unwrap();
        let j = BilinearTensor::from_rows(&[vec![0.0, 1.0], vec![-1.0, 0.0]]);
        let report = pairing_identity(&field, &j).unwrap();
        assert!((report.re_twisted - report.paired).abs() < 1e-12);
        assert!(report.q_norm_sq >= report.q_cs_bound - 1e-12);
        assert!(report.t_norm_sq >= report.t_cs_bound - 1e-12);
        // parallel field pairs to zero
        let zero_field = make_field(
            &rep,
            Spinor::new(vec![C_ONE, C_ZERO]),
            DerivSpec::Elements(&[CliffordElement::zero(2), CliffordElement::zero(2)]),
        )
        .unwrap();
        let zr = pairing_identity(&zero_field, &j).unwrap();
        assert!(zr.re_twisted.abs() < 1e-15 && zr.paired.abs() < 1e-15);
    }

    #[test]
    fn trace_identity() {
        for field in [nil3_field(1.7), sol3_field(), s1xs2_field()] {
            assert!(trace_identity_defect(&field).unwrap() < 1e-12);
        }
    }
}
