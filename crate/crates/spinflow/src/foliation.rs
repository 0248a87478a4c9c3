//! Codimension-one foliations and Riemannian flows: Weingarten data,
//! O'Neill tensor, the transversal Levi-Civita connection with its
//! curvature, flow energy-momentum tensors, and the three-dimensional
//! equivalence between transversal parallel spinors and Dirac
//! solutions.
//!
//! Two sign conventions coexist and are never mixed: hypersurface mode
//! uses h(X) = −∇_X ν, flow mode uses h(X) = +∇_X ξ.

use crate::clifford::{restrict_rep, CliffordAlgebraRep};
use crate::error::{Result, SpinError};
use crate::frame::{FrameManifold, LeviCivitaConnection};
use crate::linalg::{c, common_kernel, vec_norm, CMat, C64};
use crate::spinor_field::SpinorField;
use crate::tensor::BilinearTensor;

/// Unit-field flow data in flow convention h_{ij} = g(∇_{e_i}ξ, e_j).
#[derive(Debug, Clone)]
pub struct FlowStructure {
    /// 0-based frame index of ξ.
    pub xi: usize,
    pub h: BilinearTensor,
    /// κ = ∇_ξξ, the mean curvature vector of the flow.
    pub kappa: Vec<f64>,
    pub riemannian: bool,
    pub minimal: bool,
    /// For n = 3: b with h(e_q1) = b·e_q2 on the normal plane.
    pub b: Option<f64>,
    /// ‖h(·,ξ)‖, zero because |ξ| = 1.
    pub xi_column_defect: f64,
}

impl FlowStructure {
    pub fn q_indices(&self, n: usize) -> Vec<usize> {
        (0..n).filter(|&i| i != self.xi).collect()
    }
}

pub fn flow_structure(
    m: &FrameManifold,
    conn: &LeviCivitaConnection,
    xi_index: usize,
) -> Result<FlowStructure> {
    let n = m.n;
    if xi_index < 1 || xi_index > n {
        return Err(SpinError::IndexOutOfRange { index: xi_index, n });
    }
    let xi = xi_index - 1;
    let mut h = BilinearTensor::zeros(n);
    for i in 0..n {
        for j in 0..n {
            h.set(i, j, conn.gamma(i, xi, j));
        }
    }
    let kappa = h.row(xi);
    let mut sym_defect = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            if i != xi && j != xi {
                sym_defect = sym_defect.max((h.get(i, j) + h.get(j, i)).abs());
            }
        }
    }
    let kappa_norm = kappa.iter().map(|v| v * v).sum::<f64>().sqrt();
    let xi_column_defect = (0..n).map(|i| h.get(i, xi).abs()).fold(0.0, f64::max);
    let b = if n == 3 {
        let q: Vec<usize> = (0..n).filter(|&i| i != xi).collect();
        Some(h.get(q[0], q[1]))
    } else {
        None
    };
    Ok(FlowStructure {
        xi,
        h,
        kappa,
        riemannian: sym_defect <= 1e-10,
        minimal: kappa_norm <= 1e-10,
        b,
        xi_column_defect,
    })
}

/// O'Neill tensor values of a Riemannian flow and the bracket identity
/// A_Z W = ½ π^⊥[Z, W].
#[derive(Debug, Clone)]
pub struct OneillReport {
    /// entry (i, j) = g(A_{e_i}e_j, ξ) = −h_{ij} for i, j ⊥ ξ.
    pub a_xi_component: BilinearTensor,
    /// max over Z, W ⊥ ξ of |g(A_Z W, ξ) − ½ g(\[Z,W\], ξ)|.
    pub bracket_defect: f64,
}

pub fn oneill(m: &FrameManifold, flow: &FlowStructure) -> Result<OneillReport> {
    if !flow.riemannian {
        let mut defect = 0.0f64;
        for i in 0..m.n {
            for j in 0..m.n {
                if i != flow.xi && j != flow.xi {
                    defect = defect.max((flow.h.get(i, j) + flow.h.get(j, i)).abs());
                }
            }
        }
        return Err(SpinError::NonRiemannianFlow(defect));
    }
    let n = m.n;
    let mut a = BilinearTensor::zeros(n);
    let mut bracket_defect = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            if i == flow.xi || j == flow.xi {
                continue;
            }
            let value = -flow.h.get(i, j);
            a.set(i, j, value);
            bracket_defect = bracket_defect.max((value - 0.5 * m.c(i, j, flow.xi)).abs());
        }
    }
    Ok(OneillReport {
        a_xi_component: a,
        bracket_defect,
    })
}

/// Transversal Levi-Civita connection of a Riemannian flow, with its
/// curvature and the induced spinor derivative matrices.
#[derive(Debug, Clone)]
pub struct TransversalConnection {
    pub xi: usize,
    pub q_indices: Vec<usize>,
    /// Spinor derivative matrices per ambient direction.
    pub nabla: Vec<CMat>,
    pub kernel_dim: usize,
    pub kernel_basis: Vec<Vec<C64>>,
    /// Transversal Christoffel symbols per ambient direction:
    /// `gamma_q[d]`(j, k) = g(∇_{e_d} e_j, e_k) for j, k ⊥ ξ.
    pub gamma_q: Vec<BilinearTensor>,
    /// Transversal curvature values R^∇_{abkl} = g(R^∇(e_a,e_b)e_k, e_l).
    riemann_q: Vec<f64>,
    pub ric_q: BilinearTensor,
    pub scal_q_direct: f64,
    /// Scal_M − 2 div_Q κ + 2|κ|² + |h|_Q².
    pub scal_q_formula: f64,
    /// max ‖R^∇(ξ, ·)·‖.
    pub r_xi_defect: f64,
    pub div_kappa: f64,
    pub h_q_norm_sq: f64,
}

impl TransversalConnection {
    pub fn riemann_q(&self, a: usize, b: usize, k: usize, l: usize) -> f64 {
        let n = self.gamma_q.len();
        self.riemann_q[((a * n + b) * n + k) * n + l]
    }
}

/// ∇_{e_d} of a constant-coefficient section of Q, in components.
fn transversal_derive(
    m: &FrameManifold,
    conn: &LeviCivitaConnection,
    xi: usize,
    d: usize,
    v: &[f64],
) -> Vec<f64> {
    let n = m.n;
    let mut out = vec![0.0; n];
    for k in 0..n {
        if k == xi {
            continue;
        }
        let mut acc = 0.0;
        for j in 0..n {
            if j == xi {
                continue;
            }
            acc += v[j]
                * if d == xi {
                    m.c(xi, j, k)
                } else {
                    conn.gamma(d, j, k)
                };
        }
        out[k] = acc;
    }
    out
}

pub fn transversal_connection(
    field: &SpinorField,
    flow: &FlowStructure,
    m: &FrameManifold,
    conn: &LeviCivitaConnection,
    scal: f64,
    tol: f64,
) -> Result<TransversalConnection> {
    if !flow.riemannian {
        return Err(SpinError::NonRiemannianFlow(flow.h.sym().max_abs()));
    }
    let n = m.n;
    let xi = flow.xi;
    let q_indices = flow.q_indices(n);
    let rep = &field.rep;

    // Spinor derivative matrices from the flow Gauss formulas.
    let mut nabla = Vec::with_capacity(n);
    for i in 0..n {
        if i == xi {
            let mut w = field.deriv[xi].clone();
            for &qi in &q_indices {
                let h_action = rep.vector_action(&flow.h.row(qi))?;
                w = w.sub(&rep.gamma[qi].mul(&h_action).scale(c(0.25, 0.0)));
            }
            let kappa_action = rep.vector_action(&flow.kappa)?;
            w = w.sub(&rep.gamma[xi].mul(&kappa_action).scale(c(0.5, 0.0)));
            nabla.push(w);
        } else {
            let h_action = rep.vector_action(&flow.h.row(i))?;
            let w = field.deriv[i].sub(&rep.gamma[xi].mul(&h_action).scale(c(0.5, 0.0)));
            nabla.push(w);
        }
    }
    let kernel_basis = common_kernel(&nabla, tol.max(1e-12));
    let kernel_dim = kernel_basis.len();

    let mut gamma_q = Vec::with_capacity(n);
    for d in 0..n {
        let mut g = BilinearTensor::zeros(n);
        for &j in &q_indices {
            for &k in &q_indices {
                g.set(
                    j,
                    k,
                    if d == xi {
                        m.c(xi, j, k)
                    } else {
                        conn.gamma(d, j, k)
                    },
                );
            }
        }
        gamma_q.push(g);
    }

    // Curvature of the transversal connection on Q-vectors.
    let mut r = vec![0.0; n * n * n * n]; // r[a][b][k][l] component l of R(e_a,e_b)e_k
    let unit = |k: usize| -> Vec<f64> {
        let mut v = vec![0.0; n];
        v[k] = 1.0;
        v
    };
    for a in 0..n {
        for b in 0..n {
            for &k in &q_indices {
                let ek = unit(k);
                let t1 =
                    transversal_derive(m, conn, xi, a, &transversal_derive(m, conn, xi, b, &ek));
                let t2 =
                    transversal_derive(m, conn, xi, b, &transversal_derive(m, conn, xi, a, &ek));
                let mut t3 = vec![0.0; n];
                for d in 0..n {
                    let cd = m.c(a, b, d);
                    if cd != 0.0 {
                        for (t3l, dl) in t3.iter_mut().zip(transversal_derive(m, conn, xi, d, &ek))
                        {
                            *t3l += cd * dl;
                        }
                    }
                }
                for l in 0..n {
                    r[((a * n + b) * n + k) * n + l] = t1[l] - t2[l] - t3[l];
                }
            }
        }
    }
    let mut r_xi_defect = 0.0f64;
    for b in 0..n {
        for &k in &q_indices {
            for l in 0..n {
                r_xi_defect = r_xi_defect.max(r[((xi * n + b) * n + k) * n + l].abs());
            }
        }
    }
    let mut ric_q = BilinearTensor::zeros(n);
    for &j in &q_indices {
        for l in 0..n {
            let mut acc = 0.0;
            for &i in &q_indices {
                acc += r[((j * n + i) * n + i) * n + l];
            }
            ric_q.set(j, l, acc);
        }
    }
    let scal_q_direct: f64 = q_indices.iter().map(|&j| ric_q.get(j, j)).sum();

    let mut div_kappa = 0.0;
    for &i in &q_indices {
        let d = conn.derive(i, &flow.kappa);
        div_kappa += d[i];
    }
    let kappa_sq: f64 = flow.kappa.iter().map(|v| v * v).sum();
    let mut h_q_norm_sq = 0.0;
    for &i in &q_indices {
        for &j in &q_indices {
            h_q_norm_sq += flow.h.get(i, j).powi(2);
        }
    }
    let scal_q_formula = scal - 2.0 * div_kappa + 2.0 * kappa_sq + h_q_norm_sq;

    Ok(TransversalConnection {
        xi,
        q_indices,
        nabla,
        kernel_dim,
        kernel_basis,
        gamma_q,
        riemann_q: r,
        ric_q,
        scal_q_direct,
        scal_q_formula,
        r_xi_defect,
        div_kappa,
        h_q_norm_sq,
    })
}

/// Flow energy-momentum tensors E_Ψ(X,Y) = ℜ(ξ·Y·∇_XΨ, Ψ/|Ψ|²) with
/// the identity checks of the parallel case. Identities are gated on
/// the parallel residuals of the raw Gauss relation, which needs no
/// Riemannian hypothesis.
#[derive(Debug, Clone)]
pub struct FlowEmtReport {
    pub e: BilinearTensor,
    pub t: BilinearTensor,
    pub q: BilinearTensor,
    /// max over Z ⊥ ξ of ‖(M_Z − ½ξ·h(Z)·)Ψ‖/‖Ψ‖.
    pub q_parallel_residual: f64,
    /// ‖(M_ξ − ½ξ·κ·)Ψ‖/‖Ψ‖.
    pub xi_parallel_residual: f64,
    /// max |T_Ψ(Z,W) + ¼(L_ξg)(Z,W)|, present when the Q-direction
    /// parallel residual vanishes.
    pub t_lie_defect: Option<f64>,
    /// max |Q_Ψ(Z,W) − ¼g(\[Z,W\],ξ)|, same gate.
    pub q_bracket_defect: Option<f64>,
    /// max |T_Ψ(ξ,Z) + ¼g(κ,Z)|, additionally needs the ξ-direction
    /// residual.
    pub t_xi_defect: Option<f64>,
    /// max |Q_Ψ(Z,W) − ½g(A_Z W, ξ)|, Riemannian flows only.
    pub q_oneill_defect: Option<f64>,
}

pub fn flow_emt(field: &SpinorField, flow: &FlowStructure) -> Result<FlowEmtReport> {
    let norm_sq = field.psi0.norm_sq();
    if norm_sq == 0.0 {
        return Err(SpinError::ZeroSpinor);
    }
    let n = field.rep.n;
    let xi = flow.xi;
    let rep = &field.rep;
    let mut e = BilinearTensor::zeros(n);
    for i in 0..n {
        let dpsi = field.deriv[i].mul_vec(&field.psi0.components);
        for j in 0..n {
            let v = crate::linalg::vec_inner(
                &rep.gamma[xi].mul_vec(&rep.gamma[j].mul_vec(&dpsi)),
                &field.psi0.components,
            )
            .re;
            e.set(i, j, v / norm_sq);
        }
    }
    let t = e.sym();
    let q = e.skew();

    let norm = field.psi0.norm();
    let mut q_parallel_residual = 0.0f64;
    for i in 0..n {
        if i == xi {
            continue;
        }
        let h_action = rep.vector_action(&flow.h.row(i))?;
        let gauss = rep.gamma[xi].mul(&h_action).scale(c(0.5, 0.0));
        let diff = field.deriv[i].sub(&gauss).mul_vec(&field.psi0.components);
        q_parallel_residual = q_parallel_residual.max(vec_norm(&diff) / norm);
    }
    let kappa_action = rep.vector_action(&flow.kappa)?;
    let gauss_xi = rep.gamma[xi].mul(&kappa_action).scale(c(0.5, 0.0));
    let xi_parallel_residual = vec_norm(
        &field.deriv[xi]
            .sub(&gauss_xi)
            .mul_vec(&field.psi0.components),
    ) / norm;

    let gate = 1e-10;
    let q_ok = q_parallel_residual <= gate;
    let xi_ok = xi_parallel_residual <= gate;

    let mut t_lie = 0.0f64;
    let mut q_bracket = 0.0f64;
    let mut q_oneill = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            if i == xi || j == xi {
                continue;
            }
            let lie = flow.h.get(i, j) + flow.h.get(j, i);
            t_lie = t_lie.max((t.get(i, j) + 0.25 * lie).abs());
            let bracket_xi = flow.h.get(j, i) - flow.h.get(i, j);
            q_bracket = q_bracket.max((q.get(i, j) - 0.25 * bracket_xi).abs());
            q_oneill = q_oneill.max((q.get(i, j) + 0.5 * flow.h.get(i, j)).abs());
        }
    }
    let mut t_xi = 0.0f64;
    for z in 0..n {
        if z == xi {
            continue;
        }
        let sym_xi = 0.5 * (e.get(xi, z) + e.get(z, xi));
        t_xi = t_xi.max((sym_xi + 0.25 * flow.kappa[z]).abs());
    }

    Ok(FlowEmtReport {
        e,
        t,
        q,
        q_parallel_residual,
        xi_parallel_residual,
        t_lie_defect: q_ok.then_some(t_lie),
        q_bracket_defect: q_ok.then_some(q_bracket),
        t_xi_defect: (q_ok && xi_ok).then_some(t_xi),
        q_oneill_defect: (q_ok && flow.riemannian).then_some(q_oneill),
    })
}

/// Three-dimensional equivalence report: transversal parallel spinors
/// versus unit solutions of the Dirac equation with eigenvalue b/2.
#[derive(Debug, Clone)]
pub struct ThreeDReport {
    pub kernel_dim: usize,
    pub b: f64,
    /// ‖DΨ̂ − (b/2)Ψ̂‖ for the normalized field value.
    pub dirac_residual: f64,
    /// dim ker(D − (b/2)Id) among frame-constant spinors.
    pub dirac_solution_dim: usize,
    pub scal_q: f64,
    pub scal_q_nonneg: bool,
    /// ‖D_trΦ‖ for the identified transversal field.
    pub d_tr_norm: f64,
    /// kernel nonempty ⇔ a unit-norm Dirac solution exists.
    pub equivalence_consistent: bool,
}

pub fn three_d_equivalence(
    field: &SpinorField,
    flow: &FlowStructure,
    trans: &TransversalConnection,
    tol: f64,
) -> Result<ThreeDReport> {
    if field.rep.n != 3 {
        return Err(SpinError::DimensionMismatch {
            expected: 3,
            got: field.rep.n,
        });
    }
    if !flow.riemannian {
        return Err(SpinError::NonRiemannianFlow(flow.h.sym().max_abs()));
    }
    let b = flow.b.expect("n = 3 has a b invariant");
    let d = crate::spinor_field::dirac(field);
    let psi_hat = field.psi0.normalized();
    let d_psi = d.matrix.mul_vec(&psi_hat.components);
    let target: Vec<C64> = psi_hat
        .components
        .iter()
        .map(|z| z * c(b / 2.0, 0.0))
        .collect();
    let dirac_residual = vec_norm(
        &d_psi
            .iter()
            .zip(&target)
            .map(|(a, t)| a - t)
            .collect::<Vec<_>>(),
    );
    let shifted = d
        .matrix
        .sub(&CMat::identity(field.rep.n_spin).scale(c(b / 2.0, 0.0)));
    let dirac_solution_dim = common_kernel(&[shifted], tol.max(1e-12)).len();

    // Transversal Dirac of the identified field Φ = Ψ*.
    let rep_q = restrict_rep(&field.rep, flow.xi + 1)?;
    let mut dtr = vec![crate::linalg::C_ZERO; field.rep.n_spin];
    for (pos, &qi) in trans.q_indices.iter().enumerate() {
        let term = rep_q.gamma[pos].mul_vec(&trans.nabla[qi].mul_vec(&field.psi0.components));
        for (o, t) in dtr.iter_mut().zip(term) {
            *o += t;
        }
    }
    let d_tr_norm = vec_norm(&dtr) / field.psi0.norm();

    let scal_q = trans.scal_q_direct;
    Ok(ThreeDReport {
        kernel_dim: trans.kernel_dim,
        b,
        dirac_residual,
        dirac_solution_dim,
        scal_q,
        scal_q_nonneg: scal_q >= -tol,
        d_tr_norm,
        equivalence_consistent: (trans.kernel_dim > 0) == (dirac_solution_dim > 0),
    })
}

/// Codimension-one hypersurface restriction of a spinor field, with
/// the induced energy-momentum tensor and the parallel-case checks.
/// `h` is the ambient Weingarten tensor in hypersurface convention
/// h(X) = −∇_X ν, row-indexed.
#[derive(Debug, Clone)]
pub struct HypersurfaceReport {
    pub rep_l: CliffordAlgebraRep,
    /// The identified leafwise field: same spinor components, leaf
    /// representation, leaf-direction derivative prescriptions.
    pub induced_field: SpinorField,
    /// Induced derivative matrices per ambient direction.
    pub induced_deriv: Vec<CMat>,
    /// T^Φ over ambient indices, leafwise projection applied.
    pub t_phi: BilinearTensor,
    pub ambient_parallel: bool,
    /// Parallel case: max_{X,Y ∈ L} |T^Φ(X,Y) + ½g(h(X),Y)|.
    pub weingarten_defect: Option<f64>,
    /// Parallel case with an independently computed Lie derivative:
    /// max_{X,Y ∈ L} |T^Φ(X,Y) − ¼(L_ν g)(X,Y)|.
    pub lie_defect: Option<f64>,
    /// (T^Φ(ν, ·)|_L ≈ 0) ⇔ (h(ν) ≈ 0), the Riemannian criterion.
    pub riemannian_iff_consistent: bool,
}

pub fn hypersurface_restrict(
    field: &SpinorField,
    h: &BilinearTensor,
    nu_index: usize,
    lie_metric: Option<&BilinearTensor>,
) -> Result<HypersurfaceReport> {
    let n = field.rep.n;
    if nu_index < 1 || nu_index > n {
        return Err(SpinError::IndexOutOfRange { index: nu_index, n });
    }
    let nu = nu_index - 1;
    let rep = &field.rep;
    let rep_l = restrict_rep(rep, nu_index)?;
    let l_indices: Vec<usize> = (0..n).filter(|&i| i != nu).collect();

    // Gauss formula: ∇^L_X = ∇^M_X − ½ h(X)·ν·
    let mut induced = Vec::with_capacity(n);
    for i in 0..n {
        let h_action = rep.vector_action(&h.row(i))?;
        induced.push(field.deriv[i].sub(&h_action.mul(&rep.gamma[nu]).scale(c(0.5, 0.0))));
    }

    // Leafwise Clifford action: e_i ·_L matches γ_ν γ_i.
    let l_pos = |i: usize| l_indices.iter().position(|&x| x == i);
    let norm_sq = field.psi0.norm_sq();
    if norm_sq == 0.0 {
        return Err(SpinError::ZeroSpinor);
    }
    let mut t_phi = BilinearTensor::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = 0.0;
            if let Some(pi) = l_pos(i) {
                let v = crate::linalg::vec_inner(
                    &rep_l.gamma[pi].mul_vec(&induced[j].mul_vec(&field.psi0.components)),
                    &field.psi0.components,
                )
                .re;
                acc += 0.5 * v;
            }
            if let Some(pj) = l_pos(j) {
                let v = crate::linalg::vec_inner(
                    &rep_l.gamma[pj].mul_vec(&induced[i].mul_vec(&field.psi0.components)),
                    &field.psi0.components,
                )
                .re;
                acc += 0.5 * v;
            }
            t_phi.set(i, j, acc / norm_sq);
        }
    }

    let ambient_parallel = field.deriv.iter().all(|m| {
        m.mul_vec(&field.psi0.components)
            .iter()
            .all(|z| z.norm() <= 1e-12)
    });

    let mut weingarten = 0.0f64;
    let mut lie = 0.0f64;
    for &i in &l_indices {
        for &j in &l_indices {
            weingarten = weingarten.max((t_phi.get(i, j) + 0.5 * h.get(i, j)).abs());
            if let Some(lg) = lie_metric {
                lie = lie.max((t_phi.get(i, j) - 0.25 * lg.get(i, j)).abs());
            }
        }
    }

    let t_nu_max = l_indices
        .iter()
        .map(|&i| t_phi.get(nu, i).abs().max(t_phi.get(i, nu).abs()))
        .fold(0.0, f64::max);
    let h_nu_norm = h.row(nu).iter().map(|v| v * v).sum::<f64>().sqrt();
    let riemannian_iff_consistent = (t_nu_max <= 1e-10) == (h_nu_norm <= 1e-10);

    let leaf_deriv: Vec<CMat> = l_indices.iter().map(|&i| induced[i].clone()).collect();
    let norm_sq_psi = field.psi0.norm_sq();
    let leaf_constant_norm = leaf_deriv.iter().all(|m| {
        crate::linalg::vec_inner(&m.mul_vec(&field.psi0.components), &field.psi0.components)
            .re
            .abs()
            <= 1e-12 * norm_sq_psi.max(1.0)
    });
    let induced_field = SpinorField {
        rep: rep_l.clone(),
        psi0: field.psi0.clone(),
        deriv: leaf_deriv,
        source: crate::spinor_field::DerivSource::Prescribed,
        constant_norm: leaf_constant_norm,
    };

    Ok(HypersurfaceReport {
        rep_l,
        induced_field,
        induced_deriv: induced,
        t_phi,
        ambient_parallel,
        weingarten_defect: ambient_parallel.then_some(weingarten),
        lie_defect: (ambient_parallel && lie_metric.is_some()).then_some(lie),
        riemannian_iff_consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{build_rep, CliffordElement, Spinor};
    use crate::frame::{levi_civita, nil3_entries, sol3_entries, su2_entries, validate_frame};
    use crate::linalg::{C_ONE, C_ZERO};
    use crate::spinor_field::{make_field, DerivSpec};

    fn setup(
        entries: &[crate::frame::StructureEntry],
    ) -> (FrameManifold, LeviCivitaConnection, SpinorField) {
        let m = validate_frame(3, entries).unwrap();
        let conn = levi_civita(&m);
        let rep = build_rep(3).unwrap();
        let field = make_field(
            &rep,
            Spinor::new(vec![C_ONE, C_ZERO]),
            DerivSpec::SpinConnection(&conn),
        )
        .unwrap();
        (m, conn, field)
    }

    #[test]
    fn nil3_flow_structure() {
        let tau = 1.5;
        let (m, conn, _) = setup(&nil3_entries(tau));
        let flow = flow_structure(&m, &conn, 3).unwrap();
        assert!(flow.riemannian && flow.minimal);
        assert!((flow.h.get(0, 1) + tau).abs() < 1e-14); // h(e_1) = −τe_2
        assert!((flow.h.get(1, 0) - tau).abs() < 1e-14); // h(e_2) = τe_1
        assert!(flow.h.row(2).iter().all(|v| v.abs() < 1e-14));
        assert!((flow.b.unwrap() + tau).abs() < 1e-14);
        assert!(flow.xi_column_defect < 1e-14);
    }

    #[test]
    fn sol3_flow_structure() {
        let (m, conn, _) = setup(&sol3_entries());
        let flow = flow_structure(&m, &conn, 3).unwrap();
        assert!(!flow.riemannian && flow.minimal);
        assert!((flow.h.get(0, 0) - 1.0).abs() < 1e-14);
        assert!((flow.h.get(1, 1) + 1.0).abs() < 1e-14);
        assert!(flow_structure(&m, &conn, 4).is_err());
    }

    #[test]
    fn oneill_identities() {
        let (m, conn, _) = setup(&nil3_entries(1.0));
        let flow = flow_structure(&m, &conn, 3).unwrap();
        let rep = oneill(&m, &flow).unwrap();
        assert!((rep.a_xi_component.get(0, 1) - 1.0).abs() < 1e-14);
        assert!(rep.bracket_defect < 1e-14);

        let (ms, conns, _) = setup(&sol3_entries());
        let flows = flow_structure(&ms, &conns, 3).unwrap();
        assert!(matches!(
            oneill(&ms, &flows),
            Err(SpinError::NonRiemannianFlow(_))
        ));

        // su2: g(A_{e_1}e_2, ξ) = ½ c_{12}^3 = 1
        let (msu, connsu, _) = setup(&su2_entries(1.0));
        let flowsu = flow_structure(&msu, &connsu, 3).unwrap();
        let repsu = oneill(&msu, &flowsu).unwrap();
        assert!((repsu.a_xi_component.get(0, 1) - 1.0).abs() < 1e-14);
        assert!(repsu.bracket_defect < 1e-14);

        // h = 0: A vanishes
        let (mt, connt, _) = setup(&[]);
        let flowt = flow_structure(&mt, &connt, 3).unwrap();
        let rept = oneill(&mt, &flowt).unwrap();
        assert!(rept.a_xi_component.max_abs() < 1e-14);
    }

    #[test]
    fn nil3_transversal_connection() {
        let tau = 1.0;
        let (m, conn, field) = setup(&nil3_entries(tau));
        let flow = flow_structure(&m, &conn, 3).unwrap();
        let trans =
            transversal_connection(&field, &flow, &m, &conn, -2.0 * tau * tau, 1e-12).unwrap();
        // every derivative matrix vanishes, so the kernel is everything
        for nb in &trans.nabla {
            assert!(nb.max_abs() < 1e-13);
        }
        assert_eq!(trans.kernel_dim, 2);
        assert!(trans.scal_q_direct.abs() < 1e-12);
        assert!(trans.scal_q_formula.abs() < 1e-12);
        assert!(trans.r_xi_defect < 1e-12);
        assert!((trans.h_q_norm_sq - 2.0 * tau * tau).abs() < 1e-13);
    }

    #[test]
    fn su2_transversal_connection() {
        let (m, conn, field) = setup(&su2_entries(1.0));
        let flow = flow_structure(&m, &conn, 3).unwrap();
        let trans = transversal_connection(&field, &flow, &m, &conn, 6.0, 1e-12).unwrap();
        assert_eq!(trans.kernel_dim, 0);
        assert!((trans.scal_q_direct - 8.0).abs() < 1e-12);
        assert!((trans.scal_q_formula - 8.0).abs() < 1e-12);
        assert!(trans.r_xi_defect < 1e-12);
        // transversal Christoffel along the flow: ∇_ξ e_1 = π[ξ, e_1] = 2e_2
        assert!((trans.gamma_q[2].get(0, 1) - 2.0).abs() < 1e-14);
        assert!((trans.gamma_q[2].get(1, 0) + 2.0).abs() < 1e-14);
        for d in 0..2 {
            assert!(trans.gamma_q[d].max_abs() < 1e-14);
        }
        // stored curvature reproduces Ric^∇ = 4·Id on the normal plane
        assert!((trans.riemann_q(0, 1, 1, 0) - 4.0).abs() < 1e-12);
        assert!((trans.ric_q.get(0, 0) - 4.0).abs() < 1e-12);
        assert!((trans.ric_q.get(1, 1) - 4.0).abs() < 1e-12);
    }

    #[test]
    fn transversal_rejects_non_riemannian() {
        let (m, conn, field) = setup(&sol3_entries());
        let flow = flow_structure(&m, &conn, 3).unwrap();
        assert!(matches!(
            transversal_connection(&field, &flow, &m, &conn, -2.0, 1e-12),
            Err(SpinError::NonRiemannianFlow(_))
        ));
    }

    #[test]
    fn parallel_field_keeps_ambient_derivatives() {
        let (m, conn, _) = setup(&[]);
        let rep = build_rep(3).unwrap();
        let field = make_field(
            &rep,
            Spinor::new(vec![C_ONE, C_ZERO]),
            DerivSpec::Elements(&[
                CliffordElement::zero(3),
                CliffordElement::zero(3),
                CliffordElement::zero(3),
            ]),
        )
        .unwrap();
        let flow = flow_structure(&m, &conn, 3).unwrap();
        let trans = transversal_connection(&field, &flow, &m, &conn, 0.0, 1e-12).unwrap();
        for (nb, mb) in trans.nabla.iter().zip(&field.deriv) {
            assert!(nb.sub(mb).max_abs() < 1e-15);
        }
        assert_eq!(trans.kernel_dim, 2);
    }

    #[test]
    fn nil3_flow_emt() {
        let tau = 1.25;
        let (m, conn, field) = setup(&nil3_entries(tau));
        let flow = flow_structure(&m, &conn, 3).unwrap();
        let report = flow_emt(&field, &flow).unwrap();
        assert!((report.q.get(0, 1) - tau / 2.0).abs() < 1e-13);
        assert!((report.q.get(0, 1) + 0.5 * flow.h.get(0, 1)).abs() < 1e-13);
        assert!(report.q_parallel_residual < 1e-13);
        assert_eq!(report.q_oneill_defect.map(|d| d < 1e-12), Some(true));
        assert_eq!(report.t_lie_defect.map(|d| d < 1e-12), Some(true));
        // nil3's ∇_ξΨ ≠ ½ξκΨ, so the κ-identity is not asserted...
        assert!(report.xi_parallel_residual > 0.1);
        assert!(report.t_xi_defect.is_none());
    }

    #[test]
    fn sol3_flow_emt() {
        let (m, conn, field) = setup(&sol3_entries());
        let flow = flow_structure(&m, &conn, 3).unwrap();
        let report = flow_emt(&field, &flow).unwrap();
        assert!((report.t.get(0, 0) + 0.5).abs() < 1e-13);
        assert!((report.t.get(1, 1) - 0.5).abs() < 1e-13);
        assert!(report.q.get(0, 1).abs() < 1e-13);
        assert!(report.q_parallel_residual < 1e-13);
        assert!(report.xi_parallel_residual < 1e-13);
        assert_eq!(report.t_lie_defect.map(|d| d < 1e-12), Some(true));
        assert_eq!(report.q_bracket_defect.map(|d| d < 1e-12), Some(true));
        assert_eq!(report.t_xi_defect.map(|d| d < 1e-12), Some(true));
        // non-Riemannian: no O'Neill identity
        assert!(report.q_oneill_defect.is_none());
    }

    #[test]
    fn parallel_flow_emt_vanishes() {
        let (m, conn, _) = setup(&[]);
        let rep = build_rep(3).unwrap();
        let field = make_field(
            &rep,
            Spinor::new(vec![C_ONE, C_ZERO]),
            DerivSpec::Elements(&[
                CliffordElement::zero(3),
                CliffordElement::zero(3),
                CliffordElement::zero(3),
            ]),
        )
        .unwrap();
        let flow = flow_structure(&m, &conn, 3).unwrap();
        let report = flow_emt(&field, &flow).unwrap();
        assert!(report.e.max_abs() < 1e-15);
        assert!(report.t_lie_defect.unwrap() < 1e-15);
    }

    #[test]
    fn three_d_reports() {
        // nil3: kernel dimension 2, DΨ = (b/2)Ψ with b = −τ
        let tau = 1.0;
        let (m, conn, field) = setup(&nil3_entries(tau));
        let flow = flow_structure(&m, &conn, 3).unwrap();
        let trans =
            transversal_connection(&field, &flow, &m, &conn, -2.0 * tau * tau, 1e-12).unwrap();
        let report = three_d_equivalence(&field, &flow, &trans, 1e-9).unwrap();
        assert_eq!(report.kernel_dim, 2);
        assert!((report.b + tau).abs() < 1e-14);
        assert!(report.dirac_residual < 1e-13);
        assert_eq!(report.dirac_solution_dim, 2);
        assert!(report.scal_q_nonneg);
        assert!(report.d_tr_norm < 1e-13);
        assert!(report.equivalence_consistent);

        // flat torus: b = 0, D = 0, kernel dimension 2
        let (mt, connt, fieldt) = setup(&[]);
        let flowt = flow_structure(&mt, &connt, 3).unwrap();
        let transt = transversal_connection(&fieldt, &flowt, &mt, &connt, 0.0, 1e-12).unwrap();
        let rt = three_d_equivalence(&fieldt, &flowt, &transt, 1e-9).unwrap();
        assert_eq!(rt.kernel_dim, 2);
        assert!(rt.b.abs() < 1e-14);
        assert!(rt.dirac_residual < 1e-14);
        assert!(rt.equivalence_consistent);

        // su2: empty kernel and a visibly nonzero Dirac residual
        let (ms, conns, fields) = setup(&su2_entries(1.0));
        let flows = flow_structure(&ms, &conns, 3).unwrap();
        let transs = transversal_connection(&fields, &flows, &ms, &conns, 6.0, 1e-12).unwrap();
        let rs = three_d_equivalence(&fields, &flows, &transs, 1e-9).unwrap();
        assert_eq!(rs.kernel_dim, 0);
        assert_eq!(rs.dirac_solution_dim, 0);
        assert!((rs.b + 1.0).abs() < 1e-14);
        assert!((rs.dirac_residual - 1.0).abs() < 1e-12);
        assert!(rs.equivalence_consistent);
    }

    #[test]
    fn hypersurface_flat_and_prescribed() {
        // flat torus, parallel field, ν = e_3: everything vanishes
        let rep = build_rep(3).unwrap();
        let parallel = make_field(
            &rep,
            Spinor::new(vec![C_ONE, C_ZERO]),
            DerivSpec::Elements(&[
                CliffordElement::zero(3),
                CliffordElement::zero(3),
                CliffordElement::zero(3),
            ]),
        )
        .unwrap();
        let h0 = BilinearTensor::zeros(3);
        let report = hypersurface_restrict(&parallel, &h0, 3, None).unwrap();
        assert!(report.t_phi.max_abs() < 1e-14);
        assert!(report.ambient_parallel);
        assert!(report.weingarten_defect.unwrap() < 1e-14);
        assert!(report.riemannian_iff_consistent);

        // prescribed h = diag(a, a, 0): T^Φ = −½·diag(a, a)
        let a = 0.8;
        let h =
            BilinearTensor::from_rows(&[vec![a, 0.0, 0.0], vec![0.0, a, 0.0], vec![0.0, 0.0, 0.0]]);
        let report = hypersurface_restrict(&parallel, &h, 3, None).unwrap();
        assert!((report.t_phi.get(0, 0) + 0.5 * a).abs() < 1e-13);
        assert!((report.t_phi.get(1, 1) + 0.5 * a).abs() < 1e-13);
        assert!(report.t_phi.get(0, 1).abs() < 1e-13);
        assert!(report.weingarten_defect.unwrap() < 1e-13);
        // ¼(L_ν g) = −½ h for the hypersurface sign
        let lie = h.scale(-2.0);
        let report = hypersurface_restrict(&parallel, &h, 3, Some(&lie)).unwrap();
        assert!(report.lie_defect.unwrap() < 1e-13);
        assert!(report.riemannian_iff_consistent);

        // h(ν) ≠ 0 must produce T^Φ(ν,·) ≠ 0 consistently
        let mut hnu = h.clone();
        hnu.set(2, 0, 0.7);
        let report = hypersurface_restrict(&parallel, &hnu, 3, None).unwrap();
        assert!(report.riemannian_iff_consistent);
        let t_nu: f64 = report.t_phi.get(2, 0).abs();
        assert!((t_nu - 0.25 * 0.7).abs() < 1e-12);
    }

    #[test]
    fn induced_field_reproduces_leafwise_tensor() {
        // The returned leaf field computes the same energy-momentum
        // tensor through the generic machinery.
        let rep = build_rep(3).unwrap();
        let parallel = make_field(
            &rep,
            Spinor::new(vec![C_ONE, C_ZERO]),
            DerivSpec::Elements(&[
                CliffordElement::zero(3),
                CliffordElement::zero(3),
                CliffordElement::zero(3),
            ]),
        )
        .unwrap();
        let a = 1.3;
        let h = BilinearTensor::from_rows(&[
            vec![a, 0.0, 0.0],
            vec![0.0, -0.4, 0.0],
            vec![0.0, 0.0, 0.0],
        ]);
        let report = hypersurface_restrict(&parallel, &h, 3, None).unwrap();
        let leaf = crate::emt::emt_tensors(&report.induced_field).unwrap();
        assert!((leaf.t.get(0, 0) - report.t_phi.get(0, 0)).abs() < 1e-13);
        assert!((leaf.t.get(1, 1) - report.t_phi.get(1, 1)).abs() < 1e-13);
        assert!((leaf.t.get(0, 0) + 0.5 * a).abs() < 1e-13);
        assert!(report.induced_field.constant_norm);
    }
}
